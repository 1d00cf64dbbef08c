//! Named small patterns, induced-subgraph search and chordality.
//!
//! Every search returns a [`Witness`] mapping pattern vertices to host vertices
//! so callers can re-check the claim with [`Witness::verify`].

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternKind {
    /// Two disjoint edges.
    TwoK2,
    /// Path on four vertices.
    P4,
    /// Claw: a center with three pairwise non-adjacent leaves.
    K13,
    /// Triangle with pendants on two distinct corners.
    Bull,
    /// Triangle with one pendant per corner.
    Net,
    /// Triangle plus an outer independent triple, each outer vertex seeing two corners.
    Sun3,
    /// Chordless cycle on `k >= 4` vertices.
    Cycle(usize),
}

impl PatternKind {
    pub const C4: PatternKind = PatternKind::Cycle(4);

    pub const NAMED: [PatternKind; 7] = [
        PatternKind::TwoK2,
        PatternKind::C4,
        PatternKind::P4,
        PatternKind::K13,
        PatternKind::Bull,
        PatternKind::Net,
        PatternKind::Sun3,
    ];

    pub fn name(&self) -> String {
        match self {
            PatternKind::TwoK2 => "2K2".into(),
            PatternKind::P4 => "P4".into(),
            PatternKind::K13 => "K13".into(),
            PatternKind::Bull => "bull".into(),
            PatternKind::Net => "net".into(),
            PatternKind::Sun3 => "sun3".into(),
            PatternKind::Cycle(k) => format!("C{k}"),
        }
    }

    pub fn from_name(name: &str) -> Option<PatternKind> {
        Some(match name {
            "2K2" => PatternKind::TwoK2,
            "P4" => PatternKind::P4,
            "K13" => PatternKind::K13,
            "bull" => PatternKind::Bull,
            "net" => PatternKind::Net,
            "sun3" => PatternKind::Sun3,
            _ => {
                let k: usize = name.strip_prefix('C')?.parse().ok()?;
                if k < 4 {
                    return None;
                }
                PatternKind::Cycle(k)
            }
        })
    }
}

/// A pattern graph with a role label per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    pub kind: PatternKind,
    pub graph: Graph,
    pub roles: Vec<&'static str>,
}

impl Pattern {
    pub fn new(kind: PatternKind) -> Pattern {
        let (n, edges, roles): (usize, Vec<(usize, usize)>, Vec<&'static str>) = match kind {
            PatternKind::TwoK2 => (4, vec![(0, 1), (2, 3)], vec!["end"; 4]),
            PatternKind::P4 => (
                4,
                vec![(0, 1), (1, 2), (2, 3)],
                vec!["end", "inner", "inner", "end"],
            ),
            PatternKind::K13 => (
                4,
                vec![(0, 1), (0, 2), (0, 3)],
                vec!["center", "leaf", "leaf", "leaf"],
            ),
            // 0 is the degree-2 corner, 3 hangs off 1 and 4 hangs off 2
            PatternKind::Bull => (
                5,
                vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)],
                vec!["apex", "corner", "corner", "leaf", "leaf"],
            ),
            PatternKind::Net => (
                6,
                vec![(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)],
                vec!["corner", "corner", "corner", "pendant", "pendant", "pendant"],
            ),
            PatternKind::Sun3 => (
                6,
                vec![(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)],
                vec!["corner", "corner", "corner", "outer", "outer", "outer"],
            ),
            PatternKind::Cycle(k) => {
                assert!(k >= 4, "chordless cycles need at least four vertices");
                (k, (0..k).map(|i| (i, (i + 1) % k)).collect(), vec!["cycle"; k])
            }
        };
        Pattern {
            kind,
            graph: Graph::new(n, &edges).expect("pattern edges are well formed"),
            roles,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }
}

/// An occurrence of a pattern: `map[k]` is the host vertex playing pattern vertex `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Witness {
    pub kind: PatternKind,
    pub map: Vec<usize>,
}

impl Witness {
    /// True iff the mapped vertices are distinct, in range, and induce exactly the pattern.
    pub fn verify(&self, g: &Graph) -> bool {
        let p = Pattern::new(self.kind);
        let k = p.vertex_count();
        if self.map.len() != k || self.map.iter().any(|&v| v >= g.vertex_count()) {
            return false;
        }
        for a in 0..k {
            for b in a + 1..k {
                if self.map[a] == self.map[b] {
                    return false;
                }
                if p.graph.has_edge(a, b) != g.has_edge(self.map[a], self.map[b]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn vertices(&self) -> &[usize] {
        &self.map
    }
}

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Pattern,
    allowed: Option<&'a [VertexSet]>,
    order: Vec<usize>,
    // for each position in `order`: earlier positions that are pattern-adjacent / not
    earlier_adj: Vec<Vec<usize>>,
    earlier_non: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: VertexSet,
}

impl<'a> Matcher<'a> {
    fn new(host: &'a Graph, pattern: &'a Pattern, allowed: Option<&'a [VertexSet]>) -> Self {
        let pg = &pattern.graph;
        let k = pg.vertex_count();
        // BFS order through each pattern component keeps candidate sets narrow
        let mut order = Vec::with_capacity(k);
        let mut placed = VertexSet::new(k);
        while order.len() < k {
            let start = (0..k)
                .filter(|&v| !placed.contains(v))
                .max_by_key(|&v| (pg.degree(v), core::cmp::Reverse(v)))
                .unwrap();
            let mut head = order.len();
            order.push(start);
            placed.insert(start);
            while head < order.len() {
                let u = order[head];
                head += 1;
                for &v in pg.neighbor_list(u) {
                    if placed.insert(v) {
                        order.push(v);
                    }
                }
            }
        }
        let mut earlier_adj = Vec::with_capacity(k);
        let mut earlier_non = Vec::with_capacity(k);
        for (i, &u) in order.iter().enumerate() {
            let (adj, non): (Vec<usize>, Vec<usize>) = order[..i].iter().partition(|&&v| pg.has_edge(u, v));
            earlier_adj.push(adj);
            earlier_non.push(non);
        }
        Matcher {
            host,
            pattern,
            allowed,
            order,
            earlier_adj,
            earlier_non,
            map: vec![usize::MAX; k],
            used: VertexSet::new(host.vertex_count()),
        }
    }

    fn candidates(&self, depth: usize) -> VertexSet {
        let u = self.order[depth];
        let mut cand = match self.allowed {
            Some(a) => a[u].clone(),
            None => self.host.vertices(),
        };
        cand.difference_with(&self.used);
        for &v in &self.earlier_adj[depth] {
            cand.intersect_with(self.host.nbrs(self.map[v]));
        }
        for &v in &self.earlier_non[depth] {
            cand.difference_with(self.host.nbrs(self.map[v]));
        }
        cand
    }

    fn search(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let u = self.order[depth];
        let need = self.pattern.graph.degree(u);
        for c in self.candidates(depth).iter() {
            if self.host.degree(c) < need {
                continue;
            }
            self.map[u] = c;
            self.used.insert(c);
            if self.search(depth + 1) {
                return true;
            }
            self.used.remove(c);
        }
        self.map[u] = usize::MAX;
        false
    }
}

/// Searches `g` for an induced copy of `p`.
pub fn find_induced(g: &Graph, p: &Pattern) -> Option<Witness> {
    run_matcher(g, p, None)
}

/// As [`find_induced`], but pattern vertex `k` may only map into `allowed[k]`.
pub fn find_induced_constrained(g: &Graph, p: &Pattern, allowed: &[VertexSet]) -> Option<Witness> {
    assert_eq!(allowed.len(), p.vertex_count());
    run_matcher(g, p, Some(allowed))
}

fn run_matcher(g: &Graph, p: &Pattern, allowed: Option<&[VertexSet]>) -> Option<Witness> {
    if p.vertex_count() > g.vertex_count() {
        return None;
    }
    let mut m = Matcher::new(g, p, allowed);
    if m.search(0) {
        let w = Witness {
            kind: p.kind,
            map: m.map,
        };
        debug_assert!(w.verify(g));
        Some(w)
    } else {
        None
    }
}

/// Maximum cardinality search. Returns the visit order; its reverse is a
/// perfect elimination ordering whenever the graph is chordal.
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by_key(|&v| (weight[v], core::cmp::Reverse(v)))
            .unwrap();
        done[v] = true;
        visit.push(v);
        for &u in g.neighbor_list(v) {
            if !done[u] {
                weight[u] += 1;
            }
        }
    }
    visit
}

/// Cycle through `v`, `a`, `b` closed by a shortest `a`–`b` path that avoids the rest of `N[v]`.
fn cycle_through(g: &Graph, v: usize, a: usize, b: usize) -> Option<Witness> {
    let mut allowed = g.closed_nbrs(v).complement();
    allowed.insert(a);
    allowed.insert(b);
    let path = g.shortest_path_within(a, b, &allowed)?;
    let mut map = vec![v];
    map.extend(path);
    Some(Witness {
        kind: PatternKind::Cycle(map.len()),
        map,
    })
}

/// `Ok(())` if `g` is chordal, otherwise an induced chordless cycle of length at least four.
pub fn check_chordal(g: &Graph) -> Result<(), Witness> {
    let n = g.vertex_count();
    let visit = maximum_cardinality_search(g);
    let mut pos = vec![0usize; n];
    // elimination position: the last vertex visited is eliminated first
    for (k, &v) in visit.iter().rev().enumerate() {
        pos[v] = k;
    }
    for v in 0..n {
        let later: Vec<usize> = g.neighbor_list(v).iter().copied().filter(|&u| pos[u] > pos[v]).collect();
        let Some(&follower) = later.iter().min_by_key(|&&u| pos[u]) else {
            continue;
        };
        if let Some(&bad) = later.iter().find(|&&u| u != follower && !g.has_edge(u, follower)) {
            if let Some(w) = cycle_through(g, v, follower, bad) {
                debug_assert!(w.verify(g));
                return Err(w);
            }
            return Err(exhaustive_chordless_cycle(g).expect("elimination ordering failed, so a chordless cycle exists"));
        }
    }
    Ok(())
}

fn exhaustive_chordless_cycle(g: &Graph) -> Option<Witness> {
    for v in 0..g.vertex_count() {
        let nb = g.neighbor_list(v);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if !g.has_edge(a, b) {
                    if let Some(w) = cycle_through(g, v, a, b) {
                        return Some(w);
                    }
                }
            }
        }
    }
    None
}

pub fn is_chordal(g: &Graph) -> bool {
    check_chordal(g).is_ok()
}

/// Chordal and free of induced nets and 3-suns. The failure witness is a
/// chordless cycle, a net or a sun, checked in that order.
pub fn check_semi_unit_interval(g: &Graph) -> Result<(), Witness> {
    check_chordal(g)?;
    for kind in [PatternKind::Net, PatternKind::Sun3] {
        if let Some(w) = find_induced(g, &Pattern::new(kind)) {
            return Err(w);
        }
    }
    Ok(())
}

pub fn is_semi_unit_interval(g: &Graph) -> bool {
    check_semi_unit_interval(g).is_ok()
}

/// Induced bull whose degree-2 corner lies in `in_t` and whose other four
/// vertices lie outside it.
pub fn find_forbidden_bull(g: &Graph, in_t: &VertexSet) -> Option<Witness> {
    let out_t = in_t.complement();
    let allowed = [in_t.clone(), out_t.clone(), out_t.clone(), out_t.clone(), out_t];
    find_induced_constrained(g, &Pattern::new(PatternKind::Bull), &allowed)
}

/// Induced claw with either all four vertices outside `in_t`, or exactly one
/// leaf inside `in_t` and the rest outside.
pub fn find_forbidden_claw(g: &Graph, in_t: &VertexSet) -> Option<Witness> {
    let out_t = in_t.complement();
    let claw = Pattern::new(PatternKind::K13);
    let all_out = [out_t.clone(), out_t.clone(), out_t.clone(), out_t.clone()];
    find_induced_constrained(g, &claw, &all_out).or_else(|| {
        let one_leaf_in = [out_t.clone(), in_t.clone(), out_t.clone(), out_t];
        find_induced_constrained(g, &claw, &one_leaf_in)
    })
}

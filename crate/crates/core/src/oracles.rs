//! Slow, obviously-correct reference implementations.
//!
//! Nothing here calls into the fast paths beyond reading adjacency from a
//! [`Graph`]; each oracle works on its own adjacency matrix.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::patterns::{Pattern, PatternKind, Witness};
use crate::twosat::{Assignment, TwoSatInstance};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("input of size {size} exceeds the oracle cap of {cap}")]
    TooLarge { size: usize, cap: usize },
}

pub const DT_CAP: usize = 12;
pub const CLIQUE_COVER_CAP: usize = 10;
pub const TWOSAT_CAP: usize = 20;
pub const INDUCED_CAP: usize = 10;

fn cap(size: usize, cap: usize) -> Result<(), OracleError> {
    if size > cap {
        Err(OracleError::TooLarge { size, cap })
    } else {
        Ok(())
    }
}

type Matrix = Vec<Vec<bool>>;

fn matrix(g: &Graph) -> Matrix {
    let n = g.vertex_count();
    (0..n).map(|i| (0..n).map(|j| g.has_edge(i, j)).collect()).collect()
}

fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

fn induces_cycle(a: &Matrix, vs: &[usize]) -> bool {
    if vs.len() < 4 {
        return false;
    }
    let deg = |v: usize| vs.iter().filter(|&&u| a[v][u]).count();
    if vs.iter().any(|&v| deg(v) != 2) {
        return false;
    }
    // 2-regular and connected means a single cycle
    let mut seen = vec![vs[0]];
    let mut k = 0;
    while k < seen.len() {
        let v = seen[k];
        for &u in vs {
            if a[v][u] && !seen.contains(&u) {
                seen.push(u);
            }
        }
        k += 1;
    }
    seen.len() == vs.len()
}

fn has_induced(a: &Matrix, kind: PatternKind) -> bool {
    let p = Pattern::new(kind);
    let k = p.vertex_count();
    let n = a.len();
    if k > n {
        return false;
    }
    let pm = matrix(&p.graph);
    let mut map = vec![0usize; k];
    let mut used = vec![false; n];
    fn extend(pos: usize, a: &Matrix, pm: &Matrix, map: &mut [usize], used: &mut [bool]) -> bool {
        if pos == map.len() {
            return true;
        }
        for v in 0..a.len() {
            if used[v] || (0..pos).any(|q| pm[pos][q] != a[v][map[q]]) {
                continue;
            }
            used[v] = true;
            map[pos] = v;
            if extend(pos + 1, a, pm, map, used) {
                return true;
            }
            used[v] = false;
        }
        false
    }
    extend(0, a, &pm, &mut map, &mut used)
}

/// Unit interval by forbidden subgraphs: no chordless cycle of length ≥ 4,
/// no claw, net or 3-sun.
fn brute_unit_interval(a: &Matrix) -> bool {
    let n = a.len();
    for mask in 0u32..1 << n {
        if mask.count_ones() >= 4 && induces_cycle(a, &members(mask, n)) {
            return false;
        }
    }
    [PatternKind::K13, PatternKind::Net, PatternKind::Sun3]
        .into_iter()
        .all(|k| !has_induced(a, k))
}

fn sub_matrix(a: &Matrix, vs: &[usize]) -> Matrix {
    vs.iter().map(|&i| vs.iter().map(|&j| a[i][j]).collect()).collect()
}

/// Distance from the set `seed` to every vertex; `usize::MAX` if unreachable.
fn set_distances(a: &Matrix, seed: &[usize]) -> Vec<usize> {
    let n = a.len();
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for &s in seed {
        dist[s] = 0;
        queue.push_back(s);
    }
    while let Some(u) = queue.pop_front() {
        for v in 0..n {
            if a[u][v] && dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

fn nbhd_subset(a: &Matrix, i: usize, j: usize, skip: Option<usize>, within: &dyn Fn(usize) -> bool) -> bool {
    (0..a.len()).all(|k| !(a[i][k] && within(k) && Some(k) != skip) || a[j][k])
}

/// Number of layers minus one if `core` meets the three structural
/// conditions, otherwise `None`.
fn core_layers(a: &Matrix, core: &[usize]) -> Option<usize> {
    let n = a.len();
    let all = |_: usize| true;
    for (x, &i) in core.iter().enumerate() {
        for &j in &core[x + 1..] {
            if !nbhd_subset(a, i, j, Some(j), &all) && !nbhd_subset(a, j, i, Some(i), &all) {
                return None;
            }
        }
    }
    let dist = set_distances(a, core);
    if dist.contains(&usize::MAX) {
        return None;
    }
    let m = *dist.iter().max().unwrap();
    for l in 1..=m {
        let layer: Vec<usize> = (0..n).filter(|&v| dist[v] == l).collect();
        let below = |k: usize| dist[k] == l - 1;
        let above = |k: usize| dist[k] == l + 1;
        for (x, &i) in layer.iter().enumerate() {
            for &j in &layer[x + 1..] {
                if !a[i][j] {
                    return None;
                }
                // i R_l j: N(j) below ⊆ N(i) below and N(i) above ⊆ N(j) above
                let rel = |i: usize, j: usize| nbhd_subset(a, j, i, None, &below) && nbhd_subset(a, i, j, None, &above);
                if !rel(i, j) && !rel(j, i) {
                    return None;
                }
            }
        }
    }
    Some(m)
}

/// Every `(C₀, m)` on a matrix whose core meets the conditions.
fn all_cores(a: &Matrix) -> Vec<(Vec<usize>, usize)> {
    let n = a.len();
    let mut out = Vec::new();
    for mask in 1u32..1 << n {
        let core = members(mask, n);
        if let Some(m) = core_layers(a, &core) {
            out.push((core, m));
        }
    }
    out
}

/// Outcome of the exhaustive check on the graph with isolates removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BruteDt {
    /// Unit interval: adjacency by weight differences alone.
    UnitInterval,
    /// A core (original labels) whose layers meet the conditions, on the one
    /// component that is not unit interval.
    Core(VertexSet),
    No,
}

/// Exhaustive check. Components other than the one that is not unit
/// interval must themselves be unit interval.
pub fn brute_dt(g: &Graph) -> Result<BruteDt, OracleError> {
    let n = g.vertex_count();
    cap(n, DT_CAP)?;
    let a = matrix(g);
    let live: Vec<usize> = (0..n).filter(|&v| a[v].iter().any(|&b| b)).collect();
    let h = sub_matrix(&a, &live);
    if brute_unit_interval(&h) {
        return Ok(BruteDt::UnitInterval);
    }
    // components of the non-isolated part
    let mut comp = vec![usize::MAX; live.len()];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for s in 0..live.len() {
        if comp[s] != usize::MAX {
            continue;
        }
        let d = set_distances(&h, &[s]);
        let c: Vec<usize> = (0..live.len()).filter(|&v| d[v] != usize::MAX).collect();
        for &v in &c {
            comp[v] = comps.len();
        }
        comps.push(c);
    }
    let bad: Vec<&Vec<usize>> = comps.iter().filter(|c| !brute_unit_interval(&sub_matrix(&h, c))).collect();
    if bad.len() != 1 {
        return Ok(BruteDt::No);
    }
    let c = bad[0];
    let sub = sub_matrix(&h, c);
    Ok(match all_cores(&sub).into_iter().next() {
        Some((core, _)) => BruteDt::Core(VertexSet::from_iter_in(n, core.iter().map(|&k| live[c[k]]))),
        None => BruteDt::No,
    })
}

pub fn brute_force_is_dt(g: &Graph) -> Result<bool, OracleError> {
    Ok(brute_dt(g)? != BruteDt::No)
}

/// Smallest `m` over all cores meeting the conditions on a connected graph,
/// `None` when no core works.
pub fn brute_min_layers(g: &Graph) -> Result<Option<usize>, OracleError> {
    cap(g.vertex_count(), DT_CAP)?;
    Ok(all_cores(&matrix(g)).into_iter().map(|(_, m)| m).min())
}

/// Minimum number of cliques covering every edge.
pub fn brute_min_edge_clique_cover(g: &Graph) -> Result<usize, OracleError> {
    let n = g.vertex_count();
    cap(n, CLIQUE_COVER_CAP)?;
    let a = matrix(g);
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| a[i][j]).collect();
    if edges.is_empty() {
        return Ok(0);
    }
    let is_clique = |vs: &[usize]| vs.iter().enumerate().all(|(x, &i)| vs[x + 1..].iter().all(|&j| a[i][j]));
    let mut cliques: Vec<u64> = Vec::new();
    for mask in 1u32..1 << n {
        let vs = members(mask, n);
        if vs.len() < 2 || !is_clique(&vs) {
            continue;
        }
        let maximal = (0..n).all(|v| mask >> v & 1 == 1 || !vs.iter().all(|&u| a[u][v]));
        if maximal {
            let covered = edges
                .iter()
                .enumerate()
                .filter(|(_, &(i, j))| mask >> i & 1 == 1 && mask >> j & 1 == 1)
                .fold(0u64, |acc, (k, _)| acc | 1 << k);
            cliques.push(covered);
        }
    }
    let full: u64 = if edges.len() == 64 { u64::MAX } else { (1u64 << edges.len()) - 1 };
    fn cover(cliques: &[u64], covered: u64, full: u64, budget: usize) -> bool {
        if covered == full {
            return true;
        }
        if budget == 0 {
            return false;
        }
        let first = (!covered & full).trailing_zeros();
        cliques
            .iter()
            .filter(|&&c| c >> first & 1 == 1)
            .any(|&c| cover(cliques, covered | c, full, budget - 1))
    }
    Ok((1..=edges.len()).find(|&k| cover(&cliques, 0, full, k)).unwrap())
}

pub fn brute_triangle_count(g: &Graph) -> u64 {
    let a = matrix(g);
    let n = a.len();
    let mut t = 0;
    for i in 0..n {
        for j in i + 1..n {
            if !a[i][j] {
                continue;
            }
            t += (j + 1..n).filter(|&k| a[i][k] && a[j][k]).count() as u64;
        }
    }
    t
}

/// First satisfying assignment in lexicographic order, `false < true`,
/// variable 0 most significant.
pub fn brute_2sat(inst: &TwoSatInstance) -> Result<Option<Assignment>, OracleError> {
    let v = inst.var_count();
    cap(v, TWOSAT_CAP)?;
    for mask in 0u32..1 << v {
        let values: Vec<bool> = (0..v).map(|i| mask >> (v - 1 - i) & 1 == 1).collect();
        let lit = |l: crate::twosat::Literal| values[l.var] == l.positive;
        if inst.clauses().iter().all(|c| lit(c.0) || lit(c.1)) {
            return Ok(Some(Assignment(values)));
        }
    }
    Ok(None)
}

/// Subset enumeration, then every bijection of the subset onto the pattern.
pub fn brute_find_induced(g: &Graph, p: &Pattern) -> Result<Option<Witness>, OracleError> {
    let n = g.vertex_count();
    cap(n, INDUCED_CAP)?;
    let k = p.vertex_count();
    let a = matrix(g);
    let pm = matrix(&p.graph);
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize != k {
            continue;
        }
        let vs = members(mask, n);
        let mut perm: Vec<usize> = (0..k).collect();
        loop {
            let ok = (0..k).all(|x| (0..k).all(|y| x == y || pm[x][y] == a[vs[perm[x]]][vs[perm[y]]]));
            if ok {
                return Ok(Some(Witness { kind: p.kind, map: perm.iter().map(|&x| vs[x]).collect() }));
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
    }
    Ok(None)
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Longest shortest path by Floyd–Warshall, `None` if disconnected.
pub fn brute_diameter(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let inf = usize::MAX / 4;
    let mut d: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 0 } else if g.has_edge(i, j) { 1 } else { inf }).collect())
        .collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    let max = d.iter().flatten().copied().max().unwrap_or(0);
    (max < inf).then_some(max)
}

//! Unit interval recognition by three lexicographic breadth-first sweeps,
//! followed by an explicit weight construction along the final order.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::patterns::{check_chordal, find_induced, Pattern, PatternKind, Witness};
use crate::rational::{int, Rational};
use crate::weights::WeightAssignment;

/// Lexicographic BFS by partition refinement. `priority` lists every vertex
/// once; among vertices with equal labels the one earliest in `priority` is
/// taken next.
fn lex_bfs(g: &Graph, priority: &[usize]) -> Vec<usize> {
    let mut classes: Vec<Vec<usize>> = vec![priority.to_vec()];
    let mut order = Vec::with_capacity(priority.len());
    while let Some(first) = classes.first_mut() {
        let v = first.remove(0);
        if first.is_empty() {
            classes.remove(0);
        }
        order.push(v);
        let nb = g.nbrs(v);
        let mut refined = Vec::with_capacity(classes.len() + 1);
        for class in classes.drain(..) {
            let (hit, miss): (Vec<usize>, Vec<usize>) = class.into_iter().partition(|&u| nb.contains(u));
            if !hit.is_empty() {
                refined.push(hit);
            }
            if !miss.is_empty() {
                refined.push(miss);
            }
        }
        classes = refined;
    }
    order
}

/// `order` is umbrella-free: every closed neighborhood is contiguous in it.
fn is_umbrella_free(g: &Graph, order: &[usize]) -> bool {
    let mut pos = vec![0usize; order.len()];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    order.iter().all(|&v| {
        let (lo, hi) = g
            .neighbor_list(v)
            .iter()
            .fold((pos[v], pos[v]), |(lo, hi), &u| (lo.min(pos[u]), hi.max(pos[u])));
        hi - lo == g.degree(v)
    })
}

/// A vertex order in which every closed neighborhood is contiguous, if one exists.
pub fn unit_interval_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut order = lex_bfs(g, &(0..n).collect::<Vec<_>>());
    for _ in 0..2 {
        // ties go to the vertex visited last in the previous sweep
        let reversed: Vec<usize> = order.iter().rev().copied().collect();
        order = lex_bfs(g, &reversed);
    }
    is_umbrella_free(g, &order).then_some(order)
}

/// Positions `x` with `uv ∈ E ⟺ |x(u) − x(v)| ≤ 1`, strictly increasing along `order`.
fn unit_positions(g: &Graph, order: &[usize]) -> Vec<Rational> {
    let n = order.len();
    let mut pos = vec![0usize; n];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    let mut x: Vec<Rational> = Vec::with_capacity(n);
    let one = int(1);
    let two = int(2);
    for (k, &v) in order.iter().enumerate() {
        if k == 0 {
            x.push(int(0));
            continue;
        }
        let left = g.neighbor_list(v).iter().map(|&u| pos[u]).min().unwrap_or(k).min(k);
        let value = if left == k {
            &x[k - 1] + &two
        } else {
            let hi = &x[left] + &one;
            let mut lo = x[k - 1].clone();
            if left > 0 {
                let past = &x[left - 1] + &one;
                if past > lo {
                    lo = past;
                }
            }
            (lo + hi) / &two
        };
        x.push(value);
    }
    let mut out = vec![int(0); n];
    for (k, &v) in order.iter().enumerate() {
        out[v] = x[k].clone();
    }
    out
}

/// Witness that a graph is not unit interval: a chordless cycle, claw, net or 3-sun.
pub fn unit_interval_obstruction(g: &Graph) -> Option<Witness> {
    if let Err(w) = check_chordal(g) {
        return Some(w);
    }
    [PatternKind::K13, PatternKind::Net, PatternKind::Sun3]
        .into_iter()
        .find_map(|k| find_induced(g, &Pattern::new(k)))
}

/// A realization whose pairwise sums all reach `α`, so adjacency depends on
/// weight differences alone. Weights start at `α/2`.
pub fn unit_interval_weights(g: &Graph, alpha: &Rational, beta: &Rational) -> Result<WeightAssignment, Witness> {
    let Some(order) = unit_interval_order(g) else {
        return Err(unit_interval_obstruction(g).expect("a graph without a unit interval order has an obstruction"));
    };
    let half = alpha / int(2);
    let weights = unit_positions(g, &order).into_iter().map(|x| &half + beta * x).collect();
    Ok(WeightAssignment::new(alpha.clone(), beta.clone(), weights).expect("parameters checked by caller"))
}

/// [`unit_interval_weights`] at `(α, β) = (2, 1)`.
pub fn is_unit_interval(g: &Graph) -> Result<WeightAssignment, Witness> {
    let (a, b) = WeightAssignment::default_parameters();
    unit_interval_weights(g, &a, &b)
}

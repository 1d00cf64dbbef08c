use alloc::vec::Vec;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// `i R j` iff `N(i) \ {j} ⊆ N(j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VicinalPreorder {
    // below[i] = { j : i R j }
    below: Vec<VertexSet>,
}

impl VicinalPreorder {
    pub fn len(&self) -> usize {
        self.below.len()
    }

    pub fn is_empty(&self) -> bool {
        self.below.is_empty()
    }

    pub fn relates(&self, i: usize, j: usize) -> bool {
        self.below[i].contains(j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.relates(i, j) || self.relates(j, i)
    }

    /// The vertices `j` with `i R j`.
    pub fn dominating(&self, i: usize) -> &VertexSet {
        &self.below[i]
    }

    /// First incomparable pair inside `s`, in lexicographic order.
    pub fn incomparable_within(&self, s: &VertexSet) -> Option<(usize, usize)> {
        let members = s.to_vec();
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                if !self.comparable(i, j) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn incomparable_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !self.comparable(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_total(&self) -> bool {
        self.incomparable_within(&VertexSet::full(self.len())).is_none()
    }
}

pub fn vicinal_preorder(g: &Graph) -> VicinalPreorder {
    let n = g.vertex_count();
    let below = (0..n)
        .map(|i| VertexSet::from_iter_in(n, (0..n).filter(|&j| g.nbrs(i).is_subset_except(j, g.nbrs(j)))))
        .collect();
    VicinalPreorder { below }
}

pub fn is_threshold(g: &Graph) -> bool {
    vicinal_preorder(g).is_total()
}

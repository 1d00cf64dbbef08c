//! 2-SAT via the implication graph and Tarjan's strongly connected components.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TwoSatError {
    #[error("variable {var} out of range for {vars} variables")]
    VariableOutOfRange { var: usize, vars: usize },
    #[error("assignment has {got} values, instance has {expected} variables")]
    LengthMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Literal {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Literal {
        Literal { var, positive: false }
    }

    pub fn negate(self) -> Literal {
        Literal {
            var: self.var,
            positive: !self.positive,
        }
    }

    fn node(self) -> usize {
        2 * self.var + usize::from(!self.positive)
    }

    pub fn holds(self, a: &Assignment) -> bool {
        a.0[self.var] == self.positive
    }
}

/// A disjunction of two literals. A unit clause is stored as `(l ∨ l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clause(pub Literal, pub Literal);

impl Clause {
    /// Orders the two literals so equal clauses compare equal.
    pub fn normalized(self) -> Clause {
        if self.1 < self.0 {
            Clause(self.1, self.0)
        } else {
            self
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TwoSatInstance {
    vars: usize,
    clauses: Vec<Clause>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment(pub Vec<bool>);

impl Assignment {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn value(&self, var: usize) -> bool {
        self.0[var]
    }
}

impl TwoSatInstance {
    pub fn new(vars: usize) -> Self {
        TwoSatInstance {
            vars,
            clauses: Vec::new(),
        }
    }

    pub fn var_count(&self) -> usize {
        self.vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn add_clause(&mut self, a: Literal, b: Literal) -> Result<(), TwoSatError> {
        for l in [a, b] {
            if l.var >= self.vars {
                return Err(TwoSatError::VariableOutOfRange {
                    var: l.var,
                    vars: self.vars,
                });
            }
        }
        self.clauses.push(Clause(a, b));
        Ok(())
    }

    pub fn add_unit(&mut self, l: Literal) -> Result<(), TwoSatError> {
        self.add_clause(l, l)
    }

    /// Removes duplicate clauses (up to literal order) and sorts the rest.
    pub fn dedup(&mut self) {
        for c in self.clauses.iter_mut() {
            *c = c.normalized();
        }
        self.clauses.sort_unstable();
        self.clauses.dedup();
    }
}

pub fn evaluate(inst: &TwoSatInstance, a: &Assignment) -> Result<bool, TwoSatError> {
    if a.len() != inst.vars {
        return Err(TwoSatError::LengthMismatch {
            expected: inst.vars,
            got: a.len(),
        });
    }
    Ok(inst.clauses.iter().all(|c| c.0.holds(a) || c.1.holds(a)))
}

/// Returns a satisfying assignment, or `None` if the instance is unsatisfiable.
pub fn solve(inst: &TwoSatInstance) -> Option<Assignment> {
    let nodes = 2 * inst.vars;
    // implication graph in CSR form: (a ∨ b) gives ¬a → b and ¬b → a
    let mut degree = vec![0usize; nodes + 1];
    for c in &inst.clauses {
        degree[c.0.negate().node()] += 1;
        degree[c.1.negate().node()] += 1;
    }
    let mut start = vec![0usize; nodes + 1];
    for v in 0..nodes {
        start[v + 1] = start[v] + degree[v];
    }
    let mut fill = start.clone();
    let mut targets = vec![0usize; start[nodes]];
    for c in &inst.clauses {
        for (from, to) in [(c.0.negate(), c.1), (c.1.negate(), c.0)] {
            targets[fill[from.node()]] = to.node();
            fill[from.node()] += 1;
        }
    }
    let comp = tarjan(nodes, &start, &targets);
    let mut values = Vec::with_capacity(inst.vars);
    for v in 0..inst.vars {
        let (t, f) = (comp[2 * v], comp[2 * v + 1]);
        if t == f {
            return None;
        }
        // Tarjan numbers components in reverse topological order
        values.push(t < f);
    }
    Some(Assignment(values))
}

fn tarjan(n: usize, start: &[usize], targets: &[usize]) -> Vec<usize> {
    const UNSET: usize = usize::MAX;
    let mut index = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut comp = vec![UNSET; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut counter = 0;
    let mut n_comp = 0;

    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        call.push((root, start[root]));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (u, ref mut edge)) = call.last_mut() {
            if *edge < start[u + 1] {
                let v = targets[*edge];
                *edge += 1;
                if index[v] == UNSET {
                    index[v] = counter;
                    low[v] = counter;
                    counter += 1;
                    stack.push(v);
                    on_stack[v] = true;
                    call.push((v, start[v]));
                } else if on_stack[v] {
                    low[u] = low[u].min(index[v]);
                }
            } else {
                call.pop();
                if low[u] == index[u] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp[w] = n_comp;
                        if w == u {
                            break;
                        }
                    }
                    n_comp += 1;
                }
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[u]);
                }
            }
        }
    }
    comp
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_clause() {
        let mut inst = TwoSatInstance::new(1);
        inst.add_unit(Literal::pos(0)).unwrap();
        assert_eq!(solve(&inst), Some(Assignment(vec![true])));
    }

    #[test]
    fn contradiction() {
        let mut inst = TwoSatInstance::new(1);
        inst.add_unit(Literal::pos(0)).unwrap();
        inst.add_unit(Literal::neg(0)).unwrap();
        assert_eq!(solve(&inst), None);
    }

    #[test]
    fn evaluate_examples() {
        let empty = TwoSatInstance::new(2);
        assert_eq!(evaluate(&empty, &Assignment(vec![false, true])), Ok(true));
        let mut inst = TwoSatInstance::new(2);
        inst.add_clause(Literal::pos(0), Literal::pos(1)).unwrap();
        assert_eq!(evaluate(&inst, &Assignment(vec![false, true])), Ok(true));
        assert_eq!(evaluate(&inst, &Assignment(vec![false, false])), Ok(false));
        assert_eq!(
            evaluate(&inst, &Assignment(vec![true])),
            Err(TwoSatError::LengthMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn rejects_out_of_range_literal() {
        let mut inst = TwoSatInstance::new(2);
        assert_eq!(
            inst.add_clause(Literal::pos(0), Literal::neg(2)),
            Err(TwoSatError::VariableOutOfRange { var: 2, vars: 2 })
        );
    }

    #[test]
    fn implication_chain() {
        // x0, x0 → x1, x1 → x2, x2 → ¬x0 is unsatisfiable
        let mut inst = TwoSatInstance::new(3);
        inst.add_unit(Literal::pos(0)).unwrap();
        inst.add_clause(Literal::neg(0), Literal::pos(1)).unwrap();
        inst.add_clause(Literal::neg(1), Literal::pos(2)).unwrap();
        inst.add_clause(Literal::neg(2), Literal::neg(0)).unwrap();
        assert_eq!(solve(&inst), None);
        inst = TwoSatInstance::new(3);
        inst.add_unit(Literal::pos(0)).unwrap();
        inst.add_clause(Literal::neg(0), Literal::pos(1)).unwrap();
        inst.add_clause(Literal::neg(1), Literal::pos(2)).unwrap();
        let a = solve(&inst).unwrap();
        assert_eq!(a.0, vec![true, true, true]);
    }

    #[test]
    fn dedup_normalizes() {
        let mut inst = TwoSatInstance::new(2);
        inst.add_clause(Literal::pos(1), Literal::pos(0)).unwrap();
        inst.add_clause(Literal::pos(0), Literal::pos(1)).unwrap();
        inst.dedup();
        assert_eq!(inst.clauses().len(), 1);
    }
}

//! Small 0-1 linear systems and a depth-first branch-and-bound solver.
//!
//! Only the constraint families that describe Kunz-coordinates vectors are
//! built here: superadditivity `x_i + x_j - x_{i+j} >= 0`, a fixed popcount
//! `Σ x_i = c`, and pinned variables `x_k = b`. The solver exists to check the
//! closed-form `delta_k` against the optimum of its integer program.

use crate::error::{Error, Result};
use crate::kunz::KunzVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Ge,
    Le,
    Eq,
}

/// `Σ coef * x_var  (relation)  rhs`, variables 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    pub terms: Vec<(usize, i64)>,
    pub relation: Relation,
    pub rhs: i64,
}

impl LinearConstraint {
    fn holds(&self, x: &[bool]) -> bool {
        let lhs: i64 = self
            .terms
            .iter()
            .map(|&(v, c)| if x[v - 1] { c } else { 0 })
            .sum();
        match self.relation {
            Relation::Ge => lhs >= self.rhs,
            Relation::Le => lhs <= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }

    /// The constraint as one or two `>=` rows.
    fn as_ge_rows(&self) -> Vec<(Vec<(usize, i64)>, i64)> {
        let neg = || self.terms.iter().map(|&(v, c)| (v, -c)).collect();
        match self.relation {
            Relation::Ge => vec![(self.terms.clone(), self.rhs)],
            Relation::Le => vec![(neg(), -self.rhs)],
            Relation::Eq => vec![(self.terms.clone(), self.rhs), (neg(), -self.rhs)],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinarySystem {
    dimension: usize,
    constraints: Vec<LinearConstraint>,
    fixed: Vec<Option<bool>>,
    objective: Option<Vec<i64>>,
}

impl BinarySystem {
    /// `Kunz(F)`: superadditivity for all `i <= j`, `i + j <= F`, and `x_F = 1`.
    pub fn kunz(f: usize) -> Self {
        let mut constraints = Vec::new();
        for i in 1..=f / 2 {
            for j in i..=f - i {
                let mut terms = if i == j {
                    vec![(i, 2)]
                } else {
                    vec![(i, 1), (j, 1)]
                };
                terms.push((i + j, -1));
                constraints.push(LinearConstraint {
                    terms,
                    relation: Relation::Ge,
                    rhs: 0,
                });
            }
        }
        let mut sys = BinarySystem {
            dimension: f,
            constraints,
            fixed: vec![None; f],
            objective: None,
        };
        if f > 0 {
            sys.fix(f, true);
        }
        sys
    }

    /// Irreducible vectors: `Kunz(F)` plus `Σ x_i = ceil((F+1)/2)`.
    pub fn irreducible(f: usize) -> Self {
        let mut sys = Self::kunz(f);
        sys.constraints.push(LinearConstraint {
            terms: (1..=f).map(|i| (i, 1)).collect(),
            relation: Relation::Eq,
            rhs: (f as i64 + 1 + 1) / 2,
        });
        sys
    }

    /// The program whose unique optimum is `delta_k(x)`: maximise `Σ z_i` over
    /// `Kunz(F)` with `z_i = 0` for `i ∈ theta_k(x)`.
    pub fn ip_delta(x: &KunzVector) -> Self {
        let f = x.frobenius();
        let mut sys = Self::kunz(f);
        for i in x.theta_k() {
            sys.fix(i, false);
        }
        sys.objective = Some(vec![1; f]);
        sys
    }

    pub fn fix(&mut self, var: usize, value: bool) {
        self.fixed[var - 1] = Some(value);
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn constraints(&self) -> &[LinearConstraint] {
        &self.constraints
    }

    pub fn fixed(&self) -> &[Option<bool>] {
        &self.fixed
    }

    pub fn objective_value(&self, x: &[bool]) -> i64 {
        match &self.objective {
            Some(c) => c.iter().zip(x).filter(|(_, &b)| b).map(|(c, _)| c).sum(),
            None => 0,
        }
    }

    /// Full assignment check, with no propagation involved.
    pub fn is_satisfied(&self, x: &[bool]) -> bool {
        x.len() == self.dimension
            && self
                .fixed
                .iter()
                .zip(x)
                .all(|(f, &v)| f.is_none_or(|b| b == v))
            && self.constraints.iter().all(|c| c.holds(x))
    }

    /// Best solution found by depth-first branch-and-bound, branching on the
    /// lowest unassigned index. Without an objective the first feasible point
    /// is returned.
    pub fn solve(&self) -> Result<Vec<bool>> {
        let rows: Vec<_> = self
            .constraints
            .iter()
            .flat_map(LinearConstraint::as_ge_rows)
            .collect();
        let objective = self
            .objective
            .clone()
            .unwrap_or_else(|| vec![0; self.dimension]);
        let mut search = Search {
            rows: &rows,
            objective: &objective,
            best: None,
            stop_at_first: self.objective.is_none(),
        };
        search.visit(self.fixed.clone());
        search.best.map(|(_, x)| x).ok_or(Error::Infeasible)
    }
}

/// Builds the program for `delta_k(x)`.
pub fn build_ip_delta(x: &KunzVector) -> BinarySystem {
    BinarySystem::ip_delta(x)
}

pub fn ip_delta_solve(sys: &BinarySystem) -> Result<Vec<bool>> {
    sys.solve()
}

struct Search<'a> {
    rows: &'a [(Vec<(usize, i64)>, i64)],
    objective: &'a [i64],
    best: Option<(i64, Vec<bool>)>,
    stop_at_first: bool,
}

impl Search<'_> {
    /// Bound propagation to a fixed point. Returns `false` on a wipe-out.
    fn propagate(&self, assign: &mut [Option<bool>]) -> bool {
        loop {
            let mut changed = false;
            for (terms, rhs) in self.rows {
                let max_activity: i64 = terms
                    .iter()
                    .map(|&(v, c)| match assign[v - 1] {
                        Some(true) => c,
                        Some(false) => 0,
                        None => c.max(0),
                    })
                    .sum();
                if max_activity < *rhs {
                    return false;
                }
                for &(v, c) in terms {
                    if assign[v - 1].is_some() {
                        continue;
                    }
                    if c > 0 && max_activity - c < *rhs {
                        assign[v - 1] = Some(true);
                        changed = true;
                    } else if c < 0 && max_activity + c < *rhs {
                        assign[v - 1] = Some(false);
                        changed = true;
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn visit(&mut self, mut assign: Vec<Option<bool>>) {
        if self.stop_at_first && self.best.is_some() {
            return;
        }
        if !self.propagate(&mut assign) {
            return;
        }
        let bound: i64 = assign
            .iter()
            .zip(self.objective)
            .map(|(a, &c)| match a {
                Some(true) => c,
                Some(false) => 0,
                None => c.max(0),
            })
            .sum();
        if let Some((best, _)) = &self.best {
            if bound <= *best {
                return;
            }
        }
        match assign.iter().position(Option::is_none) {
            None => {
                let x: Vec<bool> = assign.into_iter().map(|a| a.unwrap()).collect();
                self.best = Some((bound, x));
            }
            Some(k) => {
                let first = self.objective[k] >= 0;
                for value in [first, !first] {
                    let mut child = assign.clone();
                    child[k] = Some(value);
                    self.visit(child);
                }
            }
        }
    }
}

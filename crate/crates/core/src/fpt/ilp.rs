//! Small integer linear programs `min c·y` subject to rows `a·y ≥ b` and
//! integer boxes, solved by branch and bound with bound propagation.

use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Var {
    pub name: String,
    pub lo: i64,
    pub hi: i64,
}

impl Var {
    pub fn new(name: String, lo: i64, hi: i64) -> Self {
        Self { name, lo, hi }
    }
}

/// `Σ coeff · y ≥ rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub coeffs: Vec<(usize, i64)>,
    pub rhs: i64,
}

impl Row {
    /// Merges repeated variables.
    pub fn new(coeffs: Vec<(usize, i64)>, rhs: i64) -> Self {
        let mut merged: Vec<(usize, i64)> = Vec::new();
        for (v, c) in coeffs {
            match merged.iter_mut().find(|(w, _)| *w == v) {
                Some(slot) => slot.1 += c,
                None => merged.push((v, c)),
            }
        }
        merged.retain(|&(_, c)| c != 0);
        Self {
            coeffs: merged,
            rhs,
        }
    }

    pub fn satisfied(&self, y: &[i64]) -> bool {
        self.coeffs.iter().map(|&(v, c)| c * y[v]).sum::<i64>() >= self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IlpModel {
    pub vars: Vec<Var>,
    pub rows: Vec<Row>,
    pub objective: Vec<i64>,
    /// Variables in the order they are branched on.
    pub branch_order: Vec<usize>,
}

impl IlpModel {
    pub fn feasible(&self, y: &[i64]) -> bool {
        y.len() == self.vars.len()
            && self
                .vars
                .iter()
                .zip(y)
                .all(|(v, &x)| v.lo <= x && x <= v.hi)
            && self.rows.iter().all(|r| r.satisfied(y))
    }

    pub fn value(&self, y: &[i64]) -> i64 {
        self.objective.iter().zip(y).map(|(c, x)| c * x).sum()
    }

    pub fn to_json(&self) -> Value {
        let term = |&(v, c): &(usize, i64)| json!({ "var": self.vars[v].name, "coeff": c });
        json!({
            "variables": self.vars.iter().map(|v| json!({ "name": v.name, "lo": v.lo, "hi": v.hi })).collect::<Vec<_>>(),
            "rows": self.rows.iter().map(|r| json!({
                "terms": r.coeffs.iter().map(term).collect::<Vec<_>>(),
                "rhs": r.rhs,
            })).collect::<Vec<_>>(),
            "objective": self.objective,
        })
    }
}

fn ceil_div(p: i64, q: i64) -> i64 {
    -((-p).div_euclid(q))
}

/// Tightens `lo`/`hi` to a fixpoint; false when some row cannot be met.
fn propagate(rows: &[Row], lo: &mut [i64], hi: &mut [i64]) -> bool {
    loop {
        let mut changed = false;
        for row in rows {
            let max_act: i64 = row
                .coeffs
                .iter()
                .map(|&(v, c)| if c > 0 { c * hi[v] } else { c * lo[v] })
                .sum();
            if max_act < row.rhs {
                return false;
            }
            for &(v, c) in &row.coeffs {
                let own = if c > 0 { c * hi[v] } else { c * lo[v] };
                let need = row.rhs - (max_act - own);
                if c > 0 {
                    let bound = ceil_div(need, c);
                    if bound > lo[v] {
                        lo[v] = bound;
                        changed = true;
                    }
                } else {
                    let bound = (-need).div_euclid(-c);
                    if bound < hi[v] {
                        hi[v] = bound;
                        changed = true;
                    }
                }
                if lo[v] > hi[v] {
                    return false;
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

struct Solver<'a> {
    model: &'a IlpModel,
    best: Option<(i64, Vec<i64>)>,
}

impl Solver<'_> {
    fn bound(&self, lo: &[i64], hi: &[i64]) -> i64 {
        self.model
            .objective
            .iter()
            .enumerate()
            .map(|(v, &c)| if c > 0 { c * lo[v] } else { c * hi[v] })
            .sum()
    }

    fn branch(&mut self, mut lo: Vec<i64>, mut hi: Vec<i64>) {
        if !propagate(&self.model.rows, &mut lo, &mut hi) {
            return;
        }
        let bound = self.bound(&lo, &hi);
        if matches!(&self.best, Some((b, _)) if bound >= *b) {
            return;
        }
        let Some(&v) = self.model.branch_order.iter().find(|&&v| lo[v] < hi[v]) else {
            if self.model.rows.iter().all(|r| r.satisfied(&lo)) {
                self.best = Some((bound, lo));
            }
            return;
        };
        // Fix the variable at its cheaper end first, then exclude that value.
        let cheap_low = self.model.objective[v] >= 0;
        let pick = if cheap_low { lo[v] } else { hi[v] };
        let (mut fixed_lo, mut fixed_hi) = (lo.clone(), hi.clone());
        fixed_lo[v] = pick;
        fixed_hi[v] = pick;
        self.branch(fixed_lo, fixed_hi);
        if cheap_low {
            lo[v] += 1;
        } else {
            hi[v] -= 1;
        }
        self.branch(lo, hi);
    }
}

/// Minimizing assignment, or `None` when infeasible.
pub fn ilp_solve(model: &IlpModel) -> Option<Vec<i64>> {
    let lo: Vec<i64> = model.vars.iter().map(|v| v.lo).collect();
    let hi: Vec<i64> = model.vars.iter().map(|v| v.hi).collect();
    let mut solver = Solver { model, best: None };
    solver.branch(lo, hi);
    solver.best.map(|(_, y)| y)
}

use crate::error::{Error, Result};

use super::{Cnf, NaeFormula};

/// Variables: `x = 1..n`, its complement `x̂ = n + x`, the shared `s = 2n + 1`,
/// then `x_C = 2n + 2 + 2j` and `x̂_C = 2n + 3 + 2j` for clause `j` (0-based).
/// Per clause `L₁ ∨ L₂ ∨ L₃`: `{f(L₁), f(L₂), x_C}`, `{x̂_C, f(L₃), s}`,
/// `{x_C, x̂_C}`; per variable `{x, x̂}`.
pub fn threesat_to_nae(cnf: &Cnf) -> Result<NaeFormula> {
    let n = cnf.n;
    let f = |l: i32| {
        let x = l.unsigned_abs() as usize;
        if l > 0 {
            x
        } else {
            n + x
        }
    };
    let s = 2 * n + 1;
    let mut clauses = Vec::with_capacity(3 * cnf.clauses.len() + n);
    for (j, c) in cnf.clauses.iter().enumerate() {
        let mut vars: Vec<u32> = c.iter().map(|l| l.unsigned_abs()).collect();
        vars.sort_unstable();
        vars.dedup();
        if c.len() != 3 || vars.len() != 3 || vars[0] == 0 || vars[2] as usize > n {
            return Err(Error::MalformedFormula(format!(
                "clause {} must hold three literals over distinct variables",
                j + 1
            )));
        }
        let (xc, xhc) = (2 * n + 2 + 2 * j, 2 * n + 3 + 2 * j);
        clauses.push(vec![f(c[0]), f(c[1]), xc]);
        clauses.push(vec![xhc, f(c[2]), s]);
        clauses.push(vec![xc, xhc]);
    }
    for x in 1..=n {
        clauses.push(vec![x, n + x]);
    }
    NaeFormula::new(2 * n + 1 + 2 * cnf.clauses.len(), clauses)
}

//! Monotone NAE formulas and DIMACS CNF.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Monotone NAE-3SAT instance over variables `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaeFormula {
    pub n: usize,
    pub clauses: Vec<Vec<usize>>,
}

impl NaeFormula {
    pub fn new(n: usize, clauses: Vec<Vec<usize>>) -> Result<Self> {
        for (j, c) in clauses.iter().enumerate() {
            if c.is_empty() || c.len() > 3 {
                return Err(Error::MalformedFormula(format!(
                    "clause {} has {} literals",
                    j + 1,
                    c.len()
                )));
            }
            if let Some(&x) = c.iter().find(|&&x| x == 0 || x > n) {
                return Err(Error::MalformedFormula(format!(
                    "clause {}: variable {x} out of range",
                    j + 1
                )));
            }
        }
        Ok(Self { n, clauses })
    }

    pub fn m(&self) -> usize {
        self.clauses.len()
    }

    /// One clause per line, variables separated by spaces. An optional
    /// `p nae <n> <m>` header fixes the variable count; `c` and `#` start comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = 0;
        let mut clauses = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let bad = || Error::MalformedFormula(format!("line {}: {raw}", i + 1));
            if let Some(rest) = line.strip_prefix('p') {
                let t: Vec<&str> = rest.split_whitespace().collect();
                match t.as_slice() {
                    ["nae", vars, _] => n = n.max(vars.parse().map_err(|_| bad())?),
                    _ => return Err(bad()),
                }
                continue;
            }
            let mut clause = Vec::new();
            for tok in line.split_whitespace() {
                let x: usize = tok.parse().map_err(|_| bad())?;
                if x == 0 {
                    break;
                }
                clause.push(x);
            }
            n = n.max(clause.iter().copied().max().unwrap_or(0));
            clauses.push(clause);
        }
        Self::new(n, clauses)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("p nae {} {}\n", self.n, self.m());
        for c in &self.clauses {
            let line: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    /// `a[x - 1]` is the value of variable `x`. Returns the first clause
    /// (0-based) whose literals all agree.
    pub fn first_violated(&self, a: &[bool]) -> Option<usize> {
        self.clauses
            .iter()
            .position(|c| c.iter().all(|&x| a[x - 1]) || c.iter().all(|&x| !a[x - 1]))
    }

    /// Occurrence count of each variable, counting a clause once.
    pub fn occurrences(&self, x: usize) -> Vec<usize> {
        (0..self.m())
            .filter(|&j| self.clauses[j].contains(&x))
            .collect()
    }
}

/// CNF with signed literals over `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cnf {
    pub n: usize,
    pub clauses: Vec<Vec<i32>>,
}

impl Cnf {
    pub fn satisfied_by(&self, a: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter()
                .any(|&l| a[l.unsigned_abs() as usize - 1] == (l > 0))
        })
    }
}

/// DIMACS CNF: `p cnf <n> <m>` header, clauses terminated by `0`.
pub fn parse_dimacs(text: &str) -> Result<Cnf> {
    let mut n: Option<usize> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        let bad = || Error::MalformedFormula(format!("line {}: {raw}", i + 1));
        if let Some(rest) = line.strip_prefix('p') {
            let t: Vec<&str> = rest.split_whitespace().collect();
            match t.as_slice() {
                ["cnf", vars, _] => n = Some(vars.parse().map_err(|_| bad())?),
                _ => return Err(bad()),
            }
            continue;
        }
        for tok in line.split_whitespace() {
            let l: i32 = tok.parse().map_err(|_| bad())?;
            if l == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(l);
            }
        }
    }
    if !current.is_empty() {
        clauses.push(current);
    }
    let n = n.ok_or_else(|| Error::MalformedFormula("missing `p cnf` header".into()))?;
    if let Some(l) = clauses
        .iter()
        .flatten()
        .find(|l| l.unsigned_abs() as usize > n)
    {
        return Err(Error::MalformedFormula(format!(
            "literal {l} exceeds {n} variables"
        )));
    }
    Ok(Cnf { n, clauses })
}

fn assignments(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u64..1 << n).map(move |bits| (0..n).map(|i| bits >> i & 1 == 1).collect())
}

/// Exhaustive search; first NAE assignment in binary counting order.
pub fn nae_satisfiable(phi: &NaeFormula) -> Option<Vec<bool>> {
    assignments(phi.n).find(|a| phi.first_violated(a).is_none())
}

/// Exhaustive search; first satisfying assignment in binary counting order.
pub fn cnf_satisfiable(cnf: &Cnf) -> Option<Vec<bool>> {
    assignments(cnf.n).find(|a| cnf.satisfied_by(a))
}

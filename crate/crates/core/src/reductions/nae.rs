use crate::error::{Error, Result};
use crate::graph::Sign;

use super::{
    cycle_role, NaeFormula, ReductionOutput, Tagged, ROLE_BIG_CLIQUE, ROLE_CLAUSE,
    ROLE_CLAUSE_PARTNER,
};

fn check_exact3(phi: &NaeFormula) -> Result<()> {
    for (j, c) in phi.clauses.iter().enumerate() {
        let mut sorted = c.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != 3 || c.len() != 3 {
            return Err(Error::MalformedFormula(format!(
                "clause {} must hold three distinct variables",
                j + 1
            )));
        }
    }
    Ok(())
}

/// Cycle `x_1 … x_{2n_x}` of one variable: positive matching `x_{2p−1}x_{2p}`,
/// negative links `x_{2p}x_{2p+1}` and the closing `x_{2n_x}x_1` (omitted
/// when `n_x = 1`, where it would coincide with the matching edge).
fn variable_cycle(t: &mut Tagged, x: usize, nx: usize) -> Result<Vec<usize>> {
    let role = cycle_role(x);
    let cycle: Vec<usize> = (1..=2 * nx)
        .map(|h| t.add(&role, format!("{role}:{h}")))
        .collect::<Result<_>>()?;
    for p in 0..nx {
        t.edge(cycle[2 * p], cycle[2 * p + 1], Sign::Positive)?;
        if p + 1 < nx {
            t.edge(cycle[2 * p + 1], cycle[2 * p + 2], Sign::Negative)?;
        }
    }
    if nx >= 2 {
        t.edge(cycle[2 * nx - 1], cycle[0], Sign::Negative)?;
    }
    Ok(cycle)
}

/// Big negative clique on `m + 2` vertices (the first one special), clause
/// vertices joined positively to it, and one cycle per occurring variable with
/// clause `j_p` attached negatively to `x_{2p}`. Every cycle vertex carries two
/// small negative 4-cliques.
pub fn nae_to_defall(phi: &NaeFormula) -> Result<ReductionOutput> {
    check_exact3(phi)?;
    let m = phi.m();
    let mut t = Tagged::new();
    let big: Vec<usize> = (1..=m + 2)
        .map(|i| t.add(ROLE_BIG_CLIQUE, format!("{ROLE_BIG_CLIQUE}:{i}")))
        .collect::<Result<_>>()?;
    t.clique(&big, Sign::Negative)?;
    let special = big[0];
    let clauses: Vec<usize> = (1..=m)
        .map(|j| t.add(ROLE_CLAUSE, format!("{ROLE_CLAUSE}:{j}")))
        .collect::<Result<_>>()?;
    for &c in &clauses {
        t.edge(special, c, Sign::Positive)?;
    }
    for x in 1..=phi.n {
        let occ = phi.occurrences(x);
        if occ.is_empty() {
            continue;
        }
        let cycle = variable_cycle(&mut t, x, occ.len())?;
        for (p, &j) in occ.iter().enumerate() {
            t.edge(clauses[j], cycle[2 * p + 1], Sign::Negative)?;
        }
        for &h in &cycle {
            t.guard(h)?;
            t.guard(h)?;
        }
    }
    Ok(t.finish(Some(special), None))
}

/// Degree-five variant: each clause is a pair `c_i d_i` joined positively,
/// the `d_i` form a negative cycle, and clause `j_p` attaches negatively to
/// `x_{2p−1}`. Each `d_i` and each even cycle vertex needs two guard edges;
/// these are served by shared negative 4-cliques with at most two guard edges
/// per clique vertex.
pub fn nae_to_defall_maxdeg5(phi: &NaeFormula) -> Result<ReductionOutput> {
    check_exact3(phi)?;
    let m = phi.m();
    let mut t = Tagged::new();
    let mut cs = Vec::with_capacity(m);
    let mut ds = Vec::with_capacity(m);
    for i in 1..=m {
        let c = t.add(ROLE_CLAUSE, format!("{ROLE_CLAUSE}:{i}"))?;
        let d = t.add(ROLE_CLAUSE_PARTNER, format!("{ROLE_CLAUSE_PARTNER}:{i}"))?;
        t.edge(c, d, Sign::Positive)?;
        cs.push(c);
        ds.push(d);
    }
    for i in 0..m {
        let next = (i + 1) % m;
        if next != i && !(m == 2 && i == 1) {
            t.edge(ds[i], ds[next], Sign::Negative)?;
        }
    }
    let mut hosts: Vec<usize> = ds.clone();
    for x in 1..=phi.n {
        let occ = phi.occurrences(x);
        if occ.is_empty() {
            continue;
        }
        let cycle = variable_cycle(&mut t, x, occ.len())?;
        for (p, &j) in occ.iter().enumerate() {
            t.edge(cs[j], cycle[2 * p], Sign::Negative)?;
        }
        hosts.extend(cycle.iter().skip(1).step_by(2));
    }
    let mut pool: Vec<[usize; 4]> = Vec::new();
    for (i, &host) in hosts.iter().enumerate() {
        for slot in [2 * i, 2 * i + 1] {
            if slot / 8 == pool.len() {
                pool.push(t.small_clique()?);
            }
            t.edge(host, pool[slot / 8][slot % 4], Sign::Negative)?;
        }
    }
    Ok(t.finish(None, None))
}

fn witness(out: &ReductionOutput, phi: &NaeFormula, a: &[bool]) -> Result<Vec<usize>> {
    if a.len() != phi.n {
        return Err(Error::InvalidArgument(format!(
            "assignment has {} values for {} variables",
            a.len(),
            phi.n
        )));
    }
    if let Some(j) = phi.first_violated(a) {
        return Err(Error::NotAnNaeAssignment(j + 1));
    }
    let mut d: Vec<usize> = out.special_vertex.into_iter().collect();
    d.extend_from_slice(out.role(ROLE_CLAUSE));
    d.extend_from_slice(out.role(ROLE_CLAUSE_PARTNER));
    for x in 1..=phi.n {
        if !a[x - 1] {
            d.extend_from_slice(out.role(&cycle_role(x)));
        }
    }
    d.sort_unstable();
    Ok(d)
}

/// `{v} ∪ {c_j} ∪ ⋃_{A(x)=0} X′(x)` in the graph of [`nae_to_defall`];
/// `a[x − 1]` is the value of variable `x`.
pub fn witness_from_assignment(phi: &NaeFormula, a: &[bool]) -> Result<Vec<usize>> {
    witness(&nae_to_defall(phi)?, phi, a)
}

/// `{c_i, d_i} ∪ ⋃_{A(x)=0} X′(x)` in the graph of [`nae_to_defall_maxdeg5`].
pub fn witness_from_assignment_maxdeg5(phi: &NaeFormula, a: &[bool]) -> Result<Vec<usize>> {
    witness(&nae_to_defall_maxdeg5(phi)?, phi, a)
}

//! Exponential reference solvers used as ground truth for the other modules.

use itertools::Itertools;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};
use crate::verify::{candidates, is_alliance_masked};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MinAllianceResult {
    /// Sorted members of a minimum alliance, if one exists within the bound.
    pub witness: Option<Vec<usize>>,
}

impl MinAllianceResult {
    pub fn none() -> Self {
        Self { witness: None }
    }

    pub fn found_set(mut set: Vec<usize>) -> Self {
        set.sort_unstable();
        Self { witness: Some(set) }
    }

    pub fn found(&self) -> bool {
        self.witness.is_some()
    }

    pub fn size(&self) -> Option<usize> {
        self.witness.as_ref().map(Vec::len)
    }

    /// Drops a witness larger than `k`.
    pub fn bounded(self, k: usize) -> Self {
        match self.witness {
            Some(w) if w.len() <= k => Self { witness: Some(w) },
            _ => Self::none(),
        }
    }

    pub fn to_json(&self, g: &SignedGraph) -> Value {
        json!({
            "found": self.found(),
            "size": self.size(),
            "witness": self.witness.as_ref().map(|w| g.labels_of(w)),
        })
    }
}

/// Enumerates connected vertex sets of exactly `size` vertices inside `allowed`,
/// each once. Sets containing `required` are rooted there; otherwise every set
/// is rooted at its smallest vertex and only extended by larger ones.
pub fn for_each_connected_set(
    g: &SignedGraph,
    allowed: &[bool],
    size: usize,
    required: Option<usize>,
    mut visit: impl FnMut(&[usize]),
) {
    let n = g.n();
    let roots: Vec<usize> = match required {
        Some(r) => vec![r],
        None => (0..n).collect(),
    };
    let mut covered = vec![0u32; n];
    for root in roots {
        if !allowed[root] || size == 0 {
            continue;
        }
        let eligible = |u: usize| allowed[u] && u != root && (required.is_some() || u > root);
        let mut sub = vec![root];
        covered[root] += 1;
        let mut ext = Vec::new();
        for (w, _) in g.neighbors(root) {
            covered[w] += 1;
            if eligible(w) {
                ext.push(w);
            }
        }
        extend(g, &mut sub, ext, size, &mut covered, &eligible, &mut visit);
        covered[root] -= 1;
        for (w, _) in g.neighbors(root) {
            covered[w] -= 1;
        }
    }
}

fn extend(
    g: &SignedGraph,
    sub: &mut Vec<usize>,
    mut ext: Vec<usize>,
    size: usize,
    covered: &mut [u32],
    eligible: &dyn Fn(usize) -> bool,
    visit: &mut dyn FnMut(&[usize]),
) {
    if sub.len() == size {
        visit(sub);
        return;
    }
    while let Some(w) = ext.pop() {
        let mut next = ext.clone();
        for (u, _) in g.neighbors(w) {
            if covered[u] == 0 && eligible(u) {
                next.push(u);
            }
        }
        covered[w] += 1;
        for (u, _) in g.neighbors(w) {
            covered[u] += 1;
        }
        sub.push(w);
        extend(g, sub, next, size, covered, eligible, visit);
        sub.pop();
        covered[w] -= 1;
        for (u, _) in g.neighbors(w) {
            covered[u] -= 1;
        }
    }
}

/// Smallest alliance of size at most `k_max` (containing `required` if given),
/// found by scanning connected candidate sets in increasing size.
pub fn min_alliance_bruteforce(
    g: &SignedGraph,
    k_max: usize,
    required: Option<usize>,
) -> Result<MinAllianceResult> {
    if let Some(r) = required {
        g.check_vertex(r)?;
    }
    if k_max == 0 {
        return Err(Error::InvalidArgument("k_max must be at least 1".into()));
    }
    let allowed = candidates(g, k_max);
    if required.is_some_and(|r| !allowed[r]) {
        return Ok(MinAllianceResult::none());
    }
    let mut mask = vec![false; g.n()];
    for size in 1..=k_max.min(g.n()) {
        let mut best: Option<Vec<usize>> = None;
        let mut any = false;
        for_each_connected_set(g, &allowed, size, required, |set| {
            any = true;
            for &v in set {
                mask[v] = true;
            }
            if is_alliance_masked(g, set, &mask) {
                let mut sorted = set.to_vec();
                sorted.sort_unstable();
                if best.as_ref().is_none_or(|b| sorted < *b) {
                    best = Some(sorted);
                }
            }
            for &v in set {
                mask[v] = false;
            }
        });
        if let Some(w) = best {
            return Ok(MinAllianceResult { witness: Some(w) });
        }
        if !any {
            break;
        }
    }
    Ok(MinAllianceResult::none())
}

pub fn alliable_bruteforce(g: &SignedGraph, required: Option<usize>) -> Result<bool> {
    if g.n() == 0 {
        return Ok(false);
    }
    Ok(min_alliance_bruteforce(g, g.n(), required)?.found())
}

/// Smallest edge set whose flip makes `d` an alliance, scanning subsets of the
/// canonical edge list by size and then lexicographically.
pub fn min_flip_bruteforce(
    g: &SignedGraph,
    d: &[usize],
    k_max: usize,
) -> Result<Option<Vec<(usize, usize)>>> {
    g.check_set(d)?;
    if d.is_empty() {
        return Err(Error::EmptySet);
    }
    let mask = g.mask(d);
    let members: Vec<usize> = (0..g.n()).filter(|&v| mask[v]).collect();
    let mut signs: Vec<Sign> = g.edges().iter().map(|e| e.sign).collect();
    // Incident edges of every member, as (edge index, neighbor).
    let incident: Vec<Vec<(usize, usize)>> = members
        .iter()
        .map(|&v| {
            g.edges()
                .iter()
                .enumerate()
                .filter(|(_, e)| e.u == v || e.v == v)
                .map(|(i, e)| (i, e.other(v)))
                .collect()
        })
        .collect();
    let valid = |signs: &[Sign]| {
        incident.iter().all(|inc| {
            let (mut pin, mut nin, mut nout) = (0usize, 0usize, 0usize);
            for &(i, w) in inc {
                match (signs[i], mask[w]) {
                    (Sign::Positive, true) => pin += 1,
                    (Sign::Negative, true) => nin += 1,
                    (Sign::Negative, false) => nout += 1,
                    (Sign::Positive, false) => {}
                }
            }
            pin + 1 >= nin && pin + 1 >= nout
        })
    };
    let m = g.edge_count();
    for t in 0..=k_max.min(m) {
        for combo in (0..m).combinations(t) {
            for &i in &combo {
                signs[i] = signs[i].flip();
            }
            let ok = valid(&signs);
            for &i in &combo {
                signs[i] = signs[i].flip();
            }
            if ok {
                return Ok(Some(combo.iter().map(|&i| g.edges()[i].key()).collect()));
            }
        }
    }
    Ok(None)
}

/// Maximum subset of `edges` with `deg_H(v) ≤ bound[v]`, first in lexicographic
/// order among the largest.
pub fn udcs_bruteforce(edges: &[(usize, usize)], bound: &[usize]) -> Vec<(usize, usize)> {
    let mut deg = vec![0usize; bound.len()];
    for size in (0..=edges.len()).rev() {
        for combo in (0..edges.len()).combinations(size) {
            deg.iter_mut().for_each(|d| *d = 0);
            let mut ok = true;
            for &i in &combo {
                let (a, b) = edges[i];
                deg[a] += 1;
                deg[b] += 1;
                if deg[a] > bound[a] || deg[b] > bound[b] {
                    ok = false;
                    break;
                }
            }
            if ok {
                return combo.iter().map(|&i| edges[i]).collect();
            }
        }
    }
    Vec::new()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Negative as N, Positive as P};
    use crate::verify::check_alliance;

    fn neg_clique(n: usize) -> SignedGraph {
        let edges: Vec<_> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b, N)))
            .collect();
        SignedGraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn connected_sets_are_unique_and_complete() {
        // Path 0-1-2-3 has 4 + 3 + 2 + 1 connected sets.
        let g = SignedGraph::from_edges(4, &[(0, 1, P), (1, 2, N), (2, 3, P)]).unwrap();
        let allowed = vec![true; 4];
        let mut seen = Vec::new();
        for s in 1..=4 {
            for_each_connected_set(&g, &allowed, s, None, |set| {
                let mut v = set.to_vec();
                v.sort_unstable();
                seen.push(v);
            });
        }
        assert_eq!(seen.len(), 10);
        let mut dedup = seen.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 10);
        let mut with_two = 0;
        for s in 1..=4 {
            for_each_connected_set(&g, &allowed, s, Some(2), |set| {
                assert!(set.contains(&2));
                with_two += 1;
            });
        }
        // Intervals of the path containing vertex 2.
        assert_eq!(with_two, 6);
    }

    #[test]
    fn negative_k4_has_no_alliance() {
        let g = neg_clique(4);
        assert!(!min_alliance_bruteforce(&g, 4, None).unwrap().found());
        assert!(!alliable_bruteforce(&g, None).unwrap());
    }

    #[test]
    fn negative_c5_pairs() {
        let g =
            SignedGraph::from_edges(5, &[(0, 1, N), (1, 2, N), (2, 3, N), (3, 4, N), (0, 4, N)])
                .unwrap();
        let r = min_alliance_bruteforce(&g, 5, None).unwrap();
        assert_eq!(r.witness, Some(vec![0, 1]));
    }

    #[test]
    fn required_vertex_is_respected() {
        let g = SignedGraph::from_edges(3, &[(0, 1, P), (1, 2, N)]).unwrap();
        let r = min_alliance_bruteforce(&g, 3, Some(2)).unwrap();
        let w = r.witness.unwrap();
        assert!(w.contains(&2));
        assert!(check_alliance(&g, &w).unwrap().valid);
    }

    #[test]
    fn flip_examples() {
        let star = SignedGraph::from_edges(3, &[(0, 1, N), (0, 2, N)]).unwrap();
        assert_eq!(
            min_flip_bruteforce(&star, &[0], 2).unwrap(),
            Some(vec![(0, 1)])
        );
        let tri = neg_clique(3);
        assert_eq!(
            min_flip_bruteforce(&tri, &[0, 1, 2], 3)
                .unwrap()
                .unwrap()
                .len(),
            2
        );
        assert_eq!(min_flip_bruteforce(&tri, &[0, 1, 2], 1).unwrap(), None);
        assert_eq!(min_flip_bruteforce(&tri, &[0, 1], 3).unwrap(), Some(vec![]));
        assert!(matches!(
            min_flip_bruteforce(&tri, &[], 3),
            Err(Error::EmptySet)
        ));
    }

    #[test]
    fn udcs_examples() {
        let tri = [(0, 1), (1, 2), (0, 2)];
        assert!(udcs_bruteforce(&tri, &[0, 0, 0]).is_empty());
        assert_eq!(udcs_bruteforce(&tri, &[1, 1, 1]).len(), 1);
        assert_eq!(udcs_bruteforce(&tri, &[2, 2, 2]).len(), 3);
    }
}

//! Defensive-alliance conditions, the per-vertex necessary condition and
//! explainable reports.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// Condition 1 is `deg⁺_S + 1 ≥ deg⁻_S`, condition 2 is `deg⁺_S + 1 ≥ deg⁻` outside S.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Condition {
    Internal = 1,
    External = 2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Slack {
    pub vertex: usize,
    pub slack1: i64,
    pub slack2: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AllianceReport {
    /// Sorted, duplicate-free.
    pub set: Vec<usize>,
    pub slacks: Vec<Slack>,
    pub valid: bool,
    /// Ascending by vertex, condition 1 before condition 2.
    pub violators: Vec<(usize, Condition)>,
}

impl AllianceReport {
    pub fn to_json(&self, g: &SignedGraph) -> Value {
        json!({
            "set": g.labels_of(&self.set),
            "valid": self.valid,
            "violators": self.violators.iter().map(|&(v, c)| json!({
                "vertex": g.label(v),
                "condition": c as u8,
            })).collect::<Vec<_>>(),
            "slacks": self.slacks.iter().map(|s| json!({
                "vertex": g.label(s.vertex),
                "slack1": s.slack1,
                "slack2": s.slack2,
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn check_alliance(g: &SignedGraph, s: &[usize]) -> Result<AllianceReport> {
    g.check_set(s)?;
    let mut set = s.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let mask = g.mask(&set);
    let mut slacks = Vec::with_capacity(set.len());
    let mut violators = Vec::new();
    for &v in &set {
        let p = g.profile_in(v, &mask);
        let slack1 = p.pos_in as i64 + 1 - p.neg_in as i64;
        let slack2 = p.pos_in as i64 + 1 - p.neg_out as i64;
        if slack1 < 0 {
            violators.push((v, Condition::Internal));
        }
        if slack2 < 0 {
            violators.push((v, Condition::External));
        }
        slacks.push(Slack {
            vertex: v,
            slack1,
            slack2,
        });
    }
    Ok(AllianceReport {
        valid: violators.is_empty(),
        set,
        slacks,
        violators,
    })
}

/// Whether a nonempty set given by its members and mask is a defensive alliance.
pub fn is_alliance_masked(g: &SignedGraph, members: &[usize], mask: &[bool]) -> bool {
    !members.is_empty()
        && members.iter().all(|&v| {
            let p = g.profile_in(v, mask);
            p.pos_in + 1 >= p.neg_in && p.pos_in + 1 >= p.neg_out
        })
}

pub fn is_alliance(g: &SignedGraph, set: &[usize]) -> bool {
    is_alliance_masked(g, set, &g.mask(set))
}

/// `deg⁺(v) + 1 ≥ ⌈deg⁻(v)/2⌉`; false means `v` lies in no alliance.
pub fn passes_necessary(g: &SignedGraph, v: usize) -> bool {
    g.pos_degree(v) + 1 >= g.neg_degree(v).div_ceil(2)
}

pub fn necessary_condition(g: &SignedGraph, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    Ok(passes_necessary(g, v))
}

/// Vertices with `deg⁻ ≤ 2k`; the rest belong to no alliance of size at most `k`.
pub fn size_bound_filter(g: &SignedGraph, k: usize) -> Vec<usize> {
    (0..g.n()).filter(|&v| g.neg_degree(v) <= 2 * k).collect()
}

/// Vertices that may appear in an alliance of size at most `k`.
pub fn candidates(g: &SignedGraph, k: usize) -> Vec<bool> {
    (0..g.n())
        .map(|v| passes_necessary(g, v) && g.neg_degree(v) <= 2 * k)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Negative as N, Positive as P};

    fn neg_triangle() -> SignedGraph {
        SignedGraph::from_edges(3, &[(0, 1, N), (1, 2, N), (0, 2, N)]).unwrap()
    }

    #[test]
    fn empty_set_is_rejected() {
        assert!(matches!(
            check_alliance(&neg_triangle(), &[]),
            Err(Error::EmptySet)
        ));
    }

    #[test]
    fn unknown_vertex() {
        assert!(matches!(
            check_alliance(&neg_triangle(), &[7]),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn negative_triangle_pairs() {
        let g = neg_triangle();
        assert!(check_alliance(&g, &[0, 1]).unwrap().valid);
        let single = check_alliance(&g, &[0]).unwrap();
        assert!(!single.valid);
        assert_eq!(single.violators, vec![(0, Condition::External)]);
        let whole = check_alliance(&g, &[0, 1, 2]).unwrap();
        assert!(!whole.valid);
        assert!(whole
            .violators
            .iter()
            .all(|&(_, c)| c == Condition::Internal));
    }

    #[test]
    fn necessary_condition_examples() {
        let star = SignedGraph::from_edges(4, &[(0, 1, N), (0, 2, N), (0, 3, N)]).unwrap();
        assert!(!necessary_condition(&star, 0).unwrap());
        assert!(necessary_condition(&star, 1).unwrap());
        let g =
            SignedGraph::from_edges(6, &[(0, 1, P), (0, 2, N), (0, 3, N), (0, 4, N), (0, 5, N)])
                .unwrap();
        assert!(necessary_condition(&g, 0).unwrap());
    }

    #[test]
    fn size_filter() {
        let star = SignedGraph::from_edges(4, &[(0, 1, N), (0, 2, N), (0, 3, N)]).unwrap();
        assert_eq!(size_bound_filter(&star, 1), vec![1, 2, 3]);
        assert_eq!(size_bound_filter(&star, 2), vec![0, 1, 2, 3]);
        let positive = SignedGraph::from_edges(3, &[(0, 1, P), (1, 2, P)]).unwrap();
        assert_eq!(size_bound_filter(&positive, 1), vec![0, 1, 2]);
    }
}

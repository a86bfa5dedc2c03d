//! Bounded search tree over connected sets, parameterized by solution size
//! and maximum degree.

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};
use crate::oracle::MinAllianceResult;
use crate::verify::{candidates, is_alliance_masked};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum State {
    Undecided,
    In,
    Out,
}

struct Search<'a> {
    g: &'a SignedGraph,
    k: usize,
    state: Vec<State>,
    processed: Vec<bool>,
    members: Vec<usize>,
    mask: Vec<bool>,
    best: Option<Vec<usize>>,
}

impl Search<'_> {
    fn limit(&self) -> usize {
        match &self.best {
            Some(b) => b.len() - 1,
            None => self.k,
        }
    }

    /// Whether every member can still meet both conditions once its
    /// undecided neighbors are settled favourably.
    fn feasible(&self) -> bool {
        self.members.iter().all(|&u| {
            let (mut pin, mut nin, mut upos, mut uneg) = (0, 0, 0, 0);
            for (w, s) in self.g.neighbors(u) {
                match (self.state[w], s) {
                    (State::In, Sign::Positive) => pin += 1,
                    (State::In, Sign::Negative) => nin += 1,
                    (State::Undecided, Sign::Positive) => upos += 1,
                    (State::Undecided, Sign::Negative) => uneg += 1,
                    _ => {}
                }
            }
            let best_out = self.g.neg_degree(u) - nin - uneg;
            pin + upos + 1 >= nin && pin + upos + 1 >= best_out
        })
    }

    fn run(&mut self) {
        if self.members.len() > self.limit() {
            return;
        }
        if is_alliance_masked(self.g, &self.members, &self.mask) {
            let mut found = self.members.clone();
            found.sort_unstable();
            self.best = Some(found);
            return;
        }
        if !self.feasible() {
            return;
        }
        let next = self
            .members
            .iter()
            .copied()
            .filter(|&u| !self.processed[u])
            .min();
        let Some(u) = next else {
            return;
        };
        let open: Vec<usize> = {
            let mut v: Vec<usize> = self
                .g
                .neighbors(u)
                .map(|(w, _)| w)
                .filter(|&w| self.state[w] == State::Undecided)
                .collect();
            v.sort_unstable();
            v
        };
        self.processed[u] = true;
        let mut subsets: Vec<u32> = (0..1u32 << open.len()).collect();
        subsets.sort_by_key(|s| (s.count_ones(), *s));
        for subset in subsets {
            let room = self.limit().saturating_sub(self.members.len());
            if subset.count_ones() as usize > room {
                break;
            }
            for (i, &w) in open.iter().enumerate() {
                if subset >> i & 1 == 1 {
                    self.state[w] = State::In;
                    self.mask[w] = true;
                    self.members.push(w);
                } else {
                    self.state[w] = State::Out;
                }
            }
            self.run();
            for (i, &w) in open.iter().enumerate() {
                if subset >> i & 1 == 1 {
                    self.mask[w] = false;
                    self.members.pop();
                }
                self.state[w] = State::Undecided;
            }
        }
        self.processed[u] = false;
    }
}

/// Minimum alliance of size at most `k` (containing `required` if given).
pub fn solve_k_delta(
    g: &SignedGraph,
    k: usize,
    required: Option<usize>,
) -> Result<MinAllianceResult> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if let Some(r) = required {
        g.check_vertex(r)?;
    }
    let allowed = candidates(g, k);
    let n = g.n();
    let roots: Vec<usize> = match required {
        Some(r) => vec![r],
        None => (0..n).collect(),
    };
    let mut search = Search {
        g,
        k,
        state: vec![State::Undecided; n],
        processed: vec![false; n],
        members: Vec::new(),
        mask: vec![false; n],
        best: None,
    };
    for root in roots {
        if !allowed[root] {
            continue;
        }
        for v in 0..n {
            let excluded = !allowed[v] || (required.is_none() && v < root);
            search.state[v] = if excluded {
                State::Out
            } else {
                State::Undecided
            };
        }
        search.state[root] = State::In;
        search.mask[root] = true;
        search.members.push(root);
        search.run();
        search.members.clear();
        search.mask[root] = false;
    }
    Ok(MinAllianceResult {
        witness: search.best,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Negative as N, Positive as P};

    #[test]
    fn negative_k4_has_none() {
        let edges: Vec<_> = (0..4)
            .flat_map(|a| (a + 1..4).map(move |b| (a, b, N)))
            .collect();
        let g = SignedGraph::from_edges(4, &edges).unwrap();
        assert!(!solve_k_delta(&g, 4, None).unwrap().found());
    }

    #[test]
    fn finds_pairs_in_negative_cycle() {
        let edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6, N)).collect();
        let g = SignedGraph::from_edges(6, &edges).unwrap();
        assert_eq!(solve_k_delta(&g, 6, None).unwrap().size(), Some(2));
        assert_eq!(solve_k_delta(&g, 1, None).unwrap().size(), None);
    }

    #[test]
    fn required_vertex() {
        let g = SignedGraph::from_edges(3, &[(0, 1, P), (1, 2, N), (0, 2, N)]).unwrap();
        let r = solve_k_delta(&g, 3, Some(2)).unwrap();
        assert!(r.witness.unwrap().contains(&2));
    }
}

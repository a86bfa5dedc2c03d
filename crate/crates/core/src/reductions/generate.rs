use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Complete graph on parts of the given sizes, positive inside parts and
/// negative between them. Vertices `1..n` are numbered part by part.
pub fn gen_k_balanced_complete(sizes: &[usize]) -> Result<SignedGraph> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::InvalidArgument("part sizes must be positive".into()));
    }
    if sizes.len() == 1 {
        return Err(Error::SinglePartAllPositive);
    }
    let part: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
        .collect();
    let n = part.len();
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            let sign = if part[u] == part[v] {
                Sign::Positive
            } else {
                Sign::Negative
            };
            edges.push((u, v, sign));
        }
    }
    SignedGraph::with_labels(labels(n), &edges)
}

/// Each pair is an edge with probability `p_edge`, negative with probability
/// `p_neg`. Vertices are labelled `1..n`.
pub fn gen_random(n: usize, p_edge: f64, p_neg: f64, seed: u64) -> Result<SignedGraph> {
    for p in [p_edge, p_neg] {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidArgument(format!(
                "probability {p} outside [0, 1]"
            )));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p_edge) {
                let sign = if rng.gen_bool(p_neg) {
                    Sign::Negative
                } else {
                    Sign::Positive
                };
                edges.push((u, v, sign));
            }
        }
    }
    SignedGraph::with_labels(labels(n), &edges)
}

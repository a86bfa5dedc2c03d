use crate::error::{Error, Result};
use crate::graph::Sign;

use super::{ReductionOutput, Tagged, ROLE_ORIGINAL};

/// Simple unsigned graph with labelled vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnsignedGraph {
    pub labels: Vec<String>,
    /// Sorted pairs `u < v`.
    pub edges: Vec<(usize, usize)>,
}

impl UnsignedGraph {
    /// Vertices labelled `0..n`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut canon: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::UnknownVertex(u.max(v).to_string()));
            }
            if u == v {
                return Err(Error::SelfLoop(u.to_string()));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge {
                u: w[0].0.to_string(),
                v: w[0].1.to_string(),
            });
        }
        Ok(Self {
            labels: (0..n).map(|i| i.to_string()).collect(),
            edges: canon,
        })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n()];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// `u v` per line; a single token declares a vertex; `#` comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut index = std::collections::HashMap::new();
        let mut edges = Vec::new();
        let mut id = |s: &str, labels: &mut Vec<String>| -> usize {
            *index.entry(s.to_string()).or_insert_with(|| {
                labels.push(s.to_string());
                labels.len() - 1
            })
        };
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            match line.split_whitespace().collect::<Vec<_>>().as_slice() {
                [v] => {
                    id(v, &mut labels);
                }
                [u, v] => {
                    if u == v {
                        return Err(Error::SelfLoop(u.to_string()));
                    }
                    let a = id(u, &mut labels);
                    let b = id(v, &mut labels);
                    edges.push((a, b));
                }
                _ => {
                    return Err(Error::MalformedLine {
                        line: i + 1,
                        content: raw.to_string(),
                    })
                }
            }
        }
        let mut g = Self::new(labels.len(), &edges).map_err(|e| match e {
            Error::DuplicateEdge { u, v } => Error::DuplicateEdge {
                u: labels[u.parse::<usize>().unwrap()].clone(),
                v: labels[v.parse::<usize>().unwrap()].clone(),
            },
            other => other,
        })?;
        g.labels = labels;
        Ok(g)
    }
}

/// Unsigned defensive alliance: `|N[v] ∩ A| ≥ |N(v) ∖ A|` for all `v ∈ A`.
pub fn is_unsigned_alliance(g: &UnsignedGraph, a: &[usize]) -> bool {
    if a.is_empty() {
        return false;
    }
    let mut inside = vec![false; g.n()];
    a.iter().for_each(|&v| inside[v] = true);
    let mut within = vec![0usize; g.n()];
    let deg = g.degrees();
    for &(u, v) in &g.edges {
        if inside[u] && inside[v] {
            within[u] += 1;
            within[v] += 1;
        }
    }
    a.iter().all(|&v| within[v] + 1 >= deg[v] - within[v])
}

/// Positive copy of `G`; each vertex `v` gets `⌈(deg(v)+1)/2⌉` negative
/// 4-cliques, each joined to `v` by one negative edge. Original vertices keep
/// their indices and labels.
pub fn unsigned_to_signed(g: &UnsignedGraph) -> Result<ReductionOutput> {
    let mut t = Tagged::new();
    for label in &g.labels {
        t.add(ROLE_ORIGINAL, label.clone())?;
    }
    for &(u, v) in &g.edges {
        t.edge(u, v, Sign::Positive)?;
    }
    for (v, d) in g.degrees().into_iter().enumerate() {
        for _ in 0..(d + 2) / 2 {
            t.guard(v)?;
        }
    }
    Ok(t.finish(None, None))
}

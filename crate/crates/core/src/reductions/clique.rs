use crate::error::{Error, Result};
use crate::graph::Sign;

use super::{ReductionOutput, Tagged, UnsignedGraph, ROLE_EDGE_VERTEX, ROLE_ORIGINAL};

/// Each edge `uv` becomes a vertex `ê` joined positively to `u` and `v`.
/// Original vertices carry `k` small negative 4-cliques and edge-vertices
/// three. Budget `k + k(k−1)/2`.
pub fn clique_to_minda(g: &UnsignedGraph, k: usize) -> Result<ReductionOutput> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "clique size {k} must be at least 2"
        )));
    }
    let mut t = Tagged::new();
    for label in &g.labels {
        t.add(ROLE_ORIGINAL, label.clone())?;
    }
    let mut hats = Vec::with_capacity(g.edges.len());
    for &(u, v) in &g.edges {
        let e = t.add(
            ROLE_EDGE_VERTEX,
            format!("{ROLE_EDGE_VERTEX}:{}-{}", g.labels[u], g.labels[v]),
        )?;
        t.edge(u, e, Sign::Positive)?;
        t.edge(v, e, Sign::Positive)?;
        hats.push(e);
    }
    for v in 0..g.n() {
        for _ in 0..k {
            t.guard(v)?;
        }
    }
    for e in hats {
        for _ in 0..3 {
            t.guard(e)?;
        }
    }
    Ok(t.finish(None, Some(k + k * (k - 1) / 2)))
}

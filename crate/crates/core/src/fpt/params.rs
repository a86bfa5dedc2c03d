//! Structural parameters of a signed graph.

use serde::Serialize;

use crate::graph::SignedGraph;

use super::snd::snd_partition;
use super::treedec::TreeDecomposition;

/// Exact vertex cover search is attempted up to this size.
pub const EXACT_VC_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexCover {
    pub size: usize,
    pub exact: bool,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParameterReport {
    pub n: usize,
    pub positive_edges: usize,
    pub negative_edges: usize,
    pub max_degree: usize,
    pub min_negative_degree: usize,
    pub snd: usize,
    pub vertex_cover: VertexCover,
    /// `3^vc + vc`, present when the cover is exact.
    pub snd_bound: Option<u128>,
    pub treewidth_upper_bound: usize,
    pub balanced: bool,
    pub clusterable: bool,
    pub clusters: Option<usize>,
}

fn cover_within(adj: &[Vec<usize>], alive: &mut [bool], k: usize, chosen: &mut Vec<usize>) -> bool {
    let live_degree = |v: usize, alive: &[bool]| adj[v].iter().filter(|&&w| alive[w]).count();
    let pick = (0..adj.len())
        .filter(|&v| alive[v])
        .max_by_key(|&v| (live_degree(v, alive), std::cmp::Reverse(v)));
    let Some(v) = pick.filter(|&v| live_degree(v, alive) > 0) else {
        return true;
    };
    if k == 0 {
        return false;
    }
    alive[v] = false;
    chosen.push(v);
    if cover_within(adj, alive, k - 1, chosen) {
        return true;
    }
    chosen.pop();
    alive[v] = true;
    let around: Vec<usize> = adj[v].iter().copied().filter(|&w| alive[w]).collect();
    if around.len() <= k {
        for &w in &around {
            alive[w] = false;
            chosen.push(w);
        }
        alive[v] = false;
        if cover_within(adj, alive, k - around.len(), chosen) {
            return true;
        }
        alive[v] = true;
        for &w in &around {
            alive[w] = true;
            chosen.pop();
        }
    }
    false
}

/// Minimum vertex cover of the underlying graph when it has at most `limit`
/// vertices; otherwise both endpoints of a maximal matching.
pub fn vertex_cover(g: &SignedGraph, limit: usize) -> VertexCover {
    let adj: Vec<Vec<usize>> = (0..g.n())
        .map(|v| g.neighbors(v).map(|(w, _)| w).collect())
        .collect();
    for k in 0..=limit {
        let mut alive = vec![true; g.n()];
        let mut chosen = Vec::new();
        if cover_within(&adj, &mut alive, k, &mut chosen) {
            chosen.sort_unstable();
            return VertexCover {
                size: chosen.len(),
                exact: true,
                vertices: chosen,
            };
        }
    }
    let mut covered = vec![false; g.n()];
    for e in g.edges() {
        if !covered[e.u] && !covered[e.v] {
            covered[e.u] = true;
            covered[e.v] = true;
        }
    }
    let vertices: Vec<usize> = (0..g.n()).filter(|&v| covered[v]).collect();
    VertexCover {
        size: vertices.len(),
        exact: false,
        vertices,
    }
}

pub fn analyze_parameters(g: &SignedGraph) -> ParameterReport {
    let snd = snd_partition(g).d();
    let vc = vertex_cover(g, EXACT_VC_LIMIT);
    let snd_bound = vc
        .exact
        .then(|| 3u128.pow(vc.size as u32) + vc.size as u128);
    if let Some(bound) = snd_bound {
        assert!(
            snd as u128 <= bound,
            "snd {snd} exceeds 3^vc + vc = {bound}"
        );
    }
    let clusters = g.clustering_partition().map(|p| p.k());
    ParameterReport {
        n: g.n(),
        positive_edges: g.positive_edge_count(),
        negative_edges: g.negative_edge_count(),
        max_degree: g.max_degree(),
        min_negative_degree: g.min_neg_degree(),
        snd,
        vertex_cover: vc,
        snd_bound,
        treewidth_upper_bound: TreeDecomposition::heuristic(g).width(),
        balanced: g.is_balanced().is_some(),
        clusterable: clusters.is_some(),
        clusters,
    }
}

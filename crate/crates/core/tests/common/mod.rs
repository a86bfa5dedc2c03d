#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use signed_alliance::fpt::TreeDecomposition;
use signed_alliance::graph::Sign;
use signed_alliance::SignedGraph;

pub fn fixture(name: &str) -> SignedGraph {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name);
    signed_alliance::io::read_graph(&path).unwrap()
}

pub fn ids(g: &SignedGraph, labels: &[&str]) -> Vec<usize> {
    g.resolve(labels).unwrap()
}

/// The two alliance conditions evaluated straight from the edge list.
pub fn defensive(g: &SignedGraph, set: &[usize]) -> bool {
    if set.is_empty() {
        return false;
    }
    let inside = |v: usize| set.contains(&v);
    set.iter().all(|&v| {
        let (mut pos_in, mut neg_in, mut neg_out) = (0i64, 0i64, 0i64);
        for e in g.edges() {
            if e.u != v && e.v != v {
                continue;
            }
            let w = if e.u == v { e.v } else { e.u };
            match (e.sign, inside(w)) {
                (Sign::Positive, true) => pos_in += 1,
                (Sign::Negative, true) => neg_in += 1,
                (Sign::Negative, false) => neg_out += 1,
                (Sign::Positive, false) => {}
            }
        }
        pos_in + 1 >= neg_in && pos_in + 1 >= neg_out
    })
}

/// Smallest alliance size over all `2^n` subsets.
pub fn exhaustive_min(g: &SignedGraph, required: Option<usize>) -> Option<usize> {
    let n = g.n();
    assert!(n <= 16);
    let mut best: Option<usize> = None;
    for bits in 1u32..1 << n {
        let size = bits.count_ones() as usize;
        if best.is_some_and(|b| size >= b) {
            continue;
        }
        if required.is_some_and(|r| bits >> r & 1 == 0) {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|&v| bits >> v & 1 == 1).collect();
        if defensive(g, &set) {
            best = Some(size);
        }
    }
    best
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random graph on `n` vertices with up to `tries` edge attempts, keeping the
/// maximum degree at most `max_deg`.
pub fn random_bounded(
    r: &mut ChaCha8Rng,
    n: usize,
    max_deg: usize,
    tries: usize,
    p_neg: f64,
) -> SignedGraph {
    let mut deg = vec![0; n];
    let mut edges: Vec<(usize, usize, Sign)> = Vec::new();
    for _ in 0..tries {
        if n < 2 {
            break;
        }
        let u = r.gen_range(0..n);
        let v = r.gen_range(0..n);
        if u == v || deg[u] >= max_deg || deg[v] >= max_deg {
            continue;
        }
        if edges
            .iter()
            .any(|&(a, b, _)| (a, b) == (u.min(v), u.max(v)))
        {
            continue;
        }
        let sign = if r.gen_bool(p_neg) {
            Sign::Negative
        } else {
            Sign::Positive
        };
        edges.push((u.min(v), u.max(v), sign));
        deg[u] += 1;
        deg[v] += 1;
    }
    SignedGraph::from_edges(n, &edges).unwrap()
}

/// All signed graphs on `n` vertices with maximum degree at most `max_deg`
/// (each pair absent, positive or negative).
pub fn all_graphs(n: usize, max_deg: usize) -> Vec<SignedGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let total = 3usize.pow(pairs.len() as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut edges = Vec::new();
        let mut deg = vec![0; n];
        for &(a, b) in &pairs {
            match c % 3 {
                1 => edges.push((a, b, Sign::Positive)),
                2 => edges.push((a, b, Sign::Negative)),
                _ => {}
            }
            if c % 3 != 0 {
                deg[a] += 1;
                deg[b] += 1;
            }
            c /= 3;
        }
        if deg.iter().all(|&d| d <= max_deg) {
            out.push(SignedGraph::from_edges(n, &edges).unwrap());
        }
    }
    out
}

/// Fewest sign flips among edges incident to `d` that make `d` an alliance,
/// by trying flip sets in increasing size.
pub fn exhaustive_min_flips(g: &SignedGraph, d: &[usize], k_max: usize) -> Option<usize> {
    let incident: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|e| d.contains(&e.u) || d.contains(&e.v))
        .map(|e| (e.u, e.v))
        .collect();
    let m = incident.len();
    assert!(m <= 20);
    let mut best: Option<usize> = None;
    for bits in 0u32..1 << m {
        let size = bits.count_ones() as usize;
        if size > k_max || best.is_some_and(|b| size >= b) {
            continue;
        }
        let flips: Vec<(usize, usize)> = (0..m)
            .filter(|&i| bits >> i & 1 == 1)
            .map(|i| incident[i])
            .collect();
        if defensive(&g.flipped(&flips).unwrap(), d) {
            best = Some(size);
        }
    }
    best
}

/// Decomposition from eliminating vertices in `order`.
pub fn elimination_td(g: &SignedGraph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj: Vec<std::collections::BTreeSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).map(|(w, _)| w).collect())
        .collect();
    let mut bags = Vec::new();
    let mut tree = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<usize> = adj[v].iter().copied().filter(|&w| pos[w] > i).collect();
        for &a in &later {
            for &b in &later {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
        let mut bag = later.clone();
        bag.push(v);
        bags.push(bag);
        match later.iter().map(|&w| pos[w]).min() {
            Some(next) => tree.push((i, next)),
            None if i + 1 < n => tree.push((i, i + 1)),
            None => {}
        }
    }
    TreeDecomposition { bags, tree }
}

//! Upper degree-constrained subgraph via reduction to matching.
//!
//! Every vertex `v` gets `min(u(v), deg(v))` copies and every usable edge
//! `ab` becomes a path `copies(a) – e_a – e_b – copies(b)`. A maximum matching
//! covers each edge gadget once or twice; gadgets matched twice form a maximum
//! subgraph respecting the bounds.

use super::matching::max_matching;

/// Maximum subset of `edges` with `deg_H(v) ≤ bound[v]`.
pub fn udcs_solve(edges: &[(usize, usize)], bound: &[usize]) -> Vec<(usize, usize)> {
    let usable: Vec<(usize, usize)> = edges
        .iter()
        .copied()
        .filter(|&(a, b)| bound[a] > 0 && bound[b] > 0)
        .collect();
    let mut deg = vec![0usize; bound.len()];
    for &(a, b) in &usable {
        deg[a] += 1;
        deg[b] += 1;
    }
    let mut first_copy = vec![0usize; bound.len()];
    let mut copies = vec![0usize; bound.len()];
    let mut next = 0;
    for v in 0..bound.len() {
        first_copy[v] = next;
        copies[v] = bound[v].min(deg[v]);
        next += copies[v];
    }
    let gadget_base = next;
    let total = gadget_base + 2 * usable.len();
    let mut gadget_edges = Vec::new();
    for (i, &(a, b)) in usable.iter().enumerate() {
        let (ea, eb) = (gadget_base + 2 * i, gadget_base + 2 * i + 1);
        gadget_edges.push((ea, eb));
        for c in 0..copies[a] {
            gadget_edges.push((first_copy[a] + c, ea));
        }
        for c in 0..copies[b] {
            gadget_edges.push((first_copy[b] + c, eb));
        }
    }
    let mate = max_matching(total, &gadget_edges);
    usable
        .iter()
        .enumerate()
        .filter(|&(i, _)| {
            let (ea, eb) = (gadget_base + 2 * i, gadget_base + 2 * i + 1);
            matches!(mate[ea], Some(w) if w < gadget_base)
                && matches!(mate[eb], Some(w) if w < gadget_base)
        })
        .map(|(_, &e)| e)
        .collect()
}

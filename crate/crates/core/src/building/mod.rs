//! Minimum edge-flip plans that turn a target set into a defensive alliance.
//!
//! The pipeline exhausts the reduction rule (flips forced around vertices whose
//! outside negative degree is too large), computes per-vertex flip demands
//! `b(v)` for the remaining violators, covers them with a maximum
//! degree-constrained subgraph of negative edges inside the target, and tops
//! up deficient vertices with further inside negative edges.

pub mod matching;
pub mod udcs;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{pair, Sign, SignedGraph};
use crate::verify::check_alliance;

pub use udcs::udcs_solve;

/// How many outside negative edges one firing of the reduction rule flips.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReductionMode {
    /// Fires when `z_v ≥ 0` and flips `z_v` outside edges.
    Literal,
    /// Fires when `z_v ≥ 1` and flips `z_v − 1` outside edges.
    #[default]
    Corrected,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Phase {
    Reduction,
    Udcs,
    Augmentation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlannedFlip {
    pub edge: (usize, usize),
    pub phase: Phase,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FlipPlan {
    pub flips: Vec<PlannedFlip>,
}

impl FlipPlan {
    pub fn total(&self) -> usize {
        self.flips.len()
    }

    pub fn count(&self, phase: Phase) -> usize {
        self.flips.iter().filter(|f| f.phase == phase).count()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.flips.iter().map(|f| f.edge).collect()
    }

    pub fn to_json(&self, g: &SignedGraph) -> Value {
        json!({
            "total": self.total(),
            "phase_breakdown": {
                "reduction": self.count(Phase::Reduction),
                "udcs": self.count(Phase::Udcs),
                "augmentation": self.count(Phase::Augmentation),
            },
            "flips": self.flips.iter().map(|f| json!({
                "u": g.label(f.edge.0),
                "v": g.label(f.edge.1),
                "phase": f.phase,
            })).collect::<Vec<_>>(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct Reduced {
    pub graph: SignedGraph,
    pub forced: Vec<(usize, usize)>,
}

impl Reduced {
    pub fn budget_spent(&self) -> usize {
        self.forced.len()
    }
}

fn target_mask(g: &SignedGraph, d: &[usize]) -> Result<Vec<bool>> {
    g.check_set(d)?;
    if d.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(g.mask(d))
}

/// `z_v = deg⁻_{D̄}(v) − deg⁺_D(v) − deg⁻_D(v)`.
fn z_value(g: &SignedGraph, v: usize, mask: &[bool]) -> i64 {
    let p = g.profile_in(v, mask);
    p.neg_out as i64 - p.pos_in as i64 - p.neg_in as i64
}

pub fn reduction_rule_exhaust(
    g: &SignedGraph,
    d: &[usize],
    mode: ReductionMode,
) -> Result<Reduced> {
    let mask = target_mask(g, d)?;
    let mut members: Vec<usize> = d.to_vec();
    members.sort_unstable();
    members.dedup();
    let mut graph = g.clone();
    let mut forced = Vec::new();
    'outer: loop {
        for &v in &members {
            let z = z_value(&graph, v, &mask);
            let (threshold, outside) = match mode {
                ReductionMode::Literal => (0, z),
                ReductionMode::Corrected => (1, z - 1),
            };
            if z < threshold {
                continue;
            }
            let mut flips: Vec<(usize, usize)> = graph
                .neg_neighbors(v)
                .iter()
                .filter(|&&w| mask[w])
                .map(|&w| pair(v, w))
                .collect();
            flips.extend(
                graph
                    .neg_neighbors(v)
                    .iter()
                    .filter(|&&w| !mask[w])
                    .take(outside.max(0) as usize)
                    .map(|&w| pair(v, w)),
            );
            if flips.is_empty() {
                continue;
            }
            graph = graph.flipped(&flips)?;
            forced.extend(flips);
            continue 'outer;
        }
        break;
    }
    Ok(Reduced { graph, forced })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViolationBounds {
    /// Members of the target violating a condition, ascending.
    pub violators: Vec<usize>,
    /// Indexed by vertex; zero off the violator set.
    pub b: Vec<usize>,
}

/// Flip demands of the violators; requires that no member still needs outside flips.
pub fn violation_bounds(g: &SignedGraph, d: &[usize]) -> Result<ViolationBounds> {
    let mask = target_mask(g, d)?;
    let mut violators = Vec::new();
    let mut b = vec![0usize; g.n()];
    for v in (0..g.n()).filter(|&v| mask[v]) {
        let p = g.profile_in(v, &mask);
        let (pin, nin, nout) = (p.pos_in as i64, p.neg_in as i64, p.neg_out as i64);
        if nout > pin + nin + 1 {
            return Err(Error::PreconditionViolated(format!(
                "reduction rule not exhausted at {}",
                g.label(v)
            )));
        }
        if pin + 1 < nin.max(nout) {
            let b1 = nout - pin - 1;
            let b2 = (nin - pin - 1 + 1).div_euclid(2);
            violators.push(v);
            b[v] = b1.max(b2) as usize;
        }
    }
    Ok(ViolationBounds { violators, b })
}

/// Minimum flip plan for `d`, verified before it is returned.
pub fn min_flip_plan(g: &SignedGraph, d: &[usize], mode: ReductionMode) -> Result<FlipPlan> {
    let reduced = reduction_rule_exhaust(g, d, mode)?;
    let h = &reduced.graph;
    let mask = h.mask(d);
    let bounds = violation_bounds(h, d)?;
    let inside_negative: Vec<(usize, usize)> = h
        .edges()
        .iter()
        .filter(|e| e.sign == Sign::Negative && mask[e.u] && mask[e.v])
        .map(|e| e.key())
        .collect();
    let chosen = udcs_solve(&inside_negative, &bounds.b);
    let mut used: std::collections::HashSet<(usize, usize)> = chosen.iter().copied().collect();
    let mut deg = vec![0usize; h.n()];
    for &(a, b) in &chosen {
        deg[a] += 1;
        deg[b] += 1;
    }
    let mut augment = Vec::new();
    for &v in &bounds.violators {
        for &x in h.neg_neighbors(v) {
            if deg[v] >= bounds.b[v] {
                break;
            }
            let e = pair(v, x);
            if mask[x] && !used.contains(&e) {
                used.insert(e);
                deg[v] += 1;
                deg[x] += 1;
                augment.push(e);
            }
        }
        if deg[v] < bounds.b[v] {
            return Err(Error::InternalVerificationFailed(format!(
                "not enough negative edges inside the target at {}",
                g.label(v)
            )));
        }
    }
    let mut flips: Vec<PlannedFlip> = reduced
        .forced
        .iter()
        .map(|&edge| PlannedFlip {
            edge,
            phase: Phase::Reduction,
        })
        .collect();
    flips.extend(chosen.iter().map(|&edge| PlannedFlip {
        edge,
        phase: Phase::Udcs,
    }));
    flips.extend(augment.iter().map(|&edge| PlannedFlip {
        edge,
        phase: Phase::Augmentation,
    }));
    let plan = FlipPlan { flips };
    let report = check_alliance(&g.flipped(&plan.edges())?, d)?;
    if !report.valid {
        return Err(Error::InternalVerificationFailed(format!(
            "plan of {} flips leaves violators",
            plan.total()
        )));
    }
    Ok(plan)
}

/// The minimum plan if it fits within budget `k`.
pub fn build_alliance(
    g: &SignedGraph,
    d: &[usize],
    k: usize,
    mode: ReductionMode,
) -> Result<Option<FlipPlan>> {
    let plan = min_flip_plan(g, d, mode)?;
    Ok((plan.total() <= k).then_some(plan))
}

fn flips_make_alliance(g: &SignedGraph, d: &[usize], t: &[(usize, usize)]) -> Result<bool> {
    Ok(check_alliance(&g.flipped(t)?, d)?.valid)
}

/// Exchanges an outside flip `vy` for an inside flip `vx` of the same vertex.
pub fn swap_preserves(
    g: &SignedGraph,
    d: &[usize],
    t: &[(usize, usize)],
    vx: (usize, usize),
    vy: (usize, usize),
) -> Result<Vec<(usize, usize)>> {
    let mask = target_mask(g, d)?;
    let t: Vec<(usize, usize)> = t.iter().map(|&(a, b)| pair(a, b)).collect();
    let (vx, vy) = (pair(vx.0, vx.1), pair(vy.0, vy.1));
    let fail = |msg: &str| Err(Error::PreconditionViolated(msg.to_string()));
    let shared = [vx.0, vx.1]
        .into_iter()
        .find(|&v| (v == vy.0 || v == vy.1) && mask[v]);
    let Some(v) = shared else {
        return fail("edges do not share a target vertex");
    };
    let x = if vx.0 == v { vx.1 } else { vx.0 };
    let y = if vy.0 == v { vy.1 } else { vy.0 };
    if g.sign(v, x) != Some(Sign::Negative) || t.contains(&vx) || !mask[x] {
        return fail("vx must be an unflipped negative edge inside the target");
    }
    if g.sign(v, y).is_none() || !t.contains(&vy) || mask[y] {
        return fail("vy must be a flipped edge leaving the target");
    }
    if !flips_make_alliance(g, d, &t)? {
        return fail("input flip set is not a solution");
    }
    let mut out: Vec<(usize, usize)> = t.into_iter().filter(|&e| e != vy).collect();
    out.push(vx);
    out.sort_unstable();
    if !flips_make_alliance(g, d, &out)? {
        return Err(Error::InternalVerificationFailed(
            "swapped flip set is not a solution".into(),
        ));
    }
    Ok(out)
}

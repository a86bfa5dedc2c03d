//! Signed neighborhood diversity: classes of vertices with identical signed
//! neighborhoods up to each other, and the integer program over them.

use serde_json::{json, Value};

use crate::error::Result;
use crate::graph::SignedGraph;
use crate::oracle::MinAllianceResult;

use super::ilp::{ilp_solve, IlpModel, Row, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SndPartition {
    /// Each class sorted; classes ordered by smallest member.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// Classes fully positively adjacent to class `i` (contains `i` iff `z⁺ᵢ`).
    pub pos_adj: Vec<Vec<usize>>,
    /// Classes fully negatively adjacent to class `i` (contains `i` iff `z⁻ᵢ`).
    pub neg_adj: Vec<Vec<usize>>,
    pub z_pos: Vec<bool>,
    pub z_neg: Vec<bool>,
}

impl SndPartition {
    pub fn d(&self) -> usize {
        self.classes.len()
    }

    pub fn to_json(&self, g: &SignedGraph) -> Value {
        json!({
            "snd": self.d(),
            "classes": self.classes.iter().map(|c| g.labels_of(c)).collect::<Vec<_>>(),
        })
    }
}

fn without(list: &[usize], x: usize) -> impl Iterator<Item = usize> + '_ {
    list.iter().copied().filter(move |&w| w != x)
}

/// `N⁺(v)∖{u} = N⁺(u)∖{v}` and `N⁻(v)∖{u} = N⁻(u)∖{v}`.
pub fn snd_equivalent(g: &SignedGraph, u: usize, v: usize) -> bool {
    without(g.pos_neighbors(v), u).eq(without(g.pos_neighbors(u), v))
        && without(g.neg_neighbors(v), u).eq(without(g.neg_neighbors(u), v))
}

pub fn snd_partition(g: &SignedGraph) -> SndPartition {
    let n = g.n();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0; n];
    for v in 0..n {
        match classes.iter().position(|c| snd_equivalent(g, c[0], v)) {
            Some(i) => {
                classes[i].push(v);
                class_of[v] = i;
            }
            None => {
                class_of[v] = classes.len();
                classes.push(vec![v]);
            }
        }
    }
    let d = classes.len();
    let mut pos_adj = vec![Vec::new(); d];
    let mut neg_adj = vec![Vec::new(); d];
    let mut z_pos = vec![false; d];
    let mut z_neg = vec![false; d];
    for i in 0..d {
        let rep = classes[i][0];
        for j in 0..d {
            let other = if i == j {
                match classes[i].get(1) {
                    Some(&w) => w,
                    None => continue,
                }
            } else {
                classes[j][0]
            };
            match g.sign(rep, other) {
                Some(crate::graph::Sign::Positive) => {
                    pos_adj[i].push(j);
                    z_pos[i] |= i == j;
                }
                Some(crate::graph::Sign::Negative) => {
                    neg_adj[i].push(j);
                    z_neg[i] |= i == j;
                }
                None => {}
            }
        }
    }
    SndPartition {
        classes,
        class_of,
        pos_adj,
        neg_adj,
        z_pos,
        z_neg,
    }
}

/// Variables `x_0..x_{d-1}` (members taken per class) then `w_0..w_{d-1}`.
/// Rows per class `i`, relaxed by `2n(1 − w_i)` when the class is unused:
///
/// ```text
/// Σ_{N⁺ᵢ} x_j + 1 − z⁺ᵢ ≥ Σ_{N⁻ᵢ} x_j − z⁻ᵢ
/// Σ_{N⁺ᵢ} x_j + 1 − z⁺ᵢ ≥ Σ_{N⁻ᵢ} (|C_j| − x_j)
/// w_i ≤ x_i ≤ |C_i| w_i
/// ```
///
/// plus `Σ x_i ≥ 1`, minimizing `Σ x_i`.
pub fn ilp_build(p: &SndPartition, n: usize) -> IlpModel {
    let d = p.d();
    let big = 2 * n as i64;
    let mut vars: Vec<Var> = (0..d)
        .map(|i| Var::new(format!("x{}", i + 1), 0, p.classes[i].len() as i64))
        .collect();
    vars.extend((0..d).map(|i| Var::new(format!("w{}", i + 1), 0, 1)));
    let mut rows = Vec::new();
    for i in 0..d {
        let (zp, zn) = (p.z_pos[i] as i64, p.z_neg[i] as i64);
        let mut internal = Vec::new();
        let mut external = Vec::new();
        for &j in &p.pos_adj[i] {
            internal.push((j, 1));
            external.push((j, 1));
        }
        for &j in &p.neg_adj[i] {
            internal.push((j, -1));
            external.push((j, 1));
        }
        internal.push((d + i, -big));
        external.push((d + i, -big));
        let outside: i64 = p.neg_adj[i]
            .iter()
            .map(|&j| p.classes[j].len() as i64)
            .sum();
        rows.push(Row::new(internal, zp - zn - 1 - big));
        rows.push(Row::new(external, outside + zp - 1 - big));
        rows.push(Row::new(vec![(i, 1), (d + i, -1)], 0));
        rows.push(Row::new(
            vec![(d + i, p.classes[i].len() as i64), (i, -1)],
            0,
        ));
    }
    rows.push(Row::new((0..d).map(|i| (i, 1)).collect(), 1));
    let mut objective = vec![0; 2 * d];
    objective[..d].iter_mut().for_each(|c| *c = 1);
    IlpModel {
        vars,
        rows,
        objective,
        branch_order: (d..2 * d).chain(0..d).collect(),
    }
}

/// Minimum alliance through the class ILP; members are the lowest-index
/// vertices of each class (preferring `required` in its own class).
pub fn snd_min_alliance(g: &SignedGraph, required: Option<usize>) -> Result<MinAllianceResult> {
    if let Some(r) = required {
        g.check_vertex(r)?;
    }
    let p = snd_partition(g);
    let mut model = ilp_build(&p, g.n());
    if let Some(r) = required {
        model.rows.push(Row::new(vec![(p.class_of[r], 1)], 1));
    }
    let Some(x) = ilp_solve(&model) else {
        return Ok(MinAllianceResult::none());
    };
    let mut witness = Vec::new();
    for (i, class) in p.classes.iter().enumerate() {
        let take = x[i] as usize;
        let mut ordered = class.clone();
        if let Some(r) = required.filter(|&r| p.class_of[r] == i) {
            ordered.retain(|&v| v != r);
            ordered.insert(0, r);
        }
        witness.extend_from_slice(&ordered[..take]);
    }
    Ok(MinAllianceResult::found_set(witness))
}

//! Dynamic programming over a nice tree decomposition, parameterized by
//! treewidth and maximum degree.
//!
//! A table entry at node `t` describes a partial solution `S_t ⊆ Y_t` (the
//! vertices introduced below `t`) by its trace `A_t = S_t ∩ X_t`, a nonempty
//! flag, and for every `v ∈ A_t` the pair
//! `Δⁱ = deg⁺_{S_t}(v) − deg⁻_{S_t}(v) + 1` and `Δᵉ = deg_{S_t}(v) − deg⁻(v) + 1`.
//! Both must be nonnegative when `v` is forgotten. Only realizable
//! configurations are stored.

use std::collections::BTreeMap;
use std::rc::Rc;

use crate::error::Result;
use crate::graph::{Sign, SignedGraph};
use crate::oracle::MinAllianceResult;

use super::treedec::{NiceTreeDecomposition, NodeKind};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Config {
    pub nonempty: bool,
    /// `(v, Δⁱ, Δᵉ)` sorted by vertex.
    pub members: Vec<(usize, i32, i32)>,
}

#[derive(Debug)]
enum Trail {
    Nil,
    Add(usize, Rc<Trail>),
    Union(Rc<Trail>, Rc<Trail>),
}

impl Trail {
    fn collect(self: &Rc<Self>, out: &mut Vec<usize>) {
        let mut stack = vec![self.clone()];
        while let Some(t) = stack.pop() {
            match &*t {
                Trail::Nil => {}
                Trail::Add(v, rest) => {
                    out.push(*v);
                    stack.push(rest.clone());
                }
                Trail::Union(a, b) => {
                    stack.push(a.clone());
                    stack.push(b.clone());
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
struct Entry {
    size: usize,
    trail: Rc<Trail>,
}

pub type Table = BTreeMap<Config, usize>;

fn offer(table: &mut BTreeMap<Config, Entry>, key: Config, entry: Entry) {
    match table.get(&key) {
        Some(old) if old.size <= entry.size => {}
        _ => {
            table.insert(key, entry);
        }
    }
}

/// `(Δⁱ, Δᵉ)` of `v` counting only neighbors inside `set`.
fn internal_pair(g: &SignedGraph, v: usize, set: &[usize]) -> (i32, i32) {
    let (mut pos, mut neg) = (0i32, 0i32);
    for &w in set {
        match g.sign(v, w) {
            Some(Sign::Positive) => pos += 1,
            Some(Sign::Negative) => neg += 1,
            None => {}
        }
    }
    (pos - neg + 1, pos + neg - g.neg_degree(v) as i32 + 1)
}

pub struct DpRun {
    pub result: MinAllianceResult,
    /// Table sizes per node, for diagnostics.
    pub table_sizes: Vec<usize>,
    /// Smallest and largest Δ value seen in any stored configuration.
    pub delta_range: Option<(i32, i32)>,
}

pub fn dp_treewidth_delta(
    g: &SignedGraph,
    ntd: &NiceTreeDecomposition,
) -> Result<MinAllianceResult> {
    Ok(dp_run(g, ntd, None)?.result)
}

pub fn dp_treewidth_delta_containing(
    g: &SignedGraph,
    ntd: &NiceTreeDecomposition,
    required: Option<usize>,
) -> Result<MinAllianceResult> {
    Ok(dp_run(g, ntd, required)?.result)
}

pub fn dp_run(
    g: &SignedGraph,
    ntd: &NiceTreeDecomposition,
    required: Option<usize>,
) -> Result<DpRun> {
    ntd.validate(g)?;
    if let Some(r) = required {
        g.check_vertex(r)?;
    }
    let nil = Rc::new(Trail::Nil);
    let mut tables: Vec<Option<BTreeMap<Config, Entry>>> = vec![None; ntd.nodes.len()];
    let mut table_sizes = vec![0; ntd.nodes.len()];
    let mut range: Option<(i32, i32)> = None;
    for t in ntd.post_order() {
        let node = &ntd.nodes[t];
        let mut table = BTreeMap::new();
        match node.kind {
            NodeKind::Leaf => {
                let key = Config {
                    nonempty: false,
                    members: Vec::new(),
                };
                table.insert(
                    key,
                    Entry {
                        size: 0,
                        trail: nil.clone(),
                    },
                );
            }
            NodeKind::Introduce(v) => {
                let child = tables[node.children[0]].take().expect("child computed");
                for (key, entry) in child {
                    let mut members: Vec<(usize, i32, i32)> = key
                        .members
                        .iter()
                        .map(|&(u, di, de)| match g.sign(u, v) {
                            Some(Sign::Positive) => (u, di + 1, de + 1),
                            Some(Sign::Negative) => (u, di - 1, de + 1),
                            None => (u, di, de),
                        })
                        .collect();
                    let mut set: Vec<usize> = key.members.iter().map(|m| m.0).collect();
                    set.push(v);
                    let (di, de) = internal_pair(g, v, &set);
                    members.push((v, di, de));
                    members.sort_unstable();
                    let with = Config {
                        nonempty: true,
                        members,
                    };
                    let grown = Entry {
                        size: entry.size + 1,
                        trail: Rc::new(Trail::Add(v, entry.trail.clone())),
                    };
                    offer(&mut table, with, grown);
                    offer(&mut table, key, entry);
                }
            }
            NodeKind::Forget(v) => {
                let child = tables[node.children[0]].take().expect("child computed");
                for (mut key, entry) in child {
                    match key.members.iter().position(|m| m.0 == v) {
                        Some(i) => {
                            let (_, di, de) = key.members[i];
                            if di < 0 || de < 0 {
                                continue;
                            }
                            key.members.remove(i);
                            offer(&mut table, key, entry);
                        }
                        None if required == Some(v) => {}
                        None => offer(&mut table, key, entry),
                    }
                }
            }
            NodeKind::Join => {
                let left = tables[node.children[0]].take().expect("child computed");
                let right = tables[node.children[1]].take().expect("child computed");
                let mut by_trace: BTreeMap<Vec<usize>, Vec<(&Config, &Entry)>> = BTreeMap::new();
                for (key, entry) in &right {
                    by_trace
                        .entry(key.members.iter().map(|m| m.0).collect())
                        .or_default()
                        .push((key, entry));
                }
                for (lk, le) in &left {
                    let trace: Vec<usize> = lk.members.iter().map(|m| m.0).collect();
                    let Some(partners) = by_trace.get(&trace) else {
                        continue;
                    };
                    let base: Vec<(i32, i32)> =
                        trace.iter().map(|&u| internal_pair(g, u, &trace)).collect();
                    for &(rk, re) in partners {
                        let members = lk
                            .members
                            .iter()
                            .zip(&rk.members)
                            .zip(&base)
                            .map(|((&(u, xi, xe), &(_, yi, ye)), &(bi, be))| {
                                (u, xi + yi - bi, xe + ye - be)
                            })
                            .collect();
                        let key = Config {
                            nonempty: lk.nonempty || rk.nonempty,
                            members,
                        };
                        let entry = Entry {
                            size: le.size + re.size - trace.len(),
                            trail: Rc::new(Trail::Union(le.trail.clone(), re.trail.clone())),
                        };
                        offer(&mut table, key, entry);
                    }
                }
            }
        }
        for key in table.keys() {
            for &(_, di, de) in &key.members {
                let (lo, hi) = range.unwrap_or((di, di));
                range = Some((lo.min(di).min(de), hi.max(di).max(de)));
            }
        }
        table_sizes[t] = table.len();
        tables[t] = Some(table);
    }
    let root = tables[ntd.root].take().expect("root computed");
    let best = root
        .into_iter()
        .filter(|(k, _)| k.nonempty && k.members.is_empty())
        .map(|(_, e)| e)
        .min_by_key(|e| e.size);
    let result = match best {
        Some(e) => {
            let mut w = Vec::new();
            e.trail.collect(&mut w);
            w.sort_unstable();
            w.dedup();
            MinAllianceResult::found_set(w)
        }
        None => MinAllianceResult::none(),
    };
    Ok(DpRun {
        result,
        table_sizes,
        delta_range: range,
    })
}

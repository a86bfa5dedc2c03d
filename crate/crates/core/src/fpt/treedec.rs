//! Tree decompositions: validation, a min-fill heuristic, the text exchange
//! format and conversion into nice form.
//!
//! File format (PACE-style, vertex tokens are graph labels):
//!
//! ```text
//! s td <bags> <max bag size> <vertices>
//! b 1 a b c
//! b 2 c d
//! 1 2
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{DecompositionFault, Error, Result};
use crate::graph::SignedGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<usize>>,
    pub tree: Vec<(usize, usize)>,
}

fn invalid(fault: DecompositionFault) -> Error {
    Error::InvalidDecomposition(fault)
}

impl TreeDecomposition {
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    pub fn validate(&self, g: &SignedGraph) -> Result<()> {
        let t = self.bags.len();
        for bag in &self.bags {
            if let Some(&v) = bag.iter().find(|&&v| v >= g.n()) {
                return Err(invalid(DecompositionFault::UnknownBagVertex(v.to_string())));
            }
        }
        let adj = self.adjacency()?;
        if t > 0 && (self.tree.len() != t - 1 || reachable(&adj, 0, |_| true).len() != t) {
            return Err(invalid(DecompositionFault::NotATree));
        }
        let sets: Vec<BTreeSet<usize>> = self
            .bags
            .iter()
            .map(|b| b.iter().copied().collect())
            .collect();
        for v in 0..g.n() {
            let holding: Vec<usize> = (0..t).filter(|&i| sets[i].contains(&v)).collect();
            let Some(&first) = holding.first() else {
                return Err(invalid(DecompositionFault::VertexUncovered(
                    g.label(v).into(),
                )));
            };
            if reachable(&adj, first, |i| sets[i].contains(&v)).len() != holding.len() {
                return Err(invalid(DecompositionFault::Disconnected(g.label(v).into())));
            }
        }
        for e in g.edges() {
            if !sets.iter().any(|s| s.contains(&e.u) && s.contains(&e.v)) {
                return Err(invalid(DecompositionFault::EdgeUncovered(
                    g.label(e.u).into(),
                    g.label(e.v).into(),
                )));
            }
        }
        Ok(())
    }

    fn adjacency(&self) -> Result<Vec<Vec<usize>>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.tree {
            if a >= adj.len() || b >= adj.len() || a == b {
                return Err(invalid(DecompositionFault::NotATree));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        Ok(adj)
    }

    /// Min-fill elimination ordering, ties broken by degree and then index.
    pub fn heuristic(g: &SignedGraph) -> TreeDecomposition {
        let n = g.n();
        let mut nbrs: Vec<BTreeSet<usize>> = (0..n)
            .map(|v| g.neighbors(v).map(|(w, _)| w).collect())
            .collect();
        let mut alive = vec![true; n];
        let mut order = Vec::with_capacity(n);
        let mut bags = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| alive[v])
                .min_by_key(|&v| (fill_in(&nbrs, v), nbrs[v].len(), v))
                .expect("a live vertex remains");
            let around: Vec<usize> = nbrs[v].iter().copied().collect();
            let mut bag = vec![v];
            bag.extend(&around);
            bag.sort_unstable();
            bags.push(bag);
            for &a in &around {
                nbrs[a].remove(&v);
                for &b in &around {
                    if a != b {
                        nbrs[a].insert(b);
                    }
                }
            }
            alive[v] = false;
            order.push(v);
        }
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let mut tree = Vec::new();
        let mut roots = Vec::new();
        for (i, bag) in bags.iter().enumerate() {
            let parent = bag
                .iter()
                .filter(|&&w| position[w] > i)
                .map(|&w| position[w])
                .min();
            match parent {
                Some(p) => tree.push((i, p)),
                None => roots.push(i),
            }
        }
        for pair in roots.windows(2) {
            tree.push((pair[0], pair[1]));
        }
        TreeDecomposition { bags, tree }
    }

    pub fn parse(text: &str, g: &SignedGraph) -> Result<TreeDecomposition> {
        let malformed = |msg: String| invalid(DecompositionFault::Malformed(msg));
        let mut declared = None;
        let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
        let mut tree = Vec::new();
        for raw in text.lines() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens[0] {
                "s" => {
                    if tokens.len() != 5 || tokens[1] != "td" {
                        return Err(malformed(format!("bad header {line:?}")));
                    }
                    let count: usize = tokens[2].parse().map_err(|_| malformed(line.into()))?;
                    declared = Some(count);
                    bags = vec![None; count];
                }
                "b" => {
                    let id: usize = tokens
                        .get(1)
                        .and_then(|t| t.parse().ok())
                        .filter(|&id| id >= 1 && id <= bags.len())
                        .ok_or_else(|| malformed(format!("bad bag line {line:?}")))?;
                    let mut bag = Vec::new();
                    for label in &tokens[2..] {
                        let v = g.index_of(label).map_err(|_| {
                            invalid(DecompositionFault::UnknownBagVertex(label.to_string()))
                        })?;
                        bag.push(v);
                    }
                    bag.sort_unstable();
                    bag.dedup();
                    bags[id - 1] = Some(bag);
                }
                _ => {
                    let ends: Vec<usize> = tokens.iter().filter_map(|t| t.parse().ok()).collect();
                    if tokens.len() != 2
                        || ends.len() != 2
                        || ends.iter().any(|&e| e == 0 || e > bags.len())
                    {
                        return Err(malformed(format!("bad tree edge {line:?}")));
                    }
                    tree.push((ends[0] - 1, ends[1] - 1));
                }
            }
        }
        if declared.is_none() {
            return Err(malformed("missing header".into()));
        }
        let bags = bags
            .into_iter()
            .enumerate()
            .map(|(i, b)| b.ok_or_else(|| malformed(format!("bag {} missing", i + 1))))
            .collect::<Result<Vec<_>>>()?;
        Ok(TreeDecomposition { bags, tree })
    }

    pub fn to_text(&self, g: &SignedGraph) -> String {
        let mut out = format!("s td {} {} {}\n", self.bags.len(), self.width() + 1, g.n());
        for (i, bag) in self.bags.iter().enumerate() {
            let _ = write!(out, "b {}", i + 1);
            for &v in bag {
                let _ = write!(out, " {}", g.label(v));
            }
            out.push('\n');
        }
        for &(a, b) in &self.tree {
            let _ = writeln!(out, "{} {}", a + 1, b + 1);
        }
        out
    }
}

fn fill_in(nbrs: &[BTreeSet<usize>], v: usize) -> usize {
    let around: Vec<usize> = nbrs[v].iter().copied().collect();
    let mut missing = 0;
    for (i, &a) in around.iter().enumerate() {
        for &b in &around[i + 1..] {
            if !nbrs[a].contains(&b) {
                missing += 1;
            }
        }
    }
    missing
}

fn reachable(adj: &[Vec<usize>], start: usize, keep: impl Fn(usize) -> bool) -> Vec<usize> {
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut out = vec![start];
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] && keep(y) {
                seen[y] = true;
                out.push(y);
                stack.push(y);
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NodeKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceNode {
    pub kind: NodeKind,
    /// Sorted.
    pub bag: Vec<usize>,
    pub children: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceTreeDecomposition {
    pub nodes: Vec<NiceNode>,
    pub root: usize,
}

impl NiceTreeDecomposition {
    pub fn width(&self) -> usize {
        self.nodes
            .iter()
            .map(|n| n.bag.len())
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    /// Node indices with every child before its parent.
    pub fn post_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((t, expanded)) = stack.pop() {
            if expanded {
                out.push(t);
            } else {
                stack.push((t, true));
                for &c in &self.nodes[t].children {
                    stack.push((c, false));
                }
            }
        }
        out
    }

    pub fn validate(&self, g: &SignedGraph) -> Result<()> {
        let not_nice = |msg: String| Err(invalid(DecompositionFault::NotNice(msg)));
        if !self.nodes[self.root].bag.is_empty() {
            return not_nice("root bag is not empty".into());
        }
        for (t, node) in self.nodes.iter().enumerate() {
            let child_bag = |i: usize| &self.nodes[node.children[i]].bag;
            let ok = match node.kind {
                NodeKind::Leaf => node.children.is_empty() && node.bag.is_empty(),
                NodeKind::Introduce(v) => {
                    node.children.len() == 1 && node.bag.contains(&v) && {
                        let mut expect = child_bag(0).clone();
                        expect.push(v);
                        expect.sort_unstable();
                        expect == node.bag
                    }
                }
                NodeKind::Forget(v) => {
                    node.children.len() == 1 && !node.bag.contains(&v) && {
                        let mut expect = node.bag.clone();
                        expect.push(v);
                        expect.sort_unstable();
                        expect == *child_bag(0)
                    }
                }
                NodeKind::Join => {
                    node.children.len() == 2
                        && *child_bag(0) == node.bag
                        && *child_bag(1) == node.bag
                }
            };
            if !ok {
                return not_nice(format!("node {t} ({:?}) is malformed", node.kind));
            }
        }
        let plain = TreeDecomposition {
            bags: self.nodes.iter().map(|n| n.bag.clone()).collect(),
            tree: self
                .nodes
                .iter()
                .enumerate()
                .flat_map(|(t, n)| n.children.iter().map(move |&c| (t, c)))
                .collect(),
        };
        plain.validate(g)
    }
}

struct Nicifier<'a> {
    td: &'a TreeDecomposition,
    adj: Vec<Vec<usize>>,
    nodes: Vec<NiceNode>,
}

impl Nicifier<'_> {
    fn push(&mut self, kind: NodeKind, bag: Vec<usize>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode {
            kind,
            bag,
            children,
        });
        self.nodes.len() - 1
    }

    fn introduce(&mut self, child: usize, v: usize) -> usize {
        let mut bag = self.nodes[child].bag.clone();
        bag.push(v);
        bag.sort_unstable();
        self.push(NodeKind::Introduce(v), bag, vec![child])
    }

    fn forget(&mut self, child: usize, v: usize) -> usize {
        let bag = self.nodes[child]
            .bag
            .iter()
            .copied()
            .filter(|&w| w != v)
            .collect();
        self.push(NodeKind::Forget(v), bag, vec![child])
    }

    /// Moves from the bag of `node` to `target` one vertex at a time.
    fn transition(&mut self, mut node: usize, target: &[usize]) -> usize {
        let current = self.nodes[node].bag.clone();
        for &v in current.iter().filter(|v| !target.contains(v)) {
            node = self.forget(node, v);
        }
        for &v in target.iter().filter(|v| !current.contains(v)) {
            node = self.introduce(node, v);
        }
        node
    }

    fn build(&mut self, t: usize, parent: Option<usize>) -> usize {
        let bag = self.td.bags[t].clone();
        let children: Vec<usize> = self.adj[t]
            .iter()
            .copied()
            .filter(|&c| Some(c) != parent)
            .collect();
        if children.is_empty() {
            let leaf = self.push(NodeKind::Leaf, Vec::new(), Vec::new());
            return self.transition(leaf, &bag);
        }
        let mut tops = Vec::new();
        for c in children {
            let sub = self.build(c, Some(t));
            tops.push(self.transition(sub, &bag));
        }
        let mut acc = tops[0];
        for &other in &tops[1..] {
            acc = self.push(NodeKind::Join, bag.clone(), vec![acc, other]);
        }
        acc
    }
}

/// Validated nice decomposition, from `external` or the min-fill heuristic.
pub fn nice_decomposition(
    g: &SignedGraph,
    external: Option<&TreeDecomposition>,
) -> Result<NiceTreeDecomposition> {
    let mut td = match external {
        Some(td) => {
            td.validate(g)?;
            td.clone()
        }
        None => TreeDecomposition::heuristic(g),
    };
    for bag in &mut td.bags {
        bag.sort_unstable();
        bag.dedup();
    }
    if td.bags.is_empty() {
        return Ok(NiceTreeDecomposition {
            nodes: vec![NiceNode {
                kind: NodeKind::Leaf,
                bag: Vec::new(),
                children: Vec::new(),
            }],
            root: 0,
        });
    }
    let adj = td.adjacency()?;
    let mut nicifier = Nicifier {
        td: &td,
        adj,
        nodes: Vec::new(),
    };
    let top = nicifier.build(0, None);
    let root = nicifier.transition(top, &[]);
    let ntd = NiceTreeDecomposition {
        nodes: nicifier.nodes,
        root,
    };
    ntd.validate(g)?;
    Ok(ntd)
}

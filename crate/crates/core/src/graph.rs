//! Signed graph model: labelled vertices, signed simple edges, degree queries
//! and balance structure.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

/// An edge stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    pub fn key(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn other(&self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// Orders an unordered pair.
pub fn pair(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// `(deg⁺_S(v), deg⁻_S(v), deg⁻ outside S)` for a vertex and a set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub pos_in: usize,
    pub neg_in: usize,
    pub neg_out: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClusterPartition {
    pub groups: Vec<Vec<usize>>,
}

impl ClusterPartition {
    pub fn k(&self) -> usize {
        self.groups.len()
    }
}

/// Immutable signed graph with dense vertex indices and string labels.
#[derive(Clone, Debug)]
pub struct SignedGraph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    pos: Vec<Vec<usize>>,
    neg: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl PartialEq for SignedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.edges == other.edges
    }
}

impl Eq for SignedGraph {}

#[derive(Debug, Default)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    edges: BTreeMap<(usize, usize), Sign>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the index of `label`, creating the vertex if needed.
    pub fn vertex(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), i);
        i
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize, sign: Sign) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(self.labels[u].clone()));
        }
        let key = pair(u, v);
        if self.edges.contains_key(&key) {
            return Err(Error::DuplicateEdge {
                u: self.labels[key.0].clone(),
                v: self.labels[key.1].clone(),
            });
        }
        self.edges.insert(key, sign);
        Ok(())
    }

    pub fn add_labeled_edge(&mut self, u: &str, v: &str, sign: Sign) -> Result<()> {
        let a = self.vertex(u);
        let b = self.vertex(v);
        self.add_edge(a, b, sign)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains_key(&pair(u, v))
    }

    pub fn build(self) -> SignedGraph {
        let n = self.labels.len();
        let mut pos = vec![Vec::new(); n];
        let mut neg = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(self.edges.len());
        for (&(u, v), &sign) in &self.edges {
            let lists = match sign {
                Sign::Positive => &mut pos,
                Sign::Negative => &mut neg,
            };
            lists[u].push(v);
            lists[v].push(u);
            edges.push(Edge { u, v, sign });
        }
        for list in pos.iter_mut().chain(neg.iter_mut()) {
            list.sort_unstable();
        }
        SignedGraph {
            labels: self.labels,
            index: self.index,
            pos,
            neg,
            edges,
        }
    }
}

impl SignedGraph {
    /// Graph on vertices labelled `0..n` with the given edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize, Sign)]) -> Result<SignedGraph> {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        Self::with_labels(labels, edges)
    }

    pub fn with_labels(labels: Vec<String>, edges: &[(usize, usize, Sign)]) -> Result<SignedGraph> {
        let mut b = GraphBuilder::new();
        for l in &labels {
            let before = b.vertex_count();
            if b.vertex(l) != before {
                return Err(Error::InvalidArgument(format!("duplicate label {l}")));
            }
        }
        for &(u, v, s) in edges {
            if u >= labels.len() || v >= labels.len() {
                return Err(Error::UnknownVertex(u.max(v).to_string()));
            }
            b.add_edge(u, v, s)?;
        }
        Ok(b.build())
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn positive_edge_count(&self) -> usize {
        self.edges
            .iter()
            .filter(|e| e.sign == Sign::Positive)
            .count()
    }

    pub fn negative_edge_count(&self) -> usize {
        self.edges.len() - self.positive_edge_count()
    }

    /// Edges in canonical `(u, v)` order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn labels_of(&self, set: &[usize]) -> Vec<String> {
        set.iter().map(|&v| self.labels[v].clone()).collect()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn resolve<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>> {
        labels.iter().map(|l| self.index_of(l.as_ref())).collect()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v.to_string()))
        }
    }

    pub fn check_set(&self, set: &[usize]) -> Result<()> {
        set.iter().try_for_each(|&v| self.check_vertex(v))
    }

    pub fn pos_neighbors(&self, v: usize) -> &[usize] {
        &self.pos[v]
    }

    pub fn neg_neighbors(&self, v: usize) -> &[usize] {
        &self.neg[v]
    }

    /// All neighbors with edge signs, positive ones first.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, Sign)> + '_ {
        self.pos[v]
            .iter()
            .map(|&w| (w, Sign::Positive))
            .chain(self.neg[v].iter().map(|&w| (w, Sign::Negative)))
    }

    pub fn pos_degree(&self, v: usize) -> usize {
        self.pos[v].len()
    }

    pub fn neg_degree(&self, v: usize) -> usize {
        self.neg[v].len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.pos[v].len() + self.neg[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// δ⁻(G); zero for the empty graph.
    pub fn min_neg_degree(&self) -> usize {
        (0..self.n()).map(|v| self.neg_degree(v)).min().unwrap_or(0)
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        if self.pos[u].binary_search(&v).is_ok() {
            Some(Sign::Positive)
        } else if self.neg[u].binary_search(&v).is_ok() {
            Some(Sign::Negative)
        } else {
            None
        }
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = pair(u, v);
        self.edges.binary_search_by(|e| e.key().cmp(&key)).ok()
    }

    /// Membership mask for a vertex set.
    pub fn mask(&self, set: &[usize]) -> Vec<bool> {
        let mut m = vec![false; self.n()];
        for &v in set {
            m[v] = true;
        }
        m
    }

    pub fn profile_in(&self, v: usize, mask: &[bool]) -> DegreeProfile {
        let pos_in = self.pos[v].iter().filter(|&&w| mask[w]).count();
        let neg_in = self.neg[v].iter().filter(|&&w| mask[w]).count();
        DegreeProfile {
            pos_in,
            neg_in,
            neg_out: self.neg[v].len() - neg_in,
        }
    }

    pub fn degree_profile(&self, v: usize, set: &[usize]) -> Result<DegreeProfile> {
        self.check_vertex(v)?;
        self.check_set(set)?;
        Ok(self.profile_in(v, &self.mask(set)))
    }

    /// Subgraph induced by `x`, keeping labels; vertices are renumbered in the order given.
    pub fn induced(&self, x: &[usize]) -> Result<SignedGraph> {
        self.check_set(x)?;
        let mut b = GraphBuilder::new();
        let mut local = vec![usize::MAX; self.n()];
        for &v in x {
            if local[v] == usize::MAX {
                local[v] = b.vertex(&self.labels[v]);
            }
        }
        for e in &self.edges {
            if local[e.u] != usize::MAX && local[e.v] != usize::MAX {
                b.add_edge(local[e.u], local[e.v], e.sign)?;
            }
        }
        Ok(b.build())
    }

    /// `G_T`: the same graph with the signs of the listed edges flipped.
    pub fn flipped(&self, flips: &[(usize, usize)]) -> Result<SignedGraph> {
        let mut signs: Vec<Sign> = self.edges.iter().map(|e| e.sign).collect();
        for &(u, v) in flips {
            let i = self.edge_index(u, v).ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "{}-{} is not an edge",
                    self.label_or_index(u),
                    self.label_or_index(v)
                ))
            })?;
            signs[i] = signs[i].flip();
        }
        Ok(self.with_signs(&signs))
    }

    /// Same vertices and edges with signs replaced (indexed like `edges()`).
    pub fn with_signs(&self, signs: &[Sign]) -> SignedGraph {
        let n = self.n();
        let mut pos = vec![Vec::new(); n];
        let mut neg = vec![Vec::new(); n];
        let mut edges = self.edges.clone();
        for (e, &s) in edges.iter_mut().zip(signs) {
            e.sign = s;
            let lists = match s {
                Sign::Positive => &mut pos,
                Sign::Negative => &mut neg,
            };
            lists[e.u].push(e.v);
            lists[e.v].push(e.u);
        }
        for list in pos.iter_mut().chain(neg.iter_mut()) {
            list.sort_unstable();
        }
        SignedGraph {
            labels: self.labels.clone(),
            index: self.index.clone(),
            pos,
            neg,
            edges,
        }
    }

    fn label_or_index(&self, v: usize) -> String {
        self.labels.get(v).cloned().unwrap_or_else(|| v.to_string())
    }

    /// Connected components of the underlying unsigned graph, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_where(|_| true)
    }

    fn components_where(&self, keep: impl Fn(Sign) -> bool) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for (w, sign) in self.neighbors(v) {
                    if keep(sign) && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Whether `set` induces a connected subgraph of the underlying graph.
    pub fn is_connected_set(&self, set: &[usize]) -> bool {
        let Some(&start) = set.first() else {
            return true;
        };
        let mask = self.mask(set);
        let size = mask.iter().filter(|&&b| b).count();
        let mut seen = vec![false; self.n()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for (w, _) in self.neighbors(v) {
                if mask[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == size
    }

    /// A 2-colouring with positive edges inside and negative edges across, if one exists.
    pub fn is_balanced(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.n();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].unwrap();
                for (w, sign) in self.neighbors(v) {
                    let want = if sign == Sign::Positive { cv } else { !cv };
                    match color[w] {
                        None => {
                            color[w] = Some(want);
                            queue.push_back(w);
                        }
                        Some(c) if c != want => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let left = (0..n).filter(|&v| color[v] == Some(false)).collect();
        let right = (0..n).filter(|&v| color[v] == Some(true)).collect();
        Some((left, right))
    }

    /// Positive components as groups, present iff no negative edge lies inside one.
    pub fn clustering_partition(&self) -> Option<ClusterPartition> {
        let groups = self.components_where(|s| s == Sign::Positive);
        let mut group_of = vec![0; self.n()];
        for (i, g) in groups.iter().enumerate() {
            for &v in g {
                group_of[v] = i;
            }
        }
        let ok = self
            .edges
            .iter()
            .all(|e| e.sign == Sign::Positive || group_of[e.u] != group_of[e.v]);
        ok.then_some(ClusterPartition { groups })
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edges.len() == n * n.saturating_sub(1) / 2
    }
}

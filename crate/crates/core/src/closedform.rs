//! Polynomial-time exact answers for graph classes with a combinatorial
//! characterization of the minimum alliance size.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::SignedGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AnswerKind {
    Size1,
    Size2,
    ExactSize,
    Unalliable,
    Inapplicable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseLabel {
    I,
    Ii,
    Iii,
    Balanced,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphClass {
    Forest,
    Cycle,
    Unicyclic,
    Subcubic,
    CompleteWeaklyBalanced,
    CompleteAllPositive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormAnswer {
    pub kind: AnswerKind,
    /// Sorted; empty for `Unalliable` and `Inapplicable`.
    pub witness: Vec<usize>,
    pub case: Option<CaseLabel>,
}

impl ClosedFormAnswer {
    fn sized(kind: AnswerKind, mut witness: Vec<usize>, case: Option<CaseLabel>) -> Self {
        witness.sort_unstable();
        Self {
            kind,
            witness,
            case,
        }
    }

    fn bare(kind: AnswerKind, case: Option<CaseLabel>) -> Self {
        Self {
            kind,
            witness: Vec::new(),
            case,
        }
    }

    pub fn size(&self) -> Option<usize> {
        match self.kind {
            AnswerKind::Size1 | AnswerKind::Size2 | AnswerKind::ExactSize => {
                Some(self.witness.len())
            }
            _ => None,
        }
    }

    /// Whether the answer settles the minimum alliance question.
    pub fn is_decisive(&self) -> bool {
        self.kind != AnswerKind::Inapplicable
    }

    pub fn to_json(&self, g: &SignedGraph) -> Value {
        json!({
            "kind": self.kind,
            "size": self.size(),
            "witness": (!self.witness.is_empty()).then(|| g.labels_of(&self.witness)),
            "case": self.case,
        })
    }
}

/// Decides whether the minimum alliance has size one or two.
pub fn asd_leq2(g: &SignedGraph) -> ClosedFormAnswer {
    if let Some(v) = (0..g.n()).find(|&v| g.neg_degree(v) <= 1) {
        return ClosedFormAnswer::sized(AnswerKind::Size1, vec![v], None);
    }
    let pair = g
        .edges()
        .iter()
        .find(|e| g.neg_degree(e.u) == 2 && g.neg_degree(e.v) == 2);
    match pair {
        Some(e) => ClosedFormAnswer::sized(AnswerKind::Size2, vec![e.u, e.v], None),
        None => ClosedFormAnswer::bare(AnswerKind::Inapplicable, None),
    }
}

/// Graphs of maximum degree three have a minimum alliance of size at most two or none.
pub fn subcubic_solve(g: &SignedGraph) -> Result<ClosedFormAnswer> {
    let delta = g.max_degree();
    if delta > 3 {
        return Err(Error::DegreeTooHigh(delta));
    }
    let answer = asd_leq2(g);
    Ok(if answer.is_decisive() {
        answer
    } else {
        ClosedFormAnswer::bare(AnswerKind::Unalliable, None)
    })
}

/// Complete weakly balanced graphs with at least one negative edge.
pub fn complete_balanced_solve(g: &SignedGraph) -> Result<ClosedFormAnswer> {
    if !g.is_complete() {
        return Err(Error::NotComplete);
    }
    if g.negative_edge_count() == 0 {
        return Err(Error::NoNegativeEdges);
    }
    let mut parts = g
        .clustering_partition()
        .ok_or(Error::NotClusterable)?
        .groups;
    parts.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    let n = g.n();
    let (v1, v2) = (&parts[0], &parts[1]);
    if parts.len() == 2 {
        let w = v1[..n - v1.len()].to_vec();
        return Ok(ClosedFormAnswer::sized(
            AnswerKind::ExactSize,
            w,
            Some(CaseLabel::Balanced),
        ));
    }
    let case_i = (3 * v1.len() >= n && 3 * v2.len() >= n).then(|| {
        let half = (n - v2.len()).div_ceil(2);
        let mut w = v1[..half].to_vec();
        w.extend_from_slice(&v2[..half]);
        w
    });
    let case_ii = (2 * v1.len() >= n).then(|| v1[..n - v1.len()].to_vec());
    Ok(match (case_i, case_ii) {
        (Some(a), Some(b)) if a.len() < b.len() => {
            ClosedFormAnswer::sized(AnswerKind::ExactSize, a, Some(CaseLabel::I))
        }
        (_, Some(b)) => ClosedFormAnswer::sized(AnswerKind::ExactSize, b, Some(CaseLabel::Ii)),
        (Some(a), None) => ClosedFormAnswer::sized(AnswerKind::ExactSize, a, Some(CaseLabel::I)),
        (None, None) => ClosedFormAnswer::bare(AnswerKind::Unalliable, Some(CaseLabel::Iii)),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifiedAnswer {
    pub class: GraphClass,
    pub answer: ClosedFormAnswer,
}

/// Recognizes a characterized class and answers with its closed form.
pub fn special_class_dispatch(g: &SignedGraph) -> Option<ClassifiedAnswer> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let m = g.edge_count();
    let c = g.components().len();
    let class = if m + c == n {
        Some(GraphClass::Forest)
    } else if c == 1 && n >= 3 && (0..n).all(|v| g.degree(v) == 2) {
        Some(GraphClass::Cycle)
    } else if m + c == n + 1 {
        Some(GraphClass::Unicyclic)
    } else if g.max_degree() <= 3 {
        Some(GraphClass::Subcubic)
    } else if g.is_complete() && g.negative_edge_count() == 0 {
        Some(GraphClass::CompleteAllPositive)
    } else if g.is_complete() && g.clustering_partition().is_some() {
        Some(GraphClass::CompleteWeaklyBalanced)
    } else {
        None
    }?;
    let answer = match class {
        GraphClass::Forest
        | GraphClass::Cycle
        | GraphClass::Unicyclic
        | GraphClass::CompleteAllPositive => asd_leq2(g),
        GraphClass::Subcubic => subcubic_solve(g).ok()?,
        GraphClass::CompleteWeaklyBalanced => complete_balanced_solve(g).ok()?,
    };
    answer
        .is_decisive()
        .then_some(ClassifiedAnswer { class, answer })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{self, Negative as N, Positive as P};

    fn clique(n: usize, sign: Sign) -> SignedGraph {
        let edges: Vec<_> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b, sign)))
            .collect();
        SignedGraph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize, signs: &[Sign]) -> SignedGraph {
        let edges: Vec<_> = (0..n)
            .map(|i| (i, (i + 1) % n, signs[i % signs.len()]))
            .collect();
        SignedGraph::from_edges(n, &edges).unwrap()
    }

    fn k_balanced(sizes: &[usize]) -> SignedGraph {
        let part: Vec<usize> = sizes
            .iter()
            .enumerate()
            .flat_map(|(i, &s)| vec![i; s])
            .collect();
        let n = part.len();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push((a, b, if part[a] == part[b] { P } else { N }));
            }
        }
        SignedGraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn leq2_examples() {
        assert_eq!(asd_leq2(&clique(3, N)).kind, AnswerKind::Size2);
        assert_eq!(asd_leq2(&clique(4, N)).kind, AnswerKind::Inapplicable);
    }

    #[test]
    fn subcubic_examples() {
        assert_eq!(
            subcubic_solve(&clique(4, N)).unwrap().kind,
            AnswerKind::Unalliable
        );
        assert_eq!(
            subcubic_solve(&cycle(6, &[N])).unwrap().kind,
            AnswerKind::Size2
        );
        let path = SignedGraph::from_edges(4, &[(0, 1, N), (1, 2, N), (2, 3, P)]).unwrap();
        assert_eq!(subcubic_solve(&path).unwrap().kind, AnswerKind::Size1);
        assert!(matches!(
            subcubic_solve(&clique(5, N)),
            Err(Error::DegreeTooHigh(4))
        ));
    }

    #[test]
    fn complete_examples() {
        let a = complete_balanced_solve(&k_balanced(&[3, 2])).unwrap();
        assert_eq!(a.size(), Some(2));
        assert!(a.witness.iter().all(|&v| v < 3));
        let b = complete_balanced_solve(&k_balanced(&[3, 3, 3])).unwrap();
        assert_eq!((b.size(), b.case), (Some(6), Some(CaseLabel::I)));
        let c = complete_balanced_solve(&k_balanced(&[3, 2, 2])).unwrap();
        assert_eq!(
            (c.kind, c.case),
            (AnswerKind::Unalliable, Some(CaseLabel::Iii))
        );
        assert!(matches!(
            complete_balanced_solve(&clique(4, P)),
            Err(Error::NoNegativeEdges)
        ));
        assert!(matches!(
            complete_balanced_solve(&cycle(4, &[N])),
            Err(Error::NotComplete)
        ));
    }

    #[test]
    fn dispatch_classes() {
        let tree = SignedGraph::from_edges(4, &[(0, 1, N), (0, 2, N), (0, 3, N)]).unwrap();
        let d = special_class_dispatch(&tree).unwrap();
        assert_eq!(
            (d.class, d.answer.kind),
            (GraphClass::Forest, AnswerKind::Size1)
        );
        let c = special_class_dispatch(&cycle(5, &[N, N, P])).unwrap();
        assert_eq!(
            (c.class, c.answer.kind),
            (GraphClass::Cycle, AnswerKind::Size1)
        );
        let uni =
            SignedGraph::from_edges(4, &[(0, 1, N), (1, 2, N), (0, 2, N), (2, 3, N)]).unwrap();
        let u = special_class_dispatch(&uni).unwrap();
        assert_eq!(
            (u.class, u.answer.kind),
            (GraphClass::Unicyclic, AnswerKind::Size1)
        );
        let k = special_class_dispatch(&k_balanced(&[3, 3, 3])).unwrap();
        assert_eq!(k.class, GraphClass::CompleteWeaklyBalanced);
        assert_eq!(k.answer.size(), Some(6));
    }
}

//! Hardness reductions as instance generators, plus structured and random
//! generators.

mod clique;
mod formula;
mod generate;
mod nae;
mod sat;
mod unsigned;

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, Sign, SignedGraph};

pub use clique::clique_to_minda;
pub use formula::{cnf_satisfiable, nae_satisfiable, parse_dimacs, Cnf, NaeFormula};
pub use generate::{gen_k_balanced_complete, gen_random};
pub use nae::{
    nae_to_defall, nae_to_defall_maxdeg5, witness_from_assignment, witness_from_assignment_maxdeg5,
};
pub use sat::threesat_to_nae;
pub use unsigned::{is_unsigned_alliance, unsigned_to_signed, UnsignedGraph};

pub const ROLE_ORIGINAL: &str = "original";
pub const ROLE_BIG_CLIQUE: &str = "bigclique";
pub const ROLE_SMALL_CLIQUE: &str = "smallclique";
pub const ROLE_CLAUSE: &str = "clause";
pub const ROLE_CLAUSE_PARTNER: &str = "clausepartner";
pub const ROLE_EDGE_VERTEX: &str = "edgevertex";

/// Role key of the cycle vertices belonging to variable `x`.
pub fn cycle_role(x: usize) -> String {
    format!("cycle:{x}")
}

#[derive(Clone, Debug)]
pub struct ReductionOutput {
    pub graph: SignedGraph,
    pub special_vertex: Option<usize>,
    pub budget: Option<usize>,
    /// Role to vertices; every vertex appears under exactly one role.
    pub provenance: BTreeMap<String, Vec<usize>>,
}

impl ReductionOutput {
    pub fn role(&self, role: &str) -> &[usize] {
        self.provenance.get(role).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn gadget_vertices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.role(ROLE_SMALL_CLIQUE).to_vec();
        out.extend_from_slice(self.role(ROLE_BIG_CLIQUE));
        out.sort_unstable();
        out
    }

    /// Sidecar document describing the construction.
    pub fn provenance_json(&self) -> Value {
        let g = &self.graph;
        let roles: BTreeMap<&String, Vec<String>> = self
            .provenance
            .iter()
            .map(|(r, vs)| (r, g.labels_of(vs)))
            .collect();
        json!({
            "vertices": g.n(),
            "positive_edges": g.positive_edge_count(),
            "negative_edges": g.negative_edge_count(),
            "max_degree": g.max_degree(),
            "special_vertex": self.special_vertex.map(|v| g.label(v).to_string()),
            "budget": self.budget,
            "roles": roles,
        })
    }
}

/// Graph builder that tags each new vertex with a role.
struct Tagged {
    b: GraphBuilder,
    provenance: BTreeMap<String, Vec<usize>>,
    gadgets: usize,
}

impl Tagged {
    fn new() -> Self {
        Self {
            b: GraphBuilder::new(),
            provenance: BTreeMap::new(),
            gadgets: 0,
        }
    }

    fn add(&mut self, role: &str, label: String) -> Result<usize> {
        let before = self.b.vertex_count();
        let v = self.b.vertex(&label);
        if v < before {
            return Err(Error::InvalidArgument(format!(
                "vertex label {label} used twice"
            )));
        }
        self.provenance.entry(role.to_string()).or_default().push(v);
        Ok(v)
    }

    fn edge(&mut self, u: usize, v: usize, sign: Sign) -> Result<()> {
        self.b.add_edge(u, v, sign)
    }

    fn clique(&mut self, members: &[usize], sign: Sign) -> Result<()> {
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                self.edge(u, v, sign)?;
            }
        }
        Ok(())
    }

    /// New negative 4-clique; returns its vertices.
    fn small_clique(&mut self) -> Result<[usize; 4]> {
        self.gadgets += 1;
        let id = self.gadgets;
        let mut vs = [0; 4];
        for (i, slot) in vs.iter_mut().enumerate() {
            *slot = self.add(
                ROLE_SMALL_CLIQUE,
                format!("{ROLE_SMALL_CLIQUE}:{id}:{}", i + 1),
            )?;
        }
        self.clique(&vs, Sign::Negative)?;
        Ok(vs)
    }

    /// Attaches a fresh small clique to `host` by one negative edge.
    fn guard(&mut self, host: usize) -> Result<()> {
        let vs = self.small_clique()?;
        self.edge(host, vs[0], Sign::Negative)
    }

    fn finish(self, special_vertex: Option<usize>, budget: Option<usize>) -> ReductionOutput {
        ReductionOutput {
            graph: self.b.build(),
            special_vertex,
            budget,
            provenance: self.provenance,
        }
    }
}

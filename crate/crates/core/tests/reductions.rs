mod common;

use proptest::prelude::*;
use rand::Rng;
use signed_alliance::oracle::min_alliance_bruteforce;
use signed_alliance::reductions::{
    clique_to_minda, gen_random, nae_satisfiable, nae_to_defall, nae_to_defall_maxdeg5,
    threesat_to_nae, unsigned_to_signed, witness_from_assignment, witness_from_assignment_maxdeg5,
    Cnf, NaeFormula, ReductionOutput, UnsignedGraph, ROLE_ORIGINAL, ROLE_SMALL_CLIQUE,
};
use signed_alliance::verify::passes_necessary;
use signed_alliance::Error;

fn unsigned(seed: u64, max_n: usize) -> UnsignedGraph {
    let mut r = common::rng(seed);
    let n = r.gen_range(1..=max_n);
    let p = r.gen_range(0.1..0.9);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|_| r.gen_bool(p))
        .collect();
    UnsignedGraph::new(n, &edges).unwrap()
}

fn unsigned_da(g: &UnsignedGraph, a: &[usize]) -> bool {
    !a.is_empty()
        && a.iter().all(|&v| {
            let nbrs: Vec<usize> = g
                .edges
                .iter()
                .filter_map(|&(x, y)| {
                    if x == v {
                        Some(y)
                    } else if y == v {
                        Some(x)
                    } else {
                        None
                    }
                })
                .collect();
            let inside = nbrs.iter().filter(|w| a.contains(w)).count();
            inside + 1 >= nbrs.len() - inside
        })
}

fn has_triangle(g: &UnsignedGraph) -> bool {
    let n = g.n();
    (0..n).any(|a| {
        (a + 1..n)
            .any(|b| (b + 1..n).any(|c| g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)))
    })
}

fn covers_once(out: &ReductionOutput) -> bool {
    let mut seen = vec![0; out.graph.n()];
    for vs in out.provenance.values() {
        for &v in vs {
            seen[v] += 1;
        }
    }
    seen.iter().all(|&c| c == 1)
}

fn random_formula(r: &mut impl Rng, max_m: usize, max_n: usize) -> NaeFormula {
    let n = r.gen_range(3..=max_n);
    let m = r.gen_range(1..=max_m);
    let clauses = (0..m)
        .map(|_| {
            let mut c: Vec<usize> = Vec::new();
            while c.len() < 3 {
                let x = r.gen_range(1..=n);
                if !c.contains(&x) {
                    c.push(x);
                }
            }
            c
        })
        .collect();
    NaeFormula::new(n, clauses).unwrap()
}

fn all_assignments(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u32..1 << n).map(move |b| (0..n).map(|i| b >> i & 1 == 1).collect())
}

#[test]
fn k2_example() {
    let g = UnsignedGraph::new(2, &[(0, 1)]).unwrap();
    let out = unsigned_to_signed(&g).unwrap();
    assert_eq!(out.graph.n(), 10);
    assert!(unsigned_da(&g, &[0]) && common::defensive(&out.graph, &[0]));
}

#[test]
fn clique_reduction_on_k3() {
    let g = UnsignedGraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let out = clique_to_minda(&g, 3).unwrap();
    assert_eq!(out.budget, Some(6));
    let r = min_alliance_bruteforce(&out.graph, 6, None).unwrap();
    assert_eq!(r.size(), Some(6));
    assert!(matches!(
        clique_to_minda(&g, 1),
        Err(Error::InvalidArgument(_))
    ));
}

#[test]
fn nae_single_clause() {
    let phi = NaeFormula::new(3, vec![vec![1, 2, 3]]).unwrap();
    let out = nae_to_defall(&phi).unwrap();
    assert_eq!(out.graph.n(), 58);
    let d = witness_from_assignment(&phi, &[true, false, false]).unwrap();
    assert_eq!(d.len(), 6);
    assert!(common::defensive(&out.graph, &d));
    assert!(matches!(
        witness_from_assignment(&phi, &[false; 3]),
        Err(Error::NotAnNaeAssignment(1))
    ));
}

#[test]
fn formula_text_round_trip() {
    let phi = random_formula(&mut common::rng(3), 4, 6);
    assert_eq!(NaeFormula::parse(&phi.to_text()).unwrap(), phi);
}

#[test]
fn generator_is_seeded() {
    let a = gen_random(10, 0.4, 0.5, 7).unwrap();
    assert_eq!(a, gen_random(10, 0.4, 0.5, 7).unwrap());
    assert_eq!(
        gen_random(5, 1.0, 0.0, 1).unwrap().positive_edge_count(),
        10
    );
    assert_eq!(gen_random(5, 0.0, 1.0, 1).unwrap().edge_count(), 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn unsigned_equivalence(seed in any::<u64>()) {
        let g = unsigned(seed, 6);
        let out = unsigned_to_signed(&g).unwrap();
        prop_assert!(covers_once(&out));
        let gadgets: usize = g.degrees().iter().map(|d| (d + 2) / 2).sum();
        prop_assert_eq!(out.graph.n(), g.n() + 4 * gadgets);
        prop_assert_eq!(out.role(ROLE_ORIGINAL).to_vec(), (0..g.n()).collect::<Vec<_>>());
        for bits in 1u32..1 << g.n() {
            let a: Vec<usize> = (0..g.n()).filter(|&v| bits >> v & 1 == 1).collect();
            prop_assert_eq!(unsigned_da(&g, &a), common::defensive(&out.graph, &a));
        }
    }

    #[test]
    fn clique_reduction_small(seed in any::<u64>()) {
        let g = unsigned(seed, 5);
        let out = clique_to_minda(&g, 3).unwrap();
        prop_assert!(covers_once(&out));
        let (n, e) = (g.n(), g.edges.len());
        prop_assert_eq!(out.graph.n(), n + e + 12 * n + 12 * e);
        for &v in out.role(ROLE_SMALL_CLIQUE) {
            prop_assert!(!passes_necessary(&out.graph, v));
        }
        let found = min_alliance_bruteforce(&out.graph, 6, None).unwrap().found();
        prop_assert_eq!(found, has_triangle(&g));
    }

    #[test]
    fn nae_yes_direction(seed in any::<u64>()) {
        let phi = random_formula(&mut common::rng(seed), 4, 6);
        let out = nae_to_defall(&phi).unwrap();
        let d5 = nae_to_defall_maxdeg5(&phi).unwrap();
        prop_assert!(covers_once(&out) && covers_once(&d5));
        prop_assert!(out.graph.n() <= 56 * phi.m() + 2);
        prop_assert!(d5.graph.n() <= 16 * phi.m());
        prop_assert!(d5.graph.max_degree() <= 5);
        for &v in out.role(ROLE_SMALL_CLIQUE) {
            prop_assert!(!passes_necessary(&out.graph, v));
        }
        for &v in d5.role(ROLE_SMALL_CLIQUE) {
            prop_assert!(!passes_necessary(&d5.graph, v));
        }
        for a in all_assignments(phi.n).filter(|a| phi.first_violated(a).is_none()) {
            let w = witness_from_assignment(&phi, &a).unwrap();
            prop_assert!(w.contains(&out.special_vertex.unwrap()));
            prop_assert!(common::defensive(&out.graph, &w));
            let w5 = witness_from_assignment_maxdeg5(&phi, &a).unwrap();
            prop_assert!(common::defensive(&d5.graph, &w5));
        }
    }

    #[test]
    fn threesat_equivalence(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let n = r.gen_range(3..=4);
        let m = r.gen_range(1..=3);
        let clauses: Vec<Vec<i32>> = (0..m).map(|_| {
            let mut vars: Vec<i32> = (1..=n as i32).collect();
            for i in 0..vars.len() {
                let j = r.gen_range(i..vars.len());
                vars.swap(i, j);
            }
            vars[..3].iter().map(|&x| if r.gen_bool(0.5) { x } else { -x }).collect()
        }).collect();
        let cnf = Cnf { n, clauses };
        let phi = threesat_to_nae(&cnf).unwrap();
        let sat = all_assignments(n).any(|a| cnf.satisfied_by(&a));
        let nae = nae_satisfiable(&phi);
        prop_assert_eq!(sat, nae.is_some());
        if let Some(a) = nae {
            let flipped: Vec<bool> = a.iter().map(|b| !b).collect();
            prop_assert!(phi.first_violated(&flipped).is_none());
        }
    }
}

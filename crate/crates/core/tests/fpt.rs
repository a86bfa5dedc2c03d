mod common;

use proptest::prelude::*;
use rand::Rng;
use signed_alliance::fpt::dp::dp_run;
use signed_alliance::fpt::ilp::{ilp_solve, IlpModel, Row, Var};
use signed_alliance::fpt::params::vertex_cover;
use signed_alliance::fpt::snd::snd_equivalent;
use signed_alliance::fpt::{
    analyze_parameters, dp_treewidth_delta, dp_treewidth_delta_containing, ilp_build,
    nice_decomposition, snd_min_alliance, snd_partition, solve_k_delta, TreeDecomposition,
};
use signed_alliance::{Error, SignedGraph};

fn graph(seed: u64) -> SignedGraph {
    let mut r = common::rng(seed);
    let n = r.gen_range(1..=9);
    let p_neg = r.gen_range(0.2..0.9);
    common::random_bounded(&mut r, n, 4, 3 * n, p_neg)
}

#[test]
fn fixtures_through_every_solver() {
    for (name, expected) in [
        ("fig2b.sg", Some(1)),
        ("negK4.sg", None),
        ("k9_333.sg", Some(6)),
        ("read1954.sg", Some(1)),
    ] {
        let g = common::fixture(name);
        let ntd = nice_decomposition(&g, None).unwrap();
        assert_eq!(
            dp_treewidth_delta(&g, &ntd).unwrap().size(),
            expected,
            "{name}"
        );
        assert_eq!(
            snd_min_alliance(&g, None).unwrap().size(),
            expected,
            "{name}"
        );
        assert_eq!(
            solve_k_delta(&g, g.n(), None).unwrap().size(),
            expected,
            "{name}"
        );
    }
}

#[test]
fn external_decomposition_text() {
    let g = common::fixture("fig2b.sg");
    let td = TreeDecomposition::heuristic(&g);
    let parsed = TreeDecomposition::parse(&td.to_text(&g), &g).unwrap();
    assert_eq!(parsed, td);
    let broken = "s td 1 2 6\nb 1 v1 v2\n";
    assert!(matches!(
        nice_decomposition(&g, Some(&TreeDecomposition::parse(broken, &g).unwrap())),
        Err(Error::InvalidDecomposition(_))
    ));
    assert!(TreeDecomposition::parse("s td 1 1 6\nb 1 nope\n", &g).is_err());
    assert!(TreeDecomposition::parse("b 1 v1\n", &g).is_err());
}

#[test]
fn search_rejects_zero_bound() {
    assert!(solve_k_delta(&common::fixture("fig2b.sg"), 0, None).is_err());
}

#[test]
fn snd_of_k_balanced_merges_singleton_parts() {
    for (parts, expected) in [
        (vec![3, 2], 2),
        (vec![3, 3, 3], 3),
        (vec![2, 2, 1], 3),
        (vec![1, 1], 1),
        (vec![2, 1, 1], 2),
        (vec![4, 1, 1, 1], 2),
    ] {
        let g = signed_alliance::reductions::gen_k_balanced_complete(&parts).unwrap();
        assert_eq!(snd_partition(&g).d(), expected, "{parts:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn solvers_agree_with_exhaustive(seed in any::<u64>()) {
        let g = graph(seed);
        let exact = common::exhaustive_min(&g, None);
        let search = solve_k_delta(&g, g.n(), None).unwrap();
        let dp = dp_treewidth_delta(&g, &nice_decomposition(&g, None).unwrap()).unwrap();
        let snd = snd_min_alliance(&g, None).unwrap();
        for r in [&search, &dp, &snd] {
            prop_assert_eq!(r.size(), exact);
            if let Some(w) = &r.witness {
                prop_assert!(common::defensive(&g, w));
            }
        }
    }

    #[test]
    fn pointed_solvers_agree(seed in any::<u64>(), pick in any::<usize>()) {
        let g = graph(seed);
        let req = pick % g.n();
        let exact = common::exhaustive_min(&g, Some(req));
        let ntd = nice_decomposition(&g, None).unwrap();
        let results = [
            solve_k_delta(&g, g.n(), Some(req)).unwrap(),
            dp_treewidth_delta_containing(&g, &ntd, Some(req)).unwrap(),
            snd_min_alliance(&g, Some(req)).unwrap(),
        ];
        for r in &results {
            prop_assert_eq!(r.size(), exact);
            if let Some(w) = &r.witness {
                prop_assert!(w.contains(&req));
                prop_assert!(common::defensive(&g, w));
            }
        }
    }

    #[test]
    fn search_respects_bound(seed in any::<u64>(), k in 1usize..4) {
        let g = graph(seed);
        let exact = common::exhaustive_min(&g, None).filter(|&s| s <= k);
        prop_assert_eq!(solve_k_delta(&g, k, None).unwrap().size(), exact);
    }

    #[test]
    fn dp_is_decomposition_independent(seed in any::<u64>()) {
        let g = graph(seed);
        let mut r = common::rng(seed ^ 0x5eed);
        let mut order: Vec<usize> = (0..g.n()).collect();
        for i in 0..order.len() {
            let j = r.gen_range(i..order.len());
            order.swap(i, j);
        }
        let td = common::elimination_td(&g, &order);
        let parsed = TreeDecomposition::parse(&td.to_text(&g), &g).unwrap();
        let first = dp_treewidth_delta(&g, &nice_decomposition(&g, None).unwrap()).unwrap();
        let second = dp_treewidth_delta(&g, &nice_decomposition(&g, Some(&parsed)).unwrap()).unwrap();
        prop_assert_eq!(first.size(), second.size());
    }

    #[test]
    fn dp_values_stay_in_degree_window(seed in any::<u64>()) {
        let g = graph(seed);
        let run = dp_run(&g, &nice_decomposition(&g, None).unwrap(), None).unwrap();
        let delta = g.max_degree() as i32;
        if let Some((lo, hi)) = run.delta_range {
            prop_assert!(lo > -delta && hi <= delta + 1);
        }
    }

    #[test]
    fn nice_decomposition_is_valid(seed in any::<u64>()) {
        let g = graph(seed);
        let td = TreeDecomposition::heuristic(&g);
        prop_assert!(td.validate(&g).is_ok());
        let ntd = nice_decomposition(&g, Some(&td)).unwrap();
        prop_assert!(ntd.validate(&g).is_ok());
        prop_assert_eq!(ntd.width(), td.width());
    }

    #[test]
    fn snd_classes_are_equivalence_classes(seed in any::<u64>()) {
        let g = graph(seed);
        let p = snd_partition(&g);
        for (i, c) in p.classes.iter().enumerate() {
            for &u in c {
                prop_assert_eq!(p.class_of[u], i);
                for &v in c {
                    prop_assert!(u == v || snd_equivalent(&g, u, v));
                }
            }
            for d in &p.classes[i + 1..] {
                prop_assert!(!snd_equivalent(&g, c[0], d[0]));
            }
        }
    }

    #[test]
    fn ilp_accepts_exhaustive_optimum(seed in any::<u64>()) {
        let g = graph(seed);
        let p = snd_partition(&g);
        let model = ilp_build(&p, g.n());
        let n = g.n();
        let mut best: Option<Vec<usize>> = None;
        for bits in 1u32..1 << n {
            let set: Vec<usize> = (0..n).filter(|&v| bits >> v & 1 == 1).collect();
            if best.as_ref().is_none_or(|b| set.len() < b.len()) && common::defensive(&g, &set) {
                best = Some(set);
            }
        }
        if let Some(set) = best {
            let d = p.d();
            let mut y = vec![0i64; 2 * d];
            for &v in &set {
                y[p.class_of[v]] += 1;
            }
            for i in 0..d {
                y[d + i] = (y[i] > 0) as i64;
            }
            prop_assert!(model.feasible(&y));
            prop_assert_eq!(model.value(&y), set.len() as i64);
        }
    }

    #[test]
    fn ilp_matches_enumeration(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let vars: Vec<Var> = (0..3).map(|i| Var::new(format!("y{i}"), 0, r.gen_range(1..=3))).collect();
        let rows: Vec<Row> = (0..3)
            .map(|_| Row::new((0..3).map(|v| (v, r.gen_range(-2..=3))).collect(), r.gen_range(-2..=4)))
            .collect();
        let objective: Vec<i64> = (0..3).map(|_| r.gen_range(-1..=2)).collect();
        let model = IlpModel { vars, rows, objective, branch_order: vec![2, 0, 1] };
        let mut best: Option<i64> = None;
        for a in 0..=model.vars[0].hi {
            for b in 0..=model.vars[1].hi {
                for c in 0..=model.vars[2].hi {
                    let y = [a, b, c];
                    if model.feasible(&y) {
                        best = Some(best.map_or(model.value(&y), |x| x.min(model.value(&y))));
                    }
                }
            }
        }
        let got = ilp_solve(&model);
        prop_assert_eq!(got.as_ref().map(|y| model.value(y)), best);
        if let Some(y) = got {
            prop_assert!(model.feasible(&y));
        }
    }

    #[test]
    fn vertex_cover_is_minimum(seed in any::<u64>()) {
        let g = graph(seed);
        let vc = vertex_cover(&g, 20);
        prop_assert!(vc.exact);
        for e in g.edges() {
            prop_assert!(vc.vertices.contains(&e.u) || vc.vertices.contains(&e.v));
        }
        let n = g.n();
        let min = (0u32..1 << n)
            .filter(|&b| g.edges().iter().all(|e| b >> e.u & 1 == 1 || b >> e.v & 1 == 1))
            .map(|b| b.count_ones() as usize)
            .min()
            .unwrap();
        prop_assert_eq!(vc.size, min);
        let report = analyze_parameters(&g);
        prop_assert!((report.snd as u128) <= 3u128.pow(vc.size as u32) + vc.size as u128);
    }
}

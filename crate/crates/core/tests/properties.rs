use msq_core::constructions::{join_witness, odd_cycle_cs_witness, sum_all_vars_witness, wedge_complete_witness};
use msq_core::graph::families;
use msq_core::invariants::{compute, cs_check, ms_check, ms_upper_bound};
use msq_core::{FieldCtx, Graph, InvariantKind, QuadForm, QuadIdeal, SearchMode, SearchOptions};
use proptest::prelude::*;

fn ctx() -> FieldCtx {
    FieldCtx::new(32003, 5).unwrap()
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn ms(ctx: &FieldCtx, g: &Graph) -> usize {
    let opts = SearchOptions::with_alpha(g.independence_number().unwrap());
    compute(ctx, InvariantKind::Ms, &g.edge_ideal(), &opts).unwrap().settled().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn isolated_vertices_add_one_each(g in graph_strategy(5), d in 1usize..=2) {
        let c = ctx();
        prop_assert_eq!(ms(&c, &g.add_isolated(d).unwrap()), ms(&c, &g) + d);
    }

    #[test]
    fn reports_are_consistent(g in graph_strategy(6)) {
        let c = ctx();
        let ideal = g.edge_ideal();
        let opts = SearchOptions::with_alpha(g.independence_number().unwrap());
        let m = compute(&c, InvariantKind::Ms, &ideal, &opts).unwrap();
        let s = compute(&c, InvariantKind::Cs, &ideal, &opts).unwrap();
        for r in [&m, &s] {
            prop_assert!(r.lo <= r.hi && r.hi <= g.n());
            let w = r.witness.as_ref().unwrap();
            prop_assert_eq!(w.len(), r.hi);
            prop_assert!(msq_core::invariants::check(&c, r.kind, &ideal, w).unwrap());
        }
        prop_assert!(m.lo <= s.hi);
        prop_assert!(m.hi <= s.hi);
        prop_assert!(m.hi <= ms_upper_bound(&ideal).0.max(m.lo));
    }

    #[test]
    fn join_witness_reaches_max(g in graph_strategy(4), h in graph_strategy(4)) {
        let c = ctx();
        let opts = |g: &Graph| SearchOptions::with_alpha(g.independence_number().unwrap());
        let wg = compute(&c, InvariantKind::Ms, &g.edge_ideal(), &opts(&g)).unwrap().witness.unwrap();
        let wh = compute(&c, InvariantKind::Ms, &h.edge_ideal(), &opts(&h)).unwrap().witness.unwrap();
        let forms = join_witness(&c, &g, &wg, &h, &wh).unwrap();
        prop_assert_eq!(forms.len(), wg.len().max(wh.len()));
        prop_assert!(ms_check(&c, &g.join(&h).unwrap().edge_ideal(), &forms).unwrap());
    }
}

#[test]
fn randomized_matches_exhaustive_on_random_ideals() {
    let c5 = FieldCtx::new(5, 9).unwrap();
    let mut rng = c5.rng(77);
    use rand::Rng;
    for _ in 0..60 {
        let n = rng.gen_range(1..=3);
        let big = n * (n + 1) / 2;
        let t = rng.gen_range(0..=big);
        let forms: Vec<QuadForm> = (0..t)
            .map(|_| QuadForm::from_coeffs(n, (0..big).map(|_| rng.gen_range(0..5)).collect()).unwrap())
            .collect();
        let ideal = QuadIdeal::span(&c5, n, &forms).unwrap();
        for kind in [InvariantKind::Ms, InvariantKind::Cs] {
            let exact = compute(&c5, kind, &ideal, &SearchOptions { mode: SearchMode::Exhaustive, ..Default::default() })
                .unwrap();
            let random = compute(&c5, kind, &ideal, &SearchOptions { trials: 300, ..Default::default() }).unwrap();
            assert_eq!(random.settled(), exact.value, "{kind:?} on {:?}", ideal.generators());
        }
    }
}

#[test]
fn constructions_over_families() {
    let c = ctx();
    for m in 1..=6 {
        let g = families::cycle(2 * m + 1).unwrap();
        assert!(cs_check(&c, &g.edge_ideal(), &odd_cycle_cs_witness(m).unwrap()).unwrap());
    }
    for m in 1..=5 {
        for n in m..=6 {
            let g = families::wedge_complete(m, n).unwrap();
            assert!(ms_check(&c, &g.edge_ideal(), &wedge_complete_witness(m, n).unwrap()).unwrap());
        }
    }
    for n in 2..=10 {
        let k = families::complete(n).unwrap();
        assert!(ms_check(&c, &k.edge_ideal(), &sum_all_vars_witness(n).unwrap()).unwrap());
    }
}

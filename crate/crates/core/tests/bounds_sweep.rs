mod common;

use graphdesign_core::bounds::{
    cheeger_constant_exact, cheeger_equality_chain, cheeger_lower, classic_cheeger_ratio,
    hoffman_bound, hoffman_inequality_chain, independence_ratio_exact, Relation,
    DEFAULT_CHEEGER_CAP, DEFAULT_INDEPENDENCE_CAP,
};
use graphdesign_core::design::{
    extremal_from_cheeger, extremal_from_hoffman, DEFAULT_ACTIVITY_THRESHOLD,
};
use graphdesign_core::spectral::{GraphSpectrum, DEFAULT_GROUPING_TOLERANCE};
use graphdesign_core::{families, Graph, VertexSet};

/// Largest independent set by plain subset enumeration.
fn alpha_brute(g: &Graph) -> usize {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter(|&m| {
            g.edges()
                .iter()
                .all(|&(u, v)| m >> u & 1 == 0 || m >> v & 1 == 0)
        })
        .map(u32::count_ones)
        .max()
        .unwrap() as usize
}

/// `h(G)` by plain subset enumeration.
fn cheeger_brute(g: &Graph) -> f64 {
    let n = g.vertex_count();
    let d = g.regular_degree().unwrap() as f64;
    (1u32..(1 << n) - 1)
        .map(|m| {
            let cut = g
                .edges()
                .iter()
                .filter(|&&(u, v)| (m >> u & 1) != (m >> v & 1))
                .count() as f64;
            let s = m.count_ones() as f64;
            n as f64 * cut / (d * s * (n as f64 - s))
        })
        .fold(f64::INFINITY, f64::min)
}

#[test]
fn bounds_hold_on_random_regular_graphs() {
    let mut rng = common::rng(0x5EED);
    let mut sharp_seen = 0;
    for _ in 0..120 {
        let g = common::random_regular(&mut rng, 14);
        let sp = GraphSpectrum::compute(&g, DEFAULT_GROUPING_TOLERANCE).unwrap();
        let hoffman = hoffman_bound(&sp.decomposition).unwrap();
        let lower = cheeger_lower(&sp.decomposition).unwrap();
        let alpha = independence_ratio_exact(&g, DEFAULT_INDEPENDENCE_CAP).unwrap();
        let h = cheeger_constant_exact(&g, DEFAULT_CHEEGER_CAP).unwrap();
        assert_eq!(alpha.size, alpha_brute(&g));
        assert!((h.constant - cheeger_brute(&g)).abs() < 1e-12);
        assert!(alpha.ratio <= hoffman + 1e-9);
        assert!(lower <= h.constant + 1e-9);
        let d = g.regular_degree().unwrap() as f64;
        assert!(h.classic <= d * h.constant + 1e-9);
        assert!(d * h.constant <= 2.0 * h.classic + 1e-9);
        assert!((classic_cheeger_ratio(&g, &h.classic_witness).unwrap() - h.classic).abs() < 1e-12);

        if (alpha.ratio - hoffman).abs() <= 1e-9 {
            sharp_seen += 1;
            let cert =
                extremal_from_hoffman(&g, &sp, &alpha.witness, DEFAULT_ACTIVITY_THRESHOLD).unwrap();
            assert!((cert.active_eigenvalue - sp.decomposition.smallest()).abs() < 1e-7);
        }
        if (h.constant - lower).abs() <= 1e-9 {
            sharp_seen += 1;
            let cert =
                extremal_from_cheeger(&g, &sp, &h.witness, DEFAULT_ACTIVITY_THRESHOLD).unwrap();
            let l2 = sp.decomposition.second_largest().unwrap();
            assert!((cert.active_eigenvalue - l2).abs() < 1e-7);
        }
    }
    // Random bipartite-free graphs are rarely sharp; only soundness is required here.
    let _ = sharp_seen;
}

#[test]
fn sharp_bounds_on_bipartite_graphs_certify_parts() {
    let mut rng = common::rng(0xB0);
    for i in 0..20 {
        let g = families::random::connected_bipartite_regular(4 + i % 4, 3, &mut rng).unwrap();
        let sp = GraphSpectrum::compute(&g, DEFAULT_GROUPING_TOLERANCE).unwrap();
        let (a, _) = g.bipartition().unwrap().unwrap();
        let cert = extremal_from_hoffman(&g, &sp, &a, DEFAULT_ACTIVITY_THRESHOLD).unwrap();
        assert!((cert.active_eigenvalue + 1.0).abs() < 1e-7);
        assert!((cert.bound - 0.5).abs() < 1e-9);
        let chain = hoffman_inequality_chain(&g, &sp, &a).unwrap();
        assert!(chain.max_equality_residual() <= 1e-8);
        assert!(chain.slack().abs() <= 1e-8);
    }
}

#[test]
fn hoffman_chain_equalities_hold_for_independent_sets() {
    let mut rng = common::rng(0xC4);
    let mut tested = 0;
    while tested < 200 {
        let g = common::random_regular(&mut rng, 14);
        let sp = GraphSpectrum::compute(&g, DEFAULT_GROUPING_TOLERANCE).unwrap();
        let s = common::random_proper_subset(&mut rng, g.vertex_count());
        if !g.is_independent(&s).unwrap() {
            continue;
        }
        let chain = hoffman_inequality_chain(&g, &sp, &s).unwrap();
        assert_eq!(
            chain
                .steps
                .iter()
                .filter(|s| s.relation == Relation::AtMost)
                .count(),
            1
        );
        assert!(chain.max_equality_residual() <= 1e-8);
        assert!(chain.slack() >= -1e-8);
        tested += 1;
    }
}

#[test]
fn cheeger_chain_is_tight_exactly_on_sharp_witnesses() {
    for n in 2..=7 {
        let g = families::complete(n).unwrap();
        let sp = GraphSpectrum::compute(&g, DEFAULT_GROUPING_TOLERANCE).unwrap();
        let h = cheeger_constant_exact(&g, DEFAULT_CHEEGER_CAP).unwrap();
        let chain = cheeger_equality_chain(&g, &sp, &h.witness).unwrap();
        assert!(chain.max_equality_residual() <= 1e-8);
        assert!(chain.slack().abs() <= 1e-8);
    }
    for n in 2..=5 {
        let g = families::hypercube(n).unwrap();
        let sp = GraphSpectrum::compute(&g, DEFAULT_GROUPING_TOLERANCE).unwrap();
        let (s, _) = families::hypercube_design(n, &[1]).unwrap();
        let chain = cheeger_equality_chain(&g, &sp, &s).unwrap();
        assert!(chain.max_equality_residual() <= 1e-8);
        assert!(chain.slack().abs() <= 1e-8);
    }
    let c6 = families::cycle(6).unwrap();
    let sp = GraphSpectrum::compute(&c6, DEFAULT_GROUPING_TOLERANCE).unwrap();
    let chain = cheeger_equality_chain(&c6, &sp, &VertexSet::new(6, [0]).unwrap()).unwrap();
    assert!(chain.max_equality_residual() <= 1e-8);
    assert!(chain.slack() > 1e-6);
}

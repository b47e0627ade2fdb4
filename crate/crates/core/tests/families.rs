use graphdesign_core::bounds::{
    cheeger_ratio, cheeger_sharpness, hoffman_bound, hoffman_sharpness, hoffman_witness_check,
    DEFAULT_CHEEGER_CAP, DEFAULT_SHARPNESS_TOLERANCE,
};
use graphdesign_core::design::{design_order, extremal_from_hoffman, DEFAULT_ACTIVITY_THRESHOLD};
use graphdesign_core::families::{self, binomial};
use graphdesign_core::spectral::{GraphSpectrum, DEFAULT_GROUPING_TOLERANCE};

fn spectrum(g: &graphdesign_core::Graph) -> GraphSpectrum {
    GraphSpectrum::compute(g, DEFAULT_GROUPING_TOLERANCE).unwrap()
}

#[test]
fn kneser_stars_meet_the_hoffman_bound() {
    for (n, k) in [(5, 2), (6, 2), (7, 2), (8, 2), (7, 3)] {
        let kg = families::kneser(n, k).unwrap();
        assert_eq!(kg.graph.vertex_count(), binomial(n, k));
        assert_eq!(kg.graph.regular_degree(), Some(binomial(n - k, k)));
        let sp = spectrum(&kg.graph);
        let bound = hoffman_bound(&sp.decomposition).unwrap();
        assert!((bound - k as f64 / n as f64).abs() < 1e-9, "KG({n},{k})");
        for e in [1, n] {
            let star = families::kneser_star(n, k, e).unwrap();
            assert_eq!(star.len(), binomial(n - 1, k - 1));
            let cert =
                extremal_from_hoffman(&kg.graph, &sp, &star, DEFAULT_ACTIVITY_THRESHOLD).unwrap();
            assert_eq!(cert.report.order, 1);
        }
    }
}

#[test]
fn kneser_exact_independence_on_small_cases() {
    for (n, k) in [(5, 2), (6, 2), (7, 2)] {
        let kg = families::kneser(n, k).unwrap();
        let sp = spectrum(&kg.graph);
        let s = hoffman_sharpness(&kg.graph, &sp, 40, DEFAULT_SHARPNESS_TOLERANCE).unwrap();
        assert!(s.sharp);
        // The lexicographically first maximum set is the star of element 1.
        assert_eq!(s.witness.unwrap(), families::kneser_star(n, k, 1).unwrap());
    }
}

#[test]
fn derangement_stabilizers_meet_the_hoffman_bound() {
    // On S_3 the graph is two disjoint triangles.
    let small = families::derangement_graph(3).unwrap();
    assert!(matches!(
        GraphSpectrum::compute(&small.graph, DEFAULT_GROUPING_TOLERANCE),
        Err(graphdesign_core::Error::Disconnected)
    ));
    for n in 4..=5 {
        let dg = families::derangement_graph(n).unwrap();
        let sp = spectrum(&dg.graph);
        for (i, j) in [(1, 1), (2, n)] {
            let s = families::permutation_stabilizer(n, i, j).unwrap();
            assert_eq!(s.len(), (1..n).product::<usize>());
            let check =
                hoffman_witness_check(&dg.graph, &sp, &s, DEFAULT_SHARPNESS_TOLERANCE).unwrap();
            assert!(check.sharp && check.witness_only, "n = {n}");
            let cert =
                extremal_from_hoffman(&dg.graph, &sp, &s, DEFAULT_ACTIVITY_THRESHOLD).unwrap();
            assert!((cert.active_eigenvalue - sp.decomposition.smallest()).abs() < 1e-9);
        }
    }
}

#[test]
fn hypercube_designs_are_extremal_and_cheeger_sharp_only_for_singletons() {
    for n in 2..=4 {
        let g = families::hypercube(n).unwrap();
        let sp = spectrum(&g);
        let global =
            cheeger_sharpness(&g, &sp, DEFAULT_CHEEGER_CAP, DEFAULT_SHARPNESS_TOLERANCE).unwrap();
        assert!(global.sharp);
        assert!((global.value - 2.0 / n as f64).abs() < 1e-9);
        for mask in 1..(1usize << n) - 1 {
            let elems: Vec<usize> = (0..n)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| b + 1)
                .collect();
            let (s, t) = families::hypercube_design(n, &elems).unwrap();
            let lambda = 1.0 - 2.0 * elems.len() as f64 / n as f64;
            for w in [&s, &t] {
                let r = design_order(&sp, w, DEFAULT_ACTIVITY_THRESHOLD).unwrap();
                assert_eq!(r.order, 1);
                assert!((r.active[0].eigenvalue - lambda).abs() < 1e-7);
            }
            let ratio = cheeger_ratio(&g, &s).unwrap();
            let sharp = (ratio - global.bound).abs() <= DEFAULT_SHARPNESS_TOLERANCE;
            assert_eq!(sharp, elems.len() == 1, "Q_{n}, I = {elems:?}");
        }
    }
}

#[test]
fn complete_graph_closed_forms() {
    for n in 2..=8 {
        let g = families::complete(n).unwrap();
        let sp = spectrum(&g);
        assert!((hoffman_bound(&sp.decomposition).unwrap() - 1.0 / n as f64).abs() < 1e-9);
        let h =
            cheeger_sharpness(&g, &sp, DEFAULT_CHEEGER_CAP, DEFAULT_SHARPNESS_TOLERANCE).unwrap();
        assert!(h.sharp);
        assert!((h.value - n as f64 / (n - 1) as f64).abs() < 1e-9);
    }
}

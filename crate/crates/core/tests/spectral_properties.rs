mod common;

use graphdesign_core::families;
use graphdesign_core::families::random;
use graphdesign_core::linalg::{dot, norm};
use graphdesign_core::spectral::{GraphSpectrum, DEFAULT_GROUPING_TOLERANCE};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn projectors_resolve_the_identity(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_regular(&mut rng, 16);
        let n = g.vertex_count();
        let sp = GraphSpectrum::compute(&g, DEFAULT_GROUPING_TOLERANCE).unwrap();
        let dec = &sp.decomposition;
        let mut sum = vec![0.0; n * n];
        for i in 0..dec.eigenspaces.len() {
            for (s, p) in sum.iter_mut().zip(dec.projector(i).unwrap()) {
                *s += p;
            }
        }
        for i in 0..n {
            for j in 0..n {
                let expected = if i == j { 1.0 } else { 0.0 };
                prop_assert!((sum[i * n + j] - expected).abs() <= 1e-8);
            }
        }
        prop_assert!(dec.reconstruction_error(&sp.adjacency) <= 1e-8);
    }

    #[test]
    fn projections_are_orthogonal_and_reconstruct(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_regular(&mut rng, 16);
        let n = g.vertex_count();
        let sp = GraphSpectrum::compute(&g, DEFAULT_GROUPING_TOLERANCE).unwrap();
        let dec = &sp.decomposition;
        let f = common::random_vector(&mut rng, n);
        let h = common::random_vector(&mut rng, n);
        let pf: Vec<_> = (0..dec.eigenspaces.len()).map(|i| dec.project(&f, i).unwrap()).collect();
        let ph: Vec<_> = (0..dec.eigenspaces.len()).map(|i| dec.project(&h, i).unwrap()).collect();
        let scale = norm(&f) * norm(&h);
        for (i, a) in pf.iter().enumerate() {
            for (j, b) in ph.iter().enumerate() {
                if i != j {
                    prop_assert!(dot(&a.component, &b.component).abs() <= 1e-8 * scale);
                }
            }
        }
        let mut total = vec![0.0; n];
        for p in &pf {
            for (t, c) in total.iter_mut().zip(&p.component) {
                *t += c;
            }
        }
        for (t, x) in total.iter().zip(&f) {
            prop_assert!((t - x).abs() <= 1e-8);
        }
        let direct = sp.adjacency.apply(&f).unwrap();
        let spectral = dec.apply(&f).unwrap();
        for (x, y) in direct.iter().zip(&spectral) {
            prop_assert!((x - y).abs() <= 1e-8);
        }
    }

    #[test]
    fn parseval_on_indicators(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_regular(&mut rng, 16);
        let sp = GraphSpectrum::compute(&g, DEFAULT_GROUPING_TOLERANCE).unwrap();
        let s = common::random_proper_subset(&mut rng, g.vertex_count());
        let total: f64 = sp.decomposition.squared_norms(&s.indicator()).unwrap().iter().sum();
        prop_assert!((total - s.len() as f64).abs() <= 1e-8);
    }

    #[test]
    fn spectrum_lies_in_unit_interval_with_simple_top(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_regular(&mut rng, 16);
        let sp = GraphSpectrum::compute(&g, DEFAULT_GROUPING_TOLERANCE).unwrap();
        let dec = &sp.decomposition;
        prop_assert!((dec.eigenspaces[0].eigenvalue - 1.0).abs() < 1e-9);
        prop_assert_eq!(dec.eigenspaces[0].multiplicity(), 1);
        prop_assert!(dec.raw_eigenvalues.iter().all(|&x| (-1.0 - 1e-9..=1.0 + 1e-9).contains(&x)));
        let total: usize = dec.eigenspaces.iter().map(|e| e.multiplicity()).sum();
        prop_assert_eq!(total, g.vertex_count());
    }
}

#[test]
fn bipartite_iff_minus_one_in_spectrum() {
    let mut rng = common::rng(0xB1);
    let mut bipartite_seen = 0;
    for i in 0..100 {
        // Mix in bipartite graphs so both sides of the equivalence occur.
        let g = if i % 3 == 0 {
            let d = 3 + i % 2;
            random::connected_bipartite_regular(rand::Rng::gen_range(&mut rng, 4..=8), d, &mut rng)
                .unwrap()
        } else {
            common::random_regular(&mut rng, 16)
        };
        let sp = GraphSpectrum::compute(&g, DEFAULT_GROUPING_TOLERANCE).unwrap();
        let has_minus_one = (sp.decomposition.smallest() + 1.0).abs() <= DEFAULT_GROUPING_TOLERANCE;
        let bipartite = g.bipartition().unwrap().is_some();
        bipartite_seen += usize::from(bipartite);
        assert_eq!(has_minus_one, bipartite, "graph {i}");
    }
    assert!(bipartite_seen >= 30);
}

#[test]
fn hypercube_eigenspaces_match_characters() {
    for n in 1..=6 {
        let g = families::hypercube(n).unwrap();
        let sp = GraphSpectrum::compute(&g, DEFAULT_GROUPING_TOLERANCE).unwrap();
        let dec = &sp.decomposition;
        let size = 1usize << n;
        assert_eq!(dec.eigenspaces.len(), n + 1);
        for k in 0..=n {
            let mut analytic = vec![0.0; size * size];
            for mask in (0..size).filter(|m| m.count_ones() as usize == k) {
                let elems: Vec<usize> = (0..n)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| b + 1)
                    .collect();
                let chi = families::hypercube_character(n, &elems).unwrap();
                assert_eq!(chi.exact_residual(&g), 0);
                let v = chi.to_f64();
                for i in 0..size {
                    for j in 0..size {
                        analytic[i * size + j] += v[i] * v[j] / size as f64;
                    }
                }
            }
            let index = dec.nearest(1.0 - 2.0 * k as f64 / n as f64).unwrap();
            let numeric = dec.projector(index).unwrap();
            let err = graphdesign_core::linalg::max_abs_diff(&analytic, &numeric);
            assert!(err <= 1e-6, "Q_{n}, k = {k}: {err}");
        }
    }
}

#[test]
fn kneser_6_2_spectrum() {
    let k = families::kneser(6, 2).unwrap();
    let sp = GraphSpectrum::compute(&k.graph, DEFAULT_GROUPING_TOLERANCE).unwrap();
    let got: Vec<(f64, usize)> = sp.decomposition.distinct().collect();
    let expected = [(1.0, 1), (1.0 / 6.0, 9), (-0.5, 5)];
    assert_eq!(got.len(), 3);
    for ((x, m), (y, k)) in got.iter().zip(expected) {
        assert!((x - y).abs() < 1e-9);
        assert_eq!(*m, k);
    }
}

use std::collections::BTreeSet;

use reslat::enumerate::{
    brute_force_residuated, canonical_form, catalog, enumerate_lattices, enumerate_residuated, LatticeStrategy,
};
use reslat::Algebra;

#[test]
fn lattice_counts_agree_across_strategies() {
    let expected = [(2, 1), (3, 1), (4, 2), (5, 5), (6, 15), (7, 53)];
    for (n, count) in expected {
        let scan = enumerate_lattices(n, LatticeStrategy::OrderScan).unwrap();
        let grow = enumerate_lattices(n, LatticeStrategy::AtomExtension).unwrap();
        assert_eq!(scan.len(), count, "n={n}");
        assert_eq!(scan, grow, "n={n}");
    }
}

#[test]
fn residuated_counts() {
    // regression baseline; sizes up to 5 are also cross-checked by brute force
    let expected = [(2, 1), (3, 2), (4, 7), (5, 26), (6, 129), (7, 723)];
    for (n, count) in expected {
        let total: usize = catalog(n, 4).unwrap().iter().map(|r| r.models.len()).sum();
        assert_eq!(total, count, "n={n}");
    }
    for n in 2..=5 {
        let total: usize = enumerate_lattices(n, LatticeStrategy::OrderScan)
            .unwrap()
            .iter()
            .map(|s| brute_force_residuated(s).unwrap().len())
            .sum();
        assert_eq!(total, expected[n - 2].1, "n={n}");
    }
}

#[test]
fn emitted_models_validate_and_are_pairwise_non_isomorphic() {
    for n in 2..=6 {
        let mut keys = BTreeSet::new();
        for r in catalog(n, 2).unwrap() {
            for alg in &r.models {
                let again = Algebra::new(alg.names().to_vec(), alg.tables().clone(), alg.bottom(), alg.top());
                assert!(again.is_ok());
                assert!(keys.insert(canonical_form(alg)), "duplicate model at n={n}");
            }
        }
    }
}

#[test]
fn results_do_not_depend_on_worker_count() {
    for n in [5, 6] {
        for skel in enumerate_lattices(n, LatticeStrategy::OrderScan).unwrap() {
            let runs: Vec<_> = [1, 2, 8]
                .iter()
                .map(|&j| enumerate_residuated(&skel, j).unwrap())
                .collect();
            for r in &runs[1..] {
                assert_eq!(r.keys, runs[0].keys);
                assert_eq!(r.models, runs[0].models);
                assert_eq!(
                    (r.stats.candidates, r.stats.pruned, r.stats.found, r.stats.emitted),
                    (
                        runs[0].stats.candidates,
                        runs[0].stats.pruned,
                        runs[0].stats.found,
                        runs[0].stats.emitted
                    )
                );
            }
        }
    }
}

#[test]
fn out_of_range_sizes_are_rejected() {
    for n in [0, 1, 8, 64] {
        assert!(enumerate_lattices(n, LatticeStrategy::OrderScan).is_err());
        assert!(catalog(n, 1).is_err());
    }
}

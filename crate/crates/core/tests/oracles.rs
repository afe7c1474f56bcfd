//! Direct subset scans over the operation tables, compared with the library.
//! The scans use nothing but `join`, `meet`, `prod` and `leq`.

use reslat::analysis::Analysis;
use reslat::classify::classify;
use reslat::enumerate::catalog;
use reslat::{samples, Algebra, Subset};

fn set(alg: &Algebra, names: &[&str]) -> u64 {
    names.iter().map(|n| 1u64 << alg.element(n).unwrap()).sum()
}

fn has(s: u64, x: usize) -> bool {
    s >> x & 1 == 1
}

fn scan_filters(alg: &Algebra) -> Vec<u64> {
    let n = alg.size();
    (1u64..1 << n)
        .filter(|&s| {
            (0..n).all(|x| {
                !has(s, x) || (0..n).all(|y| (!alg.leq(x, y) || has(s, y)) && (!has(s, y) || has(s, alg.prod(x, y))))
            })
        })
        .collect()
}

fn full(alg: &Algebra) -> u64 {
    (1u64 << alg.size()) - 1
}

fn scan_primes(alg: &Algebra, filters: &[u64]) -> Vec<u64> {
    let n = alg.size();
    filters
        .iter()
        .copied()
        .filter(|&f| {
            f != full(alg) && (0..n).all(|x| (0..n).all(|y| !has(f, alg.join(x, y)) || has(f, x) || has(f, y)))
        })
        .collect()
}

fn strictly_inside(a: u64, b: u64) -> bool {
    a != b && a & b == a
}

fn scan_max(alg: &Algebra, filters: &[u64]) -> Vec<u64> {
    let proper: Vec<u64> = filters.iter().copied().filter(|&f| f != full(alg)).collect();
    proper
        .iter()
        .copied()
        .filter(|&f| !proper.iter().any(|&g| strictly_inside(f, g)))
        .collect()
}

fn scan_min(primes: &[u64]) -> Vec<u64> {
    primes
        .iter()
        .copied()
        .filter(|&p| !primes.iter().any(|&q| strictly_inside(q, p)))
        .collect()
}

fn perp(alg: &Algebra, s: u64) -> u64 {
    let n = alg.size();
    (0..n)
        .filter(|&a| (0..n).all(|x| !has(s, x) || alg.join(a, x) == alg.top()))
        .map(|a| 1u64 << a)
        .sum()
}

fn scan_alpha(alg: &Algebra, filters: &[u64]) -> Vec<u64> {
    filters
        .iter()
        .copied()
        .filter(|&f| (0..alg.size()).all(|x| !has(f, x) || perp(alg, perp(alg, 1 << x)) & !f == 0))
        .collect()
}

fn scan_principal(alg: &Algebra, x: usize) -> u64 {
    let mut powers = vec![x];
    loop {
        let next = alg.prod(*powers.last().unwrap(), x);
        if powers.contains(&next) {
            break;
        }
        powers.push(next);
    }
    (0..alg.size())
        .filter(|&a| powers.iter().any(|&p| alg.leq(p, a)))
        .map(|a| 1u64 << a)
        .sum()
}

fn nilpotent(alg: &Algebra, x: usize) -> bool {
    has(scan_principal(alg, x), alg.bottom())
}

fn elements_where(alg: &Algebra, p: impl Fn(usize) -> bool) -> u64 {
    (0..alg.size()).filter(|&x| p(x)).map(|x| 1u64 << x).sum()
}

fn bits(family: impl IntoIterator<Item = Subset>) -> Vec<u64> {
    let mut v: Vec<u64> = family.into_iter().map(Subset::bits).collect();
    v.sort();
    v
}

fn sorted(mut v: Vec<u64>) -> Vec<u64> {
    v.sort();
    v.dedup();
    v
}

struct Scan {
    quasicomplemented: bool,
    disjunctive: bool,
    weakly_disjunctive: bool,
    lattice_boolean: bool,
    pf_boolean: bool,
}

fn scan_predicates(alg: &Algebra) -> Scan {
    let n = alg.size();
    let p = |x: usize| perp(alg, 1 << x);
    let one = 1u64 << alg.top();
    Scan {
        quasicomplemented: (0..n).all(|x| (0..n).any(|y| perp(alg, p(x)) == p(y))),
        disjunctive: (0..n).all(|x| (0..n).all(|y| x == y || p(x) != p(y))),
        weakly_disjunctive: (0..n)
            .all(|x| (0..n).all(|y| p(x) != p(y) || scan_principal(alg, x) == scan_principal(alg, y))),
        lattice_boolean: (0..n).all(|x| (0..n).any(|y| alg.meet(x, y) == alg.bottom() && alg.join(x, y) == alg.top())),
        pf_boolean: (0..n).all(|x| {
            (0..n).any(|y| scan_principal(alg, x) & scan_principal(alg, y) == one && nilpotent(alg, alg.prod(x, y)))
        }),
    }
}

#[test]
fn a7_landscape() {
    let alg = samples::a7();
    let s = |names: &[&str]| set(&alg, names);
    let an = Analysis::compute(alg.clone()).unwrap();

    let filters = scan_filters(&alg);
    let f1 = s(&["1"]);
    let f2 = s(&["b", "d", "1"]);
    let f3 = s(&["e", "1"]);
    let f4 = s(&["a", "b", "c", "d", "e", "1"]);
    let f5 = full(&alg);
    assert_eq!(sorted(filters.clone()), sorted(vec![f1, f2, f3, f4, f5]));
    assert_eq!(bits(an.filters.iter()), sorted(filters.clone()));

    let primes = scan_primes(&alg, &filters);
    assert_eq!(sorted(primes.clone()), sorted(vec![f2, f3, f4]));
    assert_eq!(sorted(scan_max(&alg, &filters)), vec![f4]);
    assert_eq!(sorted(scan_min(&primes)), sorted(vec![f2, f3]));
    assert_eq!(bits(an.spectrum.spec.iter()), sorted(primes.clone()));
    assert_eq!(bits(an.spectrum.max.iter()), vec![f4]);
    assert_eq!(bits(an.spectrum.min.iter()), sorted(vec![f2, f3]));

    let dense = elements_where(&alg, |x| perp(&alg, 1 << x) == 1 << alg.top());
    assert_eq!(dense, s(&["0", "a", "c"]));
    assert_eq!(alg.dense_set().bits(), dense);
    let nil = elements_where(&alg, |x| nilpotent(&alg, x));
    assert_eq!(nil, s(&["0"]));
    assert_eq!(alg.nilpotent_set().bits(), nil);
    let center = elements_where(&alg, |x| {
        (0..7).any(|y| alg.meet(x, y) == alg.bottom() && alg.join(x, y) == alg.top())
    });
    assert_eq!(center, s(&["0", "1"]));
    assert_eq!(alg.boolean_center().bits(), center);

    let coannulets = sorted((0..7).map(|x| perp(&alg, 1 << x)).collect());
    assert_eq!(coannulets, sorted(vec![f1, f2, f3, f5]));
    assert_eq!(bits(an.coann.gamma.iter()), coannulets);
    assert_eq!(bits(an.coann.big_gamma.iter()), coannulets);
    assert_eq!(an.coann.gamma_view.size(), 4);
    assert!(an.coann.gamma_view.is_boolean());

    let alpha = scan_alpha(&alg, &filters);
    assert_eq!(sorted(alpha.clone()), sorted(vec![f1, f2, f3, f5]));
    assert_eq!(bits(an.alpha.members.iter()), sorted(alpha));

    let c = classify(&an).unwrap();
    let scan = scan_predicates(&alg);
    assert!(c.quasicomplemented.value && scan.quasicomplemented);
    assert!(!c.weakly_disjunctive.value && !scan.weakly_disjunctive);
    assert!(!c.disjunctive.value && !scan.disjunctive);
}

#[test]
fn catalog_agrees_with_scans() {
    for n in 2..=5 {
        for result in catalog(n, 2).unwrap() {
            for alg in &result.models {
                let an = Analysis::compute(alg.clone()).unwrap();
                let filters = scan_filters(alg);
                let primes = scan_primes(alg, &filters);
                assert_eq!(bits(an.filters.iter()), sorted(filters.clone()));
                assert_eq!(bits(an.spectrum.spec.iter()), sorted(primes.clone()));
                assert_eq!(bits(an.spectrum.max.iter()), sorted(scan_max(alg, &filters)));
                assert_eq!(bits(an.spectrum.min.iter()), sorted(scan_min(&primes)));
                assert_eq!(bits(an.alpha.members.iter()), sorted(scan_alpha(alg, &filters)));
                let coannulets = sorted((0..n).map(|x| perp(alg, 1 << x)).collect());
                assert_eq!(bits(an.coann.gamma.iter()), coannulets);

                let c = classify(&an).unwrap();
                let scan = scan_predicates(alg);
                let ctx = format!("{:?}", alg.tables().prod);
                assert_eq!(c.quasicomplemented.value, scan.quasicomplemented, "{ctx}");
                assert_eq!(c.disjunctive.value, scan.disjunctive, "{ctx}");
                assert_eq!(c.weakly_disjunctive.value, scan.weakly_disjunctive, "{ctx}");
                assert_eq!(c.lattice_boolean.value, scan.lattice_boolean, "{ctx}");
                assert_eq!(c.pf_boolean.value, scan.pf_boolean, "{ctx}");
            }
        }
    }
}

#[test]
fn every_filter_is_generated_by_its_product() {
    for n in 2..=6 {
        for result in catalog(n, 2).unwrap() {
            for alg in &result.models {
                for f in scan_filters(alg) {
                    let product = (0..n).filter(|&x| has(f, x)).fold(alg.top(), |acc, x| alg.prod(acc, x));
                    assert_eq!(scan_principal(alg, product), f);
                }
            }
        }
    }
}

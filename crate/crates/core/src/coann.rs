//! Coannihilators, the lattices γ(𝔄) and Γ(𝔄), lattice ideals of ℓ(𝔄) and
//! the ω-filters.

use crate::algebra::Algebra;
use crate::error::{CoreError, Result};
use crate::filters::{is_filter, FamilyKind, FilterFamily};
use crate::lattice::LatticeView;
use crate::spectrum::omega_raw;
use crate::subset::Subset;

/// `X^⊥ = {a : a∨x = 1 for all x ∈ X}`; `∅^⊥ = A`.
pub fn coannihilator(alg: &Algebra, x: Subset) -> Subset {
    x.iter().fold(alg.full(), |acc, y| acc & alg.perp(y))
}

/// `X^⊥⊥`.
pub fn double_coann(alg: &Algebra, x: Subset) -> Subset {
    coannihilator(alg, coannihilator(alg, x))
}

/// `x^⊥⊥` for a single element.
pub fn double_perp(alg: &Algebra, x: usize) -> Subset {
    coannihilator(alg, alg.perp(x))
}

/// The coannulets `{x^⊥}` and the coannihilators `{X^⊥}` with their
/// lattice structure.
#[derive(Clone, Debug)]
pub struct Coannihilators {
    pub gamma: FilterFamily,
    pub gamma_view: LatticeView,
    pub big_gamma: FilterFamily,
    pub big_gamma_view: LatticeView,
}

impl Coannihilators {
    /// Builds both families. Γ is the `∩`-closure of γ ∪ {A}, and its join
    /// is `(F ∪ G)^⊥⊥`. Fails if γ is not a sublattice of Γ or Γ is not
    /// Boolean.
    pub fn compute(alg: &Algebra) -> Result<Coannihilators> {
        let gamma = FilterFamily::new(alg, FamilyKind::Gamma, alg.elements().map(|x| alg.perp(x)))?;

        let mut closed: Vec<Subset> = gamma.carriers();
        closed.push(alg.full());
        let mut i = 0;
        while i < closed.len() {
            for j in 0..=i {
                let m = closed[i] & closed[j];
                if !closed.contains(&m) {
                    closed.push(m);
                }
            }
            i += 1;
        }
        let big_gamma = FilterFamily::new(alg, FamilyKind::BigGamma, closed)?;

        let view = |fam: &FilterFamily, name: &str| {
            let sets = fam.carriers();
            let labels = sets.iter().map(|&s| alg.show(s)).collect();
            LatticeView::from_set_ops(name, &sets, labels, |f, g| double_coann(alg, f | g))
                .map_err(|e| CoreError::internal("coannihilators", e.to_string()))
        };
        let gamma_view = view(&gamma, "γ")?;
        let big_gamma_view = view(&big_gamma, "Γ")?;
        if !big_gamma_view.is_boolean() {
            return Err(CoreError::internal("coannihilators", "Γ is not a Boolean lattice"));
        }
        Ok(Coannihilators {
            gamma,
            gamma_view,
            big_gamma,
            big_gamma_view,
        })
    }
}

/// `F^⊥ ∩ F = {1}` and every filter `G` with `F ∩ G = {1}` lies in `F^⊥`.
pub fn pseudocomplement_check(alg: &Algebra, f: Subset, filters: &FilterFamily) -> bool {
    let fp = coannihilator(alg, f);
    (f & fp) == alg.unit()
        && filters
            .iter()
            .filter(|&g| (f & g) == alg.unit())
            .all(|g| g.is_subset_of(fp))
}

/// A lattice ideal of ℓ(𝔄): non-empty, down-closed, `∨`-closed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LatticeIdeal {
    carrier: Subset,
}

impl LatticeIdeal {
    pub fn new(alg: &Algebra, carrier: Subset) -> Result<LatticeIdeal> {
        if !alg.is_lattice_ideal(carrier) {
            return Err(CoreError::Precondition(format!(
                "{} is not a lattice ideal",
                alg.show(carrier)
            )));
        }
        Ok(LatticeIdeal { carrier })
    }

    pub fn carrier(self) -> Subset {
        self.carrier
    }
}

/// Least lattice ideal containing `s` (non-empty), by closing under joins
/// and down-sets until stable.
pub fn generated_ideal(alg: &Algebra, s: Subset) -> Subset {
    let mut acc = s.with(alg.bottom());
    loop {
        let mut next = alg.join_closure(acc);
        for x in next {
            next |= alg.down(x);
        }
        if next == acc {
            return acc;
        }
        acc = next;
    }
}

/// Every lattice ideal, found by closing `{0}` under one-element
/// extensions. Sorted canonically.
pub fn all_ideals(alg: &Algebra) -> Vec<LatticeIdeal> {
    let mut seen = vec![generated_ideal(alg, Subset::EMPTY)];
    let mut next = 0;
    while next < seen.len() {
        let i = seen[next];
        next += 1;
        for x in alg.elements() {
            if !i.contains(x) {
                let j = generated_ideal(alg, i.with(x));
                if !seen.contains(&j) {
                    seen.push(j);
                }
            }
        }
    }
    seen.sort();
    seen.into_iter().map(|carrier| LatticeIdeal { carrier }).collect()
}

/// `ω(I) = {a : a∨x = 1 for some x ∈ I}`.
pub fn omega(alg: &Algebra, ideal: Subset) -> Result<Subset> {
    let i = LatticeIdeal::new(alg, ideal)?;
    Ok(omega_raw(alg, i.carrier))
}

/// Ω(𝔄) with `F ∨^ω G = ω(I_F ∨ I_G)`, `I_F` the largest ideal sent to `F`.
#[derive(Clone, Debug)]
pub struct OmegaLattice {
    pub family: FilterFamily,
    /// Largest ideal mapped onto each member, aligned with `family`.
    pub representatives: Vec<Subset>,
    pub view: LatticeView,
    /// Pairs of ideals `(I, J)` where `ω(I ∨ J)` differs from the join of
    /// `ω(I)` and `ω(J)` computed through representatives.
    pub join_conflicts: Vec<(Subset, Subset)>,
}

impl OmegaLattice {
    pub fn compute(alg: &Algebra, ideals: &[LatticeIdeal]) -> Result<OmegaLattice> {
        let images: Vec<Subset> = ideals.iter().map(|i| omega_raw(alg, i.carrier)).collect();
        for (i, &img) in ideals.iter().zip(&images) {
            if !is_filter(alg, img) {
                return Err(CoreError::internal(
                    "omega",
                    format!("ω({}) = {} is not a filter", alg.show(i.carrier), alg.show(img)),
                ));
            }
        }
        let family = FilterFamily::new(alg, FamilyKind::Omega, images.iter().copied())?;
        let mut representatives = Vec::with_capacity(family.len());
        for f in family.iter() {
            let rep = ideals
                .iter()
                .zip(&images)
                .filter(|(_, &img)| img == f)
                .fold(Subset::EMPTY, |acc, (i, _)| acc | i.carrier);
            if !alg.is_lattice_ideal(rep) || omega_raw(alg, rep) != f {
                return Err(CoreError::internal(
                    "omega",
                    format!("largest ideal below {} is not an ideal mapping onto it", alg.show(f)),
                ));
            }
            representatives.push(rep);
        }
        let rep_of = |f: Subset| representatives[family.position(f).expect("member of Ω")];
        let join = |f: Subset, g: Subset| omega_raw(alg, generated_ideal(alg, rep_of(f) | rep_of(g)));

        let mut join_conflicts = Vec::new();
        for (i, &fi) in ideals.iter().zip(&images) {
            for (j, &fj) in ideals.iter().zip(&images) {
                if omega_raw(alg, generated_ideal(alg, i.carrier | j.carrier)) != join(fi, fj) {
                    join_conflicts.push((i.carrier, j.carrier));
                }
            }
        }

        let sets = family.carriers();
        let labels = sets.iter().map(|&s| alg.show(s)).collect();
        let view = LatticeView::from_set_ops("Ω", &sets, labels, join)
            .map_err(|e| CoreError::internal("omega", e.to_string()))?;
        Ok(OmegaLattice {
            family,
            representatives,
            view,
            join_conflicts,
        })
    }
}

/// Proper ω-filters contain no dense element.
pub fn proper_omega_no_dense_check(alg: &Algebra, omega: &FilterFamily) -> bool {
    omega
        .iter()
        .filter(|&f| f != alg.full())
        .all(|f| f.is_disjoint(alg.dense_set()))
}

/// `X^⊥ = ⋂{𝔪 ∈ Min : X ⊄ 𝔪}`.
pub fn coannihilator_via_min_check(alg: &Algebra, min: &FilterFamily, x: Subset) -> bool {
    let meet = min
        .iter()
        .filter(|&m| !x.is_subset_of(m))
        .fold(alg.full(), |acc, m| acc & m);
    meet == coannihilator(alg, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filters::all_filters;
    use crate::samples;
    use crate::spectrum::Spectrum;

    fn set(alg: &Algebra, names: &[&str]) -> Subset {
        alg.subset_of_names(names.iter().copied()).unwrap()
    }

    #[test]
    fn coannihilators_on_a7() {
        let a7 = samples::a7();
        assert_eq!(coannihilator(&a7, set(&a7, &["b"])), set(&a7, &["e", "1"]));
        assert_eq!(coannihilator(&a7, set(&a7, &["e"])), set(&a7, &["b", "d", "1"]));
        assert_eq!(coannihilator(&a7, set(&a7, &["0"])), a7.unit());
        assert_eq!(coannihilator(&a7, Subset::EMPTY), a7.full());
        assert_eq!(double_coann(&a7, set(&a7, &["b"])), set(&a7, &["b", "d", "1"]));
        assert_eq!(double_coann(&a7, a7.unit()), a7.unit());
        assert_eq!(double_coann(&a7, set(&a7, &["a"])), a7.full());
    }

    #[test]
    fn definition_scan_matches_fold() {
        for alg in samples::exemplars() {
            for x in Subset::all(alg.size()) {
                let direct: Subset = alg
                    .elements()
                    .filter(|&a| x.iter().all(|y| alg.join(a, y) == alg.top()))
                    .collect();
                assert_eq!(coannihilator(&alg, x), direct);
            }
        }
    }

    #[test]
    fn gamma_of_a7_is_four_element_boolean() {
        let a7 = samples::a7();
        let c = Coannihilators::compute(&a7).unwrap();
        let expected = vec![a7.unit(), set(&a7, &["e", "1"]), set(&a7, &["b", "d", "1"]), a7.full()];
        assert_eq!(c.gamma.carriers(), expected);
        assert_eq!(c.big_gamma.carriers(), expected);
        assert!(c.gamma_view.is_boolean());
        let (fb, fe) = (
            c.gamma_view.node_of(set(&a7, &["e", "1"])).unwrap(),
            c.gamma_view.node_of(set(&a7, &["b", "d", "1"])).unwrap(),
        );
        assert_eq!(c.gamma_view.set(c.gamma_view.join(fb, fe)), a7.full());
    }

    #[test]
    fn big_gamma_is_every_coannihilator() {
        for alg in samples::exemplars() {
            let c = Coannihilators::compute(&alg).unwrap();
            let mut all: Vec<Subset> = Subset::all(alg.size()).map(|x| coannihilator(&alg, x)).collect();
            all.sort();
            all.dedup();
            assert_eq!(c.big_gamma.carriers(), all);
        }
    }

    #[test]
    fn pseudocomplements_on_a7() {
        let a7 = samples::a7();
        let fam = all_filters(&a7).unwrap();
        let f2 = set(&a7, &["b", "d", "1"]);
        assert_eq!(coannihilator(&a7, f2), set(&a7, &["e", "1"]));
        for f in fam.iter() {
            assert!(pseudocomplement_check(&a7, f, &fam));
        }
        assert_eq!(coannihilator(&a7, set(&a7, &["a", "b", "c", "d", "e", "1"])), a7.unit());
    }

    #[test]
    fn ideals_are_principal_and_exhaustive() {
        for alg in samples::exemplars() {
            let found: Vec<Subset> = all_ideals(&alg).into_iter().map(|i| i.carrier()).collect();
            let mut scanned: Vec<Subset> = Subset::all(alg.size()).filter(|&s| alg.is_lattice_ideal(s)).collect();
            scanned.sort();
            assert_eq!(found, scanned);
            let mut principal: Vec<Subset> = alg.elements().map(|x| alg.down(x)).collect();
            principal.sort();
            assert_eq!(found, principal);
        }
    }

    #[test]
    fn omega_on_a7() {
        let a7 = samples::a7();
        assert_eq!(omega(&a7, set(&a7, &["0", "a", "b"])).unwrap(), set(&a7, &["e", "1"]));
        assert_eq!(omega(&a7, set(&a7, &["0"])).unwrap(), a7.unit());
        assert!(omega(&a7, set(&a7, &["a"])).is_err());
        let om = OmegaLattice::compute(&a7, &all_ideals(&a7)).unwrap();
        assert!(om.join_conflicts.is_empty());
        assert!(om.view.is_distributive());
        assert!(proper_omega_no_dense_check(&a7, &om.family));
        assert_eq!(om.family.len(), 4);
    }

    #[test]
    fn coannihilator_via_min_on_a7() {
        let a7 = samples::a7();
        let s = Spectrum::compute(&a7, &all_filters(&a7).unwrap()).unwrap();
        for x in Subset::all(7) {
            assert!(coannihilator_via_min_check(&a7, &s.min, x));
        }
    }
}

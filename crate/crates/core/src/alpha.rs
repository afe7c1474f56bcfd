//! α-filters: filters that contain `x^⊥⊥` with every member `x`.

use crate::algebra::{Algebra, ElementId};
use crate::coann::{double_perp, Coannihilators};
use crate::error::{CoreError, Result};
use crate::filters::{generated_filter, is_filter, FamilyKind, FilterFamily};
use crate::lattice::LatticeView;
use crate::spectrum::{check_separation_input, dual_hull, greedy_avoiding, hull, is_prime};
use crate::subset::Subset;

/// Decides whether `f` is an α-filter four ways: the definition, and
/// closure under equal `x^⊥`, equal `d(x)` and equal `h(x)`.
pub fn is_alpha(alg: &Algebra, f: Subset, min: &FilterFamily) -> Result<bool> {
    if !is_filter(alg, f) {
        return Err(CoreError::Precondition(format!("{} is not a filter", alg.show(f))));
    }
    let by_definition = f.iter().all(|x| double_perp(alg, x).is_subset_of(f));
    let closed_under = |same: &dyn Fn(ElementId, ElementId) -> bool| {
        f.iter().all(|x| alg.elements().all(|y| !same(x, y) || f.contains(y)))
    };
    let routes = [
        by_definition,
        closed_under(&|x, y| alg.perp(x) == alg.perp(y)),
        closed_under(&|x, y| dual_hull(min, Subset::singleton(x)) == dual_hull(min, Subset::singleton(y))),
        closed_under(&|x, y| hull(min, Subset::singleton(x)) == hull(min, Subset::singleton(y))),
    ];
    if routes.iter().any(|&r| r != by_definition) {
        return Err(CoreError::internal(
            "is_alpha",
            format!("routes disagree on {}: {routes:?}", alg.show(f)),
        ));
    }
    Ok(by_definition)
}

fn is_alpha_by_definition(alg: &Algebra, f: Subset) -> bool {
    is_filter(alg, f) && f.iter().all(|x| double_perp(alg, x).is_subset_of(f))
}

/// `α(X) = ⋃_{x ∈ ℱ(X)} x^⊥⊥`.
pub fn alpha_closure(alg: &Algebra, x: Subset) -> Subset {
    generated_filter(alg, x)
        .iter()
        .fold(Subset::EMPTY, |acc, y| acc | double_perp(alg, y))
}

/// [`alpha_closure`] checked against the intersection of the α-filters
/// containing `x`.
pub fn alpha_closure_checked(alg: &Algebra, x: Subset, alpha: &FilterFamily) -> Result<Subset> {
    let by_formula = alpha_closure(alg, x);
    let by_meet = alpha
        .iter()
        .filter(|&f| x.is_subset_of(f))
        .fold(alg.full(), |acc, f| acc & f);
    if by_formula != by_meet {
        return Err(CoreError::internal(
            "alpha_closure",
            format!(
                "α({}) = {} by formula, {} by intersection",
                alg.show(x),
                alg.show(by_formula),
                alg.show(by_meet)
            ),
        ));
    }
    Ok(by_formula)
}

/// `α(F, x) = ⋃_{f ∈ F, k ≥ 0} (f⊙xᵏ)^⊥⊥`.
pub fn alpha_extend_raw(alg: &Algebra, f: Subset, x: ElementId) -> Subset {
    let powers = alg.powers(x);
    let mut out = Subset::EMPTY;
    for g in f {
        for &p in &powers {
            out |= double_perp(alg, alg.prod(g, p));
        }
    }
    out
}

/// `α(F, x)` for an α-filter `F`, checked against `α(F ∪ {x})`.
pub fn alpha_extend(alg: &Algebra, f: Subset, x: ElementId) -> Result<Subset> {
    if !is_alpha_by_definition(alg, f) {
        return Err(CoreError::Precondition(format!("{} is not an α-filter", alg.show(f))));
    }
    let closed = alpha_extend_raw(alg, f, x);
    let generated = alpha_closure(alg, f.with(x));
    if closed != generated {
        return Err(CoreError::internal(
            "alpha_extend",
            format!(
                "closed form {} differs from α(F ∪ {{{}}}) = {}",
                alg.show(closed),
                alg.name(x),
                alg.show(generated)
            ),
        ));
    }
    Ok(closed)
}

/// α(𝔄) as a Heyting algebra.
#[derive(Clone, Debug)]
pub struct AlphaFamily {
    pub members: FilterFamily,
    /// Lattice under `∩` and `∨^α`.
    pub view: LatticeView,
    /// `heyting[i * m + j]` is the node of `Fᵢ ↪ Fⱼ`.
    heyting: Vec<usize>,
}

impl AlphaFamily {
    /// Selects the α-filters, builds the lattice and the implication table,
    /// and checks the frame law and the Heyting adjunction.
    pub fn compute(alg: &Algebra, filters: &FilterFamily, min: &FilterFamily) -> Result<AlphaFamily> {
        let mut chosen = Vec::new();
        for f in filters.iter() {
            if is_alpha(alg, f, min)? {
                chosen.push(f);
            }
        }
        let members = FilterFamily::new(alg, FamilyKind::Alpha, chosen)?;
        if !members.contains(alg.unit()) || !members.contains(alg.full()) {
            return Err(CoreError::internal("alpha_family", "{1} or A is not an α-filter"));
        }
        let sets = members.carriers();
        let labels = sets.iter().map(|&s| alg.show(s)).collect();
        let view = LatticeView::from_set_ops("α", &sets, labels, |f, g| alpha_closure(alg, f | g))
            .map_err(|e| CoreError::internal("alpha_family", e.to_string()))?;
        if !crate::filters::frame_check(&view) {
            return Err(CoreError::internal("alpha_family", "α(𝔄) is not a frame"));
        }

        let m = sets.len();
        let mut heyting = vec![0; m * m];
        for i in 0..m {
            for j in 0..m {
                let union = sets
                    .iter()
                    .filter(|&&h| (sets[i] & h).is_subset_of(sets[j]))
                    .fold(Subset::EMPTY, |acc, &h| acc | h);
                let imp = generated_filter(alg, union);
                heyting[i * m + j] = members.position(imp).ok_or_else(|| {
                    CoreError::internal(
                        "heyting_impl",
                        format!(
                            "{} ↪ {} = {} is not an α-filter",
                            alg.show(sets[i]),
                            alg.show(sets[j]),
                            alg.show(imp)
                        ),
                    )
                })?;
            }
        }
        let fam = AlphaFamily { members, view, heyting };
        for i in 0..m {
            for j in 0..m {
                let imp = sets[fam.heyting[i * m + j]];
                for &h in &sets {
                    if (h & sets[i]).is_subset_of(sets[j]) != h.is_subset_of(imp) {
                        return Err(CoreError::internal(
                            "heyting_impl",
                            format!(
                                "adjunction fails for H={} F={} G={}",
                                alg.show(h),
                                alg.show(sets[i]),
                                alg.show(sets[j])
                            ),
                        ));
                    }
                }
            }
        }
        Ok(fam)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    fn node(&self, f: Subset) -> Result<usize> {
        self.members
            .position(f)
            .ok_or_else(|| CoreError::Precondition(format!("{f:?} is not an α-filter")))
    }

    /// `F ∨^α G = α(F ∪ G)`.
    pub fn alpha_join(&self, f: Subset, g: Subset) -> Result<Subset> {
        Ok(self.view.set(self.view.join(self.node(f)?, self.node(g)?)))
    }

    /// `F ↪ G = ⋎{H ∈ α(𝔄) : F ∩ H ⊆ G}`.
    pub fn heyting_impl(&self, f: Subset, g: Subset) -> Result<Subset> {
        let m = self.len();
        Ok(self.view.set(self.heyting[self.node(f)? * m + self.node(g)?]))
    }
}

/// A lattice filter of γ(𝔄), as a set of γ nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GammaFilter {
    pub nodes: Subset,
}

/// `Φ(F) = {x^⊥ : x ∈ F}`; must be a lattice filter of γ(𝔄).
pub fn adjunction_phi(alg: &Algebra, coann: &Coannihilators, f: Subset) -> Result<GammaFilter> {
    let view = &coann.gamma_view;
    let nodes: Subset = f
        .iter()
        .map(|x| view.node_of(alg.perp(x)).expect("coannulets are γ nodes"))
        .collect();
    if !view.is_lattice_filter(nodes) {
        return Err(CoreError::internal(
            "adjunction_phi",
            format!("Φ({}) is not a filter of γ", alg.show(f)),
        ));
    }
    Ok(GammaFilter { nodes })
}

/// `Ψ(G) = {x : x^⊥ ∈ G}`.
pub fn adjunction_psi(alg: &Algebra, coann: &Coannihilators, g: GammaFilter) -> Subset {
    let view = &coann.gamma_view;
    alg.elements()
        .filter(|&x| {
            g.nodes
                .contains(view.node_of(alg.perp(x)).expect("coannulets are γ nodes"))
        })
        .collect()
}

/// Every lattice filter of γ(𝔄).
pub fn gamma_filters(coann: &Coannihilators) -> Vec<GammaFilter> {
    coann
        .gamma_view
        .lattice_filters()
        .into_iter()
        .map(|nodes| GammaFilter { nodes })
        .collect()
}

/// Checks `Φ(F) ⊆ G ⟺ F ⊆ Ψ(G)` on all pairs, `ΨΦ = α` on all filters,
/// and that the fixed points of `ΨΦ` are exactly α(𝔄). One line per failure.
pub fn adjunction_failures(
    alg: &Algebra,
    filters: &FilterFamily,
    coann: &Coannihilators,
    alpha: &FilterFamily,
) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let gfs = gamma_filters(coann);
    let mut fixed = Vec::new();
    for f in filters.iter() {
        let phi = adjunction_phi(alg, coann, f)?;
        for &g in &gfs {
            let psi = adjunction_psi(alg, coann, g);
            if phi.nodes.is_subset_of(g.nodes) != f.is_subset_of(psi) {
                out.push(format!(
                    "Φ({}) ⊆ G disagrees with F ⊆ Ψ(G) for G={:?}",
                    alg.show(f),
                    g.nodes
                ));
            }
        }
        let round = adjunction_psi(alg, coann, phi);
        if round != alpha_closure(alg, f) {
            out.push(format!("ΨΦ({}) = {} ≠ α(F)", alg.show(f), alg.show(round)));
        }
        if round == f {
            fixed.push(f);
        }
    }
    if fixed != alpha.carriers() {
        out.push("fixed points of ΨΦ differ from α(𝔄)".into());
    }
    Ok(out)
}

/// An α-filter containing `f`, maximal among α-filters avoiding the
/// `∨`-closed set `c`; checked to be prime.
pub fn alpha_separate(alg: &Algebra, f: Subset, c: Subset) -> Result<Subset> {
    if !is_alpha_by_definition(alg, f) {
        return Err(CoreError::Precondition(format!("{} is not an α-filter", alg.show(f))));
    }
    check_separation_input(alg, f, c)?;
    let p = greedy_avoiding(alg, f, c, |p, x| alpha_extend_raw(alg, p, x));
    if !is_prime(alg, p)?.is_prime() {
        return Err(CoreError::internal(
            "alpha_separate",
            format!("maximal α-filter {} avoiding {} is not prime", alg.show(p), alg.show(c)),
        ));
    }
    Ok(p)
}

/// Prime α-filters.
pub fn spec_alpha(spec: &FilterFamily, alpha: &FilterFamily) -> FilterFamily {
    spec.intersect(alpha, FamilyKind::Spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filters::all_filters;
    use crate::samples;
    use crate::spectrum::Spectrum;

    struct Fixture {
        alg: Algebra,
        filters: FilterFamily,
        spectrum: Spectrum,
        coann: Coannihilators,
    }

    fn fixture(alg: Algebra) -> Fixture {
        let filters = all_filters(&alg).unwrap();
        let spectrum = Spectrum::compute(&alg, &filters).unwrap();
        let coann = Coannihilators::compute(&alg).unwrap();
        Fixture {
            alg,
            filters,
            spectrum,
            coann,
        }
    }

    fn set(alg: &Algebra, names: &[&str]) -> Subset {
        alg.subset_of_names(names.iter().copied()).unwrap()
    }

    #[test]
    fn alpha_filters_of_a7() {
        let fx = fixture(samples::a7());
        let a7 = &fx.alg;
        let min = &fx.spectrum.min;
        assert!(is_alpha(a7, set(a7, &["b", "d", "1"]), min).unwrap());
        assert!(is_alpha(a7, set(a7, &["e", "1"]), min).unwrap());
        assert!(!is_alpha(a7, set(a7, &["a", "b", "c", "d", "e", "1"]), min).unwrap());
        assert!(is_alpha(a7, a7.unit(), min).unwrap());
        assert!(is_alpha(a7, a7.full(), min).unwrap());
        let fam = AlphaFamily::compute(a7, &fx.filters, min).unwrap();
        assert_eq!(
            fam.members.carriers(),
            vec![a7.unit(), set(a7, &["e", "1"]), set(a7, &["b", "d", "1"]), a7.full()]
        );
        assert!(fam.view.is_boolean());
    }

    #[test]
    fn closures_on_a7() {
        let a7 = samples::a7();
        assert_eq!(alpha_closure(&a7, set(&a7, &["a", "b", "c", "d", "e", "1"])), a7.full());
        assert_eq!(alpha_closure(&a7, a7.unit()), a7.unit());
        assert_eq!(alpha_closure(&a7, set(&a7, &["d"])), set(&a7, &["b", "d", "1"]));
        let b = a7.element("b").unwrap();
        assert_eq!(alpha_extend(&a7, a7.unit(), b).unwrap(), set(&a7, &["b", "d", "1"]));
        let f3 = set(&a7, &["e", "1"]);
        assert_eq!(alpha_extend(&a7, f3, a7.top()).unwrap(), f3);
        assert_eq!(alpha_extend(&a7, f3, b).unwrap(), a7.full());
    }

    #[test]
    fn heyting_on_a7() {
        let fx = fixture(samples::a7());
        let a7 = &fx.alg;
        let fam = AlphaFamily::compute(a7, &fx.filters, &fx.spectrum.min).unwrap();
        let f2 = set(a7, &["b", "d", "1"]);
        let f3 = set(a7, &["e", "1"]);
        assert_eq!(fam.heyting_impl(f2, a7.unit()).unwrap(), f3);
        assert_eq!(fam.alpha_join(f2, f3).unwrap(), a7.full());
        for f in fam.members.iter() {
            assert_eq!(fam.heyting_impl(f, f).unwrap(), a7.full());
        }
    }

    #[test]
    fn adjunction_on_a7() {
        let fx = fixture(samples::a7());
        let a7 = &fx.alg;
        let fam = AlphaFamily::compute(a7, &fx.filters, &fx.spectrum.min).unwrap();
        let f2 = set(a7, &["b", "d", "1"]);
        let phi = adjunction_phi(a7, &fx.coann, f2).unwrap();
        let expected: Subset = [set(a7, &["e", "1"]), a7.full()]
            .into_iter()
            .map(|s| fx.coann.gamma_view.node_of(s).unwrap())
            .collect();
        assert_eq!(phi.nodes, expected);
        let whole = GammaFilter {
            nodes: Subset::full(fx.coann.gamma_view.size()),
        };
        assert_eq!(adjunction_psi(a7, &fx.coann, whole), a7.full());
        let f4 = set(a7, &["a", "b", "c", "d", "e", "1"]);
        let round = adjunction_psi(a7, &fx.coann, adjunction_phi(a7, &fx.coann, f4).unwrap());
        assert_eq!(round, a7.full());
        assert!(adjunction_failures(a7, &fx.filters, &fx.coann, &fam.members)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn alpha_separation_on_a7() {
        let fx = fixture(samples::a7());
        let a7 = &fx.alg;
        let fam = AlphaFamily::compute(a7, &fx.filters, &fx.spectrum.min).unwrap();
        let sa = spec_alpha(&fx.spectrum.spec, &fam.members);
        assert_eq!(sa.carriers(), vec![set(a7, &["e", "1"]), set(a7, &["b", "d", "1"])]);
        assert_eq!(
            alpha_separate(a7, a7.unit(), set(a7, &["c"])).unwrap(),
            set(a7, &["b", "d", "1"])
        );
        let b = set(a7, &["b"]);
        let meet = sa
            .iter()
            .filter(|&p| b.is_subset_of(p))
            .fold(a7.full(), |acc, p| acc & p);
        assert_eq!(alpha_closure(a7, b), meet);
        assert!(alpha_separate(a7, set(a7, &["a", "b", "c", "d", "e", "1"]), set(a7, &["0"])).is_err());
    }

    #[test]
    fn closure_laws_on_exemplars() {
        for alg in samples::exemplars() {
            let fx = fixture(alg);
            let alg = &fx.alg;
            let fam = AlphaFamily::compute(alg, &fx.filters, &fx.spectrum.min).unwrap();
            for x in Subset::all(alg.size()) {
                let ax = alpha_closure_checked(alg, x, &fam.members).unwrap();
                assert!(x.is_subset_of(ax));
                assert_eq!(alpha_closure(alg, ax), ax);
            }
        }
    }
}

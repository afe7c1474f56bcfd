//! Filters: recognition, generation, the family ℱ(𝔄) and its lattice.

use serde::Serialize;

use crate::algebra::{Algebra, ElementId};
use crate::error::{CoreError, Result};
use crate::lattice::LatticeView;
use crate::subset::Subset;

/// A filter together with a principal generator when one is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Filter {
    pub carrier: Subset,
    pub generator: Option<ElementId>,
}

/// Which family a [`FilterFamily`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    All,
    Spec,
    Min,
    Max,
    Alpha,
    Gamma,
    BigGamma,
    Omega,
}

/// Deduplicated filters in canonical order (size, then bits).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterFamily {
    kind: FamilyKind,
    members: Vec<Filter>,
}

impl FilterFamily {
    /// Builds a family, checking that every member is a filter.
    pub fn new(alg: &Algebra, kind: FamilyKind, sets: impl IntoIterator<Item = Subset>) -> Result<Self> {
        let mut carriers: Vec<Subset> = sets.into_iter().collect();
        carriers.sort();
        carriers.dedup();
        let mut members = Vec::with_capacity(carriers.len());
        for carrier in carriers {
            if !is_filter(alg, carrier) {
                return Err(CoreError::internal(
                    "filter family",
                    format!("{:?} member {} is not a filter", kind, alg.show(carrier)),
                ));
            }
            let generator = alg
                .elements()
                .find(|&x| carrier.contains(x) && principal(alg, x) == carrier);
            members.push(Filter { carrier, generator });
        }
        Ok(FilterFamily { kind, members })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn members(&self) -> &[Filter] {
        &self.members
    }

    pub fn carriers(&self) -> Vec<Subset> {
        self.members.iter().map(|f| f.carrier).collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.position(s).is_some()
    }

    pub fn position(&self, s: Subset) -> Option<usize> {
        self.members.iter().position(|f| f.carrier == s)
    }

    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.members.iter().map(|f| f.carrier)
    }

    /// Members of `self` that also belong to `other`, tagged `kind`.
    pub fn intersect(&self, other: &FilterFamily, kind: FamilyKind) -> FilterFamily {
        FilterFamily {
            kind,
            members: self
                .members
                .iter()
                .filter(|f| other.contains(f.carrier))
                .copied()
                .collect(),
        }
    }

    pub fn is_subfamily_of(&self, other: &FilterFamily) -> bool {
        self.iter().all(|s| other.contains(s))
    }

    /// One filter per line, in canonical order.
    pub fn render(&self, alg: &Algebra) -> String {
        let mut out = String::new();
        for f in &self.members {
            out.push_str(&alg.show(f.carrier));
            out.push('\n');
        }
        out
    }
}

/// Non-empty, closed under `⊙`, and `x∨y ∈ S` for `x ∈ S`, `y ∈ A`.
pub fn is_filter(alg: &Algebra, s: Subset) -> bool {
    if s.is_empty() {
        return false;
    }
    for x in s {
        if !alg.up(x).is_subset_of(s) {
            return false;
        }
        for y in s {
            if !s.contains(alg.prod(x, y)) {
                return false;
            }
        }
    }
    true
}

pub fn is_proper(alg: &Algebra, f: Subset) -> bool {
    !f.contains(alg.bottom())
}

/// Least filter containing `x`, by fixpoint iteration; `ℱ(∅) = {1}`.
pub fn generated_filter(alg: &Algebra, x: Subset) -> Subset {
    let mut acc = x.with(alg.top());
    let mut work: Vec<ElementId> = acc.iter().collect();
    while let Some(a) = work.pop() {
        let mut fresh = alg.up(a);
        for b in acc {
            fresh.insert(alg.prod(a, b));
        }
        for c in fresh - acc {
            acc.insert(c);
            work.push(c);
        }
    }
    acc
}

/// `ℱ(x) = {a : xᵏ ≤ a for some k}`, read off the lowest power.
pub fn principal(alg: &Algebra, x: ElementId) -> Subset {
    let low = *alg.powers(x).last().unwrap();
    alg.up(low)
}

/// `ℱ(F, x) = {a : f⊙xᵏ ≤ a, f ∈ F, k ≥ 0}` by the closed form.
pub fn extend_filter(alg: &Algebra, f: Subset, x: ElementId) -> Subset {
    let powers = alg.powers(x);
    let mut out = Subset::EMPTY;
    for g in f {
        for &p in &powers {
            out |= alg.up(alg.prod(g, p));
        }
    }
    out
}

/// [`extend_filter`] cross-checked against generating from `F ∪ {x}`.
pub fn extend_filter_checked(alg: &Algebra, f: Subset, x: ElementId) -> Result<Subset> {
    let closed = extend_filter(alg, f, x);
    let generated = generated_filter(alg, f.with(x));
    if closed != generated {
        return Err(CoreError::internal(
            "extend_filter",
            format!(
                "closed form {} differs from generated {} for F={} x={}",
                alg.show(closed),
                alg.show(generated),
                alg.show(f),
                alg.name(x)
            ),
        ));
    }
    Ok(closed)
}

pub fn filter_meet(f: Subset, g: Subset) -> Subset {
    f & g
}

pub fn filter_join(alg: &Algebra, f: Subset, g: Subset) -> Subset {
    generated_filter(alg, f | g)
}

/// ℱ(𝔄), computed from principal filters and independently by closing
/// `{1}` under one-element extensions; the two must agree.
pub fn all_filters(alg: &Algebra) -> Result<FilterFamily> {
    let mut principal_route: Vec<Subset> = alg.elements().map(|x| principal(alg, x)).collect();
    principal_route.sort();
    principal_route.dedup();

    let mut seen = vec![alg.unit()];
    let mut next = 0;
    while next < seen.len() {
        let f = seen[next];
        next += 1;
        for x in alg.elements() {
            if f.contains(x) {
                continue;
            }
            let g = extend_filter_checked(alg, f, x)?;
            if !seen.contains(&g) {
                seen.push(g);
            }
        }
    }
    seen.sort();
    if seen != principal_route {
        return Err(CoreError::internal(
            "all_filters",
            format!(
                "principal filters give {} members, extension closure gives {}",
                principal_route.len(),
                seen.len()
            ),
        ));
    }
    FilterFamily::new(alg, FamilyKind::All, seen)
}

/// The filters of `family` as a lattice under `∩` and generated join.
pub fn filter_lattice(alg: &Algebra, family: &FilterFamily, name: &str) -> Result<LatticeView> {
    let sets = family.carriers();
    let labels = sets.iter().map(|&s| alg.show(s)).collect();
    LatticeView::from_set_ops(name, &sets, labels, |f, g| filter_join(alg, f, g))
        .map_err(|e| CoreError::internal("filter lattice", e.to_string()))
}

/// Whether meet distributes over joins. For a finite lattice the binary law
/// plus `F ∩ ⋁∅ = ⋁∅` (bottom absorbs) covers every finite family.
pub fn frame_check(view: &LatticeView) -> bool {
    view.nodes().all(|a| view.meet(a, view.bottom()) == view.bottom()) && view.is_distributive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn set(alg: &Algebra, names: &[&str]) -> Subset {
        alg.subset_of_names(names.iter().copied()).unwrap()
    }

    #[test]
    fn recognises_filters_of_a7() {
        let a7 = samples::a7();
        assert!(is_filter(&a7, set(&a7, &["b", "d", "1"])));
        assert!(!is_filter(&a7, set(&a7, &["d", "1"])));
        assert!(is_filter(&a7, a7.unit()));
        assert!(!is_filter(&a7, Subset::EMPTY));
    }

    #[test]
    fn generation_on_a7() {
        let a7 = samples::a7();
        assert_eq!(generated_filter(&a7, set(&a7, &["b"])), set(&a7, &["b", "d", "1"]));
        assert_eq!(
            generated_filter(&a7, set(&a7, &["a"])),
            set(&a7, &["a", "b", "c", "d", "e", "1"])
        );
        assert_eq!(generated_filter(&a7, set(&a7, &["1"])), a7.unit());
        assert_eq!(generated_filter(&a7, Subset::EMPTY), a7.unit());
    }

    #[test]
    fn extension_on_a7() {
        let a7 = samples::a7();
        let e = a7.element("e").unwrap();
        let b = a7.element("b").unwrap();
        let f3 = set(&a7, &["e", "1"]);
        assert_eq!(extend_filter_checked(&a7, a7.unit(), e).unwrap(), f3);
        assert_eq!(extend_filter_checked(&a7, f3, a7.top()).unwrap(), f3);
        assert_eq!(
            extend_filter_checked(&a7, f3, b).unwrap(),
            set(&a7, &["a", "b", "c", "d", "e", "1"])
        );
    }

    #[test]
    fn all_filters_of_a7_in_canonical_order() {
        let a7 = samples::a7();
        let fam = all_filters(&a7).unwrap();
        let shown: Vec<String> = fam.iter().map(|f| a7.show(f)).collect();
        assert_eq!(
            shown,
            vec!["{1}", "{e,1}", "{b,d,1}", "{a,b,c,d,e,1}", "{0,a,b,c,d,e,1}"]
        );
        assert_eq!(fam.members()[2].generator, a7.element("b"));
    }

    #[test]
    fn joins_and_meets_on_a7() {
        let a7 = samples::a7();
        let f2 = set(&a7, &["b", "d", "1"]);
        let f3 = set(&a7, &["e", "1"]);
        assert_eq!(filter_meet(f2, f3), a7.unit());
        assert_eq!(filter_join(&a7, f2, f3), set(&a7, &["a", "b", "c", "d", "e", "1"]));
        assert_eq!(filter_join(&a7, f2, a7.unit()), f2);
    }

    #[test]
    fn filter_lattices_are_frames() {
        for alg in samples::exemplars() {
            let fam = all_filters(&alg).unwrap();
            let view = filter_lattice(&alg, &fam, "F").unwrap();
            assert!(frame_check(&view));
        }
    }

    #[test]
    fn nondistributive_family_is_not_a_frame() {
        let sets = [0b000, 0b001, 0b010, 0b100, 0b111].map(Subset::from_bits);
        let labels = (0..5).map(|i| i.to_string()).collect();
        let m3 = LatticeView::from_set_family("M3", &sets, labels).unwrap();
        assert!(!frame_check(&m3));
    }

    #[test]
    fn two_chain_filters() {
        let c = samples::chain2();
        let fam = all_filters(&c).unwrap();
        assert_eq!(fam.carriers(), vec![c.unit(), c.full()]);
    }
}

//! Prime, maximal and minimal prime filters, separation, `D(P)`, and the
//! hull-kernel topologies on the minimal prime spectrum.

use std::collections::BTreeSet;

use crate::algebra::{Algebra, ElementId};
use crate::error::{CoreError, Result};
use crate::filters::{extend_filter, is_filter, is_proper, FamilyKind, FilterFamily};
use crate::subset::Subset;

/// Outcome of a primality test: `failure` is a pair `(x, y)` with
/// `x∨y ∈ F` and `x, y ∉ F`, when one exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeWitness {
    pub filter: Subset,
    pub failure: Option<(ElementId, ElementId)>,
}

impl PrimeWitness {
    pub fn is_prime(&self) -> bool {
        self.failure.is_none()
    }
}

pub fn is_prime(alg: &Algebra, f: Subset) -> Result<PrimeWitness> {
    if !is_filter(alg, f) {
        return Err(CoreError::Precondition(format!("{} is not a filter", alg.show(f))));
    }
    if !is_proper(alg, f) {
        return Err(CoreError::Precondition(format!(
            "{} is not a proper filter",
            alg.show(f)
        )));
    }
    let mut failure = None;
    'scan: for x in alg.elements() {
        for y in alg.elements() {
            if f.contains(alg.join(x, y)) && !f.contains(x) && !f.contains(y) {
                failure = Some((x, y));
                break 'scan;
            }
        }
    }
    Ok(PrimeWitness { filter: f, failure })
}

/// Prime test through the complement: `Fᶜ` is non-empty, down-closed and
/// `∨`-closed.
pub fn complement_is_prime_ideal(alg: &Algebra, f: Subset) -> bool {
    alg.is_lattice_ideal(f.complement(alg.size()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub spec: FilterFamily,
    pub max: FilterFamily,
    pub min: FilterFamily,
}

impl Spectrum {
    pub fn compute(alg: &Algebra, filters: &FilterFamily) -> Result<Spectrum> {
        let mut primes = Vec::new();
        for f in filters.iter().filter(|&f| is_proper(alg, f)) {
            if is_prime(alg, f)?.is_prime() {
                primes.push(f);
            }
        }
        let spec = FilterFamily::new(alg, FamilyKind::Spec, primes)?;
        let proper: Vec<Subset> = filters.iter().filter(|&f| is_proper(alg, f)).collect();
        let max = FilterFamily::new(
            alg,
            FamilyKind::Max,
            proper
                .iter()
                .copied()
                .filter(|&f| !proper.iter().any(|&g| g != f && f.is_subset_of(g))),
        )?;
        if !max.is_subfamily_of(&spec) {
            return Err(CoreError::internal("spectrum", "a maximal filter is not prime"));
        }
        let min = min_over(alg, &spec, alg.unit())?;
        Ok(Spectrum { spec, max, min })
    }
}

/// Inclusion-minimal primes containing `x`.
pub fn min_over(alg: &Algebra, spec: &FilterFamily, x: Subset) -> Result<FilterFamily> {
    let over: Vec<Subset> = spec.iter().filter(|&p| x.is_subset_of(p)).collect();
    FilterFamily::new(
        alg,
        FamilyKind::Min,
        over.iter()
            .copied()
            .filter(|&p| !over.iter().any(|&q| q != p && q.is_subset_of(p))),
    )
}

/// First pair of `c` whose join leaves `c`, if any.
pub fn join_closure_failure(alg: &Algebra, c: Subset) -> Option<(ElementId, ElementId)> {
    for x in c {
        for y in c {
            if !c.contains(alg.join(x, y)) {
                return Some((x, y));
            }
        }
    }
    None
}

pub(crate) fn check_separation_input(alg: &Algebra, f: Subset, c: Subset) -> Result<()> {
    if c.is_empty() {
        return Err(CoreError::Precondition("the set to avoid is empty".into()));
    }
    if let Some((x, y)) = join_closure_failure(alg, c) {
        return Err(CoreError::Precondition(format!(
            "{} is not ∨-closed: {}∨{} = {} is missing",
            alg.show(c),
            alg.name(x),
            alg.name(y),
            alg.name(alg.join(x, y))
        )));
    }
    if let Some(x) = (f & c).first() {
        return Err(CoreError::Precondition(format!(
            "{} already meets {} at {}",
            alg.show(f),
            alg.show(c),
            alg.name(x)
        )));
    }
    Ok(())
}

/// Greedy maximalisation: extend by the smallest element whose extension
/// still avoids `c`, until none does. `extend` is the one-step extension
/// of the family being maximised in.
pub(crate) fn greedy_avoiding(
    alg: &Algebra,
    start: Subset,
    c: Subset,
    extend: impl Fn(Subset, ElementId) -> Subset,
) -> Subset {
    let mut p = start;
    'grow: loop {
        for x in alg.elements() {
            if p.contains(x) {
                continue;
            }
            let q = extend(p, x);
            if q.is_disjoint(c) {
                p = q;
                continue 'grow;
            }
        }
        return p;
    }
}

/// A filter containing `f`, maximal among filters avoiding the `∨`-closed
/// set `c`. The result is checked to be prime.
pub fn separate(alg: &Algebra, f: Subset, c: Subset) -> Result<Subset> {
    if !is_filter(alg, f) {
        return Err(CoreError::Precondition(format!("{} is not a filter", alg.show(f))));
    }
    check_separation_input(alg, f, c)?;
    let p = greedy_avoiding(alg, f, c, |p, x| extend_filter(alg, p, x));
    if !is_prime(alg, p)?.is_prime() {
        return Err(CoreError::internal(
            "separate",
            format!("maximal filter {} avoiding {} is not prime", alg.show(p), alg.show(c)),
        ));
    }
    Ok(p)
}

/// `P` is a minimal prime iff `Pᶜ` is a `∨`-closed set avoiding `1` that is
/// maximal with that property. Cross-checked against `min`.
pub fn minimal_prime_check(alg: &Algebra, p: Subset, min: &FilterFamily) -> Result<bool> {
    if !is_prime(alg, p)?.is_prime() {
        return Err(CoreError::Precondition(format!("{} is not prime", alg.show(p))));
    }
    let comp = p.complement(alg.size());
    let by_complement = alg.is_join_closed(comp)
        && !comp.contains(alg.top())
        && (p - alg.unit())
            .iter()
            .all(|y| alg.join_closure(comp.with(y)).contains(alg.top()));
    let by_family = min.contains(p);
    if by_complement != by_family {
        return Err(CoreError::internal(
            "minimal_prime_check",
            format!(
                "{}: complement test says {by_complement}, Min membership says {by_family}",
                alg.show(p)
            ),
        ));
    }
    Ok(by_complement)
}

/// `ω(I) = {a : a∨x = 1 for some x ∈ I}` without the ideal check.
pub(crate) fn omega_raw(alg: &Algebra, i: Subset) -> Subset {
    i.iter().fold(Subset::EMPTY, |acc, x| acc | alg.perp(x))
}

/// `D(P) = ω(Pᶜ)`, checked against the intersection of the minimal primes
/// below `P` and against the three-way characterisation of minimality.
pub fn dee(alg: &Algebra, p: Subset, min: &FilterFamily) -> Result<Subset> {
    if !is_prime(alg, p)?.is_prime() {
        return Err(CoreError::Precondition(format!("{} is not prime", alg.show(p))));
    }
    let d = omega_raw(alg, p.complement(alg.size()));
    let below = min
        .iter()
        .filter(|&m| m.is_subset_of(p))
        .fold(alg.full(), |acc, m| acc & m);
    if d != below {
        return Err(CoreError::internal(
            "dee",
            format!(
                "ω(Pᶜ) = {} but ⋂ minimal primes below = {}",
                alg.show(d),
                alg.show(below)
            ),
        ));
    }
    let minimal = min.contains(p);
    let fixed = d == p;
    let exactly_one = alg.elements().all(|x| p.contains(x) != alg.perp(x).is_subset_of(p));
    if minimal != fixed || minimal != exactly_one {
        return Err(CoreError::internal(
            "dee",
            format!(
                "{}: minimal={minimal}, P=D(P) is {fixed}, exactly-one-of is {exactly_one}",
                alg.show(p)
            ),
        ));
    }
    Ok(d)
}

/// `h(X)`: the minimal primes containing `x`, as a set of indices into `min`.
pub fn hull(min: &FilterFamily, x: Subset) -> Subset {
    min.iter()
        .enumerate()
        .filter(|(_, m)| x.is_subset_of(*m))
        .map(|(i, _)| i)
        .collect()
}

/// `d(X) = Min ∖ h(X)`.
pub fn dual_hull(min: &FilterFamily, x: Subset) -> Subset {
    hull(min, x).complement(min.len())
}

/// `k(𝔐)`: intersection of the chosen minimal primes (`A` when none).
pub fn kernel(alg: &Algebra, min: &FilterFamily, points: Subset) -> Subset {
    points.iter().fold(alg.full(), |acc, i| acc & min.members()[i].carrier)
}

/// A finite topology given by its open sets, over points `0..points`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Topology {
    points: usize,
    opens: Vec<Subset>,
}

impl Topology {
    /// Topology generated by a subbasis of open sets.
    pub fn generated(points: usize, subbasis: impl IntoIterator<Item = Subset>) -> Result<Topology> {
        let space = Subset::full(points);
        let mut basis: BTreeSet<Subset> = BTreeSet::from([space]);
        for s in subbasis {
            let fresh: Vec<Subset> = basis.iter().map(|&b| b & s).collect();
            basis.extend(fresh);
            basis.insert(s);
        }
        let mut opens: BTreeSet<Subset> = BTreeSet::from([Subset::EMPTY]);
        for &b in &basis {
            let fresh: Vec<Subset> = opens.iter().map(|&o| o | b).collect();
            opens.extend(fresh);
        }
        let t = Topology {
            points,
            opens: opens.into_iter().collect(),
        };
        if let Some(problem) = t.closure_failure() {
            return Err(CoreError::internal("topology", problem));
        }
        Ok(t)
    }

    fn closure_failure(&self) -> Option<String> {
        let space = Subset::full(self.points);
        if !self.is_open(Subset::EMPTY) || !self.is_open(space) {
            return Some("∅ or the whole space is not open".into());
        }
        for &a in &self.opens {
            for &b in &self.opens {
                if !self.is_open(a | b) || !self.is_open(a & b) {
                    return Some(format!("opens {a:?} and {b:?} are not closed under ∪/∩"));
                }
            }
        }
        None
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn opens(&self) -> &[Subset] {
        &self.opens
    }

    pub fn is_open(&self, s: Subset) -> bool {
        self.opens.binary_search(&s).is_ok()
    }

    pub fn is_closed(&self, s: Subset) -> bool {
        self.is_open(s.complement(self.points))
    }

    pub fn clopens(&self) -> Vec<Subset> {
        self.opens.iter().copied().filter(|&o| self.is_closed(o)).collect()
    }

    /// Every open set of `other` is open here.
    pub fn is_finer_than(&self, other: &Topology) -> bool {
        self.points == other.points && other.opens.iter().all(|&o| self.is_open(o))
    }

    /// Every open set is a union of clopen sets.
    pub fn is_zero_dimensional(&self) -> bool {
        let clopens = self.clopens();
        self.opens.iter().all(|&o| {
            let union = clopens
                .iter()
                .filter(|c| c.is_subset_of(o))
                .fold(Subset::EMPTY, |acc, &c| acc | c);
            union == o
        })
    }

    /// Every open cover has a finite subcover. Checked on the covers made of
    /// the proper open sets and of all open sets: a subcover is extracted
    /// greedily and must reach the whole space.
    pub fn is_compact(&self) -> bool {
        let space = Subset::full(self.points);
        let proper: Vec<Subset> = self.opens.iter().copied().filter(|&o| o != space).collect();
        [proper, self.opens.clone()].iter().all(|cover| {
            let union = cover.iter().fold(Subset::EMPTY, |acc, &o| acc | o);
            union != space || greedy_subcover(cover, space).is_some()
        })
    }

    pub fn is_discrete(&self) -> bool {
        self.opens.len() == 1usize << self.points
    }
}

fn greedy_subcover(cover: &[Subset], space: Subset) -> Option<Vec<Subset>> {
    let mut chosen = Vec::new();
    let mut covered = Subset::EMPTY;
    while covered != space {
        let best = cover.iter().copied().max_by_key(|o| (*o - covered).len())?;
        if (best - covered).is_empty() {
            return None;
        }
        covered |= best;
        chosen.push(best);
    }
    Some(chosen)
}

/// Hull-kernel topology: the sets `h(x)` form a closed subbasis.
pub fn tau_h(alg: &Algebra, min: &FilterFamily) -> Result<Topology> {
    Topology::generated(min.len(), alg.elements().map(|x| dual_hull(min, Subset::singleton(x))))
}

/// Dual hull-kernel topology: the sets `h(x)` form an open subbasis.
pub fn tau_d(alg: &Algebra, min: &FilterFamily) -> Result<Topology> {
    Topology::generated(min.len(), alg.elements().map(|x| hull(min, Subset::singleton(x))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filters::all_filters;
    use crate::samples;

    fn set(alg: &Algebra, names: &[&str]) -> Subset {
        alg.subset_of_names(names.iter().copied()).unwrap()
    }

    fn a7_spectrum() -> (Algebra, Spectrum) {
        let a7 = samples::a7();
        let fam = all_filters(&a7).unwrap();
        let s = Spectrum::compute(&a7, &fam).unwrap();
        (a7, s)
    }

    #[test]
    fn a7_spectra() {
        let (a7, s) = a7_spectrum();
        let f2 = set(&a7, &["b", "d", "1"]);
        let f3 = set(&a7, &["e", "1"]);
        let f4 = set(&a7, &["a", "b", "c", "d", "e", "1"]);
        assert_eq!(s.spec.carriers(), vec![f3, f2, f4]);
        assert_eq!(s.max.carriers(), vec![f4]);
        assert_eq!(s.min.carriers(), vec![f3, f2]);
        assert_eq!(min_over(&a7, &s.spec, set(&a7, &["c"])).unwrap().carriers(), vec![f4]);
        assert!(min_over(&a7, &s.spec, a7.full()).unwrap().is_empty());
    }

    #[test]
    fn unit_filter_of_a7_is_not_prime() {
        let a7 = samples::a7();
        let w = is_prime(&a7, a7.unit()).unwrap();
        let (x, y) = w.failure.unwrap();
        assert_eq!(a7.join(x, y), a7.top());
        assert!(is_prime(&a7, a7.full()).is_err());
        assert!(is_prime(&a7, set(&a7, &["d", "1"])).is_err());
        let (b, e) = (a7.element("b").unwrap(), a7.element("e").unwrap());
        assert_eq!(a7.join(b, e), a7.top());
    }

    #[test]
    fn separation_on_a7() {
        let a7 = samples::a7();
        let c = set(&a7, &["c"]);
        assert_eq!(separate(&a7, a7.unit(), c).unwrap(), set(&a7, &["b", "d", "1"]));
        assert_eq!(separate(&a7, set(&a7, &["e", "1"]), c).unwrap(), set(&a7, &["e", "1"]));
        let f4 = set(&a7, &["a", "b", "c", "d", "e", "1"]);
        assert_eq!(separate(&a7, f4, f4.complement(7)).unwrap(), f4);
    }

    #[test]
    fn separation_preconditions() {
        let a7 = samples::a7();
        let err = separate(&a7, a7.unit(), set(&a7, &["b", "e"])).unwrap_err();
        assert!(err.to_string().contains("∨-closed"), "{err}");
        let err = separate(&a7, set(&a7, &["e", "1"]), set(&a7, &["e"])).unwrap_err();
        assert!(err.to_string().contains("at e"), "{err}");
    }

    #[test]
    fn minimal_prime_test_agrees() {
        let (a7, s) = a7_spectrum();
        assert!(minimal_prime_check(&a7, set(&a7, &["b", "d", "1"]), &s.min).unwrap());
        assert!(!minimal_prime_check(&a7, set(&a7, &["a", "b", "c", "d", "e", "1"]), &s.min).unwrap());
        let c2 = samples::chain2();
        let s2 = Spectrum::compute(&c2, &all_filters(&c2).unwrap()).unwrap();
        assert!(minimal_prime_check(&c2, c2.unit(), &s2.min).unwrap());
    }

    #[test]
    fn dee_on_a7() {
        let (a7, s) = a7_spectrum();
        let f2 = set(&a7, &["b", "d", "1"]);
        let f4 = set(&a7, &["a", "b", "c", "d", "e", "1"]);
        assert_eq!(dee(&a7, f4, &s.min).unwrap(), a7.unit());
        assert_eq!(dee(&a7, f2, &s.min).unwrap(), f2);
        assert!(dee(&a7, a7.unit(), &s.min).is_err());
    }

    #[test]
    fn hulls_on_a7() {
        let (a7, s) = a7_spectrum();
        // Min = [F3, F2] in canonical order
        let b = set(&a7, &["b"]);
        assert_eq!(hull(&s.min, b), Subset::singleton(1));
        assert_eq!(dual_hull(&s.min, b), Subset::singleton(0));
        assert_eq!(hull(&s.min, a7.unit()), Subset::full(2));
        assert_eq!(kernel(&a7, &s.min, Subset::full(2)), a7.unit());
    }

    #[test]
    fn a7_topologies_are_discrete() {
        let (a7, s) = a7_spectrum();
        let th = tau_h(&a7, &s.min).unwrap();
        let td = tau_d(&a7, &s.min).unwrap();
        assert!(th.is_discrete());
        assert_eq!(th, td);
        assert!(td.is_finer_than(&th));
        assert!(th.is_zero_dimensional());
        assert!(th.is_compact());
    }

    #[test]
    fn one_point_space() {
        let c = samples::goedel_chain(3);
        let s = Spectrum::compute(&c, &all_filters(&c).unwrap()).unwrap();
        assert_eq!(s.min.len(), 1);
        let th = tau_h(&c, &s.min).unwrap();
        assert_eq!(th.opens(), &[Subset::EMPTY, Subset::full(1)]);
        assert_eq!(th, tau_d(&c, &s.min).unwrap());
    }
}

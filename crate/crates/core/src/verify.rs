//! The theorem suite: every stated property of the theory, evaluated on one
//! algebra with each side computed on its own.

use serde::Serialize;

use crate::algebra::{Algebra, ElementId};
use crate::alpha::{adjunction_failures, alpha_closure, alpha_extend_raw, alpha_separate};
use crate::analysis::Analysis;
use crate::classify::{classify, ClassificationResult, Predicate};
use crate::coann::{coannihilator, coannihilator_via_min_check, double_coann, double_perp, pseudocomplement_check};
use crate::error::Result;
use crate::filters::{extend_filter, filter_join, filter_lattice, frame_check, generated_filter, is_filter, principal};
use crate::spectrum::{dual_hull, hull, minimal_prime_check, omega_raw, separate};
use crate::subset::Subset;

/// Subsets of `A` are quantified over exhaustively up to this size; beyond
/// it, over the empty set, singletons, pairs and filters.
pub const EXHAUSTIVE_SUBSETS_MAX: usize = 8;
/// Families of prime α-filters are quantified over exhaustively up to this
/// many prime α-filters; larger cases are skipped.
pub const PRIME_FAMILY_MAX: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Side {
    pub name: &'static str,
    pub value: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub id: &'static str,
    pub statement: &'static str,
    pub sides: Vec<Side>,
    pub status: Status,
    pub witness: Option<String>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    /// `id  STATUS  statement[  witness]`.
    pub fn line(&self) -> String {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        match &self.witness {
            Some(w) => format!("{}  {status}  {}  witness: {w}", self.id, self.statement),
            None => format!("{}  {status}  {}", self.id, self.statement),
        }
    }
}

struct Suite<'a> {
    an: &'a Analysis,
    cls: ClassificationResult,
    probes: Vec<Subset>,
    out: Vec<TheoremReport>,
}

fn side(name: &'static str, value: bool) -> Side {
    Side { name, value }
}

fn route(p: &Predicate, name: &str) -> bool {
    p.routes.iter().find(|r| r.name == name).expect("known route").verdict
}

impl Suite<'_> {
    fn alg(&self) -> &Algebra {
        &self.an.alg
    }

    fn push(&mut self, id: &'static str, statement: &'static str, sides: Vec<Side>, witness: Option<String>) {
        let status = if witness.is_some() { Status::Fail } else { Status::Pass };
        self.out.push(TheoremReport {
            id,
            statement,
            sides,
            status,
            witness,
        });
    }

    /// A universally quantified law; `witness` is the first counterexample.
    fn law(&mut self, id: &'static str, statement: &'static str, witness: Option<String>) {
        let holds = witness.is_none();
        self.push(id, statement, vec![side("holds", holds)], witness);
    }

    /// All sides must have the same truth value.
    fn equiv(&mut self, id: &'static str, statement: &'static str, sides: Vec<Side>) {
        let witness = if sides.iter().all(|s| s.value == sides[0].value) {
            None
        } else {
            let listing: Vec<String> = sides.iter().map(|s| format!("{}={}", s.name, s.value)).collect();
            Some(listing.join(", "))
        };
        self.push(id, statement, sides, witness);
    }

    fn implies(&mut self, id: &'static str, statement: &'static str, premise: Side, conclusion: Side) {
        let witness = (premise.value && !conclusion.value)
            .then(|| format!("{} holds but {} fails", premise.name, conclusion.name));
        self.push(id, statement, vec![premise, conclusion], witness);
    }

    fn skip(&mut self, id: &'static str, statement: &'static str, reason: String) {
        self.out.push(TheoremReport {
            id,
            statement,
            sides: Vec::new(),
            status: Status::Skip,
            witness: Some(reason),
        });
    }

    fn show(&self, s: Subset) -> String {
        self.alg().show(s)
    }

    fn name(&self, x: ElementId) -> &str {
        self.alg().name(x)
    }

    fn qc(&self) -> bool {
        self.cls.quasicomplemented.value
    }
}

fn probe_sets(alg: &Algebra, filters: &[Subset]) -> Vec<Subset> {
    let n = alg.size();
    if n <= EXHAUSTIVE_SUBSETS_MAX {
        return Subset::all(n).collect();
    }
    let mut out = vec![Subset::EMPTY];
    for x in alg.elements() {
        out.push(Subset::singleton(x));
        for y in x + 1..n {
            out.push(Subset::singleton(x).with(y));
        }
    }
    out.extend_from_slice(filters);
    out.sort();
    out.dedup();
    out
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
}

/// Runs the whole suite, in order of the theory's development.
pub fn verify_suite(an: &Analysis) -> Result<Vec<TheoremReport>> {
    let cls = classify(an)?;
    let probes = probe_sets(&an.alg, &an.filters.carriers());
    let mut s = Suite {
        an,
        cls,
        probes,
        out: Vec::new(),
    };
    algebra_laws(&mut s);
    filter_laws(&mut s)?;
    spectrum_laws(&mut s);
    coannihilator_laws(&mut s);
    quasicomplement_laws(&mut s);
    diagram_laws(&mut s)?;
    disjunctive_laws(&mut s);
    alpha_laws(&mut s)?;
    Ok(s.out)
}

fn algebra_laws(s: &mut Suite) {
    let alg = s.alg();
    let n = alg.size();
    let w = triples(n)
        .find(|&(x, y, z)| alg.prod(x, alg.join(y, z)) != alg.join(alg.prod(x, y), alg.prod(x, z)))
        .map(|(x, y, z)| format!("x={} y={} z={}", s.name(x), s.name(y), s.name(z)));
    s.law("residuation.product_distributes_over_join", "x⊙(y∨z) = (x⊙y)∨(x⊙z)", w);

    let alg = s.alg();
    let w = triples(n)
        .find(|&(x, y, z)| !alg.leq(alg.prod(alg.join(x, y), alg.join(x, z)), alg.join(x, alg.prod(y, z))))
        .map(|(x, y, z)| format!("x={} y={} z={}", s.name(x), s.name(y), s.name(z)));
    s.law("residuation.join_over_product_bound", "x∨(y⊙z) ≥ (x∨y)⊙(x∨z)", w);

    let alg = s.alg();
    let center = alg.boolean_center();
    let w = center
        .iter()
        .find(|&e| {
            let comps: Vec<_> = alg
                .elements()
                .filter(|&f| alg.meet(e, f) == alg.bottom() && alg.join(e, f) == alg.top())
                .collect();
            comps != vec![alg.neg(e)]
        })
        .map(|e| format!("e={}", s.name(e)));
    s.law(
        "boolean_center.complement_is_negation",
        "e ∈ B ⇒ the complement of e is ¬e",
        w,
    );

    let alg = s.alg();
    let w = center.iter().find_map(|e| {
        (1..=n)
            .find(|&k| alg.power(e, k) != e)
            .map(|k| format!("e={} k={k}", s.name(e)))
    });
    s.law("boolean_center.powers_fixed", "e ∈ B, k ≥ 1 ⇒ eᵏ = e", w);

    let alg = s.alg();
    let w = center.iter().find_map(|e| {
        alg.elements()
            .find(|&a| alg.prod(e, a) != alg.meet(e, a) || alg.prod(a, e) != alg.meet(e, a))
            .map(|a| format!("e={} a={}", s.name(e), s.name(a)))
    });
    s.law("boolean_center.product_is_meet", "e ∈ B ⇒ e⊙a = a⊙e = e∧a", w);

    let alg = s.alg();
    let w = center
        .iter()
        .find(|&e| alg.neg(alg.neg(e)) != e)
        .map(|e| format!("e={}", s.name(e)));
    s.law("boolean_center.double_negation", "e ∈ B ⇒ ¬¬e = e", w);

    let alg = s.alg();
    let w = (!alg.is_lattice_ideal(alg.nilpotent_set())).then(|| s.show(alg.nilpotent_set()));
    s.law("nilpotents.form_ideal", "N is a lattice ideal", w);
    let alg = s.alg();
    let w = (!alg.is_lattice_ideal(alg.dense_set())).then(|| s.show(alg.dense_set()));
    s.law("dense.form_ideal", "the dense elements form a lattice ideal", w);
}

fn filter_laws(s: &mut Suite) -> Result<()> {
    let an = s.an;
    let alg = &an.alg;
    let n = alg.size();
    let filters = an.filters.carriers();

    let w = filters
        .iter()
        .find(|&&f| principal(alg, alg.prod_all(f)) != f)
        .map(|&f| s.show(f));
    s.law("filters.finite_principality", "F = ℱ(∏F)", w);

    let view = filter_lattice(alg, &an.filters, "F")?;
    let w = (!frame_check(&view)).then(|| "meet does not distribute over joins".to_string());
    s.law("filters.frame", "(ℱ(𝔄); ∩, ⋎) is a frame", w);

    let ext = |f: Subset, x| extend_filter(alg, f, x);
    let over = |pred: &dyn Fn(Subset, usize, usize) -> bool| {
        filters.iter().find_map(|&f| {
            pairs(n)
                .find(|&(x, y)| !pred(f, x, y))
                .map(|(x, y)| format!("F={} x={} y={}", alg.show(f), alg.name(x), alg.name(y)))
        })
    };

    let w = over(&|f, x, _| ext(f, x) == generated_filter(alg, f.with(x)));
    s.law("filters.extension_closed_form", "ℱ(F,x) = F ⋎ ℱ(x) = {a : f⊙xᵏ ≤ a}", w);
    let w = over(&|f, x, y| !alg.leq(x, y) || ext(f, y).is_subset_of(ext(f, x)));
    s.law("filters.extension_antitone", "x ≤ y ⇒ ℱ(F,y) ⊆ ℱ(F,x)", w);
    let w = over(&|f, x, y| ext(f, x) & ext(f, y) == ext(f, alg.join(x, y)));
    s.law("filters.extension_meet", "ℱ(F,x) ∩ ℱ(F,y) = ℱ(F,x∨y)", w);
    let w = over(&|f, x, y| filter_join(alg, ext(f, x), ext(f, y)) == ext(f, alg.prod(x, y)));
    s.law("filters.extension_join", "ℱ(F,x) ⋎ ℱ(F,y) = ℱ(F,x⊙y)", w);

    let pf: Vec<Subset> = alg.elements().map(|x| principal(alg, x)).collect();
    let w = pairs(n)
        .find(|&(x, y)| {
            let (a, b) = (pf[x], pf[y]);
            !pf.contains(&(a & b)) || !pf.contains(&filter_join(alg, a, b))
        })
        .map(|(x, y)| format!("x={} y={}", alg.name(x), alg.name(y)));
    s.law("filters.principal_sublattice", "𝒫ℱ(𝔄) is a sublattice of ℱ(𝔄)", w);

    let w = alg
        .boolean_center()
        .iter()
        .find(|&e| principal(alg, e) != alg.up(e))
        .map(|e| format!("e={}", alg.name(e)));
    s.law("filters.boolean_principal_is_up_set", "e ∈ B ⇒ ℱ(e) = {a : e ≤ a}", w);
    Ok(())
}

/// Distinct non-empty `∨`-closed sets obtained by closing the probe sets.
fn join_closed_sets(alg: &Algebra, probes: &[Subset]) -> Vec<Subset> {
    let mut out: Vec<Subset> = probes
        .iter()
        .filter(|p| !p.is_empty())
        .map(|&p| alg.join_closure(p))
        .collect();
    out.sort();
    out.dedup();
    out
}

fn spectrum_laws(s: &mut Suite) {
    let an = s.an;
    let alg = &an.alg;
    let sp = &an.spectrum;
    let filters = an.filters.carriers();

    let w = sp.max.iter().find(|&m| !sp.spec.contains(m)).map(|m| s.show(m));
    s.law("spectrum.max_within_spec", "Max(𝔄) ⊆ Spec(𝔄)", w);

    let closed = join_closed_sets(alg, &s.probes);
    let mut w = None;
    'outer: for &f in &filters {
        for &c in closed.iter().filter(|c| c.is_disjoint(f)) {
            let bad = match separate(alg, f, c) {
                Err(e) => Some(e.to_string()),
                Ok(p) => {
                    let maximal = filters
                        .iter()
                        .all(|&g| !(p.is_subset_of(g) && g != p && g.is_disjoint(c)));
                    (!(f.is_subset_of(p) && p.is_disjoint(c) && maximal)).then(|| format!("got {}", alg.show(p)))
                }
            };
            if let Some(b) = bad {
                w = Some(format!("F={} C={}: {b}", alg.show(f), alg.show(c)));
                break 'outer;
            }
        }
    }
    s.law(
        "spectrum.prime_separation",
        "F ∩ C = ∅, C ∨-closed ⇒ some P ⊇ F maximal avoiding C, and P is prime",
        w,
    );

    let w = sp
        .spec
        .iter()
        .find_map(|p| minimal_prime_check(alg, p, &sp.min).err().map(|e| e.to_string()));
    s.law(
        "spectrum.minimal_prime_by_complement",
        "P ∈ Min ⟺ Pᶜ is maximal among ∨-closed sets without 1",
        w,
    );

    let w = (!an.tau_h.is_zero_dimensional()).then(|| "some open set is not a union of clopens".to_string());
    s.law(
        "spectrum.hull_kernel_zero_dimensional",
        "(Min, τ_h) is zero-dimensional",
        w,
    );
    let w = (!an.tau_d.is_finer_than(&an.tau_h)).then(|| "τ_h has an open set not open in τ_d".to_string());
    s.law("spectrum.dual_topology_finer", "τ_d is finer than τ_h", w);
}

fn coannihilator_laws(s: &mut Suite) {
    let an = s.an;
    let alg = &an.alg;
    let n = alg.size();
    let probes = s.probes.clone();
    let perps: Vec<Subset> = probes.iter().map(|&x| coannihilator(alg, x)).collect();

    let mut w = None;
    'g: for (i, &x) in probes.iter().enumerate() {
        for (j, &y) in probes.iter().enumerate() {
            if x.is_subset_of(perps[j]) && !y.is_subset_of(perps[i]) {
                w = Some(format!("X={} Y={}", alg.show(x), alg.show(y)));
                break 'g;
            }
        }
    }
    s.law("coann.galois", "X ⊆ Y^⊥ ⇒ Y ⊆ X^⊥", w);

    let w = probes
        .iter()
        .zip(&perps)
        .find(|&(_, &p)| p & coannihilator(alg, p) != alg.unit())
        .map(|(&x, _)| alg.show(x));
    s.law("coann.meets_double", "X^⊥ ∩ X^⊥⊥ = {1}", w);
    let w = probes
        .iter()
        .find(|&&x| !x.is_subset_of(double_coann(alg, x)))
        .map(|&x| alg.show(x));
    s.law("coann.extensive", "X ⊆ X^⊥⊥", w);
    let w = probes
        .iter()
        .zip(&perps)
        .find(|&(&x, &p)| coannihilator(alg, generated_filter(alg, x)) != p)
        .map(|(&x, _)| alg.show(x));
    s.law("coann.generated_filter_invariant", "ℱ(X)^⊥ = X^⊥", w);

    let w = an
        .filters
        .iter()
        .find(|&f| !pseudocomplement_check(alg, f, &an.filters))
        .map(|f| alg.show(f));
    s.law("coann.pseudocomplement", "F^⊥ is the pseudocomplement of F in ℱ(𝔄)", w);

    let w = probes
        .iter()
        .find(|&&x| !coannihilator_via_min_check(alg, &an.spectrum.min, x))
        .map(|&x| alg.show(x));
    s.law("coann.via_minimal_primes", "X^⊥ = ⋂{𝔪 ∈ Min : X ⊄ 𝔪}", w);

    let pw = |pred: &dyn Fn(usize, usize) -> bool| {
        pairs(n)
            .find(|&(x, y)| !pred(x, y))
            .map(|(x, y)| format!("x={} y={}", alg.name(x), alg.name(y)))
    };
    let w = pw(&|x, y| !alg.leq(x, y) || alg.perp(x).is_subset_of(alg.perp(y)));
    s.law("coann.monotone", "x ≤ y ⇒ x^⊥ ⊆ y^⊥", w);
    let w = pw(&|x, y| alg.perp(x) & alg.perp(y) == alg.perp(alg.prod(x, y)));
    s.law("coann.meet_is_product", "x^⊥ ∩ y^⊥ = (x⊙y)^⊥", w);
    let w = pw(&|x, y| double_perp(alg, x) & double_perp(alg, y) == double_perp(alg, alg.join(x, y)));
    s.law("coann.double_meet_is_join", "x^⊥⊥ ∩ y^⊥⊥ = (x∨y)^⊥⊥", w);
    let w = pw(&|x, y| {
        let (a, b) = (alg.perp(x), alg.perp(y));
        let gamma_join = double_coann(alg, a | b);
        filter_join(alg, a, b).is_subset_of(gamma_join) && gamma_join == alg.perp(alg.join(x, y))
    });
    s.law("coann.gamma_join", "x^⊥ ⋎ y^⊥ ⊆ x^⊥ ∨^Γ y^⊥ = (x∨y)^⊥", w);
    let w = alg
        .boolean_center()
        .iter()
        .find(|&e| alg.perp(e) != principal(alg, alg.neg(e)))
        .map(|e| format!("e={}", alg.name(e)));
    s.law("coann.boolean_coannulet", "e ∈ B ⇒ e^⊥ = ℱ(¬e)", w);

    let w = an
        .spectrum
        .spec
        .iter()
        .filter(|&p| coannihilator(alg, p) != alg.unit())
        .find(|&p| !alg.elements().any(|x| alg.perp(x) == p))
        .map(|p| alg.show(p));
    s.law(
        "coann.nondense_prime_is_coannulet",
        "P prime, P^⊥ ≠ {1} ⇒ P = x^⊥ for some x",
        w,
    );

    let dense = alg.dense_set();
    let w = an
        .omega
        .family
        .iter()
        .find(|&f| f != alg.full() && !f.is_disjoint(dense))
        .map(|f| alg.show(f));
    s.law(
        "omega.proper_has_no_dense",
        "proper ω-filters contain no dense element",
        w,
    );

    let om = &an.omega;
    let w = if let Some((a, b, c)) = om.view.distributivity_failure() {
        Some(format!("distributivity fails at nodes ({a}, {b}, {c})"))
    } else if let Some((i, j)) = om.join_conflicts.first() {
        Some(format!(
            "∨^ω depends on representatives: I={} J={}",
            alg.show(*i),
            alg.show(*j)
        ))
    } else {
        pairs(n)
            .find(|&(x, y)| {
                let (a, b) = (alg.perp(x), alg.perp(y));
                let (Some(na), Some(nb)) = (om.view.node_of(a), om.view.node_of(b)) else {
                    return true;
                };
                om.view.set(om.view.join(na, nb)) != alg.perp(alg.join(x, y))
                    || om.view.set(om.view.meet(na, nb)) != a & b
            })
            .map(|(x, y)| format!("γ is not a sublattice of Ω at x={} y={}", alg.name(x), alg.name(y)))
    };
    s.law(
        "omega.distributive_with_gamma_sublattice",
        "Ω(𝔄) is a distributive lattice with γ(𝔄) as a sublattice",
        w,
    );

    let sp = &an.spectrum;
    let w = sp.spec.iter().find_map(|p| {
        let minimal = sp.min.contains(p);
        let fixed = omega_raw(alg, p.complement(n)) == p;
        let one_of = alg.elements().all(|x| p.contains(x) != alg.perp(x).is_subset_of(p));
        (minimal != fixed || minimal != one_of)
            .then(|| format!("P={}: minimal={minimal} P=D(P)={fixed} one-of={one_of}", alg.show(p)))
    });
    s.law(
        "spectrum.minimal_prime_three_ways",
        "P ∈ Min ⟺ P = D(P) ⟺ ∀x exactly one of x ∈ P, x^⊥ ⊆ P",
        w,
    );

    let min = &sp.min;
    let w = pw(&|x, y| {
        let (sx, sy) = (Subset::singleton(x), Subset::singleton(y));
        let a = alg.perp(x) == alg.perp(y);
        a == (hull(min, sx) == hull(min, sy)) && a == (dual_hull(min, sx) == dual_hull(min, sy))
    });
    s.law(
        "spectrum.coannulet_hull_agreement",
        "x^⊥ = y^⊥ ⟺ h(x) = h(y) ⟺ d(x) = d(y)",
        w,
    );

    let w = sp.spec.iter().find_map(|p| {
        let d = omega_raw(alg, p.complement(n));
        let below = min
            .iter()
            .filter(|&m| m.is_subset_of(p))
            .fold(alg.full(), |acc, m| acc & m);
        (d != below).then(|| format!("P={}: D(P)={} ⋂={}", alg.show(p), alg.show(d), alg.show(below)))
    });
    s.law("spectrum.dee_as_intersection", "D(P) = ⋂{𝔪 ∈ Min : 𝔪 ⊆ P}", w);
}

fn quasicomplement_laws(s: &mut Suite) {
    let an = s.an;
    let alg = &an.alg;
    let qc = s.cls.quasicomplemented.clone();
    s.equiv(
        "quasi.three_ways",
        "quasicomplemented ⟺ ∀x ∃y (x⊙y dense, x∨y = 1) ⟺ γ(𝔄) Boolean",
        vec![
            side("definition", route(&qc, "definition")),
            side("dense_product_witness", route(&qc, "dense_product_witness")),
            side("gamma_boolean", route(&qc, "gamma_boolean")),
        ],
    );

    let coannulets_principal = alg
        .elements()
        .all(|x| alg.elements().any(|a| alg.perp(x) == principal(alg, a)));
    s.implies(
        "quasi.principal_coannulets_suffice",
        "every coannulet principal ⇒ quasicomplemented",
        side("coannulets_principal", coannulets_principal),
        side("quasicomplemented", route(&qc, "definition")),
    );

    let dense = alg.dense_set();
    let dense_free_in_min = an
        .filters
        .iter()
        .filter(|f| f.is_disjoint(dense))
        .all(|f| an.spectrum.min.iter().any(|m| f.is_subset_of(m)));
    s.equiv(
        "quasi.dense_free_filters",
        "quasicomplemented ⟺ dense-free primes are minimal ⟺ dense-free filters lie in a minimal prime",
        vec![
            side("definition", route(&qc, "definition")),
            side("dense_free_primes_minimal", route(&qc, "dense_free_primes_minimal")),
            side("dense_free_filters_below_min", dense_free_in_min),
        ],
    );

    s.equiv(
        "quasi.topological",
        "quasicomplemented ⟺ τ_h = τ_d ⟺ (Min, τ_h) compact",
        vec![
            side("definition", route(&qc, "definition")),
            side("tau_h_equals_tau_d", route(&qc, "tau_h_equals_tau_d")),
            side("tau_h_compact", an.tau_h.is_compact()),
        ],
    );
}

fn diagram_laws(s: &mut Suite) -> Result<()> {
    let an = s.an;
    let alg = &an.alg;
    let d = &an.diagram;
    let n = alg.size();

    let w = pairs(n)
        .find(|&(x, y)| {
            (d.pf_node[x] == d.pf_node[y] && (d.d_node[x] != d.d_node[y] || d.gamma_node[x] != d.gamma_node[y]))
                || (d.d_node[x] == d.d_node[y] && d.h_node[x] != d.h_node[y])
                || (d.gamma_node[x] == d.gamma_node[y] && d.h_node[x] != d.h_node[y])
        })
        .map(|(x, y)| format!("x={} y={}", alg.name(x), alg.name(y)));
    s.law(
        "diagram.well_defined",
        "f3, f4, f5, f6 do not depend on the representative",
        w,
    );

    let (f1, f2, f3, f4, f5, f6) = (d.map(1), d.map(2), d.map(3), d.map(4), d.map(5), d.map(6));
    let w = alg
        .elements()
        .find(|&x| f4.images[f1.images[x]] != f2.images[x])
        .map(|x| format!("f2 ≠ f4∘f1 at {}", alg.name(x)))
        .or_else(|| {
            d.pf.nodes()
                .find(|&p| f5.images[f3.images[p]] != f6.images[f4.images[p]])
                .map(|p| format!("f5∘f3 ≠ f6∘f4 at {}", d.pf.label(p)))
        });
    s.law("diagram.commutes", "f2 = f4∘f1 and f5∘f3 = f6∘f4", w);

    let epi = |k: usize| d.structure_holds(k) && d.is_surjective(k);
    let w = [2, 3, 1, 4].into_iter().find(|&k| !epi(k)).map(|k| format!("f{k}"));
    s.law(
        "diagram.epimorphisms",
        "f2, f3 are lattice epimorphisms; f1, f4 dual lattice epimorphisms",
        w,
    );
    let iso = |k: usize| epi(k) && d.is_injective(k);
    let w = [5, 6].into_iter().find(|&k| !iso(k)).map(|k| format!("f{k}"));
    s.law(
        "diagram.isomorphisms",
        "f5 is a dual lattice isomorphism; f6 a lattice isomorphism",
        w,
    );

    let (k3, k4) = (d.kernel(3)?, d.kernel(4)?);
    let w = (k3 != k4).then(|| format!("κ(f3)={:?} κ(f4)={:?}", k3.classes, k4.classes));
    s.law("diagram.kernels_f3_f4_agree", "κ(f3) = κ(f4)", w);

    s.equiv(
        "diagram.f2_injective_iff_f1_f4",
        "f2 injective ⟺ f1 and f4 injective",
        vec![
            side("f2_injective", d.is_injective(2)),
            side("f1_and_f4_injective", d.is_injective(1) && d.is_injective(4)),
        ],
    );

    let dense = alg.dense_set();
    let top_class: Subset = k4.class_containing(d.pf_node[alg.top()]).iter().copied().collect();
    let bottom_class: Subset = k4.class_containing(d.pf_node[alg.bottom()]).iter().copied().collect();
    let dense_nodes: Subset = dense.iter().map(|x| d.pf_node[x]).collect();
    let w = (top_class != Subset::singleton(d.pf_node[alg.top()]))
        .then(|| "class of ℱ(1) is not a singleton".to_string())
        .or_else(|| (bottom_class != dense_nodes).then(|| "class of ℱ(0) differs from {ℱ(x) : x dense}".to_string()));
    s.law(
        "diagram.pf_kernel_end_classes",
        "ℱ(1)/ℜ = {ℱ(1)}, ℱ(0)/ℜ = {ℱ(x) : x dense}",
        w,
    );

    let c1 = d.element_class(2, alg.top())?;
    let c0 = d.element_class(2, alg.bottom())?;
    let w = (c1 != alg.unit() || c0 != dense).then(|| format!("1/κ={} 0/κ={}", alg.show(c1), alg.show(c0)));
    s.law(
        "diagram.coannulet_kernel_end_classes",
        "1/κ(f2) = {1}, 0/κ(f2) = dense elements",
        w,
    );

    let c1 = d.element_class(1, alg.top())?;
    let c0 = d.element_class(1, alg.bottom())?;
    let w =
        (c1 != alg.unit() || c0 != alg.nilpotent_set()).then(|| format!("1/κ={} 0/κ={}", alg.show(c1), alg.show(c0)));
    s.law("diagram.principal_kernel_end_classes", "1/κ(f1) = {1}, 0/κ(f1) = N", w);

    let qc = &s.cls.quasicomplemented;
    let sides = vec![
        side("quasicomplemented", route(qc, "definition")),
        side("ell_mod_kernel_f2_boolean", route(qc, "ell_mod_kernel_f2_boolean")),
        side("pf_mod_kernel_f4_boolean", route(qc, "pf_mod_kernel_f4_boolean")),
    ];
    s.equiv(
        "quasi.quotients_boolean",
        "quasicomplemented ⟺ ℓ(𝔄)/κ(f2) Boolean ⟺ 𝒫ℱ(𝔄)/ℜ Boolean",
        sides,
    );
    Ok(())
}

fn disjunctive_laws(s: &mut Suite) {
    let an = s.an;
    let alg = &an.alg;
    let c = s.cls.clone();
    let (qc, disj, wd) = (
        c.quasicomplemented.value,
        c.disjunctive.value,
        c.weakly_disjunctive.value,
    );
    s.implies(
        "disjunctive.implies_weakly_disjunctive",
        "disjunctive ⇒ weakly disjunctive",
        side("disjunctive", disj),
        side("weakly_disjunctive", wd),
    );

    let ell_boolean = route(&c.lattice_boolean, "lattice_check");
    let neg_injective = {
        let mut negs: Vec<_> = alg.elements().map(|x| alg.neg(x)).collect();
        negs.sort_unstable();
        negs.dedup();
        negs.len() == alg.size()
    };
    let dense_trivial = alg.dense_set() == Subset::singleton(alg.bottom());
    s.equiv(
        "disjunctive.lattice_boolean",
        "quasicomplemented ∧ disjunctive ⟺ ℓ(𝔄) Boolean ⟺ quasicomplemented ∧ dense = {0} ∧ ¬ injective",
        vec![
            side("quasicomplemented_and_disjunctive", qc && disj),
            side("lattice_boolean", ell_boolean),
            side("qc_dense_zero_neg_injective", qc && dense_trivial && neg_injective),
        ],
    );
    s.equiv(
        "disjunctive.negation_complements",
        "ℓ(𝔄) Boolean ⟺ ∀a (a∧¬a = 0, a∨¬a = 1)",
        vec![
            side("lattice_boolean", ell_boolean),
            side(
                "negation_complements",
                route(&c.lattice_boolean, "negation_complements"),
            ),
        ],
    );

    let pf_boolean = route(&c.pf_boolean, "lattice_check");
    s.equiv(
        "weakly_disjunctive.principal_filters_boolean",
        "quasicomplemented ∧ weakly disjunctive ⟺ 𝒫ℱ(𝔄) Boolean",
        vec![
            side("quasicomplemented_and_weakly_disjunctive", qc && wd),
            side("pf_boolean", pf_boolean),
        ],
    );
    s.equiv(
        "weakly_disjunctive.nilpotent_witness",
        "𝒫ℱ(𝔄) Boolean ⟺ ∀a ∃b ∈ a^⊥ (a⊙b ∈ N)",
        vec![
            side("pf_boolean", pf_boolean),
            side("nilpotent_witness", route(&c.pf_boolean, "nilpotent_witness")),
        ],
    );
}

fn alpha_laws(s: &mut Suite) -> Result<()> {
    let an = s.an;
    let alg = &an.alg;
    let n = alg.size();
    let full = alg.full();
    let filters = an.filters.carriers();
    let alphas = an.alpha.members.carriers();
    let spec_alpha = an.spec_alpha.carriers();
    let min = &an.spectrum.min;
    let dense = alg.dense_set();
    let probes = s.probes.clone();
    let meet_alpha = |x: Subset| {
        alphas
            .iter()
            .filter(|&&f| x.is_subset_of(f))
            .fold(full, |acc, &f| acc & f)
    };

    let view = &an.alpha.view;
    let w = (!frame_check(view)).then(|| "meet does not distribute over ∨^α".to_string());
    s.law("alpha.frame", "(α(𝔄); ∩, ∨^α) is a frame", w);
    let mut w = None;
    'h: for &f in &alphas {
        for &g in &alphas {
            let imp = an.alpha.heyting_impl(f, g)?;
            if let Some(&h) = alphas.iter().find(|&&h| (f & h).is_subset_of(g) != h.is_subset_of(imp)) {
                w = Some(format!("F={} G={} H={}", alg.show(f), alg.show(g), alg.show(h)));
                break 'h;
            }
        }
    }
    s.law(
        "alpha.heyting",
        "F ∩ H ⊆ G ⟺ H ⊆ F ↪ G, with F ↪ G = ⋎{H ∈ α(𝔄) : F ∩ H ⊆ G}",
        w,
    );

    let w = filters
        .iter()
        .find(|&&f| f.iter().fold(Subset::EMPTY, |acc, x| acc | double_perp(alg, x)) != meet_alpha(f))
        .map(|&f| alg.show(f));
    s.law("alpha.closure_of_filter", "α(F) = ⋃_{x∈F} x^⊥⊥", w);

    let mut w = None;
    'j: for &f in &filters {
        for &g in &filters {
            let mut by_formula = Subset::EMPTY;
            for a in f {
                for b in g {
                    by_formula |= double_perp(alg, alg.prod(a, b));
                }
            }
            if by_formula != meet_alpha(f | g) {
                w = Some(format!("F={} G={}", alg.show(f), alg.show(g)));
                break 'j;
            }
        }
    }
    s.law("alpha.join_formula", "F ∨^α G = ⋃{(f⊙g)^⊥⊥ : f ∈ F, g ∈ G}", w);

    let aext = |f: Subset, x| alpha_extend_raw(alg, f, x);
    let over = |pred: &dyn Fn(Subset, usize, usize) -> bool| {
        filters.iter().find_map(|&f| {
            pairs(n)
                .find(|&(x, y)| !pred(f, x, y))
                .map(|(x, y)| format!("F={} x={} y={}", alg.show(f), alg.name(x), alg.name(y)))
        })
    };
    let w = over(&|f, x, _| aext(f, x) == meet_alpha(f.with(x)));
    s.law("alpha.extension_closed_form", "α(F,x) = α(F ∪ {x}) = ⋃(f⊙xᵏ)^⊥⊥", w);
    let w = over(&|f, x, y| aext(f, x) & aext(f, y) == aext(f, alg.join(x, y)));
    s.law("alpha.extension_meet", "α(F,x) ∩ α(F,y) = α(F,x∨y)", w);
    let w = over(&|f, x, y| alpha_closure(alg, aext(f, x) | aext(f, y)) == aext(f, alg.prod(x, y)));
    s.law("alpha.extension_join", "α(F,x) ∨^α α(F,y) = α(F,x⊙y)", w);

    let closures: Vec<Subset> = probes.iter().map(|&x| alpha_closure(alg, x)).collect();
    let mut w = probes
        .iter()
        .zip(&closures)
        .find(|&(&x, &c)| !x.is_subset_of(c) || alpha_closure(alg, c) != c || c != meet_alpha(x))
        .map(|(&x, _)| format!("X={}", alg.show(x)));
    if w.is_none() {
        'm: for (i, &x) in probes.iter().enumerate() {
            for (j, &y) in probes.iter().enumerate() {
                if x.is_subset_of(y) && !closures[i].is_subset_of(closures[j]) {
                    w = Some(format!("not monotone at X={} Y={}", alg.show(x), alg.show(y)));
                    break 'm;
                }
            }
        }
    }
    s.law(
        "alpha.closure_operator",
        "α is extensive, monotone, idempotent, and α(X) = ⋂{F ∈ α(𝔄) : X ⊆ F}",
        w,
    );

    let w = filters.iter().find_map(|&f| {
        let closed_under = |same: &dyn Fn(usize, usize) -> bool| {
            f.iter().all(|x| alg.elements().all(|y| !same(x, y) || f.contains(y)))
        };
        let sides = [
            f.iter().all(|x| double_perp(alg, x).is_subset_of(f)),
            closed_under(&|x, y| alg.perp(x) == alg.perp(y)),
            closed_under(&|x, y| dual_hull(min, Subset::singleton(x)) == dual_hull(min, Subset::singleton(y))),
            closed_under(&|x, y| hull(min, Subset::singleton(x)) == hull(min, Subset::singleton(y))),
        ];
        sides
            .iter()
            .any(|&v| v != sides[0])
            .then(|| format!("F={}: {sides:?}", alg.show(f)))
    });
    s.law(
        "alpha.recognition_four_ways",
        "F α-filter ⟺ closed under equal x^⊥ ⟺ under equal d(x) ⟺ under equal h(x)",
        w,
    );

    let w = adjunction_failures(alg, &an.filters, &an.coann, &an.alpha.members)?
        .into_iter()
        .next();
    s.law(
        "alpha.gamma_adjunction",
        "Φ(F) ⊆ G ⟺ F ⊆ Ψ(G); ΨΦ = α; fixed points of ΨΦ are α(𝔄)",
        w,
    );

    let closed = join_closed_sets(alg, &probes);
    let mut w = None;
    'sep: for &f in &alphas {
        for &c in closed.iter().filter(|c| c.is_disjoint(f)) {
            let bad = match alpha_separate(alg, f, c) {
                Err(e) => Some(e.to_string()),
                Ok(p) => {
                    let maximal = alphas
                        .iter()
                        .all(|&g| !(p.is_subset_of(g) && g != p && g.is_disjoint(c)));
                    (!(alphas.contains(&p) && f.is_subset_of(p) && p.is_disjoint(c) && maximal))
                        .then(|| format!("got {}", alg.show(p)))
                }
            };
            if let Some(b) = bad {
                w = Some(format!("F={} C={}: {b}", alg.show(f), alg.show(c)));
                break 'sep;
            }
        }
    }
    s.law(
        "alpha.prime_separation",
        "F α-filter, F ∩ C = ∅, C ∨-closed ⇒ some α-filter P ⊇ F maximal avoiding C, and P is prime",
        w,
    );

    let mut w = None;
    'avoid: for &f in &alphas {
        for &x in probes.iter().filter(|x| !x.is_empty() && !x.is_subset_of(f)) {
            let found = spec_alpha.iter().any(|&p| {
                f.is_subset_of(p)
                    && !x.is_subset_of(p)
                    && alphas
                        .iter()
                        .all(|&g| !(p.is_subset_of(g) && g != p && !x.is_subset_of(g)))
            });
            if !found {
                w = Some(format!("F={} X={}", alg.show(f), alg.show(x)));
                break 'avoid;
            }
        }
    }
    s.law(
        "alpha.prime_avoiding_set",
        "X ⊄ F ⇒ some P ∈ Spec_α contains F and is maximal among α-filters with X ⊄ P",
        w,
    );
    let w = probes
        .iter()
        .filter(|x| !x.is_empty())
        .find(|&&x| {
            let meet = spec_alpha
                .iter()
                .filter(|&&p| x.is_subset_of(p))
                .fold(full, |acc, &p| acc & p);
            alpha_closure(alg, x) != meet
        })
        .map(|&x| alg.show(x));
    s.law("alpha.closure_by_primes", "α(X) = ⋂{P ∈ Spec_α : X ⊆ P}", w);

    let wd = s.cls.weakly_disjunctive.clone();
    s.equiv(
        "alpha.weakly_disjunctive_three_ways",
        "weakly disjunctive ⟺ every filter is α ⟺ every prime filter is α",
        vec![
            side("f3_injective", route(&wd, "f3_injective")),
            side("every_filter_alpha", route(&wd, "every_filter_alpha")),
            side("every_prime_alpha", route(&wd, "every_prime_alpha")),
        ],
    );

    let w = an
        .coann
        .big_gamma
        .iter()
        .find(|f| !alphas.contains(f))
        .map(|f| format!("Γ member {}", alg.show(f)))
        .or_else(|| {
            an.omega
                .family
                .iter()
                .find(|f| !alphas.contains(f))
                .map(|f| format!("Ω member {}", alg.show(f)))
        });
    s.law(
        "alpha.contains_coannihilators_and_omega",
        "Γ(𝔄) ⊆ α(𝔄) and Ω(𝔄) ⊆ α(𝔄)",
        w,
    );

    let w = an
        .spectrum
        .spec
        .iter()
        .filter(|&p| coannihilator(alg, p) != alg.unit())
        .find(|p| !alphas.contains(p))
        .map(|p| format!("non-dense prime {}", alg.show(p)))
        .or_else(|| {
            min.iter()
                .find(|p| !alphas.contains(p))
                .map(|p| format!("minimal prime {}", alg.show(p)))
        });
    s.law(
        "alpha.nondense_and_minimal_primes",
        "non-dense prime filters and minimal prime filters are α-filters",
        w,
    );

    let proper_alpha: Vec<Subset> = alphas.iter().copied().filter(|&f| f != full).collect();
    let big_gamma = &an.coann.big_gamma;
    let c1 = proper_alpha.iter().all(|&f| coannihilator(alg, f) != alg.unit());
    let c2 = filters
        .iter()
        .filter(|&&f| coannihilator(alg, f) == alg.unit())
        .all(|f| !f.is_disjoint(dense));
    let c3 = alphas.iter().all(|&f| big_gamma.contains(f));
    let c4 = proper_alpha
        .iter()
        .all(|&f| proper_alpha.iter().any(|&g| f & g == alg.unit()));
    let c5 = view.dense_nodes().len() == 1;
    s.equiv(
        "alpha.coannihilator_conditions",
        "proper α-filters non-dense ⟺ dense filters hold a dense element ⟺ α(𝔄) ⊆ Γ(𝔄) ⟺ proper α-filters have a proper α-filter meeting them in {1} ⟺ α(𝔄) has one dense element",
        vec![
            side("proper_alpha_nondense", c1),
            side("dense_filters_have_dense_element", c2),
            side("alpha_within_gamma", c3),
            side("proper_alpha_disjoint_partner", c4),
            side("unique_dense_alpha", c5),
        ],
    );
    s.implies(
        "alpha.coannihilator_conditions_imply_quasicomplemented",
        "α(𝔄) ⊆ Γ(𝔄) ⇒ quasicomplemented",
        side("alpha_within_gamma", c3),
        side("quasicomplemented", s.qc()),
    );

    let omega = &an.omega.family;
    s.equiv(
        "alpha.omega_conditions",
        "quasicomplemented ⟺ α(𝔄) ⊆ Ω(𝔄) ⟺ Γ(𝔄) ⊆ Ω(𝔄) ⟺ ∀x x^⊥⊥ ∈ Ω(𝔄)",
        vec![
            side("quasicomplemented", s.qc()),
            side("alpha_within_omega", alphas.iter().all(|&f| omega.contains(f))),
            side("gamma_within_omega", big_gamma.iter().all(|f| omega.contains(f))),
            side(
                "double_perps_omega",
                alg.elements().all(|x| omega.contains(double_perp(alg, x))),
            ),
        ],
    );

    let w = filters
        .iter()
        .find(|&&f| (alpha_closure(alg, f) != full) != f.is_disjoint(dense))
        .map(|&f| alg.show(f));
    s.law(
        "alpha.proper_iff_dense_free",
        "α(F) proper ⟺ F contains no dense element",
        w,
    );

    if s.qc() {
        let w = an.spectrum.spec.iter().find_map(|p| {
            let one_of = pairs(n)
                .filter(|&(x, y)| double_perp(alg, x) == alg.perp(y))
                .all(|(x, y)| p.contains(x) != p.contains(y));
            let sides = [alphas.contains(&p), p.is_disjoint(dense), min.contains(p), one_of];
            sides
                .iter()
                .any(|&v| v != sides[0])
                .then(|| format!("P={}: {sides:?}", alg.show(p)))
        });
        s.law(
            "alpha.prime_conditions",
            "quasicomplemented, P prime: P α ⟺ P dense-free ⟺ P minimal ⟺ P holds exactly one of x, y when x^⊥⊥ = y^⊥",
            w,
        );
    } else {
        s.law(
            "alpha.prime_conditions",
            "quasicomplemented, P prime: P α ⟺ P dense-free ⟺ P minimal ⟺ P holds exactly one of x, y when x^⊥⊥ = y^⊥",
            None,
        );
    }

    let below_min = |f: Subset| min.iter().filter(|&m| f.is_subset_of(m)).fold(full, |acc, m| acc & m);
    s.equiv(
        "alpha.quasicomplemented_conditions",
        "quasicomplemented ⟺ prime α-filters are minimal ⟺ proper α-filters are meets of minimal primes ⟺ proper α-filters lie in a minimal prime",
        vec![
            side("quasicomplemented", s.qc()),
            side("prime_alpha_minimal", spec_alpha.iter().all(|&p| min.contains(p))),
            side("proper_alpha_meet_of_min", proper_alpha.iter().all(|&f| below_min(f) == f)),
            side(
                "proper_alpha_below_min",
                proper_alpha.iter().all(|&f| min.iter().any(|m| f.is_subset_of(m))),
            ),
        ],
    );

    let w = alphas.iter().find_map(|&f| {
        f.iter()
            .find(|&a| {
                let premise = spec_alpha.iter().filter(|p| p.contains(a)).all(|&p| f.is_subset_of(p));
                premise && f != alpha_closure(alg, Subset::singleton(a))
            })
            .map(|a| format!("F={} a={}", alg.show(f), alg.name(a)))
    });
    s.law(
        "alpha.principal_by_primes",
        "F α-filter, a ∈ F, every P ∈ Spec_α with a ∈ P contains F ⇒ F = α(a)",
        w,
    );

    let alpha_principal = |f: Subset| alg.elements().any(|a| alpha_closure(alg, Subset::singleton(a)) == f);
    let statement =
        "prime avoidance for α-filters ⟺ for prime α-filters ⟺ prime α-filters α-principal ⟺ α-filters α-principal";
    if spec_alpha.len() <= PRIME_FAMILY_MAX {
        let families: Vec<Subset> = Subset::all(spec_alpha.len())
            .map(|pick| pick.iter().fold(Subset::EMPTY, |acc, i| acc | spec_alpha[i]))
            .collect();
        let avoidance = |f: Subset| {
            Subset::all(spec_alpha.len())
                .zip(&families)
                .all(|(pick, &union)| !f.is_subset_of(union) || pick.iter().any(|i| f.is_subset_of(spec_alpha[i])))
        };
        s.equiv(
            "alpha.principal_conditions",
            statement,
            vec![
                side("avoidance_alpha", alphas.iter().all(|&f| avoidance(f))),
                side("avoidance_prime_alpha", spec_alpha.iter().all(|&q| avoidance(q))),
                side("prime_alpha_principal", spec_alpha.iter().all(|&p| alpha_principal(p))),
                side("alpha_principal", alphas.iter().all(|&f| alpha_principal(f))),
            ],
        );
    } else {
        s.skip(
            "alpha.principal_conditions",
            statement,
            format!(
                "{} prime α-filters exceed the family limit {PRIME_FAMILY_MAX}",
                spec_alpha.len()
            ),
        );
    }

    let principal_filter = |f: Subset| alg.elements().any(|a| principal(alg, a) == f);
    let coannulets_principal = alg.elements().all(|x| principal_filter(alg.perp(x)));
    s.implies(
        "alpha.principal_coannulets_give_minimal_primes",
        "every coannulet principal ⇒ prime α-filters are minimal",
        side("coannulets_principal", coannulets_principal),
        side("prime_alpha_minimal", spec_alpha.iter().all(|&p| min.contains(p))),
    );

    let p1 = alphas.iter().all(|&f| principal_filter(f));
    s.equiv(
        "alpha.ordinary_principal_conditions",
        "α-filters principal ⟺ ω-filters principal ⟺ coannulets principal and minimal primes non-dense ⟺ prime α-filters principal",
        vec![
            side("alpha_principal", p1),
            side("omega_principal", omega.iter().all(principal_filter)),
            side(
                "coannulets_principal_min_nondense",
                coannulets_principal && min.iter().all(|m| coannihilator(alg, m) != alg.unit()),
            ),
            side("prime_alpha_principal", spec_alpha.iter().all(|&p| principal_filter(p))),
        ],
    );
    s.implies(
        "alpha.ordinary_principal_implies_quasicomplemented",
        "α-filters principal ⇒ quasicomplemented",
        side("alpha_principal", p1),
        side("quasicomplemented", s.qc()),
    );
    debug_assert!(filters.iter().all(|&f| is_filter(alg, f)));
    Ok(())
}

/// Whether any entry failed.
pub fn all_passed(reports: &[TheoremReport]) -> bool {
    reports.iter().all(TheoremReport::passed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn exemplars_pass() {
        for alg in samples::exemplars() {
            let an = Analysis::compute(alg).unwrap();
            let reports = verify_suite(&an).unwrap();
            let failed: Vec<String> = reports.iter().filter(|r| !r.passed()).map(|r| r.line()).collect();
            assert!(failed.is_empty(), "{failed:#?}");
        }
    }

    #[test]
    fn ids_are_unique() {
        let an = Analysis::compute(samples::a7()).unwrap();
        let reports = verify_suite(&an).unwrap();
        let mut ids: Vec<&str> = reports.iter().map(|r| r.id).collect();
        let total = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), total);
    }

    #[test]
    fn a7_sides_match_known_values() {
        let an = Analysis::compute(samples::a7()).unwrap();
        let reports = verify_suite(&an).unwrap();
        let find = |id: &str| reports.iter().find(|r| r.id == id).unwrap();
        let r = find("weakly_disjunctive.principal_filters_boolean");
        assert!(r.sides.iter().all(|s| !s.value));
        let r = find("alpha.quasicomplemented_conditions");
        assert!(r.sides.iter().all(|s| s.value));
    }
}

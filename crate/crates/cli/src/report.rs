//! Command reports: one serializable struct per command, rendered either as
//! JSON (machine) or as plain text.

use serde::Serialize;

use reslat::alpha::adjunction_failures;
use reslat::analysis::Analysis;
use reslat::classify::{ClassificationResult, MapReport};
use reslat::enumerate::{canonical_form, SearchStats};
use reslat::filters::FilterFamily;
use reslat::lattice::LatticeView;
use reslat::spectrum::Topology;
use reslat::verify::{verify_suite, Status, TheoremReport};
use reslat::{Algebra, Subset};

pub trait Render: Serialize {
    fn text(&self) -> String;

    fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

fn names(alg: &Algebra, s: Subset) -> Vec<String> {
    s.iter().map(|x| alg.name(x).to_string()).collect()
}

fn braces(items: &[String]) -> String {
    format!("{{{}}}", items.join(","))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// A set of elements tagged with its position among all filters, when it
/// is one.
#[derive(Clone, Debug, Serialize)]
pub struct NamedSet {
    pub label: String,
    pub elements: Vec<String>,
}

impl NamedSet {
    fn line(&self) -> String {
        if self.label.is_empty() {
            braces(&self.elements)
        } else {
            format!("{} = {}", self.label, braces(&self.elements))
        }
    }
}

fn named(an: &Analysis, s: Subset) -> NamedSet {
    let label = an
        .filters
        .position(s)
        .map(|i| format!("F{}", i + 1))
        .unwrap_or_default();
    NamedSet {
        label,
        elements: names(&an.alg, s),
    }
}

fn family(an: &Analysis, fam: &FilterFamily) -> Vec<NamedSet> {
    fam.iter().map(|s| named(an, s)).collect()
}

fn block(out: &mut String, title: &str, sets: &[NamedSet]) {
    out.push_str(&format!("{title}:\n"));
    for s in sets {
        out.push_str(&format!("  {}\n", s.line()));
    }
}

#[derive(Debug, Serialize)]
pub struct ValidateReport {
    pub valid: bool,
    pub size: usize,
    pub violations: Vec<String>,
}

impl Render for ValidateReport {
    fn text(&self) -> String {
        if self.valid {
            format!("valid: residuated lattice with {} elements\n", self.size)
        } else {
            let mut out = format!("invalid: {} problem(s)\n", self.violations.len());
            for v in &self.violations {
                out.push_str(&format!("  {v}\n"));
            }
            out
        }
    }
}

#[derive(Debug, Serialize)]
pub struct InfoReport {
    pub label: Option<String>,
    pub size: usize,
    pub elements: Vec<String>,
    pub bottom: String,
    pub top: String,
    pub covers: Vec<(String, String)>,
    pub distributive: bool,
    pub boolean_center: Vec<String>,
    pub nilpotent: Vec<String>,
    pub dense: Vec<String>,
    pub negation: Vec<(String, String)>,
    pub canonical_key: String,
}

impl InfoReport {
    pub fn new(alg: &Algebra, label: Option<String>) -> InfoReport {
        let ell = LatticeView::of_algebra(alg);
        let mut covers = Vec::new();
        for x in alg.elements() {
            for y in alg.elements() {
                if x != y
                    && alg.leq(x, y)
                    && !alg
                        .elements()
                        .any(|z| z != x && z != y && alg.leq(x, z) && alg.leq(z, y))
                {
                    covers.push((alg.name(x).to_string(), alg.name(y).to_string()));
                }
            }
        }
        let key: String = canonical_form(alg).0.iter().map(|b| format!("{b:x}")).collect();
        InfoReport {
            label,
            size: alg.size(),
            elements: alg.names().to_vec(),
            bottom: alg.name(alg.bottom()).to_string(),
            top: alg.name(alg.top()).to_string(),
            covers,
            distributive: ell.is_distributive(),
            boolean_center: names(alg, alg.boolean_center()),
            nilpotent: names(alg, alg.nilpotent_set()),
            dense: names(alg, alg.dense_set()),
            negation: alg
                .elements()
                .map(|x| (alg.name(x).to_string(), alg.name(alg.neg(x)).to_string()))
                .collect(),
            canonical_key: key,
        }
    }
}

impl Render for InfoReport {
    fn text(&self) -> String {
        let mut out = String::new();
        if let Some(l) = &self.label {
            out.push_str(&format!("label: {l}\n"));
        }
        let covers: Vec<String> = self.covers.iter().map(|(a, b)| format!("{a}<{b}")).collect();
        let neg: Vec<String> = self.negation.iter().map(|(a, b)| format!("¬{a}={b}")).collect();
        out.push_str(&format!("size: {}\n", self.size));
        out.push_str(&format!("elements: {}\n", self.elements.join(" ")));
        out.push_str(&format!("bottom: {}  top: {}\n", self.bottom, self.top));
        out.push_str(&format!("covers: {}\n", covers.join(" ")));
        out.push_str(&format!("distributive lattice: {}\n", yes(self.distributive)));
        out.push_str(&format!("boolean center: {}\n", braces(&self.boolean_center)));
        out.push_str(&format!("nilpotent: {}\n", braces(&self.nilpotent)));
        out.push_str(&format!("dense: {}\n", braces(&self.dense)));
        out.push_str(&format!("negation: {}\n", neg.join(" ")));
        out.push_str(&format!("canonical key: {}\n", self.canonical_key));
        out
    }
}

#[derive(Debug, Serialize)]
pub struct FilterEntry {
    pub label: String,
    pub elements: Vec<String>,
    pub generator: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct FiltersReport {
    pub filters: Vec<FilterEntry>,
}

impl FiltersReport {
    pub fn new(an: &Analysis) -> FiltersReport {
        let filters = an
            .filters
            .members()
            .iter()
            .enumerate()
            .map(|(i, f)| FilterEntry {
                label: format!("F{}", i + 1),
                elements: names(&an.alg, f.carrier),
                generator: f.generator.map(|g| an.alg.name(g).to_string()),
            })
            .collect();
        FiltersReport { filters }
    }
}

impl Render for FiltersReport {
    /// One brace list per line, in canonical order.
    fn text(&self) -> String {
        self.filters.iter().map(|f| braces(&f.elements) + "\n").collect()
    }
}

#[derive(Debug, Serialize)]
pub struct TopologySummary {
    pub points: usize,
    pub opens: usize,
    pub zero_dimensional: bool,
    pub compact: bool,
}

fn summary(t: &Topology) -> TopologySummary {
    TopologySummary {
        points: t.points(),
        opens: t.opens().len(),
        zero_dimensional: t.is_zero_dimensional(),
        compact: t.is_compact(),
    }
}

#[derive(Debug, Serialize)]
pub struct DeeEntry {
    pub prime: String,
    pub dee: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct SpectrumReport {
    pub spec: Vec<NamedSet>,
    pub max: Vec<NamedSet>,
    pub min: Vec<NamedSet>,
    pub dee: Vec<DeeEntry>,
    pub tau_h: TopologySummary,
    pub tau_d: TopologySummary,
    pub topologies_equal: bool,
}

impl SpectrumReport {
    pub fn new(an: &Analysis) -> reslat::Result<SpectrumReport> {
        let dee = an
            .spectrum
            .spec
            .iter()
            .map(|p| {
                Ok(DeeEntry {
                    prime: named(an, p).label,
                    dee: names(&an.alg, reslat::spectrum::dee(&an.alg, p, &an.spectrum.min)?),
                })
            })
            .collect::<reslat::Result<_>>()?;
        Ok(SpectrumReport {
            spec: family(an, &an.spectrum.spec),
            max: family(an, &an.spectrum.max),
            min: family(an, &an.spectrum.min),
            dee,
            tau_h: summary(&an.tau_h),
            tau_d: summary(&an.tau_d),
            topologies_equal: an.tau_h.opens() == an.tau_d.opens(),
        })
    }
}

impl Render for SpectrumReport {
    fn text(&self) -> String {
        let mut out = String::new();
        block(&mut out, "spec", &self.spec);
        block(&mut out, "max", &self.max);
        block(&mut out, "min", &self.min);
        out.push_str("D(P):\n");
        for d in &self.dee {
            out.push_str(&format!("  {} -> {}\n", d.prime, braces(&d.dee)));
        }
        for (name, t) in [("tau_h", &self.tau_h), ("tau_d", &self.tau_d)] {
            out.push_str(&format!(
                "{name}: points {}, opens {}, zero-dimensional {}, compact {}\n",
                t.points,
                t.opens,
                yes(t.zero_dimensional),
                yes(t.compact)
            ));
        }
        out.push_str(&format!("tau_h = tau_d: {}\n", yes(self.topologies_equal)));
        out
    }
}

/// Cover pairs of a set-backed lattice view, by filter label.
fn view_covers(an: &Analysis, view: &LatticeView) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for a in view.nodes() {
        for b in view.nodes() {
            if a != b
                && view.leq(a, b)
                && !view
                    .nodes()
                    .any(|c| c != a && c != b && view.leq(a, c) && view.leq(c, b))
            {
                out.push((named(an, view.set(a)).label, named(an, view.set(b)).label));
            }
        }
    }
    out
}

fn cover_line(covers: &[(String, String)]) -> String {
    let parts: Vec<String> = covers.iter().map(|(a, b)| format!("{a}<{b}")).collect();
    parts.join(" ")
}

#[derive(Debug, Serialize)]
pub struct CoannReport {
    pub coannulets: Vec<NamedSet>,
    pub coannulet_covers: Vec<(String, String)>,
    pub coannihilators: Vec<NamedSet>,
    pub coannihilator_covers: Vec<(String, String)>,
    pub dense: Vec<String>,
    pub omega_filters: Vec<NamedSet>,
    pub coannulets_boolean: bool,
    pub coannulets_equal_coannihilators: bool,
    pub coannihilators_equal_omega: bool,
}

impl CoannReport {
    pub fn new(an: &Analysis) -> CoannReport {
        let c = &an.coann;
        CoannReport {
            coannulets: family(an, &c.gamma),
            coannulet_covers: view_covers(an, &c.gamma_view),
            coannihilators: family(an, &c.big_gamma),
            coannihilator_covers: view_covers(an, &c.big_gamma_view),
            dense: names(&an.alg, an.alg.dense_set()),
            omega_filters: family(an, &an.omega.family),
            coannulets_boolean: c.gamma_view.is_boolean(),
            coannulets_equal_coannihilators: c.gamma.carriers() == c.big_gamma.carriers(),
            coannihilators_equal_omega: c.big_gamma.carriers() == an.omega.family.carriers(),
        }
    }
}

impl Render for CoannReport {
    fn text(&self) -> String {
        let mut out = String::new();
        block(&mut out, "coannulets (gamma)", &self.coannulets);
        out.push_str(&format!("  covers: {}\n", cover_line(&self.coannulet_covers)));
        block(&mut out, "coannihilators (Gamma)", &self.coannihilators);
        out.push_str(&format!("  covers: {}\n", cover_line(&self.coannihilator_covers)));
        out.push_str(&format!("dense: {}\n", braces(&self.dense)));
        block(&mut out, "omega-filters (Omega)", &self.omega_filters);
        out.push_str(&format!("gamma boolean: {}\n", yes(self.coannulets_boolean)));
        out.push_str(&format!(
            "gamma = Gamma: {}\n",
            yes(self.coannulets_equal_coannihilators)
        ));
        out.push_str(&format!("Gamma = Omega: {}\n", yes(self.coannihilators_equal_omega)));
        out
    }
}

#[derive(Debug, Serialize)]
pub struct AlphaEntry {
    pub label: String,
    pub elements: Vec<String>,
    pub alpha: bool,
}

#[derive(Debug, Serialize)]
pub struct AlphaReport {
    pub filters: Vec<AlphaEntry>,
    pub alpha_filters: Vec<String>,
    /// `heyting[i][j]` is `alpha_filters[i] ↪ alpha_filters[j]`.
    pub heyting: Vec<Vec<String>>,
    pub prime_alpha_filters: Vec<NamedSet>,
    pub adjunction_failures: Vec<String>,
    pub theorems: Vec<TheoremReport>,
}

impl AlphaReport {
    pub fn new(an: &Analysis) -> reslat::Result<AlphaReport> {
        let members = &an.alpha.members;
        let filters: Vec<AlphaEntry> = an
            .filters
            .iter()
            .enumerate()
            .map(|(i, s)| AlphaEntry {
                label: format!("F{}", i + 1),
                elements: names(&an.alg, s),
                alpha: members.contains(s),
            })
            .collect();
        let heyting = members
            .iter()
            .map(|f| {
                members
                    .iter()
                    .map(|g| Ok(named(an, an.alpha.heyting_impl(f, g)?).label))
                    .collect::<reslat::Result<Vec<String>>>()
            })
            .collect::<reslat::Result<_>>()?;
        let theorems = verify_suite(an)?
            .into_iter()
            .filter(|t| t.id.starts_with("alpha."))
            .collect();
        Ok(AlphaReport {
            alpha_filters: filters.iter().filter(|f| f.alpha).map(|f| f.label.clone()).collect(),
            filters,
            heyting,
            prime_alpha_filters: family(an, &an.spec_alpha),
            adjunction_failures: adjunction_failures(&an.alg, &an.filters, &an.coann, members)?,
            theorems,
        })
    }
}

impl Render for AlphaReport {
    fn text(&self) -> String {
        let mut out = String::new();
        for f in &self.filters {
            let tag = if f.alpha { "alpha" } else { "not alpha" };
            out.push_str(&format!("{} = {}  {tag}\n", f.label, braces(&f.elements)));
        }
        out.push_str(&format!("alpha-filters: {}\n", self.alpha_filters.join(" ")));
        let width = self.alpha_filters.iter().map(String::len).max().unwrap_or(1);
        out.push_str(&format!("heyting implication (row ↪ column):\n  {:width$} |", ""));
        for g in &self.alpha_filters {
            out.push_str(&format!(" {g:width$}"));
        }
        out.push('\n');
        for (f, row) in self.alpha_filters.iter().zip(&self.heyting) {
            out.push_str(&format!("  {f:width$} |"));
            for v in row {
                out.push_str(&format!(" {v:width$}"));
            }
            out.push('\n');
        }
        block(&mut out, "prime alpha-filters", &self.prime_alpha_filters);
        if self.adjunction_failures.is_empty() {
            out.push_str("adjunction: holds on all pairs, fixed points are exactly the alpha-filters\n");
        } else {
            for f in &self.adjunction_failures {
                out.push_str(&format!("adjunction failure: {f}\n"));
            }
        }
        for t in &self.theorems {
            out.push_str(&t.line());
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct ClassifyReport {
    pub predicates: ClassificationResult,
    pub maps: Vec<MapReport>,
}

impl Render for ClassifyReport {
    fn text(&self) -> String {
        let p = &self.predicates;
        let mut out = String::new();
        for (name, pred) in [
            ("quasicomplemented", &p.quasicomplemented),
            ("disjunctive", &p.disjunctive),
            ("weakly_disjunctive", &p.weakly_disjunctive),
            ("lattice_boolean", &p.lattice_boolean),
            ("pf_boolean", &p.pf_boolean),
        ] {
            let routes: Vec<&str> = pred.routes.iter().map(|r| r.name).collect();
            out.push_str(&format!("{name}: {}  [{}]\n", pred.value, routes.join(", ")));
        }
        out.push_str("maps:\n");
        for m in &self.maps {
            out.push_str(&format!(
                "  {}: {} -> {}  injective {}, surjective {}, structure {}\n",
                m.name,
                m.domain.label(),
                m.codomain.label(),
                yes(m.injective),
                yes(m.surjective),
                yes(m.structure_holds)
            ));
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub theorems: Vec<TheoremReport>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl VerifyReport {
    pub fn new(theorems: Vec<TheoremReport>) -> VerifyReport {
        let count = |s: Status| theorems.iter().filter(|t| t.status == s).count();
        VerifyReport {
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            skipped: count(Status::Skip),
            theorems,
        }
    }
}

impl Render for VerifyReport {
    fn text(&self) -> String {
        let mut out: String = self.theorems.iter().map(|t| t.line() + "\n").collect();
        out.push_str(&format!(
            "{} passed, {} failed, {} skipped\n",
            self.passed, self.failed, self.skipped
        ));
        out
    }
}

#[derive(Debug, Serialize)]
pub struct LatticeCount {
    pub lattice: usize,
    pub covers: String,
    pub models: usize,
    pub matched: usize,
}

#[derive(Debug, Serialize)]
pub struct SearchModel {
    pub label: String,
    pub document: String,
    pub classification: Option<ClassificationResult>,
    pub theorem_failures: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct SearchReport {
    pub size: usize,
    pub predicate: Option<String>,
    pub lattices: Vec<LatticeCount>,
    pub models: Vec<SearchModel>,
    pub stats: SearchStats,
}

impl Render for SearchReport {
    /// Documents separated by `---`, then a `#` footer.
    fn text(&self) -> String {
        let docs: Vec<&str> = self.models.iter().map(|m| m.document.as_str()).collect();
        let mut out = docs.join("---\n");
        let total: usize = self.lattices.iter().map(|l| l.models).sum();
        out.push_str(&format!("# size: {}\n", self.size));
        out.push_str(&format!("# lattices: {}\n", self.lattices.len()));
        for l in &self.lattices {
            out.push_str(&format!("#   L{}: {} model(s)  {}\n", l.lattice, l.models, l.covers));
        }
        out.push_str(&format!("# models: {total}\n"));
        if let Some(p) = &self.predicate {
            out.push_str(&format!("# where: {p}\n"));
            out.push_str(&format!("# matched: {}\n", self.models.len()));
            let failing = self.models.iter().filter(|m| !m.theorem_failures.is_empty()).count();
            out.push_str(&format!("# matched with theorem failures: {failing}\n"));
        }
        let s = &self.stats;
        out.push_str(&format!("# candidates: {}\n", s.candidates));
        out.push_str(&format!("# pruned: {}\n", s.pruned));
        out.push_str(&format!("# found: {}\n", s.found));
        out.push_str(&format!("# isomorphic rejected: {}\n", s.isomorphic_rejected));
        out
    }
}

//! The morphism diagram between `A`, 𝒫ℱ(𝔄), γ(𝔄), D(𝔄) and H(𝔄), its
//! kernels and quotients, and the class predicates decided several ways.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::analysis::Analysis;
use crate::coann::{double_perp, Coannihilators};
use crate::error::{CoreError, Result};
use crate::filters::{filter_lattice, principal, FamilyKind, FilterFamily};
use crate::lattice::{hom_failure, Congruence, LatticeView, Structure};
use crate::spectrum::{dual_hull, hull};
use crate::subset::Subset;

/// Which lattice of the diagram a map starts or ends at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Node {
    #[serde(rename = "A")]
    Elements,
    #[serde(rename = "PF")]
    Principal,
    #[serde(rename = "gamma")]
    Coannulets,
    #[serde(rename = "D")]
    Dee,
    #[serde(rename = "H")]
    Hull,
}

impl Node {
    pub fn label(self) -> &'static str {
        match self {
            Node::Elements => "A",
            Node::Principal => "PF",
            Node::Coannulets => "γ",
            Node::Dee => "D",
            Node::Hull => "H",
        }
    }
}

/// One arrow of the diagram, as images of domain nodes.
#[derive(Clone, Debug)]
pub struct DiagramMap {
    pub name: &'static str,
    pub domain: Node,
    pub codomain: Node,
    pub structure: Structure,
    pub images: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapReport {
    pub name: &'static str,
    pub domain: Node,
    pub codomain: Node,
    pub injective: bool,
    pub surjective: bool,
    pub structure: Structure,
    pub structure_holds: bool,
}

/// The five lattices and the maps `f1..f6` between them.
#[derive(Clone, Debug)]
pub struct Diagram {
    pub ell: LatticeView,
    pub pf: LatticeView,
    pub gamma: LatticeView,
    pub d: LatticeView,
    pub h: LatticeView,
    /// Node of `ℱ(x)`, `x^⊥`, `d(x)`, `h(x)` for each element `x`.
    pub pf_node: Vec<usize>,
    pub gamma_node: Vec<usize>,
    pub d_node: Vec<usize>,
    pub h_node: Vec<usize>,
    pub maps: Vec<DiagramMap>,
}

fn point_family(
    alg: &Algebra,
    name: &str,
    prefix: &str,
    of: impl Fn(usize) -> Subset,
) -> Result<(LatticeView, Vec<usize>)> {
    let per_element: Vec<Subset> = alg.elements().map(&of).collect();
    let mut sets = per_element.clone();
    sets.sort();
    sets.dedup();
    let labels = sets
        .iter()
        .map(|s| {
            let x = per_element.iter().position(|t| t == s).expect("image of some element");
            format!("{prefix}({})", alg.name(x))
        })
        .collect();
    let view = LatticeView::from_set_ops(name, &sets, labels, |a, b| a | b)
        .map_err(|e| CoreError::internal("diagram", e.to_string()))?;
    let nodes = per_element.iter().map(|&s| view.node_of(s).expect("member")).collect();
    Ok((view, nodes))
}

/// The map on `dom` nodes sending the node of `x` to `target[x]`. Fails when
/// two elements on one node disagree.
fn induced(name: &'static str, dom_size: usize, dom_node: &[usize], target: &[usize]) -> Result<Vec<usize>> {
    let mut images = vec![usize::MAX; dom_size];
    for (x, (&a, &t)) in dom_node.iter().zip(target).enumerate() {
        if images[a] == usize::MAX {
            images[a] = t;
        } else if images[a] != t {
            return Err(CoreError::internal(
                "diagram",
                format!(
                    "{name} is not well defined: element #{x} lands on node {t}, its class on {}",
                    images[a]
                ),
            ));
        }
    }
    if images.contains(&usize::MAX) {
        return Err(CoreError::internal("diagram", format!("{name} leaves a node unmapped")));
    }
    Ok(images)
}

impl Diagram {
    pub fn build(alg: &Algebra, min: &FilterFamily, coann: &Coannihilators) -> Result<Diagram> {
        let ell = LatticeView::of_algebra(alg);
        let pf_family = FilterFamily::new(alg, FamilyKind::All, alg.elements().map(|x| principal(alg, x)))?;
        let pf = filter_lattice(alg, &pf_family, "PF")?;
        let pf_node: Vec<usize> = alg
            .elements()
            .map(|x| pf.node_of(principal(alg, x)).expect("member"))
            .collect();
        let gamma = coann.gamma_view.clone();
        let gamma_node: Vec<usize> = alg
            .elements()
            .map(|x| gamma.node_of(alg.perp(x)).expect("coannulet"))
            .collect();
        let (d, d_node) = point_family(alg, "D", "d", |x| dual_hull(min, Subset::singleton(x)))?;
        let (h, h_node) = point_family(alg, "H", "h", |x| hull(min, Subset::singleton(x)))?;
        let ids: Vec<usize> = alg.elements().collect();

        let maps = vec![
            DiagramMap {
                name: "f1",
                domain: Node::Elements,
                codomain: Node::Principal,
                structure: Structure::DualLatticeHom,
                images: pf_node.clone(),
            },
            DiagramMap {
                name: "f2",
                domain: Node::Elements,
                codomain: Node::Coannulets,
                structure: Structure::LatticeHom,
                images: gamma_node.clone(),
            },
            DiagramMap {
                name: "f3",
                domain: Node::Principal,
                codomain: Node::Dee,
                structure: Structure::LatticeHom,
                images: induced("f3", pf.size(), &pf_node, &d_node)?,
            },
            DiagramMap {
                name: "f4",
                domain: Node::Principal,
                codomain: Node::Coannulets,
                structure: Structure::DualLatticeHom,
                images: induced("f4", pf.size(), &pf_node, &gamma_node)?,
            },
            DiagramMap {
                name: "f5",
                domain: Node::Dee,
                codomain: Node::Hull,
                structure: Structure::DualLatticeHom,
                images: induced("f5", d.size(), &d_node, &h_node)?,
            },
            DiagramMap {
                name: "f6",
                domain: Node::Coannulets,
                codomain: Node::Hull,
                structure: Structure::LatticeHom,
                images: induced("f6", gamma.size(), &gamma_node, &h_node)?,
            },
        ];
        debug_assert_eq!(ids.len(), ell.size());
        Ok(Diagram {
            ell,
            pf,
            gamma,
            d,
            h,
            pf_node,
            gamma_node,
            d_node,
            h_node,
            maps,
        })
    }

    pub fn view(&self, node: Node) -> &LatticeView {
        match node {
            Node::Elements => &self.ell,
            Node::Principal => &self.pf,
            Node::Coannulets => &self.gamma,
            Node::Dee => &self.d,
            Node::Hull => &self.h,
        }
    }

    /// `f1` is index 0, ..., `f6` is index 5.
    pub fn map(&self, k: usize) -> &DiagramMap {
        &self.maps[k - 1]
    }

    pub fn is_injective(&self, k: usize) -> bool {
        let m = self.map(k);
        let mut seen = m.images.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == m.images.len()
    }

    pub fn is_surjective(&self, k: usize) -> bool {
        let m = self.map(k);
        let cod = self.view(m.codomain);
        cod.nodes().all(|c| m.images.contains(&c))
    }

    pub fn structure_holds(&self, k: usize) -> bool {
        let m = self.map(k);
        hom_failure(self.view(m.domain), self.view(m.codomain), &m.images, m.structure).is_none()
    }

    pub fn reports(&self) -> Vec<MapReport> {
        (1..=6)
            .map(|k| {
                let m = self.map(k);
                MapReport {
                    name: m.name,
                    domain: m.domain,
                    codomain: m.codomain,
                    injective: self.is_injective(k),
                    surjective: self.is_surjective(k),
                    structure: m.structure,
                    structure_holds: self.structure_holds(k),
                }
            })
            .collect()
    }

    /// `κ(f)`; a kernel that does not respect the domain's operations is an
    /// internal error.
    pub fn kernel(&self, k: usize) -> Result<Congruence> {
        let m = self.map(k);
        let cong = Congruence::kernel(&m.images);
        if !cong.is_compatible(self.view(m.domain)) {
            return Err(CoreError::internal(
                "kernel",
                format!("κ({}) is not a congruence of {}", m.name, m.domain.label()),
            ));
        }
        Ok(cong)
    }

    /// Domain of map `k` divided by its kernel.
    pub fn quotient(&self, k: usize) -> Result<LatticeView> {
        let m = self.map(k);
        let cong = self.kernel(k)?;
        self.view(m.domain)
            .quotient(&cong, format!("{}/κ({})", m.domain.label(), m.name))
            .map_err(|e| CoreError::internal("quotient", e.to_string()))
    }

    /// The elements in the `κ(f1)` or `κ(f2)` class of `x`, as a subset of A.
    pub fn element_class(&self, k: usize, x: usize) -> Result<Subset> {
        debug_assert!(self.map(k).domain == Node::Elements);
        Ok(self.kernel(k)?.class_containing(x).iter().copied().collect())
    }
}

/// One way of deciding a predicate and what it said.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Route {
    pub name: &'static str,
    pub verdict: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Predicate {
    pub value: bool,
    pub routes: Vec<Route>,
}

impl Predicate {
    /// All routes must agree.
    pub fn decide(predicate: &'static str, routes: Vec<Route>) -> Result<Predicate> {
        let value = routes[0].verdict;
        if routes.iter().any(|r| r.verdict != value) {
            let listing: Vec<String> = routes.iter().map(|r| format!("{}={}", r.name, r.verdict)).collect();
            return Err(CoreError::internal(
                "classify",
                format!("{predicate}: routes disagree ({})", listing.join(", ")),
            ));
        }
        Ok(Predicate { value, routes })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationResult {
    pub quasicomplemented: Predicate,
    pub disjunctive: Predicate,
    pub weakly_disjunctive: Predicate,
    pub lattice_boolean: Predicate,
    pub pf_boolean: Predicate,
}

/// The names accepted by [`ClassificationResult::get`].
pub const PREDICATE_NAMES: [&str; 5] = [
    "quasicomplemented",
    "disjunctive",
    "weakly_disjunctive",
    "lattice_boolean",
    "pf_boolean",
];

impl ClassificationResult {
    pub fn get(&self, name: &str) -> Option<bool> {
        Some(match name {
            "quasicomplemented" => self.quasicomplemented.value,
            "disjunctive" => self.disjunctive.value,
            "weakly_disjunctive" => self.weakly_disjunctive.value,
            "lattice_boolean" => self.lattice_boolean.value,
            "pf_boolean" => self.pf_boolean.value,
            _ => return None,
        })
    }
}

fn route(name: &'static str, verdict: bool) -> Route {
    Route { name, verdict }
}

/// Quasicomplementedness by its definition and six characterisations.
pub fn quasicomplemented(an: &Analysis) -> Result<Predicate> {
    let alg = &an.alg;
    let dense = alg.dense_set();
    let by_definition = alg
        .elements()
        .all(|x| alg.elements().any(|y| double_perp(alg, x) == alg.perp(y)));
    let by_dense_product = alg.elements().all(|x| {
        alg.elements()
            .any(|y| dense.contains(alg.prod(x, y)) && alg.join(x, y) == alg.top())
    });
    let gamma_boolean = an.coann.gamma_view.is_boolean();
    let ell_quotient = an.diagram.quotient(2)?.is_boolean();
    let pf_quotient = an.diagram.quotient(4)?.is_boolean();
    let dense_free_primes_minimal = an
        .spectrum
        .spec
        .iter()
        .filter(|p| p.is_disjoint(dense))
        .all(|p| an.spectrum.min.contains(p));
    let topologies_equal = an.tau_h == an.tau_d;
    Predicate::decide(
        "quasicomplemented",
        vec![
            route("definition", by_definition),
            route("dense_product_witness", by_dense_product),
            route("gamma_boolean", gamma_boolean),
            route("ell_mod_kernel_f2_boolean", ell_quotient),
            route("pf_mod_kernel_f4_boolean", pf_quotient),
            route("dense_free_primes_minimal", dense_free_primes_minimal),
            route("tau_h_equals_tau_d", topologies_equal),
        ],
    )
}

/// `f2` injective, and `f1`, `f4` both injective.
pub fn disjunctive(an: &Analysis) -> Result<Predicate> {
    let d = &an.diagram;
    Predicate::decide(
        "disjunctive",
        vec![
            route("f2_injective", d.is_injective(2)),
            route("f1_and_f4_injective", d.is_injective(1) && d.is_injective(4)),
        ],
    )
}

/// `f3` injective, `f4` injective, every filter α, every prime filter α.
pub fn weakly_disjunctive(an: &Analysis) -> Result<Predicate> {
    let d = &an.diagram;
    let alpha = &an.alpha.members;
    Predicate::decide(
        "weakly_disjunctive",
        vec![
            route("f3_injective", d.is_injective(3)),
            route("f4_injective", d.is_injective(4)),
            route("every_filter_alpha", an.filters.iter().all(|f| alpha.contains(f))),
            route("every_prime_alpha", an.spectrum.spec.iter().all(|p| alpha.contains(p))),
        ],
    )
}

/// ℓ(𝔄) Boolean: lattice check, `a∧¬a = 0` and `a∨¬a = 1`, and B(𝔄) = A.
pub fn lattice_boolean(an: &Analysis) -> Result<Predicate> {
    let alg = &an.alg;
    let by_negation = alg
        .elements()
        .all(|a| alg.meet(a, alg.neg(a)) == alg.bottom() && alg.join(a, alg.neg(a)) == alg.top());
    Predicate::decide(
        "lattice_boolean",
        vec![
            route("lattice_check", an.diagram.ell.is_boolean()),
            route("negation_complements", by_negation),
            route("boolean_center_full", alg.boolean_center() == alg.full()),
        ],
    )
}

/// 𝒫ℱ(𝔄) Boolean: lattice check, and for every `a` some `b ∈ a^⊥` with
/// `a⊙b` nilpotent.
pub fn pf_boolean(an: &Analysis) -> Result<Predicate> {
    let alg = &an.alg;
    let nil = alg.nilpotent_set();
    let by_elements = alg
        .elements()
        .all(|a| alg.perp(a).iter().any(|b| nil.contains(alg.prod(a, b))));
    Predicate::decide(
        "pf_boolean",
        vec![
            route("lattice_check", an.diagram.pf.is_boolean()),
            route("nilpotent_witness", by_elements),
        ],
    )
}

pub fn classify(an: &Analysis) -> Result<ClassificationResult> {
    Ok(ClassificationResult {
        quasicomplemented: quasicomplemented(an)?,
        disjunctive: disjunctive(an)?,
        weakly_disjunctive: weakly_disjunctive(an)?,
        lattice_boolean: lattice_boolean(an)?,
        pf_boolean: pf_boolean(an)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn set(alg: &Algebra, names: &[&str]) -> Subset {
        alg.subset_of_names(names.iter().copied()).unwrap()
    }

    #[test]
    fn diagram_of_a7() {
        let an = Analysis::compute(samples::a7()).unwrap();
        let d = &an.diagram;
        assert!(!d.is_injective(4));
        assert!(d.is_injective(6) && d.is_surjective(6));
        assert_eq!(d.gamma.size(), 4);
        assert_eq!(d.h.size(), 4);
        for r in d.reports() {
            assert!(r.structure_holds, "{}", r.name);
        }
    }

    #[test]
    fn kernel_classes_on_a7() {
        let an = Analysis::compute(samples::a7()).unwrap();
        let a7 = &an.alg;
        let classes: Vec<Subset> = an
            .diagram
            .kernel(2)
            .unwrap()
            .classes
            .iter()
            .map(|c| c.iter().copied().collect())
            .collect();
        for expected in [&["1"][..], &["e"], &["b", "d"], &["0", "a", "c"]] {
            assert!(classes.contains(&set(a7, expected)), "{expected:?}");
        }
        assert_eq!(an.diagram.element_class(2, a7.bottom()).unwrap(), a7.dense_set());
        assert_eq!(an.diagram.element_class(1, a7.bottom()).unwrap(), set(a7, &["0"]));
    }

    #[test]
    fn a7_classification() {
        let an = Analysis::compute(samples::a7()).unwrap();
        let c = classify(&an).unwrap();
        assert!(c.quasicomplemented.value);
        assert_eq!(c.quasicomplemented.routes.len(), 7);
        assert!(!c.disjunctive.value);
        assert!(!c.weakly_disjunctive.value);
        assert!(!c.lattice_boolean.value);
        assert!(!c.pf_boolean.value);
    }

    #[test]
    fn boolean_algebra_is_everything() {
        let an = Analysis::compute(samples::boolean4()).unwrap();
        let c = classify(&an).unwrap();
        for name in PREDICATE_NAMES {
            assert_eq!(c.get(name), Some(true), "{name}");
        }
    }

    #[test]
    fn two_chain_maps_are_bijections() {
        let an = Analysis::compute(samples::chain2()).unwrap();
        for k in 1..=6 {
            assert!(an.diagram.is_injective(k) && an.diagram.is_surjective(k), "f{k}");
        }
    }
}

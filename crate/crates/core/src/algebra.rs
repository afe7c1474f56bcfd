//! Finite residuated lattices given by four total operation tables.
//!
//! [`Algebra::new`] is the only way to obtain an [`Algebra`]; it checks every
//! axiom and reports all violations, so a value of this type is always a
//! bounded lattice with a commutative integral monoid and an adjoint pair.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::subset::Subset;

pub type ElementId = usize;

/// Largest supported universe: one machine word per subset.
pub const MAX_ELEMENTS: usize = 64;

/// An `n x n` table, row-major, row = left operand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OpTable {
    n: usize,
    entries: Vec<ElementId>,
}

impl OpTable {
    pub fn new(n: usize, entries: Vec<ElementId>) -> Self {
        OpTable { n, entries }
    }

    pub fn from_fn(n: usize, f: impl Fn(ElementId, ElementId) -> ElementId) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                entries.push(f(x, y));
            }
        }
        OpTable { n, entries }
    }

    #[inline]
    pub fn get(&self, x: ElementId, y: ElementId) -> ElementId {
        self.entries[x * self.n + y]
    }

    pub fn set(&mut self, x: ElementId, y: ElementId, v: ElementId) {
        self.entries[x * self.n + y] = v;
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[ElementId] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[ElementId]> {
        self.entries.chunks(self.n.max(1))
    }
}

/// The four operation tables of a candidate algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tables {
    pub join: OpTable,
    pub meet: OpTable,
    pub prod: OpTable,
    pub imp: OpTable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    JoinCommutative,
    JoinAssociative,
    JoinIdempotent,
    MeetCommutative,
    MeetAssociative,
    MeetIdempotent,
    Absorption,
    OrderConsistency,
    BottomLeast,
    TopGreatest,
    ProdCommutative,
    ProdAssociative,
    ProdIdentity,
    Adjointness,
    ProdDistributesOverJoin,
    JoinProdBound,
}

impl Axiom {
    pub fn law(self) -> &'static str {
        match self {
            Axiom::JoinCommutative => "x∨y = y∨x",
            Axiom::JoinAssociative => "(x∨y)∨z = x∨(y∨z)",
            Axiom::JoinIdempotent => "x∨x = x",
            Axiom::MeetCommutative => "x∧y = y∧x",
            Axiom::MeetAssociative => "(x∧y)∧z = x∧(y∧z)",
            Axiom::MeetIdempotent => "x∧x = x",
            Axiom::Absorption => "x∨(x∧y) = x and x∧(x∨y) = x",
            Axiom::OrderConsistency => "x∧y = x iff x∨y = y",
            Axiom::BottomLeast => "0 ≤ x",
            Axiom::TopGreatest => "x ≤ 1",
            Axiom::ProdCommutative => "x⊙y = y⊙x",
            Axiom::ProdAssociative => "(x⊙y)⊙z = x⊙(y⊙z)",
            Axiom::ProdIdentity => "x⊙1 = x",
            Axiom::Adjointness => "x⊙y ≤ z iff x ≤ y→z",
            Axiom::ProdDistributesOverJoin => "x⊙(y∨z) = (x⊙y)∨(x⊙z)",
            Axiom::JoinProdBound => "x∨(y⊙z) ≥ (x∨y)⊙(x∨z)",
        }
    }
}

/// One failed axiom instance together with the elements that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<ElementId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("malformed algebra: {}", .0.join("; "))]
    Malformed(Vec<String>),
    #[error("{} axiom violation(s)", .violations.len())]
    Axioms {
        names: Vec<String>,
        violations: Vec<Violation>,
    },
}

impl ValidationError {
    /// One line per problem, with witnesses rendered by element name.
    pub fn lines(&self) -> Vec<String> {
        match self {
            ValidationError::Malformed(problems) => problems.clone(),
            ValidationError::Axioms { names, violations } => violations
                .iter()
                .map(|v| {
                    let w: Vec<&str> = v.witness.iter().map(|&x| names[x].as_str()).collect();
                    format!("{:?}: {} fails at ({})", v.axiom, v.axiom.law(), w.join(", "))
                })
                .collect(),
        }
    }
}

/// A validated finite residuated lattice. Immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    names: Vec<String>,
    tables: Tables,
    bottom: ElementId,
    top: ElementId,
    up: Vec<Subset>,
    down: Vec<Subset>,
    perp: Vec<Subset>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("names", &self.names)
            .field("bottom", &self.bottom)
            .field("top", &self.top)
            .finish_non_exhaustive()
    }
}

impl Algebra {
    pub fn new(
        names: Vec<String>,
        tables: Tables,
        bottom: ElementId,
        top: ElementId,
    ) -> Result<Algebra, ValidationError> {
        check_shape(&names, &tables, bottom, top).map_err(ValidationError::Malformed)?;
        let violations = axiom_violations(&tables, bottom, top);
        if !violations.is_empty() {
            return Err(ValidationError::Axioms { names, violations });
        }
        let n = names.len();
        let leq = |x: ElementId, y: ElementId| tables.meet.get(x, y) == x;
        let up = (0..n).map(|x| (0..n).filter(|&y| leq(x, y)).collect()).collect();
        let down = (0..n).map(|x| (0..n).filter(|&y| leq(y, x)).collect()).collect();
        let perp = (0..n)
            .map(|x| (0..n).filter(|&y| tables.join.get(x, y) == top).collect())
            .collect();
        Ok(Algebra {
            names,
            tables,
            bottom,
            top,
            up,
            down,
            perp,
        })
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: ElementId) -> &str {
        &self.names[x]
    }

    pub fn element(&self, name: &str) -> Option<ElementId> {
        self.names.iter().position(|n| n == name)
    }

    pub fn tables(&self) -> &Tables {
        &self.tables
    }

    pub fn bottom(&self) -> ElementId {
        self.bottom
    }

    pub fn top(&self) -> ElementId {
        self.top
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.size()
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.size())
    }

    /// The trivial filter `{1}`.
    pub fn unit(&self) -> Subset {
        Subset::singleton(self.top)
    }

    #[inline]
    pub fn join(&self, x: ElementId, y: ElementId) -> ElementId {
        self.tables.join.get(x, y)
    }

    #[inline]
    pub fn meet(&self, x: ElementId, y: ElementId) -> ElementId {
        self.tables.meet.get(x, y)
    }

    #[inline]
    pub fn prod(&self, x: ElementId, y: ElementId) -> ElementId {
        self.tables.prod.get(x, y)
    }

    #[inline]
    pub fn imp(&self, x: ElementId, y: ElementId) -> ElementId {
        self.tables.imp.get(x, y)
    }

    #[inline]
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.up[x].contains(y)
    }

    /// `{y : x <= y}`
    pub fn up(&self, x: ElementId) -> Subset {
        self.up[x]
    }

    /// `{y : y <= x}`
    pub fn down(&self, x: ElementId) -> Subset {
        self.down[x]
    }

    /// Coannulet `{x}^⊥ = {y : x∨y = 1}`.
    pub fn perp(&self, x: ElementId) -> Subset {
        self.perp[x]
    }

    pub fn neg(&self, x: ElementId) -> ElementId {
        self.imp(x, self.bottom)
    }

    /// `x^k` with `x^0 = 1`.
    pub fn power(&self, x: ElementId, k: usize) -> ElementId {
        let mut acc = self.top;
        for _ in 0..k {
            let next = self.prod(x, acc);
            // powers descend in an integral monoid; once stable they stay put
            if next == acc {
                break;
            }
            acc = next;
        }
        acc
    }

    /// The distinct powers `x^0, x^1, ...` until they stabilise.
    pub fn powers(&self, x: ElementId) -> Vec<ElementId> {
        let mut out = vec![self.top];
        loop {
            let next = self.prod(x, *out.last().unwrap());
            if out.contains(&next) {
                return out;
            }
            out.push(next);
        }
    }

    /// Join of all members; `0` for the empty set.
    pub fn join_all(&self, s: Subset) -> ElementId {
        s.iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Product of all members; `1` for the empty set.
    pub fn prod_all(&self, s: Subset) -> ElementId {
        s.iter().fold(self.top, |acc, x| self.prod(acc, x))
    }

    /// Nilpotent elements: some power equals `0`.
    pub fn nilpotent_set(&self) -> Subset {
        let n = self.size();
        self.elements().filter(|&x| self.power(x, n) == self.bottom).collect()
    }

    /// Complemented elements of the lattice reduct.
    pub fn boolean_center(&self) -> Subset {
        self.elements().filter(|&e| self.complement_of(e).is_some()).collect()
    }

    /// A lattice complement of `e`, if one exists.
    pub fn complement_of(&self, e: ElementId) -> Option<ElementId> {
        self.elements()
            .find(|&f| self.meet(e, f) == self.bottom && self.join(e, f) == self.top)
    }

    /// Checks the standard properties of Boolean-center members and returns
    /// one description per failure. Empty for every valid algebra.
    pub fn boolean_center_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for e in self.boolean_center() {
            let ne = self.neg(e);
            if self.meet(e, ne) != self.bottom || self.join(e, ne) != self.top {
                out.push(format!("¬{} is not a complement of {}", self.name(e), self.name(e)));
            }
            for k in 1..=self.size() {
                if self.power(e, k) != e {
                    out.push(format!("{}^{} ≠ {}", self.name(e), k, self.name(e)));
                }
            }
            for a in self.elements() {
                if self.prod(e, a) != self.meet(e, a) {
                    out.push(format!(
                        "{}⊙{} ≠ {}∧{}",
                        self.name(e),
                        self.name(a),
                        self.name(e),
                        self.name(a)
                    ));
                }
            }
            if self.neg(ne) != e {
                out.push(format!("¬¬{} ≠ {}", self.name(e), self.name(e)));
            }
        }
        out
    }

    pub fn is_dense(&self, x: ElementId) -> bool {
        self.perp[x] == self.unit()
    }

    pub fn dense_set(&self) -> Subset {
        self.elements().filter(|&x| self.is_dense(x)).collect()
    }

    /// Non-empty, down-closed and join-closed.
    pub fn is_lattice_ideal(&self, s: Subset) -> bool {
        !s.is_empty()
            && s.iter().all(|x| self.down(x).is_subset_of(s))
            && s.iter().all(|x| s.iter().all(|y| s.contains(self.join(x, y))))
    }

    pub fn is_join_closed(&self, s: Subset) -> bool {
        !s.is_empty() && s.iter().all(|x| s.iter().all(|y| s.contains(self.join(x, y))))
    }

    /// Closure of `s` under binary joins.
    pub fn join_closure(&self, s: Subset) -> Subset {
        let mut acc = s;
        loop {
            let mut next = acc;
            for x in acc {
                for y in acc {
                    next.insert(self.join(x, y));
                }
            }
            if next == acc {
                return acc;
            }
            acc = next;
        }
    }

    pub fn is_up_set(&self, s: Subset) -> bool {
        s.iter().all(|x| self.up(x).is_subset_of(s))
    }

    /// `{a,b,1}`-style rendering in table order.
    pub fn show(&self, s: Subset) -> String {
        let parts: Vec<&str> = s.iter().map(|x| self.name(x)).collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn subset_of_names<'a>(&self, names: impl IntoIterator<Item = &'a str>) -> Option<Subset> {
        let mut s = Subset::EMPTY;
        for name in names {
            s.insert(self.element(name)?);
        }
        Some(s)
    }

    /// Builds an algebra from a lattice order and a product table, deriving
    /// join, meet and the residual `x→z = max{y : x⊙y ≤ z}`. Any table that
    /// cannot be derived (no least upper bound, no residual) is reported as
    /// malformed; the result is then validated like any other input.
    pub fn from_order_and_prod(
        names: Vec<String>,
        leq: impl Fn(ElementId, ElementId) -> bool,
        prod: OpTable,
    ) -> Result<Algebra, ValidationError> {
        let n = names.len();
        let (join, meet) = lattice_tables(n, &leq, &names).map_err(ValidationError::Malformed)?;
        let mut problems = Vec::new();
        let mut imp = OpTable::new(n, vec![0; n * n]);
        if prod.size() != n || prod.entries().iter().any(|&v| v >= n) {
            problems.push("product table has the wrong shape".into());
        }
        if !problems.is_empty() {
            return Err(ValidationError::Malformed(problems));
        }
        let greatest = |cands: Vec<ElementId>| cands.iter().copied().find(|&c| cands.iter().all(|&d| leq(d, c)));
        for x in 0..n {
            for z in 0..n {
                match greatest((0..n).filter(|&y| leq(prod.get(x, y), z)).collect()) {
                    Some(v) => imp.set(x, z, v),
                    None => problems.push(format!("no residual {}→{}", names[x], names[z])),
                }
            }
        }
        if !problems.is_empty() {
            return Err(ValidationError::Malformed(problems));
        }
        let bottom = (0..n).find(|&b| (0..n).all(|y| leq(b, y)));
        let top = (0..n).find(|&t| (0..n).all(|y| leq(y, t)));
        let (Some(bottom), Some(top)) = (bottom, top) else {
            return Err(ValidationError::Malformed(vec!["order is not bounded".into()]));
        };
        Algebra::new(names, Tables { join, meet, prod, imp }, bottom, top)
    }
}

/// Join and meet tables of a finite partial order, or the pairs lacking them.
pub fn lattice_tables(
    n: usize,
    leq: impl Fn(ElementId, ElementId) -> bool,
    names: &[String],
) -> Result<(OpTable, OpTable), Vec<String>> {
    let mut problems = Vec::new();
    let mut join = OpTable::new(n, vec![0; n * n]);
    let mut meet = OpTable::new(n, vec![0; n * n]);
    for x in 0..n {
        for y in 0..n {
            let ub: Vec<ElementId> = (0..n).filter(|&u| leq(x, u) && leq(y, u)).collect();
            match ub.iter().copied().find(|&c| ub.iter().all(|&d| leq(c, d))) {
                Some(v) => join.set(x, y, v),
                None => problems.push(format!("no join for ({}, {})", names[x], names[y])),
            }
            let lb: Vec<ElementId> = (0..n).filter(|&u| leq(u, x) && leq(u, y)).collect();
            match lb.iter().copied().find(|&c| lb.iter().all(|&d| leq(d, c))) {
                Some(v) => meet.set(x, y, v),
                None => problems.push(format!("no meet for ({}, {})", names[x], names[y])),
            }
        }
    }
    if problems.is_empty() {
        Ok((join, meet))
    } else {
        Err(problems)
    }
}

fn check_shape(names: &[String], t: &Tables, bottom: ElementId, top: ElementId) -> Result<(), Vec<String>> {
    let n = names.len();
    let mut problems = Vec::new();
    if n < 2 {
        problems.push(format!("need at least 2 elements, got {n}"));
    }
    if n > MAX_ELEMENTS {
        problems.push(format!("at most {MAX_ELEMENTS} elements are supported, got {n}"));
    }
    for (i, name) in names.iter().enumerate() {
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            problems.push(format!("element {i} has an unusable name {name:?}"));
        }
        if names[..i].contains(name) {
            problems.push(format!("duplicate element name {name:?}"));
        }
    }
    for (label, table) in [
        ("join", &t.join),
        ("meet", &t.meet),
        ("prod", &t.prod),
        ("impl", &t.imp),
    ] {
        if table.n != n || table.entries.len() != n * n {
            problems.push(format!("{label} table is not {n}x{n}"));
        } else if let Some(pos) = table.entries.iter().position(|&v| v >= n) {
            problems.push(format!(
                "{label} table entry ({}, {}) is out of range",
                pos / n,
                pos % n
            ));
        }
    }
    if bottom >= n {
        problems.push("bottom is out of range".into());
    }
    if top >= n {
        problems.push("top is out of range".into());
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(problems)
    }
}

fn axiom_violations(t: &Tables, bottom: ElementId, top: ElementId) -> Vec<Violation> {
    let n = t.join.n;
    let (j, m, p, r) = (&t.join, &t.meet, &t.prod, &t.imp);
    let leq = |x: ElementId, y: ElementId| m.get(x, y) == x;
    let mut out = Vec::new();
    let mut push = |axiom, witness: &[ElementId]| {
        out.push(Violation {
            axiom,
            witness: witness.to_vec(),
        })
    };

    for x in 0..n {
        if j.get(x, x) != x {
            push(Axiom::JoinIdempotent, &[x]);
        }
        if m.get(x, x) != x {
            push(Axiom::MeetIdempotent, &[x]);
        }
        if !leq(bottom, x) {
            push(Axiom::BottomLeast, &[x]);
        }
        if !leq(x, top) {
            push(Axiom::TopGreatest, &[x]);
        }
        if p.get(x, top) != x {
            push(Axiom::ProdIdentity, &[x]);
        }
    }
    for x in 0..n {
        for y in 0..n {
            if j.get(x, y) != j.get(y, x) {
                push(Axiom::JoinCommutative, &[x, y]);
            }
            if m.get(x, y) != m.get(y, x) {
                push(Axiom::MeetCommutative, &[x, y]);
            }
            if p.get(x, y) != p.get(y, x) {
                push(Axiom::ProdCommutative, &[x, y]);
            }
            if j.get(x, m.get(x, y)) != x || m.get(x, j.get(x, y)) != x {
                push(Axiom::Absorption, &[x, y]);
            }
            if (m.get(x, y) == x) != (j.get(x, y) == y) {
                push(Axiom::OrderConsistency, &[x, y]);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if j.get(j.get(x, y), z) != j.get(x, j.get(y, z)) {
                    push(Axiom::JoinAssociative, &[x, y, z]);
                }
                if m.get(m.get(x, y), z) != m.get(x, m.get(y, z)) {
                    push(Axiom::MeetAssociative, &[x, y, z]);
                }
                if p.get(p.get(x, y), z) != p.get(x, p.get(y, z)) {
                    push(Axiom::ProdAssociative, &[x, y, z]);
                }
                if leq(p.get(x, y), z) != leq(x, r.get(y, z)) {
                    push(Axiom::Adjointness, &[x, y, z]);
                }
                if p.get(x, j.get(y, z)) != j.get(p.get(x, y), p.get(x, z)) {
                    push(Axiom::ProdDistributesOverJoin, &[x, y, z]);
                }
                if !leq(p.get(j.get(x, y), j.get(x, z)), j.get(x, p.get(y, z))) {
                    push(Axiom::JoinProdBound, &[x, y, z]);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn id(alg: &Algebra, name: &str) -> ElementId {
        alg.element(name).unwrap()
    }

    fn set(alg: &Algebra, names: &[&str]) -> Subset {
        alg.subset_of_names(names.iter().copied()).unwrap()
    }

    #[test]
    fn a7_validates() {
        let a7 = samples::a7();
        assert_eq!(a7.size(), 7);
        assert_eq!(a7.name(a7.bottom()), "0");
        assert_eq!(a7.name(a7.top()), "1");
    }

    #[test]
    fn two_chain_validates() {
        let c = samples::chain2();
        assert_eq!(c.size(), 2);
        assert_eq!(c.neg(c.top()), c.bottom());
    }

    #[test]
    fn mutated_a7_reports_adjointness() {
        let a7 = samples::a7();
        let (b, e) = (id(&a7, "b"), id(&a7, "e"));
        let mut tables = a7.tables().clone();
        tables.prod.set(b, e, b);
        tables.prod.set(e, b, b);
        let err = Algebra::new(a7.names().to_vec(), tables, a7.bottom(), a7.top()).unwrap_err();
        let ValidationError::Axioms { violations, .. } = &err else {
            panic!("expected axiom violations, got {err:?}");
        };
        assert!(violations.iter().any(|v| v.axiom == Axiom::Adjointness));
        // every violation is reported, not just the first
        assert!(violations.len() > 1);
        assert!(err.lines().iter().any(|l| l.starts_with("Adjointness")));
    }

    #[test]
    fn malformed_shapes_are_listed() {
        let t = OpTable::new(2, vec![0, 1, 1, 1]);
        let tables = Tables {
            join: t.clone(),
            meet: OpTable::new(2, vec![0, 0, 0]),
            prod: t.clone(),
            imp: OpTable::new(2, vec![1, 1, 0, 7]),
        };
        let err = Algebra::new(vec!["0".into(), "0".into()], tables, 0, 1).unwrap_err();
        let ValidationError::Malformed(p) = err else { panic!() };
        assert_eq!(p.len(), 3, "{p:?}");
    }

    #[test]
    fn negation_on_a7() {
        let a7 = samples::a7();
        assert_eq!(a7.neg(a7.bottom()), a7.top());
        assert_eq!(a7.neg(id(&a7, "e")), a7.bottom());
        assert_eq!(a7.neg(a7.top()), a7.bottom());
    }

    #[test]
    fn powers_on_a7() {
        let a7 = samples::a7();
        let (a, b, c) = (id(&a7, "a"), id(&a7, "b"), id(&a7, "c"));
        assert_eq!(a7.power(c, 2), a);
        assert_eq!(a7.power(b, 3), b);
        assert_eq!(a7.power(c, 0), a7.top());
        for x in a7.elements() {
            assert_eq!(a7.power(x, 1), x);
        }
    }

    #[test]
    fn derived_sets_on_a7() {
        let a7 = samples::a7();
        assert_eq!(a7.nilpotent_set(), set(&a7, &["0"]));
        assert_eq!(a7.boolean_center(), set(&a7, &["0", "1"]));
        assert_eq!(a7.dense_set(), set(&a7, &["0", "a", "c"]));
        assert!(a7.is_lattice_ideal(a7.nilpotent_set()));
        assert!(a7.is_lattice_ideal(a7.dense_set()));
        assert!(a7.boolean_center_failures().is_empty());
    }

    #[test]
    fn boolean_four_has_full_center() {
        let b4 = samples::boolean4();
        assert_eq!(b4.boolean_center(), b4.full());
        assert_eq!(samples::chain2().boolean_center(), samples::chain2().full());
        assert_eq!(samples::chain2().nilpotent_set(), Subset::singleton(0));
    }

    #[test]
    fn zero_dense_one_not() {
        for alg in samples::exemplars() {
            assert!(alg.is_dense(alg.bottom()));
            assert!(!alg.is_dense(alg.top()));
        }
    }

    #[test]
    fn prod_is_monotone_and_below_meet() {
        for alg in samples::exemplars() {
            for x in alg.elements() {
                for y in alg.elements() {
                    assert!(alg.leq(alg.prod(x, y), alg.meet(x, y)));
                    for z in alg.elements() {
                        if alg.leq(y, z) {
                            assert!(alg.leq(alg.prod(x, y), alg.prod(x, z)));
                        }
                        // the other orientation of adjointness
                        assert_eq!(alg.leq(alg.prod(x, y), z), alg.leq(y, alg.imp(x, z)));
                    }
                }
            }
        }
    }
}

//! Abstract finite bounded lattices given by join/meet tables.
//!
//! Every lattice the theory talks about besides the algebra itself (the
//! filter lattice, principal filters, coannulets, coannihilators, ω-filters,
//! α-filters, the D/H lattices of Min, quotients) is materialised as a
//! [`LatticeView`], so one set of law checkers serves all of them.

use serde::Serialize;
use thiserror::Error;

use crate::algebra::Algebra;
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("{view}: {detail}")]
    NotALattice { view: String, detail: String },
    #[error("{view}: partition is not compatible with {op} at ({a}, {b})")]
    Incompatible {
        view: String,
        op: &'static str,
        a: usize,
        b: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeView {
    name: String,
    labels: Vec<String>,
    /// When the view is a family of subsets, the member behind each node.
    sets: Option<Vec<Subset>>,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl LatticeView {
    /// Builds a view from explicit tables and checks the bounded lattice laws.
    pub fn from_tables(
        name: impl Into<String>,
        labels: Vec<String>,
        join: Vec<usize>,
        meet: Vec<usize>,
    ) -> Result<Self, LatticeError> {
        let name = name.into();
        let m = labels.len();
        let fail = |detail: String| LatticeError::NotALattice {
            view: name.clone(),
            detail,
        };
        if m == 0 || join.len() != m * m || meet.len() != m * m {
            return Err(fail("tables do not match the carrier".into()));
        }
        if join.iter().chain(&meet).any(|&v| v >= m) {
            return Err(fail("table entry out of range".into()));
        }
        let leq = |a: usize, b: usize| meet[a * m + b] == a;
        let bottom = (0..m).find(|&b| (0..m).all(|x| leq(b, x)));
        let top = (0..m).find(|&t| (0..m).all(|x| leq(x, t)));
        let (Some(bottom), Some(top)) = (bottom, top) else {
            return Err(fail("no bottom or no top".into()));
        };
        let view = LatticeView {
            name: name.clone(),
            labels,
            sets: None,
            join,
            meet,
            bottom,
            top,
        };
        if let Some(detail) = view.law_violation() {
            return Err(LatticeError::NotALattice {
                view: view.name,
                detail,
            });
        }
        Ok(view)
    }

    /// A family of subsets closed under intersection, ordered by inclusion.
    /// Meet is intersection and join is the least member containing the
    /// union. Fails when the family is not such a lattice.
    pub fn from_set_family(
        name: impl Into<String>,
        sets: &[Subset],
        labels: Vec<String>,
    ) -> Result<Self, LatticeError> {
        let name = name.into();
        let m = sets.len();
        let fail = |detail: String| LatticeError::NotALattice {
            view: name.clone(),
            detail,
        };
        let index = |s: Subset| sets.iter().position(|&t| t == s);
        let mut join = vec![0; m * m];
        let mut meet = vec![0; m * m];
        for a in 0..m {
            for b in 0..m {
                let inter = sets[a] & sets[b];
                meet[a * m + b] = index(inter).ok_or_else(|| fail(format!("not closed under ∩ at ({a}, {b})")))?;
                let union = sets[a] | sets[b];
                let uppers: Vec<usize> = (0..m).filter(|&c| union.is_subset_of(sets[c])).collect();
                let least = uppers
                    .iter()
                    .copied()
                    .find(|&c| uppers.iter().all(|&d| sets[c].is_subset_of(sets[d])))
                    .ok_or_else(|| fail(format!("no least upper bound for ({a}, {b})")))?;
                join[a * m + b] = least;
            }
        }
        let mut view = LatticeView::from_tables(name, labels, join, meet)?;
        view.sets = Some(sets.to_vec());
        Ok(view)
    }

    /// A family of subsets with meet `∩` and an explicitly given join. Fails
    /// when either operation leaves the family or the laws break.
    pub fn from_set_ops(
        name: impl Into<String>,
        sets: &[Subset],
        labels: Vec<String>,
        join_of: impl Fn(Subset, Subset) -> Subset,
    ) -> Result<Self, LatticeError> {
        let name = name.into();
        let m = sets.len();
        let fail = |detail: String| LatticeError::NotALattice {
            view: name.clone(),
            detail,
        };
        let index = |s: Subset| sets.iter().position(|&t| t == s);
        let mut join = vec![0; m * m];
        let mut meet = vec![0; m * m];
        for a in 0..m {
            for b in 0..m {
                meet[a * m + b] =
                    index(sets[a] & sets[b]).ok_or_else(|| fail(format!("not closed under ∩ at ({a}, {b})")))?;
                join[a * m + b] = index(join_of(sets[a], sets[b]))
                    .ok_or_else(|| fail(format!("join leaves the family at ({a}, {b})")))?;
            }
        }
        let mut view = LatticeView::from_tables(name, labels, join, meet)?;
        view.sets = Some(sets.to_vec());
        Ok(view)
    }

    /// The lattice reduct of an algebra, one node per element.
    pub fn of_algebra(alg: &Algebra) -> Self {
        let n = alg.size();
        let mut join = Vec::with_capacity(n * n);
        let mut meet = Vec::with_capacity(n * n);
        for x in alg.elements() {
            for y in alg.elements() {
                join.push(alg.join(x, y));
                meet.push(alg.meet(x, y));
            }
        }
        LatticeView {
            name: "A".into(),
            labels: alg.names().to_vec(),
            sets: None,
            join,
            meet,
            bottom: alg.bottom(),
            top: alg.top(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn sets(&self) -> Option<&[Subset]> {
        self.sets.as_deref()
    }

    pub fn set(&self, a: usize) -> Subset {
        self.sets.as_ref().expect("view is not a set family")[a]
    }

    /// Node holding the given member, for set-family views.
    pub fn node_of(&self, s: Subset) -> Option<usize> {
        self.sets.as_ref()?.iter().position(|&t| t == s)
    }

    pub fn nodes(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size() + b]
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size() + b]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.meet(a, b) == a
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    fn law_violation(&self) -> Option<String> {
        let m = self.size();
        for a in 0..m {
            if self.join(a, a) != a || self.meet(a, a) != a {
                return Some(format!("idempotence fails at {a}"));
            }
            if !self.leq(self.bottom, a) || !self.leq(a, self.top) {
                return Some(format!("bounds fail at {a}"));
            }
            for b in 0..m {
                if self.join(a, b) != self.join(b, a) || self.meet(a, b) != self.meet(b, a) {
                    return Some(format!("commutativity fails at ({a}, {b})"));
                }
                if self.join(a, self.meet(a, b)) != a || self.meet(a, self.join(a, b)) != a {
                    return Some(format!("absorption fails at ({a}, {b})"));
                }
                for c in 0..m {
                    if self.join(self.join(a, b), c) != self.join(a, self.join(b, c))
                        || self.meet(self.meet(a, b), c) != self.meet(a, self.meet(b, c))
                    {
                        return Some(format!("associativity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        None
    }

    /// First triple breaking `a∧(b∨c) = (a∧b)∨(a∧c)`.
    pub fn distributivity_failure(&self) -> Option<(usize, usize, usize)> {
        let m = self.size();
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if self.meet(a, self.join(b, c)) != self.join(self.meet(a, b), self.meet(a, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_failure().is_none()
    }

    pub fn complements(&self, a: usize) -> Vec<usize> {
        self.nodes()
            .filter(|&b| self.meet(a, b) == self.bottom && self.join(a, b) == self.top)
            .collect()
    }

    /// Distributive and every node has a complement (which is then unique).
    pub fn is_boolean(&self) -> bool {
        self.is_distributive() && self.nodes().all(|a| self.complements(a).len() == 1)
    }

    /// Pseudocomplement `a*`: the largest `b` with `a∧b = ⊥`.
    pub fn pseudocomplement(&self, a: usize) -> Option<usize> {
        let cands: Vec<usize> = self.nodes().filter(|&b| self.meet(a, b) == self.bottom).collect();
        cands.iter().copied().find(|&c| cands.iter().all(|&d| self.leq(d, c)))
    }

    /// Nodes `a` with `a∧b = ⊥ ⇒ b = ⊥`.
    pub fn dense_nodes(&self) -> Vec<usize> {
        self.nodes()
            .filter(|&a| self.nodes().all(|b| self.meet(a, b) != self.bottom || b == self.bottom))
            .collect()
    }

    /// Hasse diagram edges `(lower, upper)`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in self.nodes() {
            for b in self.nodes() {
                if a != b
                    && self.leq(a, b)
                    && !self
                        .nodes()
                        .any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b))
                {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Lattice filters as node sets: non-empty up-sets closed under meet.
    /// Exhaustive over node subsets for small views, otherwise the principal
    /// ones (which is every filter of a finite lattice).
    pub fn lattice_filters(&self) -> Vec<Subset> {
        let m = self.size();
        if m <= 16 {
            Subset::all(m).filter(|&s| self.is_lattice_filter(s)).collect()
        } else {
            let mut out: Vec<Subset> = self.nodes().map(|g| self.up_set(g)).collect();
            out.sort();
            out.dedup();
            out
        }
    }

    /// Nodes above `a`.
    pub fn up_set(&self, a: usize) -> Subset {
        self.nodes().filter(|&b| self.leq(a, b)).collect()
    }

    pub fn is_lattice_filter(&self, s: Subset) -> bool {
        if s.is_empty() {
            return false;
        }
        s.iter()
            .all(|a| self.up_set(a).is_subset_of(s) && s.iter().all(|b| s.contains(self.meet(a, b))))
    }

    /// Quotient by a congruence; checks the partition is compatible.
    pub fn quotient(&self, cong: &Congruence, name: impl Into<String>) -> Result<LatticeView, LatticeError> {
        let name = name.into();
        let k = cong.classes.len();
        let mut join = vec![usize::MAX; k * k];
        let mut meet = vec![usize::MAX; k * k];
        for a in self.nodes() {
            for b in self.nodes() {
                let (ca, cb) = (cong.class_of[a], cong.class_of[b]);
                for (table, op, v) in [
                    (&mut join, "join", cong.class_of[self.join(a, b)]),
                    (&mut meet, "meet", cong.class_of[self.meet(a, b)]),
                ] {
                    let slot = &mut table[ca * k + cb];
                    if *slot == usize::MAX {
                        *slot = v;
                    } else if *slot != v {
                        return Err(LatticeError::Incompatible {
                            view: self.name.clone(),
                            op,
                            a,
                            b,
                        });
                    }
                }
            }
        }
        let labels = cong
            .classes
            .iter()
            .map(|c| {
                let parts: Vec<&str> = c.iter().map(|&a| self.label(a)).collect();
                format!("[{}]", parts.join(" "))
            })
            .collect();
        LatticeView::from_tables(name, labels, join, meet)
    }
}

/// A partition of a view's nodes, classes in order of first member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Congruence {
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
}

impl Congruence {
    /// Kernel of a map given by its images: nodes with equal images share a class.
    pub fn kernel<K: PartialEq>(images: &[K]) -> Self {
        let mut class_of = Vec::with_capacity(images.len());
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut reps: Vec<usize> = Vec::new();
        for (a, img) in images.iter().enumerate() {
            match reps.iter().position(|&r| images[r] == *img) {
                Some(c) => {
                    class_of.push(c);
                    classes[c].push(a);
                }
                None => {
                    class_of.push(classes.len());
                    reps.push(a);
                    classes.push(vec![a]);
                }
            }
        }
        Congruence { class_of, classes }
    }

    pub fn class_containing(&self, a: usize) -> &[usize] {
        &self.classes[self.class_of[a]]
    }

    pub fn is_discrete(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }

    /// Whether the partition respects both operations of `view`.
    pub fn is_compatible(&self, view: &LatticeView) -> bool {
        view.quotient(self, "check").is_ok()
    }
}

/// How a map between two views interacts with their operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Structure {
    LatticeHom,
    DualLatticeHom,
}

/// First pair `(a, b)` at which `images` fails to be a (dual) homomorphism.
pub fn hom_failure(dom: &LatticeView, cod: &LatticeView, images: &[usize], kind: Structure) -> Option<(usize, usize)> {
    for a in dom.nodes() {
        for b in dom.nodes() {
            let (fa, fb) = (images[a], images[b]);
            let (j, m) = (images[dom.join(a, b)], images[dom.meet(a, b)]);
            let ok = match kind {
                Structure::LatticeHom => j == cod.join(fa, fb) && m == cod.meet(fa, fb),
                Structure::DualLatticeHom => j == cod.meet(fa, fb) && m == cod.join(fa, fb),
            };
            if !ok {
                return Some((a, b));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m3() -> LatticeView {
        // bottom ∅, atoms {p} {q} {r}, top {p,q,r}
        let sets = [0b000, 0b001, 0b010, 0b100, 0b111].map(Subset::from_bits);
        let labels = ["⊥", "p", "q", "r", "⊤"].map(String::from).to_vec();
        LatticeView::from_set_family("M3", &sets, labels).unwrap()
    }

    fn chain(m: usize) -> LatticeView {
        let sets: Vec<Subset> = (0..m).map(Subset::full).collect();
        LatticeView::from_set_family("chain", &sets, (0..m).map(|i| i.to_string()).collect()).unwrap()
    }

    #[test]
    fn m3_is_a_lattice_but_not_distributive() {
        let v = m3();
        assert_eq!(v.size(), 5);
        assert!(v.distributivity_failure().is_some());
        assert!(!v.is_boolean());
        assert_eq!(v.covers().len(), 6);
    }

    #[test]
    fn chains_are_distributive() {
        let v = chain(4);
        assert!(v.is_distributive());
        assert!(!v.is_boolean());
        assert!(chain(2).is_boolean());
    }

    #[test]
    fn family_without_meets_is_rejected() {
        let sets = [0b011, 0b110, 0b111].map(Subset::from_bits);
        let err = LatticeView::from_set_family("bad", &sets, vec!["a".into(), "b".into(), "c".into()]);
        assert!(err.is_err());
    }

    #[test]
    fn quotient_of_four_chain() {
        let v = chain(4);
        let cong = Congruence::kernel(&[0, 0, 1, 1]);
        let q = v.quotient(&cong, "q").unwrap();
        assert_eq!(q.size(), 2);
        assert!(q.is_boolean());
        // {0},{1,2},{3} on a 4-chain is a congruence; {0,2},{1},{3} is not
        assert!(Congruence::kernel(&[0, 1, 1, 2]).is_compatible(&v));
        assert!(!Congruence::kernel(&[0, 1, 0, 2]).is_compatible(&v));
    }

    #[test]
    fn lattice_filters_of_chain_are_up_sets() {
        let v = chain(3);
        assert_eq!(v.lattice_filters().len(), 3);
    }

    #[test]
    fn dense_nodes_and_pseudocomplements() {
        let v = m3();
        assert_eq!(v.dense_nodes(), vec![4]);
        assert_eq!(v.pseudocomplement(1), None);
        let c = chain(3);
        assert_eq!(c.pseudocomplement(1), Some(0));
        assert_eq!(c.dense_nodes(), vec![1, 2]);
    }
}

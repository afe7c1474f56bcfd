//! Exhaustive generation of small residuated lattices up to isomorphism, and
//! predicate-driven mining over the result.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Algebra, OpTable};
use crate::analysis::Analysis;
use crate::classify::{classify, ClassificationResult, PREDICATE_NAMES};
use crate::error::{CoreError, Result};
use crate::samples::chain_names;
use crate::verify::{all_passed, verify_suite, TheoremReport};

pub const MIN_SIZE: usize = 2;
pub const MAX_SIZE: usize = 7;
/// Largest size the unpruned oracle search accepts.
pub const BRUTE_FORCE_MAX: usize = 5;

fn check_size(n: usize) -> Result<()> {
    if !(MIN_SIZE..=MAX_SIZE).contains(&n) {
        return Err(CoreError::Precondition(format!(
            "size {n} is outside the supported range {MIN_SIZE}..={MAX_SIZE}"
        )));
    }
    Ok(())
}

/// Isomorphism-invariant encoding; equal keys mean isomorphic structures.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalKey(pub Vec<u8>);

/// A bounded lattice labelled so that `0` is the bottom, `n-1` the top, and
/// `x ≤ y` implies `x ≤ y` as indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSkeleton {
    n: usize,
    leq: Vec<bool>,
    join: Vec<usize>,
    meet: Vec<usize>,
    names: Vec<String>,
}

/// Bijections `pos → element` listing the elements in an order compatible
/// with `leq`.
fn linear_extensions(n: usize, leq: &dyn Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    fn go(
        n: usize,
        leq: &dyn Fn(usize, usize) -> bool,
        placed: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        if placed.len() == n {
            out.push(placed.clone());
            return;
        }
        for x in 0..n {
            if !used[x] && (0..n).all(|y| y == x || !leq(y, x) || used[y]) {
                used[x] = true;
                placed.push(x);
                go(n, leq, placed, used, out);
                placed.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, leq, &mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

fn order_bits(n: usize, leq: &dyn Fn(usize, usize) -> bool, perm: &[usize]) -> Vec<u8> {
    let mut bits = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            bits.push(leq(perm[i], perm[j]) as u8);
        }
    }
    bits
}

impl LatticeSkeleton {
    /// Builds the skeleton for an order already labelled as described on the
    /// type; `None` when the order is not a lattice.
    pub fn from_leq(n: usize, leq: Vec<bool>, names: Vec<String>) -> Option<LatticeSkeleton> {
        let le = |x: usize, y: usize| leq[x * n + y];
        let bound = |cands: Vec<usize>, upper: bool| {
            cands
                .iter()
                .copied()
                .find(|&c| cands.iter().all(|&d| if upper { le(c, d) } else { le(d, c) }))
        };
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                join[x * n + y] = bound((0..n).filter(|&u| le(x, u) && le(y, u)).collect(), true)?;
                meet[x * n + y] = bound((0..n).filter(|&u| le(u, x) && le(u, y)).collect(), false)?;
            }
        }
        Some(LatticeSkeleton {
            n,
            leq,
            join,
            meet,
            names,
        })
    }

    /// The lattice reduct of an algebra, relabelled along a linear extension
    /// (the least one in index order); element names are kept.
    pub fn from_algebra(alg: &Algebra) -> LatticeSkeleton {
        let n = alg.size();
        let mut order = Vec::with_capacity(n);
        let mut used = vec![false; n];
        while order.len() < n {
            let x = (0..n)
                .find(|&x| !used[x] && (0..n).all(|y| y == x || !alg.leq(y, x) || used[y]))
                .expect("finite orders have minimal elements");
            used[x] = true;
            order.push(x);
        }
        let leq = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| alg.leq(order[i], order[j]))
            .collect();
        let names = order.iter().map(|&x| alg.name(x).to_string()).collect();
        LatticeSkeleton::from_leq(n, leq, names).expect("lattice reduct")
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.n + y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.n + y]
    }

    /// Canonical key of the order alone.
    pub fn key(&self) -> CanonicalKey {
        let le = |x, y| self.leq(x, y);
        let best = linear_extensions(self.n, &le)
            .iter()
            .map(|p| order_bits(self.n, &le, p))
            .min()
            .expect("at least one linear extension");
        CanonicalKey(best)
    }

    /// The isomorphic skeleton whose labelling realises [`Self::key`], with
    /// standard names `0, a, b, ..., 1`.
    pub fn canonical(&self) -> LatticeSkeleton {
        let le = |x, y| self.leq(x, y);
        let perm = linear_extensions(self.n, &le)
            .into_iter()
            .min_by_key(|p| order_bits(self.n, &le, p))
            .expect("at least one linear extension");
        let n = self.n;
        let leq = (0..n * n).map(|k| self.leq(perm[k / n], perm[k % n])).collect();
        LatticeSkeleton::from_leq(n, leq, chain_names(n)).expect("relabelled lattice")
    }

    /// Cover pairs `(lower, upper)` by name.
    pub fn covers(&self) -> Vec<(String, String)> {
        let n = self.n;
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y && self.leq(x, y) && !(0..n).any(|z| z != x && z != y && self.leq(x, z) && self.leq(z, y)) {
                    out.push((self.names[x].clone(), self.names[y].clone()));
                }
            }
        }
        out
    }

    /// Hasse diagram as `lower<upper` pairs, for reports.
    pub fn describe(&self) -> String {
        let parts: Vec<String> = self.covers().iter().map(|(a, b)| format!("{a}<{b}")).collect();
        parts.join(" ")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LatticeStrategy {
    /// Every relation on the inner elements compatible with index order.
    OrderScan,
    /// Each lattice of size `n-1` extended by a new atom below an up-set.
    AtomExtension,
}

/// All bounded lattices of size `n` up to isomorphism, canonically labelled
/// and sorted by key.
pub fn enumerate_lattices(n: usize, strategy: LatticeStrategy) -> Result<Vec<LatticeSkeleton>> {
    check_size(n)?;
    let found = match strategy {
        LatticeStrategy::OrderScan => order_scan(n),
        LatticeStrategy::AtomExtension => atom_extension(n),
    };
    let mut by_key: BTreeMap<CanonicalKey, LatticeSkeleton> = BTreeMap::new();
    for s in found {
        by_key.entry(s.key()).or_insert_with(|| s.canonical());
    }
    Ok(by_key.into_values().collect())
}

fn order_scan(n: usize) -> Vec<LatticeSkeleton> {
    let inner_pairs: Vec<(usize, usize)> = (1..n - 1).flat_map(|i| (i + 1..n - 1).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << inner_pairs.len()) {
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
            leq[x] = true;
            leq[x * n + n - 1] = true;
        }
        for (k, &(i, j)) in inner_pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                leq[i * n + j] = true;
            }
        }
        let transitive =
            (0..n).all(|x| (0..n).all(|y| !leq[x * n + y] || (0..n).all(|z| !leq[y * n + z] || leq[x * n + z])));
        if transitive {
            if let Some(s) = LatticeSkeleton::from_leq(n, leq, chain_names(n)) {
                out.push(s);
            }
        }
    }
    out
}

fn atom_extension(n: usize) -> Vec<LatticeSkeleton> {
    let mut level = vec![LatticeSkeleton::from_leq(2, vec![true, true, false, true], chain_names(2)).expect("2-chain")];
    for m in 2..n {
        let mut next = Vec::new();
        for l in &level {
            // up-sets of L∖{0}: non-empty subsets of 1..m closed upwards
            for mask in 1u64..(1u64 << (m - 1)) {
                let u = |x: usize| x >= 1 && mask >> (x - 1) & 1 == 1;
                if !(1..m).all(|x| !u(x) || (0..m).all(|y| !l.leq(x, y) || u(y))) {
                    continue;
                }
                // new atom at index 1; old x ≥ 1 moves to x + 1
                let k = m + 1;
                let old = |i: usize| {
                    if i == 0 {
                        Some(0)
                    } else if i == 1 {
                        None
                    } else {
                        Some(i - 1)
                    }
                };
                let mut leq = vec![false; k * k];
                for i in 0..k {
                    for j in 0..k {
                        leq[i * k + j] = match (old(i), old(j)) {
                            (Some(a), Some(b)) => l.leq(a, b),
                            (None, None) => true,
                            (None, Some(b)) => u(b),
                            (Some(a), None) => a == 0,
                        };
                    }
                }
                if let Some(s) = LatticeSkeleton::from_leq(k, leq, chain_names(k)) {
                    next.push(s);
                }
            }
        }
        let mut by_key: BTreeMap<CanonicalKey, LatticeSkeleton> = BTreeMap::new();
        for s in next {
            by_key.entry(s.key()).or_insert_with(|| s.canonical());
        }
        level = by_key.into_values().collect();
    }
    level
}

/// Canonical key of an algebra: over all labellings along linear extensions
/// of its order, the least encoding of the order followed by the product.
pub fn canonical_form(alg: &Algebra) -> CanonicalKey {
    let n = alg.size();
    let le = |x, y| alg.leq(x, y);
    let best = linear_extensions(n, &le)
        .iter()
        .map(|p| {
            let mut pos = vec![0; n];
            for (i, &x) in p.iter().enumerate() {
                pos[x] = i;
            }
            let mut code = order_bits(n, &le, p);
            for i in 0..n {
                for j in 0..n {
                    code.push(pos[alg.prod(p[i], p[j])] as u8);
                }
            }
            code
        })
        .min()
        .expect("at least one linear extension");
    CanonicalKey(best)
}

/// Counters of one search. `found = emitted + isomorphic_rejected`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub candidates: u64,
    pub pruned: u64,
    pub found: u64,
    pub emitted: u64,
    pub isomorphic_rejected: u64,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.candidates += other.candidates;
        self.pruned += other.pruned;
        self.found += other.found;
        self.emitted += other.emitted;
        self.isomorphic_rejected += other.isomorphic_rejected;
    }
}

/// Residuated lattices on one skeleton.
#[derive(Clone, Debug)]
pub struct SearchResult {
    pub skeleton: LatticeSkeleton,
    pub models: Vec<Algebra>,
    pub keys: Vec<CanonicalKey>,
    pub stats: SearchStats,
}

const UNSET: usize = usize::MAX;

struct Search<'a> {
    s: &'a LatticeSkeleton,
    cells: Vec<(usize, usize)>,
}

impl Search<'_> {
    fn new(s: &LatticeSkeleton) -> Search<'_> {
        let n = s.n;
        let cells = (1..n - 1).flat_map(|x| (x..n - 1).map(move |y| (x, y))).collect();
        Search { s, cells }
    }

    fn initial_table(&self) -> Vec<usize> {
        let n = self.s.n;
        let mut t = vec![UNSET; n * n];
        for x in 0..n {
            t[x] = 0;
            t[x * n] = 0;
            t[(n - 1) * n + x] = x;
            t[x * n + n - 1] = x;
        }
        t
    }

    fn candidates(&self, cell: usize) -> Vec<usize> {
        let (x, y) = self.cells[cell];
        let m = self.s.meet(x, y);
        (0..self.s.n).filter(|&v| self.s.leq(v, m)).collect()
    }

    /// Checks the constraints that involve the cell `(x, y)` just set.
    fn consistent(&self, t: &[usize], x: usize, y: usize) -> bool {
        let s = self.s;
        let n = s.n;
        let get = |a: usize, b: usize| t[a * n + b];
        for (a, b) in [(x, y), (y, x)] {
            let v = get(a, b);
            for c in 0..n {
                let w = get(c, b);
                if w != UNSET && ((s.leq(a, c) && !s.leq(v, w)) || (s.leq(c, a) && !s.leq(w, v))) {
                    return false;
                }
            }
            for b2 in 0..n {
                for c in 0..n {
                    let (p, q, r) = (get(a, b2), get(a, c), get(a, s.join(b2, c)));
                    if p != UNSET && q != UNSET && r != UNSET && r != s.join(p, q) {
                        return false;
                    }
                }
            }
        }
        for p in 0..n {
            for q in 0..n {
                let pq = get(p, q);
                if pq == UNSET {
                    continue;
                }
                for r in 0..n {
                    let (qr, left) = (get(q, r), get(pq, r));
                    if qr == UNSET || left == UNSET {
                        continue;
                    }
                    let right = get(p, qr);
                    if right != UNSET && left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn set(&self, t: &mut [usize], cell: usize, v: usize) {
        let n = self.s.n;
        let (x, y) = self.cells[cell];
        t[x * n + y] = v;
        t[y * n + x] = v;
    }

    fn clear(&self, t: &mut [usize], cell: usize) {
        self.set(t, cell, UNSET);
    }

    fn finish(&self, t: &[usize]) -> Option<Algebra> {
        let n = self.s.n;
        let prod = OpTable::new(n, t.to_vec());
        Algebra::from_order_and_prod(self.s.names.clone(), |x, y| self.s.leq(x, y), prod).ok()
    }

    fn dfs(&self, t: &mut Vec<usize>, cell: usize, stop: usize, stats: &mut SearchStats, out: &mut Vec<Vec<usize>>) {
        if cell == stop {
            out.push(t.clone());
            return;
        }
        let (x, y) = self.cells[cell];
        for v in self.candidates(cell) {
            stats.candidates += 1;
            self.set(t, cell, v);
            if self.consistent(t, x, y) {
                self.dfs(t, cell + 1, stop, stats, out);
            } else {
                stats.pruned += 1;
            }
        }
        self.clear(t, cell);
    }
}

/// Worker pool with `jobs` threads (at least one).
fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CoreError::internal("thread pool", e.to_string()))
}

/// Every residuated lattice on `skel` up to isomorphism, searched with
/// `jobs` workers. Output does not depend on `jobs`.
pub fn enumerate_residuated(skel: &LatticeSkeleton, jobs: usize) -> Result<SearchResult> {
    let started = Instant::now();
    let search = Search::new(skel);
    let split = search.cells.iter().take_while(|&&(x, _)| x <= 2).count();
    let mut stats = SearchStats::default();
    let mut prefixes = Vec::new();
    search.dfs(&mut search.initial_table(), 0, split, &mut stats, &mut prefixes);

    let total = search.cells.len();
    let parts: Vec<(SearchStats, Vec<Algebra>)> = pool(jobs)?.install(|| {
        prefixes
            .into_par_iter()
            .map(|mut t| {
                let mut st = SearchStats::default();
                let mut leaves = Vec::new();
                search.dfs(&mut t, split, total, &mut st, &mut leaves);
                let mut models = Vec::new();
                for leaf in leaves {
                    match search.finish(&leaf) {
                        Some(alg) => models.push(alg),
                        None => st.pruned += 1,
                    }
                }
                (st, models)
            })
            .collect()
    });

    let mut by_key: BTreeMap<CanonicalKey, Algebra> = BTreeMap::new();
    for (st, models) in parts {
        stats.absorb(&st);
        for alg in models {
            stats.found += 1;
            match by_key.entry(canonical_form(&alg)) {
                Entry::Occupied(_) => stats.isomorphic_rejected += 1,
                Entry::Vacant(slot) => {
                    slot.insert(alg);
                }
            }
        }
    }
    stats.emitted = by_key.len() as u64;
    stats.wall_time = started.elapsed();
    let (keys, models) = by_key.into_iter().unzip();
    Ok(SearchResult {
        skeleton: skel.clone(),
        models,
        keys,
        stats,
    })
}

/// Oracle: every symmetric table with the forced border and entries below
/// the meet, validated in full, without pruning. Sizes up to
/// [`BRUTE_FORCE_MAX`].
pub fn brute_force_residuated(skel: &LatticeSkeleton) -> Result<Vec<Algebra>> {
    if skel.n > BRUTE_FORCE_MAX {
        return Err(CoreError::Precondition(format!(
            "brute force is limited to {BRUTE_FORCE_MAX} elements"
        )));
    }
    let search = Search::new(skel);
    let choices: Vec<Vec<usize>> = (0..search.cells.len()).map(|c| search.candidates(c)).collect();
    let mut t = search.initial_table();
    let mut idx = vec![0usize; choices.len()];
    let mut by_key: BTreeMap<CanonicalKey, Algebra> = BTreeMap::new();
    loop {
        for (c, &i) in idx.iter().enumerate() {
            search.set(&mut t, c, choices[c][i]);
        }
        if let Some(alg) = search.finish(&t) {
            by_key.entry(canonical_form(&alg)).or_insert(alg);
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(by_key.into_values().collect());
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// All residuated lattices of size `n`, skeleton by skeleton.
pub fn catalog(n: usize, jobs: usize) -> Result<Vec<SearchResult>> {
    enumerate_lattices(n, LatticeStrategy::OrderScan)?
        .iter()
        .map(|s| enumerate_residuated(s, jobs))
        .collect()
}

/// Boolean expressions over the classification predicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Const(bool),
    Var(String),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Not,
    And,
    Or,
    Open,
    Close,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        i += 1;
        let tok = match c {
            c if c.is_whitespace() => continue,
            '¬' | '!' | '~' => Tok::Not,
            '∧' => Tok::And,
            '∨' => Tok::Or,
            '&' | '|' => {
                if i < chars.len() && chars[i].1 == c {
                    i += 1;
                }
                if c == '&' {
                    Tok::And
                } else {
                    Tok::Or
                }
            }
            '(' => Tok::Open,
            ')' => Tok::Close,
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut word = c.to_string();
                while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                    word.push(chars[i].1);
                    i += 1;
                }
                match word.as_str() {
                    "not" => Tok::Not,
                    "and" => Tok::And,
                    "or" => Tok::Or,
                    _ => Tok::Ident(word),
                }
            }
            other => {
                return Err(CoreError::Precondition(format!(
                    "predicate: unexpected character {other:?} at position {}",
                    pos + 1
                )))
            }
        };
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.len, |(p, _)| *p) + 1
    }

    fn fail<T>(&self, what: &str) -> Result<T> {
        Err(CoreError::Precondition(format!(
            "predicate: {what} at position {}",
            self.pos()
        )))
    }

    fn or(&mut self) -> Result<Expr> {
        let mut left = self.and()?;
        while self.peek() == Some(&Tok::Or) {
            self.at += 1;
            left = Expr::Or(Box::new(left), Box::new(self.and()?));
        }
        Ok(left)
    }

    fn and(&mut self) -> Result<Expr> {
        let mut left = self.unary()?;
        while self.peek() == Some(&Tok::And) {
            self.at += 1;
            left = Expr::And(Box::new(left), Box::new(self.unary()?));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Not) => {
                self.at += 1;
                Ok(Expr::Not(Box::new(self.unary()?)))
            }
            Some(Tok::Open) => {
                self.at += 1;
                let e = self.or()?;
                if self.peek() != Some(&Tok::Close) {
                    return self.fail("expected ')'");
                }
                self.at += 1;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                let e = match name.as_str() {
                    "true" => Expr::Const(true),
                    "false" => Expr::Const(false),
                    _ if PREDICATE_NAMES.contains(&name.as_str()) => Expr::Var(name),
                    _ => {
                        return self.fail(&format!(
                            "unknown predicate {name:?} (known: {}, true, false)",
                            PREDICATE_NAMES.join(", ")
                        ))
                    }
                };
                self.at += 1;
                Ok(e)
            }
            Some(_) => self.fail("expected a predicate, '¬' or '('"),
            None => self.fail("unexpected end of expression"),
        }
    }
}

impl Expr {
    /// Identifiers, `¬`/`!`/`not`, `∧`/`&`/`and`, `∨`/`|`/`or`, parentheses;
    /// `¬` binds tightest, then `∧`, then `∨`.
    pub fn parse(src: &str) -> Result<Expr> {
        let mut p = Parser {
            toks: tokenize(src)?,
            at: 0,
            len: src.len(),
        };
        let e = p.or()?;
        if p.at != p.toks.len() {
            return p.fail("unexpected trailing input");
        }
        Ok(e)
    }

    pub fn eval(&self, c: &ClassificationResult) -> bool {
        match self {
            Expr::Const(b) => *b,
            Expr::Var(name) => c.get(name).expect("validated at parse time"),
            Expr::Not(e) => !e.eval(c),
            Expr::And(a, b) => a.eval(c) && b.eval(c),
            Expr::Or(a, b) => a.eval(c) || b.eval(c),
        }
    }
}

/// One algebra that satisfied a mining predicate.
#[derive(Clone, Debug)]
pub struct Hit {
    pub algebra: Algebra,
    pub classification: ClassificationResult,
    pub failures: Vec<TheoremReport>,
}

/// Runs classification and the theorem suite on each algebra and keeps the
/// ones satisfying `expr`.
pub fn mine<'a>(expr: &Expr, algebras: impl IntoIterator<Item = &'a Algebra>) -> Result<Vec<Hit>> {
    let mut out = Vec::new();
    for alg in algebras {
        let an = Analysis::compute(alg.clone())?;
        let classification = classify(&an)?;
        let reports = verify_suite(&an)?;
        if expr.eval(&classification) {
            let failures = if all_passed(&reports) {
                Vec::new()
            } else {
                reports.into_iter().filter(|r| !r.passed()).collect()
            };
            out.push(Hit {
                algebra: alg.clone(),
                classification,
                failures,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn lattice_counts() {
        for (n, count) in [(2, 1), (3, 1), (4, 2), (5, 5), (6, 15)] {
            let a = enumerate_lattices(n, LatticeStrategy::OrderScan).unwrap();
            let b = enumerate_lattices(n, LatticeStrategy::AtomExtension).unwrap();
            assert_eq!(a.len(), count, "n={n}");
            assert_eq!(a, b, "n={n}");
        }
        assert!(enumerate_lattices(1, LatticeStrategy::OrderScan).is_err());
        assert!(enumerate_lattices(8, LatticeStrategy::OrderScan).is_err());
    }

    #[test]
    fn small_chains() {
        let two = &enumerate_lattices(2, LatticeStrategy::OrderScan).unwrap()[0];
        assert_eq!(enumerate_residuated(two, 1).unwrap().models.len(), 1);
        let three = &enumerate_lattices(3, LatticeStrategy::OrderScan).unwrap()[0];
        let r = enumerate_residuated(three, 1).unwrap();
        assert_eq!(r.models.len(), 2);
        assert_eq!(brute_force_residuated(three).unwrap().len(), 2);
        assert_eq!(r.stats.found, r.stats.emitted + r.stats.isomorphic_rejected);
    }

    #[test]
    fn pruned_search_matches_brute_force() {
        for n in 2..=5 {
            for skel in enumerate_lattices(n, LatticeStrategy::OrderScan).unwrap() {
                let fast: Vec<CanonicalKey> = enumerate_residuated(&skel, 2).unwrap().keys;
                let mut slow: Vec<CanonicalKey> = brute_force_residuated(&skel)
                    .unwrap()
                    .iter()
                    .map(canonical_form)
                    .collect();
                slow.sort();
                assert_eq!(fast, slow, "{}", skel.describe());
            }
        }
    }

    #[test]
    fn a7_is_found_on_its_skeleton() {
        let a7 = samples::a7();
        let skel = LatticeSkeleton::from_algebra(&a7);
        let r = enumerate_residuated(&skel, 4).unwrap();
        assert!(r.models.iter().any(|m| m.tables().prod == a7.tables().prod));
        assert!(r.keys.contains(&canonical_form(&a7)));
    }

    #[test]
    fn relabelling_keeps_the_key() {
        let a7 = samples::a7();
        // swap b and c, d and e: an order isomorphism onto a relabelled copy
        let perm = [0, 1, 3, 2, 5, 4, 6];
        let n = a7.size();
        let names: Vec<String> = (0..n).map(|i| a7.name(perm[i]).to_string()).collect();
        let inv = |x: usize| perm.iter().position(|&p| p == x).unwrap();
        let prod = OpTable::from_fn(n, |x, y| inv(a7.prod(perm[x], perm[y])));
        let copy = Algebra::from_order_and_prod(names, |x, y| a7.leq(perm[x], perm[y]), prod).unwrap();
        assert_ne!(copy.tables().prod, a7.tables().prod);
        assert_eq!(canonical_form(&copy), canonical_form(&a7));
    }

    #[test]
    fn worker_counts_agree() {
        for skel in enumerate_lattices(5, LatticeStrategy::OrderScan).unwrap() {
            let one = enumerate_residuated(&skel, 1).unwrap();
            let many = enumerate_residuated(&skel, 8).unwrap();
            assert_eq!(one.keys, many.keys);
            assert_eq!(
                one.stats,
                SearchStats {
                    wall_time: one.stats.wall_time,
                    ..many.stats.clone()
                }
            );
        }
    }

    #[test]
    fn predicate_grammar() {
        let e = Expr::parse("quasicomplemented ∧ ¬weakly_disjunctive").unwrap();
        let an = Analysis::compute(samples::a7()).unwrap();
        let c = classify(&an).unwrap();
        assert!(e.eval(&c));
        assert!(Expr::parse("!(disjunctive | pf_boolean) && true").unwrap().eval(&c));
        assert!(!Expr::parse("false").unwrap().eval(&c));
        assert!(Expr::parse("quasi").is_err());
        assert!(Expr::parse("(disjunctive").is_err());
        assert!(Expr::parse("disjunctive ∧").is_err());
        assert!(Expr::parse("a $ b").is_err());
    }

    #[test]
    fn mining_a7_skeleton() {
        let skel = LatticeSkeleton::from_algebra(&samples::a7());
        let models = enumerate_residuated(&skel, 4).unwrap().models;
        let hits = mine(&Expr::parse("¬weakly_disjunctive").unwrap(), &models).unwrap();
        let a7_key = canonical_form(&samples::a7());
        assert!(hits.iter().any(|h| canonical_form(&h.algebra) == a7_key));
        assert!(hits.iter().all(|h| h.failures.is_empty()));
        assert!(mine(&Expr::parse("false").unwrap(), &models).unwrap().is_empty());
    }
}

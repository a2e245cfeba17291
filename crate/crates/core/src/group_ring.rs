//! The integral group ring Λ = Z[π] of a right-angled Artin group.
//!
//! Group elements are stored as normal-form words of syllables `v^e`. A word
//! is normalized in two passes:
//!
//! 1. *Reduction*: two syllables on the same vertex merge whenever every
//!    syllable between them commutes with that vertex; zero exponents vanish.
//!    Reduced words of a RAAG are unique up to swapping adjacent commuting
//!    syllables.
//! 2. *Ordering*: among all reorderings by commuting swaps, pick the
//!    lexicographically least one (vertex order = canonical graph order) by
//!    repeatedly emitting the smallest syllable that commutes with everything
//!    still in front of it.
//!
//! Elements of Λ are finite maps from normal-form words to nonzero
//! arbitrary-precision coefficients.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::graph::SimplicialGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupRingError {
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("elements live over different graphs")]
    AmbientMismatch,
    #[error("cannot parse group ring element `{text}`: {reason}")]
    Parse { text: String, reason: String },
}

/// One syllable `v^e` with `e ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub vertex: usize,
    pub exponent: i64,
}

impl Syllable {
    fn key(&self) -> (usize, bool, u64) {
        (self.vertex, self.exponent < 0, self.exponent.unsigned_abs())
    }
}

/// A group element in normal form.
///
/// Ordered shortlex: by total letter length, then syllable by syllable with
/// vertex first and positive exponents before negative ones.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RaagWord {
    syllables: Vec<Syllable>,
}

impl RaagWord {
    pub fn identity() -> Self {
        RaagWord::default()
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Word length in the standard generators.
    pub fn length(&self) -> u64 {
        self.syllables.iter().map(|s| s.exponent.unsigned_abs()).sum()
    }

    pub fn inverse(&self, g: &SimplicialGraph) -> RaagWord {
        let reversed: Vec<Syllable> =
            self.syllables.iter().rev().map(|s| Syllable { vertex: s.vertex, exponent: -s.exponent }).collect();
        RaagWord { syllables: lex_order(reversed, g) }
    }

    pub fn multiply(&self, other: &RaagWord, g: &SimplicialGraph) -> RaagWord {
        let joined: Vec<Syllable> = self.syllables.iter().chain(&other.syllables).copied().collect();
        normalize_syllables(joined, g)
    }

    pub fn render(&self, g: &SimplicialGraph) -> String {
        self.syllables
            .iter()
            .map(|s| match s.exponent {
                1 => g.name(s.vertex).to_string(),
                e => format!("{}^{}", g.name(s.vertex), e),
            })
            .collect::<Vec<_>>()
            .join("·")
    }
}

impl Ord for RaagWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length()
            .cmp(&other.length())
            .then_with(|| self.syllables.iter().map(Syllable::key).cmp(other.syllables.iter().map(Syllable::key)))
    }
}

impl PartialOrd for RaagWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Normal form of the product of the given `(vertex, exponent)` letters.
pub fn normalize(letters: &[(usize, i64)], g: &SimplicialGraph) -> Result<RaagWord, GroupRingError> {
    if let Some(&(v, _)) = letters.iter().find(|(v, _)| *v >= g.vertex_count()) {
        return Err(GroupRingError::UnknownVertex(v.to_string()));
    }
    let syllables =
        letters.iter().filter(|(_, e)| *e != 0).map(|&(vertex, exponent)| Syllable { vertex, exponent }).collect();
    Ok(normalize_syllables(syllables, g))
}

fn normalize_syllables(mut s: Vec<Syllable>, g: &SimplicialGraph) -> RaagWord {
    s.retain(|x| x.exponent != 0);
    while let Some(&(i, j)) = mergeable_pairs(&s, g).first() {
        merge(&mut s, i, j);
    }
    RaagWord { syllables: lex_order(s, g) }
}

/// Pairs `(i, j)` of same-vertex syllables with everything strictly between
/// them commuting with that vertex.
pub(crate) fn mergeable_pairs(s: &[Syllable], g: &SimplicialGraph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if s[j].vertex == s[i].vertex {
                out.push((i, j));
                break;
            }
            if !g.adjacent(s[i].vertex, s[j].vertex) {
                break;
            }
        }
    }
    out
}

pub(crate) fn merge(s: &mut Vec<Syllable>, i: usize, j: usize) {
    let moved = s.remove(j);
    s[i].exponent += moved.exponent;
    if s[i].exponent == 0 {
        s.remove(i);
    }
}

/// Lexicographically least linearization under commuting swaps.
pub(crate) fn lex_order(mut rest: Vec<Syllable>, g: &SimplicialGraph) -> Vec<Syllable> {
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        for p in 0..rest.len() {
            let free = rest[..p].iter().all(|q| q.vertex != rest[p].vertex && g.adjacent(q.vertex, rest[p].vertex));
            if free && best.is_none_or(|b| rest[p].key() < rest[b].key()) {
                best = Some(p);
            }
        }
        out.push(rest.remove(best.expect("the first syllable is always available")));
    }
    out
}

/// Λ = Z[π(Γ)]: a handle used to create elements over a fixed graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRing {
    graph: Arc<SimplicialGraph>,
}

impl GroupRing {
    pub fn new(graph: SimplicialGraph) -> Self {
        GroupRing { graph: Arc::new(graph) }
    }

    pub fn graph(&self) -> &SimplicialGraph {
        &self.graph
    }

    pub fn zero(&self) -> GroupRingElement {
        GroupRingElement { graph: self.graph.clone(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> GroupRingElement {
        self.integer(1)
    }

    pub fn integer(&self, c: impl Into<BigInt>) -> GroupRingElement {
        self.monomial(c, RaagWord::identity())
    }

    pub fn monomial(&self, c: impl Into<BigInt>, w: RaagWord) -> GroupRingElement {
        let mut e = self.zero();
        e.add_term(w, c.into());
        e
    }

    /// The group element given by a letter sequence, with coefficient 1.
    pub fn word(&self, letters: &[(usize, i64)]) -> Result<GroupRingElement, GroupRingError> {
        Ok(self.monomial(1, normalize(letters, &self.graph)?))
    }

    /// The generator of vertex `v`.
    pub fn generator(&self, v: usize) -> GroupRingElement {
        self.word(&[(v, 1)]).expect("vertex in range")
    }

    /// `g − 1` for the generator of vertex `v`.
    pub fn generator_minus_one(&self, v: usize) -> GroupRingElement {
        &self.generator(v) - &self.one()
    }

    pub fn generator_by_name(&self, name: &str) -> Result<GroupRingElement, GroupRingError> {
        let v = self.graph.index_of(name).ok_or_else(|| GroupRingError::UnknownVertex(name.to_string()))?;
        Ok(self.generator(v))
    }

    /// Parse the text rendering produced by [`GroupRingElement`]'s `Display`.
    pub fn parse(&self, text: &str) -> Result<GroupRingElement, GroupRingError> {
        parse_element(self, text)
    }
}

/// A finitely supported Z-linear combination of group elements.
#[derive(Clone)]
pub struct GroupRingElement {
    graph: Arc<SimplicialGraph>,
    terms: BTreeMap<RaagWord, BigInt>,
}

impl PartialEq for GroupRingElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_ambient(other) && self.terms == other.terms
    }
}

impl Eq for GroupRingElement {}

impl GroupRingElement {
    pub fn ring(&self) -> GroupRing {
        GroupRing { graph: self.graph.clone() }
    }

    pub fn graph(&self) -> &SimplicialGraph {
        &self.graph
    }

    pub fn same_ambient(&self, other: &GroupRingElement) -> bool {
        Arc::ptr_eq(&self.graph, &other.graph) || *self.graph == *other.graph
    }

    fn add_term(&mut self, w: RaagWord, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending word order.
    pub fn terms(&self) -> impl Iterator<Item = (&RaagWord, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &RaagWord) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn checked_add(&self, other: &GroupRingElement) -> Result<GroupRingElement, GroupRingError> {
        if !self.same_ambient(other) {
            return Err(GroupRingError::AmbientMismatch);
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &GroupRingElement) -> Result<GroupRingElement, GroupRingError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &GroupRingElement) -> Result<GroupRingElement, GroupRingError> {
        if !self.same_ambient(other) {
            return Err(GroupRingError::AmbientMismatch);
        }
        let mut out = GroupRingElement { graph: self.graph.clone(), terms: BTreeMap::new() };
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.multiply(v, &self.graph), a * b);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> GroupRingElement {
        let mut out = GroupRingElement { graph: self.graph.clone(), terms: BTreeMap::new() };
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    /// The involution Σ n_g g ↦ Σ n_g g⁻¹.
    pub fn involute(&self) -> GroupRingElement {
        let mut out = GroupRingElement { graph: self.graph.clone(), terms: BTreeMap::new() };
        for (w, c) in &self.terms {
            out.add_term(w.inverse(&self.graph), c.clone());
        }
        out
    }

    /// ε₁: coefficient at the identity element.
    pub fn epsilon1(&self) -> BigInt {
        self.coefficient(&RaagWord::identity())
    }

    /// Augmentation Λ → Z: sum of all coefficients.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.involute() == *self
    }
}

pub fn multiply(x: &GroupRingElement, y: &GroupRingElement) -> Result<GroupRingElement, GroupRingError> {
    x.checked_mul(y)
}

pub fn involute(x: &GroupRingElement) -> GroupRingElement {
    x.involute()
}

pub fn epsilon1(x: &GroupRingElement) -> BigInt {
    x.epsilon1()
}

pub fn augmentation(x: &GroupRingElement) -> BigInt {
    x.augmentation()
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&GroupRingElement> for &GroupRingElement {
            type Output = GroupRingElement;
            /// Panics when the operands live over different graphs.
            fn $method(self, rhs: &GroupRingElement) -> GroupRingElement {
                self.$checked(rhs).expect("group ring elements over different graphs")
            }
        }
        impl $trait<GroupRingElement> for GroupRingElement {
            type Output = GroupRingElement;
            fn $method(self, rhs: GroupRingElement) -> GroupRingElement {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        self.scale(&-BigInt::one())
    }
}

impl Neg for GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        -&self
    }
}

impl fmt::Display for GroupRingElement {
    /// `3·a·b^-2 - c + 1`-style text; terms in ascending word order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (k, sign) {
                (0, "+") => {}
                (0, _) => write!(f, "-")?,
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.abs();
            if w.is_identity() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", w.render(&self.graph))?;
            } else {
                write!(f, "{mag}·{}", w.render(&self.graph))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Λ({self})")
    }
}

fn parse_element(ring: &GroupRing, text: &str) -> Result<GroupRingElement, GroupRingError> {
    let err = |reason: &str| GroupRingError::Parse { text: text.to_string(), reason: reason.to_string() };
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(err("empty input"));
    }
    // split into signed terms at + and -, except a `-` right after `^` (exponent sign)
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut negative = false;
    let mut sign_pending = false;
    let mut current = String::new();
    for ch in trimmed.chars() {
        let exponent_sign = current.trim_end().ends_with('^');
        if (ch == '+' || ch == '-') && !exponent_sign {
            if !current.trim().is_empty() {
                terms.push((negative, std::mem::take(&mut current)));
            } else if sign_pending || !terms.is_empty() || ch == '+' {
                return Err(err("dangling sign"));
            }
            current.clear();
            negative = ch == '-';
            sign_pending = true;
        } else {
            current.push(ch);
            if !ch.is_whitespace() {
                sign_pending = false;
            }
        }
    }
    if current.trim().is_empty() {
        return Err(err("trailing sign"));
    }
    terms.push((negative, current));

    let mut total = ring.zero();
    for (negative, term) in terms {
        let mut coefficient = BigInt::one();
        let mut letters = Vec::new();
        for factor in term.split(['·', '*']) {
            let factor = factor.trim();
            if factor.is_empty() {
                return Err(err("empty factor"));
            }
            if factor.bytes().all(|b| b.is_ascii_digit()) {
                coefficient *= factor.parse::<BigInt>().map_err(|_| err("bad coefficient"))?;
                continue;
            }
            let (name, exponent) = match factor.split_once('^') {
                Some((n, e)) => (n, e.parse::<i64>().map_err(|_| err("bad exponent"))?),
                None => (factor, 1),
            };
            let v = ring.graph.index_of(name).ok_or_else(|| GroupRingError::UnknownVertex(name.to_string()))?;
            letters.push((v, exponent));
        }
        if negative {
            coefficient = -coefficient;
        }
        let w = normalize(&letters, &ring.graph)?;
        total.add_term(w, coefficient);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn letters(w: &RaagWord) -> Vec<(usize, i64)> {
        w.syllables().iter().map(|s| (s.vertex, s.exponent)).collect()
    }

    #[test]
    fn commuting_generators_sort() {
        let g = SimplicialGraph::complete(2);
        assert_eq!(letters(&normalize(&[(1, 1), (0, 1)], &g).unwrap()), [(0, 1), (1, 1)]);
    }

    #[test]
    fn free_generators_stay_put() {
        let g = SimplicialGraph::from_edges(2, &[]);
        assert_eq!(letters(&normalize(&[(1, 1), (0, 1)], &g).unwrap()), [(1, 1), (0, 1)]);
    }

    #[test]
    fn conjugate_in_path_is_reduced() {
        let g = SimplicialGraph::path(3);
        let w = normalize(&[(0, 1), (2, 1), (0, -1)], &g).unwrap();
        assert_eq!(letters(&w), [(0, 1), (2, 1), (0, -1)]);
        // but b commutes with both, so a·b·a^-1 = b
        let w = normalize(&[(0, 1), (1, 1), (0, -1)], &g).unwrap();
        assert_eq!(letters(&w), [(1, 1)]);
    }

    #[test]
    fn merging_through_commuting_letters() {
        let g = SimplicialGraph::path(3);
        let w = normalize(&[(1, 2), (0, 1), (1, -1), (2, 3), (1, 1)], &g).unwrap();
        // b^2 a b^-1 c^3 b = a b^2 c^3
        assert_eq!(letters(&w), [(0, 1), (1, 2), (2, 3)]);
        assert!(normalize(&[(3, 1)], &g).is_err());
    }

    #[test]
    fn every_maximal_reduction_order_agrees() {
        // exhaustive: explore all merge orders on a handful of words
        let g = SimplicialGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let words: Vec<Vec<(usize, i64)>> = vec![
            vec![(1, 1), (0, 1), (1, -1), (2, 1), (1, 1), (0, -1)],
            vec![(0, 1), (1, 1), (0, -1), (2, 1), (1, -1), (2, -1), (1, 1)],
            vec![(1, 1), (1, 1), (2, 1), (1, -2), (3, 1), (2, -1)],
        ];
        for w in words {
            let start: Vec<Syllable> = w.iter().map(|&(vertex, exponent)| Syllable { vertex, exponent }).collect();
            let mut results = std::collections::BTreeSet::new();
            let mut stack = vec![start];
            while let Some(s) = stack.pop() {
                let pairs = mergeable_pairs(&s, &g);
                if pairs.is_empty() {
                    results.insert(letters(&RaagWord { syllables: lex_order(s, &g) }));
                    continue;
                }
                for (i, j) in pairs {
                    let mut next = s.clone();
                    merge(&mut next, i, j);
                    stack.push(next);
                }
            }
            assert_eq!(results.len(), 1, "{w:?} reduced to {results:?}");
        }
    }

    #[test]
    fn multiplication_examples() {
        let ring = GroupRing::new(SimplicialGraph::complete(1));
        let g = ring.generator(0);
        let one = ring.one();
        let g_inv = ring.word(&[(0, -1)]).unwrap();
        assert_eq!(&(&g - &one) * &g_inv, &one - &g_inv);

        let k2 = GroupRing::new(SimplicialGraph::complete(2));
        let (a, b) = (k2.generator_minus_one(0), k2.generator_minus_one(1));
        assert_eq!(&a * &b, &b * &a);

        let free = GroupRing::new(SimplicialGraph::from_edges(2, &[]));
        let (a, b) = (free.generator_minus_one(0), free.generator_minus_one(1));
        let defect = &(&a * &b) - &(&b * &a);
        let ab = free.word(&[(0, 1), (1, 1)]).unwrap();
        let ba = free.word(&[(1, 1), (0, 1)]).unwrap();
        assert_eq!(defect, &ab - &ba);
        assert!(!defect.is_zero());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let r1 = GroupRing::new(SimplicialGraph::complete(2));
        let r2 = GroupRing::new(SimplicialGraph::from_edges(2, &[]));
        assert_eq!(r1.one().checked_mul(&r2.one()), Err(GroupRingError::AmbientMismatch));
        assert_eq!(r1.one().checked_add(&r2.one()), Err(GroupRingError::AmbientMismatch));
        // structurally equal graphs do combine
        let r3 = GroupRing::new(SimplicialGraph::complete(2));
        assert!(r1.one().checked_mul(&r3.one()).is_ok());
    }

    #[test]
    fn involution_and_functionals() {
        let ring = GroupRing::new(SimplicialGraph::path(3));
        let g = ring.generator(0);
        let g_inv = ring.word(&[(0, -1)]).unwrap();
        assert_eq!(g.involute(), g_inv);
        let x = &ring.integer(3) + &(&ring.integer(2) * &g);
        assert_eq!(x.epsilon1(), BigInt::from(3));
        assert_eq!((&g + &g_inv).epsilon1(), BigInt::zero());
        assert_eq!((&g - &ring.one()).augmentation(), BigInt::zero());
        assert_eq!(ring.one().augmentation(), BigInt::one());
    }

    #[test]
    fn render_and_parse() {
        let g = parse_graph("vertex a\nvertex b\nvertex c\nedge a b").unwrap();
        let ring = GroupRing::new(g);
        let x = ring.parse("3·a·b^-2 + 1 - c·a").unwrap();
        let text = x.to_string();
        assert_eq!(text, "1 - c·a + 3·a·b^-2");
        assert_eq!(ring.parse(&text).unwrap(), x);
        assert_eq!(ring.parse("b*a").unwrap().to_string(), "a·b");
        assert_eq!(ring.parse("-2·c^3").unwrap().to_string(), "-2·c^3");
        assert_eq!(ring.zero().to_string(), "0");
        assert_eq!(ring.parse("a - a").unwrap(), ring.zero());
        assert!(ring.parse("a +").is_err());
        assert!(ring.parse("d").is_err());
        assert!(ring.parse("a^x").is_err());
        assert!(ring.parse("").is_err());
    }
}

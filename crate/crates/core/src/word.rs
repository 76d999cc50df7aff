//! Reduced words in the free product `H * G`.
//!
//! Every element has exactly one reduced form: a sequence of non-identity
//! letters whose sides strictly alternate. [`FreeProduct::reduce`] computes
//! it with a single left-to-right stack pass.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

use crate::group::{GroupTable, Side, SideElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("letter {side}{index} out of range: {side} has order {order}")]
    IndexOutOfRange {
        side: Side,
        index: usize,
        order: usize,
    },
    #[error("words belong to different free products")]
    MixedContexts,
    #[error("cannot parse word: {0}")]
    Parse(String),
}

/// The pair of factor groups a word is built over.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct FreeProduct {
    h: GroupTable,
    g: GroupTable,
}

/// A non-identity element of one factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub side: Side,
    pub index: usize,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.side.prefix(), self.index)
    }
}

/// The seven shapes of a nontrivial reduced word, plus the empty word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SyllableType {
    Empty,
    /// `h1 g1 ... hk gk`
    Type1,
    /// `h1 g1 ... hk gk h`
    Type2,
    /// `g h1 g1 ... hk gk`
    Type3,
    /// `g h1 g1 ... hk gk h`
    Type4,
    /// `g`
    Type5,
    /// `h`
    Type6,
    /// `g h`
    Type7,
}

impl fmt::Display for SyllableType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SyllableType::Empty => "Empty",
            SyllableType::Type1 => "Type1",
            SyllableType::Type2 => "Type2",
            SyllableType::Type3 => "Type3",
            SyllableType::Type4 => "Type4",
            SyllableType::Type5 => "Type5",
            SyllableType::Type6 => "Type6",
            SyllableType::Type7 => "Type7",
        };
        f.write_str(s)
    }
}

/// An element of `H * G` in reduced form.
///
/// Equality requires the same factor groups as well as the same letters.
#[derive(Clone, Debug)]
pub struct ReducedWord {
    ctx: Arc<FreeProduct>,
    letters: Vec<Letter>,
}

impl FreeProduct {
    pub fn new(h: GroupTable, g: GroupTable) -> Arc<FreeProduct> {
        Arc::new(FreeProduct { h, g })
    }

    pub fn h(&self) -> &GroupTable {
        &self.h
    }

    pub fn g(&self) -> &GroupTable {
        &self.g
    }

    pub fn table(&self, side: Side) -> &GroupTable {
        match side {
            Side::H => &self.h,
            Side::G => &self.g,
        }
    }

    pub fn identity(self: &Arc<Self>) -> ReducedWord {
        ReducedWord {
            ctx: Arc::clone(self),
            letters: Vec::new(),
        }
    }

    /// The word consisting of a single (possibly identity) element.
    pub fn letter(self: &Arc<Self>, side: Side, index: usize) -> Result<ReducedWord, WordError> {
        self.reduce(&[SideElement::new(side, index)])
    }

    /// Reduces an arbitrary sequence of factor elements.
    ///
    /// Identity letters vanish and adjacent same-side letters are multiplied
    /// in their table; a product equal to the identity is popped.
    pub fn reduce(self: &Arc<Self>, raw: &[SideElement]) -> Result<ReducedWord, WordError> {
        for e in raw {
            let order = self.table(e.side).order();
            if e.index >= order {
                return Err(WordError::IndexOutOfRange {
                    side: e.side,
                    index: e.index,
                    order,
                });
            }
        }
        let mut stack = Vec::with_capacity(raw.len());
        for e in raw {
            self.push_letter(&mut stack, e.side, e.index);
        }
        Ok(self.wrap(stack))
    }

    /// Parses whitespace-separated `h<i>` / `g<i>` tokens; `e` is the empty word.
    pub fn parse(self: &Arc<Self>, text: &str) -> Result<ReducedWord, WordError> {
        let mut raw = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "e" {
                continue;
            }
            let side = match tok.chars().next() {
                Some('h') => Side::H,
                Some('g') => Side::G,
                _ => return Err(WordError::Parse(format!("unexpected token `{tok}`"))),
            };
            let digits = &tok[1..];
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(WordError::Parse(format!("bad letter index in `{tok}`")));
            }
            let index = digits
                .parse()
                .map_err(|_| WordError::Parse(format!("bad letter index in `{tok}`")))?;
            raw.push(SideElement::new(side, index));
        }
        self.reduce(&raw)
    }

    pub(crate) fn wrap(self: &Arc<Self>, letters: Vec<Letter>) -> ReducedWord {
        ReducedWord {
            ctx: Arc::clone(self),
            letters,
        }
    }

    fn push_letter(&self, stack: &mut Vec<Letter>, side: Side, index: usize) {
        if index == 0 {
            return;
        }
        match stack.last_mut() {
            Some(top) if top.side == side => {
                let p = self.table(side).mul(top.index, index);
                if p == 0 {
                    stack.pop();
                } else {
                    top.index = p;
                }
            }
            _ => stack.push(Letter { side, index }),
        }
    }

    fn same(self: &Arc<Self>, other: &Arc<FreeProduct>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }
}

impl ReducedWord {
    pub fn context(&self) -> &Arc<FreeProduct> {
        &self.ctx
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of letters (syllables) of the reduced form.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    pub fn same_context(&self, other: &ReducedWord) -> bool {
        self.ctx.same(&other.ctx)
    }

    fn check_context(&self, other: &ReducedWord) -> Result<(), WordError> {
        if self.same_context(other) {
            Ok(())
        } else {
            Err(WordError::MixedContexts)
        }
    }

    /// Product in `H * G`.
    pub fn mul(&self, other: &ReducedWord) -> Result<ReducedWord, WordError> {
        self.check_context(other)?;
        Ok(self.mul_same(other))
    }

    /// Product of two words already known to share a context.
    pub(crate) fn mul_same(&self, other: &ReducedWord) -> ReducedWord {
        let mut stack = Vec::with_capacity(self.len() + other.len());
        stack.extend_from_slice(&self.letters);
        for l in &other.letters {
            self.ctx.push_letter(&mut stack, l.side, l.index);
        }
        self.ctx.wrap(stack)
    }

    /// `self * middle * self^-1`.
    pub(crate) fn conjugate_same(&self, middle: &ReducedWord) -> ReducedWord {
        self.mul_same(middle).mul_same(&self.inverse())
    }

    pub fn inverse(&self) -> ReducedWord {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| Letter {
                side: l.side,
                index: self.ctx.table(l.side).inverse(l.index),
            })
            .collect();
        self.ctx.wrap(letters)
    }

    /// `self^m`; negative exponents use the inverse.
    pub fn pow(&self, m: i64) -> ReducedWord {
        let base = if m < 0 { self.inverse() } else { self.clone() };
        let mut e = m.unsigned_abs();
        let mut acc = self.ctx.identity();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_same(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_same(&sq);
            }
        }
        acc
    }

    pub fn syllable_type(&self) -> SyllableType {
        let (first, last) = match (self.first(), self.last()) {
            (Some(f), Some(l)) => (f.side, l.side),
            _ => return SyllableType::Empty,
        };
        match (self.len(), first, last) {
            (1, Side::G, _) => SyllableType::Type5,
            (1, Side::H, _) => SyllableType::Type6,
            (_, Side::H, Side::G) => SyllableType::Type1,
            (_, Side::H, Side::H) => SyllableType::Type2,
            (_, Side::G, Side::G) => SyllableType::Type3,
            (2, Side::G, Side::H) => SyllableType::Type7,
            (_, Side::G, Side::H) => SyllableType::Type4,
        }
    }

    pub fn commutes(&self, other: &ReducedWord) -> Result<bool, WordError> {
        self.check_context(other)?;
        Ok(self.mul_same(other) == other.mul_same(self))
    }
}

impl PartialEq for ReducedWord {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters && self.same_context(other)
    }
}

impl Eq for ReducedWord {}

impl Hash for ReducedWord {
    fn hash<S: Hasher>(&self, state: &mut S) {
        self.letters.hash(state);
    }
}

/// Shorter words first, then lexicographic by letters (H before G).
impl Ord for ReducedWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for ReducedWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// All reduced words with at most `max_len` letters, shortest first.
pub fn all_words(ctx: &Arc<FreeProduct>, max_len: usize) -> Vec<ReducedWord> {
    let mut out = vec![ctx.identity()];
    let mut frontier: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for side in [Side::H, Side::G] {
                if w.last().map(|l| l.side) == Some(side) {
                    continue;
                }
                for index in 1..ctx.table(side).order() {
                    let mut v = w.clone();
                    v.push(Letter { side, index });
                    next.push(v);
                }
            }
        }
        next.sort();
        out.extend(next.iter().cloned().map(|v| ctx.wrap(v)));
        frontier = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z2z3() -> Arc<FreeProduct> {
        FreeProduct::new(GroupTable::cyclic(2), GroupTable::cyclic(3))
    }

    fn w(ctx: &Arc<FreeProduct>, s: &str) -> ReducedWord {
        ctx.parse(s).unwrap()
    }

    #[test]
    fn reduction_examples() {
        let p = z2z3();
        assert!(p.reduce(&[]).unwrap().is_identity());
        assert_eq!(w(&p, "h1 g0 h1"), p.identity());
        assert_eq!(w(&p, "h1 g1 g2").to_string(), "h1");
        assert_eq!(w(&p, "g1 g1 h0 g1").to_string(), "e");
        assert_eq!(w(&p, "e").to_string(), "e");
    }

    #[test]
    fn reduction_errors() {
        let p = z2z3();
        assert_eq!(
            p.parse("h2").unwrap_err(),
            WordError::IndexOutOfRange {
                side: Side::H,
                index: 2,
                order: 2
            }
        );
        assert!(matches!(p.parse("x1"), Err(WordError::Parse(_))));
        assert!(matches!(p.parse("h"), Err(WordError::Parse(_))));
        assert!(matches!(p.parse("g-1"), Err(WordError::Parse(_))));
    }

    #[test]
    fn multiplication_examples() {
        let p = z2z3();
        let a = w(&p, "h1 g1");
        assert_eq!(p.identity().mul(&a).unwrap(), a);
        assert!(a.mul(&w(&p, "g2 h1")).unwrap().is_identity());
        assert_eq!(a.mul(&a).unwrap().to_string(), "h1 g1 h1 g1");
        assert_eq!(w(&p, "h1 g1").mul(&w(&p, "g1 h1")).unwrap().to_string(), "h1 g2 h1");
    }

    #[test]
    fn mixed_contexts_are_rejected() {
        let p = z2z3();
        let q = FreeProduct::new(GroupTable::cyclic(3), GroupTable::cyclic(2));
        assert_eq!(
            w(&p, "h1").mul(&w(&q, "h1")).unwrap_err(),
            WordError::MixedContexts
        );
        // structurally equal contexts are interchangeable
        let p2 = z2z3();
        assert!(w(&p, "h1").mul(&w(&p2, "g1")).is_ok());
    }

    #[test]
    fn inversion_and_powers() {
        let p = z2z3();
        assert!(p.identity().inverse().is_identity());
        assert_eq!(w(&p, "h1").inverse().to_string(), "h1");
        assert_eq!(w(&p, "h1 g1").inverse().to_string(), "g2 h1");
        let a = w(&p, "h1 g1");
        assert!(a.pow(0).is_identity());
        assert_eq!(a.pow(2).to_string(), "h1 g1 h1 g1");
        assert_eq!(a.pow(-2).to_string(), "g2 h1 g2 h1");
        assert!(w(&p, "h1").pow(2).is_identity());
        assert_eq!(w(&p, "g1").pow(5).to_string(), "g2");
    }

    #[test]
    fn types_and_lengths() {
        let p = z2z3();
        let cases = [
            ("e", SyllableType::Empty, 0),
            ("h1 g1", SyllableType::Type1, 2),
            ("h1 g1 h1", SyllableType::Type2, 3),
            ("g1 h1 g2", SyllableType::Type3, 3),
            ("g1 h1 g1 h1", SyllableType::Type4, 4),
            ("g1", SyllableType::Type5, 1),
            ("h1", SyllableType::Type6, 1),
            ("g1 h1", SyllableType::Type7, 2),
        ];
        for (s, t, n) in cases {
            assert_eq!(w(&p, s).syllable_type(), t, "{s}");
            assert_eq!(w(&p, s).len(), n);
        }
    }

    #[test]
    fn word_enumeration_counts() {
        let p = z2z3();
        // length n words: alternate 1 H choice and 2 G choices
        let words = all_words(&p, 4);
        let by_len: Vec<usize> = (0..=4).map(|n| words.iter().filter(|w| w.len() == n).count()).collect();
        assert_eq!(by_len, vec![1, 3, 4, 6, 8]);
    }

    /// Side pattern of a word: Type4 and Type7 only differ in length.
    fn shape(w: &ReducedWord) -> SyllableType {
        match w.syllable_type() {
            SyllableType::Type7 => SyllableType::Type4,
            t => t,
        }
    }

    #[test]
    fn commuting_words_share_shape_up_to_inversion() {
        let p = z2z3();
        let words: Vec<ReducedWord> = all_words(&p, 4).into_iter().skip(1).collect();
        let mut literal_failures = Vec::new();
        for a in &words {
            for b in &words {
                if a.commutes(b).unwrap() {
                    assert!(
                        shape(a) == shape(b) || shape(a) == shape(&b.inverse()),
                        "{a} / {b}"
                    );
                    if a.syllable_type() != b.syllable_type() {
                        literal_failures.push((a.to_string(), b.to_string()));
                    }
                }
            }
        }
        // h1 g1 commutes with its inverse g2 h1, a Type1/Type7 pair
        assert!(literal_failures.contains(&("h1 g1".into(), "g2 h1".into())));
    }

    fn raw_strategy() -> impl Strategy<Value = Vec<SideElement>> {
        prop::collection::vec(
            prop_oneof![
                (0usize..2).prop_map(|i| SideElement::new(Side::H, i)),
                (0usize..3).prop_map(|i| SideElement::new(Side::G, i)),
            ],
            0..20,
        )
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent_and_matches_concatenation(a in raw_strategy(), b in raw_strategy()) {
            let p = z2z3();
            let ra = p.reduce(&a).unwrap();
            let raw_again: Vec<SideElement> =
                ra.letters().iter().map(|l| SideElement::new(l.side, l.index)).collect();
            prop_assert_eq!(p.reduce(&raw_again).unwrap(), ra.clone());
            for pair in ra.letters().windows(2) {
                prop_assert!(pair[0].side != pair[1].side);
            }
            prop_assert!(ra.letters().iter().all(|l| l.index != 0));
            let rb = p.reduce(&b).unwrap();
            let mut ab = a.clone();
            ab.extend(b.iter().copied());
            prop_assert_eq!(ra.mul(&rb).unwrap(), p.reduce(&ab).unwrap());
        }

        #[test]
        fn group_laws(a in raw_strategy(), b in raw_strategy(), c in raw_strategy()) {
            let p = z2z3();
            let (a, b, c) = (p.reduce(&a).unwrap(), p.reduce(&b).unwrap(), p.reduce(&c).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert!(a.mul(&a.inverse()).unwrap().is_identity());
            prop_assert!(a.inverse().mul(&a).unwrap().is_identity());
            prop_assert_eq!(a.pow(3), a.mul(&a).unwrap().mul(&a).unwrap());
            prop_assert_eq!(a.pow(-3), a.pow(3).inverse());
        }
    }
}

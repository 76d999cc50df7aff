//! Primitive roots and centralizers in `H * G`.
//!
//! A cyclically reduced mixed word `h1 g1 ... hm gm` is read as a sequence of
//! `m` pair symbols `(hi, gi)`. Its primitive root is the prefix given by the
//! minimal period of that sequence, and the centralizer of any conjugate of
//! `root^k` is the infinite cyclic group generated by the (conjugated) root.
//! Elements conjugate into a factor have the factor's centralizer, conjugated.

use std::fmt;

use thiserror::Error;

use crate::conjugacy::{canonical_rotation, cyclic_reduce, pairs_of, to_type1, word_of_pairs, ClassId};
use crate::group::Side;
use crate::word::{FreeProduct, Letter, ReducedWord, WordError};

/// One `(h, g)` block of a type-1 word; both indices are non-identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairSymbol {
    pub h: usize,
    pub g: usize,
}

/// Which periodicity hypothesis of [`lemma1_decompose`] failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    /// `s[i] = s[d + i]` for `i <= p`
    ShiftByDifference,
    /// `s[i] = s[i + p]` for `i <= d`
    ShiftByPrefix,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("the identity has no primitive root")]
    TrivialWord,
    #[error("{hypothesis:?} fails at i = {index}: positions {left} and {right} differ (1-based)")]
    HypothesisViolated {
        hypothesis: Hypothesis,
        index: usize,
        left: usize,
        right: usize,
    },
    #[error("need 0 < p < n, got n = {n}, p = {p}")]
    InvalidShift { n: usize, p: usize },
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Splits a sequence that agrees with itself under shifts by `p` and
/// `d = n - p` into `n / c` copies of its first `c = gcd(n, p)` symbols.
///
/// Both hypotheses are verified first (1-based indices, as in the usual
/// statement); the first violation is reported.
pub fn lemma1_decompose<T: Clone + Eq>(symbols: &[T], p: usize) -> Result<(usize, Vec<T>), RootError> {
    let n = symbols.len();
    if p == 0 || p >= n {
        return Err(RootError::InvalidShift { n, p });
    }
    let d = n - p;
    let s = |i: usize| &symbols[i - 1];
    for i in 1..=p {
        if s(i) != s(d + i) {
            return Err(RootError::HypothesisViolated {
                hypothesis: Hypothesis::ShiftByDifference,
                index: i,
                left: i,
                right: d + i,
            });
        }
    }
    for i in 1..=d {
        if s(i) != s(i + p) {
            return Err(RootError::HypothesisViolated {
                hypothesis: Hypothesis::ShiftByPrefix,
                index: i,
                left: i,
                right: i + p,
            });
        }
    }
    let c = gcd(n, p);
    // Under both hypotheses the sequence has periods p and d; walking the
    // residues mod d through the steps r -> r + k*d - p visits every class,
    // which is what forces period gcd(p, d) = c.
    debug_assert!(symbols.iter().enumerate().all(|(i, x)| *x == symbols[i % c]));
    Ok((c, symbols[..c].to_vec()))
}

/// Failure function: `border[i]` is the length of the longest proper border
/// of `s[..=i]`.
pub fn border_array<T: Eq>(s: &[T]) -> Vec<usize> {
    let mut border = vec![0; s.len()];
    let mut b = 0;
    for i in 1..s.len() {
        while b > 0 && s[i] != s[b] {
            b = border[b - 1];
        }
        if s[i] == s[b] {
            b += 1;
        }
        border[i] = b;
    }
    border
}

/// Length of the shortest `r` with `s` equal to `s[..r]` repeated `s.len() / r` times.
pub fn primitive_period<T: Eq>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let p = n - border_array(s)[n - 1];
    if n.is_multiple_of(p) {
        p
    } else {
        n
    }
}

/// `word = root^multiplicity` with `multiplicity` maximal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootData {
    /// Satisfies `root.pow(multiplicity) == word` on the nose.
    pub root: ReducedWord,
    pub multiplicity: usize,
    /// Cyclically reduced conjugate of `root`; for mixed words the canonical
    /// rotation, so conjugate roots compare equal.
    pub canonical_root: ReducedWord,
}

pub fn primitive_root(w: &ReducedWord) -> Result<RootData, RootError> {
    if w.is_identity() {
        return Err(RootError::TrivialWord);
    }
    let ctx = w.context();
    let form = cyclic_reduce(w);
    if form.core.len() == 1 {
        let l = form.core.first().unwrap();
        let (y, k) = ctx
            .table(l.side)
            .max_root(l.index)
            .expect("core letter is not the identity");
        let canonical_root = ctx.wrap(vec![Letter {
            side: l.side,
            index: y,
        }]);
        return Ok(RootData {
            root: form.conjugator.conjugate_same(&canonical_root),
            multiplicity: k,
            canonical_root,
        });
    }
    let (rotated, t) = to_type1(&form.core);
    let conjugator = form.conjugator.mul_same(&t);
    let pairs = pairs_of(&rotated);
    let period = primitive_period(&pairs);
    let base = word_of_pairs(ctx, &pairs[..period]);
    Ok(RootData {
        root: conjugator.conjugate_same(&base),
        multiplicity: pairs.len() / period,
        canonical_root: canonical_rotation(&base),
    })
}

/// Order of a class representative, using 0 to flag the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementOrder {
    Identity,
    Finite(usize),
    Infinite,
}

impl fmt::Display for ElementOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementOrder::Identity => f.write_str("0"),
            ElementOrder::Finite(n) => write!(f, "{n}"),
            ElementOrder::Infinite => f.write_str("inf"),
        }
    }
}

/// `n` (order) and `k` (root multiplicity) of a class; `k` is `None` for the identity.
pub fn class_invariants(ctx: &std::sync::Arc<FreeProduct>, class: &ClassId) -> (ElementOrder, Option<usize>) {
    match class {
        ClassId::Identity => (ElementOrder::Identity, None),
        ClassId::HClass(_) | ClassId::GClass(_) => {
            let side = if matches!(class, ClassId::HClass(_)) { Side::H } else { Side::G };
            let rep = class.representative(ctx).first().unwrap();
            let t = ctx.table(side);
            let (_, k) = t.max_root(rep.index).expect("non-identity class");
            (ElementOrder::Finite(t.element_order(rep.index)), Some(k))
        }
        ClassId::Mixed(w) => {
            let k = primitive_root(w).expect("mixed words are nontrivial").multiplicity;
            (ElementOrder::Infinite, Some(k))
        }
    }
}

/// Structure of the centralizer of an element of `H * G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CentralizerDescriptor {
    /// The identity: everything commutes with it.
    FullGroup,
    /// `conjugator * C * conjugator^-1` where `C` is the centralizer of the
    /// core letter inside its own factor.
    FiniteSide {
        side: Side,
        elements: Vec<usize>,
        conjugator: ReducedWord,
    },
    /// The centralizer is generated by `generator`, and the element is
    /// `generator^k`; so the quotient by the element's cyclic subgroup is `Z/k`.
    InfiniteCyclic { generator: ReducedWord, k: usize },
}

impl CentralizerDescriptor {
    /// Whether `y` lies in the described subgroup.
    pub fn contains(&self, y: &ReducedWord) -> bool {
        match self {
            CentralizerDescriptor::FullGroup => true,
            CentralizerDescriptor::FiniteSide {
                side,
                elements,
                conjugator,
            } => {
                let z = conjugator.inverse().conjugate_same(y);
                match z.len() {
                    0 => true,
                    1 => {
                        let l = z.first().unwrap();
                        l.side == *side && elements.contains(&l.index)
                    }
                    _ => false,
                }
            }
            CentralizerDescriptor::InfiniteCyclic { generator, .. } => {
                // powers of a nontrivial generator grow in length, so a
                // matching exponent has |j| <= |y|
                let bound = y.len() as i64 + 1;
                (-bound..=bound).any(|j| generator.pow(j) == *y)
            }
        }
    }
}

pub fn centralizer(w: &ReducedWord) -> CentralizerDescriptor {
    let form = cyclic_reduce(w);
    match form.core.len() {
        0 => CentralizerDescriptor::FullGroup,
        1 => {
            let l = form.core.first().unwrap();
            CentralizerDescriptor::FiniteSide {
                side: l.side,
                elements: w.context().table(l.side).centralizer(l.index),
                conjugator: form.conjugator,
            }
        }
        _ => {
            let root = primitive_root(w).expect("nontrivial");
            CentralizerDescriptor::InfiniteCyclic {
                generator: root.root,
                k: root.multiplicity,
            }
        }
    }
}

pub fn commutes(a: &ReducedWord, b: &ReducedWord) -> Result<bool, WordError> {
    a.commutes(b)
}

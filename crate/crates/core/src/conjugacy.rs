//! Conjugacy classes of `H * G`.
//!
//! Every class is either the identity, the class of a non-identity element of
//! one factor, or a mixed class whose cyclically reduced members have even
//! length at least 2. Mixed classes are keyed by the least rotation of their
//! `(h, g)` pair sequence.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::group::Side;
use crate::roots::PairSymbol;
use crate::word::{all_words, FreeProduct, Letter, ReducedWord, WordError};

/// `original = conjugator * core * conjugator^-1` with `core` cyclically reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicForm {
    pub core: ReducedWord,
    pub conjugator: ReducedWord,
}

/// Canonical name of a conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassId {
    Identity,
    /// Index into `H`'s conjugacy classes (never 0).
    HClass(usize),
    /// Index into `G`'s conjugacy classes (never 0).
    GClass(usize),
    /// Least type-1 rotation of the cyclic core.
    Mixed(ReducedWord),
}

impl ClassId {
    pub fn is_mixed(&self) -> bool {
        matches!(self, ClassId::Mixed(_))
    }

    /// A word in the class: the least element of a finite class, or the
    /// canonical mixed word.
    pub fn representative(&self, ctx: &Arc<FreeProduct>) -> ReducedWord {
        match self {
            ClassId::Identity => ctx.identity(),
            ClassId::HClass(i) => side_rep(ctx, Side::H, *i),
            ClassId::GClass(i) => side_rep(ctx, Side::G, *i),
            ClassId::Mixed(w) => w.clone(),
        }
    }
}

fn side_rep(ctx: &Arc<FreeProduct>, side: Side, class: usize) -> ReducedWord {
    let index = ctx.table(side).conjugacy_classes()[class][0];
    ctx.wrap(vec![Letter { side, index }])
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassId::Identity => f.write_str("identity"),
            ClassId::HClass(i) => write!(f, "H-class {i}"),
            ClassId::GClass(i) => write!(f, "G-class {i}"),
            ClassId::Mixed(w) => write!(f, "mixed [{w}]"),
        }
    }
}

/// Strips matching outer letters until the first and last letters lie in
/// different factors (or at most one letter is left).
pub fn cyclic_reduce(w: &ReducedWord) -> CyclicForm {
    let ctx = w.context();
    let mut core = w.clone();
    let mut conjugator = ctx.identity();
    while core.len() >= 2 {
        let (first, last) = (core.first().unwrap(), core.last().unwrap());
        if first.side != last.side {
            break;
        }
        // core = a * (a^-1 core a) * a^-1, and a^-1 core a is shorter
        let a = ctx.wrap(vec![first]);
        core = a.inverse().mul_same(&core).mul_same(&a);
        conjugator = conjugator.mul_same(&a);
    }
    CyclicForm { core, conjugator }
}

/// Rotates a cyclically reduced mixed core so it starts with an `H` letter.
/// Returns the rotated word `r` and the letter `t` with `core = t r t^-1`.
pub(crate) fn to_type1(core: &ReducedWord) -> (ReducedWord, ReducedWord) {
    let ctx = core.context();
    match core.first() {
        Some(l) if l.side == Side::G => {
            let mut letters = core.letters()[1..].to_vec();
            letters.push(l);
            (ctx.wrap(letters), ctx.wrap(vec![l]))
        }
        _ => (core.clone(), ctx.identity()),
    }
}

/// Pair symbols of a type-1 word.
pub(crate) fn pairs_of(w: &ReducedWord) -> Vec<PairSymbol> {
    w.letters()
        .chunks_exact(2)
        .map(|p| PairSymbol {
            h: p[0].index,
            g: p[1].index,
        })
        .collect()
}

pub(crate) fn word_of_pairs(ctx: &Arc<FreeProduct>, pairs: &[PairSymbol]) -> ReducedWord {
    let letters = pairs
        .iter()
        .flat_map(|p| {
            [
                Letter {
                    side: Side::H,
                    index: p.h,
                },
                Letter {
                    side: Side::G,
                    index: p.g,
                },
            ]
        })
        .collect();
    ctx.wrap(letters)
}

/// Start index of the lexicographically least rotation.
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0, 1, 0);
    while i < n && j < n && k < n {
        match s[(i + k) % n].cmp(&s[(j + k) % n]) {
            std::cmp::Ordering::Equal => k += 1,
            std::cmp::Ordering::Greater => {
                i += k + 1;
                if i == j {
                    i += 1;
                }
                k = 0;
            }
            std::cmp::Ordering::Less => {
                j += k + 1;
                if i == j {
                    j += 1;
                }
                k = 0;
            }
        }
    }
    i.min(j)
}

/// Canonical rotation of a cyclically reduced mixed core.
pub(crate) fn canonical_rotation(core: &ReducedWord) -> ReducedWord {
    let (t1, _) = to_type1(core);
    let mut pairs = pairs_of(&t1);
    let r = least_rotation(&pairs);
    pairs.rotate_left(r);
    word_of_pairs(core.context(), &pairs)
}

pub fn canonical_class(w: &ReducedWord) -> ClassId {
    let core = cyclic_reduce(w).core;
    match core.len() {
        0 => ClassId::Identity,
        1 => {
            let l = core.first().unwrap();
            let idx = core.context().table(l.side).class_index(l.index);
            match l.side {
                Side::H => ClassId::HClass(idx),
                Side::G => ClassId::GClass(idx),
            }
        }
        _ => ClassId::Mixed(canonical_rotation(&core)),
    }
}

pub fn are_conjugate(a: &ReducedWord, b: &ReducedWord) -> Result<bool, WordError> {
    if !a.same_context(b) {
        return Err(WordError::MixedContexts);
    }
    Ok(canonical_class(a) == canonical_class(b))
}

/// One canonical word per mixed class with at most `max_pairs` `(h, g)` pairs,
/// ordered by length and then lexicographically.
///
/// Necklaces are generated directly over the pair alphabet.
pub fn enumerate_u_classes(ctx: &Arc<FreeProduct>, max_pairs: usize) -> Vec<ReducedWord> {
    let hs = ctx.h().order() - 1;
    let gs = ctx.g().order() - 1;
    let alphabet = hs * gs;
    let mut out = Vec::new();
    if alphabet == 0 {
        return out;
    }
    let symbol = |s: usize| PairSymbol {
        h: 1 + s / gs,
        g: 1 + s % gs,
    };
    for m in 1..=max_pairs {
        necklaces(m, alphabet, &mut |neck: &[usize]| {
            let pairs: Vec<PairSymbol> = neck.iter().map(|&s| symbol(s)).collect();
            out.push(word_of_pairs(ctx, &pairs));
        });
    }
    out
}

/// Necklaces of length `n` over `0..k` in lexicographic order.
fn necklaces(n: usize, k: usize, emit: &mut dyn FnMut(&[usize])) {
    fn go(t: usize, p: usize, n: usize, k: usize, a: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
        if t > n {
            if n.is_multiple_of(p) {
                emit(&a[1..=n]);
            }
            return;
        }
        a[t] = a[t - p];
        go(t + 1, p, n, k, a, emit);
        for j in a[t - p] + 1..k {
            a[t] = j;
            go(t + 1, t, n, k, a, emit);
        }
    }
    let mut a = vec![0; n + 1];
    go(1, 1, n, k, &mut a, emit);
}

/// Slow path for [`enumerate_u_classes`]: canonicalize every reduced word of
/// length at most `2 * max_pairs` and keep the distinct mixed classes.
pub fn enumerate_u_classes_by_dedupe(ctx: &Arc<FreeProduct>, max_pairs: usize) -> Vec<ReducedWord> {
    let mut seen = BTreeSet::new();
    for w in all_words(ctx, 2 * max_pairs) {
        let form = cyclic_reduce(&w);
        if form.core.len() >= 2 && form.core.len() <= 2 * max_pairs {
            if let ClassId::Mixed(c) = canonical_class(&w) {
                seen.insert(c);
            }
        }
    }
    seen.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupTable;

    fn ctx(h: GroupTable, g: GroupTable) -> Arc<FreeProduct> {
        FreeProduct::new(h, g)
    }

    fn z2z3() -> Arc<FreeProduct> {
        ctx(GroupTable::cyclic(2), GroupTable::cyclic(3))
    }

    fn w(c: &Arc<FreeProduct>, s: &str) -> ReducedWord {
        c.parse(s).unwrap()
    }

    /// Shortest conjugate found by conjugating with every word up to `len`.
    fn brute_min_conjugate_len(x: &ReducedWord, len: usize) -> usize {
        all_words(x.context(), len)
            .iter()
            .map(|u| u.conjugate_same(x).len())
            .min()
            .unwrap()
    }

    #[test]
    fn cyclic_reduction_examples() {
        let p = z2z3();
        let f = cyclic_reduce(&w(&p, "h1 g1"));
        assert_eq!(f.core, w(&p, "h1 g1"));
        assert!(f.conjugator.is_identity());

        let f = cyclic_reduce(&w(&p, "g1 h1 g2"));
        assert_eq!(f.core, w(&p, "h1"));
        assert_eq!(f.conjugator, w(&p, "g1"));

        let x = w(&p, "g2 h1 g1 h1");
        let f = cyclic_reduce(&x);
        assert_eq!(f.core.len(), 4);
        assert_eq!(brute_min_conjugate_len(&x, 2), 4);
    }

    #[test]
    fn cyclic_form_invariants_and_minimality() {
        let p = ctx(GroupTable::cyclic(3), GroupTable::sym3());
        for x in all_words(&p, 4) {
            let f = cyclic_reduce(&x);
            assert_eq!(f.conjugator.conjugate_same(&f.core), x);
            if f.core.len() >= 2 {
                assert_ne!(f.core.first().unwrap().side, f.core.last().unwrap().side);
            }
            assert_eq!(f.core.len(), brute_min_conjugate_len(&x, 3), "{x}");
        }
    }

    #[test]
    fn canonical_class_examples() {
        let p = z2z3();
        assert_eq!(canonical_class(&p.identity()), ClassId::Identity);
        assert_eq!(canonical_class(&w(&p, "g1 h1 g2")), ClassId::HClass(1));
        assert_eq!(
            canonical_class(&w(&p, "g1 h1")),
            ClassId::Mixed(w(&p, "h1 g1"))
        );
        assert_eq!(canonical_class(&w(&p, "g2")), ClassId::GClass(2));
    }

    #[test]
    fn least_rotation_matches_brute_force() {
        let seqs: [&[u8]; 6] = [b"", b"a", b"ba", b"abab", b"cabcab", b"bcaacb"];
        for s in seqs {
            if s.is_empty() {
                continue;
            }
            let r = least_rotation(s);
            let rot = |i: usize| [&s[i..], &s[..i]].concat();
            let best = (0..s.len()).map(rot).min().unwrap();
            assert_eq!(rot(r), best);
        }
    }

    #[test]
    fn conjugacy_decided_by_canonical_forms() {
        let p = z2z3();
        assert!(!are_conjugate(&w(&p, "h1"), &w(&p, "g1")).unwrap());
        let (a, b) = (w(&p, "h1 g1"), w(&p, "h1 g2"));
        let canon = are_conjugate(&a, &b).unwrap();
        let brute = all_words(&p, 4).iter().any(|u| u.conjugate_same(&a) == b);
        assert_eq!(canon, brute);
        assert!(!canon);
        let q = ctx(GroupTable::cyclic(2), GroupTable::cyclic(2));
        assert_eq!(
            are_conjugate(&a, &q.parse("h1").unwrap()),
            Err(WordError::MixedContexts)
        );
    }

    #[test]
    fn canonical_class_is_conjugation_invariant() {
        let p = ctx(GroupTable::sym3(), GroupTable::cyclic(3));
        let words = all_words(&p, 3);
        for x in &words {
            let c = canonical_class(x);
            for u in &words {
                assert_eq!(canonical_class(&u.conjugate_same(x)), c);
            }
        }
    }

    #[test]
    fn conjugacy_matches_bounded_search() {
        // over Z2*Z3, words up to 3 letters: cyclic cores have length <= 3 so
        // conjugators of length <= 4 suffice to witness conjugacy
        let p = z2z3();
        let words = all_words(&p, 3);
        let conj = all_words(&p, 4);
        for a in &words {
            let orbit: BTreeSet<ReducedWord> = conj.iter().map(|u| u.conjugate_same(a)).collect();
            for b in &words {
                assert_eq!(are_conjugate(a, b).unwrap(), orbit.contains(b), "{a} ~ {b}");
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let d = ctx(GroupTable::cyclic(2), GroupTable::cyclic(2));
        let got: Vec<String> = enumerate_u_classes(&d, 3).iter().map(|w| w.to_string()).collect();
        assert_eq!(got, vec!["h1 g1", "h1 g1 h1 g1", "h1 g1 h1 g1 h1 g1"]);
        for l in 1..=4 {
            assert_eq!(enumerate_u_classes(&d, l).len(), l);
        }

        let p = z2z3();
        let got: Vec<String> = enumerate_u_classes(&p, 1).iter().map(|w| w.to_string()).collect();
        assert_eq!(got, vec!["h1 g1", "h1 g2"]);

        let trivial = ctx(GroupTable::cyclic(1), GroupTable::sym3());
        assert!(enumerate_u_classes(&trivial, 3).is_empty());
    }

    #[test]
    fn necklace_enumeration_matches_dedupe() {
        let cases = [
            (GroupTable::cyclic(2), GroupTable::cyclic(3), 4),
            (GroupTable::cyclic(3), GroupTable::cyclic(3), 3),
            (GroupTable::klein_four(), GroupTable::cyclic(2), 3),
            (GroupTable::sym3(), GroupTable::cyclic(2), 2),
        ];
        for (h, g, l) in cases {
            let p = ctx(h, g);
            let fast = enumerate_u_classes(&p, l);
            assert_eq!(fast, enumerate_u_classes_by_dedupe(&p, l));
            for c in &fast {
                assert_eq!(canonical_class(c), ClassId::Mixed(c.clone()));
            }
            let longer = enumerate_u_classes(&p, l + 1);
            assert_eq!(&longer[..fast.len()], &fast[..]);
        }
    }
}

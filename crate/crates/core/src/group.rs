//! Finite groups given by validated multiplication tables.
//!
//! Elements are indices `0..order`, the identity is always index 0, and the
//! entry in row `i`, column `j` is the index of the product `i * j`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Which factor of the free product an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    H,
    G,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::H => Side::G,
            Side::G => Side::H,
        }
    }

    /// Lower-case token prefix used in word syntax.
    pub fn prefix(self) -> char {
        match self {
            Side::H => 'h',
            Side::G => 'g',
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::H => f.write_str("H"),
            Side::G => f.write_str("G"),
        }
    }
}

/// An element of one of the two factors, identity allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SideElement {
    pub side: Side,
    pub index: usize,
}

impl SideElement {
    pub fn new(side: Side, index: usize) -> Self {
        SideElement { side, index }
    }
}

/// The group axiom a rejected table violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    Closure,
    Identity,
    Inverse,
    Associativity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Closure => "closure",
            Axiom::Identity => "identity",
            Axiom::Inverse => "inverse",
            Axiom::Associativity => "associativity",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("not a group: {axiom} law fails at ({}, {}, {})", witness.0, witness.1, witness.2)]
    NonGroup {
        axiom: Axiom,
        witness: (usize, usize, usize),
    },
    #[error("malformed group document: {0}")]
    MalformedDocument(String),
    #[error("the identity has no maximal root")]
    IdentityInput,
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("unknown group preset `{0}`")]
    UnknownPreset(String),
}

/// On-disk form of a group table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDocument {
    pub name: String,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

/// A finite group with a validated Cayley table. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupTable {
    name: String,
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
}

/// Validates a document and returns the group it describes.
///
/// Checks run in order: shape, closure (entries in range), identity law at
/// index 0, inverses, associativity. The first failure is reported with a
/// witness triple; unused witness slots are 0.
pub fn load_group(doc: &GroupDocument) -> Result<GroupTable, GroupError> {
    let n = doc.order;
    if n == 0 {
        return Err(GroupError::MalformedDocument("order must be at least 1".into()));
    }
    if doc.table.len() != n {
        return Err(GroupError::MalformedDocument(format!(
            "expected {n} rows, found {}",
            doc.table.len()
        )));
    }
    for (i, row) in doc.table.iter().enumerate() {
        if row.len() != n {
            return Err(GroupError::MalformedDocument(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
    }
    for (i, row) in doc.table.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(GroupError::NonGroup {
                    axiom: Axiom::Closure,
                    witness: (i, j, 0),
                });
            }
        }
    }
    let table: Vec<usize> = doc.table.iter().flatten().copied().collect();
    let at = |i: usize, j: usize| table[i * n + j];

    for i in 0..n {
        if at(0, i) != i || at(i, 0) != i {
            return Err(GroupError::NonGroup {
                axiom: Axiom::Identity,
                witness: (0, i, 0),
            });
        }
    }
    let inverses = (0..n)
        .map(|i| {
            (0..n)
                .find(|&j| at(i, j) == 0 && at(j, i) == 0)
                .ok_or(GroupError::NonGroup {
                    axiom: Axiom::Inverse,
                    witness: (i, 0, 0),
                })
        })
        .collect::<Result<Vec<_>, _>>()?;
    for i in 0..n {
        for j in 0..n {
            let ij = at(i, j);
            for k in 0..n {
                if at(ij, k) != at(i, at(j, k)) {
                    return Err(GroupError::NonGroup {
                        axiom: Axiom::Associativity,
                        witness: (i, j, k),
                    });
                }
            }
        }
    }
    Ok(GroupTable {
        name: doc.name.clone(),
        order: n,
        table,
        inverses,
    })
}

impl GroupTable {
    /// Parses a JSON group document and validates it.
    pub fn from_json(text: &str) -> Result<GroupTable, GroupError> {
        let doc: GroupDocument =
            serde_json::from_str(text).map_err(|e| GroupError::MalformedDocument(e.to_string()))?;
        load_group(&doc)
    }

    pub fn to_document(&self) -> GroupDocument {
        GroupDocument {
            name: self.name.clone(),
            order: self.order,
            table: self.table.chunks(self.order).map(<[usize]>::to_vec).collect(),
        }
    }

    /// Cyclic group of order `n` with `i * j = (i + j) mod n`.
    pub fn cyclic(n: usize) -> GroupTable {
        assert!(n >= 1, "cyclic group needs positive order");
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        load_group(&GroupDocument {
            name: format!("cyclic{n}"),
            order: n,
            table,
        })
        .expect("cyclic table is a group")
    }

    /// Klein four-group, elements encoded as bit pairs under xor.
    pub fn klein_four() -> GroupTable {
        let table = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
        load_group(&GroupDocument {
            name: "klein4".into(),
            order: 4,
            table,
        })
        .expect("klein table is a group")
    }

    /// Symmetric group on three letters.
    ///
    /// Index 0 is the identity, 1..=3 are the transpositions (01), (02), (12)
    /// and 4, 5 are the 3-cycles (012), (021). Products compose right to left.
    pub fn sym3() -> GroupTable {
        const PERMS: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [2, 1, 0],
            [0, 2, 1],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let index_of = |p: [usize; 3]| PERMS.iter().position(|q| *q == p).unwrap();
        let table = PERMS
            .iter()
            .map(|a| {
                PERMS
                    .iter()
                    .map(|b| index_of([a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect();
        load_group(&GroupDocument {
            name: "sym3".into(),
            order: 6,
            table,
        })
        .expect("sym3 table is a group")
    }

    /// Resolves a preset name: `cyclic<n>` for `1 <= n <= 12`, `trivial`,
    /// `klein4` (alias `klein-four`) and `sym3`.
    pub fn preset(name: &str) -> Result<GroupTable, GroupError> {
        match name {
            "trivial" => Ok(GroupTable::cyclic(1)),
            "klein4" | "klein-four" => Ok(GroupTable::klein_four()),
            "sym3" => Ok(GroupTable::sym3()),
            _ => name
                .strip_prefix("cyclic")
                .and_then(|n| n.parse::<usize>().ok())
                .filter(|n| (1..=12).contains(n))
                .map(GroupTable::cyclic)
                .ok_or_else(|| GroupError::UnknownPreset(name.to_string())),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn check_index(&self, index: usize) -> Result<(), GroupError> {
        if index < self.order {
            Ok(())
        } else {
            Err(GroupError::IndexOutOfRange {
                index,
                order: self.order,
            })
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn conjugate(&self, by: usize, a: usize) -> usize {
        self.mul(self.mul(by, a), self.inverse(by))
    }

    /// Smallest `m >= 1` with `a^m` the identity.
    pub fn element_order(&self, a: usize) -> usize {
        let mut m = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            m += 1;
        }
        m
    }

    /// Conjugacy classes as sorted index lists, ordered by least element.
    /// The first class is always `[0]`.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for a in 0..self.order {
            if seen[a] {
                continue;
            }
            let mut class: Vec<usize> = (0..self.order).map(|x| self.conjugate(x, a)).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Position of `a`'s class in [`GroupTable::conjugacy_classes`].
    pub fn class_index(&self, a: usize) -> usize {
        self.conjugacy_classes()
            .iter()
            .position(|c| c.binary_search(&a).is_ok())
            .expect("classes cover the group")
    }

    pub fn centralizer(&self, a: usize) -> Vec<usize> {
        (0..self.order)
            .filter(|&y| self.mul(y, a) == self.mul(a, y))
            .collect()
    }

    /// Largest `k <= order` admitting some `y` with `y^k = a`, together with
    /// the least such `y`.
    ///
    /// In a finite group `y^k = y^(k + ord(y))`, so an unbounded maximum never
    /// exists; the exponent is capped at the group order.
    pub fn max_root(&self, a: usize) -> Result<(usize, usize), GroupError> {
        self.check_index(a)?;
        if a == 0 {
            return Err(GroupError::IdentityInput);
        }
        // powers[y] holds y^k for the current k
        let mut powers: Vec<Vec<usize>> = Vec::with_capacity(self.order);
        let mut row: Vec<usize> = (0..self.order).collect();
        powers.push(row.clone());
        for _ in 1..self.order {
            row = row.iter().enumerate().map(|(y, &p)| self.mul(p, y)).collect();
            powers.push(row.clone());
        }
        for k in (1..=self.order).rev() {
            if let Some(y) = powers[k - 1].iter().position(|&p| p == a) {
                return Ok((y, k));
            }
        }
        unreachable!("a^1 = a always")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(order: usize, table: Vec<Vec<usize>>) -> GroupDocument {
        GroupDocument {
            name: "t".into(),
            order,
            table,
        }
    }

    #[test]
    fn trivial_and_cyclic_tables_load() {
        assert_eq!(load_group(&doc(1, vec![vec![0]])).unwrap().order(), 1);
        let z3 = (0..3).map(|i| (0..3).map(|j| (i + j) % 3).collect()).collect();
        assert_eq!(load_group(&doc(3, z3)).unwrap().order(), 3);
    }

    #[test]
    fn idempotent_non_identity_has_no_inverse() {
        let err = load_group(&doc(2, vec![vec![0, 1], vec![1, 1]])).unwrap_err();
        assert_eq!(
            err,
            GroupError::NonGroup {
                axiom: Axiom::Inverse,
                witness: (1, 0, 0)
            }
        );
    }

    #[test]
    fn rejects_bad_shapes_and_entries() {
        assert!(matches!(
            load_group(&doc(2, vec![vec![0, 1]])),
            Err(GroupError::MalformedDocument(_))
        ));
        assert!(matches!(
            load_group(&doc(0, vec![])),
            Err(GroupError::MalformedDocument(_))
        ));
        assert!(matches!(
            load_group(&doc(2, vec![vec![0, 1], vec![1, 2]])),
            Err(GroupError::NonGroup {
                axiom: Axiom::Closure,
                ..
            })
        ));
        // identity not at index 0
        assert!(matches!(
            load_group(&doc(2, vec![vec![1, 0], vec![0, 1]])),
            Err(GroupError::NonGroup {
                axiom: Axiom::Identity,
                ..
            })
        ));
    }

    #[test]
    fn non_associative_loop_is_rejected() {
        // order-5 loop with identity and inverses but no associativity
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            load_group(&doc(5, t)),
            Err(GroupError::NonGroup {
                axiom: Axiom::Associativity,
                ..
            })
        ));
    }

    #[test]
    fn json_round_trip() {
        let s3 = GroupTable::sym3();
        let text = serde_json::to_string(&s3.to_document()).unwrap();
        assert_eq!(GroupTable::from_json(&text).unwrap(), s3);
        assert!(matches!(
            GroupTable::from_json("{\"name\":\"x\"}"),
            Err(GroupError::MalformedDocument(_))
        ));
    }

    #[test]
    fn presets() {
        for n in 1..=12 {
            assert_eq!(GroupTable::preset(&format!("cyclic{n}")).unwrap().order(), n);
        }
        assert!(GroupTable::preset("cyclic13").is_err());
        assert!(GroupTable::preset("cyclic0").is_err());
        assert_eq!(GroupTable::preset("klein-four").unwrap().order(), 4);
        assert_eq!(GroupTable::preset("sym3").unwrap().order(), 6);
        assert!(GroupTable::preset("quaternion").is_err());
    }

    #[test]
    fn element_orders() {
        assert_eq!(GroupTable::cyclic(5).element_order(0), 1);
        assert_eq!(GroupTable::cyclic(6).element_order(2), 3);
        assert_eq!(GroupTable::cyclic(2).element_order(1), 2);
        let s3 = GroupTable::sym3();
        let orders: Vec<usize> = (0..6).map(|a| s3.element_order(a)).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 3]);
    }

    #[test]
    fn classes() {
        assert_eq!(GroupTable::cyclic(1).conjugacy_classes(), vec![vec![0]]);
        assert_eq!(
            GroupTable::cyclic(3).conjugacy_classes(),
            vec![vec![0], vec![1], vec![2]]
        );
        let sizes: Vec<usize> = GroupTable::sym3()
            .conjugacy_classes()
            .iter()
            .map(Vec::len)
            .collect();
        assert_eq!(sizes, vec![1, 3, 2]);
    }

    #[test]
    fn centralizers() {
        let s3 = GroupTable::sym3();
        assert_eq!(s3.centralizer(0).len(), 6);
        assert_eq!(s3.centralizer(1), vec![0, 1]);
        assert_eq!(s3.centralizer(4), vec![0, 4, 5]);
        assert_eq!(GroupTable::cyclic(7).centralizer(3).len(), 7);
    }

    #[test]
    fn max_roots_match_exhaustive_search() {
        assert_eq!(GroupTable::cyclic(2).max_root(1).unwrap(), (1, 1));
        // 7 * 6 = 42 = 2 mod 8, and 8 * y = 0 for every y
        assert_eq!(GroupTable::cyclic(8).max_root(2).unwrap(), (6, 7));
        // 5 * 3 = 15 = 3 mod 6
        assert_eq!(GroupTable::cyclic(6).max_root(3).unwrap(), (3, 5));
        assert_eq!(
            GroupTable::cyclic(4).max_root(0),
            Err(GroupError::IdentityInput)
        );
    }

    fn all_presets() -> Vec<GroupTable> {
        let mut v: Vec<GroupTable> = (1..=12).map(GroupTable::cyclic).collect();
        v.push(GroupTable::klein_four());
        v.push(GroupTable::sym3());
        v
    }

    #[test]
    fn preset_invariants() {
        for t in all_presets() {
            let n = t.order();
            for a in 0..n {
                assert_eq!(n % t.element_order(a), 0);
                let cent = t.centralizer(a);
                let mut x = 0;
                loop {
                    assert!(cent.contains(&x));
                    x = t.mul(x, a);
                    if x == 0 {
                        break;
                    }
                }
                for b in 0..n {
                    let c = t.conjugate(b, a);
                    assert_eq!(t.element_order(c), t.element_order(a));
                    assert_eq!(t.centralizer(c).len(), cent.len());
                }
                if a != 0 {
                    let (y, k) = t.max_root(a).unwrap();
                    assert_eq!(t.pow(y, k), a);
                    for k2 in k + 1..=n {
                        assert!((0..n).all(|y2| t.pow(y2, k2) != a));
                    }
                }
            }
            let classes = t.conjugacy_classes();
            assert_eq!(classes[0], vec![0]);
            assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), n);
            for class in &classes {
                for &a in class {
                    for x in 0..n {
                        assert!(class.contains(&t.conjugate(x, a)));
                    }
                }
            }
        }
    }
}

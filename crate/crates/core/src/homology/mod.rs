//! Coefficient rings, finitely generated module values, and the homology
//! computations built on them.

mod assembly;
mod chain;
mod cyclic;
mod snf;

use std::fmt;

use thiserror::Error;

pub use assembly::{
    assemble_reduced_hc, assemble_reduced_phc, char0_side_contribution, char0_side_periodic, AssemblyReport,
    SideSummand, Theory, URow, Window,
};
pub use chain::{chain_homology, integral_homology};
pub use cyclic::{cyclic_group_homology, k_star, periodic_resolution, t_star, TruncatedSum};
pub use snf::{smith_normal_form, IntMatrix, SmithForm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unknown ring `{0}` (expected Z, Z/<m>, Q or F<p>)")]
    UnknownRing(String),
    #[error("boundary maps do not compose to zero at degree {degree}: entry ({row}, {col})")]
    NotAComplex { degree: usize, row: usize, col: usize },
    #[error("boundary map {degree} has incompatible shape")]
    ShapeMismatch { degree: usize },
    #[error("no closed form over {0} for this group")]
    UnsupportedRing(Ring),
}

/// Commutative coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    IntegersMod(u64),
    Rationals,
    PrimeField(u64),
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Ring {
    pub fn integers_mod(m: u64) -> Result<Ring, HomologyError> {
        if m < 2 {
            Err(HomologyError::InvalidModulus(m))
        } else {
            Ok(Ring::IntegersMod(m))
        }
    }

    pub fn prime_field(p: u64) -> Result<Ring, HomologyError> {
        if is_prime(p) {
            Ok(Ring::PrimeField(p))
        } else {
            Err(HomologyError::NotPrime(p))
        }
    }

    /// Accepts `Z`, `Z/<m>`, `Q` and `F<p>`.
    pub fn parse(s: &str) -> Result<Ring, HomologyError> {
        let bad = || HomologyError::UnknownRing(s.to_string());
        match s {
            "Z" => Ok(Ring::Integers),
            "Q" => Ok(Ring::Rationals),
            _ => {
                if let Some(m) = s.strip_prefix("Z/") {
                    Ring::integers_mod(m.parse().map_err(|_| bad())?)
                } else if let Some(p) = s.strip_prefix('F') {
                    Ring::prime_field(p.parse().map_err(|_| bad())?)
                } else {
                    Err(bad())
                }
            }
        }
    }

    pub fn is_field(self) -> bool {
        matches!(self, Ring::Rationals | Ring::PrimeField(_))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Ring::Integers | Ring::Rationals => 0,
            Ring::IntegersMod(m) => m,
            Ring::PrimeField(p) => p,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => f.write_str("Z"),
            Ring::IntegersMod(m) => write!(f, "Z/{m}"),
            Ring::Rationals => f.write_str("Q"),
            Ring::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Dim(usize),
    /// Invariant factors in divisibility order; 0 marks a free summand and
    /// sorts last.
    Factors(Vec<u64>),
}

/// A finitely generated module over a [`Ring`], kept in canonical form.
///
/// Over a field it is a dimension. Over `Z` and `Z/m` it is a list of cyclic
/// orders `d1 | d2 | ...` followed by free summands (stored as 0); over `Z/m`
/// a summand `Z/m` is free and is stored as 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleExpr {
    ring: Ring,
    repr: Repr,
}

impl ModuleExpr {
    pub fn zero(ring: Ring) -> ModuleExpr {
        if ring.is_field() {
            ModuleExpr { ring, repr: Repr::Dim(0) }
        } else {
            ModuleExpr {
                ring,
                repr: Repr::Factors(Vec::new()),
            }
        }
    }

    pub fn free(ring: Ring, rank: usize) -> ModuleExpr {
        if ring.is_field() {
            ModuleExpr {
                ring,
                repr: Repr::Dim(rank),
            }
        } else {
            ModuleExpr {
                ring,
                repr: Repr::Factors(vec![0; rank]),
            }
        }
    }

    /// Direct sum of cyclic modules `R / d R`, one per entry (0 gives `R`).
    /// Over `Z/m` each `d` must divide `m`; over a field each entry must be 0
    /// or the characteristic.
    pub fn from_cyclic_orders(ring: Ring, orders: &[u64]) -> ModuleExpr {
        match ring {
            Ring::Rationals => ModuleExpr::free(ring, orders.iter().filter(|&&d| d == 0).count()),
            Ring::PrimeField(p) => {
                assert!(orders.iter().all(|&d| d == 0 || d % p == 0 || d == 1));
                ModuleExpr::free(ring, orders.iter().filter(|&&d| d != 1).count())
            }
            Ring::Integers => ModuleExpr {
                ring,
                repr: Repr::Factors(normalize(orders, None)),
            },
            Ring::IntegersMod(m) => {
                assert!(orders.iter().all(|&d| d == 0 || m % d == 0));
                ModuleExpr {
                    ring,
                    repr: Repr::Factors(normalize(orders, Some(m))),
                }
            }
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Dim(d) => *d == 0,
            Repr::Factors(f) => f.is_empty(),
        }
    }

    /// Number of free summands (the dimension over a field).
    pub fn free_rank(&self) -> usize {
        match &self.repr {
            Repr::Dim(d) => *d,
            Repr::Factors(f) => f.iter().filter(|&&d| d == 0).count(),
        }
    }

    /// Orders of the non-free cyclic summands, in divisibility order.
    pub fn torsion(&self) -> Vec<u64> {
        match &self.repr {
            Repr::Dim(_) => Vec::new(),
            Repr::Factors(f) => f.iter().copied().filter(|&d| d != 0).collect(),
        }
    }

    /// Dimension over a field; `None` over `Z` and `Z/m`.
    pub fn dim(&self) -> Option<usize> {
        match &self.repr {
            Repr::Dim(d) => Some(*d),
            Repr::Factors(_) => None,
        }
    }

    /// Cyclic orders with 0 for free summands.
    pub fn cyclic_orders(&self) -> Vec<u64> {
        match &self.repr {
            Repr::Dim(d) => vec![0; *d],
            Repr::Factors(f) => f.clone(),
        }
    }

    pub fn direct_sum(&self, other: &ModuleExpr) -> ModuleExpr {
        assert_eq!(self.ring, other.ring, "direct sum over different rings");
        match (&self.repr, &other.repr) {
            (Repr::Dim(a), Repr::Dim(b)) => ModuleExpr::free(self.ring, a + b),
            (Repr::Factors(a), Repr::Factors(b)) => {
                let all: Vec<u64> = a.iter().chain(b).copied().collect();
                ModuleExpr::from_cyclic_orders(self.ring, &all)
            }
            _ => unreachable!("representation is fixed by the ring"),
        }
    }

    pub fn sum<'a>(ring: Ring, parts: impl IntoIterator<Item = &'a ModuleExpr>) -> ModuleExpr {
        parts
            .into_iter()
            .fold(ModuleExpr::zero(ring), |acc, m| acc.direct_sum(m))
    }
}

fn prime_powers(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Invariant-factor form of a direct sum of cyclic groups. With a modulus
/// `m`, 0 entries stand for `Z/m` and the output writes `Z/m` back as 0.
fn normalize(orders: &[u64], modulus: Option<u64>) -> Vec<u64> {
    let mut free = 0;
    let mut by_prime: std::collections::BTreeMap<u64, Vec<u32>> = Default::default();
    for &d in orders {
        let d = match (d, modulus) {
            (0, Some(m)) => m,
            (0, None) => {
                free += 1;
                continue;
            }
            (d, _) => d,
        };
        for (p, e) in prime_powers(d) {
            by_prime.entry(p).or_default().push(e);
        }
    }
    let count = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut factors = vec![1u64; count];
    for (p, mut exps) in by_prime {
        exps.sort_unstable_by(|a, b| b.cmp(a));
        for (slot, e) in exps.into_iter().enumerate() {
            factors[slot] *= p.pow(e);
        }
    }
    factors.reverse();
    if let Some(m) = modulus {
        for f in &mut factors {
            if *f == m {
                *f = 0;
            }
        }
        // free summands are the largest factors already, so the order holds
    }
    factors.extend(std::iter::repeat_n(0, free));
    factors
}

impl fmt::Display for ModuleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let ring = self.ring.to_string();
        let mut parts = Vec::new();
        for d in self.torsion() {
            parts.push(format!("Z/{d}"));
        }
        let r = self.free_rank();
        let base = match self.ring {
            Ring::IntegersMod(_) if r > 1 => format!("({ring})"),
            _ => ring,
        };
        match r {
            0 => {}
            1 => parts.push(base),
            _ => parts.push(format!("{base}^{r}")),
        }
        f.write_str(&parts.join(" (+) "))
    }
}

/// One [`ModuleExpr`] per degree `0..=max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedModule {
    ring: Ring,
    degrees: Vec<ModuleExpr>,
}

impl GradedModule {
    pub fn new(ring: Ring, degrees: Vec<ModuleExpr>) -> GradedModule {
        assert!(degrees.iter().all(|m| m.ring() == ring));
        GradedModule { ring, degrees }
    }

    pub fn zero(ring: Ring, max_degree: usize) -> GradedModule {
        GradedModule::new(ring, vec![ModuleExpr::zero(ring); max_degree + 1])
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn degree(&self, n: usize) -> &ModuleExpr {
        &self.degrees[n]
    }

    pub fn degrees(&self) -> &[ModuleExpr] {
        &self.degrees
    }

    pub fn direct_sum(&self, other: &GradedModule) -> GradedModule {
        assert_eq!(self.degrees.len(), other.degrees.len());
        GradedModule::new(
            self.ring,
            self.degrees
                .iter()
                .zip(&other.degrees)
                .map(|(a, b)| a.direct_sum(b))
                .collect(),
        )
    }
}

//! Homology of finite cyclic groups and the sums built from it.

use super::snf::IntMatrix;
use super::{gcd, GradedModule, ModuleExpr, Ring};
use crate::Parity;

/// Boundaries `d1..=d_top` of the periodic resolution of `Z` over `Z[Z/k]`
/// after tensoring with the trivial module: `C_n = Z`, `d_n = 0` for odd `n`
/// and multiplication by `k` for even `n`.
pub fn periodic_resolution(k: u64, top: usize) -> Vec<IntMatrix> {
    (1..=top)
        .map(|n| {
            let v = if n % 2 == 1 { 0 } else { k as i128 };
            IntMatrix::from_rows(&[vec![v]], 1)
        })
        .collect()
}

/// `R / kR`
fn quotient(k: u64, ring: Ring) -> ModuleExpr {
    let orders: Vec<u64> = match ring {
        Ring::Integers if k == 1 => vec![],
        Ring::Integers => vec![k],
        Ring::Rationals => vec![],
        Ring::IntegersMod(m) => vec![gcd(k, m)],
        Ring::PrimeField(p) if k.is_multiple_of(p) => vec![0],
        Ring::PrimeField(_) => vec![],
    };
    ModuleExpr::from_cyclic_orders(ring, &without_units(orders, ring))
}

/// `{ r in R : k r = 0 }`
fn annihilator(k: u64, ring: Ring) -> ModuleExpr {
    let orders: Vec<u64> = match ring {
        Ring::Integers | Ring::Rationals => vec![],
        Ring::IntegersMod(m) => vec![gcd(k, m)],
        Ring::PrimeField(p) if k.is_multiple_of(p) => vec![0],
        Ring::PrimeField(_) => vec![],
    };
    ModuleExpr::from_cyclic_orders(ring, &without_units(orders, ring))
}

fn without_units(orders: Vec<u64>, ring: Ring) -> Vec<u64> {
    orders
        .into_iter()
        .filter(|&d| d != 1)
        .map(|d| match ring {
            Ring::IntegersMod(m) if d == m => 0,
            _ => d,
        })
        .collect()
}

/// `H_*(B Z/k; R)` in degrees `0..=max_degree`: `R` in degree 0, `R/kR` in odd
/// degrees and the `k`-torsion of `R` in positive even degrees.
pub fn cyclic_group_homology(k: u64, ring: Ring, max_degree: usize) -> GradedModule {
    assert!(k >= 1, "cyclic group order must be positive");
    let degrees = (0..=max_degree)
        .map(|n| match n {
            0 => ModuleExpr::free(ring, 1),
            n if n % 2 == 1 => quotient(k, ring),
            _ => annihilator(k, ring),
        })
        .collect();
    GradedModule::new(ring, degrees)
}

/// Closed form of the periodic term for a class with `N = Z/k`: `H_1(BZ/k; R)`
/// for odd parity and `H_2(BZ/k; R)` for even parity. Zero over `Q`.
pub fn t_star(k: u64, ring: Ring, parity: Parity) -> ModuleExpr {
    assert!(k >= 1, "cyclic group order must be positive");
    match parity {
        Parity::Odd => quotient(k, ring),
        Parity::Even => annihilator(k, ring),
    }
}

/// A finite window of an infinite direct sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSum {
    pub value: ModuleExpr,
    /// Degrees that were summed.
    pub degrees: Vec<usize>,
    /// Highest degree available; terms above it were dropped.
    pub truncated_above: usize,
}

/// Sum of the even (or odd) degree entries of `table`. The reduced even sum
/// skips degree 0.
pub fn k_star(table: &GradedModule, parity: Parity, reduced: bool) -> TruncatedSum {
    let start = match (parity, reduced) {
        (Parity::Even, false) => 0,
        (Parity::Even, true) => 2,
        (Parity::Odd, _) => 1,
    };
    let degrees: Vec<usize> = (start..=table.max_degree()).step_by(2).collect();
    let value = ModuleExpr::sum(table.ring(), degrees.iter().map(|&n| table.degree(n)));
    TruncatedSum {
        value,
        degrees,
        truncated_above: table.max_degree(),
    }
}

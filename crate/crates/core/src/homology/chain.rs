//! Homology of chain complexes of free abelian groups.

use super::snf::{smith_normal_form, IntMatrix};
use super::{gcd, GradedModule, HomologyError, ModuleExpr, Ring};

/// Integral homology in degrees `0..=N` for boundaries `[d1, ..., dN]`.
///
/// `boundaries[n - 1]` is `d_n : C_n -> C_{n-1}`, a `dim C_{n-1} x dim C_n`
/// matrix. Chain groups above `N` are zero. Each entry is a module over `Z`.
pub fn integral_homology(boundaries: &[IntMatrix]) -> Result<Vec<ModuleExpr>, HomologyError> {
    let top = boundaries.len();
    for n in 1..top {
        let (lower, upper) = (&boundaries[n - 1], &boundaries[n]);
        if lower.cols() != upper.rows() {
            return Err(HomologyError::ShapeMismatch { degree: n + 1 });
        }
        let comp = lower.mul(upper);
        for i in 0..comp.rows() {
            for j in 0..comp.cols() {
                if comp.get(i, j) != 0 {
                    return Err(HomologyError::NotAComplex {
                        degree: n,
                        row: i,
                        col: j,
                    });
                }
            }
        }
    }
    if top == 0 {
        return Ok(vec![ModuleExpr::zero(Ring::Integers)]);
    }
    let mut dims = vec![boundaries[0].rows()];
    dims.extend(boundaries.iter().map(IntMatrix::cols));
    let snfs: Vec<_> = boundaries.iter().map(smith_normal_form).collect();
    // rank of d_n, with d_0 = d_{N+1} = 0
    let rank = |n: usize| if n == 0 || n > top { 0 } else { snfs[n - 1].rank() };
    let out = (0..=top)
        .map(|n| {
            let free = dims[n] - rank(n) - rank(n + 1);
            let mut orders: Vec<u64> = if n < top {
                snfs[n].factors.iter().copied().filter(|&d| d > 1).collect()
            } else {
                Vec::new()
            };
            orders.extend(std::iter::repeat_n(0, free));
            ModuleExpr::from_cyclic_orders(Ring::Integers, &orders)
        })
        .collect();
    Ok(out)
}

/// Homology with coefficients in `ring`, degrees `0..=max_degree`.
///
/// Computed integrally, then `H_n(C; R) = H_n(C) (x) R  (+)  Tor(H_{n-1}(C), R)`.
pub fn chain_homology(
    boundaries: &[IntMatrix],
    ring: Ring,
    max_degree: usize,
) -> Result<GradedModule, HomologyError> {
    let integral = integral_homology(boundaries)?;
    let at = |n: usize| integral.get(n).cloned().unwrap_or_else(|| ModuleExpr::zero(Ring::Integers));
    let degrees = (0..=max_degree)
        .map(|n| {
            let here = at(n);
            let mut orders: Vec<u64> = vec![0; here.free_rank()];
            orders.extend(here.torsion().into_iter().filter_map(|d| tensor(d, ring)));
            if n > 0 {
                orders.extend(at(n - 1).torsion().into_iter().filter_map(|d| tor(d, ring)));
            }
            ModuleExpr::from_cyclic_orders(ring, &orders)
        })
        .collect();
    Ok(GradedModule::new(ring, degrees))
}

/// Order of `Z/d (x) R` as a cyclic `R`-module, `None` when it vanishes.
fn tensor(d: u64, ring: Ring) -> Option<u64> {
    match ring {
        Ring::Integers => Some(d),
        Ring::Rationals => None,
        Ring::IntegersMod(m) => match gcd(d, m) {
            1 => None,
            g if g == m => Some(0),
            g => Some(g),
        },
        Ring::PrimeField(p) => d.is_multiple_of(p).then_some(0),
    }
}

/// `Tor(Z/d, R)` is the `d`-torsion of `R`, which for these rings is cyclic
/// of the same order as `Z/d (x) R`, except over `Z` where it is zero.
fn tor(d: u64, ring: Ring) -> Option<u64> {
    match ring {
        Ring::Integers => None,
        _ => tensor(d, ring),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one(v: i128) -> IntMatrix {
        IntMatrix::from_rows(&[vec![v]], 1)
    }

    #[test]
    fn zero_boundaries_over_q() {
        let h = chain_homology(&[one(0), one(0)], Ring::Rationals, 2).unwrap();
        assert!(h.degrees().iter().all(|m| m.dim() == Some(1)));
    }

    #[test]
    fn periodic_resolution_of_z2() {
        let b = [one(0), one(2), one(0), one(2), one(0), one(2)];
        let h = chain_homology(&b, Ring::Integers, 5).unwrap();
        assert_eq!(h.degree(0).cyclic_orders(), vec![0]);
        for n in [1, 3, 5] {
            assert_eq!(h.degree(n).cyclic_orders(), vec![2]);
        }
        for n in [2, 4] {
            assert!(h.degree(n).is_zero());
        }
    }

    #[test]
    fn universal_coefficients_mod_6() {
        let b = [one(0), one(4), one(0), one(4)];
        let h = chain_homology(&b, Ring::IntegersMod(6), 3).unwrap();
        assert_eq!(h.degree(0).cyclic_orders(), vec![0]);
        assert_eq!(h.degree(1).cyclic_orders(), vec![2]);
        assert_eq!(h.degree(2).cyclic_orders(), vec![2]);
    }

    #[test]
    fn rejects_non_complexes() {
        let b = [one(1), one(1)];
        assert_eq!(
            chain_homology(&b, Ring::Integers, 2),
            Err(HomologyError::NotAComplex {
                degree: 1,
                row: 0,
                col: 0
            })
        );
        let bad_shape = [IntMatrix::zeros(1, 2), IntMatrix::zeros(3, 1)];
        assert_eq!(
            integral_homology(&bad_shape),
            Err(HomologyError::ShapeMismatch { degree: 2 })
        );
    }

    #[test]
    fn simplicial_circle_and_projective_plane() {
        // circle: 3 vertices, 3 edges
        let d1 = IntMatrix::from_rows(&[vec![-1, 0, 1], vec![1, -1, 0], vec![0, 1, -1]], 3);
        let h = integral_homology(&[d1]).unwrap();
        assert_eq!(h[0].cyclic_orders(), vec![0]);
        assert_eq!(h[1].cyclic_orders(), vec![0]);
        // minimal CW structure of RP^2: Z <-2- Z <-0- Z
        let h = integral_homology(&[one(0), one(2)]).unwrap();
        assert_eq!(h[1].cyclic_orders(), vec![2]);
        assert!(h[2].is_zero());
        let f2 = chain_homology(&[one(0), one(2)], Ring::PrimeField(2), 2).unwrap();
        assert_eq!(
            f2.degrees().iter().map(|m| m.dim().unwrap()).collect::<Vec<_>>(),
            vec![1, 1, 1]
        );
    }

    #[test]
    fn euler_characteristic_over_fields() {
        let d1 = IntMatrix::from_rows(&[vec![2, 0, 4], vec![1, 3, -1]], 3);
        // d2 spans the kernel of d1: (-2, 1, 1)
        let d2 = IntMatrix::from_rows(&[vec![-2], vec![1], vec![1]], 1);
        let dims = [2i64, 3, 1];
        let chi: i64 = dims.iter().enumerate().map(|(n, d)| if n % 2 == 0 { *d } else { -d }).sum();
        for ring in [Ring::Rationals, Ring::PrimeField(2), Ring::PrimeField(3), Ring::PrimeField(5)] {
            let h = chain_homology(&[d1.clone(), d2.clone()], ring, 2).unwrap();
            let hchi: i64 = h
                .degrees()
                .iter()
                .enumerate()
                .map(|(n, m)| {
                    let d = m.dim().unwrap() as i64;
                    if n % 2 == 0 {
                        d
                    } else {
                        -d
                    }
                })
                .sum();
            assert_eq!(hchi, chi, "{ring}");
        }
    }
}

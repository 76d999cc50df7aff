//! Reduced cyclic and periodic cyclic homology of `R[H * G]`, assembled class
//! by class over a finite window.
//!
//! The reduced theory of `R[H * G]` splits as the reduced theories of `R[H]`
//! and `R[G]` plus one summand per mixed class `x`. A mixed class has
//! centralizer `Z` containing `<x>` with index `k(x)`, so its contribution is
//! `H_*(B Z/k; R)` for cyclic homology and the two-periodic term
//! [`t_star`](super::t_star) for periodic cyclic homology.
//!
//! The finite-group summands are evaluated only where the group order is
//! invertible in `R`; there every class contributes one copy of `R` per even
//! degree and the identity class drops out of the reduced theory. Elsewhere
//! they stay symbolic.

use std::sync::Arc;

use super::cyclic::{cyclic_group_homology, t_star};
use super::{GradedModule, HomologyError, ModuleExpr, Ring};
use crate::conjugacy::enumerate_u_classes;
use crate::group::{GroupTable, Side};
use crate::roots::primitive_root;
use crate::word::{FreeProduct, ReducedWord};
use crate::Parity;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theory {
    Cyclic,
    PeriodicCyclic,
}

impl Theory {
    pub fn tag(self) -> &'static str {
        match self {
            Theory::Cyclic => "HC",
            Theory::PeriodicCyclic => "PHC",
        }
    }
}

/// Which graded pieces a report covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Window {
    /// Degrees `0..=max_degree`.
    Degrees(usize),
    /// A single parity of a two-periodic theory.
    Parity(Parity),
}

impl Window {
    pub fn slot_count(self) -> usize {
        match self {
            Window::Degrees(d) => d + 1,
            Window::Parity(_) => 1,
        }
    }

    pub fn slot_labels(self) -> Vec<String> {
        match self {
            Window::Degrees(d) => (0..=d).map(|n| n.to_string()).collect(),
            Window::Parity(p) => vec![p.to_string()],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SideSummand {
    Evaluated(Vec<ModuleExpr>),
    /// Printed as e.g. `~HC(R[H])`.
    Symbolic(String),
}

/// Contribution of one mixed conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct URow {
    pub word: ReducedWord,
    pub k: usize,
    pub values: Vec<ModuleExpr>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssemblyReport {
    pub theory: Theory,
    pub ring: Ring,
    pub window: Window,
    /// Mixed classes are listed up to this many `(h, g)` pairs.
    pub class_bound: usize,
    pub h_side: SideSummand,
    pub g_side: SideSummand,
    pub rows: Vec<URow>,
    /// Slot-wise direct sum of everything, when both sides are evaluated.
    pub total: Option<Vec<ModuleExpr>>,
}

impl AssemblyReport {
    pub fn truncation_notice(&self) -> String {
        let classes = format!(
            "mixed classes limited to cyclically reduced length <= {}",
            2 * self.class_bound
        );
        match self.window {
            Window::Degrees(d) => format!("truncated: degrees <= {d}; {classes}"),
            Window::Parity(p) => format!("truncated: {p} parity only; {classes}"),
        }
    }
}

/// Whether the finite-group closed form is valid: `|t|` invertible in `ring`.
fn order_invertible(t: &GroupTable, ring: Ring) -> bool {
    t.is_trivial()
        || match ring {
            Ring::Rationals => true,
            Ring::PrimeField(p) => !(t.order() as u64).is_multiple_of(p),
            Ring::Integers | Ring::IntegersMod(_) => false,
        }
}

/// Reduced cyclic homology of `R[t]` when `|t|` is invertible in `R`: one
/// `R` in every even degree for each non-identity class.
pub fn char0_side_contribution(
    t: &GroupTable,
    ring: Ring,
    max_degree: usize,
) -> Result<GradedModule, HomologyError> {
    if !order_invertible(t, ring) {
        return Err(HomologyError::UnsupportedRing(ring));
    }
    let classes = t.conjugacy_classes().len() - 1;
    let degrees = (0..=max_degree)
        .map(|n| {
            if n % 2 == 0 {
                ModuleExpr::free(ring, classes)
            } else {
                ModuleExpr::zero(ring)
            }
        })
        .collect();
    Ok(GradedModule::new(ring, degrees))
}

/// Reduced periodic cyclic homology of `R[t]` under the same hypothesis.
pub fn char0_side_periodic(t: &GroupTable, ring: Ring, parity: Parity) -> Result<ModuleExpr, HomologyError> {
    if !order_invertible(t, ring) {
        return Err(HomologyError::UnsupportedRing(ring));
    }
    Ok(match parity {
        Parity::Even => ModuleExpr::free(ring, t.conjugacy_classes().len() - 1),
        Parity::Odd => ModuleExpr::zero(ring),
    })
}

fn side(theory: Theory, side: Side, evaluated: Result<Vec<ModuleExpr>, HomologyError>) -> SideSummand {
    match evaluated {
        Ok(v) => SideSummand::Evaluated(v),
        Err(_) => SideSummand::Symbolic(format!("~{}(R[{side}])", theory.tag())),
    }
}

fn finish(
    theory: Theory,
    ring: Ring,
    window: Window,
    class_bound: usize,
    h_side: SideSummand,
    g_side: SideSummand,
    rows: Vec<URow>,
) -> AssemblyReport {
    let total = match (&h_side, &g_side) {
        (SideSummand::Evaluated(a), SideSummand::Evaluated(b)) => Some(
            (0..window.slot_count())
                .map(|i| {
                    let parts = [&a[i], &b[i]].into_iter().chain(rows.iter().map(|r| &r.values[i]));
                    ModuleExpr::sum(ring, parts)
                })
                .collect(),
        ),
        _ => None,
    };
    AssemblyReport {
        theory,
        ring,
        window,
        class_bound,
        h_side,
        g_side,
        rows,
        total,
    }
}

fn mixed_classes(ctx: &Arc<FreeProduct>, class_bound: usize) -> Vec<(ReducedWord, usize)> {
    enumerate_u_classes(ctx, class_bound)
        .into_iter()
        .map(|w| {
            let k = primitive_root(&w).expect("mixed class words are nontrivial").multiplicity;
            (w, k)
        })
        .collect()
}

/// Reduced `HC_*(R[H * G])` in degrees `0..=max_degree`, with mixed classes
/// of at most `class_bound` pairs.
pub fn assemble_reduced_hc(ctx: &Arc<FreeProduct>, ring: Ring, max_degree: usize, class_bound: usize) -> AssemblyReport {
    let eval = |t: &GroupTable| char0_side_contribution(t, ring, max_degree).map(|g| g.degrees().to_vec());
    let h_side = side(Theory::Cyclic, Side::H, eval(ctx.h()));
    let g_side = side(Theory::Cyclic, Side::G, eval(ctx.g()));
    let rows = mixed_classes(ctx, class_bound)
        .into_iter()
        .map(|(word, k)| URow {
            values: cyclic_group_homology(k as u64, ring, max_degree).degrees().to_vec(),
            word,
            k,
        })
        .collect();
    finish(
        Theory::Cyclic,
        ring,
        Window::Degrees(max_degree),
        class_bound,
        h_side,
        g_side,
        rows,
    )
}

/// Reduced `PHC_*(R[H * G])` in one parity.
pub fn assemble_reduced_phc(ctx: &Arc<FreeProduct>, ring: Ring, parity: Parity, class_bound: usize) -> AssemblyReport {
    let eval = |t: &GroupTable| char0_side_periodic(t, ring, parity).map(|m| vec![m]);
    let h_side = side(Theory::PeriodicCyclic, Side::H, eval(ctx.h()));
    let g_side = side(Theory::PeriodicCyclic, Side::G, eval(ctx.g()));
    let rows = mixed_classes(ctx, class_bound)
        .into_iter()
        .map(|(word, k)| URow {
            values: vec![t_star(k as u64, ring, parity)],
            word,
            k,
        })
        .collect();
    finish(
        Theory::PeriodicCyclic,
        ring,
        Window::Parity(parity),
        class_bound,
        h_side,
        g_side,
        rows,
    )
}

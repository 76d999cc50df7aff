//! Exact computation in the free product `H * G` of two finite groups.
//!
//! - [`group`]: finite groups from validated multiplication tables.
//! - [`word`]: reduced words and their arithmetic.
//! - [`conjugacy`]: cyclic reduction, canonical class names, enumeration of
//!   the mixed classes.
//! - [`roots`]: primitive roots, periodicity of pair sequences, centralizers.
//! - [`homology`]: Smith normal form, chain homology with coefficients, and
//!   the class-by-class assembly of reduced (periodic) cyclic homology of the
//!   group ring `R[H * G]`.

use std::fmt;

pub mod conjugacy;
pub mod group;
pub mod homology;
pub mod roots;
pub mod word;

pub use conjugacy::{are_conjugate, canonical_class, cyclic_reduce, enumerate_u_classes, ClassId, CyclicForm};
pub use group::{load_group, GroupDocument, GroupError, GroupTable, Side, SideElement};
pub use roots::{centralizer, class_invariants, commutes, lemma1_decompose, primitive_root, CentralizerDescriptor, ElementOrder, RootData, RootError};
pub use word::{FreeProduct, Letter, ReducedWord, SyllableType, WordError};

/// Even or odd part of a two-periodic graded object.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => f.write_str("even"),
            Parity::Odd => f.write_str("odd"),
        }
    }
}

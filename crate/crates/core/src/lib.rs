//! Finite Coxeter group combinatorics and weak Bruhat interval modules of
//! 0-Hecke algebras.
//!
//! The crate is organized around five pieces:
//!
//! - [`coxeter`]: engines for finite Coxeter systems (symmetric groups,
//!   hyperoctahedral groups, dihedral groups, and groups built from a
//!   crystallographic Cartan matrix), together with length, descents, the
//!   Bruhat order, both weak orders, and the weak-order lattice operations.
//! - [`intervals`]: left weak Bruhat intervals `[u,v]_L`, their colored
//!   digraphs, and the combinatorial criteria for colored-digraph and
//!   descent-preserving isomorphism.
//! - [`linalg`]: small exact linear algebra toolkit, generic over the scalar
//!   type; the crate-level alias [`Rat`] (arbitrary-precision rationals) is
//!   what every exact computation uses.
//! - [`hecke`]: the 0-Hecke action on an interval as explicit matrices, the
//!   exact intertwiner space between two interval modules, and a randomized
//!   module-isomorphism oracle that is independent of the combinatorial
//!   criterion.
//! - [`classify`]: enumeration of all intervals of a group, the partition
//!   into descent-preserving equivalence classes, and verification of the
//!   structural facts about each class (min/max endpoint intervals,
//!   anti-inclusion, oracle/criterion agreement).
//!
//! All arithmetic on module coefficients is exact; no floating point enters
//! any isomorphism decision.

pub mod classify;
pub mod coxeter;
pub mod error;
pub mod hecke;
pub mod intervals;
pub mod linalg;
pub mod rng;

/// Exact scalar used for all module computations.
pub type Rat = num_rational::BigRational;

/// Integer backing [`Rat`].
pub type Int = num_bigint::BigInt;

pub use classify::{
    crosscheck_classification, d_classes, enumerate_intervals, verify_anti_inclusion,
    verify_min_max_intervals, CrosscheckReport, DClass, MinMaxIntervals, SamplePolicy,
};
pub use coxeter::{CoxeterSpec, Element, GeneratorSet, GroupEngine};
pub use error::Error;
pub use hecke::{
    act_word, action_matrix, intertwiner_space, module_iso_oracle, support, ActionMatrix,
    IntertwinerSpace, OracleConfig, OracleOutcome,
};
pub use intervals::{
    canonical_map, colored_digraph, is_colored_digraph_iso, is_descent_preserving_iso,
    transport_subinterval, Arc, ColoredDigraph, WeakInterval,
};
pub use linalg::{Matrix, Scalar};

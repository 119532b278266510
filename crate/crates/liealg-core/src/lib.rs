//! Exact-arithmetic workbench for finite-dimensional Lie algebras over the
//! Gaussian rationals.
//!
//! The crate is organized around a handful of small layers:
//!
//! - [`scalar`]: the field ℚ(i) with canonical forms and an exact text syntax;
//! - [`linalg`]: dense Gauss–Jordan elimination, nullspaces and tracked row
//!   spaces, all with lexicographic pivoting so results are deterministic;
//! - [`algebra`] and [`catalog`]: structure-constant presentations, bracket
//!   evaluation, Jacobi verification, basis changes, and the built-in algebra
//!   catalog (Lorentz, sim(2), isim(2), Poincaré, Galilei);
//! - [`contraction`]: singular basis-family limits in normal form, via both
//!   the direct structure-constant formulas and a symbolic Laurent route;
//! - [`fourdim`]: the antisymmetric four-index generator labelling of the
//!   Lorentz and sim(2) algebras, its closed-form structure-constant tensors,
//!   and the inhomogeneous-sector solver;
//! - [`projective`]: infinitesimal-exponent (2-cocycle) diagnostics — second
//!   cohomology, central-charge elimination and R-sets;
//! - [`textfmt`]: the algebra-definition file format.

// Tensor-index mathematics reads clearest with explicit index loops.
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod catalog;
pub mod contraction;
pub mod error;
pub mod fourdim;
pub mod linalg;
pub mod projective;
pub mod scalar;
pub mod textfmt;

pub use algebra::{
    check_jacobi, derived_subalgebra, transform_basis, AlgebraElement, JacobiReport, LieAlgebra,
    LinearMap, StructureTensor,
};
pub use catalog::{catalog, CATALOG_NAMES};
pub use error::Error;
pub use scalar::{GaussianRational, Rational};

//! Hermite-Taylor time-domain solver for Maxwell's equations in 1-D and 2-D (TMz),
//! with a correction-function boundary closure on grid-aligned domains.
//!
//! The interior scheme evolves field values and space derivatives through order `m`
//! on staggered primal/dual Cartesian meshes (order `2m+1`). Boundary nodes are
//! updated each step by minimizing a local space-time least-squares functional
//! (PDE residual + boundary-condition residual + mismatch against the interior
//! solution) over tensor polynomials of degree `k`.
//!
//! Layout:
//! - [`polynomial`]: tensor polynomial algebra, Legendre bases, Gauss quadrature, jets
//! - [`linalg`]: dense LU, condition estimation, QR eigenvalues
//! - [`hermite`]: meshes, degrees of freedom, interpolation, Taylor recursion, half steps
//! - [`cfm`]: boundary patches, functional assembly, cached factorizations
//! - [`solver`]: problem definitions and full time stepping
//! - [`harness`]: convergence / stability / conditioning studies
//! - [`cli`]: configuration files, command dispatch, CSV emission

pub mod cfm;
pub mod cli;
pub mod error;
pub mod harness;
pub mod hermite;
pub mod linalg;
pub mod polynomial;
pub mod solver;
pub(crate) mod util;

pub use error::{Error, Result};

//! Quantum contextuality of a relativistic spin-1/2 particle.
//!
//! The crate builds the Dirac gamma matrices and the commuting observable
//! families derived from them, the exact bound states of the Dirac-Coulomb
//! problem, and free Dirac plane-wave spinors. Spatial degrees of freedom are
//! integrated out into a 4x4 spin density, against which the CHSH-like and
//! Peres-Mermin noncontextuality inequalities are evaluated.
//!
//! Natural units `M = hbar = c = 1` are used throughout. Energies are reported
//! as `mu = E / Mc^2` and radial coordinates as the dimensionless `rho`.

pub mod cli;
pub mod clifford;
pub mod contextuality;
pub mod error;
pub mod freeparticle;
pub mod hydrogen;
pub mod specfun;
pub mod spindensity;

pub use clifford::{ComplexMatrix4, ExactMatrix4, Family, ObservableTriple};
pub use contextuality::{InequalityKind, InequalityReport, PeresMerminSquare};
pub use error::{Error, Result};
pub use hydrogen::{QuantumNumbers, SpinorField};
pub use specfun::QuadratureSpec;
pub use spindensity::ReducedSpinDensity;

/// Fine-structure constant used by default, `1/137.036`.
pub const FINE_STRUCTURE: f64 = 1.0 / 137.036;

/// Tolerance for comparing floating 4x4 matrices.
pub const MATRIX_TOL: f64 = 1e-12;

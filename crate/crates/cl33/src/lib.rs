//! A Clifford algebra engine for the six-dimensional space with three
//! plus-signature and three minus-signature generators.
//!
//! The crate is organised as a pipeline:
//!
//! * [`algebra`] — blades and multivectors over an exact rational ring or
//!   `f64`, with the geometric product computed from a compile-time sign
//!   table.
//! * [`symbolic`] — trigonometric polynomials (polynomial × {1, cos, sin}
//!   of affine phases) over six coordinates, closed under sum, product and
//!   partial differentiation, plus the first-order vector derivative and
//!   transverse derivatives built on them.
//! * [`maxwell`] — assembly of odd-grade field specifications, their
//!   decomposition into four even-sector families, extraction of
//!   electromagnetic fields, sources and potentials, and exact residual
//!   checks of the field equations.
//! * [`transforms`] — rotors (closed-form bivector exponentials), sandwich
//!   conjugation, boosts and chirality classification.
//! * [`contour`] — argument-principle charge counting for rational
//!   functions on circular contours, with a branch-tracked logarithmic
//!   variant reported alongside.
//! * [`wavepacket`] — transverse plane waves, two-sided resonant packets,
//!   the eigenfrequency ladder and sampled-grid edge diagnostics.
//! * [`report`] — machine-readable verification reports shared by tests
//!   and the CLI.
//! * [`parse`] — text parsers for trig-polynomials and field
//!   specification files.

pub mod algebra;
pub mod contour;
pub mod error;
pub mod maxwell;
pub mod parse;
pub mod report;
pub mod scalar;
pub mod symbolic;
pub mod transforms;
pub mod wavepacket;

pub use error::Error;

/// Default absolute tolerance for floating-point verification checks.
///
/// Overridable at the CLI via the `CL33_TOLERANCE` environment variable;
/// library callers pass tolerances explicitly where they matter.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

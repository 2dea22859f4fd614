//! Dimer statistics for the two-periodic weighted Aztec diamond.
//!
//! The crate computes entries of the inverse Kasteleyn matrix and one-point
//! dimer correlations by three independent routes and cross-validates them:
//!
//! * [`kasteleyn`] — finite-size ground truth: assemble the Kasteleyn matrix,
//!   factor it once, and read off inverse entries, correlations and the
//!   partition function by direct sparse linear algebra.
//! * [`exact_formula`] — the exact double contour-integral representation of
//!   the same inverse entries (whole-plane kernel minus four circle
//!   integrals), valid at any finite size.
//! * [`mesoscopic`] — the joint limit where the size grows and the weight
//!   `a = 1 - B m^{-1/2}` tends to one: saddle points, steepest-descent
//!   contours, and the limiting integrals `I0..I4` and `psi` that govern the
//!   subleading term of the one-point correlation.
//!
//! Supporting modules: [`lattice`] (geometry, weights, sign matrices),
//! [`special`] (branch-aware square roots and related functions),
//! [`whole_plane`] (translation-invariant inverse kernel and its expansion
//! coefficients), [`sampler`] (weighted domino-shuffling Monte Carlo) and
//! [`quad`] (quadrature building blocks).
//!
//! Each capability has a runnable demonstration under `examples/`.

pub mod error;
pub mod exact_formula;
pub mod kasteleyn;
pub mod lattice;
pub mod mesoscopic;
pub mod quad;
pub mod report;
pub mod sampler;
pub mod special;
pub mod whole_plane;

pub use error::{Error, Result};
pub use lattice::{DiamondSpec, EdgeRef, Vertex, VertexClass};

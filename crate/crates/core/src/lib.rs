//! Invariants of rational hyperplane arrangements in projective space.
//!
//! Given an arrangement of distinct hyperplanes in P^n with rational
//! coefficients, this crate builds the intersection lattice of the
//! corresponding central arrangement, computes its Möbius function, and
//! derives from them:
//!
//! - the characteristic and Poincaré polynomials and their reduced forms,
//! - the Grothendieck class and Hodge–Deligne polynomial of the complement,
//! - Chern–Schwartz–MacPherson classes of the complement and of the union
//!   of the hyperplanes, with the combinatorial effectivity criterion,
//! - Betti numbers of the complement,
//! - the sigma vector encoding the Segre class of the singularity subscheme
//!   and its push-forward,
//! - candidate exponents when the reduced characteristic polynomial splits
//!   over the integers.
//!
//! Everything is computed in exact arithmetic. An independent oracle reduces
//! the arrangement modulo a good prime and counts points of the complement
//! over F_p by enumeration; the counts must equal the characteristic
//! polynomial evaluated at p.
//!
//! The linear-algebra core is generic over the [`scalar::Scalar`] trait and
//! instantiated at [`Rat`] for lattice construction and at [`fp::Fp`] for the
//! finite-field reduction.

pub mod builtins;
pub mod charpoly;
pub mod classes;
pub mod ffcount;
pub mod fp;
pub mod lattice;
pub mod mat;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod segre;

/// Arbitrary-precision rational scalar used for all lattice computations.
pub type Rat = num::BigRational;

/// Arbitrary-precision integer.
pub type Int = num::BigInt;

/// Matrix over the rationals.
pub type RatMat = mat::Mat<Rat>;

/// Matrix over a prime field.
pub type FpMat = mat::Mat<fp::Fp>;

pub use lattice::{Arrangement, ArrangementError, Flat, IntersectionLattice};
pub use poly::IntPoly;

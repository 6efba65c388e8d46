//! Characteristic and Poincaré polynomials of an arrangement, their reduced
//! forms, and splitting of the reduced characteristic polynomial over the
//! integers (the exponent check for free arrangements).

use num::traits::{One, Zero};
use num::BigInt;

use crate::lattice::IntersectionLattice;
use crate::poly::IntPoly;

/// chi(t) = sum over flats of mu(x) t^{dim x}; monic of degree n+1, and
/// chi(1) = 0 because the Möbius values over the whole lattice cancel.
pub fn char_poly(lattice: &IntersectionLattice) -> IntPoly {
    let mut coeffs = vec![BigInt::zero(); lattice.n() + 2];
    for f in lattice.flats() {
        coeffs[f.dim()] += f.mobius();
    }
    IntPoly::from_coeffs(coeffs)
}

/// Exact quotient chi / (t - 1). A nonzero remainder means the lattice the
/// polynomial came from is corrupted, which panics inside `div_exact`.
pub fn reduced_char_poly(chi: &IntPoly) -> IntPoly {
    chi.div_exact(&IntPoly::from_i64(&[-1, 1]))
}

/// Poincaré polynomial via signed coefficient reversal:
/// pi(t) = (-t)^{n+1} chi(-1/t) where n+1 = deg chi.
pub fn poincare_poly(chi: &IntPoly) -> IntPoly {
    let m = chi.degree().expect("characteristic polynomial is nonzero");
    chi.reverse_signed(m)
}

/// Exact quotient pi / (1 + t); its coefficients are the Betti numbers of the
/// projective complement.
pub fn reduced_poincare_poly(pi: &IntPoly) -> IntPoly {
    pi.div_exact(&IntPoly::from_i64(&[1, 1]))
}

/// Outcome of trying to factor the reduced characteristic polynomial into
/// monic integer linear factors. Splitting is a necessary condition for
/// freeness of the arrangement (by Terao's factorization theorem), not a
/// decision procedure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitResult {
    Split {
        /// Roots of the reduced polynomial, ascending with multiplicity.
        roots: Vec<BigInt>,
        /// The candidate exponents: the roots together with the 1 removed by
        /// the reduction chi / (t - 1).
        exponents: Vec<BigInt>,
        /// When the hyperplane count is supplied: whether the exponents sum
        /// to it, as they must for a free arrangement.
        sum_matches_count: Option<bool>,
    },
    NotSplit,
}

pub fn split_over_z(chibar: &IntPoly, d: Option<usize>) -> SplitResult {
    match chibar.integer_roots() {
        None => SplitResult::NotSplit,
        Some(roots) => {
            let mut exponents = roots.clone();
            exponents.push(BigInt::one());
            exponents.sort();
            let sum_matches_count =
                d.map(|d| exponents.iter().sum::<BigInt>() == BigInt::from(d));
            SplitResult::Split {
                roots,
                exponents,
                sum_matches_count,
            }
        }
    }
}

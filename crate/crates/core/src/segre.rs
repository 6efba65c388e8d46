//! The transform between the Segre class of the singularity subscheme of an
//! arrangement and the reduced Poincaré polynomial, together with the
//! push-forward class and Betti numbers recovered from the sigma vector.
//!
//! The sigma vector encodes [P^n] - s(S, P^n) pushed forward to P^n as
//! sum sigma_i h^i cap [P^n]; sigma is always derived here from the lattice
//! (through the reduced Poincaré polynomial), never from defining equations.

use std::fmt;

use num::traits::{One, Zero};
use num::BigInt;
use thiserror::Error;

use crate::classes::{BettiVector, ChowClass, NegativeBettiError};
use crate::poly::{binomial, IntPoly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SigmaError {
    #[error("sigma must have n+1 entries for some n >= 0")]
    Empty,
    #[error("sigma_0 must equal 1, got {0}")]
    BadLeadingEntry(BigInt),
}

/// The integers sigma_0..sigma_n with sigma_0 = 1: the singularity subscheme
/// is a proper subscheme, so the [P^n] term of its Segre class vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaVector {
    sigma: Vec<BigInt>,
}

impl SigmaVector {
    pub fn new(sigma: Vec<BigInt>) -> Result<Self, SigmaError> {
        match sigma.first() {
            None => Err(SigmaError::Empty),
            Some(first) if !first.is_one() => Err(SigmaError::BadLeadingEntry(first.clone())),
            _ => Ok(SigmaVector { sigma }),
        }
    }

    pub fn from_i64(sigma: &[i64]) -> Self {
        SigmaVector::new(sigma.iter().map(|&x| BigInt::from(x)).collect()).unwrap()
    }

    /// Ambient projective dimension.
    pub fn n(&self) -> usize {
        self.sigma.len() - 1
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.sigma
    }
}

impl fmt::Display for SigmaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.sigma.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// Reduced Poincaré polynomial from sigma: coefficient k is
/// sum_{i<=k} C(k,i) (d-1)^{k-i} sigma_i, for k = 0..n.
pub fn pi_from_sigma(sigma: &SigmaVector, d: usize) -> IntPoly {
    assert!(d >= 1);
    let step = BigInt::from(d as i64 - 1);
    let n = sigma.n();
    let coeffs = (0..=n)
        .map(|k| {
            (0..=k)
                .map(|i| binomial(k, i) * pow(&step, k - i) * &sigma.entries()[i])
                .sum()
        })
        .collect();
    IntPoly::from_coeffs(coeffs)
}

/// Inverse binomial transform: sigma_k = sum_{i<=k} C(k,i) (1-d)^{k-i} b_i,
/// an exact two-sided inverse of `pi_from_sigma`.
pub fn sigma_from_pi(pibar: &IntPoly, d: usize, n: usize) -> SigmaVector {
    assert!(d >= 1);
    assert!(
        pibar.degree().is_none_or(|deg| deg <= n),
        "polynomial degree exceeds ambient dimension"
    );
    let step = BigInt::from(1 - d as i64);
    let sigma: Vec<BigInt> = (0..=n)
        .map(|k| {
            (0..=k)
                .map(|i| binomial(k, i) * pow(&step, k - i) * pibar.coeff(i))
                .sum()
        })
        .collect();
    SigmaVector::new(sigma).expect("a reduced Poincaré polynomial has constant term 1")
}

/// The push-forward of the Segre class of the singularity subscheme, as a
/// class sum s_i [P^i] with s_i = -sigma_{n-i} for i < n and s_n = 0.
pub fn segre_pushforward(sigma: &SigmaVector) -> ChowClass {
    let n = sigma.n();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (i, coeff) in coeffs.iter_mut().enumerate().take(n) {
        *coeff = -sigma.entries()[n - i].clone();
    }
    ChowClass::from_coeffs(n, coeffs)
}

/// Cohomology ranks of the complement straight from sigma and the degree:
/// the same arithmetic as `pi_from_sigma`, flagged if any rank comes out
/// negative (such a sigma does not arise from an arrangement).
pub fn betti_from_sigma(sigma: &SigmaVector, d: usize) -> Result<BettiVector, NegativeBettiError> {
    crate::classes::betti(&pi_from_sigma(sigma, d), sigma.n())
}

fn pow(base: &BigInt, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..k {
        acc *= base;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn coordinate_planes_in_p3() {
        let sigma = SigmaVector::from_i64(&[1, 0, -3, 10]);
        assert_eq!(pi_from_sigma(&sigma, 3), IntPoly::from_i64(&[1, 2, 1]));
        assert_eq!(
            sigma_from_pi(&IntPoly::from_i64(&[1, 2, 1]), 3, 3),
            sigma
        );
        assert_eq!(
            segre_pushforward(&sigma),
            ChowClass::from_i64(3, &[-10, 3, 0, 0])
        );
        let b = betti_from_sigma(&sigma, 3).unwrap();
        assert_eq!(
            b.ranks(),
            &[BigInt::from(1), BigInt::from(2), BigInt::from(1), BigInt::zero()]
        );
    }

    #[test]
    fn nine_line_sigma_vector() {
        let sigma = SigmaVector::from_i64(&[
            1,
            0,
            -49,
            664,
            -6528,
            54272,
            -389120,
            2260992,
            -7340032,
            -58720256,
        ]);
        assert_eq!(pi_from_sigma(&sigma, 9), IntPoly::from_i64(&[1, 8, 15]));
        assert_eq!(
            sigma_from_pi(&IntPoly::from_i64(&[1, 8, 15]), 9, 9),
            sigma
        );
        let b = betti_from_sigma(&sigma, 9).unwrap();
        assert_eq!(b.ranks()[..3], [BigInt::from(1), BigInt::from(8), BigInt::from(15)]);
        assert!(b.ranks()[3..].iter().all(|r| r.is_zero()));
    }

    #[test]
    fn four_lines_sigma() {
        // pibar = 1 + 3t + 2t^2 recovers sigma = (1, 0, -7): the three
        // transversal points count once each and the triple point counts 4
        let sigma = sigma_from_pi(&IntPoly::from_i64(&[1, 3, 2]), 4, 2);
        assert_eq!(sigma, SigmaVector::from_i64(&[1, 0, -7]));
        assert_eq!(pi_from_sigma(&sigma, 4), IntPoly::from_i64(&[1, 3, 2]));
        assert_eq!(segre_pushforward(&sigma), ChowClass::from_i64(2, &[7, 0, 0]));
    }

    #[test]
    fn pencil_sigma() {
        // pencil of three lines in the plane: pibar = 1 + 2t
        let sigma = sigma_from_pi(&IntPoly::from_i64(&[1, 2]), 3, 2);
        assert_eq!(sigma, SigmaVector::from_i64(&[1, 0, -4]));
        assert_eq!(segre_pushforward(&sigma), ChowClass::from_i64(2, &[4, 0, 0]));
    }

    #[test]
    fn trivial_sigma_expands_geometrically() {
        let sigma = SigmaVector::from_i64(&[1, 0, 0, 0]);
        let pibar = pi_from_sigma(&sigma, 4);
        assert_eq!(pibar, IntPoly::from_i64(&[1, 3, 9, 27]));
        // smooth case: empty singularity subscheme, zero class
        assert_eq!(segre_pushforward(&sigma), ChowClass::zero(3));
    }

    #[test]
    fn two_points_on_a_line() {
        let sigma = SigmaVector::from_i64(&[1, 0]);
        let b = betti_from_sigma(&sigma, 2).unwrap();
        assert_eq!(b.ranks(), &[BigInt::one(), BigInt::one()]);
    }

    #[test]
    fn degenerate_degree_one_transform_is_identity() {
        let pibar = IntPoly::from_i64(&[1, 5, -2, 7]);
        let sigma = sigma_from_pi(&pibar, 1, 3);
        assert_eq!(sigma.entries(), pibar.coeffs());
        assert_eq!(pi_from_sigma(&sigma, 1), pibar);
    }

    #[test]
    fn sigma_validation() {
        assert_eq!(SigmaVector::new(vec![]), Err(SigmaError::Empty));
        assert_eq!(
            SigmaVector::new(vec![BigInt::from(2)]),
            Err(SigmaError::BadLeadingEntry(BigInt::from(2)))
        );
    }

    proptest! {
        #[test]
        fn transform_round_trip(
            entries in proptest::collection::vec(-1_000_000i64..=1_000_000, 0..10),
            d in 1usize..=12
        ) {
            let mut sigma = vec![1i64];
            sigma.extend(entries);
            let sigma = SigmaVector::from_i64(&sigma);
            let pibar = pi_from_sigma(&sigma, d);
            prop_assert_eq!(sigma_from_pi(&pibar, d, sigma.n()), sigma);
        }
    }
}

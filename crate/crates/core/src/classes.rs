//! Classes of the complement and of the arrangement itself: Grothendieck
//! class, Chern–Schwartz–MacPherson classes, the effectivity criterion,
//! Betti numbers, the Hodge–Deligne polynomial, and the stable-birational
//! constant.

use std::fmt;

use num::traits::{One, Signed, Zero};
use num::BigInt;
use thiserror::Error;

use crate::lattice::IntersectionLattice;
use crate::poly::{binomial, IntPoly};

/// An integer class in the Chow group of P^n on the [P^k] basis:
/// `coeffs[k]` is the coefficient of [P^k]. Classes are never held as
/// polynomials in the hyperplane class h; `from_h_poly` converts from that
/// convention, truncating h^j for j > n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowClass {
    n: usize,
    coeffs: Vec<BigInt>,
}

impl ChowClass {
    pub fn zero(n: usize) -> Self {
        ChowClass {
            n,
            coeffs: vec![BigInt::zero(); n + 1],
        }
    }

    pub fn from_coeffs(n: usize, coeffs: Vec<BigInt>) -> Self {
        assert_eq!(coeffs.len(), n + 1, "need one coefficient per [P^k]");
        ChowClass { n, coeffs }
    }

    pub fn from_i64(n: usize, coeffs: &[i64]) -> Self {
        ChowClass::from_coeffs(n, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Interpret a polynomial in the hyperplane class h as a class in P^n:
    /// h^j caps to [P^{n-j}], and powers beyond n vanish.
    pub fn from_h_poly(n: usize, h_poly: &IntPoly) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for j in 0..=n.min(h_poly.degree().unwrap_or(0)) {
            coeffs[n - j] = h_poly.coeff(j);
        }
        ChowClass { n, coeffs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Coefficient of [P^k].
    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &ChowClass) -> ChowClass {
        assert_eq!(self.n, other.n);
        ChowClass {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &ChowClass) -> ChowClass {
        assert_eq!(self.n, other.n);
        ChowClass {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &BigInt) -> ChowClass {
        ChowClass {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "[P^{k}]")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// c(TP^n) cap [P^n]: the total Chern class of projective space, with
/// coefficient C(n+1, n-k) on [P^k].
pub fn chern_projective_space(n: usize) -> ChowClass {
    ChowClass {
        n,
        coeffs: (0..=n).map(|k| binomial(n + 1, n - k)).collect(),
    }
}

/// CSM class of a linearly embedded P^{dim-1} inside P^n, where `dim` is the
/// dimension of the corresponding linear subspace of k^{n+1}; the origin
/// (dim 0) has empty projectivization and zero class.
pub fn csm_linear_subspace(dim: usize, n: usize) -> ChowClass {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (k, coeff) in coeffs.iter_mut().enumerate().take(dim) {
        *coeff = binomial(dim, k + 1);
    }
    ChowClass { n, coeffs }
}

/// CSM class of the complement: replace t^k by [P^k] in chibar(t+1).
/// The equivalent h-form h^n chibar(1 + 1/h), expanded and capped, is
/// computed as well and the two must agree.
pub fn csm_complement(chibar: &IntPoly, n: usize) -> ChowClass {
    assert!(
        chibar.degree().is_none_or(|d| d <= n),
        "reduced characteristic polynomial has degree at most n"
    );
    let shifted = chibar.shift_var(1);
    let direct = ChowClass {
        n,
        coeffs: (0..=n).map(|k| shifted.coeff(k)).collect(),
    };

    // h^n chibar(1 + 1/h) = sum_k a_k h^{n-k} (1+h)^k as a polynomial in h
    let mut h_poly = IntPoly::zero();
    let one_plus_h = IntPoly::from_i64(&[1, 1]);
    for k in 0..=chibar.degree().unwrap_or(0) {
        let term = &IntPoly::monomial(n - k, chibar.coeff(k)) * &one_plus_h.pow(k);
        h_poly = &h_poly + &term;
    }
    let via_h = ChowClass::from_h_poly(n, &h_poly);
    assert_eq!(direct, via_h, "the two CSM expansions must agree");
    direct
}

/// CSM class of the union of the hyperplanes, as the complement of the
/// complement: c(TP^n) cap [P^n] minus the CSM class of the complement.
pub fn csm_arrangement_via_complement(lattice: &IntersectionLattice) -> ChowClass {
    let chi = crate::charpoly::char_poly(lattice);
    let chibar = crate::charpoly::reduced_char_poly(&chi);
    chern_projective_space(lattice.n()).sub(&csm_complement(&chibar, lattice.n()))
}

/// CSM class of the union of the hyperplanes by Möbius summation over proper
/// flats: minus the sum of mu(x) times the CSM class of the projectivized
/// flat.
pub fn csm_arrangement_via_mobius(lattice: &IntersectionLattice) -> ChowClass {
    let n = lattice.n();
    let mut acc = ChowClass::zero(n);
    for f in lattice.flats().iter().skip(1) {
        acc = acc.add(&csm_linear_subspace(f.dim(), n).scale(f.mobius()));
    }
    acc.scale(&BigInt::from(-1))
}

/// CSM class of the arrangement. Both computations are run and must agree;
/// a mismatch is an internal error.
pub fn csm_arrangement(lattice: &IntersectionLattice) -> ChowClass {
    let a = csm_arrangement_via_complement(lattice);
    let b = csm_arrangement_via_mobius(lattice);
    assert_eq!(a, b, "CSM inclusion-exclusion and Möbius sum disagree");
    a
}

/// The effectivity polynomial: minus the sum over proper flats of
/// mu(x) (t+1)^{dim x}. Its constant term is 1, and for k >= 1 the
/// coefficient of t^k equals the coefficient of [P^{k-1}] in the CSM class
/// of the arrangement; the CSM class is effective iff all coefficients are
/// nonnegative.
pub fn effectivity_poly(lattice: &IntersectionLattice) -> IntPoly {
    let mut acc = IntPoly::zero();
    let t_plus_one = IntPoly::from_i64(&[1, 1]);
    for f in lattice.flats().iter().skip(1) {
        acc = &acc + &t_plus_one.pow(f.dim()).scale(f.mobius());
    }
    -&acc
}

pub fn is_effective(poly: &IntPoly) -> bool {
    poly.coeffs().iter().all(|c| !c.is_negative())
}

/// Closed form for effectivity of the CSM class of a generic arrangement of
/// d hyperplanes in P^n: always effective on the line, otherwise up to
/// d = n+3 for even n and d = n+4 for odd n.
pub fn generic_effectivity(n: usize, d: usize) -> bool {
    assert!(n >= 1 && d >= 1);
    n == 1 || (n % 2 == 0 && d <= n + 3) || (n % 2 == 1 && d <= n + 4)
}

/// Class of the complement in the Grothendieck ring of varieties, written as
/// a polynomial in the class L of the affine line. The coefficients are
/// exactly those of the reduced characteristic polynomial; substituting a
/// prime power q for L counts points over F_q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrothClass(IntPoly);

impl GrothClass {
    pub fn poly(&self) -> &IntPoly {
        &self.0
    }

    pub fn eval_at(&self, q: &BigInt) -> BigInt {
        self.0.eval(q)
    }
}

impl fmt::Display for GrothClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.display_with_var("L"))
    }
}

/// [M] for the projective complement: chibar read in L.
pub fn grothendieck_class(chibar: &IntPoly) -> GrothClass {
    GrothClass(chibar.clone())
}

/// [M] for the affine complement: (L - 1) times the projective class, which
/// equals chi(L).
pub fn grothendieck_class_affine(chibar: &IntPoly) -> GrothClass {
    GrothClass(&IntPoly::from_i64(&[-1, 1]) * chibar)
}

/// The Hodge–Deligne polynomial of the complement is chibar(uv); it only
/// involves the product uv, so it is stored univariately in that symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeDeligne(IntPoly);

impl HodgeDeligne {
    pub fn poly(&self) -> &IntPoly {
        &self.0
    }
}

impl fmt::Display for HodgeDeligne {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.display_with_var("uv"))
    }
}

pub fn hodge_deligne(chibar: &IntPoly) -> HodgeDeligne {
    HodgeDeligne(chibar.clone())
}

/// The class of the arrangement in the ring of stable birational equivalence
/// classes: 1 - chibar(0), an integer.
pub fn stable_birational_constant(chibar: &IntPoly) -> BigInt {
    BigInt::one() - chibar.coeff(0)
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("rank of H^{index} would be negative ({value}); not realizable over the rationals")]
pub struct NegativeBettiError {
    pub index: usize,
    pub value: BigInt,
}

/// Ranks of the rational cohomology of a complement, r_0..r_top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiVector {
    ranks: Vec<BigInt>,
}

impl BettiVector {
    pub fn ranks(&self) -> &[BigInt] {
        &self.ranks
    }
}

fn betti_from_poly(poly: &IntPoly, top: usize) -> Result<BettiVector, NegativeBettiError> {
    let ranks: Vec<BigInt> = (0..=top).map(|k| poly.coeff(k)).collect();
    for (index, value) in ranks.iter().enumerate() {
        if value.is_negative() {
            return Err(NegativeBettiError {
                index,
                value: value.clone(),
            });
        }
    }
    Ok(BettiVector { ranks })
}

/// Betti numbers of the projective complement: coefficients of the reduced
/// Poincaré polynomial, padded to r_0..r_n. Negative coefficients are
/// rejected, as they cannot occur for an arrangement realizable over the
/// rationals.
pub fn betti(pibar: &IntPoly, n: usize) -> Result<BettiVector, NegativeBettiError> {
    betti_from_poly(pibar, n)
}

/// Betti numbers of the affine complement: coefficients of the full Poincaré
/// polynomial, r_0..r_{n+1}.
pub fn betti_affine(pi: &IntPoly, n: usize) -> Result<BettiVector, NegativeBettiError> {
    betti_from_poly(pi, n + 1)
}

//! Prime-field elements with a runtime modulus.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::traits::{One, ToPrimitive, Zero};
use num::{BigInt, Integer};

use crate::Rat;

/// An element of F_p. The modulus is carried per element; `Zero::zero()` and
/// `One::one()` produce unbound constants (modulus 0) that attach to the
/// modulus of the first bound operand they meet. Arithmetic across two
/// different nonzero moduli panics.
#[derive(Clone, Copy, Debug)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: u64, modulus: u64) -> Self {
        assert!(modulus > 1, "modulus must exceed 1");
        Fp {
            value: value % modulus,
            modulus,
        }
    }

    /// Reduce an arbitrary-precision integer mod p.
    pub fn from_int(x: &BigInt, p: u64) -> Self {
        let m = BigInt::from(p);
        let r = x.mod_floor(&m).to_u64().expect("residue fits in u64");
        Fp::new(r, p)
    }

    /// Reduce a rational mod p; `None` when the denominator vanishes mod p.
    pub fn from_rat(x: &Rat, p: u64) -> Option<Self> {
        let den = Fp::from_int(x.denom(), p);
        if den.is_zero() {
            return None;
        }
        Some(Fp::from_int(x.numer(), p) / den)
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn unified(self, other: Fp) -> u64 {
        match (self.modulus, other.modulus) {
            (0, m) | (m, 0) => m,
            (a, b) => {
                assert_eq!(a, b, "mixed prime-field moduli");
                a
            }
        }
    }

    fn inverse(&self) -> Fp {
        assert!(self.modulus > 0, "cannot invert an unbound constant");
        assert!(self.value != 0, "division by zero in F_p");
        // extended Euclid on (value, modulus)
        let (mut r0, mut r1) = (self.value as i128, self.modulus as i128);
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        assert_eq!(r0, 1, "modulus is not prime or value not invertible");
        let p = self.modulus as i128;
        Fp::new(((s0 % p + p) % p) as u64, self.modulus)
    }
}

/// Equality compares residues; all bound values are kept reduced.
impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl Eq for Fp {}

impl std::hash::Hash for Fp {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.value.hash(state);
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let m = self.unified(rhs);
        if m == 0 {
            assert!(self.value + rhs.value < 2, "unbound constant arithmetic");
            return Fp {
                value: self.value + rhs.value,
                modulus: 0,
            };
        }
        Fp {
            value: (self.value % m + rhs.value % m) % m,
            modulus: m,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        let m = self.unified(rhs);
        if m == 0 {
            assert!(self.value >= rhs.value, "unbound constant arithmetic");
            return Fp {
                value: self.value - rhs.value,
                modulus: 0,
            };
        }
        Fp {
            value: (self.value % m + m - rhs.value % m) % m,
            modulus: m,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        let m = self.unified(rhs);
        if m == 0 {
            return Fp {
                value: self.value * rhs.value,
                modulus: 0,
            };
        }
        Fp {
            value: ((self.value % m) as u128 * (rhs.value % m) as u128 % m as u128) as u64,
            modulus: m,
        }
    }
}

impl Div for Fp {
    type Output = Fp;
    fn div(self, rhs: Fp) -> Fp {
        if rhs.modulus == 0 {
            assert_eq!(rhs.value, 1, "division by an unbound constant");
            return self;
        }
        self * rhs.inverse()
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        if self.modulus == 0 {
            assert_eq!(self.value, 0, "negation of an unbound constant");
            return self;
        }
        Fp {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp {
            value: 0,
            modulus: 0,
        }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp {
            value: 1,
            modulus: 0,
        }
    }
    fn is_one(&self) -> bool {
        self.value == 1
    }
}

/// Trial-division primality test; adequate at desk scale.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut k = 3;
    while k * k <= p {
        if p % k == 0 {
            return false;
        }
        k += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::Mat;

    #[test]
    fn arithmetic_mod_7() {
        let a = Fp::new(3, 7);
        let b = Fp::new(5, 7);
        assert_eq!(a + b, Fp::new(1, 7));
        assert_eq!(a - b, Fp::new(5, 7));
        assert_eq!(a * b, Fp::new(1, 7));
        assert_eq!(a / b, Fp::new(2, 7)); // 3 * 5^{-1} = 3 * 3 = 2
        assert_eq!(-a, Fp::new(4, 7));
    }

    #[test]
    fn rational_reduction() {
        let half = Rat::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(Fp::from_rat(&half, 5), Some(Fp::new(3, 5))); // 2 * 3 = 6 = 1
        assert_eq!(Fp::from_rat(&half, 2), None);
        let neg = Rat::new(BigInt::from(-1), BigInt::from(3));
        assert_eq!(Fp::from_rat(&neg, 5), Some(Fp::new(3, 5))); // -1/3 = 4 * 2 = 8 = 3
    }

    #[test]
    fn rref_over_prime_field() {
        // [[1,1],[1,-1]] is invertible mod 3 but rank 1 mod 2.
        let m3 = Mat::from_rows(vec![
            vec![Fp::new(1, 3), Fp::new(1, 3)],
            vec![Fp::new(1, 3), Fp::new(2, 3)],
        ]);
        assert_eq!(m3.rank(), 2);
        let m2 = Mat::from_rows(vec![
            vec![Fp::new(1, 2), Fp::new(1, 2)],
            vec![Fp::new(1, 2), Fp::new(1, 2)],
        ]);
        assert_eq!(m2.rank(), 1);
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..=30).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}

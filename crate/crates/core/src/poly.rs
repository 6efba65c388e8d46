//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients, plus the small amount of exact arithmetic the invariants
//! need: evaluation, shift of variable, exact division, integer roots.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::traits::{One, Signed, ToPrimitive, Zero};
use num::BigInt;

/// Integer polynomial; `coeffs[k]` is the coefficient of `t^k`, the leading
/// coefficient is nonzero, and the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::from_coeffs(vec![BigInt::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c * t^k`.
    pub fn monomial(k: usize, c: BigInt) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// `t - a`, the monic linear factor with root `a`.
    pub fn linear_root(a: &BigInt) -> Self {
        IntPoly::from_coeffs(vec![-a.clone(), BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, s: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Substitute `t -> t + s` (Horner on the shifted variable).
    pub fn shift_var(&self, s: i64) -> IntPoly {
        let shift = IntPoly::from_coeffs(vec![BigInt::from(s), BigInt::one()]);
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &shift) + &IntPoly::monomial(0, c.clone());
        }
        acc
    }

    /// `(-t)^m * self(-1/t)` for a polynomial of degree at most `m`:
    /// coefficient `k` of the result is `(-1)^k` times coefficient `m - k`.
    pub fn reverse_signed(&self, m: usize) -> IntPoly {
        assert!(self.degree().is_none_or(|d| d <= m), "degree exceeds reversal bound");
        let coeffs = (0..=m)
            .map(|k| {
                let c = self.coeff(m - k);
                if k % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .collect();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn pow(&self, k: usize) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Quotient and remainder by a monic divisor.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let d = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1 - d;
            let lead = rem.last().unwrap().clone();
            if !lead.is_zero() {
                quot[k] = lead.clone();
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    let v = &rem[k + i] - &lead * c;
                    rem[k + i] = v;
                }
            }
            rem.pop();
        }
        (IntPoly::from_coeffs(quot), IntPoly::from_coeffs(rem))
    }

    /// Exact division by a monic divisor. A nonzero remainder is an internal
    /// error (the divisibilities used in this crate are theorems), so it
    /// panics rather than returning an error value.
    pub fn div_exact(&self, divisor: &IntPoly) -> IntPoly {
        let (q, r) = self.div_rem_monic(divisor);
        assert!(r.is_zero(), "exact division left remainder {r:?}");
        q
    }

    /// All integer roots with multiplicity, ascending, provided the monic
    /// polynomial splits completely over the integers; `None` otherwise.
    pub fn integer_roots(&self) -> Option<Vec<BigInt>> {
        assert!(self.is_monic(), "root splitting expects a monic polynomial");
        let mut roots = Vec::new();
        let mut p = self.clone();
        // factor out t^k first
        while p.degree().unwrap() > 0 && p.coeff(0).is_zero() {
            roots.push(BigInt::zero());
            p = IntPoly::from_coeffs(p.coeffs[1..].to_vec());
        }
        while p.degree().unwrap() > 0 {
            let mut found = None;
            for c in candidate_divisors(&p.coeff(0)) {
                for r in [c.clone(), -c.clone()] {
                    if p.eval(&r).is_zero() {
                        found = Some(r);
                        break;
                    }
                }
                if found.is_some() {
                    break;
                }
            }
            let r = found?;
            // peel off the full multiplicity before trying other candidates
            while p.degree().unwrap() > 0 && p.eval(&r).is_zero() {
                roots.push(r.clone());
                p = p.div_exact(&IntPoly::linear_root(&r));
            }
        }
        roots.sort();
        Some(roots)
    }

    pub fn display_with_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let wrap = |k: usize| -> String {
            if var.len() > 1 {
                match k {
                    1 => format!("({var})"),
                    _ => format!("({var})^{k}"),
                }
            } else {
                match k {
                    1 => var.to_string(),
                    _ => format!("{var}^{k}"),
                }
            }
        };
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if k == 0 || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            if k > 0 {
                out.push_str(&wrap(k));
            }
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with_var("t"))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let v = &coeffs[i + j] + a * b;
                coeffs[i + j] = v;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

/// Positive divisors of `|c|`; just `[1]` when `c` is `0` or a unit.
fn candidate_divisors(c: &BigInt) -> Vec<BigInt> {
    let mag = c.abs();
    if mag.is_zero() || mag.is_one() {
        return vec![BigInt::one()];
    }
    if let Some(m) = mag.to_u64() {
        let mut small = Vec::new();
        let mut large = Vec::new();
        let mut k = 1u64;
        while k * k <= m {
            if m % k == 0 {
                small.push(BigInt::from(k));
                if k != m / k {
                    large.push(BigInt::from(m / k));
                }
            }
            k += 1;
        }
        large.reverse();
        small.extend(large);
        small
    } else {
        // constant term too large to factor; integer roots still must divide
        // it, so try only the trivial candidates
        vec![BigInt::one(), mag]
    }
}

/// Binomial coefficient C(n, k) as a big integer (0 when k > n).
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

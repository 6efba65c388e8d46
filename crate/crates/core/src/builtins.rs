//! Built-in arrangement generators.

use num::traits::{One, Zero};
use num::BigInt;
use thiserror::Error;

use crate::lattice::Arrangement;
use crate::Rat;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuiltinError {
    #[error("unknown builtin '{0}'; available: boolean, generic, pencil, counterexample")]
    Unknown(String),
    #[error("builtin '{name}' takes {expected} parameter(s), got {got}")]
    BadArity {
        name: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("builtin '{name}' needs {what} >= 1")]
    OutOfRange { name: &'static str, what: &'static str },
}

/// The n+1 coordinate hyperplanes of P^n.
pub fn boolean(n: usize) -> Arrangement {
    let rows = (0..=n)
        .map(|i| {
            (0..=n)
                .map(|c| if c == i { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    Arrangement::new(n, rows).expect("coordinate forms are distinct and nonzero")
}

/// d hyperplanes in P^n meeting with normal crossings, realized on the
/// moment curve: row i is (1, a, a^2, ..., a^n) with a = i, so any n+1 rows
/// form a Vandermonde matrix and are independent.
pub fn generic(d: usize, n: usize) -> Arrangement {
    let rows = (1..=d)
        .map(|i| {
            let a = BigInt::from(i);
            let mut power = BigInt::one();
            (0..=n)
                .map(|_| {
                    let entry = Rat::from_integer(power.clone());
                    power *= &a;
                    entry
                })
                .collect()
        })
        .collect();
    Arrangement::new(n, rows).expect("moment-curve rows are distinct and nonzero")
}

/// d hyperplanes of P^n through a fixed codimension-2 subspace: the forms
/// x0 + i*x1 for i = 0..d-1, padded with zeros.
pub fn pencil(d: usize, n: usize) -> Arrangement {
    let rows = (0..d)
        .map(|i| {
            let mut row = vec![Rat::zero(); n + 1];
            row[0] = Rat::one();
            row[1] = Rat::from_integer(BigInt::from(i));
            row
        })
        .collect();
    Arrangement::new(n, rows).expect("pencil rows are distinct and nonzero")
}

/// The free arrangement of nine lines in P^2 with exponents 1, 3, 5 whose
/// CSM class (after coning to P^9) is not effective:
/// x0 x1 x2 (x0-x1)(x0-x2)(x1-x2)(x0+x1)(x0+x2)(x1+x2).
pub fn counterexample() -> Arrangement {
    Arrangement::from_integer_rows(
        2,
        &[
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![1, -1, 0],
            vec![1, 0, -1],
            vec![0, 1, -1],
            vec![1, 1, 0],
            vec![1, 0, 1],
            vec![0, 1, 1],
        ],
    )
    .expect("the nine forms are distinct and nonzero")
}

/// Three concurrent lines plus a transversal in P^2: x, y, x+y, z.
/// A small fixture with one triple point, used throughout the tests.
pub fn four_lines() -> Arrangement {
    Arrangement::from_integer_rows(
        2,
        &[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0], vec![0, 0, 1]],
    )
    .expect("the four forms are distinct and nonzero")
}

/// Look up a generator by CLI name and apply integer parameters.
pub fn by_name(name: &str, params: &[u64]) -> Result<Arrangement, BuiltinError> {
    let arity = |expected: usize, builtin: &'static str| {
        if params.len() != expected {
            Err(BuiltinError::BadArity {
                name: builtin,
                expected,
                got: params.len(),
            })
        } else {
            Ok(())
        }
    };
    let positive = |value: u64, builtin: &'static str, what: &'static str| {
        if value < 1 {
            Err(BuiltinError::OutOfRange {
                name: builtin,
                what,
            })
        } else {
            Ok(value as usize)
        }
    };
    match name {
        "boolean" => {
            arity(1, "boolean")?;
            Ok(boolean(positive(params[0], "boolean", "n")?))
        }
        "generic" => {
            arity(2, "generic")?;
            let d = positive(params[0], "generic", "d")?;
            let n = positive(params[1], "generic", "n")?;
            Ok(generic(d, n))
        }
        "pencil" => {
            arity(2, "pencil")?;
            let d = positive(params[0], "pencil", "d")?;
            let n = positive(params[1], "pencil", "n")?;
            Ok(pencil(d, n))
        }
        "counterexample" => {
            arity(0, "counterexample")?;
            Ok(counterexample())
        }
        other => Err(BuiltinError::Unknown(other.to_string())),
    }
}

//! Field scalar trait for the generic linear-algebra core.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::traits::{One, Zero};

/// An exact field element. Linear algebra in this crate is generic over this
/// trait and instantiated at `Rat` (arbitrary-precision rationals) and `Fp`
/// (prime fields); there is no floating-point instantiation.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Eq
        + Hash
        + Debug
        + Display
        + Zero
        + One
        + Neg<Output = Self>
        + Add<Output = Self>
        + Sub<Output = Self>
        + Mul<Output = Self>
        + Div<Output = Self>
{
}

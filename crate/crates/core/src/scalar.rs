//! Coefficient types.
//!
//! Every ring and form in this crate is generic over an exact signed integer
//! type. Machine integers are used through their `checked_*` operations so
//! that overflow surfaces as [`Error::Overflow`] instead of wrapping;
//! [`num_bigint::BigInt`] satisfies the same bound and never overflows.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// An exact signed integer usable as a Chow-ring or form coefficient.
pub trait Scalar:
    Integer
    + Signed
    + Clone
    + Debug
    + Display
    + Hash
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
{
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + Hash
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
{
}

#[inline]
pub(crate) fn add<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow("addition"))
}

#[inline]
pub(crate) fn sub<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_sub(b).ok_or(Error::Overflow("subtraction"))
}

#[inline]
pub(crate) fn mul<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow("multiplication"))
}

#[inline]
pub(crate) fn neg<T: Scalar>(a: &T) -> Result<T> {
    sub(&T::zero(), a)
}

/// Small integer constant converted into `T`.
#[inline]
pub(crate) fn lit<T: Scalar>(v: i64) -> Result<T> {
    T::from_i64(v).ok_or(Error::Overflow("constant conversion"))
}

/// `a·b + c·d + ...` over a slice of factor pairs.
pub(crate) fn dot<T: Scalar>(terms: &[(&T, &T)]) -> Result<T> {
    terms
        .iter()
        .try_fold(T::zero(), |acc, &(a, b)| add(&acc, &mul(a, b)?))
}

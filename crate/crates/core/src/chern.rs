//! Chern-class bookkeeping for rank-two bundles on `P²`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::chow::{p2_mul, p2_unit_inverse, P2Class};
use crate::error::{domain, Error, Result};
use crate::scalar::{add, dot, lit, mul, sub, Scalar};

/// Chern classes `(c₁, c₂)` of a rank-two bundle, in units of `H` and `H²`.
///
/// Every integer pair is realized by some bundle, so no invariant is imposed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ChernPair<T> {
    pub c1: T,
    pub c2: T,
}

impl<T> ChernPair<T> {
    pub const fn new(c1: T, c2: T) -> Self {
        Self { c1, c2 }
    }
}

impl<T: fmt::Display> fmt::Display for ChernPair<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.c1, self.c2)
    }
}

/// Parses `"c1,c2"` with no whitespace, e.g. `-1,5`.
impl<T: FromStr> FromStr for ChernPair<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || domain(format!("malformed Chern pair {s:?}: expected c1,c2"));
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        Ok(Self {
            c1: a.parse().map_err(|_| bad())?,
            c2: b.parse().map_err(|_| bad())?,
        })
    }
}

/// Chern classes of `E ⊗ O(l)`: `(c₁ + 2l, c₂ + l·c₁ + l²)`.
pub fn twist<T: Scalar>(p: &ChernPair<T>, l: &T) -> Result<ChernPair<T>> {
    let two_l = add(l, l)?;
    Ok(ChernPair {
        c1: add(&p.c1, &two_l)?,
        c2: add(&p.c2, &dot(&[(l, &p.c1), (l, l)])?)?,
    })
}

/// `1 + c₁H + c₂H²`.
pub fn total_chern<T: Scalar>(p: &ChernPair<T>) -> P2Class<T> {
    P2Class::new(T::one(), p.c1.clone(), p.c2.clone())
}

/// Chern data of the monad `O(c₁−d) → O(c₁−d) ⊕ F ⊕ O(d) → O(d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonadSpec<T> {
    pub d: T,
    /// The middle-term bundle `F`.
    pub bundle: ChernPair<T>,
}

impl<T: Scalar> MonadSpec<T> {
    pub fn new(bundle: ChernPair<T>, d: T) -> Self {
        Self { d, bundle }
    }

    pub fn c1_total(&self) -> &T {
        &self.bundle.c1
    }

    /// Degree of the injected line bundle, `c₁ − d`.
    pub fn sub_degree(&self) -> Result<T> {
        sub(&self.bundle.c1, &self.d)
    }
}

/// Chern classes of the monad's middle cohomology, from total Chern classes:
/// `c(middle) · c(sub)⁻¹ · c(quot)⁻¹`.
pub fn monad_cohomology_chern<T: Scalar>(m: &MonadSpec<T>) -> Result<ChernPair<T>> {
    let c_sub = P2Class::line(m.sub_degree()?);
    let c_quot = P2Class::line(m.d.clone());
    let c_middle = p2_mul(&p2_mul(&c_sub, &total_chern(&m.bundle))?, &c_quot)?;
    let quotient = p2_mul(
        &p2_mul(&c_middle, &p2_unit_inverse(&c_sub)?)?,
        &p2_unit_inverse(&c_quot)?,
    )?;
    let [c0, c1, c2] = quotient.into_coeffs();
    if !c0.is_one() {
        return Err(Error::Consistency(format!(
            "monad cohomology has total Chern class with constant term {c0}"
        )));
    }
    Ok(ChernPair { c1, c2 })
}

/// Length of the zero scheme of a section of `E(−N)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SerreLength<T> {
    pub length: T,
    /// Set when the length is negative, which no actual section can produce.
    pub negative: bool,
}

/// `N² − N·c₁ + c₂`, the second Chern class of `E(−N)`.
pub fn serre_length<T: Scalar>(p: &ChernPair<T>, n: &T) -> Result<SerreLength<T>> {
    let length = add(&sub(&mul(n, n)?, &mul(n, &p.c1)?)?, &p.c2)?;
    let negative = length.is_negative();
    Ok(SerreLength { length, negative })
}

/// Topological characteristic classes of the underlying complex surface bundle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharClasses<T> {
    /// `c₁ mod 2`, as 0 or 1.
    pub w2: u8,
    /// `c₁² − 2c₂`.
    pub p1: T,
}

pub fn char_classes<T: Scalar>(p: &ChernPair<T>) -> Result<CharClasses<T>> {
    let w2 = if p.c1.is_odd() { 1 } else { 0 };
    let p1 = sub(&mul(&p.c1, &p.c1)?, &mul(&lit(2)?, &p.c2)?)?;
    Ok(CharClasses { w2, p1 })
}

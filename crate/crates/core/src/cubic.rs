//! The integral cubic form `aH + bτ ↦ (aH + bτ)³` on the Picard group of
//! `P(E)`, its discriminants, and the `GL₂(Z)` substitution action.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::chern::ChernPair;
use crate::error::{domain, Error, Result};
use crate::orbits::discriminant;
use crate::scalar::{add, dot, lit, mul, neg, sub, Scalar};

/// `A x³ + B x²y + C xy² + D y³`, stored as `[A, B, C, D]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryCubicForm<T> {
    coeffs: [T; 4],
}

impl<T: Scalar> BinaryCubicForm<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Self {
            coeffs: [a, b, c, d],
        }
    }

    pub fn coeffs(&self) -> &[T; 4] {
        &self.coeffs
    }

    /// Value at `(x, y)`.
    pub fn eval(&self, x: &T, y: &T) -> Result<T> {
        let [a, b, c, d] = &self.coeffs;
        let x2 = mul(x, x)?;
        let y2 = mul(y, y)?;
        dot(&[
            (a, &mul(&x2, x)?),
            (b, &mul(&x2, y)?),
            (c, &mul(x, &y2)?),
            (d, &mul(&y2, y)?),
        ])
    }
}

impl<T: Scalar + Serialize> Serialize for BinaryCubicForm<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("BinaryCubicForm", 2)?;
        s.serialize_field("coeffs", &self.coeffs)?;
        s.serialize_field("vars", &["a", "b"])?;
        s.end()
    }
}

/// `form_eval(f, x, y)`.
pub fn form_eval<T: Scalar>(f: &BinaryCubicForm<T>, x: &T, y: &T) -> Result<T> {
    f.eval(x, y)
}

/// A 2×2 integer matrix of determinant ±1, rows `[[m00, m01], [m10, m11]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct UnimodularMatrix<T> {
    rows: [[T; 2]; 2],
}

impl<T: Scalar> UnimodularMatrix<T> {
    pub fn new(m00: T, m01: T, m10: T, m11: T) -> Result<Self> {
        let det = sub(&mul(&m00, &m11)?, &mul(&m01, &m10)?)?;
        if !(det.is_one() || (-det.clone()).is_one()) {
            return Err(domain(format!(
                "matrix [[{m00},{m01}],[{m10},{m11}]] has determinant {det}, not ±1"
            )));
        }
        Ok(Self {
            rows: [[m00, m01], [m10, m11]],
        })
    }

    pub fn identity() -> Self {
        Self {
            rows: [[T::one(), T::zero()], [T::zero(), T::one()]],
        }
    }

    pub fn rows(&self) -> &[[T; 2]; 2] {
        &self.rows
    }

    pub fn det(&self) -> T {
        let [[a, b], [c, d]] = &self.rows;
        a.clone() * d.clone() - b.clone() * c.clone()
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let [[a, b], [c, d]] = &self.rows;
        let [[e, f], [g, h]] = &other.rows;
        Self::new(
            dot(&[(a, e), (b, g)])?,
            dot(&[(a, f), (b, h)])?,
            dot(&[(c, e), (d, g)])?,
            dot(&[(c, f), (d, h)])?,
        )
    }
}

/// Cubic form of the Picard group of `P(E)` in coordinates `(a, b)`:
/// `3a²b − 3c₁ab² + (c₁² − c₂)b³`.
pub fn picard_cubic<T: Scalar>(p: &ChernPair<T>) -> Result<BinaryCubicForm<T>> {
    Ok(BinaryCubicForm::new(
        T::zero(),
        lit(3)?,
        mul(&lit(-3)?, &p.c1)?,
        sub(&mul(&p.c1, &p.c1)?, &p.c2)?,
    ))
}

/// Classical discriminant `18ABCD − 4B³D + B²C² − 4AC³ − 27A²D²`.
pub fn cubic_discriminant_standard<T: Scalar>(f: &BinaryCubicForm<T>) -> Result<T> {
    let [a, b, c, d] = &f.coeffs;
    let abcd = mul(&mul(a, b)?, &mul(c, d)?)?;
    let b3d = mul(&mul(&mul(b, b)?, b)?, d)?;
    let b2c2 = mul(&mul(b, b)?, &mul(c, c)?)?;
    let ac3 = mul(&mul(&mul(c, c)?, c)?, a)?;
    let a2d2 = mul(&mul(a, a)?, &mul(d, d)?)?;
    let terms = [
        mul(&lit(18)?, &abcd)?,
        mul(&lit(-4)?, &b3d)?,
        b2c2,
        mul(&lit(-4)?, &ac3)?,
        mul(&lit(-27)?, &a2d2)?,
    ];
    terms.iter().try_fold(T::zero(), |acc, t| add(&acc, t))
}

/// `c₁² − 4c₂`, checked against the classical discriminant of the Picard
/// cubic, which equals `−27 · (c₁² − 4c₂)`.
pub fn picard_discriminant<T: Scalar>(p: &ChernPair<T>) -> Result<T> {
    let disc = discriminant(p)?;
    let standard = cubic_discriminant_standard(&picard_cubic(p)?)?;
    let rescaled = mul(&lit(-27)?, &disc)?;
    if standard != rescaled {
        return Err(Error::Consistency(format!(
            "classical discriminant {standard} of the Picard cubic for {p} is not -27*({disc})"
        )));
    }
    Ok(disc)
}

/// `f ∘ g`: the form `(x, y) ↦ f(m00·x + m01·y, m10·x + m11·y)`.
pub fn transform_form<T: Scalar>(
    f: &BinaryCubicForm<T>,
    g: &UnimodularMatrix<T>,
) -> Result<BinaryCubicForm<T>> {
    let [[m00, m01], [m10, m11]] = g.rows();
    // Linear forms as coefficient vectors in descending powers of x.
    let u = [m00.clone(), m01.clone()];
    let v = [m10.clone(), m11.clone()];
    let u2 = binary_mul(&u, &u)?;
    let v2 = binary_mul(&v, &v)?;
    let monomials = [
        binary_mul(&u2, &u)?,
        binary_mul(&u2, &v)?,
        binary_mul(&u, &v2)?,
        binary_mul(&v2, &v)?,
    ];
    let mut out = [T::zero(), T::zero(), T::zero(), T::zero()];
    for (coef, mono) in f.coeffs.iter().zip(&monomials) {
        for (o, m) in out.iter_mut().zip(mono) {
            *o = add(o, &mul(coef, m)?)?;
        }
    }
    let [a, b, c, d] = out;
    Ok(BinaryCubicForm::new(a, b, c, d))
}

/// Product of binary forms given by coefficients in descending powers of `x`.
fn binary_mul<T: Scalar>(x: &[T], y: &[T]) -> Result<Vec<T>> {
    let mut out = vec![T::zero(); x.len() + y.len() - 1];
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate() {
            out[i + j] = add(&out[i + j], &mul(a, b)?)?;
        }
    }
    Ok(out)
}

/// `(a, b) ↦ (a − l·b, b)`: the substitution realizing a twist by `l`,
/// `Φ_{twist(p,l)} = Φ_p ∘ shear(l)`.
pub fn shear<T: Scalar>(l: &T) -> Result<UnimodularMatrix<T>> {
    UnimodularMatrix::new(T::one(), neg(l)?, T::zero(), T::one())
}

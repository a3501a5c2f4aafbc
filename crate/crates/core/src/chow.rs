//! Truncated graded rings: `CH*(P²) = Z[H]/(H³)` and the Chow ring of a
//! projectivized rank-two bundle, `Z[H, τ]/(H³, τ² + c₁Hτ + c₂H²)`.
//!
//! Classes of the bundle ring are stored over the fixed basis
//! `(1, H, H², τ, Hτ, H²τ)` with degrees `(0, 1, 2, 1, 2, 3)`.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::chern::ChernPair;
use crate::error::{domain, Result};
use crate::scalar::{add, mul, neg, sub, Scalar};

/// Names of the bundle-ring basis, in storage order.
pub const PB_BASIS: [&str; 6] = ["1", "H", "H2", "tau", "Htau", "H2tau"];

/// Degree of each basis element of [`PbClass`].
pub const PB_DEGREES: [usize; 6] = [0, 1, 2, 1, 2, 3];

/// An element `a₀ + a₁H + a₂H²` of `CH*(P²)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct P2Class<T> {
    coeffs: [T; 3],
}

impl<T: Scalar> P2Class<T> {
    pub fn new(a0: T, a1: T, a2: T) -> Self {
        Self {
            coeffs: [a0, a1, a2],
        }
    }

    pub fn one() -> Self {
        Self::new(T::one(), T::zero(), T::zero())
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero())
    }

    /// `1 + kH`, the total Chern class of `O(k)`.
    pub fn line(k: T) -> Self {
        Self::new(T::one(), k, T::zero())
    }

    pub fn coeffs(&self) -> &[T; 3] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> [T; 3] {
        self.coeffs
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        Ok(Self::new(
            add(&self.coeffs[0], &other.coeffs[0])?,
            add(&self.coeffs[1], &other.coeffs[1])?,
            add(&self.coeffs[2], &other.coeffs[2])?,
        ))
    }

    /// The degree if exactly one coefficient is nonzero.
    pub fn degree(&self) -> Option<usize> {
        homogeneous_degree(self.coeffs.iter().zip([0, 1, 2]))
    }
}

/// Product in `Z[H]/(H³)`.
pub fn p2_mul<T: Scalar>(x: &P2Class<T>, y: &P2Class<T>) -> Result<P2Class<T>> {
    let [a0, a1, a2] = &x.coeffs;
    let [b0, b1, b2] = &y.coeffs;
    let c0 = mul(a0, b0)?;
    let c1 = add(&mul(a0, b1)?, &mul(a1, b0)?)?;
    let c2 = add(&add(&mul(a0, b2)?, &mul(a1, b1)?)?, &mul(a2, b0)?)?;
    Ok(P2Class::new(c0, c1, c2))
}

/// Multiplicative inverse of a class with constant term `±1`.
///
/// Writes `x = u(1 + n)` with `u = ±1` and `n` nilpotent, so that
/// `x⁻¹ = u(1 − n + n²)`.
pub fn p2_unit_inverse<T: Scalar>(x: &P2Class<T>) -> Result<P2Class<T>> {
    let u = x.coeffs[0].clone();
    if !(u.is_one() || (-u.clone()).is_one()) {
        return Err(domain(format!(
            "class with constant term {u} is not a unit in Z[H]/(H^3)"
        )));
    }
    // u⁻¹ = u
    let n = P2Class::new(T::zero(), mul(&u, &x.coeffs[1])?, mul(&u, &x.coeffs[2])?);
    let n2 = p2_mul(&n, &n)?;
    let series = P2Class::new(
        T::one(),
        neg(&n.coeffs[1])?,
        sub(&n2.coeffs[2], &n.coeffs[2])?,
    );
    Ok(P2Class::new(
        mul(&u, &series.coeffs[0])?,
        mul(&u, &series.coeffs[1])?,
        mul(&u, &series.coeffs[2])?,
    ))
}

/// The Chow ring of `P(E)` for a bundle `E` with the given Chern classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PbRing<T> {
    pub chern: ChernPair<T>,
}

impl<T: Scalar> PbRing<T> {
    pub fn new(chern: ChernPair<T>) -> Self {
        Self { chern }
    }

    pub fn class(&self, coeffs: [T; 6]) -> PbClass<T> {
        PbClass {
            coeffs,
            ring: self.clone(),
        }
    }

    pub fn zero(&self) -> PbClass<T> {
        self.class(std::array::from_fn(|_| T::zero()))
    }

    pub fn one(&self) -> PbClass<T> {
        self.basis(0)
    }

    /// The `i`-th basis element in the order `1, H, H², τ, Hτ, H²τ`.
    pub fn basis(&self, i: usize) -> PbClass<T> {
        self.class(std::array::from_fn(|j| {
            if i == j {
                T::one()
            } else {
                T::zero()
            }
        }))
    }

    /// `aH + bτ`.
    pub fn divisor(&self, a: T, b: T) -> PbClass<T> {
        self.class([T::zero(), a, T::zero(), b, T::zero(), T::zero()])
    }

    /// Human-readable presentation of the ring.
    pub fn presentation(&self) -> String {
        format!(
            "Z[H,tau]/<H^3, tau^2 + ({})*H*tau + ({})*H^2>",
            self.chern.c1, self.chern.c2
        )
    }
}

/// A class in a [`PbRing`], coefficients over `(1, H, H², τ, Hτ, H²τ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PbClass<T> {
    coeffs: [T; 6],
    ring: PbRing<T>,
}

impl<T: Scalar> PbClass<T> {
    pub fn coeffs(&self) -> &[T; 6] {
        &self.coeffs
    }

    pub fn ring(&self) -> &PbRing<T> {
        &self.ring
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        same_ring(self, other)?;
        let mut out = self.coeffs.clone();
        for (o, c) in out.iter_mut().zip(&other.coeffs) {
            *o = add(o, c)?;
        }
        Ok(self.ring.class(out))
    }

    pub fn checked_scale(&self, k: &T) -> Result<Self> {
        let mut out = self.coeffs.clone();
        for o in out.iter_mut() {
            *o = mul(o, k)?;
        }
        Ok(self.ring.class(out))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Degree of a homogeneous class; `None` for zero or mixed-degree classes.
    pub fn degree(&self) -> Option<usize> {
        homogeneous_degree(self.coeffs.iter().zip(PB_DEGREES))
    }

    /// Split into `(x₀(H), x₁(H))` with `self = x₀ + x₁τ`.
    fn halves(&self) -> ([T; 3], [T; 3]) {
        let [a, b, c, d, e, f] = self.coeffs.clone();
        ([a, b, c], [d, e, f])
    }
}

impl<T: Scalar + Serialize> Serialize for PbClass<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("PbClass", 2)?;
        s.serialize_field("basis", &PB_BASIS)?;
        s.serialize_field("coeffs", &self.coeffs)?;
        s.end()
    }
}

fn homogeneous_degree<'a, T: Scalar + 'a>(
    terms: impl Iterator<Item = (&'a T, usize)>,
) -> Option<usize> {
    let mut found = None;
    for (c, deg) in terms {
        if c.is_zero() {
            continue;
        }
        match found {
            None => found = Some(deg),
            Some(d) if d == deg => {}
            Some(_) => return None,
        }
    }
    found
}

fn same_ring<T: Scalar>(x: &PbClass<T>, y: &PbClass<T>) -> Result<()> {
    if x.ring != y.ring {
        return Err(domain(format!(
            "operands belong to different rings: (c1,c2)=({},{}) vs ({},{})",
            x.ring.chern.c1, x.ring.chern.c2, y.ring.chern.c1, y.ring.chern.c2
        )));
    }
    Ok(())
}

/// Order in which the two defining relations are applied during a product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reduction {
    /// Substitute `τ²` on the untruncated polynomial, then drop `H`-degree ≥ 3.
    SubstituteFirst,
    /// Truncate every partial product mod `H³`, then substitute `τ²`.
    TruncateFirst,
}

/// Product in the bundle ring.
pub fn pb_mul<T: Scalar>(x: &PbClass<T>, y: &PbClass<T>) -> Result<PbClass<T>> {
    pb_mul_with(x, y, Reduction::SubstituteFirst)
}

/// [`pb_mul`] with an explicit reduction order. Both orders give the same result.
pub fn pb_mul_with<T: Scalar>(
    x: &PbClass<T>,
    y: &PbClass<T>,
    order: Reduction,
) -> Result<PbClass<T>> {
    same_ring(x, y)?;
    let ChernPair { c1, c2 } = &x.ring.chern;
    let (x0, x1) = x.halves();
    let (y0, y1) = y.halves();

    // (x0 + x1τ)(y0 + y1τ) = x0y0 + (x0y1 + x1y0)τ + x1y1·τ²
    // with τ² = −c₂H² − c₁Hτ.
    let (free, tau) = match order {
        Reduction::SubstituteFirst => {
            let x0y0 = poly_mul(&x0, &y0)?;
            let x0y1 = poly_mul(&x0, &y1)?;
            let x1y0 = poly_mul(&x1, &y0)?;
            let x1y1 = poly_mul(&x1, &y1)?;
            let free = poly_sub(&x0y0, &poly_shift_scale(&x1y1, 2, c2)?)?;
            let tau = poly_sub(&poly_add(&x0y1, &x1y0)?, &poly_shift_scale(&x1y1, 1, c1)?)?;
            (truncate(free), truncate(tau))
        }
        Reduction::TruncateFirst => {
            let x0y0 = truncate(poly_mul(&x0, &y0)?);
            let x0y1 = truncate(poly_mul(&x0, &y1)?);
            let x1y0 = truncate(poly_mul(&x1, &y0)?);
            let x1y1 = truncate(poly_mul(&x1, &y1)?);
            let free = truncate(poly_sub(&x0y0, &poly_shift_scale(&x1y1, 2, c2)?)?);
            let tau = truncate(poly_sub(
                &poly_add(&x0y1, &x1y0)?,
                &poly_shift_scale(&x1y1, 1, c1)?,
            )?);
            (free, tau)
        }
    };
    let [a, b, c] = free;
    let [d, e, f] = tau;
    Ok(x.ring.class([a, b, c, d, e, f]))
}

/// Coefficient of `H²τ` in `(aH + bτ)³`, computed by ring multiplication.
pub fn triple_self_product<T: Scalar>(ring: &PbRing<T>, a: T, b: T) -> Result<T> {
    let x = ring.divisor(a, b);
    let cube = pb_mul(&pb_mul(&x, &x)?, &x)?;
    let [_, _, _, _, _, top] = cube.coeffs;
    Ok(top)
}

// Dense polynomials in H, low degree first.

fn poly_mul<T: Scalar>(x: &[T], y: &[T]) -> Result<Vec<T>> {
    let mut out = vec![T::zero(); x.len() + y.len() - 1];
    for (i, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.iter().enumerate() {
            out[i + j] = add(&out[i + j], &mul(a, b)?)?;
        }
    }
    Ok(out)
}

fn poly_add<T: Scalar>(x: &[T], y: &[T]) -> Result<Vec<T>> {
    let n = x.len().max(y.len());
    (0..n)
        .map(|i| {
            let zero = T::zero();
            add(x.get(i).unwrap_or(&zero), y.get(i).unwrap_or(&zero))
        })
        .collect()
}

fn poly_sub<T: Scalar>(x: &[T], y: &[T]) -> Result<Vec<T>> {
    let n = x.len().max(y.len());
    (0..n)
        .map(|i| {
            let zero = T::zero();
            sub(x.get(i).unwrap_or(&zero), y.get(i).unwrap_or(&zero))
        })
        .collect()
}

/// `k · H^shift · x`.
fn poly_shift_scale<T: Scalar>(x: &[T], shift: usize, k: &T) -> Result<Vec<T>> {
    let mut out = vec![T::zero(); shift];
    for c in x {
        out.push(mul(c, k)?);
    }
    Ok(out)
}

fn truncate<T: Scalar>(mut p: Vec<T>) -> [T; 3] {
    p.resize(3, T::zero());
    p.truncate(3);
    let mut it = p.into_iter();
    std::array::from_fn(|_| it.next().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn p2(a: i64, b: i64, c: i64) -> P2Class<i64> {
        P2Class::new(a, b, c)
    }

    fn ring(c1: i64, c2: i64) -> PbRing<i64> {
        PbRing::new(ChernPair::new(c1, c2))
    }

    #[test]
    fn p2_products() {
        assert_eq!(p2_mul(&p2(1, 1, 0), &p2(1, 1, 0)).unwrap(), p2(1, 2, 1));
        assert_eq!(p2_mul(&p2(0, 0, 1), &p2(0, 1, 0)).unwrap(), p2(0, 0, 0));
        assert_eq!(p2_mul(&p2(1, -3, 0), &p2(1, 3, 0)).unwrap(), p2(1, 0, -9));
    }

    #[test]
    fn p2_inverses() {
        assert_eq!(p2_unit_inverse(&p2(1, 0, 0)).unwrap(), p2(1, 0, 0));
        assert_eq!(p2_unit_inverse(&p2(1, 1, 0)).unwrap(), p2(1, -1, 1));
        assert_eq!(p2_unit_inverse(&p2(1, 0, -9)).unwrap(), p2(1, 0, 9));
        let x = p2(-1, 4, -7);
        let inv = p2_unit_inverse(&x).unwrap();
        assert_eq!(p2_mul(&x, &inv).unwrap(), P2Class::one());
    }

    #[test]
    fn non_unit_is_rejected() {
        assert!(matches!(
            p2_unit_inverse(&p2(2, 0, 0)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            p2_unit_inverse(&p2(0, 1, 0)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn p2_overflow_detected() {
        let big = p2(1, i64::MAX / 2, 0);
        assert_eq!(p2_mul(&big, &big), Err(Error::Overflow("multiplication")));
    }

    #[test]
    fn tau_squared_examples() {
        let r = ring(0, 0);
        let tau = r.basis(3);
        assert!(pb_mul(&tau, &tau).unwrap().is_zero());

        let r = ring(1, 1);
        let tau = r.basis(3);
        assert_eq!(pb_mul(&tau, &tau).unwrap().coeffs(), &[0, 0, -1, 0, -1, 0]);

        let r = ring(0, 2);
        let (tau, htau) = (r.basis(3), r.basis(4));
        assert!(pb_mul(&tau, &htau).unwrap().is_zero());
    }

    #[test]
    fn tau_cubed_is_pure_top_degree() {
        // τ³ = (c₁² − c₂)H²τ
        let r = ring(3, -2);
        let tau = r.basis(3);
        let t3 = pb_mul(&pb_mul(&tau, &tau).unwrap(), &tau).unwrap();
        assert_eq!(t3.coeffs(), &[0, 0, 0, 0, 0, 11]);
    }

    #[test]
    fn triple_products() {
        assert_eq!(triple_self_product(&ring(0, 0), 1, 1).unwrap(), 3);
        assert_eq!(triple_self_product(&ring(0, 0), 1, 0).unwrap(), 0);
        assert_eq!(triple_self_product(&ring(1, 1), 1, 1).unwrap(), 0);
    }

    #[test]
    fn mixed_rings_rejected() {
        let x = ring(0, 0).basis(3);
        let y = ring(0, 1).basis(3);
        assert!(matches!(pb_mul(&x, &y), Err(Error::Domain(_))));
        assert!(matches!(x.checked_add(&y), Err(Error::Domain(_))));
    }

    #[test]
    fn pb_overflow_detected() {
        let r = ring(i64::MAX, 0);
        let tau = r.basis(3);
        let htau = r.basis(4);
        // τ·τ is fine (coefficient −c₁), but scaling by 2 overflows.
        assert!(pb_mul(&tau, &tau).is_ok());
        assert_eq!(
            pb_mul(&tau.checked_scale(&2).unwrap(), &htau),
            Err(Error::Overflow("multiplication"))
        );
    }

    #[test]
    fn degrees() {
        let r = ring(2, 5);
        for (i, deg) in PB_DEGREES.iter().enumerate() {
            assert_eq!(r.basis(i).degree(), Some(*deg));
        }
        assert_eq!(r.zero().degree(), None);
        assert_eq!(r.divisor(1, 1).degree(), Some(1));
        assert_eq!(r.class([1, 1, 0, 0, 0, 0]).degree(), None);
        assert_eq!(p2(0, 0, 4).degree(), Some(2));
    }

    #[test]
    fn json_layout() {
        let r = ring(1, 1);
        let x = r.class([1, 2, 3, 4, 5, 6]);
        let v = serde_json::to_value(&x).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "basis": ["1", "H", "H2", "tau", "Htau", "H2tau"],
                "coeffs": [1, 2, 3, 4, 5, 6]
            })
        );
    }
}

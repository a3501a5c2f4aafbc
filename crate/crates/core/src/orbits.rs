//! The twist action of `Z` on Chern pairs and its orbits.
//!
//! Two pairs lie in one orbit exactly when they share the parity of `c₁`
//! and the discriminant `c₁² − 4c₂`. Orbit representatives are taken with
//! `c₁ ∈ {0, −1}`.

use serde::{Deserialize, Serialize};

use crate::chern::{twist, ChernPair};
use crate::error::Result;
use crate::scalar::{lit, mul, neg, sub, Scalar};

/// `c₁² − 4c₂`.
pub fn discriminant<T: Scalar>(p: &ChernPair<T>) -> Result<T> {
    sub(&mul(&p.c1, &p.c1)?, &mul(&lit(4)?, &p.c2)?)
}

/// Canonical orbit representative together with the twist reaching it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalForm<T> {
    /// Representative with `c₁ ∈ {0, −1}`.
    pub rep: ChernPair<T>,
    /// `twist(original, l_used) == rep`.
    pub l_used: T,
}

pub fn normalize<T: Scalar>(p: &ChernPair<T>) -> Result<NormalForm<T>> {
    let two = lit::<T>(2)?;
    let l_used = if p.c1.is_even() {
        neg(&p.c1)? / two
    } else {
        sub(&neg(&T::one())?, &p.c1)? / two
    };
    let rep = twist(p, &l_used)?;
    Ok(NormalForm { rep, l_used })
}

/// Orbit membership decided by the complete invariant (parity, discriminant).
pub fn same_orbit<T: Scalar>(p: &ChernPair<T>, q: &ChernPair<T>) -> Result<bool> {
    Ok(p.c1.is_even() == q.c1.is_even() && discriminant(p)? == discriminant(q)?)
}

/// The twist `l` with `twist(p, l) == q`, if any.
///
/// Twisting moves `c₁` by `2l`, so `l = (q.c₁ − p.c₁)/2` is the only candidate.
pub fn orbit_witness<T: Scalar>(p: &ChernPair<T>, q: &ChernPair<T>) -> Result<Option<T>> {
    let diff = sub(&q.c1, &p.c1)?;
    if diff.is_odd() {
        return Ok(None);
    }
    let l = diff / lit(2)?;
    Ok((twist(p, &l)? == *q).then_some(l))
}

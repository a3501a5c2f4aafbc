//! Integer shadows of the ruled geometry of `P(E)`: splitting on lines,
//! Hirzebruch indices, two anticanonical intersection numbers, and the
//! bound beyond which the `P¹`-bundle structure is unique.

use serde::Serialize;

use crate::error::{domain, Result};
use crate::scalar::{mul, sub};

/// Splitting `O(a) ⊕ O(c₁ − a)` of `E` restricted to a line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LineSplitting {
    pub a: i64,
    pub degrees: (i64, i64),
}

impl LineSplitting {
    pub fn new(c1: i64, a: i64) -> Result<Self> {
        if a < 0 {
            return Err(domain(format!("splitting degree a = {a} must be >= 0")));
        }
        Ok(Self {
            a,
            degrees: (a, sub(&c1, &a)?),
        })
    }

    /// Index `b` of the Hirzebruch surface `F_b` over the line.
    pub fn hirzebruch_index(&self) -> u64 {
        self.degrees.0.abs_diff(self.degrees.1)
    }
}

/// Hirzebruch surface over a general line, in absolute and signed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HirzebruchIndex {
    pub index: u64,
    pub signed_index: i64,
}

/// `|c₁ − 2d|`: the surface `F_{c₁−2d}` over a general line for a bundle of type `d`.
pub fn generic_hirzebruch(c1: i64, d: i64) -> Result<HirzebruchIndex> {
    let signed_index = sub(&c1, &mul(&2, &d)?)?;
    Ok(HirzebruchIndex {
        index: signed_index.unsigned_abs(),
        signed_index,
    })
}

/// `−K_X · C = −b − 1` for the negative section `C` of `F_b ⊂ X`.
pub fn neg_section_anticanonical(b: i64) -> Result<i64> {
    if b < 0 {
        return Err(domain(format!("Hirzebruch index b = {b} must be >= 0")));
    }
    sub(&-1, &b)
}

/// `−K_X · F = 2` for a fiber `F` of any `P¹`-bundle structure on `X`.
pub const fn fiber_anticanonical() -> i64 {
    2
}

/// Whether type `d` exceeds `3 + c₁`, the bound guaranteeing a unique
/// `P¹`-bundle structure up to automorphisms of `P²`.
pub fn unique_structure(c1_norm: i64, d: i64) -> Result<bool> {
    if c1_norm != 0 && c1_norm != -1 {
        return Err(domain(format!(
            "c1 = {c1_norm} is outside {{0,-1}}; normalize the pair first"
        )));
    }
    Ok(d > 3 + c1_norm)
}

/// Betti numbers `b₀, …, b₆` of `P(E)`, independent of the Chern classes.
pub const fn betti_profile() -> [u32; 7] {
    [1, 0, 2, 0, 2, 0, 1]
}

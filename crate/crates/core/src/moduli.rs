//! Dimension counts for moduli of bundles of pure splitting type `d`, the
//! codimension bounds `γ(d; e)` for loci deformable to smaller type, and the
//! thresholds beyond which those bounds are all positive.
//!
//! Functions that are stated only for normalized pairs (`c₁ ∈ {0, −1}`)
//! reject other inputs with a [`Error::Domain`] pointing at
//! [`crate::orbits::normalize`].

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::error::{domain, Error, Result};
use crate::scalar::{add, mul, sub};
use crate::ChernPair;

/// Upper end of the threshold search.
pub const THRESHOLD_SEARCH_LIMIT: i64 = 1_000_000;

/// Dimension of the moduli space `M(d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModuliDim {
    Empty,
    Point,
    Dim(u64),
}

impl Serialize for ModuliDim {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ModuliDim::Empty => serializer.serialize_str("empty"),
            ModuliDim::Point => serializer.serialize_str("point"),
            ModuliDim::Dim(n) => serializer.serialize_u64(*n),
        }
    }
}

impl std::fmt::Display for ModuliDim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModuliDim::Empty => f.write_str("empty"),
            ModuliDim::Point => f.write_str("point"),
            ModuliDim::Dim(n) => write!(f, "{n}"),
        }
    }
}

/// How to read the third positivity polynomial.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Q3Reading {
    /// `C(d−e−1, 2) − (e² − e·c₁ + c₂)`, the hypothesis of the equality
    /// criterion for components of `M(d; e)`.
    #[default]
    Consistent,
    /// `C(d−e−1, 2) − e² − e·c₁ + c₂`, with the signs as originally typeset.
    AsPrinted,
}

/// The five positivity polynomials at `(d, e)`. `q4 == q2 − q5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QValues {
    pub q1: i64,
    pub q2: i64,
    pub q3: i64,
    pub q4: i64,
    pub q5: i64,
}

pub fn require_normalized(p: &ChernPair) -> Result<()> {
    if p.c1 == 0 || p.c1 == -1 {
        Ok(())
    } else {
        Err(domain(format!(
            "c1 = {} is outside {{0,-1}}; normalize the pair first (e.g. `normalize --pair {},{}`)",
            p.c1, p.c1, p.c2
        )))
    }
}

fn require_types(d: i64, e: i64) -> Result<()> {
    if d > e && e >= -1 {
        Ok(())
    } else {
        Err(domain(format!(
            "splitting types must satisfy d > e >= -1, got d = {d}, e = {e}"
        )))
    }
}

/// `d² − d·c₁ + c₂`.
pub fn q1(p: &ChernPair, d: i64) -> Result<i64> {
    add(&sub(&mul(&d, &d)?, &mul(&d, &p.c1)?)?, &p.c2)
}

pub fn moduli_dim(p: &ChernPair, d: i64) -> Result<ModuliDim> {
    require_normalized(p)?;
    if d < 0 {
        return Err(domain(format!("splitting type d = {d} must be >= 0")));
    }
    let q = q1(p, d)?;
    Ok(match q.signum() {
        -1 => ModuliDim::Empty,
        0 => ModuliDim::Point,
        _ => ModuliDim::Dim((sub(&mul(&3, &q)?, &1)?) as u64),
    })
}

/// `P(x) = (x − 1)(x − 2 − c₁) − c₂`.
pub fn p_poly(p: &ChernPair, x: i64) -> Result<i64> {
    let left = sub(&x, &1)?;
    let right = sub(&sub(&x, &2)?, &p.c1)?;
    sub(&mul(&left, &right)?, &p.c2)
}

/// Lower bound for the codimension in `M(d)` of components of `M(d; e)`.
pub fn gamma(p: &ChernPair, d: i64, e: i64) -> Result<i64> {
    require_types(d, e)?;
    if e == -1 || (e == 0 && p.c1 == 0 && p.c2 == 0) {
        p_poly(p, d)
    } else {
        add(&sub(&p_poly(p, d)?, &p_poly(p, e)?)?, &1)
    }
}

/// `C(n, 2)`, taken as zero for `n < 2`.
pub fn binomial2(n: i64) -> Result<i64> {
    if n < 2 {
        return Ok(0);
    }
    Ok(mul(&n, &(n - 1))? / 2)
}

/// `e² − e·c₁ + c₂`, i.e. `Q₁(e)`.
fn type_e_count(p: &ChernPair, e: i64) -> Result<i64> {
    q1(p, e)
}

/// Whether `C(d−e−1, 2) ≥ e² − e·c₁ + c₂`.
pub fn equality_component_condition(p: &ChernPair, d: i64, e: i64) -> Result<bool> {
    require_types(d, e)?;
    Ok(binomial2(sub(&sub(&d, &e)?, &1)?)? >= type_e_count(p, e)?)
}

pub fn q_values(p: &ChernPair, d: i64, e: i64, reading: Q3Reading) -> Result<QValues> {
    require_types(d, e)?;
    let q1v = q1(p, d)?;
    let q2 = sub(&mul(&3, &q1v)?, &1)?;
    let binom = binomial2(sub(&sub(&d, &e)?, &1)?)?;
    let q3 = match reading {
        Q3Reading::Consistent => sub(&binom, &type_e_count(p, e)?)?,
        Q3Reading::AsPrinted => add(&sub(&sub(&binom, &mul(&e, &e)?)?, &mul(&e, &p.c1)?)?, &p.c2)?,
    };
    let q5 = gamma(p, d, e)?;
    let q4 = sub(&q2, &q5)?;
    Ok(QValues {
        q1: q1v,
        q2,
        q3,
        q4,
        q5,
    })
}

/// `M(d)` is positive-dimensional and `γ(d; e) > 0` for every `−1 ≤ e < d`.
pub fn threshold_condition(p: &ChernPair, d: i64) -> Result<bool> {
    if q1(p, d)? <= 0 {
        return Ok(false);
    }
    for e in -1..d {
        if gamma(p, d, e)? <= 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Least `d₀ ≥ 0` such that [`threshold_condition`] holds for every `d ≥ d₀`.
///
/// For `c₁ ∈ {0, −1}` and `d ≥ 3`, `Q₁` and `P` are increasing and
/// `P(d) ≥ max(P(0), P(d−1))`, so once the condition holds at some `d ≥ 3`
/// it holds for all larger `d`. The search finds the first such `d` and then
/// walks down while the condition keeps holding.
pub fn stromme_threshold(p: &ChernPair) -> Result<i64> {
    require_normalized(p)?;
    let mut d = 3;
    while !threshold_condition(p, d)? {
        d += 1;
        if d > THRESHOLD_SEARCH_LIMIT {
            return Err(Error::Consistency(format!(
                "no threshold below {THRESHOLD_SEARCH_LIMIT} for {p}"
            )));
        }
    }
    while d > 0 && threshold_condition(p, d - 1)? {
        d -= 1;
    }
    Ok(d)
}

/// Splitting types `D, D+1, …, D+k−1` of bundles whose projectivizations are
/// pairwise not directly h-cobordant, with `D = max(threshold, 4 + c₁)`.
pub fn non_cobordant_types(p: &ChernPair, k: i64) -> Result<Vec<i64>> {
    require_normalized(p)?;
    if k <= 0 {
        return Err(domain(format!("count k = {k} must be positive")));
    }
    let start = stromme_threshold(p)?.max(4 + p.c1);
    let mut types = Vec::with_capacity(k as usize);
    for d in start..start + k {
        if !threshold_condition(p, d)? || d <= 3 + p.c1 {
            return Err(Error::Consistency(format!(
                "splitting type {d} above the threshold of {p} fails re-verification"
            )));
        }
        types.push(d);
    }
    Ok(types)
}

/// One row of a moduli table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuliRow {
    pub d: i64,
    pub q1: i64,
    pub dim: ModuliDim,
    /// `γ(d; e)` for every `−1 ≤ e < d`, keyed by `e`.
    pub gamma: BTreeMap<i64, i64>,
    /// Types `e` with `γ(d; e) > dim M(d)`: any component of `M(d; e)`
    /// would exceed the ambient dimension, so `M(d; e)` is empty.
    pub codim_exceeds_dim: Vec<i64>,
}

pub fn moduli_row(p: &ChernPair, d: i64) -> Result<ModuliRow> {
    let dim = moduli_dim(p, d)?;
    let q1v = q1(p, d)?;
    let mut gammas = BTreeMap::new();
    let mut codim_exceeds_dim = Vec::new();
    for e in -1..d {
        let g = gamma(p, d, e)?;
        if q1v > 0 && g > 3 * q1v - 1 {
            codim_exceeds_dim.push(e);
        }
        gammas.insert(e, g);
    }
    Ok(ModuliRow {
        d,
        q1: q1v,
        dim,
        gamma: gammas,
        codim_exceeds_dim,
    })
}

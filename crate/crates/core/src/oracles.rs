//! Brute-force reference implementations.
//!
//! These recompute the closed-form answers by enumeration and direct
//! substitution in `i128`. Apart from [`ring_iso_search`], which multiplies
//! in the bundle ring, nothing here calls into the closed-form modules.

use crate::chow::{pb_mul, PbClass, PbRing};
use crate::cubic::{BinaryCubicForm, UnimodularMatrix};
use crate::error::{domain, Error, Result};
use crate::ChernPair;

/// Bound on entries or ranges searched by an oracle; always at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SearchBound(u32);

impl SearchBound {
    pub fn new(b: u32) -> Result<Self> {
        if b == 0 {
            return Err(domain("search bound must be >= 1"));
        }
        Ok(Self(b))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// The twist taking `p` to `q`, by direct substitution, with a scan over
/// `[−B, B]`, `B = |q.c₁ − p.c₁| + 2`, confirming there is no other.
pub fn orbit_oracle(p: &ChernPair, q: &ChernPair) -> Result<Option<i64>> {
    let (a, b) = (p.c1 as i128, p.c2 as i128);
    let (c, d) = (q.c1 as i128, q.c2 as i128);
    let hits = |l: i128| a + 2 * l == c && b + a * l + l * l == d;

    let diff = c - a;
    let candidate = (diff % 2 == 0).then_some(diff / 2).filter(|&l| hits(l));

    let bound = diff.abs() + 2;
    let scanned: Vec<i128> = (-bound..=bound).filter(|&l| hits(l)).collect();
    if scanned.len() > 1 || scanned.first().copied() != candidate {
        return Err(Error::Consistency(format!(
            "twist scan for {p} -> {q} found {scanned:?}, candidate {candidate:?}"
        )));
    }
    Ok(candidate.map(|l| l as i64))
}

/// All `d ∈ [0, dmax]` with `d² − d·c₁ + c₂ = 0`, by evaluation.
pub fn integer_root_search(p: &ChernPair, dmax: u64) -> Vec<i64> {
    let (c1, c2) = (p.c1 as i128, p.c2 as i128);
    (0..=dmax as i128)
        .filter(|&d| d * d - d * c1 + c2 == 0)
        .map(|d| d as i64)
        .collect()
}

/// `|c₁| + |c₂| + 1`, an upper bound for any integer root of `d² − d·c₁ + c₂`.
pub fn root_bound(p: &ChernPair) -> u64 {
    p.c1.unsigned_abs() + p.c2.unsigned_abs() + 1
}

/// Integer 2×2 matrices with entries in `[−B, B]` and determinant ±1, the
/// identity first, then by distance from the identity, then lexicographically.
pub fn unimodular_candidates(bound: SearchBound) -> Vec<[[i64; 2]; 2]> {
    let b = bound.get() as i64;
    let mut out = Vec::new();
    for m00 in -b..=b {
        for m01 in -b..=b {
            for m10 in -b..=b {
                for m11 in -b..=b {
                    let det = m00 * m11 - m01 * m10;
                    if det == 1 || det == -1 {
                        out.push([[m00, m01], [m10, m11]]);
                    }
                }
            }
        }
    }
    out.sort_by_key(|m| {
        let dist = (m[0][0] - 1).abs() + m[0][1].abs() + m[1][0].abs() + (m[1][1] - 1).abs();
        (dist, *m)
    });
    out
}

fn eval_i128(coeffs: [i128; 4], x: i128, y: i128) -> i128 {
    let [a, b, c, d] = coeffs;
    a * x * x * x + b * x * x * y + c * x * y * y + d * y * y * y
}

/// A binary cubic is fixed by its values at four pairwise non-proportional points.
const PROBES: [(i128, i128); 4] = [(1, 0), (0, 1), (1, 1), (1, -1)];

/// First matrix `M` (in [`unimodular_candidates`] order) with `f ∘ M = g`,
/// decided by comparing values at probe points.
pub fn gl2z_form_search(
    f: &BinaryCubicForm<i64>,
    g: &BinaryCubicForm<i64>,
    bound: SearchBound,
) -> Option<UnimodularMatrix<i64>> {
    let fc = f.coeffs().map(i128::from);
    let gc = g.coeffs().map(i128::from);
    let targets = PROBES.map(|(x, y)| eval_i128(gc, x, y));
    unimodular_candidates(bound)
        .into_iter()
        .find(|m| {
            let m = m.map(|r| r.map(i128::from));
            PROBES.iter().zip(&targets).all(|(&(x, y), &t)| {
                eval_i128(fc, m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y) == t
            })
        })
        .map(to_matrix)
}

fn to_matrix(m: [[i64; 2]; 2]) -> UnimodularMatrix<i64> {
    UnimodularMatrix::new(m[0][0], m[0][1], m[1][0], m[1][1])
        .expect("candidates are unimodular by construction")
}

/// First degree-one substitution `H ↦ m00·H + m01·τ`, `τ ↦ m10·H + m11·τ`
/// that extends to a graded ring isomorphism from the Chow ring of `P(E_p)`
/// onto that of `P(E_q)`.
///
/// A candidate is accepted when both defining relations of the source map to
/// zero in the target and the induced map on degree two is unimodular.
pub fn ring_iso_search(
    p: &ChernPair,
    q: &ChernPair,
    bound: SearchBound,
) -> Result<Option<UnimodularMatrix<i64>>> {
    let target = PbRing::new(*q);
    for m in unimodular_candidates(bound) {
        if ring_map_is_iso(p, &target, m)? {
            return Ok(Some(to_matrix(m)));
        }
    }
    Ok(None)
}

fn ring_map_is_iso(p: &ChernPair, target: &PbRing<i64>, m: [[i64; 2]; 2]) -> Result<bool> {
    let h = target.divisor(m[0][0], m[0][1]);
    let t = target.divisor(m[1][0], m[1][1]);
    let hh = pb_mul(&h, &h)?;
    if !pb_mul(&hh, &h)?.is_zero() {
        return Ok(false);
    }
    let ht = pb_mul(&h, &t)?;
    let tt = pb_mul(&t, &t)?;
    // τ² + c₁Hτ + c₂H²
    let relation = tt
        .checked_add(&ht.checked_scale(&p.c1)?)?
        .checked_add(&hh.checked_scale(&p.c2)?)?;
    if !relation.is_zero() {
        return Ok(false);
    }
    // degree two: images of (H², Hτ) in coordinates (H², Hτ)
    let deg2 = |x: &PbClass<i64>| (x.coeffs()[2], x.coeffs()[4]);
    let (a, b) = deg2(&hh);
    let (c, d) = deg2(&ht);
    let det = a * d - b * c;
    Ok(det == 1 || det == -1)
}

/// Result of a bounded ring-isomorphism search, with the discriminant
/// obstruction attached when the search fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoSearch {
    Found(UnimodularMatrix<i64>),
    /// The discriminants `c₁² − 4c₂` differ, so no bound would help.
    Obstructed {
        left: i128,
        right: i128,
    },
    /// Discriminants agree but nothing was found within the bound.
    Inconclusive {
        bound: u32,
    },
}

pub fn decide_ring_iso(p: &ChernPair, q: &ChernPair, bound: SearchBound) -> Result<IsoSearch> {
    if let Some(m) = ring_iso_search(p, q, bound)? {
        return Ok(IsoSearch::Found(m));
    }
    let disc = |x: &ChernPair| (x.c1 as i128).pow(2) - 4 * x.c2 as i128;
    let (left, right) = (disc(p), disc(q));
    Ok(if left != right {
        IsoSearch::Obstructed { left, right }
    } else {
        IsoSearch::Inconclusive { bound: bound.get() }
    })
}

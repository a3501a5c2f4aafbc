//! Oracle-versus-closed-form sweeps over fixed grids.

use serde::Serialize;

use crate::chern::{monad_cohomology_chern, MonadSpec};
use crate::chow::{triple_self_product, PbRing};
use crate::classify::deformable_to_split;
use crate::cubic::{cubic_discriminant_standard, picard_cubic};
use crate::error::Result;
use crate::moduli::{moduli_dim, stromme_threshold, threshold_condition, ModuliDim};
use crate::oracles::{
    decide_ring_iso, gl2z_form_search, integer_root_search, orbit_oracle, root_bound, IsoSearch,
    SearchBound,
};
use crate::orbits::{discriminant, same_orbit};
use crate::ChernPair;

/// Outcome of one sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: u64,
    pub failures: u64,
    /// First failing input, if any.
    pub first_failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

struct Tally {
    name: &'static str,
    cases: u64,
    failures: u64,
    first_failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            cases: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, input: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(input());
            }
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            cases: self.cases,
            failures: self.failures,
            first_failure: self.first_failure,
        }
    }
}

fn grid(lo: i64, hi: i64) -> impl Iterator<Item = ChernPair> + Clone {
    (lo..=hi).flat_map(move |c1| (lo..=hi).map(move |c2| ChernPair::new(c1, c2)))
}

/// `same_orbit` against the twist-scan oracle on `[−r, r]⁴`.
pub fn orbit_sweep(r: i64) -> Result<CheckResult> {
    let mut t = Tally::new("orbit_decision");
    for p in grid(-r, r) {
        for q in grid(-r, r) {
            let ok = same_orbit(&p, &q)? == orbit_oracle(&p, &q)?.is_some();
            t.record(ok, || format!("{p} vs {q}"));
        }
    }
    Ok(t.finish())
}

/// Classical discriminant of the Picard cubic equals `−27(c₁² − 4c₂)` on `[−r, r]²`.
pub fn discriminant_sweep(r: i64) -> Result<CheckResult> {
    let mut t = Tally::new("discriminant_reconciliation");
    for p in grid(-r, r) {
        let standard = cubic_discriminant_standard(&picard_cubic(&p)?)?;
        let direct = -27 * (p.c1 * p.c1 - 4 * p.c2);
        t.record(standard == direct, || p.to_string());
    }
    Ok(t.finish())
}

/// Ring expansion of `(aH + bτ)³` against `3a²b − 3c₁ab² + (c₁² − c₂)b³` on `[−r, r]⁴`.
pub fn triple_product_sweep(r: i64) -> Result<CheckResult> {
    let mut t = Tally::new("ring_form_agreement");
    for p in grid(-r, r) {
        let ring = PbRing::new(p);
        for a in -r..=r {
            for b in -r..=r {
                let (c1, c2) = (p.c1, p.c2);
                let closed = 3 * a * a * b - 3 * c1 * a * b * b + (c1 * c1 - c2) * b * b * b;
                let ok = triple_self_product(&ring, a, b)? == closed;
                t.record(ok, || format!("{p}, (a,b)=({a},{b})"));
            }
        }
    }
    Ok(t.finish())
}

/// Monad cohomology returns the middle bundle's classes on `[−r, r]³`.
pub fn monad_sweep(r: i64) -> Result<CheckResult> {
    let mut t = Tally::new("monad_invariance");
    for p in grid(-r, r) {
        for d in -r..=r {
            let ok = monad_cohomology_chern(&MonadSpec::new(p, d))? == p;
            t.record(ok, || format!("{p}, d={d}"));
        }
    }
    Ok(t.finish())
}

/// Empty/point/dimension trichotomy on `c₁ ∈ {0, −1}`, `c₂ ∈ [−r, r]`, `d ∈ [0, dmax]`.
pub fn moduli_sweep(r: i64, dmax: i64) -> Result<CheckResult> {
    let mut t = Tally::new("moduli_trichotomy");
    for c1 in [0, -1] {
        for c2 in -r..=r {
            let p = ChernPair::new(c1, c2);
            for d in 0..=dmax {
                let q = d * d - d * c1 + c2;
                let expected = match q {
                    q if q < 0 => ModuliDim::Empty,
                    0 => ModuliDim::Point,
                    q => ModuliDim::Dim((3 * q - 1) as u64),
                };
                t.record(moduli_dim(&p, d)? == expected, || format!("{p}, d={d}"));
            }
        }
    }
    Ok(t.finish())
}

/// The threshold is the least `d₀` after which the condition holds, checked
/// by brute force up to `d₀ + span`.
pub fn threshold_sweep(r: i64, span: i64) -> Result<CheckResult> {
    let mut t = Tally::new("threshold_minimality");
    for c1 in [0, -1] {
        for c2 in -r..=r {
            let p = ChernPair::new(c1, c2);
            let d0 = stromme_threshold(&p)?;
            let mut ok = d0 == 0 || !threshold_condition(&p, d0 - 1)?;
            for d in d0..=d0 + span {
                ok &= threshold_condition(&p, d)?;
            }
            t.record(ok, || p.to_string());
        }
    }
    Ok(t.finish())
}

/// Least nonnegative root against the evaluation scan on `[−r, r]²`.
pub fn split_root_sweep(r: i64) -> Result<CheckResult> {
    let mut t = Tally::new("split_root");
    for p in grid(-r, r) {
        let scanned = integer_root_search(&p, root_bound(&p)).first().copied();
        t.record(deformable_to_split(&p)? == scanned, || p.to_string());
    }
    Ok(t.finish())
}

/// Bounded ring-isomorphism and form-equivalence searches against equality of
/// discriminants on `[−r, r]⁴`.
pub fn ring_iso_sweep(r: i64, bound: SearchBound) -> Result<CheckResult> {
    let mut t = Tally::new("ring_isomorphism");
    for p in grid(-r, r) {
        let fp = picard_cubic(&p)?;
        for q in grid(-r, r) {
            let equal = discriminant(&p)? == discriminant(&q)? && same_orbit(&p, &q)?;
            let ring = decide_ring_iso(&p, &q, bound)?;
            let form = gl2z_form_search(&fp, &picard_cubic(&q)?, bound).is_some();
            let ok = match ring {
                IsoSearch::Found(_) => equal && form,
                IsoSearch::Obstructed { .. } => !equal && !form,
                IsoSearch::Inconclusive { .. } => false,
            };
            t.record(ok, || format!("{p} vs {q}: {ring:?}"));
        }
    }
    Ok(t.finish())
}

/// Every sweep at the sizes used by the `verify` command.
pub fn run_all() -> Result<Vec<CheckResult>> {
    Ok(vec![
        orbit_sweep(12)?,
        discriminant_sweep(20)?,
        triple_product_sweep(8)?,
        monad_sweep(10)?,
        moduli_sweep(10, 20)?,
        threshold_sweep(10, 10)?,
        split_root_sweep(50)?,
        ring_iso_sweep(4, SearchBound::new(3)?)?,
    ])
}

//! Verdicts for the equivalence relations between projectivized bundles.
//!
//! Every verdict carries a [`Reason`] from a closed list, so each Yes or No
//! can be traced back to the invariant that decided it, and every Unknown
//! to the question it is waiting on.

use std::fmt;

use num_integer::Roots;
use serde::{Deserialize, Serialize};

use crate::chern::twist;
use crate::error::{domain, Error, Result};
use crate::orbits::{discriminant, orbit_witness, same_orbit};
use crate::ruled::unique_structure;
use crate::ChernPair;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "YES",
            Answer::No => "NO",
            Answer::Unknown => "UNKNOWN",
        })
    }
}

/// Why a verdict came out the way it did.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    /// The pairs differ by a twist; parity of `c₁` and `c₁² − 4c₂` agree.
    /// The witness is the twist.
    TwistOrbit,
    /// Parity of `c₁` or the discriminant differs, so the Chow rings are
    /// not isomorphic.
    InvariantMismatch,
    /// `d² − dc₁ + c₂ = 0` has a root `d ≥ 0`; `E(−d)` has `c₂ = 0` and is
    /// concordant to a split bundle. The witness is `d`.
    SplitDeformable,
    /// The only integer roots of `d² − dc₁ + c₂` are negative; the same
    /// argument runs with `E(−d)` for that negative `d`. The witness is `d`.
    SplitAfterNegativeTwist,
    /// Weakly equivalent, but the discriminant is not a perfect square; no
    /// source of h-cobordisms is available.
    OpenNotSplitDeformable,
    /// Concordance of bundles outside the split-deformable case is open.
    OpenConcordance,
    /// A bundle is concordant to itself.
    Reflexive,
    /// Bundles with equal Chern classes deform into each other over a
    /// possibly reducible base.
    EqualChernClasses,
    /// Chern classes are deformation invariants.
    ChernClassesDiffer,
    /// Both types exceed `3 + c₁` and differ; the bundle structures are
    /// unique, so a direct h-cobordism with constant type cannot exist.
    DistinctRigidTypes,
    /// Equal splitting types give no obstruction.
    EqualTypes,
    /// A type is at most `3 + c₁`, where the bundle structure need not be unique.
    BelowUniquenessBound,
}

impl Reason {
    pub fn tag(self) -> &'static str {
        match self {
            Reason::TwistOrbit => "twist_orbit",
            Reason::InvariantMismatch => "invariant_mismatch",
            Reason::SplitDeformable => "split_deformable",
            Reason::SplitAfterNegativeTwist => "split_after_negative_twist",
            Reason::OpenNotSplitDeformable => "open_not_split_deformable",
            Reason::OpenConcordance => "open_concordance",
            Reason::Reflexive => "reflexive",
            Reason::EqualChernClasses => "equal_chern_classes",
            Reason::ChernClassesDiffer => "chern_classes_differ",
            Reason::DistinctRigidTypes => "distinct_rigid_types",
            Reason::EqualTypes => "equal_types",
            Reason::BelowUniquenessBound => "below_uniqueness_bound",
        }
    }
}

/// A three-valued decision with its justification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Verdict {
    pub value: Answer,
    pub reason: Reason,
    pub witness: Option<i64>,
}

impl Verdict {
    fn new(value: Answer, reason: Reason, witness: Option<i64>) -> Self {
        Self {
            value,
            reason,
            witness,
        }
    }

    pub fn is_yes(&self) -> bool {
        self.value == Answer::Yes
    }

    /// One-line explanation, without the answer and tag.
    pub fn detail(&self) -> String {
        let w = self.witness;
        match (self.reason, w) {
            (Reason::TwistOrbit, Some(l)) => format!("twist l={l}"),
            (Reason::InvariantMismatch, _) => "parity of c1 or discriminant differs".into(),
            (Reason::SplitDeformable, Some(d)) | (Reason::SplitAfterNegativeTwist, Some(d)) => {
                format!("d={d} solves d^2-d*c1+c2=0")
            }
            (Reason::OpenNotSplitDeformable, _) => {
                "weakly equivalent; no d with d^2-d*c1+c2=0".into()
            }
            (Reason::OpenConcordance, _) => "not split-deformable; concordance undecided".into(),
            (Reason::Reflexive, _) => "identical Chern classes".into(),
            (Reason::EqualChernClasses, _) => "equal Chern classes".into(),
            (Reason::ChernClassesDiffer, _) => "Chern classes differ".into(),
            (Reason::DistinctRigidTypes, _) => "distinct types above the uniqueness bound".into(),
            (Reason::EqualTypes, _) => "equal splitting types".into(),
            (Reason::BelowUniquenessBound, _) => "a type is at most 3+c1".into(),
            (_, None) => String::new(),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({}): {}",
            self.value,
            self.reason.tag(),
            self.detail()
        )
    }
}

/// Weak equivalence of `P(E_p)` and `P(E_q)`: same twist orbit.
pub fn weak_equivalent(p: &ChernPair, q: &ChernPair) -> Result<Verdict> {
    let witness = orbit_witness(p, q)?;
    if witness.is_some() != same_orbit(p, q)? {
        return Err(Error::Consistency(format!(
            "orbit witness and (parity, discriminant) disagree on {p} vs {q}"
        )));
    }
    Ok(match witness {
        Some(l) => Verdict::new(Answer::Yes, Reason::TwistOrbit, Some(l)),
        None => Verdict::new(Answer::No, Reason::InvariantMismatch, None),
    })
}

/// Integer roots of `d² − d·c₁ + c₂`, ascending, from the discriminant.
fn integer_roots(p: &ChernPair) -> Result<Vec<i64>> {
    let disc = discriminant(p)?;
    if disc < 0 {
        return Ok(Vec::new());
    }
    let s = disc.sqrt();
    if s * s != disc {
        return Ok(Vec::new());
    }
    // c₁² − 4c₂ ≡ c₁² (mod 4), so s ≡ c₁ (mod 2)
    if (p.c1 - s).rem_euclid(2) != 0 {
        return Err(Error::Consistency(format!(
            "square root {s} of discriminant has parity different from c1 for {p}"
        )));
    }
    let lo = (p.c1 - s).div_euclid(2);
    let hi = (p.c1 + s).div_euclid(2);
    Ok(if lo == hi { vec![lo] } else { vec![lo, hi] })
}

/// Least `d ≥ 0` with `d² − d·c₁ + c₂ = 0`.
pub fn deformable_to_split(p: &ChernPair) -> Result<Option<i64>> {
    Ok(integer_roots(p)?.into_iter().find(|&d| d >= 0))
}

/// Root used by the split-deformable verdicts: the least nonnegative root,
/// else the largest negative one. `None` iff the discriminant is not a square.
fn split_root(p: &ChernPair) -> Result<Option<(i64, Reason)>> {
    let roots = integer_roots(p)?;
    if let Some(&d) = roots.iter().find(|&&d| d >= 0) {
        return Ok(Some((d, Reason::SplitDeformable)));
    }
    Ok(roots.last().map(|&d| (d, Reason::SplitAfterNegativeTwist)))
}

fn check_vanishing_c2(p: &ChernPair, d: i64) -> Result<()> {
    let shifted = twist(p, &-d)?;
    if shifted.c2 != 0 {
        return Err(Error::Consistency(format!(
            "{p} twisted by {} has c2 = {}, expected 0",
            -d, shifted.c2
        )));
    }
    Ok(())
}

/// Concordance of a bundle with these Chern classes to a split bundle.
pub fn concordance_to_split(p: &ChernPair) -> Result<Verdict> {
    Ok(match split_root(p)? {
        Some((d, reason)) => {
            check_vanishing_c2(p, d)?;
            Verdict::new(Answer::Yes, reason, Some(d))
        }
        None => Verdict::new(Answer::Unknown, Reason::OpenConcordance, None),
    })
}

/// h-cobordism of `P(E_p)` and `P(E_q)`.
pub fn h_cobordant(p: &ChernPair, q: &ChernPair) -> Result<Verdict> {
    let weak = weak_equivalent(p, q)?;
    if !weak.is_yes() {
        return Ok(weak);
    }
    Ok(match split_root(p)? {
        Some((d, reason)) => {
            check_vanishing_c2(p, d)?;
            Verdict::new(Answer::Yes, reason, Some(d))
        }
        None => Verdict::new(Answer::Unknown, Reason::OpenNotSplitDeformable, None),
    })
}

/// Deformation equivalence of the bundles themselves (not their projectivizations).
pub fn deformation_equivalent_bundles(p: &ChernPair, q: &ChernPair) -> Verdict {
    if p == q {
        Verdict::new(Answer::Yes, Reason::EqualChernClasses, None)
    } else {
        Verdict::new(Answer::No, Reason::ChernClassesDiffer, None)
    }
}

/// The six relations compared side by side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub a1_weak_equivalence: Verdict,
    pub homotopy_equivalence: Verdict,
    pub diffeomorphism: Verdict,
    pub deformation_equivalence: Verdict,
    pub a1_h_cobordism: Verdict,
    pub a1_concordance_of_bundles: Verdict,
}

impl RelationReport {
    pub fn entries(&self) -> [(&'static str, &Verdict); 6] {
        [
            ("a1_weak_equivalence", &self.a1_weak_equivalence),
            ("homotopy_equivalence", &self.homotopy_equivalence),
            ("diffeomorphism", &self.diffeomorphism),
            ("deformation_equivalence", &self.deformation_equivalence),
            ("a1_h_cobordism", &self.a1_h_cobordism),
            ("a1_concordance_of_bundles", &self.a1_concordance_of_bundles),
        ]
    }
}

pub fn complex_report(p: &ChernPair, q: &ChernPair) -> Result<RelationReport> {
    let weak = weak_equivalent(p, q)?;
    let concordance = if p == q {
        Verdict::new(Answer::Yes, Reason::Reflexive, None)
    } else {
        Verdict::new(Answer::Unknown, Reason::OpenConcordance, None)
    };
    Ok(RelationReport {
        a1_weak_equivalence: weak,
        homotopy_equivalence: weak,
        diffeomorphism: weak,
        deformation_equivalence: weak,
        a1_h_cobordism: h_cobordant(p, q)?,
        a1_concordance_of_bundles: concordance,
    })
}

/// Obstruction to a direct h-cobordism between bundles of types `d0` and
/// `d1` that are not deformable to smaller type.
pub fn direct_hcob_type_obstruction(c1_norm: i64, d0: i64, d1: i64) -> Result<Verdict> {
    if d0 < 0 || d1 < 0 {
        return Err(domain(format!(
            "splitting types must be >= 0, got {d0} and {d1}"
        )));
    }
    let rigid0 = unique_structure(c1_norm, d0)?;
    let rigid1 = unique_structure(c1_norm, d1)?;
    Ok(if d0 == d1 {
        Verdict::new(Answer::Unknown, Reason::EqualTypes, None)
    } else if rigid0 && rigid1 {
        Verdict::new(Answer::Yes, Reason::DistinctRigidTypes, None)
    } else {
        Verdict::new(Answer::Unknown, Reason::BelowUniquenessBound, None)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cp(c1: i64, c2: i64) -> ChernPair {
        ChernPair::new(c1, c2)
    }

    #[test]
    fn weak_examples() {
        let v = weak_equivalent(&cp(0, 0), &cp(2, 1)).unwrap();
        assert_eq!((v.value, v.witness), (Answer::Yes, Some(1)));
        let v = weak_equivalent(&cp(0, 0), &cp(0, 1)).unwrap();
        assert_eq!(v.value, Answer::No);
        let v = weak_equivalent(&cp(-1, 0), &cp(5, 6)).unwrap();
        assert_eq!((v.value, v.witness), (Answer::Yes, Some(3)));
    }

    #[test]
    fn split_roots() {
        assert_eq!(deformable_to_split(&cp(0, 0)).unwrap(), Some(0));
        assert_eq!(deformable_to_split(&cp(0, 1)).unwrap(), None);
        assert_eq!(deformable_to_split(&cp(5, 6)).unwrap(), Some(2));
        // roots −1 (double): square discriminant but no nonnegative root
        assert_eq!(deformable_to_split(&cp(-2, 1)).unwrap(), None);
        assert_eq!(deformable_to_split(&cp(0, -9)).unwrap(), Some(3));
    }

    #[test]
    fn concordance_examples() {
        let v = concordance_to_split(&cp(3, 0)).unwrap();
        assert_eq!((v.value, v.witness), (Answer::Yes, Some(0)));
        let v = concordance_to_split(&cp(5, 6)).unwrap();
        assert_eq!((v.value, v.witness), (Answer::Yes, Some(2)));
        assert_eq!(twist(&cp(5, 6), &-2).unwrap(), cp(1, 0));
        let v = concordance_to_split(&cp(0, 1)).unwrap();
        assert_eq!(v.value, Answer::Unknown);
        let v = concordance_to_split(&cp(-2, 1)).unwrap();
        assert_eq!(
            (v.value, v.reason, v.witness),
            (Answer::Yes, Reason::SplitAfterNegativeTwist, Some(-1))
        );
    }

    #[test]
    fn hcob_examples() {
        let v = h_cobordant(&cp(0, 0), &cp(2, 1)).unwrap();
        assert_eq!((v.value, v.witness), (Answer::Yes, Some(0)));
        let v = h_cobordant(&cp(0, 1), &cp(2, 2)).unwrap();
        assert_eq!(
            (v.value, v.reason),
            (Answer::Unknown, Reason::OpenNotSplitDeformable)
        );
        let v = h_cobordant(&cp(0, 0), &cp(0, 1)).unwrap();
        assert_eq!(v.value, Answer::No);
    }

    #[test]
    fn hcob_is_symmetric_across_negative_roots() {
        let a = h_cobordant(&cp(-2, 1), &cp(0, 0)).unwrap();
        let b = h_cobordant(&cp(0, 0), &cp(-2, 1)).unwrap();
        assert_eq!((a.value, b.value), (Answer::Yes, Answer::Yes));
    }

    #[test]
    fn bundle_deformation() {
        assert!(deformation_equivalent_bundles(&cp(0, 3), &cp(0, 3)).is_yes());
        assert_eq!(
            deformation_equivalent_bundles(&cp(0, 3), &cp(2, 4)).value,
            Answer::No
        );
        assert_eq!(
            deformation_equivalent_bundles(&cp(1, 1), &cp(1, 2)).value,
            Answer::No
        );
    }

    #[test]
    fn reports() {
        let r = complex_report(&cp(0, 0), &cp(2, 1)).unwrap();
        assert!(r.entries()[..4].iter().all(|(_, v)| v.is_yes()));
        assert!(r.a1_h_cobordism.is_yes());

        let r = complex_report(&cp(0, 1), &cp(0, 2)).unwrap();
        assert!(r.entries()[..5].iter().all(|(_, v)| v.value == Answer::No));

        let r = complex_report(&cp(0, 1), &cp(0, 1)).unwrap();
        assert!(r.entries()[..4].iter().all(|(_, v)| v.is_yes()));
        assert_eq!(r.a1_h_cobordism.value, Answer::Unknown);
        assert_eq!(
            (
                r.a1_concordance_of_bundles.value,
                r.a1_concordance_of_bundles.reason
            ),
            (Answer::Yes, Reason::Reflexive)
        );
    }

    #[test]
    fn type_obstruction() {
        let v = direct_hcob_type_obstruction(0, 4, 5).unwrap();
        assert_eq!(
            (v.value, v.reason),
            (Answer::Yes, Reason::DistinctRigidTypes)
        );
        let v = direct_hcob_type_obstruction(0, 4, 4).unwrap();
        assert_eq!((v.value, v.reason), (Answer::Unknown, Reason::EqualTypes));
        let v = direct_hcob_type_obstruction(0, 2, 5).unwrap();
        assert_eq!(
            (v.value, v.reason),
            (Answer::Unknown, Reason::BelowUniquenessBound)
        );
        assert!(direct_hcob_type_obstruction(1, 4, 5).is_err());
        assert!(direct_hcob_type_obstruction(0, -1, 5).is_err());
    }

    #[test]
    fn verdict_text_and_json() {
        let v = weak_equivalent(&cp(0, 0), &cp(2, 1)).unwrap();
        assert_eq!(v.to_string(), "YES (twist_orbit): twist l=1");
        assert_eq!(
            serde_json::to_value(v).unwrap(),
            serde_json::json!({"value": "yes", "reason": "twist_orbit", "witness": 1})
        );
        let v = h_cobordant(&cp(0, 1), &cp(2, 2)).unwrap();
        assert_eq!(
            v.to_string(),
            "UNKNOWN (open_not_split_deformable): weakly equivalent; no d with d^2-d*c1+c2=0"
        );
        let back: Verdict = serde_json::from_value(serde_json::to_value(v).unwrap()).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn reason_tags_match_serde() {
        use Reason::*;
        for r in [
            TwistOrbit,
            InvariantMismatch,
            SplitDeformable,
            SplitAfterNegativeTwist,
            OpenNotSplitDeformable,
            OpenConcordance,
            Reflexive,
            EqualChernClasses,
            ChernClassesDiffer,
            DistinctRigidTypes,
            EqualTypes,
            BelowUniquenessBound,
        ] {
            assert_eq!(serde_json::to_value(r).unwrap(), r.tag());
        }
    }
}

//! Acceptance suite. Each criterion prints one PASS or FAIL line; the process
//! exits non-zero if any criterion fails.

use std::process::{Command, ExitCode, Output};

use pbundle::chern::monad_cohomology_chern;
use pbundle::chow::triple_self_product;
use pbundle::classify::{complex_report, h_cobordant, weak_equivalent, Answer};
use pbundle::cubic::{cubic_discriminant_standard, picard_cubic};
use pbundle::moduli::{moduli_dim, non_cobordant_types, stromme_threshold, ModuliDim};
use pbundle::oracles::{decide_ring_iso, orbit_oracle, ring_iso_search, IsoSearch, SearchBound};
use pbundle::orbits::same_orbit;
use pbundle::{ChernPair, MonadSpec, PbRing};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn cp(c1: i64, c2: i64) -> ChernPair {
    ChernPair::new(c1, c2)
}

fn grid(r: i64) -> impl Iterator<Item = ChernPair> + Clone {
    (-r..=r).flat_map(move |c1| (-r..=r).map(move |c2| cp(c1, c2)))
}

fn orbit_completeness() -> Outcome {
    let mut n = 0u64;
    for p in grid(12) {
        for q in grid(12) {
            let decided = same_orbit(&p, &q).map_err(|e| e.to_string())?;
            let scanned = orbit_oracle(&p, &q).map_err(|e| e.to_string())?.is_some();
            if decided != scanned {
                return Err(format!(
                    "{p} vs {q}: same_orbit={decided}, oracle={scanned}"
                ));
            }
            n += 1;
        }
    }
    if n != 390_625 {
        return Err(format!("expected 390625 pairs, checked {n}"));
    }
    Ok(format!("{n} pairs agree"))
}

/// Classical discriminant of `a x³ + b x²y + c xy² + d y³`, written out.
fn textbook_discriminant(f: [i64; 4]) -> i64 {
    let [a, b, c, d] = f;
    b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d
}

fn discriminant_reconciliation() -> Outcome {
    let mut n = 0;
    for p in grid(20) {
        let f = picard_cubic(&p).map_err(|e| e.to_string())?;
        let lib = cubic_discriminant_standard(&f).map_err(|e| e.to_string())?;
        let expected = -27 * (p.c1 * p.c1 - 4 * p.c2);
        if lib != expected || textbook_discriminant(*f.coeffs()) != expected {
            return Err(format!("{p}: got {lib}, expected {expected}"));
        }
        n += 1;
    }
    Ok(format!("{n} pairs"))
}

fn ring_form_agreement() -> Outcome {
    let mut n = 0;
    for p in grid(8) {
        let ring = PbRing::new(p);
        let (c1, c2) = (p.c1, p.c2);
        for a in -8..=8i64 {
            for b in -8..=8i64 {
                let closed = 3 * a * a * b - 3 * c1 * a * b * b + (c1 * c1 - c2) * b * b * b;
                let got = triple_self_product(&ring, a, b).map_err(|e| e.to_string())?;
                if got != closed {
                    return Err(format!("{p}, ({a},{b}): ring {got}, closed form {closed}"));
                }
                n += 1;
            }
        }
    }
    Ok(format!("{n} cases"))
}

fn monad_invariance() -> Outcome {
    let mut n = 0;
    for p in grid(10) {
        for d in -10..=10 {
            let got = monad_cohomology_chern(&MonadSpec::new(p, d)).map_err(|e| e.to_string())?;
            if got != p {
                return Err(format!("{p}, d={d}: got {got}"));
            }
            n += 1;
        }
    }
    Ok(format!("{n} cases"))
}

fn moduli_trichotomy() -> Outcome {
    let dim = |c1, c2, d| moduli_dim(&cp(c1, c2), d).map_err(|e| e.to_string());
    if dim(0, 0, 0)? != ModuliDim::Point
        || dim(0, -1, 0)? != ModuliDim::Empty
        || dim(0, 1, 0)? != ModuliDim::Dim(2)
    {
        return Err("anchor cases differ".into());
    }
    let mut n = 0;
    for c1 in [0, -1] {
        for c2 in -10..=10 {
            for d in 0..=20 {
                let q = d * d - d * c1 + c2;
                let expected = if q < 0 {
                    ModuliDim::Empty
                } else if q == 0 {
                    ModuliDim::Point
                } else {
                    ModuliDim::Dim((3 * q - 1) as u64)
                };
                let got = dim(c1, c2, d)?;
                if got != expected {
                    return Err(format!("({c1},{c2}), d={d}: {got:?} vs {expected:?}"));
                }
                n += 1;
            }
        }
    }
    Ok(format!("{n} cases"))
}

/// Least `d₀` with the codimension condition holding on all of `[d₀, horizon]`,
/// from a direct evaluation of `P` and `γ`.
fn threshold_by_evaluation(c1: i64, c2: i64, horizon: i64) -> i64 {
    let p = |x: i64| (x - 1) * (x - 2 - c1) - c2;
    let gamma = |d: i64, e: i64| {
        if e == -1 || (e == 0 && c1 == 0 && c2 == 0) {
            p(d)
        } else {
            p(d) - p(e) + 1
        }
    };
    let holds = |d: i64| d * d - d * c1 + c2 > 0 && (-1..d).all(|e| gamma(d, e) > 0);
    let mut d0 = horizon + 1;
    while d0 > 0 && holds(d0 - 1) {
        d0 -= 1;
    }
    d0
}

fn threshold_values() -> Outcome {
    let oracle = threshold_by_evaluation(0, 0, 200);
    let lib = stromme_threshold(&cp(0, 0)).map_err(|e| e.to_string())?;
    let types = non_cobordant_types(&cp(0, 0), 3).map_err(|e| e.to_string())?;
    if oracle != 3 || lib != 3 || types != vec![4, 5, 6] {
        return Err(format!("oracle {oracle}, library {lib}, types {types:?}"));
    }
    Ok(format!("threshold {lib}, types {types:?}"))
}

fn hcob_soundness() -> Outcome {
    let mut counts = [0u64; 3];
    for p in grid(8) {
        for q in grid(8) {
            let h = h_cobordant(&p, &q).map_err(|e| e.to_string())?.value;
            let w = weak_equivalent(&p, &q).map_err(|e| e.to_string())?.value;
            let sound = match h {
                Answer::Yes => w == Answer::Yes,
                Answer::No => w == Answer::No,
                Answer::Unknown => w == Answer::Yes,
            };
            if !sound {
                return Err(format!("{p} vs {q}: h-cobordism {h}, weak equivalence {w}"));
            }
            counts[h as usize] += 1;
        }
    }
    let witness = h_cobordant(&cp(0, 1), &cp(0, 1)).map_err(|e| e.to_string())?;
    if witness.value != Answer::Unknown {
        return Err(format!("((0,1),(0,1)) gave {witness}"));
    }
    Ok(format!(
        "yes {}, no {}, unknown {}",
        counts[Answer::Yes as usize],
        counts[Answer::No as usize],
        counts[Answer::Unknown as usize]
    ))
}

fn topological_collapse() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    for _ in 0..10_000 {
        let pair =
            |rng: &mut ChaCha8Rng| cp(rng.gen_range(-1000..=1000), rng.gen_range(-1000..=1000));
        let p = pair(&mut rng);
        let q = if rng.gen_bool(0.5) {
            let l = rng.gen_range(-20..=20);
            cp(p.c1 + 2 * l, p.c2 + l * p.c1 + l * l)
        } else {
            pair(&mut rng)
        };
        let report = complex_report(&p, &q).map_err(|e| e.to_string())?;
        let weak = report.a1_weak_equivalence;
        let topo = [
            report.homotopy_equivalence,
            report.diffeomorphism,
            report.deformation_equivalence,
        ];
        if weak != weak_equivalent(&p, &q).map_err(|e| e.to_string())?
            || topo.iter().any(|v| *v != weak)
        {
            return Err(format!("{p} vs {q}: {report:?}"));
        }
    }
    Ok("10000 random pairs".into())
}

fn ring_iso_decision() -> Outcome {
    let bound = SearchBound::new(3).map_err(|e| e.to_string())?;
    let disc = |x: &ChernPair| x.c1 * x.c1 - 4 * x.c2;
    let (mut found, mut obstructed) = (0, 0);
    for p in grid(4) {
        for q in grid(4) {
            let witness = orbit_oracle(&p, &q).map_err(|e| e.to_string())?;
            let equivalent = disc(&p) == disc(&q) && witness.is_some();
            let searched = ring_iso_search(&p, &q, bound).map_err(|e| e.to_string())?;
            let decided = decide_ring_iso(&p, &q, bound).map_err(|e| e.to_string())?;
            match (equivalent, searched, decided) {
                (true, Some(_), IsoSearch::Found(_)) => found += 1,
                (false, None, IsoSearch::Obstructed { left, right })
                    if left != right && left == disc(&p) as i128 && right == disc(&q) as i128 =>
                {
                    obstructed += 1
                }
                (_, s, d) => return Err(format!("{p} vs {q}: search {s:?}, decision {d:?}")),
            }
        }
    }
    Ok(format!("{found} isomorphic, {obstructed} obstructed"))
}

fn pbundle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pbundle"))
        .args(args)
        .env_remove("PBUNDLE_WIDTH")
        .output()
        .expect("binary runs")
}

const SUBCOMMANDS: &[&[&str]] = &[
    &["normalize", "--pair", "5,-3"],
    &["equiv", "--left", "0,0", "--right", "2,1"],
    &["hcob", "--left", "0,1", "--right", "2,2"],
    &["report", "--left", "-2,1", "--right", "0,0"],
    &["chow", "--pair", "1,4", "--cube", "2,-1"],
    &["moduli", "--pair", "0,1", "--dmax", "6"],
    &[
        "moduli",
        "--pair",
        "-1,0",
        "--dmax",
        "6",
        "--e",
        "1",
        "--q3-as-printed",
    ],
    &["threshold", "--pair", "0,0"],
    &["types", "--pair", "0,0", "--count", "3"],
    &["monad-check", "--pair", "3,2", "--d", "5"],
    &["line", "--c1", "-1", "--d", "3"],
    &["scan", "--range", "-3:3:-3:3"],
    &["verify"],
];

fn cli_end_to_end() -> Outcome {
    let scan = pbundle(&["--json", "scan", "--range", "0:0:-2:2"]);
    let doc: Value = serde_json::from_slice(&scan.stdout).map_err(|e| e.to_string())?;
    let discs: Vec<i64> = doc["orbits"]
        .as_array()
        .ok_or("scan JSON has no orbits array")?
        .iter()
        .filter_map(|o| o["discriminant"].as_i64())
        .collect();
    if !scan.status.success() || doc["orbit_count"] != 5 || discs != [8, 4, 0, -4, -8] {
        return Err(format!("scan gave {discs:?}"));
    }

    let verify = pbundle(&["verify"]);
    if verify.status.code() != Some(0) {
        return Err(format!("verify exited {:?}", verify.status.code()));
    }

    for args in SUBCOMMANDS {
        for json in [false, true] {
            let mut argv = args.to_vec();
            if json {
                argv.insert(0, "--json");
            }
            let first = pbundle(&argv);
            let second = pbundle(&argv);
            if first.status.code() != Some(0) || first.stdout != second.stdout {
                return Err(format!(
                    "{argv:?}: exit {:?} or non-deterministic",
                    first.status.code()
                ));
            }
            if json {
                let text = String::from_utf8(first.stdout).map_err(|e| e.to_string())?;
                let v: Value = serde_json::from_str(&text).map_err(|e| format!("{argv:?}: {e}"))?;
                let reprinted = serde_json::to_string_pretty(&v).map_err(|e| e.to_string())? + "\n";
                if reprinted != text || v["schema"] != "1" {
                    return Err(format!("{argv:?}: JSON does not round-trip"));
                }
            }
        }
    }
    Ok(format!(
        "{} invocations, each run twice",
        SUBCOMMANDS.len() * 2
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("orbit decision completeness", orbit_completeness),
        ("discriminant reconciliation", discriminant_reconciliation),
        ("ring/form agreement", ring_form_agreement),
        ("monad invariance", monad_invariance),
        ("moduli trichotomy", moduli_trichotomy),
        ("threshold and non-cobordant types", threshold_values),
        ("h-cobordism soundness", hcob_soundness),
        ("topological relations collapse", topological_collapse),
        ("ring isomorphism decision", ring_iso_decision),
        ("cli end to end", cli_end_to_end),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

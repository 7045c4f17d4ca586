//! Acceptance criteria, one `[PASS]`/`[FAIL]` line each. Runs without the
//! libtest harness so every line is printed and the runtime bound applies to
//! each criterion on its own.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use longface::basiskit::{change_of_basis, BasisId};
use longface::battery::{run_battery, Family, Level, Summary, VerifyConfig};
use longface::dscheck::{eta, is_ds_system, long_h_at_rank};
use longface::faceset::{dual_system, make_simplex, FaceSystem};
use longface::oracle::{derived_change_of_basis, enumerate_systems};
use longface::partitions::{find_partition, Strategy};
use longface::LongVector;

type Outcome = Result<String, String>;

use BasisId::{FDown, FUp, HDot, HDown, HUp, Std};

type Pairs = &'static [(BasisId, BasisId)];

/// The `m = 3` matrices printed in the change-of-basis table, each with the
/// ordered pairs it is listed for.
const TABLE1_M3: &[(Pairs, [[i64; 4]; 4])] = &[
    (
        &[(Std, FUp), (HDot, HUp), (HDown, FDown)],
        [[1, 0, 0, 0], [1, 1, 0, 0], [1, 2, 1, 0], [1, 3, 3, 1]],
    ),
    (
        &[(FUp, Std), (HUp, HDot), (FDown, HDown)],
        [[1, 0, 0, 0], [-1, 1, 0, 0], [1, -2, 1, 0], [-1, 3, -3, 1]],
    ),
    (
        &[(Std, FDown), (HDot, HDown), (HDown, FUp)],
        [[0, 0, 0, 1], [0, 0, 1, 1], [0, 1, 2, 1], [1, 3, 3, 1]],
    ),
    (
        &[(FDown, Std), (HDown, HDot), (FUp, HDown)],
        [[-1, 3, -3, 1], [1, -2, 1, 0], [-1, 1, 0, 0], [1, 0, 0, 0]],
    ),
    (
        &[(Std, HUp)],
        [[1, -3, 3, -1], [1, -2, 1, 0], [1, -1, 0, 0], [1, 0, 0, 0]],
    ),
    (
        &[(HUp, Std)],
        [[0, 0, 0, 1], [0, 0, -1, 1], [0, 1, -2, 1], [-1, 3, -3, 1]],
    ),
    (
        &[(Std, HDown), (HDown, Std)],
        [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]],
    ),
    (
        &[(Std, HDot)],
        [[1, -3, 3, -1], [0, 1, -2, 1], [0, 0, 1, -1], [0, 0, 0, 1]],
    ),
    (
        &[(HDot, Std)],
        [[1, 3, 3, 1], [0, 1, 2, 1], [0, 0, 1, 1], [0, 0, 0, 1]],
    ),
    (
        &[(FUp, HUp)],
        [[8, -12, 6, -1], [4, -4, 1, 0], [2, -1, 0, 0], [1, 0, 0, 0]],
    ),
    (
        &[(HUp, FUp)],
        [[0, 0, 0, 1], [0, 0, -1, 2], [0, 1, -4, 4], [-1, 6, -12, 8]],
    ),
    (
        &[(FUp, FDown), (FDown, FUp), (HUp, HDown), (HDown, HUp)],
        [[-1, 3, -3, 1], [0, 1, -2, 1], [0, 0, -1, 1], [0, 0, 0, 1]],
    ),
    (
        &[(HUp, FDown)],
        [
            [-1, 3, -3, 1],
            [-1, 4, -5, 2],
            [-1, 5, -8, 4],
            [-1, 6, -12, 8],
        ],
    ),
    (
        &[(FDown, HUp)],
        [
            [-8, 12, -6, 1],
            [-4, 8, -5, 1],
            [-2, 5, -4, 1],
            [-1, 3, -3, 1],
        ],
    ),
    (
        &[(HDot, FUp)],
        [[1, 3, 3, 1], [1, 4, 5, 2], [1, 5, 8, 4], [1, 6, 12, 8]],
    ),
    (
        &[(FUp, HDot)],
        [
            [8, -12, 6, -1],
            [-4, 8, -5, 1],
            [2, -5, 4, -1],
            [-1, 3, -3, 1],
        ],
    ),
    (
        &[(HDot, FDown)],
        [[0, 0, 0, 1], [0, 0, 1, 2], [0, 1, 4, 4], [1, 6, 12, 8]],
    ),
    (
        &[(FDown, HDot)],
        [[-8, 12, -6, 1], [4, -4, 1, 0], [-2, 1, 0, 0], [1, 0, 0, 0]],
    ),
];

fn ac1_table1_goldens() -> Outcome {
    let mut pairs = 0;
    for (listed, rows) in TABLE1_M3 {
        let expected: Vec<Vec<String>> = rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect())
            .collect();
        for &(from, to) in listed.iter() {
            let out = Command::new(env!("CARGO_BIN_EXE_longface"))
                .args([
                    "matrix",
                    "--m",
                    "3",
                    "--from",
                    from.name(),
                    "--to",
                    to.name(),
                ])
                .output()
                .map_err(|e| e.to_string())?;
            if !out.status.success() {
                return Err(format!("matrix {from}->{to} exited with {}", out.status));
            }
            let got: Vec<Vec<String>> =
                serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
            if got != expected {
                return Err(format!("{from}->{to}: got {got:?}"));
            }
            pairs += 1;
        }
    }
    if pairs != 30 {
        return Err(format!("{pairs} ordered pairs covered, expected 30"));
    }
    Ok(format!(
        "{} printed matrices, {pairs} ordered pairs",
        TABLE1_M3.len()
    ))
}

fn ac2_inverse_pairing() -> Outcome {
    let mut checks = 0;
    for m in 0..=8 {
        for a in BasisId::ALL {
            for b in BasisId::ALL {
                let ab = change_of_basis(a, b, m);
                if !(&ab * &change_of_basis(b, a, m)).is_identity() {
                    return Err(format!("M({a}->{b})·M({b}->{a}) != I at m={m}"));
                }
                if ab != derived_change_of_basis(a, b, m) {
                    return Err(format!(
                        "closed form {a}->{b} differs from elimination at m={m}"
                    ));
                }
                checks += 2;
            }
        }
    }
    Ok(format!("{checks} checks, m <= 8"))
}

fn summarize(summaries: &[Summary]) -> Outcome {
    let mut systems = 0;
    let mut checks = 0;
    for s in summaries {
        if !s.all_pass() {
            return Err(s.to_string());
        }
        systems += s.systems;
        checks += s.checks();
    }
    Ok(format!("{systems} systems, {checks} checks, 0 failures"))
}

fn battery(cfg: VerifyConfig) -> Result<Summary, String> {
    run_battery(&cfg).map_err(|e| e.to_string())
}

fn exhaustive(families: &[Family]) -> Result<Vec<Summary>, String> {
    (1..=4)
        .map(|m| battery(VerifyConfig::new(m, Level::Exhaustive).families(families)))
        .collect()
}

fn ac3_defining_identity() -> Outcome {
    let mut runs = exhaustive(&[Family::DefiningIdentity])?;
    runs.push(battery(
        VerifyConfig::new(10, Level::Sampled)
            .seed(3)
            .samples(10_000)
            .families(&[Family::DefiningIdentity]),
    )?);
    summarize(&runs)
}

fn ac4_identity_battery() -> Outcome {
    let families = [Family::Identities, Family::Valuation, Family::Duality];
    let mut runs = exhaustive(&families)?;
    for m in 5..=10 {
        runs.push(battery(
            VerifyConfig::new(m, Level::Sampled)
                .seed(4)
                .samples(200)
                .families(&families),
        )?);
    }
    summarize(&runs)
}

fn ac5_representation() -> Outcome {
    summarize(&exhaustive(&[Family::Representation])?)
}

fn ac6_partition_independence() -> Outcome {
    let families = [Family::PartitionIndependence];
    let runs = vec![
        battery(VerifyConfig::new(3, Level::Exhaustive).families(&families))?,
        battery(
            VerifyConfig::new(6, Level::Sampled)
                .seed(6)
                .samples(500)
                .families(&families),
        )?,
    ];
    summarize(&runs)
}

fn ac7_ds_equivalence() -> Outcome {
    let families = [Family::DsEquivalence, Family::DsConclusions];
    let runs = vec![
        battery(VerifyConfig::new(3, Level::Exhaustive).families(&families))?,
        battery(VerifyConfig::new(4, Level::Exhaustive).families(&families))?,
    ];
    let found = runs[1].get(Family::DsConclusions).map_or(0, |t| t.cases);
    if found == 0 {
        return Err("no DS-systems found at m = 4".into());
    }
    summarize(&runs).map(|s| format!("{s}, {found} DS-systems at m = 4"))
}

fn ac8_worked_fixtures() -> Outcome {
    let phi = FaceSystem::from_lists(2, &[&[], &[1], &[2]]).map_err(|e| e.to_string())?;
    let h = long_h_at_rank(&phi, 3).map_err(|e| e.to_string())?;
    if h != LongVector::from_i64s(&[1, -1, -1, 1]) || h != h.reversed() {
        return Err(format!("h(Φ;3) = {h}"));
    }
    let cert = is_ds_system(&phi, None).map_err(|e| e.to_string())?;
    if !cert.is_ds || eta(&phi) != Ok(3) {
        return Err(format!("certificate {cert:?}"));
    }
    for m in 1..=10 {
        let simplex = make_simplex(m).map_err(|e| e.to_string())?;
        let theta = find_partition(&simplex, Strategy::MinTheta)
            .map_err(|e| e.to_string())?
            .theta();
        if theta != 1 {
            return Err(format!("min_theta(2^[{m}]) = {theta}"));
        }
    }
    let mut duals = 0;
    for m in 0..=4 {
        for sys in enumerate_systems(m).map_err(|e| e.to_string())? {
            let back = dual_system(&dual_system(&sys).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            if back != sys {
                return Err(format!("Φ** != Φ for {sys:?}"));
            }
            duals += 1;
        }
    }
    Ok(format!(
        "h = (1,-1,-1,1), η = 3, min_theta = 1 for m <= 10, {duals} involutions"
    ))
}

struct Criterion {
    id: &'static str,
    title: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: "AC1",
        title: "change-of-basis goldens at m = 3",
        limit: Duration::from_secs(1),
        run: ac1_table1_goldens,
    },
    Criterion {
        id: "AC2",
        title: "inverse pairing and elimination agreement",
        limit: Duration::from_secs(10),
        run: ac2_inverse_pairing,
    },
    Criterion {
        id: "AC3",
        title: "h = f·S against polynomial expansion",
        limit: Duration::from_secs(60),
        run: ac3_defining_identity,
    },
    Criterion {
        id: "AC4",
        title: "special values, valuation, duality, Alexander identities",
        limit: Duration::from_secs(60),
        run: ac4_identity_battery,
    },
    Criterion {
        id: "AC5",
        title: "representation identities",
        limit: Duration::from_secs(30),
        run: ac5_representation,
    },
    Criterion {
        id: "AC6",
        title: "profile formulas independent of the partition",
        limit: Duration::from_secs(120),
        run: ac6_partition_independence,
    },
    Criterion {
        id: "AC7",
        title: "DS equivalence and conclusions",
        limit: Duration::from_secs(120),
        run: ac7_ds_equivalence,
    },
    Criterion {
        id: "AC8",
        title: "worked fixtures",
        limit: Duration::from_secs(5),
        run: ac8_worked_fixtures,
    },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= c.limit => (true, d),
            Ok(d) => (false, format!("{d}; exceeded {:?}", c.limit)),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "[{}] {} {} ({:.2}s / {}s): {detail}",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
    }
    println!(
        "{} of {} criteria passed",
        CRITERIA.len() - failed,
        CRITERIA.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

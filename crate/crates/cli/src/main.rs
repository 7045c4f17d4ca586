use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use longface::basiskit::{basis_vector, change_of_basis, coordinates, BasisId};
use longface::battery::{run_battery, Level, VerifyConfig, DEFAULT_SAMPLES};
use longface::dscheck::is_ds_system;
use longface::faceset::{dual_system, FaceSystem, MAX_RANK};
use longface::longvec::{long_f, long_h_from_f};
use longface::partitions::{
    find_partition, profile, profile_representation, verify_partition, IntervalPartition, Profile,
    Strategy, Target,
};
use longface::{BooleanInterval, Error};

/// Exact long f- and h-vectors of face systems.
///
/// Basis names: std (S), hdot (H•), fup (F▲), hup (H▲), fdown (F▼),
/// hdown (H▼). Exit status: 0 success, 1 negative answer, 2 usage or input
/// error.
#[derive(Parser, Debug)]
#[command(name = "longface", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Long f- or h-vector of a system, optionally as coordinates in a basis.
    Compute {
        #[arg(long)]
        system: PathBuf,
        #[arg(long, value_enum)]
        what: What,
        #[arg(long, value_parser = parse_basis)]
        basis: Option<BasisId>,
    },
    /// Change-of-basis matrix M(from → to).
    Matrix {
        #[arg(long, value_parser = parse_rank)]
        m: usize,
        #[arg(long, value_parser = parse_basis)]
        from: BasisId,
        #[arg(long, value_parser = parse_basis)]
        to: BasisId,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// One basis vector.
    Basis {
        #[arg(long, value_parser = parse_rank)]
        m: usize,
        #[arg(long, value_parser = parse_basis)]
        which: BasisId,
        #[arg(long)]
        index: usize,
    },
    /// The dual system Φ* in the face-system text format.
    Dual {
        #[arg(long)]
        system: PathBuf,
    },
    /// Partition a system into Boolean intervals, or check a given
    /// partition, and report its profile.
    Partition {
        #[arg(long)]
        system: PathBuf,
        #[arg(long, value_enum, conflicts_with = "partition")]
        strategy: Option<StrategyArg>,
        /// JSON list of {"bottom": [..], "top": [..]} intervals.
        #[arg(long)]
        partition: Option<PathBuf>,
    },
    /// Evaluate a profile formula for f or h in a basis.
    ProfileEval {
        #[arg(long)]
        profile: PathBuf,
        #[arg(long, value_parser = parse_rank)]
        m: usize,
        #[arg(long, value_enum)]
        target: TargetArg,
        #[arg(long, value_parser = parse_basis)]
        basis: BasisId,
    },
    /// Certify whether a system is a DS-system. Exits 1 if it is not.
    DsCheck {
        #[arg(long)]
        system: PathBuf,
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// Run the identity battery. Exits 1 on any failure.
    Verify {
        #[arg(long)]
        m: usize,
        #[arg(long, env = "LONGFACE_LEVEL", default_value = "exhaustive", value_parser = parse_level)]
        level: Level,
        #[arg(long, env = "LONGFACE_SEED", default_value_t = 0)]
        seed: u64,
        /// Systems drawn by a sampled run.
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Print the summary as JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum What {
    F,
    H,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Grid,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Singletons,
    Greedy,
    MinTheta,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TargetArg {
    F,
    H,
}

fn parse_basis(s: &str) -> Result<BasisId, String> {
    s.parse()
}

fn parse_level(s: &str) -> Result<Level, String> {
    s.parse()
}

fn parse_rank(s: &str) -> Result<usize, String> {
    let m: usize = s.parse().map_err(|_| format!("`{s}` is not a rank"))?;
    if m > MAX_RANK {
        return Err(format!("rank {m} exceeds {MAX_RANK}"));
    }
    Ok(m)
}

/// Failure of a command: either an input problem (exit 2) or a negative
/// answer whose output has already been written (exit 1).
enum Failure {
    Input(String),
    Negative,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_system(path: &Path) -> Result<FaceSystem, Failure> {
    FaceSystem::parse_text(&read(path)?)
        .map_err(|e| Failure::Input(format!("{}:{e}", path.display())))
}

fn emit_json<T: Serialize>(value: &T) -> Outcome {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value).map_err(|e| Failure::Input(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn compute(system: &Path, what: What, basis: Option<BasisId>) -> Outcome {
    let sys = read_system(system)?;
    let f = long_f(&sys);
    let w = match what {
        What::F => f,
        What::H => long_h_from_f(&f),
    };
    match basis {
        None => emit_json(&w),
        Some(b) => emit_json(&coordinates(&w, b).values),
    }
}

#[derive(Serialize)]
struct PartitionOutput<'a> {
    theta: usize,
    intervals: &'a [BooleanInterval],
    profile: Profile,
}

fn partition(system: &Path, strategy: Option<StrategyArg>, given: Option<&Path>) -> Outcome {
    let sys = read_system(system)?;
    let partition = match given {
        Some(path) => {
            let p = IntervalPartition::from_json(sys.rank(), &read(path)?)
                .map_err(|e| Failure::Input(format!("{}:{e}", path.display())))?;
            if let Err(v) = verify_partition(&sys, &p) {
                eprintln!("not a partition: {v}");
                return Err(Failure::Negative);
            }
            p
        }
        None => {
            let strategy = match strategy.unwrap_or(StrategyArg::Greedy) {
                StrategyArg::Singletons => Strategy::Singletons,
                StrategyArg::Greedy => Strategy::Greedy,
                StrategyArg::MinTheta => Strategy::MinTheta,
            };
            find_partition(&sys, strategy)?
        }
    };
    emit_json(&PartitionOutput {
        theta: partition.theta(),
        intervals: &partition.intervals,
        profile: profile(&partition)?,
    })
}

fn profile_eval(path: &Path, m: usize, target: TargetArg, basis: BasisId) -> Outcome {
    let text = read(path)?;
    let p: Profile = serde_json::from_str(&text).map_err(|e| {
        Failure::Input(format!(
            "{}:{}:{}: {e}",
            path.display(),
            e.line(),
            e.column()
        ))
    })?;
    let target = match target {
        TargetArg::F => Target::F,
        TargetArg::H => Target::H,
    };
    emit_json(&profile_representation(&p, m, target, basis)?)
}

fn ds_check(system: &Path, n_max: Option<usize>) -> Outcome {
    let cert = is_ds_system(&read_system(system)?, n_max)?;
    emit_json(&cert)?;
    if cert.is_ds {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn verify(cfg: VerifyConfig, json: bool) -> Outcome {
    let summary = run_battery(&cfg)?;
    if json {
        emit_json(&summary)?;
        eprintln!("{summary}");
    } else {
        println!("{summary}");
    }
    if summary.all_pass() {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Compute {
            system,
            what,
            basis,
        } => compute(&system, what, basis),
        Command::Matrix {
            m,
            from,
            to,
            format,
        } => {
            let matrix = change_of_basis(from, to, m);
            match format {
                Format::Json => emit_json(&matrix),
                Format::Grid => {
                    print!("{}", matrix.to_grid());
                    Ok(())
                }
            }
        }
        Command::Basis { m, which, index } => emit_json(&basis_vector(which, index, m)?),
        Command::Dual { system } => {
            print!("{}", dual_system(&read_system(&system)?)?.to_text());
            Ok(())
        }
        Command::Partition {
            system,
            strategy,
            partition: given,
        } => partition(&system, strategy, given.as_deref()),
        Command::ProfileEval {
            profile,
            m,
            target,
            basis,
        } => profile_eval(&profile, m, target, basis),
        Command::DsCheck { system, n_max } => ds_check(&system, n_max),
        Command::Verify {
            m,
            level,
            seed,
            samples,
            json,
        } => verify(
            VerifyConfig::new(m, level).seed(seed).samples(samples),
            json,
        ),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

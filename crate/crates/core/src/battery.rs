//! The identity battery behind `longface verify`.
//!
//! Each [`Family`] groups related identities. Systems come either from the
//! exhaustive enumeration of `2^(2^m)` systems or from a seeded random
//! sample; they are checked in parallel and tallied in system order, so
//! counts and the reported first failure do not depend on scheduling.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::basiskit::{
    basis_matrix, change_of_basis, composed_change_of_basis, coordinates,
    representation_identities, s_matrix, BasisId, ExactMatrix,
};
use crate::dscheck::{admissible_ranks, conclusion_checks, eta, is_ds_system, long_ds_holds};
use crate::error::{Error, Result};
use crate::faceset::{
    downward_closure, dual_system, is_relative_complex, Face, FaceSystem, MAX_ENUM_RANK,
};
use crate::longvec::{
    classical_from_long, classical_h, identity_report, long_f, long_f_from_h, long_from_classical,
    long_h_from_f, valuation_check, LongVector,
};
use crate::oracle::{
    derived_change_of_basis, dual_by_definition, h_by_expansion, invert_exact, naive_min_theta,
    naive_partition_count, random_system, seeded_rng, system_from_index, Density,
    MAX_EXHAUSTIVE_RANK,
};
use crate::partitions::{
    find_partition, for_each_partition, min_theta_partition, profile, profile_face_count_matches,
    profile_representation, random_partition, verify_partition, IntervalPartition, Profile,
    Strategy, Target, DEFAULT_SEARCH_BUDGET,
};
use crate::report::Report;

/// Random systems drawn per sampled run unless overridden.
pub const DEFAULT_SAMPLES: usize = 200;
/// DS-systems are certified for every admissible `n` up to this bound.
pub const DS_N_MAX: usize = 10;
/// Largest rank at which every partition of every system is enumerated.
pub const MAX_ALL_PARTITIONS_RANK: usize = 3;
/// Largest system on which the sampled battery runs the minimal search.
const SAMPLED_MIN_THETA_FACES: usize = 24;
/// Random partitions tried per system, up to this rank.
const RANDOM_PARTITIONS: usize = 2;
const MAX_RANDOM_PARTITION_RANK: usize = 8;
/// Largest system compared against the brute-force partition oracle.
const NAIVE_FACES: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Exhaustive,
    Sampled,
}

impl FromStr for Level {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "exhaustive" => Ok(Level::Exhaustive),
            "sampled" => Ok(Level::Sampled),
            _ => Err(format!(
                "unknown level `{s}` (expected exhaustive or sampled)"
            )),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Exhaustive => "exhaustive",
            Level::Sampled => "sampled",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Closed-form conversions against elimination and the composed route.
    Table1,
    /// `M(a→b)·M(b→a) = I` and the elimination inverse.
    InversePairing,
    /// `h = f·S`, the summation form and the polynomial expansion.
    DefiningIdentity,
    /// Special values, counting, duality and classical conversions.
    Identities,
    Valuation,
    Duality,
    Representation,
    PartitionIndependence,
    DsEquivalence,
    DsConclusions,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Table1,
        Family::InversePairing,
        Family::DefiningIdentity,
        Family::Identities,
        Family::Valuation,
        Family::Duality,
        Family::Representation,
        Family::PartitionIndependence,
        Family::DsEquivalence,
        Family::DsConclusions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Table1 => "table1-closed-forms",
            Family::InversePairing => "inverse-pairing",
            Family::DefiningIdentity => "defining-identity",
            Family::Identities => "identities",
            Family::Valuation => "valuation",
            Family::Duality => "dual-involution",
            Family::Representation => "representation",
            Family::PartitionIndependence => "partition-independence",
            Family::DsEquivalence => "ds-equivalence",
            Family::DsConclusions => "ds-conclusions",
        }
    }

    fn per_system(self) -> bool {
        !matches!(self, Family::Table1 | Family::InversePairing)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub rank: usize,
    pub level: Level,
    pub seed: u64,
    pub samples: usize,
    pub families: Vec<Family>,
}

impl VerifyConfig {
    pub fn new(rank: usize, level: Level) -> Self {
        Self {
            rank,
            level,
            seed: 0,
            samples: DEFAULT_SAMPLES,
            families: Family::ALL.to_vec(),
        }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn samples(mut self, samples: usize) -> Self {
        self.samples = samples;
        self
    }

    pub fn families(mut self, families: &[Family]) -> Self {
        self.families = families.to_vec();
        self
    }
}

/// Counts for one family. `cases` is the number of systems (or basis
/// pairs) examined, `checks` the number of individual identities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub cases: u64,
    pub checks: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl Tally {
    fn check(&mut self, pass: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !pass {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn report(&mut self, report: &Report, context: &dyn Fn() -> String) {
        for c in &report.checks {
            self.check(c.pass, || format!("{}: {}", context(), c.name));
        }
    }

    fn absorb(&mut self, other: Tally) {
        self.cases += other.cases;
        self.checks += other.checks;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyTally {
    pub family: Family,
    #[serde(flatten)]
    pub tally: Tally,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub rank: usize,
    pub level: Level,
    pub seed: Option<u64>,
    pub systems: u64,
    pub families: Vec<FamilyTally>,
}

impl Summary {
    pub fn checks(&self) -> u64 {
        self.families.iter().map(|f| f.tally.checks).sum()
    }

    pub fn failures(&self) -> u64 {
        self.families.iter().map(|f| f.tally.failures).sum()
    }

    pub fn all_pass(&self) -> bool {
        self.failures() == 0
    }

    pub fn get(&self, family: Family) -> Option<&Tally> {
        self.families
            .iter()
            .find(|f| f.family == family)
            .map(|f| &f.tally)
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "verify m={} level={}", self.rank, self.level)?;
        if let Some(seed) = self.seed {
            write!(f, " seed={seed}")?;
        }
        writeln!(f, " systems={}", self.systems)?;
        for ft in &self.families {
            let t = &ft.tally;
            writeln!(
                f,
                "  {:<24} cases {:>7}  checks {:>9}  failures {}",
                ft.family.name(),
                t.cases,
                t.checks,
                t.failures
            )?;
            if let Some(first) = &t.first_failure {
                writeln!(f, "    first failure: {first}")?;
            }
        }
        let verdict = if self.all_pass() { "PASS" } else { "FAIL" };
        write!(
            f,
            "total checks {}  failures {}  {verdict}",
            self.checks(),
            self.failures()
        )
    }
}

/// Conversions between every ordered basis pair at ranks `0..=m`, checked
/// against elimination.
fn matrix_families(rank: usize, families: &[Family]) -> Vec<(Family, Tally)> {
    let mut table1 = Tally::default();
    let mut inverse = Tally::default();
    for m in 0..=rank {
        for from in BasisId::ALL {
            for to in BasisId::ALL {
                let closed = change_of_basis(from, to, m);
                let ctx = || format!("m={m} {from}->{to}");
                if from != to {
                    table1.cases += 1;
                    table1.check(closed == derived_change_of_basis(from, to, m), ctx);
                    table1.check(closed == composed_change_of_basis(from, to, m), ctx);
                }
                inverse.cases += 1;
                let back = change_of_basis(to, from, m);
                inverse.check((&closed * &back).is_identity(), ctx);
                inverse.check(invert_exact(&closed).as_ref() == Ok(&back), ctx);
            }
        }
    }
    let mut out = Vec::new();
    if families.contains(&Family::Table1) {
        out.push((Family::Table1, table1));
    }
    if families.contains(&Family::InversePairing) {
        out.push((Family::InversePairing, inverse));
    }
    out
}

/// Per-rank data shared by every system.
struct Context {
    level: Level,
    s: ExactMatrix,
    /// `B_b^{-1}` for each basis, by elimination.
    coordinate_maps: Vec<(BasisId, ExactMatrix)>,
}

impl Context {
    fn new(rank: usize, level: Level) -> Self {
        let coordinate_maps = BasisId::ALL
            .iter()
            .map(|&b| {
                let inv = invert_exact(&basis_matrix(b, rank)).expect("bases are unimodular");
                (b, inv)
            })
            .collect();
        Self {
            level,
            s: s_matrix(rank),
            coordinate_maps,
        }
    }

    fn all_partitions(&self, sys: &FaceSystem) -> bool {
        self.level == Level::Exhaustive && sys.rank() <= MAX_ALL_PARTITIONS_RANK
    }

    /// Partitions used for the profile identities: all of them on small
    /// exhaustive runs, otherwise singletons, greedy, a minimal one and (up
    /// to rank 8) a few random ones seeded by the system itself.
    fn partitions(&self, sys: &FaceSystem) -> Result<Vec<IntervalPartition>> {
        if self.all_partitions(sys) {
            let mut out = Vec::new();
            for_each_partition(sys, u64::MAX, |p| out.push(p.clone()))?;
            return Ok(out);
        }
        let mut out = vec![
            find_partition(sys, Strategy::Singletons)?,
            find_partition(sys, Strategy::Greedy)?,
        ];
        let min_ok = match self.level {
            Level::Exhaustive => true,
            Level::Sampled => sys.len() <= SAMPLED_MIN_THETA_FACES,
        };
        if min_ok {
            out.push(min_theta_partition(sys, DEFAULT_SEARCH_BUDGET)?);
        }
        if sys.rank() <= MAX_RANDOM_PARTITION_RANK {
            let seed = sys
                .iter()
                .fold(sys.rank() as u64, |acc, f| acc.rotate_left(7) ^ f.mask());
            let mut rng = seeded_rng(seed);
            for _ in 0..RANDOM_PARTITIONS {
                out.push(random_partition(sys, &mut rng)?);
            }
        }
        Ok(out)
    }
}

fn describe(sys: &FaceSystem) -> String {
    let faces: Vec<String> = sys.iter().map(|f| f.to_string()).collect();
    format!("m={} Φ={{{}}}", sys.rank(), faces.join(","))
}

fn defining_identity(sys: &FaceSystem, ctx: &Context, t: &mut Tally) {
    t.cases += 1;
    let f = long_f(sys);
    let expanded = h_by_expansion(&f);
    let d = || describe(sys);
    t.check(ctx.s.left_mul(&f) == expanded, || format!("{}: f.S", d()));
    t.check(long_h_from_f(&f) == expanded, || {
        format!("{}: summation", d())
    });
    t.check(long_f_from_h(&expanded) == f, || {
        format!("{}: inverse summation", d())
    });
}

fn identities(sys: &FaceSystem, t: &mut Tally) -> Result<()> {
    t.cases += 1;
    let d = || describe(sys);
    t.report(&identity_report(sys)?, &d);
    if !sys.is_empty() && is_relative_complex(sys) {
        let size = sys.size().expect("non-empty");
        let h = long_h_from_f(&long_f(sys));
        let cls = classical_h(sys)?;
        t.check(classical_from_long(&h, size)? == cls, || {
            format!("{}: classical", d())
        });
        t.check(long_from_classical(&cls, sys.rank())? == h, || {
            format!("{}: long-from-classical", d())
        });
    }
    Ok(())
}

fn toggled(sys: &FaceSystem) -> FaceSystem {
    if sys.rank() == 0 {
        return sys.clone();
    }
    let one = Face::from_mask(1);
    let faces = sys.iter().map(|f| Face::from_mask(f.mask() ^ one.mask()));
    FaceSystem::from_faces(sys.rank(), faces).expect("same rank")
}

fn valuation(sys: &FaceSystem, t: &mut Tally) -> Result<()> {
    t.cases += 1;
    for (name, other) in [
        ("toggle", toggled(sys)),
        ("closure", downward_closure(sys)),
        ("dual", dual_system(sys)?),
    ] {
        t.check(valuation_check(sys, &other)?, || {
            format!("{}: valuation with {name}", describe(sys))
        });
    }
    Ok(())
}

fn duality(sys: &FaceSystem, t: &mut Tally) -> Result<()> {
    t.cases += 1;
    let dual = dual_system(sys)?;
    t.check(dual == dual_by_definition(sys)?, || {
        format!("{}: dual", describe(sys))
    });
    t.check(dual_system(&dual)? == *sys, || {
        format!("{}: involution", describe(sys))
    });
    Ok(())
}

fn representation(sys: &FaceSystem, ctx: &Context, t: &mut Tally) {
    t.cases += 1;
    let d = || describe(sys);
    t.report(&representation_identities(sys), &d);
    let f = long_f(sys);
    let h = long_h_from_f(&f);
    for (b, inv) in &ctx.coordinate_maps {
        for (name, w) in [("f", &f), ("h", &h)] {
            let direct = coordinates(w, *b).values;
            t.check(direct == inv.left_mul(w), || {
                format!("{}: [{name}]_{b}", d())
            });
        }
    }
}

fn direct_representation(f: &LongVector, h: &LongVector, target: Target, b: BasisId) -> LongVector {
    let w = match target {
        Target::F => f,
        Target::H => h,
    };
    coordinates(w, b).values
}

fn partition_independence(sys: &FaceSystem, ctx: &Context, t: &mut Tally) -> Result<()> {
    if sys.is_empty() {
        return Ok(());
    }
    t.cases += 1;
    let m = sys.rank();
    let f = long_f(sys);
    let h = long_h_from_f(&f);
    let d = || describe(sys);
    let direct: Vec<(Target, BasisId, LongVector)> = [Target::F, Target::H]
        .into_iter()
        .flat_map(|target| BasisId::ALL.map(|b| (target, b)))
        .map(|(target, b)| (target, b, direct_representation(&f, &h, target, b)))
        .collect();
    let partitions = ctx.partitions(sys)?;
    for (k, partition) in partitions.iter().enumerate() {
        t.check(verify_partition(sys, partition).is_ok(), || {
            format!("{}: partition #{k} invalid", d())
        });
        let p = profile(partition)?;
        t.check(profile_face_count_matches(&p, m)?, || {
            format!("{}: partition #{k} face count", d())
        });
        for (target, b, expected) in &direct {
            let got = profile_representation(&p, m, *target, *b)?;
            t.check(got == *expected, || {
                format!("{}: partition #{k} {target:?} in {b}", d())
            });
        }
    }
    if sys.len() <= NAIVE_FACES {
        let min = partitions.iter().map(IntervalPartition::theta).min();
        let searched = min_theta_partition(sys, DEFAULT_SEARCH_BUDGET)?.theta();
        t.check(naive_min_theta(sys)? == searched, || {
            format!("{}: min theta", d())
        });
        if ctx.all_partitions(sys) {
            t.check(min == Some(searched), || {
                format!("{}: enumerated min theta", d())
            });
            t.check(
                naive_partition_count(sys)? == partitions.len() as u64,
                || format!("{}: partition count", d()),
            );
        }
    }
    Ok(())
}

fn ds_n_max(sys: &FaceSystem) -> Result<usize> {
    Ok(eta(sys)?.max(DS_N_MAX))
}

fn ds_equivalence(sys: &FaceSystem, t: &mut Tally) -> Result<()> {
    if sys.is_empty() {
        return Ok(());
    }
    t.cases += 1;
    let cert = is_ds_system(sys, Some(ds_n_max(sys)?))?;
    t.check(cert.is_ds == long_ds_holds(sys), || {
        format!(
            "{}: signed={} palindromic={}",
            describe(sys),
            cert.native_signed,
            cert.is_ds
        )
    });
    Ok(())
}

fn ds_conclusions(sys: &FaceSystem, ctx: &Context, t: &mut Tally) -> Result<()> {
    if sys.is_empty() || !long_ds_holds(sys) {
        return Ok(());
    }
    t.cases += 1;
    let profiles: Vec<Profile> = ctx
        .partitions(sys)?
        .iter()
        .map(profile)
        .collect::<Result<_>>()?;
    let relabeled = sys.compress();
    for n in admissible_ranks(sys, ds_n_max(sys)?)? {
        let ctx_n = || format!("{} n={n}", describe(sys));
        for p in &profiles {
            t.report(&conclusion_checks(&relabeled, n, Some(p))?, &ctx_n);
        }
    }
    Ok(())
}

fn system_tallies(sys: &FaceSystem, ctx: &Context, families: &[Family]) -> Result<Vec<Tally>> {
    families
        .iter()
        .map(|&family| {
            let mut t = Tally::default();
            match family {
                Family::DefiningIdentity => defining_identity(sys, ctx, &mut t),
                Family::Identities => identities(sys, &mut t)?,
                Family::Valuation => valuation(sys, &mut t)?,
                Family::Duality => duality(sys, &mut t)?,
                Family::Representation => representation(sys, ctx, &mut t),
                Family::PartitionIndependence => partition_independence(sys, ctx, &mut t)?,
                Family::DsEquivalence => ds_equivalence(sys, &mut t)?,
                Family::DsConclusions => ds_conclusions(sys, ctx, &mut t)?,
                Family::Table1 | Family::InversePairing => unreachable!("not per system"),
            }
            Ok(t)
        })
        .collect()
}

/// The densities cycled through by sampled runs.
const SAMPLE_DENSITIES: [(u64, u64); 3] = [(1, 4), (1, 2), (3, 4)];

/// `(density, seed)` of each sampled system, derived from the run seed.
pub fn sample_plan(seed: u64, samples: usize) -> Vec<(Density, u64)> {
    let mut rng = seeded_rng(seed);
    (0..samples)
        .map(|i| {
            let (num, den) = SAMPLE_DENSITIES[i % SAMPLE_DENSITIES.len()];
            (Density::new(num, den).expect("valid"), rng.gen())
        })
        .collect()
}

/// Runs the selected families and tallies the results.
pub fn run_battery(cfg: &VerifyConfig) -> Result<Summary> {
    let m = cfg.rank;
    let (count, sampled) = match cfg.level {
        Level::Exhaustive => {
            if m > MAX_EXHAUSTIVE_RANK {
                return Err(Error::TooLarge {
                    what: "rank for exhaustive verification",
                    value: m,
                    limit: MAX_EXHAUSTIVE_RANK,
                });
            }
            (1u64 << (1u64 << m), None)
        }
        Level::Sampled => {
            if m > MAX_ENUM_RANK {
                return Err(Error::TooLarge {
                    what: "rank for sampled verification",
                    value: m,
                    limit: MAX_ENUM_RANK,
                });
            }
            (cfg.samples as u64, Some(sample_plan(cfg.seed, cfg.samples)))
        }
    };

    let mut families: Vec<Family> = Family::ALL
        .into_iter()
        .filter(|f| cfg.families.contains(f))
        .collect();
    families.dedup();
    let per_system: Vec<Family> = families
        .iter()
        .copied()
        .filter(|f| f.per_system())
        .collect();

    let ctx = Context::new(m, cfg.level);
    let system = |k: u64| -> Result<FaceSystem> {
        match &sampled {
            None => Ok(system_from_index(m, k)),
            Some(plan) => {
                let (density, seed) = plan[k as usize];
                random_system(m, density, seed)
            }
        }
    };
    let results: Vec<Vec<Tally>> = (0..count)
        .into_par_iter()
        .map(|k| system_tallies(&system(k)?, &ctx, &per_system))
        .collect::<Result<_>>()?;

    let mut totals = vec![Tally::default(); per_system.len()];
    for row in results {
        for (total, t) in totals.iter_mut().zip(row) {
            total.absorb(t);
        }
    }
    let mut by_family: Vec<(Family, Tally)> = matrix_families(m, &families);
    by_family.extend(per_system.into_iter().zip(totals));
    by_family.sort_by_key(|(f, _)| *f);

    Ok(Summary {
        rank: m,
        level: cfg.level,
        seed: sampled.as_ref().map(|_| cfg.seed),
        systems: count,
        families: by_family
            .into_iter()
            .map(|(family, tally)| FamilyTally { family, tally })
            .collect(),
    })
}

/// Per-family tallies for a single system.
pub fn check_system(
    sys: &FaceSystem,
    level: Level,
    families: &[Family],
) -> Result<Vec<(Family, Tally)>> {
    let ctx = Context::new(sys.rank(), level);
    let per_system: Vec<Family> = families
        .iter()
        .copied()
        .filter(|f| f.per_system())
        .collect();
    Ok(per_system
        .iter()
        .copied()
        .zip(system_tallies(sys, &ctx, &per_system)?)
        .collect())
}

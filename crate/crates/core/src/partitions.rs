//! Partitions of face systems into Boolean intervals, their profiles, and the
//! profile formulas for long f- and h-vectors in every basis.
//!
//! # Search
//!
//! Both the greedy strategy and the exact search grow intervals from the
//! smallest uncovered face `F` in the (size, lex) order. Such a face is
//! inclusion-minimal among the uncovered faces, so in any completion of the
//! current partial partition the interval `[A, B]` covering `F` has `A = F`:
//! `A ⊆ F` is covered by the same interval, hence still uncovered, and
//! minimality forces `A = F`. Branching over the tops `B` of `[F, B]`
//! therefore reaches every partition exactly once.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use rand::Rng;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{binom, sign};
use crate::basiskit::BasisId;
use crate::error::{Error, Result};
use crate::faceset::{BooleanInterval, Face, FaceSystem, MAX_ENUM_RANK};
use crate::longvec::LongVector;

/// Largest system accepted by the exact minimum-θ search.
pub const MIN_THETA_MAX_FACES: usize = 1 << 12;
/// Default node budget for the exact search.
pub const DEFAULT_SEARCH_BUDGET: u64 = 20_000_000;

/// A list of Boolean intervals in `2^[m]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalPartition {
    pub rank: usize,
    pub intervals: Vec<BooleanInterval>,
}

impl IntervalPartition {
    pub fn new(rank: usize, intervals: Vec<BooleanInterval>) -> Self {
        Self { rank, intervals }
    }

    /// Reads a JSON list of `{"bottom": [..], "top": [..]}` objects.
    pub fn from_json(rank: usize, text: &str) -> Result<Self> {
        let intervals: Vec<BooleanInterval> =
            serde_json::from_str(text).map_err(|e| Error::Parse {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            })?;
        for iv in &intervals {
            BooleanInterval::new(iv.bottom, iv.top)?;
            if !iv.top.fits(rank) {
                return Err(Error::ElementOutOfRange {
                    element: iv.top.max_element(),
                    rank,
                });
            }
        }
        Ok(Self { rank, intervals })
    }

    /// `θ`.
    pub fn theta(&self) -> usize {
        self.intervals.len()
    }
}

/// Why a list of intervals fails to partition a system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    RankMismatch {
        system: usize,
        partition: usize,
    },
    BottomNotBelowTop(BooleanInterval),
    /// Covered by more than one interval.
    Duplicate(Face),
    /// In the system but covered by no interval.
    Missing(Face),
    /// Covered but not in the system.
    Extraneous(Face),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RankMismatch { system, partition } => {
                write!(f, "system rank {system} but partition rank {partition}")
            }
            Violation::BottomNotBelowTop(iv) => write!(f, "interval {iv} has bottom not below top"),
            Violation::Duplicate(face) => write!(f, "face {face} covered more than once"),
            Violation::Missing(face) => write!(f, "face {face} not covered"),
            Violation::Extraneous(face) => write!(f, "face {face} covered but not in the system"),
        }
    }
}

/// Checks that the intervals are pairwise disjoint and cover exactly `Φ`.
pub fn verify_partition(
    sys: &FaceSystem,
    partition: &IntervalPartition,
) -> std::result::Result<(), Violation> {
    if sys.rank() != partition.rank {
        return Err(Violation::RankMismatch {
            system: sys.rank(),
            partition: partition.rank,
        });
    }
    let mut covered: HashSet<Face> = HashSet::with_capacity(sys.len());
    for iv in &partition.intervals {
        if !iv.bottom.is_subset_of(iv.top) {
            return Err(Violation::BottomNotBelowTop(*iv));
        }
        for face in iv.faces() {
            if !sys.contains(face) {
                return Err(Violation::Extraneous(face));
            }
            if !covered.insert(face) {
                return Err(Violation::Duplicate(face));
            }
        }
    }
    match sys.iter().find(|f| !covered.contains(f)) {
        Some(face) => Err(Violation::Missing(face)),
        None => Ok(()),
    }
}

/// Interval counts `p_ij` by height `i = |B - A|` and bottom size `j = |A|`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Profile(BTreeMap<(usize, usize), u64>);

impl Profile {
    /// Zero counts are dropped.
    pub fn from_counts<I: IntoIterator<Item = ((usize, usize), u64)>>(counts: I) -> Self {
        let mut map = BTreeMap::new();
        for (key, count) in counts {
            if count > 0 {
                *map.entry(key).or_insert(0) += count;
            }
        }
        Profile(map)
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.0.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.0.iter().map(|(k, v)| (*k, *v))
    }

    /// `θ = Σ p_ij`.
    pub fn theta(&self) -> u64 {
        self.0.values().sum()
    }

    /// `#Φ = Σ p_ij 2^i`.
    pub fn face_count(&self) -> BigInt {
        self.0
            .iter()
            .map(|(&(i, _), &p)| BigInt::from(p) << i)
            .sum()
    }

    /// Every key satisfies `i + j <= m` and every count is positive.
    pub fn validate(&self, rank: usize) -> Result<()> {
        for (&(i, j), &p) in &self.0 {
            if p == 0 {
                return Err(Error::MalformedProfile(format!("zero count at ({i},{j})")));
            }
            if i + j > rank {
                return Err(Error::MalformedProfile(format!(
                    "height {i} + bottom size {j} exceeds rank {rank}"
                )));
            }
        }
        Ok(())
    }

    /// `Σ_{ij} p_ij · term(i, j)`.
    pub fn weighted_sum(&self, mut term: impl FnMut(i64, i64) -> BigInt) -> BigInt {
        self.0
            .iter()
            .map(|(&(i, j), &p)| term(i as i64, j as i64) * p)
            .sum()
    }
}

/// JSON object with `"i,j"` keys and positive integer values.
impl Serialize for Profile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for ((i, j), p) in &self.0 {
            map.serialize_entry(&format!("{i},{j}"), p)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Profile {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = BTreeMap::<String, u64>::deserialize(d)?;
        let mut map = BTreeMap::new();
        for (key, count) in raw {
            let parsed = key
                .split_once(',')
                .and_then(|(i, j)| Some((i.trim().parse().ok()?, j.trim().parse().ok()?)));
            let Some(ij) = parsed else {
                return Err(D::Error::custom(format!(
                    "profile key `{key}` is not `i,j`"
                )));
            };
            if count == 0 {
                return Err(D::Error::custom(format!(
                    "profile count at `{key}` must be positive"
                )));
            }
            map.insert(ij, count);
        }
        Ok(Profile(map))
    }
}

/// The profile of a list of pairwise disjoint intervals.
pub fn profile(partition: &IntervalPartition) -> Result<Profile> {
    let mut seen: HashSet<Face> = HashSet::new();
    let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for iv in &partition.intervals {
        BooleanInterval::new(iv.bottom, iv.top)?;
        for face in iv.faces() {
            if !seen.insert(face) {
                return Err(Error::OverlappingIntervals(face));
            }
        }
        *counts.entry((iv.height(), iv.bottom.size())).or_insert(0) += 1;
    }
    Ok(Profile(counts))
}

/// One singleton interval `[F, F]` per face.
pub fn trivial_partition(sys: &FaceSystem) -> Result<IntervalPartition> {
    if sys.is_empty() {
        return Err(Error::EmptySystem);
    }
    Ok(IntervalPartition::new(
        sys.rank(),
        sys.iter()
            .map(|f| BooleanInterval { bottom: f, top: f })
            .collect(),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Singletons,
    Greedy,
    MinTheta,
}

/// Dense view of a system: membership and coverage indexed by face mask.
struct Board {
    rank: usize,
    uncovered: Vec<bool>,
    order: Vec<u64>,
    remaining: usize,
}

impl Board {
    fn new(sys: &FaceSystem) -> Result<Self> {
        if sys.rank() > MAX_ENUM_RANK {
            return Err(Error::RankOutOfRange {
                rank: sys.rank(),
                min: 0,
                max: MAX_ENUM_RANK,
            });
        }
        let mut uncovered = vec![false; 1 << sys.rank()];
        for f in sys.iter() {
            uncovered[f.mask() as usize] = true;
        }
        Ok(Self {
            rank: sys.rank(),
            uncovered,
            order: sys.iter().map(Face::mask).collect(),
            remaining: sys.len(),
        })
    }

    /// Position (in `order`) of the smallest uncovered face at or after `from`.
    fn next_uncovered(&self, from: usize) -> Option<usize> {
        (from..self.order.len()).find(|&k| self.uncovered[self.order[k] as usize])
    }

    fn set(&mut self, bottom: u64, top: u64, value: bool) {
        for f in (BooleanInterval {
            bottom: Face::from_mask(bottom),
            top: Face::from_mask(top),
        })
        .faces()
        {
            self.uncovered[f.mask() as usize] = value;
        }
        let n = 1usize << (top & !bottom).count_ones();
        if value {
            self.remaining += n;
        } else {
            self.remaining -= n;
        }
    }

    /// Whether `{X ∪ {v} : X ∈ [bottom, top]}` is entirely uncovered.
    fn can_extend(&self, bottom: u64, top: u64, v: usize) -> bool {
        let bit = 1u64 << v;
        BooleanInterval {
            bottom: Face::from_mask(bottom),
            top: Face::from_mask(top),
        }
        .faces()
        .all(|x| self.uncovered[(x.mask() | bit) as usize])
    }

    /// Lexicographically first maximal top: add vertices in ascending order.
    fn greedy_top(&self, bottom: u64) -> u64 {
        let mut top = bottom;
        for v in 0..self.rank {
            if top >> v & 1 == 0 && self.can_extend(bottom, top, v) {
                top |= 1 << v;
            }
        }
        top
    }

    /// Every `top ⊇ bottom` with `[bottom, top]` uncovered, each once.
    fn tops(&self, bottom: u64) -> Vec<u64> {
        let mut out = vec![bottom];
        let mut stack = vec![(bottom, 0usize)];
        while let Some((top, start)) = stack.pop() {
            for v in start..self.rank {
                if top >> v & 1 == 0 && self.can_extend(bottom, top, v) {
                    let next = top | 1 << v;
                    out.push(next);
                    stack.push((next, v + 1));
                }
            }
        }
        out
    }
}

fn to_partition(rank: usize, pairs: &[(u64, u64)]) -> IntervalPartition {
    IntervalPartition::new(
        rank,
        pairs
            .iter()
            .map(|&(a, b)| BooleanInterval {
                bottom: Face::from_mask(a),
                top: Face::from_mask(b),
            })
            .collect(),
    )
}

fn greedy(sys: &FaceSystem) -> Result<Vec<(u64, u64)>> {
    let mut board = Board::new(sys)?;
    let mut out = Vec::new();
    let mut cursor = 0;
    while let Some(k) = board.next_uncovered(cursor) {
        let bottom = board.order[k];
        let top = board.greedy_top(bottom);
        board.set(bottom, top, false);
        out.push((bottom, top));
        cursor = k + 1;
    }
    Ok(out)
}

struct MinSearch {
    board: Board,
    current: Vec<(u64, u64)>,
    best: Vec<(u64, u64)>,
    nodes: u64,
    budget: u64,
}

impl MinSearch {
    fn run(&mut self, cursor: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudgetExceeded(self.budget));
        }
        let Some(k) = self.board.next_uncovered(cursor) else {
            if self.current.len() < self.best.len() {
                self.best = self.current.clone();
            }
            return Ok(());
        };
        let bottom = self.board.order[k];
        // Remaining intervals have bottoms of size >= |bottom|.
        let largest = 1usize << (self.board.rank - bottom.count_ones() as usize);
        let lower = self.current.len() + self.board.remaining.div_ceil(largest);
        if lower >= self.best.len() {
            return Ok(());
        }
        let mut tops = self.board.tops(bottom);
        // Larger intervals first; ties by face order for a fixed witness.
        tops.sort_by(|a, b| {
            b.count_ones()
                .cmp(&a.count_ones())
                .then_with(|| Face::from_mask(*a).cmp(&Face::from_mask(*b)))
        });
        for top in tops {
            self.board.set(bottom, top, false);
            self.current.push((bottom, top));
            self.run(k + 1)?;
            self.current.pop();
            self.board.set(bottom, top, true);
            if self.current.len() + 1 >= self.best.len() {
                break;
            }
        }
        Ok(())
    }
}

/// A partition of minimum `θ`, searched exhaustively within `budget` nodes.
pub fn min_theta_partition(sys: &FaceSystem, budget: u64) -> Result<IntervalPartition> {
    if sys.is_empty() {
        return Err(Error::EmptySystem);
    }
    if sys.len() > MIN_THETA_MAX_FACES {
        return Err(Error::SearchTooLarge {
            faces: sys.len(),
            limit: MIN_THETA_MAX_FACES,
        });
    }
    let upper = greedy(sys)?.len();
    // The bound starts one above the greedy size so the ordered search
    // always supplies the witness.
    let mut search = MinSearch {
        board: Board::new(sys)?,
        current: Vec::new(),
        best: vec![(0, 0); upper + 1],
        nodes: 0,
        budget,
    };
    search.run(0)?;
    Ok(to_partition(sys.rank(), &search.best))
}

/// A partition grown like the greedy one, but with the top of each interval
/// drawn uniformly from every admissible top of its bottom.
pub fn random_partition(sys: &FaceSystem, rng: &mut impl Rng) -> Result<IntervalPartition> {
    if sys.is_empty() {
        return Err(Error::EmptySystem);
    }
    let mut board = Board::new(sys)?;
    let mut out = Vec::new();
    let mut cursor = 0;
    while let Some(k) = board.next_uncovered(cursor) {
        let bottom = board.order[k];
        let tops = board.tops(bottom);
        let top = tops[rng.gen_range(0..tops.len())];
        board.set(bottom, top, false);
        out.push((bottom, top));
        cursor = k + 1;
    }
    Ok(to_partition(sys.rank(), &out))
}

/// A verified partition of `Φ` by the chosen strategy.
pub fn find_partition(sys: &FaceSystem, strategy: Strategy) -> Result<IntervalPartition> {
    if sys.is_empty() {
        return Err(Error::EmptySystem);
    }
    let partition = match strategy {
        Strategy::Singletons => trivial_partition(sys)?,
        Strategy::Greedy => to_partition(sys.rank(), &greedy(sys)?),
        Strategy::MinTheta => min_theta_partition(sys, DEFAULT_SEARCH_BUDGET)?,
    };
    debug_assert!(verify_partition(sys, &partition).is_ok());
    Ok(partition)
}

/// Calls `visit` with every partition of `Φ` into Boolean intervals. Stops
/// with an error once more than `limit` partitions have been produced.
pub fn for_each_partition(
    sys: &FaceSystem,
    limit: u64,
    mut visit: impl FnMut(&IntervalPartition),
) -> Result<u64> {
    if sys.is_empty() {
        return Err(Error::EmptySystem);
    }
    fn walk(
        board: &mut Board,
        cursor: usize,
        current: &mut Vec<(u64, u64)>,
        count: &mut u64,
        limit: u64,
        visit: &mut dyn FnMut(&IntervalPartition),
    ) -> Result<()> {
        let Some(k) = board.next_uncovered(cursor) else {
            *count += 1;
            if *count > limit {
                return Err(Error::SearchBudgetExceeded(limit));
            }
            visit(&to_partition(board.rank, current));
            return Ok(());
        };
        let bottom = board.order[k];
        for top in board.tops(bottom) {
            board.set(bottom, top, false);
            current.push((bottom, top));
            walk(board, k + 1, current, count, limit, visit)?;
            current.pop();
            board.set(bottom, top, true);
        }
        Ok(())
    }
    let mut board = Board::new(sys)?;
    let mut count = 0;
    walk(
        &mut board,
        0,
        &mut Vec::new(),
        &mut count,
        limit,
        &mut visit,
    )?;
    Ok(count)
}

/// Whether the representation targets `f(Φ;m)` or `h(Φ;m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    F,
    H,
}

impl std::str::FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "f" | "F" => Ok(Target::F),
            "h" | "H" => Ok(Target::H),
            _ => Err(format!("unknown target `{s}` (expected f or h)")),
        }
    }
}

/// Component `l` (coordinate `κ_l` for non-standard bases) of `f(Φ;m)` or
/// `h(Φ;m)` in `basis`, computed from the profile of any partition of `Φ`.
fn representation_entry(p: &Profile, m: i64, target: Target, basis: BasisId, l: i64) -> BigInt {
    // Σ_ij p_ij C(i, s-j): the f-vector entry at s
    let f_at = |s: i64| p.weighted_sum(|i, j| binom(i, s - j));
    // Σ_ij p_ij (-1)^j C(m-i-j, s-j): (-1)^s times the h-vector entry at s
    let h_core = |s: i64| p.weighted_sum(|i, j| binom(m - i - j, s - j) * sign(j));
    let sum_s = |term: &dyn Fn(i64) -> BigInt| -> BigInt { (0..=m).map(term).sum() };

    match (target, basis) {
        (Target::F, BasisId::Std) | (Target::H, BasisId::HDot) => f_at(l),
        (Target::F, BasisId::HDot) => sum_s(&|s| binom(m - s, m - l) * f_at(s)),
        (Target::F, BasisId::FUp) | (Target::H, BasisId::HUp) => {
            p.weighted_sum(|i, j| binom(j, l - i) * sign(i + j)) * sign(l)
        }
        (Target::F, BasisId::HUp) => sum_s(&|s| binom(s, m - l) * f_at(s)) * sign(m - l),
        (Target::F, BasisId::FDown) | (Target::H, BasisId::HDown) => {
            p.weighted_sum(|i, j| binom(m - i - j, l - i) * sign(j)) * sign(m - l)
        }
        (Target::F, BasisId::HDown) => p.weighted_sum(|i, j| binom(i, m - l - j)),
        (Target::H, BasisId::Std) => h_core(l) * sign(l),
        (Target::H, BasisId::FUp) => sum_s(&|s| binom(s, l) * h_core(s)) * sign(l),
        (Target::H, BasisId::FDown) => sum_s(&|s| binom(m - s, l) * h_core(s)) * sign(m - l),
    }
}

/// Evaluates one profile formula for `l = 0..=m`.
pub fn profile_representation(
    p: &Profile,
    rank: usize,
    target: Target,
    basis: BasisId,
) -> Result<LongVector> {
    p.validate(rank)?;
    let m = rank as i64;
    Ok(LongVector::new(
        (0..=m)
            .map(|l| representation_entry(p, m, target, basis, l))
            .collect(),
    ))
}

/// `Σ_l` of the f-vector produced from the profile equals `#Φ`.
pub fn profile_face_count_matches(p: &Profile, rank: usize) -> Result<bool> {
    let f = profile_representation(p, rank, Target::F, BasisId::Std)?;
    let total: BigInt = f.entries().iter().sum();
    Ok(total == p.face_count())
}

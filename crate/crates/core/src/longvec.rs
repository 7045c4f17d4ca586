//! Long f- and h-vectors `f(Φ;m)`, `h(Φ;m)` in `Z^{m+1}`, their classical
//! counterparts for relative complexes, and the identities linking them.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{binom, binom_u, pow2, sign};
use crate::error::{Error, Result};
use crate::faceset::{self, FaceSystem};
use crate::report::{Check, Report};

/// Serializes integers as an array of decimal strings.
pub(crate) fn decimal_strings<S: Serializer>(
    values: &[BigInt],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(values.iter().map(|v| v.to_string()))
}

/// An `(m+1)`-component exact integer row vector, indexed from 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LongVector(Vec<BigInt>);

impl LongVector {
    /// Panics on an empty entry list; a long vector has at least one entry.
    pub fn new(entries: Vec<BigInt>) -> Self {
        assert!(!entries.is_empty(), "long vectors have m + 1 >= 1 entries");
        Self(entries)
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        Self::new(entries.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn zeros(rank: usize) -> Self {
        Self(vec![BigInt::zero(); rank + 1])
    }

    /// The standard vector `σ(i; m)`.
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = Self::zeros(rank);
        v.0[i] = BigInt::one();
        v
    }

    /// The ambient rank `m`; the vector has `m + 1` entries.
    pub fn rank(&self) -> usize {
        self.0.len() - 1
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }

    pub fn dot(&self, other: &LongVector) -> BigInt {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, factor: &BigInt) -> LongVector {
        LongVector(self.0.iter().map(|v| v * factor).collect())
    }

    /// `w · U(m)`: the entries in reverse order.
    pub fn reversed(&self) -> LongVector {
        LongVector(self.0.iter().rev().cloned().collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    fn check_same_rank(&self, other: &LongVector) {
        assert_eq!(
            self.0.len(),
            other.0.len(),
            "long vectors of different rank"
        );
    }
}

impl Index<usize> for LongVector {
    type Output = BigInt;

    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl Add for &LongVector {
    type Output = LongVector;

    fn add(self, rhs: &LongVector) -> LongVector {
        self.check_same_rank(rhs);
        LongVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LongVector {
    type Output = LongVector;

    fn sub(self, rhs: &LongVector) -> LongVector {
        self.check_same_rank(rhs);
        LongVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LongVector {
    type Output = LongVector;

    fn neg(self) -> LongVector {
        LongVector(self.0.iter().map(|v| -v).collect())
    }
}

impl fmt::Display for LongVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for LongVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        decimal_strings(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for LongVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        if raw.is_empty() {
            return Err(serde::de::Error::custom(
                "long vector needs at least one entry",
            ));
        }
        raw.iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(LongVector)
    }
}

/// `ι(m) = (1, ..., 1)`.
pub fn iota(rank: usize) -> LongVector {
    LongVector(vec![BigInt::one(); rank + 1])
}

/// `τ(m) = (2^m, 2^{m-1}, ..., 1)`.
pub fn tau(rank: usize) -> LongVector {
    LongVector((0..=rank).map(|i| pow2((rank - i) as u32)).collect())
}

/// `f_i(Φ;m) = #{F ∈ Φ : |F| = i}`.
pub fn long_f(sys: &FaceSystem) -> LongVector {
    let mut counts = vec![0u64; sys.rank() + 1];
    for f in sys.iter() {
        counts[f.size()] += 1;
    }
    LongVector(counts.into_iter().map(BigInt::from).collect())
}

/// `h(Φ;m)`.
pub fn long_h(sys: &FaceSystem) -> LongVector {
    long_h_from_f(&long_f(sys))
}

/// `h_l = (-1)^l Σ_{k<=l} (-1)^k C(m-k, l-k) f_k`.
pub fn long_h_from_f(f: &LongVector) -> LongVector {
    let m = f.rank();
    LongVector(
        (0..=m)
            .map(|l| {
                let s: BigInt = (0..=l)
                    .map(|k| binom_u(m - k, l - k) * &f[k] * sign((l + k) as i64))
                    .sum();
                s
            })
            .collect(),
    )
}

/// `f_l = Σ_{k<=l} C(m-k, l-k) h_k`.
pub fn long_f_from_h(h: &LongVector) -> LongVector {
    let m = h.rank();
    LongVector(
        (0..=m)
            .map(|l| (0..=l).map(|k| binom_u(m - k, l - k) * &h[k]).sum())
            .collect(),
    )
}

/// Classical f-vector of a non-empty relative complex: `f_{-1}` (0 or 1)
/// held apart from `f_0, ..., f_{size-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalF {
    pub size: usize,
    pub empty_face: u8,
    pub entries: Vec<BigInt>,
}

impl ClassicalF {
    /// `f_i` for `-1 <= i <= size - 1`.
    pub fn get(&self, i: isize) -> BigInt {
        if i < 0 {
            BigInt::from(self.empty_face)
        } else {
            self.entries[i as usize].clone()
        }
    }
}

/// Classical h-vector `h_0, ..., h_size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalH {
    pub size: usize,
    pub entries: Vec<BigInt>,
}

fn checked_size(sys: &FaceSystem) -> Result<usize> {
    let size = sys.size().ok_or(Error::EmptySystem)?;
    if !faceset::is_relative_complex(sys) {
        return Err(Error::NotRelativeComplex);
    }
    Ok(size)
}

pub fn classical_f(sys: &FaceSystem) -> Result<ClassicalF> {
    let size = checked_size(sys)?;
    let mut entries = vec![BigInt::zero(); size];
    let mut empty_face = 0;
    for f in sys.iter() {
        match f.size() {
            0 => empty_face = 1,
            k => entries[k - 1] += 1,
        }
    }
    Ok(ClassicalF {
        size,
        empty_face,
        entries,
    })
}

/// `Σ h_i y^{s-i} = Σ f_{i-1} (y-1)^{s-i}`, so
/// `h_i = Σ_{k<=i} (-1)^{i-k} C(s-k, i-k) f_{k-1}`.
pub fn classical_h(sys: &FaceSystem) -> Result<ClassicalH> {
    let f = classical_f(sys)?;
    let s = f.size;
    let entries = (0..=s)
        .map(|i| {
            (0..=i)
                .map(|k| binom_u(s - k, i - k) * f.get(k as isize - 1) * sign((i - k) as i64))
                .sum()
        })
        .collect();
    Ok(ClassicalH { size: s, entries })
}

/// Long vector `(f_{-1}, f_0, ..., f_{s-1}, 0, ..., 0)` of a relative complex.
pub fn embed_classical_f(sys: &FaceSystem) -> Result<LongVector> {
    let f = classical_f(sys)?;
    let mut out = LongVector::zeros(sys.rank());
    out.0[0] = BigInt::from(f.empty_face);
    for (k, v) in f.entries.into_iter().enumerate() {
        out.0[k + 1] = v;
    }
    Ok(out)
}

/// `h_l(Ψ) = Σ_{k<=l} C(m - s - 1 + l - k, l - k) h_k(Ψ;m)` for `0 <= l <= s`.
pub fn classical_from_long(hlong: &LongVector, size: usize) -> Result<ClassicalH> {
    let m = hlong.rank();
    if size > m {
        return Err(Error::SizeExceedsRank { size, rank: m });
    }
    let entries = (0..=size)
        .map(|l| {
            (0..=l)
                .map(|k| binom((m - size) as i64 - 1 + (l - k) as i64, (l - k) as i64) * &hlong[k])
                .sum()
        })
        .collect();
    Ok(ClassicalH { size, entries })
}

/// `h_l(Ψ;m) = (-1)^l Σ_{k<=l} (-1)^k C(m - s, l - k) h_k(Ψ)` for `0 <= l <= m`.
pub fn long_from_classical(hcls: &ClassicalH, rank: usize) -> Result<LongVector> {
    let s = hcls.size;
    if s > rank {
        return Err(Error::SizeExceedsRank { size: s, rank });
    }
    if hcls.entries.len() != s + 1 {
        return Err(Error::LengthMismatch {
            expected: s + 1,
            found: hcls.entries.len(),
        });
    }
    Ok(LongVector(
        (0..=rank)
            .map(|l| {
                (0..=l.min(s))
                    .map(|k| binom_u(rank - s, l - k) * &hcls.entries[k] * sign((l + k) as i64))
                    .sum()
            })
            .collect(),
    ))
}

/// Evaluates the special values, the counting identity and the duality
/// identities for `Φ`. Every check is a theorem, so a failure means a bug.
pub fn identity_report(sys: &FaceSystem) -> Result<Report> {
    let m = sys.rank();
    let f = long_f(sys);
    let h = long_h_from_f(&f);
    let dual = faceset::dual_system(sys)?;
    let hd = long_h(&dual);
    let count = BigInt::from(sys.len());
    let mut report = Report::default();

    report.push(Check::scalar("h0=f0", h[0].clone(), f[0].clone()));
    if m >= 1 {
        report.push(Check::scalar(
            "h1=f1-m*f0",
            h[1].clone(),
            &f[1] - &f[0] * BigInt::from(m),
        ));
    }
    let alternating: BigInt = (0..=m).map(|k| &f[k] * sign(k as i64)).sum();
    report.push(Check::scalar(
        "hm=alternating-sum",
        h[m].clone(),
        alternating * sign(m as i64),
    ));
    report.push(Check::scalar("h.iota=fm", h.dot(&iota(m)), f[m].clone()));
    report.push(Check::scalar("h.tau=#", h.dot(&tau(m)), count.clone()));
    report.push(Check::scalar("f.iota=#", f.dot(&iota(m)), count));

    let dual_row: Vec<BigInt> = (0..=m)
        .map(|l| {
            let tail: BigInt = (l..=m).map(|k| binom_u(k, l) * &hd[k]).sum();
            &h[l] + tail * sign(l as i64)
        })
        .collect();
    report.push(Check::new(
        "dual-delta",
        dual_row,
        LongVector::unit(m, 0).into_entries(),
    ));
    // needs Σ_{F ⊆ [m]} (-1)^|F| = 0, i.e. m >= 1
    if m >= 1 {
        report.push(Check::scalar(
            "hm-dual",
            h[m].clone(),
            &hd[m] * sign(m as i64 + 1),
        ));
    }

    if !sys.is_empty() && !dual.is_empty() && faceset::is_complex(sys) {
        let sd = dual.size().expect("non-empty");
        let fd = long_f(&dual);
        // h_l(Δ;m) = 0 for 1 <= l <= m - size(Δ*) - 1
        let top = m as isize - sd as isize - 1;
        let vanishing: Vec<BigInt> = (1..=top.max(0) as usize).map(|l| h[l].clone()).collect();
        let zeros = vec![BigInt::zero(); vanishing.len()];
        report.push(Check::new("alexander-vanishing", vanishing, zeros));
        if sd <= m {
            report.push(Check::scalar(
                "alexander-boundary",
                h[m - sd].clone(),
                -fd[sd].clone(),
            ));
        }
    }
    Ok(report)
}

/// `f(Φ∪Ψ) + f(Φ∩Ψ) = f(Φ) + f(Ψ)`, and the same for `h`.
pub fn valuation_check(left: &FaceSystem, right: &FaceSystem) -> Result<bool> {
    use faceset::{set_algebra, SetOp};
    let union = set_algebra(left, right, SetOp::Union)?;
    let inter = set_algebra(left, right, SetOp::Intersection)?;
    let f_ok = &long_f(&union) + &long_f(&inter) == &long_f(left) + &long_f(right);
    let h_ok = &long_h(&union) + &long_h(&inter) == &long_h(left) + &long_h(right);
    Ok(f_ok && h_ok)
}

/// Whether every entry is non-negative and bounded by `C(m, i)`.
pub fn is_plausible_long_f(f: &LongVector) -> bool {
    let m = f.rank();
    f.entries()
        .iter()
        .enumerate()
        .all(|(i, v)| !v.is_negative() && *v <= binom_u(m, i))
}

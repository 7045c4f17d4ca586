//! The six ordered bases of `R^{m+1}` attached to the simplex, the matrices
//! converting between them, and coordinates with respect to each basis.
//!
//! Change-of-basis convention: row `i` of `M(from → to)` is the `i`-th vector
//! of `to` written in `from`-coordinates, so `[w]_from = [w]_to · M(from → to)`.
//! With `B_b` the matrix whose rows are the vectors of basis `b` in standard
//! coordinates, `M(a → b) = B_b · B_a^{-1}`; in particular
//! `M(STD → HDOT) = S(m)` and `h = f · S(m)`.

mod matrix;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub use matrix::ExactMatrix;

use crate::arith::{binom, pow2, sign};
use crate::error::{Error, Result};
use crate::faceset::FaceSystem;
use crate::longvec::{long_f, LongVector};
use crate::report::{Check, Report};

/// The six bases, in the order S, H•, F▲, H▲, F▼, H▼.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisId {
    /// Standard basis `σ(i;m)`, the long f-vectors of single faces.
    Std,
    /// `ϑ•(i;m)`, long h-vectors of single faces; the rows of `S(m)`.
    HDot,
    /// `φ▲(i;m)`, long f-vectors of the intervals `[0̂, F_i]`.
    FUp,
    /// `ϑ▲(i;m)`, long h-vectors of the intervals `[0̂, F_i]`.
    HUp,
    /// `φ▼(i;m)`, long f-vectors of the intervals `[F_{m-i}, [m]]`.
    FDown,
    /// `ϑ▼(i;m)`, the standard basis reversed.
    HDown,
}

impl BasisId {
    pub const ALL: [BasisId; 6] = [
        BasisId::Std,
        BasisId::HDot,
        BasisId::FUp,
        BasisId::HUp,
        BasisId::FDown,
        BasisId::HDown,
    ];

    /// ASCII name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            BasisId::Std => "std",
            BasisId::HDot => "hdot",
            BasisId::FUp => "fup",
            BasisId::HUp => "hup",
            BasisId::FDown => "fdown",
            BasisId::HDown => "hdown",
        }
    }

    pub fn glyph(self) -> &'static str {
        match self {
            BasisId::Std => "S",
            BasisId::HDot => "H•",
            BasisId::FUp => "F▲",
            BasisId::HUp => "H▲",
            BasisId::FDown => "F▼",
            BasisId::HDown => "H▼",
        }
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BasisId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let lower = s.to_ascii_lowercase();
        BasisId::ALL
            .into_iter()
            .find(|b| b.name() == lower || b.glyph() == s)
            .ok_or_else(|| {
                format!("unknown basis `{s}` (expected one of std, hdot, fup, hup, fdown, hdown)")
            })
    }
}

/// Component `j` of the `i`-th vector of basis `b` at rank `m`.
fn basis_entry(b: BasisId, i: usize, j: usize, m: usize) -> BigInt {
    let (i, j, m) = (i as i64, j as i64, m as i64);
    match b {
        BasisId::Std => BigInt::from((i == j) as i64),
        BasisId::HDot => binom(m - i, j - i) * sign(j - i),
        BasisId::FUp => binom(i, j),
        BasisId::HUp => binom(m - i, j) * sign(j),
        BasisId::FDown => binom(i, m - j),
        BasisId::HDown => BigInt::from((m - i == j) as i64),
    }
}

/// The `i`-th vector of basis `b` in `R^{m+1}`.
pub fn basis_vector(b: BasisId, i: usize, rank: usize) -> Result<LongVector> {
    if i > rank {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: rank,
        });
    }
    Ok(LongVector::new(
        (0..=rank).map(|j| basis_entry(b, i, j, rank)).collect(),
    ))
}

/// Matrix whose row `i` is `basis_vector(b, i, m)`.
pub fn basis_matrix(b: BasisId, rank: usize) -> ExactMatrix {
    ExactMatrix::from_fn(rank, |i, j| basis_entry(b, i, j, rank))
}

/// `S(m)`, the change of basis matrix from `S_m` to `H•_m`.
pub fn s_matrix(rank: usize) -> ExactMatrix {
    basis_matrix(BasisId::HDot, rank)
}

/// `S(m)^{-1}`, entry `C(m-i, j-i)`.
pub fn s_inverse(rank: usize) -> ExactMatrix {
    Table1Formula::InvS.matrix(rank)
}

/// The closed-form entry formulas of the change-of-basis table. Several
/// ordered basis pairs share one formula; [`Table1Formula::pairs`] lists them.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Table1Formula {
    /// `C(i, j)`
    Binom,
    /// `(-1)^{i+j} C(i, j)`
    SignedBinom,
    /// `C(i, m-j)`
    BinomReflected,
    /// `(-1)^{m-j-i} C(m-i, j)`
    SignedCoBinom,
    /// `(-1)^j C(m-i, j)`
    StdToHUp,
    /// `(-1)^{m-j} C(i, m-j)`
    HUpToStd,
    /// `δ_{m-i, j}`
    Reversal,
    /// `(-1)^{j-i} C(m-i, j-i)`, i.e. `S(m)`
    S,
    /// `C(m-i, j-i)`, i.e. `S(m)^{-1}`
    InvS,
    /// `(-1)^j 2^{m-j-i} C(m-i, j)`
    FUpToHUp,
    /// `(-1)^{m-j} 2^{i+j-m} C(i, m-j)`
    HUpToFUp,
    /// `(-1)^{m-j} C(m-i, m-j)`, an involution
    UpDownSwap,
    /// `(-1)^{m-j} Σ_{s=max(m-i,m-j)}^{m} C(i, m-s) C(s, m-j)`
    HUpToFDown,
    /// `(-1)^{m-j} Σ_{s=0}^{min(m-i,m-j)} C(m-i, s) C(m-s, j)`
    FDownToHUp,
    /// `Σ_{s=0}^{min(i,j)} C(i, s) C(m-s, m-j)`
    HDotToFUp,
    /// `(-1)^{i+j} Σ_{s=max(i,j)}^{m} C(m-i, m-s) C(s, j)`
    FUpToHDot,
    /// `2^{i+j-m} C(i, m-j)`
    HDotToFDown,
    /// `(-2)^{m-j-i} C(m-i, j)`
    FDownToHDot,
}

impl Table1Formula {
    pub const ALL: [Table1Formula; 18] = [
        Table1Formula::Binom,
        Table1Formula::SignedBinom,
        Table1Formula::BinomReflected,
        Table1Formula::SignedCoBinom,
        Table1Formula::StdToHUp,
        Table1Formula::HUpToStd,
        Table1Formula::Reversal,
        Table1Formula::S,
        Table1Formula::InvS,
        Table1Formula::FUpToHUp,
        Table1Formula::HUpToFUp,
        Table1Formula::UpDownSwap,
        Table1Formula::HUpToFDown,
        Table1Formula::FDownToHUp,
        Table1Formula::HDotToFUp,
        Table1Formula::FUpToHDot,
        Table1Formula::HDotToFDown,
        Table1Formula::FDownToHDot,
    ];

    /// The ordered `(from, to)` pairs this formula serves.
    pub fn pairs(self) -> &'static [(BasisId, BasisId)] {
        use BasisId::*;
        match self {
            Table1Formula::Binom => &[(Std, FUp), (HDot, HUp), (HDown, FDown)],
            Table1Formula::SignedBinom => &[(FUp, Std), (HUp, HDot), (FDown, HDown)],
            Table1Formula::BinomReflected => &[(Std, FDown), (HDot, HDown), (HDown, FUp)],
            Table1Formula::SignedCoBinom => &[(FDown, Std), (HDown, HDot), (FUp, HDown)],
            Table1Formula::StdToHUp => &[(Std, HUp)],
            Table1Formula::HUpToStd => &[(HUp, Std)],
            Table1Formula::Reversal => &[(Std, HDown), (HDown, Std)],
            Table1Formula::S => &[(Std, HDot)],
            Table1Formula::InvS => &[(HDot, Std)],
            Table1Formula::FUpToHUp => &[(FUp, HUp)],
            Table1Formula::HUpToFUp => &[(HUp, FUp)],
            Table1Formula::UpDownSwap => &[(FUp, FDown), (FDown, FUp), (HUp, HDown), (HDown, HUp)],
            Table1Formula::HUpToFDown => &[(HUp, FDown)],
            Table1Formula::FDownToHUp => &[(FDown, HUp)],
            Table1Formula::HDotToFUp => &[(HDot, FUp)],
            Table1Formula::FUpToHDot => &[(FUp, HDot)],
            Table1Formula::HDotToFDown => &[(HDot, FDown)],
            Table1Formula::FDownToHDot => &[(FDown, HDot)],
        }
    }

    /// The formula serving `(from, to)`, if any (identity pairs have none).
    pub fn for_pair(from: BasisId, to: BasisId) -> Option<Table1Formula> {
        Self::ALL
            .into_iter()
            .find(|f| f.pairs().contains(&(from, to)))
    }

    /// Entry `(i, j)` at rank `m`.
    pub fn entry(self, i: usize, j: usize, m: usize) -> BigInt {
        let (i, j, m) = (i as i64, j as i64, m as i64);
        match self {
            Table1Formula::Binom => binom(i, j),
            Table1Formula::SignedBinom => binom(i, j) * sign(i + j),
            Table1Formula::BinomReflected => binom(i, m - j),
            Table1Formula::SignedCoBinom => binom(m - i, j) * sign(m - j - i),
            Table1Formula::StdToHUp => binom(m - i, j) * sign(j),
            Table1Formula::HUpToStd => binom(i, m - j) * sign(m - j),
            Table1Formula::Reversal => BigInt::from((m - i == j) as i64),
            Table1Formula::S => binom(m - i, j - i) * sign(j - i),
            Table1Formula::InvS => binom(m - i, j - i),
            Table1Formula::FUpToHUp => scaled_by_pow2(binom(m - i, j), m - j - i) * sign(j),
            Table1Formula::HUpToFUp => scaled_by_pow2(binom(i, m - j), i + j - m) * sign(m - j),
            Table1Formula::UpDownSwap => binom(m - i, m - j) * sign(m - j),
            Table1Formula::HUpToFDown => {
                let s: BigInt = ((m - i).max(m - j)..=m)
                    .map(|s| binom(i, m - s) * binom(s, m - j))
                    .sum();
                s * sign(m - j)
            }
            Table1Formula::FDownToHUp => {
                let s: BigInt = (0..=(m - i).min(m - j))
                    .map(|s| binom(m - i, s) * binom(m - s, j))
                    .sum();
                s * sign(m - j)
            }
            Table1Formula::HDotToFUp => (0..=i.min(j))
                .map(|s| binom(i, s) * binom(m - s, m - j))
                .sum(),
            Table1Formula::FUpToHDot => {
                let s: BigInt = (i.max(j)..=m)
                    .map(|s| binom(m - i, m - s) * binom(s, j))
                    .sum();
                s * sign(i + j)
            }
            Table1Formula::HDotToFDown => scaled_by_pow2(binom(i, m - j), i + j - m),
            Table1Formula::FDownToHDot => {
                scaled_by_pow2(binom(m - i, j), m - j - i) * sign(m - j - i)
            }
        }
    }

    pub fn matrix(self, rank: usize) -> ExactMatrix {
        ExactMatrix::from_fn(rank, |i, j| self.entry(i, j, rank))
    }
}

/// `c · 2^e`; a negative exponent only occurs where `c` vanishes.
fn scaled_by_pow2(c: BigInt, e: i64) -> BigInt {
    if c.is_zero() {
        return c;
    }
    assert!(
        e >= 0,
        "power of two with negative exponent on a non-zero entry"
    );
    c * pow2(e as u32)
}

type MatrixKey = (BasisId, BasisId, usize);

fn cache() -> &'static RwLock<HashMap<MatrixKey, Arc<ExactMatrix>>> {
    static CACHE: OnceLock<RwLock<HashMap<MatrixKey, Arc<ExactMatrix>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn closed_form(from: BasisId, to: BasisId, rank: usize) -> ExactMatrix {
    if from == to {
        return ExactMatrix::identity(rank);
    }
    match Table1Formula::for_pair(from, to) {
        Some(formula) => formula.matrix(rank),
        None => composed_change_of_basis(from, to, rank),
    }
}

/// Shared handle to `M(from → to)`, memoized per `(from, to, m)`.
pub fn change_of_basis_shared(from: BasisId, to: BasisId, rank: usize) -> Arc<ExactMatrix> {
    let key = (from, to, rank);
    if let Some(m) = cache().read().ok().and_then(|c| c.get(&key).cloned()) {
        return m;
    }
    let built = Arc::new(closed_form(from, to, rank));
    if let Ok(mut c) = cache().write() {
        return c.entry(key).or_insert(built).clone();
    }
    built
}

/// `M(from → to)`: row `i` is the `i`-th `to`-vector in `from`-coordinates.
pub fn change_of_basis(from: BasisId, to: BasisId, rank: usize) -> ExactMatrix {
    (*change_of_basis_shared(from, to, rank)).clone()
}

/// `M(from → to)` composed through the standard basis,
/// `M(STD → to) · M(from → STD)`, using only closed forms.
pub fn composed_change_of_basis(from: BasisId, to: BasisId, rank: usize) -> ExactMatrix {
    let into_std = |b: BasisId| match Table1Formula::for_pair(b, BasisId::Std) {
        Some(f) => f.matrix(rank),
        None => ExactMatrix::identity(rank),
    };
    let out_of_std = |b: BasisId| match Table1Formula::for_pair(BasisId::Std, b) {
        Some(f) => f.matrix(rank),
        None => ExactMatrix::identity(rank),
    };
    &out_of_std(to) * &into_std(from)
}

/// Groups of ordered pairs `(from, to)`, `from != to`, whose matrices
/// coincide at rank `m`. Only groups with two or more pairs are returned.
pub fn observed_coincidences(rank: usize) -> Vec<Vec<(BasisId, BasisId)>> {
    let mut groups: Vec<(ExactMatrix, Vec<(BasisId, BasisId)>)> = Vec::new();
    for from in BasisId::ALL {
        for to in BasisId::ALL {
            if from == to {
                continue;
            }
            let m = change_of_basis(from, to, rank);
            match groups.iter_mut().find(|(g, _)| *g == m) {
                Some((_, pairs)) => pairs.push((from, to)),
                None => groups.push((m, vec![(from, to)])),
            }
        }
    }
    groups
        .into_iter()
        .map(|(_, pairs)| pairs)
        .filter(|p| p.len() > 1)
        .collect()
}

/// Coordinates `[w]_b = (κ_0(w, b), ..., κ_m(w, b))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coordinates {
    pub basis: BasisId,
    pub values: LongVector,
}

impl Coordinates {
    /// `Σ κ_i b_i`.
    pub fn reconstruct(&self) -> LongVector {
        basis_matrix(self.basis, self.values.rank()).left_mul(&self.values)
    }
}

/// `[w]_b = w · M(b → STD)`. Every basis matrix is unimodular, so integral
/// input gives integral coordinates.
pub fn coordinates(w: &LongVector, basis: BasisId) -> Coordinates {
    let values = if basis == BasisId::Std {
        w.clone()
    } else {
        change_of_basis_shared(basis, BasisId::Std, w.rank()).left_mul(w)
    };
    Coordinates { basis, values }
}

/// Evaluates the representation identities for `Φ` together with
/// `h = f·S(m)`, `f = h·S(m)^{-1}` and the relations `ϑ = φ·S(m)` between
/// paired bases.
pub fn representation_identities(sys: &FaceSystem) -> Report {
    let m = sys.rank();
    let f = long_f(sys);
    let s = change_of_basis_shared(BasisId::Std, BasisId::HDot, m);
    let s_inv = change_of_basis_shared(BasisId::HDot, BasisId::Std, m);
    let h = s.left_mul(&f);
    let kappa = |w: &LongVector, b| coordinates(w, b).values.into_entries();
    let mut r = Report::default();

    r.push(Check::new(
        "f=h.S^-1",
        f.entries().to_vec(),
        s_inv.left_mul(&h).into_entries(),
    ));
    r.push(Check::new(
        "[h]_hdot=f",
        kappa(&h, BasisId::HDot),
        f.entries().to_vec(),
    ));
    r.push(Check::new(
        "[h]_hup=[f]_fup",
        kappa(&h, BasisId::HUp),
        kappa(&f, BasisId::FUp),
    ));
    r.push(Check::new(
        "[h]_hdown=[f]_fdown",
        kappa(&h, BasisId::HDown),
        kappa(&f, BasisId::FDown),
    ));
    r.push(Check::new(
        "[f]_fdown=h.U",
        kappa(&f, BasisId::FDown),
        h.reversed().into_entries(),
    ));
    r.push(Check::new(
        "[f]_hdown=f.U",
        kappa(&f, BasisId::HDown),
        f.reversed().into_entries(),
    ));
    r.push(Check::new(
        "f.U=[h]_hdot.U",
        f.reversed().into_entries(),
        coordinates(&h, BasisId::HDot)
            .values
            .reversed()
            .into_entries(),
    ));

    for (left, right, name) in [
        (BasisId::HDot, BasisId::Std, "thetadot=sigma.S"),
        (BasisId::HUp, BasisId::FUp, "thetaup=phiup.S"),
        (BasisId::HDown, BasisId::FDown, "thetadown=phidown.S"),
    ] {
        let lhs: Vec<BigInt> = basis_matrix(left, m)
            .rows()
            .flat_map(|r| r.to_vec())
            .collect();
        let rhs: Vec<BigInt> = (0..=m)
            .flat_map(|i| s.left_mul(&basis_matrix(right, m).row(i)).into_entries())
            .collect();
        r.push(Check::new(name, lhs, rhs));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::faceset::{make_simplex, Face};
    use crate::longvec::long_h;

    fn mat(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64_rows(rows)
    }

    #[test]
    fn basis_vector_examples() {
        for i in 0..=3 {
            assert_eq!(
                basis_vector(BasisId::HDown, i, 3).unwrap(),
                LongVector::unit(3, 3 - i)
            );
        }
        assert_eq!(
            basis_vector(BasisId::FUp, 3, 3).unwrap(),
            LongVector::from_i64s(&[1, 3, 3, 1])
        );
        assert_eq!(
            basis_vector(BasisId::HDot, 0, 3).unwrap(),
            LongVector::from_i64s(&[1, -3, 3, -1])
        );
        assert!(matches!(
            basis_vector(BasisId::Std, 4, 3),
            Err(Error::IndexOutOfRange { index: 4, max: 3 })
        ));
    }

    #[test]
    fn basis_vectors_are_long_vectors_of_faces_and_intervals() {
        use crate::faceset::interval;
        for m in 1..=5 {
            // chain F_k = {1..k}
            let chain: Vec<Face> = (0..=m).map(Face::full).collect();
            for i in 0..=m {
                let single = FaceSystem::from_faces(m, [chain[i]]).unwrap();
                let lower = interval(Face::EMPTY, chain[i], m).unwrap();
                let upper = interval(chain[m - i], chain[m], m).unwrap();
                let bv = |b| basis_vector(b, i, m).unwrap();
                assert_eq!(bv(BasisId::Std), long_f(&single));
                assert_eq!(bv(BasisId::HDot), long_h(&single));
                assert_eq!(bv(BasisId::FUp), long_f(&lower));
                assert_eq!(bv(BasisId::HUp), long_h(&lower));
                assert_eq!(bv(BasisId::FDown), long_f(&upper));
                assert_eq!(bv(BasisId::HDown), long_h(&upper));
            }
        }
    }

    #[test]
    fn basis_matrix_examples() {
        assert_eq!(basis_matrix(BasisId::Std, 4), ExactMatrix::identity(4));
        assert_eq!(
            basis_matrix(BasisId::HDown, 4),
            ExactMatrix::backward_identity(4)
        );
        assert_eq!(
            s_matrix(3),
            mat(&[
                &[1, -3, 3, -1],
                &[0, 1, -2, 1],
                &[0, 0, 1, -1],
                &[0, 0, 0, 1]
            ])
        );
        // σ(i;m) = (1,0,...,0)·T(m)^i
        for i in 0..=4 {
            let via_shift = ExactMatrix::forward_shift(4)
                .pow(i as u32)
                .left_mul(&LongVector::unit(4, 0));
            assert_eq!(basis_vector(BasisId::Std, i, 4).unwrap(), via_shift);
        }
    }

    #[test]
    fn change_of_basis_examples() {
        assert_eq!(change_of_basis(BasisId::Std, BasisId::HDot, 3), s_matrix(3));
        assert_eq!(
            change_of_basis(BasisId::HUp, BasisId::FUp, 3),
            mat(&[
                &[0, 0, 0, 1],
                &[0, 0, -1, 2],
                &[0, 1, -4, 4],
                &[-1, 6, -12, 8]
            ])
        );
        for m in 0..=5 {
            for b in BasisId::ALL {
                assert!(change_of_basis(b, b, m).is_identity());
                assert_eq!(change_of_basis(BasisId::Std, b, m), basis_matrix(b, m));
            }
        }
    }

    #[test]
    fn table_covers_every_ordered_pair_once() {
        let mut seen = std::collections::HashSet::new();
        for f in Table1Formula::ALL {
            for &p in f.pairs() {
                assert!(p.0 != p.1);
                assert!(seen.insert(p), "{p:?} listed twice");
            }
        }
        assert_eq!(seen.len(), 30);
    }

    #[test]
    fn closed_forms_match_composition_through_std() {
        for m in 0..=7 {
            for f in Table1Formula::ALL {
                for &(from, to) in f.pairs() {
                    assert_eq!(
                        f.matrix(m),
                        composed_change_of_basis(from, to, m),
                        "{f:?} {from}->{to} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn swap_block_is_an_involution() {
        for m in 0..=8 {
            let swap = Table1Formula::UpDownSwap.matrix(m);
            assert!((&swap * &swap).is_identity());
        }
    }

    #[test]
    fn coincidences_include_table_groups() {
        let groups = observed_coincidences(3);
        for f in Table1Formula::ALL {
            if f.pairs().len() > 1 {
                assert!(
                    groups
                        .iter()
                        .any(|g| f.pairs().iter().all(|p| g.contains(p))),
                    "{f:?}"
                );
            }
        }
    }

    #[test]
    fn coordinate_examples() {
        let w = LongVector::from_i64s(&[1, 0, -1]);
        assert_eq!(coordinates(&w, BasisId::Std).values, w);
        assert_eq!(
            coordinates(&w, BasisId::HDown).values,
            LongVector::from_i64s(&[-1, 0, 1])
        );
        let phi = FaceSystem::from_lists(2, &[&[], &[1], &[2]]).unwrap();
        let h = long_h(&phi);
        assert_eq!(coordinates(&h, BasisId::HDot).values, long_f(&phi));
        for b in BasisId::ALL {
            let c = coordinates(&h, b);
            assert_eq!(c.reconstruct(), h);
        }
        // [h]_H▲ = [f]_F▲ for {∅,{1},{2}} in m=2
        assert_eq!(
            coordinates(&h, BasisId::HUp).values,
            LongVector::from_i64s(&[-1, 2, 0])
        );
    }

    #[test]
    fn representation_identity_examples() {
        let r = representation_identities(&FaceSystem::empty(3).unwrap());
        assert!(r.all_pass());
        let simplex = make_simplex(3).unwrap();
        let r = representation_identities(&simplex);
        assert!(r.all_pass());
        assert_eq!(
            r.get("[f]_fdown=h.U").unwrap().lhs,
            LongVector::from_i64s(&[0, 0, 0, 1]).into_entries()
        );
    }

    #[test]
    fn basis_names_parse() {
        for b in BasisId::ALL {
            assert_eq!(b.name().parse::<BasisId>().unwrap(), b);
            assert_eq!(b.glyph().parse::<BasisId>().unwrap(), b);
        }
        assert_eq!("HDOT".parse::<BasisId>().unwrap(), BasisId::HDot);
        assert!("xyz".parse::<BasisId>().is_err());
    }
}

//! Slow, independent reference computations used to check the production
//! paths: polynomial expansion for h-vectors, fraction-free elimination for
//! inverses and coordinates, and generators for exhaustive and random
//! face systems.
//!
//! # Random systems
//!
//! [`random_system`] seeds a ChaCha8 stream with `seed` (via
//! `SeedableRng::seed_from_u64`) and draws one `u64` per face, in order of
//! the face bitmask `0, 1, ..., 2^m - 1`. Face `F` is kept iff
//! `x · q < p · 2^64` for density `p/q`. ChaCha8 output is specified
//! independently of platform and crate version, so fixtures stay portable.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::basiskit::{basis_matrix, BasisId, ExactMatrix};
use crate::error::{Error, Result};
use crate::faceset::{is_complex, Face, FaceSystem};
use crate::longvec::LongVector;

/// Largest rank accepted by [`enumerate_systems`].
pub const MAX_EXHAUSTIVE_RANK: usize = 4;
/// Largest rank accepted by [`random_system`].
pub const MAX_RANDOM_RANK: usize = 20;
/// Largest system handled by the set-partition oracles.
pub const MAX_NAIVE_FACES: usize = 9;

/// Integer polynomial in `y`, coefficients in ascending degree with trailing
/// zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolyCoeffs(Vec<BigInt>);

impl PolyCoeffs {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn one() -> Self {
        Self(vec![BigInt::one()])
    }

    /// `y - 1`.
    pub fn y_minus_one() -> Self {
        Self(vec![-BigInt::one(), BigInt::one()])
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.0.get(d).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn mul(&self, other: &PolyCoeffs) -> PolyCoeffs {
        if self.0.is_empty() || other.0.is_empty() {
            return PolyCoeffs::default();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyCoeffs::new(out)
    }

    pub fn add(&self, other: &PolyCoeffs) -> PolyCoeffs {
        let n = self.0.len().max(other.0.len());
        PolyCoeffs::new((0..n).map(|d| self.coeff(d) + other.coeff(d)).collect())
    }

    pub fn scale(&self, c: &BigInt) -> PolyCoeffs {
        PolyCoeffs::new(self.0.iter().map(|v| v * c).collect())
    }
}

/// `Σ f_i (y-1)^{m-i}` as a polynomial.
pub fn f_polynomial(f: &LongVector) -> PolyCoeffs {
    let m = f.rank();
    let mut powers = vec![PolyCoeffs::one()];
    for _ in 0..m {
        let next = powers
            .last()
            .expect("non-empty")
            .mul(&PolyCoeffs::y_minus_one());
        powers.push(next);
    }
    (0..=m).fold(PolyCoeffs::default(), |acc, i| {
        acc.add(&powers[m - i].scale(&f[i]))
    })
}

/// `h_i` read off as the coefficient of `y^{m-i}` in `Σ f_i (y-1)^{m-i}`.
pub fn h_by_expansion(f: &LongVector) -> LongVector {
    let m = f.rank();
    let poly = f_polynomial(f);
    LongVector::new((0..=m).map(|i| poly.coeff(m - i)).collect())
}

/// Solves `A · X = B` for integral `X` by fraction-free Gauss-Jordan
/// elimination on `[A | B]`.
fn solve_integral(a: &ExactMatrix, rhs: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>> {
    let n = a.order();
    let width = n + rhs.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut row = a.row(i).into_entries();
            row.extend(rhs[i].iter().cloned());
            row
        })
        .collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = (k..n)
            .find(|&r| !rows[r][k].is_zero())
            .ok_or(Error::Singular)?;
        rows.swap(k, pivot);
        let (head, tail) = rows.split_at_mut(k);
        let (pivot_row, below) = tail.split_first_mut().expect("k < n");
        for row in head.iter_mut().chain(below.iter_mut()) {
            let factor = row[k].clone();
            for j in 0..width {
                row[j] = (&pivot_row[k] * &row[j] - &factor * &pivot_row[j]) / &prev;
            }
        }
        prev = rows[k][k].clone();
    }
    // every diagonal entry now equals the final pivot
    rows.into_iter()
        .map(|row| {
            row[n..]
                .iter()
                .map(|v| {
                    if (v % &prev).is_zero() {
                        Ok(v / &prev)
                    } else {
                        Err(Error::NonIntegral)
                    }
                })
                .collect()
        })
        .collect()
}

/// Exact inverse of an integer matrix whose inverse is integral.
pub fn invert_exact(m: &ExactMatrix) -> Result<ExactMatrix> {
    let identity: Vec<Vec<BigInt>> = ExactMatrix::identity(m.rank())
        .rows()
        .map(<[BigInt]>::to_vec)
        .collect();
    let inv = ExactMatrix::from_rows(solve_integral(m, &identity)?);
    assert!(
        (m * &inv).is_identity(),
        "elimination produced a wrong inverse"
    );
    Ok(inv)
}

/// Coordinates `c` with `c · B = w`, where row `i` of `B` is the `i`-th
/// basis vector.
pub fn solve_coordinates(w: &LongVector, basis: &ExactMatrix) -> Result<LongVector> {
    if w.rank() != basis.rank() {
        return Err(Error::LengthMismatch {
            expected: basis.order(),
            found: w.entries().len(),
        });
    }
    let rhs: Vec<Vec<BigInt>> = w.entries().iter().map(|v| vec![v.clone()]).collect();
    let c = LongVector::new(
        solve_integral(&basis.transpose(), &rhs)?
            .into_iter()
            .map(|mut r| r.pop().expect("one column"))
            .collect(),
    );
    assert_eq!(
        &basis.left_mul(&c),
        w,
        "elimination produced wrong coordinates"
    );
    Ok(c)
}

/// `M(from → to) = B_to · B_from^{-1}` from the basis vectors alone.
pub fn derived_change_of_basis(from: BasisId, to: BasisId, rank: usize) -> ExactMatrix {
    let inv = invert_exact(&basis_matrix(from, rank)).expect("bases are unimodular");
    &basis_matrix(to, rank) * &inv
}

/// All `2^(2^m)` subsets of `2^[m]`; system `k` holds the faces whose
/// bitmask index is a set bit of `k`.
pub fn enumerate_systems(rank: usize) -> Result<impl Iterator<Item = FaceSystem> + Clone> {
    if rank > MAX_EXHAUSTIVE_RANK {
        return Err(Error::TooLarge {
            what: "rank for exhaustive enumeration",
            value: rank,
            limit: MAX_EXHAUSTIVE_RANK,
        });
    }
    let faces = 1usize << rank;
    Ok((0..1u64 << faces).map(move |k| system_from_index(rank, k)))
}

/// System number `k` of [`enumerate_systems`].
pub fn system_from_index(rank: usize, k: u64) -> FaceSystem {
    let faces = (0..1u64 << rank)
        .filter(|&mask| k >> mask & 1 == 1)
        .map(Face::from_mask);
    FaceSystem::from_faces(rank, faces).expect("faces fit the rank")
}

/// A rational inclusion probability `num/den` in `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Density {
    num: u64,
    den: u64,
}

impl Density {
    pub const HALF: Density = Density { num: 1, den: 2 };

    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num > den {
            return Err(Error::InvalidDensity { num, den });
        }
        Ok(Self { num, den })
    }

    fn accepts(self, x: u64) -> bool {
        (x as u128) * (self.den as u128) < (self.num as u128) << 64
    }
}

/// Each face of `2^[m]` independently with probability `density`.
pub fn random_system(rank: usize, density: Density, seed: u64) -> Result<FaceSystem> {
    if rank > MAX_RANDOM_RANK {
        return Err(Error::TooLarge {
            what: "rank for random systems",
            value: rank,
            limit: MAX_RANDOM_RANK,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let faces: Vec<Face> = (0..1u64 << rank)
        .filter(|_| density.accepts(rng.next_u64()))
        .map(Face::from_mask)
        .collect();
    FaceSystem::from_faces(rank, faces)
}

/// Integer vector of length `m + 1` with entries in `[-bound, bound]`.
pub fn random_vector(rank: usize, bound: i64, rng: &mut impl Rng) -> LongVector {
    LongVector::new(
        (0..=rank)
            .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
            .collect(),
    )
}

/// The seeded generator behind the sampled suites.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Whether the faces form exactly the interval `[∩ block, ∪ block]`.
fn is_interval_block(block: &[Face]) -> bool {
    let bottom = block
        .iter()
        .fold(Face::from_mask(u64::MAX), |a, &f| a.intersection(f));
    let top = block.iter().fold(Face::EMPTY, |a, &f| a.union(f));
    let height = top.difference(bottom).size();
    height < 64 && block.len() as u64 == 1u64 << height
}

/// Visits every set partition of `0..n` as a restricted growth string.
fn for_each_set_partition(n: usize, mut visit: impl FnMut(&[usize], usize)) {
    fn go(a: &mut Vec<usize>, n: usize, blocks: usize, visit: &mut dyn FnMut(&[usize], usize)) {
        if a.len() == n {
            visit(a, blocks);
            return;
        }
        for b in 0..=blocks {
            a.push(b);
            go(a, n, blocks.max(b + 1), visit);
            a.pop();
        }
    }
    go(&mut Vec::with_capacity(n), n, 0, &mut visit);
}

/// Runs `visit(θ)` for every partition of `Φ` into Boolean intervals, found
/// by brute force over all set partitions of the faces.
fn naive_partitions(sys: &FaceSystem, mut visit: impl FnMut(usize)) -> Result<()> {
    if sys.len() > MAX_NAIVE_FACES {
        return Err(Error::SearchTooLarge {
            faces: sys.len(),
            limit: MAX_NAIVE_FACES,
        });
    }
    let faces: Vec<Face> = sys.iter().collect();
    for_each_set_partition(faces.len(), |assign, blocks| {
        let ok = (0..blocks).all(|b| {
            let block: Vec<Face> = faces
                .iter()
                .zip(assign)
                .filter(|(_, &a)| a == b)
                .map(|(&f, _)| f)
                .collect();
            is_interval_block(&block)
        });
        if ok {
            visit(blocks);
        }
    });
    Ok(())
}

/// Number of Boolean-interval partitions of a small system.
pub fn naive_partition_count(sys: &FaceSystem) -> Result<u64> {
    let mut count = 0;
    naive_partitions(sys, |_| count += 1)?;
    Ok(count)
}

/// Least number of intervals over all partitions of a small non-empty
/// system.
pub fn naive_min_theta(sys: &FaceSystem) -> Result<usize> {
    if sys.is_empty() {
        return Err(Error::EmptySystem);
    }
    let mut best = usize::MAX;
    naive_partitions(sys, |theta| best = best.min(theta))?;
    Ok(best)
}

/// Whether `Φ = Δ - Γ` for complexes `Γ ⊆ Δ`, by trying every complex
/// `Δ ⊇ Φ`. Only for `m <= 3`.
pub fn relative_complex_by_definition(sys: &FaceSystem) -> Result<bool> {
    if sys.rank() > 3 {
        return Err(Error::TooLarge {
            what: "rank for the definitional relative-complex search",
            value: sys.rank(),
            limit: 3,
        });
    }
    let found = enumerate_systems(sys.rank())?.any(|delta| {
        if !is_complex(&delta) || !sys.iter().all(|f| delta.contains(f)) {
            return false;
        }
        let gamma = FaceSystem::from_faces(sys.rank(), delta.iter().filter(|&f| !sys.contains(f)))
            .expect("same rank");
        is_complex(&gamma)
    });
    Ok(found)
}

/// Dual by definition: `{[m] - G : G ∉ Φ}`.
pub fn dual_by_definition(sys: &FaceSystem) -> Result<FaceSystem> {
    let full = Face::full(sys.rank());
    FaceSystem::from_faces(
        sys.rank(),
        (0..1u64 << sys.rank())
            .map(Face::from_mask)
            .filter(|&g| !sys.contains(g))
            .map(|g| full.difference(g)),
    )
}

//! Dehn-Sommerville relations for complexes and face systems.
//!
//! A non-empty system `Φ ⊆ 2^[m]` is a DS-system when
//! `h_l(Φ;m) = (-1)^{m - size(Φ)} h_{m-l}(Φ;m)` for all `l`. Equivalently,
//! `h(Φ;n)` is palindromic (a left eigenvector of `U(n)` for eigenvalue 1)
//! at every admissible rank `n`: `n >= η(Φ)` and `n ≡ size(Φ) (mod 2)`.
//!
//! Evaluating at rank `n` re-embeds `Φ` in `2^[n]` with its labels kept, so
//! `n` must be at least the largest element used. Since `η(Φ)` counts the
//! used vertices, it can fall below that; [`is_ds_system`] therefore relabels
//! the used vertices onto `1..=v` before testing and says so in the
//! certificate. Long vectors depend only on face sizes, so the relabeling
//! does not change them.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{binom, sign};
use crate::basiskit::{coordinates, BasisId};
use crate::error::{Error, Result};
use crate::faceset::{self, Face, FaceSystem, MAX_RANK};
use crate::longvec::{classical_h, long_f, long_h_from_f, LongVector};
use crate::partitions::Profile;
use crate::report::{Check, Report};

/// Extra ranks examined above `η(Φ)` when no bound is given.
pub const DEFAULT_N_MAX_SPAN: usize = 6;

/// Palindromicity of the classical h-vector of a non-empty complex.
pub fn classical_ds_holds(complex: &FaceSystem) -> Result<bool> {
    if complex.is_empty() {
        return Err(Error::EmptySystem);
    }
    if !faceset::is_complex(complex) {
        return Err(Error::NotComplex);
    }
    let h = classical_h(complex)?.entries;
    Ok(h.iter().eq(h.iter().rev()))
}

fn is_lone_empty_face(sys: &FaceSystem) -> bool {
    sys.len() == 1 && sys.contains(Face::EMPTY)
}

/// The signed reversal identity at the system's own rank. `∅` and `{0̂}`
/// are DS-systems by convention.
pub fn long_ds_holds(sys: &FaceSystem) -> bool {
    let Some(size) = sys.size() else {
        return true;
    };
    if is_lone_empty_face(sys) {
        return true;
    }
    let h = long_h_from_f(&long_f(sys));
    let m = sys.rank();
    let s = sign((m - size) as i64);
    (0..=m).all(|l| h[l] == &h[m - l] * s)
}

/// `η(Φ)`: the number of used vertices, plus one if its parity differs
/// from `size(Φ)`.
pub fn eta(sys: &FaceSystem) -> Result<usize> {
    let size = sys.size().ok_or(Error::EmptySystem)?;
    let v = sys.vertex_union().size();
    Ok(if (v + size).is_multiple_of(2) {
        v
    } else {
        v + 1
    })
}

/// `h(Φ;n)`. Requires every face of `Φ` to lie in `[n]`.
pub fn long_h_at_rank(sys: &FaceSystem, n: usize) -> Result<LongVector> {
    Ok(long_h_from_f(&long_f_at_rank(sys, n)?))
}

/// `f(Φ;n)`. Requires every face of `Φ` to lie in `[n]`.
pub fn long_f_at_rank(sys: &FaceSystem, n: usize) -> Result<LongVector> {
    Ok(long_f(&sys.with_rank(n)?))
}

/// Outcome of the palindromic test at one rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankCheck {
    pub n: usize,
    pub palindromic: bool,
}

/// First `(n, l)` with `h_l(Φ;n) != h_{n-l}(Φ;n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub n: usize,
    pub l: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DsCertificate {
    pub is_ds: bool,
    pub size: Option<usize>,
    pub eta: Option<usize>,
    pub checked_n: Vec<usize>,
    pub per_n: Vec<RankCheck>,
    pub witness: Option<Witness>,
    /// The signed identity at the original rank; agrees with `is_ds`.
    pub native_signed: bool,
    /// Whether the used vertices were relabeled onto `1..=v` first.
    pub relabeled: bool,
}

/// Admissible ranks `η(Φ) <= n <= n_max` with `n ≡ size(Φ) (mod 2)`.
pub fn admissible_ranks(sys: &FaceSystem, n_max: usize) -> Result<Vec<usize>> {
    let eta = eta(sys)?;
    if n_max < eta {
        return Err(Error::NMaxBelowEta { n_max, eta });
    }
    Ok((eta..=n_max).step_by(2).collect())
}

/// Certifies whether `Φ` is a DS-system by testing `h(Φ;n) = h(Φ;n)·U(n)`
/// for every admissible `n <= n_max` (default `η(Φ) + 6`).
pub fn is_ds_system(sys: &FaceSystem, n_max: Option<usize>) -> Result<DsCertificate> {
    let native_signed = long_ds_holds(sys);
    if sys.is_empty() || is_lone_empty_face(sys) {
        return Ok(DsCertificate {
            is_ds: true,
            size: sys.size(),
            eta: sys.size().map(|_| 0),
            checked_n: Vec::new(),
            per_n: Vec::new(),
            witness: None,
            native_signed,
            relabeled: false,
        });
    }
    let size = sys.size().expect("non-empty");
    let eta = eta(sys)?;
    let n_max = n_max.unwrap_or(eta + DEFAULT_N_MAX_SPAN);
    if n_max > MAX_RANK {
        return Err(Error::RankOutOfRange {
            rank: n_max,
            min: 0,
            max: MAX_RANK,
        });
    }
    let ranks = admissible_ranks(sys, n_max)?;
    let compressed = sys.compress();
    let relabeled = compressed != *sys;
    let results: Vec<(RankCheck, Option<Witness>)> = ranks
        .par_iter()
        .map(|&n| {
            let h = long_h_from_f(&long_f(
                &compressed.with_rank(n).expect("n >= eta >= used vertices"),
            ));
            let bad = (0..=n).find(|&l| h[l] != h[n - l]);
            (
                RankCheck {
                    n,
                    palindromic: bad.is_none(),
                },
                bad.map(|l| Witness { n, l }),
            )
        })
        .collect();
    let witness = results.iter().find_map(|(_, w)| *w);
    Ok(DsCertificate {
        is_ds: witness.is_none(),
        size: Some(size),
        eta: Some(eta),
        checked_n: ranks,
        per_n: results.into_iter().map(|(c, _)| c).collect(),
        witness,
        native_signed,
        relabeled,
    })
}

/// Evaluates the coordinate identities of a DS-system at rank `n` and, when
/// a profile of a partition of `Φ` is supplied, the three profile identities.
/// Every face of `Φ` must lie in `[n]`; relabel with
/// [`FaceSystem::compress`] to reach ranks down to `η(Φ)`.
pub fn conclusion_checks(sys: &FaceSystem, n: usize, profile: Option<&Profile>) -> Result<Report> {
    let size = sys.size().ok_or(Error::EmptySystem)?;
    let eta = eta(sys)?;
    if n < eta || !(n + size).is_multiple_of(2) {
        return Err(Error::InadmissibleRank { n, eta, size });
    }
    if !long_ds_holds(sys) {
        return Err(Error::NotDsSystem);
    }
    let f = long_f_at_rank(sys, n)?;
    let h = long_h_from_f(&f);
    let kappa = |w: &LongVector, b| coordinates(w, b).values.into_entries();
    let mut r = Report::default();

    let k_hup = kappa(&h, BasisId::HUp);
    let k_fup = kappa(&f, BasisId::FUp);
    let signed_f: Vec<BigInt> = (0..=n).map(|l| &f[l] * sign((n - l) as i64)).collect();
    r.push(Check::new(
        "kappa(h,hup)=kappa(f,fup)",
        k_hup,
        k_fup.clone(),
    ));
    r.push(Check::new("kappa(f,fup)=(-1)^(n-l)f_l", k_fup, signed_f));

    let k_hdown = kappa(&h, BasisId::HDown);
    let k_fdown = kappa(&f, BasisId::FDown);
    r.push(Check::new(
        "kappa(h,hdown)=kappa(f,fdown)",
        k_hdown,
        k_fdown.clone(),
    ));
    r.push(Check::new(
        "kappa(f,fdown)=h_l",
        k_fdown,
        h.entries().to_vec(),
    ));
    r.push(Check::new(
        "h_l=h_(n-l)",
        h.entries().to_vec(),
        h.reversed().into_entries(),
    ));
    r.push(Check::new(
        "kappa(h,fup)=kappa(h,fdown)",
        kappa(&h, BasisId::FUp),
        kappa(&h, BasisId::FDown),
    ));

    if let Some(p) = profile {
        p.validate(n)?;
        if p.face_count() != BigInt::from(sys.len()) {
            return Err(Error::MalformedProfile(format!(
                "profile covers {} faces but the system has {}",
                p.face_count(),
                sys.len()
            )));
        }
        let ni = n as i64;
        let parity = sign(ni);
        let core = |s: i64| p.weighted_sum(|i, j| binom(ni - i - j, s - j) * sign(j));
        let mut lhs = [Vec::new(), Vec::new(), Vec::new()];
        let mut rhs = [Vec::new(), Vec::new(), Vec::new()];
        for l in 0..=ni {
            lhs[0].push(p.weighted_sum(|i, j| binom(j, l - i) * sign(i + j)));
            rhs[0].push(p.weighted_sum(|i, j| binom(i, l - j)) * parity);

            lhs[1].push(p.weighted_sum(|i, j| binom(ni - i - j, l - i) * sign(j)));
            rhs[1].push(p.weighted_sum(|i, j| binom(ni - i - j, l - j) * sign(j)) * parity);

            let cores: Vec<BigInt> = (0..=ni).map(core).collect();
            lhs[2].push((0..=ni).map(|s| binom(s, l) * &cores[s as usize]).sum());
            rhs[2].push(
                (0..=ni)
                    .map(|s| binom(ni - s, l) * &cores[s as usize])
                    .sum::<BigInt>()
                    * parity,
            );
        }
        let [l0, l1, l2] = lhs;
        let [r0, r1, r2] = rhs;
        r.push(Check::new("profile-fup-hdot", l0, r0));
        r.push(Check::new("profile-fdown-hdown", l1, r1));
        r.push(Check::new("profile-hfup-hfdown", l2, r2));
    }
    Ok(r)
}

//! Faces, face systems and Boolean intervals inside the simplex `2^[m]`.
//!
//! A [`Face`] is a subset of `[m] = {1, ..., m}` stored as a bit mask (element
//! `e` lives in bit `e - 1`), so ranks up to 64 are representable. Operations
//! that enumerate all of `2^[m]` are limited to `m <= MAX_ENUM_RANK`.
//!
//! Any downward-closed family is treated as a complex on the vertices it
//! actually uses; a complex inside `[m]` is not required to contain all `m`
//! singletons.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest ambient rank for per-face operations.
pub const MAX_RANK: usize = 64;
/// Largest ambient rank for operations that walk all of `2^[m]`.
pub const MAX_ENUM_RANK: usize = 20;

/// A subset of `[m]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    /// The empty face.
    pub const EMPTY: Face = Face(0);

    pub fn from_mask(mask: u64) -> Self {
        Face(mask)
    }

    /// Builds a face from 1-based elements. Duplicates are ignored.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Result<Self> {
        let mut mask = 0u64;
        for e in elements {
            if e == 0 || e > MAX_RANK {
                return Err(Error::ElementOutOfRange {
                    element: e,
                    rank: MAX_RANK,
                });
            }
            mask |= 1 << (e - 1);
        }
        Ok(Face(mask))
    }

    /// `[m]` itself.
    pub fn full(rank: usize) -> Self {
        if rank >= 64 {
            Face(u64::MAX)
        } else {
            Face((1u64 << rank) - 1)
        }
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    /// Cardinality `|F|`.
    pub fn size(self) -> usize {
        self.0.count_ones() as usize
    }

    /// `|F| - 1`; the empty face has dimension -1.
    pub fn dim(self) -> isize {
        self.size() as isize - 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, element: usize) -> bool {
        (1..=64).contains(&element) && self.0 >> (element - 1) & 1 == 1
    }

    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    /// Largest element, or 0 for the empty face.
    pub fn max_element(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// Sorted 1-based elements.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..64).filter(move |b| mask >> b & 1 == 1).map(|b| b + 1)
    }

    /// Whether every element lies in `[rank]`.
    pub fn fits(self, rank: usize) -> bool {
        self.is_subset_of(Face::full(rank))
    }
}

impl Ord for Face {
    /// Size first, then lexicographic on the sorted element lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                // self holds the smallest element of the symmetric difference
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.elements().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Faces serialize as JSON arrays of their elements.
impl Serialize for Face {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.elements())
    }
}

impl<'de> Deserialize<'de> for Face {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let elements = Vec::<usize>::deserialize(d)?;
        let mut seen = 0u64;
        for &e in &elements {
            if e == 0 || e > MAX_RANK {
                return Err(serde::de::Error::custom(format!(
                    "element {e} out of range 1..={MAX_RANK}"
                )));
            }
            if seen >> (e - 1) & 1 == 1 {
                return Err(serde::de::Error::custom(format!("repeated element {e}")));
            }
            seen |= 1 << (e - 1);
        }
        Ok(Face(seen))
    }
}

fn check_rank(rank: usize, min: usize, max: usize) -> Result<()> {
    if rank < min || rank > max {
        return Err(Error::RankOutOfRange { rank, min, max });
    }
    Ok(())
}

/// A family of faces inside `2^[m]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FaceSystem {
    rank: usize,
    faces: BTreeSet<Face>,
}

impl FaceSystem {
    /// The family with no faces.
    pub fn empty(rank: usize) -> Result<Self> {
        check_rank(rank, 0, MAX_RANK)?;
        Ok(Self {
            rank,
            faces: BTreeSet::new(),
        })
    }

    /// Collects faces into a system; repeated faces collapse.
    pub fn from_faces<I: IntoIterator<Item = Face>>(rank: usize, faces: I) -> Result<Self> {
        let mut sys = Self::empty(rank)?;
        for face in faces {
            sys.insert(face)?;
        }
        Ok(sys)
    }

    /// Builds a system from element lists, e.g. `&[&[], &[1], &[2]]`.
    pub fn from_lists(rank: usize, lists: &[&[usize]]) -> Result<Self> {
        let faces = lists
            .iter()
            .map(|l| Face::from_elements(l.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_faces(rank, faces)
    }

    /// Inserts a face; returns whether it was new.
    pub fn insert(&mut self, face: Face) -> Result<bool> {
        if !face.fits(self.rank) {
            return Err(Error::ElementOutOfRange {
                element: face.max_element(),
                rank: self.rank,
            });
        }
        Ok(self.faces.insert(face))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `#Φ`.
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, face: Face) -> bool {
        self.faces.contains(&face)
    }

    /// Faces in the deterministic (size, lex) order.
    pub fn iter(&self) -> impl Iterator<Item = Face> + '_ {
        self.faces.iter().copied()
    }

    pub fn faces(&self) -> &BTreeSet<Face> {
        &self.faces
    }

    /// `max |F|`, defined only for non-empty systems.
    pub fn size(&self) -> Option<usize> {
        self.faces.iter().next_back().map(|f| f.size())
    }

    pub fn dim(&self) -> Option<isize> {
        self.size().map(|s| s as isize - 1)
    }

    /// `∪_{F ∈ Φ} F`.
    pub fn vertex_union(&self) -> Face {
        self.faces.iter().fold(Face::EMPTY, |acc, f| acc.union(*f))
    }

    /// Same faces, different ambient rank. Faces keep their labels.
    pub fn with_rank(&self, rank: usize) -> Result<Self> {
        Self::from_faces(rank, self.iter())
    }

    /// Relabels the used vertices onto `1..=v` preserving their order,
    /// keeping the ambient rank.
    pub fn compress(&self) -> Self {
        let used: Vec<usize> = self.vertex_union().elements().collect();
        let remap = |f: Face| {
            let mut mask = 0u64;
            for (k, e) in used.iter().enumerate() {
                if f.contains(*e) {
                    mask |= 1 << k;
                }
            }
            Face(mask)
        };
        Self {
            rank: self.rank,
            faces: self.faces.iter().map(|f| remap(*f)).collect(),
        }
    }

    /// Membership bitmap over all `2^m` faces, indexed by mask.
    pub(crate) fn dense(&self) -> Result<Vec<bool>> {
        check_rank(self.rank, 0, MAX_ENUM_RANK)?;
        let mut bits = vec![false; 1 << self.rank];
        for f in &self.faces {
            bits[f.0 as usize] = true;
        }
        Ok(bits)
    }

    /// Writes the face-system text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("m={}\n", self.rank);
        for f in &self.faces {
            out.push_str(&f.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses the face-system text format: a `m=<int>` header line, then
    /// one `{a,b,...}` face per line. Blank lines and `#` comments are
    /// skipped; repeated faces are rejected.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut sys: Option<FaceSystem> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let indent = raw.len() - raw.trim_start().len();
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let perr = |col: usize, message: String| Error::Parse {
                line: line_no,
                column: indent + col + 1,
                message,
            };
            match sys.as_mut() {
                None => {
                    let Some(rest) = line.strip_prefix("m=") else {
                        return Err(perr(0, "expected header `m=<int>`".into()));
                    };
                    let rank: usize = rest
                        .trim()
                        .parse()
                        .map_err(|_| perr(2, format!("invalid rank `{}`", rest.trim())))?;
                    sys = Some(FaceSystem::empty(rank).map_err(|e| perr(2, e.to_string()))?);
                }
                Some(sys) => {
                    let face = parse_face(line).map_err(|(col, msg)| perr(col, msg))?;
                    if !face.fits(sys.rank) {
                        return Err(perr(
                            0,
                            format!("face {face} does not lie in [{}]", sys.rank),
                        ));
                    }
                    if !sys.faces.insert(face) {
                        return Err(perr(0, format!("duplicate face {face}")));
                    }
                }
            }
        }
        sys.ok_or(Error::Parse {
            line: text.lines().count().max(1),
            column: 1,
            message: "missing header `m=<int>`".into(),
        })
    }
}

impl FromStr for FaceSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_text(s)
    }
}

impl fmt::Display for FaceSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, face) in self.faces.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{face}")?;
        }
        write!(f, "}} in 2^[{}]", self.rank)
    }
}

/// Parses `{1,3}`; errors carry a 0-based column within `line`.
fn parse_face(line: &str) -> std::result::Result<Face, (usize, String)> {
    let bytes = line.as_bytes();
    if bytes.first() != Some(&b'{') {
        return Err((0, "expected `{`".into()));
    }
    let Some(close) = line.find('}') else {
        return Err((line.len(), "missing `}`".into()));
    };
    if close + 1 != line.len() {
        return Err((close + 1, "unexpected text after `}`".into()));
    }
    let body = &line[1..close];
    let mut mask = 0u64;
    if body.trim().is_empty() {
        return Ok(Face::EMPTY);
    }
    let mut offset = 1;
    for token in body.split(',') {
        let lead = token.len() - token.trim_start().len();
        let t = token.trim();
        let col = offset + lead;
        let e: usize = t
            .parse()
            .map_err(|_| (col, format!("invalid element `{t}`")))?;
        if e == 0 || e > MAX_RANK {
            return Err((col, format!("element {e} out of range 1..={MAX_RANK}")));
        }
        if mask >> (e - 1) & 1 == 1 {
            return Err((col, format!("repeated element {e}")));
        }
        mask |= 1 << (e - 1);
        offset += token.len() + 1;
    }
    Ok(Face(mask))
}

/// A Boolean interval `[A, C] = {B : A ⊆ B ⊆ C}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct BooleanInterval {
    pub bottom: Face,
    pub top: Face,
}

impl BooleanInterval {
    pub fn new(bottom: Face, top: Face) -> Result<Self> {
        if !bottom.is_subset_of(top) {
            return Err(Error::NotSubset { bottom, top });
        }
        Ok(Self { bottom, top })
    }

    /// `|C - A|`.
    pub fn height(&self) -> usize {
        self.top.difference(self.bottom).size()
    }

    /// Number of faces, `2^{|C - A|}`.
    pub fn len(&self) -> u128 {
        1u128 << self.height()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, face: Face) -> bool {
        self.bottom.is_subset_of(face) && face.is_subset_of(self.top)
    }

    /// Every face of the interval, enumerated as `A ∪ X` for `X ⊆ C - A`.
    pub fn faces(&self) -> impl Iterator<Item = Face> {
        let free = self.top.difference(self.bottom).mask();
        let bottom = self.bottom.mask();
        // Walk submasks of `free` upward, starting at zero.
        let mut sub = Some(0u64);
        std::iter::from_fn(move || {
            let cur = sub?;
            sub = if cur == free {
                None
            } else {
                Some((cur.wrapping_sub(free)) & free)
            };
            Some(Face(bottom | cur))
        })
    }
}

impl fmt::Display for BooleanInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.bottom, self.top)
    }
}

/// The simplex `2^[m]`.
pub fn make_simplex(rank: usize) -> Result<FaceSystem> {
    check_rank(rank, 1, MAX_ENUM_RANK)?;
    interval(Face::EMPTY, Face::full(rank), rank)
}

/// The Boolean interval `[A, C]` as a face system in `2^[m]`.
pub fn interval(bottom: Face, top: Face, rank: usize) -> Result<FaceSystem> {
    check_rank(rank, 0, MAX_RANK)?;
    let iv = BooleanInterval::new(bottom, top)?;
    if !top.fits(rank) {
        return Err(Error::ElementOutOfRange {
            element: top.max_element(),
            rank,
        });
    }
    if iv.height() > MAX_ENUM_RANK {
        return Err(Error::TooLarge {
            what: "interval height",
            value: iv.height(),
            limit: MAX_ENUM_RANK,
        });
    }
    FaceSystem::from_faces(rank, iv.faces())
}

/// Downward closure: `A ⊆ B ∈ Φ` implies `A ∈ Φ`.
pub fn is_complex(sys: &FaceSystem) -> bool {
    sys.iter().all(|f| {
        f.elements()
            .all(|e| sys.contains(f.difference(Face::from_mask(1 << (e - 1)))))
    })
}

/// Whether `Φ = Δ - Γ` for a complex `Δ` and subcomplex `Γ ⊆ Δ`.
///
/// Tested through convexity in the Boolean lattice: `A ⊆ B ⊆ C` with
/// `A, C ∈ Φ` forces `B ∈ Φ`. If `Φ` is convex, `Δ` = down-closure of `Φ` and
/// `Γ = Δ - Φ` witness the definition, since a face of `Γ` below a face of
/// `Γ` cannot sit in `Φ` without an element of `Φ` above it. Conversely a
/// difference of complexes is convex. The empty family counts (`Γ = Δ`).
pub fn is_relative_complex(sys: &FaceSystem) -> bool {
    if sys.rank() <= MAX_ENUM_RANK {
        let inside = sys.dense().expect("rank checked");
        let n = sys.rank();
        let size = 1usize << n;
        // down[x]: x lies below some face; up[x]: x lies above some face
        let mut down = inside.clone();
        for x in (0..size).rev() {
            if !down[x] {
                down[x] = (0..n).any(|b| x >> b & 1 == 0 && down[x | 1 << b]);
            }
        }
        let mut up = inside.clone();
        for x in 0..size {
            if !up[x] {
                up[x] = (0..n).any(|b| x >> b & 1 == 1 && up[x & !(1 << b)]);
            }
        }
        (0..size).all(|x| inside[x] || !(down[x] && up[x]))
    } else {
        let faces: Vec<Face> = sys.iter().collect();
        faces.iter().all(|&a| {
            faces.iter().filter(|&&c| a.is_subset_of(c)).all(|&c| {
                BooleanInterval { bottom: a, top: c }
                    .faces()
                    .all(|b| sys.contains(b))
            })
        })
    }
}

/// `Φ* = {[m] - F : F ∈ 2^[m], F ∉ Φ}`.
pub fn dual_system(sys: &FaceSystem) -> Result<FaceSystem> {
    let inside = sys.dense()?;
    let full = Face::full(sys.rank()).mask();
    let faces = inside
        .iter()
        .enumerate()
        .filter(|(_, &present)| !present)
        .map(|(x, _)| Face(full & !(x as u64)));
    FaceSystem::from_faces(sys.rank(), faces)
}

/// The smallest complex containing `Φ`.
pub fn downward_closure(sys: &FaceSystem) -> FaceSystem {
    let mut faces = BTreeSet::new();
    for f in sys.iter() {
        BooleanInterval {
            bottom: Face::EMPTY,
            top: f,
        }
        .faces()
        .for_each(|x| {
            faces.insert(x);
        });
    }
    FaceSystem {
        rank: sys.rank(),
        faces,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetOp {
    Union,
    Intersection,
    Difference,
}

/// Union, intersection or difference of two systems of equal rank.
pub fn set_algebra(left: &FaceSystem, right: &FaceSystem, op: SetOp) -> Result<FaceSystem> {
    if left.rank != right.rank {
        return Err(Error::RankMismatch {
            left: left.rank,
            right: right.rank,
        });
    }
    let faces = match op {
        SetOp::Union => left.faces.union(&right.faces).copied().collect(),
        SetOp::Intersection => left.faces.intersection(&right.faces).copied().collect(),
        SetOp::Difference => left.faces.difference(&right.faces).copied().collect(),
    };
    Ok(FaceSystem {
        rank: left.rank,
        faces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(rank: usize, lists: &[&[usize]]) -> FaceSystem {
        FaceSystem::from_lists(rank, lists).unwrap()
    }

    #[test]
    fn face_order_is_size_then_lex() {
        let mut faces: Vec<Face> = make_simplex(3).unwrap().iter().collect();
        faces.sort();
        let shown: Vec<String> = faces.iter().map(|f| f.to_string()).collect();
        assert_eq!(
            shown,
            ["{}", "{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}"]
        );
    }

    #[test]
    fn simplex_examples() {
        let s1 = make_simplex(1).unwrap();
        assert_eq!(s1, sys(1, &[&[], &[1]]));
        assert_eq!(make_simplex(3).unwrap().len(), 8);
        assert!(make_simplex(0).is_err());
        assert!(make_simplex(21).is_err());
    }

    #[test]
    fn interval_examples() {
        let full = interval(Face::EMPTY, Face::full(3), 3).unwrap();
        assert_eq!(full, make_simplex(3).unwrap());
        let ab = Face::from_elements([1, 2]).unwrap();
        assert_eq!(interval(ab, ab, 2).unwrap().len(), 1);
        let one = Face::from_elements([1]).unwrap();
        assert_eq!(
            interval(one, Face::full(3), 3).unwrap(),
            sys(3, &[&[1], &[1, 2], &[1, 3], &[1, 2, 3]])
        );
        assert!(matches!(interval(ab, one, 2), Err(Error::NotSubset { .. })));
        assert!(matches!(
            interval(Face::EMPTY, Face::full(3), 2),
            Err(Error::ElementOutOfRange { .. })
        ));
    }

    #[test]
    fn interval_cardinality() {
        for rank in 0..=5usize {
            for c in 0..(1u64 << rank) {
                let top = Face::from_mask(c);
                let mut a = c;
                loop {
                    let bottom = Face::from_mask(a);
                    let iv = interval(bottom, top, rank).unwrap();
                    assert_eq!(iv.len(), 1 << (top.size() - bottom.size()));
                    assert!(is_relative_complex(&iv));
                    if a == 0 {
                        break;
                    }
                    a = (a - 1) & c;
                }
            }
        }
    }

    #[test]
    fn complex_examples() {
        assert!(is_complex(&sys(2, &[&[], &[1], &[2]])));
        assert!(!is_complex(&sys(2, &[&[1, 2]])));
        let mut boundary = make_simplex(3).unwrap();
        boundary.faces.remove(&Face::full(3));
        assert!(is_complex(&boundary));
    }

    #[test]
    fn relative_complex_examples() {
        assert!(is_relative_complex(&sys(2, &[&[], &[1], &[2]])));
        assert!(is_relative_complex(&sys(2, &[&[1, 2]])));
        assert!(!is_relative_complex(&sys(2, &[&[], &[1, 2]])));
        assert!(is_relative_complex(&FaceSystem::empty(2).unwrap()));
    }

    #[test]
    fn dual_examples() {
        assert!(dual_system(&make_simplex(3).unwrap()).unwrap().is_empty());
        assert_eq!(
            dual_system(&FaceSystem::empty(2).unwrap()).unwrap(),
            make_simplex(2).unwrap()
        );
        assert_eq!(
            dual_system(&sys(2, &[&[], &[1], &[2]])).unwrap(),
            sys(2, &[&[]])
        );
    }

    #[test]
    fn set_algebra_examples() {
        let phi = sys(2, &[&[], &[1]]);
        let empty = FaceSystem::empty(2).unwrap();
        assert_eq!(set_algebra(&phi, &empty, SetOp::Union).unwrap(), phi);
        assert_eq!(set_algebra(&phi, &phi, SetOp::Intersection).unwrap(), phi);
        assert_eq!(
            set_algebra(&sys(2, &[&[1]]), &sys(2, &[&[2]]), SetOp::Union).unwrap(),
            sys(2, &[&[1], &[2]])
        );
        assert_eq!(
            set_algebra(&phi, &sys(2, &[&[1]]), SetOp::Difference).unwrap(),
            sys(2, &[&[]])
        );
        assert!(matches!(
            set_algebra(&phi, &sys(3, &[]), SetOp::Union),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn size_of_empty_family_is_undefined() {
        assert_eq!(FaceSystem::empty(3).unwrap().size(), None);
        assert_eq!(sys(3, &[&[]]).size(), Some(0));
        assert_eq!(sys(3, &[&[]]).dim(), Some(-1));
    }

    #[test]
    fn text_round_trip() {
        let phi = sys(3, &[&[], &[1, 3], &[2]]);
        let text = phi.to_text();
        assert_eq!(text, "m=3\n{}\n{2}\n{1,3}\n");
        assert_eq!(text.parse::<FaceSystem>().unwrap(), phi);
    }

    #[test]
    fn text_comments_and_whitespace() {
        let phi: FaceSystem = "# a comment\n\n m=2 \n{ 1 , 2 }\n# more\n{}\n"
            .parse()
            .unwrap();
        assert_eq!(phi, sys(2, &[&[], &[1, 2]]));
    }

    #[test]
    fn text_errors_carry_positions() {
        let err = "m=2\n{1}\n{1}\n".parse::<FaceSystem>().unwrap_err();
        assert!(
            matches!(
                err,
                Error::Parse {
                    line: 3,
                    column: 1,
                    ..
                }
            ),
            "{err}"
        );
        let err = "m=2\n{1,x}\n".parse::<FaceSystem>().unwrap_err();
        assert!(
            matches!(
                err,
                Error::Parse {
                    line: 2,
                    column: 4,
                    ..
                }
            ),
            "{err}"
        );
        let err = "m=2\n{3}\n".parse::<FaceSystem>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = "{1}\n".parse::<FaceSystem>().unwrap_err();
        assert!(
            matches!(
                err,
                Error::Parse {
                    line: 1,
                    column: 1,
                    ..
                }
            ),
            "{err}"
        );
        let err = "# only comment\n".parse::<FaceSystem>().unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        let err = "m=2\n{1,1}\n".parse::<FaceSystem>().unwrap_err();
        assert!(
            matches!(
                err,
                Error::Parse {
                    line: 2,
                    column: 4,
                    ..
                }
            ),
            "{err}"
        );
    }

    #[test]
    fn compress_relabels_in_order() {
        let phi = sys(6, &[&[2, 5], &[5]]);
        assert_eq!(phi.compress(), sys(6, &[&[1, 2], &[2]]));
        assert!(phi.with_rank(4).is_err());
        assert_eq!(phi.with_rank(5).unwrap().rank(), 5);
    }

    #[test]
    fn face_json_is_element_list() {
        let f = Face::from_elements([1, 3]).unwrap();
        assert_eq!(serde_json::to_string(&f).unwrap(), "[1,3]");
        assert_eq!(serde_json::from_str::<Face>("[3,1]").unwrap(), f);
        assert!(serde_json::from_str::<Face>("[0]").is_err());
        assert!(serde_json::from_str::<Face>("[2,2]").is_err());
    }
}

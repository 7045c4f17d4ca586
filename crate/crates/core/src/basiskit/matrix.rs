use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::longvec::LongVector;

/// A square exact-integer matrix of order `m + 1`, rows and columns indexed
/// from 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExactMatrix {
    order: usize,
    data: Vec<BigInt>,
}

impl ExactMatrix {
    /// Builds the `(m+1) x (m+1)` matrix with entry `entry(i, j)`.
    pub fn from_fn(rank: usize, mut entry: impl FnMut(usize, usize) -> BigInt) -> Self {
        let order = rank + 1;
        let mut data = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                data.push(entry(i, j));
            }
        }
        Self { order, data }
    }

    /// Panics unless `rows` is square and non-empty.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let order = rows.len();
        assert!(order > 0, "empty matrix");
        assert!(
            rows.iter().all(|r| r.len() == order),
            "matrix is not square"
        );
        Self {
            order,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    /// `I(m)`.
    pub fn identity(rank: usize) -> Self {
        Self::from_fn(rank, |i, j| BigInt::from((i == j) as i64))
    }

    /// `U(m)`, entry `δ_{i+j,m}`.
    pub fn backward_identity(rank: usize) -> Self {
        Self::from_fn(rank, |i, j| BigInt::from((i + j == rank) as i64))
    }

    /// `T(m)`, entry `δ_{j-i,1}`.
    pub fn forward_shift(rank: usize) -> Self {
        Self::from_fn(rank, |i, j| BigInt::from((j == i + 1) as i64))
    }

    pub fn rank(&self) -> usize {
        self.order - 1
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> LongVector {
        LongVector::new(self.data[i * self.order..(i + 1) * self.order].to_vec())
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.data.chunks(self.order)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.rank(), |i, j| self.get(j, i).clone())
    }

    /// Row vector times matrix, `w · M`.
    pub fn left_mul(&self, w: &LongVector) -> LongVector {
        assert_eq!(w.entries().len(), self.order, "dimension mismatch");
        LongVector::new(
            (0..self.order)
                .map(|j| {
                    w.entries()
                        .iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(i, v)| v * self.get(i, j))
                        .sum()
                })
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.rank());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        (0..self.order).all(|i| {
            (0..self.order).all(|j| {
                let v = self.get(i, j);
                if i == j {
                    v.is_one()
                } else {
                    v.is_zero()
                }
            })
        })
    }

    /// Aligned text grid, one row per line.
    pub fn to_grid(&self) -> String {
        let cells: Vec<String> = self.data.iter().map(|v| v.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        let mut out = String::new();
        for row in cells.chunks(self.order) {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;

    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.order, rhs.order, "dimension mismatch");
        ExactMatrix::from_fn(self.rank(), |i, j| {
            (0..self.order)
                .map(|k| self.get(i, k) * rhs.get(k, j))
                .sum()
        })
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_grid())
    }
}

/// JSON array of rows, each an array of decimal strings.
impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(
            self.rows()
                .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>()),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structural_matrices() {
        let u = ExactMatrix::backward_identity(3);
        assert_eq!(
            u,
            ExactMatrix::from_i64_rows(&[
                &[0, 0, 0, 1],
                &[0, 0, 1, 0],
                &[0, 1, 0, 0],
                &[1, 0, 0, 0]
            ])
        );
        assert!((&u * &u).is_identity());
        let t = ExactMatrix::forward_shift(3);
        assert!(t.pow(4).data.iter().all(Zero::is_zero));
        assert_eq!(t.pow(0), ExactMatrix::identity(3));
    }

    #[test]
    fn left_multiplication() {
        let w = LongVector::from_i64s(&[1, 0, -1]);
        assert_eq!(
            ExactMatrix::backward_identity(2).left_mul(&w),
            LongVector::from_i64s(&[-1, 0, 1])
        );
        // σ(i;m) = (1,0,...,0)·T(m)^i
        let e0 = LongVector::unit(4, 0);
        for i in 0..=4 {
            assert_eq!(
                ExactMatrix::forward_shift(4).pow(i as u32).left_mul(&e0),
                LongVector::unit(4, i)
            );
        }
    }

    #[test]
    fn grid_and_json() {
        let m = ExactMatrix::from_i64_rows(&[&[1, -3], &[0, 12]]);
        assert_eq!(m.to_grid(), " 1 -3\n 0 12\n");
        assert_eq!(
            serde_json::to_string(&m).unwrap(),
            r#"[["1","-3"],["0","12"]]"#
        );
    }
}

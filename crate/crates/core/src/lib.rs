//! Exact long f- and h-vectors of face systems `Φ ⊆ 2^[m]`.
//!
//! Faces are bitmasks over `[m] = {1,…,m}`, all arithmetic is on
//! arbitrary-precision integers, and every change of basis between the six
//! bases of `Z^{m+1}` is available both in closed form and by elimination.

pub mod arith;
pub mod basiskit;
pub mod battery;
pub mod dscheck;
pub mod error;
pub mod faceset;
pub mod longvec;
pub mod oracle;
pub mod partitions;
pub mod report;

pub use basiskit::{change_of_basis, coordinates, BasisId, Coordinates, ExactMatrix};
pub use dscheck::{conclusion_checks, is_ds_system, DsCertificate};
pub use error::{Error, Result};
pub use faceset::{BooleanInterval, Face, FaceSystem};
pub use longvec::{long_f, long_h, LongVector};
pub use partitions::{find_partition, profile, IntervalPartition, Profile, Strategy};
pub use report::{Check, Report};

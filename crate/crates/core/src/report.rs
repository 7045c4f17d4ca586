use num_bigint::BigInt;
use serde::Serialize;

use crate::longvec::decimal_strings;

/// One evaluated identity: both sides and whether they agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    #[serde(serialize_with = "decimal_strings")]
    pub lhs: Vec<BigInt>,
    #[serde(serialize_with = "decimal_strings")]
    pub rhs: Vec<BigInt>,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, lhs: Vec<BigInt>, rhs: Vec<BigInt>) -> Self {
        let pass = lhs == rhs;
        Self {
            name: name.into(),
            lhs,
            rhs,
            pass,
        }
    }

    pub fn scalar(name: impl Into<String>, lhs: BigInt, rhs: BigInt) -> Self {
        Self::new(name, vec![lhs], vec![rhs])
    }
}

/// An ordered list of identity checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}

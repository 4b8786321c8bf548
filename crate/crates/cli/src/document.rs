//! Serialized output of every subcommand.
//!
//! Big integers are written as decimal strings. Commutators carry both the
//! bracket text (`[[x2,x1],x1]`) and an index tree (`[[2,1],1]`).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use nilmult_core::{Commutator, RankReport, VerificationReport};

pub const SCHEMA_VERSION: &str = "1";

/// Non-negative integer serialized as a decimal string.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Decimal(pub BigUint);

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<BigUint> for Decimal {
    fn from(v: BigUint) -> Self {
        Decimal(v)
    }
}

impl Serialize for Decimal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Decimal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_decimal(&s).map_err(serde::de::Error::custom)
    }
}

fn parse_decimal(s: &str) -> Result<Decimal, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("expected a decimal integer, got {s:?}"));
    }
    BigUint::from_str(s).map(Decimal).map_err(|e| e.to_string())
}

/// Commutator as nested index arrays: a letter is its index, a pair is `[left, right]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CommutatorTree {
    Leaf(u32),
    Pair(Box<CommutatorTree>, Box<CommutatorTree>),
}

impl CommutatorTree {
    pub fn from_commutator(c: &Commutator) -> Self {
        match (c.as_leaf(), c.as_pair()) {
            (Some(g), _) => CommutatorTree::Leaf(g.index()),
            (None, Some((l, r))) => CommutatorTree::Pair(
                Box::new(Self::from_commutator(l)),
                Box::new(Self::from_commutator(r)),
            ),
            (None, None) => unreachable!(),
        }
    }

    pub fn to_commutator(&self) -> Option<Commutator> {
        match self {
            CommutatorTree::Leaf(i) => Commutator::generator(*i).ok(),
            CommutatorTree::Pair(l, r) => Some(Commutator::pair(l.to_commutator()?, r.to_commutator()?)),
        }
    }
}

impl fmt::Display for CommutatorTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommutatorTree::Leaf(i) => write!(f, "{i}"),
            CommutatorTree::Pair(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisEntry {
    pub index: usize,
    pub weight: u32,
    pub commutator: String,
    pub tree: CommutatorTree,
}

impl BasisEntry {
    pub fn new(index: usize, c: &Commutator) -> Self {
        BasisEntry {
            index,
            weight: c.weight(),
            commutator: c.to_string(),
            tree: CommutatorTree::from_commutator(c),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub weight: u32,
    pub chi: Decimal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankDoc {
    pub multiplier: String,
    pub n: u32,
    pub c: u32,
    pub m: u32,
    pub branch: String,
    pub rank: Decimal,
    pub summands: Vec<Summand>,
}

impl RankDoc {
    pub fn new(multiplier: &str, report: &RankReport) -> Self {
        RankDoc {
            multiplier: multiplier.to_string(),
            n: report.n,
            c: report.c,
            m: report.m,
            branch: report.branch.to_string(),
            rank: report.rank.clone().into(),
            summands: report
                .summands
                .iter()
                .map(|(w, v)| Summand { weight: *w, chi: v.clone().into() })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub target: String,
    pub n: u32,
    pub c: u32,
    pub m: u32,
    pub truncation: Option<u32>,
    pub trials: Option<u32>,
    pub seed: Option<u64>,
    pub status: String,
    pub checked: u64,
    pub counterexample: Option<String>,
    pub note: Option<String>,
}

impl From<&VerificationReport> for ReportDoc {
    fn from(r: &VerificationReport) -> Self {
        ReportDoc {
            target: r.target.to_string(),
            n: r.n,
            c: r.c,
            m: r.m,
            truncation: r.truncation,
            trials: r.trials,
            seed: r.seed,
            status: r.status.to_string(),
            checked: r.checked,
            counterexample: r.counterexample.clone(),
            note: r.note.clone(),
        }
    }
}

/// A table cell: a rank, or `"n/a"` when the formula does not apply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RankCell {
    Value(Decimal),
    NotApplicable,
}

pub const NOT_APPLICABLE: &str = "n/a";

impl fmt::Display for RankCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankCell::Value(v) => v.fmt(f),
            RankCell::NotApplicable => f.write_str(NOT_APPLICABLE),
        }
    }
}

impl Serialize for RankCell {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RankCell {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        if s == NOT_APPLICABLE {
            return Ok(RankCell::NotApplicable);
        }
        parse_decimal(&s).map(RankCell::Value).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: u32,
    pub c: u32,
    pub m: u32,
    pub rank: RankCell,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Payload {
    Chi {
        weight: u32,
        generators: u64,
        value: Decimal,
    },
    Basis {
        generators: u32,
        max_weight: u32,
        entries: Vec<BasisEntry>,
    },
    Rank(RankDoc),
    Verification {
        reports: Vec<ReportDoc>,
    },
    Table {
        multiplier: String,
        rows: Vec<TableRow>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub schema_version: String,
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub payload: Payload,
}

impl OutputDocument {
    pub fn new(command: &str, parameters: BTreeMap<String, String>, payload: Payload) -> Self {
        OutputDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            parameters,
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals_are_strings() {
        let d = Decimal(BigUint::from(10u32).pow(30));
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(json, "\"1000000000000000000000000000000\"");
        assert_eq!(serde_json::from_str::<Decimal>(&json).unwrap(), d);
        assert!(serde_json::from_str::<Decimal>("\"-3\"").is_err());
        assert!(serde_json::from_str::<Decimal>("12").is_err());
    }

    #[test]
    fn trees_are_index_arrays() {
        let c = Commutator::pair(
            Commutator::pair(Commutator::generator(2).unwrap(), Commutator::generator(1).unwrap()),
            Commutator::generator(1).unwrap(),
        );
        let tree = CommutatorTree::from_commutator(&c);
        assert_eq!(serde_json::to_string(&tree).unwrap(), "[[2,1],1]");
        assert_eq!(tree.to_commutator().unwrap(), c);
        let back: CommutatorTree = serde_json::from_str("[[2,1],1]").unwrap();
        assert_eq!(back, tree);
    }

    #[test]
    fn cells_render_not_applicable() {
        assert_eq!(serde_json::to_string(&RankCell::NotApplicable).unwrap(), "\"n/a\"");
        let v: RankCell = serde_json::from_str("\"45\"").unwrap();
        assert_eq!(v, RankCell::Value(Decimal(BigUint::from(45u32))));
    }
}

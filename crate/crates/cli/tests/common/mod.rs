#![allow(dead_code)]

use std::collections::BTreeMap;
use std::process::Command;

use num_bigint::BigUint;
use proptest::prelude::*;

use nilmult_cli::document::{
    BasisEntry, CommutatorTree, Decimal, OutputDocument, Payload, RankCell, RankDoc, ReportDoc,
    Summand, TableRow,
};

pub const BIN: &str = env!("CARGO_BIN_EXE_nilmult");

pub struct Run {
    pub stdout: Vec<u8>,
    pub stderr: String,
    pub code: i32,
}

pub fn run(args: &[&str]) -> Run {
    let out = Command::new(BIN).args(args).output().expect("binary runs");
    Run {
        stdout: out.stdout,
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
        code: out.status.code().expect("exited normally"),
    }
}

pub fn stdout(args: &[&str]) -> String {
    String::from_utf8(run(args).stdout).unwrap()
}

/// Every example command line documented for the CLI, with its expected exit status.
pub const DOCUMENTED_EXAMPLES: &[(&str, i32)] = &[
    ("chi --weight 6 --generators 2", 0),
    ("chi --weight 1 --generators 7", 0),
    ("chi --weight 2 --generators 9", 0),
    ("basis --generators 2 --max-weight 3", 0),
    ("basis --generators 1 --max-weight 4", 0),
    ("basis --generators 3 --max-weight 2 --format json", 0),
    ("rank polynilpotent --n 1 --c 1 --m 3", 0),
    ("rank nilpotent --n 2 --c 2 --m 2", 0),
    ("rank polynilpotent --n 2 --c 2 --m 2", 2),
    ("verify thm2.6 --n 1 --c 1 --m 3", 0),
    ("verify lemma2.3 --n 1 --c 1 --m 2 --trials 25 --seed 0", 0),
    ("verify lemma2.4 --n 2 --c 2 --m 2", 2),
    ("table polynilpotent --n 1 --c 1 --m 2..5", 0),
    ("table nilpotent --n 1 --c 1..3 --m 2", 0),
    ("table nilpotent --n 1 --c 3..1 --m 2", 0),
];

fn decimal() -> impl Strategy<Value = Decimal> {
    prop::collection::vec(any::<u32>(), 0..4).prop_map(|digits| Decimal(BigUint::new(digits)))
}

fn tree() -> impl Strategy<Value = CommutatorTree> {
    (1u32..6).prop_map(CommutatorTree::Leaf).prop_recursive(4, 16, 2, |inner| {
        (inner.clone(), inner).prop_map(|(l, r)| CommutatorTree::Pair(Box::new(l), Box::new(r)))
    })
}

fn text() -> impl Strategy<Value = String> {
    "[ -~]{0,24}"
}

fn report() -> impl Strategy<Value = ReportDoc> {
    (
        (text(), any::<u32>(), any::<u32>(), any::<u32>()),
        (
            prop::option::of(any::<u32>()),
            prop::option::of(any::<u32>()),
            prop::option::of(any::<u64>()),
        ),
        (text(), any::<u64>(), prop::option::of(text()), prop::option::of(text())),
    )
        .prop_map(
            |((target, n, c, m), (truncation, trials, seed), (status, checked, counterexample, note))| {
                ReportDoc { target, n, c, m, truncation, trials, seed, status, checked, counterexample, note }
            },
        )
}

fn payload() -> impl Strategy<Value = Payload> {
    prop_oneof![
        (any::<u32>(), any::<u64>(), decimal())
            .prop_map(|(weight, generators, value)| Payload::Chi { weight, generators, value }),
        (
            any::<u32>(),
            any::<u32>(),
            prop::collection::vec((any::<usize>(), any::<u32>(), text(), tree()), 0..5),
        )
            .prop_map(|(generators, max_weight, entries)| Payload::Basis {
                generators,
                max_weight,
                entries: entries
                    .into_iter()
                    .map(|(index, weight, commutator, tree)| BasisEntry { index, weight, commutator, tree })
                    .collect(),
            }),
        (
            text(),
            (any::<u32>(), any::<u32>(), any::<u32>()),
            text(),
            decimal(),
            prop::collection::vec((any::<u32>(), decimal()), 0..4),
        )
            .prop_map(|(multiplier, (n, c, m), branch, rank, summands)| {
                Payload::Rank(RankDoc {
                    multiplier,
                    n,
                    c,
                    m,
                    branch,
                    rank,
                    summands: summands.into_iter().map(|(weight, chi)| Summand { weight, chi }).collect(),
                })
            }),
        prop::collection::vec(report(), 0..4).prop_map(|reports| Payload::Verification { reports }),
        (
            text(),
            prop::collection::vec(
                (any::<u32>(), any::<u32>(), any::<u32>(), prop::option::of(decimal()), prop::option::of(text())),
                0..5,
            ),
        )
            .prop_map(|(multiplier, rows)| Payload::Table {
                multiplier,
                rows: rows
                    .into_iter()
                    .map(|(n, c, m, rank, note)| TableRow {
                        n,
                        c,
                        m,
                        rank: rank.map_or(RankCell::NotApplicable, RankCell::Value),
                        note,
                    })
                    .collect(),
            }),
    ]
}

pub fn document() -> impl Strategy<Value = OutputDocument> {
    (text(), prop::collection::btree_map(text(), text(), 0..4), payload()).prop_map(
        |(command, parameters, payload): (String, BTreeMap<String, String>, Payload)| {
            OutputDocument::new(&command, parameters, payload)
        },
    )
}

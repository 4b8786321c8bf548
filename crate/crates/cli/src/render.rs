use std::fmt::Write as _;

use crate::document::{OutputDocument, Payload, ReportDoc};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub fn render(doc: &OutputDocument, format: Format) -> String {
    match format {
        Format::Json => doc.to_json(),
        Format::Text => render_text(&doc.payload),
        Format::Csv => render_csv(&doc.payload),
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(String::new, T::to_string)
}

fn report_line(r: &ReportDoc) -> String {
    let mut line = format!("{} n={} c={} m={}", r.target, r.n, r.c, r.m);
    if let Some(d) = r.truncation {
        let _ = write!(line, " D={d}");
    }
    if let Some(t) = r.trials {
        let _ = write!(line, " trials={t}");
    }
    if let Some(s) = r.seed {
        let _ = write!(line, " seed={s}");
    }
    let _ = write!(line, ": {} ({} checked)", r.status, r.checked);
    if let Some(cx) = &r.counterexample {
        let _ = write!(line, "; counterexample: {cx}");
    }
    if let Some(note) = &r.note {
        let _ = write!(line, "; {note}");
    }
    line
}

fn render_text(payload: &Payload) -> String {
    let mut out = String::new();
    match payload {
        Payload::Chi { value, .. } => {
            let _ = writeln!(out, "{value}");
        }
        Payload::Basis { entries, .. } => {
            for e in entries {
                let _ = writeln!(out, "{}", e.commutator);
            }
        }
        Payload::Rank(r) => {
            let summands = r
                .summands
                .iter()
                .map(|s| format!("chi({},{})={}", s.weight, r.m, s.chi))
                .collect::<Vec<_>>()
                .join(" + ");
            let _ = writeln!(out, "multiplier: {}", r.multiplier);
            let _ = writeln!(out, "n: {}\nc: {}\nm: {}", r.n, r.c, r.m);
            let _ = writeln!(out, "branch: {}", r.branch);
            let _ = writeln!(out, "summands: {summands}");
            let _ = writeln!(out, "rank: {}", r.rank);
        }
        Payload::Verification { reports } => {
            for r in reports {
                let _ = writeln!(out, "{}", report_line(r));
            }
        }
        Payload::Table { rows, .. } => {
            let _ = writeln!(out, "{:>4} {:>4} {:>4}  rank", "n", "c", "m");
            for row in rows {
                let _ = writeln!(out, "{:>4} {:>4} {:>4}  {}", row.n, row.c, row.m, row.rank);
            }
        }
    }
    out
}

fn render_csv(payload: &Payload) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let result = (|| -> csv::Result<()> {
        match payload {
            Payload::Chi { weight, generators, value } => {
                w.write_record(["weight", "generators", "chi"])?;
                w.write_record([weight.to_string(), generators.to_string(), value.to_string()])?;
            }
            Payload::Basis { entries, .. } => {
                w.write_record(["index", "weight", "commutator", "tree"])?;
                for e in entries {
                    w.write_record([
                        e.index.to_string(),
                        e.weight.to_string(),
                        e.commutator.clone(),
                        e.tree.to_string(),
                    ])?;
                }
            }
            Payload::Rank(r) => {
                w.write_record(["multiplier", "n", "c", "m", "branch", "rank"])?;
                w.write_record([
                    r.multiplier.clone(),
                    r.n.to_string(),
                    r.c.to_string(),
                    r.m.to_string(),
                    r.branch.clone(),
                    r.rank.to_string(),
                ])?;
            }
            Payload::Verification { reports } => {
                w.write_record([
                    "target", "n", "c", "m", "truncation", "trials", "seed", "status", "checked",
                    "counterexample", "note",
                ])?;
                for r in reports {
                    w.write_record([
                        r.target.clone(),
                        r.n.to_string(),
                        r.c.to_string(),
                        r.m.to_string(),
                        opt(&r.truncation),
                        opt(&r.trials),
                        opt(&r.seed),
                        r.status.clone(),
                        r.checked.to_string(),
                        opt(&r.counterexample),
                        opt(&r.note),
                    ])?;
                }
            }
            Payload::Table { rows, .. } => {
                w.write_record(["n", "c", "m", "rank"])?;
                for row in rows {
                    w.write_record([
                        row.n.to_string(),
                        row.c.to_string(),
                        row.m.to_string(),
                        row.rank.to_string(),
                    ])?;
                }
            }
        }
        w.flush()?;
        Ok(())
    })();
    result.expect("writing CSV into memory cannot fail");
    String::from_utf8(w.into_inner().expect("flushed")).expect("CSV fields are UTF-8")
}

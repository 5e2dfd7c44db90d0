//! Flat CSV form of [`TableRow`], one line per multiplet.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use super::{Rule, Status, TableRow, Verdict};
use crate::error::{Error, Result};
use crate::spectrum::{IndexRange, LatticePair};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvRow {
    pub n: String,
    pub pairs: String,
    pub lambda: u64,
    pub n_arot: String,
    pub n_srot: String,
    pub n_amir: String,
    pub status: Status,
    pub our_rule: String,
    pub paper_rule: String,
    pub bound_used: String,
}

fn bad(msg: String) -> Error {
    Error::Domain(msg)
}

fn range_str(r: Option<IndexRange>) -> String {
    r.map(|r| r.to_string()).unwrap_or_default()
}

fn parse_range(s: &str) -> Result<Option<IndexRange>> {
    if s.is_empty() {
        return Ok(None);
    }
    let num = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|e| bad(format!("index range {s:?}: {e}")))
    };
    Ok(Some(match s.split_once('-') {
        Some((a, b)) => IndexRange::new(num(a)?, num(b)?),
        None => {
            let v = num(s)?;
            IndexRange::new(v, v)
        }
    }))
}

fn parse_pairs(s: &str) -> Result<Vec<LatticePair>> {
    s.split_whitespace()
        .map(|tok| {
            let inner = tok
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| bad(format!("lattice pair {tok:?}")))?;
            let (p, q) = inner
                .split_once(',')
                .ok_or_else(|| bad(format!("lattice pair {tok:?}")))?;
            let num = |t: &str| {
                t.parse::<u32>()
                    .map_err(|e| bad(format!("lattice pair {tok:?}: {e}")))
            };
            Ok(LatticePair::new(num(p)?, num(q)?))
        })
        .collect()
}

impl From<&TableRow> for CsvRow {
    fn from(row: &TableRow) -> Self {
        let v = &row.verdict;
        Self {
            n: IndexRange::new(v.n_lo, v.n_hi).to_string(),
            pairs: v
                .pairs
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(" "),
            lambda: v.lambda,
            n_arot: range_str(row.n_arot),
            n_srot: range_str(row.n_srot),
            n_amir: range_str(row.n_amir),
            status: v.status,
            our_rule: v.rule.to_string(),
            paper_rule: row.paper_rule.map(|r| r.to_string()).unwrap_or_default(),
            // shortest representation that parses back to the same f64
            bound_used: v.bound_used.map(|b| b.to_string()).unwrap_or_default(),
        }
    }
}

impl TryFrom<CsvRow> for TableRow {
    type Error = Error;

    fn try_from(row: CsvRow) -> Result<Self> {
        let n = parse_range(&row.n)?.ok_or_else(|| bad("empty index range".into()))?;
        let bound_used = if row.bound_used.is_empty() {
            None
        } else {
            Some(
                row.bound_used
                    .parse::<f64>()
                    .map_err(|e| bad(format!("bound {:?}: {e}", row.bound_used)))?,
            )
        };
        let paper_rule = if row.paper_rule.is_empty() {
            None
        } else {
            Some(row.paper_rule.parse::<Rule>()?)
        };
        Ok(TableRow {
            verdict: Verdict {
                n_lo: n.lo,
                n_hi: n.hi,
                lambda: row.lambda,
                pairs: parse_pairs(&row.pairs)?,
                status: row.status,
                rule: row.our_rule.parse()?,
                bound_used,
            },
            n_arot: parse_range(&row.n_arot)?,
            n_srot: parse_range(&row.n_srot)?,
            n_amir: parse_range(&row.n_amir)?,
            paper_rule,
        })
    }
}

pub fn write_csv<W: Write>(rows: &[TableRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(CsvRow::from(row))
            .map_err(|e| bad(format!("csv: {e}")))?;
    }
    w.flush().map_err(|e| bad(format!("csv: {e}")))
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<TableRow>> {
    csv::Reader::from_reader(input)
        .deserialize::<CsvRow>()
        .map(|r| TableRow::try_from(r.map_err(|e| bad(format!("csv: {e}")))?))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_round_trip() {
        let row = TableRow {
            verdict: Verdict {
                n_lo: 23,
                n_hi: 26,
                lambda: 25,
                pairs: vec![
                    LatticePair::new(5, 0),
                    LatticePair::new(4, 3),
                    LatticePair::new(3, 4),
                    LatticePair::new(0, 5),
                ],
                status: Status::NotSharp,
                rule: Rule::ARot,
                bound_used: Some(0.1 + 0.2),
            },
            n_arot: Some(IndexRange::new(11, 14)),
            n_srot: None,
            n_amir: None,
            paper_rule: Some(Rule::ARot),
        };
        let mut buf = Vec::new();
        write_csv(std::slice::from_ref(&row), &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with(
            "n,pairs,lambda,n_arot,n_srot,n_amir,status,our_rule,paper_rule,bound_used\n"
        ));
        assert!(text.contains("23-26,\"(5,0) (4,3) (3,4) (0,5)\",25,11-14,,,NOT_SHARP,AROT,AROT,"));
        assert_eq!(read_csv(buf.as_slice()).unwrap(), vec![row]);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_pairs("(1;2)").is_err());
        assert!(parse_range("a-b").is_err());
    }
}

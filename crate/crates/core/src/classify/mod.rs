//! Per-index Courant-sharpness verdicts.
//!
//! Each index `n` is decided by the first rule of the pipeline that applies:
//! counted witnesses, multiplicity, the symmetry subspace bounds, the closed
//! family formulas, doubling, the two Faber–Krahn bounds, and finally θ
//! sweeps for a handful of two-dimensional eigenspaces. Indices past the
//! global gate are closed without looking at the eigenspace.

mod export;
pub mod published;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    index_gate_rhs, mu_upper_inner_area, mu_upper_max_p, pleijel_gate, strictly_below,
};
use crate::chessboard::{inner_area_upper, inner_area_upper_swapped};
use crate::error::{Error, Result};
use crate::nodal::{
    count_nodal_domains, has_common_zeros, p0_max_count, pp_count, product_count, sweep_theta,
    EigenfunctionParams, SweepOptions, SweepReport, Theta,
};
use crate::spectrum::{
    counting_function, max_p, EigenvalueEntry, IndexRange, LatticePair, Spectrum, SubspaceTag,
};
use crate::symmetry::{
    amir_bound, arot_bound, doubling_bound, is_amir_pure, srot_bound, SymmetryBound,
};

pub use export::{read_csv, write_csv, CsvRow};

/// Indices below this are classified eigenspace by eigenspace.
pub const GATE_INDEX: u32 = 209;
/// Covers every eigenvalue with index below [`GATE_INDEX`].
pub const TABLE_LAMBDA_MAX: u64 = 245;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    CourantSharp,
    NotSharp,
}

/// The rule that decided an index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    #[serde(rename = "DEFINITION_SHARP")]
    DefinitionSharp,
    /// `λ_n = λ_{n−1}`.
    #[serde(rename = "MULTIPLICITY")]
    Multiplicity,
    #[serde(rename = "AROT")]
    ARot,
    #[serde(rename = "SROT")]
    SRot,
    #[serde(rename = "AMIR")]
    AMir,
    #[serde(rename = "P0_FAMILY")]
    P0Family,
    #[serde(rename = "PP_FAMILY")]
    PpFamily,
    #[serde(rename = "DOUBLING")]
    Doubling,
    #[serde(rename = "LEMMA23")]
    MaxP,
    #[serde(rename = "LEMMA22_CHESSBOARD")]
    Chessboard,
    #[serde(rename = "SPECIAL_CASE_21")]
    SpecialCase21,
    #[serde(rename = "SPECIAL_CASE_32")]
    SpecialCase32,
    #[serde(rename = "SPECIAL_CASE_41")]
    SpecialCase41,
    #[serde(rename = "SPECIAL_CASE_63")]
    SpecialCase63,
    #[serde(rename = "SPECIAL_CASE_42")]
    SpecialCase42,
    #[serde(rename = "SPECIAL_CASE_64")]
    SpecialCase64,
    #[serde(rename = "SPECIAL_CASE_84")]
    SpecialCase84,
    #[serde(rename = "SPECIAL_CASE_83")]
    SpecialCase83,
    #[serde(rename = "SPECIAL_CASE_94")]
    SpecialCase94,
    #[serde(rename = "SPECIAL_CASE_104")]
    SpecialCase104,
    #[serde(rename = "PLEIJEL_GATE")]
    IndexGate,
}

const RULE_NAMES: [(Rule, &str); 21] = [
    (Rule::DefinitionSharp, "DEFINITION_SHARP"),
    (Rule::Multiplicity, "MULTIPLICITY"),
    (Rule::ARot, "AROT"),
    (Rule::SRot, "SROT"),
    (Rule::AMir, "AMIR"),
    (Rule::P0Family, "P0_FAMILY"),
    (Rule::PpFamily, "PP_FAMILY"),
    (Rule::Doubling, "DOUBLING"),
    (Rule::MaxP, "LEMMA23"),
    (Rule::Chessboard, "LEMMA22_CHESSBOARD"),
    (Rule::SpecialCase21, "SPECIAL_CASE_21"),
    (Rule::SpecialCase32, "SPECIAL_CASE_32"),
    (Rule::SpecialCase41, "SPECIAL_CASE_41"),
    (Rule::SpecialCase63, "SPECIAL_CASE_63"),
    (Rule::SpecialCase42, "SPECIAL_CASE_42"),
    (Rule::SpecialCase64, "SPECIAL_CASE_64"),
    (Rule::SpecialCase84, "SPECIAL_CASE_84"),
    (Rule::SpecialCase83, "SPECIAL_CASE_83"),
    (Rule::SpecialCase94, "SPECIAL_CASE_94"),
    (Rule::SpecialCase104, "SPECIAL_CASE_104"),
    (Rule::IndexGate, "PLEIJEL_GATE"),
];

/// Eigenspaces that get a dedicated θ sweep, with their rule.
pub const SWEPT_PAIRS: [(u32, u32, Rule); 10] = [
    (2, 1, Rule::SpecialCase21),
    (3, 2, Rule::SpecialCase32),
    (4, 1, Rule::SpecialCase41),
    (6, 3, Rule::SpecialCase63),
    (4, 2, Rule::SpecialCase42),
    (6, 4, Rule::SpecialCase64),
    (8, 4, Rule::SpecialCase84),
    (8, 3, Rule::SpecialCase83),
    (9, 4, Rule::SpecialCase94),
    (10, 4, Rule::SpecialCase104),
];

impl Rule {
    pub fn as_str(self) -> &'static str {
        RULE_NAMES
            .iter()
            .find(|(r, _)| *r == self)
            .map(|(_, s)| *s)
            .expect("every rule is named")
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RULE_NAMES
            .iter()
            .find(|(_, name)| *name == s)
            .map(|(r, _)| *r)
            .ok_or_else(|| Error::Domain(format!("unknown rule {s:?}")))
    }
}

/// The interchangeable middle of the pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stage {
    ARot,
    SRot,
    AMir,
    P0Family,
    PpFamily,
    Doubling,
    MaxP,
    Chessboard,
}

impl Stage {
    pub const DEFAULT_ORDER: [Stage; 8] = [
        Stage::ARot,
        Stage::SRot,
        Stage::AMir,
        Stage::P0Family,
        Stage::PpFamily,
        Stage::Doubling,
        Stage::MaxP,
        Stage::Chessboard,
    ];

    /// Cheapest stages first. Statuses do not depend on the order, so this
    /// is used where only statuses matter.
    pub const COST_ORDER: [Stage; 8] = [
        Stage::ARot,
        Stage::SRot,
        Stage::AMir,
        Stage::P0Family,
        Stage::PpFamily,
        Stage::MaxP,
        Stage::Chessboard,
        Stage::Doubling,
    ];
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Verdict {
    pub n_lo: u32,
    pub n_hi: u32,
    pub lambda: u64,
    pub pairs: Vec<LatticePair>,
    pub status: Status,
    pub rule: Rule,
    /// The count or bound that decided; `None` for multiplicity.
    pub bound_used: Option<f64>,
}

impl Verdict {
    /// `(p, q)` with `p > q` when the eigenspace is spanned by `(p,q)` and `(q,p)`.
    pub fn two_dimensional_pair(&self) -> Option<LatticePair> {
        match self.pairs.as_slice() {
            [a, b] if a.p > a.q && *b == a.swapped() => Some(*a),
            _ => None,
        }
    }
}

/// One eigenvalue multiplet of the classification table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TableRow {
    #[serde(flatten)]
    pub verdict: Verdict,
    pub n_arot: Option<IndexRange>,
    pub n_srot: Option<IndexRange>,
    pub n_amir: Option<IndexRange>,
    /// The rule the published table cites for this row.
    pub paper_rule: Option<Rule>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassifyOptions {
    pub order: Vec<Stage>,
    pub sweep: SweepOptions,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self {
            order: Stage::DEFAULT_ORDER.to_vec(),
            sweep: SweepOptions::default(),
        }
    }
}

/// A counted example of `μ = n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    pub n: u32,
    pub p: u32,
    pub q: u32,
    pub theta: Theta,
}

/// `1`, `cos x`, `cos x cos y`, `cos 2x + cos 2y`, `cos 2x cos 2y`.
pub const WITNESSES: [Witness; 5] = [
    Witness {
        n: 1,
        p: 0,
        q: 0,
        theta: Theta::ZERO,
    },
    Witness {
        n: 2,
        p: 1,
        q: 0,
        theta: Theta::ZERO,
    },
    Witness {
        n: 4,
        p: 1,
        q: 1,
        theta: Theta::ZERO,
    },
    Witness {
        n: 5,
        p: 2,
        q: 0,
        theta: Theta::QUARTER_PI,
    },
    Witness {
        n: 9,
        p: 2,
        q: 2,
        theta: Theta::ZERO,
    },
];

/// Counts the witness on the grid.
pub fn witness_count(w: &Witness) -> Result<u32> {
    let res = 64 * w.p.max(w.q).max(1);
    let r = count_nodal_domains(&EigenfunctionParams::new(w.p, w.q, w.theta), res)?;
    if !r.certified {
        return Err(Error::Undecided(format!(
            "witness count for n={} not certified",
            w.n
        )));
    }
    Ok(r.count)
}

/// The multiplet containing index `n`, for any `n ≥ 1`.
pub fn entry_for_index(n: u32) -> Result<EigenvalueEntry> {
    if n == 0 {
        return Err(Error::Domain("indices start at 1".into()));
    }
    // λ_n is the largest integer m with N(m) < n
    let (mut lo, mut hi) = (0u64, 2 * n as u64 + 16);
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        if counting_function(mid as f64) < n as u64 {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    let lambda = lo;
    let mut pairs = Vec::new();
    let mut p = 0u64;
    while p * p <= lambda {
        let q = num_integer::Roots::sqrt(&(lambda - p * p));
        if p * p + q * q == lambda {
            pairs.push(LatticePair::new(p as u32, q as u32));
        }
        p += 1;
    }
    pairs.sort_by_key(|pair| std::cmp::Reverse(pair.p));
    Ok(EigenvalueEntry {
        lambda,
        pairs,
        n_lo: counting_function(lambda as f64) as u32 + 1,
        n_hi: counting_function(lambda as f64 + 1.0) as u32,
    })
}

type Decision = Option<(Rule, Option<f64>)>;

/// The pipeline with its spectrum and a cache of θ sweeps.
pub struct Classifier {
    opts: ClassifyOptions,
    spectrum: Spectrum,
    sweeps: Mutex<HashMap<(u32, u32), Arc<SweepReport>>>,
}

impl Default for Classifier {
    fn default() -> Self {
        Self::new(ClassifyOptions::default())
    }
}

impl Classifier {
    pub fn new(opts: ClassifyOptions) -> Self {
        Self {
            opts,
            spectrum: Spectrum::new(TABLE_LAMBDA_MAX),
            sweeps: Mutex::new(HashMap::new()),
        }
    }

    pub fn options(&self) -> &ClassifyOptions {
        &self.opts
    }

    /// A certified, self-consistent sweep of `(p, q)`, cached.
    pub fn sweep(&self, p: u32, q: u32) -> Result<Arc<SweepReport>> {
        if let Some(r) = self
            .sweeps
            .lock()
            .expect("sweep cache poisoned")
            .get(&(p, q))
        {
            return Ok(Arc::clone(r));
        }
        let report = Arc::new(sweep_theta(p, q, &self.opts.sweep)?);
        self.sweeps
            .lock()
            .expect("sweep cache poisoned")
            .insert((p, q), Arc::clone(&report));
        Ok(report)
    }

    /// Every sweep run so far.
    pub fn sweeps_run(&self) -> Vec<Arc<SweepReport>> {
        let mut v: Vec<_> = self
            .sweeps
            .lock()
            .expect("sweep cache poisoned")
            .values()
            .cloned()
            .collect();
        v.sort_by_key(|r| (r.p, r.q));
        v
    }

    fn entry(&self, n: u32) -> Result<EigenvalueEntry> {
        match self.spectrum.entry_for_index(n) {
            Some(e) => Ok(e.clone()),
            None => entry_for_index(n),
        }
    }

    pub fn classify(&self, n: u32) -> Result<Verdict> {
        let entry = self.entry(n)?;
        let verdict = |status, rule, bound_used| Verdict {
            n_lo: entry.n_lo,
            n_hi: entry.n_hi,
            lambda: entry.lambda,
            pairs: entry.pairs.clone(),
            status,
            rule,
            bound_used,
        };
        if n >= GATE_INDEX {
            if pleijel_gate(n) {
                return Err(Error::Undecided(format!("index gate passes at n={n}")));
            }
            return Ok(verdict(
                Status::NotSharp,
                Rule::IndexGate,
                Some(index_gate_rhs(n)),
            ));
        }
        if let Some(w) = WITNESSES.iter().find(|w| w.n == n) {
            let lambda = (w.p * w.p + w.q * w.q) as u64;
            if lambda == entry.lambda && n == entry.n_lo {
                let mu = witness_count(w)?;
                if mu == n {
                    return Ok(verdict(
                        Status::CourantSharp,
                        Rule::DefinitionSharp,
                        Some(mu as f64),
                    ));
                }
            }
        }
        if n > entry.n_lo {
            return Ok(verdict(Status::NotSharp, Rule::Multiplicity, None));
        }
        for stage in &self.opts.order {
            if let Some((rule, bound)) = self.run_stage(*stage, n, &entry)? {
                return Ok(verdict(Status::NotSharp, rule, bound));
            }
        }
        if let Some((rule, bound)) = self.special_case(n, &entry)? {
            return Ok(verdict(Status::NotSharp, rule, bound));
        }
        Err(Error::Undecided(format!(
            "no rule decides n={n} (lambda={})",
            entry.lambda
        )))
    }

    fn run_stage(&self, stage: Stage, n: u32, e: &EigenvalueEntry) -> Result<Decision> {
        let sym = |b: Result<SymmetryBound>, rule| match b {
            Ok(b) if b.excludes(n) => Some((rule, Some(b.mu_cap as f64))),
            _ => None,
        };
        let lambda = e.lambda;
        Ok(match stage {
            Stage::ARot if lambda % 2 == 1 => sym(arot_bound(lambda), Rule::ARot),
            Stage::SRot if lambda.is_multiple_of(2) && lambda > 0 => {
                sym(srot_bound(lambda), Rule::SRot)
            }
            Stage::AMir if is_amir_pure(lambda) => sym(amir_bound(lambda), Rule::AMir),
            Stage::P0Family => match e.pairs.as_slice() {
                [a, b] if a.p > 0 && a.q == 0 && *b == a.swapped() => {
                    let max = p0_max_count(a.p);
                    (max < n).then_some((Rule::P0Family, Some(max as f64)))
                }
                _ => None,
            },
            Stage::PpFamily => match e.pairs.as_slice() {
                [a] if a.p == a.q => {
                    let mu = pp_count(a.p);
                    (mu != n).then_some((Rule::PpFamily, Some(mu as f64)))
                }
                _ => None,
            },
            Stage::Doubling => match e.two_dimensional_pair() {
                Some(a) if a.p % 2 == 0 && a.q % 2 == 0 => {
                    // no zeros assumed on the far sides: the weakest cap
                    let cheap = doubling_bound(self.eigenspace_cap(lambda / 4)?, 0, 0, false)?;
                    if cheap < n {
                        return Ok(Some((Rule::Doubling, Some(cheap as f64))));
                    }
                    let half = self.sweep(a.p / 2, a.q / 2)?;
                    if !half.all_certified() || !half.consistent {
                        None
                    } else {
                        let cap = doubling_bound(half.max_count, 0, 0, false)?;
                        (cap < n).then_some((Rule::Doubling, Some(cap as f64)))
                    }
                }
                _ => None,
            },
            Stage::MaxP => {
                let bound = mu_upper_max_p(lambda, max_p(e));
                match strictly_below(bound, n as f64) {
                    Ok(true) => Some((Rule::MaxP, Some(bound))),
                    _ => None,
                }
            }
            Stage::Chessboard => match e.two_dimensional_pair() {
                Some(a) if a.q >= 1 && !has_common_zeros(a.p, a.q) => {
                    let bound = chessboard_bound(a.p, a.q, lambda)?;
                    match strictly_below(bound, n as f64) {
                        Ok(true) => Some((Rule::Chessboard, Some(bound))),
                        _ => None,
                    }
                }
                _ => None,
            },
            _ => None,
        })
    }

    /// A sweep-free upper bound on `μ` over the eigenspace of `lambda`: its
    /// lowest index, or a smaller subspace cap.
    fn eigenspace_cap(&self, lambda: u64) -> Result<u32> {
        let e = self
            .spectrum
            .entry_for_lambda(lambda)
            .ok_or_else(|| Error::Domain(format!("{lambda} is not an eigenvalue")))?;
        let caps = [
            (lambda % 2 == 1).then(|| arot_bound(lambda)),
            (lambda.is_multiple_of(2) && lambda > 0).then(|| srot_bound(lambda)),
            is_amir_pure(lambda).then(|| amir_bound(lambda)),
        ];
        let mut cap = e.n_lo;
        for b in caps.into_iter().flatten() {
            cap = cap.min(b?.mu_cap);
        }
        Ok(cap)
    }

    fn special_case(&self, n: u32, e: &EigenvalueEntry) -> Result<Decision> {
        let Some(a) = e.two_dimensional_pair() else {
            return Ok(None);
        };
        let Some(&(_, _, rule)) = SWEPT_PAIRS.iter().find(|(p, q, _)| (*p, *q) == (a.p, a.q))
        else {
            return Ok(None);
        };
        let sweep = self.sweep(a.p, a.q)?;
        if !sweep.all_certified() || !sweep.consistent {
            return Ok(None);
        }
        Ok((sweep.max_count < n).then_some((rule, Some(sweep.max_count as f64))))
    }

    /// One row per multiplet with `n_lo ≤ n_max`.
    pub fn generate_table(&self, n_max: u32) -> Result<Vec<TableRow>> {
        let entries: Vec<EigenvalueEntry> = if n_max < GATE_INDEX {
            self.spectrum
                .entries()
                .iter()
                .filter(|e| e.n_lo <= n_max)
                .cloned()
                .collect()
        } else {
            let mut v = Vec::new();
            let mut n = 1;
            while n <= n_max {
                let e = self.entry(n)?;
                n = e.n_hi + 1;
                v.push(e);
            }
            v
        };
        let lambda_max = entries.last().map_or(0, |e| e.lambda);
        let wide;
        let spectrum = if lambda_max <= self.spectrum.lambda_max() {
            &self.spectrum
        } else {
            wide = Spectrum::new(lambda_max);
            &wide
        };
        entries
            .par_iter()
            .map(|e| {
                let verdict = self.classify(e.n_lo)?;
                let lambda = e.lambda;
                let n_arot = (lambda % 2 == 1)
                    .then(|| spectrum.subspace_range(lambda, SubspaceTag::ARot))
                    .flatten();
                let n_srot = (lambda % 2 == 0)
                    .then(|| spectrum.subspace_range(lambda, SubspaceTag::SRot))
                    .flatten();
                let n_amir = is_amir_pure(lambda)
                    .then(|| spectrum.subspace_range(lambda, SubspaceTag::AMir))
                    .flatten();
                let paper_rule = published::PUBLISHED
                    .iter()
                    .find(|r| r.lambda == lambda)
                    .map(|r| r.rule);
                Ok(TableRow {
                    verdict,
                    n_arot,
                    n_srot,
                    n_amir,
                    paper_rule,
                })
            })
            .collect()
    }

    /// Indices below the gate whose verdict is Courant sharp.
    pub fn courant_sharp_set(&self) -> Result<BTreeSet<u32>> {
        Ok(self
            .generate_table(GATE_INDEX - 1)?
            .into_iter()
            .filter(|r| r.verdict.status == Status::CourantSharp)
            .map(|r| r.verdict.n_lo)
            .collect())
    }
}

/// Largest of the inner-area bound over both chessboard colourings and the
/// product count at `θ ∈ {0, π/2}`.
pub fn chessboard_bound(p: u32, q: u32, lambda: u64) -> Result<f64> {
    let frac: Ratio<i64> = inner_area_upper(p, q)?.max(inner_area_upper_swapped(p, q)?);
    Ok(mu_upper_inner_area(lambda, frac)?.max(product_count(p, q) as f64))
}

pub fn classify(n: u32) -> Result<Verdict> {
    Classifier::default().classify(n)
}

pub fn generate_table(n_max: u32) -> Result<Vec<TableRow>> {
    Classifier::default().generate_table(n_max)
}

/// `{1, 2, 4, 5, 9}`, recomputed with the stages in [`Stage::COST_ORDER`].
pub fn courant_sharp_set() -> Result<BTreeSet<u32>> {
    Classifier::new(ClassifyOptions {
        order: Stage::COST_ORDER.to_vec(),
        ..ClassifyOptions::default()
    })
    .courant_sharp_set()
}

//! Nodal counts along the one-parameter family `θ ↦ Φ^θ_{p,q}`.

use std::f64::consts::{FRAC_PI_4, PI};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::critical::{critical_inventory, CriticalInventory};
use super::grid::{count_with_options, CountOptions};
use super::{EigenfunctionParams, Theta, ThetaTag};
use crate::error::{domain, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepOptions {
    /// Uniform samples added as a cross-check of the interval counts.
    pub samples: u32,
    /// Grid resolution; `None` means `64 · max(p, q, 1)`.
    pub resolution: Option<u32>,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            samples: 16,
            resolution: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum PointKind {
    /// A critical θ.
    Critical,
    /// Midpoint of an interval between consecutive critical θ.
    Interval,
    /// Uniform cross-check sample.
    Sample,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepPoint {
    pub theta: f64,
    pub theta_tag: Option<ThetaTag>,
    pub kind: PointKind,
    pub count: u32,
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepReport {
    pub p: u32,
    pub q: u32,
    /// The sweep covers `[0, domain_end]` (`π/4`) or `[0, domain_end)` (`π`).
    pub domain_end: f64,
    pub critical_thetas: Vec<f64>,
    /// Sorted by θ.
    pub points: Vec<SweepPoint>,
    pub max_count: u32,
    pub argmax_theta: f64,
    pub min_count: u32,
    /// Critical θ at which the count differs from a neighbouring interval.
    pub transitions: Vec<f64>,
    /// Every uniform sample agrees with the interval containing it.
    pub consistent: bool,
}

impl SweepReport {
    /// The count at (or nearest to) `theta` among critical and interval points.
    pub fn count_near(&self, theta: f64) -> Option<u32> {
        self.points
            .iter()
            .filter(|pt| pt.kind != PointKind::Sample)
            .min_by(|a, b| (a.theta - theta).abs().total_cmp(&(b.theta - theta).abs()))
            .map(|pt| pt.count)
    }

    pub fn all_certified(&self) -> bool {
        self.points.iter().all(|pt| pt.certified)
    }
}

fn theta_of(v: f64) -> Theta {
    Theta::new(v).expect("sweep angles lie in [0, π)")
}

fn tagged_or(v: f64) -> Theta {
    ThetaTag::ALL
        .into_iter()
        .find(|t| (t.value() - v).abs() < 1e-12)
        .map(Theta::tagged)
        .unwrap_or_else(|| theta_of(v))
}

/// Counts at every critical θ of the fundamental domain, at the midpoints
/// between them, and at `samples` uniform points.
///
/// For `p + q` odd the domain is `[0, π/4]`; otherwise the whole `[0, π)`.
pub fn sweep_theta(p: u32, q: u32, opts: &SweepOptions) -> Result<SweepReport> {
    if opts.samples < 16 {
        return domain(format!(
            "sweep needs at least 16 samples, got {}",
            opts.samples
        ));
    }
    if p == q {
        return domain("the eigenspace of (p,p) is one-dimensional");
    }
    let inv: CriticalInventory = critical_inventory(p, q);
    let odd = (p + q) % 2 == 1;
    let end = if odd { FRAC_PI_4 } else { PI };
    let crit: Vec<f64> = inv
        .theta_values(1e-10)
        .into_iter()
        .filter(|&t| {
            if odd {
                t <= end + 1e-12
            } else {
                t < end - 1e-12
            }
        })
        .collect();

    let mut jobs: Vec<(Theta, PointKind)> = crit
        .iter()
        .map(|&t| (tagged_or(t), PointKind::Critical))
        .collect();
    for w in crit.windows(2) {
        jobs.push((theta_of(0.5 * (w[0] + w[1])), PointKind::Interval));
    }
    if !odd {
        let last = *crit.last().expect("0 is always critical");
        jobs.push((theta_of(0.5 * (last + PI)), PointKind::Interval));
    }
    let n = opts.samples;
    for k in 0..n {
        // open grid, so samples avoid the special angles
        let t = end * (k as f64 + 0.5) / n as f64;
        jobs.push((theta_of(t), PointKind::Sample));
    }

    let count_opts = match opts.resolution {
        Some(r) => CountOptions::new(r),
        None => CountOptions::default_for(p, q),
    };
    let mut points = jobs
        .par_iter()
        .map(|&(theta, kind)| {
            let r = count_with_options(
                &EigenfunctionParams::new(p, q, theta),
                &count_opts,
                Some(&inv),
            )?;
            Ok(SweepPoint {
                theta: theta.value(),
                theta_tag: theta.tag(),
                kind,
                count: r.count,
                certified: r.certified,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    points.sort_by(|a, b| {
        a.theta
            .total_cmp(&b.theta)
            .then((a.kind as u8).cmp(&(b.kind as u8)))
    });

    let structural: Vec<&SweepPoint> = points
        .iter()
        .filter(|pt| pt.kind != PointKind::Sample)
        .collect();
    let (max_pt, min_count) =
        structural
            .iter()
            .fold((structural[0], u32::MAX), |(best, lo), pt| {
                (
                    if pt.count > best.count { pt } else { best },
                    lo.min(pt.count),
                )
            });

    let mut transitions = Vec::new();
    for (i, pt) in structural.iter().enumerate() {
        if pt.kind != PointKind::Critical {
            continue;
        }
        let left = i.checked_sub(1).map(|j| structural[j].count);
        let right = structural.get(i + 1).map(|s| s.count);
        let differs = [left, right].iter().flatten().any(|&c| c != pt.count)
            || (left.is_some() && right.is_some() && left != right);
        if differs {
            transitions.push(pt.theta);
        }
    }

    let interval_count = |t: f64| -> Option<u32> {
        let pos = crit.partition_point(|&c| c < t);
        if pos == 0 || (pos < crit.len() && (crit[pos] - t).abs() < 1e-12) {
            return None;
        }
        let (lo, hi) = (crit[pos - 1], crit.get(pos).copied().unwrap_or(PI));
        let mid = 0.5 * (lo + hi);
        structural
            .iter()
            .find(|s| s.kind == PointKind::Interval && (s.theta - mid).abs() < 1e-12)
            .map(|s| s.count)
    };
    let consistent = points
        .iter()
        .filter(|pt| pt.kind == PointKind::Sample && pt.certified)
        .all(|pt| interval_count(pt.theta).is_none_or(|c| c == pt.count));

    Ok(SweepReport {
        p,
        q,
        domain_end: end,
        max_count: max_pt.count,
        argmax_theta: max_pt.theta,
        min_count,
        critical_thetas: crit,
        points,
        transitions,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_one_profile() {
        let r = sweep_theta(2, 1, &SweepOptions::default()).unwrap();
        assert_eq!(r.max_count, 6);
        assert_eq!(r.argmax_theta, 0.0);
        assert_eq!(r.min_count, 4);
        assert!(r.consistent && r.all_certified());
    }

    #[test]
    fn four_one_profile() {
        let r = sweep_theta(4, 1, &SweepOptions::default()).unwrap();
        assert_eq!(r.count_near(0.0), Some(10));
        assert_eq!(r.count_near(0.3), Some(6));
        assert_eq!(r.count_near(0.7), Some(8));
        assert_eq!(r.count_near(FRAC_PI_4), Some(10));
        assert!(
            r.transitions.iter().any(|t| (t - 0.60).abs() < 0.02),
            "{:?}",
            r.transitions
        );
        assert!(r.consistent);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(sweep_theta(
            2,
            1,
            &SweepOptions {
                samples: 4,
                resolution: None
            }
        )
        .is_err());
        assert!(sweep_theta(3, 3, &SweepOptions::default()).is_err());
    }
}

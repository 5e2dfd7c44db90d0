//! Values of θ where the nodal pattern of `Φ^θ_{p,q}` can change.
//!
//! The count is locally constant in θ unless the zero set acquires an
//! interior critical point or a boundary zero appears, disappears, or passes
//! through a corner. Interior critical points sit on pairs of roots of the
//! tangent equation; boundary zeros of a side solve `f_{p,q}(s) = const(θ)`,
//! whose solution count changes only at critical values of `f_{p,q}`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use serde::{Deserialize, Serialize};

use super::chebyshev::{f_ratio, has_common_zeros};
use super::roots::{solve_tangent_equation, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CriticalKind {
    Boundary,
    Interior,
    Corner,
}

/// An interior point where `Φ^θ`, `∂ₓΦ^θ` and `∂ᵧΦ^θ` vanish together.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalPoint {
    pub x: f64,
    pub y: f64,
    pub theta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriticalTheta {
    pub theta: f64,
    pub kind: CriticalKind,
    /// Where the degeneracy happens.
    pub witnesses: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CriticalInventory {
    pub p: u32,
    pub q: u32,
    pub tangent_roots: Vec<f64>,
    /// Sorted by θ, then kind.
    pub critical_thetas: Vec<CriticalTheta>,
}

/// The angle in `[0, π)` solving `A cos θ + B sin θ = 0`.
fn theta_from_line(a: f64, b: f64) -> Option<f64> {
    if a == 0.0 && b == 0.0 {
        return None;
    }
    let t = a.atan2(-b).rem_euclid(PI);
    Some(if t >= PI - 1e-15 { 0.0 } else { t })
}

fn tangent_roots(p: u32, q: u32) -> Vec<f64> {
    if p == q {
        return Vec::new();
    }
    solve_tangent_equation(p, q).unwrap_or_default()
}

/// All interior critical points over `θ ∈ [0, π)`, one per ordered pair of
/// critical points of the regularised `f`.
///
/// Away from shared cosine zeros these are the pairs of tangent roots. When
/// `cos px` and `cos qx` share zeros, `Φ = cos qx cos qy (cos θ f(x) + sin θ f(y))`
/// (for `p > q`), and the shared zeros are critical points of `f` as well.
pub fn interior_critical_points(p: u32, q: u32) -> Vec<CriticalPoint> {
    if p == q {
        return Vec::new();
    }
    let roots = tangent_roots(p, q);
    let (big, small) = (p.max(q), p.min(q));
    let xs = f_critical_points(big, small);
    let is_root = |t: f64| roots.iter().any(|r| (r - t).abs() < 1e-12);
    let (pf, qf) = (p as f64, q as f64);
    let mut out = Vec::new();
    for &x in &xs {
        for &y in &xs {
            // Φ(x,y) = 0 ⇔ cos θ · A + sin θ · B = 0
            let (a, b) = if is_root(x) && is_root(y) {
                (
                    (pf * x).cos() * (qf * y).cos(),
                    (qf * x).cos() * (pf * y).cos(),
                )
            } else {
                let (Some(fx), Some(fy)) = (
                    f_ratio(big, small, x).value(),
                    f_ratio(big, small, y).value(),
                ) else {
                    continue;
                };
                if p > q {
                    (fx, fy)
                } else {
                    (fy, fx)
                }
            };
            if let Some(theta) = theta_from_line(a, b) {
                out.push(CriticalPoint { x, y, theta });
            }
        }
    }
    out
}

/// Points where the regularised `f_{p,q}` has a critical point: tangent roots
/// and shared cosine zeros.
fn f_critical_points(p: u32, q: u32) -> Vec<f64> {
    let mut xs = tangent_roots(p, q);
    if has_common_zeros(p, q) && p != q {
        let g = num_integer::gcd(p, q);
        xs.extend((0..g).map(|k| (k as f64 + 0.5) * PI / g as f64));
        xs.sort_by(f64::total_cmp);
    }
    xs
}

/// θ values where a side acquires a double zero.
pub fn boundary_critical_thetas(p: u32, q: u32) -> Vec<CriticalTheta> {
    let parity = if (p + q).is_multiple_of(2) { 1.0 } else { -1.0 };
    let (big, small) = (p.max(q), p.min(q));
    let mut out = Vec::new();
    for s in f_critical_points(big, small) {
        let Some(v) = f_ratio(big, small, s).value() else {
            continue;
        };
        // along a side Φ ∝ cos(small·s)·(α + β f(s)); the roles of cos θ and
        // sin θ swap when p < q
        for side in Side::ALL {
            let (a, b) = match side {
                Side::X0 => (1.0, v),
                Side::XPi => (1.0, parity * v),
                Side::Y0 => (v, 1.0),
                Side::YPi => (parity * v, 1.0),
            };
            let (a, b) = if p >= q { (a, b) } else { (b, a) };
            if let Some(theta) = theta_from_line(a, b) {
                let (x, y) = side.point(s);
                out.push(CriticalTheta {
                    theta,
                    kind: CriticalKind::Boundary,
                    witnesses: vec![[x, y]],
                });
            }
        }
    }
    out
}

/// θ values where `Φ` vanishes at a corner.
fn corner_thetas(p: u32, q: u32) -> Vec<CriticalTheta> {
    let sp = if p.is_multiple_of(2) { 1.0 } else { -1.0 };
    let sq = if q.is_multiple_of(2) { 1.0 } else { -1.0 };
    [
        ((0.0, 0.0), 1.0, 1.0),
        ((PI, 0.0), sp, sq),
        ((0.0, PI), sq, sp),
        ((PI, PI), sp * sq, sp * sq),
    ]
    .into_iter()
    .filter_map(|((x, y), a, b)| {
        theta_from_line(a, b).map(|theta| CriticalTheta {
            theta,
            kind: CriticalKind::Corner,
            witnesses: vec![[x, y]],
        })
    })
    .collect()
}

fn merge(mut list: Vec<CriticalTheta>) -> Vec<CriticalTheta> {
    list.sort_by(|a, b| a.theta.total_cmp(&b.theta).then(a.kind.cmp(&b.kind)));
    let mut out: Vec<CriticalTheta> = Vec::new();
    for item in list {
        match out.last_mut() {
            Some(last) if last.kind == item.kind && (last.theta - item.theta).abs() < 1e-10 => {
                last.witnesses.extend(item.witnesses);
            }
            _ => out.push(item),
        }
    }
    out
}

pub fn critical_inventory(p: u32, q: u32) -> CriticalInventory {
    let mut all = boundary_critical_thetas(p, q);
    for cp in interior_critical_points(p, q) {
        all.push(CriticalTheta {
            theta: cp.theta,
            kind: CriticalKind::Interior,
            witnesses: vec![[cp.x, cp.y]],
        });
    }
    all.extend(corner_thetas(p, q));
    CriticalInventory {
        p,
        q,
        tangent_roots: tangent_roots(p, q),
        critical_thetas: merge(all),
    }
}

impl CriticalInventory {
    /// Witness points (interior and boundary) of critical θ within `tol` of `theta`.
    pub fn points_at(&self, theta: f64, tol: f64) -> Vec<[f64; 2]> {
        self.critical_thetas
            .iter()
            .filter(|c| angle_distance(c.theta, theta) <= tol)
            .flat_map(|c| c.witnesses.iter().copied())
            .collect()
    }

    /// Distinct critical θ values, sorted, merged within `tol`.
    pub fn theta_values(&self, tol: f64) -> Vec<f64> {
        let mut vals: Vec<f64> = self.critical_thetas.iter().map(|c| c.theta).collect();
        vals.extend([0.0, FRAC_PI_4, FRAC_PI_2, 3.0 * FRAC_PI_4]);
        vals.sort_by(f64::total_cmp);
        vals.dedup_by(|a, b| (*a - *b).abs() <= tol);
        vals
    }
}

/// Distance between two angles modulo π.
pub fn angle_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(PI);
    d.min(PI - d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nodal::{eval_phi, EigenfunctionParams, Theta};

    fn gradient(p: u32, q: u32, theta: f64, x: f64, y: f64) -> (f64, f64, f64) {
        let (c, s) = (theta.cos(), theta.sin());
        let (pf, qf) = (p as f64, q as f64);
        let phi = eval_phi(
            &EigenfunctionParams::new(p, q, Theta::new(theta).unwrap()),
            x,
            y,
        );
        let dx =
            -pf * c * (pf * x).sin() * (qf * y).cos() - qf * s * (qf * x).sin() * (pf * y).cos();
        let dy =
            -qf * c * (pf * x).cos() * (qf * y).sin() - pf * s * (qf * x).cos() * (pf * y).sin();
        (phi, dx, dy)
    }

    #[test]
    fn two_one_has_none() {
        assert!(interior_critical_points(2, 1).is_empty());
    }

    #[test]
    fn four_one_only_quarter_pi() {
        let pts = interior_critical_points(4, 1);
        assert!(!pts.is_empty());
        for cp in &pts {
            let t = cp.theta.min(PI - cp.theta);
            // θ and its image π − θ under the reflection both show up
            assert!(
                (cp.theta - FRAC_PI_4).abs() < 1e-9 || (cp.theta - 3.0 * FRAC_PI_4).abs() < 1e-9,
                "{cp:?} {t}"
            );
        }
        let at_quarter: Vec<_> = pts
            .iter()
            .filter(|c| (c.theta - FRAC_PI_4).abs() < 1e-9)
            .collect();
        assert_eq!(at_quarter.len(), 2);
        let x1 = (2.0 * 10f64.sqrt() - 5.0).sqrt().atan();
        for cp in at_quarter {
            assert!((cp.x + cp.y - PI).abs() < 1e-9);
            assert!((cp.x - x1).abs() < 1e-9 || (cp.y - x1).abs() < 1e-9);
        }
    }

    #[test]
    fn critical_points_are_stationary() {
        for (p, q) in [(4u32, 1u32), (5, 2), (8, 3), (6, 4), (3, 1)] {
            for cp in interior_critical_points(p, q) {
                let (phi, dx, dy) = gradient(p, q, cp.theta, cp.x, cp.y);
                assert!(
                    phi.abs() < 1e-8 && dx.abs() < 1e-7 && dy.abs() < 1e-7,
                    "({p},{q}) {cp:?}"
                );
            }
        }
    }

    #[test]
    fn eight_three_theta13() {
        let pts = interior_critical_points(8, 3);
        let hit = pts
            .iter()
            .any(|c| (c.theta - 0.61).abs() < 0.01 && (c.theta.tan() - 0.705).abs() < 0.01);
        assert!(hit, "{pts:?}");
    }

    #[test]
    fn boundary_thetas_four_one() {
        let crit = boundary_critical_thetas(4, 1);
        assert!(
            crit.iter().any(|c| (c.theta - 0.60).abs() < 0.02),
            "{crit:?}"
        );
    }

    #[test]
    fn boundary_thetas_are_double_zeros() {
        for (p, q) in [(4u32, 1u32), (5, 2), (8, 3), (2, 5)] {
            for c in boundary_critical_thetas(p, q) {
                let [x, y] = c.witnesses[0];
                let (phi, dx, dy) = gradient(p, q, c.theta, x, y);
                // tangential derivative vanishes along the side
                let along = if x == 0.0 || x == PI { dy } else { dx };
                assert!(phi.abs() < 1e-9 && along.abs() < 1e-7, "({p},{q}) {c:?}");
            }
        }
    }

    #[test]
    fn corner_values() {
        let thetas: Vec<f64> = corner_thetas(2, 1).iter().map(|c| c.theta).collect();
        assert!(thetas.iter().any(|t| (t - FRAC_PI_4).abs() < 1e-15));
        assert!(thetas.iter().any(|t| (t - 3.0 * FRAC_PI_4).abs() < 1e-15));
    }
}

//! Nodal-domain counting on a uniform sign grid.
//!
//! The square is split into `n × n` cells and `Φ` is sampled at the cell
//! centres `((i+½)h, (j+½)h)`. Two 4-adjacent cells with the same sign are
//! joined only if `Φ` keeps that sign at the nine interior points of the
//! tenth-subdivision of their shared edge. All samples lie on a lattice of
//! spacing `h/10`, so `cos p·` and `cos q·` are tabulated once per axis and
//! each sample costs two products.
//!
//! Cells whose centre value is numerically zero separate their neighbours;
//! this is what splits domains along exact nodal lines such as the
//! anti-diagonal at `θ = π/4`. At a critical θ the known degenerate points
//! are cut out with a small disk of zero cells, so an X-shaped crossing is
//! not bridged by a single cell.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::critical::{critical_inventory, CriticalInventory, CriticalKind};
use super::roots::{boundary_zeros, Side};
use super::{eval_phi, product_count, EigenfunctionParams, ThetaTag};
use crate::error::{domain, Result};
use crate::union_find::UnionFind;

/// Subdivisions of a cell side in the sampling lattice.
const SUB: usize = 10;
/// Largest grid the certifier will build.
pub const MAX_RESOLUTION: u32 = 8192;
const CENTER_ZERO: f64 = 1e-10;
const EDGE_ZERO: f64 = 1e-12;
/// Match between a requested θ and a known critical θ.
pub const CRITICAL_MATCH: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CountOptions {
    pub resolution: u32,
    /// Resolution doublings allowed while looking for two agreeing counts.
    pub max_doublings: u32,
    /// Cut out known critical points when θ is critical.
    pub excise: bool,
    /// Cell radius of the excised disks.
    pub excision_radius: f64,
}

impl CountOptions {
    pub fn new(resolution: u32) -> Self {
        Self {
            resolution,
            max_doublings: 4,
            excise: true,
            excision_radius: 1.5,
        }
    }

    /// `64 · max(p, q, 1)` cells per side.
    pub fn default_for(p: u32, q: u32) -> Self {
        Self::new(64 * p.max(q).max(1))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct NodalReport {
    pub p: u32,
    pub q: u32,
    pub theta: f64,
    pub theta_tag: Option<ThetaTag>,
    pub count: u32,
    pub certified: bool,
    /// Grid resolution of the reported count.
    pub resolution: u32,
    /// Zeros on the open sides `x = 0`, `x = π`, `y = 0`, `y = π`.
    pub boundary_touches: [u32; 4],
    /// `Φ` vanishes at `(0,0)`, `(π,0)`, `(0,π)`, `(π,π)`.
    pub corner_hits: [bool; 4],
    /// Interior critical points `[x, y, θ]` of the zero set at this θ.
    pub critical_points: Vec<[f64; 3]>,
}

/// `cos(k · a π / m)` for `a = 0..=m`, reduced exactly in integers so that
/// symmetric arguments give bitwise symmetric values.
fn cos_table(k: u32, m: usize) -> Vec<f64> {
    let (k, m) = (k as u64, m as u64);
    (0..=m)
        .map(|a| {
            let mut r = (k * a) % (2 * m);
            if r > m {
                r = 2 * m - r;
            }
            // angle rπ/m in [0, π]
            if 2 * r == m {
                0.0
            } else if 2 * r > m {
                -((m - r) as f64 * std::f64::consts::PI / m as f64).cos()
            } else {
                (r as f64 * std::f64::consts::PI / m as f64).cos()
            }
        })
        .collect()
}

struct Lattice {
    cp: Vec<f64>,
    cq: Vec<f64>,
    c: f64,
    s: f64,
}

impl Lattice {
    fn new(params: &EigenfunctionParams, n: usize) -> Self {
        let (c, s) = params.theta.cos_sin();
        Self {
            cp: cos_table(params.p, SUB * n),
            cq: cos_table(params.q, SUB * n),
            c,
            s,
        }
    }

    #[inline]
    fn phi(&self, a: usize, b: usize) -> f64 {
        self.c * self.cp[a] * self.cq[b] + self.s * self.cq[a] * self.cp[b]
    }
}

/// Connected components of the nonzero cells at one resolution.
fn count_once(params: &EigenfunctionParams, n: usize, excised: &[[f64; 2]], radius: f64) -> u32 {
    let lat = Lattice::new(params, n);
    let h = std::f64::consts::PI / n as f64;
    let lipschitz = (lat.c.abs() + lat.s.abs()) * params.p.max(params.q) as f64 * h * (1.0 + 1e-9);
    let half = SUB / 2;

    // sign per cell: ±2 when the whole closed cell has that sign, ±1 otherwise
    let mut sign = vec![0i8; n * n];
    sign.par_chunks_mut(n).enumerate().for_each(|(j, row)| {
        let b = SUB * j + half;
        for (i, out) in row.iter_mut().enumerate() {
            let v = lat.phi(SUB * i + half, b);
            *out = if v.abs() <= CENTER_ZERO {
                0
            } else {
                let mag = if v.abs() > lipschitz { 2 } else { 1 };
                if v > 0.0 {
                    mag
                } else {
                    -mag
                }
            };
        }
    });

    for &[x, y] in excised {
        let r = radius * h;
        let lo = |t: f64| (((t - r) / h - 0.5).floor().max(0.0)) as usize;
        let hi = |t: f64| ((((t + r) / h - 0.5).ceil()) as usize).min(n - 1);
        for j in lo(y)..=hi(y) {
            for i in lo(x)..=hi(x) {
                let (cx, cy) = ((i as f64 + 0.5) * h, (j as f64 + 0.5) * h);
                if (cx - x).hypot(cy - y) <= r {
                    sign[j * n + i] = 0;
                }
            }
        }
    }

    let edge_ok = |sg: i8, fixed: usize, along: usize, vertical: bool| -> bool {
        let want = sg.signum() as f64;
        (1..SUB).all(|k| {
            let v = if vertical {
                lat.phi(fixed, along + k)
            } else {
                lat.phi(along + k, fixed)
            };
            v * want > EDGE_ZERO
        })
    };

    // bit 0: join right neighbour, bit 1: join upper neighbour
    let mut joins = vec![0u8; n * n];
    joins.par_chunks_mut(n).enumerate().for_each(|(j, row)| {
        for i in 0..n {
            let sg = sign[j * n + i];
            if sg == 0 {
                continue;
            }
            let mut bits = 0u8;
            if i + 1 < n {
                let nb = sign[j * n + i + 1];
                if nb.signum() == sg.signum()
                    && (sg.abs() == 2 || nb.abs() == 2 || edge_ok(sg, SUB * (i + 1), SUB * j, true))
                {
                    bits |= 1;
                }
            }
            if j + 1 < n {
                let nb = sign[(j + 1) * n + i];
                if nb.signum() == sg.signum()
                    && (sg.abs() == 2
                        || nb.abs() == 2
                        || edge_ok(sg, SUB * (j + 1), SUB * i, false))
                {
                    bits |= 2;
                }
            }
            row[i] = bits;
        }
    });

    let mut uf = UnionFind::new(n * n);
    let mut components = sign.iter().filter(|&&s| s != 0).count() as u32;
    for j in 0..n {
        for i in 0..n {
            let idx = j * n + i;
            let bits = joins[idx];
            if bits & 1 != 0 && uf.union(idx as u32, (idx + 1) as u32) {
                components -= 1;
            }
            if bits & 2 != 0 && uf.union(idx as u32, (idx + n) as u32) {
                components -= 1;
            }
        }
    }
    components
}

fn excision_points(inv: &CriticalInventory, theta: f64) -> Vec<[f64; 2]> {
    inv.critical_thetas
        .iter()
        .filter(|c| c.kind != CriticalKind::Corner)
        .filter(|c| super::critical::angle_distance(c.theta, theta) <= CRITICAL_MATCH)
        .flat_map(|c| c.witnesses.iter().copied())
        .collect()
}

fn identically_zero(params: &EigenfunctionParams) -> bool {
    let (c, s) = params.theta.cos_sin();
    params.p == params.q && (c + s).abs() < 1e-15
}

/// Counts with certification by resolution doubling.
pub fn count_with_options(
    params: &EigenfunctionParams,
    opts: &CountOptions,
    inventory: Option<&CriticalInventory>,
) -> Result<NodalReport> {
    let (p, q) = (params.p, params.q);
    let min_res = 32 * p.max(q).max(1);
    if opts.resolution < min_res {
        return domain(format!(
            "resolution {} below 32·max(p,q,1) = {min_res}",
            opts.resolution
        ));
    }
    if opts.resolution > MAX_RESOLUTION {
        return domain(format!(
            "resolution {} above {MAX_RESOLUTION}",
            opts.resolution
        ));
    }
    if identically_zero(params) {
        return domain(format!(
            "Φ vanishes identically for ({p},{q}) at θ = {}",
            params.theta
        ));
    }
    let theta = params.theta.value();
    let owned;
    let inv = match inventory {
        Some(inv) => inv,
        None => {
            owned = critical_inventory(p, q);
            &owned
        }
    };
    let excised = if opts.excise {
        excision_points(inv, theta)
    } else {
        Vec::new()
    };
    let critical_points: Vec<[f64; 3]> = inv
        .critical_thetas
        .iter()
        .filter(|c| c.kind == CriticalKind::Interior)
        .filter(|c| super::critical::angle_distance(c.theta, theta) <= CRITICAL_MATCH)
        .flat_map(|c| c.witnesses.iter().map(move |[x, y]| [*x, *y, c.theta]))
        .collect();

    let (count, certified, resolution) = if p == 0 && q == 0 {
        (1, true, opts.resolution)
    } else {
        let mut res = opts.resolution;
        let mut prev = count_once(params, res as usize, &excised, opts.excision_radius);
        let mut result = (prev, false, res);
        for _ in 0..opts.max_doublings.max(1) {
            let next_res = 2 * res;
            if next_res > MAX_RESOLUTION {
                break;
            }
            let next = count_once(params, next_res as usize, &excised, opts.excision_radius);
            if next == prev {
                result = (prev, true, res);
                break;
            }
            result = (next, false, next_res);
            prev = next;
            res = next_res;
        }
        result
    };

    let mut boundary_touches = [0u32; 4];
    for (slot, side) in boundary_touches.iter_mut().zip(Side::ALL) {
        *slot = boundary_zeros(params, side)
            .map(|z| z.len() as u32)
            .unwrap_or(0);
    }
    let pi = std::f64::consts::PI;
    let corner_hits = [(0.0, 0.0), (pi, 0.0), (0.0, pi), (pi, pi)]
        .map(|(x, y)| eval_phi(params, x, y).abs() < 1e-12);

    Ok(NodalReport {
        p,
        q,
        theta,
        theta_tag: params.theta.tag(),
        count,
        certified,
        resolution,
        boundary_touches,
        corner_hits,
        critical_points,
    })
}

/// Nodal domains of `Φ^θ_{p,q}` at `resolution ≥ 32 · max(p, q, 1)` cells per side.
pub fn count_nodal_domains(params: &EigenfunctionParams, resolution: u32) -> Result<NodalReport> {
    count_with_options(params, &CountOptions::new(resolution), None)
}

/// `(p+1)(q+1)` checked against the grid, for the product case.
pub fn verify_product(p: u32, q: u32) -> Result<bool> {
    let params = EigenfunctionParams::new(p, q, super::Theta::ZERO);
    let r = count_with_options(&params, &CountOptions::default_for(p, q), None)?;
    Ok(r.certified && r.count == product_count(p, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nodal::Theta;
    use std::f64::consts::{FRAC_PI_4, FRAC_PI_8};

    fn count(p: u32, q: u32, theta: Theta, res: u32) -> NodalReport {
        count_nodal_domains(&EigenfunctionParams::new(p, q, theta), res).unwrap()
    }

    #[test]
    fn cos_table_exact() {
        let t = cos_table(3, 40);
        assert_eq!(t[0], 1.0);
        assert_eq!(t[20], 0.0);
        for a in 0..=40 {
            assert_eq!(t[a], -t[40 - a]);
            assert!((t[a] - (3.0 * a as f64 * std::f64::consts::PI / 40.0).cos()).abs() < 1e-14);
        }
    }

    #[test]
    fn two_one() {
        assert_eq!(count(2, 1, Theta::ZERO, 256).count, 6);
        let r = count(2, 1, Theta::new(FRAC_PI_8).unwrap(), 256);
        assert_eq!((r.count, r.certified), (4, true));
        assert_eq!(r.boundary_touches, [1, 1, 2, 2]);
        assert_eq!(count(2, 1, Theta::QUARTER_PI, 256).count, 4);
    }

    #[test]
    fn four_one_quarter() {
        let r = count(4, 1, Theta::QUARTER_PI, 512);
        assert_eq!(r.count, 10);
        assert!(r.certified);
        assert_eq!(r.critical_points.len(), 2);
    }

    #[test]
    fn four_zero_diagonals() {
        assert_eq!(count(4, 0, Theta::QUARTER_PI, 256).count, 13);
        assert_eq!(count(4, 0, Theta::THREE_QUARTER_PI, 256).count, 12);
        assert_eq!(count(3, 0, Theta::QUARTER_PI, 256).count, 8);
    }

    #[test]
    fn constant_and_degenerate() {
        assert_eq!(count(0, 0, Theta::new(0.4).unwrap(), 32).count, 1);
        let zero = EigenfunctionParams::new(2, 2, Theta::THREE_QUARTER_PI);
        assert!(count_nodal_domains(&zero, 128).is_err());
        assert!(count_nodal_domains(&EigenfunctionParams::new(4, 1, Theta::ZERO), 64).is_err());
        assert_eq!(count(2, 2, Theta::new(0.3).unwrap(), 128).count, 9);
    }

    #[test]
    fn products() {
        for (p, q) in [(1u32, 0u32), (2, 1), (3, 2), (4, 1), (5, 2), (6, 4)] {
            assert!(verify_product(p, q).unwrap(), "({p},{q})");
        }
    }

    #[test]
    fn report_json() {
        let r = count(2, 1, Theta::QUARTER_PI, 64);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["thetaTag"], "pi/4");
        assert_eq!(v["boundaryTouches"].as_array().unwrap().len(), 4);
        assert!((v["theta"].as_f64().unwrap() - FRAC_PI_4).abs() < 1e-16);
        let back: NodalReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
        let r = count(2, 1, Theta::new(0.3).unwrap(), 64);
        assert!(serde_json::to_value(&r).unwrap()["thetaTag"].is_null());
    }
}

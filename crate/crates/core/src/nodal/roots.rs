//! One-dimensional root isolation: the tangent equation, level sets of
//! `f_{p,q}`, and zeros of `Φ` on the sides of the square.

use std::f64::consts::{FRAC_PI_2, PI};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::chebyshev::{has_common_zeros, tangent_form};
use super::EigenfunctionParams;
use crate::error::{domain, Result};

/// Absolute tolerance of refined roots.
pub const ROOT_TOL: f64 = 1e-12;

/// Bisection of a bracketed sign change.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut f_lo = f(lo);
    for _ in 0..200 {
        if hi - lo <= ROOT_TOL {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid > 0.0) == (f_lo > 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Sign changes and exact zeros of `f` over the sample points `xs`,
/// each refined by bisection. A run of samples with `|f| ≤ zero_tol`
/// yields a single root.
pub fn isolate_roots(f: impl Fn(f64) -> f64, xs: &[f64], zero_tol: f64) -> Vec<f64> {
    let mut roots = Vec::new();
    let mut prev: Option<(f64, f64)> = None;
    let mut in_zero_run = false;
    for &x in xs {
        let v = f(x);
        if v.abs() <= zero_tol {
            if !in_zero_run {
                roots.push(x);
            }
            in_zero_run = true;
            prev = None;
            continue;
        }
        if let Some((px, pv)) = prev {
            if (pv > 0.0) != (v > 0.0) {
                roots.push(bisect(&f, px, x));
            }
        }
        in_zero_run = false;
        prev = Some((x, v));
    }
    roots
}

fn tangent_roots_coprime(p: u32, q: u32) -> Vec<f64> {
    // g(π−x) = ±g(x): scan (0, π/2) and mirror
    let m = 64 * p.max(1) as usize;
    let step = FRAC_PI_2 / m as f64;
    let xs: Vec<f64> = (0..m)
        .map(|k| (k as f64 + 0.5) * step)
        .chain([FRAC_PI_2])
        .collect();
    let f = |x| tangent_form(p, q, x);
    let scale = (p * p) as f64;
    let mut half: Vec<f64> = isolate_roots(f, &xs, 1e-14 * scale)
        .into_iter()
        .filter(|&x| x < FRAC_PI_2 - 1e-9)
        .collect();
    if has_common_zeros(p, q) {
        // the shared cosine zero at π/2 is a double zero of the regularised form
        half.retain(|x| (x - FRAC_PI_2).abs() > 1e-6);
    }
    let mut all = half.clone();
    all.extend(half.iter().rev().map(|x| PI - x));
    all
}

/// Solutions of `p tan px = q tan qx` in `(0, π)`, sorted, excluding the points
/// where both tangents have poles.
///
/// For `g = gcd(p, q) > 1` the roots are `(y + kπ)/g` over the roots `y` of
/// the reduced pair and `k = 0..g`, together with `kπ/g` for `0 < k < g`.
pub fn solve_tangent_equation(p: u32, q: u32) -> Result<Vec<f64>> {
    if p == q {
        return domain("tangent equation is degenerate for p = q");
    }
    let (p, q) = (p.max(q), p.min(q));
    let g = p.gcd(&q);
    let base = tangent_roots_coprime(p / g, q / g);
    let gf = g as f64;
    let mut roots: Vec<f64> = (0..g)
        .flat_map(|k| base.iter().map(move |y| (y + k as f64 * PI) / gf))
        .chain((1..g).map(|k| k as f64 * PI / gf))
        .collect();
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}

/// Number of solutions of `cos px = t cos qx` in `[0, π]`.
pub fn count_level_solutions(p: u32, q: u32, t: f64) -> Result<usize> {
    if p <= q {
        return domain(format!("level counting needs p > q, got ({p},{q})"));
    }
    if !t.is_finite() {
        return domain("level must be finite");
    }
    let m = 256 * p as usize;
    let xs: Vec<f64> = (0..=m).map(|k| k as f64 * PI / m as f64).collect();
    let (pf, qf) = (p as f64, q as f64);
    let h = |x: f64| (pf * x).cos() - t * (qf * x).cos();
    Ok(isolate_roots(h, &xs, 1e-13 * (1.0 + t.abs())).len())
}

/// The four sides of the square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Side {
    /// `x = 0`, parametrised by `y`.
    X0,
    /// `x = π`, parametrised by `y`.
    XPi,
    /// `y = 0`, parametrised by `x`.
    Y0,
    /// `y = π`, parametrised by `x`.
    YPi,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::X0, Side::XPi, Side::Y0, Side::YPi];

    /// The point of the side at parameter `s`.
    pub fn point(self, s: f64) -> (f64, f64) {
        match self {
            Side::X0 => (0.0, s),
            Side::XPi => (PI, s),
            Side::Y0 => (s, 0.0),
            Side::YPi => (s, PI),
        }
    }
}

fn sign_pow(n: u32) -> f64 {
    if n.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// `(a, b)` with `Φ = a cos ps + b cos qs` along the side.
pub fn side_coefficients(params: &EigenfunctionParams, side: Side) -> (f64, f64) {
    let (c, s) = params.theta.cos_sin();
    let (p, q) = (params.p, params.q);
    match side {
        Side::X0 => (s, c),
        Side::XPi => (s * sign_pow(q), c * sign_pow(p)),
        Side::Y0 => (c, s),
        Side::YPi => (c * sign_pow(q), s * sign_pow(p)),
    }
}

/// Zeros of `Φ` on the open side, sorted.
pub fn boundary_zeros(params: &EigenfunctionParams, side: Side) -> Result<Vec<f64>> {
    let (a, b) = side_coefficients(params, side);
    let (p, q) = (params.p, params.q);
    if (p == q && (a + b) == 0.0) || (a == 0.0 && b == 0.0) {
        return domain(format!("Φ vanishes identically on side {side:?}"));
    }
    let m = 256 * p.max(q).max(1) as usize;
    let xs: Vec<f64> = (1..m).map(|k| k as f64 * PI / m as f64).collect();
    let (pf, qf) = (p as f64, q as f64);
    let h = |x: f64| a * (pf * x).cos() + b * (qf * x).cos();
    Ok(isolate_roots(h, &xs, 1e-13))
}

//! Chebyshev polynomials with exact integer coefficients and the regularised
//! ratio `f_{p,q}(x) = cos px / cos qx`.
//!
//! With `u = cos x` we have `cos px = T_p(u)`. Writing `g = gcd(p, q)`,
//! `p = g p'`, `q = g q'`, the two cosines share zeros exactly when `p'` and
//! `q'` are both odd; the shared factor is then `Q = T_g` and
//! `T_p = Q · P̂_p`, `T_q = Q · P̂_q` with integer quotients.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

/// Coefficients of `T_n` in the power basis, lowest degree first.
pub fn chebyshev_t(n: u32) -> Vec<i128> {
    let mut prev = vec![1i128];
    if n == 0 {
        return prev;
    }
    let mut cur = vec![0i128, 1];
    for _ in 1..n {
        // T_{k+1} = 2u T_k − T_{k−1}
        let mut next = vec![0i128; cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += 2 * c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

pub fn poly_eval(coeffs: &[i128], u: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * u + c as f64)
}

fn trim(mut a: Vec<i128>) -> Vec<i128> {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    a
}

/// `a / b` when `b` divides `a` over the integers, else `None`.
pub fn poly_div_exact(a: &[i128], b: &[i128]) -> Option<Vec<i128>> {
    let b = trim(b.to_vec());
    let lead = *b.last()?;
    if lead == 0 {
        return None;
    }
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return rem.iter().all(|&c| c == 0).then(|| vec![0]);
    }
    let mut quot = vec![0i128; rem.len() - b.len() + 1];
    for k in (0..quot.len()).rev() {
        let top = rem[k + b.len() - 1];
        if top % lead != 0 {
            return None;
        }
        let c = top / lead;
        quot[k] = c;
        for (i, bc) in b.iter().enumerate() {
            rem[k + i] -= c * bc;
        }
    }
    rem.iter().all(|&c| c == 0).then(|| trim(quot))
}

pub fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Whether `cos px` and `cos qx` vanish at a common point of `(0, π)`.
pub fn has_common_zeros(p: u32, q: u32) -> bool {
    if p == 0 || q == 0 {
        return false;
    }
    let g = p.gcd(&q);
    (p / g) % 2 == 1 && (q / g) % 2 == 1
}

/// The factorisation `T_p = Q · P̂_p`, `T_q = Q · P̂_q` over the integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Regularization {
    pub gcd: u32,
    /// `Q`; the constant `1` when there are no common zeros.
    pub common: Vec<i128>,
    pub p_hat: Vec<i128>,
    pub q_hat: Vec<i128>,
}

pub fn regularize(p: u32, q: u32) -> Regularization {
    let gcd = p.gcd(&q).max(1);
    let common = if has_common_zeros(p, q) {
        chebyshev_t(gcd)
    } else {
        vec![1]
    };
    let div = |n| poly_div_exact(&chebyshev_t(n), &common).expect("T_g divides T_n for n/g odd");
    Regularization {
        gcd,
        p_hat: div(p),
        q_hat: div(q),
        common,
    }
}

/// Value of the regularised `f_{p,q}`, or a pole of `cos px / cos qx` that
/// is not removable.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum FRatio {
    Value(f64),
    /// Signed infinity: the sign of the numerator at the pole.
    Pole {
        sign: i8,
    },
}

impl FRatio {
    pub fn value(self) -> Option<f64> {
        match self {
            FRatio::Value(v) => Some(v),
            FRatio::Pole { .. } => None,
        }
    }

    /// `±∞` for poles.
    pub fn to_f64(self) -> f64 {
        match self {
            FRatio::Value(v) => v,
            FRatio::Pole { sign } => sign as f64 * f64::INFINITY,
        }
    }
}

const POLE_EPS: f64 = 4.0 * f64::EPSILON;

/// `cos px / cos qx` with removable singularities filled in.
///
/// When `p' = p/g` and `q' = q/g` are odd, put `δ = π/2 − g x` and reduce it
/// to `ε ∈ [−π/2, π/2]` modulo π. Then
/// `cos px / cos qx = σ · sin(p'ε) / sin(q'ε)` with `σ = ±1`, which equals
/// `P̂_p(u) / P̂_q(u)` and is finite at the shared zeros (`ε = 0`).
pub fn f_ratio(p: u32, q: u32, x: f64) -> FRatio {
    if has_common_zeros(p, q) {
        let g = p.gcd(&q);
        let (pr, qr) = ((p / g) as f64, (q / g) as f64);
        let delta = std::f64::consts::FRAC_PI_2 - g as f64 * x;
        let eps = delta - (delta / std::f64::consts::PI).round() * std::f64::consts::PI;
        // sin(p'π/2) / sin(q'π/2)
        let sigma = if ((p / g) / 2 + (q / g) / 2).is_multiple_of(2) {
            1.0
        } else {
            -1.0
        };
        if eps == 0.0 {
            return FRatio::Value(sigma * pr / qr);
        }
        let (num, den) = ((pr * eps).sin(), (qr * eps).sin());
        if den.abs() <= POLE_EPS {
            return FRatio::Pole {
                sign: if sigma * num >= 0.0 { 1 } else { -1 },
            };
        }
        return FRatio::Value(sigma * num / den);
    }
    let (num, den) = ((p as f64 * x).cos(), (q as f64 * x).cos());
    if den.abs() <= POLE_EPS {
        FRatio::Pole {
            sign: if num >= 0.0 { 1 } else { -1 },
        }
    } else {
        FRatio::Value(num / den)
    }
}

/// `p sin px cos qx − q cos px sin qx`. Its zeros in `(0, π)` away from the
/// shared cosine zeros are the critical points of `f_{p,q}`.
pub fn tangent_form(p: u32, q: u32, x: f64) -> f64 {
    let (pf, qf) = (p as f64, q as f64);
    pf * (pf * x).sin() * (qf * x).cos() - qf * (pf * x).cos() * (qf * x).sin()
}

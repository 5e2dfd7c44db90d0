//! The eigenfunctions `Φ^θ_{p,q}` and their nodal domains.

pub mod chebyshev;
pub mod critical;
pub mod grid;
pub mod roots;
pub mod sweep;
mod theta;

pub use chebyshev::{f_ratio, has_common_zeros, FRatio};
pub use critical::{
    boundary_critical_thetas, critical_inventory, interior_critical_points, CriticalInventory,
    CriticalKind, CriticalPoint, CriticalTheta,
};
pub use grid::{count_nodal_domains, count_with_options, CountOptions, NodalReport};
pub use roots::{boundary_zeros, count_level_solutions, solve_tangent_equation, Side};
pub use sweep::{sweep_theta, SweepOptions, SweepPoint, SweepReport};
pub use theta::{Theta, ThetaTag};

/// `(p, q, θ)` selecting `cos θ cos px cos qy + sin θ cos qx cos py`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenfunctionParams {
    pub p: u32,
    pub q: u32,
    pub theta: Theta,
}

impl EigenfunctionParams {
    pub const fn new(p: u32, q: u32, theta: Theta) -> Self {
        Self { p, q, theta }
    }
}

pub fn eval_phi(params: &EigenfunctionParams, x: f64, y: f64) -> f64 {
    let (c, s) = params.theta.cos_sin();
    let (p, q) = (params.p as f64, params.q as f64);
    c * (p * x).cos() * (q * y).cos() + s * (q * x).cos() * (p * y).cos()
}

/// Nodal domains of the product `cos px cos qy`.
pub fn product_count(p: u32, q: u32) -> u32 {
    (p + 1) * (q + 1)
}

/// Largest nodal count in the eigenspace spanned by `cos px` and `cos py`,
/// attained at `θ = π/4`.
pub fn p0_max_count(p: u32) -> u32 {
    let sq = (p + 1) * (p + 1);
    if p % 2 == 1 {
        sq / 2
    } else {
        sq.div_ceil(2)
    }
}

/// Nodal count of `cos px + cos py` at `θ = 3π/4`, i.e. `cos px − cos py`.
pub fn p0_anti_diagonal_count(p: u32) -> u32 {
    let sq = (p + 1) * (p + 1);
    if p % 2 == 1 {
        sq / 2
    } else {
        (sq - 1) / 2
    }
}

/// Nodal count of `cos px cos py`.
pub fn pp_count(p: u32) -> u32 {
    (p + 1) * (p + 1)
}

/// Every eigenfunction with `p > q` touches the boundary at least this often.
pub fn touching_lower_bound(p: u32, q: u32) -> u32 {
    2 * p + 2 * q
}

/// `μ ≥ p + q + 1` for `p > q`.
pub fn mu_lower(p: u32, q: u32) -> u32 {
    p + q + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

    #[test]
    fn phi_examples() {
        let prm = EigenfunctionParams::new(2, 1, Theta::ZERO);
        for (x, y) in [(0.1, 0.2), (1.0, 2.5), (3.0, 0.0)] {
            assert_eq!(eval_phi(&prm, x, y), (2.0 * x).cos() * y.cos());
        }
        let prm = EigenfunctionParams::new(1, 0, Theta::QUARTER_PI);
        assert!(eval_phi(&prm, FRAC_PI_2, FRAC_PI_2).abs() < 1e-16);
        let prm = EigenfunctionParams::new(2, 1, Theta::QUARTER_PI);
        for (x, y) in [(0.3, 0.7), (1.1, 2.9), (2.0, 0.4)] {
            let (u, v) = (f64::cos(x), f64::cos(y));
            let expected = FRAC_1_SQRT_2 * (u + v) * (2.0 * u * v - 1.0);
            assert!((eval_phi(&prm, x, y) - expected).abs() < 1e-14);
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(product_count(2, 2), 9);
        assert_eq!(product_count(6, 4), 35);
        assert_eq!(product_count(8, 3), 36);
        assert_eq!(p0_max_count(3), 8);
        assert_eq!(p0_max_count(4), 13);
        assert_eq!(p0_max_count(1), 2);
        assert_eq!(p0_anti_diagonal_count(4), 12);
        assert_eq!(p0_anti_diagonal_count(3), 8);
        assert_eq!(touching_lower_bound(2, 1), 6);
        assert_eq!(mu_lower(2, 1), 4);
        assert_eq!((touching_lower_bound(1, 0), mu_lower(1, 0)), (2, 2));
        assert_eq!(mu_lower(8, 3), 12);
    }

    /// Rotation by π maps `Φ` to `±Φ` with sign `(−1)^{p+q}`.
    #[test]
    fn rotation_parity() {
        let prm = EigenfunctionParams::new(5, 2, Theta::new(0.37).unwrap());
        for k in 0..50 {
            let x = k as f64 * 0.061;
            let y = PI - k as f64 * 0.043;
            let a = eval_phi(&prm, x, y);
            let b = eval_phi(&prm, PI - x, PI - y);
            assert!((a + b).abs() < 1e-12);
        }
    }
}

//! Faber–Krahn based upper bounds on the number of nodal domains.
//!
//! Nodal domains are split into inner ones (not touching `∂Ω` except at
//! isolated points) and outer ones. Each inner domain has area at least
//! `π j₀,₁² / λ`, and the outer ones number at most `4√λ`. Combining this with
//! the lower counting bound gives a gate above which no index can be
//! Courant sharp.

use std::f64::consts::PI;

use num_integer::Roots;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// First positive zero of the Bessel function `J₀`.
pub const J01: f64 = 2.404_825_557_695_773;

/// Decisions closer than this to the integer threshold are re-examined
/// against the floating point error bound.
pub const DECISION_MARGIN: f64 = 1e-3;

/// `J₀(x)` from its power series. Accurate to a few ulps for `|x| ≤ 8`.
pub fn bessel_j0(x: f64) -> f64 {
    let quarter_sq = x * x / 4.0;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..80 {
        term *= -quarter_sq / ((k * k) as f64);
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-300) {
            break;
        }
    }
    sum
}

/// `j₀,₁`, the first positive zero of `J₀`.
pub fn bessel_j01() -> f64 {
    J01
}

fn j01_sq() -> f64 {
    J01 * J01
}

/// Smallest possible area of an inner nodal domain at eigenvalue `lambda`.
pub fn faber_krahn_min_area(lambda: f64) -> Result<f64> {
    if lambda.is_nan() || lambda <= 0.0 {
        return domain(format!("Faber-Krahn area needs lambda > 0, got {lambda}"));
    }
    Ok(PI * j01_sq() / lambda)
}

/// Shared leading term `π λ / j₀,₁²` (the inner count when `|Ω_inn| = |Ω|`).
pub fn inner_count_full_area(lambda: f64) -> f64 {
    PI * lambda / j01_sq()
}

/// `μ ≤ |Ω_inn| λ / (π j₀,₁²) + 4⌊√λ⌋`, with `|Ω_inn| = fraction · π²`.
pub fn mu_upper_inner_area(lambda: u64, area_fraction: Ratio<i64>) -> Result<f64> {
    if *area_fraction.numer() <= 0 || area_fraction > Ratio::from_integer(1) {
        return domain(format!(
            "inner area fraction must lie in (0,1], got {area_fraction}"
        ));
    }
    let fraction = *area_fraction.numer() as f64 / *area_fraction.denom() as f64;
    Ok(fraction * inner_count_full_area(lambda as f64) + 4.0 * lambda.sqrt() as f64)
}

/// `μ ≤ π λ / j₀,₁² + max(4P, 1)` where `P` is the largest `p` of the eigenvalue.
pub fn mu_upper_max_p(lambda: u64, max_p: u32) -> f64 {
    inner_count_full_area(lambda as f64) + (4 * max_p).max(1) as f64
}

/// Right-hand side of the global gate: `4 (n−1) / j₀,₁² + 8 √(n−1) / √π`.
pub fn index_gate_rhs(n: u32) -> f64 {
    let m = n.saturating_sub(1) as f64;
    4.0 * m / j01_sq() + 8.0 / PI.sqrt() * m.sqrt()
}

/// Whether `n ≤ index_gate_rhs(n)`, i.e. the global bound does not by itself
/// rule out a Courant-sharp `λ_n`.
pub fn pleijel_gate(n: u32) -> bool {
    n as f64 <= index_gate_rhs(n)
}

/// `true` iff `bound < threshold`, refusing to decide when the two are
/// within the rounding error of the evaluation.
pub fn strictly_below(bound: f64, threshold: f64) -> Result<bool> {
    let margin = threshold - bound;
    if margin.abs() >= DECISION_MARGIN {
        return Ok(margin > 0.0);
    }
    // every bound here is a handful of correctly rounded operations
    let rounding = 64.0 * f64::EPSILON * bound.abs().max(1.0);
    if margin.abs() > rounding {
        Ok(margin > 0.0)
    } else {
        Err(Error::Undecided(format!(
            "bound {bound} indistinguishable from threshold {threshold}"
        )))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundKind {
    #[serde(rename = "PLEIJEL_GATE")]
    IndexGate,
    #[serde(rename = "LEMMA22")]
    InnerArea,
    #[serde(rename = "LEMMA23")]
    MaxP,
}

/// One bound evaluated at one index.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: u32,
    pub lambda: u64,
    pub kind: BoundKind,
    #[serde(rename = "bound")]
    pub bound_value: f64,
    #[serde(rename = "excludes")]
    pub excludes_courant_sharp: bool,
    #[serde(rename = "areaFraction", with = "ratio_pair", default)]
    pub area_fraction: Option<Ratio<i64>>,
}

impl BoundReport {
    pub fn index_gate(n: u32, lambda: u64) -> Self {
        let rhs = index_gate_rhs(n);
        Self {
            n,
            lambda,
            kind: BoundKind::IndexGate,
            bound_value: rhs,
            excludes_courant_sharp: !pleijel_gate(n),
            area_fraction: None,
        }
    }

    pub fn inner_area(n: u32, lambda: u64, area_fraction: Ratio<i64>) -> Result<Self> {
        let bound = mu_upper_inner_area(lambda, area_fraction)?;
        Ok(Self {
            n,
            lambda,
            kind: BoundKind::InnerArea,
            bound_value: bound,
            excludes_courant_sharp: strictly_below(bound, n as f64)?,
            area_fraction: Some(area_fraction),
        })
    }

    pub fn max_p(n: u32, lambda: u64, max_p: u32) -> Result<Self> {
        let bound = mu_upper_max_p(lambda, max_p);
        Ok(Self {
            n,
            lambda,
            kind: BoundKind::MaxP,
            bound_value: bound,
            excludes_courant_sharp: strictly_below(bound, n as f64)?,
            area_fraction: None,
        })
    }
}

/// Serialises an optional ratio as `[num, den]` (or `null`).
pub(crate) mod ratio_pair {
    use num_rational::Ratio;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<Ratio<i64>>, s: S) -> Result<S::Ok, S::Error> {
        r.map(|r| [*r.numer(), *r.denom()]).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Ratio<i64>>, D::Error> {
        let raw = Option::<[i64; 2]>::deserialize(d)?;
        raw.map(|[n, den]| {
            if den == 0 {
                Err(serde::de::Error::custom("zero denominator"))
            } else {
                Ok(Ratio::new(n, den))
            }
        })
        .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Bisection on the series, independent of the stored constant.
    fn j01_by_bisection() -> f64 {
        let (mut lo, mut hi) = (2.0, 3.0);
        assert!(bessel_j0(lo) > 0.0 && bessel_j0(hi) < 0.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if bessel_j0(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn j01_value() {
        let derived = j01_by_bisection();
        assert!((derived - 2.404825557695773).abs() < 1e-14, "{derived}");
        assert!((bessel_j01() - derived).abs() < 1e-14);
        assert!((J01 * J01 - 5.783185962946785).abs() < 1e-12);
        assert!(bessel_j0(J01).abs() < 1e-12);
    }

    #[test]
    fn j0_known_values() {
        assert_eq!(bessel_j0(0.0), 1.0);
        // J0(1) = 0.7651976865579666
        assert!((bessel_j0(1.0) - 0.765_197_686_557_966_6).abs() < 1e-15);
    }

    #[test]
    fn faber_krahn_examples() {
        assert!((faber_krahn_min_area(PI * J01 * J01).unwrap() - 1.0).abs() < 1e-14);
        assert!((faber_krahn_min_area(73.0).unwrap() - 0.248_88).abs() < 1e-5);
        assert!((faber_krahn_min_area(1.0).unwrap() - 18.168).abs() < 1e-3);
        assert!(faber_krahn_min_area(0.0).is_err());
        assert!(faber_krahn_min_area(-2.0).is_err());
    }

    #[test]
    fn inner_area_examples() {
        let b = |l, n, d| mu_upper_inner_area(l, Ratio::new(n, d)).unwrap();
        assert!((b(73, 5, 8) - 56.8).abs() < 0.05);
        assert!((b(97, 437, 648) - 71.5).abs() < 0.05);
        assert!((b(116, 79, 100) - 89.8).abs() < 0.05);
        assert!(mu_upper_inner_area(73, Ratio::new(0, 1)).is_err());
        assert!(mu_upper_inner_area(73, Ratio::new(9, 8)).is_err());
        assert!(mu_upper_inner_area(73, Ratio::new(-1, 8)).is_err());
    }

    #[test]
    fn max_p_examples() {
        let b = mu_upper_max_p(98, 7);
        assert!((b - 81.24).abs() < 0.01 && b < 86.0);
        assert_eq!(mu_upper_max_p(0, 0), 1.0);
        let b = mu_upper_max_p(244, 12);
        assert!((b - 180.5).abs() < 0.05 && b < 207.0);
    }

    #[test]
    fn gate_examples() {
        assert!(!pleijel_gate(209));
        assert!(pleijel_gate(208));
        // RHS(209) = 208.9602..., RHS(208) = 208.1119...
        assert!((index_gate_rhs(209) - 208.960_200_555).abs() < 1e-8);
        assert!((index_gate_rhs(208) - 208.111_873_715).abs() < 1e-8);
        assert!(!pleijel_gate(1));
        for n in 209..5000 {
            assert!(!pleijel_gate(n), "{n}");
        }
    }

    #[test]
    fn shared_leading_term() {
        for lambda in [1u64, 17, 73, 244] {
            let a = mu_upper_inner_area(lambda, Ratio::from_integer(1)).unwrap()
                - 4.0 * lambda.sqrt() as f64;
            let b = mu_upper_max_p(lambda, 1) - 4.0;
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn decision_margin() {
        assert_eq!(strictly_below(56.8, 66.0), Ok(true));
        assert_eq!(strictly_below(66.5, 66.0), Ok(false));
        assert_eq!(strictly_below(65.9999, 66.0), Ok(true));
        assert!(strictly_below(66.0, 66.0).is_err());
    }

    #[test]
    fn report_json() {
        let r = BoundReport::inner_area(66, 73, Ratio::new(5, 8)).unwrap();
        assert!(r.excludes_courant_sharp);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["kind"], "LEMMA22");
        assert_eq!(v["areaFraction"], serde_json::json!([5, 8]));
        let back: BoundReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
        let g = serde_json::to_value(BoundReport::index_gate(209, 245)).unwrap();
        assert_eq!(g["kind"], "PLEIJEL_GATE");
        assert_eq!(g["excludes"], true);
        assert!(g["areaFraction"].is_null());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn inner_area_monotone(lambda in 1u64..400, num in 1i64..100, den in 100i64..200) {
                let f = Ratio::new(num, den);
                let base = mu_upper_inner_area(lambda, f).unwrap();
                prop_assert!(mu_upper_inner_area(lambda + 1, f).unwrap() > base);
                prop_assert!(mu_upper_inner_area(lambda, Ratio::new(num + 1, den)).unwrap() > base);
            }

            #[test]
            fn max_p_monotone(lambda in 0u64..400, p in 0u32..30) {
                let base = mu_upper_max_p(lambda, p);
                prop_assert!(mu_upper_max_p(lambda + 1, p) > base);
                prop_assert!(mu_upper_max_p(lambda, p + 1) >= base);
            }
        }
    }
}

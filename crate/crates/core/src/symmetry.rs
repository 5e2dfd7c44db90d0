//! Courant-type bounds inside the symmetry subspaces, the bound for doubled
//! pairs, and the reduction of θ to a fundamental domain.
//!
//! If `ψ` lies in ARot (odd under `(x,y) ↦ (π−x, π−y)`), its nodal domains
//! come in pairs exchanged by the rotation and each pair is one nodal domain
//! of `ψ` seen as an eigenfunction of the quotient problem. That quotient
//! problem has spectrum `{p² + q² : p + q odd}`, so `μ(ψ) ≤ 2m` with `m` the
//! index of `λ` in that subspace. The other two subspaces work the same way.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::nodal::{Theta, ThetaTag};
use crate::spectrum::{subspace_index_range, IndexRange, LatticePair, SubspaceTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SymmetryBound {
    pub tag: SubspaceTag,
    pub lambda: u64,
    /// Lowest index of `lambda` inside the subspace.
    pub m_lo: u32,
    pub mu_cap: u32,
    /// Every nodal count in the eigenspace is a multiple of this.
    pub divisibility: u32,
}

impl SymmetryBound {
    /// Whether `μ = n` is impossible for every eigenfunction of the eigenspace.
    pub fn excludes(&self, n: u32) -> bool {
        n > self.mu_cap || !n.is_multiple_of(self.divisibility)
    }
}

fn bound(lambda: u64, tag: SubspaceTag, factor: u32, divisibility: u32) -> Result<SymmetryBound> {
    let IndexRange { lo, .. } = subspace_index_range(lambda, tag)
        .ok_or_else(|| crate::Error::Domain(format!("{lambda} is not an eigenvalue in {tag:?}")))?;
    Ok(SymmetryBound {
        tag,
        lambda,
        m_lo: lo,
        mu_cap: factor * lo,
        divisibility,
    })
}

/// Odd `λ`: every pair has `p + q` odd, so the eigenspace sits in ARot.
pub fn arot_bound(lambda: u64) -> Result<SymmetryBound> {
    if lambda.is_multiple_of(2) {
        return domain(format!(
            "antisymmetric bound needs odd lambda, got {lambda}"
        ));
    }
    bound(lambda, SubspaceTag::ARot, 2, 2)
}

/// Even positive `λ`: the eigenspace sits in SRot.
pub fn srot_bound(lambda: u64) -> Result<SymmetryBound> {
    if lambda % 2 == 1 || lambda == 0 {
        return domain(format!(
            "symmetric bound needs even positive lambda, got {lambda}"
        ));
    }
    bound(lambda, SubspaceTag::SRot, 2, 1)
}

/// Every pair of `λ` is odd-odd.
pub fn is_amir_pure(lambda: u64) -> bool {
    let pairs = pairs_of(lambda);
    !pairs.is_empty() && pairs.iter().all(|pr| pr.in_subspace(SubspaceTag::AMir))
}

fn pairs_of(lambda: u64) -> Vec<LatticePair> {
    let mut out = Vec::new();
    let mut p = 0u64;
    while p * p <= lambda {
        let rest = lambda - p * p;
        let q = (rest as f64).sqrt().round() as u64;
        if q * q == rest {
            out.push(LatticePair::new(p as u32, q as u32));
        }
        p += 1;
    }
    out
}

pub fn amir_bound(lambda: u64) -> Result<SymmetryBound> {
    if !is_amir_pure(lambda) {
        return domain(format!("{lambda} has a lattice pair that is not odd-odd"));
    }
    bound(lambda, SubspaceTag::AMir, 4, 4)
}

/// `μ(Φ_{2p,2q}) ≤ 4 μ(Φ_{p,q}) − (2(k+ℓ) + 3)`, one less if `Φ_{p,q}(π,π) = 0`.
///
/// `k` and `ℓ` count the zeros of `Φ_{p,q}` on the open sides `x = π` and
/// `y = π`; passing zeros gives the weaker conservative cap.
pub fn doubling_bound(mu_half: u32, k: u32, l: u32, corner_zero: bool) -> Result<u32> {
    let sub = 2 * (k + l) + 3 + corner_zero as u32;
    match (4 * mu_half).checked_sub(sub) {
        Some(b) if b >= 1 => Ok(b),
        _ => domain(format!(
            "doubling bound 4*{mu_half} - {sub} is below 1 (inconsistent inputs)"
        )),
    }
}

/// A point map `T` and sign `s` with `Φ^θ(x, y) = s · Φ^{θ'}(T(x, y))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ThetaTransform {
    /// `θ ↦ π − θ` was applied, realised by `(x, y) ↦ (x, π − y)`.
    pub reflected: bool,
    /// `θ ↦ π/2 − θ` was applied, realised by `(x, y) ↦ (y, x)`.
    pub swapped: bool,
    pub sign: i8,
}

impl ThetaTransform {
    pub const IDENTITY: Self = Self {
        reflected: false,
        swapped: false,
        sign: 1,
    };

    /// `T(x, y)`.
    pub fn apply(&self, x: f64, y: f64) -> (f64, f64) {
        let (x, y) = if self.reflected { (x, PI - y) } else { (x, y) };
        if self.swapped {
            (y, x)
        } else {
            (x, y)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedTheta {
    pub theta: Theta,
    pub transform: ThetaTransform,
    /// `false` for `p + q` even, where only `θ ↦ π/2 − θ` is available and
    /// the canonical set is `[0, π/4] ∪ [3π/4, π)`.
    pub fully_reduced: bool,
}

fn swap_tag(tag: ThetaTag) -> ThetaTag {
    match tag {
        ThetaTag::Zero => ThetaTag::HalfPi,
        ThetaTag::HalfPi => ThetaTag::Zero,
        t => t,
    }
}

fn reflect_tag(tag: ThetaTag) -> ThetaTag {
    match tag {
        ThetaTag::QuarterPi => ThetaTag::ThreeQuarterPi,
        ThetaTag::ThreeQuarterPi => ThetaTag::QuarterPi,
        // π − 0 ≡ 0 and π − π/2 = π/2
        t => t,
    }
}

fn map(theta: Theta, tag_map: fn(ThetaTag) -> ThetaTag, value: f64) -> Theta {
    match theta.tag() {
        Some(t) => Theta::tagged(tag_map(t)),
        None => Theta::wrapped(value).expect("finite angle"),
    }
}

/// Moves `θ` into the fundamental domain for the pair.
///
/// For `p + q` odd the result lies in `[0, π/4]`. For `p + q` even only the
/// axis swap applies: `(π/4, π/2]` folds onto `[0, π/4)` and `(π/2, 3π/4)`
/// onto `(3π/4, π)`.
pub fn reduce_theta(p: u32, q: u32, theta: Theta) -> ReducedTheta {
    let mut out = theta;
    let mut transform = ThetaTransform::IDENTITY;
    let odd = (p + q) % 2 == 1;
    if odd && out.value() > FRAC_PI_2 {
        out = map(out, reflect_tag, PI - out.value());
        transform.reflected = true;
        // Φ^θ(x,y) = ± Φ^{π−θ}(x,π−y): + for p even, − for p odd
        transform.sign = if p.is_multiple_of(2) { 1 } else { -1 };
    }
    let v = out.value();
    let fold = if odd {
        v > FRAC_PI_4
    } else {
        (v > FRAC_PI_4 && v <= FRAC_PI_2) || (v > FRAC_PI_2 && v < 3.0 * FRAC_PI_4)
    };
    if fold {
        let target = FRAC_PI_2 - v;
        if target < 0.0 {
            // Φ^{θ−π} = −Φ^θ
            transform.sign = -transform.sign;
        }
        out = map(out, swap_tag, target);
        transform.swapped = true;
    }
    ReducedTheta {
        theta: out,
        transform,
        fully_reduced: odd,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nodal::{eval_phi, EigenfunctionParams};

    #[test]
    fn arot_examples() {
        let b = arot_bound(5).unwrap();
        assert_eq!((b.m_lo, b.mu_cap), (3, 6));
        let b = arot_bound(1).unwrap();
        assert_eq!((b.m_lo, b.mu_cap), (1, 2));
        let b = arot_bound(25).unwrap();
        assert_eq!((b.m_lo, b.mu_cap), (11, 22));
        assert!(b.excludes(23));
        assert!(arot_bound(4).is_err());
        assert!(arot_bound(3).is_err());
    }

    #[test]
    fn srot_examples() {
        let b = srot_bound(2).unwrap();
        assert_eq!((b.m_lo, b.mu_cap), (2, 4));
        assert!(!b.excludes(4));
        let b = srot_bound(68).unwrap();
        assert_eq!((b.m_lo, b.mu_cap), (31, 62));
        assert!(b.excludes(63));
        let b = srot_bound(200).unwrap();
        assert_eq!((b.m_lo, b.mu_cap), (85, 170));
        assert!(b.excludes(171));
        assert!(srot_bound(5).is_err());
    }

    #[test]
    fn amir_examples() {
        let b = amir_bound(10).unwrap();
        assert_eq!((b.m_lo, b.mu_cap), (2, 8));
        assert!(b.excludes(12));
        let b = amir_bound(2).unwrap();
        assert_eq!((b.m_lo, b.mu_cap), (1, 4));
        assert!(!b.excludes(4));
        let b = amir_bound(50).unwrap();
        assert_eq!((b.m_lo, b.mu_cap), (9, 36));
        assert!(b.excludes(46));
        assert!(amir_bound(25).is_err());
        assert!(!is_amir_pure(65));
        assert!(is_amir_pure(130));
    }

    #[test]
    fn parity_obstruction() {
        let b = arot_bound(13).unwrap();
        assert!(b.excludes(b.mu_cap - 1));
    }

    #[test]
    fn doubling_examples() {
        assert_eq!(doubling_bound(4, 1, 2, false), Ok(7));
        assert_eq!(doubling_bound(4, 0, 0, false), Ok(13));
        assert_eq!(doubling_bound(6, 0, 0, false), Ok(21));
        assert_eq!(doubling_bound(15, 0, 0, false), Ok(57));
        assert_eq!(doubling_bound(15, 0, 0, true), Ok(56));
        assert_eq!(doubling_bound(1, 0, 0, false), Ok(1));
        assert!(doubling_bound(1, 1, 0, false).is_err());
    }

    #[test]
    fn reduce_examples() {
        let r = reduce_theta(2, 1, Theta::THREE_QUARTER_PI);
        assert_eq!(r.theta, Theta::QUARTER_PI);
        assert!(r.transform.reflected && r.fully_reduced);
        let t = Theta::new(0.3).unwrap();
        let r = reduce_theta(2, 1, t);
        assert_eq!(r.theta, t);
        assert_eq!(r.transform, ThetaTransform::IDENTITY);
        let r = reduce_theta(2, 1, Theta::new(FRAC_PI_2 - 0.3).unwrap());
        assert!((r.theta.value() - 0.3).abs() < 1e-15);
        assert!(r.transform.swapped && !r.transform.reflected);
        let r = reduce_theta(2, 1, Theta::HALF_PI);
        assert_eq!(r.theta, Theta::ZERO);
        let r = reduce_theta(4, 0, Theta::new(2.0).unwrap());
        assert!(!r.fully_reduced);
        assert!((r.theta.value() - (1.5 * PI - 2.0)).abs() < 1e-15);
        let r = reduce_theta(4, 0, Theta::THREE_QUARTER_PI);
        assert_eq!(r.theta, Theta::THREE_QUARTER_PI);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn transform_identity(p in 0u32..9, q in 0u32..9, th in 0.0..PI,
                                  x in 0.0..PI, y in 0.0..PI) {
                let theta = Theta::new(th).unwrap();
                let r = reduce_theta(p, q, theta);
                let v = r.theta.value();
                if r.fully_reduced {
                    prop_assert!((0.0..=FRAC_PI_4).contains(&v));
                } else {
                    prop_assert!(v <= FRAC_PI_4 || v >= 3.0 * FRAC_PI_4);
                }
                let lhs = eval_phi(&EigenfunctionParams::new(p, q, theta), x, y);
                let (a, b) = r.transform.apply(x, y);
                let rhs = eval_phi(&EigenfunctionParams::new(p, q, r.theta), a, b);
                prop_assert!((lhs - r.transform.sign as f64 * rhs).abs() < 1e-12);
            }
        }
    }
}

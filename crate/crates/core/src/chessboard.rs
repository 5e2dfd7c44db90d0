//! Sign-rectangle localisation of the zero set of `Φ^θ_{p,q}`.
//!
//! The lines `x, y ∈ {odd · π/2p} ∪ {odd · π/2q}` cut the square into
//! rectangles on which `cos px cos py cos qx cos qy` has constant sign. For
//! `0 < θ < π/2` the zero set avoids the open white rectangles (product
//! positive) and crosses between black ones only at admissible corners, where
//! both coordinates belong to the same family of lines.
//!
//! Nodal domains meeting a white rectangle that touches the boundary are
//! outer domains, and so are those reached from such a rectangle through a
//! forbidden corner. Their total area bounds `|Ω_out|` from below, which
//! feeds the inner-area bound with an exact rational fraction.

use std::collections::VecDeque;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::nodal::has_common_zeros;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CellColor {
    White,
    Black,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CornerKind {
    Admissible,
    Forbidden,
}

/// Which cosine a cut line belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CutFamily {
    /// Zero of `cos p·`.
    P,
    /// Zero of `cos q·`.
    Q,
}

/// A cut line at `pos · π`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cut {
    pub pos: Ratio<i64>,
    pub family: CutFamily,
}

/// A cut intersection at `(x π, y π)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Corner {
    pub x: Ratio<i64>,
    pub y: Ratio<i64>,
    pub kind: CornerKind,
    /// The common family for admissible corners.
    pub lattice: Option<CutFamily>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chessboard {
    pub p: u32,
    pub q: u32,
    /// Sorted; the same on both axes.
    pub cuts: Vec<Cut>,
    /// Row-major, `colors[j * side + i]` for the cell in column `i`, row `j`.
    pub colors: Vec<CellColor>,
    /// Colours exchanged, as for `π/2 < θ < π`.
    pub swapped: bool,
}

fn odd_multiples(n: u32, family: CutFamily) -> impl Iterator<Item = Cut> {
    (0..n as i64).map(move |k| Cut {
        pos: Ratio::new(2 * k + 1, 2 * n as i64),
        family,
    })
}

/// The board for `p > q ≥ 1` when `cos px` and `cos qx` have no common zero.
pub fn build_chessboard(p: u32, q: u32) -> Result<Chessboard> {
    if q == 0 || p <= q {
        return domain(format!("chessboard needs p > q >= 1, got ({p},{q})"));
    }
    if has_common_zeros(p, q) {
        return domain(format!("cos {p}x and cos {q}x share zeros; no chessboard"));
    }
    let mut cuts: Vec<Cut> = odd_multiples(p, CutFamily::P)
        .chain(odd_multiples(q, CutFamily::Q))
        .collect();
    cuts.sort_by_key(|a| a.pos);
    let side = cuts.len() + 1;
    // crossing any cut flips exactly one of the four cosines
    let colors = (0..side * side)
        .map(|k| {
            let (i, j) = (k % side, k / side);
            if (i + j) % 2 == 0 {
                CellColor::White
            } else {
                CellColor::Black
            }
        })
        .collect();
    Ok(Chessboard {
        p,
        q,
        cuts,
        colors,
        swapped: false,
    })
}

impl Chessboard {
    /// Cells per side.
    pub fn side(&self) -> usize {
        self.cuts.len() + 1
    }

    pub fn color(&self, i: usize, j: usize) -> CellColor {
        self.colors[j * self.side() + i]
    }

    /// `[lo, hi]` of cell interval `i`, in units of π.
    pub fn interval(&self, i: usize) -> (Ratio<i64>, Ratio<i64>) {
        let lo = if i == 0 {
            Ratio::from_integer(0)
        } else {
            self.cuts[i - 1].pos
        };
        let hi = self.cuts.get(i).map_or(Ratio::from_integer(1), |c| c.pos);
        (lo, hi)
    }

    /// Kind of the corner at cut indices `(a, b)`.
    pub fn corner_kind(&self, a: usize, b: usize) -> CornerKind {
        if self.cuts[a].family == self.cuts[b].family {
            CornerKind::Admissible
        } else {
            CornerKind::Forbidden
        }
    }

    pub fn corners(&self) -> Vec<Corner> {
        let n = self.cuts.len();
        let mut out = Vec::with_capacity(n * n);
        for b in 0..n {
            for a in 0..n {
                let kind = self.corner_kind(a, b);
                out.push(Corner {
                    x: self.cuts[a].pos,
                    y: self.cuts[b].pos,
                    kind,
                    lattice: (kind == CornerKind::Admissible).then_some(self.cuts[a].family),
                });
            }
        }
        out
    }

    /// The board with colours exchanged.
    pub fn with_swap(&self) -> Self {
        let colors = self
            .colors
            .iter()
            .map(|c| match c {
                CellColor::White => CellColor::Black,
                CellColor::Black => CellColor::White,
            })
            .collect();
        Self {
            colors,
            swapped: !self.swapped,
            ..self.clone()
        }
    }
}

pub fn admissible_corners(p: u32, q: u32) -> Result<Vec<Corner>> {
    Ok(build_chessboard(p, q)?
        .corners()
        .into_iter()
        .filter(|c| c.kind == CornerKind::Admissible)
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlueMask {
    /// Row-major like [`Chessboard::colors`].
    pub blue: Vec<bool>,
    /// Blue area divided by `π²`.
    pub area_fraction: Ratio<i64>,
}

/// White cells sharing a boundary edge become blue; then every white cell
/// sharing a forbidden corner with a blue cell becomes blue, to a fixpoint.
pub fn blue_recolor(board: &Chessboard) -> BlueMask {
    let side = board.side();
    let mut blue = vec![false; side * side];
    let mut queue = VecDeque::new();
    for j in 0..side {
        for i in 0..side {
            let edge = i == 0 || j == 0 || i + 1 == side || j + 1 == side;
            if edge && board.color(i, j) == CellColor::White {
                blue[j * side + i] = true;
                queue.push_back((i, j));
            }
        }
    }
    while let Some((i, j)) = queue.pop_front() {
        for (di, dj) in [(-1i64, -1i64), (-1, 1), (1, -1), (1, 1)] {
            let (ni, nj) = (i as i64 + di, j as i64 + dj);
            if ni < 0 || nj < 0 || ni >= side as i64 || nj >= side as i64 {
                continue;
            }
            let (ni, nj) = (ni as usize, nj as usize);
            if blue[nj * side + ni] || board.color(ni, nj) != CellColor::White {
                continue;
            }
            // the shared corner sits on the cut between the two intervals
            let (a, b) = (i.min(ni), j.min(nj));
            if board.corner_kind(a, b) == CornerKind::Forbidden {
                blue[nj * side + ni] = true;
                queue.push_back((ni, nj));
            }
        }
    }
    let mut area = Ratio::from_integer(0);
    for j in 0..side {
        for i in 0..side {
            if blue[j * side + i] {
                let (x0, x1) = board.interval(i);
                let (y0, y1) = board.interval(j);
                area += (x1 - x0) * (y1 - y0);
            }
        }
    }
    BlueMask {
        blue,
        area_fraction: area,
    }
}

/// `|Ω_inn| / π² ≤ 1 − (blue fraction)` for `0 < θ < π/2`.
pub fn inner_area_upper(p: u32, q: u32) -> Result<Ratio<i64>> {
    let board = build_chessboard(p, q)?;
    Ok(Ratio::from_integer(1) - blue_recolor(&board).area_fraction)
}

/// Same bound for the swapped board (`π/2 < θ < π`).
pub fn inner_area_upper_swapped(p: u32, q: u32) -> Result<Ratio<i64>> {
    let board = build_chessboard(p, q)?.with_swap();
    Ok(Ratio::from_integer(1) - blue_recolor(&board).area_fraction)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ChessboardSummary {
    pub p: u32,
    pub q: u32,
    #[serde(with = "ratio_pair")]
    pub blue_fraction: Ratio<i64>,
    #[serde(with = "ratio_pair")]
    pub inner_upper: Ratio<i64>,
    pub swapped: bool,
}

mod ratio_pair {
    use num_rational::Ratio;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(r: &Ratio<i64>, s: S) -> Result<S::Ok, S::Error> {
        [*r.numer(), *r.denom()].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ratio<i64>, D::Error> {
        let [n, den] = <[i64; 2]>::deserialize(d)?;
        if den == 0 {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(Ratio::new(n, den))
    }
}

pub fn summarize(board: &Chessboard) -> ChessboardSummary {
    let blue = blue_recolor(board).area_fraction;
    ChessboardSummary {
        p: board.p,
        q: board.q,
        blue_fraction: blue,
        inner_upper: Ratio::from_integer(1) - blue,
        swapped: board.swapped,
    }
}

/// `(2pq)²`, a common denominator of every cell area.
pub fn area_denominator(p: u32, q: u32) -> i64 {
    let l = (2 * p as i64).lcm(&(2 * q as i64));
    l * l
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nodal::{eval_phi, EigenfunctionParams, Theta};
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn two_one_board() {
        let b = build_chessboard(2, 1).unwrap();
        let pos: Vec<_> = b.cuts.iter().map(|c| c.pos).collect();
        assert_eq!(
            pos,
            vec![Ratio::new(1, 4), Ratio::new(1, 2), Ratio::new(3, 4)]
        );
        assert_eq!(b.side(), 4);
        assert_eq!(admissible_corners(2, 1).unwrap().len(), 5);
    }

    #[test]
    fn corner_counts() {
        assert_eq!(admissible_corners(8, 3).unwrap().len(), 73);
        assert_eq!(admissible_corners(9, 4).unwrap().len(), 97);
        assert_eq!(admissible_corners(10, 4).unwrap().len(), 116);
        let b = build_chessboard(8, 3).unwrap();
        let eights = b.cuts.iter().filter(|c| c.family == CutFamily::P).count();
        assert_eq!((eights, b.cuts.len() - eights), (8, 3));
    }

    #[test]
    fn preconditions() {
        assert!(build_chessboard(1, 0).is_err());
        assert!(build_chessboard(3, 1).is_err());
        assert!(build_chessboard(2, 3).is_err());
        assert!(build_chessboard(10, 4).is_ok());
        assert!(inner_area_upper(9, 3).is_err());
    }

    /// Cell colours against a floating point evaluation at the cell centre.
    #[test]
    fn colors_match_sign() {
        for (p, q) in [(2u32, 1u32), (8, 3), (9, 4), (10, 4), (7, 2)] {
            let b = build_chessboard(p, q).unwrap();
            for j in 0..b.side() {
                for i in 0..b.side() {
                    let mid = |k| {
                        let (lo, hi) = b.interval(k);
                        let m = (lo + hi) / 2;
                        *m.numer() as f64 / *m.denom() as f64 * PI
                    };
                    let (x, y) = (mid(i), mid(j));
                    let prod = (p as f64 * x).cos()
                        * (p as f64 * y).cos()
                        * (q as f64 * x).cos()
                        * (q as f64 * y).cos();
                    let expected = if prod > 0.0 {
                        CellColor::White
                    } else {
                        CellColor::Black
                    };
                    assert_eq!(b.color(i, j), expected, "({p},{q}) cell {i},{j}");
                }
            }
        }
    }

    #[test]
    fn blue_fractions() {
        let f = |p, q| blue_recolor(&build_chessboard(p, q).unwrap()).area_fraction;
        assert_eq!(f(8, 3), Ratio::new(3, 8));
        assert_eq!(f(9, 4), Ratio::new(211, 648));
        assert_eq!(f(10, 4), Ratio::new(21, 100));
        assert_eq!(inner_area_upper(8, 3).unwrap(), Ratio::new(5, 8));
        assert_eq!(inner_area_upper(9, 4).unwrap(), Ratio::new(437, 648));
        assert_eq!(inner_area_upper(10, 4).unwrap(), Ratio::new(79, 100));
    }

    #[test]
    fn denominators() {
        for (p, q) in [(8u32, 3u32), (9, 4), (10, 4), (5, 2), (11, 6)] {
            let f = blue_recolor(&build_chessboard(p, q).unwrap()).area_fraction;
            let d = 4 * (p * q * p * q) as i64;
            assert_eq!(d % f.denom(), 0, "({p},{q}) {f}");
            assert_eq!(area_denominator(p, q) % f.denom(), 0);
        }
    }

    #[test]
    fn summary_json() {
        let s = summarize(&build_chessboard(8, 3).unwrap());
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(v["blueFraction"], serde_json::json!([3, 8]));
        assert_eq!(v["innerUpper"], serde_json::json!([5, 8]));
        assert_eq!(serde_json::from_value::<ChessboardSummary>(v).unwrap(), s);
    }

    fn to_f64(r: Ratio<i64>) -> f64 {
        *r.numer() as f64 / *r.denom() as f64 * PI
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        /// Near-zeros of `Φ` lie in closed black cells or next to an admissible corner.
        #[test]
        fn zero_set_in_black_cells(
            pq in prop::sample::select(vec![(2u32, 1u32), (5, 2), (8, 3), (9, 4), (10, 4)]),
            t in 0.01f64..(FRAC_PI_2 - 0.01),
        ) {
            let (p, q) = pq;
            let b = build_chessboard(p, q).unwrap();
            let prm = EigenfunctionParams::new(p, q, Theta::new(t).unwrap());
            let n = 400;
            let h = PI / n as f64;
            let bounds: Vec<(f64, f64)> = (0..b.side()).map(|i| {
                let (lo, hi) = b.interval(i);
                (to_f64(lo), to_f64(hi))
            }).collect();
            let admissible: Vec<(f64, f64)> = b
                .corners()
                .into_iter()
                .filter(|c| c.kind == CornerKind::Admissible)
                .map(|c| (to_f64(c.x), to_f64(c.y)))
                .collect();
            for j in 0..=n {
                for i in 0..=n {
                    let (x, y) = (i as f64 * h, j as f64 * h);
                    if eval_phi(&prm, x, y).abs() >= 1e-3 {
                        continue;
                    }
                    let near_corner = admissible.iter().any(|&(cx, cy)| (cx - x).abs() <= h && (cy - y).abs() <= h);
                    let in_black = (0..b.side()).any(|ci| {
                        (0..b.side()).any(|cj| {
                            let ((x0, x1), (y0, y1)) = (bounds[ci], bounds[cj]);
                            b.color(ci, cj) == CellColor::Black
                                && x >= x0 - 1e-12 && x <= x1 + 1e-12
                                && y >= y0 - 1e-12 && y <= y1 + 1e-12
                        })
                    });
                    prop_assert!(in_black || near_corner, "({},{}) θ={} at ({},{})", p, q, t, x, y);
                }
            }
        }
    }
}

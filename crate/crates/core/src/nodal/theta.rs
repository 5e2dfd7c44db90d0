//! The mixing angle θ, with exact tags for the angles where the eigenfunction
//! degenerates to a product or to the (anti-)diagonal combination.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, PI};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ThetaTag {
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "pi/4")]
    QuarterPi,
    #[serde(rename = "pi/2")]
    HalfPi,
    #[serde(rename = "3pi/4")]
    ThreeQuarterPi,
}

impl ThetaTag {
    pub const ALL: [ThetaTag; 4] = [
        Self::Zero,
        Self::QuarterPi,
        Self::HalfPi,
        Self::ThreeQuarterPi,
    ];

    pub fn value(self) -> f64 {
        match self {
            Self::Zero => 0.0,
            Self::QuarterPi => FRAC_PI_4,
            Self::HalfPi => FRAC_PI_2,
            Self::ThreeQuarterPi => 3.0 * FRAC_PI_4,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Zero => "0",
            Self::QuarterPi => "pi/4",
            Self::HalfPi => "pi/2",
            Self::ThreeQuarterPi => "3pi/4",
        }
    }

    /// `(cos θ, sin θ)` with the irrational entries correctly rounded.
    pub fn cos_sin(self) -> (f64, f64) {
        match self {
            Self::Zero => (1.0, 0.0),
            Self::QuarterPi => (FRAC_1_SQRT_2, FRAC_1_SQRT_2),
            Self::HalfPi => (0.0, 1.0),
            Self::ThreeQuarterPi => (-FRAC_1_SQRT_2, FRAC_1_SQRT_2),
        }
    }

    fn from_value(value: f64) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.value() == value)
    }
}

/// An angle in `[0, π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Theta {
    value: f64,
    tag: Option<ThetaTag>,
}

impl Theta {
    pub const ZERO: Theta = Theta::tagged(ThetaTag::Zero);
    pub const QUARTER_PI: Theta = Theta::tagged(ThetaTag::QuarterPi);
    pub const HALF_PI: Theta = Theta::tagged(ThetaTag::HalfPi);
    pub const THREE_QUARTER_PI: Theta = Theta::tagged(ThetaTag::ThreeQuarterPi);

    pub const fn tagged(tag: ThetaTag) -> Self {
        let value = match tag {
            ThetaTag::Zero => 0.0,
            ThetaTag::QuarterPi => FRAC_PI_4,
            ThetaTag::HalfPi => FRAC_PI_2,
            ThetaTag::ThreeQuarterPi => 3.0 * FRAC_PI_4,
        };
        Self {
            value,
            tag: Some(tag),
        }
    }

    /// A value in `[0, π)`. Values bitwise equal to a special angle get its tag.
    pub fn new(value: f64) -> Result<Self> {
        if !(0.0..PI).contains(&value) {
            return domain(format!("theta must lie in [0, pi), got {value}"));
        }
        Ok(Self {
            value,
            tag: ThetaTag::from_value(value),
        })
    }

    /// Reduces an arbitrary finite angle modulo π. `Φ^{θ+π} = −Φ^θ`, so the
    /// nodal set is unchanged.
    pub fn wrapped(value: f64) -> Result<Self> {
        if !value.is_finite() {
            return domain(format!("theta must be finite, got {value}"));
        }
        let mut v = value.rem_euclid(PI);
        if v >= PI {
            v = 0.0;
        }
        Self::new(v)
    }

    pub fn value(self) -> f64 {
        self.value
    }

    pub fn tag(self) -> Option<ThetaTag> {
        self.tag
    }

    pub fn cos_sin(self) -> (f64, f64) {
        match self.tag {
            Some(t) => t.cos_sin(),
            None => (self.value.cos(), self.value.sin()),
        }
    }

    /// `θ` is `0` or `π/2`: the eigenfunction is a single product.
    pub fn is_product(self) -> bool {
        matches!(self.tag, Some(ThetaTag::Zero | ThetaTag::HalfPi))
    }
}

impl fmt::Display for Theta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tag {
            Some(t) => f.write_str(t.as_str()),
            None => write!(f, "{}", self.value),
        }
    }
}

impl FromStr for Theta {
    type Err = Error;

    /// Accepts a decimal number or `[a][*]pi[/b]`, e.g. `pi/4`, `3pi/4`,
    /// `3*pi/8`, `pi`. The result is reduced modulo π.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase().replace(' ', "");
        let bad = || Error::Domain(format!("cannot parse angle '{s}'"));
        let Some(at) = t.find("pi") else {
            return t.parse::<f64>().map_err(|_| bad()).and_then(Self::wrapped);
        };
        let head = t[..at].trim_end_matches('*');
        let tail = &t[at + 2..];
        let num: i64 = match head {
            "" => 1,
            "-" => -1,
            h => h.parse().map_err(|_| bad())?,
        };
        let den: i64 = match tail {
            "" => 1,
            rest => rest
                .strip_prefix('/')
                .ok_or_else(bad)?
                .parse()
                .map_err(|_| bad())?,
        };
        if den <= 0 {
            return Err(bad());
        }
        // exact reduction of num/den modulo 1
        let r = num.rem_euclid(den);
        let tag = match (4 * r) % den == 0 {
            true => match 4 * r / den {
                0 => Some(ThetaTag::Zero),
                1 => Some(ThetaTag::QuarterPi),
                2 => Some(ThetaTag::HalfPi),
                _ => Some(ThetaTag::ThreeQuarterPi),
            },
            false => None,
        };
        match tag {
            Some(tag) => Ok(Self::tagged(tag)),
            None => Self::new(PI * r as f64 / den as f64),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_symbolic() {
        assert_eq!("pi/4".parse::<Theta>().unwrap(), Theta::QUARTER_PI);
        assert_eq!("3pi/4".parse::<Theta>().unwrap(), Theta::THREE_QUARTER_PI);
        assert_eq!("3*pi/4".parse::<Theta>().unwrap(), Theta::THREE_QUARTER_PI);
        assert_eq!("pi".parse::<Theta>().unwrap(), Theta::ZERO);
        assert_eq!("2pi/4".parse::<Theta>().unwrap(), Theta::HALF_PI);
        assert_eq!("-pi/4".parse::<Theta>().unwrap(), Theta::THREE_QUARTER_PI);
        let t: Theta = "pi/8".parse().unwrap();
        assert_eq!(t.tag(), None);
        assert!((t.value() - PI / 8.0).abs() < 1e-16);
        let t: Theta = "0.1".parse().unwrap();
        assert_eq!(t.value(), 0.1);
        assert!("pi/0".parse::<Theta>().is_err());
        assert!("abc".parse::<Theta>().is_err());
        assert!("2x".parse::<Theta>().is_err());
    }

    #[test]
    fn exact_tags() {
        assert_eq!(
            Theta::new(FRAC_PI_4).unwrap().tag(),
            Some(ThetaTag::QuarterPi)
        );
        assert_eq!(Theta::new(0.0).unwrap().cos_sin(), (1.0, 0.0));
        assert_eq!(Theta::HALF_PI.cos_sin(), (0.0, 1.0));
        assert!(Theta::new(PI).is_err());
        assert!(Theta::new(-0.1).is_err());
        assert!((Theta::wrapped(PI + 0.25).unwrap().value() - 0.25).abs() < 1e-15);
    }
}

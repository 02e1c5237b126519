//! Exact rational arithmetic helpers.
//!
//! All prior sums, mixture weights and cpdf values are kept as exact
//! rationals; floating point appears only at reporting time.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub type Rat = BigRational;

/// 2^-n as an exact rational.
pub fn pow2_neg(n: u32) -> Rat {
    Rat::new(BigInt::one(), BigInt::one() << n)
}

/// 2^n as an exact rational.
pub fn pow2(n: u32) -> Rat {
    Rat::from_integer(BigInt::one() << n)
}

pub fn rat_from_u64(n: u64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact conversion of a finite f64; panics on NaN/inf, which never
/// reach this path (unit constants are finite by construction).
pub fn rat_from_f64(x: f64) -> Rat {
    Rat::from_float(x).expect("finite float")
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// -log2 of a positive rational, in 64-bit floating point (report-time only).
pub fn neg_log2(r: &Rat) -> f64 {
    debug_assert!(r.is_positive());
    let num = r.numer().to_f64().unwrap_or(f64::NAN);
    let den = r.denom().to_f64().unwrap_or(f64::NAN);
    den.log2() - num.log2()
}

/// Serialization form for exact rationals: arbitrary-precision decimal
/// strings for numerator and denominator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatJson {
    pub num: String,
    pub den: String,
}

impl From<&Rat> for RatJson {
    fn from(r: &Rat) -> Self {
        RatJson {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

impl RatJson {
    pub fn to_rat(&self) -> Option<Rat> {
        let num: BigInt = self.num.parse().ok()?;
        let den: BigInt = self.den.parse().ok()?;
        if den.is_zero() {
            return None;
        }
        Some(Rat::new(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow2_values() {
        assert_eq!(pow2_neg(4), Rat::new(1.into(), 16.into()));
        assert_eq!(pow2(3), Rat::from_integer(8.into()));
        assert_eq!(pow2_neg(0), Rat::one());
    }

    #[test]
    fn json_round_trip() {
        let r = Rat::new(3.into(), 65536.into());
        let j = RatJson::from(&r);
        assert_eq!(j.num, "3");
        assert_eq!(j.den, "65536");
        assert_eq!(j.to_rat().unwrap(), r);
    }

    #[test]
    fn neg_log2_matches_known() {
        let r = pow2_neg(8);
        assert!((neg_log2(&r) - 8.0).abs() < 1e-12);
    }
}

//! Exact rationals used throughout.

use crate::error::{parse_err, Result};
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

pub type Rat = Rational64;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(n)
}

pub fn half() -> Rat {
    rat(1, 2)
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let n: i64 = num.parse().map_err(|_| parse_err("rational", s))?;
    let d: i64 = den.parse().map_err(|_| parse_err("rational", s))?;
    if d == 0 {
        return Err(parse_err("rational", s));
    }
    Ok(Rat::new(n, d))
}

pub fn is_integer(r: Rat) -> bool {
    r.is_integer()
}

/// True when `r` lies in 1/2 + Z.
pub fn is_half_odd(r: Rat) -> bool {
    (r - half()).is_integer()
}

pub fn is_natural(r: Rat) -> bool {
    r.is_integer() && !r.is_negative()
}

pub fn is_positive_integer(r: Rat) -> bool {
    r.is_integer() && r.is_positive()
}

/// Exact integer value, if any.
pub fn to_i64(r: Rat) -> Option<i64> {
    r.is_integer().then(|| r.to_integer())
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions() {
        assert_eq!(parse_rat("-7/2").unwrap(), rat(-7, 2));
        assert_eq!(parse_rat(" 3 ").unwrap(), int(3));
        assert_eq!(parse_rat("6/4").unwrap(), rat(3, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn classes() {
        assert!(is_half_odd(rat(-5, 2)));
        assert!(!is_half_odd(int(2)));
        assert!(is_natural(int(0)));
        assert!(!is_positive_integer(int(0)));
    }
}

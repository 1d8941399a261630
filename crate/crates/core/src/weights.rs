//! Weights of G(3) written as symbols `[d|x,y,z]` with `x+y+z = 0`.
//!
//! The symbol encodes `d*delta + (x,y,z)` where the second part is a point of
//! the plane spanned by `eps1, eps2, eps3` (with `eps1+eps2+eps3 = 0`).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{parse_err, Error, Result};
use crate::rational::{int, parse_rat, rat, Rat};
use crate::rootdata::{PosRoot, Root};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    d: Rat,
    x: Rat,
    y: Rat,
    z: Rat,
}

impl Weight {
    /// Builds `[d|x,y,-x-y]`.
    pub fn new(d: Rat, x: Rat, y: Rat) -> Self {
        Weight { d, x, y, z: -x - y }
    }

    pub fn symbol(d: Rat, x: Rat, y: Rat, z: Rat) -> Result<Self> {
        if !(x + y + z).is_zero() {
            return Err(Error::NotTraceless(format!("{x},{y},{z}")));
        }
        Ok(Weight { d, x, y, z })
    }

    /// Shorthand for tests and tables: numerators over a common denominator.
    pub fn frac(num: [i64; 4], den: i64) -> Self {
        let w = Weight {
            d: rat(num[0], den),
            x: rat(num[1], den),
            y: rat(num[2], den),
            z: rat(num[3], den),
        };
        assert!((w.x + w.y + w.z).is_zero(), "symbol {w} is not traceless");
        w
    }

    pub fn zero() -> Self {
        Weight::new(Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn d(&self) -> Rat {
        self.d
    }
    pub fn x(&self) -> Rat {
        self.x
    }
    pub fn y(&self) -> Rat {
        self.y
    }
    pub fn z(&self) -> Rat {
        self.z
    }

    /// The `i`-th plane coordinate, `i` in 1..=3.
    pub fn coord(&self, i: usize) -> Rat {
        match i {
            1 => self.x,
            2 => self.y,
            3 => self.z,
            _ => panic!("coordinate index {i} out of range"),
        }
    }

    pub fn coords(&self) -> [Rat; 3] {
        [self.x, self.y, self.z]
    }

    pub fn from_coords(d: Rat, c: [Rat; 3]) -> Self {
        Weight { d, x: c[0], y: c[1], z: c[2] }
    }

    /// `d*delta + a*omega1 + b*omega2`.
    pub fn from_fundamental(d: Rat, a: Rat, b: Rat) -> Self {
        let two = int(2);
        Weight::new(d, b / two, (int(3) * a + b) / two)
    }

    /// Inverse of [`Weight::from_fundamental`]: `(d, a, b)`.
    pub fn to_fundamental(&self) -> (Rat, Rat, Rat) {
        (self.d, int(2) * (self.y - self.x) / int(3), int(2) * self.x)
    }

    /// `c_delta*delta + e1*eps1 + e2*eps2`.
    pub fn from_basis(c_delta: Rat, e1: Rat, e2: Rat) -> Self {
        let h = rat(1, 2);
        Weight::new(c_delta, e1 - h * e2, e2 - h * e1)
    }

    /// Coefficients `(c_delta, e1, e2)` in the basis `delta, eps1, eps2`.
    pub fn to_basis(&self) -> (Rat, Rat, Rat) {
        let three = int(3);
        (
            self.d,
            (int(2) * self.y + int(4) * self.x) / three,
            (int(4) * self.y + int(2) * self.x) / three,
        )
    }

    pub fn delta() -> Self {
        Weight::new(int(1), Rat::zero(), Rat::zero())
    }

    /// `eps_i` for `i` in 1..=3.
    pub fn eps(i: usize) -> Self {
        let h = rat(-1, 2);
        let mut c = [h; 3];
        c[i - 1] = int(1);
        Weight::from_coords(Rat::zero(), c)
    }

    pub fn rho() -> Self {
        Weight::new(rat(-5, 2), rat(1, 2), int(2))
    }

    pub fn scale(&self, r: Rat) -> Self {
        Weight { d: self.d * r, x: self.x * r, y: self.y * r, z: self.z * r }
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight { d: self.d + o.d, x: self.x + o.x, y: self.y + o.y, z: self.z + o.z }
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        Weight { d: self.d - o.d, x: self.x - o.x, y: self.y - o.y, z: self.z - o.z }
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight { d: -self.d, x: -self.x, y: -self.y, z: -self.z }
    }
}

impl Mul<Rat> for Weight {
    type Output = Weight;
    fn mul(self, r: Rat) -> Weight {
        self.scale(r)
    }
}

impl Mul<i64> for Weight {
    type Output = Weight;
    fn mul(self, r: i64) -> Weight {
        self.scale(int(r))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}|{},{},{}]", self.d, self.x, self.y, self.z)
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Accepts `d|x,y,z` (brackets optional) or `F:d;a;b` in fundamental
    /// coordinates.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix("F:") {
            let parts: Vec<&str> = rest.split(';').collect();
            if parts.len() != 3 {
                return Err(parse_err("fundamental weight", s));
            }
            return Ok(Weight::from_fundamental(
                parse_rat(parts[0])?,
                parse_rat(parts[1])?,
                parse_rat(parts[2])?,
            ));
        }
        let t = t.strip_prefix('[').unwrap_or(t);
        let t = t.strip_suffix(']').unwrap_or(t);
        let (d, rest) = t.split_once('|').ok_or_else(|| parse_err("weight symbol", s))?;
        let parts: Vec<&str> = rest.split(',').collect();
        if parts.len() != 3 {
            return Err(parse_err("weight symbol", s));
        }
        Weight::symbol(
            parse_rat(d)?,
            parse_rat(parts[0])?,
            parse_rat(parts[1])?,
            parse_rat(parts[2])?,
        )
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The invariant form: `(delta,delta) = -2`, `(eps_i,eps_i) = 2`,
/// `(eps_i,eps_j) = -1`.
pub fn bilinear_form(a: &Weight, b: &Weight) -> Rat {
    int(-2) * a.d * b.d + rat(4, 3) * (a.x * b.x + a.y * b.y + a.z * b.z)
}

/// Pairing with the coroot of an even root.
pub fn coroot_pairing(l: &Weight, g: Root) -> Result<Rat> {
    let two = int(2);
    let t = rat(2, 3);
    let v = match g.base() {
        PosRoot::TwoDelta => l.d,
        PosRoot::Eps1 => two * l.x,
        PosRoot::Eps2 => two * l.y,
        PosRoot::NegEps3 => -two * l.z,
        PosRoot::Eps2MinusEps1 => t * (l.y - l.x),
        PosRoot::Eps1MinusEps3 => t * (l.x - l.z),
        PosRoot::Eps2MinusEps3 => t * (l.y - l.z),
        _ => return Err(Error::NotEven(g.to_string())),
    };
    Ok(if g.is_negative() { -v } else { v })
}

/// Scalar of the Casimir element on modules with shifted highest weight `l`,
/// up to an additive constant: `-(3/2)(l,l)`.
pub fn casimir_scalar(l: &Weight) -> Rat {
    let two = int(2);
    int(3) * l.d * l.d - two * (l.x * l.x + l.y * l.y + l.z * l.z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::Root;

    #[test]
    fn symbol_roundtrip() {
        let w: Weight = "[-7/2|1/4,13/4,-7/2]".parse().unwrap();
        assert_eq!(w.to_string(), "[-7/2|1/4,13/4,-7/2]");
        assert_eq!("-7/2|1/4,13/4,-7/2".parse::<Weight>().unwrap(), w);
        assert!("1|1,1,1".parse::<Weight>().is_err());
    }

    #[test]
    fn fundamental_coordinates() {
        let w = Weight::from_fundamental(int(1), int(1), int(0));
        assert_eq!(w, Weight::frac([2, 0, 3, -3], 2));
        assert_eq!(w.to_fundamental(), (int(1), int(1), int(0)));
        let p: Weight = "F:-5/2;1;1".parse().unwrap();
        assert_eq!(p, Weight::rho());
    }

    #[test]
    fn basic_vectors() {
        assert_eq!(Weight::eps(1), Weight::frac([0, 2, -1, -1], 2));
        assert_eq!(Weight::eps(1) + Weight::eps(2) + Weight::eps(3), Weight::zero());
        assert_eq!(Weight::from_basis(int(1), int(0), int(0)), Weight::delta());
        let w = Weight::frac([3, 1, 5, -6], 4);
        let (c, e1, e2) = w.to_basis();
        assert_eq!(Weight::from_basis(c, e1, e2), w);
    }

    #[test]
    fn form_values() {
        let e = |i| Weight::eps(i);
        assert_eq!(bilinear_form(&Weight::delta(), &Weight::delta()), int(-2));
        assert_eq!(bilinear_form(&e(1), &e(1)), int(2));
        assert_eq!(bilinear_form(&e(1), &e(2)), int(-1));
        let a = Weight::delta() + e(3);
        assert_eq!(bilinear_form(&a, &a), int(0));
    }

    #[test]
    fn coroot_matches_form() {
        let l = Weight::frac([3, 1, 7, -8], 4);
        for g in Root::even_positive() {
            let v = g.vector();
            let expected = int(2) * bilinear_form(&l, &v) / bilinear_form(&v, &v);
            assert_eq!(coroot_pairing(&l, g).unwrap(), expected, "{g}");
            assert_eq!(coroot_pairing(&l, g.negate()).unwrap(), -expected);
        }
        assert!(coroot_pairing(&l, Root::delta()).is_err());
    }

    #[test]
    fn casimir_is_form_multiple() {
        let l = Weight::frac([5, -3, 7, -4], 6);
        assert_eq!(casimir_scalar(&l), rat(-3, 2) * bilinear_form(&l, &l));
    }
}

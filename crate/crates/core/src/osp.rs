//! The companion system osp(3|2): weights `a delta + b eps`, linkage, and the
//! closed-form tilting characters.

use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::characters::VermaSum;
use crate::error::{parse_err, Error, Result};
use crate::rational::{half, int, is_half_odd, parse_rat, Rat};
use crate::rootdata::FinDimWeights;
use crate::system::{EvenRoot, RootSystem};

/// `a delta + b eps`, rho-shifted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OspWeight {
    a: Rat,
    b: Rat,
}

impl OspWeight {
    pub fn new(a: Rat, b: Rat) -> Self {
        OspWeight { a, b }
    }
    pub fn a(&self) -> Rat {
        self.a
    }
    pub fn b(&self) -> Rat {
        self.b
    }
    pub fn delta() -> Self {
        OspWeight::new(int(1), Rat::zero())
    }
    pub fn eps() -> Self {
        OspWeight::new(Rat::zero(), int(1))
    }
    pub fn zero() -> Self {
        OspWeight::new(Rat::zero(), Rat::zero())
    }
}

impl Add for OspWeight {
    type Output = OspWeight;
    fn add(self, o: OspWeight) -> OspWeight {
        OspWeight::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for OspWeight {
    type Output = OspWeight;
    fn sub(self, o: OspWeight) -> OspWeight {
        OspWeight::new(self.a - o.a, self.b - o.b)
    }
}

impl Mul<Rat> for OspWeight {
    type Output = OspWeight;
    fn mul(self, r: Rat) -> OspWeight {
        OspWeight::new(self.a * r, self.b * r)
    }
}

impl fmt::Display for OspWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}|{}]", self.a, self.b)
    }
}

impl FromStr for OspWeight {
    type Err = Error;
    /// Accepts `a|b` with optional brackets.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('[').unwrap_or(t);
        let t = t.strip_suffix(']').unwrap_or(t);
        let (a, b) = t.split_once('|').ok_or_else(|| parse_err("osp(3|2) weight", s))?;
        Ok(OspWeight::new(parse_rat(a)?, parse_rat(b)?))
    }
}

impl Serialize for OspWeight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for OspWeight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// `(delta,delta) = -1`, `(eps,eps) = 1`, `(delta,eps) = 0`.
pub fn osp_form(x: &OspWeight, y: &OspWeight) -> Rat {
    -x.a * y.a + x.b * y.b
}

/// Positive isotropic roots orthogonal to `l`.
pub fn osp_atypical_roots(l: &OspWeight) -> Vec<OspWeight> {
    [OspWeight::delta() + OspWeight::eps(), OspWeight::delta() - OspWeight::eps()]
        .into_iter()
        .filter(|r| osp_form(l, r).is_zero())
        .collect()
}

/// Generators of `W_l` as sign changes: `(flip a, flip b)`.
fn integral_flips(l: &OspWeight) -> (bool, bool) {
    (is_half_odd(l.a), (l.b * int(2)).is_integer())
}

/// The elements of `W_l`, as pairs of sign changes.
fn integral_group(l: &OspWeight) -> Vec<(bool, bool)> {
    let (fa, fb) = integral_flips(l);
    let mut out = vec![(false, false)];
    if fa {
        out.push((true, false));
    }
    if fb {
        out.push((false, true));
    }
    if fa && fb {
        out.push((true, true));
    }
    out
}

fn act(w: (bool, bool), l: &OspWeight) -> OspWeight {
    let a = if w.0 { -l.a } else { l.a };
    let b = if w.1 { -l.b } else { l.b };
    OspWeight::new(a, b)
}

pub fn osp_linked(l: &OspWeight, mu: &OspWeight) -> bool {
    let atyp = osp_atypical_roots(l);
    integral_group(l).into_iter().any(|w| {
        let nu = act(w, mu) - *l;
        if atyp.is_empty() {
            return nu == OspWeight::zero();
        }
        atyp.iter().any(|al| nu.a.is_integer() && nu == *al * nu.a)
    })
}

/// osp(3|2) with simple roots `delta - eps`, `eps`.
#[derive(Clone, Copy, Debug)]
pub struct Osp32;

impl RootSystem for Osp32 {
    type Weight = OspWeight;
    const NAME: &'static str = "osp32";

    fn zero() -> OspWeight {
        OspWeight::zero()
    }
    fn form(a: &OspWeight, b: &OspWeight) -> Rat {
        osp_form(a, b)
    }
    fn even_roots() -> Vec<EvenRoot<OspWeight>> {
        vec![
            EvenRoot { vector: OspWeight::delta() * int(2), half: true },
            EvenRoot { vector: OspWeight::eps(), half: false },
        ]
    }
    fn isotropic_roots() -> Vec<OspWeight> {
        vec![OspWeight::delta() - OspWeight::eps(), OspWeight::delta() + OspWeight::eps()]
    }
    fn nonisotropic_odd_roots() -> Vec<OspWeight> {
        vec![OspWeight::delta(), OspWeight::eps()]
    }
    fn simple_coordinates(w: &OspWeight) -> Vec<Rat> {
        vec![w.a, w.a + w.b]
    }
    fn linked(l: &OspWeight, mu: &OspWeight) -> bool {
        osp_linked(l, mu)
    }
    /// The standard module, of dimension 3|2.
    fn translation_module() -> FinDimWeights<OspWeight> {
        let (d, e) = (OspWeight::delta(), OspWeight::eps());
        let z = OspWeight::zero();
        let m = |w: OspWeight| (w, 1);
        FinDimWeights {
            entries: vec![m(d), m(z - d), m(e), m(z - e), m(z)],
        }
    }
    fn translation_starts() -> Vec<OspWeight> {
        vec![OspWeight::delta(), OspWeight::eps()]
    }
}

/// Typical weights: the sum over orbit points below `l` in the Bruhat order
/// of `W_l`, which for commuting sign changes is inclusion of the flip sets.
fn typical_table(l: &OspWeight) -> VermaSum<OspWeight> {
    let (fa, fb) = integral_flips(l);
    let flip_a = fa && l.a.is_positive();
    let flip_b = fb && l.b.is_positive();
    let anti = act((flip_a, flip_b), l);
    let mut pts = Vec::new();
    for ua in [false, true] {
        for ub in [false, true] {
            if (!ua || flip_a) && (!ub || flip_b) {
                pts.push(act((ua, ub), &anti));
            }
        }
    }
    VermaSum::from_set(pts)
}

/// The closed-form tilting character of `T_l`.
pub fn table_osp32(l: &OspWeight) -> VermaSum<OspWeight> {
    if osp_atypical_roots(l).is_empty() {
        return typical_table(l);
    }
    let (a, b) = (l.a, l.b);
    let w = |x: Rat, y: Rat| OspWeight::new(x, y);
    let set = |v: Vec<OspWeight>| VermaSum::from_set(v);
    if !(a * int(2)).is_integer() {
        let alpha = if a == b {
            OspWeight::delta() + OspWeight::eps()
        } else {
            OspWeight::delta() - OspWeight::eps()
        };
        return set(vec![*l, *l - alpha]);
    }
    let one = int(1);
    let j = a.abs();
    let up = a.is_positive();
    let plus = b.is_positive();
    if a.is_integer() {
        if a.is_zero() {
            return set(vec![w(a, a), w(-one, -one), w(-one, one)]);
        }
        let p = j - one;
        let q = j + one;
        return match (up, plus) {
            (true, true) if j == one => {
                set(vec![w(one, one), w(one, -one), w(-one, one), w(-one, -one), OspWeight::zero()])
            }
            (true, true) => set(vec![
                w(j, j),
                w(j, -j),
                w(-j, j),
                w(-j, -j),
                w(p, p),
                w(p, -p),
                w(-p, p),
                w(-p, -p),
            ]),
            (true, false) if j == one => set(vec![w(one, -one), w(-one, -one), OspWeight::zero()]),
            (true, false) => set(vec![w(j, -j), w(-j, -j), w(p, -p), w(-p, -p)]),
            (false, true) => set(vec![w(-j, j), w(-j, -j), w(-q, q), w(-q, -q)]),
            (false, false) => set(vec![w(-j, -j), w(-q, -q)]),
        };
    }
    let h = half();
    let p = j - one;
    let q = j + one;
    match (up, plus) {
        (true, true) if j == h => set(vec![w(h, h), w(h, -h), w(-h, -h), w(-h, h)]),
        (true, false) if j == h => set(vec![w(h, -h), w(-h, h), w(-h, -h), w(-h * int(3), -h * int(3))]),
        (true, true) => set(vec![w(j, j), w(j, -j), w(p, p), w(p, -p)]),
        (false, true) => set(vec![w(-j, j), w(-j, -j), w(-q, q), w(-q, -q)]),
        (true, false) => set(vec![w(j, -j), w(p, -p)]),
        (false, false) => set(vec![w(-j, -j), w(-q, -q)]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn w(s: &str) -> OspWeight {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("1/2|-1/2").to_string(), "[1/2|-1/2]");
        assert!("1,2".parse::<OspWeight>().is_err());
    }

    #[test]
    fn simple_coordinates_of_roots() {
        for (r, _) in Osp32::positive_roots() {
            let c = Osp32::simple_coordinates(&r);
            assert!(c.iter().all(|x| x.is_integer() && !x.is_negative()), "{r}");
        }
    }

    #[test]
    fn printed_lines() {
        assert_eq!(table_osp32(&w("0|0")), VermaSum::from_set([w("0|0"), w("-1|-1"), w("-1|1")]));
        assert_eq!(table_osp32(&w("-1/2|-1/2")), VermaSum::from_set([w("-1/2|-1/2"), w("-3/2|-3/2")]));
        let l = OspWeight::new(rat(1, 3), rat(1, 3));
        assert_eq!(table_osp32(&l).len(), 2);
        assert_eq!(table_osp32(&w("3|3")).len(), 8);
    }

    #[test]
    fn linkage() {
        assert!(osp_linked(&w("0|0"), &w("2|-2")));
        assert!(osp_linked(&w("1/2|1/2"), &w("-3/2|3/2")));
        assert!(!osp_linked(&w("1/3|1/3"), &w("-1/3|1/3")));
    }
}

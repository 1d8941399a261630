//! Roots of G(3), the four conjugacy-class simple systems, and the adjoint
//! module used for translation.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{parse_err, Error, Result};
use crate::rational::{int, Rat};
use crate::weights::{bilinear_form, Weight};

/// The fourteen positive roots for the distinguished Borel subalgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PosRoot {
    TwoDelta,
    Eps1,
    Eps2,
    NegEps3,
    Eps2MinusEps1,
    Eps1MinusEps3,
    Eps2MinusEps3,
    Delta,
    DeltaPlusEps1,
    DeltaPlusEps2,
    DeltaPlusEps3,
    DeltaMinusEps1,
    DeltaMinusEps2,
    DeltaMinusEps3,
}

pub const POSITIVE: [PosRoot; 14] = [
    PosRoot::TwoDelta,
    PosRoot::Eps1,
    PosRoot::Eps2,
    PosRoot::NegEps3,
    PosRoot::Eps2MinusEps1,
    PosRoot::Eps1MinusEps3,
    PosRoot::Eps2MinusEps3,
    PosRoot::Delta,
    PosRoot::DeltaPlusEps1,
    PosRoot::DeltaPlusEps2,
    PosRoot::DeltaPlusEps3,
    PosRoot::DeltaMinusEps1,
    PosRoot::DeltaMinusEps2,
    PosRoot::DeltaMinusEps3,
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LengthClass {
    Long,
    Short,
    DeltaType,
    Isotropic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    base: PosRoot,
    negative: bool,
}

impl PosRoot {
    fn vector(self) -> Weight {
        let d = Weight::delta();
        let e = Weight::eps;
        match self {
            PosRoot::TwoDelta => d * 2,
            PosRoot::Eps1 => e(1),
            PosRoot::Eps2 => e(2),
            PosRoot::NegEps3 => -e(3),
            PosRoot::Eps2MinusEps1 => e(2) - e(1),
            PosRoot::Eps1MinusEps3 => e(1) - e(3),
            PosRoot::Eps2MinusEps3 => e(2) - e(3),
            PosRoot::Delta => d,
            PosRoot::DeltaPlusEps1 => d + e(1),
            PosRoot::DeltaPlusEps2 => d + e(2),
            PosRoot::DeltaPlusEps3 => d + e(3),
            PosRoot::DeltaMinusEps1 => d - e(1),
            PosRoot::DeltaMinusEps2 => d - e(2),
            PosRoot::DeltaMinusEps3 => d - e(3),
        }
    }

    fn name(self) -> &'static str {
        match self {
            PosRoot::TwoDelta => "2δ",
            PosRoot::Eps1 => "ε1",
            PosRoot::Eps2 => "ε2",
            PosRoot::NegEps3 => "-ε3",
            PosRoot::Eps2MinusEps1 => "ε2-ε1",
            PosRoot::Eps1MinusEps3 => "ε1-ε3",
            PosRoot::Eps2MinusEps3 => "ε2-ε3",
            PosRoot::Delta => "δ",
            PosRoot::DeltaPlusEps1 => "δ+ε1",
            PosRoot::DeltaPlusEps2 => "δ+ε2",
            PosRoot::DeltaPlusEps3 => "δ+ε3",
            PosRoot::DeltaMinusEps1 => "δ-ε1",
            PosRoot::DeltaMinusEps2 => "δ-ε2",
            PosRoot::DeltaMinusEps3 => "δ-ε3",
        }
    }
}

impl Root {
    pub const fn pos(base: PosRoot) -> Root {
        Root { base, negative: false }
    }

    pub fn base(&self) -> PosRoot {
        self.base
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn negate(&self) -> Root {
        Root { base: self.base, negative: !self.negative }
    }

    pub fn vector(&self) -> Weight {
        let v = self.base.vector();
        if self.negative {
            -v
        } else {
            v
        }
    }

    pub fn parity(&self) -> Parity {
        if (self.base as usize) < 7 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    pub fn is_isotropic(&self) -> bool {
        (self.base as usize) >= 8
    }

    pub fn length_class(&self) -> LengthClass {
        match self.base {
            PosRoot::TwoDelta | PosRoot::Delta => LengthClass::DeltaType,
            PosRoot::Eps1 | PosRoot::Eps2 | PosRoot::NegEps3 => LengthClass::Short,
            PosRoot::Eps2MinusEps1 | PosRoot::Eps1MinusEps3 | PosRoot::Eps2MinusEps3 => {
                LengthClass::Long
            }
            _ => LengthClass::Isotropic,
        }
    }

    pub fn all() -> impl Iterator<Item = Root> {
        POSITIVE.iter().flat_map(|&b| [Root::pos(b), Root { base: b, negative: true }])
    }

    pub fn positive() -> impl Iterator<Item = Root> {
        POSITIVE.iter().map(|&b| Root::pos(b))
    }

    pub fn even_positive() -> impl Iterator<Item = Root> {
        Root::positive().filter(|r| r.is_even())
    }

    /// Positive even roots lying in the eps-plane (the G2 roots).
    pub fn g2_positive() -> impl Iterator<Item = Root> {
        Root::even_positive().filter(|r| r.base != PosRoot::TwoDelta)
    }

    pub fn odd_positive() -> impl Iterator<Item = Root> {
        Root::positive().filter(|r| !r.is_even())
    }

    pub fn isotropic_positive() -> impl Iterator<Item = Root> {
        Root::positive().filter(|r| r.is_isotropic())
    }

    pub fn two_delta() -> Root {
        Root::pos(PosRoot::TwoDelta)
    }

    pub fn delta() -> Root {
        Root::pos(PosRoot::Delta)
    }

    /// The root whose vector is `v`, if any.
    pub fn from_vector(v: &Weight) -> Option<Root> {
        Root::all().find(|r| r.vector() == *v)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-({})", self.base.name())
        } else {
            write!(f, "{}", self.base.name())
        }
    }
}

impl Serialize for Root {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Root {
    type Err = Error;

    /// Accepts the display names and the ASCII spellings `2d`, `e1`, `d+e3`,
    /// `-e3`, optionally wrapped as `-(...)`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s
            .trim()
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'δ' => 'd',
                'ε' => 'e',
                c => c,
            })
            .collect();
        let (neg, core) = match t.strip_prefix("-(").and_then(|r| r.strip_suffix(')')) {
            Some(inner) => (true, inner.to_string()),
            None => (false, t.clone()),
        };
        let ascii = |b: PosRoot| b.name().replace('δ', "d").replace('ε', "e");
        for &b in POSITIVE.iter() {
            if ascii(b) == core {
                return Ok(Root { base: b, negative: neg });
            }
        }
        // Fall back to matching the vector, so `e1-e2` or `-d-e3` also parse.
        let v = parse_linear(&core).ok_or_else(|| parse_err("root", s))?;
        let v = if neg { -v } else { v };
        Root::from_vector(&v).ok_or_else(|| parse_err("root", s))
    }
}

fn parse_linear(s: &str) -> Option<Weight> {
    let mut total = Weight::zero();
    let mut rest = s;
    while !rest.is_empty() {
        let sign = if let Some(r) = rest.strip_prefix('-') {
            rest = r;
            -1
        } else {
            rest = rest.strip_prefix('+').unwrap_or(rest);
            1
        };
        let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
        rest = &rest[digits.len()..];
        let coef = if digits.is_empty() { 1 } else { digits.parse::<i64>().ok()? };
        let term = if let Some(r) = rest.strip_prefix('d') {
            rest = r;
            Weight::delta()
        } else {
            let r = rest.strip_prefix('e')?;
            let i = r.chars().next()?.to_digit(10)? as usize;
            if !(1..=3).contains(&i) {
                return None;
            }
            rest = &r[1..];
            Weight::eps(i)
        };
        total = total + term * (sign * coef);
    }
    Some(total)
}

/// One of the four simple systems up to Weyl conjugacy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleSystem {
    pub index: usize,
    pub roots: [Root; 3],
    /// `rho` of this Borel minus `rho` of the distinguished one.
    pub rho_shift: Weight,
}

fn r(b: PosRoot) -> Root {
    Root::pos(b)
}

fn n(b: PosRoot) -> Root {
    Root::pos(b).negate()
}

/// The simple systems obtained from the distinguished one by successive odd
/// reflections in `delta+eps3`, `delta-eps2` and `delta-eps1`.
pub fn simple_systems() -> [SimpleSystem; 4] {
    use PosRoot::*;
    let d = Weight::delta();
    let e = Weight::eps;
    let s1 = d + e(3);
    let s2 = s1 + d - e(2);
    let s3 = s2 + d - e(1);
    [
        SimpleSystem {
            index: 0,
            roots: [r(Eps2MinusEps1), r(Eps1), r(DeltaPlusEps3)],
            rho_shift: Weight::zero(),
        },
        SimpleSystem {
            index: 1,
            roots: [r(Eps2MinusEps1), r(DeltaMinusEps2), n(DeltaPlusEps3)],
            rho_shift: s1,
        },
        SimpleSystem {
            index: 2,
            roots: [r(DeltaMinusEps1), n(DeltaMinusEps2), r(Eps1)],
            rho_shift: s2,
        },
        SimpleSystem {
            index: 3,
            roots: [r(Eps2MinusEps1), n(DeltaMinusEps1), r(Delta)],
            rho_shift: s3,
        },
    ]
}

/// Applies the odd reflection in the isotropic simple root `beta` to a simple
/// system, returning the new simple roots.
pub fn odd_reflect_system(roots: &[Root], beta: Root) -> Result<Vec<Root>> {
    if !beta.is_isotropic() || !roots.contains(&beta) {
        return Err(Error::NotOddSimple(beta.to_string()));
    }
    let b = beta.vector();
    roots
        .iter()
        .map(|a| {
            if *a == beta {
                Ok(beta.negate())
            } else if bilinear_form(&a.vector(), &b).is_zero() {
                Ok(*a)
            } else {
                Root::from_vector(&(a.vector() + b))
                    .ok_or_else(|| Error::NotOddSimple(format!("{a}+{beta}")))
            }
        })
        .collect()
}

/// Relabels a rho-shifted highest weight across the odd reflection in `beta`,
/// which must be an isotropic simple root of `Pi^index`.
pub fn odd_reflect_symbol(l: &Weight, beta: Root, index: usize) -> Result<Weight> {
    let sys = simple_systems()
        .into_iter()
        .find(|s| s.index == index)
        .ok_or_else(|| Error::NotOddSimple(format!("system {index}")))?;
    if !beta.is_isotropic() || !sys.roots.contains(&beta) {
        return Err(Error::NotOddSimple(beta.to_string()));
    }
    if bilinear_form(l, &beta.vector()).is_zero() {
        Ok(*l + beta.vector())
    } else {
        Ok(*l)
    }
}

/// Weights of a finite-dimensional module with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinDimWeights<W> {
    pub entries: Vec<(W, u32)>,
}

impl<W: Copy> FinDimWeights<W> {
    pub fn dimension(&self) -> u32 {
        self.entries.iter().map(|e| e.1).sum()
    }
}

/// The adjoint module: every root once and the zero weight three times.
pub fn adjoint_weights() -> FinDimWeights<Weight> {
    let mut entries: Vec<(Weight, u32)> = Root::all().map(|r| (r.vector(), 1)).collect();
    entries.push((Weight::zero(), 3));
    FinDimWeights { entries }
}

/// Root-lattice coordinates of `nu` in the distinguished simple roots
/// `eps2-eps1, eps1, delta+eps3`. They are fractional off the root lattice.
pub fn simple_coordinates(nu: &Weight) -> [Rat; 3] {
    let (c, e1, e2) = nu.to_basis();
    [e2 + c, e1 + e2 + int(2) * c, c]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn counts() {
        assert_eq!(Root::all().count(), 28);
        assert_eq!(Root::even_positive().count(), 7);
        assert_eq!(Root::odd_positive().count(), 7);
        assert_eq!(Root::isotropic_positive().count(), 6);
    }

    #[test]
    fn isotropic_roots_have_length_zero() {
        for r in Root::all() {
            let v = r.vector();
            assert_eq!(r.is_isotropic(), bilinear_form(&v, &v).is_zero(), "{r}");
        }
    }

    #[test]
    fn parse_roots() {
        assert_eq!("δ+ε3".parse::<Root>().unwrap(), Root::pos(PosRoot::DeltaPlusEps3));
        assert_eq!("d+e3".parse::<Root>().unwrap(), Root::pos(PosRoot::DeltaPlusEps3));
        assert_eq!("-d-e3".parse::<Root>().unwrap(), n(PosRoot::DeltaPlusEps3));
        assert_eq!("e1+e2".parse::<Root>().unwrap(), r(PosRoot::NegEps3));
        for root in Root::all() {
            assert_eq!(root.to_string().parse::<Root>().unwrap(), root);
        }
    }

    #[test]
    fn odd_reflections_chain_the_simple_systems() {
        let sys = simple_systems();
        let betas = [r(PosRoot::DeltaPlusEps3), r(PosRoot::DeltaMinusEps2), r(PosRoot::DeltaMinusEps1)];
        for i in 0..3 {
            let mut next = odd_reflect_system(&sys[i].roots, betas[i]).unwrap();
            let mut want = sys[i + 1].roots.to_vec();
            next.sort();
            want.sort();
            assert_eq!(next, want, "step {i}");
            assert_eq!(sys[i + 1].rho_shift - sys[i].rho_shift, betas[i].vector());
        }
    }

    #[test]
    fn simple_coordinates_of_positive_roots_are_natural() {
        for root in Root::positive() {
            let c = simple_coordinates(&root.vector());
            assert!(c.iter().all(|x| x.is_integer() && *x >= int(0)), "{root}: {c:?}");
        }
        let d = simple_coordinates(&Weight::delta());
        assert_eq!(d, [int(1), int(2), int(1)]);
    }

    #[test]
    fn odd_reflection_on_symbols() {
        let beta = r(PosRoot::DeltaPlusEps3);
        let l = Weight::frac([1, 0, -1, 1], 1);
        assert_eq!(odd_reflect_symbol(&l, beta, 0).unwrap(), l + beta.vector());
        let t = Weight::frac([2, 0, -1, 1], 1);
        assert_eq!(odd_reflect_symbol(&t, beta, 0).unwrap(), t);
        assert!(odd_reflect_symbol(&l, r(PosRoot::Eps1), 0).is_err());
    }

    #[test]
    fn adjoint_dimension() {
        assert_eq!(adjoint_weights().dimension(), 31);
    }
}

//! The data the character and translation engines need from a root system,
//! with implementations for G(3) and osp(3|2).

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use crate::blocks;
use crate::rational::{int, Rat};
use crate::rootdata::{adjoint_weights, simple_coordinates, FinDimWeights, Root};
use crate::weights::{bilinear_form, Weight};

/// A positive even root used by reflections. `half` marks `2delta`, whose
/// reflection is integral for pairings in `1/2 + Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvenRoot<W> {
    pub vector: W,
    pub half: bool,
}

/// A membership test for one block.
pub type Membership<W> = Box<dyn Fn(&W) -> bool>;

pub trait RootSystem: 'static {
    type Weight: Copy
        + Ord
        + Hash
        + Debug
        + Display
        + Send
        + Sync
        + Add<Output = Self::Weight>
        + Sub<Output = Self::Weight>
        + Mul<Rat, Output = Self::Weight>;

    const NAME: &'static str;

    fn zero() -> Self::Weight;
    fn form(a: &Self::Weight, b: &Self::Weight) -> Rat;
    /// Positive even roots: the non-super ones and `2delta`.
    fn even_roots() -> Vec<EvenRoot<Self::Weight>>;
    /// Positive isotropic odd roots.
    fn isotropic_roots() -> Vec<Self::Weight>;
    /// Positive odd roots that are not isotropic.
    fn nonisotropic_odd_roots() -> Vec<Self::Weight>;
    /// Coordinates in the distinguished simple roots.
    fn simple_coordinates(w: &Self::Weight) -> Vec<Rat>;
    fn linked(l: &Self::Weight, mu: &Self::Weight) -> bool;
    /// Membership test for the block of `l`, for repeated queries.
    fn linkage(l: &Self::Weight) -> Membership<Self::Weight> {
        let l = *l;
        Box::new(move |mu| Self::linked(&l, mu))
    }
    /// The module tensored with in translation.
    fn translation_module() -> FinDimWeights<Self::Weight>;
    /// Offsets `mu0` of the starting weights `l - mu0`, in the order tried.
    fn translation_starts() -> Vec<Self::Weight>;

    fn pairing(l: &Self::Weight, a: &Self::Weight) -> Rat {
        int(2) * Self::form(l, a) / Self::form(a, a)
    }

    fn reflect(l: &Self::Weight, a: &Self::Weight) -> Self::Weight {
        *l - *a * Self::pairing(l, a)
    }

    /// `mu <= l`: the difference is an N-combination of simple roots.
    fn leq(mu: &Self::Weight, l: &Self::Weight) -> bool {
        Self::simple_coordinates(&(*l - *mu))
            .iter()
            .all(|c| c.is_integer() && *c >= Rat::zero())
    }

    /// Height of `l - mu`, when `mu <= l`.
    fn depth_below(mu: &Self::Weight, l: &Self::Weight) -> Option<i64> {
        Self::leq(mu, l).then(|| {
            Self::simple_coordinates(&(*l - *mu)).iter().map(|c| c.to_integer()).sum()
        })
    }

    /// Whether the reflection in `a` is integral for `l` with positive
    /// pairing, the condition for a Verma-flag certificate.
    fn positive_integral(l: &Self::Weight, a: &EvenRoot<Self::Weight>) -> bool {
        let p = Self::pairing(l, &a.vector);
        if a.half {
            (p - Rat::new(1, 2)).is_integer() && p > Rat::zero()
        } else {
            p.is_integer() && p > Rat::zero()
        }
    }

    /// All positive roots with their parity (`true` for odd).
    fn positive_roots() -> Vec<(Self::Weight, bool)> {
        let mut out: Vec<_> = Self::even_roots().into_iter().map(|r| (r.vector, false)).collect();
        out.extend(Self::isotropic_roots().into_iter().map(|r| (r, true)));
        out.extend(Self::nonisotropic_odd_roots().into_iter().map(|r| (r, true)));
        out
    }
}

/// The exceptional Lie superalgebra G(3).
#[derive(Clone, Copy, Debug)]
pub struct G3;

impl RootSystem for G3 {
    type Weight = Weight;
    const NAME: &'static str = "g3";

    fn zero() -> Weight {
        Weight::zero()
    }
    fn form(a: &Weight, b: &Weight) -> Rat {
        bilinear_form(a, b)
    }
    fn even_roots() -> Vec<EvenRoot<Weight>> {
        Root::even_positive()
            .map(|r| EvenRoot { vector: r.vector(), half: r == Root::two_delta() })
            .collect()
    }
    fn isotropic_roots() -> Vec<Weight> {
        Root::isotropic_positive().map(|r| r.vector()).collect()
    }
    fn nonisotropic_odd_roots() -> Vec<Weight> {
        vec![Weight::delta()]
    }
    fn simple_coordinates(w: &Weight) -> Vec<Rat> {
        simple_coordinates(w).to_vec()
    }
    fn linked(l: &Weight, mu: &Weight) -> bool {
        blocks::linked(l, mu)
    }
    fn linkage(l: &Weight) -> Membership<Weight> {
        let b = blocks::Linkage::new(l);
        Box::new(move |mu| b.contains(mu))
    }
    fn translation_module() -> FinDimWeights<Weight> {
        adjoint_weights()
    }
    fn translation_starts() -> Vec<Weight> {
        vec![
            Weight::delta() * 2,
            Weight::delta() - Weight::eps(3),
            Weight::delta() + Weight::eps(2),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::PosRoot;
    use crate::weights::coroot_pairing;

    #[test]
    fn generic_pairing_matches_coroot_table() {
        let l = Weight::frac([3, 1, 7, -8], 4);
        for r in Root::even_positive() {
            assert_eq!(G3::pairing(&l, &r.vector()), coroot_pairing(&l, r).unwrap(), "{r}");
        }
    }

    #[test]
    fn positive_root_count() {
        assert_eq!(G3::positive_roots().len(), 14);
        assert!(G3::leq(&Weight::zero(), &Root::pos(PosRoot::DeltaMinusEps3).vector()));
        assert!(!G3::leq(&Weight::delta(), &Weight::zero()));
    }
}

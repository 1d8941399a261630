//! Atypicality data, integral Weyl groups, linkage and the classification of
//! blocks into the families Typical, Integral, Generic, Z2, V, S3 and WG2.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{int, is_half_odd, rat, Rat};
use crate::rootdata::{PosRoot, Root};
use crate::weights::{bilinear_form, coroot_pairing, Weight};
use crate::weyl::{G2Part, Subgroup, WeylElt};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Atypicality {
    /// Positive isotropic roots orthogonal to the weight.
    pub a: Vec<Root>,
    /// Positive G2 roots with integral coroot pairing.
    pub z: Vec<Root>,
    pub s0_integral: bool,
    pub typical: bool,
    pub strongly_typical: bool,
}

pub fn atypicality(l: &Weight) -> Atypicality {
    let a: Vec<Root> = Root::isotropic_positive()
        .filter(|r| bilinear_form(l, &r.vector()).is_zero())
        .collect();
    let z: Vec<Root> = Root::g2_positive()
        .filter(|g| coroot_pairing(l, *g).unwrap().is_integer())
        .collect();
    let typical = a.is_empty();
    Atypicality {
        s0_integral: is_half_odd(l.d()),
        strongly_typical: typical && !l.d().is_zero(),
        typical,
        a,
        z,
    }
}

pub fn is_atypical(l: &Weight) -> bool {
    !atypicality(l).typical
}

/// The simple roots of the positive system `z` of a root subsystem: the
/// elements that are not positive combinations of two others.
fn subsystem_simple_roots(z: &[Root]) -> Vec<Root> {
    let coords = |r: &Root| {
        let (_, e1, e2) = r.vector().to_basis();
        (e1, e2)
    };
    z.iter()
        .copied()
        .filter(|g| {
            let (g1, g2) = coords(g);
            let others: Vec<_> = z.iter().filter(|o| *o != g).collect();
            !others.iter().enumerate().any(|(i, p)| {
                others[i + 1..].iter().any(|q| {
                    let (p1, p2) = coords(p);
                    let (q1, q2) = coords(q);
                    let det = p1 * q2 - p2 * q1;
                    if det.is_zero() {
                        return false;
                    }
                    let a = (g1 * q2 - g2 * q1) / det;
                    let b = (p1 * g2 - p2 * g1) / det;
                    a.is_positive() && b.is_positive()
                })
            })
        })
        .collect()
}

/// `W_l`: generated by `s0` when `d` lies in `1/2 + Z` and by the reflections
/// in the integral G2 roots, with the simple reflections of that subsystem as
/// Coxeter generators.
pub fn integral_weyl_group(l: &Weight) -> Subgroup {
    let at = atypicality(l);
    let mut gens = Vec::new();
    if at.s0_integral {
        gens.push(WeylElt::s0());
    }
    for g in subsystem_simple_roots(&at.z) {
        gens.push(WeylElt::reflection(g).unwrap());
    }
    Subgroup::generated("W_λ", gens)
}

/// Membership test for the block of a fixed weight, with `W_l` computed once.
#[derive(Clone, Debug)]
pub struct Linkage {
    l: Weight,
    atypical_roots: Vec<Weight>,
    inverses: Vec<WeylElt>,
}

impl Linkage {
    pub fn new(l: &Weight) -> Self {
        let at = atypicality(l);
        Linkage {
            l: *l,
            atypical_roots: at.a.iter().map(|a| a.vector()).collect(),
            inverses: integral_weyl_group(l).elements().map(|w| w.inverse()).collect(),
        }
    }

    /// Whether `mu` is a highest weight in the block.
    pub fn contains(&self, mu: &Weight) -> bool {
        self.inverses.iter().any(|w| {
            let nu = w.act(mu) - self.l;
            if self.atypical_roots.is_empty() {
                return nu == Weight::zero();
            }
            let k = nu.d();
            k.is_integer() && self.atypical_roots.iter().any(|al| nu == *al * k)
        })
    }
}

/// Whether `mu` is a highest weight in the block of `l`.
pub fn linked(l: &Weight, mu: &Weight) -> bool {
    Linkage::new(l).contains(mu)
}

/// The invariant `k` of an atypical weight, read off after moving it to the
/// form `[d|d, k-d/2, -(k+d/2)]` by the full Weyl group. Defined up to sign.
pub fn atypical_invariant(l: &Weight) -> Result<Rat> {
    if !is_atypical(l) {
        return Err(Error::Typical(l.to_string()));
    }
    let m = WeylElt::all()
        .map(|w| w.act(l))
        .find(|m| m.d() == m.x())
        .expect("an atypical orbit meets d = x");
    Ok((m.y() + m.d() / int(2)).abs())
}

/// The relation `~`: both weights atypical with the same invariant `k`.
pub fn equivalent_weights(l: &Weight, mu: &Weight) -> Result<bool> {
    Ok(atypical_invariant(l)? == atypical_invariant(mu)?)
}

/// `{w(l + k alpha)}` for `w` in `W_l`, `k` in the range, `alpha` the first
/// element of `A(l)`.
pub fn block_members(l: &Weight, ks: std::ops::RangeInclusive<i64>) -> Result<Vec<Weight>> {
    let at = atypicality(l);
    let alpha = *at.a.first().ok_or_else(|| Error::Typical(l.to_string()))?;
    let wl = integral_weyl_group(l);
    let mut out = BTreeSet::new();
    for k in ks {
        let base = *l + alpha.vector() * k;
        for w in wl.elements() {
            out.insert(w.act(&base));
        }
    }
    Ok(out.into_iter().collect())
}

/// Typical blocks: the `W_l`-orbit.
pub fn orbit_members(l: &Weight) -> Vec<Weight> {
    let wl = integral_weyl_group(l);
    let set: BTreeSet<Weight> = wl.elements().map(|w| w.act(l)).collect();
    set.into_iter().collect()
}

/// A chain of `s1`/`s2` twists moving `Z(l)` into `{eps2-eps1, -eps3}`.
/// Every step reflects in a simple root outside the current `Z`.
pub fn normalize_good_diagrams(l: &Weight) -> Result<(Vec<WeylElt>, Weight)> {
    let mut cur = *l;
    let mut chain = Vec::new();
    let part = integral_weyl_group(l).g2_part();
    if !matches!(part, G2Part::Z2 | G2Part::Z2xZ2) {
        return Ok((chain, cur));
    }
    let has = |z: &[Root], b: PosRoot| z.contains(&Root::pos(b));
    loop {
        let z = atypicality(&cur).z;
        let step = if has(&z, PosRoot::Eps1) || has(&z, PosRoot::Eps2MinusEps3) {
            (WeylElt::s1(), PosRoot::Eps2MinusEps1)
        } else if has(&z, PosRoot::Eps2) || has(&z, PosRoot::Eps1MinusEps3) {
            (WeylElt::s2(), PosRoot::Eps1)
        } else {
            return Ok((chain, cur));
        };
        // Good diagram: the reflected simple root is not integral.
        if has(&z, step.1) {
            return Err(Error::Inconsistent(l.to_string(), "bad diagram".into()));
        }
        cur = step.0.act(&cur);
        chain.push(step.0);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Z2Case {
    #[serde(rename = "1a")]
    A,
    #[serde(rename = "1b")]
    B,
    #[serde(rename = "2c")]
    C,
    #[serde(rename = "2d")]
    D,
    #[serde(rename = "2e")]
    E,
}

impl Z2Case {
    pub fn code(&self) -> &'static str {
        match self {
            Z2Case::A => "1a",
            Z2Case::B => "1b",
            Z2Case::C => "2c",
            Z2Case::D => "2d",
            Z2Case::E => "2e",
        }
    }
    fn label(&self) -> &'static str {
        match self {
            Z2Case::A | Z2Case::E => "gl(2|1) principal",
            Z2Case::B => "sl(2)⊕gl(1|1) principal",
            Z2Case::C => "osp(3|2) integral",
            Z2Case::D => "osp(3|2) non-integral",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum VCase {
    I,
    II,
    III,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Typical,
    Integral,
    Generic,
    Z2(Z2Case),
    V { case: VCase, ell: Rat },
    S3 { ell: i64, primed: bool },
    WG2 { a: i64 },
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Typical => "Typical",
            Family::Integral => "Integral",
            Family::Generic => "Generic",
            Family::Z2(_) => "Z2",
            Family::V { .. } => "V",
            Family::S3 { .. } => "S3",
            Family::WG2 { .. } => "WG2",
        }
    }

    pub fn case(&self) -> Option<String> {
        match self {
            Family::Z2(c) => Some(c.code().to_string()),
            Family::V { case, .. } => Some(format!("{case:?}")),
            Family::S3 { primed, .. } => Some(if *primed { "primed" } else { "unprimed" }.into()),
            _ => None,
        }
    }

    pub fn ell(&self) -> Option<Rat> {
        match self {
            Family::V { ell, .. } => Some(*ell),
            Family::S3 { ell, .. } => Some(int(*ell)),
            Family::WG2 { a } => Some(int(*a)),
            _ => None,
        }
    }
}

/// A block descriptor. `transport` is the product of good-diagram twists
/// carrying the block onto its normalised position; `canonical_rep` is the
/// family's base weight pulled back through it, so it is linked to every
/// member.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockId {
    pub family: Family,
    pub canonical_rep: Weight,
    pub equivalence_label: String,
    pub transport: WeylElt,
}

impl Serialize for BlockId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BlockId", 5)?;
        st.serialize_field("family", self.family.tag())?;
        st.serialize_field("case", &self.family.case())?;
        st.serialize_field("ell", &self.family.ell().map(|r| r.to_string()))?;
        st.serialize_field("canonical_rep", &self.canonical_rep)?;
        st.serialize_field("equivalence_label", &self.equivalence_label)?;
        st.end()
    }
}

impl fmt::Display for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family.tag())?;
        if let Some(c) = self.family.case() {
            write!(f, " {c}")?;
        }
        if let Some(l) = self.family.ell() {
            write!(f, " ℓ={l}")?;
        }
        write!(f, " rep={} ({})", self.canonical_rep, self.equivalence_label)
    }
}

/// Base weights of the families.
pub mod base {
    use super::*;

    /// `lambda_[l] = [-l-1/2 | 1/4, l+1/4, -l-1/2]`, `l` in `3Z`.
    pub fn v_lambda(l: Rat) -> Weight {
        Weight::new(-l - rat(1, 2), rat(1, 4), l + rat(1, 4))
    }

    /// `mu_[l] = [l | l, l, -2l]`, `l` in `1/4 + Z/2`.
    pub fn v_mu(l: Rat) -> Weight {
        Weight::new(l, l, l)
    }

    /// `nu_[l] = [l | 1/4, -l-1/4, l]`, `l` in `3Z+1`.
    pub fn v_nu(l: Rat) -> Weight {
        Weight::new(l, rat(1, 4), -l - rat(1, 4))
    }

    /// `lambda_[l] = [-l/2 | -l/2, 0, l/2]` of the S3 family.
    pub fn s3(l: i64) -> Weight {
        let h = rat(l, 2);
        Weight::new(-h, -h, Rat::zero())
    }

    /// `lambda'_[l] = s1 lambda_[l]`.
    pub fn s3_primed(l: i64) -> Weight {
        WeylElt::s1().act(&s3(l))
    }

    /// `a omega_1 = [0 | 0, 3a/2, -3a/2]`.
    pub fn a_omega1(a: i64) -> Weight {
        Weight::new(Rat::zero(), Rat::zero(), rat(3 * a, 2))
    }
}

/// `l = base + m alpha` with integral `m`?
fn shift_of(l: &Weight, base: &Weight, alpha: &Weight) -> Option<Rat> {
    let diff = *l - *base;
    let m = diff.d() / alpha.d();
    (m.is_integer() && diff == *alpha * m).then_some(m)
}

/// The smallest element of the block with `0 <= d < 1`; independent of the
/// member used to compute it.
fn min_candidate(l: &Weight) -> Weight {
    let at = atypicality(l);
    let wl = integral_weyl_group(l);
    let mut best: Option<Weight> = None;
    for w in wl.elements() {
        for al in &at.a {
            let k = if w.has_s0() { -l.d().ceil() } else { -l.d().floor() };
            let c = w.act(&(*l + al.vector() * k));
            if best.is_none_or(|b| c < b) {
                best = Some(c);
            }
        }
    }
    best.expect("atypical weights have a candidate")
}

fn block(family: Family, rep: Weight, label: &str, transport: WeylElt) -> BlockId {
    BlockId { family, canonical_rep: rep, equivalence_label: label.to_string(), transport }
}

pub fn classify(l: &Weight) -> BlockId {
    let at = atypicality(l);
    let wl = integral_weyl_group(l);
    let e = WeylElt::identity();
    if at.typical {
        let (mu, _) = wl.orbit_antidominant(l);
        return block(Family::Typical, mu, "Lie-algebra block", e);
    }
    if at.z.len() == 6 && at.s0_integral {
        return block(Family::Integral, min_candidate(l), "see CW18", e);
    }
    match wl.g2_part() {
        G2Part::Trivial => block(Family::Generic, min_candidate(l), "gl(1|1) principal", e),
        G2Part::Z2 => classify_z2(l, &at),
        G2Part::Z2xZ2 => classify_v(l),
        G2Part::S3 => classify_s3(l),
        G2Part::WG2 => classify_wg2(l),
    }
}

fn classify_z2(l: &Weight, at: &Atypicality) -> BlockId {
    let g = at.z[0];
    let al = at.a[0];
    let p = bilinear_form(&g.vector(), &al.vector());
    let case = match g.length_class() {
        crate::rootdata::LengthClass::Long => {
            if p.is_zero() {
                Z2Case::B
            } else {
                Z2Case::A
            }
        }
        _ => {
            if p.abs() == int(2) {
                if at.s0_integral {
                    Z2Case::C
                } else {
                    Z2Case::D
                }
            } else {
                Z2Case::E
            }
        }
    };
    let (chain, _) = normalize_good_diagrams(l).expect("Z2 chains are good");
    let t = WeylElt::from_word(&chain.iter().rev().copied().collect::<Vec<_>>());
    block(Family::Z2(case), min_candidate(l), case.label(), t)
}

fn transport_of(l: &Weight) -> (WeylElt, Weight) {
    let (chain, lp) = normalize_good_diagrams(l).expect("V chains are good");
    let t = WeylElt::from_word(&chain.iter().rev().copied().collect::<Vec<_>>());
    (t, lp)
}

/// Parameter and case of a V-family weight already in normalised position
/// `Z = {-eps3, eps2-eps1}`; returns the case, `l`, and the base weight.
pub fn v_parameters(lp: &Weight) -> Option<(VCase, Rat, Weight)> {
    let at = atypicality(lp);
    let sn3 = WeylElt::reflection(Root::pos(PosRoot::NegEps3)).unwrap();
    let has = |b: PosRoot| at.a.contains(&Root::pos(b));
    let d3 = Weight::delta() + Weight::eps(3);
    if has(PosRoot::DeltaPlusEps3) || has(PosRoot::DeltaMinusEps3) {
        if at.s0_integral {
            // Case I: arrange d = z, then l = y - x >= 0.
            let mut m = if has(PosRoot::DeltaPlusEps3) { *lp } else { WeylElt::s0().act(lp) };
            if m.y() < m.x() {
                m = WeylElt::s1().act(&m);
            }
            let ell = m.y() - m.x();
            let b = base::v_lambda(ell);
            shift_of(&m, &b, &d3)?;
            if !(ell / int(3)).is_integer() {
                return None;
            }
            return Some((VCase::I, ell, b));
        }
        // Case III: arrange d = z, then read l and normalise l >= 0.
        let mut m = if has(PosRoot::DeltaPlusEps3) { *lp } else { sn3.act(lp) };
        let ell_of = |m: &Weight| m.d() - (rat(1, 2) - int(2) * m.x());
        if ell_of(&m).is_negative() {
            m = WeylElt::s1().act(&m);
        }
        let ell = ell_of(&m);
        let b = base::v_nu(ell);
        shift_of(&m, &b, &d3)?;
        if !(ell - int(1)).is_integer() || !((ell - int(1)) / int(3)).is_integer() {
            return None;
        }
        return Some((VCase::III, ell, b));
    }
    // Case II: arrange c = 1, then use d = x or d = y.
    let plus = has(PosRoot::DeltaPlusEps1) || has(PosRoot::DeltaPlusEps2);
    let m = if plus { *lp } else { sn3.act(lp) };
    let ell = if m.d() == m.x() {
        (m.x() + int(2) * m.y()) / int(3)
    } else {
        (int(2) * m.x() + m.y()) / int(3)
    };
    let b = base::v_mu(ell);
    if !(ell * int(4) - int(1)).is_integer() || !(ell * int(4)).to_integer().is_odd() {
        return None;
    }
    Some((VCase::II, ell, b))
}

fn classify_v(l: &Weight) -> BlockId {
    let (t, lp) = transport_of(l);
    let ti = t.inverse();
    match v_parameters(&lp) {
        Some((case, ell, b)) => {
            let label = match case {
                VCase::I => "V case I: λ_[ℓ] block",
                VCase::II => "V case II: μ_[ℓ] block",
                VCase::III => "V case III: ν_[ℓ] block",
            };
            block(Family::V { case, ell }, ti.act(&b), label, t)
        }
        None => {
            // Resists normalisation: keep a linked representative and flag it.
            let rep = min_candidate(l);
            block(
                Family::V { case: VCase::I, ell: Rat::zero() },
                rep,
                "V block resisting normalisation",
                t,
            )
        }
    }
}

/// `(l, primed)` of an S3-family weight.
pub fn s3_parameters(l: &Weight) -> (i64, bool) {
    let s3 = Subgroup::named(crate::weyl::NamedGroup::S3);
    let two = int(2);
    for w in s3.elements() {
        let m = w.act(l);
        let (d, x, y, z) = (m.d(), m.x(), m.y(), m.z());
        let b = two * x;
        let k = two * (y - x);
        if d == x {
            // (a): l = -3b - 2k
            let ell = (-int(3) * b - two * k).to_integer();
            return if ell > 0 { (ell, false) } else { (-ell, true) };
        }
        if d == y {
            // (b): l = k/2 + 3b/2, giving lambda_[2l] or lambda'_[-2l]
            let ell = (k + int(3) * b).to_integer();
            return if ell > 0 { (ell, false) } else { (-ell, true) };
        }
        if d == z {
            // (c): lambda_[k] or lambda'_[-k]
            let ell = k.to_integer();
            return if ell > 0 { (ell, false) } else { (-ell, true) };
        }
    }
    unreachable!("atypical S3 weights have d equal to a coordinate up to S3")
}

fn classify_s3(l: &Weight) -> BlockId {
    let (ell, primed) = s3_parameters(l);
    let rep = if primed { base::s3_primed(ell) } else { base::s3(ell) };
    let label = if primed { "S3: λ'_[ℓ] block" } else { "S3: λ_[ℓ] block" };
    block(Family::S3 { ell, primed }, rep, label, WeylElt::identity())
}

/// `a >= 0` with the weight in the block of `a omega_1`.
pub fn wg2_parameter(l: &Weight) -> i64 {
    let wg2 = Subgroup::named(crate::weyl::NamedGroup::WG2);
    for w in wg2.elements() {
        let m = w.act(l);
        for c in [1i64, -1] {
            if m.d() == m.x() * int(c) {
                let al = Weight::delta() + Weight::eps(1) * c;
                let r = m - al * m.d();
                let a = (int(2) * r.y() / int(3)).to_integer();
                return a.abs();
            }
        }
    }
    unreachable!("atypical WG2 weights meet d = +-x")
}

fn classify_wg2(l: &Weight) -> BlockId {
    let a = wg2_parameter(l);
    block(Family::WG2 { a }, base::a_omega1(a), "W_G2: aω1 block", WeylElt::identity())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn atypicality_examples() {
        let l3 = w("-7/2|1/4,13/4,-7/2");
        let at = atypicality(&l3);
        assert_eq!(at.a, vec![Root::pos(PosRoot::DeltaPlusEps3)]);
        let mut z = at.z.clone();
        z.sort();
        assert_eq!(z, vec![Root::pos(PosRoot::NegEps3), Root::pos(PosRoot::Eps2MinusEps1)]);
        assert!(at.s0_integral);

        let zero = atypicality(&Weight::zero());
        assert_eq!(zero.a.len(), 6);
        assert_eq!(zero.z.len(), 6);
        assert!(!zero.typical);

        let g = atypicality(&w("1/5|1/5,1/3,-8/15"));
        assert_eq!(g.a, vec![Root::pos(PosRoot::DeltaPlusEps1)]);
        assert!(g.z.is_empty());
        assert!(!g.s0_integral);
    }

    #[test]
    fn integral_weyl_group_examples() {
        let l3 = w("-7/2|1/4,13/4,-7/2");
        let g = integral_weyl_group(&l3);
        assert_eq!(g.order(), 8);
        assert!(g.has_s0());
        assert_eq!(g.g2_part(), G2Part::Z2xZ2);
        assert_eq!(integral_weyl_group(&w("1/5|1/5,1/3,-8/15")).order(), 1);
        let om = base::a_omega1(1);
        let g = integral_weyl_group(&om);
        assert_eq!(g.g2_part(), G2Part::WG2);
        assert!(!g.has_s0());
    }

    #[test]
    fn linkage_examples() {
        let l3 = w("-7/2|1/4,13/4,-7/2");
        let a = Weight::delta() + Weight::eps(3);
        assert!(linked(&l3, &(l3 + a)));
        assert!(linked(&l3, &l3));
        let g = w("1/5|1/5,1/3,-8/15");
        assert!(!linked(&g, &(g + Weight::delta() * 2)));
    }

    #[test]
    fn block_member_examples() {
        let g = w("1/5|1/5,1/3,-8/15");
        let a = Weight::delta() + Weight::eps(1);
        let mut want = vec![g - a, g, g + a];
        want.sort();
        assert_eq!(block_members(&g, -1..=1).unwrap(), want);
        assert_eq!(block_members(&g, 0..=0).unwrap(), vec![g]);
        let l3 = w("-7/2|1/4,13/4,-7/2");
        assert_eq!(block_members(&l3, 0..=0).unwrap().len(), 8);
        assert!(block_members(&w("1/3|0,0,0"), 0..=0).is_err());
    }

    #[test]
    fn good_diagram_examples() {
        // Z = {eps1 - eps3}
        let l = w("1/5|1/3,-2/3,1/3");
        assert_eq!(
            atypicality(&l).z,
            vec![Root::pos(PosRoot::Eps1MinusEps3)],
            "test weight has the intended Z"
        );
        let (chain, lp) = normalize_good_diagrams(&l).unwrap();
        assert_eq!(chain, vec![WeylElt::s2()]);
        assert_eq!(atypicality(&lp).z, vec![Root::pos(PosRoot::Eps2MinusEps1)]);
        // Z = {eps1}
        let l = w("1/2|1/2,1/5,-7/10");
        assert_eq!(atypicality(&l).z, vec![Root::pos(PosRoot::Eps1)]);
        let (chain, lp) = normalize_good_diagrams(&l).unwrap();
        assert_eq!(chain, vec![WeylElt::s1(), WeylElt::s2()]);
        assert_eq!(atypicality(&lp).z, vec![Root::pos(PosRoot::NegEps3)]);
    }

    #[test]
    fn classify_examples() {
        let id = classify(&w("-7/2|1/4,13/4,-7/2"));
        assert_eq!(id.family, Family::V { case: VCase::I, ell: int(3) });
        assert_eq!(id.canonical_rep, w("-7/2|1/4,13/4,-7/2"));
        let id = classify(&base::a_omega1(1));
        assert_eq!(id.family, Family::WG2 { a: 1 });
        let id = classify(&w("1/5|1/5,1/3,-8/15"));
        assert_eq!(id.family, Family::Generic);
        assert_eq!(id.equivalence_label, "gl(1|1) principal");
        let json = serde_json::to_string(&classify(&w("-7/2|1/4,13/4,-7/2"))).unwrap();
        assert!(json.contains("\"family\":\"V\""));
        assert!(json.contains("\"ell\":\"3\""));
    }

    #[test]
    fn canonical_reps_are_linked() {
        let samples = [
            "-7/2|1/4,13/4,-7/2",
            "1/4|1/4,1/4,-1/2",
            "1|1/4,-5/4,1",
            "-1|-1,0,1",
            "0|0,3/2,-3/2",
            "1/5|1/5,1/3,-8/15",
            "2|2,1/2,-5/2",
        ];
        for s in samples {
            let l = w(s);
            let id = classify(&l);
            assert!(linked(&l, &id.canonical_rep), "{s}: {id}");
        }
    }

    #[test]
    fn invariant_matches_casimir() {
        for s in ["-7/2|1/4,13/4,-7/2", "1/5|1/5,1/3,-8/15", "2|2,1/2,-5/2"] {
            let l = w(s);
            let k = atypical_invariant(&l).unwrap();
            assert_eq!(crate::weights::casimir_scalar(&l), -int(4) * k * k);
        }
    }
}

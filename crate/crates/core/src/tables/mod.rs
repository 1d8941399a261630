//! Closed-form tilting characters, dispatched by block family.

mod emit;
mod families;
mod frame;

use serde::Serialize;

use crate::blocks::{self, atypicality, classify, integral_weyl_group, normalize_good_diagrams};
use crate::blocks::{Family, VCase, Z2Case};
use crate::characters::VermaSum;
use crate::error::{Error, Result};
use crate::osp::{table_osp32, OspWeight};
use crate::rational::to_i64;
use crate::rootdata::{PosRoot, Root};
use crate::weights::{coroot_pairing, Weight};
use crate::weyl::WeylElt;

pub use emit::{csv_header, csv_row, latex_line};
pub use families::family_table;
pub use frame::{Entry, Frame};

pub const LABEL_GL21: &str = "gl(2|1) principal — external";
pub const LABEL_INTEGRAL: &str = "see CW18";

/// A closed-form character, or the reason none is tabulated here.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TableValue {
    Character { highest_weight: Weight, terms: VermaSum<Weight> },
    Label { label: String },
}

impl TableValue {
    fn character(l: &Weight, ch: VermaSum<Weight>) -> Self {
        TableValue::Character { highest_weight: *l, terms: ch }
    }

    fn label(s: &str) -> Self {
        TableValue::Label { label: s.to_string() }
    }

    pub fn as_character(&self) -> Option<&VermaSum<Weight>> {
        match self {
            TableValue::Character { terms, .. } => Some(terms),
            TableValue::Label { .. } => None,
        }
    }
}

/// How a weight reaches a family frame: `l = transport^{-1}(entry weight)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Located {
    pub entry: Entry,
    pub transport: WeylElt,
}

/// The frame entry of a V, S3 or W_G2 weight.
pub fn locate(l: &Weight) -> Option<Located> {
    let id = classify(l);
    match id.family {
        Family::V { .. } => {
            let (chain, lp) = normalize_good_diagrams(l).ok()?;
            let t = WeylElt::from_word(&chain.iter().rev().copied().collect::<Vec<_>>());
            let (case, ell, _) = blocks::v_parameters(&lp)?;
            let frame = match case {
                VCase::I => Frame::VLambda(to_i64(ell)?),
                VCase::II => Frame::VMu(ell),
                VCase::III => Frame::VNu(to_i64(ell)?),
            };
            frame.locate(&lp).map(|entry| Located { entry, transport: t })
        }
        Family::S3 { ell, primed } => {
            let t = if primed { WeylElt::s1() } else { WeylElt::identity() };
            Frame::S3(ell).locate(&t.act(l)).map(|entry| Located { entry, transport: t })
        }
        Family::WG2 { a } => {
            Frame::WG2(a).locate(l).map(|entry| Located { entry, transport: WeylElt::identity() })
        }
        _ => None,
    }
}

/// The closed-form tilting character of `T_l`.
pub fn tilting_character(l: &Weight) -> TableValue {
    let id = classify(l);
    let ch = match id.family {
        Family::Typical => Ok(typical_table(l)),
        Family::Integral => return TableValue::label(LABEL_INTEGRAL),
        Family::Generic => Ok(generic_table(l)),
        Family::Z2(Z2Case::A | Z2Case::E) => return TableValue::label(LABEL_GL21),
        Family::Z2(Z2Case::B) => z2_sl2_table(l),
        Family::Z2(Z2Case::C | Z2Case::D) => z2_osp_table(l),
        Family::V { .. } | Family::S3 { .. } | Family::WG2 { .. } => match locate(l) {
            Some(loc) => family_table(&loc.entry).map(|ch| {
                let back = loc.transport.inverse();
                ch.map_weights(|w| back.act(w))
            }),
            None => Err(Error::NotInTable(l.to_string(), format!("no frame for block {id}"))),
        },
    };
    match ch {
        Ok(ch) => TableValue::character(l, ch),
        Err(e) => TableValue::Label { label: e.to_string() },
    }
}

/// Typical weights: orbit points below `l` in the Bruhat order of `W_l`.
pub fn typical_table(l: &Weight) -> VermaSum<Weight> {
    let g = integral_weyl_group(l);
    let (mu, reps) = g.orbit_antidominant(l);
    let w = reps.iter().find(|(_, p)| p == l).map(|(w, _)| *w).expect("l lies in its orbit");
    VermaSum::from_set(
        reps.iter()
            .filter(|(u, _)| g.bruhat_leq(u, &w).unwrap_or(false))
            .map(|(u, _)| u.act(&mu)),
    )
}

/// Generic atypical weights: `M_l + M_{l - alpha}`.
pub fn generic_table(l: &Weight) -> VermaSum<Weight> {
    let a = atypicality(l).a[0].vector();
    VermaSum::from_set([*l, *l - a])
}

fn transport_chain(l: &Weight) -> Result<(WeylElt, Weight)> {
    let (chain, lp) = normalize_good_diagrams(l)?;
    Ok((WeylElt::from_word(&chain.iter().rev().copied().collect::<Vec<_>>()), lp))
}

/// Z2 blocks with code `1b`: the block is that of `sl(2) + gl(1|1)`, so the character
/// is the gl(1|1) pair, doubled by `s1` when `l` is `s1`-dominant.
fn z2_sl2_table(l: &Weight) -> Result<VermaSum<Weight>> {
    let (t, lp) = transport_chain(l)?;
    let at = atypicality(&lp);
    let gamma = Root::pos(PosRoot::Eps2MinusEps1);
    if at.z != [gamma] || at.a.len() != 1 {
        return Err(Error::NotInTable(l.to_string(), "unexpected normal form in case 1b".into()));
    }
    let a = at.a[0].vector();
    let mut pts = vec![lp, lp - a];
    if coroot_pairing(&lp, gamma)? > 0.into() {
        let s = WeylElt::s1();
        pts.extend([s.act(&lp), s.act(&lp) - a]);
    }
    let back = t.inverse();
    Ok(VermaSum::from_set(pts.iter().map(|w| back.act(w))))
}

/// Z2 blocks with codes `2c`, `2d`: transport to `Z = {eps1}`, read off the osp(3|2)
/// weight `[d | x]`, and carry its table back with `delta`, `eps -> eps1`.
fn z2_osp_table(l: &Weight) -> Result<VermaSum<Weight>> {
    let (t, lp) = transport_chain(l)?;
    let u = WeylElt::from_word(&[WeylElt::s1(), WeylElt::s2()]);
    let mu = u.act(&lp);
    if atypicality(&mu).z != [Root::pos(PosRoot::Eps1)] {
        return Err(Error::NotInTable(l.to_string(), "unexpected normal form in case 2".into()));
    }
    let nu = OspWeight::new(mu.d(), mu.x());
    let back = u.compose(&t).inverse();
    Ok(table_osp32(&nu).map_weights(|v| {
        let diff = *v - nu;
        back.act(&(mu + Weight::delta() * diff.a() + Weight::eps(1) * diff.b()))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn generic_pair() {
        let l = Weight::new(rat(1, 5), rat(1, 5), rat(1, 3));
        let ch = tilting_character(&l);
        assert_eq!(ch.as_character().unwrap().len(), 2);
    }

    #[test]
    fn wg2_zero_zero_has_seven_terms() {
        let e = Frame::WG2(0).entry(0, WeylElt::identity()).unwrap();
        let ch = family_table(&e).unwrap();
        assert_eq!(ch.len(), 7);
        assert_eq!(ch.coeff(&e.weight()), 1);
    }

    #[test]
    fn s3_two_two_line() {
        let f = Frame::S3(2);
        let e = f.entry(2, WeylElt::identity()).unwrap();
        let ch = family_table(&e).unwrap();
        let se2: WeylElt = "s[e2]".parse().unwrap();
        let expect = VermaSum::from_set([
            f.weight(2, &WeylElt::identity()),
            f.weight(1, &se2),
            f.weight(1, &WeylElt::identity()),
            f.weight(0, &WeylElt::identity()),
        ]);
        assert_eq!(ch, expect);
    }

    #[test]
    fn labels() {
        assert_eq!(tilting_character(&-Weight::rho()), TableValue::label(LABEL_INTEGRAL));
        let l = w("-7/2|1/4,13/4,-7/2");
        assert!(tilting_character(&l).as_character().is_some());
    }
}

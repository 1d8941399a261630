//! Cross-checks of the closed-form tables against the translation engine
//! and the flag certificates.

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::characters::{flags_certificates, VermaSum, DEFAULT_SEARCH_DEPTH};
use crate::osp::{table_osp32, Osp32, OspWeight};
use crate::rational::{int, rat, Rat};
use crate::system::{RootSystem, G3};
use crate::tables::{family_table, tilting_character, Entry, Frame};
use crate::translation::Deriver;
use crate::weights::Weight;

/// One swept weight and the outcome of every comparison on it.
#[derive(Clone, Debug, Serialize)]
pub struct Check<W: Ord + Copy + std::fmt::Display> {
    pub name: String,
    pub weight: W,
    pub table: Option<VermaSum<W>>,
    pub derived: Option<VermaSum<W>>,
    pub path: Option<String>,
    /// Certificates lie in the table support and the top coefficient is 1.
    pub certified: bool,
    pub error: Option<String>,
}

impl<W: Ord + Copy + std::fmt::Display> Check<W> {
    pub fn agrees(&self) -> bool {
        self.table.is_some() && self.table == self.derived
    }

    pub fn passed(&self) -> bool {
        self.agrees() && self.certified
    }
}

fn certified<S: RootSystem>(l: &S::Weight, ch: &VermaSum<S::Weight>) -> bool {
    ch.coeff(l) == 1
        && flags_certificates::<S>(l, DEFAULT_SEARCH_DEPTH).iter().all(|(m, _)| ch.coeff(&m) >= 1)
}

fn check<S: RootSystem>(
    deriver: &mut Deriver<S>,
    name: String,
    l: S::Weight,
    table: Result<VermaSum<S::Weight>, String>,
) -> Check<S::Weight> {
    let derived = deriver.derive(&l);
    let mut errors = Vec::new();
    if let Err(e) = &table {
        errors.push(format!("table: {e}"));
    }
    if let Err(e) = &derived {
        errors.push(format!("derivation: {e}"));
    }
    let table = table.ok();
    Check {
        name,
        weight: l,
        certified: table.as_ref().is_some_and(|t| certified::<S>(&l, t)),
        path: derived.as_ref().ok().map(|d| d.path.to_string()),
        derived: derived.ok().map(|d| d.character),
        table,
        error: (!errors.is_empty()).then(|| errors.join("; ")),
    }
}

/// A family frame with the range of `k` to sweep.
#[derive(Clone, Debug)]
pub struct FrameRange {
    pub frame: Frame,
    pub ks: RangeInclusive<i64>,
}

impl FrameRange {
    pub fn new(frame: Frame, ks: RangeInclusive<i64>) -> Self {
        FrameRange { frame, ks }
    }

    /// Distinct entries whose parameter, before symmetry, lies in range.
    pub fn entries(&self) -> Vec<Entry> {
        let mut out: Vec<Entry> = Vec::new();
        for k in self.ks.clone() {
            let k = self.frame.canonical_k(k);
            for w in self.frame.q(k) {
                let e = Entry { frame: self.frame, k, w };
                if !out.contains(&e) {
                    out.push(e);
                }
            }
        }
        out
    }
}

/// The frames outside the normalised range, checked through the
/// dispatcher rather than the frame's own formulas.
fn via_dispatcher(f: &Frame) -> bool {
    matches!(f, Frame::VNu(l) if *l < 1)
}

/// The sweep of the table-versus-derivation criterion.
pub fn acceptance_frames() -> Vec<FrameRange> {
    let mut out = Vec::new();
    for l in [-6, -3, 0, 3, 6] {
        out.push(FrameRange::new(Frame::VLambda(l), l - 3..=l + 3));
    }
    for l in [rat(1, 4), rat(-1, 4), rat(3, 4), rat(-3, 4), rat(5, 4)] {
        let lo = (-l * int(4) - int(4)).to_integer();
        out.push(FrameRange::new(Frame::VMu(l), lo..=6));
    }
    for l in [1, 4, -2] {
        out.push(FrameRange::new(Frame::VNu(l), -l - 4..=4));
    }
    for l in [1, 2, 4, 5] {
        // Cases change at k in {-1, 0, 1, 2, (l-1)/2, l/2}.
        out.push(FrameRange::new(Frame::S3(l), -4..=l / 2 + 3));
    }
    for l in 0..=3 {
        out.push(FrameRange::new(Frame::WG2(l), -8..=3 * l + 8));
    }
    out
}

/// Compares every entry of the frames with the derivation, sharing one
/// memo across the sweep.
pub fn sweep_g3(frames: &[FrameRange]) -> Vec<Check<Weight>> {
    let mut deriver = Deriver::<G3>::new();
    let mut out = Vec::new();
    for fr in frames {
        for e in fr.entries() {
            let l = e.weight();
            let table = if via_dispatcher(&e.frame) {
                tilting_character(&l).as_character().cloned().ok_or_else(|| "no table".to_string())
            } else {
                family_table(&e).map_err(|e| e.to_string())
            };
            out.push(check(&mut deriver, e.name(), l, table));
        }
    }
    out
}

/// osp(3|2) weights of all three atypical cases with `|a| <= jmax`.
pub fn osp_weights(jmax: i64) -> Vec<OspWeight> {
    let mut out = Vec::new();
    let third = rat(1, 3);
    for j in 0..=jmax {
        let mags: [Rat; 3] = [int(j), int(j) + rat(1, 2), int(j) + third];
        for m in mags {
            for sa in [1, -1] {
                for sb in [1, -1] {
                    let w = OspWeight::new(m * int(sa), m * int(sb));
                    if !out.contains(&w) && (m <= int(jmax)) {
                        out.push(w);
                    }
                }
            }
        }
    }
    out
}

pub fn sweep_osp(jmax: i64) -> Vec<Check<OspWeight>> {
    let mut deriver = Deriver::<Osp32>::new();
    osp_weights(jmax)
        .into_iter()
        .map(|l| check(&mut deriver, format!("T{l}"), l, Ok(table_osp32(&l))))
        .collect()
}

/// Entries of the lambda-family whose mirrored parameter `2l - k + 1`
/// yields a different weight or table.
pub fn v_symmetry_failures(frames: &[FrameRange]) -> Vec<String> {
    let mut bad = Vec::new();
    for fr in frames {
        let Frame::VLambda(l) = fr.frame else { continue };
        for k in fr.ks.clone() {
            let m = 2 * l - k + 1;
            let (f, p, q) = (fr.frame, fr.frame.point(k), fr.frame.point(m));
            let tables = |k| -> Vec<_> {
                f.q(k).into_iter().map(|w| (f.weight(k, &w), f.entry(k, w).and_then(|e| family_table(&e)).ok())).collect()
            };
            if p != q || tables(k) != tables(m) {
                bad.push(format!("{f} k={k}"));
            }
        }
    }
    bad
}

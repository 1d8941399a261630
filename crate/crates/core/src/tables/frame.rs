//! Parametrisations of the family blocks: a base weight moved along an
//! atypical root by `k`, its antidominant orbit point, and the orbit points
//! `w(point)` for minimal coset representatives `w`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{half, int, rat, to_i64, Rat};
use crate::weights::Weight;
use crate::weyl::{NamedGroup, Subgroup, WeylElt};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Frame {
    /// `l` in `3Z`; orbit of `[-l-1/2+k | 1/4-k/2, l+1/4-k/2, -l-1/2+k]`.
    VLambda(i64),
    /// `l` in `Z +- 1/4`; orbit of `[l+k | l+k, l-k/2, -2l-k/2]`.
    VMu(Rat),
    /// `l` in `3Z+1`; orbit of `[l+k | 1/4-k/2, -l-1/4-k/2, l+k]`.
    VNu(i64),
    /// `l` in `N` prime to 3; orbit of `[-l/2+k | -l/2+k, -k/2, l/2-k/2]`.
    S3(i64),
    /// `l` in `N`; orbit of `[k | k, (3l-k)/2, (-3l-k)/2]`.
    WG2(i64),
}

/// `{}_l X_k^w`: the orbit point `w(point(k))` of a frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Entry {
    pub frame: Frame,
    pub k: i64,
    pub w: WeylElt,
}

impl Frame {
    pub fn base(&self, k: i64) -> Weight {
        let k = int(k);
        let h = half();
        match *self {
            Frame::VLambda(l) => {
                let l = int(l);
                Weight::new(-l - h + k, rat(1, 4) - k * h, l + rat(1, 4) - k * h)
            }
            Frame::VMu(l) => Weight::new(l + k, l + k, l - k * h),
            Frame::VNu(l) => {
                let l = int(l);
                Weight::new(l + k, rat(1, 4) - k * h, -l - rat(1, 4) - k * h)
            }
            Frame::S3(l) => {
                let l = int(l);
                Weight::new(-l * h + k, -l * h + k, -k * h)
            }
            Frame::WG2(l) => {
                let l = int(l);
                Weight::new(k, k, (int(3) * l - k) * h)
            }
        }
    }

    pub fn group_name(&self) -> NamedGroup {
        match *self {
            Frame::VLambda(_) => NamedGroup::Z2Cubed,
            Frame::VMu(_) | Frame::VNu(_) => NamedGroup::Z2Squared,
            Frame::S3(l) if l % 2 == 0 => NamedGroup::S3,
            Frame::S3(_) => NamedGroup::Z2S3,
            Frame::WG2(_) => NamedGroup::WG2,
        }
    }

    pub fn group(&self) -> &'static Subgroup {
        self.group_name().group()
    }

    /// Whether the parameter lies in the family's range.
    pub fn is_valid(&self) -> bool {
        match *self {
            Frame::VLambda(l) => l % 3 == 0,
            Frame::VMu(l) => {
                let f = l * int(4);
                f.is_integer() && f.to_integer() % 2 != 0
            }
            Frame::VNu(l) => (l - 1).rem_euclid(3) == 0,
            Frame::S3(l) => l > 0 && l % 3 != 0,
            Frame::WG2(l) => l >= 0,
        }
    }

    /// The parameter `l` as a rational.
    pub fn ell(&self) -> Rat {
        match *self {
            Frame::VMu(l) => l,
            Frame::VLambda(l) | Frame::VNu(l) | Frame::S3(l) | Frame::WG2(l) => int(l),
        }
    }

    /// The frame of a family name (as printed by [`Frame::family_name`],
    /// dashes optional) and parameter.
    pub fn from_family(name: &str, ell: Rat) -> Result<Frame> {
        let bad = || Error::OutOfRange(ell.to_string(), format!("family {name}"));
        let whole = || to_i64(ell).ok_or_else(bad);
        let f = match name.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "vlambda" | "lambda" => Frame::VLambda(whole()?),
            "vmu" | "mu" => Frame::VMu(ell),
            "vnu" | "nu" => Frame::VNu(whole()?),
            "s3" => Frame::S3(whole()?),
            "wg2" => Frame::WG2(whole()?),
            _ => return Err(Error::Parse { what: "family", input: name.to_string() }),
        };
        if f.is_valid() { Ok(f) } else { Err(bad()) }
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            Frame::VLambda(_) => "v-lambda",
            Frame::VMu(_) => "v-mu",
            Frame::VNu(_) => "v-nu",
            Frame::S3(_) => "s3",
            Frame::WG2(_) => "wg2",
        }
    }

    /// The representative of `k` under the coincidences of the frame:
    /// `k <= l` in the lambda-family and `k < l/2` for odd `l` in S3.
    pub fn canonical_k(&self, k: i64) -> i64 {
        match *self {
            Frame::VLambda(l) if k > l => 2 * l - k + 1,
            Frame::S3(l) if l % 2 != 0 && 2 * k > l => l - k,
            _ => k,
        }
    }

    /// The antidominant point of the orbit of `base(k)`.
    pub fn point(&self, k: i64) -> Weight {
        let g = self.group();
        let b = self.base(k);
        g.elements()
            .map(|w| w.act(&b))
            .find(|m| g.is_antidominant(m))
            .expect("reflection group orbits meet the antidominant chamber")
    }

    /// `Q_k`: minimal coset representatives of the stabiliser of `point(k)`.
    pub fn q(&self, k: i64) -> Vec<WeylElt> {
        let g = self.group();
        g.coset_min_reps(&g.stabilizer(&self.point(k)))
    }

    pub fn weight(&self, k: i64, w: &WeylElt) -> Weight {
        w.act(&self.point(k))
    }

    pub fn entry(&self, k: i64, w: WeylElt) -> Result<Entry> {
        let k = self.canonical_k(k);
        if !self.q(k).contains(&w) {
            return Err(Error::NotInTable(
                format!("{}", Entry { frame: *self, k, w }),
                "not a minimal coset representative".into(),
            ));
        }
        Ok(Entry { frame: *self, k, w })
    }

    /// Writes `l = w(point(k))` with `k` canonical and `w` in `Q_k`.
    pub fn locate(&self, l: &Weight) -> Option<Entry> {
        let d0 = self.base(0).d();
        let mut ks: Vec<i64> = [l.d() - d0, -l.d() - d0]
            .into_iter()
            .filter_map(to_i64)
            .map(|k| self.canonical_k(k))
            .collect();
        ks.dedup();
        for k in ks {
            let p = self.point(k);
            for w in self.q(k) {
                if w.act(&p) == *l {
                    return Some(Entry { frame: *self, k, w });
                }
            }
        }
        None
    }

    /// All entries with canonical `k` in the range.
    pub fn entries(&self, ks: std::ops::RangeInclusive<i64>) -> Vec<Entry> {
        let mut out = Vec::new();
        for k in ks {
            if self.canonical_k(k) != k {
                continue;
            }
            for w in self.q(k) {
                out.push(Entry { frame: *self, k, w });
            }
        }
        out
    }

    /// Name of the `i`-th Coxeter generator of the frame's group.
    fn generator_name(&self, i: usize, latex: bool) -> &'static str {
        match (self.group_name(), i, latex) {
            (NamedGroup::Z2Cubed, 0, _) => "+",
            (NamedGroup::Z2Cubed, 1, _) | (NamedGroup::Z2Squared, 0, _) => "1",
            (NamedGroup::Z2Cubed, 2, _) | (NamedGroup::Z2Squared, 1, _) => "2",
            (NamedGroup::Z2S3, 0, false) => "s0",
            (NamedGroup::Z2S3, 0, true) => "s_0",
            (NamedGroup::S3, 0, false) | (NamedGroup::Z2S3, 1, false) => "s[e1]",
            (NamedGroup::S3, 1, false) | (NamedGroup::Z2S3, 2, false) => "s[e2]",
            (NamedGroup::S3, 0, true) | (NamedGroup::Z2S3, 1, true) => "s_{\\epsilon_1}",
            (NamedGroup::S3, 1, true) | (NamedGroup::Z2S3, 2, true) => "s_{\\epsilon_2}",
            (_, 0, false) => "s1",
            (_, 1, false) => "s2",
            (_, 0, true) => "s_1",
            _ => "s_2",
        }
    }

    /// Superscript of `w`: `1`, `2`, `12` and `+` in the V-family, a reduced
    /// word otherwise.
    pub fn superscript(&self, w: &WeylElt, latex: bool) -> String {
        let g = self.group();
        let gens = g.generators();
        if matches!(self, Frame::VLambda(_) | Frame::VMu(_) | Frame::VNu(_)) {
            // Generators commute; list them in the order 1, 2, +.
            let word = g.reduced_word(w).unwrap_or_default();
            let mut s = String::new();
            for name in ["1", "2", "+"] {
                if word.iter().any(|x| {
                    let i = gens.iter().position(|y| y == x).unwrap();
                    self.generator_name(i, latex) == name
                }) {
                    s.push_str(name);
                }
            }
            return s;
        }
        g.reduced_word(w)
            .unwrap_or_default()
            .iter()
            .map(|x| self.generator_name(gens.iter().position(|y| y == x).unwrap(), latex))
            .collect()
    }

    /// Inverse of [`Frame::superscript`] for the plain-text form.
    pub fn parse_superscript(&self, s: &str) -> Result<WeylElt> {
        let g = self.group();
        let t = s.trim();
        if t.is_empty() || t == "e" || t == "∅" {
            return Ok(WeylElt::identity());
        }
        if matches!(self, Frame::VLambda(_) | Frame::VMu(_) | Frame::VNu(_)) {
            let mut w = WeylElt::identity();
            for c in t.chars() {
                let name = c.to_string();
                let i = (0..g.generators().len())
                    .find(|&i| self.generator_name(i, false) == name)
                    .ok_or_else(|| Error::NotInTable(s.to_string(), "unknown superscript".into()))?;
                w = w.compose(&g.generators()[i]);
            }
            return Ok(w);
        }
        let w: WeylElt = t.parse()?;
        if !g.contains(&w) {
            return Err(Error::NotInGroup(w.to_string(), g.name().to_string()));
        }
        Ok(w)
    }
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} l={}", self.family_name(), self.ell())
    }
}

impl Entry {
    pub fn weight(&self) -> Weight {
        self.frame.weight(self.k, &self.w)
    }

    /// Display name such as `_3λ_2^{1+}`.
    pub fn name(&self) -> String {
        let sym = match self.frame {
            Frame::VMu(_) => "μ",
            Frame::VNu(_) => "ν",
            _ => "λ",
        };
        let sup = self.frame.superscript(&self.w, false);
        let base = format!("_{}{}_{}", self.frame.ell(), sym, self.k);
        if sup.is_empty() {
            base
        } else {
            format!("{base}^{{{sup}}}")
        }
    }

    pub fn latex(&self) -> String {
        let sym = match self.frame {
            Frame::VMu(_) => "\\mu",
            Frame::VNu(_) => "\\nu",
            _ => "\\lambda",
        };
        let ell = self.frame.ell();
        let ell = if ell.is_integer() {
            ell.to_string()
        } else {
            let (n, d) = (ell.numer(), ell.denom());
            if *n < 0 {
                format!("-\\frac{{{}}}{{{}}}", -n, d)
            } else {
                format!("\\frac{{{n}}}{{{d}}}")
            }
        };
        let sup = self.frame.superscript(&self.w, true);
        let mut s = format!("{{}}_{{{ell}}}{sym}_{{{}}}", self.k);
        if !sup.is_empty() {
            s.push_str(&format!("^{{{sup}}}"));
        }
        s
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Serialize for Entry {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Entry", 5)?;
        st.serialize_field("family", self.frame.family_name())?;
        st.serialize_field("ell", &self.frame.ell().to_string())?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("w", &self.frame.superscript(&self.w, false))?;
        st.serialize_field("weight", &self.weight())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bases_are_the_printed_weights() {
        let w = |s: &str| s.parse::<Weight>().unwrap();
        assert_eq!(Frame::VLambda(3).base(0), w("-7/2|1/4,13/4,-7/2"));
        assert_eq!(Frame::S3(2).base(0), w("-1|-1,0,1"));
        assert_eq!(Frame::WG2(1).base(0), w("0|0,3/2,-3/2"));
        assert_eq!(Frame::VNu(1).base(0), w("1|1/4,-5/4,1"));
        assert_eq!(Frame::VMu(rat(1, 4)).base(0), w("1/4|1/4,1/4,-1/2"));
    }

    #[test]
    fn symmetric_parameters_share_a_point() {
        for l in [-6, -3, 0, 3, 6] {
            let f = Frame::VLambda(l);
            for k in -4..=l {
                assert_eq!(f.point(k), f.point(2 * l - k + 1), "l={l} k={k}");
            }
        }
        for l in [1, 5] {
            let f = Frame::S3(l);
            for k in -3..=2 {
                assert_eq!(f.point(k), f.point(l - k));
            }
        }
    }

    #[test]
    fn locate_inverts_weight() {
        for f in [Frame::VLambda(3), Frame::VMu(rat(-3, 4)), Frame::S3(5), Frame::WG2(2)] {
            for e in f.entries(-3..=4) {
                assert_eq!(f.locate(&e.weight()), Some(e), "{e}");
            }
        }
    }

    #[test]
    fn coincidences() {
        let f = Frame::VMu(rat(3, 4));
        assert_eq!(f.q(0).len(), 2);
        assert_eq!(f.q(-3).len(), 2);
        assert_eq!(f.q(2).len(), 4);
        let n = Frame::VNu(4);
        assert_eq!(n.q(-4).len(), 2);
        assert_eq!(Frame::VLambda(0).q(0).len(), 4);
        assert_eq!(Frame::WG2(0).q(0).len(), 1);
    }

    #[test]
    fn superscripts_roundtrip() {
        for f in [Frame::VLambda(3), Frame::S3(5), Frame::WG2(1)] {
            for w in f.group().elements() {
                let s = f.superscript(&w, false);
                assert_eq!(f.parse_superscript(&s).unwrap(), w, "{s}");
            }
        }
    }
}

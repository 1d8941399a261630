//! The closed-form tilting characters of the V, S3 and W_G2 families,
//! transcribed case by case.
//!
//! Conventions: a sum over `sigma` collects the distinct weights it names;
//! separately written sums and terms add multiplicities.

use crate::characters::VermaSum;
use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::weights::Weight;
use crate::weyl::{named_set, NamedSet, Subgroup, WeylElt};

use super::frame::{Entry, Frame};

/// Evaluation context for one entry `w(point(k))`.
struct Ctx {
    e: Entry,
    g: &'static Subgroup,
}

impl Ctx {
    fn new(e: &Entry) -> Self {
        Ctx { e: *e, g: e.frame.group() }
    }

    fn k(&self) -> i64 {
        self.e.k
    }

    fn w(&self) -> WeylElt {
        self.e.w
    }

    fn m(&self, dk: i64, s: &WeylElt) -> Weight {
        self.e.frame.weight(self.e.k + dk, s)
    }

    fn leq(&self, a: &WeylElt, b: &WeylElt) -> bool {
        self.g.bruhat_leq(a, b).unwrap_or(false)
    }

    /// `sum_{sigma <= any top, sigma in within} M_{k+dk}^sigma`.
    fn below(&self, dk: i64, tops: &[WeylElt], within: Option<&[WeylElt]>) -> VermaSum<Weight> {
        VermaSum::from_set(
            self.g
                .elements()
                .filter(|s| tops.iter().any(|t| self.leq(s, t)))
                .filter(|s| within.is_none_or(|set| set.contains(s)))
                .map(|s| self.m(dk, &s)),
        )
    }

    fn le(&self, dk: i64, top: WeylElt) -> VermaSum<Weight> {
        self.below(dk, &[top], None)
    }

    fn le_in(&self, dk: i64, top: WeylElt, set: &[WeylElt]) -> VermaSum<Weight> {
        self.below(dk, &[top], Some(set))
    }

    /// Explicitly printed terms: `(dk, superscripts)` pairs.
    fn terms(&self, lines: &[(i64, &str)]) -> Result<VermaSum<Weight>> {
        let mut out = VermaSum::new();
        for (dk, sups) in lines {
            for s in sups.split_whitespace() {
                let s = if s == "e" { "" } else { s };
                out.add_term(self.m(*dk, &self.e.frame.parse_superscript(s)?), 1);
            }
        }
        Ok(out)
    }

    /// Explicitly printed lines keyed by the word of `w`.
    fn by_word(&self, rows: &[(&str, &[(i64, &str)])]) -> Result<VermaSum<Weight>> {
        for (word, lines) in rows {
            if self.e.frame.parse_superscript(word)? == self.w() {
                return self.terms(lines);
            }
        }
        Err(self.not_listed("w outside Q_k"))
    }

    fn not_listed(&self, why: &str) -> Error {
        Error::NotInTable(self.e.to_string(), why.to_string())
    }

    fn word(&self, s: &str) -> WeylElt {
        s.parse().expect("table words parse")
    }
}

fn set(s: NamedSet) -> Vec<WeylElt> {
    named_set(s)
}

fn union(a: NamedSet, b: NamedSet) -> Vec<WeylElt> {
    let mut v = set(a);
    v.extend(set(b));
    v
}

/// Evaluates the family table at an entry.
pub fn family_table(e: &Entry) -> Result<VermaSum<Weight>> {
    let c = Ctx::new(e);
    match e.frame {
        Frame::VLambda(l) => v_lambda(&c, l),
        Frame::VMu(l) => v_mu(&c, l),
        Frame::VNu(l) => v_nu(&c, l),
        Frame::S3(l) if l % 2 == 0 => s3_even(&c, l),
        Frame::S3(l) => s3_odd(&c, l),
        Frame::WG2(l) => wg2(&c, l),
    }
}

/// The four lines shared by every generic V case, with the lower parameter
/// `k-1`.
const V_GENERIC: [(&str, &[(i64, &str)]); 4] = [
    ("", &[(0, "e"), (-1, "e")]),
    ("1", &[(0, "1 e"), (-1, "1 e")]),
    ("2", &[(0, "2 e"), (-1, "2 e")]),
    ("12", &[(0, "12 1 2 e"), (-1, "12 1 2 e")]),
];

fn pick(c: &Ctx, rows: &[(&str, &[(i64, &str)])], why: &str) -> Result<VermaSum<Weight>> {
    let sup = c.e.frame.superscript(&c.w(), false);
    rows.iter()
        .find(|(s, _)| *s == sup)
        .ok_or_else(|| c.not_listed(why))
        .and_then(|(_, lines)| c.terms(lines))
}

fn v_lambda(c: &Ctx, l: i64) -> Result<VermaSum<Weight>> {
    let k = c.k();
    let plus_generic: [(&str, &[(i64, &str)]); 4] = [
        ("+", &[(0, "+ e"), (1, "+ e")]),
        ("1+", &[(0, "1+ 1 + e"), (1, "1+ 1 + e")]),
        ("2+", &[(0, "2+ 2 + e"), (1, "2+ 2 + e")]),
        ("12+", &[(0, "12+ 12 1+ 2+ 1 2 + e"), (1, "12+ 12 1+ 2+ 1 2 + e")]),
    ];
    if l == 0 {
        let rows: Vec<(&str, &[(i64, &str)])> = if k == 0 {
            vec![
                ("", &[(0, "e"), (-1, "e")]),
                ("2", &[(0, "2 e"), (-1, "2 e")]),
                ("+", &[(0, "+ e 2"), (-1, "e")]),
                ("2+", &[(0, "2+ 2 + e")]),
            ]
        } else {
            vec![
                ("", &[(0, "e"), (-1, "e")]),
                ("2", &[(0, "2 e"), (-1, "2 e")]),
                ("+", &[(0, "+ e"), (1, "+ e")]),
                ("2+", &[(0, "2+ + 2 e"), (1, "2+ + 2 e")]),
            ]
        };
        return pick(c, &rows, "superscript outside the l = 0 table");
    }
    let mut rows: Vec<(&str, &[(i64, &str)])> = V_GENERIC.to_vec();
    if k < l {
        rows.extend(plus_generic);
    } else {
        let special: [(&str, &[(i64, &str)]); 4] = [
            ("+", &[(0, "+ e 2"), (-1, "e")]),
            ("1+", &[(0, "1+ 1 + e 12 2"), (-1, "1 e")]),
            ("2+", &[(0, "2+ 2 + e")]),
            ("12+", &[(0, "12+ 12 1+ 2+ 1 2 + e")]),
        ];
        rows.extend(special);
    }
    pick(c, &rows, "superscript outside the table")
}

fn v_mu(c: &Ctx, l: Rat) -> Result<VermaSum<Weight>> {
    let k = Rat::from(c.k());
    let four = Rat::from(4);
    let (one, zero) = (Rat::from(1), Rat::from(0));
    let quarter = Rat::new(1, 4);
    let rows: Vec<(&str, &[(i64, &str)])> = if k == zero && l == quarter {
        vec![
            ("", &[(0, "e"), (-1, "1 e"), (-2, "1 e")]),
            ("2", &[(0, "2 e"), (-1, "1 e")]),
        ]
    } else if k == one && l == -quarter {
        vec![("", &[(0, "e"), (-1, "2 e")]), ("1", &[(0, "1 e"), (-1, "2 e")])]
    } else if k == zero {
        vec![("", &[(0, "e"), (-1, "e 1")]), ("2", &[(0, "2 e"), (-1, "2 e 12 1")])]
    } else if k == one {
        vec![
            ("", &[(0, "e"), (-1, "e")]),
            ("1", &[(0, "1 e"), (-1, "e")]),
            ("2", &[(0, "2 e"), (-1, "2 e")]),
            ("12", &[(0, "12 1 2 e"), (-1, "2 e")]),
        ]
    } else if k == -four * l {
        vec![("", &[(0, "e"), (-1, "e 2")]), ("1", &[(0, "1 e"), (-1, "12 1 2 e")])]
    } else if k == -four * l + one {
        vec![
            ("", &[(0, "e"), (-1, "e")]),
            ("1", &[(0, "1 e"), (-1, "1 e")]),
            ("2", &[(0, "2 e"), (-1, "e")]),
            ("12", &[(0, "12 1 2 e"), (-1, "1 e")]),
        ]
    } else {
        V_GENERIC.to_vec()
    };
    pick(c, &rows, "superscript outside the table")
}

fn v_nu(c: &Ctx, l: i64) -> Result<VermaSum<Weight>> {
    let k = c.k();
    let rows: Vec<(&str, &[(i64, &str)])> = if k == -l {
        vec![("", &[(0, "e"), (-1, "e 2")]), ("1", &[(0, "1 e"), (-1, "1 12 e 2")])]
    } else if k == -l + 1 {
        vec![
            ("", &[(0, "e"), (-1, "e"), (-2, "e")]),
            ("1", &[(0, "1 e"), (-1, "1 e"), (-2, "1 e")]),
            ("2", &[(0, "2 e"), (-1, "e")]),
            ("12", &[(0, "12 1 2 e"), (-1, "1 e")]),
        ]
    } else {
        V_GENERIC.to_vec()
    };
    pick(c, &rows, "superscript outside the table")
}

fn s3_even(c: &Ctx, l: i64) -> Result<VermaSum<Weight>> {
    let (k, w) = (c.k(), c.w());
    let (h1, h2) = (set(NamedSet::H1), set(NamedSet::H2));
    let se1 = c.word("s[e1]");
    let se2 = c.word("s[e2]");
    if l == 2 && k == 1 {
        return c.by_word(&[
            ("", &[(0, "e"), (-1, "s[e1] e"), (-2, "s[e1] e")]),
            ("s[e2]", &[
                (0, "s[e2] e"),
                (-1, "s[e2]s[e1] s[e1] e"),
                (-2, "s[e2]s[e1] s[e2] s[e1] e"),
            ]),
            ("s[e1]s[e2]", &[(0, "s[e1]s[e2] s[e2] e"), (-1, "s[e2]s[e1] s[e1] e")]),
        ]);
    }
    if l == 2 && k == 2 {
        return c.by_word(&[
            ("", &[(0, "e"), (-1, "s[e2] e"), (-2, "e")]),
            ("s[e1]", &[(0, "s[e1] e"), (-1, "s[e1]s[e2] s[e2] e"), (-2, "s[e1] e")]),
            ("s[e2]s[e1]", &[(0, "s[e2]s[e1] s[e1] e"), (-1, "s[e1]s[e2] s[e2] e")]),
        ]);
    }
    if k == 0 || k == l {
        require(c, &h1)?;
        return Ok(&c.le_in(0, w, &h1) + &c.le(-1, w.compose(&se2)));
    }
    if 2 * k == l {
        require(c, &h2)?;
        return Ok(&c.le_in(0, w, &h2) + &c.le(-1, w.compose(&se1)));
    }
    let three = |hs: &[WeylElt]| {
        let mut t = &c.le(0, w) + &c.le_in(-1, w, hs);
        if hs.contains(&w) {
            t += &c.le(-2, w);
        }
        t
    };
    if k == 1 || k == l + 1 {
        return Ok(three(&h1));
    }
    if 2 * k == l + 2 {
        return Ok(three(&h2));
    }
    Ok(&c.le(0, w) + &c.le(-1, w))
}

fn require(c: &Ctx, q: &[WeylElt]) -> Result<()> {
    if q.contains(&c.w()) {
        Ok(())
    } else {
        Err(c.not_listed("w outside Q_k"))
    }
}

fn s3_odd(c: &Ctx, l: i64) -> Result<VermaSum<Weight>> {
    let (k, w) = (c.k(), c.w());
    let (h1, h2) = (set(NamedSet::H1), set(NamedSet::H2));
    let (j1, j2) = (set(NamedSet::J1), set(NamedSet::J2));
    let j1h1 = union(NamedSet::J1, NamedSet::H1);
    let se1 = c.word("s[e1]");
    let se2 = c.word("s[e2]");
    let s0 = WeylElt::s0();
    let upper = w.has_s0();
    // Rows k, k-1 for w in S3 and rows k, k+1 for w in s0 S3.
    let rows_down = || &c.le(0, w) + &c.le(-1, w);
    let rows_up = || &c.le(0, w) + &c.le(1, w);
    let h1_rows = || &c.le_in(0, w, &h1) + &c.le(-1, w.compose(&se2));
    if l == 1 && k == 0 {
        require(c, &j1h1)?;
        if !upper {
            return Ok(h1_rows());
        }
        return c.by_word(&[
            ("s0", &[(0, "s0 e s[e1] s[e2]s[e1]"), (-1, "e s[e1] s[e2] s[e2]s[e1]")]),
            ("s0s[e1]", &[(0, "s0s[e1] s0 s[e1] e s[e2]s[e1]"), (-1, "e s[e1]")]),
            ("s0s[e2]s[e1]", &[(0, "s0s[e2]s[e1] s0s[e1] s0 s[e2]s[e1] s[e1] e")]),
        ]);
    }
    if k == 0 {
        require(c, &j1h1)?;
        if !upper {
            return Ok(h1_rows());
        }
        return Ok(&c.le_in(0, w, &j1h1) + &c.le(1, w.compose(&se2)));
    }
    if k == 1 {
        if upper {
            return Ok(rows_up());
        }
        let mut t = &c.le(0, w) + &c.le_in(-1, w, &h1);
        if h1.contains(&w) {
            t += &c.le(-2, w);
        }
        return Ok(t);
    }
    if k == -1 {
        if !upper {
            return Ok(rows_down());
        }
        let mut t = &c.le(0, w) + &c.le_in(1, w, &j1h1);
        if j1.contains(&w) {
            t += &c.le(2, w);
        }
        return Ok(t);
    }
    if 2 * k == l - 1 {
        if !upper {
            return Ok(rows_down());
        }
        if j2.contains(&w) {
            let v = s0.compose(&w);
            debug_assert!(h2.contains(&v));
            return Ok(&c.below(0, &[w, v.compose(&se1)], None) + &c.le(-1, v));
        }
        return Ok(c.le(0, w));
    }
    Ok(if upper { rows_up() } else { rows_down() })
}

fn wg2(c: &Ctx, l: i64) -> Result<VermaSum<Weight>> {
    let (k, w) = (c.k(), c.w());
    let (k1, k2) = (set(NamedSet::K1), set(NamedSet::K2));
    let (s1, s2) = (WeylElt::s1(), WeylElt::s2());
    if k == 0 && l == 0 {
        require(c, &[WeylElt::identity()])?;
        let mut t = VermaSum::single(c.m(0, &w));
        t += &VermaSum::from_set(k2.iter().map(|s| c.m(-1, s)));
        return Ok(t);
    }
    if l == 0 && k == 1 {
        require(c, &k2)?;
        return c.by_word(&[
            ("", &[(0, "e"), (-1, "e"), (-2, "s1s2s1s2 s2s1s2 s1s2 s2 e")]),
            ("s2", &[(0, "s2 e"), (-1, "e"), (-2, "s2s1s2 s1s2 s2 e")]),
            ("s1s2", &[(0, "s1s2 s2 e"), (-1, "e"), (-2, "s1s2 s2 e")]),
            ("s2s1s2", &[(0, "s2s1s2 s1s2 s2 e"), (-1, "e"), (-2, "s2 e")]),
            ("s1s2s1s2", &[(0, "s1s2s1s2 s2s1s2 s1s2 s2 e"), (-1, "e"), (-2, "e")]),
            ("s2s1s2s1s2", &[(0, "s2s1s2s1s2 s1s2s1s2 s2s1s2 s1s2 s2 e"), (-1, "e")]),
        ]);
    }
    if k == 1 && l == 1 {
        require(c, &k2)?;
        return Ok(&c.le_in(0, w, &k2) + &c.le_in(-1, w.compose(&s1), &k1));
    }
    if l == 1 && k == 0 {
        require(c, &k1)?;
        return Ok(&c.le_in(0, w, &k1) + &c.le_in(-1, w.compose(&s2), &k2));
    }
    if (k.abs() == 3 * l && k != 0) || (k == 0 && l != 0 && l != 1) {
        require(c, &k1)?;
        return Ok(&c.le_in(0, w, &k1) + &c.le(-1, w.compose(&s2)));
    }
    if k.abs() == l && k != 0 && k != 1 {
        require(c, &k2)?;
        return Ok(&c.le_in(0, w, &k2) + &c.le(-1, w.compose(&s1)));
    }
    if l == 0 && k != 0 && k != 1 {
        require(c, &k2)?;
        return Ok(&c.le_in(0, w, &k2) + &c.le_in(-1, w, &k2));
    }
    let three = |hs: &[WeylElt]| {
        let mut t = &c.le(0, w) + &c.le_in(-1, w, hs);
        if hs.contains(&w) {
            t += &c.le(-2, w);
        }
        t
    };
    if (l != 0 && (k == 3 * l + 1 || k == -3 * l + 1)) || (k == 1 && l != 0 && l != 1) {
        return Ok(three(&k1));
    }
    if l != 0 && (k == l + 1 || k == -l + 1) {
        return Ok(three(&k2));
    }
    Ok(&c.le(0, w) + &c.le(-1, w))
}

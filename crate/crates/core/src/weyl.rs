//! The Weyl group `Z2 x D12` of G(3), its reflection subgroups, and Bruhat
//! orders relative to their own Coxeter generators.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use num_traits::Signed;
use serde::{Serialize, Serializer};

use crate::error::{parse_err, Error, Result};
use crate::rational::Rat;
use crate::rootdata::{PosRoot, Root};
use crate::weights::{coroot_pairing, Weight};

/// An element of `W = <s0> x W_G2`, stored as an index into a fixed table.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WeylElt(u8);

#[derive(Clone, Copy)]
struct Signed3 {
    flip: bool,
    neg: bool,
    perm: [usize; 3],
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];

struct Tables {
    data: Vec<Signed3>,
    mul: [[u8; 24]; 24],
    inv: [u8; 24],
    word: Vec<String>,
    length: [u8; 24],
}

fn encode(s: Signed3) -> u8 {
    let p = PERMS.iter().position(|p| *p == s.perm).unwrap();
    (s.flip as u8) * 12 + (s.neg as u8) * 6 + p as u8
}

static TABLES: LazyLock<Tables> = LazyLock::new(|| {
    let data: Vec<Signed3> = (0..24)
        .map(|i| Signed3 { flip: i >= 12, neg: (i % 12) >= 6, perm: PERMS[i % 6] })
        .collect();
    let mut mul = [[0u8; 24]; 24];
    for (i, a) in data.iter().enumerate() {
        for (j, b) in data.iter().enumerate() {
            let mut perm = [0; 3];
            for (k, p) in perm.iter_mut().enumerate() {
                *p = b.perm[a.perm[k]];
            }
            let c = Signed3 { flip: a.flip ^ b.flip, neg: a.neg ^ b.neg, perm };
            mul[i][j] = encode(c);
        }
    }
    let mut inv = [0u8; 24];
    for i in 0..24 {
        inv[i] = (0..24).find(|&j| mul[i][j as usize] == 0).unwrap();
    }
    // Shortlex reduced words in s0 < s1 < s2 by breadth-first search.
    let gens = [GEN_S0, GEN_S1, GEN_S2];
    let mut word = vec![String::new(); 24];
    let mut length = [u8::MAX; 24];
    length[0] = 0;
    let mut queue = VecDeque::from([0u8]);
    while let Some(w) = queue.pop_front() {
        for (gi, g) in gens.iter().enumerate() {
            let v = mul[w as usize][*g as usize];
            if length[v as usize] == u8::MAX {
                length[v as usize] = length[w as usize] + 1;
                word[v as usize] = format!("{}s{}", word[w as usize], gi);
                queue.push_back(v);
            }
        }
    }
    word[0] = "e".to_string();
    Tables { data, mul, inv, word, length }
});

// s0: d -> -d; s1 swaps x and y; s2: (x,y,z) -> (-x,-z,-y).
const GEN_S0: u8 = 12;
const GEN_S1: u8 = 1;
const GEN_S2: u8 = 6 + 2;

impl WeylElt {
    pub fn identity() -> Self {
        WeylElt(0)
    }
    pub fn s0() -> Self {
        WeylElt(GEN_S0)
    }
    pub fn s1() -> Self {
        WeylElt(GEN_S1)
    }
    pub fn s2() -> Self {
        WeylElt(GEN_S2)
    }

    pub fn all() -> impl Iterator<Item = WeylElt> {
        (0..24u8).map(WeylElt)
    }

    pub fn index(&self) -> usize {
        self.0 as usize
    }

    pub fn compose(&self, other: &WeylElt) -> WeylElt {
        WeylElt(TABLES.mul[self.index()][other.index()])
    }

    pub fn inverse(&self) -> WeylElt {
        WeylElt(TABLES.inv[self.index()])
    }

    pub fn is_identity(&self) -> bool {
        self.0 == 0
    }

    /// Whether the `Z2` factor acts (flips the sign of `d`).
    pub fn has_s0(&self) -> bool {
        TABLES.data[self.index()].flip
    }

    /// Length with respect to `s0, s1, s2`.
    pub fn length(&self) -> usize {
        TABLES.length[self.index()] as usize
    }

    /// Shortlex reduced word in `s0, s1, s2` (`e` for the identity).
    pub fn word(&self) -> &'static str {
        &TABLES.word[self.index()]
    }

    pub fn act(&self, l: &Weight) -> Weight {
        let s = TABLES.data[self.index()];
        let v = l.coords();
        let sign = if s.neg { -Rat::from_integer(1) } else { Rat::from_integer(1) };
        let c = [sign * v[s.perm[0]], sign * v[s.perm[1]], sign * v[s.perm[2]]];
        let d = if s.flip { -l.d() } else { l.d() };
        Weight::from_coords(d, c)
    }

    /// Reflection in an even root.
    pub fn reflection(g: Root) -> Result<WeylElt> {
        if !g.is_even() {
            return Err(Error::NotEven(g.to_string()));
        }
        let probe = Weight::frac([7, 2, 5, -7], 11);
        let target = reflect(&probe, g)?;
        Ok(WeylElt::all().find(|w| w.act(&probe) == target).expect("reflection is in W"))
    }

    /// Whether this element is a reflection `s_g` for an even root `g`.
    pub fn is_reflection(&self) -> bool {
        Root::even_positive().any(|g| WeylElt::reflection(g).unwrap() == *self)
    }

    pub fn from_word(gens: &[WeylElt]) -> WeylElt {
        gens.iter().fold(WeylElt::identity(), |acc, g| acc.compose(g))
    }
}

/// `s_g(l) = l - <l, g^vee> g`.
pub fn reflect(l: &Weight, g: Root) -> Result<Weight> {
    let c = coroot_pairing(l, g)?;
    Ok(*l - g.vector() * c)
}

impl fmt::Display for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.word())
    }
}

impl Serialize for WeylElt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.word())
    }
}

impl FromStr for WeylElt {
    type Err = Error;

    /// Parses products such as `s0s2s1`, `s2*s1`, or `e`. Reflections in named
    /// roots may be written `s[ε1]` or `s[e2-e3]`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        if t.is_empty() || t == "e" || t == "1" {
            return Ok(WeylElt::identity());
        }
        let mut acc = WeylElt::identity();
        let mut rest = t.as_str();
        while !rest.is_empty() {
            let r = rest.strip_prefix('s').ok_or_else(|| parse_err("Weyl word", s))?;
            let (g, tail) = if let Some(inner) = r.strip_prefix('[') {
                let end = inner.find(']').ok_or_else(|| parse_err("Weyl word", s))?;
                let root: Root = inner[..end].parse()?;
                (WeylElt::reflection(root)?, &inner[end + 1..])
            } else {
                let c = r.chars().next().ok_or_else(|| parse_err("Weyl word", s))?;
                let g = match c {
                    '0' => WeylElt::s0(),
                    '1' => WeylElt::s1(),
                    '2' => WeylElt::s2(),
                    _ => return Err(parse_err("Weyl word", s)),
                };
                (g, &r[1..])
            };
            acc = acc.compose(&g);
            rest = tail;
        }
        Ok(acc)
    }
}

/// Shape of the G2 part of a reflection subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum G2Part {
    Trivial,
    Z2,
    Z2xZ2,
    S3,
    WG2,
}

/// A reflection subgroup of `W` together with its own Coxeter generators.
#[derive(Clone, Debug)]
pub struct Subgroup {
    name: String,
    gens: Vec<WeylElt>,
    members: u32,
    length: [u8; 24],
    word: Vec<Vec<usize>>,
    below: [u32; 24],
}

impl PartialEq for Subgroup {
    fn eq(&self, o: &Self) -> bool {
        self.members == o.members && self.gens == o.gens
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    /// The subgroup generated by `gens`, with Bruhat order taken relative to
    /// them. The generators must form a Coxeter system for the result.
    pub fn generated(name: &str, gens: Vec<WeylElt>) -> Self {
        let mut length = [u8::MAX; 24];
        let mut word = vec![Vec::new(); 24];
        length[0] = 0;
        let mut queue = VecDeque::from([WeylElt::identity()]);
        while let Some(w) = queue.pop_front() {
            for (gi, g) in gens.iter().enumerate() {
                let v = w.compose(g);
                if length[v.index()] == u8::MAX {
                    length[v.index()] = length[w.index()] + 1;
                    let mut wd = word[w.index()].clone();
                    wd.push(gi);
                    word[v.index()] = wd;
                    queue.push_back(v);
                }
            }
        }
        let members = (0..24).filter(|&i| length[i] != u8::MAX).fold(0u32, |m, i| m | (1 << i));
        let mut below = [0u32; 24];
        for i in 0..24 {
            if members & (1 << i) == 0 {
                continue;
            }
            let wd = &word[i];
            for mask in 0u32..(1 << wd.len()) {
                let u = wd
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask & (1 << k) != 0)
                    .fold(WeylElt::identity(), |acc, (_, &g)| acc.compose(&gens[g]));
                below[i] |= 1 << u.index();
            }
        }
        Subgroup { name: name.to_string(), gens, members, length, word, below }
    }

    pub fn named(g: NamedGroup) -> Self {
        let s0 = WeylElt::s0();
        let (s1, s2) = (WeylElt::s1(), WeylElt::s2());
        let se1 = WeylElt::reflection(Root::pos(PosRoot::Eps1)).unwrap();
        let se2 = WeylElt::reflection(Root::pos(PosRoot::Eps2)).unwrap();
        let sn3 = WeylElt::reflection(Root::pos(PosRoot::NegEps3)).unwrap();
        let gens = match g {
            NamedGroup::WG2 => vec![s1, s2],
            NamedGroup::S3 => vec![se1, se2],
            NamedGroup::Z2S3 => vec![s0, se1, se2],
            NamedGroup::Z2WG2 => vec![s0, s1, s2],
            NamedGroup::Z2Cubed => vec![s0, s1, sn3],
            NamedGroup::Z2Squared => vec![s1, sn3],
        };
        Subgroup::generated(g.label(), gens)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[WeylElt] {
        &self.gens
    }

    pub fn contains(&self, w: &WeylElt) -> bool {
        self.members & (1 << w.index()) != 0
    }

    pub fn elements(&self) -> impl Iterator<Item = WeylElt> + '_ {
        WeylElt::all().filter(|w| self.contains(w))
    }

    pub fn order(&self) -> usize {
        self.members.count_ones() as usize
    }

    pub fn has_s0(&self) -> bool {
        self.contains(&WeylElt::s0())
    }

    pub fn g2_part(&self) -> G2Part {
        let n = self.elements().filter(|w| !w.has_s0()).count();
        match n {
            1 => G2Part::Trivial,
            2 => G2Part::Z2,
            4 => G2Part::Z2xZ2,
            6 => G2Part::S3,
            12 => G2Part::WG2,
            _ => unreachable!("no reflection subgroup of order {n}"),
        }
    }

    /// Length relative to this group's generators.
    pub fn length(&self, w: &WeylElt) -> Result<usize> {
        self.check(w)?;
        Ok(self.length[w.index()] as usize)
    }

    /// A reduced word in this group's generators.
    pub fn reduced_word(&self, w: &WeylElt) -> Result<Vec<WeylElt>> {
        self.check(w)?;
        Ok(self.word[w.index()].iter().map(|&g| self.gens[g]).collect())
    }

    pub fn bruhat_leq(&self, u: &WeylElt, w: &WeylElt) -> Result<bool> {
        self.check(u)?;
        self.check(w)?;
        Ok(self.below[w.index()] & (1 << u.index()) != 0)
    }

    /// All `u <= w`.
    pub fn interval(&self, w: &WeylElt) -> Result<Vec<WeylElt>> {
        self.check(w)?;
        let b = self.below[w.index()];
        Ok(WeylElt::all().filter(|u| b & (1 << u.index()) != 0).collect())
    }

    fn check(&self, w: &WeylElt) -> Result<()> {
        if self.contains(w) {
            Ok(())
        } else {
            Err(Error::NotInGroup(w.to_string(), self.name.clone()))
        }
    }

    /// Positive even roots whose reflections lie in the group.
    pub fn reflection_roots(&self) -> Vec<Root> {
        Root::even_positive()
            .filter(|g| self.contains(&WeylElt::reflection(*g).unwrap()))
            .collect()
    }

    /// Whether `mu` is antidominant: non-positive pairing with every positive
    /// even root whose reflection is in the group.
    pub fn is_antidominant(&self, mu: &Weight) -> bool {
        self.reflection_roots().into_iter().all(|g| !coroot_pairing(mu, g).unwrap().is_positive())
    }

    /// Stabiliser of `mu` inside the group.
    pub fn stabilizer(&self, mu: &Weight) -> Vec<WeylElt> {
        self.elements().filter(|w| w.act(mu) == *mu).collect()
    }

    /// Minimal-length representatives of the left cosets `w * stab`.
    pub fn coset_min_reps(&self, stab: &[WeylElt]) -> Vec<WeylElt> {
        let mut reps: BTreeMap<Vec<WeylElt>, WeylElt> = BTreeMap::new();
        for w in self.elements() {
            let mut coset: Vec<WeylElt> = stab.iter().map(|s| w.compose(s)).collect();
            coset.sort();
            let best = coset.iter().copied().min_by_key(|u| (self.length[u.index()], *u)).unwrap();
            reps.insert(coset, best);
        }
        let mut out: Vec<WeylElt> = reps.into_values().collect();
        out.sort_by_key(|u| (self.length[u.index()], *u));
        out
    }

    /// The antidominant point `mu` of the orbit of `l`, and for each minimal
    /// coset representative `w` of its stabiliser the orbit point `w(mu)`.
    pub fn orbit_antidominant(&self, l: &Weight) -> (Weight, Vec<(WeylElt, Weight)>) {
        let mu = self
            .elements()
            .map(|w| w.act(l))
            .find(|m| self.is_antidominant(m))
            .expect("reflection group orbits meet the antidominant chamber");
        let stab = self.stabilizer(&mu);
        let reps = self.coset_min_reps(&stab).into_iter().map(|w| (w, w.act(&mu))).collect();
        (mu, reps)
    }
}

/// The groups in which the tables take Bruhat orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedGroup {
    WG2,
    S3,
    Z2S3,
    Z2WG2,
    Z2Cubed,
    Z2Squared,
}

impl NamedGroup {
    pub fn label(&self) -> &'static str {
        match self {
            NamedGroup::WG2 => "W_G2",
            NamedGroup::S3 => "S3",
            NamedGroup::Z2S3 => "Z2xS3",
            NamedGroup::Z2WG2 => "Z2xW_G2",
            NamedGroup::Z2Cubed => "Z2xZ2xZ2",
            NamedGroup::Z2Squared => "Z2xZ2",
        }
    }
}

impl FromStr for NamedGroup {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase().replace(['×', '*'], "x");
        Ok(match t.as_str() {
            "w_g2" | "wg2" | "d12" => NamedGroup::WG2,
            "s3" => NamedGroup::S3,
            "z2xs3" => NamedGroup::Z2S3,
            "z2xw_g2" | "z2xwg2" | "w" => NamedGroup::Z2WG2,
            "z2xz2xz2" | "z2^3" => NamedGroup::Z2Cubed,
            "z2xz2" | "z2^2" => NamedGroup::Z2Squared,
            _ => return Err(parse_err("group name", s)),
        })
    }
}

static NAMED: LazyLock<Vec<Subgroup>> = LazyLock::new(|| {
    NamedGroup::ALL.iter().map(|g| Subgroup::named(*g)).collect()
});

impl NamedGroup {
    pub const ALL: [NamedGroup; 6] = [
        NamedGroup::WG2,
        NamedGroup::S3,
        NamedGroup::Z2S3,
        NamedGroup::Z2WG2,
        NamedGroup::Z2Cubed,
        NamedGroup::Z2Squared,
    ];

    /// The shared instance of the group.
    pub fn group(self) -> &'static Subgroup {
        &NAMED[NamedGroup::ALL.iter().position(|g| *g == self).unwrap()]
    }
}

pub fn bruhat_leq(u: &WeylElt, w: &WeylElt, within: NamedGroup) -> Result<bool> {
    within.group().bruhat_leq(u, w)
}

/// The subsets of `W` singled out in the tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedSet {
    H1,
    H2,
    J,
    J1,
    J2,
    K1,
    K2,
}

pub fn named_set(s: NamedSet) -> Vec<WeylElt> {
    let se1 = WeylElt::reflection(Root::pos(PosRoot::Eps1)).unwrap();
    let se2 = WeylElt::reflection(Root::pos(PosRoot::Eps2)).unwrap();
    let (s0, s1, s2) = (WeylElt::s0(), WeylElt::s1(), WeylElt::s2());
    let e = WeylElt::identity();
    let w = |g: &[WeylElt]| WeylElt::from_word(g);
    let h1 = vec![e, se1, w(&[se2, se1])];
    let h2 = vec![e, se2, w(&[se1, se2])];
    let with_s0 = |v: Vec<WeylElt>| v.into_iter().map(|x| s0.compose(&x)).collect::<Vec<_>>();
    match s {
        NamedSet::H1 => h1,
        NamedSet::H2 => h2,
        NamedSet::J => with_s0(Subgroup::named(NamedGroup::S3).elements().collect()),
        NamedSet::J1 => with_s0(h1),
        NamedSet::J2 => with_s0(h2),
        NamedSet::K1 => vec![
            e,
            s1,
            w(&[s2, s1]),
            w(&[s1, s2, s1]),
            w(&[s2, s1, s2, s1]),
            w(&[s1, s2, s1, s2, s1]),
        ],
        NamedSet::K2 => vec![
            e,
            s2,
            w(&[s1, s2]),
            w(&[s2, s1, s2]),
            w(&[s1, s2, s1, s2]),
            w(&[s2, s1, s2, s1, s2]),
        ],
    }
}

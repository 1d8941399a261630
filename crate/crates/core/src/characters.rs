//! Formal characters: finite sums of Verma characters, truncated power series
//! of Verma characters, the right side of the Jantzen sum formula, and the
//! Verma-flag certificates derived from it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Sub};

use num_traits::Zero;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::system::RootSystem;

/// Default length of reflection chains explored by the certificates.
pub const DEFAULT_SEARCH_DEPTH: usize = 8;

/// A finite Z-combination of Verma characters `ch M_mu`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VermaSum<W: Ord> {
    terms: BTreeMap<W, i64>,
}

impl<W: Ord + Copy> Default for VermaSum<W> {
    fn default() -> Self {
        VermaSum { terms: BTreeMap::new() }
    }
}

impl<W: Ord + Copy> VermaSum<W> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(w: W) -> Self {
        let mut s = Self::new();
        s.add_term(w, 1);
        s
    }

    /// Every listed weight counted once, however often it is repeated.
    pub fn from_set<I: IntoIterator<Item = W>>(ws: I) -> Self {
        let set: BTreeSet<W> = ws.into_iter().collect();
        VermaSum { terms: set.into_iter().map(|w| (w, 1)).collect() }
    }

    pub fn add_term(&mut self, w: W, c: i64) {
        let e = self.terms.entry(w).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn coeff(&self, w: &W) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (W, i64)> + '_ {
        self.terms.iter().map(|(w, c)| (*w, *c))
    }

    pub fn support(&self) -> BTreeSet<W> {
        self.terms.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| *c > 0)
    }

    pub fn map_weights<V: Ord + Copy>(&self, f: impl Fn(&W) -> V) -> VermaSum<V> {
        let mut out = VermaSum::new();
        for (w, c) in self.iter() {
            out.add_term(f(&w), c);
        }
        out
    }

    pub fn filter(&self, keep: impl Fn(&W) -> bool) -> Self {
        VermaSum { terms: self.terms.iter().filter(|(w, _)| keep(w)).map(|(w, c)| (*w, *c)).collect() }
    }

    /// Whether `self <= other` coefficientwise.
    pub fn is_dominated_by(&self, other: &Self) -> bool {
        self.iter().all(|(w, c)| c <= other.coeff(&w))
    }
}

impl<W: Ord + Copy> FromIterator<(W, i64)> for VermaSum<W> {
    fn from_iter<I: IntoIterator<Item = (W, i64)>>(it: I) -> Self {
        let mut s = VermaSum::new();
        for (w, c) in it {
            s.add_term(w, c);
        }
        s
    }
}

impl<W: Ord + Copy> AddAssign<&VermaSum<W>> for VermaSum<W> {
    fn add_assign(&mut self, o: &VermaSum<W>) {
        for (w, c) in o.iter() {
            self.add_term(w, c);
        }
    }
}

impl<W: Ord + Copy> Add for &VermaSum<W> {
    type Output = VermaSum<W>;
    fn add(self, o: &VermaSum<W>) -> VermaSum<W> {
        let mut s = self.clone();
        s += o;
        s
    }
}

impl<W: Ord + Copy> Sub for &VermaSum<W> {
    type Output = VermaSum<W>;
    fn sub(self, o: &VermaSum<W>) -> VermaSum<W> {
        let mut s = self.clone();
        for (w, c) in o.iter() {
            s.add_term(w, -c);
        }
        s
    }
}

impl<W: Ord + Copy> Mul<i64> for &VermaSum<W> {
    type Output = VermaSum<W>;
    fn mul(self, k: i64) -> VermaSum<W> {
        self.iter().map(|(w, c)| (w, c * k)).collect()
    }
}

impl<W: Ord + Copy + fmt::Display> fmt::Display for VermaSum<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        // Highest terms first.
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *c != 1 {
                write!(f, "{c}·")?;
            }
            write!(f, "M{w}")?;
        }
        Ok(())
    }
}

impl<W: Ord + Copy + fmt::Display> fmt::Debug for VermaSum<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize)]
struct Term {
    weight: String,
    mult: i64,
}

impl<W: Ord + Copy + fmt::Display> Serialize for VermaSum<W> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.len()))?;
        for (w, c) in self.terms.iter().rev() {
            seq.serialize_element(&Term { weight: w.to_string(), mult: *c })?;
        }
        seq.end()
    }
}

/// A Verma sum together with its highest weight, the exported form of a
/// tilting character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tilting<W: Ord + Copy + fmt::Display> {
    pub highest_weight: W,
    pub character: VermaSum<W>,
}

impl<W: Ord + Copy + fmt::Display> Serialize for Tilting<W> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Tilting", 2)?;
        st.serialize_field("highest_weight", &self.highest_weight.to_string())?;
        st.serialize_field("terms", &self.character)?;
        st.end()
    }
}

/// Offsets below a reference weight in simple-root coordinates.
pub type Offset = Vec<i64>;

fn height(o: &Offset) -> i64 {
    o.iter().sum()
}

fn offset_of<S: RootSystem>(hi: &S::Weight, lo: &S::Weight) -> Result<Offset> {
    let c = S::simple_coordinates(&(*hi - *lo));
    if c.iter().all(|x| x.is_integer() && *x >= Rat::zero()) {
        Ok(c.iter().map(|x| x.to_integer()).collect())
    } else {
        Err(Error::OutOfRange(lo.to_string(), format!("not below {hi}")))
    }
}

/// A formal character truncated at a height: `coeffs[nu]` is the coefficient
/// of `e^{(reference - rho) - nu}` for offsets of height at most `depth`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedChar<W> {
    pub reference: W,
    pub depth: usize,
    pub coeffs: BTreeMap<Offset, i64>,
}

#[derive(Serialize)]
struct CoeffEntry<'a> {
    offset: &'a Offset,
    coeff: i64,
}

impl<W> Serialize for TruncatedChar<W> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for (o, c) in &self.coeffs {
            seq.serialize_element(&CoeffEntry { offset: o, coeff: *c })?;
        }
        seq.end()
    }
}

impl<W: Copy + PartialEq + fmt::Debug> TruncatedChar<W> {
    pub fn zero(reference: W, depth: usize) -> Self {
        TruncatedChar { reference, depth, coeffs: BTreeMap::new() }
    }

    pub fn coeff(&self, o: &[i64]) -> i64 {
        self.coeffs.get(o).copied().unwrap_or(0)
    }

    fn add_at(&mut self, o: Offset, c: i64) {
        if c == 0 || height(&o) > self.depth as i64 {
            return;
        }
        let e = self.coeffs.entry(o.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&o);
        }
    }

    /// Multiplication by `e^{-o}`.
    pub fn shifted(&self, o: &[i64]) -> Self {
        let mut out = Self::zero(self.reference, self.depth);
        for (k, c) in &self.coeffs {
            out.add_at(k.iter().zip(o).map(|(a, b)| a + b).collect(), *c);
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.reference, o.reference, "characters need a common reference");
        let mut out = self.clone();
        out.depth = self.depth.min(o.depth);
        for (k, c) in &o.coeffs {
            out.add_at(k.clone(), *c);
        }
        out.coeffs.retain(|k, _| height(k) <= out.depth as i64);
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scaled(-1))
    }

    pub fn scaled(&self, k: i64) -> Self {
        let mut out = Self::zero(self.reference, self.depth);
        for (o, c) in &self.coeffs {
            out.add_at(o.clone(), c * k);
        }
        out
    }

    /// Multiplication by `1 + e^{-g}`.
    pub fn times_one_plus(&self, g: &[i64]) -> Self {
        self.add(&self.shifted(g))
    }

    /// Multiplication by `1 / (1 + e^{-g}) = sum_k (-1)^k e^{-k g}`.
    pub fn over_one_plus(&self, g: &[i64]) -> Self {
        assert!(height(&g.to_vec()) > 0, "division needs a positive offset");
        let mut out = Self::zero(self.reference, self.depth);
        let mut term = self.clone();
        let mut sign = 1;
        while !term.coeffs.is_empty() {
            out = out.add(&term.scaled(sign));
            term = term.shifted(g);
            sign = -sign;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// The series `prod_odd (1 + e^{-b}) / prod_even (1 - e^{-a})`.
fn verma_series<S: RootSystem>(reference: S::Weight, depth: usize) -> TruncatedChar<S::Weight> {
    let n = S::simple_coordinates(&reference).len();
    let mut ch = TruncatedChar::zero(reference, depth);
    ch.add_at(vec![0; n], 1);
    for (r, odd) in S::positive_roots() {
        let o = offset_of::<S>(&r, &S::zero()).expect("positive roots lie above zero");
        if odd {
            ch = ch.times_one_plus(&o);
        } else {
            let mut acc = ch.clone();
            let mut term = ch.shifted(&o);
            while !term.is_zero() {
                acc = acc.add(&term);
                term = term.shifted(&o);
            }
            ch = acc;
        }
    }
    ch
}

/// `ch M_l` truncated at `depth`, referenced at `l`.
pub fn verma_truncated<S: RootSystem>(l: &S::Weight, depth: usize) -> TruncatedChar<S::Weight> {
    verma_series::<S>(*l, depth)
}

/// `ch M_mu` expressed relative to the reference `l`; requires `mu <= l`.
pub fn verma_below<S: RootSystem>(
    l: &S::Weight,
    mu: &S::Weight,
    depth: usize,
) -> Result<TruncatedChar<S::Weight>> {
    let o = offset_of::<S>(l, mu)?;
    Ok(verma_series::<S>(*l, depth).shifted(&o))
}

/// Truncation of a Verma sum whose weights all lie below `l`.
pub fn truncate_sum<S: RootSystem>(
    l: &S::Weight,
    sum: &VermaSum<S::Weight>,
    depth: usize,
) -> Result<TruncatedChar<S::Weight>> {
    let mut out = TruncatedChar::zero(*l, depth);
    for (mu, c) in sum.iter() {
        out = out.add(&verma_below::<S>(l, &mu, depth)?.scaled(c));
    }
    Ok(out)
}

/// Right side of the Jantzen sum formula for `M_l`, truncated.
pub fn jsf_rhs<S: RootSystem>(l: &S::Weight, depth: usize) -> TruncatedChar<S::Weight> {
    let mut out = TruncatedChar::zero(*l, depth);
    for a in S::even_roots() {
        if S::positive_integral(l, &a) {
            let m = S::reflect(l, &a.vector);
            out = out.add(&verma_below::<S>(l, &m, depth).expect("reflections lower"));
        }
    }
    for g in S::isotropic_roots() {
        if S::form(l, &g).is_zero() {
            let o = offset_of::<S>(&g, &S::zero()).expect("positive roots lie above zero");
            let m = verma_below::<S>(l, &(*l - g), depth).expect("positive root");
            out = out.add(&m.over_one_plus(&o));
        }
    }
    out
}

/// Closure of `seeds` under reflections with positive integral pairing,
/// following chains of at most `depth` steps.
fn reflection_closure<S: RootSystem>(
    seeds: BTreeSet<S::Weight>,
    depth: usize,
) -> BTreeSet<S::Weight> {
    let even = S::even_roots();
    let mut seen = seeds.clone();
    let mut frontier: Vec<S::Weight> = seeds.into_iter().collect();
    for _ in 0..depth {
        let mut next = Vec::new();
        for w in &frontier {
            for a in &even {
                if S::positive_integral(w, a) {
                    let m = S::reflect(w, &a.vector);
                    if seen.insert(m) {
                        next.push(m);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    seen
}

/// The weights `mu` with `(T_l : M_mu) > 0` certified by reflection chains,
/// isotropic drops and their combinations. Always contains `l`.
pub fn flags_certificates<S: RootSystem>(l: &S::Weight, search_depth: usize) -> VermaSum<S::Weight> {
    let iso = S::isotropic_roots();
    let geq = |a: &S::Weight, b: &S::Weight| S::leq(b, a);
    let mut seeds = BTreeSet::from([*l]);
    for b in &iso {
        if !S::form(l, b).is_zero() {
            continue;
        }
        let lb = *l - *b;
        seeds.insert(lb);
        for g in &iso {
            if S::form(&lb, g).is_zero() && !geq(b, g) {
                seeds.insert(lb - *g);
            }
        }
    }
    for a in S::even_roots() {
        if !S::positive_integral(l, &a) {
            continue;
        }
        let p = S::pairing(l, &a.vector);
        let sa = S::reflect(l, &a.vector);
        for g in &iso {
            if S::form(&sa, g).is_zero() && !geq(&(a.vector * p), g) {
                seeds.insert(sa - *g);
            }
        }
    }
    VermaSum::from_set(reflection_closure::<S>(seeds, search_depth))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use crate::rootdata::{simple_coordinates, PosRoot, Root};
    use crate::system::G3;
    use crate::weights::Weight;

    fn off(w: &Weight) -> Offset {
        simple_coordinates(w).iter().map(|c| c.to_integer()).collect()
    }

    /// Multisets of positive roots summing to `target`, odd roots at most once.
    fn brute_count(target: &[i64]) -> i64 {
        fn go(roots: &[(Offset, bool)], rest: Vec<i64>) -> i64 {
            if rest.iter().all(|c| *c == 0) {
                return 1;
            }
            let Some(((r, odd), tail)) = roots.split_first() else { return 0 };
            let mut total = 0;
            let mut cur = rest;
            loop {
                total += go(tail, cur.clone());
                cur = cur.iter().zip(r).map(|(a, b)| a - b).collect();
                if cur.iter().any(|c| *c < 0) {
                    break;
                }
                if *odd {
                    total += go(tail, cur);
                    break;
                }
            }
            total
        }
        let roots: Vec<_> = Root::positive().map(|r| (off(&r.vector()), !r.is_even())).collect();
        go(&roots, target.to_vec())
    }

    #[test]
    fn verma_examples() {
        let l = Weight::frac([1, 1, 3, -4], 5);
        let ch = verma_truncated::<G3>(&l, 8);
        assert_eq!(ch.coeff(&[0, 0, 0]), 1);
        let two_delta = off(&(Weight::delta() * 2));
        assert_eq!(ch.coeff(&two_delta), brute_count(&two_delta));
        assert!(ch.coeff(&two_delta) > 4, "partitions through G2 roots also count");
        assert_eq!(ch.coeff(&off(&Root::pos(PosRoot::DeltaPlusEps3).vector())), 1);
    }

    #[test]
    fn quotient_inverts_product() {
        let l = Weight::frac([1, 1, 3, -4], 5);
        let ch = verma_truncated::<G3>(&l, 6);
        for g in Root::isotropic_positive() {
            let o = off(&g.vector());
            assert_eq!(ch.over_one_plus(&o).times_one_plus(&o), ch);
        }
    }

    #[test]
    fn generic_jantzen_identity() {
        let l = Weight::frac([3, 3, 5, -8], 15);
        let a = Root::pos(PosRoot::DeltaPlusEps1);
        let o = off(&a.vector());
        let rhs = jsf_rhs::<G3>(&l, 6);
        let want = verma_below::<G3>(&l, &(l - a.vector()), 6).unwrap().over_one_plus(&o);
        assert_eq!(rhs, want);
        let total = rhs.add(&verma_truncated::<G3>(&l, 6).over_one_plus(&o));
        assert_eq!(total, verma_truncated::<G3>(&l, 6));
    }

    #[test]
    fn certificate_examples() {
        // <l, eps1^v> = 2
        let l = Weight::new(rat(1, 3), int(1), rat(1, 7));
        let c = flags_certificates::<G3>(&l, DEFAULT_SEARCH_DEPTH);
        let s = crate::weyl::reflect(&l, Root::pos(PosRoot::Eps1)).unwrap();
        assert_eq!(c.coeff(&s), 1);
        assert_eq!(c.coeff(&l), 1);
        // A strongly typical antidominant weight in a trivial block.
        let t = Weight::new(rat(-1, 3), rat(-1, 7), rat(-1, 5));
        assert_eq!(flags_certificates::<G3>(&t, DEFAULT_SEARCH_DEPTH), VermaSum::single(t));
        let e = Weight::new(rat(1, 3), rat(1, 3), rat(1, 5));
        let c = flags_certificates::<G3>(&e, DEFAULT_SEARCH_DEPTH);
        let a = Root::pos(PosRoot::DeltaPlusEps1).vector();
        assert_eq!(c.coeff(&(e - a)), 1);
    }

    #[test]
    fn verma_sum_arithmetic() {
        let a = Weight::delta();
        let b = Weight::zero();
        let s = VermaSum::from_set([a, b, a]);
        assert_eq!(s.total(), 2);
        let d = &(&s + &s) - &VermaSum::single(a);
        assert_eq!(d.coeff(&a), 1);
        assert_eq!(d.coeff(&b), 2);
        assert_eq!((&d - &d).len(), 0);
    }
}

//! Translation functors on Verma-flag characters, and the derivation of
//! tilting characters by translating a known tilting module and splitting off
//! the summands certified to belong to other tilting modules.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::characters::{flags_certificates, VermaSum, DEFAULT_SEARCH_DEPTH};
use crate::error::{Error, Result};
use crate::rootdata::FinDimWeights;
use crate::system::RootSystem;

/// `start (x) F` projected onto the block of `target`.
pub fn translate_flag<S: RootSystem>(
    start: &VermaSum<S::Weight>,
    f: &FinDimWeights<S::Weight>,
    target: &S::Weight,
) -> VermaSum<S::Weight> {
    let mut out = VermaSum::new();
    let linked = S::linkage(target);
    let mut seen: HashMap<S::Weight, bool> = HashMap::new();
    for (mu, c) in start.iter() {
        for (nu, m) in &f.entries {
            let w = mu + *nu;
            let keep = *seen.entry(w).or_insert_with(|| linked(&w));
            if keep {
                out.add_term(w, c * i64::from(*m));
            }
        }
    }
    out
}

/// Restriction of a Verma sum to the block of `target`.
pub fn project<S: RootSystem>(sum: &VermaSum<S::Weight>, target: &S::Weight) -> VermaSum<S::Weight> {
    let linked = S::linkage(target);
    sum.filter(|w| linked(w))
}

/// How a derived character was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Path {
    /// No certificate below the weight: the Verma module is tilting.
    Seed,
    /// The translated module has exactly the certified support.
    Tight,
    /// One decomposition of the translated module is consistent.
    Decomposed,
    /// Several decompositions remain; the one subtracting the most known
    /// tilting modules from the top was chosen.
    Greedy { alternatives: usize },
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Path::Seed => write!(f, "seed"),
            Path::Tight => write!(f, "tight"),
            Path::Decomposed => write!(f, "decomposed"),
            Path::Greedy { alternatives } => write!(f, "greedy ({alternatives} alternatives)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation<W: Ord + Copy + fmt::Display> {
    pub character: VermaSum<W>,
    pub path: Path,
    /// The weight whose tilting module was translated.
    pub start: Option<W>,
}

/// Memoising derivation engine.
pub struct Deriver<S: RootSystem> {
    memo: HashMap<S::Weight, Derivation<S::Weight>>,
    failed: HashMap<S::Weight, usize>,
    in_progress: HashSet<S::Weight>,
    known: HashMap<S::Weight, VermaSum<S::Weight>>,
    module: FinDimWeights<S::Weight>,
    pub max_depth: usize,
    pub search_depth: usize,
}

/// A start and the decompositions it admits.
type Candidates<W> = (W, Vec<VermaSum<W>>);

/// Upper bound on decompositions tracked per start.
const MAX_CANDIDATES: usize = 64;

struct Search<'a, W: Ord + Copy + fmt::Display> {
    order: Vec<W>,
    mult: i64,
    certs: &'a VermaSum<W>,
    budget: usize,
    out: Vec<VermaSum<W>>,
    /// A branch needed a tilting character that could not be derived.
    incomplete: bool,
}

impl<S: RootSystem> Default for Deriver<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: RootSystem> Deriver<S> {
    pub fn new() -> Self {
        Deriver {
            memo: HashMap::new(),
            failed: HashMap::new(),
            in_progress: HashSet::new(),
            known: HashMap::new(),
            module: S::translation_module(),
            max_depth: 32,
            search_depth: DEFAULT_SEARCH_DEPTH,
        }
    }

    /// Supplies a tilting character the engine may use as a start or for
    /// subtraction without deriving it.
    pub fn with_known(mut self, known: HashMap<S::Weight, VermaSum<S::Weight>>) -> Self {
        self.known = known;
        self
    }

    pub fn derive(&mut self, l: &S::Weight) -> Result<Derivation<S::Weight>> {
        self.derive_at(l, self.max_depth)
    }

    fn derive_at(&mut self, l: &S::Weight, budget: usize) -> Result<Derivation<S::Weight>> {
        if let Some(ch) = self.known.get(l) {
            return Ok(Derivation { character: ch.clone(), path: Path::Decomposed, start: None });
        }
        if let Some(d) = self.memo.get(l) {
            return Ok(d.clone());
        }
        if self.failed.get(l).is_some_and(|b| *b >= budget) || self.in_progress.contains(l) {
            return Err(Error::Underdetermined(l.to_string()));
        }
        let certs = flags_certificates::<S>(l, self.search_depth);
        if certs.len() == 1 {
            let d = Derivation { character: certs, path: Path::Seed, start: None };
            self.memo.insert(*l, d.clone());
            return Ok(d);
        }
        if budget == 0 {
            self.failed.insert(*l, budget);
            return Err(Error::Underdetermined(l.to_string()));
        }
        self.in_progress.insert(*l);
        let res = self.via_starts(l, &certs, budget);
        self.in_progress.remove(l);
        match &res {
            Ok(d) => {
                self.memo.insert(*l, d.clone());
            }
            Err(_) => {
                self.failed.insert(*l, budget);
            }
        }
        res
    }

    fn via_starts(
        &mut self,
        l: &S::Weight,
        certs: &VermaSum<S::Weight>,
        budget: usize,
    ) -> Result<Derivation<S::Weight>> {
        let mut sets: Vec<Candidates<S::Weight>> = Vec::new();
        for mu0 in S::translation_starts() {
            let s = *l - mu0;
            let Ok(ts) = self.derive_at(&s, budget - 1) else { continue };
            let ft = translate_flag::<S>(&ts.character, &self.module, l);
            let m = ft.coeff(l);
            if m <= 0 || ft.iter().any(|(w, _)| !S::leq(&w, l)) {
                continue;
            }
            let mut order: Vec<S::Weight> = ft.support().into_iter().filter(|w| w != l).collect();
            order.sort_by_key(|w| (S::depth_below(w, l), *w));
            let mut search = Search {
                order,
                mult: m,
                certs,
                budget,
                out: Vec::new(),
                incomplete: false,
            };
            let rest = &ft - &(&VermaSum::single(*l) * m);
            self.dfs(&mut search, 0, rest, VermaSum::single(*l));
            if search.incomplete || search.out.is_empty() {
                continue;
            }
            if search.out.len() == 1 {
                let ch = search.out.pop().unwrap();
                let path = if ch.support() == certs.support() { Path::Tight } else { Path::Decomposed };
                return Ok(Derivation { character: ch, path, start: Some(s) });
            }
            sets.push((s, search.out));
        }
        let Some((s, first)) = sets.first() else {
            return Err(Error::Underdetermined(l.to_string()));
        };
        let common: Vec<_> = first
            .iter()
            .filter(|c| sets[1..].iter().all(|(_, o)| o.contains(c)))
            .cloned()
            .collect();
        match common.len() {
            0 => Err(Error::Inconsistent(l.to_string(), "starts disagree".into())),
            1 => Ok(Derivation { character: common[0].clone(), path: Path::Decomposed, start: Some(*s) }),
            n => Ok(Derivation {
                character: common[0].clone(),
                path: Path::Greedy { alternatives: n },
                start: Some(*s),
            }),
        }
    }

    /// Walks the translated character from the top, choosing at each weight
    /// the multiplicity inside `T_l` and covering the rest by the tilting
    /// module of that weight. Smaller multiplicities are tried first.
    fn dfs(
        &mut self,
        st: &mut Search<'_, S::Weight>,
        i: usize,
        rest: VermaSum<S::Weight>,
        t: VermaSum<S::Weight>,
    ) {
        if st.out.len() >= MAX_CANDIDATES {
            return;
        }
        if i == st.order.len() {
            if rest.is_empty() {
                st.out.push(t);
            }
            return;
        }
        let nu = st.order[i];
        let r = rest.coeff(&nu);
        if r < 0 {
            return;
        }
        let lo = st.certs.coeff(&nu).min(1);
        for tv in lo..=r / st.mult {
            let c = r - st.mult * tv;
            let mut next = rest.clone();
            next.add_term(nu, -st.mult * tv);
            if c > 0 {
                match self.derive_at(&nu, st.budget - 1) {
                    Ok(d) => next = &next - &(&d.character * c),
                    Err(_) => {
                        st.incomplete = true;
                        continue;
                    }
                }
                if next.iter().any(|(_, k)| k < 0) {
                    continue;
                }
            }
            if next.coeff(&nu) != 0 {
                continue;
            }
            let mut t2 = t.clone();
            if tv > 0 {
                t2.add_term(nu, tv);
            }
            self.dfs(st, i + 1, next, t2);
        }
    }
}

/// One-shot derivation with a fresh engine.
pub fn derive_tilting<S: RootSystem>(l: &S::Weight) -> Result<Derivation<S::Weight>> {
    Deriver::<S>::new().derive(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::osp::{Osp32, OspWeight};
    use crate::rational::rat;
    use crate::rootdata::{adjoint_weights, PosRoot, Root};
    use crate::system::G3;
    use crate::weights::Weight;

    #[test]
    fn generic_translation() {
        let l = Weight::new(rat(1, 5), rat(1, 5), rat(1, 3));
        let a = Root::pos(PosRoot::DeltaPlusEps1).vector();
        let start = VermaSum::single(l - Weight::delta() * 2);
        let ft = translate_flag::<G3>(&start, &adjoint_weights(), &l);
        assert_eq!(ft, VermaSum::from_set([l, l - a]));
        assert!(translate_flag::<G3>(&VermaSum::new(), &adjoint_weights(), &l).is_empty());
        let d = derive_tilting::<G3>(&l).unwrap();
        assert_eq!(d.character, ft);
    }

    #[test]
    fn osp_translation() {
        let w = |s: &str| s.parse::<OspWeight>().unwrap();
        let start = VermaSum::single(w("-3|-3"));
        let ft = translate_flag::<Osp32>(&start, &Osp32::translation_module(), &w("-2|-2"));
        assert_eq!(ft.coeff(&w("-2|-3")), 0);
        let d = derive_tilting::<Osp32>(&w("-2|-2")).unwrap();
        assert_eq!(d.character, VermaSum::from_set([w("-2|-2"), w("-3|-3")]));
    }
}

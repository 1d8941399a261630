//! Sampling helpers shared by the integration tests.
#![allow(dead_code)]

use g3tilt::blocks::{classify, Family};
use g3tilt::rational::{int, rat};
use g3tilt::rootdata::Root;
use g3tilt::weights::bilinear_form;
use g3tilt::{Rat, Weight};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn rational(r: &mut StdRng) -> Rat {
    let den = [1, 2, 3, 4, 5, 6, 8, 12][r.gen_range(0..8)];
    rat(r.gen_range(-15..=15), den)
}

pub fn weight(r: &mut StdRng) -> Weight {
    Weight::new(rational(r), rational(r), rational(r))
}

/// A weight orthogonal to a random positive isotropic root.
pub fn atypical(r: &mut StdRng) -> Weight {
    let roots: Vec<Root> = Root::isotropic_positive().collect();
    let a = roots[r.gen_range(0..roots.len())].vector();
    let (x, y) = (rational(r), rational(r));
    // The form is affine in d; solve (l, a) = 0.
    let f0 = bilinear_form(&Weight::new(int(0), x, y), &a);
    let f1 = bilinear_form(&Weight::new(int(1), x, y), &a);
    Weight::new(-f0 / (f1 - f0), x, y)
}

pub fn atypical_nonintegral(r: &mut StdRng) -> Weight {
    loop {
        let l = atypical(r);
        if classify(&l).family != Family::Integral {
            return l;
        }
    }
}

/// Multisets of positive roots summing to `target` in simple-root
/// coordinates; odd roots occur at most once.
pub fn brute_partition_count(target: &[i64]) -> i64 {
    fn go(roots: &[(Vec<i64>, bool)], rest: Vec<i64>) -> i64 {
        if rest.iter().all(|c| *c == 0) {
            return 1;
        }
        let Some(((root, odd), tail)) = roots.split_first() else { return 0 };
        let mut total = 0;
        let mut cur = rest;
        loop {
            total += go(tail, cur.clone());
            cur = cur.iter().zip(root).map(|(a, b)| a - b).collect();
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
    let roots: Vec<_> = Root::positive()
        .map(|g| {
            let c = g3tilt::rootdata::simple_coordinates(&g.vector());
            (c.iter().map(|x| x.to_integer()).collect(), !g.is_even())
        })
        .collect();
    go(&roots, target.to_vec())
}

/// All offsets with non-negative coordinates and height at most `h`.
pub fn offsets(h: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for a in 0..=h {
        for b in 0..=h - a {
            for c in 0..=h - a - b {
                out.push(vec![a, b, c]);
            }
        }
    }
    out
}

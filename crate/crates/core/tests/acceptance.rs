//! Acceptance criteria 1 to 10, one PASS/FAIL line each.
//!
//! Failures are reported, never hidden. The process exits non-zero on a
//! failure only when `G3TILT_STRICT=1`, so that the documented disagreements
//! with printed tables do not mask regressions in the other test targets.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use g3tilt::blocks::{
    block_members, classify, equivalent_weights, integral_weyl_group, is_atypical, linked, Family,
};
use g3tilt::characters::{verma_below, verma_truncated};
use g3tilt::rational::int;
use g3tilt::rootdata::Root;
use g3tilt::system::G3;
use g3tilt::tables::typical_table;
use g3tilt::translation::Deriver;
use g3tilt::verify::{acceptance_frames, sweep_g3, sweep_osp, v_symmetry_failures, Check};
use g3tilt::weights::{bilinear_form, casimir_scalar, coroot_pairing};
use g3tilt::weyl::{named_set, G2Part, NamedGroup, NamedSet, WeylElt};
use g3tilt::Weight;
use num_traits::Zero;
use rand::Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: &[String], checked: usize) -> Outcome {
    let mut detail = format!("{checked} checked, {} failed", failures.len());
    for f in failures.iter().take(5) {
        detail.push_str(&format!("; {f}"));
    }
    if failures.len() > 5 {
        detail.push_str("; ...");
    }
    Outcome { pass: failures.is_empty(), detail }
}

fn names<W: Ord + Copy + std::fmt::Display>(cs: &[Check<W>], bad: impl Fn(&Check<W>) -> bool) -> Vec<String> {
    cs.iter().filter(|c| bad(c)).map(|c| format!("{} {}", c.name, c.weight)).collect()
}

fn criterion_4() -> Outcome {
    let mut r = common::rng(4);
    let mut bad = Vec::new();
    let mut checked = 0;
    for _ in 0..1000 {
        let l = common::weight(&mut r);
        let c = casimir_scalar(&l);
        let members = if is_atypical(&l) {
            block_members(&l, -2..=2).expect("atypical weights have a block")
        } else {
            g3tilt::blocks::orbit_members(&l)
        };
        for m in members {
            checked += 1;
            if !linked(&l, &m) || casimir_scalar(&m) != c {
                bad.push(format!("{l} ~ {m}"));
            }
        }
    }
    let mut pairs = 0;
    while pairs < 1000 {
        let (a, b) = (common::weight(&mut r), common::weight(&mut r));
        if casimir_scalar(&a) == casimir_scalar(&b) {
            continue;
        }
        pairs += 1;
        if linked(&a, &b) {
            bad.push(format!("{a} linked to {b}"));
        }
    }
    outcome(&bad, checked + pairs)
}

fn g2_tag(f: &Family) -> Option<G2Part> {
    match f {
        Family::Generic => Some(G2Part::Trivial),
        Family::Z2(_) => Some(G2Part::Z2),
        Family::V { .. } => Some(G2Part::Z2xZ2),
        Family::S3 { .. } => Some(G2Part::S3),
        Family::WG2 { .. } => Some(G2Part::WG2),
        Family::Typical | Family::Integral => None,
    }
}

fn criterion_5() -> Outcome {
    let mut r = common::rng(5);
    let mut bad = Vec::new();
    let mut checked = 0;
    for _ in 0..1000 {
        let l = common::atypical_nonintegral(&mut r);
        let wl = integral_weyl_group(&l);
        let id = classify(&l);
        for w in wl.elements() {
            let m = w.act(&l);
            let idm = classify(&m);
            checked += 1;
            if g2_tag(&idm.family) != Some(wl.g2_part()) {
                bad.push(format!("{m}: {} vs {:?}", idm.family.tag(), wl.g2_part()));
            } else if !linked(&idm.canonical_rep, &l) {
                bad.push(format!("{m}: representative {} not linked", idm.canonical_rep));
            } else if idm.family.tag() != id.family.tag() {
                bad.push(format!("{m}: {} vs {}", idm.family.tag(), id.family.tag()));
            }
        }
    }
    outcome(&bad, checked)
}

fn criterion_6() -> Outcome {
    let mut r = common::rng(6);
    let mut bad = Vec::new();
    let mut related = 0;
    // Half of the partners are moved inside a block so that the relation
    // holds often enough for transitivity to be exercised.
    let partner = |r: &mut rand::rngs::StdRng, l: &Weight| {
        if r.gen_bool(0.5) {
            let ms = block_members(l, -2..=2).unwrap();
            ms[r.gen_range(0..ms.len())]
        } else {
            let w: Vec<WeylElt> = WeylElt::all().collect();
            w[r.gen_range(0..w.len())].act(&common::atypical(r))
        }
    };
    for _ in 0..200 {
        let a = common::atypical(&mut r);
        let b = partner(&mut r, &a);
        let c = partner(&mut r, &b);
        let eq = |x: &Weight, y: &Weight| equivalent_weights(x, y).unwrap();
        if eq(&a, &b) != eq(&b, &a) || eq(&b, &c) != eq(&c, &b) {
            bad.push(format!("symmetry on {a}, {b}, {c}"));
        }
        if eq(&a, &b) && eq(&b, &c) {
            related += 1;
            if !eq(&a, &c) {
                bad.push(format!("transitivity on {a}, {b}, {c}"));
            }
        }
        if !eq(&a, &a) {
            bad.push(format!("reflexivity on {a}"));
        }
    }
    let mut o = outcome(&bad, 200);
    o.detail.push_str(&format!(", {related} related chains"));
    o
}

fn criterion_7() -> Outcome {
    let mut r = common::rng(7);
    let mut bad = Vec::new();
    let mut checked = 0;
    for _ in 0..4 {
        let l = common::weight(&mut r);
        let ch = verma_truncated::<G3>(&l, 6);
        for o in common::offsets(6) {
            checked += 1;
            let want = common::brute_partition_count(&o);
            if ch.coeff(&o) != want {
                bad.push(format!("{l} offset {o:?}: {} vs {want}", ch.coeff(&o)));
            }
        }
    }
    let mut generic = 0;
    while generic < 50 {
        let l = common::atypical_nonintegral(&mut r);
        if classify(&l).family != Family::Generic {
            continue;
        }
        generic += 1;
        let a = g3tilt::blocks::atypicality(&l).a[0].vector();
        let o: Vec<i64> = g3tilt::rootdata::simple_coordinates(&a).iter().map(|c| c.to_integer()).collect();
        let m = verma_truncated::<G3>(&l, 6);
        let below = verma_below::<G3>(&l, &(l - a), 6).unwrap();
        if m.add(&below).over_one_plus(&o) != m {
            bad.push(format!("generic identity at {l}"));
        }
    }
    outcome(&bad, checked + generic)
}

fn criterion_8() -> Outcome {
    let mut r = common::rng(8);
    let mut deriver = Deriver::<G3>::new();
    let mut bad = Vec::new();
    let mut n = 0;
    while n < 50 {
        let l = Weight::new(int(r.gen_range(-4..=4)), common::rational(&mut r), common::rational(&mut r));
        let two_delta = coroot_pairing(&l, Root::two_delta()).unwrap();
        let iso_free = Root::isotropic_positive().all(|g| !bilinear_form(&l, &g.vector()).is_zero());
        if !iso_free || two_delta.is_zero() || !two_delta.is_integer() {
            continue;
        }
        n += 1;
        match deriver.derive(&l) {
            Ok(d) if d.character == typical_table(&l) => {}
            Ok(d) => bad.push(format!("{l}: {} vs {}", typical_table(&l), d.character)),
            Err(e) => bad.push(format!("{l}: {e}")),
        }
    }
    outcome(&bad, n)
}

fn criterion_10() -> Outcome {
    let mut bad = Vec::new();
    let l = Weight::frac([3, 5, 7, -12], 11);
    let all: Vec<WeylElt> = WeylElt::all().collect();
    let mut pairs = 0;
    for u in &all {
        if !WeylElt::identity().compose(u).eq(u) || u.compose(&u.inverse()) != WeylElt::identity() {
            bad.push(format!("unit or inverse at {}", u.word()));
        }
        for w in &all {
            pairs += 1;
            if u.compose(w).act(&l) != u.act(&w.act(&l)) {
                bad.push(format!("action at {} {}", u.word(), w.word()));
            }
            if bilinear_form(&u.act(&l), &u.act(&w.act(&l))) != bilinear_form(&l, &w.act(&l)) {
                bad.push(format!("form not invariant at {} {}", u.word(), w.word()));
            }
        }
    }
    for g in NamedGroup::ALL {
        let grp = g.group();
        let el: Vec<WeylElt> = grp.elements().collect();
        let leq = |a: &WeylElt, b: &WeylElt| grp.bruhat_leq(a, b).unwrap();
        for a in &el {
            if !leq(a, a) || !leq(&WeylElt::identity(), a) {
                bad.push(format!("{}: reflexivity or bottom at {}", g.label(), a.word()));
            }
            for b in &el {
                if a != b && leq(a, b) && leq(b, a) {
                    bad.push(format!("{}: antisymmetry at {} {}", g.label(), a.word(), b.word()));
                }
                if leq(a, b) && grp.length(a).unwrap() > grp.length(b).unwrap() {
                    bad.push(format!("{}: length at {} {}", g.label(), a.word(), b.word()));
                }
                for c in &el {
                    if leq(a, b) && leq(b, c) && !leq(a, c) {
                        bad.push(format!("{}: transitivity", g.label()));
                    }
                }
            }
        }
    }
    let sizes = [(NamedSet::K1, 6), (NamedSet::K2, 6), (NamedSet::H1, 3), (NamedSet::H2, 3)];
    for (s, n) in sizes {
        let set: BTreeSet<_> = named_set(s).into_iter().collect();
        if set.len() != n {
            bad.push(format!("|{s:?}| = {}", set.len()));
        }
    }
    if all.len() != 24 {
        bad.push(format!("|W| = {}", all.len()));
    }
    outcome(&bad, pairs)
}

fn main() {
    let start = Instant::now();
    let frames = acceptance_frames();
    let g3 = sweep_g3(&frames);
    let osp = sweep_osp(10);
    let sweep_time = start.elapsed();

    let mut results: Vec<(u32, &str, Outcome)> = Vec::new();
    let mut o1 = outcome(&names(&g3, |c| !c.agrees()), g3.len());
    o1.detail.push_str(&format!(", sweep {:.1}s", sweep_time.as_secs_f64()));
    results.push((1, "table equals derivation", o1));
    results.push((2, "osp(3|2) lines equal derivation", outcome(&names(&osp, |c| !c.agrees()), osp.len())));
    let mut c3 = names(&g3, |c| !c.certified);
    c3.extend(names(&osp, |c| !c.certified));
    results.push((3, "certificates inside tables", outcome(&c3, g3.len() + osp.len())));
    results.push((4, "linkage and Casimir", criterion_4()));
    results.push((5, "classification soundness", criterion_5()));
    results.push((6, "equivalence relation axioms", criterion_6()));
    results.push((7, "Verma characters", criterion_7()));
    results.push((8, "strongly typical orbit sums", criterion_8()));
    let sym = v_symmetry_failures(&frames);
    let pts: usize = frames.iter().filter(|f| matches!(f.frame, g3tilt::tables::Frame::VLambda(_))).map(|f| f.ks.clone().count()).sum();
    results.push((9, "lambda-family symmetry", outcome(&sym, pts)));
    results.push((10, "Weyl group substrate", criterion_10()));

    let mut failed = 0;
    for (n, name, o) in &results {
        if !o.pass {
            failed += 1;
        }
        println!("{} criterion {n:>2} ({name}): {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("{} of {} criteria pass ({:.1}s)", results.len() - failed, results.len(), start.elapsed().as_secs_f64());
    if failed > 0 && std::env::var("G3TILT_STRICT").is_ok_and(|v| v == "1") {
        std::process::exit(1);
    }
}

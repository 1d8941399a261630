//! Invariants of the weight, group and block layers as property tests.

use g3tilt::blocks::{block_members, classify, integral_weyl_group, is_atypical, linked};
use g3tilt::osp::{table_osp32, OspWeight};
use g3tilt::rational::rat;
use g3tilt::rootdata::Root;
use g3tilt::tables::{tilting_character, TableValue};
use g3tilt::weights::{bilinear_form, casimir_scalar};
use g3tilt::{Rat, Weight, WeylElt};
use num_traits::Zero;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rat> {
    (-24i64..=24, prop::sample::select(vec![1i64, 2, 3, 4, 6, 12])).prop_map(|(n, d)| rat(n, d))
}

fn weight() -> impl Strategy<Value = Weight> {
    (rational(), rational(), rational()).prop_map(|(d, x, y)| Weight::new(d, x, y))
}

/// Weights orthogonal to a chosen positive isotropic root.
fn atypical() -> impl Strategy<Value = Weight> {
    (0usize..6, rational(), rational()).prop_map(|(i, x, y)| {
        let a = Root::isotropic_positive().nth(i).unwrap().vector();
        let f0 = bilinear_form(&Weight::new(Rat::zero(), x, y), &a);
        let f1 = bilinear_form(&Weight::new(Rat::from_integer(1), x, y), &a);
        Weight::new(-f0 / (f1 - f0), x, y)
    })
}

fn weyl() -> impl Strategy<Value = WeylElt> {
    prop::sample::select(WeylElt::all().collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn symbol_round_trips(l in weight()) {
        prop_assert_eq!(l.to_string().parse::<Weight>().unwrap(), l);
        let json = serde_json::to_string(&l).unwrap();
        prop_assert_eq!(serde_json::from_str::<Weight>(&json).unwrap(), l);
    }

    #[test]
    fn fundamental_coordinates_round_trip(l in weight()) {
        let (d, a, b) = l.to_fundamental();
        prop_assert_eq!(Weight::from_fundamental(d, a, b), l);
        let s = format!("F:{d};{a};{b}");
        prop_assert_eq!(s.parse::<Weight>().unwrap(), l);
    }

    #[test]
    fn weyl_group_preserves_form_and_casimir(l in weight(), m in weight(), w in weyl()) {
        prop_assert_eq!(bilinear_form(&w.act(&l), &w.act(&m)), bilinear_form(&l, &m));
        prop_assert_eq!(casimir_scalar(&w.act(&l)), casimir_scalar(&l));
        prop_assert_eq!(w.inverse().act(&w.act(&l)), l);
    }

    #[test]
    fn linkage_is_symmetric_and_reflexive(l in weight(), w in weyl()) {
        prop_assert!(linked(&l, &l));
        let m = w.act(&l);
        prop_assert_eq!(linked(&l, &m), linked(&m, &l));
    }

    #[test]
    fn block_members_are_linked(l in atypical()) {
        prop_assert!(is_atypical(&l));
        for m in block_members(&l, -2..=2).unwrap() {
            prop_assert!(linked(&l, &m), "{} not linked to {}", m, l);
            prop_assert_eq!(casimir_scalar(&m), casimir_scalar(&l));
        }
    }

    #[test]
    fn classification_is_constant_on_integral_orbits(l in atypical()) {
        let id = classify(&l);
        for w in integral_weyl_group(&l).elements() {
            let other = classify(&w.act(&l));
            prop_assert_eq!(other.family.tag(), id.family.tag());
            prop_assert!(linked(&other.canonical_rep, &l));
        }
    }

    #[test]
    fn tables_have_unit_top_and_stay_in_block(l in atypical()) {
        if let TableValue::Character { terms, .. } = tilting_character(&l) {
            prop_assert_eq!(terms.coeff(&l), 1);
            for (m, c) in terms.iter() {
                prop_assert!(c > 0);
                prop_assert!(linked(&l, &m), "{} outside the block of {}", m, l);
            }
        }
    }

    #[test]
    fn osp_table_has_unit_top(a in rational(), sign in prop::bool::ANY) {
        let l = OspWeight::new(a, if sign { a } else { -a });
        let t = table_osp32(&l);
        prop_assert_eq!(t.coeff(&l), 1);
        prop_assert!(t.iter().all(|(_, c)| c == 1));
    }
}

use proptest::prelude::*;

use sspec_core::ideal::{
    all_ideals, colon, ideal_intersect, ideal_product, ideal_sum, mult_closure, s_radical,
};
use sspec_core::spectrum::{spec_s, SpectrumDoc};
use sspec_core::verifier::{verify_all, verify_morphisms, Status};
use sspec_core::{enumerate_morphisms, Caps, Elem, RingDesc};

fn small_zn() -> impl Strategy<Value = RingDesc> {
    (2usize..=12).prop_map(RingDesc::zn)
}

fn ring_desc() -> impl Strategy<Value = RingDesc> {
    prop_oneof![
        (2usize..=40).prop_map(RingDesc::zn),
        (small_zn(), small_zn())
            .prop_filter("fits the cap", |(a, b)| size_of(a) * size_of(b) <= 64)
            .prop_map(|(a, b)| RingDesc::product(vec![a, b])),
        (
            prop::sample::select(vec![2usize, 3]),
            prop::collection::vec(-3i64..3, 1..=3)
        )
            .prop_map(|(m, mut lower)| {
                if m == 3 {
                    lower.truncate(2);
                }
                lower.push(1);
                RingDesc::poly_quotient(m, lower)
            }),
    ]
}

fn size_of(d: &RingDesc) -> usize {
    d.build().unwrap().size()
}

fn ring_and_gens() -> impl Strategy<Value = (RingDesc, Vec<Elem>)> {
    ring_desc().prop_flat_map(|d| {
        let n = size_of(&d);
        (Just(d), prop::collection::vec(0..n, 0..3))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn constructed_rings_validate(d in ring_desc()) {
        let ring = d.build().unwrap();
        prop_assert!(ring.validate().is_ok());
        let back = RingDesc::from_json(&d.to_json()).unwrap();
        prop_assert_eq!(back, d);
    }

    #[test]
    fn lattice_closed_under_operations(d in ring_desc()) {
        let ring = d.build().unwrap();
        let ideals = all_ideals(&ring);
        for i in &ideals {
            for j in &ideals {
                prop_assert!(ideals.contains(&ideal_sum(&ring, i, j).unwrap()));
                prop_assert!(ideals.contains(&ideal_product(&ring, i, j).unwrap()));
                prop_assert!(ideals.contains(&ideal_intersect(&ring, i, j).unwrap()));
            }
            for s in ring.elements() {
                prop_assert!(ideals.contains(&colon(&ring, i, s)));
            }
        }
    }

    #[test]
    fn s_radical_is_a_closure((d, gens) in ring_and_gens()) {
        let ring = d.build().unwrap();
        let Ok(s) = mult_closure(&ring, &gens) else { return Ok(()) };
        let ideals = all_ideals(&ring);
        for i in &ideals {
            let r = s_radical(&ring, &s, i);
            prop_assert!(i.is_subset(&r));
            prop_assert_eq!(&s_radical(&ring, &s, &r), &r);
            for j in ideals.iter().filter(|j| i.is_subset(j)) {
                prop_assert!(r.is_subset(&s_radical(&ring, &s, j)));
            }
        }
    }

    #[test]
    fn every_theorem_check_passes((d, gens) in ring_and_gens()) {
        let ring = d.build().unwrap();
        let Ok(s) = mult_closure(&ring, &gens) else { return Ok(()) };
        let space = spec_s(&ring, &s).unwrap();
        prop_assert!(!space.is_empty());
        for c in verify_all(&ring, &s) {
            prop_assert_ne!(c.status, Status::Fail, "{} {:?}", c.id, c.witness);
        }
        if ring.size() <= 16 {
            let c = &verify_morphisms(&ring, &ring, &s, &Caps::default())[0];
            prop_assert_eq!(c.status, Status::Pass, "{:?}", c.witness);
        }
    }

    #[test]
    fn spectrum_document_round_trips((d, gens) in ring_and_gens()) {
        let ring = d.build().unwrap();
        let Ok(s) = mult_closure(&ring, &gens) else { return Ok(()) };
        let space = spec_s(&ring, &s).unwrap();
        let text = serde_json::to_string(&SpectrumDoc::new(&d, &space)).unwrap();
        let doc: SpectrumDoc = serde_json::from_str(&text).unwrap();
        let rebuilt = doc.rebuild(&ring).unwrap();
        prop_assert_eq!(rebuilt.points(), space.points());
    }

    #[test]
    fn endomorphisms_compose_within_the_list(d in ring_desc()) {
        let ring = d.build().unwrap();
        prop_assume!(ring.size() <= 16);
        let ends = enumerate_morphisms(&ring, &ring).unwrap();
        for f in &ends {
            let ff = f.compose(f).unwrap();
            prop_assert!(ends.iter().any(|g| g.map() == ff.map()));
        }
    }
}

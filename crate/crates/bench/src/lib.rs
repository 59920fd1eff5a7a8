//! Fixtures shared by the criterion benches.

use sspec_core::ideal::mult_closure;
use sspec_core::{FiniteRing, MultSet, RingDesc};

/// `(label, ring, S)` triples of increasing size.
pub fn fixtures() -> Vec<(String, FiniteRing, MultSet)> {
    let cases = [
        (RingDesc::zn(12), vec![3]),
        (
            RingDesc::product(vec![RingDesc::zn(2), RingDesc::zn(2), RingDesc::zn(2)]),
            vec![6],
        ),
        (RingDesc::zn(36), vec![4]),
        (
            RingDesc::product(vec![RingDesc::zn(4), RingDesc::zn(12)]),
            vec![],
        ),
    ];
    cases
        .into_iter()
        .map(|(d, gens)| {
            let ring = d.build().expect("fixture ring");
            let s = mult_closure(&ring, &gens).expect("fixture S");
            (format!("{d} S=<{gens:?}>"), ring, s)
        })
        .collect()
}

//! Going-down for S-prime ideals along ring morphisms, as an experiment.
//!
//! Given `φ : R → R'`, `p_low ≤ p_high` in `Spec_S R` and `q_high` over
//! `p_high` in `Spec_{φ(S)} R'`, going-down asks for `q_low ≤ q_high` over
//! `p_low`. The order on points is a parameter: plain containment, or
//! S-specialization (`s·p_low ⊆ p_high` for some `s`).

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::desc::RingDesc;
use crate::error::{Error, Result};
use crate::ideal::{mult_closure, Ideal};
use crate::ring::{enumerate_morphisms_with_caps, Caps, Elem, RingMorphism};
use crate::spectrum::{induced_map, scaled_subset, InducedMap, SpectrumSpace};
use crate::verifier::CorpusSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderMode {
    Containment,
    SSpecialization,
}

impl std::str::FromStr for OrderMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "containment" => Ok(OrderMode::Containment),
            "s-specialization" => Ok(OrderMode::SSpecialization),
            other => Err(Error::invalid(format!("unknown order mode `{other}`"))),
        }
    }
}

/// `low ≤ high` in `space` under `mode`.
pub fn precedes(space: &SpectrumSpace<'_>, mode: OrderMode, low: usize, high: usize) -> bool {
    let (lo, hi) = (
        space.point(low).ideal.members(),
        space.point(high).ideal.members(),
    );
    match mode {
        OrderMode::Containment => lo.is_subset(hi),
        OrderMode::SSpecialization => space
            .mults()
            .iter()
            .any(|s| scaled_subset(space.ring(), s, lo, hi)),
    }
}

/// Point indices refer to `induced.source` (`p_*`) and `induced.target` (`q_high`).
#[derive(Debug, Clone, Copy)]
pub struct GoingDownInstance<'m, 'r> {
    pub induced: &'m InducedMap<'r>,
    pub mode: OrderMode,
    pub p_low: usize,
    pub p_high: usize,
    pub q_high: usize,
}

impl<'m, 'r> GoingDownInstance<'m, 'r> {
    pub fn new(
        induced: &'m InducedMap<'r>,
        mode: OrderMode,
        p_low: usize,
        p_high: usize,
        q_high: usize,
    ) -> Result<Self> {
        let (ns, nt) = (induced.source.len(), induced.target.len());
        if p_low >= ns || p_high >= ns || q_high >= nt {
            return Err(Error::invalid("point index out of range"));
        }
        if induced.map[q_high] != p_high {
            return Err(Error::invalid("q_high does not lie over p_high"));
        }
        if !precedes(&induced.source, mode, p_low, p_high) {
            return Err(Error::invalid("p_low does not precede p_high"));
        }
        Ok(GoingDownInstance {
            induced,
            mode,
            p_low,
            p_high,
            q_high,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GoingDownOutcome {
    pub holds: bool,
    /// First target point (index order) lying over `p_low` below `q_high`.
    pub q_low: Option<usize>,
}

pub fn check_going_down(instance: &GoingDownInstance<'_, '_>) -> GoingDownOutcome {
    let im = instance.induced;
    let q_low = (0..im.target.len()).find(|&q| {
        im.map[q] == instance.p_low && precedes(&im.target, instance.mode, q, instance.q_high)
    });
    GoingDownOutcome {
        holds: q_low.is_some(),
        q_low,
    }
}

/// A failing instance in self-contained, replayable form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoingDownCounterexample {
    pub source: RingDesc,
    /// Generators of `S`.
    pub mults: Vec<Elem>,
    pub target: RingDesc,
    pub morphism: Vec<Elem>,
    pub mode: OrderMode,
    pub p_low: Vec<Elem>,
    pub p_high: Vec<Elem>,
    pub q_high: Vec<Elem>,
}

impl GoingDownCounterexample {
    /// Rebuilds everything from the recorded data and re-runs the check.
    /// Returns `Ok(true)` when the instance still fails.
    pub fn replay(&self, caps: &Caps) -> Result<bool> {
        let source = self.source.build_with_caps(caps)?;
        let target = self.target.build_with_caps(caps)?;
        let phi = RingMorphism::new(&source, &target, self.morphism.clone())?;
        let mults = mult_closure(&source, &self.mults)?;
        let im = induced_map(&phi, &mults)?;
        let locate = |space: &SpectrumSpace<'_>, members: &[Elem]| {
            let ideal = Ideal::from_members(
                space.ring(),
                BitSet::from_indices(space.ring().size(), members.iter().copied()),
            )?;
            space
                .index_of(&ideal)
                .ok_or_else(|| Error::invalid(format!("{ideal} is not a spectrum point")))
        };
        let inst = GoingDownInstance::new(
            &im,
            self.mode,
            locate(&im.source, &self.p_low)?,
            locate(&im.source, &self.p_high)?,
            locate(&im.target, &self.q_high)?,
        )?;
        Ok(!check_going_down(&inst).holds)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoingDownReport {
    pub mode: OrderMode,
    pub morphisms_checked: usize,
    pub instances_checked: usize,
    pub counterexamples: Vec<GoingDownCounterexample>,
    /// Human-readable notes on pairs that were not searched.
    pub skipped: Vec<String>,
}

impl GoingDownReport {
    fn empty(mode: OrderMode) -> Self {
        GoingDownReport {
            mode,
            morphisms_checked: 0,
            instances_checked: 0,
            counterexamples: Vec::new(),
            skipped: Vec::new(),
        }
    }

    fn absorb(&mut self, other: GoingDownReport) {
        self.morphisms_checked += other.morphisms_checked;
        self.instances_checked += other.instances_checked;
        self.counterexamples.extend(other.counterexamples);
        self.skipped.extend(other.skipped);
    }
}

/// All instances for one source ring, one `S` and one target ring.
pub fn search_pair(
    source_desc: &RingDesc,
    gens: &[Elem],
    target_desc: &RingDesc,
    mode: OrderMode,
    caps: &Caps,
) -> GoingDownReport {
    let mut report = GoingDownReport::empty(mode);
    let label = format!("{source_desc} -> {target_desc} with S = <{gens:?}>");
    let built = source_desc
        .build_with_caps(caps)
        .and_then(|s| Ok((s, target_desc.build_with_caps(caps)?)));
    let (source, target) = match built {
        Ok(pair) => pair,
        Err(e) => {
            report.skipped.push(format!("{label}: {e}"));
            return report;
        }
    };
    let mults = match mult_closure(&source, gens) {
        Ok(m) => m,
        Err(e) => {
            report.skipped.push(format!("{label}: {e}"));
            return report;
        }
    };
    let morphisms = match enumerate_morphisms_with_caps(&source, &target, caps) {
        Ok(ms) => ms,
        Err(e) => {
            report.skipped.push(format!("{label}: {e}"));
            return report;
        }
    };
    for phi in &morphisms {
        // 0 ∈ φ(S) excludes the morphism from the question
        let Ok(im) = induced_map(phi, &mults) else {
            continue;
        };
        report.morphisms_checked += 1;
        for q_high in 0..im.target.len() {
            let p_high = im.map[q_high];
            for p_low in 0..im.source.len() {
                if !precedes(&im.source, mode, p_low, p_high) {
                    continue;
                }
                report.instances_checked += 1;
                let inst = GoingDownInstance {
                    induced: &im,
                    mode,
                    p_low,
                    p_high,
                    q_high,
                };
                if !check_going_down(&inst).holds {
                    report.counterexamples.push(GoingDownCounterexample {
                        source: source_desc.clone(),
                        mults: gens.to_vec(),
                        target: target_desc.clone(),
                        morphism: phi.map().to_vec(),
                        mode,
                        p_low: im.source.point(p_low).ideal.to_vec(),
                        p_high: im.source.point(p_high).ideal.to_vec(),
                        q_high: im.target.point(q_high).ideal.to_vec(),
                    });
                }
            }
        }
    }
    report
}

/// Every corpus `(R, S)` against every target ring, in corpus order.
pub fn search_counterexamples(
    corpus: &CorpusSpec,
    targets: &[RingDesc],
    mode: OrderMode,
) -> GoingDownReport {
    let jobs: Vec<(&RingDesc, &Vec<Elem>, &RingDesc)> = corpus
        .entries
        .iter()
        .flat_map(|e| e.mults.iter().map(move |g| (&e.ring, g)))
        .flat_map(|(r, g)| targets.iter().map(move |t| (r, g, t)))
        .collect();
    let parts: Vec<GoingDownReport> = jobs
        .par_iter()
        .map(|(r, g, t)| search_pair(r, g, t, mode, &corpus.caps))
        .collect();
    let mut report = GoingDownReport::empty(mode);
    for p in parts {
        report.absorb(p);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{ideal_generated, MultSet};
    use crate::ring::{enumerate_morphisms, FiniteRing};
    use crate::verifier::CorpusEntry;

    #[test]
    fn z12_to_z6_containment_holds_with_zero() {
        let (r, t) = (FiniteRing::zn(12).unwrap(), FiniteRing::zn(6).unwrap());
        let phi = enumerate_morphisms(&r, &t).unwrap().remove(0);
        let s = mult_closure(&r, &[3]).unwrap();
        let im = induced_map(&phi, &s).unwrap();
        let idx = |space: &SpectrumSpace<'_>, g: Elem| {
            space
                .index_of(&ideal_generated(space.ring(), &[g]).unwrap())
                .unwrap()
        };
        let inst = GoingDownInstance::new(
            &im,
            OrderMode::Containment,
            idx(&im.source, 6),
            idx(&im.source, 2),
            idx(&im.target, 2),
        )
        .unwrap();
        let out = check_going_down(&inst);
        assert!(out.holds);
        assert_eq!(im.target.point(out.q_low.unwrap()).ideal, Ideal::zero(&t));
    }

    #[test]
    fn identity_and_reflexive_instances_hold() {
        let r = FiniteRing::zn(12).unwrap();
        let s = mult_closure(&r, &[3]).unwrap();
        let id = RingMorphism::identity(&r);
        let im = induced_map(&id, &s).unwrap();
        for mode in [OrderMode::Containment, OrderMode::SSpecialization] {
            for hi in 0..im.source.len() {
                for lo in 0..im.source.len() {
                    let Ok(inst) = GoingDownInstance::new(&im, mode, lo, hi, hi) else {
                        continue;
                    };
                    let out = check_going_down(&inst);
                    assert!(out.holds);
                    assert_eq!(out.q_low, Some(lo));
                }
            }
        }
    }

    #[test]
    fn instance_validation() {
        let r = FiniteRing::zn(6).unwrap();
        let im = induced_map(&RingMorphism::identity(&r), &MultSet::trivial(&r)).unwrap();
        // (3) and (2) are incomparable
        assert!(GoingDownInstance::new(&im, OrderMode::Containment, 0, 1, 1).is_err());
        assert!(GoingDownInstance::new(&im, OrderMode::Containment, 0, 0, 1).is_err());
        assert!(GoingDownInstance::new(&im, OrderMode::Containment, 0, 0, 9).is_err());
    }

    #[test]
    fn search_edge_cases() {
        let corpus = CorpusSpec {
            entries: vec![CorpusEntry {
                ring: RingDesc::zn(5),
                mults: vec![vec![]],
            }],
            morphism_pairs: vec![],
            caps: Caps::default(),
        };
        let empty = search_counterexamples(&corpus, &[], OrderMode::Containment);
        assert_eq!(empty.instances_checked, 0);
        assert!(empty.counterexamples.is_empty());

        // one-point spectra on both sides
        let fields = search_counterexamples(&corpus, &[RingDesc::zn(5)], OrderMode::Containment);
        assert!(fields.counterexamples.is_empty());
        assert_eq!(fields.morphisms_checked, 1);

        let too_big = search_pair(
            &RingDesc::zn(32),
            &[],
            &RingDesc::zn(2),
            OrderMode::Containment,
            &Caps::default(),
        );
        assert_eq!(too_big.skipped.len(), 1);
    }

    #[test]
    fn replay_reproduces_reported_failures() {
        // Z/12 → Z/4 collapses the chain (6) ⊆ (2) onto the single prime (2)
        let report = search_pair(
            &RingDesc::zn(12),
            &[3],
            &RingDesc::zn(4),
            OrderMode::Containment,
            &Caps::default(),
        );
        assert!(!report.counterexamples.is_empty());
        for c in &report.counterexamples {
            assert!(c.replay(&Caps::default()).unwrap());
        }
    }

    #[test]
    fn classical_mode_consistency() {
        // S ⊆ units, containment: every point is prime, so the search is the
        // classical going-down check on prime spectra.
        let r = FiniteRing::zn(12).unwrap();
        let units = r.units().to_vec();
        let rep = search_pair(
            &RingDesc::zn(12),
            &units,
            &RingDesc::zn(6),
            OrderMode::Containment,
            &Caps::default(),
        );
        // primes of Z/12 are maximal: only trivial chains, all lift
        assert!(rep.counterexamples.is_empty());
        assert!(rep.instances_checked > 0);
    }
}

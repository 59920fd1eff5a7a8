//! Exhaustive theorem checks over a corpus of `(ring, S)` pairs.
//!
//! Each check recomputes its statement from the primitive operations and
//! compares both sides exactly. Failures are data: a check never panics or
//! returns an error, it reports `fail` with a witness.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::desc::RingDesc;
use crate::error::{Error, Result};
use crate::ideal::{
    all_ideals, colon, ideal_generated, ideal_intersect, ideal_product, ideal_sum, mult_closure,
    s_radical, Ideal, MultSet,
};
use crate::ring::{enumerate_morphisms_with_caps, Caps, Elem, FiniteRing};
use crate::spectrum::{
    d_s, extended_ideal, induced_map, is_prime, localization_spec, s_prime_witnesses, scale_ideal,
    spec_s, v_s, v_s_element, v_s_of_set, SpectrumSpace,
};
use crate::topology::{
    clopen_certificate, connected_components, find_clopen_certificate, flat_opens_as_varieties,
    generic_points, irreducible_closed_sets, irreducible_components, is_t0, lambda_closure,
    noetherian_report, point_closure, s_flat_topology, s_zariski_topology, FiniteTopology,
};

/// Tags run by [`verify_all`], in report order.
pub const THEOREM_TAGS: [&str; 17] = [
    "prop-2.3",
    "prop-2.4",
    "thm-2.1",
    "lemma-4.1",
    "cor-4.3-finite",
    "prop-4.4",
    "thm-4.5",
    "lemma-4.6",
    "prop-4.7",
    "cor-4.8",
    "thm-5.1",
    "cor-5.2",
    "lemma-6.1",
    "thm-6.2",
    "prop-3.2",
    "remark-3.1",
    "remark-4.x-sP",
];

/// Tag of the morphism check run by [`verify_morphisms`].
pub const MORPHISM_TAG: &str = "prop-3.3";

/// Partitions are enumerated exhaustively only up to this many points.
const PARTITION_POINT_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Witness {
    pub detail: String,
    /// Ideals involved, as sorted member lists.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ideals: Vec<Vec<Elem>>,
    /// Spectrum point indices involved.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<Elem>,
}

impl Witness {
    fn new(detail: impl Into<String>) -> Self {
        Witness {
            detail: detail.into(),
            ..Witness::default()
        }
    }

    fn ideals(mut self, ideals: &[&Ideal]) -> Self {
        self.ideals = ideals.iter().map(|i| i.to_vec()).collect();
        self
    }

    fn points(mut self, points: &[usize]) -> Self {
        self.points = points.to_vec();
        self
    }

    fn elements(mut self, elements: &[Elem]) -> Self {
        self.elements = elements.to_vec();
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub id: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub elapsed_ms: f64,
}

enum Outcome {
    Pass(Option<String>),
    Skip(String),
    Fail(Witness),
}

type Check = std::result::Result<(), Witness>;

fn ensure(cond: bool, witness: impl FnOnce() -> Witness) -> Check {
    if cond {
        Ok(())
    } else {
        Err(witness())
    }
}

impl From<Check> for Outcome {
    fn from(c: Check) -> Self {
        match c {
            Ok(()) => Outcome::Pass(None),
            Err(w) => Outcome::Fail(w),
        }
    }
}

/// Everything the checks share, computed once per `(R, S)`.
pub(crate) struct Context<'r> {
    ring: &'r FiniteRing,
    mults: MultSet,
    ideals: Vec<Ideal>,
    index: HashMap<Ideal, usize>,
    pub(crate) space: SpectrumSpace<'r>,
    pub(crate) varieties: Vec<BitSet>,
    pub(crate) radicals: Vec<Ideal>,
    pub(crate) flat: FiniteTopology,
    pub(crate) zariski: FiniteTopology,
    pub(crate) lambdas: Vec<BitSet>,
}

impl<'r> Context<'r> {
    pub(crate) fn new(ring: &'r FiniteRing, mults: &MultSet) -> Result<Self> {
        let space = spec_s(ring, mults)?;
        let ideals = all_ideals(ring);
        let index = ideals
            .iter()
            .enumerate()
            .map(|(k, i)| (i.clone(), k))
            .collect();
        let varieties = ideals.iter().map(|i| v_s(&space, i)).collect();
        let radicals = ideals.iter().map(|i| s_radical(ring, mults, i)).collect();
        let flat = s_flat_topology(&space);
        let zariski = s_zariski_topology(&space)?;
        let lambdas = (0..space.len())
            .map(|p| lambda_closure(&space, p))
            .collect();
        Ok(Context {
            ring,
            mults: mults.clone(),
            ideals,
            index,
            space,
            varieties,
            radicals,
            flat,
            zariski,
            lambdas,
        })
    }

    fn idx(&self, ideal: &Ideal) -> usize {
        self.index[ideal]
    }

    fn n_ideals(&self) -> usize {
        self.ideals.len()
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n_ideals();
        (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
    }

    fn rad(&self, ideal: &Ideal) -> Ideal {
        s_radical(self.ring, &self.mults, ideal)
    }

    fn point_ideal(&self, p: usize) -> &Ideal {
        &self.space.point(p).ideal
    }

    fn run(&self, tag: &str) -> Outcome {
        match tag {
            "prop-2.3" => self.prop_2_3().into(),
            "prop-2.4" => self.prop_2_4().into(),
            "thm-2.1" => self.thm_2_1().into(),
            "lemma-4.1" => self.lemma_4_1().into(),
            "cor-4.3-finite" => self.cor_4_3_finite().into(),
            "prop-4.4" => self.prop_4_4().into(),
            "thm-4.5" => self.thm_4_5().into(),
            "lemma-4.6" => self.lemma_4_6(),
            "prop-4.7" => self.prop_4_7().into(),
            "cor-4.8" => self.cor_4_8().into(),
            "thm-5.1" => self.thm_5_1(),
            "cor-5.2" => self.cor_5_2().into(),
            "lemma-6.1" => self.lemma_6_1().into(),
            "thm-6.2" => self.thm_6_2().into(),
            "prop-3.2" => self.prop_3_2().into(),
            "remark-3.1" => self.remark_3_1().into(),
            "remark-4.x-sP" => self.remark_sp().into(),
            other => Outcome::Skip(format!("unknown tag {other}")),
        }
    }

    /// √[S]I is the intersection of the primes over I that miss S.
    fn prop_2_3(&self) -> Check {
        let primes: Vec<&Ideal> = self
            .ideals
            .iter()
            .filter(|p| !self.mults.meets(p.members()) && is_prime(self.ring, p))
            .collect();
        for (k, i) in self.ideals.iter().enumerate() {
            let meet = primes
                .iter()
                .filter(|p| i.is_subset(p))
                .fold(BitSet::full(self.ring.size()), |acc, p| {
                    acc.intersection(p.members())
                });
            ensure(*self.radicals[k].members() == meet, || {
                Witness::new("S-radical differs from the intersection of primes over I missing S")
                    .ideals(&[i, &self.radicals[k]])
            })?;
        }
        for p in primes {
            ensure(self.radicals[self.idx(p)] == *p, || {
                Witness::new("prime disjoint from S is not its own S-radical").ideals(&[p])
            })?;
        }
        Ok(())
    }

    fn prop_2_4(&self) -> Check {
        let rad0 = &self.radicals[self.idx(&Ideal::zero(self.ring))];
        for (i, j) in self.pairs() {
            let (vi, vj) = (&self.varieties[i], &self.varieties[j]);
            let (ri, rj) = (&self.radicals[i], &self.radicals[j]);
            let w = |what: &str| {
                Witness::new(what.to_string()).ideals(&[&self.ideals[i], &self.ideals[j]])
            };
            ensure(vi.is_subset(vj) == rj.is_subset(ri), || {
                w("V_S(I) ⊆ V_S(J) disagrees with √[S]J ⊆ √[S]I")
            })?;
            ensure((vi == vj) == (ri == rj), || {
                w("V_S(I) = V_S(J) disagrees with equal S-radicals")
            })?;
        }
        for (k, i) in self.ideals.iter().enumerate() {
            let v = &self.varieties[k];
            let r = &self.radicals[k];
            ensure(v.is_full() == (r == rad0), || {
                Witness::new("V_S(I) = Spec_S disagrees with √[S]I = √[S]0").ideals(&[i])
            })?;
            let meets = self.mults.meets(i.members());
            ensure(
                v.is_empty() == r.is_whole() && r.is_whole() == meets,
                || Witness::new("V_S(I) = ∅, √[S]I = R and I ∩ S ≠ ∅ disagree").ideals(&[i]),
            )?;
        }
        Ok(())
    }

    fn thm_2_1(&self) -> Check {
        let ring = self.ring;
        let n = ring.size();
        // (1) on every one- and two-element subset
        for a in ring.elements() {
            for b in a..n {
                let e = BitSet::from_indices(n, [a, b]);
                let generated = ideal_generated(ring, &[a, b]).expect("elements in range");
                ensure(
                    v_s_of_set(&self.space, &e) == self.varieties[self.idx(&generated)],
                    || Witness::new("V_S(E) ≠ V_S((E))").elements(&[a, b]),
                )?;
            }
        }
        // (2)
        ensure(
            self.varieties[self.idx(&Ideal::whole(ring))].is_empty(),
            || Witness::new("V_S(R) is not empty"),
        )?;
        ensure(
            self.varieties[self.idx(&Ideal::zero(ring))].is_full(),
            || Witness::new("V_S((0)) is not the whole spectrum"),
        )?;
        // (3) and (4) on pairs
        for (i, j) in self.pairs() {
            let (ii, jj) = (&self.ideals[i], &self.ideals[j]);
            let (vi, vj) = (&self.varieties[i], &self.varieties[j]);
            let sum = ideal_sum(ring, ii, jj).expect("same ring");
            let prod = ideal_product(ring, ii, jj).expect("same ring");
            let meet = ideal_intersect(ring, ii, jj).expect("same ring");
            let w = |what: &str| Witness::new(what.to_string()).ideals(&[ii, jj]);
            ensure(
                vi.intersection(vj) == self.varieties[self.idx(&sum)],
                || w("V_S(I) ∩ V_S(J) ≠ V_S(I + J)"),
            )?;
            let union = vi.union(vj);
            ensure(union == self.varieties[self.idx(&prod)], || {
                w("V_S(I) ∪ V_S(J) ≠ V_S(IJ)")
            })?;
            ensure(union == self.varieties[self.idx(&meet)], || {
                w("V_S(I) ∪ V_S(J) ≠ V_S(I ∩ J)")
            })?;
        }
        // (3) on the family of all ideals
        let total = self.ideals.iter().fold(Ideal::zero(ring), |acc, i| {
            ideal_sum(ring, &acc, i).expect("same ring")
        });
        let all_meet = self
            .varieties
            .iter()
            .fold(self.space.all_points(), |acc, v| acc.intersection(v));
        ensure(all_meet == self.varieties[self.idx(&total)], || {
            Witness::new("intersection of all S-varieties ≠ V_S of the total sum")
        })
    }

    fn lemma_4_1(&self) -> Check {
        let ring = self.ring;
        for (i, j) in self.pairs() {
            let lhs = self.rad(
                &ideal_product(ring, &self.radicals[i], &self.radicals[j]).expect("same ring"),
            );
            let rhs = self
                .rad(&ideal_product(ring, &self.ideals[i], &self.ideals[j]).expect("same ring"));
            ensure(lhs == rhs, || {
                Witness::new("√[S](√[S]I·√[S]J) ≠ √[S](IJ)")
                    .ideals(&[&self.ideals[i], &self.ideals[j]])
            })?;
        }
        Ok(())
    }

    fn cor_4_3_finite(&self) -> Check {
        flat_opens_as_varieties(&self.space, &self.flat)
            .map_err(|e| Witness::new(e.to_string()))?;
        for (k, v) in self.varieties.iter().enumerate() {
            ensure(self.flat.is_open(v), || {
                Witness::new("S-variety is not S-flat open").ideals(&[&self.ideals[k]])
            })?;
        }
        Ok(())
    }

    fn prop_4_4(&self) -> Check {
        for p in 0..self.space.len() {
            ensure(point_closure(&self.flat, p) == self.lambdas[p], || {
                Witness::new("flat closure of {P} differs from Λ(P)")
                    .ideals(&[self.point_ideal(p)])
                    .points(&[p])
            })?;
        }
        Ok(())
    }

    fn thm_4_5(&self) -> Check {
        for c in irreducible_closed_sets(&self.flat) {
            let g = generic_points(&self.space, &self.flat, &c).map_err(|e| {
                Witness::new(format!("irreducible closed set {c}: {e}")).points(&c.to_vec())
            })?;
            let primes: Vec<usize> = g
                .points
                .iter()
                .filter(|&p| self.space.point(p).is_prime)
                .collect();
            ensure(primes == [g.prime_representative], || {
                Witness::new(format!("prime generic points of {c} are not exactly one"))
                    .points(&primes)
            })?;
        }
        Ok(())
    }

    fn lemma_4_6(&self) -> Outcome {
        let primes = self.space.prime_points();
        if primes.len() < 2 {
            return Outcome::Skip("fewer than two prime points".into());
        }
        for &p in &primes {
            for &q in &primes {
                if p != q && self.lambdas[p] == self.lambdas[q] {
                    return Outcome::Fail(
                        Witness::new("distinct primes with equal Λ")
                            .ideals(&[self.point_ideal(p), self.point_ideal(q)])
                            .points(&[p, q]),
                    );
                }
            }
        }
        Outcome::Pass(None)
    }

    fn prop_4_7(&self) -> Check {
        let loc = localization_spec(self.ring, &self.mults);
        let mut lambda_of = Vec::new();
        for p in &loc.primes {
            let k = self.space.index_of(p).ok_or_else(|| {
                Witness::new("prime disjoint from S is missing from Spec_S").ideals(&[p])
            })?;
            lambda_of.push(self.lambdas[k].clone());
        }
        let image: BTreeSet<BitSet> = lambda_of.iter().cloned().collect();
        ensure(image.len() == lambda_of.len(), || {
            Witness::new("P ↦ Λ(P) is not injective on primes missing S")
        })?;
        let irreducible: BTreeSet<BitSet> =
            irreducible_closed_sets(&self.flat).into_iter().collect();
        ensure(image == irreducible, || {
            Witness::new("Λ-images of primes missing S are not the irreducible flat-closed sets")
        })?;
        let maximal: BTreeSet<BitSet> = loc
            .maximal
            .iter()
            .zip(&lambda_of)
            .filter(|(&m, _)| m)
            .map(|(_, l)| l.clone())
            .collect();
        let components: BTreeSet<BitSet> = irreducible_components(&self.flat).into_iter().collect();
        ensure(maximal == components, || {
            Witness::new("maximal primes missing S do not match the irreducible components")
        })
    }

    fn cor_4_8(&self) -> Check {
        let all_prime = self.space.points().iter().all(|p| p.is_prime);
        ensure(is_t0(&self.flat) == all_prime, || {
            Witness::new(format!(
                "T0 = {}, every S-prime prime = {all_prime}",
                is_t0(&self.flat)
            ))
        })?;
        let colon_moves = self.space.points().iter().any(|p| p.colon_prime != p.ideal);
        ensure(colon_moves == !all_prime, || {
            Witness::new("non-prime points do not match points with colon prime ≠ ideal")
        })
    }

    fn thm_5_1(&self) -> Outcome {
        let n = self.space.len();
        if n > PARTITION_POINT_LIMIT {
            return Outcome::Skip(format!("{n} points exceed the partition limit"));
        }
        let closed: HashSet<&BitSet> = self.varieties.iter().collect();
        let rad0 = &self.radicals[self.idx(&Ideal::zero(self.ring))];
        let mut nontrivial = 0usize;
        for mask in 0u64..(1u64 << n) {
            let c1 = BitSet::from_indices(n, (0..n).filter(|&i| mask >> i & 1 == 1));
            let c2 = c1.complement();
            let zariski = closed.contains(&c1) && closed.contains(&c2);
            let flat = self.flat.is_closed(&c1) && self.flat.is_closed(&c2);
            let cert = find_clopen_certificate(&self.space, &c1, &c2);
            if zariski != flat || zariski != cert.is_some() {
                return Outcome::Fail(
                    Witness::new(format!(
                        "partition {c1} | {c2}: zariski-closed {zariski}, certificate {}, flat-closed {flat}",
                        cert.is_some()
                    ))
                    .points(&c1.to_vec()),
                );
            }
            if !zariski {
                continue;
            }
            let (f1, f2) = match clopen_certificate(&self.space, &c1, &c2) {
                Ok(c) => c,
                Err(e) => return Outcome::Fail(Witness::new(e.to_string()).points(&c1.to_vec())),
            };
            let ring = self.ring;
            let sound = self.mults.contains(ring.add(f1, f2))
                && rad0.contains(ring.mul(f1, f2))
                && v_s_element(&self.space, f1) == c1
                && v_s_element(&self.space, f2) == c2;
            if !sound {
                return Outcome::Fail(
                    Witness::new("certificate fails direct re-verification").elements(&[f1, f2]),
                );
            }
            if !c1.is_empty() && !c2.is_empty() {
                nontrivial += 1;
            }
        }
        if nontrivial == 0 {
            Outcome::Skip("no nontrivial clopen partition".into())
        } else {
            Outcome::Pass(Some(format!(
                "{} nontrivial clopen partitions",
                nontrivial / 2
            )))
        }
    }

    fn cor_5_2(&self) -> Check {
        let flat = connected_components(&self.flat);
        let zar = connected_components(&self.zariski);
        ensure(flat == zar, || {
            Witness::new(format!(
                "connected components differ: flat {flat:?}, S-Zariski {zar:?}"
            ))
        })
    }

    fn lemma_6_1(&self) -> Check {
        for (k, i) in self.ideals.iter().enumerate() {
            let d = d_s(&self.space, i);
            for p in d.iter() {
                ensure(self.lambdas[p].is_subset(&d), || {
                    Witness::new("Λ(P) escapes D_S(I)")
                        .ideals(&[&self.ideals[k], self.point_ideal(p)])
                        .points(&[p])
                })?;
            }
        }
        Ok(())
    }

    fn thm_6_2(&self) -> Check {
        let rep = noetherian_report(&self.space).map_err(|e| Witness::new(e.to_string()))?;
        ensure(rep.agree() && rep.all_hold(), || {
            Witness::new(format!("conditions evaluate to {:?}", rep.conditions()))
        })
    }

    fn prop_3_2(&self) -> Check {
        for p in self.space.points() {
            ensure(
                is_prime(self.ring, &p.colon_prime) && !self.mults.meets(p.colon_prime.members()),
                || Witness::new("colon prime is not a prime missing S").ideals(&[&p.ideal]),
            )?;
        }
        for a in self.ring.elements() {
            let pre = BitSet::from_indices(
                self.space.len(),
                (0..self.space.len()).filter(|&p| self.space.point(p).colon_prime.contains(a)),
            );
            let v = v_s_element(&self.space, a);
            ensure(pre == v && self.flat.is_open(&pre), || {
                Witness::new("preimage of V(a) under P ↦ (P : s_P) is not V_S(a)").elements(&[a])
            })?;
        }
        Ok(())
    }

    fn remark_3_1(&self) -> Check {
        for (k, p) in self.space.points().iter().enumerate() {
            let prime_colons: Vec<(Elem, Ideal)> = self
                .mults
                .iter()
                .map(|s| (s, colon(self.ring, &p.ideal, s)))
                .filter(|(_, c)| is_prime(self.ring, c))
                .collect();
            ensure(
                p.witnesses
                    .iter()
                    .any(|s| prime_colons.iter().any(|(t, _)| t == s)),
                || {
                    Witness::new("no witness yields a prime colon")
                        .ideals(&[&p.ideal])
                        .points(&[k])
                },
            )?;
            for (s, c) in &prime_colons {
                ensure(*c == p.colon_prime, || {
                    Witness::new("two prime colons differ")
                        .ideals(&[&p.ideal, c, &p.colon_prime])
                        .elements(&[*s])
                })?;
            }
        }
        Ok(())
    }

    fn remark_sp(&self) -> Check {
        for (k, p) in self.space.points().iter().enumerate() {
            for s in self.mults.iter() {
                let sp = scale_ideal(self.ring, s, &p.ideal);
                let listed = self.space.index_of(&sp);
                let is_s_prime = !s_prime_witnesses(self.ring, &self.mults, &sp).is_empty();
                let Some(j) = listed.filter(|_| is_s_prime) else {
                    return Err(Witness::new("s·P is not a listed S-prime")
                        .ideals(&[&p.ideal, &sp])
                        .elements(&[s]));
                };
                ensure(self.lambdas[j] == self.lambdas[k], || {
                    Witness::new("Λ(s·P) ≠ Λ(P)")
                        .ideals(&[&p.ideal, &sp])
                        .points(&[k, j])
                        .elements(&[s])
                })?;
            }
        }
        Ok(())
    }
}

fn timed(tag: &str, body: impl FnOnce() -> Outcome) -> TheoremCheck {
    let start = Instant::now();
    let outcome = body();
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let (status, note, witness) = match outcome {
        Outcome::Pass(note) => (Status::Pass, note, None),
        Outcome::Skip(why) => (Status::Skipped, Some(why), None),
        Outcome::Fail(w) => (Status::Fail, None, Some(w)),
    };
    TheoremCheck {
        id: tag.to_string(),
        status,
        note,
        witness,
        elapsed_ms,
    }
}

/// Every tag in [`THEOREM_TAGS`] on one `(R, S)`.
pub fn verify_all(ring: &FiniteRing, mults: &MultSet) -> Vec<TheoremCheck> {
    verify_selected(ring, mults, &THEOREM_TAGS)
}

/// The given tags, in [`THEOREM_TAGS`] order. Unknown tags are ignored.
pub fn verify_selected(ring: &FiniteRing, mults: &MultSet, tags: &[&str]) -> Vec<TheoremCheck> {
    let selected: Vec<&str> = THEOREM_TAGS
        .iter()
        .copied()
        .filter(|t| tags.contains(t))
        .collect();
    match Context::new(ring, mults) {
        Ok(ctx) => selected
            .iter()
            .map(|&tag| timed(tag, || ctx.run(tag)))
            .collect(),
        // the shared constructions themselves contradicted a theorem
        Err(e) => selected
            .iter()
            .map(|&tag| timed(tag, || Outcome::Fail(Witness::new(e.to_string()))))
            .collect(),
    }
}

/// Re-runs one tag from scratch; `Ok(true)` if it fails again.
pub fn replay(ring: &FiniteRing, mults: &MultSet, tag: &str) -> Result<bool> {
    if !THEOREM_TAGS.contains(&tag) {
        return Err(Error::invalid(format!("unknown theorem tag `{tag}`")));
    }
    Ok(verify_selected(ring, mults, &[tag])[0].status == Status::Fail)
}

/// Continuity of `φ_S` for every morphism `source → target` with `0 ∉ φ(S)`:
/// `φ_S⁻¹(V_S(I)) = V_{φ(S)}(φ(I)R')` for every ideal `I`, and the right side
/// is open in the target's flat topology.
pub fn verify_morphisms(
    source: &FiniteRing,
    target: &FiniteRing,
    mults: &MultSet,
    caps: &Caps,
) -> Vec<TheoremCheck> {
    vec![timed(MORPHISM_TAG, || {
        morphism_outcome(source, target, mults, caps)
    })]
}

fn morphism_outcome(
    source: &FiniteRing,
    target: &FiniteRing,
    mults: &MultSet,
    caps: &Caps,
) -> Outcome {
    let morphisms = match enumerate_morphisms_with_caps(source, target, caps) {
        Ok(ms) => ms,
        Err(e) => return Outcome::Skip(e.to_string()),
    };
    let ideals = all_ideals(source);
    let (mut checked, mut excluded) = (0, 0);
    for phi in &morphisms {
        let im = match induced_map(phi, mults) {
            Ok(im) => im,
            Err(Error::InvalidParameter(_)) => {
                excluded += 1;
                continue;
            }
            Err(e) => {
                return Outcome::Fail(Witness::new(e.to_string()).elements(phi.map()));
            }
        };
        checked += 1;
        let target_flat = s_flat_topology(&im.target);
        for i in &ideals {
            let pulled = im.preimage(&v_s(&im.source, i));
            let pushed = v_s(&im.target, &extended_ideal(phi, i));
            if pulled != pushed || !target_flat.is_open(&pulled) {
                return Outcome::Fail(
                    Witness::new("φ_S⁻¹(V_S(I)) ≠ V_φ(S)(φ(I)R') or not flat-open")
                        .ideals(&[i])
                        .elements(phi.map()),
                );
            }
        }
    }
    Outcome::Pass(Some(format!(
        "{checked} morphisms checked, {excluded} with 0 in φ(S)"
    )))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub ring: RingDesc,
    /// One generator list per multiplicative set; `[]` means `S = {1}`.
    pub mults: Vec<Vec<Elem>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismPair {
    pub source: RingDesc,
    pub target: RingDesc,
    pub mults: Vec<Elem>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub entries: Vec<CorpusEntry>,
    pub morphism_pairs: Vec<MorphismPair>,
    pub caps: Caps,
}

impl CorpusSpec {
    /// Parses a corpus file (a JSON list of `{"ring": .., "mults": [[..], ..]}`).
    /// Every entry also gets its endomorphisms checked when the ring is small
    /// enough for morphism enumeration.
    pub fn from_json(text: &str) -> Result<Self> {
        let entries: Vec<CorpusEntry> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let caps = Caps::default();
        let mut corpus = CorpusSpec {
            entries,
            morphism_pairs: Vec::new(),
            caps,
        };
        corpus.validate()?;
        corpus.morphism_pairs = corpus.endomorphism_pairs();
        Ok(corpus)
    }

    fn endomorphism_pairs(&self) -> Vec<MorphismPair> {
        let mut pairs = Vec::new();
        for e in &self.entries {
            let Ok(ring) = e.ring.build_with_caps(&self.caps) else {
                continue;
            };
            if ring.size() > self.caps.morphism_source {
                continue;
            }
            for g in &e.mults {
                pairs.push(MorphismPair {
                    source: e.ring.clone(),
                    target: e.ring.clone(),
                    mults: g.clone(),
                });
            }
        }
        pairs
    }

    /// The fixed regression corpus.
    pub fn builtin() -> Self {
        use RingDesc as D;
        let zn = D::zn;
        let z2 = || zn(2);
        let entries = vec![
            (zn(2), vec![vec![]]),
            (zn(4), vec![vec![], vec![3]]),
            (zn(5), vec![vec![], vec![2]]),
            (zn(6), vec![vec![], vec![5], vec![3]]),
            (zn(8), vec![vec![], vec![3], vec![3, 5, 7]]),
            (zn(9), vec![vec![], vec![2]]),
            (
                zn(12),
                vec![vec![], vec![3], vec![1, 5, 7, 11], vec![4], vec![9, 5]],
            ),
            (zn(24), vec![vec![], vec![3], vec![9]]),
            (zn(30), vec![vec![], vec![6], vec![2, 3]]),
            (zn(36), vec![vec![], vec![4], vec![9]]),
            (D::poly_quotient(2, vec![0, 0, 1]), vec![vec![], vec![3]]),
            (D::poly_quotient(2, vec![1, 1, 1]), vec![vec![], vec![2, 3]]),
            (D::poly_quotient(2, vec![0, 0, 0, 1]), vec![vec![]]),
            (D::poly_quotient(3, vec![0, 0, 1]), vec![vec![], vec![2]]),
            (D::product(vec![z2(), z2()]), vec![vec![], vec![2]]),
            (
                D::product(vec![z2(), zn(3)]),
                vec![vec![], vec![3], vec![5]],
            ),
            (
                D::product(vec![z2(), z2(), z2()]),
                vec![vec![], vec![6], vec![4]],
            ),
            (
                D::product(vec![z2(), zn(4)]),
                vec![vec![], vec![4], vec![6]],
            ),
            (
                D::product(vec![zn(4), zn(3)]),
                vec![vec![], vec![4], vec![3]],
            ),
        ]
        .into_iter()
        .map(|(ring, mults)| CorpusEntry { ring, mults })
        .collect();
        let mut corpus = CorpusSpec {
            entries,
            morphism_pairs: Vec::new(),
            caps: Caps::default(),
        };
        let mut pairs = corpus.endomorphism_pairs();
        let cross = [
            (zn(12), zn(6), vec![3]),
            (zn(12), zn(4), vec![3]),
            (zn(12), zn(3), vec![]),
            (zn(2), zn(3), vec![]),
            (zn(6), D::product(vec![z2(), zn(3)]), vec![]),
            (zn(6), D::product(vec![z2(), zn(3)]), vec![3]),
            (zn(8), zn(4), vec![]),
            (zn(8), zn(2), vec![3]),
            (zn(4), D::poly_quotient(2, vec![0, 0, 1]), vec![]),
            (D::product(vec![z2(), z2()]), z2(), vec![2]),
            (
                D::product(vec![z2(), z2(), z2()]),
                D::product(vec![z2(), z2()]),
                vec![6],
            ),
            (
                D::poly_quotient(2, vec![0, 0, 1]),
                D::poly_quotient(2, vec![1, 1, 1]),
                vec![],
            ),
        ];
        pairs.extend(
            cross
                .into_iter()
                .map(|(source, target, mults)| MorphismPair {
                    source,
                    target,
                    mults,
                }),
        );
        corpus.morphism_pairs = pairs;
        corpus
    }

    /// Builds every ring and every multiplicative set.
    pub fn validate(&self) -> Result<()> {
        for e in &self.entries {
            let ring = e.ring.build_with_caps(&self.caps)?;
            for g in &e.mults {
                mult_closure(&ring, g)?;
            }
        }
        for p in &self.morphism_pairs {
            let source = p.source.build_with_caps(&self.caps)?;
            p.target.build_with_caps(&self.caps)?;
            mult_closure(&source, &p.mults)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryReport {
    pub ring: RingDesc,
    pub name: String,
    pub generators: Vec<Elem>,
    pub mults: Vec<Elem>,
    pub points: usize,
    pub checks: Vec<TheoremCheck>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MorphismReport {
    pub source: RingDesc,
    pub target: RingDesc,
    pub name: String,
    pub generators: Vec<Elem>,
    pub checks: Vec<TheoremCheck>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub entries: Vec<EntryReport>,
    pub morphisms: Vec<MorphismReport>,
    pub totals: Totals,
}

impl CorpusReport {
    pub fn has_failures(&self) -> bool {
        self.totals.fail > 0
    }

    pub fn all_checks(&self) -> impl Iterator<Item = &TheoremCheck> {
        self.entries
            .iter()
            .flat_map(|e| &e.checks)
            .chain(self.morphisms.iter().flat_map(|m| &m.checks))
    }
}

/// Runs every entry and morphism pair; results keep corpus order.
pub fn verify_corpus(corpus: &CorpusSpec) -> Result<CorpusReport> {
    verify_corpus_selected(corpus, None)
}

pub fn verify_corpus_selected(corpus: &CorpusSpec, only: Option<&[&str]>) -> Result<CorpusReport> {
    corpus.validate()?;
    let wanted = |tag: &str| only.is_none_or(|o| o.contains(&tag));
    let tags: Vec<&str> = THEOREM_TAGS.iter().copied().filter(|t| wanted(t)).collect();

    let jobs: Vec<(&CorpusEntry, &Vec<Elem>)> = corpus
        .entries
        .iter()
        .flat_map(|e| e.mults.iter().map(move |g| (e, g)))
        .collect();
    let entries = jobs
        .par_iter()
        .map(|(e, gens)| -> Result<EntryReport> {
            let ring = e.ring.build_with_caps(&corpus.caps)?;
            let mults = mult_closure(&ring, gens)?;
            let points = spec_s(&ring, &mults).map(|s| s.len()).unwrap_or(0);
            Ok(EntryReport {
                ring: e.ring.clone(),
                name: e.ring.to_string(),
                generators: gens.to_vec(),
                mults: mults.to_vec(),
                points,
                checks: verify_selected(&ring, &mults, &tags),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let morphisms = if wanted(MORPHISM_TAG) {
        corpus
            .morphism_pairs
            .par_iter()
            .map(|p| -> Result<MorphismReport> {
                let source = p.source.build_with_caps(&corpus.caps)?;
                let target = p.target.build_with_caps(&corpus.caps)?;
                let mults = mult_closure(&source, &p.mults)?;
                Ok(MorphismReport {
                    source: p.source.clone(),
                    target: p.target.clone(),
                    name: format!("{} -> {}", p.source, p.target),
                    generators: p.mults.clone(),
                    checks: verify_morphisms(&source, &target, &mults, &corpus.caps),
                })
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        Vec::new()
    };

    let mut report = CorpusReport {
        entries,
        morphisms,
        totals: Totals::default(),
    };
    let mut totals = Totals::default();
    for c in report.all_checks() {
        match c.status {
            Status::Pass => totals.pass += 1,
            Status::Fail => totals.fail += 1,
            Status::Skipped => totals.skipped += 1,
        }
    }
    report.totals = totals;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn statuses(checks: &[TheoremCheck]) -> Vec<(String, Status)> {
        checks.iter().map(|c| (c.id.clone(), c.status)).collect()
    }

    fn assert_no_failures(checks: &[TheoremCheck]) {
        for c in checks {
            assert_ne!(c.status, Status::Fail, "{} failed: {:?}", c.id, c.witness);
        }
    }

    #[test]
    fn worked_spaces_pass() {
        let z12 = FiniteRing::zn(12).unwrap();
        let checks = verify_all(&z12, &mult_closure(&z12, &[3]).unwrap());
        assert_eq!(checks.len(), THEOREM_TAGS.len());
        assert_no_failures(&checks);

        let z6 = FiniteRing::zn(6).unwrap();
        let checks = verify_all(&z6, &MultSet::trivial(&z6));
        assert_no_failures(&checks);
        let thm51 = checks.iter().find(|c| c.id == "thm-5.1").unwrap();
        assert_eq!(thm51.status, Status::Pass);

        let f4 = FiniteRing::poly_quotient(2, &[1, 1, 1]).unwrap();
        assert_no_failures(&verify_all(&f4, &MultSet::trivial(&f4)));
    }

    #[test]
    fn selection_keeps_canonical_order() {
        let z6 = FiniteRing::zn(6).unwrap();
        let got = verify_selected(
            &z6,
            &MultSet::trivial(&z6),
            &["thm-5.1", "prop-2.3", "nope"],
        );
        let ids: Vec<_> = got.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids, vec!["prop-2.3", "thm-5.1"]);
    }

    #[test]
    fn morphism_checks() {
        let (z12, z6) = (FiniteRing::zn(12).unwrap(), FiniteRing::zn(6).unwrap());
        let s = mult_closure(&z12, &[3]).unwrap();
        let c = verify_morphisms(&z12, &z6, &s, &Caps::default());
        assert_eq!(c[0].status, Status::Pass);
        assert_eq!(
            c[0].note.as_deref(),
            Some("1 morphisms checked, 0 with 0 in φ(S)")
        );

        let (z2, z3) = (FiniteRing::zn(2).unwrap(), FiniteRing::zn(3).unwrap());
        let c = verify_morphisms(&z2, &z3, &MultSet::trivial(&z2), &Caps::default());
        assert_eq!(c[0].status, Status::Pass);

        let c = verify_morphisms(&z12, &z12, &s, &Caps::default());
        assert_eq!(c[0].status, Status::Pass);
    }

    #[test]
    fn corrupted_context_is_reported_not_thrown() {
        let z12 = FiniteRing::zn(12).unwrap();
        let s = mult_closure(&z12, &[3]).unwrap();
        let mut ctx = Context::new(&z12, &s).unwrap();
        // pretend Λ((6)) were just {(6)}
        ctx.lambdas[0] = BitSet::singleton(2, 0);
        let first = ctx.run("prop-4.4");
        let Outcome::Fail(w) = first else {
            panic!("corruption not detected");
        };
        assert_eq!(w.points, vec![0]);
        // replaying against the same data reproduces the same witness
        let Outcome::Fail(again) = ctx.run("prop-4.4") else {
            panic!("replay did not fail");
        };
        assert_eq!(again, w);

        let mut ctx = Context::new(&z12, &s).unwrap();
        ctx.radicals[0] = Ideal::zero(&z12);
        assert!(matches!(ctx.run("prop-2.3"), Outcome::Fail(_)));
        assert!(matches!(ctx.run("prop-2.4"), Outcome::Fail(_)));
    }

    #[test]
    fn replay_of_passing_check_does_not_fail() {
        let z12 = FiniteRing::zn(12).unwrap();
        let s = mult_closure(&z12, &[3]).unwrap();
        assert!(!replay(&z12, &s, "thm-5.1").unwrap());
        assert!(replay(&z12, &s, "thm-9.9").is_err());
    }

    #[test]
    fn corpus_edge_cases() {
        let empty = CorpusSpec::from_json("[]").unwrap();
        let rep = verify_corpus(&empty).unwrap();
        assert!(rep.entries.is_empty() && !rep.has_failures());

        let bad = r#"[{"ring":{"kind":"table","n":2,"one":1,"add":[[0,1],[1,1]],"mul":[[0,0],[0,1]]},"mults":[[]]}]"#;
        assert!(matches!(
            CorpusSpec::from_json(bad),
            Err(Error::Axiom { .. })
        ));
        let bad_mults = r#"[{"ring":{"kind":"zn","n":4},"mults":[[2]]}]"#;
        assert!(matches!(
            CorpusSpec::from_json(bad_mults),
            Err(Error::InvalidMultSet(_))
        ));
        let unknown = r#"[{"ring":{"kind":"zn","n":4},"mults":[[]],"x":1}]"#;
        assert!(matches!(
            CorpusSpec::from_json(unknown),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn small_file_corpus_runs_endomorphisms() {
        let corpus =
            CorpusSpec::from_json(r#"[{"ring":{"kind":"zn","n":6},"mults":[[],[3]]}]"#).unwrap();
        assert_eq!(corpus.morphism_pairs.len(), 2);
        let rep = verify_corpus(&corpus).unwrap();
        assert_eq!(rep.entries.len(), 2);
        assert_eq!(rep.morphisms.len(), 2);
        assert!(!rep.has_failures());
        let st = statuses(&rep.entries[0].checks);
        assert_eq!(st.len(), THEOREM_TAGS.len());
    }
}

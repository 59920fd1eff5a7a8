//! S-prime ideals, the spectrum `Spec_S R`, S-varieties and induced maps.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::desc::RingDesc;
use crate::error::{Error, Result};
use crate::ideal::{all_ideals, colon, ideal_generated, mult_closure, Ideal, MultSet};
use crate::ring::{Elem, FiniteRing, RingMorphism};

/// `s·A ⊆ B` for element sets over the same ring.
pub(crate) fn scaled_subset(ring: &FiniteRing, s: Elem, a: &BitSet, b: &BitSet) -> bool {
    a.iter().all(|x| b.contains(ring.mul(s, x)))
}

/// The set product `s·P`.
pub fn scale_ideal(ring: &FiniteRing, s: Elem, p: &Ideal) -> Ideal {
    Ideal::from_members_unchecked(BitSet::from_indices(
        ring.size(),
        p.members().iter().map(|x| ring.mul(s, x)),
    ))
}

/// Classical primality: proper, and `ab ∈ P` forces `a ∈ P` or `b ∈ P`.
pub fn is_prime(ring: &FiniteRing, p: &Ideal) -> bool {
    !p.is_whole()
        && ring.elements().all(|a| {
            p.contains(a)
                || ring
                    .elements()
                    .all(|b| !p.contains(ring.mul(a, b)) || p.contains(b))
        })
}

/// Every `s ∈ S` for which `ab ∈ P ⇒ sa ∈ P or sb ∈ P`. Empty when `P` meets
/// `S` or is the whole ring.
pub fn s_prime_witnesses(ring: &FiniteRing, mults: &MultSet, p: &Ideal) -> Vec<Elem> {
    if p.is_whole() || mults.meets(p.members()) {
        return Vec::new();
    }
    // pairs (a, b) with ab ∈ P, computed once
    let pairs: Vec<(Elem, Elem)> = ring
        .elements()
        .flat_map(|a| (a..ring.size()).map(move |b| (a, b)))
        .filter(|&(a, b)| p.contains(ring.mul(a, b)))
        .collect();
    mults
        .iter()
        .filter(|&s| {
            pairs
                .iter()
                .all(|&(a, b)| p.contains(ring.mul(s, a)) || p.contains(ring.mul(s, b)))
        })
        .collect()
}

pub fn is_s_prime(ring: &FiniteRing, mults: &MultSet, p: &Ideal) -> (bool, Vec<Elem>) {
    let w = s_prime_witnesses(ring, mults, p);
    (!w.is_empty(), w)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumPoint {
    pub ideal: Ideal,
    /// Every `s ∈ S` satisfying the S-prime condition for `ideal`.
    pub witnesses: Vec<Elem>,
    pub is_prime: bool,
    /// The common prime value of `(ideal : s)` over the witnesses.
    pub colon_prime: Ideal,
}

impl SpectrumPoint {
    fn build(ring: &FiniteRing, ideal: Ideal, witnesses: Vec<Elem>) -> Result<Self> {
        let mut prime_colons = witnesses
            .iter()
            .map(|&s| colon(ring, &ideal, s))
            .filter(|c| is_prime(ring, c));
        let Some(colon_prime) = prime_colons.next() else {
            return Err(Error::Counterexample {
                tag: "remark-3.1",
                detail: format!("no witness of {ideal} yields a prime colon"),
            });
        };
        if let Some(other) = prime_colons.find(|c| *c != colon_prime) {
            return Err(Error::Counterexample {
                tag: "remark-3.1",
                detail: format!("prime colons {colon_prime} and {other} of {ideal} differ"),
            });
        }
        Ok(SpectrumPoint {
            is_prime: is_prime(ring, &ideal),
            ideal,
            witnesses,
            colon_prime,
        })
    }
}

/// The S-primes of a ring in canonical ideal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumSpace<'r> {
    ring: &'r FiniteRing,
    mults: MultSet,
    points: Vec<SpectrumPoint>,
}

impl<'r> SpectrumSpace<'r> {
    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    pub fn mults(&self) -> &MultSet {
        &self.mults
    }

    pub fn points(&self) -> &[SpectrumPoint] {
        &self.points
    }

    pub fn point(&self, index: usize) -> &SpectrumPoint {
        &self.points[index]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of(&self, ideal: &Ideal) -> Option<usize> {
        self.points.iter().position(|p| p.ideal == *ideal)
    }

    pub fn all_points(&self) -> BitSet {
        BitSet::full(self.len())
    }

    pub fn no_points(&self) -> BitSet {
        BitSet::new(self.len())
    }

    /// Indices of the points that are prime ideals.
    pub fn prime_points(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.points[i].is_prime)
            .collect()
    }
}

/// `Spec_S R`.
pub fn spec_s<'r>(ring: &'r FiniteRing, mults: &MultSet) -> Result<SpectrumSpace<'r>> {
    ring.check_width(mults.members(), "multiplicative set")?;
    let points = all_ideals(ring)
        .into_par_iter()
        .filter_map(|ideal| {
            let witnesses = s_prime_witnesses(ring, mults, &ideal);
            (!witnesses.is_empty()).then(|| SpectrumPoint::build(ring, ideal, witnesses))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectrumSpace {
        ring,
        mults: mults.clone(),
        points,
    })
}

/// `V_S(E) = { P : s·E ⊆ P for some s ∈ S }` for an arbitrary element set `E`.
pub fn v_s_of_set(space: &SpectrumSpace<'_>, elems: &BitSet) -> BitSet {
    let ring = space.ring;
    BitSet::from_indices(
        space.len(),
        (0..space.len()).filter(|&k| {
            let p = space.points[k].ideal.members();
            space.mults.iter().any(|s| scaled_subset(ring, s, elems, p))
        }),
    )
}

pub fn v_s(space: &SpectrumSpace<'_>, ideal: &Ideal) -> BitSet {
    v_s_of_set(space, ideal.members())
}

/// `V_S((f))`.
pub fn v_s_element(space: &SpectrumSpace<'_>, f: Elem) -> BitSet {
    v_s_of_set(space, &BitSet::singleton(space.ring.size(), f))
}

pub fn d_s(space: &SpectrumSpace<'_>, ideal: &Ideal) -> BitSet {
    v_s(space, ideal).complement()
}

pub fn d_s_element(space: &SpectrumSpace<'_>, f: Elem) -> BitSet {
    v_s_element(space, f).complement()
}

/// The prime ideal `(P : s_P)` attached to a point.
pub fn witness_colon(point: &SpectrumPoint) -> &Ideal {
    &point.colon_prime
}

/// Primes of `R` disjoint from `S`, standing in for `Spec S⁻¹R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizationSpectrum {
    pub primes: Vec<Ideal>,
    /// `maximal[k]` marks primes that are inclusion-maximal in this family.
    pub maximal: Vec<bool>,
}

impl LocalizationSpectrum {
    pub fn maximal_primes(&self) -> impl Iterator<Item = &Ideal> {
        self.primes
            .iter()
            .zip(&self.maximal)
            .filter_map(|(p, &m)| m.then_some(p))
    }
}

pub fn localization_spec(ring: &FiniteRing, mults: &MultSet) -> LocalizationSpectrum {
    let primes: Vec<Ideal> = all_ideals(ring)
        .into_iter()
        .filter(|p| !mults.meets(p.members()) && is_prime(ring, p))
        .collect();
    let maximal = primes
        .iter()
        .map(|p| !primes.iter().any(|q| q != p && p.is_subset(q)))
        .collect();
    LocalizationSpectrum { primes, maximal }
}

/// `φ_S : Spec_{φ(S)} R' → Spec_S R`, `Q ↦ φ⁻¹(Q)`.
#[derive(Debug, Clone)]
pub struct InducedMap<'r> {
    pub source: SpectrumSpace<'r>,
    pub target: SpectrumSpace<'r>,
    /// `map[q]` is the source point index of the preimage of target point `q`.
    pub map: Vec<usize>,
}

impl InducedMap<'_> {
    /// Target points whose image lies in `source_points`.
    pub fn preimage(&self, source_points: &BitSet) -> BitSet {
        BitSet::from_indices(
            self.target.len(),
            (0..self.target.len()).filter(|&q| source_points.contains(self.map[q])),
        )
    }
}

pub fn induced_map<'r>(phi: &RingMorphism<'r>, mults: &MultSet) -> Result<InducedMap<'r>> {
    let (src, tgt) = (phi.source(), phi.target());
    src.check_width(mults.members(), "multiplicative set")?;
    let image = phi.image(mults.members());
    if image.contains(0) {
        return Err(Error::invalid("0 lies in the image of S"));
    }
    let image_mults = mult_closure(tgt, &image.to_vec())
        .map_err(|e| Error::invalid(format!("image of S is not admissible: {e}")))?;
    let source = spec_s(src, mults)?;
    let target = spec_s(tgt, &image_mults)?;
    let map = target
        .points
        .iter()
        .map(|q| {
            let pre = Ideal::from_members_unchecked(phi.preimage(q.ideal.members()));
            source.index_of(&pre).ok_or_else(|| Error::Counterexample {
                tag: "prop-3.3",
                detail: format!("preimage {pre} of {} is not S-prime", q.ideal),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(InducedMap {
        source,
        target,
        map,
    })
}

/// `φ(I)R'`.
pub fn extended_ideal(phi: &RingMorphism<'_>, ideal: &Ideal) -> Ideal {
    ideal_generated(phi.target(), &phi.image(ideal.members()).to_vec())
        .expect("image elements lie in the target")
}

/// Serialized form of a spectrum point: ideals as sorted member lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointDoc {
    pub ideal: Vec<Elem>,
    pub witnesses: Vec<Elem>,
    pub is_prime: bool,
    pub colon_prime: Vec<Elem>,
}

/// JSON document emitted by `sspec spec --format json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumDoc {
    pub ring: RingDesc,
    /// Members of `S` (not just its generators).
    pub mults: Vec<Elem>,
    pub points: Vec<PointDoc>,
}

impl SpectrumDoc {
    pub fn new(desc: &RingDesc, space: &SpectrumSpace<'_>) -> Self {
        SpectrumDoc {
            ring: desc.clone(),
            mults: space.mults.to_vec(),
            points: space
                .points
                .iter()
                .map(|p| PointDoc {
                    ideal: p.ideal.to_vec(),
                    witnesses: p.witnesses.clone(),
                    is_prime: p.is_prime,
                    colon_prime: p.colon_prime.to_vec(),
                })
                .collect(),
        }
    }

    /// Reassembles the space from the document alone; ideals and `S` are
    /// re-validated against `ring`.
    pub fn rebuild<'r>(&self, ring: &'r FiniteRing) -> Result<SpectrumSpace<'r>> {
        let to_ideal = |members: &[Elem]| {
            ring.check_elements(members)?;
            Ideal::from_members(
                ring,
                BitSet::from_indices(ring.size(), members.iter().copied()),
            )
        };
        ring.check_elements(&self.mults)?;
        let mults = MultSet::from_members(
            ring,
            BitSet::from_indices(ring.size(), self.mults.iter().copied()),
        )?;
        let points = self
            .points
            .iter()
            .map(|p| {
                Ok(SpectrumPoint {
                    ideal: to_ideal(&p.ideal)?,
                    witnesses: p.witnesses.clone(),
                    is_prime: p.is_prime,
                    colon_prime: to_ideal(&p.colon_prime)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SpectrumSpace {
            ring,
            mults,
            points,
        })
    }
}

//! Ideals, multiplicative sets and the S-radical.

use std::collections::BTreeSet;
use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};

/// An ideal stored as its dense membership set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    members: BitSet,
}

impl Ideal {
    /// Wraps a membership set after checking the ideal axioms.
    pub fn from_members(ring: &FiniteRing, members: BitSet) -> Result<Self> {
        ring.check_width(&members, "ideal")?;
        if !is_ideal(ring, &members) {
            return Err(Error::invalid(format!("{members} is not an ideal")));
        }
        Ok(Ideal { members })
    }

    pub(crate) fn from_members_unchecked(members: BitSet) -> Self {
        Ideal { members }
    }

    pub fn zero(ring: &FiniteRing) -> Self {
        Ideal {
            members: BitSet::singleton(ring.size(), 0),
        }
    }

    pub fn whole(ring: &FiniteRing) -> Self {
        Ideal {
            members: BitSet::full(ring.size()),
        }
    }

    /// `(a) = R·a`.
    pub fn principal(ring: &FiniteRing, a: Elem) -> Self {
        Ideal {
            members: BitSet::from_indices(ring.size(), ring.elements().map(|r| ring.mul(r, a))),
        }
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members.contains(a)
    }

    pub fn cardinality(&self) -> usize {
        self.members.count()
    }

    pub fn is_whole(&self) -> bool {
        self.members.is_full()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.members.to_vec()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.members.fmt(f)
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{}", self.members)
    }
}

/// True iff `set` contains 0 and is closed under addition and absorbs multiplication.
pub fn is_ideal(ring: &FiniteRing, set: &BitSet) -> bool {
    if !set.contains(0) {
        return false;
    }
    let members = set.to_vec();
    members.iter().all(|&a| {
        members.iter().all(|&b| set.contains(ring.add(a, b)))
            && ring.elements().all(|r| set.contains(ring.mul(r, a)))
    })
}

/// Least additively closed superset of `seed ∪ {0}`.
fn additive_closure(ring: &FiniteRing, seed: BitSet) -> BitSet {
    let mut set = seed;
    set.insert(0);
    let mut frontier = set.to_vec();
    while let Some(x) = frontier.pop() {
        let current = set.to_vec();
        for y in current {
            let z = ring.add(x, y);
            if set.insert(z) {
                frontier.push(z);
            }
        }
    }
    set
}

/// The least ideal containing `gens`.
pub fn ideal_generated(ring: &FiniteRing, gens: &[Elem]) -> Result<Ideal> {
    ring.check_elements(gens)?;
    let seed = BitSet::from_indices(
        ring.size(),
        gens.iter()
            .flat_map(|&g| ring.elements().map(move |r| (r, g)))
            .map(|(r, g)| ring.mul(r, g)),
    );
    Ok(Ideal {
        members: additive_closure(ring, seed),
    })
}

fn check_pair(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<()> {
    ring.check_width(&i.members, "left ideal")?;
    ring.check_width(&j.members, "right ideal")
}

/// `I + J`.
pub fn ideal_sum(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<Ideal> {
    check_pair(ring, i, j)?;
    Ok(sum_unchecked(ring, i, j))
}

fn sum_unchecked(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Ideal {
    let members = BitSet::from_indices(
        ring.size(),
        i.members
            .iter()
            .flat_map(|a| j.members.iter().map(move |b| (a, b)))
            .map(|(a, b)| ring.add(a, b)),
    );
    Ideal { members }
}

/// `IJ`, generated by all pairwise products.
pub fn ideal_product(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<Ideal> {
    check_pair(ring, i, j)?;
    let products = BitSet::from_indices(
        ring.size(),
        i.members
            .iter()
            .flat_map(|a| j.members.iter().map(move |b| (a, b)))
            .map(|(a, b)| ring.mul(a, b)),
    );
    // products of ideals are already absorbing; only sums are missing
    Ok(Ideal {
        members: additive_closure(ring, products),
    })
}

pub fn ideal_intersect(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<Ideal> {
    check_pair(ring, i, j)?;
    Ok(Ideal {
        members: i.members.intersection(&j.members),
    })
}

/// `(I : s) = { a : s·a ∈ I }`.
pub fn colon(ring: &FiniteRing, i: &Ideal, s: Elem) -> Ideal {
    Ideal {
        members: BitSet::from_indices(
            ring.size(),
            ring.elements().filter(|&a| i.contains(ring.mul(s, a))),
        ),
    }
}

/// Every ideal of `ring` in canonical order (cardinality, then membership vector).
///
/// Starts from the principal ideals and closes under pairwise sums; every
/// ideal of a finite ring is a finite sum of principal ones.
pub fn all_ideals(ring: &FiniteRing) -> Vec<Ideal> {
    let mut found: BTreeSet<Ideal> = ring.elements().map(|a| Ideal::principal(ring, a)).collect();
    let mut frontier: Vec<Ideal> = found.iter().cloned().collect();
    let principals = frontier.clone();
    while let Some(i) = frontier.pop() {
        for p in &principals {
            let s = sum_unchecked(ring, &i, p);
            if !found.contains(&s) {
                found.insert(s.clone());
                frontier.push(s);
            }
        }
    }
    found.insert(Ideal::zero(ring));
    found.into_iter().collect()
}

/// A multiplicatively closed subset: contains 1, misses 0, closed under products.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultSet {
    members: BitSet,
}

impl MultSet {
    pub fn from_members(ring: &FiniteRing, members: BitSet) -> Result<Self> {
        ring.check_width(&members, "multiplicative set")?;
        if !members.contains(ring.one()) {
            return Err(Error::InvalidMultSet("1 is missing".into()));
        }
        if members.contains(0) {
            return Err(Error::InvalidMultSet("0 is a member".into()));
        }
        for a in members.iter() {
            for b in members.iter() {
                if !members.contains(ring.mul(a, b)) {
                    return Err(Error::InvalidMultSet(format!(
                        "{a}·{b} = {} is missing",
                        ring.mul(a, b)
                    )));
                }
            }
        }
        Ok(MultSet { members })
    }

    /// `{1}`.
    pub fn trivial(ring: &FiniteRing) -> Self {
        MultSet {
            members: BitSet::singleton(ring.size(), ring.one()),
        }
    }

    /// The full unit group.
    pub fn units(ring: &FiniteRing) -> Self {
        MultSet {
            members: ring.units(),
        }
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members.contains(a)
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.iter()
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.members.to_vec()
    }

    pub fn meets(&self, set: &BitSet) -> bool {
        !self.members.is_disjoint(set)
    }

    /// True iff every member is a unit.
    pub fn within_units(&self, ring: &FiniteRing) -> bool {
        self.members.is_subset(&ring.units())
    }
}

impl fmt::Debug for MultSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultSet{}", self.members)
    }
}

/// Least multiplicatively closed set containing `gens` and 1. Fails if the
/// closure reaches 0.
pub fn mult_closure(ring: &FiniteRing, gens: &[Elem]) -> Result<MultSet> {
    ring.check_elements(gens)?;
    let mut set = BitSet::from_indices(ring.size(), gens.iter().copied());
    let mut frontier = set.to_vec();
    while let Some(x) = frontier.pop() {
        for y in set.to_vec() {
            let z = ring.mul(x, y);
            if set.insert(z) {
                frontier.push(z);
            }
        }
    }
    if set.contains(0) {
        return Err(Error::InvalidMultSet(format!(
            "generators {gens:?} multiply to 0"
        )));
    }
    set.insert(ring.one());
    Ok(MultSet { members: set })
}

/// Distinct powers `a, a^2, ...` up to the point where the sequence cycles.
pub fn powers(ring: &FiniteRing, a: Elem) -> Vec<Elem> {
    let mut seen = BitSet::new(ring.size());
    let mut out = Vec::new();
    let mut p = a;
    while seen.insert(p) {
        out.push(p);
        p = ring.mul(p, a);
    }
    out
}

/// `{ a : s·a^n ∈ I for some s ∈ S, n ≥ 1 }`.
pub fn s_radical(ring: &FiniteRing, mults: &MultSet, i: &Ideal) -> Ideal {
    let members = BitSet::from_indices(
        ring.size(),
        ring.elements().filter(|&a| {
            powers(ring, a)
                .into_iter()
                .any(|p| mults.iter().any(|s| i.contains(ring.mul(s, p))))
        }),
    );
    Ideal { members }
}

/// The ordinary nilradical-style radical `√I`.
pub fn radical(ring: &FiniteRing, i: &Ideal) -> Ideal {
    s_radical(ring, &MultSet::trivial(ring), i)
}

pub fn is_s_radical_ideal(ring: &FiniteRing, mults: &MultSet, i: &Ideal) -> bool {
    s_radical(ring, mults, i) == *i
}

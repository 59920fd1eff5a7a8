//! Explicit finite topologies on `Spec_S R`.
//!
//! A topology is stored as its complete family of open sets. Carriers are
//! small, so every topological notion used here (closure, irreducibility,
//! components, T0) reduces to exact set algebra over that family.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::ideal::{all_ideals, s_radical, Ideal};
use crate::ring::Elem;
use crate::spectrum::{d_s_element, scaled_subset, v_s, v_s_element, SpectrumSpace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TopologyKind {
    SZariski,
    SFlat,
    Derived,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTopology {
    point_count: usize,
    /// Canonically ordered, deduplicated, contains ∅ and the full set.
    opens: Vec<BitSet>,
    kind: TopologyKind,
}

impl FiniteTopology {
    /// Accepts an explicit open family after checking the topology axioms.
    pub fn from_opens(point_count: usize, opens: &[BitSet], kind: TopologyKind) -> Result<Self> {
        if let Some(bad) = opens.iter().find(|u| u.universe() != point_count) {
            return Err(Error::invalid(format!(
                "open set {bad} is not over {point_count} points"
            )));
        }
        let family: BTreeSet<BitSet> = opens.iter().cloned().collect();
        if !family.contains(&BitSet::new(point_count))
            || !family.contains(&BitSet::full(point_count))
        {
            return Err(Error::invalid(
                "open family must contain the empty and full sets",
            ));
        }
        for u in &family {
            for v in &family {
                if !family.contains(&u.union(v)) || !family.contains(&u.intersection(v)) {
                    return Err(Error::invalid(format!(
                        "open family not closed under union/intersection at {u}, {v}"
                    )));
                }
            }
        }
        Ok(FiniteTopology {
            point_count,
            opens: family.into_iter().collect(),
            kind,
        })
    }

    pub fn point_count(&self) -> usize {
        self.point_count
    }

    pub fn kind(&self) -> TopologyKind {
        self.kind
    }

    pub fn opens(&self) -> &[BitSet] {
        &self.opens
    }

    /// Complements of the opens, canonically ordered.
    pub fn closed_sets(&self) -> Vec<BitSet> {
        let mut closed: Vec<BitSet> = self.opens.iter().map(BitSet::complement).collect();
        closed.sort();
        closed
    }

    pub fn is_open(&self, set: &BitSet) -> bool {
        self.opens.binary_search(set).is_ok()
    }

    pub fn is_closed(&self, set: &BitSet) -> bool {
        self.is_open(&set.complement())
    }

    pub fn full(&self) -> BitSet {
        BitSet::full(self.point_count)
    }
}

/// Worklist closure of `seed` under `op(x, g)` for `g` in `generators`.
fn close_family(
    seed: impl IntoIterator<Item = BitSet>,
    generators: &[BitSet],
    op: impl Fn(&BitSet, &BitSet) -> BitSet,
) -> HashSet<BitSet> {
    let mut family: HashSet<BitSet> = HashSet::new();
    let mut frontier = Vec::new();
    for s in seed {
        if family.insert(s.clone()) {
            frontier.push(s);
        }
    }
    while let Some(x) = frontier.pop() {
        for g in generators {
            let y = op(&x, g);
            if family.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    family
}

/// The topology generated by `subbasis` as open sets.
///
/// Finite intersections of sub-basic sets (plus the full set) give a basis;
/// unions of basis sets (plus ∅) give the opens.
pub fn topology_from_open_subbasis(
    point_count: usize,
    subbasis: &[BitSet],
    kind: TopologyKind,
) -> FiniteTopology {
    let full = BitSet::full(point_count);
    let mut gens: Vec<BitSet> = subbasis
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    gens.push(full.clone());
    let basis = close_family(gens.iter().cloned(), &gens, BitSet::intersection);
    let basis: Vec<BitSet> = basis
        .into_iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let seed = basis
        .iter()
        .cloned()
        .chain(std::iter::once(BitSet::new(point_count)));
    let opens = close_family(seed, &basis, BitSet::union);
    let mut opens: Vec<BitSet> = opens.into_iter().collect();
    opens.sort();
    FiniteTopology {
        point_count,
        opens,
        kind,
    }
}

/// The S-varieties of every ideal, in canonical ideal order.
pub(crate) fn varieties(space: &SpectrumSpace<'_>) -> Vec<(Ideal, BitSet)> {
    all_ideals(space.ring())
        .into_iter()
        .map(|i| {
            let v = v_s(space, &i);
            (i, v)
        })
        .collect()
}

/// Closed sets are the `V_S(I)`; fails only if they do not form a topology.
pub fn s_zariski_topology(space: &SpectrumSpace<'_>) -> Result<FiniteTopology> {
    let opens: Vec<BitSet> = varieties(space)
        .into_iter()
        .map(|(_, v)| v.complement())
        .collect();
    FiniteTopology::from_opens(space.len(), &opens, TopologyKind::SZariski).map_err(|e| {
        Error::Counterexample {
            tag: "thm-2.1",
            detail: format!("S-varieties do not form the closed sets of a topology: {e}"),
        }
    })
}

/// Opens generated by the sub-basis `{ V_S(f) : f ∈ R }`.
pub fn s_flat_topology(space: &SpectrumSpace<'_>) -> FiniteTopology {
    let subbasis: Vec<BitSet> = space
        .ring()
        .elements()
        .map(|f| v_s_element(space, f))
        .collect();
    topology_from_open_subbasis(space.len(), &subbasis, TopologyKind::SFlat)
}

/// Smallest closed superset of `set`.
pub fn closure(topology: &FiniteTopology, set: &BitSet) -> BitSet {
    topology
        .opens
        .iter()
        .filter(|u| u.is_disjoint(set))
        .fold(BitSet::new(topology.point_count), |acc, u| acc.union(u))
        .complement()
}

pub fn point_closure(topology: &FiniteTopology, point: usize) -> BitSet {
    closure(topology, &BitSet::singleton(topology.point_count, point))
}

/// `Λ(P) = { Q : s·Q ⊆ P for some s ∈ S }`, straight from the formula.
pub fn lambda_closure(space: &SpectrumSpace<'_>, point: usize) -> BitSet {
    let ring = space.ring();
    let p = space.point(point).ideal.members();
    BitSet::from_indices(
        space.len(),
        (0..space.len()).filter(|&q| {
            let q = space.point(q).ideal.members();
            space.mults().iter().any(|s| scaled_subset(ring, s, q, p))
        }),
    )
}

fn require_closed(topology: &FiniteTopology, set: &BitSet) -> Result<()> {
    if set.universe() != topology.point_count || !topology.is_closed(set) {
        return Err(Error::invalid(format!("{set} is not a closed set")));
    }
    Ok(())
}

/// Nonempty and not the union of two closed proper subsets.
pub fn is_irreducible(topology: &FiniteTopology, set: &BitSet) -> Result<bool> {
    require_closed(topology, set)?;
    Ok(irreducible_unchecked(topology, set))
}

fn irreducible_unchecked(topology: &FiniteTopology, set: &BitSet) -> bool {
    if set.is_empty() {
        return false;
    }
    let proper: Vec<BitSet> = topology
        .closed_sets()
        .into_iter()
        .filter(|c| c.is_subset(set) && c != set)
        .collect();
    !proper
        .iter()
        .enumerate()
        .any(|(i, a)| proper[i..].iter().any(|b| a.union(b) == *set))
}

pub fn irreducible_closed_sets(topology: &FiniteTopology) -> Vec<BitSet> {
    topology
        .closed_sets()
        .into_iter()
        .filter(|c| irreducible_unchecked(topology, c))
        .collect()
}

/// Maximal irreducible closed sets.
pub fn irreducible_components(topology: &FiniteTopology) -> Vec<BitSet> {
    let irr = irreducible_closed_sets(topology);
    irr.iter()
        .filter(|c| !irr.iter().any(|d| d != *c && c.is_subset(d)))
        .cloned()
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericPoints {
    /// Every point whose closure is the whole set.
    pub points: BitSet,
    /// The unique prime ideal among them, reached through the witness colon.
    pub prime_representative: usize,
}

pub fn generic_points(
    space: &SpectrumSpace<'_>,
    topology: &FiniteTopology,
    set: &BitSet,
) -> Result<GenericPoints> {
    if !is_irreducible(topology, set)? {
        return Err(Error::invalid(format!("{set} is not irreducible")));
    }
    let points = BitSet::from_indices(
        space.len(),
        set.iter().filter(|&p| point_closure(topology, p) == *set),
    );
    let Some(first) = points.first() else {
        return Err(Error::Counterexample {
            tag: "thm-4.5",
            detail: format!("irreducible closed set {set} has no generic point"),
        });
    };
    let colon_prime = &space.point(first).colon_prime;
    match space.index_of(colon_prime) {
        Some(rep) if points.contains(rep) => Ok(GenericPoints {
            points,
            prime_representative: rep,
        }),
        _ => Err(Error::Counterexample {
            tag: "lemma-4.6",
            detail: format!(
                "colon prime {colon_prime} of generic point {} is not itself generic for {set}",
                space.point(first).ideal
            ),
        }),
    }
}

/// Partition of the points into connected components, ordered by least member.
pub fn connected_components(topology: &FiniteTopology) -> Vec<BitSet> {
    let clopens: Vec<&BitSet> = topology
        .opens
        .iter()
        .filter(|u| topology.is_closed(u))
        .collect();
    let mut assigned = BitSet::new(topology.point_count);
    let mut parts = Vec::new();
    for p in 0..topology.point_count {
        if assigned.contains(p) {
            continue;
        }
        let part = clopens
            .iter()
            .filter(|u| u.contains(p))
            .fold(topology.full(), |acc, u| acc.intersection(u));
        assigned = assigned.union(&part);
        parts.push(part);
    }
    parts
}

/// First `(f1, f2)` in element order with `V_S(f1) = C1`, `V_S(f2) = C2`,
/// `f1 + f2 ∈ S` and `f1·f2 ∈ √[S](0)`.
pub fn find_clopen_certificate(
    space: &SpectrumSpace<'_>,
    first: &BitSet,
    second: &BitSet,
) -> Option<(Elem, Elem)> {
    let ring = space.ring();
    let mults = space.mults();
    let nil = s_radical(ring, mults, &Ideal::zero(ring));
    let vars: Vec<BitSet> = ring.elements().map(|f| v_s_element(space, f)).collect();
    let lefts: Vec<Elem> = ring.elements().filter(|&f| vars[f] == *first).collect();
    let rights: Vec<Elem> = ring.elements().filter(|&f| vars[f] == *second).collect();
    lefts.iter().find_map(|&f1| {
        rights
            .iter()
            .find(|&&f2| mults.contains(ring.add(f1, f2)) && nil.contains(ring.mul(f1, f2)))
            .map(|&f2| (f1, f2))
    })
}

/// Certificate for a partition of `Spec_S R` into two S-Zariski closed sets.
pub fn clopen_certificate(
    space: &SpectrumSpace<'_>,
    first: &BitSet,
    second: &BitSet,
) -> Result<(Elem, Elem)> {
    let n = space.len();
    if first.universe() != n || second.universe() != n {
        return Err(Error::invalid("point sets are over the wrong spectrum"));
    }
    if !first.is_disjoint(second) || !first.union(second).is_full() {
        return Err(Error::invalid(format!(
            "{first} and {second} do not partition the spectrum"
        )));
    }
    let closed: HashSet<BitSet> = varieties(space).into_iter().map(|(_, v)| v).collect();
    if !closed.contains(first) || !closed.contains(second) {
        return Err(Error::invalid(format!(
            "{first} and {second} are not both S-Zariski closed"
        )));
    }
    find_clopen_certificate(space, first, second).ok_or_else(|| Error::Counterexample {
        tag: "thm-5.1",
        detail: format!("no certificate for the clopen partition {first} | {second}"),
    })
}

/// Distinct points have distinct closures.
pub fn is_t0(topology: &FiniteTopology) -> bool {
    let closures: HashSet<BitSet> = (0..topology.point_count)
        .map(|p| point_closure(topology, p))
        .collect();
    closures.len() == topology.point_count
}

/// For each S-flat open, the first ideal in canonical order whose S-variety it is.
pub fn flat_opens_as_varieties(
    space: &SpectrumSpace<'_>,
    flat: &FiniteTopology,
) -> Result<Vec<(BitSet, Ideal)>> {
    let vars = varieties(space);
    flat.opens
        .iter()
        .map(|u| {
            vars.iter()
                .find(|(_, v)| v == u)
                .map(|(i, _)| (u.clone(), i.clone()))
                .ok_or_else(|| Error::Counterexample {
                    tag: "cor-4.3-finite",
                    detail: format!("S-flat open {u} is not an S-variety"),
                })
        })
        .collect()
}

/// The four noetherian conditions, each evaluated on its own terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NoetherianReport {
    /// Length of the longest strictly descending chain of S-flat closed sets.
    pub longest_closed_chain: usize,
    /// Every strictly descending chain of S-flat closed sets is finite.
    pub flat_noetherian: bool,
    /// Every S-flat open is some `V_S(I)`.
    pub opens_are_varieties: bool,
    /// For each prime point: the first `f` with `Λ(P) = D_S(f)`, if any.
    pub lambda_witnesses: Vec<(usize, Option<Elem>)>,
    /// Arbitrary intersections of S-Zariski opens are S-Zariski open.
    pub zariski_intersections_open: bool,
}

impl NoetherianReport {
    pub fn conditions(&self) -> [bool; 4] {
        [
            self.flat_noetherian,
            self.opens_are_varieties,
            self.lambda_witnesses.iter().all(|(_, f)| f.is_some()),
            self.zariski_intersections_open,
        ]
    }

    pub fn agree(&self) -> bool {
        let c = self.conditions();
        c.iter().all(|&x| x == c[0])
    }

    pub fn all_hold(&self) -> bool {
        self.conditions().iter().all(|&x| x)
    }
}

pub fn noetherian_report(space: &SpectrumSpace<'_>) -> Result<NoetherianReport> {
    let flat = s_flat_topology(space);
    let zariski = s_zariski_topology(space)?;

    // (1) descending chains: longest[c] = 1 + max over closed proper subsets
    let closed = flat.closed_sets();
    let mut longest = vec![1usize; closed.len()];
    for i in 0..closed.len() {
        for j in 0..i {
            if closed[j].is_subset(&closed[i]) && closed[j] != closed[i] {
                longest[i] = longest[i].max(longest[j] + 1);
            }
        }
    }
    let longest_closed_chain = longest.iter().copied().max().unwrap_or(0);
    let flat_noetherian = longest_closed_chain <= closed.len();

    // (2)
    let opens_are_varieties = flat_opens_as_varieties(space, &flat).is_ok();

    // (3)
    let ring = space.ring();
    let lambda_witnesses = space
        .prime_points()
        .into_iter()
        .map(|p| {
            let lambda = lambda_closure(space, p);
            (
                p,
                ring.elements().find(|&f| d_s_element(space, f) == lambda),
            )
        })
        .collect();

    // (4) pairwise, whole family, and the minimal neighbourhood of each point
    let opens = zariski.opens();
    let pairwise = opens
        .iter()
        .all(|u| opens.iter().all(|v| zariski.is_open(&u.intersection(v))));
    let whole = zariski.is_open(
        &opens
            .iter()
            .fold(zariski.full(), |acc, u| acc.intersection(u)),
    );
    let neighbourhoods = (0..space.len()).all(|p| {
        let nbhd = opens
            .iter()
            .filter(|u| u.contains(p))
            .fold(zariski.full(), |acc, u| acc.intersection(u));
        zariski.is_open(&nbhd)
    });

    Ok(NoetherianReport {
        longest_closed_chain,
        flat_noetherian,
        opens_are_varieties,
        lambda_witnesses,
        zariski_intersections_open: pairwise && whole && neighbourhoods,
    })
}

/// Specialization graph: `Q -> P` when `Q` lies in the closure of `P`.
///
/// Points with equal closures form cycles in index order; between classes only
/// covering edges are kept, drawn between the least members of each class.
pub fn specialization_dot(space: &SpectrumSpace<'_>, topology: &FiniteTopology) -> String {
    let n = space.len();
    let closures: Vec<BitSet> = (0..n).map(|p| point_closure(topology, p)).collect();
    let below = |q: usize, p: usize| closures[p].contains(q);

    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for p in 0..n {
        if class_of[p] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (p..n).filter(|&q| below(q, p) && below(p, q)).collect();
        for &q in &members {
            class_of[q] = classes.len();
        }
        classes.push(members);
    }

    let mut edges: Vec<(usize, usize)> = Vec::new();
    for members in &classes {
        if members.len() > 1 {
            for (k, &a) in members.iter().enumerate() {
                edges.push((a, members[(k + 1) % members.len()]));
            }
        }
    }
    let reps: Vec<usize> = classes.iter().map(|m| m[0]).collect();
    let strictly_below = |x: usize, y: usize| x != y && below(reps[x], reps[y]);
    for x in 0..classes.len() {
        for y in 0..classes.len() {
            if strictly_below(x, y)
                && !(0..classes.len()).any(|z| strictly_below(x, z) && strictly_below(z, y))
            {
                edges.push((reps[x], reps[y]));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();

    let mut out = String::from("digraph specialization {\n");
    for (p, point) in space.points().iter().enumerate() {
        let _ = writeln!(out, "  n{p} [label=\"{}\"];", point.ideal);
    }
    for (q, p) in edges {
        let _ = writeln!(out, "  n{q} -> n{p};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{ideal_generated, mult_closure, MultSet};
    use crate::ring::FiniteRing;
    use crate::spectrum::spec_s;

    fn set(n: usize, xs: &[usize]) -> BitSet {
        BitSet::from_indices(n, xs.iter().copied())
    }

    #[test]
    fn subbasis_closure_examples() {
        let indiscrete = topology_from_open_subbasis(3, &[], TopologyKind::Derived);
        assert_eq!(indiscrete.opens(), &[BitSet::new(3), BitSet::full(3)]);

        let singles: Vec<BitSet> = (0..3).map(|i| BitSet::singleton(3, i)).collect();
        let discrete = topology_from_open_subbasis(3, &singles, TopologyKind::Derived);
        assert_eq!(discrete.opens().len(), 8);

        let t = topology_from_open_subbasis(
            3,
            &[set(3, &[0, 1]), set(3, &[1, 2])],
            TopologyKind::Derived,
        );
        let want = vec![
            set(3, &[]),
            set(3, &[1]),
            set(3, &[1, 2]),
            set(3, &[0, 1]),
            set(3, &[0, 1, 2]),
        ];
        assert_eq!(t.opens(), want.as_slice());
        FiniteTopology::from_opens(3, t.opens(), TopologyKind::Derived).unwrap();
    }

    #[test]
    fn from_opens_rejects_non_topologies() {
        let bad = [BitSet::new(3), set(3, &[0]), set(3, &[1]), BitSet::full(3)];
        assert!(FiniteTopology::from_opens(3, &bad, TopologyKind::Derived).is_err());
    }

    fn z12_space(ring: &FiniteRing) -> SpectrumSpace<'_> {
        spec_s(ring, &mult_closure(ring, &[3]).unwrap()).unwrap()
    }

    fn z6_space(ring: &FiniteRing) -> SpectrumSpace<'_> {
        spec_s(ring, &MultSet::trivial(ring)).unwrap()
    }

    #[test]
    fn topologies_of_worked_spaces() {
        let z12 = FiniteRing::zn(12).unwrap();
        let sp = z12_space(&z12);
        let zar = s_zariski_topology(&sp).unwrap();
        let flat = s_flat_topology(&sp);
        assert_eq!(zar.opens(), &[BitSet::new(2), BitSet::full(2)]);
        assert_eq!(flat.opens(), &[BitSet::new(2), BitSet::full(2)]);

        let z6 = FiniteRing::zn(6).unwrap();
        let sp6 = z6_space(&z6);
        assert_eq!(s_zariski_topology(&sp6).unwrap().opens().len(), 4);
        assert_eq!(s_flat_topology(&sp6).opens().len(), 4);

        let f4 = FiniteRing::poly_quotient(2, &[1, 1, 1]).unwrap();
        let spf = z6_space(&f4);
        assert_eq!(s_flat_topology(&spf).opens().len(), 2);
    }

    #[test]
    fn closure_and_lambda() {
        let z6 = FiniteRing::zn(6).unwrap();
        let sp6 = z6_space(&z6);
        let flat = s_flat_topology(&sp6);
        // point 1 is (2)
        assert_eq!(closure(&flat, &set(2, &[1])), set(2, &[1]));
        assert_eq!(lambda_closure(&sp6, 1), set(2, &[1]));

        let indiscrete = topology_from_open_subbasis(4, &[], TopologyKind::Derived);
        assert!(closure(&indiscrete, &set(4, &[2])).is_full());

        let z12 = FiniteRing::zn(12).unwrap();
        let sp = z12_space(&z12);
        assert!(lambda_closure(&sp, 0).is_full());
        assert!(lambda_closure(&sp, 1).is_full());
    }

    #[test]
    fn irreducibility_and_generic_points() {
        let z6 = FiniteRing::zn(6).unwrap();
        let sp6 = z6_space(&z6);
        let flat = s_flat_topology(&sp6);
        assert!(is_irreducible(&flat, &set(2, &[0])).unwrap());
        assert!(!is_irreducible(&flat, &BitSet::full(2)).unwrap());
        let g = generic_points(&sp6, &flat, &set(2, &[0])).unwrap();
        assert_eq!(g.points, set(2, &[0]));
        assert!(generic_points(&sp6, &flat, &BitSet::full(2)).is_err());

        let z12 = FiniteRing::zn(12).unwrap();
        let sp = z12_space(&z12);
        let flat12 = s_flat_topology(&sp);
        assert!(is_irreducible(&flat12, &BitSet::full(2)).unwrap());
        let g = generic_points(&sp, &flat12, &BitSet::full(2)).unwrap();
        assert!(g.points.is_full());
        // prime representative is (2), point 1
        assert_eq!(g.prime_representative, 1);

        let not_closed = topology_from_open_subbasis(2, &[set(2, &[0])], TopologyKind::Derived);
        assert!(is_irreducible(&not_closed, &set(2, &[0])).is_err());
    }

    #[test]
    fn components() {
        let z6 = FiniteRing::zn(6).unwrap();
        let flat6 = s_flat_topology(&z6_space(&z6));
        // canonical order puts {1} before {0}
        assert_eq!(
            irreducible_components(&flat6),
            vec![set(2, &[1]), set(2, &[0])]
        );
        assert_eq!(
            connected_components(&flat6),
            vec![set(2, &[0]), set(2, &[1])]
        );

        let z12 = FiniteRing::zn(12).unwrap();
        let sp = z12_space(&z12);
        let flat12 = s_flat_topology(&sp);
        assert_eq!(irreducible_components(&flat12), vec![BitSet::full(2)]);
        assert_eq!(connected_components(&flat12), vec![BitSet::full(2)]);
        assert_eq!(
            connected_components(&s_zariski_topology(&sp).unwrap()),
            vec![BitSet::full(2)]
        );

        let one = topology_from_open_subbasis(1, &[], TopologyKind::Derived);
        assert_eq!(connected_components(&one).len(), 1);
        assert!(is_t0(&one));
    }

    #[test]
    fn certificates() {
        let z6 = FiniteRing::zn(6).unwrap();
        let sp6 = z6_space(&z6);
        // point 0 = (3), point 1 = (2)
        assert_eq!(
            clopen_certificate(&sp6, &set(2, &[0]), &set(2, &[1])).unwrap(),
            (3, 4)
        );
        assert_eq!(
            clopen_certificate(&sp6, &BitSet::full(2), &BitSet::new(2)).unwrap(),
            (0, 1)
        );
        assert!(clopen_certificate(&sp6, &set(2, &[0]), &set(2, &[0])).is_err());

        let z12 = FiniteRing::zn(12).unwrap();
        let sp = z12_space(&z12);
        assert!(matches!(
            clopen_certificate(&sp, &set(2, &[0]), &set(2, &[1])),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn t0_examples() {
        let z12 = FiniteRing::zn(12).unwrap();
        assert!(!is_t0(&s_flat_topology(&z12_space(&z12))));
        let z6 = FiniteRing::zn(6).unwrap();
        assert!(is_t0(&s_flat_topology(&z6_space(&z6))));
    }

    #[test]
    fn flat_opens_examples() {
        let z12 = FiniteRing::zn(12).unwrap();
        let sp = z12_space(&z12);
        let got = flat_opens_as_varieties(&sp, &s_flat_topology(&sp)).unwrap();
        assert_eq!(got.len(), 2);
        // (3) already meets S, and precedes (1) in lattice order
        assert_eq!(
            got[0],
            (BitSet::new(2), ideal_generated(&z12, &[3]).unwrap())
        );
        assert_eq!(got[1], (BitSet::full(2), Ideal::zero(&z12)));

        let z6 = FiniteRing::zn(6).unwrap();
        let sp6 = z6_space(&z6);
        let got = flat_opens_as_varieties(&sp6, &s_flat_topology(&sp6)).unwrap();
        let ideal = |g| ideal_generated(&z6, &[g]).unwrap();
        assert_eq!(
            got,
            vec![
                (BitSet::new(2), ideal(1)),
                (set(2, &[1]), ideal(4)),
                (set(2, &[0]), ideal(3)),
                (BitSet::full(2), ideal(0)),
            ]
        );
    }

    #[test]
    fn noetherian_examples() {
        let z12 = FiniteRing::zn(12).unwrap();
        let sp = z12_space(&z12);
        let rep = noetherian_report(&sp).unwrap();
        assert!(rep.all_hold() && rep.agree());
        let (p, f) = rep.lambda_witnesses[0];
        assert_eq!(p, 1);
        assert_eq!(d_s_element(&sp, f.unwrap()), lambda_closure(&sp, 1));
        assert!(d_s_element(&sp, 3).is_full());

        let z6 = FiniteRing::zn(6).unwrap();
        let sp6 = z6_space(&z6);
        let rep = noetherian_report(&sp6).unwrap();
        assert!(rep.all_hold());
        assert_eq!(rep.lambda_witnesses, vec![(0, Some(2)), (1, Some(3))]);
    }

    #[test]
    fn dot_output() {
        let z12 = FiniteRing::zn(12).unwrap();
        let sp = z12_space(&z12);
        let dot = specialization_dot(&sp, &s_flat_topology(&sp));
        assert_eq!(
            dot,
            "digraph specialization {\n  n0 [label=\"{0,6}\"];\n  n1 [label=\"{0,2,4,6,8,10}\"];\n  n0 -> n1;\n  n1 -> n0;\n}\n"
        );

        let z6 = FiniteRing::zn(6).unwrap();
        let sp6 = z6_space(&z6);
        let dot6 = specialization_dot(&sp6, &s_flat_topology(&sp6));
        assert!(!dot6.contains("->"));
    }

    #[test]
    fn dot_chain_single_edge() {
        // Sierpinski-like: opens {}, {1}, {0,1}: closure{1} = {0,1}, closure{0} = {0}
        let z6 = FiniteRing::zn(6).unwrap();
        let sp6 = z6_space(&z6);
        let t = topology_from_open_subbasis(2, &[set(2, &[1])], TopologyKind::Derived);
        let dot = specialization_dot(&sp6, &t);
        assert!(dot.contains("n0 -> n1;"));
        assert_eq!(dot.matches("->").count(), 1);
    }
}

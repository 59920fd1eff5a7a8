//! Finite commutative rings with identity, given by Cayley tables.
//!
//! Elements are dense indices `0..n` with the additive identity pinned at 0.
//! Everything downstream reads the ring only through [`FiniteRing::add`],
//! [`FiniteRing::mul`] and friends.

use crate::bitset::BitSet;
use crate::error::{Error, Result};

pub type Elem = usize;

/// Size limits applied by constructors and searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest ring any constructor will build.
    pub ring_size: usize,
    /// Largest source ring for morphism enumeration.
    pub morphism_source: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            ring_size: 64,
            morphism_source: 16,
        }
    }
}

impl Caps {
    fn check_ring(&self, size: usize) -> Result<()> {
        if size > self.ring_size {
            return Err(Error::Capacity {
                what: "ring",
                size,
                cap: self.ring_size,
            });
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteRing {
    n: usize,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    one: Elem,
}

impl std::fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteRing")
            .field("size", &self.n)
            .field("one", &self.one)
            .finish_non_exhaustive()
    }
}

impl FiniteRing {
    /// Builds from flat tables without checking axioms. Callers validate.
    fn from_flat(n: usize, add: Vec<Elem>, mul: Vec<Elem>, one: Elem) -> Self {
        let neg = (0..n)
            .map(|a| (0..n).find(|&b| add[a * n + b] == 0).unwrap_or(0))
            .collect();
        FiniteRing {
            n,
            add,
            mul,
            neg,
            one,
        }
    }

    /// `Z/nZ`.
    pub fn zn(n: usize) -> Result<Self> {
        Self::zn_with_caps(n, &Caps::default())
    }

    pub fn zn_with_caps(n: usize, caps: &Caps) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid(format!("Z/n needs n >= 2, got {n}")));
        }
        caps.check_ring(n)?;
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                add.push((a + b) % n);
                mul.push((a * b) % n);
            }
        }
        Ok(Self::from_flat(n, add, mul, 1))
    }

    /// Componentwise product. Index of a tuple is its mixed-radix value with
    /// factor 0 most significant.
    pub fn product(factors: &[FiniteRing]) -> Result<Self> {
        Self::product_with_caps(factors, &Caps::default())
    }

    pub fn product_with_caps(factors: &[FiniteRing], caps: &Caps) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::invalid("product needs at least one factor"));
        }
        let n = factors
            .iter()
            .try_fold(1usize, |acc, f| acc.checked_mul(f.size()))
            .unwrap_or(usize::MAX);
        caps.check_ring(n)?;
        let radices: Vec<usize> = factors.iter().map(FiniteRing::size).collect();
        let tuples: Vec<Vec<Elem>> = (0..n).map(|i| decode_mixed(i, &radices)).collect();
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for ta in &tuples {
            for tb in &tuples {
                let s: Vec<Elem> = factors
                    .iter()
                    .zip(ta.iter().zip(tb))
                    .map(|(f, (&x, &y))| f.add(x, y))
                    .collect();
                let p: Vec<Elem> = factors
                    .iter()
                    .zip(ta.iter().zip(tb))
                    .map(|(f, (&x, &y))| f.mul(x, y))
                    .collect();
                add.push(encode_mixed(&s, &radices));
                mul.push(encode_mixed(&p, &radices));
            }
        }
        let ones: Vec<Elem> = factors.iter().map(FiniteRing::one).collect();
        Ok(Self::from_flat(n, add, mul, encode_mixed(&ones, &radices)))
    }

    /// `(Z/m)[x]/(f)` for monic `f` given low-to-high. Index of a residue is
    /// its coefficient vector read in base `m`, constant term least significant.
    pub fn poly_quotient(modulus: usize, poly: &[i64]) -> Result<Self> {
        Self::poly_quotient_with_caps(modulus, poly, &Caps::default())
    }

    pub fn poly_quotient_with_caps(modulus: usize, poly: &[i64], caps: &Caps) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::invalid(format!(
                "coefficient modulus must be >= 2, got {modulus}"
            )));
        }
        if poly.len() < 2 {
            return Err(Error::invalid("modulus polynomial must have degree >= 1"));
        }
        let m = modulus as i64;
        let f: Vec<usize> = poly.iter().map(|c| c.rem_euclid(m) as usize).collect();
        if f[f.len() - 1] != 1 {
            return Err(Error::invalid(format!(
                "modulus polynomial must be monic, leading coefficient is {}",
                poly[poly.len() - 1]
            )));
        }
        let d = f.len() - 1;
        let n = (0..d)
            .try_fold(1usize, |acc, _| acc.checked_mul(modulus))
            .unwrap_or(usize::MAX);
        caps.check_ring(n)?;
        let radices = vec![modulus; d];
        // little-endian coefficient vectors: reverse of the mixed-radix tuple
        let coeffs: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                let mut t = decode_mixed(i, &radices);
                t.reverse();
                t
            })
            .collect();
        let encode = |c: &[usize]| c.iter().rev().fold(0, |acc, &x| acc * modulus + x);
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in &coeffs {
            for b in &coeffs {
                let s: Vec<usize> = a.iter().zip(b).map(|(x, y)| (x + y) % modulus).collect();
                add.push(encode(&s));
                let mut prod = vec![0usize; 2 * d - 1];
                for (i, x) in a.iter().enumerate() {
                    for (j, y) in b.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % modulus;
                    }
                }
                for k in (d..prod.len()).rev() {
                    let c = prod[k];
                    if c == 0 {
                        continue;
                    }
                    for (i, fi) in f.iter().enumerate().take(d) {
                        let slot = k - d + i;
                        prod[slot] = (prod[slot] + modulus - (c * fi) % modulus) % modulus;
                    }
                    prod[k] = 0;
                }
                mul.push(encode(&prod[..d]));
            }
        }
        Ok(Self::from_flat(n, add, mul, 1))
    }

    /// Validates user-supplied tables against every ring axiom.
    pub fn from_tables(n: usize, add: &[Vec<Elem>], mul: &[Vec<Elem>], one: Elem) -> Result<Self> {
        Self::from_tables_with_caps(n, add, mul, one, &Caps::default())
    }

    pub fn from_tables_with_caps(
        n: usize,
        add: &[Vec<Elem>],
        mul: &[Vec<Elem>],
        one: Elem,
        caps: &Caps,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid(format!(
                "ring needs at least 2 elements, got {n}"
            )));
        }
        caps.check_ring(n)?;
        for (name, table) in [("add", add), ("mul", mul)] {
            if table.len() != n || table.iter().any(|row| row.len() != n) {
                return Err(Error::invalid(format!("{name} table is not {n}x{n}")));
            }
            if let Some(bad) = table.iter().flatten().find(|&&x| x >= n) {
                return Err(Error::invalid(format!(
                    "{name} table entry {bad} out of range"
                )));
            }
        }
        if one >= n {
            return Err(Error::invalid(format!("one = {one} out of range")));
        }
        let ring = Self::from_flat(n, add.concat(), mul.concat(), one);
        ring.validate()?;
        Ok(ring)
    }

    /// Exhaustive O(n^3) axiom check. The additive identity must sit at index 0.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        let fail = |axiom, witness: &[usize]| {
            Err(Error::Axiom {
                axiom,
                witness: witness.to_vec(),
            })
        };
        if self.one == 0 {
            return fail("zero != one", &[0]);
        }
        for a in 0..n {
            if self.add(0, a) != a || self.add(a, 0) != a {
                return fail("additive identity at index 0", &[a]);
            }
            if !(0..n).any(|b| self.add(a, b) == 0) {
                return fail("additive inverse", &[a]);
            }
            if self.mul(self.one, a) != a || self.mul(a, self.one) != a {
                return fail("multiplicative identity", &[a]);
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("additive commutativity", &[a, b]);
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail("multiplicative commutativity", &[a, b]);
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail("additive associativity", &[a, b, c]);
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail("multiplicative associativity", &[a, b, c]);
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail("distributivity", &[a, b, c]);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.n
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.n + b]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.n + b]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a]
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// Rows of the addition table.
    pub fn add_table(&self) -> Vec<Vec<Elem>> {
        self.add.chunks(self.n).map(<[Elem]>::to_vec).collect()
    }

    pub fn mul_table(&self) -> Vec<Vec<Elem>> {
        self.mul.chunks(self.n).map(<[Elem]>::to_vec).collect()
    }

    /// The unit group `u(R)`.
    pub fn units(&self) -> BitSet {
        BitSet::from_indices(
            self.n,
            self.elements()
                .filter(|&a| self.elements().any(|b| self.mul(a, b) == self.one)),
        )
    }

    /// Checks that every member of `set` is a valid element index.
    pub(crate) fn check_elements(&self, elems: &[Elem]) -> Result<()> {
        match elems.iter().find(|&&e| e >= self.n) {
            Some(e) => Err(Error::invalid(format!(
                "element {e} out of range for ring of size {}",
                self.n
            ))),
            None => Ok(()),
        }
    }

    pub(crate) fn check_width(&self, set: &BitSet, what: &str) -> Result<()> {
        if set.universe() != self.n {
            return Err(Error::invalid(format!(
                "{what} belongs to a ring of size {}, expected {}",
                set.universe(),
                self.n
            )));
        }
        Ok(())
    }
}

pub(crate) fn decode_mixed(mut index: usize, radices: &[usize]) -> Vec<usize> {
    let mut out = vec![0; radices.len()];
    for (slot, &r) in out.iter_mut().zip(radices).rev() {
        *slot = index % r;
        index /= r;
    }
    out
}

pub(crate) fn encode_mixed(tuple: &[usize], radices: &[usize]) -> usize {
    tuple
        .iter()
        .zip(radices)
        .fold(0, |acc, (&x, &r)| acc * r + x)
}

/// Unital ring homomorphism between two finite rings.
#[derive(Clone, PartialEq, Eq)]
pub struct RingMorphism<'a> {
    source: &'a FiniteRing,
    target: &'a FiniteRing,
    map: Vec<Elem>,
}

impl std::fmt::Debug for RingMorphism<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RingMorphism{:?}", self.map)
    }
}

impl<'a> RingMorphism<'a> {
    pub fn new(source: &'a FiniteRing, target: &'a FiniteRing, map: Vec<Elem>) -> Result<Self> {
        if map.len() != source.size() {
            return Err(Error::invalid(format!(
                "morphism map has length {}, source has {} elements",
                map.len(),
                source.size()
            )));
        }
        target.check_elements(&map)?;
        if map[source.one()] != target.one() {
            return Err(Error::invalid("morphism does not send 1 to 1"));
        }
        for a in source.elements() {
            for b in source.elements() {
                if map[source.add(a, b)] != target.add(map[a], map[b]) {
                    return Err(Error::invalid(format!(
                        "morphism not additive at ({a}, {b})"
                    )));
                }
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(Error::invalid(format!(
                        "morphism not multiplicative at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(RingMorphism {
            source,
            target,
            map,
        })
    }

    pub fn identity(ring: &'a FiniteRing) -> Self {
        RingMorphism {
            source: ring,
            target: ring,
            map: ring.elements().collect(),
        }
    }

    pub fn source(&self) -> &'a FiniteRing {
        self.source
    }

    pub fn target(&self) -> &'a FiniteRing {
        self.target
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    pub fn apply(&self, a: Elem) -> Elem {
        self.map[a]
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &RingMorphism<'a>) -> Result<RingMorphism<'a>> {
        if first.target != self.source {
            return Err(Error::invalid("morphisms are not composable"));
        }
        let map = first.map.iter().map(|&a| self.map[a]).collect();
        RingMorphism::new(first.source, self.target, map)
    }

    /// Image of a subset of the source.
    pub fn image(&self, set: &BitSet) -> BitSet {
        BitSet::from_indices(self.target.size(), set.iter().map(|a| self.map[a]))
    }

    /// Preimage of a subset of the target.
    pub fn preimage(&self, set: &BitSet) -> BitSet {
        BitSet::from_indices(
            self.source.size(),
            self.source
                .elements()
                .filter(|&a| set.contains(self.map[a])),
        )
    }
}

/// All unital morphisms `source -> target`, sorted by map array.
///
/// Backtracking over images of still-undetermined elements; each choice is
/// propagated through the additive and multiplicative closure of what is
/// already assigned, and any clash prunes the branch.
pub fn enumerate_morphisms<'a>(
    source: &'a FiniteRing,
    target: &'a FiniteRing,
) -> Result<Vec<RingMorphism<'a>>> {
    enumerate_morphisms_with_caps(source, target, &Caps::default())
}

pub fn enumerate_morphisms_with_caps<'a>(
    source: &'a FiniteRing,
    target: &'a FiniteRing,
    caps: &Caps,
) -> Result<Vec<RingMorphism<'a>>> {
    if source.size() > caps.morphism_source {
        return Err(Error::Capacity {
            what: "morphism source ring",
            size: source.size(),
            cap: caps.morphism_source,
        });
    }
    let mut partial = vec![None; source.size()];
    partial[0] = Some(0);
    let mut found = Vec::new();
    if assign(source, target, &mut partial, source.one(), target.one()) {
        search(source, target, partial, &mut found);
    }
    found.sort();
    found.dedup();
    found
        .into_iter()
        .map(|map| RingMorphism::new(source, target, map))
        .collect()
}

fn search(
    source: &FiniteRing,
    target: &FiniteRing,
    partial: Vec<Option<Elem>>,
    found: &mut Vec<Vec<Elem>>,
) {
    match partial.iter().position(Option::is_none) {
        None => found.push(partial.into_iter().flatten().collect()),
        Some(free) => {
            for image in target.elements() {
                let mut next = partial.clone();
                if assign(source, target, &mut next, free, image) {
                    search(source, target, next, found);
                }
            }
        }
    }
}

/// Sets `partial[a] = image` and propagates to a fixed point. Returns false on
/// any inconsistency.
fn assign(
    source: &FiniteRing,
    target: &FiniteRing,
    partial: &mut [Option<Elem>],
    a: Elem,
    image: Elem,
) -> bool {
    match partial[a] {
        Some(v) if v != image => return false,
        _ => partial[a] = Some(image),
    }
    loop {
        let assigned: Vec<(Elem, Elem)> = partial
            .iter()
            .enumerate()
            .filter_map(|(x, v)| v.map(|v| (x, v)))
            .collect();
        let mut changed = false;
        for &(x, fx) in &assigned {
            for &(y, fy) in &assigned {
                for (z, fz) in [
                    (source.add(x, y), target.add(fx, fy)),
                    (source.mul(x, y), target.mul(fx, fy)),
                ] {
                    match partial[z] {
                        Some(v) if v != fz => return false,
                        Some(_) => {}
                        None => {
                            partial[z] = Some(fz);
                            changed = true;
                        }
                    }
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

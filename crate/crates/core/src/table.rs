//! Element-indexed view of a small group: a Cayley table over the sorted
//! element list plus subsets of elements as bitsets.
//!
//! Element `i` is the `i`-th permutation in lexicographic image order, so
//! index 0 is always the identity and index order is the canonical element
//! order.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use hashbrown::HashMap;

use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::perm::Permutation;

/// Hard ceiling on table size; entries are stored as `u16`.
pub const MAX_TABLE_ORDER: u128 = 1 << 16;

/// A set of element indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    words: Vec<u64>,
    len: usize,
}

impl core::fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet {
            words: vec![0; universe.div_ceil(64)],
            len: 0,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for i in 0..universe {
            s.insert(i as u32);
        }
        s
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, i: u32) -> bool {
        self.words[(i / 64) as usize] >> (i % 64) & 1 == 1
    }

    /// Returns true if the element was not present.
    pub fn insert(&mut self, i: u32) -> bool {
        let w = &mut self.words[(i / 64) as usize];
        let bit = 1u64 << (i % 64);
        if *w & bit == 0 {
            *w |= bit;
            self.len += 1;
            true
        } else {
            false
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros();
                w &= w - 1;
                Some(k as u32 * 64 + t)
            })
        })
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.len <= other.len
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
        self.len = self.words.iter().map(|w| w.count_ones() as usize).sum();
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        self.len = self.words.iter().map(|w| w.count_ones() as usize).sum();
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & !b)
            .collect();
        let len = words.iter().map(|w| w.count_ones() as usize).sum();
        ElementSet { words, len }
    }

    /// Compares the sorted index lists lexicographically.
    pub fn cmp_sorted(&self, other: &ElementSet) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) if x != y => return x.cmp(&y),
                _ => {}
            }
        }
    }
}

/// Subgroup data used while walking lattices: element set, element list and
/// a generating set, all as element indices.
#[derive(Debug, Clone)]
pub struct SubgroupData {
    pub set: ElementSet,
    pub elements: Vec<u32>,
    pub generators: Vec<u32>,
}

impl SubgroupData {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Cayley table of a group small enough to enumerate.
#[derive(Clone)]
pub struct GroupTable {
    group: PermutationGroup,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    mul: Vec<u16>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    generator_indices: Vec<u32>,
}

impl core::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("GroupTable")
            .field("order", &self.elements.len())
            .finish()
    }
}

impl GroupTable {
    pub fn new(group: &PermutationGroup, cap: u128) -> Result<Self> {
        let cap = cap.min(MAX_TABLE_ORDER);
        let elements = group.enumerate_elements(cap)?;
        let n = elements.len();
        let index: HashMap<Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let mut mul = vec![0u16; n * n];
        for (i, x) in elements.iter().enumerate() {
            let row = &mut mul[i * n..(i + 1) * n];
            for (j, y) in elements.iter().enumerate() {
                row[j] = index[&x.then(y)] as u16;
            }
        }
        let inv = elements.iter().map(|x| index[&x.inverse()]).collect();
        let orders = elements.iter().map(|x| x.order() as u32).collect();
        let generator_indices = group
            .generators()
            .iter()
            .map(|g| index[g])
            .filter(|&i| i != 0)
            .collect();
        Ok(GroupTable {
            group: group.clone(),
            elements,
            index,
            mul,
            inv,
            orders,
            generator_indices,
        })
    }

    pub fn group(&self) -> &PermutationGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn element(&self, i: u32) -> &Permutation {
        &self.elements[i as usize]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(p).copied()
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.elements.len() + b as usize] as u32
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn element_order(&self, a: u32) -> u32 {
        self.orders[a as usize]
    }

    /// Indices of the ambient group's non-identity generators.
    pub fn generator_indices(&self) -> &[u32] {
        &self.generator_indices
    }

    /// `c⁻¹ a c`.
    pub fn conjugate(&self, a: u32, c: u32) -> u32 {
        self.mul(self.mul(self.inv(c), a), c)
    }

    pub fn trivial_subgroup(&self) -> SubgroupData {
        let mut set = ElementSet::empty(self.len());
        set.insert(0);
        SubgroupData {
            set,
            elements: vec![0],
            generators: Vec::new(),
        }
    }

    /// `⟨H, g⟩`, built as a union of right cosets of `H`.
    pub fn extend(&self, h: &SubgroupData, g: u32) -> SubgroupData {
        if h.set.contains(g) {
            return h.clone();
        }
        let mut generators = h.generators.clone();
        generators.push(g);
        let mut set = h.set.clone();
        let mut elements = h.elements.clone();
        let mut reps = vec![0u32];
        while let Some(r) = reps.pop() {
            for &s in &generators {
                let t = self.mul(r, s);
                if !set.contains(t) {
                    for &x in &h.elements {
                        let y = self.mul(x, t);
                        set.insert(y);
                        elements.push(y);
                    }
                    reps.push(t);
                }
            }
        }
        elements.sort_unstable();
        SubgroupData {
            set,
            elements,
            generators,
        }
    }

    /// The subgroup generated by the given element indices.
    pub fn generate(&self, gens: &[u32]) -> SubgroupData {
        gens.iter()
            .fold(self.trivial_subgroup(), |h, &g| self.extend(&h, g))
    }

    /// Element set of a subgroup given as a permutation group; errors unless `sub ≤ G`.
    pub fn subgroup_of(&self, sub: &PermutationGroup) -> Result<SubgroupData> {
        if sub.degree() != self.group.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.group.degree(),
                found: sub.degree(),
            });
        }
        let mut gens = Vec::new();
        for g in sub.generators() {
            gens.push(self.index_of(g).ok_or(Error::NotASubgroup)?);
        }
        Ok(self.generate(&gens))
    }

    /// Subgroup data for an arbitrary subgroup element set, with a canonical
    /// generating set: greedily the smallest element not yet generated.
    pub fn canonical(&self, set: &ElementSet) -> SubgroupData {
        let mut h = self.trivial_subgroup();
        for i in set.iter() {
            if h.order() == set.len() {
                break;
            }
            if !h.set.contains(i) {
                h = self.extend(&h, i);
            }
        }
        debug_assert_eq!(&h.set, set);
        h
    }

    /// Materializes an element set (which must be a subgroup) as a permutation group.
    pub fn to_group(&self, data: &SubgroupData) -> PermutationGroup {
        let gens = data
            .generators
            .iter()
            .map(|&i| self.elements[i as usize].clone())
            .collect();
        PermutationGroup::new(self.group.degree(), gens).expect("degrees agree")
    }

    pub fn permutations(&self, set: &ElementSet) -> Vec<Permutation> {
        set.iter()
            .map(|i| self.elements[i as usize].clone())
            .collect()
    }

    /// Image of a subset under conjugation by element `c`.
    pub fn conjugate_set(&self, set: &ElementSet, c: u32) -> ElementSet {
        let mut out = ElementSet::empty(self.len());
        let ci = self.inv(c);
        for x in set.iter() {
            out.insert(self.mul(self.mul(ci, x), c));
        }
        out
    }

    /// One generator for each cyclic subgroup of prime-power order (> 1),
    /// namely its smallest generator. Every subgroup is generated by such elements.
    pub fn prime_power_cyclic_generators(&self) -> Vec<u32> {
        let n = self.len();
        let mut covered = vec![false; n];
        let mut reps = Vec::new();
        for x in 1..n as u32 {
            if covered[x as usize] || !is_prime_power(self.element_order(x)) {
                continue;
            }
            reps.push(x);
            let ord = self.element_order(x);
            let mut y = x;
            for k in 1..ord {
                if gcd(k, ord) == 1 {
                    covered[y as usize] = true;
                }
                y = self.mul(y, x);
            }
        }
        reps
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn is_prime_power(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let p = (2..=n).find(|d| n % d == 0).unwrap();
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    m == 1
}

//! Subgroup lattices of small groups, maximal subgroups and overgroups,
//! Frattini subgroups, conjugacy classes of subgroups, and structural labels.
//!
//! Enumeration is by cyclic extension: every subgroup is reached from the
//! trivial group by repeatedly joining cyclic subgroups of prime-power order.
//! Subgroups are keyed by their exact element sets.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;

use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::perm::Permutation;
use crate::table::{ElementSet, GroupTable, SubgroupData};

/// Default order bound for lattice computations.
pub const DEFAULT_LATTICE_CAP: u128 = 5040;

/// All subgroups of a group, in canonical order: by order, then by sorted
/// element index list.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    table: GroupTable,
    subgroups: Vec<SubgroupData>,
    maximal: Vec<bool>,
    lookup: HashMap<ElementSet, usize>,
}

/// A conjugacy class of subgroups, as lattice indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupClass {
    /// Smallest member in canonical order.
    pub representative: usize,
    pub members: Vec<usize>,
}

impl SubgroupClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Breadth-first closure of `start` under joins with the given cyclic
/// generators. Returns the nodes reached (whole group excluded) and, for each,
/// whether every extension produced the whole group.
fn overgroup_closure(
    table: &GroupTable,
    start: SubgroupData,
    cyclic_gens: &[u32],
) -> (Vec<SubgroupData>, Vec<bool>) {
    let total = table.len();
    let mut nodes = vec![start];
    let mut lookup: HashMap<ElementSet, usize> = HashMap::new();
    lookup.insert(nodes[0].set.clone(), 0);
    let mut all_full = Vec::new();
    let mut i = 0;
    while i < nodes.len() {
        let mut full = nodes[i].order() < total;
        if nodes[i].order() < total {
            for &z in cyclic_gens {
                if nodes[i].set.contains(z) {
                    continue;
                }
                let k = table.extend(&nodes[i], z);
                if k.order() == total {
                    continue;
                }
                full = false;
                if !lookup.contains_key(&k.set) {
                    lookup.insert(k.set.clone(), nodes.len());
                    nodes.push(k);
                }
            }
        }
        all_full.push(full);
        i += 1;
    }
    (nodes, all_full)
}

fn sort_canonically(mut sets: Vec<ElementSet>) -> Vec<ElementSet> {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp_sorted(b)));
    sets
}

impl SubgroupLattice {
    /// Enumerates every subgroup of `group`; fails if `|G| > cap`.
    pub fn new(group: &PermutationGroup, cap: u128) -> Result<Self> {
        if group.order() > cap {
            return Err(Error::CapExceeded {
                order: group.order(),
                cap,
            });
        }
        let table = GroupTable::new(group, cap)?;
        Ok(Self::from_table(table))
    }

    pub fn from_table(table: GroupTable) -> Self {
        let zuppos = table.prime_power_cyclic_generators();
        let (nodes, all_full) = overgroup_closure(&table, table.trivial_subgroup(), &zuppos);
        let mut maximal_sets: Vec<ElementSet> = Vec::new();
        let mut sets: Vec<ElementSet> = Vec::with_capacity(nodes.len() + 1);
        for (node, full) in nodes.into_iter().zip(all_full) {
            if full {
                maximal_sets.push(node.set.clone());
            }
            sets.push(node.set);
        }
        if table.len() > 1 {
            sets.push(ElementSet::full(table.len()));
        }
        let sets = sort_canonically(sets);
        let lookup: HashMap<ElementSet, usize> = sets
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let mut maximal = vec![false; sets.len()];
        for m in &maximal_sets {
            maximal[lookup[m]] = true;
        }
        let subgroups = sets.iter().map(|s| table.canonical(s)).collect();
        SubgroupLattice {
            table,
            subgroups,
            maximal,
            lookup,
        }
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn ambient(&self) -> &PermutationGroup {
        self.table.group()
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn subgroup(&self, i: usize) -> &SubgroupData {
        &self.subgroups[i]
    }

    pub fn subgroups(&self) -> &[SubgroupData] {
        &self.subgroups
    }

    pub fn order(&self, i: usize) -> usize {
        self.subgroups[i].order()
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.maximal[i]
    }

    pub fn maximal_flags(&self) -> &[bool] {
        &self.maximal
    }

    pub fn maximal_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.maximal[i]).collect()
    }

    /// Index of the whole group.
    pub fn top(&self) -> usize {
        self.len() - 1
    }

    /// `subgroups[inner] ≤ subgroups[outer]`.
    pub fn is_contained(&self, inner: usize, outer: usize) -> bool {
        self.subgroups[inner]
            .set
            .is_subset(&self.subgroups[outer].set)
    }

    pub fn index_of_set(&self, set: &ElementSet) -> Option<usize> {
        self.lookup.get(set).copied()
    }

    /// Lattice index of a subgroup given as a permutation group.
    pub fn index_of(&self, sub: &PermutationGroup) -> Result<usize> {
        let data = self.table.subgroup_of(sub)?;
        Ok(self.lookup[&data.set])
    }

    pub fn group(&self, i: usize) -> PermutationGroup {
        self.table.to_group(&self.subgroups[i])
    }

    pub fn generators(&self, i: usize) -> Vec<Permutation> {
        self.subgroups[i]
            .generators
            .iter()
            .map(|&g| self.table.element(g).clone())
            .collect()
    }

    /// Maximal subgroups containing `subgroups[i]` (filter backend).
    pub fn maximal_overgroups_of(&self, i: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&m| self.maximal[m] && self.is_contained(i, m))
            .collect()
    }

    /// Lattice index of the Frattini subgroup.
    pub fn frattini_index(&self) -> usize {
        let mut set = ElementSet::full(self.table.len());
        for m in self.maximal_indices() {
            set.intersect_with(&self.subgroups[m].set);
        }
        self.lookup[&set]
    }

    /// Lattice index of `g⁻¹ H g`, with `g` an element index.
    pub fn conjugate_index(&self, i: usize, g: u32) -> usize {
        let set = self.table.conjugate_set(&self.subgroups[i].set, g);
        self.lookup[&set]
    }

    /// Partition of the subgroups into conjugacy classes, ordered by representative.
    pub fn subgroup_classes(&self) -> Vec<SubgroupClass> {
        let mut class_of = vec![usize::MAX; self.len()];
        let mut classes = Vec::new();
        for start in 0..self.len() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[start] = id;
            let mut members = vec![start];
            let mut head = 0;
            while head < members.len() {
                let h = members[head];
                head += 1;
                for &g in self.table.generator_indices() {
                    let c = self.conjugate_index(h, g);
                    if class_of[c] == usize::MAX {
                        class_of[c] = id;
                        members.push(c);
                    }
                }
            }
            members.sort_unstable();
            classes.push(SubgroupClass {
                representative: start,
                members,
            });
        }
        classes
    }
}

/// Every subgroup of `group`.
pub fn all_subgroups(group: &PermutationGroup, cap: u128) -> Result<SubgroupLattice> {
    SubgroupLattice::new(group, cap)
}

/// The maximal subgroups of `group`, in canonical order.
pub fn maximal_subgroups(group: &PermutationGroup, cap: u128) -> Result<Vec<PermutationGroup>> {
    let lattice = SubgroupLattice::new(group, cap)?;
    Ok(lattice
        .maximal_indices()
        .into_iter()
        .map(|i| lattice.group(i))
        .collect())
}

/// Maximal overgroups of a proper subgroup, found by breadth-first search of
/// the overgroup poset. Element sets are returned in canonical order.
pub fn maximal_overgroup_sets(table: &GroupTable, sub: &SubgroupData) -> Result<Vec<ElementSet>> {
    if sub.order() == table.len() {
        return Err(Error::NotProper);
    }
    let zuppos = table.prime_power_cyclic_generators();
    let (nodes, all_full) = overgroup_closure(table, sub.clone(), &zuppos);
    let found = nodes
        .into_iter()
        .zip(all_full)
        .filter(|(_, full)| *full)
        .map(|(n, _)| n.set)
        .collect();
    Ok(sort_canonically(found))
}

/// All maximal subgroups `M` with `H ≤ M < G`.
pub fn maximal_overgroups(
    group: &PermutationGroup,
    sub: &PermutationGroup,
    cap: u128,
) -> Result<Vec<PermutationGroup>> {
    let table = GroupTable::new(group, cap)?;
    let h = table.subgroup_of(sub)?;
    Ok(maximal_overgroup_sets(&table, &h)?
        .iter()
        .map(|s| table.to_group(&table.canonical(s)))
        .collect())
}

/// Intersection of all maximal subgroups (the group itself when trivial).
pub fn frattini(group: &PermutationGroup, cap: u128) -> Result<PermutationGroup> {
    let lattice = SubgroupLattice::new(group, cap)?;
    Ok(lattice.group(lattice.frattini_index()))
}

/// Coarse shape of a maximal subgroup of a transitive group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeLabel {
    /// Orbit sizes, descending.
    Intransitive(Vec<usize>),
    /// Smallest nontrivial block size.
    Imprimitive(usize),
    Primitive,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeLabel::Intransitive(sizes) => {
                f.write_str("intransitive(")?;
                for (i, s) in sizes.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{s}")?;
                }
                f.write_str(")")
            }
            TypeLabel::Imprimitive(k) => write!(f, "imprimitive({k})"),
            TypeLabel::Primitive => f.write_str("primitive"),
        }
    }
}

/// The finest block system in which the 0-based points `a` and `b` share a
/// block. Returns the block containing `a`, as 0-based points.
pub fn minimal_block(generators: &[Permutation], degree: usize, a: usize, b: usize) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..degree).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut pending = vec![(a, b)];
    let ra = find(&mut parent, a);
    let rb = find(&mut parent, b);
    if ra != rb {
        parent[rb.max(ra)] = ra.min(rb);
    }
    while let Some((x, y)) = pending.pop() {
        for g in generators {
            let (gx, gy) = (g.as_slice()[x] as usize, g.as_slice()[y] as usize);
            let (rx, ry) = (find(&mut parent, gx), find(&mut parent, gy));
            if rx != ry {
                parent[rx.max(ry)] = rx.min(ry);
                pending.push((gx, gy));
            }
        }
    }
    let root = find(&mut parent, a);
    (0..degree)
        .filter(|&x| find(&mut parent, x) == root)
        .collect()
}

/// Intransitive / imprimitive / primitive classification of a subgroup by its
/// orbits and block systems.
pub fn maximal_type_label(sub: &PermutationGroup) -> TypeLabel {
    let orbits = sub.orbits();
    if orbits.len() >= 2 {
        let mut sizes: Vec<usize> = orbits.iter().map(|o| o.len()).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        return TypeLabel::Intransitive(sizes);
    }
    let n = sub.degree();
    let smallest = (1..n)
        .map(|b| minimal_block(sub.generators(), n, 0, b).len())
        .filter(|&size| size < n)
        .min();
    match smallest {
        Some(k) => TypeLabel::Imprimitive(k),
        None => TypeLabel::Primitive,
    }
}

/// Structural label used to match subgroups against known families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructureLabel {
    Cyclic,
    Dihedral,
    ElementaryAbelianExtension,
    Alternating4,
    Symmetric4,
    Alternating5,
    Other,
}

impl StructureLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            StructureLabel::Cyclic => "cyclic",
            StructureLabel::Dihedral => "dihedral",
            StructureLabel::ElementaryAbelianExtension => "elementary-abelian-extension",
            StructureLabel::Alternating4 => "alternating-4",
            StructureLabel::Symmetric4 => "symmetric-4",
            StructureLabel::Alternating5 => "alternating-5",
            StructureLabel::Other => "other",
        }
    }
}

impl fmt::Display for StructureLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureFingerprint {
    pub order: usize,
    /// element order → number of elements of that order
    pub element_orders: BTreeMap<u32, usize>,
    pub abelian: bool,
    pub center_order: usize,
    pub label: StructureLabel,
}

impl StructureFingerprint {
    /// Compact text form, e.g. `dihedral/10`.
    pub fn short(&self) -> String {
        format!("{}/{}", self.label, self.order)
    }
}

fn histogram_is(hist: &BTreeMap<u32, usize>, expected: &[(u32, usize)]) -> bool {
    hist.len() == expected.len() && expected.iter().all(|(k, v)| hist.get(k) == Some(v))
}

/// Fingerprint of the subgroup of `table`'s group with the given elements.
pub fn fingerprint_in(table: &GroupTable, sub: &SubgroupData) -> StructureFingerprint {
    let elems = &sub.elements;
    let order = elems.len();
    let mut element_orders = BTreeMap::new();
    for &x in elems {
        *element_orders.entry(table.element_order(x)).or_insert(0) += 1;
    }
    let gens: Vec<u32> = if sub.generators.is_empty() {
        Vec::new()
    } else {
        sub.generators.clone()
    };
    let commutes = |a: u32, b: u32| table.mul(a, b) == table.mul(b, a);
    let abelian = gens.iter().all(|&a| gens.iter().all(|&b| commutes(a, b)));
    let center_order = elems
        .iter()
        .filter(|&&x| gens.iter().all(|&g| commutes(x, g)))
        .count();

    let label = if elems
        .iter()
        .any(|&x| table.element_order(x) as usize == order)
    {
        StructureLabel::Cyclic
    } else if is_dihedral(table, elems, order) {
        StructureLabel::Dihedral
    } else if order == 12 && histogram_is(&element_orders, &[(1, 1), (2, 3), (3, 8)]) {
        StructureLabel::Alternating4
    } else if order == 24 && histogram_is(&element_orders, &[(1, 1), (2, 9), (3, 8), (4, 6)]) {
        StructureLabel::Symmetric4
    } else if order == 60 && histogram_is(&element_orders, &[(1, 1), (2, 15), (3, 20), (5, 24)]) {
        StructureLabel::Alternating5
    } else if is_elementary_abelian_extension(table, sub) {
        StructureLabel::ElementaryAbelianExtension
    } else {
        StructureLabel::Other
    };

    StructureFingerprint {
        order,
        element_orders,
        abelian,
        center_order,
        label,
    }
}

fn is_dihedral(table: &GroupTable, elems: &[u32], order: usize) -> bool {
    if order % 2 != 0 || order < 6 {
        return false;
    }
    let m = (order / 2) as u32;
    let involutions: Vec<u32> = elems
        .iter()
        .copied()
        .filter(|&x| table.element_order(x) == 2)
        .collect();
    elems
        .iter()
        .filter(|&&c| table.element_order(c) == m)
        .any(|&c| {
            let c_inv = table.inv(c);
            involutions.iter().any(|&t| table.conjugate(c, t) == c_inv)
        })
}

/// Some Sylow subgroup is normal, elementary abelian and nontrivial, with
/// cyclic quotient.
fn is_elementary_abelian_extension(table: &GroupTable, sub: &SubgroupData) -> bool {
    let order = sub.order();
    let mut n = order;
    let mut p = 2;
    while n > 1 {
        if n % p != 0 {
            p += 1;
            continue;
        }
        let mut p_part = 1;
        while n % p == 0 {
            n /= p;
            p_part *= p;
        }
        let sylow: Vec<u32> = sub
            .elements
            .iter()
            .copied()
            .filter(|&x| is_power_of(table.element_order(x) as usize, p))
            .collect();
        // the p-elements form a subgroup exactly when the Sylow subgroup is normal
        if sylow.len() != p_part {
            continue;
        }
        let elementary = sylow
            .iter()
            .all(|&x| x == 0 || table.element_order(x) as usize == p);
        let abelian = sylow
            .iter()
            .all(|&a| sylow.iter().all(|&b| table.mul(a, b) == table.mul(b, a)));
        if !(elementary && abelian) {
            continue;
        }
        let index = order / p_part;
        let mut in_sylow = ElementSet::empty(table.len());
        for &x in &sylow {
            in_sylow.insert(x);
        }
        let cyclic_quotient = sub.elements.iter().any(|&g| {
            let mut k = 1;
            let mut y = g;
            while !in_sylow.contains(y) {
                y = table.mul(y, g);
                k += 1;
            }
            k == index
        });
        if cyclic_quotient {
            return true;
        }
    }
    false
}

fn is_power_of(mut x: usize, p: usize) -> bool {
    while x % p == 0 {
        x /= p;
    }
    x == 1
}

/// Structural fingerprint of a group small enough to enumerate.
pub fn structure_fingerprint(group: &PermutationGroup, cap: u128) -> Result<StructureFingerprint> {
    let table = GroupTable::new(group, cap)?;
    let gens: Vec<u32> = table.generator_indices().to_vec();
    let all = table.generate(&gens);
    Ok(fingerprint_in(&table, &all))
}

//! Maximal covers, FF-subgroups and generating pairs.
//!
//! For a proper subgroup `H < G` the maximal cover `Δ_H(G)` is the union of
//! all maximal subgroups of `G` containing `H`. `H` is an FF-subgroup when
//! the cover misses some element of `G`, and `⟨H, a⟩ = G` holds exactly for
//! the elements `a` outside the cover.
//!
//! Generating elements are always found by direct generation tests, never
//! as the complement of the cover, so that comparing the two is a real check.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::lattice::{maximal_overgroup_sets, SubgroupLattice};
use crate::perm::Permutation;
use crate::table::{ElementSet, GroupTable, SubgroupData};

#[derive(Debug, Clone)]
pub struct MaximalCover {
    pub ambient_order: u128,
    pub overgroups: Vec<PermutationGroup>,
    /// Elements of `Δ_H(G)` in canonical order.
    pub cover_elements: Vec<Permutation>,
    pub cover_size: usize,
    pub is_ff: bool,
}

fn proper_subgroup(table: &GroupTable, sub: &PermutationGroup) -> Result<SubgroupData> {
    let h = table.subgroup_of(sub)?;
    if h.order() == table.len() {
        return Err(Error::NotProper);
    }
    Ok(h)
}

fn union_of(table: &GroupTable, sets: &[&ElementSet]) -> ElementSet {
    let mut cover = ElementSet::empty(table.len());
    for s in sets {
        cover.union_with(s);
    }
    cover
}

/// `Δ_H(G)` computed with the overgroup search.
pub fn maximal_cover(
    group: &PermutationGroup,
    sub: &PermutationGroup,
    cap: u128,
) -> Result<MaximalCover> {
    let table = GroupTable::new(group, cap)?;
    let h = proper_subgroup(&table, sub)?;
    let sets = maximal_overgroup_sets(&table, &h)?;
    let cover = union_of(&table, &sets.iter().collect::<Vec<_>>());
    Ok(MaximalCover {
        ambient_order: group.order(),
        overgroups: sets
            .iter()
            .map(|s| table.to_group(&table.canonical(s)))
            .collect(),
        cover_elements: table.permutations(&cover),
        cover_size: cover.len(),
        is_ff: cover.len() < table.len(),
    })
}

/// Whether `H` is an FF-subgroup of `G`.
pub fn is_ff(group: &PermutationGroup, sub: &PermutationGroup, cap: u128) -> Result<bool> {
    Ok(maximal_cover(group, sub, cap)?.is_ff)
}

/// `{a ∈ G : ⟨H, a⟩ = G}` by one generation test per element, in canonical order.
pub fn generating_elements(
    group: &PermutationGroup,
    sub: &PermutationGroup,
    cap: u128,
) -> Result<Vec<Permutation>> {
    if !sub.is_subgroup_of(group)? {
        return Err(Error::NotASubgroup);
    }
    if sub.order() == group.order() {
        return Err(Error::NotProper);
    }
    let elements = group.enumerate_elements(cap)?;
    Ok(elements
        .into_iter()
        .filter(|a| generates_with(group, sub.generators(), a))
        .collect())
}

fn generates_with(group: &PermutationGroup, gens: &[Permutation], a: &Permutation) -> bool {
    let mut all = gens.to_vec();
    all.push(a.clone());
    PermutationGroup::new(group.degree(), all)
        .map(|j| j.order() == group.order())
        .unwrap_or(false)
}

/// `⟨H, a⟩ = G`.
pub fn is_generating_pair(
    group: &PermutationGroup,
    sub: &PermutationGroup,
    a: &Permutation,
) -> Result<bool> {
    if !group.contains(a)? {
        return Err(Error::ElementOutsideGroup);
    }
    if !sub.is_subgroup_of(group)? {
        return Err(Error::NotASubgroup);
    }
    Ok(group.join(sub, core::slice::from_ref(a))?.order() == group.order())
}

/// Cover and generation data for subgroups of one lattice, using the
/// lattice's maximal flags.
pub struct CoverAnalysis<'a> {
    lattice: &'a SubgroupLattice,
}

/// One row of a generating-pair classification: a class of conjugate subgroups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRow {
    /// Lattice index of the class representative.
    pub representative: usize,
    pub generators: Vec<Permutation>,
    pub subgroup_order: usize,
    pub class_size: usize,
    pub is_ff: bool,
    pub cover_size: usize,
    /// Counted by direct generation tests.
    pub generating_count: usize,
    /// Direct generation agrees exactly with the complement of the cover.
    pub lemma13_consistent: bool,
    /// A conjugate of the representative has the conjugated cover.
    pub equivariance_consistent: bool,
}

#[derive(Debug, Clone)]
pub struct GeneratingPairReport {
    pub ambient_order: u128,
    pub subgroup_count: usize,
    pub class_count: usize,
    pub rows: Vec<ClassRow>,
}

impl<'a> CoverAnalysis<'a> {
    pub fn new(lattice: &'a SubgroupLattice) -> Self {
        CoverAnalysis { lattice }
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        self.lattice
    }

    /// `Δ_H(G)` for lattice subgroup `i` (filter backend).
    pub fn cover(&self, i: usize) -> Result<ElementSet> {
        if i == self.lattice.top() {
            return Err(Error::NotProper);
        }
        let sets: Vec<&ElementSet> = self
            .lattice
            .maximal_overgroups_of(i)
            .into_iter()
            .map(|m| &self.lattice.subgroup(m).set)
            .collect();
        Ok(union_of(self.lattice.table(), &sets))
    }

    pub fn is_ff(&self, i: usize) -> Result<bool> {
        Ok(self.cover(i)?.len() < self.lattice.table().len())
    }

    /// Generating elements of lattice subgroup `i`, by direct generation.
    pub fn generating_set(&self, i: usize) -> ElementSet {
        let table = self.lattice.table();
        let group = self.lattice.ambient();
        let gens = self.lattice.generators(i);
        let mut out = ElementSet::empty(table.len());
        for (k, a) in table.elements().iter().enumerate() {
            if generates_with(group, &gens, a) {
                out.insert(k as u32);
            }
        }
        out
    }

    /// Checks `⟨H, a⟩ = G ⇔ a ∉ Δ_H(G)` for lattice subgroup `i`.
    /// Returns `(is_ff, cover_size, generating_count, consistent)`.
    pub fn lemma13(&self, i: usize) -> Result<(bool, usize, usize, bool)> {
        let cover = self.cover(i)?;
        let total = self.lattice.table().len();
        let is_ff = cover.len() < total;
        let generating = self.generating_set(i);
        let expected = if is_ff {
            ElementSet::full(total).difference(&cover)
        } else {
            ElementSet::empty(total)
        };
        Ok((is_ff, cover.len(), generating.len(), generating == expected))
    }

    fn equivariance(&self, i: usize, salt: usize) -> Result<bool> {
        let table = self.lattice.table();
        let c = ((salt * 7919 + 1) % table.len()) as u32;
        let j = self.lattice.conjugate_index(i, c);
        let cover = self.cover(i)?;
        let conj_cover = self.cover(j)?;
        Ok(table.conjugate_set(&cover, c) == conj_cover)
    }

    /// The classification row for one conjugacy class.
    pub fn class_row(
        &self,
        class_id: usize,
        representative: usize,
        class_size: usize,
    ) -> Result<ClassRow> {
        let (is_ff, cover_size, generating_count, lemma13_consistent) =
            self.lemma13(representative)?;
        Ok(ClassRow {
            representative,
            generators: self.lattice.generators(representative),
            subgroup_order: self.lattice.order(representative),
            class_size,
            is_ff,
            cover_size,
            generating_count,
            lemma13_consistent,
            equivariance_consistent: self.equivariance(representative, class_id)?,
        })
    }
}

/// One row per conjugacy class of proper nontrivial subgroups.
pub fn classify_generating_pairs(
    group: &PermutationGroup,
    cap: u128,
) -> Result<GeneratingPairReport> {
    let lattice = SubgroupLattice::new(group, cap)?;
    classify_lattice(&lattice)
}

/// Proper nontrivial classes of a lattice, as `(class id, representative, size)`.
pub fn proper_nontrivial_classes(lattice: &SubgroupLattice) -> Vec<(usize, usize, usize)> {
    lattice
        .subgroup_classes()
        .into_iter()
        .enumerate()
        .filter(|(_, c)| c.representative != 0 && c.representative != lattice.top())
        .map(|(id, c)| (id, c.representative, c.size()))
        .collect()
}

pub fn classify_lattice(lattice: &SubgroupLattice) -> Result<GeneratingPairReport> {
    let analysis = CoverAnalysis::new(lattice);
    let classes = lattice.subgroup_classes();
    let mut rows = Vec::new();
    for (id, rep, size) in proper_nontrivial_classes(lattice) {
        rows.push(analysis.class_row(id, rep, size)?);
    }
    Ok(GeneratingPairReport {
        ambient_order: lattice.ambient().order(),
        subgroup_count: lattice.len(),
        class_count: classes.len(),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{alternating, symmetric};
    use crate::lattice::DEFAULT_LATTICE_CAP;
    use alloc::vec;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse(text, Some(n)).unwrap()
    }

    fn g(n: usize, gens: &[&str]) -> PermutationGroup {
        PermutationGroup::new(n, gens.iter().map(|t| p(t, n)).collect()).unwrap()
    }

    #[test]
    fn covers() {
        let s3 = symmetric(3).unwrap();
        let c = maximal_cover(&s3, &g(3, &["(1 2)"]), 100).unwrap();
        assert_eq!(c.cover_size, 2);
        assert!(c.is_ff);
        assert_eq!(
            c.cover_elements,
            vec![Permutation::identity(3), p("(1 2)", 3)]
        );

        let s4 = symmetric(4).unwrap();
        let c = maximal_cover(&s4, &g(4, &["(1 2 3)"]), 100).unwrap();
        assert_eq!(c.cover_size, 15);
        assert_eq!(c.overgroups.len(), 2);

        let c4 = g(4, &["(1 2 3 4)"]);
        let c = maximal_cover(&c4, &g(4, &[]), 100).unwrap();
        assert_eq!(c.cover_size, 2);
        assert!(c.is_ff);
        // non-cyclic: the trivial subgroup's cover is everything
        assert!(!maximal_cover(&s3, &g(3, &[]), 100).unwrap().is_ff);

        assert_eq!(maximal_cover(&s3, &s3, 100).unwrap_err(), Error::NotProper);
    }

    #[test]
    fn ff_flags() {
        let s5 = symmetric(5).unwrap();
        for m in crate::lattice::maximal_subgroups(&s5, 1000).unwrap() {
            assert!(is_ff(&s5, &m, 1000).unwrap());
        }
        assert!(is_ff(&g(4, &["(1 2 3 4)"]), &g(4, &["(1 3)(2 4)"]), 100).unwrap());
        assert!(is_ff(&symmetric(6).unwrap(), &g(6, &["(1 2)(3 4)"]), 1000).unwrap());
    }

    #[test]
    fn generating_sets() {
        let s3 = symmetric(3).unwrap();
        let gens = generating_elements(&s3, &g(3, &["(1 2)"]), 100).unwrap();
        assert_eq!(
            gens,
            vec![
                p("(2 3)", 3),
                p("(1 2 3)", 3),
                p("(1 3 2)", 3),
                p("(1 3)", 3)
            ]
        );
        let s4 = symmetric(4).unwrap();
        assert_eq!(
            generating_elements(&s4, &g(4, &["(1 2 3)"]), 100)
                .unwrap()
                .len(),
            9
        );
        // Φ(C_4) is still FF since C_4 is cyclic: its generators complete it
        let c4 = g(4, &["(1 2 3 4)"]);
        let phi = g(4, &["(1 3)(2 4)"]);
        assert_eq!(generating_elements(&c4, &phi, 100).unwrap().len(), 2);
        // Φ(D_8) is not FF and has no generating partner
        let d8 = g(4, &["(1 2 3 4)", "(1 3)"]);
        assert!(!is_ff(&d8, &phi, 100).unwrap());
        assert!(generating_elements(&d8, &phi, 100).unwrap().is_empty());
        assert!(generating_elements(&s3, &g(3, &[]), 100)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn generating_pairs() {
        let s4 = symmetric(4).unwrap();
        let h = g(4, &["(1 2 3)"]);
        assert!(is_generating_pair(&s4, &h, &p("(1 2 3 4)", 4)).unwrap());
        assert!(!is_generating_pair(&s4, &h, &p("(1 2)", 4)).unwrap());
        assert!(!is_generating_pair(&s4, &h, &p("(1 3 2)", 4)).unwrap());
        let a4 = alternating(4).unwrap();
        assert_eq!(
            is_generating_pair(&a4, &h, &p("(1 2)", 4)).unwrap_err(),
            Error::ElementOutsideGroup
        );
    }

    #[test]
    fn classifications() {
        let r = classify_generating_pairs(&symmetric(3).unwrap(), 100).unwrap();
        assert_eq!(r.rows.len(), 2);
        assert!(r.rows.iter().all(|row| row.is_ff && row.lemma13_consistent));
        let r = classify_generating_pairs(&symmetric(4).unwrap(), DEFAULT_LATTICE_CAP).unwrap();
        assert_eq!(r.rows.len(), 9);
        assert_eq!(r.class_count, 11);
        assert!(r
            .rows
            .iter()
            .all(|row| row.lemma13_consistent && row.equivariance_consistent));
        // the normal Klein group and its double-transposition subgroups are
        // covered by A_4 and the three D_8
        let non_ff: Vec<(usize, usize)> = r
            .rows
            .iter()
            .filter(|row| !row.is_ff)
            .map(|row| (row.subgroup_order, row.class_size))
            .collect();
        assert_eq!(non_ff, vec![(2, 3), (4, 1)]);
        let c4 = classify_generating_pairs(&g(4, &["(1 2 3 4)"]), 100).unwrap();
        assert_eq!(c4.rows.len(), 1);
        assert!(c4.rows[0].is_ff);
        assert_eq!(c4.rows[0].generating_count, 2);
        let d8 = classify_generating_pairs(&g(4, &["(1 2 3 4)", "(1 3)"]), 100).unwrap();
        let center = d8.rows.iter().find(|r| !r.is_ff).unwrap();
        assert_eq!((center.subgroup_order, center.class_size), (2, 1));
        assert_eq!(center.generating_count, 0);
        assert!(d8.rows.iter().all(|r| r.lemma13_consistent));
        assert!(c4.rows[0].lemma13_consistent);
    }
}

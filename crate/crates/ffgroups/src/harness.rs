//! Verification targets: exhaustive FF checks over whole subgroup lattices,
//! element witnesses for the cycle-type and element-order arguments, and the
//! conjecture and two-generator scans.
//!
//! Work is split across subgroup classes (or groups, for the scan) on a
//! dedicated thread pool; results are collected in canonical lattice order,
//! so reports do not depend on the worker count.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use ffgroups_core::constructors::{alternating, psl2, psl2_order, symmetric};
use ffgroups_core::ff::{
    generating_elements, maximal_cover, proper_nontrivial_classes, ClassRow, CoverAnalysis,
};
use ffgroups_core::field::prime_power;
use ffgroups_core::lattice::{
    fingerprint_in, maximal_overgroup_sets, maximal_type_label, StructureLabel, TypeLabel,
};
use ffgroups_core::psl2_maximals::{expected_maximals, match_inventory, A4Condition};
use ffgroups_core::table::{ElementSet, GroupTable};
use ffgroups_core::{Error, Permutation, PermutationGroup, SubgroupLattice};
use rayon::prelude::*;

use crate::error::{HarnessError, Result};
use crate::groups::{parse_generators, parse_group, render_subgroup, NamedGroup};
use crate::report::{
    ClassRecord, ClassificationReport, Counterexample, CoverReport, FrattiniRecord, LatticeExport,
    OvergroupRecord, QuestionCandidate, QuestionReport, Status, SubgroupRecord, VerificationResult,
};

/// Order cap used when none is given.
pub const DEFAULT_CAP: u128 = 5040;
pub const DEFAULT_PSL2_FIELDS: [u64; 7] = [4, 5, 7, 8, 9, 11, 13];
pub const DEFAULT_SIMPLE_GROUPS: [&str; 6] =
    ["A5", "A6", "PSL(2,7)", "PSL(2,8)", "PSL(2,11)", "PSL(2,13)"];
/// Largest degree accepted by the symmetric and alternating targets.
pub const MAX_DEGREE: usize = 7;

pub const TARGET_SYMMETRIC: &str = "symmetric-ff";
pub const TARGET_ALTERNATING: &str = "alternating-ff";
pub const TARGET_PSL2: &str = "psl2-ff";
pub const TARGET_CYCLES: &str = "cycle-type-witness";
pub const TARGET_ORDERS: &str = "element-order-witness";
pub const TARGET_CONJECTURE: &str = "simple-group-ff";

fn texts(perms: &[Permutation]) -> Vec<String> {
    perms.iter().map(|p| p.render()).collect()
}

fn usage(msg: String) -> HarnessError {
    HarnessError::Usage(msg)
}

impl From<&ClassRow> for ClassRecord {
    fn from(r: &ClassRow) -> Self {
        ClassRecord {
            rep_generators: texts(&r.generators),
            subgroup_order: r.subgroup_order,
            class_size: r.class_size,
            is_ff: r.is_ff,
            cover_size: r.cover_size,
            generating_count: r.generating_count,
            lemma13_consistent: r.lemma13_consistent,
        }
    }
}

/// Maximal subgroups containing each of `elements`.
///
/// Overgroups are searched once per conjugacy class; the other members of
/// the class are handled through conjugates of those overgroups, and
/// membership is then tested element by element.
struct ElementWitness {
    maximals: Vec<ElementSet>,
    containing: Vec<Vec<usize>>,
}

fn maximals_containing(table: &GroupTable, elements: &[u32]) -> Result<ElementWitness> {
    let mut maximals: Vec<ElementSet> = Vec::new();
    let mut seen: HashMap<ElementSet, usize> = HashMap::new();
    let mut covered = ElementSet::empty(table.len());
    for &e in elements {
        if covered.contains(e) {
            continue;
        }
        let cyclic = table.generate(&[e]);
        let sets = maximal_overgroup_sets(table, &cyclic)?;
        for c in 0..table.len() as u32 {
            covered.insert(table.conjugate(e, c));
            for s in &sets {
                let conj = table.conjugate_set(s, c);
                if !seen.contains_key(&conj) {
                    seen.insert(conj.clone(), maximals.len());
                    maximals.push(conj);
                }
            }
        }
    }
    // canonical order, independent of discovery order
    let mut order: Vec<usize> = (0..maximals.len()).collect();
    order.sort_by(|&a, &b| {
        maximals[a]
            .len()
            .cmp(&maximals[b].len())
            .then_with(|| maximals[a].cmp_sorted(&maximals[b]))
    });
    let maximals: Vec<ElementSet> = order.into_iter().map(|i| maximals[i].clone()).collect();
    let containing = elements
        .iter()
        .map(|&e| {
            (0..maximals.len())
                .filter(|&m| maximals[m].contains(e))
                .collect()
        })
        .collect();
    Ok(ElementWitness {
        maximals,
        containing,
    })
}

/// Element order and structure label a witness element's maximals must have.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DesignatedOrder {
    pub element_order: u64,
    pub label: StructureLabel,
    pub maximal_order: usize,
}

/// The element order checked for PSL(2,q), or `None` for q = 5, 9 where the
/// argument goes through A_5 and A_6 instead.
pub fn designated_order(q: u64) -> Option<DesignatedOrder> {
    let d = |element_order, label, maximal_order| {
        Some(DesignatedOrder {
            element_order,
            label,
            maximal_order,
        })
    };
    match q {
        5 | 9 => None,
        7 => d(4, StructureLabel::Symmetric4, 24),
        11 => d(6, StructureLabel::Dihedral, 12),
        _ if q % 2 == 0 => d(q + 1, StructureLabel::Dihedral, 2 * (q as usize + 1)),
        _ => d((q + 1) / 2, StructureLabel::Dihedral, q as usize + 1),
    }
}

pub struct Harness {
    cap: u128,
    workers: usize,
    pool: rayon::ThreadPool,
}

impl Harness {
    /// `workers = 0` uses one thread per available core.
    pub fn new(cap: u128, workers: usize) -> Result<Self> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| usage(format!("cannot start worker pool: {e}")))?;
        Ok(Harness {
            cap,
            workers: pool.current_num_threads(),
            pool,
        })
    }

    pub fn cap(&self) -> u128 {
        self.cap
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    pub fn lattice(&self, group: &PermutationGroup) -> Result<SubgroupLattice> {
        Ok(SubgroupLattice::new(group, self.cap)?)
    }

    /// One row per class of proper nontrivial subgroups, in class order.
    pub fn classify(&self, lattice: &SubgroupLattice) -> Result<Vec<ClassRow>> {
        let analysis = CoverAnalysis::new(lattice);
        let items = proper_nontrivial_classes(lattice);
        self.pool
            .install(|| {
                items
                    .par_iter()
                    .map(|&(id, rep, size)| analysis.class_row(id, rep, size))
                    .collect::<std::result::Result<Vec<_>, Error>>()
            })
            .map_err(Into::into)
    }

    pub fn classification_report(&self, named: &NamedGroup) -> Result<ClassificationReport> {
        let lattice = self.lattice(&named.group)?;
        let rows = self.classify(&lattice)?;
        Ok(ClassificationReport {
            ambient: named.name.clone(),
            order: named.group.order(),
            classes: rows.iter().map(ClassRecord::from).collect(),
        })
    }

    /// Checks that every proper nontrivial subgroup class is FF, with the
    /// generation self-checks attached to every row.
    fn verify_ff(
        &self,
        target: &str,
        named: &NamedGroup,
    ) -> Result<(VerificationResult, SubgroupLattice)> {
        let start = Instant::now();
        let lattice = self.lattice(&named.group)?;
        let rows = self.classify(&lattice)?;
        let mut r = VerificationResult::new(target, &named.name)
            .param("order", named.group.order() as u64)
            .param("cap", self.cap as u64);
        r.stats.subgroups = Some(lattice.len());
        r.stats.classes = Some(lattice.subgroup_classes().len());
        r.stats.classes_checked = rows.len();
        for row in &rows {
            let mut reasons = Vec::new();
            if !row.is_ff {
                reasons.push(format!(
                    "not FF: the maximal overgroups cover all {} elements; {} generating partners found by direct search",
                    lattice.table().len(),
                    row.generating_count
                ));
            }
            if !row.lemma13_consistent {
                reasons.push("generating partners differ from the complement of the cover".into());
            }
            if !row.equivariance_consistent {
                reasons.push("cover of a conjugate is not the conjugated cover".into());
            }
            if !row.lemma13_consistent || !row.equivariance_consistent {
                r.stats.self_check_failures += 1;
            }
            if !reasons.is_empty() {
                r.counterexamples.push(Counterexample {
                    subgroup: render_subgroup(&row.generators),
                    order: row.subgroup_order,
                    class_size: row.class_size,
                    reason: reasons.join("; "),
                });
            }
        }
        Ok((r.finish(start.elapsed()), lattice))
    }

    pub fn verify_symmetric(&self, max_n: usize) -> Result<Vec<VerificationResult>> {
        if !(2..=MAX_DEGREE).contains(&max_n) {
            return Err(usage(format!(
                "--max-n must lie in 2..={MAX_DEGREE}, got {max_n}"
            )));
        }
        (max_n.min(3)..=max_n)
            .map(|n| {
                let named = NamedGroup {
                    name: format!("S{n}"),
                    group: symmetric(n)?,
                };
                Ok(self.verify_ff(TARGET_SYMMETRIC, &named)?.0.param("n", n))
            })
            .collect()
    }

    pub fn verify_alternating(&self, max_n: usize) -> Result<Vec<VerificationResult>> {
        if !(3..=MAX_DEGREE).contains(&max_n) {
            return Err(usage(format!(
                "--max-n must lie in 3..={MAX_DEGREE}, got {max_n}"
            )));
        }
        (3..=max_n)
            .map(|n| {
                let named = NamedGroup {
                    name: format!("A{n}"),
                    group: alternating(n)?,
                };
                Ok(self.verify_ff(TARGET_ALTERNATING, &named)?.0.param("n", n))
            })
            .collect()
    }

    /// Field sizes outside `4..=13` are refused unless `allow_large` is set.
    pub fn verify_psl2(&self, qs: &[u64], allow_large: bool) -> Result<Vec<VerificationResult>> {
        for &q in qs {
            if prime_power(q).is_none() || q < 4 {
                return Err(usage(format!("q = {q} is not a prime power of at least 4")));
            }
            if q > 13 && !allow_large {
                return Err(usage(format!(
                    "q = {q} is above the default range 4..=13; pass --allow-large to run it"
                )));
            }
        }
        qs.iter().map(|&q| self.verify_psl2_one(q)).collect()
    }

    fn verify_psl2_one(&self, q: u64) -> Result<VerificationResult> {
        let (group, line) = psl2(q)?;
        let named = NamedGroup {
            name: format!("PSL(2,{q})"),
            group,
        };
        let (r, lattice) = self.verify_ff(TARGET_PSL2, &named)?;
        let mut r = r
            .param("q", q)
            .param("degree", line.len())
            .param("expected_order", psl2_order(q) as u64)
            .param("two_transitive", named.group.is_2_transitive()?);
        if named.group.order() != psl2_order(q) {
            r.notes.push(format!(
                "constructed order {} differs from q(q^2-1)/gcd(2,q-1) = {}",
                named.group.order(),
                psl2_order(q)
            ));
        }
        match q {
            5 => r.notes.push("|PSL(2,5)| = 60 = |A_5|".into()),
            9 => r.notes.push("|PSL(2,9)| = 360 = |A_6|".into()),
            _ => {}
        }
        r.notes.extend(inventory_notes(q, &lattice)?);
        Ok(r)
    }

    /// Which maximal subgroups contain the elements of one cycle type.
    ///
    /// Odd `n`: every element of type `(n-2, 2)` must lie in exactly one
    /// maximal subgroup, of shape `S_{n-2} × S_2`. Even `n`: the shapes
    /// containing `(n-3, 2, 1)` elements are recorded and anything beyond
    /// `S_{n-1}`, `S_3 × S_{n-3}`, `S_2 × S_{n-2}` becomes a note.
    pub fn witness_cycle_types(&self, n: usize) -> Result<VerificationResult> {
        if !(4..=MAX_DEGREE).contains(&n) {
            return Err(usage(format!("--n must lie in 4..={MAX_DEGREE}, got {n}")));
        }
        let start = Instant::now();
        let sn = symmetric(n)?;
        let table = GroupTable::new(&sn, self.cap)?;
        let odd = n % 2 == 1;
        let mut wanted = if odd {
            vec![n - 2, 2]
        } else {
            vec![n - 3, 2, 1]
        };
        wanted.sort_unstable_by(|a, b| b.cmp(a));
        let elements: Vec<u32> = (0..table.len() as u32)
            .filter(|&i| table.element(i).cycle_type().lengths() == &wanted[..])
            .collect();
        let w = maximals_containing(&table, &elements)?;
        let labels: Vec<TypeLabel> = w
            .maximals
            .iter()
            .map(|s| maximal_type_label(&table.to_group(&table.canonical(s))))
            .collect();
        let intransitive = |a: usize, b: usize| TypeLabel::Intransitive(vec![a.max(b), a.min(b)]);
        let mut r = VerificationResult::new(TARGET_CYCLES, &format!("S{n}"))
            .param("n", n)
            .param("cycle_type", wanted.clone());
        r.stats.elements_checked = elements.len();
        let mut observed: BTreeMap<String, usize> = BTreeMap::new();
        let mut outside: BTreeMap<TypeLabel, usize> = BTreeMap::new();
        let allowed = [
            intransitive(n - 1, 1),
            intransitive(n - 3, 3),
            intransitive(n - 2, 2),
        ];
        for (&e, ms) in elements.iter().zip(&w.containing) {
            let mut ls: Vec<&TypeLabel> = ms.iter().map(|&m| &labels[m]).collect();
            ls.sort();
            let key: Vec<String> = ls.iter().map(|l| l.to_string()).collect();
            *observed.entry(format!("[{}]", key.join(", "))).or_default() += 1;
            if odd {
                if ls.len() != 1 || *ls[0] != intransitive(n - 2, 2) {
                    r.counterexamples.push(Counterexample {
                        subgroup: render_subgroup(std::slice::from_ref(table.element(e))),
                        order: table.element_order(e) as usize,
                        class_size: 1,
                        reason: format!(
                            "lies in {} maximal subgroups: [{}]",
                            ls.len(),
                            key.join(", ")
                        ),
                    });
                }
            } else {
                for l in ls {
                    if !allowed.contains(l) {
                        *outside.entry(l.clone()).or_default() += 1;
                    }
                }
            }
        }
        r = r.param("maximal_types", serde_json::to_value(&observed)?);
        for (label, count) in outside {
            r.notes.push(format!(
                "{count} of the {} elements of cycle type {wanted:?} also lie in a maximal subgroup of type {label}, \
                 outside S_{}, S_3 x S_{}, S_2 x S_{}",
                elements.len(),
                n - 1,
                n - 3,
                n - 2
            ));
        }
        if !odd {
            let present: Vec<String> = allowed
                .iter()
                .filter(|l| !labels.contains(l))
                .map(|l| l.to_string())
                .collect();
            if !present.is_empty() {
                r.notes.push(format!(
                    "no maximal subgroup containing these elements has type {}",
                    present.join(" or ")
                ));
            }
        }
        Ok(r.finish(start.elapsed()))
    }

    /// Every element of the designated order of PSL(2,q) must lie only in
    /// maximal subgroups of the designated shape.
    pub fn witness_orders(&self, q: u64) -> Result<VerificationResult> {
        let start = Instant::now();
        let (group, _) = psl2(q)?;
        let mut r = VerificationResult::new(TARGET_ORDERS, &format!("PSL(2,{q})")).param("q", q);
        let Some(d) = designated_order(q) else {
            r.status = Status::Skipped;
            r.notes.push(format!(
                "q = {q} is handled through PSL(2,{q}) = {}; no element-order witness",
                if q == 5 { "A_5" } else { "A_6" }
            ));
            return Ok(r.finish(start.elapsed()));
        };
        r = r
            .param("element_order", d.element_order)
            .param("maximal_order", d.maximal_order)
            .param("maximal_label", d.label.as_str());
        let table = GroupTable::new(&group, self.cap)?;
        let elements: Vec<u32> = (0..table.len() as u32)
            .filter(|&i| table.element_order(i) as u64 == d.element_order)
            .collect();
        let w = maximals_containing(&table, &elements)?;
        let prints: Vec<(usize, StructureLabel)> = w
            .maximals
            .iter()
            .map(|s| {
                let f = fingerprint_in(&table, &table.canonical(s));
                (f.order, f.label)
            })
            .collect();
        r.stats.elements_checked = elements.len();
        let mut a5_overlap = 0;
        for (&e, ms) in elements.iter().zip(&w.containing) {
            let bad: Vec<String> = ms
                .iter()
                .filter(|&&m| prints[m] != (d.maximal_order, d.label))
                .map(|&m| format!("{} of order {}", prints[m].1, prints[m].0))
                .collect();
            if ms
                .iter()
                .any(|&m| prints[m].1 == StructureLabel::Alternating5)
            {
                a5_overlap += 1;
            }
            if !bad.is_empty() || ms.is_empty() {
                r.counterexamples.push(Counterexample {
                    subgroup: render_subgroup(std::slice::from_ref(table.element(e))),
                    order: d.element_order as usize,
                    class_size: 1,
                    reason: format!("also lies in: {}", bad.join(", ")),
                });
            }
        }
        if q == 11 {
            r = r.param("alternating5_overlaps", a5_overlap);
            if a5_overlap > 0 {
                r.notes.push(format!(
                    "{a5_overlap} elements of order 6 lie in an alternating-5 maximal subgroup"
                ));
            }
        }
        Ok(r.finish(start.elapsed()))
    }

    pub fn conjecture_scan(&self, specs: &[String]) -> Result<Vec<VerificationResult>> {
        specs
            .iter()
            .map(|s| {
                let named = parse_group(s)?;
                let (mut r, _) = self.verify_ff(TARGET_CONJECTURE, &named)?;
                if r.status == Status::Fail {
                    r.notes.push(
                        "FINDING: non-FF subgroup of a simple group; generating partners were \
                         recounted by direct generation tests (see counterexamples)"
                            .into(),
                    );
                }
                Ok(r)
            })
            .collect()
    }

    /// Searches subgroups `G = ⟨a, b⟩ ≤ S_n` (up to conjugacy) for a nontrivial
    /// `H ≤ G` that is neither inside `Φ(G)` nor FF.
    ///
    /// Subgroups of `S_m` for `m < n` occur in `S_n` as subgroups fixing the
    /// extra points, so scanning `S_n` covers every smaller degree.
    pub fn question_scan(&self, max_degree: usize, max_order: u128) -> Result<QuestionReport> {
        if !(1..=MAX_DEGREE).contains(&max_degree) {
            return Err(usage(format!(
                "--max-degree must lie in 1..={MAX_DEGREE}, got {max_degree}"
            )));
        }
        let max_order = max_order.min(self.cap);
        let sn = symmetric(max_degree)?;
        let lattice = self.lattice(&sn)?;
        let table = lattice.table();
        let reps: Vec<usize> = lattice
            .subgroup_classes()
            .into_iter()
            .map(|c| c.representative)
            .filter(|&i| lattice.order(i) > 1 && lattice.order(i) as u128 <= max_order)
            .collect();
        let found = self.pool.install(|| {
            reps.par_iter()
                .map(|&i| -> Result<Option<Vec<QuestionCandidate>>> {
                    let elements = &lattice.subgroup(i).elements;
                    let two_generated = elements.iter().enumerate().any(|(k, &a)| {
                        elements[k..]
                            .iter()
                            .any(|&b| table.generate(&[a, b]).order() == elements.len())
                    });
                    if !two_generated {
                        return Ok(None);
                    }
                    let g = lattice.group(i);
                    let sub = self.lattice(&g)?;
                    let phi = sub.frattini_index();
                    let analysis = CoverAnalysis::new(&sub);
                    let mut out = Vec::new();
                    for (_, rep, size) in proper_nontrivial_classes(&sub) {
                        if sub.is_contained(rep, phi) || analysis.is_ff(rep)? {
                            continue;
                        }
                        out.push(QuestionCandidate {
                            group: texts(&lattice.generators(i)),
                            group_order: lattice.order(i),
                            subgroup: texts(&sub.generators(rep)),
                            subgroup_order: sub.order(rep),
                            class_size: size,
                        });
                    }
                    Ok(Some(out))
                })
                .collect::<Result<Vec<_>>>()
        })?;
        let two_generated = found.iter().filter(|f| f.is_some()).count();
        let candidates: Vec<QuestionCandidate> = found.into_iter().flatten().flatten().collect();
        let mut notes = vec![format!(
            "scanned subgroups of S_{max_degree}; subgroups of smaller symmetric groups appear as subgroups fixing the extra points"
        )];
        if !candidates.is_empty() {
            notes.push(
                "each candidate is a two-generated group with a nontrivial subgroup that is neither inside the Frattini subgroup nor FF".into(),
            );
        }
        Ok(QuestionReport {
            max_degree,
            max_order,
            groups_scanned: reps.len(),
            two_generated,
            candidates,
            notes,
        })
    }

    /// Maximal overgroups, cover and generating partners of one subgroup.
    pub fn cover(&self, named: &NamedGroup, subgroup: &str) -> Result<CoverReport> {
        let g = &named.group;
        let gens = parse_generators(subgroup, g.degree())?;
        let h = PermutationGroup::new(g.degree(), gens.clone())?;
        if !h.is_subgroup_of(g)? {
            return Err(Error::NotASubgroup.into());
        }
        if h.order() == g.order() {
            return Err(HarnessError::SubgroupIsWholeGroup);
        }
        let cover = maximal_cover(g, &h, self.cap)?;
        let table = GroupTable::new(g, self.cap)?;
        let overgroups = cover
            .overgroups
            .iter()
            .map(|m| -> Result<OvergroupRecord> {
                let data = table.subgroup_of(m)?;
                Ok(OvergroupRecord {
                    order: m.order() as usize,
                    generators: texts(m.generators()),
                    type_label: maximal_type_label(m).to_string(),
                    structure: fingerprint_in(&table, &data).label.as_str().to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let generating = generating_elements(g, &h, self.cap)?;
        Ok(CoverReport {
            ambient: named.name.clone(),
            order: g.order(),
            subgroup: texts(&gens),
            subgroup_order: h.order(),
            overgroups,
            cover_size: cover.cover_size,
            is_ff: cover.is_ff,
            generating_count: generating.len(),
        })
    }

    pub fn lattice_export(&self, named: &NamedGroup) -> Result<LatticeExport> {
        let lattice = self.lattice(&named.group)?;
        let mut class_of = vec![0; lattice.len()];
        for (id, class) in lattice.subgroup_classes().iter().enumerate() {
            for &m in &class.members {
                class_of[m] = id;
            }
        }
        let subgroups = (0..lattice.len())
            .map(|i| SubgroupRecord {
                index: i,
                order: lattice.order(i),
                generators: texts(&lattice.generators(i)),
                maximal: lattice.is_maximal(i),
                class_id: class_of[i],
                type_label: maximal_type_label(&lattice.group(i)).to_string(),
            })
            .collect();
        let phi = lattice.frattini_index();
        Ok(LatticeExport {
            ambient: named.name.clone(),
            order: named.group.order(),
            subgroup_count: lattice.len(),
            subgroups,
            frattini: FrattiniRecord {
                index: phi,
                order: lattice.order(phi),
                generators: texts(&lattice.generators(phi)),
            },
        })
    }

    /// Everything the default command set checks, in a fixed order.
    pub fn default_suite(&self) -> Result<Vec<VerificationResult>> {
        let mut out = self.verify_symmetric(6)?;
        out.extend(self.verify_alternating(6)?);
        out.extend(self.verify_psl2(&DEFAULT_PSL2_FIELDS, false)?);
        for n in 4..=6 {
            out.push(self.witness_cycle_types(n)?);
        }
        for q in DEFAULT_PSL2_FIELDS {
            out.push(self.witness_orders(q)?);
        }
        let groups: Vec<String> = DEFAULT_SIMPLE_GROUPS
            .iter()
            .map(|s| s.to_string())
            .collect();
        out.extend(self.conjecture_scan(&groups)?);
        Ok(out)
    }
}

/// Compares the maximal subgroups in the lattice of PSL(2,q) with the known
/// list of maximal shapes; differences become notes.
fn inventory_notes(q: u64, lattice: &SubgroupLattice) -> Result<Vec<String>> {
    let table = lattice.table();
    let observed: Vec<(u128, StructureLabel)> = lattice
        .maximal_indices()
        .into_iter()
        .map(|m| {
            let f = fingerprint_in(table, lattice.subgroup(m));
            (f.order as u128, f.label)
        })
        .collect();
    let mut notes = Vec::new();
    let fmt = |xs: &[(u128, StructureLabel)]| -> String {
        let v: Vec<String> = xs.iter().map(|(o, l)| format!("{l}:{o}")).collect();
        v.join(", ")
    };
    let standard = expected_maximals(q, A4Condition::Standard)?;
    let m = match_inventory(&observed, &standard);
    if !m.is_exact() {
        let missing: Vec<(u128, StructureLabel)> =
            m.missing.iter().map(|e| (e.order, e.label)).collect();
        notes.push(format!(
            "maximal subgroups differ from the known list: unexpected [{}], missing [{}]",
            fmt(&m.unexpected),
            fmt(&missing)
        ));
    }
    let literal = expected_maximals(q, A4Condition::AsPrinted)?;
    let a4 = |list: &[ffgroups_core::psl2_maximals::ExpectedMaximal]| {
        list.iter()
            .any(|e| e.label == StructureLabel::Alternating4 && e.order == 12)
    };
    if a4(&literal) != a4(&standard) {
        let has = observed.contains(&(12, StructureLabel::Alternating4));
        notes.push(format!(
            "the A_4 condition read literally as q = +-1 (mod 10) {} a maximal A_4 at q = {q}; the lattice {}",
            if a4(&literal) { "predicts" } else { "rules out" },
            if has { "has one" } else { "has none" }
        ));
    }
    Ok(notes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h() -> Harness {
        Harness::new(DEFAULT_CAP, 2).unwrap()
    }

    #[test]
    fn designated_orders() {
        assert_eq!(designated_order(4).unwrap().element_order, 5);
        assert_eq!(designated_order(8).unwrap().maximal_order, 18);
        assert_eq!(
            designated_order(7).unwrap().label,
            StructureLabel::Symmetric4
        );
        assert_eq!(designated_order(11).unwrap().maximal_order, 12);
        assert_eq!(designated_order(13).unwrap().element_order, 7);
        assert!(designated_order(5).is_none() && designated_order(9).is_none());
    }

    #[test]
    fn small_symmetric_runs() {
        let rs = h().verify_symmetric(3).unwrap();
        assert_eq!(rs.len(), 1);
        assert_eq!(rs[0].status, Status::Pass);
        assert_eq!(rs[0].stats.classes_checked, 2);
        assert_eq!(rs[0].stats.subgroups, Some(6));
        assert!(h().verify_symmetric(8).is_err());
        assert!(h().verify_alternating(2).is_err());
    }

    #[test]
    fn alternating_three_is_vacuous() {
        let rs = h().verify_alternating(3).unwrap();
        assert_eq!(rs[0].status, Status::Pass);
        assert_eq!(rs[0].stats.classes_checked, 0);
    }

    #[test]
    fn psl2_range_gate() {
        assert!(h().verify_psl2(&[16], false).is_err());
        assert!(h().verify_psl2(&[6], true).is_err());
        assert!(h().verify_psl2(&[3], true).is_err());
    }

    #[test]
    fn witnesses() {
        let r = h().witness_cycle_types(5).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.stats.elements_checked, 20);
        assert!(r.notes.is_empty());
        let r = h().witness_orders(9).unwrap();
        assert_eq!(r.status, Status::Skipped);
        assert!(r.passed());
    }

    #[test]
    fn cover_examples() {
        let s3 = parse_group("S3").unwrap();
        let c = h().cover(&s3, "(1 2)").unwrap();
        assert_eq!((c.cover_size, c.is_ff, c.generating_count), (2, true, 4));
        let s4 = parse_group("S4").unwrap();
        assert!(matches!(
            h().cover(&s4, "(1 2),(1 2 3 4)"),
            Err(HarnessError::SubgroupIsWholeGroup)
        ));
        assert!(h().cover(&s3, "(1 4)").is_err());
    }
}

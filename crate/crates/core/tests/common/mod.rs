//! Independent oracles: plain closure over image vectors, no stabilizer chain.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use ffgroups_core::{Permutation, PermutationGroup};

pub type Images = Vec<u32>;

fn mul(a: &[u32], b: &[u32]) -> Images {
    // apply a, then b (1-based images)
    a.iter().map(|&x| b[x as usize - 1]).collect()
}

pub fn images(p: &Permutation) -> Images {
    (1..=p.degree() as u32).map(|x| p.image(x)).collect()
}

/// Every element of `⟨gens⟩`, by breadth-first multiplication.
pub fn closure(degree: usize, gens: &[Permutation]) -> BTreeSet<Images> {
    let id: Images = (1..=degree as u32).collect();
    let gens: Vec<Images> = gens.iter().map(images).collect();
    let mut seen: HashSet<Images> = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for g in &gens {
            let y = mul(&x, g);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn perm(text: &str, n: usize) -> Permutation {
    Permutation::parse(text, Some(n)).unwrap()
}

pub fn group(n: usize, gens: &[&str]) -> PermutationGroup {
    PermutationGroup::new(n, gens.iter().map(|t| perm(t, n)).collect()).unwrap()
}

/// Every subgroup of a group given by its element list, by repeated
/// extension with single elements.
pub fn all_subgroups(elements: &[Images]) -> BTreeSet<BTreeSet<Images>> {
    let degree = elements[0].len();
    let id: Images = (1..=degree as u32).collect();
    let to_perm = |v: &Images| Permutation::from_images(v).unwrap();
    let mut found: BTreeSet<BTreeSet<Images>> = BTreeSet::from([BTreeSet::from([id.clone()])]);
    let mut frontier: Vec<(BTreeSet<Images>, Vec<Permutation>)> =
        vec![(BTreeSet::from([id]), Vec::new())];
    while let Some((h, gens)) = frontier.pop() {
        for e in elements {
            if h.contains(e) {
                continue;
            }
            let mut g = gens.clone();
            g.push(to_perm(e));
            let k = closure(degree, &g);
            if found.insert(k.clone()) {
                frontier.push((k, g));
            }
        }
    }
    found
}

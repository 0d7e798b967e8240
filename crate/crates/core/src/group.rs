//! Permutation groups backed by a base and strong generating set.
//!
//! The stabilizer chain is built with the deterministic Schreier–Sims
//! algorithm. New base points are always the smallest point moved by the
//! element that forced the extension, so two builds from the same generators
//! give the same chain.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default bound on the number of elements [`PermutationGroup::enumerate_elements`]
/// is willing to materialize.
pub const DEFAULT_ENUMERATION_CAP: u128 = 10080;

#[derive(Clone)]
struct Level {
    // 0-based base point
    point: usize,
    // transversal[x] maps `point` to `x`, for x in the orbit
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

/// A finite permutation group of fixed degree.
#[derive(Clone)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    strong_generators: Vec<Permutation>,
    levels: Vec<Level>,
    order: u128,
}

impl fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermutationGroup")
            .field("degree", &self.degree)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

fn orbit_transversal(degree: usize, point: usize, gens: &[&Permutation]) -> Level {
    let mut transversal: Vec<Option<Permutation>> = vec![None; degree];
    transversal[point] = Some(Permutation::identity(degree));
    let mut orbit = vec![point];
    let mut head = 0;
    while head < orbit.len() {
        let x = orbit[head];
        head += 1;
        for g in gens {
            let y = g.as_slice()[x] as usize;
            if transversal[y].is_none() {
                let rep = transversal[x].as_ref().unwrap().then(g);
                transversal[y] = Some(rep);
                orbit.push(y);
            }
        }
    }
    Level {
        point,
        transversal,
        orbit,
    }
}

fn smallest_moved_point(p: &Permutation) -> Option<usize> {
    p.as_slice()
        .iter()
        .enumerate()
        .find(|(i, &x)| *i as u32 != x)
        .map(|(i, _)| i)
}

/// Sifts `g` through `levels[start..]`. Returns the residue and the level at
/// which sifting stopped (`levels.len()` when it went all the way through).
fn sift(levels: &[Level], start: usize, g: &Permutation) -> (Permutation, usize) {
    let mut y = g.clone();
    for (l, level) in levels.iter().enumerate().skip(start) {
        let x = y.as_slice()[level.point] as usize;
        match &level.transversal[x] {
            Some(u) => y = y.then(&u.inverse()),
            None => return (y, l),
        }
    }
    (y, levels.len())
}

fn fixes_all(p: &Permutation, points: &[usize]) -> bool {
    points.iter().all(|&b| p.as_slice()[b] as usize == b)
}

fn schreier_sims(
    degree: usize,
    generators: &[Permutation],
    initial_base: &[usize],
) -> (Vec<Permutation>, Vec<Level>) {
    let mut strong: Vec<Permutation> = Vec::new();
    for g in generators {
        if !g.is_identity() && !strong.contains(g) {
            strong.push(g.clone());
        }
    }
    let mut base: Vec<usize> = initial_base.to_vec();
    for s in &strong {
        if fixes_all(s, &base) {
            base.push(smallest_moved_point(s).expect("non-identity"));
        }
    }

    let level_gens = |strong: &[Permutation], base: &[usize], i: usize| -> Vec<usize> {
        (0..strong.len())
            .filter(|&k| fixes_all(&strong[k], &base[..i]))
            .collect()
    };

    let mut levels: Vec<Level> = Vec::with_capacity(base.len());
    for i in 0..base.len() {
        let idx = level_gens(&strong, &base, i);
        let gens: Vec<&Permutation> = idx.iter().map(|&k| &strong[k]).collect();
        levels.push(orbit_transversal(degree, base[i], &gens));
    }

    let mut i = base.len();
    while i > 0 {
        let level = i - 1;
        let idx = level_gens(&strong, &base, level);
        {
            let gens: Vec<&Permutation> = idx.iter().map(|&k| &strong[k]).collect();
            levels[level] = orbit_transversal(degree, base[level], &gens);
        }
        let mut jump = None;
        'search: for &p in &levels[level].orbit {
            let up = levels[level].transversal[p].as_ref().unwrap();
            for &k in &idx {
                let s = &strong[k];
                let ps = s.as_slice()[p] as usize;
                let ups = levels[level].transversal[ps].as_ref().unwrap();
                let y = up.then(s).then(&ups.inverse());
                if y.is_identity() {
                    continue;
                }
                let (h, j) = sift(&levels, level + 1, &y);
                if j < levels.len() || !h.is_identity() {
                    if j == levels.len() {
                        let b = smallest_moved_point(&h).expect("non-identity residue");
                        base.push(b);
                        levels.push(orbit_transversal(degree, b, &[]));
                    }
                    strong.push(h);
                    jump = Some(j);
                    break 'search;
                }
            }
        }
        match jump {
            Some(j) => {
                // levels above j are untouched; j and below are rebuilt on the way down
                i = j + 1;
            }
            None => i -= 1,
        }
    }
    (strong, levels)
}

impl PermutationGroup {
    /// The group generated by `generators`, all of degree `degree`.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::with_base_prefix(degree, generators, &[])
    }

    /// Like [`PermutationGroup::new`], but the stabilizer chain starts with
    /// the given 1-based points.
    pub fn with_base_prefix(
        degree: usize,
        generators: Vec<Permutation>,
        prefix: &[u32],
    ) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let mut base = Vec::with_capacity(prefix.len());
        for &p in prefix {
            if p == 0 || p as usize > degree {
                return Err(Error::PointOutOfRange {
                    point: p as u64,
                    degree,
                });
            }
            if !base.contains(&((p - 1) as usize)) {
                base.push((p - 1) as usize);
            }
        }
        let (strong_generators, levels) = schreier_sims(degree, &generators, &base);
        let order = levels.iter().map(|l| l.orbit.len() as u128).product();
        Ok(PermutationGroup {
            degree,
            generators,
            strong_generators,
            levels,
            order,
        })
    }

    pub fn trivial(degree: usize) -> Result<Self> {
        Self::new(degree, Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong_generators
    }

    /// Base points (1-based).
    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.point as u32 + 1).collect()
    }

    /// Orbit lengths along the stabilizer chain.
    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    fn check(&self, p: &Permutation) -> Result<()> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        Ok(())
    }

    /// Membership test by sifting through the stabilizer chain.
    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        self.check(p)?;
        Ok(self.contains_unchecked(p))
    }

    pub(crate) fn contains_unchecked(&self, p: &Permutation) -> bool {
        let (residue, level) = sift(&self.levels, 0, p);
        level == self.levels.len() && residue.is_identity()
    }

    /// The subgroup of `self` generated by `sub`'s generators together with `extra`.
    pub fn join(&self, sub: &PermutationGroup, extra: &[Permutation]) -> Result<PermutationGroup> {
        if sub.degree != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: sub.degree,
            });
        }
        for g in sub.generators.iter().chain(extra) {
            if !self.contains(g)? {
                return Err(Error::ElementOutsideGroup);
            }
        }
        let mut gens = sub.generators.clone();
        gens.extend(extra.iter().cloned());
        PermutationGroup::new(self.degree, gens)
    }

    /// All elements, sorted lexicographically by image sequence.
    pub fn enumerate_elements(&self, cap: u128) -> Result<Vec<Permutation>> {
        if self.order > cap {
            return Err(Error::CapExceeded {
                order: self.order,
                cap,
            });
        }
        let mut elements = vec![Permutation::identity(self.degree)];
        // an element factors as u_{k-1} ... u_1 u_0 with u_i from level i
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elements.len() * level.orbit.len());
            for e in &elements {
                for &x in &level.orbit {
                    next.push(e.then(level.transversal[x].as_ref().unwrap()));
                }
            }
            elements = next;
        }
        elements.sort_unstable();
        Ok(elements)
    }

    /// `self ≤ other`.
    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> Result<bool> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: other.degree,
                found: self.degree,
            });
        }
        if other.order % self.order != 0 {
            return Ok(false);
        }
        Ok(self.generators.iter().all(|g| other.contains_unchecked(g)))
    }

    /// Equality as sets of permutations.
    pub fn equals(&self, other: &PermutationGroup) -> Result<bool> {
        Ok(self.order == other.order && self.is_subgroup_of(other)?)
    }

    /// Orbits on 1-based points, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let n = self.degree;
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head];
                head += 1;
                for g in &self.generators {
                    let y = g.as_slice()[x] as usize;
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
            }
            let mut orbit: Vec<u32> = orbit.into_iter().map(|x| x as u32 + 1).collect();
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    /// Transitivity on ordered pairs of distinct points.
    pub fn is_2_transitive(&self) -> Result<bool> {
        let n = self.degree;
        if n < 2 {
            return Err(Error::DegreeTooSmall(n));
        }
        if self.order < (n * (n - 1)) as u128 {
            return Ok(false);
        }
        let mut seen = vec![false; n * n];
        let mut queue = VecDeque::new();
        seen[1] = true;
        queue.push_back((0usize, 1usize));
        let mut count = 1;
        while let Some((a, b)) = queue.pop_front() {
            for g in &self.generators {
                let (x, y) = (g.as_slice()[a] as usize, g.as_slice()[b] as usize);
                if !seen[x * n + y] {
                    seen[x * n + y] = true;
                    count += 1;
                    queue.push_back((x, y));
                }
            }
        }
        Ok(count == n * (n - 1))
    }

    /// `g⁻¹ G g`.
    pub fn conjugate(&self, g: &Permutation) -> Result<PermutationGroup> {
        self.check(g)?;
        let gens = self
            .generators
            .iter()
            .map(|x| g.inverse().then(x).then(g))
            .collect();
        PermutationGroup::new(self.degree, gens)
    }

    /// The stabilizer of a 1-based point.
    pub fn stabilizer(&self, point: u32) -> Result<PermutationGroup> {
        let chain =
            PermutationGroup::with_base_prefix(self.degree, self.generators.clone(), &[point])?;
        let x = (point - 1) as usize;
        let gens: Vec<Permutation> = chain
            .strong_generators
            .iter()
            .filter(|s| s.as_slice()[x] as usize == x)
            .cloned()
            .collect();
        PermutationGroup::new(self.degree, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse(text, Some(n)).unwrap()
    }

    fn g(n: usize, gens: &[&str]) -> PermutationGroup {
        PermutationGroup::new(n, gens.iter().map(|t| p(t, n)).collect()).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(g(4, &["(1 2)", "(1 2 3 4)"]).order(), 24);
        assert_eq!(g(5, &[]).order(), 1);
        assert_eq!(g(5, &["(1 2 3)", "(3 4 5)"]).order(), 60);
        assert_eq!(g(6, &["(1 2)", "(1 2 3 4 5 6)"]).order(), 720);
        assert_eq!(g(9, &["(1 2 3 4 5 6 7 8 9)", "(1 2)"]).order(), 362880);
    }

    #[test]
    fn build_rejects_mixed_degrees() {
        let err = PermutationGroup::new(4, vec![p("(1 2)", 3)]).unwrap_err();
        assert_eq!(
            err,
            Error::DegreeMismatch {
                expected: 4,
                found: 3
            }
        );
    }

    #[test]
    fn membership() {
        let a4 = g(4, &["(1 2 3)", "(2 3 4)"]);
        assert!(a4.contains(&p("(1 2)(3 4)", 4)).unwrap());
        assert!(!a4.contains(&p("(1 2)", 4)).unwrap());
        let v = g(4, &["(1 2)", "(3 4)"]);
        assert!(!v.contains(&p("(1 3)(2 4)", 4)).unwrap());
        assert!(a4.contains(&p("(1 2)", 5)).is_err());
    }

    #[test]
    fn joins() {
        let s4 = g(4, &["(1 2)", "(1 2 3 4)"]);
        let c3 = g(4, &["(1 2 3)"]);
        assert_eq!(s4.join(&c3, &[p("(1 2 3 4)", 4)]).unwrap().order(), 24);
        let s3 = g(3, &["(1 2)", "(1 2 3)"]);
        let t = g(3, &["(1 2)"]);
        assert_eq!(s3.join(&t, &[p("(1 2)", 3)]).unwrap().order(), 2);
        let triv = g(3, &[]);
        assert_eq!(s3.join(&triv, &[p("(1 2 3)", 3)]).unwrap().order(), 3);
        let a4 = g(4, &["(1 2 3)", "(2 3 4)"]);
        assert_eq!(
            a4.join(&c3, &[p("(1 2)", 4)]).unwrap_err(),
            Error::ElementOutsideGroup
        );
    }

    #[test]
    fn enumeration_is_sorted_and_capped() {
        let s3 = g(3, &["(1 2)", "(1 2 3)"]);
        let els = s3.enumerate_elements(DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(els.len(), 6);
        assert!(els.windows(2).all(|w| w[0] < w[1]));
        assert!(els[0].is_identity());
        let triv = g(3, &[]);
        assert_eq!(
            triv.enumerate_elements(10).unwrap(),
            vec![Permutation::identity(3)]
        );
        assert_eq!(
            s3.enumerate_elements(5).unwrap_err(),
            Error::CapExceeded { order: 6, cap: 5 }
        );
    }

    #[test]
    fn subgroups_and_equality() {
        let s4 = g(4, &["(1 2)", "(1 2 3 4)"]);
        let a4 = g(4, &["(1 2 3)", "(2 3 4)"]);
        assert!(a4.is_subgroup_of(&s4).unwrap());
        let s3 = g(4, &["(1 2)", "(1 2 3)"]);
        assert!(!s3.is_subgroup_of(&a4).unwrap());
        assert!(g(4, &["(1 2 3)"]).equals(&g(4, &["(1 3 2)"])).unwrap());
    }

    #[test]
    fn transitivity() {
        let s3 = g(3, &["(1 2)", "(1 2 3)"]);
        assert!(s3.is_2_transitive().unwrap());
        let c4 = g(4, &["(1 2 3 4)"]);
        assert!(c4.is_transitive());
        assert!(!c4.is_2_transitive().unwrap());
        assert_eq!(
            g(1, &[]).is_2_transitive().unwrap_err(),
            Error::DegreeTooSmall(1)
        );
        assert!(!g(4, &["(1 2)"]).is_transitive());
    }

    #[test]
    fn conjugation() {
        let t = g(3, &["(1 2)"]);
        let c = t.conjugate(&p("(2 3)", 3)).unwrap();
        assert!(c.equals(&g(3, &["(1 3)"])).unwrap());
        assert!(t
            .conjugate(&Permutation::identity(3))
            .unwrap()
            .equals(&t)
            .unwrap());
        let a4 = g(4, &["(1 2 3)", "(2 3 4)"]);
        assert!(a4.conjugate(&p("(1 2)", 4)).unwrap().equals(&a4).unwrap());
    }

    #[test]
    fn stabilizers() {
        let s5 = g(5, &["(1 2)", "(1 2 3 4 5)"]);
        let st = s5.stabilizer(5).unwrap();
        assert_eq!(st.order(), 24);
        assert!(st.generators().iter().all(|x| x.image(5) == 5));
        assert_eq!(g(5, &["(1 2)"]).stabilizer(4).unwrap().order(), 2);
    }

    #[test]
    fn rebuild_from_strong_generators() {
        let a5 = g(5, &["(1 2 3)", "(3 4 5)"]);
        let again = PermutationGroup::new(5, a5.strong_generators().to_vec()).unwrap();
        assert_eq!(again.order(), 60);
        assert!(again.equals(&a5).unwrap());
    }
}

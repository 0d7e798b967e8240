//! Concrete groups: symmetric and alternating groups, Young subgroups, point
//! stabilizers, and PSL(2,q) acting on the projective line.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FiniteField};
use crate::group::PermutationGroup;
use crate::perm::Permutation;

fn cycle_on(degree: usize, points: &[u32]) -> Permutation {
    Permutation::from_cycles(degree, &[points]).expect("valid cycle")
}

/// The symmetric group on `{1..n}`, generated by `(1 2)` and `(1 2 ... n)`.
pub fn symmetric(n: usize) -> Result<PermutationGroup> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle_on(n, &[1, 2]));
    }
    if n >= 3 {
        let all: Vec<u32> = (1..=n as u32).collect();
        gens.push(cycle_on(n, &all));
    }
    PermutationGroup::new(n, gens)
}

/// The alternating group on `{1..n}`, generated by the 3-cycles `(1 2 k)`.
pub fn alternating(n: usize) -> Result<PermutationGroup> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let gens = (3..=n as u32).map(|k| cycle_on(n, &[1, 2, k])).collect();
    PermutationGroup::new(n, gens)
}

/// Full symmetric group on a set of points, as generators of degree `n`.
fn symmetric_on(n: usize, points: &[u32]) -> Vec<Permutation> {
    let mut gens = Vec::new();
    if points.len() >= 2 {
        gens.push(cycle_on(n, &points[..2]));
    }
    if points.len() >= 3 {
        gens.push(cycle_on(n, points));
    }
    gens
}

/// `S_A × S_B` for a partition `{1..n} = A ⊔ B` with both parts nonempty.
pub fn young_subgroup(n: usize, first: &[u32], second: &[u32]) -> Result<PermutationGroup> {
    if first.is_empty() || second.is_empty() || first.len() + second.len() != n {
        return Err(Error::InvalidPartition);
    }
    let mut seen = alloc::vec![false; n];
    for &p in first.iter().chain(second) {
        if p == 0 || p as usize > n || seen[(p - 1) as usize] {
            return Err(Error::InvalidPartition);
        }
        seen[(p - 1) as usize] = true;
    }
    let mut gens = symmetric_on(n, first);
    gens.extend(symmetric_on(n, second));
    PermutationGroup::new(n, gens)
}

/// `{g ∈ G : g(x) = x}` for a 1-based point `x`.
pub fn point_stabilizer(group: &PermutationGroup, x: u32) -> Result<PermutationGroup> {
    if x == 0 || x as usize > group.degree() {
        return Err(Error::PointOutOfRange {
            point: x as u64,
            degree: group.degree(),
        });
    }
    group.stabilizer(x)
}

/// A point of PG(1,q).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ProjectivePoint {
    Affine(FieldElement),
    Infinity,
}

/// The projective line over a finite field with its canonical indexing:
/// affine points `z` get index `code(z) + 1`, and ∞ gets `q + 1`.
#[derive(Debug, Clone)]
pub struct ProjectiveLine {
    field: FiniteField,
}

impl ProjectiveLine {
    pub fn new(field: FiniteField) -> Self {
        ProjectiveLine { field }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.field.order() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index(&self, point: ProjectivePoint) -> u32 {
        match point {
            ProjectivePoint::Affine(z) => z as u32 + 1,
            ProjectivePoint::Infinity => self.field.order() as u32 + 1,
        }
    }

    pub fn point(&self, index: u32) -> Option<ProjectivePoint> {
        let q = self.field.order() as u32;
        match index {
            0 => None,
            i if i <= q => Some(ProjectivePoint::Affine((i - 1) as u64)),
            i if i == q + 1 => Some(ProjectivePoint::Infinity),
            _ => None,
        }
    }

    /// Image of a point under `z ↦ (az + b)/(cz + d)`.
    pub fn mobius(&self, m: [FieldElement; 4], point: ProjectivePoint) -> ProjectivePoint {
        let f = &self.field;
        let [a, b, c, d] = m;
        let (num, den) = match point {
            ProjectivePoint::Affine(z) => (f.add(f.mul(a, z), b), f.add(f.mul(c, z), d)),
            ProjectivePoint::Infinity => (a, c),
        };
        match f.inv(den) {
            Some(inv) => ProjectivePoint::Affine(f.mul(num, inv)),
            None => ProjectivePoint::Infinity,
        }
    }

    /// The permutation of point indices induced by an invertible matrix `[[a, b], [c, d]]`.
    pub fn action(&self, m: [FieldElement; 4]) -> Permutation {
        let images: Vec<u32> = (1..=self.len() as u32)
            .map(|i| self.index(self.mobius(m, self.point(i).unwrap())) - 1)
            .collect();
        Permutation::from_raw(images)
    }
}

/// PSL(2,q) on the `q + 1` points of PG(1,q), for prime powers `q ≥ 4`.
///
/// SL(2,q) is generated by the unitriangular matrices `[[1, e], [0, 1]]` for
/// `e` running over a basis of GF(q) over GF(p), together with `[[0, 1], [-1, 0]]`.
/// Scalars act trivially, so the permutation image is PSL(2,q).
pub fn psl2(q: u64) -> Result<(PermutationGroup, ProjectiveLine)> {
    let field = FiniteField::new(q)?;
    if q < 4 {
        return Err(Error::UnsupportedField(q));
    }
    let line = ProjectiveLine::new(field);
    let f = line.field();
    let (zero, one) = (f.zero(), f.one());
    let mut gens = Vec::new();
    for i in 0..f.degree() as usize {
        let mut coeffs = alloc::vec![0u64; i + 1];
        coeffs[i] = 1;
        gens.push(line.action([one, f.encode(&coeffs), zero, one]));
    }
    gens.push(line.action([zero, one, f.neg(one), zero]));
    let group = PermutationGroup::new(line.len(), gens)?;
    Ok((group, line))
}

/// `q(q² − 1) / gcd(2, q − 1)`.
pub fn psl2_order(q: u64) -> u128 {
    let q = q as u128;
    let g = if q % 2 == 1 { 2 } else { 1 };
    q * (q * q - 1) / g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_and_alternating_orders() {
        assert_eq!(symmetric(5).unwrap().order(), 120);
        assert_eq!(symmetric(1).unwrap().order(), 1);
        assert_eq!(symmetric(2).unwrap().order(), 2);
        assert_eq!(alternating(3).unwrap().order(), 3);
        assert_eq!(alternating(6).unwrap().order(), 360);
        assert_eq!(alternating(2).unwrap().order(), 1);
        assert_eq!(symmetric(0).unwrap_err(), Error::ZeroDegree);
        assert_eq!(alternating(0).unwrap_err(), Error::ZeroDegree);
    }

    #[test]
    fn young_subgroups() {
        assert_eq!(young_subgroup(5, &[1, 2], &[3, 4, 5]).unwrap().order(), 12);
        assert_eq!(young_subgroup(4, &[1], &[2, 3, 4]).unwrap().order(), 6);
        let y = young_subgroup(7, &[1, 2], &[3, 4, 5, 6, 7]).unwrap();
        let g = Permutation::parse("(3 4 5 6 7)(1 2)", Some(7)).unwrap();
        assert!(y.contains(&g).unwrap());
        assert_eq!(
            y.orbits(),
            alloc::vec![alloc::vec![1, 2], alloc::vec![3, 4, 5, 6, 7]]
        );
        assert_eq!(
            young_subgroup(4, &[1, 2], &[2, 3]).unwrap_err(),
            Error::InvalidPartition
        );
        assert_eq!(
            young_subgroup(3, &[], &[1, 2, 3]).unwrap_err(),
            Error::InvalidPartition
        );
    }

    #[test]
    fn psl2_examples() {
        let (g5, _) = psl2(5).unwrap();
        assert_eq!((g5.degree(), g5.order()), (6, 60));
        let (g9, _) = psl2(9).unwrap();
        assert_eq!((g9.degree(), g9.order()), (10, 360));
        let (g4, _) = psl2(4).unwrap();
        assert_eq!((g4.degree(), g4.order()), (5, 60));
        assert_eq!(psl2(3).unwrap_err(), Error::UnsupportedField(3));
        assert_eq!(psl2(2).unwrap_err(), Error::UnsupportedField(2));
        assert_eq!(psl2(6).unwrap_err(), Error::NotPrimePower(6));
    }

    #[test]
    fn infinity_stabilizers() {
        let (g5, line) = psl2(5).unwrap();
        let inf = line.index(ProjectivePoint::Infinity);
        assert_eq!(inf, 6);
        assert_eq!(point_stabilizer(&g5, inf).unwrap().order(), 10);
        let (g4, line) = psl2(4).unwrap();
        assert_eq!(
            point_stabilizer(&g4, line.index(ProjectivePoint::Infinity))
                .unwrap()
                .order(),
            12
        );
        assert!(point_stabilizer(&g4, 6).is_err());
    }

    #[test]
    fn point_indexing() {
        let line = ProjectiveLine::new(FiniteField::new(9).unwrap());
        assert_eq!(line.len(), 10);
        for i in 1..=10 {
            assert_eq!(line.index(line.point(i).unwrap()), i);
        }
        assert_eq!(line.point(11), None);
        assert_eq!(line.point(0), None);
    }
}

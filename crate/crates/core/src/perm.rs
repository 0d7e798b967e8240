//! Permutations of `{1..n}` and their cycle structure.
//!
//! Points are 1-based in every public signature. Composition is a right
//! action: `p.compose(&q)` applies `p` first and then `q`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A bijection of `{1..degree}`, stored as its image sequence.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    // images[i] is the 0-based image of the 0-based point i
    images: Vec<u32>,
}

/// Parity of a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// Parity of a product.
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Multiset of cycle lengths, fixed points included, in descending order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType(Vec<usize>);

impl CycleType {
    /// Builds a cycle type from arbitrary lengths; zeros are rejected.
    pub fn new(mut lengths: Vec<usize>) -> Result<Self> {
        if lengths.contains(&0) {
            return Err(Error::Malformed("cycle length 0"));
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType(lengths))
    }

    pub fn lengths(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of permutations of this cycle type in the symmetric group.
    pub fn class_size(&self) -> u128 {
        let n = self.degree();
        let mut size: u128 = (1..=n as u128).product();
        let mut i = 0;
        while i < self.0.len() {
            let len = self.0[i];
            let mut mult = 0;
            while i < self.0.len() && self.0[i] == len {
                mult += 1;
                i += 1;
            }
            size /= (len as u128).pow(mult);
            size /= (1..=mult as u128).product::<u128>();
        }
        size
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("]")
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 1-based images: `images[i]` is the image of point `i + 1`.
    pub fn from_images(images: &[u32]) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::ZeroDegree);
        }
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img as usize > n {
                return Err(Error::PointOutOfRange {
                    point: img as u64,
                    degree: n,
                });
            }
            let i = (img - 1) as usize;
            if seen[i] {
                return Err(Error::NotABijection);
            }
            seen[i] = true;
            zero_based.push(i as u32);
        }
        Ok(Permutation { images: zero_based })
    }

    /// Builds a permutation from 0-based images without validation.
    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i as u32 == x)
        });
        Permutation { images }
    }

    /// Builds a permutation of the given degree from disjoint cycles of 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &p in cycle.iter() {
                if p == 0 || p as usize > degree {
                    return Err(Error::PointOutOfRange {
                        point: p as u64,
                        degree,
                    });
                }
                if used[(p - 1) as usize] {
                    return Err(Error::RepeatedPoint(p));
                }
                used[(p - 1) as usize] = true;
            }
            for (k, &p) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                images[(p - 1) as usize] = next - 1;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based point.
    ///
    /// Panics if the point is outside `1..=degree`.
    pub fn image(&self, point: u32) -> u32 {
        self.images[(point - 1) as usize] + 1
    }

    /// 0-based image sequence.
    pub fn as_slice(&self) -> &[u32] {
        &self.images
    }

    /// 1-based image sequence.
    pub fn images(&self) -> Vec<u32> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(self.then(other))
    }

    /// `self` followed by `other`; degrees must already agree.
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `other⁻¹ · self · other`, i.e. the image of `self` under conjugation by `other`.
    pub fn conjugate_by(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(other.inverse().then(self).then(other))
    }

    pub fn pow(&self, mut exp: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            exp >>= 1;
        }
        acc
    }

    pub(crate) fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(())
    }

    /// Disjoint cycles of 1-based points, each starting at its smallest point,
    /// ordered by that point. Fixed points are omitted.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32 + 1);
                x = self.images[x] as usize;
            }
            cycles.push(cycle);
        }
        cycles
    }

    fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x] as usize;
            }
            lengths.push(len);
        }
        lengths
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut lengths = self.cycle_lengths();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(lengths)
    }

    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.cycle_lengths().iter().map(|l| l - 1).sum();
        if transpositions % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Least `k ≥ 1` with `self^k = 1`.
    pub fn order(&self) -> u64 {
        self.cycle_lengths()
            .into_iter()
            .fold(1u64, |acc, l| acc / gcd(acc, l as u64) * l as u64)
    }

    /// 1-based points left fixed, ascending.
    pub fn fixed_points(&self) -> Vec<u32> {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &x)| *i as u32 == x)
            .map(|(i, _)| i as u32 + 1)
            .collect()
    }

    /// Canonical disjoint-cycle text, e.g. `(1 2 3)(4 5)`; the identity is `()`.
    pub fn render(&self) -> String {
        use core::fmt::Write;
        let cycles = self.cycles();
        if cycles.is_empty() {
            return String::from("()");
        }
        let mut out = String::new();
        for cycle in cycles {
            out.push('(');
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "{p}");
            }
            out.push(')');
        }
        out
    }

    /// Parses disjoint-cycle notation. Without an explicit degree the largest
    /// mentioned point is used.
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Permutation> {
        let cycles = parse_cycles(text)?;
        let largest = cycles.iter().flatten().copied().max();
        let degree = match (degree, largest) {
            (Some(d), _) => d,
            (None, Some(m)) => m as usize,
            (None, None) => return Err(Error::Malformed("cannot infer the degree of ()")),
        };
        let refs: Vec<&[u32]> = cycles.iter().map(|c| c.as_slice()).collect();
        Permutation::from_cycles(degree, &refs)
    }
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<u32>>> {
    let mut cycles = Vec::new();
    let mut current: Option<Vec<u32>> = None;
    let mut number: Option<u64> = None;
    let mut saw_paren = false;

    fn flush(number: &mut Option<u64>, current: &mut Option<Vec<u32>>) -> Result<()> {
        if let Some(n) = number.take() {
            match current {
                Some(c) => {
                    if n == 0 || n > u32::MAX as u64 {
                        return Err(Error::PointOutOfRange {
                            point: n,
                            degree: 0,
                        });
                    }
                    c.push(n as u32);
                }
                None => return Err(Error::Malformed("point outside parentheses")),
            }
        }
        Ok(())
    }

    for ch in text.chars() {
        match ch {
            '0'..='9' => {
                let d = ch as u64 - '0' as u64;
                let n = number.unwrap_or(0);
                number = Some(
                    n.checked_mul(10)
                        .and_then(|n| n.checked_add(d))
                        .ok_or(Error::Malformed("point too large"))?,
                );
            }
            '(' => {
                flush(&mut number, &mut current)?;
                if current.is_some() {
                    return Err(Error::Malformed("nested parenthesis"));
                }
                saw_paren = true;
                current = Some(Vec::new());
            }
            ')' => {
                flush(&mut number, &mut current)?;
                match current.take() {
                    Some(c) => {
                        if !c.is_empty() {
                            cycles.push(c);
                        }
                    }
                    None => return Err(Error::Malformed("unbalanced ')'")),
                }
            }
            ',' => flush(&mut number, &mut current)?,
            c if c.is_whitespace() => flush(&mut number, &mut current)?,
            _ => return Err(Error::Malformed("unexpected character")),
        }
    }
    if current.is_some() || number.is_some() {
        return Err(Error::Malformed("unterminated cycle"));
    }
    if !saw_paren {
        return Err(Error::Malformed("expected cycle notation"));
    }
    // repeated points across cycles are caught by from_cycles, inside one cycle here
    for c in &cycles {
        for (i, p) in c.iter().enumerate() {
            if c[..i].contains(p) {
                return Err(Error::RepeatedPoint(*p));
            }
        }
    }
    Ok(cycles)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[deg {}]", self.render(), self.degree())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::parse(s, None)
    }
}

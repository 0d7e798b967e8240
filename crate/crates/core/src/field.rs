//! Finite fields GF(p^f) as polynomials over GF(p) modulo a fixed irreducible.
//!
//! Elements are encoded as integers in `0..q`. The encoding orders elements
//! lexicographically by coefficient sequence `(c0, c1, ..., c_{f-1})`, with the
//! constant term most significant, so code order is the canonical element order.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Element code, in `0..q`.
pub type FieldElement = u64;

/// Largest field size the constructors accept.
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    f: u32,
    q: u64,
    // c0..c_{f-1}, then the leading 1
    modulus: Vec<u64>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q = p^f` with `p` prime, or `None`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut f = 0;
    while rest % p == 0 {
        rest /= p;
        f += 1;
    }
    (rest == 1).then_some((p, f))
}

// Polynomials over GF(p) as coefficient vectors, constant term first.

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let m = trim(m.to_vec());
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = mod_pow(m[dm], p - 2, p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let factor = r[r.len() - 1] * lead_inv % p;
        for (i, &c) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - factor * c % p) % p;
        }
        r = trim(r);
    }
    r
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Exhaustive test: no monic polynomial of degree `1..=deg/2` divides `poly`.
pub fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let poly = trim(poly.to_vec());
    if poly.len() < 2 {
        return false;
    }
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for lower in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut x = lower;
            for _ in 0..d {
                divisor.push(x % p);
                x /= p;
            }
            divisor.push(1);
            if poly_rem(&poly, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// The field of order `q`, using the lexicographically smallest monic
    /// irreducible of degree `f` (coefficients compared from the constant term up).
    pub fn new(q: u64) -> Result<Self> {
        let (p, f) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_FIELD_SIZE {
            return Err(Error::UnsupportedField(q));
        }
        let modulus = if f == 1 {
            vec![0, 1]
        } else {
            // lexicographic order on (c0, ..., c_{f-1}) is code order
            (0..q)
                .map(|code| {
                    let mut m = decode(code, p, f);
                    m.push(1);
                    m
                })
                .find(|m| is_irreducible(m, p))
                .expect("an irreducible polynomial of every degree exists")
        };
        Ok(FiniteField { p, f, q, modulus })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients from the constant term up, including the leading 1.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        0
    }

    pub fn one(&self) -> FieldElement {
        self.encode(&[1])
    }

    /// Coefficients `(c0, ..., c_{f-1})` of an element.
    pub fn coefficients(&self, a: FieldElement) -> Vec<u64> {
        decode(a, self.p, self.f)
    }

    /// Element with the given coefficients (missing high coefficients are zero).
    pub fn encode(&self, coeffs: &[u64]) -> FieldElement {
        let mut code = 0;
        for i in 0..self.f as usize {
            code = code * self.p + coeffs.get(i).copied().unwrap_or(0) % self.p;
        }
        code
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        0..self.q
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (x, y) = (self.coefficients(a), self.coefficients(b));
        let sum: Vec<u64> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let x: Vec<u64> = self
            .coefficients(a)
            .into_iter()
            .map(|c| (self.p - c) % self.p)
            .collect();
        self.encode(&x)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (x, y) = (self.coefficients(a), self.coefficients(b));
        let mut prod = vec![0u64; 2 * self.f as usize];
        for (i, &u) in x.iter().enumerate() {
            for (j, &v) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u * v) % self.p;
            }
        }
        self.encode(&poly_rem(&prod, &self.modulus, self.p))
    }

    pub fn pow(&self, a: FieldElement, mut exp: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        (a != 0).then(|| self.pow(a, self.q - 2))
    }
}

fn decode(code: u64, p: u64, f: u32) -> Vec<u64> {
    let mut coeffs = vec![0u64; f as usize];
    let mut x = code;
    for i in (0..f as usize).rev() {
        coeffs[i] = x % p;
        x /= p;
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(4), Some((2, 2)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(FiniteField::new(6).unwrap_err(), Error::NotPrimePower(6));
    }

    #[test]
    fn moduli() {
        assert_eq!(FiniteField::new(4).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FiniteField::new(9).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FiniteField::new(5).unwrap().modulus(), &[0, 1]);
        assert_eq!(FiniteField::new(8).unwrap().modulus(), &[1, 0, 1, 1]);
    }

    #[test]
    fn encoding_is_lexicographic() {
        let f = FiniteField::new(9).unwrap();
        let all: Vec<Vec<u64>> = f.elements().map(|a| f.coefficients(a)).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(f.one(), 3);
        assert_eq!(f.coefficients(1), vec![0, 1]);
    }

    #[test]
    fn inverses() {
        for q in [4, 5, 7, 8, 9, 11, 13, 16] {
            let f = FiniteField::new(q).unwrap();
            assert_eq!(f.inv(0), None);
            for a in 1..q {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            }
        }
    }
}

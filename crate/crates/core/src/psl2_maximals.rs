//! Known maximal subgroups of PSL(2,q), as (order, structure label) shapes,
//! for matching against lattice computations.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::prime_power;
use crate::lattice::StructureLabel;

/// Which congruence condition to use for the `A_4` family when `q` is an odd prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum A4Condition {
    /// `q ≡ ±3 (mod 8)` and `q ≡ ±1 (mod 10)`.
    AsPrinted,
    /// `q ≡ ±3 (mod 8)` and `q ≢ ±1 (mod 10)`; the condition under which
    /// `A_4` is actually maximal.
    Standard,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedMaximal {
    /// Case letter and item number, e.g. `"B3"`.
    pub entry: &'static str,
    pub order: u128,
    pub label: StructureLabel,
}

fn pgl2_order(q0: u128) -> u128 {
    q0 * (q0 * q0 - 1)
}

fn pow_root(q: u64, r: u32) -> Option<u64> {
    let mut x = 2u64;
    while x.checked_pow(r).is_some_and(|v| v <= q) {
        if x.pow(r) == q {
            return Some(x);
        }
        x += 1;
    }
    None
}

fn primes_dividing(n: u32) -> Vec<u32> {
    (2..=n)
        .filter(|d| n % d == 0 && (2..*d).all(|k| d % k != 0))
        .collect()
}

/// The maximal-subgroup shapes of PSL(2,q) for a prime power `q ≥ 4`.
pub fn expected_maximals(q: u64, a4: A4Condition) -> Result<Vec<ExpectedMaximal>> {
    let (p, f) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if q < 4 {
        return Err(Error::UnsupportedField(q));
    }
    let qq = q as u128;
    let mut out = Vec::new();
    let mut push = |entry, order, label| {
        out.push(ExpectedMaximal {
            entry,
            order,
            label,
        })
    };
    if p == 2 {
        let borel = if q == 4 {
            StructureLabel::Alternating4
        } else {
            StructureLabel::ElementaryAbelianExtension
        };
        push("A1", qq * (qq - 1), borel);
        push("A2", 2 * (qq - 1), StructureLabel::Dihedral);
        push("A3", 2 * (qq + 1), StructureLabel::Dihedral);
        for r in primes_dividing(f) {
            let q0 = pow_root(q, r).expect("exact root");
            if q0 != 2 {
                let label = if q0 == 4 {
                    StructureLabel::Alternating5
                } else {
                    StructureLabel::Other
                };
                push("A4", pgl2_order(q0 as u128), label);
            }
        }
        return Ok(out);
    }

    let borel = if q == 5 {
        StructureLabel::Dihedral
    } else {
        StructureLabel::ElementaryAbelianExtension
    };
    push("B1", qq * (qq - 1) / 2, borel);
    if q >= 13 {
        push("B2", qq - 1, StructureLabel::Dihedral);
    }
    if q != 7 && q != 9 {
        push("B3", qq + 1, StructureLabel::Dihedral);
    }
    if f % 2 == 0 {
        let q0 = pow_root(q, 2).expect("square");
        let label = if q0 == 3 {
            StructureLabel::Symmetric4
        } else {
            StructureLabel::Other
        };
        push("B4", pgl2_order(q0 as u128), label);
    }
    for r in primes_dividing(f).into_iter().filter(|&r| r != 2) {
        let q0 = pow_root(q, r).expect("exact root");
        let label = match q0 {
            3 => StructureLabel::Alternating4,
            5 => StructureLabel::Alternating5,
            _ => StructureLabel::Other,
        };
        push("B5", pgl2_order(q0 as u128) / 2, label);
    }
    let pm1_mod10 = |x: u64| x % 10 == 1 || x % 10 == 9;
    let pm3_mod10 = |x: u64| x % 10 == 3 || x % 10 == 7;
    if (f == 1 && pm1_mod10(q)) || (f == 2 && pm3_mod10(p)) {
        push("B6", 60, StructureLabel::Alternating5);
    }
    if f == 1 && (q % 8 == 3 || q % 8 == 5) {
        let ten = pm1_mod10(q);
        let holds = match a4 {
            A4Condition::AsPrinted => ten,
            A4Condition::Standard => !ten,
        };
        if holds {
            push("B7", 12, StructureLabel::Alternating4);
        }
    }
    if f == 1 && (q % 8 == 1 || q % 8 == 7) {
        push("B8", 24, StructureLabel::Symmetric4);
    }
    Ok(out)
}

/// Result of matching observed maximal subgroups against the expected shapes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InventoryMatch {
    /// Observed `(order, label)` pairs with no expected entry.
    pub unexpected: Vec<(u128, StructureLabel)>,
    /// Expected entries with no observed maximal subgroup.
    pub missing: Vec<ExpectedMaximal>,
}

impl InventoryMatch {
    pub fn is_exact(&self) -> bool {
        self.unexpected.is_empty() && self.missing.is_empty()
    }
}

pub fn match_inventory(
    observed: &[(u128, StructureLabel)],
    expected: &[ExpectedMaximal],
) -> InventoryMatch {
    let hit = |e: &ExpectedMaximal, o: &(u128, StructureLabel)| e.order == o.0 && e.label == o.1;
    InventoryMatch {
        unexpected: observed
            .iter()
            .filter(|o| !expected.iter().any(|e| hit(e, o)))
            .cloned()
            .collect(),
        missing: expected
            .iter()
            .filter(|e| !observed.iter().any(|o| hit(e, o)))
            .cloned()
            .collect(),
    }
}

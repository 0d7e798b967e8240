//! Textual group descriptions accepted on the command line.
//!
//! | form                   | group                                         |
//! |------------------------|-----------------------------------------------|
//! | `S5`, `S_5`            | symmetric group on 5 points                   |
//! | `A5`, `A_5`            | alternating group on 5 points                 |
//! | `C4`                   | cyclic group generated by `(1 2 3 4)`         |
//! | `D10`                  | dihedral group of order 10 on 5 points        |
//! | `PSL(2,7)`             | PSL(2,7) on the projective line               |
//! | `deg=4;gens=(1 2),(3 4)` | explicit generators                         |

use ffgroups_core::constructors::{alternating, psl2, symmetric};
use ffgroups_core::{Permutation, PermutationGroup};

use crate::error::{HarnessError, Result};

/// A parsed group together with a normalized name.
#[derive(Debug, Clone)]
pub struct NamedGroup {
    pub name: String,
    pub group: PermutationGroup,
}

/// Splits a generator list on commas that are not inside a cycle.
pub fn split_generators(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' | ';' if depth == 0 => {
                parts.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(text[start..].trim());
    parts.into_iter().filter(|p| !p.is_empty()).collect()
}

pub fn parse_generators(text: &str, degree: usize) -> Result<Vec<Permutation>> {
    split_generators(text)
        .into_iter()
        .map(|p| Permutation::parse(p, Some(degree)).map_err(HarnessError::from))
        .collect()
}

fn number(text: &str) -> Option<usize> {
    let t = text.strip_prefix('_').unwrap_or(text);
    if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    t.parse().ok()
}

fn cyclic(n: usize) -> Result<PermutationGroup> {
    let cycle: Vec<u32> = (1..=n as u32).collect();
    let gens = if n >= 2 {
        vec![Permutation::from_cycles(n, &[&cycle[..]])?]
    } else {
        Vec::new()
    };
    Ok(PermutationGroup::new(n, gens)?)
}

/// Dihedral group of order `order`, acting on `order / 2` points.
fn dihedral(order: usize) -> Result<PermutationGroup> {
    if order < 6 || order % 2 != 0 {
        return Err(HarnessError::Usage(format!(
            "dihedral groups need an even order of at least 6, got {order}"
        )));
    }
    let m = order / 2;
    let rotation: Vec<u32> = (1..=m as u32).collect();
    let pairs: Vec<[u32; 2]> = (2..=m as u32)
        .map(|i| [i, m as u32 + 2 - i])
        .filter(|[a, b]| a < b)
        .collect();
    let reflection: Vec<&[u32]> = pairs.iter().map(|p| &p[..]).collect();
    let gens = vec![
        Permutation::from_cycles(m, &[&rotation[..]])?,
        Permutation::from_cycles(m, &reflection)?,
    ];
    Ok(PermutationGroup::new(m, gens)?)
}

fn explicit(text: &str) -> Option<Result<NamedGroup>> {
    let rest = text.strip_prefix("deg=")?;
    let (deg, gens) = rest.split_once(";gens=").unwrap_or((rest, ""));
    let degree = number(deg.trim())?;
    Some((|| {
        let gens = parse_generators(gens, degree)?;
        let group = PermutationGroup::new(degree, gens)?;
        Ok(NamedGroup {
            name: text.to_string(),
            group,
        })
    })())
}

/// Parses a group description; see the module docs for accepted forms.
pub fn parse_group(text: &str) -> Result<NamedGroup> {
    let t = text.trim();
    if let Some(g) = explicit(t) {
        return g;
    }
    let compact: String = t.chars().filter(|c| !c.is_whitespace()).collect();
    let upper = compact.to_ascii_uppercase();
    let unknown = || HarnessError::UnknownGroup(text.to_string());
    if let Some(inner) = upper
        .strip_prefix("PSL(2,")
        .or_else(|| upper.strip_prefix("L2("))
        .and_then(|s| s.strip_suffix(')'))
    {
        let q: u64 = inner.parse().map_err(|_| unknown())?;
        return Ok(NamedGroup {
            name: format!("PSL(2,{q})"),
            group: psl2(q)?.0,
        });
    }
    let (kind, n) = upper.split_at(1.min(upper.len()));
    let n = number(n).ok_or_else(unknown)?;
    let (name, group) = match kind {
        "S" => (format!("S{n}"), symmetric(n)?),
        "A" => (format!("A{n}"), alternating(n)?),
        "C" if n >= 1 => (format!("C{n}"), cyclic(n)?),
        "D" => (format!("D{n}"), dihedral(n)?),
        _ => return Err(unknown()),
    };
    Ok(NamedGroup { name, group })
}

/// `<(1 2), (3 4)>`, with `<>` for the trivial group.
pub fn render_subgroup(generators: &[Permutation]) -> String {
    let gens: Vec<String> = generators.iter().map(|g| g.render()).collect();
    format!("<{}>", gens.join(", "))
}

//! The built-in catalog of small groups and the group-spec grammar.
//!
//! A group spec is either a name (`S3`, `D4`, `Q8`, `C12`, `Dih10`, products
//! joined with `x` such as `Z3xZ3` or `C4xC2`) or explicit generators in cycle
//! notation on 0-based points: `perm:(0 1)(2 3),(0 1 2)`.

use std::sync::Arc;

use crate::autos::find_isomorphism;
use crate::config::Config;
use crate::error::{GroupError, SpecError};
use crate::group::FiniteGroup;
use crate::perm::Perm;

/// Canonical catalog names in identification order. `Dih8` is accepted as an
/// alias of `D4` (both mean the dihedral group of order 8); `Zk` is an alias of
/// `Ck`. The dihedral names carry the group order: `Dih2n` has order `2n`.
pub const CATALOG: [&str; 44] = [
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C13", "C14",
    "C15", "C16", "C17", "C18", "C19", "C20", "C21", "C22", "C23", "C24", "V4", "S3", "S4", "A4",
    "D4", "Q8", "Z3xZ3", "Z2xZ2xZ2", "C4xC2", "Dih2", "Dih4", "Dih6", "Dih10", "Dih12", "Dih14",
    "Dih16", "Dih18", "Dih20", "Dih22", "Dih24",
];

pub fn catalog_names() -> &'static [&'static str] {
    &CATALOG
}

/// Order of a catalog group, without building it.
pub fn catalog_order(name: &str) -> Option<usize> {
    name.split('x')
        .map(|atom| atom_generators(atom).map(|a| a.order))
        .product()
}

struct Atom {
    order: usize,
    gens: Vec<Perm>,
}

fn cycle(n: usize) -> Perm {
    Perm::new((0..n).map(|i| (i + 1) % n).collect()).unwrap()
}

fn reflection(n: usize) -> Perm {
    Perm::new((0..n).map(|i| (n - i) % n).collect()).unwrap()
}

fn p(n: usize, cycles: &[&[usize]]) -> Perm {
    let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
    Perm::from_cycles(n, &cycles).unwrap()
}

/// Generators for a single catalog atom (no `x`). Handles the `Zk` and `Dih8`
/// aliases.
fn atom_generators(name: &str) -> Option<Atom> {
    if let Some(rest) = name.strip_prefix('C').or_else(|| name.strip_prefix('Z')) {
        let k: usize = rest.parse().ok().filter(|&k| k >= 1)?;
        let gens = if k == 1 {
            vec![Perm::identity(1)]
        } else {
            vec![cycle(k)]
        };
        return Some(Atom { order: k, gens });
    }
    if let Some(rest) = name.strip_prefix("Dih") {
        let k: usize = rest.parse().ok()?;
        if k < 2 || !k.is_multiple_of(2) {
            return None;
        }
        let n = k / 2;
        let gens = match n {
            1 => vec![p(2, &[&[0, 1]])],
            2 => vec![p(4, &[&[0, 1], &[2, 3]]), p(4, &[&[0, 2], &[1, 3]])],
            _ => vec![cycle(n), reflection(n)],
        };
        return Some(Atom { order: k, gens });
    }
    let (order, gens) = match name {
        "V4" => (4, vec![p(4, &[&[0, 1]]), p(4, &[&[2, 3]])]),
        "S3" => (6, vec![p(3, &[&[0, 1]]), p(3, &[&[0, 1, 2]])]),
        "S4" => (24, vec![p(4, &[&[0, 1]]), p(4, &[&[0, 1, 2, 3]])]),
        "A4" => (12, vec![p(4, &[&[0, 1, 2]]), p(4, &[&[1, 2, 3]])]),
        "D4" | "Dih8" => (8, vec![p(4, &[&[0, 1, 2, 3]]), p(4, &[&[0, 2]])]),
        "Q8" => (
            8,
            vec![
                p(8, &[&[0, 1, 2, 3], &[4, 5, 6, 7]]),
                p(8, &[&[0, 4, 2, 6], &[1, 7, 3, 5]]),
            ],
        ),
        _ => return None,
    };
    Some(Atom { order, gens })
}

/// Builds a catalog group (canonical names and aliases, including `x` products
/// of atoms).
pub fn catalog_group(name: &str, cfg: &Config) -> Result<Arc<FiniteGroup>, SpecError> {
    let atoms: Vec<&str> = name.split('x').collect();
    let mut parts = Vec::with_capacity(atoms.len());
    for a in &atoms {
        match atom_generators(a) {
            Some(atom) => parts.push(atom),
            None => {
                return Err(SpecError::UnknownName {
                    name: name.to_string(),
                })
            }
        }
    }
    let gens = direct_product_generators(&parts);
    let display = canonical_name(name);
    Ok(Arc::new(FiniteGroup::from_generators(
        display,
        &gens,
        cfg.closure_bound,
    )?))
}

fn canonical_name(name: &str) -> String {
    if name == "Dih8" {
        return "D4".to_string();
    }
    name.to_string()
}

/// Embeds each factor's generators on disjoint points.
fn direct_product_generators(parts: &[Atom]) -> Vec<Perm> {
    let total: usize = parts.iter().map(|a| a.gens[0].degree()).sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for part in parts {
        let d = part.gens[0].degree();
        for g in &part.gens {
            let mut images: Vec<usize> = (0..total).collect();
            for i in 0..d {
                images[offset + i] = offset + g.apply(i);
            }
            gens.push(Perm::new(images).unwrap());
        }
        offset += d;
    }
    gens
}

/// Parses the full group-spec grammar.
pub fn parse_group_spec(spec: &str, cfg: &Config) -> Result<Arc<FiniteGroup>, SpecError> {
    let spec = spec.trim();
    if let Some(body) = spec.strip_prefix("perm:") {
        return parse_perm_spec(spec, body, cfg);
    }
    catalog_group(spec, cfg)
}

fn parse_perm_spec(full: &str, body: &str, cfg: &Config) -> Result<Arc<FiniteGroup>, SpecError> {
    let base = full.len() - body.len();
    let mut perm_cycles: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut max_point = 0usize;
    for (chunk_start, chunk) in split_top_level(body) {
        let cycles = parse_cycles(chunk, base + chunk_start)?;
        for c in &cycles {
            for &pt in c {
                max_point = max_point.max(pt);
            }
        }
        perm_cycles.push(cycles);
    }
    if perm_cycles.is_empty() {
        return Err(SpecError::Malformed {
            msg: "no permutations given".into(),
            pos: base,
        });
    }
    let degree = max_point + 1;
    let mut gens = Vec::new();
    for cycles in &perm_cycles {
        match Perm::from_cycles(degree, cycles) {
            Some(perm) => gens.push(perm),
            None => {
                return Err(SpecError::Malformed {
                    msg: "a point repeats within one permutation".into(),
                    pos: base,
                })
            }
        }
    }
    Ok(Arc::new(FiniteGroup::from_generators(
        full,
        &gens,
        cfg.closure_bound,
    )?))
}

fn split_top_level(body: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, ch) in body.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push((start, &body[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &body[start..]));
    out
}

/// Parses `"(0 1)(2 3)"` into cycles; `"()"` is the identity.
fn parse_cycles(chunk: &str, base: usize) -> Result<Vec<Vec<usize>>, SpecError> {
    let chunk_trim = chunk.trim();
    let mut cycles = Vec::new();
    let mut rest = chunk_trim;
    let mut offset = base + (chunk.len() - chunk.trim_start().len());
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(SpecError::Malformed {
                msg: format!("expected `(`, found `{}`", &rest[..1]),
                pos: offset,
            });
        }
        let close = rest.find(')').ok_or(SpecError::Malformed {
            msg: "unclosed cycle".into(),
            pos: offset,
        })?;
        let inner = &rest[1..close];
        let mut cycle = Vec::new();
        for tok in inner.split_whitespace() {
            let pt: usize = tok.parse().map_err(|_| SpecError::Malformed {
                msg: format!("invalid point `{tok}`"),
                pos: offset,
            })?;
            cycle.push(pt);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        offset += close + 1;
        rest = rest[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Compares `g` against every catalog group of the same order and returns the
/// first matching name, if any.
pub fn identify(g: &Arc<FiniteGroup>, cfg: &Config) -> Result<Option<&'static str>, GroupError> {
    for name in CATALOG {
        if catalog_order(name) != Some(g.order()) {
            continue;
        }
        let candidate = catalog_group(name, cfg).expect("catalog name builds");
        if find_isomorphism(g, &candidate, cfg.analysis_bound)?.is_some() {
            return Ok(Some(name));
        }
    }
    Ok(None)
}

//! Automorphism and isomorphism search by backtracking over generator images.

use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::GroupError;
use crate::group::{FiniteGroup, GroupHom};

/// A minimal (smallest-cardinality) generating set, found by searching
/// ascending irredundant index sequences of increasing length. Every smallest
/// generating set is irredundant, so the pruning is sound. The trivial group
/// returns the empty set.
pub fn minimal_generating_set(g: &FiniteGroup) -> Vec<usize> {
    let n = g.order();
    if n == 1 {
        return Vec::new();
    }
    for k in 1..=n {
        let mut chosen = Vec::with_capacity(k);
        if search_gens(g, k, 0, &mut chosen, &BitSet::from_members(n, [0])) {
            return chosen;
        }
    }
    unreachable!("the full element list generates");
}

fn search_gens(
    g: &FiniteGroup,
    k: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    closure: &BitSet,
) -> bool {
    if chosen.len() == k {
        return closure.count() == g.order();
    }
    // not enough candidates left to reach k generators
    for cand in from..g.order() {
        if closure.contains(cand) {
            continue;
        }
        let mut seed = closure.clone();
        seed.insert(cand);
        let bigger = g.close_subset(&seed);
        chosen.push(cand);
        if search_gens(g, k, cand + 1, chosen, &bigger) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// All isomorphisms `g → h` (or all automorphisms when `g` and `h` coincide),
/// by backtracking over images of a minimal generating set of `g`. Candidates
/// are constrained to elements of equal order and tried in index order, so the
/// output is deterministic (image tuples in lexicographic order).
fn isomorphisms(
    g: &Arc<FiniteGroup>,
    h: &Arc<FiniteGroup>,
    bound: usize,
    first_only: bool,
) -> Result<Vec<GroupHom>, GroupError> {
    for side in [g, h] {
        if side.order() > bound {
            return Err(GroupError::BoundExceeded {
                order: side.order(),
                bound,
            });
        }
    }
    if g.order() != h.order() || g.order_census() != h.order_census() {
        return Ok(Vec::new());
    }
    let gens = minimal_generating_set(g);
    if gens.is_empty() {
        return Ok(vec![GroupHom::new(g.clone(), h.clone(), vec![0])]);
    }
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    backtrack(g, h, &gens, &mut images, first_only, &mut out);
    Ok(out)
}

fn backtrack(
    g: &Arc<FiniteGroup>,
    h: &Arc<FiniteGroup>,
    gens: &[usize],
    images: &mut Vec<usize>,
    first_only: bool,
    out: &mut Vec<GroupHom>,
) -> bool {
    if images.len() == gens.len() {
        if let Some(map) = close_partial(g, h, gens, images) {
            if map.iter().all(|&x| x != usize::MAX) {
                let hom = GroupHom::new(g.clone(), h.clone(), map);
                // validate against the Cayley tables before accepting
                if hom.is_homomorphism() && hom.is_bijective() {
                    out.push(hom);
                    return first_only;
                }
            }
        }
        return false;
    }
    let gen = gens[images.len()];
    for cand in 0..h.order() {
        if h.elem_order(cand) != g.elem_order(gen) {
            continue;
        }
        images.push(cand);
        let viable = close_partial(g, h, &gens[..images.len()], images).is_some();
        if viable && backtrack(g, h, gens, images, first_only, out) {
            images.pop();
            return true;
        }
        images.pop();
    }
    false
}

/// Extends `gens[i] ↦ images[i]` to the subgroup generated by the assigned
/// generators. Returns the partial map (usize::MAX marks unassigned elements),
/// or `None` on a homomorphism conflict or loss of injectivity.
fn close_partial(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; h.order()];
    map[0] = 0;
    used[0] = true;
    let mut domain = vec![0usize];
    let mut pos = 0;
    while pos < domain.len() {
        let d = domain[pos];
        for (&gen, &img) in gens.iter().zip(images) {
            let d2 = g.cay(d, gen);
            let i2 = h.cay(map[d], img);
            if map[d2] == usize::MAX {
                if used[i2] {
                    return None;
                }
                map[d2] = i2;
                used[i2] = true;
                domain.push(d2);
            } else if map[d2] != i2 {
                return None;
            }
        }
        pos += 1;
    }
    Some(map)
}

/// The complete automorphism group of `g`, in deterministic order.
pub fn automorphism_group(
    g: &Arc<FiniteGroup>,
    bound: usize,
) -> Result<Vec<GroupHom>, GroupError> {
    isomorphisms(g, g, bound, false)
}

/// A witness isomorphism `g → h`, if one exists.
pub fn find_isomorphism(
    g: &Arc<FiniteGroup>,
    h: &Arc<FiniteGroup>,
    bound: usize,
) -> Result<Option<GroupHom>, GroupError> {
    Ok(isomorphisms(g, h, bound, true)?.into_iter().next())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_group;
    use crate::config::Config;

    fn grp(name: &str) -> Arc<FiniteGroup> {
        catalog_group(name, &Config::default()).unwrap()
    }

    #[test]
    fn minimal_generating_sets() {
        assert_eq!(minimal_generating_set(&grp("C6")).len(), 1);
        assert_eq!(minimal_generating_set(&grp("S3")).len(), 2);
        assert_eq!(minimal_generating_set(&grp("V4")).len(), 2);
        assert_eq!(minimal_generating_set(&grp("Z2xZ2xZ2")).len(), 3);
        assert_eq!(minimal_generating_set(&grp("C1")).len(), 0);
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphism_group(&grp("S3"), 64).unwrap().len(), 6);
        assert_eq!(automorphism_group(&grp("C4"), 64).unwrap().len(), 2);
        assert_eq!(automorphism_group(&grp("D4"), 64).unwrap().len(), 8);
        assert_eq!(automorphism_group(&grp("Q8"), 64).unwrap().len(), 24);
        assert_eq!(automorphism_group(&grp("Z2xZ2xZ2"), 64).unwrap().len(), 168);
    }

    #[test]
    fn automorphisms_form_a_group() {
        let g = grp("S3");
        let auts = automorphism_group(&g, 64).unwrap();
        let maps: Vec<Vec<usize>> = auts.iter().map(|a| a.map()).collect();
        for a in &maps {
            // inverse is present
            let mut inv = vec![0usize; a.len()];
            for (i, &x) in a.iter().enumerate() {
                inv[x] = i;
            }
            assert!(maps.contains(&inv));
            for b in &maps {
                let comp: Vec<usize> = (0..a.len()).map(|i| a[b[i]]).collect();
                assert!(maps.contains(&comp));
            }
        }
    }

    #[test]
    fn iso_examples() {
        assert!(find_isomorphism(&grp("C4"), &grp("V4"), 64).unwrap().is_none());
        let w = find_isomorphism(&grp("Dih6"), &grp("S3"), 64).unwrap().unwrap();
        assert!(w.is_homomorphism() && w.is_bijective());
    }

    #[test]
    fn iso_is_symmetric() {
        for (a, b) in [("Dih6", "S3"), ("C4", "V4"), ("Q8", "D4"), ("A4", "A4")] {
            let lr = find_isomorphism(&grp(a), &grp(b), 64).unwrap().is_some();
            let rl = find_isomorphism(&grp(b), &grp(a), 64).unwrap().is_some();
            assert_eq!(lr, rl, "{a} vs {b}");
        }
    }

    #[test]
    fn bound_is_enforced() {
        let err = automorphism_group(&grp("S4"), 10).unwrap_err();
        assert_eq!(err, GroupError::BoundExceeded { order: 24, bound: 10 });
    }
}

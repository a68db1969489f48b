//! Finite groups of permutations with a full composition table.

use std::collections::HashMap;
use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::GroupError;
use crate::perm::Perm;
use crate::subgroups::Subgroup;

/// A finite group given by its element list and Cayley table.
///
/// Element 0 is always the identity. `cay(i, j)` is the index of
/// `elements[i] ∘ elements[j]`. Values are immutable after construction and
/// freely shareable.
#[derive(Debug)]
pub struct FiniteGroup {
    label: String,
    elements: Vec<Perm>,
    cayley: Vec<u16>,
    inverse: Vec<u16>,
    orders: Vec<u16>,
}

impl FiniteGroup {
    /// Closure of a generating set, breadth-first from the identity with the
    /// generators taken in the given order. The element ordering is therefore a
    /// pure function of the input.
    pub fn from_generators(
        label: impl Into<String>,
        gens: &[Perm],
        max_order: usize,
    ) -> Result<FiniteGroup, GroupError> {
        if gens.is_empty() {
            return Err(GroupError::EmptyGenerators);
        }
        let degree = gens[0].degree();
        for g in gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }

        let identity = Perm::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Perm, usize> = HashMap::new();
        index.insert(identity, 0);
        // parent[k] = (p, t) with elements[k] = elements[p] ∘ gens[t], for k > 0
        let mut parent: Vec<(usize, usize)> = vec![(0, 0)];
        // gen_cols[x][t] = index of elements[x] ∘ gens[t]
        let mut gen_cols: Vec<Vec<u16>> = Vec::new();

        let mut pos = 0;
        while pos < elements.len() {
            let mut row = Vec::with_capacity(gens.len());
            for (t, gen) in gens.iter().enumerate() {
                let p = elements[pos].compose(gen);
                let idx = match index.get(&p) {
                    Some(&i) => i,
                    None => {
                        if elements.len() + 1 > max_order {
                            return Err(GroupError::TooLarge { bound: max_order });
                        }
                        let i = elements.len();
                        elements.push(p.clone());
                        index.insert(p, i);
                        parent.push((pos, t));
                        i
                    }
                };
                row.push(idx as u16);
            }
            gen_cols.push(row);
            pos += 1;
        }

        let n = elements.len();
        // Fill the Cayley table column by column through the BFS decompositions;
        // no further permutation compositions are needed.
        let mut cayley = vec![0u16; n * n];
        for i in 0..n {
            cayley[i * n] = i as u16;
        }
        for j in 1..n {
            let (p, t) = parent[j];
            for i in 0..n {
                let ip = cayley[i * n + p] as usize;
                cayley[i * n + j] = gen_cols[ip][t];
            }
        }

        Ok(FiniteGroup::finish(label.into(), elements, cayley))
    }

    /// Builds a group from a closed set of permutations. Elements are sorted by
    /// image vector (the identity sorts first); the set must be closed under
    /// composition.
    pub fn from_elements(
        label: impl Into<String>,
        mut elements: Vec<Perm>,
    ) -> Result<FiniteGroup, GroupError> {
        elements.sort();
        elements.dedup();
        if elements.is_empty() {
            return Err(GroupError::EmptyGenerators);
        }
        if !elements[0].is_identity() {
            return Err(GroupError::NoIdentity);
        }
        let degree = elements[0].degree();
        if elements.iter().any(|p| p.degree() != degree) {
            return Err(GroupError::DegreeMismatch {
                expected: degree,
                found: elements.iter().map(|p| p.degree()).find(|&d| d != degree).unwrap(),
            });
        }
        let index: HashMap<&Perm, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let n = elements.len();
        let mut cayley = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                let p = elements[i].compose(&elements[j]);
                match index.get(&p) {
                    Some(&k) => cayley[i * n + j] = k as u16,
                    None => return Err(GroupError::NotClosed),
                }
            }
        }
        Ok(FiniteGroup::finish(label.into(), elements, cayley))
    }

    fn finish(label: String, elements: Vec<Perm>, cayley: Vec<u16>) -> FiniteGroup {
        let n = elements.len();
        let mut inverse = vec![0u16; n];
        for i in 0..n {
            for j in 0..n {
                if cayley[i * n + j] == 0 {
                    inverse[i] = j as u16;
                    break;
                }
            }
        }
        let mut orders = vec![0u16; n];
        for i in 0..n {
            let mut k = i;
            let mut c = 1u16;
            while k != 0 {
                k = cayley[k * n + i] as usize;
                c += 1;
            }
            orders[i] = if i == 0 { 1 } else { c };
        }
        FiniteGroup {
            label,
            elements,
            cayley,
            inverse,
            orders,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.elements[0].degree()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    /// Index of `elements[i] ∘ elements[j]`.
    pub fn cay(&self, i: usize, j: usize) -> usize {
        self.cayley[i * self.elements.len() + j] as usize
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    pub fn elem_order(&self, i: usize) -> usize {
        self.orders[i] as usize
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (i..n).all(|j| self.cay(i, j) == self.cay(j, i)))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        (0..n).any(|i| self.elem_order(i) == n)
    }

    /// Multiset of element orders, as sorted (order, count) pairs. Cheap
    /// isomorphism invariant.
    pub fn order_census(&self) -> Vec<(usize, usize)> {
        let mut counts: Vec<(usize, usize)> = Vec::new();
        let mut orders: Vec<usize> = (0..self.order()).map(|i| self.elem_order(i)).collect();
        orders.sort_unstable();
        for o in orders {
            match counts.last_mut() {
                Some((v, c)) if *v == o => *c += 1,
                _ => counts.push((o, 1)),
            }
        }
        counts
    }

    /// Closure of a subset under composition (and hence inversion).
    pub fn close_subset(&self, seed: &BitSet) -> BitSet {
        let mut members = BitSet::new(self.order());
        members.insert(0);
        let mut list = vec![0usize];
        for x in seed.iter() {
            if !members.contains(x) {
                members.insert(x);
                list.push(x);
            }
        }
        let mut frontier = 0;
        while frontier < list.len() {
            let upto = list.len();
            for i in frontier..upto {
                for j in 0..upto {
                    for k in [self.cay(list[i], list[j]), self.cay(list[j], list[i])] {
                        if !members.contains(k) {
                            members.insert(k);
                            list.push(k);
                        }
                    }
                }
            }
            frontier = upto;
        }
        members
    }

    /// `{x⁻¹ h x : h ∈ set}`.
    pub fn conjugate_set(&self, set: &BitSet, x: usize) -> BitSet {
        let xi = self.inv(x);
        BitSet::from_members(self.order(), set.iter().map(|h| self.cay(self.cay(xi, h), x)))
    }

    /// `{a b : a ∈ s, b ∈ t}`.
    pub fn product_set(&self, s: &BitSet, t: &BitSet) -> BitSet {
        let mut out = BitSet::new(self.order());
        for a in s.iter() {
            for b in t.iter() {
                out.insert(self.cay(a, b));
            }
        }
        out
    }
}

/// A homomorphism between two finite groups, stored as the image index of each
/// source element.
#[derive(Clone, Debug)]
pub struct GroupHom {
    pub source: Arc<FiniteGroup>,
    pub target: Arc<FiniteGroup>,
    map: Vec<u16>,
}

impl GroupHom {
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, map: Vec<usize>) -> GroupHom {
        GroupHom {
            source,
            target,
            map: map.into_iter().map(|x| x as u16).collect(),
        }
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i] as usize
    }

    pub fn map(&self) -> Vec<usize> {
        self.map.iter().map(|&x| x as usize).collect()
    }

    /// Full check against both Cayley tables.
    pub fn is_homomorphism(&self) -> bool {
        let n = self.source.order();
        if self.map.len() != n || self.apply(0) != 0 {
            return false;
        }
        (0..n).all(|i| {
            (0..n).all(|j| {
                self.apply(self.source.cay(i, j)) == self.target.cay(self.apply(i), self.apply(j))
            })
        })
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        if self.source.order() != self.target.order() {
            return false;
        }
        for &x in &self.map {
            if seen[x as usize] {
                return false;
            }
            seen[x as usize] = true;
        }
        true
    }

    pub fn kernel(&self) -> BitSet {
        BitSet::from_members(
            self.source.order(),
            (0..self.source.order()).filter(|&i| self.apply(i) == 0),
        )
    }
}

/// Quotient of `g` by a normal subgroup. The quotient is re-encoded through the
/// regular action of the coset group on itself, so it lives in the same
/// representation as every other group here. Also returns the projection.
pub fn quotient_group(
    g: &Arc<FiniteGroup>,
    n: &Subgroup,
) -> Result<(Arc<FiniteGroup>, GroupHom), GroupError> {
    if !Arc::ptr_eq(&n.parent, g) {
        return Err(GroupError::DifferentParents);
    }
    let order = g.order();
    for x in 0..order {
        if g.conjugate_set(&n.members, x) != n.members {
            return Err(GroupError::NotNormal { id: n.id });
        }
    }

    let mut coset_of = vec![usize::MAX; order];
    let mut reps: Vec<usize> = Vec::new();
    for x in 0..order {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for m in n.members.iter() {
            coset_of[g.cay(x, m)] = c;
        }
    }
    let m = reps.len();
    let mut mul = vec![0usize; m * m];
    for a in 0..m {
        for b in 0..m {
            mul[a * m + b] = coset_of[g.cay(reps[a], reps[b])];
        }
    }
    let elements: Vec<Perm> = (0..m)
        .map(|a| Perm::new((0..m).map(|b| mul[a * m + b]).collect()).expect("regular action"))
        .collect();
    let cayley: Vec<u16> = mul.iter().map(|&x| x as u16).collect();
    let label = format!("{}/H{}", g.label(), n.id);
    let q = Arc::new(FiniteGroup::finish(label, elements, cayley));
    let proj = GroupHom::new(g.clone(), q.clone(), coset_of);
    debug_assert!(proj.is_homomorphism());
    Ok((q, proj))
}

#[cfg(test)]
pub(crate) fn validate_group(g: &FiniteGroup) {
    let n = g.order();
    assert!(n >= 1);
    assert!(g.element(0).is_identity());
    // distinct elements
    for i in 0..n {
        for j in (i + 1)..n {
            assert_ne!(g.element(i), g.element(j));
        }
    }
    // table matches composition, identity rows, inverses
    for i in 0..n {
        assert_eq!(g.cay(0, i), i);
        assert_eq!(g.cay(i, 0), i);
        assert_eq!(g.cay(i, g.inv(i)), 0);
        for j in 0..n {
            let p = g.element(i).compose(g.element(j));
            assert_eq!(g.element(g.cay(i, j)), &p);
        }
    }
    // associativity, exhaustive at this scale
    if n <= 64 {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(g.cay(g.cay(a, b), c), g.cay(a, g.cay(b, c)));
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(images: Vec<usize>) -> Perm {
        Perm::new(images).unwrap()
    }

    #[test]
    fn single_involution_gives_order_two() {
        let g = FiniteGroup::from_generators("t", &[perm(vec![1, 0])], 100).unwrap();
        assert_eq!(g.order(), 2);
        validate_group(&g);
    }

    #[test]
    fn s3_from_transposition_and_cycle() {
        let g =
            FiniteGroup::from_generators("S3", &[perm(vec![1, 0, 2]), perm(vec![1, 2, 0])], 100)
                .unwrap();
        assert_eq!(g.order(), 6);
        validate_group(&g);
    }

    #[test]
    fn dihedral_of_order_eight() {
        // (0 1 2 3) and (0 2)
        let g = FiniteGroup::from_generators(
            "D4",
            &[perm(vec![1, 2, 3, 0]), perm(vec![2, 1, 0, 3])],
            100,
        )
        .unwrap();
        assert_eq!(g.order(), 8);
        validate_group(&g);
        // independent oracle: naive fixpoint closure on permutation sets
        let mut set: Vec<Perm> = vec![
            Perm::identity(4),
            perm(vec![1, 2, 3, 0]),
            perm(vec![2, 1, 0, 3]),
        ];
        loop {
            let mut new = Vec::new();
            for a in &set {
                for b in &set {
                    let p = a.compose(b);
                    if !set.contains(&p) && !new.contains(&p) {
                        new.push(p);
                    }
                }
            }
            if new.is_empty() {
                break;
            }
            set.extend(new);
        }
        assert_eq!(set.len(), g.order());
        for p in &set {
            assert!(g.elements().contains(p));
        }
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let err = FiniteGroup::from_generators("x", &[perm(vec![1, 0]), perm(vec![0, 2, 1])], 100)
            .unwrap_err();
        assert_eq!(err, GroupError::DegreeMismatch { expected: 2, found: 3 });
    }

    #[test]
    fn closure_bound_is_enforced() {
        let err = FiniteGroup::from_generators("S3", &[perm(vec![1, 0, 2]), perm(vec![1, 2, 0])], 5)
            .unwrap_err();
        assert_eq!(err, GroupError::TooLarge { bound: 5 });
    }

    #[test]
    fn from_elements_requires_closure() {
        let bad = vec![Perm::identity(3), perm(vec![1, 2, 0])];
        assert_eq!(
            FiniteGroup::from_elements("x", bad).unwrap_err(),
            GroupError::NotClosed
        );
        let ok = vec![
            Perm::identity(3),
            perm(vec![1, 2, 0]),
            perm(vec![2, 0, 1]),
        ];
        let g = FiniteGroup::from_elements("C3", ok).unwrap();
        assert_eq!(g.order(), 3);
        validate_group(&g);
    }

    #[test]
    fn order_census_counts_element_orders() {
        let g =
            FiniteGroup::from_generators("S3", &[perm(vec![1, 0, 2]), perm(vec![1, 2, 0])], 100)
                .unwrap();
        assert_eq!(g.order_census(), vec![(1, 1), (2, 3), (3, 2)]);
    }
}

//! Exhaustive subgroup enumeration: cores, meets and joins, maximal subgroups,
//! Frattini and derived subgroups, and group-class predicates.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::config::Config;
use crate::error::GroupError;
use crate::group::{quotient_group, FiniteGroup};

/// A subgroup, identified by its membership set over the parent's element list.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub parent: Arc<FiniteGroup>,
    pub members: BitSet,
    pub id: usize,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.count()
    }
}

/// The complete subgroup lattice of a finite group. Subgroups are ordered by
/// (order, membership set lexicographically), so ids are reproducible; id 0 is
/// always the trivial subgroup and the last id is the whole group.
#[derive(Debug)]
pub struct SubgroupLattice {
    pub parent: Arc<FiniteGroup>,
    subgroups: Vec<Subgroup>,
    leq: Vec<bool>,
    meet: Vec<u16>,
    join: Vec<u16>,
    core: Vec<u16>,
    normal: Vec<bool>,
    by_members: HashMap<BitSet, usize>,
}

impl SubgroupLattice {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn subgroup(&self, id: usize) -> &Subgroup {
        &self.subgroups[id]
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn id_of(&self, members: &BitSet) -> Option<usize> {
        self.by_members.get(members).copied()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.subgroups.len() + b]
    }

    pub fn meet_id(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.subgroups.len() + b] as usize
    }

    pub fn join_id(&self, a: usize, b: usize) -> usize {
        self.join[a * self.subgroups.len() + b] as usize
    }

    pub fn is_normal(&self, id: usize) -> bool {
        self.normal[id]
    }

    /// Ids of the normal subgroups, ascending. This is the carrier of `N(G)`.
    pub fn normal_ids(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.normal[i]).collect()
    }

    /// The normal core: the largest normal subgroup contained in `id`, equal to
    /// the intersection of all conjugates.
    pub fn core_id(&self, id: usize) -> usize {
        self.core[id] as usize
    }

    pub fn trivial_id(&self) -> usize {
        0
    }

    pub fn whole_id(&self) -> usize {
        self.subgroups.len() - 1
    }

    /// Display name: `1` for the trivial subgroup, `G` for the whole group,
    /// `H{id}` otherwise.
    pub fn name(&self, id: usize) -> String {
        if id == self.whole_id() {
            "G".to_string()
        } else if id == self.trivial_id() {
            "1".to_string()
        } else {
            format!("H{id}")
        }
    }
}

/// Enumerates every subgroup: all cyclic subgroups first, then pairwise joins
/// iterated to a fixed point.
pub fn all_subgroups(
    g: &Arc<FiniteGroup>,
    bound: usize,
) -> Result<SubgroupLattice, GroupError> {
    let n = g.order();
    if n > bound {
        return Err(GroupError::BoundExceeded { order: n, bound });
    }

    let mut sets: Vec<BitSet> = Vec::new();
    let mut known: HashSet<BitSet> = HashSet::new();
    for x in 0..n {
        let mut members = BitSet::new(n);
        let mut k = x;
        loop {
            members.insert(k);
            k = g.cay(k, x);
            if k == x {
                break;
            }
        }
        members.insert(0);
        if known.insert(members.clone()) {
            sets.push(members);
        }
    }
    loop {
        let len = sets.len();
        let mut grew = false;
        for i in 0..len {
            for j in (i + 1)..len {
                if sets[i].is_subset(&sets[j]) || sets[j].is_subset(&sets[i]) {
                    continue;
                }
                let joined = g.close_subset(&sets[i].union(&sets[j]));
                if known.insert(joined.clone()) {
                    sets.push(joined);
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }

    sets.sort_by(|a, b| a.set_order(b));
    let k = sets.len();
    let subgroups: Vec<Subgroup> = sets
        .iter()
        .enumerate()
        .map(|(id, members)| Subgroup {
            parent: g.clone(),
            members: members.clone(),
            id,
        })
        .collect();
    let by_members: HashMap<BitSet, usize> =
        sets.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();

    let mut leq = vec![false; k * k];
    for a in 0..k {
        for b in 0..k {
            leq[a * k + b] = sets[a].is_subset(&sets[b]);
        }
    }
    let mut normal = vec![false; k];
    for (a, set) in sets.iter().enumerate() {
        normal[a] = (0..n).all(|x| &g.conjugate_set(set, x) == set);
    }
    let mut meet = vec![0u16; k * k];
    let mut join = vec![0u16; k * k];
    for a in 0..k {
        for b in a..k {
            let m = *by_members
                .get(&sets[a].intersection(&sets[b]))
                .expect("intersection of subgroups is a subgroup");
            let j = *by_members
                .get(&g.close_subset(&sets[a].union(&sets[b])))
                .expect("generated subgroup is in the complete list");
            meet[a * k + b] = m as u16;
            meet[b * k + a] = m as u16;
            join[a * k + b] = j as u16;
            join[b * k + a] = j as u16;
        }
    }
    let mut core = vec![0u16; k];
    for a in 0..k {
        let mut c = sets[a].clone();
        for x in 0..n {
            c = c.intersection(&g.conjugate_set(&sets[a], x));
        }
        core[a] = *by_members.get(&c).expect("core is a subgroup") as u16;
    }

    Ok(SubgroupLattice {
        parent: g.clone(),
        subgroups,
        leq,
        meet,
        join,
        core,
        normal,
        by_members,
    })
}

/// The normal core of an arbitrary subgroup given by its membership set: the
/// intersection of all conjugates, which is the largest normal subgroup of `g`
/// contained in it.
pub fn core(g: &FiniteGroup, members: &BitSet) -> Result<BitSet, GroupError> {
    let n = g.order();
    if members.capacity() != n || !members.contains(0) {
        return Err(GroupError::NotSubgroup);
    }
    for a in members.iter() {
        if !members.contains(g.inv(a)) {
            return Err(GroupError::NotSubgroup);
        }
        for b in members.iter() {
            if !members.contains(g.cay(a, b)) {
                return Err(GroupError::NotSubgroup);
            }
        }
    }
    let mut out = members.clone();
    for x in 0..n {
        out = out.intersection(&g.conjugate_set(members, x));
    }
    Ok(out)
}

/// Plain lattice meet and join of two subgroups: intersection and generated
/// subgroup. When both arguments are normal, the set product is verified to
/// coincide with the join (this is what makes the ε-join well defined).
pub fn meet_join(
    lat: &SubgroupLattice,
    a: usize,
    b: usize,
) -> Result<(usize, usize), GroupError> {
    if a >= lat.len() || b >= lat.len() {
        return Err(GroupError::DifferentParents);
    }
    let m = lat.meet_id(a, b);
    let j = lat.join_id(a, b);
    if lat.is_normal(a) && lat.is_normal(b) {
        let product = lat
            .parent
            .product_set(&lat.subgroup(a).members, &lat.subgroup(b).members);
        if lat.id_of(&product) != Some(j) {
            return Err(GroupError::ProductJoinMismatch { a, b });
        }
    }
    Ok((m, j))
}

/// The group-class flags quantified over by the structural checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predicates {
    pub abelian: bool,
    /// Every subgroup is normal.
    pub dedekind: bool,
    /// Dedekind and nonabelian.
    pub hamiltonian: bool,
    /// Exactly two normal subgroups.
    pub simple: bool,
    /// Prime-power order.
    pub primary: bool,
    /// Every maximal subgroup is normal.
    pub nilpotent: bool,
    /// Every hamiltonian quotient has prime-power order.
    pub hamiltonian_quotients_primary: bool,
}

pub fn group_predicates(
    g: &Arc<FiniteGroup>,
    lat: &SubgroupLattice,
    cfg: &Config,
) -> Result<Predicates, GroupError> {
    let abelian = g.is_abelian();
    let dedekind = lat.normal_ids().len() == lat.len();
    let hamiltonian = dedekind && !abelian;
    let simple = lat.normal_ids().len() == 2;
    let primary = is_prime_power(g.order());
    let fd = frattini_derived(lat);
    let nilpotent = fd.maximal.iter().all(|&m| lat.is_normal(m));

    let mut hq_primary = true;
    for nid in lat.normal_ids() {
        let sub = lat.subgroup(nid);
        let (q, _) = quotient_group(g, sub)?;
        if q.is_abelian() {
            continue; // abelian quotients are never hamiltonian
        }
        let qlat = all_subgroups(&q, cfg.analysis_bound)?;
        let q_dedekind = qlat.normal_ids().len() == qlat.len();
        if q_dedekind && !is_prime_power(q.order()) {
            hq_primary = false;
            break;
        }
    }

    Ok(Predicates {
        abelian,
        dedekind,
        hamiltonian,
        simple,
        primary,
        nilpotent,
        hamiltonian_quotients_primary: hq_primary,
    })
}

pub fn is_prime_power(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut n = n;
    let mut p = 0;
    for d in 2.. {
        if d * d > n {
            break;
        }
        if n.is_multiple_of(d) {
            p = d;
            while n.is_multiple_of(d) {
                n /= d;
            }
            break;
        }
    }
    if p == 0 {
        return true; // n itself is prime
    }
    n == 1
}

pub struct FrattiniDerived {
    pub maximal: Vec<usize>,
    pub frattini: usize,
    pub derived: usize,
}

/// Maximal subgroups, their intersection (Frattini subgroup), and the subgroup
/// generated by all commutators (derived subgroup).
pub fn frattini_derived(lat: &SubgroupLattice) -> FrattiniDerived {
    let whole = lat.whole_id();
    let k = lat.len();
    let maximal: Vec<usize> = (0..k)
        .filter(|&m| {
            m != whole
                && !(0..k).any(|x| x != m && x != whole && lat.leq(m, x) && lat.leq(x, whole))
        })
        .filter(|&m| lat.leq(m, whole))
        .collect();
    let g = &lat.parent;
    let n = g.order();
    let mut frat = lat.subgroup(whole).members.clone();
    for &m in &maximal {
        frat = frat.intersection(&lat.subgroup(m).members);
    }
    let frattini = lat.id_of(&frat).expect("intersection of subgroups");

    let mut commutators = BitSet::new(n);
    commutators.insert(0);
    for x in 0..n {
        for y in 0..n {
            let c = g.cay(g.cay(g.cay(g.inv(x), g.inv(y)), x), y);
            commutators.insert(c);
        }
    }
    let derived = lat
        .id_of(&g.close_subset(&commutators))
        .expect("commutator closure is a subgroup");
    FrattiniDerived {
        maximal,
        frattini,
        derived,
    }
}

/// Size of a smallest generating set.
pub fn minimal_generator_count(g: &FiniteGroup) -> usize {
    crate::autos::minimal_generating_set(g).len()
}

/// Cross-check for the nilpotency test: every Sylow subgroup is normal.
pub fn all_sylow_normal(g: &FiniteGroup, lat: &SubgroupLattice) -> bool {
    let n = g.order();
    let mut primes = Vec::new();
    let mut m = n;
    for d in 2..=n {
        if m.is_multiple_of(d) {
            primes.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
    }
    primes.iter().all(|&prime| {
        let mut pk = 1;
        while n.is_multiple_of(pk * prime) {
            pk *= prime;
        }
        (0..lat.len())
            .filter(|&s| lat.subgroup(s).order() == pk)
            .all(|s| lat.is_normal(s))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_group;

    fn ctx(name: &str) -> (Arc<FiniteGroup>, SubgroupLattice) {
        let g = catalog_group(name, &Config::default()).unwrap();
        let lat = all_subgroups(&g, 64).unwrap();
        (g, lat)
    }

    #[test]
    fn subgroup_counts() {
        let (_, s3) = ctx("S3");
        assert_eq!(s3.len(), 6);
        let orders: Vec<usize> = s3.subgroups().iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 6]);
        assert_eq!(s3.normal_ids().len(), 3);

        let (_, d4) = ctx("D4");
        assert_eq!(d4.len(), 10);
        assert_eq!(d4.normal_ids().len(), 6);

        let (_, q8) = ctx("Q8");
        assert_eq!(q8.len(), 6);
        assert_eq!(q8.normal_ids().len(), 6);
    }

    /// Oracle: test every subset of G for closure; feasible for |G| ≤ 12.
    fn subgroup_count_oracle(g: &FiniteGroup) -> usize {
        let n = g.order();
        assert!(n <= 12);
        let mut count = 0;
        'subset: for mask in 0u32..(1 << n) {
            if mask & 1 == 0 {
                continue; // must contain the identity
            }
            let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            for &a in &members {
                if mask >> g.inv(a) & 1 == 0 {
                    continue 'subset;
                }
                for &b in &members {
                    if mask >> g.cay(a, b) & 1 == 0 {
                        continue 'subset;
                    }
                }
            }
            count += 1;
        }
        count
    }

    #[test]
    fn counts_match_subset_closure_oracle() {
        for name in ["S3", "D4", "Q8", "C12", "A4", "Dih12", "Z3xZ3", "C8", "V4"] {
            let (g, lat) = ctx(name);
            assert_eq!(lat.len(), subgroup_count_oracle(&g), "{name}");
        }
    }

    #[test]
    fn core_examples() {
        let (_, s3) = ctx("S3");
        let a3 = s3
            .subgroups()
            .iter()
            .find(|s| s.order() == 3)
            .unwrap()
            .id;
        assert_eq!(s3.core_id(a3), a3);
        let refl = s3
            .subgroups()
            .iter()
            .find(|s| s.order() == 2)
            .unwrap()
            .id;
        assert_eq!(s3.core_id(refl), s3.trivial_id());

        let (_, d4) = ctx("D4");
        for s in d4.subgroups() {
            if s.order() == 2 && !d4.is_normal(s.id) {
                assert_eq!(d4.core_id(s.id), d4.trivial_id());
            }
        }
    }

    #[test]
    fn standalone_core_validates_its_argument() {
        let (s3, lat) = ctx("S3");
        for h in 0..lat.len() {
            let c = core(&s3, &lat.subgroup(h).members).unwrap();
            assert_eq!(lat.id_of(&c), Some(lat.core_id(h)));
        }
        // not closed under multiplication
        let bad = BitSet::from_members(6, [0, 1, 2]);
        assert_eq!(core(&s3, &bad).unwrap_err(), GroupError::NotSubgroup);
        // missing identity
        let bad = BitSet::from_members(6, [1]);
        assert_eq!(core(&s3, &bad).unwrap_err(), GroupError::NotSubgroup);
    }

    #[test]
    fn core_is_largest_normal_below() {
        for name in ["S3", "D4", "Q8", "A4", "Dih12", "S4"] {
            let (_, lat) = ctx(name);
            for h in 0..lat.len() {
                let c = lat.core_id(h);
                assert!(lat.is_normal(c));
                assert!(lat.leq(c, h));
                for nid in lat.normal_ids() {
                    if lat.leq(nid, h) {
                        assert!(lat.leq(nid, c), "{name}: N{nid} ≤ H{h} but ⊄ core");
                    }
                }
            }
        }
    }

    #[test]
    fn meet_join_examples() {
        let (_, s3) = ctx("S3");
        let a3 = 4; // order 3 subgroup
        let t = 1; // first order-2 subgroup
        let (m, j) = meet_join(&s3, a3, t).unwrap();
        assert_eq!(m, s3.trivial_id());
        assert_eq!(j, s3.whole_id());
        let (m, j) = meet_join(&s3, a3, a3).unwrap();
        assert_eq!((m, j), (a3, a3));

        let (_, d4) = ctx("D4");
        let center = d4
            .normal_ids()
            .into_iter()
            .find(|&i| d4.subgroup(i).order() == 2)
            .unwrap();
        let rot = d4
            .subgroups()
            .iter()
            .find(|s| s.order() == 4 && s.members.iter().any(|e| d4.parent.elem_order(e) == 4))
            .unwrap()
            .id;
        let (_, j) = meet_join(&d4, center, rot).unwrap();
        assert_eq!(j, rot);
    }

    #[test]
    fn predicates_examples() {
        let cfg = Config::default();
        let (g, lat) = ctx("Q8");
        let p = group_predicates(&g, &lat, &cfg).unwrap();
        assert!(p.dedekind && p.hamiltonian && p.primary && p.hamiltonian_quotients_primary);
        assert!(!p.abelian && !p.simple);

        let (g, lat) = ctx("S3");
        let p = group_predicates(&g, &lat, &cfg).unwrap();
        assert!(!p.simple && !p.nilpotent && p.hamiltonian_quotients_primary);

        let (g, lat) = ctx("C5");
        let p = group_predicates(&g, &lat, &cfg).unwrap();
        assert!(p.simple && p.dedekind && p.abelian);
    }

    #[test]
    fn dedekind_iff_every_normal_class_is_singleton() {
        let cfg = Config::default();
        for name in ["Q8", "D4", "S3", "C12", "V4", "A4", "Z3xZ3"] {
            let (g, lat) = ctx(name);
            let p = group_predicates(&g, &lat, &cfg).unwrap();
            // [H] = subgroups with the same core; computed independently of the flag
            let singleton = lat.normal_ids().into_iter().all(|nid| {
                (0..lat.len()).filter(|&h| lat.core_id(h) == nid).count() == 1
            });
            assert_eq!(p.dedekind, singleton, "{name}");
        }
    }

    #[test]
    fn nilpotency_cross_checks_against_sylow() {
        let cfg = Config::default();
        for name in crate::catalog::CATALOG {
            let g = catalog_group(name, &cfg).unwrap();
            if g.order() > 48 {
                continue;
            }
            let lat = all_subgroups(&g, 64).unwrap();
            let p = group_predicates(&g, &lat, &cfg).unwrap();
            assert_eq!(p.nilpotent, all_sylow_normal(&g, &lat), "{name}");
        }
    }

    #[test]
    fn frattini_and_derived() {
        let (_, d4) = ctx("D4");
        let fd = frattini_derived(&d4);
        assert_eq!(fd.maximal.len(), 3);
        assert_eq!(d4.subgroup(fd.frattini).order(), 2);
        assert_eq!(fd.frattini, fd.derived); // both are the center

        let (_, s3) = ctx("S3");
        let fd = frattini_derived(&s3);
        assert_eq!(fd.frattini, s3.trivial_id());
        assert_eq!(s3.subgroup(fd.derived).order(), 3);

        let (_, c7) = ctx("C7");
        let fd = frattini_derived(&c7);
        assert_eq!(fd.frattini, c7.trivial_id());
        assert_eq!(fd.derived, c7.trivial_id());
    }

    #[test]
    fn generator_count_matches_burnside_basis_for_p_groups() {
        for name in ["V4", "C4", "D4", "Q8", "Z3xZ3", "Z2xZ2xZ2", "C4xC2", "C8", "C9"] {
            let (g, lat) = ctx(name);
            let fd = frattini_derived(&lat);
            let quotient_order = g.order() / lat.subgroup(fd.frattini).order();
            // |G/Φ(G)| = p^d where d is the minimal generator count
            let p = (2..).find(|p| g.order() % p == 0).unwrap();
            let mut expected = 0;
            let mut q = quotient_order;
            while q > 1 {
                q /= p;
                expected += 1;
            }
            assert_eq!(minimal_generator_count(&g), expected, "{name}");
        }
    }

    #[test]
    fn quotient_examples() {
        let cfg = Config::default();
        let (s3, lat) = ctx("S3");
        let a3 = lat.subgroups().iter().find(|s| s.order() == 3).unwrap();
        let (q, proj) = quotient_group(&s3, a3).unwrap();
        assert_eq!(q.order(), 2);
        assert!(proj.is_homomorphism());
        assert_eq!(proj.kernel(), a3.members);

        let (d4, lat) = ctx("D4");
        let center = lat
            .normal_ids()
            .into_iter()
            .map(|i| lat.subgroup(i))
            .find(|s| s.order() == 2)
            .unwrap();
        let (q, _) = quotient_group(&d4, center).unwrap();
        assert_eq!(q.order(), 4);
        assert!((0..4).all(|i| q.elem_order(i) <= 2)); // Klein four, no order-4 element
        assert_eq!(crate::catalog::identify(&q, &cfg).unwrap(), Some("V4"));

        let whole = lat.subgroup(lat.whole_id());
        let (q, _) = quotient_group(&d4, whole).unwrap();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let (s3, lat) = ctx("S3");
        let refl = lat.subgroups().iter().find(|s| s.order() == 2).unwrap();
        assert!(matches!(
            quotient_group(&s3, refl),
            Err(GroupError::NotNormal { .. })
        ));
    }
}

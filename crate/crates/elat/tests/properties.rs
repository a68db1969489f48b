//! Property tests for the algebraic invariants.

mod common;

use std::sync::Arc;

use num_bigint::BigUint;
use proptest::prelude::*;

use common::{catalog_analyses, cfg};
use elat::elattice::{inflate, kernel_partition, quotient_mod, verify_axioms};
use elat::group::FiniteGroup;
use elat::lattice::{chain, diamond, Lattice};
use elat::morphisms::{
    aut_e_decomposition, check_el_morphism, el_isomorphism_search, enumerate_aut_e, ELMap, Verdict,
};
use elat::perm::Perm;

fn base_lattices() -> Vec<Lattice> {
    let grid = Lattice::from_leq(4, |a, b| a / 2 <= b / 2 && a % 2 <= b % 2).unwrap();
    let grid23 = Lattice::from_leq(6, |a, b| a / 2 <= b / 2 && a % 2 <= b % 2).unwrap();
    vec![
        chain(1),
        chain(2),
        chain(3),
        chain(4),
        diamond(2),
        diamond(3),
        grid,
        grid23,
    ]
}

prop_compose! {
    fn inflated()(base_idx in 0usize..8)(
        base_idx in Just(base_idx),
        sizes in proptest::collection::vec(1usize..=3, base_lattices()[base_idx].len()),
    ) -> (usize, Vec<usize>) {
        (base_idx, sizes)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Inflation always yields a canonical ε-lattice whose kernel quotient is
    /// the base, and whose automorphism count matches the decomposition.
    #[test]
    fn inflate_roundtrip((base_idx, sizes) in inflated()) {
        let base = &base_lattices()[base_idx];
        let l = Arc::new(inflate(base, &sizes).unwrap());
        let report = verify_axioms(&l).unwrap();
        prop_assert!(report.pass && report.canonical);

        let q = quotient_mod(&l, &kernel_partition(&l)).unwrap();
        prop_assert!(!q.lattice.isomorphisms(base).is_empty());

        let d = aut_e_decomposition(&l).unwrap();
        prop_assert_eq!(
            d.total_order.clone(),
            d.kernel_order.clone() * BigUint::from(d.im_psi_order)
        );
        if d.total_order <= BigUint::from(240u32) && l.size <= 10 {
            let maps = enumerate_aut_e(&l, 240).unwrap();
            prop_assert_eq!(BigUint::from(maps.len()), d.total_order);
            for m in &maps {
                prop_assert_eq!(check_el_morphism(m).unwrap(), Verdict::Iso);
            }
        }
    }

    /// Composition of two ε-lattice automorphisms is one again.
    #[test]
    fn automorphisms_compose((base_idx, sizes) in inflated()) {
        let base = &base_lattices()[base_idx];
        let l = Arc::new(inflate(base, &sizes).unwrap());
        let d = aut_e_decomposition(&l).unwrap();
        if d.total_order <= BigUint::from(48u32) {
            let maps = enumerate_aut_e(&l, 48).unwrap();
            for a in &maps {
                for b in &maps {
                    let comp: Vec<usize> = (0..l.size).map(|i| a.map[b.map[i]]).collect();
                    let m = ELMap { source: l.clone(), target: l.clone(), map: comp };
                    prop_assert_eq!(check_el_morphism(&m).unwrap(), Verdict::Iso);
                }
            }
        }
    }

    /// Closures of random generator sets satisfy the group axioms.
    #[test]
    fn random_generator_closures_are_groups(
        images in proptest::collection::vec(0usize..4, 4..=8),
    ) {
        // interpret the raw vector as up to two permutation candidates
        let mut gens = Vec::new();
        for chunk in images.chunks(4) {
            if chunk.len() == 4 {
                if let Some(p) = Perm::new(normalize_to_perm(chunk)) {
                    gens.push(p);
                }
            }
        }
        prop_assume!(!gens.is_empty());
        let g = FiniteGroup::from_generators("random", &gens, 10_000).unwrap();
        let n = g.order();
        prop_assert!((1..=24).contains(&n));
        for i in 0..n {
            prop_assert_eq!(g.cay(0, i), i);
            prop_assert_eq!(g.cay(i, g.inv(i)), 0);
            // Lagrange for cyclic subgroups
            prop_assert_eq!(n % g.elem_order(i), 0);
            for j in 0..n {
                let p = g.element(i).compose(g.element(j));
                prop_assert_eq!(g.element(g.cay(i, j)), &p);
            }
        }
    }
}

/// Turns an arbitrary index vector into a permutation by ranking.
fn normalize_to_perm(raw: &[usize]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by_key(|&i| (raw[i], i));
    let mut out = vec![0usize; raw.len()];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = rank;
    }
    out
}

#[test]
fn isomorphism_search_is_symmetric_on_the_catalog() {
    let analyses = catalog_analyses();
    let small: Vec<_> = analyses
        .iter()
        .filter(|(_, a)| a.elattice.size <= 8)
        .collect();
    for (na, a) in &small {
        for (nb, b) in &small {
            let ab = el_isomorphism_search(&a.elattice, &b.elattice)
                .unwrap()
                .witness
                .is_some();
            let ba = el_isomorphism_search(&b.elattice, &a.elattice)
                .unwrap()
                .witness
                .is_some();
            assert_eq!(ab, ba, "{na} vs {nb}");
        }
    }
}

#[test]
fn catalog_elattices_satisfy_the_derived_identities() {
    let _ = cfg();
    for (name, a) in catalog_analyses() {
        let l = &a.elattice;
        // ε(a∧b) = ε(a)∧ε(b) and ε(a∨b) = ε(a)∨ε(b), consequences of the axioms
        for x in 0..l.size {
            for y in 0..l.size {
                assert_eq!(l.eps(l.meet(x, y)), l.meet(l.eps(x), l.eps(y)), "{name}");
                assert_eq!(l.eps(l.join(x, y)), l.join(l.eps(x), l.eps(y)), "{name}");
            }
        }
    }
}

#[test]
fn tower_containments_hold_for_every_catalog_group() {
    use elat::towers::aut_towers;
    let cfg = cfg();
    for (name, a) in catalog_analyses() {
        let t = aut_towers(&a, &cfg).unwrap();
        assert!(t.aut2_in_aut0, "{name}: Aut2 ⊆ Aut0");
        assert!(t.aut2_in_aut1, "{name}: Aut2 ⊆ Aut1");
        assert!(t.aut2_normal_in_aut1, "{name}: Aut2 ⊴ Aut1");
        assert!(t.towers_are_el_automorphisms, "{name}");
        // conjugations collapse to G modulo the subgroup-normalizing elements
        assert_eq!(a.group.order() % t.aut2.order(), 0, "{name}: Lagrange");
    }
}

#[test]
fn kernel_of_psi_is_normal_in_aut_e() {
    let analyses = catalog_analyses();
    for (name, a) in analyses {
        let l = &a.elattice;
        let d = aut_e_decomposition(l).unwrap();
        if d.total_order > BigUint::from(1_000u32) {
            continue;
        }
        let maps = enumerate_aut_e(l, 1_000).unwrap();
        let fix = l.fix_points();
        let in_kernel =
            |m: &[usize]| fix.iter().all(|&f| m[f] == f);
        for f in &maps {
            let mut f_inv = vec![0usize; l.size];
            for (i, &x) in f.map.iter().enumerate() {
                f_inv[x] = i;
            }
            for k in &maps {
                if !in_kernel(&k.map) {
                    continue;
                }
                let conj: Vec<usize> = (0..l.size).map(|i| f.map[k.map[f_inv[i]]]).collect();
                assert!(in_kernel(&conj), "{name}: kernel not normal");
            }
        }
    }
}

//! The subgroup towers inside `Aut_E(L(G))`:
//!
//! * `Aut⁰` — automorphisms restricting to the identity on `N(G)` (the kernel
//!   of ψ, isomorphic to the direct product of the class stabilizers),
//! * `Aut¹` — the lattice action of the group automorphisms of `G`,
//! * `Aut²` — the lattice action of the conjugation maps `f_a(H) = H^a`.
//!
//! Also the isomorphism `L(G₁/H₁) → L(G₂/f(H₁))` induced by an ε-lattice
//! isomorphism `f` on a normal subgroup `H₁`.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::analysis::{analyze, Analysis};
use crate::autos::automorphism_group;
use crate::bitset::BitSet;
use crate::catalog::identify;
use crate::config::Config;
use crate::error::SuiteError;
use crate::group::{quotient_group, FiniteGroup};
use crate::morphisms::{
    aut_e_decomposition, check_el_morphism, AutEDecomposition, ELIsomorphism, ELMap, Verdict,
};
use crate::perm::Perm;

/// A group of permutations of the subgroup carrier, with its catalog
/// identification when one exists.
#[derive(Clone, Debug)]
pub struct TowerGroup {
    /// The maps, as permutations of subgroup ids, sorted lexicographically.
    pub maps: Vec<Vec<usize>>,
    pub group: Arc<FiniteGroup>,
    pub identified: Option<&'static str>,
}

impl TowerGroup {
    pub fn order(&self) -> usize {
        self.maps.len()
    }
}

#[derive(Debug)]
pub struct AutTowers {
    pub decomposition: AutEDecomposition,
    /// `|Aut⁰| = ∏ (mᵢ − 1)!`.
    pub aut0_order: BigUint,
    /// Materialized only when small enough to identify.
    pub aut0: Option<TowerGroup>,
    pub aut1: TowerGroup,
    /// `|Aut(G)|`, before collapsing automorphisms that act alike on subgroups.
    pub aut1_source_order: usize,
    pub aut2: TowerGroup,
    pub aut2_in_aut0: bool,
    pub aut2_in_aut1: bool,
    pub aut2_normal_in_aut1: bool,
    /// Every tower map passes the definition-level isomorphism check.
    pub towers_are_el_automorphisms: bool,
}

fn collapse(maps: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let set: BTreeSet<Vec<usize>> = maps.into_iter().collect();
    set.into_iter().collect()
}

fn tower_group(
    label: &str,
    maps: Vec<Vec<usize>>,
    cfg: &Config,
) -> Result<TowerGroup, SuiteError> {
    let perms: Vec<Perm> = maps
        .iter()
        .map(|m| Perm::new(m.clone()).expect("subgroup action is a permutation"))
        .collect();
    let group = Arc::new(FiniteGroup::from_elements(label, perms)?);
    let identified = identify(&group, cfg)?;
    Ok(TowerGroup {
        maps,
        group,
        identified,
    })
}

/// Computes the three towers for a group, verifying the stated containments.
pub fn aut_towers(analysis: &Analysis, cfg: &Config) -> Result<AutTowers, SuiteError> {
    let g = &analysis.group;
    let lat = &analysis.lattice;
    let el = &analysis.elattice;
    let decomposition = aut_e_decomposition(el)?;
    let aut0_order = decomposition.kernel_order.clone();

    // Aut⁰: identity on the fixed points, any representative-fixing bijection
    // inside each class.
    let aut0 = if aut0_order <= BigUint::from(cfg.materialize_bound) {
        let mut kernel_maps = vec![(0..el.size).collect::<Vec<usize>>()];
        for (rep, members) in el.classes().classes {
            let rest: Vec<usize> = members.into_iter().filter(|&m| m != rep).collect();
            let mut next = Vec::new();
            for partial in &kernel_maps {
                let mut perm = rest.clone();
                loop {
                    let mut m = partial.clone();
                    for (&s, &t) in rest.iter().zip(&perm) {
                        m[s] = t;
                    }
                    next.push(m);
                    if !next_perm(&mut perm) {
                        break;
                    }
                }
            }
            kernel_maps = next;
        }
        Some(tower_group(&format!("Aut0({})", g.label()), collapse(kernel_maps), cfg)?)
    } else {
        None
    };

    // Aut¹: group automorphisms acting on the subgroup list.
    let autos = automorphism_group(g, cfg.analysis_bound)?;
    let aut1_source_order = autos.len();
    let aut1_maps: Vec<Vec<usize>> = autos
        .iter()
        .map(|a| {
            (0..lat.len())
                .map(|s| {
                    let image = BitSet::from_members(
                        g.order(),
                        lat.subgroup(s).members.iter().map(|e| a.apply(e)),
                    );
                    lat.id_of(&image).expect("automorphic image is a subgroup")
                })
                .collect()
        })
        .collect();
    let aut1 = tower_group(&format!("Aut1({})", g.label()), collapse(aut1_maps), cfg)?;

    // Aut²: conjugation maps f_a(H) = H^a.
    let aut2_maps: Vec<Vec<usize>> = (0..g.order())
        .map(|a| {
            (0..lat.len())
                .map(|s| {
                    let image = g.conjugate_set(&lat.subgroup(s).members, a);
                    lat.id_of(&image).expect("conjugate of a subgroup is a subgroup")
                })
                .collect()
        })
        .collect();
    let aut2 = tower_group(&format!("Aut2({})", g.label()), collapse(aut2_maps), cfg)?;

    let fix = el.fix_points();
    let aut2_in_aut0 = aut2.maps.iter().all(|m| fix.iter().all(|&f| m[f] == f));
    let aut1_set: BTreeSet<&Vec<usize>> = aut1.maps.iter().collect();
    let aut2_in_aut1 = aut2.maps.iter().all(|m| aut1_set.contains(m));
    let aut2_set: BTreeSet<&Vec<usize>> = aut2.maps.iter().collect();
    let aut2_normal_in_aut1 = aut1.maps.iter().all(|s| {
        let mut s_inv = vec![0usize; s.len()];
        for (i, &x) in s.iter().enumerate() {
            s_inv[x] = i;
        }
        aut2.maps.iter().all(|t| {
            let conj: Vec<usize> = (0..s.len()).map(|i| s[t[s_inv[i]]]).collect();
            aut2_set.contains(&conj)
        })
    });

    let towers_are_el_automorphisms = aut1
        .maps
        .iter()
        .chain(aut2.maps.iter())
        .chain(aut0.iter().flat_map(|t| t.maps.iter()))
        .all(|m| {
            let elm = ELMap {
                source: el.clone(),
                target: el.clone(),
                map: m.clone(),
            };
            check_el_morphism(&elm) == Ok(Verdict::Iso)
        });

    Ok(AutTowers {
        decomposition,
        aut0_order,
        aut0,
        aut1,
        aut1_source_order,
        aut2,
        aut2_in_aut0,
        aut2_in_aut1,
        aut2_normal_in_aut1,
        towers_are_el_automorphisms,
    })
}

fn next_perm(seq: &mut [usize]) -> bool {
    if seq.len() < 2 {
        return false;
    }
    let mut i = seq.len() - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        seq.sort_unstable();
        return false;
    }
    let mut j = seq.len() - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    true
}

/// Result of transporting an ε-lattice isomorphism to the quotients: both
/// quotient analyses and the verified induced isomorphism
/// `K₁/H₁ ↦ f(K₁)/f(H₁)`.
pub struct QuotientInduced {
    pub source: Analysis,
    pub target: Analysis,
    pub iso: ELIsomorphism,
}

/// Given an ε-lattice isomorphism `f: L(G₁) → L(G₂)` (as a carrier map over
/// subgroup ids) and a normal subgroup `H₁` of `G₁`, builds the induced map
/// between the subgroup ε-lattices of `G₁/H₁` and `G₂/f(H₁)` and verifies it
/// is an isomorphism.
pub fn quotient_induced_iso(
    a1: &Analysis,
    a2: &Analysis,
    f: &[usize],
    h1: usize,
    cfg: &Config,
) -> Result<QuotientInduced, SuiteError> {
    let lat1 = &a1.lattice;
    let lat2 = &a2.lattice;
    if !lat1.is_normal(h1) {
        return Err(SuiteError::Group(crate::error::GroupError::NotNormal { id: h1 }));
    }
    let h2 = f[h1];
    debug_assert!(lat2.is_normal(h2));

    let (q1, proj1) = quotient_group(&a1.group, lat1.subgroup(h1))?;
    let (q2, proj2) = quotient_group(&a2.group, lat2.subgroup(h2))?;
    let qa1 = analyze(q1, cfg)?;
    let qa2 = analyze(q2, cfg)?;

    // subgroup of the quotient → its preimage in the parent
    let preimage_id = |qa: &Analysis, proj: &crate::group::GroupHom, lat: &crate::subgroups::SubgroupLattice, s: usize| {
        let members = BitSet::from_members(
            proj.source.order(),
            (0..proj.source.order()).filter(|&x| qa.lattice.subgroup(s).members.contains(proj.apply(x))),
        );
        lat.id_of(&members).expect("preimage of a subgroup is a subgroup")
    };

    let mut total = Vec::with_capacity(qa1.lattice.len());
    for s in 0..qa1.lattice.len() {
        let k1 = preimage_id(&qa1, &proj1, lat1, s);
        let k2 = f[k1];
        // image of K₂ under the projection G₂ → G₂/H₂
        let image = BitSet::from_members(
            qa2.group.order(),
            lat2.subgroup(k2).members.iter().map(|x| proj2.apply(x)),
        );
        let s2 = qa2
            .lattice
            .id_of(&image)
            .expect("projection of a subgroup containing the kernel");
        total.push(s2);
    }

    let m = ELMap {
        source: qa1.elattice.clone(),
        target: qa2.elattice.clone(),
        map: total.clone(),
    };
    match check_el_morphism(&m)? {
        Verdict::Iso => {}
        other => {
            return Err(SuiteError::Morphism(crate::error::MorphismError::MalformedMap {
                msg: format!("induced quotient map failed the isomorphism check: {other:?}"),
            }))
        }
    }
    let iso = ELIsomorphism::from_total(&qa1.elattice, total);
    Ok(QuotientInduced {
        source: qa1,
        target: qa2,
        iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_group;
    use crate::morphisms::ELIsoEnumerator;

    fn ctx(name: &str) -> Analysis {
        let cfg = Config::default();
        analyze(catalog_group(name, &cfg).unwrap(), &cfg).unwrap()
    }

    #[test]
    fn towers_of_s3_are_all_s3() {
        let cfg = Config::default();
        let t = aut_towers(&ctx("S3"), &cfg).unwrap();
        let aut0 = t.aut0.unwrap();
        assert_eq!(aut0.order(), 6);
        assert_eq!(aut0.identified, Some("S3"));
        assert_eq!(t.aut1.order(), 6);
        assert_eq!(t.aut1.identified, Some("S3"));
        assert_eq!(t.aut2.order(), 6);
        assert_eq!(t.aut2.identified, Some("S3"));
        assert!(t.aut2_in_aut0 && t.aut2_in_aut1 && t.aut2_normal_in_aut1);
        assert!(t.towers_are_el_automorphisms);
    }

    #[test]
    fn towers_of_d4() {
        let cfg = Config::default();
        let t = aut_towers(&ctx("D4"), &cfg).unwrap();
        let aut0 = t.aut0.unwrap();
        assert_eq!(aut0.order(), 24);
        assert_eq!(aut0.identified, Some("S4"));
        assert_eq!(t.aut1.order(), 8);
        assert_eq!(t.aut1.identified, Some("D4"));
        assert_eq!(t.aut1_source_order, 8);
        // conjugation-orbit computation: 8 conjugations collapse to 4 distinct
        // subgroup maps, forming a Klein four group
        assert_eq!(t.aut2.order(), 4);
        assert_eq!(t.aut2.identified, Some("V4"));
        assert!(t.aut2_in_aut0 && t.aut2_in_aut1 && t.aut2_normal_in_aut1);
        assert!(t.towers_are_el_automorphisms);
    }

    #[test]
    fn towers_of_q8_and_a4() {
        let cfg = Config::default();
        let t = aut_towers(&ctx("Q8"), &cfg).unwrap();
        assert_eq!(t.aut0.unwrap().order(), 1); // all classes are singletons
        assert_eq!(t.aut1.order(), 6); // Aut(Q8) ≅ S4 acts through S3
        assert_eq!(t.aut1.identified, Some("S3"));
        assert_eq!(t.aut1_source_order, 24);
        assert_eq!(t.aut2.order(), 1); // every subgroup is normal

        let t = aut_towers(&ctx("A4"), &cfg).unwrap();
        assert!(t.aut0.is_none()); // 7! is past the materialization bound
        assert_eq!(t.aut0_order.to_string(), "5040");
        assert_eq!(t.aut1.order(), 24);
        assert_eq!(t.aut1.identified, Some("S4"));
        assert_eq!(t.aut2.order(), 12);
        assert_eq!(t.aut2.identified, Some("A4"));
        assert!(t.aut2_in_aut0 && t.aut2_in_aut1 && t.aut2_normal_in_aut1);
    }

    #[test]
    fn induced_quotient_isomorphisms() {
        let cfg = Config::default();
        let s3 = ctx("S3");
        let identity: Vec<usize> = (0..s3.lattice.len()).collect();
        let a3 = s3
            .lattice
            .subgroups()
            .iter()
            .find(|s| s.order() == 3)
            .unwrap()
            .id;
        let out = quotient_induced_iso(&s3, &s3, &identity, a3, &cfg).unwrap();
        assert_eq!(out.source.group.order(), 2);
        assert!(out.iso.total.iter().enumerate().all(|(i, &x)| i == x));

        // whole group: isomorphism between trivial lattices
        let whole = s3.lattice.whole_id();
        let out = quotient_induced_iso(&s3, &s3, &identity, whole, &cfg).unwrap();
        assert_eq!(out.source.lattice.len(), 1);

        // a nontrivial automorphism of L(D4) fixing N(D4) pointwise, H₁ = center
        let d4 = ctx("D4");
        let f = ELIsoEnumerator::new(&d4.elattice, &d4.elattice)
            .unwrap()
            .nth(1)
            .unwrap();
        let fix = d4.elattice.fix_points();
        assert!(fix.iter().all(|&a| f.total[a] == a));
        assert!(f.total.iter().enumerate().any(|(i, &x)| i != x));
        let center = d4
            .lattice
            .normal_ids()
            .into_iter()
            .find(|&i| d4.lattice.subgroup(i).order() == 2)
            .unwrap();
        let out = quotient_induced_iso(&d4, &d4, &f.total, center, &cfg).unwrap();
        assert_eq!(out.source.group.order(), 4);

        // non-normal subgroup is rejected
        let refl = s3
            .lattice
            .subgroups()
            .iter()
            .find(|s| s.order() == 2)
            .unwrap()
            .id;
        assert!(quotient_induced_iso(&s3, &s3, &identity, refl, &cfg).is_err());
    }
}

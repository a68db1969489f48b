//! ε-lattice homomorphisms and isomorphisms.
//!
//! A map `f: L₁ → L₂` is an ε-lattice homomorphism when `f∘ε₁ = ε₂∘f` and `f`
//! preserves both operations; an isomorphism is a bijective homomorphism. For
//! canonical ε-lattices the isomorphisms are exactly the maps assembled from a
//! lattice isomorphism `Fix ε₁ → Fix ε₂` together with a bijection of each
//! ε-class onto the image class. That characterization drives the search here,
//! and the decomposition of `Aut_E(L)` through the exact sequence
//! `1 → ∏ᵢ S'([aᵢ]) →φ Aut_E(L) →ψ Aut(Fix ε) → 1`: the kernel contributes
//! `∏ᵢ (mᵢ−1)!` where `mᵢ = |[aᵢ]|`, and the image of ψ is the subgroup of
//! class-size-preserving lattice automorphisms. (ψ need not reach all of
//! `Aut(Fix ε)`: an automorphism moving a class of size 2 onto a class of
//! size 1 admits no extension, so the decomposition reports `Im ψ` and checks
//! exactness as `Ker ψ = Im φ`.)

use std::sync::Arc;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::elattice::{verify_axioms, ELattice, FixLattice};
use crate::error::MorphismError;

/// A total map between two ε-lattice carriers.
#[derive(Clone, Debug)]
pub struct ELMap {
    pub source: Arc<ELattice>,
    pub target: Arc<ELattice>,
    pub map: Vec<usize>,
}

/// First failed homomorphism equation, in scan order: ε-compatibility over
/// single elements, then meet and join over pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "equation")]
pub enum HomViolation {
    /// f(ε₁(a)) ≠ ε₂(f(a))
    Eps { a: usize },
    /// f(a ∧₁ b) ≠ f(a) ∧₂ f(b)
    Meet { a: usize, b: usize },
    /// f(a ∨₁ b) ≠ f(a) ∨₂ f(b)
    Join { a: usize, b: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    NotHom(HomViolation),
    Hom,
    Iso,
}

/// Definition-level check of the homomorphism equations over all pairs;
/// `Iso` additionally requires bijectivity.
pub fn check_el_morphism(m: &ELMap) -> Result<Verdict, MorphismError> {
    let (s, t) = (&m.source, &m.target);
    if m.map.len() != s.size {
        return Err(MorphismError::MalformedMap {
            msg: format!("map has length {}, expected {}", m.map.len(), s.size),
        });
    }
    if let Some(&bad) = m.map.iter().find(|&&x| x >= t.size) {
        return Err(MorphismError::MalformedMap {
            msg: format!("map contains out-of-range index {bad}"),
        });
    }
    let f = &m.map;
    for a in 0..s.size {
        if f[s.eps(a)] != t.eps(f[a]) {
            return Ok(Verdict::NotHom(HomViolation::Eps { a }));
        }
    }
    for a in 0..s.size {
        for b in 0..s.size {
            if f[s.meet(a, b)] != t.meet(f[a], f[b]) {
                return Ok(Verdict::NotHom(HomViolation::Meet { a, b }));
            }
            if f[s.join(a, b)] != t.join(f[a], f[b]) {
                return Ok(Verdict::NotHom(HomViolation::Join { a, b }));
            }
        }
    }
    let bijective = s.size == t.size && {
        let mut used = vec![false; t.size];
        f.iter().all(|&x| !std::mem::replace(&mut used[x], true))
    };
    Ok(if bijective { Verdict::Iso } else { Verdict::Hom })
}

/// A witness isomorphism in structured form: the fixed-lattice part plus one
/// bijection per ε-class. `total` is the assembled carrier map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ELIsomorphism {
    /// Pairs (fixed point of L₁, its image in L₂), ascending in the source.
    pub fix_pairs: Vec<(usize, usize)>,
    pub class_bijections: Vec<ClassBijection>,
    pub total: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassBijection {
    pub fix_source: usize,
    pub fix_target: usize,
    /// Member pairs, source-ascending; the fixed representative maps to the
    /// image representative.
    pub pairs: Vec<(usize, usize)>,
}

impl ELIsomorphism {
    pub fn as_map(&self, source: &Arc<ELattice>, target: &Arc<ELattice>) -> ELMap {
        ELMap {
            source: source.clone(),
            target: target.clone(),
            map: self.total.clone(),
        }
    }

    /// Recovers the structured form from a verified isomorphism map.
    pub fn from_total(source: &ELattice, total: Vec<usize>) -> ELIsomorphism {
        let fix_pairs: Vec<(usize, usize)> =
            source.fix_points().iter().map(|&a| (a, total[a])).collect();
        let class_bijections = source
            .classes()
            .classes
            .iter()
            .map(|(fix, members)| ClassBijection {
                fix_source: *fix,
                fix_target: total[*fix],
                pairs: members.iter().map(|&m| (m, total[m])).collect(),
            })
            .collect();
        ELIsomorphism {
            fix_pairs,
            class_bijections,
            total,
        }
    }
}

fn canonical_checked(l: &ELattice, side: &'static str) -> Result<(), MorphismError> {
    let report = verify_axioms(l)?;
    if !report.pass || !report.canonical {
        return Err(MorphismError::NotCanonical { side });
    }
    Ok(())
}

/// All lattice isomorphisms `Fix ε₁ → Fix ε₂`, as carrier-index maps over the
/// fixed points (position `i` holds the image of `fix1.elements[i]`).
pub fn fix_isomorphisms(f1: &FixLattice, f2: &FixLattice) -> Vec<Vec<usize>> {
    f1.lattice
        .isomorphisms(&f2.lattice)
        .into_iter()
        .map(|iso| iso.into_iter().map(|p| f2.elements[p]).collect())
        .collect()
}

fn is_admissible(
    iso: &[usize],
    f1: &FixLattice,
    sizes1: &[usize],
    f2: &FixLattice,
    sizes2: &[usize],
) -> bool {
    f1.elements.iter().enumerate().all(|(i, _)| {
        let target_pos = f2.position_of(iso[i]).expect("image is fixed");
        sizes1[i] == sizes2[target_pos]
    })
}

/// Outcome of the isomorphism search between two canonical ε-lattices.
#[derive(Clone, Debug)]
pub struct IsoSearch {
    pub witness: Option<ELIsomorphism>,
    /// Number of lattice isomorphisms between the fixed-point lattices.
    pub fix_iso_count: usize,
    /// How many of them preserve every ε-class size (the extendable ones).
    pub admissible_count: usize,
}

/// Searches for an ε-lattice isomorphism `l1 → l2`. A fixed-lattice
/// isomorphism `g` is admissible iff `|[a]| = |[g(a)]|` for every fixed point;
/// the witness extends the first admissible `g` by the identity-like class
/// bijections (representative to representative, remaining members in
/// ascending order).
pub fn el_isomorphism_search(
    l1: &Arc<ELattice>,
    l2: &Arc<ELattice>,
) -> Result<IsoSearch, MorphismError> {
    canonical_checked(l1, "source")?;
    canonical_checked(l2, "target")?;
    let f1 = l1.fix_lattice()?;
    let f2 = l2.fix_lattice()?;
    let sizes1 = l1.class_sizes();
    let sizes2 = l2.class_sizes();
    let isos = fix_isomorphisms(&f1, &f2);
    let fix_iso_count = isos.len();
    let admissible: Vec<Vec<usize>> = isos
        .into_iter()
        .filter(|g| is_admissible(g, &f1, &sizes1, &f2, &sizes2))
        .collect();
    let admissible_count = admissible.len();
    let witness = admissible.first().map(|g| {
        let mut enumerator = ELIsoEnumerator::with_isos(l1, l2, vec![g.clone()]);
        enumerator.next().expect("admissible iso extends")
    });
    if let Some(w) = &witness {
        debug_assert_eq!(
            check_el_morphism(&w.as_map(l1, l2)).unwrap(),
            Verdict::Iso
        );
    }
    Ok(IsoSearch {
        witness,
        fix_iso_count,
        admissible_count,
    })
}

/// Lazy enumeration of every ε-lattice isomorphism `l1 → l2`, in canonical
/// order: admissible fixed-lattice isomorphisms in lexicographic order, and
/// for each, the per-class bijections advanced like an odometer (last class
/// fastest, each class stepping through the permutations of the image class's
/// non-representative members in lexicographic order).
pub struct ELIsoEnumerator {
    l1: Arc<ELattice>,
    isos: Vec<Vec<usize>>,
    fix1: Vec<usize>,
    /// Non-representative members per source class, ascending.
    src_rest: Vec<Vec<usize>>,
    classes2: Vec<(usize, Vec<usize>)>,
    iso_idx: usize,
    /// Current image assignment per class: a permutation of the target class's
    /// non-representative members.
    assignment: Vec<Vec<usize>>,
    done: bool,
}

impl ELIsoEnumerator {
    pub fn new(l1: &Arc<ELattice>, l2: &Arc<ELattice>) -> Result<ELIsoEnumerator, MorphismError> {
        canonical_checked(l1, "source")?;
        canonical_checked(l2, "target")?;
        let f1 = l1.fix_lattice()?;
        let f2 = l2.fix_lattice()?;
        let sizes1 = l1.class_sizes();
        let sizes2 = l2.class_sizes();
        let admissible: Vec<Vec<usize>> = fix_isomorphisms(&f1, &f2)
            .into_iter()
            .filter(|g| is_admissible(g, &f1, &sizes1, &f2, &sizes2))
            .collect();
        Ok(ELIsoEnumerator::with_isos(l1, l2, admissible))
    }

    /// Enumerator restricted to an explicit list of fixed-lattice isomorphisms
    /// (carrier maps on the fixed points, in fixed-point order). The caller is
    /// responsible for their admissibility.
    pub fn with_isos(l1: &Arc<ELattice>, l2: &Arc<ELattice>, isos: Vec<Vec<usize>>) -> ELIsoEnumerator {
        let classes1 = l1.classes().classes;
        let fix1: Vec<usize> = classes1.iter().map(|(f, _)| *f).collect();
        let src_rest: Vec<Vec<usize>> = classes1
            .iter()
            .map(|(f, members)| members.iter().copied().filter(|m| m != f).collect())
            .collect();
        let classes2 = l2.classes().classes;
        let mut e = ELIsoEnumerator {
            l1: l1.clone(),
            isos,
            fix1,
            src_rest,
            classes2,
            iso_idx: 0,
            assignment: Vec::new(),
            done: false,
        };
        if e.isos.is_empty() {
            e.done = true;
        } else {
            e.reset_assignment();
        }
        e
    }

    /// Total number of isomorphisms: (admissible fix isos) × ∏ (mᵢ − 1)!.
    pub fn total(&self) -> BigUint {
        let mut t = BigUint::from(self.isos.len());
        for rest in &self.src_rest {
            t *= factorial(rest.len());
        }
        t
    }

    fn target_rest(&self, class: usize) -> Vec<usize> {
        let g = &self.isos[self.iso_idx];
        let image_rep = g[class];
        let (_, members) = self
            .classes2
            .iter()
            .find(|(f, _)| *f == image_rep)
            .expect("admissible image class exists");
        members.iter().copied().filter(|&m| m != image_rep).collect()
    }

    fn reset_assignment(&mut self) {
        self.assignment = (0..self.fix1.len()).map(|c| self.target_rest(c)).collect();
    }

    fn emit(&self) -> ELIsomorphism {
        let g = &self.isos[self.iso_idx];
        let mut total = vec![0usize; self.l1.size];
        for (c, &rep) in self.fix1.iter().enumerate() {
            total[rep] = g[c];
            for (&s, &t) in self.src_rest[c].iter().zip(&self.assignment[c]) {
                total[s] = t;
            }
        }
        ELIsomorphism::from_total(&self.l1, total)
    }

    fn advance(&mut self) {
        for c in (0..self.assignment.len()).rev() {
            if next_permutation(&mut self.assignment[c]) {
                for later in (c + 1)..self.assignment.len() {
                    self.assignment[later] = self.target_rest(later);
                }
                return;
            }
        }
        self.iso_idx += 1;
        if self.iso_idx >= self.isos.len() {
            self.done = true;
        } else {
            self.reset_assignment();
        }
    }
}

impl Iterator for ELIsoEnumerator {
    type Item = ELIsomorphism;

    fn next(&mut self) -> Option<ELIsomorphism> {
        if self.done {
            return None;
        }
        let item = self.emit();
        self.advance();
        Some(item)
    }
}

/// Lexicographic successor in place; `false` (and re-sorts ascending) when the
/// sequence was the last one.
fn next_permutation(seq: &mut [usize]) -> bool {
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

pub fn factorial(n: usize) -> BigUint {
    (2..=n as u64).map(BigUint::from).product()
}

/// Structural description of `Aut_E(L)` for a canonical ε-lattice.
#[derive(Clone, Debug)]
pub struct AutEDecomposition {
    /// ε-class sizes `mᵢ`, in fixed-point order.
    pub class_sizes: Vec<usize>,
    /// The factors `(mᵢ − 1)!` with `mᵢ ≥ 2`, as (class size, factorial) pairs.
    pub kernel_factors: Vec<(usize, BigUint)>,
    /// `∏ᵢ (mᵢ − 1)!` — the order of the kernel of ψ (= image of φ).
    pub kernel_order: BigUint,
    pub aut_fix_order: usize,
    /// Order of the subgroup of class-size-preserving lattice automorphisms.
    pub im_psi_order: usize,
    pub total_order: BigUint,
    /// Human form `∏(mᵢ−1)! × |Im ψ|`, e.g. `23! × 3!` or `4! × 6`.
    pub factored: String,
    /// Fixed-point lattice is fully ordered; then `Aut(Fix ε)` is trivial and
    /// the total order is exactly `∏(mᵢ−1)!`.
    pub fix_is_chain: bool,
    /// Whether ψ reaches all of `Aut(Fix ε)`.
    pub psi_onto: bool,
}

pub fn aut_e_decomposition(l: &Arc<ELattice>) -> Result<AutEDecomposition, MorphismError> {
    canonical_checked(l, "source")?;
    let fix = l.fix_lattice()?;
    let sizes = l.class_sizes();
    let autos = fix_isomorphisms(&fix, &fix);
    let admissible: Vec<&Vec<usize>> = autos
        .iter()
        .filter(|g| is_admissible(g, &fix, &sizes, &fix, &sizes))
        .collect();
    // Im ψ is a subgroup of Aut(Fix ε): contains the identity and is closed
    // under composition and inversion, so Lagrange applies.
    debug_assert!(admissible.is_empty() || autos.len().is_multiple_of(admissible.len()));

    let kernel_factors: Vec<(usize, BigUint)> = sizes
        .iter()
        .filter(|&&m| m >= 2)
        .map(|&m| (m, factorial(m - 1)))
        .collect();
    let kernel_order: BigUint = kernel_factors.iter().map(|(_, f)| f.clone()).product();
    let im_psi_order = admissible.len();
    let total_order = kernel_order.clone() * BigUint::from(im_psi_order);

    let mut parts: Vec<String> = sizes
        .iter()
        .filter(|&&m| m >= 3)
        .map(|&m| format!("{}!", m - 1))
        .collect();
    if im_psi_order > 1 {
        parts.push(im_psi_order.to_string());
    }
    let factored = if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" × ")
    };

    Ok(AutEDecomposition {
        class_sizes: sizes,
        kernel_factors,
        kernel_order,
        aut_fix_order: autos.len(),
        im_psi_order,
        total_order,
        factored,
        fix_is_chain: fix.lattice.is_chain(),
        psi_onto: im_psi_order == autos.len(),
    })
}

/// The complete list of ε-lattice automorphisms, assembled from the admissible
/// fixed-lattice automorphisms and all class bijections. Errors out when the
/// total exceeds `max_order` (use the decomposition instead).
pub fn enumerate_aut_e(l: &Arc<ELattice>, max_order: usize) -> Result<Vec<ELMap>, MorphismError> {
    let e = ELIsoEnumerator::new(l, l)?;
    let total = e.total();
    if total > BigUint::from(max_order) {
        return Err(MorphismError::ThresholdExceeded {
            total: total.to_string(),
            max: max_order,
        });
    }
    Ok(e.map(|iso| iso.as_map(l, l)).collect())
}

/// Independent oracle: filters all carrier bijections by the definition-level
/// check. Factorial in the carrier size; intended for carriers ≤ 7.
pub fn brute_force_el_isomorphisms(l1: &Arc<ELattice>, l2: &Arc<ELattice>) -> Vec<Vec<usize>> {
    if l1.size != l2.size {
        return Vec::new();
    }
    let mut perm: Vec<usize> = (0..l1.size).collect();
    let mut out = Vec::new();
    loop {
        let m = ELMap {
            source: l1.clone(),
            target: l2.clone(),
            map: perm.clone(),
        };
        if check_el_morphism(&m).expect("well-formed map") == Verdict::Iso {
            out.push(perm.clone());
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::analyze;
    use crate::catalog::catalog_group;
    use crate::config::Config;
    use crate::elattice::inflate;
    use crate::lattice::{chain, diamond};

    fn el(name: &str) -> Arc<ELattice> {
        let g = catalog_group(name, &Config::default()).unwrap();
        analyze(g, &Config::default()).unwrap().elattice
    }

    fn id_el(base: &crate::lattice::Lattice) -> Arc<ELattice> {
        Arc::new(inflate(base, &vec![1; base.len()]).unwrap())
    }

    #[test]
    fn identity_is_an_isomorphism() {
        for l in [el("S3"), el("Q8"), id_el(&diamond(3))] {
            let m = ELMap {
                source: l.clone(),
                target: l.clone(),
                map: (0..l.size).collect(),
            };
            assert_eq!(check_el_morphism(&m).unwrap(), Verdict::Iso);
        }
    }

    #[test]
    fn constant_map_to_fixed_point_is_a_homomorphism() {
        let l = el("S3");
        let t = l.fix_points()[0];
        let m = ELMap {
            source: l.clone(),
            target: l.clone(),
            map: vec![t; l.size],
        };
        assert_eq!(check_el_morphism(&m).unwrap(), Verdict::Hom);
    }

    #[test]
    fn constant_map_to_non_fixed_point_breaks_eps() {
        let l = el("S3");
        let non_fixed = (0..l.size).find(|&a| l.eps(a) != a).unwrap();
        let m = ELMap {
            source: l.clone(),
            target: l.clone(),
            map: vec![non_fixed; l.size],
        };
        assert_eq!(
            check_el_morphism(&m).unwrap(),
            Verdict::NotHom(HomViolation::Eps { a: 0 })
        );
    }

    #[test]
    fn meet_retraction_on_m3_breaks_join_first() {
        // M3 ids: 0 bottom, 1..3 atoms, 4 top. x ↦ x ∧ atom1 preserves all
        // meets but not the join of the other two atoms.
        let l = id_el(&diamond(3));
        let m = ELMap {
            source: l.clone(),
            target: l.clone(),
            map: vec![0, 1, 0, 0, 1],
        };
        assert_eq!(
            check_el_morphism(&m).unwrap(),
            Verdict::NotHom(HomViolation::Join { a: 2, b: 3 })
        );
    }

    #[test]
    fn malformed_maps_are_rejected() {
        let l = el("S3");
        let short = ELMap {
            source: l.clone(),
            target: l.clone(),
            map: vec![0, 1],
        };
        assert!(matches!(
            check_el_morphism(&short),
            Err(MorphismError::MalformedMap { .. })
        ));
    }

    #[test]
    fn search_on_q8_vs_d4_finds_fix_isos_but_no_witness() {
        let q8 = el("Q8");
        let d4 = el("D4");
        let search = el_isomorphism_search(&q8, &d4).unwrap();
        assert!(search.witness.is_none());
        assert!(search.fix_iso_count >= 1); // N(Q8) ≅ N(D4)
        assert_eq!(search.admissible_count, 0); // class sizes (1,…) vs (5,1,…)
    }

    #[test]
    fn search_on_z3z3_vs_s3_fails_despite_lattice_isomorphism() {
        let z = el("Z3xZ3");
        let s = el("S3");
        // the plain subgroup lattices are isomorphic (both height-2 with 4 atoms)
        let g1 = catalog_group("Z3xZ3", &Config::default()).unwrap();
        let g2 = catalog_group("S3", &Config::default()).unwrap();
        let a1 = analyze(g1, &Config::default()).unwrap();
        let a2 = analyze(g2, &Config::default()).unwrap();
        assert!(a1.plain_lattice().first_isomorphism(&a2.plain_lattice()).is_some());
        let search = el_isomorphism_search(&z, &s).unwrap();
        assert!(search.witness.is_none());
    }

    #[test]
    fn search_finds_identity_on_self() {
        let l = el("D4");
        let search = el_isomorphism_search(&l, &l).unwrap();
        let w = search.witness.unwrap();
        assert_eq!(
            check_el_morphism(&w.as_map(&l, &l)).unwrap(),
            Verdict::Iso
        );
        // first admissible fix auto is the identity, so the canonical witness
        // fixes every fixed point
        assert!(w.fix_pairs.iter().all(|&(a, b)| a == b));
    }

    #[test]
    fn search_symmetry() {
        let names = ["S3", "Q8", "D4", "Z3xZ3", "C4", "C6", "C10"];
        for a in names {
            for b in names {
                let (la, lb) = (el(a), el(b));
                let ab = el_isomorphism_search(&la, &lb).unwrap().witness.is_some();
                let ba = el_isomorphism_search(&lb, &la).unwrap().witness.is_some();
                assert_eq!(ab, ba, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn decomposition_s3() {
        let d = aut_e_decomposition(&el("S3")).unwrap();
        assert_eq!(d.class_sizes, vec![4, 1, 1]);
        assert!(d.fix_is_chain);
        assert_eq!(d.aut_fix_order, 1);
        assert_eq!(d.im_psi_order, 1);
        assert_eq!(d.total_order, BigUint::from(6u32));
        assert_eq!(d.factored, "3!");
        assert!(d.psi_onto);
    }

    #[test]
    fn decomposition_d4() {
        let d = aut_e_decomposition(&el("D4")).unwrap();
        assert_eq!(d.kernel_order, BigUint::from(24u32));
        assert_eq!(d.aut_fix_order, 6);
        assert_eq!(d.im_psi_order, 6);
        assert_eq!(d.total_order, BigUint::from(144u32));
        assert_eq!(d.factored, "4! × 6");
        assert!(!d.fix_is_chain);
    }

    #[test]
    fn decomposition_q8() {
        let d = aut_e_decomposition(&el("Q8")).unwrap();
        assert_eq!(d.kernel_order, BigUint::from(1u32));
        assert_eq!(d.aut_fix_order, 6);
        assert_eq!(d.total_order, BigUint::from(6u32));
    }

    #[test]
    fn decomposition_s4_has_factorial_scale() {
        let d = aut_e_decomposition(&el("S4")).unwrap();
        let mut sizes = d.class_sizes.clone();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 4, 24]);
        assert!(d.fix_is_chain);
        assert_eq!(d.factored, "23! × 3!");
        assert_eq!(d.total_order.to_string(), "155112100433309859840000");
    }

    #[test]
    fn psi_need_not_be_onto() {
        let l = Arc::new(inflate(&diamond(2), &[1, 2, 1, 1]).unwrap());
        let d = aut_e_decomposition(&l).unwrap();
        assert_eq!(d.aut_fix_order, 2); // the diamond swaps its atoms
        assert_eq!(d.im_psi_order, 1); // but class sizes 2 vs 1 block the swap
        assert_eq!(d.total_order, BigUint::from(1u32));
        assert!(!d.psi_onto);
        let brute = brute_force_el_isomorphisms(&l, &l);
        assert_eq!(brute.len(), 1);
    }

    #[test]
    fn enumeration_matches_brute_force_on_s3() {
        let l = el("S3");
        let listed = enumerate_aut_e(&l, 10_000).unwrap();
        assert_eq!(listed.len(), 6);
        for m in &listed {
            assert_eq!(check_el_morphism(m).unwrap(), Verdict::Iso);
        }
        let brute = brute_force_el_isomorphisms(&l, &l);
        assert_eq!(brute.len(), 6);
        let mut assembled: Vec<Vec<usize>> = listed.iter().map(|m| m.map.clone()).collect();
        assembled.sort();
        assert_eq!(assembled, brute);
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate_aut_e(&el("C4"), 100).unwrap().len(), 1);
        assert_eq!(enumerate_aut_e(&el("Q8"), 100).unwrap().len(), 6);
        assert_eq!(enumerate_aut_e(&el("D4"), 10_000).unwrap().len(), 144);
    }

    #[test]
    fn enumeration_respects_threshold() {
        assert!(matches!(
            enumerate_aut_e(&el("S4"), 10_000),
            Err(MorphismError::ThresholdExceeded { .. })
        ));
    }

    #[test]
    fn enumerator_starts_with_canonical_extension() {
        let l = el("S3");
        let first = ELIsoEnumerator::new(&l, &l).unwrap().next().unwrap();
        assert_eq!(first.total, (0..l.size).collect::<Vec<_>>());
    }

    #[test]
    fn non_canonical_inputs_are_rejected() {
        let mut broken = (*el("S3")).clone();
        broken.meet[1][2] = broken.size - 1;
        broken.meet[2][1] = broken.size - 1;
        let broken = Arc::new(broken);
        assert!(matches!(
            el_isomorphism_search(&broken, &el("S3")),
            Err(MorphismError::NotCanonical { .. })
        ));
        assert!(matches!(
            aut_e_decomposition(&broken),
            Err(MorphismError::NotCanonical { .. })
        ));
    }

    #[test]
    fn cross_isomorphism_between_inflation_and_subgroup_instance() {
        let inflated = Arc::new(inflate(&chain(3), &[4, 1, 1]).unwrap());
        let s3 = el("S3");
        let search = el_isomorphism_search(&inflated, &s3).unwrap();
        assert!(search.witness.is_some());
        let e = ELIsoEnumerator::new(&inflated, &s3).unwrap();
        assert_eq!(e.total(), BigUint::from(6u32));
        assert_eq!(e.count(), 6);
    }
}

//! The ε-lattice algebra: axiom checking, the subgroup ε-lattice of a finite
//! group, quotients by relations inside Ker ε, and the inflation construction.

use serde::{Deserialize, Serialize};

use crate::error::ELatticeError;
use crate::lattice::Lattice;
use crate::subgroups::SubgroupLattice;

/// A finite ε-lattice: a carrier `{0, …, size−1}`, the map ε, and full meet and
/// join tables. This struct is also the on-disk document format (JSON with
/// exactly these field names; indices 0-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ELattice {
    pub size: usize,
    pub eps: Vec<usize>,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub labels: Option<Vec<String>>,
}

/// One failed axiom instance, with the witnesses that falsify it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "law")]
pub enum AxiomViolation {
    /// ε(ε(a)) ≠ ε(a)
    EpsNotIdempotent { a: usize },
    /// a∧a ≠ ε(a) or a∨a ≠ ε(a)
    SelfOperation { a: usize },
    MeetCommutativity { a: usize, b: usize },
    JoinCommutativity { a: usize, b: usize },
    MeetAssociativity { a: usize, b: usize, c: usize },
    JoinAssociativity { a: usize, b: usize, c: usize },
    /// a∧(a∨b) ≠ ε(a) or a∨(a∧b) ≠ ε(a)
    Absorption { a: usize, b: usize },
}

/// Outcome of the exhaustive axiom scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub pass: bool,
    /// All operation results are fixed points of ε.
    pub canonical: bool,
    pub eps_idempotent: bool,
    /// Im ε = Fix ε (follows from idempotence; reported for completeness).
    pub image_equals_fix: bool,
    pub violation: Option<AxiomViolation>,
}

impl ELattice {
    pub fn eps(&self, a: usize) -> usize {
        self.eps[a]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    /// Structural validation: table dimensions and index ranges.
    pub fn validate_shape(&self) -> Result<(), ELatticeError> {
        let n = self.size;
        if n == 0 {
            return Err(ELatticeError::MalformedTable {
                msg: "carrier must be nonempty".into(),
            });
        }
        if self.eps.len() != n {
            return Err(ELatticeError::MalformedTable {
                msg: format!("eps has length {}, expected {n}", self.eps.len()),
            });
        }
        for (name, table) in [("meet", &self.meet), ("join", &self.join)] {
            if table.len() != n {
                return Err(ELatticeError::MalformedTable {
                    msg: format!("{name} has {} rows, expected {n}", table.len()),
                });
            }
            for (i, row) in table.iter().enumerate() {
                if row.len() != n {
                    return Err(ELatticeError::MalformedTable {
                        msg: format!("{name} row {i} has length {}, expected {n}", row.len()),
                    });
                }
                if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                    return Err(ELatticeError::MalformedTable {
                        msg: format!("{name}[{i}] contains out-of-range index {bad}"),
                    });
                }
            }
        }
        if let Some(&bad) = self.eps.iter().find(|&&x| x >= n) {
            return Err(ELatticeError::MalformedTable {
                msg: format!("eps contains out-of-range index {bad}"),
            });
        }
        if let Some(labels) = &self.labels {
            if labels.len() != n {
                return Err(ELatticeError::MalformedTable {
                    msg: format!("labels has length {}, expected {n}", labels.len()),
                });
            }
        }
        Ok(())
    }

    /// Fixed points of ε, ascending.
    pub fn fix_points(&self) -> Vec<usize> {
        (0..self.size).filter(|&a| self.eps[a] == a).collect()
    }

    pub fn classes(&self) -> ClassPartition {
        let fix = self.fix_points();
        let mut classes: Vec<(usize, Vec<usize>)> = fix.iter().map(|&f| (f, Vec::new())).collect();
        let pos: Vec<Option<usize>> = {
            let mut v = vec![None; self.size];
            for (i, &f) in fix.iter().enumerate() {
                v[f] = Some(i);
            }
            v
        };
        for a in 0..self.size {
            if let Some(i) = pos[self.eps[a]] {
                classes[i].1.push(a);
            }
        }
        ClassPartition {
            class_of: self.eps.clone(),
            classes,
        }
    }

    /// Sizes of the ε-classes, in fixed-point order.
    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes().classes.iter().map(|(_, m)| m.len()).collect()
    }

    /// The lattice of fixed points under the restricted operations.
    pub fn fix_lattice(&self) -> Result<FixLattice, ELatticeError> {
        let fix = self.fix_points();
        let pos: std::collections::HashMap<usize, usize> =
            fix.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let k = fix.len();
        let lattice = Lattice::from_tables(
            k,
            |a, b| pos[&self.meet(fix[a], fix[b])],
            |a, b| pos[&self.join(fix[a], fix[b])],
        )?;
        Ok(FixLattice { elements: fix, lattice })
    }
}

/// `(Fix ε, ∧°, ∨°)` with the carrier indices of its elements.
#[derive(Clone, Debug)]
pub struct FixLattice {
    /// Carrier indices of the fixed points, ascending; position `i` in
    /// `lattice` is `elements[i]`.
    pub elements: Vec<usize>,
    pub lattice: Lattice,
}

impl FixLattice {
    pub fn position_of(&self, carrier: usize) -> Option<usize> {
        self.elements.binary_search(&carrier).ok()
    }
}

/// The partition of the carrier modulo Ker ε: `class_of(a) = ε(a)`, and per
/// fixed point the list of carrier elements in its class.
#[derive(Clone, Debug)]
pub struct ClassPartition {
    pub class_of: Vec<usize>,
    pub classes: Vec<(usize, Vec<usize>)>,
}

/// Exhaustive check of the ε-lattice axioms: associativity and commutativity
/// of both operations, `a∧a = a∨a = ε(a)`, absorption to `ε(a)`, idempotence
/// of ε, and (reported separately) canonicity: all operation results lie in
/// Fix ε. The first violation found, in a fixed scan order, is reported.
pub fn verify_axioms(l: &ELattice) -> Result<AxiomReport, ELatticeError> {
    l.validate_shape()?;
    let n = l.size;
    let mut violation = None;
    let mut eps_idempotent = true;

    'scan: {
        for a in 0..n {
            if l.eps(l.eps(a)) != l.eps(a) {
                eps_idempotent = false;
                violation = Some(AxiomViolation::EpsNotIdempotent { a });
                break 'scan;
            }
        }
        for a in 0..n {
            if l.meet(a, a) != l.eps(a) || l.join(a, a) != l.eps(a) {
                violation = Some(AxiomViolation::SelfOperation { a });
                break 'scan;
            }
        }
        for a in 0..n {
            for b in 0..n {
                if l.meet(a, b) != l.meet(b, a) {
                    violation = Some(AxiomViolation::MeetCommutativity { a, b });
                    break 'scan;
                }
                if l.join(a, b) != l.join(b, a) {
                    violation = Some(AxiomViolation::JoinCommutativity { a, b });
                    break 'scan;
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if l.meet(a, l.meet(b, c)) != l.meet(l.meet(a, b), c) {
                        violation = Some(AxiomViolation::MeetAssociativity { a, b, c });
                        break 'scan;
                    }
                    if l.join(a, l.join(b, c)) != l.join(l.join(a, b), c) {
                        violation = Some(AxiomViolation::JoinAssociativity { a, b, c });
                        break 'scan;
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if l.meet(a, l.join(a, b)) != l.eps(a) || l.join(a, l.meet(a, b)) != l.eps(a) {
                    violation = Some(AxiomViolation::Absorption { a, b });
                    break 'scan;
                }
            }
        }
    }

    let pass = violation.is_none();
    let canonical = pass
        && (0..n).all(|a| {
            (0..n).all(|b| {
                l.eps(l.meet(a, b)) == l.meet(a, b) && l.eps(l.join(a, b)) == l.join(a, b)
            })
        });
    Ok(AxiomReport {
        pass,
        canonical,
        eps_idempotent,
        image_equals_fix: eps_idempotent,
        violation,
    })
}

/// The subgroup ε-lattice of a finite group: the carrier is the full subgroup
/// list, `ε(H)` is the normal core, `H₁ ∧ H₂ = ε(H₁) ∩ ε(H₂)` and
/// `H₁ ∨ H₂ = ε(H₁)·ε(H₂)`. The set product of two normal subgroups is checked
/// to be a subgroup equal to their lattice join rather than assumed.
pub fn subgroup_elattice(lat: &SubgroupLattice) -> Result<ELattice, ELatticeError> {
    let n = lat.len();
    let g = &lat.parent;
    let mut meet = vec![vec![0usize; n]; n];
    let mut join = vec![vec![0usize; n]; n];
    for a in 0..n {
        for b in a..n {
            let (ca, cb) = (lat.core_id(a), lat.core_id(b));
            let m = lat.meet_id(ca, cb);
            let product = g.product_set(&lat.subgroup(ca).members, &lat.subgroup(cb).members);
            let j = match lat.id_of(&product) {
                Some(j) => j,
                None => return Err(ELatticeError::ProductNotSubgroup { a, b }),
            };
            if j != lat.join_id(ca, cb) {
                return Err(ELatticeError::ProductNotSubgroup { a, b });
            }
            meet[a][b] = m;
            meet[b][a] = m;
            join[a][b] = j;
            join[b][a] = j;
        }
    }
    let eps: Vec<usize> = (0..n).map(|a| lat.core_id(a)).collect();
    let labels: Vec<String> = (0..n).map(|a| lat.name(a)).collect();
    Ok(ELattice {
        size: n,
        eps,
        meet,
        join,
        labels: Some(labels),
    })
}

/// The partition of the carrier by Ker ε, classes ordered by smallest member.
pub fn kernel_partition(l: &ELattice) -> Vec<Vec<usize>> {
    let mut classes: Vec<(usize, Vec<usize>)> = Vec::new();
    for a in 0..l.size {
        match classes.iter_mut().find(|(f, _)| *f == l.eps(a)) {
            Some((_, members)) => members.push(a),
            None => classes.push((l.eps(a), vec![a])),
        }
    }
    let mut out: Vec<Vec<usize>> = classes.into_iter().map(|(_, m)| m).collect();
    out.sort_by_key(|c| c[0]);
    out
}

/// Quotient of the carrier by an equivalence relation contained in Ker ε,
/// together with the isomorphism onto Fix ε (class ↦ the common ε-value).
#[derive(Clone, Debug)]
pub struct QuotientMod {
    /// The classes, each sorted, ordered by smallest member.
    pub classes: Vec<Vec<usize>>,
    pub lattice: Lattice,
    /// `iso_to_fix[c]` is the carrier index of the fixed point the class `c`
    /// maps to; a lattice isomorphism onto the fixed-point lattice.
    pub iso_to_fix: Vec<usize>,
}

/// Builds the quotient `L/∼` for `∼ ⊆ Ker ε`, given as a partition. The
/// operations are induced by ε-values. The construction yields a lattice
/// isomorphic to Fix ε exactly when `∼` equals Ker ε; a strictly finer
/// relation is rejected (idempotence would fail in the quotient), as is any
/// class mixing ε-values.
pub fn quotient_mod(l: &ELattice, partition: &[Vec<usize>]) -> Result<QuotientMod, ELatticeError> {
    l.validate_shape()?;
    let n = l.size;
    let mut class_of = vec![usize::MAX; n];
    for (c, members) in partition.iter().enumerate() {
        for &a in members {
            if a >= n || class_of[a] != usize::MAX {
                return Err(ELatticeError::MalformedTable {
                    msg: format!("partition repeats or exceeds the carrier at {a}"),
                });
            }
            class_of[a] = c;
        }
    }
    if class_of.contains(&usize::MAX) {
        return Err(ELatticeError::MalformedTable {
            msg: "partition does not cover the carrier".into(),
        });
    }
    for members in partition {
        for w in members.windows(2) {
            if l.eps(w[0]) != l.eps(w[1]) {
                return Err(ELatticeError::RelationNotInKernel { a: w[0], b: w[1] });
            }
        }
    }
    for a in 0..n {
        if class_of[a] != class_of[l.eps(a)] {
            return Err(ELatticeError::RelationFinerThanKernel { a });
        }
    }

    let mut classes: Vec<Vec<usize>> = partition
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.sort_unstable();
            c
        })
        .collect();
    classes.sort_by_key(|c| c[0]);
    let mut class_of = vec![0usize; n];
    for (c, members) in classes.iter().enumerate() {
        for &a in members {
            class_of[a] = c;
        }
    }
    let values: Vec<usize> = classes.iter().map(|c| l.eps(c[0])).collect();
    let lattice = Lattice::from_tables(
        classes.len(),
        |a, b| class_of[l.meet(values[a], values[b])],
        |a, b| class_of[l.join(values[a], values[b])],
    )?;
    Ok(QuotientMod {
        classes,
        lattice,
        iso_to_fix: values,
    })
}

/// Endows a set with a canonical ε-lattice structure over a base lattice: the
/// base elements stay as the fixed representatives of their classes, each class
/// gains `sizes[x] − 1` fresh carrier points, ε collapses a class to its
/// representative, and the operations factor through the base.
pub fn inflate(base: &Lattice, sizes: &[usize]) -> Result<ELattice, ELatticeError> {
    let k = base.len();
    if sizes.len() != k {
        return Err(ELatticeError::MalformedTable {
            msg: format!("expected {k} class sizes, got {}", sizes.len()),
        });
    }
    if let Some(bad) = sizes.iter().position(|&s| s == 0) {
        return Err(ELatticeError::ZeroClassSize { element: bad });
    }
    let total: usize = k + sizes.iter().map(|s| s - 1).sum::<usize>();
    let mut eps: Vec<usize> = (0..k).collect();
    for (x, &s) in sizes.iter().enumerate() {
        for _ in 1..s {
            eps.push(x);
        }
    }
    let meet: Vec<Vec<usize>> = (0..total)
        .map(|a| (0..total).map(|b| base.meet(eps[a], eps[b])).collect())
        .collect();
    let join: Vec<Vec<usize>> = (0..total)
        .map(|a| (0..total).map(|b| base.join(eps[a], eps[b])).collect())
        .collect();
    Ok(ELattice {
        size: total,
        eps,
        meet,
        join,
        labels: None,
    })
}

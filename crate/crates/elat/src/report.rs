//! Report payloads for the CLI. The machine-readable (JSON) form is fully
//! deterministic: field order is fixed, maps are sorted, and timing is kept out
//! of it (it goes to the human footer only), so repeated runs are byte-equal
//! and `parse(serialize(r)) = r`.

use serde::{Deserialize, Serialize};

use crate::elattice::AxiomReport;
use crate::morphisms::AutEDecomposition;
use crate::subgroups::Predicates;
use crate::suite::CheckResult;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report<T> {
    pub command: String,
    pub inputs: Vec<String>,
    pub result: T,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupRow {
    pub id: usize,
    pub name: String,
    pub order: usize,
    pub members: Vec<usize>,
    pub normal: bool,
    /// Subgroup id of the normal core (the ε-value).
    pub core: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub label: String,
    pub order: usize,
    pub degree: usize,
    pub identified: Option<String>,
    pub subgroup_count: usize,
    pub normal_count: usize,
    pub class_sizes: Vec<usize>,
    pub predicates: Predicates,
    pub frattini: usize,
    pub derived: usize,
    pub maximal: Vec<usize>,
    pub subgroups: Vec<SubgroupRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub class_sizes: Vec<usize>,
    pub kernel_factors: Vec<String>,
    pub kernel_order: String,
    pub aut_fix_order: usize,
    pub im_psi_order: usize,
    pub total_order: String,
    pub factored: String,
    pub fix_is_chain: bool,
    pub psi_onto: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl DecompositionReport {
    pub fn from(d: &AutEDecomposition) -> DecompositionReport {
        let note = if d.psi_onto {
            None
        } else {
            Some(
                "psi is not onto Aut(Fix ε): only class-size-preserving lattice automorphisms \
                 extend; exactness holds as Ker ψ = Im φ"
                    .to_string(),
            )
        };
        DecompositionReport {
            class_sizes: d.class_sizes.clone(),
            kernel_factors: d
                .kernel_factors
                .iter()
                .map(|(m, f)| format!("({}-1)! = {}", m, f))
                .collect(),
            kernel_order: d.kernel_order.to_string(),
            aut_fix_order: d.aut_fix_order,
            im_psi_order: d.im_psi_order,
            total_order: d.total_order.to_string(),
            factored: d.factored.clone(),
            fix_is_chain: d.fix_is_chain,
            psi_onto: d.psi_onto,
            note,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerReport {
    pub order: String,
    pub identified: Option<String>,
    pub materialized: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactnessReport {
    pub enumerated: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ker_psi_equals_im_phi: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutReport {
    pub label: String,
    pub order: usize,
    pub subgroup_count: usize,
    pub decomposition: DecompositionReport,
    pub aut0: TowerReport,
    pub aut1: TowerReport,
    pub aut2: TowerReport,
    pub aut2_in_aut0: bool,
    pub aut2_in_aut1: bool,
    pub aut2_normal_in_aut1: bool,
    pub exactness: ExactnessReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoVerdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareReport {
    pub left: String,
    pub right: String,
    /// Plain subgroup lattices isomorphic.
    pub l_isomorphic: IsoVerdict,
    /// Normal subgroup lattices isomorphic.
    pub n_isomorphic: IsoVerdict,
    /// Subgroup ε-lattices isomorphic.
    pub el_isomorphic: IsoVerdict,
    pub fix_isomorphisms: usize,
    pub admissible_isomorphisms: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub scope: Vec<String>,
    pub checks: Vec<CheckResult>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomsFileReport {
    pub size: usize,
    pub axioms: AxiomReport,
    pub fix_count: usize,
    pub class_sizes: Vec<usize>,
}

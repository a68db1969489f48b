//! Bundled per-group analysis: the group, its subgroup lattice, and its
//! subgroup ε-lattice, built once and shared.

use std::sync::Arc;

use crate::config::Config;
use crate::elattice::{subgroup_elattice, ELattice};
use crate::error::ELatticeError;
use crate::group::FiniteGroup;
use crate::lattice::Lattice;
use crate::subgroups::{all_subgroups, SubgroupLattice};

#[derive(Clone)]
pub struct Analysis {
    pub group: Arc<FiniteGroup>,
    pub lattice: Arc<SubgroupLattice>,
    pub elattice: Arc<ELattice>,
}

pub fn analyze(group: Arc<FiniteGroup>, cfg: &Config) -> Result<Analysis, ELatticeError> {
    let lattice = Arc::new(all_subgroups(&group, cfg.analysis_bound)?);
    let elattice = Arc::new(subgroup_elattice(&lattice)?);
    Ok(Analysis {
        group,
        lattice,
        elattice,
    })
}

impl Analysis {
    /// The full subgroup lattice (containment order) as a plain lattice.
    pub fn plain_lattice(&self) -> Lattice {
        let k = self.lattice.len();
        Lattice::from_tables(
            k,
            |a, b| self.lattice.meet_id(a, b),
            |a, b| self.lattice.join_id(a, b),
        )
        .expect("subgroup lattice satisfies the lattice laws")
    }
}

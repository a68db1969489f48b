//! Bounds and thresholds shared by the expensive operations.

/// Resource bounds. All enumerations in the crate are exact; these bounds only
/// decide when an operation refuses to run rather than degrade.
#[derive(Clone, Debug)]
pub struct Config {
    /// Maximum group order accepted by generator closure (`--max-order`).
    pub closure_bound: usize,
    /// Maximum group order for subgroup/automorphism enumeration.
    pub analysis_bound: usize,
    /// Maximum `|Aut_E(L)|` for which the automorphisms are listed explicitly
    /// (`--enum-threshold`). Beyond it only the factored decomposition is used.
    pub enum_threshold: usize,
    /// How many full extensions are sampled when a check quantifies over all
    /// ε-lattice isomorphisms between two carriers.
    pub extension_sample: usize,
    /// Maximum order up to which the kernel tower `Aut⁰` is materialized as an
    /// explicit permutation group (for catalog identification).
    pub materialize_bound: usize,
    /// Scope cut-off for pairwise suite checks.
    pub pairwise_order: usize,
    /// Scope cut-off for single-group suite checks.
    pub single_order: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            closure_bound: 10_000,
            analysis_bound: 64,
            enum_threshold: 10_000,
            extension_sample: 100,
            materialize_bound: 1_000,
            pairwise_order: 24,
            single_order: 48,
        }
    }
}

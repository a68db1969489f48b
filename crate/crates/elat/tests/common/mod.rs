//! Shared fixtures for the integration suites.
#![allow(dead_code)]

use std::sync::Arc;

use elat::analysis::{analyze, Analysis};
use elat::catalog::{catalog_group, catalog_names};
use elat::config::Config;
use elat::elattice::{inflate, ELattice};
use elat::lattice::{chain, diamond};

pub fn cfg() -> Config {
    Config::default()
}

/// Every catalog group with its full analysis.
pub fn catalog_analyses() -> Vec<(String, Analysis)> {
    let cfg = cfg();
    catalog_names()
        .iter()
        .map(|name| {
            let g = catalog_group(name, &cfg).expect("catalog builds");
            (name.to_string(), analyze(g, &cfg).expect("analyzable"))
        })
        .collect()
}

/// Inflated ε-lattices exercising shapes the catalog does not produce.
pub fn inflated_fixtures() -> Vec<(String, Arc<ELattice>)> {
    let items = [
        ("chain1", inflate(&chain(1), &[1]).unwrap()),
        ("chain2", inflate(&chain(2), &[1, 1]).unwrap()),
        ("chain2-sizes-2-3", inflate(&chain(2), &[2, 3]).unwrap()),
        ("chain3-sizes-4-1-1", inflate(&chain(3), &[4, 1, 1]).unwrap()),
        ("diamond2-sizes-1-2-1-1", inflate(&diamond(2), &[1, 2, 1, 1]).unwrap()),
        ("diamond3-identity", inflate(&diamond(3), &[1, 1, 1, 1, 1]).unwrap()),
    ];
    items
        .into_iter()
        .map(|(n, l)| (n.to_string(), Arc::new(l)))
        .collect()
}

//! `elat` — analyze canonical ε-lattices of finite groups.
//!
//! Exit codes: 0 ok, 1 check failure, 2 usage/parse error, 3 resource bound.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;

use elat::analysis::{analyze, Analysis};
use elat::catalog::{identify, parse_group_spec};
use elat::config::Config;
use elat::elattice::{verify_axioms, ELattice};
use elat::error::{ELatticeError, GroupError, MorphismError, SpecError, SuiteError};
use elat::morphisms::{el_isomorphism_search, enumerate_aut_e};
use elat::report::*;
use elat::subgroups::{frattini_derived, group_predicates};
use elat::suite::{build_corpus, default_scope, run_checks, Overall};
use elat::towers::aut_towers;

#[derive(Parser)]
#[command(name = "elat", version, about = "Canonical ε-lattices of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Machine-readable output (deterministic JSON).
    #[arg(long, global = true)]
    json: bool,
    /// Order bound for generator closure.
    #[arg(long, global = true, default_value_t = 10_000)]
    max_order: usize,
    /// Maximum |Aut_E| for explicit enumeration.
    #[arg(long, global = true, default_value_t = 10_000)]
    enum_threshold: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Subgroups, cores, ε-classes and predicates of a group.
    Group { spec: String },
    /// Aut_E decomposition and the Aut⁰/Aut¹/Aut² towers.
    Aut { spec: String },
    /// L-, N- and εL-isomorphism verdicts for two groups.
    Compare { spec1: String, spec2: String },
    /// Run named structural checks (or `all`) over the catalog.
    Verify {
        /// Check ids, or `all`.
        #[arg(default_values_t = vec!["all".to_string()])]
        checks: Vec<String>,
        /// Comma-separated catalog names restricting the scope.
        #[arg(long)]
        scope: Option<String>,
    },
    /// Verify the ε-lattice axioms for a JSON document.
    Axioms { file: std::path::PathBuf },
}

enum CmdError {
    Usage(String),
    Bound(String),
}

impl From<SpecError> for CmdError {
    fn from(e: SpecError) -> Self {
        match e {
            SpecError::Group(g) => g.into(),
            other => CmdError::Usage(other.to_string()),
        }
    }
}

impl From<GroupError> for CmdError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::TooLarge { .. } | GroupError::BoundExceeded { .. } => {
                CmdError::Bound(e.to_string())
            }
            other => CmdError::Usage(other.to_string()),
        }
    }
}

impl From<ELatticeError> for CmdError {
    fn from(e: ELatticeError) -> Self {
        match e {
            ELatticeError::Group(g) => g.into(),
            other => CmdError::Usage(other.to_string()),
        }
    }
}

impl From<MorphismError> for CmdError {
    fn from(e: MorphismError) -> Self {
        match e {
            MorphismError::ThresholdExceeded { .. } => CmdError::Bound(e.to_string()),
            MorphismError::ELattice(inner) => inner.into(),
            other => CmdError::Usage(other.to_string()),
        }
    }
}

impl From<SuiteError> for CmdError {
    fn from(e: SuiteError) -> Self {
        match e {
            SuiteError::Group(g) => g.into(),
            SuiteError::ELattice(l) => l.into(),
            SuiteError::Morphism(m) => m.into(),
            other => CmdError::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    // die quietly when the output pipe closes (e.g. `elat group G | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let cfg = Config {
        closure_bound: cli.max_order,
        enum_threshold: cli.enum_threshold,
        ..Config::default()
    };
    let started = Instant::now();
    let outcome = match &cli.command {
        Command::Group { spec } => cmd_group(spec, &cfg, cli.json),
        Command::Aut { spec } => cmd_aut(spec, &cfg, cli.json),
        Command::Compare { spec1, spec2 } => cmd_compare(spec1, spec2, &cfg, cli.json),
        Command::Verify { checks, scope } => cmd_verify(checks, scope.as_deref(), &cfg, cli.json),
        Command::Axioms { file } => cmd_axioms(file, cli.json),
    };
    match outcome {
        Ok(check_failed) => {
            if !cli.json {
                println!("elapsed: {} ms", started.elapsed().as_millis());
            }
            if check_failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(CmdError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CmdError::Bound(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn print_report<T: serde::Serialize>(report: &Report<T>) {
    println!(
        "{}",
        serde_json::to_string_pretty(report).expect("report serializes")
    );
}

fn load(spec: &str, cfg: &Config) -> Result<Analysis, CmdError> {
    let group = parse_group_spec(spec, cfg)?;
    Ok(analyze(group, cfg)?)
}

fn cmd_group(spec: &str, cfg: &Config, json: bool) -> Result<bool, CmdError> {
    let a = load(spec, cfg)?;
    let lat = &a.lattice;
    let el = &a.elattice;
    let predicates = group_predicates(&a.group, lat, cfg)?;
    let fd = frattini_derived(lat);
    let identified = identify(&a.group, cfg)?.map(|s| s.to_string());
    let subgroups: Vec<SubgroupRow> = (0..lat.len())
        .map(|id| SubgroupRow {
            id,
            name: lat.name(id),
            order: lat.subgroup(id).order(),
            members: lat.subgroup(id).members.members(),
            normal: lat.is_normal(id),
            core: lat.core_id(id),
        })
        .collect();
    let result = GroupReport {
        label: a.group.label().to_string(),
        order: a.group.order(),
        degree: a.group.degree(),
        identified,
        subgroup_count: lat.len(),
        normal_count: lat.normal_ids().len(),
        class_sizes: el.class_sizes(),
        predicates,
        frattini: fd.frattini,
        derived: fd.derived,
        maximal: fd.maximal,
        subgroups,
    };
    let report = Report {
        command: "group".to_string(),
        inputs: vec![spec.to_string()],
        result,
    };
    if json {
        print_report(&report);
    } else {
        render_group(&report.result);
    }
    Ok(false)
}

fn render_group(r: &GroupReport) {
    println!("group {}: order {}, degree {}", r.label, r.order, r.degree);
    match &r.identified {
        Some(name) => println!("identified as: {name}"),
        None => println!("identified as: unknown"),
    }
    println!(
        "subgroups: {} (normal: {}), eps-class sizes {:?}",
        r.subgroup_count, r.normal_count, r.class_sizes
    );
    let p = &r.predicates;
    println!(
        "predicates: abelian={} dedekind={} hamiltonian={} simple={} primary={} nilpotent={} hamiltonian-quotients-primary={}",
        p.abelian, p.dedekind, p.hamiltonian, p.simple, p.primary, p.nilpotent,
        p.hamiltonian_quotients_primary
    );
    let name = |id: usize| {
        r.subgroups
            .iter()
            .find(|s| s.id == id)
            .map(|s| s.name.clone())
            .unwrap_or_default()
    };
    println!(
        "frattini: {} (order {}); derived: {} (order {}); maximal: {:?}",
        name(r.frattini),
        r.subgroups[r.frattini].order,
        name(r.derived),
        r.subgroups[r.derived].order,
        r.maximal.iter().map(|&m| name(m)).collect::<Vec<_>>()
    );
    println!("  {:<5} {:<6} {:<7} {:<6} members", "id", "order", "normal", "core");
    for s in &r.subgroups {
        println!(
            "  {:<5} {:<6} {:<7} {:<6} {:?}",
            s.name,
            s.order,
            s.normal,
            name(s.core),
            s.members
        );
    }
}

fn cmd_aut(spec: &str, cfg: &Config, json: bool) -> Result<bool, CmdError> {
    let a = load(spec, cfg)?;
    let towers = aut_towers(&a, cfg)?;
    let d = &towers.decomposition;
    let exactness = if d.total_order <= BigUint::from(cfg.enum_threshold) {
        let maps = enumerate_aut_e(&a.elattice, cfg.enum_threshold)?;
        let fix = a.elattice.fix_points();
        let ker: std::collections::BTreeSet<Vec<usize>> = maps
            .iter()
            .filter(|m| fix.iter().all(|&f| m.map[f] == f))
            .map(|m| m.map.clone())
            .collect();
        let im: std::collections::BTreeSet<Vec<usize>> =
            elat::morphisms::ELIsoEnumerator::with_isos(
                &a.elattice,
                &a.elattice,
                vec![fix.clone()],
            )
            .map(|iso| iso.total)
            .collect();
        ExactnessReport {
            enumerated: true,
            count: Some(maps.len()),
            ker_psi_equals_im_phi: Some(ker == im),
        }
    } else {
        ExactnessReport {
            enumerated: false,
            count: None,
            ker_psi_equals_im_phi: None,
        }
    };
    let tower_report = |order: String, id: Option<&'static str>, mat: bool| TowerReport {
        order,
        identified: id.map(|s| s.to_string()),
        materialized: mat,
    };
    let result = AutReport {
        label: a.group.label().to_string(),
        order: a.group.order(),
        subgroup_count: a.lattice.len(),
        decomposition: DecompositionReport::from(d),
        aut0: tower_report(
            towers.aut0_order.to_string(),
            towers.aut0.as_ref().and_then(|t| t.identified),
            towers.aut0.is_some(),
        ),
        aut1: tower_report(
            towers.aut1.order().to_string(),
            towers.aut1.identified,
            true,
        ),
        aut2: tower_report(
            towers.aut2.order().to_string(),
            towers.aut2.identified,
            true,
        ),
        aut2_in_aut0: towers.aut2_in_aut0,
        aut2_in_aut1: towers.aut2_in_aut1,
        aut2_normal_in_aut1: towers.aut2_normal_in_aut1,
        exactness,
    };
    let report = Report {
        command: "aut".to_string(),
        inputs: vec![spec.to_string()],
        result,
    };
    if json {
        print_report(&report);
    } else {
        render_aut(&report.result);
    }
    Ok(false)
}

fn render_aut(r: &AutReport) {
    println!(
        "group {}: order {}, {} subgroups",
        r.label, r.order, r.subgroup_count
    );
    let d = &r.decomposition;
    println!(
        "|Aut_E| = {} = {} (kernel {} × Im ψ {})",
        d.total_order, d.factored, d.kernel_order, d.im_psi_order
    );
    println!(
        "class sizes {:?}; |Aut(Fix ε)| = {}; fixed lattice chain: {}",
        d.class_sizes, d.aut_fix_order, d.fix_is_chain
    );
    if let Some(note) = &d.note {
        println!("note: {note}");
    }
    let show = |tag: &str, t: &TowerReport| {
        println!(
            "{tag}: order {} -> {}{}",
            t.order,
            t.identified.as_deref().unwrap_or("unknown"),
            if t.materialized { "" } else { " (not materialized)" }
        );
    };
    show("Aut0 (identity on N(G))", &r.aut0);
    show("Aut1 (group automorphisms)", &r.aut1);
    show("Aut2 (conjugations)", &r.aut2);
    println!(
        "containments: Aut2 ⊆ Aut0: {}; Aut2 ⊆ Aut1: {}; Aut2 ⊴ Aut1: {}",
        r.aut2_in_aut0, r.aut2_in_aut1, r.aut2_normal_in_aut1
    );
    match (&r.exactness.count, &r.exactness.ker_psi_equals_im_phi) {
        (Some(c), Some(ok)) => println!("exactness: enumerated {c} automorphisms; Ker ψ = Im φ: {ok}"),
        _ => println!("exactness: structural only (above enumeration threshold)"),
    }
}

fn cmd_compare(spec1: &str, spec2: &str, cfg: &Config, json: bool) -> Result<bool, CmdError> {
    let a = load(spec1, cfg)?;
    let b = load(spec2, cfg)?;
    let plain_a = a.plain_lattice();
    let plain_b = b.plain_lattice();
    let l_w = plain_a.first_isomorphism(&plain_b);
    let fix_a = a.elattice.fix_lattice()?;
    let fix_b = b.elattice.fix_lattice()?;
    let n_w = fix_a.lattice.first_isomorphism(&fix_b.lattice);
    let search = el_isomorphism_search(&a.elattice, &b.elattice)?;
    let result = CompareReport {
        left: a.group.label().to_string(),
        right: b.group.label().to_string(),
        l_isomorphic: IsoVerdict {
            holds: l_w.is_some(),
            witness: l_w,
        },
        n_isomorphic: IsoVerdict {
            holds: n_w.is_some(),
            witness: n_w,
        },
        el_isomorphic: IsoVerdict {
            holds: search.witness.is_some(),
            witness: search.witness.as_ref().map(|w| w.total.clone()),
        },
        fix_isomorphisms: search.fix_iso_count,
        admissible_isomorphisms: search.admissible_count,
    };
    let report = Report {
        command: "compare".to_string(),
        inputs: vec![spec1.to_string(), spec2.to_string()],
        result,
    };
    if json {
        print_report(&report);
    } else {
        let r = &report.result;
        println!("compare {} vs {}", r.left, r.right);
        println!("L-isomorphic  (subgroup lattices): {}", r.l_isomorphic.holds);
        println!("N-isomorphic  (normal lattices):   {}", r.n_isomorphic.holds);
        println!("εL-isomorphic (ε-lattices):        {}", r.el_isomorphic.holds);
        println!(
            "fix-lattice isomorphisms: {} ({} admissible)",
            r.fix_isomorphisms, r.admissible_isomorphisms
        );
    }
    Ok(false)
}

fn cmd_verify(
    checks: &[String],
    scope: Option<&str>,
    cfg: &Config,
    json: bool,
) -> Result<bool, CmdError> {
    let scope: Vec<String> = match scope {
        Some(s) => s.split(',').map(|x| x.trim().to_string()).collect(),
        None => default_scope(),
    };
    let corpus = build_corpus(&scope, cfg)?;
    let results = run_checks(&corpus, checks, cfg)?;
    let any_fail = results.iter().any(|r| r.overall == Overall::Fail);
    let report = Report {
        command: "verify".to_string(),
        inputs: checks.to_vec(),
        result: VerifyReport {
            scope,
            checks: results,
        },
    };
    if json {
        print_report(&report);
    } else {
        for check in &report.result.checks {
            let status = match check.overall {
                Overall::Pass => {
                    if check.vacuous {
                        "PASS (vacuous)"
                    } else {
                        "PASS"
                    }
                }
                Overall::Fail => "FAIL",
                Overall::Divergence => "DIVERGENCE (computed value differs from published reference)",
            };
            println!(
                "{:<24} {:<60} [{} instances]",
                check.check_id,
                status,
                check.instances.len()
            );
            for inst in &check.instances {
                if inst.verdict != "pass" {
                    println!("    {} -> {}: {}", inst.input, inst.verdict, inst.witness);
                }
            }
        }
    }
    Ok(any_fail)
}

fn cmd_axioms(path: &std::path::Path, json: bool) -> Result<bool, CmdError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CmdError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let lattice: ELattice = serde_json::from_str(&text).map_err(|e| {
        CmdError::Usage(format!(
            "malformed ε-lattice document (line {}, column {}): {e}",
            e.line(),
            e.column()
        ))
    })?;
    let axioms = verify_axioms(&lattice)?;
    let failed = !axioms.pass;
    let result = AxiomsFileReport {
        size: lattice.size,
        fix_count: lattice.fix_points().len(),
        class_sizes: if axioms.pass {
            lattice.class_sizes()
        } else {
            Vec::new()
        },
        axioms,
    };
    let report = Report {
        command: "axioms".to_string(),
        inputs: vec![path.display().to_string()],
        result,
    };
    if json {
        print_report(&report);
    } else {
        let r = &report.result;
        println!(
            "axioms: {}; canonical: {}",
            if r.axioms.pass { "PASS" } else { "FAIL" },
            r.axioms.canonical
        );
        if let Some(v) = &r.axioms.violation {
            println!("first violation: {v:?}");
        } else {
            println!(
                "carrier {}, {} fixed points, class sizes {:?}",
                r.size, r.fix_count, r.class_sizes
            );
        }
    }
    Ok(failed)
}

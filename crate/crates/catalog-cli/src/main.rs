//! `lattice-catalog`: exact-arithmetic lattice inspection and the
//! verification suite.
//!
//! Lattice arguments (`SPEC`) are resolved in three steps: a catalog id
//! (`L4`, `L3`, `L6`, `L5`, `L6prime`, `LK3`), then a constructor
//! expression such as `U(3)+E8(-1)^2`, then a path to a lattice file.
//! Set `LATTICE_CATALOG_CONFIG` to a config file to widen search boxes
//! or brute-force caps for a whole invocation.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use catalog_cli::config::{load_config, Config, CONFIG_ENV};
use catalog_cli::entries::{catalog_entries, find_entry, lk3, mu_rows, MuData};
use catalog_cli::expr::parse_expr;
use catalog_cli::formats::{load_isometry_file, load_lattice_file, render_lattice_file};
use catalog_cli::report::Status;
use catalog_cli::suite::{run_paper_suite, SuiteOptions, CANONICAL_IDS};
use catalog_cli::Error;

use enumeration_embedding::{
    d_value, find_primitive_embedding, invariants_match, orthogonal_complement,
    verify_primitive_embedding, EmbeddingMap, SearchBox,
};
use isometry_actions::{
    ball_dimension, cyclotomic_profile, disc_action_trivial, fixed_sublattice,
    orthogonal_group_order_mod_p, order_of, verify_isometry,
};
use lattice_core::Lattice;
use normal_forms::{discriminant_form, discriminant_group};

#[derive(Parser)]
#[command(
    name = "lattice-catalog",
    about = "Exact-arithmetic lattice catalog and verification suite",
    long_about = None,
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Aligned table with measured per-row runtimes.
    Text,
    /// Deterministic JSON with fixed key order.
    #[value(name = "json-like-structured")]
    JsonLikeStructured,
}

#[derive(Subcommand)]
enum Cmd {
    /// Rank, determinant, signature, parity, discriminant group
    Info { spec: String },
    /// Discriminant group and finite quadratic form (even lattices)
    Disc { spec: String },
    /// Degree invariant d(L) with its exactness certificate
    Dvalue {
        spec: String,
        /// Sup-norm bound for the coefficient box
        #[arg(long = "box")]
        box_bound: Option<u32>,
    },
    /// Search for a primitive embedding SOURCE -> TARGET
    Embed {
        source: String,
        target: String,
        #[arg(long = "box")]
        box_bound: Option<u32>,
    },
    /// Orthogonal complement of SOURCE inside TARGET
    Complement {
        source: String,
        target: String,
        #[arg(long = "box")]
        box_bound: Option<u32>,
    },
    /// Compare rank, signature, parity and discriminant form
    Match { left: String, right: String },
    /// Order, cyclotomic profile, invariant rank, discriminant action
    Profile {
        spec: String,
        isometry_file: PathBuf,
    },
    /// Period-domain dimensions for the catalog action data
    Balldim,
    /// Discriminant orthogonal group orders for the catalog complements
    Grouporder,
    /// Run the verification suite
    VerifyPaper {
        /// Comma-separated list of check ids to run
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Resolve a lattice argument: catalog id, then expression, then file.
fn resolve_lattice(spec: &str) -> Result<Lattice, Error> {
    if spec == "LK3" {
        return Ok(lk3());
    }
    if ["L4", "L3", "L6", "L5", "L6prime"].contains(&spec) {
        let entries = catalog_entries();
        let idx = find_entry(&entries, spec).expect("id checked above");
        return Ok(entries[idx].lattice.clone());
    }
    match parse_expr(spec) {
        Ok(l) => Ok(l),
        Err(expr_err) => {
            let path = Path::new(spec);
            if path.is_file() {
                load_lattice_file(path).map(|(_, l)| l)
            } else {
                Err(expr_err)
            }
        }
    }
}

fn describe(l: &Lattice) -> String {
    let sig = l.signature();
    let mut out = String::new();
    if let Some(label) = l.label() {
        out.push_str(&format!("lattice:      {label}\n"));
    }
    out.push_str(&format!("rank:         {}\n", l.rank()));
    out.push_str(&format!("determinant:  {}\n", l.determinant()));
    out.push_str(&format!("signature:    ({},{})\n", sig.pos, sig.neg));
    out.push_str(&format!(
        "parity:       {}\n",
        if l.is_even() { "even" } else { "odd" }
    ));
    out.push_str(&format!("disc group:   {}\n", discriminant_group(l)));
    out
}

fn golden_witness(source: &str, target: &str) -> Option<EmbeddingMap> {
    if target != "LK3" {
        return None;
    }
    let entries = catalog_entries();
    let idx = find_entry(&entries, source)?;
    Some(entries[idx].witness.clone())
}

fn print_embedding(e: &EmbeddingMap) {
    println!(
        "embedding of rank {} into rank {}:",
        e.source().rank(),
        e.target().rank()
    );
    for j in 0..e.source().rank() {
        let image: Vec<String> = (0..e.target().rank())
            .map(|i| e.matrix()[(i, j)].to_string())
            .collect();
        println!("  basis {} -> [{}]", j + 1, image.join(" "));
    }
    println!(
        "primitive isometric embedding: {}",
        verify_primitive_embedding(e)
    );
}

fn run(cli: Cli, config: Config) -> Result<ExitCode, Error> {
    let box_of = |override_: Option<u32>| SearchBox::new(override_.unwrap_or(config.search_box));
    match cli.cmd {
        Cmd::Info { spec } => {
            let l = resolve_lattice(&spec)?;
            print!("{}", describe(&l));
        }
        Cmd::Disc { spec } => {
            let l = resolve_lattice(&spec)?;
            let form = discriminant_form(&l)?;
            println!("group: {}", form.group());
            for (i, q) in form.q_values().iter().enumerate() {
                println!("q(g{}) = {} (mod 2Z)", i + 1, q);
            }
            for i in 0..form.q_values().len() {
                for j in (i + 1)..form.q_values().len() {
                    println!("b(g{},g{}) = {} (mod Z)", i + 1, j + 1, form.b_matrix()[i][j]);
                }
            }
        }
        Cmd::Dvalue { spec, box_bound } => {
            let l = resolve_lattice(&spec)?;
            let dv = d_value(&l, box_of(box_bound))?;
            println!("d = {}", dv.gcd);
            println!("content bound = {}", dv.certified_lower_bound);
            println!(
                "certificate = {}",
                if dv.is_exact() {
                    "exact (gcd meets the content bound)"
                } else if dv.stabilized {
                    "stabilized under box growth, not certified"
                } else {
                    "box-limited, not certified"
                }
            );
        }
        Cmd::Embed {
            source,
            target,
            box_bound,
        } => {
            if let Some(w) = golden_witness(&source, &target) {
                println!("using the shipped catalog witness");
                print_embedding(&w);
                return Ok(ExitCode::SUCCESS);
            }
            let m = resolve_lattice(&source)?;
            let l = resolve_lattice(&target)?;
            match find_primitive_embedding(&m, &l, box_of(box_bound))? {
                Some(e) => print_embedding(&e),
                None => println!("no primitive embedding found within the search box"),
            }
        }
        Cmd::Complement {
            source,
            target,
            box_bound,
        } => {
            let embedding = if let Some(w) = golden_witness(&source, &target) {
                println!("using the shipped catalog witness");
                Some(w)
            } else {
                let m = resolve_lattice(&source)?;
                let l = resolve_lattice(&target)?;
                find_primitive_embedding(&m, &l, box_of(box_bound))?
            };
            match embedding {
                Some(e) => {
                    let (mperp, _basis) = orthogonal_complement(&e)?;
                    let sig = mperp.signature();
                    println!(
                        "complement: rank={} sig=({},{}) disc={}",
                        mperp.rank(),
                        sig.pos,
                        sig.neg,
                        discriminant_group(&mperp)
                    );
                    print!("{}", render_lattice_file("complement", &mperp));
                }
                None => println!("no primitive embedding found within the search box"),
            }
        }
        Cmd::Match { left, right } => {
            let a = resolve_lattice(&left)?;
            let b = resolve_lattice(&right)?;
            let ok = invariants_match(&a, &b)?;
            println!(
                "rank, signature, parity and discriminant form {}",
                if ok { "all match" } else { "do not all match" }
            );
        }
        Cmd::Profile {
            spec,
            isometry_file,
        } => {
            let l = resolve_lattice(&spec)?;
            let (name, m) = load_isometry_file(&isometry_file)?;
            let g = verify_isometry(&l, m)?;
            println!("isometry:       {name}");
            match order_of(&g, config.order_cutoff) {
                Some(n) => println!("order:          {n}"),
                None => println!("order:          exceeds cutoff {}", config.order_cutoff),
            }
            let profile = cyclotomic_profile(&g, config.order_cutoff)?;
            let parts: Vec<String> = profile
                .multiplicities()
                .iter()
                .map(|(k, m)| format!("m_{k}={m}"))
                .collect();
            println!("profile:        {}", parts.join(" "));
            println!("invariant rank: {}", fixed_sublattice(&g)?.rank());
            println!(
                "disc action:    {}",
                if disc_action_trivial(&g)? {
                    "trivial"
                } else {
                    "nontrivial"
                }
            );
        }
        Cmd::Balldim => {
            for row in mu_rows() {
                let datum = row.datum()?;
                let dim = ball_dimension(&datum)?;
                let kind = match row.data {
                    MuData::Witness { .. } => "witness isometry",
                    MuData::Recorded { .. } => "recorded data",
                };
                println!(
                    "{}: n={} m_n={} computed dim={} claimed dim={} ({})",
                    row.id,
                    datum.n(),
                    datum.profile().multiplicity(datum.n()),
                    dim,
                    row.claimed_dim,
                    kind
                );
            }
        }
        Cmd::Grouporder => {
            let entries = catalog_entries();
            for (id, p, claimed) in [("L5", 5u64, 240u64), ("L6prime", 3, 1440)] {
                let idx = find_entry(&entries, id).expect("catalog id");
                let (mperp, _) = orthogonal_complement(&entries[idx].witness)?;
                let form = discriminant_form(&mperp)?;
                let order = orthogonal_group_order_mod_p(&form, p)?;
                println!(
                    "O(disc({id}-perp)) mod {p}: computed {order}, claimed {claimed}"
                );
            }
        }
        Cmd::VerifyPaper { only, format } => {
            let report = run_paper_suite(&SuiteOptions {
                only,
                config: config.clone(),
            })?;
            match format {
                Format::Text => print!("{}", report.render_text()),
                Format::JsonLikeStructured => print!("{}", report.render_structured()),
            }
            let failed = report
                .rows
                .iter()
                .filter(|r| r.status == Status::Fail)
                .count();
            if failed > 0 {
                eprintln!("{failed} check(s) failed");
                return Ok(ExitCode::from(2));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match load_config() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e} (from {CONFIG_ENV})");
            return ExitCode::FAILURE;
        }
    };
    match run(cli, config) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::UnknownCheckId(_) = e {
                eprintln!("valid ids: {}", CANONICAL_IDS.join(", "));
            }
            ExitCode::FAILURE
        }
    }
}

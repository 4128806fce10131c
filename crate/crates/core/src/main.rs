use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tautilt::algebra::Algebra;
use tautilt::endo::endomorphism_algebra;
use tautilt::enumerate::{enumerate_indecomposables, lifted_catalog, EnumerationBound, DEFAULT_BUDGET};
use tautilt::homology::{default_cutoff, gl_dim, id, pd, tau, tau_inv, Dimension};
use tautilt::io::files::{load_algebra, load_module_over};
use tautilt::io::fixtures;
use tautilt::io::report::{overall_verdict, reports_to_json, reports_to_tsv, Verdict};
use tautilt::io::scenarios::{run_scenarios, SCENARIOS};
use tautilt::linalg::Field;
use tautilt::rep::format::{layer_label, print_module};
use tautilt::rep::{decompose, distinct_up_to_iso, Module};
use tautilt::tau_tilting::{indec_tau_rigid_catalog, is_tau_rigid, is_tau_tilting, stt_hasse_quiver, stt_pairs};
use tautilt::tilting::{is_classical_cotilting, is_classical_tilting, is_iwanaga_gorenstein};
use tautilt::{Error, Result};

#[derive(Parser)]
#[command(name = "tautilt", version, about = "τ-tilting computations over bound quiver algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Algebra file, or the name of a built-in fixture.
    #[arg(short = 'A', long = "algebra")]
    algebra: String,
    /// Reinterpret the algebra over F_p.
    #[arg(long)]
    field: Option<u32>,
    /// Maximal resolution depth.
    #[arg(long)]
    cutoff: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    TauRigid,
    TauTilting,
    Tilting,
    Cotilting,
}

#[derive(Subcommand)]
enum Command {
    /// Test a module for a property; prints true or false.
    Check {
        property: Property,
        #[command(flatten)]
        common: Common,
        #[arg(short = 'M', long = "module")]
        module: String,
    },
    /// Auslander-Reiten translate.
    Tau {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'M', long = "module")]
        module: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Inverse Auslander-Reiten translate.
    TauInv {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'M', long = "module")]
        module: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Support τ-tilting pairs and their Hasse quiver.
    SttQuiver {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long, value_delimiter = ',')]
        caps: Option<Vec<usize>>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Self-injective dimensions on both sides.
    Gorenstein {
        #[command(flatten)]
        common: Common,
    },
    /// Endomorphism algebra of a direct sum of modules.
    Endo {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'T', long = "modules", num_args = 1.., required = true)]
        modules: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Projective dimension of a module.
    Pd {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'M', long = "module")]
        module: String,
    },
    /// Injective dimension of a module.
    Id {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'M', long = "module")]
        module: String,
    },
    /// Global dimension of the algebra.
    Gldim {
        #[command(flatten)]
        common: Common,
    },
    /// Indecomposables within dimension caps, over F_p (default 2).
    Enumerate {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',')]
        caps: Option<Vec<usize>>,
        #[arg(long)]
        budget: Option<u64>,
        /// Directory receiving one module file per member and an index.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Run the built-in scenarios.
    Verify {
        #[arg(value_parser = ["paper"])]
        suite: String,
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        #[arg(long)]
        json: bool,
        /// Worker threads; results do not depend on it.
        #[arg(long)]
        threads: Option<usize>,
        /// Directory receiving report files and artifacts.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::Fail) => ExitCode::from(1),
        Ok(Verdict::Unknown) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

struct Loaded {
    algebra: Algebra,
    text: String,
    cutoff: usize,
}

fn load(common: &Common) -> Result<Loaded> {
    let path = Path::new(&common.algebra);
    let (mut algebra, text) = if path.exists() {
        (load_algebra(path)?, std::fs::read_to_string(path)?)
    } else {
        (fixtures::algebra(&common.algebra)?, fixtures::text(&common.algebra)?.to_string())
    };
    if let Some(p) = common.field {
        algebra = algebra.reinterpret_over_field(Field::prime(p)?)?;
    }
    let cutoff = common.cutoff.unwrap_or_else(|| default_cutoff(&algebra));
    Ok(Loaded { algebra, text, cutoff })
}

fn module(name: &str, a: &Algebra) -> Result<Module> {
    let path = Path::new(name);
    if path.exists() {
        load_module_over(path, a)
    } else {
        fixtures::module_over(name, a)
    }
}

fn dimension_verdict(d: Dimension) -> Verdict {
    println!("{d}");
    match d {
        Dimension::Unknown(_) => Verdict::Unknown,
        _ => Verdict::Pass,
    }
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => Ok(std::fs::write(p, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn bound(a: &Algebra, caps: Option<Vec<usize>>, budget: Option<u64>) -> Result<EnumerationBound> {
    let b = match caps {
        Some(c) if c.len() == a.num_vertices() => EnumerationBound::new(c),
        Some(c) => return Err(Error::Dimension(format!("{} caps for {} vertices", c.len(), a.num_vertices()))),
        None => EnumerationBound::projective_injective_hull(a),
    };
    Ok(b.with_budget(budget.unwrap_or(DEFAULT_BUDGET)))
}

fn run(command: Command) -> Result<Verdict> {
    match command {
        Command::Check { property, common, module: m } => {
            let l = load(&common)?;
            let m = module(&m, &l.algebra)?;
            let holds = match property {
                Property::TauRigid => is_tau_rigid(&m)?,
                Property::TauTilting => is_tau_tilting(&m)?,
                Property::Tilting => is_classical_tilting(&m)?,
                Property::Cotilting => is_classical_cotilting(&m)?,
            };
            println!("{holds}");
            Ok(if holds { Verdict::Pass } else { Verdict::Fail })
        }
        Command::Tau { common, module: m, out } => translate(&common, &m, out.as_deref(), tau),
        Command::TauInv { common, module: m, out } => translate(&common, &m, out.as_deref(), tau_inv),
        Command::SttQuiver { common, dot, caps, budget } => {
            let l = load(&common)?;
            let rigid = indec_tau_rigid_catalog(&l.algebra, &bound(&l.algebra, caps, budget)?)?;
            let pairs = stt_pairs(&l.algebra, &rigid)?;
            let q = stt_hasse_quiver(&l.algebra, &pairs)?;
            println!("{} indecomposable τ-rigid modules, {} support τ-tilting pairs", rigid.len(), pairs.len());
            print!("{}", q.adjacency_report());
            if let Some(p) = dot {
                std::fs::write(p, q.to_dot())?;
            }
            Ok(Verdict::Pass)
        }
        Command::Gorenstein { common } => {
            let l = load(&common)?;
            let g = is_iwanaga_gorenstein(&l.algebra, l.cutoff)?;
            println!("id_A A = {}\nid_A^op A = {}\ngorenstein = {}", g.right, g.left, g.is_gorenstein());
            let undetermined = matches!(g.right, Dimension::Unknown(_)) || matches!(g.left, Dimension::Unknown(_));
            Ok(if undetermined { Verdict::Unknown } else { Verdict::Pass })
        }
        Command::Endo { common, modules, out } => {
            let l = load(&common)?;
            let mut parts = Vec::new();
            for name in &modules {
                parts.extend(decompose(&module(name, &l.algebra)?)?);
            }
            let (b, _) = endomorphism_algebra(&distinct_up_to_iso(&parts))?;
            write_or_print(out.as_deref(), &b.presentation_or_derived().to_string())?;
            Ok(Verdict::Pass)
        }
        Command::Pd { common, module: m } => {
            let l = load(&common)?;
            Ok(dimension_verdict(pd(&module(&m, &l.algebra)?, l.cutoff)?))
        }
        Command::Id { common, module: m } => {
            let l = load(&common)?;
            Ok(dimension_verdict(id(&module(&m, &l.algebra)?, l.cutoff)?))
        }
        Command::Gldim { common } => {
            let l = load(&common)?;
            Ok(dimension_verdict(gl_dim(&l.algebra, l.cutoff)?))
        }
        Command::Enumerate { common, caps, budget, export } => {
            let l = load(&common)?;
            let b = bound(&l.algebra, caps, budget)?;
            let members = match l.algebra.field() {
                Field::Prime(_) => enumerate_indecomposables(&l.algebra, &b)?.modules,
                Field::Rational => lifted_catalog(&l.algebra, &b, 2)?,
            };
            let mut index = String::from("file\tdims\tlayers\n");
            for (i, m) in members.iter().enumerate() {
                index.push_str(&format!("m{i:03}.mod\t{:?}\t{}\n", m.dims(), layer_label(m)));
            }
            print!("{index}");
            if let Some(dir) = export {
                std::fs::create_dir_all(&dir)?;
                std::fs::write(dir.join("algebra.alg"), &l.text)?;
                for (i, m) in members.iter().enumerate() {
                    std::fs::write(dir.join(format!("m{i:03}.mod")), print_module(m, "algebra.alg"))?;
                }
                std::fs::write(dir.join("index.tsv"), &index)?;
            }
            Ok(Verdict::Pass)
        }
        Command::Verify { suite: _, only, json, threads, out } => {
            let names: Vec<String> = only.unwrap_or_else(|| SCENARIOS.iter().map(|s| s.to_string()).collect());
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads.unwrap_or(0))
                .build()
                .map_err(|e| Error::Io(std::io::Error::other(e)))?;
            let reports = pool.install(|| run_scenarios(&refs))?;
            let text = if json { reports_to_json(&reports) } else { reports_to_tsv(&reports) };
            print!("{text}");
            if let Some(dir) = out {
                std::fs::create_dir_all(&dir)?;
                std::fs::write(dir.join("reports.tsv"), reports_to_tsv(&reports))?;
                std::fs::write(dir.join("reports.json"), reports_to_json(&reports))?;
                for r in &reports {
                    for a in &r.artifacts {
                        std::fs::write(dir.join(&a.name), &a.content)?;
                    }
                }
            } else {
                for r in &reports {
                    for a in &r.artifacts {
                        eprintln!("artifact {}:\n{}", a.name, a.content);
                    }
                }
            }
            for r in &reports {
                eprintln!("{}\t{}\t{:.2?}", r.scenario, r.verdict(), r.wall_time);
            }
            Ok(overall_verdict(&reports))
        }
    }
}

fn translate(common: &Common, m: &str, out: Option<&Path>, f: fn(&Module) -> Module) -> Result<Verdict> {
    let l = load(common)?;
    let t = f(&module(m, &l.algebra)?);
    write_or_print(out, &print_module(&t, &common.algebra))?;
    Ok(Verdict::Pass)
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use superlab::checks::{self, Context, DEFAULT_SEED};
use superlab::error::{Error, Result};
use superlab::manifest::Manifest;
use superlab::{algebra_json, report, source};
use superlab_core::algebra::{evaluate_graded, is_identity, is_superidentity, Algebra, Envelope, Verdict};
use superlab_core::catalog::{ENTRY_NAMES, FAMILY_NAMES};
use superlab_core::tableaux::YoungTable;

#[derive(Parser)]
#[command(name = "superlab", version, about = "Identity checks in finite-dimensional superalgebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Common {
    /// Random seed (falls back to SUPERLAB_SEED, then a fixed default).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Cap on the degree of symmetric-group sums.
    #[arg(long, global = true, default_value_t = 6)]
    max_degree: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a verification suite from the built-in (or given) manifest.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
        /// Use this manifest instead of the built-in one.
        #[arg(long)]
        manifest: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Check whether polynomials are (super)identities of an algebra.
    Check {
        /// `catalog:NAME[:P...]` or `file:PATH`.
        #[arg(long)]
        algebra: String,
        /// `lib:NAME`, `family:NAME:P...`, `file:PATH` or polynomial text.
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value_t = Mode::Identity)]
        mode: Mode,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate the superization of a polynomial at homogeneous elements.
    Eval {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        poly: String,
        /// `1=e, 2=x, 3=e`.
        #[arg(long)]
        assign: String,
        #[command(flatten)]
        common: Common,
    },
    /// Build the Grassmann envelope on `n` generators.
    Envelope {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        n: u32,
        /// Write the envelope as algebra JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a rectangular Young symmetrizer to a word.
    Young {
        #[arg(value_enum)]
        op: Op,
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        /// Space-separated variable indices, e.g. "1 2 3 4".
        #[arg(long)]
        word: String,
        /// How 1..n fill the table.
        #[arg(long, value_enum, default_value_t = Fill::Row)]
        fill: Fill,
        /// Fill by this permutation (column by column), overriding --fill.
        #[arg(long)]
        tau: Option<String>,
    },
    /// Catalog listing and export.
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCmd,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// List entry and family names with their parameters.
    List,
    /// Print an entry in the algebra JSON format.
    Export {
        #[arg(long)]
        name: String,
        #[arg(long, allow_hyphen_values = true)]
        n: Vec<i64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Identity,
    Superidentity,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Phi,
    Psi,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fill {
    Row,
    Column,
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

impl Common {
    fn context(&self) -> Result<Context> {
        let seed = match self.seed {
            Some(s) => s,
            None => match std::env::var("SUPERLAB_SEED") {
                Ok(v) => v.trim().parse().map_err(|_| Error::Usage(format!("SUPERLAB_SEED `{v}` is not a u64")))?,
                Err(_) => DEFAULT_SEED,
            },
        };
        Ok(Context { seed, max_degree: self.max_degree })
    }
}

fn write(path: &PathBuf, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::io(path.display().to_string(), e))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Verify { suite, report: path, jobs, manifest, common } => {
            let ctx = common.context()?;
            let m = match manifest {
                Some(p) => Manifest::parse(
                    &std::fs::read_to_string(&p).map_err(|e| Error::io(p.display().to_string(), e))?,
                )
                .map_err(|e| Error::Usage(e.to_string()))?,
                None => Manifest::builtin(),
            };
            let specs = m.suite(&suite)?;
            let r = report::run(&suite, specs, &ctx, jobs);
            print!("{}", r.to_text());
            if let Some(p) = path {
                write(&p, &r.to_json(true))?;
            }
            Ok(r.exit_code() as u8)
        }
        Cmd::Check { algebra, poly, mode, common } => {
            let alg = source::load_algebra(&algebra)?;
            let mut ok = true;
            for (name, f) in source::load_polys(&poly, common.max_degree)? {
                let v = match mode {
                    Mode::Identity => is_identity(&alg.algebra, &f),
                    Mode::Superidentity => is_superidentity(&alg.algebra, &f),
                };
                match v {
                    Verdict::Holds => println!("{name}: holds"),
                    Verdict::Fails(w) => {
                        ok = false;
                        println!("{name}: fails; witness {}", checks::format_witness(&alg.algebra, &w));
                    }
                }
            }
            Ok(if ok { 0 } else { 1 })
        }
        Cmd::Eval { algebra, poly, assign, common } => {
            let alg = source::load_algebra(&algebra)?;
            let f = source::load_poly(&poly, common.max_degree)?;
            let a = source::parse_assignment(&alg, &assign)?;
            println!("{}", evaluate_graded(&f, &alg.algebra, &a)?.display(&alg.algebra));
            Ok(0)
        }
        Cmd::Envelope { algebra, n, out } => {
            let alg = source::load_algebra(&algebra)?;
            let env = Envelope::new(&alg.algebra, n)?;
            let e = env.to_superalgebra(format!("G{n}({})", alg.algebra.name()));
            eprintln!("envelope dimension {}", env.dim());
            emit(&out, &algebra_json::to_json(&e))?;
            Ok(0)
        }
        Cmd::Young { op, rows, cols, word, fill, tau } => {
            let t = match (tau, fill) {
                (Some(tau), _) => {
                    let tau = tau
                        .split_whitespace()
                        .map(|v| v.parse().map_err(|_| Error::Usage(format!("bad permutation entry `{v}`"))))
                        .collect::<Result<Vec<u32>>>()?;
                    YoungTable::from_permutation(rows, cols, &tau)?
                }
                (None, Fill::Row) => YoungTable::row_major(rows, cols),
                (None, Fill::Column) => YoungTable::column_major(rows, cols),
            };
            let w = checks::parse_word(&word)?;
            let name = match op {
                Op::Phi => "phi",
                Op::Psi => "psi",
            };
            println!("{}", checks::symmetrize(name, &t, &w)?);
            Ok(0)
        }
        Cmd::Catalog { cmd: CatalogCmd::List } => {
            for (n, p) in ENTRY_NAMES {
                println!("entry   {n}{}", if p.is_empty() { String::new() } else { format!(" ({p})") });
            }
            for (n, p) in FAMILY_NAMES {
                println!("family  {n} ({p})");
            }
            Ok(0)
        }
        Cmd::Catalog { cmd: CatalogCmd::Export { name, n, out } } => {
            let e = superlab_core::catalog::entry(&name, &n)?;
            emit(&out, &algebra_json::to_json(&e.algebra))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

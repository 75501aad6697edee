use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sievelab::dissect::{dihedral_census, enumerate_bd_facets, enumerate_kangulations, write_census_csv, PolygonType};
use sievelab::harness::{self, CheckResult};
use sievelab::posets::{enumerate_ideals, root_poset, root_poset_i2};
use sievelab::raney::enumerate_coral;
use sievelab::roots::{build_i2_complex, build_root_system, ClusterComplex, Family};
use sievelab::{Result, SieveError};

#[derive(Parser)]
#[command(name = "sievelab", version, about = "Exact verification of dihedral and cyclic sieving phenomena")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print its report.
    Verify {
        #[command(subcommand)]
        suite: Suite,
        #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
        format: Format,
    },
    /// List combinatorial objects, one per line.
    Enumerate {
        #[command(subcommand)]
        what: Enumerate,
    },
    /// Fixed-point counts of every element of I_2(n) on the k-angulations
    /// of the n-gon.
    Census {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct TypeArgs {
    /// Root system family: A, B, C, D, E, F, or I for I_2(rank).
    #[arg(long = "type")]
    family: String,
    #[arg(long)]
    rank: u32,
}

#[derive(Subcommand)]
enum Suite {
    /// Dissections of the (sm+2)-gon against Cat_{sm+1,m}(q,t).
    TypeA {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        m: u32,
        /// Required for n = sm + 2 above 15.
        #[arg(long)]
        slow: bool,
    },
    /// Cyclic census and tau-fixed facets of a cluster complex.
    Cluster {
        #[command(flatten)]
        ty: TypeArgs,
        /// Required for E7 and E8.
        #[arg(long)]
        slow: bool,
    },
    Raney {
        #[arg(long)]
        pmax: u32,
        #[arg(long)]
        rmax: u32,
        #[arg(long)]
        kmax: u32,
    },
    Symmetric {
        #[arg(long)]
        n: u32,
    },
    EvenDihedral {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        kmax: u32,
    },
    Dyck {
        #[arg(long, default_value_t = 7)]
        smax: u32,
        #[arg(long, default_value_t = 6)]
        mmax: u32,
    },
    RaoSuk {
        #[arg(long)]
        n: u32,
    },
    Polygon {
        #[arg(long, default_value_t = 5)]
        nmax: u32,
    },
    Posets {
        #[arg(long, default_value_t = 6)]
        nmax: u32,
        #[arg(long, default_value_t = 15)]
        line_max: u32,
        #[arg(long, default_value_t = 5)]
        bd_max: u32,
    },
    /// Randomized polynomial identities; SIEVELAB_SEED overrides the seed.
    Algebra {
        #[arg(long, default_value_t = 64)]
        trials: u32,
    },
}

#[derive(Subcommand)]
enum Enumerate {
    /// k-angulations of the n-gon as chord lists.
    Dissections {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Facets of the cluster complex as lists of almost positive root indices.
    Facets {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// Facets of the polygon model of type B or D.
    PolygonFacets {
        #[arg(long = "type")]
        kind: String,
        #[arg(long)]
        n: u32,
    },
    /// Order ideals of the root poset as lists of positive root indices.
    Ideals {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// Coral diagrams in parenthesized form.
    Coral {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        k: u32,
    },
    /// Almost positive roots, exponents, Coxeter number and the tau
    /// involutions as JSON.
    RootsJson {
        #[command(flatten)]
        ty: TypeArgs,
    },
}

enum Kind {
    Crystallographic(Family, usize),
    Dihedral(u32),
}

fn parse_type(ty: &TypeArgs) -> Result<Kind> {
    if ty.family.eq_ignore_ascii_case("I") {
        Ok(Kind::Dihedral(ty.rank))
    } else {
        Ok(Kind::Crystallographic(ty.family.parse()?, ty.rank as usize))
    }
}

fn complex(ty: &TypeArgs) -> Result<ClusterComplex> {
    match parse_type(ty)? {
        Kind::Crystallographic(f, r) => ClusterComplex::from_root_system(&build_root_system(f, r)?),
        Kind::Dihedral(m) => build_i2_complex(m),
    }
}

fn needs_slow(what: &str) -> SieveError {
    SieveError::Unsupported(format!("{what} is a slow suite; pass --slow to run it"))
}

fn run_suite(suite: &Suite) -> Result<Vec<CheckResult>> {
    match suite {
        Suite::TypeA { s, m, slow } => {
            if s * m + 2 > 15 && !slow {
                return Err(needs_slow(&format!("type A with n = {}", s * m + 2)));
            }
            harness::verify_type_a(*s, *m)
        }
        Suite::Cluster { ty, slow } => match parse_type(ty)? {
            Kind::Crystallographic(Family::E, r) if r >= 7 && !slow => Err(needs_slow(&format!("E{r}"))),
            Kind::Crystallographic(f, r) => harness::verify_cluster(f, r),
            Kind::Dihedral(m) => harness::verify_i2(m),
        },
        Suite::Raney { pmax, rmax, kmax } => harness::verify_raney(*pmax, *rmax, *kmax),
        Suite::Symmetric { n } => harness::verify_symmetric(*n),
        Suite::EvenDihedral { n, kmax } => harness::verify_even_dihedral(*n, *kmax),
        Suite::Dyck { smax, mmax } => harness::verify_dyck(*smax, *mmax),
        Suite::RaoSuk { n } => harness::verify_rao_suk(*n),
        Suite::Polygon { nmax } => harness::verify_polygon_models(*nmax),
        Suite::Posets { nmax, line_max, bd_max } => harness::verify_posets(*nmax, *line_max, *bd_max),
        Suite::Algebra { trials } => harness::verify_algebra(harness::seed_from_env()?, *trials),
    }
}

fn enumerate(what: &Enumerate, out: &mut impl Write) -> Result<()> {
    let io = |e: io::Error| SieveError::Internal(format!("output failed: {e}"));
    match what {
        Enumerate::Dissections { n, k } => {
            for d in enumerate_kangulations(*n, *k)? {
                writeln!(out, "{d}").map_err(io)?;
            }
        }
        Enumerate::Facets { ty } => {
            for f in complex(ty)?.enumerate_facets() {
                let parts: Vec<String> = f.iter().map(ToString::to_string).collect();
                writeln!(out, "{}", parts.join(" ")).map_err(io)?;
            }
        }
        Enumerate::PolygonFacets { kind, n } => {
            let kind = match kind.to_ascii_uppercase().as_str() {
                "B" => PolygonType::B,
                "D" => PolygonType::D,
                other => return Err(SieveError::Domain(format!("polygon models exist for B and D, not {other}"))),
            };
            for f in enumerate_bd_facets(kind, *n)? {
                writeln!(out, "{f}").map_err(io)?;
            }
        }
        Enumerate::Ideals { ty } => {
            let poset = match parse_type(ty)? {
                Kind::Crystallographic(f, r) => root_poset(&build_root_system(f, r)?),
                Kind::Dihedral(m) => root_poset_i2(m)?,
            };
            for ideal in enumerate_ideals(&poset) {
                let parts: Vec<String> = ideal.elements().iter().map(ToString::to_string).collect();
                writeln!(out, "{}", parts.join(" ")).map_err(io)?;
            }
        }
        Enumerate::Coral { p, r, k } => {
            for c in enumerate_coral(*p, *r, *k)? {
                writeln!(out, "{c}").map_err(io)?;
            }
        }
        Enumerate::RootsJson { ty } => {
            serde_json::to_writer_pretty(&mut *out, &complex(ty)?)
                .map_err(|e| SieveError::Internal(format!("json output failed: {e}")))?;
            writeln!(out).map_err(io)?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Verify { suite, format } => {
            let results = run_suite(&suite)?;
            match format {
                Format::Json => harness::write_json(&results, &mut out)?,
                Format::Csv => harness::write_csv(&results, &mut out)?,
            }
            writeln!(out).ok();
            let summary = harness::summarize(&results);
            eprintln!("{} checks, {} passed, {} failed", summary.total, summary.passed, summary.failed);
            for w in harness::failure_witnesses(&results) {
                eprintln!("FAIL {w}");
            }
            Ok(summary.failed == 0)
        }
        Command::Enumerate { what } => enumerate(&what, &mut out).map(|_| true),
        Command::Census { n, k, format } => {
            let rows = dihedral_census(n, k)?;
            match format {
                Format::Csv => write_census_csv(&rows, &mut out)?,
                Format::Json => {
                    serde_json::to_writer_pretty(&mut out, &rows)
                        .map_err(|e| SieveError::Internal(format!("json output failed: {e}")))?;
                    writeln!(out).ok();
                }
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

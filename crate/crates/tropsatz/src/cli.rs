//! The `tropsatz` command line. Exit codes: 0 solvable, 1 unsolvable, 2 error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use tropsatz_core::duality::{minplus_alternative, tropical_alternative, DualityOutcome, Flavor};
use tropsatz_core::game::{min_credits, solve_nonstrict, solve_strict, winners, Winner};
use tropsatz_core::linsys::{eq_to_ineq, MinPlusSystem, Relation};
use tropsatz_core::macaulay::{build_macaulay_minplus, build_macaulay_tropical, degree_bound, Semiring};
use tropsatz_core::nullsatz::{decide, verify_primary, Decision, Options, Polys, System};
use tropsatz_core::oracle::{generate_fixture, oracle_solve_minplus, oracle_solve_tropical};
use tropsatz_core::reduce::{minplus_to_tropical, tropical_to_minplus};

use crate::formats::{
    format_point, parse_point, read_json, write_json, CertificateFile, FactsFile, GameFile, MacaulayFile, MatrixFile,
    SemiringName, SystemFile,
};

pub const SOLVABLE: i32 = 0;
pub const UNSOLVABLE: i32 = 1;
pub const ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "tropsatz", version, about = "Decide roots of tropical and min-plus polynomial systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Target {
    Tropical,
    Minplus,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether a system has a root; print it or a certificate of no root.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum)]
        semiring: Option<SemiringName>,
        #[arg(long)]
        certificate: Option<PathBuf>,
        /// Column budget for Macaulay matrices over Rinf.
        #[arg(long, default_value_t = Options::default().max_columns)]
        max_columns: u128,
    },
    /// Exit 0 if the point is a root of every polynomial.
    CheckRoot {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Verify a certificate file against a system.
    Verify { file: PathBuf, certificate: PathBuf },
    /// Write the Macaulay matrix (or pair) of degree N.
    Macaulay {
        file: PathBuf,
        #[arg(long)]
        degree: Option<u64>,
        /// Use the degree bound of the system's semiring.
        #[arg(long)]
        bound: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Solve `A ⊙ x` (tropical) or `A ⊙ x ≤ B ⊙ x` with the game solver.
    Linsolve {
        matrix: PathBuf,
        #[arg(long)]
        minplus: Option<PathBuf>,
        /// `A ⊙ x < B ⊙ x` instead of `≤`.
        #[arg(long, conflicts_with = "eq")]
        strict: bool,
        /// `A ⊙ x = B ⊙ x` instead of `≤`.
        #[arg(long)]
        eq: bool,
        /// Columns required to be finite, as `i,j,...`.
        #[arg(long)]
        finite: Option<String>,
    },
    /// Report which alternative of the linear duality holds.
    Duality {
        matrix: PathBuf,
        #[arg(long)]
        minplus: Option<PathBuf>,
        #[arg(long)]
        finite: Option<String>,
        /// Require some column of S finite instead of all.
        #[arg(long)]
        fin_some: bool,
    },
    /// Translate a system between the tropical and min-plus forms.
    Reduce {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print winners and minimal credits of a game.
    Game { file: PathBuf },
    /// Write a named fixture and its expected facts.
    Gen {
        name: String,
        params: Vec<u64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Decide by brute force over argmin patterns (small systems only).
    Oracle {
        file: PathBuf,
        #[arg(long, value_enum)]
        semiring: Option<SemiringName>,
    },
}

impl ValueEnum for SemiringName {
    fn value_variants<'a>() -> &'a [Self] {
        &[SemiringName::R, SemiringName::Rinf]
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(match self {
            SemiringName::R => clap::builder::PossibleValue::new("R"),
            SemiringName::Rinf => clap::builder::PossibleValue::new("Rinf"),
        })
    }
}

/// Sets up logging from `TROPSATZ_LOG` (`quiet`, `info` or `debug`).
pub fn init_logging() {
    let level = match std::env::var("TROPSATZ_LOG").as_deref() {
        Ok("debug") => log::LevelFilter::Debug,
        Ok("info") => log::LevelFilter::Info,
        _ => log::LevelFilter::Off,
    };
    let _ = env_logger::Builder::new().filter_level(level).format_timestamp(None).try_init();
}

/// Parses arguments and runs; errors go to `err` and give exit code 2.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return ERROR;
            }
            let _ = write!(out, "{e}");
            return SOLVABLE;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            ERROR
        }
    }
}

fn load_system(path: &Path) -> Result<(System, Semiring)> {
    read_json::<SystemFile>(path)?.to_system()
}

fn parse_indices(s: Option<&str>) -> Result<Vec<usize>> {
    match s {
        None => Ok(Vec::new()),
        Some(s) if s.trim().is_empty() => Ok(Vec::new()),
        Some(s) => s.split(',').map(|t| t.trim().parse().with_context(|| format!("bad index {t:?}"))).collect(),
    }
}

fn code(solvable: bool) -> i32 {
    if solvable {
        SOLVABLE
    } else {
        UNSOLVABLE
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Solve { file, semiring, certificate, max_columns } => {
            let (sys, file_semiring) = load_system(&file)?;
            let semiring = semiring.map_or(file_semiring, Into::into);
            log::info!("deciding {} polynomials in {} variables over {semiring:?}", sys.len(), sys.num_vars);
            let decision = decide(&sys, semiring, &Options { max_columns })?;
            match decision {
                Decision::Root(p) => {
                    writeln!(out, "SOLVABLE")?;
                    writeln!(out, "{}", format_point(&p))?;
                    if let Some(path) = certificate {
                        write_json(&path, &CertificateFile::root(&p))?;
                    }
                    Ok(SOLVABLE)
                }
                Decision::NoRoot(Some(cert)) => {
                    let json = CertificateFile::from_certificate(&cert);
                    writeln!(out, "UNSOLVABLE")?;
                    writeln!(out, "{}", serde_json::to_string_pretty(&json)?)?;
                    if let Some(path) = certificate {
                        write_json(&path, &json)?;
                    }
                    Ok(UNSOLVABLE)
                }
                Decision::NoRoot(None) => {
                    writeln!(out, "UNSOLVABLE")?;
                    writeln!(out, "no certificate within {max_columns} columns; decided by finite-pattern search")?;
                    Ok(UNSOLVABLE)
                }
            }
        }
        Command::CheckRoot { file, point } => {
            let (sys, _) = load_system(&file)?;
            let p = parse_point(&point)?;
            ensure!(
                p.len() == sys.num_vars,
                "point has {} coordinates, system has {} variables",
                p.len(),
                sys.num_vars
            );
            let ok = sys.is_root(&p);
            writeln!(out, "{}", if ok { "ROOT" } else { "NOT A ROOT" })?;
            Ok(code(ok))
        }
        Command::Verify { file, certificate } => {
            let (sys, _) = load_system(&file)?;
            let cert: CertificateFile = read_json(&certificate)?;
            let ok = match cert.root_point()? {
                Some(p) => p.len() == sys.num_vars && sys.is_root(&p),
                None => verify_primary(&sys, &cert.to_certificate()?.expect("not a root")),
            };
            writeln!(out, "{}", if ok { "VALID" } else { "INVALID" })?;
            Ok(code(ok))
        }
        Command::Macaulay { file, degree, bound, out: path } => {
            let (sys, semiring) = load_system(&file)?;
            let n = match (degree, bound) {
                (Some(n), false) => n,
                (None, true) => degree_bound(semiring, sys.num_vars, &sys.degrees())?,
                _ => bail!("give exactly one of --degree N and --bound"),
            };
            let m = match &sys.polys {
                Polys::Tropical(p) => build_macaulay_tropical(p, n)?,
                Polys::MinPlus(p) => build_macaulay_minplus(p, n)?,
            };
            write_json(&path, &MacaulayFile::from_system(&m))?;
            writeln!(out, "N = {n}: {} rows, {} columns", m.lhs.rows(), m.lhs.cols())?;
            Ok(SOLVABLE)
        }
        Command::Linsolve { matrix, minplus, strict, eq, finite } => {
            let a = read_json::<MatrixFile>(&matrix)?.to_matrix()?;
            let s = parse_indices(finite.as_deref())?;
            ensure!(s.iter().all(|&j| j < a.cols()), "finite index out of range");
            let x = match minplus {
                None => {
                    ensure!(!strict && !eq, "--strict and --eq need --minplus");
                    match tropical_alternative(&a, &s, Flavor::FinAll) {
                        DualityOutcome::Primal(x) => Some(x),
                        DualityOutcome::Dual(_) => None,
                    }
                }
                Some(path) => {
                    let b = read_json::<MatrixFile>(&path)?.to_matrix()?;
                    let relation = if strict {
                        Relation::Lt
                    } else if eq {
                        Relation::Eq
                    } else {
                        Relation::Leq
                    };
                    let sys = MinPlusSystem::new(a, b, relation)?;
                    match relation {
                        Relation::Lt => solve_strict(&sys, &s, &[]),
                        Relation::Eq => solve_nonstrict(&eq_to_ineq(&sys), &s, &[]),
                        Relation::Leq => solve_nonstrict(&sys, &s, &[]),
                    }
                }
            };
            match x {
                Some(x) => {
                    writeln!(out, "{}", format_point(&x))?;
                    Ok(SOLVABLE)
                }
                None => {
                    writeln!(out, "NONE")?;
                    Ok(UNSOLVABLE)
                }
            }
        }
        Command::Duality { matrix, minplus, finite, fin_some } => {
            let a = read_json::<MatrixFile>(&matrix)?.to_matrix()?;
            let s = parse_indices(finite.as_deref())?;
            ensure!(s.iter().all(|&j| j < a.cols()), "finite index out of range");
            let flavor = if fin_some { Flavor::FinSome } else { Flavor::FinAll };
            let outcome = match minplus {
                None => tropical_alternative(&a, &s, flavor),
                Some(path) => {
                    let b = read_json::<MatrixFile>(&path)?.to_matrix()?;
                    ensure!(a.shape() == b.shape(), "matrices differ in shape");
                    minplus_alternative(&a, &b, &s, flavor)
                }
            };
            match outcome {
                DualityOutcome::Primal(x) => {
                    writeln!(out, "PRIMAL")?;
                    writeln!(out, "{}", format_point(&x))?;
                    Ok(SOLVABLE)
                }
                DualityOutcome::Dual(y) => {
                    writeln!(out, "DUAL")?;
                    writeln!(out, "{}", format_point(&y))?;
                    Ok(UNSOLVABLE)
                }
            }
        }
        Command::Reduce { file, to, out: path } => {
            let (sys, semiring) = load_system(&file)?;
            let image = match (&sys.polys, to) {
                (Polys::Tropical(p), Target::Minplus) => System::minplus(sys.num_vars, tropical_to_minplus(p)),
                (Polys::MinPlus(p), Target::Tropical) => {
                    System::tropical(2 * sys.num_vars, minplus_to_tropical(p, sys.num_vars))
                }
                _ => bail!("the system is already in the requested form"),
            };
            let json = SystemFile::from_system(&image, semiring);
            match path {
                Some(path) => write_json(&path, &json)?,
                None => writeln!(out, "{}", serde_json::to_string_pretty(&json)?)?,
            }
            Ok(SOLVABLE)
        }
        Command::Game { file } => {
            let g = read_json::<GameFile>(&file)?.to_game()?;
            let (rw, cw) = winners(&g);
            let credits = min_credits(&g);
            let name = |w: Winner| match w {
                Winner::Column => "column",
                Winner::Draw => "draw",
                Winner::Row => "row",
            };
            for (i, w) in rw.iter().enumerate() {
                writeln!(out, "r{i}\t{}\t{}", name(*w), credits.rows[i])?;
            }
            for (j, w) in cw.iter().enumerate() {
                writeln!(out, "c{j}\t{}\t{}", name(*w), credits.cols[j])?;
            }
            Ok(SOLVABLE)
        }
        Command::Gen { name, params, out: dir } => {
            let fx = generate_fixture(&name, &params)?;
            std::fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
            let stem: String = fx.name.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
            let stem = stem.trim_end_matches('_').to_string();
            let system = format!("{stem}.json");
            write_json(
                &dir.join(&system),
                &SystemFile::from_system(&System::tropical(fx.num_vars, fx.tropical.clone()), fx.semiring),
            )?;
            let minplus = (!fx.minplus.is_empty()).then(|| format!("{stem}_minplus.json"));
            if let Some(mp) = &minplus {
                write_json(
                    &dir.join(mp),
                    &SystemFile::from_system(&System::minplus(fx.num_vars, fx.minplus.clone()), fx.semiring),
                )?;
            }
            write_json(
                &dir.join(format!("{stem}.facts.json")),
                &FactsFile::from_fixture(&fx, &system, minplus.as_deref()),
            )?;
            writeln!(out, "wrote {} to {}", fx.name, dir.display())?;
            Ok(SOLVABLE)
        }
        Command::Oracle { file, semiring } => {
            let (sys, file_semiring) = load_system(&file)?;
            let semiring = semiring.map_or(file_semiring, Into::into);
            let root = match &sys.polys {
                Polys::Tropical(p) => oracle_solve_tropical(p, sys.num_vars, semiring),
                Polys::MinPlus(p) => oracle_solve_minplus(p, sys.num_vars, semiring),
            };
            match root {
                Some(p) => {
                    writeln!(out, "SOLVABLE")?;
                    writeln!(out, "{}", format_point(&p))?;
                    Ok(SOLVABLE)
                }
                None => {
                    writeln!(out, "UNSOLVABLE")?;
                    Ok(UNSOLVABLE)
                }
            }
        }
    }
}

//! The `motcalc` command line.
//!
//! Exit codes: 0 success, 1 domain or parse error, 2 orbit cap exceeded,
//! 3 internal invariant violation (including a failed `check` suite).

pub mod document;
pub mod render;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::cellular::FibreSpec;
use crate::error::Error;
use crate::tower::{higher_chow_table, BaseSpec, TowerSpec};
use crate::verify::{self, Suite};
use crate::weyl::{self, Family, OrbitCap, ParabolicSpec, RootSystem};

use document::{BaseDocument, RankTableDocument, TowerDocument};
use render::{Decomposition, FibreRow, GpResult};

pub const EXIT_OK: u8 = 0;
pub const EXIT_DOMAIN: u8 = 1;
pub const EXIT_RESOURCE: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

pub const MAX_ORBIT_ENV: &str = "MOTCALC_MAX_ORBIT";

const SIMPLE_ROOTS_HELP: &str = "\
Simple roots are numbered 1..=rank following Bourbaki:
  A_n  1 - 2 - ... - n
  B_n  1 - 2 - ... - (n-1) => n      (alpha_n short)
  C_n  1 - 2 - ... - (n-1) <= n      (alpha_n long)
  D_n  1 - ... - (n-2) - (n-1), with n also attached to (n-2)
  E_n  1 - 3 - 4 - ... - n, with 2 attached to 4
  F_4  1 - 2 => 3 - 4
  G_2  1 <= 2                        (alpha_1 short)
The Levi list names the simple roots generating the Levi factor of P:
empty gives the full flag variety G/B, all roots give a point.";

const FIBRE_HELP: &str = "\
Fibres: `P n`, `Gr d n`, `GP <letter> <rank> levi=<list>`, `cells d1,d2,...`.";

#[derive(Debug, Parser)]
#[command(
    name = "motcalc",
    version,
    about = "Motivic decompositions of towers of pure Tate fibre bundles",
    after_help = FIBRE_HELP
)]
struct Cli {
    /// Maximum number of Weyl orbit points to enumerate.
    #[arg(long, global = true, env = MAX_ORBIT_ENV, value_name = "N")]
    max_orbit: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decompose the motive of a tower given as a JSON document or inline.
    #[command(after_help = FIBRE_HELP)]
    Decompose {
        /// Tower document (JSON); `-` reads standard input.
        #[arg(conflicts_with_all = ["fibres", "base"])]
        input: Option<PathBuf>,
        /// Inline fibre, repeatable, e.g. --fibre "Gr 2 4".
        #[arg(long = "fibre", value_name = "FIBRE")]
        fibres: Vec<String>,
        /// Inline base: `point`, `tate 0:1,1:1` or `chow 1,2,1`.
        #[arg(long)]
        base: Option<String>,
        /// Base higher Chow rank table (JSON) to convolve with the fibres.
        #[arg(long, value_name = "TABLE")]
        higher_chow: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Minimal coset representatives W^P and the motive of G/P.
    #[command(after_help = SIMPLE_ROOTS_HELP)]
    Gp {
        /// Cartan type letter, A-G.
        family: String,
        rank: usize,
        /// Comma separated simple roots of the Levi factor (empty: Borel).
        #[arg(long, default_value = "")]
        levi: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run a verification suite; exits 0 iff every case passes.
    Check {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(
            Suite::ALL.map(Suite::name)))]
        suite: String,
        /// Size bound: largest n or rank, or number of random cases.
        #[arg(long, default_value_t = 8)]
        bound: u32,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        /// `table` prints one line per case, `json` the summary document.
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Convolve a base higher Chow rank table with a list of fibres.
    #[command(after_help = FIBRE_HELP)]
    HigherChow {
        /// Rank table (JSON); `-` reads standard input.
        table: PathBuf,
        #[arg(long = "fibre", value_name = "FIBRE")]
        fibres: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_resource_limit() {
            EXIT_RESOURCE
        } else {
            EXIT_DOMAIN
        };
        let mut message = e.to_string();
        if e.is_resource_limit() {
            message.push_str(&format!(" (raise with --max-orbit or {MAX_ORBIT_ENV})"));
        }
        Failure { code, message }
    }
}

fn internal(message: String) -> Failure {
    Failure {
        code: EXIT_INTERNAL,
        message,
    }
}

/// Runs the CLI with explicit streams and returns the process exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_DOMAIN } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let cap = cli.max_orbit.map_or(OrbitCap::DEFAULT, OrbitCap);
    let outcome = match cli.command {
        Command::Decompose {
            input,
            fibres,
            base,
            higher_chow,
            format,
        } => decompose(input, fibres, base, higher_chow, cap, stdin).map(|d| match format {
            Format::Table => (render::decomposition_table(&d), EXIT_OK),
            Format::Json => (render::decomposition_json(&d), EXIT_OK),
        }),
        Command::Gp {
            family,
            rank,
            levi,
            format,
        } => gp(&family, rank, &levi, format, cap).map(|s| (s, EXIT_OK)),
        Command::Check {
            suite,
            bound,
            seed,
            format,
        } => check(&suite, bound, seed, format, cap),
        Command::HigherChow {
            table,
            fibres,
            format,
        } => standalone_higher_chow(&table, &fibres, cap, stdin).map(|t| match format {
            Format::Table => (render::rank_table_text(&t), EXIT_OK),
            Format::Json => (render::rank_table_json(&t), EXIT_OK),
        }),
    };
    match outcome {
        Ok((text, code)) => {
            let _ = stdout.write_all(text.as_bytes());
            code
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn read_input(path: &Path, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut text = String::new();
    if path == Path::new("-") {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Error::InvalidArgument(format!("reading standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("reading {}: {e}", path.display())))?;
    }
    Ok(text)
}

fn parse_fibres(fibres: &[String]) -> Result<Vec<FibreSpec>, Error> {
    fibres.iter().map(|f| f.parse()).collect()
}

/// Computes every quantity `decompose` reports, with internal consistency
/// checks between the motive and the Chow rank vector.
pub fn decompose_tower(
    tower: TowerSpec,
    base_table: Option<&crate::tower::RankTable>,
    cap: OrbitCap,
) -> Result<Decomposition, Error> {
    let fibres = tower
        .fibres
        .iter()
        .map(|f| {
            Ok(FibreRow {
                spec: f.to_string(),
                dimension: f.dimension()?,
                motive: f.motive(cap)?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let motive = match tower.base {
        BaseSpec::FreeChowBase { .. } => None,
        _ => Some(tower.motive(cap)?),
    };
    let chow_ranks = tower.chow_ranks(cap)?;
    let higher_chow = base_table
        .map(|t| higher_chow_table(t, &tower.fibres, cap))
        .transpose()?;
    Ok(Decomposition {
        dimension: tower.dimension()?,
        tower,
        fibres,
        motive,
        chow_ranks,
        higher_chow,
    })
}

fn decompose(
    input: Option<PathBuf>,
    fibres: Vec<String>,
    base: Option<String>,
    higher_chow: Option<PathBuf>,
    cap: OrbitCap,
    stdin: &mut dyn Read,
) -> Result<Decomposition, Failure> {
    let tower = match input {
        Some(path) => TowerDocument::parse(&read_input(&path, stdin)?)?.to_spec()?,
        None => {
            let base = match base {
                Some(b) => BaseDocument::parse_inline(&b)?,
                None => BaseSpec::Point,
            };
            TowerSpec::new(base, parse_fibres(&fibres)?)
        }
    };
    let base_table = match higher_chow {
        Some(path) => Some(RankTableDocument::parse(&read_input(&path, stdin)?)?.to_table()?),
        None => None,
    };
    let d = decompose_tower(tower, base_table.as_ref(), cap)?;
    if let Some(m) = &d.motive {
        let dense: Vec<_> = (0..=d.dimension).map(|p| m.chow_rank(p)).collect();
        if dense != d.chow_ranks {
            return Err(internal(format!(
                "Chow ranks {:?} disagree with motive {m}",
                d.chow_ranks
            )));
        }
    }
    Ok(d)
}

fn gp(
    family: &str,
    rank: usize,
    levi: &str,
    format: Format,
    cap: OrbitCap,
) -> Result<String, Failure> {
    let family: Family = family.parse()?;
    let system = RootSystem::new(family, rank)?;
    let parabolic = ParabolicSpec::parse_list(levi)?;
    let profile = weyl::coset_lengths(&system, &parabolic, cap)?;
    let dimension = system.flag_dimension(&parabolic)?;
    if !profile.is_palindromic() || profile.max_length() as usize != dimension {
        return Err(internal(format!(
            "coset profile of {system} is not palindromic about {dimension}"
        )));
    }
    let result = GpResult {
        system: &system,
        parabolic: &parabolic,
        profile: &profile,
        dimension,
    };
    Ok(match format {
        Format::Table => render::gp_table(&result),
        Format::Json => render::gp_json(&result),
    })
}

fn check(
    suite: &str,
    bound: u32,
    seed: u64,
    format: Format,
    cap: OrbitCap,
) -> Result<(String, u8), Failure> {
    let suite: Suite = suite.parse()?;
    let report = verify::run_suite(suite, bound, seed, cap)?;
    let text = match format {
        Format::Table => report.to_string(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.summary()).expect("serializable");
            s.push('\n');
            s
        }
    };
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_INTERNAL
    };
    Ok((text, code))
}

fn standalone_higher_chow(
    table: &Path,
    fibres: &[String],
    cap: OrbitCap,
    stdin: &mut dyn Read,
) -> Result<crate::tower::RankTable, Failure> {
    let base = RankTableDocument::parse(&read_input(table, stdin)?)?.to_table()?;
    Ok(higher_chow_table(&base, &parse_fibres(fibres)?, cap)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str], input: &str) -> (u8, String, String) {
        let mut stdin = input.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut argv = vec!["motcalc"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut stdin, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn decompose_grassmannian_table() {
        let (code, out, _) = run_capture(&["decompose", "--fibre", "Gr 2 4"], "");
        assert_eq!(code, 0);
        assert!(out.contains("motive      0:1 1:1 2:2 3:1 4:1"), "{out}");
        assert!(
            out.contains("polynomial  1 + L + 2·L^2 + L^3 + L^4"),
            "{out}"
        );
    }

    #[test]
    fn decompose_point_and_cube() {
        let (code, out, _) = run_capture(&["decompose"], "");
        assert_eq!(code, 0);
        assert!(out.contains("polynomial  1\n"), "{out}");
        let (_, out, _) = run_capture(
            &[
                "decompose",
                "--fibre",
                "P 1",
                "--fibre",
                "P 1",
                "--fibre",
                "P 1",
            ],
            "",
        );
        assert!(out.contains("polynomial  1 + 3·L + 3·L^2 + L^3\n"), "{out}");
    }

    #[test]
    fn decompose_from_stdin_json() {
        let doc = r#"{"base": {"chow_ranks": [1, 2, 1], "dim": 2}, "fibres": ["P 1"]}"#;
        let (code, out, err) = run_capture(&["decompose", "-", "--format", "json"], doc);
        assert_eq!(code, 0, "{err}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["chow_ranks"], serde_json::json!(["1", "3", "3", "1"]));
        assert!(v["motive"].is_null());
        assert_eq!(v["total_rank"], "8");
    }

    #[test]
    fn gp_examples() {
        let (code, out, _) = run_capture(&["gp", "A", "3", "--levi", "1,3"], "");
        assert_eq!(code, 0);
        assert!(
            out.contains("cosets      6\n") && out.contains("dimension   4\n"),
            "{out}"
        );
        let (_, out, _) = run_capture(&["gp", "A", "1"], "");
        assert!(
            out.contains("cosets      2\n") && out.contains("motive      1 + L\n"),
            "{out}"
        );
        let (_, out, _) = run_capture(&["gp", "G", "2", "--format", "json"], "");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["cosets"], "12");
        assert_eq!(v["dimension"], 6);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            run_capture(&["check", "flags", "--bound", "1"], "").0,
            EXIT_OK
        );
        assert_eq!(run_capture(&["check", "bogus"], "").0, EXIT_DOMAIN);
        assert_eq!(run_capture(&["gp", "E", "8"], "").0, EXIT_RESOURCE);
        assert_eq!(
            run_capture(&["gp", "A", "3", "--max-orbit", "5"], "").0,
            EXIT_RESOURCE
        );
        assert_eq!(run_capture(&["gp", "C", "2"], "").0, EXIT_DOMAIN);
        assert_eq!(
            run_capture(&["decompose", "-"], "{\"base\": ").0,
            EXIT_DOMAIN
        );
        assert_eq!(
            run_capture(&["decompose", "--fibre", "Gr 9 2"], "").0,
            EXIT_DOMAIN
        );
        assert_eq!(run_capture(&["--help"], "").0, EXIT_OK);
    }

    #[test]
    fn cap_error_names_cap() {
        let (_, _, err) = run_capture(&["gp", "E", "8"], "");
        assert!(
            err.contains("10000000") && err.contains("696729600"),
            "{err}"
        );
    }

    #[test]
    fn higher_chow_subcommand() {
        let table = r#"{"entries": [{"p": 1, "q": 1, "rank": 1}]}"#;
        let (code, out, _) = run_capture(
            &["higher-chow", "-", "--fibre", "P 1", "--format", "json"],
            table,
        );
        assert_eq!(code, 0);
        let doc = RankTableDocument::parse(&out).unwrap();
        let got: Vec<(u32, u32)> = doc.entries.iter().map(|e| (e.p, e.q)).collect();
        assert_eq!(got, vec![(1, 1), (2, 1)]);
    }
}

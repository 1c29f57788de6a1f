//! Command line front end.

use std::io::Write;
use std::str::FromStr;

use clap::{error::ErrorKind, Args, CommandFactory, Parser, Subcommand};
use smtilt_core::polygon::Diagonal;
use smtilt_core::tilting::Direction;

use crate::api::{self, ApiError, ClosureRequest, Format, Rendered, TiltRequest};

#[derive(Debug, Parser)]
#[command(
    name = "smtilt",
    version,
    about = "Simple-minded systems and their mutations on the polygon model"
)]
pub struct Cli {
    /// Rank e of the path algebra A_e.
    #[arg(short = 'e', long = "rank", global = true)]
    pub rank: Option<u32>,
    /// Weight w of the negative cluster category.
    #[arg(short = 'w', long = "weight", global = true)]
    pub weight: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Polygon size and number of indecomposables.
    Info,
    /// All admissible diagonals.
    Diagonals,
    /// The Auslander-Reiten quiver.
    ArQuiver,
    /// Enumerate or check simple-minded systems.
    #[command(subcommand)]
    Sms(SmsCommand),
    /// Extension closure of a system, optionally with its torsion pair.
    Closure {
        #[arg(long)]
        system: DiagonalList,
        /// Simples generating the torsion class.
        #[arg(long)]
        torsion: Option<DiagonalList>,
    },
    /// Left or right tilt at a set of pivot simples.
    Tilt(TiltArgs),
    /// The graph of left tilts at single simples.
    TiltGraph,
    /// Run the verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Serve the JSON API over HTTP (parameters come with each request).
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum SmsCommand {
    List,
    Check {
        #[arg(long)]
        system: DiagonalList,
    },
}

#[derive(Debug, Args)]
pub struct TiltArgs {
    #[command(flatten)]
    pub direction: DirectionFlag,
    #[arg(long)]
    pub system: DiagonalList,
    /// Pivot simples, a subset of the system.
    #[arg(long = "at")]
    pub at: DiagonalList,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct DirectionFlag {
    #[arg(long)]
    pub left: bool,
    #[arg(long)]
    pub right: bool,
}

/// Diagonals written as `lo-hi`, separated by commas: `3-5,1-6,7-9`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DiagonalList(pub Vec<Diagonal>);

impl FromStr for DiagonalList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = Vec::new();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (a, b) = item
                .split_once('-')
                .ok_or_else(|| format!("expected lo-hi, got '{item}'"))?;
            let a: u32 = a
                .trim()
                .parse()
                .map_err(|_| format!("bad vertex in '{item}'"))?;
            let b: u32 = b
                .trim()
                .parse()
                .map_err(|_| format!("bad vertex in '{item}'"))?;
            out.push(Diagonal::new(a, b).map_err(|e| e.to_string())?);
        }
        Ok(DiagonalList(out))
    }
}

/// Runs a parsed command, writing the body to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn run(cli: Cli, out: &mut impl Write, err: &mut impl Write) -> u8 {
    if let Command::Serve { port, host } = &cli.command {
        return match serve(host, *port) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(err, "{}", api::canonical_json(&e));
                1
            }
        };
    }
    let (Some(rank), Some(weight)) = (cli.rank, cli.weight) else {
        let e = Cli::command().error(
            ErrorKind::MissingRequiredArgument,
            "both -e and -w are required",
        );
        let _ = write!(err, "{}", e.render());
        return 2;
    };
    let result = api::params(Some(rank), Some(weight)).and_then(|p| {
        let body = match cli.command {
            Command::Info => api::category(&p, cli.format)?,
            Command::Diagonals => api::diagonals(&p, cli.format)?,
            Command::ArQuiver => api::ar_quiver(&p, cli.format)?,
            Command::Sms(SmsCommand::List) => api::sms_list(&p, cli.format)?,
            Command::Sms(SmsCommand::Check { system }) => api::sms_check(&p, &system.0)?,
            Command::Closure { system, torsion } => {
                let req = ClosureRequest {
                    system: system.0,
                    torsion: torsion.map(|t| t.0),
                };
                api::closure(&p, &req, cli.format)?
            }
            Command::Tilt(t) => {
                let direction = if t.direction.left {
                    Direction::Left
                } else {
                    Direction::Right
                };
                let req = TiltRequest {
                    system: t.system.0,
                    pivot: t.at.0,
                    direction,
                };
                api::tilt(&p, &req, cli.format)?
            }
            Command::TiltGraph => api::tilting_graph(&p, cli.format)?,
            Command::Verify { suite } => {
                let (report, body) = api::verify(&p, &suite)?;
                for c in &report.checks {
                    let verdict = if c.passed() { "PASS" } else { "FAIL" };
                    let _ = writeln!(
                        err,
                        "{verdict} {}/{} checked={} failed={}",
                        c.suite, c.name, c.checked, c.failed
                    );
                }
                return Ok(Outcome::Verified(body, report.passed));
            }
            Command::Serve { .. } => unreachable!("handled above"),
        };
        Ok(Outcome::Body(body))
    });
    match result {
        Ok(Outcome::Body(r)) => {
            emit(out, &r);
            0
        }
        Ok(Outcome::Verified(r, passed)) => {
            emit(out, &r);
            u8::from(!passed)
        }
        Err(e) => {
            let _ = writeln!(err, "{}", api::canonical_json(&e));
            1
        }
    }
}

enum Outcome {
    Body(Rendered),
    Verified(Rendered, bool),
}

fn emit(out: &mut impl Write, r: &Rendered) {
    let _ = out.write_all(r.body.as_bytes());
    if !r.body.ends_with('\n') {
        let _ = out.write_all(b"\n");
    }
}

fn serve(host: &str, port: u16) -> Result<(), ApiError> {
    let runtime = tokio::runtime::Builder::new_multi_thread()
        .enable_all()
        .build()
        .map_err(|e| ApiError::parameter(format!("cannot start runtime: {e}")))?;
    runtime
        .block_on(crate::http::serve(host, port))
        .map_err(|e| ApiError::parameter(format!("cannot serve on {host}:{port}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(a: u32, b: u32) -> Diagonal {
        Diagonal::new(a, b).unwrap()
    }

    #[test]
    fn diagonal_lists() {
        assert_eq!(
            "3-5, 6-1,7-9".parse::<DiagonalList>().unwrap().0,
            vec![d(3, 5), d(1, 6), d(7, 9)]
        );
        assert_eq!("".parse::<DiagonalList>().unwrap().0, vec![]);
        assert!("35".parse::<DiagonalList>().is_err());
        assert!("3-3".parse::<DiagonalList>().is_err());
        assert!("a-3".parse::<DiagonalList>().is_err());
    }

    #[test]
    fn tilt_needs_a_direction() {
        let base = [
            "smtilt", "-e", "3", "-w", "2", "tilt", "--system", "3-5", "--at", "3-5",
        ];
        assert!(Cli::try_parse_from(base).is_err());
        let mut both = base.to_vec();
        both.extend(["--left", "--right"]);
        assert!(Cli::try_parse_from(both).is_err());
    }

    fn run_args(args: &[&str]) -> (u8, String, String) {
        let cli = Cli::try_parse_from(args).unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(cli, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn exit_codes() {
        let (code, out, _) = run_args(&["smtilt", "-e", "3", "-w", "2", "info"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "{\"indecomposables\":15,\"polygon_size\":10,\"rank\":3,\"weight\":2}\n"
        );
        let (code, _, err) = run_args(&["smtilt", "info"]);
        assert_eq!(code, 2);
        assert!(err.contains("-e"));
        let (code, out, err) =
            run_args(&["smtilt", "-e", "3", "-w", "2", "closure", "--system", "0-4"]);
        assert_eq!(code, 1);
        assert!(out.is_empty());
        assert!(err.starts_with("{\"code\":\"not_admissible\""));
    }

    proptest! {
        #[test]
        fn diagonal_list_round_trip(pairs in prop::collection::vec((0u32..200, 1u32..200), 0..8)) {
            let diagonals: Vec<Diagonal> = pairs.iter().map(|&(a, k)| d(a, a + k)).collect();
            let text: Vec<String> = diagonals.iter().map(|x| format!("{}-{}", x.hi(), x.lo())).collect();
            prop_assert_eq!(text.join(",").parse::<DiagonalList>().unwrap().0, diagonals);
        }
    }
}

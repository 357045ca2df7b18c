//! `origami`: JSON reports on square-tiled surfaces.

mod commands;
mod input;
mod report;
mod verify;

use clap::{Args, Parser, Subcommand};
use input::{load, parse_dir, parse_matrix, parse_perm, CliError, Surface};
use report::Report;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Parser)]
#[command(name = "origami", version, about = "Exact homology and affine-group reports for origamis")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct SurfaceArgs {
    /// JSON file {"n", "r", "u", "base"} with 0-based image arrays.
    #[arg(long, value_name = "PATH")]
    origami: Option<PathBuf>,
    /// Catalog name: eierlegende-wollmilchsau, ornithorynque, appendix-b.
    #[arg(long)]
    name: Option<String>,
    /// Parameter of the ornithorynque family (odd, at least 3).
    #[arg(long)]
    q: Option<i64>,
}

impl SurfaceArgs {
    fn load(&self) -> Result<Surface, CliError> {
        load(self.origami.as_deref(), self.name.as_deref(), self.q)
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Genus, stratum, automorphisms and Veech index.
    Info(SurfaceArgs),
    /// Veech group index, optionally testing a matrix for membership.
    Veech {
        #[command(flatten)]
        s: SurfaceArgs,
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Dimensions, an absolute basis and its intersection matrix.
    Homology(SurfaceArgs),
    /// Matrix of an affine lift on a named subspace.
    Action {
        #[command(flatten)]
        s: SurfaceArgs,
        #[arg(long)]
        matrix: String,
        /// Closing relabeling by index among the candidates (default canonical).
        #[arg(long)]
        closing: Option<usize>,
        /// Automorphism composed after the lift, as an image array.
        #[arg(long)]
        aut: Option<String>,
        #[arg(long, default_value = "absolute")]
        basis: String,
    },
    /// Invariant splitting of relative homology.
    Decompose(SurfaceArgs),
    /// Closure of the generator action on a subspace.
    Group {
        #[command(flatten)]
        s: SurfaceArgs,
        #[arg(long, default_value = "H0")]
        subspace: String,
        /// Include involution count, norm bound and symplectic subgroup.
        #[arg(long)]
        report: bool,
        #[arg(long, default_value_t = 20_000)]
        cap: usize,
    },
    /// Whether the kernel of the action is a principal congruence subgroup.
    Congruence {
        #[command(flatten)]
        s: SurfaceArgs,
        #[arg(long)]
        level: Option<i64>,
        /// Subspaces of the block action (repeatable).
        #[arg(long)]
        subspace: Vec<String>,
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
    },
    /// Norm growth of random generator products.
    Growth {
        #[command(flatten)]
        s: SurfaceArgs,
        #[arg(long, default_value = "H0")]
        subspace: String,
        #[arg(long, default_value_t = 1000)]
        len: usize,
        #[arg(long, default_value_t = 4)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Cylinder decomposition in a rational direction.
    Cylinders {
        #[command(flatten)]
        s: SurfaceArgs,
        #[arg(long)]
        dir: String,
    },
    /// Multitwist along the cylinders of a direction.
    Twist {
        #[command(flatten)]
        s: SurfaceArgs,
        #[arg(long)]
        dir: String,
    },
    /// Parity of the spin structure.
    Spin(SurfaceArgs),
    /// Search for an invariant supplement of absolute homology.
    Supplement {
        #[command(flatten)]
        s: SurfaceArgs,
        #[arg(long, default_value = "vert,hor,diag")]
        probes: String,
    },
    /// Run a full verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Subcommand)]
enum Suite {
    TheoremA,
    TheoremB {
        #[arg(long, default_value_t = 3)]
        q: usize,
    },
    AppendixA,
    AppendixB,
}

fn dispatch(cmd: Cmd) -> Result<Report, CliError> {
    match cmd {
        Cmd::Info(s) => commands::info(&s.load()?),
        Cmd::Veech { s, matrix } => {
            let m = matrix.as_deref().map(parse_matrix).transpose()?;
            commands::veech(&s.load()?, m)
        }
        Cmd::Homology(s) => commands::homology(&s.load()?),
        Cmd::Action { s, matrix, closing, aut, basis } => {
            let m = parse_matrix(&matrix)?;
            let a = aut.as_deref().map(parse_perm).transpose()?;
            commands::action(&s.load()?, m, closing, a, &basis)
        }
        Cmd::Decompose(s) => commands::decompose(&s.load()?),
        Cmd::Group { s, subspace, report, cap } => commands::group(&s.load()?, &subspace, report, cap),
        Cmd::Congruence { s, level, subspace, cap } => commands::congruence(&s.load()?, level, &subspace, cap),
        Cmd::Growth { s, subspace, len, trials, seed } => commands::growth(&s.load()?, &subspace, len, trials, seed),
        Cmd::Cylinders { s, dir } => {
            let d = parse_dir(&dir)?;
            commands::cylinders_cmd(&s.load()?, d)
        }
        Cmd::Twist { s, dir } => {
            let d = parse_dir(&dir)?;
            commands::twist(&s.load()?, d)
        }
        Cmd::Spin(s) => commands::spin(&s.load()?),
        Cmd::Supplement { s, probes } => commands::supplement(&s.load()?, &probes),
        Cmd::Verify { suite } => match suite {
            Suite::TheoremA => verify::theorem_a(),
            Suite::TheoremB { q } => {
                if q < 3 || q % 2 == 0 {
                    return Err(CliError::Usage(format!("--q must be odd and at least 3, got {q}")));
                }
                verify::theorem_b(q)
            }
            Suite::AppendixA => verify::appendix_a(),
            Suite::AppendixB => verify::appendix_b_suite(),
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let json = cli.json;
    match dispatch(cli.cmd) {
        Ok(rep) => {
            let text = if json {
                format!("{}\n", serde_json::to_string_pretty(&rep.to_json()).expect("json"))
            } else {
                rep.to_text()
            };
            // a closed pipe is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::from(if rep.passed() { 0 } else { 1 })
        }
        Err(e) => {
            if json {
                let v = serde_json::json!({"error": e.to_string(), "exit_code": e.exit_code()});
                let _ = writeln!(std::io::stdout().lock(), "{}", serde_json::to_string_pretty(&v).expect("json"));
            }
            eprintln!("origami: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

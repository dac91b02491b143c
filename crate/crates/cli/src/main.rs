use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use metaplectic::commands::{self, ClassifySource, CliError, Emit, Report};
use metaplectic::config::{load_config, Overrides, RunConfig};
use metaplectic_core::oracle::GroupTag;

#[derive(Parser)]
#[command(name = "metaplectic", version, about = "Metaplectic Sp_2n: cover arithmetic, Satake identities, classification")]
struct Cli {
    /// Output format; CSV is offered only by `classify`.
    #[arg(long, global = true, value_enum, default_value_t = EmitArg::Text)]
    emit: EmitArg,
    /// `key = value` file with any of p, f, n, N, depth, seed.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Residue characteristic, an odd prime.
    #[arg(long, global = true)]
    p: Option<u64>,
    /// Residue degree.
    #[arg(long, global = true)]
    f: Option<u32>,
    /// Rank n of Sp_2n.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Order N of the value group, even and prime to p.
    #[arg(long, global = true, visible_alias = "N")]
    order: Option<u64>,
    /// Oracle enumeration depth.
    #[arg(long, global = true)]
    depth: Option<u32>,
    /// Seed for randomized checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitArg {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Sl2,
    Sp4,
}

#[derive(Subcommand)]
enum Cmd {
    /// Quadratic Hilbert symbol of two square classes (1, u, pi, upi).
    Hilbert {
        x: String,
        y: String,
        /// Cross-check against solvability of z² = xX² + yY².
        #[arg(long)]
        verify: bool,
    },
    /// Q on the simple coroots and splitting over M'.
    Cover {
        /// Also evaluate Q at this cocharacter, e.g. "1,-2".
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Transform of T_{2λ} for λ = −(e_1 + … + e_i).
    Satake {
        #[arg(long)]
        i: usize,
        /// Recount by coset enumeration (n ≤ 2, f = 1).
        #[arg(long)]
        oracle: bool,
    },
    /// The set 𝒜 for λ = −(e_1 + … + e_i) and its fibers.
    Aset {
        #[arg(long)]
        i: usize,
    },
    /// A q-restricted weight ν given in ε-coordinates, e.g. "1,0".
    Weights {
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
    },
    /// Triples of a supersingular datum or torus character.
    Classify {
        /// JSON input file; standard input when absent.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Use the trivial torus character of rank n.
        #[arg(long, conflicts_with_all = ["input", "siegel"])]
        trivial: bool,
        /// Read a reductive GL_n datum with "Q" and lift it.
        #[arg(long)]
        siegel: bool,
    },
    /// Brute-force coset counts.
    Oracle {
        #[command(subcommand)]
        what: OracleCmd,
    },
    /// Run acceptance criteria 1–8.
    Selftest {
        /// Include the Sp_4 pipelines in criterion 1.
        #[arg(long)]
        with_sp4: bool,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Counts |S_{μ,2λ}| for every μ above 2λ.
    Satake {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long)]
        i: usize,
    },
}

fn read_input(path: &Option<PathBuf>) -> Result<String, CliError> {
    match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| CliError::Usage(format!("{}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Usage(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let file = match &cli.config {
        Some(path) => load_config(path)?,
        None => Overrides::default(),
    };
    let flags = Overrides {
        p: cli.p,
        f: cli.f,
        n: cli.n,
        order: cli.order,
        depth: cli.depth,
        seed: cli.seed,
    };
    let cfg = RunConfig::resolve(&flags.over(&file))?;
    match &cli.cmd {
        Cmd::Hilbert { x, y, verify } => commands::hilbert_cmd(x, y, *verify, &cfg),
        Cmd::Cover { lambda } => commands::cover_cmd(lambda.as_deref(), &cfg),
        Cmd::Satake { i, oracle } => commands::satake_cmd(*i, *oracle, &cfg),
        Cmd::Aset { i } => commands::aset_cmd(*i, &cfg),
        Cmd::Weights { nu } => commands::weights_cmd(nu, &cfg),
        Cmd::Classify { input, trivial, siegel } => {
            let source = if *trivial {
                ClassifySource::Trivial
            } else if *siegel {
                ClassifySource::Siegel(read_input(input)?)
            } else {
                ClassifySource::Datum(read_input(input)?)
            };
            commands::classify_cmd(&source, &cfg)
        }
        Cmd::Oracle {
            what: OracleCmd::Satake { group, i },
        } => {
            let g = match group {
                GroupArg::Sl2 => GroupTag::Sl2,
                GroupArg::Sp4 => GroupTag::Sp4,
            };
            commands::oracle_satake_cmd(g, *i, &cfg)
        }
        Cmd::Selftest { with_sp4 } => commands::selftest_cmd(*with_sp4, &cfg),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let emit = match cli.emit {
        EmitArg::Text => Emit::Text,
        EmitArg::Json => Emit::Json,
        EmitArg::Csv => Emit::Csv,
    };
    let result = run(&cli).and_then(|r| r.render(emit).map(|s| (s, r.exit)));
    match result {
        Ok((out, code)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("metaplectic: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

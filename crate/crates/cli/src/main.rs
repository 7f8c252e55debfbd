use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cubic_dga::run::{run, Command, Format, Input, RunConfig};

#[derive(Parser)]
#[command(name = "cubic-dga", version, about = "Binary-sequence dg-algebras of cubic planar graphs")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(Args)]
struct Source {
    /// Graph JSON file
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Embedding JSON file; the garden is built from it when no garden is given
    #[arg(long)]
    embedding: Option<PathBuf>,
    /// Garden JSON file
    #[arg(long)]
    garden: Option<PathBuf>,
    /// Bundled fixture name (see `fixtures list`)
    #[arg(long, conflicts_with = "graph")]
    fixture: Option<String>,
    /// Coefficient ring: zz, fp:<p> or gf:<p>,<k>
    #[arg(long, default_value = "zz")]
    field: String,
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: OutFormat,
}

#[derive(Subcommand)]
enum Cmd {
    /// List faces, boundary edges and vertices
    Faces(Source),
    /// Print the differential of every generator
    Differential(Source),
    /// Check that the differential squares to zero
    D2check(Source),
    /// Run the move invariance battery
    MovesCheck {
        #[command(flatten)]
        src: Source,
        /// Seed for a random vertex orientation used in the geometric checks
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Print the T-versal differential and basis matrices
    Tversal {
        #[command(flatten)]
        src: Source,
        /// Root vertex of the spanning tree (1-based)
        #[arg(long, default_value_t = 1)]
        root: usize,
    },
    /// Count T-versal augmentations over a finite field
    Augcount {
        #[command(flatten)]
        src: Source,
        #[arg(long, default_value_t = 1)]
        root: usize,
    },
    /// Print the chromatic polynomial of the dual graph
    Chromatic(Source),
    /// Compare the coloring count with the augmentation count
    VerifyTheorem {
        #[command(flatten)]
        src: Source,
        #[arg(long, default_value_t = 1)]
        root: usize,
    },
    /// Build the dual coloring of one augmentation
    ColorFromAug {
        #[command(flatten)]
        src: Source,
        /// Index into the enumerated augmentations (0-based)
        #[arg(long)]
        index: usize,
        #[arg(long, default_value_t = 1)]
        root: usize,
    },
    /// Check the μ identities on every full augmentation
    MuIdentity(Source),
    /// Bundled fixtures
    Fixtures {
        #[command(subcommand)]
        action: FixturesCmd,
    },
}

#[derive(Subcommand)]
enum FixturesCmd {
    /// List bundled fixtures
    List {
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Print the files of one fixture
    Dump {
        name: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
}

fn format_of(f: OutFormat) -> Format {
    match f {
        OutFormat::Text => Format::Text,
        OutFormat::Json => Format::Json,
    }
}

fn config(command: Command, src: Source, root: usize, seed: Option<u64>) -> Result<RunConfig, String> {
    let root = root.checked_sub(1).ok_or("--root is 1-based")?;
    Ok(RunConfig {
        command,
        input: Input { fixture: src.fixture, graph: src.graph, embedding: src.embedding, garden: src.garden },
        field: src.field,
        root,
        seed,
        format: format_of(src.format),
    })
}

fn to_config(cmd: Cmd) -> Result<RunConfig, String> {
    match cmd {
        Cmd::Faces(s) => config(Command::Faces, s, 1, None),
        Cmd::Differential(s) => config(Command::Differential, s, 1, None),
        Cmd::D2check(s) => config(Command::D2Check, s, 1, None),
        Cmd::MovesCheck { src, seed } => config(Command::MovesCheck, src, 1, seed),
        Cmd::Tversal { src, root } => config(Command::Tversal, src, root, None),
        Cmd::Augcount { src, root } => config(Command::Augcount, src, root, None),
        Cmd::Chromatic(s) => config(Command::Chromatic, s, 1, None),
        Cmd::VerifyTheorem { src, root } => config(Command::VerifyTheorem, src, root, None),
        Cmd::ColorFromAug { src, index, root } => config(Command::ColorFromAug { index }, src, root, None),
        Cmd::MuIdentity(s) => config(Command::MuIdentity, s, 1, None),
        Cmd::Fixtures { action: FixturesCmd::List { format } } => Ok(RunConfig { format: format_of(format), ..RunConfig::new(Command::FixturesList) }),
        Cmd::Fixtures { action: FixturesCmd::Dump { name, format } } => {
            Ok(RunConfig { format: format_of(format), ..RunConfig::new(Command::FixturesDump { name }) })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let cfg = match to_config(cli.command) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let out = run(&cfg);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}

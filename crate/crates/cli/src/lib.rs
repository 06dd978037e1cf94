//! Command-line front end for `tangle-core`: file formats, reports and
//! batch execution.
//!
//! Every command renders a plain-text report or, with `--json`, one JSON
//! object per input. All numbers are exact: rationals print as `p/q`.

pub mod commands;
pub mod formats;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use tangle_core::Caps;

#[derive(Parser, Debug)]
#[command(name = "tangle", version, about = "Clutters, cuboids, binary matroids and cycle covers")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for commands given several input files.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: u16,

    /// Write the report to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(flatten)]
    pub caps: CapArgs,

    #[command(subcommand)]
    pub command: Command,
}

/// Search and enumeration limits; exceeding one is reported, never truncated.
#[derive(Args, Debug, Clone, Copy)]
pub struct CapArgs {
    /// Largest ground set for vertex enumeration (idealness tests).
    #[arg(long, global = true, default_value_t = 14, value_parser = positive)]
    pub vertex_ground: usize,
    /// Largest member count for vertex enumeration.
    #[arg(long, global = true, default_value_t = 128, value_parser = positive)]
    pub vertex_members: usize,
    /// Largest width for the cube-idealness test.
    #[arg(long, global = true, default_value_t = 7, value_parser = positive)]
    pub cube_width: usize,
    /// Largest cycle-space rank for cycle cover searches.
    #[arg(long, global = true, default_value_t = 8, value_parser = positive)]
    pub cover_rank: usize,
    /// Largest width for the projective-geometry subspace construction.
    #[arg(long, global = true, default_value_t = 20, value_parser = positive)]
    pub pg_width: usize,
    /// Largest number of member subsets tried by the embedding search.
    #[arg(long, global = true, default_value_t = 1 << 22, value_parser = clap::value_parser!(u64).range(1..))]
    pub embed_subsets: u64,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

impl CapArgs {
    pub fn to_caps(self) -> Caps {
        Caps {
            vertex_ground: self.vertex_ground,
            vertex_members: self.vertex_members,
            cube_width: self.cube_width,
            cover_rank: self.cover_rank,
            pg_width: self.pg_width,
            embed_subsets: self.embed_subsets,
            ..Caps::default()
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Covering and packing numbers, intersection profile, binarity, χ and idealness.
    Analyze { files: Vec<PathBuf> },
    /// The blocker, written in the clutter file format.
    Blocker { files: Vec<PathBuf> },
    /// The first k cycles of a graph whose union is every edge.
    Cover {
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=3))]
        k: u8,
    },
    /// Three cycles of a binary matroid whose union is every element.
    MatroidCover { files: Vec<PathBuf> },
    /// Seven cycles using every edge exactly four times.
    SevenFour { files: Vec<PathBuf> },
    /// A packing of value two with weights in {0, 1/4, 1/2, 3/4, 1}.
    Pack {
        files: Vec<PathBuf>,
        /// Skip the idealness check (required above the vertex enumeration caps).
        #[arg(long)]
        assume_ideal: bool,
        /// Report a maximum fractional packing instead.
        #[arg(long)]
        fractional: bool,
    },
    /// The smallest projective geometry embedded in a clutter.
    Embed {
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=3))]
        max_level: u8,
    },
    /// The covering LP `min 1·x, x(C) ≥ 1, x ≥ 0` in the LP text format.
    EmitLp { files: Vec<PathBuf> },
    /// Reports on standard examples.
    Demo {
        example: DemoExample,
        /// Geometry level ℓ for `pg` (rank of PG(ℓ-1, 2)).
        level: Option<usize>,
    },
    /// Prints a standard example in its file format.
    Fixture { name: FixtureName },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum DemoExample {
    Petersen,
    Q6,
    Fano,
    Wagner,
    Pg,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureName {
    Q6,
    T30,
    Petersen,
    Wagner,
    K4,
    Fano,
}

/// How a command ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok,
    /// A "none" or "false" answer.
    Negative,
    Error,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Negative => 2,
            Status::Error => 1,
        }
    }
}

/// A rendered report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    /// One JSON object on a single line.
    pub json: String,
    pub status: Status,
}

impl Output {
    pub fn error(message: impl Into<String>) -> Self {
        let message = message.into();
        Output {
            json: serde_json::json!({ "error": message }).to_string(),
            text: format!("error: {message}\n"),
            status: Status::Error,
        }
    }
}

/// Runs a parsed command line and returns stdout and the exit status.
pub fn run(cli: &Cli) -> (String, Status) {
    let caps = cli.caps.to_caps();
    let files = match &cli.command {
        Command::Analyze { files }
        | Command::Blocker { files }
        | Command::Cover { files, .. }
        | Command::SevenFour { files }
        | Command::MatroidCover { files }
        | Command::Pack { files, .. }
        | Command::Embed { files, .. }
        | Command::EmitLp { files } => files.clone(),
        Command::Demo { example, level } => return single(cli.json, commands::demo(*example, *level, &caps)),
        Command::Fixture { name } => return single(cli.json, commands::fixture(*name)),
    };
    if files.is_empty() {
        return single(cli.json, Output::error("no input files"));
    }
    let one = |path: &PathBuf| -> Output {
        match std::fs::read_to_string(path) {
            Ok(text) => commands::on_text(&cli.command, &text, &caps),
            Err(e) => Output::error(format!("{}: {e}", path.display())),
        }
    };
    let outputs: Vec<Output> = if cli.jobs > 1 && files.len() > 1 {
        match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.into()).build() {
            Ok(pool) => pool.install(|| files.par_iter().map(one).collect()),
            Err(e) => return single(cli.json, Output::error(e.to_string())),
        }
    } else {
        files.iter().map(one).collect()
    };
    if files.len() == 1 {
        return single(cli.json, outputs.into_iter().next().expect("one output per file"));
    }
    let status = outputs.iter().map(|o| o.status).max().unwrap_or(Status::Ok);
    let mut out = String::new();
    for (path, o) in files.iter().zip(&outputs) {
        if cli.json {
            let file = serde_json::to_string(&path.display().to_string()).expect("strings serialize");
            out.push_str(&format!("{{\"file\":{file},\"report\":{}}}\n", o.json));
        } else {
            out.push_str(&format!("== {}\n{}", path.display(), o.text));
        }
    }
    (out, status)
}

fn single(json: bool, o: Output) -> (String, Status) {
    if json {
        (format!("{}\n", o.json), o.status)
    } else {
        (o.text, o.status)
    }
}

mod commands;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pavingkit::Error;
use serde_json::json;

use output::Format;

/// h-vectors of paving matroids, pure O-sequence witnesses and the monomial
/// domination function f(r,d).
#[derive(Parser, Debug)]
#[command(name = "pavingkit", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    /// Worker threads for parallel enumeration and scans (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// f-vector, h-vector and necessary-condition bounds of a matroid.
    Hvector { matroid: PathBuf },
    /// Closed-form h-vector of a rank-r paving matroid with b bases.
    PavingH {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        b: u64,
    },
    /// Pure multicomplex witness for the h-vector of a matroid.
    Certify {
        matroid: PathBuf,
        /// Node budget for the general witness search.
        #[arg(long, default_value_t = pavingkit::multicomplex::DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
    /// Exact f(r,d) with a witness.
    FSolve {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        d: usize,
        /// Time budget in seconds.
        #[arg(long, default_value_t = 60)]
        budget: u64,
        /// Node budget (unlimited by default).
        #[arg(long)]
        max_nodes: Option<u64>,
    },
    /// Smallest colour class of the standard colouring.
    Fbar {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        d: usize,
    },
    /// Aperiodic binary necklaces with r ones and d zeros.
    Necklaces {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        d: u64,
        /// Also count by rotating every binary string.
        #[arg(long)]
        brute: bool,
    },
    /// Compare f, f_bar and L2 on a grid of (r, d).
    Scan {
        #[arg(long)]
        rmax: u32,
        #[arg(long)]
        dmax: usize,
        /// Time budget per cell in seconds.
        #[arg(long, default_value_t = 60)]
        budget: u64,
    },
    /// Non-isomorphic paving (or sparse paving) matroids.
    Enumerate {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        /// Sparse paving matroids only.
        #[arg(long)]
        sparse: bool,
        /// Keep matroids with loops.
        #[arg(long)]
        allow_loops: bool,
        /// Keep matroids with coloops.
        #[arg(long)]
        allow_coloops: bool,
        /// Write one JSON file per matroid, named by canonical hash, plus summary.csv.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// g(r,n) with a witnessing matroid.
    G {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
    /// Tutte polynomial by deletion-contraction.
    Tutte { matroid: PathBuf },
    /// Closed-form Tutte polynomial of a sparse paving matroid.
    TutteSparse {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        lambda: u64,
    },
    /// Check a block design and build its sparse paving matroid.
    Steiner { design: PathBuf },
    /// S(r,n), the sparse paving bound and the f-based basis bound.
    Bounds {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub kind: &'static str,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: 1, kind: "usage", message: message.into() }
    }

    pub fn budget(message: impl Into<String>) -> Self {
        Failure { code: 2, kind: "budget_exceeded", message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match e {
            Error::SizeCap { .. } | Error::CapExceeded(_) | Error::Overflow => (2, "cap_exceeded"),
            Error::BudgetExceeded => (2, "budget_exceeded"),
            _ => (3, "validation"),
        };
        Failure { code, kind, message: e.to_string() }
    }
}

fn report(format: Format, f: &Failure) {
    let stderr = std::io::stderr();
    let mut err = stderr.lock();
    let _ = if format == Format::Json {
        writeln!(err, "{}", json!({"code": f.code, "kind": f.kind, "message": f.message}))
    } else {
        writeln!(err, "error: {}", f.message)
    };
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            report(cli.format, &Failure::usage(e.to_string()));
            return ExitCode::from(1);
        }
    }
    let (result, late) = match commands::run(&cli.command) {
        Ok(done) => (Some(done.output), done.failure),
        Err(f) => (None, Some(f)),
    };
    if let Some(out) = result {
        let stdout = std::io::stdout();
        if let Err(e) = out.render(cli.format, &mut stdout.lock()) {
            report(cli.format, &Failure::usage(format!("cannot write output: {e}")));
            return ExitCode::from(1);
        }
    }
    match late {
        None => ExitCode::SUCCESS,
        Some(f) => {
            report(cli.format, &f);
            ExitCode::from(f.code)
        }
    }
}

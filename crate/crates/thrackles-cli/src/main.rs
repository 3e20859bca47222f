//! Command-line front end: generate graphs, run constructions, verify
//! artifacts, solve exact parameters, and regenerate the bound tables.
//!
//! Every subcommand writes a single JSON document to stdout (SVG goes to a
//! named file only) and reports problems on stderr with a distinct exit
//! code: 0 success, 1 verification failure (naming the first
//! counterexample), 2 usage or schema error, 3 search cap exceeded.

mod construct;
mod io_util;
mod render;
mod report;
mod solve;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use thrackles::graph::{
    complete_graph, complete_subdivision, nested_triangles, singleton_tripleton_graph, two_claw,
};
use thrackles::json::graph_to_value;

/// A failure carrying the exit code the process should return.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn schema(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }

    pub fn verification(message: impl Into<String>) -> Failure {
        Failure { code: 1, message: message.into() }
    }
}

impl From<thrackles::Error> for Failure {
    fn from(e: thrackles::Error) -> Failure {
        use thrackles::Error::*;
        let code = match &e {
            InvalidInput(_) | Schema(_) => 2,
            CapExceeded(_) => 3,
            Verification(_) | InvalidDrawing(_) | Construction(_) => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure { code: 2, message: format!("i/o error: {e}") }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Failure {
        Failure { code: 2, message: format!("malformed JSON: {e}") }
    }
}

pub type CliResult<T = ()> = Result<T, Failure>;

#[derive(Parser)]
#[command(
    name = "thrackles",
    version,
    about = "Thrackle partitions, linear/track/convex/geometric layouts, and exact oracles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a named graph family as a JSON document
    #[command(long_about = "Emit a named graph family as a JSON document.\n\nFamilies:\n  \
        complete              K_n (requires --n)\n  \
        complete-subdivision  K_n with every edge subdivided once (requires --n)\n  \
        two-claw              the 7-vertex double claw\n  \
        nested-triangles      edge-maximal planar triangle tower (requires --n)\n  \
        singleton-tripleton   containment bipartite graph on 1- and 3-subsets (requires --n)")]
    Gen {
        /// Family name (see --help for the list)
        family: String,
        /// Size parameter of the family
        #[arg(long)]
        n: Option<usize>,
    },

    /// Run a construction; JSON artifact to stdout, optional SVG to a file
    #[command(long_about = "Run a construction and emit its artifact.\n\nConstructions:\n  \
        complete-matching     thrackled-matching partition of a complete graph (stdin graph or --n)\n  \
        small-matching        optimal matching partition of K_t, t in 3..=5 (--t)\n  \
        queue-arch            nesting-height/arch thrackle partition of any graph (stdin)\n  \
        convex-coloring       iterated-distance thrackle coloring of K_n (--n)\n  \
        walecki               Hamiltonian-cycle (+star) partition of K_n (--n)\n  \
        star-forests          3 star-forest classes of the singleton-tripleton graph (stdin or --n)\n  \
        compatible-bijections k edge-disjoint planar copies and their union (--k)\n  \
        extremal              layered drawing with k colors, s levels, no same-color crossing (--k --s)\n  \
        knprime               drawing of subdivided K_n with two all-meeting classes (--n)\n  \
        one-bend              one-bend drawing of any graph in which all edge pairs meet (stdin)\n  \
        tree-track            2-track layout of a forest (stdin)\n  \
        random-track          seeded (colors,tracks)-track layout search (stdin, --tracks --colors)\n  \
        compose               convex thrackle partition from a track layout artifact (stdin)\n  \
        two-track-thrackle    crossing/adjacent classes of a two-track drawing artifact (stdin)\n  \
        two-track-noncrossing noncrossing classes of a two-track drawing artifact (stdin)")]
    Construct {
        /// Construction name (see --help for the list)
        name: String,
        /// Input artifact file; "-" or absent reads stdin
        input: Option<PathBuf>,
        /// Vertex-count parameter
        #[arg(long)]
        n: Option<usize>,
        /// Track-count parameter for small-matching
        #[arg(long)]
        t: Option<usize>,
        /// Class-count parameter
        #[arg(long)]
        k: Option<usize>,
        /// Level-count parameter for extremal
        #[arg(long)]
        s: Option<usize>,
        /// Number of tracks for random-track
        #[arg(long)]
        tracks: Option<usize>,
        /// Number of edge colors for random-track
        #[arg(long)]
        colors: Option<usize>,
        /// RNG seed for randomized constructions
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write an SVG rendering to this file
        #[arg(long)]
        svg: Option<PathBuf>,
    },

    /// Re-check every invariant of one or more artifacts
    Verify {
        /// Artifact files ("-" = stdin); stdin when empty
        files: Vec<PathBuf>,
        /// Parallel workers for batch verification (result order is input order)
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },

    /// Run an exact solver and emit value, certificate, and node count
    #[command(long_about = "Run an exact solver on a graph artifact.\n\nParameters:\n  \
        convex-antithickness  least thrackle-partition size over circular orderings\n  \
        book-thickness        least stack-partition size over circular orderings\n  \
        queue-number          least max-rainbow over linear orderings\n  \
        two-track-thickness   least noncrossing partition over two-track drawings (bipartite)\n  \
        arboricity            exact Nash-Williams maximization (--cap vertices)\n  \
        thickness-lower       density lower bound on thickness\n  \
        antithickness-bounds  density lower / arboricity upper bounds\n  \
        complete-antithickness bounds for K_n (--n instead of an input file)")]
    Solve {
        /// Parameter name (see --help for the list)
        parameter: String,
        /// Input graph file; "-" or absent reads stdin
        input: Option<PathBuf>,
        /// Node budget for branch-and-bound searches
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
        /// Vertex cap for the arboricity subset search
        #[arg(long, default_value_t = 16)]
        cap: usize,
        /// Size parameter for solvers that take no input file
        #[arg(long)]
        n: Option<usize>,
        /// Include wall-clock timings (breaks byte-reproducibility)
        #[arg(long)]
        timings: bool,
        /// Parallel workers for the ordering search
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },

    /// Regenerate the bound tables as one JSON document
    Report {
        /// Report name: bounds
        name: String,
        /// Largest n in the tables
        #[arg(long, default_value_t = 32)]
        nmax: usize,
        /// Largest n for the exact-oracle column (capped at 10)
        #[arg(long, default_value_t = 8)]
        oracle_nmax: usize,
        /// Parallel workers for table assembly (output independent of this)
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },

    /// Render an existing artifact file to SVG
    Export {
        /// Input artifact file; "-" or absent reads stdin
        input: Option<PathBuf>,
        /// Output SVG path
        #[arg(long)]
        svg: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Gen { family, n } => gen(&family, n),
        Command::Construct {
            name,
            input,
            n,
            t,
            k,
            s,
            tracks,
            colors,
            seed,
            svg,
        } => construct::run(construct::Request {
            name,
            input,
            n,
            t,
            k,
            s,
            tracks,
            colors,
            seed,
            svg,
        }),
        Command::Verify { files, jobs } => verify::run_batch(&files, jobs),
        Command::Solve {
            parameter,
            input,
            budget,
            cap,
            n,
            timings,
            jobs,
        } => solve::run(&parameter, input.as_deref(), budget, cap, n, timings, jobs),
        Command::Report {
            name,
            nmax,
            oracle_nmax,
            jobs,
        } => {
            if name != "bounds" {
                return Err(Failure::schema(format!(
                    "unknown report {name:?}; the only report is \"bounds\""
                )));
            }
            let doc = report::bounds(nmax, oracle_nmax, jobs)?;
            io_util::emit(&doc);
            Ok(())
        }
        Command::Export { input, svg } => {
            let value = io_util::read_value(input.as_deref())?;
            let rendered = render::render(&value)?;
            io_util::write_file(&svg, &rendered)?;
            Ok(())
        }
    }
}

fn gen(family: &str, n: Option<usize>) -> CliResult {
    let need_n =
        || n.ok_or_else(|| Failure::schema(format!("gen {family} requires --n <size>")));
    let g = match family {
        "complete" => complete_graph(need_n()?)?,
        "complete-subdivision" => complete_subdivision(need_n()?)?,
        "two-claw" => two_claw(),
        "nested-triangles" => nested_triangles(need_n()?)?,
        "singleton-tripleton" => singleton_tripleton_graph(need_n()?)?,
        _ => {
            return Err(Failure::schema(format!(
                "unknown graph family {family:?}; see `thrackles gen --help`"
            )))
        }
    };
    io_util::emit(&graph_to_value(&g));
    Ok(())
}

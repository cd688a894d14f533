//! `bruhat`: analyze permutations, export Bruhat graphs, compute minimal
//! avoidance bases, and run exhaustive verification suites.
//!
//! Exit codes: 0 success (and suite pass), 1 verification failure, 2 usage
//! or parse error, 3 resource cap exceeded.

mod doc;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bruhat::graph::BruhatGraph;
use bruhat::perm::{contains_pattern, embeddings, Permutation};
use bruhat::verify;
use bruhat::Error;

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

/// Warn before factorial-scale interval enumeration.
const SIZE_WARNING: usize = 12;

#[derive(Parser)]
#[command(
    name = "bruhat",
    version,
    about = "Bruhat graphs of permutations: statistics, graph export, avoidance bases, verification"
)]
struct Cli {
    /// Worker threads for verification suites (0 = all cores)
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Length statistics, cycle structure, and planarity for one permutation
    Analyze {
        /// One-line notation: digits ("3412") or comma-separated ("10,2,...")
        perm: String,
    },
    /// Serialize the Bruhat graph of a permutation
    Graph {
        perm: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Abort (exit 3) when the interval exceeds this many vertices
        #[arg(long, default_value_t = 10_000)]
        max_vertices: usize,
    },
    /// Minimal avoidance basis for a pattern-closed property
    Basis {
        /// "planar" or "max-length:<n>" (length below n)
        property: String,
        /// Search ceiling; defaults to 8 for planar and 2n for max-length:<n>
        #[arg(long)]
        ceiling: Option<usize>,
    },
    /// Run a verification suite; exit 0 on pass, 1 on counterexamples
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Alias for `verify counts`
    Count {
        #[arg(long, default_value_t = 8)]
        max_m: usize,
    },
    /// Print every embedding of a pattern in a target permutation
    Contains { pattern: String, target: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Suite {
    /// B(sigma) is planar iff sigma avoids 321 and has length at most 3
    PlanarChar {
        #[arg(long, default_value_t = 5)]
        max_m: usize,
    },
    /// Every planar B(sigma) is a hypercube of dimension length(sigma)
    CubeClass {
        #[arg(long, default_value_t = 5)]
        max_m: usize,
    },
    /// Length at least n iff containing a pattern of size at most 2n with
    /// length at least n
    LengthBasis {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        max_m: usize,
    },
    /// The permutation 2143... in S_2n has no shorter pattern of length n
    Sharpness {
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// The fixed-point, cycle, and disjoint-cycle deletion lemmas
    Lemmas {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        max_m: usize,
    },
    /// Closed-form counts of planar-Bruhat permutations by length
    Counts {
        #[arg(long, default_value_t = 8)]
        max_m: usize,
    },
    /// Rank-matrix Bruhat comparison against the transitive-closure oracle
    BruhatOracle {
        #[arg(long, default_value_t = 5)]
        max_m: usize,
    },
    /// Left-right planarity against the Kuratowski-subdivision oracle
    PlanarityOracle {
        /// Include Bruhat graphs of all permutations of this size
        #[arg(long, default_value_t = 4)]
        max_bruhat: usize,
    },
}

fn main() -> ExitCode {
    // die quietly on a closed pipe, like any line-printing tool
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if cli.threads > 0 {
        pool = pool.num_threads(cli.threads);
    }
    if let Err(e) = pool.build_global() {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    match cli.command {
        Command::Analyze { perm } => cmd_analyze(&perm),
        Command::Graph {
            perm,
            format,
            max_vertices,
        } => cmd_graph(&perm, format, max_vertices),
        Command::Basis { property, ceiling } => cmd_basis(&property, ceiling),
        Command::Verify { suite } => cmd_verify(suite),
        Command::Count { max_m } => cmd_verify(Suite::Counts { max_m }),
        Command::Contains { pattern, target } => cmd_contains(&pattern, &target),
    }
}

fn parse_or_usage(text: &str) -> Result<Permutation, ExitCode> {
    match Permutation::parse(text) {
        Ok(p) => {
            if p.size() > SIZE_WARNING {
                eprintln!(
                    "warning: size {} permutation; interval enumeration is factorial",
                    p.size()
                );
            }
            Ok(p)
        }
        Err(e) => {
            eprintln!("error: {e}");
            Err(ExitCode::from(EXIT_USAGE))
        }
    }
}

fn cmd_analyze(perm: &str) -> ExitCode {
    let sigma = match parse_or_usage(perm) {
        Ok(p) => p,
        Err(code) => return code,
    };
    println!("permutation: {sigma}");
    println!("size: {}", sigma.size());
    println!("length: {}", sigma.coxeter_length());
    println!("absolute length: {}", sigma.absolute_length());
    let cycles: String = sigma
        .cycles()
        .iter()
        .map(|c| {
            let parts: Vec<String> = c.iter().map(|i| i.to_string()).collect();
            format!("({})", parts.join(" "))
        })
        .collect();
    println!("cycles: {cycles}");
    let p321 = Permutation::parse("321").unwrap();
    println!("contains 321: {}", contains_pattern(&p321, &sigma));
    println!(
        "planar bruhat graph: {}",
        verify::planar_by_characterization(&sigma)
    );
    match BruhatGraph::build_capped(&sigma, 10_000) {
        Ok(g) => println!(
            "bruhat graph: {} vertices, {} edges",
            g.vertex_count(),
            g.edge_count()
        ),
        Err(_) => println!("bruhat graph: skipped (interval exceeds 10000 vertices)"),
    }
    ExitCode::SUCCESS
}

fn cmd_graph(perm: &str, format: Format, max_vertices: usize) -> ExitCode {
    let sigma = match parse_or_usage(perm) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let graph = match BruhatGraph::build_capped(&sigma, max_vertices) {
        Ok(g) => g,
        Err(e @ Error::IntervalCapExceeded { .. }) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_CAP);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match format {
        Format::Json => print!(
            "{}",
            doc::GraphDocument::from_graph(&sigma, &graph).to_json()
        ),
        Format::Dot => print!("{}", doc::render_dot(&sigma, &graph)),
    }
    ExitCode::SUCCESS
}

fn cmd_basis(property: &str, ceiling: Option<usize>) -> ExitCode {
    let report = if property == "planar" {
        verify::planar_basis(ceiling.unwrap_or(8))
    } else if let Some(bound) = property.strip_prefix("max-length:") {
        match bound.parse::<usize>() {
            Ok(n) if n >= 1 => verify::max_length_basis(n, ceiling.unwrap_or(2 * n)),
            _ => {
                eprintln!("error: bad bound in property {property:?}; need max-length:<n>, n >= 1");
                return ExitCode::from(EXIT_USAGE);
            }
        }
    } else {
        eprintln!(
            "error: unknown property {property:?}; expected \"planar\" or \"max-length:<n>\""
        );
        return ExitCode::from(EXIT_USAGE);
    };
    for p in &report.basis {
        println!("{p}");
    }
    ExitCode::SUCCESS
}

fn cmd_verify(suite: Suite) -> ExitCode {
    let report = match suite {
        Suite::PlanarChar { max_m } => verify::verify_planar_characterization(max_m),
        Suite::CubeClass { max_m } => verify::verify_cube_classification(max_m),
        Suite::LengthBasis { n, max_m } => verify::verify_length_basis(n, max_m),
        Suite::Sharpness { n } => {
            if n == 0 || n > 15 {
                eprintln!("error: sharpness needs 1 <= n <= 15");
                return ExitCode::from(EXIT_USAGE);
            }
            verify::verify_sharpness(n)
        }
        Suite::Lemmas { n, max_m } => verify::verify_lemmas(n, max_m),
        Suite::Counts { max_m } => verify::verify_counts(max_m),
        Suite::BruhatOracle { max_m } => verify::verify_bruhat_oracle(max_m),
        Suite::PlanarityOracle { max_bruhat } => verify::verify_planarity_oracle(max_bruhat),
    };
    println!("{report}");
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILED)
    }
}

fn cmd_contains(pattern: &str, target: &str) -> ExitCode {
    let (pattern, target) = match (parse_or_usage(pattern), parse_or_usage(target)) {
        (Ok(p), Ok(t)) => (p, t),
        (Err(code), _) | (_, Err(code)) => return code,
    };
    match embeddings(&pattern, &target) {
        Ok(hits) => {
            for e in &hits {
                println!("{e}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

//! Argument parsing and subcommand dispatch.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use monocycle_core::construct::{
    lower_bound_witness_search, MonoCycleVerdict, WitnessSearchMode, WitnessSearchOutcome,
};
use monocycle_core::engine::{
    even_engine, lemma4_execute, lemma4_inequality_check, pk_witness_search, Lemma4Outcome,
    Lemma4Verdict, Parity, PkParameters,
};
use monocycle_core::rational::{int, pairs, parse_rational};
use monocycle_core::search::{counterexample_minimize, EdgeOrder, RamseyProblem};
use monocycle_core::{
    bondy_erdos_coloring, fl_decompose, min_degree_peel, structural_certificate,
    verify_mono_cycle_free, EdgeColoring, Error, Rational,
};
use serde_json::{json, Value};

use crate::checkpoint::{order_name, Checkpoint};
use crate::format::{self, FormatError, Input};
use crate::parallel::{parallel_search, search_prefixes, ParallelConfig, ParallelVerdict};
use crate::report::{self, Report};

pub const EXIT_DEFINITE: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INDETERMINATE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

pub const THREADS_ENV: &str = "MONOCYCLE_THREADS";

fn rational_arg(text: &str) -> Result<Rational, String> {
    if text.contains('.') {
        return Err(format!("`{text}` is a decimal; write it as p/q"));
    }
    parse_rational(text).ok_or_else(|| format!("`{text}` is not a rational p/q"))
}

#[derive(Parser, Debug)]
#[command(
    name = "monocycle",
    version,
    about = "Monochromatic cycles in edge colorings"
)]
pub struct Cli {
    /// Print one JSON object per line instead of text
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum WitnessMode {
    Exhaustive,
    Local,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ParityArg {
    Odd,
    Even,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OrderArg {
    Lex,
    Vertex,
}

impl From<OrderArg> for EdgeOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Lex => EdgeOrder::Lexicographic,
            OrderArg::Vertex => EdgeOrder::VertexIncremental,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Emit the block coloring of K_{2^(k-1)(n-1)}, or search K_N for a C_n-free coloring
    Construct {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Search colorings of K_N instead of building the block coloring
        #[arg(long = "N")]
        vertices: Option<usize>,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: WitnessMode,
        /// Step limit for local search
        #[arg(long, default_value_t = 200_000)]
        steps: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a coloring for a monochromatic C_n
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        input: PathBuf,
    },
    /// Bipartite/sparse decomposition of every color class
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        input: PathBuf,
    },
    /// Remove minimum-degree vertices down to N vertices
    Peel {
        #[arg(long = "N")]
        target: usize,
        #[arg(long)]
        input: PathBuf,
        /// Also check e(result) >= (1-delta) binom(N,2)
        #[arg(long, value_parser = rational_arg)]
        delta: Option<Rational>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the odd (n odd) or even (n even) pigeonhole engine on a coloring
    Engine {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = rational_arg)]
        eps: Rational,
        #[arg(long)]
        input: PathBuf,
    },
    /// Exact check of the inequality chain for (k, eps, n)
    Ineq {
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = rational_arg)]
        eps: Rational,
        #[arg(long)]
        n: usize,
    },
    /// Decide whether every k-coloring of K_N has a monochromatic C_n
    Search {
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long = "N")]
        vertices: Option<usize>,
        #[arg(long, env = THREADS_ENV, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        budget: Option<u64>,
        /// Number of leading edges enumerated to form subtrees
        #[arg(long, default_value_t = 8)]
        split: usize,
        #[arg(long, value_enum, default_value = "lex")]
        order: OrderArg,
        /// Where to save open subtrees if the budget runs out
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Continue from a saved checkpoint
        #[arg(long)]
        resume: Option<PathBuf>,
        /// Shrink a counterexample before reporting it
        #[arg(long)]
        minimize: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Look for a monochromatic component with a large matching
    Witness {
        #[arg(long)]
        n: usize,
        /// Defaults to the parity of n
        #[arg(long, value_enum)]
        parity: Option<ParityArg>,
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::BudgetExceeded { .. }) => EXIT_INDETERMINATE,
            _ => EXIT_USAGE,
        }
    }
}

struct Session<'a> {
    json: bool,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Session<'_> {
    fn emit(&mut self, report: &Report) -> Result<(), CliError> {
        self.out
            .write_all(report.render(self.json).as_bytes())
            .map_err(|e| CliError::Io(e.to_string()))
    }

    fn note(&mut self, text: &str) {
        let _ = writeln!(self.err, "{text}");
    }
}

fn read_input(path: &Path) -> Result<Input, CliError> {
    let mut text = String::new();
    let shown = path.display().to_string();
    if shown == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{shown}: {e}")))?;
    }
    format::parse(&text).map_err(|source| CliError::Format {
        path: shown,
        source,
    })
}

fn read_coloring(path: &Path) -> Result<EdgeColoring, CliError> {
    match read_input(path)? {
        Input::Coloring(c) => Ok(c),
        Input::Graph(_) => Err(CliError::Usage(format!(
            "{}: expected a coloring file",
            path.display()
        ))),
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn triples(col: &EdgeColoring) -> Value {
    col.triples().map(|(u, v, c)| json!([u, v, c])).collect()
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_DEFINITE;
            }
            let text = e.to_string();
            let _ = writeln!(err, "{}", text.lines().next().unwrap_or("usage error"));
            return EXIT_USAGE;
        }
    };
    let mut session = Session {
        json: cli.json,
        out,
        err,
    };
    match dispatch(cli.command, &mut session) {
        Ok(code) => code,
        Err(e) => {
            session.note(&format!("error: {e}"));
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, s: &mut Session<'_>) -> Result<i32, CliError> {
    match command {
        Command::Construct {
            k,
            n,
            vertices,
            mode,
            steps,
            seed,
            budget,
            output,
        } => construct(s, k, n, vertices, mode, steps, seed, budget, output),
        Command::Verify { n, input } => verify(s, n, &input),
        Command::Decompose { n, input } => decompose(s, n, &input),
        Command::Peel {
            target,
            input,
            delta,
            output,
        } => peel(s, target, &input, delta, output),
        Command::Engine { n, eps, input } => engine(s, n, &eps, &input),
        Command::Ineq { k, eps, n } => {
            let r = lemma4_inequality_check(k, &eps, n)?;
            s.emit(&report::inequality(&r))?;
            Ok(if r.holds() {
                EXIT_DEFINITE
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Search {
            k,
            n,
            vertices,
            threads,
            budget,
            split,
            order,
            checkpoint,
            resume,
            minimize,
            output,
        } => search(
            s,
            SearchArgs {
                k,
                n,
                vertices,
                threads,
                budget,
                split,
                order: order.into(),
                checkpoint,
                resume,
                minimize,
                output,
            },
        ),
        Command::Witness { n, parity, input } => {
            let col = read_coloring(&input)?;
            let parity = match parity {
                Some(ParityArg::Odd) => Parity::Odd,
                Some(ParityArg::Even) => Parity::Even,
                None if n % 2 == 1 => Parity::Odd,
                None => Parity::Even,
            };
            if n < 3 {
                return Err(Error::CycleTooShort { length: n }.into());
            }
            match pk_witness_search(&col, n, parity) {
                Some(w) => {
                    s.emit(&report::witness(&w))?;
                    Ok(EXIT_DEFINITE)
                }
                None => {
                    s.emit(&Report::new("witness").field("kind", "NONE").field("n", n))?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn construct(
    s: &mut Session<'_>,
    k: usize,
    n: usize,
    vertices: Option<usize>,
    mode: WitnessMode,
    steps: u64,
    seed: u64,
    budget: Option<u64>,
    output: Option<PathBuf>,
) -> Result<i32, CliError> {
    let (col, source) = match vertices {
        None => (bondy_erdos_coloring(k, n)?, "block"),
        Some(v) => {
            let mode = match mode {
                WitnessMode::Exhaustive => WitnessSearchMode::Exhaustive {
                    node_budget: budget,
                },
                WitnessMode::Local => WitnessSearchMode::LocalSearch {
                    max_steps: steps,
                    seed,
                },
            };
            match lower_bound_witness_search(k, n, v, mode)? {
                WitnessSearchOutcome::Found(col) => (col, "search"),
                WitnessSearchOutcome::Exhausted { conclusive } => {
                    s.emit(
                        &Report::new("construct")
                            .field("k", k)
                            .field("n", n)
                            .field("N", v)
                            .field("found", false)
                            .field("conclusive", conclusive),
                    )?;
                    return Ok(if conclusive {
                        EXIT_NEGATIVE
                    } else {
                        EXIT_INDETERMINATE
                    });
                }
            }
        }
    };
    let text = format::write_coloring(&col);
    match output {
        Some(path) => {
            write_file(&path, &text)?;
            s.emit(
                &Report::new("construct")
                    .field("k", k)
                    .field("n", n)
                    .field("source", source)
                    .field("vertices", col.vertex_count())
                    .field("edges", col.base().edge_count())
                    .field("output", path.display().to_string()),
            )?;
        }
        None if s.json => s.emit(
            &Report::new("construct")
                .field("k", k)
                .field("n", n)
                .field("source", source)
                .field("vertices", col.vertex_count())
                .field("edges", col.base().edge_count())
                .field("coloring", triples(&col)),
        )?,
        None => s
            .out
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(e.to_string()))?,
    }
    Ok(EXIT_DEFINITE)
}

fn verify(s: &mut Session<'_>, n: usize, input: &Path) -> Result<i32, CliError> {
    let col = read_coloring(input)?;
    if n % 2 == 1 {
        s.emit(&report::structural(&structural_certificate(&col, n)?))?;
    }
    let verdict = verify_mono_cycle_free(&col, n)?;
    let mut r = Report::new("verify")
        .field("n", n)
        .field("vertices", col.vertex_count())
        .field("k", col.k());
    match verdict {
        MonoCycleVerdict::Free => {
            r.push("verdict", "FREE");
            s.emit(&r)?;
            Ok(EXIT_DEFINITE)
        }
        MonoCycleVerdict::Cycle { color, cycle } => {
            r.push("verdict", "MONO_CYCLE");
            r.push("color", color);
            r.push("cycle", json!(cycle.vertices));
            s.emit(&r)?;
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn decompose(s: &mut Session<'_>, n: usize, input: &Path) -> Result<i32, CliError> {
    match read_input(input)? {
        Input::Graph(g) => {
            let d = fl_decompose(&g, n)?;
            s.emit(&report::decomposition(None, &d))?;
        }
        Input::Coloring(col) => {
            for (i, class) in col.color_classes().iter().enumerate() {
                let d = fl_decompose(class, n)?;
                s.emit(&report::decomposition(Some(i + 1), &d))?;
            }
        }
    }
    Ok(EXIT_DEFINITE)
}

fn peel(
    s: &mut Session<'_>,
    target: usize,
    input: &Path,
    delta: Option<Rational>,
    output: Option<PathBuf>,
) -> Result<i32, CliError> {
    let parsed = read_input(input)?;
    let result = min_degree_peel(parsed.graph(), target)?;
    let mut r = report::peel(&result);
    let mut code = EXIT_DEFINITE;
    if let Some(delta) = delta {
        let v = parsed.graph().vertex_count();
        let keep = Rational::from_integer(1.into()) - &delta;
        let host_bound = &keep * pairs(v);
        let bound = &keep * pairs(target);
        let ok = int(result.graph.edge_count()) >= bound;
        r.push("host_dense", int(parsed.graph().edge_count()) >= host_bound);
        r.push("density_bound", report::rational(&bound));
        r.push("density_kept", ok);
        if !ok {
            code = EXIT_NEGATIVE;
        }
    }
    if let Some(path) = output {
        let text = match &parsed {
            Input::Graph(_) => format::write_graph(&result.graph),
            Input::Coloring(col) => format::write_coloring(&col.restrict(&result.kept)?.0),
        };
        write_file(&path, &text)?;
        r.push("output", path.display().to_string());
    }
    s.emit(&r)?;
    Ok(code)
}

fn engine(s: &mut Session<'_>, n: usize, eps: &Rational, input: &Path) -> Result<i32, CliError> {
    let col = read_coloring(input)?;
    if n.is_multiple_of(2) {
        let r = even_engine(&col, n, eps)?;
        s.emit(&report::even(&r))?;
        return Ok(match &r.witness {
            Some(w) => {
                s.emit(&report::witness(w))?;
                EXIT_DEFINITE
            }
            None => EXIT_NEGATIVE,
        });
    }
    let params = PkParameters::lemma4(col.k(), n, eps.clone())?;
    match lemma4_execute(&col, &params)? {
        Lemma4Outcome::Witness(w) => {
            s.emit(&report::witness(&w))?;
            Ok(EXIT_DEFINITE)
        }
        Lemma4Outcome::Trace(t) => {
            s.emit(&report::lemma4_trace(&t))?;
            Ok(match t.verdict {
                Lemma4Verdict::ContradictionEstablished => EXIT_DEFINITE,
                Lemma4Verdict::Fails(_) => EXIT_NEGATIVE,
            })
        }
    }
}

struct SearchArgs {
    k: Option<usize>,
    n: Option<usize>,
    vertices: Option<usize>,
    threads: usize,
    budget: Option<u64>,
    split: usize,
    order: EdgeOrder,
    checkpoint: Option<PathBuf>,
    resume: Option<PathBuf>,
    minimize: bool,
    output: Option<PathBuf>,
}

fn agree(flag: &str, given: Option<usize>, saved: usize) -> Result<usize, CliError> {
    match given {
        Some(v) if v != saved => Err(CliError::Usage(format!(
            "--{flag} {v} does not match the checkpoint ({saved})"
        ))),
        _ => Ok(saved),
    }
}

fn search(s: &mut Session<'_>, a: SearchArgs) -> Result<i32, CliError> {
    let missing = |flag: &str| CliError::Usage(format!("--{flag} is required"));
    let saved = match &a.resume {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            Some(Checkpoint::parse(&text).map_err(|e| CliError::Usage(e.to_string()))?)
        }
        None => None,
    };
    let (k, n, vertices, order) = match &saved {
        Some(cp) => (
            agree("k", a.k, cp.k)?,
            agree("n", a.n, cp.n)?,
            agree("N", a.vertices, cp.vertices)?,
            cp.order,
        ),
        None => (
            a.k.ok_or_else(|| missing("k"))?,
            a.n.ok_or_else(|| missing("n"))?,
            a.vertices.ok_or_else(|| missing("N"))?,
            a.order,
        ),
    };
    if a.threads == 0 {
        return Err(CliError::Usage("--threads must be at least 1".into()));
    }
    let problem = RamseyProblem::new(k, n, vertices, order)?;
    let config = ParallelConfig {
        threads: a.threads,
        node_budget: a.budget,
    };
    let outcome = match &saved {
        Some(cp) => search_prefixes(&problem, &cp.prefixes, &config)?,
        None => parallel_search(&problem, a.split, &config)?,
    };
    let mut r = Report::new("search")
        .field("k", k)
        .field("n", n)
        .field("N", vertices)
        .field("order", order_name(order))
        .field("threads", a.threads)
        .field("subtrees", outcome.subtrees);
    let code = match outcome.verdict {
        ParallelVerdict::AllContain => {
            r.push("verdict", "ALL_CONTAIN");
            EXIT_DEFINITE
        }
        ParallelVerdict::Counterexample(col) => {
            let col = if a.minimize {
                counterexample_minimize(&col, n)?
            } else {
                col
            };
            r.push("verdict", "COUNTEREXAMPLE");
            if let Some(path) = &a.output {
                write_file(path, &format::write_coloring(&col))?;
                r.push("output", path.display().to_string());
            }
            r.push("counterexample", triples(&col));
            EXIT_NEGATIVE
        }
        ParallelVerdict::Indeterminate { open } => {
            r.push("verdict", "INDETERMINATE");
            r.push("open_subtrees", open.len());
            if let Some(path) = &a.checkpoint {
                let cp = Checkpoint {
                    k,
                    n,
                    vertices,
                    order,
                    prefixes: open,
                };
                write_file(path, &cp.to_text())?;
                r.push("checkpoint", path.display().to_string());
            }
            EXIT_INDETERMINATE
        }
    };
    report::stats(&mut r, &outcome.stats);
    if s.json {
        r.push("wall_ms", outcome.wall.as_millis() as u64);
    } else {
        s.note(&format!("wall_time {:.3?}", outcome.wall));
    }
    s.emit(&r)?;
    Ok(code)
}

//! The `chordal-bvec` command line.
//!
//! Exit codes: 0 success, 2 bad input, 3 precondition violated (e.g. graph
//! not chordal or complete), 4 resource cap exceeded, 5 a verified claim
//! failed.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use chordal_bvec::betti::{self, BettiTable};
use chordal_bvec::claims::{self, VerifyOptions};
use chordal_bvec::cliques::Containment;
use chordal_bvec::complex::{self, SimplicialComplex};
use chordal_bvec::{cliques, corpus, families, graph, shifting, threshold, vectors};
use chordal_bvec::{BVector, Error, Graph, SdWord};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::formats::{self, FormatError};
use crate::json::{self, *};
use crate::parallel;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_CAP: i32 = 4;
pub const EXIT_CLAIM: i32 = 5;

/// Seed of the built-in verification corpus.
pub const DEFAULT_CORPUS_SEED: u64 = 20_240_601;
pub const DEFAULT_CORPUS_SIZE: usize = 500;
pub const DEFAULT_CORPUS_MAX_N: usize = 12;
/// Largest order accepted by `verify --random`.
pub const RANDOM_MAX_N: usize = 12;

#[derive(Debug, Parser)]
#[command(
    name = "chordal-bvec",
    version,
    about = "b-vectors, shifting and Betti numbers of chordal graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Clique vector, b-vector, connectivity and domination numbers.
    Invariants {
        /// Graph file; `-` or omitted reads stdin.
        path: Option<PathBuf>,
        /// Also report `d_i` with strict containment `C ⊊ C'`.
        #[arg(long)]
        strict_domination: bool,
    },
    /// Threshold graph of an SD-word, or the word of a b-vector.
    Word {
        word: Option<String>,
        /// Comma-separated b-vector, e.g. `1,4,3,2`.
        #[arg(long = "from-b", value_name = "LIST", conflicts_with = "word")]
        from_b: Option<String>,
    },
    /// Shift a chordal graph to a threshold graph with the same clique vector.
    Shift {
        path: Option<PathBuf>,
        /// Maximum clique `x_1,...,x_k` to shift into.
        #[arg(long, value_name = "LIST")]
        clique: Option<String>,
    },
    /// Graded Betti numbers of the clique complex (or of a complex file).
    Betti {
        path: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Method::Hochster)]
        method: Method,
        /// Largest vertex count for the Hochster enumeration.
        #[arg(long, default_value_t = betti::DEFAULT_HOCHSTER_CAP)]
        cap: usize,
        /// Read a complex file instead of a graph file.
        #[arg(long)]
        complex: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Check every claim on a graph file, a random corpus, or the default corpus.
    Verify {
        #[arg(long, conflicts_with = "random")]
        file: Option<PathBuf>,
        /// Maximum order, number of graphs, seed.
        #[arg(long, num_args = 3, value_names = ["N", "TRIALS", "SEED"])]
        random: Option<Vec<u64>>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Largest order for the Hochster Betti table in the Betti claims.
        #[arg(long, default_value_t = betti::DEFAULT_HOCHSTER_CAP)]
        betti_cap: usize,
        /// Print only the summary line.
        #[arg(long)]
        summary_only: bool,
    },
    /// Generate a random chordal graph file or a random SD-word.
    Gen {
        /// Order, attachment width, seed.
        #[arg(long, num_args = 3, value_names = ["N", "WIDTH", "SEED"], conflicts_with = "threshold")]
        chordal: Option<Vec<u64>>,
        /// Length, seed.
        #[arg(long, num_args = 2, value_names = ["LEN", "SEED"])]
        threshold: Option<Vec<u64>>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Hochster,
    Hvector,
    Bvector,
    Strand,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn precondition(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_PRECONDITION,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => EXIT_CAP,
            Error::NotChordal
            | Error::CompleteGraph
            | Error::TooFewVertices(_)
            | Error::NotMaximalClique
            | Error::NotMaximumClique
            | Error::SpecialPeoViolation(_) => EXIT_PRECONDITION,
            Error::ShiftVerification(_) => EXIT_CLAIM,
            _ => EXIT_INPUT,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::input(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

/// Parses `args` (including the program name) and runs the command.
pub fn run(args: Vec<OsString>, stdin: &mut dyn Read) -> Output {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Output {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let mut stdout = String::new();
    match dispatch(cli.command, stdin, &mut stdout) {
        Ok(code) => Output {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Output {
            code: e.code,
            stdout,
            stderr: format!("error: {}\n", e.message),
        },
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read, out: &mut String) -> CliResult<i32> {
    match command {
        Command::Invariants {
            path,
            strict_domination,
        } => {
            let g = read_graph(path.as_ref(), stdin)?;
            if g.n() == 0 {
                return Err(CliError::input("empty graph"));
            }
            let inv = claims::invariants(&g);
            let mut doc = InvariantsDoc::new(&g, &inv);
            if strict_domination {
                let maximal = cliques::maximal_cliques(&g);
                doc.d_i_strict = Some(
                    (1..=inv.d)
                        .map(|i| {
                            cliques::dominating_number_with(&maximal, i, Containment::Strict)
                                .ok()
                                .map(|dom| dom.size)
                        })
                        .collect(),
                );
            }
            emit(out, &doc);
            Ok(EXIT_OK)
        }
        Command::Word { word, from_b } => {
            let w = match (word, from_b) {
                (Some(w), None) => w.parse::<SdWord>()?,
                (None, Some(list)) => {
                    let entries = parse_list::<i64>(&list)?;
                    threshold::word_from_bvector(&BVector::from_i64(&entries))?
                }
                _ => return Err(CliError::input("give a word or --from-b")),
            };
            emit(out, &word_doc(&w));
            Ok(EXIT_OK)
        }
        Command::Shift { path, clique } => {
            let g = read_graph(path.as_ref(), stdin)?;
            let k = clique.map(|c| parse_list::<usize>(&c)).transpose()?;
            emit(out, &shift_doc(&g, k.as_deref())?);
            Ok(EXIT_OK)
        }
        Command::Betti {
            path,
            method,
            cap,
            complex,
            jobs,
        } => {
            let text = read_text(path.as_ref(), stdin)?;
            let doc = parallel::with_jobs(jobs, || -> CliResult<BettiDoc> {
                if complex {
                    let c = formats::parse_complex(&text)?;
                    betti_for_complex(&c, method, cap, jobs)
                } else {
                    let g = formats::parse_graph(&text)?;
                    betti_for_graph(&g, method, cap, jobs)
                }
            })?;
            emit(out, &doc);
            Ok(EXIT_OK)
        }
        Command::Verify {
            file,
            random,
            jobs,
            betti_cap,
            summary_only,
        } => {
            let instances = verify_instances(file.as_ref(), random.as_deref(), stdin)?;
            let opts = VerifyOptions {
                betti_cap,
                ..VerifyOptions::default()
            };
            let reports = parallel::with_jobs(jobs, || {
                instances
                    .par_iter()
                    .map(|(name, g)| {
                        let r = claims::verify_graph(g, &opts);
                        VerifyDoc::new(name.clone(), g, &r)
                    })
                    .collect::<Vec<_>>()
            });
            let summary = SummaryCounts {
                instances: reports.len(),
                passed: reports
                    .iter()
                    .filter(|r| r.passed && r.theorems_applicable)
                    .count(),
                failed: reports.iter().filter(|r| !r.passed).count(),
                skipped: reports.iter().filter(|r| !r.theorems_applicable).count(),
                claim_failures: reports
                    .iter()
                    .flat_map(|r| &r.claims)
                    .filter(|c| c.status == "fail")
                    .count(),
            };
            if !summary_only {
                for r in &reports {
                    emit_line(out, r);
                }
            }
            let failed = summary.failed > 0;
            emit_line(
                out,
                &VerifySummary {
                    schema_version: json::SCHEMA_VERSION,
                    summary,
                },
            );
            Ok(if failed { EXIT_CLAIM } else { EXIT_OK })
        }
        Command::Gen { chordal, threshold } => {
            match (chordal.as_deref(), threshold.as_deref()) {
                (Some(&[n, width, seed]), None) => {
                    if n == 0 || width == 0 {
                        return Err(CliError::input("order and width must be positive"));
                    }
                    let g = graph::random_chordal(n as usize, width as usize, seed);
                    out.push_str(&formats::write_graph(&g));
                }
                (None, Some(&[len, seed])) => {
                    if len == 0 {
                        return Err(CliError::input("word length must be positive"));
                    }
                    writeln!(out, "{}", corpus::random_word(len as usize, seed)).unwrap();
                }
                _ => {
                    return Err(CliError::input(
                        "give --chordal N WIDTH SEED or --threshold LEN SEED",
                    ))
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn emit<T: Serialize>(out: &mut String, doc: &T) {
    out.push_str(&serde_json::to_string_pretty(doc).expect("serializable"));
    out.push('\n');
}

fn emit_line<T: Serialize>(out: &mut String, doc: &T) {
    out.push_str(&serde_json::to_string(doc).expect("serializable"));
    out.push('\n');
}

fn read_text(path: Option<&PathBuf>, stdin: &mut dyn Read) -> CliResult<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| CliError::input(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| CliError::input(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn read_graph(path: Option<&PathBuf>, stdin: &mut dyn Read) -> CliResult<Graph> {
    Ok(formats::parse_graph(&read_text(path, stdin)?)?)
}

fn parse_list<T: std::str::FromStr>(list: &str) -> CliResult<Vec<T>> {
    list.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| CliError::input(format!("bad list entry {s:?}")))
        })
        .collect()
}

fn word_doc(w: &SdWord) -> WordDoc {
    let g = threshold::graph_from_word(w);
    let profile = threshold::threshold_profile(w).ok();
    WordDoc {
        schema_version: json::SCHEMA_VERSION,
        word: w.to_string(),
        n: g.n(),
        edges: g.edges(),
        b_vector: decimal(threshold::bvector_from_word(w).entries()),
        clique_vector: decimal(cliques::clique_vector(&g).entries()),
        kappa: if w.is_complete() {
            w.len() - 1
        } else {
            w.trailing_s_run()
        },
        profile_applicable: profile.is_some(),
        profile: profile.as_ref().map(ThresholdProfileDoc::from),
    }
}

fn shift_doc(g: &Graph, k: Option<&[usize]>) -> CliResult<ShiftDoc> {
    let shift = shifting::alpha_shift(g, k)?;
    let t = &shift.shifted_graph;
    let c = cliques::clique_vector(g);
    let b = vectors::b_from_c(&c);
    let checks = ShiftChecks {
        threshold: threshold::is_threshold(t),
        clique_vector_preserved: cliques::clique_vector(t) == c,
        kappa_preserved: graph::vertex_connectivity(t) == graph::vertex_connectivity(g),
        bijection: shifting::clique_bijection_check(g, &shift).passed(),
    };
    let d_i = DominationComparison {
        graph: cliques::dominating_numbers(g),
        shifted: cliques::dominating_numbers(t),
    };
    Ok(ShiftDoc::new(&shift, c.entries(), b.entries(), checks, d_i))
}

fn hochster(c: &SimplicialComplex, cap: usize, jobs: usize) -> CliResult<BettiTable> {
    Ok(if jobs > 1 {
        parallel::full_betti_hochster(c, cap)?
    } else {
        betti::full_betti_hochster(c, cap)?
    })
}

fn betti_doc(
    method: &str,
    table: &BettiTable,
    profile: bool,
    routes: Option<RoutesDoc>,
) -> BettiDoc {
    BettiDoc {
        schema_version: json::SCHEMA_VERSION,
        method: method.into(),
        table: table.into(),
        profile: profile.then(|| (&betti::homological_profile(table)).into()),
        routes,
    }
}

fn betti_for_complex(
    c: &SimplicialComplex,
    method: Method,
    cap: usize,
    jobs: usize,
) -> CliResult<BettiDoc> {
    match method {
        Method::Hochster | Method::All => {
            Ok(betti_doc("hochster", &hochster(c, cap, jobs)?, true, None))
        }
        _ => Err(CliError::input(
            "complex input supports --method hochster or all",
        )),
    }
}

fn strand_table(g: &Graph, jobs: usize) -> BettiTable {
    let strand = if jobs > 1 {
        parallel::linear_strand_hochster(g)
    } else {
        betti::linear_strand_hochster(g)
    };
    let values: Vec<BigInt> = strand.into_iter().map(BigInt::from).collect();
    BettiTable::from_linear_strand(g.n(), 2, &values).expect("nonnegative")
}

fn formula_tables(g: &Graph) -> CliResult<(BettiTable, BettiTable)> {
    if !graph::is_chordal(g) {
        return Err(CliError::precondition(
            "the closed formulas need a 2-linear resolution; graph is not chordal",
        ));
    }
    let c = cliques::clique_vector(g);
    let d = c.d();
    let h = vectors::h_from_f(&vectors::f_from_c(&c));
    let via_h = betti::betti_from_hvector(&h, g.n(), d, 2);
    let via_b = betti::betti_from_bvector(&vectors::b_from_c(&c), g.n(), d);
    let table = |v: &[BigInt]| {
        BettiTable::from_linear_strand(g.n(), 2, v)
            .ok_or_else(|| CliError::precondition("formula produced a negative Betti number"))
    };
    Ok((table(&via_h)?, table(&via_b)?))
}

fn betti_for_graph(g: &Graph, method: Method, cap: usize, jobs: usize) -> CliResult<BettiDoc> {
    if g.n() == 0 {
        return Err(CliError::input("empty graph"));
    }
    let cx = complex::clique_complex(g);
    match method {
        Method::Hochster => Ok(betti_doc(
            "hochster",
            &hochster(&cx, cap, jobs)?,
            true,
            None,
        )),
        Method::Hvector => Ok(betti_doc("hvector", &formula_tables(g)?.0, false, None)),
        Method::Bvector => Ok(betti_doc("bvector", &formula_tables(g)?.1, false, None)),
        Method::Strand => Ok(betti_doc("strand", &strand_table(g, jobs), false, None)),
        Method::All => {
            let (via_h, via_b) = formula_tables(g)?;
            let strand = strand_table(g, jobs);
            let full = match hochster(&cx, cap, jobs) {
                Ok(t) => Some(t),
                Err(e) if e.code == EXIT_CAP => None,
                Err(e) => return Err(e),
            };
            let agreement = Agreement {
                formulas: via_h == via_b,
                strand: strand == via_h,
                hochster: full.as_ref().map(|t| *t == via_h),
            };
            let main = full.clone().unwrap_or_else(|| via_h.clone());
            let routes = RoutesDoc {
                hochster: full.as_ref().map(BettiTableDoc::from),
                hvector: (&via_h).into(),
                bvector: (&via_b).into(),
                strand: (&strand).into(),
                agreement,
            };
            Ok(betti_doc("all", &main, true, Some(routes)))
        }
    }
}

type Instance = (String, Graph);

/// The default corpus: seeded random chordal graphs plus the
/// `best_possible(κ, κ̃)` family for `1 <= κ <= κ̃ <= 3`.
pub fn default_corpus() -> Vec<Instance> {
    let mut out = random_instances(
        DEFAULT_CORPUS_MAX_N,
        DEFAULT_CORPUS_SIZE,
        DEFAULT_CORPUS_SEED,
    );
    for kt in 1..=3 {
        for k in 1..=kt {
            out.push((
                format!("best_possible({k},{kt})"),
                families::best_possible(k, kt).graph,
            ));
        }
    }
    out
}

fn random_instances(max_n: usize, trials: usize, seed: u64) -> Vec<Instance> {
    corpus::chordal_corpus(trials, 2, max_n, seed)
        .into_iter()
        .map(|e| {
            (
                format!(
                    "random#{} (n={}, width={}, seed={})",
                    e.index, e.n, e.width, e.seed
                ),
                e.graph,
            )
        })
        .collect()
}

fn verify_instances(
    file: Option<&PathBuf>,
    random: Option<&[u64]>,
    stdin: &mut dyn Read,
) -> CliResult<Vec<Instance>> {
    match (file, random) {
        (Some(path), _) => {
            let g = read_graph(Some(path), stdin)?;
            Ok(vec![(path.display().to_string(), g)])
        }
        (None, Some(&[n, trials, seed])) => {
            let n = n as usize;
            if !(2..=RANDOM_MAX_N).contains(&n) {
                return Err(CliError::input(format!(
                    "random order must lie in 2..={RANDOM_MAX_N}"
                )));
            }
            Ok(random_instances(n, trials as usize, seed))
        }
        (None, Some(_)) => Err(CliError::input("--random takes N TRIALS SEED")),
        (None, None) => Ok(default_corpus()),
    }
}

//! Front end for the `reslat` binary: document I/O, command dispatch and
//! report rendering.

pub mod doc;
pub mod report;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use reslat::analysis::Analysis;
use reslat::classify::classify;
use reslat::enumerate::{
    enumerate_lattices, enumerate_residuated, mine, Expr, LatticeSkeleton, LatticeStrategy, SearchStats,
};
use reslat::verify::verify_suite;
use reslat::{Algebra, CoreError};

use doc::AlgebraDocument;
use report::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_INTERNAL: i32 = 70;

/// Environment variable read when `--jobs` is absent.
pub const JOBS_ENV: &str = "RESLAT_JOBS";

#[derive(Parser, Debug)]
#[command(
    name = "reslat",
    version,
    about = "Filters, spectra and class predicates of finite residuated lattices"
)]
pub struct Cli {
    /// Report rendering.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the axioms and list every violation.
    Validate { file: PathBuf },
    /// Order, distinguished subsets and negation.
    Info { file: PathBuf },
    /// All filters, one per line in canonical order.
    Filters { file: PathBuf },
    /// Prime, maximal and minimal prime filters and the two topologies.
    Spectrum { file: PathBuf },
    /// Coannulets, coannihilators and omega-filters.
    Coann { file: PathBuf },
    /// Alpha-filters and prime alpha-filters.
    Alpha { file: PathBuf },
    /// Class predicates with their routes, and the diagram maps.
    Classify { file: PathBuf },
    /// Run the theorem suite.
    Verify { file: PathBuf },
    /// Enumerate residuated lattices up to isomorphism.
    Search {
        /// Number of elements (2 to 7).
        #[arg(long)]
        size: Option<usize>,
        /// Only search on the lattice reduct of this algebra.
        #[arg(long)]
        lattice: Option<PathBuf>,
        /// Keep models satisfying this predicate expression.
        #[arg(long = "where")]
        predicate: Option<String>,
        /// Worker threads (default: available cores).
        #[arg(long, env = JOBS_ENV)]
        jobs: Option<usize>,
    },
}

/// What a command produced.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn out(stdout: String, code: i32) -> Outcome {
        Outcome {
            stdout,
            code,
            ..Outcome::default()
        }
    }

    fn err(stderr: String, code: i32) -> Outcome {
        Outcome {
            stderr,
            code,
            ..Outcome::default()
        }
    }
}

fn core_failure(e: CoreError) -> Outcome {
    let code = match e {
        CoreError::Precondition(_) => EXIT_USAGE,
        CoreError::Internal { .. } => EXIT_INTERNAL,
    };
    Outcome::err(format!("error: {e}\n"), code)
}

fn read_document(path: &Path) -> Result<AlgebraDocument, Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::err(format!("error: cannot read {}: {e}\n", path.display()), EXIT_USAGE))?;
    AlgebraDocument::parse(&text).map_err(|errs| {
        let lines: String = errs.0.iter().map(|e| format!("{}:{e}\n", path.display())).collect();
        Outcome::err(lines, EXIT_INVALID)
    })
}

fn load(path: &Path) -> Result<(AlgebraDocument, Algebra), Outcome> {
    let doc = read_document(path)?;
    let alg = doc.to_algebra().map_err(|e| {
        let mut s = format!("{}: {e}\n", path.display());
        for line in e.lines() {
            s.push_str(&format!("  {line}\n"));
        }
        Outcome::err(s, EXIT_INVALID)
    })?;
    Ok((doc, alg))
}

fn emit(r: &impl Render, format: Format) -> String {
    match format {
        Format::Text => r.text(),
        Format::Json => r.json(),
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli).unwrap_or_else(|o| o),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome::err(text, EXIT_USAGE)
            } else {
                Outcome::out(text, EXIT_OK)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, Outcome> {
    let f = cli.format;
    let analysed = |path: &Path| -> Result<(AlgebraDocument, Analysis), Outcome> {
        let (doc, alg) = load(path)?;
        Ok((doc, Analysis::compute(alg).map_err(core_failure)?))
    };
    let ok = |s: String| Ok(Outcome::out(s, EXIT_OK));
    match &cli.command {
        Command::Validate { file } => {
            let doc = read_document(file)?;
            let report = match doc.to_algebra() {
                Ok(alg) => ValidateReport {
                    valid: true,
                    size: alg.size(),
                    violations: Vec::new(),
                },
                Err(e) => ValidateReport {
                    valid: false,
                    size: doc.elements.len(),
                    violations: e.lines(),
                },
            };
            let code = if report.valid { EXIT_OK } else { EXIT_INVALID };
            Ok(Outcome::out(emit(&report, f), code))
        }
        Command::Info { file } => {
            let (doc, alg) = load(file)?;
            ok(emit(&InfoReport::new(&alg, doc.label), f))
        }
        Command::Filters { file } => ok(emit(&FiltersReport::new(&analysed(file)?.1), f)),
        Command::Spectrum { file } => {
            let an = analysed(file)?.1;
            ok(emit(&SpectrumReport::new(&an).map_err(core_failure)?, f))
        }
        Command::Coann { file } => ok(emit(&CoannReport::new(&analysed(file)?.1), f)),
        Command::Alpha { file } => {
            let an = analysed(file)?.1;
            ok(emit(&AlphaReport::new(&an).map_err(core_failure)?, f))
        }
        Command::Classify { file } => {
            let an = analysed(file)?.1;
            let report = ClassifyReport {
                predicates: classify(&an).map_err(core_failure)?,
                maps: an.diagram.reports(),
            };
            ok(emit(&report, f))
        }
        Command::Verify { file } => {
            let an = analysed(file)?.1;
            let report = VerifyReport::new(verify_suite(&an).map_err(core_failure)?);
            let code = if report.failed == 0 {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            };
            Ok(Outcome::out(emit(&report, f), code))
        }
        Command::Search {
            size,
            lattice,
            predicate,
            jobs,
        } => search(*size, lattice.as_deref(), predicate.as_deref(), *jobs, f),
    }
}

fn search(
    size: Option<usize>,
    lattice: Option<&Path>,
    predicate: Option<&str>,
    jobs: Option<usize>,
    format: Format,
) -> Result<Outcome, Outcome> {
    let usage = |m: String| Outcome::err(format!("error: {m}\n"), EXIT_USAGE);
    let jobs = match jobs {
        Some(0) => return Err(usage("--jobs must be at least 1".into())),
        Some(j) => j,
        None => std::thread::available_parallelism().map_or(1, usize::from),
    };
    let expr = predicate.map(Expr::parse).transpose().map_err(core_failure)?;
    let skeletons = match (size, lattice) {
        (_, Some(path)) => {
            let alg = load(path)?.1;
            if size.is_some_and(|n| n != alg.size()) {
                return Err(usage(format!(
                    "--size {} does not match the {}-element lattice in {}",
                    size.unwrap_or_default(),
                    alg.size(),
                    path.display()
                )));
            }
            vec![LatticeSkeleton::from_algebra(&alg)]
        }
        (Some(n), None) => enumerate_lattices(n, LatticeStrategy::OrderScan).map_err(core_failure)?,
        (None, None) => return Err(usage("search needs --size or --lattice".into())),
    };
    let n = skeletons[0].size();

    let mut stats = SearchStats::default();
    let mut lattices = Vec::new();
    let mut models = Vec::new();
    for (li, skel) in skeletons.iter().enumerate() {
        let result = enumerate_residuated(skel, jobs).map_err(core_failure)?;
        stats.candidates += result.stats.candidates;
        stats.pruned += result.stats.pruned;
        stats.found += result.stats.found;
        stats.emitted += result.stats.emitted;
        stats.isomorphic_rejected += result.stats.isomorphic_rejected;
        stats.wall_time += result.stats.wall_time;
        let label = |mi: usize| format!("size{n}-L{}-M{}", li + 1, mi + 1);
        let source = Some("search".to_string());
        let mut matched = 0;
        match &expr {
            None => {
                for (mi, alg) in result.models.iter().enumerate() {
                    models.push(SearchModel {
                        label: label(mi),
                        document: AlgebraDocument::from_algebra(alg, Some(label(mi)), source.clone()).render(),
                        classification: None,
                        theorem_failures: Vec::new(),
                    });
                }
            }
            Some(e) => {
                let hits = mine(e, &result.models).map_err(core_failure)?;
                for hit in hits {
                    let mi = result
                        .models
                        .iter()
                        .position(|m| *m == hit.algebra)
                        .expect("hit comes from the model list");
                    matched += 1;
                    models.push(SearchModel {
                        label: label(mi),
                        document: AlgebraDocument::from_algebra(&hit.algebra, Some(label(mi)), source.clone()).render(),
                        classification: Some(hit.classification),
                        theorem_failures: hit.failures.iter().map(|t| t.id.to_string()).collect(),
                    });
                }
            }
        }
        lattices.push(LatticeCount {
            lattice: li + 1,
            covers: skel.describe(),
            models: result.models.len(),
            matched,
        });
    }
    let wall = stats.wall_time;
    let report = SearchReport {
        size: n,
        predicate: predicate.map(str::to_string),
        lattices,
        models,
        stats,
    };
    Ok(Outcome {
        stdout: emit(&report, format),
        stderr: format!("search: {:.3}s wall, {jobs} worker(s)\n", wall.as_secs_f64()),
        code: EXIT_OK,
    })
}

use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::Path;

use hurwitz::cache::{export_memo, import_memo};
use hurwitz::oracles::{closed_form_g0, closed_form_g1, monodromy_count, MonodromyLimits, MonodromyProvider};
use hurwitz::rational::compact_string;
use hurwitz::series::{assemble_phi, check_pde, Bounds, XScaling};
use hurwitz::{partitions_of, simple_branch_count, BaseCaseProvider, Engine, Error, HurwitzKey, StrictProvider};

use crate::args::{
    CacheExportArgs, CacheImportArgs, ComputeArgs, EngineArgs, GridArgs, ProviderChoice, Suite, TableArgs, VerifyArgs,
};
use crate::output::{write_table, write_values, Cell};

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub enum Failure {
    /// Exit 1.
    Mismatch,
    /// Exit 2.
    Invalid(String),
    /// Exit 3.
    Unavailable(HurwitzKey),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Mismatch => 1,
            Failure::Invalid(_) => 2,
            Failure::Unavailable(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BaseCaseUnavailable(key) => Failure::Unavailable(key),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn limits(args: &EngineArgs) -> MonodromyLimits {
    MonodromyLimits { node_limit: args.monodromy_node_limit, max_degree: args.monodromy_max_degree }
}

fn threads(args: &EngineArgs) -> usize {
    match args.threads {
        0 => std::thread::available_parallelism().map_or(1, |n| n.get()),
        n => n,
    }
}

/// Builds the engine, prints the run header and loads the cache file.
fn open_engine(args: &EngineArgs, base_genus: u32) -> Result<Engine, Failure> {
    let provider: Box<dyn BaseCaseProvider> = match (args.provider, base_genus) {
        (None, h) if h > 0 => {
            return Err(Failure::Invalid(format!("base genus {h} needs an explicit --provider (strict or monodromy)")))
        }
        (None | Some(ProviderChoice::Strict), _) => Box::new(StrictProvider),
        (Some(ProviderChoice::Monodromy), _) => Box::new(MonodromyProvider::new(limits(args))),
    };
    eprintln!("provider: {}", provider.describe());
    let engine = Engine::new(provider);
    if let Some(path) = args.cache.as_deref().filter(|p| p.exists()) {
        let n = import_memo(engine.memo(), BufReader::new(File::open(path)?))?;
        eprintln!("cache: loaded {n} entries from {}", path.display());
    }
    Ok(engine)
}

fn save_cache(engine: &Engine, path: &Path) -> Outcome {
    let tmp = path.with_extension("tmp");
    let mut out = BufWriter::new(File::create(&tmp)?);
    let n = export_memo(engine.memo(), &mut out)?;
    out.into_inner().map_err(|e| e.into_error())?.sync_all()?;
    fs::rename(&tmp, path)?;
    eprintln!("cache: wrote {n} entries to {}", path.display());
    Ok(())
}

fn finish(engine: &Engine, args: &EngineArgs) -> Outcome {
    eprintln!("stats: expansions={} memo_hits={}", engine.memo().expansions(), engine.memo().hits());
    match &args.cache {
        Some(path) => save_cache(engine, path),
        None => Ok(()),
    }
}

fn evaluate(engine: &Engine, keys: Vec<HurwitzKey>, args: &EngineArgs) -> Result<Vec<Cell>, Failure> {
    let values = engine.batch(&keys, threads(args))?;
    Ok(keys.into_iter().zip(values).map(|(key, value)| Cell { key, value }).collect())
}

pub fn compute(args: &ComputeArgs) -> Outcome {
    let last = args.max_cover_genus.unwrap_or(args.cover_genus);
    if last < args.cover_genus {
        return Err(Failure::Invalid(format!("--max-cover-genus {last} is below --cover-genus {}", args.cover_genus)));
    }
    let engine = open_engine(&args.engine, args.base_genus)?;
    let keys = args
        .ramification
        .iter()
        .flat_map(|alpha| (args.cover_genus..=last).map(|g| HurwitzKey::new(args.base_genus, g, alpha.clone())))
        .collect();
    let cells = evaluate(&engine, keys, &args.engine)?;
    write_values(io::stdout().lock(), &cells, args.format)?;
    finish(&engine, &args.engine)
}

/// Keys of the grid: degrees ascending, partitions by decreasing largest
/// part, then genera ascending.
fn grid_keys(grid: &GridArgs) -> Result<(Vec<HurwitzKey>, Vec<u32>), Failure> {
    let mut degrees = grid.degrees.clone();
    if degrees.contains(&0) {
        return Err(Failure::Invalid("degrees must be positive".into()));
    }
    degrees.sort_unstable();
    degrees.dedup();
    let genera: Vec<u32> = (grid.cover_genus..=grid.max_cover_genus).collect();
    let keys = degrees
        .iter()
        .flat_map(|&k| partitions_of(k))
        .flat_map(|alpha| genera.iter().map(move |&g| HurwitzKey::new(grid.base_genus, g, alpha.clone())))
        .collect();
    Ok((keys, genera))
}

pub fn table(args: &TableArgs) -> Outcome {
    let (keys, genera) = grid_keys(&args.grid)?;
    let engine = open_engine(&args.engine, args.grid.base_genus)?;
    let cells = evaluate(&engine, keys, &args.engine)?;
    write_table(io::stdout().lock(), &cells, &genera, args.format)?;
    finish(&engine, &args.engine)
}

pub fn cache_export(args: &CacheExportArgs) -> Outcome {
    let (keys, _) = grid_keys(&args.grid)?;
    let engine = open_engine(&args.engine, args.grid.base_genus)?;
    engine.batch(&keys, threads(&args.engine))?;
    match args.output.as_deref().or(args.engine.cache.as_deref()) {
        Some(path) => save_cache(&engine, path),
        None => {
            export_memo(engine.memo(), io::stdout().lock())?;
            Ok(())
        }
    }
}

pub fn cache_import(args: &CacheImportArgs) -> Outcome {
    let engine = open_engine(&args.engine, 0)?;
    let n = import_memo(engine.memo(), BufReader::new(File::open(&args.input)?))?;
    eprintln!("cache: validated {n} entries from {}", args.input.display());
    match &args.engine.cache {
        Some(path) => save_cache(&engine, path),
        None => {
            eprintln!("cache: no --cache given, nothing written");
            Ok(())
        }
    }
}

/// Tally of a verification run.
#[derive(Default)]
struct Tally {
    passed: usize,
    failed: usize,
    skipped: usize,
}

impl Tally {
    fn record(&mut self, out: &mut impl Write, ok: bool, line: std::fmt::Arguments<'_>) -> io::Result<()> {
        if ok {
            self.passed += 1;
            writeln!(out, "PASS {line}")
        } else {
            self.failed += 1;
            writeln!(out, "FAIL {line}")
        }
    }

    fn finish(&self, out: &mut impl Write, suite: &str) -> Outcome {
        writeln!(out, "{suite}: {} passed, {} failed, {} skipped", self.passed, self.failed, self.skipped)?;
        if self.failed > 0 {
            Err(Failure::Mismatch)
        } else {
            Ok(())
        }
    }
}

pub fn verify(args: &VerifyArgs) -> Outcome {
    let engine = open_engine(&args.engine, args.base_genus)?;
    let out = &mut io::stdout().lock();
    let result = match args.suite {
        Suite::ClosedForm => verify_closed_form(&engine, args, out),
        Suite::Monodromy => verify_monodromy(&engine, args, out),
        Suite::Pde => verify_pde(&engine, args, out),
    };
    eprintln!("stats: expansions={} memo_hits={}", engine.memo().expansions(), engine.memo().hits());
    result
}

fn verify_closed_form(engine: &Engine, args: &VerifyArgs, out: &mut impl Write) -> Outcome {
    if args.base_genus != 0 {
        return Err(Failure::Invalid("the closed forms hold for base genus 0 only".into()));
    }
    let mut tally = Tally::default();
    for k in 1..=args.max_degree.unwrap_or(8) {
        for alpha in partitions_of(k) {
            for (g, expected) in [(0, closed_form_g0(&alpha)), (1, closed_form_g1(&alpha))] {
                let got = engine.mu(0, g, &alpha)?;
                let label = alpha.ascending_label();
                if got == expected {
                    tally.record(out, true, format_args!("g={g} {label} {}", compact_string(&got)))?;
                } else {
                    tally.record(
                        out,
                        false,
                        format_args!(
                            "g={g} {label} recursion={} closed-form={}",
                            compact_string(&got),
                            compact_string(&expected)
                        ),
                    )?;
                }
            }
        }
    }
    tally.finish(out, "closed-form")
}

fn verify_monodromy(engine: &Engine, args: &VerifyArgs, out: &mut impl Write) -> Outcome {
    let h = args.base_genus;
    let max_r = i64::from(args.max_u_degree.unwrap_or(8));
    let limits = limits(&args.engine);
    let mut tally = Tally::default();
    for k in 1..=args.max_degree.unwrap_or(4) {
        for alpha in partitions_of(k) {
            let label = alpha.ascending_label();
            for g in 0..=args.max_genus.unwrap_or(u32::MAX) {
                let r = simple_branch_count(h, g, k, alpha.num_parts());
                if r > max_r {
                    break;
                }
                if r < 0 {
                    continue;
                }
                let counted = match monodromy_count(h, g, &alpha, &limits) {
                    Ok(v) => v,
                    Err(e @ (Error::BoundExceeded { .. } | Error::DegreeTooLarge { .. })) => {
                        tally.skipped += 1;
                        writeln!(out, "SKIP h={h} g={g} {label} r={r}: {e}")?;
                        continue;
                    }
                    Err(e) => return Err(e.into()),
                };
                let got = engine.mu(h, g, &alpha)?;
                if got == counted {
                    tally.record(out, true, format_args!("h={h} g={g} {label} r={r} {}", compact_string(&got)))?;
                } else {
                    tally.record(
                        out,
                        false,
                        format_args!(
                            "h={h} g={g} {label} r={r} recursion={} enumeration={}",
                            compact_string(&got),
                            compact_string(&counted)
                        ),
                    )?;
                }
            }
        }
    }
    tally.finish(out, "monodromy")
}

fn verify_pde(engine: &Engine, args: &VerifyArgs, out: &mut impl Write) -> Outcome {
    let bounds =
        Bounds::new(args.max_degree.unwrap_or(4), args.max_genus.unwrap_or(2), args.max_u_degree.unwrap_or(10));
    if let Some(path) = &args.dump {
        let phi = assemble_phi(args.base_genus, bounds, engine, XScaling::Ordinary)?;
        fs::write(path, phi.dump())?;
    }
    let report = check_pde(args.base_genus, bounds, engine)?;
    let mut tally = Tally { passed: report.checked - report.violations.len(), ..Tally::default() };
    for v in &report.violations {
        tally.failed += 1;
        writeln!(out, "FAIL {} lhs={} rhs={}", v.monomial, compact_string(&v.lhs), compact_string(&v.rhs))?;
    }
    writeln!(
        out,
        "bounds: x^{} z^{} u^{}; {} monomials compared",
        bounds.max_x, bounds.max_z, bounds.max_u, report.checked
    )?;
    tally.finish(out, "pde")
}

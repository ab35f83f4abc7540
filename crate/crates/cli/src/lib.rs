//! `tfree` and `design` command-line tools.
//!
//! Exit codes: 0 success or property holds, 1 property fails, 2 usage error,
//! 3 search budget exhausted (lower bound only).

pub mod cache;

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use freeset::constructions::{closed_form, powers_construction, three_free_construct, Method};
use freeset::designs::{
    build_design, build_design_in_dimension, default_tolerance, dgs_bound, io, verify_index,
    verify_strength, GeneratorSet, VerificationReport,
};
use freeset::search::{bounds, exact_max, greedy_t_free, MaxResult, SearchBudget, Status};
use freeset::zn::{is_t_free, Certificate, CyclicContext, ResidueSet};
use freeset::Error;

use cache::{Cache, CacheRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

const SEARCH_METHOD: &str = "branch-and-bound";

/// Failure carrying the exit code it maps to.
#[derive(Debug)]
struct Exit(i32, String);

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        Exit(EXIT_USAGE, e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Exit {
    Exit(EXIT_USAGE, msg.into())
}

fn parse_list(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<i64>().map_err(|_| format!("not an integer: {p:?}")))
        .collect()
}

fn parse_positive_list(s: &str) -> Result<Vec<u64>, String> {
    s.split(',')
        .map(str::trim)
        .map(|p| p.parse::<u64>().map_err(|_| format!("not a positive integer: {p:?}")))
        .collect()
}

#[derive(Debug, Parser)]
#[command(name = "tfree", about = "t-free sets in the cyclic group Z_n")]
struct TfreeCli {
    #[command(subcommand)]
    command: TfreeCommand,
}

#[derive(Debug, Args, Clone)]
struct SearchArgs {
    /// Worker threads (default: FREESET_THREADS, else all cores)
    #[arg(long)]
    threads: Option<usize>,
    /// Wall-clock limit in seconds
    #[arg(long)]
    time_limit: Option<f64>,
    /// Limit on branch-and-bound nodes
    #[arg(long)]
    node_limit: Option<u64>,
    /// Only search sets whose smallest member divides n
    #[arg(long)]
    unit_canonical: bool,
}

#[derive(Debug, Subcommand)]
enum TfreeCommand {
    /// Decide whether a set is t-free, printing a witness if not
    Check {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: u32,
        /// Comma-separated residues
        #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
        set: ::std::vec::Vec<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Compute s(Z_n, t) exactly
    Smax {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: u32,
        #[command(flatten)]
        search: SearchArgs,
        /// Line-delimited JSON result cache
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Build an explicit t-free set
    Construct {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: u32,
        /// auto, powers, closed-form or three-free
        #[arg(long, default_value = "auto")]
        method: String,
        #[arg(long)]
        json: bool,
    },
    /// Build a t-free set of size m one element at a time
    Greedy {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        m: u64,
    },
    /// Lower and upper bounds on s(Z_n, t)
    Bounds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        json: bool,
    },
    /// Compute s(Z_n, t) for a range of n, writing cache records
    Table {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        n_min: u64,
        #[arg(long)]
        n_max: u64,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Output file (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Parser)]
#[command(name = "design", about = "Spherical designs from t-free generator sets")]
struct DesignCli {
    #[command(subcommand)]
    command: DesignCommand,
}

#[derive(Debug, Subcommand)]
enum DesignCommand {
    /// Write the point set generated by a_1..a_m as CSV
    Build {
        #[arg(long)]
        n: u64,
        /// Comma-separated generators a_1,...,a_m
        #[arg(long, value_parser = parse_positive_list)]
        gens: ::std::vec::Vec<u64>,
        /// Sphere dimension; must equal 2m - 1
        #[arg(long)]
        d: Option<usize>,
        /// Certify the generators as t-free for this t and report it
        #[arg(long)]
        strength: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that harmonic polynomials of degree <= t sum to zero
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        t: u32,
        /// Residual tolerance (default 1e-9 * n)
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Compare degree-k monomial means with sphere averages
    Index {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Minimum size of a t-design on S^d
    Dgs {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        d: u32,
    },
}

/// Runs the tool named by `argv[0]` (`tfree` or `design`). Any other program
/// name expects `tfree` or `design` as the first argument.
pub fn run(argv: &[String]) -> i32 {
    let program = argv
        .first()
        .and_then(|p| Path::new(p).file_stem())
        .and_then(|s| s.to_str())
        .unwrap_or("");
    let (tool, args): (&str, Vec<String>) = match program {
        "tfree" | "design" => (program, argv.to_vec()),
        _ => match argv.get(1).map(String::as_str) {
            Some(tool @ ("tfree" | "design")) => (tool, argv[1..].to_vec()),
            _ => {
                eprintln!("usage: {program} (tfree|design) <command> ...");
                return EXIT_USAGE;
            }
        },
    };
    let outcome = if tool == "tfree" {
        TfreeCli::try_parse_from(&args).map(|cli| run_tfree(cli.command))
    } else {
        DesignCli::try_parse_from(&args).map(|cli| run_design(cli.command))
    };
    match outcome {
        Ok(Ok(code)) => code,
        Ok(Err(Exit(code, msg))) => {
            eprintln!("{tool}: {msg}");
            code
        }
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            code
        }
    }
}

fn worker_count(flag: Option<usize>) -> Result<usize, Exit> {
    if let Some(w) = flag {
        return if w == 0 { Err(usage("--threads must be at least 1")) } else { Ok(w) };
    }
    if let Ok(v) = std::env::var("FREESET_THREADS") {
        return match v.trim().parse::<usize>() {
            Ok(w) if w > 0 => Ok(w),
            _ => Err(usage(format!("FREESET_THREADS must be a positive integer, got {v:?}"))),
        };
    }
    Ok(std::thread::available_parallelism().map_or(1, |p| p.get()))
}

fn budget(args: &SearchArgs) -> Result<SearchBudget, Exit> {
    let time_limit = match args.time_limit {
        Some(s) if !(s > 0.0) || !s.is_finite() => {
            return Err(usage("--time-limit must be a positive number of seconds"))
        }
        Some(s) => Some(Duration::from_secs_f64(s)),
        None => None,
    };
    Ok(SearchBudget {
        time_limit,
        node_limit: args.node_limit,
        workers: worker_count(args.threads)?,
        unit_canonical: args.unit_canonical,
    })
}

fn format_set(s: &ResidueSet) -> String {
    s.elements().iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("value serializes")
}

fn record_from(result: &MaxResult, upper: u64) -> CacheRecord {
    let exact = result.status == Status::Exact;
    CacheRecord {
        n: result.n,
        t: result.t,
        s_lower: result.size as u64,
        s_upper: if exact { result.size as u64 } else { upper },
        exact,
        witness: result.witness.elements().to_vec(),
        method: SEARCH_METHOD.into(),
        elapsed_ms: result.elapsed.as_millis() as u64,
    }
}

/// Serves `(n, t)` from the cache when an exact, verified record exists;
/// otherwise searches and stores the result.
fn solve_cached(
    n: u64,
    t: u32,
    budget: &SearchBudget,
    cache: &mut Option<Cache>,
) -> Result<CacheRecord, Exit> {
    if let Some(rec) = cache.as_ref().and_then(|c| c.get(n, t)).filter(|r| r.exact) {
        return Ok(rec.clone());
    }
    let upper = bounds(n, t)?.upper;
    let result = exact_max(n, t, budget)?;
    let rec = record_from(&result, upper);
    if let Some(c) = cache.as_mut() {
        c.insert(rec.clone());
    }
    Ok(rec)
}

fn open_cache(path: Option<&PathBuf>) -> Result<Option<Cache>, Exit> {
    let Some(path) = path else { return Ok(None) };
    let cache = Cache::load(path).map_err(|e| usage(format!("cannot read cache {}: {e}", path.display())))?;
    if cache.discarded > 0 {
        eprintln!("warning: discarded {} invalid cache record(s) from {}", cache.discarded, path.display());
    }
    Ok(Some(cache))
}

fn save_cache(cache: &Option<Cache>) -> Result<(), Exit> {
    if let Some(c) = cache {
        c.save().map_err(|e| usage(format!("cannot write cache: {e}")))?;
    }
    Ok(())
}

fn run_tfree(cmd: TfreeCommand) -> Result<i32, Exit> {
    match cmd {
        TfreeCommand::Check { n, t, set, json } => {
            let ctx = CyclicContext::new(n, t)?;
            let ingested = ResidueSet::from_integers(n, &set)?;
            if ingested.reduced {
                eprintln!("warning: residues outside [0, {n}) were reduced mod {n}");
            }
            if ingested.collapsed {
                eprintln!("warning: repeated residues were merged");
            }
            let cert = is_t_free(&ctx, &ingested.set)?;
            if json {
                println!("{}", to_json(&cert));
            } else {
                match &cert {
                    Certificate::TFree => println!("t-free"),
                    Certificate::Violation(w) => println!("not t-free: {w}"),
                }
            }
            Ok(if cert.is_t_free() { EXIT_OK } else { EXIT_FAILS })
        }
        TfreeCommand::Smax { n, t, search, cache, json } => {
            let budget = budget(&search)?;
            let mut cache = open_cache(cache.as_ref())?;
            let rec = solve_cached(n, t, &budget, &mut cache)?;
            save_cache(&cache)?;
            if json {
                println!("{}", rec.to_line());
            } else {
                let status = if rec.exact { "exact" } else { "lower bound only" };
                let witness = ResidueSet::new(n, rec.witness.iter().copied())?;
                println!("s(Z_{n},{t}) {} {} ({status})", if rec.exact { "=" } else { ">=" }, rec.s_lower);
                println!("witness: {}", format_set(&witness));
            }
            Ok(if rec.exact { EXIT_OK } else { EXIT_BUDGET })
        }
        TfreeCommand::Construct { n, t, method, json } => {
            let result = match (method.as_str(), t) {
                ("auto" | "closed-form", 1 | 2) => closed_form(n, t)?,
                ("auto" | "three-free", 3) => three_free_construct(n)?,
                ("auto" | "powers", _) => powers_construction(n, t)?,
                (m, _) => return Err(usage(format!("method {m} does not apply to t = {t}"))),
            };
            debug_assert!(is_t_free(&CyclicContext::new(n, t)?, &result.set)?.is_t_free());
            if json {
                println!("{}", to_json(&result));
            } else {
                println!("method: {}", result.method.tag());
                if let Some(case) = result.case {
                    println!("p = {} = 6*{} + 5", case.p, case.q);
                }
                println!("size: {}", result.guaranteed_size);
                println!("set: {}", format_set(&result.set));
            }
            Ok(EXIT_OK)
        }
        TfreeCommand::Greedy { n, t, m } => {
            let set = greedy_t_free(n, t, m)?;
            println!("method: {}", Method::Greedy.tag());
            println!("set: {}", format_set(&set));
            Ok(EXIT_OK)
        }
        TfreeCommand::Bounds { n, t, json } => {
            let report = bounds(n, t)?;
            if json {
                println!("{}", to_json(&report));
            } else {
                println!("{} <= s(Z_{n},{t}) <= {}", report.lower, report.upper);
                for e in &report.lower_bounds {
                    println!("  lower {:>8}  {:?}", e.value, e.source);
                }
                for e in &report.upper_bounds {
                    println!("  upper {:>8}  {:?}", e.value, e.source);
                }
                println!("{}", report.asymptotic_note);
            }
            Ok(EXIT_OK)
        }
        TfreeCommand::Table { t, n_min, n_max, search, cache, out } => {
            if n_min == 0 || n_min > n_max {
                return Err(usage("need 1 <= --n-min <= --n-max"));
            }
            let budget = budget(&search)?;
            let mut cache = open_cache(cache.as_ref())?;
            let start = Instant::now();
            let mut lines = String::new();
            let mut all_exact = true;
            for n in n_min..=n_max {
                let rec = solve_cached(n, t, &budget, &mut cache)?;
                all_exact &= rec.exact;
                lines.push_str(&rec.to_line());
                lines.push('\n');
            }
            save_cache(&cache)?;
            match out {
                Some(path) => fs::write(&path, lines)
                    .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?,
                None => print!("{lines}"),
            }
            eprintln!("table done in {:.2?}", start.elapsed());
            Ok(if all_exact { EXIT_OK } else { EXIT_BUDGET })
        }
    }
}

fn read_point_file(path: &Path) -> Result<io::PointFile, Exit> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(io::read_points(&text)?)
}

fn print_report(report: &VerificationReport, json: bool) {
    if json {
        println!("{}", to_json(report));
        return;
    }
    for r in &report.residuals {
        println!("{:>24.6e}  {}", r.value, r.label);
    }
    if let (Some(moments), Some(spread)) = (&report.second_moments, report.second_moment_spread) {
        let shown: Vec<String> = moments.iter().map(|m| format!("{m:.12}")).collect();
        println!("second moments: {} (spread {spread:.3e})", shown.join(" "));
    }
    println!(
        "{}: max residual {:.3e} (tolerance {:.3e})",
        if report.pass { "pass" } else { "FAIL" },
        report.max_residual,
        report.tolerance
    );
}

fn run_design(cmd: DesignCommand) -> Result<i32, Exit> {
    match cmd {
        DesignCommand::Build { n, gens, d, strength, out } => {
            let g = GeneratorSet::new(n, gens)?;
            let x = match d {
                Some(d) => build_design_in_dimension(d, &g)?,
                None => build_design(&g),
            };
            for w in &x.warnings {
                eprintln!("warning: {w}");
            }
            if let Some(t) = strength {
                let ctx = CyclicContext::new(n, t)?;
                match g.residues() {
                    None => eprintln!("warning: generators are not distinct mod {n}; no strength claim"),
                    Some(s) => match is_t_free(&ctx, &s)? {
                        Certificate::TFree => eprintln!("generators are {t}-free mod {n}"),
                        Certificate::Violation(w) => {
                            eprintln!("warning: generators are not {t}-free: {w}")
                        }
                    },
                }
            }
            let text = io::write_points(&x);
            match out {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            Ok(EXIT_OK)
        }
        DesignCommand::Verify { input, t, tol, json } => {
            let file = read_point_file(&input)?;
            let tol = tol.unwrap_or_else(|| default_tolerance(file.points.len()));
            let report = verify_strength(&file.points, t, tol)?;
            print_report(&report, json);
            Ok(if report.pass { EXIT_OK } else { EXIT_FAILS })
        }
        DesignCommand::Index { input, k, tol, json } => {
            let file = read_point_file(&input)?;
            let tol = tol.unwrap_or_else(|| default_tolerance(file.points.len()));
            let report = verify_index(&file.points, k, tol)?;
            print_report(&report, json);
            Ok(if report.pass { EXIT_OK } else { EXIT_FAILS })
        }
        DesignCommand::Dgs { t, d } => {
            println!("{}", dgs_bound(t, d)?);
            Ok(EXIT_OK)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_parsing() {
        assert_eq!(parse_list("1,3").unwrap(), vec![1, 3]);
        assert_eq!(parse_list(" -1, 4 ").unwrap(), vec![-1, 4]);
        assert_eq!(parse_list("").unwrap(), Vec::<i64>::new());
        assert!(parse_list("1,x").is_err());
        assert!(parse_positive_list("1,-3").is_err());
    }
}

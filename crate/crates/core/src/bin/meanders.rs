use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use meanders::analytic::{
    block_dist_gf, catalan, double_exp_law, expected_cluster_cycles, expected_ringlets_exact,
    expected_rings_exact, expected_staples_exact, p_arc, to_f64,
};
use meanders::cycles::{special_counts, summarize};
use meanders::enumerate::{
    exact_distribution, meander_number, superadditivity_check, Model, Statistic,
};
use meanders::harness::acceptance::{
    run_criterion, AcceptanceOptions, AcceptanceReport, CRITERIA, DEFAULT_SEED,
};
use meanders::harness::{
    run_experiment, write_results, Experiment, ExperimentConfig, Family, OutputFormat,
};
use meanders::{read_jsonl, serialize, Error, RngStream};

const EXIT_USAGE: u8 = 1;
const EXIT_VALIDATION: u8 = 2;
const EXIT_ACCEPTANCE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "meanders",
    version,
    about = "Random meander systems: sampling, exact laws and experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Draw random systems and print them as JSON lines.
    Sample {
        #[arg(long)]
        family: Family,
        /// Half-size; the block-size bound N for relaxed rainbows.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long, value_enum, default_value_t = SampleFormat::Jsonl)]
        format: SampleFormat,
    },
    /// Per-system cycle statistics for JSON-lines input.
    Stats {
        /// Input file; standard input when absent.
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Exact values of the analytic quantities.
    Exact {
        #[arg(long)]
        stat: ExactStat,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Exhaustive laws at small sizes, or meander numbers.
    Enumerate {
        #[arg(long, required_unless_present = "meander_numbers")]
        n: Option<usize>,
        #[arg(long, required_unless_present = "meander_numbers")]
        stat: Option<Statistic>,
        #[arg(long, value_enum, default_value_t = ModelArg::Uniform)]
        model: ModelArg,
        #[arg(long, conflicts_with_all = ["n", "stat"], requires = "max_k")]
        meander_numbers: bool,
        #[arg(long)]
        max_k: Option<usize>,
    },
    /// Monte Carlo experiment, written as CSV or JSON lines.
    Experiment {
        #[arg(long)]
        name: Experiment,
        #[arg(long, default_value = "uniform")]
        family: Family,
        #[arg(long, value_delimiter = ',', required = true)]
        n_list: Vec<usize>,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; 0 uses one per core.
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "csv")]
        format: OutputFormat,
    },
    /// Run the acceptance suite; exits with 3 if any criterion fails.
    Verify {
        #[arg(long)]
        quick: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Also write the full report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SampleFormat {
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Uniform,
    Comb,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExactStat {
    Ringlets,
    Rings,
    Staples,
    /// Expected cluster cycles of half-length `k`.
    Cluster,
    /// Probability that a given arc appears in a uniform pairing.
    Arc,
    /// P(largest comb-like block <= k).
    BlockLaw,
    /// Double-exponential approximation at offset `k` from floor(log2 n).
    DoubleExp,
    Catalan,
    MeanderNumber,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_validation() {
                EXIT_VALIDATION
            } else {
                EXIT_USAGE
            })
        }
    }
}

fn run(command: Command) -> Result<u8, Error> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match command {
        Command::Sample {
            family,
            n,
            seed,
            count,
            format: SampleFormat::Jsonl,
        } => {
            let sampler = family.sampler(n)?;
            for i in 0..count {
                let ms = sampler.sample(&mut RngStream::new(seed, i));
                writeln!(out, "{}", serialize(&ms))?;
            }
        }
        Command::Stats { input } => {
            let systems = match input {
                Some(path) => read_jsonl(BufReader::new(File::open(path)?))?,
                None => read_jsonl(io::stdin().lock())?,
            };
            for ms in &systems {
                let s = summarize(ms);
                let sp = special_counts(ms);
                let row = json!({
                    "n": s.n,
                    "cycles": s.cycles,
                    "largest_half_length": s.largest_half_length,
                    "ringlets": sp.ringlets,
                    "rings": sp.rings,
                    "staples": sp.staples,
                    "upper_staples": sp.upper_staples,
                    "lower_staples": sp.lower_staples,
                    "clusters": sp.cluster_by_halflength,
                });
                writeln!(out, "{row}")?;
            }
        }
        Command::Exact { stat, n, k } => {
            let need_k = || k.ok_or_else(|| Error::Range("this statistic needs --k".into()));
            if n == 0 {
                return Err(Error::Range("n must be at least 1".into()));
            }
            let (exact, value) = match stat {
                ExactStat::Ringlets => frac(expected_ringlets_exact(n)),
                ExactStat::Rings => frac(expected_rings_exact(n)),
                ExactStat::Staples => frac(expected_staples_exact(n)),
                ExactStat::Arc => frac(p_arc(n)),
                ExactStat::BlockLaw => frac(block_dist_gf(n, need_k()?)),
                ExactStat::Cluster => {
                    let k = need_k()?;
                    if k == 0 || k > n {
                        return Err(Error::Range(format!("k must lie in 1..={n}")));
                    }
                    (None, expected_cluster_cycles(n, k, meander_number(k)?))
                }
                ExactStat::DoubleExp => {
                    if n < 2 {
                        return Err(Error::Range("n must be at least 2".into()));
                    }
                    (None, double_exp_law(n, need_k()? as f64))
                }
                ExactStat::Catalan => {
                    let c = catalan(n);
                    (
                        Some(c.to_string()),
                        meanders::analytic::ln_biguint(&c).exp(),
                    )
                }
                ExactStat::MeanderNumber => {
                    let r = meander_number(n)?;
                    (Some(r.to_string()), r as f64)
                }
            };
            let name = stat.to_possible_value().expect("no skipped variants");
            writeln!(
                out,
                "{}",
                json!({"stat": name.get_name(), "n": n, "k": k, "exact": exact, "value": value})
            )?;
        }
        Command::Enumerate {
            n,
            stat,
            model,
            meander_numbers,
            max_k,
        } => {
            if meander_numbers {
                let report = superadditivity_check(max_k.expect("clap requires max_k"))?;
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&report).expect("report serializes")
                )?;
            } else {
                let model = match model {
                    ModelArg::Uniform => Model::Uniform,
                    ModelArg::Comb => Model::Comb,
                };
                let n = n.expect("clap requires n");
                let d = exact_distribution(n, stat.expect("clap requires stat"), model)?;
                let row = json!({
                    "n": d.n,
                    "statistic": d.statistic,
                    "model": d.model,
                    "total": d.total,
                    "counts": d.counts,
                    "mean": d.mean().to_string(),
                    "mean_value": to_f64(&d.mean()),
                });
                writeln!(out, "{row}")?;
            }
        }
        Command::Experiment {
            name,
            family,
            n_list,
            samples,
            seed,
            threads,
            out: path,
            format,
        } => {
            let mut cfg = ExperimentConfig::new(name, family, n_list, samples, seed);
            cfg.threads = threads;
            cfg.format = format;
            cfg.output = path;
            let rows = run_experiment(&cfg)?;
            match &cfg.output {
                Some(path) => write_results(BufWriter::new(File::create(path)?), &rows, format)?,
                None => write_results(&mut out, &rows, format)?,
            }
        }
        Command::Verify {
            quick,
            seed,
            threads,
            json,
            only,
        } => {
            let opts = AcceptanceOptions {
                seed,
                threads,
                quick,
            };
            let mut report = run_criteria(&opts, &only, &mut out)?;
            report.criteria.sort_by_key(|c| c.id);
            if let Some(path) = json {
                std::fs::write(path, report.to_json())?;
            }
            let passed = report.criteria.iter().filter(|c| c.passed).count();
            writeln!(out, "{passed}/{} criteria passed", report.criteria.len())?;
            out.flush()?;
            return Ok(if report.all_passed() {
                0
            } else {
                EXIT_ACCEPTANCE
            });
        }
    }
    out.flush()?;
    Ok(0)
}

/// Runs the requested criteria, printing each line as soon as it is known.
fn run_criteria(
    opts: &AcceptanceOptions,
    only: &[u8],
    out: &mut impl Write,
) -> Result<AcceptanceReport, Error> {
    let ids: Vec<u8> = if only.is_empty() {
        CRITERIA.iter().map(|c| c.0).collect()
    } else {
        only.to_vec()
    };
    let mut criteria = Vec::new();
    for id in ids {
        let r = run_criterion(id, opts);
        writeln!(out, "{}", r.line())?;
        out.flush()?;
        criteria.push(r);
    }
    Ok(AcceptanceReport {
        seed: opts.seed,
        quick: opts.quick,
        criteria,
    })
}

fn frac(r: num_rational::BigRational) -> (Option<String>, f64) {
    (Some(r.to_string()), to_f64(&r))
}

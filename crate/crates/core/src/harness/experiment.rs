use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use super::family::{Family, FamilySampler};
use num_integer::Integer;
use rand::Rng;

use super::parallel::{replicate_fold, replicate_fold_indexed, replicate_map};
use super::stats::Moments;
use crate::analytic::{
    expected_cluster_cycles, expected_ringlets, expected_rings, expected_staples,
};
use crate::cycles::{count_cycles, largest_cycle, spacings, special_counts, summarize};
use crate::enumerate::meander_number;
use crate::error::{Error, Result};
use crate::samplers::sample_relaxed_rainbow_spec;

/// Registered experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Experiment {
    Ringlets,
    Rings,
    Staples,
    CycleCount,
    LargestCycle,
    Spectrum,
    Clusters,
    GcdLaw,
    Spacings,
}

impl Experiment {
    pub const ALL: [Experiment; 9] = [
        Experiment::Ringlets,
        Experiment::Rings,
        Experiment::Staples,
        Experiment::CycleCount,
        Experiment::LargestCycle,
        Experiment::Spectrum,
        Experiment::Clusters,
        Experiment::GcdLaw,
        Experiment::Spacings,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Experiment::Ringlets => "ringlets",
            Experiment::Rings => "rings",
            Experiment::Staples => "staples",
            Experiment::CycleCount => "cycle_count",
            Experiment::LargestCycle => "largest_cycle",
            Experiment::Spectrum => "spectrum",
            Experiment::Clusters => "clusters",
            Experiment::GcdLaw => "gcd_law",
            Experiment::Spacings => "spacings",
        }
    }
}

impl fmt::Display for Experiment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Experiment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Experiment::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::UnknownExperiment(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Jsonl,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "jsonl" => Ok(OutputFormat::Jsonl),
            other => Err(Error::Range(format!("unknown format `{other}`"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub experiment: Experiment,
    pub family: Family,
    pub n_values: Vec<usize>,
    pub samples: u64,
    pub seed: u64,
    /// Worker threads; `0` uses one per core. Output does not depend on it.
    pub threads: usize,
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
}

impl ExperimentConfig {
    pub fn new(
        experiment: Experiment,
        family: Family,
        n_values: Vec<usize>,
        samples: u64,
        seed: u64,
    ) -> Self {
        ExperimentConfig {
            experiment,
            family,
            n_values,
            samples,
            seed,
            threads: 0,
            output: None,
            format: OutputFormat::Csv,
        }
    }
}

/// One estimator row.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentResult {
    pub experiment: String,
    pub family: String,
    pub n: usize,
    pub samples: u64,
    pub seed: u64,
    pub statistic: String,
    pub mean: f64,
    pub stderr: f64,
    pub extra: Value,
}

pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<ExperimentResult>> {
    if cfg.samples == 0 {
        return Err(Error::Range("samples must be at least 1".into()));
    }
    if cfg.n_values.is_empty() {
        return Err(Error::Range("no n values given".into()));
    }
    let mut rows = Vec::new();
    for &n in &cfg.n_values {
        let row = |statistic: String, mean: f64, stderr: f64, extra: Value| ExperimentResult {
            experiment: cfg.experiment.name().to_string(),
            family: cfg.family.to_string(),
            n,
            samples: cfg.samples,
            seed: cfg.seed,
            statistic,
            mean,
            stderr,
            extra,
        };
        if cfg.experiment == Experiment::GcdLaw {
            let g = gcd_law(&cfg.family, n as u64, cfg.samples, cfg.seed, cfg.threads)?;
            rows.push(row(
                "p_c1".into(),
                g.p1(),
                g.p_stderr(g.ones),
                json!({"leading": 6.0 / (std::f64::consts::PI.powi(2))}),
            ));
            rows.push(row("p_c2".into(), g.p2(), g.p_stderr(g.twos), json!({})));
            rows.push(row("mean".into(), g.mean(), g.mean_stderr(), json!({})));
            rows.push(row(
                "second_moment".into(),
                g.second_moment(),
                g.second_moment_stderr(),
                json!({}),
            ));
            continue;
        }
        let sampler = cfg.family.sampler(n)?;
        let uniform = cfg.family == Family::Uniform;
        let (seed, samples, threads) = (cfg.seed, cfg.samples, cfg.threads);
        match cfg.experiment {
            Experiment::Ringlets | Experiment::Rings | Experiment::Staples => {
                let pick = cfg.experiment;
                let m = moments_of(&sampler, seed, samples, threads, move |ms| {
                    let s = special_counts(ms);
                    (match pick {
                        Experiment::Ringlets => s.ringlets,
                        Experiment::Rings => s.rings,
                        _ => s.staples,
                    }) as f64
                });
                let extra = if uniform {
                    let exact = match pick {
                        Experiment::Ringlets => expected_ringlets(n),
                        Experiment::Rings => expected_rings(n),
                        _ => expected_staples(n),
                    };
                    json!({"exact": exact})
                } else {
                    json!({})
                };
                rows.push(row(pick.name().into(), m.mean(), m.stderr(), extra));
            }
            Experiment::CycleCount => {
                let m = moments_of(&sampler, seed, samples, threads, |ms| {
                    count_cycles(ms) as f64
                });
                let nf = n as f64;
                rows.push(row(
                    "cycle_count".into(),
                    m.mean(),
                    m.stderr(),
                    json!({
                        "std": m.std(),
                        "skewness": m.skewness(),
                        "mean_over_n": m.mean() / nf,
                        "std_over_sqrt_n": m.std() / nf.sqrt(),
                    }),
                ));
            }
            Experiment::LargestCycle => {
                let values = replicate_map(seed, samples, threads, |rng| {
                    summarize(&sampler.sample(rng)).largest_half_length as f64
                });
                let m = Moments::from_slice(&values);
                let scale = (n as f64).powf(0.8);
                let normalized: Vec<f64> = values.iter().map(|v| v / scale).collect();
                rows.push(row(
                    "largest_half_length".into(),
                    m.mean(),
                    m.stderr(),
                    json!({
                        "std": m.std(),
                        "skewness": m.skewness(),
                        "normalized_by": "n^0.8",
                        "histogram": histogram_50(&normalized),
                    }),
                ));
            }
            Experiment::Spectrum => {
                for p in spectrum_from(&sampler, n, seed, samples, threads) {
                    rows.push(row(
                        format!("halflength_{}", p.k),
                        p.mean,
                        p.stderr,
                        json!({"k": p.k, "normalized": p.normalized}),
                    ));
                }
            }
            Experiment::Clusters => {
                let kmax = n.min(4);
                let sums = replicate_fold(
                    seed,
                    samples,
                    threads,
                    || vec![Moments::default(); kmax],
                    |acc: &mut Vec<Moments>, rng| {
                        let s = special_counts(&sampler.sample(rng));
                        for (k, m) in acc.iter_mut().enumerate() {
                            m.push(*s.cluster_by_halflength.get(&(k + 1)).unwrap_or(&0) as f64);
                        }
                    },
                    |a, b| a.iter_mut().zip(&b).for_each(|(x, y)| x.merge(y)),
                );
                for (k, m) in sums.iter().enumerate() {
                    let k = k + 1;
                    let extra = if uniform {
                        let r = meander_number(k)?;
                        json!({"k": k, "shapes": r, "exact": expected_cluster_cycles(n, k, r)})
                    } else {
                        json!({"k": k})
                    };
                    rows.push(row(format!("cluster_{k}"), m.mean(), m.stderr(), extra));
                }
            }
            Experiment::Spacings => {
                let hist = spacing_histogram(&sampler, seed, samples, threads);
                let total: u64 = hist.values().sum();
                for gap in 1..=3u64 {
                    let c = *hist.get(&gap).unwrap_or(&0);
                    let p = c as f64 / total as f64;
                    rows.push(row(
                        format!("fraction_{gap}"),
                        p,
                        (p * (1.0 - p) / total as f64).sqrt(),
                        if gap == 1 {
                            json!({"histogram": hist, "spacings": total})
                        } else {
                            json!({})
                        },
                    ));
                }
            }
            Experiment::GcdLaw => unreachable!("handled above"),
        }
    }
    Ok(rows)
}

fn moments_of(
    sampler: &FamilySampler,
    seed: u64,
    samples: u64,
    threads: usize,
    stat: impl Fn(&crate::model::MeanderSystem) -> f64 + Sync + Send,
) -> Moments {
    replicate_fold(
        seed,
        samples,
        threads,
        Moments::default,
        |m, rng| m.push(stat(&sampler.sample(rng))),
        |a, b| a.merge(&b),
    )
}

/// 50 equal bins on `[0, max]`.
fn histogram_50(values: &[f64]) -> Value {
    let hi = values.iter().copied().fold(0.0, f64::max);
    let mut counts = vec![0u64; 50];
    for &v in values {
        let b = if hi > 0.0 {
            ((v / hi) * 50.0) as usize
        } else {
            0
        };
        counts[b.min(49)] += 1;
    }
    json!({"lo": 0.0, "hi": hi, "counts": counts})
}

/// Gap sizes between consecutive support points of the largest cycle of
/// each sample.
pub fn spacing_histogram(
    sampler: &FamilySampler,
    seed: u64,
    samples: u64,
    threads: usize,
) -> BTreeMap<u64, u64> {
    replicate_fold(
        seed,
        samples,
        threads,
        BTreeMap::new,
        |h: &mut BTreeMap<u64, u64>, rng| {
            for g in spacings(&largest_cycle(&sampler.sample(rng))) {
                *h.entry(g as u64).or_insert(0) += 1;
            }
        },
        |a, b| {
            for (g, c) in b {
                *a.entry(g).or_insert(0) += c;
            }
        },
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumPoint {
    pub k: usize,
    pub mean: f64,
    pub stderr: f64,
    /// `8 mean / n`.
    pub normalized: f64,
}

/// Mean number of cycles of each half-length `k` in uniform systems,
/// listed for every `k` observed at least once.
pub fn spectrum_experiment(
    n: usize,
    samples: u64,
    seed: u64,
    threads: usize,
) -> Result<Vec<SpectrumPoint>> {
    let sampler = Family::Uniform.sampler(n)?;
    Ok(spectrum_from(&sampler, n, seed, samples, threads))
}

fn spectrum_from(
    sampler: &FamilySampler,
    n: usize,
    seed: u64,
    samples: u64,
    threads: usize,
) -> Vec<SpectrumPoint> {
    // exact integer sums keep the reduction order-free
    let (sum, sq) = replicate_fold(
        seed,
        samples,
        threads,
        || (vec![0u64; n + 1], vec![0u64; n + 1]),
        |(s, q): &mut (Vec<u64>, Vec<u64>), rng| {
            let h = summarize(&sampler.sample(rng)).histogram;
            for (k, &c) in h.iter().enumerate() {
                if c > 0 {
                    s[k] += c as u64;
                    q[k] += (c as u64) * (c as u64);
                }
            }
        },
        |(s, q), (s2, q2)| {
            s.iter_mut().zip(s2).for_each(|(a, b)| *a += b);
            q.iter_mut().zip(q2).for_each(|(a, b)| *a += b);
        },
    );
    let m = samples as f64;
    (1..=n)
        .filter(|&k| sum[k] > 0)
        .map(|k| {
            let mean = sum[k] as f64 / m;
            let var = if samples > 1 {
                ((sq[k] as f64 - m * mean * mean) / (m - 1.0)).max(0.0)
            } else {
                0.0
            };
            SpectrumPoint {
                k,
                mean,
                stderr: (var / m).sqrt(),
                normalized: 8.0 * mean / n as f64,
            }
        })
        .collect()
}

/// Integer tallies of rainbow cycle counts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GcdTally {
    pub samples: u64,
    pub ones: u64,
    pub twos: u64,
    pub sum: u128,
    pub sum_sq: u128,
    pub sum_4: u128,
}

impl GcdTally {
    pub fn push(&mut self, c: u64) {
        let c2 = (c as u128) * (c as u128);
        self.samples += 1;
        self.ones += (c == 1) as u64;
        self.twos += (c == 2) as u64;
        self.sum += c as u128;
        self.sum_sq += c2;
        self.sum_4 += c2 * c2;
    }

    pub fn merge(&mut self, o: &GcdTally) {
        self.samples += o.samples;
        self.ones += o.ones;
        self.twos += o.twos;
        self.sum += o.sum;
        self.sum_sq += o.sum_sq;
        self.sum_4 += o.sum_4;
    }

    fn m(&self) -> f64 {
        self.samples as f64
    }

    pub fn p1(&self) -> f64 {
        self.ones as f64 / self.m()
    }

    pub fn p2(&self) -> f64 {
        self.twos as f64 / self.m()
    }

    pub fn p_stderr(&self, hits: u64) -> f64 {
        let p = hits as f64 / self.m();
        (p * (1.0 - p) / self.m()).sqrt()
    }

    pub fn mean(&self) -> f64 {
        self.sum as f64 / self.m()
    }

    pub fn mean_stderr(&self) -> f64 {
        let var = self.sum_sq as f64 / self.m() - self.mean().powi(2);
        (var.max(0.0) / self.m()).sqrt()
    }

    pub fn second_moment(&self) -> f64 {
        self.sum_sq as f64 / self.m()
    }

    pub fn second_moment_stderr(&self) -> f64 {
        let var = self.sum_4 as f64 / self.m() - self.second_moment().powi(2);
        (var.max(0.0) / self.m()).sqrt()
    }
}

/// Instances drawn from one replicate stream by [`gcd_law`].
pub const GCD_BATCH: u64 = 1024;

/// Cycle counts of relaxed rainbow systems with `s` blocks of sizes uniform
/// in `1..=max`.
///
/// Replicate `i` is the batch of up to [`GCD_BATCH`] instances drawn from
/// `RngStream(seed, i)`. Types with a closed formula are counted by it;
/// larger types build the system and trace it.
pub fn gcd_law(
    family: &Family,
    max: u64,
    samples: u64,
    seed: u64,
    threads: usize,
) -> Result<GcdTally> {
    let s = match family {
        Family::RelaxedRainbow { s } if *s >= 2 => *s,
        other => {
            return Err(Error::UnknownFamily(format!(
                "gcd_law needs relaxed_rainbow(s), got {other}"
            )))
        }
    };
    if max == 0 {
        return Err(Error::Range("N must be at least 1".into()));
    }
    let batches = samples.div_ceil(GCD_BATCH);
    Ok(replicate_fold_indexed(
        seed,
        batches,
        threads,
        GcdTally::default,
        |t: &mut GcdTally, b, rng| {
            let size = GCD_BATCH.min(samples - b * GCD_BATCH);
            let mut alpha = [0u64; 3];
            for _ in 0..size {
                let c = match s {
                    2 | 3 => {
                        for a in alpha.iter_mut().take(s) {
                            *a = rng.random_range(1..=max);
                        }
                        if s == 2 {
                            alpha[0].gcd(&alpha[1])
                        } else {
                            (alpha[0] + alpha[1]).gcd(&(alpha[1] + alpha[2]))
                        }
                    }
                    _ => {
                        let spec =
                            sample_relaxed_rainbow_spec(s, max, rng).expect("validated type");
                        count_cycles(&crate::samplers::rainbow_meander(&spec)) as u64
                    }
                };
                t.push(c);
            }
        },
        |a, b| a.merge(&b),
    ))
}

#[derive(Serialize)]
struct CsvRow<'a> {
    experiment: &'a str,
    family: &'a str,
    n: usize,
    samples: u64,
    seed: u64,
    statistic: &'a str,
    mean: f64,
    stderr: f64,
    extra: String,
}

/// Writes rows as CSV with columns
/// `experiment,family,n,samples,seed,statistic,mean,stderr,extra`.
pub fn write_csv<W: Write>(writer: W, rows: &[ExperimentResult]) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    for r in rows {
        w.serialize(CsvRow {
            experiment: &r.experiment,
            family: &r.family,
            n: r.n,
            samples: r.samples,
            seed: r.seed,
            statistic: &r.statistic,
            mean: r.mean,
            stderr: r.stderr,
            extra: r.extra.to_string(),
        })?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_jsonl<W: Write>(mut writer: W, rows: &[ExperimentResult]) -> Result<()> {
    for r in rows {
        writeln!(
            writer,
            "{}",
            serde_json::to_string(r).expect("rows serialize")
        )?;
    }
    Ok(())
}

pub fn write_results<W: Write>(
    writer: W,
    rows: &[ExperimentResult],
    format: OutputFormat,
) -> Result<()> {
    match format {
        OutputFormat::Csv => write_csv(writer, rows),
        OutputFormat::Jsonl => write_jsonl(writer, rows),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(e: Experiment, f: &str, n: Vec<usize>, samples: u64) -> ExperimentConfig {
        ExperimentConfig::new(e, f.parse().unwrap(), n, samples, 11)
    }

    #[test]
    fn csv_is_thread_independent() {
        let mut c = cfg(Experiment::CycleCount, "uniform", vec![50, 80], 600);
        let render = |c: &ExperimentConfig| {
            let mut buf = Vec::new();
            write_csv(&mut buf, &run_experiment(c).unwrap()).unwrap();
            String::from_utf8(buf).unwrap()
        };
        c.threads = 1;
        let one = render(&c);
        c.threads = 4;
        assert_eq!(one, render(&c));
        assert!(one.starts_with("experiment,family,n,samples,seed,statistic,mean,stderr,extra\n"));
    }

    #[test]
    fn ringlet_mean_is_close_to_exact() {
        let rows = run_experiment(&cfg(Experiment::Ringlets, "uniform", vec![200], 4000)).unwrap();
        let r = &rows[0];
        let exact = r.extra["exact"].as_f64().unwrap();
        assert!((r.mean - exact).abs() < 4.0 * r.stderr, "{r:?}");
    }

    #[test]
    fn stderr_halves_with_four_times_the_samples() {
        let a = run_experiment(&cfg(Experiment::Ringlets, "uniform", vec![100], 2000)).unwrap();
        let b = run_experiment(&cfg(Experiment::Ringlets, "uniform", vec![100], 8000)).unwrap();
        let ratio = a[0].stderr / b[0].stderr;
        assert!((ratio - 2.0).abs() < 0.2, "{ratio}");
    }

    #[test]
    fn unknown_names_and_bad_families() {
        assert!(matches!(
            "nope".parse::<Experiment>(),
            Err(Error::UnknownExperiment(_))
        ));
        assert!(run_experiment(&cfg(Experiment::GcdLaw, "uniform", vec![10], 10)).is_err());
        assert!(matches!(
            run_experiment(&cfg(Experiment::CycleCount, "sg(1,0,1)", vec![5], 10)),
            Err(Error::InadmissibleSize { .. })
        ));
    }

    #[test]
    fn gcd_tally_moments() {
        let mut t = GcdTally::default();
        for c in [1, 1, 2, 4] {
            t.push(c);
        }
        assert_eq!(t.p1(), 0.5);
        assert_eq!(t.mean(), 2.0);
        assert_eq!(t.second_moment(), 5.5);
    }

    #[test]
    fn spectrum_conserves_points() {
        let pts = spectrum_experiment(1000, 50, 3, 1).unwrap();
        let total: f64 = pts.iter().map(|p| p.k as f64 * p.mean).sum();
        assert!((total - 1000.0).abs() < 1e-9);
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use motifcorr_core::counting::inj;
use motifcorr_core::motif::{admissibility_report, family_size_bounds, MotifFamily};
use motifcorr_core::roc::{roc_auc, MomentReport};
use motifcorr_core::statistic::{statistic_with_backend, theoretical_threshold, WeightScheme};
use motifcorr_core::{center, Backend, Centering, WeightedCompleteGraph};
use motifcorr::config::{config_hash, load_json};
use motifcorr::experiments::{histogram, run_trials_with_family, check_theory_config, separation};
use motifcorr::io::{
    load_edge_list, read_scores_csv, write_histogram_csv, write_json, write_roc_csv,
    write_scores_csv, write_text,
};
use motifcorr::{
    run_realdata, CenteringSpec, Error, FamilySpec, RealDataConfig, Result, SchemeSpec,
    TrialConfig,
};
use serde::Serialize;
use serde_json::json;

const THREADS_ENV: &str = "MOTIFCORR_THREADS";
const HISTOGRAM_BINS: usize = 30;

#[derive(Parser)]
#[command(name = "motifcorr", version, about = "Motif-count tests for correlated random graphs")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Base seed; overrides the config file.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads (default: $MOTIFCORR_THREADS, else all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Output directory.
    #[arg(long, global = true, default_value = "motifcorr-out")]
    out: PathBuf,
    /// JSON config file; flags take precedence over its values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List a motif family.
    Enumerate(EnumerateArgs),
    /// Injective counts of a family in a graph, or the statistic on two graphs.
    Count(CountArgs),
    /// Monte Carlo scores, ROC curve and histogram for one grid point.
    Simulate(TrialArgs),
    /// ROC curve and AUC from a scores.csv file.
    Roc(RocArgs),
    /// Compare simulated moments with their exact values.
    Validate(TrialArgs),
    /// Vertex-overlap experiment on an edge-list network.
    Realdata(RealDataArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    /// Edge count of every motif.
    n_e: Option<usize>,
    /// Maximum degree.
    d: Option<usize>,
    /// Build the special family with path length ELL and degree D instead.
    #[arg(long, num_args = 2, value_names = ["ELL", "D"])]
    special: Option<Vec<usize>>,
    /// Also report admissibility diagnostics at this correlation.
    #[arg(long)]
    rho: Option<f64>,
}

#[derive(Args)]
struct CountArgs {
    /// Edge-list file.
    #[arg(long)]
    graph: PathBuf,
    /// Second edge-list file; when given the statistic is printed.
    #[arg(long)]
    second: Option<PathBuf>,
    #[arg(long, default_value = "bounded:3:2")]
    family: FamilySpec,
    /// Empirical, known (needs --p), or none for raw 0/1 weights.
    #[arg(long, default_value = "empirical")]
    centering: String,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    rho: Option<f64>,
    #[arg(long, value_enum, default_value = "equal-edges")]
    scheme: SchemeSpec,
}

#[derive(Args)]
struct TrialArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    rho: Option<f64>,
    /// bounded:N_E:D, special:ELL:D, cycle:K, tree:N_E:D or file:PATH.
    #[arg(long)]
    family: Option<FamilySpec>,
    #[arg(long, value_enum)]
    scheme: Option<SchemeSpec>,
    #[arg(long, value_enum)]
    centering: Option<CenteringSpec>,
    /// Trials per hypothesis.
    #[arg(long)]
    trials: Option<usize>,
}

#[derive(Args)]
struct RocArgs {
    /// scores.csv as written by `simulate`.
    #[arg(long)]
    scores: PathBuf,
}

#[derive(Args)]
struct RealDataArgs {
    /// Edge-list file of the network.
    edges: PathBuf,
    /// Keep the K highest-degree vertices.
    #[arg(long = "top-k")]
    top_k: Option<usize>,
    /// Vertices per sampled subgraph.
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated overlap fractions.
    #[arg(long, value_delimiter = ',')]
    overlaps: Option<Vec<f64>>,
    #[arg(long)]
    family: Option<FamilySpec>,
    #[arg(long)]
    trials: Option<usize>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let threads = match cli.common.threads {
        Some(t) => Some(t),
        None => match std::env::var(THREADS_ENV) {
            Ok(v) => Some(v.parse().map_err(|_| {
                Error::Usage(format!("{THREADS_ENV}={v:?} is not a thread count"))
            })?),
            Err(_) => None,
        },
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        if t == 0 {
            return Err(Error::Usage("--threads must be at least 1".into()));
        }
        builder = builder.num_threads(t);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Usage(format!("cannot start thread pool: {e}")))?;
    let common = &cli.common;
    pool.install(|| match &cli.command {
        Command::Enumerate(a) => cmd_enumerate(common, a),
        Command::Count(a) => cmd_count(common, a),
        Command::Simulate(a) => cmd_simulate(common, a),
        Command::Roc(a) => cmd_roc(common, a),
        Command::Validate(a) => cmd_validate(common, a),
        Command::Realdata(a) => cmd_realdata(common, a),
    })
}

fn resolve_trial_config(common: &Common, a: &TrialArgs, base: TrialConfig) -> Result<TrialConfig> {
    let mut cfg = match &common.config {
        Some(path) => load_json(path)?,
        None => base,
    };
    if let Some(v) = a.n {
        cfg.n = v;
    }
    if let Some(v) = a.p {
        cfg.p = v;
    }
    if let Some(v) = a.rho {
        cfg.rho = v;
    }
    if let Some(v) = &a.family {
        cfg.family = v.clone();
    }
    if let Some(v) = a.scheme {
        cfg.scheme = v;
    }
    if let Some(v) = a.centering {
        cfg.centering = v;
    }
    if let Some(v) = a.trials {
        cfg.trials = v;
    }
    if let Some(v) = common.seed {
        cfg.seed = v;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn seeds_json(seed: u64) -> serde_json::Value {
    json!({
        "base_seed": seed,
        "trial_seed": "base_seed xor trial",
        "h0_stream": 0,
        "h1_stream": 1,
    })
}

fn family_json(fam: &MotifFamily) -> serde_json::Value {
    let motifs: Vec<_> = fam
        .iter()
        .map(|m| json!({"motif": m.to_string(), "v": m.v(), "e": m.e(), "aut": m.aut()}))
        .collect();
    json!({"kind": fam.kind().to_string(), "size": fam.len(), "motifs": motifs})
}

fn cmd_enumerate(common: &Common, a: &EnumerateArgs) -> Result<()> {
    let spec = match (&a.special, a.n_e, a.d) {
        (Some(s), None, None) => FamilySpec::Special { ell: s[0], d: s[1] },
        (None, Some(n_e), Some(d)) => FamilySpec::Bounded { n_e, d },
        _ => {
            return Err(Error::Usage(
                "give either N_E D or --special ELL D".into(),
            ))
        }
    };
    let fam = spec.build()?;
    println!("family {spec}");
    println!("size {}", fam.len());
    for m in &fam {
        println!("v={} e={} aut={}  {m}", m.v(), m.e(), m.aut());
    }
    let mut summary = json!({
        "command": "enumerate",
        "config": {"family": spec},
        "config_hash": config_hash(&spec),
        "family": family_json(&fam),
    });
    if let FamilySpec::Special { d, .. } = spec {
        let n_e = fam.n_e();
        let (lo, hi) = family_size_bounds(n_e, d)?;
        println!("bounds [{lo}, {hi}]");
        summary["size_bounds"] = json!([lo, hi]);
    }
    if let Some(rho) = a.rho {
        let d = fam.d().unwrap_or(0);
        let r = admissibility_report(&fam, rho, d)?;
        println!(
            "signal_score {} type_one_bound {} connected {} subgraph_ok {}",
            r.signal_score, r.type_one_bound, r.connected_ok, r.subgraph_ok
        );
        summary["admissibility"] = json!({
            "rho": rho,
            "connected_ok": r.connected_ok,
            "size_bound_c": r.size_bound_c,
            "signal_score": r.signal_score,
            "signal_ok": r.signal_ok,
            "rho_needed": r.rho_needed,
            "subgraph_ok": r.subgraph_ok,
            "type_one_bound": r.type_one_bound,
        });
    }
    write_text(&common.out.join("motifs.txt"), &fam.to_text())?;
    write_json(&common.out.join("summary.json"), &summary)
}

fn cmd_count(common: &Common, a: &CountArgs) -> Result<()> {
    let fam = a.family.build()?;
    let g1 = load_edge_list(&a.graph)?;
    let centering = match a.centering.as_str() {
        "empirical" => Some(Centering::EmpiricalDensity),
        "known" => {
            let p = a.p.ok_or_else(|| Error::Usage("--centering known needs --p".into()))?;
            Some(Centering::KnownDensity(p))
        }
        "none" => None,
        other => return Err(Error::Usage(format!("unknown centering {other:?}"))),
    };
    let weights = |g: &motifcorr_core::SimpleGraph| -> Result<WeightedCompleteGraph> {
        Ok(match centering {
            Some(c) => center(g, c)?,
            None => WeightedCompleteGraph::from_fn(g.n(), |u, v| g.has_edge(u, v) as u8 as f64),
        })
    };
    let w1 = weights(&g1)?;
    let mut counts = Vec::new();
    for m in &fam {
        let c = inj(m, &w1, Backend::Auto)?;
        println!("{c:e}  {m}");
        counts.push(json!({"motif": m.to_string(), "inj": c}));
    }
    let mut summary = json!({
        "command": "count",
        "config": {
            "graph": a.graph, "second": a.second, "family": a.family,
            "centering": a.centering, "p": a.p, "rho": a.rho, "scheme": a.scheme,
        },
        "counts": counts,
    });
    summary["config_hash"] = json!(config_hash(&summary["config"]));
    if let Some(path) = &a.second {
        let g2 = load_edge_list(path)?;
        let c = centering.ok_or_else(|| Error::Usage("the statistic needs centering".into()))?;
        let scheme = match a.scheme {
            SchemeSpec::EqualEdges => WeightScheme::EqualEdges,
            SchemeSpec::FullTheoretical => WeightScheme::FullTheoretical {
                p: a.p.ok_or_else(|| Error::Usage("full_theoretical needs --p".into()))?,
                rho: a.rho.ok_or_else(|| Error::Usage("full_theoretical needs --rho".into()))?,
            },
        };
        let t = statistic_with_backend(&g1, &g2, &fam, scheme, c, Backend::Moebius)?;
        println!("statistic {t:e}");
        summary["statistic"] = json!(t);
    }
    write_json(&common.out.join("summary.json"), &summary)
}

fn cmd_simulate(common: &Common, a: &TrialArgs) -> Result<()> {
    let cfg = resolve_trial_config(common, a, TrialConfig::default())?;
    let fam = cfg.family.build()?;
    let scores = run_trials_with_family(&cfg, &fam)?;
    let roc = roc_auc(&scores.h0, &scores.h1)?;
    let sep = separation(&scores)?;
    let out = &common.out;
    write_scores_csv(&out.join("scores.csv"), &scores)?;
    write_roc_csv(&out.join("roc.csv"), &roc)?;
    write_histogram_csv(&out.join("histogram.csv"), &histogram(&scores, HISTOGRAM_BINS))?;
    let signal = fam.signal_score(cfg.rho);
    let mut summary = json!({
        "command": "simulate",
        "config": cfg,
        "config_hash": config_hash(&cfg),
        "seeds": seeds_json(cfg.seed),
        "family_size": fam.len(),
        "auc": roc.auc,
        "separation": sep,
        "signal_score": signal,
        "type_one_bound": (4.0 / signal).min(1.0),
    });
    if cfg.scheme == SchemeSpec::FullTheoretical && cfg.rho > 0.0 {
        let tau = theoretical_threshold(&fam, cfg.rho);
        let rate = |s: &[f64]| s.iter().filter(|&&t| t >= tau).count() as f64 / s.len() as f64;
        summary["threshold"] = json!({
            "tau": tau,
            "type_one_rate": rate(&scores.h0),
            "type_two_rate": 1.0 - rate(&scores.h1),
        });
    }
    write_json(&out.join("summary.json"), &summary)?;
    println!("auc {}", roc.auc);
    println!(
        "mean_h0 {:e} mean_h1 {:e} pooled_sd {:e} shift {:.3}",
        sep.mean_h0, sep.mean_h1, sep.pooled_sd, sep.standardized_shift
    );
    Ok(())
}

fn cmd_roc(common: &Common, a: &RocArgs) -> Result<()> {
    let scores = read_scores_csv(&a.scores)?;
    let roc = roc_auc(&scores.h0, &scores.h1)?;
    write_roc_csv(&common.out.join("roc.csv"), &roc)?;
    let config = json!({"scores": a.scores});
    write_json(
        &common.out.join("summary.json"),
        &json!({
            "command": "roc",
            "config_hash": config_hash(&config),
            "config": config,
            "auc": roc.auc,
            "n_h0": scores.h0.len(),
            "n_h1": scores.h1.len(),
        }),
    )?;
    println!("auc {}", roc.auc);
    Ok(())
}

#[derive(Serialize)]
struct MomentsOut {
    mean_h0: f64,
    var_h0: f64,
    mean_h1: f64,
    se_mean_h0: f64,
    se_var_h0: f64,
    se_mean_h1: f64,
    theory_mean_h0: f64,
    theory_var_h0: f64,
    theory_mean_h1: f64,
    z_mean_h0: f64,
    z_var_h0: f64,
    z_mean_h1: f64,
    all_within_3se: bool,
}

impl From<MomentReport> for MomentsOut {
    fn from(r: MomentReport) -> Self {
        MomentsOut {
            mean_h0: r.mean_h0,
            var_h0: r.var_h0,
            mean_h1: r.mean_h1,
            se_mean_h0: r.se_mean_h0,
            se_var_h0: r.se_var_h0,
            se_mean_h1: r.se_mean_h1,
            theory_mean_h0: 0.0,
            theory_var_h0: r.theory,
            theory_mean_h1: r.theory,
            z_mean_h0: r.z_mean_h0,
            z_var_h0: r.z_var_h0,
            z_mean_h1: r.z_mean_h1,
            all_within_3se: [r.z_mean_h0, r.z_var_h0, r.z_mean_h1]
                .iter()
                .all(|z| z.abs() < 3.0),
        }
    }
}

fn cmd_validate(common: &Common, a: &TrialArgs) -> Result<()> {
    let cfg = resolve_trial_config(common, a, TrialConfig::validation_default())?;
    check_theory_config(&cfg)?;
    let fam = cfg.family.build()?;
    let scores = run_trials_with_family(&cfg, &fam)?;
    let report = MomentReport::new(&scores.h0, &scores.h1, fam.signal_score(cfg.rho))?;
    let moments = MomentsOut::from(report);
    println!("theory {}", report.theory);
    println!("mean_h0 {:e} z {:.3}", moments.mean_h0, moments.z_mean_h0);
    println!("var_h0 {} z {:.3}", moments.var_h0, moments.z_var_h0);
    println!("mean_h1 {} z {:.3}", moments.mean_h1, moments.z_mean_h1);
    println!("all_within_3se {}", moments.all_within_3se);
    let doc = json!({
        "command": "validate",
        "config": cfg,
        "config_hash": config_hash(&cfg),
        "seeds": seeds_json(cfg.seed),
        "moments": moments,
    });
    write_json(&common.out.join("moments.json"), &doc)?;
    write_json(&common.out.join("summary.json"), &doc)
}

fn overlap_tag(o: f64) -> String {
    format!("{o}").replace('.', "_")
}

fn cmd_realdata(common: &Common, a: &RealDataArgs) -> Result<()> {
    let mut cfg: RealDataConfig = match &common.config {
        Some(path) => load_json(path)?,
        None => RealDataConfig::default(),
    };
    if let Some(v) = a.top_k {
        cfg.top_k = v;
    }
    if let Some(v) = a.n {
        cfg.n = v;
    }
    if let Some(v) = &a.overlaps {
        cfg.overlaps = v.clone();
    }
    if let Some(v) = &a.family {
        cfg.family = v.clone();
    }
    if let Some(v) = a.trials {
        cfg.trials = v;
    }
    if let Some(v) = common.seed {
        cfg.seed = v;
    }
    let network = load_edge_list(&a.edges)?;
    let runs = run_realdata(&network, &cfg)?;
    let mut rows = Vec::new();
    for run in &runs {
        let tag = overlap_tag(run.overlap);
        write_roc_csv(&common.out.join(format!("roc_{tag}.csv")), &run.roc)?;
        write_scores_csv(&common.out.join(format!("scores_{tag}.csv")), &run.scores)?;
        println!("overlap {} auc {}", run.overlap, run.roc.auc);
        rows.push(json!({"overlap": run.overlap, "auc": run.roc.auc}));
    }
    let echo = json!({"edges": a.edges, "pipeline": cfg});
    write_json(
        &common.out.join("summary.json"),
        &json!({
            "command": "realdata",
            "config": echo,
            "config_hash": config_hash(&echo),
            "seeds": seeds_json(cfg.seed),
            "network_vertices": network.n(),
            "network_edges": network.edge_count(),
            "auc": rows,
        }),
    )
}

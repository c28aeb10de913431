//! The `qdist` command line: oracles, constructions, reductions, and
//! reports.
//!
//! Exit codes are part of the interface so shell pipelines can drive
//! sweeps: `0` success (and YES verdicts / verified certificates), `1` NO,
//! `2` inconclusive (PROMISE_VIOLATED verdicts and UNVERIFIED
//! certificates), `64` usage errors, `65` malformed input files, `70`
//! internal failures — including a refuted certificate, which means the
//! tool itself is broken.  Every command accepts `--json <path>` for a
//! structured report and `--canonical` to strip timings from it, making
//! repeated runs byte-identical.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::codes::{double, elongate, tensor_code, DecisionInstance, Gap, LinearCode};
use crate::css::{css_from_pair, hgp};
use crate::distance::{
    classify_instance, css_distance, graph_state_distance, graph_state_x_distance,
    min_dist_dual_dist, min_distance, set_oracle_threads, DistanceResult, SearchMethod, Verdict,
};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::graphs::{graph_code, polarity_graph, Graph};
use crate::matio::parse_matrix;
use crate::reduce::{
    hgp_barrier_report, verify_reduction, CertStatus, Reduced, ReductionKind, TargetInstance,
    VerifyOptions, VerifyRequest,
};
use crate::report::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_FORMAT: i32 = 65;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Parser)]
#[command(
    name = "qdist",
    version,
    about = "Distance oracles, code constructions, and verified reductions over GF(2)"
)]
struct Cli {
    /// Write a JSON report of inputs, parameters, and results here.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    /// Omit timings from the report so identical runs emit identical bytes.
    #[arg(long, global = true)]
    canonical: bool,

    /// Oracle worker threads; falls back to QDIST_THREADS, then all cores.
    /// Never affects results, only throughput.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Minimum distance of the code with parity check H.
    Distance { h: PathBuf },
    /// Minimum distance of the dual code.
    DualDistance { h: PathBuf },
    /// min{d(C), d(C⊥)}, found in one lockstep search.
    DistDualDist { h: PathBuf },
    /// Minimum distance of the CSS code with checks (H_X, H_Z).
    CssDistance { hx: PathBuf, hz: PathBuf },
    /// Graph-state distance min wt(x OR Ax) of an adjacency matrix.
    GraphDistance { a: PathBuf },
    /// X-only graph-state distance: minimum weight in ker A.
    GraphXDistance { a: PathBuf },
    /// Hypergraph product of two full-rank parity checks.
    Hgp {
        h1: PathBuf,
        h2: PathBuf,
        /// Write H_X here in the matrix text format.
        #[arg(long, value_name = "PATH")]
        out_x: Option<PathBuf>,
        /// Write H_Z here in the matrix text format.
        #[arg(long, value_name = "PATH")]
        out_z: Option<PathBuf>,
    },
    /// Tensor product of the codes with parity checks H1 and H2.
    Tensor {
        h1: PathBuf,
        h2: PathBuf,
        /// Write the product's parity check here.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// The doubled code {(c, c) : c in C}.
    Double {
        h: PathBuf,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Pad the code with always-zero coordinates to length N.
    Elongate {
        h: PathBuf,
        #[arg(value_name = "N")]
        n_new: usize,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Polarity graph of the projective plane over F_p.
    Polarity {
        p: u64,
        /// Write the adjacency matrix here.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// The code with parity check [I : A] for an adjacency matrix A.
    GraphCode {
        a: PathBuf,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Run a reduction on the code with parity check H and verify the
    /// certificate (exit 0 verified, 2 unverified, 70 refuted).
    Reduce {
        kind: RKind,
        h: PathBuf,
        /// Decision threshold carried through the reduction.
        #[arg(short = 't', value_name = "T", default_value_t = 0)]
        t: u64,
        /// Repetition exponent for to-hgp-addgap.
        #[arg(long, value_name = "A")]
        alpha: Option<f64>,
        /// Polarity prime override for to-dualdist.
        #[arg(long, value_name = "P")]
        prime: Option<u64>,
        /// Target rate in (0, 1/2] for to-rate-half.
        #[arg(long, value_name = "R")]
        rate: Option<f64>,
    },
    /// Verify a reduction request given as a JSON file.
    Verify { request: PathBuf },
    /// Check the square-root distance barrier on HGP pairs listed in a JSON
    /// spec ({"pairs": [["h1.txt", "h2.txt"], ...]}).
    BarrierReport { spec: PathBuf },
    /// Decide d(C) <= t, optionally under a promise gap
    /// (--gap mult:G or --gap add:TAU:EPS); exit 0 YES, 1 NO, 2 violated.
    Classify {
        h: PathBuf,
        #[arg(short = 't', value_name = "T")]
        t: u64,
        #[arg(long, value_parser = parse_gap, value_name = "GAP")]
        gap: Option<Gap>,
    },
}

/// Reduction names as they appear on the command line.
#[derive(Clone, Copy, Debug, ValueEnum)]
enum RKind {
    #[value(name = "to-css")]
    Css,
    #[value(name = "to-hgp-addgap")]
    HgpAddgap,
    #[value(name = "to-dualdist")]
    Dualdist,
    #[value(name = "to-graph")]
    Graph,
    #[value(name = "to-rate-half")]
    RateHalf,
    #[value(name = "to-xgraph")]
    Xgraph,
}

fn parse_gap(s: &str) -> std::result::Result<Gap, String> {
    let parse_f = |tok: &str, what: &str| {
        tok.parse::<f64>()
            .map_err(|_| format!("{what} must be a number, got {tok:?}"))
    };
    if let Some(g) = s.strip_prefix("mult:") {
        return Ok(Gap::Multiplicative {
            gamma: parse_f(g, "G")?,
        });
    }
    if let Some(rest) = s.strip_prefix("add:") {
        let (tau, eps) = rest
            .split_once(':')
            .ok_or_else(|| "expected add:TAU:EPS".to_string())?;
        return Ok(Gap::Additive {
            tau: parse_f(tau, "TAU")?,
            eps: parse_f(eps, "EPS")?,
        });
    }
    Err("expected mult:G or add:TAU:EPS".to_string())
}

/// Parses `argv` and runs the command, returning the process exit code.
pub fn run(argv: Vec<std::ffi::OsString>) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let threads = cli
        .threads
        .or_else(|| {
            std::env::var("QDIST_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or_else(|| {
            std::thread::available_parallelism().map_or(1, std::num::NonZeroUsize::get)
        });
    set_oracle_threads(threads);
    match execute(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_for(&err)
        }
    }
}

fn exit_for(err: &Error) -> i32 {
    match err {
        Error::InvalidParameter(_) | Error::NotPrime(_) => EXIT_USAGE,
        Error::Format { .. }
        | Error::Io { .. }
        | Error::DimensionMismatch(_)
        | Error::RankDeficient(_)
        | Error::SizeOverflow(_)
        | Error::Asymmetric(..)
        | Error::UnexpectedLoop(_)
        | Error::CssOrthogonality { .. } => EXIT_FORMAT,
    }
}

/// Report construction shared by every command.
struct Emit {
    report: Report,
    json: Option<PathBuf>,
    canonical: bool,
    t0: Instant,
}

impl Emit {
    fn new(cli: &Cli, command: &str) -> Self {
        Emit {
            report: Report::new(command),
            json: cli.json.clone(),
            canonical: cli.canonical,
            t0: Instant::now(),
        }
    }

    /// Reads, hashes, and parses a matrix file, recording it as an input.
    fn load_matrix(&mut self, label: &str, path: &Path) -> Result<BitMatrix> {
        let text = read_text(path)?;
        self.report
            .input(label, &path.display().to_string(), text.as_bytes());
        parse_matrix(&text)
    }

    fn load_graph(&mut self, label: &str, path: &Path) -> Result<Graph> {
        // Loops are legitimate here (X-distance targets carry them); only
        // asymmetry is rejected.
        Graph::from_adjacency(self.load_matrix(label, path)?, true)
    }

    /// Writes a constructed matrix when the caller asked for it, noting the
    /// destination in the report.
    fn save_matrix(&mut self, label: &str, m: &BitMatrix, path: &Option<PathBuf>) -> Result<()> {
        if let Some(path) = path {
            crate::matio::write_matrix(m, path)?;
            self.report.result(label, path.display().to_string());
        }
        Ok(())
    }

    fn finish(mut self, code: i32) -> Result<i32> {
        self.report
            .timing("total", self.t0.elapsed().as_secs_f64() * 1e3);
        if self.canonical {
            self.report.canonicalize();
        }
        if let Some(path) = &self.json {
            std::fs::write(path, self.report.render()).map_err(|source| Error::Io {
                path: path.display().to_string(),
                source,
            })?;
        }
        Ok(code)
    }
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn method_name(m: SearchMethod) -> &'static str {
    match m {
        SearchMethod::CodewordEnum => "codeword_enum",
        SearchMethod::WeightLimited => "weight_limited",
    }
}

/// Prints a distance result and records it under the report's results.
fn emit_distance(emit: &mut Emit, res: &DistanceResult) {
    println!("d = {}", res.value);
    if let Some(w) = &res.witness {
        println!("witness = {w}");
    }
    emit.report.result("d", res.value);
    emit.report
        .result("witness", res.witness.as_ref().map(ToString::to_string));
    emit.report.result("method", method_name(res.method));
}

fn print_code_params(emit: &mut Emit, code: &LinearCode) {
    println!("n = {}", code.n());
    println!("k = {}", code.k());
    emit.report.result("n", code.n());
    emit.report.result("k", code.k());
}

fn execute(cli: &Cli) -> Result<i32> {
    match &cli.cmd {
        Cmd::Distance { h } => {
            let mut emit = Emit::new(cli, "distance");
            let code = LinearCode::from_parity_check(emit.load_matrix("h", h)?)?;
            let t = Instant::now();
            let res = min_distance(&code);
            emit.report
                .timing("oracle", t.elapsed().as_secs_f64() * 1e3);
            print_code_params(&mut emit, &code);
            emit_distance(&mut emit, &res);
            emit.finish(EXIT_OK)
        }
        Cmd::DualDistance { h } => {
            let mut emit = Emit::new(cli, "dual-distance");
            let code = LinearCode::from_parity_check(emit.load_matrix("h", h)?)?;
            let res = min_distance(&code.dual());
            print_code_params(&mut emit, &code.dual());
            emit_distance(&mut emit, &res);
            emit.finish(EXIT_OK)
        }
        Cmd::DistDualDist { h } => {
            let mut emit = Emit::new(cli, "dist-dual-dist");
            let code = LinearCode::from_parity_check(emit.load_matrix("h", h)?)?;
            let res = min_dist_dual_dist(&code);
            print_code_params(&mut emit, &code);
            emit_distance(&mut emit, &res);
            emit.finish(EXIT_OK)
        }
        Cmd::CssDistance { hx, hz } => {
            let mut emit = Emit::new(cli, "css-distance");
            let css = css_from_pair(emit.load_matrix("h_x", hx)?, emit.load_matrix("h_z", hz)?)?;
            println!("n = {}", css.n());
            println!("k = {}", css.k());
            emit.report.result("n", css.n());
            emit.report.result("k", css.k());
            let res = css_distance(&css);
            emit_distance(&mut emit, &res);
            emit.finish(EXIT_OK)
        }
        Cmd::GraphDistance { a } => {
            let mut emit = Emit::new(cli, "graph-distance");
            let graph = emit.load_graph("a", a)?;
            println!("vertices = {}", graph.n());
            emit.report.result("vertices", graph.n());
            let res = graph_state_distance(&graph);
            emit_distance(&mut emit, &res);
            emit.finish(EXIT_OK)
        }
        Cmd::GraphXDistance { a } => {
            let mut emit = Emit::new(cli, "graph-x-distance");
            let graph = emit.load_graph("a", a)?;
            println!("vertices = {}", graph.n());
            emit.report.result("vertices", graph.n());
            let res = graph_state_x_distance(&graph);
            emit_distance(&mut emit, &res);
            emit.finish(EXIT_OK)
        }
        Cmd::Hgp {
            h1,
            h2,
            out_x,
            out_z,
        } => {
            let mut emit = Emit::new(cli, "hgp");
            let css = hgp(&emit.load_matrix("h1", h1)?, &emit.load_matrix("h2", h2)?)?;
            println!("n = {}", css.n());
            println!("k = {}", css.k());
            emit.report.result("n", css.n());
            emit.report.result("k", css.k());
            emit.report.result("css", &css);
            emit.save_matrix("written_h_x", css.h_x(), out_x)?;
            emit.save_matrix("written_h_z", css.h_z(), out_z)?;
            emit.finish(EXIT_OK)
        }
        Cmd::Tensor { h1, h2, out } => {
            let mut emit = Emit::new(cli, "tensor");
            let c1 = LinearCode::from_parity_check(emit.load_matrix("h1", h1)?)?;
            let c2 = LinearCode::from_parity_check(emit.load_matrix("h2", h2)?)?;
            let prod = tensor_code(&c1, &c2)?;
            print_code_params(&mut emit, &prod);
            emit.report.result("code", &prod);
            emit.save_matrix("written_h", prod.parity_check(), out)?;
            emit.finish(EXIT_OK)
        }
        Cmd::Double { h, out } => {
            let mut emit = Emit::new(cli, "double");
            let code = LinearCode::from_parity_check(emit.load_matrix("h", h)?)?;
            let doubled = double(&code)?;
            print_code_params(&mut emit, &doubled);
            emit.report.result("code", &doubled);
            emit.save_matrix("written_h", doubled.parity_check(), out)?;
            emit.finish(EXIT_OK)
        }
        Cmd::Elongate { h, n_new, out } => {
            let mut emit = Emit::new(cli, "elongate");
            let code = LinearCode::from_parity_check(emit.load_matrix("h", h)?)?;
            let longer = elongate(&code, *n_new)?;
            emit.report.parameter("n_new", n_new);
            print_code_params(&mut emit, &longer);
            emit.report.result("code", &longer);
            emit.save_matrix("written_h", longer.parity_check(), out)?;
            emit.finish(EXIT_OK)
        }
        Cmd::Polarity { p, out } => {
            let mut emit = Emit::new(cli, "polarity");
            emit.report.parameter("p", p);
            let graph = polarity_graph(*p)?;
            let degrees: Vec<usize> = (0..graph.n()).map(|v| graph.degree(v)).collect();
            println!("vertices = {}", graph.n());
            println!(
                "degree_min = {}",
                degrees.iter().min().copied().unwrap_or(0)
            );
            println!(
                "degree_max = {}",
                degrees.iter().max().copied().unwrap_or(0)
            );
            emit.report.result("vertices", graph.n());
            emit.report.result("graph", &graph);
            emit.save_matrix("written_a", graph.adjacency(), out)?;
            emit.finish(EXIT_OK)
        }
        Cmd::GraphCode { a, out } => {
            let mut emit = Emit::new(cli, "graph-code");
            let graph = emit.load_graph("a", a)?;
            let code = graph_code(&graph);
            print_code_params(&mut emit, &code);
            emit.report.result("code", &code);
            emit.save_matrix("written_h", code.parity_check(), out)?;
            emit.finish(EXIT_OK)
        }
        Cmd::Reduce {
            kind,
            h,
            t,
            alpha,
            prime,
            rate,
        } => {
            let mut emit = Emit::new(cli, &format!("reduce {}", kind_name(*kind)));
            let code = LinearCode::from_parity_check(emit.load_matrix("h", h)?)?;
            let instance = DecisionInstance::new(code, *t, Gap::None)?;
            let kind = build_kind(*kind, *alpha, *prime, *rate)?;
            emit.report.parameter("t", t);
            emit.report.parameter("request", &kind);
            let request = VerifyRequest {
                kind,
                instance,
                budget: None,
            };
            let reduced = verify_reduction(&request, &verify_opts(cli))?;
            report_certificate(emit, &reduced)
        }
        Cmd::Verify { request } => {
            let mut emit = Emit::new(cli, "verify");
            let text = read_text(request)?;
            emit.report
                .input("request", &request.display().to_string(), text.as_bytes());
            let request: VerifyRequest =
                serde_json::from_str(&text).map_err(|e| Error::Format {
                    line: e.line(),
                    msg: e.to_string(),
                })?;
            let reduced = verify_reduction(&request, &verify_opts(cli))?;
            report_certificate(emit, &reduced)
        }
        Cmd::BarrierReport { spec } => {
            let mut emit = Emit::new(cli, "barrier-report");
            let text = read_text(spec)?;
            emit.report
                .input("spec", &spec.display().to_string(), text.as_bytes());
            let spec: BarrierSpec = serde_json::from_str(&text).map_err(|e| Error::Format {
                line: e.line(),
                msg: e.to_string(),
            })?;
            let mut pairs = Vec::new();
            for (i, (p1, p2)) in spec.pairs.iter().enumerate() {
                let h1 = emit.load_matrix(&format!("pair.{i}.h1"), Path::new(p1))?;
                let h2 = emit.load_matrix(&format!("pair.{i}.h2"), Path::new(p2))?;
                pairs.push((h1, h2));
            }
            let rows = hgp_barrier_report(&pairs, &verify_opts(cli))?;
            for r in &rows {
                let d_q = r
                    .d_q
                    .exact_finite()
                    .map_or_else(|| "-".to_string(), |v| v.to_string());
                println!(
                    "[{},{}] x [{},{}] -> [[{},{}]]  d_q = {}  bound = {}  {}",
                    r.n1,
                    r.k1,
                    r.n2,
                    r.k2,
                    r.n_prime,
                    r.k,
                    d_q,
                    r.sqrt_bound,
                    if r.ok { "ok" } else { "NOT OK" },
                );
            }
            let all_ok = rows.iter().all(|r| r.ok);
            println!(
                "barrier {}",
                if all_ok {
                    "holds on all rows"
                } else {
                    "NOT confirmed"
                }
            );
            emit.report.result("rows", &rows);
            emit.report.result("all_ok", all_ok);
            emit.finish(if all_ok { EXIT_OK } else { EXIT_INCONCLUSIVE })
        }
        Cmd::Classify { h, t, gap } => {
            let mut emit = Emit::new(cli, "classify");
            let code = LinearCode::from_parity_check(emit.load_matrix("h", h)?)?;
            let gap = gap.clone().unwrap_or(Gap::None);
            let instance = DecisionInstance::new(code, *t, gap.clone())?;
            emit.report.parameter("t", t);
            emit.report.parameter("gap", &gap);
            let (res, verdict) = classify_instance(&instance);
            println!("d = {}", res.value);
            println!("verdict = {verdict}");
            emit.report.result("d", res.value);
            emit.report
                .result("witness", res.witness.as_ref().map(ToString::to_string));
            emit.report.result("verdict", verdict);
            emit.finish(match verdict {
                Verdict::Yes => EXIT_OK,
                Verdict::No => EXIT_NO,
                Verdict::PromiseViolated => EXIT_INCONCLUSIVE,
            })
        }
    }
}

#[derive(Deserialize)]
struct BarrierSpec {
    pairs: Vec<(String, String)>,
}

fn verify_opts(cli: &Cli) -> VerifyOptions {
    VerifyOptions {
        no_timings: cli.canonical,
        ..VerifyOptions::default()
    }
}

fn kind_name(kind: RKind) -> &'static str {
    match kind {
        RKind::Css => "to-css",
        RKind::HgpAddgap => "to-hgp-addgap",
        RKind::Dualdist => "to-dualdist",
        RKind::Graph => "to-graph",
        RKind::RateHalf => "to-rate-half",
        RKind::Xgraph => "to-xgraph",
    }
}

/// Assembles the library-side reduction request, rejecting flags that do
/// not belong to the chosen reduction.
fn build_kind(
    kind: RKind,
    alpha: Option<f64>,
    prime: Option<u64>,
    rate: Option<f64>,
) -> Result<ReductionKind> {
    let reject = |present: bool, name: &str| {
        if present {
            Err(Error::InvalidParameter(format!(
                "--{name} does not apply to {}",
                kind_name(kind)
            )))
        } else {
            Ok(())
        }
    };
    let no_alpha = || reject(alpha.is_some(), "alpha");
    let no_prime = || reject(prime.is_some(), "prime");
    let no_rate = || reject(rate.is_some(), "rate");
    match kind {
        RKind::Css => {
            no_alpha()?;
            no_prime()?;
            no_rate()?;
            Ok(ReductionKind::ToCss)
        }
        RKind::HgpAddgap => {
            no_prime()?;
            no_rate()?;
            let alpha = alpha
                .ok_or_else(|| Error::InvalidParameter("to-hgp-addgap needs --alpha".into()))?;
            Ok(ReductionKind::ToHgpAddgap { alpha })
        }
        RKind::Dualdist => {
            no_alpha()?;
            no_rate()?;
            Ok(ReductionKind::ToDualdist { prime })
        }
        RKind::Graph => {
            no_alpha()?;
            no_prime()?;
            no_rate()?;
            Ok(ReductionKind::ToGraph)
        }
        RKind::RateHalf => {
            no_alpha()?;
            no_prime()?;
            Ok(ReductionKind::ToRateHalf { rate })
        }
        RKind::Xgraph => {
            no_alpha()?;
            no_prime()?;
            no_rate()?;
            Ok(ReductionKind::ToXgraph)
        }
    }
}

fn target_summary(target: &TargetInstance) -> String {
    match target {
        TargetInstance::Code { code } => format!("code [{}, {}]", code.n(), code.k()),
        TargetInstance::Css { css } => format!("css [[{}, {}]]", css.n(), css.k()),
        TargetInstance::Graph { graph } => format!("graph on {} vertices", graph.n()),
    }
}

fn reading_text(reading: &crate::reduce::OracleReading) -> String {
    match reading {
        crate::reduce::OracleReading::Exact { value, .. } => value.to_string(),
        crate::reduce::OracleReading::LowerBound { exceeds } => format!("> {exceeds}"),
    }
}

fn report_certificate(mut emit: Emit, reduced: &Reduced) -> Result<i32> {
    let cert = &reduced.certificate;
    println!("reduction = {}", cert.reduction);
    println!("identity: {}", cert.claimed_identity);
    println!("target = {}", target_summary(&reduced.target));
    println!("t' = {}", reduced.t_prime);
    println!("lhs = {}", reading_text(&cert.lhs));
    println!("rhs = {}", reading_text(&cert.rhs));
    let status = match cert.status {
        CertStatus::Verified => "verified",
        CertStatus::Refuted => "REFUTED",
        CertStatus::Unverified => "unverified",
    };
    println!("status = {status}");
    emit.report.result("certificate", cert);
    emit.report.result("verified", cert.verified);
    let code = match cert.status {
        CertStatus::Verified => EXIT_OK,
        CertStatus::Unverified => EXIT_INCONCLUSIVE,
        CertStatus::Refuted => {
            // The report is still written so the evidence survives.
            eprintln!("error: certificate refuted; the construction violated its identity");
            EXIT_INTERNAL
        }
    };
    emit.finish(code)
}

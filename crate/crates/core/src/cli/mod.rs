//! Command-line front end. Every command prints one JSON object on stdout.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage error, 3 file or parse error.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::channel::{
    monotonicity_check, non_unitality, norm_bound_lemma, sample_channel, ChannelKind, KrausChannel, UNITALITY_TOL,
};
use crate::error::Error;
use crate::info::{
    coincidence_sum, coincidence_sum_closed_form, distort, index_of_coincidence_with, probabilities, scheme_total,
    scheme_total_eta,
};
use crate::io::{self, ChannelJson, MatrixJson, SchemeJson};
use crate::measurement::{
    build_general_sic, build_mub_set, build_mum_set, build_sic_povm, general_sic_t_max, mum_t_max,
    sic_from_fiducial, validate_scheme, MeasurementScheme, SicSearch, TParam, Variant, VALIDATION_TOL,
};
use crate::operator::{sample_random_state, DensityOperator, StateKind};
use crate::probe::{probe_channel, report_from_shots};
use crate::rng::derive_seed;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Exit code and the text written to stdout.
#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    pub code: i32,
    pub stdout: String,
}

const SCHEMAS: &str = "\
JSON schemas:
  matrix   {\"d\": D, \"entries\": [[re, im], ...]}   (D*D entries, row-major; also used for states)
  scheme   {\"variant\": \"MubSet|SicPovm|MumSet|GeneralSic\", \"d\": D, \"kappa\": K?, \"a\": A?,
            \"povms\": [[matrix, ...], ...]}
  channel  {\"d\": D, \"kraus\": [matrix, ...]}
  shots    {\"scheme\": scheme, \"N\": N, \"seed\": S, \"eta\": E?, \"counts\": [[n_j, ...], ...]}
           (with eta, the no-click count is the last entry of each row)

Exit codes: 0 ok, 1 check failed, 2 usage, 3 file or parse error.";

#[derive(Parser, Debug)]
#[command(
    name = "bzinfo",
    version,
    about = "Invariant information of structured quantum measurements and channel non-unitality",
    after_help = SCHEMAS
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a measurement scheme and write it as scheme JSON.
    Gen(GenArgs),
    /// Check a scheme file against its defining conditions (exit 1 on failure).
    Validate {
        /// Scheme JSON file.
        file: PathBuf,
    },
    /// Outcome statistics and Brukner-Zeilinger information of a state.
    Info(InfoArgs),
    /// Check the closed-form coincidence identity on random states.
    IdentityCheck(IdentityArgs),
    /// Apply or analyse a Kraus channel.
    Channel {
        #[command(subcommand)]
        action: ChannelAction,
    },
    /// Sample random channels and states.
    Rand {
        #[command(subcommand)]
        what: RandAction,
    },
    /// Estimate a black-box channel's non-unitality from simulated shots.
    Probe(ProbeArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    Mub,
    Sic,
    Mum,
    Gsic,
}

impl Family {
    fn variant(self) -> Variant {
        match self {
            Family::Mub => Variant::MubSet,
            Family::Sic => Variant::SicPovm,
            Family::Mum => Variant::MumSet,
            Family::Gsic => Variant::GeneralSic,
        }
    }
}

#[derive(Args, Debug)]
struct GenArgs {
    family: Family,
    #[arg(short = 'd', long = "dim")]
    d: usize,
    /// Construction parameter for mum/gsic: a positive number or "max".
    #[arg(long = "t", default_value = "max")]
    t: String,
    /// Seed for the SIC fiducial search (d > 3).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Iteration cap per restart of the SIC fiducial search.
    #[arg(long, default_value_t = 20_000)]
    max_iters: usize,
    /// Restarts of the SIC fiducial search.
    #[arg(long, default_value_t = 16)]
    restarts: usize,
    /// Output file; without it the scheme is printed inline.
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct InfoArgs {
    /// Scheme JSON file.
    #[arg(long)]
    scheme: PathBuf,
    /// State as matrix JSON.
    #[arg(long)]
    state: PathBuf,
    /// Detection efficiency in [0, 1].
    #[arg(long)]
    eta: Option<f64>,
    /// Leave the no-click outcome out of each coincidence index.
    #[arg(long)]
    exclude_noclick: bool,
}

#[derive(Args, Debug)]
struct IdentityArgs {
    #[arg(long)]
    variant: Family,
    #[arg(short = 'd', long = "dim")]
    d: usize,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Construction parameter for mum/gsic.
    #[arg(long = "t", default_value = "max")]
    t: String,
}

#[derive(Subcommand, Debug)]
enum ChannelAction {
    /// Apply the channel to a state.
    Apply {
        #[arg(long)]
        channel: PathBuf,
        #[arg(long)]
        state: PathBuf,
    },
    /// Trace preservation and unitality defects.
    Check {
        #[arg(long)]
        channel: PathBuf,
    },
    /// Non-unitality operator, map norm and its bound; with a state and a
    /// bistochastic channel, also the monotonicity check.
    Norms {
        #[arg(long)]
        channel: PathBuf,
        #[arg(long)]
        state: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ChannelFamily {
    Bistochastic,
    Generic,
    Depolarizing,
    Contraction,
    Unitary,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum StateFamily {
    Pure,
    Mixed,
}

#[derive(Subcommand, Debug)]
enum RandAction {
    /// Sample a channel and write it as channel JSON.
    Channel {
        #[arg(short = 'd', long = "dim")]
        d: usize,
        #[arg(long)]
        kind: ChannelFamily,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Depolarizing parameter.
        #[arg(long, default_value_t = 0.5)]
        lambda: f64,
        /// Target basis state of the contraction.
        #[arg(long, default_value_t = 0)]
        target: usize,
        /// Environment dimension of a generic channel (default d).
        #[arg(long)]
        env_dim: Option<usize>,
        /// Number of unitaries in a bistochastic mixture.
        #[arg(long, default_value_t = 3)]
        unitaries: usize,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Sample a state and write it as matrix JSON.
    State {
        #[arg(short = 'd', long = "dim")]
        d: usize,
        #[arg(long)]
        kind: StateFamily,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
#[command(args_conflicts_with_subcommands = true)]
struct ProbeArgs {
    #[command(subcommand)]
    report: Option<ProbeReportCmd>,
    /// Channel JSON file used as the black box.
    #[arg(long)]
    channel: Option<PathBuf>,
    /// Scheme JSON file.
    #[arg(long)]
    scheme: Option<PathBuf>,
    /// Shots per POVM.
    #[arg(long)]
    shots: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Detection efficiency in (0, 1].
    #[arg(long)]
    eta: Option<f64>,
    /// Write the raw counts as shots JSON.
    #[arg(long)]
    save_shots: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum ProbeReportCmd {
    /// Recompute the report from a shots file.
    Report {
        #[arg(long)]
        shots: PathBuf,
    },
}

struct Failure {
    code: i32,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            kind: "usage",
            message: message.into(),
        }
    }

    fn from_error(e: Error) -> Self {
        let code = match e {
            Error::Io(_) | Error::Json(_) | Error::Parse(_) => EXIT_IO,
            Error::NotBistochastic | Error::NotTracePreserving(_) | Error::NoConvergence(_) => EXIT_CHECK_FAILED,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            kind: error_kind(&e),
            message: e.to_string(),
        }
    }

    /// Errors raised while reading an input file are file errors whatever
    /// their cause.
    fn loading(path: &Path, e: Error) -> Self {
        Self {
            code: EXIT_IO,
            kind: error_kind(&e),
            message: format!("{}: {e}", path.display()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self::from_error(e)
    }
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DimensionMismatch(..) => "dimension_mismatch",
        Error::InvalidDimension(..) => "invalid_dimension",
        Error::NotHermitian(_) => "not_hermitian",
        Error::NotPositive(_) => "not_positive",
        Error::InvalidTrace { .. } => "invalid_trace",
        Error::NoConvergence(_) => "no_convergence",
        Error::Unsupported(_) => "unsupported",
        Error::OutOfRange { .. } => "out_of_range",
        Error::InvalidParameter(_) => "invalid_parameter",
        Error::NotTracePreserving(_) => "not_trace_preserving",
        Error::NotBistochastic => "not_bistochastic",
        Error::NotUnbiased(_) => "not_unbiased",
        Error::Parse(_) => "parse",
        Error::Json(_) => "json",
        Error::Io(_) => "io",
    }
}

type Outcome = std::result::Result<(i32, Value), Failure>;

fn render(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON values always serialize")
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types always serialize")
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandResult {
                    code: EXIT_OK,
                    stdout: e.render().to_string().trim_end().to_string(),
                },
                _ => failure_result(Failure::usage(e.render().to_string().trim_end())),
            };
        }
    };
    match dispatch(cli.command) {
        Ok((code, value)) => CommandResult {
            code,
            stdout: render(&value),
        },
        Err(f) => failure_result(f),
    }
}

fn failure_result(f: Failure) -> CommandResult {
    CommandResult {
        code: f.code,
        stdout: render(&json!({"error": {"kind": f.kind, "message": f.message}})),
    }
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Gen(args) => gen(args),
        Command::Validate { file } => {
            let scheme = io::load_scheme(&file).map_err(|e| Failure::loading(&file, e))?;
            let report = validate_scheme(&scheme);
            let code = if report.passed { EXIT_OK } else { EXIT_CHECK_FAILED };
            Ok((code, to_value(&report)))
        }
        Command::Info(args) => info(args),
        Command::IdentityCheck(args) => identity_check(args),
        Command::Channel { action } => channel(action),
        Command::Rand { what } => rand(what),
        Command::Probe(args) => probe(args),
    }
}

fn load_state(path: &Path) -> std::result::Result<DensityOperator, Failure> {
    io::load_state(path).map_err(|e| Failure::loading(path, e))
}

fn load_channel(path: &Path) -> std::result::Result<KrausChannel, Failure> {
    io::load_channel(path).map_err(|e| Failure::loading(path, e))
}

fn load_scheme(path: &Path) -> std::result::Result<MeasurementScheme, Failure> {
    io::load_scheme(path).map_err(|e| Failure::loading(path, e))
}

/// Writes `payload` to `output` when given, otherwise embeds it under `key`.
fn emit<T: Serialize>(
    mut summary: Value,
    key: &str,
    payload: &T,
    output: Option<&Path>,
    save: impl FnOnce(&Path) -> crate::Result<()>,
) -> std::result::Result<Value, Failure> {
    match output {
        Some(path) => {
            save(path).map_err(|e| Failure::loading(path, e))?;
            summary["written"] = json!(path.display().to_string());
        }
        None => summary[key] = to_value(payload),
    }
    Ok(summary)
}

fn build_scheme(family: Family, d: usize, t: TParam, seed: u64, max_iters: usize, restarts: usize) -> Outcome {
    let mut summary = json!({"variant": family.variant(), "d": d});
    let scheme = match family {
        Family::Mub => build_mub_set(d)?,
        Family::Sic if d <= 3 => build_sic_povm(d)?,
        Family::Sic => {
            let search = SicSearch::new(d, seed, max_iters).restarts(restarts).run()?;
            summary["search"] = json!({
                "potential": search.potential,
                "target": search.target,
                "success": search.success,
                "best_restart": search.best_restart,
                "iterations": search.iterations,
                "seed": seed,
            });
            if !search.success {
                return Ok((EXIT_CHECK_FAILED, summary));
            }
            sic_from_fiducial(&search.fiducial)?
        }
        Family::Mum => {
            let s = build_mum_set(d, t)?;
            summary["t"] = json!(resolved_t(t, mum_t_max(d)?));
            s
        }
        Family::Gsic => {
            let s = build_general_sic(d, t)?;
            summary["t"] = json!(resolved_t(t, general_sic_t_max(d)?));
            s
        }
    };
    if let Some(k) = scheme.kappa {
        summary["kappa"] = json!(k);
    }
    if let Some(a) = scheme.a_param {
        summary["a"] = json!(a);
    }
    summary["povm_count"] = json!(scheme.povms.len());
    summary["scheme"] = to_value(&SchemeJson::from_scheme(&scheme));
    Ok((EXIT_OK, summary))
}

fn resolved_t(t: TParam, t_max: f64) -> f64 {
    match t {
        TParam::Max => t_max,
        TParam::Value(v) => v,
    }
}

fn parse_t(t: &str) -> std::result::Result<TParam, Failure> {
    t.parse().map_err(|e: Error| Failure::usage(e.to_string()))
}

fn gen(args: GenArgs) -> Outcome {
    let t = parse_t(&args.t)?;
    let (code, mut summary) = build_scheme(args.family, args.d, t, args.seed, args.max_iters, args.restarts)?;
    if code != EXIT_OK {
        return Ok((code, summary));
    }
    let scheme_json = summary
        .as_object_mut()
        .and_then(|m| m.remove("scheme"))
        .expect("scheme present on success");
    match args.output {
        Some(path) => {
            let mut text = render(&scheme_json);
            text.push('\n');
            std::fs::write(&path, text).map_err(|e| Failure::loading(&path, e.into()))?;
            summary["written"] = json!(path.display().to_string());
        }
        None => summary["scheme"] = scheme_json,
    }
    Ok((EXIT_OK, summary))
}

fn info(args: InfoArgs) -> Outcome {
    let scheme = load_scheme(&args.scheme)?;
    let rho = load_state(&args.state)?;
    if scheme.dim != rho.dim() {
        return Err(Error::DimensionMismatch(scheme.dim, rho.dim()).into());
    }
    let validation = validate_scheme(&scheme);
    let mixed = DensityOperator::maximally_mixed(rho.dim())?;
    let include = !args.exclude_noclick;
    let mut per_povm = Vec::new();
    let mut coincidence_sum = 0.0;
    for povm in &scheme.povms {
        let mut dist = probabilities(povm, &rho)?;
        let mut reference = probabilities(povm, &mixed)?;
        if let Some(eta) = args.eta {
            dist = distort(&dist, eta)?;
            reference = distort(&reference, eta)?;
        }
        let c = index_of_coincidence_with(&dist, include);
        let c_ref = index_of_coincidence_with(&reference, include);
        coincidence_sum += c;
        let mut entry = json!({
            "label": povm.label(),
            "probabilities": dist.probs(),
            "coincidence": c,
            "bz_information": c - c_ref,
        });
        if dist.eta().is_some() {
            entry["noclick"] = json!(dist.noclick());
        }
        per_povm.push(entry);
    }
    let purity = rho.purity();
    let total = match args.eta {
        Some(eta) => scheme_total_eta(&scheme, &rho, eta)?,
        None => scheme_total(&scheme, &rho)?,
    };
    let closed_form = match args.eta {
        Some(eta) => {
            let l = scheme.povms.len() as f64;
            let noclick = if include { l * (1.0 - eta).powi(2) } else { 0.0 };
            eta * eta * coincidence_sum_closed_form(&scheme, purity) + noclick
        }
        None => coincidence_sum_closed_form(&scheme, purity),
    };
    let mut out = json!({
        "variant": scheme.variant,
        "d": scheme.dim,
        "per_povm": per_povm,
        "coincidence_sum": coincidence_sum,
        "coincidence_sum_closed_form": closed_form,
        "bz_total_measured": total.measured,
        "bz_total_predicted": total.predicted,
        "purity": purity,
        "scheme_valid": validation.passed,
    });
    if let Some(eta) = args.eta {
        out["eta"] = json!(eta);
    }
    let code = if validation.passed { EXIT_OK } else { EXIT_CHECK_FAILED };
    Ok((code, out))
}

fn identity_check(args: IdentityArgs) -> Outcome {
    if args.trials == 0 {
        return Err(Failure::usage("--trials must be positive"));
    }
    let t = parse_t(&args.t)?;
    let (code, summary) = build_scheme(args.variant, args.d, t, args.seed, 20_000, 16)?;
    if code != EXIT_OK {
        return Ok((code, summary));
    }
    let scheme = scheme_from_value(&summary["scheme"])?;
    let deviations: Vec<f64> = (0..args.trials)
        .into_par_iter()
        .map(|i| {
            let kind = if i % 2 == 0 { StateKind::Pure } else { StateKind::Mixed };
            let rho = sample_random_state(args.d, kind, derive_seed(args.seed, i as u64))?;
            let sum = coincidence_sum(&scheme, &rho)?;
            let closed = coincidence_sum_closed_form(&scheme, rho.purity());
            let total = scheme_total(&scheme, &rho)?;
            Ok((sum - closed).abs().max(total.deviation()))
        })
        .collect::<crate::Result<_>>()?;
    let max_deviation = deviations.iter().copied().fold(0.0, f64::max);
    let passed = max_deviation <= VALIDATION_TOL;
    let mut out = json!({
        "variant": scheme.variant,
        "d": args.d,
        "trials": args.trials,
        "seed": args.seed,
        "max_deviation": max_deviation,
        "tolerance": VALIDATION_TOL,
        "passed": passed,
    });
    for key in ["kappa", "a", "t", "search"] {
        if let Some(v) = summary.get(key) {
            out[key] = v.clone();
        }
    }
    Ok((if passed { EXIT_OK } else { EXIT_CHECK_FAILED }, out))
}

fn scheme_from_value(v: &Value) -> crate::Result<MeasurementScheme> {
    serde_json::from_value::<SchemeJson>(v.clone())?.to_scheme()
}

fn channel(action: ChannelAction) -> Outcome {
    match action {
        ChannelAction::Apply { channel, state } => {
            let phi = load_channel(&channel)?;
            let rho = load_state(&state)?;
            let out = phi.apply(&rho)?;
            Ok((
                EXIT_OK,
                json!({
                    "state": MatrixJson::from_matrix(out.matrix()),
                    "purity": out.purity(),
                    "trace": out.operator().trace(),
                }),
            ))
        }
        ChannelAction::Check { channel } => {
            let phi = load_channel(&channel)?;
            Ok((
                EXIT_OK,
                json!({
                    "d": phi.dim(),
                    "kraus_count": phi.kraus().len(),
                    "trace_preservation_defect": phi.trace_preservation_defect(),
                    "unitality_defect": phi.unitality_defect(),
                    "unital": phi.is_unital(UNITALITY_TOL),
                    "bistochastic": phi.is_bistochastic(UNITALITY_TOL),
                }),
            ))
        }
        ChannelAction::Norms { channel, state } => {
            let phi = load_channel(&channel)?;
            let report = non_unitality(&phi)?;
            let image = phi.apply(&DensityOperator::maximally_mixed(phi.dim())?)?;
            let lemma = norm_bound_lemma(image.operator())?;
            let mut ok = report.bound_holds() && lemma.holds;
            let mut out = json!({
                "d": phi.dim(),
                "gamma": MatrixJson::from_matrix(report.gamma.matrix()),
                "hs_norm": report.hs_norm,
                "hs_norm_from_purity": report.hs_norm_from_purity,
                "map_norm": report.map_norm,
                "bound": report.bound,
                "bound_holds": report.bound_holds(),
                "norm_lemma": lemma,
                "bistochastic": phi.is_bistochastic(UNITALITY_TOL),
            });
            if let Some(path) = state {
                let rho = load_state(&path)?;
                if phi.is_bistochastic(UNITALITY_TOL) {
                    let m = monotonicity_check(&phi, &rho)?;
                    ok &= m.holds;
                    out["monotonicity"] = to_value(&m);
                } else {
                    out["monotonicity"] = json!(null);
                }
            }
            Ok((if ok { EXIT_OK } else { EXIT_CHECK_FAILED }, out))
        }
    }
}

fn rand(what: RandAction) -> Outcome {
    match what {
        RandAction::Channel {
            d,
            kind,
            seed,
            lambda,
            target,
            env_dim,
            unitaries,
            output,
        } => {
            let kind = match kind {
                ChannelFamily::Bistochastic => ChannelKind::Bistochastic { unitaries },
                ChannelFamily::Generic => ChannelKind::Generic {
                    env_dim: env_dim.unwrap_or(d),
                },
                ChannelFamily::Depolarizing => ChannelKind::Depolarizing { lambda },
                ChannelFamily::Contraction => ChannelKind::Contraction { target },
                ChannelFamily::Unitary => ChannelKind::Unitary,
            };
            let phi = sample_channel(d, kind, seed)?;
            let summary = json!({"d": d, "kind": kind, "seed": seed, "kraus_count": phi.kraus().len()});
            let out = emit(summary, "channel", &ChannelJson::from_channel(&phi), output.as_deref(), |p| {
                io::save_channel(p, &phi)
            })?;
            Ok((EXIT_OK, out))
        }
        RandAction::State { d, kind, seed, output } => {
            let kind = match kind {
                StateFamily::Pure => StateKind::Pure,
                StateFamily::Mixed => StateKind::Mixed,
            };
            let rho = sample_random_state(d, kind, seed)?;
            let summary = json!({"d": d, "kind": kind, "seed": seed, "purity": rho.purity()});
            let out = emit(summary, "state", &MatrixJson::from_matrix(rho.matrix()), output.as_deref(), |p| {
                io::save_state(p, &rho)
            })?;
            Ok((EXIT_OK, out))
        }
    }
}

fn probe(args: ProbeArgs) -> Outcome {
    let report = match args.report {
        Some(ProbeReportCmd::Report { shots }) => {
            let record = io::load_shots(&shots).map_err(|e| Failure::loading(&shots, e))?;
            report_from_shots(&record)?
        }
        None => {
            let (Some(channel), Some(scheme), Some(n)) = (args.channel, args.scheme, args.shots) else {
                return Err(Failure::usage("probe needs --channel, --scheme and --shots (or `probe report --shots FILE`)"));
            };
            let phi = load_channel(&channel)?;
            let scheme = load_scheme(&scheme)?;
            let validation = validate_scheme(&scheme);
            if !validation.passed {
                return Ok((
                    EXIT_CHECK_FAILED,
                    json!({"error": {"kind": "invalid_scheme", "message": "scheme failed validation"}, "validation": validation}),
                ));
            }
            let (report, record) = probe_channel(&phi, &scheme, n, args.seed, args.eta)?;
            if let Some(path) = args.save_shots {
                io::save_shots(&path, &record).map_err(|e| Failure::loading(&path, e))?;
            }
            report
        }
    };
    let code = if report.consistent { EXIT_OK } else { EXIT_CHECK_FAILED };
    Ok((code, to_value(&report)))
}

//! Command-line front end: every operation behind one binary with
//! machine-readable output.
//!
//! Output contract: JSON results are wrapped in an envelope carrying the
//! schema version, the fully resolved run configuration, and a provenance
//! tag per numeric field ("exact", "spectral", "asymptotic", "quadrature").
//! Rationals are always rendered as "numerator/denominator" strings.
//! Identical invocations produce byte-identical output. Errors go to stderr
//! as single-line JSON records; exit codes: 0 success, 1 domain error,
//! 2 usage error, 3 non-convergence.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::dispersion::{
    build_profile_spectral, ratio_row, reconstruct_real_energy, LargeOrderModel, ProfileOptions,
};
use crate::error::{Error, Result};
use crate::instanton::{
    action_closed_form, action_from_beta, decay_width_series, instanton_action_numeric_with_tol,
    instanton_trajectory, width_optimal_truncation,
};
use crate::oscillator::OscillatorSpec;
use crate::perturbation::{oracle::oracle_rs_coefficients, perturb_coefficients};
use crate::series::interchange::{SeriesDoc, SCHEMA_VERSION};
use crate::series::rat_to_string;
use crate::spectra::{resonance_energy, strong_coupling_leading};

pub const PRECISION_ENV: &str = "ANHARMONIC_PRECISION";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Tsv,
}

impl OutputFormat {
    fn name(&self) -> &'static str {
        match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Tsv => "tsv",
        }
    }

    fn separator(&self) -> &'static str {
        match self {
            OutputFormat::Csv => ",",
            _ => "\t",
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "anharmonic",
    version,
    about = "Resonance energies of cubic and quartic anharmonic oscillators",
    disable_help_subcommand = true
)]
struct Cli {
    /// Output format (tabular subcommands accept csv/tsv).
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: OutputFormat,
    /// Working precision in decimal digits for quadrature tolerances and
    /// tabular float rendering (env ANHARMONIC_PRECISION, default 13).
    #[arg(long, global = true)]
    precision: Option<u32>,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact perturbation-series coefficients from the power-series recursion.
    Perturb {
        #[arg(long)]
        degree: u32,
        #[arg(long, default_value_t = 0)]
        level: u32,
        #[arg(long)]
        orders: usize,
    },
    /// Cross-check the recursion against the sum-over-states oracle (K <= 4).
    Oracle {
        #[arg(long)]
        degree: u32,
        #[arg(long, default_value_t = 0)]
        level: u32,
        #[arg(long, default_value_t = 4)]
        orders: usize,
    },
    /// One-instanton decay width with optimal truncation and error estimate.
    Widths {
        #[arg(long)]
        degree: u32,
        #[arg(long, default_value_t = 0)]
        level: u32,
        #[arg(long, allow_hyphen_values = true)]
        coupling: f64,
        /// Fixed bracket order instead of optimal truncation.
        #[arg(long)]
        orders: Option<usize>,
    },
    /// Complex resonance eigenvalue from the rotated spectral method.
    Resonance {
        #[arg(long)]
        degree: u32,
        #[arg(long, default_value_t = 0)]
        level: u32,
        #[arg(long, allow_hyphen_values = true)]
        coupling: f64,
        #[arg(long, default_value_t = 256)]
        basis: usize,
        /// Rotation angle in radians (default 0.4 cubic / 0.35 quartic).
        #[arg(long)]
        theta: Option<f64>,
    },
    /// Strong-coupling coefficients e_n of the cubic.
    Strongcoupling {
        /// Single level; all of 0..=2 when omitted.
        #[arg(long)]
        level: Option<u32>,
    },
    /// Instanton actions (quadrature, Beta-function route, closed form) and
    /// optional trajectory dump.
    Instanton {
        #[arg(long)]
        degree: u32,
        /// Emit a (t, position) table with this many samples.
        #[arg(long)]
        trajectory_samples: Option<usize>,
        #[arg(long, default_value_t = 10.0)]
        t_max: f64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        branch: i8,
    },
    /// Dispersion reconstruction of the real energy from a spectral profile.
    Dispersion {
        #[arg(long)]
        degree: u32,
        #[arg(long, default_value_t = 0)]
        level: u32,
        #[arg(long, allow_hyphen_values = true)]
        coupling: f64,
        #[arg(long, default_value_t = 40)]
        nodes: usize,
        #[arg(long, default_value_t = 256)]
        basis: usize,
    },
    /// Exact-vs-asymptotic coefficient ratio table.
    Largeorder {
        #[arg(long)]
        degree: u32,
        #[arg(long, default_value_t = 0)]
        level: u32,
        /// Highest order K in the table.
        #[arg(long, default_value_t = 40)]
        orders: usize,
        /// Subleading corrections applied to the prediction.
        #[arg(long, default_value_t = 2)]
        corrections: usize,
    },
    /// Run the full acceptance suite and print one pass/fail line per criterion.
    Checkall {
        /// Run a single criterion by index (1-10).
        #[arg(long)]
        criterion: Option<usize>,
    },
}

#[derive(Debug, Clone, Serialize)]
struct ResolvedConfig {
    subcommand: String,
    degree_m: Option<u32>,
    level_n: Option<u32>,
    coupling_g: Option<f64>,
    orders: Option<usize>,
    basis_n: Option<usize>,
    theta: Option<f64>,
    output_format: String,
    precision_digits: u32,
    output_path: Option<String>,
}

struct Report {
    results: Value,
    provenance: BTreeMap<&'static str, &'static str>,
    warnings: Vec<String>,
    /// Tabular projection: (header, rows) for csv/tsv formats.
    table: Option<(Vec<&'static str>, Vec<Vec<String>>)>,
}

impl Report {
    fn new(results: Value) -> Self {
        Report { results, provenance: BTreeMap::new(), warnings: Vec::new(), table: None }
    }

    fn tag(mut self, field: &'static str, provenance: &'static str) -> Self {
        self.provenance.insert(field, provenance);
        self
    }

    fn warn(mut self, message: impl Into<String>) -> Self {
        self.warnings.push(message.into());
        self
    }

    fn with_table(mut self, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        self.table = Some((header, rows));
        self
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema_version: u32,
    config: &'a ResolvedConfig,
    results: &'a Value,
    provenance: &'a BTreeMap<&'static str, &'static str>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    warnings: &'a Vec<String>,
}

/// Entry point used by `main` and by in-process tests.
pub fn run(argv: &[String]) -> i32 {
    match run_inner(argv) {
        Ok(code) => code,
        Err(e) => {
            eprintln!(
                "{}",
                json!({"error": e.to_string(), "kind": error_kind(&e), "exit_code": e.exit_code()})
            );
            e.exit_code()
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Domain(_) => "domain",
        Error::Range(_) => "range",
        Error::Unsupported(_) => "unsupported",
        Error::ResourceGuard(_) => "resource_guard",
        Error::NonConverged(_) => "non_converged",
        Error::Usage(_) => "usage",
        Error::Parse(_) => "parse",
        Error::Io(_) => "io",
        Error::Json(_) => "json",
    }
}

fn run_inner(argv: &[String]) -> Result<i32> {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return Ok(0);
            }
            let first_line = e.to_string().lines().next().unwrap_or("bad arguments").to_string();
            return Err(Error::Usage(first_line));
        }
    };

    let precision = resolve_precision(cli.precision)?;
    let config = resolve_config(&cli, precision);

    if let Command::Checkall { criterion } = &cli.command {
        return run_checkall(*criterion, cli.output.as_deref());
    }

    let report = match &cli.command {
        Command::Perturb { degree, level, orders } => cmd_perturb(*degree, *level, *orders)?,
        Command::Oracle { degree, level, orders } => cmd_oracle(*degree, *level, *orders)?,
        Command::Widths { degree, level, coupling, orders } => {
            cmd_widths(*degree, *level, *coupling, *orders)?
        }
        Command::Resonance { degree, level, coupling, basis, theta } => {
            cmd_resonance(*degree, *level, *coupling, *basis, *theta)?
        }
        Command::Strongcoupling { level } => cmd_strongcoupling(*level)?,
        Command::Instanton { degree, trajectory_samples, t_max, branch } => {
            cmd_instanton(*degree, *trajectory_samples, *t_max, *branch, precision)?
        }
        Command::Dispersion { degree, level, coupling, nodes, basis } => {
            cmd_dispersion(*degree, *level, *coupling, *nodes, *basis)?
        }
        Command::Largeorder { degree, level, orders, corrections } => {
            cmd_largeorder(*degree, *level, *orders, *corrections)?
        }
        Command::Checkall { .. } => unreachable!("handled above"),
    };

    let text = render(&cli, &config, &report, precision)?;
    emit(cli.output.as_deref(), &text)?;
    Ok(0)
}

fn resolve_precision(flag: Option<u32>) -> Result<u32> {
    let digits = match flag {
        Some(d) => d,
        None => match std::env::var(PRECISION_ENV) {
            Ok(s) => s
                .parse::<u32>()
                .map_err(|_| Error::Usage(format!("{PRECISION_ENV} must be an integer, got {s:?}")))?,
            Err(_) => 13,
        },
    };
    if !(3..=15).contains(&digits) {
        return Err(Error::Usage(format!(
            "--precision must lie in 3..=15 decimal digits (binary64 evaluation), got {digits}"
        )));
    }
    Ok(digits)
}

fn resolve_config(cli: &Cli, precision: u32) -> ResolvedConfig {
    let (subcommand, degree_m, level_n, coupling_g, orders, basis_n, theta) = match &cli.command {
        Command::Perturb { degree, level, orders } => {
            ("perturb", Some(*degree), Some(*level), None, Some(*orders), None, None)
        }
        Command::Oracle { degree, level, orders } => {
            ("oracle", Some(*degree), Some(*level), None, Some(*orders), None, None)
        }
        Command::Widths { degree, level, coupling, orders } => {
            ("widths", Some(*degree), Some(*level), Some(*coupling), *orders, None, None)
        }
        Command::Resonance { degree, level, coupling, basis, theta } => (
            "resonance",
            Some(*degree),
            Some(*level),
            Some(*coupling),
            None,
            Some(*basis),
            Some(theta.unwrap_or_else(|| default_theta(*degree))),
        ),
        Command::Strongcoupling { level } => {
            ("strongcoupling", Some(3), *level, None, None, None, None)
        }
        Command::Instanton { degree, trajectory_samples, .. } => {
            ("instanton", Some(*degree), None, None, *trajectory_samples, None, None)
        }
        Command::Dispersion { degree, level, coupling, nodes, basis } => (
            "dispersion",
            Some(*degree),
            Some(*level),
            Some(*coupling),
            Some(*nodes),
            Some(*basis),
            Some(default_theta(*degree)),
        ),
        Command::Largeorder { degree, level, orders, .. } => {
            ("largeorder", Some(*degree), Some(*level), None, Some(*orders), None, None)
        }
        Command::Checkall { criterion } => ("checkall", None, None, None, *criterion, None, None),
    };
    ResolvedConfig {
        subcommand: subcommand.to_string(),
        degree_m,
        level_n,
        coupling_g,
        orders,
        basis_n,
        theta,
        output_format: cli.format.name().to_string(),
        precision_digits: precision,
        output_path: cli.output.as_ref().map(|p| p.display().to_string()),
    }
}

fn default_theta(degree: u32) -> f64 {
    if degree % 2 == 1 {
        0.4
    } else {
        0.35
    }
}

fn cmd_perturb(degree: u32, level: u32, orders: usize) -> Result<Report> {
    let spec = OscillatorSpec::new(degree, level)?;
    let series = perturb_coefficients(&spec, orders)?;
    let doc = SeriesDoc::from_series(&series);
    let rows = doc
        .coefficients
        .iter()
        .enumerate()
        .map(|(k, c)| vec![k.to_string(), c.clone()])
        .collect();
    Ok(Report::new(serde_json::to_value(&doc)?)
        .tag("coefficients", "exact")
        .with_table(vec!["K", "coefficient"], rows))
}

fn cmd_oracle(degree: u32, level: u32, orders: usize) -> Result<Report> {
    let spec = OscillatorSpec::new(degree, level)?;
    let recursion = perturb_coefficients(&spec, orders)?;
    let oracle = oracle_rs_coefficients(&spec, orders)?;
    let agree = recursion.coefficients() == oracle.coefficients();
    if !agree {
        return Err(Error::Domain(
            "recursion and sum-over-states oracle disagree; the build is unsound".into(),
        ));
    }
    Ok(Report::new(json!({
        "orders_checked": orders,
        "agree": agree,
        "recursion": recursion.coefficients().iter().map(rat_to_string).collect::<Vec<_>>(),
        "oracle": oracle.coefficients().iter().map(rat_to_string).collect::<Vec<_>>(),
    }))
    .tag("recursion", "exact")
    .tag("oracle", "exact"))
}

fn cmd_widths(degree: u32, level: u32, coupling: f64, orders: Option<usize>) -> Result<Report> {
    let estimate = match orders {
        Some(k) => {
            let value = crate::instanton::imag_energy(degree, level, coupling, k)?;
            let series = decay_width_series(degree, level)?;
            let next = (k + 1).min(series.bracket.k_max());
            let terms = series.bracket.terms_f64(coupling, next)?;
            let error = series.ln_prefactor(coupling)?.exp() * terms[next].abs();
            crate::instanton::WidthEstimate {
                value,
                error_estimate: error,
                orders_used: k + 1,
                reached_optimum: false,
                ln_magnitude: value.abs().ln(),
            }
        }
        None => width_optimal_truncation(degree, level, coupling)?,
    };
    let relative = estimate.error_estimate / estimate.value.abs().max(f64::MIN_POSITIVE);
    let mut report = Report::new(json!({
        "imag_energy": estimate.value,
        "error_estimate": estimate.error_estimate,
        "orders_used": estimate.orders_used,
        "reached_optimum": estimate.reached_optimum,
        "ln_magnitude": estimate.ln_magnitude,
        "relative_error_estimate": relative,
    }))
    .tag("imag_energy", "asymptotic")
    .tag("error_estimate", "asymptotic");
    if relative > 0.05 {
        report = report.warn(format!(
            "asymptotic series unreliable at coupling {coupling}: truncation error estimate is {:.1}% of the value",
            relative * 100.0
        ));
    }
    Ok(report)
}

fn cmd_resonance(
    degree: u32,
    level: u32,
    coupling: f64,
    basis: usize,
    theta: Option<f64>,
) -> Result<Report> {
    let theta = theta.unwrap_or_else(|| default_theta(degree));
    let spec = OscillatorSpec::new(degree, level)?.with_coupling(coupling);
    let r = resonance_energy(&spec, level, basis, theta)?;
    let mut report = Report::new(json!({
        "energy_re": r.energy.re,
        "energy_im": r.energy.im,
        "basis_n": r.basis_size_n,
        "theta": r.rotation_theta,
        "stability": r.stability,
        "overlap": r.overlap,
        "converged": r.converged,
    }))
    .tag("energy_re", "spectral")
    .tag("energy_im", "spectral")
    .tag("stability", "spectral");
    if !r.converged {
        report = report.warn(format!(
            "resonance not converged: stability {:.3e} above threshold; raise --basis",
            r.stability
        ));
    }
    Ok(report)
}

fn cmd_strongcoupling(level: Option<u32>) -> Result<Report> {
    let levels: Vec<u32> = match level {
        Some(n) => vec![n],
        None => vec![0, 1, 2],
    };
    let mut rows = Vec::new();
    for n in &levels {
        let r = strong_coupling_leading(*n)?;
        rows.push(json!({
            "level": n,
            "e_n": r.modulus,
            "phase_error": r.phase_error,
            "stability": r.stability,
        }));
    }
    Ok(Report::new(json!({ "levels": rows })).tag("levels", "spectral"))
}

fn cmd_instanton(
    degree: u32,
    trajectory_samples: Option<usize>,
    t_max: f64,
    branch: i8,
    precision: u32,
) -> Result<Report> {
    let tol = 10f64.powi(-(precision as i32));
    let numeric = instanton_action_numeric_with_tol(degree, 40.0, tol)?;
    let beta_route = action_from_beta(degree)?;
    let closed = action_closed_form(degree)?;
    let mut report = Report::new(json!({
        "degree": degree,
        "action_numeric": numeric,
        "action_beta": beta_route,
        "closed_form": rat_to_string(&closed),
    }))
    .tag("action_numeric", "quadrature")
    .tag("action_beta", "exact")
    .tag("closed_form", "exact");
    if let Some(samples) = trajectory_samples {
        if samples < 2 {
            return Err(Error::Usage("--trajectory-samples must be >= 2".into()));
        }
        let mut rows = Vec::with_capacity(samples);
        for i in 0..samples {
            let t = -t_max + 2.0 * t_max * i as f64 / (samples - 1) as f64;
            let q = instanton_trajectory(degree, t, branch)?;
            rows.push(vec![
                format_sig(t, precision as usize),
                format_sig(q, precision as usize),
            ]);
        }
        report = report.with_table(vec!["t", "position"], rows);
    }
    Ok(report)
}

fn cmd_dispersion(
    degree: u32,
    level: u32,
    coupling: f64,
    nodes: usize,
    basis: usize,
) -> Result<Report> {
    let mut opts = ProfileOptions::for_degree(degree);
    opts.nodes = nodes;
    opts.basis_n = basis;
    let profile = build_profile_spectral(degree, level, &opts)?;
    let reconstructed = reconstruct_real_energy(&profile, level, coupling)?;
    let spec = OscillatorSpec::new(degree, level)?.with_coupling(coupling);
    let reference = resonance_energy(&spec, level, basis, opts.theta)?;
    Ok(Report::new(json!({
        "coupling": coupling,
        "reconstructed": reconstructed,
        "spectral_reference": reference.energy.re,
        "difference": reconstructed - reference.energy.re,
        "nodes": nodes,
        "sigma_range": [opts.sigma_min, opts.sigma_max],
    }))
    .tag("reconstructed", "quadrature")
    .tag("spectral_reference", "spectral"))
}

fn cmd_largeorder(degree: u32, level: u32, orders: usize, corrections: usize) -> Result<Report> {
    let spec = OscillatorSpec::new(degree, level)?;
    let exact = perturb_coefficients(&spec, orders)?;
    let model = LargeOrderModel::from_width_series(&decay_width_series(degree, level)?);
    // Gamma(K + b - j) needs K + b - j > 0; start the table at the first
    // valid order for the requested correction count
    let k_min = ((corrections as f64 - model.power_b).floor() as usize + 1).max(1);
    if k_min > orders {
        return Err(Error::Usage(format!(
            "--orders {orders} leaves no valid rows for --corrections {corrections} (first valid K is {k_min})"
        )));
    }
    let mut rows_json = Vec::new();
    let mut rows_tab = Vec::new();
    for k in k_min..=orders {
        let (exact_str, predicted, ratio) =
            ratio_row(exact.coefficient(k)?, &model, k as u32, corrections)?;
        rows_json.push(json!({"K": k, "exact": exact_str, "predicted": predicted, "ratio": ratio}));
        rows_tab.push(vec![k.to_string(), exact_str, format!("{predicted:e}"), ratio.to_string()]);
    }
    Ok(Report::new(json!({ "corrections": corrections, "rows": rows_json }))
        .tag("rows", "asymptotic")
        .with_table(vec!["K", "exact", "predicted", "ratio"], rows_tab))
}

fn run_checkall(criterion: Option<usize>, output: Option<&std::path::Path>) -> Result<i32> {
    let reports = match criterion {
        Some(idx) => vec![crate::acceptance::run_criterion(idx)?],
        None => crate::acceptance::run_all(),
    };
    let mut text = String::new();
    let mut all_passed = true;
    for r in &reports {
        all_passed &= r.passed;
        text.push_str(&r.summary_line());
        text.push('\n');
    }
    text.push_str(&format!(
        "{}/{} criteria passed\n",
        reports.iter().filter(|r| r.passed).count(),
        reports.len()
    ));
    emit(output, &text)?;
    Ok(if all_passed { 0 } else { 1 })
}

fn format_sig(x: f64, digits: usize) -> String {
    format!("{x:.*e}", digits.saturating_sub(1))
}

fn render(cli: &Cli, config: &ResolvedConfig, report: &Report, precision: u32) -> Result<String> {
    match cli.format {
        OutputFormat::Json => {
            let envelope = Envelope {
                schema_version: SCHEMA_VERSION,
                config,
                results: &report.results,
                provenance: &report.provenance,
                warnings: &report.warnings,
            };
            Ok(serde_json::to_string_pretty(&envelope)? + "\n")
        }
        OutputFormat::Csv | OutputFormat::Tsv => {
            let (header, rows) = report.table.as_ref().ok_or_else(|| {
                Error::Usage(format!(
                    "--format {} is only available for tabular subcommands (perturb, largeorder, instanton with --trajectory-samples); use json",
                    cli.format.name()
                ))
            })?;
            let sep = cli.format.separator();
            let mut out = String::new();
            out.push_str(&format!("# command: {}\n", reconstruct_command_line(config, precision)));
            out.push_str(&header.join(sep));
            out.push('\n');
            for row in rows {
                out.push_str(&row.join(sep));
                out.push('\n');
            }
            Ok(out)
        }
    }
}

/// Regenerable-figure header: the resolved configuration as a command line.
fn reconstruct_command_line(config: &ResolvedConfig, precision: u32) -> String {
    let mut parts = vec!["anharmonic".to_string(), config.subcommand.clone()];
    if let Some(d) = config.degree_m {
        parts.push(format!("--degree {d}"));
    }
    if let Some(n) = config.level_n {
        parts.push(format!("--level {n}"));
    }
    if let Some(g) = config.coupling_g {
        parts.push(format!("--coupling {g}"));
    }
    if let Some(k) = config.orders {
        parts.push(format!("--orders {k}"));
    }
    if let Some(b) = config.basis_n {
        parts.push(format!("--basis {b}"));
    }
    parts.push(format!("--format {}", config.output_format));
    parts.push(format!("--precision {precision}"));
    parts.join(" ")
}

fn emit(path: Option<&std::path::Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => {
            let mut f = std::fs::File::create(p)?;
            f.write_all(text.as_bytes())?;
        }
        None => {
            print!("{text}");
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(s: &str) -> Vec<String> {
        s.split_whitespace().map(str::to_string).collect()
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(&args("anharmonic perturb")), 2); // missing --degree/--orders
        assert_eq!(run(&args("anharmonic nonsense")), 2);
        assert_eq!(run(&args("anharmonic resonance --degree 3 --coupling 0.02 --format csv")), 2);
    }

    #[test]
    fn domain_errors_exit_1() {
        // coupling in the stable region
        assert_eq!(run(&args("anharmonic widths --degree 3 --level 0 --coupling -0.5")), 1);
    }

    #[test]
    fn perturb_writes_expected_json() {
        let path = std::env::temp_dir().join("anharmonic_cli_test_perturb.json");
        let cmd = format!(
            "anharmonic perturb --degree 3 --level 0 --orders 2 --output {}",
            path.display()
        );
        assert_eq!(run(&args(&cmd)), 0);
        let text = std::fs::read_to_string(&path).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["results"]["coefficients"][0], "1/2");
        assert_eq!(v["results"]["coefficients"][1], "-11/8");
        assert_eq!(v["results"]["coefficients"][2], "-465/32");
        assert_eq!(v["provenance"]["coefficients"], "exact");
        assert_eq!(v["config"]["subcommand"], "perturb");
        std::fs::remove_file(&path).ok();
    }

    #[test]
    fn unreliable_widths_warn_but_exit_zero() {
        let path = std::env::temp_dir().join("anharmonic_cli_test_widths.json");
        let cmd = format!(
            "anharmonic widths --degree 4 --level 0 --coupling -1 --output {}",
            path.display()
        );
        assert_eq!(run(&args(&cmd)), 0);
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.contains("unreliable"), "{text}");
        std::fs::remove_file(&path).ok();
    }

    #[test]
    fn tsv_table_carries_command_header() {
        let path = std::env::temp_dir().join("anharmonic_cli_test.tsv");
        let cmd = format!(
            "anharmonic perturb --degree 4 --level 0 --orders 3 --format tsv --output {}",
            path.display()
        );
        assert_eq!(run(&args(&cmd)), 0);
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("# command: anharmonic perturb --degree 4"), "{text}");
        assert!(text.contains("K\tcoefficient"));
        assert!(text.contains("1\t3/4"));
        std::fs::remove_file(&path).ok();
    }

    #[test]
    fn precision_flag_is_validated() {
        assert_eq!(run(&args("anharmonic perturb --degree 3 --orders 1 --precision 99")), 2);
    }
}

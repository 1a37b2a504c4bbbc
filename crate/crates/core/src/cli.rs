//! Command-line front end.
//!
//! Every subcommand reads an optional JSON config (`--config`), overlays the
//! flags given on the command line, and writes its artifacts next to the
//! `--out` prefix. Numbers are taken as decimal strings throughout so values
//! keep their full precision from the config to the working context.
//!
//! Precision: `--bits` (or `"bits"` in the config) fixes the working
//! precision; otherwise `SUPEROSC_BITS` is used, and failing that the
//! condition-number estimate plus `--guard-bits`.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prolate::{NodeGeometry, NodeSpec};
use crate::scaling::{sweep_dx, sweep_n, AmplitudeSource, Sweep, SweepConfig};
use crate::slit::{acceleration_summary, truncate_and_transform, SlitWindow};
use crate::synth::{maximal_superoscillation, synthesize, Wavefunction, WavefunctionDoc};
use crate::verify::verify_wavefunction;
use crate::xprec::{parse_scalar, to_decimal, to_decimal_digits, PrecisionContext, XComplex, XReal};

pub const BITS_ENV: &str = "SUPEROSC_BITS";
/// ψ samples per smallest node gap in the synth CSV.
pub const SAMPLES_PER_GAP: usize = 512;

#[derive(Parser, Debug)]
#[command(name = "superosc", version, about = "Minimum-norm superoscillating wave functions in extended precision")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// JSON config file; flags override its values.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Working precision in bits (default: SUPEROSC_BITS, else estimated).
    #[arg(long, global = true)]
    pub bits: Option<u32>,

    /// Bits added to the estimated precision.
    #[arg(long, global = true)]
    pub guard_bits: Option<u32>,

    /// Significant digits in auxiliary (human-readable) columns.
    #[arg(long, global = true)]
    pub digits: Option<usize>,

    /// Output path prefix; `.json` and `.csv` are appended.
    #[arg(long, short, global = true)]
    pub out: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Minimum-norm wave function through prescribed node amplitudes.
    Synth(NodeArgs),
    /// Normalized wave function with the largest possible node amplitudes.
    Maximal(NodeArgs),
    /// s_min over a grid of Δx/λ_min at fixed N; fits the power law.
    SweepDx(SweepDxArgs),
    /// s_min over a grid of N at fixed Δx/λ_min; fits the exponential law.
    SweepN(SweepNArgs),
    /// Momentum distribution behind a hard-edged slit.
    Slit(SlitArgs),
    /// Interpolation, Parseval, and minimality checks.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Default, Clone)]
pub struct NodeArgs {
    /// Number of equispaced nodes x_k = k·dx.
    #[arg(long)]
    pub n: Option<usize>,
    /// Absolute node spacing.
    #[arg(long, allow_hyphen_values = true)]
    pub dx: Option<String>,
    /// Explicit node positions, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub nodes: Option<Vec<String>>,
    /// Node amplitudes, comma separated; `re:im` for complex values.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub amps: Option<Vec<String>>,
    /// Alternating amplitudes (−1)^k.
    #[arg(long)]
    pub alt: bool,
    /// Momentum cutoff; accepts `pi`, `2*pi`, `pi/2`, decimals.
    #[arg(long = "pmax")]
    pub p_max: Option<String>,
    #[arg(long)]
    pub hbar: Option<String>,
    /// Reuse a wave function JSON written by `synth` or `maximal`.
    #[arg(long)]
    pub from_wavefunction: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct SweepDxArgs {
    #[arg(long)]
    pub n: Option<usize>,
    /// Δx/λ_min values, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub grid: Option<Vec<String>>,
    #[command(flatten)]
    pub common: SweepArgs,
}

#[derive(Args, Debug, Clone)]
pub struct SweepNArgs {
    /// Δx/λ_min.
    #[arg(long)]
    pub ratio: Option<String>,
    /// N values: `4..16`, `4..=16`, or a comma list.
    #[arg(long)]
    pub ns: Option<String>,
    #[command(flatten)]
    pub common: SweepArgs,
}

#[derive(Args, Debug, Clone, Default)]
pub struct SweepArgs {
    #[arg(long = "pmax")]
    pub p_max: Option<String>,
    #[arg(long)]
    pub hbar: Option<String>,
    /// Node amplitudes used for the amplitude column.
    #[arg(long, value_enum)]
    pub amplitudes: Option<AmplitudeArg>,
    /// Record wall-clock time per point (output is then not reproducible).
    #[arg(long)]
    pub timing: bool,
}

#[derive(clap::ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum AmplitudeArg {
    Smin,
    Alt,
}

#[derive(Args, Debug, Clone)]
pub struct SlitArgs {
    #[command(flatten)]
    pub nodes: NodeArgs,
    /// Slit interval `lo,hi`; defaults to the node span.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub window: Option<Vec<String>>,
    /// Half-width of the momentum grid; defaults to 4πħ/Δx.
    #[arg(long)]
    pub p_grid_max: Option<String>,
    /// x quadrature points; defaults to 64 per local wavelength.
    #[arg(long)]
    pub n_quad: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub nodes: NodeArgs,
    /// Random perturbations for the minimality check.
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
}

/// Everything a run can be configured with. Each field is optional; the
/// config file is read first and flags replace individual fields.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub command: Option<String>,
    pub n: Option<usize>,
    pub dx: Option<String>,
    pub nodes: Option<Vec<String>>,
    pub amps: Option<Vec<String>>,
    pub alt: Option<bool>,
    pub p_max: Option<String>,
    pub hbar: Option<String>,
    pub bits: Option<u32>,
    pub guard_bits: Option<u32>,
    pub digits: Option<usize>,
    pub out: Option<String>,
    pub from_wavefunction: Option<String>,
    pub grid: Option<Vec<String>>,
    pub ratio: Option<String>,
    pub ns: Option<Vec<usize>>,
    pub amplitudes: Option<AmplitudeSource>,
    pub timing: Option<bool>,
    pub window: Option<Vec<String>>,
    pub p_grid_max: Option<String>,
    pub n_quad: Option<usize>,
    pub trials: Option<usize>,
    pub seed: Option<u64>,
}

macro_rules! overlay {
    ($base:ident, $top:ident; $($f:ident),*) => {
        ExperimentConfig { $($f: $top.$f.or($base.$f)),* }
    };
}

impl ExperimentConfig {
    /// Fields of `top` replace those of `self` wherever they are set.
    pub fn overlay(self, top: ExperimentConfig) -> ExperimentConfig {
        let base = self;
        overlay!(base, top; command, n, dx, nodes, amps, alt, p_max, hbar, bits, guard_bits, digits, out,
            from_wavefunction, grid, ratio, ns, amplitudes, timing, window, p_grid_max, n_quad, trials, seed)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }

    fn with_nodes(mut self, a: &NodeArgs) -> Self {
        self.n = a.n;
        self.dx = a.dx.clone();
        self.nodes = a.nodes.clone();
        self.amps = a.amps.clone();
        self.alt = a.alt.then_some(true);
        self.p_max = a.p_max.clone();
        self.hbar = a.hbar.clone();
        self.from_wavefunction = a.from_wavefunction.as_ref().map(|p| p.display().to_string());
        self
    }

    fn with_sweep(mut self, a: &SweepArgs) -> Self {
        self.p_max = a.p_max.clone();
        self.hbar = a.hbar.clone();
        self.amplitudes = a.amplitudes.map(|s| match s {
            AmplitudeArg::Smin => AmplitudeSource::SminEigenvector,
            AmplitudeArg::Alt => AmplitudeSource::Alternating,
        });
        self.timing = a.timing.then_some(true);
        self
    }
}

impl Cli {
    /// Command name and the flag layer of the configuration.
    pub fn flag_config(&self) -> Result<(&'static str, ExperimentConfig)> {
        let base = ExperimentConfig {
            bits: self.bits,
            guard_bits: self.guard_bits,
            digits: self.digits,
            out: self.out.clone(),
            ..Default::default()
        };
        Ok(match &self.command {
            Command::Synth(a) => ("synth", base.with_nodes(a)),
            Command::Maximal(a) => ("maximal", base.with_nodes(a)),
            Command::SweepDx(a) => {
                let mut c = base.with_sweep(&a.common);
                c.n = a.n;
                c.grid = a.grid.clone();
                ("sweep-dx", c)
            }
            Command::SweepN(a) => {
                let mut c = base.with_sweep(&a.common);
                c.ratio = a.ratio.clone();
                c.ns = a.ns.as_deref().map(parse_ns).transpose()?;
                ("sweep-n", c)
            }
            Command::Slit(a) => {
                let mut c = base.with_nodes(&a.nodes);
                c.window = a.window.clone();
                c.p_grid_max = a.p_grid_max.clone();
                c.n_quad = a.n_quad;
                ("slit", c)
            }
            Command::Verify(a) => {
                let mut c = base.with_nodes(&a.nodes);
                c.trials = a.trials;
                c.seed = a.seed;
                ("verify", c)
            }
        })
    }

    /// File layer overlaid with the flag layer.
    pub fn resolve(&self) -> Result<(&'static str, ExperimentConfig)> {
        let (name, flags) = self.flag_config()?;
        let file = match &self.config {
            Some(p) => ExperimentConfig::from_file(p)?,
            None => ExperimentConfig::default(),
        };
        if let Some(c) = &file.command {
            if c != name {
                return Err(Error::Config(format!("config is for `{c}`, not `{name}`")));
            }
        }
        let mut cfg = file.overlay(flags);
        cfg.command = Some(name.to_string());
        Ok((name, cfg))
    }
}

/// `4..16` (inclusive, as `4..=16`) or `4,5,6`.
pub fn parse_ns(text: &str) -> Result<Vec<usize>> {
    let bad = || Error::Config(format!("cannot parse N list {text:?}"));
    let t = text.trim();
    if let Some((a, b)) = t.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let lo: usize = a.trim().parse().map_err(|_| bad())?;
        let hi: usize = b.trim().parse().map_err(|_| bad())?;
        if hi < lo {
            return Err(bad());
        }
        return Ok((lo..=hi).collect());
    }
    t.split(',').map(|s| s.trim().parse().map_err(|_| bad())).collect()
}

fn parse_amp(text: &str, ctx: &PrecisionContext) -> Result<XComplex> {
    match text.split_once(':') {
        Some((re, im)) => Ok(XComplex::new(parse_scalar(re, ctx)?, parse_scalar(im, ctx)?)),
        None => Ok(XComplex::from_real(parse_scalar(text, ctx)?)),
    }
}

/// Outcome of a run: lines for stdout, files written, and whether every
/// check passed (only `verify` can fail without an error).
#[derive(Debug, Default)]
pub struct RunOutput {
    pub lines: Vec<String>,
    pub files: Vec<PathBuf>,
    pub passed: bool,
}

impl RunOutput {
    fn say(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    fn write(&mut self, path: PathBuf, contents: &str) -> Result<()> {
        fs::write(&path, contents).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        self.say(format!("wrote {}", path.display()));
        self.files.push(path);
        Ok(())
    }
}

fn output_path(cfg: &ExperimentConfig, name: &str, ext: &str) -> PathBuf {
    let prefix = cfg.out.clone().unwrap_or_else(|| name.to_string());
    PathBuf::from(format!("{prefix}.{ext}"))
}

/// Precision for a node set whose smallest gap is `gap`: explicit bits, then
/// the environment, then the estimate.
fn choose_context(cfg: &ExperimentConfig, n: usize, gap_over_lambda: Option<&XReal>) -> Result<PrecisionContext> {
    let guard = cfg.guard_bits.unwrap_or(PrecisionContext::DEFAULT_GUARD_BITS);
    if let Some(b) = cfg.bits.or_else(env_bits) {
        return PrecisionContext::new(b);
    }
    match gap_over_lambda {
        Some(r) if *r < 0.5 => PrecisionContext::for_problem(n, r, guard),
        _ => PrecisionContext::with_guard(PrecisionContext::MIN_BITS, guard),
    }
}

fn env_bits() -> Option<u32> {
    std::env::var(BITS_ENV).ok().and_then(|v| v.trim().parse().ok())
}

/// Builds the node set from `n`/`dx` or explicit `nodes` at a precision
/// chosen for it.
fn node_spec(cfg: &ExperimentConfig) -> Result<(NodeSpec, PrecisionContext)> {
    let probe = PrecisionContext::new(256)?;
    let p_text = cfg.p_max.as_deref().unwrap_or("pi");
    let h_text = cfg.hbar.as_deref().unwrap_or("1");
    let positions = |ctx: &PrecisionContext| -> Result<Vec<XReal>> {
        match (&cfg.nodes, cfg.n, &cfg.dx) {
            (Some(xs), None, None) => xs.iter().map(|s| parse_scalar(s, ctx)).collect(),
            (None, Some(n), Some(dx)) => {
                let dx = parse_scalar(dx, ctx)?;
                Ok((0..n).map(|k| dx.clone() * k as u32).collect())
            }
            (Some(_), _, _) => Err(Error::Config("give either `nodes` or `n` with `dx`, not both".into())),
            _ => Err(Error::Config("need `n` and `dx`, or `nodes`".into())),
        }
    };
    let xs = positions(&probe)?;
    let geom = NodeGeometry::new(xs, parse_scalar(p_text, &probe)?, parse_scalar(h_text, &probe)?)?;
    let ratio = geom.min_spacing().map(|g| g / geom.lambda_min());
    let ctx = choose_context(cfg, geom.len(), ratio.as_ref())?;
    let geom = NodeGeometry::new(positions(&ctx)?, parse_scalar(p_text, &ctx)?, parse_scalar(h_text, &ctx)?)?;
    let n = geom.len();
    let amps = match (&cfg.amps, cfg.alt.unwrap_or(false)) {
        (Some(_), true) => return Err(Error::Config("give either `amps` or `alt`, not both".into())),
        (Some(a), false) => a.iter().map(|s| parse_amp(s, &ctx)).collect::<Result<Vec<_>>>()?,
        (None, true) => return Ok((NodeSpec::alternating(geom), ctx)),
        (None, false) => vec![XComplex::from_real(ctx.one()); n],
    };
    Ok((NodeSpec::new(geom, amps)?, ctx))
}

fn load_or_synthesize(cfg: &ExperimentConfig) -> Result<Wavefunction> {
    if let Some(path) = &cfg.from_wavefunction {
        let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
        let doc: WavefunctionDoc = serde_json::from_str(&text)?;
        return Wavefunction::from_document(&doc);
    }
    let (spec, ctx) = node_spec(cfg)?;
    synthesize(&spec, ctx)
}

/// ψ sampled at [`SAMPLES_PER_GAP`] points per smallest gap from one gap
/// before the first node to one gap after the last.
pub fn sample_csv(psi: &Wavefunction, digits: usize) -> String {
    let geom = psi.geometry();
    let gap = geom.min_spacing().unwrap_or_else(|| geom.lambda_min() / 2u32);
    let lo = geom.xs()[0].clone() - &gap;
    let hi = geom.xs()[geom.len() - 1].clone() + &gap;
    // whole gaps, ignoring rounding in the last bits of the span
    let gaps = ((hi.clone() - &lo) / &gap).to_f64();
    let count = (gaps - 1e-9).ceil().max(1.0) as usize * SAMPLES_PER_GAP;
    let step = (hi - &lo) / count as u32;
    let mut out = String::from("x,re,im,abs\n");
    for i in 0..=count {
        let x = lo.clone() + step.clone() * i as u32;
        let v = psi.eval_position(&x);
        out.push_str(&format!(
            "{},{},{},{}\n",
            to_decimal(&x),
            to_decimal(&v.re),
            to_decimal(&v.im),
            to_decimal_digits(&v.abs(), digits)
        ));
    }
    out
}

const DEFAULT_DIGITS: usize = 12;

fn run_synth(cfg: &ExperimentConfig, name: &str, maximal: bool, out: &mut RunOutput) -> Result<()> {
    let psi = if maximal {
        let (spec, ctx) = node_spec(cfg)?;
        maximal_superoscillation(spec.geometry(), ctx)?
    } else {
        load_or_synthesize(cfg)?
    };
    let digits = cfg.digits.unwrap_or(DEFAULT_DIGITS);
    out.say(format!("nodes: {}, bits: {}", psi.geometry().len(), psi.context().bits()));
    out.say(format!("norm^2 = {}", to_decimal_digits(psi.norm_sq(), digits)));
    out.say(format!(
        "interpolation residual = {}",
        to_decimal_digits(&psi.interpolation_residual(), 4)
    ));
    if maximal {
        let (s_min, _) = psi.prolate().smallest_eigenpair()?;
        out.say(format!("s_min = {}", to_decimal_digits(&s_min, digits)));
    }
    let json = serde_json::to_string_pretty(&psi.to_document())?;
    out.write(output_path(cfg, name, "json"), &(json + "\n"))?;
    out.write(output_path(cfg, name, "csv"), &sample_csv(&psi, digits))?;
    Ok(())
}

fn sweep_config(cfg: &ExperimentConfig, sweep: Sweep) -> SweepConfig {
    SweepConfig {
        sweep,
        p_max: cfg.p_max.clone().unwrap_or_else(|| "pi".into()),
        hbar: cfg.hbar.clone().unwrap_or_else(|| "1".into()),
        amplitudes: cfg.amplitudes.unwrap_or_default(),
        guard_bits: cfg.guard_bits.unwrap_or(PrecisionContext::DEFAULT_GUARD_BITS),
        bits: cfg.bits.or_else(env_bits),
        timing: cfg.timing.unwrap_or(false),
    }
}

fn run_sweep(cfg: &ExperimentConfig, name: &str, out: &mut RunOutput) -> Result<()> {
    let report = if name == "sweep-dx" {
        let n = cfg.n.ok_or_else(|| Error::Config("sweep-dx needs `n`".into()))?;
        let grid = cfg.grid.clone().ok_or_else(|| Error::Config("sweep-dx needs `grid`".into()))?;
        sweep_dx(&sweep_config(cfg, Sweep::FixedNVaryDx { n, dx_over_lambda: grid }))?
    } else {
        let ratio = cfg.ratio.clone().ok_or_else(|| Error::Config("sweep-n needs `ratio`".into()))?;
        let ns = cfg.ns.clone().ok_or_else(|| Error::Config("sweep-n needs `ns`".into()))?;
        sweep_n(&sweep_config(cfg, Sweep::FixedDxVaryN { dx_over_lambda: ratio, ns }))?
    };
    for p in &report.points {
        let value = match (&p.s_min, &p.error) {
            (Some(s), _) => {
                let ctx = PrecisionContext::new(p.bits_used)?;
                to_decimal_digits(&ctx.parse(s)?, cfg.digits.unwrap_or(DEFAULT_DIGITS))
            }
            (None, Some(e)) => format!("failed: {e}"),
            (None, None) => "failed".into(),
        };
        out.say(format!("{:>10}  s_min = {value}  ({} bits)", p.parameter, p.bits_used));
    }
    if let Some(fit) = &report.fit {
        let label = if name == "sweep-dx" { "alpha" } else { "gamma" };
        out.say(format!(
            "{label} = {:.6}  (R^2 = {:.8}, {} points)",
            report.exponent.unwrap_or(f64::NAN),
            fit.r_squared,
            fit.points
        ));
    }
    if let Some(e) = report.expected_exponent {
        out.say(format!("expected 2(N-1) = {e}"));
    }
    if let Some((a, b)) = report.gamma_halves() {
        out.say(format!("gamma front half = {a:.6}, back half = {b:.6}"));
    }
    if !report.complete {
        out.say("some points failed; raise --bits or --guard-bits");
    }
    out.write(output_path(cfg, name, "csv"), &report.to_csv())?;
    out.write(output_path(cfg, name, "json"), &(report.to_json()? + "\n"))?;
    Ok(())
}

fn run_slit(cfg: &ExperimentConfig, out: &mut RunOutput) -> Result<()> {
    let psi = load_or_synthesize(cfg)?;
    let ctx = psi.context();
    let nodes = psi.nodes().clone();
    let win = match &cfg.window {
        Some(w) if w.len() == 2 => SlitWindow::new(psi, &parse_scalar(&w[0], &ctx)?, &parse_scalar(&w[1], &ctx)?)?,
        Some(_) => return Err(Error::Config("window needs exactly two values `lo,hi`".into())),
        None => SlitWindow::node_span(psi)?,
    };
    let p_grid = match &cfg.p_grid_max {
        Some(p) => parse_scalar(p, &ctx)?,
        None => win.min_p_grid(),
    };
    let n_quad = cfg.n_quad.unwrap_or_else(|| win.recommended_n_quad());
    let report = truncate_and_transform(&win, &p_grid, n_quad)?;
    let summary = acceleration_summary(&report, &nodes);
    let digits = cfg.digits.unwrap_or(DEFAULT_DIGITS);
    out.say(format!("captured probability = {}", to_decimal_digits(&report.captured_probability, digits)));
    out.say(format!("<|p|> = {}", to_decimal_digits(&report.expectation_abs_p, digits)));
    out.say(format!("fraction above p_max = {}", to_decimal_digits(&report.fraction_above_cutoff, digits)));
    out.say(format!(
        "<|p|>/p_max = {:.6}, <|p|>/(pi hbar/dx) = {:.6}, self-acceleration: {}",
        summary.expectation_over_p_max,
        summary.expectation_over_superoscillation,
        if summary.self_accelerated { "yes" } else { "no" }
    ));
    #[derive(Serialize)]
    struct Header<'a> {
        #[serde(flatten)]
        report: crate::slit::SlitHeader,
        summary: &'a crate::slit::AccelerationSummary,
    }
    let header = Header { report: report.header(), summary: &summary };
    out.write(output_path(cfg, "slit", "csv"), &report.to_csv(digits))?;
    out.write(output_path(cfg, "slit", "json"), &(serde_json::to_string_pretty(&header)? + "\n"))?;
    Ok(())
}

fn run_verify(cfg: &ExperimentConfig, out: &mut RunOutput) -> Result<()> {
    let psi = load_or_synthesize(cfg)?;
    let report = verify_wavefunction(&psi, cfg.trials.unwrap_or(100), cfg.seed.unwrap_or(0))?;
    for line in report.lines() {
        out.say(line);
    }
    out.passed = report.all_passed();
    if cfg.out.is_some() {
        out.write(output_path(cfg, "verify", "json"), &(serde_json::to_string_pretty(&report)? + "\n"))?;
    }
    Ok(())
}

/// Runs one resolved configuration.
pub fn execute(name: &str, cfg: &ExperimentConfig) -> Result<RunOutput> {
    let mut out = RunOutput { passed: true, ..Default::default() };
    match name {
        "synth" => run_synth(cfg, name, false, &mut out)?,
        "maximal" => run_synth(cfg, name, true, &mut out)?,
        "sweep-dx" | "sweep-n" => run_sweep(cfg, name, &mut out)?,
        "slit" => run_slit(cfg, &mut out)?,
        "verify" => run_verify(cfg, &mut out)?,
        other => return Err(Error::Config(format!("unknown command {other:?}"))),
    }
    Ok(out)
}

/// Parses `args`, runs, prints, and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = cli.resolve().and_then(|(name, cfg)| execute(name, &cfg));
    match result {
        Ok(out) => {
            for line in &out.lines {
                println!("{line}");
            }
            if out.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let Some(hint) = precision_hint(&e, &cli) {
                eprintln!("hint: {hint}");
            }
            2
        }
    }
}

fn precision_hint(e: &Error, cli: &Cli) -> Option<String> {
    match e {
        Error::NotSpd { .. } | Error::PrecisionExhausted { .. } | Error::NotConverged { .. } | Error::ImaginaryResidue { .. } => {
            let now = cli.bits.or_else(env_bits);
            Some(match now {
                Some(b) => format!("rerun with --bits {} or drop --bits to use the estimate", b * 2),
                None => "rerun with a larger --guard-bits".into(),
            })
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_lists() {
        assert_eq!(parse_ns("4..7").unwrap(), vec![4, 5, 6, 7]);
        assert_eq!(parse_ns("4..=6").unwrap(), vec![4, 5, 6]);
        assert_eq!(parse_ns("2, 3,5").unwrap(), vec![2, 3, 5]);
        assert!(parse_ns("7..4").is_err());
        assert!(parse_ns("a,b").is_err());
    }

    #[test]
    fn flags_override_file() {
        let file = ExperimentConfig { n: Some(4), dx: Some("0.2".into()), bits: Some(200), ..Default::default() };
        let flags = ExperimentConfig { dx: Some("0.1".into()), ..Default::default() };
        let merged = file.overlay(flags);
        assert_eq!(merged.n, Some(4));
        assert_eq!(merged.dx.as_deref(), Some("0.1"));
        assert_eq!(merged.bits, Some(200));
    }

    #[test]
    fn parses_spec_style_flags() {
        let cli = Cli::try_parse_from(["superosc", "synth", "--n", "5", "--dx", "0.1", "--pmax", "pi", "--alt"]).unwrap();
        let (name, cfg) = cli.resolve().unwrap();
        assert_eq!(name, "synth");
        assert_eq!(cfg.alt, Some(true));
        let (spec, ctx) = node_spec(&cfg).unwrap();
        assert_eq!(spec.len(), 5);
        assert_eq!(ctx.bits(), 131);
        // 2·4·log2(20) = 34.6 → 64 + 35 + 32 guard
        assert_eq!(spec.geometry().prec(), 131);

        let cli = Cli::try_parse_from(["superosc", "slit", "--window", "-0.5,1", "--n", "2", "--dx", "0.5"]).unwrap();
        let (_, cfg) = cli.resolve().unwrap();
        assert_eq!(cfg.window.unwrap(), vec!["-0.5".to_string(), "1".to_string()]);
    }

    #[test]
    fn complex_amplitudes() {
        let ctx = PrecisionContext::new(64).unwrap();
        let z = parse_amp("1.5:-2", &ctx).unwrap();
        assert_eq!(z.re, 1.5);
        assert_eq!(z.im, -2);
    }

    #[test]
    fn conflicting_node_inputs_are_rejected() {
        let cfg = ExperimentConfig {
            n: Some(3),
            dx: Some("0.1".into()),
            nodes: Some(vec!["0".into()]),
            ..Default::default()
        };
        assert!(matches!(node_spec(&cfg), Err(Error::Config(_))));
        let cfg = ExperimentConfig { n: Some(3), ..Default::default() };
        assert!(matches!(node_spec(&cfg), Err(Error::Config(_))));
    }
}

//! Command-line front end. Exit codes: 0 success, 1 verified negative,
//! 2 input error.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::dinf::{self, DInfGenerator, DualRoute, FreenessCertificate, WindowReport};
use crate::error::{Error, Result};
use crate::factor_set::FactorSet;
use crate::field::Field;
use crate::group::{FiniteGroup, GroupDescriptor, SubsetMask, DEFAULT_ORDER_CAP};
use crate::groupoid::{is_simple, DecompositionReport, GroupoidAlgebra, PsiReport};
use crate::idempotent::IdempotentGenerator;
use crate::io::{self, FactorSetFile};
use crate::monoid::{MonoidReport, TwistedMonoid};
use crate::s4::{self, ActionReport, InvarianceReport};
use crate::sampling::{Mode, Sampling};
use crate::spectrum::{FreenessReport, ProhibitionSet, Spectrum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "parsigma", version, about = "Twisted partial group algebras of finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// `builtin:<family>:<param>` or a group JSON file.
    #[arg(long, global = true)]
    pub group: Option<String>,
    /// `ones`, `only-identity`, `subgroup:<i,j,..>` or a factor-set JSON file.
    #[arg(long, global = true)]
    pub sigma: Option<String>,
    /// Generator JSON file or inline JSON.
    #[arg(long, global = true)]
    pub gen: Option<String>,
    /// Window bound for the infinite dihedral group.
    #[arg(long, global = true, default_value_t = 6)]
    pub window: i64,
    /// Work over GF(p) instead of the rationals.
    #[arg(long, global = true)]
    pub prime: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Auto)]
    pub mode: ModeArg,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Sample count in sampled mode.
    #[arg(long, global = true, default_value_t = 100_000)]
    pub samples: usize,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Render the report as indented text instead of JSON.
    #[arg(long, global = true)]
    pub text: bool,
    /// Largest group order for which the spectrum is enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    pub cap: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Auto,
    Exhaustive,
    Sampled,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Membership oracle for pm(G).
    Validate,
    /// Prohibitions, the spectrum and the freeness report.
    Omega,
    /// Groupoid decomposition and the Ψ isomorphism check.
    Decompose,
    /// Inverse-monoid axioms of the twisted monoid.
    MonoidCheck,
    /// S₄-symmetry of the coboundary defect.
    S4Check,
    /// Build an idempotent factor set from a generator; the output is a
    /// factor-set file.
    GenIdem,
    /// Windowed checks on the infinite dihedral group.
    Dinf {
        /// Reflection `ba^l` for the fixed-point tests.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        shift: i64,
        /// Comma-separated index set containing 0, e.g. `0,2,-1`.
        #[arg(long, allow_hyphen_values = true)]
        index_set: Option<String>,
    },
}

/// A rendered report and its exit code.
pub struct Outcome {
    pub report: Value,
    pub code: i32,
}

impl Outcome {
    fn new<T: Serialize>(report: &T, ok: bool) -> Outcome {
        Outcome {
            report: serde_json::to_value(report).expect("report types serialize infallibly"),
            code: if ok { EXIT_OK } else { EXIT_NEGATIVE },
        }
    }
}

impl Common {
    fn sampling(&self) -> Sampling {
        let mode = match self.mode {
            ModeArg::Auto => Mode::Auto,
            ModeArg::Exhaustive => Mode::Exhaustive,
            ModeArg::Sampled => Mode::Sampled,
        };
        Sampling { mode, seed: self.seed, samples: self.samples, ..Sampling::default() }
    }

    fn field(&self) -> Result<Field> {
        match self.prime {
            Some(p) => Field::prime(p),
            None => Ok(Field::Rational),
        }
    }

    fn group(&self) -> Result<Option<Arc<FiniteGroup>>> {
        let Some(arg) = &self.group else { return Ok(None) };
        let desc: GroupDescriptor = if arg.starts_with("builtin:") {
            arg.parse()?
        } else {
            io::read_json(&PathBuf::from(arg))?
        };
        Ok(Some(Arc::new(FiniteGroup::build(&desc)?)))
    }

    fn require_group(&self) -> Result<Arc<FiniteGroup>> {
        self.group()?.ok_or_else(|| Error::Schema("--group is required".into()))
    }

    fn sigma(&self) -> Result<FactorSet> {
        let arg = self.sigma.as_deref().unwrap_or("ones");
        let named = |f: fn(Arc<FiniteGroup>, Field) -> FactorSet| -> Result<FactorSet> {
            Ok(f(self.require_group()?, self.field()?))
        };
        match arg {
            "ones" => named(FactorSet::ones),
            "only-identity" => named(FactorSet::only_identity),
            s if s.starts_with("subgroup:") => {
                let grp = self.require_group()?;
                let elems = parse_list::<usize>(&s["subgroup:".len()..])?;
                for &g in &elems {
                    grp.check_element(g)?;
                }
                FactorSet::subgroup_indicator(grp, self.field()?, SubsetMask::from_elements(elems))
            }
            path => io::read_factor_set(&PathBuf::from(path), self.group()?),
        }
    }

    fn generator<T: serde::de::DeserializeOwned>(&self) -> Result<T> {
        let arg = self.gen.as_deref().ok_or_else(|| Error::Schema("--gen is required".into()))?;
        if arg.trim_start().starts_with(['{', '[']) {
            io::from_json(arg)
        } else {
            io::read_json(&PathBuf::from(arg))
        }
    }
}

fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse().map_err(|_| Error::Schema(format!("invalid list entry {t:?}"))))
        .collect()
}

#[derive(Serialize)]
struct OmegaReport {
    order: usize,
    prohibitions: ProhibitionSet,
    minimal_prohibitions: Vec<SubsetMask>,
    omega: Vec<SubsetMask>,
    dimension: usize,
    freeness: FreenessReport,
}

#[derive(Serialize)]
struct DecomposeReport {
    decomposition: DecompositionReport,
    psi: PsiReport,
    simple: bool,
}

#[derive(Serialize)]
struct MonoidCheckReport {
    #[serde(flatten)]
    report: MonoidReport,
    /// `|𝒮^σ(G) ∖ {0}|` over a finite field.
    nonzero_count: Option<usize>,
}

#[derive(Serialize)]
struct S4Report {
    action: ActionReport,
    invariance: InvarianceReport,
}

#[derive(Serialize)]
struct DinfReport {
    generator: DInfGenerator,
    basic_axioms: bool,
    window: WindowReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    shift: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    index_set: Option<BTreeSet<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    delta: Option<DualRoute>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<DualRoute>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<FreenessCertificate>,
}

/// Runs one subcommand and returns its report.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    let c = &cli.common;
    match &cli.command {
        Command::Validate => {
            let cert = c.sigma()?.validate_membership_with_cap(c.cap)?;
            let ok = cert.member;
            Ok(Outcome::new(&cert, ok))
        }
        Command::Omega => {
            let sp = Spectrum::with_cap(c.sigma()?, c.cap)?;
            let report = OmegaReport {
                order: sp.sigma().order(),
                prohibitions: sp.prohibitions().clone(),
                minimal_prohibitions: sp.minimal_prohibitions().to_vec(),
                omega: sp.omega().to_vec(),
                dimension: sp.omega().iter().map(|u| u.len()).sum(),
                freeness: sp.freeness_report(),
            };
            Ok(Outcome::new(&report, true))
        }
        Command::Decompose => {
            let sigma = c.sigma()?;
            let simple = is_simple(&sigma);
            let sp = Spectrum::with_cap(sigma, c.cap)?;
            let ga = GroupoidAlgebra::new(&sp);
            let report = DecomposeReport { decomposition: ga.decompose(), psi: ga.verify_psi_isomorphism(&c.sampling()), simple };
            let ok = report.decomposition.passed() && report.psi.passed();
            Ok(Outcome::new(&report, ok))
        }
        Command::MonoidCheck => {
            let sp = Spectrum::with_cap(c.sigma()?, c.cap)?;
            let m = TwistedMonoid::new(&sp);
            let report = MonoidCheckReport { report: m.verify(&c.sampling()), nonzero_count: m.nonzero_elements().map(|v| v.len()) };
            let ok = report.report.passed();
            Ok(Outcome::new(&report, ok))
        }
        Command::S4Check => {
            let sigma = c.sigma()?;
            let invariance = s4::verify_invariance(&sigma)?;
            let report = S4Report { action: s4::verify_action(sigma.group()), invariance };
            let ok = report.action.passed() && report.invariance.passed();
            Ok(Outcome::new(&report, ok))
        }
        Command::GenIdem => {
            let gen: IdempotentGenerator = c.generator()?;
            let sigma = gen.generate(c.require_group()?, c.field()?)?;
            let ok = sigma.validate_membership_with_cap(c.cap)?.member;
            if !ok {
                eprintln!("generated factor set failed the membership oracle");
            }
            Ok(Outcome::new(&FactorSetFile::from_factor_set(&sigma, true), ok))
        }
        Command::Dinf { shift, index_set } => {
            let gen: DInfGenerator = c.generator()?;
            gen.validate()?;
            let window = dinf::window_prohibition_check(&gen, c.window)?;
            let basic_axioms = dinf::window_basic_axioms(&gen, c.window);
            let mut report = DinfReport {
                generator: gen.clone(),
                basic_axioms,
                window,
                shift: None,
                index_set: None,
                delta: None,
                lambda: None,
                certificate: None,
            };
            let mut ok = report.window.passed && basic_axioms;
            if let Some(arg) = index_set {
                let index: BTreeSet<i64> = parse_list(arg)?.into_iter().collect();
                let delta = dinf::delta_membership(&gen, *shift, &index)?;
                let lambda = dinf::lambda_membership(&gen, *shift, &index)?;
                ok &= delta.agree() && lambda.agree();
                if delta.value() == Some(true) && lambda.value() == Some(true) {
                    let cert = dinf::freeness_certificate(&gen, *shift, &index, c.window)?;
                    ok &= cert.certified;
                    report.certificate = Some(cert);
                } else {
                    ok = false;
                }
                report.shift = Some(*shift);
                report.index_set = Some(index);
                report.delta = Some(delta);
                report.lambda = Some(lambda);
            }
            Ok(Outcome::new(&report, ok))
        }
    }
}

/// Indented `key: value` rendering of a JSON report. Arrays of scalars
/// stay on one line.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_into(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| scalar(x).is_some() && !x.is_array()) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        Value::Array(a) if a.iter().all(|x| x.is_array() && scalar(x).is_some()) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render_into(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_into(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render_into(x, depth + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

/// Parses arguments, runs, writes the report and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    if let Some(n) = cli.common.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("warning: could not configure {n} workers: {e}");
        }
    }
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    let body = if cli.common.text {
        render_text(&outcome.report)
    } else {
        serde_json::to_string_pretty(&outcome.report).expect("JSON values serialize") + "\n"
    };
    match &cli.common.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, body) {
                eprintln!("error: {}: {e}", path.display());
                return EXIT_INPUT;
            }
        }
        None => print!("{body}"),
    }
    outcome.code
}

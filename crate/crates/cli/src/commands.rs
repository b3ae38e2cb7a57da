use std::fmt::Write as _;
use std::fs;
use std::ops::RangeInclusive;

use num_rational::BigRational;
use serde::Serialize;

use equitable::exactla::ExactMatrix;
use equitable::modmodel::checks::{closed_form_suite, flag_suite, pairing_suite, shape_suite};
use equitable::modmodel::{make_spec, FreeScalars, ModuleSpec};
use equitable::recognize::{recognize_triple, Branch, Hints, RecognizeError, ShapeTriple};
use equitable::repkit::{
    build_canonical, dagger_transpose_check, rep, verify_algebra, Axis, BasisId, CanonicalFamily, Generator, RepMatrices,
    SpaceId, VerificationReport,
};
use equitable::scalars::{guarded, QRing, RatFunc, Scalar, ScalarError};
use equitable::transit::{rotator_suite, transition_suite, TransitGraph};

use crate::args::{Backend, Cli, Command, EmitArgs, Format, GlobalOpts, Suite};
use crate::io::{to_json, MatrixFile, TripleFile};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    VerifyFailed,
    Parse(String),
    Recognition(String),
    Resource(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::VerifyFailed => 1,
            CliError::Usage(_) => 2,
            CliError::Parse(_) => 3,
            CliError::Recognition(_) => 4,
            CliError::Resource(_) => 5,
        }
    }

    pub fn message(&self) -> Option<&str> {
        match self {
            CliError::VerifyFailed => None,
            CliError::Usage(m) | CliError::Parse(m) | CliError::Recognition(m) | CliError::Resource(m) => Some(m),
        }
    }
}

/// Output produced by a command, and whether the command succeeded.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn resource(d: usize, e: ScalarError) -> CliError {
    CliError::Resource(format!("d = {d}: {e}"))
}

/// Backends selectable on the command line.
pub trait CliScalar: Scalar {
    fn ring(q: Option<&str>) -> Result<QRing<Self>, CliError>;
}

impl CliScalar for RatFunc {
    fn ring(q: Option<&str>) -> Result<QRing<Self>, CliError> {
        match q {
            None => Ok(QRing::symbolic()),
            Some(_) => Err(usage("--q selects a numeric q and requires --backend rational")),
        }
    }
}

impl CliScalar for BigRational {
    fn ring(q: Option<&str>) -> Result<QRing<Self>, CliError> {
        let q = q.ok_or_else(|| usage("--backend rational requires --q"))?;
        let q0 = BigRational::parse_scalar(q).map_err(|e| usage(format!("--q: {e}")))?;
        QRing::numeric(q0).map_err(|e| usage(format!("--q: {e}")))
    }
}

pub fn parse_range(d: Option<&str>) -> Result<RangeInclusive<usize>, CliError> {
    let d = d.ok_or_else(|| usage("missing --d"))?;
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| usage(format!("--d: '{s}' is not a nonnegative integer")));
    match d.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(usage(format!("--d: empty range {a}..{b}")));
            }
            Ok(a..=b)
        }
        None => {
            let n = num(d)?;
            Ok(n..=n)
        }
    }
}

fn single_d(d: Option<&str>) -> Result<usize, CliError> {
    let r = parse_range(d)?;
    if r.start() != r.end() {
        return Err(usage("this command takes a single value of --d"));
    }
    Ok(*r.start())
}

fn free_scalars<S: Scalar>(pairs: &[String]) -> Result<FreeScalars<S>, CliError> {
    let mut free = FreeScalars::ones();
    for pair in pairs.iter().filter(|p| !p.is_empty()) {
        let (k, v) = pair.split_once('=').ok_or_else(|| usage(format!("--scalars: expected key=value, got '{pair}'")))?;
        let value = S::parse_scalar(v.trim()).map_err(|e| usage(format!("--scalars {k}: {e}")))?;
        if value.is_zero() {
            return Err(usage(format!("--scalars {k}: pairings must be nonzero")));
        }
        free.set(k.trim(), value).map_err(|e| usage(format!("--scalars: {e}; keys are xy*, yz*, zx*, yx*, zy*")))?;
    }
    Ok(free)
}

fn parse_id<T: std::str::FromStr>(s: &str, what: &str, valid: &str) -> Result<T, CliError> {
    s.trim().parse().map_err(|_| usage(format!("unknown {what} '{s}'; valid: {valid}")))
}

const SPACES: &str = "V, V*";
const BASES: &str = "[x]row, [x]col, [x]invrow, [x]invcol and likewise for y, z";
const GENERATORS: &str = "x, y, y_inv, z, n_x, n_y, n_z";
const FAMILIES: &str = "K, Z, E, N, T, P, optionally with ^t, _{q^-1} and Z...Z, e.g. ZE^t_{q^-1}Z";

fn render_matrix<S: Scalar>(m: &ExactMatrix<S>, format: Format) -> String {
    match format {
        Format::Text => to_json(&MatrixFile::from_matrix(m)),
        Format::Table => format!("{m}\n"),
    }
}

fn build_spec<S: Scalar>(ring: &QRing<S>, d: usize, free: &FreeScalars<S>) -> Result<ModuleSpec<S>, CliError> {
    guarded(|| make_spec(d, ring.clone(), free.clone()))
        .map_err(|e| resource(d, e))?
        .map_err(|e| usage(e.to_string()))
}

pub fn run<S: CliScalar>(cli: &Cli) -> Result<Outcome, CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Recognize(args) => recognize::<S>(g, &args.input, args.b.as_deref()),
        Command::Emit(args) => emit::<S>(g, args),
        Command::Verify(args) => verify::<S>(g, &args.suite),
        Command::Transition(args) => {
            let ring = S::ring(g.q.as_deref())?;
            let d = single_d(g.d.as_deref())?;
            let space: SpaceId = parse_id(&args.space, "space", SPACES)?;
            let from: BasisId = parse_id(&args.from, "basis", BASES)?;
            let to: BasisId = parse_id(&args.to, "basis", BASES)?;
            let spec = build_spec(&ring, d, &free_scalars(&g.scalars)?)?;
            let m = guarded(|| TransitGraph::new(&spec, space).transition(from, to)).map_err(|e| resource(d, e))?;
            Ok(Outcome { text: render_matrix(&m, g.format), ok: true })
        }
        Command::Gram(args) => {
            let ring = S::ring(g.q.as_deref())?;
            let d = single_d(g.d.as_deref())?;
            let bv: BasisId = parse_id(&args.v, "basis", BASES)?;
            let bvd: BasisId = parse_id(&args.vdual, "basis", BASES)?;
            let spec = build_spec(&ring, d, &free_scalars(&g.scalars)?)?;
            let m = guarded(|| spec.gram(bv, bvd))
                .map_err(|e| resource(d, e))?
                .map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(Outcome { text: render_matrix(&m, g.format), ok: true })
        }
    }
}

fn emit<S: CliScalar>(g: &GlobalOpts, args: &EmitArgs) -> Result<Outcome, CliError> {
    let ring = S::ring(g.q.as_deref())?;
    let d = single_d(g.d.as_deref())?;
    let text = if let Some(name) = &args.family {
        let fam: CanonicalFamily = parse_id(name, "matrix family", FAMILIES)?;
        let m = guarded(|| build_canonical(&ring, fam, d)).map_err(|e| resource(d, e))?;
        render_matrix(&m, g.format)
    } else if let Some(spec) = &args.rep {
        let parts: Vec<&str> = spec.split(':').collect();
        let [space, basis, gen] = parts[..] else {
            return Err(usage(format!("--rep expects SPACE:BASIS:GENERATOR, got '{spec}'")));
        };
        let space: SpaceId = parse_id(space, "space", SPACES)?;
        let basis: BasisId = parse_id(basis, "basis", BASES)?;
        let gen: Generator = parse_id(gen, "generator", GENERATORS)?;
        let m = guarded(|| rep(&ring, space, basis, gen, d)).map_err(|e| resource(d, e))?;
        render_matrix(&m, g.format)
    } else if let Some(spec) = &args.basis {
        let (space, basis) = spec.split_once(':').ok_or_else(|| usage(format!("--basis expects SPACE:BASIS, got '{spec}'")))?;
        let space: SpaceId = parse_id(space, "space", SPACES)?;
        let basis: BasisId = parse_id(basis, "basis", BASES)?;
        let model = build_spec(&ring, d, &free_scalars(&g.scalars)?)?;
        let m = guarded(|| model.basis_matrix(space, basis))
            .map_err(|e| resource(d, e))?
            .map_err(|e| usage(e.to_string()))?;
        render_matrix(&m, g.format)
    } else {
        let reps = guarded(|| RepMatrices::new(&ring, SpaceId::V, BasisId::row(Axis::X), d)).map_err(|e| resource(d, e))?;
        match g.format {
            Format::Text => to_json(&TripleFile {
                x: MatrixFile::from_matrix(&reps.x),
                y: MatrixFile::from_matrix(&reps.y),
                z: MatrixFile::from_matrix(&reps.z),
            }),
            Format::Table => format!("x:\n{}\ny:\n{}\nz:\n{}\n", reps.x, reps.y, reps.z),
        }
    };
    Ok(Outcome { text, ok: true })
}

fn expand(suites: &[Suite]) -> Vec<Suite> {
    let all = [
        Suite::Algebra,
        Suite::Rotator,
        Suite::Transition,
        Suite::Pairing,
        Suite::Flags,
        Suite::ClosedForm,
        Suite::Shapes,
    ];
    let mut out: Vec<Suite> = if suites.contains(&Suite::All) { all.to_vec() } else { suites.to_vec() };
    out.sort();
    out.dedup();
    out
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::All => "all",
        Suite::Algebra => "algebra",
        Suite::Rotator => "rotator",
        Suite::Transition => "transition",
        Suite::Pairing => "pairing",
        Suite::Flags => "flags",
        Suite::ClosedForm => "closed-form",
        Suite::Shapes => "shapes",
    }
}

fn run_suite<S: Scalar>(ring: &QRing<S>, spec: Option<&ModuleSpec<S>>, suite: Suite, d: usize) -> VerificationReport {
    let mut r = VerificationReport::new();
    match suite {
        Suite::Algebra => {
            for space in SpaceId::ALL {
                for b in BasisId::all() {
                    r.extend(&format!("{space} {b}"), verify_algebra(ring, space, b, d));
                }
            }
            for b in BasisId::all() {
                r.extend(&format!("dagger {b}"), dagger_transpose_check(ring, b, d));
            }
        }
        Suite::Rotator => r = rotator_suite(ring, d),
        Suite::Transition => r = transition_suite(spec.expect("model is built")),
        Suite::Pairing => r = pairing_suite(spec.expect("model is built")),
        Suite::Flags => r = flag_suite(spec.expect("model is built"), d <= 4),
        Suite::ClosedForm => r = closed_form_suite(spec.expect("model is built")),
        Suite::Shapes => r = shape_suite(spec.expect("model is built")),
        Suite::All => unreachable!("expanded before running"),
    }
    r
}

fn verify<S: CliScalar>(g: &GlobalOpts, suites: &[Suite]) -> Result<Outcome, CliError> {
    let ring = S::ring(g.q.as_deref())?;
    let range = parse_range(g.d.as_deref())?;
    let free = free_scalars::<S>(&g.scalars)?;
    let suites = expand(suites);
    let needs_model = suites.iter().any(|s| !matches!(s, Suite::Algebra | Suite::Rotator));
    let mut text = String::new();
    let (mut total, mut failed) = (0usize, 0usize);
    for d in range {
        let spec = if needs_model { Some(build_spec(&ring, d, &free)?) } else { None };
        for &suite in &suites {
            let report = match guarded(|| run_suite(&ring, spec.as_ref(), suite, d)) {
                Ok(r) => r,
                Err(e) => {
                    return Err(CliError::Resource(format!("suite {} at d = {d}: {e}", suite_name(suite))))
                }
            };
            for item in &report.items {
                total += 1;
                if !item.passed {
                    failed += 1;
                }
            }
            for line in report.to_string().lines() {
                let (status, rest) = line.split_at(4);
                let _ = writeln!(text, "{status} d={d} {}:{rest}", suite_name(suite));
            }
        }
    }
    let _ = writeln!(text, "{total} checks, {failed} failed");
    Ok(Outcome { text, ok: failed == 0 })
}

#[derive(Serialize)]
struct CertificateLine {
    name: String,
    passed: bool,
}

#[derive(Serialize)]
struct RecognitionOutput {
    branch: String,
    b: Option<String>,
    q: Option<String>,
    normalized: Option<TripleFile>,
    certificate: Vec<CertificateLine>,
}

fn recognize<S: CliScalar>(g: &GlobalOpts, input: &std::path::Path, b: Option<&str>) -> Result<Outcome, CliError> {
    let raw = fs::read_to_string(input).map_err(|e| CliError::Parse(format!("{}: {e}", input.display())))?;
    let file: TripleFile = serde_json::from_str(&raw).map_err(|e| CliError::Parse(format!("{}: {e}", input.display())))?;
    let mat = |m: &MatrixFile, name: &str| m.to_matrix::<S>().map_err(|e| CliError::Parse(format!("{name}: {e}")));
    let (x, y, z) = (mat(&file.x, "x")?, mat(&file.y, "y")?, mat(&file.z, "z")?);
    let hint = |s: Option<&str>, flag: &str| {
        s.map(|v| S::parse_scalar(v).map_err(|e| usage(format!("{flag}: {e}")))).transpose()
    };
    let hints = Hints { q: hint(g.q.as_deref(), "--q")?, b: hint(b, "--b")? };
    let triple = ShapeTriple::new(x, y, z).map_err(|e| CliError::Parse(e.to_string()))?;
    let res = guarded(|| recognize_triple(&triple, &hints))
        .map_err(|e| resource(triple.d(), e))?
        .map_err(|e| match e {
            RecognizeError::Shape(_) | RecognizeError::Linalg(_) => CliError::Parse(e.to_string()),
            other => CliError::Recognition(other.to_string()),
        })?;
    let q = match &res.branch {
        Branch::Quantum { q } => Some(q.to_string()),
        _ => None,
    };
    let text = match g.format {
        Format::Text => to_json(&RecognitionOutput {
            branch: match res.branch {
                Branch::Quantum { .. } => "quantum".into(),
                Branch::ClassicalSl2 => "classical_sl2".into(),
                Branch::Underdetermined => "underdetermined".into(),
            },
            b: res.b.as_ref().map(|b| b.to_string()),
            q,
            normalized: res.normalized.as_ref().map(|[x, y, z]| TripleFile {
                x: MatrixFile::from_matrix(x),
                y: MatrixFile::from_matrix(y),
                z: MatrixFile::from_matrix(z),
            }),
            certificate: res
                .certificate
                .items
                .iter()
                .map(|i| CertificateLine { name: i.name.clone(), passed: i.passed })
                .collect(),
        }),
        Format::Table => {
            let mut t = format!("branch: {}\n", res.branch);
            if let Some(b) = &res.b {
                let _ = writeln!(t, "b: {b}");
            }
            if let Some([x, y, z]) = &res.normalized {
                let _ = write!(t, "x:\n{x}\ny:\n{y}\nz:\n{z}\n");
            }
            t.push_str(&res.certificate.to_string());
            t
        }
    };
    Ok(Outcome { text, ok: true })
}

pub fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    match cli.global.backend {
        Backend::Symbolic => run::<RatFunc>(cli),
        Backend::Rational => run::<BigRational>(cli),
    }
}

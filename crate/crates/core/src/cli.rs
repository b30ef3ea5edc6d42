//! Command-line front end.
//!
//! Every subcommand prints one JSON document. Exit codes: 0 when a result
//! was computed (it may well be `"member": false`), 2 for input errors, 3
//! when a computation reaches a state the theory rules out.

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::exactpoly::RatPoly;
use crate::hyperelliptic::{
    self, Certificate, CurveFile, HyperellipticError, MembershipCertificate,
    RealHyperellipticCurve,
};
use crate::quartic::{self, PlaneQuartic, Point, QuarticError};
use crate::rational::{self, Rational};
use crate::semigroup::{self, DegreeVector, SemigroupFamily};
use crate::sweep::{self, MembershipSweepConfig, SignSweepConfig};
use crate::vandermonde::{self, DualVandermondeSystem, SignSequence, VandermondeError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "realsep",
    version,
    about = "Separating semigroups, dual Vandermonde sign patterns and membership certificates"
)]
pub struct Cli {
    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Include per-sample and per-pattern traces.
    #[arg(long, global = true)]
    pub verbose: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "m-curve")]
    MCurve,
    Hyperelliptic,
    Quartic,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SweepKind {
    SignPatterns,
    Membership,
    All,
}

#[derive(Debug, clap::Args)]
pub struct SystemArgs {
    #[arg(short = 'g', long)]
    pub genus: usize,
    /// Comma-separated rationals, e.g. `0,1/2,3`.
    #[arg(long, allow_hyphen_values = true)]
    pub nodes: String,
}

#[derive(Debug, clap::Args)]
pub struct CurveArgs {
    /// Coefficients of G, lowest degree first, comma separated.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "curve_file")]
    pub poly: Option<String>,
    /// JSON curve file `{"G": [...]}`.
    #[arg(long)]
    pub curve_file: Option<PathBuf>,
    /// Use `y^2 = x^(2g+2) + 1` when no polynomial is given.
    #[arg(short = 'g', long)]
    pub genus: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Membership of a degree vector in a separating semigroup.
    SepMember {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(short = 'g', long)]
        genus: Option<u32>,
        #[arg(short = 'd', long)]
        degrees: String,
    },
    /// Members with bounded entry sum, optionally with a closure check.
    SepEnumerate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(short = 'g', long)]
        genus: Option<u32>,
        #[arg(long)]
        bound: u32,
        #[arg(long)]
        closure: bool,
    },
    /// Sign-change criterion for one sign pattern.
    VdmFeasible {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, allow_hyphen_values = true)]
        signs: String,
    },
    /// Exact solution with a prescribed sign pattern.
    VdmWitness {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, allow_hyphen_values = true)]
        signs: String,
    },
    /// Linear-feasibility decision, compared with the criterion.
    VdmOracle {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, allow_hyphen_values = true)]
        signs: String,
    },
    /// All feasible sign patterns for a node set.
    VdmEnumerate {
        #[command(flatten)]
        system: SystemArgs,
    },
    /// Classify a nowhere-zero solution over possibly repeated nodes.
    VdmClassify {
        #[arg(short = 'g', long)]
        genus: usize,
        #[arg(long, allow_hyphen_values = true)]
        nodes: String,
        #[arg(long, allow_hyphen_values = true)]
        h: String,
    },
    /// Build a membership certificate or factored morphism.
    HyperCertificate {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(short = 'd', long)]
        degrees: String,
        /// Always build a point certificate, even for factored degrees.
        #[arg(long)]
        points: bool,
    },
    /// Verify a point certificate.
    HyperVerify {
        #[command(flatten)]
        curve: CurveArgs,
        /// Certificate JSON file.
        #[arg(long)]
        json_file: PathBuf,
    },
    /// Projection of a plane quartic from a center.
    QuarticProject {
        /// `nested` or a JSON file of 15 coefficients.
        #[arg(long, default_value = "nested")]
        curve: String,
        #[arg(long, allow_hyphen_values = true)]
        center: String,
        #[arg(long, default_value_t = 64)]
        samples: usize,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        offset: String,
    },
    /// Run the cross-check sweeps.
    Sweep {
        #[arg(long, value_enum, default_value = "all")]
        kind: SweepKind,
        /// Comma-separated genera for the sign-pattern sweep.
        #[arg(long, default_value = "1,2,3,4")]
        vdm_genera: String,
        #[arg(long, default_value_t = 6)]
        max_nodes: usize,
        #[arg(long, default_value_t = 50)]
        node_sets: usize,
        /// Comma-separated genera for the membership sweep.
        #[arg(long, default_value = "2,3,4,5")]
        hyper_genera: String,
        #[arg(long, default_value_t = 10)]
        max_total: u32,
    },
}

/// Failure of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Input(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }

    pub fn to_json(&self) -> Value {
        let (kind, message) = match self {
            CliError::Input(m) => ("input", m),
            CliError::Internal(m) => ("internal", m),
        };
        json!({ "error": { "kind": kind, "message": message } })
    }
}

fn input<E: ToString>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

impl From<VandermondeError> for CliError {
    fn from(e: VandermondeError) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<HyperellipticError> for CliError {
    fn from(e: HyperellipticError) -> Self {
        match e {
            HyperellipticError::Vandermonde(v) => v.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<QuarticError> for CliError {
    fn from(e: QuarticError) -> Self {
        match e {
            QuarticError::OvalAttribution(_) => CliError::Internal(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

/// JSON document plus process exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub json: Value,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(json: Value) -> Self {
        Self {
            json,
            exit_code: EXIT_OK,
        }
    }

    fn from_error(e: CliError) -> Self {
        Self {
            json: e.to_json(),
            exit_code: e.exit_code(),
        }
    }

    pub fn render(&self) -> String {
        serde_json::to_string_pretty(&self.json).expect("JSON values always render")
    }
}

/// A fully parsed and validated command.
#[derive(Debug)]
pub enum CommandRequest {
    SepMember {
        family: SemigroupFamily,
        degrees: DegreeVector,
    },
    SepEnumerate {
        family: SemigroupFamily,
        bound: u32,
        closure: bool,
    },
    VdmFeasible(DualVandermondeSystem, SignSequence),
    VdmWitness(DualVandermondeSystem, SignSequence),
    VdmOracle(DualVandermondeSystem, SignSequence),
    VdmEnumerate(DualVandermondeSystem),
    VdmClassify {
        genus: usize,
        nodes: Vec<Rational>,
        h: Vec<Rational>,
    },
    HyperCertificate {
        curve: RealHyperellipticCurve,
        degrees: DegreeVector,
        points: bool,
    },
    HyperVerify {
        curve: RealHyperellipticCurve,
        certificate: MembershipCertificate,
    },
    QuarticProject {
        quartic: PlaneQuartic,
        center: Point,
        samples: usize,
        offset: Rational,
        verbose: bool,
    },
    Sweep {
        signs: Option<SignSweepConfig>,
        membership: Option<MembershipSweepConfig>,
    },
}

fn parse_family(f: FamilyArg, genus: Option<u32>) -> Result<SemigroupFamily, CliError> {
    match f {
        FamilyArg::MCurve => Ok(SemigroupFamily::m_curve(
            genus.ok_or_else(|| input("--genus is required for m-curve"))?,
        )),
        FamilyArg::Hyperelliptic => SemigroupFamily::hyperelliptic(
            genus.ok_or_else(|| input("--genus is required for hyperelliptic"))?,
        )
        .map_err(input),
        FamilyArg::Quartic => Ok(SemigroupFamily::HyperbolicQuartic),
    }
}

fn parse_u32_list(s: &str) -> Result<Vec<u32>, CliError> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<u32>().map_err(|_| input(format!("bad integer {t:?}"))))
        .collect()
}

fn parse_degrees(s: &str) -> Result<DegreeVector, CliError> {
    DegreeVector::new(parse_u32_list(s)?).map_err(input)
}

fn parse_system(a: &SystemArgs) -> Result<DualVandermondeSystem, CliError> {
    let nodes = rational::parse_rational_list(&a.nodes).map_err(input)?;
    Ok(DualVandermondeSystem::new(nodes, a.genus)?)
}

fn parse_signs(sys: &DualVandermondeSystem, s: &str) -> Result<SignSequence, CliError> {
    let seq: SignSequence = s.parse()?;
    if seq.len() != sys.len() {
        return Err(VandermondeError::LengthMismatch {
            expected: sys.len(),
            found: seq.len(),
        }
        .into());
    }
    Ok(seq)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn parse_curve(a: &CurveArgs) -> Result<RealHyperellipticCurve, CliError> {
    let curve = if let Some(p) = &a.poly {
        RealHyperellipticCurve::new(RatPoly::new(
            rational::parse_rational_list(p).map_err(input)?,
        ))
    } else if let Some(path) = &a.curve_file {
        let file: CurveFile = read_json(path)?;
        RealHyperellipticCurve::new(file.g)
    } else if let Some(g) = a.genus {
        RealHyperellipticCurve::standard(g)
    } else {
        return Err(input("one of --poly, --curve-file or --genus is required"));
    };
    let curve = curve?;
    if let Some(g) = a.genus {
        if g != curve.genus() {
            return Err(input(format!(
                "--genus {g} disagrees with curve genus {}",
                curve.genus()
            )));
        }
    }
    Ok(curve)
}

fn parse_point(s: &str) -> Result<Point, CliError> {
    match rational::parse_rational_list(s).map_err(input)?.as_slice() {
        [x, y] => Ok(Point::new(x.clone(), y.clone())),
        _ => Err(input(format!("expected two coordinates, got {s:?}"))),
    }
}

fn parse_genera<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, CliError> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<T>().map_err(|_| input(format!("bad genus {t:?}"))))
        .collect()
}

impl CommandRequest {
    pub fn from_cli(cli: &Cli) -> Result<CommandRequest, CliError> {
        Ok(match &cli.command {
            Command::SepMember {
                family,
                genus,
                degrees,
            } => {
                let family = parse_family(*family, *genus)?;
                let degrees = parse_degrees(degrees)?;
                if degrees.len() != family.component_count() {
                    return Err(input(semigroup::SemigroupError::ComponentCount {
                        expected: family.component_count(),
                        found: degrees.len(),
                    }));
                }
                CommandRequest::SepMember { family, degrees }
            }
            Command::SepEnumerate {
                family,
                genus,
                bound,
                closure,
            } => {
                let family = parse_family(*family, *genus)?;
                let cap = if *closure {
                    semigroup::CLOSURE_BOUND_CAP
                } else {
                    semigroup::ENUMERATION_BOUND_CAP
                };
                if *bound > cap {
                    return Err(input(semigroup::SemigroupError::BoundExceeded {
                        bound: *bound,
                        cap,
                    }));
                }
                CommandRequest::SepEnumerate {
                    family,
                    bound: *bound,
                    closure: *closure,
                }
            }
            Command::VdmFeasible { system, signs } => {
                let sys = parse_system(system)?;
                let s = parse_signs(&sys, signs)?;
                CommandRequest::VdmFeasible(sys, s)
            }
            Command::VdmWitness { system, signs } => {
                let sys = parse_system(system)?;
                let s = parse_signs(&sys, signs)?;
                CommandRequest::VdmWitness(sys, s)
            }
            Command::VdmOracle { system, signs } => {
                let sys = parse_system(system)?;
                if sys.len() > vandermonde::DEFAULT_ENUMERATION_CAP {
                    return Err(VandermondeError::CapExceeded {
                        n: sys.len(),
                        cap: vandermonde::DEFAULT_ENUMERATION_CAP,
                    }
                    .into());
                }
                let s = parse_signs(&sys, signs)?;
                CommandRequest::VdmOracle(sys, s)
            }
            Command::VdmEnumerate { system } => {
                let sys = parse_system(system)?;
                if sys.len() > vandermonde::DEFAULT_ENUMERATION_CAP {
                    return Err(VandermondeError::CapExceeded {
                        n: sys.len(),
                        cap: vandermonde::DEFAULT_ENUMERATION_CAP,
                    }
                    .into());
                }
                CommandRequest::VdmEnumerate(sys)
            }
            Command::VdmClassify { genus, nodes, h } => {
                let nodes = rational::parse_rational_list(nodes).map_err(input)?;
                let h = rational::parse_rational_list(h).map_err(input)?;
                if nodes.len() != h.len() {
                    return Err(VandermondeError::LengthMismatch {
                        expected: nodes.len(),
                        found: h.len(),
                    }
                    .into());
                }
                CommandRequest::VdmClassify {
                    genus: *genus,
                    nodes,
                    h,
                }
            }
            Command::HyperCertificate {
                curve,
                degrees,
                points,
            } => {
                let curve = parse_curve(curve)?;
                let degrees = parse_degrees(degrees)?;
                if degrees.len() != curve.component_count() {
                    return Err(input(semigroup::SemigroupError::ComponentCount {
                        expected: curve.component_count(),
                        found: degrees.len(),
                    }));
                }
                CommandRequest::HyperCertificate {
                    curve,
                    degrees,
                    points: *points,
                }
            }
            Command::HyperVerify { curve, json_file } => CommandRequest::HyperVerify {
                curve: parse_curve(curve)?,
                certificate: read_json(json_file)?,
            },
            Command::QuarticProject {
                curve,
                center,
                samples,
                offset,
            } => {
                let quartic = if curve == "nested" {
                    quartic::nested_quartic_example()
                } else {
                    read_json(&PathBuf::from(curve))?
                };
                if *samples < quartic::MIN_SAMPLES {
                    return Err(QuarticError::TooFewSamples(*samples).into());
                }
                CommandRequest::QuarticProject {
                    quartic,
                    center: parse_point(center)?,
                    samples: *samples,
                    offset: rational::parse_rational(offset).map_err(input)?,
                    verbose: cli.verbose,
                }
            }
            Command::Sweep {
                kind,
                vdm_genera,
                max_nodes,
                node_sets,
                hyper_genera,
                max_total,
            } => {
                let want_signs = matches!(kind, SweepKind::SignPatterns | SweepKind::All);
                let want_members = matches!(kind, SweepKind::Membership | SweepKind::All);
                let signs = if want_signs {
                    let genera: Vec<usize> = parse_genera(vdm_genera)?;
                    if genera.contains(&0) {
                        return Err(input("genus must be positive"));
                    }
                    if *max_nodes > sweep::MAX_SWEEP_NODES {
                        return Err(input(format!(
                            "--max-nodes {max_nodes} exceeds cap {}",
                            sweep::MAX_SWEEP_NODES
                        )));
                    }
                    Some(SignSweepConfig {
                        genera,
                        max_nodes: *max_nodes,
                        node_sets: *node_sets,
                        seed: cli.seed,
                    })
                } else {
                    None
                };
                let membership = if want_members {
                    let genera: Vec<u32> = parse_genera(hyper_genera)?;
                    if let Some(g) = genera.iter().find(|&&g| g < 2) {
                        return Err(input(format!("hyperelliptic genus {g} below 2")));
                    }
                    if *max_total > sweep::MAX_SWEEP_TOTAL {
                        return Err(input(format!(
                            "--max-total {max_total} exceeds cap {}",
                            sweep::MAX_SWEEP_TOTAL
                        )));
                    }
                    Some(MembershipSweepConfig {
                        genera,
                        max_total: *max_total,
                    })
                } else {
                    None
                };
                CommandRequest::Sweep { signs, membership }
            }
        })
    }
}

fn rationals_json(v: &[Rational]) -> Value {
    Value::from(v.iter().map(rational::format_rational).collect::<Vec<_>>())
}

fn family_json(f: &SemigroupFamily) -> Value {
    match f {
        SemigroupFamily::HyperbolicQuartic => json!({ "family": f.name() }),
        _ => json!({ "family": f.name(), "genus": f.genus() }),
    }
}

fn merge(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable output")
}

/// Executes a validated request.
pub fn execute(req: CommandRequest) -> Result<Outcome, CliError> {
    match req {
        CommandRequest::SepMember { family, degrees } => {
            let member = semigroup::is_member(&family, &degrees).map_err(input)?;
            Ok(Outcome::ok(merge(
                family_json(&family),
                json!({ "degrees": to_value(&degrees), "member": member }),
            )))
        }
        CommandRequest::SepEnumerate {
            family,
            bound,
            closure,
        } => {
            let members = semigroup::enumerate_members(&family, bound).map_err(input)?;
            let mut out = merge(
                family_json(&family),
                json!({ "bound": bound, "count": members.len(), "members": to_value(&members) }),
            );
            if closure {
                let closed = semigroup::check_closure(&family, bound).map_err(input)?;
                if !closed {
                    return Err(CliError::Internal(format!(
                        "{} is not closed under addition up to {bound}",
                        family.name()
                    )));
                }
                out = merge(out, json!({ "closed": closed }));
            }
            Ok(Outcome::ok(out))
        }
        CommandRequest::VdmFeasible(sys, s) => {
            let feasible = vandermonde::sign_feasible(&sys, &s)?;
            Ok(Outcome::ok(json!({
                "genus": sys.genus(),
                "signs": s.to_string(),
                "ch": s.sign_changes(),
                "feasible": feasible,
            })))
        }
        CommandRequest::VdmWitness(sys, s) => {
            let h = vandermonde::construct_witness(&sys, &s)?;
            if !vandermonde::verify_witness(&sys, &s, &h) {
                return Err(CliError::Internal("constructed witness fails verification".into()));
            }
            Ok(Outcome::ok(json!({
                "signs": s.to_string(),
                "h": to_value(&h),
                "residuals": rationals_json(&sys.residuals(&h)),
            })))
        }
        CommandRequest::VdmOracle(sys, s) => {
            let criterion = vandermonde::sign_feasible(&sys, &s)?;
            let oracle = vandermonde::brute_force_feasible(&sys, &s)?;
            if criterion != oracle {
                return Err(CliError::Internal(format!(
                    "sign-change criterion says {criterion}, linear feasibility says {oracle}"
                )));
            }
            Ok(Outcome::ok(json!({
                "signs": s.to_string(),
                "ch": s.sign_changes(),
                "criterion": criterion,
                "oracle": oracle,
                "agree": true,
            })))
        }
        CommandRequest::VdmEnumerate(sys) => {
            let patterns =
                vandermonde::enumerate_feasible_patterns(&sys, vandermonde::DEFAULT_ENUMERATION_CAP)?;
            let basis = vandermonde::nullspace_basis(&sys);
            Ok(Outcome::ok(json!({
                "genus": sys.genus(),
                "nullspace_dimension": basis.len(),
                "count": patterns.len(),
                "patterns": patterns.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            })))
        }
        CommandRequest::VdmClassify { genus, nodes, h } => {
            let case = vandermonde::classify_corollary(&nodes, &h, genus)?;
            Ok(Outcome::ok(json!({
                "case": to_value(&case),
                "case_i": case.case_i(),
                "case_ii": case.case_ii(),
            })))
        }
        CommandRequest::HyperCertificate {
            curve,
            degrees,
            points,
        } => {
            let base = json!({ "genus": curve.genus(), "degrees": to_value(&degrees) });
            let built = if points {
                hyperelliptic::construct_point_certificate(&curve, &degrees).map(Certificate::Points)
            } else {
                hyperelliptic::construct_certificate(&curve, &degrees)
            };
            let cert = match built {
                Ok(c) => c,
                Err(HyperellipticError::NotMember(_)) => {
                    return Ok(Outcome::ok(merge(base, json!({ "member": false }))))
                }
                Err(e) => return Err(e.into()),
            };
            let verified = match &cert {
                Certificate::Points(c) => hyperelliptic::verify_certificate(&curve, c).valid,
                Certificate::Factored(f) => {
                    hyperelliptic::factored_degree_vector(&curve, f).as_ref() == Ok(&degrees)
                }
            };
            if !verified {
                return Err(CliError::Internal("constructed certificate fails verification".into()));
            }
            Ok(Outcome::ok(merge(
                base,
                json!({ "member": true, "certificate": to_value(&cert) }),
            )))
        }
        CommandRequest::HyperVerify { curve, certificate } => {
            let v = hyperelliptic::verify_certificate(&curve, &certificate);
            Ok(Outcome::ok(to_value(&v)))
        }
        CommandRequest::QuarticProject {
            quartic,
            center,
            samples,
            offset,
            verbose,
        } => {
            let profile =
                quartic::projection_profile_with_offset(&quartic, &center, samples, &offset)?;
            if let Some(d) = &profile.degrees {
                let ok = semigroup::is_member(&SemigroupFamily::HyperbolicQuartic, d)
                    .map_err(|e| CliError::Internal(e.to_string()))?;
                if !ok {
                    return Err(CliError::Internal(format!(
                        "projection degrees {d} outside the quartic semigroup"
                    )));
                }
            }
            let mut out = to_value(&profile);
            if verbose {
                out = merge(out, json!({ "samples": to_value(&profile.samples) }));
            }
            Ok(Outcome::ok(out))
        }
        CommandRequest::Sweep { signs, membership } => {
            let mut out = json!({});
            let mut broken = false;
            if let Some(cfg) = signs {
                let rep = sweep::sign_pattern_sweep(&cfg)?;
                broken |= rep.mismatches > 0 || rep.witness_failures > 0;
                out = merge(out, json!({ "sign_patterns": to_value(&rep) }));
            }
            if let Some(cfg) = membership {
                let rep = sweep::membership_sweep(&cfg)?;
                broken |= rep.discrepancies > 0;
                out = merge(out, json!({ "membership": to_value(&rep) }));
            }
            Ok(Outcome {
                json: out,
                exit_code: if broken { EXIT_INTERNAL } else { EXIT_OK },
            })
        }
    }
}

/// Parses, validates and runs one command line.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    json: json!({ "help": e.to_string() }),
                    exit_code: EXIT_OK,
                };
            }
            return Outcome::from_error(CliError::Input(e.to_string()));
        }
    };
    match CommandRequest::from_cli(&cli).and_then(execute) {
        Ok(o) => o,
        Err(e) => Outcome::from_error(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        run(std::iter::once("realsep").chain(args.iter().copied()))
    }

    #[test]
    fn sep_member_example() {
        let o = go(&["sep-member", "--family", "hyperelliptic", "-g", "3", "-d", "2,2"]);
        assert_eq!(o.exit_code, 0);
        assert_eq!(o.json["member"], true);
        let o = go(&["sep-member", "--family", "quartic", "-d", "2,1"]);
        assert_eq!(o.json["member"], false);
    }

    #[test]
    fn vdm_witness_example() {
        let o = go(&["vdm-witness", "-g", "2", "--nodes", "0,1,2", "--signs", "+,-,+"]);
        assert_eq!(o.exit_code, 0);
        assert_eq!(o.json["h"], json!(["1", "-2", "1"]));
    }

    #[test]
    fn input_errors_exit_2() {
        for args in [
            vec!["vdm-feasible", "-g", "2", "--nodes", "0,1/0,2", "--signs", "+-+"],
            vec!["vdm-feasible", "-g", "2", "--nodes", "0,1,2", "--signs", "+-"],
            vec!["vdm-witness", "-g", "2", "--nodes", "0,1,2", "--signs", "++-"],
            vec!["sep-member", "--family", "hyperelliptic", "-g", "3", "-d", "2"],
            vec!["sep-member", "--family", "bogus", "-d", "2"],
            vec!["quartic-project", "--center", "1,0"],
        ] {
            let o = go(&args);
            assert_eq!(o.exit_code, 2, "{args:?}");
            assert_eq!(o.json["error"]["kind"], "input");
        }
    }

    #[test]
    fn help_is_not_an_error() {
        assert_eq!(go(&["--help"]).exit_code, 0);
    }
}

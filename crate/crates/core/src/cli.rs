//! Batch command-line front end. [`run`] is pure: it returns the rendered
//! report and the exit status, and the binary only does I/O.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::basis::{
    criterion_from_matrix, quad_construct, quartic_full_construct, quartic_module_construct,
    snf_criterion, sqrt_family, sqrt_family_matrix, thm2_family_basis, FullConstruction,
    LdsConstruction,
};
use crate::coordseq::{generate, verify_recurrence};
use crate::dk::{conjecture9_scan, dk_recurrence_check, lastprop_scan, DkSequence};
use crate::error::{Error, Result};
use crate::field::{FieldElement, ModuleBasis, NumberField};
use crate::report::{
    BasisReport, CriterionDto, DkDto, FamilyDto, FamilyEntry, SequenceDto, VerdictDto,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_FAILED: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

#[derive(Parser, Debug, Clone)]
#[command(name = "normlds", version, about = "Divisibility-sequence bases for quadratic and quartic modules")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Build a basis and print it with its change-of-basis matrix.
    ConstructBasis(ConstructArgs),
    /// Expand β·ε^k over a basis for k = 0..=kmax.
    EmitSequence(SequenceArgs),
    /// Check every coordinate column for the divisibility property up to nmax.
    VerifyLds(SequenceArgs),
    /// Compute d_k(α) over a ring whose basis starts with 1.
    DkScan(DkArgs),
    /// Build and verify the Z[√m, √(m+1)] bases over a range of m.
    FamilyScan(FamilyArgs),
    /// Smith-form gcd test for a full quartic module.
    SnfCheck(SnfArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisKind {
    /// Basis of β·Z[η] for a quartic unit η with η² of norm 1.
    Thm1,
    /// The module basis as given (default: power basis of the field).
    Power,
    /// Smith-form construction over the module basis.
    Full,
    /// Hermite-form construction in a real quadratic field.
    Quad,
}

#[derive(Args, Debug, Clone, Default)]
pub struct InputArgs {
    /// Defining polynomial, e.g. "x^4-10x^2+1".
    #[arg(long)]
    pub field: Option<String>,
    /// The unit ε (or η), in the generator t.
    #[arg(long)]
    pub unit: Option<String>,
    /// The element β; defaults to 1.
    #[arg(long)]
    pub beta: Option<String>,
    /// Comma-separated module basis in the generator t.
    #[arg(long, value_delimiter = ',')]
    pub module_basis: Vec<String>,
}

#[derive(Args, Debug, Clone)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = BasisKind::Thm1)]
    pub basis: BasisKind,
}

#[derive(Args, Debug, Clone)]
pub struct SequenceArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, conflicts_with = "basis_file")]
    pub basis: Option<BasisKind>,
    /// A construct-basis JSON report to take the field and basis from.
    #[arg(long)]
    pub basis_file: Option<PathBuf>,
    #[arg(long, default_value_t = 20)]
    pub kmax: usize,
    #[arg(long, default_value_t = 200)]
    pub nmax: usize,
}

#[derive(Args, Debug, Clone)]
pub struct DkArgs {
    #[arg(long)]
    pub field: String,
    /// The element α.
    #[arg(long, alias = "alpha")]
    pub unit: String,
    /// Comma-separated ring basis starting with 1 (default: power basis).
    #[arg(long, value_delimiter = ',')]
    pub module_basis: Vec<String>,
    #[arg(long, default_value_t = 40)]
    pub kmax: usize,
    /// Run the vanishing scan on k = 1 mod t for the field generator.
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long, default_value_t = 41)]
    pub nmax: usize,
    /// Assert that the power basis is the full ring of integers.
    #[arg(long)]
    pub assert_monogenic: bool,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    /// Inclusive range such as "2..10" or "2..=10".
    #[arg(long)]
    pub m_range: String,
    #[arg(long, default_value_t = 200)]
    pub kmax: usize,
}

#[derive(Args, Debug, Clone)]
pub struct SnfArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Use the integer matrix of 1, η, η², η³ over 1, √m, √(m+1), √(m(m+1)).
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["field", "unit", "beta", "module_basis"])]
    pub m: Option<String>,
}

/// A rendered report and the process exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub status: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        Error::Invariant(_) => EXIT_INTERNAL,
        _ => EXIT_FAILED,
    }
}

fn render<T: Serialize>(value: &T, format: Format, csv: impl FnOnce() -> Option<String>, text: impl FnOnce() -> String) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(value)? + "\n"),
        Format::Text => Ok(text()),
        Format::Csv => csv().ok_or_else(|| Error::Precondition("this report has no CSV form".into())),
    }
}

struct Inputs {
    unit: Option<FieldElement>,
    beta: FieldElement,
    module: ModuleBasis,
}

fn resolve(input: &InputArgs, file: Option<&BasisReport>) -> Result<Inputs> {
    let field = match (&input.field, file) {
        (Some(f), Some(r)) => {
            let a = NumberField::parse(f)?;
            if a != NumberField::parse(&r.field)? {
                return Err(Error::Precondition(format!("--field {f} differs from the basis file's {}", r.field)));
            }
            a
        }
        (Some(f), None) => NumberField::parse(f)?,
        (None, Some(r)) => NumberField::parse(&r.field)?,
        (None, None) => return Err(Error::Precondition("--field is required".into())),
    };
    let unit_src = input.unit.clone().or_else(|| file.and_then(|r| r.unit.clone()));
    let unit = unit_src.map(|u| FieldElement::parse(&field, &u)).transpose()?;
    let beta_src = input.beta.clone().or_else(|| file.and_then(|r| r.beta.clone()));
    let beta = match beta_src {
        Some(b) => FieldElement::parse(&field, &b)?,
        None => FieldElement::one(&field),
    };
    let module = if let Some(r) = file {
        let v: Vec<&str> = r.basis.iter().map(String::as_str).collect();
        ModuleBasis::parse(&field, &v)?
    } else if input.module_basis.is_empty() {
        ModuleBasis::power_basis(&field)
    } else {
        let v: Vec<&str> = input.module_basis.iter().map(String::as_str).collect();
        ModuleBasis::parse(&field, &v)?
    };
    Ok(Inputs { unit, beta, module })
}

fn require_unit(i: &Inputs) -> Result<&FieldElement> {
    i.unit.as_ref().ok_or_else(|| Error::Precondition("--unit is required".into()))
}

enum Built {
    Construction(Box<LdsConstruction>),
    Given(ModuleBasis),
    Failed(Box<crate::basis::SnfCriterion>),
}

fn build(kind: BasisKind, i: &Inputs) -> Result<Built> {
    Ok(match kind {
        BasisKind::Power => Built::Given(i.module.clone()),
        BasisKind::Thm1 => Built::Construction(Box::new(quartic_module_construct(&i.beta, require_unit(i)?)?)),
        BasisKind::Quad => Built::Construction(Box::new(quad_construct(&i.module, &i.beta, require_unit(i)?)?)),
        BasisKind::Full => match quartic_full_construct(&i.module, &i.beta, require_unit(i)?)? {
            FullConstruction::Built(c) => Built::Construction(c),
            FullConstruction::CriterionFailed(c) => Built::Failed(c),
        },
    })
}

fn read_basis_file(path: &PathBuf) -> Result<BasisReport> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse {
        position: e.column(),
        message: format!("{}: {e}", path.display()),
    })
}

/// Executes one command.
pub fn run(config: &RunConfig) -> Result<Outcome> {
    let format = config.format;
    match &config.command {
        Command::ConstructBasis(a) => {
            let inputs = resolve(&a.input, None)?;
            match build(a.basis, &inputs)? {
                Built::Construction(c) => {
                    let r = BasisReport::from_construction(&c);
                    ok(render(&r, format, || None, || r.text())?)
                }
                Built::Given(b) => {
                    let r = BasisReport::from_basis(&b, a.input.unit.clone(), a.input.beta.clone());
                    ok(render(&r, format, || None, || r.text())?)
                }
                Built::Failed(c) => failed(&CriterionDto::from(c.as_ref()), format),
            }
        }
        Command::EmitSequence(a) | Command::VerifyLds(a) => {
            let verify = matches!(config.command, Command::VerifyLds(_));
            let file = a.basis_file.as_ref().map(read_basis_file).transpose()?;
            let inputs = resolve(&a.input, file.as_ref())?;
            let unit = require_unit(&inputs)?.clone();
            let basis = if file.is_some() {
                inputs.module.clone()
            } else {
                match build(a.basis.unwrap_or(BasisKind::Thm1), &inputs)? {
                    Built::Construction(c) => c.basis,
                    Built::Given(b) => b,
                    Built::Failed(c) => return failed(&CriterionDto::from(c.as_ref()), format),
                }
            };
            let kmax = if verify { a.nmax } else { a.kmax };
            let report = generate(&inputs.beta, &unit, &basis, kmax)?;
            let dto = SequenceDto::new(&report, verify_recurrence(&report));
            let out = render(&dto, format, || Some(dto.csv()), || dto.text())?;
            let status = if verify && !dto.lds[0].holds { EXIT_FAILED } else { EXIT_OK };
            Ok(Outcome { output: out, status })
        }
        Command::DkScan(a) => {
            let field = NumberField::parse(&a.field)?;
            let alpha = FieldElement::parse(&field, &a.unit)?;
            let ring = if a.module_basis.is_empty() {
                ModuleBasis::power_basis(&field)
            } else {
                let v: Vec<&str> = a.module_basis.iter().map(String::as_str).collect();
                ModuleBasis::parse(&field, &v)?
            };
            let seq = DkSequence::compute(&alpha, &ring, a.kmax)?;
            let rec = match dk_recurrence_check(&seq, a.kmax) {
                Ok(b) => Some(b),
                Err(Error::Precondition(_)) => None,
                Err(e) => return Err(e),
            };
            let conj = conjecture9_scan(&alpha, &ring, a.kmax)?;
            let vanishing = a.t.map(|t| lastprop_scan(&field, t, a.nmax, a.assert_monogenic)).transpose()?;
            let dto = DkDto::new(&seq, rec, &conj, vanishing.as_ref());
            let out = render(&dto, format, || Some(dto.csv()), || dto.text())?;
            let bad = rec == Some(false)
                || vanishing.as_ref().is_some_and(|v| !v.vanishing || v.monogenic_ok == Some(false));
            Ok(Outcome { output: out, status: if bad { EXIT_FAILED } else { EXIT_OK } })
        }
        Command::FamilyScan(a) => {
            let (lo, hi) = parse_range(&a.m_range)?;
            let mut entries = Vec::new();
            let mut status = EXIT_OK;
            let mut m = lo;
            while m <= hi {
                let e = family_entry(&m, a.kmax)?;
                if e.lds.as_ref().is_some_and(|v| !v.holds) {
                    status = EXIT_INTERNAL;
                }
                entries.push(e);
                m += 1;
            }
            let dto = FamilyDto { kmax: a.kmax, entries };
            let out = render(&dto, format, || Some(dto.csv()), || dto.text())?;
            Ok(Outcome { output: out, status })
        }
        Command::SnfCheck(a) => {
            let crit = match &a.m {
                Some(m) => {
                    let m: BigInt = m.trim().parse().map_err(|_| Error::Parse {
                        position: 0,
                        message: format!("--m {m:?} is not an integer"),
                    })?;
                    criterion_from_matrix(sqrt_family_matrix(&m), BigInt::from(4) * &m + 2)?
                }
                None => {
                    let inputs = resolve(&a.input, None)?;
                    snf_criterion(&inputs.module, &inputs.beta, require_unit(&inputs)?)?
                }
            };
            let dto = CriterionDto::from(&crit);
            let out = render(&dto, format, || None, || dto.text())?;
            Ok(Outcome { output: out, status: if crit.satisfied { EXIT_OK } else { EXIT_FAILED } })
        }
    }
}

fn ok(output: String) -> Result<Outcome> {
    Ok(Outcome { output, status: EXIT_OK })
}

fn failed(dto: &CriterionDto, format: Format) -> Result<Outcome> {
    Ok(Outcome { output: render(dto, format, || None, || dto.text())?, status: EXIT_FAILED })
}

fn family_entry(m: &BigInt, kmax: usize) -> Result<FamilyEntry> {
    let skipped = |reason: String| FamilyEntry {
        m: m.to_string(),
        status: "skipped".into(),
        reason: Some(reason),
        initial: Vec::new(),
        lds: None,
        deltas: Vec::new(),
        chi4: None,
        basis: Vec::new(),
    };
    let c = match thm2_family_basis(m.clone()) {
        Ok(c) => c,
        Err(Error::Precondition(reason)) => return Ok(skipped(reason)),
        Err(e) => return Err(e),
    };
    let fam = sqrt_family(m.clone())?;
    let crit = snf_criterion(&fam.surds, &c.beta, &c.unit)?;
    let report = generate(&c.beta, &c.unit, &c.basis, kmax.max(3))?;
    let x1 = report.column(0);
    Ok(FamilyEntry {
        m: m.to_string(),
        status: "built".into(),
        reason: None,
        initial: x1[..4].iter().map(ToString::to_string).collect(),
        lds: Some(VerdictDto::from(&report.lds[0])),
        deltas: crit.deltas.iter().map(ToString::to_string).collect(),
        chi4: Some(crit.chi[3].to_string()),
        basis: c.basis.vectors().iter().map(ToString::to_string).collect(),
    })
}

/// Parses `"a..b"` or `"a..=b"`, both inclusive.
pub fn parse_range(s: &str) -> Result<(BigInt, BigInt)> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| Error::Parse {
        position: 0,
        message: format!("expected a range like 2..10, got {s:?}"),
    })?;
    let hi_offset = lo.len() + 2;
    let (hi, hi_offset) = match hi.strip_prefix('=') {
        Some(h) => (h, hi_offset + 1),
        None => (hi, hi_offset),
    };
    let num = |t: &str, pos: usize| -> Result<BigInt> {
        t.trim().parse().map_err(|_| Error::Parse { position: pos, message: format!("{t:?} is not an integer") })
    };
    Ok((num(lo, 0)?, num(hi, hi_offset)?))
}

/// Parses arguments, runs, and writes the report; returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    match run(&config) {
        Ok(outcome) => {
            let written = match &config.out {
                Some(path) => std::fs::write(path, &outcome.output),
                None => {
                    use std::io::Write;
                    std::io::stdout().write_all(outcome.output.as_bytes())
                }
            };
            match written {
                Ok(()) => outcome.status,
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_FAILED
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

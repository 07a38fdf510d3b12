//! Serializable report types. Integers are written as decimal strings so no
//! consumer truncates them to 64 bits.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::basis::{LdsConstruction, SnfCriterion};
use crate::coordseq::{LdsVerdict, SequenceReport};
use crate::dk::{Conj9Class, Conj9Report, DkSequence, VanishingReport};
use crate::field::ModuleBasis;
use crate::linalg::IntMatrix;

fn strs(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn matrix(m: &IntMatrix) -> Vec<Vec<String>> {
    m.row_vecs().iter().map(|r| strs(r)).collect()
}

fn basis_strings(b: &ModuleBasis) -> Vec<String> {
    b.vectors().iter().map(ToString::to_string).collect()
}

/// Output of `construct-basis`; also the input format of `--basis-file`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_trace: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scale: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub expected_initial: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub input_basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub change: Vec<Vec<String>>,
    pub basis: Vec<String>,
}

impl BasisReport {
    pub fn from_construction(c: &LdsConstruction) -> Self {
        Self {
            field: c.basis.field().to_string(),
            unit: Some(c.unit.to_string()),
            beta: Some(c.beta.to_string()),
            source: Some(c.source.tag().to_string()),
            t_trace: Some(c.t_trace.to_string()),
            scale: Some(c.scale.to_string()),
            expected_initial: strs(&c.expected_initial()),
            input_basis: basis_strings(&c.input_basis),
            change: matrix(&c.change),
            basis: basis_strings(&c.basis),
        }
    }

    pub fn from_basis(b: &ModuleBasis, unit: Option<String>, beta: Option<String>) -> Self {
        Self {
            field: b.field().to_string(),
            unit,
            beta,
            source: Some("given".into()),
            t_trace: None,
            scale: None,
            expected_initial: Vec::new(),
            input_basis: Vec::new(),
            change: Vec::new(),
            basis: basis_strings(b),
        }
    }

    pub fn text(&self) -> String {
        let mut s = format!("field: {}\n", self.field);
        if let Some(src) = &self.source {
            let _ = writeln!(s, "source: {src}");
        }
        if let (Some(t), Some(a)) = (&self.t_trace, &self.scale) {
            let _ = writeln!(s, "T = {t}, a = {a}");
        }
        if !self.expected_initial.is_empty() {
            let _ = writeln!(s, "x1 starts: {}", self.expected_initial.join(", "));
        }
        for (i, w) in self.basis.iter().enumerate() {
            let _ = writeln!(s, "w{} = {w}", i + 1);
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDto {
    pub holds: bool,
    /// `[n, m]` with `n | m` and `x(n) ∤ x(m)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<[usize; 2]>,
}

impl From<&LdsVerdict> for VerdictDto {
    fn from(v: &LdsVerdict) -> Self {
        match v {
            LdsVerdict::Holds => Self { holds: true, witness: None },
            LdsVerdict::Fails { n, m } => Self { holds: false, witness: Some([*n, *m]) },
        }
    }
}

/// Output of `emit-sequence` and `verify-lds`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceDto {
    pub field: String,
    pub unit: String,
    pub beta: String,
    pub basis: Vec<String>,
    pub kmax: usize,
    /// `s_1, …, s_d` of `x(k+d) = s_1 x(k+d-1) + … + s_d x(k)`.
    pub recurrence: Vec<String>,
    pub recurrence_ok: bool,
    pub charpoly_degree: usize,
    /// Minimal recurrence order per column, `null` when undecided.
    pub minimal_orders: Vec<Option<usize>>,
    pub lds: Vec<VerdictDto>,
    /// Row `k` holds `x_1(k), …, x_n(k)`.
    pub terms: Vec<Vec<String>>,
}

impl SequenceDto {
    pub fn new(r: &SequenceReport, recurrence_ok: bool) -> Self {
        Self {
            field: r.basis.field().to_string(),
            unit: r.unit.to_string(),
            beta: r.beta.to_string(),
            basis: basis_strings(&r.basis),
            kmax: r.kmax(),
            recurrence: strs(r.recurrence.coeffs()),
            recurrence_ok,
            charpoly_degree: r.minimality.charpoly_degree,
            minimal_orders: r.minimality.orders.clone(),
            lds: r.lds.iter().map(VerdictDto::from).collect(),
            terms: r.terms.iter().map(|row| strs(row)).collect(),
        }
    }

    pub fn csv(&self) -> String {
        let width = self.terms.first().map_or(0, Vec::len);
        let mut s = String::from("k");
        for i in 1..=width {
            let _ = write!(s, ",x{i}");
        }
        s.push('\n');
        for (k, row) in self.terms.iter().enumerate() {
            let _ = writeln!(s, "{k},{}", row.join(","));
        }
        s
    }

    pub fn text(&self) -> String {
        let mut s = format!("field: {}\nunit: {}\nbeta: {}\n", self.field, self.unit, self.beta);
        let _ = writeln!(s, "recurrence: {} (holds: {})", self.recurrence.join(", "), self.recurrence_ok);
        for (i, v) in self.lds.iter().enumerate() {
            let order = self.minimal_orders[i].map_or("?".to_string(), |o| o.to_string());
            match v.witness {
                None => {
                    let _ = writeln!(s, "x{}: order {order}, LDS", i + 1);
                }
                Some([n, m]) => {
                    let _ = writeln!(s, "x{}: order {order}, not LDS (x({n}) does not divide x({m}))", i + 1);
                }
            }
        }
        s
    }
}

/// Output of `snf-check` and of a failed full-module construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionDto {
    pub b: Vec<Vec<String>>,
    pub x: Vec<Vec<String>>,
    pub y: Vec<Vec<String>>,
    pub deltas: Vec<String>,
    pub chi: Vec<String>,
    pub t_trace: String,
    pub ratio: String,
    pub satisfied: bool,
}

impl From<&SnfCriterion> for CriterionDto {
    fn from(c: &SnfCriterion) -> Self {
        Self {
            b: matrix(&c.b),
            x: matrix(&c.snf.x),
            y: matrix(&c.snf.y),
            deltas: strs(&c.deltas),
            chi: strs(&c.chi),
            t_trace: c.t_trace.to_string(),
            ratio: c.ratio().to_string(),
            satisfied: c.satisfied,
        }
    }
}

impl CriterionDto {
    pub fn text(&self) -> String {
        format!(
            "deltas: {}\nchi: {}\ngcd(chi4, delta4/delta1 = {}) = 1: {}\n",
            self.deltas.join(", "),
            self.chi.join(", "),
            self.ratio,
            self.satisfied
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingDto {
    pub t: usize,
    pub discriminant: String,
    pub indices: Vec<usize>,
    pub y1: Vec<String>,
    pub d_tilde: Vec<String>,
    pub vanishing: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monogenic_ok: Option<bool>,
}

impl From<&VanishingReport> for VanishingDto {
    fn from(r: &VanishingReport) -> Self {
        Self {
            t: r.t,
            discriminant: r.discriminant.to_string(),
            indices: r.rows.iter().map(|row| row.k).collect(),
            y1: r.rows.iter().map(|row| row.y1.to_string()).collect(),
            d_tilde: r.rows.iter().map(|row| row.d_tilde.to_string()).collect(),
            vanishing: r.vanishing,
            monogenic_ok: r.monogenic_ok,
        }
    }
}

/// Output of `dk-scan`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DkDto {
    pub alpha: String,
    pub ring: Vec<String>,
    /// `d_0, …, d_kmax`.
    pub terms: Vec<String>,
    /// `null` when the order-4 recurrence does not apply to `α`.
    pub recurrence_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divisibility_failure: Option<[usize; 2]>,
    pub conj9_hits: Vec<usize>,
    pub conj9_density: String,
    pub conj9_class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vanishing: Option<VanishingDto>,
}

impl DkDto {
    pub fn new(
        seq: &DkSequence,
        recurrence_ok: Option<bool>,
        conj9: &Conj9Report,
        vanishing: Option<&VanishingReport>,
    ) -> Self {
        let class = match conj9.class {
            Conj9Class::DegreeAtLeastThree => "degree-at-least-three",
            Conj9Class::NonUnitDegreeTwo => "non-unit-degree-two",
            Conj9Class::Excluded => "excluded",
        };
        Self {
            alpha: seq.alpha.to_string(),
            ring: basis_strings(&seq.ringbasis),
            terms: strs(&seq.terms),
            recurrence_ok,
            divisibility_failure: seq.divisibility_failure().map(|(n, m)| [n, m]),
            conj9_hits: conj9.hits.clone(),
            conj9_density: conj9.density.to_string(),
            conj9_class: class.to_string(),
            vanishing: vanishing.map(VanishingDto::from),
        }
    }

    pub fn csv(&self) -> String {
        let mut s = String::from("k,dk\n");
        for (k, d) in self.terms.iter().enumerate() {
            let _ = writeln!(s, "{k},{d}");
        }
        s
    }

    pub fn text(&self) -> String {
        let mut s = format!("alpha: {}\nd: {}\n", self.alpha, self.terms.join(", "));
        let rec = self.recurrence_ok.map_or("not applicable".to_string(), |b| b.to_string());
        let _ = writeln!(s, "order-4 recurrence: {rec}");
        let _ = writeln!(s, "k with d_k = d_1: {:?} ({})", self.conj9_hits, self.conj9_class);
        if let Some(v) = &self.vanishing {
            let _ = writeln!(s, "vanishing for k = 1 mod {}: {}", v.t, v.vanishing);
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyEntry {
    pub m: String,
    /// `built` or `skipped`.
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub initial: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lds: Option<VerdictDto>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub deltas: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi4: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub basis: Vec<String>,
}

/// Output of `family-scan`, sorted by `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDto {
    pub kmax: usize,
    pub entries: Vec<FamilyEntry>,
}

impl FamilyDto {
    pub fn csv(&self) -> String {
        let mut s = String::from("m,status,x1_0,x1_1,x1_2,x1_3,lds\n");
        for e in &self.entries {
            let init = if e.initial.is_empty() { ",,,".to_string() } else { e.initial.join(",") };
            let lds = e.lds.as_ref().map_or(String::new(), |v| v.holds.to_string());
            let _ = writeln!(s, "{},{},{init},{lds}", e.m, e.status);
        }
        s
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            match &e.lds {
                Some(v) => {
                    let _ = writeln!(s, "m = {}: x1 starts {}; LDS: {}", e.m, e.initial.join(", "), v.holds);
                }
                None => {
                    let _ = writeln!(s, "m = {}: skipped ({})", e.m, e.reason.as_deref().unwrap_or(""));
                }
            }
        }
        s
    }
}

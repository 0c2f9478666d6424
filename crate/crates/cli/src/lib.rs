//! Batch frontend for `semigap`: one JSON problem in, one JSON result out.

pub mod document;
pub mod selftest;
pub mod table;

use std::time::Instant;

use semigap::affine::{
    extreme_rays, factorizations, is_c_cofinite, relative_gaps, AffineSemigroup, AxisSemigroup,
    CofinitenessReport, Complement,
};
use semigap::diophantine::{hilbert_basis, minimal_solutions};
use semigap::groebner::ideal_complement_groebner;
use semigap::ideal::{complement_by_box, complement_by_preimage, IdealComplementResult, SemigroupIdeal};
use semigap::{Error, IntMatrix, IntVector, TermOrder, TermOrderKind};
use serde_json::{Map, Value};

pub use document::{Body, Kind, Method, ProblemDocument, ResultDocument};
use document::{from_int_vector, to_int_vector, AxisWitness, Big, CofinitenessWitnesses, MethodOutcome, MixingWitness, Vector};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("algorithms disagree: {0}")]
    Disagreement(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Malformed(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Disagreement(_) => 4,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::DimensionMismatch { .. }
            | Error::Negative(_)
            | Error::ZeroGenerator
            | Error::Empty(_)
            | Error::IndexOutOfRange { .. } => CliError::Malformed(e.to_string()),
            Error::Inconsistency(_) => CliError::Disagreement(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

pub fn parse_document(text: &str) -> Result<ProblemDocument, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Malformed(e.to_string()))
}

/// `lex`, `grlex` or `grevlex` on `nvars` variables.
pub fn parse_order(name: &str, nvars: usize) -> Result<TermOrder, CliError> {
    let kind = match name {
        "lex" => TermOrderKind::Lex,
        "grlex" => TermOrderKind::Grlex,
        "grevlex" => TermOrderKind::Grevlex,
        _ => return Err(CliError::Malformed(format!("unknown term order `{name}`"))),
    };
    Ok(TermOrder::new(kind, nvars))
}

fn required<'a, T>(field: &'a Option<T>, name: &str, kind: Kind) -> Result<&'a T, CliError> {
    field.as_ref().ok_or_else(|| CliError::Malformed(format!("`{name}` is required for {}", kind.name())))
}

fn forbid<T>(field: &Option<T>, name: &str, kind: Kind) -> Result<(), CliError> {
    match field {
        Some(_) => Err(CliError::Malformed(format!("`{name}` does not apply to {}", kind.name()))),
        None => Ok(()),
    }
}

fn semigroup(gens: &[Vector]) -> Result<AffineSemigroup, CliError> {
    Ok(AffineSemigroup::new(gens.iter().map(|g| to_int_vector(g)).collect())?)
}

fn vectors(vs: &[IntVector]) -> Vec<Vector> {
    vs.iter().map(from_int_vector).collect()
}

struct Clock {
    timing: Map<String, Value>,
}

impl Clock {
    fn time<T>(&mut self, stage: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        let ms = start.elapsed().as_secs_f64() * 1e3;
        self.timing.insert(format!("{stage}_ms"), Value::from((ms * 1e3).round() / 1e3));
        out
    }
}

/// Solves one document. The result always carries timing; callers drop it
/// when byte-stable output is wanted.
pub fn run(doc: &ProblemDocument) -> Result<ResultDocument, CliError> {
    let kind = doc.kind.ok_or_else(|| CliError::Malformed("`kind` is missing".into()))?;
    let mut clock = Clock { timing: Map::new() };
    let start = Instant::now();
    let body = match kind {
        Kind::RelativeGaps | Kind::CofiniteCheck => cofiniteness(doc, kind, &mut clock)?,
        Kind::IdealComplement | Kind::Apery => complement(doc, kind, &mut clock)?,
        Kind::Hilbert => hilbert(doc, &mut clock)?,
        Kind::Factorize => factorize(doc, &mut clock)?,
    };
    clock.timing.insert("total_ms".into(), Value::from((start.elapsed().as_secs_f64() * 1e6).round() / 1e3));
    Ok(ResultDocument { kind, body, timing: Some(clock.timing) })
}

fn witnesses(report: &CofinitenessReport) -> CofinitenessWitnesses {
    let axis_semigroups = report
        .axis_semigroups
        .iter()
        .enumerate()
        .map(|(i, a)| match a {
            AxisSemigroup::Numerical(n) => AxisWitness {
                generator: i,
                numerical: true,
                generators: Some(n.generators().iter().map(|&g| Big::from(g)).collect()),
                gcd: None,
            },
            AxisSemigroup::NotNumerical { gcd } => {
                AxisWitness { generator: i, numerical: false, generators: None, gcd: Some(Big(gcd.clone())) }
            }
        })
        .collect();
    let mixing = report
        .mixing
        .iter()
        .map(|m| MixingWitness { i: m.i, j: m.j, n: m.coefficient.clone().map(Big) })
        .collect();
    CofinitenessWitnesses { axis_semigroups, mixing }
}

/// `C = ambient`, `S = sub`; without `sub`, `S = ambient` inside `N^d`.
fn cofiniteness(doc: &ProblemDocument, kind: Kind, clock: &mut Clock) -> Result<Body, CliError> {
    for (field, name) in [(&doc.ideal_base, "ideal_base"), (&doc.matrix, "matrix")] {
        forbid(field, name, kind)?;
    }
    forbid(&doc.method, "method", kind)?;
    forbid(&doc.order, "order", kind)?;
    forbid(&doc.rhs, "rhs", kind)?;
    forbid(&doc.element, "element", kind)?;
    let ambient = semigroup(required(&doc.ambient, "ambient", kind)?)?;
    let (c, s) = match &doc.sub {
        Some(sub) => (ambient, semigroup(sub)?),
        None => (AffineSemigroup::orthant(ambient.dim()), ambient),
    };
    let report = clock.time("report", || is_c_cofinite(&c, &s))?;
    let w = witnesses(&report);
    if kind == Kind::CofiniteCheck {
        return Ok(Body::CofiniteCheck { cofinite: report.cofinite, witnesses: w });
    }
    let gaps = clock.time("gaps", || relative_gaps(&c, &s))?;
    if gaps.is_finite() != report.cofinite {
        return Err(CliError::Disagreement(format!(
            "the cofiniteness test says {} but the gap computation says {}",
            report.cofinite,
            gaps.is_finite()
        )));
    }
    Ok(Body::RelativeGaps { finite: gaps.is_finite(), gaps: gaps.finite().map(vectors), witnesses: w })
}

fn complement(doc: &ProblemDocument, kind: Kind, clock: &mut Clock) -> Result<Body, CliError> {
    forbid(&doc.sub, "sub", kind)?;
    forbid(&doc.matrix, "matrix", kind)?;
    forbid(&doc.rhs, "rhs", kind)?;
    forbid(&doc.element, "element", kind)?;
    let s = semigroup(required(&doc.ambient, "ambient", kind)?)?;
    let base = match (&doc.ideal_base, kind) {
        (Some(b), _) => b.iter().map(|v| to_int_vector(v)).collect(),
        (None, Kind::Apery) => extreme_rays(&s)?,
        (None, _) => return Err(CliError::Malformed("`ideal_base` is required for ideal-complement".into())),
    };
    let order = parse_order(doc.order.as_deref().unwrap_or("grevlex"), s.len())?;
    let ideal = SemigroupIdeal::new(s, base)?;
    let methods = match doc.method.unwrap_or(Method::Box) {
        Method::All => vec![Method::Box, Method::Preimage, Method::Groebner],
        m => vec![m],
    };
    let mut results: Vec<(Method, IdealComplementResult)> = Vec::new();
    for m in methods {
        let r = clock.time(m.name(), || match m {
            Method::Box => complement_by_box(&ideal),
            Method::Preimage => complement_by_preimage(&ideal),
            Method::Groebner => ideal_complement_groebner(&ideal, &order),
            Method::All => unreachable!("expanded above"),
        })?;
        results.push((m, r));
    }
    let (first_method, first) = &results[0];
    for (m, r) in &results[1..] {
        if r.as_complement() != first.as_complement() {
            return Err(CliError::Disagreement(format!(
                "{} and {} give different complements",
                first_method.name(),
                m.name()
            )));
        }
    }
    let complement = match first.as_complement() {
        Complement::Finite(v) => Some(vectors(&v)),
        Complement::Infinite => None,
    };
    Ok(Body::Complement {
        base: vectors(ideal.base()),
        finite: first.finite,
        complement,
        methods: results
            .iter()
            .map(|(m, r)| MethodOutcome {
                method: *m,
                finite: r.finite,
                witnesses: r.witnesses.iter().map(|k| k.clone().map(Big)).collect(),
            })
            .collect(),
    })
}

fn hilbert(doc: &ProblemDocument, clock: &mut Clock) -> Result<Body, CliError> {
    let kind = Kind::Hilbert;
    for (field, name) in [(&doc.ambient, "ambient"), (&doc.sub, "sub"), (&doc.ideal_base, "ideal_base")] {
        forbid(field, name, kind)?;
    }
    forbid(&doc.method, "method", kind)?;
    forbid(&doc.order, "order", kind)?;
    forbid(&doc.element, "element", kind)?;
    let rows = required(&doc.matrix, "matrix", kind)?;
    let cols = rows.first().map_or(0, Vec::len);
    if rows.is_empty() || cols == 0 {
        return Err(CliError::Malformed("`matrix` is empty".into()));
    }
    if rows.iter().any(|r| r.len() != cols) {
        return Err(CliError::Malformed("`matrix` rows have different lengths".into()));
    }
    let entries = rows.iter().flatten().map(|x| x.0.clone()).collect();
    let a = IntMatrix::new(rows.len(), cols, entries)?;
    let solutions = match &doc.rhs {
        None => clock.time("solve", || hilbert_basis(&a))?.basis,
        Some(b) => clock.time("solve", || minimal_solutions(&a, &to_int_vector(b)))?.minimals,
    };
    Ok(Body::Hilbert { rhs: doc.rhs.clone(), solutions: vectors(&solutions) })
}

fn factorize(doc: &ProblemDocument, clock: &mut Clock) -> Result<Body, CliError> {
    let kind = Kind::Factorize;
    for (field, name) in [(&doc.sub, "sub"), (&doc.ideal_base, "ideal_base"), (&doc.matrix, "matrix")] {
        forbid(field, name, kind)?;
    }
    forbid(&doc.method, "method", kind)?;
    forbid(&doc.order, "order", kind)?;
    forbid(&doc.rhs, "rhs", kind)?;
    let s = semigroup(required(&doc.ambient, "ambient", kind)?)?;
    let element = required(&doc.element, "element", kind)?;
    let found = clock.time("factorize", || factorizations(&s, &to_int_vector(element)))?;
    Ok(Body::Factorize { element: element.clone(), member: !found.is_empty(), factorizations: vectors(&found) })
}

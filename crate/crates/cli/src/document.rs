//! Input and output documents. Both are JSON; integers may be written as
//! numbers of any size or as decimal strings.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use semigap::IntVector;
use serde::de::Error as _;
use serde::ser::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{Map, Value};

/// An unbounded integer, serialized as a bare JSON number.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Big(pub BigInt);

impl From<BigInt> for Big {
    fn from(v: BigInt) -> Self {
        Big(v)
    }
}

impl From<i64> for Big {
    fn from(v: i64) -> Self {
        Big(v.into())
    }
}

impl From<u64> for Big {
    fn from(v: u64) -> Self {
        Big(v.into())
    }
}

impl fmt::Display for Big {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Big {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let n = serde_json::Number::from_str(&self.0.to_string()).map_err(S::Error::custom)?;
        n.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Big {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = match Value::deserialize(d)? {
            Value::Number(n) => n.to_string(),
            Value::String(s) => s.trim().to_string(),
            other => return Err(D::Error::custom(format!("expected an integer, found {other}"))),
        };
        BigInt::from_str(&text).map(Big).map_err(|_| D::Error::custom(format!("`{text}` is not an integer")))
    }
}

pub type Vector = Vec<Big>;

pub fn to_int_vector(v: &[Big]) -> IntVector {
    IntVector::new(v.iter().map(|x| x.0.clone()).collect())
}

pub fn from_int_vector(v: &IntVector) -> Vector {
    v.coords().iter().cloned().map(Big).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    RelativeGaps,
    CofiniteCheck,
    IdealComplement,
    Apery,
    Hilbert,
    Factorize,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::RelativeGaps => "relative-gaps",
            Kind::CofiniteCheck => "cofinite-check",
            Kind::IdealComplement => "ideal-complement",
            Kind::Apery => "apery",
            Kind::Hilbert => "hilbert",
            Kind::Factorize => "factorize",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Box,
    Preimage,
    Groebner,
    All,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Box => "box",
            Method::Preimage => "preimage",
            Method::Groebner => "groebner",
            Method::All => "all",
        }
    }
}

/// One problem. Which fields are required depends on `kind`:
///
/// | kind               | required            | optional                    |
/// |--------------------|---------------------|-----------------------------|
/// | `relative-gaps`    | `ambient`           | `sub`                       |
/// | `cofinite-check`   | `ambient`           | `sub`                       |
/// | `ideal-complement` | `ambient`, `ideal_base` | `method`, `order`       |
/// | `apery`            | `ambient`           | `ideal_base`, `method`, `order` |
/// | `hilbert`          | `matrix`            | `rhs`                       |
/// | `factorize`        | `ambient`, `element`|                             |
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<Kind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient: Option<Vec<Vector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sub: Option<Vec<Vector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal_base: Option<Vec<Vector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<Method>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Vector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<Vector>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResultDocument {
    pub kind: Kind,
    #[serde(flatten)]
    pub body: Body,
    /// Milliseconds per stage. Left out of the output unless requested, so
    /// that output is reproducible byte for byte.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Map<String, Value>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Body {
    RelativeGaps {
        finite: bool,
        /// `null` when infinite.
        gaps: Option<Vec<Vector>>,
        witnesses: CofinitenessWitnesses,
    },
    CofiniteCheck {
        cofinite: bool,
        witnesses: CofinitenessWitnesses,
    },
    Complement {
        /// The base actually used; for `apery` without `ideal_base`, the
        /// extreme rays.
        base: Vec<Vector>,
        finite: bool,
        complement: Option<Vec<Vector>>,
        methods: Vec<MethodOutcome>,
    },
    Hilbert {
        #[serde(skip_serializing_if = "Option::is_none")]
        rhs: Option<Vector>,
        solutions: Vec<Vector>,
    },
    Factorize {
        element: Vector,
        member: bool,
        factorizations: Vec<Vector>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CofinitenessWitnesses {
    pub axis_semigroups: Vec<AxisWitness>,
    pub mixing: Vec<MixingWitness>,
}

/// `S_i = {λ : λ g_i ∈ S}` for the `i`-th generator of `C`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxisWitness {
    pub generator: usize,
    pub numerical: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Big>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gcd: Option<Big>,
}

/// Least `n` with `g_i + n g_j ∈ S`, `null` when there is none.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MixingWitness {
    pub i: usize,
    pub j: usize,
    pub n: Option<Big>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MethodOutcome {
    pub method: Method,
    pub finite: bool,
    /// Per generator: the least `k` with `k g_i` in the ideal (box and
    /// preimage), or the least pure power of `Z_i` among the leading terms
    /// (groebner).
    pub witnesses: Vec<Option<Big>>,
}

/// Indented JSON with arrays of scalars kept on one line, so that each
/// vector reads as a row.
pub fn to_pretty_json<T: Serialize>(value: &T) -> String {
    fn flat(v: &Value) -> bool {
        match v {
            Value::Array(items) => items.iter().all(|x| !x.is_array() && !x.is_object()),
            Value::Object(_) => false,
            _ => true,
        }
    }
    fn write(v: &Value, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent + 1);
        match v {
            Value::Array(items) if !items.is_empty() && !flat(v) => {
                out.push_str("[\n");
                for (k, x) in items.iter().enumerate() {
                    out.push_str(&pad);
                    write(x, indent + 1, out);
                    out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
                }
                out.push_str(&"  ".repeat(indent));
                out.push(']');
            }
            Value::Object(map) if !map.is_empty() => {
                out.push_str("{\n");
                for (k, (key, x)) in map.iter().enumerate() {
                    out.push_str(&pad);
                    out.push_str(&Value::String(key.clone()).to_string());
                    out.push_str(": ");
                    write(x, indent + 1, out);
                    out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
                }
                out.push_str(&"  ".repeat(indent));
                out.push('}');
            }
            Value::Array(items) => {
                let parts: Vec<String> = items.iter().map(Value::to_string).collect();
                out.push('[');
                out.push_str(&parts.join(", "));
                out.push(']');
            }
            _ => out.push_str(&v.to_string()),
        }
    }
    let value = serde_json::to_value(value).expect("documents serialize to JSON");
    let mut out = String::new();
    write(&value, 0, &mut out);
    out.push('\n');
    out
}

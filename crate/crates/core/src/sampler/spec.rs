//! Sampler identifiers, hyperparameters and their documented defaults.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

pub const DEFAULT_SEED: u64 = 42;

/// The sampling algorithms, by their command-line identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    /// Uniform random nodes.
    Rn,
    /// Random nodes proportional to degree.
    Rdn,
    /// Random nodes proportional to PageRank.
    Prn,
    /// Uniform random edges.
    Re,
    /// Random node, then a random incident edge.
    Rne,
    /// Hybrid of `Rne` and `Re` steps.
    Hrne,
    /// Random edges with total induction.
    Ties,
    /// Streamed edges with partial induction.
    Pies,
    Bfs,
    Dfs,
    /// Snowball.
    Sb,
    /// Forest fire.
    Ff,
    /// Community structure expansion.
    Cse,
    /// Random node-neighbor.
    Rnn,
    /// Shortest paths between random pairs.
    Sp,
    Rw,
    /// Metropolis-Hastings random walk.
    Mhrw,
    /// Rejection-constrained Metropolis-Hastings walk.
    Rcmhrw,
    /// Non-backtracking walk.
    Nbtrw,
    /// Circulated-neighbors walk.
    Cnrw,
    /// Random walk with jumps.
    Rwj,
    /// Common-neighbor-aware walk.
    Cnarw,
    /// Frontier of random walkers.
    Frw,
    /// Random walk with restart.
    Rwr,
    /// Loop-erased random walk (Wilson's algorithm).
    Lerw,
}

/// Whether a method's size budget counts nodes or edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Budget {
    Nodes,
    Edges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Node,
    Edge,
    Exploration,
}

impl Method {
    pub const ALL: [Method; 25] = [
        Method::Rn,
        Method::Rdn,
        Method::Prn,
        Method::Re,
        Method::Rne,
        Method::Hrne,
        Method::Ties,
        Method::Pies,
        Method::Bfs,
        Method::Dfs,
        Method::Sb,
        Method::Ff,
        Method::Cse,
        Method::Rnn,
        Method::Sp,
        Method::Rw,
        Method::Mhrw,
        Method::Rcmhrw,
        Method::Nbtrw,
        Method::Cnrw,
        Method::Rwj,
        Method::Cnarw,
        Method::Frw,
        Method::Rwr,
        Method::Lerw,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Rn => "rn",
            Method::Rdn => "rdn",
            Method::Prn => "prn",
            Method::Re => "re",
            Method::Rne => "rne",
            Method::Hrne => "hrne",
            Method::Ties => "ties",
            Method::Pies => "pies",
            Method::Bfs => "bfs",
            Method::Dfs => "dfs",
            Method::Sb => "sb",
            Method::Ff => "ff",
            Method::Cse => "cse",
            Method::Rnn => "rnn",
            Method::Sp => "sp",
            Method::Rw => "rw",
            Method::Mhrw => "mhrw",
            Method::Rcmhrw => "rcmhrw",
            Method::Nbtrw => "nbtrw",
            Method::Cnrw => "cnrw",
            Method::Rwj => "rwj",
            Method::Cnarw => "cnarw",
            Method::Frw => "frw",
            Method::Rwr => "rwr",
            Method::Lerw => "lerw",
        }
    }

    pub fn family(self) -> Family {
        use Method::*;
        match self {
            Rn | Rdn | Prn => Family::Node,
            Re | Rne | Hrne | Ties | Pies => Family::Edge,
            _ => Family::Exploration,
        }
    }

    /// TIES and PIES are edge samplers with a node budget.
    pub fn budget(self) -> Budget {
        match self {
            Method::Re | Method::Rne | Method::Hrne => Budget::Edges,
            _ => Budget::Nodes,
        }
    }

    /// Hyperparameters accepted by this method, with defaults.
    pub fn params(self) -> &'static [ParamDef] {
        use Method::*;
        match self {
            Rn | Rdn | Prn | Re | Ties | Pies | Bfs | Dfs | Cse | Rnn => &[],
            Rne | Sp | Rw | Nbtrw | Cnrw | Cnarw | Lerw => &WALK_PARAMS,
            Hrne => &HRNE_PARAMS,
            Sb => &SB_PARAMS,
            Ff => &FF_PARAMS,
            Mhrw | Rcmhrw => &MH_PARAMS,
            Rwj => &RWJ_PARAMS,
            Rwr => &RWR_PARAMS,
            Frw => &FRW_PARAMS,
        }
    }
}

const WALK_PARAMS: [ParamDef; 1] = [STUCK];
const HRNE_PARAMS: [ParamDef; 2] = [
    ParamDef::real("q", 0.8, Range::Closed01, "probability of a node-edge step"),
    STUCK,
];
const SB_PARAMS: [ParamDef; 2] = [
    ParamDef::int("k", 50, 1, "maximum neighbors enqueued per node"),
    REKINDLES,
];
const FF_PARAMS: [ParamDef; 2] = [
    ParamDef::real("p", 0.4, Range::OpenClosed01, "burn probability"),
    REKINDLES,
];
const MH_PARAMS: [ParamDef; 2] = [
    ParamDef::real("alpha", 1.0, Range::Positive, "degree-ratio exponent"),
    STUCK,
];
const RWJ_PARAMS: [ParamDef; 2] = [
    ParamDef::real("p_jump", 0.1, Range::Closed01, "jump probability per step"),
    STUCK,
];
const RWR_PARAMS: [ParamDef; 2] = [
    ParamDef::real(
        "p_restart",
        0.1,
        Range::ClosedOpen01,
        "restart probability per step",
    ),
    STUCK,
];
const FRW_PARAMS: [ParamDef; 2] = [
    ParamDef::int("walkers", 10, 1, "number of simultaneous walkers"),
    STUCK,
];

const STUCK: ParamDef = ParamDef::int(
    "stuck_factor",
    100,
    1,
    "abort after stuck_factor * n consecutive steps that add nothing new",
);

const REKINDLES: ParamDef = ParamDef::int(
    "max_rekindles",
    100,
    0,
    "abort after this many consecutive restarts that reach nothing beyond their seed",
);

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::argument(format!("unknown sampling method {s:?}")))
    }
}

impl Serialize for Method {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(u64),
    Real(f64),
}

impl ParamValue {
    pub fn as_f64(self) -> f64 {
        match self {
            ParamValue::Int(i) => i as f64,
            ParamValue::Real(x) => x,
        }
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(i) => write!(f, "{i}"),
            ParamValue::Real(x) => write!(f, "{x}"),
        }
    }
}

impl From<u64> for ParamValue {
    fn from(v: u64) -> Self {
        ParamValue::Int(v)
    }
}

impl From<usize> for ParamValue {
    fn from(v: usize) -> Self {
        ParamValue::Int(v as u64)
    }
}

impl From<i32> for ParamValue {
    fn from(v: i32) -> Self {
        if v >= 0 {
            ParamValue::Int(v as u64)
        } else {
            ParamValue::Real(f64::from(v))
        }
    }
}

impl From<f64> for ParamValue {
    fn from(v: f64) -> Self {
        ParamValue::Real(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Range {
    Closed01,
    OpenClosed01,
    ClosedOpen01,
    Positive,
    AtLeast(u64),
}

impl Range {
    fn admits(self, x: f64) -> bool {
        match self {
            Range::Closed01 => (0.0..=1.0).contains(&x),
            Range::OpenClosed01 => x > 0.0 && x <= 1.0,
            Range::ClosedOpen01 => (0.0..1.0).contains(&x),
            Range::Positive => x > 0.0 && x.is_finite(),
            Range::AtLeast(min) => x >= min as f64,
        }
    }

    fn describe(self) -> String {
        match self {
            Range::Closed01 => "[0, 1]".into(),
            Range::OpenClosed01 => "(0, 1]".into(),
            Range::ClosedOpen01 => "[0, 1)".into(),
            Range::Positive => "> 0".into(),
            Range::AtLeast(min) => format!("an integer >= {min}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamDef {
    pub name: &'static str,
    pub default: ParamValue,
    pub range: Range,
    pub help: &'static str,
}

impl ParamDef {
    const fn real(name: &'static str, default: f64, range: Range, help: &'static str) -> Self {
        ParamDef {
            name,
            default: ParamValue::Real(default),
            range,
            help,
        }
    }

    const fn int(name: &'static str, default: u64, min: u64, help: &'static str) -> Self {
        ParamDef {
            name,
            default: ParamValue::Int(default),
            range: Range::AtLeast(min),
            help,
        }
    }

    fn is_int(&self) -> bool {
        matches!(self.default, ParamValue::Int(_))
    }

    fn coerce(&self, method: Method, value: ParamValue) -> Result<ParamValue> {
        let bad = |why: String| Error::argument(format!("{method} parameter {}: {why}", self.name));
        let value = if self.is_int() {
            match value {
                ParamValue::Int(i) => ParamValue::Int(i),
                ParamValue::Real(x) if x >= 0.0 && x.fract() == 0.0 && x < u64::MAX as f64 => {
                    ParamValue::Int(x as u64)
                }
                ParamValue::Real(x) => return Err(bad(format!("{x} is not an integer"))),
            }
        } else {
            ParamValue::Real(value.as_f64())
        };
        if !self.range.admits(value.as_f64()) {
            return Err(bad(format!("{value} must be {}", self.range.describe())));
        }
        Ok(value)
    }

    fn parse(&self, method: Method, text: &str) -> Result<ParamValue> {
        let value = if self.is_int() {
            text.parse::<u64>().map(ParamValue::Int).ok()
        } else {
            text.parse::<f64>().map(ParamValue::Real).ok()
        };
        let value = value.ok_or_else(|| {
            Error::argument(format!(
                "{method} parameter {}: cannot parse {text:?}",
                self.name
            ))
        })?;
        self.coerce(method, value)
    }
}

/// A method, its hyperparameters and the seed. Immutable once built; every
/// parameter (defaults included) is visible through [`SamplerSpec::describe`].
#[derive(Debug, Clone, PartialEq)]
pub struct SamplerSpec {
    method: Method,
    params: BTreeMap<&'static str, ParamValue>,
    seed: u64,
}

impl SamplerSpec {
    pub fn new(method: Method) -> Self {
        SamplerSpec {
            method,
            params: method
                .params()
                .iter()
                .map(|d| (d.name, d.default))
                .collect(),
            seed: DEFAULT_SEED,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Overrides one hyperparameter. Unknown names and out-of-range values
    /// are rejected.
    pub fn with_param(mut self, name: &str, value: impl Into<ParamValue>) -> Result<Self> {
        let def = self.def(name)?;
        let value = def.coerce(self.method, value.into())?;
        self.params.insert(def.name, value);
        Ok(self)
    }

    /// Like [`with_param`](Self::with_param) with the value given as text.
    pub fn with_param_str(mut self, name: &str, value: &str) -> Result<Self> {
        let def = self.def(name)?;
        let value = def.parse(self.method, value)?;
        self.params.insert(def.name, value);
        Ok(self)
    }

    fn def(&self, name: &str) -> Result<&'static ParamDef> {
        self.method
            .params()
            .iter()
            .find(|d| d.name == name)
            .ok_or_else(|| {
                let known: Vec<_> = self.method.params().iter().map(|d| d.name).collect();
                Error::argument(format!(
                    "{} has no parameter {name:?} (known: {})",
                    self.method,
                    if known.is_empty() {
                        "none".to_string()
                    } else {
                        known.join(", ")
                    }
                ))
            })
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn params(&self) -> &BTreeMap<&'static str, ParamValue> {
        &self.params
    }

    /// All hyperparameters plus `seed`.
    pub fn describe(&self) -> BTreeMap<String, ParamValue> {
        let mut out: BTreeMap<String, ParamValue> = self
            .params
            .iter()
            .map(|(k, v)| (k.to_string(), *v))
            .collect();
        out.insert("seed".into(), ParamValue::Int(self.seed));
        out
    }

    pub(crate) fn real(&self, name: &str) -> f64 {
        self.params[name].as_f64()
    }

    pub(crate) fn count(&self, name: &str) -> usize {
        match self.params[name] {
            ParamValue::Int(i) => usize::try_from(i).unwrap_or(usize::MAX),
            ParamValue::Real(x) => x as usize,
        }
    }
}

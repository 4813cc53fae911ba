//! Problem specs: a versioned JSON envelope plus per-command arguments.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use serde_path_to_error::Segment;

use crate::json::{ComplexSpec, ModuleSpec, MorphismSpec};
use crate::CliError;

pub const FORMAT: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Ext,
    Hom,
    Factorize,
    Lift,
    Classify,
    Weq,
    StableHom,
    CheckPair,
    Thick,
    Hereditary,
    Gorenstein,
    GillespieVerify,
    MonoidalCheck,
    Catalog,
    Purity,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Ext => "ext",
            Command::Hom => "hom",
            Command::Factorize => "factorize",
            Command::Lift => "lift",
            Command::Classify => "classify",
            Command::Weq => "weq",
            Command::StableHom => "stable-hom",
            Command::CheckPair => "check-pair",
            Command::Thick => "thick",
            Command::Hereditary => "hereditary",
            Command::Gorenstein => "gorenstein",
            Command::GillespieVerify => "gillespie-verify",
            Command::MonoidalCheck => "monoidal-check",
            Command::Catalog => "catalog",
            Command::Purity => "purity",
        }
    }
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub format: u32,
    /// Algebra name (`"F2[C2]"`) or full definition.
    pub algebra: Value,
    #[serde(default)]
    pub command: Option<Command>,
    #[serde(default)]
    pub preset: Option<String>,
    #[serde(default)]
    pub args: Value,
    #[serde(default)]
    pub seed: Option<u64>,
    /// Catalog bound for every finite-universe sweep.
    #[serde(default)]
    pub bounds: Option<usize>,
}

/// Objects tagged with a string `kind` become `{kind: rest}` so that
/// deserialization errors keep their full path.
fn externalize(v: &Value) -> Value {
    match v {
        Value::Object(m) => {
            let mut inner: serde_json::Map<String, Value> = m.iter().map(|(k, v)| (k.clone(), externalize(v))).collect();
            match inner.get("kind") {
                Some(Value::String(kind)) => {
                    let kind = kind.clone();
                    inner.remove("kind");
                    let mut outer = serde_json::Map::new();
                    outer.insert(kind, Value::Object(inner));
                    Value::Object(outer)
                }
                _ => Value::Object(inner),
            }
        }
        Value::Array(a) => Value::Array(a.iter().map(externalize).collect()),
        other => other.clone(),
    }
}

/// Deserialize `v`, reporting errors as JSON pointers below `path`.
pub fn from_value<T: DeserializeOwned>(v: &Value, path: &str) -> Result<T, CliError> {
    serde_path_to_error::deserialize(externalize(v)).map_err(|e| {
        let mut pointer = path.to_string();
        for seg in e.path().iter() {
            match seg {
                Segment::Seq { index } => pointer.push_str(&format!("/{index}")),
                Segment::Map { key } => pointer.push_str(&format!("/{key}")),
                Segment::Enum { .. } | Segment::Unknown => {}
            }
        }
        let message = e.into_inner().to_string();
        if message.starts_with("unknown variant") {
            pointer.push_str("/kind");
        }
        CliError::spec(if pointer.is_empty() { "/".to_string() } else { pointer }, message)
    })
}

/// Args default to `{}` so commands with all-optional arguments accept a bare spec.
pub fn args<T: DeserializeOwned>(v: &Value) -> Result<T, CliError> {
    let v = if v.is_null() { Value::Object(Default::default()) } else { v.clone() };
    from_value(&v, "/args")
}

#[derive(Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum ClassSpec {
    All {},
    Zero {},
    Projectives {},
    Injectives {},
    PdAtMost { d: usize },
    GorensteinProjective { d: usize },
}

#[derive(Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum PairSpec {
    /// `(Projectives, All)`.
    Projective {},
    /// `(All, Injectives)`.
    Injective {},
    /// `(GP, PdAtMost(d))`.
    Gorenstein { d: usize },
}

#[derive(Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum StructureSpec {
    QuasiFrobenius {
        #[serde(default = "yes")]
        validate: bool,
    },
    GorensteinProjective {
        d: usize,
        #[serde(default = "yes")]
        validate: bool,
    },
    GorensteinInjective {
        d: usize,
        #[serde(default = "yes")]
        validate: bool,
    },
}

fn yes() -> bool {
    true
}

fn one() -> usize {
    1
}

#[derive(Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum ModeSpec {
    CofThenAcyclicFib,
    AcyclicCofThenFib,
    Both,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct ExtArgs {
    pub m: ModuleSpec,
    pub n: ModuleSpec,
    #[serde(default = "one")]
    pub degree: usize,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct HomArgs {
    pub m: ModuleSpec,
    pub n: ModuleSpec,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct FactorizeArgs {
    pub structure: StructureSpec,
    pub map: MorphismSpec,
    #[serde(default = "both")]
    pub mode: ModeSpec,
}

fn both() -> ModeSpec {
    ModeSpec::Both
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct LiftArgs {
    pub structure: StructureSpec,
    pub i: MorphismSpec,
    pub p: MorphismSpec,
    pub top: MorphismSpec,
    pub bottom: MorphismSpec,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct MapArgs {
    pub structure: StructureSpec,
    pub map: MorphismSpec,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct StableHomArgs {
    pub structure: StructureSpec,
    pub m: ModuleSpec,
    pub n: ModuleSpec,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct CheckPairArgs {
    #[serde(default)]
    pub structure: Option<StructureSpec>,
    #[serde(default)]
    pub pair: Option<PairSpec>,
    #[serde(default = "one")]
    pub i_max: usize,
    #[serde(default = "yes")]
    pub approximations: bool,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct ThickArgs {
    pub class: ClassSpec,
    #[serde(default = "max_pairs")]
    pub max_pairs: usize,
}

fn max_pairs() -> usize {
    64
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct HereditaryArgs {
    pub pair: PairSpec,
    #[serde(default = "two")]
    pub i_max: usize,
}

fn two() -> usize {
    2
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct GorensteinArgs {
    pub d: usize,
    #[serde(default)]
    pub modules: Vec<ModuleSpec>,
    /// Number of seeded `d`-th syzygies to test.
    #[serde(default)]
    pub examples: usize,
    #[serde(default = "three")]
    pub d_max: usize,
}

fn three() -> usize {
    3
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct GillespieArgs {
    #[serde(default = "projective")]
    pub pair: PairSpec,
    #[serde(default = "four")]
    pub max_len: usize,
    #[serde(default = "twelve")]
    pub randoms: usize,
    #[serde(default)]
    pub complexes: Vec<ComplexSpec>,
    #[serde(default = "max_cells")]
    pub max_cells: usize,
}

fn projective() -> PairSpec {
    PairSpec::Projective {}
}

fn four() -> usize {
    4
}

fn twelve() -> usize {
    12
}

fn max_cells() -> usize {
    400
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct MonoidalArgs {
    pub structure: StructureSpec,
    /// Number of seeded pushout-products of cofibrations to classify.
    #[serde(default)]
    pub pushout_products: usize,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct CatalogArgs {
    /// Also emit the complex catalog with complexes of at most this length.
    #[serde(default)]
    pub complexes: Option<usize>,
    #[serde(default)]
    pub randoms: usize,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct SequenceSpec {
    /// The monomorphism `A → B`; the sequence is `0 → A → B → coker → 0`.
    pub mono: MorphismSpec,
    #[serde(default)]
    pub expect_pure: Option<bool>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct PurityArgs {
    #[serde(default)]
    pub sequences: Vec<SequenceSpec>,
    /// Seeded sequences with free right-hand term, all expected pure.
    #[serde(default)]
    pub seeded: usize,
    #[serde(default)]
    pub bound: Option<u32>,
}

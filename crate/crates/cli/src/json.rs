//! JSON encodings of algebras, modules, morphisms and complexes.
//!
//! Integers are accepted as JSON numbers or decimal strings and written as
//! numbers when they fit in an `i64`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Deserializer, Visitor};
use serde::Deserialize;
use serde_json::{json, Value};

use abmc_core::chains::ChainComplex;
use abmc_core::linalg::{BaseRing, Mat};
use abmc_core::module_cat::{direct_sum, Algebra, Module, Morphism};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Int, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Int;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Int, E> {
                Ok(Int(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Int, E> {
                Ok(Int(v.into()))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Int, E> {
                v.trim().parse::<BigInt>().map(Int).map_err(|_| E::custom(format!("not an integer: {v:?}")))
            }
        }
        d.deserialize_any(V)
    }
}

pub fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn matrix_json(m: &Mat) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(int_json).collect())).collect())
}

fn matrix_from(rows: &[Vec<Int>], cols: usize, path: &str) -> Result<Mat, CliError> {
    if let Some((i, _)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
        return Err(CliError::spec(format!("{path}/{i}"), format!("row must have {cols} entries")));
    }
    Ok(Mat::from_fn(rows.len(), cols, |i, j| rows[i][j].0.clone()))
}

fn square(rows: &[Vec<Int>], path: &str) -> Result<Mat, CliError> {
    matrix_from(rows, rows.len(), path)
}

pub fn parse_ring(s: &str) -> Option<BaseRing> {
    let s = s.trim();
    if s == "Z" {
        return Some(BaseRing::Integers);
    }
    let p: u64 = s.strip_prefix('F')?.parse().ok()?;
    BaseRing::prime_field(p).ok()
}

fn ring_at(s: &str, path: &str) -> Result<BaseRing, CliError> {
    parse_ring(s).ok_or_else(|| CliError::spec(path, format!("unknown base ring {s:?} (use Z or F<p>)")))
}

#[derive(Deserialize, Debug)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum AlgebraDef {
    BaseRing { ring: String },
    CyclicGroup { ring: String, order: usize },
    Group { ring: String, table: Vec<Vec<usize>>, labels: Option<Vec<String>>, name: Option<String> },
    UpperTriangular { ring: String },
    StructureConstants {
        ring: String,
        mult: Vec<Vec<Vec<Int>>>,
        unit: Vec<Int>,
        labels: Option<Vec<String>>,
        name: Option<String>,
    },
}

/// Short names: `Z`, `F3`, `Z[C2]`, `F2[C4]`, `T2(F2)`.
pub fn algebra_from_name(s: &str) -> Option<Arc<Algebra>> {
    let s = s.trim();
    if let Some(r) = parse_ring(s) {
        return Some(Algebra::base_ring(r));
    }
    if let Some(inner) = s.strip_prefix("T2(").and_then(|t| t.strip_suffix(')')) {
        return Some(Algebra::upper_triangular(parse_ring(inner)?));
    }
    let (ring, rest) = s.split_once("[C")?;
    let n: usize = rest.strip_suffix(']')?.parse().ok()?;
    let r = parse_ring(ring)?;
    (n >= 1).then(|| Algebra::cyclic_group(r, n))
}

pub fn algebra_from(v: &Value, path: &str) -> Result<Arc<Algebra>, CliError> {
    if let Value::String(s) = v {
        return algebra_from_name(s).ok_or_else(|| CliError::spec(path, format!("unknown algebra {s:?}")));
    }
    let def: AlgebraDef = crate::spec::from_value(v, path)?;
    let module_err = |e: abmc_core::module_cat::ModuleError| CliError::spec(path, e.to_string());
    match def {
        AlgebraDef::BaseRing { ring } => Ok(Algebra::base_ring(ring_at(&ring, &format!("{path}/ring"))?)),
        AlgebraDef::CyclicGroup { ring, order } => {
            if order == 0 {
                return Err(CliError::spec(format!("{path}/order"), "group order must be positive"));
            }
            Ok(Algebra::cyclic_group(ring_at(&ring, &format!("{path}/ring"))?, order))
        }
        AlgebraDef::UpperTriangular { ring } => Ok(Algebra::upper_triangular(ring_at(&ring, &format!("{path}/ring"))?)),
        AlgebraDef::Group { ring, table, labels, name } => {
            let r = ring_at(&ring, &format!("{path}/ring"))?;
            let n = table.len();
            if table.iter().any(|row| row.len() != n || row.iter().any(|&k| k >= n)) {
                return Err(CliError::spec(format!("{path}/table"), format!("group table must be {n}x{n} with entries < {n}")));
            }
            let labels = labels.unwrap_or_else(|| (0..n).map(|i| format!("g{i}")).collect());
            let name = name.unwrap_or_else(|| format!("{r}[G{n}]"));
            Algebra::group_algebra(r, &table, labels, name).map_err(module_err)
        }
        AlgebraDef::StructureConstants { ring, mult, unit, labels, name } => {
            let r = ring_at(&ring, &format!("{path}/ring"))?;
            let mult = mult.into_iter().map(|row| row.into_iter().map(|v| v.into_iter().map(|x| x.0).collect()).collect()).collect();
            let unit = unit.into_iter().map(|x| x.0).collect();
            Algebra::new(r, mult, unit, labels, name.unwrap_or_else(|| format!("A({r})"))).map_err(module_err)
        }
    }
}

#[derive(Deserialize, Debug, Clone)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum ModuleSpec {
    Free { rank: usize },
    Trivial { #[serde(default)] modulus: Option<Int> },
    Sign {},
    Abelian { orders: Vec<Int> },
    Character { modulus: Int, values: Vec<Int> },
    /// `structure` is informational, so emitted modules load back unchanged.
    Canonical {
        orders: Vec<Int>,
        actions: Vec<Vec<Vec<Int>>>,
        #[serde(default)]
        structure: Option<String>,
    },
    Presentation { gens: usize, relations: Vec<Vec<Int>>, actions: Vec<Vec<Vec<Int>>> },
    Sum { parts: Vec<ModuleSpec> },
}

fn small(x: &Int, path: &str) -> Result<i64, CliError> {
    x.0.to_i64().ok_or_else(|| CliError::spec(path, "value out of range"))
}

pub fn build_module(alg: &Arc<Algebra>, spec: &ModuleSpec, path: &str) -> Result<Module, CliError> {
    let err = |e: abmc_core::module_cat::ModuleError| CliError::spec(path, e.to_string());
    match spec {
        ModuleSpec::Free { rank } => Ok(Module::free(alg, *rank)),
        ModuleSpec::Trivial { modulus } => {
            let n = match modulus {
                Some(m) => small(m, &format!("{path}/modulus"))?,
                None => 0,
            };
            Module::trivial_mod(alg, n).map_err(err)
        }
        ModuleSpec::Sign {} => Module::sign(alg).map_err(err),
        ModuleSpec::Abelian { orders } => {
            let o = orders
                .iter()
                .enumerate()
                .map(|(i, x)| small(x, &format!("{path}/orders/{i}")))
                .collect::<Result<Vec<_>, _>>()?;
            Module::abelian(alg, &o).map_err(err)
        }
        ModuleSpec::Character { modulus, values } => {
            let m = small(modulus, &format!("{path}/modulus"))?;
            let v = values
                .iter()
                .enumerate()
                .map(|(i, x)| small(x, &format!("{path}/values/{i}")))
                .collect::<Result<Vec<_>, _>>()?;
            if v.len() != alg.rank() {
                return Err(CliError::spec(format!("{path}/values"), format!("need {} values", alg.rank())));
            }
            Module::character(alg, m, &v).map_err(err)
        }
        ModuleSpec::Canonical { orders, actions, .. } => {
            let g = orders.len();
            let acts = action_mats(alg, actions, g, path)?;
            Module::new(alg.clone(), orders.iter().map(|x| x.0.clone()).collect(), acts).map_err(err)
        }
        ModuleSpec::Presentation { gens, relations, actions } => {
            let rel = matrix_from(relations, *gens, &format!("{path}/relations"))?;
            let acts = action_mats(alg, actions, *gens, path)?;
            Ok(Module::from_presentation(alg.clone(), *gens, &rel, &acts).map_err(err)?.module)
        }
        ModuleSpec::Sum { parts } => {
            let ms = parts
                .iter()
                .enumerate()
                .map(|(i, p)| build_module(alg, p, &format!("{path}/parts/{i}")))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(direct_sum(&ms).map_err(err)?.module)
        }
    }
}

fn action_mats(alg: &Arc<Algebra>, actions: &[Vec<Vec<Int>>], g: usize, path: &str) -> Result<Vec<Mat>, CliError> {
    if actions.len() != alg.rank() {
        return Err(CliError::spec(format!("{path}/actions"), format!("need {} action matrices", alg.rank())));
    }
    actions
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let p = format!("{path}/actions/{k}");
            if a.len() != g {
                return Err(CliError::spec(&p, format!("action matrix must be {g}x{g}")));
            }
            square(a, &p)
        })
        .collect()
}

#[derive(Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct MorphismSpec {
    pub src: ModuleSpec,
    pub dst: ModuleSpec,
    /// One row per target generator.
    pub matrix: Vec<Vec<Int>>,
}

pub fn build_morphism(alg: &Arc<Algebra>, spec: &MorphismSpec, path: &str) -> Result<Morphism, CliError> {
    let src = build_module(alg, &spec.src, &format!("{path}/src"))?;
    let dst = build_module(alg, &spec.dst, &format!("{path}/dst"))?;
    let mp = format!("{path}/matrix");
    if spec.matrix.len() != dst.gens() {
        return Err(CliError::spec(&mp, format!("need {} rows (target generators)", dst.gens())));
    }
    let m = matrix_from(&spec.matrix, src.gens(), &mp)?;
    Morphism::new(&src, &dst, m).map_err(|e| CliError::spec(mp, e.to_string()))
}

#[derive(Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct ComplexSpec {
    pub lo: i64,
    pub entries: Vec<ModuleSpec>,
    /// `d_{lo+1}, …, d_hi`.
    #[serde(default)]
    pub differentials: Vec<Vec<Vec<Int>>>,
}

pub fn build_complex(alg: &Arc<Algebra>, spec: &ComplexSpec, path: &str) -> Result<ChainComplex, CliError> {
    let entries = spec
        .entries
        .iter()
        .enumerate()
        .map(|(i, e)| build_module(alg, e, &format!("{path}/entries/{i}")))
        .collect::<Result<Vec<_>, _>>()?;
    let need = entries.len().saturating_sub(1);
    if spec.differentials.len() != need {
        return Err(CliError::spec(format!("{path}/differentials"), format!("need {need} differentials")));
    }
    let mut diffs = Vec::with_capacity(need);
    for (k, rows) in spec.differentials.iter().enumerate() {
        let p = format!("{path}/differentials/{k}");
        let (src, dst) = (&entries[k + 1], &entries[k]);
        if rows.len() != dst.gens() {
            return Err(CliError::spec(&p, format!("need {} rows", dst.gens())));
        }
        let m = matrix_from(rows, src.gens(), &p)?;
        diffs.push(Morphism::new(src, dst, m).map_err(|e| CliError::spec(&p, e.to_string()))?);
    }
    ChainComplex::new(alg, spec.lo, entries, diffs).map_err(|e| CliError::spec(path, e.to_string()))
}

/// Re-loadable encoding (`kind: canonical`) plus the structure string.
pub fn module_json(m: &Module) -> Value {
    json!({
        "kind": "canonical",
        "structure": m.structure(),
        "orders": m.orders().iter().map(int_json).collect::<Vec<_>>(),
        "actions": m.actions().iter().map(matrix_json).collect::<Vec<_>>(),
    })
}

pub fn morphism_json(f: &Morphism) -> Value {
    json!({
        "src": f.src().structure(),
        "dst": f.dst().structure(),
        "matrix": matrix_json(f.matrix()),
    })
}

pub fn complex_json(c: &ChainComplex) -> Value {
    json!({
        "lo": c.lo(),
        "entries": c.entries().iter().map(Module::structure).collect::<Vec<_>>(),
        "differentials": ((c.lo() + 1)..=c.hi()).map(|n| matrix_json(c.d(n).matrix())).collect::<Vec<_>>(),
        "display": c.describe(),
    })
}

use serde::Serialize;

use super::{ModelError, ModelStructure};
use crate::module_cat::{copair, descend_through_epi, pushout, tensor_diagonal, tensor_unit, Module, Morphism};

/// The corner map `(A⊗D) ⊔_{A⊗C} (B⊗C) → B⊗D`.
#[derive(Clone, Debug)]
pub struct PushoutProduct {
    pub corner: Module,
    pub map: Morphism,
}

pub fn pushout_product(i: &Morphism, j: &Morphism) -> Result<PushoutProduct, ModelError> {
    if !i.is_mono() || !j.is_mono() {
        return Err(ModelError::Precondition("pushout product of non-monomorphisms".into()));
    }
    let (a, b, c, d) = (i.src(), i.dst(), j.src(), j.dst());
    let ac = tensor_diagonal(a, c)?;
    let ad = tensor_diagonal(a, d)?;
    let bc = tensor_diagonal(b, c)?;
    let bd = tensor_diagonal(b, d)?;
    let a_j = ac.map(&ad, &Morphism::identity(a), j);
    let i_c = ac.map(&bc, i, &Morphism::identity(c));
    let po = pushout(&a_j, &i_c);
    let i_d = ad.map(&bd, i, &Morphism::identity(d));
    let b_j = bc.map(&bd, &Morphism::identity(b), j);
    let map = descend_through_epi(&po.quotient, &copair(&po.sum, &[i_d, b_j]))
        .expect("i⊗j agrees on both legs of the corner");
    Ok(PushoutProduct { corner: po.object, map })
}

#[derive(Clone, Debug, Serialize)]
pub struct MonoidalItem {
    pub condition: String,
    pub pass: bool,
    pub automatic: bool,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

impl MonoidalItem {
    fn new(condition: &str) -> Self {
        MonoidalItem { condition: condition.into(), pass: true, automatic: false, checked: 0, failure: None }
    }

    fn fail(&mut self, why: String) {
        if self.pass {
            self.pass = false;
            self.failure = Some(why);
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MonoidalReport {
    pub structure: String,
    pub flat: MonoidalItem,
    pub tensor_closed: MonoidalItem,
    pub tensor_acyclic: MonoidalItem,
    pub unit: MonoidalItem,
    pub note: String,
    pub pass: bool,
}

const MAX_PAIRS: usize = 64;
const MAX_FLAT: usize = 12;

/// The four conditions for a monoidal model structure, sampled over `catalog`.
pub fn monoidal_check(ms: &ModelStructure, catalog: &[Module]) -> Result<MonoidalReport, ModelError> {
    let alg = ms.algebra();
    let cofibrant: Vec<&Module> = catalog.iter().filter(|m| ms.in_c(m).holds()).collect();

    let mut flat = MonoidalItem::new("every cofibrant object is flat");
    if alg.base().is_field() {
        flat.automatic = true;
    } else {
        let samples: Vec<_> = catalog.iter().take(MAX_FLAT).map(|m| m.free_presentation()).collect();
        for x in cofibrant.iter().take(MAX_FLAT) {
            for s in &samples {
                let (k, f) = (s.left(), s.middle());
                let tk = tensor_diagonal(x, k)?;
                let tf = tensor_diagonal(x, f)?;
                let m = tk.map(&tf, &Morphism::identity(x), s.mono());
                flat.checked += 1;
                if !m.is_mono() {
                    flat.fail(format!(
                        "{} ⊗ ({} → {}) is not injective",
                        x.structure(),
                        k.structure(),
                        f.structure()
                    ));
                }
            }
        }
    }

    let mut tensor_closed = MonoidalItem::new("X, Y cofibrant implies X ⊗ Y cofibrant");
    let mut tensor_acyclic = MonoidalItem::new("X, Y cofibrant, one trivial, implies X ⊗ Y trivial");
    let mut pairs = 0;
    'outer: for (a, x) in cofibrant.iter().enumerate() {
        for y in &cofibrant[a..] {
            if pairs >= MAX_PAIRS {
                break 'outer;
            }
            pairs += 1;
            let t = tensor_diagonal(x, y)?.module;
            tensor_closed.checked += 1;
            if let Some(c) = ms.in_c(&t).certificate() {
                tensor_closed.fail(format!("{} ⊗ {} = {}: {c}", x.structure(), y.structure(), t.structure()));
            }
            if ms.in_w(x).holds() || ms.in_w(y).holds() {
                tensor_acyclic.checked += 1;
                if let Some(c) = ms.in_w(&t).certificate() {
                    tensor_acyclic.fail(format!("{} ⊗ {} = {}: {c}", x.structure(), y.structure(), t.structure()));
                }
            }
        }
    }

    let mut unit = MonoidalItem::new("the unit is cofibrant");
    let s = tensor_unit(alg)?;
    unit.checked = 1;
    if let Some(c) = ms.in_c(&s).certificate() {
        unit.fail(format!(
            "unit {} is not cofibrant ({c}); the clause for a non-cofibrant unit is not supported",
            s.structure()
        ));
    }
    let note = "the clause for a non-cofibrant unit is skipped when the unit is cofibrant".to_string();
    let pass = flat.pass && tensor_closed.pass && tensor_acyclic.pass && unit.pass;
    Ok(MonoidalReport { structure: ms.name.clone(), flat, tensor_closed, tensor_acyclic, unit, note, pass })
}

use serde::Serialize;

use crate::homological::ext_orders;
use crate::module_cat::{describe_orders, Module};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct OrthCell {
    pub left: usize,
    pub right: usize,
    pub degree: usize,
    pub ext: String,
    pub pass: bool,
}

/// `Ext^i(D, E)` for every pair and `1 ≤ i ≤ i_max`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct OrthReport {
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub i_max: usize,
    pub cells: Vec<OrthCell>,
    pub pass: bool,
}

impl OrthReport {
    pub fn failures(&self) -> impl Iterator<Item = &OrthCell> {
        self.cells.iter().filter(|c| !c.pass)
    }
}

pub fn check_orthogonality(dfam: &[Module], efam: &[Module], i_max: usize) -> OrthReport {
    let mut cells = Vec::new();
    for (a, d) in dfam.iter().enumerate() {
        for (b, e) in efam.iter().enumerate() {
            for i in 1..=i_max {
                let g = ext_orders(d, e, i);
                cells.push(OrthCell { left: a, right: b, degree: i, ext: describe_orders(&d.ring(), &g), pass: g.is_empty() });
            }
        }
    }
    let pass = cells.iter().all(|c| c.pass);
    OrthReport {
        left: dfam.iter().map(Module::structure).collect(),
        right: efam.iter().map(Module::structure).collect(),
        i_max,
        cells,
        pass,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrthSide {
    /// `{X : Ext¹(X, G) = 0 for all generators G}`.
    Left,
    /// `{X : Ext¹(G, X) = 0 for all generators G}`.
    Right,
}

/// Universe members orthogonal to every generator, in universe order.
pub fn orthogonal_closure(generators: &[Module], side: OrthSide, universe: &[Module]) -> Vec<usize> {
    universe
        .iter()
        .enumerate()
        .filter(|(_, x)| {
            generators.iter().all(|g| match side {
                OrthSide::Left => ext_orders(x, g, 1).is_empty(),
                OrthSide::Right => ext_orders(g, x, 1).is_empty(),
            })
        })
        .map(|(i, _)| i)
        .collect()
}

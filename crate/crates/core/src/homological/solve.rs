use num_bigint::BigInt;

use super::HomGroup;
use crate::linalg::{GroupSolver, Mat, Vector};
use crate::module_cat::Morphism;

/// Solve `Σ_u L_{e,u}(φ_u) = target_e` for unknowns `φ_u ∈ unknowns[u]`,
/// where each `L_{e,u}` is additive. `apply(u, b)` returns the contributions
/// `(e, L_{e,u}(b))` of a basis element `b` of `unknowns[u]`.
pub fn solve_hom_system(
    unknowns: &[HomGroup],
    equations: &[HomGroup],
    apply: impl Fn(usize, &Morphism) -> Vec<(usize, Morphism)>,
    targets: &[Morphism],
) -> Option<Vec<Morphism>> {
    assert_eq!(equations.len(), targets.len(), "one target per equation");
    let offsets: Vec<usize> = equations
        .iter()
        .scan(0, |acc, h| {
            let o = *acc;
            *acc += h.orders().len();
            Some(o)
        })
        .collect();
    let rows: usize = equations.iter().map(|h| h.orders().len()).sum();
    let orders: Vec<BigInt> = equations.iter().flat_map(|h| h.orders().iter().cloned()).collect();
    let mut columns: Vec<Vector> = Vec::new();
    for (u, hu) in unknowns.iter().enumerate() {
        for b in hu.basis() {
            let mut col = vec![BigInt::from(0); rows];
            for (e, img) in apply(u, b) {
                for (k, c) in equations[e].coordinates(&img).into_iter().enumerate() {
                    col[offsets[e] + k] += c;
                }
            }
            columns.push(col);
        }
    }
    let ring = match unknowns.first().or(equations.first()) {
        Some(h) => h.ring(),
        None => return Some(Vec::new()),
    };
    let mat = Mat::from_columns(rows, &columns);
    let rhs: Vector = equations
        .iter()
        .zip(targets)
        .flat_map(|(h, t)| h.coordinates(t))
        .collect();
    let x = GroupSolver::new(&ring, &mat, &orders).solve(&rhs)?;
    let mut out = Vec::with_capacity(unknowns.len());
    let mut pos = 0;
    for hu in unknowns {
        let k = hu.basis().len();
        out.push(hu.element(&x[pos..pos + k]));
        pos += k;
    }
    Some(out)
}

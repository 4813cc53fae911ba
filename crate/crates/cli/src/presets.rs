//! Named problem bundles. Each preset fixes an algebra, a catalog bound and
//! default arguments for the commands it supports.

use serde_json::{json, Value};

pub const PRESETS: [&str; 4] = ["qf-f2c2", "gorenstein-zc2", "gillespie-proj-f2c2", "purity-z"];

/// Norm map from the trivial module into `R[C2]`, `1 ↦ 1 + g`.
fn norm() -> Value {
    json!({"src": {"kind": "trivial"}, "dst": {"kind": "free", "rank": 1}, "matrix": [[1], [1]]})
}

fn qf_f2c2() -> Value {
    let qf = json!({"kind": "quasi-frobenius"});
    json!({
        "format": 1,
        "preset": "qf-f2c2",
        "algebra": "F2[C2]",
        "bounds": 4,
        "commands": {
            "ext": {"m": {"kind": "trivial"}, "n": {"kind": "trivial"}},
            "hom": {"m": {"kind": "trivial"}, "n": {"kind": "free", "rank": 1}},
            "factorize": {"structure": qf, "map": norm()},
            "classify": {"structure": qf, "map": norm()},
            "weq": {"structure": qf, "map": norm()},
            "lift": {
                "structure": qf,
                "i": norm(),
                "p": {
                    "src": {"kind": "sum", "parts": [{"kind": "free", "rank": 1}, {"kind": "trivial"}]},
                    "dst": {"kind": "trivial"},
                    "matrix": [[0, 0, 1]]
                },
                "top": {
                    "src": {"kind": "trivial"},
                    "dst": {"kind": "sum", "parts": [{"kind": "free", "rank": 1}, {"kind": "trivial"}]},
                    "matrix": [[1], [1], [0]]
                },
                "bottom": {"src": {"kind": "free", "rank": 1}, "dst": {"kind": "trivial"}, "matrix": [[0, 0]]}
            },
            "stable-hom": {"structure": qf, "m": {"kind": "trivial"}, "n": {"kind": "trivial"}},
            "check-pair": {"structure": qf},
            "thick": {"class": {"kind": "projectives"}},
            "hereditary": {"pair": {"kind": "projective"}},
            "gorenstein": {"d": 0, "modules": [{"kind": "trivial"}], "examples": 30},
            "monoidal-check": {"structure": qf, "pushout_products": 50},
            "gillespie-verify": {"pair": {"kind": "projective"}},
            "catalog": {}
        }
    })
}

fn gorenstein_zc2() -> Value {
    let gp = json!({"kind": "gorenstein-projective", "d": 1});
    json!({
        "format": 1,
        "preset": "gorenstein-zc2",
        "algebra": "Z[C2]",
        "bounds": 2,
        "commands": {
            "ext": {"m": {"kind": "trivial"}, "n": {"kind": "trivial"}},
            "hom": {"m": {"kind": "trivial"}, "n": {"kind": "trivial"}},
            "factorize": {"structure": gp, "map": norm()},
            "classify": {"structure": gp, "map": norm()},
            "weq": {"structure": gp, "map": norm()},
            "stable-hom": {"structure": gp, "m": {"kind": "trivial"}, "n": {"kind": "trivial"}},
            "check-pair": {"structure": gp},
            "thick": {"class": {"kind": "pd-at-most", "d": 1}},
            "hereditary": {"pair": {"kind": "gorenstein", "d": 1}},
            "gorenstein": {"d": 1, "modules": [{"kind": "trivial"}, {"kind": "sign"}], "examples": 30},
            "monoidal-check": {"structure": gp},
            "catalog": {}
        }
    })
}

fn gillespie_proj_f2c2() -> Value {
    json!({
        "format": 1,
        "preset": "gillespie-proj-f2c2",
        "algebra": "F2[C2]",
        "bounds": 3,
        "commands": {
            "gillespie-verify": {"pair": {"kind": "projective"}, "max_len": 4, "randoms": 12},
            "check-pair": {"pair": {"kind": "projective"}},
            "hereditary": {"pair": {"kind": "projective"}},
            "catalog": {"complexes": 4, "randoms": 12}
        }
    })
}

fn purity_z() -> Value {
    json!({
        "format": 1,
        "preset": "purity-z",
        "algebra": "Z",
        "bounds": 4,
        "commands": {
            "purity": {
                "sequences": [
                    {
                        "mono": {"src": {"kind": "free", "rank": 1}, "dst": {"kind": "free", "rank": 1}, "matrix": [[2]]},
                        "expect_pure": false
                    },
                    {
                        "mono": {"src": {"kind": "abelian", "orders": [2]}, "dst": {"kind": "abelian", "orders": [2, 0]}, "matrix": [[1], [0]]},
                        "expect_pure": true
                    },
                    {
                        "mono": {"src": {"kind": "abelian", "orders": [2]}, "dst": {"kind": "abelian", "orders": [4]}, "matrix": [[2]]},
                        "expect_pure": false
                    }
                ],
                "seeded": 20
            },
            "ext": {"m": {"kind": "abelian", "orders": [2]}, "n": {"kind": "abelian", "orders": [2]}},
            "hom": {"m": {"kind": "abelian", "orders": [2]}, "n": {"kind": "abelian", "orders": [4]}},
            "thick": {"class": {"kind": "projectives"}},
            "hereditary": {"pair": {"kind": "projective"}},
            "catalog": {}
        }
    })
}

pub fn preset(name: &str) -> Option<Value> {
    match name {
        "qf-f2c2" => Some(qf_f2c2()),
        "gorenstein-zc2" => Some(gorenstein_zc2()),
        "gillespie-proj-f2c2" => Some(gillespie_proj_f2c2()),
        "purity-z" => Some(purity_z()),
        _ => None,
    }
}

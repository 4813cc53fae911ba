use std::sync::Arc;
use std::time::Instant;

use rand::Rng;
use serde_json::{json, Map, Value};

use abmc_core::catalog::{module_catalog, Catalog, Sampler};
use abmc_core::chains::{complex_catalog, verify_induced_pair, InducedConfig};
use abmc_core::cotorsion::{
    check_orthogonality, class_member, gp_example, gp_test, is_hereditary, is_thick, ring_injective_dimension,
    special_preenvelope, special_precover, thickness_samples, ApproxSes, ClassDescriptor, CotorsionError,
    CotorsionPair, Verdict, WitnessFamily,
};
use abmc_core::homological::{ext, hom_group, is_projective};
use abmc_core::model::{
    classify_map_full, factorize, is_weak_equivalence, lift, make_model_structure, monoidal_check, pushout_product,
    stable_hom, FactorMode, LiftProblem, ModelError, ModelStructure,
};
use abmc_core::module_cat::{direct_sum, pair, purity_witness, Algebra, Module, Morphism, Ses, DEFAULT_PURITY_BOUND};

use crate::json::{algebra_from, build_complex, build_module, build_morphism, complex_json, int_json, module_json, morphism_json};
use crate::presets;
use crate::report::{Report, TOOL};
use crate::spec::{self, ClassSpec, Command, ModeSpec, PairSpec, ProblemSpec, StructureSpec, FORMAT};
use crate::CliError;

pub const DEFAULT_BOUNDS: usize = 3;
const VALIDATION_PAIRS: usize = 64;

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub command: Option<Command>,
    pub spec: Option<Value>,
    pub preset: Option<String>,
    pub seed: Option<u64>,
    pub bounds: Option<usize>,
}

/// Merge preset defaults, the spec file and command-line overrides into one
/// spec. Spec keys replace preset keys; `args` merges one level deep.
pub fn materialize(opts: &Options) -> Result<(Command, Value), CliError> {
    let mut base = Map::new();
    let mut args = Map::new();
    let user = match &opts.spec {
        Some(Value::Object(m)) => m.clone(),
        Some(_) => return Err(CliError::spec("/", "spec must be a JSON object")),
        None => Map::new(),
    };
    let command = match (opts.command, user.get("command")) {
        (Some(c), Some(v)) => {
            let named: Command = spec::from_value(v, "/command")?;
            if named != c {
                return Err(CliError::spec("/command", format!("spec is for {}, not {}", named.name(), c.name())));
            }
            c
        }
        (Some(c), None) => c,
        (None, Some(v)) => spec::from_value(v, "/command")?,
        (None, None) => return Err(CliError::Usage("no command given".into())),
    };
    let preset_name = opts
        .preset
        .clone()
        .or_else(|| user.get("preset").and_then(Value::as_str).map(str::to_string));
    if let Some(name) = &preset_name {
        let p = presets::preset(name).ok_or_else(|| {
            CliError::Usage(format!("unknown preset {name:?} (known: {})", presets::PRESETS.join(", ")))
        })?;
        let Value::Object(mut p) = p else { unreachable!("presets are objects") };
        if let Some(Value::Object(cmds)) = p.remove("commands") {
            if let Some(Value::Object(a)) = cmds.get(command.name()) {
                args = a.clone();
            }
        }
        base = p;
    }
    for (k, v) in user {
        if k == "args" {
            match v {
                Value::Object(a) => args.extend(a),
                Value::Null => {}
                other => {
                    base.insert(k, other);
                }
            }
        } else {
            base.insert(k, v);
        }
    }
    if !base.contains_key("args") {
        base.insert("args".into(), Value::Object(args));
    }
    base.insert("command".into(), json!(command.name()));
    if let Some(s) = opts.seed {
        base.insert("seed".into(), json!(s));
    }
    if let Some(b) = opts.bounds {
        base.insert("bounds".into(), json!(b));
    }
    Ok((command, Value::Object(base)))
}

/// Outcome of one command before the envelope is added.
struct Outcome {
    pass: bool,
    summary: Vec<String>,
    result: Value,
}

impl Outcome {
    fn new(pass: bool, summary: Vec<String>, result: Value) -> Outcome {
        Outcome { pass, summary, result }
    }

    fn failed(stage: &str, certificate: String) -> Outcome {
        Outcome {
            pass: false,
            summary: vec![format!("{stage}: FAIL"), format!("  certificate: {certificate}")],
            result: json!({"stage": stage, "certificate": certificate}),
        }
    }
}

struct Ctx {
    alg: Arc<Algebra>,
    seed: u64,
    bounds: usize,
    catalog: Option<Catalog>,
}

impl Ctx {
    fn catalog(&mut self) -> Result<&Catalog, CliError> {
        if self.catalog.is_none() {
            let c = module_catalog(&self.alg, self.bounds).map_err(|e| CliError::spec("/bounds", e.to_string()))?;
            self.catalog = Some(c);
        }
        Ok(self.catalog.as_ref().expect("just built"))
    }

    fn modules(&mut self) -> Result<Vec<Module>, CliError> {
        Ok(self.catalog()?.modules())
    }

    fn module(&self, s: &crate::json::ModuleSpec, path: &str) -> Result<Module, CliError> {
        build_module(&self.alg, s, path)
    }

    fn morphism(&self, s: &crate::json::MorphismSpec, path: &str) -> Result<Morphism, CliError> {
        build_morphism(&self.alg, s, path)
    }
}

/// Certified failures become failing outcomes; everything else is a usage
/// error.
fn model_failure(stage: &str, e: ModelError) -> Result<Outcome, CliError> {
    match e {
        ModelError::ThicknessFailed(c) | ModelError::OrthogonalityFailed(c) | ModelError::NotLiftable(c) => {
            Ok(Outcome::failed(stage, c))
        }
        ModelError::Cotorsion(CotorsionError::ProviderFailed { stage: s, certificate }) => {
            Ok(Outcome::failed(stage, format!("{s}: {certificate}")))
        }
        other => Err(CliError::Usage(other.to_string())),
    }
}

pub fn run(opts: &Options) -> Result<Report, CliError> {
    let start = Instant::now();
    let (command, merged) = materialize(opts)?;
    let ps: ProblemSpec = spec::from_value(&merged, "")?;
    if ps.format != FORMAT {
        return Err(CliError::spec("/format", format!("unsupported format {} (expected {FORMAT})", ps.format)));
    }
    let alg = algebra_from(&ps.algebra, "/algebra")?;
    let mut ctx = Ctx { alg: alg.clone(), seed: ps.seed.unwrap_or(0), bounds: ps.bounds.unwrap_or(DEFAULT_BOUNDS), catalog: None };
    let out = dispatch(command, &ps.args, &mut ctx)?;
    Ok(Report {
        format: FORMAT,
        tool: TOOL.to_string(),
        command: command.name().to_string(),
        preset: ps.preset,
        algebra: alg.name().to_string(),
        seed: ctx.seed,
        bounds: ctx.bounds,
        pass: out.pass,
        summary: out.summary,
        result: out.result,
        timing_ms: start.elapsed().as_millis() as u64,
    })
}

fn dispatch(command: Command, args: &Value, ctx: &mut Ctx) -> Result<Outcome, CliError> {
    match command {
        Command::Ext => cmd_ext(spec::args(args)?, ctx),
        Command::Hom => cmd_hom(spec::args(args)?, ctx),
        Command::Factorize => cmd_factorize(spec::args(args)?, ctx),
        Command::Lift => cmd_lift(spec::args(args)?, ctx),
        Command::Classify => cmd_classify(spec::args(args)?, ctx),
        Command::Weq => cmd_weq(spec::args(args)?, ctx),
        Command::StableHom => cmd_stable_hom(spec::args(args)?, ctx),
        Command::CheckPair => cmd_check_pair(spec::args(args)?, ctx),
        Command::Thick => cmd_thick(spec::args(args)?, ctx),
        Command::Hereditary => cmd_hereditary(spec::args(args)?, ctx),
        Command::Gorenstein => cmd_gorenstein(spec::args(args)?, ctx),
        Command::GillespieVerify => cmd_gillespie(spec::args(args)?, ctx),
        Command::MonoidalCheck => cmd_monoidal(spec::args(args)?, ctx),
        Command::Catalog => cmd_catalog(spec::args(args)?, ctx),
        Command::Purity => cmd_purity(spec::args(args)?, ctx),
    }
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap_or(0) as usize]).collect()
}

fn verdict_json(v: &Verdict) -> Value {
    serde_json::to_value(v).expect("verdicts serialize")
}

fn cmd_ext(a: spec::ExtArgs, ctx: &mut Ctx) -> Result<Outcome, CliError> {
    let m = ctx.module(&a.m, "/args/m")?;
    let n = ctx.module(&a.n, "/args/n")?;
    let e = ext(&m, &n, a.degree);
    let line = format!("Ext{}({}, {}) = {}", superscript(a.degree), m.structure(), n.structure(), e.structure());
    Ok(Outcome::new(
        true,
        vec![line, format!("Ext{} = {}", superscript(a.degree), e.structure())],
        json!({
            "m": m.structure(),
            "n": n.structure(),
            "degree": a.degree,
            "structure": e.structure(),
            "invariant_factors": e.invariant_factors().iter().map(int_json).collect::<Vec<_>>(),
        }),
    ))
}

fn cmd_hom(a: spec::HomArgs, ctx: &mut Ctx) -> Result<Outcome, CliError> {
    let m = ctx.module(&a.m, "/args/m")?;
    let n = ctx.module(&a.n, "/args/n")?;
    let h = hom_group(&m, &n);
    Ok(Outcome::new(
        true,
        vec![format!("Hom({}, {}) = {}", m.structure(), n.structure(), h.structure())],
        json!({
            "m": m.structure(),
            "n": n.structure(),
            "structure": h.structure(),
            "basis": h.basis().iter().map(morphism_json).collect::<Vec<_>>(),
        }),
    ))
}

fn pair_from(alg: &Arc<Algebra>, p: &PairSpec) -> CotorsionPair {
    match p {
        PairSpec::Projective {} => CotorsionPair::projective(alg),
        PairSpec::Injective {} => CotorsionPair::injective(alg),
        PairSpec::Gorenstein { d } => CotorsionPair::gorenstein(alg, *d),
    }
}

fn class_from(alg: &Arc<Algebra>, c: &ClassSpec) -> ClassDescriptor {
    match c {
        ClassSpec::All {} => ClassDescriptor::all(alg),
        ClassSpec::Zero {} => ClassDescriptor::zero(alg),
        ClassSpec::Projectives {} => ClassDescriptor::projectives(alg),
        ClassSpec::Injectives {} => ClassDescriptor::injectives(alg),
        ClassSpec::PdAtMost { d } => ClassDescriptor::pd_at_most(alg, *d),
        ClassSpec::GorensteinProjective { d } => CotorsionPair::gorenstein(alg, *d).left,
    }
}

/// The structure, validated against the catalog when requested. A failed
/// validation is a certified failure.
fn structure_from(ctx: &mut Ctx, s: &StructureSpec) -> Result<Result<ModelStructure, Outcome>, CliError> {
    let (ms, validate) = match s {
        StructureSpec::QuasiFrobenius { validate } => {
            if !ctx.alg.base().is_field() {
                return Err(CliError::spec(
                    "/args/structure",
                    format!("{} is not quasi-Frobenius (QF presets need a field)", ctx.alg.name()),
                ));
            }
            (ModelStructure::quasi_frobenius(&ctx.alg), *validate)
        }
        StructureSpec::GorensteinProjective { d, validate } => (ModelStructure::gorenstein_projective(&ctx.alg, *d), *validate),
        StructureSpec::GorensteinInjective { d, validate } => (
            ModelStructure::gorenstein_injective(&ctx.alg, *d).map_err(|e| CliError::spec("/args/structure", e.to_string()))?,
            *validate,
        ),
    };
    if !validate {
        return Ok(Ok(ms));
    }
    let cat = ctx.modules()?;
    match make_model_structure(ms, &cat, VALIDATION_PAIRS) {
        Ok(ms) => Ok(Ok(ms)),
        Err(e) => model_failure("validation", e).map(Err),
    }
}

macro_rules! structure {
    ($ctx:expr, $spec:expr) => {
        match structure_from($ctx, $spec)? {
            Ok(ms) => ms,
            Err(out) => return Ok(out),
        }
    };
}

fn modes(m: ModeSpec) -> Vec<FactorMode> {
    match m {
        ModeSpec::CofThenAcyclicFib => vec![FactorMode::CofThenAcyFib],
        ModeSpec::AcyclicCofThenFib => vec![FactorMode::AcyCofThenFib],
        ModeSpec::Both => vec![FactorMode::CofThenAcyFib, FactorMode::AcyCofThenFib],
    }
}

fn cmd_factorize(a: spec::FactorizeArgs, ctx: &mut Ctx) -> Result<Outcome, CliError> {
    let ms = structure!(ctx, &a.structure);
    let f = ctx.morphism(&a.map, "/args/map")?;
    let mut pass = true;
    let mut summary = vec![format!("structure {}", ms.name), format!("map {} → {}", f.src().structure(), f.dst().structure())];
    let mut results = Vec::new();
    for mode in modes(a.mode) {
        match factorize(&ms, &f, mode) {
            Ok(fac) => {
                let v = &fac.verification;
                let ok = v.composite_exact && v.first_mono && v.second_epi && v.first_cokernel.holds() && v.second_kernel.holds();
                pass &= ok;
                summary.push(format!(
                    "{:<22} {} → {} → {}  [{}]",
                    mode.label(),
                    f.src().structure(),
                    fac.first.dst().structure(),
                    f.dst().structure(),
                    if ok { "verified" } else { "FAIL" }
                ));
                summary.push(format!(
                    "{:<22} coker = {} ({}), ker = {} ({})",
                    "",
                    v.first_cokernel_structure,
                    v.first_cokernel.label(),
                    v.second_kernel_structure,
                    v.second_kernel.label()
                ));
                results.push(json!({
                    "mode": mode.label(),
                    "stage": serde_json::to_value(fac.stage).expect("stage serializes"),
                    "middle": module_json(fac.first.dst()),
                    "first": morphism_json(&fac.first),
                    "second": morphism_json(&fac.second),
                    "verification": serde_json::to_value(v).expect("membership serializes"),
                    "pass": ok,
                }));
            }
            Err(e) => {
                let o = model_failure(mode.label(), e)?;
                pass = false;
                summary.extend(o.summary);
                results.push(json!({"mode": mode.label(), "pass": false, "failure": o.result}));
            }
        }
    }
    Ok(Outcome::new(pass, summary, json!({"structure": ms.name, "factorizations": results})))
}

fn cmd_lift(a: spec::LiftArgs, ctx: &mut Ctx) -> Result<Outcome, CliError> {
    let ms = structure!(ctx, &a.structure);
    let problem = LiftProblem {
        i: ctx.morphism(&a.i, "/args/i")?,
        p: ctx.morphism(&a.p, "/args/p")?,
        top: ctx.morphism(&a.top, "/args/top")?,
        bottom: ctx.morphism(&a.bottom, "/args/bottom")?,
    };
    match lift(&ms, &problem) {
        Ok(l) => {
            let ok = l.upper_triangle && l.lower_triangle;
            Ok(Outcome::new(
                ok,
                vec![
                    format!("structure {}", ms.name),
                    format!("lift {} → {} found; triangles commute: {ok}", l.lift.src().structure(), l.lift.dst().structure()),
                ],
                json!({
                    "structure": ms.name,
                    "lift": morphism_json(&l.lift),
                    "upper_triangle": l.upper_triangle,
                    "lower_triangle": l.lower_triangle,
                }),
            ))
        }
        Err(e) => model_failure("lift", e),
    }
}

fn cmd_classify(a: spec::MapArgs, ctx: &mut Ctx) -> Result<Outcome, CliError> {
    let ms = structure!(ctx, &a.structure);
    let f = ctx.morphism(&a.map, "/args/map")?;
    let c = match classify_map_full(&ms, &f) {
        Ok(c) => c,
        Err(e) => return model_failure("classify", e),
    };
    let mut summary = vec![format!("structure {}", ms.name), format!("map {} → {}", f.src().structure(), f.dst().structure())];
    let rows: [(&str, &Verdict); 4] = [
        ("cofibration", &c.cofibration),
        ("fibration", &c.fibration),
        ("acyclic cofibration", &c.acyclic_cofibration),
        ("acyclic fibration", &c.acyclic_fibration),
    ];
    for (k, v) in rows {
        summary.push(format!("{k:<20} {v}"));
    }
    if let Some(w) = &c.weak_equivalence {
        summary.push(format!("{:<20} {w}", "weak equivalence"));
    }
    Ok(Outcome::new(true, summary, json!({"structure": ms.name, "map": morphism_json(&f), "classes": c})))
}

fn cmd_weq(a: spec::MapArgs, ctx: &mut Ctx) -> Result<Outcome, CliError> {
    let ms = structure!(ctx, &a.structure);
    let f = ctx.morphism(&a.map, "/args/map")?;
    match is_weak_equivalence(&ms, &f) {
        Ok(w) => Ok(Outcome::new(
            true,
            vec![format!("structure {}", ms.name), format!("weak equivalence: {}", w.verdict)],
            json!({
                "structure": ms.name,
                "map": morphism_json(&f),
                "verdict": verdict_json(&w.verdict),
                "cofibration_cokernel": w.factorization.verification.first_cokernel_structure,
            }),
        )),
        Err(e) => model_failure("weq", e),
    }
}

fn cmd_stable_hom(a: spec::StableHomArgs, ctx: &mut Ctx) -> Result<Outcome, CliError> {
    let ms = structure!(ctx, &a.structure);
    let m = ctx.module(&a.m, "/args/m")?;
    let n = ctx.module(&a.n, "/args/n")?;
    let s = match stable_hom(&ms, &m, &n) {
        Ok(s) => s,
        Err(e) => return model_failure("stable-hom", e),
    };
    Ok(Outcome::new(
        true,
        vec![
            format!("structure {}", ms.name),
            format!("Hom({}, {}) = {}", m.structure(), n.structure(), s.hom),
            format!("maps through projectives: {}", s.factoring),
            format!("stable Hom = {}", s.structure),
        ],
        json!({
            "structure": ms.name,
            "m": m.structure(),
            "n": n.structure(),
            "hom": s.hom,
            "factoring": s.factoring,
            "stable": s.structure,
            "invariant_factors": s.orders.iter().map(int_json).collect::<Vec<_>>(),
        }),
    ))
}

fn approx_json(r: &Result<ApproxSes, CotorsionError>) -> (bool, Value) {
    match r {
        Ok(a) => {
            let ok = a.left_member.holds() && a.right_member.holds();
            (
                ok,
                json!({
                    "provider": a.provider.to_string(),
                    "sequence": format!("0 → {} → {} → {} → 0", a.ses.left().structure(), a.ses.middle().structure(), a.ses.right().structure()),
                    "left_member": verdict_json(&a.left_member),
                    "right_member": verdict_json(&a.right_member),
                    "pass": ok,
                }),
            )
        }
        Err(e) => (false, json!({"pass": false, "error": e.to_string()})),
    }
}

fn check_one_pair(ctx: &mut Ctx, p: &CotorsionPair, i_max: usize, approximations: bool) -> Result<(bool, Vec<String>, Value), CliError> {
    let cat = ctx.catalog()?.clone();
    let modules = cat.modules();
    let lefts: Vec<Module> = modules.iter().filter(|m| class_member(&p.left, m).holds()).cloned().collect();
    let rights: Vec<Module> = modules.iter().filter(|m| class_member(&p.right, m).holds()).cloned().collect();
    let orth = check_orthogonality(&lefts, &rights, i_max);
    let mut summary = vec![format!(
        "pair {}: {} left members, {} right members, {} Ext cells, orthogonality {}",
        p.name,
        lefts.len(),
        rights.len(),
        orth.cells.len(),
        if orth.pass { "all zero" } else { "FAIL" }
    )];
    for c in orth.failures().take(5) {
        summary.push(format!("  Ext{}({}, {}) = {}", superscript(c.degree), orth.left[c.left], orth.right[c.right], c.ext));
    }
    let mut pass = orth.pass;
    let mut approx = Vec::new();
    if approximations {
        let mut failures = 0;
        for e in &cat.entries {
            let (ok1, pre) = approx_json(&special_precover(p, &e.module));
            let (ok2, env) = approx_json(&special_preenvelope(p, &e.module));
            if !(ok1 && ok2) {
                failures += 1;
            }
            approx.push(json!({"module": e.name, "precover": pre, "preenvelope": env}));
        }
        summary.push(format!("  approximations: {}/{} catalog members succeed", cat.len() - failures, cat.len()));
        pass &= failures == 0;
    }
    Ok((pass, summary, json!({"pair": p.name, "orthogonality": orth, "approximations": approx, "pass": pass})))
}

fn cmd_check_pair(a: spec::CheckPairArgs, ctx: &mut Ctx) -> Result<Outcome, CliError> {
    let pairs: Vec<CotorsionPair> = match (&a.structure, &a.pair) {
        (Some(s), None) => {
            let ms = structure!(ctx, s);
            vec![ms.pair_cw_f.clone(), ms.pair_c_fw.clone()]
        }
        (None, Some(p)) => vec![pair_from(&ctx.alg, p)],
        _ => return Err(CliError::spec("/args", "give exactly one of structure or pair")),
    };
    let mut pass = true;
    let mut summary = Vec::new();
    let mut results = Vec::new();
    for p in &pairs {
        let (ok, s, r) = check_one_pair(ctx, p, a.i_max, a.approximations)?;
        pass &= ok;
        summary.extend(s);
        results.push(r);
    }
    Ok(Outcome::new(pass, summary, json!({"catalog_size": ctx.catalog()?.len(), "pairs": results})))
}

fn cmd_thick(a: spec::ThickArgs, ctx: &mut Ctx) -> Result<Outcome, CliError> {
    let w = class_from(&ctx.alg, &a.class);
    let cat = ctx.modules()?;
    let r = is_thick(&w, &thickness_samples(&cat, a.max_pairs));
    let mut summary = vec![format!("class {}: {} samples, thick: {}", r.class, r.items.len(), r.pass)];
    if let Some(f) = r.first_failure() {
        summary.push(format!("  failing sample: {}", f.sample));
        if let Some(c) = &f.certificate {
            summary.push(format!("  certificate: {c}"));
        }
    }
    Ok(Outcome::new(r.pass, summary, serde_json::to_value(&r).expect("report serializes")))
}

fn cmd_hereditary(a: spec::HereditaryArgs, ctx: &mut Ctx) -> Result<Outcome, CliError> {
    let p = pair_from(&ctx.alg, &a.pair);
    let cat = ctx.modules()?;
    let r = is_hereditary(&p, &cat, &cat, a.i_max, ctx.seed);
    let mut summary = vec![
        format!("pair {}", r.pair),
        format!("  Ext^i vanishing (i ≤ {}): {}", a.i_max, r.pass_ext),
        format!("  kernels of epis in the left class: {} ({} maps)", r.pass_kernels, r.kernel_closure.len()),
        format!("  cokernels of monos in the right class: {} ({} maps)", r.pass_cokernels, r.cokernel_closure.len()),
    ];
    if let Some(f) = r.first_failure() {
        summary.push(format!("  first failure: {} gives {}", f.map, f.result));
    }
    Ok(Outcome::new(r.pass, summary, serde_json::to_value(&r).expect("report serializes")))
}

fn cmd_gorenstein(a: spec::GorensteinArgs, ctx: &mut Ctx) -> Result<Outcome, CliError> {
    let rid = ring_injective_dimension(&ctx.alg, a.d_max).map_err(|e| CliError::Usage(e.to_string()))?;
    let family = WitnessFamily::default_for(&ctx.alg, a.d);
    let mut summary = vec![
        format!(
            "injective dimension of {}: {}",
            ctx.alg.name(),
            rid.map_or_else(|| format!("> {}", a.d_max), |d| d.to_string())
        ),
        format!("witness family: seed {:#x}, {} modules", family.spec.seed, family.modules.len()),
    ];
    let mut tested = Vec::new();
    for (i, s) in a.modules.iter().enumerate() {
        let m = ctx.module(s, &format!("/args/modules/{i}"))?;
        let v = gp_test(&m, a.d, &family);
        summary.push(format!("  {}: projective {}, Gorenstein projective {}", m.structure(), is_projective(&m), v));
        tested.push(json!({"module": m.structure(), "projective": is_projective(&m), "gp": verdict_json(&v)}));
    }
    let mut pass = true;
    let mut examples = Vec::new();
    if a.examples > 0 {
        let cat = ctx.catalog()?.clone();
        let mut sampler = Sampler::new(cat, ctx.seed);
        let mut failures = 0;
        for _ in 0..a.examples {
            let n = sampler.nonzero_module();
            let g = gp_example(&n, a.d);
            let v = gp_test(&g, a.d, &family);
            if v.is_no() {
                failures += 1;
            }
            examples.push(json!({"from": n.structure(), "syzygy": g.structure(), "gp": verdict_json(&v)}));
        }
        pass = failures == 0;
        summary.push(format!("  syzygies of degree {} of {} seeded modules: {} fail gp_test", a.d, a.examples, failures));
    }
    Ok(Outcome::new(
        pass,
        summary,
        json!({
            "injective_dimension": rid,
            "d": a.d,
            "family": family.spec,
            "modules": tested,
            "examples": examples,
        }),
    ))
}

fn cmd_gillespie(a: spec::GillespieArgs, ctx: &mut Ctx) -> Result<Outcome, CliError> {
    let p = pair_from(&ctx.alg, &a.pair);
    let universe: Vec<Module> = ctx.modules()?.into_iter().filter(|m| !m.is_zero()).collect();
    let complexes = if a.complexes.is_empty() {
        complex_catalog(&universe, a.max_len, a.randoms, ctx.seed)
    } else {
        a.complexes
            .iter()
            .enumerate()
            .map(|(i, c)| build_complex(&ctx.alg, c, &format!("/args/complexes/{i}")))
            .collect::<Result<Vec<_>, _>>()?
    };
    let cfg = InducedConfig { max_cells: a.max_cells, seed: ctx.seed, ..InducedConfig::default() };
    let r = verify_induced_pair(&p, &complexes, &universe, cfg);
    let summary = vec![
        format!("base pair {} over {}, {} complexes", r.base_pair, ctx.alg.name(), complexes.len()),
        format!("  chain orthogonality: {}", r.pass_orthogonality),
        format!("  dg ∩ exact = tilde: {}", r.pass_compatibility),
        format!("  base pair hereditary: {}", r.pass_hereditary),
    ];
    Ok(Outcome::new(r.pass, summary, serde_json::to_value(&r).expect("report serializes")))
}

/// A cofibration `A → A ⊕ B`, `a ↦ (a, f a)`, with cokernel `B` drawn from
/// the cofibrant members of the catalog.
pub fn seeded_cofibration(sampler: &mut Sampler, ms: &ModelStructure) -> Morphism {
    loop {
        let a = sampler.module();
        let b = sampler.module();
        if !ms.in_c(&b).holds() {
            continue;
        }
        let f = sampler.morphism(&a, &b);
        let sum = direct_sum(&[a.clone(), b]).expect("same algebra");
        return pair(&sum, &[Morphism::identity(&a), f]);
    }
}

fn cmd_monoidal(a: spec::MonoidalArgs, ctx: &mut Ctx) -> Result<Outcome, CliError> {
    let ms = structure!(ctx, &a.structure);
    let cat = ctx.catalog()?.clone();
    let r = match monoidal_check(&ms, &cat.modules()) {
        Ok(r) => r,
        Err(e) => return model_failure("monoidal-check", e),
    };
    let mut summary = vec![format!("structure {}", r.structure)];
    for item in [&r.flat, &r.tensor_closed, &r.tensor_acyclic, &r.unit] {
        summary.push(format!(
            "  {:<48} {}{}",
            item.condition,
            if item.pass { "pass" } else { "FAIL" },
            if item.automatic { " (automatic)".to_string() } else { format!(" ({} checked)", item.checked) }
        ));
    }
    let mut pass = r.pass;
    let mut pp = Vec::new();
    if a.pushout_products > 0 {
        let mut sampler = Sampler::new(cat, ctx.seed);
        let mut failures = 0;
        for _ in 0..a.pushout_products {
            let i = seeded_cofibration(&mut sampler, &ms);
            let j = seeded_cofibration(&mut sampler, &ms);
            let prod = match pushout_product(&i, &j) {
                Ok(p) => p,
                Err(e) => return model_failure("pushout-product", e),
            };
            let v = ms.classify_map(&prod.map).cofibration;
            if v.is_no() {
                failures += 1;
            }
            pp.push(json!({
                "i": format!("{} → {}", i.src().structure(), i.dst().structure()),
                "j": format!("{} → {}", j.src().structure(), j.dst().structure()),
                "corner": prod.corner.structure(),
                "cofibration": verdict_json(&v),
            }));
        }
        pass &= failures == 0;
        summary.push(format!("  {} seeded pushout-products of cofibrations: {} not cofibrations", a.pushout_products, failures));
    }
    Ok(Outcome::new(pass, summary, json!({"report": r, "pushout_products": pp})))
}

fn cmd_catalog(a: spec::CatalogArgs, ctx: &mut Ctx) -> Result<Outcome, CliError> {
    let cat = ctx.catalog()?.clone();
    let entries: Vec<Value> = cat
        .entries
        .iter()
        .map(|e| json!({"name": e.name, "summands": e.summands, "module": module_json(&e.module)}))
        .collect();
    let mut summary = vec![format!("{} modules: {}", cat.len(), cat.spec.rule)];
    summary.push(format!("  {}", cat.entries.iter().map(|e| e.name.as_str()).collect::<Vec<_>>().join(", ")));
    let mut complexes = Vec::new();
    if let Some(len) = a.complexes {
        let universe: Vec<Module> = cat.modules().into_iter().filter(|m| !m.is_zero()).collect();
        let cs = complex_catalog(&universe, len, a.randoms, ctx.seed);
        summary.push(format!("{} complexes of length <= {len}", cs.len()));
        complexes = cs.iter().map(complex_json).collect();
    }
    Ok(Outcome::new(true, summary, json!({"spec": cat.spec, "modules": entries, "complexes": complexes})))
}

/// `0 → ker → A ⊕ F → F → 0` with the projection twisted by a random map `A → F`.
fn seeded_free_quotient(sampler: &mut Sampler) -> Ses {
    let a = sampler.module();
    let rank = sampler.rng().gen_range(1..=2usize);
    let f = Module::free(a.algebra(), rank);
    let g = sampler.morphism(&a, &f);
    let sum = direct_sum(&[a, f.clone()]).expect("same algebra");
    let p = abmc_core::module_cat::copair(&sum, &[g, Morphism::identity(&f)]);
    Ses::from_epi(p).expect("split by the second summand")
}

fn cmd_purity(a: spec::PurityArgs, ctx: &mut Ctx) -> Result<Outcome, CliError> {
    let bound = a.bound.unwrap_or(DEFAULT_PURITY_BOUND);
    let mut pass = true;
    let mut summary = Vec::new();
    let mut results = Vec::new();
    let mut record = |s: &Ses, expect: Option<bool>, origin: String, summary: &mut Vec<String>| {
        let w = purity_witness(s, bound);
        let pure = w.is_none();
        let ok = expect.is_none_or(|e| e == pure);
        let seq = format!("0 → {} → {} → {} → 0", s.left().structure(), s.middle().structure(), s.right().structure());
        let witness = w.as_ref().map(|w| json!({"test_module": w.test_module, "kernel": w.kernel_structure}));
        summary.push(format!(
            "{seq}: {}{}{}",
            if pure { "pure" } else { "not pure" },
            w.as_ref().map(|w| format!(" (tensor witness {}, kernel {})", w.test_module, w.kernel_structure)).unwrap_or_default(),
            if ok { "" } else { "  [UNEXPECTED]" }
        ));
        results.push(json!({"origin": origin, "sequence": seq, "pure": pure, "expected": expect, "witness": witness, "pass": ok}));
        ok
    };
    for (i, s) in a.sequences.iter().enumerate() {
        let path = format!("/args/sequences/{i}/mono");
        let mono = ctx.morphism(&s.mono, &path)?;
        let ses = Ses::from_mono(mono).map_err(|e| CliError::spec(&path, e.to_string()))?;
        pass &= record(&ses, s.expect_pure, format!("sequences/{i}"), &mut summary);
    }
    if a.seeded > 0 {
        let cat = ctx.catalog()?.clone();
        let mut sampler = Sampler::new(cat, ctx.seed);
        let mut failures = 0;
        let mut scratch = Vec::new();
        for k in 0..a.seeded {
            let s = seeded_free_quotient(&mut sampler);
            if !record(&s, Some(true), format!("seeded/{k}"), &mut scratch) {
                failures += 1;
            }
        }
        pass &= failures == 0;
        summary.push(format!("{} seeded sequences with free right term: {} not pure", a.seeded, failures));
    }
    Ok(Outcome::new(pass, summary, json!({"bound": bound, "sequences": results})))
}

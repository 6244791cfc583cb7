use g2_cartan::g2;
use g2_cartan::homology::{self, module_e, Chain, Coefficient};
use g2_cartan::models::{
    self, build_model, family_coordinates, holonomy, replicate_iii6_obstruction, verify_model, AlgebraicModel,
    KappaFamily, ModelLabel,
};
use g2_cartan::prolongation::{annihilator, tanaka_prolong, BinaryQuartic};
use g2_cartan::real_forms::{self, AntiInvolution};
use g2_cartan::report::Check;
use g2_cartan::rolling::{self, EmbeddingMode};
use g2_cartan::scalar::parse_rational;
use g2_cartan::{ParamPoly, Rational, Scalar};
use serde_json::{json, Value};

use crate::emit::Out;
use crate::{Cli, Command, ModelAction, ModelArgs, ParamArgs, RealformAction};

type Res = Result<Out, String>;

fn ext_of(cli: &Cli) -> Result<Option<Rational>, String> {
    let Some(text) = &cli.ext else { return Ok(None) };
    let body = text.split_once('=').map_or(text.as_str(), |(_, r)| r);
    parse_rational(body.trim()).map(Some).ok_or_else(|| format!("bad --ext {:?}", text))
}

fn scalar(text: &str, ext: Option<&Rational>) -> Result<Scalar, String> {
    Scalar::parse(text, ext).map_err(|e| e.to_string())
}

fn rational(text: &str) -> Result<Rational, String> {
    parse_rational(text.trim()).ok_or_else(|| format!("expected a rational, got {:?}", text))
}

fn label(text: &str) -> Result<ModelLabel, String> {
    text.parse().map_err(|e: models::ModelError| e.to_string())
}

/// The model parameter from --a or --c, whichever the label uses.
fn param(l: ModelLabel, p: &ParamArgs, ext: Option<&Rational>) -> Result<Option<Scalar>, String> {
    let (given, other) = match l.parameter() {
        Some("c") => (&p.c, &p.a),
        Some(_) => (&p.a, &p.c),
        None => {
            if p.a.is_some() || p.c.is_some() {
                return Err(format!("{} has no parameter", l));
            }
            return Ok(None);
        }
    };
    if other.is_some() {
        return Err(format!("{} takes --{}", l, l.parameter().unwrap_or("")));
    }
    given.as_deref().map(|t| scalar(t, ext)).transpose()
}

fn concrete(args: &ModelArgs, ext: Option<&Rational>) -> Result<AlgebraicModel<Scalar>, String> {
    let l = label(&args.label)?;
    build_model(l, param(l, &args.params, ext)?).map_err(|e| e.to_string())
}

fn params_json(out: &mut Out, m: &AlgebraicModel<Scalar>) -> Value {
    let mut obj = serde_json::Map::new();
    for (k, v) in &m.params {
        let s = out.scalar(v);
        obj.insert(k.clone(), s);
    }
    Value::Object(obj)
}

fn family(l: ModelLabel) -> Option<KappaFamily> {
    match l {
        ModelLabel::N7 | ModelLabel::N6 => Some(KappaFamily::N),
        ModelLabel::D6 | ModelLabel::B0 => Some(KappaFamily::D),
        ModelLabel::Flat => None,
    }
}

pub fn run(cli: &Cli) -> Res {
    let ext = ext_of(cli)?;
    let ext = ext.as_ref();
    match &cli.command {
        Command::VerifyCore => verify_core(),
        Command::CurvatureModule => curvature_module(),
        Command::Prolong { quartic } => prolong(quartic, ext),
        Command::Model { action } => match action {
            ModelAction::Verify(a) => model_verify(a, ext),
            ModelAction::Holonomy(a) => model_holonomy(a, ext, "model holonomy"),
            ModelAction::Einstein(a) => model_holonomy(a, ext, "model einstein"),
            ModelAction::Iii6 => iii6(),
        },
        Command::Realform(r) => match &r.action {
            Some(RealformAction::Classify(a)) => realform_classify(a, ext),
            None => {
                let args = ModelArgs { label: r.label.clone().unwrap_or_default(), params: r.params.clone() };
                realform(&args, r.psi.as_deref().unwrap_or_default(), ext)
            }
        },
        Command::Rolling { rho } => rolling_cmd(rho),
        Command::Covariants { label: l, params } => {
            covariants(&ModelArgs { label: l.clone(), params: params.clone() }, ext)
        }
    }
}

fn verify_core() -> Res {
    let mut out = Out::new("verify-core");
    for s in [g2::check_jacobi(), g2::check_killing(), g2::check_rep7_homomorphism(), g2::check_rep7_tensors()] {
        let w = s.failures.first().cloned();
        out.counted(&s.name, s.count, s.passed(), w);
    }
    let roots = g2::root_decomposition();
    let distinct: std::collections::BTreeSet<(i64, i64)> = roots.iter().map(|(r, _)| *r).collect();
    out.counted("root decomposition", roots.len(), roots.len() == 12 && distinct.len() == 12, None);
    let table: Vec<Value> = roots.iter().map(|((s, t), l)| json!({"label": l.name(), "root": [s, t]})).collect();
    out.set("roots", Value::Array(table));
    Ok(out)
}

fn chain_json(out: &mut Out, c: &Chain<Rational>) -> Value {
    let terms: Vec<Value> = c
        .support()
        .into_iter()
        .map(|(slots, v)| {
            let names: Vec<&str> = slots.iter().map(|l| l.name()).collect();
            let v = out.element(&v.map(|q| Scalar::from(q.clone())));
            json!({"slots": names, "value": v})
        })
        .collect();
    Value::Array(terms)
}

fn curvature_module() -> Res {
    let mut out = Out::new("curvature-module");
    let e = homology::generate_e();
    out.check(&Check::new("dim E = 24", e.dim == 24, Some(e.dim.to_string())));
    out.check(&Check::from_failure(
        "printed chains match up to scalars",
        (!e.all_printed_match()).then(|| format!("{:?}", e.ratios)),
    ));
    let comps: Vec<Value> = e
        .component_dims
        .iter()
        .map(|(c, d)| {
            json!({
                "component": c.name(),
                "dim": d,
                "homogeneity": c.homogeneity(),
                "lowest_weight": [c.lowest_weight().0, c.lowest_weight().1],
                "coefficients": c.coefficients().iter().map(|k| k.name()).collect::<Vec<_>>(),
            })
        })
        .collect();
    out.set("components", Value::Array(comps));
    let mut chains = Vec::new();
    for (k, c) in Coefficient::ALL.iter().zip(&e.generated) {
        let terms = chain_json(&mut out, c);
        let ratio = e.ratios[k.index()].clone().map(Scalar::from);
        let ratio = ratio.map_or(Value::Null, |r| out.scalar(&r));
        chains.push(json!({"coefficient": k.name(), "printed_over_generated": ratio, "terms": terms}));
    }
    out.set("chains", Value::Array(chains));
    Ok(out)
}

fn prolong(coeffs: &[String], ext: Option<&Rational>) -> Res {
    if coeffs.len() != 5 {
        return Err(format!("--quartic needs 5 scalars, got {}", coeffs.len()));
    }
    let mut c = Vec::new();
    for t in coeffs {
        c.push(scalar(t, ext)?);
    }
    let phi = BinaryQuartic::new([c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone(), c[4].clone()]);
    let a = tanaka_prolong(&phi).map_err(|e| e.to_string())?;
    let mut out = Out::new("prolong");
    let q = out.scalars(phi.coeffs.iter());
    out.set("quartic", q);
    out.set("root_type", phi.tag.map_or(Value::Null, |t| Value::String(t.name().into())));
    let ann: Vec<Value> = annihilator(&phi).iter().map(|x| out.element(x)).collect();
    out.set("ann", Value::Array(ann));
    out.set("total_dim", json!(a.dim()));
    let graded: Vec<Value> = a.graded.iter().map(|(d, b)| json!({"degree": d, "dim": b.len()})).collect();
    out.set("graded", Value::Array(graded));
    out.set("rigid", json!(a.is_rigid()));
    out.check(&Check::new("prolongation-rigid", a.is_rigid(), Some(format!("positive part {}", a.positive_dim()))));
    Ok(out)
}

fn model_verify(args: &ModelArgs, ext: Option<&Rational>) -> Res {
    let l = label(&args.label)?;
    let p = param(l, &args.params, ext)?;
    let mut out = Out::new("model verify");
    out.set("model", json!(l.name()));
    match (l.parameter(), p) {
        (Some(name), None) => {
            // formal parameter
            let m = build_model(l, Some(ParamPoly::var(name))).map_err(|e| e.to_string())?;
            out.report(&verify_model(&m));
            out.set("params", json!({name: "formal"}));
            if let Some(f) = family(l) {
                let k =
                    family_coordinates(f, &m.curvature).map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>());
                out.set("curvature", json!(k));
            }
        }
        (_, p) => {
            let m = build_model(l, p).map_err(|e| e.to_string())?;
            out.report(&verify_model(&m));
            let params = params_json(&mut out, &m);
            out.set("params", params);
            if let Some(f) = family(l) {
                let k = family_coordinates(f, &m.curvature);
                let v = k.map_or(Value::Null, |k| out.scalars(k.iter()));
                out.set("curvature", v);
            }
            holonomy_fields(&mut out, &m);
        }
    }
    Ok(out)
}

fn holonomy_fields(out: &mut Out, m: &AlgebraicModel<Scalar>) {
    let h = holonomy(m);
    out.set("holonomy", json!({"dim": h.dim(), "type": h.kind.name()}));
    out.set("einstein_dim", json!(models::almost_einstein_dim(&h)));
}

fn model_holonomy(args: &ModelArgs, ext: Option<&Rational>, cmd: &str) -> Res {
    let m = concrete(args, ext)?;
    if m.label.parameter().is_some() && m.params.is_empty() {
        return Err(format!("{} needs a concrete parameter", cmd));
    }
    let mut out = Out::new(cmd);
    out.set("model", json!(m.label.name()));
    let params = params_json(&mut out, &m);
    out.set("params", params);
    holonomy_fields(&mut out, &m);
    Ok(out)
}

fn iii6() -> Res {
    let o = replicate_iii6_obstruction();
    let mut out = Out::new("model iii6");
    let sols: Vec<Value> = o
        .solutions
        .iter()
        .map(|s| {
            let v: Vec<Value> = s.iter().map(|q| out.scalar(&Scalar::from(q.clone()))).collect();
            json!({"a": v[0], "b": v[1], "c": v[2]})
        })
        .collect();
    let line = o.solutions.len() == 1 && {
        let s = &o.solutions[0];
        s[0] == s[2] && s[0] == Rational::from_integer((-3).into()) * &s[1]
    };
    out.check(&Check::new("closure forces c = a = -3b", line, Some(format!("{} solution lines", sols.len()))));
    out.check(&Check::new("then c = 0", o.c_forced_zero, o.witness.clone()));
    out.set("solutions", Value::Array(sols));
    out.set("x1x4_residual", json!(o.x1x4_residual.to_string()));
    Ok(out)
}

fn psi_parse(text: &str) -> Result<AntiInvolution, String> {
    text.parse()
}

fn realform(args: &ModelArgs, psi: &str, ext: Option<&Rational>) -> Res {
    let m = concrete(args, ext)?;
    let psi = psi_parse(psi)?;
    let mut out = Out::new("realform");
    out.set("model", json!(m.label.name()));
    let params = params_json(&mut out, &m);
    out.set("params", params);
    out.set("psi", json!(psi.label()));
    match real_forms::verify_anti_involution(&psi, Some(&m)) {
        Ok(r) => out.report(&r),
        Err(e) => return Err(e.to_string()),
    }
    if !out.pass() {
        return Ok(out);
    }
    let f = real_forms::fixed_point_algebra(&psi, &m).map_err(|e| e.to_string())?;
    let basis: Vec<Value> =
        f.names.iter().zip(&f.basis).map(|(n, x)| json!({"name": n, "element": out.element(x)})).collect();
    out.set("basis", Value::Array(basis));
    out.set("dim", json!(f.dim()));
    out.set("signature", json!(f.signature));
    out.set("type", json!(f.tag));
    out.set("printed_basis", json!(f.printed_basis));
    Ok(out)
}

fn realform_classify(args: &ModelArgs, ext: Option<&Rational>) -> Res {
    let m = concrete(args, ext)?;
    let rows = real_forms::classify_real_models(&m).map_err(|e| e.to_string())?;
    let mut out = Out::new("realform classify");
    out.set("model", json!(m.label.name()));
    let params = params_json(&mut out, &m);
    out.set("params", params);
    let rows: Vec<Value> = rows
        .iter()
        .map(|r| json!({"psi": r.psi.label(), "dim": r.dim, "signature": r.signature, "type": r.tag}))
        .collect();
    out.check(&Check::new("at least one real form", !rows.is_empty(), None));
    out.set("rows", Value::Array(rows));
    Ok(out)
}

fn rolling_cmd(rho_text: &str) -> Res {
    let rho = rational(rho_text)?;
    let mut out = Out::new("rolling");
    out.set("rho", json!(rho.to_string()));
    if rho == Rational::from_integer(3.into()) {
        let sol = rolling::solve_embedding(&rho, EmbeddingMode::Exceptional).map_err(|e| e.to_string())?;
        out.report(&sol.report);
        out.set("a2", Value::Null);
        out.set("psi", Value::Null);
        out.set("exceptional", json!(true));
        out.set("symmetry_dim", json!(14));
        out.set("verdict", json!("14-dimensional symmetry: split G2"));
        let emb: Vec<Value> = ["T", "X1", "X2", "X3", "X4", "X5"]
            .iter()
            .zip(&sol.ambient)
            .map(|(n, x)| json!({"name": n, "element": out.element(x)}))
            .collect();
        out.set("embedding", Value::Array(emb));
        out.set("residuals_zero", json!(sol.residuals_zero()));
        return Ok(out);
    }
    let class = rolling::classify_rolling(&rho).map_err(|e| e.to_string())?;
    let sol = rolling::solve_embedding(&rho, EmbeddingMode::Generic).map_err(|e| e.to_string())?;
    out.report(&sol.report);
    let a2 = out.scalar(&Scalar::from(class.a_squared.clone()));
    out.set("a2", a2);
    let a = out.scalar(&sol.a);
    out.set("a", a);
    out.set("psi", json!(class.psi.label()));
    out.set("exceptional", json!(false));
    out.set("symmetry_dim", json!(class.symmetry_dim));
    out.set("verdict", json!(class.verdict));
    out.set("residuals_zero", json!(sol.residuals_zero()));
    Ok(out)
}

fn covariants(args: &ModelArgs, ext: Option<&Rational>) -> Res {
    let m = concrete(args, ext)?;
    let mut out = Out::new("covariants");
    out.set("model", json!(m.label.name()));
    let params = params_json(&mut out, &m);
    out.set("params", params);
    let c = match module_e::quartic_covariants(&m.curvature) {
        Ok(c) => c,
        Err(e) => {
            out.check(&Check::new("curvature lies in E", false, Some(e.to_string())));
            return Ok(out);
        }
    };
    out.check(&Check::ok("curvature lies in E"));
    let f = out.scalars(c.binary.iter());
    out.set("F", f);
    let g: Vec<Value> =
        c.ternary.iter().map(|((i, j, k), v)| json!({"monomial": [i, j, k], "coefficient": out.scalar(v)})).collect();
    out.set("G", Value::Array(g));
    Ok(out)
}

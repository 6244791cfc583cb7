//! Lie(G₂): ordered basis, structure constants, Killing form, roots and the
//! 7-dimensional representation.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::field::{rat, Field, Rational, Ring};
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    F32,
    F31,
    F21,
    F11,
    F10,
    F01,
    Z1,
    Z2,
    E01,
    E10,
    E11,
    E21,
    E31,
    E32,
}

use BasisLabel::*;

pub const DIM: usize = 14;

impl BasisLabel {
    pub const ALL: [BasisLabel; DIM] = [F32, F31, F21, F11, F10, F01, Z1, Z2, E01, E10, E11, E21, E31, E32];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> BasisLabel {
        BasisLabel::ALL[i]
    }

    pub fn name(self) -> &'static str {
        ["f32", "f31", "f21", "f11", "f10", "f01", "Z1", "Z2", "e01", "e10", "e11", "e21", "e31", "e32"][self.index()]
    }

    pub fn from_name(s: &str) -> Option<BasisLabel> {
        BasisLabel::ALL.into_iter().find(|l| l.name() == s)
    }

    /// Root (s,t) meaning sα₁ + tα₂; (0,0) for the Cartan elements.
    pub fn root(self) -> (i64, i64) {
        match self {
            F32 => (-3, -2),
            F31 => (-3, -1),
            F21 => (-2, -1),
            F11 => (-1, -1),
            F10 => (-1, 0),
            F01 => (0, -1),
            Z1 | Z2 => (0, 0),
            E01 => (0, 1),
            E10 => (1, 0),
            E11 => (1, 1),
            E21 => (2, 1),
            E31 => (3, 1),
            E32 => (3, 2),
        }
    }

    /// Grading degree: eigenvalue of ad_{Z1}.
    pub fn degree(self) -> i64 {
        self.root().0
    }

    /// e_st ↔ f_st, Cartan elements map to themselves.
    pub fn opposite(self) -> BasisLabel {
        BasisLabel::from_index(DIM - 1 - self.index())
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Coordinates in the canonical basis f32, …, e32.
#[derive(Clone, PartialEq, Debug)]
pub struct G2Element<R> {
    coords: Vec<R>,
}

impl<R: Ring> G2Element<R> {
    pub fn zero() -> Self {
        G2Element { coords: vec![R::zero(); DIM] }
    }

    pub fn basis(l: BasisLabel) -> Self {
        let mut x = Self::zero();
        x.coords[l.index()] = R::one();
        x
    }

    pub fn from_coords(coords: Vec<R>) -> Self {
        assert_eq!(coords.len(), DIM);
        G2Element { coords }
    }

    /// Build Σ c·label from integer coefficients.
    pub fn from_terms(terms: &[(i64, BasisLabel)]) -> Self {
        let mut x = Self::zero();
        for &(c, l) in terms {
            x.coords[l.index()] = x.coords[l.index()].clone() + R::from_int(c);
        }
        x
    }

    pub fn coords(&self) -> &[R] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<R> {
        self.coords
    }

    pub fn coeff(&self, l: BasisLabel) -> &R {
        &self.coords[l.index()]
    }

    pub fn set(&mut self, l: BasisLabel, v: R) {
        self.coords[l.index()] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, a: &R) -> Self {
        G2Element { coords: linalg::scale(a, &self.coords) }
    }

    pub fn map<S, F: Fn(&R) -> S>(&self, f: F) -> G2Element<S> {
        G2Element { coords: self.coords.iter().map(f).collect() }
    }

    /// Keep only the components whose label satisfies `keep`.
    pub fn restrict<F: Fn(BasisLabel) -> bool>(&self, keep: F) -> Self {
        let coords = self
            .coords
            .iter()
            .enumerate()
            .map(|(i, c)| if keep(BasisLabel::from_index(i)) { c.clone() } else { R::zero() })
            .collect();
        G2Element { coords }
    }

    pub fn support(&self) -> impl Iterator<Item = (BasisLabel, &R)> {
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (BasisLabel::from_index(i), c))
    }
}

impl<R: Ring> Add for G2Element<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let coords = self.coords.into_iter().zip(o.coords).map(|(a, b)| a + b).collect();
        G2Element { coords }
    }
}

impl<R: Ring> Sub for G2Element<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let coords = self.coords.into_iter().zip(o.coords).map(|(a, b)| a - b).collect();
        G2Element { coords }
    }
}

impl<R: Ring> Neg for G2Element<R> {
    type Output = Self;
    fn neg(self) -> Self {
        G2Element { coords: self.coords.into_iter().map(|a| -a).collect() }
    }
}

impl<R: Ring + fmt::Display> fmt::Display for G2Element<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.support().map(|(l, c)| format!("({})*{}", c, l)).collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// Upper triangle of the bracket table in the order
/// Z1, Z2, e01, e10, e11, e21, e31, e32, f01, f10, f11, f21, f31, f32.
const TABLE: &[(BasisLabel, BasisLabel, &[(i64, BasisLabel)])] = &[
    (Z1, E10, &[(1, E10)]),
    (Z1, E11, &[(1, E11)]),
    (Z1, E21, &[(2, E21)]),
    (Z1, E31, &[(3, E31)]),
    (Z1, E32, &[(3, E32)]),
    (Z1, F10, &[(-1, F10)]),
    (Z1, F11, &[(-1, F11)]),
    (Z1, F21, &[(-2, F21)]),
    (Z1, F31, &[(-3, F31)]),
    (Z1, F32, &[(-3, F32)]),
    (Z2, E01, &[(1, E01)]),
    (Z2, E11, &[(1, E11)]),
    (Z2, E21, &[(1, E21)]),
    (Z2, E31, &[(1, E31)]),
    (Z2, E32, &[(2, E32)]),
    (Z2, F01, &[(-1, F01)]),
    (Z2, F11, &[(-1, F11)]),
    (Z2, F21, &[(-1, F21)]),
    (Z2, F31, &[(-1, F31)]),
    (Z2, F32, &[(-2, F32)]),
    (E01, E10, &[(-1, E11)]),
    (E01, E31, &[(1, E32)]),
    (E01, F01, &[(-1, Z1), (2, Z2)]),
    (E01, F11, &[(1, F10)]),
    (E01, F32, &[(-1, F31)]),
    (E10, E11, &[(2, E21)]),
    (E10, E21, &[(-3, E31)]),
    (E10, F10, &[(2, Z1), (-3, Z2)]),
    (E10, F11, &[(-3, F01)]),
    (E10, F21, &[(-2, F11)]),
    (E10, F31, &[(1, F21)]),
    (E11, E21, &[(3, E32)]),
    (E11, F01, &[(1, E10)]),
    (E11, F10, &[(-3, E01)]),
    (E11, F11, &[(-1, Z1), (3, Z2)]),
    (E11, F21, &[(2, F10)]),
    (E11, F32, &[(-1, F21)]),
    (E21, F10, &[(-2, E11)]),
    (E21, F11, &[(2, E10)]),
    (E21, F21, &[(1, Z1)]),
    (E21, F31, &[(-1, F10)]),
    (E21, F32, &[(1, F11)]),
    (E31, F10, &[(1, E21)]),
    (E31, F21, &[(-1, E10)]),
    (E31, F31, &[(1, Z1), (-1, Z2)]),
    (E31, F32, &[(1, F01)]),
    (E32, F01, &[(-1, E31)]),
    (E32, F11, &[(-1, E21)]),
    (E32, F21, &[(1, E11)]),
    (E32, F31, &[(1, E01)]),
    (E32, F32, &[(1, Z2)]),
    (F01, F10, &[(1, F11)]),
    (F01, F31, &[(-1, F32)]),
    (F10, F11, &[(-2, F21)]),
    (F10, F21, &[(3, F31)]),
    (F11, F21, &[(-3, F32)]),
];

type Constants = Vec<Vec<Vec<(usize, i64)>>>;

/// c[i][j] = sparse expansion of [b_i, b_j].
pub fn structure_constants() -> &'static Constants {
    static C: OnceLock<Constants> = OnceLock::new();
    C.get_or_init(|| {
        let mut c: Constants = vec![vec![Vec::new(); DIM]; DIM];
        for &(x, y, terms) in TABLE {
            let (i, j) = (x.index(), y.index());
            assert!(c[i][j].is_empty(), "duplicate table entry [{},{}]", x, y);
            c[i][j] = terms.iter().map(|&(k, l)| (l.index(), k)).collect();
            c[j][i] = terms.iter().map(|&(k, l)| (l.index(), -k)).collect();
        }
        c
    })
}

pub fn bracket<R: Ring>(x: &G2Element<R>, y: &G2Element<R>) -> G2Element<R> {
    let c = structure_constants();
    let mut out = vec![R::zero(); DIM];
    for (i, xi) in x.coords.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.coords.iter().enumerate() {
            if yj.is_zero() || c[i][j].is_empty() {
                continue;
            }
            let p = xi.clone() * yj.clone();
            for &(k, n) in &c[i][j] {
                out[k] = out[k].clone() + R::from_int(n) * p.clone();
            }
        }
    }
    G2Element { coords: out }
}

pub fn bracket_labels<R: Ring>(a: BasisLabel, b: BasisLabel) -> G2Element<R> {
    bracket(&G2Element::basis(a), &G2Element::basis(b))
}

/// Matrix of ad_x; column j is [x, b_j].
pub fn ad_matrix<R: Ring>(x: &G2Element<R>) -> Matrix<R> {
    let cols: Vec<Vec<R>> = BasisLabel::ALL.iter().map(|&l| bracket(x, &G2Element::basis(l)).coords).collect();
    linalg::transpose(&cols)
}

/// B(x,y) = tr(ad_x ∘ ad_y).
pub fn killing_form<R: Ring>(x: &G2Element<R>, y: &G2Element<R>) -> R {
    let m = linalg::mat_mul(&ad_matrix(x), &ad_matrix(y));
    linalg::trace(&m)
}

/// Gram matrix of the closed form
/// 16(3Z1*Z1* + 3Z1*Z2* + Z2*Z2* + e01*f01* + 3e10*f10* + 3e11*f11* + 3e21*f21* + e31*f31* + e32*f32*)
/// with vw = ½(v⊗w + w⊗v).
pub fn killing_closed_form() -> Matrix<Rational> {
    let mut g = vec![vec![Rational::zero(); DIM]; DIM];
    g[Z1.index()][Z1.index()] = rat(48, 1);
    g[Z1.index()][Z2.index()] = rat(24, 1);
    g[Z2.index()][Z1.index()] = rat(24, 1);
    g[Z2.index()][Z2.index()] = rat(16, 1);
    for (e, c) in [(E01, 1), (E10, 3), (E11, 3), (E21, 3), (E31, 1), (E32, 1)] {
        let (i, j) = (e.index(), e.opposite().index());
        g[i][j] = rat(8 * c, 1);
        g[j][i] = rat(8 * c, 1);
    }
    g
}

/// h_st := [e_st, f_st], computed from the table.
pub fn coroot<R: Ring>(e: BasisLabel) -> G2Element<R> {
    bracket_labels(e, e.opposite())
}

pub fn h01<R: Ring>() -> G2Element<R> {
    coroot(E01)
}

/// Root data on 𝔥* in the basis dual to {Z1, Z2}.
#[derive(Clone, Debug, PartialEq)]
pub struct RootDatum {
    pub simple: [(i64, i64); 2],
    pub positive: Vec<(i64, i64)>,
    pub cartan: [[i64; 2]; 2],
    /// fundamental weights in the basis of simple roots
    pub fundamental: [(i64, i64); 2],
    /// ⟨·,·⟩ on 𝔥* in the basis of simple roots
    pub inner: [[Rational; 2]; 2],
}

pub fn root_datum() -> RootDatum {
    let k = killing_closed_form();
    // B restricted to 𝔥; ⟨,⟩ on 𝔥* is its inverse in the dual basis
    let bh: Matrix<Rational> =
        [Z1, Z2].iter().map(|a| [Z1, Z2].iter().map(|b| k[a.index()][b.index()].clone()).collect()).collect();
    let ip = linalg::inverse(&bh).expect("nondegenerate on h");
    let pair = |a: (i64, i64), b: (i64, i64)| -> Rational {
        let (a, b) = ([rat(a.0, 1), rat(a.1, 1)], [rat(b.0, 1), rat(b.1, 1)]);
        let mut s = Rational::zero();
        for i in 0..2 {
            for j in 0..2 {
                s += &a[i] * &ip[i][j] * &b[j];
            }
        }
        s
    };
    let simple = [(1, 0), (0, 1)];
    let mut cartan = [[0i64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            let c = rat(2, 1) * pair(simple[i], simple[j]) / pair(simple[j], simple[j]);
            assert!(c.is_integer());
            cartan[i][j] = c.to_integer().try_into().expect("small");
        }
    }
    // α_i = Σ_j C_ij λ_j
    let cm: Matrix<Rational> = cartan.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect();
    let ci = linalg::inverse(&cm).expect("invertible");
    let to_i = |q: &Rational| -> i64 { q.to_integer().try_into().expect("small") };
    let fundamental = [(to_i(&ci[0][0]), to_i(&ci[0][1])), (to_i(&ci[1][0]), to_i(&ci[1][1]))];
    let positive = BasisLabel::ALL.iter().filter(|l| l.index() >= E01.index()).map(|l| l.root()).collect();
    RootDatum {
        simple,
        positive,
        cartan,
        fundamental,
        inner: [[ip[0][0].clone(), ip[0][1].clone()], [ip[1][0].clone(), ip[1][1].clone()]],
    }
}

/// Map from roots to basis labels; checks [h, x] = α(h) x for h ∈ {Z1, Z2}.
pub fn root_decomposition() -> Vec<((i64, i64), BasisLabel)> {
    let mut out = Vec::new();
    for l in BasisLabel::ALL {
        if l == Z1 || l == Z2 {
            continue;
        }
        let (s, t) = l.root();
        let x: G2Element<Rational> = G2Element::basis(l);
        assert_eq!(bracket_labels::<Rational>(Z1, l), x.scale(&rat(s, 1)));
        assert_eq!(bracket_labels::<Rational>(Z2, l), x.scale(&rat(t, 1)));
        out.push(((s, t), l));
    }
    out
}

/// One nonzero entry of a representation matrix: (row, col, coefficient, has √2).
type RepEntry = (usize, usize, i64, bool);

/// Entries of the 7×7 realization, per generator, rows and columns 0-based.
fn rep7_entries(l: BasisLabel) -> Vec<RepEntry> {
    match l {
        Z1 => vec![
            (0, 0, 2, false),
            (1, 1, 1, false),
            (2, 2, 1, false),
            (4, 4, -1, false),
            (5, 5, -1, false),
            (6, 6, -2, false),
        ],
        Z2 => vec![(0, 0, 1, false), (1, 1, 1, false), (5, 5, -1, false), (6, 6, -1, false)],
        E10 => vec![(0, 1, 1, false), (2, 3, -1, true), (3, 4, 1, true), (5, 6, -1, false)],
        E11 => vec![(0, 2, 1, false), (1, 3, 1, true), (3, 5, -1, true), (4, 6, -1, false)],
        E21 => vec![(0, 3, 1, true), (1, 4, -1, false), (2, 5, 1, false), (3, 6, -1, true)],
        E31 => vec![(0, 4, 1, false), (2, 6, -1, false)],
        E32 => vec![(0, 5, 1, false), (1, 6, -1, false)],
        E01 => vec![(1, 2, 1, false), (4, 5, -1, false)],
        F10 => vec![(1, 0, 1, false), (3, 2, -1, true), (4, 3, 1, true), (6, 5, -1, false)],
        F11 => vec![(2, 0, 1, false), (3, 1, 1, true), (5, 3, -1, true), (6, 4, -1, false)],
        F21 => vec![(3, 0, 1, true), (4, 1, -1, false), (5, 2, 1, false), (6, 3, -1, true)],
        F31 => vec![(4, 0, 1, false), (6, 2, -1, false)],
        F32 => vec![(5, 0, 1, false), (6, 1, -1, false)],
        F01 => vec![(2, 1, 1, false), (5, 4, -1, false)],
    }
}

/// The 7-dimensional representation, with the invariant tensors g and Ψ.
#[derive(Clone, Debug)]
pub struct Rep7<F> {
    pub matrices: Vec<Matrix<F>>,
    /// symmetric Gram matrix of g = 2(v¹v⁷ + v²v⁶ + v³v⁵) + v⁴v⁴
    pub metric: Matrix<F>,
    /// Ψ as (i,j,k,coefficient) on v^i∧v^j∧v^k, 0-based
    pub three_form: Vec<(usize, usize, usize, F)>,
}

impl Rep7<Scalar> {
    /// The printed realization; √2 lives in the r = 2 extension.
    pub fn standard() -> Rep7<Scalar> {
        let s2 = Scalar::sqrt_of(&rat(2, 1));
        Rep7::build(
            |c, root| {
                let v = Scalar::from_int(c);
                if root {
                    v * s2.clone()
                } else {
                    v
                }
            },
            s2.clone(),
        )
    }
}

impl Rep7<Rational> {
    /// Conjugate of the printed realization by diag(1,1,1,√2,1,1,1); all
    /// entries become rational, kernels keep their shape away from v⁴.
    pub fn rational_form() -> Rep7<Rational> {
        let mut rep = Rep7::build(|c, _| rat(c, 1), Rational::one());
        for m in rep.matrices.iter_mut() {
            for i in 0..7 {
                for j in 0..7 {
                    if i == 3 && j != 3 {
                        m[i][j] = &m[i][j] * rat(2, 1);
                    }
                }
            }
        }
        rep
    }
}

impl<F: Field> Rep7<F> {
    fn build<G: Fn(i64, bool) -> F>(entry: G, sqrt2: F) -> Rep7<F> {
        let matrices = BasisLabel::ALL
            .iter()
            .map(|&l| {
                let mut m = vec![vec![F::zero(); 7]; 7];
                for (i, j, c, root) in rep7_entries(l) {
                    m[i][j] = entry(c, root);
                }
                m
            })
            .collect();
        let mut metric = vec![vec![F::zero(); 7]; 7];
        for (i, j) in [(0, 6), (1, 5), (2, 4)] {
            metric[i][j] = F::one();
            metric[j][i] = F::one();
        }
        metric[3][3] = F::one();
        let three_form = vec![
            (0, 3, 6, F::one()),
            (1, 3, 5, -F::one()),
            (2, 3, 4, -F::one()),
            (0, 4, 5, sqrt2.clone()),
            (1, 2, 6, sqrt2),
        ];
        Rep7 { matrices, metric, three_form }
    }

    /// ρ(x) for a general element.
    pub fn image(&self, x: &G2Element<F>) -> Matrix<F> {
        let mut out = vec![vec![F::zero(); 7]; 7];
        for (l, c) in x.support() {
            for i in 0..7 {
                linalg::axpy(&mut out[i], c, &self.matrices[l.index()][i]);
            }
        }
        out
    }

    /// x·g = 0 ⟺ ρ(x)ᵀG + Gρ(x) = 0.
    pub fn annihilates_metric(&self, m: &Matrix<F>) -> bool {
        let lhs =
            linalg::mat_add(&linalg::mat_mul(&linalg::transpose(m), &self.metric), &linalg::mat_mul(&self.metric, m));
        lhs.iter().all(|r| linalg::is_zero_vec(r))
    }

    fn psi_tensor(&self) -> Vec<F> {
        let mut t = vec![F::zero(); 343];
        for (i, j, k, c) in &self.three_form {
            for (p, sign) in [
                ([*i, *j, *k], 1),
                ([*j, *k, *i], 1),
                ([*k, *i, *j], 1),
                ([*j, *i, *k], -1),
                ([*i, *k, *j], -1),
                ([*k, *j, *i], -1),
            ] {
                let v = if sign > 0 { c.clone() } else { -c.clone() };
                t[p[0] * 49 + p[1] * 7 + p[2]] = v;
            }
        }
        t
    }

    /// x·Ψ = 0 as a derivation on 3-forms.
    pub fn annihilates_three_form(&self, m: &Matrix<F>) -> bool {
        let t = self.psi_tensor();
        for a in 0..7 {
            for b in 0..7 {
                for c in 0..7 {
                    let mut s = F::zero();
                    for k in 0..7 {
                        for (val, idx) in [
                            (&m[k][a], k * 49 + b * 7 + c),
                            (&m[k][b], a * 49 + k * 7 + c),
                            (&m[k][c], a * 49 + b * 7 + k),
                        ] {
                            if !val.is_zero() && !t[idx].is_zero() {
                                s = s + val.clone() * t[idx].clone();
                            }
                        }
                    }
                    if !s.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Outcome of an exhaustive identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSummary {
    pub name: String,
    pub count: usize,
    pub failures: Vec<String>,
}

impl CheckSummary {
    pub fn new(name: &str) -> Self {
        CheckSummary { name: name.to_string(), count: 0, failures: Vec::new() }
    }

    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.count += 1;
        if !ok {
            self.failures.push(witness());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn check_jacobi() -> CheckSummary {
    let mut s = CheckSummary::new("jacobi");
    let b = |l: usize| G2Element::<Rational>::basis(BasisLabel::from_index(l));
    for i in 0..DIM {
        for j in i + 1..DIM {
            for k in j + 1..DIM {
                let (x, y, z) = (b(i), b(j), b(k));
                let sum = bracket(&x, &bracket(&y, &z)) + bracket(&y, &bracket(&z, &x)) + bracket(&z, &bracket(&x, &y));
                s.record(sum.is_zero(), || format!("({},{},{})", x, y, z));
            }
        }
    }
    s
}

pub fn check_killing() -> CheckSummary {
    let mut s = CheckSummary::new("killing_closed_form");
    let closed = killing_closed_form();
    let ads: Vec<Matrix<Rational>> = BasisLabel::ALL.iter().map(|&l| ad_matrix(&G2Element::basis(l))).collect();
    for i in 0..DIM {
        for j in i..DIM {
            let t = linalg::trace(&linalg::mat_mul(&ads[i], &ads[j]));
            s.record(t == closed[i][j], || {
                format!("B({},{}) = {} vs {}", BasisLabel::from_index(i), BasisLabel::from_index(j), t, closed[i][j])
            });
        }
    }
    s
}

pub fn check_rep7_homomorphism() -> CheckSummary {
    let rep = Rep7::standard();
    let mut s = CheckSummary::new("rep7_homomorphism");
    for a in BasisLabel::ALL {
        for b in BasisLabel::ALL {
            let (ma, mb) = (&rep.matrices[a.index()], &rep.matrices[b.index()]);
            let comm = linalg::mat_sub(&linalg::mat_mul(ma, mb), &linalg::mat_mul(mb, ma));
            let img = rep.image(&bracket_labels(a, b));
            s.record(comm == img, || format!("({},{})", a, b));
        }
    }
    s
}

pub fn check_rep7_tensors() -> CheckSummary {
    let rep = Rep7::standard();
    let mut s = CheckSummary::new("rep7_invariant_tensors");
    for l in BasisLabel::ALL {
        let m = &rep.matrices[l.index()];
        s.record(rep.annihilates_metric(m), || format!("{}·g", l));
        s.record(rep.annihilates_three_form(m), || format!("{}·Psi", l));
    }
    s
}

/// The identity on the basis pairs used by the bracket, as an independent
/// ad-invariance statement: B([x,y],z) + B(y,[x,z]) = 0.
pub fn killing_invariance<F: Field>(x: &G2Element<F>, y: &G2Element<F>, z: &G2Element<F>) -> bool {
    let lhs = killing_form(&bracket(x, y), z) + killing_form(y, &bracket(x, z));
    lhs.is_zero()
}

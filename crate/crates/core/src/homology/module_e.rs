//! The 24-dimensional curvature module E ⊂ ker ∂*, its printed weight
//! vectors, and the coefficient functions A1, …, F̃2.

use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;
use thiserror::Error;

use super::{act_chain, act_cochain, partial_star, phi0, to_cochain, Chain, Cochain};
use crate::field::{rat, Rational, Ring};
use crate::g2::{BasisLabel, BasisLabel::*, G2Element};
use crate::linalg::{self, Echelon, Matrix};
use crate::parabolic;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("cochain does not lie in the curvature module")]
    NotInE,
    #[error("element is not in the parabolic subalgebra")]
    NotInP,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    A,
    B,
    C,
    D,
    Dt,
    E,
    Et,
    Ft,
}

impl Component {
    /// Order of the component table.
    pub const ALL: [Component; 8] = [
        Component::A,
        Component::B,
        Component::C,
        Component::D,
        Component::Dt,
        Component::E,
        Component::Et,
        Component::Ft,
    ];

    pub fn dim(self) -> usize {
        match self {
            Component::A => 5,
            Component::B | Component::Dt => 4,
            Component::C | Component::Et => 3,
            Component::D | Component::Ft => 2,
            Component::E => 1,
        }
    }

    pub fn homogeneity(self) -> i64 {
        match self {
            Component::A => 4,
            Component::B => 5,
            Component::C => 6,
            Component::D | Component::Dt => 7,
            Component::E | Component::Et => 8,
            Component::Ft => 9,
        }
    }

    pub fn lowest_weight(self) -> (i64, i64) {
        match self {
            Component::A => (4, 0),
            Component::B => (5, 1),
            Component::C => (6, 2),
            Component::D => (7, 3),
            Component::Dt => (7, 2),
            Component::E => (8, 4),
            Component::Et => (8, 3),
            Component::Ft => (9, 4),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Component::A => "A",
            Component::B => "B",
            Component::C => "C",
            Component::D => "D",
            Component::Dt => "Dt",
            Component::E => "E",
            Component::Et => "Et",
            Component::Ft => "Ft",
        }
    }

    pub fn coefficients(self) -> Vec<Coefficient> {
        Coefficient::ALL.into_iter().filter(|c| c.component() == self).collect()
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coefficient {
    A1,
    A2,
    A3,
    A4,
    A5,
    B1,
    B2,
    B3,
    B4,
    C1,
    C2,
    C3,
    D1,
    D2,
    E,
    Dt1,
    Dt2,
    Dt3,
    Dt4,
    Et1,
    Et2,
    Et3,
    Ft1,
    Ft2,
}

use Coefficient as K;

impl Coefficient {
    pub const ALL: [Coefficient; 24] = [
        K::A1,
        K::A2,
        K::A3,
        K::A4,
        K::A5,
        K::B1,
        K::B2,
        K::B3,
        K::B4,
        K::C1,
        K::C2,
        K::C3,
        K::D1,
        K::D2,
        K::E,
        K::Dt1,
        K::Dt2,
        K::Dt3,
        K::Dt4,
        K::Et1,
        K::Et2,
        K::Et3,
        K::Ft1,
        K::Ft2,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        [
            "A1", "A2", "A3", "A4", "A5", "B1", "B2", "B3", "B4", "C1", "C2", "C3", "D1", "D2", "E", "Dt1", "Dt2",
            "Dt3", "Dt4", "Et1", "Et2", "Et3", "Ft1", "Ft2",
        ][self.index()]
    }

    pub fn from_name(s: &str) -> Option<Coefficient> {
        Coefficient::ALL.into_iter().find(|c| c.name() == s)
    }

    pub fn component(self) -> Component {
        match self.index() {
            0..=4 => Component::A,
            5..=8 => Component::B,
            9..=11 => Component::C,
            12 | 13 => Component::D,
            14 => Component::E,
            15..=18 => Component::Dt,
            19..=21 => Component::Et,
            _ => Component::Ft,
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

const H01: &[(i64, BasisLabel)] = &[(-1, Z1), (2, Z2)];
const V_F01: &[(i64, BasisLabel)] = &[(1, F01)];
const V_E01: &[(i64, BasisLabel)] = &[(1, E01)];
const V_E10: &[(i64, BasisLabel)] = &[(1, E10)];
const V_E11: &[(i64, BasisLabel)] = &[(1, E11)];
const V_E21: &[(i64, BasisLabel)] = &[(1, E21)];
const V_E31: &[(i64, BasisLabel)] = &[(1, E31)];
const V_E32: &[(i64, BasisLabel)] = &[(1, E32)];

type ChainTerm = (i64, BasisLabel, BasisLabel, &'static [(i64, BasisLabel)]);

/// Printed weight vectors of E, in coefficient order.
const PRINTED: [&[ChainTerm]; 24] = [
    &[(1, E10, E31, V_F01)],
    &[(1, E10, E32, V_F01), (-1, E11, E31, V_F01), (1, E10, E31, H01)],
    &[(1, E10, E32, H01), (-1, E11, E31, H01), (-1, E10, E31, V_E01), (-1, E11, E32, V_F01)],
    &[(1, E11, E31, V_E01), (-1, E10, E32, V_E01), (-1, E11, E32, H01)],
    &[(1, E11, E32, V_E01)],
    &[(1, E10, E31, V_E10), (-2, E21, E31, V_F01)],
    &[(1, E10, E32, V_E10), (-1, E11, E31, V_E10), (-1, E10, E31, V_E11), (-2, E21, E32, V_F01), (-2, E21, E31, H01)],
    &[(1, E11, E31, V_E11), (-1, E10, E32, V_E11), (-1, E11, E32, V_E10), (2, E21, E31, V_E01), (-2, E21, E32, H01)],
    &[(1, E11, E32, V_E11), (2, E21, E32, V_E01)],
    &[(-1, E10, E31, V_E21), (-2, E21, E31, V_E10), (3, E31, E32, V_F01)],
    &[(1, E11, E31, V_E21), (-1, E10, E32, V_E21), (-2, E21, E32, V_E10), (2, E21, E31, V_E11), (3, E31, E32, H01)],
    &[(1, E11, E32, V_E21), (2, E21, E32, V_E11), (-3, E31, E32, V_E01)],
    &[(1, E10, E32, V_E31), (-1, E11, E31, V_E31), (-2, E10, E31, V_E32), (6, E21, E31, V_E21), (9, E31, E32, V_E10)],
    &[(1, E11, E31, V_E32), (-1, E10, E32, V_E32), (-2, E11, E32, V_E31), (6, E21, E32, V_E21), (-9, E31, E32, V_E11)],
    &[(1, E21, E31, V_E32), (-1, E21, E32, V_E31), (-3, E31, E32, V_E21)],
    &[(1, E10, E31, V_E31)],
    &[(1, E10, E32, V_E31), (-1, E11, E31, V_E31), (1, E10, E31, V_E32)],
    &[(1, E10, E32, V_E32), (-1, E11, E31, V_E32), (-1, E11, E32, V_E31)],
    &[(-1, E11, E32, V_E32)],
    &[(1, E21, E31, V_E31)],
    &[(1, E21, E32, V_E31), (1, E21, E31, V_E32)],
    &[(1, E21, E32, V_E32)],
    &[(1, E31, E32, V_E31)],
    &[(1, E31, E32, V_E32)],
];

pub fn printed_chain(c: Coefficient) -> Chain<Rational> {
    Chain::from_int_terms(PRINTED[c.index()])
}

/// Curvature 2-form as Σ_target (Σ coefficient · q · θ_a∧θ_b) ⊗ target,
/// θ_ab standing for f_a*∧f_b*.
const DICTIONARY: &[(Coefficient, i64, i64, BasisLabel, BasisLabel, BasisLabel)] = &[
    // e32
    (K::D2, 1, 3, F11, F31, E32),
    (K::D2, -1, 3, F10, F32, E32),
    (K::D1, -2, 3, F10, F31, E32),
    (K::E, 1, 1, F21, F31, E32),
    (K::Dt2, 1, 1, F10, F31, E32),
    (K::Dt3, 1, 1, F10, F32, E32),
    (K::Dt3, -1, 1, F11, F31, E32),
    (K::Dt4, -1, 1, F11, F32, E32),
    (K::Et2, -2, 1, F21, F31, E32),
    (K::Et3, -2, 1, F21, F32, E32),
    (K::Ft2, 1, 1, F31, F32, E32),
    // e31
    (K::D1, 1, 3, F10, F32, E31),
    (K::D1, -1, 3, F11, F31, E31),
    (K::D2, -2, 3, F11, F32, E31),
    (K::E, -1, 1, F21, F32, E31),
    (K::Dt1, 1, 1, F10, F31, E31),
    (K::Dt2, 1, 1, F10, F32, E31),
    (K::Dt2, -1, 1, F11, F31, E31),
    (K::Dt3, -1, 1, F11, F32, E31),
    (K::Et1, -2, 1, F21, F31, E31),
    (K::Et2, -2, 1, F21, F32, E31),
    (K::Ft1, 1, 1, F31, F32, E31),
    // e21
    (K::C1, -1, 1, F10, F31, E21),
    (K::C2, -1, 1, F10, F32, E21),
    (K::C2, 1, 1, F11, F31, E21),
    (K::C3, 1, 1, F11, F32, E21),
    (K::D1, 2, 1, F21, F31, E21),
    (K::D2, 2, 1, F21, F32, E21),
    (K::E, -1, 1, F31, F32, E21),
    // e11
    (K::B2, -1, 1, F10, F31, E11),
    (K::B3, 1, 1, F11, F31, E11),
    (K::B3, -1, 1, F10, F32, E11),
    (K::B4, 1, 1, F11, F32, E11),
    (K::C2, 2, 1, F21, F31, E11),
    (K::C3, 2, 1, F21, F32, E11),
    (K::D2, -1, 1, F31, F32, E11),
    // e10
    (K::B1, 1, 1, F10, F31, E10),
    (K::B2, 1, 1, F10, F32, E10),
    (K::B2, -1, 1, F11, F31, E10),
    (K::B3, -1, 1, F11, F32, E10),
    (K::C1, -2, 1, F21, F31, E10),
    (K::C2, -2, 1, F21, F32, E10),
    (K::D1, 1, 1, F31, F32, E10),
    // e01
    (K::A3, -1, 1, F10, F31, E01),
    (K::A4, 1, 1, F11, F31, E01),
    (K::A4, -1, 1, F10, F32, E01),
    (K::A5, 1, 1, F11, F32, E01),
    (K::B3, 2, 1, F21, F31, E01),
    (K::B4, 2, 1, F21, F32, E01),
    (K::C3, -1, 1, F31, F32, E01),
    // Z1
    (K::A2, -1, 1, F10, F31, Z1),
    (K::A3, -1, 1, F10, F32, Z1),
    (K::A3, 1, 1, F11, F31, Z1),
    (K::A4, 1, 1, F11, F32, Z1),
    (K::B2, 2, 1, F21, F31, Z1),
    (K::B3, 2, 1, F21, F32, Z1),
    (K::C2, 1, 1, F32, F31, Z1),
    // Z2
    (K::A2, 2, 1, F10, F31, Z2),
    (K::A3, 2, 1, F10, F32, Z2),
    (K::A3, -2, 1, F11, F31, Z2),
    (K::A4, -2, 1, F11, F32, Z2),
    (K::B2, -4, 1, F21, F31, Z2),
    (K::B3, -4, 1, F21, F32, Z2),
    (K::C2, -2, 1, F32, F31, Z2),
    // f01
    (K::A1, 1, 1, F10, F31, F01),
    (K::A2, 1, 1, F10, F32, F01),
    (K::A2, -1, 1, F11, F31, F01),
    (K::A3, -1, 1, F11, F32, F01),
    (K::B1, -2, 1, F21, F31, F01),
    (K::B2, -2, 1, F21, F32, F01),
    (K::C1, 1, 1, F31, F32, F01),
];

/// d_c with κ = Σ_c c · d_c.
pub fn dictionary_cochain(c: Coefficient) -> Cochain<Rational> {
    let mut out = Cochain::zero(2);
    for &(k, n, d, a, b, t) in DICTIONARY {
        if k == c {
            let idx = [Cochain::<Rational>::slot(a), Cochain::<Rational>::slot(b)];
            out.accumulate(&idx, &rat(n, d), &G2Element::basis(t));
        }
    }
    out
}

pub fn dictionary() -> &'static Vec<Cochain<Rational>> {
    static D: OnceLock<Vec<Cochain<Rational>>> = OnceLock::new();
    D.get_or_init(|| Coefficient::ALL.iter().map(|&c| dictionary_cochain(c)).collect())
}

/// E with its generated and printed bases.
#[derive(Clone, Debug)]
pub struct CurvatureModuleE {
    /// dimension of the 𝔭-closure of φ₀
    pub dim: usize,
    /// rounds of the closure until the dimension stabilized
    pub rounds: usize,
    /// e01-ladders over the f01-lowest weight vectors of E, in coefficient order
    pub generated: Vec<Chain<Rational>>,
    /// printed weight vectors, coefficient order
    pub printed: Vec<Chain<Rational>>,
    /// printed[i] = ratios[i] · generated[i] when matched
    pub ratios: Vec<Option<Rational>>,
    /// per component: (component, dimension found)
    pub component_dims: Vec<(Component, usize)>,
    span: Echelon<Rational>,
}

fn p_basis() -> Vec<G2Element<Rational>> {
    parabolic::filtrand(0).into_iter().map(G2Element::basis).collect()
}

fn ratio(printed: &[Rational], generated: &[Rational]) -> Option<Rational> {
    let i = generated.iter().position(|x| !x.is_zero())?;
    let r = &printed[i] / &generated[i];
    if linalg::scale(&r, generated) == printed {
        Some(r)
    } else {
        None
    }
}

impl CurvatureModuleE {
    fn build() -> CurvatureModuleE {
        let n = super::space_dim(2);
        let p = p_basis();
        let mut span = Echelon::new(n);
        span.insert(phi0().data()).expect("field");
        let mut frontier = vec![phi0()];
        let mut rounds = 0;
        while !frontier.is_empty() {
            rounds += 1;
            let mut next = Vec::new();
            for c in &frontier {
                for x in &p {
                    let y = act_chain(x, c);
                    if span.insert(y.data()).expect("field") {
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }

        // weight spaces of E, then f01-lowest vectors in each
        let rows: Vec<Chain<Rational>> = span.rows().iter().map(|r| Chain::from_vec(2, r.clone())).collect();
        let mut weights: Vec<(i64, i64)> = rows.iter().flat_map(|r| r.weights()).collect();
        weights.sort();
        weights.dedup();
        let f01 = G2Element::basis(F01);
        let e01 = G2Element::basis(E01);
        let mut lowest: Vec<((i64, i64), Chain<Rational>)> = Vec::new();
        for &w in &weights {
            let parts: Vec<Vec<Rational>> = rows.iter().map(|r| r.weight_part(w).into_vec()).collect();
            let ew = Echelon::from_vectors(n, &parts).expect("field");
            let basis: Vec<Chain<Rational>> = ew.rows().iter().map(|r| Chain::from_vec(2, r.clone())).collect();
            let images: Vec<Vec<Rational>> = basis.iter().map(|b| act_chain(&f01, b).into_vec()).collect();
            for combo in linalg::nullspace(&linalg::transpose(&images), basis.len()) {
                let mut v = Chain::zero(2);
                for (c, b) in combo.iter().zip(&basis) {
                    v = v + b.scale(c);
                }
                lowest.push((w, v));
            }
        }

        let mut generated = vec![Chain::zero(2); 24];
        let mut component_dims = Vec::new();
        for comp in Component::ALL {
            let coeffs = comp.coefficients();
            let found: Vec<&Chain<Rational>> =
                lowest.iter().filter(|(w, _)| *w == comp.lowest_weight()).map(|(_, v)| v).collect();
            if found.len() != 1 {
                component_dims.push((comp, 0));
                continue;
            }
            let mut ladder = vec![found[0].clone()];
            loop {
                let next = act_chain(&e01, ladder.last().expect("nonempty"));
                if next.is_zero() {
                    break;
                }
                ladder.push(next);
            }
            component_dims.push((comp, ladder.len()));
            for (c, v) in coeffs.iter().zip(ladder) {
                generated[c.index()] = v;
            }
        }

        let printed: Vec<Chain<Rational>> = Coefficient::ALL.iter().map(|&c| printed_chain(c)).collect();
        let ratios = printed.iter().zip(&generated).map(|(p, g)| ratio(p.data(), g.data())).collect();
        CurvatureModuleE { dim: span.dim(), rounds, generated, printed, ratios, component_dims, span }
    }

    pub fn contains(&self, c: &Chain<Rational>) -> bool {
        self.span.contains(c.data())
    }

    /// Every printed vector equals a nonzero multiple of the generated one.
    pub fn all_printed_match(&self) -> bool {
        self.ratios.iter().all(|r| r.as_ref().is_some_and(|q| !q.is_zero()))
    }

    /// E is 𝔭-stable: 𝔭 · E ⊆ E on basis vectors.
    pub fn is_p_stable(&self) -> bool {
        let p = p_basis();
        self.span.rows().iter().all(|r| {
            let c = Chain::from_vec(2, r.clone());
            p.iter().all(|x| self.span.contains(act_chain(x, &c).data()))
        })
    }

    pub fn in_kernel_of_partial_star(&self) -> bool {
        self.span.rows().iter().all(|r| partial_star(&Chain::from_vec(2, r.clone())).is_zero())
    }

    pub fn min_homogeneity(&self) -> i64 {
        self.span
            .rows()
            .iter()
            .filter_map(|r| Chain::<Rational>::from_vec(2, r.clone()).min_homogeneity())
            .min()
            .unwrap_or(0)
    }

    /// Each component span is stable under 𝔤₀ and spanned by one e01-ladder.
    pub fn components_irreducible(&self) -> bool {
        let g0: Vec<G2Element<Rational>> = parabolic::component(0).into_iter().map(G2Element::basis).collect();
        Component::ALL.iter().all(|&comp| {
            let vs: Vec<Vec<Rational>> =
                comp.coefficients().iter().map(|c| self.printed[c.index()].data().to_vec()).collect();
            let e = Echelon::from_vectors(vs[0].len(), &vs).expect("field");
            e.dim() == comp.dim()
                && comp
                    .coefficients()
                    .iter()
                    .all(|c| g0.iter().all(|x| e.contains(act_chain(x, &self.printed[c.index()]).data())))
        })
    }

    /// Dictionary cochains are proportional to the printed chains.
    pub fn dictionary_matches_printed(&self) -> bool {
        Coefficient::ALL.iter().all(|&c| {
            let p = to_cochain(&self.printed[c.index()]);
            ratio(p.data(), dictionary()[c.index()].data()).is_some_and(|r| !r.is_zero())
        })
    }
}

pub fn generate_e() -> &'static CurvatureModuleE {
    static E: OnceLock<CurvatureModuleE> = OnceLock::new();
    E.get_or_init(CurvatureModuleE::build)
}

/// 24 × 140 extraction matrix for the dictionary coordinates.
fn extraction() -> &'static Matrix<Rational> {
    static L: OnceLock<Matrix<Rational>> = OnceLock::new();
    L.get_or_init(|| {
        let vs: Vec<Vec<Rational>> = dictionary().iter().map(|d| d.data().to_vec()).collect();
        let e = Echelon::from_vectors(vs[0].len(), &vs).expect("field");
        assert_eq!(e.dim(), 24);
        e.left_inverse()
    })
}

/// Coefficients (A1, …, F̃2) of a 2-cochain in E.
pub fn coefficients<R: Ring>(kappa: &Cochain<R>) -> Result<Vec<R>, HomologyError> {
    let l = extraction();
    let k: Vec<R> = l
        .iter()
        .map(|row| {
            row.iter().zip(kappa.data()).fold(R::zero(), |acc, (a, b)| {
                if a.is_zero() || b.is_zero() {
                    acc
                } else {
                    acc + R::from_rational(a.clone()) * b.clone()
                }
            })
        })
        .collect();
    let mut rebuilt = Cochain::zero(2);
    for (c, d) in k.iter().zip(dictionary()) {
        if !c.is_zero() {
            rebuilt = rebuilt + d.map(|x| R::from_rational(x.clone())).scale(c);
        }
    }
    if rebuilt == *kappa {
        Ok(k)
    } else {
        Err(HomologyError::NotInE)
    }
}

pub fn in_e<R: Ring>(kappa: &Cochain<R>) -> bool {
    coefficients(kappa).is_ok()
}

fn variation_tables() -> &'static Vec<(BasisLabel, Matrix<Rational>)> {
    static V: OnceLock<Vec<(BasisLabel, Matrix<Rational>)>> = OnceLock::new();
    V.get_or_init(|| {
        parabolic::filtrand(0)
            .into_iter()
            .map(|l| {
                let x = G2Element::basis(l);
                let cols: Vec<Vec<Rational>> = dictionary()
                    .iter()
                    .map(|d| {
                        let m = coefficients(&act_cochain(&x, d)).expect("E is p-stable");
                        m.into_iter().map(|v| -v).collect()
                    })
                    .collect();
                (l, linalg::transpose(&cols))
            })
            .collect()
    })
}

/// Induced action on the coefficient functions: entry (i, j) is the
/// coefficient of c_j in the vertical derivative of c_i along X.
pub fn vertical_variation<R: Ring>(x: &G2Element<R>) -> Result<Matrix<R>, HomologyError> {
    if !parabolic::is_in_p(x) {
        return Err(HomologyError::NotInP);
    }
    let mut out = vec![vec![R::zero(); 24]; 24];
    for (l, m) in variation_tables() {
        let c = x.coeff(*l);
        if c.is_zero() {
            continue;
        }
        for i in 0..24 {
            for j in 0..24 {
                if !m[i][j].is_zero() {
                    out[i][j] = out[i][j].clone() + c.clone() * R::from_rational(m[i][j].clone());
                }
            }
        }
    }
    Ok(out)
}

/// Apply a vertical-variation matrix to a coefficient tuple.
pub fn apply_variation<R: Ring>(m: &Matrix<R>, k: &[R]) -> Vec<R> {
    linalg::mat_vec(m, k)
}

/// Cartan's covariants read off from the coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Covariants<R> {
    pub coefficients: Vec<R>,
    /// y⁴, xy³, x²y², x³y, x⁴
    pub binary: [R; 5],
    /// ((deg x, deg y, deg z), coefficient), modulo v, w
    pub ternary: Vec<((u32, u32, u32), R)>,
}

pub fn quartic_covariants<R: Ring>(kappa: &Cochain<R>) -> Result<Covariants<R>, HomologyError> {
    let k = coefficients(kappa)?;
    let c = |n: i64, coef: Coefficient| R::from_int(n) * k[coef.index()].clone();
    let binary = [c(1, K::A1), c(4, K::A2), c(6, K::A3), c(4, K::A4), c(1, K::A5)];
    let ternary = vec![
        ((0, 4, 0), c(1, K::A1)),
        ((1, 3, 0), c(4, K::A2)),
        ((2, 2, 0), c(6, K::A3)),
        ((3, 1, 0), c(4, K::A4)),
        ((4, 0, 0), c(1, K::A5)),
        ((0, 3, 1), c(4, K::B1)),
        ((1, 2, 1), c(12, K::B2)),
        ((2, 1, 1), c(12, K::B3)),
        ((3, 0, 1), c(4, K::B4)),
        ((0, 2, 2), c(6, K::C1)),
        ((1, 1, 2), c(12, K::C2)),
        ((2, 0, 2), c(6, K::C3)),
        ((0, 1, 3), c(4, K::D1)),
        ((1, 0, 3), c(4, K::D2)),
        ((0, 0, 4), c(1, K::E)),
    ];
    Ok(Covariants { coefficients: k, binary, ternary })
}

/// Indices of E basis vectors whose weight lies in ℤλ.
pub fn weight_restricted_e(lambda: (i64, i64)) -> Vec<Coefficient> {
    let weights: Vec<(i64, i64)> = Coefficient::ALL
        .iter()
        .map(|&c| {
            let w = printed_chain(c).weights();
            assert_eq!(w.len(), 1, "printed vectors are weight vectors");
            w[0]
        })
        .collect();
    parabolic::weight_restricted(&weights, lambda).into_iter().map(|i| Coefficient::ALL[i]).collect()
}

impl<R: Ring + fmt::Display> Covariants<R> {
    pub fn binary_string(&self) -> String {
        let mono = ["y^4", "x*y^3", "x^2*y^2", "x^3*y", "x^4"];
        let parts: Vec<String> =
            self.binary.iter().zip(mono).filter(|(c, _)| !c.is_zero()).map(|(c, m)| format!("({})*{}", c, m)).collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

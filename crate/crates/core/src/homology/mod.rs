//! Chains Λᵏ𝔭₊ ⊗ 𝔤 and cochains Λᵏ(𝔤/𝔭)* ⊗ 𝔤, the differentials ∂ and ∂*,
//! the Kostant Laplacian and the harmonic projection in degree 2.

pub mod module_e;

use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use num_traits::Zero;

use crate::field::{Rational, Ring};
use crate::g2::{self, BasisLabel, BasisLabel::*, G2Element, DIM};
use crate::linalg::{self, Echelon, Matrix};
use crate::parabolic::{self, COSET, PAIRING, PPLUS};

pub use module_e::{
    coefficients, generate_e, quartic_covariants, vertical_variation, Coefficient, Component, Covariants,
    CurvatureModuleE, HomologyError,
};

/// dim 𝔤₋ = dim 𝔭₊.
pub const RANK: usize = 5;

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn subsets_table() -> &'static Vec<Vec<Vec<usize>>> {
    static T: OnceLock<Vec<Vec<Vec<usize>>>> = OnceLock::new();
    T.get_or_init(|| {
        let mut all = vec![Vec::new(); RANK + 1];
        for mask in 0u32..(1 << RANK) {
            let s: Vec<usize> = (0..RANK).filter(|i| mask & (1 << i) != 0).collect();
            all[s.len()].push(s);
        }
        for v in all.iter_mut() {
            v.sort();
        }
        all
    })
}

/// Increasing k-subsets of {0..4} in lexicographic order.
pub fn subsets(k: usize) -> &'static [Vec<usize>] {
    &subsets_table()[k]
}

pub fn subset_position(s: &[usize]) -> usize {
    subsets(s.len()).iter().position(|t| t == s).expect("sorted subset")
}

/// Sorts in place and returns the permutation sign, or `None` on a repeat.
pub fn sort_with_sign(v: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return None;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(sign)
}

/// Which five labels index the wedge slots.
pub trait Slots: Clone + fmt::Debug + PartialEq {
    const LABELS: [BasisLabel; RANK];
    const SUFFIX: &'static str;
}

#[derive(Clone, Debug, PartialEq)]
pub struct CosetSlots;
impl Slots for CosetSlots {
    const LABELS: [BasisLabel; RANK] = COSET;
    const SUFFIX: &'static str = "*";
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlusSlots;
impl Slots for PlusSlots {
    const LABELS: [BasisLabel; RANK] = PPLUS;
    const SUFFIX: &'static str = "";
}

/// An element of Λᵏ V ⊗ 𝔤, stored on increasing index tuples; position
/// `s * 14 + g` holds the 𝔤-coordinate g of the value on subset s.
#[derive(Clone, Debug, PartialEq)]
pub struct Alt<R, S> {
    degree: usize,
    data: Vec<R>,
    slots: PhantomData<S>,
}

pub type Cochain<R> = Alt<R, CosetSlots>;
pub type Chain<R> = Alt<R, PlusSlots>;
pub type Cochain2<R> = Cochain<R>;
pub type Chain2<R> = Chain<R>;

pub fn space_dim(k: usize) -> usize {
    binom(RANK, k) * DIM
}

/// 𝔥-weight of the basis vector at flat position `pos` of degree k.
pub fn basis_weight(k: usize, pos: usize) -> (i64, i64) {
    let (s, g) = (pos / DIM, pos % DIM);
    let mut w = BasisLabel::from_index(g).root();
    for &a in &subsets(k)[s] {
        let r = PPLUS[a].root();
        w = (w.0 + r.0, w.1 + r.1);
    }
    w
}

impl<R: Ring, S: Slots> Alt<R, S> {
    pub fn zero(k: usize) -> Self {
        Alt { degree: k, data: vec![R::zero(); space_dim(k)], slots: PhantomData }
    }

    pub fn from_vec(k: usize, data: Vec<R>) -> Self {
        assert_eq!(data.len(), space_dim(k));
        Alt { degree: k, data, slots: PhantomData }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn data(&self) -> &[R] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<R> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        linalg::is_zero_vec(&self.data)
    }

    pub fn slot(l: BasisLabel) -> usize {
        S::LABELS.iter().position(|&x| x == l).unwrap_or_else(|| panic!("{} is not a slot label", l))
    }

    /// Value on the s-th increasing subset.
    pub fn value_at(&self, s: usize) -> G2Element<R> {
        G2Element::from_coords(self.data[s * DIM..(s + 1) * DIM].to_vec())
    }

    /// Value on slot indices in any order (alternating).
    pub fn eval(&self, idx: &[usize]) -> G2Element<R> {
        let mut v = idx.to_vec();
        match sort_with_sign(&mut v) {
            None => G2Element::zero(),
            Some(sign) => {
                let x = self.value_at(subset_position(&v));
                if sign > 0 {
                    x
                } else {
                    -x
                }
            }
        }
    }

    /// self += c · (slot idx wedge) ⊗ v.
    pub fn accumulate(&mut self, idx: &[usize], c: &R, v: &G2Element<R>) {
        let mut w = idx.to_vec();
        let Some(sign) = sort_with_sign(&mut w) else { return };
        let c = if sign > 0 { c.clone() } else { -c.clone() };
        let base = subset_position(&w) * DIM;
        linalg::axpy(&mut self.data[base..base + DIM], &c, v.coords());
    }

    /// l₁ ∧ … ∧ l_k ⊗ v.
    pub fn term(labels: &[BasisLabel], v: G2Element<R>) -> Self {
        let mut out = Self::zero(labels.len());
        let idx: Vec<usize> = labels.iter().map(|&l| Self::slot(l)).collect();
        out.accumulate(&idx, &R::one(), &v);
        out
    }

    /// Σ c·(a ∧ b) ⊗ target with integer data.
    pub fn from_int_terms(terms: &[(i64, BasisLabel, BasisLabel, &[(i64, BasisLabel)])]) -> Self {
        let mut out = Self::zero(2);
        for &(c, a, b, target) in terms {
            let v = G2Element::from_terms(target);
            out.accumulate(&[Self::slot(a), Self::slot(b)], &R::from_int(c), &v);
        }
        out
    }

    pub fn scale(&self, c: &R) -> Self {
        Alt { degree: self.degree, data: linalg::scale(c, &self.data), slots: PhantomData }
    }

    pub fn map<T: Ring, F: Fn(&R) -> T>(&self, f: F) -> Alt<T, S> {
        Alt { degree: self.degree, data: self.data.iter().map(f).collect(), slots: PhantomData }
    }

    /// Nonzero values with their slot labels.
    pub fn support(&self) -> Vec<(Vec<BasisLabel>, G2Element<R>)> {
        subsets(self.degree)
            .iter()
            .enumerate()
            .map(|(s, set)| (set.iter().map(|&i| S::LABELS[i]).collect(), self.value_at(s)))
            .filter(|(_, v): &(Vec<BasisLabel>, G2Element<R>)| !v.is_zero())
            .collect()
    }

    /// Weights occurring with nonzero coefficient.
    pub fn weights(&self) -> Vec<(i64, i64)> {
        let mut w: Vec<(i64, i64)> =
            (0..self.data.len()).filter(|&p| !self.data[p].is_zero()).map(|p| basis_weight(self.degree, p)).collect();
        w.sort();
        w.dedup();
        w
    }

    /// The component of weight w.
    pub fn weight_part(&self, w: (i64, i64)) -> Self {
        let data = self
            .data
            .iter()
            .enumerate()
            .map(|(p, c)| if basis_weight(self.degree, p) == w { c.clone() } else { R::zero() })
            .collect();
        Alt { degree: self.degree, data, slots: PhantomData }
    }

    /// Minimal homogeneity (Z1-degree) present; `None` for 0.
    pub fn min_homogeneity(&self) -> Option<i64> {
        self.weights().into_iter().map(|w| w.0).min()
    }
}

impl<R: Ring, S: Slots> Add for Alt<R, S> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        assert_eq!(self.degree, o.degree);
        let data = self.data.into_iter().zip(o.data).map(|(a, b)| a + b).collect();
        Alt { degree: self.degree, data, slots: PhantomData }
    }
}

impl<R: Ring, S: Slots> Sub for Alt<R, S> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<R: Ring, S: Slots> Neg for Alt<R, S> {
    type Output = Self;
    fn neg(self) -> Self {
        Alt { degree: self.degree, data: self.data.into_iter().map(|a| -a).collect(), slots: PhantomData }
    }
}

impl<R: Ring + fmt::Display, S: Slots> fmt::Display for Alt<R, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (labels, v) in self.support() {
            let wedge: Vec<String> = labels.iter().map(|l| format!("{}{}", l, S::SUFFIX)).collect();
            parts.push(format!("{}⊗({})", wedge.join("∧"), v));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Expansion of [S[a], S[b]] in slot indices; the slot span is a subalgebra.
fn slot_bracket<S: Slots>(a: usize, b: usize) -> Vec<(usize, i64)> {
    let x = g2::bracket_labels::<Rational>(S::LABELS[a], S::LABELS[b]);
    x.support()
        .map(|(l, c)| {
            let i = S::LABELS.iter().position(|&y| y == l).expect("closed under bracket");
            (i, c.to_integer().try_into().expect("small"))
        })
        .collect()
}

fn without(set: &[usize], drop: &[usize]) -> Vec<usize> {
    set.iter().enumerate().filter(|(p, _)| !drop.contains(p)).map(|(_, &x)| x).collect()
}

/// Chevalley–Eilenberg differential of 𝔤₋ with coefficients in 𝔤.
pub fn partial<R: Ring>(phi: &Cochain<R>) -> Cochain<R> {
    let k = phi.degree;
    assert!(k < RANK, "no cochains above degree 5");
    let mut out = Cochain::zero(k + 1);
    for (s, set) in subsets(k + 1).iter().enumerate() {
        let mut v = G2Element::zero();
        for i in 0..=k {
            let rest = without(set, &[i]);
            let x = G2Element::basis(COSET[set[i]]);
            let term = g2::bracket(&x, &phi.eval(&rest));
            v = if i % 2 == 0 { v + term } else { v - term };
        }
        for i in 0..=k {
            for j in i + 1..=k {
                let rest = without(set, &[i, j]);
                for (c, n) in slot_bracket::<CosetSlots>(set[i], set[j]) {
                    let mut args = vec![c];
                    args.extend(&rest);
                    let term = phi.eval(&args).scale(&R::from_int(n));
                    v = if (i + j) % 2 == 0 { v + term } else { v - term };
                }
            }
        }
        out.data[s * DIM..(s + 1) * DIM].clone_from_slice(v.coords());
    }
    out
}

/// Kostant's codifferential on Λᵏ𝔭₊ ⊗ 𝔤.
pub fn partial_star<R: Ring>(c: &Chain<R>) -> Chain<R> {
    let k = c.degree;
    let mut out = Chain::zero(k.saturating_sub(1));
    if k == 0 {
        return out;
    }
    let one = R::one();
    for (s, set) in subsets(k).iter().enumerate() {
        let v = c.value_at(s);
        if v.is_zero() {
            continue;
        }
        for i in 0..k {
            let rest = without(set, &[i]);
            let w = g2::bracket(&G2Element::basis(PPLUS[set[i]]), &v);
            let sign = if i % 2 == 0 { -one.clone() } else { one.clone() };
            out.accumulate(&rest, &sign, &w);
        }
        for i in 0..k {
            for j in i + 1..k {
                let rest = without(set, &[i, j]);
                for (e, n) in slot_bracket::<PlusSlots>(set[i], set[j]) {
                    let mut args = vec![e];
                    args.extend(&rest);
                    let sign = if (i + j) % 2 == 0 { n } else { -n };
                    out.accumulate(&args, &R::from_int(sign), &v);
                }
            }
        }
    }
    out
}

fn pairing_product(set: &[usize]) -> i64 {
    set.iter().map(|&a| PAIRING[a]).product()
}

/// Transport along 𝔭₊ ≅ (𝔤/𝔭)*, e ↦ B(e, ·).
pub fn to_cochain<R: Ring>(c: &Chain<R>) -> Cochain<R> {
    let mut out = Cochain::zero(c.degree);
    for (s, set) in subsets(c.degree).iter().enumerate() {
        let f = R::from_int(pairing_product(set));
        for g in 0..DIM {
            out.data[s * DIM + g] = f.clone() * c.data[s * DIM + g].clone();
        }
    }
    out
}

pub fn to_chain<R: Ring>(c: &Cochain<R>) -> Chain<R> {
    let mut out = Chain::zero(c.degree);
    for (s, set) in subsets(c.degree).iter().enumerate() {
        let f = R::frac(1, pairing_product(set));
        for g in 0..DIM {
            out.data[s * DIM + g] = f.clone() * c.data[s * DIM + g].clone();
        }
    }
    out
}

pub fn partial_star_cochain<R: Ring>(c: &Cochain<R>) -> Cochain<R> {
    to_cochain(&partial_star(&to_chain(c)))
}

/// □ = ∂∂* + ∂*∂.
pub fn laplacian<R: Ring>(c: &Cochain<R>) -> Cochain<R> {
    let k = c.degree;
    let mut out = Cochain::zero(k);
    if k > 0 {
        out = out + partial(&partial_star_cochain(c));
    }
    if k < RANK {
        out = out + partial_star_cochain(&partial(c));
    }
    out
}

/// 𝔤-action on chains: ad on every 𝔭₊ slot (projected to 𝔭₊) and on the value.
pub fn act_chain<R: Ring>(x: &G2Element<R>, c: &Chain<R>) -> Chain<R> {
    let k = c.degree;
    let mut out = Chain::zero(k);
    let one = R::one();
    for (s, set) in subsets(k).iter().enumerate() {
        let v = c.value_at(s);
        if v.is_zero() {
            continue;
        }
        out.accumulate(set, &one, &g2::bracket(x, &v));
        for p in 0..k {
            let y = parabolic::proj_plus(&g2::bracket(x, &G2Element::basis(PPLUS[set[p]])));
            for (l, coef) in y.support() {
                let mut args = set.clone();
                args[p] = parabolic::pplus_index(l).expect("positive label");
                out.accumulate(&args, coef, &v);
            }
        }
    }
    out
}

/// 𝔭-action on cochains:
/// (x·φ)(y₁,…) = [x, φ(y₁,…)] − Σ φ(…, proj₋[x, y_p], …).
pub fn act_cochain<R: Ring>(x: &G2Element<R>, phi: &Cochain<R>) -> Cochain<R> {
    let k = phi.degree;
    let mut out = Cochain::zero(k);
    let one = R::one();
    for (s, set) in subsets(k).iter().enumerate() {
        let mut v = g2::bracket(x, &phi.value_at(s));
        for p in 0..k {
            let y = parabolic::proj_minus(&g2::bracket(x, &G2Element::basis(COSET[set[p]])));
            for (l, coef) in y.support() {
                let mut args = set.clone();
                args[p] = parabolic::coset_index(l).expect("negative label");
                v = v - phi.eval(&args).scale(coef);
            }
        }
        out.accumulate(set, &one, &v);
    }
    out
}

/// Rows of the matrix of a linear map between cochain spaces over ℚ.
pub fn matrix_of<F>(k_in: usize, f: F) -> Matrix<Rational>
where
    F: Fn(&Cochain<Rational>) -> Cochain<Rational>,
{
    let cols: Vec<Vec<Rational>> = (0..space_dim(k_in))
        .map(|p| {
            let mut e = Cochain::zero(k_in);
            e.data[p] = Rational::from_integer(1.into());
            f(&e).into_vec()
        })
        .collect();
    linalg::transpose(&cols)
}

fn column_space(m: &Matrix<Rational>) -> Vec<Vec<Rational>> {
    let cols = linalg::transpose(m);
    let n = m.len();
    Echelon::from_vectors(n, &cols).expect("field").rows().to_vec()
}

/// C^k = im ∂ ⊕ ker □ ⊕ im ∂*.
#[derive(Clone, Debug)]
pub struct HodgeDecomposition {
    pub degree: usize,
    pub total: usize,
    pub image_partial: Vec<Vec<Rational>>,
    pub harmonic: Vec<Vec<Rational>>,
    pub image_partial_star: Vec<Vec<Rational>>,
    /// ker ∂ ∩ ker ∂*
    pub joint_kernel: Vec<Vec<Rational>>,
}

impl HodgeDecomposition {
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.image_partial.len(), self.harmonic.len(), self.image_partial_star.len())
    }

    pub fn pairwise_trivial(&self) -> bool {
        linalg::intersection_dim(&self.image_partial, &self.harmonic) == 0
            && linalg::intersection_dim(&self.image_partial, &self.image_partial_star) == 0
            && linalg::intersection_dim(&self.harmonic, &self.image_partial_star) == 0
    }

    pub fn spans_everything(&self) -> bool {
        let all: Vec<Vec<Rational>> =
            self.image_partial.iter().chain(&self.harmonic).chain(&self.image_partial_star).cloned().collect();
        linalg::rank(&all) == self.total
    }

    /// ker □ = ker ∂ ∩ ker ∂*, by dimension and inclusion both ways.
    pub fn harmonic_is_joint_kernel(&self) -> bool {
        let n = self.harmonic.len();
        n == self.joint_kernel.len() && linalg::intersection_dim(&self.harmonic, &self.joint_kernel) == n
    }
}

pub fn hodge_decompose(k: usize) -> HodgeDecomposition {
    let n = space_dim(k);
    let image_partial = if k > 0 { column_space(&matrix_of(k - 1, partial)) } else { Vec::new() };
    let image_partial_star = if k < RANK { column_space(&matrix_of(k + 1, partial_star_cochain)) } else { Vec::new() };
    let harmonic = linalg::nullspace(&matrix_of(k, laplacian), n);
    let mut stacked = Vec::new();
    if k < RANK {
        stacked.extend(matrix_of(k, partial));
    }
    if k > 0 {
        stacked.extend(matrix_of(k, partial_star_cochain));
    }
    let joint_kernel = linalg::nullspace(&stacked, n);
    HodgeDecomposition { degree: k, total: n, image_partial, harmonic, image_partial_star, joint_kernel }
}

/// The degree-2 decomposition, computed once.
pub fn hodge2() -> &'static HodgeDecomposition {
    static H: OnceLock<HodgeDecomposition> = OnceLock::new();
    H.get_or_init(|| hodge_decompose(2))
}

/// e10 ∧ e31 ⊗ f01, the lowest weight vector of H₂.
pub fn phi0() -> Chain<Rational> {
    Chain::term(&[E10, E31], G2Element::basis(F01))
}

/// f10* ∧ f31* ⊗ f01; equals φ₀ / 192 under the Killing identification.
pub fn lowest_weight_cochain<R: Ring>() -> Cochain<R> {
    Cochain::term(&[F10, F31], G2Element::basis(F01))
}

/// e01ᵏ · (f10*∧f31*⊗f01), k = 0..4, spanning the harmonic 2-cochains.
pub fn harmonic_ladder() -> Vec<Cochain<Rational>> {
    let e01 = G2Element::basis(E01);
    let mut out = vec![lowest_weight_cochain()];
    for _ in 0..4 {
        let next = act_cochain(&e01, out.last().expect("nonempty"));
        out.push(next);
    }
    out
}

/// 5 × 140 matrix sending a 2-cochain to the coefficients of its harmonic
/// part on y⁴, xy³, x²y², x³y, x⁴ with f10*∧f31*⊗f01 ↔ y⁴.
pub fn harmonic_readout() -> &'static Matrix<Rational> {
    static Q: OnceLock<Matrix<Rational>> = OnceLock::new();
    Q.get_or_init(|| {
        let n = space_dim(2);
        let ladder = harmonic_ladder();
        let mut basis: Vec<Vec<Rational>> = ladder.iter().map(|c| c.data().to_vec()).collect();
        basis.extend(column_space(&matrix_of(2, laplacian)));
        let e = Echelon::from_vectors(n, &basis).expect("field");
        assert_eq!(e.dim(), n, "ker □ and im □ must be complementary");
        let inv = e.left_inverse();
        // e01ᵏ y⁴ = 4!/(4−k)! xᵏy⁴⁻ᵏ
        let factor = [1, 4, 12, 24, 24];
        (0..5).map(|k| linalg::scale(&Rational::from_integer(factor[k].into()), &inv[k])).collect()
    })
}

/// Monomial coefficients (y⁴, xy³, x²y², x³y, x⁴) of the harmonic part.
pub fn harmonic_quartic<R: Ring>(kappa: &Cochain<R>) -> [R; 5] {
    assert_eq!(kappa.degree(), 2);
    let q = harmonic_readout();
    let mut out: [R; 5] = std::array::from_fn(|_| R::zero());
    for (k, row) in q.iter().enumerate() {
        let mut acc = R::zero();
        for (a, b) in row.iter().zip(kappa.data()) {
            if !a.is_zero() && !b.is_zero() {
                acc = acc + R::from_rational(a.clone()) * b.clone();
            }
        }
        out[k] = acc;
    }
    out
}

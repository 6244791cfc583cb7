//! Binary quartics as a 𝔤₀-module and the extrinsic Tanaka prolongation 𝔞^φ.
//!
//! 𝔤₁ has basis (x, y) = (−e11, e10); 𝔤₀ acts on S⁴𝔤₁ through
//! Z1 ↦ x∂x + y∂y, Z2 ↦ x∂x, e01 ↦ x∂y, f01 ↦ y∂x.

use std::fmt;

use thiserror::Error;

use crate::field::{Field, Ring};
use crate::g2::{self, BasisLabel, BasisLabel::*, G2Element};
use crate::linalg;
use crate::parabolic;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProlongationError {
    #[error("element is not in g0")]
    NotInG0,
    #[error("the prolongation of the zero quartic is all of g")]
    ZeroQuartic,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum RootType {
    O,
    N,
    III,
    D,
    II,
    I,
}

impl RootType {
    pub fn name(self) -> &'static str {
        match self {
            RootType::O => "O",
            RootType::N => "N",
            RootType::III => "III",
            RootType::D => "D",
            RootType::II => "II",
            RootType::I => "I",
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Coefficients on y⁴, xy³, x²y², x³y, x⁴.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryQuartic<R> {
    pub coeffs: [R; 5],
    pub tag: Option<RootType>,
}

pub const MONOMIALS: [&str; 5] = ["y^4", "x*y^3", "x^2*y^2", "x^3*y", "x^4"];

impl<R: Ring> BinaryQuartic<R> {
    pub fn new(coeffs: [R; 5]) -> Self {
        BinaryQuartic { coeffs, tag: None }
    }

    pub fn from_ints(c: [i64; 5]) -> Self {
        BinaryQuartic::new(c.map(R::from_int))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The representative of a root type; `k` is the cross-ratio parameter
    /// for type I and is ignored otherwise.
    pub fn normal_form(t: RootType, k: R) -> Self {
        let coeffs = match t {
            RootType::O => [0, 0, 0, 0, 0].map(R::from_int),
            RootType::N => [1, 0, 0, 0, 0].map(R::from_int),
            RootType::III => [0, 1, 0, 0, 0].map(R::from_int),
            RootType::D => [0, 0, 1, 0, 0].map(R::from_int),
            // x²y(x − y)
            RootType::II => [0, 0, -1, 1, 0].map(R::from_int),
            // xy(x − y)(x − ky)
            RootType::I => [R::zero(), k.clone(), -(k + R::one()), R::one(), R::zero()],
        };
        BinaryQuartic { coeffs, tag: Some(t) }
    }

    pub fn add(&self, o: &Self) -> Self {
        BinaryQuartic::new(std::array::from_fn(|i| self.coeffs[i].clone() + o.coeffs[i].clone()))
    }

    pub fn scale(&self, c: &R) -> Self {
        BinaryQuartic::new(std::array::from_fn(|i| c.clone() * self.coeffs[i].clone()))
    }
}

impl<R: Ring + fmt::Display> fmt::Display for BinaryQuartic<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .zip(MONOMIALS)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, m)| format!("({})*{}", c, m))
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

pub const G0: [BasisLabel; 4] = [Z1, Z2, E01, F01];

fn basis_action<R: Ring>(l: BasisLabel, q: &[R; 5]) -> [R; 5] {
    let mut out: [R; 5] = std::array::from_fn(|_| R::zero());
    for (k, c) in q.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let kk = k as i64;
        // monomial xᵏ y⁴⁻ᵏ
        match l {
            Z1 => out[k] = out[k].clone() + R::from_int(4) * c.clone(),
            Z2 => out[k] = out[k].clone() + R::from_int(kk) * c.clone(),
            E01 if k < 4 => out[k + 1] = out[k + 1].clone() + R::from_int(4 - kk) * c.clone(),
            F01 if k > 0 => out[k - 1] = out[k - 1].clone() + R::from_int(kk) * c.clone(),
            _ => {}
        }
    }
    out
}

/// x · φ for x ∈ 𝔤₀.
pub fn g0_action<R: Ring>(x: &G2Element<R>, phi: &BinaryQuartic<R>) -> Result<BinaryQuartic<R>, ProlongationError> {
    if x.support().any(|(l, _)| l.degree() != 0) {
        return Err(ProlongationError::NotInG0);
    }
    let mut out: [R; 5] = std::array::from_fn(|_| R::zero());
    for l in G0 {
        let c = x.coeff(l);
        if c.is_zero() {
            continue;
        }
        let part = basis_action(l, &phi.coeffs);
        for i in 0..5 {
            out[i] = out[i].clone() + c.clone() * part[i].clone();
        }
    }
    Ok(BinaryQuartic::new(out))
}

/// ann(φ) ⊆ 𝔤₀.
pub fn annihilator<F: Field>(phi: &BinaryQuartic<F>) -> Vec<G2Element<F>> {
    // column j = action of G0[j]
    let cols: Vec<[F; 5]> = G0.iter().map(|&l| basis_action(l, &phi.coeffs)).collect();
    let rows: Vec<Vec<F>> = (0..5).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    linalg::nullspace(&rows, 4)
        .into_iter()
        .map(|v| {
            let mut x = G2Element::zero();
            for (l, c) in G0.iter().zip(v) {
                x.set(*l, c);
            }
            x
        })
        .collect()
}

/// 𝔞^φ = 𝔤₋ ⊕ ann(φ) ⊕ 𝔞₁ ⊕ 𝔞₂ ⊕ 𝔞₃.
#[derive(Clone, Debug)]
pub struct Prolongation<F> {
    /// (degree, basis) for degrees −3..3
    pub graded: Vec<(i64, Vec<G2Element<F>>)>,
}

impl<F: Field> Prolongation<F> {
    pub fn dim(&self) -> usize {
        self.graded.iter().map(|(_, b)| b.len()).sum()
    }

    pub fn part(&self, k: i64) -> &[G2Element<F>] {
        &self.graded.iter().find(|(d, _)| *d == k).expect("degree in range").1
    }

    pub fn positive_dim(&self) -> usize {
        self.graded.iter().filter(|(d, _)| *d > 0).map(|(_, b)| b.len()).sum()
    }

    pub fn is_rigid(&self) -> bool {
        self.positive_dim() == 0
    }
}

fn coords_on<F: Field>(x: &G2Element<F>, labels: &[BasisLabel]) -> Vec<F> {
    labels.iter().map(|&l| x.coeff(l).clone()).collect()
}

pub fn tanaka_prolong<F: Field>(phi: &BinaryQuartic<F>) -> Result<Prolongation<F>, ProlongationError> {
    if phi.is_zero() {
        return Err(ProlongationError::ZeroQuartic);
    }
    let mut graded: Vec<(i64, Vec<G2Element<F>>)> =
        (-3..0).map(|k| (k, parabolic::component(k).into_iter().map(G2Element::basis).collect())).collect();
    graded.push((0, annihilator(phi)));
    let g_minus_one: Vec<G2Element<F>> = parabolic::component(-1).into_iter().map(G2Element::basis).collect();
    for k in 1..=3 {
        let prev_labels = parabolic::component(k - 1);
        let prev = &graded.last().expect("nonempty").1;
        let prev_rows: Vec<Vec<F>> = prev.iter().map(|x| coords_on(x, &prev_labels)).collect();
        // functionals on 𝔤_{k−1} vanishing on 𝔞_{k−1}
        let functionals = linalg::nullspace(&prev_rows, prev_labels.len());
        let labels = parabolic::component(k);
        let mut conditions = Vec::new();
        for lam in &functionals {
            for y in &g_minus_one {
                let row: Vec<F> = labels
                    .iter()
                    .map(|&b| {
                        let z = coords_on(&g2::bracket(&G2Element::basis(b), y), &prev_labels);
                        z.iter().zip(lam).fold(F::zero(), |acc, (p, q)| acc + p.clone() * q.clone())
                    })
                    .collect();
                conditions.push(row);
            }
        }
        let sol = if conditions.is_empty() {
            linalg::identity(labels.len())
        } else {
            linalg::nullspace(&conditions, labels.len())
        };
        let part = sol
            .into_iter()
            .map(|v| {
                let mut x = G2Element::zero();
                for (l, c) in labels.iter().zip(v) {
                    x.set(*l, c);
                }
                x
            })
            .collect();
        graded.push((k, part));
    }
    Ok(Prolongation { graded })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, Rational};

    #[test]
    fn action_examples() {
        let y4: BinaryQuartic<Rational> = BinaryQuartic::from_ints([1, 0, 0, 0, 0]);
        let f01 = G2Element::basis(F01);
        assert!(g0_action(&f01, &y4).unwrap().is_zero());
        let e01 = G2Element::basis(E01);
        assert_eq!(g0_action(&e01, &y4).unwrap().coeffs, [0, 4, 0, 0, 0].map(|c| rat(c, 1)));
        let x2y2: BinaryQuartic<Rational> = BinaryQuartic::from_ints([0, 0, 1, 0, 0]);
        let z = G2Element::basis(Z1);
        assert_eq!(g0_action(&z, &x2y2).unwrap(), x2y2.scale(&rat(4, 1)));
        assert_eq!(g0_action(&G2Element::basis(E10), &x2y2), Err(ProlongationError::NotInG0));
    }

    #[test]
    fn h01_acts_as_x_dx_minus_y_dy() {
        let q: BinaryQuartic<Rational> = BinaryQuartic::from_ints([1, 2, 3, 4, 5]);
        let got = g0_action(&g2::h01(), &q).unwrap();
        let want: [Rational; 5] = std::array::from_fn(|k| rat((2 * k as i64 - 4) * (k as i64 + 1), 1));
        assert_eq!(got.coeffs, want);
    }
}

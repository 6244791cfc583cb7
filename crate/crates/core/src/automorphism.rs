//! Linear maps of 𝔤 given by basis images, and the graded automorphisms A_λ, Ã.

use crate::field::{Field, Ring};
use crate::g2::{self, BasisLabel, BasisLabel::*, G2Element};
use crate::homology::Cochain;
use crate::linalg;
use crate::parabolic::COSET;

#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap<R> {
    /// image of each basis label, in `BasisLabel::ALL` order
    pub images: Vec<G2Element<R>>,
}

impl<R: Ring> LinearMap<R> {
    pub fn identity() -> Self {
        LinearMap { images: BasisLabel::ALL.iter().map(|&l| G2Element::basis(l)).collect() }
    }

    pub fn from_fn<F: Fn(BasisLabel) -> G2Element<R>>(f: F) -> Self {
        LinearMap { images: BasisLabel::ALL.iter().map(|&l| f(l)).collect() }
    }

    pub fn apply(&self, x: &G2Element<R>) -> G2Element<R> {
        let mut out = vec![R::zero(); g2::DIM];
        for (l, c) in x.support() {
            linalg::axpy(&mut out, c, self.images[l.index()].coords());
        }
        G2Element::from_coords(out)
    }

    pub fn compose(&self, other: &LinearMap<R>) -> LinearMap<R> {
        LinearMap { images: other.images.iter().map(|x| self.apply(x)).collect() }
    }

    /// Column j holds the coordinates of the j-th image.
    pub fn matrix(&self) -> linalg::Matrix<R> {
        let cols: Vec<Vec<R>> = self.images.iter().map(|x| x.coords().to_vec()).collect();
        linalg::transpose(&cols)
    }

    /// First basis pair (a, b) with φ[a,b] ≠ [φa, φb].
    pub fn bracket_defect(&self) -> Option<(BasisLabel, BasisLabel)> {
        for a in BasisLabel::ALL {
            for b in BasisLabel::ALL {
                if a.index() >= b.index() {
                    continue;
                }
                let lhs = self.apply(&g2::bracket_labels(a, b));
                let rhs = g2::bracket(&self.images[a.index()], &self.images[b.index()]);
                if lhs != rhs {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_automorphism(&self) -> bool {
        self.bracket_defect().is_none()
    }

    /// Whether φ(𝔤^i) ⊆ 𝔤^i for all i.
    pub fn preserves_filtration(&self) -> bool {
        BasisLabel::ALL.iter().all(|&l| crate::parabolic::in_filtrand(&self.images[l.index()], l.degree()))
    }
}

impl<F: Field> LinearMap<F> {
    pub fn inverse(&self) -> Option<LinearMap<F>> {
        let inv = linalg::inverse(&self.matrix()).ok()?;
        let cols = linalg::transpose(&inv);
        Some(LinearMap { images: cols.into_iter().map(G2Element::from_coords).collect() })
    }

    /// (φ·κ)(x, y) = φ κ(φ⁻¹x, φ⁻¹y), for φ preserving 𝔭.
    pub fn push_cochain(&self, kappa: &Cochain<F>) -> Option<Cochain<F>> {
        let inv = self.inverse()?;
        let mut out = Cochain::zero(2);
        for i in 0..COSET.len() {
            for j in i + 1..COSET.len() {
                let x = inv.apply(&G2Element::basis(COSET[i]));
                let y = inv.apply(&G2Element::basis(COSET[j]));
                let v = self.apply(&crate::models::kappa_eval(kappa, &x, &y));
                out.accumulate(&[i, j], &F::one(), &v);
            }
        }
        Some(out)
    }
}

/// Torus element: f10, f21, f32 ↦ λ·, f31 ↦ λ²·, f01 ↦ λ⁻¹·, inverse on the e's.
pub fn a_lambda<F: Field>(lambda: &F) -> LinearMap<F> {
    let li = lambda.inv();
    LinearMap::from_fn(|l| {
        let s = match l {
            F32 | F21 | F10 | E01 => lambda.clone(),
            F31 => lambda.clone() * lambda.clone(),
            F11 | E11 | Z1 | Z2 => F::one(),
            F01 | E10 | E21 | E32 => li.clone(),
            E31 => li.clone() * li.clone(),
        };
        G2Element::basis(l).scale(&s)
    })
}

/// The outer-looking involution exchanging the two simple root directions in 𝔤₋₁.
pub fn a_tilde<R: Ring>() -> LinearMap<R> {
    LinearMap::from_fn(|l| match l {
        F32 => G2Element::basis(F31),
        F31 => G2Element::basis(F32),
        F21 => -G2Element::basis(F21),
        F11 => G2Element::basis(F10),
        F10 => G2Element::basis(F11),
        F01 => G2Element::basis(E01),
        E01 => G2Element::basis(F01),
        Z1 => G2Element::basis(Z1),
        Z2 => G2Element::from_terms(&[(1, Z1), (-1, Z2)]),
        E10 => G2Element::basis(E11),
        E11 => G2Element::basis(E10),
        E21 => -G2Element::basis(E21),
        E31 => G2Element::basis(E32),
        E32 => G2Element::basis(E31),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, Rational};

    #[test]
    fn table_maps_are_automorphisms() {
        for l in [rat(2, 1), rat(-3, 5)] {
            let a = a_lambda(&l);
            assert!(a.is_automorphism());
            assert!(a.preserves_filtration());
            assert_eq!(a.compose(&a_lambda(&l.inv())), LinearMap::identity());
        }
        let t: LinearMap<Rational> = a_tilde();
        assert_eq!(t.bracket_defect(), None);
        assert_eq!(t.compose(&t), LinearMap::identity());
    }
}

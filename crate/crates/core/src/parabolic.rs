//! The parabolic 𝔭 = 𝔤⁰ cut out by the grading element Z = Z1.

use thiserror::Error;

use crate::field::{Rational, Ring};
use crate::g2::{self, BasisLabel, BasisLabel::*, G2Element};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParabolicError {
    #[error("element is not in the filtrand g^{0}")]
    NotInFiltrand(i64),
    #[error("ad_n is not nilpotent on the given element within 14 steps")]
    NotNilpotent,
}

/// Labels of 𝔤_k.
pub fn component(k: i64) -> Vec<BasisLabel> {
    BasisLabel::ALL.into_iter().filter(|l| l.degree() == k).collect()
}

/// Labels of 𝔤^i = ⊕_{j≥i} 𝔤_j.
pub fn filtrand(i: i64) -> Vec<BasisLabel> {
    BasisLabel::ALL.into_iter().filter(|l| l.degree() >= i).collect()
}

/// Dimensions of 𝔤_{-3}, …, 𝔤_3.
pub fn graded_dims() -> [usize; 7] {
    let mut d = [0; 7];
    for k in -3..=3 {
        d[(k + 3) as usize] = component(k).len();
    }
    d
}

/// Lowest degree present in x; `None` for x = 0.
pub fn min_degree<R: Ring>(x: &G2Element<R>) -> Option<i64> {
    x.support().map(|(l, _)| l.degree()).min()
}

pub fn in_filtrand<R: Ring>(x: &G2Element<R>, i: i64) -> bool {
    min_degree(x).is_none_or(|d| d >= i)
}

/// gr_k: 𝔤^k → 𝔤_k.
pub fn leading_part<R: Ring>(x: &G2Element<R>, k: i64) -> Result<G2Element<R>, ParabolicError> {
    if !in_filtrand(x, k) {
        return Err(ParabolicError::NotInFiltrand(k));
    }
    Ok(x.restrict(|l| l.degree() == k))
}

pub fn graded_part<R: Ring>(x: &G2Element<R>, k: i64) -> G2Element<R> {
    x.restrict(|l| l.degree() == k)
}

/// Projection onto 𝔤₋ along 𝔭.
pub fn proj_minus<R: Ring>(x: &G2Element<R>) -> G2Element<R> {
    x.restrict(|l| l.degree() < 0)
}

/// Projection onto 𝔭₊ along 𝔤₋ ⊕ 𝔤₀.
pub fn proj_plus<R: Ring>(x: &G2Element<R>) -> G2Element<R> {
    x.restrict(|l| l.degree() > 0)
}

pub fn is_in_p<R: Ring>(x: &G2Element<R>) -> bool {
    in_filtrand(x, 0)
}

/// Σ_k ad_n^k(x)/k!.
pub fn exp_ad<R: Ring>(n: &G2Element<R>, x: &G2Element<R>) -> Result<G2Element<R>, ParabolicError> {
    let mut total = x.clone();
    let mut term = x.clone();
    for k in 1..=g2::DIM as i64 + 1 {
        term = g2::bracket(n, &term).scale(&R::frac(1, k));
        if term.is_zero() {
            return Ok(total);
        }
        total = total + term.clone();
    }
    Err(ParabolicError::NotNilpotent)
}

/// Representatives of 𝔤/𝔭, in the fixed order used by all cochains.
pub const COSET: [BasisLabel; 5] = [F10, F11, F21, F31, F32];
/// 𝔭₊ basis, in the matching order.
pub const PPLUS: [BasisLabel; 5] = [E10, E11, E21, E31, E32];
/// B(e, f) for the matched pairs; 𝔭₊ ≅ (𝔤/𝔭)* via e ↦ c·f*.
pub const PAIRING: [i64; 5] = [24, 24, 24, 8, 8];

pub fn coset_index(l: BasisLabel) -> Option<usize> {
    COSET.iter().position(|&c| c == l)
}

pub fn pplus_index(l: BasisLabel) -> Option<usize> {
    PPLUS.iter().position(|&c| c == l)
}

/// 𝔥-weight of a basis label as an integer pair (coefficients of α₁, α₂).
pub fn weight(l: BasisLabel) -> (i64, i64) {
    l.root()
}

/// Whether w = r·λ for some integer r (λ ≠ 0).
pub fn is_multiple(w: (i64, i64), lambda: (i64, i64)) -> bool {
    if w.0 * lambda.1 != w.1 * lambda.0 {
        return false;
    }
    let (num, den) = if lambda.0 != 0 { (w.0, lambda.0) } else { (w.1, lambda.1) };
    num % den == 0
}

/// Indices of weight vectors whose weight lies in ℤλ.
pub fn weight_restricted(weights: &[(i64, i64)], lambda: (i64, i64)) -> Vec<usize> {
    weights.iter().enumerate().filter(|(_, &w)| is_multiple(w, lambda)).map(|(i, _)| i).collect()
}

/// The space of maps 𝔰 → 𝔰^⊥ of positive homogeneity, as used for the
/// deformation 𝔡 in the normalization arguments.
#[derive(Clone, Debug)]
pub struct HomSetup {
    pub name: &'static str,
    /// graded basis of 𝔰 with its weight and degree
    pub source: Vec<(String, G2Element<Rational>, (i64, i64), i64)>,
    pub target: Vec<BasisLabel>,
    /// pairs already fixed by an earlier normalization
    pub excluded: Vec<(String, BasisLabel)>,
}

/// One basis map u* ⊗ v.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomBasisElement {
    pub source: String,
    pub target: BasisLabel,
    pub weight: (i64, i64),
}

impl std::fmt::Display for HomBasisElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}*⊗{}", self.source, self.target)
    }
}

impl HomSetup {
    fn with_negative_part(
        name: &'static str,
        zero: Vec<(String, G2Element<Rational>, (i64, i64))>,
        target: Vec<BasisLabel>,
    ) -> HomSetup {
        let mut source: Vec<_> = zero.into_iter().map(|(n, x, w)| (n, x, w, 0)).collect();
        for l in COSET {
            source.push((l.name().to_string(), G2Element::basis(l), weight(l), l.degree()));
        }
        HomSetup { name, source, target, excluded: Vec::new() }
    }

    /// 𝔰 = ⟨Z1 − 4Z2⟩ ⊕ 𝔤₋, 𝔰^⊥ = ⟨Z1, e01, f01⟩ ⊕ 𝔭₊.
    pub fn type_iii() -> HomSetup {
        let t = G2Element::from_terms(&[(1, Z1), (-4, Z2)]);
        let mut target = vec![Z1, E01, F01];
        target.extend(PPLUS);
        HomSetup::with_negative_part("III", vec![("T".into(), t, (0, 0))], target)
    }

    /// 𝔰 = ⟨Z2, f01⟩ ⊕ 𝔤₋, 𝔰^⊥ = ⟨Z1, e01⟩ ⊕ 𝔭₊. The f10 ↦ Z1 component
    /// was already normalized away by the 𝔭₊-action, X1 ≡ f10 mod 𝔭₊.
    pub fn type_n() -> HomSetup {
        let zero =
            vec![("Z2".into(), G2Element::basis(Z2), (0, 0)), ("f01".into(), G2Element::basis(F01), weight(F01))];
        let mut target = vec![Z1, E01];
        target.extend(PPLUS);
        let mut s = HomSetup::with_negative_part("N", zero, target);
        s.excluded.push(("f10".into(), Z1));
        s
    }

    /// 𝔰 = ⟨h01⟩ ⊕ 𝔤₋, 𝔰^⊥ = ⟨Z1, e01, f01⟩ ⊕ 𝔭₊.
    pub fn type_d() -> HomSetup {
        let mut target = vec![Z1, E01, F01];
        target.extend(PPLUS);
        HomSetup::with_negative_part("D", vec![("T".into(), g2::h01(), (0, 0))], target)
    }

    /// All positive-homogeneity basis maps, with weights.
    pub fn basis(&self) -> Vec<HomBasisElement> {
        let mut out = Vec::new();
        for (name, _, w, deg) in &self.source {
            for &t in &self.target {
                if t.degree() <= *deg {
                    continue;
                }
                if self.excluded.iter().any(|(n, l)| n == name && *l == t) {
                    continue;
                }
                let tw = weight(t);
                out.push(HomBasisElement { source: name.clone(), target: t, weight: (tw.0 - w.0, tw.1 - w.1) });
            }
        }
        out
    }

    /// (𝔰* ⊗ 𝔰^⊥)_[λ] restricted to positive homogeneity.
    pub fn weight_restricted_subspace(&self, lambda: (i64, i64)) -> Vec<HomBasisElement> {
        self.basis().into_iter().filter(|e| is_multiple(e.weight, lambda)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    #[test]
    fn grading_shape() {
        assert_eq!(graded_dims(), [2, 1, 2, 4, 2, 1, 2]);
        assert_eq!(filtrand(-3).len(), 14);
        assert_eq!(filtrand(0).len(), 9);
        for l in BasisLabel::ALL {
            if l == Z1 || l == Z2 {
                continue;
            }
            let b = g2::bracket_labels::<Rational>(Z1, l);
            assert_eq!(b, G2Element::basis(l).scale(&rat(l.degree(), 1)));
        }
    }

    #[test]
    fn leading_parts() {
        let x: G2Element<Rational> = G2Element::from_terms(&[(1, F10), (5, E10)]);
        assert_eq!(leading_part(&x, -1).unwrap(), G2Element::basis(F10));
        let y: G2Element<Rational> = G2Element::from_terms(&[(1, F31), (-2, Z1), (1, Z2), (-1, E11), (-4, E31)]);
        assert_eq!(leading_part(&y, -3).unwrap(), G2Element::basis(F31));
        assert_eq!(leading_part(&y, -2), Err(ParabolicError::NotInFiltrand(-2)));
        let z: G2Element<Rational> = G2Element::basis(Z2);
        assert_eq!(leading_part(&z, 0).unwrap(), z);
    }

    #[test]
    fn exp_ad_examples() {
        let x: G2Element<Rational> = G2Element::from_terms(&[(1, Z1), (-4, Z2)]);
        assert_eq!(exp_ad(&G2Element::zero(), &x).unwrap(), x);
        let n = G2Element::basis(E21);
        let expected = G2Element::from_terms(&[(1, Z1), (-4, Z2), (2, E21)]);
        assert_eq!(exp_ad(&n, &x).unwrap(), expected);
        let h: G2Element<Rational> = G2Element::basis(Z1);
        assert_eq!(exp_ad(&h, &G2Element::basis(E10)), Err(ParabolicError::NotNilpotent));
    }

    #[test]
    fn hom_presets() {
        let names = |v: Vec<HomBasisElement>| v.iter().map(|e| e.to_string()).collect::<Vec<_>>();
        let iii = HomSetup::type_iii().weight_restricted_subspace((4, 1));
        assert_eq!(names(iii), ["f10*⊗e31", "f31*⊗e10"]);
        let n = HomSetup::type_n().weight_restricted_subspace((1, 0));
        assert_eq!(names(n), ["Z2*⊗e10", "f10*⊗e10"]);
        assert!(HomSetup::type_d().basis().iter().all(|e| e.target.degree() > 0 || e.source != "T"));
    }

    #[test]
    fn multiples() {
        assert!(is_multiple((8, 4), (2, 1)));
        assert!(is_multiple((0, 0), (2, 1)));
        assert!(!is_multiple((3, 1), (2, 1)));
        assert!(is_multiple((-4, -2), (2, 1)));
        assert!(!is_multiple((1, 0), (2, 0)));
    }
}

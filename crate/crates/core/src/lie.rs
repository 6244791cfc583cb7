//! Finite-dimensional Lie algebras given by structure constants on a named basis.

use std::fmt;

use crate::field::{Field, Ring};
use crate::g2::{self, G2Element};
use crate::linalg::{self, Echelon, Matrix};

/// [b_i, b_j] = Σ_k consts[i][j][k] b_k.
#[derive(Clone, Debug, PartialEq)]
pub struct LieTable<R> {
    pub names: Vec<String>,
    pub consts: Vec<Vec<Vec<R>>>,
}

/// Failure to express a bracket in the span of the basis.
#[derive(Clone, Debug, PartialEq)]
pub struct NotClosed<R> {
    pub pair: (usize, usize),
    pub bracket: G2Element<R>,
}

/// Linear combination Σ c·name, used to enter printed bracket tables.
pub type Combo<R> = Vec<(R, usize)>;

impl<R: Ring> LieTable<R> {
    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Antisymmetric table from the listed upper entries; missing pairs bracket to 0.
    pub fn from_entries(names: &[&str], entries: Vec<(usize, usize, Combo<R>)>) -> Self {
        let n = names.len();
        let mut consts = vec![vec![vec![R::zero(); n]; n]; n];
        for (i, j, combo) in entries {
            for (c, k) in combo {
                consts[i][j][k] = consts[i][j][k].clone() + c.clone();
                consts[j][i][k] = consts[j][i][k].clone() - c;
            }
        }
        LieTable { names: names.iter().map(|s| s.to_string()).collect(), consts }
    }

    /// Structure constants of span(basis) under `br`; fails with the first
    /// pair whose bracket leaves the span. Requires unit pivots.
    pub fn from_basis<F>(names: &[String], basis: &[G2Element<R>], br: F) -> Result<Self, NotClosed<R>>
    where
        F: Fn(&G2Element<R>, &G2Element<R>) -> G2Element<R>,
    {
        let rows: Vec<Vec<R>> = basis.iter().map(|b| b.coords().to_vec()).collect();
        let ech = Echelon::from_vectors(g2::DIM, &rows).expect("basis with unit pivots");
        assert_eq!(ech.dim(), basis.len(), "basis must be independent");
        let n = basis.len();
        let mut consts = vec![vec![vec![R::zero(); n]; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let z = br(&basis[i], &basis[j]);
                let c = ech.coordinates(z.coords()).ok_or(NotClosed { pair: (i, j), bracket: z.clone() })?;
                consts[j][i] = c.iter().map(|x| -x.clone()).collect();
                consts[i][j] = c;
            }
        }
        Ok(LieTable { names: names.to_vec(), consts })
    }

    pub fn bracket(&self, x: &[R], y: &[R]) -> Vec<R> {
        let n = self.dim();
        let mut out = vec![R::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let c = x[i].clone() * y[j].clone();
                linalg::axpy(&mut out, &c, &self.consts[i][j]);
            }
        }
        out
    }

    pub fn unit(&self, i: usize) -> Vec<R> {
        let mut v = vec![R::zero(); self.dim()];
        v[i] = R::one();
        v
    }

    /// Matrix of ad(x), column j = [x, b_j].
    pub fn ad(&self, x: &[R]) -> Matrix<R> {
        let cols: Vec<Vec<R>> = (0..self.dim()).map(|j| self.bracket(x, &self.unit(j))).collect();
        linalg::transpose(&cols)
    }

    pub fn killing_matrix(&self) -> Matrix<R> {
        let ads: Vec<Matrix<R>> = (0..self.dim()).map(|i| self.ad(&self.unit(i))).collect();
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| linalg::trace(&linalg::mat_mul(&ads[i], &ads[j]))).collect())
            .collect()
    }

    /// Triples (i<j<k) where the Jacobiator does not vanish.
    pub fn jacobi_failures(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (a, b, c) = (self.unit(i), self.unit(j), self.unit(k));
                    let t1 = self.bracket(&a, &self.bracket(&b, &c));
                    let t2 = self.bracket(&b, &self.bracket(&c, &a));
                    let t3 = self.bracket(&c, &self.bracket(&a, &b));
                    if (0..n).any(|m| !(t1[m].clone() + t2[m].clone() + t3[m].clone()).is_zero()) {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    /// Whether the linear map b_i ↦ images[i] (coordinates in `target`) preserves brackets.
    pub fn is_homomorphism_into(&self, target: &LieTable<R>, images: &[Vec<R>]) -> Option<(usize, usize)> {
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                let lhs = target.bracket(&images[i], &images[j]);
                let mut rhs = vec![R::zero(); target.dim()];
                for (k, c) in self.consts[i][j].iter().enumerate() {
                    linalg::axpy(&mut rhs, c, &images[k]);
                }
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn map<T: Ring, F: Fn(&R) -> T>(&self, f: F) -> LieTable<T> {
        LieTable {
            names: self.names.clone(),
            consts: self.consts.iter().map(|m| m.iter().map(|v| v.iter().map(&f).collect()).collect()).collect(),
        }
    }

    /// Change of basis: new b'_i = Σ_j p[i][j] b_j with p invertible over R's units.
    pub fn rebase(&self, names: &[&str], p: &[Vec<R>]) -> Option<LieTable<R>> {
        let ech = Echelon::from_vectors(self.dim(), p).ok()?;
        if ech.dim() != self.dim() {
            return None;
        }
        let n = self.dim();
        let mut consts = vec![vec![vec![R::zero(); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                consts[i][j] = ech.coordinates(&self.bracket(&p[i], &p[j]))?;
            }
        }
        Some(LieTable { names: names.iter().map(|s| s.to_string()).collect(), consts })
    }
}

impl<F: Field> LieTable<F> {
    /// dim [𝔩, 𝔩].
    pub fn derived_dim(&self) -> usize {
        let mut rows = Vec::new();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                rows.push(self.consts[i][j].clone());
            }
        }
        linalg::rank(&rows)
    }

    /// Basis of the center.
    pub fn center(&self) -> Vec<Vec<F>> {
        // x central iff Σ x_i consts[i][j] = 0 for all j
        let n = self.dim();
        let mut rows = Vec::new();
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| self.consts[i][j][k].clone()).collect());
            }
        }
        linalg::nullspace(&rows, n)
    }

    pub fn derived_span(&self) -> Vec<Vec<F>> {
        let mut rows = Vec::new();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                rows.push(self.consts[i][j].clone());
            }
        }
        let n = self.dim();
        Echelon::from_vectors(n, &rows).expect("field").rows().to_vec()
    }

    pub fn killing_rank(&self) -> usize {
        linalg::rank(&self.killing_matrix())
    }

    /// 2-step nilpotent with 1-dim center equal to the derived algebra.
    pub fn is_heisenberg(&self) -> bool {
        let center = self.center();
        let derived = self.derived_span();
        self.dim() % 2 == 1
            && center.len() == 1
            && derived.len() == 1
            && linalg::intersection_dim(&center, &derived) == 1
    }
}

impl<R: Ring + fmt::Display> fmt::Display for LieTable<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                let terms: Vec<String> = self.consts[i][j]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| format!("({})*{}", c, self.names[k]))
                    .collect();
                if !terms.is_empty() {
                    writeln!(f, "[{},{}] = {}", self.names[i], self.names[j], terms.join(" + "))?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, Rational};

    fn sl2() -> LieTable<Rational> {
        let one = |k| vec![(Rational::from_int(1), k)];
        LieTable::from_entries(
            &["H", "X", "Y"],
            vec![(0, 1, vec![(rat(2, 1), 1)]), (0, 2, vec![(rat(-2, 1), 2)]), (1, 2, one(0))],
        )
    }

    #[test]
    fn sl2_invariants() {
        let t = sl2();
        assert!(t.jacobi_failures().is_empty());
        let k = t.killing_matrix();
        assert_eq!(k[0][0], rat(8, 1));
        assert_eq!(k[1][2], rat(4, 1));
        assert_eq!(t.derived_dim(), 3);
        assert!(t.center().is_empty());
        assert!(!t.is_heisenberg());
    }

    #[test]
    fn heisenberg3() {
        let t: LieTable<Rational> = LieTable::from_entries(&["P", "Q", "C"], vec![(0, 1, vec![(rat(1, 1), 2)])]);
        assert!(t.is_heisenberg());
    }
}

//! Exact linear algebra over a [`Ring`] with unit pivots.
//!
//! Elimination only divides by units, so the same code runs over fields
//! (any nonzero pivot) and over `ParamPoly` (constant pivots only).

use num_traits::Zero;
use thiserror::Error;

use crate::field::{Field, Ring};

pub type Matrix<R> = Vec<Vec<R>>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("no unit pivot available in residual vector")]
    NoUnitPivot,
    #[error("vector does not lie in the span")]
    NotInSpan,
    #[error("matrix is singular")]
    Singular,
}

pub fn axpy<R: Ring>(y: &mut [R], a: &R, x: &[R]) {
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi = yi.clone() + a.clone() * xi.clone();
        }
    }
}

pub fn scale<R: Ring>(a: &R, x: &[R]) -> Vec<R> {
    x.iter().map(|xi| a.clone() * xi.clone()).collect()
}

pub fn is_zero_vec<R: Ring>(x: &[R]) -> bool {
    x.iter().all(Zero::is_zero)
}

/// Reduced row echelon form grown one vector at a time.
#[derive(Clone, Debug)]
pub struct Echelon<R> {
    ncols: usize,
    rows: Vec<Vec<R>>,
    pivots: Vec<usize>,
    /// rows[r] = Σ_m combos[r][m] · (m-th accepted input)
    combos: Vec<Vec<R>>,
}

impl<R: Ring> Echelon<R> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivots: Vec::new(), combos: Vec::new() }
    }

    pub fn from_vectors(ncols: usize, vs: &[Vec<R>]) -> Result<Self, LinalgError> {
        let mut e = Echelon::new(ncols);
        for v in vs {
            e.insert(v)?;
        }
        Ok(e)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<R>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn reduce(&self, v: &[R]) -> Vec<R> {
        let mut res = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let f = res[p].clone();
            if !f.is_zero() {
                axpy(&mut res, &-f, row);
            }
        }
        res
    }

    pub fn contains(&self, v: &[R]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Adds `v` to the span. Returns whether the dimension grew.
    pub fn insert(&mut self, v: &[R]) -> Result<bool, LinalgError> {
        assert_eq!(v.len(), self.ncols, "vector length mismatch");
        let k = self.dim();
        let mut res = v.to_vec();
        let mut comb = vec![R::zero(); k + 1];
        comb[k] = R::one();
        for r in 0..k {
            let f = res[self.pivots[r]].clone();
            if !f.is_zero() {
                axpy(&mut res, &-f.clone(), &self.rows[r]);
                axpy(&mut comb[..k], &-f, &self.combos[r]);
            }
        }
        if is_zero_vec(&res) {
            return Ok(false);
        }
        let (p, inv) = res
            .iter()
            .enumerate()
            .find_map(|(j, x)| if x.is_zero() { None } else { x.unit_inverse().map(|u| (j, u)) })
            .ok_or(LinalgError::NoUnitPivot)?;
        let res = scale(&inv, &res);
        let comb = scale(&inv, &comb);
        for r in 0..k {
            self.combos[r].push(R::zero());
            let g = self.rows[r][p].clone();
            if !g.is_zero() {
                axpy(&mut self.rows[r], &-g.clone(), &res);
                axpy(&mut self.combos[r], &-g, &comb);
            }
        }
        self.rows.push(res);
        self.pivots.push(p);
        self.combos.push(comb);
        Ok(true)
    }

    /// Coefficients of `v` in terms of the accepted input vectors, in order.
    pub fn coordinates(&self, v: &[R]) -> Option<Vec<R>> {
        let mut res = v.to_vec();
        let mut out = vec![R::zero(); self.dim()];
        for r in 0..self.dim() {
            let f = res[self.pivots[r]].clone();
            if !f.is_zero() {
                axpy(&mut res, &-f.clone(), &self.rows[r]);
                axpy(&mut out, &f, &self.combos[r]);
            }
        }
        if is_zero_vec(&res) {
            Some(out)
        } else {
            None
        }
    }

    /// L with L·v = coordinates(v) for every v in the span; one row per
    /// accepted input. Vectors outside the span are silently projected.
    pub fn left_inverse(&self) -> Matrix<R> {
        let k = self.dim();
        let mut l = vec![vec![R::zero(); self.ncols]; k];
        for (r, &p) in self.pivots.iter().enumerate() {
            for (m, row) in l.iter_mut().enumerate() {
                row[p] = self.combos[r][m].clone();
            }
        }
        l
    }

    /// Kernel basis of the matrix whose rows span this echelon form.
    pub fn kernel(&self) -> Vec<Vec<R>> {
        let mut out = Vec::new();
        for f in 0..self.ncols {
            if self.pivots.contains(&f) {
                continue;
            }
            let mut x = vec![R::zero(); self.ncols];
            x[f] = R::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                x[p] = -row[f].clone();
            }
            out.push(x);
        }
        out
    }
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    match rows.first() {
        None => 0,
        Some(r) => Echelon::from_vectors(r.len(), rows).expect("field pivots").dim(),
    }
}

/// Basis of {x : A x = 0} for A given by rows.
pub fn nullspace<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    Echelon::from_vectors(ncols, rows).expect("field pivots").kernel()
}

/// Coefficients c with Σ c_k basis[k] = v, assuming independent `basis`.
pub fn express<R: Ring>(basis: &[Vec<R>], v: &[R]) -> Result<Vec<R>, LinalgError> {
    let e = Echelon::from_vectors(v.len(), basis)?;
    if e.dim() != basis.len() {
        return Err(LinalgError::Singular);
    }
    e.coordinates(v).ok_or(LinalgError::NotInSpan)
}

/// dim(span a ∩ span b).
pub fn intersection_dim<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> usize {
    let all: Vec<Vec<F>> = a.iter().chain(b).cloned().collect();
    rank(a) + rank(b) - rank(&all)
}

pub fn transpose<R: Clone>(m: &[Vec<R>]) -> Matrix<R> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn mat_mul<R: Ring>(a: &[Vec<R>], b: &[Vec<R>]) -> Matrix<R> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = vec![R::zero(); n];
            for (k, x) in row.iter().enumerate() {
                axpy(&mut out, x, &b[k]);
            }
            out
        })
        .collect()
}

pub fn mat_vec<R: Ring>(a: &[Vec<R>], v: &[R]) -> Vec<R> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                .fold(R::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
        })
        .collect()
}

pub fn mat_sub<R: Ring>(a: &[Vec<R>], b: &[Vec<R>]) -> Matrix<R> {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(p, q)| p.clone() - q.clone()).collect()).collect()
}

pub fn mat_add<R: Ring>(a: &[Vec<R>], b: &[Vec<R>]) -> Matrix<R> {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(p, q)| p.clone() + q.clone()).collect()).collect()
}

pub fn identity<R: Ring>(n: usize) -> Matrix<R> {
    (0..n).map(|i| (0..n).map(|j| if i == j { R::one() } else { R::zero() }).collect()).collect()
}

pub fn trace<R: Ring>(m: &[Vec<R>]) -> R {
    (0..m.len()).fold(R::zero(), |acc, i| acc + m[i][i].clone())
}

/// Determinant by cofactor expansion; meant for the small matrices here.
pub fn determinant<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = R::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Matrix<R> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = m[0][j].clone() * determinant(&minor);
        total = if j % 2 == 0 { total + term } else { total - term };
    }
    total
}

pub fn inverse<F: Field>(m: &[Vec<F>]) -> Result<Matrix<F>, LinalgError> {
    let n = m.len();
    let cols = transpose(m);
    let e = Echelon::from_vectors(n, &cols)?;
    if e.dim() != n {
        return Err(LinalgError::Singular);
    }
    // column j of the inverse expresses e_j in the columns of m
    let inv_cols: Vec<Vec<F>> = (0..n)
        .map(|j| {
            let mut ej = vec![F::zero(); n];
            ej[j] = F::one();
            e.coordinates(&ej).expect("full rank")
        })
        .collect();
    Ok(transpose(&inv_cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, Rational};

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect()
    }

    #[test]
    fn rank_nullspace_inverse() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a), 2);
        let ker = nullspace(&a, 3);
        assert_eq!(ker.len(), 1);
        assert!(is_zero_vec(&mat_vec(&a, &ker[0])));
        let b = m(&[&[2, 1], &[1, 1]]);
        let bi = inverse(&b).unwrap();
        assert_eq!(mat_mul(&b, &bi), identity(2));
        assert_eq!(determinant(&b), rat(1, 1));
        assert_eq!(inverse(&a), Err(LinalgError::Singular));
    }

    #[test]
    fn coordinates_track_inputs() {
        let basis = m(&[&[1, 1, 0], &[0, 1, 1]]);
        let v = m(&[&[2, 5, 3]]).remove(0);
        assert_eq!(express(&basis, &v).unwrap(), vec![rat(2, 1), rat(3, 1)]);
        let w = m(&[&[1, 0, 0]]).remove(0);
        assert_eq!(express(&basis, &w), Err(LinalgError::NotInSpan));
    }
}

//! Univariate polynomials in one formal model parameter.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::field::{Rational, Ring};
use crate::scalar::Scalar;

/// Σ coeffs[k]·name^k. The name is carried for display only.
#[derive(Clone)]
pub struct ParamPoly {
    coeffs: Vec<Scalar>,
    name: Arc<str>,
}

impl ParamPoly {
    pub fn constant(c: Scalar) -> ParamPoly {
        ParamPoly::from_coeffs(vec![c], "t")
    }

    /// The parameter itself.
    pub fn var(name: &str) -> ParamPoly {
        ParamPoly::from_coeffs(vec![Scalar::zero(), Scalar::one()], name)
    }

    pub fn from_coeffs(mut coeffs: Vec<Scalar>, name: &str) -> ParamPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ParamPoly { coeffs, name: Arc::from(name) }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        match self.coeffs.len() {
            0 => Some(Scalar::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn pow(&self, k: u32) -> ParamPoly {
        (0..k).fold(ParamPoly::one().renamed(&self.name), |acc, _| acc * self.clone())
    }

    fn renamed(mut self, name: &str) -> ParamPoly {
        self.name = Arc::from(name);
        self
    }

    fn pick_name(&self, other: &ParamPoly) -> Arc<str> {
        if self.coeffs.len() > 1 || other.coeffs.len() <= 1 {
            self.name.clone()
        } else {
            other.name.clone()
        }
    }
}

impl PartialEq for ParamPoly {
    fn eq(&self, other: &ParamPoly) -> bool {
        self.coeffs == other.coeffs
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => self.name.to_string(),
                _ => format!("{}^{}", self.name, k),
            };
            parts.push(if mono.is_empty() { format!("({})", c) } else { format!("({})*{}", c, mono) });
        }
        f.write_str(&parts.join(" + "))
    }
}

impl Add for ParamPoly {
    type Output = ParamPoly;
    fn add(self, o: ParamPoly) -> ParamPoly {
        let name = self.pick_name(&o);
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut c = vec![Scalar::zero(); n];
        for (k, v) in self.coeffs.into_iter().enumerate() {
            c[k] = v;
        }
        for (k, v) in o.coeffs.into_iter().enumerate() {
            c[k] = c[k].clone() + v;
        }
        ParamPoly::from_coeffs(c, &name)
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        let name = self.name.clone();
        ParamPoly::from_coeffs(self.coeffs.into_iter().map(|c| -c).collect(), &name)
    }
}

impl Sub for ParamPoly {
    type Output = ParamPoly;
    fn sub(self, o: ParamPoly) -> ParamPoly {
        self + (-o)
    }
}

impl Mul for ParamPoly {
    type Output = ParamPoly;
    fn mul(self, o: ParamPoly) -> ParamPoly {
        let name = self.pick_name(&o);
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return ParamPoly::from_coeffs(Vec::new(), &name);
        }
        let mut c = vec![Scalar::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        ParamPoly::from_coeffs(c, &name)
    }
}

impl Zero for ParamPoly {
    fn zero() -> ParamPoly {
        ParamPoly::from_coeffs(Vec::new(), "t")
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for ParamPoly {
    fn one() -> ParamPoly {
        ParamPoly::constant(Scalar::one())
    }
}

impl From<Scalar> for ParamPoly {
    fn from(c: Scalar) -> ParamPoly {
        ParamPoly::constant(c)
    }
}

impl Ring for ParamPoly {
    fn from_rational(q: Rational) -> ParamPoly {
        ParamPoly::constant(Scalar::rational(q))
    }

    /// Units are the nonzero constants.
    fn unit_inverse(&self) -> Option<ParamPoly> {
        let c = self.as_constant()?;
        c.checked_inv().ok().map(ParamPoly::constant)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_eval() {
        let a = ParamPoly::var("a");
        let p = a.clone() * a.clone() + ParamPoly::from_int(3);
        let q = -(p.clone()) * a.clone();
        assert_eq!(q.degree(), Some(3));
        assert_eq!(q.eval(&Scalar::from(2)), Scalar::from(-14));
        assert_eq!(p.clone() - p, ParamPoly::zero());
        assert_eq!(ParamPoly::from_int(2).unit_inverse(), Some(ParamPoly::frac(1, 2)));
        assert_eq!(a.unit_inverse(), None);
        assert_eq!(format!("{}", a.pow(2) - ParamPoly::from_int(1)), "(1)*a^2 + (-1)");
    }
}

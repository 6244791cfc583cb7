//! The exact tower ℚ ⊂ ℚ(i) ⊂ ℚ(i)(α).
//!
//! At most one quadratic extension is active in a value. The adjoined root
//! is always real: α² = d with d a positive rational that is not a square.
//! A root of a negative rational r is stored as i·α with α² = |r|, so complex
//! conjugation acts coordinate-wise (i ↦ −i, α ↦ α).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::field::{Conjugate, Field, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("incompatible extensions: s^2={0} and s^2={1}")]
    IncompatibleExtensions(Rational, Rational),
    #[error("value is not in the real subfield")]
    NotReal,
    #[error("extension radicand {0} is not a positive non-square")]
    BadRadicand(Rational),
    #[error("cannot parse scalar literal '{0}': {1}")]
    Parse(String, String),
}

/// c0 + c1·i + c2·α + c3·i·α.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    c: [Rational; 4],
    ext: Option<Rational>,
}

fn q0() -> Rational {
    Rational::zero()
}

/// Exact square root of a nonnegative rational when it is a perfect square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

type Gauss = (Rational, Rational);

fn gmul(a: &Gauss, b: &Gauss) -> Gauss {
    (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

fn gadd(a: &Gauss, b: &Gauss) -> Gauss {
    (&a.0 + &b.0, &a.1 + &b.1)
}

fn gscale(a: &Gauss, q: &Rational) -> Gauss {
    (&a.0 * q, &a.1 * q)
}

impl Scalar {
    fn from_parts(c: [Rational; 4], ext: Option<Rational>) -> Scalar {
        let ext = if c[2].is_zero() && c[3].is_zero() { None } else { ext };
        Scalar { c, ext }
    }

    pub fn rational(q: Rational) -> Scalar {
        Scalar::from_parts([q, q0(), q0(), q0()], None)
    }

    pub fn gaussian(re: Rational, im: Rational) -> Scalar {
        Scalar::from_parts([re, im, q0(), q0()], None)
    }

    pub fn i() -> Scalar {
        Scalar::gaussian(q0(), Rational::one())
    }

    /// The adjoined root α with α² = d.
    pub fn adjoined_root(d: &Rational) -> Result<Scalar, ScalarError> {
        if !d.is_positive() || rational_sqrt(d).is_some() {
            return Err(ScalarError::BadRadicand(d.clone()));
        }
        Ok(Scalar::from_parts([q0(), q0(), Rational::one(), q0()], Some(d.clone())))
    }

    /// An exact square root of the rational r, using an extension only when needed.
    pub fn sqrt_of(r: &Rational) -> Scalar {
        let abs = r.abs();
        let root = match rational_sqrt(&abs) {
            Some(q) => Scalar::rational(q),
            None => Scalar::adjoined_root(&abs).expect("non-square radicand"),
        };
        if r.is_negative() {
            Scalar::i() * root
        } else {
            root
        }
    }

    /// Coordinates (c0, c1, c2, c3).
    pub fn coords(&self) -> &[Rational; 4] {
        &self.c
    }

    /// Radicand d of the active extension, if any.
    pub fn ext(&self) -> Option<&Rational> {
        self.ext.as_ref()
    }

    fn merged_ext(&self, other: &Scalar) -> Result<Option<Rational>, ScalarError> {
        match (&self.ext, &other.ext) {
            (Some(a), Some(b)) if a != b => Err(ScalarError::IncompatibleExtensions(a.clone(), b.clone())),
            (Some(a), _) => Ok(Some(a.clone())),
            (None, b) => Ok(b.clone()),
        }
    }

    fn split(&self) -> (Gauss, Gauss) {
        ((self.c[0].clone(), self.c[1].clone()), (self.c[2].clone(), self.c[3].clone()))
    }

    fn join(u: Gauss, v: Gauss, ext: Option<Rational>) -> Scalar {
        Scalar::from_parts([u.0, u.1, v.0, v.1], ext)
    }

    pub fn checked_add(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        let ext = self.merged_ext(o)?;
        let c = [&self.c[0] + &o.c[0], &self.c[1] + &o.c[1], &self.c[2] + &o.c[2], &self.c[3] + &o.c[3]];
        Ok(Scalar::from_parts(c, ext))
    }

    pub fn checked_sub(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_add(&-o.clone())
    }

    pub fn checked_mul(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        let ext = self.merged_ext(o)?;
        let (u1, v1) = self.split();
        let (u2, v2) = o.split();
        let mut u = gmul(&u1, &u2);
        if let Some(d) = &ext {
            u = gadd(&u, &gscale(&gmul(&v1, &v2), d));
        }
        let v = gadd(&gmul(&u1, &v2), &gmul(&v1, &u2));
        Ok(Scalar::join(u, v, ext))
    }

    pub fn checked_inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let (u, v) = self.split();
        // (u + vα)(u − vα) = u² − v²d lies in ℚ(i).
        let mut n = gmul(&u, &u);
        if let Some(d) = &self.ext {
            let vv = gmul(&v, &v);
            n = (&n.0 - &vv.0 * d, &n.1 - &vv.1 * d);
        }
        let norm = &n.0 * &n.0 + &n.1 * &n.1;
        let ninv = (&n.0 / &norm, -&n.1 / &norm);
        let nu = gmul(&u, &ninv);
        let nv = gmul(&(-v.0, -v.1), &ninv);
        Ok(Scalar::join(nu, nv, self.ext.clone()))
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_mul(&o.checked_inv()?)
    }

    pub fn is_real(&self) -> bool {
        self.c[1].is_zero() && self.c[3].is_zero()
    }

    /// The rational value, when the scalar lies in ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero() {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    pub fn re(&self) -> Scalar {
        Scalar::from_parts([self.c[0].clone(), q0(), self.c[2].clone(), q0()], self.ext.clone())
    }

    pub fn im(&self) -> Scalar {
        Scalar::from_parts([self.c[1].clone(), q0(), self.c[3].clone(), q0()], self.ext.clone())
    }

    /// Exact sign of a real element c0 + c2·√d.
    pub fn real_sign(&self) -> Result<i8, ScalarError> {
        if !self.is_real() {
            return Err(ScalarError::NotReal);
        }
        let s = |q: &Rational| -> i8 {
            if q.is_positive() {
                1
            } else if q.is_negative() {
                -1
            } else {
                0
            }
        };
        let (a, b) = (&self.c[0], &self.c[2]);
        let (sa, sb) = (s(a), s(b));
        if sb == 0 {
            return Ok(sa);
        }
        if sa == 0 || sa == sb {
            return Ok(sb);
        }
        let d = self.ext.as_ref().expect("extension present when c2 != 0");
        // opposite signs: compare a² with b²·d
        if a * a > b * b * d {
            Ok(sa)
        } else {
            Ok(sb)
        }
    }

    /// Parse the literal grammar: terms `p/q`, `p/q*i`, `p/q*s`, `p/q*i*s`
    /// joined with `+`/`-`. `s` is a square root of `ext`.
    pub fn parse(text: &str, ext: Option<&Rational>) -> Result<Scalar, ScalarError> {
        let err = |m: &str| ScalarError::Parse(text.to_string(), m.to_string());
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty literal"));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for k in 1..bytes.len() {
            if (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'*' && bytes[k - 1] != b'/' {
                terms.push(&compact[start..k]);
                start = k;
            }
        }
        terms.push(&compact[start..]);
        let s_root = ext.map(Scalar::sqrt_of);
        let mut total = Scalar::zero();
        for term in terms {
            let (neg, body) = match term.as_bytes().first() {
                Some(b'+') => (false, &term[1..]),
                Some(b'-') => (true, &term[1..]),
                _ => (false, term),
            };
            if body.is_empty() {
                return Err(err("dangling sign"));
            }
            let mut value = Scalar::one();
            for factor in body.split('*') {
                let f = match factor {
                    "i" => Scalar::i(),
                    "s" => s_root.clone().ok_or_else(|| err("'s' used without --ext"))?,
                    lit => Scalar::rational(parse_rational(lit).ok_or_else(|| err("bad rational"))?),
                };
                value = value.checked_mul(&f)?;
            }
            if neg {
                value = -value;
            }
            total = total.checked_add(&value)?;
        }
        Ok(total)
    }

    /// Render in the literal grammar; `s` stands for the active α.
    pub fn render(&self) -> String {
        let names = ["", "i", "s", "i*s"];
        let mut out = String::new();
        for (k, q) in self.c.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let mag = q.abs();
            let body = if k == 0 { mag.to_string() } else { format!("{}*{}", mag, names[k]) };
            if q.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Echo of the active extension, e.g. `s^2=36/7`.
    pub fn render_ext(&self) -> Option<String> {
        self.ext.as_ref().map(|d| format!("s^2={}", d))
    }
}

pub fn parse_rational(text: &str) -> Option<Rational> {
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.ext {
            Some(d) => write!(f, "{} [s^2={}]", self.render(), d),
            None => f.write_str(&self.render()),
        }
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Scalar {
        Scalar::rational(q)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::from_int(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$checked(&o).unwrap_or_else(|e| panic!("{}", e))
            }
        }
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$checked(o).unwrap_or_else(|e| panic!("{}", e))
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let [a, b, c, d] = self.c;
        Scalar { c: [-a, -b, -c, -d], ext: self.ext }
    }
}

impl Zero for Scalar {
    fn zero() -> Scalar {
        Scalar { c: [q0(), q0(), q0(), q0()], ext: None }
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

impl One for Scalar {
    fn one() -> Scalar {
        Scalar::rational(Rational::one())
    }
}

impl Ring for Scalar {
    fn from_rational(q: Rational) -> Scalar {
        Scalar::rational(q)
    }

    fn unit_inverse(&self) -> Option<Scalar> {
        self.checked_inv().ok()
    }
}

impl Field for Scalar {}

impl Conjugate for Scalar {
    fn conj(&self) -> Scalar {
        let [a, b, c, d] = &self.c;
        Scalar::from_parts([a.clone(), -b.clone(), c.clone(), -d.clone()], self.ext.clone())
    }
}

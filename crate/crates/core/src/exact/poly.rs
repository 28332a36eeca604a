//! Dense univariate polynomials over exact rationals.
//!
//! `RatPoly` is the workhorse for q-polynomials ([n]_q, Gaussian binomials,
//! Hilbert series coefficients) and for cyclotomic polynomial arithmetic.
//! Coefficients are arbitrary-precision rationals; there is no floating
//! point anywhere in this crate.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A univariate polynomial with exact rational coefficients.
///
/// Invariant: the trailing coefficient is nonzero (the zero polynomial is
/// the empty coefficient vector).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = RatPoly { coeffs: vec![c] };
        p.normalize();
        p
    }

    /// The monomial c * x^d.
    pub fn monomial(c: BigRational, d: usize) -> Self {
        if c.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); d + 1];
        coeffs[d] = c;
        RatPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = RatPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        RatPoly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; the zero polynomial has degree `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^d (zero beyond the degree).
    pub fn coeff(&self, d: usize) -> BigRational {
        self.coeffs.get(d).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    /// Substitute x -> x^k, stretching every exponent by the factor k.
    pub fn stretch(&self, k: usize) -> Self {
        assert!(k >= 1, "stretch factor must be positive");
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        for (d, c) in self.coeffs.iter().enumerate() {
            coeffs[d * k] = c.clone();
        }
        RatPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return RatPoly::zero();
        }
        RatPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division, returning (quotient, remainder).
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let d = divisor.degree().unwrap();
        let lead_inv = divisor.leading_coeff().recip();
        let mut rem = self.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(d)];
        while let Some(r) = rem.degree() {
            if r < d {
                break;
            }
            let factor = rem.leading_coeff() * &lead_inv;
            let shift = r - d;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let t = &rem.coeffs[shift + i] - c * &factor;
                rem.coeffs[shift + i] = t;
            }
            rem.normalize();
            quot[shift] = factor;
        }
        (RatPoly::from_coeffs(quot), rem)
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &RatPoly) -> RatPoly {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "polynomial division was not exact");
        q
    }

    /// Extended gcd: returns (g, a, b) with a*self + b*other = g, g monic
    /// (or zero when both inputs are zero).
    pub fn extended_gcd(&self, other: &RatPoly) -> (RatPoly, RatPoly, RatPoly) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = RatPoly::one();
        let mut s1 = RatPoly::zero();
        let mut t0 = RatPoly::zero();
        let mut t1 = RatPoly::one();
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lead = r0.leading_coeff().recip();
        (r0.scale(&lead), s0.scale(&lead), t0.scale(&lead))
    }

    /// True if every coefficient is a nonnegative integer.
    pub fn has_nonneg_integer_coeffs(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Render with the given variable name, constants-first order,
    /// e.g. `1 + q + 2*q^2`.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    out.push('-');
                }
                first = false;
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let unit_mag = mag.is_one();
            if d == 0 || !unit_mag {
                out.push_str(&mag.to_string());
            }
            if d > 0 {
                if !unit_mag {
                    out.push('*');
                }
                out.push_str(var);
                if d > 1 {
                    out.push_str(&format!("^{d}"));
                }
            }
        }
        out
    }

    /// JSON form: array of `[exponent, "coefficient"]` pairs in ascending
    /// exponent order, skipping zero coefficients.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| serde_json::json!([d, c.to_string()]))
            .collect();
        serde_json::Value::Array(terms)
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        RatPoly::from_coeffs(coeffs)
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        RatPoly::from_coeffs(coeffs)
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = &coeffs[i + j] + a * b;
                coeffs[i + j] = t;
            }
        }
        RatPoly::from_coeffs(coeffs)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("q"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn div_rem_roundtrip() {
        let a = RatPoly::from_i64_coeffs(&[2, 0, -3, 1, 5]);
        let b = RatPoly::from_i64_coeffs(&[1, 2, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap() < b.degree().unwrap());
    }

    #[test]
    fn exact_div_cancels() {
        let a = RatPoly::from_i64_coeffs(&[1, 1]);
        let b = RatPoly::from_i64_coeffs(&[-1, 1]);
        let prod = &a * &b;
        assert_eq!(prod, RatPoly::from_i64_coeffs(&[-1, 0, 1]));
        assert_eq!(prod.exact_div(&a), b);
    }

    #[test]
    fn stretch_substitutes_powers() {
        let p = RatPoly::from_i64_coeffs(&[1, 1, 1]); // 1 + q + q^2
        assert_eq!(p.stretch(2), RatPoly::from_i64_coeffs(&[1, 0, 1, 0, 1]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(RatPoly::zero().display("q"), "0");
        let p = RatPoly::from_i64_coeffs(&[1, -2, 0, 1]);
        assert_eq!(p.display("q"), "1 - 2*q + q^3");
    }

    #[test]
    fn extended_gcd_bezout() {
        let a = RatPoly::from_i64_coeffs(&[-1, 0, 1]); // (x-1)(x+1)
        let b = RatPoly::from_i64_coeffs(&[-1, 1]);
        let (g, s, t) = a.extended_gcd(&b);
        assert_eq!(g, RatPoly::from_i64_coeffs(&[-1, 1]));
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }
}

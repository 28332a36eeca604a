//! Bivariate polynomials and truncated series in (t, q).
//!
//! `BiPoly` is the universal value type for bigraded Hilbert series,
//! statistics generating functions and character multiplicities. Terms are
//! kept in canonical order (t-degree major, q-degree minor) so that text and
//! JSON output is deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{rat, RatPoly};

/// A polynomial in t and q with exact rational coefficients.
///
/// Invariant: stored coefficients are nonzero; exponents are nonnegative.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), BigRational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::term(BigRational::one(), 0, 0)
    }

    /// The single term c * t^i * q^j.
    pub fn term(c: BigRational, i: usize, j: usize) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    pub fn term_i64(c: i64, i: usize, j: usize) -> Self {
        BiPoly::term(rat(c), i, j)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigRational {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, c: BigRational, i: usize, j: usize) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    /// Terms in canonical order: (t-exponent, q-exponent, coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigRational)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest t-exponent appearing, or `None` for the zero polynomial.
    pub fn t_degree(&self) -> Option<usize> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn q_degree(&self) -> Option<usize> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// Coefficient of t^i as a univariate q-polynomial.
    pub fn coeff_of_t(&self, i: usize) -> RatPoly {
        let mut coeffs = Vec::new();
        for (&(ti, qj), c) in &self.terms {
            if ti == i {
                if coeffs.len() <= qj {
                    coeffs.resize(qj + 1, BigRational::zero());
                }
                coeffs[qj] = c.clone();
            }
        }
        RatPoly::from_coeffs(coeffs)
    }

    /// Build from a list of q-polynomial rows, row r giving the coefficient
    /// of t^r.
    pub fn from_t_rows(rows: &[RatPoly]) -> Self {
        let mut p = BiPoly::zero();
        for (i, row) in rows.iter().enumerate() {
            for (j, c) in row.coeffs().iter().enumerate() {
                p.add_term(c.clone(), i, j);
            }
        }
        p
    }

    /// Specialize t = 1, leaving a q-polynomial.
    pub fn eval_t_one(&self) -> RatPoly {
        let mut coeffs = Vec::new();
        for (&(_, j), c) in &self.terms {
            if coeffs.len() <= j {
                coeffs.resize(j + 1, BigRational::zero());
            }
            coeffs[j] += c;
        }
        RatPoly::from_coeffs(coeffs)
    }

    /// Specialize q = 1, leaving a polynomial in t.
    pub fn eval_q_one(&self) -> RatPoly {
        let mut coeffs = Vec::new();
        for (&(i, _), c) in &self.terms {
            if coeffs.len() <= i {
                coeffs.resize(i + 1, BigRational::zero());
            }
            coeffs[i] += c;
        }
        RatPoly::from_coeffs(coeffs)
    }

    /// Evaluate at t = q = 1.
    pub fn eval_one_one(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |a, c| a + c)
    }

    /// True if t^a q^b * p(1/t, 1/q) = p(t, q), where (a, b) is the given
    /// bidegree.
    pub fn is_palindromic(&self, a: usize, b: usize) -> bool {
        self.terms.iter().all(|(&(i, j), c)| {
            i <= a && j <= b && self.coeff(a - i, b - j) == *c
        })
    }

    /// Text form in canonical order, e.g. `1 + 2*t*q + 2*t*q^2 + t^2*q^3`.
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (&(i, j), c) in &self.terms {
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
            let unit = mag.is_one();
            let mut factors: Vec<String> = Vec::new();
            if !unit || (i == 0 && j == 0) {
                factors.push(mag.to_string());
            }
            if i > 0 {
                factors.push(if i == 1 { "t".into() } else { format!("t^{i}") });
            }
            if j > 0 {
                factors.push(if j == 1 { "q".into() } else { format!("q^{j}") });
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// JSON form: array of `[i, j, "c"]` triples in canonical order, with the
    /// coefficient rendered as a decimal string.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| serde_json::json!([i, j, c.to_string()]))
            .collect();
        serde_json::Value::Array(terms)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(c.clone(), i, j);
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(-c.clone(), i, j);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(c1 * c2, i1 + i2, j1 + j2);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

/// A power series in t with q-polynomial coefficients, truncated at a fixed
/// t-degree. Arithmetic beyond the truncation order is never reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSeries {
    trunc: usize,
    rows: Vec<RatPoly>,
}

impl BiSeries {
    /// The zero series truncated at t-degree `trunc`.
    pub fn zero(trunc: usize) -> Self {
        BiSeries {
            trunc,
            rows: vec![RatPoly::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = BiSeries::zero(trunc);
        s.rows[0] = RatPoly::one();
        s
    }

    pub fn from_rows(rows: Vec<RatPoly>) -> Self {
        assert!(!rows.is_empty());
        BiSeries {
            trunc: rows.len() - 1,
            rows,
        }
    }

    /// Truncate a polynomial to a series of order `trunc`.
    pub fn from_bipoly(p: &BiPoly, trunc: usize) -> Self {
        let mut s = BiSeries::zero(trunc);
        for r in 0..=trunc {
            s.rows[r] = p.coeff_of_t(r);
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    /// Coefficient of t^r; panics beyond the truncation order.
    pub fn coeff_of_t(&self, r: usize) -> &RatPoly {
        assert!(r <= self.trunc, "requested t-degree beyond truncation");
        &self.rows[r]
    }

    pub fn rows(&self) -> &[RatPoly] {
        &self.rows
    }

    pub fn mul(&self, rhs: &BiSeries) -> BiSeries {
        let trunc = self.trunc.min(rhs.trunc);
        let mut rows = vec![RatPoly::zero(); trunc + 1];
        for r in 0..=trunc {
            for s in 0..=(trunc - r) {
                rows[r + s] = &rows[r + s] + &(&self.rows[r] * &rhs.rows[s]);
            }
        }
        BiSeries { trunc, rows }
    }

    pub fn display(&self) -> String {
        let rows: Vec<String> = self
            .rows
            .iter()
            .enumerate()
            .map(|(r, p)| format!("t^{r}: {}", p.display("q")))
            .collect();
        rows.join("\n")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "truncation": self.trunc,
            "coeff_of_t": self.rows.iter().map(RatPoly::to_json).collect::<Vec<_>>(),
        })
    }
}

/// The series `prod_j (1 - t*q^{e_j})^{-1}` truncated at t-degree `trunc`.
///
/// For exponents {0, ..., n} the coefficient of t^r is the Gaussian binomial
/// coefficient `[r+n choose n]_q` (the negative q-binomial theorem).
pub fn inv_product_series(q_exponents: &[usize], trunc: usize) -> BiSeries {
    let mut rows = vec![RatPoly::zero(); trunc + 1];
    rows[0] = RatPoly::one();
    for &e in q_exponents {
        // Multiply by (1 - t*q^e)^{-1}: new[r] = old[r] + q^e * new[r-1].
        let qe = RatPoly::monomial(BigRational::one(), e);
        for r in 1..=trunc {
            let carried = &qe * &rows[r - 1];
            rows[r] = &rows[r] + &carried;
        }
    }
    BiSeries::from_rows(rows)
}

/// The finite product `prod_j (1 - t*q^{e_j})` as a polynomial.
pub fn product_one_minus_tq(q_exponents: &[usize]) -> BiPoly {
    let mut p = BiPoly::one();
    for &e in q_exponents {
        let factor = &BiPoly::one() - &BiPoly::term_i64(1, 1, e);
        p = &p * &factor;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_squares() {
        let a = &BiPoly::one() + &BiPoly::term_i64(1, 1, 1);
        let b = &BiPoly::one() - &BiPoly::term_i64(1, 1, 1);
        let prod = &a * &b;
        let expected = &BiPoly::one() - &BiPoly::term_i64(1, 2, 2);
        assert_eq!(prod, expected);
    }

    #[test]
    fn one_is_multiplicative_identity() {
        let p = &BiPoly::term_i64(3, 2, 1) + &BiPoly::term_i64(-1, 0, 4);
        assert_eq!(&p * &BiPoly::one(), p);
    }

    #[test]
    fn display_canonical_order() {
        let mut p = BiPoly::one();
        p.add_term(rat(2), 1, 1);
        p.add_term(rat(2), 1, 2);
        p.add_term(rat(1), 2, 3);
        assert_eq!(p.display(), "1 + 2*t*q + 2*t*q^2 + t^2*q^3");
    }

    #[test]
    fn inv_product_gaussian_row() {
        // exponents {0,1,2}: coefficient of t^1 is 1 + q + q^2.
        let s = inv_product_series(&[0, 1, 2], 1);
        assert_eq!(s.coeff_of_t(1), &RatPoly::from_i64_coeffs(&[1, 1, 1]));
    }

    #[test]
    fn inv_product_empty_is_one() {
        let s = inv_product_series(&[], 4);
        assert_eq!(s.coeff_of_t(0), &RatPoly::one());
        for r in 1..=4 {
            assert!(s.coeff_of_t(r).is_zero());
        }
    }

    #[test]
    fn series_inverse_cancels_product() {
        let exps = [0usize, 1, 2, 3];
        let inv = inv_product_series(&exps, 6);
        let prod = BiSeries::from_bipoly(&product_one_minus_tq(&exps), 6);
        assert_eq!(inv.mul(&prod), BiSeries::one(6));
    }

    #[test]
    fn palindromic_detection() {
        // 1 + t(q + 2q^2 + q^3) + t^2 q^4 is palindromic for (2, 4).
        let mut p = BiPoly::one();
        p.add_term(rat(1), 1, 1);
        p.add_term(rat(2), 1, 2);
        p.add_term(rat(1), 1, 3);
        p.add_term(rat(1), 2, 4);
        assert!(p.is_palindromic(2, 4));
        assert!(!p.is_palindromic(2, 3));
    }
}

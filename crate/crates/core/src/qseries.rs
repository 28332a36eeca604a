//! q-analog arithmetic, the statistics generating functions A_alpha(t,q),
//! the MacMahon identity check, and refined Ehrhart lattice-point counting
//! on products of simplices.

use num_rational::BigRational;
use num_traits::One;

use crate::combinat::{enumerate_words, Composition};
use crate::error::{Error, Result};
use crate::exact::bipoly::{inv_product_series, BiPoly, BiSeries};
use crate::exact::poly::RatPoly;

/// Default cap on lattice-point enumeration.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// [n]_q = 1 + q + ... + q^{n-1}.
pub fn q_int(n: usize) -> RatPoly {
    RatPoly::from_coeffs(vec![BigRational::one(); n])
}

/// [n]_q! = [1]_q [2]_q ... [n]_q.
pub fn q_factorial(n: usize) -> RatPoly {
    let mut p = RatPoly::one();
    for j in 1..=n {
        p = &p * &q_int(j);
    }
    p
}

/// Gaussian binomial [m choose k]_q, by exact polynomial division.
pub fn gaussian_binomial(m: usize, k: usize) -> RatPoly {
    if k > m {
        return RatPoly::zero();
    }
    q_factorial(m)
        .exact_div(&q_factorial(k))
        .exact_div(&q_factorial(m - k))
}

/// q-multinomial coefficient [n choose a_1,...,a_k]_q.
pub fn q_multinomial(alpha: &Composition) -> RatPoly {
    let mut p = q_factorial(alpha.n());
    for &a in alpha.parts() {
        p = p.exact_div(&q_factorial(a));
    }
    p
}

/// The generating function A_alpha(t,q) = sum over words of t^des q^maj,
/// by full enumeration of W_alpha.
pub fn a_alpha(alpha: &Composition) -> BiPoly {
    let mut p = BiPoly::zero();
    for w in enumerate_words(alpha) {
        p.add_term(BigRational::one(), w.des(), w.maj());
    }
    p
}

/// Both sides of the MacMahon identity, expanded exactly up to t^R.
#[derive(Debug, Clone)]
pub struct MacmahonReport {
    pub alpha: Composition,
    pub trunc: usize,
    pub holds: bool,
    pub lhs: BiSeries,
    pub rhs: BiSeries,
}

/// Check sum_r (prod_i [r+a_i choose a_i]_q) t^r = A_alpha(t,q) /
/// prod_{j=0}^n (1-t q^j), term by term up to t^R.
pub fn macmahon_check(alpha: &Composition, trunc: usize) -> MacmahonReport {
    let n = alpha.n();
    let mut lhs_rows = Vec::with_capacity(trunc + 1);
    for r in 0..=trunc {
        let mut row = RatPoly::one();
        for &a in alpha.parts() {
            row = &row * &gaussian_binomial(r + a, a);
        }
        lhs_rows.push(row);
    }
    let lhs = BiSeries::from_rows(lhs_rows);
    let exponents: Vec<usize> = (0..=n).collect();
    let numerator = BiSeries::from_bipoly(&a_alpha(alpha), trunc);
    let rhs = numerator.mul(&inv_product_series(&exponents, trunc));
    let holds = lhs == rhs;
    MacmahonReport {
        alpha: alpha.clone(),
        trunc,
        holds,
        lhs,
        rhs,
    }
}

/// A product of simplices Delta_{a_1} x ... x Delta_{a_k} together with an
/// integer weight vector of length n = sum a_i.
#[derive(Debug, Clone)]
pub struct PolytopeSpec {
    dims: Vec<usize>,
    weights: Vec<i64>,
}

impl PolytopeSpec {
    pub fn new(dims: Vec<usize>, weights: Vec<i64>) -> Result<Self> {
        let n: usize = dims.iter().sum();
        if weights.len() != n {
            return Err(Error::BadInput(format!(
                "weight vector has length {}, expected {}",
                weights.len(),
                n
            )));
        }
        Ok(PolytopeSpec { dims, weights })
    }

    /// The grading used for Segre coordinate rings: block i carries the
    /// weights 1, 2, ..., a_i.
    pub fn segre_weights(alpha: &Composition) -> Self {
        let mut weights = Vec::with_capacity(alpha.n());
        for &a in alpha.parts() {
            for j in 1..=a {
                weights.push(j as i64);
            }
        }
        PolytopeSpec {
            dims: alpha.parts().to_vec(),
            weights,
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Number of lattice points of the r-th dilation: prod C(r+a_i, a_i).
    pub fn point_count(&self, r: usize) -> u128 {
        self.dims
            .iter()
            .map(|&a| {
                let mut c: u128 = 1;
                for j in 1..=a {
                    c = c * (r + j) as u128 / j as u128;
                }
                c
            })
            .product()
    }
}

/// q-count of lattice points in the r-th dilation: the Laurent polynomial
/// sum over points v of q^{v . a}, by direct enumeration. Weights may be
/// negative, so the result is returned as (shift, poly) with the true
/// coefficient of q^k stored at index k + shift.
///
/// Errors when the point count exceeds the budget.
pub fn q_ehrhart_shifted(
    spec: &PolytopeSpec,
    r: usize,
    budget: u128,
) -> Result<(usize, RatPoly)> {
    let needed = spec.point_count(r);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let min_sum: i64 = spec
        .weights
        .iter()
        .filter(|&&w| w < 0)
        .map(|&w| w * r as i64)
        .sum();
    let shift = (-min_sum) as usize;
    let mut coeffs: Vec<BigRational> = Vec::new();
    // Walk every lattice point coordinate by coordinate: within each block
    // the coordinates are nonnegative with block sum at most r.
    #[allow(clippy::too_many_arguments)]
    fn walk(
        spec: &PolytopeSpec,
        r: usize,
        block: usize,
        coord: usize,
        offset: usize,
        used: usize,
        partial: i64,
        shift: usize,
        coeffs: &mut Vec<BigRational>,
    ) {
        if block == spec.dims.len() {
            let idx = (partial + shift as i64) as usize;
            if coeffs.len() <= idx {
                coeffs.resize(idx + 1, BigRational::from_integer(0.into()));
            }
            coeffs[idx] += BigRational::one();
            return;
        }
        let dim = spec.dims[block];
        if coord == dim {
            walk(spec, r, block + 1, 0, offset + dim, 0, partial, shift, coeffs);
            return;
        }
        for v in 0..=(r - used) {
            walk(
                spec,
                r,
                block,
                coord + 1,
                offset,
                used + v,
                partial + v as i64 * spec.weights[offset + coord],
                shift,
                coeffs,
            );
        }
    }
    walk(spec, r, 0, 0, 0, 0, 0, shift, &mut coeffs);
    Ok((shift, RatPoly::from_coeffs(coeffs)))
}

/// q_ehrhart for nonnegative weights, returned as an ordinary q-polynomial.
pub fn q_ehrhart(spec: &PolytopeSpec, r: usize, budget: u128) -> Result<RatPoly> {
    let (shift, poly) = q_ehrhart_shifted(spec, r, budget)?;
    assert_eq!(shift, 0, "negative weights produce Laurent terms; use q_ehrhart_shifted");
    Ok(poly)
}

/// Method for computing the bigraded Hilbert series of a Segre coordinate
/// ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegreMethod {
    /// Sum the q-Ehrhart counts of the dilations of the product of simplices.
    Lattice,
    /// Expand A_alpha(t,q) / prod_{j=0}^n (1 - t q^j) as a series.
    ClosedForm,
}

/// Bigraded Hilbert series of the Segre coordinate ring of
/// P^{a_1} x ... x P^{a_k}, truncated at t-degree R.
pub fn segre_hilbert(
    alpha: &Composition,
    trunc: usize,
    method: SegreMethod,
    budget: u128,
) -> Result<BiSeries> {
    match method {
        SegreMethod::Lattice => {
            let spec = PolytopeSpec::segre_weights(alpha);
            let mut rows = Vec::with_capacity(trunc + 1);
            for r in 0..=trunc {
                rows.push(q_ehrhart(&spec, r, budget)?);
            }
            Ok(BiSeries::from_rows(rows))
        }
        SegreMethod::ClosedForm => {
            let exponents: Vec<usize> = (0..=alpha.n()).collect();
            let numerator = BiSeries::from_bipoly(&a_alpha(alpha), trunc);
            Ok(numerator.mul(&inv_product_series(&exponents, trunc)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::rat;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn q_multinomial_examples() {
        assert_eq!(
            q_multinomial(&comp(&[2, 1])),
            RatPoly::from_i64_coeffs(&[1, 1, 1])
        );
        assert_eq!(q_multinomial(&comp(&[5])), RatPoly::one());
        assert_eq!(
            q_multinomial(&comp(&[2, 2])),
            RatPoly::from_i64_coeffs(&[1, 1, 2, 1, 1])
        );
    }

    #[test]
    fn a_alpha_examples() {
        let a21 = a_alpha(&comp(&[2, 1]));
        assert_eq!(a21.display(), "1 + t*q + t*q^2");

        let a22 = a_alpha(&comp(&[2, 2]));
        let mut expected = BiPoly::one();
        expected.add_term(rat(1), 1, 1);
        expected.add_term(rat(2), 1, 2);
        expected.add_term(rat(1), 1, 3);
        expected.add_term(rat(1), 2, 4);
        assert_eq!(a22, expected);

        let a111 = a_alpha(&comp(&[1, 1, 1]));
        assert_eq!(a111.display(), "1 + 2*t*q + 2*t*q^2 + t^2*q^3");
    }

    #[test]
    fn a_alpha_specializes_to_q_multinomial() {
        for n in 1..=6 {
            for alpha in crate::combinat::enumerate_compositions(n) {
                assert_eq!(a_alpha(&alpha).eval_t_one(), q_multinomial(&alpha));
            }
        }
    }

    #[test]
    fn macmahon_small() {
        assert!(macmahon_check(&comp(&[2, 1]), 5).holds);
        assert!(macmahon_check(&comp(&[1, 1, 1]), 8).holds);
        assert!(macmahon_check(&comp(&[4]), 6).holds);
    }

    #[test]
    fn ehrhart_simplex_example() {
        // Delta_2 with weights (1,2) at r=2: six points, 1+q+2q^2+q^3+q^4.
        let spec = PolytopeSpec::new(vec![2], vec![1, 2]).unwrap();
        let p = q_ehrhart(&spec, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(p, RatPoly::from_i64_coeffs(&[1, 1, 2, 1, 1]));
        assert_eq!(p, gaussian_binomial(4, 2));
    }

    #[test]
    fn ehrhart_r_zero_is_one() {
        let spec = PolytopeSpec::new(vec![2, 1], vec![1, 2, 1]).unwrap();
        assert_eq!(q_ehrhart(&spec, 0, DEFAULT_BUDGET).unwrap(), RatPoly::one());
    }

    #[test]
    fn ehrhart_matches_gaussian_binomial() {
        for n in 1..=4 {
            let weights: Vec<i64> = (1..=n as i64).collect();
            let spec = PolytopeSpec::new(vec![n], weights).unwrap();
            for r in 0..=5 {
                assert_eq!(
                    q_ehrhart(&spec, r, DEFAULT_BUDGET).unwrap(),
                    gaussian_binomial(r + n, n)
                );
            }
        }
    }

    #[test]
    fn ehrhart_budget_is_enforced() {
        let spec = PolytopeSpec::new(vec![3], vec![1, 2, 3]).unwrap();
        let err = q_ehrhart(&spec, 10, 5).unwrap_err();
        assert!(matches!(err, crate::Error::BudgetExceeded { .. }));
    }

    #[test]
    fn ehrhart_classical_specialization() {
        let alpha = comp(&[2, 2]);
        let spec = PolytopeSpec::segre_weights(&alpha);
        for r in 0..=4 {
            let p = q_ehrhart(&spec, r, DEFAULT_BUDGET).unwrap();
            let classical: BigRational = p.eval(&rat(1));
            assert_eq!(
                classical,
                BigRational::from_integer((spec.point_count(r) as i64).into())
            );
        }
    }

    #[test]
    fn segre_hilbert_methods_agree_on_ex21() {
        let alpha = comp(&[2, 1]);
        let lat = segre_hilbert(&alpha, 4, SegreMethod::Lattice, DEFAULT_BUDGET).unwrap();
        let closed =
            segre_hilbert(&alpha, 4, SegreMethod::ClosedForm, DEFAULT_BUDGET).unwrap();
        assert_eq!(lat, closed);
        // Row r=1 of the (2,1) series: [3 choose 2]_q [2 choose 1]_q.
        assert_eq!(
            lat.coeff_of_t(1),
            &(&gaussian_binomial(3, 2) * &gaussian_binomial(2, 1))
        );
    }

    #[test]
    fn segre_hilbert_q1_newcomb() {
        // At q=1 the (2,1) series has numerator 1+2t over (1-t)^4.
        let alpha = comp(&[2, 1]);
        let closed =
            segre_hilbert(&alpha, 5, SegreMethod::ClosedForm, DEFAULT_BUDGET).unwrap();
        // (1+2t) * sum_r C(r+3,3) t^r, coefficient of t^r:
        // C(r+3,3) + 2*C(r+2,3).
        for r in 0..=5 {
            let got = closed.coeff_of_t(r).eval(&rat(1));
            let c3 = |m: i64| m * (m + 1) * (m + 2) / 6;
            let expected = c3(r as i64 + 1) + 2 * if r >= 1 { c3(r as i64) } else { 0 };
            assert_eq!(got, rat(expected));
        }
    }
}

//! Cyclotomic fields Q(eta_n) with exact arithmetic.
//!
//! Phi_n is computed by exact division of x^n - 1 by the cyclotomic
//! polynomials of the proper divisors of n. Field elements are polynomials
//! in eta reduced modulo Phi_n; inversion goes through the extended
//! Euclidean algorithm.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::One;

use super::poly::RatPoly;

fn divisors(n: usize) -> Vec<usize> {
    let mut divs = Vec::new();
    for d in 1..=n {
        if n % d == 0 {
            divs.push(d);
        }
    }
    divs
}

fn x_pow_minus_one(n: usize) -> RatPoly {
    let mut coeffs = vec![0i64; n + 1];
    coeffs[0] = -1;
    coeffs[n] = 1;
    RatPoly::from_i64_coeffs(&coeffs)
}

/// The n-th cyclotomic polynomial Phi_n(x).
pub fn cyclotomic_poly(n: usize) -> RatPoly {
    assert!(n >= 1, "cyclotomic_poly requires n >= 1");
    if n == 1 {
        return RatPoly::from_i64_coeffs(&[-1, 1]);
    }
    let mut result = x_pow_minus_one(n);
    for d in divisors(n) {
        if d < n {
            result = result.exact_div(&cyclotomic_poly(d));
        }
    }
    result
}

/// The field Q(eta_n) presented as Q[x]/Phi_n(x).
#[derive(Debug, PartialEq, Eq)]
pub struct CycloField {
    n: usize,
    phi: RatPoly,
}

impl CycloField {
    pub fn new(n: usize) -> Arc<Self> {
        Arc::new(CycloField {
            n,
            phi: cyclotomic_poly(n),
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> &RatPoly {
        &self.phi
    }

    pub fn degree(&self) -> usize {
        self.phi.degree().unwrap()
    }

    pub fn zero(self: &Arc<Self>) -> CycloElem {
        CycloElem {
            field: Arc::clone(self),
            rep: RatPoly::zero(),
        }
    }

    pub fn one(self: &Arc<Self>) -> CycloElem {
        self.element(RatPoly::one())
    }

    pub fn from_rational(self: &Arc<Self>, c: BigRational) -> CycloElem {
        self.element(RatPoly::constant(c))
    }

    /// eta^k, the k-th power of the chosen primitive n-th root of unity.
    pub fn eta_pow(self: &Arc<Self>, k: usize) -> CycloElem {
        self.element(RatPoly::monomial(BigRational::one(), k % self.n))
    }

    /// Build an element from a representative polynomial, reducing mod Phi_n.
    pub fn element(self: &Arc<Self>, rep: RatPoly) -> CycloElem {
        let rep = if rep.degree().is_some_and(|d| d >= self.degree()) {
            rep.div_rem(&self.phi).1
        } else {
            rep
        };
        CycloElem {
            field: Arc::clone(self),
            rep,
        }
    }
}

/// An element of Q(eta_n), stored as its reduced representative.
#[derive(Debug, Clone)]
pub struct CycloElem {
    field: Arc<CycloField>,
    rep: RatPoly,
}

impl CycloElem {
    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn rep(&self) -> &RatPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn add(&self, rhs: &CycloElem) -> CycloElem {
        self.assert_same_field(rhs);
        CycloElem {
            field: Arc::clone(&self.field),
            rep: &self.rep + &rhs.rep,
        }
    }

    pub fn sub(&self, rhs: &CycloElem) -> CycloElem {
        self.assert_same_field(rhs);
        CycloElem {
            field: Arc::clone(&self.field),
            rep: &self.rep - &rhs.rep,
        }
    }

    pub fn mul(&self, rhs: &CycloElem) -> CycloElem {
        self.assert_same_field(rhs);
        self.field.element(&self.rep * &rhs.rep)
    }

    pub fn neg(&self) -> CycloElem {
        CycloElem {
            field: Arc::clone(&self.field),
            rep: -&self.rep,
        }
    }

    /// Multiplicative inverse via extended gcd with Phi_n.
    ///
    /// Panics on zero.
    pub fn inv(&self) -> CycloElem {
        assert!(!self.is_zero(), "inverse of zero in cyclotomic field");
        let (g, s, _) = self.rep.extended_gcd(self.field.modulus());
        assert!(
            g.degree() == Some(0),
            "representative not invertible mod Phi_n"
        );
        let scale = g.coeff(0).recip();
        self.field.element(s.scale(&scale))
    }

    pub fn pow(&self, mut e: usize) -> CycloElem {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        self.field.n == other.field.n && self.rep == other.rep
    }
}

impl Eq for CycloElem {}

impl CycloElem {
    fn assert_same_field(&self, rhs: &CycloElem) {
        assert_eq!(
            self.field.n, rhs.field.n,
            "mixed cyclotomic fields in arithmetic"
        );
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep.display("eta"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::rat;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_poly(1), RatPoly::from_i64_coeffs(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), RatPoly::from_i64_coeffs(&[1, 1]));
        assert_eq!(cyclotomic_poly(3), RatPoly::from_i64_coeffs(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(4), RatPoly::from_i64_coeffs(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(5), RatPoly::from_i64_coeffs(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic_poly(6), RatPoly::from_i64_coeffs(&[1, -1, 1]));
    }

    #[test]
    fn eta_has_multiplicative_order_n() {
        for n in 1..=8 {
            let field = CycloField::new(n);
            let eta = field.eta_pow(1);
            let mut pow = field.one();
            for k in 1..=n {
                pow = pow.mul(&eta);
                if k < n {
                    assert_ne!(pow, field.one(), "eta^{k} = 1 in Q(eta_{n})");
                }
            }
            assert_eq!(pow, field.one());
        }
    }

    #[test]
    fn powers_of_eta_distinct() {
        for n in 1..=8 {
            let field = CycloField::new(n);
            let powers: Vec<_> = (0..n).map(|k| field.eta_pow(k)).collect();
            for i in 0..n {
                for j in (i + 1)..n {
                    assert_ne!(powers[i], powers[j]);
                }
            }
        }
    }

    #[test]
    fn inverse_multiplies_to_one() {
        let field = CycloField::new(5);
        let x = field
            .element(RatPoly::from_i64_coeffs(&[2, -1, 0, 3]))
            .add(&field.from_rational(rat(1)));
        let inv = x.inv();
        assert_eq!(x.mul(&inv), field.one());
    }
}

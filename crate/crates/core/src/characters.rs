//! Symmetric group characters: Murnaghan-Nakayama tables, plethystic
//! principal specializations, the Frobenius character of the projective
//! coinvariant algebra computed three independent ways, the residual
//! character for rectangular compositions, and the free-invariants check.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::combinat::{enumerate_partitions, enumerate_syt, Composition, Perm};
use crate::error::Result;
use crate::exact::bipoly::{product_one_minus_tq, BiPoly};
use crate::exact::poly::{rat, RatPoly};
use crate::qseries::gaussian_binomial;
use crate::quotient::{ambient_trace_q, QuotientAlgebra};

/// Basis labels for symmetric function expansions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Schur,
    Complete,
    Monomial,
    PowerSum,
}

impl Basis {
    fn letter(self) -> char {
        match self {
            Basis::Schur => 's',
            Basis::Complete => 'h',
            Basis::Monomial => 'm',
            Basis::PowerSum => 'p',
        }
    }
}

/// A symmetric function of homogeneous degree n: a finite map from
/// partitions of n to bigraded coefficients, tagged with its basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    n: usize,
    coeffs: BTreeMap<Vec<usize>, BiPoly>,
}

impl SymFunc {
    pub fn zero(basis: Basis, n: usize) -> Self {
        SymFunc {
            basis,
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, lambda: Vec<usize>, c: BiPoly) {
        assert_eq!(lambda.iter().sum::<usize>(), self.n, "index size mismatch");
        if c.is_zero() {
            self.coeffs.remove(&lambda);
        } else {
            self.coeffs.insert(lambda, c);
        }
    }

    pub fn coeff(&self, lambda: &[usize]) -> BiPoly {
        self.coeffs
            .get(lambda)
            .cloned()
            .unwrap_or_else(BiPoly::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &BiPoly)> {
        self.coeffs.iter()
    }

    /// Specialize t = 1 in every coefficient.
    pub fn eval_t_one(&self) -> SymFunc {
        let mut out = SymFunc::zero(self.basis, self.n);
        for (l, c) in &self.coeffs {
            out.set(l.clone(), BiPoly::from_t_rows(&[c.eval_t_one()]));
        }
        out
    }

    /// Text form in largest-partition-first order, e.g. `s[2] + t*q*s[1,1]`.
    pub fn display(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut pieces = Vec::new();
        for lambda in enumerate_partitions(self.n) {
            let Some(c) = self.coeffs.get(&lambda) else {
                continue;
            };
            let name = format!(
                "{}[{}]",
                self.basis.letter(),
                lambda
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            );
            let coeff_str = c.display();
            let piece = if coeff_str == "1" {
                name
            } else if c.num_terms() == 1 && !coeff_str.starts_with('-') {
                format!("{coeff_str}*{name}")
            } else {
                format!("({coeff_str})*{name}")
            };
            pieces.push(piece);
        }
        pieces.join(" + ")
    }

    /// JSON form: map from partition strings like "2,1" to BiPoly JSON.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (l, c) in &self.coeffs {
            let key = l
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",");
            map.insert(key, c.to_json());
        }
        serde_json::Value::Object(map)
    }
}

/// Centralizer order z_mu = prod_i i^{m_i} m_i!.
pub fn centralizer_order(mu: &[usize]) -> u64 {
    let mut z: u64 = 1;
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for &p in mu {
        *counts.entry(p).or_insert(0) += 1;
    }
    for (p, m) in counts {
        for _ in 0..m {
            z *= p as u64;
        }
        for j in 1..=m {
            z *= j;
        }
    }
    z
}

/// Exact character table of S_n computed by the Murnaghan-Nakayama rule
/// on beta-numbers, with class sizes and centralizer orders.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Vec<usize>>,
    chi: Vec<Vec<i64>>,
    z: Vec<u64>,
}

fn beta_numbers(lambda: &[usize]) -> Vec<usize> {
    let len = lambda.len();
    lambda
        .iter()
        .enumerate()
        .map(|(i, &l)| l + (len - 1 - i))
        .collect()
}

fn partition_from_beta(mut beta: Vec<usize>) -> Vec<usize> {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    let mut lambda: Vec<usize> = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (len - 1 - i))
        .collect();
    while lambda.last() == Some(&0) {
        lambda.pop();
    }
    lambda
}

fn murnaghan_nakayama(
    lambda: &[usize],
    mu: &[usize],
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>,
) -> i64 {
    if mu.is_empty() {
        return i64::from(lambda.is_empty());
    }
    if lambda.is_empty() {
        return 0;
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let strip = mu[0];
    let rest = &mu[1..];
    let beta = beta_numbers(lambda);
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < strip || beta.contains(&(b - strip)) {
            continue;
        }
        let height = beta.iter().filter(|&&b2| b - strip < b2 && b2 < b).count();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        let mut new_beta = beta.clone();
        new_beta[i] = b - strip;
        let smaller = partition_from_beta(new_beta);
        total += sign * murnaghan_nakayama(&smaller, rest, memo);
    }
    memo.insert(key, total);
    total
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        assert!((1..=8).contains(&n), "character table supported for n <= 8");
        let partitions = enumerate_partitions(n);
        let mut memo = HashMap::new();
        let chi: Vec<Vec<i64>> = partitions
            .iter()
            .map(|lambda| {
                partitions
                    .iter()
                    .map(|mu| murnaghan_nakayama(lambda, mu, &mut memo))
                    .collect()
            })
            .collect();
        let z: Vec<u64> = partitions.iter().map(|mu| centralizer_order(mu)).collect();
        CharacterTable {
            n,
            partitions,
            chi,
            z,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Vec<usize>] {
        &self.partitions
    }

    pub fn value(&self, lambda: &[usize], mu: &[usize]) -> i64 {
        let li = self
            .partitions
            .iter()
            .position(|p| p == lambda)
            .expect("row partition");
        let mi = self
            .partitions
            .iter()
            .position(|p| p == mu)
            .expect("class partition");
        self.chi[li][mi]
    }

    pub fn centralizer(&self, mu: &[usize]) -> u64 {
        let mi = self
            .partitions
            .iter()
            .position(|p| p == mu)
            .expect("class partition");
        self.z[mi]
    }

    pub fn class_size(&self, mu: &[usize]) -> u64 {
        let fact: u64 = (1..=self.n as u64).product();
        fact / self.centralizer(mu)
    }

    /// Dimension of the irreducible indexed by lambda (number of SYT).
    pub fn dim(&self, lambda: &[usize]) -> u64 {
        self.value(lambda, &vec![1; self.n]) as u64
    }

    /// Row orthogonality: sum over classes of chi^a chi^b / z = delta_ab.
    pub fn orthogonality_holds(&self) -> bool {
        let k = self.partitions.len();
        for a in 0..k {
            for b in 0..k {
                let mut total = BigRational::zero();
                for m in 0..k {
                    total += rat(self.chi[a][m] * self.chi[b][m]) / rat(self.z[m] as i64);
                }
                let expected = if a == b { rat(1) } else { rat(0) };
                if total != expected {
                    return false;
                }
            }
        }
        true
    }
}

/// The principal specialization s_lambda evaluated at the alphabet of
/// q-powers encoded by f (exponent j with multiplicity f_j), via power
/// sums: p_k picks up f(q^k).
///
/// The result provably has nonnegative integer coefficients, which is
/// asserted.
pub fn principal_spec(lambda: &[usize], f: &RatPoly, table: &CharacterTable) -> RatPoly {
    let n: usize = lambda.iter().sum();
    assert_eq!(n, table.n());
    debug_assert!(f.has_nonneg_integer_coeffs(), "f must encode an alphabet");
    let mut total = RatPoly::zero();
    for nu in table.partitions() {
        let chi = table.value(lambda, nu);
        if chi == 0 {
            continue;
        }
        let mut prod = RatPoly::constant(rat(chi) / rat(table.centralizer(nu) as i64));
        for &part in nu {
            if f.is_zero() {
                prod = RatPoly::zero();
                break;
            }
            prod = &prod * &f.stretch(part);
        }
        total = &total + &prod;
    }
    assert!(
        total.has_nonneg_integer_coeffs(),
        "principal specialization must have nonnegative integer coefficients"
    );
    total
}

/// Method selector for the character of the projective coinvariant algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharMethod {
    /// Sum t^des q^maj over standard Young tableaux per shape.
    Syt,
    /// Multiply the Koszul factor into the graded characters of the ambient
    /// pieces, truncated at the t-degree of the finite answer.
    Koszul,
    /// Decompose exact quotient traces over conjugacy classes.
    Trace,
}

/// Frobenius character of P_n in the Schur basis.
pub fn char_p(n: usize, method: CharMethod) -> Result<SymFunc> {
    assert!(n >= 1);
    let mut out = SymFunc::zero(Basis::Schur, n);
    match method {
        CharMethod::Syt => {
            for lambda in enumerate_partitions(n) {
                let mut c = BiPoly::zero();
                for (_, des, maj) in enumerate_syt(&lambda) {
                    c.add_term(rat(1), des, maj);
                }
                out.set(lambda, c);
            }
        }
        CharMethod::Koszul => {
            let table = CharacterTable::new(n);
            let trunc = n - 1;
            let exponents: Vec<usize> = (0..=n).collect();
            let koszul = product_one_minus_tq(&exponents);
            for lambda in enumerate_partitions(n) {
                let specs: Vec<RatPoly> = (0..=trunc)
                    .map(|r| {
                        principal_spec(&lambda, &crate::qseries::q_int(r + 1), &table)
                    })
                    .collect();
                let mut c = BiPoly::zero();
                for d in 0..=trunc {
                    for s in 0..=d {
                        let factor = koszul.coeff_of_t(s);
                        if factor.is_zero() {
                            continue;
                        }
                        let contrib = &factor * &specs[d - s];
                        for (j, v) in contrib.coeffs().iter().enumerate() {
                            c.add_term(v.clone(), d, j);
                        }
                    }
                }
                out.set(lambda, c);
            }
        }
        CharMethod::Trace => {
            let table = CharacterTable::new(n);
            let mut qa = QuotientAlgebra::new(Composition::ones(n));
            let support = qa.hilbert()?;
            let fact = rat((1..=n as i64).product());
            for lambda in enumerate_partitions(n) {
                let mut c = BiPoly::zero();
                for (r, e, _) in support.terms() {
                    let mut total = BigRational::zero();
                    for mu in table.partitions() {
                        let tr = qa.trace_class(mu, r, e);
                        total += rat(table.class_size(mu) as i64)
                            * rat(table.value(&lambda, mu))
                            * tr;
                    }
                    let mult = total / &fact;
                    assert!(
                        mult.is_integer() && !mult.is_negative(),
                        "multiplicities must be nonnegative integers"
                    );
                    c.add_term(mult, r, e);
                }
                out.set(lambda, c);
            }
        }
    }
    Ok(out)
}

/// Method selector for the residual character of P_{(m^k)} under the slot
/// permutation action of S_k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidualMethod {
    /// Koszul factor times plethystic sums over partitions of k.
    Plethysm,
    /// Decompose exact quotient traces of slot permutations.
    Trace,
}

/// Bigraded S_k-character of P_{(m^k)} in the Schur basis (partitions
/// of k).
pub fn residual_char(k: usize, m: usize, method: ResidualMethod) -> Result<SymFunc> {
    assert!(k >= 1 && m >= 1);
    let n = k * m;
    let alpha = Composition::rectangular(m, k);
    let mut out = SymFunc::zero(Basis::Schur, k);
    match method {
        ResidualMethod::Plethysm => {
            // Truncate at the vanishing t-degree of the quotient Hilbert
            // series, computed first.
            let hilbert = crate::quotient::hilbert_p(&alpha)?;
            let trunc = hilbert.t_degree().unwrap_or(0);
            let table = CharacterTable::new(k);
            let exponents: Vec<usize> = (0..=n).collect();
            let koszul = product_one_minus_tq(&exponents);
            for mu in enumerate_partitions(k) {
                let specs: Vec<RatPoly> = (0..=trunc)
                    .map(|i| principal_spec(&mu, &gaussian_binomial(i + m, m), &table))
                    .collect();
                let mut c = BiPoly::zero();
                for d in 0..=trunc {
                    for s in 0..=d {
                        let factor = koszul.coeff_of_t(s);
                        if factor.is_zero() {
                            continue;
                        }
                        let contrib = &factor * &specs[d - s];
                        for (j, v) in contrib.coeffs().iter().enumerate() {
                            c.add_term(v.clone(), d, j);
                        }
                    }
                }
                out.set(mu, c);
            }
        }
        ResidualMethod::Trace => {
            let table = CharacterTable::new(k);
            let mut qa = QuotientAlgebra::new(alpha);
            let support = qa.hilbert()?;
            let fact = rat((1..=k as i64).product());
            // Slot traces are class functions of S_k.
            let mut class_traces: HashMap<(Vec<usize>, usize, usize), BigRational> =
                HashMap::new();
            for lambda in enumerate_partitions(k) {
                let mut c = BiPoly::zero();
                for (r, e, _) in support.terms() {
                    let mut total = BigRational::zero();
                    for nu in table.partitions() {
                        let key = (nu.clone(), r, e);
                        let tr = match class_traces.get(&key) {
                            Some(v) => v.clone(),
                            None => {
                                let g = Perm::from_cycle_type(nu);
                                let v = qa.trace_slots(&g, r, e)?;
                                class_traces.insert(key, v.clone());
                                v
                            }
                        };
                        total += rat(table.class_size(nu) as i64)
                            * rat(table.value(&lambda, nu))
                            * tr;
                    }
                    let mult = total / &fact;
                    assert!(
                        mult.is_integer() && !mult.is_negative(),
                        "multiplicities must be nonnegative integers"
                    );
                    c.add_term(mult, r, e);
                }
                out.set(lambda, c);
            }
        }
    }
    Ok(out)
}

/// One bidegree of the free-invariants comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantsFreeEntry {
    pub r: usize,
    pub e: usize,
    pub invariant_dim: u64,
    pub monomial_count: u64,
}

/// Report for the check that the invariant generator sums generate a free
/// polynomial subalgebra of the ambient hypercube algebra.
#[derive(Debug, Clone)]
pub struct InvariantsFreeReport {
    pub n: usize,
    pub r_max: usize,
    pub ok: bool,
    pub entries: Vec<InvariantsFreeEntry>,
    pub failures: Vec<InvariantsFreeEntry>,
}

/// Count monomials e_0^{c_0} ... e_n^{c_n} with sum c_j = r and
/// sum j*c_j = e.
fn free_monomial_count(n: usize, r: usize, e: usize) -> u64 {
    fn rec(j: usize, n: usize, rem_r: usize, rem_e: usize) -> u64 {
        if j > n {
            return u64::from(rem_r == 0 && rem_e == 0);
        }
        let mut total = 0;
        for c in 0..=rem_r {
            if c * j > rem_e {
                break;
            }
            total += rec(j + 1, n, rem_r - c, rem_e - c * j);
        }
        total
    }
    rec(0, n, r, e)
}

/// For each bidegree (r, e) with r <= r_max: the dimension of the
/// S_n-invariant subspace of the ambient piece (by averaging ambient
/// traces) must match the number of monomials in the invariant generator
/// sums of that bidegree.
pub fn invariants_free_check(n: usize, r_max: usize) -> InvariantsFreeReport {
    let table = CharacterTable::new(n);
    let fact = rat((1..=n as i64).product());
    let mut entries = Vec::new();
    let mut failures = Vec::new();
    for r in 0..=r_max {
        let traces: Vec<RatPoly> = table
            .partitions()
            .iter()
            .map(|mu| ambient_trace_q(mu, r))
            .collect();
        for e in 0..=(n * r) {
            let mut total = BigRational::zero();
            for (mu, tr) in table.partitions().iter().zip(&traces) {
                total += rat(table.class_size(mu) as i64) * tr.coeff(e);
            }
            let avg = total / &fact;
            assert!(avg.is_integer() && !avg.is_negative());
            let invariant_dim = avg.to_integer().to_u64().expect("fits u64");
            let monomial_count = free_monomial_count(n, r, e);
            let entry = InvariantsFreeEntry {
                r,
                e,
                invariant_dim,
                monomial_count,
            };
            if invariant_dim != monomial_count {
                failures.push(entry.clone());
            }
            entries.push(entry);
        }
    }
    InvariantsFreeReport {
        n,
        r_max,
        ok: failures.is_empty(),
        entries,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::q_int;

    #[test]
    fn character_table_small_values() {
        let t3 = CharacterTable::new(3);
        // chi^{(2,1)} on classes (3), (2,1), (1,1,1) is (-1, 0, 2).
        assert_eq!(t3.value(&[2, 1], &[3]), -1);
        assert_eq!(t3.value(&[2, 1], &[2, 1]), 0);
        assert_eq!(t3.value(&[2, 1], &[1, 1, 1]), 2);
    }

    #[test]
    fn trivial_and_sign_rows() {
        for n in 1..=6 {
            let t = CharacterTable::new(n);
            for mu in t.partitions() {
                assert_eq!(t.value(&[n], mu), 1);
                let sign = if (n - mu.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(t.value(&vec![1; n], mu), sign, "mu={mu:?}");
            }
        }
    }

    #[test]
    fn orthogonality() {
        for n in 1..=7 {
            assert!(CharacterTable::new(n).orthogonality_holds(), "n={n}");
        }
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(centralizer_order(&[1, 1, 1]), 6);
        assert_eq!(centralizer_order(&[2, 1]), 2);
        assert_eq!(centralizer_order(&[3]), 3);
        assert_eq!(centralizer_order(&[2, 2, 1]), 8);
    }

    #[test]
    fn principal_spec_examples() {
        let t1 = CharacterTable::new(1);
        let f = RatPoly::from_i64_coeffs(&[1, 2, 1]);
        assert_eq!(principal_spec(&[1], &f, &t1), f);

        let t2 = CharacterTable::new(2);
        let two = q_int(2);
        assert_eq!(
            principal_spec(&[2], &two, &t2),
            RatPoly::from_i64_coeffs(&[1, 1, 1])
        );
        assert_eq!(
            principal_spec(&[1, 1], &two, &t2),
            RatPoly::from_i64_coeffs(&[0, 1])
        );
    }

    #[test]
    fn principal_spec_nonneg_integer_for_small_data() {
        for n in 1..=5 {
            let t = CharacterTable::new(n);
            for lambda in enumerate_partitions(n) {
                for r in 0..=4 {
                    // The assert inside principal_spec is the check.
                    principal_spec(&lambda, &q_int(r + 1), &t);
                }
            }
        }
    }

    #[test]
    fn char_p_small_closed_forms() {
        let c1 = char_p(1, CharMethod::Syt).unwrap();
        assert_eq!(c1.display(), "s[1]");

        let c2 = char_p(2, CharMethod::Syt).unwrap();
        assert_eq!(c2.display(), "s[2] + t*q*s[1,1]");

        let c3 = char_p(3, CharMethod::Syt).unwrap();
        assert_eq!(
            c3.display(),
            "s[3] + (t*q + t*q^2)*s[2,1] + t^2*q^3*s[1,1,1]"
        );
    }

    #[test]
    fn char_p_methods_agree_small() {
        for n in 1..=4 {
            let syt = char_p(n, CharMethod::Syt).unwrap();
            let koszul = char_p(n, CharMethod::Koszul).unwrap();
            let trace = char_p(n, CharMethod::Trace).unwrap();
            assert_eq!(syt, koszul, "syt vs koszul at n={n}");
            assert_eq!(syt, trace, "syt vs trace at n={n}");
        }
    }

    #[test]
    fn char_p_specializations() {
        for n in 1..=5 {
            let c = char_p(n, CharMethod::Syt).unwrap();
            let table = CharacterTable::new(n);
            // t=1, q=1: multiplicity of lambda is f^lambda; the square sum
            // is n!.
            let mut total = 0u64;
            for lambda in enumerate_partitions(n) {
                let mult = c.coeff(&lambda).eval_one_one();
                assert_eq!(mult, rat(table.dim(&lambda) as i64));
                total += table.dim(&lambda) * table.dim(&lambda);
            }
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn residual_char_trivial_cases() {
        // k=1: the character is the scalar 1.
        let c = residual_char(1, 3, ResidualMethod::Plethysm).unwrap();
        assert_eq!(c.display(), "s[1]");
        let c = residual_char(1, 3, ResidualMethod::Trace).unwrap();
        assert_eq!(c.display(), "s[1]");

        // k=2, m=1: P_{(1,1)} = P_2 with the full S_2 action.
        let c = residual_char(2, 1, ResidualMethod::Trace).unwrap();
        assert_eq!(c.display(), "s[2] + t*q*s[1,1]");
        let p = char_p(2, CharMethod::Syt).unwrap();
        assert_eq!(c, p);
    }

    #[test]
    fn residual_char_methods_agree_2_2() {
        let plethysm = residual_char(2, 2, ResidualMethod::Plethysm).unwrap();
        let trace = residual_char(2, 2, ResidualMethod::Trace).unwrap();
        assert_eq!(plethysm, trace);
        // Dimension census at t=q=1: both irreducibles of S_2 are
        // one-dimensional, so the multiplicities sum to dim P_{(2,2)} = 6.
        let total =
            plethysm.coeff(&[2]).eval_one_one() + plethysm.coeff(&[1, 1]).eval_one_one();
        assert_eq!(total, rat(6));
    }

    #[test]
    fn invariants_free_small() {
        // (r,e) = (0,0): both sides 1.
        let rep = invariants_free_check(2, 0);
        assert!(rep.ok);
        assert_eq!(rep.entries[0].invariant_dim, 1);
        assert_eq!(rep.entries[0].monomial_count, 1);

        // n=2, r=1: invariant dims (1,1,1) matching the three generator
        // sums of q-degrees 0, 1, 2.
        let rep = invariants_free_check(2, 1);
        assert!(rep.ok);
        let row: Vec<u64> = rep
            .entries
            .iter()
            .filter(|en| en.r == 1)
            .map(|en| en.invariant_dim)
            .collect();
        assert_eq!(row, vec![1, 1, 1]);

        // n=3, r <= 3.
        assert!(invariants_free_check(3, 3).ok);
    }

    #[test]
    fn free_monomial_count_multisets() {
        // n=3, r=2: multisets of size 2 from {0,1,2,3} by sum.
        let counts: Vec<u64> = (0..=6).map(|e| free_monomial_count(3, 2, e)).collect();
        assert_eq!(counts, vec![1, 1, 2, 2, 2, 1, 1]);
    }
}

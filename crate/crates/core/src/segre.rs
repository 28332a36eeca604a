//! The bigraded Segre coordinate algebras in their monomial model.
//!
//! A monomial of first degree r is a k-tuple of partitions, one per
//! projective factor, each with at most r parts bounded by the factor's
//! dimension. Multiplying by the generator indexed by a profile
//! (j_1, ..., j_k) inserts the part j_i into the i-th partition (skipping
//! zeros) and increments r. The toric relations hold definitionally in this
//! model, so no Groebner machinery is needed anywhere.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinat::{Composition, Perm};
use crate::error::{Error, Result};
use crate::exact::poly::RatPoly;
use crate::qseries::gaussian_binomial;

/// A monomial of the algebra: first degree r and one partition per factor.
///
/// The q-degree is the total size of the partitions. Ordering is by first
/// degree, then lexicographic on the zero-padded concatenation of the
/// partitions, which makes downstream matrices deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SegreMonomial {
    r: usize,
    parts: Vec<Vec<usize>>,
}

impl SegreMonomial {
    pub fn unit(num_factors: usize) -> Self {
        SegreMonomial {
            r: 0,
            parts: vec![Vec::new(); num_factors],
        }
    }

    pub fn new(r: usize, parts: Vec<Vec<usize>>) -> Self {
        for p in &parts {
            debug_assert!(p.windows(2).all(|w| w[0] >= w[1]), "parts must descend");
            debug_assert!(p.len() <= r);
        }
        SegreMonomial { r, parts }
    }

    pub fn first_degree(&self) -> usize {
        self.r
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn q_degree(&self) -> usize {
        self.parts.iter().map(|p| p.iter().sum::<usize>()).sum()
    }

    pub fn mul(&self, other: &SegreMonomial) -> SegreMonomial {
        assert_eq!(self.parts.len(), other.parts.len());
        let parts = self
            .parts
            .iter()
            .zip(&other.parts)
            .map(|(a, b)| {
                let mut merged: Vec<usize> = a.iter().chain(b).copied().collect();
                merged.sort_unstable_by(|x, y| y.cmp(x));
                merged
            })
            .collect();
        SegreMonomial {
            r: self.r + other.r,
            parts,
        }
    }

    fn padded_key(&self) -> Vec<usize> {
        let mut key = Vec::with_capacity(self.parts.len() * self.r);
        for p in &self.parts {
            key.extend_from_slice(p);
            key.extend(std::iter::repeat(0).take(self.r - p.len()));
        }
        key
    }

    /// Text form, e.g. `r=2; [2,1|1]`.
    pub fn display(&self) -> String {
        let factors: Vec<String> = self
            .parts
            .iter()
            .map(|p| {
                p.iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        format!("r={}; [{}]", self.r, factors.join("|"))
    }
}

impl PartialOrd for SegreMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SegreMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.r
            .cmp(&other.r)
            .then_with(|| self.padded_key().cmp(&other.padded_key()))
    }
}

/// A generator y_I, indexed by the profile (j_1, ..., j_k) of the
/// sub-multiset I; its bidegree is (1, |I|).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SegreGenerator {
    profile: Vec<usize>,
}

impl SegreGenerator {
    pub fn new(profile: Vec<usize>, alpha: &Composition) -> Result<Self> {
        if profile.len() != alpha.k()
            || profile.iter().zip(alpha.parts()).any(|(&j, &a)| j > a)
        {
            return Err(Error::BadInput(format!(
                "profile {:?} not a sub-multiset profile for alpha={}",
                profile,
                alpha.display()
            )));
        }
        Ok(SegreGenerator { profile })
    }

    pub fn profile(&self) -> &[usize] {
        &self.profile
    }

    /// |I| = sum of the profile; the generator has bidegree (1, |I|).
    pub fn size(&self) -> usize {
        self.profile.iter().sum()
    }

    pub fn to_monomial(&self) -> SegreMonomial {
        SegreMonomial {
            r: 1,
            parts: self
                .profile
                .iter()
                .map(|&j| if j > 0 { vec![j] } else { Vec::new() })
                .collect(),
        }
    }
}

/// All generators of T_alpha in lexicographic profile order.
pub fn generators(alpha: &Composition) -> Vec<SegreGenerator> {
    let mut out = Vec::new();
    let mut profile = vec![0usize; alpha.k()];
    loop {
        out.push(SegreGenerator {
            profile: profile.clone(),
        });
        // Odometer over 0..=alpha_i per slot.
        let mut i = alpha.k();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if profile[i] < alpha.parts()[i] {
                profile[i] += 1;
                for v in profile.iter_mut().skip(i + 1) {
                    *v = 0;
                }
                break;
            }
        }
    }
}

/// Multiply a generator into a monomial: insert the part j_i into the i-th
/// partition for each i with j_i > 0, and increment the first degree.
pub fn multiply_generator(g: &SegreGenerator, m: &SegreMonomial) -> SegreMonomial {
    g.to_monomial().mul(m)
}

/// A homogeneous element of first degree r: a rational combination of
/// monomials sharing that first degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    r: usize,
    terms: BTreeMap<SegreMonomial, BigRational>,
}

impl AlgebraElement {
    pub fn zero(r: usize) -> Self {
        AlgebraElement {
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_monomial(m: SegreMonomial) -> Self {
        let r = m.first_degree();
        let mut terms = BTreeMap::new();
        terms.insert(m, BigRational::one());
        AlgebraElement { r, terms }
    }

    pub fn first_degree(&self) -> usize {
        self.r
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SegreMonomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: SegreMonomial, c: BigRational) {
        assert_eq!(m.first_degree(), self.r, "mixed first degrees");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.r, rhs.r);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.r, rhs.r);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.r + rhs.r);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn map_monomials(&self, f: impl Fn(&SegreMonomial) -> SegreMonomial) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.r);
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }
}

/// The invariant generator sum of bidegree (1, l): all y_I with |I| = l,
/// coefficient 1. For alpha = (1^n) these are the elements usually written
/// with e-tilde; in general they are the f-tilde sums.
pub fn e_tilde(alpha: &Composition, l: usize) -> AlgebraElement {
    assert!(l <= alpha.n(), "q-degree of a generator is at most n");
    let mut out = AlgebraElement::zero(1);
    for g in generators(alpha) {
        if g.size() == l {
            out.add_term(g.to_monomial(), BigRational::one());
        }
    }
    out
}

/// Partitions with at most `max_parts` parts, each at most `max_part`,
/// grouped by size: result[s] lists the partitions of size s in descending
/// lexicographic order.
fn partitions_in_box(max_parts: usize, max_part: usize) -> Vec<Vec<Vec<usize>>> {
    let mut by_size: Vec<Vec<Vec<usize>>> = vec![Vec::new(); max_parts * max_part + 1];
    fn rec(
        remaining_parts: usize,
        max_part: usize,
        current: &mut Vec<usize>,
        size: usize,
        by_size: &mut Vec<Vec<Vec<usize>>>,
    ) {
        by_size[size].push(current.clone());
        if remaining_parts == 0 {
            return;
        }
        let bound = current.last().copied().unwrap_or(max_part);
        for p in (1..=bound).rev() {
            current.push(p);
            rec(remaining_parts - 1, max_part, current, size + p, by_size);
            current.pop();
        }
    }
    let mut current = Vec::new();
    rec(max_parts, max_part, &mut current, 0, &mut by_size);
    by_size
}

/// Ordered basis of the first-degree-r piece of T_alpha, grouped by
/// q-degree (ascending), canonically ordered within each q-degree.
pub fn piece_basis(alpha: &Composition, r: usize) -> Vec<SegreMonomial> {
    let mut out = Vec::new();
    for e in 0..=(alpha.n() * r) {
        out.extend(piece_basis_bidegree(alpha, r, e));
    }
    out
}

/// Ordered basis of the bidegree-(r, e) piece of T_alpha.
pub fn piece_basis_bidegree(alpha: &Composition, r: usize, e: usize) -> Vec<SegreMonomial> {
    let per_factor: Vec<Vec<Vec<Vec<usize>>>> = alpha
        .parts()
        .iter()
        .map(|&a| partitions_in_box(r, a))
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<Vec<usize>> = Vec::with_capacity(alpha.k());
    fn rec(
        per_factor: &[Vec<Vec<Vec<usize>>>],
        factor: usize,
        remaining: usize,
        r: usize,
        chosen: &mut Vec<Vec<usize>>,
        out: &mut Vec<SegreMonomial>,
    ) {
        if factor == per_factor.len() {
            if remaining == 0 {
                out.push(SegreMonomial {
                    r,
                    parts: chosen.clone(),
                });
            }
            return;
        }
        let table = &per_factor[factor];
        for s in 0..=remaining.min(table.len() - 1) {
            for p in &table[s] {
                chosen.push(p.clone());
                rec(per_factor, factor + 1, remaining - s, r, chosen, out);
                chosen.pop();
            }
        }
    }
    rec(&per_factor, 0, e, r, &mut chosen, &mut out);
    out.sort();
    out
}

/// Per-q-degree census of the first-degree-r piece: the counts must match
/// the coefficients of prod_i [r+a_i choose a_i]_q.
pub fn piece_census(alpha: &Composition, r: usize) -> RatPoly {
    let mut row = RatPoly::one();
    for &a in alpha.parts() {
        row = &row * &gaussian_binomial(r + a, a);
    }
    row
}

/// The image of the generator with the given profile under the invariant
/// embedding into T_{(1^n)}: the sum over all choices of j_i indices from
/// the i-th consecutive block of the corresponding square-free monomial.
pub fn chi_alpha_image(alpha: &Composition, g: &SegreGenerator) -> AlgebraElement {
    let n = alpha.n();
    let blocks = alpha.blocks();
    let mut out = AlgebraElement::zero(1);
    // Iterate over one subset of each block with the prescribed size.
    fn subsets(block: &[usize], size: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(
            block: &[usize],
            size: usize,
            start: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if cur.len() == size {
                out.push(cur.clone());
                return;
            }
            for i in start..block.len() {
                cur.push(block[i]);
                rec(block, size, i + 1, cur, out);
                cur.pop();
            }
        }
        rec(block, size, 0, &mut cur, &mut out);
        out
    }
    let choices: Vec<Vec<Vec<usize>>> = blocks
        .iter()
        .zip(g.profile())
        .map(|(block, &j)| {
            let indices: Vec<usize> = block.clone().collect();
            subsets(&indices, j)
        })
        .collect();
    let mut selection = vec![0usize; choices.len()];
    loop {
        let mut exponents = vec![0usize; n];
        for (b, &sel) in selection.iter().enumerate() {
            for &i in &choices[b][sel] {
                exponents[i] = 1;
            }
        }
        let parts: Vec<Vec<usize>> = exponents
            .iter()
            .map(|&e| if e > 0 { vec![1] } else { Vec::new() })
            .collect();
        out.add_term(SegreMonomial { r: 1, parts }, BigRational::one());
        // Advance the odometer over choice indices.
        let mut b = choices.len();
        loop {
            if b == 0 {
                return out;
            }
            b -= 1;
            if selection[b] + 1 < choices[b].len() {
                selection[b] += 1;
                for s in selection.iter_mut().skip(b + 1) {
                    *s = 0;
                }
                break;
            }
        }
    }
}

/// The S_n action on T_{(1^n)}: permute the exponent coordinates.
pub fn s_n_action(g: &Perm, m: &SegreMonomial) -> SegreMonomial {
    let mut parts = vec![Vec::new(); m.parts.len()];
    for (i, p) in m.parts.iter().enumerate() {
        parts[g.apply(i)] = p.clone();
    }
    SegreMonomial { r: m.r, parts }
}

/// The residual S_k action on T_{(m^k)}: permute the k partition slots.
/// Rejects non-rectangular compositions.
pub fn slot_action(
    alpha: &Composition,
    g: &Perm,
    m: &SegreMonomial,
) -> Result<SegreMonomial> {
    if !alpha.is_rectangular() {
        return Err(Error::NotRectangular {
            alpha: alpha.display(),
        });
    }
    assert_eq!(g.n(), alpha.k());
    let mut parts = vec![Vec::new(); m.parts.len()];
    for (i, p) in m.parts.iter().enumerate() {
        parts[g.apply(i)] = p.clone();
    }
    Ok(SegreMonomial { r: m.r, parts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::enumerate_compositions;
    use crate::exact::poly::rat;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn piece_basis_small_cases() {
        // alpha=(1,1), r=1: 4 monomials with q-degrees 0,1,1,2.
        let alpha = comp(&[1, 1]);
        let basis = piece_basis(&alpha, 1);
        let degs: Vec<usize> = basis.iter().map(SegreMonomial::q_degree).collect();
        assert_eq!(degs, vec![0, 1, 1, 2]);

        // Any alpha at r=0: single empty monomial.
        let basis = piece_basis(&comp(&[3, 2]), 0);
        assert_eq!(basis, vec![SegreMonomial::unit(2)]);

        // alpha=(2,1), r=1: 6 monomials with census (1,2,2,1).
        let alpha = comp(&[2, 1]);
        let basis = piece_basis(&alpha, 1);
        assert_eq!(basis.len(), 6);
        let mut counts = vec![0usize; 4];
        for m in &basis {
            counts[m.q_degree()] += 1;
        }
        assert_eq!(counts, vec![1, 2, 2, 1]);
    }

    #[test]
    fn census_matches_gaussian_product() {
        for n in 1..=5 {
            for alpha in enumerate_compositions(n) {
                for r in 0..=3 {
                    let basis = piece_basis(&alpha, r);
                    let census = piece_census(&alpha, r);
                    let mut counts =
                        vec![BigRational::from_integer(0.into()); alpha.n() * r + 1];
                    for m in &basis {
                        counts[m.q_degree()] += BigRational::one();
                    }
                    for (e, c) in counts.iter().enumerate() {
                        assert_eq!(*c, census.coeff(e), "alpha={:?} r={r} e={e}", alpha);
                    }
                }
            }
        }
    }

    #[test]
    fn generator_multiplication() {
        let alpha = comp(&[2, 1]);
        let unit = SegreMonomial::unit(2);
        let empty = SegreGenerator::new(vec![0, 0], &alpha).unwrap();
        let m = multiply_generator(&empty, &unit);
        assert_eq!(m.first_degree(), 1);
        assert_eq!(m.q_degree(), 0);

        let g = SegreGenerator::new(vec![2, 1], &alpha).unwrap();
        let m = multiply_generator(&g, &unit);
        assert_eq!(m.parts(), &[vec![2], vec![1]]);
        assert_eq!((m.first_degree(), m.q_degree()), (1, 3));
        assert_eq!(m.display(), "r=1; [2|1]");
    }

    #[test]
    fn toric_relations_hold_definitionally() {
        // Pairs with the same per-factor profile multiset land on the same
        // monomial.
        for n in 1..=4 {
            for alpha in enumerate_compositions(n) {
                let gens = generators(&alpha);
                for g1 in &gens {
                    for g2 in &gens {
                        for g3 in &gens {
                            for g4 in &gens {
                                let equivalent = (0..alpha.k()).all(|i| {
                                    let mut a =
                                        [g1.profile()[i], g2.profile()[i]];
                                    let mut b =
                                        [g3.profile()[i], g4.profile()[i]];
                                    a.sort_unstable();
                                    b.sort_unstable();
                                    a == b
                                });
                                if equivalent {
                                    let m12 = g1.to_monomial().mul(&g2.to_monomial());
                                    let m34 = g3.to_monomial().mul(&g4.to_monomial());
                                    assert_eq!(m12, m34);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn monomial_multiplication_commutes() {
        let alpha = comp(&[3, 2]);
        let basis = piece_basis(&alpha, 2);
        for a in basis.iter().take(8) {
            for b in basis.iter().take(8) {
                assert_eq!(a.mul(b), b.mul(a));
            }
        }
    }

    #[test]
    fn e_tilde_extremes() {
        let alpha = comp(&[1, 1, 1]);
        assert_eq!(e_tilde(&alpha, 0).num_terms(), 1);
        assert_eq!(e_tilde(&alpha, 3).num_terms(), 1);
        assert_eq!(e_tilde(&alpha, 1).num_terms(), 3);
    }

    #[test]
    fn chi_alpha_basics() {
        let alpha = comp(&[2, 1]);
        // I = (0,0): the empty generator maps to the single empty monomial.
        let g = SegreGenerator::new(vec![0, 0], &alpha).unwrap();
        let img = chi_alpha_image(&alpha, &g);
        assert_eq!(img.num_terms(), 1);

        // I = (1,0): two singleton choices in the block {1,2}.
        let g = SegreGenerator::new(vec![1, 0], &alpha).unwrap();
        let img = chi_alpha_image(&alpha, &g);
        assert_eq!(img.num_terms(), 2);
        for (m, c) in img.terms() {
            assert_eq!(m.q_degree(), 1);
            assert_eq!(*c, rat(1));
        }
    }

    #[test]
    fn chi_alpha_sums_to_e_tilde() {
        for n in 1..=5 {
            for alpha in enumerate_compositions(n) {
                let ones = Composition::ones(n);
                for l in 0..=n {
                    let mut total = AlgebraElement::zero(1);
                    for g in generators(&alpha) {
                        if g.size() == l {
                            total = total.add(&chi_alpha_image(&alpha, &g));
                        }
                    }
                    assert_eq!(total, e_tilde(&ones, l), "alpha={:?} l={l}", alpha);
                }
            }
        }
    }

    #[test]
    fn chi_alpha_image_is_invariant() {
        for n in 1..=5 {
            for alpha in enumerate_compositions(n) {
                for g in generators(&alpha) {
                    let img = chi_alpha_image(&alpha, &g);
                    for perm in crate::combinat::young_subgroup_elements(&alpha) {
                        let acted = img.map_monomials(|m| s_n_action(&perm, m));
                        assert_eq!(acted, img);
                    }
                }
            }
        }
    }

    #[test]
    fn chi_alpha_respects_relations() {
        // Products of images of equivalent generator pairs agree in the
        // monomial model of T_n (equality is modulo the toric ideal).
        for n in 1..=4 {
            for alpha in enumerate_compositions(n) {
                let gens = generators(&alpha);
                let images: Vec<AlgebraElement> = gens
                    .iter()
                    .map(|g| chi_alpha_image(&alpha, g))
                    .collect();
                for (i1, g1) in gens.iter().enumerate() {
                    for (i2, g2) in gens.iter().enumerate() {
                        for (i3, g3) in gens.iter().enumerate() {
                            for (i4, g4) in gens.iter().enumerate() {
                                let equivalent = (0..alpha.k()).all(|i| {
                                    let mut a =
                                        [g1.profile()[i], g2.profile()[i]];
                                    let mut b =
                                        [g3.profile()[i], g4.profile()[i]];
                                    a.sort_unstable();
                                    b.sort_unstable();
                                    a == b
                                });
                                if equivalent {
                                    let p12 = images[i1].mul(&images[i2]);
                                    let p34 = images[i3].mul(&images[i4]);
                                    assert_eq!(p12, p34);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn slot_action_requires_rectangular() {
        let alpha = comp(&[2, 1]);
        let g = Perm::from_images(vec![1, 0]);
        let m = SegreMonomial::unit(2);
        assert!(slot_action(&alpha, &g, &m).is_err());

        let alpha = comp(&[2, 2]);
        let m = SegreMonomial::new(2, vec![vec![2, 1], vec![1]]);
        let swapped = slot_action(&alpha, &g, &m).unwrap();
        assert_eq!(swapped.parts(), &[vec![1], vec![2, 1]]);
    }

    #[test]
    fn s2_swap_trace_on_degree_one() {
        // The swap fixes (0,0) and (1,1) and exchanges (1,0) with (0,1):
        // graded trace 1 + q^2 = [2]_{q^2}.
        let alpha = comp(&[1, 1]);
        let g = Perm::from_images(vec![1, 0]);
        let mut trace = RatPoly::zero();
        for m in piece_basis(&alpha, 1) {
            if s_n_action(&g, &m) == m {
                trace = &trace + &RatPoly::monomial(BigRational::one(), m.q_degree());
            }
        }
        assert_eq!(trace, RatPoly::from_i64_coeffs(&[1, 0, 1]));
    }

    #[test]
    fn e_tilde_is_fixed_by_s_n() {
        let alpha = comp(&[1, 1, 1]);
        for l in 0..=3 {
            let et = e_tilde(&alpha, l);
            for g in crate::combinat::enumerate_perms(3) {
                assert_eq!(et.map_monomials(|m| s_n_action(&g, m)), et);
            }
        }
    }
}

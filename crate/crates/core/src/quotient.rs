//! Exact computation of the bigraded quotients P_alpha = T_alpha / <f_0,
//! ..., f_n>: graded pieces, ideal ranks, Hilbert series, equivariant
//! traces, and Young-invariant dimensions.
//!
//! Each bidegree (r, e) is handled independently: the ambient piece has the
//! monomial basis from `segre::piece_basis_bidegree`, and the ideal piece is
//! spanned (not based) by the products f_l * m over monomials m of first
//! degree r-1. Rank, never count, is used everywhere since those vectors
//! are highly dependent.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::combinat::{young_subgroup_elements, Composition, Perm};
use crate::error::{Error, Result};
use crate::exact::bipoly::BiPoly;
use crate::exact::linalg::RowSpace;
use crate::exact::poly::RatPoly;
use crate::qseries::q_int;
use crate::segre::{
    generators, multiply_generator, piece_basis_bidegree, s_n_action, slot_action,
    SegreGenerator, SegreMonomial,
};

/// Summary of one bidegree piece of the quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieceSummary {
    pub r: usize,
    pub e: usize,
    pub ambient_dim: usize,
    pub ideal_rank: usize,
    pub quotient_dim: usize,
}

struct Piece {
    monomials: Vec<SegreMonomial>,
    index: HashMap<SegreMonomial, usize>,
    space: RowSpace,
    reduced: bool,
}

/// The quotient of T_alpha by the ideal generated by the invariant sums
/// f_0, ..., f_n, with per-bidegree pieces built lazily and cached.
pub struct QuotientAlgebra {
    alpha: Composition,
    gens_by_size: Vec<Vec<SegreGenerator>>,
    pieces: HashMap<(usize, usize), Piece>,
    class_traces: HashMap<(Vec<usize>, usize, usize), BigRational>,
}

/// The spanning rows of the bidegree-(r, e) ideal piece, as sorted column
/// lists over the ambient monomial basis.
pub(crate) fn ideal_rows(
    alpha: &Composition,
    gens_by_size: &[Vec<SegreGenerator>],
    index: &HashMap<SegreMonomial, usize>,
    r: usize,
    e: usize,
) -> Vec<Vec<(usize, i64)>> {
    let mut rows = Vec::new();
    if r == 0 {
        return rows;
    }
    let n = alpha.n();
    for l in 0..=n.min(e) {
        if gens_by_size[l].is_empty() {
            continue;
        }
        for m in piece_basis_bidegree(alpha, r - 1, e - l) {
            let mut cols: Vec<(usize, i64)> = gens_by_size[l]
                .iter()
                .map(|g| {
                    let prod = multiply_generator(g, &m);
                    (index[&prod], 1i64)
                })
                .collect();
            cols.sort_unstable_by_key(|&(c, _)| c);
            rows.push(cols);
        }
    }
    rows
}

pub(crate) fn generators_by_size(alpha: &Composition) -> Vec<Vec<SegreGenerator>> {
    let mut gens_by_size: Vec<Vec<SegreGenerator>> = vec![Vec::new(); alpha.n() + 1];
    for g in generators(alpha) {
        gens_by_size[g.size()].push(g);
    }
    gens_by_size
}

impl QuotientAlgebra {
    pub fn new(alpha: Composition) -> Self {
        let gens_by_size = generators_by_size(&alpha);
        QuotientAlgebra {
            alpha,
            gens_by_size,
            pieces: HashMap::new(),
            class_traces: HashMap::new(),
        }
    }

    pub fn alpha(&self) -> &Composition {
        &self.alpha
    }

    fn piece(&mut self, r: usize, e: usize) -> &mut Piece {
        if !self.pieces.contains_key(&(r, e)) {
            let monomials = piece_basis_bidegree(&self.alpha, r, e);
            let index: HashMap<SegreMonomial, usize> = monomials
                .iter()
                .enumerate()
                .map(|(i, m)| (m.clone(), i))
                .collect();
            let mut space = RowSpace::new(monomials.len());
            for row in ideal_rows(&self.alpha, &self.gens_by_size, &index, r, e) {
                if space.is_full_rank() {
                    break;
                }
                space.insert_int(&row);
            }
            self.pieces.insert(
                (r, e),
                Piece {
                    monomials,
                    index,
                    space,
                    reduced: false,
                },
            );
        }
        self.pieces.get_mut(&(r, e)).unwrap()
    }

    /// Rank of the bidegree-(r, e) ideal piece.
    pub fn ideal_rank(&mut self, r: usize, e: usize) -> usize {
        self.piece(r, e).space.rank()
    }

    pub fn piece_summary(&mut self, r: usize, e: usize) -> PieceSummary {
        let piece = self.piece(r, e);
        let ambient_dim = piece.monomials.len();
        let ideal_rank = piece.space.rank();
        PieceSummary {
            r,
            e,
            ambient_dim,
            ideal_rank,
            quotient_dim: ambient_dim - ideal_rank,
        }
    }

    /// Dimension of the bidegree-(r, e) piece of the quotient.
    pub fn dim(&mut self, r: usize, e: usize) -> usize {
        let piece = self.piece(r, e);
        piece.monomials.len() - piece.space.rank()
    }

    /// Bigraded Hilbert series, iterating the first degree until an
    /// all-zero row appears. The hard cap r <= n turns a would-be silent
    /// nontermination into a diagnosable failure.
    pub fn hilbert(&mut self) -> Result<BiPoly> {
        let n = self.alpha.n();
        let mut out = BiPoly::zero();
        for r in 0..=n {
            let mut row_zero = true;
            for e in 0..=(n * r) {
                let d = self.dim(r, e);
                if d > 0 {
                    row_zero = false;
                    out.add_term(BigRational::from_integer((d as i64).into()), r, e);
                }
            }
            if row_zero {
                return Ok(out);
            }
        }
        Err(Error::CapExceeded {
            cap: n,
            context: format!(
                "hilbert series of the quotient for alpha={}",
                self.alpha.display()
            ),
        })
    }

    /// Trace of a basis permutation on the bidegree-(r, e) piece of the
    /// quotient: the ambient trace minus the trace on the ideal piece.
    ///
    /// The action is passed as the permutation it induces on ambient
    /// monomials; it must stabilize the ideal piece (any action fixing each
    /// f_l qualifies).
    pub fn trace_with(
        &mut self,
        r: usize,
        e: usize,
        act: &dyn Fn(&SegreMonomial) -> SegreMonomial,
    ) -> BigRational {
        let piece = self.piece(r, e);
        let dim = piece.monomials.len();
        let rank = piece.space.rank();
        let perm: Vec<usize> = piece
            .monomials
            .iter()
            .map(|m| piece.index[&act(m)])
            .collect();
        let ambient: i64 = (0..dim).filter(|&i| perm[i] == i).count() as i64;
        let ambient = BigRational::from_integer(ambient.into());
        if rank == dim {
            // Quotient piece is zero.
            return BigRational::zero();
        }
        if rank == 0 {
            return ambient;
        }
        let mut perm_inv = vec![0usize; dim];
        for (i, &j) in perm.iter().enumerate() {
            perm_inv[j] = i;
        }
        if !piece.reduced {
            piece.space.to_rref();
            piece.reduced = true;
        }
        // With the ideal piece in reduced echelon form, the coefficient of
        // basis row j inside g.(row j) reads off at the pivot column:
        // (g.b_j)[p_j] = b_j[g^{-1} p_j].
        let mut ideal_trace = BigRational::zero();
        for j in 0..rank {
            let p = piece.space.pivot_cols()[j];
            if let Some(v) = piece.space.row_entry(j, perm_inv[p]) {
                ideal_trace +=
                    BigRational::new(v.clone(), piece.space.row_pivot_value(j).clone());
            }
        }
        ambient - ideal_trace
    }

    /// Trace of g in S_n on the quotient piece; requires alpha = (1^n).
    pub fn trace_s_n(&mut self, g: &Perm, r: usize, e: usize) -> BigRational {
        assert!(
            self.alpha.parts().iter().all(|&p| p == 1),
            "the S_n action lives on the hypercube algebra (alpha = 1^n)"
        );
        assert_eq!(g.n(), self.alpha.n());
        let g = g.clone();
        self.trace_with(r, e, &move |m| s_n_action(&g, m))
    }

    /// Trace of the S_n class with cycle type mu, memoized (the pieces are
    /// S_n-stable, so traces are class functions).
    pub fn trace_class(&mut self, mu: &[usize], r: usize, e: usize) -> BigRational {
        let key = (mu.to_vec(), r, e);
        if let Some(v) = self.class_traces.get(&key) {
            return v.clone();
        }
        let g = Perm::from_cycle_type(mu);
        let v = self.trace_s_n(&g, r, e);
        self.class_traces.insert(key, v.clone());
        v
    }

    /// Trace of the residual slot permutation on the quotient piece;
    /// requires a rectangular alpha = (m^k).
    pub fn trace_slots(&mut self, g: &Perm, r: usize, e: usize) -> Result<BigRational> {
        if !self.alpha.is_rectangular() {
            return Err(Error::NotRectangular {
                alpha: self.alpha.display(),
            });
        }
        assert_eq!(g.n(), self.alpha.k());
        let alpha = self.alpha.clone();
        let g = g.clone();
        Ok(self.trace_with(r, e, &move |m| {
            slot_action(&alpha, &g, m).expect("rectangular checked above")
        }))
    }
}

/// Bigraded Hilbert series of P_alpha; equals A_alpha(t, q).
pub fn hilbert_p(alpha: &Composition) -> Result<BiPoly> {
    QuotientAlgebra::new(alpha.clone()).hilbert()
}

/// Graded trace of a permutation of cycle type mu on the first-degree-r
/// piece of the hypercube algebra: a monomial is fixed exactly when its
/// exponents are constant on cycles, giving prod over cycles of
/// [r+1]_{q^{len}}.
pub fn ambient_trace_q(mu: &[usize], r: usize) -> RatPoly {
    let mut out = RatPoly::one();
    for &len in mu {
        out = &out * &q_int(r + 1).stretch(len);
    }
    out
}

/// dim (P_alpha)_{r,e} computed as the average over the Young subgroup
/// S_alpha of quotient traces inside the hypercube quotient P_n.
///
/// `qa` must be the quotient algebra for (1^n) with n = |alpha|.
pub fn invariant_dim(
    qa: &mut QuotientAlgebra,
    alpha: &Composition,
    r: usize,
    e: usize,
) -> usize {
    assert!(qa.alpha().parts().iter().all(|&p| p == 1));
    assert_eq!(qa.alpha().n(), alpha.n());
    let elements = young_subgroup_elements(alpha);
    let order = elements.len() as i64;
    let mut by_type: HashMap<Vec<usize>, i64> = HashMap::new();
    for g in &elements {
        *by_type.entry(g.cycle_type()).or_insert(0) += 1;
    }
    let mut types: Vec<(Vec<usize>, i64)> = by_type.into_iter().collect();
    types.sort();
    let mut total = BigRational::zero();
    for (mu, count) in types {
        total += qa.trace_class(&mu, r, e) * BigRational::from_integer(count.into());
    }
    let avg = total / BigRational::from_integer(order.into());
    assert!(
        avg.is_integer() && !avg.is_negative(),
        "invariant dimension must be a nonnegative integer"
    );
    avg.to_integer().to_usize().expect("fits usize")
}

/// The full invariant dimension table assembled as a bigraded polynomial,
/// iterating the first degree until an all-zero row (cap r <= n).
pub fn invariant_hilbert(qa: &mut QuotientAlgebra, alpha: &Composition) -> Result<BiPoly> {
    let n = alpha.n();
    let mut out = BiPoly::zero();
    for r in 0..=n {
        let mut row_zero = true;
        for e in 0..=(n * r) {
            let d = invariant_dim(qa, alpha, r, e);
            if d > 0 {
                row_zero = false;
                out.add_term(BigRational::from_integer((d as i64).into()), r, e);
            }
        }
        if row_zero {
            return Ok(out);
        }
    }
    Err(Error::CapExceeded {
        cap: n,
        context: format!("invariant dimension table for alpha={}", alpha.display()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::enumerate_compositions;
    use crate::exact::poly::rat;
    use crate::qseries::a_alpha;
    use crate::segre::piece_basis;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn ideal_rank_examples() {
        // alpha=(1,1), r=1, e=0: the span of the single vector f_0.
        let mut qa = QuotientAlgebra::new(comp(&[1, 1]));
        assert_eq!(qa.ideal_rank(1, 0), 1);
        // q-degrees outside 0..n carry no generators at r=1.
        assert_eq!(qa.ideal_rank(1, 3), 0);

        // alpha=(1^3), r=1: ranks (1,1,1,1) leaving quotient dims (0,2,2,0).
        let mut qa = QuotientAlgebra::new(comp(&[1, 1, 1]));
        for e in 0..=3 {
            assert_eq!(qa.ideal_rank(1, e), 1);
        }
        let dims: Vec<usize> = (0..=3).map(|e| qa.dim(1, e)).collect();
        assert_eq!(dims, vec![0, 2, 2, 0]);
    }

    #[test]
    fn hilbert_p_examples() {
        assert_eq!(
            hilbert_p(&comp(&[2, 1])).unwrap().display(),
            "1 + t*q + t*q^2"
        );
        assert_eq!(hilbert_p(&comp(&[4])).unwrap(), BiPoly::one());
        assert_eq!(
            hilbert_p(&comp(&[1, 1, 1])).unwrap().display(),
            "1 + 2*t*q + 2*t*q^2 + t^2*q^3"
        );
    }

    #[test]
    fn hilbert_p_equals_a_alpha_through_n4() {
        for n in 1..=4 {
            for alpha in enumerate_compositions(n) {
                assert_eq!(
                    hilbert_p(&alpha).unwrap(),
                    a_alpha(&alpha),
                    "alpha={:?}",
                    alpha
                );
            }
        }
    }

    #[test]
    fn transposition_trace_matches_hand_computation() {
        // alpha=(1,1), swap, (r,e)=(1,1): ambient trace 0, ideal trace 1.
        let mut qa = QuotientAlgebra::new(comp(&[1, 1]));
        let swap = Perm::from_images(vec![1, 0]);
        assert_eq!(qa.trace_s_n(&swap, 1, 1), rat(-1));
        // Identity trace is the dimension.
        let id = Perm::identity(2);
        assert_eq!(qa.trace_s_n(&id, 1, 1), rat(qa.dim(1, 1) as i64));
    }

    #[test]
    fn ambient_trace_formula_matches_brute_force() {
        for n in 1..=4 {
            let alpha = Composition::ones(n);
            for mu in crate::combinat::enumerate_partitions(n) {
                let g = Perm::from_cycle_type(&mu);
                for r in 0..=3 {
                    let mut brute = RatPoly::zero();
                    for m in piece_basis(&alpha, r) {
                        if s_n_action(&g, &m) == m {
                            brute = &brute
                                + &RatPoly::monomial(rat(1), m.q_degree());
                        }
                    }
                    assert_eq!(brute, ambient_trace_q(&mu, r), "mu={mu:?} r={r}");
                }
            }
        }
    }

    #[test]
    fn quotient_traces_verified_by_independent_solve() {
        // Cross-check the pivot-extraction trace against expressing each
        // permuted basis vector through membership certificates.
        let alpha = comp(&[1, 1, 1]);
        let mut qa = QuotientAlgebra::new(alpha.clone());
        for g in crate::combinat::enumerate_perms(3) {
            for r in 0..=3 {
                for e in 0..=(3 * r) {
                    let fast = qa.trace_s_n(&g, r, e);

                    let monomials = piece_basis_bidegree(&alpha, r, e);
                    let index: HashMap<SegreMonomial, usize> = monomials
                        .iter()
                        .enumerate()
                        .map(|(i, m)| (m.clone(), i))
                        .collect();
                    let gens_by_size = generators_by_size(&alpha);
                    let raw = ideal_rows(&alpha, &gens_by_size, &index, r, e);
                    let mut space = RowSpace::with_history(monomials.len());
                    let mut basis_rows: Vec<Vec<(usize, BigRational)>> = Vec::new();
                    for row in &raw {
                        let rational: Vec<(usize, BigRational)> =
                            row.iter().map(|&(c, v)| (c, rat(v))).collect();
                        if space.insert(&rational) {
                            basis_rows.push(rational);
                        }
                    }
                    let mut independent = RowSpace::with_history(monomials.len());
                    for row in &basis_rows {
                        independent.insert(row);
                    }
                    let mut ideal_trace = BigRational::zero();
                    for (j, row) in basis_rows.iter().enumerate() {
                        let mut permuted: Vec<(usize, BigRational)> = row
                            .iter()
                            .map(|(c, v)| {
                                (index[&s_n_action(&g, &monomials[*c])], v.clone())
                            })
                            .collect();
                        permuted.sort_by_key(|&(c, _)| c);
                        let cert = independent
                            .membership(&permuted)
                            .expect("ideal piece must be stable under the action");
                        for (orig, coeff) in cert {
                            if orig == j {
                                ideal_trace += coeff;
                            }
                        }
                    }
                    let ambient: i64 = monomials
                        .iter()
                        .filter(|m| s_n_action(&g, m) == **m)
                        .count() as i64;
                    let slow = BigRational::from_integer(ambient.into()) - ideal_trace;
                    assert_eq!(fast, slow, "g={g:?} r={r} e={e}");
                }
            }
        }
    }

    #[test]
    fn invariant_dims_match_quotient_hilbert() {
        for n in 1..=4 {
            let mut qa = QuotientAlgebra::new(Composition::ones(n));
            for alpha in enumerate_compositions(n) {
                let table = invariant_hilbert(&mut qa, &alpha).unwrap();
                assert_eq!(table, a_alpha(&alpha), "alpha={:?}", alpha);
            }
        }
    }

    #[test]
    fn invariant_dim_trivial_cases() {
        let mut qa = QuotientAlgebra::new(Composition::ones(3));
        // Full symmetric group: only the constants survive.
        let alpha = comp(&[3]);
        assert_eq!(invariant_dim(&mut qa, &alpha, 0, 0), 1);
        for r in 0..=2 {
            for e in 0..=6 {
                if r + e > 0 {
                    assert_eq!(invariant_dim(&mut qa, &alpha, r, e), 0, "(r,e)=({r},{e})");
                }
            }
        }
        // Trivial subgroup: the full quotient dimensions.
        let ones = Composition::ones(3);
        for r in 0..=3 {
            for e in 0..=6 {
                assert_eq!(invariant_dim(&mut qa, &ones, r, e), qa.dim(r, e));
            }
        }
    }

    #[test]
    fn gorenstein_symmetry_small() {
        for n in 1..=4 {
            let h = hilbert_p(&Composition::ones(n)).unwrap();
            let socle = (n - 1, n * (n - 1) / 2);
            assert!(h.is_palindromic(socle.0, socle.1));
            assert_eq!(h.coeff(socle.0, socle.1), rat(1));
        }
    }

    #[test]
    fn identity_traces_sum_to_factorial() {
        for n in 1..=4 {
            let mut qa = QuotientAlgebra::new(Composition::ones(n));
            let h = qa.hilbert().unwrap();
            let total = h.eval_one_one();
            let fact: i64 = (1..=n as i64).product();
            assert_eq!(total, rat(fact));
        }
    }
}

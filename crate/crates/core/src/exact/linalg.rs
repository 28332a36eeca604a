//! Exact linear algebra: dense elimination over any exact field and a
//! sparse fraction-free row-space engine over the rationals.
//!
//! The sparse engine keeps rows as integer vectors with content 1 and a
//! positive leading coefficient, combining rows by cross-multiplication and
//! dividing out the gcd. This keeps coefficient growth under control while
//! staying exact, and ranks come out independent of row order.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::cyclo::CycloElem;

/// Element of an exact field, with context-carrying constructors so that
/// cyclotomic elements (which need their modulus) fit the same interface.
pub trait FieldElem: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_elem(&self, rhs: &Self) -> Self;
    fn sub_elem(&self, rhs: &Self) -> Self;
    fn mul_elem(&self, rhs: &Self) -> Self;
    fn inv_elem(&self) -> Self;
}

impl FieldElem for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_elem(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_elem(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inv_elem(&self) -> Self {
        self.recip()
    }
}

impl FieldElem for CycloElem {
    fn zero_like(&self) -> Self {
        self.field().zero()
    }
    fn one_like(&self) -> Self {
        self.field().one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn sub_elem(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn mul_elem(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn inv_elem(&self) -> Self {
        self.inv()
    }
}

/// Dense matrix over an exact field.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactMatrix<F> {
    rows: usize,
    cols: usize,
    entries: Vec<F>,
}

impl<F: FieldElem> ExactMatrix<F> {
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols));
        ExactMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &F {
        &self.entries[i * self.cols + j]
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.entries.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    /// Exact rank by Gaussian elimination over the entry field.
    pub fn rank(&self) -> usize {
        self.clone().rref_in_place()
    }

    /// Reduced row echelon form; returns the rank alongside the matrix.
    pub fn rref(&self) -> (usize, Self) {
        let mut m = self.clone();
        let rank = m.rref_in_place();
        (rank, m)
    }

    fn rref_in_place(&mut self) -> usize {
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) =
                (rank..self.rows).find(|&i| !self.entry(i, col).is_zero_elem())
            else {
                continue;
            };
            self.swap_rows(rank, pivot);
            let inv = self.entry(rank, col).inv_elem();
            for k in col..self.cols {
                let v = self.entry(rank, k).mul_elem(&inv);
                self.entries[rank * self.cols + k] = v;
            }
            for i in 0..self.rows {
                if i == rank || self.entry(i, col).is_zero_elem() {
                    continue;
                }
                let factor = self.entry(i, col).clone();
                for k in col..self.cols {
                    let v = self
                        .entry(i, k)
                        .sub_elem(&self.entry(rank, k).mul_elem(&factor));
                    self.entries[i * self.cols + k] = v;
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

type IntRow = Vec<(usize, BigInt)>;

fn row_normalize(row: &mut IntRow) -> BigRational {
    // Divide by the content and flip the sign so the leading entry is
    // positive. Returns the rational factor the row was multiplied by.
    if row.is_empty() {
        return BigRational::one();
    }
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
    }
    if row[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
    BigRational::new(BigInt::one(), g)
}

/// row := a*row - b*other, gcd-normalized; entries stay sorted by column.
fn row_combine(row: &IntRow, other: &IntRow, a: &BigInt, b: &BigInt) -> IntRow {
    let mut out = Vec::with_capacity(row.len() + other.len());
    let mut i = 0;
    let mut j = 0;
    while i < row.len() || j < other.len() {
        if j >= other.len() || (i < row.len() && row[i].0 < other[j].0) {
            out.push((row[i].0, a * &row[i].1));
            i += 1;
        } else if i >= row.len() || other[j].0 < row[i].0 {
            out.push((other[j].0, -(b * &other[j].1)));
            j += 1;
        } else {
            let v = a * &row[i].1 - b * &other[j].1;
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn row_get<'a>(row: &'a IntRow, col: usize) -> Option<&'a BigInt> {
    row.binary_search_by_key(&col, |&(c, _)| c)
        .ok()
        .map(|idx| &row[idx].1)
}

/// Incremental exact row space over Q.
///
/// Rows are inserted one at a time; each is reduced against the current
/// echelon rows and either absorbed (dependent) or added with a fresh pivot
/// column. Optionally tracks each stored row as a rational combination of
/// the inserted vectors, which yields membership certificates.
pub struct RowSpace {
    ncols: usize,
    rows: Vec<IntRow>,
    pivot_of_row: Vec<usize>,
    row_of_pivot: Vec<Option<usize>>,
    track: bool,
    history: Vec<Vec<(usize, BigRational)>>,
    n_inserted: usize,
    reduced: bool,
}

impl RowSpace {
    pub fn new(ncols: usize) -> Self {
        RowSpace {
            ncols,
            rows: Vec::new(),
            pivot_of_row: Vec::new(),
            row_of_pivot: vec![None; ncols],
            track: false,
            history: Vec::new(),
            n_inserted: 0,
            reduced: true,
        }
    }

    /// Like `new`, but records membership certificates.
    pub fn with_history(ncols: usize) -> Self {
        let mut rs = RowSpace::new(ncols);
        rs.track = true;
        rs
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivot_of_row
    }

    /// Columns without a pivot, in ascending order.
    pub fn free_cols(&self) -> Vec<usize> {
        (0..self.ncols)
            .filter(|&c| self.row_of_pivot[c].is_none())
            .collect()
    }

    fn scale_to_int(row: &[(usize, BigRational)]) -> (IntRow, BigRational) {
        let mut lcm = BigInt::one();
        for (_, v) in row {
            lcm = lcm.lcm(v.denom());
        }
        let int_row: IntRow = row
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (*c, (v * BigRational::from_integer(lcm.clone())).to_integer()))
            .collect();
        (int_row, BigRational::from_integer(lcm))
    }

    /// Insert a sparse rational vector (columns must be sorted, in range).
    /// Returns true if it enlarged the span.
    pub fn insert(&mut self, row: &[(usize, BigRational)]) -> bool {
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        let idx = self.n_inserted;
        self.n_inserted += 1;
        let (mut cur, scale) = Self::scale_to_int(row);
        let mut combo: Vec<(usize, BigRational)> = if self.track {
            vec![(idx, scale)]
        } else {
            Vec::new()
        };
        loop {
            let Some(&(lead_col, ref lead_val)) = cur.first() else {
                return false;
            };
            let Some(pivot_row) = self.row_of_pivot[lead_col] else {
                let factor = row_normalize(&mut cur);
                if self.track {
                    for (_, c) in combo.iter_mut() {
                        *c *= &factor;
                    }
                    self.history.push(combo);
                }
                self.pivot_of_row.push(lead_col);
                self.row_of_pivot[lead_col] = Some(self.rows.len());
                self.rows.push(cur);
                self.reduced = self.rows.len() <= 1;
                return true;
            };
            let piv = &self.rows[pivot_row];
            let a = piv[0].1.clone();
            let b = lead_val.clone();
            let next = row_combine(&cur, piv, &a, &b);
            if self.track {
                // cur' = a*cur - b*piv, then normalized below on storage; the
                // combination is tracked in exact rationals throughout.
                let ra = BigRational::from_integer(a);
                let rb = BigRational::from_integer(b);
                let mut next_combo: Vec<(usize, BigRational)> = Vec::new();
                let piv_hist = &self.history[pivot_row];
                let mut i = 0;
                let mut j = 0;
                while i < combo.len() || j < piv_hist.len() {
                    if j >= piv_hist.len()
                        || (i < combo.len() && combo[i].0 < piv_hist[j].0)
                    {
                        next_combo.push((combo[i].0, &ra * &combo[i].1));
                        i += 1;
                    } else if i >= combo.len() || piv_hist[j].0 < combo[i].0 {
                        next_combo.push((piv_hist[j].0, -(&rb * &piv_hist[j].1)));
                        j += 1;
                    } else {
                        let v = &ra * &combo[i].1 - &rb * &piv_hist[j].1;
                        if !v.is_zero() {
                            next_combo.push((combo[i].0, v));
                        }
                        i += 1;
                        j += 1;
                    }
                }
                combo = next_combo;
            }
            let mut next = next;
            let factor = row_normalize(&mut next);
            if self.track {
                for (_, c) in combo.iter_mut() {
                    *c *= &factor;
                }
            }
            cur = next;
        }
    }

    /// Insert an integer vector given as (column, value) pairs.
    pub fn insert_int(&mut self, row: &[(usize, i64)]) -> bool {
        let rational: Vec<(usize, BigRational)> = row
            .iter()
            .map(|&(c, v)| (c, BigRational::from_integer(BigInt::from(v))))
            .collect();
        self.insert(&rational)
    }

    /// Back-substitute so every stored row is zero at the other pivots.
    pub fn to_rref(&mut self) {
        if self.reduced {
            return;
        }
        // Process rows by decreasing pivot column; rows with larger pivots
        // are fully reduced first, so each combine introduces no new pivot
        // columns.
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(self.pivot_of_row[i]));
        for &i in &order {
            loop {
                let target = self.rows[i]
                    .iter()
                    .skip(1)
                    .find_map(|&(c, _)| self.row_of_pivot[c].filter(|&j| j != i));
                let Some(j) = target else { break };
                let pc = self.pivot_of_row[j];
                let a = self.rows[j][0].1.clone();
                let b = row_get(&self.rows[i], pc).unwrap().clone();
                let mut combined = row_combine(&self.rows[i], &self.rows[j], &a, &b);
                let factor = row_normalize(&mut combined);
                if self.track {
                    let ra = BigRational::from_integer(a) * &factor;
                    let rb = BigRational::from_integer(b) * &factor;
                    let hist_j = self.history[j].clone();
                    let hist_i = &self.history[i];
                    let mut next: Vec<(usize, BigRational)> = Vec::new();
                    let mut x = 0;
                    let mut y = 0;
                    while x < hist_i.len() || y < hist_j.len() {
                        if y >= hist_j.len()
                            || (x < hist_i.len() && hist_i[x].0 < hist_j[y].0)
                        {
                            next.push((hist_i[x].0, &ra * &hist_i[x].1));
                            x += 1;
                        } else if x >= hist_i.len() || hist_j[y].0 < hist_i[x].0 {
                            next.push((hist_j[y].0, -(&rb * &hist_j[y].1)));
                            y += 1;
                        } else {
                            let v = &ra * &hist_i[x].1 - &rb * &hist_j[y].1;
                            if !v.is_zero() {
                                next.push((hist_i[x].0, v));
                            }
                            x += 1;
                            y += 1;
                        }
                    }
                    self.history[i] = next;
                }
                self.rows[i] = combined;
            }
        }
        self.reduced = true;
    }

    /// Entry of stored row `i` at `col` over Q (pivot entries are positive
    /// integers; other entries are integers divided by nothing — the row is
    /// integral by construction).
    pub fn row_entry(&self, i: usize, col: usize) -> Option<&BigInt> {
        row_get(&self.rows[i], col)
    }

    pub fn row_pivot_value(&self, i: usize) -> &BigInt {
        &self.rows[i][0].1
    }

    /// Reduce `v` against the stored rows; returns the residual and, when
    /// history is tracked, the certificate over the inserted vectors such
    /// that v = certificate + residual.
    fn reduce_vector(
        &self,
        v: &[(usize, BigRational)],
    ) -> (Vec<(usize, BigRational)>, Vec<(usize, BigRational)>) {
        let mut cur: Vec<(usize, BigRational)> =
            v.iter().filter(|(_, c)| !c.is_zero()).cloned().collect();
        let mut cert: Vec<(usize, BigRational)> = Vec::new();
        let mut pos = 0;
        while pos < cur.len() {
            let (col, coeff) = cur[pos].clone();
            let Some(r) = self.row_of_pivot[col] else {
                pos += 1;
                continue;
            };
            // cur -= (coeff / pivot) * row_r
            let factor = &coeff / BigRational::from_integer(self.rows[r][0].1.clone());
            if self.track {
                for (orig, c) in &self.history[r] {
                    match cert.binary_search_by_key(orig, |&(o, _)| o) {
                        Ok(k) => {
                            cert[k].1 += &factor * c;
                            if cert[k].1.is_zero() {
                                cert.remove(k);
                            }
                        }
                        Err(k) => cert.insert(k, (*orig, &factor * c)),
                    }
                }
            }
            let mut next: Vec<(usize, BigRational)> = Vec::new();
            let mut i = 0;
            let mut j = 0;
            let row = &self.rows[r];
            while i < cur.len() || j < row.len() {
                if j >= row.len() || (i < cur.len() && cur[i].0 < row[j].0) {
                    next.push(cur[i].clone());
                    i += 1;
                } else if i >= cur.len() || row[j].0 < cur[i].0 {
                    next.push((
                        row[j].0,
                        -(&factor * BigRational::from_integer(row[j].1.clone())),
                    ));
                    j += 1;
                } else {
                    let val =
                        &cur[i].1 - &factor * BigRational::from_integer(row[j].1.clone());
                    if !val.is_zero() {
                        next.push((cur[i].0, val));
                    }
                    i += 1;
                    j += 1;
                }
            }
            cur = next;
            // Entries before `pos` had no pivot; the eliminated column is
            // gone, so re-scan from the same position.
        }
        (cur, cert)
    }

    /// True if `v` lies in the span of the inserted vectors.
    pub fn contains(&self, v: &[(usize, BigRational)]) -> bool {
        self.reduce_vector(v).0.is_empty()
    }

    /// The residual of `v` after eliminating every pivot column: the unique
    /// representative of v modulo the span supported on free columns.
    pub fn residual(&self, v: &[(usize, BigRational)]) -> Vec<(usize, BigRational)> {
        self.reduce_vector(v).0
    }

    /// Membership with certificate: coefficients over the inserted vectors
    /// reproducing `v` exactly. Requires history tracking.
    pub fn membership(&self, v: &[(usize, BigRational)]) -> Option<Vec<(usize, BigRational)>> {
        assert!(self.track, "membership certificates need with_history()");
        let (residual, cert) = self.reduce_vector(v);
        residual.is_empty().then_some(cert)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::rat;

    fn r(v: i64) -> BigRational {
        rat(v)
    }

    #[test]
    fn dense_rank_identity_and_zero() {
        let id = ExactMatrix::from_rows(vec![
            vec![r(1), r(0), r(0)],
            vec![r(0), r(1), r(0)],
            vec![r(0), r(0), r(1)],
        ]);
        assert_eq!(id.rank(), 3);
        let zero = ExactMatrix::from_rows(vec![vec![r(0); 3]; 2]);
        assert_eq!(zero.rank(), 0);
    }

    #[test]
    fn dense_rank_dependent_rows() {
        let m = ExactMatrix::from_rows(vec![
            vec![r(1), r(2), r(3)],
            vec![r(2), r(4), r(6)],
            vec![r(0), r(1), r(1)],
        ]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rowspace_rank_matches_dense() {
        let rows: Vec<Vec<(usize, BigRational)>> = vec![
            vec![(0, r(1)), (2, r(2))],
            vec![(0, r(2)), (2, r(4))],           // 2 * row 0
            vec![(1, r(1)), (2, r(-1))],
            vec![(0, r(1)), (1, r(1)), (2, r(1))], // row 0 + row 2
            vec![(2, r(5))],
        ];
        let mut rs = RowSpace::new(3);
        let grew: Vec<bool> = rows.iter().map(|row| rs.insert(row)).collect();
        assert_eq!(grew, vec![true, false, true, false, true]);
        assert_eq!(rs.rank(), 3);

        let dense = ExactMatrix::from_rows(vec![
            vec![r(1), r(0), r(2)],
            vec![r(2), r(0), r(4)],
            vec![r(0), r(1), r(-1)],
            vec![r(1), r(1), r(1)],
            vec![r(0), r(0), r(5)],
        ]);
        assert_eq!(dense.rank(), rs.rank());
    }

    #[test]
    fn membership_certificate_reexpands() {
        let mut rs = RowSpace::with_history(4);
        let v0 = vec![(0, r(1)), (1, r(1))];
        let v1 = vec![(1, r(1)), (2, r(1))];
        let v2 = vec![(2, r(1)), (3, r(1))];
        rs.insert(&v0);
        rs.insert(&v1);
        rs.insert(&v2);
        let originals = [&v0, &v1, &v2];
        // v0 - v1 + v2 = (1,0,0,1)
        let target = vec![(0, r(1)), (3, r(1))];
        let cert = rs.membership(&target).expect("target is in the span");
        let mut acc = vec![BigRational::zero(); 4];
        for (orig, c) in &cert {
            for (col, val) in originals[*orig] {
                acc[*col] += c * val;
            }
        }
        let expanded: Vec<(usize, BigRational)> = acc
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .collect();
        assert_eq!(expanded, target);
        assert!(!rs.contains(&[(0, r(1))]));
    }

    #[test]
    fn rref_pivot_extraction() {
        let mut rs = RowSpace::new(3);
        rs.insert(&[(0, r(1)), (1, r(1)), (2, r(1))]);
        rs.insert(&[(1, r(1)), (2, r(2))]);
        rs.to_rref();
        // Row with pivot 0 must now be zero at column 1.
        let i = (0..rs.rank()).find(|&i| rs.pivot_cols()[i] == 0).unwrap();
        assert!(rs.row_entry(i, 1).is_none());
    }
}

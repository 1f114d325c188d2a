//! Dense matrices over the integers and over integer Laurent polynomials,
//! plus the companion-matrix substitution that turns Laurent chain data into
//! integer chain data for an N-sheeted cyclic cover.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::field::{Field, FieldSelector, Fp};
use crate::laurent::LaurentPoly;

/// Row-major rectangular matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    pub(crate) rows: usize,
    pub(crate) cols: usize,
    pub(crate) entries: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type LaurentMatrix = Matrix<LaurentPoly>;

impl<T: Clone> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix { rows, cols, entries: vec![value; rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// Panics on ragged input; `cols` disambiguates the zero-row case.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let mut entries = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged row");
            entries.extend(row);
        }
        Matrix { rows: r, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Clone>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|e| f(e)).collect() }
    }
}

fn check_mul_shapes<A, B>(a: &Matrix<A>, b: &Matrix<B>) -> Result<(), Error> {
    if a.cols != b.rows {
        return Err(Error::ShapeMismatch { lr: a.rows, lc: a.cols, rr: b.rows, rc: b.cols });
    }
    Ok(())
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, BigInt::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        check_mul_shapes(self, other)?;
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cell = &mut out.entries[i * other.cols + j];
                    *cell += a * b;
                }
            }
        }
        Ok(out)
    }

    /// k-th power of a square matrix, k >= 0.
    pub fn pow(&self, k: u64) -> Result<Self, Error> {
        check_mul_shapes(self, self)?;
        let mut acc = IntMatrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch {
                lr: self.rows,
                lc: self.cols,
                rr: other.rows,
                rc: other.cols,
            });
        }
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j)))
    }

    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.entries.iter().position(|e| !e.is_zero()).map(|p| (p / self.cols, p % self.cols))
    }

    /// Rank over the selected field: fraction-free Bareiss elimination in
    /// characteristic 0, Gaussian elimination over F_p otherwise.
    pub fn rank_over(&self, field: FieldSelector) -> usize {
        match field.characteristic() {
            0 => self.rank_rational(),
            p => self.rank_mod(Fp::new(p).expect("selector holds a verified prime")),
        }
    }

    fn rank_rational(&self) -> usize {
        let mut a = self.entries.clone();
        let (r, c) = (self.rows, self.cols);
        let at = |a: &Vec<BigInt>, i: usize, j: usize| a[i * c + j].clone();
        let mut prev = BigInt::one();
        let mut rank = 0;
        let mut col = 0;
        while rank < r && col < c {
            // Smallest-magnitude pivot tempers coefficient growth.
            let pivot = (rank..r)
                .filter(|&i| !a[i * c + col].is_zero())
                .min_by_key(|&i| a[i * c + col].abs());
            let Some(pi) = pivot else {
                col += 1;
                continue;
            };
            if pi != rank {
                for j in 0..c {
                    a.swap(pi * c + j, rank * c + j);
                }
            }
            let p = at(&a, rank, col);
            for i in rank + 1..r {
                let head = at(&a, i, col);
                for j in col + 1..c {
                    let num = &p * &a[i * c + j] - &head * &a[rank * c + j];
                    let (q, rem) = num.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                    a[i * c + j] = q;
                }
                a[i * c + col] = BigInt::zero();
            }
            prev = p;
            rank += 1;
            col += 1;
        }
        rank
    }

    fn rank_mod(&self, f: Fp) -> usize {
        let c = self.cols;
        let mut a: Vec<u64> = self.entries.iter().map(|e| f.from_bigint(e)).collect();
        let r = self.rows;
        let mut rank = 0;
        let mut col = 0;
        while rank < r && col < c {
            let Some(pi) = (rank..r).find(|&i| a[i * c + col] != 0) else {
                col += 1;
                continue;
            };
            if pi != rank {
                for j in 0..c {
                    a.swap(pi * c + j, rank * c + j);
                }
            }
            let inv = f.inv(&a[rank * c + col]);
            for i in rank + 1..r {
                let head = a[i * c + col];
                if head == 0 {
                    continue;
                }
                let factor = f.mul(&head, &inv);
                for j in col..c {
                    let delta = f.mul(&factor, &a[rank * c + j]);
                    a[i * c + j] = f.sub(&a[i * c + j], &delta);
                }
            }
            rank += 1;
            col += 1;
        }
        rank
    }
}

impl LaurentMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, LaurentPoly::zero())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        check_mul_shapes(self, other)?;
        let mut out = LaurentMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = LaurentPoly::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(other.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.entries.iter().position(|e| !e.is_zero()).map(|p| (p / self.cols, p % self.cols))
    }

    /// Substitute the N-by-N companion matrix of t^N - 1 for t: each entry
    /// p(t) becomes the N-by-N integer block p(C_N). Exponents act mod N, so
    /// the substitution is a ring map from Laurent polynomials to circulant
    /// blocks.
    pub fn substitute(&self, n: u64) -> Result<IntMatrix, Error> {
        if n == 0 {
            return Err(Error::BadSheetCount(0));
        }
        let nn = n as usize;
        let mut out = IntMatrix::zero(self.rows * nn, self.cols * nn);
        for bi in 0..self.rows {
            for bj in 0..self.cols {
                let p = self.get(bi, bj);
                if p.is_zero() {
                    continue;
                }
                // residue_sums[d] = sum of coefficients with exponent = d mod N.
                let mut residue_sums = vec![BigInt::zero(); nn];
                for (e, c) in p.pairs() {
                    let d = e.rem_euclid(n as i64) as usize;
                    residue_sums[d] += c;
                }
                for r in 0..nn {
                    for c in 0..nn {
                        // (C_N^e)[r][c] = 1 iff c = r + e mod N.
                        let d = (c + nn - r) % nn;
                        if !residue_sums[d].is_zero() {
                            out.set(bi * nn + r, bj * nn + c, residue_sums[d].clone());
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Companion matrix of t^N - 1: ones on the superdiagonal and a one in the
/// bottom-left corner. companion(1) = [1].
pub fn companion(n: u64) -> Result<IntMatrix, Error> {
    if n == 0 {
        return Err(Error::BadSheetCount(0));
    }
    let nn = n as usize;
    Ok(Matrix::from_fn(nn, nn, |i, j| {
        if j == (i + 1) % nn {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    }))
}

/// Rank of C_N^k - I_N over the selected field. The exponent is reduced mod
/// N first, so negative k is fine.
pub fn lemma_rank(n: u64, k: i64, field: FieldSelector) -> Result<usize, Error> {
    let c = companion(n)?;
    let e = k.rem_euclid(n as i64) as u64;
    let m = c.pow(e)?.sub(&IntMatrix::identity(n as usize))?;
    Ok(m.rank_over(field))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(m: Vec<Vec<i64>>, cols: usize) -> IntMatrix {
        Matrix::from_rows(cols, m.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect())
    }

    #[test]
    fn companion_shape() {
        let c3 = companion(3).unwrap();
        assert_eq!(c3, int(vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]], 3));
        assert_eq!(companion(1).unwrap(), IntMatrix::identity(1));
        assert!(companion(0).is_err());
        // C_N^N = I.
        assert_eq!(c3.pow(3).unwrap(), IntMatrix::identity(3));
    }

    #[test]
    fn substitute_basic_blocks() {
        let m = Matrix::from_rows(1, vec![vec![LaurentPoly::t_pow_minus_one(1)]]);
        let b = m.substitute(2).unwrap();
        assert_eq!(b, int(vec![vec![-1, 1], vec![1, -1]], 2));

        let m = Matrix::from_rows(1, vec![vec![LaurentPoly::monomial(1, -1)]]);
        let b = m.substitute(3).unwrap();
        let c3 = companion(3).unwrap();
        assert_eq!(b, c3.pow(2).unwrap());
    }

    #[test]
    fn substitute_collapses_exponents_mod_n() {
        // t^5 + t^-1 at N = 3: both exponents are 2 mod 3.
        let p = LaurentPoly::from_pairs(&[(5, 1i64), (-1, 1)]);
        let m = Matrix::from_rows(1, vec![vec![p]]);
        let b = m.substitute(3).unwrap();
        let expected = companion(3).unwrap().pow(2).unwrap().mul(&int(vec![vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2]], 3)).unwrap();
        assert_eq!(b, expected);
    }

    #[test]
    fn substitute_is_multiplicative_on_entries() {
        let p = LaurentPoly::from_pairs(&[(0, 2i64), (1, -1), (-2, 3)]);
        let q = LaurentPoly::from_pairs(&[(0, -1i64), (2, 1)]);
        for n in 1..=5u64 {
            let bp = Matrix::from_rows(1, vec![vec![p.clone()]]).substitute(n).unwrap();
            let bq = Matrix::from_rows(1, vec![vec![q.clone()]]).substitute(n).unwrap();
            let bpq = Matrix::from_rows(1, vec![vec![p.mul(&q)]]).substitute(n).unwrap();
            assert_eq!(bp.mul(&bq).unwrap(), bpq);
        }
    }

    #[test]
    fn rank_over_fields() {
        let id = IntMatrix::identity(4);
        assert_eq!(id.rank_over(FieldSelector::rationals()), 4);
        assert_eq!(id.rank_over(FieldSelector::prime(2).unwrap()), 4);

        // diag(2, 3) drops rank mod 2 and mod 3.
        let d = int(vec![vec![2, 0], vec![0, 3]], 2);
        assert_eq!(d.rank_over(FieldSelector::rationals()), 2);
        assert_eq!(d.rank_over(FieldSelector::prime(2).unwrap()), 1);
        assert_eq!(d.rank_over(FieldSelector::prime(3).unwrap()), 1);
        assert_eq!(d.rank_over(FieldSelector::prime(5).unwrap()), 2);

        assert_eq!(IntMatrix::zero(3, 5).rank_over(FieldSelector::rationals()), 0);
    }

    #[test]
    fn lemma_rank_examples() {
        let f2 = FieldSelector::prime(2).unwrap();
        let f3 = FieldSelector::prime(3).unwrap();
        assert_eq!(lemma_rank(8, 3, f2).unwrap(), 7); // 8 - gcd(3,8)
        assert_eq!(lemma_rank(6, 4, f3).unwrap(), 4); // 6 - gcd(4,6)
        assert_eq!(lemma_rank(5, 0, FieldSelector::rationals()).unwrap(), 0);
        assert_eq!(lemma_rank(5, -2, FieldSelector::rationals()).unwrap(), 4);
    }

    #[test]
    fn laurent_matrix_mul() {
        let t = LaurentPoly::monomial(1, 1);
        let a = Matrix::from_rows(2, vec![vec![t.clone(), LaurentPoly::one()]]);
        let b = Matrix::from_rows(1, vec![vec![LaurentPoly::one()], vec![t.neg()]]);
        let prod = a.mul(&b).unwrap();
        assert!(prod.get(0, 0).is_zero());
        assert!(a.mul(&a).is_err());
    }
}

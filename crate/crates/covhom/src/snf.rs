//! Smith normal form over the integers and over univariate polynomials, via
//! one elimination engine generic over a Euclidean ring.
//!
//! Pivoting always selects a smallest nonzero entry (absolute value for Z,
//! degree for polynomials), reduces its row and column by division with
//! remainder, and restarts whenever a nonzero remainder appears; remainders
//! are strictly smaller, so the loop terminates. A final in-loop pass pulls
//! any entry the pivot fails to divide into the pivot row, which makes the
//! diagonal a divisibility chain without a separate fix-up stage.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::{IntMatrix, Matrix};

/// The ring operations the elimination engine needs, threaded as a context
/// so polynomial rings can carry their coefficient field.
pub(crate) trait ElimRing: Copy {
    type El: Clone + PartialEq + std::fmt::Debug;
    /// Euclidean size used for pivot selection; only called on nonzero
    /// elements.
    type Size: Ord;

    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn is_zero(&self, a: &Self::El) -> bool;
    fn sub(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn add_mul(&self, a: &Self::El, b: &Self::El, c: &Self::El) -> Self::El {
        let prod = self.mul(b, c);
        self.sub(a, &self.sub(&self.zero(), &prod))
    }
    fn div_rem(&self, a: &Self::El, b: &Self::El) -> (Self::El, Self::El);
    fn size(&self, a: &Self::El) -> Self::Size;
    /// (u, u_inv) with u a unit such that a * u is the canonical associate
    /// (nonnegative for Z, monic for polynomials).
    fn normalizing_unit(&self, a: &Self::El) -> (Self::El, Self::El);
}

#[derive(Clone, Copy)]
pub(crate) struct IntRing;

impl ElimRing for IntRing {
    type El = BigInt;
    type Size = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn add_mul(&self, a: &BigInt, b: &BigInt, c: &BigInt) -> BigInt {
        a + b * c
    }
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        Integer::div_rem(a, b)
    }
    fn size(&self, a: &BigInt) -> BigInt {
        a.abs()
    }
    fn normalizing_unit(&self, a: &BigInt) -> (BigInt, BigInt) {
        if a.is_negative() {
            (BigInt::from(-1), BigInt::from(-1))
        } else {
            (BigInt::one(), BigInt::one())
        }
    }
}

/// Outcome of diagonalization: canonical diagonal with zeros trailing, plus
/// the column transform pair when requested. With V tracked, the columns of
/// V from `rank` on are a basis of the kernel of the input, and `vinv`
/// converts kernel vectors to coordinates in that basis.
pub(crate) struct Reduction<R: ElimRing> {
    pub diag: Vec<R::El>,
    pub rank: usize,
    // Read by the kernel-transform invariant tests; production code only
    // needs vinv.
    #[allow(dead_code)]
    pub v: Option<Matrix<R::El>>,
    pub vinv: Option<Matrix<R::El>>,
}

pub(crate) fn reduce<R: ElimRing>(ring: R, a: &Matrix<R::El>, track: bool) -> Reduction<R> {
    let rows = a.rows();
    let cols = a.cols();
    let dim = rows.min(cols);
    let mut m = a.entries.clone();
    let idx = |i: usize, j: usize| i * cols + j;

    let identity = |n: usize| {
        Matrix::from_fn(n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
    };
    let (mut v, mut vinv) = if track {
        (Some(identity(cols)), Some(identity(cols)))
    } else {
        (None, None)
    };

    // col_j -= q * col_p on the working matrix and V; the inverse op on Vinv
    // is row_p += q * row_j.
    let col_sub = |m: &mut Vec<R::El>,
                   v: &mut Option<Matrix<R::El>>,
                   vinv: &mut Option<Matrix<R::El>>,
                   j: usize,
                   p: usize,
                   q: &R::El| {
        for i in 0..rows {
            let prod = ring.mul(&m[idx(i, p)], q);
            m[idx(i, j)] = ring.sub(&m[idx(i, j)], &prod);
        }
        if let Some(v) = v {
            for i in 0..cols {
                let prod = ring.mul(v.get(i, p), q);
                let new = ring.sub(v.get(i, j), &prod);
                v.set(i, j, new);
            }
        }
        if let Some(vinv) = vinv {
            for k in 0..cols {
                let new = ring.add_mul(vinv.get(p, k), q, vinv.get(j, k));
                vinv.set(p, k, new);
            }
        }
    };

    let col_swap = |m: &mut Vec<R::El>,
                    v: &mut Option<Matrix<R::El>>,
                    vinv: &mut Option<Matrix<R::El>>,
                    j1: usize,
                    j2: usize| {
        if j1 == j2 {
            return;
        }
        for i in 0..rows {
            m.swap(idx(i, j1), idx(i, j2));
        }
        if let Some(v) = v {
            for i in 0..cols {
                let a = v.get(i, j1).clone();
                let b = v.get(i, j2).clone();
                v.set(i, j1, b);
                v.set(i, j2, a);
            }
        }
        if let Some(vinv) = vinv {
            for k in 0..cols {
                let a = vinv.get(j1, k).clone();
                let b = vinv.get(j2, k).clone();
                vinv.set(j1, k, b);
                vinv.set(j2, k, a);
            }
        }
    };

    let mut p = 0;
    'pivot: while p < dim {
        // Smallest nonzero entry of the trailing submatrix becomes the pivot.
        let mut best: Option<(R::Size, usize, usize)> = None;
        for i in p..rows {
            for j in p..cols {
                let e = &m[idx(i, j)];
                if ring.is_zero(e) {
                    continue;
                }
                let s = ring.size(e);
                if best.as_ref().map_or(true, |(bs, _, _)| s < *bs) {
                    best = Some((s, i, j));
                }
            }
        }
        let Some((_, bi, bj)) = best else {
            break; // trailing submatrix is zero
        };
        if bi != p {
            for j in 0..cols {
                m.swap(idx(bi, j), idx(p, j));
            }
        }
        col_swap(&mut m, &mut v, &mut vinv, bj, p);

        // Reduce the pivot column (row ops) and pivot row (column ops).
        let mut clean = true;
        for i in p + 1..rows {
            if ring.is_zero(&m[idx(i, p)]) {
                continue;
            }
            let (q, rem) = ring.div_rem(&m[idx(i, p)], &m[idx(p, p)]);
            if !ring.is_zero(&q) {
                for j in p..cols {
                    let prod = ring.mul(&m[idx(p, j)], &q);
                    m[idx(i, j)] = ring.sub(&m[idx(i, j)], &prod);
                }
            }
            if !ring.is_zero(&rem) {
                clean = false;
            }
        }
        for j in p + 1..cols {
            if ring.is_zero(&m[idx(p, j)]) {
                continue;
            }
            let (q, rem) = ring.div_rem(&m[idx(p, j)], &m[idx(p, p)]);
            if !ring.is_zero(&q) {
                col_sub(&mut m, &mut v, &mut vinv, j, p, &q);
            }
            if !ring.is_zero(&rem) {
                clean = false;
            }
        }
        if !clean {
            continue 'pivot; // remainders are smaller; re-pick the pivot
        }

        // Pull a non-divisible trailing entry into the pivot row, if any.
        let mut offender = None;
        'scan: for i in p + 1..rows {
            for j in p + 1..cols {
                if ring.is_zero(&m[idx(i, j)]) {
                    continue;
                }
                let (_, rem) = ring.div_rem(&m[idx(i, j)], &m[idx(p, p)]);
                if !ring.is_zero(&rem) {
                    offender = Some(i);
                    break 'scan;
                }
            }
        }
        if let Some(i) = offender {
            for j in p..cols {
                let sum = ring.add_mul(&m[idx(p, j)], &ring.one(), &m[idx(i, j)]);
                m[idx(p, j)] = sum;
            }
            continue 'pivot;
        }

        // Canonicalize the pivot by a unit column scaling.
        let (u, u_inv) = ring.normalizing_unit(&m[idx(p, p)]);
        if u != ring.one() {
            for i in 0..rows {
                m[idx(i, p)] = ring.mul(&m[idx(i, p)], &u);
            }
            if let Some(v) = v.as_mut() {
                for i in 0..cols {
                    let new = ring.mul(v.get(i, p), &u);
                    v.set(i, p, new);
                }
            }
            if let Some(vinv) = vinv.as_mut() {
                for k in 0..cols {
                    let new = ring.mul(vinv.get(p, k), &u_inv);
                    vinv.set(p, k, new);
                }
            }
        }
        p += 1;
    }

    let diag = (0..dim).map(|k| m[idx(k, k)].clone()).collect();
    Reduction { diag, rank: p, v, vinv }
}

/// Invariant factors d_1 | d_2 | ... of an integer matrix, padded with zeros
/// to min(rows, cols). The cokernel is Z^(cols - rank) plus Z/d_k for each
/// factor d_k > 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SmithForm {
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Factors > 1, i.e. the torsion part of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors.iter().filter(|d| **d > BigInt::one()).cloned().collect()
    }
}

pub fn snf_int(m: &IntMatrix) -> SmithForm {
    let red = reduce(IntRing, m, false);
    SmithForm { invariant_factors: red.diag, rank: red.rank }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;
    use crate::matrix::{companion, LaurentMatrix};
    use proptest::prelude::*;

    fn int(m: Vec<Vec<i64>>, cols: usize) -> IntMatrix {
        Matrix::from_rows(
            cols,
            m.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect(),
        )
    }

    fn factors(m: &IntMatrix) -> Vec<i64> {
        snf_int(m).invariant_factors.iter().map(|d| i64::try_from(d).unwrap()).collect()
    }

    /// Brute-force oracle: d_1 * ... * d_k equals the gcd of all k x k
    /// minors. Exponential, only for tiny matrices.
    fn minor_gcd_factors(m: &IntMatrix) -> Vec<BigInt> {
        fn det(m: &IntMatrix, rows: &[usize], cols: &[usize]) -> BigInt {
            if rows.len() == 1 {
                return m.get(rows[0], cols[0]).clone();
            }
            let mut acc = BigInt::zero();
            for (k, &c) in cols.iter().enumerate() {
                let sub: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let minor = det(m, &rows[1..], &sub);
                let term = m.get(rows[0], c) * minor;
                if k % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if n < k {
                return vec![];
            }
            let mut out = subsets(n - 1, k);
            for mut s in subsets(n - 1, k - 1) {
                s.push(n - 1);
                out.push(s);
            }
            out
        }
        let dim = m.rows().min(m.cols());
        let mut out = Vec::new();
        let mut prev = BigInt::one();
        for k in 1..=dim {
            let mut g = BigInt::zero();
            for rs in subsets(m.rows(), k) {
                for cs in subsets(m.cols(), k) {
                    g = g.gcd(&det(m, &rs, &cs));
                }
            }
            if g.is_zero() {
                out.push(BigInt::zero());
                continue;
            }
            out.push(&g / &prev);
            prev = g;
        }
        // After the first zero product every factor is zero.
        if let Some(first_zero) = out.iter().position(|d| d.is_zero()) {
            for d in out.iter_mut().skip(first_zero) {
                *d = BigInt::zero();
            }
        }
        out
    }

    #[test]
    fn diag_2_3_gives_1_6() {
        assert_eq!(factors(&int(vec![vec![2, 0], vec![0, 3]], 2)), vec![1, 6]);
    }

    #[test]
    fn zero_and_identity() {
        assert_eq!(factors(&IntMatrix::zero(2, 2)), vec![0, 0]);
        assert_eq!(factors(&IntMatrix::identity(3)), vec![1, 1, 1]);
        let empty = snf_int(&IntMatrix::zero(0, 4));
        assert_eq!(empty.invariant_factors, Vec::<BigInt>::new());
        assert_eq!(empty.rank, 0);
    }

    #[test]
    fn companion_minus_identity() {
        let c3 = companion(3).unwrap();
        let m = c3.sub(&IntMatrix::identity(3)).unwrap();
        let s = snf_int(&m);
        assert_eq!(factors(&m), vec![1, 1, 0]);
        assert_eq!(s.rank, 2);
        assert_eq!(s.invariant_factors, minor_gcd_factors(&m));
    }

    #[test]
    fn matches_minor_gcd_oracle_on_small_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..60 {
            let r = rng.gen_range(1..=4);
            let c = rng.gen_range(1..=4);
            let m = Matrix::from_fn(r, c, |_, _| BigInt::from(rng.gen_range(-9i64..=9)));
            let s = snf_int(&m);
            assert_eq!(s.invariant_factors, minor_gcd_factors(&m), "matrix {m:?}");
            assert_eq!(s.rank, m.rank_over(crate::field::FieldSelector::rationals()));
        }
    }

    #[test]
    fn kernel_transform_properties() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let r = rng.gen_range(1..=5);
            let c = rng.gen_range(1..=5);
            let m = Matrix::from_fn(r, c, |_, _| BigInt::from(rng.gen_range(-6i64..=6)));
            let red = reduce(IntRing, &m, true);
            let v = red.v.unwrap();
            let vinv = red.vinv.unwrap();
            assert_eq!(v.mul(&vinv).unwrap(), IntMatrix::identity(c));
            // Columns of V beyond the rank span the kernel.
            let prod = m.mul(&v).unwrap();
            for j in red.rank..c {
                for i in 0..r {
                    assert!(prod.get(i, j).is_zero(), "kernel column {j} not annihilated");
                }
            }
        }
    }

    #[test]
    fn polynomial_snf_diagonalizes() {
        // One Laurent-derived check lives here; fuller coverage sits with
        // the quotient machinery.
        use crate::field::Rationals;
        use crate::fpoly::PolyRing;
        let ring = PolyRing::new(Rationals);
        // [[t-1, t-1]] has kernel rank 1.
        let t_minus_1 = ring.from_laurent(&LaurentPoly::t_pow_minus_one(1));
        let m = Matrix::from_rows(2, vec![vec![t_minus_1.clone(), t_minus_1]]);
        let red = reduce(ring, &m, true);
        assert_eq!(red.rank, 1);
        assert_eq!(red.diag.len(), 1);
        assert!(ring.is_monic(&red.diag[0]));
    }

    fn arb_small_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-9i64..=9, r * c).prop_map(move |v| Matrix {
                rows: r,
                cols: c,
                entries: v.into_iter().map(BigInt::from).collect(),
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn invariant_under_row_ops(m in arb_small_matrix(), i in 0usize..4, j in 0usize..4, q in -3i64..=3) {
            let base = snf_int(&m);
            let (i, j) = (i % m.rows(), j % m.rows());
            prop_assume!(i != j);
            let mut tweaked = m.clone();
            for col in 0..m.cols() {
                let val = tweaked.get(i, col) + BigInt::from(q) * m.get(j, col);
                tweaked.set(i, col, val);
            }
            prop_assert_eq!(snf_int(&tweaked), base);
        }

        #[test]
        fn invariant_under_transpose(m in arb_small_matrix()) {
            prop_assert_eq!(snf_int(&m.transpose()), snf_int(&m));
        }

        #[test]
        fn substitute_row_unit_invariance(shift in -4i64..=4, n in 1u64..=5, seed in 0u64..1000) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let m = Matrix::from_fn(3, 3, |_, _| {
                LaurentPoly::from_pairs(&[(rng.gen_range(-2i64..=2), rng.gen_range(-2i64..=2))])
            });
            let mut scaled: LaurentMatrix = m.clone();
            for j in 0..3 {
                scaled.set(1, j, m.get(1, j).shifted(shift));
            }
            let a = snf_int(&m.substitute(n).unwrap());
            let b = snf_int(&scaled.substitute(n).unwrap());
            prop_assert_eq!(a, b);
        }
    }
}

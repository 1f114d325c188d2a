//! Presentation of ker(d1)/im(d2) over a Euclidean ring, and its Smith
//! invariants over K[t, t^-1].
//!
//! The recipe: diagonalize d1 with tracked column transforms, read a kernel
//! basis off the trailing columns of V, express each column of d2 in that
//! basis through V^-1 (exact, because the chain condition forces the
//! non-kernel coordinates to vanish over a domain), and take the Smith form
//! of the resulting presentation matrix.

use num_bigint::BigInt;

use crate::error::Error;
use crate::field::{Field, FieldSelector, Fp, Rationals};
use crate::fpoly::{Poly, PolyRing};
use crate::laurent::LaurentPoly;
use crate::matrix::{LaurentMatrix, Matrix};
use crate::snf::{reduce, ElimRing};

/// Kernel rank of d1 and the presentation matrix of ker(d1)/im(d2) in the
/// kernel basis. The quotient module is coker(presentation).
pub(crate) struct KernelModImage<E> {
    pub kernel_rank: usize,
    pub presentation: Matrix<E>,
}

/// Requires d1 * d2 = 0 (checked by callers over the appropriate ring so the
/// error can cite the offending entry in that ring's notation).
pub(crate) fn kernel_mod_image<R: ElimRing>(
    ring: R,
    d1: &Matrix<R::El>,
    d2: &Matrix<R::El>,
) -> Result<KernelModImage<R::El>, Error> {
    if d1.cols() != d2.rows() {
        return Err(Error::ShapeMismatch {
            lr: d1.rows(),
            lc: d1.cols(),
            rr: d2.rows(),
            rc: d2.cols(),
        });
    }
    let red = reduce(ring, d1, true);
    let vinv = red.vinv.expect("transforms were requested");
    let c1 = d1.cols();
    let kernel_rank = c1 - red.rank;

    // Coordinates of the d2 columns: y = V^-1 * d2.
    let y = Matrix::from_fn(c1, d2.cols(), |i, j| {
        let mut acc = ring.zero();
        for k in 0..c1 {
            let b = d2.get(k, j);
            if ring.is_zero(b) {
                continue;
            }
            acc = ring.add_mul(&acc, vinv.get(i, k), b);
        }
        acc
    });
    // Rows addressing nonzero diagonal entries must vanish: diag_i * y_i = 0
    // in a domain. A nonzero there means d1 * d2 != 0 after all.
    for i in 0..red.rank {
        for j in 0..d2.cols() {
            if !ring.is_zero(y.get(i, j)) {
                return Err(Error::Internal(format!(
                    "image coordinate ({i}, {j}) falls outside the kernel of d1"
                )));
            }
        }
    }
    let presentation = Matrix::from_fn(kernel_rank, d2.cols(), |i, j| y.get(red.rank + i, j).clone());
    Ok(KernelModImage { kernel_rank, presentation })
}

/// Integer polynomial with ascending exponents: the serialization form of a
/// monic factor over K[t] (denominators cleared over Q, residues over F_p).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPolyRepr {
    pub pairs: Vec<(i64, BigInt)>,
}

impl IntPolyRepr {
    pub fn from_laurent(p: &LaurentPoly) -> Self {
        IntPolyRepr { pairs: p.pairs().map(|(e, c)| (e, c.clone())).collect() }
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_pairs(&self.pairs.iter().map(|(e, c)| (*e, c.clone())).collect::<Vec<_>>())
    }

    pub fn degree(&self) -> i64 {
        self.pairs.last().map(|(e, _)| *e).unwrap_or(0)
    }
}

impl std::fmt::Display for IntPolyRepr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_laurent())
    }
}

/// Structure of ker(D1)/im(D2) as a module over K[t, t^-1]: free rank plus
/// the nonunit monic invariant factors of the torsion part, in divisibility
/// order. Their product is the first Alexander polynomial of the complex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyQuotient {
    pub free_rank: usize,
    pub torsion: Vec<IntPolyRepr>,
}

/// Generic worker shared with the divisor check, which needs the factors as
/// field polynomials rather than serialized pairs.
pub(crate) fn quotient_over<F: Field>(
    field: F,
    d1: &LaurentMatrix,
    d2: &LaurentMatrix,
) -> Result<(usize, Vec<Poly<F::Elem>>), Error> {
    let ring = PolyRing::new(field);

    // Clear negative exponents with unit row scalings on d1 (kernel is
    // untouched) and unit column scalings on d2 (image is untouched).
    let row_shift: Vec<i64> = (0..d1.rows())
        .map(|i| (0..d1.cols()).filter_map(|j| d1.get(i, j).min_exp()).min().unwrap_or(0).min(0))
        .collect();
    let d1_poly = Matrix::from_fn(d1.rows(), d1.cols(), |i, j| {
        ring.from_laurent(&d1.get(i, j).shifted(-row_shift[i]))
    });
    let col_shift: Vec<i64> = (0..d2.cols())
        .map(|j| (0..d2.rows()).filter_map(|i| d2.get(i, j).min_exp()).min().unwrap_or(0).min(0))
        .collect();
    let d2_poly = Matrix::from_fn(d2.rows(), d2.cols(), |i, j| {
        ring.from_laurent(&d2.get(i, j).shifted(-col_shift[j]))
    });

    // Chain condition over K[t]: unit scalings preserve vanishing, so this
    // is equivalent to D1 * D2 = 0 over K[t, t^-1].
    if d1.cols() == d2.rows() {
        for i in 0..d1.rows() {
            for j in 0..d2.cols() {
                let mut acc = ring.zero();
                for k in 0..d1.cols() {
                    acc = ring.add_mul(&acc, d1_poly.get(i, k), d2_poly.get(k, j));
                }
                if !ElimRing::is_zero(&ring, &acc) {
                    return Err(Error::ChainCondition {
                        row: i,
                        col: j,
                        entry: ring.to_string_in_t(&acc),
                    });
                }
            }
        }
    }

    let km = kernel_mod_image(ring, &d1_poly, &d2_poly)?;
    let red = reduce(ring, &km.presentation, false);
    let mut torsion = Vec::new();
    for f in red.diag.iter().take(red.rank) {
        let n = ring.unit_normalize(f).expect("nonzero within the rank");
        if n.degree() == Some(0) {
            continue; // unit of K[t, t^-1]
        }
        torsion.push(n);
    }
    Ok((km.kernel_rank - red.rank, torsion))
}

/// Free rank and torsion invariant factors of ker(D1)/im(D2) over
/// K[t, t^-1], for a two-step chain D2: C2 -> C1, D1: C1 -> C0 given over
/// the integer Laurent ring. Factors are monic with units of K[t, t^-1]
/// stripped.
pub fn poly_kernel_and_snf(
    d1: &LaurentMatrix,
    d2: &LaurentMatrix,
    field: FieldSelector,
) -> Result<PolyQuotient, Error> {
    match field.characteristic() {
        0 => {
            let f = Rationals;
            let (free_rank, torsion) = quotient_over(f, d1, d2)?;
            let ring = PolyRing::new(f);
            Ok(PolyQuotient {
                free_rank,
                torsion: torsion.iter().map(|t| IntPolyRepr { pairs: ring.to_int_pairs(t) }).collect(),
            })
        }
        p => {
            let f = Fp::new(p)?;
            let (free_rank, torsion) = quotient_over(f, d1, d2)?;
            let ring = PolyRing::new(f);
            Ok(PolyQuotient {
                free_rank,
                torsion: torsion.iter().map(|t| IntPolyRepr { pairs: ring.to_int_pairs(t) }).collect(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_pairs(pairs)
    }

    fn q() -> FieldSelector {
        FieldSelector::rationals()
    }

    #[test]
    fn injective_d1_empty_d2() {
        // D1 = (t - 1): C1 -> C0 is injective, D2 has no columns.
        let d1 = Matrix::from_rows(1, vec![vec![lp(&[(1, 1), (0, -1)])]]);
        let d2 = LaurentMatrix::zero(1, 0);
        let out = poly_kernel_and_snf(&d1, &d2, q()).unwrap();
        assert_eq!(out.free_rank, 0);
        assert!(out.torsion.is_empty());
    }

    #[test]
    fn zero_maps_give_free_rank_one() {
        let d1 = LaurentMatrix::zero(1, 1);
        let d2 = LaurentMatrix::zero(1, 1);
        let out = poly_kernel_and_snf(&d1, &d2, q()).unwrap();
        assert_eq!(out.free_rank, 1);
        assert!(out.torsion.is_empty());
    }

    #[test]
    fn single_torsion_factor() {
        // D1 = (t-1, t-1), D2 = (t-1, -(t-1))^T: quotient is K[t,1/t]/(t-1).
        let tm1 = lp(&[(1, 1), (0, -1)]);
        let d1 = Matrix::from_rows(2, vec![vec![tm1.clone(), tm1.clone()]]);
        let d2 = Matrix::from_rows(1, vec![vec![tm1.clone()], vec![tm1.neg()]]);
        let out = poly_kernel_and_snf(&d1, &d2, q()).unwrap();
        assert_eq!(out.free_rank, 0);
        assert_eq!(out.torsion.len(), 1);
        assert_eq!(out.torsion[0].pairs, vec![(0, BigInt::from(-1)), (1, BigInt::from(1))]);
    }

    #[test]
    fn unit_factors_are_dropped() {
        // D1 = 0 (1x1), D2 = (t): image is a unit multiple of the kernel,
        // quotient trivial.
        let d1 = LaurentMatrix::zero(1, 1);
        let d2 = Matrix::from_rows(1, vec![vec![lp(&[(1, 1)])]]);
        let out = poly_kernel_and_snf(&d1, &d2, q()).unwrap();
        assert_eq!(out.free_rank, 0);
        assert!(out.torsion.is_empty());
    }

    #[test]
    fn negative_exponents_are_units() {
        // Same quotient written with negative exponents.
        let d1 = Matrix::from_rows(2, vec![vec![lp(&[(0, 1), (-1, -1)]), lp(&[(1, 1), (0, -1)])]]);
        let d2 = Matrix::from_rows(1, vec![vec![lp(&[(0, 1), (-1, -1)])], vec![lp(&[(-1, -1), (-2, 1)])]]);
        // d1 * d2 = (1 - 1/t)(1 - 1/t) + (t - 1)(1/t^2 - 1/t)
        //         = (1 - 1/t)^2 - (t - 1)^2/t^2 = 0.
        let out = poly_kernel_and_snf(&d1, &d2, q()).unwrap();
        assert_eq!(out.free_rank, 0);
        assert_eq!(out.torsion.len(), 1);
        assert_eq!(out.torsion[0].to_laurent(), lp(&[(1, 1), (0, -1)]));
    }

    #[test]
    fn chain_condition_rejected_with_entry() {
        let d1 = Matrix::from_rows(1, vec![vec![lp(&[(1, 1), (0, -1)])]]);
        let d2 = Matrix::from_rows(1, vec![vec![lp(&[(0, 1)])]]);
        match poly_kernel_and_snf(&d1, &d2, q()) {
            Err(Error::ChainCondition { row: 0, col: 0, entry }) => {
                assert_eq!(entry, "-1 + t");
            }
            other => panic!("expected chain-condition error, got {other:?}"),
        }
    }

    #[test]
    fn shape_mismatch_rejected() {
        let d1 = LaurentMatrix::zero(1, 2);
        let d2 = LaurentMatrix::zero(3, 1);
        assert!(matches!(poly_kernel_and_snf(&d1, &d2, q()), Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn mod_p_quotient_can_grow() {
        // D1 = 0, D2 = (t + 1, t - 1) as a 1x2: over Q the image is all of
        // K[t,1/t] (gcd is a unit times ... actually gcd(t+1, t-1) = 1), so
        // the quotient vanishes; over F_2 both entries coincide and leave
        // torsion (t + 1).
        let d1 = LaurentMatrix::zero(1, 1);
        let d2 = Matrix::from_rows(2, vec![vec![lp(&[(1, 1), (0, 1)]), lp(&[(1, 1), (0, -1)])]]);
        let rational = poly_kernel_and_snf(&d1, &d2, q()).unwrap();
        assert_eq!(rational.free_rank, 0);
        assert!(rational.torsion.is_empty());
        let f2 = poly_kernel_and_snf(&d1, &d2, FieldSelector::prime(2).unwrap()).unwrap();
        assert_eq!(f2.free_rank, 0);
        assert_eq!(f2.torsion.len(), 1);
        assert_eq!(f2.torsion[0].to_laurent(), lp(&[(1, 1), (0, 1)]));
    }
}

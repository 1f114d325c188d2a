//! Sparse Laurent polynomials over the integers, the coefficient ring for
//! every specialized Alexander matrix in this crate.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Integer Laurent polynomial, stored sparsely as exponent -> coefficient.
/// No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    /// The monomial c * t^e (zero if c = 0).
    pub fn monomial<C: Into<BigInt>>(coef: C, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        let c: BigInt = coef.into();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// t^e - 1. Zero when e = 0.
    pub fn t_pow_minus_one(e: i64) -> Self {
        let mut p = LaurentPoly::monomial(1, e);
        p.add_term(BigInt::from(-1), 0);
        p
    }

    pub fn from_pairs<C: Into<BigInt> + Clone>(pairs: &[(i64, C)]) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in pairs {
            p.add_term(c.clone().into(), *e);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Exponent/coefficient pairs in ascending exponent order.
    pub fn pairs(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, coef: BigInt, exp: i64) {
        if coef.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coef);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms.iter() {
            out.add_term(c.clone(), *e);
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms.iter() {
            out.add_term(-c, *e);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in other.terms.iter() {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = LaurentPoly::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Multiplication by the unit t^k.
    pub fn shifted(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// Exact division in Z[t, t^-1]. Errors if the quotient does not exist
    /// with integer coefficients.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, Error> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        // Shift both to ordinary polynomials; units don't affect exactness.
        let sa = self.min_exp().unwrap();
        let sb = divisor.min_exp().unwrap();
        let a = self.shifted(-sa);
        let b = divisor.shifted(-sb);
        let deg_a = a.max_exp().unwrap();
        let deg_b = b.max_exp().unwrap();
        if deg_a < deg_b {
            return Err(Error::InexactDivision { terms: self.term_count() });
        }
        // Long division with rational coefficients, then an integrality check.
        let mut rem: BTreeMap<i64, BigRational> =
            a.terms.iter().map(|(e, c)| (*e, BigRational::from_integer(c.clone()))).collect();
        let lead_b = BigRational::from_integer(b.coeff(deg_b));
        let mut quo: BTreeMap<i64, BigRational> = BTreeMap::new();
        while let Some((&e, _)) = rem.iter().next_back() {
            if e < deg_b {
                break;
            }
            let q = rem[&e].clone() / lead_b.clone();
            let shift = e - deg_b;
            quo.insert(shift, q.clone());
            for (eb, cb) in b.terms.iter() {
                let delta = &q * BigRational::from_integer(cb.clone());
                let slot = rem.entry(eb + shift).or_insert_with(BigRational::zero);
                *slot -= delta;
                if slot.is_zero() {
                    rem.remove(&(eb + shift));
                }
            }
        }
        if !rem.is_empty() {
            return Err(Error::InexactDivision { terms: rem.len() });
        }
        let mut out = LaurentPoly::zero();
        for (e, c) in quo {
            if !c.is_integer() {
                return Err(Error::InexactDivision { terms: 1 });
            }
            out.add_term(c.to_integer(), e + sa - sb);
        }
        Ok(out)
    }

    /// Canonical representative modulo units +-t^k: minimal exponent shifted
    /// to 0 and positive leading coefficient. canonical(0) = 0.
    pub fn canonical(&self) -> Self {
        match self.min_exp() {
            None => LaurentPoly::zero(),
            Some(m) => {
                let shifted = self.shifted(-m);
                let lead = shifted.coeff(shifted.max_exp().unwrap());
                if lead.is_negative() {
                    shifted.neg()
                } else {
                    shifted
                }
            }
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coef = mag.is_one();
            match (*e, unit_coef) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{mag}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_pairs(pairs)
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[(0, 1), (1, 2)]);
        let b = p(&[(0, -1), (1, -2)]);
        assert!(a.add(&b).is_zero());
        assert_eq!(a.sub(&a), LaurentPoly::zero());
        let sq = a.mul(&a);
        assert_eq!(sq, p(&[(0, 1), (1, 4), (2, 4)]));
        assert_eq!(a.pow(2), sq);
    }

    #[test]
    fn t_pow_minus_one_zero_exponent() {
        assert!(LaurentPoly::t_pow_minus_one(0).is_zero());
        assert_eq!(LaurentPoly::t_pow_minus_one(-2), p(&[(-2, 1), (0, -1)]));
    }

    #[test]
    fn canonical_shifts_and_signs() {
        // -t^-2 + t: min exp to 0, leading coefficient positive.
        let q = p(&[(-2, -1), (1, 1)]);
        assert_eq!(q.canonical(), p(&[(0, -1), (3, 1)]));
        assert!(LaurentPoly::zero().canonical().is_zero());
        // Constant -3 canonicalizes to 3.
        assert_eq!(p(&[(4, -3)]).canonical(), p(&[(0, 3)]));
    }

    #[test]
    fn exact_division_geometric() {
        // (t^-2 - 1)/(t - 1) = -t^-2 - t^-1.
        let num = LaurentPoly::t_pow_minus_one(-2);
        let den = LaurentPoly::t_pow_minus_one(1);
        let q = num.div_exact(&den).unwrap();
        assert_eq!(q, p(&[(-2, -1), (-1, -1)]));
        assert_eq!(q.mul(&den), num);
    }

    #[test]
    fn inexact_division_rejected() {
        let num = p(&[(0, 1), (2, 1)]); // t^2 + 1
        let den = LaurentPoly::t_pow_minus_one(1);
        assert!(num.div_exact(&den).is_err());
        assert_eq!(num.div_exact(&LaurentPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn display_readable() {
        assert_eq!(p(&[(-1, 1), (0, -2), (2, 3)]).to_string(), "t^-1 - 2 + 3*t^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p(&[(1, -1)]).to_string(), "-t");
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-6i64..=6, -9i64..=9), 0..6)
            .prop_map(|v| LaurentPoly::from_pairs(&v))
    }

    proptest! {
        #[test]
        fn canonical_ignores_units(q in arb_poly(), k in -5i64..=5, sign in prop::bool::ANY) {
            let unit = LaurentPoly::monomial(if sign { 1 } else { -1 }, k);
            prop_assert_eq!(q.mul(&unit).canonical(), q.canonical());
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let prod = a.mul(&b);
            prop_assert_eq!(prod.div_exact(&b).unwrap(), a);
        }

        #[test]
        fn mul_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }
    }
}

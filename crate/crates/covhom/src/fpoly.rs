//! Dense univariate polynomials over a coefficient field, with the
//! Euclidean-ring hooks that let the Smith elimination engine run over K[t].

use num_bigint::BigInt;

use crate::field::Field;
use crate::laurent::LaurentPoly;
use crate::snf::ElimRing;

/// Coefficients in ascending degree; no trailing zeros (the zero polynomial
/// is the empty vector). All arithmetic goes through a `PolyRing`, which
/// maintains that invariant.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<E> {
    pub(crate) coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }
}

#[derive(Clone, Copy)]
pub struct PolyRing<F: Field> {
    pub field: F,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F) -> Self {
        PolyRing { field }
    }

    fn trim(&self, mut coeffs: Vec<F::Elem>) -> Poly<F::Elem> {
        while coeffs.last().map_or(false, |c| self.field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_coeffs(&self, coeffs: Vec<F::Elem>) -> Poly<F::Elem> {
        self.trim(coeffs)
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.trim(vec![c])
    }

    /// Reduce an integer Laurent polynomial with nonnegative exponents into
    /// K[t]. Panics on negative exponents; callers shift rows or columns by
    /// units first.
    pub fn from_laurent(&self, p: &LaurentPoly) -> Poly<F::Elem> {
        match p.max_exp() {
            None => self.zero(),
            Some(max) => {
                assert!(p.min_exp().unwrap() >= 0, "negative exponent reaches K[t]");
                let mut coeffs = vec![self.field.zero(); max as usize + 1];
                for (e, c) in p.pairs() {
                    coeffs[e as usize] = self.field.from_bigint(c);
                }
                self.trim(coeffs)
            }
        }
    }

    pub fn leading(&self, a: &Poly<F::Elem>) -> Option<F::Elem> {
        a.coeffs.last().cloned()
    }

    pub fn is_monic(&self, a: &Poly<F::Elem>) -> bool {
        a.coeffs.last().map_or(false, |c| *c == self.field.one())
    }

    pub fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let n = a.coeffs.len().max(b.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let x = a.coeffs.get(i);
            let y = b.coeffs.get(i);
            out.push(match (x, y) {
                (Some(x), Some(y)) => self.field.add(x, y),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => y.clone(),
                (None, None) => unreachable!(),
            });
        }
        self.trim(out)
    }

    pub fn neg(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        Poly { coeffs: a.coeffs.iter().map(|c| self.field.neg(c)).collect() }
    }

    pub fn sub(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            return self.zero();
        }
        let mut out = vec![self.field.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.field.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                let prod = self.field.mul(x, y);
                out[i + j] = self.field.add(&out[i + j], &prod);
            }
        }
        self.trim(out)
    }

    /// Euclidean division: a = q*b + r with deg r < deg b. Panics if b = 0.
    pub fn div_rem_poly(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> (Poly<F::Elem>, Poly<F::Elem>) {
        let db = b.degree().expect("division by the zero polynomial");
        let lead_inv = self.field.inv(b.coeffs.last().unwrap());
        let mut rem = a.coeffs.clone();
        let mut quo = vec![self.field.zero(); a.coeffs.len().saturating_sub(db)];
        while rem.len() > db {
            let head = rem.last().unwrap();
            if self.field.is_zero(head) {
                rem.pop();
                continue;
            }
            let shift = rem.len() - 1 - db;
            let q = self.field.mul(head, &lead_inv);
            for (k, c) in b.coeffs.iter().enumerate() {
                let delta = self.field.mul(&q, c);
                rem[shift + k] = self.field.sub(&rem[shift + k], &delta);
            }
            quo[shift] = q;
            debug_assert!(self.field.is_zero(rem.last().unwrap()));
            rem.pop();
        }
        (self.trim(quo), self.trim(rem))
    }

    pub fn divides(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> bool {
        if a.coeffs.is_empty() {
            return b.coeffs.is_empty();
        }
        self.div_rem_poly(b, a).1.coeffs.is_empty()
    }

    /// Number of leading zero coefficients, i.e. the multiplicity of t.
    pub fn valuation(&self, a: &Poly<F::Elem>) -> Option<usize> {
        a.coeffs.iter().position(|c| !self.field.is_zero(c))
    }

    /// Strip units of K[t, t^-1]: divide out t^valuation and scale monic.
    /// Returns None for the zero polynomial.
    pub fn unit_normalize(&self, a: &Poly<F::Elem>) -> Option<Poly<F::Elem>> {
        let v = self.valuation(a)?;
        let coeffs: Vec<F::Elem> = a.coeffs[v..].to_vec();
        let inv = self.field.inv(coeffs.last().unwrap());
        Some(Poly { coeffs: coeffs.iter().map(|c| self.field.mul(c, &inv)).collect() })
    }

    /// Serialization form: (exponent, numerator) pairs with denominators
    /// cleared, ascending exponents, positive leading numerator. Residues
    /// pass through unchanged over F_p.
    pub fn to_int_pairs(&self, a: &Poly<F::Elem>) -> Vec<(i64, BigInt)> {
        use num_integer::Integer;
        use num_traits::{One, Signed, Zero};
        let parts: Vec<(BigInt, BigInt)> = a.coeffs.iter().map(|c| self.field.to_int_pair(c)).collect();
        let mut lcm = BigInt::one();
        for (_, den) in &parts {
            lcm = lcm.lcm(den);
        }
        let mut pairs: Vec<(i64, BigInt)> = parts
            .iter()
            .enumerate()
            .filter(|(_, (num, _))| !num.is_zero())
            .map(|(e, (num, den))| (e as i64, num * (&lcm / den)))
            .collect();
        let mut content = BigInt::zero();
        for (_, c) in &pairs {
            content = content.gcd(c);
        }
        if !content.is_zero() {
            if pairs.last().map_or(false, |(_, c)| c.is_negative()) {
                content = -content;
            }
            for (_, c) in pairs.iter_mut() {
                *c = &*c / &content;
            }
        }
        pairs
    }

    pub fn to_string_in_t(&self, a: &Poly<F::Elem>) -> String {
        let pairs = self.to_int_pairs(a);
        let mut p = LaurentPoly::zero();
        for (e, c) in pairs {
            p = p.add(&LaurentPoly::monomial(c, e));
        }
        p.to_string()
    }
}

impl<F: Field> ElimRing for PolyRing<F> {
    type El = Poly<F::Elem>;
    type Size = usize;

    fn zero(&self) -> Self::El {
        Poly { coeffs: Vec::new() }
    }
    fn one(&self) -> Self::El {
        Poly { coeffs: vec![self.field.one()] }
    }
    fn is_zero(&self, a: &Self::El) -> bool {
        a.coeffs.is_empty()
    }
    fn sub(&self, a: &Self::El, b: &Self::El) -> Self::El {
        PolyRing::sub(self, a, b)
    }
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El {
        PolyRing::mul(self, a, b)
    }
    fn div_rem(&self, a: &Self::El, b: &Self::El) -> (Self::El, Self::El) {
        self.div_rem_poly(a, b)
    }
    fn size(&self, a: &Self::El) -> usize {
        a.degree().expect("size of the zero polynomial")
    }
    fn normalizing_unit(&self, a: &Self::El) -> (Self::El, Self::El) {
        let lead = self.leading(a).expect("normalizing the zero polynomial");
        (self.constant(self.field.inv(&lead)), self.constant(lead))
    }
}

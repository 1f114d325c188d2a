//! Coefficient fields: the rationals and prime fields F_p, selected at
//! runtime by characteristic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Characteristic 0 (rationals) or a verified prime p.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FieldSelector {
    characteristic: u64,
}

impl FieldSelector {
    pub fn rationals() -> Self {
        FieldSelector { characteristic: 0 }
    }

    pub fn prime(p: u64) -> Result<Self, Error> {
        if is_prime(p) {
            Ok(FieldSelector { characteristic: p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// 0 selects the rationals, a prime p selects F_p.
    pub fn new(characteristic: u64) -> Result<Self, Error> {
        if characteristic == 0 {
            Ok(Self::rationals())
        } else {
            Self::prime(characteristic)
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }
}

impl std::fmt::Display for FieldSelector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.characteristic {
            0 => write!(f, "Q"),
            p => write!(f, "F{p}"),
        }
    }
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mod_mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mod_mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, m);
        }
        base = mod_mul(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Field operations threaded as a lightweight context, so prime fields can
/// carry their modulus without per-element storage.
pub trait Field: Copy {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse of a nonzero element.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// Canonical integer data for serialization: F_p residues as-is, a
    /// rational as (numerator, denominator) with positive denominator.
    fn to_int_pair(&self, a: &Self::Elem) -> (BigInt, BigInt);
}

#[derive(Clone, Copy, Debug)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn to_int_pair(&self, a: &BigRational) -> (BigInt, BigInt) {
        let mut num = a.numer().clone();
        let mut den = a.denom().clone();
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        (num, den)
    }
}

/// F_p for a prime p. Elements are canonical residues in [0, p).
#[derive(Clone, Copy, Debug)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Result<Self, Error> {
        if is_prime(p) {
            Ok(Fp { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Field for Fp {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + (self.p - *b) as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mod_mul(*a, *b, self.p)
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero mod {}", self.p);
        mod_pow(*a, self.p - 2, self.p)
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let r = n.mod_floor(&p);
        let (_, digits) = r.to_u64_digits();
        digits.first().copied().unwrap_or(0)
    }
    fn to_int_pair(&self, a: &u64) -> (BigInt, BigInt) {
        (BigInt::from(*a), BigInt::one())
    }
}

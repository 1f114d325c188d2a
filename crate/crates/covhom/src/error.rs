//! Crate-wide error type. Every variant names the violated contract and
//! enough data to locate it.

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is neither 0 nor prime")]
    NotPrime(u64),

    #[error("matrix shape mismatch: left is {lr}x{lc}, right is {rr}x{rc}")]
    ShapeMismatch { lr: usize, lc: usize, rr: usize, rc: usize },

    #[error("sheet count must be >= 1, got {0}")]
    BadSheetCount(u64),

    #[error("sheet count {sheets} does not divide the character modulus {modulus}")]
    SheetsDontDivide { sheets: u64, modulus: u64 },

    #[error("Laurent division is not exact: remainder has {terms} nonzero term(s)")]
    InexactDivision { terms: usize },

    #[error("division by the zero Laurent polynomial")]
    DivisionByZero,

    #[error("chain condition violated: (d1*d2)[{row}][{col}] = {entry} != 0")]
    ChainCondition { row: usize, col: usize, entry: String },

    #[error("generator index {index} out of range for {count} generators (relator {relator})")]
    GeneratorIndex { relator: usize, index: usize, count: usize },

    #[error("character has {weights} weights but the presentation has {generators} generators")]
    CharacterLength { weights: usize, generators: usize },

    #[error("relator {relator} has weight {weight}, expected 0{modulus}", modulus = fmt_mod(*.modulus))]
    RelatorWeight { relator: usize, weight: i64, modulus: Option<u64> },

    #[error("arrangement needs at least 2 marked points, got {0}")]
    TooFewPoints(usize),

    #[error("marked point {index} has multiplicity {m}, every multiplicity must be >= 2")]
    BadMultiplicity { index: usize, m: usize },

    #[error("line count must satisfy n = 1 + sum(m_i - 1): n = {n} but the multiplicities give {expected}")]
    LineCountMismatch { n: usize, expected: usize },

    #[error("point {index} carries {got} weights, expected m_i - 1 = {expected}")]
    WeightCount { index: usize, got: usize, expected: usize },

    #[error("character weights must sum to zero: (1-s)*eps + sum(eps_i) = {sum} != 0")]
    WeightSum { sum: i64 },

    #[error("character weights must sum to zero mod {modulus}: total {sum} is not divisible")]
    WeightSumMod { sum: i64, modulus: u64 },

    #[error("character weights have gcd {gcd}, expected gcd 1{modulus}", modulus = fmt_mod(*.modulus))]
    WeightGcd { gcd: u64, modulus: Option<u64> },

    #[error("operation requires eps = 1{modulus}, character has eps = {eps}", modulus = fmt_mod(*.modulus))]
    EpsNotOne { eps: i64, modulus: Option<u64> },

    #[error("operation requires an integral character, this one is mod {0}")]
    NotIntegral(u64),

    #[error("divisor hypotheses fail: eps = {eps}, first zero eps_i at point {point:?} with multiplicity > 2")]
    DivisorHypotheses { eps: i64, point: Option<usize> },

    #[error("cover is disconnected: gcd of the weights with N = {n} is {gcd}")]
    Disconnected { n: u64, gcd: u64 },

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("torsion factor {0} does not fit in u64")]
    TorsionOverflow(BigInt),
}

fn fmt_mod(m: Option<u64>) -> String {
    match m {
        Some(n) => format!(" (mod {n})"),
        None => String::new(),
    }
}

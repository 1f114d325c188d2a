//! Free-group words, finite presentations, weight characters, and Fox
//! derivatives specialized through a character to one Laurent variable.

use crate::error::Error;
use crate::laurent::LaurentPoly;
use crate::matrix::{LaurentMatrix, Matrix};

/// Word in a free group: letters (generator index, +-1).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Word {
    letters: Vec<(usize, i8)>,
}

impl Word {
    pub fn new(letters: Vec<(usize, i8)>) -> Self {
        assert!(letters.iter().all(|&(_, s)| s == 1 || s == -1), "letter signs must be +-1");
        Word { letters }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub fn generator(g: usize) -> Self {
        Word { letters: vec![(g, 1)] }
    }

    /// g^k, k of either sign.
    pub fn power(g: usize, k: i64) -> Self {
        let sign = if k >= 0 { 1 } else { -1 };
        Word { letters: vec![(g, sign); k.unsigned_abs() as usize] }
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|&(g, s)| (g, -s)).collect() }
    }

    /// a b a^-1 b^-1.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    /// Free reduction: cancel adjacent x x^-1 pairs until none remain.
    pub fn reduced(&self) -> Word {
        let mut stack: Vec<(usize, i8)> = Vec::with_capacity(self.letters.len());
        for &(g, s) in &self.letters {
            if let Some(&(tg, ts)) = stack.last() {
                if tg == g && ts == -s {
                    stack.pop();
                    continue;
                }
            }
            stack.push((g, s));
        }
        Word { letters: stack }
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|&(g, _)| g).max()
    }

    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.letters.iter().filter(|&&(h, _)| h == g).map(|&(_, s)| s as i64).sum()
    }
}

/// Finite presentation with named generators; relator letters index into the
/// generator list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    generator_names: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generator_names: Vec<String>, relators: Vec<Word>) -> Result<Self, Error> {
        let count = generator_names.len();
        for (ri, r) in relators.iter().enumerate() {
            if let Some(g) = r.max_generator() {
                if g >= count {
                    return Err(Error::GeneratorIndex { relator: ri, index: g, count });
                }
            }
        }
        Ok(Presentation { generator_names, relators })
    }

    pub fn generator_count(&self) -> usize {
        self.generator_names.len()
    }

    pub fn relator_count(&self) -> usize {
        self.relators.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }
}

/// Weight character on a presentation's generators: a homomorphism to Z, or
/// to Z/N when a modulus is present. Relator weights must vanish there.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Character {
    weights: Vec<i64>,
    modulus: Option<u64>,
}

impl Character {
    pub fn integral(weights: Vec<i64>) -> Self {
        Character { weights, modulus: None }
    }

    pub fn modular(weights: Vec<i64>, modulus: u64) -> Result<Self, Error> {
        if modulus == 0 {
            return Err(Error::BadSheetCount(0));
        }
        Ok(Character { weights, modulus: Some(modulus) })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    pub fn weight_of(&self, g: usize) -> i64 {
        self.weights[g]
    }

    /// Total weight of a word (computed over Z; reduce mod N as needed).
    pub fn word_weight(&self, w: &Word) -> i64 {
        w.letters().iter().map(|&(g, s)| self.weights[g] * s as i64).sum()
    }

    fn weight_vanishes(&self, w: i64) -> bool {
        match self.modulus {
            None => w == 0,
            Some(n) => w.rem_euclid(n as i64) == 0,
        }
    }
}

/// Checks the character length and that every relator weight vanishes
/// (exactly, or mod N for modular characters). The error names the first
/// failing relator and its weight.
pub fn validate_character(p: &Presentation, chi: &Character) -> Result<(), Error> {
    if chi.weights().len() != p.generator_count() {
        return Err(Error::CharacterLength {
            weights: chi.weights().len(),
            generators: p.generator_count(),
        });
    }
    for (ri, r) in p.relators().iter().enumerate() {
        let w = chi.word_weight(r);
        if !chi.weight_vanishes(w) {
            return Err(Error::RelatorWeight { relator: ri, weight: w, modulus: chi.modulus() });
        }
    }
    Ok(())
}

/// Fox derivative of a word with respect to generator g, specialized through
/// the character: x_j contributes t^(weight of the prefix so far) when
/// j = g. One left-to-right pass over the freely reduced word.
pub fn fox_derivative(w: &Word, g: usize, chi: &Character) -> LaurentPoly {
    let reduced = w.reduced();
    let mut out = LaurentPoly::zero();
    let mut prefix_weight: i64 = 0;
    for &(h, s) in reduced.letters() {
        if s == 1 {
            if h == g {
                out = out.add(&LaurentPoly::monomial(1, prefix_weight));
            }
            prefix_weight += chi.weight_of(h);
        } else {
            prefix_weight -= chi.weight_of(h);
            if h == g {
                out = out.add(&LaurentPoly::monomial(-1, prefix_weight));
            }
        }
    }
    out
}

/// Specialized Alexander matrix: rows indexed by relators, columns by
/// generators, entry (i, j) the Fox derivative of relator i by generator j.
pub fn fox_matrix(p: &Presentation, chi: &Character) -> Result<LaurentMatrix, Error> {
    validate_character(p, chi)?;
    Ok(Matrix::from_fn(p.relator_count(), p.generator_count(), |i, j| {
        fox_derivative(&p.relators()[i], j, chi)
    }))
}

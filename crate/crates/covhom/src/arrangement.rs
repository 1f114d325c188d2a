//! Marked line arrangements, their boundary-manifold presentations, weight
//! characters, and the two independent routes to the specialized Alexander
//! matrix (Fox calculus on the presentation, and a direct closed-form
//! transcription with its diagonal reduction).

use num_integer::Integer;

use crate::error::Error;
use crate::fox::{Character, Presentation, Word};
use crate::laurent::LaurentPoly;
use crate::matrix::LaurentMatrix;

/// A line arrangement recorded by its line count n and the multiplicities
/// m_i >= 2 of its s >= 2 marked multiple points along a distinguished line,
/// subject to n = 1 + sum(m_i - 1).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MarkedArrangement {
    n: usize,
    multiplicities: Vec<usize>,
}

impl MarkedArrangement {
    pub fn new(n: usize, multiplicities: Vec<usize>) -> Result<Self, Error> {
        if multiplicities.len() < 2 {
            return Err(Error::TooFewPoints(multiplicities.len()));
        }
        for (i, &m) in multiplicities.iter().enumerate() {
            if m < 2 {
                return Err(Error::BadMultiplicity { index: i, m });
            }
        }
        let expected = 1 + multiplicities.iter().map(|m| m - 1).sum::<usize>();
        if n != expected {
            return Err(Error::LineCountMismatch { n, expected });
        }
        Ok(MarkedArrangement { n, multiplicities })
    }

    pub fn line_count(&self) -> usize {
        self.n
    }

    pub fn point_count(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Generator index of beta_i (0-based point index); alpha is generator 0
    /// and the generators alpha_{i,j} for j = 2..m_i-1 follow beta_i.
    fn beta_index(&self, i: usize) -> usize {
        1 + self.multiplicities[..i].iter().map(|m| m - 1).sum::<usize>()
    }

    /// Boundary-manifold presentation: generators alpha, then per point
    /// beta_i followed by alpha_{i,2}..alpha_{i,m_i-1}; relators the long
    /// word alpha^(1-s) beta_1..beta_s, then per point [alpha, beta_i] and
    /// [alpha_{i,j}, beta_i]. Generator count = relator count = n.
    pub fn boundary_presentation(&self) -> Presentation {
        let s = self.point_count();
        let mut names = vec!["a".to_string()];
        for (i, &m) in self.multiplicities.iter().enumerate() {
            names.push(format!("b{}", i + 1));
            for j in 2..m {
                names.push(format!("a{}_{}", i + 1, j));
            }
        }

        let mut long = Word::power(0, 1 - s as i64);
        for i in 0..s {
            long = long.concat(&Word::generator(self.beta_index(i)));
        }
        let mut relators = vec![long];
        for (i, &m) in self.multiplicities.iter().enumerate() {
            let beta = Word::generator(self.beta_index(i));
            relators.push(Word::commutator(&Word::generator(0), &beta));
            for j in 2..m {
                let gen = Word::generator(self.beta_index(i) + (j - 1));
                relators.push(Word::commutator(&gen, &beta));
            }
        }
        Presentation::new(names, relators).expect("indices are in range by construction")
    }

    /// Validates and packages a weight character for this arrangement.
    pub fn character(
        &self,
        eps: i64,
        point_weights: Vec<Vec<i64>>,
        mode: CharMode,
    ) -> Result<ArrangementCharacter, Error> {
        if point_weights.len() != self.point_count() {
            return Err(Error::WeightCount {
                index: point_weights.len().min(self.point_count()),
                got: point_weights.len(),
                expected: self.point_count(),
            });
        }
        for (i, (ws, &m)) in point_weights.iter().zip(self.multiplicities.iter()).enumerate() {
            if ws.len() != m - 1 {
                return Err(Error::WeightCount { index: i, got: ws.len(), expected: m - 1 });
            }
        }
        let chi = ArrangementCharacter { eps, point_weights, mode };
        let total: i64 = eps + chi.point_weights.iter().flatten().sum::<i64>();
        let gcd = chi
            .all_weights()
            .iter()
            .fold(0u64, |acc, w| acc.gcd(&w.unsigned_abs()));
        match mode {
            CharMode::Integral => {
                if total != 0 {
                    return Err(Error::WeightSum { sum: total });
                }
                if gcd != 1 {
                    return Err(Error::WeightGcd { gcd, modulus: None });
                }
            }
            CharMode::ModN(n) => {
                if n == 0 {
                    return Err(Error::BadSheetCount(0));
                }
                if total.rem_euclid(n as i64) != 0 {
                    return Err(Error::WeightSumMod { sum: total, modulus: n });
                }
                let g = gcd.gcd(&n);
                if g != 1 {
                    return Err(Error::WeightGcd { gcd: g, modulus: Some(n) });
                }
            }
        }
        Ok(chi)
    }
}

/// Integral characters land in Z; mod-N characters are only meaningful as
/// residues and unlock the weaker hypotheses of the mod-N theory.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CharMode {
    Integral,
    ModN(u64),
}

/// Weight data: eps on the distinguished line and eps_{i,j} on the other
/// lines through each marked point (j = 2..m_i, so m_i - 1 entries per
/// point). The derived totals eps_i = eps + sum_j eps_{i,j} weight the
/// beta_i generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArrangementCharacter {
    eps: i64,
    point_weights: Vec<Vec<i64>>,
    mode: CharMode,
}

impl ArrangementCharacter {
    pub fn eps(&self) -> i64 {
        self.eps
    }

    pub fn point_weights(&self) -> &[Vec<i64>] {
        &self.point_weights
    }

    pub fn mode(&self) -> CharMode {
        self.mode
    }

    pub fn is_integral(&self) -> bool {
        matches!(self.mode, CharMode::Integral)
    }

    /// eps_i = eps + sum of the point's weights.
    pub fn point_totals(&self) -> Vec<i64> {
        self.point_weights.iter().map(|ws| self.eps + ws.iter().sum::<i64>()).collect()
    }

    /// Every primitive weight: eps and each eps_{i,j}. Their gcd governs
    /// validity and cover connectivity.
    pub fn all_weights(&self) -> Vec<i64> {
        let mut out = vec![self.eps];
        out.extend(self.point_weights.iter().flatten().copied());
        out
    }

    /// eps = 1 exactly (integral) or eps = 1 mod N (modular).
    pub fn eps_is_one(&self) -> bool {
        match self.mode {
            CharMode::Integral => self.eps == 1,
            CharMode::ModN(n) => self.eps.rem_euclid(n as i64) == 1 % n as i64,
        }
    }

    /// Character on the boundary presentation's generators, in generator
    /// order: alpha gets eps, beta_i gets eps_i, alpha_{i,j} gets eps_{i,j}
    /// for j = 2..m_i-1 (the last weight of each point only enters eps_i).
    pub fn presentation_character(&self, a: &MarkedArrangement) -> Character {
        let totals = self.point_totals();
        let mut weights = vec![self.eps];
        for (i, ws) in self.point_weights.iter().enumerate() {
            weights.push(totals[i]);
            weights.extend_from_slice(&ws[..ws.len() - 1]);
        }
        debug_assert_eq!(weights.len(), a.line_count());
        match self.mode {
            CharMode::Integral => Character::integral(weights),
            CharMode::ModN(n) => Character::modular(weights, n).expect("modulus >= 1 was validated"),
        }
    }
}

/// Closed-form transcription of the specialized Alexander matrix, written
/// without running Fox calculus. Row and column order match
/// `boundary_presentation`: row 0 is the long relator, then per point the
/// [alpha, beta_i] row followed by the [alpha_{i,j}, beta_i] rows.
pub fn direct_alexander(
    a: &MarkedArrangement,
    chi: &ArrangementCharacter,
) -> Result<LaurentMatrix, Error> {
    let s = a.point_count() as i64;
    let eps = chi.eps();
    let totals = chi.point_totals();
    let n = a.line_count();
    let mut m = LaurentMatrix::zero(n, n);

    // Long relator row: the alpha entry is the exact quotient
    // (t^(eps(1-s)) - 1)/(t^eps - 1) when eps != 0, which equals the prefix
    // sum of alpha^(1-s); the beta_i entry is t to the prefix weight.
    let alpha_entry = if eps != 0 {
        LaurentPoly::t_pow_minus_one(eps * (1 - s)).div_exact(&LaurentPoly::t_pow_minus_one(eps))?
    } else {
        LaurentPoly::monomial(1 - s, 0)
    };
    m.set(0, 0, alpha_entry);
    let mut prefix = eps * (1 - s);
    for i in 0..a.point_count() {
        m.set(0, a.beta_index(i), LaurentPoly::monomial(1, prefix));
        prefix += totals[i];
    }

    let mut row = 1;
    for (i, &mi) in a.multiplicities().iter().enumerate() {
        let beta = a.beta_index(i);
        let one_minus_ti = LaurentPoly::monomial(1, 0).sub(&LaurentPoly::monomial(1, totals[i]));
        m.set(row, 0, one_minus_ti.clone());
        m.set(row, beta, LaurentPoly::t_pow_minus_one(eps));
        row += 1;
        for j in 2..mi {
            let w = chi.point_weights()[i][j - 2];
            m.set(row, beta, LaurentPoly::t_pow_minus_one(w));
            m.set(row, beta + (j - 1), one_minus_ti.clone());
            row += 1;
        }
    }
    Ok(m)
}

/// The diagonal matrix the Alexander matrix reduces to by elementary moves
/// over the Laurent ring when eps = 1: diag(0, t^(1-s), (t-1) x (s-1),
/// (1 - t^(eps_i)) x (m_i - 2) per point). For mod-N characters with
/// eps = 1 mod N, eps is first normalized to the representative 1 and the
/// totals are rebuilt from it.
pub fn diagonal_form(
    a: &MarkedArrangement,
    chi: &ArrangementCharacter,
) -> Result<LaurentMatrix, Error> {
    if !chi.eps_is_one() {
        let modulus = match chi.mode() {
            CharMode::Integral => None,
            CharMode::ModN(n) => Some(n),
        };
        return Err(Error::EpsNotOne { eps: chi.eps(), modulus });
    }
    let s = a.point_count() as i64;
    let normalized_totals: Vec<i64> =
        chi.point_weights().iter().map(|ws| 1 + ws.iter().sum::<i64>()).collect();
    let mut entries = vec![LaurentPoly::zero(), LaurentPoly::monomial(1, 1 - s)];
    for _ in 0..s - 1 {
        entries.push(LaurentPoly::t_pow_minus_one(1));
    }
    for (i, &mi) in a.multiplicities().iter().enumerate() {
        for _ in 0..mi - 2 {
            entries
                .push(LaurentPoly::monomial(1, 0).sub(&LaurentPoly::monomial(1, normalized_totals[i])));
        }
    }
    debug_assert_eq!(entries.len(), a.line_count());
    let n = a.line_count();
    let mut m = LaurentMatrix::zero(n, n);
    for (k, e) in entries.into_iter().enumerate() {
        m.set(k, k, e);
    }
    Ok(m)
}

/// The canonical divisor (t-1)(t^eps - 1)^(s-2) prod (t^(eps_i) - 1)^(m_i-2)
/// that bounds the first Alexander polynomial of the infinite cyclic cover.
/// Requires an integral character with eps != 0 and eps_i != 0 at every
/// point of multiplicity > 2.
pub fn alexander_divisor(
    a: &MarkedArrangement,
    chi: &ArrangementCharacter,
) -> Result<LaurentPoly, Error> {
    match chi.mode() {
        CharMode::ModN(n) => return Err(Error::NotIntegral(n)),
        CharMode::Integral => {}
    }
    let totals = chi.point_totals();
    let bad_point = a
        .multiplicities()
        .iter()
        .enumerate()
        .find(|&(i, &m)| m > 2 && totals[i] == 0)
        .map(|(i, _)| i);
    if chi.eps() == 0 || bad_point.is_some() {
        return Err(Error::DivisorHypotheses { eps: chi.eps(), point: bad_point });
    }
    let s = a.point_count();
    let mut out = LaurentPoly::t_pow_minus_one(1);
    out = out.mul(&LaurentPoly::t_pow_minus_one(chi.eps()).pow(s - 2));
    for (i, &m) in a.multiplicities().iter().enumerate() {
        out = out.mul(&LaurentPoly::t_pow_minus_one(totals[i]).pow(m - 2));
    }
    Ok(out.canonical())
}

/// The Milnor-fiber weights: all-ones character taken mod n, with n sheets.
/// Every point total becomes eps_i = m_i.
pub fn williams_parameters(a: &MarkedArrangement) -> (ArrangementCharacter, u64) {
    let n = a.line_count() as u64;
    let chi = a
        .character(
            1,
            a.multiplicities().iter().map(|&m| vec![1; m - 1]).collect(),
            CharMode::ModN(n),
        )
        .expect("all-ones weights always validate mod n");
    (chi, n)
}

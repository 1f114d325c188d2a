//! Seeded case generators shared by the acceptance criteria. Every suite is
//! deterministic: fixed ChaCha8 seeds, rejection sampling with bounded
//! retries.

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use covhom::{
    ArrangementCharacter, CharMode, Character, MarkedArrangement, Presentation, Word,
};

pub struct ArrCase {
    pub arr: MarkedArrangement,
    pub chi: ArrangementCharacter,
    pub sheets: u64,
}

fn random_multiplicities(rng: &mut ChaCha8Rng) -> Vec<usize> {
    let s = rng.gen_range(2..=4);
    (0..s).map(|_| rng.gen_range(2..=5)).collect()
}

fn build(mults: &[usize]) -> MarkedArrangement {
    let n = 1 + mults.iter().map(|m| m - 1).sum::<usize>();
    MarkedArrangement::new(n, mults.to_vec()).expect("profile is valid by construction")
}

/// 200 arrangements with eps = 1 integral characters, weights in [-3, 3]
/// (the final slot balances the sum to zero), sheet counts 1..8.
pub fn eps_one_suite() -> &'static [ArrCase] {
    static SUITE: OnceLock<Vec<ArrCase>> = OnceLock::new();
    SUITE.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
        let mut out = Vec::new();
        while out.len() < 200 {
            let mults = random_multiplicities(&mut rng);
            let arr = build(&mults);
            let mut pw: Vec<Vec<i64>> = mults
                .iter()
                .map(|&m| (0..m - 1).map(|_| rng.gen_range(-3i64..=3)).collect())
                .collect();
            let partial: i64 =
                1 + pw.iter().flatten().sum::<i64>() - pw.last().unwrap().last().unwrap();
            let balance = -partial;
            if balance.abs() > 3 {
                continue;
            }
            *pw.last_mut().unwrap().last_mut().unwrap() = balance;
            let chi = arr
                .character(1, pw, CharMode::Integral)
                .expect("eps = 1 with zero sum always validates");
            let sheets = rng.gen_range(1..=8);
            out.push(ArrCase { arr, chi, sheets });
        }
        out
    })
}

/// 100 arrangements with integral characters satisfying the divisor
/// hypotheses: eps != 0 and every point of multiplicity > 2 has a nonzero
/// total. Zero weights on individual lines are allowed and occur often.
pub fn divisor_suite() -> &'static [ArrCase] {
    static SUITE: OnceLock<Vec<ArrCase>> = OnceLock::new();
    SUITE.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
        let mut out = Vec::new();
        while out.len() < 100 {
            let mults = random_multiplicities(&mut rng);
            let arr = build(&mults);
            let eps = loop {
                let e = rng.gen_range(-3i64..=3);
                if e != 0 {
                    break e;
                }
            };
            let mut pw: Vec<Vec<i64>> = mults
                .iter()
                .map(|&m| (0..m - 1).map(|_| rng.gen_range(-3i64..=3)).collect())
                .collect();
            let partial: i64 =
                eps + pw.iter().flatten().sum::<i64>() - pw.last().unwrap().last().unwrap();
            let balance = -partial;
            if balance.abs() > 3 {
                continue;
            }
            *pw.last_mut().unwrap().last_mut().unwrap() = balance;
            let Ok(chi) = arr.character(eps, pw, CharMode::Integral) else {
                continue; // gcd > 1
            };
            let totals = chi.point_totals();
            if mults.iter().zip(&totals).any(|(&m, &t)| m > 2 && t == 0) {
                continue;
            }
            out.push(ArrCase { arr, chi, sheets: 1 });
        }
        out
    })
}

pub struct PresCase {
    pub pres: Presentation,
    pub chi: Character,
    pub sheets: u64,
}

/// 50 random presentations: up to 5 generators, up to 3 relators of length
/// at most 10 with weights vanishing mod N (rejection sampled), generator 0
/// forced to weight 1 so the cover is connected. Characters are mod-N.
pub fn presentation_suite() -> &'static [PresCase] {
    static SUITE: OnceLock<Vec<PresCase>> = OnceLock::new();
    SUITE.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
        let mut out = Vec::new();
        while out.len() < 50 {
            let g = rng.gen_range(1..=5);
            let r = rng.gen_range(0..=3);
            let sheets: u64 = rng.gen_range(1..=6);
            let mut weights: Vec<i64> = (0..g).map(|_| rng.gen_range(-3i64..=3)).collect();
            weights[0] = 1;
            let chi = Character::modular(weights, sheets).expect("positive modulus");
            let names = (0..g).map(|i| format!("g{}", i)).collect();
            let mut relators = Vec::new();
            for _ in 0..r {
                let word = loop {
                    let len = rng.gen_range(1..=10);
                    let letters: Vec<(usize, i8)> = (0..len)
                        .map(|_| (rng.gen_range(0..g), if rng.gen_bool(0.5) { 1 } else { -1 }))
                        .collect();
                    let w = Word::new(letters);
                    if chi.word_weight(&w).rem_euclid(sheets as i64) == 0 {
                        break w;
                    }
                };
                relators.push(word);
            }
            let pres = Presentation::new(names, relators).expect("letters index valid generators");
            out.push(PresCase { pres, chi, sheets });
        }
        out
    })
}

/// 50 arrangement covers for the oracle comparison, eps = 1 so connectivity
/// is automatic, sheet counts 1..6.
pub fn oracle_arrangement_suite() -> Vec<ArrCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let mut out = Vec::new();
    while out.len() < 50 {
        let mults = random_multiplicities(&mut rng);
        let arr = build(&mults);
        let mut pw: Vec<Vec<i64>> = mults
            .iter()
            .map(|&m| (0..m - 1).map(|_| rng.gen_range(-3i64..=3)).collect())
            .collect();
        let partial: i64 = 1 + pw.iter().flatten().sum::<i64>() - pw.last().unwrap().last().unwrap();
        let balance = -partial;
        if balance.abs() > 3 {
            continue;
        }
        *pw.last_mut().unwrap().last_mut().unwrap() = balance;
        let chi = arr.character(1, pw, CharMode::Integral).expect("eps = 1 with zero sum");
        let sheets = rng.gen_range(1..=6);
        out.push(ArrCase { arr, chi, sheets });
    }
    out
}

/// All multiplicity profiles for n lines: multisets with
/// sum(m_i - 1) = n - 1, at least two points, parts descending.
pub fn profiles(n: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            if cur.len() >= 2 {
                out.push(cur.iter().map(|p| p + 1).collect());
            }
            return;
        }
        let mut p = remaining.min(max_part);
        while p >= 1 {
            cur.push(p);
            rec(remaining - p, p, cur, out);
            cur.pop();
            p -= 1;
        }
    }
    let mut out = Vec::new();
    rec(n - 1, n - 1, &mut Vec::new(), &mut out);
    out
}

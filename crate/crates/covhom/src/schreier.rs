//! Independent oracle for cover homology: a Reidemeister-Schreier
//! presentation of the subgroup carved out by the weight map to Z/N,
//! abelianized directly. No Fox calculus, no companion matrices, no Laurent
//! arithmetic; agreement with the chain-complex route is evidence for both.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::cover::{check_sheets, CoverHomologyReport};
use crate::error::Error;
use crate::field::FieldSelector;
use crate::fox::{validate_character, Character, Presentation, Word};
use crate::matrix::IntMatrix;
use crate::snf::snf_int;

/// Cosets of the kernel of the weight map onto Z/N, with a prefix-closed
/// (Schreier) transversal. Coset q is the residue class q; generator g acts
/// by adding its weight.
#[derive(Clone, Debug)]
pub struct CosetTable {
    sheets: u64,
    /// Weight of each generator reduced to 0..N-1.
    residues: Vec<u64>,
    /// Transversal word for each coset, a positive word in the original
    /// generators; reps[0] is empty.
    reps: Vec<Word>,
}

impl CosetTable {
    /// Builds the transversal: powers of a single generator whose weight is
    /// a unit mod N when one exists, else breadth-first search over
    /// positive letters. Errors if the weights do not reach every residue.
    pub fn new(chi: &Character, sheets: u64) -> Result<Self, Error> {
        check_sheets(chi, sheets)?;
        let n = sheets;
        let residues: Vec<u64> =
            chi.weights().iter().map(|w| w.rem_euclid(n as i64) as u64).collect();

        if let Some(g) = residues.iter().position(|r| r.gcd(&n) == 1) {
            let mut reps: Vec<Option<Word>> = vec![None; n as usize];
            for k in 0..n {
                let coset = (k * residues[g]) % n;
                reps[coset as usize] = Some(Word::power(g, k as i64));
            }
            let reps = reps.into_iter().map(|r| r.expect("unit weight hits every coset")).collect();
            return Ok(CosetTable { sheets: n, residues, reps });
        }

        let mut reps: Vec<Option<Word>> = vec![None; n as usize];
        reps[0] = Some(Word::empty());
        let mut queue = std::collections::VecDeque::from([0u64]);
        while let Some(c) = queue.pop_front() {
            for (g, &r) in residues.iter().enumerate() {
                let next = (c + r) % n;
                if reps[next as usize].is_none() {
                    reps[next as usize] =
                        Some(reps[c as usize].as_ref().unwrap().concat(&Word::generator(g)));
                    queue.push_back(next);
                }
            }
        }
        if reps.iter().any(|r| r.is_none()) {
            let gcd = residues.iter().fold(n, |acc, r| acc.gcd(r));
            return Err(Error::Disconnected { n, gcd });
        }
        Ok(CosetTable {
            sheets: n,
            residues,
            reps: reps.into_iter().map(|r| r.unwrap()).collect(),
        })
    }

    pub fn sheets(&self) -> u64 {
        self.sheets
    }

    pub fn representative(&self, coset: u64) -> &Word {
        &self.reps[coset as usize]
    }

    /// Coset reached from `coset` by one letter of generator g with the
    /// given sign.
    pub fn act(&self, coset: u64, g: usize, sign: i8) -> u64 {
        let r = self.residues[g];
        if sign > 0 {
            (coset + r) % self.sheets
        } else {
            (coset + self.sheets - r) % self.sheets
        }
    }

    /// The Schreier generator at (coset, g) is trivial exactly when
    /// appending g to the representative yields the next representative;
    /// those edges form the spanning tree of the transversal.
    fn is_tree_edge(&self, coset: u64, g: usize) -> bool {
        let target = self.act(coset, g, 1);
        let extended = self.reps[coset as usize].concat(&Word::generator(g));
        extended.letters() == self.reps[target as usize].letters()
    }
}

/// Rewrites a word of the original group, read from the given starting
/// coset, into the non-tree Schreier generators indexed by `index`.
fn rewrite(
    table: &CosetTable,
    index: &[Vec<Option<usize>>],
    word: &Word,
    start: u64,
) -> Word {
    let mut letters = Vec::new();
    let mut c = start;
    for &(g, s) in word.letters() {
        if s > 0 {
            if let Some(k) = index[c as usize][g] {
                letters.push((k, 1));
            }
            c = table.act(c, g, 1);
        } else {
            c = table.act(c, g, -1);
            if let Some(k) = index[c as usize][g] {
                letters.push((k, -1));
            }
        }
    }
    Word::new(letters).reduced()
}

/// Reidemeister-Schreier presentation of the kernel of the weight map onto
/// Z/N: one generator per non-tree edge of the coset graph (mN - (N-1) of
/// them for m original generators), and the rewrite of each original
/// relator from each coset (lN relators). Presents the fundamental group of
/// the connected N-sheeted cover.
pub fn schreier_presentation(
    p: &Presentation,
    chi: &Character,
    sheets: u64,
) -> Result<Presentation, Error> {
    validate_character(p, chi)?;
    let table = CosetTable::new(chi, sheets)?;
    let n = sheets as usize;

    let mut index: Vec<Vec<Option<usize>>> = vec![vec![None; p.generator_count()]; n];
    let mut names = Vec::new();
    for q in 0..n {
        for g in 0..p.generator_count() {
            if !table.is_tree_edge(q as u64, g) {
                index[q][g] = Some(names.len());
                names.push(format!("{}@{}", p.generator_names()[g], q));
            }
        }
    }

    let mut relators = Vec::new();
    for r in p.relators() {
        for q in 0..n {
            relators.push(rewrite(&table, &index, r, q as u64));
        }
    }
    Presentation::new(names, relators)
}

/// H1 of the connected N-sheeted cover by abelianizing the
/// Reidemeister-Schreier presentation: Smith normal form of the exponent-sum
/// matrix over Z, plus rank counting over each requested field. Shares no
/// machinery with the chain-complex computation beyond integer elimination.
pub fn oracle_h1(
    p: &Presentation,
    chi: &Character,
    sheets: u64,
    fields: &[FieldSelector],
) -> Result<CoverHomologyReport, Error> {
    let sp = schreier_presentation(p, chi, sheets)?;
    let m = IntMatrix::from_fn(sp.relator_count(), sp.generator_count(), |i, j| {
        BigInt::from(sp.relators()[i].exponent_sum(j))
    });
    let snf = snf_int(&m);
    let free_rank = sp.generator_count() - snf.rank;
    let torsion = snf.torsion();
    let field_betti = fields
        .iter()
        .map(|&f| (f.characteristic(), sp.generator_count() - m.rank_over(f)))
        .collect();
    Ok(CoverHomologyReport { sheets, connected: true, free_rank, torsion, field_betti })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::h1_cover;

    fn q() -> FieldSelector {
        FieldSelector::rationals()
    }

    fn fp(p: u64) -> FieldSelector {
        FieldSelector::prime(p).unwrap()
    }

    #[test]
    fn circle_transversal_is_powers() {
        let chi = Character::integral(vec![1]);
        let t = CosetTable::new(&chi, 3).unwrap();
        assert_eq!(t.representative(0).letters(), &[]);
        assert_eq!(t.representative(1).letters(), &[(0, 1)]);
        assert_eq!(t.representative(2).letters(), &[(0, 1), (0, 1)]);
        assert!(t.is_tree_edge(0, 0));
        assert!(t.is_tree_edge(1, 0));
        assert!(!t.is_tree_edge(2, 0));
    }

    #[test]
    fn bfs_fallback_covers_all_cosets() {
        // Weights 2 and 3 mod 6: no single generator is coprime to 6.
        let chi = Character::integral(vec![2, 3]);
        let t = CosetTable::new(&chi, 6).unwrap();
        // Prefix closure: every proper prefix of a representative is itself
        // the representative of the coset it reaches.
        for c in 0..6 {
            let letters = t.representative(c).letters().to_vec();
            let mut at = 0u64;
            for (i, &(g, s)) in letters.iter().enumerate() {
                assert_eq!(
                    t.representative(at).letters(),
                    &letters[..i],
                    "prefix of rep for coset {c}"
                );
                at = t.act(at, g, s);
            }
            assert_eq!(at, c);
        }
    }

    #[test]
    fn disconnected_weights_error() {
        let chi = Character::integral(vec![2]);
        let err = CosetTable::new(&chi, 4).err();
        assert_eq!(err, Some(Error::Disconnected { n: 4, gcd: 2 }));
    }

    #[test]
    fn circle_cover_presentation() {
        let p = Presentation::new(vec!["a".into()], vec![]).unwrap();
        let chi = Character::integral(vec![1]);
        let sp = schreier_presentation(&p, &chi, 3).unwrap();
        assert_eq!(sp.generator_names(), &["a@2"]);
        assert_eq!(sp.relator_count(), 0);
    }

    #[test]
    fn torus_cover_counts() {
        let p = Presentation::new(
            vec!["a".into(), "b".into()],
            vec![Word::commutator(&Word::generator(0), &Word::generator(1))],
        )
        .unwrap();
        let chi = Character::integral(vec![1, 0]);
        let sp = schreier_presentation(&p, &chi, 2).unwrap();
        // Reduced counts: mN - (N-1) generators, lN relators.
        assert_eq!(sp.generator_count(), 3);
        assert_eq!(sp.relator_count(), 2);
        let r = oracle_h1(&p, &chi, 2, &[q()]).unwrap();
        assert_eq!(r.free_rank, 2);
        assert!(r.torsion.is_empty());
    }

    #[test]
    fn free_group_cover_rank() {
        // Free group on two generators, weights 2 and 3, six sheets: the
        // cover of a wedge of two circles has free fundamental group of
        // rank 2*6 - 5 = 7.
        let p = Presentation::new(vec!["a".into(), "b".into()], vec![]).unwrap();
        let chi = Character::integral(vec![2, 3]);
        let r = oracle_h1(&p, &chi, 6, &[q(), fp(2)]).unwrap();
        assert_eq!(r.free_rank, 7);
        assert!(r.torsion.is_empty());
        assert_eq!(r.field_betti, vec![(0, 7), (2, 7)]);
        assert_eq!(h1_cover(&p, &chi, 6, &[q(), fp(2)]).unwrap(), r);
    }

    #[test]
    fn orientation_cover_of_klein_bottle() {
        // a b a b^-1 with the double cover along b: the cover is the torus.
        let r = Word::new(vec![(0, 1), (1, 1), (0, 1), (1, -1)]);
        let p = Presentation::new(vec!["a".into(), "b".into()], vec![r]).unwrap();
        let chi = Character::integral(vec![0, 1]);
        let fields = [q(), fp(2), fp(3)];
        let oracle = oracle_h1(&p, &chi, 2, &fields).unwrap();
        assert_eq!(oracle.free_rank, 2);
        assert!(oracle.torsion.is_empty());
        assert_eq!(oracle, h1_cover(&p, &chi, 2, &fields).unwrap());
    }

    #[test]
    fn euler_count_identity() {
        // gens - rels = N(m - l) - (N - 1) for the reduced presentation.
        let p = Presentation::new(
            vec!["a".into(), "b".into()],
            vec![Word::commutator(&Word::generator(0), &Word::generator(1))],
        )
        .unwrap();
        for n in [1u64, 2, 3, 5] {
            let chi = Character::integral(vec![1, -2]);
            let sp = schreier_presentation(&p, &chi, n).unwrap();
            let expected = n as i64 * (2 - 1) - (n as i64 - 1);
            assert_eq!(sp.generator_count() as i64 - sp.relator_count() as i64, expected);
        }
    }

    #[test]
    fn arrangement_oracle_agrees() {
        use crate::arrangement::{CharMode, MarkedArrangement};
        let a = MarkedArrangement::new(4, vec![3, 2]).unwrap();
        let chi = a.character(1, vec![vec![1, -1], vec![-1]], CharMode::Integral).unwrap();
        let p = a.boundary_presentation();
        let pchi = chi.presentation_character(&a);
        let fields = [q(), fp(2), fp(5)];
        for n in 1..=4 {
            let oracle = oracle_h1(&p, &pchi, n, &fields).unwrap();
            let direct = h1_cover(&p, &pchi, n, &fields).unwrap();
            assert_eq!(oracle, direct, "N = {n}");
        }
    }
}

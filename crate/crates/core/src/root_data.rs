//! Root-system primitives: generalized Cartan matrices, roots and coroots in
//! simple-root coordinates, simple reflections, heights, and the reflected
//! roots γ_i with their coroot heights b_i.
//!
//! Conventions used throughout the crate:
//!
//! * all ranks, word positions and root indices are 1-based in the public
//!   API;
//! * `pairing(p, q)` is the Cartan pairing ⟨α_q, α̌_p⟩, i.e. the matrix entry
//!   `A[p][q]`.

use std::fmt;
use std::str::FromStr;

use crate::arith;
use crate::error::{Error, Result};

/// Hard cap on word length so that sign-vector enumeration fits in a `u64`.
pub const MAX_WORD_LEN: usize = 62;

/// Built-in family of a finite-type generalized Cartan matrix.
///
/// The sign conventions are pinned by the two-by-two fixtures: for `B2` the
/// pairings are ⟨α_2, α̌_1⟩ = −1 and ⟨α_1, α̌_2⟩ = −2, for `G2` they are
/// ⟨α_2, α̌_1⟩ = −3 and ⟨α_1, α̌_2⟩ = −1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
            Family::C => write!(f, "C"),
            Family::D => write!(f, "D"),
            Family::G2 => write!(f, "G2"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "G2" | "g2" | "G" | "g" => Ok(Family::G2),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

/// An integer matrix `A` with `A[p][p] = 2`, nonpositive off-diagonal entries
/// and a symmetric zero pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedCartanMatrix {
    rank: usize,
    entries: Vec<i64>,
}

impl GeneralizedCartanMatrix {
    /// Validates and wraps a raw row-major matrix.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let rank = rows.len();
        if rank == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(rank * rank);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::NonSquareMatrix {
                    row: i + 1,
                    cols: row.len(),
                    rank,
                });
            }
            entries.extend_from_slice(row);
        }
        let gcm = GeneralizedCartanMatrix { rank, entries };
        for p in 1..=rank {
            let d = gcm.pairing(p, p);
            if d != 2 {
                return Err(Error::BadDiagonal { p, value: d });
            }
            for q in 1..=rank {
                if p == q {
                    continue;
                }
                let v = gcm.pairing(p, q);
                if v > 0 {
                    return Err(Error::PositiveOffDiagonal { p, q, value: v });
                }
                if v == 0 && gcm.pairing(q, p) != 0 {
                    return Err(Error::AsymmetricZeroPattern {
                        p,
                        q,
                        value: gcm.pairing(q, p),
                    });
                }
            }
        }
        Ok(gcm)
    }

    /// The Cartan matrix of a built-in finite-type family.
    pub fn builtin(family: Family, rank: usize) -> Result<Self> {
        let invalid = || Error::InvalidRank {
            family: family.to_string(),
            rank,
        };
        let min_rank = match family {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
            Family::G2 => 2,
        };
        if rank < min_rank || (family == Family::G2 && rank != 2) {
            return Err(invalid());
        }
        let mut rows = vec![vec![0i64; rank]; rank];
        for p in 0..rank {
            rows[p][p] = 2;
        }
        match family {
            Family::A => {
                for p in 0..rank.saturating_sub(1) {
                    rows[p][p + 1] = -1;
                    rows[p + 1][p] = -1;
                }
            }
            Family::B => {
                for p in 0..rank - 1 {
                    rows[p][p + 1] = -1;
                    rows[p + 1][p] = -1;
                }
                rows[rank - 1][rank - 2] = -2;
            }
            Family::C => {
                for p in 0..rank - 1 {
                    rows[p][p + 1] = -1;
                    rows[p + 1][p] = -1;
                }
                rows[rank - 2][rank - 1] = -2;
            }
            Family::D => {
                // Chain 1 .. rank-2 with both rank-1 and rank attached to
                // node rank-2.
                for p in 0..rank - 2 {
                    rows[p][p + 1] = -1;
                    rows[p + 1][p] = -1;
                }
                rows[rank - 3][rank - 1] = -1;
                rows[rank - 1][rank - 3] = -1;
                rows[rank - 2][rank - 1] = 0;
                rows[rank - 1][rank - 2] = 0;
            }
            Family::G2 => {
                rows[0][1] = -3;
                rows[1][0] = -1;
            }
        }
        GeneralizedCartanMatrix::new(rows)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The pairing ⟨α_q, α̌_p⟩ = `A[p][q]` (1-based).
    ///
    /// Panics when an index is out of range; indices are expected to come
    /// from validated [`Word`]s or loops over `1..=rank`.
    pub fn pairing(&self, p: usize, q: usize) -> i64 {
        assert!(
            (1..=self.rank).contains(&p) && (1..=self.rank).contains(&q),
            "pairing index ({p}, {q}) out of range 1..={}",
            self.rank
        );
        self.entries[(p - 1) * self.rank + (q - 1)]
    }

    /// Range-checked variant of [`Self::pairing`] for untrusted indices.
    pub fn checked_pairing(&self, p: usize, q: usize) -> Result<i64> {
        for index in [p, q] {
            if !(1..=self.rank).contains(&index) {
                return Err(Error::IndexOutOfRange {
                    index,
                    bound: self.rank,
                });
            }
        }
        Ok(self.pairing(p, q))
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (1..=self.rank)
            .map(|p| (1..=self.rank).map(|q| self.pairing(p, q)).collect())
            .collect()
    }

    /// True when the matrix is symmetric (simply-laced zero/sign structure).
    pub fn is_symmetric(&self) -> bool {
        (1..=self.rank).all(|p| (1..=self.rank).all(|q| self.pairing(p, q) == self.pairing(q, p)))
    }
}

/// A root written in the simple-root basis α_1 .. α_n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    coeffs: Vec<i64>,
}

/// A coroot written in the simple-coroot basis α̌_1 .. α̌_n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coroot {
    coeffs: Vec<i64>,
}

macro_rules! coeff_vector_impl {
    ($name:ident) => {
        impl $name {
            pub fn new(coeffs: Vec<i64>) -> Self {
                Self { coeffs }
            }

            /// The p-th simple element (1-based) in rank `rank`.
            pub fn simple(rank: usize, p: usize) -> Self {
                assert!((1..=rank).contains(&p), "simple index {p} out of range");
                let mut coeffs = vec![0; rank];
                coeffs[p - 1] = 1;
                Self { coeffs }
            }

            pub fn coeffs(&self) -> &[i64] {
                &self.coeffs
            }

            /// Sum of the coefficients.
            pub fn height(&self) -> Result<i64> {
                arith::sum(self.coeffs.iter().copied())
            }
        }
    };
}

coeff_vector_impl!(Root);
coeff_vector_impl!(Coroot);

/// Simple reflection on roots: s_p(β) = β − ⟨β, α̌_p⟩ α_p.
///
/// Only the p-th coordinate changes; applying the same reflection twice gives
/// the argument back.
pub fn reflect_root(gcm: &GeneralizedCartanMatrix, p: usize, root: &Root) -> Result<Root> {
    check_reflection_input(gcm, p, root.coeffs())?;
    let mut pairing = 0i64;
    for (q, &n) in root.coeffs().iter().enumerate() {
        pairing = arith::add_mul(pairing, n, gcm.pairing(p, q + 1))?;
    }
    let mut coeffs = root.coeffs().to_vec();
    coeffs[p - 1] = arith::sub(coeffs[p - 1], pairing)?;
    Ok(Root::new(coeffs))
}

/// Simple reflection on coroots: s_p(β̌) = β̌ − ⟨α_p, β̌⟩ α̌_p.
///
/// The pairing is the transpose of the one used on roots.
pub fn reflect_coroot(gcm: &GeneralizedCartanMatrix, p: usize, coroot: &Coroot) -> Result<Coroot> {
    check_reflection_input(gcm, p, coroot.coeffs())?;
    let mut pairing = 0i64;
    for (q, &c) in coroot.coeffs().iter().enumerate() {
        pairing = arith::add_mul(pairing, c, gcm.pairing(q + 1, p))?;
    }
    let mut coeffs = coroot.coeffs().to_vec();
    coeffs[p - 1] = arith::sub(coeffs[p - 1], pairing)?;
    Ok(Coroot::new(coeffs))
}

fn check_reflection_input(gcm: &GeneralizedCartanMatrix, p: usize, coeffs: &[i64]) -> Result<()> {
    if !(1..=gcm.rank()).contains(&p) {
        return Err(Error::IndexOutOfRange {
            index: p,
            bound: gcm.rank(),
        });
    }
    if coeffs.len() != gcm.rank() {
        return Err(Error::DimensionMismatch {
            len: coeffs.len(),
            expected: gcm.rank(),
        });
    }
    Ok(())
}

/// A word in simple reflections, stored as 1-based letters.
///
/// Repetitions are allowed; nothing here assumes the expression is reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>, rank: usize) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        if letters.len() > MAX_WORD_LEN {
            return Err(Error::WordTooLong {
                len: letters.len(),
                max: MAX_WORD_LEN,
            });
        }
        for (i, &letter) in letters.iter().enumerate() {
            if !(1..=rank).contains(&letter) {
                return Err(Error::LetterOutOfRange {
                    letter,
                    position: i + 1,
                    rank,
                });
            }
        }
        Ok(Word { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter at 1-based position `i`.
    pub fn letter(&self, i: usize) -> usize {
        assert!(
            (1..=self.letters.len()).contains(&i),
            "word position {i} out of range"
        );
        self.letters[i - 1]
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }
}

/// The reflected root γ_i = s_{β_r} ⋯ s_{β_{i+1}}(β_i) together with the
/// coroot carried through the same reflections and its height b_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaEntry {
    pub root: Root,
    pub coroot: Coroot,
    /// b_i = ⟨δ, γ̌_i⟩, which is exactly the coefficient sum of the coroot.
    pub b: i64,
}

/// Computes γ_i and b_i for every position of the word.
///
/// b_i is the height of the reflected coroot, not of the root; the two agree
/// for symmetric Cartan matrices but differ in general. For non-reduced words
/// γ_i may be a negative root and b_i may be nonpositive; values are returned
/// as computed.
pub fn gamma_data(gcm: &GeneralizedCartanMatrix, word: &Word) -> Result<Vec<GammaEntry>> {
    check_word(gcm, word)?;
    let r = word.len();
    let mut out = Vec::with_capacity(r);
    for i in 1..=r {
        let mut root = Root::simple(gcm.rank(), word.letter(i));
        let mut coroot = Coroot::simple(gcm.rank(), word.letter(i));
        // Rightmost reflection in s_{β_r} ⋯ s_{β_{i+1}} acts first.
        for k in (i + 1)..=r {
            root = reflect_root(gcm, word.letter(k), &root)?;
            coroot = reflect_coroot(gcm, word.letter(k), &coroot)?;
        }
        let b = coroot.height()?;
        out.push(GammaEntry { root, coroot, b });
    }
    Ok(out)
}

/// Checks that every letter of `word` indexes a row of `gcm`.
pub fn check_word(gcm: &GeneralizedCartanMatrix, word: &Word) -> Result<()> {
    for (i, &letter) in word.letters().iter().enumerate() {
        if letter > gcm.rank() {
            return Err(Error::LetterOutOfRange {
                letter,
                position: i + 1,
                rank: gcm.rank(),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(rank: usize) -> GeneralizedCartanMatrix {
        GeneralizedCartanMatrix::builtin(Family::A, rank).unwrap()
    }

    fn b2() -> GeneralizedCartanMatrix {
        GeneralizedCartanMatrix::builtin(Family::B, 2).unwrap()
    }

    fn g2() -> GeneralizedCartanMatrix {
        GeneralizedCartanMatrix::builtin(Family::G2, 2).unwrap()
    }

    #[test]
    fn builtin_pairings_match_fixtures() {
        let a4 = a(4);
        assert_eq!(a4.pairing(2, 1), -1);
        assert_eq!(a4.pairing(1, 3), 0);
        for p in 1..=4 {
            assert_eq!(a4.pairing(p, p), 2);
        }
        assert_eq!(b2().pairing(2, 1), -2);
        assert_eq!(b2().pairing(1, 2), -1);
        assert_eq!(g2().pairing(2, 1), -1);
        assert_eq!(g2().pairing(1, 2), -3);
    }

    #[test]
    fn builtin_rank_validation() {
        assert!(GeneralizedCartanMatrix::builtin(Family::G2, 3).is_err());
        assert!(GeneralizedCartanMatrix::builtin(Family::B, 1).is_err());
        assert!(GeneralizedCartanMatrix::builtin(Family::D, 2).is_err());
        assert!(GeneralizedCartanMatrix::builtin(Family::A, 1).is_ok());
    }

    #[test]
    fn d4_has_branch_node() {
        let d4 = GeneralizedCartanMatrix::builtin(Family::D, 4).unwrap();
        assert_eq!(d4.pairing(2, 3), -1);
        assert_eq!(d4.pairing(2, 4), -1);
        assert_eq!(d4.pairing(3, 4), 0);
        assert_eq!(d4.pairing(4, 3), 0);
    }

    #[test]
    fn invalid_matrices_are_rejected() {
        assert_eq!(
            GeneralizedCartanMatrix::new(vec![vec![1]]),
            Err(Error::BadDiagonal { p: 1, value: 1 })
        );
        assert_eq!(
            GeneralizedCartanMatrix::new(vec![vec![2, 1], vec![-1, 2]]),
            Err(Error::PositiveOffDiagonal {
                p: 1,
                q: 2,
                value: 1
            })
        );
        assert_eq!(
            GeneralizedCartanMatrix::new(vec![vec![2, 0], vec![-1, 2]]),
            Err(Error::AsymmetricZeroPattern {
                p: 1,
                q: 2,
                value: -1
            })
        );
    }

    #[test]
    fn reflections_match_hand_computations() {
        // s_p(α_p) = -α_p
        let a4 = a(4);
        let alpha2 = Root::simple(4, 2);
        let reflected = reflect_root(&a4, 2, &alpha2).unwrap();
        assert_eq!(reflected.coeffs(), &[0, -1, 0, 0]);

        // s_2(α_1) = α_1 + α_2 in type A
        let alpha1 = Root::simple(4, 1);
        let reflected = reflect_root(&a4, 2, &alpha1).unwrap();
        assert_eq!(reflected.coeffs(), &[1, 1, 0, 0]);

        // s_2(α_1) = α_1 + 2α_2 in B2 (pairing(2,1) = -2)
        let alpha1 = Root::simple(2, 1);
        let reflected = reflect_root(&b2(), 2, &alpha1).unwrap();
        assert_eq!(reflected.coeffs(), &[1, 2]);

        // Coroots use the transposed pairing: s_2(α̌_1) = α̌_1 + α̌_2 in B2.
        let coalpha1 = Coroot::simple(2, 1);
        let reflected = reflect_coroot(&b2(), 2, &coalpha1).unwrap();
        assert_eq!(reflected.coeffs(), &[1, 1]);
    }

    #[test]
    fn heights() {
        assert_eq!(Root::simple(3, 1).height().unwrap(), 1);
        assert_eq!(Root::new(vec![1, 1, 0]).height().unwrap(), 2);
        assert_eq!(Root::new(vec![-1, 0, 0]).height().unwrap(), -1);
    }

    #[test]
    fn gamma_data_on_small_words() {
        // Word (1,2) in A3: γ_1 = α_1 + α_2 with b_1 = 2, γ_2 = α_2 with b_2 = 1.
        let a3 = a(3);
        let word = Word::new(vec![1, 2], 3).unwrap();
        let data = gamma_data(&a3, &word).unwrap();
        assert_eq!(data[0].root.coeffs(), &[1, 1, 0]);
        assert_eq!(data[0].b, 2);
        assert_eq!(data[1].root.coeffs(), &[0, 1, 0]);
        assert_eq!(data[1].b, 1);

        // Single letter: γ_1 = α_p, b_1 = 1.
        let word = Word::new(vec![3], 3).unwrap();
        let data = gamma_data(&a3, &word).unwrap();
        assert_eq!(data[0].b, 1);

        // B2 word (1,2): γ̌_1 = α̌_1 + α̌_2, so b_1 = 2.
        let word = Word::new(vec![1, 2], 2).unwrap();
        let data = gamma_data(&b2(), &word).unwrap();
        assert_eq!(data[0].coroot.coeffs(), &[1, 1]);
        assert_eq!(data[0].b, 2);
        // γ_1 = s_2(α_1) = α_1 + 2α_2 has root height 3 ≠ b_1: the two
        // heights split in non-simply-laced types.
        assert_eq!(data[0].root.height().unwrap(), 3);
    }

    #[test]
    fn word_validation() {
        assert_eq!(Word::new(vec![], 3), Err(Error::EmptyWord));
        assert!(matches!(
            Word::new(vec![1, 4], 3),
            Err(Error::LetterOutOfRange { letter: 4, .. })
        ));
        assert!(matches!(
            Word::new(vec![1; MAX_WORD_LEN + 1], 3),
            Err(Error::WordTooLong { .. })
        ));
    }
}

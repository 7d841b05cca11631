//! The Bott matrix of a word and the fan of the associated Bott tower.
//!
//! The fan lives in ℤ^r with the standard basis e_1^+ .. e_r^+. Each
//! position i contributes two rays,
//!
//! ```text
//! e_i^+  (the i-th unit vector)        e_i^- = -e_i^+ - Σ_{j>i} β_ij e_j^+
//! ```
//!
//! and the maximal cones are exactly the 2^r sign assignments: the cone for
//! ε ∈ {+,-}^r is generated by { e_i^{ε_i} }. No cone contains both rays of
//! a position, the fan is complete, and every cone basis matrix is
//! triangular with ±1 diagonal, so the fan is smooth.

use std::fmt;
use std::str::FromStr;

use crate::arith;
use crate::error::{Error, Result};
use crate::root_data::{check_word, GeneralizedCartanMatrix, Word, MAX_WORD_LEN};

/// Sign of a ray: `Plus` for e_i^+, `Minus` for e_i^-.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// A ray ρ_i^± of the fan, addressed by 1-based position and sign.
///
/// Displays and parses as `"3+"` / `"3-"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RayId {
    pub position: usize,
    pub sign: Sign,
}

impl RayId {
    pub fn plus(position: usize) -> Self {
        RayId {
            position,
            sign: Sign::Plus,
        }
    }

    pub fn minus(position: usize) -> Self {
        RayId {
            position,
            sign: Sign::Minus,
        }
    }

    pub fn opposite(self) -> Self {
        RayId {
            position: self.position,
            sign: self.sign.flipped(),
        }
    }
}

impl fmt::Display for RayId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.position, self.sign)
    }
}

impl FromStr for RayId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (digits, sign) = s.split_at(s.len().saturating_sub(1));
        let sign = match sign {
            "+" => Sign::Plus,
            "-" => Sign::Minus,
            _ => return Err(Error::Inconsistency(format!("bad ray label {s:?}"))),
        };
        let position: usize = digits
            .parse()
            .map_err(|_| Error::Inconsistency(format!("bad ray label {s:?}")))?;
        if position == 0 {
            return Err(Error::Inconsistency(format!("bad ray label {s:?}")));
        }
        Ok(RayId { position, sign })
    }
}

/// The full pairing matrix of a word: `B[i][j] = ⟨β_j, β̌_i⟩`, i.e. the
/// Cartan pairing of the letters at positions i and j.
///
/// The strict upper triangle is the upper-triangular matrix classifying the
/// Bott tower; the whole matrix is stored because the divisor-class
/// recursions and the Mori recursion read entries in both index orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BottMatrix {
    r: usize,
    entries: Vec<i64>,
}

impl BottMatrix {
    /// Builds the matrix of a word over a Cartan matrix.
    pub fn from_word(gcm: &GeneralizedCartanMatrix, word: &Word) -> Result<Self> {
        check_word(gcm, word)?;
        let r = word.len();
        let mut entries = Vec::with_capacity(r * r);
        for i in 1..=r {
            for j in 1..=r {
                entries.push(gcm.pairing(word.letter(i), word.letter(j)));
            }
        }
        Ok(BottMatrix { r, entries })
    }

    /// Wraps a raw row-major matrix. Only the diagonal is constrained (every
    /// letter pairs to 2 with itself); the off-diagonal entries may be any
    /// integers, which covers every Bott tower, not just those coming from
    /// words.
    pub fn from_entries(rows: Vec<Vec<i64>>) -> Result<Self> {
        let r = rows.len();
        if r == 0 {
            return Err(Error::EmptyMatrix);
        }
        if r > MAX_WORD_LEN {
            return Err(Error::WordTooLong {
                len: r,
                max: MAX_WORD_LEN,
            });
        }
        let mut entries = Vec::with_capacity(r * r);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != r {
                return Err(Error::NonSquareMatrix {
                    row: i + 1,
                    cols: row.len(),
                    rank: r,
                });
            }
            if row[i] != 2 {
                return Err(Error::BadDiagonal {
                    p: i + 1,
                    value: row[i],
                });
            }
            entries.extend_from_slice(row);
        }
        Ok(BottMatrix { r, entries })
    }

    /// The product fan (ℙ¹)^r: all off-diagonal pairings vanish.
    pub fn product_of_lines(r: usize) -> Self {
        let mut entries = vec![0i64; r * r];
        for i in 0..r {
            entries[i * r + i] = 2;
        }
        BottMatrix { r, entries }
    }

    /// Word length r (the dimension of the fan lattice).
    pub fn word_len(&self) -> usize {
        self.r
    }

    /// β_ij (1-based).
    pub fn beta(&self, i: usize, j: usize) -> i64 {
        assert!(
            (1..=self.r).contains(&i) && (1..=self.r).contains(&j),
            "beta index ({i}, {j}) out of range 1..={}",
            self.r
        );
        self.entries[(i - 1) * self.r + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (1..=self.r)
            .map(|i| (1..=self.r).map(|j| self.beta(i, j)).collect())
            .collect()
    }
}

/// An integer vector in the fan lattice, in the basis e_1^+ .. e_r^+.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePoint {
    coords: Vec<i64>,
}

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticePoint { coords }
    }

    pub fn zero(r: usize) -> Self {
        LatticePoint { coords: vec![0; r] }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

/// A sign assignment ε ∈ {+,-}^r, i.e. a maximal cone of the fan.
///
/// Stored as a bitmask so that all 2^r cones can be visited by counting; the
/// word-length cap keeps the mask inside a `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector {
    r: usize,
    minus_bits: u64,
}

impl SignVector {
    pub fn all_plus(r: usize) -> Self {
        assert!(r <= MAX_WORD_LEN, "sign vector length {r} exceeds cap");
        SignVector { r, minus_bits: 0 }
    }

    pub fn from_bits(r: usize, minus_bits: u64) -> Self {
        assert!(r <= MAX_WORD_LEN, "sign vector length {r} exceeds cap");
        let mask = if r == 64 { u64::MAX } else { (1u64 << r) - 1 };
        SignVector {
            r,
            minus_bits: minus_bits & mask,
        }
    }

    pub fn from_signs(signs: &[Sign]) -> Self {
        let mut v = SignVector::all_plus(signs.len());
        for (i, &s) in signs.iter().enumerate() {
            v = v.with_sign(i + 1, s);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.r
    }

    pub fn is_empty(&self) -> bool {
        self.r == 0
    }

    /// Sign at 1-based position `i`.
    pub fn sign(&self, i: usize) -> Sign {
        assert!((1..=self.r).contains(&i), "position {i} out of range");
        if self.minus_bits >> (i - 1) & 1 == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn with_sign(&self, i: usize, sign: Sign) -> Self {
        assert!((1..=self.r).contains(&i), "position {i} out of range");
        let bit = 1u64 << (i - 1);
        let minus_bits = match sign {
            Sign::Plus => self.minus_bits & !bit,
            Sign::Minus => self.minus_bits | bit,
        };
        SignVector {
            r: self.r,
            minus_bits,
        }
    }

    pub fn ray(&self, i: usize) -> RayId {
        RayId {
            position: i,
            sign: self.sign(i),
        }
    }

    pub fn rays(&self) -> Vec<RayId> {
        (1..=self.r).map(|i| self.ray(i)).collect()
    }

    /// All 2^r sign vectors. Callers must gate the length; this iterator is
    /// only ever used behind the exhaustive-enumeration cap.
    pub fn enumerate(r: usize) -> impl Iterator<Item = SignVector> {
        assert!(r < 63, "cannot enumerate 2^{r} cones");
        (0..(1u64 << r)).map(move |bits| SignVector {
            r,
            minus_bits: bits,
        })
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.r {
            write!(f, "{}", self.sign(i))?;
        }
        Ok(())
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut signs = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '+' => signs.push(Sign::Plus),
                '-' => signs.push(Sign::Minus),
                _ => {
                    return Err(Error::Inconsistency(format!(
                        "bad sign vector {s:?}: expected only + and -"
                    )))
                }
            }
        }
        if signs.is_empty() || signs.len() > MAX_WORD_LEN {
            return Err(Error::Inconsistency(format!(
                "bad sign vector length {}",
                signs.len()
            )));
        }
        Ok(SignVector::from_signs(&signs))
    }
}

/// The primitive lattice vector generating a ray.
pub fn ray_vector(m: &BottMatrix, ray: RayId) -> LatticePoint {
    let r = m.word_len();
    assert!(
        (1..=r).contains(&ray.position),
        "ray position {} out of range",
        ray.position
    );
    let mut coords = vec![0i64; r];
    match ray.sign {
        Sign::Plus => coords[ray.position - 1] = 1,
        Sign::Minus => {
            coords[ray.position - 1] = -1;
            for j in ray.position + 1..=r {
                // β entries are Cartan pairings, far from i64::MIN.
                coords[j - 1] = -m.beta(ray.position, j);
            }
        }
    }
    LatticePoint::new(coords)
}

/// Rays of a cone as the columns of an r×r matrix (row-major).
fn cone_matrix(m: &BottMatrix, cone: &SignVector) -> Vec<Vec<i64>> {
    let r = m.word_len();
    let mut rows = vec![vec![0i64; r]; r];
    for i in 1..=r {
        let v = ray_vector(m, cone.ray(i));
        for (row, &c) in v.coords().iter().enumerate() {
            rows[row][i - 1] = c;
        }
    }
    rows
}

/// Determinant of the matrix of ray generators of a maximal cone, computed
/// by fraction-free (Bareiss) elimination over checked 128-bit integers.
///
/// The Bott structure forces the matrix to be triangular with ±1 diagonal,
/// so the result is always ±1; computing it generically keeps this a real
/// certificate rather than a restatement of the construction.
pub fn cone_determinant(m: &BottMatrix, cone: &SignVector) -> Result<i64> {
    if cone.len() != m.word_len() {
        return Err(Error::DimensionMismatch {
            len: cone.len(),
            expected: m.word_len(),
        });
    }
    let rows = cone_matrix(m, cone);
    let det = det_bareiss(
        rows.into_iter()
            .map(|row| row.into_iter().map(i128::from).collect())
            .collect(),
    )?;
    i64::try_from(det).map_err(|_| Error::Overflow)
}

/// Fraction-free Gaussian elimination; exact over the integers.
pub(crate) fn det_bareiss(mut m: Vec<Vec<i128>>) -> Result<i128> {
    let n = m.len();
    if n == 0 {
        return Ok(1);
    }
    let mut sign = 1i128;
    let mut denom = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(pivot) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                return Ok(0);
            };
            m.swap(k, pivot);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = arith::i128_sub(
                    arith::i128_mul(m[k][k], m[i][j])?,
                    arith::i128_mul(m[i][k], m[k][j])?,
                )?;
                debug_assert_eq!(num % denom, 0, "Bareiss division must be exact");
                m[i][j] = num / denom;
            }
            m[i][k] = 0;
        }
        denom = m[k][k];
    }
    Ok(sign * m[n - 1][n - 1])
}

/// Where a lattice point sits in the fan: the rays of the unique minimal
/// cone containing it, with their strictly positive integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Location {
    /// `(ray, coefficient)` pairs sorted by position; empty for the origin.
    pub support: Vec<(RayId, i64)>,
}

impl Location {
    pub fn coefficient(&self, ray: RayId) -> i64 {
        self.support
            .iter()
            .find(|(r, _)| *r == ray)
            .map(|&(_, c)| c)
            .unwrap_or(0)
    }

    pub fn positions(&self) -> Vec<usize> {
        self.support.iter().map(|(ray, _)| ray.position).collect()
    }
}

/// Finds the minimal cone containing `v` by one sweep of back-substitution.
///
/// Rays at position i touch only coordinates ≥ i, and only the two rays at
/// position i touch coordinate i itself. Processing coordinates upward, the
/// residual's i-th entry therefore decides the ray at position i: positive
/// picks e_i^+, negative picks e_i^-, zero excludes the position. This is
/// O(r²); the exhaustive 2^r-cone search survives as an oracle in
/// [`crate::oracle`].
pub fn locate_point(m: &BottMatrix, v: &LatticePoint) -> Result<Location> {
    let r = m.word_len();
    if v.coords().len() != r {
        return Err(Error::DimensionMismatch {
            len: v.coords().len(),
            expected: r,
        });
    }
    let mut residual = v.coords().to_vec();
    let mut support = Vec::new();
    for i in 1..=r {
        let t = residual[i - 1];
        if t == 0 {
            continue;
        }
        if t > 0 {
            support.push((RayId::plus(i), t));
        } else {
            let c = arith::neg(t)?;
            support.push((RayId::minus(i), c));
            // residual -= c * e_i^-: coordinate i clears, and each j > i
            // gains c * β_ij.
            for j in i + 1..=r {
                residual[j - 1] = arith::add_mul(residual[j - 1], c, m.beta(i, j))?;
            }
        }
        residual[i - 1] = 0;
    }
    debug_assert!(residual.iter().all(|&t| t == 0));
    Ok(Location { support })
}

//! Positivity and classification: the syntactic word conditions I and II,
//! the semantic ample/nef test through the numbers d_i, Fano / weak-Fano /
//! log-Fano verdicts, the Mori-ray criterion, and conversion of divisors to
//! the basis {D_{ρ_i^+}}.
//!
//! The semantic classifiers are the source of truth. The printed conditions
//! I and II are kept as literal transcriptions because they are cheap,
//! word-level predicates; where they disagree with the d_i criterion the
//! mismatch is surfaced in the [`ClassificationReport`] rather than patched.

use num_rational::Rational64;
use num_traits::Zero;

use crate::arith;
use crate::bott_fan::{BottMatrix, RayId, Sign};
use crate::curves::primitive_relation;
use crate::error::{Error, Result};
use crate::root_data::{gamma_data, GeneralizedCartanMatrix, Word};

/// An invariant divisor D = Σ a_ρ D_ρ, with one integer coefficient per ray
/// (absent rays count as 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricDivisor {
    r: usize,
    plus: Vec<i64>,
    minus: Vec<i64>,
}

impl ToricDivisor {
    pub fn zero(r: usize) -> Self {
        ToricDivisor {
            r,
            plus: vec![0; r],
            minus: vec![0; r],
        }
    }

    /// -K = Σ_ρ D_ρ: every coefficient is 1.
    pub fn anticanonical(r: usize) -> Self {
        ToricDivisor {
            r,
            plus: vec![1; r],
            minus: vec![1; r],
        }
    }

    pub fn from_coefficients(r: usize, coefficients: &[(RayId, i64)]) -> Result<Self> {
        let mut divisor = ToricDivisor::zero(r);
        for &(ray, a) in coefficients {
            if !(1..=r).contains(&ray.position) {
                return Err(Error::IndexOutOfRange {
                    index: ray.position,
                    bound: r,
                });
            }
            divisor.set(ray, a);
        }
        Ok(divisor)
    }

    pub fn word_len(&self) -> usize {
        self.r
    }

    pub fn coefficient(&self, ray: RayId) -> i64 {
        assert!((1..=self.r).contains(&ray.position));
        match ray.sign {
            Sign::Plus => self.plus[ray.position - 1],
            Sign::Minus => self.minus[ray.position - 1],
        }
    }

    pub fn set(&mut self, ray: RayId, a: i64) {
        assert!((1..=self.r).contains(&ray.position));
        match ray.sign {
            Sign::Plus => self.plus[ray.position - 1] = a,
            Sign::Minus => self.minus[ray.position - 1] = a,
        }
    }
}

/// D · C for a curve class given by its intersection functional.
pub fn intersection_number(
    divisor: &ToricDivisor,
    class: &crate::curves::CurveClass,
) -> Result<i64> {
    if divisor.word_len() != class.word_len() {
        return Err(Error::DimensionMismatch {
            len: class.word_len(),
            expected: divisor.word_len(),
        });
    }
    let mut acc = 0i64;
    for i in 1..=divisor.word_len() {
        for ray in [RayId::plus(i), RayId::minus(i)] {
            acc = arith::add_mul(acc, divisor.coefficient(ray), class.value(ray))?;
        }
    }
    Ok(acc)
}

/// The numbers d_i = a_{ρ_i^+} + a_{ρ_i^-} - Σ c_ρ a_ρ over the primitive
/// relations; D is ample iff all d_i > 0 and nef iff all d_i ≥ 0.
pub fn d_values(m: &BottMatrix, divisor: &ToricDivisor) -> Result<Vec<i64>> {
    if divisor.word_len() != m.word_len() {
        return Err(Error::DimensionMismatch {
            len: divisor.word_len(),
            expected: m.word_len(),
        });
    }
    let mut out = Vec::with_capacity(m.word_len());
    for i in 1..=m.word_len() {
        let relation = primitive_relation(m, i)?;
        let mut d = arith::add(
            divisor.coefficient(RayId::plus(i)),
            divisor.coefficient(RayId::minus(i)),
        )?;
        for &(ray, c) in &relation.gamma_rays {
            d = arith::sub(d, arith::mul(c, divisor.coefficient(ray))?)?;
        }
        out.push(d);
    }
    Ok(out)
}

pub fn is_ample(m: &BottMatrix, divisor: &ToricDivisor) -> Result<bool> {
    Ok(d_values(m, divisor)?.iter().all(|&d| d > 0))
}

pub fn is_nef(m: &BottMatrix, divisor: &ToricDivisor) -> Result<bool> {
    Ok(d_values(m, divisor)?.iter().all(|&d| d >= 0))
}

/// Fano ⟺ -K ample. (-K is automatically big here: the complement of the
/// boundary is the torus, which is affine.)
pub fn is_fano(m: &BottMatrix) -> Result<bool> {
    is_ample(m, &ToricDivisor::anticanonical(m.word_len()))
}

/// Weak Fano ⟺ -K nef (and big, which holds for free as above).
pub fn is_weak_fano(m: &BottMatrix) -> Result<bool> {
    is_nef(m, &ToricDivisor::anticanonical(m.word_len()))
}

/// The extremal ray r(P_i) is a Mori ray iff the primitive relation has
/// empty support, or a single support ray with coefficient 1. Equivalent to
/// K · r(P_i) < 0, i.e. 2 - Σ c_ρ > 0.
pub fn is_mori_ray(m: &BottMatrix, i: usize) -> Result<bool> {
    let relation = primitive_relation(m, i)?;
    Ok(match relation.gamma_rays.as_slice() {
        [] => true,
        [(_, c)] => *c == 1,
        _ => false,
    })
}

/// Outcome of a syntactic condition at one word position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionCheck {
    pub position: usize,
    pub holds: bool,
    /// Which clause held, or why every clause failed.
    pub clause: String,
}

/// A syntactic condition evaluated at every position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub holds: bool,
    pub positions: Vec<PositionCheck>,
}

/// First failing position, if any.
impl ConditionReport {
    pub fn first_failure(&self) -> Option<&PositionCheck> {
        self.positions.iter().find(|p| !p.holds)
    }
}

fn eta_sets(m: &BottMatrix, i: usize) -> (Vec<usize>, Vec<usize>) {
    let r = m.word_len();
    let plus = (i + 1..=r).filter(|&j| m.beta(i, j) > 0).collect();
    let minus = (i + 1..=r).filter(|&j| m.beta(i, j) < 0).collect();
    (plus, minus)
}

fn fmt_set(set: &[usize]) -> String {
    let inner: Vec<String> = set.iter().map(|j| j.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// Condition I: N_i^1 at every position. N_i^1 asks that either
///
/// (i)  η_i^+ is empty, |η_i^-| ≤ 1, and a lone l ∈ η_i^- has β_il = -1; or
/// (ii) η_i^- is empty, |η_i^+| ≤ 1, and a lone m ∈ η_i^+ has β_im = 1 with
///      β_mk = 0 for all k > m.
pub fn condition_i(m: &BottMatrix) -> ConditionReport {
    let r = m.word_len();
    let mut positions = Vec::with_capacity(r);
    for i in 1..=r {
        let (etap, etam) = eta_sets(m, i);
        let prefix = format!("eta+={} eta-={}", fmt_set(&etap), fmt_set(&etam));
        let (holds, clause) = check_n1(m, i, &etap, &etam);
        positions.push(PositionCheck {
            position: i,
            holds,
            clause: format!("{prefix}: {clause}"),
        });
    }
    ConditionReport {
        holds: positions.iter().all(|p| p.holds),
        positions,
    }
}

fn check_n1(m: &BottMatrix, i: usize, etap: &[usize], etam: &[usize]) -> (bool, String) {
    // Clause (i).
    if etap.is_empty() {
        match etam {
            [] => return (true, "clause (i), both sets empty".to_string()),
            [l] if m.beta(i, *l) == -1 => return (true, "clause (i)".to_string()),
            _ => {}
        }
    }
    // Clause (ii).
    if etam.is_empty() {
        if let [mm] = etap {
            let tail_ok = (*mm + 1..=m.word_len()).all(|k| m.beta(*mm, k) == 0);
            if m.beta(i, *mm) == 1 && tail_ok {
                return (true, "clause (ii)".to_string());
            }
        }
    }
    // Explain the failure tersely.
    let reason = if !etap.is_empty() && !etam.is_empty() {
        "fails: both eta sets nonempty".to_string()
    } else if etap.is_empty() {
        match etam {
            [l] => format!("fails (i): beta({i},{l})={} != -1", m.beta(i, *l)),
            _ => format!("fails (i): |eta-|={}", etam.len()),
        }
    } else {
        match etap {
            [mm] if m.beta(i, *mm) != 1 => {
                format!("fails (ii): beta({i},{mm})={} != 1", m.beta(i, *mm))
            }
            [mm] => format!("fails (ii): beta({mm},k) != 0 for some k>{mm}"),
            _ => format!("fails (ii): |eta+|={}", etap.len()),
        }
    };
    (false, reason)
}

/// Condition II: N_i^2 at every position, transcribed literally.
///
/// Case 1 (|η^+| = 0): |η^-| ≤ 2; a lone l needs β_il ∈ {-1, -2} (the
/// printed β_li is read with first index i, matching the definition of the
/// η sets); a pair l_1, l_2 needs β_il_1 = β_il_2 = -1.
///
/// Case 3 (|η^+| = 1, say m): β_im = 1 and one of
///   (i)   Case 2, i.e. η^- = {l} with l < m, β_il = -1 and β_mk = 0 for
///         all k > m;
///   (ii)  η^- empty and β_mk = 0 for all k > m;
///   (iii) a unique s with r ≥ s > m satisfying either
///         β_ms - β_is = 1 and β_mk - β_ik = 0 for all k > s, or
///         β_ms - β_is = -1 and β_is - β_ms - β_sk = 0 for all k > s
///         (kept verbatim, mixed indices and all).
///
/// |η^+| ≥ 2 fails outright.
pub fn condition_ii(m: &BottMatrix) -> ConditionReport {
    let r = m.word_len();
    let mut positions = Vec::with_capacity(r);
    for i in 1..=r {
        let (etap, etam) = eta_sets(m, i);
        let prefix = format!("eta+={} eta-={}", fmt_set(&etap), fmt_set(&etam));
        let (holds, clause) = check_n2(m, i, &etap, &etam);
        positions.push(PositionCheck {
            position: i,
            holds,
            clause: format!("{prefix}: {clause}"),
        });
    }
    ConditionReport {
        holds: positions.iter().all(|p| p.holds),
        positions,
    }
}

fn check_n2(m: &BottMatrix, i: usize, etap: &[usize], etam: &[usize]) -> (bool, String) {
    let r = m.word_len();
    match etap {
        [] => match etam {
            [] => (true, "case 1, eta- empty".to_string()),
            [l] => {
                let v = m.beta(i, *l);
                if v == -1 || v == -2 {
                    (true, "case 1".to_string())
                } else {
                    (
                        false,
                        format!("fails case 1: beta({i},{l})={v} not in {{-1,-2}}"),
                    )
                }
            }
            [l1, l2] => {
                if m.beta(i, *l1) == -1 && m.beta(i, *l2) == -1 {
                    (true, "case 1".to_string())
                } else {
                    (
                        false,
                        format!(
                            "fails case 1: beta({i},{l1})={}, beta({i},{l2})={}, need -1,-1",
                            m.beta(i, *l1),
                            m.beta(i, *l2)
                        ),
                    )
                }
            }
            _ => (false, format!("fails case 1: |eta-|={} > 2", etam.len())),
        },
        [mm] => {
            let mm = *mm;
            if m.beta(i, mm) != 1 {
                return (
                    false,
                    format!("fails case 3: beta({i},{mm})={} != 1", m.beta(i, mm)),
                );
            }
            let tail_zero = (mm + 1..=r).all(|k| m.beta(mm, k) == 0);
            // (i) Case 2.
            if let [l] = etam {
                if *l < mm && m.beta(i, *l) == -1 && tail_zero {
                    return (true, "case 3(i)".to_string());
                }
            }
            // (ii).
            if etam.is_empty() && tail_zero {
                return (true, "case 3(ii)".to_string());
            }
            // (iii): unique s > m satisfying one of the two branches.
            let witnesses: Vec<usize> = (mm + 1..=r)
                .filter(|&s| {
                    let diff = m.beta(mm, s) - m.beta(i, s);
                    (diff == 1 && (s + 1..=r).all(|k| m.beta(mm, k) - m.beta(i, k) == 0))
                        || (diff == -1
                            && (s + 1..=r)
                                .all(|k| m.beta(i, s) - m.beta(mm, s) - m.beta(s, k) == 0))
                })
                .collect();
            match witnesses.as_slice() {
                [s] => (true, format!("case 3(iii), s={s}")),
                [] => (
                    false,
                    "fails case 3: no clause (i)-(iii) applies".to_string(),
                ),
                many => (
                    false,
                    format!(
                        "fails case 3(iii): s not unique, candidates {}",
                        fmt_set(many)
                    ),
                ),
            }
        }
        _ => (false, format!("fails: |eta+|={} > 1", etap.len())),
    }
}

/// Coefficients h_j^i expressing the class of D_{ρ_j^-} in the basis
/// {D_{ρ_i^+}}: the returned table has `table[j-1][i-1]` = h_j^i.
///
/// The recursion is h_i^i = 1, h_j^i = -Σ_{k=i}^{j-1} β_kj h_k^i for j > i,
/// consuming the strict-upper entry β_kj (k < j); this is the index order
/// forced by the dual-basis relations
/// D_{ρ_k^+} - D_{ρ_k^-} - Σ_{l<k} β_lk D_{ρ_l^-} ~ 0, and is enforced
/// against the independent elimination oracle in the test suite.
pub fn h_table(m: &BottMatrix) -> Result<Vec<Vec<i64>>> {
    let r = m.word_len();
    let mut table = vec![vec![0i64; r]; r];
    for i in 1..=r {
        table[i - 1][i - 1] = 1;
        for j in i + 1..=r {
            let mut acc = 0i64;
            for k in i..j {
                acc = arith::add_mul(acc, m.beta(k, j), table[k - 1][i - 1])?;
            }
            table[j - 1][i - 1] = arith::neg(acc)?;
        }
    }
    Ok(table)
}

/// The coefficients g_i = a_{ρ_i^+} + Σ_{j≥i} a_{ρ_j^-} h_j^i of the class
/// of D in the basis {D_{ρ_i^+}}: D ~ Σ g_i D_{ρ_i^+}.
pub fn g_values(m: &BottMatrix, divisor: &ToricDivisor) -> Result<Vec<i64>> {
    let r = m.word_len();
    if divisor.word_len() != r {
        return Err(Error::DimensionMismatch {
            len: divisor.word_len(),
            expected: r,
        });
    }
    let table = h_table(m)?;
    let mut out = Vec::with_capacity(r);
    for i in 1..=r {
        let mut g = divisor.coefficient(RayId::plus(i));
        for j in i..=r {
            g = arith::add_mul(g, divisor.coefficient(RayId::minus(j)), table[j - 1][i - 1])?;
        }
        out.push(g);
    }
    Ok(out)
}

fn check_boundary(a: &[Rational64]) -> Result<()> {
    for (idx, value) in a.iter().enumerate() {
        if *value < Rational64::zero() || *value >= Rational64::from_integer(1) {
            return Err(Error::BoundaryCoefficientOutOfRange {
                position: idx + 1,
                value: value.to_string(),
            });
        }
    }
    Ok(())
}

/// The log-Fano numbers
/// f_i = (b_i + 1 + a_i) - Σ_{plus support rays ρ_l^+} c_l (b_l + 1 + a_l),
/// where the sum runs over the positive-sign part of the primitive-relation
/// support of P_i. The boundary coefficients a must lie in [0, 1).
pub fn log_fano_f(m: &BottMatrix, b: &[i64], a: &[Rational64]) -> Result<Vec<Rational64>> {
    let r = m.word_len();
    for (len, _) in [(b.len(), "b"), (a.len(), "a")] {
        if len != r {
            return Err(Error::DimensionMismatch { len, expected: r });
        }
    }
    check_boundary(a)?;
    let weight = |l: usize| -> Result<Rational64> {
        arith::radd(Rational64::from_integer(arith::add(b[l - 1], 1)?), a[l - 1])
    };
    let mut out = Vec::with_capacity(r);
    for i in 1..=r {
        let relation = primitive_relation(m, i)?;
        let mut f = weight(i)?;
        for &(ray, c) in &relation.gamma_rays {
            if ray.sign == Sign::Plus {
                f = arith::rsub(
                    f,
                    arith::rmul(Rational64::from_integer(c), weight(ray.position)?)?,
                )?;
            }
        }
        out.push(f);
    }
    Ok(out)
}

/// Log-Fano verdict for the pair (X, D') with D' = Σ a_i Z_i, ⌊D'⌋ = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogFanoReport {
    /// b_i = coroot height of γ_i, from [`gamma_data`].
    pub b: Vec<i64>,
    pub f: Vec<Rational64>,
    pub log_fano: bool,
    /// First position with f_i ≤ 0, when the verdict is negative.
    pub witness: Option<usize>,
}

/// Evaluates the log-Fano criterion: all f_i > 0.
pub fn is_log_fano(
    gcm: &GeneralizedCartanMatrix,
    word: &Word,
    a: &[Rational64],
) -> Result<LogFanoReport> {
    let m = BottMatrix::from_word(gcm, word)?;
    let b: Vec<i64> = gamma_data(gcm, word)?.into_iter().map(|e| e.b).collect();
    let f = log_fano_f(&m, &b, a)?;
    let witness = f.iter().position(|v| *v <= Rational64::zero());
    Ok(LogFanoReport {
        b,
        f,
        log_fano: witness.is_none(),
        witness: witness.map(|idx| idx + 1),
    })
}

/// A syntactic/semantic disagreement surfaced by [`consistency_report`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub claim: String,
    pub source: String,
}

/// Everything the classifiers know about one word, with syntactic and
/// semantic verdicts kept side by side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub condition_i: ConditionReport,
    pub condition_ii: ConditionReport,
    /// -K ample, decided by the d_i.
    pub fano_semantic: bool,
    /// -K nef, decided by the d_i.
    pub weak_fano_semantic: bool,
    /// d_i of -K.
    pub d_values: Vec<i64>,
    /// Mori-ray flag for each extremal ray r(P_i).
    pub mori_rays: Vec<bool>,
    pub discrepancies: Vec<Discrepancy>,
    /// Reading conventions applied to the literal transcriptions.
    pub notes: Vec<String>,
}

/// Runs every classifier and records where the literal conditions disagree
/// with the semantic verdicts.
pub fn consistency_report(
    gcm: &GeneralizedCartanMatrix,
    word: &Word,
) -> Result<ClassificationReport> {
    let m = BottMatrix::from_word(gcm, word)?;
    let condition_i_report = condition_i(&m);
    let condition_ii_report = condition_ii(&m);
    let d = d_values(&m, &ToricDivisor::anticanonical(m.word_len()))?;
    let fano_semantic = d.iter().all(|&v| v > 0);
    let weak_fano_semantic = d.iter().all(|&v| v >= 0);
    let mori_rays: Vec<bool> = (1..=m.word_len())
        .map(|i| is_mori_ray(&m, i))
        .collect::<Result<_>>()?;

    let mut discrepancies = Vec::new();
    if condition_i_report.holds != fano_semantic {
        discrepancies.push(Discrepancy {
            claim: "condition I iff Fano".to_string(),
            source: format!(
                "literal condition I = {}, ample(-K) = {}",
                condition_i_report.holds, fano_semantic
            ),
        });
    }
    if condition_ii_report.holds != weak_fano_semantic {
        discrepancies.push(Discrepancy {
            claim: "condition II iff weak Fano".to_string(),
            source: format!(
                "literal condition II = {}, nef(-K) = {}",
                condition_ii_report.holds, weak_fano_semantic
            ),
        });
    }

    Ok(ClassificationReport {
        condition_i: condition_i_report,
        condition_ii: condition_ii_report,
        fano_semantic,
        weak_fano_semantic,
        d_values: d,
        mori_rays,
        discrepancies,
        notes: vec!["condition II case 1 reads the printed beta(l,i) as beta(i,l)".to_string()],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::Family;

    fn setup(
        family: Family,
        rank: usize,
        letters: &[usize],
    ) -> (GeneralizedCartanMatrix, Word, BottMatrix) {
        let gcm = GeneralizedCartanMatrix::builtin(family, rank).unwrap();
        let word = Word::new(letters.to_vec(), rank).unwrap();
        let m = BottMatrix::from_word(&gcm, &word).unwrap();
        (gcm, word, m)
    }

    #[test]
    fn condition_fixtures() {
        let (_, _, m) = setup(Family::B, 2, &[1, 2]);
        assert!(condition_i(&m).holds);

        let (_, _, m) = setup(Family::B, 2, &[2, 1]);
        assert!(!condition_i(&m).holds);
        assert!(condition_ii(&m).holds);

        let (_, _, m) = setup(Family::G2, 2, &[2, 1]);
        assert!(condition_i(&m).holds);
        assert!(condition_ii(&m).holds);

        let (_, _, m) = setup(Family::G2, 2, &[1, 2]);
        assert!(!condition_i(&m).holds);
        assert!(!condition_ii(&m).holds);

        // Orthogonal word: fully commutative without repetitions.
        let (_, _, m) = setup(Family::A, 5, &[1, 3, 5]);
        assert!(condition_i(&m).holds);

        // Word (1,1): the literal case 3 needs beta = 1, here 2.
        let (_, _, m) = setup(Family::A, 3, &[1, 1]);
        assert!(!condition_i(&m).holds);
        assert!(!condition_ii(&m).holds);
    }

    #[test]
    fn witnesses_name_the_failing_position() {
        let (_, _, m) = setup(Family::B, 2, &[2, 1]);
        let report = condition_i(&m);
        let failure = report.first_failure().unwrap();
        assert_eq!(failure.position, 1);
        assert!(failure.clause.contains("-2"));
    }

    #[test]
    fn d_value_fixtures() {
        let m = BottMatrix::product_of_lines(4);
        let minus_k = ToricDivisor::anticanonical(4);
        assert_eq!(d_values(&m, &minus_k).unwrap(), vec![2, 2, 2, 2]);
        assert!(is_ample(&m, &minus_k).unwrap());

        let (_, _, m) = setup(Family::B, 2, &[2, 1]);
        let minus_k = ToricDivisor::anticanonical(2);
        assert_eq!(d_values(&m, &minus_k).unwrap(), vec![0, 2]);
        assert!(!is_ample(&m, &minus_k).unwrap());
        assert!(is_nef(&m, &minus_k).unwrap());

        let (_, _, m) = setup(Family::G2, 2, &[1, 2]);
        let minus_k = ToricDivisor::anticanonical(2);
        assert_eq!(d_values(&m, &minus_k).unwrap(), vec![-1, 2]);
        assert!(!is_weak_fano(&m).unwrap());

        let (_, _, m) = setup(Family::A, 3, &[1, 1]);
        assert_eq!(
            d_values(&m, &ToricDivisor::anticanonical(2)).unwrap(),
            vec![0, 2]
        );
        assert!(!is_fano(&m).unwrap());
        assert!(is_weak_fano(&m).unwrap());
    }

    #[test]
    fn mori_ray_fixtures() {
        let m = BottMatrix::product_of_lines(3);
        for i in 1..=3 {
            assert!(is_mori_ray(&m, i).unwrap());
        }
        let (_, _, m) = setup(Family::A, 3, &[1, 1]);
        assert!(!is_mori_ray(&m, 1).unwrap());
        assert!(is_mori_ray(&m, 2).unwrap());
        let (_, _, m) = setup(Family::B, 2, &[1, 2]);
        assert!(is_mori_ray(&m, 1).unwrap());
    }

    #[test]
    fn h_and_g_fixtures() {
        let (_, _, m) = setup(Family::A, 3, &[1, 1]);
        let table = h_table(&m).unwrap();
        assert_eq!(table[0], vec![1, 0]);
        assert_eq!(table[1], vec![-2, 1]);

        let mut divisor = ToricDivisor::zero(2);
        divisor.set(RayId::minus(2), 1);
        assert_eq!(g_values(&m, &divisor).unwrap(), vec![-2, 1]);

        // Orthogonal word: h is the identity and g_i = a_{ρ_i^+} + a_{ρ_i^-}.
        let m = BottMatrix::product_of_lines(3);
        let table = h_table(&m).unwrap();
        for (j, row) in table.iter().enumerate() {
            for (i, &v) in row.iter().enumerate() {
                assert_eq!(v, i64::from(i == j));
            }
        }
        let mut divisor = ToricDivisor::zero(3);
        divisor.set(RayId::plus(1), 5);
        divisor.set(RayId::minus(1), 7);
        assert_eq!(g_values(&m, &divisor).unwrap(), vec![12, 0, 0]);
    }

    #[test]
    fn log_fano_fixtures() {
        let (gcm, word, _) = setup(Family::A, 3, &[1, 2]);
        let a = vec![Rational64::zero(); 2];
        let report = is_log_fano(&gcm, &word, &a).unwrap();
        assert_eq!(report.b, vec![2, 1]);
        assert_eq!(
            report.f,
            vec![Rational64::from_integer(1), Rational64::from_integer(2)]
        );
        assert!(report.log_fano);

        // (ℙ¹)^r: f_i = b_i + 1 = 2.
        let gcm = GeneralizedCartanMatrix::builtin(Family::A, 5).unwrap();
        let word = Word::new(vec![1, 3, 5], 5).unwrap();
        let report = is_log_fano(&gcm, &word, &[Rational64::zero(); 3]).unwrap();
        assert!(report.log_fano);
        assert!(report.f.iter().all(|f| *f == Rational64::from_integer(2)));

        // Boundary coefficients outside [0, 1) are rejected.
        let bad = vec![Rational64::from_integer(1), Rational64::zero()];
        let (gcm, word, _) = setup(Family::A, 3, &[1, 2]);
        assert!(matches!(
            is_log_fano(&gcm, &word, &bad),
            Err(Error::BoundaryCoefficientOutOfRange { position: 1, .. })
        ));

        // A negative verdict carries a witness.
        let (gcm, word, _) = setup(Family::G2, 2, &[1, 2]);
        let report = is_log_fano(&gcm, &word, &[Rational64::zero(); 2]).unwrap();
        assert!(!report.log_fano);
        assert_eq!(report.witness, Some(1));
    }

    #[test]
    fn consistency_report_fixtures() {
        // B2 (2,1): condition II ⟺ nef and ¬I ⟺ ¬ample, no discrepancies.
        let (gcm, word, _) = setup(Family::B, 2, &[2, 1]);
        let report = consistency_report(&gcm, &word).unwrap();
        assert!(!report.condition_i.holds);
        assert!(report.condition_ii.holds);
        assert!(!report.fano_semantic);
        assert!(report.weak_fano_semantic);
        assert!(report.discrepancies.is_empty());

        // Word (1,1): literal condition II is false, but -K is nef.
        let (gcm, word, _) = setup(Family::A, 3, &[1, 1]);
        let report = consistency_report(&gcm, &word).unwrap();
        assert!(!report.condition_ii.holds);
        assert!(report.weak_fano_semantic);
        assert_eq!(report.discrepancies.len(), 1);
        assert!(report.discrepancies[0].claim.contains("condition II"));

        // Orthogonal word: everything Fano, no discrepancies.
        let (gcm, word, _) = setup(Family::A, 5, &[1, 3, 5]);
        let report = consistency_report(&gcm, &word).unwrap();
        assert!(report.fano_semantic && report.condition_i.holds);
        assert!(report.discrepancies.is_empty());

        // Implications baked into the report.
        assert!(!report.fano_semantic || report.weak_fano_semantic);
    }
}

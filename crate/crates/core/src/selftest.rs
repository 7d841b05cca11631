//! Seeded randomized cross-checks of every fast path against its oracle.
//!
//! The CLI exposes this through `--self-test --seed <n>`; the acceptance
//! suite drives the same generators. All randomness comes from ChaCha8 with
//! an explicit seed, so runs are reproducible across platforms.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bott_fan::{locate_point, BottMatrix, LatticePoint, RayId, Sign};
use crate::classify::{condition_i, condition_ii, is_fano, is_mori_ray};
use crate::classify::{g_values, intersection_number, ToricDivisor};
use crate::curves::mori_cone_basis;
use crate::error::Result;
use crate::oracle::{locate_point_exhaustive, verify_matrix};
use crate::root_data::{GeneralizedCartanMatrix, Word};

/// Parameters of one self-test run.
#[derive(Debug, Clone)]
pub struct SelfTestConfig {
    pub seed: u64,
    /// Number of random (matrix, word) cases.
    pub cases: usize,
    pub max_word_len: usize,
    pub max_rank: usize,
    /// Most negative off-diagonal Cartan entry to draw.
    pub min_entry: i64,
    /// Random lattice points located per case.
    pub points_per_case: usize,
    /// Random divisors tested for the g-conversion per case.
    pub divisors_per_case: usize,
}

impl Default for SelfTestConfig {
    fn default() -> Self {
        SelfTestConfig {
            seed: 0,
            cases: 500,
            max_word_len: 10,
            max_rank: 4,
            min_entry: -4,
            points_per_case: 3,
            divisors_per_case: 8,
        }
    }
}

/// Outcome of one named check over all cases.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct SelfTestReport {
    pub checks: Vec<CheckOutcome>,
}

impl SelfTestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures.is_empty())
    }
}

/// A random generalized Cartan matrix: zero pattern symmetric, off-diagonal
/// entries drawn from `[min_entry, -1]`.
pub fn random_gcm(rng: &mut impl Rng, rank: usize, min_entry: i64) -> GeneralizedCartanMatrix {
    let mut rows = vec![vec![0i64; rank]; rank];
    for p in 0..rank {
        rows[p][p] = 2;
    }
    for p in 0..rank {
        for q in p + 1..rank {
            if rng.random_bool(0.5) {
                rows[p][q] = rng.random_range(min_entry..=-1);
                rows[q][p] = rng.random_range(min_entry..=-1);
            }
        }
    }
    GeneralizedCartanMatrix::new(rows).expect("generated matrix is valid by construction")
}

/// A random word of length `1..=max_len` over `1..=rank`.
pub fn random_word(rng: &mut impl Rng, rank: usize, max_len: usize) -> Word {
    let len = rng.random_range(1..=max_len);
    let letters = (0..len).map(|_| rng.random_range(1..=rank)).collect();
    Word::new(letters, rank).expect("generated word is valid by construction")
}

fn random_point(rng: &mut impl Rng, r: usize, bound: i64) -> LatticePoint {
    LatticePoint::new((0..r).map(|_| rng.random_range(-bound..=bound)).collect())
}

fn random_divisor(rng: &mut impl Rng, r: usize, bound: i64) -> ToricDivisor {
    let mut divisor = ToricDivisor::zero(r);
    for i in 1..=r {
        divisor.set(RayId::plus(i), rng.random_range(-bound..=bound));
        divisor.set(RayId::minus(i), rng.random_range(-bound..=bound));
    }
    divisor
}

struct Check {
    name: &'static str,
    cases: usize,
    failures: Vec<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, case: &str, outcome: Result<bool>) {
        self.cases += 1;
        match outcome {
            Ok(true) => {}
            Ok(false) => self.failures.push(format!("{case}: check failed")),
            Err(e) => self.failures.push(format!("{case}: {e}")),
        }
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            name: self.name.to_string(),
            cases: self.cases,
            failures: self.failures,
        }
    }
}

/// Runs the full randomized suite.
pub fn run(config: &SelfTestConfig) -> SelfTestReport {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut oracle_sweep = Check::new("oracle-sweep");
    let mut locate_check = Check::new("locate-vs-exhaustive");
    let mut g_conversion = Check::new("g-conversion");
    let mut implication = Check::new("condition-I-implies-II");
    let mut fano_mori = Check::new("fano-iff-all-mori");

    for case_index in 0..config.cases {
        let rank = rng.random_range(2..=config.max_rank);
        let gcm = random_gcm(&mut rng, rank, config.min_entry);
        let word = random_word(&mut rng, rank, config.max_word_len);
        let m = match BottMatrix::from_word(&gcm, &word) {
            Ok(m) => m,
            Err(e) => {
                oracle_sweep
                    .failures
                    .push(format!("case {case_index}: setup failed: {e}"));
                continue;
            }
        };
        let case = format!("case {case_index} (rank {rank}, word {:?})", word.letters());
        let r = m.word_len();

        // Every fast path against its brute-force twin.
        oracle_sweep.record(&case, verify_matrix(&m).map(|()| true));

        // Random-point location.
        for _ in 0..config.points_per_case {
            let v = random_point(&mut rng, r, 20);
            let outcome = (|| {
                let fast = locate_point(&m, &v)?;
                let slow = locate_point_exhaustive(&m, &v)?;
                Ok(fast == slow)
            })();
            locate_check.record(&case, outcome);
        }

        // D · r(P_j) = (Σ g_i D_{ρ_i^+}) · r(P_j) for random integer D.
        let outcome = (|| {
            let basis = mori_cone_basis(&m)?;
            for _ in 0..config.divisors_per_case {
                let divisor = random_divisor(&mut rng, r, 20);
                let g = g_values(&m, &divisor)?;
                let mut converted = ToricDivisor::zero(r);
                for i in 1..=r {
                    converted.set(RayId::plus(i), g[i - 1]);
                }
                for class in &basis {
                    if intersection_number(&divisor, class)?
                        != intersection_number(&converted, class)?
                    {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        })();
        g_conversion.record(&case, outcome);

        // N_i^1 ⟹ N_i^2 positionwise.
        let ci = condition_i(&m);
        let cii = condition_ii(&m);
        let implied = ci
            .positions
            .iter()
            .zip(&cii.positions)
            .all(|(a, b)| !a.holds || b.holds);
        implication.record(&case, Ok(implied));

        // Fano ⟺ every extremal ray is Mori.
        let outcome = (|| {
            let fano = is_fano(&m)?;
            let mut all_mori = true;
            for i in 1..=r {
                all_mori &= is_mori_ray(&m, i)?;
            }
            Ok(fano == all_mori)
        })();
        fano_mori.record(&case, outcome);
    }

    SelfTestReport {
        checks: vec![
            oracle_sweep.finish(),
            locate_check.finish(),
            g_conversion.finish(),
            implication.finish(),
            fano_mori.finish(),
        ],
    }
}

/// Location solvability statistics used by the property suite: for each
/// random point, every containing cone must agree on the positive
/// sub-support, and interior points must lie in exactly one cone.
pub fn check_location_solvability(
    m: &BottMatrix,
    rng: &mut impl Rng,
    points: usize,
) -> Result<bool> {
    let r = m.word_len();
    for _ in 0..points {
        let v = random_point(rng, r, 20);
        let cones = crate::oracle::containing_cones(m, &v)?;
        if cones.is_empty() {
            return Ok(false);
        }
        let fast = locate_point(m, &v)?;
        for (cone, coeffs) in &cones {
            let support: Vec<(RayId, i64)> = (1..=r)
                .filter(|&l| coeffs[l - 1] > 0)
                .map(|l| (cone.ray(l), coeffs[l - 1]))
                .collect();
            if support != fast.support {
                return Ok(false);
            }
        }
        let interior = cones
            .iter()
            .any(|(_, coeffs)| coeffs.iter().all(|&c| c > 0));
        if interior && cones.len() != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Convenience wrapper asserting that every minus-signed support ray of the
/// primitive relation sits at an index of Ĩ_i \ {i}.
pub fn minus_support_matches_index_set(m: &BottMatrix, i: usize) -> Result<bool> {
    let relation = crate::curves::primitive_relation(m, i)?;
    let set = crate::curves::mori_index_set(m, i)?;
    let minus_positions: Vec<usize> = relation
        .gamma_rays
        .iter()
        .filter(|(ray, _)| ray.sign == Sign::Minus)
        .map(|(ray, _)| ray.position)
        .collect();
    Ok(minus_positions == set.indices[1..])
}

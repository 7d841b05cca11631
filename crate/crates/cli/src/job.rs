//! Job documents: the self-describing JSON input of every command.
//!
//! ```json
//! {
//!   "root_system": {"family": "B", "rank": 2},
//!   "word": [2, 1],
//!   "divisor": {"1+": 1, "1-": 1, "2+": 1, "2-": 1},
//!   "boundary": ["1/3", 0],
//!   "walls": [{"signs": "++-", "flip": 1}]
//! }
//! ```
//!
//! `root_system` takes either `family`+`rank` or an explicit `cartan` matrix
//! (row-major). Ray labels are 1-based `"i+"` / `"i-"` strings. `boundary`
//! entries are exact rationals written as integers or `"p/q"` strings.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_rational::Rational64;
use serde::Deserialize;

use bott_limit::classify::ToricDivisor;
use bott_limit::curves::Wall;
use bott_limit::{BottMatrix, Family, GeneralizedCartanMatrix, RayId, SignVector, Word};

use crate::CliError;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootSystemSpec {
    #[serde(default)]
    pub family: Option<String>,
    #[serde(default)]
    pub rank: Option<usize>,
    #[serde(default)]
    pub cartan: Option<Vec<Vec<i64>>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WallSpec {
    pub signs: String,
    pub flip: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    /// Only consulted in batch mode; a single run takes the command from the
    /// command line and rejects a conflicting value here.
    #[serde(default)]
    pub command: Option<String>,
    pub root_system: RootSystemSpec,
    pub word: Vec<usize>,
    #[serde(default)]
    pub divisor: Option<BTreeMap<String, i64>>,
    #[serde(default)]
    pub boundary: Option<Vec<serde_json::Value>>,
    #[serde(default)]
    pub walls: Option<Vec<WallSpec>>,
}

/// A validated job: the Cartan matrix, the word, and the Bott matrix.
pub struct ValidatedJob {
    pub gcm: GeneralizedCartanMatrix,
    pub word: Word,
    pub matrix: BottMatrix,
}

pub fn parse_job(text: &str) -> Result<JobSpec, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::input(format!("invalid job document: {e}")))
}

pub fn validate_job(spec: &JobSpec) -> Result<ValidatedJob, CliError> {
    let gcm = match (&spec.root_system.family, &spec.root_system.cartan) {
        (Some(family), None) => {
            let rank = spec
                .root_system
                .rank
                .ok_or_else(|| CliError::input("root_system with a family also needs a rank"))?;
            let family = Family::from_str(family).map_err(CliError::from)?;
            GeneralizedCartanMatrix::builtin(family, rank).map_err(CliError::from)?
        }
        (None, Some(rows)) => {
            if spec.root_system.rank.is_some() {
                return Err(CliError::input(
                    "root_system takes either family+rank or cartan, not both",
                ));
            }
            GeneralizedCartanMatrix::new(rows.clone()).map_err(CliError::from)?
        }
        (Some(_), Some(_)) => {
            return Err(CliError::input(
                "root_system takes either family+rank or cartan, not both",
            ))
        }
        (None, None) => {
            return Err(CliError::input(
                "root_system needs either family+rank or an explicit cartan matrix",
            ))
        }
    };
    let word = Word::new(spec.word.clone(), gcm.rank()).map_err(CliError::from)?;
    let matrix = BottMatrix::from_word(&gcm, &word).map_err(CliError::from)?;
    Ok(ValidatedJob { gcm, word, matrix })
}

/// Builds the divisor from `"i+"`/`"i-"`-labelled coefficients; absent rays
/// are zero.
pub fn parse_divisor(
    map: &BTreeMap<String, i64>,
    word_length: usize,
) -> Result<ToricDivisor, CliError> {
    let mut coefficients = Vec::with_capacity(map.len());
    for (label, &value) in map {
        let ray = RayId::from_str(label).map_err(|_| {
            CliError::input(format!("bad ray label {label:?}: use \"3+\" / \"3-\""))
        })?;
        if ray.position > word_length {
            return Err(CliError::input(format!(
                "ray label {label:?} exceeds the word length {word_length}"
            )));
        }
        coefficients.push((ray, value));
    }
    ToricDivisor::from_coefficients(word_length, &coefficients).map_err(CliError::from)
}

/// Parses one boundary coefficient: a JSON integer or a `"p/q"` string.
fn parse_rational(value: &serde_json::Value, position: usize) -> Result<Rational64, CliError> {
    match value {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(Rational64::from_integer)
            .ok_or_else(|| CliError::input(format!("boundary[{position}] is not an integer"))),
        serde_json::Value::String(s) => Rational64::from_str(s).map_err(|e| {
            CliError::input(format!(
                "boundary[{position}] = {s:?} is not a rational: {e}"
            ))
        }),
        other => Err(CliError::input(format!(
            "boundary[{position}] must be an integer or a \"p/q\" string, got {other}"
        ))),
    }
}

/// The boundary coefficients a_1..a_r of the log-Fano divisor; defaults to
/// all zeros when absent.
pub fn parse_boundary(
    boundary: &Option<Vec<serde_json::Value>>,
    word_length: usize,
) -> Result<Vec<Rational64>, CliError> {
    match boundary {
        None => Ok(vec![Rational64::from_integer(0); word_length]),
        Some(values) => {
            if values.len() != word_length {
                return Err(CliError::input(format!(
                    "boundary has {} entries, expected {word_length}",
                    values.len()
                )));
            }
            values
                .iter()
                .enumerate()
                .map(|(idx, v)| parse_rational(v, idx + 1))
                .collect()
        }
    }
}

pub fn parse_wall(spec: &WallSpec, word_length: usize) -> Result<Wall, CliError> {
    let signs = SignVector::from_str(&spec.signs)
        .map_err(|e| CliError::input(format!("bad wall signs: {e}")))?;
    if signs.len() != word_length {
        return Err(CliError::input(format!(
            "wall signs have length {}, expected {word_length}",
            signs.len()
        )));
    }
    if !(1..=word_length).contains(&spec.flip) {
        return Err(CliError::input(format!(
            "wall flip {} is outside 1..={word_length}",
            spec.flip
        )));
    }
    Ok(Wall::new(signs, spec.flip))
}

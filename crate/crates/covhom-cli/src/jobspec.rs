//! Input format: a small JSON description of a marked arrangement and,
//! optionally, a weight character on it.

use std::path::Path;

use serde::Deserialize;

use covhom::{ArrangementCharacter, CharMode, MarkedArrangement};

use crate::run::AppError;

/// On-disk description. `lines` is optional and checked against the
/// multiplicities when present; `eps`/`point_weights` are required by every
/// command that needs a character; `modulus` switches the character from
/// integral to mod-N.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    #[serde(default)]
    pub lines: Option<usize>,
    pub multiplicities: Vec<usize>,
    #[serde(default)]
    pub eps: Option<i64>,
    #[serde(default)]
    pub point_weights: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub modulus: Option<u64>,
}

pub fn load(path: &Path) -> Result<JobSpec, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::input(format!("cannot read {}: {}", path.display(), e)))?;
    serde_json::from_str(&text)
        .map_err(|e| AppError::input(format!("{} is not a valid description: {}", path.display(), e)))
}

impl JobSpec {
    /// Builds the arrangement, deriving the line count from
    /// n = 1 + sum(m_i - 1) when `lines` is absent.
    pub fn arrangement(&self) -> Result<MarkedArrangement, AppError> {
        let derived = 1 + self.multiplicities.iter().map(|m| m.saturating_sub(1)).sum::<usize>();
        let n = self.lines.unwrap_or(derived);
        MarkedArrangement::new(n, self.multiplicities.clone()).map_err(AppError::from)
    }

    /// Builds and validates the character. `force_integral` drops a declared
    /// modulus and revalidates under the integral constraints
    /// (eps + sum eps_{i,j} = 0 and gcd of all weights = 1).
    pub fn character(
        &self,
        a: &MarkedArrangement,
        force_integral: bool,
    ) -> Result<ArrangementCharacter, AppError> {
        let eps = self
            .eps
            .ok_or_else(|| AppError::input("this command needs \"eps\" in the input".into()))?;
        let pw = self
            .point_weights
            .clone()
            .ok_or_else(|| AppError::input("this command needs \"point_weights\" in the input".into()))?;
        let mode = match self.modulus {
            Some(m) if !force_integral => CharMode::ModN(m),
            _ => CharMode::Integral,
        };
        a.character(eps, pw, mode).map_err(AppError::from)
    }
}

//! Enumeration budgets for the exhaustive parts of the pipeline.

use crate::error::{Error, Result};

/// Limits on exhaustive enumeration. The defaults keep every operation at
/// desk scale (well under a minute); raise them explicitly or through the
/// `SC_CODES_*` environment variables for larger sweeps.
#[derive(Debug, Clone)]
pub struct Budget {
    /// Largest message dimension m for which 2^m messages are enumerated.
    pub max_message_dim: usize,
    /// Largest span dimension k for which 2^k codewords are enumerated.
    pub max_span_dim: usize,
    /// Cap on defining-set length and on complex member enumeration.
    pub max_set_size: usize,
    /// Cap on total work (inner-loop steps) for a single enumeration call.
    pub max_work: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_message_dim: 24,
            max_span_dim: 24,
            max_set_size: 1 << 16,
            max_work: 1 << 32,
        }
    }
}

impl Budget {
    /// Default budget with any `SC_CODES_MAX_MESSAGE_DIM`,
    /// `SC_CODES_MAX_SPAN_DIM`, `SC_CODES_MAX_SET_SIZE` or
    /// `SC_CODES_MAX_WORK` environment overrides applied.
    pub fn from_env() -> Result<Self> {
        let mut budget = Self::default();
        if let Some(v) = read_env("SC_CODES_MAX_MESSAGE_DIM")? {
            budget.max_message_dim = v as usize;
        }
        if let Some(v) = read_env("SC_CODES_MAX_SPAN_DIM")? {
            budget.max_span_dim = v as usize;
        }
        if let Some(v) = read_env("SC_CODES_MAX_SET_SIZE")? {
            budget.max_set_size = v as usize;
        }
        if let Some(v) = read_env("SC_CODES_MAX_WORK")? {
            budget.max_work = v;
        }
        Ok(budget)
    }
}

fn read_env(name: &str) -> Result<Option<u128>> {
    match std::env::var(name) {
        Ok(s) => s
            .trim()
            .parse::<u128>()
            .map(Some)
            .map_err(|_| Error::BadParameters(format!("{name}: expected an integer, got {s:?}"))),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err(Error::BadParameters(format!("{name}: not valid unicode")))
        }
    }
}

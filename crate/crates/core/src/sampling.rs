//! Exhaustive-or-sampled verification plans.

use serde::{Deserialize, Serialize};

/// How verification loops choose their inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Exhaustive up to `exhaustive_limit` cases, sampled beyond.
    #[default]
    Auto,
    Exhaustive,
    Sampled,
}

/// A verification plan with a reproducible seed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sampling {
    pub mode: Mode,
    pub seed: u64,
    pub exhaustive_limit: usize,
    pub samples: usize,
}

impl Default for Sampling {
    fn default() -> Sampling {
        Sampling { mode: Mode::Auto, seed: 0, exhaustive_limit: 2_000_000, samples: 100_000 }
    }
}

impl Sampling {
    pub fn exhaustive() -> Sampling {
        Sampling { mode: Mode::Exhaustive, ..Sampling::default() }
    }

    pub fn sampled(samples: usize, seed: u64) -> Sampling {
        Sampling { mode: Mode::Sampled, seed, samples, ..Sampling::default() }
    }

    /// `None` to enumerate all `total` cases, otherwise the sample count and
    /// seed to draw with.
    pub fn plan(&self, total: usize) -> Option<(usize, u64)> {
        let exhaustive = match self.mode {
            Mode::Exhaustive => true,
            Mode::Sampled => false,
            Mode::Auto => total <= self.exhaustive_limit,
        };
        if exhaustive {
            None
        } else {
            Some((self.samples, self.seed))
        }
    }
}

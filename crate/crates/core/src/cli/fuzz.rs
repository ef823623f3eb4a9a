use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::generate::{generate, Shape};
use crate::assemble::{solve, CROSSING_BOUND};
use crate::error::{Error, Result};
use crate::verify::{oracle_best_k, BEST_K_LIMIT};

#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub trials: usize,
    pub max_n: usize,
    pub seed: u64,
    /// Compare against exhaustive enumeration when both colors are small.
    pub oracle: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzFailure {
    pub trial: usize,
    pub seed: u64,
    pub n_red: usize,
    pub n_blue: usize,
    pub shape: Shape,
    pub error: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzSummary {
    pub trials: usize,
    pub failures: Vec<FuzzFailure>,
    pub max_count_histogram: BTreeMap<usize, usize>,
    pub relations: BTreeMap<String, usize>,
    pub oracle_checked: usize,
    pub oracle_best_k_histogram: BTreeMap<usize, usize>,
    pub repair_exchanges: usize,
}

impl FuzzSummary {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Per-trial seed, decorrelated from neighbouring trials (splitmix64).
pub fn trial_seed(base: u64, trial: usize) -> u64 {
    let mut z = base.wrapping_add((trial as u64).wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

struct Outcome {
    max_count: Option<usize>,
    relation: Option<String>,
    best_k: Option<usize>,
    exchanges: usize,
    failure: Option<FuzzFailure>,
}

fn run_trial(cfg: &FuzzConfig, trial: usize) -> Outcome {
    let seed = trial_seed(cfg.seed, trial);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n_red = rng.gen_range(3..=cfg.max_n);
    let n_blue = rng.gen_range(3..=cfg.max_n);
    let shape = Shape::ALL[rng.gen_range(0..Shape::ALL.len())];
    let fail = |error: String| Outcome {
        max_count: None,
        relation: None,
        best_k: None,
        exchanges: 0,
        failure: Some(FuzzFailure { trial, seed, n_red, n_blue, shape, error }),
    };
    let file = match generate(n_red, n_blue, seed, shape) {
        Ok(f) => f,
        Err(e) => return fail(format!("generate: {e}")),
    };
    let points = file.points();
    let pair = match solve(&points) {
        Ok(p) => p,
        Err(e) => return fail(format!("solve: {e}")),
    };
    if !pair.crossings.is_valid(CROSSING_BOUND) {
        return fail(format!("invalid solution, max count {}", pair.crossings.max_count));
    }
    let max_count = pair.crossings.max_count;
    let mut best_k = None;
    if cfg.oracle && n_red <= BEST_K_LIMIT && n_blue <= BEST_K_LIMIT {
        match oracle_best_k(&points) {
            Ok(k) if k <= max_count => best_k = Some(k),
            Ok(k) => return fail(format!("oracle best {k} exceeds achieved {max_count}")),
            Err(e) => return fail(format!("oracle: {e}")),
        }
    }
    Outcome {
        max_count: Some(max_count),
        relation: pair.provenance.relation.map(|r| format!("{r:?}")),
        best_k,
        exchanges: pair.provenance.repair.map_or(0, |r| r.exchanges),
        failure: None,
    }
}

/// Solves and checks `trials` random instances in parallel. The summary
/// does not depend on thread scheduling.
pub fn run_fuzz(cfg: &FuzzConfig) -> Result<FuzzSummary> {
    if cfg.max_n < 3 {
        return Err(Error::Input(format!("max_n must be at least 3, got {}", cfg.max_n)));
    }
    let outcomes: Vec<Outcome> = (0..cfg.trials).into_par_iter().map(|t| run_trial(cfg, t)).collect();
    let mut summary = FuzzSummary { trials: cfg.trials, ..FuzzSummary::default() };
    for o in outcomes {
        if let Some(f) = o.failure {
            summary.failures.push(f);
            continue;
        }
        if let Some(m) = o.max_count {
            *summary.max_count_histogram.entry(m).or_default() += 1;
        }
        if let Some(r) = o.relation {
            *summary.relations.entry(r).or_default() += 1;
        }
        if let Some(k) = o.best_k {
            summary.oracle_checked += 1;
            *summary.oracle_best_k_histogram.entry(k).or_default() += 1;
        }
        summary.repair_exchanges += o.exchanges;
    }
    Ok(summary)
}

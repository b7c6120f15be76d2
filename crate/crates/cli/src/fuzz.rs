//! Random matrices pushed through every congruence a matrix must satisfy.
//! Any violation is a bug in the library, not in the mathematics.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use tracewitt::{
    check_exterior_congruence, check_trace_sequence, random_matrix, trace_sequence, CheckRow,
};

/// Exterior congruences are checked for these primes and `k = 1..=2`, on
/// matrices of dimension at most [`EXTERIOR_MAX_DIM`].
pub const EXTERIOR_PRIMES: [u64; 2] = [2, 3];
pub const EXTERIOR_MAX_K: u32 = 2;
pub const EXTERIOR_MAX_DIM: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzConfig {
    pub trials: u64,
    pub dim: usize,
    pub entry_bound: u32,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub trial: u64,
    pub matrix_seed: u64,
    pub check: &'static str,
    pub row: CheckRow,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzSummary {
    #[serde(flatten)]
    pub config: FuzzConfig,
    pub trace_length: usize,
    pub trace_checks: u64,
    pub exterior_checks: u64,
    pub violations: u64,
    pub failures: Vec<Violation>,
}

impl FuzzSummary {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("summary serializes")
    }
}

/// Seed of the matrix used in trial `trial`: SplitMix64 applied to
/// `seed + trial·0x9E3779B97F4A7C15`.
pub fn trial_seed(seed: u64, trial: u64) -> u64 {
    let mut z = seed.wrapping_add(trial.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

struct TrialResult {
    trace_checks: u64,
    exterior_checks: u64,
    failures: Vec<Violation>,
}

fn run_trial(config: &FuzzConfig, trial: u64) -> TrialResult {
    let matrix_seed = trial_seed(config.seed, trial);
    let f = random_matrix(config.dim, config.entry_bound, matrix_seed);
    let mut failures = Vec::new();
    let mut violation = |check, row: &CheckRow| {
        failures.push(Violation {
            trial,
            matrix_seed,
            check,
            row: row.clone(),
        })
    };

    let report = check_trace_sequence(&trace_sequence(&f, 4 * config.dim));
    let trace_checks = report.checks().len() as u64;
    report.failures().for_each(|r| violation("trace-sequence", r));

    let mut exterior_checks = 0;
    if config.dim <= EXTERIOR_MAX_DIM {
        for p in EXTERIOR_PRIMES {
            for k in 1..=EXTERIOR_MAX_K {
                let report = check_exterior_congruence(&f, p, k).expect("p is prime and k >= 1");
                exterior_checks += report.checks().len() as u64;
                report.failures().for_each(|r| violation("exterior", r));
            }
        }
    }
    TrialResult {
        trace_checks,
        exterior_checks,
        failures,
    }
}

/// Runs all trials (in parallel) and merges results in trial order, so the
/// summary depends only on the configuration.
pub fn run(config: &FuzzConfig) -> FuzzSummary {
    let results: Vec<TrialResult> = (0..config.trials)
        .into_par_iter()
        .map(|t| run_trial(config, t))
        .collect();
    let mut summary = FuzzSummary {
        config: *config,
        trace_length: 4 * config.dim,
        trace_checks: 0,
        exterior_checks: 0,
        violations: 0,
        failures: Vec::new(),
    };
    for r in results {
        summary.trace_checks += r.trace_checks;
        summary.exterior_checks += r.exterior_checks;
        summary.violations += r.failures.len() as u64;
        summary.failures.extend(r.failures);
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_differ_per_trial() {
        let seeds: std::collections::HashSet<u64> = (0..1000).map(|t| trial_seed(7, t)).collect();
        assert_eq!(seeds.len(), 1000);
        assert_eq!(trial_seed(7, 3), trial_seed(7, 3));
    }

    #[test]
    fn small_run_is_clean() {
        let config = FuzzConfig {
            trials: 20,
            dim: 3,
            entry_bound: 3,
            seed: 1,
        };
        let s = run(&config);
        assert_eq!(s.violations, 0);
        assert!(s.trace_checks > 0 && s.exterior_checks > 0);
        assert_eq!(run(&config), s);
    }

    #[test]
    fn empty_matrices() {
        let s = run(&FuzzConfig {
            trials: 1,
            dim: 0,
            entry_bound: 5,
            seed: 0,
        });
        assert_eq!((s.violations, s.trace_checks, s.exterior_checks), (0, 0, 0));
    }
}

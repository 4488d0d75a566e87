//! Exhaustive cross-validation sweeps and randomized k-input checks.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::pattern_graph::{is_structurally_controllable, Method, Pattern};
use crate::se_algebra::{larc_exact, larc_numeric, sample_realization_with};

/// Largest `n` accepted by [`sweep`].
pub const MAX_SWEEP_N: usize = 4;

/// Default number of random trials per input count.
pub const DEFAULT_TRIALS: usize = 5;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Disagreement {
    pub pattern: Pattern,
    pub closure: bool,
    pub connectivity: bool,
    pub oracle: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub patterns_total: usize,
    pub agree: usize,
    pub controllable: usize,
    pub disagreements: Vec<Disagreement>,
    #[serde(rename = "elapsed_ms", serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

/// Compares both graph criteria against the exact rank condition on every
/// pattern for dimension `n`.
pub fn sweep(n: usize) -> Result<SweepReport> {
    if !(1..=MAX_SWEEP_N).contains(&n) {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            min: 1,
            max: MAX_SWEEP_N,
        });
    }
    let start = Instant::now();
    let patterns: Vec<Pattern> = Pattern::all(n).collect();
    let verdicts: Vec<(Pattern, bool, bool, bool)> = patterns
        .into_par_iter()
        .map(|p| {
            let closure = is_structurally_controllable(&p, Method::Closure);
            let connectivity = is_structurally_controllable(&p, Method::Connectivity);
            let oracle = larc_exact(&p.basis());
            (p, closure, connectivity, oracle)
        })
        .collect();

    let patterns_total = verdicts.len();
    let controllable = verdicts.iter().filter(|v| v.3).count();
    let disagreements: Vec<Disagreement> = verdicts
        .into_iter()
        .filter(|(_, a, b, c)| !(a == b && b == c))
        .map(|(pattern, closure, connectivity, oracle)| Disagreement {
            pattern,
            closure,
            connectivity,
            oracle,
        })
        .collect();
    Ok(SweepReport {
        n,
        patterns_total,
        agree: patterns_total - disagreements.len(),
        controllable,
        disagreements,
        elapsed: start.elapsed(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Some trial produced generators satisfying the rank condition.
    ControllableWhp,
    /// No trial succeeded. This never certifies uncontrollability.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KInputReport {
    pub pattern: Pattern,
    pub m: usize,
    pub trials: usize,
    pub successes: usize,
    pub verdict: Verdict,
}

/// Seed for trial `trial` of an `m`-input check (splitmix64 mixing).
fn trial_seed(seed: u64, m: usize, trial: usize) -> u64 {
    let mut z = seed
        ^ (m as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (trial as u64).wrapping_mul(0xD1B5_4A32_D192_ED03);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Draws `m` random realizations from `B_Λ` per trial and tests the numeric
/// rank condition on them.
///
/// Trials are independent and seeded from `(seed, m, trial)`, so the report
/// does not depend on scheduling.
pub fn k_input_check(pattern: &Pattern, m: usize, trials: usize, seed: u64, tol: f64) -> Result<KInputReport> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let outcomes: Vec<bool> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, m, trial));
            let mats: Vec<_> = (0..m).map(|_| sample_realization_with(pattern, &mut rng)).collect();
            larc_numeric(&mats, tol)
        })
        .collect::<Result<_>>()?;
    let successes = outcomes.iter().filter(|&&ok| ok).count();
    Ok(KInputReport {
        pattern: pattern.clone(),
        m,
        trials,
        successes,
        verdict: if successes >= 1 {
            Verdict::ControllableWhp
        } else {
            Verdict::Inconclusive
        },
    })
}

/// Result of the minimum-input search, including every check that ran.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinInputsReport {
    pub min_inputs: Option<usize>,
    pub checks: Vec<KInputReport>,
}

/// Smallest `m` for which random `m`-input realizations satisfy the rank
/// condition, or `None` for a structurally uncontrollable pattern.
pub fn min_inputs(pattern: &Pattern, trials: usize, seed: u64, tol: f64) -> Result<Option<usize>> {
    Ok(min_inputs_report(pattern, trials, seed, tol)?.min_inputs)
}

pub fn min_inputs_report(pattern: &Pattern, trials: usize, seed: u64, tol: f64) -> Result<MinInputsReport> {
    let mut checks = Vec::new();
    if !is_structurally_controllable(pattern, Method::Closure) {
        return Ok(MinInputsReport {
            min_inputs: None,
            checks,
        });
    }
    for m in 1..=pattern.len() {
        let report = k_input_check(pattern, m, trials, seed, tol)?;
        let found = report.verdict == Verdict::ControllableWhp;
        checks.push(report);
        if found {
            return Ok(MinInputsReport {
                min_inputs: Some(m),
                checks,
            });
        }
    }
    Ok(MinInputsReport {
        min_inputs: None,
        checks,
    })
}

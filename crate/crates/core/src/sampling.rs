//! Sampled support reduction.
//!
//! Draw `N` pure profiles i.i.d. from a source profile and let each player
//! play the uniform distribution over its own coordinates of the draws. With
//! `N ≥ k² ln(2kn) / (2ε²)` every deviation payoff of the sampled profile is,
//! with probability above 1/2, within `ε` of its value under the source.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::game::{deviation_payoffs, regret_report, Game, MixedProfile, MixedStrategy, PureProfile};
use crate::generators::{Seed, SeededStream, Stream};

/// `⌈k² ln(2kn) / (2ε²)⌉`, natural logarithm.
pub fn required_samples(num_players: usize, num_strategies: usize, eps: f64) -> Result<usize> {
    if num_players < 1 || num_strategies < 1 {
        return Err(Error::InvalidParameter(format!(
            "need k ≥ 1 and n ≥ 1, got k={num_players}, n={num_strategies}"
        )));
    }
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::InvalidParameter(format!("eps must be positive, got {eps}")));
    }
    let k = num_players as f64;
    let n = num_strategies as f64;
    let raw = k * k * (2.0 * k * n).ln() / (2.0 * eps * eps);
    if raw > usize::MAX as f64 / 2.0 {
        return Err(Error::InvalidParameter(format!(
            "sample count {raw:.3e} does not fit in memory"
        )));
    }
    Ok(raw.ceil() as usize)
}

/// Size of the brute-force search over sampled supports.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnumerationCost {
    pub samples: usize,
    /// `k · N`, the exponent of `n^(kN)`.
    pub exponent: u64,
    /// `log₁₀ n^(kN)`.
    pub log10_size: f64,
}

pub fn enumeration_cost(num_players: usize, num_strategies: usize, eps: f64) -> Result<EnumerationCost> {
    let samples = required_samples(num_players, num_strategies, eps)?;
    let exponent = num_players as u64 * samples as u64;
    Ok(EnumerationCost {
        samples,
        exponent,
        log10_size: exponent as f64 * (num_strategies as f64).log10(),
    })
}

/// `N` pure profiles drawn i.i.d. from a source profile.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleBatch {
    draws: Vec<PureProfile>,
    num_strategies: usize,
}

impl SampleBatch {
    pub fn draw(game: &Game, source: &MixedProfile, count: usize, seed: Seed) -> Result<Self> {
        source.check_against(game)?;
        if count == 0 {
            return Err(Error::InvalidParameter("sample count must be at least 1".into()));
        }
        let k = game.num_players();
        let mut stream = SeededStream::new(Stream::Sampling, seed, k as u64, count as u64);
        let supports: Vec<Vec<(usize, f64)>> = source
            .strategies()
            .iter()
            .map(|s| s.support().into_iter().map(|j| (j, s.prob(j))).collect())
            .collect();
        let draws = (0..count)
            .map(|_| {
                let choices = supports
                    .iter()
                    .map(|support| sample_index(support, stream.unit()))
                    .collect();
                PureProfile::new(choices)
            })
            .collect();
        Ok(SampleBatch {
            draws,
            num_strategies: game.num_strategies(),
        })
    }

    pub fn draws(&self) -> &[PureProfile] {
        &self.draws
    }

    pub fn len(&self) -> usize {
        self.draws.len()
    }

    pub fn is_empty(&self) -> bool {
        self.draws.is_empty()
    }

    /// How often each player drew each strategy.
    pub fn counts(&self) -> Vec<Vec<usize>> {
        let k = self.draws.first().map_or(0, PureProfile::len);
        let mut counts = vec![vec![0; self.num_strategies]; k];
        for draw in &self.draws {
            for (p, &c) in draw.choices().iter().enumerate() {
                counts[p][c] += 1;
            }
        }
        counts
    }

    /// Each player's uniform distribution over its multiset of draws.
    pub fn empirical_profile(&self) -> Result<MixedProfile> {
        self.counts()
            .iter()
            .map(|c| MixedStrategy::empirical(c))
            .collect::<Result<Vec<_>>>()
            .map(MixedProfile::new)
    }
}

/// Inverse-CDF lookup restricted to the support, so zero-probability
/// strategies are never returned.
fn sample_index(support: &[(usize, f64)], u: f64) -> usize {
    let mut acc = 0.0;
    for &(j, p) in support {
        acc += p;
        if u < acc {
            return j;
        }
    }
    support.last().expect("support is never empty").0
}

/// Empirical-distribution profile built from `count` draws of `source`.
pub fn sample_support(
    game: &Game,
    source: &MixedProfile,
    count: usize,
    seed: Seed,
) -> Result<MixedProfile> {
    SampleBatch::draw(game, source, count, seed)?.empirical_profile()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConcentrationReport {
    /// Largest `|g_ij(sampled) - g_ij(source)|` over players `i` and strategies `j`.
    pub max_deviation: f64,
    pub worst_player: usize,
    pub worst_strategy: usize,
    pub eps: f64,
    pub passed: bool,
}

/// Compares every deviation payoff under `sampled` with its value under `source`.
pub fn concentration_check(
    game: &Game,
    source: &MixedProfile,
    sampled: &MixedProfile,
    eps: f64,
) -> Result<ConcentrationReport> {
    source.check_against(game)?;
    sampled.check_against(game)?;
    let mut worst = (0.0, 0, 0);
    for player in 0..game.num_players() {
        let want = deviation_payoffs(game, source, player)?;
        let got = deviation_payoffs(game, sampled, player)?;
        for (j, (a, b)) in want.iter().zip(&got).enumerate() {
            let gap = (a - b).abs();
            if gap > worst.0 {
                worst = (gap, player, j);
            }
        }
    }
    Ok(ConcentrationReport {
        max_deviation: worst.0,
        worst_player: worst.1,
        worst_strategy: worst.2,
        eps,
        passed: worst.0 <= eps,
    })
}

/// One row of a repeated sampling experiment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SamplingTrial {
    pub trial: usize,
    pub seed: u64,
    pub samples: usize,
    pub max_deviation: f64,
    pub sampled_epsilon: f64,
    pub sampled_total_support: usize,
    /// All deviation payoffs concentrated within `eps`.
    pub concentrated: bool,
    /// Sampled profile is a `2·eps`-equilibrium.
    pub within_two_eps: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SamplingSummary {
    pub trials: usize,
    pub concentrated_rate: f64,
    pub within_two_eps_rate: f64,
    /// Both events together.
    pub pass_rate: f64,
}

impl SamplingSummary {
    /// `None` for an empty run.
    pub fn from_trials(rows: &[SamplingTrial]) -> Option<Self> {
        if rows.is_empty() {
            return None;
        }
        let total = rows.len() as f64;
        let rate = |f: fn(&SamplingTrial) -> bool| rows.iter().filter(|r| f(r)).count() as f64 / total;
        Some(SamplingSummary {
            trials: rows.len(),
            concentrated_rate: rate(|r| r.concentrated),
            within_two_eps_rate: rate(|r| r.within_two_eps),
            pass_rate: rate(|r| r.concentrated && r.within_two_eps),
        })
    }
}

/// Runs `trials` independent reductions of `source`; trial `i` uses seed
/// `seed + i`.
pub fn run_sampling_trials(
    game: &Game,
    source: &MixedProfile,
    eps: f64,
    samples: usize,
    trials: usize,
    seed: Seed,
    exec: Execution,
) -> Result<Vec<SamplingTrial>> {
    source.check_against(game)?;
    if eps.is_nan() || eps <= 0.0 {
        return Err(Error::InvalidParameter(format!("eps must be positive, got {eps}")));
    }
    exec.map_indices(trials, |trial| {
        let trial_seed = seed.0.wrapping_add(trial as u64);
        let sampled = sample_support(game, source, samples, Seed(trial_seed))?;
        let check = concentration_check(game, source, &sampled, eps)?;
        let report = regret_report(game, &sampled)?;
        Ok(SamplingTrial {
            trial,
            seed: trial_seed,
            samples,
            max_deviation: check.max_deviation,
            sampled_epsilon: report.epsilon,
            sampled_total_support: sampled.total_support(),
            concentrated: check.passed,
            within_two_eps: report.epsilon <= 2.0 * eps,
        })
    })
    .into_iter()
    .collect()
}

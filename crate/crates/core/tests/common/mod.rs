//! Test-only oracles, written directly against the flat tensor layout and
//! sharing no evaluation code with the library.
#![allow(dead_code)]

use knash::{Game, MixedProfile, MixedStrategy};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

/// Digits of `index` in base `n`, most significant first, `k` of them.
fn digits(mut index: usize, n: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for d in (0..k).rev() {
        out[d] = index % n;
        index /= n;
    }
    out
}

fn probs(profile: &MixedProfile) -> Vec<Vec<f64>> {
    profile
        .strategies()
        .iter()
        .map(|s| s.probs().to_vec())
        .collect()
}

/// Σ over all n^k profiles of u[p][s] · Π_q prob[q][s_q].
pub fn brute_expected(game: &Game, profile: &MixedProfile, player: usize) -> f64 {
    let (k, n) = (game.num_players(), game.num_strategies());
    let table = probs(profile);
    let total = n.pow(k as u32);
    let mut sum = 0.0;
    for m in 0..total {
        let s = digits(m, n, k);
        let w: f64 = (0..k).map(|q| table[q][s[q]]).product();
        sum += w * game.payoffs()[player * total + m];
    }
    sum
}

/// Same sum with `player`'s probability vector replaced by the point mass on `pure`.
pub fn brute_deviation(game: &Game, profile: &MixedProfile, player: usize, pure: usize) -> f64 {
    let (k, n) = (game.num_players(), game.num_strategies());
    let table = probs(profile);
    let total = n.pow(k as u32);
    let mut sum = 0.0;
    for m in 0..total {
        let s = digits(m, n, k);
        if s[player] != pure {
            continue;
        }
        let w: f64 = (0..k).filter(|&q| q != player).map(|q| table[q][s[q]]).product();
        sum += w * game.payoffs()[player * total + m];
    }
    sum
}

/// Per-player regrets and their maximum.
pub fn brute_regrets(game: &Game, profile: &MixedProfile) -> (Vec<f64>, f64) {
    let regrets: Vec<f64> = (0..game.num_players())
        .map(|p| {
            let best = (0..game.num_strategies())
                .map(|j| brute_deviation(game, profile, p, j))
                .fold(f64::NEG_INFINITY, f64::max);
            best - brute_expected(game, profile, p)
        })
        .collect();
    let eps = regrets.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    (regrets, eps)
}

pub fn rng(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

/// Random full-support mixed strategy.
pub fn random_strategy(rng: &mut impl Rng, n: usize) -> MixedStrategy {
    let raw: Vec<f64> = (0..n).map(|_| rng.gen_range(0.01..1.0)).collect();
    let total: f64 = raw.iter().sum();
    MixedStrategy::new(raw.iter().map(|x| x / total).collect()).unwrap()
}

/// Random strategy whose support is exactly `support`.
pub fn random_strategy_on(rng: &mut impl Rng, n: usize, support: &[usize]) -> MixedStrategy {
    let mut raw = vec![0.0; n];
    for &j in support {
        raw[j] = rng.gen_range(0.01..1.0);
    }
    let total: f64 = raw.iter().sum();
    MixedStrategy::new(raw.iter().map(|x| x / total).collect()).unwrap()
}

pub fn random_profile(rng: &mut impl Rng, k: usize, n: usize) -> MixedProfile {
    MixedProfile::new((0..k).map(|_| random_strategy(rng, n)).collect())
}

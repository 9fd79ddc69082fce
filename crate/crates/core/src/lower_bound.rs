//! Certification of the constant-support lower bound on concrete games.
//!
//! In a winner-takes-all game the payoffs at every pure profile sum to 1, so
//! under any mixed profile some player expects at most `1/k`. If, for a fixed
//! support set, every player owns a pure strategy that wins against every
//! combination of the other players' supported strategies, that player can
//! deviate to payoff 1 and the profile's epsilon is at least `1 - 1/k`.
//! [`certify_lower_bound`] checks this universal-winner property for every
//! support set up to a total size budget `t`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::game::Game;

/// Default cap on `C(kn, t) · n · t^(k-1)` elementary checks.
pub const DEFAULT_WORK_LIMIT: f64 = 1e9;

/// Support sets checked per parallel batch.
const BATCH: usize = 2048;

/// One non-empty set of pure strategies per player, each sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SupportSet {
    per_player: Vec<Vec<usize>>,
}

impl SupportSet {
    pub fn new(per_player: Vec<Vec<usize>>) -> Result<Self> {
        for (p, set) in per_player.iter().enumerate() {
            if set.is_empty() {
                return Err(Error::InvalidParameter(format!("player {p} has an empty support")));
            }
            if set.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidParameter(format!(
                    "player {p} support must be strictly increasing"
                )));
            }
        }
        Ok(SupportSet { per_player })
    }

    pub fn per_player(&self) -> &[Vec<usize>] {
        &self.per_player
    }

    pub fn player(&self, p: usize) -> &[usize] {
        &self.per_player[p]
    }

    pub fn total_size(&self) -> usize {
        self.per_player.iter().map(Vec::len).sum()
    }

    pub fn num_players(&self) -> usize {
        self.per_player.len()
    }

    fn check_against(&self, game: &Game) -> Result<()> {
        if self.per_player.len() != game.num_players() {
            return Err(Error::DimensionMismatch {
                what: "support set players",
                expected: game.num_players(),
                actual: self.per_player.len(),
            });
        }
        for set in &self.per_player {
            if let Some(&s) = set.last() {
                game.check_strategy(s)?;
            }
        }
        Ok(())
    }
}

/// Iterator over every support set of total size at most `t`.
///
/// Size vectors come in lexicographic order; within one size vector, the
/// per-player index subsets follow lexicographic order with player 0 slowest.
#[derive(Debug, Clone)]
pub struct SupportSets {
    num_strategies: usize,
    budget: usize,
    sizes: Vec<usize>,
    subsets: Vec<Vec<usize>>,
    done: bool,
}

impl SupportSets {
    fn reset_subsets(&mut self) {
        self.subsets = self.sizes.iter().map(|&c| (0..c).collect()).collect();
    }

    fn advance_sizes(&mut self) -> bool {
        let n = self.num_strategies;
        for pos in (0..self.sizes.len()).rev() {
            self.sizes[pos] += 1;
            if self.sizes[pos] <= n && self.sizes.iter().sum::<usize>() <= self.budget {
                return true;
            }
            self.sizes[pos] = 1;
        }
        false
    }

    fn advance(&mut self) {
        for p in (0..self.subsets.len()).rev() {
            if next_combination(&mut self.subsets[p], self.num_strategies) {
                return;
            }
            self.subsets[p] = (0..self.sizes[p]).collect();
        }
        if self.advance_sizes() {
            self.reset_subsets();
        } else {
            self.done = true;
        }
    }
}

impl Iterator for SupportSets {
    type Item = SupportSet;

    fn next(&mut self) -> Option<SupportSet> {
        if self.done {
            return None;
        }
        let current = SupportSet {
            per_player: self.subsets.clone(),
        };
        self.advance();
        Some(current)
    }
}

/// Next `r`-subset of `0..n` in lexicographic order; false after the last.
fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let r = comb.len();
    for i in (0..r).rev() {
        if comb[i] < n - r + i {
            comb[i] += 1;
            for j in i + 1..r {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub fn enumerate_support_sets(
    num_players: usize,
    num_strategies: usize,
    budget: usize,
) -> Result<SupportSets> {
    if num_players < 1 || num_strategies < 1 {
        return Err(Error::InvalidParameter(format!(
            "need k ≥ 1 and n ≥ 1, got k={num_players}, n={num_strategies}"
        )));
    }
    if budget < num_players {
        return Err(Error::InvalidParameter(format!(
            "total support budget {budget} is below the player count {num_players}"
        )));
    }
    let mut sets = SupportSets {
        num_strategies,
        budget,
        sizes: vec![1; num_players],
        subsets: Vec::new(),
        done: false,
    };
    sets.reset_subsets();
    Ok(sets)
}

/// `C(n, r)` as a float.
fn binomial(n: usize, r: usize) -> f64 {
    if r > n {
        return 0.0;
    }
    let r = r.min(n - r);
    (1..=r).fold(1.0, |acc, i| acc * (n - r + i) as f64 / i as f64)
}

/// Number of support sets with total size exactly `size`, by summing
/// products of binomials over size compositions.
pub fn count_support_sets_of_size(num_players: usize, num_strategies: usize, size: usize) -> u128 {
    // ways[s] = number of ways to pick supports for the players seen so far
    // with total size s.
    let mut ways = vec![0u128; size + 1];
    ways[0] = 1;
    let choose: Vec<u128> = (0..=num_strategies)
        .map(|r| binomial(num_strategies, r).round() as u128)
        .collect();
    for _ in 0..num_players {
        let mut next = vec![0u128; size + 1];
        for (s, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for c in 1..=num_strategies.min(size - s) {
                next[s + c] += w * choose[c];
            }
        }
        ways = next;
    }
    ways[size]
}

/// The lowest strategy of `player` paying exactly 1 against every combination
/// of the other players' supported strategies.
pub fn universal_winner_check(game: &Game, support: &SupportSet, player: usize) -> Result<Option<usize>> {
    support.check_against(game)?;
    game.check_player(player)?;
    Ok(universal_winner(game, support, player))
}

fn universal_winner(game: &Game, support: &SupportSet, player: usize) -> Option<usize> {
    // Flat indices of all opposing combinations, with the player's own
    // coordinate held at 0.
    let mut bases = vec![0usize];
    for q in (0..game.num_players()).filter(|&q| q != player) {
        let stride = game.stride(q);
        bases = bases
            .iter()
            .flat_map(|&b| support.player(q).iter().map(move |&s| b + s * stride))
            .collect();
    }
    let payoffs = game.player_payoffs(player);
    let stride = game.stride(player);
    (0..game.num_strategies()).find(|&s| {
        let offset = s * stride;
        bases.iter().all(|&b| payoffs[b + offset] == 1.0)
    })
}

fn first_player_without_winner(game: &Game, support: &SupportSet) -> Option<usize> {
    (0..game.num_players()).find(|&p| universal_winner(game, support, p).is_none())
}

/// `C(kn, t) · n · t^(k-1)`; `t` is capped at `kn`.
pub fn certification_cost(num_players: usize, num_strategies: usize, budget: usize) -> f64 {
    let slots = num_players * num_strategies;
    let t = budget.min(slots);
    binomial(slots, t) * num_strategies as f64 * (t as f64).powi(num_players as i32 - 1)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub support: SupportSet,
    pub player: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertificationResult {
    pub certified: bool,
    pub budget: usize,
    pub num_players: usize,
    /// First support set, in enumeration order, with a player lacking a
    /// universal winner.
    pub witness: Option<Witness>,
    /// Support sets checked, up to and including the witness.
    pub support_sets_examined: u64,
}

impl CertificationResult {
    /// `(k - 1, k)`: when certified, no profile with total support at most the
    /// budget is an ε-equilibrium for ε below `(k-1)/k`.
    pub fn epsilon_floor_ratio(&self) -> (usize, usize) {
        (self.num_players - 1, self.num_players)
    }

    pub fn epsilon_floor(&self) -> f64 {
        1.0 - 1.0 / self.num_players as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CertifyOptions {
    pub work_limit: f64,
    pub exec: Execution,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            work_limit: DEFAULT_WORK_LIMIT,
            exec: Execution::default(),
        }
    }
}

/// Checks the universal-winner property for every support set of total size
/// at most `budget` in a winner-takes-all game.
///
/// The result is independent of the execution policy: batches are scanned in
/// enumeration order and the witness is always the first failing set.
pub fn certify_lower_bound(game: &Game, budget: usize, options: &CertifyOptions) -> Result<CertificationResult> {
    game.check_winner_takes_all()?;
    let k = game.num_players();
    let n = game.num_strategies();
    let estimate = certification_cost(k, n, budget);
    if estimate > options.work_limit {
        return Err(Error::WorkLimitExceeded {
            estimate,
            limit: options.work_limit,
        });
    }
    let mut sets = enumerate_support_sets(k, n, budget)?;
    let mut examined = 0u64;
    loop {
        let batch: Vec<SupportSet> = sets.by_ref().take(BATCH).collect();
        if batch.is_empty() {
            break;
        }
        if let Some(pos) = options
            .exec
            .position_first(&batch, |s| first_player_without_winner(game, s).is_some())
        {
            let support = batch[pos].clone();
            let player = first_player_without_winner(game, &support).expect("found above");
            return Ok(CertificationResult {
                certified: false,
                budget,
                num_players: k,
                witness: Some(Witness { support, player }),
                support_sets_examined: examined + pos as u64 + 1,
            });
        }
        examined += batch.len() as u64;
    }
    Ok(CertificationResult {
        certified: true,
        budget,
        num_players: k,
        witness: None,
        support_sets_examined: examined,
    })
}

fn check_union_domain(num_players: usize, num_strategies: usize, a: f64) -> Result<()> {
    if num_players < 2 || num_strategies < 2 {
        return Err(Error::InvalidParameter(format!(
            "need k ≥ 2 and n ≥ 2, got k={num_players}, n={num_strategies}"
        )));
    }
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::InvalidParameter(format!("exponent a must be positive, got {a}")));
    }
    Ok(())
}

/// `ln (1 - n^(-a))^n`, computed as `n · ln_1p(-n^(-a))`.
pub fn miss_all_ln(num_strategies: usize, a: f64) -> f64 {
    let n = num_strategies as f64;
    n * (-n.powf(-a)).ln_1p()
}

/// Natural log of `k · (kn)^t · (1 - n^(-a))^n` with `t = (a log_k n)^(1/(k-1))`.
pub fn union_bound_ln(num_players: usize, num_strategies: usize, a: f64) -> Result<f64> {
    check_union_domain(num_players, num_strategies, a)?;
    let k = num_players as f64;
    let n = num_strategies as f64;
    let t = (a * n.ln() / k.ln()).powf(1.0 / (k - 1.0));
    Ok(k.ln() + t * (k * n).ln() + miss_all_ln(num_strategies, a))
}

/// Union bound on the probability that a random winner-takes-all game has a
/// support set of total size `(a log_k n)^(1/(k-1))` without universal
/// winners. Underflows to 0 for large `n`; use [`union_bound_ln`] there.
pub fn union_bound(num_players: usize, num_strategies: usize, a: f64) -> Result<f64> {
    union_bound_ln(num_players, num_strategies, a).map(f64::exp)
}

/// `(log_k(n) / 2)^(1/(k-1))`, the total-support size below which random
/// games certify with positive probability for large `n`.
pub fn support_bound_at(num_players: usize, num_strategies: usize) -> Result<f64> {
    check_union_domain(num_players, num_strategies, 1.0)?;
    let k = num_players as f64;
    let log_k_n = (num_strategies as f64).ln() / k.ln();
    Ok((log_k_n / 2.0).powf(1.0 / (k - 1.0)))
}

/// `k^(-t^(k-1))`: chance that a fixed strategy wins against all `t^(k-1)`
/// opposing combinations in a random winner-takes-all game.
pub fn winner_probability(num_players: usize, budget: usize) -> f64 {
    let combos = (budget as f64).powi(num_players as i32 - 1);
    (num_players as f64).powf(-combos)
}

/// `C(kn, t) · k · (1 - k^(-t^(k-1)))^n`, the chance that some support set of
/// total size `t` has a player without a universal winner, capped at 1.
pub fn failure_probability_bound(num_players: usize, num_strategies: usize, budget: usize) -> f64 {
    let q = winner_probability(num_players, budget);
    let log = binomial(num_players * num_strategies, budget).ln()
        + (num_players as f64).ln()
        + num_strategies as f64 * (-q).ln_1p();
    log.exp().min(1.0)
}

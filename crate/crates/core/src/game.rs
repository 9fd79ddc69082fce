//! k-player normal-form games, mixed profiles and exact regret evaluation.
//!
//! Payoffs are stored player-major in one flat vector. Within a player, pure
//! profiles are ordered lexicographically with player 0 as the slowest index,
//! so profile `(s_0, .., s_{k-1})` lives at `Σ s_p · n^(k-1-p)`.
//!
//! All expectations are exact finite sums. Terms whose probability weight is
//! zero are skipped; since every payoff is finite this leaves the running sum
//! bit-identical to the full `n^k` odometer sweep.

use crate::error::{Error, Result};

/// Slack used for probability sums and regret comparisons.
pub const TOLERANCE: f64 = 1e-9;

/// Number of pure profiles `n^k`, or an error if it does not fit in memory indices.
pub fn profile_count(num_players: usize, num_strategies: usize) -> Result<usize> {
    let too_large = Error::TooLarge {
        num_players,
        num_strategies,
    };
    let exp = u32::try_from(num_players).map_err(|_| too_large.clone())?;
    let count = num_strategies.checked_pow(exp).ok_or(too_large.clone())?;
    count.checked_mul(num_players).ok_or(too_large)?;
    Ok(count)
}

/// Checks every structural invariant of a payoff tensor and reports the first
/// one that fails.
pub fn validate_game(num_players: usize, num_strategies: usize, payoffs: &[f64]) -> Result<()> {
    if num_players < 1 {
        return Err(Error::NoPlayers);
    }
    if num_strategies < 1 {
        return Err(Error::NoStrategies);
    }
    let expected = profile_count(num_players, num_strategies)? * num_players;
    if payoffs.len() != expected {
        return Err(Error::TensorSize {
            expected,
            actual: payoffs.len(),
        });
    }
    if let Some((index, &value)) = payoffs
        .iter()
        .enumerate()
        .find(|(_, v)| !(0.0..=1.0).contains(*v))
    {
        return Err(Error::PayoffOutOfRange { index, value });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Game {
    num_players: usize,
    num_strategies: usize,
    num_profiles: usize,
    payoffs: Vec<f64>,
}

impl Game {
    pub fn new(num_players: usize, num_strategies: usize, payoffs: Vec<f64>) -> Result<Self> {
        validate_game(num_players, num_strategies, &payoffs)?;
        Ok(Game {
            num_players,
            num_strategies,
            num_profiles: payoffs.len() / num_players,
            payoffs,
        })
    }

    /// Builds a game by evaluating `f(player, profile)` at every entry.
    pub fn from_fn<F>(num_players: usize, num_strategies: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, &[usize]) -> f64,
    {
        if num_players < 1 {
            return Err(Error::NoPlayers);
        }
        if num_strategies < 1 {
            return Err(Error::NoStrategies);
        }
        let count = profile_count(num_players, num_strategies)?;
        let mut payoffs = Vec::with_capacity(count * num_players);
        let mut choices = vec![0usize; num_players];
        for player in 0..num_players {
            choices.iter_mut().for_each(|c| *c = 0);
            for _ in 0..count {
                payoffs.push(f(player, &choices));
                advance_odometer(&mut choices, num_strategies);
            }
        }
        Game::new(num_players, num_strategies, payoffs)
    }

    pub fn num_players(&self) -> usize {
        self.num_players
    }

    pub fn num_strategies(&self) -> usize {
        self.num_strategies
    }

    /// `n^k`.
    pub fn num_profiles(&self) -> usize {
        self.num_profiles
    }

    /// Flat player-major tensor.
    pub fn payoffs(&self) -> &[f64] {
        &self.payoffs
    }

    pub fn player_payoffs(&self, player: usize) -> &[f64] {
        let start = player * self.num_profiles;
        &self.payoffs[start..start + self.num_profiles]
    }

    /// Payoff to `player` at the pure profile with flat index `profile`.
    pub fn payoff_at(&self, player: usize, profile: usize) -> f64 {
        self.payoffs[player * self.num_profiles + profile]
    }

    pub fn payoff(&self, player: usize, profile: &PureProfile) -> Result<f64> {
        self.check_player(player)?;
        Ok(self.payoff_at(player, self.profile_index(profile.choices())?))
    }

    /// Flat index of a pure profile.
    pub fn profile_index(&self, choices: &[usize]) -> Result<usize> {
        if choices.len() != self.num_players {
            return Err(Error::DimensionMismatch {
                what: "pure profile length",
                expected: self.num_players,
                actual: choices.len(),
            });
        }
        let mut index = 0;
        for &c in choices {
            if c >= self.num_strategies {
                return Err(Error::IndexOutOfRange {
                    what: "strategy",
                    index: c,
                    bound: self.num_strategies,
                });
            }
            index = index * self.num_strategies + c;
        }
        Ok(index)
    }

    pub fn decode_profile(&self, mut index: usize) -> PureProfile {
        let mut choices = vec![0; self.num_players];
        for slot in choices.iter_mut().rev() {
            *slot = index % self.num_strategies;
            index /= self.num_strategies;
        }
        PureProfile(choices)
    }

    /// Distance in the flat index between consecutive strategies of `player`.
    pub fn stride(&self, player: usize) -> usize {
        self.num_strategies.pow((self.num_players - 1 - player) as u32)
    }

    /// The unique player with payoff 1 at `profile` when every other player
    /// gets 0, if there is one.
    pub fn winner_at(&self, profile: usize) -> Option<usize> {
        let mut winner = None;
        for p in 0..self.num_players {
            let u = self.payoff_at(p, profile);
            if u == 1.0 {
                if winner.is_some() {
                    return None;
                }
                winner = Some(p);
            } else if u != 0.0 {
                return None;
            }
        }
        winner
    }

    /// Winner-takes-all: at every pure profile exactly one player gets 1 and
    /// the rest 0. Reports the first offending profile.
    pub fn check_winner_takes_all(&self) -> Result<()> {
        match (0..self.num_profiles).find(|&s| self.winner_at(s).is_none()) {
            Some(profile) => Err(Error::NotWinnerTakesAll { profile }),
            None => Ok(()),
        }
    }

    pub fn is_winner_takes_all(&self) -> bool {
        self.check_winner_takes_all().is_ok()
    }

    pub(crate) fn check_player(&self, player: usize) -> Result<()> {
        if player >= self.num_players {
            return Err(Error::IndexOutOfRange {
                what: "player",
                index: player,
                bound: self.num_players,
            });
        }
        Ok(())
    }

    pub(crate) fn check_strategy(&self, strategy: usize) -> Result<()> {
        if strategy >= self.num_strategies {
            return Err(Error::IndexOutOfRange {
                what: "strategy",
                index: strategy,
                bound: self.num_strategies,
            });
        }
        Ok(())
    }
}

/// Steps `choices` to the next profile in lexicographic order (last entry
/// fastest). Wraps to all zeros after the final profile.
pub(crate) fn advance_odometer(choices: &mut [usize], radix: usize) {
    for c in choices.iter_mut().rev() {
        *c += 1;
        if *c < radix {
            return;
        }
        *c = 0;
    }
}

/// One pure strategy per player.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PureProfile(Vec<usize>);

impl PureProfile {
    pub fn new(choices: Vec<usize>) -> Self {
        PureProfile(choices)
    }

    pub fn choices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A probability vector over one player's pure strategies.
#[derive(Debug, Clone, PartialEq)]
pub struct MixedStrategy {
    probs: Vec<f64>,
}

impl MixedStrategy {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::NoStrategies);
        }
        if let Some((index, &value)) = probs
            .iter()
            .enumerate()
            .find(|(_, p)| !p.is_finite() || **p < 0.0)
        {
            return Err(Error::InvalidProbability { index, value });
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > TOLERANCE {
            return Err(Error::ProbabilitySum { sum });
        }
        Ok(MixedStrategy { probs })
    }

    pub fn pure(num_strategies: usize, strategy: usize) -> Result<Self> {
        if strategy >= num_strategies {
            return Err(Error::IndexOutOfRange {
                what: "strategy",
                index: strategy,
                bound: num_strategies,
            });
        }
        let mut probs = vec![0.0; num_strategies];
        probs[strategy] = 1.0;
        Ok(MixedStrategy { probs })
    }

    pub fn uniform(num_strategies: usize) -> Result<Self> {
        if num_strategies == 0 {
            return Err(Error::NoStrategies);
        }
        Ok(MixedStrategy {
            probs: vec![1.0 / num_strategies as f64; num_strategies],
        })
    }

    /// `first_weight` on `first`, the remainder on `second`. Collapses to a
    /// pure strategy when both indices coincide.
    pub fn two_point(
        num_strategies: usize,
        first: usize,
        first_weight: f64,
        second: usize,
    ) -> Result<Self> {
        if !(0.0..=1.0).contains(&first_weight) {
            return Err(Error::InvalidParameter(format!(
                "mixing weight {first_weight} outside [0, 1]"
            )));
        }
        let mut strategy = Self::pure(num_strategies, first)?;
        if second >= num_strategies {
            return Err(Error::IndexOutOfRange {
                what: "strategy",
                index: second,
                bound: num_strategies,
            });
        }
        if first != second {
            strategy.probs[first] = first_weight;
            strategy.probs[second] = 1.0 - first_weight;
        }
        Ok(strategy)
    }

    /// Uniform distribution over a multiset given by per-strategy counts.
    pub fn empirical(counts: &[usize]) -> Result<Self> {
        let total: usize = counts.iter().sum();
        if total == 0 {
            return Err(Error::InvalidParameter(
                "empirical distribution over an empty multiset".into(),
            ));
        }
        let probs = counts
            .iter()
            .map(|&c| c as f64 / total as f64)
            .collect();
        MixedStrategy::new(probs)
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn prob(&self, strategy: usize) -> f64 {
        self.probs[strategy]
    }

    pub fn num_strategies(&self) -> usize {
        self.probs.len()
    }

    /// Indices with positive probability, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.weighted_support().map(|(j, _)| j).collect()
    }

    pub fn support_size(&self) -> usize {
        self.weighted_support().count()
    }

    fn weighted_support(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.probs
            .iter()
            .copied()
            .enumerate()
            .filter(|&(_, p)| p > 0.0)
    }
}

/// One mixed strategy per player.
#[derive(Debug, Clone, PartialEq)]
pub struct MixedProfile {
    strategies: Vec<MixedStrategy>,
}

impl MixedProfile {
    pub fn new(strategies: Vec<MixedStrategy>) -> Self {
        MixedProfile { strategies }
    }

    pub fn uniform(num_players: usize, num_strategies: usize) -> Result<Self> {
        let s = MixedStrategy::uniform(num_strategies)?;
        Ok(MixedProfile::new(vec![s; num_players]))
    }

    pub fn pure(num_strategies: usize, choices: &[usize]) -> Result<Self> {
        choices
            .iter()
            .map(|&c| MixedStrategy::pure(num_strategies, c))
            .collect::<Result<Vec<_>>>()
            .map(MixedProfile::new)
    }

    pub fn strategies(&self) -> &[MixedStrategy] {
        &self.strategies
    }

    pub fn strategy(&self, player: usize) -> &MixedStrategy {
        &self.strategies[player]
    }

    pub fn num_players(&self) -> usize {
        self.strategies.len()
    }

    /// Sum of the players' support sizes.
    pub fn total_support(&self) -> usize {
        self.strategies.iter().map(MixedStrategy::support_size).sum()
    }

    pub fn max_support(&self) -> usize {
        self.strategies
            .iter()
            .map(MixedStrategy::support_size)
            .max()
            .unwrap_or(0)
    }

    pub fn check_against(&self, game: &Game) -> Result<()> {
        if self.strategies.len() != game.num_players() {
            return Err(Error::DimensionMismatch {
                what: "profile players",
                expected: game.num_players(),
                actual: self.strategies.len(),
            });
        }
        for s in &self.strategies {
            if s.num_strategies() != game.num_strategies() {
                return Err(Error::DimensionMismatch {
                    what: "strategy vector length",
                    expected: game.num_strategies(),
                    actual: s.num_strategies(),
                });
            }
        }
        Ok(())
    }
}

/// Calls `visit(flat_index, weight)` for every pure profile in the product of
/// the supports, in lexicographic order. The coordinate of `skip` (if any) is
/// held at 0 and contributes nothing to the weight.
fn for_each_weighted<F>(game: &Game, profile: &MixedProfile, skip: Option<usize>, mut visit: F)
where
    F: FnMut(usize, f64),
{
    let k = game.num_players();
    let axes: Vec<(usize, Vec<(usize, f64)>)> = (0..k)
        .filter(|&p| Some(p) != skip)
        .map(|p| {
            let support = profile.strategy(p).weighted_support().collect();
            (game.stride(p), support)
        })
        .collect();
    if axes.is_empty() {
        visit(0, 1.0);
        return;
    }
    let mut cursor = vec![0usize; axes.len()];
    loop {
        let mut index = 0;
        let mut weight = 1.0;
        for ((stride, support), &c) in axes.iter().zip(&cursor) {
            let (j, p) = support[c];
            index += j * stride;
            weight *= p;
        }
        visit(index, weight);

        let mut axis = axes.len();
        loop {
            if axis == 0 {
                return;
            }
            axis -= 1;
            cursor[axis] += 1;
            if cursor[axis] < axes[axis].1.len() {
                break;
            }
            cursor[axis] = 0;
        }
    }
}

fn check_inputs(game: &Game, profile: &MixedProfile, player: usize) -> Result<()> {
    profile.check_against(game)?;
    game.check_player(player)
}

/// Exact multilinear expectation of `player`'s payoff under `profile`.
pub fn expected_payoff(game: &Game, profile: &MixedProfile, player: usize) -> Result<f64> {
    check_inputs(game, profile, player)?;
    let payoffs = game.player_payoffs(player);
    let mut sum = 0.0;
    for_each_weighted(game, profile, None, |s, w| sum += w * payoffs[s]);
    Ok(sum)
}

/// Expected payoff when `player` unilaterally plays `pure`; the player's own
/// mixture in `profile` is ignored.
pub fn deviation_payoff(
    game: &Game,
    profile: &MixedProfile,
    player: usize,
    pure: usize,
) -> Result<f64> {
    check_inputs(game, profile, player)?;
    game.check_strategy(pure)?;
    let payoffs = game.player_payoffs(player);
    let offset = pure * game.stride(player);
    let mut sum = 0.0;
    for_each_weighted(game, profile, Some(player), |s, w| {
        sum += w * payoffs[s + offset]
    });
    Ok(sum)
}

/// Deviation payoffs for every pure strategy of `player` in one sweep. Entry
/// `j` is bit-identical to `deviation_payoff(.., j)`.
pub fn deviation_payoffs(game: &Game, profile: &MixedProfile, player: usize) -> Result<Vec<f64>> {
    check_inputs(game, profile, player)?;
    let payoffs = game.player_payoffs(player);
    let stride = game.stride(player);
    let mut sums = vec![0.0; game.num_strategies()];
    for_each_weighted(game, profile, Some(player), |s, w| {
        for (j, acc) in sums.iter_mut().enumerate() {
            *acc += w * payoffs[s + j * stride];
        }
    });
    Ok(sums)
}

/// Pure best response and its value. Ties go to the lowest index.
pub fn best_response(game: &Game, profile: &MixedProfile, player: usize) -> Result<(usize, f64)> {
    let values = deviation_payoffs(game, profile, player)?;
    Ok(argmax_lowest(&values))
}

pub(crate) fn argmax_lowest(values: &[f64]) -> (usize, f64) {
    let mut best = (0, values[0]);
    for (j, &v) in values.iter().enumerate().skip(1) {
        if v > best.1 {
            best = (j, v);
        }
    }
    best
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlayerRegret {
    pub expected_payoff: f64,
    pub best_response: usize,
    pub best_response_value: f64,
    pub regret: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegretReport {
    pub players: Vec<PlayerRegret>,
    /// Largest regret over all players.
    pub epsilon: f64,
}

impl RegretReport {
    /// Whether the profile is an `eps`-Nash equilibrium, with [`TOLERANCE`] slack.
    pub fn is_epsilon_nash(&self, eps: f64) -> bool {
        self.epsilon <= eps + TOLERANCE
    }

    pub fn regrets(&self) -> Vec<f64> {
        self.players.iter().map(|p| p.regret).collect()
    }
}

pub fn regret_report(game: &Game, profile: &MixedProfile) -> Result<RegretReport> {
    profile.check_against(game)?;
    let mut players = Vec::with_capacity(game.num_players());
    for p in 0..game.num_players() {
        let expected = expected_payoff(game, profile, p)?;
        let (best, value) = best_response(game, profile, p)?;
        players.push(PlayerRegret {
            expected_payoff: expected,
            best_response: best,
            best_response_value: value,
            regret: value - expected,
        });
    }
    let epsilon = players
        .iter()
        .map(|p| p.regret)
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(RegretReport { players, epsilon })
}

/// The (k-1)-player game left after fixing `player` to `pure`. The fixed
/// player's payoffs are dropped; the others keep their relative order.
pub fn restrict_game(game: &Game, player: usize, pure: usize) -> Result<Game> {
    let k = game.num_players();
    if k < 2 {
        return Err(Error::TooFewPlayers {
            required: 2,
            actual: k,
        });
    }
    game.check_player(player)?;
    game.check_strategy(pure)?;
    let n = game.num_strategies();
    let remaining: Vec<usize> = (0..k).filter(|&p| p != player).collect();
    Game::from_fn(k - 1, n, |q, sub| {
        let mut full = Vec::with_capacity(k);
        full.extend_from_slice(&sub[..player]);
        full.push(pure);
        full.extend_from_slice(&sub[player..]);
        let index = full.iter().fold(0, |acc, &c| acc * n + c);
        game.payoff_at(remaining[q], index)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn constant(k: usize, n: usize, v: f64) -> Game {
        Game::from_fn(k, n, |_, _| v).unwrap()
    }

    fn pennies() -> Game {
        Game::from_fn(2, 2, |p, s| {
            let matched = s[0] == s[1];
            if (p == 0) == matched {
                1.0
            } else {
                0.0
            }
        })
        .unwrap()
    }

    #[test]
    fn validation_outcomes() {
        assert!(validate_game(2, 2, &[0.5; 8]).is_ok());
        let mut bad = vec![0.5; 8];
        bad[3] = 1.5;
        assert_eq!(
            validate_game(2, 2, &bad),
            Err(Error::PayoffOutOfRange {
                index: 3,
                value: 1.5
            })
        );
        assert_eq!(
            validate_game(3, 2, &[0.0; 23]),
            Err(Error::TensorSize {
                expected: 24,
                actual: 23
            })
        );
        assert_eq!(validate_game(0, 2, &[]), Err(Error::NoPlayers));
        assert_eq!(validate_game(2, 0, &[]), Err(Error::NoStrategies));
        assert!(matches!(
            validate_game(2, 2, &[f64::NAN; 8]),
            Err(Error::PayoffOutOfRange { index: 0, .. })
        ));
        assert!(matches!(
            profile_count(64, 1 << 20),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn indexing_is_lexicographic_player_zero_slowest() {
        let g = constant(3, 4, 0.0);
        assert_eq!(g.profile_index(&[1, 2, 3]).unwrap(), 16 + 8 + 3);
        assert_eq!(g.decode_profile(27).choices(), &[1, 2, 3]);
        assert_eq!(g.stride(0), 16);
        assert_eq!(g.stride(2), 1);
        assert!(g.profile_index(&[0, 4, 0]).is_err());
        assert!(g.profile_index(&[0, 0]).is_err());
    }

    #[test]
    fn mixed_strategy_validation() {
        assert!(MixedStrategy::new(vec![0.5, 0.5]).is_ok());
        assert!(MixedStrategy::new(vec![0.5, 0.5 + 1e-10]).is_ok());
        assert!(matches!(
            MixedStrategy::new(vec![0.5, 0.6]),
            Err(Error::ProbabilitySum { .. })
        ));
        assert!(matches!(
            MixedStrategy::new(vec![1.5, -0.5]),
            Err(Error::InvalidProbability { index: 1, .. })
        ));
        let s = MixedStrategy::two_point(4, 2, 0.75, 0).unwrap();
        assert_eq!(s.support(), vec![0, 2]);
        assert_eq!(s.probs(), &[0.25, 0.0, 0.75, 0.0]);
        let collapsed = MixedStrategy::two_point(4, 1, 0.75, 1).unwrap();
        assert_eq!(collapsed.support_size(), 1);
        assert_eq!(collapsed.prob(1), 1.0);
        let e = MixedStrategy::empirical(&[3, 0, 1]).unwrap();
        assert_eq!(e.probs(), &[0.75, 0.0, 0.25]);
    }

    #[test]
    fn constant_game_values() {
        let g = constant(3, 3, 0.7);
        let prof = MixedProfile::new(vec![
            MixedStrategy::new(vec![0.2, 0.3, 0.5]).unwrap(),
            MixedStrategy::uniform(3).unwrap(),
            MixedStrategy::pure(3, 2).unwrap(),
        ]);
        for p in 0..3 {
            assert!((expected_payoff(&g, &prof, p).unwrap() - 0.7).abs() < 1e-12);
            for j in 0..3 {
                assert!((deviation_payoff(&g, &prof, p, j).unwrap() - 0.7).abs() < 1e-12);
            }
        }
        let (j, v) = best_response(&g, &prof, 1).unwrap();
        assert_eq!(j, 0);
        assert!((v - 0.7).abs() < 1e-12);
    }

    #[test]
    fn unique_maximizer_is_found() {
        let g = Game::from_fn(2, 5, |p, s| if p == 0 && s[0] == 3 { 1.0 } else { 0.0 }).unwrap();
        let prof = MixedProfile::uniform(2, 5).unwrap();
        assert_eq!(best_response(&g, &prof, 0).unwrap(), (3, 1.0));
    }

    #[test]
    fn matching_pennies_values() {
        let g = pennies();
        let uniform = MixedProfile::uniform(2, 2).unwrap();
        assert_eq!(expected_payoff(&g, &uniform, 0).unwrap(), 0.5);
        assert_eq!(deviation_payoff(&g, &uniform, 1, 0).unwrap(), 0.5);
        assert_eq!(deviation_payoff(&g, &uniform, 1, 1).unwrap(), 0.5);
        let vs_heads = MixedProfile::pure(2, &[0, 0]).unwrap();
        assert_eq!(best_response(&g, &vs_heads, 1).unwrap(), (1, 1.0));

        let staircase_like = MixedProfile::new(vec![
            MixedStrategy::uniform(2).unwrap(),
            MixedStrategy::pure(2, 1).unwrap(),
        ]);
        let report = regret_report(&g, &staircase_like).unwrap();
        assert_eq!(report.regrets(), vec![0.5, 0.0]);
        assert_eq!(report.epsilon, 0.5);
        assert!(report.is_epsilon_nash(0.5));
        assert!(!report.is_epsilon_nash(0.49));
    }

    #[test]
    fn dimension_errors() {
        let g = pennies();
        let wrong = MixedProfile::uniform(3, 2).unwrap();
        assert!(matches!(
            expected_payoff(&g, &wrong, 0),
            Err(Error::DimensionMismatch { .. })
        ));
        let uniform = MixedProfile::uniform(2, 2).unwrap();
        assert!(matches!(
            deviation_payoff(&g, &uniform, 2, 0),
            Err(Error::IndexOutOfRange { what: "player", .. })
        ));
        assert!(matches!(
            deviation_payoff(&g, &uniform, 0, 2),
            Err(Error::IndexOutOfRange { what: "strategy", .. })
        ));
        let short = MixedProfile::uniform(2, 3).unwrap();
        assert!(regret_report(&g, &short).is_err());
    }

    #[test]
    fn single_player_game() {
        let g = Game::new(1, 3, vec![0.2, 0.9, 0.4]).unwrap();
        let prof = MixedProfile::uniform(1, 3).unwrap();
        let report = regret_report(&g, &prof).unwrap();
        assert!((report.epsilon - (0.9 - 0.5)).abs() < 1e-12);
        assert_eq!(report.players[0].best_response, 1);
        assert!(matches!(
            restrict_game(&g, 0, 0),
            Err(Error::TooFewPlayers { .. })
        ));
    }

    #[test]
    fn restriction_slices_tensor() {
        let g = constant(3, 2, 0.7);
        for p in 0..3 {
            let r = restrict_game(&g, p, 1).unwrap();
            assert_eq!(r.num_players(), 2);
            assert!(r.payoffs().iter().all(|&u| u == 0.7));
        }
        // Entry (q, s) of the restriction equals the original with the middle
        // player's coordinate pinned.
        let g = Game::from_fn(3, 3, |p, s| ((p * 27 + s[0] * 9 + s[1] * 3 + s[2]) as f64) / 81.0)
            .unwrap();
        let r = restrict_game(&g, 1, 2).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                let full = g.profile_index(&[a, 2, b]).unwrap();
                let sub = r.profile_index(&[a, b]).unwrap();
                assert_eq!(r.payoff_at(0, sub), g.payoff_at(0, full));
                assert_eq!(r.payoff_at(1, sub), g.payoff_at(2, full));
            }
        }
        assert!(restrict_game(&g, 3, 0).is_err());
        assert!(restrict_game(&g, 0, 3).is_err());
    }

    #[test]
    fn winner_detection() {
        assert!(pennies().is_winner_takes_all());
        let g = constant(2, 2, 0.0);
        assert_eq!(
            g.check_winner_takes_all(),
            Err(Error::NotWinnerTakesAll { profile: 0 })
        );
        assert!(!constant(2, 2, 1.0).is_winner_takes_all());
    }
}

//! Constant-support and recursive approximation algorithms.
//!
//! [`staircase`] builds a `(1 - 1/k)`-approximate equilibrium in which every
//! player mixes at most two pure strategies. [`recursive_lift`] turns any
//! 2-player solver with guarantee `ε` into a k-player solver with guarantee
//! [`delta_bound`]`(k, ε)` by anchoring player 0 and recursing on the rest.

use crate::error::{Error, Result};
use crate::game::{best_response, restrict_game, Game, MixedProfile, MixedStrategy};

/// A 2-player approximation algorithm with a promised worst-case regret.
pub trait TwoPlayerSolver {
    /// Upper bound on the epsilon of every profile `solve` returns.
    fn guarantee(&self) -> f64;

    fn solve(&self, game: &Game) -> Result<MixedProfile>;
}

/// The k=2 staircase: player 0 puts 1/2 on an anchor and 1/2 on a best
/// response to the opponent, who best-responds to the anchor.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DmpSolver {
    pub anchor: usize,
}

impl TwoPlayerSolver for DmpSolver {
    fn guarantee(&self) -> f64 {
        0.5
    }

    fn solve(&self, game: &Game) -> Result<MixedProfile> {
        if game.num_players() != 2 {
            return Err(Error::DimensionMismatch {
                what: "two-player solver players",
                expected: 2,
                actual: game.num_players(),
            });
        }
        staircase(game, Some(&[self.anchor])).map(|(profile, _)| profile)
    }
}

pub fn dmp_two_player() -> DmpSolver {
    DmpSolver::default()
}

/// Wraps a solver and advertises a weaker (larger) guarantee than its own.
/// A promise of at most `guarantee` is still honored by any solver that does
/// at least as well.
#[derive(Debug, Clone, Copy)]
pub struct Relaxed<S> {
    inner: S,
    guarantee: f64,
}

impl<S: TwoPlayerSolver> Relaxed<S> {
    pub fn new(inner: S, guarantee: f64) -> Result<Self> {
        if !(guarantee <= 1.0 && guarantee >= inner.guarantee()) {
            return Err(Error::InvalidParameter(format!(
                "declared guarantee {guarantee} must lie in [{}, 1]",
                inner.guarantee()
            )));
        }
        Ok(Relaxed { inner, guarantee })
    }
}

impl<S: TwoPlayerSolver> TwoPlayerSolver for Relaxed<S> {
    fn guarantee(&self) -> f64 {
        self.guarantee
    }

    fn solve(&self, game: &Game) -> Result<MixedProfile> {
        self.inner.solve(game)
    }
}

/// Anchors, best responses and weights chosen by one staircase run.
#[derive(Debug, Clone, PartialEq)]
pub struct SolverTrace {
    /// `s_i` for players `0..k-1`.
    pub anchors: Vec<usize>,
    /// `b_i` for all `k` players; the last entry is the pure best response to
    /// the anchors.
    pub responses: Vec<usize>,
    /// Weight on the anchor, `1 - 1/(k - i)` for player `i`; 0 for the last player.
    pub anchor_weights: Vec<f64>,
    /// Weight on the best response, `1/(k - i)`; 1 for the last player.
    pub response_weights: Vec<f64>,
}

impl SolverTrace {
    pub fn num_players(&self) -> usize {
        self.responses.len()
    }

    /// Player `i`'s final mixture `r_i` over `num_strategies` strategies.
    pub fn mixture(&self, player: usize, num_strategies: usize) -> Result<MixedStrategy> {
        match self.anchors.get(player) {
            Some(&anchor) => MixedStrategy::two_point(
                num_strategies,
                anchor,
                self.anchor_weights[player],
                self.responses[player],
            ),
            None => MixedStrategy::pure(num_strategies, self.responses[player]),
        }
    }
}

/// Weights `(anchor, response)` used by player `i` of `k` in the staircase.
pub fn staircase_weights(num_players: usize, player: usize) -> (f64, f64) {
    let response = 1.0 / (num_players - player) as f64;
    (1.0 - response, response)
}

/// Support-2 staircase construction.
///
/// Players `0..k-1` put `1 - 1/(k-i)` on their anchor. The last player plays a
/// pure best response to the anchors. Then, for `i = k-2` down to `0`, player
/// `i` puts the remaining `1/(k-i)` on a best response to the anchors of the
/// players before it and the finished mixtures of the players after it.
/// Anchors default to strategy 0.
pub fn staircase(game: &Game, anchors: Option<&[usize]>) -> Result<(MixedProfile, SolverTrace)> {
    let k = game.num_players();
    let n = game.num_strategies();
    if k < 2 {
        return Err(Error::TooFewPlayers {
            required: 2,
            actual: k,
        });
    }
    let anchors = match anchors {
        Some(a) => {
            if a.len() != k - 1 {
                return Err(Error::DimensionMismatch {
                    what: "staircase anchors",
                    expected: k - 1,
                    actual: a.len(),
                });
            }
            for &s in a {
                game.check_strategy(s)?;
            }
            a.to_vec()
        }
        None => vec![0; k - 1],
    };

    let (anchor_weights, response_weights): (Vec<f64>, Vec<f64>) =
        (0..k).map(|i| staircase_weights(k, i)).unzip();

    // Working profile: players before the one being solved hold their anchor,
    // players after it hold their finished mixture.
    let mut working: Vec<MixedStrategy> = anchors
        .iter()
        .map(|&s| MixedStrategy::pure(n, s))
        .collect::<Result<_>>()?;
    working.push(MixedStrategy::pure(n, 0)?);

    let mut responses = vec![0; k];
    let (last, _) = best_response(game, &MixedProfile::new(working.clone()), k - 1)?;
    responses[k - 1] = last;
    working[k - 1] = MixedStrategy::pure(n, last)?;

    for i in (0..k - 1).rev() {
        let (b, _) = best_response(game, &MixedProfile::new(working.clone()), i)?;
        responses[i] = b;
        working[i] = MixedStrategy::two_point(n, anchors[i], anchor_weights[i], b)?;
    }

    let trace = SolverTrace {
        anchors,
        responses,
        anchor_weights,
        response_weights,
    };
    Ok((MixedProfile::new(working), trace))
}

/// Guarantee of the k-player lift of a 2-player `eps`-solver:
/// `((k-2) - (k-3)ε) / ((k-1) - (k-2)ε)`.
pub fn delta_bound(num_players: usize, eps: f64) -> Result<f64> {
    if num_players < 2 {
        return Err(Error::InvalidParameter(format!(
            "delta bound needs at least 2 players, got {num_players}"
        )));
    }
    if !(0.0..=1.0).contains(&eps) {
        return Err(Error::InvalidParameter(format!(
            "base guarantee {eps} outside [0, 1]"
        )));
    }
    let k = num_players as f64;
    Ok(((k - 2.0) - (k - 3.0) * eps) / ((k - 1.0) - (k - 2.0) * eps))
}

/// Lift guarantee for three players on top of the best 2-player guarantee
/// (0.3393) known for polynomial-time algorithms. That base solver is not
/// implemented here; this only evaluates the bound.
pub fn three_player_guarantee() -> f64 {
    delta_bound(3, 0.3393).expect("constant arguments are in range")
}

/// Recursive lift with anchor strategy 0 at every level.
pub fn recursive_lift(game: &Game, base: &dyn TwoPlayerSolver) -> Result<MixedProfile> {
    recursive_lift_anchored(game, base, 0)
}

/// Recursive lift. Player 0 puts `1/(2 - δ_{k-1})` on `anchor`, the other
/// players solve the game restricted to that anchor recursively, and player 0
/// puts the rest on a best response to their solution.
pub fn recursive_lift_anchored(
    game: &Game,
    base: &dyn TwoPlayerSolver,
    anchor: usize,
) -> Result<MixedProfile> {
    let k = game.num_players();
    if k < 2 {
        return Err(Error::TooFewPlayers {
            required: 2,
            actual: k,
        });
    }
    game.check_strategy(anchor)?;
    if k == 2 {
        return base.solve(game);
    }
    let n = game.num_strategies();
    let inner_guarantee = delta_bound(k - 1, base.guarantee())?;
    let anchor_weight = 1.0 / (2.0 - inner_guarantee);

    let restricted = restrict_game(game, 0, anchor)?;
    let rest = recursive_lift_anchored(&restricted, base, anchor)?;
    if rest.num_players() != k - 1 {
        return Err(Error::DimensionMismatch {
            what: "sub-solver profile players",
            expected: k - 1,
            actual: rest.num_players(),
        });
    }

    let mut strategies = Vec::with_capacity(k);
    strategies.push(MixedStrategy::pure(n, anchor)?);
    strategies.extend(rest.strategies().iter().cloned());
    let (response, _) = best_response(game, &MixedProfile::new(strategies.clone()), 0)?;
    strategies[0] = MixedStrategy::two_point(n, anchor, anchor_weight, response)?;
    Ok(MixedProfile::new(strategies))
}

//! Batch evaluation of the solvers over seeded game corpora.

use serde::Serialize;

use crate::error::Result;
use crate::exec::Execution;
use crate::game::{regret_report, Game};
use crate::generators::{gen_uniform_payoffs, gen_wta, Seed};
use crate::solvers::{delta_bound, recursive_lift, staircase, TwoPlayerSolver};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GameKind {
    WinnerTakesAll,
    UniformPayoffs,
}

impl GameKind {
    pub fn generate(self, num_players: usize, num_strategies: usize, seed: Seed) -> Result<Game> {
        match self {
            GameKind::WinnerTakesAll => gen_wta(num_players, num_strategies, seed),
            GameKind::UniformPayoffs => gen_uniform_payoffs(num_players, num_strategies, seed),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CorpusCase {
    pub kind: GameKind,
    pub num_players: usize,
    pub num_strategies: usize,
    pub seed: u64,
}

/// Every combination of kind, player count, strategy count and seed, in that
/// nesting order.
pub fn corpus(
    player_counts: &[usize],
    strategy_counts: &[usize],
    seeds: std::ops::Range<u64>,
) -> Vec<CorpusCase> {
    let mut cases = Vec::new();
    for kind in [GameKind::WinnerTakesAll, GameKind::UniformPayoffs] {
        for &num_players in player_counts {
            for &num_strategies in strategy_counts {
                for seed in seeds.clone() {
                    cases.push(CorpusCase {
                        kind,
                        num_players,
                        num_strategies,
                        seed,
                    });
                }
            }
        }
    }
    cases
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub case: CorpusCase,
    pub epsilon: f64,
    pub bound: f64,
    pub max_support: usize,
    pub total_support: usize,
}

impl SweepRow {
    pub fn within_bound(&self) -> bool {
        self.epsilon <= self.bound + crate::game::TOLERANCE
    }
}

/// Staircase with default anchors on every case, bound `1 - 1/k`.
pub fn staircase_sweep(cases: &[CorpusCase], exec: Execution) -> Result<Vec<SweepRow>> {
    exec.map(cases, |case| {
        let game = case.kind.generate(case.num_players, case.num_strategies, Seed(case.seed))?;
        let (profile, _) = staircase(&game, None)?;
        let report = regret_report(&game, &profile)?;
        Ok(SweepRow {
            case: *case,
            epsilon: report.epsilon,
            bound: 1.0 - 1.0 / case.num_players as f64,
            max_support: profile.max_support(),
            total_support: profile.total_support(),
        })
    })
    .into_iter()
    .collect()
}

/// Recursive lift over `base` on every case, bound `δ_k(base guarantee)`.
pub fn lift_sweep<S>(cases: &[CorpusCase], base: &S, exec: Execution) -> Result<Vec<SweepRow>>
where
    S: TwoPlayerSolver + Sync,
{
    exec.map(cases, |case| {
        let game = case.kind.generate(case.num_players, case.num_strategies, Seed(case.seed))?;
        let profile = recursive_lift(&game, base)?;
        let report = regret_report(&game, &profile)?;
        Ok(SweepRow {
            case: *case,
            epsilon: report.epsilon,
            bound: delta_bound(case.num_players, base.guarantee())?,
            max_support: profile.max_support(),
            total_support: profile.total_support(),
        })
    })
    .into_iter()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::dmp_two_player;

    #[test]
    fn corpus_shape() {
        let cases = corpus(&[2, 3], &[2, 4, 6], 0..5);
        assert_eq!(cases.len(), 2 * 2 * 3 * 5);
        assert_eq!(cases[0].kind, GameKind::WinnerTakesAll);
        assert_eq!(cases.last().unwrap().kind, GameKind::UniformPayoffs);
    }

    #[test]
    fn sweeps_agree_across_policies() {
        let cases = corpus(&[2, 3, 4], &[2, 3], 0..4);
        let seq = staircase_sweep(&cases, Execution::Sequential).unwrap();
        let par = staircase_sweep(&cases, Execution::Parallel).unwrap();
        assert_eq!(seq, par);
        assert!(seq.iter().all(SweepRow::within_bound));
        let lifted = lift_sweep(&cases, &dmp_two_player(), Execution::Parallel).unwrap();
        assert!(lifted.iter().all(SweepRow::within_bound));
    }
}

//! Approximate Nash equilibria for k-player normal-form games.
//!
//! - [`game`]: payoff tensors, mixed profiles, exact expected payoffs,
//!   best responses and regret reports.
//! - [`generators`]: seeded winner-takes-all and uniform-payoff games, plus
//!   fixtures with known exact equilibria.
//! - [`solvers`]: the support-2 staircase algorithm with its `1 - 1/k`
//!   guarantee and the recursive lift of a 2-player solver.
//! - [`sampling`]: sampled support reduction to logarithmic support.
//! - [`lower_bound`]: certification that no constant-support profile beats
//!   `1 - 1/k` on a given winner-takes-all game.
//! - [`format`]: the text game file format.
//!
//! Batch operations take an [`Execution`] policy; with the default `parallel`
//! feature they fan out over rayon and otherwise run sequentially.

pub mod error;
pub mod exec;
pub mod format;
pub mod game;
pub mod generators;
pub mod lower_bound;
pub mod sampling;
pub mod solvers;
pub mod sweep;

pub use error::{Error, Result};
pub use exec::Execution;
pub use game::{
    best_response, deviation_payoff, deviation_payoffs, expected_payoff, regret_report,
    restrict_game, validate_game, Game, MixedProfile, MixedStrategy, PlayerRegret, PureProfile,
    RegretReport, TOLERANCE,
};
pub use generators::{
    fixture_matching_pennies, fixture_parity, gen_uniform_payoffs, gen_wta, Seed,
};
pub use lower_bound::{
    certify_lower_bound, enumerate_support_sets, union_bound, support_bound_at,
    universal_winner_check, CertificationResult, CertifyOptions, SupportSet,
};
pub use sampling::{
    concentration_check, required_samples, sample_support, ConcentrationReport, SampleBatch,
};
pub use solvers::{
    delta_bound, dmp_two_player, recursive_lift, staircase, three_player_guarantee, DmpSolver,
    SolverTrace, TwoPlayerSolver,
};

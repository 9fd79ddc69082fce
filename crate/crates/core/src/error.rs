use thiserror::Error;

/// Errors raised by game construction, evaluation and the solvers built on top.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("a game needs at least one player")]
    NoPlayers,

    #[error("every player needs at least one pure strategy")]
    NoStrategies,

    #[error("game with {num_players} players and {num_strategies} strategies is too large to index")]
    TooLarge {
        num_players: usize,
        num_strategies: usize,
    },

    #[error("payoff tensor has {actual} entries, expected {expected}")]
    TensorSize { expected: usize, actual: usize },

    #[error("payoff {value} at flat index {index} lies outside [0, 1]")]
    PayoffOutOfRange { index: usize, value: f64 },

    #[error("probability {value} at index {index} is negative or not finite")]
    InvalidProbability { index: usize, value: f64 },

    #[error("probabilities sum to {sum}, expected 1")]
    ProbabilitySum { sum: f64 },

    #[error("{what}: expected {expected}, got {actual}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        actual: usize,
    },

    #[error("{what} index {index} out of range (must be below {bound})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        bound: usize,
    },

    #[error("operation needs at least {required} players, game has {actual}")]
    TooFewPlayers { required: usize, actual: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("game is not winner-takes-all (pure profile {profile})")]
    NotWinnerTakesAll { profile: usize },

    #[error("estimated work {estimate:.3e} exceeds the limit {limit:.3e}")]
    WorkLimitExceeded { estimate: f64, limit: f64 },

    #[error("unsupported game file version {0}")]
    UnsupportedVersion(u32),

    #[error("malformed game document: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

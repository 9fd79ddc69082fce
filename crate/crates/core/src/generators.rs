//! Seeded random games and fixture games with known exact equilibria.
//!
//! Every random stream is a ChaCha8 generator keyed by the seed, the game
//! dimensions and a per-purpose domain tag, so distinct generators never share
//! a stream and identical arguments always give bit-identical tensors.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{profile_count, Game};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Seed(pub u64);

impl From<u64> for Seed {
    fn from(value: u64) -> Self {
        Seed(value)
    }
}

/// Purpose tags keeping the generator streams disjoint.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Stream {
    WinnerTakesAll = 1,
    UniformPayoffs = 2,
    Sampling = 3,
}

/// Deterministic 64-bit stream for one purpose.
#[derive(Debug, Clone)]
pub struct SeededStream {
    rng: ChaCha8Rng,
}

impl SeededStream {
    pub(crate) fn new(stream: Stream, seed: Seed, a: u64, b: u64) -> Self {
        let mut key = [0u8; 32];
        for (chunk, word) in key
            .chunks_exact_mut(8)
            .zip([seed.0, a, b, stream as u64])
        {
            chunk.copy_from_slice(&word.to_le_bytes());
        }
        SeededStream {
            rng: ChaCha8Rng::from_seed(key),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform integer in `0..bound` by rejection, free of modulo bias.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        // 2^64 mod bound; draws under it would over-weight small residues.
        let reject = bound.wrapping_neg() % bound;
        loop {
            let x = self.next_u64();
            if x >= reject {
                return x % bound;
            }
        }
    }

    /// Uniform dyadic rational in `[0, 1)` with 53 random bits.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Random winner-takes-all game: at each pure profile, in lexicographic order,
/// one player drawn uniformly gets 1 and everyone else 0.
pub fn gen_wta(num_players: usize, num_strategies: usize, seed: Seed) -> Result<Game> {
    if num_players < 2 {
        return Err(Error::TooFewPlayers {
            required: 2,
            actual: num_players,
        });
    }
    if num_strategies < 1 {
        return Err(Error::NoStrategies);
    }
    let count = profile_count(num_players, num_strategies)?;
    let mut stream = SeededStream::new(
        Stream::WinnerTakesAll,
        seed,
        num_players as u64,
        num_strategies as u64,
    );
    let mut payoffs = vec![0.0; count * num_players];
    for profile in 0..count {
        let winner = stream.below(num_players as u64) as usize;
        payoffs[winner * count + profile] = 1.0;
    }
    Game::new(num_players, num_strategies, payoffs)
}

/// Every entry independently uniform on `[0, 1)`, drawn player-major.
pub fn gen_uniform_payoffs(num_players: usize, num_strategies: usize, seed: Seed) -> Result<Game> {
    if num_players < 1 {
        return Err(Error::NoPlayers);
    }
    if num_strategies < 1 {
        return Err(Error::NoStrategies);
    }
    let count = profile_count(num_players, num_strategies)?;
    let mut stream = SeededStream::new(
        Stream::UniformPayoffs,
        seed,
        num_players as u64,
        num_strategies as u64,
    );
    let payoffs = (0..count * num_players).map(|_| stream.unit()).collect();
    Game::new(num_players, num_strategies, payoffs)
}

/// Two players, two strategies: player 0 wins on a match, player 1 on a
/// mismatch. Uniform against uniform is the unique equilibrium.
pub fn fixture_matching_pennies() -> Game {
    Game::from_fn(2, 2, |p, s| {
        let matched = s[0] == s[1];
        if (p == 0) == matched {
            1.0
        } else {
            0.0
        }
    })
    .expect("fixture is valid")
}

/// Common-payoff game on two strategies: everyone gets 1 iff the XOR of all
/// choices is 0. The all-uniform profile is an exact equilibrium.
pub fn fixture_parity(num_players: usize) -> Result<Game> {
    if num_players < 2 {
        return Err(Error::TooFewPlayers {
            required: 2,
            actual: num_players,
        });
    }
    Game::from_fn(num_players, 2, |_, s| {
        if s.iter().fold(0, |acc, c| acc ^ c) == 0 {
            1.0
        } else {
            0.0
        }
    })
}

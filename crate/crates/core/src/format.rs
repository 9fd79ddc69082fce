//! Text serialization of games.
//!
//! A game document is a JSON object with `version` (always 1),
//! `num_players`, `num_strategies` and a flat `payoffs` array of `k · n^k`
//! numbers in the in-memory layout: player-major, and within a player the pure
//! profiles in lexicographic order with player 0 slowest. Numbers are written
//! in shortest round-trip form, so every `f64` parses back bit-identically.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::game::Game;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GameDocument {
    version: u32,
    num_players: usize,
    num_strategies: usize,
    payoffs: Vec<f64>,
}

pub fn game_to_string(game: &Game) -> String {
    let doc = GameDocument {
        version: FORMAT_VERSION,
        num_players: game.num_players(),
        num_strategies: game.num_strategies(),
        payoffs: game.payoffs().to_vec(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    text.push('\n');
    text
}

pub fn game_from_str(text: &str) -> Result<Game> {
    let doc: GameDocument =
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    if doc.version != FORMAT_VERSION {
        return Err(Error::UnsupportedVersion(doc.version));
    }
    Game::new(doc.num_players, doc.num_strategies, doc.payoffs)
}

/// SHA-256 over the dimensions and the payoff bit patterns, as lowercase hex.
pub fn payoff_checksum(game: &Game) -> String {
    let mut hasher = Sha256::new();
    hasher.update((game.num_players() as u64).to_le_bytes());
    hasher.update((game.num_strategies() as u64).to_le_bytes());
    for u in game.payoffs() {
        hasher.update(u.to_bits().to_le_bytes());
    }
    format!("{:x}", hasher.finalize())
}

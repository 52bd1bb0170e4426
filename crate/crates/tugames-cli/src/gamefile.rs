//! The JSON game-file format.
//!
//! ```json
//! {
//!   "players": ["1", "2", "3"],
//!   "coalitions": { "1": 80, "1,2": 100, "1,2,3": 120 },
//!   "partition": [["1"], ["2", "3"]],
//!   "kind": "cost"
//! }
//! ```
//!
//! Coalition keys are comma-joined player labels, order-insensitive;
//! coalitions that are not listed are worth 0. `partition` and `kind` are
//! optional; `kind` ("cost" or "benefit") only affects table captions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use tugames::{CSGame, Coalition, Game, GameError, Partition};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GameFile {
    pub players: Vec<String>,
    pub coalitions: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
}

/// A parsed game file: plain, or with a coalition structure attached.
pub enum Loaded {
    Plain(Game),
    WithPartition(CSGame),
}

impl Loaded {
    pub fn game(&self) -> &Game {
        match self {
            Loaded::Plain(g) => g,
            Loaded::WithPartition(csg) => csg.game(),
        }
    }

    pub fn partition(&self) -> Option<&Partition> {
        match self {
            Loaded::Plain(_) => None,
            Loaded::WithPartition(csg) => Some(csg.partition()),
        }
    }
}

#[derive(Debug, Error)]
pub enum FileError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("player list is empty")]
    NoPlayers,
    #[error("player label {0:?} is empty or contains a comma")]
    BadLabel(String),
    #[error("duplicate player label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown label {0:?} in {1}")]
    UnknownLabel(String, &'static str),
    #[error("label {0:?} repeated within coalition key {1:?}")]
    RepeatedLabel(String, String),
    #[error("coalition keys {0:?} and {1:?} name the same player set")]
    DuplicateCoalitionKey(String, String),
    #[error("kind must be \"cost\" or \"benefit\", got {0:?}")]
    BadKind(String),
    #[error(transparent)]
    Game(#[from] GameError),
}

pub fn parse_game_file(text: &str) -> Result<(Loaded, Option<String>), FileError> {
    let file: GameFile = serde_json::from_str(text)?;
    let n = file.players.len();
    if n == 0 {
        return Err(FileError::NoPlayers);
    }
    let mut index = BTreeMap::new();
    for (i, label) in file.players.iter().enumerate() {
        if label.is_empty() || label.contains(',') {
            return Err(FileError::BadLabel(label.clone()));
        }
        if index.insert(label.as_str(), i).is_some() {
            return Err(FileError::DuplicateLabel(label.clone()));
        }
    }
    if let Some(kind) = &file.kind {
        if kind != "cost" && kind != "benefit" {
            return Err(FileError::BadKind(kind.clone()));
        }
    }

    let mut seen: BTreeMap<u64, String> = BTreeMap::new();
    let mut entries = Vec::with_capacity(file.coalitions.len());
    for (key, worth) in &file.coalitions {
        let mut mask = Coalition::EMPTY;
        for label in key.split(',') {
            let label = label.trim();
            let i = *index
                .get(label)
                .ok_or_else(|| FileError::UnknownLabel(label.to_string(), "coalitions"))?;
            if mask.contains(i) {
                return Err(FileError::RepeatedLabel(label.to_string(), key.clone()));
            }
            mask = mask.with(i);
        }
        if let Some(first) = seen.insert(mask.mask(), key.clone()) {
            return Err(FileError::DuplicateCoalitionKey(first, key.clone()));
        }
        entries.push((mask, *worth));
    }
    let game = Game::from_entries(n, entries)?.with_labels(file.players.clone())?;

    let loaded = match &file.partition {
        None => Loaded::Plain(game),
        Some(groups) => {
            let mut unions = Vec::with_capacity(groups.len());
            for group in groups {
                let mut mask = Coalition::EMPTY;
                for label in group {
                    let i = *index
                        .get(label.as_str())
                        .ok_or_else(|| FileError::UnknownLabel(label.clone(), "partition"))?;
                    mask = mask.with(i);
                }
                unions.push(mask);
            }
            Loaded::WithPartition(CSGame::new(game, Partition::new(n, unions)?)?)
        }
    };
    Ok((loaded, file.kind))
}

/// Serializes a game back into the file format, listing nonzero coalitions
/// only.
pub fn to_game_file(game: &Game) -> GameFile {
    let mut coalitions = BTreeMap::new();
    for c in game.grand().subsets() {
        let worth = game.worth(c);
        if worth != 0.0 {
            let key = c
                .players()
                .map(|i| game.labels()[i].as_str())
                .collect::<Vec<_>>()
                .join(",");
            coalitions.insert(key, worth);
        }
    }
    GameFile {
        players: game.labels().to_vec(),
        coalitions,
        partition: None,
        kind: None,
    }
}

//! Deterministic random game and partition generators for audits.

use crate::coalition::Coalition;
use crate::game::Game;
use crate::partition::{CSGame, Partition};
use crate::GameError;

/// A splitmix64 generator: state advances by the golden-ratio increment
/// `0x9E3779B97F4A7C15` and each output is the finalizer
/// `z ^= z>>30, z *= 0xBF58476D1CE4E5B9, z ^= z>>27, z *= 0x94D049BB133111EB,
/// z ^= z>>31` applied to the new state. Pure 64-bit integer arithmetic,
/// so identical seeds give identical streams on every platform.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    /// A generator whose stream is well separated from both `seed`'s own
    /// stream and other salts' streams.
    pub fn derive(seed: u64, salt: u64) -> SplitMix64 {
        SplitMix64::new(mix(seed ^ mix(salt.wrapping_add(GOLDEN))))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        mix(self.state)
    }

    /// Uniform draw from `[0, 1)` using the high 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Uniform draw from `0..n`. The modulo bias is immaterial for the tiny
    /// ranges used here.
    pub fn below(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        (self.next_u64() % n as u64) as usize
    }
}

/// Game families the generator can produce. Worths are drawn uniformly
/// from `[-10, 10]`.
#[derive(Clone, Debug, PartialEq)]
pub enum GameClass {
    /// Independent uniform worth per non-empty coalition.
    Uniform,
    /// Uniform game, zero-normalized.
    ZeroNormalized,
    /// Uniform game with the grand coalition's worth forced to 0.
    GrandZero,
    /// Weighted voting: worth 1 exactly when the members' weights reach the
    /// quota.
    Voting { weights: Vec<u64>, quota: u64 },
    /// Uniform game with one player made necessary (every coalition without
    /// it is zeroed).
    WithNecessaryPlayer,
    /// Uniform game with one player made null (it contributes nothing
    /// anywhere).
    WithNullPlayer,
    /// Additive game from uniform singleton worths, plus `[-1, 1]` noise on
    /// coalitions of two or more players.
    AdditivePlusNoise,
}

/// Deterministic game generator: identical seed and parameters always
/// produce the identical game.
#[derive(Clone, Debug)]
pub struct GameGen {
    pub seed: u64,
    pub n: usize,
    pub class: GameClass,
}

impl GameGen {
    pub fn new(seed: u64, n: usize, class: GameClass) -> GameGen {
        GameGen { seed, n, class }
    }

    pub fn generate(&self) -> Result<Game, GameError> {
        let mut rng = SplitMix64::new(self.seed);
        self.generate_with(&mut rng)
    }

    pub(crate) fn generate_with(&self, rng: &mut SplitMix64) -> Result<Game, GameError> {
        let n = self.n;
        match &self.class {
            GameClass::Uniform => uniform_game(n, rng),
            GameClass::ZeroNormalized => Ok(uniform_game(n, rng)?.zero_normalized()),
            GameClass::GrandZero => {
                let g = uniform_game(n, rng)?;
                Ok(g.with_worth(g.grand(), 0.0))
            }
            GameClass::Voting { weights, quota } => {
                if weights.len() != n {
                    return Err(GameError::LabelCount { expected: n, got: weights.len() });
                }
                let values = Coalition::grand(n)
                    .subsets()
                    .map(|s| {
                        let total: u64 = s.players().map(|j| weights[j]).sum();
                        if total >= *quota {
                            1.0
                        } else {
                            0.0
                        }
                    })
                    .collect();
                Game::from_values(n, values)
            }
            GameClass::WithNecessaryPlayer => {
                let chosen = rng.below(n);
                Ok(force_necessary(&uniform_game(n, rng)?, chosen))
            }
            GameClass::WithNullPlayer => {
                let chosen = rng.below(n);
                Ok(force_null(&uniform_game(n, rng)?, chosen))
            }
            GameClass::AdditivePlusNoise => {
                let singles: Vec<f64> = (0..n).map(|_| rng.uniform(-10.0, 10.0)).collect();
                let values = Coalition::grand(n)
                    .subsets()
                    .map(|s| {
                        let base: f64 = s.players().map(|j| singles[j]).sum();
                        if s.len() >= 2 {
                            base + rng.uniform(-1.0, 1.0)
                        } else {
                            base
                        }
                    })
                    .collect();
                Game::from_values(n, values)
            }
        }
    }
}

fn uniform_game(n: usize, rng: &mut SplitMix64) -> Result<Game, GameError> {
    if n == 0 || n > crate::game::MAX_PLAYERS {
        return Err(GameError::PlayerCount(n));
    }
    let values = std::iter::once(0.0)
        .chain((1..1u64 << n).map(|_| rng.uniform(-10.0, 10.0)))
        .collect();
    Game::from_values(n, values)
}

/// Convenience wrapper around [`GameGen::generate`].
pub fn random_game(gen: &GameGen) -> Result<Game, GameError> {
    gen.generate()
}

/// Deterministic random partition with at most four unions: draws a union
/// count, buckets every player, and drops empty buckets in order.
pub fn random_partition(n: usize, seed: u64) -> Partition {
    let mut rng = SplitMix64::new(seed);
    random_partition_with(n, &mut rng)
}

pub(crate) fn random_partition_with(n: usize, rng: &mut SplitMix64) -> Partition {
    let m = 1 + rng.below(n.min(4));
    let mut buckets = vec![Coalition::EMPTY; m];
    for p in 0..n {
        let b = rng.below(m);
        buckets[b] = buckets[b].with(p);
    }
    let unions: Vec<Coalition> = buckets.into_iter().filter(|u| !u.is_empty()).collect();
    Partition::new(n, unions).expect("bucketing yields a valid partition")
}

/// Zeroes every coalition that omits the player, making it necessary.
pub fn force_necessary(g: &Game, i: usize) -> Game {
    let values = g
        .grand()
        .subsets()
        .map(|s| if s.contains(i) { g.worth(s) } else { 0.0 })
        .collect();
    Game::from_values(g.n(), values).expect("zeroing preserves validity")
}

/// Copies each coalition's worth onto the coalition joined by the player,
/// making it null.
pub fn force_null(g: &Game, i: usize) -> Game {
    let mut values = g.values().to_vec();
    for s in g.grand().without(i).subsets() {
        values[s.with(i).index()] = values[s.index()];
    }
    Game::from_values(g.n(), values).expect("copying preserves validity")
}

/// Copies every `v(S∪{i})` onto `v(S∪{j})`, making the two players
/// symmetric.
pub fn symmetrize_players(g: &Game, i: usize, j: usize) -> Game {
    let mut values = g.values().to_vec();
    for s in g.grand().without(i).without(j).subsets() {
        values[s.with(j).index()] = values[s.with(i).index()];
    }
    Game::from_values(g.n(), values).expect("copying preserves validity")
}

/// Copies `v(S∪P_k)` onto `v(S∪P_l)` for every coalition `S` assembled from
/// the remaining complete unions, making the two unions symmetric.
pub fn symmetrize_unions(csg: &CSGame, k: usize, l: usize) -> CSGame {
    let (g, p) = (csg.game(), csg.partition());
    let m = p.len();
    let mut values = g.values().to_vec();
    let pk = p.union(k);
    let pl = p.union(l);
    for r in (Coalition::grand(m).without(k).without(l)).subsets() {
        let s = p.merge(r);
        values[(s | pl).index()] = values[(s | pk).index()];
    }
    let game = Game::from_values(g.n(), values).expect("copying preserves validity");
    CSGame::new(game, p.clone()).expect("partition unchanged")
}

/// Short reproducible identifier for a game: a splitmix64 fold over the
/// player count and the worth table's bit patterns.
pub fn game_digest(g: &Game) -> String {
    let mut h = mix(g.n() as u64 ^ GOLDEN);
    for v in g.values() {
        h = mix(h ^ v.to_bits());
    }
    format!("{h:016x}")
}

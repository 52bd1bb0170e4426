//! TU games: a player set together with a characteristic function stored
//! densely over all coalitions.

use crate::coalition::Coalition;
use crate::GameError;

/// Hard cap on the player count. The dense table holds `2^n` worths, so 26
/// players already means a 512 MiB table.
pub const MAX_PLAYERS: usize = 26;

/// A cooperative game with transferable utility: `n` players and a worth for
/// every coalition, with the empty coalition fixed at worth 0.
///
/// Worths are indexed by coalition bitmask; iteration over coalitions is in
/// ascending mask order everywhere, so every summation is bit-reproducible.
#[derive(Clone, Debug, PartialEq)]
pub struct Game {
    n: usize,
    values: Vec<f64>,
    labels: Vec<String>,
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

impl Game {
    /// Builds a game from sparse `(coalition, worth)` entries; coalitions not
    /// listed get worth 0.
    pub fn from_entries(
        n: usize,
        entries: impl IntoIterator<Item = (Coalition, f64)>,
    ) -> Result<Game, GameError> {
        if n == 0 || n > MAX_PLAYERS {
            return Err(GameError::PlayerCount(n));
        }
        let grand = Coalition::grand(n);
        let mut values = vec![0.0; 1 << n];
        let mut seen = vec![false; 1 << n];
        for (c, x) in entries {
            if !c.is_subset_of(grand) {
                return Err(GameError::CoalitionOutOfRange { mask: c.mask(), n });
            }
            if seen[c.index()] {
                return Err(GameError::DuplicateCoalition(c.mask()));
            }
            seen[c.index()] = true;
            if c.is_empty() {
                if x != 0.0 {
                    return Err(GameError::NonzeroEmptyCoalition(x));
                }
                continue;
            }
            if !x.is_finite() {
                return Err(GameError::NonFiniteWorth { mask: c.mask() });
            }
            values[c.index()] = x;
        }
        Ok(Game { n, values, labels: default_labels(n) })
    }

    /// Builds a game from a dense worth table of length `2^n` (entry 0 must
    /// be 0).
    pub fn from_values(n: usize, values: Vec<f64>) -> Result<Game, GameError> {
        if n == 0 || n > MAX_PLAYERS {
            return Err(GameError::PlayerCount(n));
        }
        if values.len() != 1 << n {
            return Err(GameError::ValueTableLength { expected: 1 << n, got: values.len() });
        }
        if values[0] != 0.0 {
            return Err(GameError::NonzeroEmptyCoalition(values[0]));
        }
        if let Some(pos) = values.iter().position(|x| !x.is_finite()) {
            return Err(GameError::NonFiniteWorth { mask: pos as u64 });
        }
        Ok(Game { n, values, labels: default_labels(n) })
    }

    /// The game in which every coalition is worth 0.
    pub fn zero(n: usize) -> Game {
        Game::from_entries(n, []).expect("player count checked by caller")
    }

    /// The canonical basis game `e_S`: worth 1 exactly on `S`, 0 elsewhere.
    pub fn basis(n: usize, s: Coalition) -> Result<Game, GameError> {
        if s.is_empty() {
            return Err(GameError::EmptyBasisCoalition);
        }
        Game::from_entries(n, [(s, 1.0)])
    }

    /// The unanimity game `u_S`: worth 1 exactly on supersets of `S`.
    pub fn unanimity(n: usize, s: Coalition) -> Result<Game, GameError> {
        if s.is_empty() {
            return Err(GameError::EmptyBasisCoalition);
        }
        if n == 0 || n > MAX_PLAYERS {
            return Err(GameError::PlayerCount(n));
        }
        let grand = Coalition::grand(n);
        if !s.is_subset_of(grand) {
            return Err(GameError::CoalitionOutOfRange { mask: s.mask(), n });
        }
        let values = grand
            .subsets()
            .map(|t| if s.is_subset_of(t) { 1.0 } else { 0.0 })
            .collect();
        Game::from_values(n, values)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grand(&self) -> Coalition {
        Coalition::grand(self.n)
    }

    /// Worth of a coalition. `c` must use only the low `n` bits.
    pub fn worth(&self, c: Coalition) -> f64 {
        self.values[c.index()]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Game, GameError> {
        if labels.len() != self.n {
            return Err(GameError::LabelCount { expected: self.n, got: labels.len() });
        }
        self.labels = labels;
        Ok(self)
    }

    /// The zero-normalization `v⁰` with `v⁰(S) = v(S) − Σ_{j∈S} v({j})`.
    /// Every singleton is worth 0 in the result.
    pub fn zero_normalized(&self) -> Game {
        let values = self
            .grand()
            .subsets()
            .map(|s| {
                let singles: f64 = s.players().map(|j| self.values[1 << j]).sum();
                self.values[s.index()] - singles
            })
            .collect();
        Game { n: self.n, values, labels: self.labels.clone() }
    }

    /// The S-equivalent game `w(T) = a·v(T) + Σ_{j∈T} b_j` for `a > 0`.
    pub fn s_equivalent(&self, a: f64, b: &[f64]) -> Result<Game, GameError> {
        if a <= 0.0 || a.is_nan() {
            return Err(GameError::NonPositiveScale(a));
        }
        if b.len() != self.n {
            return Err(GameError::LabelCount { expected: self.n, got: b.len() });
        }
        let values = self
            .grand()
            .subsets()
            .map(|t| {
                let shift: f64 = t.players().map(|j| b[j]).sum();
                a * self.values[t.index()] + shift
            })
            .collect();
        Ok(Game { n: self.n, values, labels: self.labels.clone() })
    }

    /// Entrywise sum `v + w` of two games over the same player set.
    pub fn plus(&self, other: &Game) -> Result<Game, GameError> {
        if self.n != other.n {
            return Err(GameError::PlayerCountMismatch { left: self.n, right: other.n });
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Game { n: self.n, values, labels: self.labels.clone() })
    }

    /// A copy of the game with the worth of one coalition replaced.
    pub fn with_worth(&self, c: Coalition, x: f64) -> Game {
        let mut g = self.clone();
        g.values[c.index()] = x;
        if c.is_empty() {
            g.values[0] = 0.0;
        }
        g
    }

    /// A player is necessary when every coalition without it is worth 0.
    /// Comparisons are exact: the predicate is a definition over stored data.
    pub fn is_necessary(&self, i: usize) -> bool {
        debug_assert!(i < self.n);
        (self.grand().without(i))
            .subsets()
            .all(|s| self.values[s.index()] == 0.0)
    }

    /// A player is null when it contributes nothing to any coalition.
    pub fn is_null(&self, i: usize) -> bool {
        debug_assert!(i < self.n);
        (self.grand().without(i))
            .subsets()
            .all(|s| self.values[s.index()] == self.values[s.with(i).index()])
    }

    /// Players are symmetric when substituting one for the other never
    /// changes a coalition's worth.
    pub fn are_symmetric(&self, i: usize, j: usize) -> Result<bool, GameError> {
        if i == j {
            return Err(GameError::SamePlayer(i));
        }
        debug_assert!(i < self.n && j < self.n);
        let rest = self.grand().without(i).without(j);
        Ok(rest
            .subsets()
            .all(|s| self.values[s.with(i).index()] == self.values[s.with(j).index()]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testgames::{council, elevator_c, elevator_d};

    fn c(mask: u64) -> Coalition {
        Coalition::from_mask(mask)
    }

    #[test]
    fn from_entries_sparse_default() {
        let g = Game::from_entries(3, [(c(0b111), 1.0)]).unwrap();
        assert_eq!(g.values(), &[0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
    }

    #[test]
    fn from_entries_elevator() {
        let g = elevator_c();
        assert_eq!(g.worth(c(0b011)), 100.0);
        assert_eq!(g.worth(g.grand()), 120.0);
    }

    #[test]
    fn from_entries_degenerate_one_player() {
        let g = Game::from_entries(1, []).unwrap();
        assert_eq!(g.values(), &[0.0, 0.0]);
    }

    #[test]
    fn from_entries_rejects_bad_input() {
        assert!(matches!(
            Game::from_entries(3, [(c(0b01), 1.0), (c(0b01), 2.0)]),
            Err(GameError::DuplicateCoalition(_))
        ));
        assert!(matches!(
            Game::from_entries(2, [(c(0b100), 1.0)]),
            Err(GameError::CoalitionOutOfRange { .. })
        ));
        assert!(matches!(
            Game::from_entries(2, [(Coalition::EMPTY, 1.0)]),
            Err(GameError::NonzeroEmptyCoalition(_))
        ));
        assert!(Game::from_entries(2, [(Coalition::EMPTY, 0.0)]).is_ok());
        assert!(matches!(Game::from_entries(0, []), Err(GameError::PlayerCount(0))));
        assert!(matches!(Game::from_entries(27, []), Err(GameError::PlayerCount(27))));
        assert!(matches!(
            Game::from_entries(2, [(c(0b01), f64::NAN)]),
            Err(GameError::NonFiniteWorth { .. })
        ));
    }

    #[test]
    fn zero_normalize_elevator() {
        let v0 = elevator_c().zero_normalized();
        assert_eq!(v0.worth(c(0b011)), -70.0);
        assert_eq!(v0.worth(c(0b101)), -70.0);
        assert_eq!(v0.worth(c(0b110)), -80.0);
        assert_eq!(v0.worth(c(0b111)), -150.0);
        for i in 0..3 {
            assert_eq!(v0.worth(Coalition::singleton(i)), 0.0);
        }
    }

    #[test]
    fn zero_normalize_additive_game_is_zero() {
        let g = Game::from_entries(
            3,
            [
                (c(0b001), 2.0),
                (c(0b010), -1.0),
                (c(0b100), 4.0),
                (c(0b011), 1.0),
                (c(0b101), 6.0),
                (c(0b110), 3.0),
                (c(0b111), 5.0),
            ],
        )
        .unwrap();
        assert_eq!(g.zero_normalized(), Game::zero(3).with_labels(g.labels().to_vec()).unwrap());
    }

    #[test]
    fn zero_normalize_leaves_basis_of_grand_unchanged() {
        let g = Game::basis(3, c(0b111)).unwrap();
        assert_eq!(g.zero_normalized(), g);
    }

    #[test]
    fn basis_game_shape() {
        let g = Game::basis(3, c(0b011)).unwrap();
        assert_eq!(g.values().iter().filter(|x| **x != 0.0).count(), 1);
        assert_eq!(g.worth(c(0b011)), 1.0);

        let g1 = Game::basis(1, c(0b1)).unwrap();
        assert_eq!(g1.values(), &[0.0, 1.0]);

        assert!(matches!(Game::basis(3, Coalition::EMPTY), Err(GameError::EmptyBasisCoalition)));
    }

    #[test]
    fn unanimity_game_shape() {
        let g = Game::unanimity(3, c(0b001)).unwrap();
        assert_eq!(g.values().iter().filter(|x| **x == 1.0).count(), 4);

        assert_eq!(Game::unanimity(3, c(0b111)).unwrap(), Game::basis(3, c(0b111)).unwrap());
        assert!(matches!(Game::unanimity(3, Coalition::EMPTY), Err(GameError::EmptyBasisCoalition)));
    }

    #[test]
    fn unanimity_necessary_and_null_players() {
        let s = c(0b011);
        let g = Game::unanimity(3, s).unwrap();
        for i in 0..3 {
            assert_eq!(g.is_necessary(i), s.contains(i));
            assert_eq!(g.is_null(i), !s.contains(i));
        }
    }

    #[test]
    fn s_equivalent_examples() {
        let g = elevator_c();
        assert_eq!(g.s_equivalent(1.0, &[0.0; 3]).unwrap(), g);

        let e = Game::basis(3, c(0b111)).unwrap();
        let doubled = e.s_equivalent(2.0, &[0.0; 3]).unwrap();
        assert_eq!(doubled.worth(c(0b111)), 2.0);

        let w = g.s_equivalent(1.0, &[10.0, 0.0, 0.0]).unwrap();
        assert_eq!(w.worth(c(0b001)), 90.0);
        assert_eq!(w.worth(c(0b101)), 120.0);
        assert_eq!(w.worth(c(0b110)), 110.0);

        assert!(matches!(g.s_equivalent(0.0, &[0.0; 3]), Err(GameError::NonPositiveScale(_))));
        assert!(matches!(g.s_equivalent(-1.0, &[0.0; 3]), Err(GameError::NonPositiveScale(_))));
    }

    #[test]
    fn necessary_players_in_council() {
        let g = council();
        assert!(g.is_necessary(0));
        assert!(!g.is_necessary(1));
        assert!(!g.is_necessary(2));
    }

    #[test]
    fn null_players() {
        assert!(!Game::basis(3, c(0b111)).unwrap().is_null(0));
        let z = Game::zero(3);
        for i in 0..3 {
            assert!(z.is_null(i));
        }
    }

    #[test]
    fn symmetric_players() {
        let d = elevator_d();
        assert!(!d.are_symmetric(1, 2).unwrap());

        let e = Game::basis(3, c(0b111)).unwrap();
        assert!(e.are_symmetric(0, 1).unwrap());
        assert!(e.are_symmetric(0, 2).unwrap());
        assert!(e.are_symmetric(1, 2).unwrap());

        let additive = Game::from_entries(
            3,
            [
                (c(0b001), 2.0),
                (c(0b010), 2.0),
                (c(0b100), 2.0),
                (c(0b011), 4.0),
                (c(0b101), 4.0),
                (c(0b110), 4.0),
                (c(0b111), 6.0),
            ],
        )
        .unwrap();
        assert!(additive.are_symmetric(0, 2).unwrap());

        assert!(matches!(e.are_symmetric(1, 1), Err(GameError::SamePlayer(1))));
    }

    #[test]
    fn plus_and_with_worth() {
        let g = elevator_c();
        let sum = g.plus(&g).unwrap();
        assert_eq!(sum.worth(g.grand()), 240.0);
        assert!(g.plus(&Game::zero(2)).is_err());

        let bumped = g.with_worth(c(0b011), 105.0);
        assert_eq!(bumped.worth(c(0b011)), 105.0);
        assert_eq!(bumped.worth(c(0b111)), 120.0);
    }
}

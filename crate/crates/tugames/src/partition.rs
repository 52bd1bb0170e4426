//! Coalition structures: ordered partitions of the player set into unions,
//! and games equipped with one.

use crate::coalition::Coalition;
use crate::game::Game;
use crate::GameError;

/// An ordered list of pairwise disjoint, non-empty unions covering the
/// player set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    unions: Vec<Coalition>,
    member_of: Vec<usize>,
}

impl Partition {
    pub fn new(n: usize, unions: Vec<Coalition>) -> Result<Partition, GameError> {
        let grand = Coalition::grand(n);
        let mut member_of = vec![usize::MAX; n];
        let mut covered = Coalition::EMPTY;
        for (k, u) in unions.iter().enumerate() {
            if u.is_empty() {
                return Err(GameError::EmptyUnion(k));
            }
            if !u.is_subset_of(grand) {
                return Err(GameError::CoalitionOutOfRange { mask: u.mask(), n });
            }
            if !(covered & *u).is_empty() {
                return Err(GameError::OverlappingUnions(k));
            }
            covered = covered | *u;
            for p in u.players() {
                member_of[p] = k;
            }
        }
        if covered != grand {
            return Err(GameError::IncompletePartition { missing: (grand - covered).mask() });
        }
        Ok(Partition { unions, member_of })
    }

    /// The trivial partition into singletons `{{0},…,{n−1}}`.
    pub fn singletons(n: usize) -> Partition {
        Partition::new(n, (0..n).map(Coalition::singleton).collect())
            .expect("singleton partition is always valid")
    }

    /// The one-union partition `{N}`.
    pub fn one_union(n: usize) -> Partition {
        Partition::new(n, vec![Coalition::grand(n)]).expect("grand union is always valid")
    }

    pub fn n(&self) -> usize {
        self.member_of.len()
    }

    /// Number of unions (`m`).
    pub fn len(&self) -> usize {
        self.unions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.unions.is_empty()
    }

    pub fn unions(&self) -> &[Coalition] {
        &self.unions
    }

    pub fn union(&self, k: usize) -> Coalition {
        self.unions[k]
    }

    /// Index of the union containing a player.
    pub fn union_of(&self, player: usize) -> usize {
        self.member_of[player]
    }

    pub fn is_singletons(&self) -> bool {
        self.unions.len() == self.member_of.len()
    }

    /// Players of the union set `R` (a mask over union indices).
    pub fn merge(&self, r: Coalition) -> Coalition {
        r.players().fold(Coalition::EMPTY, |acc, k| acc | self.unions[k])
    }
}

/// A TU game together with a coalition structure on its players.
#[derive(Clone, Debug, PartialEq)]
pub struct CSGame {
    game: Game,
    partition: Partition,
}

impl CSGame {
    pub fn new(game: Game, partition: Partition) -> Result<CSGame, GameError> {
        if game.n() != partition.n() {
            return Err(GameError::PlayerCountMismatch { left: game.n(), right: partition.n() });
        }
        Ok(CSGame { game, partition })
    }

    pub fn game(&self) -> &Game {
        &self.game
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// The quotient game played by the unions: `v^P(R) = v(∪_{r∈R} P_r)`.
    ///
    /// Quotient players are labelled by joining the member labels with `+`.
    pub fn quotient(&self) -> Game {
        let m = self.partition.len();
        let values = Coalition::grand(m)
            .subsets()
            .map(|r| self.game.worth(self.partition.merge(r)))
            .collect();
        let labels = self
            .partition
            .unions()
            .iter()
            .map(|u| {
                u.players()
                    .map(|p| self.game.labels()[p].as_str())
                    .collect::<Vec<_>>()
                    .join("+")
            })
            .collect();
        Game::from_values(m, values)
            .expect("quotient of a valid game is valid")
            .with_labels(labels)
            .expect("one label per union")
    }

    /// The partition-normalization `v⁰′` that subtracts the worths of fully
    /// contained unions and the singleton worths of the remaining members:
    /// `v⁰′(S) = v(S) − Σ_{r: P_r⊆S} v(P_r) − Σ_{j∈S∖∪P_r} v({j})`.
    pub fn partition_normalized(&self) -> Game {
        let g = &self.game;
        let values = g
            .grand()
            .subsets()
            .map(|s| {
                let mut covered = Coalition::EMPTY;
                let mut sub = 0.0;
                for u in self.partition.unions() {
                    if u.is_subset_of(s) {
                        sub += g.worth(*u);
                        covered = covered | *u;
                    }
                }
                for j in (s - covered).players() {
                    sub += g.worth(Coalition::singleton(j));
                }
                g.worth(s) - sub
            })
            .collect();
        Game::from_values(g.n(), values)
            .expect("normalization of a valid game is valid")
            .with_labels(g.labels().to_vec())
            .expect("label count unchanged")
    }

    /// Unions are symmetric when swapping one for the other never changes
    /// the worth of a coalition assembled from complete unions.
    pub fn are_symmetric_unions(&self, k: usize, l: usize) -> Result<bool, GameError> {
        if k == l {
            return Err(GameError::SameUnion(k));
        }
        let m = self.partition.len();
        debug_assert!(k < m && l < m);
        let rest = Coalition::grand(m).without(k).without(l);
        let pk = self.partition.union(k);
        let pl = self.partition.union(l);
        Ok(rest.subsets().all(|r| {
            let s = self.partition.merge(r);
            self.game.worth(s | pk) == self.game.worth(s | pl)
        }))
    }
}

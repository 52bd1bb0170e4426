//! Coalitions as bitmasks over player indices.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

/// A set of players encoded as a bitmask: bit `i` set means player `i`
/// (0-indexed) is a member. Games with `n` players only use the low `n` bits.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coalition(u64);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub fn from_mask(mask: u64) -> Self {
        Coalition(mask)
    }

    /// The grand coalition of an `n`-player game.
    pub fn grand(n: usize) -> Self {
        debug_assert!(n <= 63);
        Coalition((1u64 << n) - 1)
    }

    pub fn singleton(player: usize) -> Self {
        Coalition(1u64 << player)
    }

    pub fn from_players(players: impl IntoIterator<Item = usize>) -> Self {
        players.into_iter().fold(Coalition(0), |c, p| c.with(p))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn contains(self, player: usize) -> bool {
        self.0 >> player & 1 == 1
    }

    pub fn with(self, player: usize) -> Self {
        Coalition(self.0 | 1 << player)
    }

    pub fn without(self, player: usize) -> Self {
        Coalition(self.0 & !(1 << player))
    }

    /// Number of members (the cardinality `s` of the coalition).
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Coalition) -> bool {
        self.0 & other.0 == self.0
    }

    /// Member players in ascending index order.
    pub fn players(self) -> Players {
        Players(self.0)
    }

    /// All subsets of this coalition in ascending mask order, starting with
    /// the empty coalition and ending with the coalition itself.
    pub fn subsets(self) -> Subsets {
        Subsets { universe: self.0, next: Some(0) }
    }
}

impl BitOr for Coalition {
    type Output = Coalition;
    fn bitor(self, rhs: Coalition) -> Coalition {
        Coalition(self.0 | rhs.0)
    }
}

impl BitAnd for Coalition {
    type Output = Coalition;
    fn bitand(self, rhs: Coalition) -> Coalition {
        Coalition(self.0 & rhs.0)
    }
}

impl Sub for Coalition {
    type Output = Coalition;
    fn sub(self, rhs: Coalition) -> Coalition {
        Coalition(self.0 & !rhs.0)
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, p) in self.players().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p + 1)?;
        }
        write!(f, "}}")
    }
}

/// Iterator over the member players of a coalition, ascending.
pub struct Players(u64);

impl Iterator for Players {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let p = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(p)
    }
}

/// Iterator over all submasks of a universe mask in ascending mask order.
///
/// Uses the wrap-around step `next = (cur - universe) & universe`, which
/// walks the submasks of `universe` from 0 upward. Ascending order makes
/// every summation over coalitions bit-reproducible across runs.
pub struct Subsets {
    universe: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Coalition;

    fn next(&mut self) -> Option<Coalition> {
        let cur = self.next?;
        let stepped = cur.wrapping_sub(self.universe) & self.universe;
        self.next = if stepped == 0 { None } else { Some(stepped) };
        Some(Coalition(cur))
    }
}

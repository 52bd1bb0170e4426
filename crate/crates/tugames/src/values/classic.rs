//! Classical baseline values: Shapley, Banzhaf, equal division and equal
//! surplus division, plus an exhaustive permutation oracle for Shapley.

use itertools::Itertools;

use crate::coalition::Coalition;
use crate::game::Game;
use crate::par::{map_indexed, PLAYER_PAR_THRESHOLD};
use crate::values::Allocation;
use crate::GameError;

/// Largest player count accepted by the permutation oracle (10! ≈ 3.6M
/// orderings).
pub const ORACLE_MAX_PLAYERS: usize = 10;

/// Binomial coefficients C(n, 0..=n) as exact integers. Fits u64 for the
/// supported player counts; converted to f64 only at the point of use.
pub(crate) fn binomial_row(n: usize) -> Vec<u64> {
    let mut row = vec![0u64; n + 1];
    row[0] = 1;
    for i in 1..=n {
        for k in (1..=i).rev() {
            row[k] += row[k - 1];
        }
    }
    row
}

/// Shapley payoff of a single player: the marginal contribution to `S`
/// averaged first over coalitions of equal size and then over sizes.
pub fn shapley_player(g: &Game, i: usize) -> f64 {
    let n = g.n();
    let binom = binomial_row(n - 1);
    let mut acc = 0.0;
    for s in g.grand().without(i).subsets() {
        let marginal = g.worth(s.with(i)) - g.worth(s);
        acc += marginal / binom[s.len()] as f64;
    }
    acc / n as f64
}

pub fn shapley(g: &Game) -> Allocation {
    let payoffs = map_indexed(g.n(), g.n() >= PLAYER_PAR_THRESHOLD, |i| shapley_player(g, i));
    Allocation::from_payoffs(payoffs)
}

/// Banzhaf payoff of a single player: the plain average of its marginal
/// contributions over all coalitions it can join.
pub fn banzhaf_player(g: &Game, i: usize) -> f64 {
    let n = g.n();
    let mut acc = 0.0;
    for s in g.grand().without(i).subsets() {
        acc += g.worth(s.with(i)) - g.worth(s);
    }
    acc / (1u64 << (n - 1)) as f64
}

pub fn banzhaf(g: &Game) -> Allocation {
    let payoffs = map_indexed(g.n(), g.n() >= PLAYER_PAR_THRESHOLD, |i| banzhaf_player(g, i));
    Allocation::from_payoffs(payoffs)
}

/// Splits the grand coalition's worth evenly.
pub fn equal_division(g: &Game) -> Allocation {
    let share = g.worth(g.grand()) / g.n() as f64;
    Allocation::from_payoffs(vec![share; g.n()])
}

/// Gives every player its singleton worth plus an even share of the
/// surplus `v(N) − Σ_j v({j})`.
pub fn equal_surplus_division(g: &Game) -> Allocation {
    let n = g.n();
    let singles: f64 = (0..n).map(|j| g.worth(Coalition::singleton(j))).sum();
    let surplus_share = (g.worth(g.grand()) - singles) / n as f64;
    let payoffs = (0..n)
        .map(|i| g.worth(Coalition::singleton(i)) + surplus_share)
        .collect();
    Allocation::from_payoffs(payoffs)
}

/// Independent Shapley oracle: the mean marginal contribution over all `n!`
/// player orderings, built without the per-size weighting of the closed
/// formula.
pub fn shapley_permutation_oracle(g: &Game) -> Result<Allocation, GameError> {
    let n = g.n();
    if n > ORACLE_MAX_PLAYERS {
        return Err(GameError::OracleTooLarge { got: n, max: ORACLE_MAX_PLAYERS });
    }
    let mut acc = vec![0.0; n];
    let mut count = 0u64;
    for perm in (0..n).permutations(n) {
        count += 1;
        let mut cur = Coalition::EMPTY;
        for p in perm {
            let next = cur.with(p);
            acc[p] += g.worth(next) - g.worth(cur);
            cur = next;
        }
    }
    Ok(Allocation::from_payoffs(
        acc.into_iter().map(|x| x / count as f64).collect(),
    ))
}

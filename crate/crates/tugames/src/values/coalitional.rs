//! Values for games with a coalition structure: Owen, Banzhaf–Owen, the
//! coalitional per-capita family, and the egalitarian companions obtained
//! by stripping the per-capita correction terms.

use itertools::Itertools;

use crate::coalition::Coalition;
use crate::game::Game;
use crate::par::{map_indexed, PLAYER_PAR_THRESHOLD};
use crate::partition::{CSGame, Partition};
use crate::values::classic::binomial_row;
use crate::values::Allocation;
use crate::GameError;

/// Largest player count accepted by the ordering oracle.
pub const ORACLE_MAX_PLAYERS: usize = 8;

fn alloc(csg: &CSGame, f: impl Fn(usize) -> f64 + Sync + Send) -> Allocation {
    let n = csg.game().n();
    Allocation::from_payoffs(map_indexed(n, n >= PLAYER_PAR_THRESHOLD, f))
}

/// Owen payoff of one player: marginal contributions to coalitions built
/// from complete other unions plus fellow union members, weighted like a
/// two-level Shapley value.
pub fn owen_player(csg: &CSGame, i: usize) -> f64 {
    let (g, p) = (csg.game(), csg.partition());
    let m = p.len();
    let k = p.union_of(i);
    let pk = p.union(k);
    let pk_size = pk.len();
    let binom_unions = binomial_row(m - 1);
    let binom_members = binomial_row(pk_size - 1);
    let mut acc = 0.0;
    for r in (Coalition::grand(m).without(k)).subsets() {
        let base = p.merge(r);
        let outer = binom_unions[r.len()] as f64;
        for t in (pk.without(i)).subsets() {
            let s = base | t;
            let marginal = g.worth(s.with(i)) - g.worth(s);
            acc += marginal / (outer * binom_members[t.len()] as f64);
        }
    }
    acc / (m * pk_size) as f64
}

pub fn owen(csg: &CSGame) -> Allocation {
    alloc(csg, |i| owen_player(csg, i))
}

/// Banzhaf–Owen payoff of one player: the same double sum with flat
/// `1/2^{m−1}·1/2^{p_k−1}` weights.
pub fn banzhaf_owen_player(csg: &CSGame, i: usize) -> f64 {
    let (g, p) = (csg.game(), csg.partition());
    let m = p.len();
    let k = p.union_of(i);
    let pk = p.union(k);
    let mut acc = 0.0;
    for r in (Coalition::grand(m).without(k)).subsets() {
        let base = p.merge(r);
        for t in (pk.without(i)).subsets() {
            let s = base | t;
            acc += g.worth(s.with(i)) - g.worth(s);
        }
    }
    acc / (1u64 << (m - 1 + pk.len() - 1)) as f64
}

pub fn banzhaf_owen(csg: &CSGame) -> Allocation {
    alloc(csg, |i| banzhaf_owen_player(csg, i))
}

/// Coalitional per-capita payoff of one player.
///
/// Three groups of terms: per-capita shares of coalitions that combine
/// complete other unions with a proper part of the player's own union,
/// per-capita shares at the union level, and an even share of `v(N)`
/// across unions and union members. Sum ranges keep every denominator at
/// least 1: the intra-union sums run over proper non-empty `T ⊊ P_k`, the
/// union-level sums over `R ⊊ M` with `k ∈ R` and over non-empty
/// `R ⊆ M∖{k}` (the empty set contributes `v(∅) = 0` and is skipped).
pub fn gamma_c_player(csg: &CSGame, i: usize) -> f64 {
    gamma_c_player_on(csg.game(), csg.partition(), i)
}

fn gamma_c_player_on(g: &Game, p: &Partition, i: usize) -> f64 {
    let m = p.len();
    let k = p.union_of(i);
    let pk = p.union(k);
    let pk_size = pk.len();
    let others = Coalition::grand(m).without(k);

    let mut member = 0.0;
    let mut outside = 0.0;
    for r in others.subsets() {
        let base = p.merge(r);
        for t in pk.subsets() {
            if t == pk {
                continue;
            }
            let t_size = t.len();
            if t.contains(i) {
                member += g.worth(base | t) / t_size as f64;
            } else if !t.is_empty() {
                outside += g.worth(base | t) / (pk_size - t_size) as f64;
            }
        }
    }

    let mut union_in = 0.0;
    for q in others.subsets() {
        let r = q.with(k);
        if r == Coalition::grand(m) {
            continue;
        }
        union_in += g.worth(p.merge(r)) / r.len() as f64;
    }
    let mut union_out = 0.0;
    for r in others.subsets() {
        if r.is_empty() {
            continue;
        }
        union_out += g.worth(p.merge(r)) / (m - r.len()) as f64;
    }

    (member - outside) / (1u64 << (m - 1 + pk_size - 1)) as f64
        + (union_in - union_out) / ((1u64 << (m - 1)) * pk_size as u64) as f64
        + g.worth(g.grand()) / (m * pk_size) as f64
}

pub fn gamma_c(csg: &CSGame) -> Allocation {
    alloc(csg, |i| gamma_c_player(csg, i))
}

/// Coalitional counterpart of `big_gamma`: singleton worth, plus an even
/// union share of the union's surplus, plus `gamma_c` of the
/// partition-normalized game.
pub fn big_gamma_c(csg: &CSGame) -> Allocation {
    let v0p = csg.partition_normalized();
    let (g, p) = (csg.game(), csg.partition());
    alloc(csg, |i| {
        big_gamma_c_term(g, p, i) + gamma_c_player_on(&v0p, p, i)
    })
}

pub fn big_gamma_c_player(csg: &CSGame, i: usize) -> f64 {
    let v0p = csg.partition_normalized();
    big_gamma_c_term(csg.game(), csg.partition(), i)
        + gamma_c_player_on(&v0p, csg.partition(), i)
}

fn big_gamma_c_term(g: &Game, p: &Partition, i: usize) -> f64 {
    let pk = p.union(p.union_of(i));
    let singles: f64 = pk.players().map(|j| g.worth(Coalition::singleton(j))).sum();
    g.worth(Coalition::singleton(i)) + (g.worth(pk) - singles) / pk.len() as f64
}

/// Egalitarian companion of `gamma_c`: what remains of it once the
/// per-capita correction terms are stripped, an even share of `v(N)`
/// across unions and fellow members. Collapses to equal division under
/// the singleton partition.
pub fn ed_u(csg: &CSGame) -> Allocation {
    let (g, p) = (csg.game(), csg.partition());
    let m = p.len();
    let grand_worth = g.worth(g.grand());
    let payoffs = (0..g.n())
        .map(|i| grand_worth / (m * p.union(p.union_of(i)).len()) as f64)
        .collect();
    Allocation::from_payoffs(payoffs)
}

/// Egalitarian-surplus companion of `big_gamma_c`: singleton worth, an even
/// union share of the union surplus, and an even share of the fully
/// normalized grand worth. Collapses to equal surplus division under the
/// singleton partition.
pub fn esd2_u(csg: &CSGame) -> Allocation {
    let (g, p) = (csg.game(), csg.partition());
    let m = p.len();
    let union_sum: f64 = p.unions().iter().map(|u| g.worth(*u)).sum();
    let normalized_grand = g.worth(g.grand()) - union_sum;
    let payoffs = (0..g.n())
        .map(|i| {
            let pk_size = p.union(p.union_of(i)).len();
            big_gamma_c_term(g, p, i) + normalized_grand / (m * pk_size) as f64
        })
        .collect();
    Allocation::from_payoffs(payoffs)
}

/// Independent Owen oracle: the mean marginal contribution over exactly
/// those player orderings in which every union appears as one contiguous
/// block.
pub fn owen_ordering_oracle(csg: &CSGame) -> Result<Allocation, GameError> {
    let (g, p) = (csg.game(), csg.partition());
    let n = g.n();
    if n > ORACLE_MAX_PLAYERS {
        return Err(GameError::OracleTooLarge { got: n, max: ORACLE_MAX_PLAYERS });
    }
    let mut acc = vec![0.0; n];
    let mut count = 0u64;
    for perm in (0..n).permutations(n) {
        if !unions_contiguous(&perm, p) {
            continue;
        }
        count += 1;
        let mut cur = Coalition::EMPTY;
        for pl in perm {
            let next = cur.with(pl);
            acc[pl] += g.worth(next) - g.worth(cur);
            cur = next;
        }
    }
    Ok(Allocation::from_payoffs(
        acc.into_iter().map(|x| x / count as f64).collect(),
    ))
}

fn unions_contiguous(perm: &[usize], p: &Partition) -> bool {
    let mut seen = 0u64;
    let mut prev = usize::MAX;
    for &player in perm {
        let k = p.union_of(player);
        if k != prev {
            if seen >> k & 1 == 1 {
                return false;
            }
            seen |= 1 << k;
            prev = k;
        }
    }
    true
}

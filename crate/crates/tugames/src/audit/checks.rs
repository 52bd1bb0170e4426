//! Mechanical checkers for the axioms the values are characterized by.
//!
//! Every checker returns a violation magnitude; checkers whose statement
//! only binds on certain games distinguish three outcomes: a measured
//! violation, `Vacuous` when no player or pair has the required structure,
//! and `Inapplicable` when the game fails the property's precondition.
//! Preconditions are compared exactly: generators enforce them exactly and
//! a definitional hypothesis is not a numeric estimate.

use crate::coalition::Coalition;
use crate::game::Game;
use crate::partition::{CSGame, Partition};
use crate::values::classic::binomial_row;
use crate::values::{Allocation, CoalitionalValue};
use crate::GameError;

/// Result of one axiom check on one game.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Outcome {
    /// The axiom's hypothesis held somewhere; the payload is the largest
    /// deviation found (0 means the axiom held everywhere).
    Checked(f64),
    /// Nothing to check: the game has no player/pair with the required
    /// structure.
    Vacuous,
    /// The game does not meet the property's precondition.
    Inapplicable,
}

impl Outcome {
    pub fn magnitude(self) -> f64 {
        match self {
            Outcome::Checked(x) => x,
            _ => 0.0,
        }
    }
}

/// `|Σ_i f_i − v(N)|`.
pub fn check_efficiency(f: impl Fn(&Game) -> Allocation, g: &Game) -> f64 {
    (f(g).total() - g.worth(g.grand())).abs()
}

/// `max_i |f_i(v+w) − f_i(v) − f_i(w)|`.
pub fn check_additivity(
    f: impl Fn(&Game) -> Allocation,
    g1: &Game,
    g2: &Game,
) -> Result<f64, GameError> {
    let sum = g1.plus(g2)?;
    let on_sum = f(&sum);
    let a = f(g1);
    let b = f(g2);
    Ok((0..g1.n())
        .map(|i| (on_sum[i] - a[i] - b[i]).abs())
        .fold(0.0, f64::max))
}

/// Largest payoff gap over all symmetric player pairs.
pub fn check_symmetry(f: impl Fn(&Game) -> Allocation, g: &Game) -> Outcome {
    let n = g.n();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if g.are_symmetric(i, j).expect("distinct players") {
                pairs.push((i, j));
            }
        }
    }
    if pairs.is_empty() {
        return Outcome::Vacuous;
    }
    let alloc = f(g);
    Outcome::Checked(
        pairs
            .iter()
            .map(|(i, j)| (alloc[*i] - alloc[*j]).abs())
            .fold(0.0, f64::max),
    )
}

/// Largest absolute payoff over all null players.
pub fn check_null_player(f: impl Fn(&Game) -> Allocation, g: &Game) -> Outcome {
    let nulls: Vec<usize> = (0..g.n()).filter(|&i| g.is_null(i)).collect();
    if nulls.is_empty() {
        return Outcome::Vacuous;
    }
    let alloc = f(g);
    Outcome::Checked(nulls.iter().map(|&i| alloc[i].abs()).fold(0.0, f64::max))
}

/// The payoff a necessary player is entitled to, in five flavours.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NecessaryVariant {
    /// Size-weighted average of the worths of the coalitions containing the
    /// player.
    WeightedMean,
    /// Plain average of those worths.
    Mean,
    /// Plain average, demanded only on games with `v(N) = 0`.
    WeakMean,
    /// Average of the per-capita worths, demanded only on `v(N) = 0` games.
    PerCapitaMean,
    /// Singleton worth plus the per-capita average of the zero-normalized
    /// worths, demanded only when `v(N) = Σ_j v({j})`.
    ZeroNormPerCapitaMean,
}

impl NecessaryVariant {
    pub fn name(self) -> &'static str {
        match self {
            NecessaryVariant::WeightedMean => "necessary-weighted-mean",
            NecessaryVariant::Mean => "necessary-mean",
            NecessaryVariant::WeakMean => "necessary-weak-mean",
            NecessaryVariant::PerCapitaMean => "necessary-per-capita-mean",
            NecessaryVariant::ZeroNormPerCapitaMean => "necessary-zero-norm-per-capita-mean",
        }
    }

    fn precondition(self, g: &Game) -> bool {
        match self {
            NecessaryVariant::WeightedMean | NecessaryVariant::Mean => true,
            NecessaryVariant::WeakMean | NecessaryVariant::PerCapitaMean => {
                g.worth(g.grand()) == 0.0
            }
            NecessaryVariant::ZeroNormPerCapitaMean => {
                let singles: f64 =
                    (0..g.n()).map(|j| g.worth(Coalition::singleton(j))).sum();
                g.worth(g.grand()) == singles
            }
        }
    }
}

/// The payoff the variant prescribes for player `i`, assuming `i` is
/// necessary and the precondition holds.
pub(crate) fn necessary_prescription(g: &Game, i: usize, variant: NecessaryVariant) -> f64 {
    let n = g.n();
    match variant {
        NecessaryVariant::WeightedMean => {
            let binom = binomial_row(n - 1);
            let mut acc = 0.0;
            for s in g.grand().subsets() {
                if s.contains(i) {
                    acc += g.worth(s) / binom[s.len() - 1] as f64;
                }
            }
            acc / n as f64
        }
        NecessaryVariant::Mean | NecessaryVariant::WeakMean => {
            let mut acc = 0.0;
            for s in g.grand().subsets() {
                if s.contains(i) {
                    acc += g.worth(s);
                }
            }
            acc / (1u64 << (n - 1)) as f64
        }
        NecessaryVariant::PerCapitaMean => {
            let mut acc = 0.0;
            for s in g.grand().subsets() {
                if s.contains(i) {
                    acc += g.worth(s) / s.len() as f64;
                }
            }
            acc / (1u64 << (n - 1)) as f64
        }
        NecessaryVariant::ZeroNormPerCapitaMean => {
            let v0 = g.zero_normalized();
            g.worth(Coalition::singleton(i))
                + necessary_prescription(&v0, i, NecessaryVariant::PerCapitaMean)
        }
    }
}

/// Largest gap between a necessary player's payoff and the variant's
/// prescribed average.
pub fn check_necessary_property(
    f: impl Fn(&Game) -> Allocation,
    g: &Game,
    variant: NecessaryVariant,
) -> Outcome {
    if !variant.precondition(g) {
        return Outcome::Inapplicable;
    }
    let necessary: Vec<usize> = (0..g.n()).filter(|&i| g.is_necessary(i)).collect();
    if necessary.is_empty() {
        return Outcome::Vacuous;
    }
    let alloc = f(g);
    Outcome::Checked(
        necessary
            .iter()
            .map(|&i| (alloc[i] - necessary_prescription(g, i, variant)).abs())
            .fold(0.0, f64::max),
    )
}

/// Coalitional counterparts: averages run over partition-compatible
/// coalitions (complete outside unions plus a part of the player's own
/// union).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoalitionalNecessaryVariant {
    WeightedCoalitionalMean,
    CoalitionalMean,
    /// Demanded only on games with `v(N) = 0`.
    PerCapitaCoalitionalMean,
    /// Demanded only when `v(N) = Σ_r v(P_r)`.
    ZeroNormPerCapitaCoalitionalMean,
}

impl CoalitionalNecessaryVariant {
    pub fn name(self) -> &'static str {
        match self {
            CoalitionalNecessaryVariant::WeightedCoalitionalMean => {
                "necessary-weighted-coalitional-mean"
            }
            CoalitionalNecessaryVariant::CoalitionalMean => "necessary-coalitional-mean",
            CoalitionalNecessaryVariant::PerCapitaCoalitionalMean => {
                "necessary-per-capita-coalitional-mean"
            }
            CoalitionalNecessaryVariant::ZeroNormPerCapitaCoalitionalMean => {
                "necessary-zero-norm-per-capita-coalitional-mean"
            }
        }
    }

    fn precondition(self, csg: &CSGame) -> bool {
        let g = csg.game();
        match self {
            CoalitionalNecessaryVariant::WeightedCoalitionalMean
            | CoalitionalNecessaryVariant::CoalitionalMean => true,
            CoalitionalNecessaryVariant::PerCapitaCoalitionalMean => g.worth(g.grand()) == 0.0,
            CoalitionalNecessaryVariant::ZeroNormPerCapitaCoalitionalMean => {
                let unions: f64 =
                    csg.partition().unions().iter().map(|u| g.worth(*u)).sum();
                g.worth(g.grand()) == unions
            }
        }
    }
}

fn coalitional_prescription(
    csg: &CSGame,
    i: usize,
    variant: CoalitionalNecessaryVariant,
) -> f64 {
    let (g, p) = (csg.game(), csg.partition());
    let m = p.len();
    let k = p.union_of(i);
    let pk = p.union(k);
    let pk_size = pk.len();
    let others = Coalition::grand(m).without(k);
    match variant {
        CoalitionalNecessaryVariant::WeightedCoalitionalMean => {
            let binom_unions = binomial_row(m - 1);
            let binom_members = binomial_row(pk_size - 1);
            let mut acc = 0.0;
            for r in others.subsets() {
                let base = p.merge(r);
                let outer = binom_unions[r.len()] as f64;
                // T = ∅ is skipped: its weight is undefined and a necessary
                // player makes the term vanish anyway.
                for t in pk.subsets() {
                    if t.is_empty() {
                        continue;
                    }
                    acc += g.worth(base | t) / (outer * binom_members[t.len() - 1] as f64);
                }
            }
            acc / (m * pk_size) as f64
        }
        CoalitionalNecessaryVariant::CoalitionalMean => {
            let mut acc = 0.0;
            for r in others.subsets() {
                let base = p.merge(r);
                for t in pk.subsets() {
                    acc += g.worth(base | t);
                }
            }
            acc / (1u64 << (m - 1 + pk_size - 1)) as f64
        }
        CoalitionalNecessaryVariant::PerCapitaCoalitionalMean => {
            let mut intra = 0.0;
            for r in others.subsets() {
                let base = p.merge(r);
                for t in pk.subsets() {
                    if t == pk || !t.contains(i) {
                        continue;
                    }
                    intra += g.worth(base | t) / t.len() as f64;
                }
            }
            let mut union_level = 0.0;
            for q in others.subsets() {
                let r = q.with(k);
                union_level += g.worth(p.merge(r)) / r.len() as f64;
            }
            (intra / (1u64 << (pk_size - 1)) as f64 + union_level / pk_size as f64)
                / (1u64 << (m - 1)) as f64
        }
        CoalitionalNecessaryVariant::ZeroNormPerCapitaCoalitionalMean => {
            let v0p = csg.partition_normalized();
            let singles: f64 =
                pk.players().map(|j| g.worth(Coalition::singleton(j))).sum();
            let mut intra = 0.0;
            for r in others.subsets() {
                let base = p.merge(r);
                // T ranges over proper subsets of the union; T = ∅ is
                // skipped because its per-capita share is undefined and the
                // normalized worth vanishes there for a necessary player.
                for t in pk.subsets() {
                    if t == pk || t.is_empty() {
                        continue;
                    }
                    intra += v0p.worth(base | t) / t.len() as f64;
                }
            }
            let mut union_level = 0.0;
            for r in Coalition::grand(m).subsets() {
                if r.is_empty() {
                    continue;
                }
                union_level += v0p.worth(p.merge(r)) / r.len() as f64;
            }
            g.worth(Coalition::singleton(i))
                + (g.worth(pk) - singles) / pk_size as f64
                + (intra / (1u64 << (pk_size - 1)) as f64 + union_level / pk_size as f64)
                    / (1u64 << (m - 1)) as f64
        }
    }
}

/// Largest gap between a necessary player's payoff and the coalitional
/// variant's prescribed average.
pub fn check_coalitional_necessary_property(
    f: impl Fn(&Game) -> Allocation,
    csg: &CSGame,
    variant: CoalitionalNecessaryVariant,
) -> Outcome {
    if !variant.precondition(csg) {
        return Outcome::Inapplicable;
    }
    let g = csg.game();
    let necessary: Vec<usize> = (0..g.n()).filter(|&i| g.is_necessary(i)).collect();
    if necessary.is_empty() {
        return Outcome::Vacuous;
    }
    let alloc = f(g);
    Outcome::Checked(
        necessary
            .iter()
            .map(|&i| (alloc[i] - coalitional_prescription(csg, i, variant)).abs())
            .fold(0.0, f64::max),
    )
}

/// `max_i |f_i(w) − a·f_i(v) − b_i|` for the scaled-and-translated game
/// `w = a·v + b`.
pub fn check_inv(
    f: impl Fn(&Game) -> Allocation,
    g: &Game,
    a: f64,
    b: &[f64],
) -> Result<f64, GameError> {
    let w = g.s_equivalent(a, b)?;
    let on_w = f(&w);
    let on_g = f(g);
    Ok((0..g.n())
        .map(|i| (on_w[i] - a * on_g[i] - b[i]).abs())
        .fold(0.0, f64::max))
}

/// Largest payoff drop suffered by a member of `t` when `v(t)` is raised by
/// `delta` (0 when nobody in `t` loses).
pub fn check_coalitional_monotonicity(
    f: impl Fn(&Game) -> Allocation,
    g: &Game,
    t: Coalition,
    delta: f64,
) -> f64 {
    debug_assert!(delta >= 0.0);
    let raised = g.with_worth(t, g.worth(t) + delta);
    let before = f(g);
    let after = f(&raised);
    t.players()
        .map(|i| (before[i] - after[i]).max(0.0))
        .fold(0.0, f64::max)
}

/// Largest gap between a union's payoff total and the union's payoff in the
/// quotient game under the trivial partition.
pub fn check_quotient_property(value: CoalitionalValue, csg: &CSGame) -> f64 {
    let alloc = value.compute(csg);
    let quotient = csg.quotient();
    let m = quotient.n();
    let quotient_csg = CSGame::new(quotient, Partition::singletons(m))
        .expect("quotient matches its singleton partition");
    let quotient_alloc = value.compute(&quotient_csg);
    csg.partition()
        .unions()
        .iter()
        .enumerate()
        .map(|(k, u)| {
            let total: f64 = u.players().map(|i| alloc[i]).sum();
            (total - quotient_alloc[k]).abs()
        })
        .fold(0.0, f64::max)
}

/// Symmetry checks for coalition structures: the largest payoff gap over
/// symmetric same-union player pairs, and the largest union-total gap over
/// symmetric union pairs.
pub fn check_union_symmetries(
    f: impl Fn(&Game) -> Allocation,
    csg: &CSGame,
) -> (Outcome, Outcome) {
    let (g, p) = (csg.game(), csg.partition());
    let n = g.n();
    let m = p.len();

    let mut inside_pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if p.union_of(i) == p.union_of(j) && g.are_symmetric(i, j).expect("distinct") {
                inside_pairs.push((i, j));
            }
        }
    }
    let mut union_pairs = Vec::new();
    for k in 0..m {
        for l in k + 1..m {
            if csg.are_symmetric_unions(k, l).expect("distinct") {
                union_pairs.push((k, l));
            }
        }
    }
    if inside_pairs.is_empty() && union_pairs.is_empty() {
        return (Outcome::Vacuous, Outcome::Vacuous);
    }

    let alloc = f(g);
    let inside = if inside_pairs.is_empty() {
        Outcome::Vacuous
    } else {
        Outcome::Checked(
            inside_pairs
                .iter()
                .map(|(i, j)| (alloc[*i] - alloc[*j]).abs())
                .fold(0.0, f64::max),
        )
    };
    let among = if union_pairs.is_empty() {
        Outcome::Vacuous
    } else {
        let totals: Vec<f64> = p
            .unions()
            .iter()
            .map(|u| u.players().map(|i| alloc[i]).sum())
            .collect();
        Outcome::Checked(
            union_pairs
                .iter()
                .map(|(k, l)| (totals[*k] - totals[*l]).abs())
                .fold(0.0, f64::max),
        )
    };
    (inside, among)
}

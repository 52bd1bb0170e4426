//! Theorem-bundle audits: run a value against the axiom set that
//! characterizes it, over seeded random games.
//!
//! Satisfaction is what gets tested — uniqueness is a pen-and-paper fact
//! that sampling cannot reproduce, so the audits pair each value's passing
//! bundle with negative controls (mismatched pairings that must fail).

pub mod checks;
pub mod gen;

use std::fmt;
use std::ops::RangeInclusive;

use thiserror::Error;

use crate::coalition::Coalition;
use crate::game::Game;
use crate::par::map_indexed;
use crate::partition::{CSGame, Partition};
use crate::values::{Allocation, ValueKind};

use checks::{CoalitionalNecessaryVariant, NecessaryVariant, Outcome};
use gen::{
    force_necessary, force_null, game_digest, random_partition_with, symmetrize_players,
    symmetrize_unions, GameClass, GameGen, SplitMix64,
};

/// Absolute tolerance for every audit check. Game worths are drawn from
/// [-10, 10], where exact identities hold to well below this threshold.
pub const AUDIT_TOLERANCE: f64 = 1e-9;

/// Largest player count the audit generators accept.
pub const AUDIT_MAX_PLAYERS: usize = 12;

/// The characterization bundles. `T1a`/`T1b` are the Shapley and Banzhaf
/// characterizations via necessary players; `T2`–`T4` cover the per-capita
/// family; `T5`–`T8` the coalitional values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    T1a,
    T1b,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
}

/// One axiom inside a bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    Additivity,
    NullPlayer,
    Efficiency,
    Symmetry,
    Necessary(NecessaryVariant),
    CoalitionalNecessary(CoalitionalNecessaryVariant),
    SymmetryInsideUnions,
    SymmetryAmongUnions,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Additivity => "additivity",
            Axiom::NullPlayer => "null-player",
            Axiom::Efficiency => "efficiency",
            Axiom::Symmetry => "symmetry",
            Axiom::Necessary(v) => v.name(),
            Axiom::CoalitionalNecessary(v) => v.name(),
            Axiom::SymmetryInsideUnions => "symmetry-inside-unions",
            Axiom::SymmetryAmongUnions => "symmetry-among-unions",
        }
    }
}

impl Theorem {
    pub const ALL: [Theorem; 9] = [
        Theorem::T1a,
        Theorem::T1b,
        Theorem::T2,
        Theorem::T3,
        Theorem::T4,
        Theorem::T5,
        Theorem::T6,
        Theorem::T7,
        Theorem::T8,
    ];

    pub fn parse(tag: &str) -> Option<Theorem> {
        Theorem::ALL
            .iter()
            .find(|t| t.tag().eq_ignore_ascii_case(tag))
            .copied()
    }

    pub fn tag(self) -> &'static str {
        match self {
            Theorem::T1a => "T1a",
            Theorem::T1b => "T1b",
            Theorem::T2 => "T2",
            Theorem::T3 => "T3",
            Theorem::T4 => "T4",
            Theorem::T5 => "T5",
            Theorem::T6 => "T6",
            Theorem::T7 => "T7",
            Theorem::T8 => "T8",
        }
    }

    pub fn is_coalitional(self) -> bool {
        matches!(self, Theorem::T5 | Theorem::T6 | Theorem::T7 | Theorem::T8)
    }

    /// The value this bundle characterizes.
    pub fn matched_value(self) -> ValueKind {
        use crate::values::{CoalitionalValue::*, PointValue::*};
        match self {
            Theorem::T1a => ValueKind::Point(Shapley),
            Theorem::T1b => ValueKind::Point(Banzhaf),
            Theorem::T2 => ValueKind::Point(GValue),
            Theorem::T3 => ValueKind::Point(Gamma),
            Theorem::T4 => ValueKind::Point(BigGamma),
            Theorem::T5 => ValueKind::Coalitional(BanzhafOwen),
            Theorem::T6 => ValueKind::Coalitional(Owen),
            Theorem::T7 => ValueKind::Coalitional(GammaC),
            Theorem::T8 => ValueKind::Coalitional(BigGammaC),
        }
    }

    pub fn axioms(self) -> &'static [Axiom] {
        match self {
            Theorem::T1a => &[
                Axiom::Additivity,
                Axiom::NullPlayer,
                Axiom::Necessary(NecessaryVariant::WeightedMean),
            ],
            Theorem::T1b => &[
                Axiom::Additivity,
                Axiom::NullPlayer,
                Axiom::Necessary(NecessaryVariant::Mean),
            ],
            Theorem::T2 => &[
                Axiom::Additivity,
                Axiom::Necessary(NecessaryVariant::WeakMean),
                Axiom::Efficiency,
                Axiom::Symmetry,
            ],
            Theorem::T3 => &[
                Axiom::Additivity,
                Axiom::Necessary(NecessaryVariant::PerCapitaMean),
                Axiom::Efficiency,
                Axiom::Symmetry,
            ],
            Theorem::T4 => &[
                Axiom::Additivity,
                Axiom::Necessary(NecessaryVariant::ZeroNormPerCapitaMean),
                Axiom::Efficiency,
                Axiom::Symmetry,
            ],
            Theorem::T5 => &[
                Axiom::Additivity,
                Axiom::NullPlayer,
                Axiom::CoalitionalNecessary(CoalitionalNecessaryVariant::CoalitionalMean),
            ],
            Theorem::T6 => &[
                Axiom::Additivity,
                Axiom::NullPlayer,
                Axiom::CoalitionalNecessary(CoalitionalNecessaryVariant::WeightedCoalitionalMean),
            ],
            Theorem::T7 => &[
                Axiom::Additivity,
                Axiom::CoalitionalNecessary(CoalitionalNecessaryVariant::PerCapitaCoalitionalMean),
                Axiom::Efficiency,
                Axiom::SymmetryInsideUnions,
                Axiom::SymmetryAmongUnions,
            ],
            Theorem::T8 => &[
                Axiom::Additivity,
                Axiom::CoalitionalNecessary(
                    CoalitionalNecessaryVariant::ZeroNormPerCapitaCoalitionalMean,
                ),
                Axiom::Efficiency,
                Axiom::SymmetryInsideUnions,
                Axiom::SymmetryAmongUnions,
            ],
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// One axiom violation above tolerance.
#[derive(Clone, Debug)]
pub struct Failure {
    pub trial: usize,
    pub game_digest: String,
    pub axiom: String,
    pub magnitude: f64,
}

/// Result of auditing one value against one bundle.
#[derive(Clone, Debug)]
pub struct AuditReport {
    pub value: ValueKind,
    pub theorem: Theorem,
    pub trials: usize,
    pub tolerance: f64,
    pub failures: Vec<Failure>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AuditError {
    #[error("value {value} is {value_arity} but theorem {theorem} characterizes a {theorem_arity} value")]
    ArityMismatch {
        value: String,
        theorem: String,
        value_arity: &'static str,
        theorem_arity: &'static str,
    },
    #[error("audit player counts must stay within 1..={AUDIT_MAX_PLAYERS}, got {lo}..={hi}")]
    PlayersOutOfRange { lo: usize, hi: usize },
}

/// Runs every axiom of `theorem`'s bundle against `value` on `trials`
/// freshly generated games with player counts drawn from `players`.
///
/// Each axiom draws its own game (and partition, for coalitional bundles)
/// from a stream derived from `(seed, trial, axiom)`, with whatever
/// structure the axiom's hypothesis needs forced in: a necessary or null
/// player, a symmetric pair, symmetric unions, or an exactly met
/// precondition. Trials run independently (in parallel under the default
/// feature) and the failure list is ordered by trial index regardless of
/// execution order.
pub fn audit(
    value: ValueKind,
    theorem: Theorem,
    trials: usize,
    players: RangeInclusive<usize>,
    seed: u64,
) -> Result<AuditReport, AuditError> {
    let arity = |coalitional: bool| if coalitional { "coalitional" } else { "point" };
    if value.is_coalitional() != theorem.is_coalitional() {
        return Err(AuditError::ArityMismatch {
            value: value.tag().to_string(),
            theorem: theorem.tag().to_string(),
            value_arity: arity(value.is_coalitional()),
            theorem_arity: arity(theorem.is_coalitional()),
        });
    }
    let (lo, hi) = (*players.start(), *players.end());
    if lo == 0 || hi > AUDIT_MAX_PLAYERS || lo > hi {
        return Err(AuditError::PlayersOutOfRange { lo, hi });
    }

    let axioms = theorem.axioms();
    let per_trial: Vec<Vec<Failure>> = map_indexed(trials, trials > 1, |trial| {
        run_trial(value, axioms, trial, lo, hi, seed)
    });
    Ok(AuditReport {
        value,
        theorem,
        trials,
        tolerance: AUDIT_TOLERANCE,
        failures: per_trial.into_iter().flatten().collect(),
    })
}

fn run_trial(
    value: ValueKind,
    axioms: &[Axiom],
    trial: usize,
    lo: usize,
    hi: usize,
    seed: u64,
) -> Vec<Failure> {
    let trial_seed = SplitMix64::derive(seed, trial as u64).next_u64();
    let n = lo + SplitMix64::derive(trial_seed, u64::MAX).below(hi - lo + 1);
    let mut failures = Vec::new();
    for (idx, axiom) in axioms.iter().enumerate() {
        let mut rng = SplitMix64::derive(trial_seed, idx as u64);
        let (digest, outcome) = run_axiom(value, *axiom, n, &mut rng);
        match outcome {
            Outcome::Checked(magnitude) if magnitude <= AUDIT_TOLERANCE => {}
            Outcome::Checked(magnitude) => failures.push(Failure {
                trial,
                game_digest: digest,
                axiom: axiom.name().to_string(),
                magnitude,
            }),
            // Generators force the structure each hypothesis needs, so a
            // vacuous or inapplicable check is a generator defect; surface
            // it loudly instead of passing. The sole genuine case is a
            // symmetry axiom on a one-player game.
            Outcome::Vacuous | Outcome::Inapplicable => {
                let symmetry_axiom = matches!(
                    axiom,
                    Axiom::Symmetry | Axiom::SymmetryInsideUnions | Axiom::SymmetryAmongUnions
                );
                if !(symmetry_axiom && n < 2) {
                    failures.push(Failure {
                        trial,
                        game_digest: digest,
                        axiom: format!("{} ({:?})", axiom.name(), outcome),
                        magnitude: f64::INFINITY,
                    });
                }
            }
        }
    }
    failures
}

fn uniform(n: usize, rng: &mut SplitMix64) -> Game {
    GameGen::new(0, n, GameClass::Uniform)
        .generate_with(rng)
        .expect("audit player counts are validated")
}

fn evaluator(value: ValueKind, partition: &Partition) -> impl Fn(&Game) -> Allocation + '_ {
    move |g: &Game| {
        value.compute(
            &CSGame::new(g.clone(), partition.clone()).expect("generator matches player count"),
        )
    }
}

/// Builds the axiom-appropriate game(s) and runs the check. Returns the
/// digest of the (primary) game checked.
fn run_axiom(
    value: ValueKind,
    axiom: Axiom,
    n: usize,
    rng: &mut SplitMix64,
) -> (String, Outcome) {
    let partition = if value.is_coalitional() {
        random_partition_with(n, rng)
    } else {
        Partition::singletons(n)
    };

    match axiom {
        Axiom::Additivity => {
            let g1 = uniform(n, rng);
            let g2 = uniform(n, rng);
            let violation = checks::check_additivity(evaluator(value, &partition), &g1, &g2)
                .expect("both games share the player count");
            (game_digest(&g1), Outcome::Checked(violation))
        }
        Axiom::NullPlayer => {
            let chosen = rng.below(n);
            let g = force_null(&uniform(n, rng), chosen);
            let outcome = checks::check_null_player(evaluator(value, &partition), &g);
            (game_digest(&g), outcome)
        }
        Axiom::Efficiency => {
            let g = uniform(n, rng);
            let violation = checks::check_efficiency(evaluator(value, &partition), &g);
            (game_digest(&g), Outcome::Checked(violation))
        }
        Axiom::Symmetry => {
            if n < 2 {
                return (String::new(), Outcome::Vacuous);
            }
            let i = rng.below(n);
            let j = (i + 1 + rng.below(n - 1)) % n;
            let g = symmetrize_players(&uniform(n, rng), i, j);
            let outcome = checks::check_symmetry(evaluator(value, &partition), &g);
            (game_digest(&g), outcome)
        }
        Axiom::Necessary(variant) => {
            let chosen = rng.below(n);
            let g = apply_point_precondition(force_necessary(&uniform(n, rng), chosen), variant);
            let outcome =
                checks::check_necessary_property(evaluator(value, &partition), &g, variant);
            (game_digest(&g), outcome)
        }
        Axiom::CoalitionalNecessary(variant) => {
            let chosen = rng.below(n);
            let g = force_necessary(&uniform(n, rng), chosen);
            let g = apply_coalitional_precondition(g, &partition, variant);
            let csg = CSGame::new(g.clone(), partition.clone()).expect("matching player count");
            let outcome = checks::check_coalitional_necessary_property(
                evaluator(value, &partition),
                &csg,
                variant,
            );
            (game_digest(&g), outcome)
        }
        Axiom::SymmetryInsideUnions => {
            if n < 2 {
                return (String::new(), Outcome::Vacuous);
            }
            let partition = with_nontrivial_union(partition);
            let k = (0..partition.len())
                .find(|&k| partition.union(k).len() >= 2)
                .expect("a union with two members exists for n >= 2");
            let members: Vec<usize> = partition.union(k).players().collect();
            let i = members[rng.below(members.len())];
            let j = loop {
                let cand = members[rng.below(members.len())];
                if cand != i {
                    break cand;
                }
            };
            let g = symmetrize_players(&uniform(n, rng), i, j);
            let csg = CSGame::new(g.clone(), partition.clone()).expect("matching player count");
            let (inside, _) = checks::check_union_symmetries(evaluator(value, &partition), &csg);
            (game_digest(&g), inside)
        }
        Axiom::SymmetryAmongUnions => {
            if n < 2 {
                return (String::new(), Outcome::Vacuous);
            }
            let partition = with_split_union(partition, n);
            let k = rng.below(partition.len());
            let l = (k + 1 + rng.below(partition.len() - 1)) % partition.len();
            let base = CSGame::new(uniform(n, rng), partition.clone()).expect("matching n");
            let csg = symmetrize_unions(&base, k, l);
            let (_, among) = checks::check_union_symmetries(evaluator(value, &partition), &csg);
            (game_digest(csg.game()), among)
        }
    }
}

fn apply_point_precondition(g: Game, variant: NecessaryVariant) -> Game {
    match variant {
        NecessaryVariant::WeightedMean | NecessaryVariant::Mean => g,
        NecessaryVariant::WeakMean | NecessaryVariant::PerCapitaMean => {
            g.with_worth(g.grand(), 0.0)
        }
        NecessaryVariant::ZeroNormPerCapitaMean => {
            let singles: f64 = (0..g.n()).map(|j| g.worth(Coalition::singleton(j))).sum();
            g.with_worth(g.grand(), singles)
        }
    }
}

fn apply_coalitional_precondition(
    g: Game,
    p: &Partition,
    variant: CoalitionalNecessaryVariant,
) -> Game {
    match variant {
        CoalitionalNecessaryVariant::WeightedCoalitionalMean
        | CoalitionalNecessaryVariant::CoalitionalMean => g,
        CoalitionalNecessaryVariant::PerCapitaCoalitionalMean => g.with_worth(g.grand(), 0.0),
        CoalitionalNecessaryVariant::ZeroNormPerCapitaCoalitionalMean => {
            let unions: f64 = p.unions().iter().map(|u| g.worth(*u)).sum();
            g.with_worth(g.grand(), unions)
        }
    }
}

/// Guarantees some union has at least two members (merges the last two
/// unions of an all-singleton partition).
fn with_nontrivial_union(p: Partition) -> Partition {
    if p.unions().iter().any(|u| u.len() >= 2) {
        return p;
    }
    let mut unions = p.unions().to_vec();
    let last = unions.pop().expect("partitions are non-empty");
    let merged = *unions.last().expect("n >= 2 gives two unions") | last;
    *unions.last_mut().expect("non-empty") = merged;
    Partition::new(p.n(), unions).expect("merging unions keeps a valid partition")
}

/// Guarantees at least two unions (splits the first player out of a
/// one-union partition).
fn with_split_union(p: Partition, n: usize) -> Partition {
    if p.len() >= 2 {
        return p;
    }
    let first = Coalition::singleton(0);
    let rest = Coalition::grand(n) - first;
    Partition::new(n, vec![first, rest]).expect("n >= 2 splits into two unions")
}

/// The efficiency gap forced by paying every necessary player the plain
/// mean: on the basis game of the grand coalition every player is
/// necessary and prescribed `1/2^{n−1}`, so the prescriptions total
/// `n/2^{n−1}` while the grand coalition is worth 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeanIncompatibility {
    pub n: usize,
    /// Sum of the mean prescriptions over all players.
    pub prescribed_total: f64,
    /// The efficient total `v(N)`.
    pub efficient_total: f64,
}

pub fn mean_incompatibility(n: usize) -> Result<MeanIncompatibility, crate::GameError> {
    let g = Game::basis(n, Coalition::grand(n))?;
    debug_assert!((0..n).all(|i| g.is_necessary(i)));
    let prescribed_total = (0..n)
        .map(|i| checks::necessary_prescription(&g, i, NecessaryVariant::Mean))
        .sum();
    Ok(MeanIncompatibility {
        n,
        prescribed_total,
        efficient_total: g.worth(g.grand()),
    })
}

//! Per-player payoff vectors and the values that produce them.

pub mod classic;
pub mod coalitional;
pub mod novel;

use std::fmt;

use crate::{CSGame, Game};

/// A per-player payoff vector, one entry per player.
#[derive(Clone, Debug, PartialEq)]
pub struct Allocation(Vec<f64>);

impl Allocation {
    pub fn from_payoffs(payoffs: Vec<f64>) -> Allocation {
        debug_assert!(payoffs.iter().all(|x| x.is_finite()));
        Allocation(payoffs)
    }

    pub fn payoffs(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> f64 {
        self.0.iter().sum()
    }

    /// Largest per-player absolute difference against another allocation.
    pub fn max_gap(&self, other: &Allocation) -> f64 {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl std::ops::Index<usize> for Allocation {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

/// Values defined on plain games.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointValue {
    Shapley,
    Banzhaf,
    EqualDivision,
    EqualSurplusDivision,
    GValue,
    Gamma,
    BigGamma,
}

/// Values defined on games with a coalition structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoalitionalValue {
    Owen,
    BanzhafOwen,
    GammaC,
    BigGammaC,
    EdU,
    Esd2U,
}

/// Any supported value, tagged by arity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ValueKind {
    Point(PointValue),
    Coalitional(CoalitionalValue),
}

impl PointValue {
    pub const ALL: [PointValue; 7] = [
        PointValue::Shapley,
        PointValue::Banzhaf,
        PointValue::EqualDivision,
        PointValue::EqualSurplusDivision,
        PointValue::GValue,
        PointValue::Gamma,
        PointValue::BigGamma,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            PointValue::Shapley => "shapley",
            PointValue::Banzhaf => "banzhaf",
            PointValue::EqualDivision => "ed",
            PointValue::EqualSurplusDivision => "esd",
            PointValue::GValue => "g",
            PointValue::Gamma => "gamma",
            PointValue::BigGamma => "big-gamma",
        }
    }

    pub fn compute(self, g: &Game) -> Allocation {
        match self {
            PointValue::Shapley => classic::shapley(g),
            PointValue::Banzhaf => classic::banzhaf(g),
            PointValue::EqualDivision => classic::equal_division(g),
            PointValue::EqualSurplusDivision => classic::equal_surplus_division(g),
            PointValue::GValue => novel::g_value(g),
            PointValue::Gamma => novel::gamma_value(g),
            PointValue::BigGamma => novel::big_gamma_value(g),
        }
    }
}

impl CoalitionalValue {
    pub const ALL: [CoalitionalValue; 6] = [
        CoalitionalValue::Owen,
        CoalitionalValue::BanzhafOwen,
        CoalitionalValue::GammaC,
        CoalitionalValue::BigGammaC,
        CoalitionalValue::EdU,
        CoalitionalValue::Esd2U,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            CoalitionalValue::Owen => "owen",
            CoalitionalValue::BanzhafOwen => "banzhaf-owen",
            CoalitionalValue::GammaC => "gamma-c",
            CoalitionalValue::BigGammaC => "big-gamma-c",
            CoalitionalValue::EdU => "ed-u",
            CoalitionalValue::Esd2U => "esd2-u",
        }
    }

    pub fn compute(self, csg: &CSGame) -> Allocation {
        match self {
            CoalitionalValue::Owen => coalitional::owen(csg),
            CoalitionalValue::BanzhafOwen => coalitional::banzhaf_owen(csg),
            CoalitionalValue::GammaC => coalitional::gamma_c(csg),
            CoalitionalValue::BigGammaC => coalitional::big_gamma_c(csg),
            CoalitionalValue::EdU => coalitional::ed_u(csg),
            CoalitionalValue::Esd2U => coalitional::esd2_u(csg),
        }
    }
}

impl ValueKind {
    pub fn parse(tag: &str) -> Option<ValueKind> {
        PointValue::ALL
            .iter()
            .find(|v| v.tag() == tag)
            .map(|v| ValueKind::Point(*v))
            .or_else(|| {
                CoalitionalValue::ALL
                    .iter()
                    .find(|v| v.tag() == tag)
                    .map(|v| ValueKind::Coalitional(*v))
            })
    }

    pub fn tag(self) -> &'static str {
        match self {
            ValueKind::Point(v) => v.tag(),
            ValueKind::Coalitional(v) => v.tag(),
        }
    }

    pub fn is_coalitional(self) -> bool {
        matches!(self, ValueKind::Coalitional(_))
    }

    /// Evaluates the value; point values ignore the partition.
    pub fn compute(self, csg: &CSGame) -> Allocation {
        match self {
            ValueKind::Point(v) => v.compute(csg.game()),
            ValueKind::Coalitional(v) => v.compute(csg),
        }
    }
}

impl fmt::Display for ValueKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tag_round_trip() {
        for v in PointValue::ALL {
            assert_eq!(ValueKind::parse(v.tag()), Some(ValueKind::Point(v)));
        }
        for v in CoalitionalValue::ALL {
            assert_eq!(ValueKind::parse(v.tag()), Some(ValueKind::Coalitional(v)));
        }
        assert_eq!(ValueKind::parse("nucleolus"), None);
    }

    #[test]
    fn allocation_accessors() {
        let a = Allocation::from_payoffs(vec![1.0, 2.0, 3.0]);
        assert_eq!(a.total(), 6.0);
        assert_eq!(a[1], 2.0);
        let b = Allocation::from_payoffs(vec![1.0, 2.5, 3.0]);
        assert_eq!(a.max_gap(&b), 0.5);
    }
}

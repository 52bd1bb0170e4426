//! The per-capita value family for plain games: the mean-based value `G`,
//! the per-capita value `gamma` and its translation-covariant adjustment
//! `big_gamma`.

use crate::coalition::Coalition;
use crate::game::Game;
use crate::par::{map_indexed, PLAYER_PAR_THRESHOLD};
use crate::values::Allocation;

/// `G_i = (1/2^{n−1})·[Σ_{S⊊N, i∈S} v(S) − Σ_{S⊊N, i∉S} (s/(n−s))·v(S)] + v(N)/n`.
pub fn g_value_player(g: &Game, i: usize) -> f64 {
    let n = g.n();
    let grand = g.grand();
    let mut member = 0.0;
    let mut outside = 0.0;
    // Proper non-empty subsets only; the empty coalition is worth 0 and the
    // grand coalition enters through the v(N)/n term.
    for s in grand.subsets() {
        if s.is_empty() || s == grand {
            continue;
        }
        let size = s.len();
        if s.contains(i) {
            member += g.worth(s);
        } else {
            outside += g.worth(s) * (size as f64 / (n - size) as f64);
        }
    }
    (member - outside) / (1u64 << (n - 1)) as f64 + g.worth(grand) / n as f64
}

pub fn g_value(g: &Game) -> Allocation {
    let payoffs = map_indexed(g.n(), g.n() >= PLAYER_PAR_THRESHOLD, |i| g_value_player(g, i));
    Allocation::from_payoffs(payoffs)
}

/// `γ_i = (1/2^{n−1})·[Σ_{S⊊N, i∈S} v(S)/s − Σ_{S⊊N, i∉S} v(S)/(n−s)] + v(N)/n`.
///
/// Both denominators stay at least 1 because `S` ranges over proper
/// non-empty subsets.
pub fn gamma_value_player(g: &Game, i: usize) -> f64 {
    let n = g.n();
    let grand = g.grand();
    let mut member = 0.0;
    let mut outside = 0.0;
    for s in grand.subsets() {
        if s.is_empty() || s == grand {
            continue;
        }
        let size = s.len();
        if s.contains(i) {
            member += g.worth(s) / size as f64;
        } else {
            outside += g.worth(s) / (n - size) as f64;
        }
    }
    (member - outside) / (1u64 << (n - 1)) as f64 + g.worth(grand) / n as f64
}

pub fn gamma_value(g: &Game) -> Allocation {
    let payoffs = map_indexed(g.n(), g.n() >= PLAYER_PAR_THRESHOLD, |i| gamma_value_player(g, i));
    Allocation::from_payoffs(payoffs)
}

/// `Γ_i = v({i}) + γ_i(N, v⁰)`: gamma applied to the zero-normalization,
/// shifted back by the singleton worths. The composition makes the value
/// invariant to positive scaling plus per-player translation.
pub fn big_gamma_value(g: &Game) -> Allocation {
    let v0 = g.zero_normalized();
    let payoffs = map_indexed(g.n(), g.n() >= PLAYER_PAR_THRESHOLD, |i| {
        g.worth(Coalition::singleton(i)) + gamma_value_player(&v0, i)
    });
    Allocation::from_payoffs(payoffs)
}

pub fn big_gamma_player(g: &Game, i: usize) -> f64 {
    g.worth(Coalition::singleton(i)) + gamma_value_player(&g.zero_normalized(), i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testgames::{elevator_c, elevator_d};

    const TOL: f64 = 1e-9;

    fn assert_close(got: &Allocation, want: &[f64]) {
        assert_eq!(got.len(), want.len());
        for (a, b) in got.payoffs().iter().zip(want) {
            assert!((a - b).abs() <= TOL, "got {got:?}, want {want:?}");
        }
    }

    fn c(mask: u64) -> Coalition {
        Coalition::from_mask(mask)
    }

    #[test]
    fn g_value_on_basis_games() {
        let e1 = Game::basis(3, c(0b001)).unwrap();
        assert_close(&g_value(&e1), &[0.25, -0.125, -0.125]);
        assert!(g_value(&e1).total().abs() <= TOL);

        let e_n = Game::basis(3, c(0b111)).unwrap();
        assert_close(&g_value(&e_n), &[1.0 / 3.0; 3]);
    }

    #[test]
    fn g_value_pays_necessary_players_the_mean_when_grand_is_zero() {
        // e_{1} has v(N)=0 and player 0 necessary; the payoff must be the
        // plain average of the worths of the coalitions containing it.
        let e1 = Game::basis(3, c(0b001)).unwrap();
        assert!((g_value_player(&e1, 0) - 0.25).abs() <= TOL);
    }

    #[test]
    fn gamma_on_basis_games() {
        let e12 = Game::basis(3, c(0b011)).unwrap();
        assert_close(&gamma_value(&e12), &[0.125, 0.125, -0.25]);

        let e_n = Game::basis(3, c(0b111)).unwrap();
        assert_close(&gamma_value(&e_n), &[1.0 / 3.0; 3]);
    }

    #[test]
    fn gamma_on_two_player_additive_game() {
        let g = Game::from_entries(
            2,
            [(c(0b01), 3.0), (c(0b10), 5.0), (c(0b11), 8.0)],
        )
        .unwrap();
        assert_close(&gamma_value(&g), &[3.0, 5.0]);
    }

    #[test]
    fn gamma_on_elevator() {
        assert_close(&gamma_value(&elevator_c()), &[35.0, 38.75, 46.25]);
    }

    #[test]
    fn big_gamma_elevator_tables() {
        assert_close(&big_gamma_value(&elevator_c()), &[32.5, 38.75, 48.75]);
        assert_close(
            &big_gamma_value(&elevator_d()),
            &[-20.0 / 3.0, 160.0 / 3.0, 190.0 / 3.0],
        );
    }

    #[test]
    fn big_gamma_on_additive_game_returns_singletons() {
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
        assert_close(&big_gamma_value(&g), &[2.0, -1.0, 4.0]);
    }

    #[test]
    fn one_player_convention() {
        let g = Game::from_entries(1, [(Coalition::singleton(0), 7.0)]).unwrap();
        assert_close(&g_value(&g), &[7.0]);
        assert_close(&gamma_value(&g), &[7.0]);
        assert_close(&big_gamma_value(&g), &[7.0]);
    }

    #[test]
    fn efficiency_on_examples() {
        for g in [elevator_c(), elevator_d()] {
            let grand_worth = g.worth(g.grand());
            assert!((g_value(&g).total() - grand_worth).abs() <= TOL);
            assert!((gamma_value(&g).total() - grand_worth).abs() <= TOL);
            assert!((big_gamma_value(&g).total() - grand_worth).abs() <= TOL);
        }
    }
}

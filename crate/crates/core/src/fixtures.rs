//! Named example networks used throughout the test suites and benchmarks.
//!
//! Species order is fixed per fixture so that rendered forms, matrices, and
//! verdicts are deterministic.

use crate::net_core::{Complex, Network, Reaction, Strictness};

fn strict(labels: Vec<&str>, reactions: Vec<Reaction>) -> Network {
    Network::new(labels, reactions, Strictness::StrictInteger).expect("fixture is well-formed")
}

/// `{B -> A, nA+B -> (n-1)A+2B}` over species `[A, B]`.
///
/// One-dimensional, deficiency 1, stable ACR in `A` with value
/// `(k1/k2)^(1/n)`; the canonical target of the two-species
/// canonicalization.
pub fn generalized_sf(n: i64) -> Network {
    assert!(n >= 1);
    strict(
        vec!["A", "B"],
        vec![
            Reaction::new(Complex::from_integers([(1, 1)]), Complex::from_integers([(0, 1)])),
            Reaction::new(
                Complex::from_integers([(0, n), (1, 1)]),
                Complex::from_integers([(0, n - 1), (1, 2)]),
            ),
        ],
    )
}

/// `{A -> 2A, A+nB -> nB}` over species `[A, B]`.
///
/// `B` is catalyst-only; every positive steady state is degenerate, so the
/// network has ACR in `B` but not stable ACR.
pub fn degenerate_acr(n: i64) -> Network {
    assert!(n >= 1);
    strict(
        vec!["A", "B"],
        vec![
            Reaction::new(Complex::from_integers([(0, 1)]), Complex::from_integers([(0, 2)])),
            Reaction::new(
                Complex::from_integers([(0, 1), (1, n)]),
                Complex::from_integers([(1, n)]),
            ),
        ],
    )
}

/// `{0 -> mA, mA -> 0}` over species `[A]`: the one-species canonical family.
pub fn zero_to_ma(m: i64) -> Network {
    assert!(m >= 1);
    strict(
        vec!["A"],
        vec![
            Reaction::new(Complex::zero(), Complex::from_integers([(0, m)])),
            Reaction::new(Complex::from_integers([(0, m)]), Complex::zero()),
        ],
    )
}

/// `{B -> A, A+B -> 2B, 2A+B -> A+2B}` over species `[A, B]`.
///
/// One-dimensional with three reactions and stable ACR in `A`, while its
/// embedding onto `{B}` has a different deficiency (2 vs. 1) — the fixture
/// guarding against treating deficiency agreement as necessary for ACR.
pub fn one_dim_three_reactions() -> Network {
    strict(
        vec!["A", "B"],
        vec![
            Reaction::new(Complex::from_integers([(1, 1)]), Complex::from_integers([(0, 1)])),
            Reaction::new(
                Complex::from_integers([(0, 1), (1, 1)]),
                Complex::from_integers([(1, 2)]),
            ),
            Reaction::new(
                Complex::from_integers([(0, 2), (1, 1)]),
                Complex::from_integers([(0, 1), (1, 2)]),
            ),
        ],
    )
}

/// `{5A+B -> 7A, 5A+3B -> A+5B}` over species `[A, B]`.
///
/// A generalized Shinar–Feinberg network in disguise: canonicalizing it
/// exercises all five operation kinds except duplication (relabel, stretch,
/// two partial scalings, translate) and lands on `generalized_sf(2)`.
pub fn disguised_sf2() -> Network {
    strict(
        vec!["A", "B"],
        vec![
            Reaction::new(
                Complex::from_integers([(0, 5), (1, 1)]),
                Complex::from_integers([(0, 7)]),
            ),
            Reaction::new(
                Complex::from_integers([(0, 5), (1, 3)]),
                Complex::from_integers([(0, 1), (1, 5)]),
            ),
        ],
    )
}

/// `{0 -> A, A -> B, B -> 0}` over species `[A, B]`: two-dimensional,
/// deficiency 0.
pub fn triangle() -> Network {
    strict(
        vec!["A", "B"],
        vec![
            Reaction::new(Complex::zero(), Complex::from_integers([(0, 1)])),
            Reaction::new(Complex::from_integers([(0, 1)]), Complex::from_integers([(1, 1)])),
            Reaction::new(Complex::from_integers([(1, 1)]), Complex::zero()),
        ],
    )
}

/// `{A1 -> 0, A1 -> 2A1, 2A1 -> A1, 3A1 -> 4A1}` over species `[A1]`.
///
/// One species, four reactions, arrow diagram `(B, R)` on reactants `{1, 3}`;
/// contains a 2-alternating subnetwork, hence no ACR, yet some rate choices
/// still give a unique positive steady state.
pub fn one_species_four_reactions() -> Network {
    let a = |c: i64| Complex::from_integers([(0, c)]);
    strict(
        vec!["A1"],
        vec![
            Reaction::new(a(1), Complex::zero()),
            Reaction::new(a(1), a(2)),
            Reaction::new(a(2), a(1)),
            Reaction::new(a(3), a(4)),
        ],
    )
}

/// `{0 -> A, A -> 2A}` over species `[A]`: no positive steady state for any
/// rates, so ACR holds vacuously.
pub fn birth_chain() -> Network {
    strict(
        vec!["A"],
        vec![
            Reaction::new(Complex::zero(), Complex::from_integers([(0, 1)])),
            Reaction::new(Complex::from_integers([(0, 1)]), Complex::from_integers([(0, 2)])),
        ],
    )
}

/// `{0 <=> A, 2A -> 3A}` over species `[A]`: the smallest 2-alternating
/// network, multistationary for suitable rates.
pub fn two_alternating() -> Network {
    let a = |c: i64| Complex::from_integers([(0, c)]);
    strict(
        vec!["A"],
        vec![
            Reaction::new(Complex::zero(), a(1)),
            Reaction::new(a(1), Complex::zero()),
            Reaction::new(a(2), a(3)),
        ],
    )
}

/// `{0 <=> A, 2A <=> 3A}` over species `[A]`: union of two ACR networks that
/// itself has no ACR.
pub fn union_of_acr_parts() -> Network {
    let a = |c: i64| Complex::from_integers([(0, c)]);
    strict(
        vec!["A"],
        vec![
            Reaction::new(Complex::zero(), a(1)),
            Reaction::new(a(1), Complex::zero()),
            Reaction::new(a(2), a(3)),
            Reaction::new(a(3), a(2)),
        ],
    )
}

/// `{0 <=> A, A -> 2A}` over species `[A]`: arrow diagram `(B, R)`, stable
/// ACR without the deficiency-1 criterion applying.
pub fn stable_one_species_mixed() -> Network {
    let a = |c: i64| Complex::from_integers([(0, c)]);
    strict(
        vec!["A"],
        vec![
            Reaction::new(Complex::zero(), a(1)),
            Reaction::new(a(1), Complex::zero()),
            Reaction::new(a(1), a(2)),
        ],
    )
}

/// `{0 -> A -> 2A, 3A <- 4A}` over species `[A]`: arrow diagram `(R, R, L)`,
/// so stable ACR, while its deficiency is 2 — the deficiency-1 criterion
/// cannot detect it.
pub fn acr_without_sf_criterion() -> Network {
    let a = |c: i64| Complex::from_integers([(0, c)]);
    strict(
        vec!["A"],
        vec![
            Reaction::new(Complex::zero(), a(1)),
            Reaction::new(a(1), a(2)),
            Reaction::new(a(4), a(3)),
        ],
    )
}

/// `{3A+5B -> A+6B, A+3B -> 3A+B}` over species `[A, B]`: the two reaction
/// vectors `(-2, 1)` and `(2, -2)` are independent, so the network is
/// two-dimensional, admits no positive steady state, and has no ACR.
pub fn no_acr_two_species() -> Network {
    strict(
        vec!["A", "B"],
        vec![
            Reaction::new(
                Complex::from_integers([(0, 3), (1, 5)]),
                Complex::from_integers([(0, 1), (1, 6)]),
            ),
            Reaction::new(
                Complex::from_integers([(0, 1), (1, 3)]),
                Complex::from_integers([(0, 3), (1, 1)]),
            ),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_render_as_expected() {
        assert_eq!(generalized_sf(1).render(), "B -> A\nA + B -> 2B");
        assert_eq!(generalized_sf(3).render(), "B -> A\n3A + B -> 2A + 2B");
        assert_eq!(degenerate_acr(1).render(), "A -> 2A\nA + B -> B");
        assert_eq!(zero_to_ma(2).render(), "0 -> 2A\n2A -> 0");
        assert_eq!(
            one_dim_three_reactions().render(),
            "B -> A\nA + B -> 2B\n2A + B -> A + 2B"
        );
        assert_eq!(disguised_sf2().render(), "5A + B -> 7A\n5A + 3B -> A + 5B");
        assert_eq!(one_species_four_reactions().render(), "A1 -> 0\nA1 -> 2A1\n2A1 -> A1\n3A1 -> 4A1");
        assert_eq!(no_acr_two_species().render(), "3A + 5B -> A + 6B\nA + 3B -> 3A + B");
    }
}

//! Generators for exhaustive sweeps over small network classes.
//!
//! Everything is emitted in a fixed lexicographic order so sweeps are
//! reproducible: complexes by coordinate tuples, reactions by
//! (reactant, product) index pairs, networks by index combinations.

use itertools::Itertools;

use crate::net_core::{Complex, Network, Reaction, Strictness};

const LABELS: [&str; 6] = ["A", "B", "C", "D", "E", "F"];

/// All complexes over the first `species_count` species with every
/// coordinate in `0..=max_coeff`.
pub fn complexes(species_count: usize, max_coeff: i64) -> Vec<Complex> {
    assert!(species_count >= 1 && species_count <= LABELS.len());
    assert!(max_coeff >= 0);
    (0..species_count)
        .map(|_| 0..=max_coeff)
        .multi_cartesian_product()
        .map(|coords| Complex::from_integers(coords.into_iter().enumerate()))
        .collect()
}

/// All reactions `y -> y'` with `y != y'` over [`complexes`], ordered by
/// (reactant, product) position.
pub fn reactions(species_count: usize, max_coeff: i64) -> Vec<Reaction> {
    let pool = complexes(species_count, max_coeff);
    pool.iter()
        .cartesian_product(pool.iter())
        .filter(|(y, z)| y != z)
        .map(|(y, z)| Reaction::new(y.clone(), z.clone()))
        .collect()
}

/// Every network with exactly `n_reactions` distinct reactions drawn from
/// the bounded-coefficient universe, one per unordered reaction set.
/// Species that no complex mentions stay in the network as catalyst-only
/// species; filter on [`Network::catalyst_only_species`] when a sweep
/// needs every species to move.
pub fn networks(
    species_count: usize,
    n_reactions: usize,
    max_coeff: i64,
) -> impl Iterator<Item = Network> {
    assert!(n_reactions >= 1);
    let labels: Vec<&str> = LABELS[..species_count].to_vec();
    reactions(species_count, max_coeff)
        .into_iter()
        .combinations(n_reactions)
        .map(move |chosen| {
            Network::new(labels.clone(), chosen, Strictness::StrictInteger)
                .expect("enumerated reactions are distinct, nontrivial, and integral")
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universe_sizes_match_the_combinatorics() {
        assert_eq!(complexes(1, 4).len(), 5);
        assert_eq!(reactions(1, 4).len(), 20);
        assert_eq!(networks(1, 1, 4).count(), 20);
        assert_eq!(networks(1, 2, 4).count(), 190);
        assert_eq!(networks(1, 3, 4).count(), 1140);

        assert_eq!(complexes(2, 4).len(), 25);
        assert_eq!(reactions(2, 4).len(), 600);
        assert_eq!(networks(2, 2, 1).count(), 66);
    }

    #[test]
    fn networks_are_valid_and_pairwise_distinct() {
        let mut renders = std::collections::BTreeSet::new();
        for net in networks(2, 2, 1) {
            assert_eq!(net.n_reactions(), 2);
            assert_eq!(net.n_species(), 2);
            assert!(renders.insert(net.render()), "duplicate: {}", net.render());
        }
        assert_eq!(renders.len(), 66);
    }

    #[test]
    fn enumeration_order_is_stable() {
        let first = networks(1, 2, 2).next().unwrap();
        assert_eq!(first.render(), "0 -> A\n0 -> 2A");
        let pool = complexes(2, 1);
        let rendered: Vec<String> = pool
            .iter()
            .map(|c| c.render(networks(2, 1, 1).next().unwrap().species()))
            .collect();
        assert_eq!(rendered, vec!["0", "B", "A", "A + B"]);
    }
}

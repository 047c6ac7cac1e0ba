//! Core reaction-network types and their structural invariants, all over
//! exact rational arithmetic.

pub mod matrix;
pub mod parse;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use matrix::RationalMatrix;

pub type SpeciesId = usize;

/// A named coordinate axis of the positive orthant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Species {
    pub id: SpeciesId,
    pub label: String,
}

/// Labels follow `[A-Za-z][A-Za-z0-9_]*`.
pub fn valid_species_label(label: &str) -> bool {
    let mut chars = label.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Coefficient strictness of a network: the classical integer setting, or
/// the rational relaxation produced by operation pipelines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Strictness {
    #[serde(rename = "strict-integer")]
    StrictInteger,
    #[serde(rename = "generalized-rational")]
    GeneralizedRational,
}

/// Formal combination of species; zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Complex {
    coeffs: BTreeMap<SpeciesId, BigRational>,
}

impl Complex {
    pub fn zero() -> Self {
        Complex::default()
    }

    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (SpeciesId, BigRational)>,
    {
        let mut coeffs: BTreeMap<SpeciesId, BigRational> = BTreeMap::new();
        for (id, c) in pairs {
            let entry = coeffs.entry(id).or_insert_with(BigRational::zero);
            *entry += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Complex { coeffs }
    }

    /// Convenience for integer-coefficient complexes.
    pub fn from_integers<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (SpeciesId, i64)>,
    {
        Complex::from_pairs(
            pairs
                .into_iter()
                .map(|(id, c)| (id, BigRational::from_integer(BigInt::from(c)))),
        )
    }

    pub fn coeff(&self, id: SpeciesId) -> BigRational {
        self.coeffs.get(&id).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (SpeciesId, &BigRational)> {
        self.coeffs.iter().map(|(id, c)| (*id, c))
    }

    pub fn support(&self) -> impl Iterator<Item = SpeciesId> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn all_integer(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    pub fn max_species_id(&self) -> Option<SpeciesId> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn translated(&self, z: &[BigInt]) -> Complex {
        let shifts = z
            .iter()
            .enumerate()
            .map(|(id, zi)| (id, BigRational::from_integer(zi.clone())));
        Complex::from_pairs(self.coeffs.clone().into_iter().chain(shifts))
    }

    /// Coefficients as a dense length-`s` vector.
    pub fn to_vec(&self, s: usize) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); s];
        for (id, c) in &self.coeffs {
            v[*id] = c.clone();
        }
        v
    }

    /// Replaces the coefficient of one species (dropping it when zero).
    pub fn with_coeff(&self, id: SpeciesId, c: BigRational) -> Complex {
        let mut coeffs = self.coeffs.clone();
        if c.is_zero() {
            coeffs.remove(&id);
        } else {
            coeffs.insert(id, c);
        }
        Complex { coeffs }
    }

    pub fn render(&self, species: &[Species]) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(id, c)| {
                let label = &species[*id].label;
                if c.is_one() {
                    label.clone()
                } else {
                    format!("{c}{label}")
                }
            })
            .collect();
        terms.join(" + ")
    }
}

/// Ordered pair of distinct complexes with a rate-constant label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reaction {
    pub reactant: Complex,
    pub product: Complex,
    pub rate_label: String,
}

impl Reaction {
    /// Label left empty here is auto-assigned (`k1`, `k2`, ...) on network
    /// construction.
    pub fn new(reactant: Complex, product: Complex) -> Self {
        Reaction { reactant, product, rate_label: String::new() }
    }

    pub fn with_label(reactant: Complex, product: Complex, rate_label: impl Into<String>) -> Self {
        Reaction { reactant, product, rate_label: rate_label.into() }
    }

    pub fn is_trivial(&self) -> bool {
        self.reactant == self.product
    }

    /// Identity for the "no duplicate reactions" rule: labels don't count.
    pub fn same_pair(&self, other: &Reaction) -> bool {
        self.reactant == other.reactant && self.product == other.product
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum NetworkError {
    #[error("invalid species label `{0}`")]
    InvalidSpeciesLabel(String),
    #[error("duplicate species label `{0}`")]
    DuplicateSpeciesLabel(String),
    #[error("reaction {0} references species id {1} outside the declared list")]
    UnknownSpecies(usize, SpeciesId),
    #[error("reaction {0} is trivial (reactant equals product)")]
    TrivialReaction(usize),
    #[error("reactions {0} and {1} are duplicates")]
    DuplicateReaction(usize, usize),
    #[error("reaction {0} has a negative coefficient")]
    NegativeCoefficient(usize),
    #[error("reaction {0} has a fractional coefficient in a strict-integer network")]
    FractionalCoefficient(usize),
    #[error("duplicate rate label `{0}`")]
    DuplicateRateLabel(String),
}

/// A mass-action reaction network: an ordered species list and an ordered,
/// duplicate-free reaction list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Network {
    species: Vec<Species>,
    reactions: Vec<Reaction>,
    strictness: Strictness,
}

impl Network {
    pub fn new<L: Into<String>>(
        labels: Vec<L>,
        mut reactions: Vec<Reaction>,
        strictness: Strictness,
    ) -> Result<Self, NetworkError> {
        let mut species = Vec::with_capacity(labels.len());
        let mut seen = BTreeSet::new();
        for (id, label) in labels.into_iter().enumerate() {
            let label = label.into();
            if !valid_species_label(&label) {
                return Err(NetworkError::InvalidSpeciesLabel(label));
            }
            if !seen.insert(label.clone()) {
                return Err(NetworkError::DuplicateSpeciesLabel(label));
            }
            species.push(Species { id, label });
        }
        let s = species.len();
        for (k, r) in reactions.iter().enumerate() {
            for c in [&r.reactant, &r.product] {
                if let Some(max) = c.max_species_id() {
                    if max >= s {
                        return Err(NetworkError::UnknownSpecies(k, max));
                    }
                }
                if !c.is_nonnegative() {
                    return Err(NetworkError::NegativeCoefficient(k));
                }
                if strictness == Strictness::StrictInteger && !c.all_integer() {
                    return Err(NetworkError::FractionalCoefficient(k));
                }
            }
            if r.is_trivial() {
                return Err(NetworkError::TrivialReaction(k));
            }
        }
        for i in 0..reactions.len() {
            for j in i + 1..reactions.len() {
                if reactions[i].same_pair(&reactions[j]) {
                    return Err(NetworkError::DuplicateReaction(i, j));
                }
            }
        }
        for (k, r) in reactions.iter_mut().enumerate() {
            if r.rate_label.is_empty() {
                r.rate_label = format!("k{}", k + 1);
            }
        }
        let mut labels_seen = BTreeSet::new();
        for r in &reactions {
            if !labels_seen.insert(r.rate_label.clone()) {
                return Err(NetworkError::DuplicateRateLabel(r.rate_label.clone()));
            }
        }
        Ok(Network { species, reactions, strictness })
    }

    /// Builds with strictness recomputed from the coefficients, so that
    /// operation pipelines ending on integer networks come back strict.
    pub fn with_auto_strictness<L: Into<String>>(
        labels: Vec<L>,
        reactions: Vec<Reaction>,
    ) -> Result<Self, NetworkError> {
        let all_integer = reactions
            .iter()
            .all(|r| r.reactant.all_integer() && r.product.all_integer());
        let strictness = if all_integer {
            Strictness::StrictInteger
        } else {
            Strictness::GeneralizedRational
        };
        Network::new(labels, reactions, strictness)
    }

    pub fn species(&self) -> &[Species] {
        &self.species
    }

    pub fn reactions(&self) -> &[Reaction] {
        &self.reactions
    }

    pub fn strictness(&self) -> Strictness {
        self.strictness
    }

    pub fn n_species(&self) -> usize {
        self.species.len()
    }

    pub fn n_reactions(&self) -> usize {
        self.reactions.len()
    }

    pub fn species_labels(&self) -> Vec<String> {
        self.species.iter().map(|sp| sp.label.clone()).collect()
    }

    pub fn species_by_label(&self, label: &str) -> Option<SpeciesId> {
        self.species.iter().find(|sp| sp.label == label).map(|sp| sp.id)
    }

    pub fn rate_labels(&self) -> Vec<String> {
        self.reactions.iter().map(|r| r.rate_label.clone()).collect()
    }

    /// Product-minus-reactant vector of reaction `k`.
    pub fn reaction_vector(&self, k: usize) -> Vec<BigRational> {
        let r = &self.reactions[k];
        let mut v = r.product.to_vec(self.n_species());
        for (id, c) in r.reactant.iter() {
            v[id] -= c;
        }
        v
    }

    /// `s x r` matrix whose column `k` is the reaction vector of reaction `k`.
    pub fn stoichiometric_matrix(&self) -> RationalMatrix {
        let s = self.n_species();
        let r = self.n_reactions();
        let mut m = RationalMatrix::zeros(s, r);
        for k in 0..r {
            for (i, c) in self.reaction_vector(k).into_iter().enumerate() {
                m.set(i, k, c);
            }
        }
        m
    }

    pub fn stoichiometric_dimension(&self) -> usize {
        self.stoichiometric_matrix().rank()
    }

    pub fn is_one_dimensional(&self) -> bool {
        self.stoichiometric_dimension() == 1
    }

    /// Row-reduced basis of the conservation laws `w` with `w . gamma = 0`.
    pub fn conservation_basis(&self) -> ConservationBasis {
        ConservationBasis { matrix: self.stoichiometric_matrix().left_kernel_rref() }
    }

    /// Species whose reactant and product coefficients agree in every
    /// reaction, i.e. the zero rows of the stoichiometric matrix.
    pub fn catalyst_only_species(&self) -> Vec<SpeciesId> {
        let gamma = self.stoichiometric_matrix();
        (0..self.n_species())
            .filter(|&i| (0..self.n_reactions()).all(|k| gamma.get(i, k).is_zero()))
            .collect()
    }

    /// The unique species the network moves, when the network is a
    /// (possibly translated) one-species network: every reaction changes
    /// only that species and all reactant complexes agree elsewhere.
    pub fn one_species(&self) -> Option<SpeciesId> {
        if self.reactions.is_empty() {
            return None;
        }
        let gamma = self.stoichiometric_matrix();
        let mut moving = None;
        for i in 0..self.n_species() {
            if (0..self.n_reactions()).any(|k| !gamma.get(i, k).is_zero()) {
                if moving.is_some() {
                    return None;
                }
                moving = Some(i);
            }
        }
        let i = moving?;
        let first = &self.reactions[0].reactant;
        for r in &self.reactions[1..] {
            for j in 0..self.n_species() {
                if j != i && r.reactant.coeff(j) != first.coeff(j) {
                    return None;
                }
            }
        }
        Some(i)
    }

    /// Distinct complexes in first-appearance order (reactant before
    /// product, reactions in order).
    pub fn complexes(&self) -> Vec<Complex> {
        let mut out: Vec<Complex> = Vec::new();
        for r in &self.reactions {
            for c in [&r.reactant, &r.product] {
                if !out.contains(c) {
                    out.push(c.clone());
                }
            }
        }
        out
    }

    /// Distinct reactant complexes in first-appearance order.
    pub fn reactant_complexes(&self) -> Vec<Complex> {
        let mut out: Vec<Complex> = Vec::new();
        for r in &self.reactions {
            if !out.contains(&r.reactant) {
                out.push(r.reactant.clone());
            }
        }
        out
    }

    /// Drops species that appear in no complex, reindexing the rest.
    pub fn prune_inert(&self) -> Network {
        let mut used = BTreeSet::new();
        for r in &self.reactions {
            used.extend(r.reactant.support());
            used.extend(r.product.support());
        }
        let kept: Vec<SpeciesId> = (0..self.n_species()).filter(|i| used.contains(i)).collect();
        let remap: BTreeMap<SpeciesId, SpeciesId> =
            kept.iter().enumerate().map(|(new, old)| (*old, new)).collect();
        let labels: Vec<String> = kept.iter().map(|&i| self.species[i].label.clone()).collect();
        let reactions = self
            .reactions
            .iter()
            .map(|r| Reaction {
                reactant: remap_complex(&r.reactant, &remap),
                product: remap_complex(&r.product, &remap),
                rate_label: r.rate_label.clone(),
            })
            .collect();
        Network::new(labels, reactions, self.strictness)
            .expect("pruning preserves network validity")
    }

    /// Species labels and reaction pairs agree; rate labels are ignored.
    pub fn structurally_eq(&self, other: &Network) -> bool {
        self.species_labels() == other.species_labels()
            && self.reactions.len() == other.reactions.len()
            && self
                .reactions
                .iter()
                .zip(&other.reactions)
                .all(|(a, b)| a.same_pair(b))
    }

    /// Same species labels and the same reaction pairs up to order.
    pub fn same_reaction_set(&self, other: &Network) -> bool {
        if self.species_labels() != other.species_labels()
            || self.reactions.len() != other.reactions.len()
        {
            return false;
        }
        self.reactions
            .iter()
            .all(|a| other.reactions.iter().any(|b| a.same_pair(b)))
    }

    /// Canonical text form: one reaction per line, `+` and `->` spaced,
    /// unit coefficients elided, species in declaration order. Species
    /// appearing in no complex are not representable in this grammar.
    pub fn render(&self) -> String {
        self.reactions
            .iter()
            .map(|r| {
                format!(
                    "{} -> {}",
                    r.reactant.render(&self.species),
                    r.product.render(&self.species)
                )
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn remap_complex(c: &Complex, remap: &BTreeMap<SpeciesId, SpeciesId>) -> Complex {
    Complex::from_pairs(c.iter().map(|(id, coeff)| (remap[&id], coeff.clone())))
}

impl fmt::Display for Network {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Row-reduced conservation-law matrix `W` with `W . gamma = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConservationBasis {
    matrix: RationalMatrix,
}

impl ConservationBasis {
    /// Number of independent conservation laws, `d = s - rank(gamma)`.
    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn stoichiometric_matrix_of_generalized_sf_1() {
        let net = fixtures::generalized_sf(1);
        let gamma = net.stoichiometric_matrix();
        assert_eq!(gamma.rows(), 2);
        assert_eq!(gamma.cols(), 2);
        // columns (1,-1) and (-1,1)
        assert_eq!(*gamma.get(0, 0), rat(1));
        assert_eq!(*gamma.get(1, 0), rat(-1));
        assert_eq!(*gamma.get(0, 1), rat(-1));
        assert_eq!(*gamma.get(1, 1), rat(1));
        assert_eq!(net.stoichiometric_dimension(), 1);
        assert!(net.is_one_dimensional());
    }

    #[test]
    fn stoichiometric_matrix_of_disguised_sf2() {
        // {5A+B -> 7A, 5A+3B -> A+5B}: columns (2,-1) and (-4,2)
        let net = fixtures::disguised_sf2();
        let gamma = net.stoichiometric_matrix();
        assert_eq!(*gamma.get(0, 0), rat(2));
        assert_eq!(*gamma.get(1, 0), rat(-1));
        assert_eq!(*gamma.get(0, 1), rat(-4));
        assert_eq!(*gamma.get(1, 1), rat(2));
        assert!(net.is_one_dimensional());
    }

    #[test]
    fn empty_reaction_list_has_dimension_zero() {
        let net = Network::new(vec!["A"], vec![], Strictness::StrictInteger).unwrap();
        assert_eq!(net.stoichiometric_dimension(), 0);
        assert_eq!(net.one_species(), None);
    }

    #[test]
    fn conservation_basis_of_generalized_sf() {
        for n in 1..=3 {
            let net = fixtures::generalized_sf(n);
            let w = net.conservation_basis();
            assert_eq!(w.dim(), 1);
            assert_eq!(*w.matrix().get(0, 0), rat(1));
            assert_eq!(*w.matrix().get(0, 1), rat(1));
        }
    }

    #[test]
    fn conservation_basis_of_degenerate_acr() {
        // {A -> 2A, A+nB -> nB}: W = (0 1)
        let net = fixtures::degenerate_acr(2);
        let w = net.conservation_basis();
        assert_eq!(w.dim(), 1);
        assert_eq!(*w.matrix().get(0, 0), rat(0));
        assert_eq!(*w.matrix().get(0, 1), rat(1));
    }

    #[test]
    fn conservation_basis_annihilates_stoichiometric_matrix() {
        for net in [
            fixtures::generalized_sf(3),
            fixtures::degenerate_acr(4),
            fixtures::one_dim_three_reactions(),
            fixtures::disguised_sf2(),
            fixtures::triangle(),
        ] {
            let w = net.conservation_basis();
            let product = w.matrix().mul(&net.stoichiometric_matrix());
            assert!(product.is_zero());
            assert_eq!(w.dim() + net.stoichiometric_dimension(), net.n_species());
        }
    }

    #[test]
    fn catalyst_only_species_examples() {
        let net = parse::parse_network("B <=> A + B").unwrap();
        // species order: B=0, A=1
        assert_eq!(net.catalyst_only_species(), vec![0]);
        assert_eq!(net.one_species(), Some(1));

        let sf = fixtures::generalized_sf(1);
        assert!(sf.catalyst_only_species().is_empty());

        let deg = fixtures::degenerate_acr(3);
        assert_eq!(deg.catalyst_only_species(), vec![1]);
    }

    #[test]
    fn unused_species_is_catalyst_only_and_pruned() {
        let net = Network::new(
            vec!["A", "B"],
            vec![
                Reaction::new(Complex::zero(), Complex::from_integers([(0, 1)])),
                Reaction::new(Complex::from_integers([(0, 1)]), Complex::zero()),
            ],
            Strictness::StrictInteger,
        )
        .unwrap();
        assert_eq!(net.catalyst_only_species(), vec![1]);
        assert_eq!(net.one_species(), Some(0));
        let pruned = net.prune_inert();
        assert_eq!(pruned.n_species(), 1);
        assert_eq!(pruned.species()[0].label, "A");
        assert_eq!(pruned.n_reactions(), 2);
    }

    #[test]
    fn one_species_requires_matching_reactants_elsewhere() {
        // {B -> A+B, A+2B -> 2B} changes only A per reaction, but the
        // reactant complexes disagree in B, so the one-species reduction
        // does not apply.
        let net = parse::parse_network("B -> A + B\nA + 2B -> 2B").unwrap();
        assert_eq!(net.one_species(), None);
        assert_eq!(net.catalyst_only_species(), vec![0]);
    }

    #[test]
    fn one_species_allows_inert_extras() {
        let net = Network::new(
            vec!["A", "X"],
            vec![
                Reaction::new(Complex::zero(), Complex::from_integers([(0, 1)])),
                Reaction::new(Complex::from_integers([(0, 2)]), Complex::from_integers([(0, 3)])),
            ],
            Strictness::StrictInteger,
        )
        .unwrap();
        assert_eq!(net.one_species(), Some(0));
    }

    #[test]
    fn duplicate_and_trivial_reactions_rejected() {
        let a = Complex::from_integers([(0, 1)]);
        let b = Complex::from_integers([(0, 2)]);
        let err = Network::new(
            vec!["A"],
            vec![Reaction::new(a.clone(), b.clone()), Reaction::new(a.clone(), b.clone())],
            Strictness::StrictInteger,
        )
        .unwrap_err();
        assert_eq!(err, NetworkError::DuplicateReaction(0, 1));

        let err = Network::new(
            vec!["A"],
            vec![Reaction::new(a.clone(), a.clone())],
            Strictness::StrictInteger,
        )
        .unwrap_err();
        assert_eq!(err, NetworkError::TrivialReaction(0));
    }

    #[test]
    fn strict_rejects_fractions() {
        let half = Complex::from_pairs([(0, BigRational::new(BigInt::from(1), BigInt::from(2)))]);
        let err = Network::new(
            vec!["A"],
            vec![Reaction::new(Complex::zero(), half.clone())],
            Strictness::StrictInteger,
        )
        .unwrap_err();
        assert_eq!(err, NetworkError::FractionalCoefficient(0));
        let net = Network::new(
            vec!["A"],
            vec![Reaction::new(Complex::zero(), half)],
            Strictness::GeneralizedRational,
        )
        .unwrap();
        assert_eq!(net.strictness(), Strictness::GeneralizedRational);
    }

    #[test]
    fn rate_labels_autofill() {
        let net = fixtures::generalized_sf(2);
        assert_eq!(net.rate_labels(), vec!["k1", "k2"]);
    }

    #[test]
    fn render_canonical_form() {
        let net = fixtures::generalized_sf(2);
        assert_eq!(net.render(), "B -> A\n2A + B -> A + 2B");
        let zero = parse::parse_network("0 -> A\nA -> 0").unwrap();
        assert_eq!(zero.render(), "0 -> A\nA -> 0");
    }
}

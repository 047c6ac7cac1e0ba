//! The five ACR-preserving network operations, rate-constant transport,
//! and operation traces.
//!
//! Each operation rewrites a network while preserving its stoichiometric
//! subspace, the existence of positive steady states, and the capacity for
//! ACR in every species (for relabeling: in the permuted species).
//! Deficiency and weak reversibility are *not* preserved in general —
//! which is the point: the operations carry ACR far outside any fixed
//! deficiency class.

use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::net_core::{Complex, Network, NetworkError, Reaction, SpeciesId};
use crate::ratio_fmt;

pub mod canonical;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperationError {
    #[error("relabeling is not a permutation of the species")]
    InvalidPermutation,
    #[error("shift vector has length {got}, species count is {expected}")]
    BadVectorLength { expected: usize, got: usize },
    #[error("reaction index {0} is out of range")]
    ReactionOutOfRange(usize),
    #[error("species id {0} is out of range")]
    SpeciesOutOfRange(usize),
    #[error("stretch factor must be positive")]
    NonPositiveFactor,
    #[error("duplication factors must be positive and distinct")]
    BadDuplicateFactors,
    #[error("scale factor must be nonzero")]
    ZeroScaleFactor,
    #[error("operation pushes a complex outside the nonnegative orthant")]
    LeavesOrthant,
    /// Kept for API completeness: no operation in this set can produce a
    /// trivial reaction — stretching, duplication, and scaling move
    /// products by nonzero multiples of a nonzero difference, and
    /// translation preserves differences.
    #[error("operation makes reaction {0} trivial")]
    CreatesTrivialReaction(usize),
    #[error("operation makes reactions {0} and {1} identical")]
    CreatesDuplicateReaction(usize, usize),
    #[error("duplication has no single-operation inverse")]
    NonInvertible,
    #[error("network is not one-dimensional")]
    NotOneDimensional,
    #[error(transparent)]
    Network(#[from] NetworkError),
}

/// One network operation.  Serialized form tags the variant, e.g.
/// `{"op":"stretch","reaction":1,"factor":"1/2"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum NetworkOperation {
    /// Permutes which species the coefficients attach to: coefficient at
    /// species `i` moves to species `permutation[i]`.  Labels stay with
    /// their positions.
    Relabel { permutation: Vec<usize> },
    /// Adds `shift` to every complex.
    Translate {
        #[serde(with = "ratio_fmt::serde_rational_vec")]
        shift: Vec<BigRational>,
    },
    /// Moves one reaction's product along the reaction line:
    /// `y' := y + factor (y' - y)` with `factor > 0`.
    Stretch {
        reaction: usize,
        #[serde(with = "ratio_fmt::serde_rational")]
        factor: BigRational,
    },
    /// Replaces one reaction by two stretched copies with distinct
    /// positive factors.
    Duplicate {
        reaction: usize,
        #[serde(with = "ratio_fmt::serde_rational")]
        alpha: BigRational,
        #[serde(with = "ratio_fmt::serde_rational")]
        beta: BigRational,
    },
    /// Rescales every product's coordinate along one species:
    /// `y'_i := y_i + factor (y'_i - y_i)` with `factor != 0` (negative
    /// factors flip the species' net direction).
    PartialScale {
        species: SpeciesId,
        #[serde(with = "ratio_fmt::serde_rational")]
        factor: BigRational,
    },
}

impl NetworkOperation {
    pub fn apply(&self, net: &Network) -> Result<Network, OperationError> {
        apply(net, self)
    }

    /// The operation undoing this one.  Duplication is the one operation
    /// without a single-operation inverse.
    pub fn invert(&self) -> Result<NetworkOperation, OperationError> {
        match self {
            NetworkOperation::Relabel { permutation } => {
                let mut inverse = vec![0; permutation.len()];
                for (i, &to) in permutation.iter().enumerate() {
                    if to >= permutation.len() {
                        return Err(OperationError::InvalidPermutation);
                    }
                    inverse[to] = i;
                }
                Ok(NetworkOperation::Relabel { permutation: inverse })
            }
            NetworkOperation::Translate { shift } => Ok(NetworkOperation::Translate {
                shift: shift.iter().map(|z| -z.clone()).collect(),
            }),
            NetworkOperation::Stretch { reaction, factor } => {
                if !factor.is_positive() {
                    return Err(OperationError::NonPositiveFactor);
                }
                Ok(NetworkOperation::Stretch {
                    reaction: *reaction,
                    factor: factor.clone().recip(),
                })
            }
            NetworkOperation::PartialScale { species, factor } => {
                if factor.is_zero() {
                    return Err(OperationError::ZeroScaleFactor);
                }
                Ok(NetworkOperation::PartialScale {
                    species: *species,
                    factor: factor.clone().recip(),
                })
            }
            NetworkOperation::Duplicate { .. } => Err(OperationError::NonInvertible),
        }
    }
}

/// `y + factor (y' - y)`, coordinatewise.
fn moved_product(
    reactant: &Complex,
    product: &Complex,
    factor: &BigRational,
    n_species: usize,
) -> Complex {
    Complex::from_pairs((0..n_species).filter_map(|j| {
        let y = reactant.coeff(j);
        let delta = product.coeff(j) - &y;
        let c = y + factor * delta;
        (!c.is_zero()).then_some((j, c))
    }))
}

fn in_orthant(c: &Complex) -> Result<(), OperationError> {
    if c.is_nonnegative() {
        Ok(())
    } else {
        Err(OperationError::LeavesOrthant)
    }
}

/// Applies one operation, validating its parameters and rejecting results
/// that leave the nonnegative orthant or collide with existing reactions.
/// Strictness of the result is recomputed from the coefficients.
pub fn apply(net: &Network, op: &NetworkOperation) -> Result<Network, OperationError> {
    let s = net.n_species();
    let labels = net.species_labels();
    match op {
        NetworkOperation::Relabel { permutation } => {
            let mut seen = vec![false; s];
            if permutation.len() != s
                || !permutation.iter().all(|&to| {
                    to < s && !std::mem::replace(&mut seen[to], true)
                })
            {
                return Err(OperationError::InvalidPermutation);
            }
            let push = |c: &Complex| {
                Complex::from_pairs(c.iter().map(|(i, v)| (permutation[i], v.clone())))
            };
            let reactions = net
                .reactions()
                .iter()
                .map(|r| Reaction::with_label(push(&r.reactant), push(&r.product), &r.rate_label))
                .collect();
            Ok(Network::with_auto_strictness(labels, reactions)?)
        }
        NetworkOperation::Translate { shift } => {
            if shift.len() != s {
                return Err(OperationError::BadVectorLength { expected: s, got: shift.len() });
            }
            let shifted = |c: &Complex| -> Complex {
                Complex::from_pairs((0..s).filter_map(|j| {
                    let v = c.coeff(j) + &shift[j];
                    (!v.is_zero()).then_some((j, v))
                }))
            };
            let mut reactions = Vec::with_capacity(net.n_reactions());
            for r in net.reactions() {
                let reactant = shifted(&r.reactant);
                let product = shifted(&r.product);
                in_orthant(&reactant)?;
                in_orthant(&product)?;
                reactions.push(Reaction::with_label(reactant, product, &r.rate_label));
            }
            Ok(Network::with_auto_strictness(labels, reactions)?)
        }
        NetworkOperation::Stretch { reaction, factor } => {
            let k = *reaction;
            let r = net
                .reactions()
                .get(k)
                .ok_or(OperationError::ReactionOutOfRange(k))?;
            if !factor.is_positive() {
                return Err(OperationError::NonPositiveFactor);
            }
            let product = moved_product(&r.reactant, &r.product, factor, s);
            in_orthant(&product)?;
            for (j, other) in net.reactions().iter().enumerate() {
                if j != k && other.reactant == r.reactant && other.product == product {
                    return Err(OperationError::CreatesDuplicateReaction(k.min(j), k.max(j)));
                }
            }
            let mut reactions: Vec<Reaction> = net.reactions().to_vec();
            reactions[k] = Reaction::with_label(r.reactant.clone(), product, &r.rate_label);
            Ok(Network::with_auto_strictness(labels, reactions)?)
        }
        NetworkOperation::Duplicate { reaction, alpha, beta } => {
            let k = *reaction;
            let r = net
                .reactions()
                .get(k)
                .ok_or(OperationError::ReactionOutOfRange(k))?;
            if !alpha.is_positive() || !beta.is_positive() || alpha == beta {
                return Err(OperationError::BadDuplicateFactors);
            }
            let first = moved_product(&r.reactant, &r.product, alpha, s);
            let second = moved_product(&r.reactant, &r.product, beta, s);
            in_orthant(&first)?;
            in_orthant(&second)?;
            for (j, other) in net.reactions().iter().enumerate() {
                if j != k
                    && other.reactant == r.reactant
                    && (other.product == first || other.product == second)
                {
                    return Err(OperationError::CreatesDuplicateReaction(k.min(j), k.max(j)));
                }
            }
            let mut reactions: Vec<Reaction> = Vec::with_capacity(net.n_reactions() + 1);
            for (j, other) in net.reactions().iter().enumerate() {
                if j == k {
                    reactions.push(Reaction::with_label(
                        r.reactant.clone(),
                        first.clone(),
                        format!("{}a", r.rate_label),
                    ));
                    reactions.push(Reaction::with_label(
                        r.reactant.clone(),
                        second.clone(),
                        format!("{}b", r.rate_label),
                    ));
                } else {
                    reactions.push(other.clone());
                }
            }
            Ok(Network::with_auto_strictness(labels, reactions)?)
        }
        NetworkOperation::PartialScale { species, factor } => {
            let i = *species;
            if i >= s {
                return Err(OperationError::SpeciesOutOfRange(i));
            }
            if factor.is_zero() {
                return Err(OperationError::ZeroScaleFactor);
            }
            let mut reactions = Vec::with_capacity(net.n_reactions());
            for r in net.reactions() {
                let y_i = r.reactant.coeff(i);
                let scaled = &y_i + factor * (r.product.coeff(i) - &y_i);
                if scaled.is_negative() {
                    return Err(OperationError::LeavesOrthant);
                }
                let product = r.product.with_coeff(i, scaled);
                reactions.push(Reaction::with_label(r.reactant.clone(), product, &r.rate_label));
            }
            Ok(Network::with_auto_strictness(labels, reactions)?)
        }
    }
}

/// Transports rate constants forward through an operation so that the new
/// system's dynamics match the old one's:
///
/// - relabel and translate leave rates unchanged (translation rescales
///   time by one shared positive monomial);
/// - a stretch by `a` divides the reaction's rate by `a`;
/// - a duplication by `a`, `b` splits the rate in two, `k/(2a)` and
///   `k/(2b)`, so the two copies' contributions sum to the original;
/// - a partial scale keeps rates and instead multiplies the species' own
///   rate equation by the factor, fixing the steady-state set.
pub fn transport_rates(
    op: &NetworkOperation,
    kappa: &[BigRational],
) -> Result<Vec<BigRational>, OperationError> {
    match op {
        NetworkOperation::Relabel { .. }
        | NetworkOperation::Translate { .. }
        | NetworkOperation::PartialScale { .. } => Ok(kappa.to_vec()),
        NetworkOperation::Stretch { reaction, factor } => {
            let k = *reaction;
            if k >= kappa.len() {
                return Err(OperationError::ReactionOutOfRange(k));
            }
            if !factor.is_positive() {
                return Err(OperationError::NonPositiveFactor);
            }
            let mut out = kappa.to_vec();
            out[k] = &out[k] / factor;
            Ok(out)
        }
        NetworkOperation::Duplicate { reaction, alpha, beta } => {
            let k = *reaction;
            if k >= kappa.len() {
                return Err(OperationError::ReactionOutOfRange(k));
            }
            if !alpha.is_positive() || !beta.is_positive() || alpha == beta {
                return Err(OperationError::BadDuplicateFactors);
            }
            let two = BigRational::from_integer(2.into());
            let mut out = Vec::with_capacity(kappa.len() + 1);
            for (j, rate) in kappa.iter().enumerate() {
                if j == k {
                    out.push(rate / (&two * alpha));
                    out.push(rate / (&two * beta));
                } else {
                    out.push(rate.clone());
                }
            }
            Ok(out)
        }
    }
}

/// Symbolic description of how an operation transforms the mass-action
/// differential equations, dual to [`transport_rates`]: where the
/// transport *divides* a rate so the new network reproduces the old
/// dynamics, the effect records how the old equations read in terms of
/// the new network's unchanged rates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "effect", rename_all = "snake_case")]
pub enum OdeEffect {
    /// The equations are unchanged.
    Identity,
    /// Variable `i` becomes variable `permutation[i]`.
    PermuteVariables { permutation: Vec<usize> },
    /// Every right-hand side gains the shared monomial factor
    /// `prod_j x_j^(exponents[j])` — a state-dependent time rescaling
    /// that fixes the positive steady-state set.
    RescaleTimeByMonomial {
        #[serde(with = "ratio_fmt::serde_rational_vec")]
        exponents: Vec<BigRational>,
    },
    /// The reaction's rate constant `k` enters the equations as
    /// `factor * k`.
    ScaleRateConstant {
        reaction: usize,
        #[serde(with = "ratio_fmt::serde_rational")]
        factor: BigRational,
    },
    /// The reaction's contribution splits over two copies: `alpha * k'`
    /// plus `beta * k''` replaces the single `k` term.
    SplitRateConstant {
        reaction: usize,
        #[serde(with = "ratio_fmt::serde_rational")]
        alpha: BigRational,
        #[serde(with = "ratio_fmt::serde_rational")]
        beta: BigRational,
    },
    /// One species' equation is scaled: `x_i' := factor * x_i'`.
    ScaleOneEquation {
        species: SpeciesId,
        #[serde(with = "ratio_fmt::serde_rational")]
        factor: BigRational,
    },
}

/// How `op` acts on `net`'s differential equations, as a symbolic rule.
pub fn ode_effect(net: &Network, op: &NetworkOperation) -> Result<OdeEffect, OperationError> {
    let s = net.n_species();
    match op {
        NetworkOperation::Relabel { permutation } => {
            if permutation.len() != s {
                return Err(OperationError::InvalidPermutation);
            }
            let mut seen = vec![false; s];
            for &to in permutation {
                if to >= s || std::mem::replace(&mut seen[to], true) {
                    return Err(OperationError::InvalidPermutation);
                }
            }
            if permutation.iter().enumerate().all(|(i, &to)| i == to) {
                Ok(OdeEffect::Identity)
            } else {
                Ok(OdeEffect::PermuteVariables { permutation: permutation.clone() })
            }
        }
        NetworkOperation::Translate { shift } => {
            if shift.len() != s {
                return Err(OperationError::BadVectorLength { expected: s, got: shift.len() });
            }
            Ok(OdeEffect::RescaleTimeByMonomial { exponents: shift.clone() })
        }
        NetworkOperation::Stretch { reaction, factor } => {
            if *reaction >= net.n_reactions() {
                return Err(OperationError::ReactionOutOfRange(*reaction));
            }
            if !factor.is_positive() {
                return Err(OperationError::NonPositiveFactor);
            }
            Ok(OdeEffect::ScaleRateConstant { reaction: *reaction, factor: factor.clone() })
        }
        NetworkOperation::Duplicate { reaction, alpha, beta } => {
            if *reaction >= net.n_reactions() {
                return Err(OperationError::ReactionOutOfRange(*reaction));
            }
            if !alpha.is_positive() || !beta.is_positive() || alpha == beta {
                return Err(OperationError::BadDuplicateFactors);
            }
            Ok(OdeEffect::SplitRateConstant {
                reaction: *reaction,
                alpha: alpha.clone(),
                beta: beta.clone(),
            })
        }
        NetworkOperation::PartialScale { species, factor } => {
            if *species >= s {
                return Err(OperationError::SpeciesOutOfRange(*species));
            }
            if factor.is_zero() {
                return Err(OperationError::ZeroScaleFactor);
            }
            Ok(OdeEffect::ScaleOneEquation { species: *species, factor: factor.clone() })
        }
    }
}

/// Per-reaction distortion `lambda^2` of a partial scale: the factor by
/// which the squared length of the reaction vector changes,
/// `1 + (a^2 - 1) (y'_i - y_i)^2 / |y' - y|^2`.  A value of `1` means the
/// reaction is untouched up to rotation; large values measure how far the
/// operation is from a rigid motion.
///
/// Defined for one-dimensional networks (where a partial scale acts on the
/// single reaction direction) and positive factors.
pub fn rotation_metrics(
    net: &Network,
    species: SpeciesId,
    factor: &BigRational,
) -> Result<Vec<BigRational>, OperationError> {
    if species >= net.n_species() {
        return Err(OperationError::SpeciesOutOfRange(species));
    }
    if !factor.is_positive() {
        return Err(OperationError::NonPositiveFactor);
    }
    if !net.is_one_dimensional() {
        return Err(OperationError::NotOneDimensional);
    }
    let one = BigRational::one();
    let factor_sq = factor * factor;
    Ok(net
        .reactions()
        .iter()
        .map(|r| {
            let v = net_reaction_delta(net, r);
            let norm_sq: BigRational = v.iter().map(|d| d * d).sum();
            let axis = &v[species];
            let axis_sq = axis * axis;
            &one + (&factor_sq - &one) * axis_sq / norm_sq
        })
        .collect())
}

fn net_reaction_delta(net: &Network, r: &Reaction) -> Vec<BigRational> {
    (0..net.n_species())
        .map(|j| r.product.coeff(j) - r.reactant.coeff(j))
        .collect()
}

/// Union of two networks, matching species by label.  The reaction lists
/// concatenate (duplicates are rejected) and rate labels are reassigned.
///
/// The union of two networks with ACR need *not* have ACR — disjoint
/// one-species parts that each fix a value can combine into a network with
/// several steady values — so no robustness claim transports through this
/// construction.
pub fn union(a: &Network, b: &Network) -> Result<Network, NetworkError> {
    let mut labels = a.species_labels();
    let mut b_to_union = Vec::with_capacity(b.n_species());
    for lb in b.species_labels() {
        let id = labels.iter().position(|l| *l == lb).unwrap_or_else(|| {
            labels.push(lb.clone());
            labels.len() - 1
        });
        b_to_union.push(id);
    }
    let remap = |c: &Complex| {
        Complex::from_pairs(c.iter().map(|(i, v)| (b_to_union[i], v.clone())))
    };
    let reactions = a
        .reactions()
        .iter()
        .map(|r| Reaction::new(r.reactant.clone(), r.product.clone()))
        .chain(
            b.reactions()
                .iter()
                .map(|r| Reaction::new(remap(&r.reactant), remap(&r.product))),
        )
        .collect();
    Network::with_auto_strictness(labels, reactions)
}

/// A sequence of operations, applied left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OperationTrace {
    pub steps: Vec<NetworkOperation>,
}

impl OperationTrace {
    pub fn new(steps: Vec<NetworkOperation>) -> OperationTrace {
        OperationTrace { steps }
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn push(&mut self, op: NetworkOperation) {
        self.steps.push(op);
    }

    /// Replays the trace.
    pub fn apply(&self, net: &Network) -> Result<Network, OperationError> {
        let mut current = net.clone();
        for op in &self.steps {
            current = apply(&current, op)?;
        }
        Ok(current)
    }

    /// The reversed trace of inverted steps; fails if any step is a
    /// duplication.
    pub fn inverted(&self) -> Result<OperationTrace, OperationError> {
        let steps: Result<Vec<NetworkOperation>, OperationError> =
            self.steps.iter().rev().map(|op| op.invert()).collect();
        Ok(OperationTrace { steps: steps? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::oracle::MassActionSystem;
    use num::bigint::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn rats(values: &[i64]) -> Vec<BigRational> {
        values.iter().map(|&v| q(v, 1)).collect()
    }

    fn relabel(permutation: &[usize]) -> NetworkOperation {
        NetworkOperation::Relabel { permutation: permutation.to_vec() }
    }

    fn translate(shift: &[i64]) -> NetworkOperation {
        NetworkOperation::Translate { shift: rats(shift) }
    }

    fn stretch(reaction: usize, n: i64, d: i64) -> NetworkOperation {
        NetworkOperation::Stretch { reaction, factor: q(n, d) }
    }

    fn partial_scale(species: SpeciesId, n: i64, d: i64) -> NetworkOperation {
        NetworkOperation::PartialScale { species, factor: q(n, d) }
    }

    #[test]
    fn relabeling_moves_coefficients_not_labels() {
        let net = fixtures::disguised_sf2();
        let swapped = apply(&net, &relabel(&[1, 0])).unwrap();
        assert_eq!(swapped.render(), "A + 5B -> 7B\n3A + 5B -> 5A + B");
        assert_eq!(swapped.species_labels(), net.species_labels());
    }

    #[test]
    fn bad_permutations_are_rejected() {
        let net = fixtures::disguised_sf2();
        for p in [vec![0], vec![0, 0], vec![0, 2]] {
            assert_eq!(
                apply(&net, &relabel(&p)),
                Err(OperationError::InvalidPermutation)
            );
        }
    }

    #[test]
    fn stretching_moves_the_product_along_the_reaction_line() {
        let out = apply(&fixtures::triangle(), &stretch(0, 2, 1)).unwrap();
        assert_eq!(out.render(), "0 -> 2A\nA -> B\nB -> 0");
        let net = apply(&fixtures::disguised_sf2(), &relabel(&[1, 0])).unwrap();
        let out = apply(&net, &stretch(1, 1, 2)).unwrap();
        assert_eq!(out.render(), "A + 5B -> 7B\n3A + 5B -> 4A + 3B");
    }

    #[test]
    fn stretch_collisions_are_detected() {
        let net = crate::net_core::parse::parse_network("A -> 2A\nA -> 3A").unwrap();
        assert_eq!(
            apply(&net, &stretch(0, 2, 1)),
            Err(OperationError::CreatesDuplicateReaction(0, 1))
        );
    }

    #[test]
    fn translation_shifts_every_complex() {
        let net = crate::net_core::parse::parse_network("0 -> A\nA -> 2A").unwrap();
        let out = apply(&net, &translate(&[1])).unwrap();
        assert_eq!(out.render(), "A -> 2A\n2A -> 3A");
        assert_eq!(
            apply(&fixtures::one_dim_three_reactions(), &translate(&[-1, 0])),
            Err(OperationError::LeavesOrthant)
        );
    }

    #[test]
    fn partial_scaling_rescales_one_axis() {
        let net = fixtures::zero_to_ma(2);
        let out = apply(&net, &partial_scale(0, 1, 2)).unwrap();
        assert_eq!(out.render(), "0 -> A\n2A -> A");
        let out = apply(&fixtures::generalized_sf(1), &partial_scale(1, -1, 1)).unwrap();
        assert_eq!(out.render(), "B -> A + 2B\nA + B -> 0");
    }

    #[test]
    fn duplication_splits_one_reaction_into_two() {
        let net = crate::net_core::parse::parse_network("0 -> A").unwrap();
        let out = apply(
            &net,
            &NetworkOperation::Duplicate { reaction: 0, alpha: q(1, 1), beta: q(2, 1) },
        )
        .unwrap();
        assert_eq!(out.render(), "0 -> A\n0 -> 2A");
        assert_eq!(out.rate_labels(), vec!["k1a", "k1b"]);
        let again = apply(
            &out,
            &NetworkOperation::Duplicate { reaction: 0, alpha: q(1, 1), beta: q(2, 1) },
        );
        assert_eq!(again, Err(OperationError::CreatesDuplicateReaction(0, 1)));
    }

    #[test]
    fn strictness_follows_the_coefficients() {
        use crate::net_core::Strictness;
        let net = fixtures::zero_to_ma(1);
        let fractional = apply(&net, &translate(&[1])).unwrap();
        assert_eq!(fractional.strictness(), Strictness::StrictInteger);
        let fractional = apply(&net, &NetworkOperation::Translate { shift: vec![q(1, 2)] })
            .unwrap();
        assert_eq!(fractional.strictness(), Strictness::GeneralizedRational);
    }

    #[test]
    fn inverses_round_trip() {
        let net = fixtures::disguised_sf2();
        let ops = [
            relabel(&[1, 0]),
            translate(&[2, 1]),
            stretch(1, 1, 2),
            partial_scale(0, -1, 1),
        ];
        for op in ops {
            let forward = apply(&net, &op).unwrap();
            let back = apply(&forward, &op.invert().unwrap()).unwrap();
            assert_eq!(back.render(), net.render(), "op {op:?}");
            assert!(back.structurally_eq(&net), "op {op:?}");
        }
        let dup = NetworkOperation::Duplicate { reaction: 0, alpha: q(1, 1), beta: q(2, 1) };
        assert_eq!(dup.invert(), Err(OperationError::NonInvertible));
    }

    #[test]
    fn rate_transport_preserves_the_dynamics() {
        let net = fixtures::generalized_sf(2);
        let kappa = rats(&[6, 3]);
        let before = MassActionSystem::new(&net, kappa.clone()).unwrap();
        // Stretch: identical rate equations.
        let op = stretch(1, 1, 3);
        let after = MassActionSystem::new(
            &apply(&net, &op).unwrap(),
            transport_rates(&op, &kappa).unwrap(),
        )
        .unwrap();
        for i in 0..2 {
            assert_eq!(before.ode_rhs(i), after.ode_rhs(i));
        }
        // Duplicate: identical rate equations.
        let op = NetworkOperation::Duplicate { reaction: 1, alpha: q(1, 2), beta: q(2, 1) };
        let after = MassActionSystem::new(
            &apply(&net, &op).unwrap(),
            transport_rates(&op, &kappa).unwrap(),
        )
        .unwrap();
        for i in 0..2 {
            assert_eq!(before.ode_rhs(i), after.ode_rhs(i));
        }
        // Translate: every monomial shifts by the same exponent vector.
        let op = translate(&[1, 2]);
        let after = MassActionSystem::new(
            &apply(&net, &op).unwrap(),
            transport_rates(&op, &kappa).unwrap(),
        )
        .unwrap();
        for i in 0..2 {
            let shifted: Vec<_> = before
                .ode_rhs(i)
                .into_iter()
                .map(|mut m| {
                    m.exponents[0] += q(1, 1);
                    m.exponents[1] += q(2, 1);
                    m
                })
                .collect();
            assert_eq!(shifted, after.ode_rhs(i));
        }
        // Partial scale: the scaled species' equation picks up the factor.
        let op = partial_scale(0, 1, 2);
        let after = MassActionSystem::new(
            &apply(&net, &op).unwrap(),
            transport_rates(&op, &kappa).unwrap(),
        )
        .unwrap();
        let scaled: Vec<_> = before
            .ode_rhs(0)
            .into_iter()
            .map(|mut m| {
                m.coefficient *= q(1, 2);
                m
            })
            .collect();
        assert_eq!(scaled, after.ode_rhs(0));
        // A negative partial scale needs product room on the scaled axis.
        let roomy = crate::net_core::parse::parse_network("A + 2B -> 2A + B\n2A + B -> A + 2B")
            .unwrap();
        let kappa2 = rats(&[4, 5]);
        let before2 = MassActionSystem::new(&roomy, kappa2.clone()).unwrap();
        let op = partial_scale(0, -1, 1);
        let after2 = MassActionSystem::new(
            &apply(&roomy, &op).unwrap(),
            transport_rates(&op, &kappa2).unwrap(),
        )
        .unwrap();
        let flipped: Vec<_> = before2
            .ode_rhs(0)
            .into_iter()
            .map(|mut m| {
                m.coefficient = -m.coefficient;
                m
            })
            .collect();
        assert_eq!(flipped, after2.ode_rhs(0));
        assert_eq!(before2.ode_rhs(1), after2.ode_rhs(1));
        assert_eq!(before.ode_rhs(1), after.ode_rhs(1));
    }

    #[test]
    fn relabeling_permutes_the_rate_equations() {
        let net = fixtures::generalized_sf(2);
        let kappa = rats(&[5, 7]);
        let before = MassActionSystem::new(&net, kappa.clone()).unwrap();
        let op = relabel(&[1, 0]);
        let after = MassActionSystem::new(
            &apply(&net, &op).unwrap(),
            transport_rates(&op, &kappa).unwrap(),
        )
        .unwrap();
        for i in 0..2 {
            let permuted: Vec<_> = before
                .ode_rhs(i)
                .into_iter()
                .map(|mut m| {
                    m.exponents.swap(0, 1);
                    m
                })
                .collect();
            assert_eq!(permuted, after.ode_rhs(1 - i));
        }
    }

    #[test]
    fn rotation_metric_of_a_two_species_scale() {
        let net = crate::net_core::parse::parse_network("B -> A").unwrap();
        let metrics = rotation_metrics(&net, 0, &q(2, 1)).unwrap();
        assert_eq!(metrics, vec![q(5, 2)]);
        // Scaling an axis the reaction does not use is a rigid motion.
        let metrics = rotation_metrics(&fixtures::degenerate_acr(2), 1, &q(3, 1)).unwrap();
        assert_eq!(metrics[0], q(1, 1));
    }

    #[test]
    fn union_concatenates_and_rejects_duplicates() {
        let a = crate::net_core::parse::parse_network("0 -> A\nA -> 0").unwrap();
        let b = crate::net_core::parse::parse_network("2A -> 3A\n3A -> 2A").unwrap();
        let joined = union(&a, &b).unwrap();
        assert!(joined.same_reaction_set(&fixtures::union_of_acr_parts()));
        assert!(union(&a, &a).is_err());
        let c = crate::net_core::parse::parse_network("B -> 2B").unwrap();
        let mixed = union(&a, &c).unwrap();
        assert_eq!(mixed.species_labels(), vec!["A", "B"]);
        assert_eq!(mixed.render(), "0 -> A\nA -> 0\nB -> 2B");
    }

    #[test]
    fn trace_replays_the_canonicalization_walkthrough() {
        let trace = OperationTrace::new(vec![
            relabel(&[1, 0]),
            stretch(1, 1, 2),
            partial_scale(0, -1, 1),
            partial_scale(1, -1, 2),
            translate(&[-1, -4]),
        ]);
        let out = trace.apply(&fixtures::disguised_sf2()).unwrap();
        assert_eq!(out.render(), fixtures::generalized_sf(2).render());
        // The inverse trace carries it back.
        let back = trace.inverted().unwrap().apply(&out).unwrap();
        assert_eq!(back.render(), fixtures::disguised_sf2().render());
    }

    #[test]
    fn traces_serialize_tagged() {
        let trace = OperationTrace::new(vec![stretch(1, 1, 2), translate(&[-1, -4])]);
        let json = serde_json::to_string(&trace).unwrap();
        assert_eq!(
            json,
            r#"[{"op":"stretch","reaction":1,"factor":"1/2"},{"op":"translate","shift":["-1","-4"]}]"#
        );
        let parsed: OperationTrace = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, trace);
    }
}

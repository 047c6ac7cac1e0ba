//! The three canonical ACR families and the reductions onto them.
//!
//! Every two-reaction network with ACR collapses, under a short trace of
//! the five operations, onto one member of three one-parameter families:
//! the single-species pair `{0 <=> mA}`, the two-species form
//! `{B -> A, nA + B -> (n-1)A + 2B}`, or its degenerate counterpart
//! `{A -> 2A, A + nB -> nB}` whose steady states all carry a zero
//! eigenvalue.  The reductions here are deterministic: the species whose
//! one-coefficient diagram carries both directions ends up in position 1,
//! the stretched reaction is always the longer one (squared-norm
//! comparison), and no step ever duplicates a reaction, so every trace is
//! invertible.

use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{apply, NetworkOperation, OperationError, OperationTrace};
use crate::net_core::{Complex, Network, SpeciesId};
use crate::ratio_fmt;

/// A canonical family member, identified by its single rational parameter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum CanonicalFamily {
    /// `{0 -> mA, mA -> 0}`: stable ACR at `(k1/k2)^(1/m)`.
    #[serde(rename = "zero_to_ma")]
    ZeroToMA {
        #[serde(with = "ratio_fmt::serde_rational")]
        m: BigRational,
    },
    /// `{B -> A, nA + B -> (n-1)A + 2B}`: stable, nondegenerate ACR in A.
    #[serde(rename = "generalized_sf")]
    GeneralizedSF {
        #[serde(with = "ratio_fmt::serde_rational")]
        n: BigRational,
    },
    /// `{A -> 2A, A + nB -> nB}`: ACR in B, but every positive steady
    /// state is degenerate.
    #[serde(rename = "degenerate_acr")]
    DegenerateACR {
        #[serde(with = "ratio_fmt::serde_rational")]
        n: BigRational,
    },
}

impl CanonicalFamily {
    pub fn parameter(&self) -> &BigRational {
        match self {
            CanonicalFamily::ZeroToMA { m } => m,
            CanonicalFamily::GeneralizedSF { n } => n,
            CanonicalFamily::DegenerateACR { n } => n,
        }
    }

    /// The family member as a concrete network over fresh labels.  `None`
    /// when no valid member exists (nonpositive parameter, or a
    /// generalized form whose `n - 1` coefficient would go negative).
    pub fn target_network(&self) -> Option<Network> {
        let one = BigRational::one();
        let (labels, reactions) = match self {
            CanonicalFamily::ZeroToMA { m } => {
                if !m.is_positive() {
                    return None;
                }
                (
                    vec!["A"],
                    vec![
                        Reactionish::make(&[], &[(0, m.clone())]),
                        Reactionish::make(&[(0, m.clone())], &[]),
                    ],
                )
            }
            CanonicalFamily::GeneralizedSF { n } => {
                if n < &one {
                    return None;
                }
                (
                    vec!["A", "B"],
                    vec![
                        Reactionish::make(&[(1, one.clone())], &[(0, one.clone())]),
                        Reactionish::make(
                            &[(0, n.clone()), (1, one.clone())],
                            &[(0, n - &one), (1, &one + &one)],
                        ),
                    ],
                )
            }
            CanonicalFamily::DegenerateACR { n } => {
                if !n.is_positive() {
                    return None;
                }
                (
                    vec!["A", "B"],
                    vec![
                        Reactionish::make(&[(0, one.clone())], &[(0, &one + &one)]),
                        Reactionish::make(
                            &[(0, one.clone()), (1, n.clone())],
                            &[(1, n.clone())],
                        ),
                    ],
                )
            }
        };
        Network::with_auto_strictness(labels, reactions).ok()
    }

    /// Whether `net` *is* this family member, up to species labels, the
    /// roles the two axes play, reaction order, and inert species.
    pub fn matches(&self, net: &Network) -> bool {
        let pruned = net.prune_inert();
        let rs = pruned.reactions();
        if rs.len() != 2 {
            return false;
        }
        let one = BigRational::one();
        let two = &one + &one;
        match self {
            CanonicalFamily::ZeroToMA { m } => {
                if pruned.n_species() != 1 {
                    return false;
                }
                let pair = |k: usize| (rs[k].reactant.coeff(0), rs[k].product.coeff(0));
                let zero = BigRational::zero();
                let up = (zero.clone(), m.clone());
                let down = (m.clone(), zero);
                (pair(0) == up && pair(1) == down) || (pair(0) == down && pair(1) == up)
            }
            CanonicalFamily::GeneralizedSF { n } => {
                if pruned.n_species() != 2 || n < &one {
                    return false;
                }
                [(0usize, 1usize), (1, 0)].iter().any(|&(w, o)| {
                    let convert = Complex::from_pairs([(o, one.clone())]);
                    let convert_to = Complex::from_pairs([(w, one.clone())]);
                    let feed = Complex::from_pairs([(w, n.clone()), (o, one.clone())]);
                    let feed_to = Complex::from_pairs([(w, n - &one), (o, two.clone())]);
                    rs.iter().any(|r| r.reactant == convert && r.product == convert_to)
                        && rs.iter().any(|r| r.reactant == feed && r.product == feed_to)
                })
            }
            CanonicalFamily::DegenerateACR { n } => {
                if pruned.n_species() != 2 || !n.is_positive() {
                    return false;
                }
                [(0usize, 1usize), (1, 0)].iter().any(|&(w, o)| {
                    let grow = Complex::from_pairs([(w, one.clone())]);
                    let grow_to = Complex::from_pairs([(w, two.clone())]);
                    let decay = Complex::from_pairs([(w, one.clone()), (o, n.clone())]);
                    let decay_to = Complex::from_pairs([(o, n.clone())]);
                    rs.iter().any(|r| r.reactant == grow && r.product == grow_to)
                        && rs.iter().any(|r| r.reactant == decay && r.product == decay_to)
                })
            }
        }
    }
}

impl std::fmt::Display for CanonicalFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            CanonicalFamily::ZeroToMA { .. } => "ZeroToMA",
            CanonicalFamily::GeneralizedSF { .. } => "GeneralizedSF",
            CanonicalFamily::DegenerateACR { .. } => "DegenerateACR",
        };
        write!(f, "{}({})", name, ratio_fmt::format_rational(self.parameter()))
    }
}

// Small helper so `target_network` reads as data.
struct Reactionish;

impl Reactionish {
    fn make(reactant: &[(SpeciesId, BigRational)], product: &[(SpeciesId, BigRational)]) -> crate::net_core::Reaction {
        crate::net_core::Reaction::new(
            Complex::from_pairs(reactant.iter().cloned()),
            Complex::from_pairs(product.iter().cloned()),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonicalizeError {
    /// The network does not have ACR, so no reduction exists: its
    /// one-coefficient diagram carries both directions at one coefficient,
    /// or its reactants differ in more than one species, or coincide.
    #[error("network does not have ACR; no canonical form exists")]
    NoACR,
    /// No rate constants give a positive steady state, so ACR holds only
    /// vacuously and there is nothing to canonicalize.
    #[error("network admits no positive steady state; no canonical form exists")]
    NoPositiveSteadyState,
    #[error("expected exactly two reactions")]
    WrongReactionCount,
    #[error("expected a network driven by a single species")]
    NotOneSpecies,
    #[error("expected exactly two species")]
    WrongSpeciesCount,
    /// Generalized-coefficient inputs whose reactant gap along the moving
    /// axis is below one have ACR but no valid family member to land on.
    #[error("no canonical family member exists: the reactant coefficient gap is below one")]
    NoCanonicalTarget,
    #[error(transparent)]
    Operation(#[from] OperationError),
}

struct TraceBuilder {
    current: Network,
    trace: OperationTrace,
}

impl TraceBuilder {
    fn new(net: &Network) -> TraceBuilder {
        TraceBuilder { current: net.clone(), trace: OperationTrace::default() }
    }

    fn push(&mut self, op: NetworkOperation) -> Result<(), CanonicalizeError> {
        self.current = apply(&self.current, &op)?;
        self.trace.push(op);
        Ok(())
    }
}

fn axis_vector(s: usize, axis: SpeciesId, value: BigRational) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); s];
    v[axis] = value;
    v
}

/// Reduces a single-species two-reaction network to `{0 <=> mA}`.
///
/// Accepts networks that are one-species after discounting shared
/// spectator coefficients (a leading translation clears them).  The
/// reduction is: reflect a down-up diagram into an up-down one (translating
/// right first if the reflection would leave the orthant), stretch both
/// reactions to the reactant gap, and translate the lower reactant to
/// zero.  Factor-one stretches and zero translations are skipped, so
/// already-canonical inputs produce an empty trace.
pub fn canonicalize_one_species_two_reactions(
    net: &Network,
) -> Result<(CanonicalFamily, OperationTrace), CanonicalizeError> {
    if net.n_reactions() != 2 {
        return Err(CanonicalizeError::WrongReactionCount);
    }
    let axis = net.one_species().ok_or(CanonicalizeError::NotOneSpecies)?;
    let mut b = TraceBuilder::new(net);
    clear_spectator_coords(&mut b, axis)?;
    let m = one_species_steps(&mut b, axis)?;
    let family = CanonicalFamily::ZeroToMA { m };
    debug_assert!(family.matches(&b.current));
    Ok((family, b.trace))
}

/// Translates away reactant coordinates shared across both reactions off
/// the moving axis, leaving a network supported on `axis` alone.
fn clear_spectator_coords(b: &mut TraceBuilder, axis: SpeciesId) -> Result<(), CanonicalizeError> {
    let s = b.current.n_species();
    let shared = b.current.reactions()[0].reactant.clone();
    let shift: Vec<BigRational> = (0..s)
        .map(|j| if j == axis { BigRational::zero() } else { -shared.coeff(j) })
        .collect();
    if shift.iter().any(|z| !z.is_zero()) {
        b.push(NetworkOperation::Translate { shift })?;
    }
    Ok(())
}

/// The core one-species reduction.  Expects the current network's two
/// reactions to be supported on `axis` alone, one up and one down; returns
/// the parameter `m` of the `{0 <=> mA}` member reached.
fn one_species_steps(b: &mut TraceBuilder, axis: SpeciesId) -> Result<BigRational, CanonicalizeError> {
    let s = b.current.n_species();
    let deltas: Vec<BigRational> = b
        .current
        .reactions()
        .iter()
        .map(|r| r.product.coeff(axis) - r.reactant.coeff(axis))
        .collect();
    if deltas.iter().all(|d| d.is_positive()) || deltas.iter().all(|d| d.is_negative()) {
        return Err(CanonicalizeError::NoPositiveSteadyState);
    }
    // (index, reactant coefficient, length) for the up and down reactions.
    let info = |net: &Network| {
        let mut up = None;
        let mut down = None;
        for (k, r) in net.reactions().iter().enumerate() {
            let a = r.reactant.coeff(axis);
            let delta = r.product.coeff(axis) - &a;
            if delta.is_positive() {
                up = Some((k, a, delta));
            } else {
                down = Some((k, a, -delta));
            }
        }
        (up.unwrap(), down.unwrap())
    };

    let ((_, a_up, _), (_, a_down, _)) = info(&b.current);
    if a_up == a_down {
        // Both directions at one coefficient: balanced rates give a
        // continuum of steady states, so there is no ACR to preserve.
        return Err(CanonicalizeError::NoACR);
    }
    if a_down < a_up {
        // Down-up diagram: reflect it.  The reflection sends the up
        // product `t` to `2r - t` (for up reactant `r`), so translate
        // right first whenever `t > 2r` would leave the orthant.
        let ((_, r, len_up), _) = info(&b.current);
        let t = &r + &len_up;
        let excess = &t - (&r + &r);
        if excess.is_positive() {
            b.push(NetworkOperation::Translate { shift: axis_vector(s, axis, excess) })?;
        }
        b.push(NetworkOperation::PartialScale {
            species: axis,
            factor: -BigRational::one(),
        })?;
    }
    let ((up_idx, a, len_up), (down_idx, d, len_down)) = info(&b.current);
    let m = &d - &a;
    if len_up != m {
        b.push(NetworkOperation::Stretch { reaction: up_idx, factor: &m / &len_up })?;
    }
    if len_down != m {
        b.push(NetworkOperation::Stretch { reaction: down_idx, factor: &m / &len_down })?;
    }
    if !a.is_zero() {
        b.push(NetworkOperation::Translate { shift: axis_vector(s, axis, -a) })?;
    }
    Ok(m)
}

/// Reduces a two-species two-reaction network with ACR onto its canonical
/// family: `GeneralizedSF(n)` when both species move, `DegenerateACR(n)`
/// when only one does and the reactants differ in the still species, and
/// `ZeroToMA(m)` when the still species is a pure spectator.
///
/// The reduction refuses networks without ACR (reactants coinciding or
/// differing in both species) and networks with no positive steady state
/// (stoichiometric dimension two, or parallel same-direction reactions).
pub fn canonicalize_two_species_two_reactions(
    net: &Network,
) -> Result<(CanonicalFamily, OperationTrace), CanonicalizeError> {
    if net.n_species() != 2 {
        return Err(CanonicalizeError::WrongSpeciesCount);
    }
    if net.n_reactions() != 2 {
        return Err(CanonicalizeError::WrongReactionCount);
    }
    if net.stoichiometric_dimension() != 1 {
        // Two independent reaction vectors span the plane; the two
        // monomial flows can never cancel at a positive point.
        return Err(CanonicalizeError::NoPositiveSteadyState);
    }
    let v1 = net.reaction_vector(0);
    let v2 = net.reaction_vector(1);
    let j = (0..2).find(|&j| !v1[j].is_zero()).expect("nontrivial reaction");
    let ratio = &v2[j] / &v1[j];
    if ratio.is_positive() {
        // Parallel, same direction: the flow is monotone along the line.
        return Err(CanonicalizeError::NoPositiveSteadyState);
    }
    let r0 = net.reactions()[0].reactant.clone();
    let r1 = net.reactions()[1].reactant.clone();
    let differs = [r0.coeff(0) != r1.coeff(0), r0.coeff(1) != r1.coeff(1)];
    let cat_only = net.catalyst_only_species();

    if cat_only.is_empty() {
        match (differs[0], differs[1]) {
            (false, false) | (true, true) => Err(CanonicalizeError::NoACR),
            (true, false) => generalized_steps(net, 0),
            (false, true) => generalized_steps(net, 1),
        }
    } else {
        let still = cat_only[0];
        let moving = 1 - still;
        if differs[moving] {
            if differs[still] {
                // Reactants differ in two species: no ACR on a line.
                return Err(CanonicalizeError::NoACR);
            }
            // The still species is a shared spectator; clear it and run
            // the single-species reduction.
            let mut b = TraceBuilder::new(net);
            clear_spectator_coords(&mut b, moving)?;
            let m = one_species_steps(&mut b, moving)?;
            let family = CanonicalFamily::ZeroToMA { m };
            debug_assert!(family.matches(&b.current));
            Ok((family, b.trace))
        } else {
            if !differs[still] {
                // Identical reactants: balanced rates freeze the network
                // on a continuum.
                return Err(CanonicalizeError::NoACR);
            }
            degenerate_steps(net, moving, still)
        }
    }
}

/// Reduction onto `{A -> 2A, A + nB -> nB}`: the moving species keeps the
/// shared reactant coefficient, the still species carries the gap `n`.
fn degenerate_steps(
    net: &Network,
    moving: SpeciesId,
    still: SpeciesId,
) -> Result<(CanonicalFamily, OperationTrace), CanonicalizeError> {
    let one = BigRational::one();
    let mut b = TraceBuilder::new(net);
    let lo_hi = |net: &Network| {
        let c0 = net.reactions()[0].reactant.coeff(still);
        let c1 = net.reactions()[1].reactant.coeff(still);
        if c0 < c1 { (0usize, 1usize, c0, c1) } else { (1, 0, c1, c0) }
    };
    let (_, _, lo_c, hi_c) = lo_hi(&b.current);
    let n = &hi_c - &lo_c;

    // Both reactions will be stretched to unit length along the moving
    // axis; make room first when the shared reactant coefficient sits
    // below one (possible only with generalized coefficients).
    let y_m = b.current.reactions()[0].reactant.coeff(moving);
    if y_m < one {
        b.push(NetworkOperation::Translate {
            shift: axis_vector(2, moving, &one - &y_m),
        })?;
    }
    for k in 0..2 {
        let len = {
            let r = &b.current.reactions()[k];
            (r.product.coeff(moving) - r.reactant.coeff(moving)).abs()
        };
        if len != one {
            b.push(NetworkOperation::Stretch { reaction: k, factor: &one / &len })?;
        }
    }
    let (lo_idx, _, _, _) = lo_hi(&b.current);
    let lo_delta = {
        let r = &b.current.reactions()[lo_idx];
        r.product.coeff(moving) - r.reactant.coeff(moving)
    };
    if lo_delta.is_negative() {
        // The low-coefficient reaction must point up; flip both.
        b.push(NetworkOperation::PartialScale { species: moving, factor: -one.clone() })?;
    }
    let y_m = b.current.reactions()[0].reactant.coeff(moving);
    let (_, _, lo_c, _) = lo_hi(&b.current);
    let mut shift = vec![BigRational::zero(); 2];
    shift[moving] = &one - &y_m;
    shift[still] = -lo_c;
    if shift.iter().any(|z| !z.is_zero()) {
        b.push(NetworkOperation::Translate { shift })?;
    }
    let family = CanonicalFamily::DegenerateACR { n };
    debug_assert!(family.matches(&b.current));
    Ok((family, b.trace))
}

/// Reduction onto `{B -> A, nA + B -> (n-1)A + 2B}` for networks where
/// both species move and the reactants differ only in `witness`.
fn generalized_steps(
    net: &Network,
    witness: SpeciesId,
) -> Result<(CanonicalFamily, OperationTrace), CanonicalizeError> {
    let one = BigRational::one();
    let mut b = TraceBuilder::new(net);
    if witness != 0 {
        // Deterministic orientation: the witness axis is species 0, the
        // both-directions axis species 1.
        b.push(NetworkOperation::Relabel { permutation: vec![1, 0] })?;
    }
    // From here species 0 is the witness, species 1 the carrier.
    let views = |net: &Network| {
        let c0 = net.reactions()[0].reactant.coeff(0);
        let c1 = net.reactions()[1].reactant.coeff(0);
        let (small, big, y_a, z_a) =
            if c0 < c1 { (0usize, 1usize, c0, c1) } else { (1, 0, c1, c0) };
        let h = net.reactions()[small].reactant.coeff(1);
        (small, big, y_a, z_a, h)
    };
    let (_, _, y_a, z_a, _) = views(&b.current);
    let n = &z_a - &y_a;
    if n < one {
        // ACR holds, but `(n-1)` would be a negative coefficient: the
        // family has no member to land on.
        return Err(CanonicalizeError::NoCanonicalTarget);
    }

    // Equalize lengths, stretching the longer reaction (squared norms).
    let norm_sq = |net: &Network, k: usize| -> BigRational {
        net.reaction_vector(k).iter().map(|d| d * d).sum()
    };
    let (n0, n1) = (norm_sq(&b.current, 0), norm_sq(&b.current, 1));
    if n0 != n1 {
        let (longer, shorter) = if n0 > n1 { (0usize, 1usize) } else { (1, 0) };
        let v_long = b.current.reaction_vector(longer);
        let v_short = b.current.reaction_vector(shorter);
        let factor = (&v_short[0] / &v_long[0]).abs();
        b.push(NetworkOperation::Stretch { reaction: longer, factor })?;
    }

    // Both species move in both (now equal and opposite) reactions, so
    // every component below is nonzero.
    let (small, _, _, _, h) = views(&b.current);
    let v_small_0 = {
        let r = &b.current.reactions()[small];
        r.product.coeff(0) - r.reactant.coeff(0)
    };
    if v_small_0 != one {
        b.push(NetworkOperation::PartialScale { species: 0, factor: one.clone() / v_small_0 })?;
    }
    if h < one {
        // Make room on the carrier axis before flipping it (generalized
        // coefficients only).
        b.push(NetworkOperation::Translate {
            shift: vec![BigRational::zero(), &one - &h],
        })?;
    }
    let (small, _, _, _, _) = views(&b.current);
    let v_small_1 = {
        let r = &b.current.reactions()[small];
        r.product.coeff(1) - r.reactant.coeff(1)
    };
    if v_small_1 != -one.clone() {
        b.push(NetworkOperation::PartialScale { species: 1, factor: -(one.clone() / v_small_1) })?;
    }
    let (_, _, y_a, _, h) = views(&b.current);
    let shift = vec![-y_a, &one - &h];
    if shift.iter().any(|z| !z.is_zero()) {
        b.push(NetworkOperation::Translate { shift })?;
    }
    let family = CanonicalFamily::GeneralizedSF { n };
    debug_assert!(family.matches(&b.current));
    Ok((family, b.trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::net_core::parse::{parse_network, parse_network_with};

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn frac(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn already_canonical_pairs_have_empty_traces() {
        for (text, m) in [("0 -> A\nA -> 0", 1), ("0 -> 3A\n3A -> 0", 3)] {
            let net = parse_network(text).unwrap();
            let (family, trace) = canonicalize_one_species_two_reactions(&net).unwrap();
            assert_eq!(family, CanonicalFamily::ZeroToMA { m: rat(m) });
            assert!(trace.is_empty(), "{text} should already be canonical");
        }
    }

    #[test]
    fn shifted_pair_translates_down() {
        let net = parse_network("2A -> 5A\n5A -> 2A").unwrap();
        let (family, trace) = canonicalize_one_species_two_reactions(&net).unwrap();
        assert_eq!(family, CanonicalFamily::ZeroToMA { m: rat(3) });
        assert_eq!(
            trace.steps,
            vec![NetworkOperation::Translate { shift: vec![rat(-2)] }]
        );
        assert_eq!(trace.apply(&net).unwrap().render(), "0 -> 3A\n3A -> 0");
    }

    #[test]
    fn unequal_lengths_stretch_to_the_gap() {
        // Up at 1 (length 1), down at 4 (length 4): gap 3.
        let net = parse_network("A -> 2A\n4A -> 0").unwrap();
        let (family, trace) = canonicalize_one_species_two_reactions(&net).unwrap();
        assert_eq!(family, CanonicalFamily::ZeroToMA { m: rat(3) });
        assert_eq!(
            trace.steps,
            vec![
                NetworkOperation::Stretch { reaction: 0, factor: rat(3) },
                NetworkOperation::Stretch { reaction: 1, factor: frac(3, 4) },
                NetworkOperation::Translate { shift: vec![rat(-1)] },
            ]
        );
        let end = trace.apply(&net).unwrap();
        assert_eq!(end.render(), "0 -> 3A\n3A -> 0");
    }

    #[test]
    fn down_up_diagram_reflects_then_reduces() {
        let net = parse_network("2A -> A\n3A -> 5A").unwrap();
        let (family, trace) = canonicalize_one_species_two_reactions(&net).unwrap();
        assert_eq!(family, CanonicalFamily::ZeroToMA { m: rat(1) });
        assert_eq!(
            trace.steps,
            vec![
                NetworkOperation::PartialScale { species: 0, factor: rat(-1) },
                NetworkOperation::Stretch { reaction: 1, factor: frac(1, 2) },
                NetworkOperation::Translate { shift: vec![rat(-2)] },
            ]
        );
        assert_eq!(trace.apply(&net).unwrap().render(), "0 -> A\nA -> 0");
    }

    #[test]
    fn reflection_translates_right_when_it_would_leave_the_orthant() {
        // Up reaction 3A -> 7A reflects to 3A -> -A; a right translation
        // by 1 first makes the reflection land at zero.
        let net = parse_network("2A -> A\n3A -> 7A").unwrap();
        let (family, trace) = canonicalize_one_species_two_reactions(&net).unwrap();
        assert_eq!(family, CanonicalFamily::ZeroToMA { m: rat(1) });
        assert_eq!(
            trace.steps,
            vec![
                NetworkOperation::Translate { shift: vec![rat(1)] },
                NetworkOperation::PartialScale { species: 0, factor: rat(-1) },
                NetworkOperation::Stretch { reaction: 1, factor: frac(1, 4) },
                NetworkOperation::Translate { shift: vec![rat(-3)] },
            ]
        );
        assert_eq!(trace.apply(&net).unwrap().render(), "0 -> A\nA -> 0");
    }

    #[test]
    fn spectator_coefficients_translate_away_first() {
        let net = parse_network("B -> A + B\nA + B -> B").unwrap();
        let (family, trace) = canonicalize_one_species_two_reactions(&net).unwrap();
        assert_eq!(family, CanonicalFamily::ZeroToMA { m: rat(1) });
        // Species order follows first appearance, so B is species 0.
        assert_eq!(
            trace.steps,
            vec![NetworkOperation::Translate { shift: vec![rat(-1), rat(0)] }]
        );
        let end = trace.apply(&net).unwrap();
        assert_eq!(end.render(), "0 -> A\nA -> 0");
        assert!(family.matches(&end));
    }

    #[test]
    fn one_species_rejections() {
        let both = parse_network("A -> 2A\nA -> 0").unwrap();
        assert_eq!(
            canonicalize_one_species_two_reactions(&both),
            Err(CanonicalizeError::NoACR)
        );
        let monotone = parse_network("A -> 2A\n2A -> 3A").unwrap();
        assert_eq!(
            canonicalize_one_species_two_reactions(&monotone),
            Err(CanonicalizeError::NoPositiveSteadyState)
        );
        let three = fixtures::one_dim_three_reactions();
        assert_eq!(
            canonicalize_one_species_two_reactions(&three),
            Err(CanonicalizeError::WrongReactionCount)
        );
        let two_species = fixtures::disguised_sf2();
        assert_eq!(
            canonicalize_one_species_two_reactions(&two_species),
            Err(CanonicalizeError::NotOneSpecies)
        );
    }

    #[test]
    fn disguised_network_walks_to_generalized_form_in_five_steps() {
        let net = fixtures::disguised_sf2();
        let (family, trace) = canonicalize_two_species_two_reactions(&net).unwrap();
        assert_eq!(family, CanonicalFamily::GeneralizedSF { n: rat(2) });
        assert_eq!(
            trace.steps,
            vec![
                NetworkOperation::Relabel { permutation: vec![1, 0] },
                NetworkOperation::Stretch { reaction: 1, factor: frac(1, 2) },
                NetworkOperation::PartialScale { species: 0, factor: rat(-1) },
                NetworkOperation::PartialScale { species: 1, factor: frac(-1, 2) },
                NetworkOperation::Translate { shift: vec![rat(-1), rat(-4)] },
            ]
        );
        let end = trace.apply(&net).unwrap();
        assert_eq!(end.render(), fixtures::generalized_sf(2).render());
        // The trace inverts step by step back to the original.
        let back = trace.inverted().unwrap().apply(&end).unwrap();
        assert!(back.structurally_eq(&net));
    }

    #[test]
    fn generalized_family_members_are_fixed_points() {
        for n in 1..=4 {
            let net = fixtures::generalized_sf(n);
            let (family, trace) = canonicalize_two_species_two_reactions(&net).unwrap();
            assert_eq!(family, CanonicalFamily::GeneralizedSF { n: rat(n as i64) });
            assert!(trace.is_empty(), "generalized_sf({n}) is already canonical");
        }
    }

    #[test]
    fn degenerate_family_members_are_fixed_points() {
        for n in 1..=4 {
            let net = fixtures::degenerate_acr(n);
            let (family, trace) = canonicalize_two_species_two_reactions(&net).unwrap();
            assert_eq!(family, CanonicalFamily::DegenerateACR { n: rat(n as i64) });
            assert!(trace.is_empty(), "degenerate_acr({n}) is already canonical");
        }
    }

    #[test]
    fn degenerate_input_reduces_with_stretch_and_translate() {
        let net = parse_network("2A + B -> 4A + B\n2A + 2B -> A + 2B").unwrap();
        let (family, trace) = canonicalize_two_species_two_reactions(&net).unwrap();
        assert_eq!(family, CanonicalFamily::DegenerateACR { n: rat(1) });
        assert_eq!(
            trace.steps,
            vec![
                NetworkOperation::Stretch { reaction: 0, factor: frac(1, 2) },
                NetworkOperation::Translate { shift: vec![rat(-1), rat(-1)] },
            ]
        );
        assert_eq!(trace.apply(&net).unwrap().render(), "A -> 2A\nA + B -> B");
    }

    #[test]
    fn still_spectator_reduces_to_zero_to_ma() {
        let net = parse_network("A + B -> 2A + B\n3A + B -> 2A + B").unwrap();
        let (family, trace) = canonicalize_two_species_two_reactions(&net).unwrap();
        assert_eq!(family, CanonicalFamily::ZeroToMA { m: rat(2) });
        assert_eq!(
            trace.steps,
            vec![
                NetworkOperation::Translate { shift: vec![rat(0), rat(-1)] },
                NetworkOperation::Stretch { reaction: 0, factor: rat(2) },
                NetworkOperation::Stretch { reaction: 1, factor: rat(2) },
                NetworkOperation::Translate { shift: vec![rat(-1), rat(0)] },
            ]
        );
        assert_eq!(trace.apply(&net).unwrap().render(), "0 -> 2A\n2A -> 0");
    }

    #[test]
    fn two_species_rejections() {
        // Two independent reaction vectors: the steady-state equations are
        // inconsistent, so no positive steady state exists.
        assert_eq!(
            canonicalize_two_species_two_reactions(&fixtures::no_acr_two_species()),
            Err(CanonicalizeError::NoPositiveSteadyState)
        );
        // One-dimensional, but reactants differ in both species.
        let both_differ = parse_network("2A + B -> A\n3A + 4B -> 4A + 5B").unwrap();
        assert_eq!(
            canonicalize_two_species_two_reactions(&both_differ),
            Err(CanonicalizeError::NoACR)
        );
        // Identical reactants, opposite directions: continuum at balance.
        let identical = parse_network("A + B -> 2A + 2B\nA + B -> 0").unwrap();
        assert_eq!(
            canonicalize_two_species_two_reactions(&identical),
            Err(CanonicalizeError::NoACR)
        );
        // Independent directions span the plane.
        let plane = parse_network("0 -> A\n0 -> B").unwrap();
        assert_eq!(
            canonicalize_two_species_two_reactions(&plane),
            Err(CanonicalizeError::NoPositiveSteadyState)
        );
        // Parallel and same direction.
        let monotone = parse_network("A + B -> 2A + 2B\n2A + 2B -> 3A + 3B").unwrap();
        assert_eq!(
            canonicalize_two_species_two_reactions(&monotone),
            Err(CanonicalizeError::NoPositiveSteadyState)
        );
        // Identical reactants in the still species, moving axis balanced.
        let still_identical = parse_network("A + B -> 2A + B\nA + B -> B").unwrap();
        assert_eq!(
            canonicalize_two_species_two_reactions(&still_identical),
            Err(CanonicalizeError::NoACR)
        );
    }

    #[test]
    fn fractional_witness_gap_has_no_target() {
        let net = parse_network_with(
            "B -> 1/2A\n1/2A + B -> 2B",
            crate::net_core::Strictness::GeneralizedRational,
        )
        .unwrap();
        assert_eq!(
            canonicalize_two_species_two_reactions(&net),
            Err(CanonicalizeError::NoCanonicalTarget)
        );
    }

    #[test]
    fn family_matching_is_label_and_axis_agnostic() {
        // Generalized form with the species roles swapped.
        let swapped = parse_network("A -> B\n3B + A -> 2B + 2A").unwrap();
        assert!(CanonicalFamily::GeneralizedSF { n: rat(3) }.matches(&swapped));
        assert!(!CanonicalFamily::GeneralizedSF { n: rat(2) }.matches(&swapped));
        // Pair under different labels, plus an inert species.
        let pair = parse_network("X -> 0\n0 -> X").unwrap();
        assert!(CanonicalFamily::ZeroToMA { m: rat(1) }.matches(&pair));
        assert!(CanonicalFamily::DegenerateACR { n: rat(2) }
            .matches(&fixtures::degenerate_acr(2)));
    }

    #[test]
    fn target_networks_render_as_expected() {
        assert_eq!(
            CanonicalFamily::ZeroToMA { m: rat(2) }.target_network().unwrap().render(),
            "0 -> 2A\n2A -> 0"
        );
        assert_eq!(
            CanonicalFamily::GeneralizedSF { n: rat(1) }.target_network().unwrap().render(),
            fixtures::generalized_sf(1).render()
        );
        assert_eq!(
            CanonicalFamily::DegenerateACR { n: rat(3) }.target_network().unwrap().render(),
            fixtures::degenerate_acr(3).render()
        );
        assert!(CanonicalFamily::GeneralizedSF { n: frac(1, 2) }.target_network().is_none());
    }

    #[test]
    fn family_serialization_uses_rational_strings() {
        let family = CanonicalFamily::GeneralizedSF { n: rat(2) };
        let json = serde_json::to_string(&family).unwrap();
        assert_eq!(json, r#"{"family":"generalized_sf","n":"2"}"#);
        let back: CanonicalFamily = serde_json::from_str(&json).unwrap();
        assert_eq!(back, family);
        assert_eq!(family.to_string(), "GeneralizedSF(2)");
        assert_eq!(
            CanonicalFamily::ZeroToMA { m: frac(3, 2) }.to_string(),
            "ZeroToMA(3/2)"
        );
    }
}

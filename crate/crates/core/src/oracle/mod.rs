//! Exact steady-state oracle for mass-action kinetics.
//!
//! A rate assignment turns a network into a polynomial dynamical system.
//! For networks whose reactant complexes agree away from one species, the
//! positive steady states are governed by a single polynomial in that
//! species — exponents are the species' reactant coefficients, and the
//! coefficients come from the species' own row of the stoichiometric
//! matrix (or, for a catalyst-only species, from a reference row; every
//! steady state is then degenerate along the other axes).  Root isolation
//! on that polynomial is exact, which makes the oracle an independent
//! check on the structural ACR verdicts.

pub mod poly;

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::net_core::{Network, SpeciesId};
use crate::ratio_fmt;
use poly::{isolate_positive_roots_pinned, IsolatedRoot, Sign, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("expected {expected} rate constants, got {got}")]
    RateCountMismatch { expected: usize, got: usize },
    #[error("rate constant {0} is not positive")]
    NonPositiveRate(usize),
    #[error("network has no reactions")]
    NoReactions,
    #[error("reactant complexes differ away from species {0}; no single-variable reduction")]
    NotReducible(SpeciesId),
    #[error("network is not one-dimensional")]
    NotOneDimensional,
    #[error("steady-state polynomial vanishes identically; positive steady states form a continuum")]
    ZeroPolynomial,
}

/// A network together with one positive rational rate constant per
/// reaction.
#[derive(Debug, Clone, PartialEq)]
pub struct MassActionSystem {
    net: Network,
    kappa: Vec<BigRational>,
}

/// One signed monomial of a rate equation:
/// `coefficient * prod_j x_j^{exponents[j]}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OdeMonomial {
    pub coefficient: BigRational,
    pub exponents: Vec<BigRational>,
}

impl MassActionSystem {
    pub fn new(net: &Network, kappa: Vec<BigRational>) -> Result<Self, OracleError> {
        if kappa.len() != net.n_reactions() {
            return Err(OracleError::RateCountMismatch {
                expected: net.n_reactions(),
                got: kappa.len(),
            });
        }
        if let Some(k) = kappa.iter().position(|k| !k.is_positive()) {
            return Err(OracleError::NonPositiveRate(k));
        }
        Ok(MassActionSystem { net: net.clone(), kappa })
    }

    /// All rate constants equal to one.
    pub fn uniform(net: &Network) -> MassActionSystem {
        MassActionSystem {
            net: net.clone(),
            kappa: vec![BigRational::one(); net.n_reactions()],
        }
    }

    pub fn net(&self) -> &Network {
        &self.net
    }

    pub fn kappa(&self) -> &[BigRational] {
        &self.kappa
    }

    /// Right-hand side of `x_i' `, merged over equal monomials and sorted
    /// by exponent vector; an empty vector means `x_i' = 0`.
    pub fn ode_rhs(&self, i: SpeciesId) -> Vec<OdeMonomial> {
        let s = self.net.n_species();
        let mut merged: BTreeMap<Vec<BigRational>, BigRational> = BTreeMap::new();
        for (k, r) in self.net.reactions().iter().enumerate() {
            let delta = r.product.coeff(i) - r.reactant.coeff(i);
            if delta.is_zero() {
                continue;
            }
            let exps = r.reactant.to_vec(s);
            *merged.entry(exps).or_insert_with(BigRational::zero) += &self.kappa[k] * delta;
        }
        merged
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(exponents, coefficient)| OdeMonomial { coefficient, exponents })
            .collect()
    }

    /// The formal sum `sum_i weights[i] * x_i'` as merged monomials; empty
    /// exactly when the combination vanishes identically (as it must for
    /// every conservation-law row).
    pub fn weighted_rhs_sum(&self, weights: &[BigRational]) -> Vec<OdeMonomial> {
        assert_eq!(weights.len(), self.net.n_species());
        let mut merged: BTreeMap<Vec<BigRational>, BigRational> = BTreeMap::new();
        for (i, w) in weights.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            for m in self.ode_rhs(i) {
                *merged.entry(m.exponents).or_insert_with(BigRational::zero) +=
                    w * m.coefficient;
            }
        }
        merged
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(exponents, coefficient)| OdeMonomial { coefficient, exponents })
            .collect()
    }

    /// Reduces the steady-state system to one polynomial in `species`.
    /// Requires every pair of reactant complexes to agree away from
    /// `species` and the network to be one-dimensional.
    pub fn reduce_one_dimensional(
        &self,
        species: SpeciesId,
    ) -> Result<SteadyStatePolynomial, OracleError> {
        let net = &self.net;
        assert!(species < net.n_species(), "species id out of range");
        if net.n_reactions() == 0 {
            return Err(OracleError::NoReactions);
        }
        let first = &net.reactions()[0].reactant;
        let agrees_off_axis = net.reactions().iter().skip(1).all(|r| {
            (0..net.n_species())
                .filter(|&j| j != species)
                .all(|j| r.reactant.coeff(j) == first.coeff(j))
        });
        if !agrees_off_axis {
            return Err(OracleError::NotReducible(species));
        }
        if net.stoichiometric_dimension() != 1 {
            return Err(OracleError::NotOneDimensional);
        }
        let row_moves = |j: SpeciesId| {
            net.reactions()
                .iter()
                .any(|r| r.product.coeff(j) != r.reactant.coeff(j))
        };
        let (reference, degenerate_axis) = if row_moves(species) {
            (species, false)
        } else {
            let j = (0..net.n_species())
                .find(|&j| row_moves(j))
                .expect("nontrivial reactions move some species");
            (j, true)
        };
        let mut terms: BTreeMap<BigRational, BigRational> = BTreeMap::new();
        for (k, r) in net.reactions().iter().enumerate() {
            let delta = r.product.coeff(reference) - r.reactant.coeff(reference);
            if delta.is_zero() {
                continue;
            }
            let exponent = r.reactant.coeff(species);
            *terms.entry(exponent).or_insert_with(BigRational::zero) += &self.kappa[k] * delta;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(SteadyStatePolynomial {
            species,
            reference_species: reference,
            degenerate_axis,
            terms: terms
                .into_iter()
                .map(|(exponent, coefficient)| Term { exponent, coefficient })
                .collect(),
        })
    }

    /// Isolates the positive steady-state values of `species` exactly.
    pub fn steady_state_report(&self, species: SpeciesId) -> Result<RootReport, OracleError> {
        let polynomial = self.reduce_one_dimensional(species)?;
        if polynomial.is_identically_zero() {
            return Ok(RootReport {
                species,
                reference_species: polynomial.reference_species,
                degenerate_axis: polynomial.degenerate_axis,
                continuum: true,
                positive_root_count: 0,
                roots: vec![],
                polynomial,
            });
        }
        let roots = polynomial.positive_roots()?;
        Ok(RootReport {
            species,
            reference_species: polynomial.reference_species,
            degenerate_axis: polynomial.degenerate_axis,
            continuum: false,
            positive_root_count: roots.len(),
            roots,
            polynomial,
        })
    }
}

/// One term of the reduced steady-state polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Term {
    #[serde(with = "ratio_fmt::serde_rational")]
    pub exponent: BigRational,
    #[serde(with = "ratio_fmt::serde_rational")]
    pub coefficient: BigRational,
}

/// The reduced steady-state equation `sum_t coefficient * x^exponent = 0`
/// along one species' axis.  Positive steady states of the full system
/// correspond exactly to positive roots (times the free coordinates when
/// `degenerate_axis` holds).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SteadyStatePolynomial {
    /// The variable axis.
    pub species: SpeciesId,
    /// The stoichiometric row supplying the coefficients — `species`
    /// itself unless it is catalyst-only.
    pub reference_species: SpeciesId,
    /// True when `species` is catalyst-only: roots are still its exact
    /// steady values, but every positive steady state is degenerate.
    pub degenerate_axis: bool,
    /// Nonzero terms, exponents increasing.  Empty means the equation
    /// vanishes identically (a continuum of steady states).
    pub terms: Vec<Term>,
}

impl SteadyStatePolynomial {
    pub fn is_identically_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Clears fractional exponents by `x = t^scale`; returns the integer
    /// polynomial in `t` and the scale.
    pub fn to_unipoly(&self) -> (UniPoly, u64) {
        let scale = self
            .terms
            .iter()
            .fold(BigInt::one(), |acc, t| acc.lcm(t.exponent.denom()))
            .to_u64()
            .expect("exponent denominators stay small");
        let scale_rat = BigRational::from_integer(BigInt::from(scale));
        let mut coeffs: Vec<BigRational> = vec![];
        for t in &self.terms {
            let e = (&t.exponent * &scale_rat)
                .to_integer()
                .to_usize()
                .expect("polynomial degree stays small");
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigRational::zero());
            }
            coeffs[e] = t.coefficient.clone();
        }
        (UniPoly::new(coeffs), scale)
    }

    /// Isolates the positive roots exactly.  `Err(ZeroPolynomial)` when the
    /// equation vanishes identically.
    pub fn positive_roots(&self) -> Result<Vec<IsolatedRoot>, OracleError> {
        if self.is_identically_zero() {
            return Err(OracleError::ZeroPolynomial);
        }
        let (p, scale) = self.to_unipoly();
        let roots = isolate_positive_roots_pinned(&p);
        if scale == 1 {
            return Ok(roots);
        }
        // Map roots of p(t) back through x = t^scale (monotone on t > 0):
        // brackets, exact values, multiplicities, and derivative signs all
        // transport unchanged.
        Ok(roots
            .into_iter()
            .map(|r| IsolatedRoot {
                lower: rat_pow(&r.lower, scale),
                upper: rat_pow(&r.upper, scale),
                exact: r.exact.map(|e| rat_pow(&e, scale)),
                multiplicity: r.multiplicity,
                derivative_sign: r.derivative_sign,
            })
            .collect())
    }

    pub fn render(&self, net: &Network) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let var = &net.species()[self.species].label;
        let mut out = String::new();
        for (i, t) in self.terms.iter().enumerate() {
            let mag = t.coefficient.abs();
            let sign = t.coefficient.is_negative();
            if i == 0 {
                if sign {
                    out.push('-');
                }
            } else {
                out.push_str(if sign { " - " } else { " + " });
            }
            let mut factors: Vec<String> = vec![];
            if !mag.is_one() || t.exponent.is_zero() {
                factors.push(ratio_fmt::format_rational(&mag));
            }
            if !t.exponent.is_zero() {
                factors.push(render_power(var, &t.exponent));
            }
            out.push_str(&factors.join(" "));
        }
        out
    }
}

/// Exact positive-root isolation for one species' steady values.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootReport {
    pub species: SpeciesId,
    pub reference_species: SpeciesId,
    pub degenerate_axis: bool,
    /// Every positive value of the species is steady (the reduced equation
    /// vanished identically).
    pub continuum: bool,
    pub positive_root_count: usize,
    pub roots: Vec<IsolatedRoot>,
    pub polynomial: SteadyStatePolynomial,
}

impl RootReport {
    /// A steady value with no local sign information: multiple root,
    /// catalyst-only axis, or a continuum.
    pub fn is_degenerate(&self) -> bool {
        self.continuum
            || self.degenerate_axis
            || self.roots.iter().any(|r| r.multiplicity > 1)
    }
}

/// The sampling grid for empirical rate sweeps: powers of two from `1/8`
/// to `8`.
pub fn rate_grid() -> Vec<BigRational> {
    [(1, 8), (1, 4), (1, 2), (1, 1), (2, 1), (4, 1), (8, 1)]
        .iter()
        .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
        .collect()
}

/// `samples` rate assignments drawn from [`rate_grid`] with a seeded,
/// reproducible generator.
pub fn sample_rate_constants(
    n_reactions: usize,
    samples: usize,
    seed: u64,
) -> Vec<Vec<BigRational>> {
    let grid = rate_grid();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            (0..n_reactions)
                .map(|_| grid[rng.gen_range(0..grid.len())].clone())
                .collect()
        })
        .collect()
}

fn serialize_opt_rat_vec<S: Serializer>(
    v: &Option<Vec<BigRational>>,
    ser: S,
) -> Result<S::Ok, S::Error> {
    match v {
        None => ser.serialize_none(),
        Some(rats) => {
            let strings: Vec<String> = rats.iter().map(ratio_fmt::format_rational).collect();
            ser.serialize_some(&strings)
        }
    }
}

/// Outcome of a seeded rate sweep on one species.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EmpiricalAcrReport {
    pub species: SpeciesId,
    pub samples: usize,
    pub seed: u64,
    /// Some sample had a positive steady state.
    pub any_positive_root: bool,
    /// Some sample produced an identically-zero equation.
    pub any_continuum: bool,
    pub max_distinct_positive_roots: usize,
    /// No sample had two distinct positive roots or a continuum — the
    /// sampled signature of ACR capacity.
    pub always_at_most_one_root: bool,
    pub unique_root_samples: usize,
    /// Unique-root samples whose root is simple with negative derivative.
    pub stable_unique_root_samples: usize,
    pub degenerate_axis: bool,
    #[serde(serialize_with = "serialize_opt_rat_vec")]
    pub witness_two_roots: Option<Vec<BigRational>>,
    #[serde(serialize_with = "serialize_opt_rat_vec")]
    pub witness_continuum: Option<Vec<BigRational>>,
}

/// Sweeps seeded rate assignments and tallies the positive-root behaviour
/// of `species`.  Errors out on networks the reduction does not cover.
pub fn empirical_acr_check(
    net: &Network,
    species: SpeciesId,
    samples: usize,
    seed: u64,
) -> Result<EmpiricalAcrReport, OracleError> {
    let mut report = EmpiricalAcrReport {
        species,
        samples,
        seed,
        any_positive_root: false,
        any_continuum: false,
        max_distinct_positive_roots: 0,
        always_at_most_one_root: true,
        unique_root_samples: 0,
        stable_unique_root_samples: 0,
        degenerate_axis: false,
        witness_two_roots: None,
        witness_continuum: None,
    };
    for kappa in sample_rate_constants(net.n_reactions(), samples, seed) {
        let system = MassActionSystem::new(net, kappa.clone())?;
        let root_report = system.steady_state_report(species)?;
        report.degenerate_axis = root_report.degenerate_axis;
        if root_report.continuum {
            report.any_continuum = true;
            report.always_at_most_one_root = false;
            report.witness_continuum.get_or_insert(kappa);
            continue;
        }
        let count = root_report.positive_root_count;
        report.max_distinct_positive_roots = report.max_distinct_positive_roots.max(count);
        if count > 0 {
            report.any_positive_root = true;
        }
        if count > 1 {
            report.always_at_most_one_root = false;
            report.witness_two_roots.get_or_insert(kappa);
        }
        if count == 1 {
            report.unique_root_samples += 1;
            let r = &root_report.roots[0];
            if r.multiplicity == 1 && r.derivative_sign == Sign::Negative {
                report.stable_unique_root_samples += 1;
            }
        }
    }
    Ok(report)
}

/// `base^exp` for a positive integer exponent.
fn rat_pow(base: &BigRational, exp: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut sq = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        sq = &sq * &sq;
        e >>= 1;
    }
    acc
}

fn render_power(label: &str, exponent: &BigRational) -> String {
    if exponent.is_one() {
        label.to_string()
    } else if exponent.is_integer() {
        format!("{label}^{}", exponent.numer())
    } else {
        format!("{label}^({})", ratio_fmt::format_rational(exponent))
    }
}

/// The rate equations with symbolic rate constants, one line per species,
/// e.g. `A' = k1 B - k2 A^2 B`.
pub fn render_symbolic_odes(net: &Network) -> Vec<String> {
    let labels: Vec<String> = net.species_labels();
    (0..net.n_species())
        .map(|i| {
            let mut rhs = String::new();
            let mut first = true;
            for r in net.reactions() {
                let delta = r.product.coeff(i) - r.reactant.coeff(i);
                if delta.is_zero() {
                    continue;
                }
                let sign = delta.is_negative();
                if first {
                    if sign {
                        rhs.push('-');
                    }
                    first = false;
                } else {
                    rhs.push_str(if sign { " - " } else { " + " });
                }
                let mag = delta.abs();
                let mut factors: Vec<String> = vec![];
                if !mag.is_one() {
                    factors.push(ratio_fmt::format_rational(&mag));
                }
                factors.push(r.rate_label.clone());
                for (j, c) in r.reactant.iter() {
                    factors.push(render_power(&labels[j], c));
                }
                rhs.push_str(&factors.join(" "));
            }
            if first {
                rhs.push('0');
            }
            format!("{}' = {}", labels[i], rhs)
        })
        .collect()
}

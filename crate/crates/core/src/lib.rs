//! Structural and algebraic analysis of mass-action reaction networks.
//!
//! The crate is organized around exact rational arithmetic end to end:
//!
//! - [`net_core`]: networks, complexes, reactions, stoichiometric and
//!   conservation linear algebra, structural predicates, and the text parser.
//! - [`graph_struct`]: the reaction graph — linkage classes, terminal strong
//!   linkage classes, and deficiency.
//! - [`embedding`]: embedded networks, projections to a single species, and
//!   arrow diagrams.
//! - [`operations`]: the five ACR-preserving network operations, operation
//!   traces, and canonicalization onto the three ACR families.
//! - [`acr_decide`]: the decision engine for absolute concentration
//!   robustness and stable ACR.
//! - [`oracle`]: the exact steady-state oracle — mass-action polynomials,
//!   univariate reduction, and Sturm-sequence root isolation.
//! - [`enumerate`]: generators for exhaustive small-network sweeps.
//! - [`fixtures`]: named example networks shared by tests and benchmarks.

pub mod acr_decide;
pub mod embedding;
pub mod enumerate;
pub mod fixtures;
pub mod graph_struct;
pub mod net_core;
pub mod operations;
pub mod oracle;
pub mod ratio_fmt;

pub use acr_decide::{
    candidate_species, decide, decide_one_dimensional, decide_one_species, decide_two_reactions,
    positive_steady_state_exists, shinar_feinberg_criterion, AcrStatus, AcrValue, AcrVerdict,
    DecideError, DecisionRule, Evidence, NonterminalPair, SFCriterionReport,
};
pub use embedding::{
    arrow_diagram, embed, has_two_alternating_subnetwork, projection_diagram, Arrow, ArrowDiagram,
    ArrowDiagramError, ArrowPattern, EmbeddedNetwork,
};
pub use graph_struct::{deficiency, linkage_report, LinkageReport, ReactionGraph};
pub use operations::canonical::{
    canonicalize_one_species_two_reactions, canonicalize_two_species_two_reactions,
    CanonicalFamily, CanonicalizeError,
};
pub use operations::{
    apply, ode_effect, rotation_metrics, transport_rates, union, NetworkOperation, OdeEffect,
    OperationError, OperationTrace,
};
pub use oracle::poly::{
    count_distinct_positive_roots, isolate_positive_roots, isolate_positive_roots_pinned,
    IsolatedRoot, Sign, UniPoly,
};
pub use oracle::{
    empirical_acr_check, EmpiricalAcrReport, MassActionSystem, OracleError, RootReport,
    SteadyStatePolynomial, Term,
};
pub use net_core::parse::{parse_network, parse_network_with};
pub use net_core::{
    Complex, ConservationBasis, Network, NetworkError, Reaction, Species, SpeciesId, Strictness,
};

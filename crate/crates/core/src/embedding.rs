//! Embedded networks and one-species arrow diagrams.
//!
//! Embedding keeps a chosen subset of species (and optionally discards
//! chosen reactions): removed species are struck from every complex, kept
//! coefficients survive unchanged, reactions that become trivial disappear,
//! and reactions that become identical merge into one with the source
//! multiplicity recorded.
//!
//! The arrow diagram of a one-species network lists the distinct reactant
//! coefficients in increasing order and marks, at each, whether reactions
//! point up (`->`), down (`<-`), or both (`<->.`).  The run pattern of the
//! diagram decides admissibility of positive steady states and, together
//! with the alternating-subnetwork test, the capacity for ACR.

use std::collections::{BTreeMap, BTreeSet};

use num::rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::net_core::{Complex, Network, Reaction, SpeciesId};
use crate::ratio_fmt;

/// One mark of an arrow diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Arrow {
    /// All reactions at this reactant coefficient increase the species.
    #[serde(rename = "R")]
    Right,
    /// All reactions at this reactant coefficient decrease the species.
    #[serde(rename = "L")]
    Left,
    /// Reactions in both directions share this reactant coefficient.
    #[serde(rename = "B")]
    Both,
}

impl Arrow {
    pub fn ascii(self) -> &'static str {
        match self {
            Arrow::Right => "->",
            Arrow::Left => "<-",
            Arrow::Both => "<->.",
        }
    }

    pub fn unicode(self) -> &'static str {
        match self {
            Arrow::Right => "\u{2192}",
            Arrow::Left => "\u{2190}",
            Arrow::Both => "\u{21c4}\u{0307}",
        }
    }
}

/// Run pattern of an arrow diagram, after collapsing equal neighbours.
///
/// The classifier is purely syntactic: it does not bound run lengths, so a
/// diagram such as `(B, B, L)` also reads as `BothThenLefts`.  Callers that
/// need the strict forms (single `Both` group where one is named) must rule
/// out alternating subnetworks first; with no alternating subnetwork and at
/// least one non-`Both` arrow, at most one `Both` can occur, and the run
/// pattern is then exactly one of the ten named single/double/triple forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ArrowPattern {
    /// Every arrow is `Both`; steady states come in a continuum for
    /// balanced rates, so the species never has ACR.
    AllBoth,
    /// `(B, L+)` — stable form.
    BothThenLefts,
    /// `(R+, B)` — stable form.
    RightsThenBoth,
    /// `(R+, B, L+)` — stable form.
    RightsBothLefts,
    /// `(R+, L+)` — stable form.
    RightsThenLefts,
    /// `(R+)` — no positive steady state for any rates.
    AllRights,
    /// `(L+)` — no positive steady state for any rates.
    AllLefts,
    /// `(L+, R+)` — unstable form.
    LeftsThenRights,
    /// `(B, R+)` — unstable form.
    BothThenRights,
    /// `(L+, B)` — unstable form.
    LeftsThenBoth,
    /// `(L+, B, R+)` — unstable form.
    LeftsBothRights,
    /// More than three runs, or a shape outside the named list; always
    /// contains an alternating subnetwork.
    Other,
}

impl ArrowPattern {
    /// The four run patterns whose unique positive steady state, when it
    /// exists and is nondegenerate, is locally stable.
    pub fn is_stable_form(self) -> bool {
        matches!(
            self,
            ArrowPattern::BothThenLefts
                | ArrowPattern::RightsThenBoth
                | ArrowPattern::RightsBothLefts
                | ArrowPattern::RightsThenLefts
        )
    }

    /// The six run patterns whose steady states, when present, are unstable
    /// or semistable.
    pub fn is_unstable_form(self) -> bool {
        matches!(
            self,
            ArrowPattern::AllRights
                | ArrowPattern::AllLefts
                | ArrowPattern::LeftsThenRights
                | ArrowPattern::BothThenRights
                | ArrowPattern::LeftsThenBoth
                | ArrowPattern::LeftsBothRights
        )
    }

    /// Whether some choice of positive rate constants yields a positive
    /// steady state.  True exactly when the diagram carries both an
    /// up-direction and a down-direction somewhere (a `Both` carries both).
    pub fn admits_positive_steady_state(self) -> bool {
        !matches!(self, ArrowPattern::AllRights | ArrowPattern::AllLefts)
    }
}

/// Arrow diagram of a one-species network (or of one coordinate axis).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArrowDiagram {
    /// The species whose axis the diagram describes.
    pub species: SpeciesId,
    /// Distinct reactant coefficients, increasing.
    #[serde(with = "ratio_fmt::serde_rational_vec")]
    pub reactant_coeffs: Vec<BigRational>,
    /// One arrow per distinct reactant coefficient.
    pub arrows: Vec<Arrow>,
}

impl ArrowDiagram {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_all_both(&self) -> bool {
        !self.arrows.is_empty() && self.arrows.iter().all(|a| *a == Arrow::Both)
    }

    /// Collapses equal neighbours and matches the run sequence.
    pub fn pattern(&self) -> ArrowPattern {
        let mut runs: Vec<Arrow> = Vec::new();
        for a in &self.arrows {
            if runs.last() != Some(a) {
                runs.push(*a);
            }
        }
        use Arrow::*;
        match runs.as_slice() {
            [Both] => ArrowPattern::AllBoth,
            [Both, Left] => ArrowPattern::BothThenLefts,
            [Right, Both] => ArrowPattern::RightsThenBoth,
            [Right, Both, Left] => ArrowPattern::RightsBothLefts,
            [Right, Left] => ArrowPattern::RightsThenLefts,
            [Right] => ArrowPattern::AllRights,
            [Left] => ArrowPattern::AllLefts,
            [Left, Right] => ArrowPattern::LeftsThenRights,
            [Both, Right] => ArrowPattern::BothThenRights,
            [Left, Both] => ArrowPattern::LeftsThenBoth,
            [Left, Both, Right] => ArrowPattern::LeftsBothRights,
            _ => ArrowPattern::Other,
        }
    }

    pub fn render_ascii(&self) -> String {
        let marks: Vec<&str> = self.arrows.iter().map(|a| a.ascii()).collect();
        format!("({})", marks.join(", "))
    }

    pub fn render_unicode(&self) -> String {
        let marks: Vec<&str> = self.arrows.iter().map(|a| a.unicode()).collect();
        format!("({})", marks.join(", "))
    }
}

impl std::fmt::Display for ArrowDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render_ascii())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ArrowDiagramError {
    #[error("network has no reactions to draw")]
    NoReactions,
    #[error("network is not a one-species network or a translate of one")]
    NotOneSpecies,
}

/// Arrow diagram of a one-species network (liberal reading: translates of
/// one-species networks qualify; the off-axis reactant coordinates must
/// agree across all reactions).
pub fn arrow_diagram(net: &Network) -> Result<ArrowDiagram, ArrowDiagramError> {
    if net.n_reactions() == 0 {
        return Err(ArrowDiagramError::NoReactions);
    }
    let species = net.one_species().ok_or(ArrowDiagramError::NotOneSpecies)?;
    Ok(diagram_on_axis(net, species).expect("one-species network has a moving axis"))
}

/// Arrow diagram of the network's projection onto the `species` axis:
/// reactions that do not change `species` are ignored.  Equals the arrow
/// diagram of the network embedded on `{species}` whenever the latter is
/// nonempty.
pub fn projection_diagram(
    net: &Network,
    species: SpeciesId,
) -> Result<ArrowDiagram, ArrowDiagramError> {
    assert!(species < net.n_species(), "species id out of range");
    if net.n_reactions() == 0 {
        return Err(ArrowDiagramError::NoReactions);
    }
    diagram_on_axis(net, species).ok_or(ArrowDiagramError::NoReactions)
}

fn diagram_on_axis(net: &Network, species: SpeciesId) -> Option<ArrowDiagram> {
    // coefficient -> (any up, any down)
    let mut marks: BTreeMap<BigRational, (bool, bool)> = BTreeMap::new();
    for r in net.reactions() {
        let a = r.reactant.coeff(species);
        let b = r.product.coeff(species);
        if a == b {
            continue;
        }
        let up = b > a;
        let entry = marks.entry(a).or_insert((false, false));
        if up {
            entry.0 = true;
        } else {
            entry.1 = true;
        }
    }
    if marks.is_empty() {
        return None;
    }
    let mut reactant_coeffs = Vec::with_capacity(marks.len());
    let mut arrows = Vec::with_capacity(marks.len());
    for (coeff, (up, down)) in marks {
        reactant_coeffs.push(coeff);
        arrows.push(match (up, down) {
            (true, true) => Arrow::Both,
            (true, false) => Arrow::Right,
            (false, true) => Arrow::Left,
            (false, false) => unreachable!("marks only hold moving reactions"),
        });
    }
    Some(ArrowDiagram { species, reactant_coeffs, arrows })
}

/// Lexicographically first triple of reaction indices forming a
/// 2-alternating subnetwork: three pairwise distinct reactant coefficients
/// whose directions, sorted by coefficient, read `(R, L, R)` or `(L, R, L)`.
/// Such a subnetwork rules out ACR in the moving species.
pub fn has_two_alternating_subnetwork(
    net: &Network,
) -> Result<Option<[usize; 3]>, ArrowDiagramError> {
    let species = net.one_species().ok_or(ArrowDiagramError::NotOneSpecies)?;
    let info: Vec<(BigRational, bool)> = net
        .reactions()
        .iter()
        .map(|r| {
            let a = r.reactant.coeff(species);
            let up = r.product.coeff(species) > a;
            (a, up)
        })
        .collect();
    Ok(alternating_triple(&info))
}

/// Lexicographically first index triple whose `(coefficient, direction)`
/// entries, sorted by coefficient, read `(R, L, R)` or `(L, R, L)` over
/// three pairwise distinct coefficients.
pub(crate) fn alternating_triple(info: &[(BigRational, bool)]) -> Option<[usize; 3]> {
    let n = info.len();
    for j in 0..n {
        for k in j + 1..n {
            for l in k + 1..n {
                let mut triple = [(&info[j], j), (&info[k], k), (&info[l], l)];
                triple.sort_by(|x, y| x.0 .0.cmp(&y.0 .0));
                let [(lo, _), (mid, _), (hi, _)] = triple;
                if lo.0 == mid.0 || mid.0 == hi.0 {
                    continue;
                }
                if lo.1 == hi.1 && lo.1 != mid.1 {
                    return Some([j, k, l]);
                }
            }
        }
    }
    None
}

/// A network embedded on a subset of its species.
#[derive(Debug, Clone)]
pub struct EmbeddedNetwork {
    /// The embedded network, over the kept species that still appear.
    pub result: Network,
    /// The kept species, as requested (deduplicated, ascending base ids).
    pub kept_species: Vec<SpeciesId>,
    /// For each result species, its id in the base network.
    pub result_species_base_ids: Vec<SpeciesId>,
    /// For each result reaction, the ascending base reaction indices that
    /// project onto it; the length is the projection multiplicity.
    pub source_reactions: Vec<Vec<usize>>,
}

impl EmbeddedNetwork {
    /// How many base reactions project onto result reaction `k`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.source_reactions[k].len()
    }
}

/// Embeds `net` on the species in `keep`, first discarding the reactions
/// listed in `drop_reactions`.  Projected reactions that become trivial are
/// dropped; projected duplicates merge.  Result species are the kept
/// species that still appear in some complex, in ascending base order.  The
/// result may be the empty network.
///
/// Panics on an out-of-range species id or reaction index, and on an empty
/// `keep` list.
pub fn embed(net: &Network, keep: &[SpeciesId], drop_reactions: &[usize]) -> EmbeddedNetwork {
    let keep_set: BTreeSet<SpeciesId> = keep.iter().copied().collect();
    assert!(!keep_set.is_empty(), "keep at least one species");
    assert!(
        keep_set.iter().all(|&i| i < net.n_species()),
        "species id out of range"
    );
    let drop_set: BTreeSet<usize> = drop_reactions.iter().copied().collect();
    assert!(
        drop_set.iter().all(|&k| k < net.n_reactions()),
        "reaction index out of range"
    );

    let project = |c: &Complex| -> Complex {
        Complex::from_pairs(
            c.iter()
                .filter(|(id, _)| keep_set.contains(id))
                .map(|(id, coeff)| (id, coeff.clone())),
        )
    };

    let mut projected: Vec<(Complex, Complex, Vec<usize>)> = Vec::new();
    for (k, r) in net.reactions().iter().enumerate() {
        if drop_set.contains(&k) {
            continue;
        }
        let reactant = project(&r.reactant);
        let product = project(&r.product);
        if reactant == product {
            continue;
        }
        match projected
            .iter_mut()
            .find(|(a, b, _)| *a == reactant && *b == product)
        {
            Some((_, _, sources)) => sources.push(k),
            None => projected.push((reactant, product, vec![k])),
        }
    }

    let mut appearing: BTreeSet<SpeciesId> = BTreeSet::new();
    for (reactant, product, _) in &projected {
        appearing.extend(reactant.support());
        appearing.extend(product.support());
    }
    let result_species_base_ids: Vec<SpeciesId> = appearing.into_iter().collect();
    let dense: BTreeMap<SpeciesId, SpeciesId> = result_species_base_ids
        .iter()
        .enumerate()
        .map(|(new, &old)| (old, new))
        .collect();
    let labels: Vec<String> = result_species_base_ids
        .iter()
        .map(|&i| net.species()[i].label.clone())
        .collect();

    let remap = |c: &Complex| -> Complex {
        Complex::from_pairs(c.iter().map(|(id, coeff)| (dense[&id], coeff.clone())))
    };

    let mut reactions = Vec::with_capacity(projected.len());
    let mut source_reactions = Vec::with_capacity(projected.len());
    for (reactant, product, sources) in &projected {
        reactions.push(Reaction::new(remap(reactant), remap(product)));
        source_reactions.push(sources.clone());
    }

    let result = Network::new(labels, reactions, net.strictness())
        .expect("projection of a valid network stays valid");
    EmbeddedNetwork {
        result,
        kept_species: keep_set.into_iter().collect(),
        result_species_base_ids,
        source_reactions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::net_core::Strictness;

    #[test]
    fn embeds_flow_system_onto_its_output_species() {
        let emb = embed(&fixtures::generalized_sf(2), &[1], &[]);
        assert_eq!(emb.result.render(), "B -> 0\nB -> 2B");
        assert_eq!(emb.result_species_base_ids, vec![1]);
        assert_eq!(emb.source_reactions, vec![vec![0], vec![1]]);
        let d = arrow_diagram(&emb.result).unwrap();
        assert_eq!(d.arrows, vec![Arrow::Both]);
        assert_eq!(d.pattern(), ArrowPattern::AllBoth);
        assert_eq!(d.render_ascii(), "(<->.)");
    }

    #[test]
    fn embeds_flow_system_onto_its_regulated_species() {
        let emb = embed(&fixtures::generalized_sf(3), &[0], &[]);
        assert_eq!(emb.result.render(), "0 -> A\n3A -> 2A");
        let d = arrow_diagram(&emb.result).unwrap();
        assert_eq!(d.arrows, vec![Arrow::Right, Arrow::Left]);
        assert!(d.pattern().is_stable_form());
    }

    #[test]
    fn merges_projected_duplicates_with_multiplicity() {
        let emb = embed(&fixtures::one_dim_three_reactions(), &[1], &[]);
        assert_eq!(emb.result.render(), "B -> 0\nB -> 2B");
        assert_eq!(emb.source_reactions, vec![vec![0], vec![1, 2]]);
        assert_eq!(emb.multiplicity(1), 2);
    }

    #[test]
    fn keeping_everything_is_the_identity() {
        let net = fixtures::generalized_sf(2);
        let emb = embed(&net, &[0, 1], &[]);
        assert!(emb.result.same_reaction_set(&net));
        assert_eq!(emb.result_species_base_ids, vec![0, 1]);
        assert_eq!(emb.source_reactions, vec![vec![0], vec![1]]);
    }

    #[test]
    fn dropping_reactions_restricts_the_network() {
        let emb = embed(&fixtures::union_of_acr_parts(), &[0], &[2, 3]);
        assert_eq!(emb.result.render(), "0 -> A\nA -> 0");
    }

    #[test]
    fn embedding_may_be_empty() {
        let net = Network::new(
            vec!["A", "B"],
            vec![Reaction::new(
                Complex::from_integers([(0, 1), (1, 1)]),
                Complex::from_integers([(0, 1), (1, 2)]),
            )],
            Strictness::StrictInteger,
        )
        .unwrap();
        let emb = embed(&net, &[0], &[]);
        assert_eq!(emb.result.n_species(), 0);
        assert_eq!(emb.result.n_reactions(), 0);
        assert!(emb.source_reactions.is_empty());
    }

    #[test]
    fn diagram_rejects_multi_species_and_empty_networks() {
        assert_eq!(
            arrow_diagram(&fixtures::no_acr_two_species()),
            Err(ArrowDiagramError::NotOneSpecies)
        );
        let empty = Network::new(vec!["A"], vec![], Strictness::StrictInteger).unwrap();
        assert_eq!(arrow_diagram(&empty), Err(ArrowDiagramError::NoReactions));
    }

    #[test]
    fn alternating_diagram_reads_right_left_right() {
        let net = fixtures::two_alternating();
        let d = arrow_diagram(&net).unwrap();
        assert_eq!(d.arrows, vec![Arrow::Right, Arrow::Left, Arrow::Right]);
        assert_eq!(d.pattern(), ArrowPattern::Other);
        assert!(d.pattern().admits_positive_steady_state());
        assert_eq!(has_two_alternating_subnetwork(&net), Ok(Some([0, 1, 2])));
    }

    #[test]
    fn mixed_stable_diagram_reads_right_both() {
        let d = arrow_diagram(&fixtures::stable_one_species_mixed()).unwrap();
        assert_eq!(d.arrows, vec![Arrow::Right, Arrow::Both]);
        assert_eq!(d.pattern(), ArrowPattern::RightsThenBoth);
        assert!(d.pattern().is_stable_form());
        assert_eq!(
            has_two_alternating_subnetwork(&fixtures::stable_one_species_mixed()),
            Ok(None)
        );
    }

    #[test]
    fn four_reaction_example_has_the_expected_witness() {
        let net = fixtures::one_species_four_reactions();
        let d = arrow_diagram(&net).unwrap();
        assert_eq!(d.arrows, vec![Arrow::Both, Arrow::Left, Arrow::Right]);
        assert_eq!(d.pattern(), ArrowPattern::Other);
        // triples (0,1,2), (0,1,3), (0,2,3) all repeat a reactant
        // coefficient or fail to alternate; (1,2,3) alternates.
        assert_eq!(has_two_alternating_subnetwork(&net), Ok(Some([1, 2, 3])));
    }

    #[test]
    fn witness_search_needs_three_distinct_coefficients() {
        let single = Network::new(
            vec!["A"],
            vec![Reaction::new(
                Complex::from_integers([(0, 1)]),
                Complex::from_integers([(0, 2)]),
            )],
            Strictness::StrictInteger,
        )
        .unwrap();
        assert_eq!(has_two_alternating_subnetwork(&single), Ok(None));
    }

    #[test]
    fn translate_of_one_species_network_gets_a_diagram() {
        // B <=> A + B moves only A; B is a spectator catalyst.
        let net = crate::net_core::parse::parse_network("B <=> A + B").unwrap();
        let d = arrow_diagram(&net).unwrap();
        let a = net.species_by_label("A").unwrap();
        assert_eq!(d.species, a);
        assert_eq!(d.arrows, vec![Arrow::Right, Arrow::Left]);
        assert_eq!(d.pattern(), ArrowPattern::RightsThenLefts);
    }

    #[test]
    fn stable_diagram_without_flux_criterion() {
        let d = arrow_diagram(&fixtures::acr_without_sf_criterion()).unwrap();
        assert_eq!(d.arrows, vec![Arrow::Right, Arrow::Right, Arrow::Left]);
        assert_eq!(d.pattern(), ArrowPattern::RightsThenLefts);
    }

    #[test]
    fn projection_diagrams_match_embedded_diagrams() {
        for net in [
            fixtures::generalized_sf(2),
            fixtures::one_dim_three_reactions(),
            fixtures::no_acr_two_species(),
        ] {
            for i in 0..net.n_species() {
                let proj = projection_diagram(&net, i).unwrap();
                assert_eq!(proj.species, i);
                let emb = embed(&net, &[i], &[]);
                let emb_d = arrow_diagram(&emb.result).unwrap();
                assert_eq!(proj.reactant_coeffs, emb_d.reactant_coeffs);
                assert_eq!(proj.arrows, emb_d.arrows);
            }
        }
    }

    #[test]
    fn two_species_projections_split_into_unstable_and_stable() {
        let net = fixtures::no_acr_two_species();
        let on_a = projection_diagram(&net, 0).unwrap();
        assert_eq!(on_a.arrows, vec![Arrow::Right, Arrow::Left]);
        assert!(on_a.pattern().is_stable_form());
        let on_b = projection_diagram(&net, 1).unwrap();
        assert_eq!(on_b.arrows, vec![Arrow::Left, Arrow::Right]);
        assert_eq!(on_b.pattern(), ArrowPattern::LeftsThenRights);
        assert!(on_b.pattern().is_unstable_form());
    }

    #[test]
    fn projection_onto_a_fixed_axis_is_empty() {
        let net = crate::net_core::parse::parse_network("A + B -> A + 2B").unwrap();
        assert_eq!(
            projection_diagram(&net, 0),
            Err(ArrowDiagramError::NoReactions)
        );
        assert!(projection_diagram(&net, 1).is_ok());
    }

    #[test]
    fn pattern_catalogue_matches_run_shapes() {
        use Arrow::*;
        let cases: Vec<(Vec<Arrow>, ArrowPattern)> = vec![
            (vec![Both, Both], ArrowPattern::AllBoth),
            (vec![Both, Left, Left], ArrowPattern::BothThenLefts),
            (vec![Right, Both], ArrowPattern::RightsThenBoth),
            (vec![Right, Right, Both, Left], ArrowPattern::RightsBothLefts),
            (vec![Right, Left], ArrowPattern::RightsThenLefts),
            (vec![Right, Right], ArrowPattern::AllRights),
            (vec![Left], ArrowPattern::AllLefts),
            (vec![Left, Left, Right], ArrowPattern::LeftsThenRights),
            (vec![Both, Right], ArrowPattern::BothThenRights),
            (vec![Left, Both], ArrowPattern::LeftsThenBoth),
            (vec![Left, Both, Right, Right], ArrowPattern::LeftsBothRights),
            (vec![Right, Left, Right], ArrowPattern::Other),
        ];
        for (arrows, want) in cases {
            let d = ArrowDiagram {
                species: 0,
                reactant_coeffs: (0..arrows.len())
                    .map(|i| BigRational::from_integer(i.into()))
                    .collect(),
                arrows,
            };
            assert_eq!(d.pattern(), want, "diagram {}", d.render_ascii());
        }
        assert!(!ArrowPattern::AllRights.admits_positive_steady_state());
        assert!(!ArrowPattern::AllLefts.admits_positive_steady_state());
        assert!(ArrowPattern::AllBoth.admits_positive_steady_state());
    }

    #[test]
    fn diagrams_serialize_with_rational_strings() {
        let d = arrow_diagram(&fixtures::stable_one_species_mixed()).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(
            json,
            r#"{"species":0,"reactant_coeffs":["0","1"],"arrows":["R","B"]}"#
        );
    }
}

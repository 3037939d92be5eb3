//! Individual claim checks. Each returns an [`Outcome`]; the runner attaches
//! the claim id and instance name.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::witness::{roundtrip_failure, stability_pair, unreachable_pair, Witness};
use crate::connectivity::{
    brute, check_cut_balance, classify_edge_cut, classify_vertex_cut, crossing_edges,
    edge_connectivity, enumerate_min_edge_cuts, enumerate_min_vertex_cuts, vertex_connectivity,
    CutClass, EdgeCut,
};
use crate::constructions::{gamma_n, undirected_cycle};
use crate::digraph::Digraph;
use crate::error::{GraphError, Result};
use crate::iso::isomorphic;
use crate::regularity::{
    a11_lemma_failure, drd_numbers, drd_type, intersection_numbers, is_distance_regular,
    is_family_d, is_normal, is_weakly_distance_regular, srd_params, weakly_distance_regular,
    IntersectionCheck, SrdParams,
};
use crate::srd_search::find_srd;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Vacuous,
    ExceptionMatched,
    ConsistentWithConjecture,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Vacuous => "vacuous",
            Verdict::ExceptionMatched => "exception-matched",
            Verdict::ConsistentWithConjecture => "consistent-with-conjecture",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub info: Option<String>,
}

impl Outcome {
    fn pass() -> Outcome {
        Outcome {
            verdict: Verdict::Pass,
            witness: None,
            info: None,
        }
    }

    fn fail(witness: Witness) -> Outcome {
        Outcome {
            verdict: Verdict::Fail,
            witness: Some(witness),
            info: None,
        }
    }

    fn with_info(mut self, info: impl Into<String>) -> Outcome {
        self.info = Some(info.into());
        self
    }
}

/// Claim identifiers as they appear in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimId {
    DrdEdgeConnectivity,
    SrdEdgeConnectivity,
    GammaFamily,
    SrdVertexCut,
    WdrdConjecture,
    CutBalance,
    DrdCharacterization,
    EdgeCutOracle,
    VertexCutOracle,
    LiftQuotientRoundtrip,
    A11Positive,
    DrdStableType,
    FamilyDLambdaZero,
    DrdGirthTwoUndirected,
}

impl ClaimId {
    pub const ALL: [ClaimId; 14] = [
        ClaimId::DrdEdgeConnectivity,
        ClaimId::SrdEdgeConnectivity,
        ClaimId::GammaFamily,
        ClaimId::SrdVertexCut,
        ClaimId::WdrdConjecture,
        ClaimId::CutBalance,
        ClaimId::DrdCharacterization,
        ClaimId::EdgeCutOracle,
        ClaimId::VertexCutOracle,
        ClaimId::LiftQuotientRoundtrip,
        ClaimId::A11Positive,
        ClaimId::DrdStableType,
        ClaimId::FamilyDLambdaZero,
        ClaimId::DrdGirthTwoUndirected,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ClaimId::DrdEdgeConnectivity => "drd-edge-connectivity",
            ClaimId::SrdEdgeConnectivity => "srd-edge-connectivity",
            ClaimId::GammaFamily => "gamma-family",
            ClaimId::SrdVertexCut => "srd-vertex-cut",
            ClaimId::WdrdConjecture => "wdrd-conjecture",
            ClaimId::CutBalance => "cut-balance",
            ClaimId::DrdCharacterization => "drd-characterization",
            ClaimId::EdgeCutOracle => "edge-cut-oracle",
            ClaimId::VertexCutOracle => "vertex-cut-oracle",
            ClaimId::LiftQuotientRoundtrip => "lift-quotient-roundtrip",
            ClaimId::A11Positive => "a11-positive",
            ClaimId::DrdStableType => "drd-stable-type",
            ClaimId::FamilyDLambdaZero => "family-d-lambda-zero",
            ClaimId::DrdGirthTwoUndirected => "drd-girth-two-undirected",
        }
    }
}

/// Largest order checked against the subset-enumeration edge-cut oracle.
pub const EDGE_ORACLE_MAX_N: usize = 14;
/// Largest order checked against the subset-enumeration vertex-cut oracle.
pub const VERTEX_ORACLE_MAX_N: usize = 12;

/// Fails on the first structural reason `g` cannot be a DRD.
fn drd_precondition(g: &Digraph) -> std::result::Result<usize, Witness> {
    if let Some((from, to)) = unreachable_pair(g) {
        return Err(Witness::Unreachable { from, to });
    }
    let k = g.require_regular().map_err(|e| match e {
        GraphError::NotRegular {
            vertex,
            out_degree,
            in_degree,
        } => Witness::NotRegular {
            vertex,
            out_degree,
            in_degree,
        },
        other => Witness::Error {
            message: other.to_string(),
        },
    })?;
    match intersection_numbers(g) {
        Ok(IntersectionCheck::Constant(_)) => Ok(k),
        Ok(IntersectionCheck::Violated(v)) => Err(Witness::NotDistanceRegular(v)),
        Err(e) => Err(Witness::Error {
            message: e.to_string(),
        }),
    }
}

/// Edge connectivity equals `k`, or a witness that it does not.
fn connectivity_equals(
    g: &Digraph,
    k: usize,
) -> Result<std::result::Result<Vec<EdgeCut>, Witness>> {
    let value = edge_connectivity(g)?;
    let cuts = enumerate_min_edge_cuts(g)?;
    if value < k {
        let cut = &cuts[0];
        return Ok(Err(Witness::SmallCut {
            expected: k,
            side_a: cut.side_a.clone(),
            crossing: cut.crossing.clone(),
        }));
    }
    if value > k {
        return Ok(Err(Witness::LargeConnectivity {
            expected: k,
            found: value,
        }));
    }
    Ok(Ok(cuts))
}

fn first_nontrivial<'a>(g: &Digraph, cuts: &'a [EdgeCut]) -> Result<Option<&'a EdgeCut>> {
    for c in cuts {
        if classify_edge_cut(g, c)? == CutClass::NonTrivial {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

fn non_star(cut: &EdgeCut) -> Witness {
    Witness::NonStarCut {
        side_a: cut.side_a.clone(),
        crossing: cut.crossing.clone(),
    }
}

fn is_undirected_cycle(g: &Digraph) -> bool {
    g.is_undirected() && g.regular_degree() == Some(2) && g.is_strongly_connected()
}

/// Edge connectivity equals the valency; every minimum cut is a star unless
/// `g` is an undirected cycle. Inputs that are not distance-regular fail with
/// the violation as witness.
pub fn verify_drd_theorem(g: &Digraph) -> Result<Outcome> {
    let k = match drd_precondition(g) {
        Ok(k) => k,
        Err(w) => return Ok(Outcome::fail(w).with_info("not a distance-regular digraph")),
    };
    let cuts = match connectivity_equals(g, k)? {
        Ok(cuts) => cuts,
        Err(w) => return Ok(Outcome::fail(w)),
    };
    match first_nontrivial(g, &cuts)? {
        None => Ok(Outcome::pass()),
        Some(_) if is_undirected_cycle(g) => {
            Ok(Outcome::pass().with_info("undirected cycle: nontrivial minimum cuts permitted"))
        }
        Some(c) => Ok(Outcome::fail(non_star(c))),
    }
}

fn srd_exceptions() -> &'static [Digraph] {
    static EXCEPTIONS: OnceLock<Vec<Digraph>> = OnceLock::new();
    EXCEPTIONS.get_or_init(|| {
        let mut v = vec![
            undirected_cycle(4).expect("C4"),
            undirected_cycle(5).expect("C5"),
        ];
        v.extend(find_srd(6, 2, 1, 0, 1).expect("valid parameters"));
        v
    })
}

/// Whether `g` is isomorphic to one of the three exceptional SRDs.
pub fn is_srd_exception(g: &Digraph) -> bool {
    srd_exceptions().iter().any(|e| isomorphic(g, e))
}

/// Edge connectivity equals `k` and every minimum cut is a star, except for
/// digraphs isomorphic to undirected `C4`, `C5`, or an SRD(6,2,1,0,1), which
/// must actually have a nontrivial minimum cut.
pub fn verify_srd_theorem(g: &Digraph) -> Result<Outcome> {
    let params = srd_params(g)
        .ok_or_else(|| GraphError::Precondition("not a strongly regular digraph".into()))?;
    if let Some((from, to)) = unreachable_pair(g) {
        return Ok(Outcome::fail(Witness::Unreachable { from, to }));
    }
    let cuts = match connectivity_equals(g, params.k)? {
        Ok(cuts) => cuts,
        Err(w) => return Ok(Outcome::fail(w)),
    };
    let nontrivial = first_nontrivial(g, &cuts)?;
    if is_srd_exception(g) {
        return Ok(match nontrivial {
            Some(_) => Outcome {
                verdict: Verdict::ExceptionMatched,
                witness: None,
                info: Some(format!(
                    "isomorphic to an exceptional digraph {}",
                    params.tuple_string()
                )),
            },
            None => Outcome::fail(Witness::NoNonTrivialCut { cuts: cuts.len() }),
        });
    }
    Ok(match nontrivial {
        None => Outcome::pass(),
        Some(c) => Outcome::fail(non_star(c)),
    })
}

/// `Γ_n` is 2-regular, WDRD, of diameter `⌊n/2⌋ + 1`, edge connectivity 2,
/// and has a nontrivial minimum edge cut.
pub fn verify_gamma_family(n: usize) -> Result<Outcome> {
    if !(2..=16).contains(&n) {
        return Err(GraphError::InvalidParams(format!(
            "gamma family check needs 2 <= n <= 16, got {n}"
        )));
    }
    let g = gamma_n(n)?;
    if let Err(GraphError::NotRegular {
        vertex,
        out_degree,
        in_degree,
    }) = g.require_regular()
    {
        return Ok(Outcome::fail(Witness::NotRegular {
            vertex,
            out_degree,
            in_degree,
        }));
    }
    let k = g.require_regular()?;
    if k != 2 {
        return Ok(Outcome::fail(Witness::NotRegular {
            vertex: 0,
            out_degree: k,
            in_degree: k,
        }));
    }
    if let Some(w) = weakly_distance_regular(&g)?.witness {
        return Ok(Outcome::fail(Witness::NotWeaklyDistanceRegular(w)));
    }
    let expected = n / 2 + 1;
    let found = g.diameter()?;
    if found != expected {
        return Ok(Outcome::fail(Witness::Diameter { expected, found }));
    }
    let cuts = match connectivity_equals(&g, 2)? {
        Ok(cuts) => cuts,
        Err(w) => return Ok(Outcome::fail(w)),
    };
    Ok(match first_nontrivial(&g, &cuts)? {
        Some(c) => {
            Outcome::pass().with_info(format!("diameter {found}; nontrivial cut {:?}", c.crossing))
        }
        None => Outcome::fail(Witness::NoNonTrivialCut { cuts: cuts.len() }),
    })
}

/// SRD(8,3,2,1,1): vertex connectivity 2 with a minimum vertex cut that is
/// not a point neighbourhood.
pub fn verify_srd_vertex_cut(g: &Digraph) -> Result<Outcome> {
    let expected_params = SrdParams::new(8, 3, 2, 1, 1);
    if srd_params(g) != Some(expected_params) {
        return Err(GraphError::Precondition(format!(
            "needs a strongly regular digraph with parameters {}",
            expected_params.tuple_string()
        )));
    }
    let kappa = vertex_connectivity(g)?;
    if kappa != 2 {
        return Ok(Outcome::fail(Witness::VertexConnectivity {
            expected: 2,
            found: kappa,
            valency: 3,
        }));
    }
    let cuts = enumerate_min_vertex_cuts(g)?;
    for c in &cuts {
        if classify_vertex_cut(g, c)? == CutClass::NonTrivial {
            return Ok(Outcome::pass().with_info(format!("nontrivial vertex cut {:?}", c.vertices)));
        }
    }
    Ok(Outcome::fail(Witness::NoNonTrivialVertexCut {
        cuts: cuts.into_iter().map(|c| c.vertices).collect(),
    }))
}

/// Edge connectivity of a WDRD equals its valency, and for `k > 2` every
/// minimum cut is a star. A nontrivial cut at `k <= 2` is reported as
/// consistent with the conjecture, with an informational note.
pub fn check_conjecture(g: &Digraph) -> Result<Outcome> {
    if !is_weakly_distance_regular(g)? {
        return Err(GraphError::Precondition(
            "not weakly distance-regular".into(),
        ));
    }
    let k = g.require_regular()?;
    let cuts = match connectivity_equals(g, k)? {
        Ok(cuts) => cuts,
        Err(w) => return Ok(Outcome::fail(w)),
    };
    Ok(match first_nontrivial(g, &cuts)? {
        None => Outcome::pass(),
        Some(c) if k <= 2 => Outcome {
            verdict: Verdict::ConsistentWithConjecture,
            witness: None,
            info: Some(format!(
                "k={k}: nontrivial minimum edge cut {:?}",
                c.crossing
            )),
        },
        Some(c) => Outcome::fail(non_star(c)),
    })
}

/// `|[A, V−A]| = |[V−A, A]|` on `samples` random nonempty proper subsets.
pub fn check_balance_samples(g: &Digraph, rng: &mut ChaCha8Rng, samples: usize) -> Result<Outcome> {
    g.require_regular()?;
    let n = g.n();
    if n < 2 {
        return Ok(Outcome {
            verdict: Verdict::Vacuous,
            witness: None,
            info: Some("no nonempty proper subset".into()),
        });
    }
    for _ in 0..samples {
        let side: Vec<usize> = loop {
            let s: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
            if !s.is_empty() && s.len() < n {
                break s;
            }
        };
        if !check_cut_balance(g, &side)? {
            let mask: Vec<bool> = (0..n).map(|v| side.contains(&v)).collect();
            let complement: Vec<bool> = mask.iter().map(|b| !b).collect();
            return Ok(Outcome::fail(Witness::Imbalance {
                forward: crossing_edges(g, &mask).len(),
                backward: crossing_edges(g, &complement).len(),
                side,
            }));
        }
    }
    Ok(Outcome::pass().with_info(format!("{samples} subsets")))
}

/// `DRD ⟺ WDRD ∧ normal`.
pub fn check_characterization(g: &Digraph) -> Result<Outcome> {
    let drd = is_distance_regular(g)?;
    let wdrd = is_weakly_distance_regular(g)?;
    let normal = is_normal(g);
    Ok(if drd == (wdrd && normal) {
        Outcome::pass()
    } else {
        Outcome::fail(Witness::Characterization { drd, wdrd, normal })
    })
}

/// Flow-based minimum edge cuts agree with subset enumeration, including the
/// generating sides of each cut.
pub fn check_edge_oracle(g: &Digraph) -> Result<Outcome> {
    if g.n() > EDGE_ORACLE_MAX_N {
        return Err(GraphError::Precondition(format!(
            "oracle limited to n <= {EDGE_ORACLE_MAX_N}"
        )));
    }
    let cuts = enumerate_min_edge_cuts(g)?;
    let (_, oracle) = brute::min_edge_cuts(g);
    let found: BTreeSet<Vec<(usize, usize)>> = cuts.iter().map(|c| c.crossing.clone()).collect();
    let expected: BTreeSet<Vec<(usize, usize)>> = oracle.keys().cloned().collect();
    let missing: Vec<_> = expected.difference(&found).cloned().collect();
    let extra: Vec<_> = found.difference(&expected).cloned().collect();
    if !missing.is_empty() || !extra.is_empty() {
        return Ok(Outcome::fail(Witness::EdgeCutMismatch { missing, extra }));
    }
    let bad_sides = cuts.iter().find(|c| !sides_match(c, &oracle[&c.crossing]));
    Ok(match bad_sides {
        None => Outcome::pass().with_info(format!("{} minimum cuts", cuts.len())),
        Some(c) => Outcome::fail(Witness::GeneratingSidesMismatch {
            crossing: c.crossing.clone(),
        }),
    })
}

/// Generating sides equal the oracle's and the canonical side is the largest.
pub(crate) fn sides_match(cut: &EdgeCut, oracle_sides: &[Vec<usize>]) -> bool {
    cut.generating_sides == oracle_sides
        && oracle_sides.iter().all(|s| s.len() <= cut.side_a.len())
        && oracle_sides.contains(&cut.side_a)
}

/// Flow-based minimum vertex cuts agree with subset enumeration.
pub fn check_vertex_oracle(g: &Digraph) -> Result<Outcome> {
    if g.n() > VERTEX_ORACLE_MAX_N {
        return Err(GraphError::Precondition(format!(
            "oracle limited to n <= {VERTEX_ORACLE_MAX_N}"
        )));
    }
    let found: BTreeSet<Vec<usize>> = match enumerate_min_vertex_cuts(g) {
        Ok(cuts) => cuts.into_iter().map(|c| c.vertices).collect(),
        Err(GraphError::Complete) => {
            return Ok(Outcome {
                verdict: Verdict::Vacuous,
                witness: None,
                info: Some("complete digraph has no vertex cut".into()),
            })
        }
        Err(e) => return Err(e),
    };
    let expected: BTreeSet<Vec<usize>> = brute::min_vertex_cuts(g)
        .map(|(_, cuts)| cuts.into_iter().collect())
        .unwrap_or_default();
    let missing: Vec<_> = expected.difference(&found).cloned().collect();
    let extra: Vec<_> = found.difference(&expected).cloned().collect();
    Ok(if missing.is_empty() && extra.is_empty() {
        Outcome::pass().with_info(format!("{} minimum vertex cuts", found.len()))
    } else {
        Outcome::fail(Witness::VertexCutMismatch { missing, extra })
    })
}

/// For a short-type DRD and `m` in 2..=3: the lift is a long-type DRD of the
/// same girth with `λ` scaled by `m`, and its antipodal quotient is `g` again.
pub fn check_lift_roundtrip(g: &Digraph) -> Result<Outcome> {
    if drd_type(g)? != crate::regularity::DrdType::Short {
        return Err(GraphError::Precondition(
            "needs a short-type distance-regular digraph".into(),
        ));
    }
    for m in 2..=3 {
        if let Some(detail) = roundtrip_failure(g, m) {
            return Ok(Outcome::fail(Witness::RoundTrip { m, detail }));
        }
    }
    Ok(Outcome::pass())
}

/// `a_11^l >= 1` for `2 <= l <= D` whenever `g` is outside the block-cycle
/// family; inside it the hypothesis does not apply.
pub fn check_a11(g: &Digraph) -> Result<Outcome> {
    let failure = a11_lemma_failure(g)?;
    if is_family_d(g).is_some() {
        return Ok(Outcome {
            verdict: Verdict::Vacuous,
            witness: None,
            info: Some(match failure {
                Some(l) => format!("block cycle; a11 vanishes at l={l}"),
                None => "block cycle".into(),
            }),
        });
    }
    Ok(match failure {
        None => Outcome::pass(),
        Some(l) => Outcome::fail(Witness::A11 { l }),
    })
}

/// A DRD of girth at least 3 is stable, and its diameter is `g − 1` or `g`.
pub fn check_stable_type(g: &Digraph) -> Result<Outcome> {
    if let Some((x, y)) = stability_pair(g) {
        return Ok(Outcome::fail(Witness::Unstable { x, y }));
    }
    let kind = drd_type(g)?;
    Ok(Outcome::pass().with_info(format!("{kind:?}").to_lowercase()))
}

/// `λ = 0` exactly for block cycles, among DRDs of girth at least 3.
pub fn check_family_d(g: &Digraph) -> Result<Outcome> {
    let table =
        drd_numbers(g)?.ok_or_else(|| GraphError::Precondition("not distance-regular".into()))?;
    let lambda = table.lambda();
    let in_family = is_family_d(g).is_some();
    Ok(if (lambda == 0) == in_family {
        Outcome::pass()
    } else {
        Outcome::fail(Witness::FamilyD { lambda, in_family })
    })
}

/// A DRD of girth 2 is an undirected graph.
pub fn check_girth_two_undirected(g: &Digraph) -> Result<Outcome> {
    let asym = g.edges().into_iter().find(|&(u, v)| !g.has_edge(v, u));
    Ok(match asym {
        None => Outcome::pass(),
        Some((u, v)) => Outcome::fail(Witness::Asymmetric { u, v }),
    })
}

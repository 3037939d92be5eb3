//! Machine-checkable failure witnesses and their replay.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::connectivity::{
    brute, classify_edge_cut, classify_vertex_cut, crossing_edges, edge_connectivity,
    enumerate_min_edge_cuts, enumerate_min_vertex_cuts, vertex_connectivity, CutClass, EdgeCut,
    VertexCut,
};
use crate::constructions::{antipodal_quotient, damerell_lift};
use crate::digraph::Digraph;
use crate::error::GraphError;
use crate::iso::isomorphic;
use crate::regularity::{
    a11_lemma_failure, drd_numbers, drd_type, is_distance_regular, is_family_d, is_normal,
    is_weakly_distance_regular, stability_witness, walk_counts, DrdViolation, WalkViolation,
};

type Edges = Vec<(usize, usize)>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// The check could not run; replays when the same error recurs.
    Error {
        message: String,
    },
    Unreachable {
        from: usize,
        to: usize,
    },
    NotRegular {
        vertex: usize,
        out_degree: usize,
        in_degree: usize,
    },
    NotDistanceRegular(DrdViolation),
    NotWeaklyDistanceRegular(WalkViolation),
    /// A crossing set smaller than the expected connectivity.
    SmallCut {
        expected: usize,
        side_a: Vec<usize>,
        crossing: Edges,
    },
    /// Connectivity above the expected value (no smaller cut exists).
    LargeConnectivity {
        expected: usize,
        found: usize,
    },
    /// A minimum cut that is not a star.
    NonStarCut {
        side_a: Vec<usize>,
        crossing: Edges,
    },
    /// An exceptional or family member without the nontrivial cut it should have.
    NoNonTrivialCut {
        cuts: usize,
    },
    Characterization {
        drd: bool,
        wdrd: bool,
        normal: bool,
    },
    Imbalance {
        side: Vec<usize>,
        forward: usize,
        backward: usize,
    },
    EdgeCutMismatch {
        missing: Vec<Edges>,
        extra: Vec<Edges>,
    },
    /// The sides recorded for this crossing set disagree with subset enumeration.
    GeneratingSidesMismatch {
        crossing: Edges,
    },
    VertexCutMismatch {
        missing: Vec<Vec<usize>>,
        extra: Vec<Vec<usize>>,
    },
    Diameter {
        expected: usize,
        found: usize,
    },
    VertexConnectivity {
        expected: usize,
        found: usize,
        valency: usize,
    },
    NoNonTrivialVertexCut {
        cuts: Vec<Vec<usize>>,
    },
    RoundTrip {
        m: usize,
        detail: String,
    },
    A11 {
        l: usize,
    },
    Unstable {
        x: usize,
        y: usize,
    },
    FamilyD {
        lambda: usize,
        in_family: bool,
    },
    Asymmetric {
        u: usize,
        v: usize,
    },
}

fn shell_count(g: &Digraph, u: usize, v: usize, i: usize) -> Option<usize> {
    let dist = g.distances().ok()?;
    Some(g.out_neighbors(v).filter(|&w| dist.get(u, w) == i).count())
}

fn is_nontrivial_min_cut(g: &Digraph, side_a: &[usize], crossing: &Edges) -> bool {
    let cut = EdgeCut {
        side_a: side_a.to_vec(),
        crossing: crossing.clone(),
        generating_sides: Vec::new(),
    };
    edge_connectivity(g).ok() == Some(crossing.len())
        && classify_edge_cut(g, &cut).ok() == Some(CutClass::NonTrivial)
}

fn edge_cut_sets(g: &Digraph) -> Option<BTreeSet<Edges>> {
    let cuts = enumerate_min_edge_cuts(g).ok()?;
    Some(cuts.into_iter().map(|c| c.crossing).collect())
}

/// Independently re-establishes the failure a witness describes on `g`.
pub fn replay(g: &Digraph, witness: &Witness) -> bool {
    let n = g.n();
    let in_range = |v: usize| v < n;
    match witness {
        Witness::Error { message } => {
            let errors: Vec<GraphError> = [
                g.distances().err(),
                g.require_regular().err(),
                is_distance_regular(g).err(),
            ]
            .into_iter()
            .flatten()
            .collect();
            errors.iter().any(|e| e.to_string() == *message)
        }
        Witness::Unreachable { from, to } => {
            in_range(*from) && in_range(*to) && !reachable(g, *from, *to)
        }
        Witness::NotRegular {
            vertex,
            out_degree,
            in_degree,
        } => {
            in_range(*vertex)
                && g.out_degree(*vertex) == *out_degree
                && g.in_degree(*vertex) == *in_degree
                && (out_degree != in_degree || (0..n).any(|v| g.out_degree(v) != *out_degree))
        }
        Witness::NotDistanceRegular(w) => {
            let Ok(dist) = g.distances() else {
                return false;
            };
            if ![w.u, w.v, w.reference_u, w.reference_v]
                .iter()
                .all(|&v| in_range(v))
            {
                return false;
            }
            dist.get(w.u, w.v) == w.distance
                && dist.get(w.reference_u, w.reference_v) == w.distance
                && shell_count(g, w.u, w.v, w.index) == Some(w.found)
                && shell_count(g, w.reference_u, w.reference_v, w.index) == Some(w.expected)
                && w.found != w.expected
        }
        Witness::NotWeaklyDistanceRegular(w) => {
            let Ok(dist) = g.distances() else {
                return false;
            };
            let Ok(m) = walk_counts(g, w.length) else {
                return false;
            };
            [w.u, w.v, w.reference_u, w.reference_v]
                .iter()
                .all(|&v| in_range(v))
                && w.length <= dist.max_distance()
                && dist.get(w.u, w.v) == w.distance
                && dist.get(w.reference_u, w.reference_v) == w.distance
                && m.get(w.u, w.v) == w.found
                && m.get(w.reference_u, w.reference_v) == w.expected
                && w.found != w.expected
        }
        Witness::SmallCut {
            expected,
            side_a,
            crossing,
        } => {
            let Some(side) = mask(n, side_a) else {
                return false;
            };
            crossing_edges(g, &side) == *crossing
                && crossing.len() < *expected
                && !g.strongly_connected_without_edges(crossing)
        }
        Witness::LargeConnectivity { expected, found } => {
            found > expected && edge_connectivity(g).ok() == Some(*found)
        }
        Witness::NonStarCut { side_a, crossing } => is_nontrivial_min_cut(g, side_a, crossing),
        Witness::NoNonTrivialCut { .. } => match enumerate_min_edge_cuts(g) {
            Ok(cuts) => cuts.iter().all(|c| {
                classify_edge_cut(g, c)
                    .map(|k| k.is_trivial())
                    .unwrap_or(false)
            }),
            Err(_) => false,
        },
        Witness::Characterization { drd, wdrd, normal } => {
            is_distance_regular(g).ok() == Some(*drd)
                && is_weakly_distance_regular(g).ok() == Some(*wdrd)
                && is_normal(g) == *normal
                && *drd != (*wdrd && *normal)
        }
        Witness::Imbalance {
            side,
            forward,
            backward,
        } => {
            let Some(a) = mask(n, side) else { return false };
            let complement: Vec<bool> = a.iter().map(|b| !b).collect();
            g.regular_degree().is_some()
                && crossing_edges(g, &a).len() == *forward
                && crossing_edges(g, &complement).len() == *backward
                && forward != backward
        }
        Witness::EdgeCutMismatch { missing, extra } => {
            let Some(found) = edge_cut_sets(g) else {
                return false;
            };
            let (_, oracle) = brute::min_edge_cuts(g);
            let oracle: BTreeSet<Edges> = oracle.into_keys().collect();
            let now_missing: Vec<Edges> = oracle.difference(&found).cloned().collect();
            let now_extra: Vec<Edges> = found.difference(&oracle).cloned().collect();
            (!now_missing.is_empty() || !now_extra.is_empty())
                && now_missing == *missing
                && now_extra == *extra
        }
        Witness::GeneratingSidesMismatch { crossing } => {
            let Ok(cuts) = enumerate_min_edge_cuts(g) else {
                return false;
            };
            let (_, oracle) = brute::min_edge_cuts(g);
            match (
                cuts.iter().find(|c| c.crossing == *crossing),
                oracle.get(crossing),
            ) {
                (Some(cut), Some(sides)) => !super::claims::sides_match(cut, sides),
                _ => false,
            }
        }
        Witness::VertexCutMismatch { missing, extra } => {
            let Ok(found) = enumerate_min_vertex_cuts(g) else {
                return false;
            };
            let found: BTreeSet<Vec<usize>> = found.into_iter().map(|c| c.vertices).collect();
            let oracle: BTreeSet<Vec<usize>> = brute::min_vertex_cuts(g)
                .map(|(_, cuts)| cuts.into_iter().collect())
                .unwrap_or_default();
            let now_missing: Vec<Vec<usize>> = oracle.difference(&found).cloned().collect();
            let now_extra: Vec<Vec<usize>> = found.difference(&oracle).cloned().collect();
            (!now_missing.is_empty() || !now_extra.is_empty())
                && now_missing == *missing
                && now_extra == *extra
        }
        Witness::Diameter { expected, found } => {
            expected != found && g.diameter().ok() == Some(*found)
        }
        Witness::VertexConnectivity {
            expected,
            found,
            valency,
        } => {
            expected != found
                && g.regular_degree() == Some(*valency)
                && vertex_connectivity(g).ok() == Some(*found)
        }
        Witness::NoNonTrivialVertexCut { cuts } => {
            let Ok(found) = enumerate_min_vertex_cuts(g) else {
                return false;
            };
            let vertices: Vec<Vec<usize>> = found.iter().map(|c| c.vertices.clone()).collect();
            vertices == *cuts
                && found.iter().all(|c| {
                    classify_vertex_cut(
                        g,
                        &VertexCut {
                            vertices: c.vertices.clone(),
                        },
                    )
                    .map(|k| k.is_trivial())
                    .unwrap_or(false)
                })
        }
        Witness::RoundTrip { m, .. } => roundtrip_failure(g, *m).is_some(),
        Witness::A11 { l } => {
            matches!(a11_lemma_failure(g), Ok(Some(x)) if x == *l) && is_family_d(g).is_none()
        }
        Witness::Unstable { x, y } => {
            let (Ok(girth), Ok(dist)) = (g.girth(), g.distances()) else {
                return false;
            };
            in_range(*x) && in_range(*y) && {
                let d = dist.get(*x, *y);
                0 < d && d < girth && d + dist.get(*y, *x) != girth
            }
        }
        Witness::FamilyD { lambda, in_family } => {
            let Ok(Some(table)) = drd_numbers(g) else {
                return false;
            };
            table.lambda() == *lambda
                && is_family_d(g).is_some() == *in_family
                && (*lambda == 0) != *in_family
        }
        Witness::Asymmetric { u, v } => {
            in_range(*u) && in_range(*v) && g.has_edge(*u, *v) && !g.has_edge(*v, *u)
        }
    }
}

fn mask(n: usize, set: &[usize]) -> Option<Vec<bool>> {
    let mut m = vec![false; n];
    for &v in set {
        if v >= n {
            return None;
        }
        m[v] = true;
    }
    Some(m)
}

fn reachable(g: &Digraph, from: usize, to: usize) -> bool {
    let mut seen = vec![false; g.n()];
    let mut stack = vec![from];
    while let Some(u) = stack.pop() {
        if u == to {
            return true;
        }
        if !std::mem::replace(&mut seen[u], true) {
            stack.extend(g.out_neighbors(u));
        }
    }
    false
}

/// First property of the `m`-fold lift of a short-type DRD that fails.
pub(crate) fn roundtrip_failure(g: &Digraph, m: usize) -> Option<String> {
    let base_table = match drd_numbers(g) {
        Ok(Some(t)) => t,
        _ => return Some("base is not distance-regular".into()),
    };
    let lift = match damerell_lift(g, m) {
        Ok(l) => l,
        Err(e) => return Some(format!("lift failed: {e}")),
    };
    let lift_table = match drd_numbers(&lift) {
        Ok(Some(t)) => t,
        _ => return Some("lift is not distance-regular".into()),
    };
    if drd_type(&lift).ok() != Some(crate::regularity::DrdType::Long) {
        return Some("lift is not of long type".into());
    }
    if lift_table.lambda() != m * base_table.lambda() {
        return Some(format!(
            "lambda of lift is {}, expected {}",
            lift_table.lambda(),
            m * base_table.lambda()
        ));
    }
    if lift.girth().ok() != g.girth().ok() {
        return Some("lift changes the girth".into());
    }
    match antipodal_quotient(&lift) {
        Ok(q) if isomorphic(&q, g) => None,
        Ok(_) => Some("quotient is not isomorphic to the base".into()),
        Err(e) => Some(format!("quotient failed: {e}")),
    }
}

/// Smallest pair `(x, y)` showing `g` is not strongly connected.
pub(crate) fn unreachable_pair(g: &Digraph) -> Option<(usize, usize)> {
    match g.distances() {
        Err(GraphError::NotStronglyConnected(u, v)) => Some((u, v)),
        _ => None,
    }
}

pub(crate) fn stability_pair(g: &Digraph) -> Option<(usize, usize)> {
    stability_witness(g).ok().flatten()
}

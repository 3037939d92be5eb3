//! Exact edge and vertex connectivity through unit-capacity max-flow, full
//! enumeration of minimum cuts, and cut classification.
//!
//! A minimum edge cut is always a crossing set `[A, V−A]`: removing a minimal
//! disconnecting edge set `F` leaves some vertex `b` unreachable from some
//! `a`, and the vertices that cannot reach `b` form such an `A`. Minimum cuts
//! are enumerated per source/sink pair as closed sets of the residual network
//! and merged by crossing edge set.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{GraphError, Result};
use crate::flow::{closed_sets, FlowNetwork};

/// Edge set `[A, V−A]` together with its canonical side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCut {
    /// Largest `A` producing the crossing set: the vertices that cannot
    /// reach any head of a crossing edge once the crossing edges are removed.
    pub side_a: Vec<usize>,
    /// Crossing edges, sorted.
    pub crossing: Vec<(usize, usize)>,
    /// Every `A` with `[A, V−A]` equal to `crossing`, sorted.
    pub generating_sides: Vec<Vec<usize>>,
}

impl EdgeCut {
    pub fn size(&self) -> usize {
        self.crossing.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCut {
    pub vertices: Vec<usize>,
}

impl VertexCut {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "kebab-case")]
pub enum CutClass {
    /// All edges leaving `vertex`; `also_in_star` names a vertex whose
    /// in-star is the same edge set, when one exists.
    OutStar {
        vertex: usize,
        also_in_star: Option<usize>,
    },
    InStar {
        vertex: usize,
    },
    /// `Γ+_1(vertex)`; `also_in` names a vertex `w` with `Γ-_1(w)` equal to it.
    OutNeighborhood {
        vertex: usize,
        also_in: Option<usize>,
    },
    InNeighborhood {
        vertex: usize,
    },
    NonTrivial,
}

impl CutClass {
    pub fn is_trivial(&self) -> bool {
        !matches!(self, CutClass::NonTrivial)
    }

    pub fn label(&self) -> String {
        match self {
            CutClass::OutStar {
                vertex,
                also_in_star: Some(w),
            } => format!("OutStar({vertex})=InStar({w})"),
            CutClass::OutStar { vertex, .. } => format!("OutStar({vertex})"),
            CutClass::InStar { vertex } => format!("InStar({vertex})"),
            CutClass::OutNeighborhood {
                vertex,
                also_in: Some(w),
            } => format!("OutNeighborhood({vertex})=InNeighborhood({w})"),
            CutClass::OutNeighborhood { vertex, .. } => format!("OutNeighborhood({vertex})"),
            CutClass::InNeighborhood { vertex } => format!("InNeighborhood({vertex})"),
            CutClass::NonTrivial => "NonTrivial".into(),
        }
    }
}

fn members(mask: &[bool]) -> Vec<usize> {
    mask.iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(v, _)| v)
        .collect()
}

/// Edges from `side` to its complement, sorted.
pub fn crossing_edges(g: &Digraph, side: &[bool]) -> Vec<(usize, usize)> {
    (0..g.n())
        .filter(|&u| side[u])
        .flat_map(|u| {
            g.out_neighbors(u)
                .filter(|&v| !side[v])
                .map(move |v| (u, v))
        })
        .collect()
}

fn membership(n: usize, set: &[usize]) -> Result<Vec<bool>> {
    let mut mask = vec![false; n];
    for &v in set {
        if v >= n {
            return Err(GraphError::Precondition(format!("vertex {v} out of range")));
        }
        mask[v] = true;
    }
    Ok(mask)
}

fn require_cut_domain(g: &Digraph) -> Result<()> {
    if g.n() < 2 {
        return Err(GraphError::Precondition(
            "need at least two vertices".into(),
        ));
    }
    g.distances().map(|_| ())
}

fn unit_network(g: &Digraph) -> FlowNetwork {
    let mut f = FlowNetwork::new(g.n());
    for (u, v) in g.edges() {
        f.add_arc(u, v, 1);
    }
    f
}

/// Maximum number of edge-disjoint `s → t` paths, with the minimum cut whose
/// side is the residual reach of `s`.
pub fn max_flow(g: &Digraph, s: usize, t: usize) -> Result<(u64, EdgeCut)> {
    if s == t {
        return Err(GraphError::Precondition(format!(
            "source equals sink ({s})"
        )));
    }
    if s >= g.n() || t >= g.n() {
        return Err(GraphError::Precondition("terminal out of range".into()));
    }
    let mut f = unit_network(g);
    let value = f.max_flow(s, t);
    let side = f.source_side(s);
    let crossing = crossing_edges(g, &side);
    debug_assert_eq!(crossing.len() as u64, value);
    let side_a = members(&side);
    Ok((
        value,
        EdgeCut {
            generating_sides: vec![side_a.clone()],
            side_a,
            crossing,
        },
    ))
}

fn local_edge_connectivity(g: &Digraph, s: usize, t: usize) -> u64 {
    unit_network(g).max_flow(s, t)
}

/// Minimum over `u != 0` of the flows `0 → u` and `u → 0`.
pub fn edge_connectivity(g: &Digraph) -> Result<usize> {
    require_cut_domain(g)?;
    Ok((1..g.n())
        .flat_map(|u| {
            [
                local_edge_connectivity(g, 0, u),
                local_edge_connectivity(g, u, 0),
            ]
        })
        .min()
        .expect("n >= 2") as usize)
}

/// Canonical side and every generating side of a crossing set.
fn edge_cut_from_crossing(g: &Digraph, crossing: Vec<(usize, usize)>) -> EdgeCut {
    let n = g.n();
    let removed: BTreeSet<(usize, usize)> = crossing.iter().copied().collect();
    let succ: Vec<Vec<usize>> = (0..n)
        .map(|u| {
            g.out_neighbors(u)
                .filter(|&v| !removed.contains(&(u, v)))
                .collect()
        })
        .collect();
    let tails: Vec<usize> = crossing.iter().map(|&(u, _)| u).collect();
    let heads: Vec<usize> = crossing.iter().map(|&(_, v)| v).collect();
    // Reverse search from the heads in G − F.
    let mut reaches_head = vec![false; n];
    let mut stack = heads.clone();
    let mut pred: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, out) in succ.iter().enumerate() {
        for &v in out {
            pred[v].push(u);
        }
    }
    while let Some(v) = stack.pop() {
        if !reaches_head[v] {
            reaches_head[v] = true;
            stack.extend(pred[v].iter().copied());
        }
    }
    let side_a = (0..n).filter(|&v| !reaches_head[v]).collect();
    let mut generating_sides: Vec<Vec<usize>> = closed_sets(&succ, &tails, &heads)
        .iter()
        .map(|m| members(m))
        .collect();
    generating_sides.sort();
    EdgeCut {
        side_a,
        crossing,
        generating_sides,
    }
}

/// Every distinct minimum crossing edge set, sorted by edge sequence.
pub fn enumerate_min_edge_cuts(g: &Digraph) -> Result<Vec<EdgeCut>> {
    let value = edge_connectivity(g)? as u64;
    let mut found: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
    let pairs = (1..g.n()).flat_map(|u| [(0, u), (u, 0)]);
    for (s, t) in pairs {
        let mut f = unit_network(g);
        if f.max_flow(s, t) != value {
            continue;
        }
        for side in closed_sets(&f.residual(), &[s], &[t]) {
            found.insert(crossing_edges(g, &side));
        }
    }
    Ok(found
        .into_iter()
        .map(|crossing| edge_cut_from_crossing(g, crossing))
        .collect())
}

fn star_out(g: &Digraph, v: usize) -> Vec<(usize, usize)> {
    g.out_neighbors(v).map(|w| (v, w)).collect()
}

fn star_in(g: &Digraph, v: usize) -> Vec<(usize, usize)> {
    g.in_neighbors(v).map(|w| (w, v)).collect()
}

/// Tags a cut as an out-star, in-star, or non-trivial.
pub fn classify_edge_cut(g: &Digraph, cut: &EdgeCut) -> Result<CutClass> {
    let n = g.n();
    let side = membership(n, &cut.side_a)?;
    if cut.side_a.is_empty() || cut.side_a.len() == n {
        return Err(GraphError::Precondition(
            "cut side must be a nonempty proper subset".into(),
        ));
    }
    let mut crossing = cut.crossing.clone();
    crossing.sort_unstable();
    if crossing_edges(g, &side) != crossing {
        return Err(GraphError::Precondition(
            "crossing edges do not match the cut side".into(),
        ));
    }
    let out = (0..n).find(|&v| star_out(g, v) == crossing);
    let inn = (0..n).find(|&v| star_in(g, v) == crossing);
    Ok(match (out, inn) {
        (Some(vertex), also_in_star) => CutClass::OutStar {
            vertex,
            also_in_star,
        },
        (None, Some(vertex)) => CutClass::InStar { vertex },
        (None, None) => CutClass::NonTrivial,
    })
}

/// `|[A, V−A]| == |[V−A, A]|` for a regular digraph.
pub fn check_cut_balance(g: &Digraph, a: &[usize]) -> Result<bool> {
    g.require_regular()?;
    let n = g.n();
    let side = membership(n, a)?;
    let size = side.iter().filter(|&&b| b).count();
    if size == 0 || size == n {
        return Err(GraphError::Precondition(
            "subset must be nonempty and proper".into(),
        ));
    }
    let forward = crossing_edges(g, &side).len();
    let complement: Vec<bool> = side.iter().map(|b| !b).collect();
    let backward = crossing_edges(g, &complement).len();
    Ok(forward == backward)
}

const INF: u32 = u32::MAX / 4;

/// Vertex-split network: `v_in = 2v`, `v_out = 2v + 1`.
fn split_network(g: &Digraph, s: usize, t: usize) -> FlowNetwork {
    let n = g.n();
    let mut f = FlowNetwork::new(2 * n);
    for v in 0..n {
        let cap = if v == s || v == t { INF } else { 1 };
        f.add_arc(2 * v, 2 * v + 1, cap);
    }
    for (u, v) in g.edges() {
        f.add_arc(2 * u + 1, 2 * v, INF);
    }
    f
}

fn non_adjacent_pairs(g: &Digraph) -> Vec<(usize, usize)> {
    let n = g.n();
    (0..n)
        .flat_map(|s| (0..n).map(move |t| (s, t)))
        .filter(|&(s, t)| s != t && !g.has_edge(s, t))
        .collect()
}

fn require_vertex_cut_domain(g: &Digraph) -> Result<Vec<(usize, usize)>> {
    g.distances()?;
    let pairs = non_adjacent_pairs(g);
    if pairs.is_empty() {
        return Err(GraphError::Complete);
    }
    Ok(pairs)
}

/// Minimum over non-adjacent ordered pairs of the local vertex connectivity.
pub fn vertex_connectivity(g: &Digraph) -> Result<usize> {
    let pairs = require_vertex_cut_domain(g)?;
    Ok(pairs
        .iter()
        .map(|&(s, t)| split_network(g, s, t).max_flow(2 * s + 1, 2 * t))
        .min()
        .expect("at least one pair") as usize)
}

/// Every minimum vertex set whose removal destroys strong connectivity.
pub fn enumerate_min_vertex_cuts(g: &Digraph) -> Result<Vec<VertexCut>> {
    let pairs = require_vertex_cut_domain(g)?;
    let kappa = vertex_connectivity(g)? as u64;
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (s, t) in pairs {
        let mut f = split_network(g, s, t);
        if f.max_flow(2 * s + 1, 2 * t) != kappa {
            continue;
        }
        let residual = f.residual();
        for side in closed_sets(&residual, &[2 * s + 1], &[2 * t]) {
            let sep: Vec<usize> = (0..g.n())
                .filter(|&v| side[2 * v] && !side[2 * v + 1])
                .collect();
            debug_assert_eq!(sep.len() as u64, kappa);
            found.insert(sep);
        }
    }
    Ok(found
        .into_iter()
        .map(|vertices| VertexCut { vertices })
        .collect())
}

pub fn classify_vertex_cut(g: &Digraph, cut: &VertexCut) -> Result<CutClass> {
    let n = g.n();
    membership(n, &cut.vertices)?;
    let mut set = cut.vertices.clone();
    set.sort_unstable();
    set.dedup();
    if n - set.len() < 2 || g.strongly_connected_without_vertices(&set) {
        return Err(GraphError::Precondition("not a vertex cut".into()));
    }
    let out = (0..n).find(|&v| g.out_neighbors(v).collect::<Vec<_>>() == set);
    let inn = (0..n).find(|&v| g.in_neighbors(v).collect::<Vec<_>>() == set);
    Ok(match (out, inn) {
        (Some(vertex), also_in) => CutClass::OutNeighborhood { vertex, also_in },
        (None, Some(vertex)) => CutClass::InNeighborhood { vertex },
        (None, None) => CutClass::NonTrivial,
    })
}

/// Subset-enumeration oracles, independent of the flow machinery.
pub mod brute {
    use super::*;

    /// Crossing set mapped to every side that generates it.
    pub type CutSides = BTreeMap<Vec<(usize, usize)>, Vec<Vec<usize>>>;

    /// Minimum crossing size and every minimum crossing set, with all the
    /// sides generating each one. Exponential; meant for `n <= 16`.
    pub fn min_edge_cuts(g: &Digraph) -> (usize, CutSides) {
        let n = g.n();
        assert!(
            (2..=20).contains(&n),
            "brute-force edge cuts need 2 <= n <= 20"
        );
        let mut best = usize::MAX;
        let mut sets = CutSides::new();
        for mask in 1u32..(1u32 << n) - 1 {
            let side: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
            let crossing = crossing_edges(g, &side);
            if crossing.len() < best {
                best = crossing.len();
                sets.clear();
            }
            if crossing.len() == best {
                sets.entry(crossing).or_default().push(members(&side));
            }
        }
        for sides in sets.values_mut() {
            sides.sort();
        }
        (best, sets)
    }

    /// Minimum size and every minimum vertex set whose removal leaves at
    /// least two vertices that are not strongly connected. `None` if no
    /// such set exists.
    pub fn min_vertex_cuts(g: &Digraph) -> Option<(usize, Vec<Vec<usize>>)> {
        let n = g.n();
        assert!(n <= 20, "brute-force vertex cuts need n <= 20");
        for size in 0..n.saturating_sub(1) {
            let mut cuts = Vec::new();
            for mask in 0u32..(1u32 << n) {
                if mask.count_ones() as usize != size {
                    continue;
                }
                let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                if !g.strongly_connected_without_vertices(&set) {
                    cuts.push(set);
                }
            }
            if !cuts.is_empty() {
                cuts.sort();
                return Some((size, cuts));
            }
        }
        None
    }
}

//! Generators for the concrete digraph families: directed and undirected
//! cycles, block cycles, lifts and antipodal quotients, and the two-cycle
//! ladder family `Γ_n`.

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{GraphError, Result};
use crate::regularity::{drd_type, DrdType};

/// Ordered partition `X_1, …, X_t` of the vertices into blocks of size `ρ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockStructure {
    pub t: usize,
    pub rho: usize,
    pub blocks: Vec<Vec<usize>>,
}

/// Base digraph and multiplicity of a lift.
#[derive(Debug, Clone)]
pub struct LiftSpec {
    pub base: Digraph,
    pub m: usize,
}

impl LiftSpec {
    pub fn new(base: Digraph, m: usize) -> Result<LiftSpec> {
        if m < 2 {
            return Err(GraphError::InvalidParams(format!(
                "lift multiplicity {m} < 2"
            )));
        }
        Ok(LiftSpec { base, m })
    }

    pub fn build(&self) -> Result<Digraph> {
        damerell_lift(&self.base, self.m)
    }
}

/// `0 → 1 → … → n−1 → 0`.
pub fn directed_cycle(n: usize) -> Result<Digraph> {
    if n < 2 {
        return Err(GraphError::InvalidParams(format!(
            "directed cycle needs n >= 2, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Digraph::from_edge_list(n, &edges)
}

/// Cycle with both orientations of every edge.
pub fn undirected_cycle(n: usize) -> Result<Digraph> {
    if n < 3 {
        return Err(GraphError::InvalidParams(format!(
            "undirected cycle needs n >= 3, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|i| [(i, (i + 1) % n), ((i + 1) % n, i)])
        .collect();
    Digraph::from_edge_list(n, &edges)
}

/// `C[X_1, …, X_t]` with `|X_i| = ρ`: vertex `j` lies in block `⌊j/ρ⌋` and
/// every vertex of a block points at every vertex of the next block.
pub fn block_cycle(t: usize, rho: usize) -> Result<(Digraph, BlockStructure)> {
    if t < 2 || rho < 1 {
        return Err(GraphError::InvalidParams(format!(
            "block cycle needs t >= 2 and rho >= 1, got t={t}, rho={rho}"
        )));
    }
    let n = t * rho;
    let blocks: Vec<Vec<usize>> = (0..t).map(|b| (b * rho..(b + 1) * rho).collect()).collect();
    let mut edges = Vec::with_capacity(n * rho);
    for b in 0..t {
        for &x in &blocks[b] {
            for &y in &blocks[(b + 1) % t] {
                edges.push((x, y));
            }
        }
    }
    let g = Digraph::from_edge_list(n, &edges)?;
    Ok((g, BlockStructure { t, rho, blocks }))
}

/// Blow-up of `base`: vertex `(u, i)` is `u·m + i`, and `(u,i) → (v,j)` for
/// every edge `u → v` and all `i, j`.
pub fn damerell_lift(base: &Digraph, m: usize) -> Result<Digraph> {
    if m < 2 {
        return Err(GraphError::InvalidParams(format!(
            "lift multiplicity {m} < 2"
        )));
    }
    let mut edges = Vec::with_capacity(base.edge_count() * m * m);
    for (u, v) in base.edges() {
        for i in 0..m {
            for j in 0..m {
                edges.push((u * m + i, v * m + j));
            }
        }
    }
    Digraph::from_edge_list(base.n() * m, &edges)
}

/// Antipodal classes `{x} ∪ Γ+_g(x)` of a long-type DRD, in order of their
/// smallest member. Fails if the classes are not a uniform partition.
pub fn antipodal_classes(g: &Digraph) -> Result<Vec<Vec<usize>>> {
    if drd_type(g)? != DrdType::Long {
        return Err(GraphError::Precondition(
            "antipodal quotient needs a long-type distance-regular digraph".into(),
        ));
    }
    let girth = g.girth()?;
    let dist = g.distances()?;
    let n = g.n();
    let class_of = |x: usize| -> Vec<usize> {
        (0..n)
            .filter(|&y| y == x || dist.get(x, y) == girth)
            .collect()
    };
    let mut assigned = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if assigned[x] != usize::MAX {
            continue;
        }
        let class = class_of(x);
        for &y in &class {
            if class_of(y) != class {
                return Err(GraphError::Consistency(format!(
                    "antipodal relation is not an equivalence: classes of {x} and {y} differ"
                )));
            }
            assigned[y] = classes.len();
        }
        classes.push(class);
    }
    let size = classes[0].len();
    if let Some(c) = classes.iter().find(|c| c.len() != size) {
        return Err(GraphError::Consistency(format!(
            "antipodal classes have sizes {size} and {}",
            c.len()
        )));
    }
    Ok(classes)
}

/// Identifies antipodal vertices of a long-type DRD.
pub fn antipodal_quotient(g: &Digraph) -> Result<Digraph> {
    let classes = antipodal_classes(g)?;
    let mut class_index = vec![0; g.n()];
    for (ci, c) in classes.iter().enumerate() {
        for &x in c {
            class_index[x] = ci;
        }
    }
    let mut edges = Vec::new();
    for (p, members) in classes.iter().enumerate() {
        for q in 0..classes.len() {
            let hits: Vec<bool> = members
                .iter()
                .map(|&x| g.out_neighbors(x).any(|y| class_index[y] == q))
                .collect();
            let any = hits.iter().any(|&h| h);
            if any && !hits.iter().all(|&h| h) {
                return Err(GraphError::Consistency(format!(
                    "quotient edge {p} -> {q} is not well defined"
                )));
            }
            if any {
                if p == q {
                    return Err(GraphError::Consistency(format!(
                        "class {p} has an internal edge"
                    )));
                }
                edges.push((p, q));
            }
        }
    }
    Digraph::from_edge_list(classes.len(), &edges)
}

/// `Γ_n` on `2n` vertices: `v_i = i − 1` on the forward cycle, `u_i = n + i − 1`
/// on the backward cycle `u_1 → u_n → … → u_2 → u_1`, with a digon `v_i ↔ u_i`.
pub fn gamma_n(n: usize) -> Result<Digraph> {
    if n < 2 {
        return Err(GraphError::InvalidParams(format!(
            "gamma_n needs n >= 2, got {n}"
        )));
    }
    let v = |i: usize| i % n;
    let u = |i: usize| n + i % n;
    let mut edges = Vec::with_capacity(4 * n);
    for i in 0..n {
        edges.push((v(i), v(i + 1)));
        edges.push((u(i + 1), u(i)));
        edges.push((v(i), u(i)));
        edges.push((u(i), v(i)));
    }
    Digraph::from_edge_list(2 * n, &edges)
}

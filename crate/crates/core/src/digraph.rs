//! Immutable simple digraphs stored as fixed-width bit rows.
//!
//! Every [`Digraph`] carries its all-pairs distance matrix, computed once at
//! construction. Operations that need distances fail with
//! [`GraphError::NotStronglyConnected`] when the digraph is not strongly
//! connected, carrying the lexicographically first unreachable ordered pair.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{GraphError, Result};

/// Direction of a distance shell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Out,
    In,
}

/// All-pairs directed distances of a strongly connected digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> usize {
        self.data[u * self.n + v] as usize
    }

    pub fn row(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.data[u * self.n..(u + 1) * self.n]
            .iter()
            .map(|&d| d as usize)
    }

    pub fn transpose(&self) -> DistanceMatrix {
        let n = self.n;
        let mut data = vec![0; n * n];
        for u in 0..n {
            for v in 0..n {
                data[v * n + u] = self.data[u * n + v];
            }
        }
        DistanceMatrix { n, data }
    }

    /// Largest distance between distinct vertices; 0 for a single vertex.
    pub fn max_distance(&self) -> usize {
        self.data.iter().copied().max().unwrap_or(0) as usize
    }
}

/// Finite simple digraph on vertices `0..n`.
#[derive(Clone)]
pub struct Digraph {
    n: usize,
    words: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
    dist: std::result::Result<DistanceMatrix, (usize, usize)>,
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.out == other.out
    }
}

impl Eq for Digraph {}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Digraph {
    /// Builds a digraph from an explicit edge list, rejecting loops,
    /// duplicates, and out-of-range endpoints.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Digraph> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let words = bits::words_for(n);
        let mut out = vec![0u64; n * words];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            let row = &mut out[u * words..(u + 1) * words];
            if bits::get(row, v) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            bits::set(row, v);
        }
        Ok(Self::from_out_rows(n, out))
    }

    /// Builds a digraph from single-word out-neighbour masks (`n <= 64`).
    /// Diagonal bits and bits at or above `n` are ignored.
    pub fn from_masks(n: usize, rows: &[u64]) -> Result<Digraph> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > 64 || rows.len() != n {
            return Err(GraphError::InvalidParams(format!(
                "mask construction needs n <= 64 and n rows, got n={n} with {} rows",
                rows.len()
            )));
        }
        let valid = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let out = rows
            .iter()
            .enumerate()
            .map(|(u, &r)| r & valid & !(1u64 << u))
            .collect();
        Ok(Self::from_out_rows(n, out))
    }

    fn from_out_rows(n: usize, out: Vec<u64>) -> Digraph {
        let words = bits::words_for(n);
        let mut inn = vec![0u64; n * words];
        for u in 0..n {
            for v in bits::iter(&out[u * words..(u + 1) * words]) {
                bits::set(&mut inn[v * words..(v + 1) * words], u);
            }
        }
        let mut g = Digraph {
            n,
            words,
            out,
            inn,
            dist: Err((0, 0)),
        };
        g.dist = g.compute_distances();
        g
    }

    fn compute_distances(&self) -> std::result::Result<DistanceMatrix, (usize, usize)> {
        let n = self.n;
        let mut data = vec![0u32; n * n];
        let mut visited = vec![0u64; self.words];
        let mut frontier = vec![0u64; self.words];
        let mut next = vec![0u64; self.words];
        for s in 0..n {
            visited.fill(0);
            frontier.fill(0);
            bits::set(&mut visited, s);
            bits::set(&mut frontier, s);
            let mut reached = 1;
            let mut d = 0u32;
            while reached < n {
                d += 1;
                next.fill(0);
                for u in bits::iter(&frontier) {
                    for (w, r) in next.iter_mut().zip(self.out_row(u)) {
                        *w |= r;
                    }
                }
                for (w, vis) in next.iter_mut().zip(&visited) {
                    *w &= !vis;
                }
                let added = bits::count(&next);
                if added == 0 {
                    let unreached = (0..n).find(|&v| !bits::get(&visited, v)).unwrap();
                    return Err((s, unreached));
                }
                for v in bits::iter(&next) {
                    data[s * n + v] = d;
                }
                for (vis, w) in visited.iter_mut().zip(&next) {
                    *vis |= w;
                }
                std::mem::swap(&mut frontier, &mut next);
                reached += added;
            }
        }
        Ok(DistanceMatrix { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        bits::count(&self.out)
    }

    #[inline]
    pub(crate) fn out_row(&self, u: usize) -> &[u64] {
        &self.out[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    pub(crate) fn in_row(&self, v: usize) -> &[u64] {
        &self.inn[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::get(self.out_row(u), v)
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits::iter(self.out_row(u))
    }

    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::iter(self.in_row(v))
    }

    pub fn out_degree(&self, u: usize) -> usize {
        bits::count(self.out_row(u))
    }

    pub fn in_degree(&self, v: usize) -> usize {
        bits::count(self.in_row(v))
    }

    /// |N+(u) ∩ N+(v)|
    pub fn common_out(&self, u: usize, v: usize) -> usize {
        bits::count_and(self.out_row(u), self.out_row(v))
    }

    /// |N-(u) ∩ N-(v)|
    pub fn common_in(&self, u: usize, v: usize) -> usize {
        bits::count_and(self.in_row(u), self.in_row(v))
    }

    /// Number of walks u -> w -> v.
    pub fn two_walks(&self, u: usize, v: usize) -> usize {
        bits::count_and(self.out_row(u), self.in_row(v))
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.out_neighbors(u).map(move |v| (u, v)))
            .collect()
    }

    /// Out-neighbour masks; only valid for `n <= 64`.
    pub fn masks(&self) -> Option<Vec<u64>> {
        (self.n <= 64).then(|| (0..self.n).map(|u| self.out_row(u)[0]).collect())
    }

    pub fn distances(&self) -> Result<&DistanceMatrix> {
        self.dist
            .as_ref()
            .map_err(|&(u, v)| GraphError::NotStronglyConnected(u, v))
    }

    pub fn dist(&self, u: usize, v: usize) -> Result<usize> {
        Ok(self.distances()?.get(u, v))
    }

    pub fn diameter(&self) -> Result<usize> {
        Ok(self.distances()?.max_distance())
    }

    /// Length of the shortest directed cycle.
    pub fn girth(&self) -> Result<usize> {
        let d = self.distances()?;
        if self.n == 1 {
            return Err(GraphError::GirthUndefined);
        }
        Ok((0..self.n)
            .flat_map(|u| self.out_neighbors(u).map(move |w| 1 + d.get(w, u)))
            .min()
            .expect("strongly connected digraph on >= 2 vertices has an edge"))
    }

    /// Vertices at distance exactly `k` from `x` (`Out`) or to `x` (`In`).
    pub fn shell(&self, x: usize, k: usize, direction: Direction) -> Result<Vec<usize>> {
        let d = self.distances()?;
        if x >= self.n {
            return Err(GraphError::Precondition(format!("vertex {x} out of range")));
        }
        Ok((0..self.n)
            .filter(|&v| match direction {
                Direction::Out => d.get(x, v) == k,
                Direction::In => d.get(v, x) == k,
            })
            .collect())
    }

    /// Common in- and out-degree, if every vertex has the same one.
    pub fn regular_degree(&self) -> Option<usize> {
        self.require_regular().ok()
    }

    /// Valency, or the first vertex whose degrees break regularity.
    pub fn require_regular(&self) -> Result<usize> {
        let k = self.out_degree(0);
        for v in 0..self.n {
            let (out_degree, in_degree) = (self.out_degree(v), self.in_degree(v));
            if out_degree != k || in_degree != k {
                return Err(GraphError::NotRegular {
                    vertex: v,
                    out_degree,
                    in_degree,
                });
            }
        }
        Ok(k)
    }

    /// Forward and backward reachability from vertex 0.
    pub fn is_strongly_connected(&self) -> bool {
        self.reaches_all(0, &self.out) && self.reaches_all(0, &self.inn)
    }

    fn reaches_all(&self, s: usize, rows: &[u64]) -> bool {
        let w = self.words;
        let mut seen = vec![0u64; w];
        bits::set(&mut seen, s);
        let mut stack = vec![s];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in bits::iter(&rows[u * w..(u + 1) * w]) {
                if !bits::get(&seen, v) {
                    bits::set(&mut seen, v);
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    pub fn is_undirected(&self) -> bool {
        self.out == self.inn
    }

    pub fn has_digon(&self) -> bool {
        (0..self.n).any(|u| self.common_out_in(u) > 0)
    }

    fn common_out_in(&self, u: usize) -> usize {
        bits::count_and(self.out_row(u), self.in_row(u))
    }

    /// Same vertex set with every edge reversed.
    pub fn reverse(&self) -> Digraph {
        Self::from_out_rows(self.n, self.inn.clone())
    }

    /// Applies the relabelling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Digraph> {
        let edges: Vec<_> = self
            .edges()
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Self::from_edge_list(self.n, &edges)
    }

    /// True iff deleting `edges` leaves the digraph strongly connected.
    pub fn strongly_connected_without_edges(&self, edges: &[(usize, usize)]) -> bool {
        let mut out = self.out.clone();
        for &(u, v) in edges {
            out[u * self.words + v / 64] &= !(1u64 << (v % 64));
        }
        let h = Self::raw(self.n, out);
        h.reaches_all(0, &h.out) && h.reaches_all(0, &h.inn)
    }

    /// True iff the digraph induced on the complement of `removed` is
    /// strongly connected. Fewer than one remaining vertex counts as connected.
    pub fn strongly_connected_without_vertices(&self, removed: &[usize]) -> bool {
        let mut keep = bits::full(self.n);
        for &v in removed {
            keep[v / 64] &= !(1u64 << (v % 64));
        }
        let Some(root) = bits::iter(&keep).next() else {
            return true;
        };
        let w = self.words;
        let total = bits::count(&keep);
        for rows in [&self.out, &self.inn] {
            let mut seen = vec![0u64; w];
            bits::set(&mut seen, root);
            let mut stack = vec![root];
            let mut count = 1;
            while let Some(u) = stack.pop() {
                for v in bits::iter(&rows[u * w..(u + 1) * w]) {
                    if bits::get(&keep, v) && !bits::get(&seen, v) {
                        bits::set(&mut seen, v);
                        count += 1;
                        stack.push(v);
                    }
                }
            }
            if count != total {
                return false;
            }
        }
        true
    }

    /// A digraph without the distance cache, for reachability-only helpers.
    fn raw(n: usize, out: Vec<u64>) -> Digraph {
        let words = bits::words_for(n);
        let mut inn = vec![0u64; n * words];
        for u in 0..n {
            for v in bits::iter(&out[u * words..(u + 1) * words]) {
                bits::set(&mut inn[v * words..(v + 1) * words], u);
            }
        }
        Digraph {
            n,
            words,
            out,
            inn,
            dist: Err((0, 0)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Digraph {
        Digraph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn digon() -> Digraph {
        Digraph::from_edge_list(2, &[(0, 1), (1, 0)]).unwrap()
    }

    #[test]
    fn construction_errors_name_the_pair() {
        assert_eq!(
            Digraph::from_edge_list(2, &[(0, 0)]).unwrap_err(),
            GraphError::Loop(0)
        );
        assert_eq!(
            Digraph::from_edge_list(3, &[(0, 1), (0, 1)]).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
        assert_eq!(
            Digraph::from_edge_list(3, &[(0, 3)]).unwrap_err(),
            GraphError::OutOfRange { u: 0, v: 3, n: 3 }
        );
        assert_eq!(
            Digraph::from_edge_list(0, &[]).unwrap_err(),
            GraphError::Empty
        );
    }

    #[test]
    fn triangle_and_digon() {
        let t = triangle();
        assert_eq!(t.edges(), vec![(0, 1), (1, 2), (2, 0)]);
        assert_eq!(t.dist(0, 2).unwrap(), 2);
        assert_eq!(t.dist(2, 0).unwrap(), 1);
        assert!(t.is_strongly_connected());
        assert!(!t.is_undirected());
        let d = digon();
        assert_eq!(d.dist(0, 1).unwrap(), 1);
        assert_eq!(d.dist(1, 0).unwrap(), 1);
        assert!(d.is_strongly_connected());
        assert!(d.is_undirected());
    }

    #[test]
    fn unreachable_pair_is_reported() {
        let g = Digraph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(
            g.distances().unwrap_err(),
            GraphError::NotStronglyConnected(1, 0)
        );
        assert!(!g.is_strongly_connected());
    }

    #[test]
    fn two_disjoint_digons() {
        let g = Digraph::from_edge_list(4, &[(0, 1), (1, 0), (2, 3), (3, 2)]).unwrap();
        assert!(!g.is_strongly_connected());
        assert!(g.is_undirected());
    }

    #[test]
    fn single_vertex_conventions() {
        let g = Digraph::from_edge_list(1, &[]).unwrap();
        assert!(g.is_strongly_connected());
        assert_eq!(g.diameter().unwrap(), 0);
        assert_eq!(g.girth().unwrap_err(), GraphError::GirthUndefined);
        assert_eq!(g.regular_degree(), Some(0));
    }

    #[test]
    fn cycle_diameter_and_girth() {
        let c6: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let g = Digraph::from_edge_list(6, &c6).unwrap();
        assert_eq!(g.diameter().unwrap(), 5);
        assert_eq!(g.girth().unwrap(), 6);
        let mut u4: Vec<_> = (0..4).map(|i| (i, (i + 1) % 4)).collect();
        u4.extend((0..4).map(|i| ((i + 1) % 4, i)));
        let g = Digraph::from_edge_list(4, &u4).unwrap();
        assert_eq!(g.diameter().unwrap(), 2);
        assert_eq!(g.girth().unwrap(), 2);
    }

    #[test]
    fn shells_and_regularity() {
        let t = triangle();
        assert_eq!(t.shell(0, 0, Direction::Out).unwrap(), vec![0]);
        assert_eq!(t.shell(0, 1, Direction::Out).unwrap(), vec![1]);
        assert_eq!(t.shell(0, 1, Direction::In).unwrap(), vec![2]);
        assert_eq!(t.regular_degree(), Some(1));
        let path = Digraph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.regular_degree(), None);
        assert_eq!(
            path.require_regular().unwrap_err(),
            GraphError::NotRegular {
                vertex: 0,
                out_degree: 1,
                in_degree: 0
            }
        );
    }

    #[test]
    fn wide_digraphs_use_multiple_words() {
        let n = 130;
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let g = Digraph::from_edge_list(n, &edges).unwrap();
        assert_eq!(g.diameter().unwrap(), n - 1);
        assert_eq!(g.girth().unwrap(), n);
        assert_eq!(g.regular_degree(), Some(1));
        assert!(g.masks().is_none());
    }

    #[test]
    fn deletions() {
        let t = triangle();
        assert!(!t.strongly_connected_without_edges(&[(0, 1)]));
        assert!(t.strongly_connected_without_edges(&[]));
        assert!(!t.strongly_connected_without_vertices(&[1]));
        assert!(t.strongly_connected_without_vertices(&[0, 1]));
    }
}

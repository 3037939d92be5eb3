//! Exhaustive search for strongly regular digraphs with given parameters.

use std::collections::BTreeMap;

use crate::bits;
use crate::digraph::Digraph;
use crate::error::{GraphError, Result};
use crate::iso::canonical_form;
use crate::rowsearch::RowSearch;

/// Largest order the search accepts.
pub const MAX_SRD_ORDER: usize = 16;

/// Every digraph with `A² = tI + λA + μ(J − I − A)`, one per isomorphism
/// class, in canonical labelling and sorted by edge list.
///
/// Parameters outside `0 <= t, λ, μ <= k <= n − 1` are rejected; parameters
/// that merely admit no solution give an empty list.
pub fn find_srd(n: usize, k: usize, t: usize, lambda: usize, mu: usize) -> Result<Vec<Digraph>> {
    if n == 0 || k > n - 1 || t > k || lambda > k || mu > k {
        return Err(GraphError::InvalidParams(format!(
            "need 0 <= t, lambda, mu <= k <= n - 1, got ({n},{k},{t},{lambda},{mu})"
        )));
    }
    if n > MAX_SRD_ORDER {
        return Err(GraphError::InvalidParams(format!(
            "search supports n <= {MAX_SRD_ORDER}, got {n}"
        )));
    }
    // Row sums of both sides.
    let non_adjacent = n - 1 - k;
    if t + k * lambda + non_adjacent * mu != k * k {
        return Ok(Vec::new());
    }
    let target = move |u: usize, v: usize, adjacent: bool| {
        if u == v {
            t
        } else if adjacent {
            lambda
        } else {
            mu
        }
    };
    let prune = move |rows: &[u64], r: usize, colsum: &[usize]| -> bool {
        for u in 0..=r {
            let mut known = [0usize; 64];
            let mut unknown = 0;
            for w in bits::iter(&rows[u..=u]) {
                if w <= r {
                    for v in bits::iter(&rows[w..=w]) {
                        known[v] += 1;
                    }
                } else {
                    unknown += 1;
                }
            }
            for v in 0..n {
                let goal = target(u, v, rows[u] >> v & 1 == 1);
                let upper = known[v] + unknown.min(k - colsum[v]);
                if known[v] > goal || upper < goal {
                    return false;
                }
            }
        }
        true
    };
    let search = RowSearch {
        n,
        k,
        // With μ ≥ 1 every vertex is within distance 2 of vertex 0.
        require_reach: mu >= 1 && non_adjacent > 0,
        prune: &prune,
    };
    let found = search.run(&|rows: &[u64]| {
        let g = Digraph::from_masks(n, rows).expect("search yields simple digraphs");
        Some(canonical_form(&g))
    });
    let mut unique: BTreeMap<Vec<(usize, usize)>, Digraph> = BTreeMap::new();
    for g in found {
        unique.entry(g.edges()).or_insert(g);
    }
    Ok(unique.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::undirected_cycle;
    use crate::iso::isomorphic;
    use crate::regularity::{srd_params, SrdParams};

    #[test]
    fn six_vertex_exception() {
        let found = find_srd(6, 2, 1, 0, 1).unwrap();
        assert!(!found.is_empty());
        for g in &found {
            assert_eq!(srd_params(g), Some(SrdParams::new(6, 2, 1, 0, 1)));
        }
    }

    #[test]
    fn undirected_four_cycle_is_found() {
        let found = find_srd(4, 2, 2, 0, 2).unwrap();
        let c4 = undirected_cycle(4).unwrap();
        assert!(found.iter().any(|g| isomorphic(g, &c4)));
    }

    #[test]
    fn infeasible_and_invalid_parameters() {
        assert!(find_srd(6, 2, 1, 1, 1).unwrap().is_empty());
        assert!(find_srd(4, 4, 0, 0, 0).is_err());
        assert!(find_srd(4, 2, 3, 0, 0).is_err());
    }

    #[test]
    fn complete_digraph() {
        // K4: A² = 3I + 2A.
        let found = find_srd(4, 3, 3, 2, 0).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].edge_count(), 12);
    }

    #[test]
    fn disconnected_solutions_are_included() {
        // Two disjoint digons: A² = I.
        let found = find_srd(4, 1, 1, 0, 0).unwrap();
        assert_eq!(found.len(), 1);
        assert!(!found[0].is_strongly_connected());
    }
}

//! Isomorphism classes of k-regular strongly connected digraphs.

use std::collections::BTreeMap;

use crate::digraph::Digraph;
use crate::error::{GraphError, Result};
use crate::iso::canonical_form;
use crate::rowsearch::RowSearch;

/// Largest order the enumerator accepts.
pub const MAX_ENUM_ORDER: usize = 12;

/// One canonical representative per isomorphism class of strongly connected
/// `k`-regular digraphs on `n` vertices that satisfy `keep`, sorted by edge
/// list. `keep` runs before canonicalization, so a selective filter saves
/// most of the work.
pub fn regular_digraphs_where(
    n: usize,
    k: usize,
    keep: &(dyn Fn(&Digraph) -> bool + Sync),
) -> Result<Vec<Digraph>> {
    if n > MAX_ENUM_ORDER {
        return Err(GraphError::InvalidParams(format!(
            "enumeration supports n <= {MAX_ENUM_ORDER}, got {n}"
        )));
    }
    if n == 0 || k == 0 || k >= n {
        return Ok(Vec::new());
    }
    let prune = |_: &[u64], _: usize, _: &[usize]| true;
    let search = RowSearch {
        n,
        k,
        require_reach: true,
        prune: &prune,
    };
    let found = search.run(&|rows: &[u64]| {
        let g = Digraph::from_masks(n, rows).expect("search yields simple digraphs");
        (g.is_strongly_connected() && keep(&g)).then(|| canonical_form(&g))
    });
    let mut unique: BTreeMap<Vec<(usize, usize)>, Digraph> = BTreeMap::new();
    for g in found {
        unique.entry(g.edges()).or_insert(g);
    }
    Ok(unique.into_values().collect())
}

pub fn regular_digraphs(n: usize, k: usize) -> Result<Vec<Digraph>> {
    regular_digraphs_where(n, k, &|_| true)
}

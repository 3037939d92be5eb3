//! Row-by-row backtracking over k-regular adjacency matrices.
//!
//! Labels follow breadth-first discovery order: row 0 is `{1..k}`, and the
//! vertices a row introduces for the first time are always the next unused
//! labels in increasing order. Every digraph has at least one such labelling,
//! so the search is complete up to isomorphism.

use rayon::prelude::*;

use crate::bits;

pub(crate) type Prune = dyn Fn(&[u64], usize, &[usize]) -> bool + Sync;

pub(crate) struct RowSearch<'a> {
    pub n: usize,
    pub k: usize,
    /// Reject labellings in which some vertex is unreachable from vertex 0.
    pub require_reach: bool,
    /// Called after each fixed row with `rows[..=r]` and column sums; return
    /// `false` to prune.
    pub prune: &'a Prune,
}

struct State {
    rows: Vec<u64>,
    colsum: Vec<usize>,
}

impl State {
    fn push(&mut self, mask: u64) {
        for v in bits::iter(&[mask]) {
            self.colsum[v] += 1;
        }
        self.rows.push(mask);
    }

    fn pop(&mut self) {
        let mask = self.rows.pop().expect("row to pop");
        for v in bits::iter(&[mask]) {
            self.colsum[v] -= 1;
        }
    }
}

impl RowSearch<'_> {
    /// Masks for row `r` with `s` vertices seen so far, paired with the new `s`.
    fn choices(&self, r: usize, s: usize, colsum: &[usize]) -> Vec<(u64, usize)> {
        let (n, k) = (self.n, self.k);
        let pool: Vec<usize> = (0..s).filter(|&v| v != r && colsum[v] < k).collect();
        let mut out = Vec::new();
        for j in 0..=k.min(n - s) {
            let fresh: u64 = (s..s + j).fold(0, |m, v| m | 1 << v);
            let need = k - j;
            if need > pool.len() {
                continue;
            }
            for_each_subset(&pool, need, &mut |m| out.push((m | fresh, s + j)));
        }
        out
    }

    fn descend<T>(
        &self,
        state: &mut State,
        s: usize,
        leaf: &(dyn Fn(&[u64]) -> Option<T> + Sync),
        out: &mut Vec<T>,
    ) {
        let r = state.rows.len();
        if r == self.n {
            if let Some(x) = leaf(&state.rows) {
                out.push(x);
            }
            return;
        }
        let mut s = s;
        if r == s {
            if self.require_reach {
                return;
            }
            s = r + 1;
        }
        for (mask, next_s) in self.choices(r, s, &state.colsum) {
            state.push(mask);
            if (self.prune)(&state.rows, r, &state.colsum) {
                self.descend(state, next_s, leaf, out);
            }
            state.pop();
        }
    }

    /// Runs the search, applying `leaf` to every complete matrix. The result
    /// order depends only on the inputs.
    pub fn run<T: Send>(&self, leaf: &(dyn Fn(&[u64]) -> Option<T> + Sync)) -> Vec<T> {
        let (n, k) = (self.n, self.k);
        assert!(n <= 64, "row search supports n <= 64");
        if n == 0 || k >= n {
            return Vec::new();
        }
        let fresh_state = || State {
            rows: Vec::with_capacity(n),
            colsum: vec![0; n],
        };
        let mut root = fresh_state();
        let row0: u64 = (1..=k).fold(0, |m, v| m | 1 << v);
        root.push(row0);
        if !(self.prune)(&root.rows, 0, &root.colsum) {
            return Vec::new();
        }
        if n == 1 {
            return leaf(&root.rows).into_iter().collect();
        }
        let s = k + 1;
        let (r, s) = if s == 1 {
            if self.require_reach {
                return Vec::new();
            }
            (1, 2)
        } else {
            (1, s)
        };
        let first = self.choices(r, s, &root.colsum);
        first
            .par_iter()
            .map(|&(mask, next_s)| {
                let mut state = fresh_state();
                state.push(row0);
                state.push(mask);
                let mut out = Vec::new();
                if (self.prune)(&state.rows, r, &state.colsum) {
                    self.descend(&mut state, next_s, leaf, &mut out);
                }
                out
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    }
}

/// Calls `f` with every mask built from `size` elements of `pool`.
fn for_each_subset(pool: &[usize], size: usize, f: &mut dyn FnMut(u64)) {
    fn go(pool: &[usize], start: usize, left: usize, acc: u64, f: &mut dyn FnMut(u64)) {
        if left == 0 {
            f(acc);
            return;
        }
        for i in start..=pool.len() - left {
            go(pool, i + 1, left - 1, acc | 1 << pool[i], f);
        }
    }
    go(pool, 0, size, 0, f);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets() {
        let mut seen = Vec::new();
        for_each_subset(&[1, 3, 4], 2, &mut |m| seen.push(m));
        assert_eq!(seen, vec![0b1010, 0b10010, 0b11000]);
        let mut empty = Vec::new();
        for_each_subset(&[1, 3], 0, &mut |m| empty.push(m));
        assert_eq!(empty, vec![0]);
    }

    #[test]
    fn one_regular_reachable_labellings() {
        let keep = |_: &[u64], _: usize, _: &[usize]| true;
        let search = RowSearch {
            n: 4,
            k: 1,
            require_reach: true,
            prune: &keep,
        };
        // Only 0 → 1 → 2 → 3 → 0.
        let leaves = search.run(&|rows: &[u64]| Some(rows.to_vec()));
        assert_eq!(leaves, vec![vec![0b10, 0b100, 0b1000, 0b1]]);
    }
}

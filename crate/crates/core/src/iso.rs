//! Exact isomorphism testing and canonical labelling for small digraphs.
//!
//! Both routines start from an isomorphism-invariant colour refinement
//! (degrees, closed walks, distance profiles, then iterated neighbour-colour
//! multisets) and backtrack only within colour classes.

use crate::digraph::Digraph;

/// Stable colouring: `colors[v]` is the rank of `v`'s final signature.
fn refined_colors(g: &Digraph) -> Vec<usize> {
    let n = g.n();
    let dist = g.distances().ok();
    let mut sigs: Vec<Vec<u64>> = (0..n)
        .map(|v| {
            let mut s = vec![
                g.out_degree(v) as u64,
                g.in_degree(v) as u64,
                g.two_walks(v, v) as u64,
                g.out_neighbors(v).map(|w| g.two_walks(w, v) as u64).sum(),
            ];
            if let Some(d) = dist {
                let mut out: Vec<u64> = d.row(v).map(|x| x as u64).collect();
                let mut inn: Vec<u64> = (0..n).map(|u| d.get(u, v) as u64).collect();
                out.sort_unstable();
                inn.sort_unstable();
                s.extend(out);
                s.push(u64::MAX);
                s.extend(inn);
            }
            s
        })
        .collect();
    let mut colors = rank(&sigs);
    loop {
        sigs = (0..n)
            .map(|v| {
                let mut outc: Vec<u64> = g.out_neighbors(v).map(|w| colors[w] as u64).collect();
                let mut inc: Vec<u64> = g.in_neighbors(v).map(|w| colors[w] as u64).collect();
                outc.sort_unstable();
                inc.sort_unstable();
                let mut s = vec![colors[v] as u64];
                s.extend(outc);
                s.push(u64::MAX);
                s.extend(inc);
                s
            })
            .collect();
        let next = rank(&sigs);
        let classes = |c: &[usize]| c.iter().max().map_or(0, |m| m + 1);
        if classes(&next) == classes(&colors) {
            return next;
        }
        colors = next;
    }
}

fn rank(sigs: &[Vec<u64>]) -> Vec<usize> {
    let mut distinct: Vec<&Vec<u64>> = sigs.iter().collect();
    distinct.sort();
    distinct.dedup();
    sigs.iter()
        .map(|s| distinct.binary_search(&s).expect("signature present"))
        .collect()
}

fn color_histogram(colors: &[usize]) -> Vec<usize> {
    let mut h = vec![0; colors.iter().max().map_or(0, |m| m + 1)];
    for &c in colors {
        h[c] += 1;
    }
    h
}

/// Exact isomorphism test by backtracking over colour-preserving bijections.
pub fn isomorphic(g: &Digraph, h: &Digraph) -> bool {
    isomorphism(g, h).is_some()
}

/// A bijection `phi` with `u → v` in `g` iff `phi[u] → phi[v]` in `h`.
pub fn isomorphism(g: &Digraph, h: &Digraph) -> Option<Vec<usize>> {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    if g.distances().is_ok() != h.distances().is_ok() {
        return None;
    }
    let cg = refined_colors(g);
    let ch = refined_colors(h);
    if color_histogram(&cg) != color_histogram(&ch) {
        return None;
    }
    let hist = color_histogram(&cg);
    // Most constrained first: small colour classes, then most links to placed vertices.
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order
                    .iter()
                    .filter(|&&w| g.has_edge(v, w) || g.has_edge(w, v))
                    .count();
                (links, std::cmp::Reverse(hist[cg[v]]), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
    }
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g, h, &cg, &ch, &order, 0, &mut phi, &mut used) {
        Some(phi)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Digraph,
    h: &Digraph,
    cg: &[usize],
    ch: &[usize],
    order: &[usize],
    depth: usize,
    phi: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for c in 0..h.n() {
        if used[c] || ch[c] != cg[v] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&w| {
            g.has_edge(v, w) == h.has_edge(c, phi[w]) && g.has_edge(w, v) == h.has_edge(phi[w], c)
        });
        if !consistent {
            continue;
        }
        phi[v] = c;
        used[c] = true;
        if extend(g, h, cg, ch, order, depth + 1, phi, used) {
            return true;
        }
        used[c] = false;
        phi[v] = usize::MAX;
    }
    false
}

/// Canonical labelling: `labels[p]` is the original vertex placed at
/// position `p`. Isomorphic digraphs yield identical [`canonical_form`]s.
///
/// Branch-and-bound over colour-respecting orderings, maximizing the
/// adjacency code read position by position. Exponential in the worst case;
/// intended for `n` up to roughly 16.
pub fn canonical_labeling(g: &Digraph) -> Vec<usize> {
    let n = g.n();
    assert!(n <= 64, "canonical labelling supports n <= 64");
    let colors = refined_colors(g);
    let mut cell_of_position: Vec<usize> = colors.clone();
    cell_of_position.sort_unstable();
    let mut search = CanonSearch {
        g,
        colors: &colors,
        cell_of_position: &cell_of_position,
        best_code: Vec::new(),
        best_perm: Vec::new(),
        perm: Vec::with_capacity(n),
        code: Vec::with_capacity(n),
        used: vec![false; n],
    };
    search.run();
    search.best_perm
}

pub fn canonical_form(g: &Digraph) -> Digraph {
    let labels = canonical_labeling(g);
    let mut inverse = vec![0; g.n()];
    for (p, &v) in labels.iter().enumerate() {
        inverse[v] = p;
    }
    g.relabel(&inverse)
        .expect("relabelling preserves simplicity")
}

struct CanonSearch<'a> {
    g: &'a Digraph,
    colors: &'a [usize],
    cell_of_position: &'a [usize],
    best_code: Vec<u128>,
    best_perm: Vec<usize>,
    perm: Vec<usize>,
    code: Vec<u128>,
    used: Vec<bool>,
}

impl CanonSearch<'_> {
    fn segment(&self, v: usize) -> u128 {
        let mut seg = 0u128;
        for &w in &self.perm {
            seg = seg << 2 | (self.g.has_edge(w, v) as u128) << 1 | self.g.has_edge(v, w) as u128;
        }
        seg
    }

    fn run(&mut self) {
        let p = self.perm.len();
        let n = self.g.n();
        if p == n {
            if self.best_perm.is_empty() || self.code > self.best_code {
                self.best_code = self.code.clone();
                self.best_perm = self.perm.clone();
            }
            return;
        }
        let cell = self.cell_of_position[p];
        let candidates: Vec<(usize, u128)> = (0..n)
            .filter(|&v| !self.used[v] && self.colors[v] == cell)
            .map(|v| (v, self.segment(v)))
            .collect();
        let top = candidates
            .iter()
            .map(|&(_, s)| s)
            .max()
            .expect("cell has a free vertex");
        for (v, seg) in candidates {
            if seg != top {
                continue;
            }
            self.code.push(seg);
            // The best code may have changed in an earlier sibling.
            if !self.best_perm.is_empty() && self.code[..] < self.best_code[..=p] {
                self.code.pop();
                continue;
            }
            self.perm.push(v);
            self.used[v] = true;
            self.run();
            self.used[v] = false;
            self.perm.pop();
            self.code.pop();
        }
    }
}

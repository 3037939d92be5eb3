//! Integer max-flow (Dinic: BFS level graph plus blocking flows) and the
//! enumeration of closed vertex sets used to list every minimum cut.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: u32,
    rev: usize,
}

#[derive(Debug, Clone)]
pub struct FlowNetwork {
    arcs: Vec<Vec<Arc>>,
    /// `(tail, index in tail's list, original capacity)` per added arc.
    handles: Vec<(usize, usize, u32)>,
}

impl FlowNetwork {
    pub fn new(n: usize) -> FlowNetwork {
        FlowNetwork {
            arcs: vec![Vec::new(); n],
            handles: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.arcs.len()
    }

    /// Adds `from → to` with capacity `cap`; returns its handle.
    pub fn add_arc(&mut self, from: usize, to: usize, cap: u32) -> usize {
        let fi = self.arcs[from].len();
        let ti = self.arcs[to].len() + usize::from(from == to);
        self.arcs[from].push(Arc { to, cap, rev: ti });
        self.arcs[to].push(Arc {
            to: from,
            cap: 0,
            rev: fi,
        });
        self.handles.push((from, fi, cap));
        self.handles.len() - 1
    }

    /// Flow currently carried by arc `handle`.
    pub fn flow_on(&self, handle: usize) -> u32 {
        let (from, idx, cap) = self.handles[handle];
        cap - self.arcs[from][idx].cap
    }

    fn levels(&self, s: usize) -> Vec<u32> {
        let mut level = vec![u32::MAX; self.n()];
        level[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for a in &self.arcs[u] {
                if a.cap > 0 && level[a.to] == u32::MAX {
                    level[a.to] = level[u] + 1;
                    q.push_back(a.to);
                }
            }
        }
        level
    }

    fn augment(&mut self, u: usize, t: usize, limit: u32, level: &[u32], it: &mut [usize]) -> u32 {
        if u == t {
            return limit;
        }
        while it[u] < self.arcs[u].len() {
            let Arc { to, cap, rev } = self.arcs[u][it[u]];
            if cap > 0 && level[to] == level[u] + 1 {
                let pushed = self.augment(to, t, limit.min(cap), level, it);
                if pushed > 0 {
                    self.arcs[u][it[u]].cap -= pushed;
                    self.arcs[to][rev].cap += pushed;
                    return pushed;
                }
            }
            it[u] += 1;
        }
        0
    }

    /// Maximum `s`–`t` flow; the network keeps the final residual state.
    pub fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        assert_ne!(s, t, "source equals sink");
        let mut total = 0u64;
        loop {
            let level = self.levels(s);
            if level[t] == u32::MAX {
                return total;
            }
            let mut it = vec![0; self.n()];
            loop {
                let f = self.augment(s, t, u32::MAX, &level, &mut it);
                if f == 0 {
                    break;
                }
                total += u64::from(f);
            }
        }
    }

    /// Successor lists of the residual network.
    pub fn residual(&self) -> Vec<Vec<usize>> {
        self.arcs
            .iter()
            .map(|list| list.iter().filter(|a| a.cap > 0).map(|a| a.to).collect())
            .collect()
    }

    /// Vertices reachable from `s` in the residual network.
    pub fn source_side(&self, s: usize) -> Vec<bool> {
        let level = self.levels(s);
        level.iter().map(|&l| l != u32::MAX).collect()
    }
}

/// Strongly connected components (Tarjan, iterative). Returns `comp[v]`
/// numbered in reverse topological order: every arc goes from a higher or
/// equal component index to a lower or equal one.
pub fn strongly_connected_components(succ: &[Vec<usize>]) -> (Vec<usize>, usize) {
    let n = succ.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![usize::MAX; n];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut ncomp = 0;
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut i)) = call.last_mut() {
            if *i < succ[v].len() {
                let w = succ[v][*i];
                *i += 1;
                if index[w] == usize::MAX {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp[w] = ncomp;
                        if w == v {
                            break;
                        }
                    }
                    ncomp += 1;
                }
            }
        }
    }
    (comp, ncomp)
}

/// Every vertex set `S` that contains `include`, avoids `exclude`, and is
/// closed under `succ` (`x ∈ S`, `x → y` implies `y ∈ S`). Each set is a
/// boolean membership vector; the order is deterministic.
pub fn closed_sets(succ: &[Vec<usize>], include: &[usize], exclude: &[usize]) -> Vec<Vec<bool>> {
    let n = succ.len();
    let (comp, ncomp) = strongly_connected_components(succ);
    let mut csucc: Vec<Vec<usize>> = vec![Vec::new(); ncomp];
    let mut cpred: Vec<Vec<usize>> = vec![Vec::new(); ncomp];
    for v in 0..n {
        for &w in &succ[v] {
            let (a, b) = (comp[v], comp[w]);
            if a != b {
                csucc[a].push(b);
                cpred[b].push(a);
            }
        }
    }
    for l in csucc.iter_mut().chain(cpred.iter_mut()) {
        l.sort_unstable();
        l.dedup();
    }
    let spread = |seeds: &[usize], adj: &[Vec<usize>]| -> Vec<bool> {
        let mut mark = vec![false; ncomp];
        let mut stack: Vec<usize> = seeds.iter().map(|&v| comp[v]).collect();
        while let Some(c) = stack.pop() {
            if !mark[c] {
                mark[c] = true;
                stack.extend(adj[c].iter().copied());
            }
        }
        mark
    };
    let forced_in = spread(include, &csucc);
    let forced_out = spread(exclude, &cpred);
    if (0..ncomp).any(|c| forced_in[c] && forced_out[c]) {
        return Vec::new();
    }
    // Component indices are reverse topological: successors have smaller
    // indices, so deciding in increasing order settles successors first.
    let free: Vec<usize> = (0..ncomp)
        .filter(|&c| !forced_in[c] && !forced_out[c])
        .collect();
    let mut chosen = forced_in.clone();
    let mut out = Vec::new();
    enumerate_ideals(&free, 0, &csucc, &mut chosen, &mut |chosen| {
        out.push((0..n).map(|v| chosen[comp[v]]).collect());
    });
    out
}

fn enumerate_ideals(
    free: &[usize],
    i: usize,
    csucc: &[Vec<usize>],
    chosen: &mut Vec<bool>,
    emit: &mut dyn FnMut(&[bool]),
) {
    if i == free.len() {
        emit(chosen);
        return;
    }
    let c = free[i];
    enumerate_ideals(free, i + 1, csucc, chosen, emit);
    if csucc[c].iter().all(|&d| chosen[d]) {
        chosen[c] = true;
        enumerate_ideals(free, i + 1, csucc, chosen, emit);
        chosen[c] = false;
    }
}

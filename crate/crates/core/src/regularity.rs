//! Recognizers for distance-regular (DRD), weakly distance-regular (WDRD),
//! and strongly regular (SRD) digraphs, plus the structural predicates used
//! alongside them: normality, stability, short/long type, block-cycle
//! membership, and the `a_11^l >= 1` property.
//!
//! All witnesses are the lexicographically first violation.

use serde::{Deserialize, Serialize};

use crate::constructions::BlockStructure;
use crate::digraph::Digraph;
use crate::error::{GraphError, Result};

/// Constant table `a_{i1}^k = |Γ+_i(u) ∩ Γ+_1(v)|` over pairs with `∂(u,v) = k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionNumbers {
    pub valency: usize,
    pub diameter: usize,
    /// `rows[k - 1][i]` for `k in 1..=diameter`, `i in 0..=k+1`.
    pub rows: Vec<Vec<usize>>,
}

impl IntersectionNumbers {
    /// `a_{i1}^k`; zero outside the stored index range.
    pub fn a(&self, i: usize, k: usize) -> usize {
        if k == 0 || k > self.diameter {
            return 0;
        }
        self.rows[k - 1].get(i).copied().unwrap_or(0)
    }

    /// `λ = a_{11}^1`.
    pub fn lambda(&self) -> usize {
        self.a(1, 1)
    }
}

/// First ordered pair whose counts disagree with the first pair of its
/// class, `(reference_u, reference_v)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrdViolation {
    pub u: usize,
    pub v: usize,
    pub reference_u: usize,
    pub reference_v: usize,
    pub distance: usize,
    pub index: usize,
    pub expected: usize,
    pub found: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntersectionCheck {
    Constant(IntersectionNumbers),
    Violated(DrdViolation),
}

fn require_connected_regular(g: &Digraph) -> Result<usize> {
    if g.n() < 2 {
        return Err(GraphError::Precondition(
            "need at least two vertices".into(),
        ));
    }
    g.distances()?;
    g.require_regular()
}

pub fn intersection_numbers(g: &Digraph) -> Result<IntersectionCheck> {
    let k = require_connected_regular(g)?;
    let dist = g.distances()?;
    let diameter = dist.max_distance();
    // Per distance: the first row of counts seen and the pair it came from.
    type Reference = Option<(Vec<usize>, (usize, usize))>;
    let mut rows: Vec<Reference> = vec![None; diameter];
    let n = g.n();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let d = dist.get(u, v);
            let mut counts = vec![0usize; d + 2];
            for w in g.out_neighbors(v) {
                // ∂(u,w) <= ∂(u,v) + 1 always.
                counts[dist.get(u, w)] += 1;
            }
            if counts.iter().sum::<usize>() != k {
                return Err(GraphError::Consistency(format!(
                    "shell counts for ({u},{v}) do not sum to valency {k}"
                )));
            }
            match &rows[d - 1] {
                None => rows[d - 1] = Some((counts, (u, v))),
                Some((reference, (ru, rv))) => {
                    if let Some(i) = (0..counts.len()).find(|&i| counts[i] != reference[i]) {
                        return Ok(IntersectionCheck::Violated(DrdViolation {
                            u,
                            v,
                            reference_u: *ru,
                            reference_v: *rv,
                            distance: d,
                            index: i,
                            expected: reference[i],
                            found: counts[i],
                        }));
                    }
                }
            }
        }
    }
    Ok(IntersectionCheck::Constant(IntersectionNumbers {
        valency: k,
        diameter,
        rows: rows
            .into_iter()
            .map(|r| r.expect("every distance up to the diameter occurs").0)
            .collect(),
    }))
}

pub fn is_distance_regular(g: &Digraph) -> Result<bool> {
    Ok(matches!(
        intersection_numbers(g)?,
        IntersectionCheck::Constant(_)
    ))
}

/// Intersection numbers if `g` is a DRD, `None` if it is not.
pub fn drd_numbers(g: &Digraph) -> Result<Option<IntersectionNumbers>> {
    Ok(match intersection_numbers(g)? {
        IntersectionCheck::Constant(t) => Some(t),
        IntersectionCheck::Violated(_) => None,
    })
}

/// First pair `(u,v)` with `(AAᵗ)_{uv} != (AᵗA)_{uv}`.
pub fn normality_witness(g: &Digraph) -> Option<(usize, usize)> {
    let n = g.n();
    (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .find(|&(u, v)| g.common_out(u, v) != g.common_in(u, v))
}

pub fn is_normal(g: &Digraph) -> bool {
    normality_witness(g).is_none()
}

/// Exact `n × n` integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkMatrix {
    n: usize,
    data: Vec<u128>,
}

impl WalkMatrix {
    pub fn identity(n: usize) -> WalkMatrix {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        WalkMatrix { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u128 {
        self.data[u * self.n + v]
    }

    /// `self · A`, failing on overflow.
    fn times_adjacency(&self, g: &Digraph, length: usize) -> Result<WalkMatrix> {
        let n = self.n;
        let mut data = vec![0u128; n * n];
        for u in 0..n {
            for v in 0..n {
                let mut acc: u128 = 0;
                for w in g.in_neighbors(v) {
                    acc = acc
                        .checked_add(self.data[u * n + w])
                        .ok_or(GraphError::Overflow(length))?;
                }
                data[u * n + v] = acc;
            }
        }
        Ok(WalkMatrix { n, data })
    }
}

/// `A^length`, the number of walks of each length between ordered pairs.
pub fn walk_counts(g: &Digraph, length: usize) -> Result<WalkMatrix> {
    let mut m = WalkMatrix::identity(g.n());
    for l in 1..=length {
        m = m.times_adjacency(g, l)?;
    }
    Ok(m)
}

/// First `(ℓ, u, v)` whose walk count differs from the first pair at the same distance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkViolation {
    pub length: usize,
    pub u: usize,
    pub v: usize,
    pub reference_u: usize,
    pub reference_v: usize,
    pub distance: usize,
    pub expected: u128,
    pub found: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WdrdCheck {
    pub witness: Option<WalkViolation>,
    /// When the check over `ℓ <= D` passes: whether constancy also holds for
    /// `D < ℓ <= 2D`.
    pub extended: Option<bool>,
}

impl WdrdCheck {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

fn walk_constancy(
    g: &Digraph,
    lengths: std::ops::RangeInclusive<usize>,
) -> Result<Option<WalkViolation>> {
    let dist = g.distances()?;
    let n = g.n();
    let diameter = dist.max_distance();
    let mut m = walk_counts(g, *lengths.start())?;
    let end = *lengths.end();
    let mut length = *lengths.start();
    loop {
        let mut reference: Vec<Option<(u128, usize, usize)>> = vec![None; diameter + 1];
        for u in 0..n {
            for v in 0..n {
                let d = dist.get(u, v);
                let x = m.get(u, v);
                match reference[d] {
                    None => reference[d] = Some((x, u, v)),
                    Some((e, ru, rv)) if e != x => {
                        return Ok(Some(WalkViolation {
                            length,
                            u,
                            v,
                            reference_u: ru,
                            reference_v: rv,
                            distance: d,
                            expected: e,
                            found: x,
                        }))
                    }
                    _ => {}
                }
            }
        }
        if length == end {
            return Ok(None);
        }
        length += 1;
        m = m.times_adjacency(g, length)?;
    }
}

/// Walk counts of every length `ℓ <= D` depend only on the distance class.
pub fn weakly_distance_regular(g: &Digraph) -> Result<WdrdCheck> {
    require_connected_regular(g)?;
    let diameter = g.diameter()?;
    let witness = walk_constancy(g, 0..=diameter)?;
    let extended = if witness.is_none() {
        Some(walk_constancy(g, 0..=2 * diameter)?.is_none())
    } else {
        None
    };
    Ok(WdrdCheck { witness, extended })
}

pub fn is_weakly_distance_regular(g: &Digraph) -> Result<bool> {
    Ok(weakly_distance_regular(g)?.holds())
}

/// Parameters `(n, k, t, λ, μ)` with `A² = tI + λA + μ(J − I − A)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SrdParams {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub lambda: usize,
    /// `None` when no non-adjacent ordered pair exists (complete digraph).
    pub mu: Option<usize>,
}

impl SrdParams {
    pub fn new(n: usize, k: usize, t: usize, lambda: usize, mu: usize) -> SrdParams {
        SrdParams {
            n,
            k,
            t,
            lambda,
            mu: Some(mu),
        }
    }

    pub fn mu_vacuous(&self) -> bool {
        self.mu.is_none()
    }

    /// `(n,k,t,λ,μ)` with a vacuous μ shown as `-`.
    pub fn tuple_string(&self) -> String {
        let mu = self.mu.map_or("-".to_string(), |m| m.to_string());
        format!("({},{},{},{},{})", self.n, self.k, self.t, self.lambda, mu)
    }
}

/// Present iff `g` is `k`-regular with `k >= 1` and its length-2 walk counts
/// are constant on the diagonal, on adjacent pairs, and on non-adjacent pairs.
pub fn srd_params(g: &Digraph) -> Option<SrdParams> {
    let k = g.regular_degree()?;
    if k == 0 {
        return None;
    }
    let n = g.n();
    let (mut t, mut lambda, mut mu) = (None, None, None);
    for u in 0..n {
        for v in 0..n {
            let x = g.two_walks(u, v);
            let slot = if u == v {
                &mut t
            } else if g.has_edge(u, v) {
                &mut lambda
            } else {
                &mut mu
            };
            match *slot {
                None => *slot = Some(x),
                Some(e) if e != x => return None,
                _ => {}
            }
        }
    }
    Some(SrdParams {
        n,
        k,
        t: t?,
        lambda: lambda?,
        mu,
    })
}

/// First pair with `0 < ∂(x,y) < g` and `∂(x,y) + ∂(y,x) != g`.
pub fn stability_witness(g: &Digraph) -> Result<Option<(usize, usize)>> {
    let girth = g.girth()?;
    let dist = g.distances()?;
    let n = g.n();
    Ok((0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| {
            let d = dist.get(x, y);
            d > 0 && d < girth && d + dist.get(y, x) != girth
        }))
}

pub fn is_stable(g: &Digraph) -> Result<bool> {
    Ok(stability_witness(g)?.is_none())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DrdType {
    /// `D = g − 1`
    Short,
    /// `D = g`
    Long,
}

pub fn drd_type(g: &Digraph) -> Result<DrdType> {
    if !is_distance_regular(g)? {
        return Err(GraphError::Precondition("not distance-regular".into()));
    }
    let girth = g.girth()?;
    if girth < 3 {
        return Err(GraphError::Precondition(format!("girth {girth} < 3")));
    }
    let diameter = g.diameter()?;
    if diameter == girth {
        Ok(DrdType::Long)
    } else if diameter + 1 == girth {
        Ok(DrdType::Short)
    } else {
        Err(GraphError::Consistency(format!(
            "distance-regular digraph with diameter {diameter} and girth {girth}"
        )))
    }
}

/// `Ok(None)` when `a_11^l >= 1` for every `2 <= l <= D`, otherwise the
/// smallest failing `l`.
pub fn a11_lemma_failure(g: &Digraph) -> Result<Option<usize>> {
    let table =
        drd_numbers(g)?.ok_or_else(|| GraphError::Precondition("not distance-regular".into()))?;
    let girth = g.girth()?;
    if girth < 3 {
        return Err(GraphError::Precondition(format!("girth {girth} < 3")));
    }
    Ok((2..=table.diameter).find(|&l| table.a(1, l) == 0))
}

pub fn check_a11_lemma(g: &Digraph) -> Result<bool> {
    Ok(a11_lemma_failure(g)?.is_none())
}

/// Recognizes block cycles `C[X_1, …, X_t]` with `t >= 3` equal blocks.
/// Blocks are ordered starting from the one containing vertex 0.
pub fn is_family_d(g: &Digraph) -> Option<BlockStructure> {
    let n = g.n();
    // Group vertices by out-neighbourhood, in order of first appearance.
    let mut groups: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for v in 0..n {
        let nb: Vec<usize> = g.out_neighbors(v).collect();
        match groups.iter_mut().find(|(key, _)| *key == nb) {
            Some((_, members)) => members.push(v),
            None => groups.push((nb, vec![v])),
        }
    }
    let t = groups.len();
    let rho = groups[0].1.len();
    if t < 3 || groups.iter().any(|(_, m)| m.len() != rho) {
        return None;
    }
    // Each group's out-neighbourhood must be exactly another group.
    let successor: Vec<usize> = groups
        .iter()
        .map(|(key, _)| groups.iter().position(|(_, m)| m == key))
        .collect::<Option<_>>()?;
    let mut blocks = Vec::with_capacity(t);
    let mut seen = vec![false; t];
    let mut cur = 0;
    for _ in 0..t {
        if seen[cur] {
            return None;
        }
        seen[cur] = true;
        blocks.push(groups[cur].1.clone());
        cur = successor[cur];
    }
    (cur == 0).then_some(BlockStructure { t, rho, blocks })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegularityKind {
    Drd,
    Srd,
    WdrdOnly,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum RegularityWitness {
    Intersection(DrdViolation),
    Walk(WalkViolation),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityVerdict {
    pub kind: RegularityKind,
    /// Present iff `kind` is `None`: the WDRD violation, which also refutes DRD.
    pub witness: Option<RegularityWitness>,
}

/// Strongest regularity class of a strongly connected regular digraph.
pub fn classify(g: &Digraph) -> Result<RegularityVerdict> {
    let drd = intersection_numbers(g)?;
    if matches!(drd, IntersectionCheck::Constant(_)) {
        return Ok(RegularityVerdict {
            kind: RegularityKind::Drd,
            witness: None,
        });
    }
    if srd_params(g).is_some() {
        return Ok(RegularityVerdict {
            kind: RegularityKind::Srd,
            witness: None,
        });
    }
    let wdrd = weakly_distance_regular(g)?;
    Ok(match wdrd.witness {
        None => RegularityVerdict {
            kind: RegularityKind::WdrdOnly,
            witness: None,
        },
        Some(w) => RegularityVerdict {
            kind: RegularityKind::None,
            witness: Some(RegularityWitness::Walk(w)),
        },
    })
}

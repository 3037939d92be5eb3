//! Claim verification over catalogs of digraphs, conjecture search, and
//! JSON reports.

pub mod catalog;
pub mod claims;
pub mod witness;

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub use catalog::{build_catalog, default_catalog, Catalog, CatalogSpec, Member};
pub use claims::{ClaimId, Outcome, Verdict};
pub use witness::{replay, Witness};

use crate::digraph::Digraph;
use crate::enumerate::regular_digraphs_where;
use crate::error::{GraphError, Result};
use crate::regularity::{
    drd_type, is_distance_regular, is_weakly_distance_regular, srd_params, DrdType, SrdParams,
};

pub const REPORT_VERSION: &str = concat!("drdlab ", env!("CARGO_PKG_VERSION"));

/// Random subsets drawn per regular member for the cut-balance check.
pub const DEFAULT_BALANCE_SAMPLES: usize = 1000;

/// Exhaustive conjecture search bounds.
pub const SEARCH_MAX_N: usize = 8;
pub const SEARCH_MAX_K: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim: ClaimId,
    pub instance: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub info: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub params: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    pub hash: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub exception_matched: usize,
    pub consistent_with_conjecture: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub seed: u64,
    pub catalog: Vec<CatalogEntry>,
    pub results: Vec<ClaimResult>,
    pub summary: Summary,
}

impl Report {
    fn new(seed: u64, members: &[Member], results: Vec<ClaimResult>) -> Report {
        let mut summary = Summary::default();
        for r in &results {
            *match r.verdict {
                Verdict::Pass => &mut summary.pass,
                Verdict::Fail => &mut summary.fail,
                Verdict::Vacuous => &mut summary.vacuous,
                Verdict::ExceptionMatched => &mut summary.exception_matched,
                Verdict::ConsistentWithConjecture => &mut summary.consistent_with_conjecture,
            } += 1;
        }
        Report {
            version: REPORT_VERSION.into(),
            seed,
            catalog: members
                .iter()
                .map(|m| CatalogEntry {
                    name: m.name.clone(),
                    params: m.params.clone(),
                    file: m.file.clone(),
                    hash: m.hash.clone(),
                })
                .collect(),
            results,
            summary,
        }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimResult> {
        self.results.iter().filter(|r| r.verdict == Verdict::Fail)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub seed: u64,
    pub balance_samples: usize,
    /// Record wall-clock time per claim. Off by default so reports are
    /// byte-identical across runs.
    pub timing: bool,
}

impl RunOptions {
    pub fn with_seed(seed: u64) -> RunOptions {
        RunOptions {
            seed,
            balance_samples: DEFAULT_BALANCE_SAMPLES,
            timing: false,
        }
    }
}

/// Which claims run on each member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selection {
    /// Every claim whose hypotheses the member satisfies.
    Applicable,
    /// Exactly these claims on every member; a precondition error aborts the run.
    Forced(Vec<ClaimId>),
}

struct Facts {
    strongly_connected: bool,
    regular: bool,
    drd: bool,
    wdrd: bool,
    srd: Option<SrdParams>,
    girth: Option<usize>,
    short: bool,
}

fn facts(g: &Digraph) -> Facts {
    let sc = g.n() >= 2 && g.is_strongly_connected();
    let regular = g.regular_degree().is_some();
    let drd = sc && regular && is_distance_regular(g).unwrap_or(false);
    let wdrd = sc && regular && is_weakly_distance_regular(g).unwrap_or(false);
    let girth = g.girth().ok();
    let short = drd && girth.is_some_and(|x| x >= 3) && drd_type(g).ok() == Some(DrdType::Short);
    Facts {
        strongly_connected: sc,
        regular,
        drd,
        wdrd,
        srd: if sc { srd_params(g) } else { None },
        girth,
        short,
    }
}

fn applicable(id: ClaimId, m: &Member, f: &Facts) -> bool {
    let n = m.graph.n();
    let sc = f.strongly_connected;
    match id {
        ClaimId::DrdEdgeConnectivity => f.drd,
        ClaimId::SrdEdgeConnectivity => f.srd.is_some(),
        ClaimId::GammaFamily => m.gamma_order().is_some(),
        ClaimId::SrdVertexCut => f.srd == Some(SrdParams::new(8, 3, 2, 1, 1)),
        ClaimId::WdrdConjecture => f.wdrd,
        ClaimId::CutBalance => f.regular && n >= 2,
        ClaimId::DrdCharacterization => sc && f.regular,
        ClaimId::EdgeCutOracle => sc && n <= claims::EDGE_ORACLE_MAX_N,
        ClaimId::VertexCutOracle => sc && n <= claims::VERTEX_ORACLE_MAX_N,
        ClaimId::LiftQuotientRoundtrip => f.short,
        ClaimId::A11Positive | ClaimId::DrdStableType | ClaimId::FamilyDLambdaZero => {
            f.drd && f.girth.is_some_and(|x| x >= 3)
        }
        ClaimId::DrdGirthTwoUndirected => f.drd && f.girth == Some(2),
    }
}

fn member_rng(seed: u64, m: &Member) -> ChaCha8Rng {
    let salt = u64::from_str_radix(&m.hash[..16], 16).expect("hex digest");
    ChaCha8Rng::seed_from_u64(seed ^ salt)
}

pub fn run_claim(id: ClaimId, m: &Member, options: &RunOptions) -> Result<Outcome> {
    let g = &m.graph;
    match id {
        ClaimId::DrdEdgeConnectivity => claims::verify_drd_theorem(g),
        ClaimId::SrdEdgeConnectivity => claims::verify_srd_theorem(g),
        ClaimId::GammaFamily => match m.gamma_order() {
            Some(n) => claims::verify_gamma_family(n),
            None => Err(GraphError::Precondition("not a gamma family member".into())),
        },
        ClaimId::SrdVertexCut => claims::verify_srd_vertex_cut(g),
        ClaimId::WdrdConjecture => claims::check_conjecture(g),
        ClaimId::CutBalance => claims::check_balance_samples(
            g,
            &mut member_rng(options.seed, m),
            options.balance_samples,
        ),
        ClaimId::DrdCharacterization => claims::check_characterization(g),
        ClaimId::EdgeCutOracle => claims::check_edge_oracle(g),
        ClaimId::VertexCutOracle => claims::check_vertex_oracle(g),
        ClaimId::LiftQuotientRoundtrip => claims::check_lift_roundtrip(g),
        ClaimId::A11Positive => claims::check_a11(g),
        ClaimId::DrdStableType => claims::check_stable_type(g),
        ClaimId::FamilyDLambdaZero => claims::check_family_d(g),
        ClaimId::DrdGirthTwoUndirected => claims::check_girth_two_undirected(g),
    }
}

fn result_of(id: ClaimId, m: &Member, outcome: Outcome, elapsed: Option<u64>) -> ClaimResult {
    ClaimResult {
        claim: id,
        instance: m.name.clone(),
        verdict: outcome.verdict,
        witness: outcome.witness,
        info: outcome.info,
        timing_ms: elapsed,
    }
}

fn run_member(m: &Member, selection: &Selection, options: &RunOptions) -> Result<Vec<ClaimResult>> {
    let ids: Vec<ClaimId> = match selection {
        Selection::Applicable => {
            let f = facts(&m.graph);
            ClaimId::ALL
                .into_iter()
                .filter(|&id| applicable(id, m, &f))
                .collect()
        }
        Selection::Forced(ids) => ids.clone(),
    };
    let mut out = Vec::with_capacity(ids.len());
    for id in ids {
        let start = Instant::now();
        let outcome = match run_claim(id, m, options) {
            Ok(o) => o,
            Err(e) if *selection == Selection::Applicable => Outcome {
                verdict: Verdict::Fail,
                witness: Some(Witness::Error {
                    message: e.to_string(),
                }),
                info: None,
            },
            Err(e) => return Err(e),
        };
        let elapsed = options.timing.then(|| start.elapsed().as_millis() as u64);
        out.push(result_of(id, m, outcome, elapsed));
    }
    Ok(out)
}

/// Runs the selected claims on every member, in parallel. Results follow
/// catalog order, then claim order.
pub fn run(catalog: &Catalog, selection: &Selection, options: &RunOptions) -> Result<Report> {
    let per_member: Vec<Result<Vec<ClaimResult>>> = catalog
        .members
        .par_iter()
        .map(|m| run_member(m, selection, options))
        .collect();
    let mut results = Vec::new();
    for r in per_member {
        results.extend(r?);
    }
    Ok(Report::new(options.seed, &catalog.members, results))
}

/// Every applicable claim on every member. Check errors become failing
/// results, so this never fails.
pub fn run_all(catalog: &Catalog, options: &RunOptions) -> Report {
    run(catalog, &Selection::Applicable, options).expect("applicable runs record errors as results")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchSource {
    Exhaustive,
    Catalog,
}

/// Conjecture results plus the digraphs that failed.
#[derive(Debug, Clone)]
pub struct SearchRun {
    pub report: Report,
    pub counterexamples: Vec<Member>,
}

/// Checks the WDRD edge-connectivity conjecture on every WDRD from the
/// chosen source: all strongly connected `k`-regular digraphs with
/// `n <= max_n`, `k <= max_k` (exhaustive), or the default catalog.
pub fn search_conjecture(max_n: usize, max_k: usize, source: SearchSource) -> Result<SearchRun> {
    let members: Vec<Member> = match source {
        SearchSource::Exhaustive => {
            if max_n > SEARCH_MAX_N || max_k > SEARCH_MAX_K {
                return Err(GraphError::InvalidParams(format!(
                    "exhaustive search supports n <= {SEARCH_MAX_N}, k <= {SEARCH_MAX_K}"
                )));
            }
            let mut members = Vec::new();
            for n in 2..=max_n {
                for k in 1..=max_k.min(n - 1) {
                    let found = regular_digraphs_where(n, k, &|g| {
                        is_weakly_distance_regular(g).unwrap_or(false)
                    })?;
                    for (i, g) in found.into_iter().enumerate() {
                        members.push(Member::generated(
                            format!("wdrd-n{n}-k{k}-{i}"),
                            "exhaustive",
                            json!({ "n": n, "k": k, "index": i }),
                            g,
                        ));
                    }
                }
            }
            members
        }
        SearchSource::Catalog => default_catalog()?
            .members
            .into_iter()
            .filter(|m| facts(&m.graph).wdrd)
            .collect(),
    };
    let catalog = Catalog { members };
    let report = run(
        &catalog,
        &Selection::Forced(vec![ClaimId::WdrdConjecture]),
        &RunOptions::with_seed(0),
    )?;
    let failed: Vec<&str> = report.failures().map(|r| r.instance.as_str()).collect();
    let counterexamples = catalog
        .members
        .iter()
        .filter(|m| failed.contains(&m.name.as_str()))
        .cloned()
        .collect();
    Ok(SearchRun {
        report,
        counterexamples,
    })
}

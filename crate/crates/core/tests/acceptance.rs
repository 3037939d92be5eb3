//! Acceptance run: one line per criterion, non-zero exit if any fails.
//!
//! Each check recomputes its quantity from the primitives (edge lists,
//! brute-force cut oracles, walk counts) instead of trusting the harness
//! verdicts.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use drdlab::connectivity::{
    brute, classify_edge_cut, classify_vertex_cut, edge_connectivity, enumerate_min_edge_cuts,
    enumerate_min_vertex_cuts, vertex_connectivity, CutClass,
};
use drdlab::constructions::{
    antipodal_quotient, block_cycle, damerell_lift, gamma_n, undirected_cycle,
};
use drdlab::enumerate::regular_digraphs;
use drdlab::harness::claims::verify_drd_theorem;
use drdlab::harness::{default_catalog, replay, search_conjecture, Catalog, SearchSource, Verdict};
use drdlab::iso::isomorphic;
use drdlab::regularity::{
    drd_numbers, drd_type, is_distance_regular, is_normal, is_weakly_distance_regular, srd_params,
    DrdType,
};
use drdlab::srd_search::find_srd;
use drdlab::Digraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion<'a> = (&'a str, Box<dyn Fn() -> Check + 'a>);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|err| err.to_string())
}

fn has_nontrivial_cut_of_size(g: &Digraph, k: usize) -> Result<bool, String> {
    for cut in e(enumerate_min_edge_cuts(g))? {
        if cut.size() == k && e(classify_edge_cut(g, &cut))? == CutClass::NonTrivial {
            return Ok(true);
        }
    }
    Ok(false)
}

fn all_cuts_stars(g: &Digraph) -> Result<bool, String> {
    for cut in e(enumerate_min_edge_cuts(g))? {
        if !matches!(
            e(classify_edge_cut(g, &cut))?,
            CutClass::OutStar { .. } | CutClass::InStar { .. }
        ) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn drd_edge_connectivity(catalog: &Catalog) -> Check {
    let start = Instant::now();
    let mut count = 0;
    for m in &catalog.members {
        if !matches!(
            m.family.as_str(),
            "dcycle" | "ucycle" | "blockcycle" | "lift"
        ) {
            continue;
        }
        let g = &m.graph;
        let k = g
            .regular_degree()
            .ok_or_else(|| format!("{} not regular", m.name))?;
        ensure(e(is_distance_regular(g))?, || {
            format!("{} is not a DRD", m.name)
        })?;
        let lambda = e(edge_connectivity(g))?;
        ensure(lambda == k, || {
            format!("{}: edge connectivity {lambda} != valency {k}", m.name)
        })?;
        let undirected_cycle = g.is_undirected() && k == 2;
        if !undirected_cycle {
            ensure(all_cuts_stars(g)?, || {
                format!("{}: non-star minimum cut", m.name)
            })?;
        }
        count += 1;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(120), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{count} DRDs, {elapsed:.2?}"))
}

fn srd_edge_connectivity(catalog: &Catalog) -> Check {
    let six = e(find_srd(6, 2, 1, 0, 1))?;
    ensure(!six.is_empty(), || "find_srd(6,2,1,0,1) is empty".into())?;
    let mut exceptions = vec![e(undirected_cycle(4))?, e(undirected_cycle(5))?];
    exceptions.extend(six);
    for g in &exceptions {
        let k = g.regular_degree().ok_or("exception not regular")?;
        ensure(has_nontrivial_cut_of_size(g, k)?, || {
            format!("no nontrivial cut of size {k} on {:?}", g.edges())
        })?;
    }
    let mut others = 0;
    for m in &catalog.members {
        if srd_params(&m.graph).is_none() || exceptions.iter().any(|x| isomorphic(x, &m.graph)) {
            continue;
        }
        let k = m.graph.regular_degree().unwrap_or(0);
        ensure(e(edge_connectivity(&m.graph))? == k, || {
            format!("{}: connectivity != {k}", m.name)
        })?;
        ensure(all_cuts_stars(&m.graph)?, || {
            format!("{}: non-star minimum cut", m.name)
        })?;
        others += 1;
    }
    Ok(format!(
        "3 exceptional SRDs with nontrivial cuts, {others} other SRDs star-only"
    ))
}

fn srd_vertex_cut() -> Check {
    let found = e(find_srd(8, 3, 2, 1, 1))?;
    ensure(!found.is_empty(), || "find_srd(8,3,2,1,1) is empty".into())?;
    for g in &found {
        for u in 0..8 {
            for v in 0..8 {
                let want = usize::from(u == v) + 1;
                ensure(g.two_walks(u, v) == want, || {
                    format!("(A^2)[{u}][{v}] != {want}")
                })?;
            }
        }
        let kappa = e(vertex_connectivity(g))?;
        ensure(kappa == 2, || format!("vertex connectivity {kappa}"))?;
        let mut nontrivial = 0;
        for cut in e(enumerate_min_vertex_cuts(g))? {
            if e(classify_vertex_cut(g, &cut))? == CutClass::NonTrivial {
                nontrivial += 1;
            }
        }
        ensure(nontrivial > 0, || {
            "every minimum vertex cut is a neighbourhood".into()
        })?;
    }
    Ok(format!(
        "{} solution(s), A^2 = I + J, vertex connectivity 2 < 3",
        found.len()
    ))
}

fn gamma_family() -> Check {
    for n in 2..=10 {
        let g = e(gamma_n(n))?;
        ensure(g.regular_degree() == Some(2), || {
            format!("gamma {n} not 2-regular")
        })?;
        ensure(e(is_weakly_distance_regular(&g))?, || {
            format!("gamma {n} not WDRD")
        })?;
        let d = e(g.diameter())?;
        ensure(d == n / 2 + 1, || format!("gamma {n}: diameter {d}"))?;
        ensure(e(edge_connectivity(&g))? == 2, || {
            format!("gamma {n}: connectivity != 2")
        })?;
        ensure(has_nontrivial_cut_of_size(&g, 2)?, || {
            format!("gamma {n}: no nontrivial cut")
        })?;
    }
    Ok("n = 2..10".into())
}

fn characterization(catalog: &Catalog) -> Check {
    let mut graphs: Vec<Digraph> = catalog.members.iter().map(|m| m.graph.clone()).collect();
    for n in 3..=7 {
        graphs.extend(e(regular_digraphs(n, 2))?);
    }
    let mut drds = 0;
    for g in &graphs {
        let drd = e(is_distance_regular(g))?;
        let rhs = e(is_weakly_distance_regular(g))? && is_normal(g);
        ensure(drd == rhs, || format!("discrepancy on {:?}", g.edges()))?;
        drds += usize::from(drd);
    }
    Ok(format!(
        "{} digraphs, {drds} DRDs, 0 discrepancies",
        graphs.len()
    ))
}

fn oracle_equivalence(catalog: &Catalog) -> Check {
    let (mut edge_checked, mut vertex_checked) = (0, 0);
    for m in &catalog.members {
        let g = &m.graph;
        if g.n() <= 14 {
            let (size, oracle) = brute::min_edge_cuts(g);
            let mut ours: Vec<_> = e(enumerate_min_edge_cuts(g))?
                .into_iter()
                .map(|c| c.crossing)
                .collect();
            ours.sort();
            let theirs: Vec<_> = oracle.into_keys().collect();
            ensure(ours == theirs, || {
                format!("{}: edge cut collections differ", m.name)
            })?;
            ensure(e(edge_connectivity(g))? == size, || {
                format!("{}: edge connectivity", m.name)
            })?;
            edge_checked += 1;
        }
        if g.n() <= 12 {
            if let Some((size, oracle)) = brute::min_vertex_cuts(g) {
                let mut ours: Vec<_> = e(enumerate_min_vertex_cuts(g))?
                    .into_iter()
                    .map(|c| c.vertices)
                    .collect();
                ours.sort();
                ensure(ours == oracle, || {
                    format!("{}: vertex cut collections differ", m.name)
                })?;
                ensure(e(vertex_connectivity(g))? == size, || {
                    format!("{}: vertex connectivity", m.name)
                })?;
                vertex_checked += 1;
            }
        }
    }
    Ok(format!(
        "{edge_checked} edge and {vertex_checked} vertex instances"
    ))
}

fn cut_balance(catalog: &Catalog) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut total = 0;
    for m in &catalog.members {
        if m.graph.regular_degree().is_none() {
            continue;
        }
        let n = m.graph.n();
        let edges = m.graph.edges();
        for _ in 0..1000 {
            let side: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
            let forward = edges.iter().filter(|&&(u, v)| side[u] && !side[v]).count();
            let backward = edges.iter().filter(|&&(u, v)| !side[u] && side[v]).count();
            ensure(forward == backward, || {
                format!("{}: {forward} != {backward}", m.name)
            })?;
            total += 1;
        }
    }
    Ok(format!("{total} subsets, 0 imbalances"))
}

fn lift_roundtrip(catalog: &Catalog) -> Check {
    let mut checked = 0;
    for member in &catalog.members {
        let g = &member.graph;
        if !e(is_distance_regular(g))? || e(g.girth())? < 3 || e(drd_type(g))? != DrdType::Short {
            continue;
        }
        let base_lambda = e(drd_numbers(g))?.ok_or("base not DRD")?.lambda();
        for m in 2..=3 {
            let lift = e(damerell_lift(g, m))?;
            let q = e(antipodal_quotient(&lift))?;
            ensure(isomorphic(&q, g), || {
                format!("{}: quotient of {m}-lift differs", member.name)
            })?;
            let lambda = e(drd_numbers(&lift))?.ok_or("lift not DRD")?.lambda();
            ensure(lambda == m * base_lambda, || {
                format!("{}: lambda {lambda} != {m}*{base_lambda}", member.name)
            })?;
            ensure(e(lift.girth())? == e(g.girth())?, || {
                format!("{}: girth changed", member.name)
            })?;
        }
        checked += 1;
    }
    ensure(checked > 0, || "no short-type members".into())?;
    Ok(format!("{checked} short-type members, m = 2, 3"))
}

fn conjecture_search() -> Check {
    let start = Instant::now();
    let first = e(search_conjecture(6, 2, SearchSource::Exhaustive))?;
    let second = e(search_conjecture(6, 2, SearchSource::Exhaustive))?;
    let elapsed = start.elapsed();
    ensure(first.counterexamples.is_empty(), || {
        format!("{} counterexamples", first.counterexamples.len())
    })?;
    ensure(first.report.to_json() == second.report.to_json(), || {
        "reports differ between runs".into()
    })?;
    ensure(elapsed < Duration::from_secs(600), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{} WDRDs, 0 counterexamples, deterministic, {elapsed:.2?}",
        first.report.results.len()
    ))
}

fn mutation_sensitivity() -> Check {
    let (g, _) = e(block_cycle(3, 2))?;
    let n = g.n();
    let mut mutants = 0;
    for (u, v) in g.edges() {
        for w in (0..n).filter(|&w| w != u && w != v && !g.has_edge(u, w)) {
            let edges: Vec<_> = g
                .edges()
                .into_iter()
                .map(|x| if x == (u, v) { (u, w) } else { x })
                .collect();
            let h = e(Digraph::from_edge_list(n, &edges))?;
            let outcome = e(verify_drd_theorem(&h))?;
            ensure(outcome.verdict == Verdict::Fail, || {
                format!("({u},{v})->({u},{w}) passes the theorem check")
            })?;
            let witness = outcome
                .witness
                .ok_or_else(|| format!("({u},{v})->({u},{w}) has no witness"))?;
            ensure(replay(&h, &witness), || {
                format!("({u},{v})->({u},{w}) witness does not replay")
            })?;
            ensure(!replay(&g, &witness), || {
                format!("({u},{v})->({u},{w}) witness also holds on the original")
            })?;
            mutants += 1;
        }
    }
    Ok(format!(
        "{mutants} mutants, all caught with replayable witnesses"
    ))
}

fn main() -> ExitCode {
    let catalog = match default_catalog() {
        Ok(c) => c,
        Err(err) => {
            println!("catalog: FAIL ({err})");
            return ExitCode::FAILURE;
        }
    };
    let criteria: Vec<Criterion> = vec![
        (
            "DRD edge connectivity equals valency",
            Box::new(|| drd_edge_connectivity(&catalog)),
        ),
        (
            "SRD edge connectivity and exceptions",
            Box::new(|| srd_edge_connectivity(&catalog)),
        ),
        ("SRD(8,3,2,1,1) small vertex cut", Box::new(srd_vertex_cut)),
        ("gamma family", Box::new(gamma_family)),
        (
            "DRD iff WDRD and normal",
            Box::new(|| characterization(&catalog)),
        ),
        (
            "cut enumeration matches brute force",
            Box::new(|| oracle_equivalence(&catalog)),
        ),
        (
            "cut balance on random subsets",
            Box::new(|| cut_balance(&catalog)),
        ),
        (
            "lift and quotient round trip",
            Box::new(|| lift_roundtrip(&catalog)),
        ),
        ("exhaustive conjecture search", Box::new(conjecture_search)),
        ("mutation sensitivity", Box::new(mutation_sensitivity)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

mod cli;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use drdlab::connectivity::{
    classify_edge_cut, classify_vertex_cut, edge_connectivity, enumerate_min_edge_cuts,
    enumerate_min_vertex_cuts, vertex_connectivity, CutClass,
};
use drdlab::constructions::{
    block_cycle, damerell_lift, directed_cycle, gamma_n, undirected_cycle,
};
use drdlab::edgelist;
use drdlab::harness::{
    self, Catalog, CatalogSpec, ClaimId, Member, RunOptions, SearchSource, Selection,
};
use drdlab::regularity::{
    drd_type, intersection_numbers, normality_witness, srd_params, stability_witness,
    weakly_distance_regular, IntersectionCheck,
};
use drdlab::{Digraph, GraphError};

use cli::{
    CheckArgs, Cli, Command, CutArgs, Family, GenArgs, Predicate, SearchArgs, Theorem, VerifyArgs,
};

/// Exit statuses: true/holds, false/fails, usage or input error.
const OK: u8 = 0;
const FALSE: u8 = 1;
const ERROR: u8 = 2;

#[derive(Debug)]
struct CliError(String);

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError(e.to_string())
    }
}

type CmdResult = Result<u8, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Check(args) => cmd_check(args),
        Command::Cut(args) => cmd_cut(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Search(args) => cmd_search(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(ERROR)
        }
    }
}

fn need(value: Option<usize>, flag: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError(format!("--{flag} is required for this family")))
}

fn read_graph(path: &Path) -> Result<Digraph, CliError> {
    let text =
        fs::read_to_string(path).map_err(|e| CliError(format!("{}: {e}", path.display())))?;
    edgelist::parse(&text).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => {
            if let Some(parent) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                fs::create_dir_all(parent)?;
            }
            fs::write(p, text).map_err(|e| CliError(format!("{}: {e}", p.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_gen(args: GenArgs) -> CmdResult {
    let (g, comment) = match args.family {
        Family::Dcycle => {
            let n = need(args.n, "n")?;
            (directed_cycle(n)?, format!("directed cycle n={n}"))
        }
        Family::Ucycle => {
            let n = need(args.n, "n")?;
            (undirected_cycle(n)?, format!("undirected cycle n={n}"))
        }
        Family::Blockcycle => {
            let (t, rho) = (need(args.t, "t")?, need(args.rho, "rho")?);
            (
                block_cycle(t, rho)?.0,
                format!("block cycle t={t} rho={rho}"),
            )
        }
        Family::Lift => {
            let (n, m) = (need(args.n, "n")?, need(args.m, "m")?);
            (
                damerell_lift(&directed_cycle(n)?, m)?,
                format!("lift of directed cycle n={n} m={m}"),
            )
        }
        Family::Gamma => {
            let n = need(args.n, "n")?;
            (gamma_n(n)?, format!("gamma n={n}"))
        }
        Family::Srd => return gen_srd(&args),
    };
    let text = edgelist::to_string_with_comment(&g, Some(&comment));
    write_or_print(args.output.as_deref(), &text)?;
    Ok(OK)
}

fn gen_srd(args: &GenArgs) -> CmdResult {
    let p = args
        .params
        .as_deref()
        .filter(|p| p.len() == 5)
        .ok_or_else(|| CliError("--params n,k,t,lambda,mu is required for srd".into()))?;
    let dir = args
        .output
        .as_deref()
        .ok_or_else(|| CliError("-o <dir> is required for srd".into()))?;
    let found = drdlab::srd_search::find_srd(p[0], p[1], p[2], p[3], p[4])?;
    fs::create_dir_all(dir)?;
    let tag = format!("{}-{}-{}-{}-{}", p[0], p[1], p[2], p[3], p[4]);
    let mut index = format!(
        "# strongly regular digraphs ({tag})\nparams {tag}\ncount {}\n",
        found.len()
    );
    for (i, g) in found.iter().enumerate() {
        let file = format!("srd-{tag}-{i}.dg");
        let comment = format!("strongly regular digraph ({tag}) solution {i}");
        fs::write(
            dir.join(&file),
            edgelist::to_string_with_comment(g, Some(&comment)),
        )?;
        let _ = writeln!(index, "file {file}");
    }
    fs::write(dir.join("index.txt"), index)?;
    println!("{} solution(s) written to {}", found.len(), dir.display());
    Ok(OK)
}

fn verdict(holds: bool) -> u8 {
    println!("{holds}");
    if holds {
        OK
    } else {
        FALSE
    }
}

fn cmd_check(args: CheckArgs) -> CmdResult {
    let g = read_graph(&args.path)?;
    Ok(match args.what {
        Predicate::Drd => match intersection_numbers(&g)? {
            IntersectionCheck::Constant(table) => {
                let code = verdict(true);
                println!(
                    "valency {} diameter {} lambda {}",
                    table.valency,
                    table.diameter,
                    table.lambda()
                );
                code
            }
            IntersectionCheck::Violated(w) => {
                let code = verdict(false);
                println!(
                    "witness: pairs ({},{}) and ({},{}) at distance {} differ in a_{{{},1}}^{}: {} vs {}",
                    w.u, w.v, w.reference_u, w.reference_v, w.distance, w.index, w.distance, w.found, w.expected
                );
                code
            }
        },
        Predicate::Wdrd => {
            let check = weakly_distance_regular(&g)?;
            let code = verdict(check.holds());
            if let Some(w) = check.witness {
                println!(
                    "witness: walks of length {} from {} to {} number {}, but {} from {} to {} at the same distance {}",
                    w.length, w.u, w.v, w.found, w.expected, w.reference_u, w.reference_v, w.distance
                );
            }
            code
        }
        Predicate::Srd => match srd_params(&g) {
            Some(p) => {
                let code = verdict(true);
                println!("parameters {}", p.tuple_string());
                code
            }
            None => verdict(false),
        },
        Predicate::Normal => {
            let witness = normality_witness(&g);
            let code = verdict(witness.is_none());
            if let Some((u, v)) = witness {
                println!(
                    "witness: common out-neighbours of {u},{v} = {}, common in-neighbours = {}",
                    g.common_out(u, v),
                    g.common_in(u, v)
                );
            }
            code
        }
        Predicate::Stable => {
            let witness = stability_witness(&g)?;
            let code = verdict(witness.is_none());
            if let Some((x, y)) = witness {
                println!("witness: d({x},{y}) + d({y},{x}) != girth");
            }
            code
        }
        Predicate::Type => {
            let kind = drd_type(&g)?;
            println!("{}", format!("{kind:?}").to_lowercase());
            OK
        }
    })
}

fn class_kind(c: &CutClass) -> &'static str {
    match c {
        CutClass::OutStar { .. } => "OutStar",
        CutClass::InStar { .. } => "InStar",
        CutClass::OutNeighborhood { .. } => "OutNeighborhood",
        CutClass::InNeighborhood { .. } => "InNeighborhood",
        CutClass::NonTrivial => "NonTrivial",
    }
}

fn cmd_cut(args: CutArgs) -> CmdResult {
    let g = read_graph(&args.path)?;
    let list = args.enumerate || args.classify;
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    if args.edge {
        println!("edge-connectivity {}", edge_connectivity(&g)?);
        if list {
            for cut in enumerate_min_edge_cuts(&g)? {
                let class = classify_edge_cut(&g, &cut)?;
                *counts.entry(class_kind(&class)).or_default() += 1;
                println!(
                    "cut {:?} side {:?} {}",
                    cut.crossing,
                    cut.side_a,
                    class.label()
                );
            }
        }
    } else {
        println!("vertex-connectivity {}", vertex_connectivity(&g)?);
        if list {
            for cut in enumerate_min_vertex_cuts(&g)? {
                let class = classify_vertex_cut(&g, &cut)?;
                *counts.entry(class_kind(&class)).or_default() += 1;
                println!("cut {:?} {}", cut.vertices, class.label());
            }
        }
    }
    if args.classify {
        for (kind, count) in counts {
            println!("class {kind} {count}");
        }
    }
    Ok(OK)
}

fn theorem_claim(t: Theorem) -> ClaimId {
    match t {
        Theorem::Drd => ClaimId::DrdEdgeConnectivity,
        Theorem::Srd => ClaimId::SrdEdgeConnectivity,
        Theorem::Gamma => ClaimId::GammaFamily,
        Theorem::VertexCut => ClaimId::SrdVertexCut,
        Theorem::Conjecture => ClaimId::WdrdConjecture,
        Theorem::Balance => ClaimId::CutBalance,
    }
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    let mut members: Vec<Member> = Vec::new();
    let gamma_range = match (args.theorem, args.n) {
        (_, Some((a, b))) => Some((a, b)),
        (Some(Theorem::Gamma), None) if args.paths.is_empty() && !args.default_catalog => {
            Some((2, 10))
        }
        _ => None,
    };
    if let Some((a, b)) = gamma_range {
        if a < 2 || b > 16 {
            return Err(CliError(format!("--n must lie in 2..16, got {a}..{b}")));
        }
        let spec = CatalogSpec {
            gammas: (a..=b).collect(),
            ..CatalogSpec::empty()
        };
        members.extend(harness::build_catalog(&spec)?.members);
    }
    if args.default_catalog {
        members.extend(harness::default_catalog()?.members);
    }
    for p in &args.paths {
        members.push(Member::from_file(p).map_err(|e| CliError(format!("{}: {e}", p.display())))?);
    }
    if members.is_empty() {
        return Err(CliError(
            "no inputs: give paths, --default-catalog, or --n".into(),
        ));
    }
    let selection = match args.theorem {
        Some(t) => Selection::Forced(vec![theorem_claim(t)]),
        None => Selection::Applicable,
    };
    let options = RunOptions {
        timing: args.timing,
        ..RunOptions::with_seed(args.seed)
    };
    let report = harness::run(&Catalog { members }, &selection, &options)?;
    for r in &report.results {
        println!("{} {} {}", r.verdict.as_str(), r.claim.as_str(), r.instance);
    }
    let s = &report.summary;
    println!(
        "summary pass={} fail={} vacuous={} exception-matched={} consistent-with-conjecture={} seed={}",
        s.pass, s.fail, s.vacuous, s.exception_matched, s.consistent_with_conjecture, report.seed
    );
    match &args.report {
        Some(path) => write_or_print(Some(path), &report.to_json())?,
        None => {
            for r in report.failures() {
                println!(
                    "witness {}",
                    serde_json::to_string(&r.witness).expect("witness serializes")
                );
            }
        }
    }
    Ok(if report.has_failures() { FALSE } else { OK })
}

fn cmd_search(args: SearchArgs) -> CmdResult {
    let source = if args.exhaustive {
        if args.max_n > harness::SEARCH_MAX_N || args.max_k > harness::SEARCH_MAX_K {
            return Err(CliError(format!(
                "exhaustive search supports --max-n <= {} and --max-k <= {}",
                harness::SEARCH_MAX_N,
                harness::SEARCH_MAX_K
            )));
        }
        SearchSource::Exhaustive
    } else {
        SearchSource::Catalog
    };
    let run = harness::search_conjecture(args.max_n, args.max_k, source)?;
    for r in &run.report.results {
        println!("{} {} {}", r.verdict.as_str(), r.claim.as_str(), r.instance);
    }
    println!(
        "examined {} wdrd(s), {} counterexample(s)",
        run.report.results.len(),
        run.counterexamples.len()
    );
    if let Some(dir) = &args.out {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("report.json"), run.report.to_json())?;
        for m in &run.counterexamples {
            let comment = format!("counterexample {} sha256 {}", m.name, m.hash);
            fs::write(
                dir.join(format!("{}.dg", m.name)),
                edgelist::to_string_with_comment(&m.graph, Some(&comment)),
            )?;
        }
    }
    Ok(if run.counterexamples.is_empty() {
        OK
    } else {
        FALSE
    })
}

//! Named digraph collections with provenance.

use std::path::Path;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::constructions::{block_cycle, damerell_lift, directed_cycle, gamma_n, undirected_cycle};
use crate::digraph::Digraph;
use crate::edgelist;
use crate::error::{GraphError, Result};
use crate::regularity::{drd_type, is_distance_regular, srd_params, DrdType, SrdParams};
use crate::srd_search::find_srd;

/// Largest member order admitted to a catalog.
pub const MAX_MEMBER_ORDER: usize = 64;

#[derive(Debug, Clone)]
pub struct Member {
    pub name: String,
    /// Generator name, or `"file"`.
    pub family: String,
    pub params: Value,
    /// Path the member was read from.
    pub file: Option<String>,
    /// SHA-256 of the edge-list text (of the raw file for file members).
    pub hash: String,
    pub graph: Digraph,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Member {
    pub(crate) fn generated(name: String, family: &str, params: Value, graph: Digraph) -> Member {
        let hash = sha256_hex(edgelist::to_string(&graph).as_bytes());
        Member {
            name,
            family: family.into(),
            params,
            file: None,
            hash,
            graph,
        }
    }

    /// Reads an edge-list file. IO failures and parse failures are both
    /// reported as [`GraphError::Parse`] with line 0 for IO.
    pub fn from_file(path: &Path) -> Result<Member> {
        let text = std::fs::read_to_string(path).map_err(|e| GraphError::Parse {
            line: 0,
            msg: format!("{}: {e}", path.display()),
        })?;
        let graph = edgelist::parse(&text)?;
        let display = path.display().to_string();
        Ok(Member {
            name: display.clone(),
            family: "file".into(),
            params: json!({ "file": display }),
            file: Some(display),
            hash: sha256_hex(text.as_bytes()),
            graph,
        })
    }

    /// `n` of a `gamma` member.
    pub fn gamma_order(&self) -> Option<usize> {
        (self.family == "gamma")
            .then(|| self.params["n"].as_u64().map(|n| n as usize))
            .flatten()
    }
}

/// Parameter ranges per family.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CatalogSpec {
    pub directed_cycles: Vec<usize>,
    pub undirected_cycles: Vec<usize>,
    /// `(t, ρ)`
    pub block_cycles: Vec<(usize, usize)>,
    /// `(n, m)`: lift of the directed `n`-cycle.
    pub cycle_lifts: Vec<(usize, usize)>,
    pub gammas: Vec<usize>,
    /// `(n, k, t, λ, μ)`
    pub srds: Vec<[usize; 5]>,
}

impl CatalogSpec {
    pub fn empty() -> CatalogSpec {
        CatalogSpec::default()
    }

    pub fn default_spec() -> CatalogSpec {
        CatalogSpec {
            directed_cycles: (2..=12).collect(),
            undirected_cycles: (3..=12).collect(),
            block_cycles: (2..=6)
                .flat_map(|t| (1..=4).map(move |rho| (t, rho)))
                .collect(),
            cycle_lifts: (3..=6).flat_map(|n| (2..=3).map(move |m| (n, m))).collect(),
            gammas: (2..=10).collect(),
            srds: vec![
                [6, 2, 1, 0, 1],
                [8, 3, 2, 1, 1],
                [4, 2, 2, 0, 2],
                [5, 2, 2, 0, 1],
            ],
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Catalog {
    pub members: Vec<Member>,
}

fn admission(name: &str, ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(GraphError::Consistency(format!(
            "{name}: generator postcondition failed: {what}"
        )))
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_MEMBER_ORDER {
        return Err(GraphError::InvalidParams(format!(
            "member order {n} exceeds {MAX_MEMBER_ORDER}"
        )));
    }
    Ok(())
}

/// Generates every member of `spec`; each must satisfy its generator's
/// postconditions before it is admitted.
pub fn build_catalog(spec: &CatalogSpec) -> Result<Catalog> {
    let mut members = Vec::new();
    for &n in &spec.directed_cycles {
        check_order(n)?;
        let g = directed_cycle(n)?;
        let name = format!("dcycle-{n}");
        admission(
            &name,
            g.regular_degree() == Some(1) && is_distance_regular(&g)?,
            "1-regular DRD",
        )?;
        members.push(Member::generated(name, "dcycle", json!({ "n": n }), g));
    }
    for &n in &spec.undirected_cycles {
        check_order(n)?;
        let g = undirected_cycle(n)?;
        let name = format!("ucycle-{n}");
        admission(
            &name,
            g.is_undirected() && is_distance_regular(&g)?,
            "undirected DRD",
        )?;
        members.push(Member::generated(name, "ucycle", json!({ "n": n }), g));
    }
    for &(t, rho) in &spec.block_cycles {
        check_order(t.saturating_mul(rho))?;
        let (g, _) = block_cycle(t, rho)?;
        let name = format!("blockcycle-{t}x{rho}");
        admission(
            &name,
            g.regular_degree() == Some(rho) && is_distance_regular(&g)?,
            "rho-regular DRD",
        )?;
        members.push(Member::generated(
            name,
            "blockcycle",
            json!({ "t": t, "rho": rho }),
            g,
        ));
    }
    for &(n, m) in &spec.cycle_lifts {
        check_order(n.saturating_mul(m))?;
        let base = directed_cycle(n)?;
        let g = damerell_lift(&base, m)?;
        let name = format!("lift-dcycle{n}-m{m}");
        let long = n >= 3 && drd_type(&g)? == DrdType::Long;
        admission(&name, long, "long-type DRD")?;
        members.push(Member::generated(
            name,
            "lift",
            json!({ "base": "dcycle", "n": n, "m": m }),
            g,
        ));
    }
    for &n in &spec.gammas {
        check_order(2 * n)?;
        let g = gamma_n(n)?;
        let name = format!("gamma-{n}");
        let ok = g.regular_degree() == Some(2)
            && g.is_strongly_connected()
            && g.girth()? == 2
            && (n < 3 || !g.is_undirected());
        admission(&name, ok, "2-regular, strongly connected, girth 2")?;
        members.push(Member::generated(name, "gamma", json!({ "n": n }), g));
    }
    for p in &spec.srds {
        check_order(p[0])?;
        let want = SrdParams::new(p[0], p[1], p[2], p[3], p[4]);
        for (i, g) in find_srd(p[0], p[1], p[2], p[3], p[4])?
            .into_iter()
            .enumerate()
        {
            let name = format!("srd-{}-{}-{}-{}-{}-{i}", p[0], p[1], p[2], p[3], p[4]);
            let ok =
                srd_params(&g).is_some_and(|q| q == want || q == SrdParams { mu: None, ..want });
            admission(&name, ok, "requested SRD parameters")?;
            members.push(Member::generated(
                name,
                "srd",
                json!({ "n": p[0], "k": p[1], "t": p[2], "lambda": p[3], "mu": p[4], "index": i }),
                g,
            ));
        }
    }
    Ok(Catalog { members })
}

pub fn default_catalog() -> Result<Catalog> {
    build_catalog(&CatalogSpec::default_spec())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_catalog_size() {
        let c = default_catalog().unwrap();
        assert!(c.members.len() >= 40);
        let mut names: Vec<&str> = c.members.iter().map(|m| m.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), c.members.len());
    }

    #[test]
    fn empty_and_invalid_specs() {
        assert!(build_catalog(&CatalogSpec::empty())
            .unwrap()
            .members
            .is_empty());
        let bad = CatalogSpec {
            block_cycles: vec![(1, 2)],
            ..CatalogSpec::empty()
        };
        assert!(matches!(
            build_catalog(&bad),
            Err(GraphError::InvalidParams(_))
        ));
        let huge = CatalogSpec {
            directed_cycles: vec![65],
            ..CatalogSpec::empty()
        };
        assert!(build_catalog(&huge).is_err());
    }
}

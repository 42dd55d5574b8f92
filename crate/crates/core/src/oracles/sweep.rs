//! Property sweeps over enumerated graphs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::constructions::{
    build_separated_graph, expand, replicate, verify_expansion, verify_replication,
};
use crate::error::{GraphError, Result};
use crate::graph::{Graph, Vertex};
use crate::invariants::{
    clique_number, find_imperfect_subgraph, graph_parameters, is_clique, is_perfect, is_stable,
    stability_number,
};
use crate::isomorphism::{find_isomorphism, image, verify_iso_witness};
use crate::named;
use crate::pipeline::{verify_certificate, wpgt_certificate, PipelineError};

use super::berge::{is_berge, BERGE_MAX_N};
use super::brute::{oracle_is_perfect, oracle_parameters, ORACLE_MAX_N};
use super::enumerate::{enumerate_graphs, EnumerationMode};
use super::limits;

/// Default cap on `n` for the expansion sweep.
pub const EXPANSION_MAX_N: usize = 4;
/// Multiplicities tried by the expansion sweep.
pub const EXPANSION_MULTIPLICITIES: [usize; 3] = [1, 2, 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    /// Perfect iff the complement is perfect.
    Wpgt,
    /// Replicating any vertex of a perfect graph keeps it perfect.
    Replication,
    /// Expanding a perfect graph keeps it perfect.
    Expansion,
    /// Perfect iff no odd hole and no odd antihole.
    Berge,
    /// The pipeline certifies perfect graphs and reports failures otherwise.
    Certificate,
    /// Parameters and perfection survive relabeling.
    Iso,
    /// Exact parameters agree with the brute-force oracle.
    Oracle,
    /// α(G) = ω(complement).
    Duality,
    /// Invariants of the separated graph.
    Separation,
}

impl Property {
    pub const ALL: [Property; 9] = [
        Property::Wpgt,
        Property::Replication,
        Property::Expansion,
        Property::Berge,
        Property::Certificate,
        Property::Iso,
        Property::Oracle,
        Property::Duality,
        Property::Separation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Wpgt => "wpgt",
            Property::Replication => "replication",
            Property::Expansion => "expansion",
            Property::Berge => "berge",
            Property::Certificate => "certificate",
            Property::Iso => "iso",
            Property::Oracle => "oracle",
            Property::Duality => "duality",
            Property::Separation => "separation",
        }
    }

    /// Largest `n` the property accepts.
    pub fn max_n(self) -> usize {
        match self {
            Property::Expansion => limits::cap(EXPANSION_MAX_N),
            Property::Berge => limits::cap(BERGE_MAX_N),
            Property::Oracle | Property::Certificate => limits::cap(ORACLE_MAX_N),
            _ => 63,
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown property `{s}`"))
    }
}

fn fail(ok: bool, evidence: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(evidence)
}

fn check_wpgt(g: &Graph) -> Option<String> {
    let p = is_perfect(g);
    let q = is_perfect(&g.complement());
    fail(p == q, || format!("perfect={p} but complement perfect={q}"))
}

fn check_replication(g: &Graph) -> Option<String> {
    if !is_perfect(g) {
        return None;
    }
    for a in g.nodes().iter() {
        let (h, w) = replicate(g, a).expect("a is a vertex");
        if !verify_replication(g, &w, &h) {
            return Some(format!("replicating {a} fails the replication check"));
        }
        if let Some(s) = find_imperfect_subgraph(&h) {
            return Some(format!(
                "replicating {a} gives an imperfect graph, witness {s}"
            ));
        }
    }
    None
}

fn multiplicity_maps(g: &Graph) -> impl Iterator<Item = BTreeMap<Vertex, usize>> + '_ {
    let n = g.order();
    let k = EXPANSION_MULTIPLICITIES.len();
    (0..k.pow(n as u32)).map(move |mut code| {
        g.nodes()
            .iter()
            .map(|v| {
                let m = EXPANSION_MULTIPLICITIES[code % k];
                code /= k;
                (v, m)
            })
            .collect()
    })
}

fn check_expansion(g: &Graph) -> Option<String> {
    if !is_perfect(g) {
        return None;
    }
    for mult in multiplicity_maps(g) {
        let (h, w) = expand(g, &mult).expect("multiplicities are total and positive");
        if verify_expansion(g, &h, &w.back) != Ok(true) {
            return Some(format!("expansion by {mult:?} fails the expansion check"));
        }
        if let Some(s) = find_imperfect_subgraph(&h) {
            return Some(format!("expansion by {mult:?} is imperfect, witness {s}"));
        }
    }
    None
}

fn check_berge(g: &Graph) -> Result<Option<String>> {
    let p = is_perfect(g);
    let b = is_berge(g)?;
    Ok(fail(p == b, || format!("perfect={p} but berge={b}")))
}

fn check_certificate(g: &Graph) -> Result<Option<String>> {
    let perfect = is_perfect(g);
    match wpgt_certificate(g) {
        Ok(cert) => {
            if perfect {
                let alpha = stability_number(g);
                return Ok(fail(
                    cert.clique_cover.len() == alpha && verify_certificate(g, &cert),
                    || {
                        format!(
                            "certificate with {} parts rejected (alpha={alpha})",
                            cert.clique_cover.len()
                        )
                    },
                ));
            }
            // the pipeline went through; imperfection must still be exhibited
            let Some(s) = find_imperfect_subgraph(g) else {
                return Ok(Some("imperfect graph without an imperfect subgraph".into()));
            };
            let confirmed = !oracle_is_perfect(&g.induced_subgraph(&s)?)?;
            Ok(fail(confirmed, || format!("oracle finds {s} perfect")))
        }
        Err(PipelineError::NotPerfect(f)) => {
            let sub = g.induced_subgraph(f.subgraph())?;
            let confirmed = !perfect && f.recheck(g) && !oracle_is_perfect(&sub)?;
            Ok(fail(confirmed, || format!("unconfirmed failure: {f}")))
        }
        Err(PipelineError::Graph(e)) => Ok(Some(format!("pipeline error: {e}"))),
    }
}

fn check_iso(g: &Graph) -> Option<String> {
    // reverse the labels and move them out of the original range
    let top = g.nodes().last().unwrap_or(0);
    let relabel: BTreeMap<Vertex, Vertex> = g.nodes().iter().map(|v| (v, 100 + top - v)).collect();
    let h = named::relabeled(g, &relabel);
    let Some(w) = find_isomorphism(g, &h) else {
        return Some("no isomorphism to a relabeled copy".into());
    };
    if !verify_iso_witness(&w, g, &h) {
        return Some("isomorphism witness rejected".into());
    }
    let pg = graph_parameters(g);
    let ph = graph_parameters(&h);
    if (pg.alpha, pg.omega, pg.chi) != (ph.alpha, ph.omega, ph.chi) {
        return Some(format!(
            "parameters ({}, {}, {}) vs ({}, {}, {})",
            pg.alpha, pg.omega, pg.chi, ph.alpha, ph.omega, ph.chi
        ));
    }
    let moved = image(&w.forward, &pg.max_clique_witness);
    if moved.len() != pg.omega || !is_clique(&h, &moved) {
        return Some("maximum clique not transported".into());
    }
    fail(is_perfect(g) == is_perfect(&h), || {
        "perfection not transported".into()
    })
}

fn check_oracle(g: &Graph) -> Result<Option<String>> {
    let fast = graph_parameters(g);
    let slow = oracle_parameters(g)?;
    let a = (fast.alpha, fast.omega, fast.chi);
    let b = (slow.alpha, slow.omega, slow.chi);
    Ok(fail(a == b && fast.witnesses_valid(g), || {
        format!("(alpha, omega, chi) = {a:?}, oracle {b:?}")
    }))
}

fn check_duality(g: &Graph) -> Option<String> {
    let alpha = stability_number(g);
    let omega = clique_number(&g.complement());
    fail(alpha == omega, || {
        format!("alpha={alpha} but complement omega={omega}")
    })
}

fn check_separation(g: &Graph) -> Result<Option<String>> {
    if g.is_empty() {
        return Ok(None);
    }
    let s = build_separated_graph(g)?;
    let gp = &s.gs_prime;
    if image(&s.back, gp.nodes()) != *s.gs.nodes() {
        return Ok(Some("back does not map onto Gs".into()));
    }
    let vs = gp.nodes().as_slice();
    for (i, &x) in vs.iter().enumerate() {
        for &y in &vs[i + 1..] {
            let (ox, oy) = (s.back[&x], s.back[&y]);
            if ox == oy && !gp.has_edge(x, y) {
                return Ok(Some(format!("copies {x}, {y} of {ox} not adjacent")));
            }
            if ox != oy && gp.has_edge(x, y) != s.gs.has_edge(ox, oy) {
                return Ok(Some(format!("edge {x}-{y} disagrees with {ox}-{oy}")));
            }
        }
    }
    if verify_expansion(&s.gs, gp, &s.back) != Ok(true) {
        return Ok(Some("Gs' is not an expansion of Gs".into()));
    }
    let parts = s.disjoint_cover.parts();
    let total: usize = parts.iter().map(|p| p.len()).sum();
    if total != gp.order() || s.disjoint_cover.union_over() != *gp.nodes() {
        return Ok(Some("disjoint cover is not a partition of Gs'".into()));
    }
    let alpha_prime = stability_number(gp);
    for (i, part) in parts.iter().enumerate() {
        if !is_stable(gp, part) || part.len() != alpha_prime {
            return Ok(Some(format!("part {i} is not a maximum stable set of Gs'")));
        }
        let img = image(&s.back, part);
        if img.len() != part.len() || img != s.cover.parts()[i] || !is_stable(&s.gs, &img) {
            return Ok(Some(format!("back is not faithful on part {i}")));
        }
    }
    if is_perfect(g) {
        let p = graph_parameters(gp);
        if p.omega != parts.len() || p.chi != parts.len() {
            return Ok(Some(format!(
                "perfect input but Gs' has omega={} chi={} with {} parts",
                p.omega,
                p.chi,
                parts.len()
            )));
        }
    }
    Ok(None)
}

/// Evidence of failure, or `None` when `g` satisfies the property.
pub fn check_property(prop: Property, g: &Graph) -> Result<Option<String>> {
    if g.order() > prop.max_n() {
        return Err(GraphError::TooLarge {
            n: g.order(),
            cap: prop.max_n(),
        });
    }
    match prop {
        Property::Wpgt => Ok(check_wpgt(g)),
        Property::Replication => Ok(check_replication(g)),
        Property::Expansion => Ok(check_expansion(g)),
        Property::Berge => check_berge(g),
        Property::Certificate => check_certificate(g),
        Property::Iso => Ok(check_iso(g)),
        Property::Oracle => check_oracle(g),
        Property::Duality => Ok(check_duality(g)),
        Property::Separation => check_separation(g),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub graph: Graph,
    pub property: Property,
    pub evidence: String,
}

impl Counterexample {
    /// Runs the property again; true when it still fails.
    pub fn recheck(&self) -> bool {
        !matches!(check_property(self.property, &self.graph), Ok(None))
    }
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub graphs_checked: usize,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn summary(&self) -> String {
        format!(
            "{} graphs, {} counterexamples",
            self.graphs_checked,
            self.counterexamples.len()
        )
    }
}

/// Summary line, then one tab-separated line per counterexample. Elapsed
/// time is left out so equal sweeps print equal reports.
impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary())?;
        for c in &self.counterexamples {
            writeln!(f, "{}\t{}\t{}", c.property, c.graph, c.evidence)?;
        }
        Ok(())
    }
}

/// Checks every selected property on every graph of the stream. Graphs are
/// processed in parallel; counterexamples come back in stream order.
pub fn sweep(properties: &[Property], n: usize, mode: EnumerationMode) -> Result<SweepReport> {
    let start = Instant::now();
    if let Some(p) = properties.iter().find(|p| n > p.max_n()) {
        return Err(GraphError::TooLarge { n, cap: p.max_n() });
    }
    let graphs: Vec<Graph> = enumerate_graphs(n, mode)?.collect();
    let found: Vec<Vec<Counterexample>> = graphs
        .par_iter()
        .map(|g| {
            properties
                .iter()
                .filter_map(|&property| {
                    let evidence = match check_property(property, g) {
                        Ok(e) => e?,
                        Err(e) => e.to_string(),
                    };
                    Some(Counterexample {
                        graph: g.clone(),
                        property,
                        evidence,
                    })
                })
                .collect()
        })
        .collect();
    Ok(SweepReport {
        graphs_checked: graphs.len(),
        counterexamples: found.into_iter().flatten().collect(),
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::is_nice;

    #[test]
    fn names_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>(), Ok(p));
        }
        assert!("nope".parse::<Property>().is_err());
    }

    #[test]
    fn small_sweeps_are_clean() {
        for p in Property::ALL {
            let report = sweep(&[p], 4, EnumerationMode::Exhaustive).unwrap();
            assert_eq!(report.graphs_checked, 64);
            assert!(report.counterexamples.is_empty(), "{p}: {report}");
        }
    }

    #[test]
    fn known_graphs_pass() {
        for g in [
            named::cycle(5),
            named::house(),
            named::cycle(6).complement(),
        ] {
            for p in Property::ALL {
                if p == Property::Expansion && g.order() > EXPANSION_MAX_N {
                    continue;
                }
                assert_eq!(check_property(p, &g).unwrap(), None, "{p} on {g}");
            }
        }
    }

    #[test]
    fn counterexamples_recheck() {
        // an empty evidence slot is only produced by a failing check
        let bogus = Counterexample {
            graph: named::cycle(5),
            property: Property::Duality,
            evidence: String::new(),
        };
        assert!(!bogus.recheck());
        let over = Counterexample {
            graph: named::edgeless(EXPANSION_MAX_N as u32 + 1),
            property: Property::Expansion,
            evidence: String::new(),
        };
        assert!(over.recheck());
    }

    #[test]
    fn nice_but_imperfect_graphs_exist() {
        let found = enumerate_graphs(6, EnumerationMode::Exhaustive)
            .unwrap()
            .any(|g| is_nice(&g) && !is_perfect(&g));
        assert!(found);
    }

    #[test]
    fn report_format() {
        let r = sweep(&[Property::Wpgt], 3, EnumerationMode::Exhaustive).unwrap();
        assert_eq!(r.to_string(), "8 graphs, 0 counterexamples\n");
        assert!(sweep(&[Property::Expansion], 5, EnumerationMode::Exhaustive).is_err());
    }
}

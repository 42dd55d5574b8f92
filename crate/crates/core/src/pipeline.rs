//! Certifying pipeline: a clique meeting every maximum stable set, a clique
//! cover of size α(G) built by peeling such cliques off, and the resulting
//! certificate that the complement is nice.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::build_separated_graph;
use crate::error::GraphError;
use crate::graph::{Cover, Graph, VertexSet};
use crate::invariants::{
    check_cover, clique_number, cover_to_coloring, graph_parameters, is_valid_coloring,
    maximum_clique, stability_number, Coloring, CoverKind,
};
use crate::isomorphism::image;

/// Clique cover of `G` with α(G) parts plus a coloring of the complement
/// with the same number of colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WpgtCertificate {
    pub alpha: usize,
    pub clique_cover: Cover,
    pub complement_coloring: Coloring,
}

/// Evidence that the input is not perfect. Each variant names the induced
/// subgraph on which the failure can be reproduced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PerfectnessFailure {
    /// The separated graph of the subgraph has no clique as large as the
    /// number of its maximum stable sets.
    CliqueGap {
        subgraph: VertexSet,
        clique_size: usize,
        cover_size: usize,
    },
    /// The subgraph has χ > ω.
    NotNice {
        subgraph: VertexSet,
        omega: usize,
        chi: usize,
    },
}

impl PerfectnessFailure {
    pub fn subgraph(&self) -> &VertexSet {
        match self {
            PerfectnessFailure::CliqueGap { subgraph, .. } => subgraph,
            PerfectnessFailure::NotNice { subgraph, .. } => subgraph,
        }
    }

    /// Recomputes the failure on `g` from scratch.
    pub fn recheck(&self, g: &Graph) -> bool {
        let Ok(sub) = g.induced_subgraph(self.subgraph()) else {
            return false;
        };
        match self {
            PerfectnessFailure::CliqueGap { .. } => match build_separated_graph(&sub) {
                Ok(s) => clique_number(&s.gs_prime) < s.disjoint_cover.len(),
                Err(_) => false,
            },
            PerfectnessFailure::NotNice { .. } => {
                let p = graph_parameters(&sub);
                p.chi > p.omega
            }
        }
    }
}

impl fmt::Display for PerfectnessFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PerfectnessFailure::CliqueGap {
                subgraph,
                clique_size,
                cover_size,
            } => write!(
                f,
                "not perfect: on {subgraph} the separated graph has clique number {clique_size} < {cover_size} maximum stable sets"
            ),
            PerfectnessFailure::NotNice {
                subgraph,
                omega,
                chi,
            } => write!(f, "not perfect: subgraph {subgraph} has chi={chi} > omega={omega}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0}")]
    NotPerfect(PerfectnessFailure),
}

/// A clique of `g` meeting every maximum stable set of `g`.
///
/// Takes the lexicographically least maximum clique of the separated graph
/// and projects it back. The projection meets every maximum stable set
/// exactly when that clique is as large as the disjoint cover; otherwise
/// `g` is not perfect and the gap is returned as evidence.
pub fn intersecting_clique(g: &Graph) -> Result<VertexSet, PipelineError> {
    let sep = build_separated_graph(g)?;
    let clique = maximum_clique(&sep.gs_prime);
    if clique.len() < sep.disjoint_cover.len() {
        return Err(PipelineError::NotPerfect(PerfectnessFailure::CliqueGap {
            subgraph: g.nodes().clone(),
            clique_size: clique.len(),
            cover_size: sep.disjoint_cover.len(),
        }));
    }
    Ok(image(&sep.back, &clique))
}

/// Clique cover with exactly α(G) parts: peel off an intersecting clique,
/// which lowers α by one, and repeat on what is left.
pub fn clique_cover_alpha(g: &Graph) -> Result<Cover, PipelineError> {
    let mut cover = Cover::new();
    let mut rest = g.clone();
    while !rest.is_empty() {
        let k = intersecting_clique(&rest)?;
        let remaining = rest.nodes().difference(&k);
        cover.push(k);
        rest = rest.induced_subgraph(&remaining)?;
    }
    Ok(cover)
}

/// Keeps each vertex only in the first part that contains it and drops
/// parts left empty.
pub fn disjointify(cover: &Cover) -> Cover {
    let mut seen = VertexSet::new();
    let mut out = Cover::new();
    for part in cover {
        let fresh = part.difference(&seen);
        seen = seen.union(&fresh);
        if !fresh.is_empty() {
            out.push(fresh);
        }
    }
    out
}

/// Clique cover of `g` of size α(G), read as a stable cover of the
/// complement and turned into a coloring with α(G) colors.
pub fn wpgt_certificate(g: &Graph) -> Result<WpgtCertificate, PipelineError> {
    let clique_cover = clique_cover_alpha(g)?;
    let complement = g.complement();
    let complement_coloring = cover_to_coloring(&complement, &disjointify(&clique_cover))?;
    Ok(WpgtCertificate {
        alpha: clique_cover.len(),
        clique_cover,
        complement_coloring,
    })
}

/// Re-checks a certificate against `g` from scratch.
pub fn verify_certificate(g: &Graph, cert: &WpgtCertificate) -> bool {
    let complement = g.complement();
    let alpha = stability_number(g);
    check_cover(g, &cert.clique_cover, CoverKind::Clique)
        && cert.clique_cover.len() == cert.alpha
        && cert.alpha == alpha
        && cert.complement_coloring.domain() == *g.nodes()
        && is_valid_coloring(&complement, &cert.complement_coloring)
        && cert.complement_coloring.colors_used(&complement).len() == cert.alpha
        && clique_number(&complement) == cert.alpha
}

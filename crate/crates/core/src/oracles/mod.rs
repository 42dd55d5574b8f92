//! Brute-force oracles and sweep harnesses.
//!
//! The oracles share nothing with the invariants module beyond the graph
//! types, so agreement between the two is meaningful.

pub mod berge;
pub mod brute;
pub mod enumerate;
pub mod sweep;

pub use berge::{find_odd_hole_or_antihole, is_berge, HoleKind, OddHole};
pub use brute::{oracle_is_perfect, oracle_not_nice, oracle_parameters};
pub use enumerate::{enumerate_graphs, graph_from_mask, EnumerationMode};
pub use sweep::{check_property, sweep, Counterexample, Property, SweepReport};

pub mod limits {
    /// Environment variable that overrides every enumerative size cap.
    pub const ENV_VAR: &str = "PGL_MAX_N";

    /// `default`, unless `PGL_MAX_N` holds a number.
    pub fn cap(default: usize) -> usize {
        std::env::var(ENV_VAR)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(default)
    }
}

//! Shared fixtures for the criterion benchmarks.

use bruhat_core::{DynkinDiagram, Subset, WeylGroup};

pub fn group(name: &str) -> WeylGroup {
    WeylGroup::new(DynkinDiagram::new(name.parse().expect("valid type")))
}

pub fn subset(nodes: &[usize]) -> Subset {
    Subset::from_nodes(nodes.iter().copied())
}

/// Instances that exercise the enumeration paths at different scales.
pub fn quotient_instances() -> Vec<(&'static str, Subset)> {
    vec![
        ("A5", Subset::empty()),
        ("D5", Subset::empty()),
        ("E6", subset(&[1, 2, 3, 4, 5])),
        ("E6", subset(&[6])),
    ]
}

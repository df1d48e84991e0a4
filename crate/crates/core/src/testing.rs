//! Hand-built graphs shared by the unit tests.

use crate::graph::{Edge, Graph};

/// Unit tree of eleven vertices on which one-step greedy interdiction of
/// the three leaves nearest the median is suboptimal.
pub fn fig5() -> Graph {
    Graph::from_unit_edges(
        11,
        &[
            (1, 2),
            (2, 4),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 9),
            (9, 8),
            (7, 11),
            (11, 10),
        ],
    )
    .unwrap()
}

/// Seven-vertex tree with long leaf edges; the leaf rule fails here.
pub fn fig7() -> Graph {
    Graph::new(
        7,
        vec![
            Edge::new(1, 3, 10, 1),
            Edge::new(2, 3, 10, 1),
            Edge::new(3, 4, 1, 1),
            Edge::new(4, 5, 1, 1),
            Edge::new(5, 6, 10, 1),
            Edge::new(5, 7, 10, 1),
        ],
    )
    .unwrap()
}

/// Unit star with center 1.
pub fn star(leaves: usize) -> Graph {
    let pairs: Vec<_> = (2..=leaves + 1).map(|l| (1, l)).collect();
    Graph::from_unit_edges(leaves + 1, &pairs).unwrap()
}

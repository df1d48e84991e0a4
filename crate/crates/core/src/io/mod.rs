//! Text instance format, result serialization, generators and fixtures.
//!
//! The instance format is whitespace-separated base-10 integers with `#`
//! comments:
//!
//! ```text
//! n m
//! p B
//! u v length cost    (m lines)
//! ```

pub mod fixtures;
pub mod format;
pub mod generate;

pub use fixtures::{
    evaluate_claim, fixture, parse_edge_list, Claim, ClaimKind, ClaimOutcome, Fixture, FIXTURES,
};
pub use format::{
    parse, serialize, serialize_evaluation, serialize_result, serialize_with_comments,
};
pub use generate::{
    generate, generate_text, prufer_decode, random_partition, random_unit_tree, Generated,
    GeneratorKind, GeneratorSpec,
};

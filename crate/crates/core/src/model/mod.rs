//! Combinatorial representations of annular matchings and their parts.

mod diagram;
mod dyck;
mod matching;
mod necklace;
mod rotation;

pub use diagram::{
    cyclic_bracket, endpoints, matching_from_leftset, Chord, ChordKind, Endpoint, EndpointDiagram,
    EndpointKind,
};
pub use dyck::{dyck_defect, DyckDefect, DyckWord, GapCell, Step};
pub use matching::{AnnularMatching, Side, Violation, CODE_VERSION};
pub use necklace::{Bead, Necklace};
pub use rotation::{canonical_rotation, is_least_rotation, least_rotation_offset, rotate};

/// Structured validity verdict for a matching; empty when valid.
pub fn validate(matching: &AnnularMatching) -> Vec<Violation> {
    matching.validate()
}

//! Constructive correspondences between annular matchings and other
//! combinatorial families.

mod graph;

pub use graph::{from_graph, from_tree, to_graph, to_tree, Marker, PlanarGraph};

use crate::error::{Error, Result};
use crate::model::{
    endpoints, matching_from_leftset, AnnularMatching, Bead, DyckWord, EndpointKind, GapCell, Necklace,
};

/// Necklace of a maximal cross-cut matching (no inner half-circles).
///
/// Outer left endpoints become white beads; right endpoints and the outer
/// ends of cross-cuts become black beads.
pub fn to_necklace(matching: &AnnularMatching) -> Result<Necklace> {
    if matching.inner_half_circles() != 0 {
        return Err(Error::WrongClass("necklace map needs no inner half-circles".into()));
    }
    let beads = endpoints(matching)
        .outer
        .into_iter()
        .map(|kind| match kind {
            EndpointKind::LeftHalfCircle => Bead::White,
            EndpointKind::RightHalfCircle | EndpointKind::Crosscut => Bead::Black,
        })
        .collect();
    Ok(Necklace::new(beads))
}

/// Inverse of [`to_necklace`]: each white bead takes the first free black
/// bead counter-clockwise, and the leftover black beads become cross-cuts.
pub fn from_necklace(necklace: &Necklace) -> Result<AnnularMatching> {
    let whites: Vec<usize> = necklace
        .beads()
        .iter()
        .enumerate()
        .filter(|(_, &b)| b == Bead::White)
        .map(|(i, _)| i)
        .collect();
    let blacks = necklace.len() - whites.len();
    if whites.len() > blacks {
        return Err(Error::Domain(format!(
            "{} white beads cannot all find a black partner among {blacks}",
            whites.len()
        )));
    }
    matching_from_leftset(necklace.len(), &whites, blacks - whites.len(), &[], 0)
}

/// Linear matching obtained by cutting the outer circle at the single cross-cut.
pub fn to_linear(matching: &AnnularMatching) -> Result<DyckWord> {
    match matching {
        AnnularMatching::Crosscut { cells } if cells.len() == 1 && cells[0].inner.is_empty() => {
            Ok(cells[0].outer.clone())
        }
        _ => Err(Error::WrongClass("linear map needs one cross-cut and no inner half-circles".into())),
    }
}

pub fn from_linear(word: &DyckWord) -> AnnularMatching {
    AnnularMatching::Crosscut {
        cells: vec![GapCell::new(word.clone(), DyckWord::empty())],
    }
}

/// Exchange the two boundaries.
pub fn reflect(matching: &AnnularMatching) -> AnnularMatching {
    match matching {
        AnnularMatching::Crosscut { cells } => {
            AnnularMatching::from_cells(cells.iter().map(GapCell::swapped).collect()).expect("nonempty")
        }
        AnnularMatching::Free { outer, inner } => AnnularMatching::Free {
            outer: inner.clone(),
            inner: outer.clone(),
        },
    }
}

/// `(matching without inner half-circles, matching without outer half-circles)`.
pub fn split(matching: &AnnularMatching) -> (AnnularMatching, AnnularMatching) {
    match matching {
        AnnularMatching::Crosscut { cells } => {
            let keep = |outer: bool| {
                let cells = cells
                    .iter()
                    .map(|c| {
                        if outer {
                            GapCell::new(c.outer.clone(), DyckWord::empty())
                        } else {
                            GapCell::new(DyckWord::empty(), c.inner.clone())
                        }
                    })
                    .collect();
                AnnularMatching::from_cells(cells).expect("nonempty")
            };
            (keep(true), keep(false))
        }
        AnnularMatching::Free { outer, inner } => (
            AnnularMatching::Free {
                outer: outer.clone(),
                inner: Necklace::default(),
            },
            AnnularMatching::Free {
                outer: Necklace::default(),
                inner: inner.clone(),
            },
        ),
    }
}

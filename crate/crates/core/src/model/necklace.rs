//! Binary necklaces kept in least-rotation form.

use std::fmt;

use super::rotation::{canonical_rotation, is_least_rotation};

/// Bead colour. `Black < White` fixes the canonical rotation.
///
/// Zero-cross-cut matchings reuse the same two-letter alphabet with
/// `Black` read as `L` (a half-circle's counter-clockwise endpoint) and
/// `White` as `R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bead {
    Black,
    White,
}

impl Bead {
    pub fn bw_char(self) -> char {
        match self {
            Bead::Black => 'B',
            Bead::White => 'W',
        }
    }

    pub fn lr_char(self) -> char {
        match self {
            Bead::Black => 'L',
            Bead::White => 'R',
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Necklace {
    beads: Vec<Bead>,
}

impl Necklace {
    /// Canonicalizes `beads`; the empty necklace is allowed.
    pub fn new(beads: Vec<Bead>) -> Self {
        if beads.is_empty() {
            return Self::default();
        }
        Self {
            beads: canonical_rotation(&beads).expect("nonempty"),
        }
    }

    pub fn from_beads_unchecked(beads: Vec<Bead>) -> Self {
        Self { beads }
    }

    pub fn beads(&self) -> &[Bead] {
        &self.beads
    }

    pub fn len(&self) -> usize {
        self.beads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beads.is_empty()
    }

    pub fn is_canonical(&self) -> bool {
        is_least_rotation(&self.beads)
    }

    pub fn count(&self, bead: Bead) -> usize {
        self.beads.iter().filter(|&&b| b == bead).count()
    }

    pub fn parse_bw(text: &str) -> Option<Self> {
        text.chars()
            .map(|c| match c {
                'B' => Some(Bead::Black),
                'W' => Some(Bead::White),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    pub fn to_lr_string(&self) -> String {
        self.beads.iter().map(|b| b.lr_char()).collect()
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.beads.iter().map(|b| b.bw_char()).collect();
        f.write_str(&s)
    }
}

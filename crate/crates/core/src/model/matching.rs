//! Canonical annular matchings and their text code.
//!
//! Code grammar (version [`CODE_VERSION`]):
//!
//! ```text
//! code     := cells | free
//! cells    := cell+                       ; one cell per cross-cut
//! cell     := "(" dyck "|" dyck ")"       ; outer gap | inner gap
//! free     := "outer:" lr* ";inner:" lr*  ; no cross-cuts
//! dyck     := ("U" | "D")*
//! lr       := "L" | "R"
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::dyck::{DyckDefect, DyckWord, GapCell};
use super::necklace::{Bead, Necklace};
use super::rotation::{canonical_rotation, is_least_rotation};
use crate::error::{Error, Result};

pub const CODE_VERSION: u32 = 1;

/// An equivalence class of annular non-crossing matchings.
///
/// With `k >= 1` cross-cuts the class is the cyclic sequence of its `k` gap
/// cells, stored in least rotation. With no cross-cuts the two boundaries do
/// not interact and each is stored as an independent necklace over `L`/`R`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AnnularMatching {
    Crosscut { cells: Vec<GapCell> },
    Free { outer: Necklace, inner: Necklace },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Outer,
    Inner,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Outer => "outer",
            Side::Inner => "inner",
        })
    }
}

/// A broken invariant found by [`AnnularMatching::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoCells,
    NotCanonical,
    Dyck { cell: usize, side: Side, defect: DyckDefect },
    NecklaceNotCanonical { side: Side },
    NecklaceUnbalanced { side: Side, left: usize, right: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoCells => f.write_str("cross-cut body has no cells"),
            Violation::NotCanonical => f.write_str("not canonical"),
            Violation::Dyck { cell, side, defect } => {
                write!(f, "cell {cell} {side}: {defect}")
            }
            Violation::NecklaceNotCanonical { side } => {
                write!(f, "{side} necklace not canonical")
            }
            Violation::NecklaceUnbalanced { side, left, right } => {
                write!(f, "{side} necklace has {left} L and {right} R")
            }
        }
    }
}

impl AnnularMatching {
    /// Canonical matching from a cyclic cell sequence.
    pub fn from_cells(cells: Vec<GapCell>) -> Result<Self> {
        let cells = canonical_rotation(&cells)?;
        Ok(Self::Crosscut { cells })
    }

    /// Canonical zero-cross-cut matching from two boundary words (`Black` = L).
    pub fn from_boundary_words(outer: Vec<Bead>, inner: Vec<Bead>) -> Self {
        Self::Free {
            outer: Necklace::new(outer),
            inner: Necklace::new(inner),
        }
    }

    /// The pure matching with `k` cross-cuts and no half-circles.
    /// `k = 0` gives the empty matching.
    pub fn pure_crosscuts(k: usize) -> Self {
        if k == 0 {
            Self::from_boundary_words(vec![], vec![])
        } else {
            Self::Crosscut {
                cells: vec![GapCell::default(); k],
            }
        }
    }

    pub fn crosscuts(&self) -> usize {
        match self {
            Self::Crosscut { cells } => cells.len(),
            Self::Free { .. } => 0,
        }
    }

    /// Number of half-circles with both endpoints on the outer boundary.
    pub fn outer_half_circles(&self) -> usize {
        match self {
            Self::Crosscut { cells } => cells.iter().map(|c| c.outer.semilength()).sum(),
            Self::Free { outer, .. } => outer.count(Bead::Black),
        }
    }

    pub fn inner_half_circles(&self) -> usize {
        match self {
            Self::Crosscut { cells } => cells.iter().map(|c| c.inner.semilength()).sum(),
            Self::Free { inner, .. } => inner.count(Bead::Black),
        }
    }

    /// `(n, m, k)`: the matching lies in `Ann_k(2n+k, 2m+k)`.
    pub fn shape(&self) -> (usize, usize, usize) {
        (self.outer_half_circles(), self.inner_half_circles(), self.crosscuts())
    }

    pub fn outer_endpoints(&self) -> usize {
        2 * self.outer_half_circles() + self.crosscuts()
    }

    pub fn inner_endpoints(&self) -> usize {
        2 * self.inner_half_circles() + self.crosscuts()
    }

    /// Re-canonicalize the rotation of the stored representative.
    pub fn canonical(&self) -> Self {
        match self {
            Self::Crosscut { cells } if cells.is_empty() => self.clone(),
            Self::Crosscut { cells } => Self::Crosscut {
                cells: canonical_rotation(cells).expect("nonempty"),
            },
            Self::Free { outer, inner } => Self::Free {
                outer: Necklace::new(outer.beads().to_vec()),
                inner: Necklace::new(inner.beads().to_vec()),
            },
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.validate().is_empty()
    }

    /// Every broken invariant; empty when the matching is valid and canonical.
    pub fn validate(&self) -> Vec<Violation> {
        let mut found = Vec::new();
        match self {
            Self::Crosscut { cells } => {
                if cells.is_empty() {
                    found.push(Violation::NoCells);
                }
                for (i, cell) in cells.iter().enumerate() {
                    for (side, word) in [(Side::Outer, &cell.outer), (Side::Inner, &cell.inner)] {
                        if let Some(defect) = word.defect() {
                            found.push(Violation::Dyck { cell: i, side, defect });
                        }
                    }
                }
                if !is_least_rotation(cells) {
                    found.push(Violation::NotCanonical);
                }
            }
            Self::Free { outer, inner } => {
                for (side, neck) in [(Side::Outer, outer), (Side::Inner, inner)] {
                    let left = neck.count(Bead::Black);
                    let right = neck.count(Bead::White);
                    if left != right {
                        found.push(Violation::NecklaceUnbalanced { side, left, right });
                    }
                    if !neck.is_canonical() {
                        found.push(Violation::NecklaceNotCanonical { side });
                    }
                }
            }
        }
        found
    }

    /// Parse a code without canonicalizing or validating it.
    pub fn parse_raw(code: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            code: code.to_string(),
            reason: reason.to_string(),
        };
        let code_trim = code.trim();
        if let Some(rest) = code_trim.strip_prefix("outer:") {
            let (outer, inner) = rest
                .split_once(";inner:")
                .ok_or_else(|| err("expected ';inner:' separator"))?;
            let parse_lr = |s: &str| {
                s.chars()
                    .map(|c| match c {
                        'L' => Ok(Bead::Black),
                        'R' => Ok(Bead::White),
                        _ => Err(err("boundary words use only L and R")),
                    })
                    .collect::<Result<Vec<_>>>()
            };
            return Ok(Self::Free {
                outer: Necklace::from_beads_unchecked(parse_lr(outer)?),
                inner: Necklace::from_beads_unchecked(parse_lr(inner)?),
            });
        }
        let mut cells = Vec::new();
        let mut rest = code_trim;
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
            let close = body.find(')').ok_or_else(|| err("unterminated cell"))?;
            let (outer, inner) = body[..close]
                .split_once('|')
                .ok_or_else(|| err("cell lacks '|'"))?;
            let outer = DyckWord::parse_letters(outer).ok_or_else(|| err("bad outer letters"))?;
            let inner = DyckWord::parse_letters(inner).ok_or_else(|| err("bad inner letters"))?;
            cells.push(GapCell::new(outer, inner));
            rest = &body[close + 1..];
        }
        if cells.is_empty() {
            return Err(err("empty code"));
        }
        Ok(Self::Crosscut { cells })
    }

    /// Parse, require valid Dyck/necklace content, and canonicalize.
    pub fn parse(code: &str) -> Result<Self> {
        let raw = Self::parse_raw(code)?;
        let canonical = raw.canonical();
        if let Some(v) = canonical.validate().first() {
            return Err(Error::Parse {
                code: code.to_string(),
                reason: v.to_string(),
            });
        }
        Ok(canonical)
    }

    pub fn code(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for AnnularMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Crosscut { cells } => cells.iter().try_for_each(|c| write!(f, "{c}")),
            Self::Free { outer, inner } => write!(
                f,
                "outer:{};inner:{}",
                outer.to_lr_string(),
                inner.to_lr_string()
            ),
        }
    }
}

impl FromStr for AnnularMatching {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::dyck::Step;

    #[test]
    fn code_round_trip() {
        for code in ["(UD|)", "(UUDD|UD)(|)", "(|)(|)", "outer:LLRR;inner:", "outer:;inner:LR"] {
            let m = AnnularMatching::parse(code).unwrap();
            assert_eq!(m.code(), code);
            assert!(m.validate().is_empty());
        }
    }

    #[test]
    fn parse_canonicalizes() {
        let m = AnnularMatching::parse("(|)(UD|UD)").unwrap();
        assert_eq!(m.code(), "(UD|UD)(|)");
        let m = AnnularMatching::parse("outer:RRLL;inner:").unwrap();
        assert_eq!(m.code(), "outer:LLRR;inner:");
    }

    #[test]
    fn shape_counts() {
        let m = AnnularMatching::parse("(UUDD|UD)(|)").unwrap();
        assert_eq!(m.shape(), (2, 1, 2));
        assert_eq!(m.outer_endpoints(), 6);
        assert_eq!(m.inner_endpoints(), 4);
        let free = AnnularMatching::parse("outer:LRLR;inner:LR").unwrap();
        assert_eq!(free.shape(), (2, 1, 0));
    }

    #[test]
    fn violations_are_reported() {
        let raw = AnnularMatching::parse_raw("(|)(UD|)").unwrap();
        assert_eq!(raw.validate(), vec![Violation::NotCanonical]);
        assert_eq!(raw.validate()[0].to_string(), "not canonical");

        let bad = AnnularMatching::Crosscut {
            cells: vec![GapCell::new(
                DyckWord::from_steps_unchecked(vec![Step::U, Step::D, Step::D, Step::U]),
                DyckWord::empty(),
            )],
        };
        let v = bad.validate();
        assert!(matches!(
            v.as_slice(),
            [Violation::Dyck { cell: 0, side: Side::Outer, defect: DyckDefect::Prefix { position: 2 } }]
        ));
        assert!(v[0].to_string().contains("Dyck prefix"));

        let unbalanced = AnnularMatching::parse_raw("outer:LLR;inner:").unwrap();
        assert!(matches!(
            unbalanced.validate().as_slice(),
            [Violation::NecklaceUnbalanced { side: Side::Outer, left: 2, right: 1 }]
        ));
        assert_eq!(
            AnnularMatching::Crosscut { cells: vec![] }.validate(),
            vec![Violation::NoCells]
        );
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "(UD", "(UD)", "UD|", "(UX|)", "outer:LQ;inner:", "outer:LR", "(UDD|)"] {
            assert!(AnnularMatching::parse(bad).is_err(), "{bad:?} should not parse");
        }
    }
}

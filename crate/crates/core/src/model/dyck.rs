//! Balanced words over `{U, D}` and the gap cells built from them.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// One endpoint of a linear half-circle: `U` opens, `D` closes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    U,
    D,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
        }
    }
}

/// Why a step sequence is not a Dyck word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DyckDefect {
    /// The prefix ending at `position` has more `D` than `U`.
    Prefix { position: usize },
    Unbalanced { excess: usize },
}

impl fmt::Display for DyckDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DyckDefect::Prefix { position } => write!(f, "Dyck prefix deficit at position {position}"),
            DyckDefect::Unbalanced { excess } => write!(f, "{excess} unclosed U steps"),
        }
    }
}

/// Check the Dyck conditions on a raw step sequence.
pub fn dyck_defect(steps: &[Step]) -> Option<DyckDefect> {
    let mut height = 0usize;
    for (position, step) in steps.iter().enumerate() {
        match step {
            Step::U => height += 1,
            Step::D if height == 0 => return Some(DyckDefect::Prefix { position }),
            Step::D => height -= 1,
        }
    }
    (height > 0).then_some(DyckDefect::Unbalanced { excess: height })
}

/// A linear non-crossing matching, written as a balanced `U`/`D` word.
///
/// Values built through [`DyckWord::new`] or [`DyckWord::parse`] are always
/// balanced; [`DyckWord::from_steps_unchecked`] exists so that malformed
/// input can be represented and reported by [`crate::model::validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckWord {
    steps: Vec<Step>,
}

impl DyckWord {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(steps: Vec<Step>) -> Result<Self> {
        match dyck_defect(&steps) {
            None => Ok(Self { steps }),
            Some(defect) => Err(Error::Domain(format!("not a Dyck word: {defect}"))),
        }
    }

    pub fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        Self { steps }
    }

    /// Parse a word such as `"UUDD"`. Only the letters are checked, not balance.
    pub fn parse_letters(text: &str) -> Option<Self> {
        text.chars()
            .map(|c| match c {
                'U' => Some(Step::U),
                'D' => Some(Step::D),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Self::from_steps_unchecked)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let word = Self::parse_letters(text)
            .ok_or_else(|| Error::Domain(format!("{text:?} contains letters other than U and D")))?;
        Self::new(word.steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of half-circles (count of `U`).
    pub fn semilength(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::U).count()
    }

    pub fn defect(&self) -> Option<DyckDefect> {
        dyck_defect(&self.steps)
    }

    /// Partner index of every step, pairing each `U` with its closing `D`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut open = Vec::new();
        let mut pairs = Vec::new();
        for (i, step) in self.steps.iter().enumerate() {
            match step {
                Step::U => open.push(i),
                Step::D => {
                    if let Some(j) = open.pop() {
                        pairs.push((j, i));
                    }
                }
            }
        }
        pairs
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            write!(f, "{}", step.as_char())?;
        }
        Ok(())
    }
}

/// Content of one region between consecutive cross-cuts: the outer-boundary
/// half-circles and the inner-boundary half-circles lying in that region.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GapCell {
    pub outer: DyckWord,
    pub inner: DyckWord,
}

/// Symbol ranks of the cell encoding: `U < D < | < ( < )`.
const RANK_U: u8 = 0;
const RANK_D: u8 = 1;
const RANK_BAR: u8 = 2;
const RANK_OPEN: u8 = 3;
const RANK_CLOSE: u8 = 4;

fn step_rank(step: &Step) -> u8 {
    match step {
        Step::U => RANK_U,
        Step::D => RANK_D,
    }
}

impl GapCell {
    pub fn new(outer: DyckWord, inner: DyckWord) -> Self {
        Self { outer, inner }
    }

    /// Ranked symbols of `(outer|inner)`, the order used for canonical rotation.
    fn ranked_symbols(&self) -> impl Iterator<Item = u8> + '_ {
        std::iter::once(RANK_OPEN)
            .chain(self.outer.steps().iter().map(step_rank))
            .chain(std::iter::once(RANK_BAR))
            .chain(self.inner.steps().iter().map(step_rank))
            .chain(std::iter::once(RANK_CLOSE))
    }

    pub fn swapped(&self) -> Self {
        Self {
            outer: self.inner.clone(),
            inner: self.outer.clone(),
        }
    }
}

impl Ord for GapCell {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ranked_symbols().cmp(other.ranked_symbols())
    }
}

impl PartialOrd for GapCell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GapCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.outer, self.inner)
    }
}

//! Explicit endpoint form of a matching, and the left-endpoint-set
//! construction that builds matchings from raw boundary data.

use serde::{Deserialize, Serialize};

use super::dyck::{DyckWord, GapCell, Step};
use super::matching::{AnnularMatching, Side};
use super::necklace::Bead;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EndpointKind {
    /// Counter-clockwise (opening) endpoint of a half-circle.
    LeftHalfCircle,
    RightHalfCircle,
    Crosscut,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChordKind {
    OuterHalfCircle,
    InnerHalfCircle,
    Crosscut,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Endpoint {
    pub side: Side,
    pub index: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Chord {
    pub a: Endpoint,
    pub b: Endpoint,
    pub kind: ChordKind,
}

/// Endpoints listed counter-clockwise on each boundary, starting at the
/// first cross-cut, plus the chord set joining them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndpointDiagram {
    pub outer: Vec<EndpointKind>,
    pub inner: Vec<EndpointKind>,
    pub chords: Vec<Chord>,
    /// Outer cross-cut `i` meets inner cross-cut `i + twist` (mod k).
    pub twist: usize,
}

/// Cyclic nearest-available matching on one boundary.
///
/// Every left endpoint is joined to the first unused non-left endpoint
/// counter-clockwise from it, going round the circle as often as needed.
/// Returns the half-circle pairs `(left, right)` and the sorted unused
/// endpoints, which become cross-cuts.
pub fn cyclic_bracket(is_left: &[bool]) -> (Vec<(usize, usize)>, Vec<usize>) {
    let len = is_left.len();
    let mut partner: Vec<Option<usize>> = vec![None; len];
    let mut open: Vec<usize> = Vec::new();
    let mut pushed = vec![false; len];
    for step in 0..2 * len {
        let i = step % len;
        if is_left[i] {
            if !pushed[i] {
                pushed[i] = true;
                open.push(i);
            }
        } else if partner[i].is_none() {
            if let Some(j) = open.pop() {
                partner[i] = Some(j);
                partner[j] = Some(i);
            }
        }
    }
    debug_assert!(open.is_empty(), "more left endpoints than right endpoints");
    let mut pairs: Vec<(usize, usize)> = (0..len)
        .filter(|&i| is_left[i])
        .filter_map(|i| partner[i].map(|j| (i, j)))
        .collect();
    pairs.sort_unstable();
    let free = (0..len).filter(|&i| partner[i].is_none()).collect();
    (pairs, free)
}

fn kinds_from_left_flags(is_left: &[bool]) -> Vec<EndpointKind> {
    let (_, free) = cyclic_bracket(is_left);
    let mut kinds: Vec<EndpointKind> = is_left
        .iter()
        .map(|&l| if l { EndpointKind::LeftHalfCircle } else { EndpointKind::RightHalfCircle })
        .collect();
    for i in free {
        kinds[i] = EndpointKind::Crosscut;
    }
    kinds
}

/// Gap words following each cross-cut position, counter-clockwise.
fn gap_words(kinds: &[EndpointKind], crosscuts: &[usize]) -> Vec<DyckWord> {
    let len = kinds.len();
    let k = crosscuts.len();
    (0..k)
        .map(|i| {
            let start = crosscuts[i];
            let end = if i + 1 < k { crosscuts[i + 1] } else { crosscuts[0] + len };
            let steps = (start + 1..end)
                .map(|p| match kinds[p % len] {
                    EndpointKind::LeftHalfCircle => Step::U,
                    _ => Step::D,
                })
                .collect();
            DyckWord::from_steps_unchecked(steps)
        })
        .collect()
}

fn crosscut_positions(kinds: &[EndpointKind]) -> Vec<usize> {
    kinds
        .iter()
        .enumerate()
        .filter(|(_, &t)| t == EndpointKind::Crosscut)
        .map(|(i, _)| i)
        .collect()
}

/// Build the canonical class from labelled boundaries and a twist.
fn assemble(outer: &[EndpointKind], inner: &[EndpointKind], twist: usize) -> Result<AnnularMatching> {
    let outer_x = crosscut_positions(outer);
    let inner_x = crosscut_positions(inner);
    if outer_x.len() != inner_x.len() {
        return Err(Error::InvalidState(format!(
            "{} outer but {} inner cross-cut endpoints",
            outer_x.len(),
            inner_x.len()
        )));
    }
    let k = outer_x.len();
    if k == 0 {
        let beads = |kinds: &[EndpointKind]| {
            kinds
                .iter()
                .map(|&t| if t == EndpointKind::LeftHalfCircle { Bead::Black } else { Bead::White })
                .collect()
        };
        return Ok(AnnularMatching::from_boundary_words(beads(outer), beads(inner)));
    }
    let outer_gaps = gap_words(outer, &outer_x);
    let inner_gaps = gap_words(inner, &inner_x);
    let cells = (0..k)
        .map(|i| GapCell::new(outer_gaps[i].clone(), inner_gaps[(i + twist) % k].clone()))
        .collect();
    AnnularMatching::from_cells(cells)
}

/// Matching determined by the left-endpoint sets of both boundaries and the
/// cross-cut twist.
///
/// `outer_left` lists the positions (in `0..outer_len`) that are
/// counter-clockwise endpoints of outer half-circles; likewise for the
/// inner boundary. The `k = outer_len - 2 * |outer_left|` unused endpoints
/// per side become cross-cuts, and outer cross-cut `i` is joined to inner
/// cross-cut `i + twist`, both counted counter-clockwise from position 0.
pub fn matching_from_leftset(
    outer_len: usize,
    outer_left: &[usize],
    inner_len: usize,
    inner_left: &[usize],
    twist: usize,
) -> Result<AnnularMatching> {
    let flags = |len: usize, left: &[usize], side: &str| -> Result<Vec<bool>> {
        let mut f = vec![false; len];
        for &p in left {
            if p >= len || f[p] {
                return Err(Error::Domain(format!(
                    "{side} left set must hold distinct positions below {len}"
                )));
            }
            f[p] = true;
        }
        if 2 * left.len() > len {
            return Err(Error::Domain(format!("{side} left set larger than half the boundary")));
        }
        Ok(f)
    };
    let outer_flags = flags(outer_len, outer_left, "outer")?;
    let inner_flags = flags(inner_len, inner_left, "inner")?;
    let k_out = outer_len - 2 * outer_left.len();
    let k_in = inner_len - 2 * inner_left.len();
    if k_out != k_in {
        return Err(Error::Domain(format!(
            "boundary sizes imply {k_out} outer and {k_in} inner cross-cuts"
        )));
    }
    if twist >= k_out.max(1) {
        return Err(Error::Domain(format!("twist {twist} out of range for k = {k_out}")));
    }
    assemble(
        &kinds_from_left_flags(&outer_flags),
        &kinds_from_left_flags(&inner_flags),
        twist,
    )
}

fn boundary_kinds(cells_words: impl Iterator<Item = DyckWord>) -> Vec<EndpointKind> {
    let mut kinds = Vec::new();
    for word in cells_words {
        kinds.push(EndpointKind::Crosscut);
        kinds.extend(word.steps().iter().map(|s| match s {
            Step::U => EndpointKind::LeftHalfCircle,
            Step::D => EndpointKind::RightHalfCircle,
        }));
    }
    kinds
}

fn half_circle_chords(kinds: &[EndpointKind], side: Side) -> Vec<Chord> {
    let kind = match side {
        Side::Outer => ChordKind::OuterHalfCircle,
        Side::Inner => ChordKind::InnerHalfCircle,
    };
    let pairs = match kinds.iter().position(|&t| t == EndpointKind::Crosscut) {
        // Gaps between cross-cuts are linear; read them starting at a cross-cut.
        Some(first) => linear_pairs(kinds, first),
        None => {
            let flags: Vec<bool> = kinds.iter().map(|&t| t == EndpointKind::LeftHalfCircle).collect();
            cyclic_bracket(&flags).0
        }
    };
    pairs
        .into_iter()
        .map(|(a, b)| Chord {
            a: Endpoint { side, index: a },
            b: Endpoint { side, index: b },
            kind,
        })
        .collect()
}

/// Half-circle pairs when every gap between cross-cut endpoints is read as
/// a linear word, starting from the cross-cut at `first`.
fn linear_pairs(kinds: &[EndpointKind], first: usize) -> Vec<(usize, usize)> {
    let len = kinds.len();
    let mut open = Vec::new();
    let mut pairs = Vec::new();
    for step in 0..len {
        let i = (first + step) % len;
        match kinds[i] {
            EndpointKind::LeftHalfCircle => open.push(i),
            EndpointKind::RightHalfCircle => {
                if let Some(j) = open.pop() {
                    pairs.push((j, i));
                }
            }
            EndpointKind::Crosscut => open.clear(),
        }
    }
    pairs.sort_unstable();
    pairs
}

impl EndpointDiagram {
    /// Expand a matching into explicit endpoints and chords (twist 0).
    pub fn from_matching(matching: &AnnularMatching) -> Self {
        let (outer, inner) = match matching {
            AnnularMatching::Crosscut { cells } => (
                boundary_kinds(cells.iter().map(|c| c.outer.clone())),
                boundary_kinds(cells.iter().map(|c| c.inner.clone())),
            ),
            AnnularMatching::Free { outer, inner } => {
                let kinds = |beads: &[Bead]| {
                    beads
                        .iter()
                        .map(|&b| match b {
                            Bead::Black => EndpointKind::LeftHalfCircle,
                            Bead::White => EndpointKind::RightHalfCircle,
                        })
                        .collect::<Vec<_>>()
                };
                (kinds(outer.beads()), kinds(inner.beads()))
            }
        };
        let mut chords = half_circle_chords(&outer, Side::Outer);
        chords.extend(half_circle_chords(&inner, Side::Inner));
        let outer_x = crosscut_positions(&outer);
        let inner_x = crosscut_positions(&inner);
        chords.extend(outer_x.iter().zip(&inner_x).map(|(&a, &b)| Chord {
            a: Endpoint { side: Side::Outer, index: a },
            b: Endpoint { side: Side::Inner, index: b },
            kind: ChordKind::Crosscut,
        }));
        Self { outer, inner, chords, twist: 0 }
    }

    pub fn crosscuts(&self) -> usize {
        self.chords.iter().filter(|c| c.kind == ChordKind::Crosscut).count()
    }

    pub fn count(&self, kind: ChordKind) -> usize {
        self.chords.iter().filter(|c| c.kind == kind).count()
    }

    /// Recover the canonical matching, checking that the chords are exactly
    /// the non-crossing matching the labels describe and that cross-cuts
    /// pair with a uniform offset.
    pub fn compress(&self) -> Result<AnnularMatching> {
        let bad = |msg: String| Error::InvalidState(msg);
        let mut seen_outer = vec![0u8; self.outer.len()];
        let mut seen_inner = vec![0u8; self.inner.len()];
        for chord in &self.chords {
            for e in [chord.a, chord.b] {
                let (seen, kinds) = match e.side {
                    Side::Outer => (&mut seen_outer, &self.outer),
                    Side::Inner => (&mut seen_inner, &self.inner),
                };
                if e.index >= kinds.len() {
                    return Err(bad(format!("endpoint {e:?} out of range")));
                }
                seen[e.index] += 1;
            }
        }
        if seen_outer.iter().chain(&seen_inner).any(|&c| c != 1) {
            return Err(bad("every endpoint must lie on exactly one chord".into()));
        }

        let mut expected = half_circle_chords(&self.outer, Side::Outer);
        expected.extend(half_circle_chords(&self.inner, Side::Inner));
        let mut actual: Vec<(usize, usize, ChordKind, Side)> = Vec::new();
        let mut cross: Vec<(usize, usize)> = Vec::new();
        for chord in &self.chords {
            match chord.kind {
                ChordKind::Crosscut => {
                    let (o, i) = match (chord.a.side, chord.b.side) {
                        (Side::Outer, Side::Inner) => (chord.a.index, chord.b.index),
                        (Side::Inner, Side::Outer) => (chord.b.index, chord.a.index),
                        _ => return Err(bad("cross-cut must join the two boundaries".into())),
                    };
                    if self.outer[o] != EndpointKind::Crosscut || self.inner[i] != EndpointKind::Crosscut {
                        return Err(bad("cross-cut chord on a half-circle endpoint".into()));
                    }
                    cross.push((o, i));
                }
                kind => {
                    if chord.a.side != chord.b.side {
                        return Err(bad("half-circle spans both boundaries".into()));
                    }
                    let (lo, hi) = (chord.a.index.min(chord.b.index), chord.a.index.max(chord.b.index));
                    actual.push((lo, hi, kind, chord.a.side));
                }
            }
        }
        let mut expected: Vec<(usize, usize, ChordKind, Side)> = expected
            .into_iter()
            .map(|c| (c.a.index.min(c.b.index), c.a.index.max(c.b.index), c.kind, c.a.side))
            .collect();
        let key = |c: &(usize, usize, ChordKind, Side)| (c.3 == Side::Inner, c.0, c.1);
        expected.sort_by_key(key);
        actual.sort_by_key(key);
        if expected != actual {
            return Err(bad("half-circles do not form the non-crossing matching of the labels".into()));
        }

        let outer_x = crosscut_positions(&self.outer);
        let inner_x = crosscut_positions(&self.inner);
        let k = outer_x.len();
        if k != inner_x.len() || k != cross.len() {
            return Err(bad("cross-cut endpoint counts disagree".into()));
        }
        let mut twist = None;
        for (o, i) in cross {
            let oi = outer_x.binary_search(&o).expect("labelled cross-cut");
            let ii = inner_x.binary_search(&i).expect("labelled cross-cut");
            let t = (ii + k - oi) % k;
            if *twist.get_or_insert(t) != t {
                return Err(bad("cross-cuts do not pair with a uniform offset".into()));
            }
        }
        assemble(&self.outer, &self.inner, twist.unwrap_or(0))
    }
}

/// Explicit endpoint form of a matching.
pub fn endpoints(matching: &AnnularMatching) -> EndpointDiagram {
    EndpointDiagram::from_matching(matching)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_bracket_wraps_around() {
        // R L L R: 2 closes at 3, 1 wraps round to 0
        let (pairs, free) = cyclic_bracket(&[false, true, true, false]);
        assert_eq!(pairs, vec![(1, 0), (2, 3)]);
        assert!(free.is_empty());
        let (pairs, free) = cyclic_bracket(&[true, false, false]);
        assert_eq!(pairs, vec![(0, 1)]);
        assert_eq!(free, vec![2]);
        let (pairs, free) = cyclic_bracket(&[false, false, true]);
        assert_eq!(pairs, vec![(2, 0)]);
        assert_eq!(free, vec![1]);
    }

    #[test]
    fn leftset_examples() {
        let m = matching_from_leftset(3, &[0], 1, &[], 0).unwrap();
        assert_eq!(m.code(), "(UD|)");
        let m = matching_from_leftset(4, &[0, 1], 0, &[], 0).unwrap();
        assert_eq!(m.code(), "outer:LLRR;inner:");
        assert!(matching_from_leftset(3, &[0, 1], 1, &[], 0).is_err());
        assert!(matching_from_leftset(3, &[0], 1, &[], 1).is_err());
        assert!(matching_from_leftset(3, &[0, 0], 1, &[], 0).is_err());
        assert!(matching_from_leftset(5, &[0], 1, &[], 0).is_err());
        assert!(matching_from_leftset(4, &[1], 0, &[], 0).is_err());
    }

    #[test]
    fn leftset_states_collapse_to_five_for_2_1_2() {
        use std::collections::BTreeSet;
        let mut seen = BTreeSet::new();
        for a in 0..6 {
            for b in a + 1..6 {
                for c in 0..4 {
                    for t in 0..2 {
                        let m = matching_from_leftset(6, &[a, b], 4, &[c], t).unwrap();
                        assert!(m.validate().is_empty());
                        assert_eq!(m.shape(), (2, 1, 2));
                        seen.insert(m.code());
                    }
                }
            }
        }
        assert_eq!(seen.len(), 5);
    }

    #[test]
    fn endpoints_examples() {
        let m = AnnularMatching::parse("(UD|)").unwrap();
        let d = endpoints(&m);
        assert_eq!(
            d.outer,
            vec![EndpointKind::Crosscut, EndpointKind::LeftHalfCircle, EndpointKind::RightHalfCircle]
        );
        assert_eq!(d.inner, vec![EndpointKind::Crosscut]);
        assert_eq!(d.crosscuts(), 1);
        assert_eq!(d.count(ChordKind::OuterHalfCircle), 1);

        let pure = AnnularMatching::pure_crosscuts(5);
        let d = endpoints(&pure);
        assert_eq!(d.crosscuts(), 5);
        assert_eq!(d.chords.len(), 5);

        let m = AnnularMatching::parse("(UUDD|UD)(|)").unwrap();
        let d = endpoints(&m);
        assert_eq!(d.crosscuts(), 2);
        assert_eq!(d.count(ChordKind::OuterHalfCircle), 2);
        assert_eq!(d.count(ChordKind::InnerHalfCircle), 1);
        assert_eq!(d.compress().unwrap(), m);
    }

    #[test]
    fn compress_honours_twist() {
        let m = AnnularMatching::parse("(UD|UD)(|)").unwrap();
        let mut d = endpoints(&m);
        // re-pair cross-cuts with offset 1: gives the anti-aligned class
        for c in d.chords.iter_mut().filter(|c| c.kind == ChordKind::Crosscut) {
            c.b.index = if c.b.index == 0 { 3 } else { 0 };
        }
        d.twist = 1;
        assert_eq!(d.compress().unwrap().code(), "(UD|)(|UD)");
    }

    #[test]
    fn compress_rejects_crossing_chords() {
        let m = AnnularMatching::parse("outer:LLRR;inner:").unwrap();
        let mut d = endpoints(&m);
        // swap partners to make crossing chords (0,2),(1,3)
        d.chords = vec![
            Chord { a: Endpoint { side: Side::Outer, index: 0 }, b: Endpoint { side: Side::Outer, index: 2 }, kind: ChordKind::OuterHalfCircle },
            Chord { a: Endpoint { side: Side::Outer, index: 1 }, b: Endpoint { side: Side::Outer, index: 3 }, kind: ChordKind::OuterHalfCircle },
        ];
        assert!(d.compress().is_err());
        d.chords.pop();
        assert!(d.compress().is_err());
    }
}

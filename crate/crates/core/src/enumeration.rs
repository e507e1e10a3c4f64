//! Brute-force generation of matchings, used as an oracle for the closed
//! forms in [`crate::counting`].
//!
//! Two independent routes are provided. The gap-cell route builds every
//! cyclic sequence of gap cells and keeps those already in least rotation.
//! The state route walks every left-endpoint assignment of both boundaries
//! together with every cross-cut twist, and counts the distinct canonical
//! matchings produced by [`matching_from_leftset`].

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{
    is_least_rotation, least_rotation_offset, matching_from_leftset, rotate, AnnularMatching, Bead,
    DyckWord, GapCell, Step,
};
use crate::numtheory::{binomial, catalan, ExactInt};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_outer_endpoints: u64,
    pub max_inner_endpoints: u64,
    /// Largest number of raw states an enumeration may visit.
    pub max_states: u128,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        Self {
            max_outer_endpoints: 14,
            max_inner_endpoints: 14,
            max_states: 100_000_000,
        }
    }
}

impl EnumerationBudget {
    pub fn unlimited() -> Self {
        Self {
            max_outer_endpoints: u64::MAX,
            max_inner_endpoints: u64::MAX,
            max_states: u128::MAX,
        }
    }

    fn admit(&self, n: u64, m: u64, k: u64, states: ExactInt) -> Result<()> {
        let requested = states.to_u128().unwrap_or(u128::MAX);
        let (outer, inner) = (2 * n + k, 2 * m + k);
        if outer > self.max_outer_endpoints || inner > self.max_inner_endpoints {
            return Err(Error::EndpointLimit {
                outer,
                inner,
                max_outer: self.max_outer_endpoints,
                max_inner: self.max_inner_endpoints,
            });
        }
        if requested > self.max_states {
            return Err(Error::BudgetExceeded {
                requested,
                ceiling: self.max_states,
            });
        }
        Ok(())
    }
}

/// Ordered tuples of `k` Dyck words of total semilength `n`:
/// `k/(2n+k) * C(2n+k, n)` of them.
fn gap_tuple_count(n: u64, k: u64) -> ExactInt {
    if k == 0 {
        return ExactInt::from(u32::from(n == 0));
    }
    binomial(2 * n + k, n as i64) * k / (2 * n + k)
}

/// All Dyck words of semilength `n` in lexicographic order (`U < D`).
pub fn gen_dyck(n: usize) -> Vec<DyckWord> {
    fn extend(prefix: &mut Vec<Step>, opens: usize, closes: usize, n: usize, out: &mut Vec<DyckWord>) {
        if closes == n {
            out.push(DyckWord::from_steps_unchecked(prefix.clone()));
            return;
        }
        if opens < n {
            prefix.push(Step::U);
            extend(prefix, opens + 1, closes, n, out);
            prefix.pop();
        }
        if closes < opens {
            prefix.push(Step::D);
            extend(prefix, opens, closes + 1, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(2 * n), 0, 0, n, &mut out);
    out
}

/// Weak compositions of `total` into `parts` parts, first part descending.
pub fn gen_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    assert!(parts >= 1, "compositions need at least one part");
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .rev()
        .flat_map(|first| {
            gen_compositions(total - first, parts - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// Every ordered `k`-tuple of Dyck words with total semilength `n`.
fn gap_tuples(n: usize, k: usize) -> Vec<Vec<DyckWord>> {
    let by_size: Vec<Vec<DyckWord>> = (0..=n).map(gen_dyck).collect();
    gen_compositions(n, k)
        .into_iter()
        .flat_map(|comp| {
            comp.iter()
                .map(|&s| by_size[s].clone())
                .multi_cartesian_product()
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Every boundary word with `n` `L` and `n` `R`.
fn balanced_words(n: usize) -> impl Iterator<Item = Vec<Bead>> {
    (0..2 * n).combinations(n).map(move |left| {
        let mut w = vec![Bead::White; 2 * n];
        for p in left {
            w[p] = Bead::Black;
        }
        w
    })
}

fn canonical_balanced_words(n: usize) -> Vec<Vec<Bead>> {
    balanced_words(n).filter(|w| is_least_rotation(w)).collect()
}

fn cells_of(outer: &[DyckWord], inner: &[DyckWord]) -> Vec<GapCell> {
    outer
        .iter()
        .zip(inner)
        .map(|(o, i)| GapCell::new(o.clone(), i.clone()))
        .collect()
}

/// All classes in `Ann_k(2n+k, 2m+k)` by the gap-cell route.
pub fn enumerate_matchings(n: u64, m: u64, k: u64, budget: &EnumerationBudget) -> Result<BTreeSet<AnnularMatching>> {
    budget.admit(n, m, k, raw_cell_states(n, m, k))?;
    let (n, m, k) = (n as usize, m as usize, k as usize);
    if k == 0 {
        let outers = canonical_balanced_words(n);
        let inners = canonical_balanced_words(m);
        return Ok(outers
            .iter()
            .cartesian_product(&inners)
            .map(|(o, i)| AnnularMatching::from_boundary_words(o.clone(), i.clone()))
            .collect());
    }
    let inners = gap_tuples(m, k);
    Ok(gap_tuples(n, k)
        .par_iter()
        .flat_map_iter(|outer| {
            inners.iter().filter_map(move |inner| {
                let cells = cells_of(outer, inner);
                is_least_rotation(&cells).then_some(AnnularMatching::Crosscut { cells })
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect())
}

fn raw_cell_states(n: u64, m: u64, k: u64) -> ExactInt {
    if k == 0 {
        binomial(2 * n, n as i64) * binomial(2 * m, m as i64)
    } else {
        gap_tuple_count(n, k) * gap_tuple_count(m, k)
    }
}

/// `|enumerate_matchings(n, m, k)|`, counted by keeping only cell sequences
/// that are their own least rotation. Outer configurations are counted in
/// parallel.
pub fn oracle_count(n: u64, m: u64, k: u64, budget: &EnumerationBudget) -> Result<ExactInt> {
    budget.admit(n, m, k, raw_cell_states(n, m, k))?;
    let (n, m, k) = (n as usize, m as usize, k as usize);
    if k == 0 {
        let outers = balanced_words(n).filter(|w| is_least_rotation(w)).count();
        let inners = balanced_words(m).filter(|w| is_least_rotation(w)).count();
        return Ok(ExactInt::from(outers) * inners);
    }
    let inners = gap_tuples(m, k);
    let count: u64 = gap_tuples(n, k)
        .par_iter()
        .map(|outer| {
            inners
                .iter()
                .filter(|inner| is_least_rotation(&cells_of(outer, inner)))
                .count() as u64
        })
        .sum();
    Ok(ExactInt::from(count))
}

/// Distinct canonical matchings over every `(outer left set, inner left set, twist)`.
pub fn state_oracle_count(n: u64, m: u64, k: u64, budget: &EnumerationBudget) -> Result<ExactInt> {
    let twists = k.max(1);
    let states = binomial(2 * n + k, n as i64) * binomial(2 * m + k, m as i64) * twists;
    budget.admit(n, m, k, states)?;
    let (outer_len, inner_len) = ((2 * n + k) as usize, (2 * m + k) as usize);
    let inner_sets: Vec<Vec<usize>> = (0..inner_len).combinations(m as usize).collect();
    let outer_sets: Vec<Vec<usize>> = (0..outer_len).combinations(n as usize).collect();
    let seen = outer_sets
        .par_iter()
        .fold(HashSet::new, |mut seen, outer| {
            for inner in &inner_sets {
                for t in 0..twists as usize {
                    let m = matching_from_leftset(outer_len, outer, inner_len, inner, t)
                        .expect("admissible state");
                    seen.insert(m);
                }
            }
            seen
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(ExactInt::from(seen.len()))
}

/// A circular matching of `2n` points as the cyclic sequence of
/// partner offsets `(partner(i) - i) mod 2n`, in least rotation.
pub type CircularCode = Vec<usize>;

/// Circular non-crossing matchings of `2n` points, up to rotation.
pub fn enumerate_circular(n: u64, budget: &EnumerationBudget) -> Result<BTreeSet<CircularCode>> {
    if n == 0 {
        return Err(Error::Domain("circular matchings start at n = 1".into()));
    }
    let requested = catalan(n as i64).to_u128().unwrap_or(u128::MAX);
    if requested > budget.max_states {
        return Err(Error::BudgetExceeded {
            requested,
            ceiling: budget.max_states,
        });
    }
    let len = 2 * n as usize;
    Ok(gen_dyck(n as usize)
        .into_iter()
        .map(|word| {
            let mut offsets = vec![0; len];
            for (a, b) in word.pairs() {
                offsets[a] = b - a;
                offsets[b] = len - (b - a);
            }
            rotate(&offsets, least_rotation_offset(&offsets))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn budget() -> EnumerationBudget {
        EnumerationBudget::default()
    }

    fn codes(n: u64, m: u64, k: u64) -> Vec<String> {
        let mut codes: Vec<String> = enumerate_matchings(n, m, k, &budget())
            .unwrap()
            .iter()
            .map(|x| x.code())
            .collect();
        codes.sort();
        codes
    }

    #[test]
    fn dyck_generation() {
        assert_eq!(gen_dyck(0), vec![DyckWord::empty()]);
        assert_eq!(gen_dyck(3).len(), 5);
        let two: Vec<String> = gen_dyck(2).iter().map(|w| w.to_string()).collect();
        assert_eq!(two, vec!["UUDD", "UDUD"]);
        for n in 0..=9 {
            let words = gen_dyck(n);
            assert_eq!(ExactInt::from(words.len()), catalan(n as i64));
            assert!(words.windows(2).all(|w| w[0] < w[1]));
            assert!(words.iter().all(|w| w.defect().is_none()));
        }
    }

    #[test]
    fn compositions() {
        assert_eq!(gen_compositions(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(gen_compositions(0, 3), vec![vec![0, 0, 0]]);
        assert_eq!(gen_compositions(3, 2).len(), 4);
        for total in 0..6 {
            for parts in 1..5 {
                let expected = binomial((total + parts - 1) as u64, (parts - 1) as i64);
                assert_eq!(ExactInt::from(gen_compositions(total, parts).len()), expected);
            }
        }
    }

    #[test]
    fn small_listings() {
        assert_eq!(codes(1, 0, 1), vec!["(UD|)"]);
        assert_eq!(codes(1, 1, 2), vec!["(UD|)(|UD)", "(UD|UD)(|)"]);
        assert_eq!(codes(2, 1, 2).len(), 5);
        assert_eq!(codes(0, 0, 0), vec!["outer:;inner:"]);
        assert_eq!(codes(2, 0, 0), vec!["outer:LLRR;inner:", "outer:LRLR;inner:"]);
    }

    #[test]
    fn oracle_examples() {
        let b = budget();
        assert_eq!(oracle_count(4, 0, 3, &b).unwrap(), ExactInt::from(30u32));
        assert_eq!(oracle_count(1, 1, 2, &b).unwrap(), ExactInt::from(2u32));
        assert_eq!(oracle_count(0, 0, 5, &b).unwrap(), ExactInt::from(1u32));
        assert_eq!(state_oracle_count(2, 0, 0, &b).unwrap(), ExactInt::from(2u32));
        assert_eq!(state_oracle_count(1, 0, 1, &b).unwrap(), ExactInt::from(1u32));
        assert_eq!(state_oracle_count(2, 1, 2, &b).unwrap(), ExactInt::from(5u32));
    }

    #[test]
    fn enumerated_matchings_are_valid_and_distinct() {
        let b = budget();
        for (n, m, k) in [(2, 1, 2), (3, 0, 2), (2, 2, 0), (1, 2, 3), (2, 2, 2)] {
            let set = enumerate_matchings(n, m, k, &b).unwrap();
            for x in &set {
                assert!(x.validate().is_empty(), "{x}");
                assert_eq!(x.shape(), (n as usize, m as usize, k as usize));
                assert_eq!(&x.canonical(), x);
            }
            assert_eq!(ExactInt::from(set.len()), oracle_count(n, m, k, &b).unwrap());
        }
    }

    #[test]
    fn budget_is_enforced() {
        let tight = EnumerationBudget {
            max_states: 10,
            ..EnumerationBudget::default()
        };
        assert!(matches!(
            oracle_count(3, 3, 2, &tight),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(enumerate_matchings(8, 0, 0, &budget()).is_err());
        assert!(state_oracle_count(7, 0, 1, &budget()).is_err());
        assert!(enumerate_circular(6, &tight).is_err());
    }

    #[test]
    fn circular_examples() {
        let b = budget();
        assert_eq!(enumerate_circular(2, &b).unwrap().len(), 1);
        assert_eq!(enumerate_circular(3, &b).unwrap().len(), 2);
        assert_eq!(enumerate_circular(1, &b).unwrap().len(), 1);
        assert!(enumerate_circular(0, &b).is_err());
    }
}

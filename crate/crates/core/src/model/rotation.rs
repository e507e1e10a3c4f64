//! Least cyclic rotation (Booth's algorithm).

use crate::error::{Error, Result};

/// Offset of the lexicographically least rotation of `word`.
///
/// Ties between equal rotations of a periodic word resolve to the smallest
/// offset. Runs in linear time.
pub fn least_rotation_offset<T: Ord>(word: &[T]) -> usize {
    let n = word.len();
    if n <= 1 {
        return 0;
    }
    let at = |i: usize| &word[i % n];
    // failure function of the candidate rotation starting at `k`
    let mut fail: Vec<isize> = vec![-1; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let c = at(j);
        let mut i = fail[j - k - 1];
        while i != -1 && c != at(k + i as usize + 1) {
            if c < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = fail[i as usize];
        }
        if i == -1 && c != at(k) {
            if c < at(k) {
                k = j;
            }
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    let k = k % n;
    // Booth may land on a later copy of a periodic word; pull back to the first.
    let period = smallest_period(word);
    k % period
}

fn smallest_period<T: Eq>(word: &[T]) -> usize {
    let n = word.len();
    (1..=n)
        .filter(|p| n % p == 0)
        .find(|&p| (p..n).all(|i| word[i] == word[i - p]))
        .unwrap_or(n)
}

/// Rotate `word` left by `by` positions.
pub fn rotate<T: Clone>(word: &[T], by: usize) -> Vec<T> {
    if word.is_empty() {
        return Vec::new();
    }
    let by = by % word.len();
    word[by..].iter().chain(&word[..by]).cloned().collect()
}

/// The lexicographically least rotation of a nonempty word.
pub fn canonical_rotation<T: Ord + Clone>(word: &[T]) -> Result<Vec<T>> {
    if word.is_empty() {
        return Err(Error::Domain("canonical rotation of an empty word".into()));
    }
    Ok(rotate(word, least_rotation_offset(word)))
}

/// Whether `word` already equals its least rotation. Empty words count as canonical.
pub fn is_least_rotation<T: Ord>(word: &[T]) -> bool {
    let n = word.len();
    (1..n).all(|r| {
        let rotated = word[r..].iter().chain(&word[..r]);
        word.iter().cmp(rotated) != std::cmp::Ordering::Greater
    })
}

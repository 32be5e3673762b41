//! Streaming enumeration of GT patterns and their admissible decorations.

use super::{ArrowedPattern, Decoration, GTPattern};
use crate::{Error, Result};

/// Checks that a bottom row is weakly increasing and nonempty.
pub(crate) fn check_bottom(bottom: &[i64]) -> Result<()> {
    if bottom.is_empty() {
        return Err(Error::Domain("bottom row must be nonempty".into()));
    }
    if bottom.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Domain(format!(
            "bottom row {bottom:?} is not weakly increasing"
        )));
    }
    Ok(())
}

/// Lazily enumerates all GT patterns with a fixed bottom row.
///
/// Patterns are produced in a fixed deterministic order: the rows above
/// the bottom are advanced like an odometer, the top row fastest, each
/// row in lexicographic order among the choices allowed by the row below
/// it.
#[derive(Clone, Debug)]
pub struct GtEnumerator {
    rows: Vec<Vec<i64>>,
    done: bool,
}

/// All GT patterns with the given bottom row, as a lazy iterator.
///
/// # Errors
///
/// Returns [`Error::Domain`] if `bottom` is empty or not weakly
/// increasing.
pub fn enumerate_gt(bottom: &[i64]) -> Result<GtEnumerator> {
    check_bottom(bottom)?;
    let n = bottom.len();
    let mut rows = vec![Vec::new(); n];
    rows[n - 1] = bottom.to_vec();
    for r in (0..n.saturating_sub(1)).rev() {
        // The lexicographically least row above is the prefix of the row
        // below: entry j ranges over [below[j], below[j + 1]].
        rows[r] = rows[r + 1][..=r].to_vec();
    }
    Ok(GtEnumerator { rows, done: false })
}

impl GtEnumerator {
    /// Advances `row` (constrained by `below`) to its lexicographic
    /// successor; returns false when exhausted.
    fn lex_increment(row: &mut [i64], below: &[i64]) -> bool {
        for j in (0..row.len()).rev() {
            if row[j] < below[j + 1] {
                row[j] += 1;
                for (jj, slot) in row.iter_mut().enumerate().skip(j + 1) {
                    *slot = below[jj];
                }
                return true;
            }
        }
        false
    }

    fn advance(&mut self) {
        let n = self.rows.len();
        for r in 0..n - 1 {
            let (above, below) = self.rows.split_at_mut(r + 1);
            if Self::lex_increment(&mut above[r], &below[0]) {
                for k in (0..r).rev() {
                    self.rows[k] = self.rows[k + 1][..=k].to_vec();
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for GtEnumerator {
    type Item = GTPattern;

    fn next(&mut self) -> Option<GTPattern> {
        if self.done {
            return None;
        }
        let current = GTPattern::new(self.rows.clone()).expect("enumerator rows are triangular");
        if self.rows.len() == 1 {
            self.done = true;
        } else {
            self.advance();
        }
        Some(current)
    }
}

/// Lazily enumerates the admissible decorations of one GT pattern by
/// backtracking over entries in row-major order (top row first), trying
/// decorations in the canonical order `None < Ne < Nw < Both`.
#[derive(Clone, Debug)]
struct DecorEnumerator {
    pattern: GTPattern,
    /// Flattened row-major decoration choices as indices into
    /// [`Decoration::ALL`]; `chosen.len()` is the enumeration frontier.
    chosen: Vec<u8>,
    total: usize,
    started: bool,
    done: bool,
}

impl DecorEnumerator {
    fn new(pattern: GTPattern) -> Self {
        let n = pattern.n();
        let total = n * (n + 1) / 2;
        DecorEnumerator {
            pattern,
            chosen: Vec::with_capacity(total),
            total,
            started: false,
            done: false,
        }
    }

    fn position(&self, flat: usize) -> (usize, usize) {
        // Row-major over a triangle: row i starts at i (i + 1) / 2.
        let mut i = 0;
        let mut start = 0;
        while start + i < flat {
            start += i + 1;
            i += 1;
        }
        (i, flat - start)
    }

    /// Is decoration `d` at flat position `pos` consistent with all
    /// already-assigned entries?
    ///
    /// Scanning row-major, every admissibility clause can be anchored at
    /// the rightmost entry it mentions: the NW clause of the entry itself
    /// and the NE clause of its left neighbour. Checking both here makes
    /// the prefix test complete — a full assignment passes all prefix
    /// tests iff the decorated pattern is admissible.
    fn prefix_ok(&self, pos: usize, d: Decoration) -> bool {
        let (i, j) = self.position(pos);
        let rows = self.pattern.rows();
        // NW clause of (i, j).
        if d.carries_nw() && i >= 1 && j >= 1 && rows[i][j] == rows[i - 1][j - 1] {
            let left = Decoration::ALL[self.chosen[pos - 1] as usize];
            if !(rows[i][j - 1] == rows[i][j] && left.carries_ne()) {
                return false;
            }
        }
        // NE clause of (i, j - 1).
        if j >= 1 {
            let left = Decoration::ALL[self.chosen[pos - 1] as usize];
            if left.carries_ne() && rows[i][j - 1] == rows[i - 1][j - 1] {
                // left's NE neighbour is rows[i-1][j-1] since left sits at
                // column j - 1 <= i - 1 whenever that neighbour exists.
                if !(rows[i][j] == rows[i][j - 1] && d.carries_nw()) {
                    return false;
                }
            }
        }
        true
    }

    /// Extends the current prefix with the smallest admissible choices;
    /// false if some position has none.
    fn descend(&mut self) -> bool {
        while self.chosen.len() < self.total {
            let pos = self.chosen.len();
            let mut placed = false;
            for idx in 0..4u8 {
                if self.prefix_ok(pos, Decoration::ALL[idx as usize]) {
                    self.chosen.push(idx);
                    placed = true;
                    break;
                }
            }
            if !placed {
                return false;
            }
        }
        true
    }

    /// Backtracks to the next complete assignment; false when exhausted.
    fn step(&mut self) -> bool {
        loop {
            // Advance the deepest advanceable position.
            loop {
                let Some(last) = self.chosen.pop() else {
                    return false;
                };
                let pos = self.chosen.len();
                let mut advanced = false;
                for idx in (last + 1)..4u8 {
                    if self.prefix_ok(pos, Decoration::ALL[idx as usize]) {
                        self.chosen.push(idx);
                        advanced = true;
                        break;
                    }
                }
                if advanced {
                    break;
                }
            }
            if self.descend() {
                return true;
            }
            // Descent got stuck; keep backtracking.
        }
    }

    fn current(&self) -> ArrowedPattern {
        let mut decor = Vec::with_capacity(self.pattern.n());
        let mut it = self.chosen.iter();
        for i in 0..self.pattern.n() {
            decor.push(
                (0..=i)
                    .map(|_| Decoration::ALL[*it.next().expect("complete assignment") as usize])
                    .collect(),
            );
        }
        ArrowedPattern::new(self.pattern.clone(), decor).expect("congruent by construction")
    }
}

impl Iterator for DecorEnumerator {
    type Item = ArrowedPattern;

    fn next(&mut self) -> Option<ArrowedPattern> {
        if self.done {
            return None;
        }
        let has = if self.started {
            self.step()
        } else {
            self.started = true;
            // An all-None assignment is always admissible, so the first
            // descent cannot fail, but handle it uniformly anyway.
            self.descend() || self.step()
        };
        if !has {
            self.done = true;
            return None;
        }
        Some(self.current())
    }
}

/// Lazily enumerates all admissible arrowed patterns with a fixed bottom
/// row: GT patterns in [`enumerate_gt`] order, and for each, decorations
/// in canonical backtracking order.
pub struct ArrowedEnumerator {
    gt: GtEnumerator,
    current: Option<DecorEnumerator>,
}

/// All admissible arrowed patterns with the given bottom row, as a lazy
/// iterator.
///
/// # Errors
///
/// Returns [`Error::Domain`] if `bottom` is empty or not weakly
/// increasing.
pub fn enumerate_arrowed(bottom: &[i64]) -> Result<ArrowedEnumerator> {
    let mut gt = enumerate_gt(bottom)?;
    let current = gt.next().map(DecorEnumerator::new);
    Ok(ArrowedEnumerator { gt, current })
}

impl Iterator for ArrowedEnumerator {
    type Item = ArrowedPattern;

    fn next(&mut self) -> Option<ArrowedPattern> {
        loop {
            let dec = self.current.as_mut()?;
            if let Some(p) = dec.next() {
                return Some(p);
            }
            self.current = self.gt.next().map(DecorEnumerator::new);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{is_valid_arrowed, is_valid_gt};
    use std::collections::HashSet;

    /// Reference enumeration of GT patterns by plain recursion.
    fn gt_by_recursion(bottom: &[i64]) -> Vec<GTPattern> {
        fn above_rows(below: &[i64]) -> Vec<Vec<i64>> {
            let mut out = vec![Vec::new()];
            for j in 0..below.len() - 1 {
                let mut next = Vec::new();
                for prefix in &out {
                    for v in below[j]..=below[j + 1] {
                        let mut p = prefix.clone();
                        p.push(v);
                        next.push(p);
                    }
                }
                out = next;
            }
            out
        }
        fn go(stack: &mut Vec<Vec<i64>>, out: &mut Vec<GTPattern>) {
            let top = stack.last().unwrap().clone();
            if top.len() == 1 {
                let mut rows = stack.clone();
                rows.reverse();
                out.push(GTPattern::new(rows).unwrap());
                return;
            }
            for above in above_rows(&top) {
                stack.push(above);
                go(stack, out);
                stack.pop();
            }
        }
        let mut out = Vec::new();
        go(&mut vec![bottom.to_vec()], &mut out);
        out
    }

    #[test]
    fn gt_enumeration_matches_recursion() {
        for bottom in [
            vec![0],
            vec![0, 1],
            vec![0, 2],
            vec![1, 1],
            vec![0, 1, 3],
            vec![0, 0, 2],
            vec![0, 2, 2, 3],
        ] {
            let odometer: Vec<GTPattern> = enumerate_gt(&bottom).unwrap().collect();
            let recursive = gt_by_recursion(&bottom);
            assert_eq!(
                odometer.len(),
                recursive.len(),
                "count for bottom {bottom:?}"
            );
            let a: HashSet<_> = odometer.iter().cloned().collect();
            let b: HashSet<_> = recursive.into_iter().collect();
            assert_eq!(a, b, "set for bottom {bottom:?}");
            assert_eq!(a.len(), odometer.len(), "no duplicates for {bottom:?}");
            assert!(odometer.iter().all(is_valid_gt));
        }
    }

    #[test]
    fn gt_counts_are_products_of_interval_lengths() {
        // For a two-row pattern the top entry ranges over [b0, b1].
        assert_eq!(enumerate_gt(&[3, 7]).unwrap().count(), 5);
        // Single-entry bottom row: exactly the one pattern.
        assert_eq!(enumerate_gt(&[42]).unwrap().count(), 1);
    }

    #[test]
    fn bottom_row_validation() {
        assert!(enumerate_gt(&[]).is_err());
        assert!(enumerate_gt(&[2, 1]).is_err());
        assert!(enumerate_arrowed(&[1, 0]).is_err());
    }

    /// Reference enumeration of decorations: full 4^k product filtered by
    /// the validity predicate.
    fn arrowed_by_filter(bottom: &[i64]) -> Vec<ArrowedPattern> {
        let mut out = Vec::new();
        for base in gt_by_recursion(bottom) {
            let k = base.n() * (base.n() + 1) / 2;
            for mask in 0..4usize.pow(k as u32) {
                let mut flat = Vec::with_capacity(k);
                let mut m = mask;
                for _ in 0..k {
                    flat.push(Decoration::ALL[m % 4]);
                    m /= 4;
                }
                let mut decor = Vec::new();
                let mut it = flat.into_iter();
                for i in 0..base.n() {
                    decor.push((0..=i).map(|_| it.next().unwrap()).collect());
                }
                let p = ArrowedPattern::new(base.clone(), decor).unwrap();
                if is_valid_arrowed(&p) {
                    out.push(p);
                }
            }
        }
        out
    }

    #[test]
    fn arrowed_enumeration_matches_filtered_product() {
        for bottom in [
            vec![0],
            vec![0, 1],
            vec![2, 2],
            vec![0, 1, 2],
            vec![0, 0, 1],
        ] {
            let lazy: Vec<ArrowedPattern> = enumerate_arrowed(&bottom).unwrap().collect();
            let reference = arrowed_by_filter(&bottom);
            let a: HashSet<_> = lazy.iter().cloned().collect();
            let b: HashSet<_> = reference.into_iter().collect();
            assert_eq!(a.len(), lazy.len(), "no duplicates for {bottom:?}");
            assert_eq!(a, b, "set for bottom {bottom:?}");
            assert!(lazy.iter().all(is_valid_arrowed));
        }
    }

    #[test]
    fn bottom_0_1_has_64_arrowed_patterns() {
        // Two GT patterns ([[0],[0,1]] and [[1],[0,1]]); all entries are
        // distinct from their diagonal neighbours except one equality per
        // pattern, which the admissibility rule prunes from 4 * 16 to 32
        // decorated patterns each.
        let all: Vec<_> = enumerate_arrowed(&[0, 1]).unwrap().collect();
        assert_eq!(all.len(), 64);
        assert_eq!(enumerate_gt(&[0, 1]).unwrap().count(), 2);
    }

    #[test]
    fn single_entry_has_four_decorations() {
        let all: Vec<_> = enumerate_arrowed(&[5]).unwrap().collect();
        assert_eq!(all.len(), 4);
    }

    #[test]
    fn fully_equal_bottom_pair() {
        // Bottom [2,2], top forced to 2: all three entries equal. The
        // bottom pair has NE on the left forced to pair with NW on the
        // right and vice versa; the top entry is free (4 choices).
        // Admissible bottom pairs: (None,None), (None,Ne), (Nw,None),
        // (Nw,Ne), (Ne,Nw), (Ne,Both), (Both,Nw), (Both,Both).
        let all: Vec<_> = enumerate_arrowed(&[2, 2]).unwrap().collect();
        assert_eq!(all.len(), 4 * 8);
    }
}

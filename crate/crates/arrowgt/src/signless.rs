//! Positive-weight (signless) pattern counts.
//!
//! Two reformulations trade the signed arrowed enumeration for manifestly
//! positive counts over much smaller configuration sets:
//!
//! - [`count_prop1`] sums `2^r` over plain GT patterns (no decorations at
//!   all), where `r` counts the entries that are *not* equal to both of
//!   their upper neighbours;
//! - [`count_prop2`] counts decorated patterns whose entries carry at most
//!   one arrow, under a small exclusion rule.
//!
//! Each equals a specialization of the signed generating function — the
//! `w = -1` and `w = 0` points of [`gf_bottom_row`] respectively — which
//! is exactly what the tests in this module and the verification CLI
//! check.
//!
//! [`gf_bottom_row`]: crate::patterns::gf_bottom_row

use crate::exactnum::{pow_i, rat, Rational};
use crate::patterns::{enumerate_gt, GTPattern};
use crate::Result;
use num::{One, Zero};

/// True iff some row in `rows_above_bottom ∪ {bottom if included}` has
/// three equal (necessarily consecutive) entries.
fn row_has_triple(row: &[i64]) -> bool {
    row.windows(3).any(|w| w[0] == w[1] && w[1] == w[2])
}

/// The number of entries of `p` that are **not** equal to both their NW
/// neighbour `a[i-1][j-1]` and NE neighbour `a[i-1][j]`. Entries missing
/// either neighbour (the top entry and the two ends of every row) always
/// count.
fn free_entry_count(p: &GTPattern) -> u32 {
    let rows = p.rows();
    let mut r = 0;
    for i in 0..rows.len() {
        for j in 0..=i {
            let both_equal = i >= 1
                && j >= 1
                && j < i
                && rows[i][j] == rows[i - 1][j - 1]
                && rows[i][j] == rows[i - 1][j];
            if !both_equal {
                r += 1;
            }
        }
    }
    r
}

/// Sum of `2^r` over all GT patterns with the given bottom row in which
/// no row **above** the bottom contains three equal entries, where `r` is
/// the number of entries not equal to both upper neighbours
/// ([`free_entry_count`]).
///
/// Equals the signed arrowed enumeration of the same bottom row at
/// `t = u = v = 1`, `w = -1`, `X = all-ones`.
///
/// # Errors
///
/// Returns [`Error::Domain`](crate::Error::Domain) if `bottom` is empty
/// or not weakly increasing.
pub fn count_prop1(bottom: &[i64]) -> Result<Rational> {
    let mut total = Rational::zero();
    for p in enumerate_gt(bottom)? {
        let rows = p.rows();
        if rows[..rows.len() - 1].iter().any(|r| row_has_triple(r)) {
            continue;
        }
        total += pow_i(&rat(2), i64::from(free_entry_count(&p)))?;
    }
    Ok(total)
}

/// Counts decorated GT patterns with the given bottom row, where each
/// entry carries at most one arrow (nothing, NE, or NW), subject to:
///
/// - every value appears at most twice in each row;
/// - an entry equal to its NE neighbour must not carry an NE arrow, and
///   an entry equal to its NW neighbour must not carry an NW arrow;
/// - of any two equal adjacent entries in a row, at least one is
///   decorated.
///
/// Equals the signed arrowed enumeration of the same bottom row at
/// `t = u = v = 1`, `w = 0`, `X = all-ones`.
///
/// # Errors
///
/// Returns [`Error::Domain`](crate::Error::Domain) if `bottom` is empty
/// or not weakly increasing.
pub fn count_prop2(bottom: &[i64]) -> Result<Rational> {
    let mut total = Rational::zero();
    'patterns: for p in enumerate_gt(bottom)? {
        let rows = p.rows();
        let mut pattern_count = Rational::one();
        for i in 0..rows.len() {
            if row_has_triple(&rows[i]) {
                continue 'patterns;
            }
            pattern_count *=
                prop2_row_count(&rows[i], if i >= 1 { Some(&rows[i - 1]) } else { None });
        }
        total += pattern_count;
    }
    Ok(total)
}

/// Number of admissible one-arrow decorations of a single row given the
/// row above it, by a 3-state transfer chain over {none, NE, NW}.
fn prop2_row_count(row: &[i64], above: Option<&[i64]>) -> Rational {
    let k = row.len();
    let eq_ne = |j: usize| above.is_some_and(|a| j < k - 1 && row[j] == a[j]);
    let eq_nw = |j: usize| above.is_some_and(|a| j >= 1 && row[j] == a[j - 1]);
    // allowed[s] for states 0 = none, 1 = NE, 2 = NW at entry j.
    let state_ok = |j: usize, s: usize| match s {
        1 => !eq_ne(j),
        2 => !eq_nw(j),
        _ => true,
    };
    let mut cur = [Rational::zero(), Rational::zero(), Rational::zero()];
    for (s, slot) in cur.iter_mut().enumerate() {
        if state_ok(0, s) {
            *slot = Rational::one();
        }
    }
    for j in 1..k {
        let pair_equal = row[j - 1] == row[j];
        let mut next = [Rational::zero(), Rational::zero(), Rational::zero()];
        for (s, slot) in next.iter_mut().enumerate() {
            if !state_ok(j, s) {
                continue;
            }
            for (left, cur_val) in cur.iter().enumerate() {
                // An equal adjacent pair needs at least one decoration.
                if pair_equal && left == 0 && s == 0 {
                    continue;
                }
                *slot += cur_val;
            }
        }
        cur = next;
    }
    cur.into_iter().sum()
}

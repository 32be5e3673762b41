//! Signless counts that match signed totals.
//!
//! Two specializations of the signed generating function are secretly
//! positive, and each equals a direct count of simpler objects:
//!
//! - at `w = -1`: summing `2^r` over plain GT patterns without triple
//!   repeats above the bottom row, where `r` counts the entries not
//!   equal to both of their upper neighbors, and
//! - at `w = 0`: counting decorated patterns whose entries carry at
//!   most one arrow, subject to a local admissibility rule.
//!
//! Both counting procedures never see a sign, so agreement with the
//! signed sums demonstrates the cancellation these formulas encode.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --example positive_counts
//! ```

use arrowgt::exactnum::rat;
use arrowgt::patterns::{gf_bottom_row, WeightSpec};
use arrowgt::signless::{count_prop1, count_prop2};

fn main() -> Result<(), arrowgt::Error> {
    println!("  bottom row      2^r-count   signed(w=-1)   1-arrow count   signed(w=0)");
    for bottom in [
        vec![0i64],
        vec![2],
        vec![0, 1],
        vec![0, 2],
        vec![1, 1],
        vec![0, 1, 2],
        vec![0, 2, 4],
        vec![1, 2, 2],
        vec![0, 0, 3, 3],
    ] {
        let n = bottom.len();
        let positive1 = count_prop1(&bottom)?;
        let signed1 = gf_bottom_row(&bottom, &WeightSpec::ones(n, rat(-1)))?
            .into_rational()
            .expect("numeric spec");
        let positive2 = count_prop2(&bottom)?;
        let signed2 = gf_bottom_row(&bottom, &WeightSpec::ones(n, rat(0)))?
            .into_rational()
            .expect("numeric spec");
        println!(
            "  {:<14}  {positive1:>9}  {signed1:>12}  {positive2:>13}  {signed2:>12}",
            format!("{bottom:?}")
        );
        assert_eq!(positive1, signed1, "2^r count disagrees at {bottom:?}");
        assert_eq!(positive2, signed2, "1-arrow count disagrees at {bottom:?}");
    }

    // The single-entry cases are checkable in the head: one entry with
    // no upper neighbors is free, so the only pattern contributes
    // 2^1 = 2; with at most one arrow there are 3 decorations.
    assert_eq!(count_prop1(&[7])?, rat(2));
    assert_eq!(count_prop2(&[7])?, rat(3));

    Ok(())
}

//! Closed product formulas for the signed totals.
//!
//! The signed enumeration over all strictly increasing bottom rows
//! inside `{0, ..., m}` collapses, at the two distinguished weight
//! specializations, to explicit products:
//!
//! - at `w = -1`:
//!   `2^n prod_i (m-n+3i+1)_{i-1} (m-n+i+1)_i / [((m-n+i+2)/2)_{i-1} (i)_i]`
//!   away from its removable parameter poles, and
//! - at `w = 0`: `3^{n(n+1)/2} prod_i (2n+m+2-3i)_i / (i)_i`.
//!
//! This example sweeps a small grid and checks both against the
//! transfer-chain evaluation, then prints the `m = n - 1` diagonal,
//! whose quotient by `2^n` is a known integer sequence.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --example product_formulas
//! ```

use arrowgt::exactnum::{pow_i, rat};
use arrowgt::lu::{theorem1_formula, theorem3_formula};
use arrowgt::patterns::{signed_total, WeightSpec};

fn main() -> Result<(), arrowgt::Error> {
    println!("   n   m     w = -1 total      w = 0 total");
    for n in 1..=3usize {
        for m in (n as i64 - 1)..=4 {
            let signed = theorem1_formula(n, &rat(m))?;
            let brute1 = signed_total(n, m, &WeightSpec::ones(n, rat(-1)))?
                .into_rational()
                .expect("numeric spec");
            assert_eq!(signed, brute1, "w = -1 product at n = {n}, m = {m}");

            let unsigned = theorem3_formula(n, &rat(m));
            let brute3 = signed_total(n, m, &WeightSpec::ones(n, rat(0)))?
                .into_rational()
                .expect("numeric spec");
            assert_eq!(unsigned, brute3, "w = 0 product at n = {n}, m = {m}");

            println!("  {n:>2}  {m:>2}  {signed:>15}  {unsigned:>15}");
        }
    }

    // The forced-bottom diagonal m = n - 1: dividing by 2^n leaves
    // 1, 4, 60, 3328, 678912, ...
    println!("\nm = n - 1 diagonal, divided by 2^n:");
    let mut quotients = Vec::new();
    for n in 1..=5usize {
        let value = theorem1_formula(n, &rat(n as i64 - 1))?;
        let q = value / pow_i(&rat(2), n as i64)?;
        quotients.push(q.to_string());
    }
    println!("  {}", quotients.join(", "));
    assert_eq!(
        quotients,
        ["1", "4", "60", "3328", "678912"],
        "the diagonal reproduces the reference sequence"
    );

    // The w = -1 product is stated with removable factors; its
    // implementation must stay finite on the whole admissible grid.
    for n in 1..=4usize {
        for m in (n as i64 - 1)..=6 {
            assert!(
                theorem1_formula(n, &rat(m)).is_ok(),
                "no pole at n = {n}, m = {m}"
            );
        }
    }

    Ok(())
}

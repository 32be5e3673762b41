//! Explicit right-inverse columns for the determinant matrices.
//!
//! The determinant evaluations rest on explicit matrices `x` and `y`
//! with `(a x)_{i,j} = delta_{i,j}` and `(b y)_{i,j} = delta_{i,j}` on
//! and above the diagonal — an LU-style factorization given in closed
//! form rather than computed by elimination. This example checks the
//! products cell by cell, prints one instance, and shows how parameter
//! values where an inverse entry has a pole are reported rather than
//! silently skipped.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --example lu_factorization
//! ```

use arrowgt::exactnum::{rat, ratio};
use arrowgt::lu::{a_entry, verify_lu_w0, verify_lu_w1, x_entry};

fn main() -> Result<(), arrowgt::Error> {
    // One product, spelled out: row 2 of a times columns of x, n = 4.
    // (2l is not an integer here, so no inverse-entry Pochhammer can
    // land on a nonpositive integer and pole.)
    let n = 4i64;
    let l = ratio(-2, 5);
    println!("(a x)_(2, j) at n = 4, l = -2/5:");
    for j in 2..=n {
        let mut cell = rat(0);
        for k in 1..=j {
            cell += a_entry(n, &l, 2, k) * x_entry(n, &l, k, j)?;
        }
        println!("  j = {j}: {cell}");
        assert_eq!(
            cell,
            if j == 2 { rat(1) } else { rat(0) },
            "row 2 of the product must be a unit row"
        );
    }

    // The library bundles the full on/above-diagonal check.
    for nn in 1..=6usize {
        for l in [rat(0), rat(3), ratio(1, 2), ratio(-2, 5)] {
            let report = verify_lu_w1(nn, &l);
            assert!(
                report.pass,
                "w = -1 factorization fails at {}",
                report.summary_line()
            );
            let report = verify_lu_w0(nn, &l);
            assert!(
                report.pass,
                "w = 0 factorization fails at {}",
                report.summary_line()
            );
        }
    }
    println!("\nboth factorizations hold for n <= 6 at four l values");

    // At some integer l an inverse entry has a genuine pole; the report
    // says which cells were skipped and why instead of failing.
    let report = verify_lu_w0(6, &rat(1));
    println!("\n{}", report.summary_line());
    for skip in report.skipped.iter().take(2) {
        println!("  skipped cell ({}, {}): {}", skip.i, skip.j, skip.reason);
    }
    assert!(report.pass, "evaluable cells still pass");
    assert!(
        !report.skipped.is_empty(),
        "this point is known to contain pole cells"
    );

    Ok(())
}

//! The hypergeometric multi-sums behind the determinant evaluations.
//!
//! Proving that the closed-form inverse columns really invert the
//! determinant matrices reduces to a family of terminating
//! hypergeometric identities: a double sum that vanishes identically, a
//! triple sum with a two-case closed form, an auxiliary boundary sum,
//! and a `w = 0` companion whose diagonal values do not depend on the
//! matrix-size parameter. All sums run over finite support boxes that
//! the summands themselves cut out, so every identity here is checked
//! by exact rational summation.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --example hypergeometric_sums
//! ```

use arrowgt::exactnum::{rat, ratio};
use arrowgt::hypersum::{
    aux_sum_check, chu_vandermonde, g4, sum1_check, triple_rhs, triple_sum, w0_rhs,
};

fn main() -> Result<(), arrowgt::Error> {
    // The first double sum vanishes for every 0 <= t < i, identically in
    // the two free rational parameters.
    let n = ratio(7, 2);
    let r = ratio(-3, 5);
    for i in 1..=4i64 {
        for t in 0..i {
            assert_eq!(
                sum1_check(&n, &r, i, t)?,
                rat(0),
                "double sum must vanish at i = {i}, t = {t}"
            );
        }
    }
    println!("double sum vanishes on the whole grid 0 <= t < i <= 4");

    // The triple sum has a two-case evaluation: 0 strictly below the
    // diagonal, a Pochhammer quotient on it.
    println!("\ntriple sum at n = 7/2, r = -3/5:");
    for (i, j) in [(1i64, 1i64), (1, 3), (2, 2), (2, 4), (3, 3)] {
        let sum = triple_sum(&n, &r, i, j)?;
        let closed = triple_rhs(&r, i, j)?;
        println!("  (i, j) = ({i}, {j}): {sum}");
        assert_eq!(sum, closed, "closed form at (i, j) = ({i}, {j})");
    }
    assert_eq!(
        triple_sum(&n, &r, 1, 1)?,
        -r.clone(),
        "the (1, 1) value collapses to -r"
    );

    // The auxiliary boundary sum vanishes too.
    for (i, j) in [(2i64, 2i64), (3, 2), (4, 3), (5, 4)] {
        assert_eq!(
            aux_sum_check(&n, &r, i, j)?,
            rat(0),
            "auxiliary sum at (i, j) = ({i}, {j})"
        );
    }
    println!("auxiliary boundary sum vanishes at sampled (i, j)");

    // The w = 0 companion: closed diagonal values, independent of n.
    println!("\nw = 0 triple sum diagonal:");
    for j in 1..=4i64 {
        let at_n1 = g4(&ratio(7, 3), j, j)?;
        let at_n2 = g4(&ratio(-9, 5), j, j)?;
        assert_eq!(at_n1, at_n2, "diagonal value must not depend on n");
        assert_eq!(at_n1, w0_rhs(j, j)?, "closed diagonal value at j = {j}");
        println!("  j = {j}: {at_n1}");
    }
    assert_eq!(g4(&ratio(7, 3), 1, 1)?, ratio(-1, 2), "base value");

    // Terminating Chu-Vandermonde summation is the workhorse that
    // collapses the inner sums.
    let (lhs, rhs) = chu_vandermonde(&rat(1), &rat(3), 2)?;
    println!("\n2F1(-2, 1; 3; 1) = {lhs} (closed form {rhs})");
    assert_eq!(lhs, ratio(1, 2));
    assert_eq!(rhs, ratio(1, 2));

    Ok(())
}

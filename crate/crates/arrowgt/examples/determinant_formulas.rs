//! The two determinant families and their product evaluations.
//!
//! At all-ones row variables and odd bound `m = 2l + 1`, the generating
//! function collapses to an `n x n` determinant in each of the two
//! distinguished specializations:
//!
//! - `w = -1`: a matrix `a(l)` of alternating-sign binomial sums whose
//!   determinant satisfies `2^{2n} det a = ` (the `w = -1` product),
//! - `w = 0`: a matrix `b(l)` with `6^n det b = ` (the `w = 0` product).
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --example determinant_formulas
//! ```

use arrowgt::exactnum::{pow_i, rat, ratio, RatMatrix};
use arrowgt::lu::{a_matrix, b_matrix, theorem1_formula, theorem3_formula};
use arrowgt::symfunc::det_ones_odd;

fn main() -> Result<(), arrowgt::Error> {
    // A small instance, printed in full.
    let n = 3;
    let l = rat(1);
    let a = a_matrix(n, &l);
    println!("a(l = 1), n = 3:");
    print_matrix(&a);
    let det_a = a.det_exact()?;
    let scaled = pow_i(&rat(2), 2 * n as i64)? * &det_a;
    let product = theorem1_formula(n, &rat(3))?; // m = 2l + 1 = 3
    println!("det a = {det_a},  2^(2n) det a = {scaled},  product formula = {product}");
    assert_eq!(
        scaled, product,
        "w = -1 determinant evaluation at n = 3, l = 1"
    );

    let b = b_matrix(n, &l);
    println!("\nb(l = 1), n = 3:");
    print_matrix(&b);
    let det_b = b.det_exact()?;
    let scaled = pow_i(&rat(6), n as i64)? * &det_b;
    let product = theorem3_formula(n, &rat(3));
    println!("det b = {det_b},  6^n det b = {scaled},  product formula = {product}");
    assert_eq!(
        scaled, product,
        "w = 0 determinant evaluation at n = 3, l = 1"
    );

    // Both evaluations hold across a grid, including non-integer l,
    // where the product formulas are evaluated at m = 2l + 1. At a few
    // integer points the w = -1 product degenerates to 0/0; those report
    // a pole and are legitimately skipped (both sides are rational
    // functions of l, equal wherever the product is defined).
    let mut skipped = 0;
    for n in 1..=5usize {
        for l in [rat(0), rat(2), ratio(1, 2), ratio(-3, 7)] {
            let m = rat(2) * &l + rat(1);
            let lhs = pow_i(&rat(2), 2 * n as i64)? * a_matrix(n, &l).det_exact()?;
            match theorem1_formula(n, &m) {
                Ok(rhs) => assert_eq!(lhs, rhs, "w = -1 family at n = {n}, l = {l}"),
                Err(arrowgt::Error::Pole(_)) => skipped += 1,
                Err(e) => return Err(e),
            }

            let lhs = pow_i(&rat(6), n as i64)? * b_matrix(n, &l).det_exact()?;
            let rhs = theorem3_formula(n, &m);
            assert_eq!(lhs, rhs, "w = 0 family at n = {n}, l = {l}");
        }
    }
    println!("\nboth families verified for n <= 5 at integer and rational l ({skipped} 0/0 points skipped)");

    // The odd-bound symmetric-function determinant specializes to the
    // same values at X = all-ones, w = -1: a third route to the same
    // numbers.
    for n in 1..=4usize {
        for l in 0..=2i64 {
            let via_h = det_ones_odd(n, l, &rat(-1));
            let via_product = theorem1_formula(n, &rat(2 * l + 1))?;
            assert_eq!(
                via_h, via_product,
                "h-determinant route at n = {n}, l = {l}"
            );
        }
    }
    println!("odd-bound h-determinant agrees at w = -1 for n <= 4, l <= 2");

    Ok(())
}

fn print_matrix(m: &RatMatrix) {
    for i in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols()).map(|j| m.at(i, j).to_string()).collect();
        println!("  [ {} ]", row.join("  "));
    }
}

//! The per-bottom-row generating function, three ways.
//!
//! For a fixed bottom row the signed sum of pattern weights can be
//! computed (a) symbolically as a Laurent polynomial in `t, u, v, w,
//! X_1, ..., X_n`, (b) numerically through a per-row transfer chain that
//! never materializes a pattern, and (c) by brute-force enumeration.
//! All three must agree exactly.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --example generating_functions
//! ```

use arrowgt::exactnum::{rat, ratio};
use arrowgt::patterns::{gf_bottom_row, gf_bottom_row_direct, signed_total, WeightSpec};

fn main() -> Result<(), arrowgt::Error> {
    let bottom = [0i64, 1];

    // (a) The full symbolic generating function.
    let symbolic = gf_bottom_row(&bottom, &WeightSpec::symbolic(2))?
        .into_poly()
        .expect("symbolic spec yields a polynomial");
    println!("GF for bottom row {bottom:?}:");
    println!("  {symbolic}");
    println!("  ({} monomials)\n", symbolic.num_terms());

    // (b) and (c): chain vs. brute force at a generic numeric point.
    let spec = WeightSpec::numeric(
        ratio(1, 2),
        rat(3),
        ratio(-2, 3),
        ratio(5, 7),
        vec![rat(2), ratio(3, 4)],
    )?;
    let chain = gf_bottom_row(&bottom, &spec)?
        .into_rational()
        .expect("numeric spec yields a rational");
    let brute = gf_bottom_row_direct(&bottom, &spec)?
        .into_rational()
        .expect("numeric spec yields a rational");
    println!("at t = 1/2, u = 3, v = -2/3, w = 5/7, X = (2, 3/4):");
    println!("  transfer chain : {chain}");
    println!("  brute force    : {brute}");
    assert_eq!(chain, brute, "the chain must match plain enumeration");

    // The symbolic polynomial evaluates to the same value (variables are
    // ordered t, u, v, w, X_1, ..., X_n).
    let point = vec![
        ratio(1, 2),
        rat(3),
        ratio(-2, 3),
        ratio(5, 7),
        rat(2),
        ratio(3, 4),
    ];
    assert_eq!(
        symbolic.eval(&point)?,
        chain,
        "specializing the symbolic GF matches the numeric chain"
    );

    // Summing over every strictly increasing bottom row inside 0..=m
    // gives the quantity the closed-form product evaluates; here the
    // well-known small case: n = 2, m = 1 at the signed specialization.
    let total = signed_total(2, 1, &WeightSpec::ones(2, rat(-1)))?
        .into_rational()
        .expect("numeric spec yields a rational");
    println!("\nsigned total over all bottom rows in 0..=1 (n = 2): {total}");
    assert_eq!(total, rat(16), "2^n * 4 at n = 2");

    Ok(())
}

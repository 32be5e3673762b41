//! The exact-arithmetic toolkit: extended Pochhammer symbols,
//! generalized binomials, sparse Laurent polynomials, and exact
//! determinants.
//!
//! Everything downstream (pattern weights, product formulas,
//! hypergeometric sums) is built on these primitives, so their edge
//! conventions matter: Pochhammer symbols extend to negative orders via
//! reciprocals, binomials to rational tops, and `1/k!` vanishes for
//! negative `k` — which is what makes infinite-looking sums finite.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --example exact_arithmetic
//! ```

use arrowgt::exactnum::{
    factorial, gen_binom, inv_factorial, poch_ext, pow_i, rat, ratio, LaurentPoly, RatMatrix,
};

fn main() -> Result<(), arrowgt::Error> {
    // Extended Pochhammer: rising products for positive order,
    // reciprocal products for negative order, so that the composition
    // rule (x)_{a+b} = (x)_a (x+a)_b holds for all integer orders.
    let x = ratio(5, 2);
    println!("(5/2)_3  = {}", poch_ext(&x, 3)?);
    println!("(5/2)_-3 = {}", poch_ext(&x, -3)?);
    let (a, b) = (4i64, -2i64);
    assert_eq!(
        poch_ext(&x, a + b)?,
        poch_ext(&x, a)? * poch_ext(&(&x + rat(a)), b)?,
        "composition rule"
    );

    // 1/k! as a total function: zero for k < 0. This is the switch that
    // turns summands off outside their support box.
    assert_eq!(inv_factorial(-2), rat(0));
    assert_eq!(inv_factorial(4) * factorial(4), rat(1));

    // Generalized binomials take any rational top.
    println!("binom(1/2, 3) = {}", gen_binom(&ratio(1, 2), 3));
    assert_eq!(gen_binom(&ratio(1, 2), 3), ratio(1, 16));
    assert_eq!(gen_binom(&rat(5), -1), rat(0), "negative bottom vanishes");

    // Sparse Laurent polynomials with negative exponents, exactly.
    let vars = vec!["X".to_string()];
    let x_pow = |e: i64| LaurentPoly::var_pow(vars.clone(), 0, e);
    let p = x_pow(2).add(&x_pow(-1))?; // X^2 + X^-1
    let q = x_pow(1).sub(&LaurentPoly::constant(vars.clone(), rat(3)))?; // X - 3
    let prod = p.mul(&q)?;
    println!("(X^2 + X^-1)(X - 3) = {prod}");
    assert_eq!(prod.eval(&[ratio(1, 2)])?, {
        let half = ratio(1, 2);
        (pow_i(&half, 2)? + pow_i(&half, -1)?) * (half - rat(3))
    });

    // Exact determinants by fraction-free elimination: a Hilbert-style
    // matrix keeps its tiny but nonzero determinant.
    let hilbert = RatMatrix::from_fn(4, 4, |i, j| ratio(1, (i + j + 1) as i64));
    let det = hilbert.det_exact()?;
    println!("det(4x4 Hilbert) = {det}");
    assert_eq!(det, ratio(1, 6_048_000), "known Hilbert determinant");

    Ok(())
}

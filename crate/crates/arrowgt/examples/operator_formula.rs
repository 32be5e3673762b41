//! The shift-operator form of the generating function.
//!
//! For one bottom row `(k_1, ..., k_n)` the generating function can be
//! written as a product of shift operators acting on an extended Schur
//! polynomial: each factor `t + u E_p + v E_q^{-1} + w E_p E_q^{-1}`
//! moves a pair of bottom-row indices, and the expanded operator sum is
//! evaluated index-shift by index-shift. This example expands the
//! operator at small `n` and compares against the transfer-chain value
//! of the same bottom row.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --example operator_formula
//! ```

use arrowgt::exactnum::{rat, ratio};
use arrowgt::patterns::{gf_bottom_row, WeightSpec};
use arrowgt::symfunc::operator_gf;

fn main() -> Result<(), arrowgt::Error> {
    // All-ones coordinates: extended Schur values become pure products.
    println!("at t = u = v = 1, w = -1, X = all-ones:");
    for ks in [vec![0i64, 1], vec![0, 3], vec![1, 2, 4], vec![0, 2, 2]] {
        let spec = WeightSpec::ones(ks.len(), rat(-1));
        let via_operator = operator_gf(&ks, &spec)?;
        let via_chain = gf_bottom_row(&ks, &spec)?
            .into_rational()
            .expect("numeric spec");
        println!("  bottom {ks:?}: {via_operator}");
        assert_eq!(via_operator, via_chain, "operator form at {ks:?}");
    }

    // Fully generic weights and distinct coordinates.
    let spec = WeightSpec::numeric(
        ratio(2, 3),
        rat(-1),
        ratio(1, 4),
        ratio(3, 7),
        vec![rat(2), ratio(5, 3), ratio(-1, 2)],
    )?;
    let ks = vec![0i64, 1, 3];
    let via_operator = operator_gf(&ks, &spec)?;
    let via_chain = gf_bottom_row(&ks, &spec)?
        .into_rational()
        .expect("numeric spec");
    println!("\ngeneric weights, bottom {ks:?}:");
    println!("  operator form : {via_operator}");
    println!("  transfer chain: {via_chain}");
    assert_eq!(via_operator, via_chain, "operator form at generic weights");

    // The operator expansion needs pairwise-distinct (or all-ones)
    // coordinates; a repeated coordinate is a reported degeneracy.
    let clash = WeightSpec::numeric(rat(1), rat(1), rat(1), rat(-1), vec![rat(2), rat(2)])?;
    assert!(
        operator_gf(&[0, 1], &clash).is_err(),
        "repeated coordinates are rejected, not mis-evaluated"
    );

    Ok(())
}

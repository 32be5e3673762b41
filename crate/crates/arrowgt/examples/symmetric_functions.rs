//! Extended symmetric functions and closed forms of the generating
//! function in the row variables.
//!
//! The building blocks are complete homogeneous functions `h_k`
//! extended to every integer `k` (via a reflection rule) and extended
//! Schur polynomials defined by the bialternant quotient. On top of
//! them sit three closed forms of the total generating function at
//! `t = u = v = 1` — an antisymmetrizer form, a Schur-function
//! (bialternant) form, and, for odd bounds, a determinant of extended
//! `h`'s over doubled alphabets — all of which must agree with the
//! transfer-chain evaluation.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --example symmetric_functions
//! ```

use arrowgt::exactnum::{rat, ratio};
use arrowgt::patterns::{signed_total, WeightSpec};
use arrowgt::symfunc::{gf_asym_form, gf_bialternant, gf_odd_form, h_ext, schur_ext, XPoint};

fn main() -> Result<(), arrowgt::Error> {
    // h_k extended to all integers: the usual sums for k >= 0, a window
    // of zeros, then reflected values.
    let xs = [rat(2), ratio(1, 3)];
    println!("extended h_k at X = (2, 1/3):");
    for k in -4..=2 {
        println!("  h_{k:>2} = {}", h_ext(k, &xs)?);
    }
    assert_eq!(
        h_ext(-1, &xs)?,
        rat(0),
        "the gap h_{{-1}} vanishes for n = 2"
    );
    assert_eq!(
        h_ext(1, &xs)?,
        rat(2) + ratio(1, 3),
        "h_1 is the sum of the variables"
    );

    // Extended Schur polynomials straighten automatically: repeated
    // shifted indices kill the bialternant determinant.
    assert_eq!(
        schur_ext(&[1, 0], &xs)?,
        rat(0),
        "indices (1, 0) have equal shifted labels"
    );
    println!("\ns((0, 2); X) = {}", schur_ext(&[0, 2], &xs)?);

    // The three closed forms against the chain, at a generic point.
    let n = 2;
    let point = XPoint::new(vec![rat(2), ratio(1, 3)]);
    let w = ratio(-3, 5);
    for m in 1..=4i64 {
        let spec = WeightSpec::numeric(rat(1), rat(1), rat(1), w.clone(), point.xs().to_vec())?;
        let chain = signed_total(n, m, &spec)?
            .into_rational()
            .expect("numeric spec");
        let asym = gf_asym_form(n, m, &point, &w)?;
        let bialt = gf_bialternant(n, m, &point, &w)?;
        assert_eq!(asym, chain, "antisymmetrizer form at m = {m}");
        assert_eq!(bialt, chain, "bialternant form at m = {m}");
        print!("  m = {m}: GF = {chain}");
        if m % 2 == 1 {
            let odd = gf_odd_form(n, (m - 1) / 2, &point, &w)?;
            assert_eq!(odd, chain, "odd-bound determinant form at m = {m}");
            print!("   (odd-bound determinant agrees)");
        }
        println!();
    }

    // The forms require genericity; the library reports degeneracies
    // instead of dividing by zero.
    let clash = XPoint::new(vec![rat(2), rat(2)]);
    assert!(
        gf_asym_form(2, 2, &clash, &w).is_err(),
        "repeated coordinates must be rejected"
    );

    Ok(())
}

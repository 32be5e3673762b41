//! Signs, special little triangles, and monomial weights.
//!
//! Every arrowed pattern carries a sign `(-1)^{#special triangles}` and
//! a weight: a monomial in the decoration variables `t, u, v, w` and the
//! row variables `X_1, ..., X_n`. Summing signed weights over all
//! patterns with a fixed bottom row gives the generating function that
//! the rest of the crate evaluates in closed form.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --example weights_and_signs
//! ```

use arrowgt::exactnum::rat;
use arrowgt::patterns::{
    count_special_triangles, enumerate_arrowed, sign, weight, GfValue, WeightSpec,
};

fn main() -> Result<(), arrowgt::Error> {
    let bottom = [0i64, 2];
    let spec = WeightSpec::symbolic(bottom.len());

    // Walk the patterns, tallying signs and accumulating the symbolic sum.
    let mut plus = 0usize;
    let mut minus = 0usize;
    let mut sum: Option<arrowgt::exactnum::LaurentPoly> = None;
    for p in enumerate_arrowed(&bottom)? {
        let s = sign(&p);
        assert_eq!(
            s,
            if count_special_triangles(&p).is_multiple_of(2) {
                1
            } else {
                -1
            },
            "sign is determined by special-triangle parity"
        );
        if s > 0 {
            plus += 1;
        } else {
            minus += 1;
        }
        let w = match weight(&p, &spec)? {
            GfValue::Poly(poly) => poly,
            GfValue::Rational(_) => unreachable!("symbolic spec yields polynomials"),
        };
        sum = Some(match sum {
            None => {
                if s > 0 {
                    w
                } else {
                    w.neg()
                }
            }
            Some(acc) => {
                if s > 0 {
                    acc.add(&w)?
                } else {
                    acc.sub(&w)?
                }
            }
        });
    }
    println!("bottom row {bottom:?}: {plus} positive, {minus} negative patterns");

    let gf = sum.expect("at least one pattern");
    println!("signed generating function ({} terms):", gf.num_terms());
    println!("  {gf}");

    // Specializing the symbolic sum must agree with evaluating the
    // numeric weights directly. Variables are ordered t, u, v, w,
    // X_1, ..., X_n.
    let at_ones = WeightSpec::ones(bottom.len(), rat(-1));
    let mut direct = rat(0);
    for p in enumerate_arrowed(&bottom)? {
        let v = match weight(&p, &at_ones)? {
            GfValue::Rational(r) => r,
            GfValue::Poly(_) => unreachable!("numeric spec yields rationals"),
        };
        direct += rat(sign(&p)) * v;
    }
    let point = vec![rat(1), rat(1), rat(1), rat(-1), rat(1), rat(1)];
    let specialized = gf.eval(&point)?;
    println!("specialized at t = u = v = 1, w = -1, X = 1: {specialized}");
    assert_eq!(specialized, direct, "symbolic and numeric paths agree");

    Ok(())
}

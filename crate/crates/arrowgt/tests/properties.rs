//! Randomized property tests for the crate-wide algebraic invariants:
//! Pochhammer composition, binomial reflection, `h_k` reflection, Schur
//! straightening, Laurent-polynomial ring laws, determinant
//! multiplicativity, support-box stability, and agreement between the
//! symbolic and numeric generating-function paths.

use arrowgt::exactnum::{
    gen_binom, neg_one_pow, poch_ext, pow_i, rat, ratio, LaurentPoly, RatMatrix, Rational,
};
use arrowgt::hypersum::{sum1_box, sum1_over, triple_box, triple_sum_over, w0_box, w0_sum_over};
use arrowgt::patterns::{enumerate_arrowed, gf_bottom_row, is_valid_arrowed, GfValue, WeightSpec};
use arrowgt::symfunc::{h_ext, schur_ext};
use proptest::prelude::*;

/// A rational p/q with p and q drawn from the given ranges.
fn rational(
    num: std::ops::RangeInclusive<i64>,
    den: std::ops::RangeInclusive<i64>,
) -> BoxedStrategy<Rational> {
    (num, den).prop_map(|(p, q)| ratio(p, q)).boxed()
}

/// A non-integer rational; keeps every Pochhammer argument built from a
/// single such parameter off the integers, hence off all poles.
fn noninteger_rational() -> BoxedStrategy<Rational> {
    rational(-30..=30, 2..=7)
        .prop_filter("need a non-integer", |r| !r.is_integer())
        .boxed()
}

/// A non-integer rational whose double is also non-integer (odd
/// denominator), so arguments of the form `2n + c` cannot vanish.
fn odd_den_rational() -> BoxedStrategy<Rational> {
    (-30i64..=30, prop::sample::select(vec![3i64, 5, 7]))
        .prop_map(|(p, q)| ratio(p, q))
        .prop_filter("need a non-integer", |r| !r.is_integer())
        .boxed()
}

fn nonzero_rational() -> BoxedStrategy<Rational> {
    rational(-9..=9, 1..=5)
        .prop_filter("need a nonzero value", |x| *x != rat(0))
        .boxed()
}

proptest! {
    /// (x)_{a+b} = (x)_a (x+a)_b for all integer orders, at non-integer
    /// x where no extended symbol can pole.
    #[test]
    fn pochhammer_composes(x in noninteger_rational(), a in -6i64..=6, b in -6i64..=6) {
        let lhs = poch_ext(&x, a + b).expect("non-integer base cannot pole");
        let rhs = poch_ext(&x, a).expect("non-integer base cannot pole")
            * poch_ext(&(&x + rat(a)), b).expect("non-integer base cannot pole");
        prop_assert_eq!(lhs, rhs);
    }

    /// Upper negation: binom(p, q) = (-1)^q binom(q - p - 1, q).
    #[test]
    fn binomial_reflects(p in rational(-40..=40, 1..=6), q in 0i64..=8) {
        let lhs = gen_binom(&p, q);
        let rhs = neg_one_pow(q) * gen_binom(&(rat(q) - &p - rat(1)), q);
        prop_assert_eq!(lhs, rhs);
    }

    /// The h-reflection rule holds for every integer index, not only in
    /// the regime where it is the definition:
    /// h_k(X) = (-1)^{n+1} (prod X)^{-1} h_{-k-n}(X^{-1}).
    #[test]
    fn h_ext_reflects(
        k in -6i64..=6,
        xs in proptest::collection::vec(nonzero_rational(), 1..=4),
    ) {
        let n = xs.len() as i64;
        let inverses: Vec<Rational> = xs.iter().map(|x| rat(1) / x).collect();
        let product: Rational = xs.iter().fold(rat(1), |acc, x| acc * x);
        let lhs = h_ext(k, &xs).expect("nonzero coordinates");
        let rhs = neg_one_pow(n + 1) / product * h_ext(-k - n, &inverses).expect("nonzero");
        prop_assert_eq!(lhs, rhs);
    }

    /// Straightening: exchanging the two shifted column labels of a
    /// length-2 extended Schur polynomial flips its sign, and a repeated
    /// label collapses the polynomial to zero.
    #[test]
    fn schur_straightens(
        a in -4i64..=6,
        b in -4i64..=6,
        x1 in nonzero_rational(),
        x2 in nonzero_rational(),
    ) {
        prop_assume!(x1 != x2);
        let xs = [x1, x2];
        let direct = schur_ext(&[a, b], &xs).expect("distinct nonzero coordinates");
        let swapped = schur_ext(&[b + 1, a - 1], &xs).expect("distinct nonzero coordinates");
        prop_assert_eq!(direct, -swapped);
        let degenerate = schur_ext(&[a, a - 1], &xs).expect("distinct nonzero coordinates");
        prop_assert_eq!(degenerate, rat(0));
    }

    /// Laurent polynomials form a commutative ring and evaluation is a
    /// ring homomorphism; JSON serialization round-trips.
    #[test]
    fn laurent_ring_laws(
        exps in proptest::collection::vec((-3i64..=3, -3i64..=3), 1..=4),
        coeffs in proptest::collection::vec(-5i64..=5, 3),
        point in (1i64..=5, 1i64..=5),
    ) {
        let vars = vec!["x".to_string(), "y".to_string()];
        let mono = |e: &(i64, i64), c: i64| {
            LaurentPoly::monomial(vars.clone(), vec![e.0, e.1], rat(c)).expect("two exponents")
        };
        let p = exps.iter().fold(LaurentPoly::zero(vars.clone()), |acc, e| {
            acc.add(&mono(e, coeffs[0])).expect("same vars")
        });
        let q = mono(&exps[0], coeffs[1]);
        let r = mono(exps.last().expect("nonempty"), coeffs[2]);

        let left = p.add(&q).expect("same vars").mul(&r).expect("same vars");
        let right = p
            .mul(&r)
            .expect("same vars")
            .add(&q.mul(&r).expect("same vars"))
            .expect("same vars");
        prop_assert_eq!(&left.canonical_terms(), &right.canonical_terms());

        let at = [ratio(point.0, 2), ratio(2, point.1)];
        let eval_prod = p.mul(&q).expect("same vars").eval(&at).expect("nonzero point");
        let prod_eval = p.eval(&at).expect("nonzero point") * q.eval(&at).expect("nonzero point");
        prop_assert_eq!(eval_prod, prod_eval);

        let json = p.to_json();
        let back = LaurentPoly::from_json(vars.clone(), &json).expect("round trip");
        prop_assert_eq!(p.canonical_terms(), back.canonical_terms());
    }

    /// det(AB) = det(A) det(B) for exact rational matrices.
    #[test]
    fn determinant_is_multiplicative(
        a_entries in proptest::collection::vec(rational(-6..=6, 1..=3), 9),
        b_entries in proptest::collection::vec(rational(-6..=6, 1..=3), 9),
    ) {
        let a = RatMatrix::from_fn(3, 3, |i, j| a_entries[3 * i + j].clone());
        let b = RatMatrix::from_fn(3, 3, |i, j| b_entries[3 * i + j].clone());
        let prod = a.mul(&b).expect("conformal shapes");
        let det_prod = prod.det_exact().expect("square");
        let det_a = a.det_exact().expect("square");
        let det_b = b.det_exact().expect("square");
        prop_assert_eq!(det_prod, det_a * det_b);
    }

    /// Widening a support box past its soft edges never changes a sum:
    /// the summands genuinely vanish outside the boxes they declare.
    #[test]
    fn support_boxes_are_stable(
        n in noninteger_rational(),
        n_odd in odd_den_rational(),
        r in noninteger_rational(),
        i in 0i64..=3,
        j in 1i64..=4,
        t in 0i64..=2,
    ) {
        let bx = sum1_box(i, t);
        prop_assert_eq!(
            sum1_over(&n, &r, i, t, &bx).expect("in-box orders are nonnegative"),
            sum1_over(&n, &r, i, t, &bx.widen(2)).expect("in-box orders are nonnegative")
        );

        let (lo, hi) = (i.max(1).min(j), j);
        let bx = triple_box(lo, hi);
        prop_assert_eq!(
            triple_sum_over(&n, &r, lo, hi, &bx).expect("in-box orders are nonnegative"),
            triple_sum_over(&n, &r, lo, hi, &bx.widen(2)).expect("in-box orders are nonnegative")
        );

        let bx = w0_box(j);
        prop_assert_eq!(
            w0_sum_over(&n_odd, lo, j, &bx).expect("odd denominator keeps 2n non-integer"),
            w0_sum_over(&n_odd, lo, j, &bx.widen(2)).expect("odd denominator keeps 2n non-integer")
        );
    }

    /// Every enumerated arrowed pattern is admissible, and the symbolic
    /// generating function specializes to the numeric chain value.
    #[test]
    fn enumeration_and_gf_paths_agree(
        bottom in proptest::collection::vec(0i64..=3, 1..=2),
        w_num in -3i64..=3,
        xs_nums in proptest::collection::vec(1i64..=5, 2),
    ) {
        let mut bottom = bottom;
        bottom.sort_unstable();
        let n = bottom.len();

        let mut count = 0usize;
        for p in enumerate_arrowed(&bottom).expect("weakly increasing bottom") {
            prop_assert!(is_valid_arrowed(&p));
            count += 1;
        }
        prop_assert!(count > 0, "every bottom row admits at least one decoration");

        let xs: Vec<Rational> = (0..n).map(|i| ratio(xs_nums[i], 7)).collect();
        let w = ratio(w_num, 2);
        let spec = WeightSpec::numeric(rat(1), rat(1), rat(1), w.clone(), xs.clone())
            .expect("nonzero coordinates");
        let numeric = match gf_bottom_row(&bottom, &spec).expect("valid bottom") {
            GfValue::Rational(v) => v,
            GfValue::Poly(_) => unreachable!("numeric spec"),
        };
        let symbolic = match gf_bottom_row(&bottom, &WeightSpec::symbolic(n)).expect("valid bottom")
        {
            GfValue::Poly(p) => p,
            GfValue::Rational(_) => unreachable!("symbolic spec"),
        };
        // Variables are ordered t, u, v, w, X1, ..., Xn.
        let mut at = vec![rat(1), rat(1), rat(1), w];
        at.extend(xs);
        prop_assert_eq!(symbolic.eval(&at).expect("nonzero point"), numeric);
    }

    /// Powers with integer exponents obey x^{a+b} = x^a x^b away from 0.
    #[test]
    fn integer_powers_compose(
        x in nonzero_rational(),
        a in -5i64..=5,
        b in -5i64..=5,
    ) {
        let lhs = pow_i(&x, a + b).expect("nonzero base");
        let rhs = pow_i(&x, a).expect("nonzero base") * pow_i(&x, b).expect("nonzero base");
        prop_assert_eq!(lhs, rhs);
    }
}

//! Generating functions of arrowed patterns.
//!
//! The weight of a decorated pattern factors across rows once the
//! undecorated pattern is fixed: decorations interact only within a row
//! (admissibility pairs adjacent entries, the special-little-triangle
//! sign pairs adjacent entries under a fixed row above). Each row
//! therefore contributes an independent sum over its decorations, which a
//! 4-state transfer chain computes in linear time. [`gf_bottom_row`] runs
//! the chain over every GT pattern; [`gf_bottom_row_direct`] literally
//! sums [`weight`](super::weight) over the enumeration and is the
//! reference the chain is tested against.

use super::enumerate::{check_bottom, enumerate_arrowed};
use super::{ArrowedPattern, Decoration, GfValue, WeightSpec};
use crate::exactnum::{pow_i, LaurentPoly, Rational};
use crate::{Error, Result};
use itertools::Itertools;
use num::{One, Zero};

/// A commutative-ring evaluation context: rationals at a numeric point,
/// Laurent polynomials symbolically. Only what the weight computation
/// needs.
pub(super) trait Ctx {
    type R: Clone;

    fn zero(&self) -> Self::R;
    fn one(&self) -> Self::R;
    fn add(&self, a: &Self::R, b: &Self::R) -> Self::R;
    fn mul(&self, a: &Self::R, b: &Self::R) -> Self::R;
    fn neg(&self, a: &Self::R) -> Self::R;
    /// The marker for a decoration: `t`, `u`, `v`, or `w`.
    fn dec_factor(&self, d: Decoration) -> Self::R;
    /// `X_{row+1}^e` (rows 0-based here).
    fn x_pow(&self, row: usize, e: i64) -> Result<Self::R>;
}

/// Evaluation at a numeric point.
pub(super) struct NumericCtx {
    t: Rational,
    u: Rational,
    v: Rational,
    w: Rational,
    xs: Vec<Rational>,
}

impl NumericCtx {
    pub(super) fn new(spec: &WeightSpec) -> Result<Self> {
        match spec {
            WeightSpec::Numeric { t, u, v, w, xs } => Ok(NumericCtx {
                t: t.clone(),
                u: u.clone(),
                v: v.clone(),
                w: w.clone(),
                xs: xs.clone(),
            }),
            WeightSpec::Symbolic { .. } => {
                Err(Error::Domain("numeric context from symbolic spec".into()))
            }
        }
    }
}

impl Ctx for NumericCtx {
    type R = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn dec_factor(&self, d: Decoration) -> Rational {
        match d {
            Decoration::None => self.t.clone(),
            Decoration::Ne => self.u.clone(),
            Decoration::Nw => self.v.clone(),
            Decoration::Both => self.w.clone(),
        }
    }
    fn x_pow(&self, row: usize, e: i64) -> Result<Rational> {
        pow_i(&self.xs[row], e)
    }
}

/// Fully symbolic evaluation over `t, u, v, w, X1, ..., Xn`.
pub(super) struct SymbolicCtx {
    vars: Vec<String>,
}

impl SymbolicCtx {
    pub(super) fn new(n: usize) -> Self {
        SymbolicCtx {
            vars: WeightSpec::symbolic_vars(n),
        }
    }
}

impl Ctx for SymbolicCtx {
    type R = LaurentPoly;

    fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero(self.vars.clone())
    }
    fn one(&self) -> LaurentPoly {
        LaurentPoly::constant(self.vars.clone(), Rational::one())
    }
    fn add(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a.add(b).expect("context polynomials share variables")
    }
    fn mul(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a.mul(b).expect("context polynomials share variables")
    }
    fn neg(&self, a: &LaurentPoly) -> LaurentPoly {
        a.neg()
    }
    fn dec_factor(&self, d: Decoration) -> LaurentPoly {
        let idx = match d {
            Decoration::None => 0,
            Decoration::Ne => 1,
            Decoration::Nw => 2,
            Decoration::Both => 3,
        };
        LaurentPoly::var_pow(self.vars.clone(), idx, 1)
    }
    fn x_pow(&self, row: usize, e: i64) -> Result<LaurentPoly> {
        Ok(LaurentPoly::var_pow(self.vars.clone(), 4 + row, e))
    }
}

/// The `X`-exponent shift a decoration contributes to its row.
fn x_shift(d: Decoration) -> i64 {
    match d {
        Decoration::Ne => 1,
        Decoration::Nw => -1,
        Decoration::None | Decoration::Both => 0,
    }
}

/// The signed weight of one admissible pattern in an arbitrary context.
pub(super) fn weight_in<C: Ctx>(p: &ArrowedPattern, ctx: &C) -> Result<C::R> {
    let rows = p.base().rows();
    let decor = p.decor();
    let mut acc = ctx.one();
    let mut prev_sum = 0i64;
    for (i, row) in rows.iter().enumerate() {
        let mut exponent = row.iter().sum::<i64>() - prev_sum;
        prev_sum += exponent;
        for &d in &decor[i] {
            acc = ctx.mul(&acc, &ctx.dec_factor(d));
            exponent += x_shift(d);
        }
        acc = ctx.mul(&acc, &ctx.x_pow(i, exponent)?);
    }
    if super::count_special_triangles(p) % 2 == 1 {
        acc = ctx.neg(&acc);
    }
    Ok(acc)
}

/// Sums, over all admissible decorations of row `row` (given the row
/// `above` it, when present), the product of per-entry factors
/// `marker(d) * X_row^{x_shift(d)}`, with a factor `-1` for every special
/// little triangle formed under `above`.
fn row_chain<C: Ctx>(ctx: &C, row_idx: usize, row: &[i64], above: Option<&[i64]>) -> Result<C::R> {
    let k = row.len();
    let eq_ne = |j: usize| above.is_some_and(|a| j < k - 1 && row[j] == a[j]);
    let eq_nw = |j: usize| above.is_some_and(|a| j >= 1 && row[j] == a[j - 1]);

    let fac: Vec<C::R> = Decoration::ALL
        .iter()
        .map(|&d| Ok(ctx.mul(&ctx.dec_factor(d), &ctx.x_pow(row_idx, x_shift(d))?)))
        .collect::<Result<_>>()?;

    let mut cur = fac.clone();
    for j in 1..k {
        let pair_equal = row[j - 1] == row[j];
        // Top of a would-be special little triangle over (j-1, j).
        let slt_top = above.is_some_and(|a| pair_equal && a[j - 1] == row[j]);
        let mut next = vec![ctx.zero(); 4];
        for (di, &d) in Decoration::ALL.iter().enumerate() {
            for (li, &left) in Decoration::ALL.iter().enumerate() {
                // Left entry's NE clause.
                if left.carries_ne() && eq_ne(j - 1) && !(pair_equal && d.carries_nw()) {
                    continue;
                }
                // This entry's NW clause.
                if d.carries_nw() && eq_nw(j) && !(pair_equal && left.carries_ne()) {
                    continue;
                }
                let mut term = ctx.mul(&cur[li], &fac[di]);
                if slt_top && left.carries_ne() && d.carries_nw() {
                    term = ctx.neg(&term);
                }
                next[di] = ctx.add(&next[di], &term);
            }
        }
        cur = next;
    }
    let mut total = ctx.zero();
    for v in &cur {
        total = ctx.add(&total, v);
    }
    Ok(total)
}

/// Generating function over every GT pattern with the given bottom row:
/// recursively builds the rows above, multiplying in each row's chain
/// value and `X`-row-sum factor as it goes.
fn gf_in<C: Ctx>(ctx: &C, bottom: &[i64]) -> Result<C::R> {
    fn go<C: Ctx>(ctx: &C, row: &[i64], r: usize) -> Result<C::R> {
        if r == 0 {
            let chain = row_chain(ctx, 0, row, None)?;
            return Ok(ctx.mul(&chain, &ctx.x_pow(0, row[0])?));
        }
        let mut acc = ctx.zero();
        let ranges = (0..r).map(|j| row[j]..=row[j + 1]);
        for above in ranges.multi_cartesian_product() {
            let chain = row_chain(ctx, r, row, Some(&above))?;
            let diff = row.iter().sum::<i64>() - above.iter().sum::<i64>();
            let here = ctx.mul(&chain, &ctx.x_pow(r, diff)?);
            let rest = go(ctx, &above, r - 1)?;
            acc = ctx.add(&acc, &ctx.mul(&here, &rest));
        }
        Ok(acc)
    }
    go(ctx, bottom, bottom.len() - 1)
}

/// The generating function of arrowed patterns with a fixed bottom row:
/// the sum of [`weight`](super::weight) over every admissible decorated
/// pattern, evaluated per `spec`.
///
/// Computed by a per-row transfer chain; no pattern set is materialized.
///
/// # Errors
///
/// Returns [`Error::Domain`] if `bottom` is not weakly increasing or
/// [`Error::Shape`] if `spec.n()` differs from `bottom.len()`.
pub fn gf_bottom_row(bottom: &[i64], spec: &WeightSpec) -> Result<GfValue> {
    check_bottom(bottom)?;
    if spec.n() != bottom.len() {
        return Err(Error::Shape(format!(
            "weight spec is for {} rows, bottom row has {}",
            spec.n(),
            bottom.len()
        )));
    }
    match spec {
        WeightSpec::Numeric { .. } => {
            let ctx = NumericCtx::new(spec)?;
            Ok(GfValue::Rational(gf_in(&ctx, bottom)?))
        }
        WeightSpec::Symbolic { n } => {
            let ctx = SymbolicCtx::new(*n);
            Ok(GfValue::Poly(gf_in(&ctx, bottom)?))
        }
    }
}

/// Brute-force reference for [`gf_bottom_row`]: enumerates every
/// admissible decorated pattern and sums its weight.
///
/// # Errors
///
/// As for [`gf_bottom_row`].
pub fn gf_bottom_row_direct(bottom: &[i64], spec: &WeightSpec) -> Result<GfValue> {
    check_bottom(bottom)?;
    if spec.n() != bottom.len() {
        return Err(Error::Shape(format!(
            "weight spec is for {} rows, bottom row has {}",
            spec.n(),
            bottom.len()
        )));
    }
    match spec {
        WeightSpec::Numeric { .. } => {
            let ctx = NumericCtx::new(spec)?;
            let mut acc = ctx.zero();
            for p in enumerate_arrowed(bottom)? {
                acc = ctx.add(&acc, &weight_in(&p, &ctx)?);
            }
            Ok(GfValue::Rational(acc))
        }
        WeightSpec::Symbolic { n } => {
            let ctx = SymbolicCtx::new(*n);
            let mut acc = ctx.zero();
            for p in enumerate_arrowed(bottom)? {
                acc = ctx.add(&acc, &weight_in(&p, &ctx)?);
            }
            Ok(GfValue::Poly(acc))
        }
    }
}

/// The total generating function with `n` rows and bottom entries in
/// `{0, ..., m}`: the sum of [`gf_bottom_row`] over all strictly
/// increasing bottom rows `0 <= k_1 < ... < k_n <= m`.
///
/// # Errors
///
/// Returns [`Error::Domain`] if `m + 1 < n` (no strictly increasing
/// bottom row exists) and [`Error::Shape`] on a spec arity mismatch.
pub fn signed_total(n: usize, m: i64, spec: &WeightSpec) -> Result<GfValue> {
    if n == 0 || (m + 1) < n as i64 {
        return Err(Error::Domain(format!(
            "no strictly increasing bottom row of length {n} fits in 0..={m}"
        )));
    }
    if spec.n() != n {
        return Err(Error::Shape(format!(
            "weight spec is for {} rows, requested {n}",
            spec.n()
        )));
    }
    let mut rational_acc = Rational::zero();
    let mut poly_acc = LaurentPoly::zero(WeightSpec::symbolic_vars(n));
    let mut symbolic = false;
    for bottom in (0..=m).combinations(n) {
        match gf_bottom_row(&bottom, spec)? {
            GfValue::Rational(r) => rational_acc += r,
            GfValue::Poly(p) => {
                poly_acc = poly_acc.add(&p)?;
                symbolic = true;
            }
        }
    }
    Ok(if symbolic {
        GfValue::Poly(poly_acc)
    } else {
        GfValue::Rational(rational_acc)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ratio};
    use crate::patterns::GTPattern;

    fn sym(n: usize) -> WeightSpec {
        WeightSpec::symbolic(n)
    }

    #[test]
    fn single_entry_gf() {
        // Bottom (k): decorations contribute t X^k + u X^{k+1} + v X^{k-1} + w X^k.
        let gf = gf_bottom_row(&[0], &sym(1)).unwrap().into_poly().unwrap();
        let vars = WeightSpec::symbolic_vars(1);
        let expect = LaurentPoly::monomial(vars.clone(), vec![1, 0, 0, 0, 0], rat(1))
            .unwrap()
            .add(&LaurentPoly::monomial(vars.clone(), vec![0, 1, 0, 0, 1], rat(1)).unwrap())
            .unwrap()
            .add(&LaurentPoly::monomial(vars.clone(), vec![0, 0, 1, 0, -1], rat(1)).unwrap())
            .unwrap()
            .add(&LaurentPoly::monomial(vars, vec![0, 0, 0, 1, 0], rat(1)).unwrap())
            .unwrap();
        assert_eq!(gf, expect);
    }

    #[test]
    fn chain_matches_direct_sum_symbolically() {
        for bottom in [
            vec![0, 1],
            vec![0, 0],
            vec![0, 2],
            vec![0, 1, 2],
            vec![0, 0, 1],
            vec![1, 1, 1],
        ] {
            let spec = sym(bottom.len());
            let fast = gf_bottom_row(&bottom, &spec).unwrap();
            let slow = gf_bottom_row_direct(&bottom, &spec).unwrap();
            assert_eq!(fast, slow, "bottom {bottom:?}");
        }
    }

    #[test]
    fn chain_matches_direct_sum_numerically() {
        let spec = WeightSpec::numeric(
            ratio(1, 2),
            rat(2),
            ratio(-1, 3),
            rat(3),
            vec![ratio(2, 3), rat(-2), ratio(5, 7)],
        )
        .unwrap();
        let bottom = [0, 1, 3];
        let fast = gf_bottom_row(&bottom, &spec).unwrap();
        let slow = gf_bottom_row_direct(&bottom, &spec).unwrap();
        assert_eq!(fast, slow);
    }

    #[test]
    fn counts_at_all_ones() {
        // At t=u=v=w=1, X=1 the generating function is the *signed* count.
        // Bottom (0,1) admits no special little triangles (no in-row equal
        // pair), so the signed count is the plain count, 64. Bottom (2,2)
        // admits them: of the 8 admissible bottom-pair decorations, 4 carry
        // a triangle and cancel the other 4 exactly.
        let spec = WeightSpec::ones(2, rat(1));
        assert_eq!(
            gf_bottom_row(&[0, 1], &spec)
                .unwrap()
                .into_rational()
                .unwrap(),
            rat(64)
        );
        assert_eq!(
            gf_bottom_row(&[2, 2], &spec)
                .unwrap()
                .into_rational()
                .unwrap(),
            rat(0)
        );
    }

    #[test]
    fn signs_matter_at_negative_w() {
        // Bottom (k, k): patterns with special little triangles flip sign.
        let spec = WeightSpec::ones(2, rat(-1));
        let signed = gf_bottom_row(&[2, 2], &spec)
            .unwrap()
            .into_rational()
            .unwrap();
        let direct: Rational = enumerate_arrowed(&[2, 2])
            .unwrap()
            .map(|p| {
                crate::patterns::weight(&p, &spec)
                    .unwrap()
                    .into_rational()
                    .unwrap()
            })
            .sum();
        assert_eq!(signed, direct);
    }

    #[test]
    fn symbolic_evaluates_to_numeric() {
        let bottom = [0, 1, 3];
        let poly = gf_bottom_row(&bottom, &sym(3))
            .unwrap()
            .into_poly()
            .unwrap();
        let point = [
            ratio(1, 2),
            rat(2),
            ratio(-1, 3),
            rat(3),
            ratio(2, 3),
            rat(-2),
            ratio(5, 7),
        ];
        let spec = WeightSpec::numeric(
            point[0].clone(),
            point[1].clone(),
            point[2].clone(),
            point[3].clone(),
            point[4..].to_vec(),
        )
        .unwrap();
        let direct = gf_bottom_row(&bottom, &spec)
            .unwrap()
            .into_rational()
            .unwrap();
        assert_eq!(poly.eval(&point).unwrap(), direct);
    }

    #[test]
    fn worked_example_weight() {
        // A 6-row pattern whose weight is the single monomial
        // t^6 u^6 v^4 w^5 X1^6 X2^5 X3^6 X4^7 X5^6 X6^8 with sign +1.
        use Decoration::{Both, Ne, None as No, Nw};
        let base = GTPattern::new(vec![
            vec![5],
            vec![5, 7],
            vec![4, 6, 7],
            vec![4, 6, 6, 7],
            vec![4, 4, 6, 7, 9],
            vec![2, 4, 5, 7, 8, 10],
        ])
        .unwrap();
        let decor = vec![
            vec![Ne],
            vec![Nw, Nw],
            vec![Ne, Both, No],
            vec![No, Ne, Both, No],
            vec![Both, Nw, No, No, Both],
            vec![Ne, No, Ne, Nw, Both, Ne],
        ];
        let p = ArrowedPattern::new(base, decor).unwrap();
        assert!(crate::patterns::is_valid_arrowed(&p));
        assert_eq!(crate::patterns::count_special_triangles(&p), 2);
        assert_eq!(crate::patterns::sign(&p), 1);

        let w = crate::patterns::weight(&p, &sym(6))
            .unwrap()
            .into_poly()
            .unwrap();
        assert_eq!(w.num_terms(), 1);
        assert_eq!(w.coeff(&[6, 6, 4, 5, 6, 5, 6, 7, 6, 8]), rat(1));
    }

    #[test]
    fn signed_total_small() {
        // n=1, m=1: bottoms (0) and (1); each contributes t + u X + v X^{-1} + w
        // at the numeric point, with X-powers shifted by the bottom value.
        let spec = WeightSpec::ones(1, rat(-1));
        assert_eq!(
            signed_total(1, 1, &spec).unwrap().into_rational().unwrap(),
            rat(4)
        );
        assert!(signed_total(2, 0, &spec).is_err());
    }
}

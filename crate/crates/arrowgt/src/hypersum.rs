//! Hypergeometric summands, multi-sums, and their recursions.
//!
//! The LU-type identities in [`crate::lu`] reduce, after hypergeometric
//! transformations, to identities for finite multi-sums of Pochhammer
//! products. This module implements those summands and sums exactly:
//!
//! - [`f1`] and its double sum [`g1`] (which vanishes identically),
//!   with the shift recursion checks [`f1_rec_check`], [`g1_rec_check`],
//!   and the telescoped three-term recursion [`rec4_check`];
//! - [`f3`] and its triple sum [`triple_sum`] with closed form
//!   [`triple_rhs`], the summand recursion [`rec3_check`], and the
//!   auxiliary double sum [`aux_sum_check`] / [`aux_inner_t_sum`];
//! - [`f4`] and its triple sum [`w0_sum`] (= [`g4`]) with closed form
//!   [`w0_rhs`], plus the telescoped recursions [`rec_ii_simp_check`],
//!   [`rec_ij_simp_check`] and the vanishing combination
//!   [`cr_vanishing_check`];
//! - classical summation and transformation rules evaluated by direct
//!   terminating summation: [`chu_vandermonde`] and
//!   [`hyp_transform_check`] over [`pfq_terminating`].
//!
//! Summation ranges are never hand-coded per call site: each sum carries
//! a [`SupportBox`] inferred from the vanishing factors of its summand
//! (`1/(1)_m = 0` for `m < 0`, and `(1-k)_s = 0` for `s >= k >= 1`).
//! Bounds that come from a factor are marked soft and may be widened
//! without changing the sum — a property the tests exercise — while
//! bounds that are part of a sum's definition (such as `k <= j` in the
//! triple sum) are marked hard.
//!
//! Summands short-circuit to exact zero whenever one of their
//! reciprocal-factorial factors vanishes, so padded evaluation points
//! never touch the remaining Pochhammer factors; genuine poles (a zero
//! denominator inside the support) surface as [`Error::Pole`].

use crate::exactnum::{
    factorial, inv_factorial, neg_one_pow, poch_ext, pow_i, rat, ratio, serialize_rational,
    Rational,
};
use crate::{Error, Result};
use itertools::Itertools;
use num::{One, Zero};
use serde::Serialize;

/// A parameter point for the summands in this module.
///
/// `n` and `r` are exact rationals (the "polynomial parameter" and the
/// "rational-function parameter" of the identities); the remaining
/// coordinates are integers. Each summand uses the subset it needs.
#[derive(Clone, Debug, Serialize)]
pub struct ParamPoint {
    /// Polynomial parameter.
    #[serde(serialize_with = "serialize_rational")]
    pub n: Rational,
    /// Rational-function parameter.
    #[serde(serialize_with = "serialize_rational")]
    pub r: Rational,
    /// Row-type index.
    pub i: i64,
    /// Column-type index.
    pub j: i64,
    /// Outer summation index.
    pub k: i64,
    /// First inner summation index.
    pub s: i64,
    /// Second inner summation index.
    pub t: i64,
}

impl ParamPoint {
    /// Builds a point without any pole check.
    pub fn new(n: Rational, r: Rational, i: i64, j: i64, k: i64, s: i64, t: i64) -> Self {
        ParamPoint {
            n,
            r,
            i,
            j,
            k,
            s,
            t,
        }
    }

    /// Builds a point and verifies it is pole-free for [`f1`].
    pub fn for_f1(n: Rational, r: Rational, i: i64, k: i64, s: i64, t: i64) -> Result<Self> {
        let point = ParamPoint::new(n, r, i, 0, k, s, t);
        f1(&point.n, &point.r, point.i, point.k, point.s, point.t)?;
        Ok(point)
    }

    /// Builds a point and verifies it is pole-free for [`f3`].
    pub fn for_f3(
        n: Rational,
        r: Rational,
        i: i64,
        j: i64,
        k: i64,
        s: i64,
        t: i64,
    ) -> Result<Self> {
        let point = ParamPoint::new(n, r, i, j, k, s, t);
        f3(
            &point.n, &point.r, point.i, point.j, point.k, point.s, point.t,
        )?;
        Ok(point)
    }

    /// Builds a point and verifies it is pole-free for [`f4`].
    pub fn for_f4(n: Rational, i: i64, j: i64, k: i64, s: i64, t: i64) -> Result<Self> {
        let point = ParamPoint::new(n, Rational::zero(), i, j, k, s, t);
        f4(&point.n, point.i, point.j, point.k, point.s, point.t)?;
        Ok(point)
    }
}

/// An inclusive integer range for one summation variable, with hardness
/// flags: a soft bound is implied by a vanishing factor of the summand
/// and can be widened freely; a hard bound is part of the sum's
/// definition.
#[derive(Clone, Copy, Debug)]
pub struct VarBound {
    /// Variable name, for diagnostics.
    pub name: &'static str,
    /// Inclusive lower bound.
    pub lo: i64,
    /// Inclusive upper bound.
    pub hi: i64,
    /// The lower bound is definitional, not inferred.
    pub lo_hard: bool,
    /// The upper bound is definitional, not inferred.
    pub hi_hard: bool,
}

/// The rectangular summation region of a multi-sum.
///
/// The defining invariant: the summand is exactly zero at every integer
/// point outside the box whose coordinates still satisfy the hard
/// bounds. [`SupportBox::widen`] therefore never changes the sum.
#[derive(Clone, Debug)]
pub struct SupportBox {
    /// One bound per summation variable, outermost first.
    pub bounds: Vec<VarBound>,
}

impl SupportBox {
    /// Returns a copy with every soft bound pushed outward by `pad`.
    pub fn widen(&self, pad: i64) -> SupportBox {
        SupportBox {
            bounds: self
                .bounds
                .iter()
                .map(|b| VarBound {
                    lo: if b.lo_hard { b.lo } else { b.lo - pad },
                    hi: if b.hi_hard { b.hi } else { b.hi + pad },
                    ..*b
                })
                .collect(),
        }
    }

    /// True when some range is empty (the sum is zero).
    pub fn is_empty(&self) -> bool {
        self.bounds.iter().any(|b| b.lo > b.hi)
    }

    /// Iterates over all integer points of the box.
    pub fn points(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        self.bounds
            .iter()
            .map(|b| b.lo..=b.hi)
            .multi_cartesian_product()
    }
}

fn soft(name: &'static str, lo: i64, hi: i64) -> VarBound {
    VarBound {
        name,
        lo,
        hi,
        lo_hard: false,
        hi_hard: false,
    }
}

/// Sums a summand over a box, propagating pole errors.
fn sum_over<F>(bx: &SupportBox, f: F) -> Result<Rational>
where
    F: Fn(&[i64]) -> Result<Rational>,
{
    let mut total = Rational::zero();
    for point in bx.points() {
        total += f(&point)?;
    }
    Ok(total)
}

/// The double-sum summand
///
/// ```text
/// f1 = (-1)^{k+s} 2^{-k-s} (k-n)_s (-r)_{k-1+2t}
///      (-1/2-i+2k-n/2-r/2+s)_{2i-k-s} / [ (2i-k-s)! s! (k-1-2t)! ]
/// ```
///
/// with reciprocal factorials treated as zero at negative arguments.
///
/// # Errors
///
/// Returns [`Error::Pole`] when `(-r)_{k-1+2t}` has negative order and a
/// zero factor (only possible at non-generic integer `r`).
pub fn f1(n: &Rational, r: &Rational, i: i64, k: i64, s: i64, t: i64) -> Result<Rational> {
    let support = inv_factorial(2 * i - k - s) * inv_factorial(s) * inv_factorial(k - 1 - 2 * t);
    if support.is_zero() {
        return Ok(Rational::zero());
    }
    Ok(neg_one_pow(k + s)
        * pow_i(&rat(2), -k - s)?
        * poch_ext(&(rat(k) - n), s)?
        * poch_ext(&(-r), k - 1 + 2 * t)?
        * poch_ext(
            &(ratio(-1, 2) - rat(i) + rat(2 * k) - n / rat(2) - r / rat(2) + rat(s)),
            2 * i - k - s,
        )?
        * support)
}

/// Support box of the `(k, s)` double sum of [`f1`]: `k` from the
/// factor `1/(k-1-2t)!`, `s >= 0`, and both capped by `1/(2i-k-s)!`.
pub fn sum1_box(i: i64, t: i64) -> SupportBox {
    SupportBox {
        bounds: vec![soft("k", 1 + 2 * t, 2 * i), soft("s", 0, 2 * i - 1 - 2 * t)],
    }
}

/// Sums [`f1`] over an explicit box (exposed for support-box
/// validation).
pub fn sum1_over(n: &Rational, r: &Rational, i: i64, t: i64, bx: &SupportBox) -> Result<Rational> {
    sum_over(bx, |p| f1(n, r, i, p[0], p[1], t))
}

/// The double sum `g1(n, r, i, t) = sum_{k,s} f1`, which the theory
/// says is identically zero.
pub fn g1(n: &Rational, r: &Rational, i: i64, t: i64) -> Result<Rational> {
    sum1_over(n, r, i, t, &sum1_box(i, t))
}

/// The vanishing double sum: returns `g1(n, r, i, t)`; expected `0`.
pub fn sum1_check(n: &Rational, r: &Rational, i: i64, t: i64) -> Result<Rational> {
    g1(n, r, i, t)
}

/// Checks the summand shift identity
/// `f1(n+6, r+12, i+3, k+6, s, t+3) = (1+r)_12 / 64 * f1(n, r, i, k, s, t)`.
pub fn f1_rec_check(n: &Rational, r: &Rational, i: i64, k: i64, s: i64, t: i64) -> Result<bool> {
    let lhs = f1(&(n + rat(6)), &(r + rat(12)), i + 3, k + 6, s, t + 3)?;
    let rhs = poch_ext(&(r + rat(1)), 12)? / rat(64) * f1(n, r, i, k, s, t)?;
    Ok(lhs == rhs)
}

/// Checks the summed shift identity
/// `g1(n+6, r+12, i+3, t+3) = (1+r)_12 / 64 * g1(n, r, i, t)`.
pub fn g1_rec_check(n: &Rational, r: &Rational, i: i64, t: i64) -> Result<bool> {
    let lhs = g1(&(n + rat(6)), &(r + rat(12)), i + 3, t + 3)?;
    let rhs = poch_ext(&(r + rat(1)), 12)? / rat(64) * g1(n, r, i, t)?;
    Ok(lhs == rhs)
}

/// The coefficients of the telescoped three-term recursion for
/// `g1(n, 0, ., .)`.
fn rec4_coeffs(n: &Rational, i: i64, t: i64) -> (Rational, Rational, Rational) {
    let p1 = rat(4)
        * (rat(2 * i) + n - rat(1))
        * rat(2 * i - 2 * t + 1)
        * (rat(4 * i * i + 32 * i * t + 8 * i + 8 * t + 3) + n * rat(4 * i - 16 * t - 8) + n * n);
    let p2 = rat(-64);
    let p3 = (rat(2 * i + 4 * t + 1) - n)
        * (rat(
            8 * i * i * i + 32 * i * i * t + 12 * i * i - 128 * i * t * t - 48 * i * t - 2 * i
                + 256 * t * t * t
                + 192 * t * t
                + 16 * t
                - 3,
        ) + n * rat(12 * i * i - 32 * i * t - 12 * i + 64 * t * t + 72 * t + 11)
            + n * n * rat(6 * i - 24 * t - 9)
            + n * n * n);
    (p1, p2, p3)
}

/// The value of the three-term combination
/// `p1 g1(n,0,i+1,t) + p2 g1(n,0,i,t+1) + p3 g1(n,0,i,t)`; expected `0`.
pub fn rec4_combo(n: &Rational, i: i64, t: i64) -> Result<Rational> {
    let (p1, p2, p3) = rec4_coeffs(n, i, t);
    let zero = Rational::zero();
    Ok(p1 * g1(n, &zero, i + 1, t)? + p2 * g1(n, &zero, i, t + 1)? + p3 * g1(n, &zero, i, t)?)
}

/// Checks that [`rec4_combo`] vanishes.
pub fn rec4_check(n: &Rational, i: i64, t: i64) -> Result<bool> {
    Ok(rec4_combo(n, i, t)?.is_zero())
}

/// The triple-sum summand
///
/// ```text
/// f3 = (-1)^{1+k+s+t} 2^{2-k-s} (k-n)_s (-r)_{k-1+2t}
///      (-1/2-i+2k-n/2-r/2+s)_{2i-k-s} (2-2j+r)_{j-1-2t} (j-t)_{j-t-1}
///      / [ (2i-k-s)! s! (k-1-2t)! t! ]
/// ```
///
/// # Errors
///
/// Returns [`Error::Pole`] when a negative-order Pochhammer factor hits
/// a zero (non-generic `n` or `r` only).
pub fn f3(n: &Rational, r: &Rational, i: i64, j: i64, k: i64, s: i64, t: i64) -> Result<Rational> {
    let support = inv_factorial(2 * i - k - s)
        * inv_factorial(s)
        * inv_factorial(k - 1 - 2 * t)
        * inv_factorial(t);
    if support.is_zero() {
        return Ok(Rational::zero());
    }
    Ok(neg_one_pow(1 + k + s + t)
        * pow_i(&rat(2), 2 - k - s)?
        * poch_ext(&(rat(k) - n), s)?
        * poch_ext(&(-r), k - 1 + 2 * t)?
        * poch_ext(
            &(ratio(-1, 2) - rat(i) + rat(2 * k) - n / rat(2) - r / rat(2) + rat(s)),
            2 * i - k - s,
        )?
        * poch_ext(&(rat(2 - 2 * j) + r), j - 1 - 2 * t)?
        * poch_ext(&rat(j - t), j - t - 1)?
        * support)
}

/// Support box of the triple sum: `1 <= k <= j` with the upper bound
/// definitional, `s` and `t` bounded by reciprocal-factorial factors.
pub fn triple_box(i: i64, j: i64) -> SupportBox {
    SupportBox {
        bounds: vec![
            VarBound {
                name: "k",
                lo: 1,
                hi: j,
                lo_hard: false,
                hi_hard: true,
            },
            soft("s", 0, 2 * i - 1),
            soft("t", 0, (j - 1).div_euclid(2)),
        ],
    }
}

/// Sums [`f3`] over an explicit box (exposed for support-box
/// validation).
pub fn triple_sum_over(
    n: &Rational,
    r: &Rational,
    i: i64,
    j: i64,
    bx: &SupportBox,
) -> Result<Rational> {
    sum_over(bx, |p| f3(n, r, i, j, p[0], p[1], p[2]))
}

/// The triple sum `sum_{1<=k<=j, s, t} f3(n, r, i, j, k, s, t)`.
pub fn triple_sum(n: &Rational, r: &Rational, i: i64, j: i64) -> Result<Rational> {
    triple_sum_over(n, r, i, j, &triple_box(i, j))
}

/// The closed form the triple sum must equal:
/// `(-r)_{2j-1} (-1+3j-r)_{j-1} / (j)_j` for `0 < i = j`, and `0` for
/// `0 < i < j`.
pub fn triple_rhs(r: &Rational, i: i64, j: i64) -> Result<Rational> {
    if i <= 0 || i > j {
        return Err(Error::Domain(format!(
            "closed form stated for 0 < i <= j, got i = {i}, j = {j}"
        )));
    }
    if i < j {
        return Ok(Rational::zero());
    }
    Ok(
        poch_ext(&(-r), 2 * j - 1)? * poch_ext(&(rat(3 * j - 1) - r), j - 1)?
            / poch_ext(&rat(j), j)?,
    )
}

/// Checks the summand recursion
///
/// ```text
/// (3j-r-2)(r+1)_4 f3(n,r,i,j,k,s,t) =
///   2(2j+1)(2-2j+r)_2 f3(n+2,r+4,i+1,j+1,k+2,s,t+1)
///   + (j-r-3) f3(n+2,r+4,i+1,j+2,k+2,s,t+1)
/// ```
///
/// which holds at every pole-free point with `t != j`.
pub fn rec3_check(
    n: &Rational,
    r: &Rational,
    i: i64,
    j: i64,
    k: i64,
    s: i64,
    t: i64,
) -> Result<bool> {
    let lhs = (rat(3 * j - 2) - r) * poch_ext(&(r + rat(1)), 4)? * f3(n, r, i, j, k, s, t)?;
    let n2 = n + rat(2);
    let r4 = r + rat(4);
    let rhs = rat(2 * (2 * j + 1))
        * poch_ext(&(rat(2 - 2 * j) + r), 2)?
        * f3(&n2, &r4, i + 1, j + 1, k + 2, s, t + 1)?
        + (rat(j - 3) - r) * f3(&n2, &r4, i + 1, j + 2, k + 2, s, t + 1)?;
    Ok(lhs == rhs)
}

/// Support box of the auxiliary double sum (the `k = j+1` slice of the
/// triple-sum summand).
pub fn aux_box(i: i64, j: i64) -> SupportBox {
    SupportBox {
        bounds: vec![soft("s", 0, 2 * i - j - 1), soft("t", 0, j.div_euclid(2))],
    }
}

/// The auxiliary double sum `sum_{s,t} f3(n, r, i, j, j+1, s, t)`;
/// expected `0` for `i >= 0`, `j >= 2` (trivially so when the `s`-range
/// is empty).
pub fn aux_sum_check(n: &Rational, r: &Rational, i: i64, j: i64) -> Result<Rational> {
    sum_over(&aux_box(i, j), |p| f3(n, r, i, j, j + 1, p[0], p[1]))
}

/// The inner `t`-only part of the auxiliary sum,
///
/// ```text
/// sum_t (-1)^t (-r)_{j+2t} (2-2j+r)_{j-1-2t} (j-t)_{j-t-1}
///       / [ (j-2t)! t! ]
/// ```
///
/// which already vanishes on its own; expected `0`.
pub fn aux_inner_t_sum(r: &Rational, j: i64) -> Result<Rational> {
    let mut total = Rational::zero();
    for t in 0..=j.div_euclid(2) {
        let support = inv_factorial(j - 2 * t) * inv_factorial(t);
        if support.is_zero() {
            continue;
        }
        total += neg_one_pow(t)
            * poch_ext(&(-r), j + 2 * t)?
            * poch_ext(&(rat(2 - 2 * j) + r), j - 1 - 2 * t)?
            * poch_ext(&rat(j - t), j - t - 1)?
            * support;
    }
    Ok(total)
}

/// A terminating hypergeometric series
/// `sum_{k=0}^{terms} prod_i (a_i)_k / prod_j (b_j)_k * z^k / k!`.
///
/// The caller supplies the terminating upper parameter (a nonpositive
/// integer) inside `uppers` and the matching `terms` bound.
///
/// # Errors
///
/// Returns [`Error::Pole`] if a lower parameter hits a nonpositive
/// integer within the summation range, and [`Error::Domain`] for
/// negative `terms`.
pub fn pfq_terminating(
    uppers: &[Rational],
    lowers: &[Rational],
    z: &Rational,
    terms: i64,
) -> Result<Rational> {
    if terms < 0 {
        return Err(Error::Domain(format!("negative term count {terms}")));
    }
    let mut sum = Rational::zero();
    let mut term = Rational::one();
    for k in 0..=terms {
        sum += &term;
        if k == terms {
            break;
        }
        for a in uppers {
            term *= a + rat(k);
        }
        for b in lowers {
            let factor = b + rat(k);
            if factor.is_zero() {
                return Err(Error::Pole(format!(
                    "lower parameter {b} reaches zero at term {}",
                    k + 1
                )));
            }
            term /= factor;
        }
        term *= z;
        term /= rat(k + 1);
    }
    Ok(sum)
}

/// The Chu–Vandermonde evaluation: returns the pair
/// `( 2F1(a, -nn; c; 1) by direct summation, (c-a)_nn / (c)_nn )`,
/// whose components must be equal.
///
/// # Errors
///
/// Returns [`Error::Pole`] if `(c)_nn = 0` or the series poles, and
/// [`Error::Domain`] for `nn < 0`.
pub fn chu_vandermonde(a: &Rational, c: &Rational, nn: i64) -> Result<(Rational, Rational)> {
    let lhs = pfq_terminating(&[a.clone(), rat(-nn)], std::slice::from_ref(c), &rat(1), nn)?;
    let den = poch_ext(c, nn)?;
    if den.is_zero() {
        return Err(Error::Pole(format!("(c)_nn = ({c})_{nn} vanishes")));
    }
    let rhs = poch_ext(&(c - a), nn)? / den;
    Ok((lhs, rhs))
}

/// A terminating hypergeometric transformation to check by direct
/// summation of both sides.
#[derive(Clone, Debug)]
pub enum TransformCase {
    /// `2F1(a, -nn; c; z) = (1-z)^nn (a)_nn/(c)_nn
    ///  * 2F1(-nn, c-a; 1-a-nn; 1/(1-z))` for `z != 1`.
    TwoF1 {
        /// Free upper parameter.
        a: Rational,
        /// Lower parameter.
        c: Rational,
        /// Termination order (the `-nn` upper parameter).
        nn: i64,
        /// Argument.
        z: Rational,
    },
    /// ```text
    /// 4F3(a,b,c,-nn; e,f,1+a+b+c-e-f-nn; 1)
    ///  = (e-a)_nn (f-a)_nn / [(e)_nn (f)_nn]
    ///    * 4F3(-nn, a, 1+a+c-e-f-nn, 1+a+b-e-f-nn;
    ///          1+a+b+c-e-f-nn, 1+a-e-nn, 1+a-f-nn; 1)
    /// ```
    FourF3 {
        /// First free upper parameter.
        a: Rational,
        /// Second free upper parameter.
        b: Rational,
        /// Third free upper parameter.
        c: Rational,
        /// First free lower parameter.
        e: Rational,
        /// Second free lower parameter.
        f: Rational,
        /// Termination order.
        nn: i64,
    },
}

/// Evaluates both sides of a [`TransformCase`] by direct terminating
/// summation; the pair must be equal.
///
/// # Errors
///
/// Returns [`Error::Pole`] on vanishing denominators, [`Error::Domain`]
/// for `nn < 0` or (in the `TwoF1` case) `z = 1`.
pub fn hyp_transform_check(case: &TransformCase) -> Result<(Rational, Rational)> {
    match case {
        TransformCase::TwoF1 { a, c, nn, z } => {
            if z.is_one() {
                return Err(Error::Domain("z must differ from 1".into()));
            }
            let lhs = pfq_terminating(&[a.clone(), rat(-nn)], std::slice::from_ref(c), z, *nn)?;
            let den = poch_ext(c, *nn)?;
            if den.is_zero() {
                return Err(Error::Pole(format!("(c)_nn = ({c})_{nn} vanishes")));
            }
            let one_minus_z = Rational::one() - z;
            let rhs = pow_i(&one_minus_z, *nn)? * poch_ext(a, *nn)? / den
                * pfq_terminating(
                    &[rat(-nn), c - a],
                    &[Rational::one() - a - rat(*nn)],
                    &one_minus_z.recip(),
                    *nn,
                )?;
            Ok((lhs, rhs))
        }
        TransformCase::FourF3 { a, b, c, e, f, nn } => {
            let g = rat(1) + a + b + c - e - f - rat(*nn);
            let lhs = pfq_terminating(
                &[a.clone(), b.clone(), c.clone(), rat(-nn)],
                &[e.clone(), f.clone(), g.clone()],
                &rat(1),
                *nn,
            )?;
            let den = poch_ext(e, *nn)? * poch_ext(f, *nn)?;
            if den.is_zero() {
                return Err(Error::Pole("(e)_nn (f)_nn vanishes".into()));
            }
            let prefactor = poch_ext(&(e - a), *nn)? * poch_ext(&(f - a), *nn)? / den;
            let rhs = prefactor
                * pfq_terminating(
                    &[
                        rat(-nn),
                        a.clone(),
                        rat(1) + a + c - e - f - rat(*nn),
                        rat(1) + a + b - e - f - rat(*nn),
                    ],
                    &[g, rat(1) + a - e - rat(*nn), rat(1) + a - f - rat(*nn)],
                    &rat(1),
                    *nn,
                )?;
            Ok((lhs, rhs))
        }
    }
}

/// The `w = 0` triple-sum summand
///
/// ```text
/// f4 = (-1)^{k+s+t} (1-k)_s (-i+k-n+s)_{2i-1}
///      / [ s! (j-t)! (t-k)! (3-k+2n-2t)_k ]
/// ```
///
/// # Errors
///
/// Returns [`Error::Pole`] when `(3-k+2n-2t)_k` vanishes (possible when
/// `2n` is an integer).
pub fn f4(n: &Rational, i: i64, j: i64, k: i64, s: i64, t: i64) -> Result<Rational> {
    let support = inv_factorial(s) * inv_factorial(j - t) * inv_factorial(t - k);
    if support.is_zero() {
        return Ok(Rational::zero());
    }
    let den = poch_ext(&(rat(3 - k - 2 * t) + rat(2) * n), k)?;
    if den.is_zero() {
        return Err(Error::Pole(format!(
            "(3-k+2n-2t)_k vanishes at n = {n}, k = {k}, t = {t}"
        )));
    }
    Ok(neg_one_pow(k + s + t)
        * poch_ext(&rat(1 - k), s)?
        * poch_ext(&(rat(k - i + s) - n), 2 * i - 1)?
        * support
        / den)
}

/// Support box of the `w = 0` triple sum: `k >= 1` is definitional;
/// everything else follows from `1/(j-t)!`, `1/(t-k)!`, `1/s!`, and the
/// vanishing of `(1-k)_s` for `s >= k`.
pub fn w0_box(j: i64) -> SupportBox {
    SupportBox {
        bounds: vec![
            VarBound {
                name: "k",
                lo: 1,
                hi: j,
                lo_hard: true,
                hi_hard: false,
            },
            soft("s", 0, j - 1),
            soft("t", 1, j),
        ],
    }
}

/// The triple sum `g4(n, i, j) = sum_{k>=1, s, t} f4(n, i, j, k, s, t)`.
pub fn g4(n: &Rational, i: i64, j: i64) -> Result<Rational> {
    sum_over(&w0_box(j), |p| f4(n, i, j, p[0], p[1], p[2]))
}

/// Sums [`f4`] over an explicit box (exposed for support-box
/// validation).
pub fn w0_sum_over(n: &Rational, i: i64, j: i64, bx: &SupportBox) -> Result<Rational> {
    sum_over(bx, |p| f4(n, i, j, p[0], p[1], p[2]))
}

/// The `w = 0` triple sum; equals [`w0_rhs`] for `1 <= i <= j`.
pub fn w0_sum(n: &Rational, i: i64, j: i64) -> Result<Rational> {
    g4(n, i, j)
}

/// The closed form of the `w = 0` sum:
/// `(1/2) (-1)^j 3^{j-1} (j-1)!` for `1 <= i = j`, and `0` for
/// `1 <= i < j`.
pub fn w0_rhs(i: i64, j: i64) -> Result<Rational> {
    if i < 1 || i > j {
        return Err(Error::Domain(format!(
            "closed form stated for 1 <= i <= j, got i = {i}, j = {j}"
        )));
    }
    if i < j {
        return Ok(Rational::zero());
    }
    Ok(ratio(1, 2)
        * neg_one_pow(j)
        * pow_i(&rat(3), j - 1).expect("nonnegative exponent")
        * factorial((j - 1) as u64))
}

/// Coefficients of the diagonal (`i = j`) three-term recursion for `g4`.
fn rec_ii_coeffs(n: &Rational, i: i64) -> (Rational, Rational, Rational, Rational) {
    let p1 = rat(14 * i * i - 6 * i) + n * rat(3 - 24 * i) + n * n * rat(7);
    let p2 = rat(2 * i) * (rat(7 * i - 1) - rat(3) * n) * (rat(i) - n);
    let p3 = -((rat(3 * i - 1) - rat(2) * n) * (rat(3 * i) - rat(2) * n));
    let p4 = rat(i) * (rat(i * i - 7 * i) + n * rat(1 - 16 * i) + n * n * rat(3));
    (p1, p2, p3, p4)
}

/// The combination
/// `p1 g4(n+1,i+1,i+1) + p2 g4(n+1,i,i) + p3 g4(n,i+1,i+1) + p4 g4(n,i,i)`;
/// expected `0`.
pub fn rec_ii_simp_combo(n: &Rational, i: i64) -> Result<Rational> {
    let (p1, p2, p3, p4) = rec_ii_coeffs(n, i);
    let n1 = n + rat(1);
    Ok(p1 * g4(&n1, i + 1, i + 1)?
        + p2 * g4(&n1, i, i)?
        + p3 * g4(n, i + 1, i + 1)?
        + p4 * g4(n, i, i)?)
}

/// Checks that [`rec_ii_simp_combo`] vanishes.
pub fn rec_ii_simp_check(n: &Rational, i: i64) -> Result<bool> {
    Ok(rec_ii_simp_combo(n, i)?.is_zero())
}

/// Coefficients of the off-diagonal (`i < j`) three-term recursion.
fn rec_ij_coeffs(n: &Rational, i: i64, j: i64) -> (Rational, Rational, Rational, Rational) {
    let p1 = rat(3 * i - i * i - 10 * i * j + 2 * i * i * j + 6 * i * j * j)
        + n * rat(-1 + 9 * i - i * i + 6 * j - 12 * i * j - 6 * j * j)
        + n * n * rat(-2 + 6 * i + 6 * j)
        - n * n * n;
    let p2 = rat(-2) * (rat(i * i - 2 * i + 3 * i * j) - n * rat(3 * i + 3 * j));
    let p3 = (rat(3 * j - 1) - rat(2) * n) * (rat(3 * j) - rat(2) * n) * (rat(i - 2 * j) + n);
    let p4 = rat(2 * i - i * i - 6 * j - 9 * i * j + 18 * j * j) + n * rat(3 * i - 15 * j);
    (p1, p2, p3, p4)
}

/// The combination
/// `p1 g4(n+1,i,j+1) + p2 g4(n+1,i,j) + p3 g4(n,i,j+1) + p4 g4(n,i,j)`;
/// expected `0` for `i < j`.
pub fn rec_ij_simp_combo(n: &Rational, i: i64, j: i64) -> Result<Rational> {
    let (p1, p2, p3, p4) = rec_ij_coeffs(n, i, j);
    let n1 = n + rat(1);
    Ok(p1 * g4(&n1, i, j + 1)? + p2 * g4(&n1, i, j)? + p3 * g4(n, i, j + 1)? + p4 * g4(n, i, j)?)
}

/// Checks that [`rec_ij_simp_combo`] vanishes.
pub fn rec_ij_simp_check(n: &Rational, i: i64, j: i64) -> Result<bool> {
    Ok(rec_ij_simp_combo(n, i, j)?.is_zero())
}

/// The three correction coefficients of the off-diagonal telescoping,
/// ordered by the summation index they pair with: the `r`-th entry is
/// the coefficient of the basis element `(t-1)...(t-r+1)` in the
/// quadratic-in-`t` numerator, which is exactly the coefficient
/// multiplying the `r`-th collapsed `t`-sum.
fn cr_coeffs(n: &Rational, i: i64, j: i64) -> [Rational; 3] {
    let c1 = rat(-2)
        * (rat(1) + n)
        * (rat(i) + n)
        * (rat(i * j - i * i * j) + n * rat(-2 - i + i * i + 7 * j) + n * n * rat(-5 - 2 * i + j)
            - rat(3) * n * n * n);
    let c2 = rat(-2)
        * (rat(i) + n)
        * (rat(i * i - i - i * j + i * i * j)
            + n * rat(3 + 2 * i - 2 * i * i - 13 * j)
            + n * n * rat(9 + 4 * i - j)
            + n * n * n * rat(6));
    let c3 = rat(-2)
        * (rat(i) + n)
        * (rat(i * i - i - 2 + 6 * j) + n * rat(-5 - 2 * i) - rat(3) * n * n);
    [c1, c2, c3]
}

/// The correction-term combination
///
/// ```text
/// sum_{r=1}^3 (-1)^{r+1} c_r(n,i,j) (-i+1-n)_{2i-1} (2+j-r)
///             / [ 4 (n+1-i) (-n+r-2)_{j+3-r} ]
/// ```
///
/// expected `0` for `j >= 2`.
///
/// # Errors
///
/// Returns [`Error::Pole`] when `n + 1 - i = 0` or a denominator
/// Pochhammer vanishes, and [`Error::Domain`] for `j < 2`.
pub fn cr_vanishing_check(n: &Rational, i: i64, j: i64) -> Result<Rational> {
    if j < 2 {
        return Err(Error::Domain(format!("stated for j >= 2, got j = {j}")));
    }
    let den0 = rat(4) * (n + rat(1 - i));
    if den0.is_zero() {
        return Err(Error::Pole(format!(
            "n + 1 - i vanishes at n = {n}, i = {i}"
        )));
    }
    let shared = poch_ext(&(rat(1 - i) - n), 2 * i - 1)?;
    let cs = cr_coeffs(n, i, j);
    let mut total = Rational::zero();
    for r in 1..=3i64 {
        let den = poch_ext(&(rat(r - 2) - n), j + 3 - r)?;
        if den.is_zero() {
            return Err(Error::Pole(format!(
                "(-n+r-2)_(j+3-r) vanishes at n = {n}, r = {r}, j = {j}"
            )));
        }
        total +=
            neg_one_pow(r + 1) * &cs[(r - 1) as usize] * &shared * rat(2 + j - r) / (&den0 * den);
    }
    Ok(total)
}

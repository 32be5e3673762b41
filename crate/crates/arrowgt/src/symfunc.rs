//! Symmetric-function forms of the generating function.
//!
//! The signed enumeration of arrowed patterns has three closed forms, all
//! implemented here over exact rationals:
//!
//! - an antisymmetrizer quotient ([`gf_asym_form`]),
//! - a bialternant-style determinant ([`gf_bialternant`]),
//! - for odd bounds `m = 2l + 1`, a determinant whose entries are extended
//!   complete homogeneous functions over a doubled alphabet
//!   ([`gf_odd_form`]), which specializes at `X = (1, ..., 1)` to a pure
//!   binomial determinant ([`det_ones_odd`]).
//!
//! Supporting machinery: [`h_ext`] (complete homogeneous functions
//! extended to negative degree), [`schur_ext`] (extended Schur
//! polynomials with arbitrary integer indices), their all-ones
//! specializations, the antisymmetrizer [`asym`], and the shift-operator
//! form [`operator_gf`] of the single-bottom-row generating function.
//!
//! All identities relating these to the combinatorial side live in the
//! test suite and the verification CLI; the functions themselves evaluate
//! formulas at exact rational points, rejecting degenerate points rather
//! than attempting symbolic cancellation.

use crate::exactnum::{binom, neg_one_pow, pow_i, RatMatrix, Rational};
use crate::patterns::WeightSpec;
use crate::{Error, Result};
use itertools::Itertools;
use num::{One, Zero};
use std::collections::HashMap;

/// An evaluation point for the `X` variables, with the genericity flags
/// the various formulas need.
///
/// The constructor never fails; it records which constraints hold so each
/// operation can reject exactly the degeneracies that break *its*
/// denominators.
#[derive(Clone, Debug)]
pub struct XPoint {
    xs: Vec<Rational>,
    nonzero: bool,
    distinct: bool,
    none_one: bool,
    products_ne_one: bool,
}

impl XPoint {
    /// Wraps a coordinate list and records constraint flags.
    pub fn new(xs: Vec<Rational>) -> Self {
        let nonzero = xs.iter().all(|x| !x.is_zero());
        let mut distinct = true;
        let mut products_ne_one = true;
        for i in 0..xs.len() {
            for j in (i + 1)..xs.len() {
                if xs[i] == xs[j] {
                    distinct = false;
                }
                if (&xs[i] * &xs[j]).is_one() {
                    products_ne_one = false;
                }
            }
        }
        let none_one = xs.iter().all(|x| !x.is_one());
        XPoint {
            xs,
            nonzero,
            distinct,
            none_one,
            products_ne_one,
        }
    }

    /// The coordinates.
    pub fn xs(&self) -> &[Rational] {
        &self.xs
    }

    /// Number of coordinates.
    pub fn n(&self) -> usize {
        self.xs.len()
    }

    /// All coordinates nonzero.
    pub fn is_nonzero(&self) -> bool {
        self.nonzero
    }

    /// Coordinates pairwise distinct.
    pub fn is_distinct(&self) -> bool {
        self.distinct
    }

    /// No coordinate equals 1.
    pub fn none_equals_one(&self) -> bool {
        self.none_one
    }

    /// No product `x_i * x_j` (`i < j`) equals 1.
    pub fn products_ne_one(&self) -> bool {
        self.products_ne_one
    }

    fn require_nonzero(&self) -> Result<()> {
        if self.nonzero {
            Ok(())
        } else {
            Err(Error::Pole("a coordinate is zero".into()))
        }
    }

    fn require_distinct(&self) -> Result<()> {
        if self.distinct {
            Ok(())
        } else {
            Err(Error::Degenerate(
                "coordinates are not pairwise distinct".into(),
            ))
        }
    }

    fn require_fully_generic(&self) -> Result<()> {
        self.require_nonzero()?;
        self.require_distinct()?;
        if !self.none_one {
            return Err(Error::Degenerate("a coordinate equals 1".into()));
        }
        if !self.products_ne_one {
            return Err(Error::Degenerate(
                "a coordinate product x_i * x_j equals 1".into(),
            ));
        }
        Ok(())
    }
}

/// The complete homogeneous symmetric function `h_k(xs)` extended to all
/// integers `k`:
///
/// - the usual sum of degree-`k` monomials for `k >= 0`;
/// - `0` for `-n + 1 <= k <= -1`;
/// - `(-1)^{n+1} (x_1 ... x_n)^{-1} h_{-k-n}(x_1^{-1}, ..., x_n^{-1})`
///   for `k <= -n`.
///
/// With this extension the reflection rule of the third clause holds for
/// *every* `k` (see the tests).
///
/// # Errors
///
/// Returns [`Error::Pole`] if `k < 0` and some coordinate is zero, and
/// [`Error::Domain`] for an empty variable list.
pub fn h_ext(k: i64, xs: &[Rational]) -> Result<Rational> {
    let n = xs.len() as i64;
    if n == 0 {
        return Err(Error::Domain("h_ext needs at least one variable".into()));
    }
    if k < 0 && xs.iter().any(|x| x.is_zero()) {
        return Err(Error::Pole(format!("h_{k} at a zero coordinate")));
    }
    if k >= 0 {
        return Ok(h_nonneg(k as usize, xs));
    }
    if k > -n {
        return Ok(Rational::zero());
    }
    let inv: Vec<Rational> = xs.iter().map(Rational::recip).collect();
    let mut value = h_nonneg((-k - n) as usize, &inv);
    for x in xs {
        value /= x;
    }
    Ok(neg_one_pow(n + 1) * value)
}

/// `h_k` for `k >= 0` by the one-variable-at-a-time recurrence.
fn h_nonneg(k: usize, xs: &[Rational]) -> Rational {
    let mut h = vec![Rational::zero(); k + 1];
    h[0] = Rational::one();
    for x in xs {
        for i in 1..=k {
            let add = x * &h[i - 1];
            h[i] += add;
        }
    }
    h.pop().expect("k + 1 entries")
}

/// `h_k` at `x_1 = ... = x_n = 1`, valid for every integer `k`:
/// `gen_binom(k + n - 1, n - 1)`.
pub fn h_at_ones(k: i64, n: usize) -> Rational {
    binom(k + n as i64 - 1, n as i64 - 1)
}

/// The antisymmetrizer: `sum_sigma sgn(sigma) f(x_{sigma(1)}, ..., x_{sigma(n)})`.
///
/// # Errors
///
/// Returns [`Error::Size`] for more than 8 variables (factorial blowup)
/// and propagates errors from `f`.
pub fn asym<F>(f: F, xs: &[Rational]) -> Result<Rational>
where
    F: Fn(&[Rational]) -> Result<Rational>,
{
    let n = xs.len();
    if n > 8 {
        return Err(Error::Size(format!(
            "antisymmetrizing over {n} > 8 variables"
        )));
    }
    let mut total = Rational::zero();
    for perm in (0..n).permutations(n) {
        let mut inversions = 0u32;
        for a in 0..n {
            for b in (a + 1)..n {
                if perm[a] > perm[b] {
                    inversions += 1;
                }
            }
        }
        let point: Vec<Rational> = perm.iter().map(|&i| xs[i].clone()).collect();
        let term = f(&point)?;
        if inversions.is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// The Vandermonde product `prod_{i<j} (x_j - x_i)`.
fn vandermonde(xs: &[Rational]) -> Rational {
    let mut prod = Rational::one();
    for i in 0..xs.len() {
        for j in (i + 1)..xs.len() {
            prod *= &xs[j] - &xs[i];
        }
    }
    prod
}

/// The extended Schur polynomial with integer index vector
/// `ks = (k_1, ..., k_n)` in increasing **label** order:
///
/// ```text
/// s(ks; xs) = det( x_i ^ (k_j + j - 1) ) / prod_{i<j} (x_j - x_i).
/// ```
///
/// Any integers are allowed as indices; the determinant performs the
/// usual straightening implicitly (equal shifted indices give 0).
///
/// # Errors
///
/// Returns [`Error::Shape`] on length mismatch, [`Error::Degenerate`] if
/// `xs` are not pairwise distinct, and [`Error::Pole`] if a negative
/// power of a zero coordinate is required.
pub fn schur_ext(ks: &[i64], xs: &[Rational]) -> Result<Rational> {
    let n = ks.len();
    if n != xs.len() {
        return Err(Error::Shape(format!(
            "{} indices for {} variables",
            n,
            xs.len()
        )));
    }
    if n == 0 {
        return Err(Error::Domain("empty index vector".into()));
    }
    let point = XPoint::new(xs.to_vec());
    point.require_distinct()?;
    let det = RatMatrix::try_from_fn(n, n, |i, j| pow_i(&xs[i], ks[j] + j as i64))?.det_exact()?;
    Ok(det / vandermonde(xs))
}

/// The extended Schur polynomial at `x_1 = ... = x_n = 1`:
/// `prod_{i<j} (k_j - k_i + j - i) / (j - i)`, valid for any integers.
pub fn schur_at_ones(ks: &[i64]) -> Rational {
    let n = ks.len();
    let mut value = Rational::one();
    for i in 0..n {
        for j in (i + 1)..n {
            value *= crate::exactnum::ratio(ks[j] - ks[i] + (j - i) as i64, (j - i) as i64);
        }
    }
    value
}

/// Shared arity/bound check for the three generating-function forms.
fn check_nm(n: usize, m: i64, xs_len: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("need at least one row".into()));
    }
    if xs_len != n {
        return Err(Error::Shape(format!("{xs_len} coordinates for n = {n}")));
    }
    if m + 1 < n as i64 {
        return Err(Error::Domain(format!(
            "no strictly increasing bottom row of length {n} fits in 0..={m}"
        )));
    }
    Ok(())
}

/// The antisymmetrizer form of the total generating function with `n`
/// rows and bottom entries at most `m`, at `t = u = v = 1`:
///
/// ```text
/// 1/prod_{i<j}(X_j - X_i) * ASym[ prod_{i<=j} (1 + w X_i + X_j + X_i X_j)
///                                 * sum_{0<=k_1<...<k_n<=m} prod_i X_i^{k_i - 1} ]
/// ```
///
/// # Errors
///
/// Returns [`Error::Degenerate`] if the coordinates are not pairwise
/// distinct, [`Error::Pole`] on zero coordinates, [`Error::Size`] for
/// `n > 8`, and [`Error::Domain`]/[`Error::Shape`] on arity problems.
pub fn gf_asym_form(n: usize, m: i64, xs: &XPoint, w: &Rational) -> Result<Rational> {
    check_nm(n, m, xs.n())?;
    xs.require_distinct()?;
    xs.require_nonzero()?;
    let bottoms: Vec<Vec<i64>> = (0..=m).combinations(n).collect();
    let f = |zs: &[Rational]| -> Result<Rational> {
        let mut prod = Rational::one();
        for i in 0..n {
            for j in i..n {
                prod *= Rational::one() + w * &zs[i] + &zs[j] + &zs[i] * &zs[j];
            }
        }
        let mut tail = Rational::zero();
        for ks in &bottoms {
            let mut term = Rational::one();
            for (z, &k) in zs.iter().zip(ks) {
                term *= pow_i(z, k - 1)?;
            }
            tail += term;
        }
        Ok(prod * tail)
    };
    Ok(asym(f, xs.xs())? / vandermonde(xs.xs()))
}

/// The bialternant form of the same generating function:
///
/// ```text
/// prod_i (X_i^{-1} + 1 + w + X_i)
///   * det( X_i^{j-1} (1+X_i)^{j-1} (1+wX_i)^{n-j}
///          - X_i^{m+2n-j} (1+X_i^{-1})^{j-1} (1+wX_i^{-1})^{n-j} )
///   / [ prod_i (1 - X_i) * prod_{i<j} (1 - X_i X_j)(X_j - X_i) ]
/// ```
///
/// # Errors
///
/// Returns [`Error::Pole`] on zero coordinates and [`Error::Degenerate`]
/// when any denominator factor vanishes (repeated coordinates, a
/// coordinate equal to 1, or a coordinate product equal to 1).
pub fn gf_bialternant(n: usize, m: i64, xs: &XPoint, w: &Rational) -> Result<Rational> {
    check_nm(n, m, xs.n())?;
    xs.require_fully_generic()?;
    let x = xs.xs();
    let det = RatMatrix::try_from_fn(n, n, |i0, j0| {
        let (xi, j) = (&x[i0], (j0 + 1) as i64);
        let xinv = xi.recip();
        let pos = pow_i(xi, j - 1)?
            * pow_i(&(Rational::one() + xi), j - 1)?
            * pow_i(&(Rational::one() + w * xi), n as i64 - j)?;
        let neg = pow_i(xi, m + 2 * n as i64 - j)?
            * pow_i(&(Rational::one() + &xinv), j - 1)?
            * pow_i(&(Rational::one() + w * &xinv), n as i64 - j)?;
        Ok(pos - neg)
    })?
    .det_exact()?;
    let mut value = det;
    for xi in x {
        value *= xi.recip() + Rational::one() + w + xi;
        value /= Rational::one() - xi;
    }
    for i in 0..n {
        for j in (i + 1)..n {
            value /= (Rational::one() - &x[i] * &x[j]) * (&x[j] - &x[i]);
        }
    }
    Ok(value)
}

/// The odd-bound (`m = 2l + 1`) determinant form of the generating
/// function, in terms of extended complete homogeneous functions over the
/// doubled alphabets `(X_1, X_1^{-1}, ..., X_i, X_i^{-1})`:
///
/// ```text
/// (-1)^{binom(n+1,2)} prod_i X_i^l (X_i^{-1} + 1 + w + X_i)(1 + X_i)
///   * det( sum_{p,q} binom(j-1,p) binom(n-j,q) w^{n-j-q}
///          h_{p-q-l-1-i}(X_1, X_1^{-1}, ..., X_i, X_i^{-1}) )
/// ```
///
/// # Errors
///
/// Returns [`Error::Pole`] on zero coordinates and
/// [`Error::Domain`]/[`Error::Shape`] on arity problems.
pub fn gf_odd_form(n: usize, l: i64, xs: &XPoint, w: &Rational) -> Result<Rational> {
    check_nm(n, 2 * l + 1, xs.n())?;
    xs.require_nonzero()?;
    let x = xs.xs();
    let det = RatMatrix::try_from_fn(n, n, |i0, j0| {
        let (i, j) = ((i0 + 1) as i64, (j0 + 1) as i64);
        let mut alphabet = Vec::with_capacity(2 * (i0 + 1));
        for xi in &x[..=i0] {
            alphabet.push(xi.clone());
            alphabet.push(xi.recip());
        }
        let mut entry = Rational::zero();
        for p in 0..=(j - 1) {
            for q in 0..=(n as i64 - j) {
                entry += binom(j - 1, p)
                    * binom(n as i64 - j, q)
                    * pow_i(w, n as i64 - j - q)?
                    * h_ext(p - q - l - 1 - i, &alphabet)?;
            }
        }
        Ok(entry)
    })?
    .det_exact()?;
    let mut value = neg_one_pow(n as i64 * (n as i64 + 1) / 2) * det;
    for xi in x {
        value *= pow_i(xi, l)?;
        value *= xi.recip() + Rational::one() + w + xi;
        value *= Rational::one() + xi;
    }
    Ok(value)
}

/// The all-ones specialization of [`gf_odd_form`]:
///
/// ```text
/// (3+w)^n 2^n det( sum_{p,q} w^{n-j-q} (-1)^j binom(j-1,p) binom(n-j,q)
///                  binom(p-q-l+i-2, 2i-1) )
/// ```
///
/// with `1 <= i, j <= n`. This is the signed count of arrowed patterns
/// with bound `m = 2l + 1`, every `X_i = 1`, and the given `w`.
pub fn det_ones_odd(n: usize, l: i64, w: &Rational) -> Rational {
    let det = RatMatrix::from_fn(n, n, |i0, j0| {
        let (i, j) = ((i0 + 1) as i64, (j0 + 1) as i64);
        let mut entry = Rational::zero();
        for p in 0..=(j - 1) {
            for q in 0..=(n as i64 - j) {
                entry += pow_i(w, n as i64 - j - q).expect("nonnegative exponent")
                    * neg_one_pow(j)
                    * binom(j - 1, p)
                    * binom(n as i64 - j, q)
                    * binom(p - q - l + i - 2, 2 * i - 1);
            }
        }
        entry
    })
    .det_exact()
    .expect("square matrix");
    pow_i(&(crate::exactnum::rat(3) + w), n as i64).expect("nonnegative exponent")
        * pow_i(&crate::exactnum::rat(2), n as i64).expect("nonnegative exponent")
        * det
}

/// The shift-operator form of the generating function for one bottom row
/// `ks = (k_1, ..., k_n)` (increasing label order):
///
/// ```text
/// prod_i (t + u X_i + v X_i^{-1} + w)
///   * prod_{p<q} (t + u E_{k_p} + v E_{k_q}^{-1} + w E_{k_p} E_{k_q}^{-1})
///   applied to s(ks; xs),
/// ```
///
/// where `E_k` is the forward shift `k -> k + 1`. The operator product is
/// expanded eagerly into at most `4^{n(n-1)/2}` shift terms (merged by
/// shift vector) *before* the indices are specialized, exactly as the
/// formula prescribes; each resulting extended Schur polynomial is then
/// evaluated at `xs` — by [`schur_ext`] at a distinct point, by
/// [`schur_at_ones`] when every coordinate is 1.
///
/// # Errors
///
/// Returns [`Error::Size`] for `n > 4`, [`Error::Domain`] for a
/// non-numeric spec or empty `ks`, [`Error::Shape`] on arity mismatch,
/// and [`Error::Degenerate`] if the coordinates are neither pairwise
/// distinct nor all ones.
pub fn operator_gf(ks: &[i64], spec: &WeightSpec) -> Result<Rational> {
    let n = ks.len();
    if n == 0 {
        return Err(Error::Domain("empty index vector".into()));
    }
    if n > 4 {
        return Err(Error::Size(format!(
            "operator expansion has 4^{} terms for n = {n}",
            n * (n - 1) / 2
        )));
    }
    let WeightSpec::Numeric { t, u, v, w, xs } = spec else {
        return Err(Error::Domain(
            "operator_gf needs a numeric weight spec".into(),
        ));
    };
    if xs.len() != n {
        return Err(Error::Shape(format!(
            "{} coordinates for n = {n}",
            xs.len()
        )));
    }
    let at_ones = xs.iter().all(Rational::is_one);
    if !at_ones {
        XPoint::new(xs.clone()).require_distinct().map_err(|_| {
            Error::Degenerate("coordinates must be pairwise distinct or all ones".into())
        })?;
    }

    // Expand the operator product into (shift vector -> coefficient).
    let mut terms: HashMap<Vec<i64>, Rational> = HashMap::new();
    terms.insert(vec![0; n], Rational::one());
    for p in 0..n {
        for q in (p + 1)..n {
            let mut next: HashMap<Vec<i64>, Rational> = HashMap::new();
            for (shift, coeff) in &terms {
                let mut push = |dp: i64, dq: i64, factor: &Rational| {
                    if factor.is_zero() {
                        return;
                    }
                    let mut s = shift.clone();
                    s[p] += dp;
                    s[q] += dq;
                    let entry = next.entry(s).or_insert_with(Rational::zero);
                    *entry += coeff * factor;
                };
                push(0, 0, t);
                push(1, 0, u);
                push(0, -1, v);
                push(1, -1, w);
            }
            terms = next;
        }
    }

    let mut total = Rational::zero();
    for (shift, coeff) in &terms {
        if coeff.is_zero() {
            continue;
        }
        let shifted: Vec<i64> = ks.iter().zip(shift).map(|(k, d)| k + d).collect();
        let s = if at_ones {
            schur_at_ones(&shifted)
        } else {
            schur_ext(&shifted, xs)?
        };
        total += coeff * s;
    }
    for xi in xs {
        total *= t + u * xi + v * xi.recip() + w;
    }
    Ok(total)
}

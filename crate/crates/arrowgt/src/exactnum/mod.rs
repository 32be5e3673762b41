//! Exact rational arithmetic primitives.
//!
//! Everything downstream — pattern weights, determinants, hypergeometric
//! summands — is built on the helpers in this module:
//!
//! - [`Rational`], an arbitrary-precision rational number, with the
//!   constructors [`rat`] and [`ratio`] and the parser [`parse_rational`];
//! - [`poch_ext`], the Pochhammer symbol extended to negative lengths;
//! - [`inv_factorial`], the reciprocal factorial that vanishes at negative
//!   arguments (the standard device for encoding summation bounds inside a
//!   summand);
//! - [`gen_binom`], the generalized binomial coefficient with rational top
//!   entry;
//! - [`RatMatrix`] with exact fraction-free-pivot determinants;
//! - [`LaurentPoly`], a sparse multivariate Laurent polynomial.

mod laurent;
mod matrix;

pub use laurent::LaurentPoly;
pub use matrix::RatMatrix;

use crate::{Error, Result};
use num::{BigInt, One, Signed, Zero};

/// Arbitrary-precision rational number.
pub type Rational = num::BigRational;

/// The integer `n` as a [`Rational`].
#[inline]
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `p/q` as a reduced [`Rational`].
///
/// # Panics
///
/// Panics if `q == 0`.
#[inline]
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"` into a [`Rational`].
///
/// # Errors
///
/// Returns [`Error::Domain`] if the string is not a valid rational or has
/// a zero denominator.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::Domain(format!("cannot parse {s:?} as a rational: {e}")))
}

/// Serde helper: write a [`Rational`] as its `"p/q"` string form.
pub fn serialize_rational<S: serde::Serializer>(
    r: &Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// `base^e` for a signed integer exponent.
///
/// # Errors
///
/// Returns [`Error::Pole`] for `0^e` with `e < 0`.
pub fn pow_i(base: &Rational, e: i64) -> Result<Rational> {
    if e == 0 {
        return Ok(Rational::one());
    }
    if base.is_zero() {
        if e < 0 {
            return Err(Error::Pole(format!("0^{e} is undefined")));
        }
        return Ok(Rational::zero());
    }
    let mut acc = Rational::one();
    let mut b = if e < 0 { base.recip() } else { base.clone() };
    let mut k = e.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            acc *= &b;
        }
        k >>= 1;
        if k > 0 {
            b = &b * &b;
        }
    }
    Ok(acc)
}

/// `m!` as a [`Rational`].
pub fn factorial(m: u64) -> Rational {
    let mut acc = BigInt::one();
    for j in 2..=m {
        acc *= BigInt::from(j);
    }
    Rational::from_integer(acc)
}

/// `1/m!` for `m >= 0`, and `0` for `m < 0`.
///
/// The vanishing convention at negative arguments is what lets a single
/// summand expression carry its own support: a factor `inv_factorial(b - k)`
/// truncates a sum at `k = b` without an explicit bound.
pub fn inv_factorial(m: i64) -> Rational {
    if m < 0 {
        Rational::zero()
    } else {
        factorial(m as u64).recip()
    }
}

/// The extended Pochhammer symbol `(a)_k`.
///
/// For `k > 0` this is the rising product `a (a+1) ... (a+k-1)`; for
/// `k == 0` it is `1`; for `k < 0` it is `1 / ((a-1) (a-2) ... (a+k))`,
/// so that `(a)_k (a+k)_{-k} = 1` wherever both sides are defined.
///
/// # Errors
///
/// Returns [`Error::Pole`] when `k < 0` and one of the factors
/// `a-1, ..., a+k` vanishes.
pub fn poch_ext(a: &Rational, k: i64) -> Result<Rational> {
    let mut acc = Rational::one();
    if k >= 0 {
        for j in 0..k {
            acc *= a + rat(j);
        }
        Ok(acc)
    } else {
        for j in 1..=(-k) {
            let factor = a - rat(j);
            if factor.is_zero() {
                return Err(Error::Pole(format!(
                    "({a})_{k} has a zero factor {a} - {j}"
                )));
            }
            acc *= factor;
        }
        Ok(acc.recip())
    }
}

/// The generalized binomial coefficient `binom(p, q)` with rational `p`.
///
/// For `q >= 0` this is `p (p-1) ... (p-q+1) / q!`; for `q < 0` it is `0`.
pub fn gen_binom(p: &Rational, q: i64) -> Rational {
    if q < 0 {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for j in 0..q {
        acc *= p - rat(j);
    }
    acc * inv_factorial(q)
}

/// Integer binomial coefficient as a [`Rational`] (vanishing for `k < 0`).
#[inline]
pub fn binom(n: i64, k: i64) -> Rational {
    gen_binom(&rat(n), k)
}

/// `(-1)^e` as a [`Rational`].
#[inline]
pub fn neg_one_pow(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// True iff `r` is an integer.
#[inline]
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// `r` as an `i64` if it is an integer that fits.
pub fn to_i64(r: &Rational) -> Option<i64> {
    use num::ToPrimitive;
    if is_integer(r) {
        r.numer().to_i64()
    } else {
        None
    }
}

/// True iff `r` is an integer `<= 0` (a potential Pochhammer/Gamma pole).
pub fn is_nonpositive_integer(r: &Rational) -> bool {
    is_integer(r) && !r.numer().is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_constructors_reduce() {
        assert_eq!(ratio(2, 4), ratio(1, 2));
        assert_eq!(ratio(-3, -9), ratio(1, 3));
        assert_eq!(rat(7), ratio(7, 1));
    }

    #[test]
    fn parse_rational_accepts_both_forms() {
        assert_eq!(parse_rational("5").unwrap(), rat(5));
        assert_eq!(parse_rational("-3/6").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational(" 22/7 ").unwrap(), ratio(22, 7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn pow_i_handles_all_sign_combinations() {
        assert_eq!(pow_i(&ratio(2, 3), 3).unwrap(), ratio(8, 27));
        assert_eq!(pow_i(&ratio(2, 3), -2).unwrap(), ratio(9, 4));
        assert_eq!(pow_i(&rat(-2), 3).unwrap(), rat(-8));
        assert_eq!(pow_i(&rat(0), 5).unwrap(), rat(0));
        assert_eq!(pow_i(&rat(0), 0).unwrap(), rat(1));
        assert!(matches!(pow_i(&rat(0), -1), Err(Error::Pole(_))));
    }

    #[test]
    fn factorial_and_inverse() {
        assert_eq!(factorial(0), rat(1));
        assert_eq!(factorial(5), rat(120));
        assert_eq!(inv_factorial(3), ratio(1, 6));
        assert_eq!(inv_factorial(0), rat(1));
        assert_eq!(inv_factorial(-2), rat(0));
    }

    #[test]
    fn poch_ext_rising_products() {
        assert_eq!(poch_ext(&rat(3), 2).unwrap(), rat(12));
        assert_eq!(poch_ext(&ratio(1, 2), 3).unwrap(), ratio(15, 8));
        assert_eq!(poch_ext(&rat(-4), 3).unwrap(), rat(-24)); // (-4)(-3)(-2)
        assert_eq!(poch_ext(&rat(-2), 4).unwrap(), rat(0)); // hits 0 going up
        assert_eq!(poch_ext(&ratio(22, 7), 0).unwrap(), rat(1));
    }

    #[test]
    fn poch_ext_negative_lengths() {
        // (3)_{-2} = 1/((3-1)(3-2)) = 1/2
        assert_eq!(poch_ext(&rat(3), -2).unwrap(), ratio(1, 2));
        // (1/2)_{-1} = 1/(1/2 - 1) = -2
        assert_eq!(poch_ext(&ratio(1, 2), -1).unwrap(), rat(-2));
        // (2)_{-3} divides by (2-2) = 0
        assert!(matches!(poch_ext(&rat(2), -3), Err(Error::Pole(_))));
        // (0)_{-j} = (-1)^j / j!
        for j in 1..6 {
            assert_eq!(
                poch_ext(&rat(0), -j).unwrap(),
                neg_one_pow(j) * inv_factorial(j),
                "(0)_(-{j})"
            );
        }
    }

    #[test]
    fn poch_ext_inverse_identity() {
        // (a)_k (a+k)_{-k} = 1 for generic a
        let a = ratio(5, 3);
        for k in -4..=4i64 {
            let lhs = poch_ext(&a, k).unwrap() * poch_ext(&(&a + rat(k)), -k).unwrap();
            assert_eq!(lhs, rat(1), "k = {k}");
        }
    }

    #[test]
    fn gen_binom_values() {
        assert_eq!(gen_binom(&rat(5), 2), rat(10));
        assert_eq!(gen_binom(&rat(-2), 3), rat(-4));
        assert_eq!(gen_binom(&ratio(1, 2), 2), ratio(-1, 8));
        assert_eq!(gen_binom(&rat(3), -1), rat(0));
        assert_eq!(gen_binom(&rat(3), 0), rat(1));
        assert_eq!(gen_binom(&rat(2), 5), rat(0));
    }

    #[test]
    fn gen_binom_reflection() {
        // binom(p, q) = (-1)^q binom(q - p - 1, q)
        for p in -5..=5i64 {
            for q in 0..=6i64 {
                let lhs = binom(p, q);
                let rhs = neg_one_pow(q) * binom(q - p - 1, q);
                assert_eq!(lhs, rhs, "p = {p}, q = {q}");
            }
        }
    }

    #[test]
    fn integer_predicates() {
        assert!(is_integer(&rat(-3)));
        assert!(!is_integer(&ratio(1, 2)));
        assert_eq!(to_i64(&rat(42)), Some(42));
        assert_eq!(to_i64(&ratio(1, 3)), None);
        assert!(is_nonpositive_integer(&rat(0)));
        assert!(is_nonpositive_integer(&rat(-7)));
        assert!(!is_nonpositive_integer(&rat(1)));
        assert!(!is_nonpositive_integer(&ratio(-1, 2)));
    }
}

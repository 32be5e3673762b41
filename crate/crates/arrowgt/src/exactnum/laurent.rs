//! Sparse multivariate Laurent polynomials with rational coefficients.

use super::{pow_i, Rational};
use crate::{Error, Result};
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A sparse Laurent polynomial: a finite sum of terms
/// `coeff * v_1^{e_1} ... v_k^{e_k}` with integer (possibly negative)
/// exponents and rational coefficients.
///
/// Every polynomial carries its variable list; binary operations require
/// both operands to have the same list. The canonical term order used for
/// serialization and display is graded lexicographic: terms are sorted by
/// total degree, ties broken lexicographically on the exponent vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<i64>, Rational>,
}

impl LaurentPoly {
    /// The zero polynomial in the given variables.
    pub fn zero(vars: Vec<String>) -> Self {
        LaurentPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial `c`.
    pub fn constant(vars: Vec<String>, c: Rational) -> Self {
        let mut p = LaurentPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    /// The monomial `v_idx^e`.
    ///
    /// # Panics
    ///
    /// Panics if `idx` is out of range.
    pub fn var_pow(vars: Vec<String>, idx: usize, e: i64) -> Self {
        assert!(idx < vars.len(), "variable index {idx} out of range");
        let mut exps = vec![0i64; vars.len()];
        exps[idx] = e;
        let mut p = LaurentPoly::zero(vars);
        p.terms.insert(exps, Rational::one());
        p
    }

    /// A single term `coeff * prod v_i^{exps[i]}`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Shape`] if `exps.len()` differs from the number of
    /// variables.
    pub fn monomial(vars: Vec<String>, exps: Vec<i64>, coeff: Rational) -> Result<Self> {
        if exps.len() != vars.len() {
            return Err(Error::Shape(format!(
                "exponent vector of length {} for {} variables",
                exps.len(),
                vars.len()
            )));
        }
        let mut p = LaurentPoly::zero(vars);
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        Ok(p)
    }

    /// The variable names.
    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// True iff this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of the exponent vector `exps` (zero if absent).
    pub fn coeff(&self, exps: &[i64]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    fn check_same_vars(&self, other: &LaurentPoly) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::Shape(format!(
                "variable lists differ: {:?} vs {:?}",
                self.vars, other.vars
            )));
        }
        Ok(())
    }

    /// `self + other`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Shape`] if the variable lists differ.
    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_same_vars(other)?;
        let mut out = self.clone();
        for (exps, c) in &other.terms {
            let entry = out.terms.entry(exps.clone()).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                out.terms.remove(exps);
            }
        }
        Ok(out)
    }

    /// `self - other`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Shape`] if the variable lists differ.
    pub fn sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.add(&other.neg())
    }

    /// `-self`.
    pub fn neg(&self) -> LaurentPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    /// `self * other`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Shape`] if the variable lists differ.
    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_same_vars(other)?;
        let mut out = LaurentPoly::zero(self.vars.clone());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exps: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let entry = out.terms.entry(exps.clone()).or_insert_with(Rational::zero);
                *entry += c1 * c2;
                if entry.is_zero() {
                    out.terms.remove(&exps);
                }
            }
        }
        Ok(out)
    }

    /// `self * c` for a scalar `c`.
    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.vars.clone());
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    /// Evaluates at the point `xs` (one value per variable).
    ///
    /// # Errors
    ///
    /// Returns [`Error::Shape`] on length mismatch and [`Error::Pole`] if a
    /// variable with a negative exponent is evaluated at zero.
    pub fn eval(&self, xs: &[Rational]) -> Result<Rational> {
        if xs.len() != self.vars.len() {
            return Err(Error::Shape(format!(
                "{} values for {} variables",
                xs.len(),
                self.vars.len()
            )));
        }
        let mut total = Rational::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in xs.iter().zip(exps) {
                if e != 0 {
                    term *= pow_i(x, e)?;
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Terms in canonical (graded-lexicographic) order.
    pub fn canonical_terms(&self) -> Vec<(&Vec<i64>, &Rational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(e1, _), (e2, _)| {
            let d1: i64 = e1.iter().sum();
            let d2: i64 = e2.iter().sum();
            d1.cmp(&d2).then_with(|| e1.cmp(e2))
        });
        terms
    }

    /// Serializes as a JSON list `[{"exponents": [...], "coeff": "p/q"}, ...]`
    /// in canonical order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.canonical_terms()
                .into_iter()
                .map(|(exps, c)| {
                    serde_json::json!({
                        "exponents": exps,
                        "coeff": c.to_string(),
                    })
                })
                .collect(),
        )
    }

    /// Rebuilds a polynomial from the output of [`LaurentPoly::to_json`].
    ///
    /// # Errors
    ///
    /// Returns [`Error::Domain`] if the JSON does not have the expected
    /// shape or [`Error::Shape`] on exponent-length mismatch.
    pub fn from_json(vars: Vec<String>, value: &serde_json::Value) -> Result<LaurentPoly> {
        let items = value
            .as_array()
            .ok_or_else(|| Error::Domain("expected a JSON array of terms".into()))?;
        let mut out = LaurentPoly::zero(vars);
        for item in items {
            let exps: Vec<i64> = item
                .get("exponents")
                .and_then(|e| e.as_array())
                .ok_or_else(|| Error::Domain("term is missing \"exponents\"".into()))?
                .iter()
                .map(|v| {
                    v.as_i64()
                        .ok_or_else(|| Error::Domain("non-integer exponent".into()))
                })
                .collect::<Result<_>>()?;
            if exps.len() != out.vars.len() {
                return Err(Error::Shape("exponent vector has wrong length".into()));
            }
            let coeff = item
                .get("coeff")
                .and_then(|c| c.as_str())
                .ok_or_else(|| Error::Domain("term is missing \"coeff\"".into()))?;
            let coeff = super::parse_rational(coeff)?;
            let entry = out.terms.entry(exps.clone()).or_insert_with(Rational::zero);
            *entry += coeff;
            if entry.is_zero() {
                out.terms.remove(&exps);
            }
        }
        Ok(out)
    }
}

impl serde::Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in self.canonical_terms() {
            let mono: Vec<String> = self
                .vars
                .iter()
                .zip(exps)
                .filter(|(_, &e)| e != 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        v.clone()
                    } else {
                        format!("{v}^{e}")
                    }
                })
                .collect();
            let abs = c.abs();
            let lead = if first {
                if c.is_negative() {
                    "-".to_string()
                } else {
                    String::new()
                }
            } else if c.is_negative() {
                " - ".to_string()
            } else {
                " + ".to_string()
            };
            if mono.is_empty() {
                write!(f, "{lead}{abs}")?;
            } else if abs.is_one() {
                write!(f, "{lead}{}", mono.join("*"))?;
            } else {
                write!(f, "{lead}{abs}*{}", mono.join("*"))?;
            }
            first = false;
        }
        Ok(())
    }
}

use num::Signed;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ratio};

    fn xy() -> Vec<String> {
        vec!["x".to_string(), "y".to_string()]
    }

    #[test]
    fn arithmetic_basics() {
        let x = LaurentPoly::var_pow(xy(), 0, 1);
        let y_inv = LaurentPoly::var_pow(xy(), 1, -1);
        let two = LaurentPoly::constant(xy(), rat(2));
        let p = x.add(&y_inv).unwrap().mul(&two).unwrap();
        assert_eq!(p.coeff(&[1, 0]), rat(2));
        assert_eq!(p.coeff(&[0, -1]), rat(2));
        assert_eq!(p.num_terms(), 2);
        assert!(p.sub(&p).unwrap().is_zero());
    }

    #[test]
    fn cancellation_drops_terms() {
        let x = LaurentPoly::var_pow(xy(), 0, 1);
        let one = LaurentPoly::constant(xy(), rat(1));
        // (x + 1)(x - 1) = x^2 - 1
        let p = x.add(&one).unwrap().mul(&x.sub(&one).unwrap()).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coeff(&[2, 0]), rat(1));
        assert_eq!(p.coeff(&[0, 0]), rat(-1));
        assert_eq!(p.coeff(&[1, 0]), rat(0));
    }

    #[test]
    fn eval_with_negative_exponents() {
        // p = 3 x^2 y^{-1} - 1/2
        let p = LaurentPoly::monomial(xy(), vec![2, -1], rat(3))
            .unwrap()
            .add(&LaurentPoly::constant(xy(), ratio(-1, 2)))
            .unwrap();
        let v = p.eval(&[rat(2), rat(4)]).unwrap();
        assert_eq!(v, rat(3) * ratio(4, 4) - ratio(1, 2));
        assert!(matches!(p.eval(&[rat(2), rat(0)]), Err(Error::Pole(_))));
        assert!(p.eval(&[rat(1)]).is_err());
    }

    #[test]
    fn var_mismatch_is_an_error() {
        let p = LaurentPoly::constant(xy(), rat(1));
        let q = LaurentPoly::constant(vec!["z".to_string()], rat(1));
        assert!(p.add(&q).is_err());
        assert!(p.mul(&q).is_err());
    }

    #[test]
    fn canonical_order_is_graded_lex() {
        // y^{-2} (degree -2) < 1 (degree 0) < x y (degree 2) = x^2 (degree 2, lex later)
        let p = LaurentPoly::monomial(xy(), vec![1, 1], rat(1))
            .unwrap()
            .add(&LaurentPoly::monomial(xy(), vec![2, 0], rat(2)).unwrap())
            .unwrap()
            .add(&LaurentPoly::monomial(xy(), vec![0, -2], rat(3)).unwrap())
            .unwrap()
            .add(&LaurentPoly::constant(xy(), rat(4)))
            .unwrap();
        let order: Vec<Vec<i64>> = p
            .canonical_terms()
            .into_iter()
            .map(|(e, _)| e.clone())
            .collect();
        assert_eq!(order, vec![vec![0, -2], vec![0, 0], vec![1, 1], vec![2, 0]]);
    }

    #[test]
    fn json_round_trip() {
        let p = LaurentPoly::monomial(xy(), vec![-1, 3], ratio(7, 3))
            .unwrap()
            .add(&LaurentPoly::constant(xy(), rat(-2)))
            .unwrap();
        let json = p.to_json();
        let q = LaurentPoly::from_json(xy(), &json).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn display_is_readable() {
        let p = LaurentPoly::monomial(xy(), vec![2, 0], rat(3))
            .unwrap()
            .add(&LaurentPoly::monomial(xy(), vec![0, -1], rat(-1)).unwrap())
            .unwrap();
        assert_eq!(p.to_string(), "-y^-1 + 3*x^2");
        assert_eq!(LaurentPoly::zero(xy()).to_string(), "0");
    }
}

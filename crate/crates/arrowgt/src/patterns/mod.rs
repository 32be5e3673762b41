//! Gelfand-Tsetlin patterns decorated with arrows.
//!
//! A Gelfand-Tsetlin (GT) pattern with `n` rows is a triangular array of
//! integers `a[i][j]` (`0 <= j <= i < n`, row 0 at the top) in which each
//! entry interlaces the row below it:
//!
//! ```text
//! a[i+1][j] <= a[i][j] <= a[i+1][j+1].
//! ```
//!
//! An *arrowed* pattern additionally decorates every entry with one of
//! four symbols — nothing, a north-east arrow, a north-west arrow, or both
//! arrows — subject to the admissibility rule enforced by
//! [`is_valid_arrowed`]: whenever an entry equals its NE (resp. NW)
//! neighbour in the row above and carries an NE (resp. NW) arrow, the
//! entry to its right (resp. left) in the same row must hold the same
//! value and carry an NW (resp. NE) arrow. Conditions about neighbours
//! that do not exist are vacuous.
//!
//! Each admissible pattern has a sign, `(-1)` to the number of *special
//! little triangles* ([`count_special_triangles`]), and a monomial weight
//! in the decoration variables `t, u, v, w` and one variable `X_i` per row
//! ([`weight`]). Summing the signed weights over all decorated patterns
//! with a fixed bottom row gives the generating function
//! [`gf_bottom_row`]; summing that over all strictly increasing bottom
//! rows with entries in `{0, ..., m}` gives [`signed_total`].
//!
//! Enumeration ([`enumerate_arrowed`]) is streaming and deterministic;
//! the generating functions are computed by a per-row transfer chain that
//! never materializes the (often huge) set of decorated patterns, and
//! [`gf_bottom_row_direct`] is the brute-force reference it is tested
//! against.

mod enumerate;
mod gf;

pub use enumerate::{enumerate_arrowed, enumerate_gt, ArrowedEnumerator, GtEnumerator};
pub use gf::{gf_bottom_row, gf_bottom_row_direct, signed_total};

use crate::exactnum::{LaurentPoly, Rational};
use crate::{Error, Result};
use num::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The decoration carried by a single pattern entry.
///
/// The derived order `None < Ne < Nw < Both` is the canonical per-entry
/// enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decoration {
    /// No arrow.
    None,
    /// A north-east arrow.
    Ne,
    /// A north-west arrow.
    Nw,
    /// Both arrows.
    Both,
}

impl Decoration {
    /// All four decorations in canonical order.
    pub const ALL: [Decoration; 4] = [
        Decoration::None,
        Decoration::Ne,
        Decoration::Nw,
        Decoration::Both,
    ];

    /// True iff the decoration includes a north-east arrow.
    #[inline]
    pub fn carries_ne(self) -> bool {
        matches!(self, Decoration::Ne | Decoration::Both)
    }

    /// True iff the decoration includes a north-west arrow.
    #[inline]
    pub fn carries_nw(self) -> bool {
        matches!(self, Decoration::Nw | Decoration::Both)
    }
}

impl fmt::Display for Decoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Decoration::None => "none",
            Decoration::Ne => "ne",
            Decoration::Nw => "nw",
            Decoration::Both => "both",
        };
        write!(f, "{s}")
    }
}

/// A triangular array of integers: row `i` (0-based, top row first) has
/// `i + 1` entries.
///
/// The constructor checks only the shape; use [`is_valid_gt`] to test the
/// interlacing condition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct GTPattern {
    rows: Vec<Vec<i64>>,
}

impl GTPattern {
    /// Builds a pattern from rows listed top to bottom.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Shape`] unless row `i` has exactly `i + 1` entries
    /// and at least one row is present.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Shape("a pattern needs at least one row".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != i + 1 {
                return Err(Error::Shape(format!(
                    "row {} has {} entries, expected {}",
                    i,
                    row.len(),
                    i + 1
                )));
            }
        }
        Ok(GTPattern { rows })
    }

    /// Number of rows.
    #[inline]
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// The rows, top to bottom.
    #[inline]
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// The bottom row.
    #[inline]
    pub fn bottom(&self) -> &[i64] {
        self.rows.last().expect("patterns are nonempty")
    }
}

impl TryFrom<Vec<Vec<i64>>> for GTPattern {
    type Error = Error;
    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        GTPattern::new(rows)
    }
}

impl From<GTPattern> for Vec<Vec<i64>> {
    fn from(p: GTPattern) -> Self {
        p.rows
    }
}

/// True iff every entry interlaces the row below:
/// `a[i+1][j] <= a[i][j] <= a[i+1][j+1]`.
pub fn is_valid_gt(p: &GTPattern) -> bool {
    let rows = p.rows();
    for i in 1..rows.len() {
        for j in 0..i {
            if !(rows[i][j] <= rows[i - 1][j] && rows[i - 1][j] <= rows[i][j + 1]) {
                return false;
            }
        }
    }
    true
}

/// A GT pattern together with one [`Decoration`] per entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArrowedPattern {
    base: GTPattern,
    decor: Vec<Vec<Decoration>>,
}

impl ArrowedPattern {
    /// Pairs a pattern with its decorations.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Shape`] if the decoration array is not congruent
    /// to the pattern.
    pub fn new(base: GTPattern, decor: Vec<Vec<Decoration>>) -> Result<Self> {
        if decor.len() != base.n() || decor.iter().enumerate().any(|(i, d)| d.len() != i + 1) {
            return Err(Error::Shape(
                "decoration array is not congruent to the pattern".into(),
            ));
        }
        Ok(ArrowedPattern { base, decor })
    }

    /// The underlying GT pattern.
    #[inline]
    pub fn base(&self) -> &GTPattern {
        &self.base
    }

    /// The decorations, congruent to [`GTPattern::rows`].
    #[inline]
    pub fn decor(&self) -> &[Vec<Decoration>] {
        &self.decor
    }

    /// Number of rows.
    #[inline]
    pub fn n(&self) -> usize {
        self.base.n()
    }
}

#[derive(Serialize, Deserialize)]
struct ArrowedPatternRepr {
    rows: Vec<Vec<i64>>,
    decor: Vec<Vec<Decoration>>,
}

impl Serialize for ArrowedPattern {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        ArrowedPatternRepr {
            rows: self.base.rows().to_vec(),
            decor: self.decor.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ArrowedPattern {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let repr = ArrowedPatternRepr::deserialize(deserializer)?;
        let base = GTPattern::new(repr.rows).map_err(serde::de::Error::custom)?;
        ArrowedPattern::new(base, repr.decor).map_err(serde::de::Error::custom)
    }
}

/// True iff the decorated pattern is admissible.
///
/// The base pattern must satisfy the interlacing condition, and every
/// entry must satisfy the arrow rule: if entry `a[i][j]` equals its NE
/// neighbour `a[i-1][j]` and carries an NE arrow, then `a[i][j+1]` must
/// equal `a[i][j]` and carry an NW arrow; symmetrically, if `a[i][j]`
/// equals its NW neighbour `a[i-1][j-1]` and carries an NW arrow, then
/// `a[i][j-1]` must equal `a[i][j]` and carry an NE arrow. Conditions on
/// missing neighbours hold vacuously.
pub fn is_valid_arrowed(p: &ArrowedPattern) -> bool {
    if !is_valid_gt(p.base()) {
        return false;
    }
    let rows = p.base().rows();
    let decor = p.decor();
    for i in 0..rows.len() {
        for j in 0..=i {
            let d = decor[i][j];
            // NE arrow on an entry equal to its NE neighbour a[i-1][j].
            if d.carries_ne() && i >= 1 && j < i && rows[i][j] == rows[i - 1][j] {
                let partner_ok = rows[i][j + 1] == rows[i][j] && decor[i][j + 1].carries_nw();
                if !partner_ok {
                    return false;
                }
            }
            // NW arrow on an entry equal to its NW neighbour a[i-1][j-1].
            if d.carries_nw() && i >= 1 && j >= 1 && rows[i][j] == rows[i - 1][j - 1] {
                let partner_ok = rows[i][j - 1] == rows[i][j] && decor[i][j - 1].carries_ne();
                if !partner_ok {
                    return false;
                }
            }
        }
    }
    true
}

/// Counts the special little triangles of an admissible pattern.
///
/// A special little triangle is an entry `a[i][j]` that equals both of
/// its neighbours `a[i+1][j]` (SW) and `a[i+1][j+1]` (SE) in the row
/// below, where the SW neighbour carries an NE arrow and the SE neighbour
/// carries an NW arrow.
pub fn count_special_triangles(p: &ArrowedPattern) -> usize {
    let rows = p.base().rows();
    let decor = p.decor();
    let mut count = 0;
    for i in 0..rows.len().saturating_sub(1) {
        for j in 0..=i {
            if rows[i][j] == rows[i + 1][j]
                && rows[i][j] == rows[i + 1][j + 1]
                && decor[i + 1][j].carries_ne()
                && decor[i + 1][j + 1].carries_nw()
            {
                count += 1;
            }
        }
    }
    count
}

/// The sign of an admissible pattern: `(-1)` to the number of special
/// little triangles.
pub fn sign(p: &ArrowedPattern) -> i64 {
    if count_special_triangles(p).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Where to evaluate pattern weights: either a numeric point (one
/// rational per variable) or fully symbolically.
///
/// The variables are `t, u, v, w` — marking entries decorated with
/// nothing, an NE arrow, an NW arrow, and both arrows respectively — and
/// one `X_i` per row (`i = 1` at the top).
// Specs are constructed a handful of times per run and never stored in
// bulk, so the size gap between the variants doesn't matter.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq)]
pub enum WeightSpec {
    /// Evaluate at a numeric point.
    Numeric {
        /// Value for the no-arrow marker `t`.
        t: Rational,
        /// Value for the NE-arrow marker `u`.
        u: Rational,
        /// Value for the NW-arrow marker `v`.
        v: Rational,
        /// Value for the both-arrows marker `w`.
        w: Rational,
        /// Values for the row variables `X_1, ..., X_n`; all nonzero.
        xs: Vec<Rational>,
    },
    /// Keep all variables symbolic in a [`LaurentPoly`] over
    /// `t, u, v, w, X1, ..., Xn`.
    Symbolic {
        /// Number of rows (hence of `X` variables).
        n: usize,
    },
}

impl WeightSpec {
    /// A numeric specialization.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Domain`] if any `X_i` is zero (weights contain
    /// negative powers of the `X_i`).
    pub fn numeric(
        t: Rational,
        u: Rational,
        v: Rational,
        w: Rational,
        xs: Vec<Rational>,
    ) -> Result<Self> {
        if xs.is_empty() {
            return Err(Error::Domain("need at least one row variable".into()));
        }
        if xs.iter().any(Rational::is_zero) {
            return Err(Error::Domain("row variables X_i must be nonzero".into()));
        }
        Ok(WeightSpec::Numeric { t, u, v, w, xs })
    }

    /// The specialization `t = u = v = 1`, `X_1 = ... = X_n = 1`, with the
    /// given value of `w`.
    pub fn ones(n: usize, w: Rational) -> Self {
        WeightSpec::Numeric {
            t: Rational::one(),
            u: Rational::one(),
            v: Rational::one(),
            w,
            xs: vec![Rational::one(); n],
        }
    }

    /// A fully symbolic weight for patterns with `n` rows.
    pub fn symbolic(n: usize) -> Self {
        WeightSpec::Symbolic { n }
    }

    /// The number of rows this spec is for.
    pub fn n(&self) -> usize {
        match self {
            WeightSpec::Numeric { xs, .. } => xs.len(),
            WeightSpec::Symbolic { n } => *n,
        }
    }

    /// The symbolic variable list `["t", "u", "v", "w", "X1", ..., "Xn"]`.
    pub fn symbolic_vars(n: usize) -> Vec<String> {
        let mut vars = vec![
            "t".to_string(),
            "u".to_string(),
            "v".to_string(),
            "w".to_string(),
        ];
        for i in 1..=n {
            vars.push(format!("X{i}"));
        }
        vars
    }
}

/// A generating-function value: a rational number at a numeric
/// [`WeightSpec`], a Laurent polynomial at a symbolic one.
#[derive(Clone, Debug, PartialEq)]
pub enum GfValue {
    /// Numeric value.
    Rational(Rational),
    /// Symbolic value over `t, u, v, w, X1, ..., Xn`.
    Poly(LaurentPoly),
}

impl GfValue {
    /// The numeric value, if this is one.
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            GfValue::Rational(r) => Some(r),
            GfValue::Poly(_) => None,
        }
    }

    /// Consumes into the numeric value, if this is one.
    pub fn into_rational(self) -> Option<Rational> {
        match self {
            GfValue::Rational(r) => Some(r),
            GfValue::Poly(_) => None,
        }
    }

    /// The polynomial value, if this is one.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        match self {
            GfValue::Poly(p) => Some(p),
            GfValue::Rational(_) => None,
        }
    }

    /// Consumes into the polynomial value, if this is one.
    pub fn into_poly(self) -> Option<LaurentPoly> {
        match self {
            GfValue::Poly(p) => Some(p),
            GfValue::Rational(_) => None,
        }
    }
}

impl fmt::Display for GfValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GfValue::Rational(r) => write!(f, "{r}"),
            GfValue::Poly(p) => write!(f, "{p}"),
        }
    }
}

impl Serialize for GfValue {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        match self {
            GfValue::Rational(r) => serializer.serialize_str(&r.to_string()),
            GfValue::Poly(p) => p.serialize(serializer),
        }
    }
}

/// The signed weight of an admissible pattern under `spec`.
///
/// The weight is
///
/// ```text
/// sign(A) * t^#none * u^#ne * v^#nw * w^#both
///         * prod_i X_i^(rowsum_i - rowsum_{i-1} + ne_i - nw_i)
/// ```
///
/// where `rowsum_i` is the sum of row `i` (`rowsum_0 = 0` above the top
/// row), and `ne_i` / `nw_i` count the entries of row `i` decorated with
/// *exactly* one NE / NW arrow — entries carrying both arrows contribute
/// to no `X` exponent.
///
/// # Errors
///
/// Returns [`Error::Domain`] if the pattern is not admissible,
/// [`Error::Shape`] if `spec.n()` differs from the number of rows, and
/// [`Error::Pole`] never in practice (row variables are checked nonzero
/// at construction).
pub fn weight(p: &ArrowedPattern, spec: &WeightSpec) -> Result<GfValue> {
    if spec.n() != p.n() {
        return Err(Error::Shape(format!(
            "weight spec is for {} rows, pattern has {}",
            spec.n(),
            p.n()
        )));
    }
    if !is_valid_arrowed(p) {
        return Err(Error::Domain("pattern is not admissible".into()));
    }
    match spec {
        WeightSpec::Numeric { .. } => {
            let ctx = gf::NumericCtx::new(spec)?;
            Ok(GfValue::Rational(gf::weight_in(p, &ctx)?))
        }
        WeightSpec::Symbolic { n } => {
            let ctx = gf::SymbolicCtx::new(*n);
            Ok(GfValue::Poly(gf::weight_in(p, &ctx)?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn pat(rows: Vec<Vec<i64>>) -> GTPattern {
        GTPattern::new(rows).unwrap()
    }

    #[test]
    fn shape_checks() {
        assert!(GTPattern::new(vec![]).is_err());
        assert!(GTPattern::new(vec![vec![1, 2]]).is_err());
        assert!(GTPattern::new(vec![vec![1], vec![1]]).is_err());
        assert!(GTPattern::new(vec![vec![1], vec![0, 2]]).is_ok());

        let base = pat(vec![vec![1], vec![0, 2]]);
        assert!(ArrowedPattern::new(base.clone(), vec![vec![Decoration::None]]).is_err());
        assert!(ArrowedPattern::new(
            base,
            vec![
                vec![Decoration::None],
                vec![Decoration::None, Decoration::None]
            ]
        )
        .is_ok());
    }

    #[test]
    fn interlacing() {
        assert!(is_valid_gt(&pat(vec![vec![1], vec![0, 2]])));
        assert!(is_valid_gt(&pat(vec![vec![2], vec![2, 2]])));
        assert!(!is_valid_gt(&pat(vec![vec![3], vec![0, 2]])));
        assert!(!is_valid_gt(&pat(vec![vec![0], vec![1, 2]])));
        assert!(is_valid_gt(&pat(vec![vec![4], vec![4, 6], vec![2, 5, 7],])));
        assert!(!is_valid_gt(&pat(
            vec![vec![4], vec![4, 6], vec![5, 5, 7],]
        )));
    }

    #[test]
    fn admissibility_top_entry_is_vacuous() {
        // A decorated top entry has no neighbours above; any decoration is
        // admissible on it.
        for d in Decoration::ALL {
            let p = ArrowedPattern::new(pat(vec![vec![4]]), vec![vec![d]]).unwrap();
            assert!(is_valid_arrowed(&p), "decoration {d}");
        }
        // Equality with the NW neighbour, but the decorated entry is the
        // top one looking at a *missing* right partner: [[4],[4,6]] with an
        // NW arrow on the top 4 is admissible (its NW neighbour does not
        // exist), and an NE arrow on the bottom-left 4 is not (its NE
        // neighbour 4 matches, but 6 != 4).
        let base = pat(vec![vec![4], vec![4, 6]]);
        let ok = ArrowedPattern::new(
            base.clone(),
            vec![
                vec![Decoration::Nw],
                vec![Decoration::None, Decoration::None],
            ],
        )
        .unwrap();
        assert!(is_valid_arrowed(&ok));
        let bad = ArrowedPattern::new(
            base,
            vec![
                vec![Decoration::None],
                vec![Decoration::Ne, Decoration::None],
            ],
        )
        .unwrap();
        assert!(!is_valid_arrowed(&bad));
    }

    #[test]
    fn admissibility_forces_partners() {
        // Base [[5],[5,5]]: bottom-left 5 equals its NE neighbour, the
        // bottom-right 5 equals its NW neighbour.
        let base = pat(vec![vec![5], vec![5, 5]]);
        let mk = |d0: Decoration, d1: Decoration, d2: Decoration| {
            ArrowedPattern::new(base.clone(), vec![vec![d0], vec![d1, d2]]).unwrap()
        };
        use Decoration::{Both, Ne, None as No, Nw};
        // NE on the left forces NW (or both) on the right.
        assert!(!is_valid_arrowed(&mk(No, Ne, No)));
        assert!(!is_valid_arrowed(&mk(No, Ne, Ne)));
        assert!(is_valid_arrowed(&mk(No, Ne, Nw)));
        assert!(is_valid_arrowed(&mk(No, Ne, Both)));
        // NW on the right forces NE (or both) on the left.
        assert!(!is_valid_arrowed(&mk(No, No, Nw)));
        assert!(is_valid_arrowed(&mk(No, Both, Nw)));
        // No equal-arrow conflicts at all.
        assert!(is_valid_arrowed(&mk(Both, No, No)));
        assert!(is_valid_arrowed(&mk(No, Nw, Ne)));
    }

    #[test]
    fn special_little_triangles_and_sign() {
        use Decoration::{Both, Ne, None as No, Nw};
        let base = pat(vec![vec![5], vec![5, 5]]);
        let slt = ArrowedPattern::new(base.clone(), vec![vec![No], vec![Ne, Nw]]).unwrap();
        assert_eq!(count_special_triangles(&slt), 1);
        assert_eq!(sign(&slt), -1);
        let slt_both = ArrowedPattern::new(base.clone(), vec![vec![No], vec![Both, Both]]).unwrap();
        assert_eq!(count_special_triangles(&slt_both), 1);
        let no_slt = ArrowedPattern::new(base, vec![vec![No], vec![Nw, Ne]]).unwrap();
        assert_eq!(count_special_triangles(&no_slt), 0);
        assert_eq!(sign(&no_slt), 1);
    }

    #[test]
    fn serde_round_trip() {
        use Decoration::{Ne, None as No};
        let p = ArrowedPattern::new(pat(vec![vec![1], vec![0, 2]]), vec![vec![Ne], vec![No, No]])
            .unwrap();
        let json = serde_json::to_value(&p).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"rows": [[1], [0, 2]], "decor": [["ne"], ["none", "none"]]})
        );
        let q: ArrowedPattern = serde_json::from_value(json).unwrap();
        assert_eq!(p, q);
        // Malformed shapes are rejected.
        let bad = serde_json::json!({"rows": [[1, 2]], "decor": [["ne", "none"]]});
        assert!(serde_json::from_value::<ArrowedPattern>(bad).is_err());
    }

    #[test]
    fn weight_requires_matching_spec_and_validity() {
        use Decoration::{Ne, None as No};
        let p = ArrowedPattern::new(pat(vec![vec![1], vec![0, 2]]), vec![vec![Ne], vec![No, No]])
            .unwrap();
        assert!(matches!(
            weight(&p, &WeightSpec::ones(3, rat(1))),
            Err(Error::Shape(_))
        ));
        let bad = ArrowedPattern::new(pat(vec![vec![0], vec![0, 2]]), vec![vec![No], vec![Ne, No]])
            .unwrap();
        assert!(matches!(
            weight(&bad, &WeightSpec::ones(2, rat(1))),
            Err(Error::Domain(_))
        ));
    }
}

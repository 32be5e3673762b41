//! Deterministic sampling of exact rational parameter points.
//!
//! Verification sweeps evaluate identities at random rational points;
//! everything here is driven by a single seeded ChaCha generator so a
//! report's seed reproduces its exact rows. The module also implements
//! the pole policy: a sampled point that raises [`Error::Pole`] is
//! logged and replaced by a fresh draw ([`Sampler::with_retries`]) — a
//! check may only fail on a genuine value mismatch.

use crate::exactnum::{rat, ratio, Rational};
use crate::symfunc::XPoint;
use crate::{Error, Result};
use num::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Seeded source of random exact parameters.
pub struct Sampler {
    rng: ChaCha8Rng,
    seed: u64,
    skipped: Vec<String>,
}

impl Sampler {
    /// Creates a sampler from a 64-bit seed.
    pub fn new(seed: u64) -> Sampler {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            seed,
            skipped: Vec::new(),
        }
    }

    /// The seed this sampler was created with.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform integer in `lo..=hi`.
    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    /// A rational `p/q` with `p` in `-12..=12` and `1 ≤ q ≤ max_den`
    /// (the reduced denominator never exceeds `max_den`).
    pub fn rational(&mut self, max_den: i64) -> Rational {
        let p = self.int(-12, 12);
        let q = self.int(1, max_den.max(1));
        ratio(p, q)
    }

    /// A nonzero rational with bounded denominator.
    pub fn nonzero_rational(&mut self, max_den: i64) -> Rational {
        loop {
            let r = self.rational(max_den);
            if !r.is_zero() {
                return r;
            }
        }
    }

    /// A rational with bounded denominator for which `reject` is false.
    ///
    /// Panics if 10 000 draws all get rejected — predicates here are
    /// expected to exclude only thin sets (poles, degeneracies).
    pub fn rational_where(&mut self, max_den: i64, reject: impl Fn(&Rational) -> bool) -> Rational {
        for _ in 0..10_000 {
            let r = self.rational(max_den);
            if !reject(&r) {
                return r;
            }
        }
        panic!("rational_where rejected 10000 consecutive draws");
    }

    /// A fully generic evaluation point for the symmetric-function
    /// forms: coordinates nonzero, pairwise distinct, none equal to 1,
    /// and no pair multiplying to 1.
    pub fn generic_xs(&mut self, n: usize) -> XPoint {
        for _ in 0..10_000 {
            let xs: Vec<Rational> = (0..n).map(|_| self.nonzero_rational(5)).collect();
            let point = XPoint::new(xs);
            if point.is_distinct() && point.none_equals_one() && point.products_ne_one() {
                return point;
            }
        }
        panic!("failed to draw a fully generic point after 10000 attempts");
    }

    /// Records a skipped point (pole or degeneracy) for the report.
    pub fn log_skip(&mut self, context: impl Into<String>) {
        self.skipped.push(context.into());
    }

    /// All skip records so far, in order.
    pub fn skipped(&self) -> &[String] {
        &self.skipped
    }

    /// Runs `draw` until it succeeds, logging and redrawing on
    /// [`Error::Pole`] and [`Error::Degenerate`] up to `attempts` times;
    /// any other error propagates immediately.
    pub fn with_retries<T>(
        &mut self,
        context: &str,
        attempts: usize,
        mut draw: impl FnMut(&mut Sampler) -> Result<T>,
    ) -> Result<T> {
        let mut last = Error::Domain(format!("{context}: zero attempts"));
        for _ in 0..attempts.max(1) {
            match draw(self) {
                Ok(value) => return Ok(value),
                Err(Error::Pole(msg)) => {
                    self.skipped.push(format!("{context}: pole: {msg}"));
                    last = Error::Pole(msg);
                }
                Err(Error::Degenerate(msg)) => {
                    self.skipped.push(format!("{context}: degenerate: {msg}"));
                    last = Error::Degenerate(msg);
                }
                Err(other) => return Err(other),
            }
        }
        Err(last)
    }

    /// A random numeric weight specialization `(t, u, v, w)` with small
    /// nonzero components.
    pub fn weight_values(&mut self) -> [Rational; 4] {
        [
            self.nonzero_rational(4),
            self.nonzero_rational(4),
            self.nonzero_rational(4),
            self.rational(4),
        ]
    }
}

/// The classical weight values `t = u = v = 1` with the given `w`.
pub fn ones_with_w(w: i64) -> [Rational; 4] {
    [rat(1), rat(1), rat(1), rat(w)]
}

//! Arithmetic abstraction.
//!
//! Every numeric routine in this crate is generic over [`Scalar`] so the same
//! code runs in two modes: `f64` for fast floating-point sweeps and
//! [`Rational`] (arbitrary-precision integer fractions) for exact
//! certificates. Exact mode uses zero tolerances everywhere; float mode
//! compares against a small epsilon, see [`default_tolerance`].

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{Signed, ToPrimitive};
use std::fmt::{Debug, Display};

/// Arbitrary-precision fraction type used by the exact mode.
pub type Rational = BigRational;

/// Field-like number the solvers and certificate checks are generic over.
///
/// `Signed` brings the ring operations, `zero`/`one`, `abs` and sign tests;
/// the methods below cover conversions in and out of the type.
pub trait Scalar: Clone + PartialOrd + Signed + Display + Debug + Send + Sync + 'static {
    fn from_int(n: i64) -> Self;

    /// Exact ratio `num / den`; `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;

    /// Lossless lift of a finite float (every finite `f64` is a dyadic
    /// rational). Returns `None` for NaN or infinities.
    fn from_f64_lossless(v: f64) -> Option<Self>;

    fn to_f64(&self) -> f64;

    /// True when arithmetic is exact and comparisons need no tolerance.
    fn is_exact() -> bool;

    fn is_finite_value(&self) -> bool;

    /// Exact fraction rendering ("17/12") when the representation is exact.
    fn exact_string(&self) -> Option<String>;
}

impl Scalar for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f64 / den as f64
    }

    fn from_f64_lossless(v: f64) -> Option<Self> {
        v.is_finite().then_some(v)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn is_exact() -> bool {
        false
    }

    fn is_finite_value(&self) -> bool {
        self.is_finite()
    }

    fn exact_string(&self) -> Option<String> {
        None
    }
}

impl Scalar for Rational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_f64_lossless(v: f64) -> Option<Self> {
        BigRational::from_float(v)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn is_exact() -> bool {
        true
    }

    fn is_finite_value(&self) -> bool {
        true
    }

    fn exact_string(&self) -> Option<String> {
        Some(self.to_string())
    }
}

/// Shorthand for `T::from_int`.
pub fn int<T: Scalar>(n: i64) -> T {
    T::from_int(n)
}

/// Shorthand for `T::from_ratio`.
pub fn ratio<T: Scalar>(num: i64, den: i64) -> T {
    T::from_ratio(num, den)
}

/// `base^exp` by repeated squaring (exact for rationals).
pub fn pow_int<T: Scalar>(base: &T, mut exp: usize) -> T {
    let mut acc = T::one();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * sq.clone();
        }
        sq = sq.clone() * sq.clone();
        exp >>= 1;
    }
    acc
}

/// Zero in exact mode, 1e-9 in float mode. All solver and certificate
/// comparisons default to this.
pub fn default_tolerance<T: Scalar>() -> T {
    if T::is_exact() {
        T::zero()
    } else {
        T::from_ratio(1, 1_000_000_000)
    }
}

/// `|value| <= tol * max(1, |scale|)`, the uniform "is this zero" test.
/// With `tol = 0` (exact mode) this degenerates to an exact zero test.
pub fn within_tol<T: Scalar>(value: &T, tol: &T, scale: &T) -> bool {
    let s = if scale.abs() > T::one() { scale.abs() } else { T::one() };
    value.abs() <= tol.clone() * s
}

/// Deterministic human-readable rendering: the exact fraction when the
/// scalar carries one, otherwise the shortest round-trip float form.
pub fn display_value<T: Scalar>(v: &T) -> String {
    v.exact_string().unwrap_or_else(|| format!("{}", v.to_f64()))
}

/// Arithmetic mode selector used by configuration and the CLI. The generic
/// code does not branch on this; it picks the `Scalar` instantiation
/// (`Float64` -> `f64`, `ExactRational` -> [`Rational`]).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ArithmeticMode {
    Float64 { tolerance: f64 },
    ExactRational,
}

impl ArithmeticMode {
    pub fn float_default() -> Self {
        ArithmeticMode::Float64 { tolerance: 1e-9 }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, ArithmeticMode::ExactRational)
    }
}

impl Default for ArithmeticMode {
    fn default() -> Self {
        ArithmeticMode::float_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::traits::{One, Zero};

    #[test]
    fn rational_round_trips() {
        let v: Rational = ratio(17, 12);
        assert_eq!(v.exact_string().unwrap(), "17/12");
        assert!((Scalar::to_f64(&v) - 17.0 / 12.0).abs() < 1e-15);
    }

    #[test]
    fn lossless_lift_is_exact() {
        let v = Rational::from_f64_lossless(0.125).unwrap();
        assert_eq!(v, ratio::<Rational>(1, 8));
        assert!(Rational::from_f64_lossless(f64::NAN).is_none());
    }

    #[test]
    fn pow_int_matches_direct() {
        let q: Rational = ratio(3, 2);
        assert_eq!(pow_int(&q, 4), ratio::<Rational>(81, 16));
        assert_eq!(pow_int(&2.0_f64, 10), 1024.0);
        assert_eq!(pow_int(&q, 0), Rational::one());
    }

    #[test]
    fn tolerance_modes() {
        assert_eq!(default_tolerance::<Rational>(), Rational::zero());
        assert!(default_tolerance::<f64>() > 0.0);
        let tol = default_tolerance::<f64>();
        assert!(within_tol(&1e-12, &tol, &1.0));
        assert!(!within_tol(&1e-3, &tol, &1.0));
        // Exact mode: only an exact zero passes.
        let z = Rational::zero();
        assert!(within_tol(&z, &Rational::zero(), &Rational::one()));
        assert!(!within_tol(
            &ratio::<Rational>(1, 1_000_000_000_000),
            &Rational::zero(),
            &Rational::one()
        ));
    }
}

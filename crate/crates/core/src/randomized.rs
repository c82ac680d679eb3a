//! The randomized ratio for the line: against an oblivious hider the best
//! randomized strategy achieves ratio q = 1 + a where a·ln a = a + 1, with
//! additive term d(q − 1)/2. Solved by bisection plus a Newton polish over
//! f(a) = a·ln a − (a + 1), which is −1 at a = e and increasing past its
//! root, so [e, 10] brackets the unique solution.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomizedRatio {
    /// Root of a·ln a = a + 1.
    pub a: f64,
    /// The ratio 1 + a.
    pub q: f64,
    /// |(a+1)/ln a − a|, a residual in the fixed-point form of the equation.
    pub residual: f64,
}

pub fn solve_randomized_ratio(tolerance: f64) -> Result<RandomizedRatio> {
    if !tolerance.is_finite() || tolerance < 1e-15 {
        return Err(Error::InvalidInput(
            "tolerance must be a finite number of at least 1e-15".into(),
        ));
    }
    let f = |a: f64| a * a.ln() - (a + 1.0);
    let mut lo = std::f64::consts::E;
    let mut hi = 10.0;
    debug_assert!(f(lo) < 0.0 && f(hi) > 0.0);
    while hi - lo > 1e-14 {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            lo = mid;
            hi = mid;
        } else if fm < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut a = 0.5 * (lo + hi);
    for _ in 0..8 {
        let fa = f(a);
        if fa.abs() <= 0.25 * tolerance * a {
            break;
        }
        a = (a - fa / a.ln()).clamp(lo, hi);
    }
    if f(a).abs() > tolerance * a {
        return Err(Error::Internal(format!(
            "root refinement stalled at a={a} with |f(a)|={}",
            f(a).abs()
        )));
    }
    Ok(RandomizedRatio { a, q: 1.0 + a, residual: ((a + 1.0) / a.ln() - a).abs() })
}

/// Additive term d(q − 1)/2 once a ratio q > 1 is fixed; q = 9 recovers the
/// deterministic bound 4d and the randomized q gives ≈ 1.7955605·d.
pub fn randomized_additive_bound(q: f64, d: f64) -> Result<f64> {
    if !q.is_finite() || q <= 1.0 {
        return Err(Error::InvalidInput("ratio must be a finite number above 1".into()));
    }
    if !d.is_finite() || d < 0.0 {
        return Err(Error::InvalidInput("turn cost must be finite and nonnegative".into()));
    }
    Ok(d * (q - 1.0) / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_matches_the_known_ratio() {
        let r = solve_randomized_ratio(1e-9).unwrap();
        assert!((r.q - 4.591121).abs() <= 1e-6, "q={}", r.q);
        assert!((r.a * r.a.ln() - (r.a + 1.0)).abs() <= 1e-12 * r.a);
        assert!(r.residual < 1e-10);
    }

    #[test]
    fn tolerance_is_validated() {
        assert!(solve_randomized_ratio(0.0).is_err());
        assert!(solve_randomized_ratio(-1.0).is_err());
        assert!(solve_randomized_ratio(f64::NAN).is_err());
        assert!(solve_randomized_ratio(1e-16).is_err());
        assert!(solve_randomized_ratio(1e-15).is_ok());
        assert!(solve_randomized_ratio(1e-12).is_ok());
    }

    #[test]
    fn result_is_stable_across_tolerances() {
        let tight = solve_randomized_ratio(1e-12).unwrap();
        for tol in [1e-10, 1e-8, 1e-6] {
            let r = solve_randomized_ratio(tol).unwrap();
            assert!((r.a - tight.a).abs() < 1e-9);
        }
    }

    #[test]
    fn additive_bound_values() {
        let r = solve_randomized_ratio(1e-12).unwrap();
        let b = randomized_additive_bound(r.q, 1.0).unwrap();
        assert!((b - 1.7955605).abs() <= 1e-6, "bound={b}");
        assert_eq!(randomized_additive_bound(9.0, 1.0).unwrap(), 4.0);
        assert_eq!(randomized_additive_bound(9.0, 0.0).unwrap(), 0.0);
        assert!(randomized_additive_bound(1.0, 1.0).is_err());
        assert!(randomized_additive_bound(4.6, -1.0).is_err());
    }
}

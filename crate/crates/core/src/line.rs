//! Searching on a line with turn cost: the LP truncation family, the
//! closed-form strategy and duals, optimality certificates, and the
//! ratio/additive-term trade-off sweep.
//!
//! The base system fixes the competitive coefficient at 9 (the optimal ratio)
//! and minimizes the additive term B over strategies x and B:
//!
//! ```text
//!   row 1:      2x_1 + d ≤ B
//!   row 2:      (3−c)x_1 + 2x_2 + 2d ≤ B
//!   row i ≥ 3:  2x_1 + … + 2x_{i−2} + (3−c)x_{i−1} + 2x_i + i·d ≤ B
//! ```
//!
//! with c = 9. λ_n denotes B_n/d; the truncations increase toward the limit
//! λ = 2. Replacing −6 by 3−c for c > 9 trades ratio against additive term.

use crate::certificate::{certify_ray_family, OptimalityCertificate, RayFamily};
use crate::error::{Error, Result};
use crate::lp::{solve, LinearProgram, LpRow, LpStatus, SolveOptions};
use crate::report::{fmt6, truncate_decimals};
use crate::scalar::{int, ratio, Scalar};
use crate::strategy::SearchStrategy;

#[derive(Clone, Debug, PartialEq)]
pub struct LineInstance<T> {
    turn_cost: T,
    ratio_coefficient: T,
}

impl<T: Scalar> LineInstance<T> {
    pub fn new(turn_cost: T, ratio_coefficient: T) -> Result<Self> {
        if !turn_cost.is_finite_value() || turn_cost <= T::zero() {
            return Err(Error::InvalidInput("turn cost must be finite and positive".into()));
        }
        if !ratio_coefficient.is_finite_value() || ratio_coefficient < int(9) {
            return Err(Error::InvalidInput("ratio coefficient must be at least 9".into()));
        }
        Ok(LineInstance { turn_cost, ratio_coefficient })
    }

    /// The base problem: optimal ratio 9, additive term to be minimized.
    pub fn base(turn_cost: T) -> Result<Self> {
        Self::new(turn_cost, int(9))
    }

    pub fn turn_cost(&self) -> &T {
        &self.turn_cost
    }

    pub fn ratio_coefficient(&self) -> &T {
        &self.ratio_coefficient
    }
}

/// Depth-n truncation over variables (x_1 … x_n, B), minimizing B.
pub fn build_line_lp<T: Scalar>(inst: &LineInstance<T>, n: usize) -> Result<LinearProgram<T>> {
    if n < 1 {
        return Err(Error::InvalidInput("depth must be at least 1".into()));
    }
    let nv = n + 1;
    let mut objective = vec![T::zero(); nv];
    objective[n] = T::one();
    let slow = int::<T>(3) - inst.ratio_coefficient.clone();
    let two = int::<T>(2);
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        let mut coeffs = vec![T::zero(); nv];
        for k in 1..=i {
            coeffs[k - 1] = if k + 1 == i {
                slow.clone()
            } else {
                two.clone()
            };
        }
        coeffs[n] = -T::one();
        rows.push(LpRow { coeffs, rhs: -(int::<T>(i as i64) * inst.turn_cost.clone()) });
    }
    LinearProgram::minimize(objective, rows)
}

/// Solves the truncations at the given sizes and reports λ_n = B_n/d.
pub fn lambda_sequence<T: Scalar>(
    inst: &LineInstance<T>,
    sizes: &[usize],
    opts: &SolveOptions<T>,
) -> Result<Vec<(usize, T)>> {
    let mut out = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let lp = build_line_lp(inst, n)?;
        let sol = solve(&lp, opts)?;
        if sol.status != LpStatus::Optimal {
            return Err(Error::Internal(format!("truncation n={n} did not solve to optimality")));
        }
        out.push((n, sol.objective / inst.turn_cost.clone()));
    }
    Ok(out)
}

/// Richardson step 2λ_{2n} − λ_n for the largest doubling pair present.
pub fn extrapolate_limit<T: Scalar>(pairs: &[(usize, T)]) -> Result<T> {
    let mut best: Option<(usize, &T, &T)> = None;
    for (n, lam) in pairs {
        if let Some((_, lam2)) = pairs.iter().find(|(k, _)| *k == 2 * n) {
            if best.is_none_or(|(bn, _, _)| *n > bn) {
                best = Some((*n, lam, lam2));
            }
        }
    }
    let (_, lam, lam2) = best
        .ok_or_else(|| Error::InvalidInput("no (n, 2n) doubling pair available to extrapolate".into()))?;
    Ok(int::<T>(2) * lam2.clone() - lam.clone())
}

/// The certified strategy x_i = d(2^i − 1)/2 as a two-ray prefix.
pub fn closed_form_line_strategy<T: Scalar>(d: &T, n: usize) -> Result<SearchStrategy<T>> {
    if !d.is_finite_value() || *d <= T::zero() {
        return Err(Error::InvalidInput("turn cost must be finite and positive".into()));
    }
    if n < 1 {
        return Err(Error::InvalidInput("strategy length must be at least 1".into()));
    }
    SearchStrategy::new(2, d.clone(), RayFamily::new(2, d).steps(n))
}

/// The dual sequence y_j = 2^{−j} with its analytic geometric tails.
#[derive(Clone, Debug, PartialEq)]
pub struct DualSequence<T> {
    /// y_1 … y_N.
    pub values: Vec<T>,
    /// Σ_{j>N} y_j = 2^{−N}.
    pub tail_sum: T,
    /// Σ_{j>N} j·y_j = (N+2)·2^{−N}.
    pub tail_weighted_sum: T,
    /// The closed forms behind the two tail fields.
    pub tail_description: String,
}

pub fn line_dual_sequence<T: Scalar>(n: usize) -> Result<DualSequence<T>> {
    if n < 1 {
        return Err(Error::InvalidInput("dual sequence length must be at least 1".into()));
    }
    let half: T = ratio(1, 2);
    let mut values = Vec::with_capacity(n);
    let mut power = T::one();
    for _ in 0..n {
        power = power * half.clone();
        values.push(power.clone());
    }
    let tail_sum = power.clone();
    let tail_weighted_sum = int::<T>(n as i64 + 2) * power;
    let tail_description = format!(
        "sum_{{j>{n}}} y_j = 2^-{n}; sum_{{j>{n}}} j*y_j = ({n}+2)*2^-{n}"
    );
    Ok(DualSequence { values, tail_sum, tail_weighted_sum, tail_description })
}

/// Certifies that x_i = d(2^i−1)/2 with B = 2d is optimal: all rows tight,
/// all dual columns cancel against y_j = 2^{−j} with analytic tails, and the
/// dual objective equals 2d. N ≥ 3 exercises the general row shape.
pub fn certify_line_optimality<T: Scalar>(d: &T, n: usize, tol: &T) -> Result<OptimalityCertificate<T>> {
    if !d.is_finite_value() || *d <= T::zero() {
        return Err(Error::InvalidInput("turn cost must be finite and positive".into()));
    }
    if n < 3 {
        return Err(Error::InvalidInput("certificate depth must be at least 3".into()));
    }
    Ok(certify_ray_family(2, d, n, tol))
}

#[derive(Clone, Debug, PartialEq)]
pub struct TradeoffPoint<T> {
    pub c: T,
    pub n: usize,
    /// λ_n at this c — a valid lower bound on the optimal B/d.
    pub lower_bound: T,
    /// Richardson estimate 2λ_n − λ_{n/2}.
    pub extrapolated: T,
}

/// Sweeps the ratio coefficient and reports the additive-term bound at each
/// c. Depth n is rounded down to an even truncation so the (n/2, n)
/// doubling pair is available.
pub fn tradeoff_curve<T: Scalar>(
    d: &T,
    c_values: &[T],
    n: usize,
    opts: &SolveOptions<T>,
) -> Result<Vec<TradeoffPoint<T>>> {
    if n < 2 {
        return Err(Error::InvalidInput("trade-off depth must be at least 2".into()));
    }
    let k = n / 2;
    let mut out = Vec::with_capacity(c_values.len());
    for c in c_values {
        let inst = LineInstance::new(d.clone(), c.clone())?;
        let pairs = lambda_sequence(&inst, &[k, 2 * k], opts)?;
        let low = pairs[0].1.clone();
        let high = pairs[1].1.clone();
        out.push(TradeoffPoint {
            c: c.clone(),
            n: 2 * k,
            lower_bound: high.clone(),
            extrapolated: int::<T>(2) * high - low,
        });
    }
    Ok(out)
}

/// One row of the λ/strategy/dual convergence table (c = 9), carrying both
/// full-precision values and the 4-decimal truncations.
#[derive(Clone, Debug, PartialEq)]
pub struct TableRow {
    pub n: usize,
    pub lambda: f64,
    pub lambda_truncated: String,
    /// First min(n, 5) primal steps and their truncations.
    pub xs: Vec<f64>,
    pub xs_truncated: Vec<String>,
    /// First min(n, 5) dual values and their truncations.
    pub ys: Vec<f64>,
    pub ys_truncated: Vec<String>,
}

/// Solves the base truncations at the given sizes (λ = B/d). A row that
/// fails to solve is reported as an error entry without aborting the rest.
pub fn table_rows(sizes: &[usize], d: f64) -> Vec<(usize, Result<TableRow>)> {
    let inst = match LineInstance::<f64>::base(d) {
        Ok(inst) => inst,
        Err(e) => return sizes.iter().map(|&n| (n, Err(e.clone()))).collect(),
    };
    let opts = SolveOptions::standard();
    sizes
        .iter()
        .map(|&n| {
            let row = build_line_lp(&inst, n).and_then(|lp| {
                let sol = solve(&lp, &opts)?;
                if sol.status != LpStatus::Optimal {
                    return Err(Error::Internal(format!("truncation n={n} did not solve to optimality")));
                }
                let take = n.min(5);
                let xs: Vec<f64> = sol.primal[..take].to_vec();
                let ys: Vec<f64> = sol.dual[..take].to_vec();
                let lambda = sol.objective / d;
                Ok(TableRow {
                    n,
                    lambda,
                    lambda_truncated: truncate_decimals(lambda, 4),
                    xs_truncated: xs.iter().map(|&v| truncate_decimals(v, 4)).collect(),
                    ys_truncated: ys.iter().map(|&v| truncate_decimals(v, 4)).collect(),
                    xs,
                    ys,
                })
            });
            (n, row)
        })
        .collect()
}

/// 6-decimal lambda table: (n, λ_n, λ_n truncated to 4 decimals).
pub fn lambda_csv(pairs: &[(usize, f64)]) -> String {
    let mut out = String::from("n,lambda,lambda_trunc\n");
    for (n, lam) in pairs {
        out.push_str(&format!("{n},{},{}\n", fmt6(*lam), truncate_decimals(*lam, 4)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn row_shapes_match_the_display() {
        let inst = LineInstance::base(1.0).unwrap();
        let lp = build_line_lp(&inst, 3).unwrap();
        assert_eq!(lp.rows()[0].coeffs, vec![2.0, 0.0, 0.0, -1.0]);
        assert_eq!(lp.rows()[0].rhs, -1.0);
        assert_eq!(lp.rows()[1].coeffs, vec![-6.0, 2.0, 0.0, -1.0]);
        assert_eq!(lp.rows()[2].coeffs, vec![2.0, -6.0, 2.0, -1.0]);
        assert_eq!(lp.rows()[2].rhs, -3.0);

        let single = build_line_lp(&inst, 1).unwrap();
        assert_eq!(single.rows()[0].coeffs, vec![2.0, -1.0]);

        let wide = LineInstance::new(1.0, 11.0).unwrap();
        let lp11 = build_line_lp(&wide, 2).unwrap();
        assert_eq!(lp11.rows()[1].coeffs[0], -8.0);
    }

    #[test]
    fn lambda_values_match_the_known_truncations() {
        let inst = LineInstance::base(1.0).unwrap();
        let seq = lambda_sequence(&inst, &[1, 5], &SolveOptions::standard()).unwrap();
        assert!((seq[0].1 - 1.0).abs() < 1e-12);
        assert!((seq[1].1 - 1.6125).abs() < 1e-10);
    }

    #[test]
    fn lambda_small_depths_are_exact_fractions() {
        let inst = LineInstance::base(Rational::from_int(1)).unwrap();
        let seq = lambda_sequence(&inst, &[3, 4], &SolveOptions::standard()).unwrap();
        assert_eq!(seq[0].1, ratio::<Rational>(17, 12));
        assert_eq!(seq[1].1, ratio::<Rational>(49, 32));
    }

    #[test]
    fn extrapolation_uses_the_largest_doubling_pair() {
        let est = extrapolate_limit(&[(200usize, 1.99f64), (400, 1.995)]).unwrap();
        assert!((est - 2.0).abs() < 1e-12);
        let fixed = extrapolate_limit(&[(10usize, 1.5f64), (20, 1.5)]).unwrap();
        assert!((fixed - 1.5).abs() < 1e-12);
        let older = extrapolate_limit(&[(50usize, 1.96f64), (100, 1.98)]).unwrap();
        assert!((older - 2.0).abs() < 1e-12);
        assert!(extrapolate_limit(&[(3usize, 1.0f64), (5, 1.1)]).is_err());
    }

    #[test]
    fn closed_form_strategy_values() {
        let s = closed_form_line_strategy(&1.0, 3).unwrap();
        assert_eq!(s.steps(), &[0.5, 1.5, 3.5]);
        let d2 = closed_form_line_strategy(&2.0, 1).unwrap();
        assert_eq!(d2.steps(), &[1.0]);
        let deep = closed_form_line_strategy(&1.0, 10).unwrap();
        assert_eq!(*deep.step(10), 511.5);
    }

    #[test]
    fn dual_sequence_and_tails() {
        let d3 = line_dual_sequence::<f64>(3).unwrap();
        assert_eq!(d3.values, vec![0.5, 0.25, 0.125]);
        let d1 = line_dual_sequence::<f64>(1).unwrap();
        assert_eq!(d1.tail_weighted_sum, 1.5);
        assert_eq!(d1.values[0] * 1.0 + d1.tail_weighted_sum, 2.0);
        let d2 = line_dual_sequence::<f64>(2).unwrap();
        assert_eq!(d2.values.iter().sum::<f64>() + d2.tail_sum, 1.0);
    }

    #[test]
    fn certificates_hold_exactly_in_rational_mode() {
        let cert = certify_line_optimality(&Rational::from_int(1), 10, &Rational::from_int(0)).unwrap();
        assert!(cert.is_certified(), "{:?}", cert.verdict);
        assert_eq!(cert.primal_objective, Rational::from_int(2));
        assert_eq!(cert.dual_objective, Rational::from_int(2));

        let scaled = certify_line_optimality(&Rational::from_int(5), 10, &Rational::from_int(0)).unwrap();
        assert_eq!(scaled.primal_objective, Rational::from_int(10));
        assert_eq!(scaled.dual_objective, Rational::from_int(10));

        let float = certify_line_optimality(&1.0, 3, &1e-9).unwrap();
        assert_eq!(float.constraint_residuals[2], 0.0);
        assert!(certify_line_optimality(&1.0, 2, &1e-9).is_err());
    }

    #[test]
    fn tradeoff_points_decrease_in_c() {
        let points = tradeoff_curve(&1.0, &[9.0, 12.0, 23.0], 20, &SolveOptions::standard()).unwrap();
        assert_eq!(points.len(), 3);
        for w in points.windows(2) {
            assert!(w[0].lower_bound > w[1].lower_bound);
        }
        for p in &points {
            assert!(p.lower_bound > 1.0 && p.lower_bound <= 2.0);
            assert_eq!(p.n, 20);
        }
    }

    #[test]
    fn table_rows_truncate_not_round() {
        let rows = table_rows(&[1, 2, 7], 1.0);
        let r1 = rows[0].1.as_ref().unwrap();
        assert_eq!(r1.lambda_truncated, "1.0000");
        assert_eq!(r1.xs_truncated, vec!["0.0000"]);
        let r2 = rows[1].1.as_ref().unwrap();
        assert_eq!(r2.lambda_truncated, "1.2500");
        assert_eq!(r2.xs_truncated, vec!["0.1250", "0.0000"]);
        assert_eq!(r2.ys_truncated, vec!["0.7500", "0.2500"]);
        // 769/448 = 1.71651…: truncation keeps 1.7165 (rounding would agree),
        // and y_1 = 4/7 = 0.571428… must truncate to 0.5714, not round up.
        let r7 = rows[2].1.as_ref().unwrap();
        assert_eq!(r7.lambda_truncated, "1.7165");
        assert_eq!(r7.ys_truncated[0], "0.5714");
    }
}

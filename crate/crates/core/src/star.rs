//! Searching m rays from a common origin with turn cost: the LP truncation
//! family, the closed-form geometric strategy, the recursive dual sequence,
//! and optimality certificates. The line is the m = 2 special case, and
//! every operation here reduces to its line counterpart exactly.
//!
//! Shorthands: q = m/(m−1) (step growth ratio), M = m^m/(m−1)^{m−1} = m·q^{m−1}
//! (so the competitive coefficient is 1 + 2M), B = (M − m)·d (additive term).

use crate::certificate::{certify_ray_family, ray_duals, OptimalityCertificate, RayFamily};
use crate::error::{Error, Result};
use crate::lp::{solve, LinearProgram, LpRow, LpStatus, SolveOptions};
use crate::report::StarConvergenceRow;
use crate::scalar::{int, pow_int, ratio, Scalar};
use crate::strategy::SearchStrategy;

#[derive(Clone, Debug, PartialEq)]
pub struct StarInstance<T> {
    rays: usize,
    turn_cost: T,
    split: Option<(T, T)>,
}

impl<T: Scalar> StarInstance<T> {
    pub fn new(rays: usize, turn_cost: T) -> Result<Self> {
        if rays < 2 {
            return Err(Error::InvalidInput(format!("ray count must be at least 2, got {rays}")));
        }
        if !turn_cost.is_finite_value() || turn_cost <= T::zero() {
            return Err(Error::InvalidInput("turn cost must be finite and positive".into()));
        }
        Ok(StarInstance { rays, turn_cost, split: None })
    }

    /// Separate on-ray and at-origin turn charges; only their sum d enters
    /// any formula, the split is carried for reporting.
    pub fn with_split(rays: usize, on_ray: T, at_origin: T) -> Result<Self> {
        if on_ray < T::zero() || at_origin < T::zero() {
            return Err(Error::InvalidInput("split turn costs must be nonnegative".into()));
        }
        let mut inst = Self::new(rays, on_ray.clone() + at_origin.clone())?;
        inst.split = Some((on_ray, at_origin));
        Ok(inst)
    }

    pub fn rays(&self) -> usize {
        self.rays
    }

    pub fn turn_cost(&self) -> &T {
        &self.turn_cost
    }

    pub fn turn_cost_split(&self) -> Option<(&T, &T)> {
        self.split.as_ref().map(|(a, b)| (a, b))
    }

    /// q = m/(m−1).
    pub fn growth_ratio(&self) -> T {
        ratio(self.rays as i64, self.rays as i64 - 1)
    }

    /// M = m·q^{m−1} = m^m/(m−1)^{m−1}.
    pub fn mass(&self) -> T {
        int::<T>(self.rays as i64) * pow_int(&self.growth_ratio(), self.rays - 1)
    }

    /// 1 + 2M, the optimal ratio coefficient for m rays.
    pub fn competitive_coefficient(&self) -> T {
        T::one() + int::<T>(2) * self.mass()
    }

    /// B = (M − m)·d.
    pub fn additive_term(&self) -> T {
        (self.mass() - int::<T>(self.rays as i64)) * self.turn_cost.clone()
    }
}

/// (M − m)·d as a plain formula evaluation, defined for d ≥ 0 so the
/// zero-turn-cost boundary value is available without an instance.
pub fn star_additive_term<T: Scalar>(rays: usize, d: &T) -> Result<T> {
    if rays < 2 {
        return Err(Error::InvalidInput(format!("ray count must be at least 2, got {rays}")));
    }
    if !d.is_finite_value() || *d < T::zero() {
        return Err(Error::InvalidInput("turn cost must be finite and nonnegative".into()));
    }
    let q: T = ratio(rays as i64, rays as i64 - 1);
    let mass = int::<T>(rays as i64) * pow_int(&q, rays - 1);
    Ok((mass - int::<T>(rays as i64)) * d.clone())
}

/// Depth-n truncation over (x_1 … x_{n+m−1}, B), minimizing B: one startup
/// row 2Σ_{i<m} x_i + (m−1)d ≤ B, then for k = 1…n the row
/// 2Σ_{i≤k+m−1} x_i + (k+m−1)d − 2M·x_k ≤ B. The final step variable sits
/// at 0 in the optimum (it appears in a single row, positively).
pub fn build_star_lp<T: Scalar>(inst: &StarInstance<T>, n: usize) -> Result<LinearProgram<T>> {
    if n < 1 {
        return Err(Error::InvalidInput("depth must be at least 1".into()));
    }
    let m = inst.rays;
    let d = &inst.turn_cost;
    let nv = n + m; // x_1..x_{n+m−1} and B
    let b_col = nv - 1;
    let two = int::<T>(2);
    let pull = two.clone() - two.clone() * inst.mass(); // 2 − 2M on the recalled step
    let mut objective = vec![T::zero(); nv];
    objective[b_col] = T::one();

    let mut rows = Vec::with_capacity(n + 1);
    let mut startup = vec![T::zero(); nv];
    for i in 1..m {
        startup[i - 1] = two.clone();
    }
    startup[b_col] = -T::one();
    rows.push(LpRow { coeffs: startup, rhs: -(int::<T>(m as i64 - 1) * d.clone()) });

    for k in 1..=n {
        let mut coeffs = vec![T::zero(); nv];
        for i in 1..=(k + m - 1) {
            coeffs[i - 1] = if i == k { pull.clone() } else { two.clone() };
        }
        coeffs[b_col] = -T::one();
        rows.push(LpRow { coeffs, rhs: -(int::<T>(k as i64 + m as i64 - 1) * d.clone()) });
    }
    LinearProgram::minimize(objective, rows)
}

/// The certified strategy x_i = d(q^i − 1)/2 over m rays.
pub fn closed_form_star_strategy<T: Scalar>(inst: &StarInstance<T>, n: usize) -> Result<SearchStrategy<T>> {
    if n < 1 {
        return Err(Error::InvalidInput("strategy length must be at least 1".into()));
    }
    let fam = RayFamily::new(inst.rays, &inst.turn_cost);
    SearchStrategy::new(inst.rays, inst.turn_cost.clone(), fam.steps(n))
}

/// The recursive dual sequence: explicit zeros below index m−1, then
/// y_{m−1} = m/M, y_m = … = y_{2m−2} = 1/M, and y_j = y_{j−1} − y_{j−m}/M.
#[derive(Clone, Debug, PartialEq)]
pub struct StarDualSequence<T> {
    /// y_1 … y_N (1-indexed: `values[j−1]` is y_j).
    pub values: Vec<T>,
    pub m: usize,
    /// M, the mass constant of the recursion.
    pub big_m: T,
    /// Σ_{j≤N} y_j (→ 1 from below).
    pub partial_sum: T,
    /// Σ_{j≤N} j·y_j (→ M − m from below).
    pub partial_weighted_sum: T,
}

pub fn star_dual_sequence<T: Scalar>(inst: &StarInstance<T>, n: usize) -> Result<StarDualSequence<T>> {
    let m = inst.rays;
    if n < 2 * m - 2 {
        return Err(Error::InvalidInput(format!(
            "dual sequence needs at least 2m−2 = {} values, got {n}",
            2 * m - 2
        )));
    }
    let big_m = inst.mass();
    let values = ray_duals(m, n, &big_m);
    let mut partial_sum = T::zero();
    let mut partial_weighted_sum = T::zero();
    for (idx, v) in values.iter().enumerate() {
        partial_sum = partial_sum + v.clone();
        partial_weighted_sum = partial_weighted_sum + int::<T>(idx as i64 + 1) * v.clone();
    }
    Ok(StarDualSequence { values, m, big_m, partial_sum, partial_weighted_sum })
}

/// Certifies the closed-form strategy and dual sequence at depth N: the
/// startup row and rows 1…N are all tight at B = (M−m)d, the duals are
/// nonnegative with mass approaching 1, every dual column condition
/// 2Σ_{j≥i} y_j = 2M·y_{i+m−1} holds with the tail closed, and the dual
/// objective d·Σ j·y_j equals B — with geometric-envelope tail bounds as an
/// independent cross-check.
pub fn certify_star_optimality<T: Scalar>(
    inst: &StarInstance<T>,
    n: usize,
    tol: &T,
) -> Result<OptimalityCertificate<T>> {
    if n < 2 * inst.rays {
        return Err(Error::InvalidInput(format!(
            "certificate depth must be at least 2m = {}, got {n}",
            2 * inst.rays
        )));
    }
    Ok(certify_ray_family(inst.rays, &inst.turn_cost, n + 1, tol))
}

/// Solves the depth-n truncations and reports B_n/d per size.
pub fn lambda_sequence<T: Scalar>(
    inst: &StarInstance<T>,
    sizes: &[usize],
    opts: &SolveOptions<T>,
) -> Result<Vec<(usize, T)>> {
    let mut out = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let lp = build_star_lp(inst, n)?;
        let sol = solve(&lp, opts)?;
        if sol.status != LpStatus::Optimal {
            return Err(Error::Internal(format!("truncation n={n} did not solve to optimality")));
        }
        out.push((n, sol.objective / inst.turn_cost.clone()));
    }
    Ok(out)
}

/// LP-convergence summary rows (float): λ_n, Richardson estimate from the
/// (n/2, n) pair, and the closed-form limit M − m.
pub fn convergence_rows(ray_counts: &[usize], n: usize, d: f64) -> Result<Vec<StarConvergenceRow>> {
    if n < 2 {
        return Err(Error::InvalidInput("convergence depth must be at least 2".into()));
    }
    let k = n / 2;
    let opts = SolveOptions::standard();
    let mut out = Vec::with_capacity(ray_counts.len());
    for &m in ray_counts {
        let inst = StarInstance::new(m, d)?;
        let seq = lambda_sequence(&inst, &[k, 2 * k], &opts)?;
        let low = seq[0].1;
        let high = seq[1].1;
        out.push(StarConvergenceRow {
            m,
            n: 2 * k,
            lambda: high,
            extrapolated: 2.0 * high - low,
            limit: star_additive_term(m, &1.0)?,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::line::{build_line_lp, certify_line_optimality, LineInstance};
    use crate::scalar::Rational;

    fn exact(m: usize) -> StarInstance<Rational> {
        StarInstance::new(m, Rational::from_int(1)).unwrap()
    }

    #[test]
    fn derived_constants() {
        let s3 = exact(3);
        assert_eq!(s3.growth_ratio(), ratio::<Rational>(3, 2));
        assert_eq!(s3.mass(), ratio::<Rational>(27, 4));
        assert_eq!(s3.competitive_coefficient(), ratio::<Rational>(29, 2));
        assert_eq!(s3.additive_term(), ratio::<Rational>(15, 4));
        let s6 = exact(6);
        assert_eq!(s6.mass(), ratio::<Rational>(46656, 3125));
    }

    #[test]
    fn additive_term_boundary_cases() {
        assert_eq!(star_additive_term(2, &1.0).unwrap(), 2.0);
        assert!((star_additive_term(3, &1.0).unwrap() - 3.75).abs() < 1e-15);
        assert_eq!(star_additive_term(3, &0.0).unwrap(), 0.0);
        assert!(star_additive_term(1, &1.0).is_err());
    }

    #[test]
    fn three_ray_rows_match_the_conditions() {
        let inst = StarInstance::new(3, 1.0).unwrap();
        let lp = build_star_lp(&inst, 1).unwrap();
        assert_eq!(lp.rows().len(), 2);
        assert_eq!(lp.rows()[0].coeffs, vec![2.0, 2.0, 0.0, -1.0]);
        assert_eq!(lp.rows()[0].rhs, -2.0);
        assert_eq!(lp.rows()[1].coeffs, vec![2.0 - 13.5, 2.0, 2.0, -1.0]);
        assert_eq!(lp.rows()[1].rhs, -3.0);
    }

    #[test]
    fn two_rays_reduce_to_the_line_rows() {
        let star = exact(2);
        let line = LineInstance::base(Rational::from_int(1)).unwrap();
        for n in [1usize, 2, 5] {
            let s = build_star_lp(&star, n).unwrap();
            let l = build_line_lp(&line, n + 1).unwrap();
            assert_eq!(s, l);
        }
    }

    #[test]
    fn strategy_values() {
        let s2 = closed_form_star_strategy(&StarInstance::new(2, 1.0).unwrap(), 3).unwrap();
        assert_eq!(s2.steps(), &[0.5, 1.5, 3.5]);
        let s3 = closed_form_star_strategy(&StarInstance::new(3, 1.0).unwrap(), 3).unwrap();
        assert_eq!(s3.steps(), &[0.25, 0.625, 1.1875]);
        let s4 = closed_form_star_strategy(&StarInstance::new(4, 2.0).unwrap(), 2).unwrap();
        assert!((s4.step(2) - 7.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn dual_sequence_prefix_and_closed_form() {
        let seq = star_dual_sequence(&exact(3), 11).unwrap();
        let expect = [
            (2, 4, 9i64),
            (3, 4, 27),
            (4, 4, 27),
            (5, 20, 243),
            (6, 44, 729),
        ];
        for (j, num, den) in expect {
            assert_eq!(seq.values[j - 1], ratio::<Rational>(num, den));
        }
        // Closed form for three rays: y_j = 4(2^{j−1} + (−1)^j)/3^{j+1}, j ≥ 2.
        for j in 2..=11usize {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let num = Rational::from_int(4) * (pow_int(&Rational::from_int(2), j - 1) + Rational::from_int(sign));
            let den = pow_int(&Rational::from_int(3), j + 1);
            assert_eq!(seq.values[j - 1], num / den);
        }
        assert!(seq.partial_sum < Rational::from_int(1));
    }

    #[test]
    fn two_ray_duals_match_the_line_sequence() {
        let seq = star_dual_sequence(&exact(2), 12).unwrap();
        let line = crate::line::line_dual_sequence::<Rational>(12).unwrap();
        assert_eq!(seq.values, line.values);
        let f = star_dual_sequence(&StarInstance::new(2, 1.0).unwrap(), 12).unwrap();
        let lf = crate::line::line_dual_sequence::<f64>(12).unwrap();
        assert_eq!(f.values, lf.values);
    }

    #[test]
    fn certificates_reduce_byte_identically_at_two_rays() {
        let tol = Rational::from_int(0);
        let star = certify_star_optimality(&exact(2), 12, &tol).unwrap();
        let line = certify_line_optimality(&Rational::from_int(1), 13, &tol).unwrap();
        assert!(star.is_certified());
        assert_eq!(star, line);
        assert_eq!(star.summary(), line.summary());
    }

    #[test]
    fn certificates_hold_for_wider_stars() {
        let c3 = certify_star_optimality(&exact(3), 20, &Rational::from_int(0)).unwrap();
        assert!(c3.is_certified(), "{:?}", c3.verdict);
        assert_eq!(c3.primal_objective, ratio::<Rational>(15, 4));
        let c6 = certify_star_optimality(&StarInstance::new(6, 1.0).unwrap(), 50, &1e-9).unwrap();
        assert!(c6.is_certified(), "{:?}", c6.verdict);
    }

    #[test]
    fn lambda_sequence_climbs_toward_the_additive_term() {
        let inst = StarInstance::new(3, 1.0).unwrap();
        let seq = lambda_sequence(&inst, &[2, 4, 8, 16], &SolveOptions::standard()).unwrap();
        for w in seq.windows(2) {
            assert!(w[0].1 <= w[1].1 + 1e-12);
        }
        assert!(seq.last().unwrap().1 < 3.75);
        assert!(seq.last().unwrap().1 > 3.0);
    }

    #[test]
    fn convergence_rows_report_the_limit() {
        let rows = convergence_rows(&[3], 16, 1.0).unwrap();
        assert_eq!(rows[0].m, 3);
        assert_eq!(rows[0].n, 16);
        assert_eq!(rows[0].limit, 3.75);
        assert!(rows[0].extrapolated <= 3.75 + 1e-9);
    }

    #[test]
    fn split_only_feeds_the_sum() {
        let split = StarInstance::with_split(3, 0.25, 0.75).unwrap();
        let plain = StarInstance::new(3, 1.0).unwrap();
        assert_eq!(split.additive_term(), plain.additive_term());
        assert_eq!(split.turn_cost_split(), Some((&0.25, &0.75)));
        assert!(StarInstance::with_split(3, -0.1, 0.2).is_err());
    }
}

//! Dense linear programs in inequality form and a two-phase tableau simplex.
//!
//! A [`LinearProgram`] is always `minimize c'z subject to A z <= b, z >= 0`.
//! The solver is a dense tableau simplex with Dantzig pricing that falls back
//! to Bland's rule as soon as it stalls, so it cannot cycle. Dual values are
//! read off the reduced costs of the slack columns in the final tableau.
//!
//! Sign convention: the reported duals `y` are the nonnegative multipliers of
//! the `<=` rows of the minimization. At an optimum the primal objective
//! equals `-b'y` (see [`LpSolution::dual_objective`]) and complementary
//! slackness holds: `y_j > 0` forces row `j` tight.
//!
//! In float mode the final solution is recomputed from the optimal basis by a
//! fresh LU solve of the original data (one refinement pass), which removes
//! the drift a long pivot sequence accumulates in the tableau. In exact
//! rational mode the tableau is already exact and the step is skipped.

use crate::error::{Error, Result};
use crate::scalar::{default_tolerance, within_tol, Scalar};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq)]
pub struct LpRow<T> {
    pub coeffs: Vec<T>,
    pub rhs: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LinearProgram<T> {
    objective: Vec<T>,
    rows: Vec<LpRow<T>>,
    var_count: usize,
}

impl<T: Scalar> LinearProgram<T> {
    /// Minimization over `A z <= b, z >= 0`. Validates shapes and finiteness.
    pub fn minimize(objective: Vec<T>, rows: Vec<LpRow<T>>) -> Result<Self> {
        let var_count = objective.len();
        if var_count == 0 {
            return Err(Error::InvalidInput("objective must have at least one variable".into()));
        }
        if rows.is_empty() {
            return Err(Error::InvalidInput("constraint rows must be nonempty".into()));
        }
        for (j, row) in rows.iter().enumerate() {
            if row.coeffs.len() != var_count {
                return Err(Error::DimensionMismatch(format!(
                    "row {j} has {} coefficients, expected {var_count}",
                    row.coeffs.len()
                )));
            }
            if !row.rhs.is_finite_value() || row.coeffs.iter().any(|v| !v.is_finite_value()) {
                return Err(Error::InvalidInput(format!("row {j} contains a non-finite value")));
            }
        }
        if objective.iter().any(|v| !v.is_finite_value()) {
            return Err(Error::InvalidInput("objective contains a non-finite value".into()));
        }
        Ok(LinearProgram { objective, rows, var_count })
    }

    pub fn objective(&self) -> &[T] {
        &self.objective
    }

    pub fn rows(&self) -> &[LpRow<T>] {
        &self.rows
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    /// `A_j z` for a full-length point `z`.
    pub fn row_activity(&self, j: usize, z: &[T]) -> T {
        dot(&self.rows[j].coeffs, z)
    }

    /// `b_j - A_j z`, nonnegative iff row `j` is satisfied at `z`.
    pub fn row_slack(&self, j: usize, z: &[T]) -> T {
        self.rows[j].rhs.clone() - self.row_activity(j, z)
    }

    /// `1 + |b_j| + sum |a_jk z_k|`, the natural scale of row `j` at `z`
    /// for relative tightness tests.
    pub fn row_scale(&self, j: usize, z: &[T]) -> T {
        let mut s = T::one() + self.rows[j].rhs.abs();
        for (a, v) in self.rows[j].coeffs.iter().zip(z) {
            s = s + (a.clone() * v.clone()).abs();
        }
        s
    }

    pub fn objective_value(&self, z: &[T]) -> T {
        dot(&self.objective, z)
    }

    pub fn to_json_string(&self) -> String {
        let raw = LpJson {
            sense: "minimize".to_string(),
            objective: self.objective.iter().map(|v| v.to_f64()).collect(),
            rows: self
                .rows
                .iter()
                .map(|r| LpRowJson {
                    coeffs: r.coeffs.iter().map(|v| v.to_f64()).collect(),
                    rhs: r.rhs.to_f64(),
                })
                .collect(),
            var_count: self.var_count,
        };
        serde_json::to_string_pretty(&raw).expect("serializing plain floats cannot fail")
    }

    /// Parses the JSON schema produced by [`to_json_string`]. Floats are
    /// lifted losslessly, so exact mode round-trips dyadic data unchanged.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let raw: LpJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        if raw.sense != "minimize" {
            return Err(Error::InvalidInput(format!("unsupported sense {:?}", raw.sense)));
        }
        if raw.var_count != raw.objective.len() {
            return Err(Error::DimensionMismatch(format!(
                "var_count {} does not match objective length {}",
                raw.var_count,
                raw.objective.len()
            )));
        }
        let lift = |v: f64| {
            T::from_f64_lossless(v).ok_or_else(|| Error::InvalidInput(format!("non-finite value {v}")))
        };
        let objective = raw.objective.iter().copied().map(lift).collect::<Result<Vec<_>>>()?;
        let rows = raw
            .rows
            .iter()
            .map(|r| {
                Ok(LpRow {
                    coeffs: r.coeffs.iter().copied().map(lift).collect::<Result<Vec<_>>>()?,
                    rhs: lift(r.rhs)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        LinearProgram::minimize(objective, rows)
    }
}

#[derive(Serialize, Deserialize)]
struct LpJson {
    sense: String,
    objective: Vec<f64>,
    rows: Vec<LpRowJson>,
    var_count: usize,
}

#[derive(Serialize, Deserialize)]
struct LpRowJson {
    coeffs: Vec<f64>,
    rhs: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Solver output. `primal`/`dual`/`objective` are meaningful only when
/// `status == Optimal`; otherwise the vectors are empty.
#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution<T> {
    pub status: LpStatus,
    pub primal: Vec<T>,
    pub dual: Vec<T>,
    pub objective: T,
}

impl<T: Scalar> LpSolution<T> {
    /// `-b'y`, which equals the primal objective at an optimum under the
    /// sign convention documented on this module.
    pub fn dual_objective(&self, lp: &LinearProgram<T>) -> T {
        let mut acc = T::zero();
        for (row, y) in lp.rows().iter().zip(&self.dual) {
            acc = acc - row.rhs.clone() * y.clone();
        }
        acc
    }
}

#[derive(Clone, Debug)]
pub struct SolveOptions<T> {
    /// Comparison tolerance; zero in exact mode.
    pub tolerance: T,
    /// Pivot cap; `None` picks a generous bound from the problem size.
    pub max_pivots: Option<usize>,
}

impl<T: Scalar> SolveOptions<T> {
    pub fn standard() -> Self {
        SolveOptions { tolerance: default_tolerance::<T>(), max_pivots: None }
    }

    pub fn with_tolerance(tolerance: T) -> Self {
        SolveOptions { tolerance, max_pivots: None }
    }
}

impl<T: Scalar> Default for SolveOptions<T> {
    fn default() -> Self {
        Self::standard()
    }
}

/// Two-phase dense tableau simplex. Deterministic: identical inputs produce
/// identical outputs, pivot for pivot.
pub fn solve<T: Scalar>(lp: &LinearProgram<T>, opts: &SolveOptions<T>) -> Result<LpSolution<T>> {
    let m = lp.rows.len();
    let nv = lp.var_count;
    let eps = opts.tolerance.clone();
    let zero = T::zero();

    // Rows with negative right-hand sides are negated so the all-slack point
    // is a valid start; each such row gets an artificial variable for phase 1.
    let negated: Vec<bool> = lp.rows.iter().map(|r| r.rhs < zero).collect();
    let mut art_col = vec![usize::MAX; m];
    let mut n_art = 0;
    for j in 0..m {
        if negated[j] {
            art_col[j] = nv + m + n_art;
            n_art += 1;
        }
    }
    let ncols = nv + m + n_art + 1; // last column holds the right-hand side
    let rhs_col = ncols - 1;
    let mut w = vec![T::zero(); (m + 1) * ncols];
    let mut basis = vec![0usize; m];
    for j in 0..m {
        let row = &lp.rows[j];
        for k in 0..nv {
            w[j * ncols + k] = if negated[j] { -row.coeffs[k].clone() } else { row.coeffs[k].clone() };
        }
        w[j * ncols + nv + j] = if negated[j] { -T::one() } else { T::one() };
        if negated[j] {
            w[j * ncols + art_col[j]] = T::one();
        }
        w[j * ncols + rhs_col] = if negated[j] { -row.rhs.clone() } else { row.rhs.clone() };
        basis[j] = if negated[j] { art_col[j] } else { nv + j };
    }

    let max_pivots = opts.max_pivots.unwrap_or(1000 + 100 * (m + ncols));
    let mut pivots_used = 0usize;
    // Artificial columns never re-enter once they leave the basis.
    let enterable = nv + m;

    if n_art > 0 {
        // Phase 1: minimize the sum of artificials. Bottom row starts at the
        // reduced costs for the artificial basis.
        for k in 0..ncols {
            let mut acc = if k >= nv + m && k < rhs_col { T::one() } else { T::zero() };
            for j in 0..m {
                if negated[j] {
                    acc = acc - w[j * ncols + k].clone();
                }
            }
            w[m * ncols + k] = acc;
        }
        match run_phase(&mut w, ncols, m, &mut basis, enterable, &eps, max_pivots, &mut pivots_used)? {
            PhaseEnd::Optimal => {}
            PhaseEnd::Unbounded => {
                return Err(Error::Internal("phase 1 reported unbounded".into()));
            }
        }
        let z1 = -w[m * ncols + rhs_col].clone();
        let mut b_scale = T::one();
        for j in 0..m {
            let a = lp.rows[j].rhs.abs();
            if a > b_scale {
                b_scale = a;
            }
        }
        if !within_tol(&z1, &eps, &b_scale) {
            return Ok(LpSolution { status: LpStatus::Infeasible, primal: vec![], dual: vec![], objective: T::zero() });
        }
        // Swap any leftover artificial out of the basis where possible; a row
        // that offers no pivot is redundant and can keep its artificial at 0.
        for r in 0..m {
            if basis[r] >= nv + m {
                let c = (0..nv + m).find(|&k| !within_tol(&w[r * ncols + k], &eps, &T::one()));
                if let Some(c) = c {
                    pivot(&mut w, ncols, m, &mut basis, r, c);
                    pivots_used += 1;
                }
            }
        }
    }

    // Phase 2: rebuild the bottom row from the true objective.
    for k in 0..ncols {
        w[m * ncols + k] = if k < nv { lp.objective[k].clone() } else { T::zero() };
    }
    for r in 0..m {
        let cb = basis[r];
        if cb < nv && !lp.objective[cb].is_zero() {
            let cost = lp.objective[cb].clone();
            for k in 0..ncols {
                if !w[r * ncols + k].is_zero() {
                    let delta = cost.clone() * w[r * ncols + k].clone();
                    w[m * ncols + k] = w[m * ncols + k].clone() - delta;
                }
            }
        }
    }
    match run_phase(&mut w, ncols, m, &mut basis, enterable, &eps, max_pivots, &mut pivots_used)? {
        PhaseEnd::Optimal => {}
        PhaseEnd::Unbounded => {
            return Ok(LpSolution { status: LpStatus::Unbounded, primal: vec![], dual: vec![], objective: T::zero() });
        }
    }

    // Extract: basic structurals from the right-hand side column, duals from
    // the reduced costs of the slack columns.
    let mut primal = vec![T::zero(); nv];
    for r in 0..m {
        if basis[r] < nv {
            primal[basis[r]] = w[r * ncols + rhs_col].clone();
        }
    }
    let mut dual = Vec::with_capacity(m);
    for j in 0..m {
        dual.push(w[m * ncols + nv + j].clone());
    }

    if !T::is_exact() {
        let art_in_basis = basis.iter().any(|&b| b >= nv + m);
        if !art_in_basis {
            if let Some((p, d)) = refine_from_basis(lp, &basis) {
                primal = p;
                dual = d;
            }
        }
        // Clear the tiny negatives float pivoting leaves behind.
        for v in primal.iter_mut().chain(dual.iter_mut()) {
            if *v < zero && within_tol(v, &eps, &T::one()) {
                *v = T::zero();
            }
        }
    }
    let objective = lp.objective_value(&primal);
    let solution = LpSolution { status: LpStatus::Optimal, primal, dual, objective };
    check_solution(lp, &solution, &eps).map_err(Error::Internal)?;
    Ok(solution)
}

enum PhaseEnd {
    Optimal,
    Unbounded,
}

#[allow(clippy::too_many_arguments)]
fn run_phase<T: Scalar>(
    w: &mut [T],
    ncols: usize,
    m: usize,
    basis: &mut [usize],
    enterable: usize,
    eps: &T,
    max_pivots: usize,
    pivots_used: &mut usize,
) -> Result<PhaseEnd> {
    let rhs_col = ncols - 1;
    let mut bland = false;
    let mut stalls = 0usize;
    let stall_limit = m + 16;
    let mut last_obj = w[m * ncols + rhs_col].clone();
    loop {
        // Entering column: most negative reduced cost (Dantzig) until a stall
        // is detected, then lowest index (Bland, no cycling).
        let mut entering: Option<usize> = None;
        let mut best = -eps.clone();
        for k in 0..enterable {
            let r = &w[m * ncols + k];
            if *r < best {
                entering = Some(k);
                if bland {
                    break;
                }
                best = r.clone();
            } else if bland && entering.is_some() {
                break;
            }
        }
        let Some(col) = entering else {
            return Ok(PhaseEnd::Optimal);
        };

        // Ratio test; ties go to the smallest basic index (Bland's tie rule).
        let mut leave: Option<(usize, T)> = None;
        for r in 0..m {
            let a = &w[r * ncols + col];
            if *a > *eps {
                let ratio = w[r * ncols + rhs_col].clone() / a.clone();
                let better = match &leave {
                    None => true,
                    Some((lr, lratio)) => ratio < *lratio || (ratio == *lratio && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((row, _)) = leave else {
            return Ok(PhaseEnd::Unbounded);
        };

        pivot(w, ncols, m, basis, row, col);
        *pivots_used += 1;
        if *pivots_used > max_pivots {
            return Err(Error::PivotLimit(*pivots_used));
        }

        let obj = w[m * ncols + rhs_col].clone();
        // The stored cell is -z, so progress pushes it upward.
        if obj > last_obj {
            stalls = 0;
        } else {
            stalls += 1;
            if stalls > stall_limit {
                bland = true;
            }
        }
        last_obj = obj;
    }
}

fn pivot<T: Scalar>(w: &mut [T], ncols: usize, m: usize, basis: &mut [usize], row: usize, col: usize) {
    let piv = w[row * ncols + col].clone();
    for k in 0..ncols {
        if !w[row * ncols + k].is_zero() {
            w[row * ncols + k] = w[row * ncols + k].clone() / piv.clone();
        }
    }
    w[row * ncols + col] = T::one();
    let prow: Vec<T> = w[row * ncols..(row + 1) * ncols].to_vec();
    for i in 0..=m {
        if i == row {
            continue;
        }
        let factor = w[i * ncols + col].clone();
        if factor.is_zero() {
            continue;
        }
        for k in 0..ncols {
            if !prow[k].is_zero() {
                w[i * ncols + k] = w[i * ncols + k].clone() - factor.clone() * prow[k].clone();
            }
        }
        w[i * ncols + col] = T::zero();
    }
    basis[row] = col;
}

/// Recomputes primal and dual values from the optimal basis against the
/// original (untransformed) data: `B x_B = b` and `B' w = c_B, y = -w`.
/// Returns `None` when a factorization unexpectedly fails, in which case the
/// tableau values stand.
fn refine_from_basis<T: Scalar>(lp: &LinearProgram<T>, basis: &[usize]) -> Option<(Vec<T>, Vec<T>)> {
    let m = lp.rows.len();
    let nv = lp.var_count;
    let column = |b: usize, i: usize| -> T {
        if b < nv {
            lp.rows[i].coeffs[b].clone()
        } else if b - nv == i {
            T::one()
        } else {
            T::zero()
        }
    };
    let bmat: Vec<Vec<T>> = (0..m).map(|i| basis.iter().map(|&b| column(b, i)).collect()).collect();
    let rhs: Vec<T> = lp.rows.iter().map(|r| r.rhs.clone()).collect();
    let lu = Lu::factor(bmat.clone(), &T::zero())?;
    let xb = lu.solve_refined(&bmat, &rhs);

    let tmat: Vec<Vec<T>> = (0..m).map(|i| (0..m).map(|j| bmat[j][i].clone()).collect()).collect();
    let cb: Vec<T> = basis.iter().map(|&b| if b < nv { lp.objective[b].clone() } else { T::zero() }).collect();
    let lut = Lu::factor(tmat.clone(), &T::zero())?;
    let wv = lut.solve_refined(&tmat, &cb);

    let mut primal = vec![T::zero(); nv];
    for (slot, &b) in basis.iter().enumerate() {
        if b < nv {
            primal[b] = xb[slot].clone();
        }
    }
    let dual: Vec<T> = wv.into_iter().map(|v| -v).collect();
    Some((primal, dual))
}

/// Verifies the optimality certificates of a solution: primal feasibility,
/// dual nonnegativity and feasibility, complementary slackness, and a closed
/// duality gap. Exact in rational mode, tolerance-scaled in float mode.
pub fn check_solution<T: Scalar>(
    lp: &LinearProgram<T>,
    sol: &LpSolution<T>,
    tol: &T,
) -> std::result::Result<(), String> {
    if sol.status != LpStatus::Optimal {
        return Ok(());
    }
    if sol.primal.len() != lp.var_count || sol.dual.len() != lp.rows.len() {
        return Err("solution vectors have wrong dimensions".into());
    }
    let neg_tol = -tol.clone();
    for (k, x) in sol.primal.iter().enumerate() {
        if *x < neg_tol {
            return Err(format!("primal variable {k} is negative: {x}"));
        }
    }
    for (j, y) in sol.dual.iter().enumerate() {
        if *y < neg_tol {
            return Err(format!("dual multiplier {j} is negative: {y}"));
        }
    }
    for j in 0..lp.rows.len() {
        let slack = lp.row_slack(j, &sol.primal);
        let scale = lp.row_scale(j, &sol.primal);
        if slack < -tol.clone() * scale.clone() {
            return Err(format!("row {j} violated by {slack}"));
        }
        let cs = sol.dual[j].clone() * slack;
        if !within_tol(&cs, tol, &(scale * (T::one() + sol.dual[j].abs()))) {
            return Err(format!("complementary slackness fails on row {j}: {cs}"));
        }
    }
    // Dual feasibility: reduced cost c_k + sum_j a_jk y_j must be nonnegative.
    for k in 0..lp.var_count {
        let mut red = lp.objective[k].clone();
        let mut scale = T::one() + lp.objective[k].abs();
        for (row, y) in lp.rows.iter().zip(&sol.dual) {
            let term = row.coeffs[k].clone() * y.clone();
            scale = scale + term.abs();
            red = red + term;
        }
        if red < -tol.clone() * scale {
            return Err(format!("dual-infeasible column {k}: reduced cost {red}"));
        }
    }
    let gap = sol.objective.clone() - sol.dual_objective(lp);
    if !within_tol(&gap, tol, &(T::one() + sol.objective.abs())) {
        return Err(format!("duality gap {gap}"));
    }
    Ok(())
}

/// Independent cross-check for the truncated search systems: assume every row
/// is tight and solve the resulting square linear system directly, then
/// derive the duals from the transposed system. Reports
/// [`Error::OracleNotApplicable`] whenever the assumptions do not hold
/// (wrong shape, singular system, infeasible point, or negative duals).
///
/// When the program has one more variable than rows, the highest-indexed
/// zero-cost column is fixed at zero first; in the truncated families the
/// final step variable sits at zero in the optimum.
pub fn solve_equality_oracle<T: Scalar>(lp: &LinearProgram<T>, tol: &T) -> Result<LpSolution<T>> {
    let m = lp.rows.len();
    let nv = lp.var_count;
    let dropped: Option<usize> = if m == nv {
        None
    } else if m + 1 == nv {
        Some(
            (0..nv)
                .rev()
                .find(|&k| lp.objective[k].is_zero())
                .ok_or_else(|| Error::OracleNotApplicable("no zero-cost column to fix at zero".into()))?,
        )
    } else {
        return Err(Error::OracleNotApplicable(format!(
            "{m} rows cannot form a square system with {nv} variables"
        )));
    };
    let kept: Vec<usize> = (0..nv).filter(|k| Some(*k) != dropped).collect();

    let mat: Vec<Vec<T>> =
        (0..m).map(|j| kept.iter().map(|&k| lp.rows[j].coeffs[k].clone()).collect()).collect();
    let mut pivot_scale = T::zero();
    for r in &mat {
        for v in r {
            if v.abs() > pivot_scale {
                pivot_scale = v.abs();
            }
        }
    }
    let eps_piv = tol.clone() * (T::one() + pivot_scale);
    let lu = Lu::factor(mat.clone(), &eps_piv)
        .ok_or_else(|| Error::OracleNotApplicable("tight system is singular".into()))?;
    let rhs: Vec<T> = lp.rows.iter().map(|r| r.rhs.clone()).collect();
    let xk = lu.solve_refined(&mat, &rhs);

    let mut primal = vec![T::zero(); nv];
    for (slot, &k) in kept.iter().enumerate() {
        primal[k] = xk[slot].clone();
    }
    let neg_tol = -tol.clone();
    if primal.iter().any(|x| *x < neg_tol) {
        return Err(Error::OracleNotApplicable("equality solution has a negative variable".into()));
    }

    let tmat: Vec<Vec<T>> = (0..m).map(|i| (0..m).map(|j| mat[j][i].clone()).collect()).collect();
    let ck: Vec<T> = kept.iter().map(|&k| lp.objective[k].clone()).collect();
    let lut = Lu::factor(tmat.clone(), &eps_piv)
        .ok_or_else(|| Error::OracleNotApplicable("transposed tight system is singular".into()))?;
    let wv = lut.solve_refined(&tmat, &ck);
    let dual: Vec<T> = wv.into_iter().map(|v| -v).collect();
    if dual.iter().any(|y| *y < neg_tol) {
        return Err(Error::OracleNotApplicable("induced duals are not nonnegative".into()));
    }
    if let Some(dk) = dropped {
        let mut red = lp.objective[dk].clone();
        for (row, y) in lp.rows.iter().zip(&dual) {
            red = red + row.coeffs[dk].clone() * y.clone();
        }
        if red < neg_tol {
            return Err(Error::OracleNotApplicable("zeroed column is dual-infeasible".into()));
        }
    }

    let objective = lp.objective_value(&primal);
    Ok(LpSolution { status: LpStatus::Optimal, primal, dual, objective })
}

fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = T::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc + x.clone() * y.clone();
        }
    }
    acc
}

/// Dense LU with partial pivoting, generic over the scalar. `eps_piv` is the
/// singularity threshold (zero in exact mode).
pub(crate) struct Lu<T> {
    a: Vec<Vec<T>>,
    perm: Vec<usize>,
    n: usize,
}

impl<T: Scalar> Lu<T> {
    pub(crate) fn factor(mut a: Vec<Vec<T>>, eps_piv: &T) -> Option<Self> {
        let n = a.len();
        let mut perm: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let mut best = k;
            for i in k + 1..n {
                if a[i][k].abs() > a[best][k].abs() {
                    best = i;
                }
            }
            if a[best][k].abs() <= *eps_piv {
                return None;
            }
            a.swap(k, best);
            perm.swap(k, best);
            let piv = a[k][k].clone();
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let l = a[i][k].clone() / piv.clone();
                for j in k + 1..n {
                    if !a[k][j].is_zero() {
                        a[i][j] = a[i][j].clone() - l.clone() * a[k][j].clone();
                    }
                }
                a[i][k] = l;
            }
        }
        Some(Lu { a, perm, n })
    }

    pub(crate) fn solve(&self, b: &[T]) -> Vec<T> {
        let n = self.n;
        let mut x: Vec<T> = self.perm.iter().map(|&p| b[p].clone()).collect();
        for i in 1..n {
            for j in 0..i {
                if !self.a[i][j].is_zero() && !x[j].is_zero() {
                    x[i] = x[i].clone() - self.a[i][j].clone() * x[j].clone();
                }
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                if !self.a[i][j].is_zero() && !x[j].is_zero() {
                    x[i] = x[i].clone() - self.a[i][j].clone() * x[j].clone();
                }
            }
            x[i] = x[i].clone() / self.a[i][i].clone();
        }
        x
    }

    /// Solve plus one iterative-refinement pass against the original matrix
    /// (a no-op correction in exact mode).
    pub(crate) fn solve_refined(&self, original: &[Vec<T>], b: &[T]) -> Vec<T> {
        let mut x = self.solve(b);
        if T::is_exact() {
            return x;
        }
        let n = self.n;
        let mut residual = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = b[i].clone();
            for j in 0..n {
                acc = acc - original[i][j].clone() * x[j].clone();
            }
            residual.push(acc);
        }
        let dx = self.solve(&residual);
        for i in 0..n {
            x[i] = x[i].clone() + dx[i].clone();
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ratio, Rational};

    fn row<T: Scalar>(coeffs: Vec<T>, rhs: T) -> LpRow<T> {
        LpRow { coeffs, rhs }
    }

    /// First truncations of the line system, written out by hand so this
    /// module is tested independently of the generators.
    fn line_n1_f64() -> LinearProgram<f64> {
        LinearProgram::minimize(vec![0.0, 1.0], vec![row(vec![2.0, -1.0], -1.0)]).unwrap()
    }

    fn line_n2_f64() -> LinearProgram<f64> {
        LinearProgram::minimize(
            vec![0.0, 0.0, 1.0],
            vec![row(vec![2.0, 0.0, -1.0], -1.0), row(vec![-6.0, 2.0, -1.0], -2.0)],
        )
        .unwrap()
    }

    fn line_n2_exact() -> LinearProgram<Rational> {
        let i = |n: i64| Rational::from_int(n);
        LinearProgram::minimize(
            vec![i(0), i(0), i(1)],
            vec![
                row(vec![i(2), i(0), i(-1)], i(-1)),
                row(vec![i(-6), i(2), i(-1)], i(-2)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn zero_case() {
        let lp = LinearProgram::minimize(vec![1.0], vec![row(vec![-1.0], 0.0)]).unwrap();
        let sol = solve(&lp, &SolveOptions::standard()).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_eq!(sol.objective, 0.0);
        assert_eq!(sol.primal, vec![0.0]);
    }

    #[test]
    fn smallest_line_system() {
        let sol = solve(&line_n1_f64(), &SolveOptions::standard()).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!((sol.objective - 1.0).abs() < 1e-12);
        assert!(sol.primal[0].abs() < 1e-12);
    }

    #[test]
    fn two_row_line_system_with_duals() {
        let lp = line_n2_f64();
        let sol = solve(&lp, &SolveOptions::standard()).unwrap();
        assert!((sol.objective - 1.25).abs() < 1e-12);
        assert!((sol.primal[0] - 0.125).abs() < 1e-12);
        assert!(sol.primal[1].abs() < 1e-12);
        assert!((sol.dual[0] - 0.75).abs() < 1e-12);
        assert!((sol.dual[1] - 0.25).abs() < 1e-12);
        assert!((sol.dual_objective(&lp) - sol.objective).abs() < 1e-12);
    }

    #[test]
    fn exact_mode_gives_exact_fractions() {
        let lp = line_n2_exact();
        let sol = solve(&lp, &SolveOptions::standard()).unwrap();
        assert_eq!(sol.objective, ratio::<Rational>(5, 4));
        assert_eq!(sol.primal[0], ratio::<Rational>(1, 8));
        assert_eq!(sol.dual, vec![ratio::<Rational>(3, 4), ratio::<Rational>(1, 4)]);
        assert_eq!(sol.dual_objective(&lp), sol.objective);
    }

    #[test]
    fn equality_oracle_matches_solver() {
        let lp = line_n2_f64();
        let a = solve(&lp, &SolveOptions::standard()).unwrap();
        let b = solve_equality_oracle(&lp, &1e-9).unwrap();
        assert!((a.objective - b.objective).abs() < 1e-12);
        for (x, y) in a.primal.iter().zip(&b.primal) {
            assert!((x - y).abs() < 1e-12);
        }
        for (x, y) in a.dual.iter().zip(&b.dual) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn equality_oracle_rejects_singular_systems() {
        let lp = LinearProgram::minimize(
            vec![1.0, 1.0],
            vec![row(vec![1.0, 1.0], 1.0), row(vec![2.0, 2.0], 2.0)],
        )
        .unwrap();
        match solve_equality_oracle(&lp, &1e-9) {
            Err(Error::OracleNotApplicable(_)) => {}
            other => panic!("expected oracle-not-applicable, got {other:?}"),
        }
    }

    #[test]
    fn infeasible_system_is_reported() {
        let lp = LinearProgram::minimize(vec![1.0], vec![row(vec![1.0], -1.0)]).unwrap();
        let sol = solve(&lp, &SolveOptions::standard()).unwrap();
        assert_eq!(sol.status, LpStatus::Infeasible);
        assert!(sol.primal.is_empty() && sol.dual.is_empty());
    }

    #[test]
    fn unbounded_system_is_reported() {
        let lp = LinearProgram::minimize(vec![-1.0], vec![row(vec![0.0], 1.0)]).unwrap();
        let sol = solve(&lp, &SolveOptions::standard()).unwrap();
        assert_eq!(sol.status, LpStatus::Unbounded);
        assert!(sol.primal.is_empty() && sol.dual.is_empty());
    }

    #[test]
    fn shape_validation() {
        assert!(matches!(
            LinearProgram::minimize(vec![1.0], vec![row(vec![1.0, 2.0], 0.0)]),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            LinearProgram::<f64>::minimize(vec![], vec![]),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            LinearProgram::minimize(vec![1.0], vec![]),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            LinearProgram::minimize(vec![f64::NAN], vec![row(vec![1.0], 0.0)]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let lp = line_n2_f64();
        let text = lp.to_json_string();
        let back = LinearProgram::<f64>::from_json_str(&text).unwrap();
        assert_eq!(lp, back);
        // Exact lift of the same dyadic data.
        let exact = LinearProgram::<Rational>::from_json_str(&text).unwrap();
        assert_eq!(exact.rows()[1].coeffs[0], Rational::from_int(-6));
        assert!(LinearProgram::<f64>::from_json_str("{\"sense\":\"maximize\"}").is_err());
    }

    #[test]
    fn solver_is_deterministic() {
        let lp = line_n2_f64();
        let a = solve(&lp, &SolveOptions::standard()).unwrap();
        let b = solve(&lp, &SolveOptions::standard()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn pivot_limit_is_enforced() {
        let lp = line_n2_f64();
        let opts = SolveOptions { tolerance: 1e-9, max_pivots: Some(1) };
        assert!(matches!(solve(&lp, &opts), Err(Error::PivotLimit(_))));
    }
}

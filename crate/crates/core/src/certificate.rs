//! Optimality certificates for the ray-search strategy families.
//!
//! Both the line (two rays) and the m-ray star share one constraint family
//! once rows are indexed by the number of completed excursions j:
//!
//! ```text
//!   2(x_1 + … + x_j) + j·d − 2M·x_{j−m+1} ≤ B     for j ≥ m−1, x_{i≤0} = 0
//! ```
//!
//! with q = m/(m−1), M = m·q^{m−1}, B = (M−m)·d. The certificate checks that
//! the closed-form strategy x_i = d(q^i − 1)/2 makes every row tight, that the
//! recursive dual sequence y is nonnegative with unit mass, that every dual
//! column condition 2·Σ_{j≥i} y_j = 2M·y_{i+m−1} holds, and that the dual
//! objective d·Σ j·y_j equals B. Infinite sums are closed using the exact
//! tail identities Σ_{j>K} y_j = M·y_{K+m} and
//! Σ_{j>K} j·y_j = M(K·y_{K+m} + M·y_{K+2m−1}), plus an independent geometric
//! envelope from the decay ratio (m−1)/m as a cross-check.
//!
//! Everything here is exact in rational mode; in float mode residuals are
//! compared against the tolerance scaled by the magnitude of each row.

use crate::scalar::{display_value, int, pow_int, ratio, within_tol, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Certified,
    Failed(String),
}

/// The evidence backing a certified search strategy. Residuals are stored
/// raw (unscaled); the verdict applies the tolerance relative to each row's
/// own magnitude.
#[derive(Clone, Debug, PartialEq)]
pub struct OptimalityCertificate<T> {
    /// `B − LHS` per checked constraint row, in row order.
    pub constraint_residuals: Vec<T>,
    /// `2·Σ_{j≥i} y_j − 2M·y_{i+m−1}` per structural column i, tails closed.
    pub dual_column_residuals: Vec<T>,
    /// `Σ_j y_j − 1` with the tail closed; the dual column condition for B.
    pub dual_mass_residual: T,
    /// `B`, the value the tight strategy achieves.
    pub primal_objective: T,
    /// `d·Σ_j j·y_j` with the tail closed.
    pub dual_objective: T,
    /// Geometric-envelope bound on `Σ_{j>K} y_j` (independent of the identity tail).
    pub tail_envelope_sum: T,
    /// Geometric-envelope bound on `Σ_{j>K} j·y_j`.
    pub tail_envelope_weighted: T,
    pub verdict: Verdict,
}

impl<T: Scalar> OptimalityCertificate<T> {
    pub fn is_certified(&self) -> bool {
        self.verdict == Verdict::Certified
    }

    pub fn max_constraint_residual(&self) -> T {
        max_abs(&self.constraint_residuals)
    }

    pub fn max_dual_column_residual(&self) -> T {
        max_abs(&self.dual_column_residuals)
    }

    /// Deterministic plain-text report.
    pub fn summary(&self) -> String {
        let verdict = match &self.verdict {
            Verdict::Certified => "Certified".to_string(),
            Verdict::Failed(reason) => format!("Failed: {reason}"),
        };
        format!(
            "verdict: {}\nrows checked: {}\ncolumns checked: {}\nmax |constraint residual|: {}\nmax |dual column residual|: {}\ndual mass residual: {}\nprimal objective: {}\ndual objective: {}\n",
            verdict,
            self.constraint_residuals.len(),
            self.dual_column_residuals.len(),
            display_value(&self.max_constraint_residual()),
            display_value(&self.max_dual_column_residual()),
            display_value(&self.dual_mass_residual),
            display_value(&self.primal_objective),
            display_value(&self.dual_objective),
        )
    }
}

fn max_abs<T: Scalar>(values: &[T]) -> T {
    let mut best = T::zero();
    for v in values {
        let a = v.abs();
        if a > best {
            best = a;
        }
    }
    best
}

/// The recursive dual sequence shared by the whole family, 1-indexed:
/// `values[j−1] = y_j`. Indices below m−1 are explicit zeros, then
/// `y_{m−1} = m/M`, `y_m = … = y_{2m−2} = 1/M`, and
/// `y_j = y_{j−1} − y_{j−m}/M` afterwards.
pub(crate) fn ray_duals<T: Scalar>(m: usize, len: usize, big_m: &T) -> Vec<T> {
    let mut y = vec![T::zero(); len];
    if m - 1 <= len {
        y[m - 2] = int::<T>(m as i64) / big_m.clone();
    }
    for j in m..=(2 * m - 2).min(len) {
        y[j - 1] = T::one() / big_m.clone();
    }
    for j in (2 * m - 1)..=len {
        y[j - 1] = y[j - 2].clone() - y[j - m - 1].clone() / big_m.clone();
    }
    y
}

pub(crate) struct RayFamily<T> {
    pub q: T,
    pub big_m: T,
    pub d: T,
    pub additive: T,
}

impl<T: Scalar> RayFamily<T> {
    pub fn new(m: usize, d: &T) -> Self {
        let q: T = ratio(m as i64, m as i64 - 1);
        let big_m = int::<T>(m as i64) * pow_int(&q, m - 1);
        let additive = (big_m.clone() - int::<T>(m as i64)) * d.clone();
        RayFamily { q, big_m, d: d.clone(), additive }
    }

    /// Closed-form steps x_1..x_n with x_i = d(q^i − 1)/2.
    pub fn steps(&self, n: usize) -> Vec<T> {
        let half_d = self.d.clone() / int::<T>(2);
        let mut qpow = T::one();
        let mut out = Vec::with_capacity(n);
        for _ in 0..n {
            qpow = qpow * self.q.clone();
            out.push((qpow.clone() - T::one()) * half_d.clone());
        }
        out
    }
}

/// Core certificate computation over `row_count` unified rows
/// (j = m−1 … m+row_count−2). The line wrapper uses m = 2; the star wrapper
/// maps depth N to row_count = N+1 (startup row included).
pub(crate) fn certify_ray_family<T: Scalar>(m: usize, d: &T, row_count: usize, tol: &T) -> OptimalityCertificate<T> {
    let fam = RayFamily::new(m, d);
    let j_max = m + row_count - 2;
    let dual_len = j_max + 2 * m - 1;
    let y = ray_duals(m, dual_len, &fam.big_m);
    let x = fam.steps(j_max);
    let b = fam.additive.clone();
    let two = int::<T>(2);
    let mut failures: Vec<String> = Vec::new();

    // Constraint tightness: B − LHS per row, compared against the row's own
    // magnitude so large depths are judged on relative error.
    let mut constraint_residuals = Vec::with_capacity(row_count);
    let mut prefix = T::zero();
    let mut prefix_abs = T::zero();
    for j in 1..=j_max {
        prefix = prefix + x[j - 1].clone();
        prefix_abs = prefix_abs + x[j - 1].abs();
        if j < m - 1 {
            continue;
        }
        let recall = if j >= m { two.clone() * fam.big_m.clone() * x[j - m].clone() } else { T::zero() };
        let lhs = two.clone() * prefix.clone() + int::<T>(j as i64) * d.clone() - recall.clone();
        let residual = b.clone() - lhs;
        let scale = T::one() + b.abs() + two.clone() * prefix_abs.clone() + int::<T>(j as i64) * d.abs() + recall.abs();
        if !within_tol(&residual, tol, &scale) {
            failures.push(format!("constraint {j} not tight (residual {residual})"));
        }
        constraint_residuals.push(residual);
    }

    // Dual sanity: nonnegative values, mass converging to 1 from below.
    let neg_tol = -tol.clone();
    if y.iter().any(|v| *v < neg_tol) {
        failures.push("a dual value is negative".into());
    }
    let mut partial_sum = T::zero();
    let mut partial_weighted = T::zero();
    for (idx, v) in y.iter().enumerate().take(j_max) {
        partial_sum = partial_sum + v.clone();
        partial_weighted = partial_weighted + int::<T>(idx as i64 + 1) * v.clone();
    }
    if partial_sum > T::one() + tol.clone() {
        failures.push(format!("dual mass exceeds 1 ({partial_sum})"));
    }

    // Tail identities: Σ_{j>K} y_j = M·y_{K+m} and
    // Σ_{j>K} j·y_j = M(K·y_{K+m} + M·y_{K+2m−1}), K = j_max.
    let tail_sum = fam.big_m.clone() * y[j_max + m - 1].clone();
    let tail_weighted = fam.big_m.clone()
        * (int::<T>(j_max as i64) * y[j_max + m - 1].clone() + fam.big_m.clone() * y[dual_len - 1].clone());
    let dual_mass_residual = partial_sum.clone() + tail_sum.clone() - T::one();
    if !within_tol(&dual_mass_residual, tol, &T::one()) {
        failures.push(format!("dual mass with tail misses 1 (residual {dual_mass_residual})"));
    }
    let dual_objective = d.clone() * (partial_weighted.clone() + tail_weighted.clone());
    let duality_gap = dual_objective.clone() - b.clone();
    if !within_tol(&duality_gap, tol, &(T::one() + b.abs())) {
        failures.push(format!("dual objective misses the primal value (gap {duality_gap})"));
    }

    // Dual column conditions 2Σ_{j≥i} y_j − 2M·y_{i+m−1} = 0 for every
    // structural column, the tail closed by the mass identity.
    let mut dual_column_residuals = Vec::with_capacity(j_max);
    let mut suffix = tail_sum.clone();
    let mut tail_cols = Vec::with_capacity(j_max);
    for i in (1..=j_max).rev() {
        suffix = suffix + y[i - 1].clone();
        tail_cols.push(suffix.clone());
    }
    for i in 1..=j_max {
        let total = tail_cols[j_max - i].clone();
        let pull = fam.big_m.clone() * y[i + m - 2].clone();
        let residual = two.clone() * (total.clone() - pull.clone());
        let scale = T::one() + two.clone() * (total.abs() + pull.abs());
        if !within_tol(&residual, tol, &scale) {
            failures.push(format!("dual column {i} residual {residual}"));
        }
        dual_column_residuals.push(residual);
    }

    // Independent geometric envelope: y_j ≤ K_env·ρ^j with ρ = (m−1)/m, so
    // the unchecked tails are bounded without leaning on the identities.
    let rho: T = ratio(m as i64 - 1, m as i64);
    let mut rho_pow = T::one();
    let mut k_env = T::zero();
    for v in &y {
        rho_pow = rho_pow * rho.clone();
        let r = v.clone() / rho_pow.clone();
        if r > k_env {
            k_env = r;
        }
    }
    let one_minus_rho = T::one() - rho.clone();
    let rho_tail = pow_int(&rho, j_max + 1);
    let tail_envelope_sum = k_env.clone() * rho_tail.clone() / one_minus_rho.clone();
    let tail_envelope_weighted = k_env.clone() * rho_tail
        * (int::<T>(j_max as i64 + 1) - int::<T>(j_max as i64) * rho.clone())
        / (one_minus_rho.clone() * one_minus_rho);
    let sum_gap = T::one() - partial_sum;
    if sum_gap < neg_tol || sum_gap > tail_envelope_sum.clone() + tol.clone() {
        failures.push(format!("dual mass gap {sum_gap} outside geometric envelope {tail_envelope_sum}"));
    }
    let target_weighted = (fam.big_m.clone() - int::<T>(m as i64)) * T::one();
    let weighted_gap = target_weighted - partial_weighted;
    if weighted_gap < neg_tol || weighted_gap > tail_envelope_weighted.clone() + tol.clone() {
        failures
            .push(format!("weighted dual sum gap {weighted_gap} outside geometric envelope {tail_envelope_weighted}"));
    }

    let verdict =
        if failures.is_empty() { Verdict::Certified } else { Verdict::Failed(failures.join("; ")) };
    OptimalityCertificate {
        constraint_residuals,
        dual_column_residuals,
        dual_mass_residual,
        primal_objective: b,
        dual_objective,
        tail_envelope_sum,
        tail_envelope_weighted,
        verdict,
    }
}

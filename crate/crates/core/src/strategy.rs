//! Cyclic search strategies: a finite list of excursion lengths over m rays.
//!
//! Step i (1-indexed) explores ray (i−1) mod m out to distance x_i and comes
//! back to the origin. The line is the m = 2 case.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct SearchStrategy<T> {
    ray_count: usize,
    turn_cost: T,
    steps: Vec<T>,
}

impl<T: Scalar> SearchStrategy<T> {
    /// Steps must be finite and nonnegative; the closed-form strategies are
    /// strictly increasing, but LP-derived prefixes legitimately end in 0.
    pub fn new(ray_count: usize, turn_cost: T, steps: Vec<T>) -> Result<Self> {
        if ray_count < 2 {
            return Err(Error::InvalidInput(format!("ray count must be at least 2, got {ray_count}")));
        }
        if !turn_cost.is_finite_value() || turn_cost < T::zero() {
            return Err(Error::InvalidInput("turn cost must be finite and nonnegative".into()));
        }
        for (i, s) in steps.iter().enumerate() {
            if !s.is_finite_value() || *s < T::zero() {
                return Err(Error::InvalidInput(format!("step {} must be finite and nonnegative", i + 1)));
            }
        }
        Ok(SearchStrategy { ray_count, turn_cost, steps })
    }

    pub fn ray_count(&self) -> usize {
        self.ray_count
    }

    pub fn turn_cost(&self) -> &T {
        &self.turn_cost
    }

    pub fn steps(&self) -> &[T] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Step lengths are 1-indexed to match the constraint indexing.
    pub fn step(&self, i: usize) -> &T {
        &self.steps[i - 1]
    }

    /// The ray explored by step i (1-indexed).
    pub fn ray_of_step(&self, i: usize) -> usize {
        (i - 1) % self.ray_count
    }

    /// Minimum of x_{i+m} − x_i over all same-ray consecutive pairs; `None`
    /// when no ray is visited twice. Negative when same-ray steps shrink.
    pub fn min_same_ray_gap(&self) -> Option<T> {
        let m = self.ray_count;
        if self.steps.len() <= m {
            return None;
        }
        let mut best: Option<T> = None;
        for i in 0..self.steps.len() - m {
            let gap = self.steps[i + m].clone() - self.steps[i].clone();
            if best.as_ref().is_none_or(|b| gap < *b) {
                best = Some(gap);
            }
        }
        best
    }

    /// Largest excursion on a ray; `None` if the prefix never visits it.
    pub fn max_step_on_ray(&self, ray: usize) -> Option<T> {
        let mut best: Option<T> = None;
        for (idx, s) in self.steps.iter().enumerate() {
            if idx % self.ray_count == ray && best.as_ref().is_none_or(|b| *s > *b) {
                best = Some(s.clone());
            }
        }
        best
    }

    pub fn prefix(&self, k: usize) -> SearchStrategy<T> {
        SearchStrategy {
            ray_count: self.ray_count,
            turn_cost: self.turn_cost.clone(),
            steps: self.steps[..k.min(self.steps.len())].to_vec(),
        }
    }
}

//! Plays a search strategy against hiders and audits cost guarantees.
//!
//! The searcher starts at the origin, walks out `step(i)` along ray
//! `(i−1) mod m` on the i-th excursion, and returns if the hider was not on
//! that segment. Each completed excursion costs one turn charge d. A hider
//! at distance x on ray r is found during the first excursion on r that
//! reaches x; the optimal offline cost is x.

use crate::error::{Error, Result};
use crate::scalar::{display_value, int, ratio, Scalar};
use crate::strategy::SearchStrategy;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

#[derive(Clone, Debug, PartialEq)]
pub struct HiderPlacement<T> {
    /// Ray index in 0..m.
    pub ray: usize,
    /// Distance from the origin, strictly positive.
    pub distance: T,
}

/// The offline optimum: walk straight to the hider.
pub fn opt_cost<T: Scalar>(hider: &HiderPlacement<T>) -> T {
    hider.distance.clone()
}

#[derive(Clone, Debug, PartialEq)]
pub struct GameOutcome<T> {
    pub found: bool,
    /// 1-based excursion on which the hider was found, if any.
    pub excursion_found: Option<usize>,
    /// Distance walked.
    pub travel: T,
    /// Completed turns charged.
    pub turns: usize,
    pub turn_cost_total: T,
    /// travel + turn charges.
    pub total_cost: T,
    /// Offline optimum for this hider.
    pub opt: T,
}

pub fn simulate<T: Scalar>(
    strategy: &SearchStrategy<T>,
    hider: &HiderPlacement<T>,
) -> Result<GameOutcome<T>> {
    let m = strategy.ray_count();
    if hider.ray >= m {
        return Err(Error::InvalidInput(format!(
            "hider ray {} out of range for {m} rays",
            hider.ray
        )));
    }
    if !hider.distance.is_finite_value() || hider.distance <= T::zero() {
        return Err(Error::InvalidInput("hider distance must be finite and positive".into()));
    }
    let d = strategy.turn_cost().clone();
    let mut walked = T::zero();
    for i in 1..=strategy.len() {
        let step = strategy.step(i);
        if strategy.ray_of_step(i) == hider.ray && *step >= hider.distance {
            let travel = walked + hider.distance.clone();
            let turns = i - 1;
            let turn_cost_total = int::<T>(turns as i64) * d;
            let total_cost = travel.clone() + turn_cost_total.clone();
            return Ok(GameOutcome {
                found: true,
                excursion_found: Some(i),
                travel,
                turns,
                turn_cost_total,
                total_cost,
                opt: hider.distance.clone(),
            });
        }
        walked = walked + int::<T>(2) * step.clone();
    }
    let turns = strategy.len();
    let turn_cost_total = int::<T>(turns as i64) * d;
    let total_cost = walked.clone() + turn_cost_total.clone();
    Ok(GameOutcome {
        found: false,
        excursion_found: None,
        travel: walked,
        turns,
        turn_cost_total,
        total_cost,
        opt: hider.distance.clone(),
    })
}

/// The placements that witness each constraint of the truncated LP: one
/// hider just beyond every tip (in excursion order), then one just past the
/// origin on every ray. When a ray is searched more than once, `epsilon`
/// must stay below the smallest same-ray extension so each probe lands
/// strictly between consecutive tips.
pub fn adversarial_hiders<T: Scalar>(
    strategy: &SearchStrategy<T>,
    epsilon: &T,
) -> Result<Vec<HiderPlacement<T>>> {
    if !epsilon.is_finite_value() || *epsilon <= T::zero() {
        return Err(Error::InvalidInput("epsilon must be finite and positive".into()));
    }
    if let Some(gap) = strategy.min_same_ray_gap() {
        if gap <= T::zero() {
            return Err(Error::InvalidInput(
                "strategy revisits a ray without extending it; no epsilon is admissible".into(),
            ));
        }
        if *epsilon >= gap {
            return Err(Error::InvalidInput(format!(
                "epsilon must be below the smallest same-ray extension {}",
                display_value(&gap)
            )));
        }
    }
    let mut out = Vec::with_capacity(strategy.len() + strategy.ray_count());
    for i in 1..=strategy.len() {
        out.push(HiderPlacement {
            ray: strategy.ray_of_step(i),
            distance: strategy.step(i).clone() + epsilon.clone(),
        });
    }
    for ray in 0..strategy.ray_count() {
        out.push(HiderPlacement { ray, distance: epsilon.clone() });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbeRecord<T> {
    pub placement: HiderPlacement<T>,
    pub excursion_found: usize,
    pub total_cost: T,
    pub opt: T,
    /// total − c·opt − B; nonpositive when the guarantee holds.
    pub slack: T,
}

/// A played-out check of the guarantee total ≤ c·opt + B.
#[derive(Clone, Debug, PartialEq)]
pub struct GuaranteeAudit<T> {
    pub ratio_coefficient: T,
    pub additive: T,
    pub turn_cost: T,
    pub ray_count: usize,
    pub epsilon: T,
    pub worst_slack: T,
    /// First placement attaining the worst slack.
    pub argmax: HiderPlacement<T>,
    pub probes: Vec<ProbeRecord<T>>,
}

/// Plays the adversarial placements (tips that a later excursion can still
/// reach, then the near-origin hiders, then `extra_probes` seeded random
/// placements) and records the guarantee slack of each. Errors if any probe
/// goes unfound, so a finite prefix is never mistaken for a certificate.
pub fn audit_guarantee<T: Scalar>(
    strategy: &SearchStrategy<T>,
    ratio_coefficient: &T,
    additive: &T,
    epsilon: &T,
    extra_probes: usize,
    seed: u64,
) -> Result<GuaranteeAudit<T>> {
    let m = strategy.ray_count();
    if strategy.len() < m {
        return Err(Error::InvalidInput(format!(
            "audit needs at least one excursion per ray ({} steps), got {}",
            m,
            strategy.len()
        )));
    }
    let mut placements = Vec::new();
    {
        let all = adversarial_hiders(strategy, epsilon)?;
        // Beyond-tip probes only for tips revisited within the horizon; the
        // last m tips have no later excursion on their ray.
        placements.extend_from_slice(&all[..strategy.len() - m]);
        placements.extend_from_slice(&all[strategy.len()..]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const GRID: i64 = 1 << 20;
    for _ in 0..extra_probes {
        let ray = (rng.next_u32() as usize) % m;
        let num = (rng.next_u32() as i64 % GRID) + 1;
        let fraction: T = ratio(num, GRID);
        let reach = strategy.max_step_on_ray(ray).expect("every ray is searched");
        let distance = if reach > T::zero() { fraction * reach } else { epsilon.clone() };
        placements.push(HiderPlacement { ray, distance });
    }

    let mut probes = Vec::with_capacity(placements.len());
    let mut worst: Option<(T, HiderPlacement<T>)> = None;
    for placement in placements {
        let outcome = simulate(strategy, &placement)?;
        let Some(excursion) = outcome.excursion_found else {
            return Err(Error::Audit(format!(
                "probe on ray {} at distance {} was never found",
                placement.ray,
                display_value(&placement.distance)
            )));
        };
        let slack = outcome.total_cost.clone()
            - ratio_coefficient.clone() * outcome.opt.clone()
            - additive.clone();
        let replace = match &worst {
            None => true,
            Some((w, _)) => slack > *w,
        };
        if replace {
            worst = Some((slack.clone(), placement.clone()));
        }
        probes.push(ProbeRecord {
            placement,
            excursion_found: excursion,
            total_cost: outcome.total_cost,
            opt: outcome.opt,
            slack,
        });
    }
    let (worst_slack, argmax) = worst.expect("at least the near-origin probes ran");
    Ok(GuaranteeAudit {
        ratio_coefficient: ratio_coefficient.clone(),
        additive: additive.clone(),
        turn_cost: strategy.turn_cost().clone(),
        ray_count: m,
        epsilon: epsilon.clone(),
        worst_slack,
        argmax,
        probes,
    })
}

impl<T: Scalar> GuaranteeAudit<T> {
    pub fn to_json(&self) -> String {
        let probes: Vec<_> = self
            .probes
            .iter()
            .map(|p| {
                json!({
                    "ray": p.placement.ray,
                    "distance": p.placement.distance.to_f64(),
                    "excursion_found": p.excursion_found,
                    "total_cost": p.total_cost.to_f64(),
                    "opt": p.opt.to_f64(),
                    "slack": p.slack.to_f64(),
                })
            })
            .collect();
        let doc = json!({
            "c": self.ratio_coefficient.to_f64(),
            "B": self.additive.to_f64(),
            "d": self.turn_cost.to_f64(),
            "m": self.ray_count,
            "epsilon": self.epsilon.to_f64(),
            "worst_slack": self.worst_slack.to_f64(),
            "argmax": {
                "ray": self.argmax.ray,
                "distance": self.argmax.distance.to_f64(),
            },
            "probes": probes,
        });
        serde_json::to_string_pretty(&doc).expect("audit document serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "# c={} B={} d={} m={} epsilon={}\n",
            display_value(&self.ratio_coefficient),
            display_value(&self.additive),
            display_value(&self.turn_cost),
            self.ray_count,
            display_value(&self.epsilon)
        ));
        out.push_str(&format!(
            "# worst_slack={} argmax_ray={} argmax_distance={}\n",
            display_value(&self.worst_slack),
            self.argmax.ray,
            display_value(&self.argmax.distance)
        ));
        out.push_str("ray,distance,excursion_found,total_cost,opt,slack\n");
        for p in &self.probes {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                p.placement.ray,
                display_value(&p.placement.distance),
                p.excursion_found,
                display_value(&p.total_cost),
                display_value(&p.opt),
                display_value(&p.slack)
            ));
        }
        out
    }
}

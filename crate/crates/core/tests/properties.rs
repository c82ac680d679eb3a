//! Property tests tying the solver, the closed forms, and the simulator
//! together: strong duality on solved truncations, exact scaling in d,
//! tightness of the closed-form strategy, and the probe-slack/row-residual
//! identity that links game play back to the LP rows.

use num::traits::Zero;
use proptest::prelude::*;
use turnsearch::scalar::{int, ratio};
use turnsearch::{
    adversarial_hiders, build_line_lp, build_star_lp, check_solution, closed_form_star_strategy,
    extrapolate_limit, line_dual_sequence, simulate, solve, solve_equality_oracle,
    star_dual_sequence, HiderPlacement, LineInstance, LpStatus, Rational, Scalar, SearchStrategy,
    SolveOptions, StarInstance,
};

fn rat(n: i64, d: i64) -> Rational {
    ratio(n, d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn solved_truncations_pass_the_duality_gate(n in 1usize..24, dn in 1i64..6, c10 in 90i64..240) {
        let d = rat(dn, 1);
        let inst = LineInstance::new(d, rat(c10, 10)).unwrap();
        let lp = build_line_lp(&inst, n).unwrap();
        let sol = solve(&lp, &SolveOptions::standard()).unwrap();
        prop_assert_eq!(sol.status, LpStatus::Optimal);
        prop_assert!(check_solution(&lp, &sol, &Rational::zero()).is_ok());
        prop_assert_eq!(sol.dual_objective(&lp), sol.objective);
    }

    #[test]
    fn simplex_agrees_with_the_equality_oracle(n in 2usize..16) {
        let inst = LineInstance::base(Rational::from_int(1)).unwrap();
        let lp = build_line_lp(&inst, n).unwrap();
        let simplex = solve(&lp, &SolveOptions::standard()).unwrap();
        let oracle = solve_equality_oracle(&lp, &Rational::zero()).unwrap();
        prop_assert_eq!(simplex.objective, oracle.objective);
        prop_assert_eq!(simplex.primal, oracle.primal);
        prop_assert_eq!(simplex.dual, oracle.dual);
    }

    #[test]
    fn optimum_scales_linearly_in_the_turn_cost(n in 1usize..14, num in 1i64..40, den in 1i64..9) {
        let d = rat(num, den);
        let unit = LineInstance::base(Rational::from_int(1)).unwrap();
        let scaled = LineInstance::base(d.clone()).unwrap();
        let opts = SolveOptions::standard();
        let b1 = solve(&build_line_lp(&unit, n).unwrap(), &opts).unwrap().objective;
        let bd = solve(&build_line_lp(&scaled, n).unwrap(), &opts).unwrap().objective;
        prop_assert_eq!(bd, d * b1);
    }

    #[test]
    fn closed_form_makes_every_row_tight(m in 2usize..7, extra in 0usize..12) {
        let depth = m + extra + 1;
        let inst = StarInstance::new(m, rat(3, 2)).unwrap();
        let lp = build_star_lp(&inst, depth).unwrap();
        let strategy = closed_form_star_strategy(&inst, depth + m - 1).unwrap();
        let mut z: Vec<Rational> = strategy.steps().to_vec();
        z.push(inst.additive_term());
        for j in 0..lp.rows().len() {
            prop_assert_eq!(lp.row_slack(j, &z), Rational::zero());
        }
    }

    #[test]
    fn two_ray_star_is_the_line(n in 1usize..12) {
        let d = rat(2, 3);
        let star = StarInstance::new(2, d.clone()).unwrap();
        let line = LineInstance::base(d).unwrap();
        prop_assert_eq!(build_star_lp(&star, n).unwrap(), build_line_lp(&line, n + 1).unwrap());
        let ss = closed_form_star_strategy(&star, n).unwrap();
        let ls = turnsearch::closed_form_line_strategy(star.turn_cost(), n).unwrap();
        prop_assert_eq!(ss.steps(), ls.steps());
    }

    #[test]
    fn simulate_accounts_costs_and_orders_discovery(
        seedlets in prop::collection::vec(1u32..60, 2..14),
        m in 2usize..5,
        raw_ray in 0usize..8,
        numer in 1i64..200,
    ) {
        // Strictly increasing steps keep every ray extendable.
        let mut acc = Rational::zero();
        let steps: Vec<Rational> = seedlets.iter().map(|&k| {
            acc = acc.clone() + rat(k as i64, 16);
            acc.clone()
        }).collect();
        let d = rat(1, 2);
        let strategy = SearchStrategy::new(m, d.clone(), steps.clone()).unwrap();
        let ray = raw_ray % m;
        let reach = strategy.max_step_on_ray(ray);
        prop_assume!(reach.is_some());
        let reach = reach.unwrap();
        let distance = reach * rat(numer, 200);
        prop_assume!(distance > Rational::zero());
        let hider = HiderPlacement { ray, distance: distance.clone() };
        let out = simulate(&strategy, &hider).unwrap();
        prop_assert!(out.found);
        let i = out.excursion_found.unwrap();
        prop_assert_eq!(strategy.ray_of_step(i), ray);
        prop_assert!(*strategy.step(i) >= distance);
        // Total cost decomposes and matches the hand roll-up.
        prop_assert_eq!(out.turns, i - 1);
        prop_assert_eq!(
            out.total_cost.clone(),
            out.travel.clone() + int::<Rational>(out.turns as i64) * d
        );
        let walked: Rational = steps[..i - 1].iter().cloned().sum();
        prop_assert_eq!(out.travel, int::<Rational>(2) * walked + distance.clone());
        // Any farther hider on the same ray is found no earlier.
        let farther = distance * rat(3, 2);
        if farther <= *strategy.max_step_on_ray(ray).as_ref().unwrap() {
            let later = simulate(&strategy, &HiderPlacement { ray, distance: farther }).unwrap();
            prop_assert!(later.excursion_found.unwrap() >= i);
        }
    }

    #[test]
    fn probe_slack_is_the_row_residual_identity(
        incs in prop::collection::vec(1u32..40, 4..12),
        m in 2usize..4,
        tip0 in 0usize..32,
    ) {
        // slack(tip i probe) = (row activity − rhs) + (1 − c)·ε, row = tip + m
        // excursions onward, exactly in rationals.
        let mut acc = Rational::zero();
        let steps: Vec<Rational> = incs.iter().map(|&k| {
            acc = acc.clone() + rat(k as i64, 8);
            acc.clone()
        }).collect();
        let n = steps.len();
        prop_assume!(n >= m + 1);
        let d = rat(2, 1);
        let inst = StarInstance::new(m, d.clone()).unwrap();
        let c = inst.competitive_coefficient();
        let b = rat(7, 3); // arbitrary candidate additive term
        let strategy = SearchStrategy::new(m, d, steps.clone()).unwrap();
        let eps = rat(1, 64);
        let tip = 1 + tip0 % (n - m);
        let hider = HiderPlacement {
            ray: strategy.ray_of_step(tip),
            distance: strategy.step(tip).clone() + eps.clone(),
        };
        let out = simulate(&strategy, &hider).unwrap();
        prop_assert_eq!(out.excursion_found, Some(tip + m));
        let slack = out.total_cost - c.clone() * out.opt - b.clone();

        let lp = build_star_lp(&inst, n - m + 1).unwrap();
        let mut z = steps;
        z.push(b);
        let residual = lp.row_activity(tip, &z) - lp.rows()[tip].rhs.clone();
        prop_assert_eq!(slack, residual + (Rational::from_int(1) - c) * eps);
    }

    #[test]
    fn adversarial_probes_witness_every_lp_row(extra in 0usize..8, m in 2usize..5) {
        // On the closed form with the exact (c, B), every beyond-tip probe that
        // is found lands slack −(c−1)·ε, i.e. the tight row minus the overshoot.
        let inst = StarInstance::new(m, Rational::from_int(1)).unwrap();
        let n = 2 * m + extra;
        let strategy = closed_form_star_strategy(&inst, n).unwrap();
        let eps = rat(1, 1_000_000);
        let c = inst.competitive_coefficient();
        let b = inst.additive_term();
        let hiders = adversarial_hiders(&strategy, &eps).unwrap();
        for hider in &hiders[..n - m] {
            let out = simulate(&strategy, hider).unwrap();
            let slack = out.total_cost - c.clone() * out.opt - b.clone();
            prop_assert_eq!(slack, (Rational::from_int(1) - c.clone()) * eps.clone());
        }
    }

    #[test]
    fn extrapolation_recovers_linear_limits(l in 1i64..40, k in 1i64..40, n in 2usize..200) {
        // On λ_n = L − K/n the Richardson step returns L exactly.
        let lam = |s: usize| rat(l, 1) - rat(k, s as i64);
        let pairs = vec![(n, lam(n)), (2 * n, lam(2 * n))];
        prop_assert_eq!(extrapolate_limit(&pairs).unwrap(), rat(l, 1));
    }
}

#[test]
fn lambda_is_nondecreasing_and_below_two() {
    let inst = LineInstance::base(1.0).unwrap();
    let sizes: Vec<usize> = (1..=40).collect();
    let seq = turnsearch::line::lambda_sequence(&inst, &sizes, &SolveOptions::standard()).unwrap();
    for w in seq.windows(2) {
        assert!(w[1].1 >= w[0].1 - 1e-12, "λ dipped at n={}", w[1].0);
    }
    assert!(seq.iter().all(|(_, l)| *l <= 2.0 + 1e-12 && *l >= 1.0));
}

#[test]
fn dual_tail_ratio_approaches_the_envelope_rate() {
    for m in 2usize..=6 {
        let inst = StarInstance::new(m, 1.0).unwrap();
        let seq = star_dual_sequence(&inst, 500).unwrap();
        let rho = (m as f64 - 1.0) / m as f64;
        let r = seq.values[499] / seq.values[498];
        assert!((r - rho).abs() <= 1e-6, "m={m}: ratio {r} vs {rho}");
    }
}

#[test]
fn line_dual_tails_are_the_closed_forms() {
    for n in [4usize, 9, 16, 40] {
        let seq = line_dual_sequence::<Rational>(n).unwrap();
        let total: Rational = seq.values.iter().cloned().sum();
        assert_eq!(total + seq.tail_sum.clone(), Rational::from_int(1));
        let weighted: Rational = seq
            .values
            .iter()
            .enumerate()
            .map(|(i, v)| int::<Rational>(i as i64 + 1) * v.clone())
            .sum();
        assert_eq!(weighted + seq.tail_weighted_sum.clone(), Rational::from_int(2));
    }
}

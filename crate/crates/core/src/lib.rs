//! turnsearch: searching with a cost per turn, as finite linear programs.
//!
//! Builds and solves the finite truncations of the infinite linear programs
//! behind searching on a line (or on `m` rays) when every turn costs a fixed
//! amount `d` on top of distance. The crate certifies the closed-form optimal
//! strategies and dual sequences, simulates the search game against
//! adversarial hiders, traces the ratio/additive-term trade-off curve, and
//! solves for the randomized competitive ratio.

pub mod certificate;
pub mod error;
pub mod line;
pub mod lp;
pub mod randomized;
pub mod report;
pub mod scalar;
pub mod sim;
pub mod star;
pub mod strategy;

pub use certificate::{OptimalityCertificate, Verdict};
pub use error::{Error, Result};
pub use line::{
    build_line_lp, certify_line_optimality, closed_form_line_strategy, extrapolate_limit,
    line_dual_sequence, tradeoff_curve, DualSequence, LineInstance, TradeoffPoint,
};
pub use lp::{
    check_solution, solve, solve_equality_oracle, LinearProgram, LpRow, LpSolution, LpStatus,
    SolveOptions,
};
pub use randomized::{randomized_additive_bound, solve_randomized_ratio, RandomizedRatio};
pub use scalar::{ArithmeticMode, Rational, Scalar};
pub use sim::{
    adversarial_hiders, audit_guarantee, opt_cost, simulate, GameOutcome, GuaranteeAudit,
    HiderPlacement, ProbeRecord,
};
pub use star::{
    build_star_lp, certify_star_optimality, closed_form_star_strategy, star_additive_term,
    star_dual_sequence, StarDualSequence, StarInstance,
};
pub use strategy::SearchStrategy;

//! Command-line front end: builds and solves the turn-cost search LPs,
//! certifies the closed-form strategies, plays the search game, and prints
//! plot-ready tables. Every command is deterministic for a fixed
//! configuration (including --seed), so outputs are byte-reproducible.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use turnsearch::report::{
    dual_sequence_csv, parse_scalar, star_convergence_csv, table1_csv, tradeoff_csv,
};
use turnsearch::scalar::{default_tolerance, display_value, int, ratio};
use turnsearch::{
    audit_guarantee, build_star_lp, certify_line_optimality, certify_star_optimality,
    closed_form_star_strategy, randomized_additive_bound, simulate, solve,
    solve_randomized_ratio, star_dual_sequence, GameOutcome, HiderPlacement, LinearProgram,
    LpStatus, Rational, Scalar, SearchStrategy, SolveOptions, StarInstance,
};

#[derive(Parser)]
#[command(
    name = "turnsearch",
    version,
    about = "Searching a line or m rays with a cost per turn: LP truncations, optimality certificates, game simulation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Float,
    Rational,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the line truncations and tabulate lambda with the first five steps and duals per size
    Table1 {
        /// Comma-separated truncation sizes (empty prints the header only)
        #[arg(long, default_value = "1,2,3,4,5,6,7,8,9,10,20,30,40,50,100,200,400")]
        sizes: String,
        /// Turn cost
        #[arg(long, default_value = "1")]
        d: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Certify the closed-form line strategy and dual sequence at depth n (exit 0 iff certified)
    VerifyLine {
        /// Truncation depth (at least 3)
        #[arg(long, default_value_t = 100)]
        n: usize,
        /// Turn cost
        #[arg(long, default_value = "1")]
        d: String,
        #[arg(long, value_enum, default_value_t = Mode::Float)]
        mode: Mode,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Certify the closed-form m-ray strategy and dual sequence at depth n (exit 0 iff certified)
    VerifyStar {
        /// Number of rays (at least 2)
        #[arg(long, default_value_t = 3)]
        m: usize,
        /// Truncation depth (at least 2m)
        #[arg(long, default_value_t = 60)]
        n: usize,
        /// Turn cost
        #[arg(long, default_value = "1")]
        d: String,
        #[arg(long, value_enum, default_value_t = Mode::Float)]
        mode: Mode,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sweep the ratio coefficient and report the additive-term trade-off curve
    Tradeoff {
        /// Inclusive sweep start:end[:step] of the ratio coefficient
        #[arg(long = "c-range", default_value = "9:23:1")]
        c_range: String,
        /// Truncation depth for the extrapolated bound (solved at n/2 and n)
        #[arg(long, default_value_t = 400)]
        n: usize,
        /// Turn cost
        #[arg(long, default_value = "1")]
        d: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Play a strategy against a single hider and report the outcome
    Simulate {
        /// Hider placement RAY:DISTANCE, or tip:INDEX for just beyond that turning point
        #[arg(long)]
        hider: String,
        /// Strategy source: closed | lp | path to a step file (one step per line, '#' comments)
        #[arg(long, default_value = "closed")]
        strategy: String,
        /// Number of rays
        #[arg(long, default_value_t = 2)]
        m: usize,
        /// Strategy length (closed) or LP depth (lp)
        #[arg(long, default_value_t = 20)]
        n: usize,
        /// Turn cost
        #[arg(long, default_value = "1")]
        d: String,
        /// Offset used by tip: placements (default d/1e8)
        #[arg(long)]
        epsilon: Option<String>,
        #[arg(long, value_enum, default_value_t = Mode::Float)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Audit a guarantee total <= c*OPT + B over adversarial and seeded random probes
    Audit {
        /// Number of rays
        #[arg(long, default_value_t = 2)]
        m: usize,
        /// Strategy length (closed) or LP depth (lp)
        #[arg(long, default_value_t = 20)]
        n: usize,
        /// Turn cost
        #[arg(long, default_value = "1")]
        d: String,
        /// Ratio coefficient (default: the optimal 1 + 2M for m rays)
        #[arg(long)]
        c: Option<String>,
        /// Additive term (default: the optimal (M - m)d)
        #[arg(long)]
        additive: Option<String>,
        /// Probe offset past each tip (default d/1e8)
        #[arg(long)]
        epsilon: Option<String>,
        /// Extra seeded random placements
        #[arg(long = "extra-probes", default_value_t = 16)]
        extra_probes: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Strategy source: closed | lp | path to a step file
        #[arg(long, default_value = "closed")]
        strategy: String,
        #[arg(long, value_enum, default_value_t = Mode::Float)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Solve the randomized ratio equation a*ln(a) = a + 1 and report q = 1 + a
    Randomized {
        #[arg(long, default_value = "1e-9")]
        tolerance: String,
        /// Turn cost used for the reported additive bound d(q-1)/2
        #[arg(long, default_value = "1")]
        d: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Solve a linear program from its JSON form (minimize c'z subject to Az <= b, z >= 0)
    SolveLp {
        /// Path to the LP JSON document; '-' reads standard input
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t = Mode::Float)]
        mode: Mode,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// LP convergence table across ray counts: lambda, Richardson estimate, closed-form limit
    StarTable {
        /// Comma-separated ray counts
        #[arg(long, default_value = "3,4,5,6")]
        ms: String,
        /// Truncation depth (solved at n/2 and n)
        #[arg(long, default_value_t = 400)]
        n: usize,
        /// Turn cost
        #[arg(long, default_value = "1")]
        d: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit the recursive dual sequence for m rays
    StarDuals {
        #[arg(long, default_value_t = 3)]
        m: usize,
        /// Number of dual values (at least 2m-2)
        #[arg(long, default_value_t = 40)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Mode::Float)]
        mode: Mode,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, output, code)) => {
            if let Err(e) = emit(&output, &text) {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            code
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cmd: Command) -> Result<(String, Option<PathBuf>, ExitCode)> {
    match cmd {
        Command::Table1 { sizes, d, format, output } => {
            let (text, code) = cmd_table1(&sizes, &d, format)?;
            Ok((text, output, code))
        }
        Command::VerifyLine { n, d, mode, output } => {
            let (text, code) = match mode {
                Mode::Float => cmd_verify_line::<f64>(n, &d)?,
                Mode::Rational => cmd_verify_line::<Rational>(n, &d)?,
            };
            Ok((text, output, code))
        }
        Command::VerifyStar { m, n, d, mode, output } => {
            let (text, code) = match mode {
                Mode::Float => cmd_verify_star::<f64>(m, n, &d)?,
                Mode::Rational => cmd_verify_star::<Rational>(m, n, &d)?,
            };
            Ok((text, output, code))
        }
        Command::Tradeoff { c_range, n, d, format, output } => {
            let (text, code) = cmd_tradeoff(&c_range, n, &d, format)?;
            Ok((text, output, code))
        }
        Command::Simulate { hider, strategy, m, n, d, epsilon, mode, format, output } => {
            let (text, code) = match mode {
                Mode::Float => cmd_simulate::<f64>(&hider, &strategy, m, n, &d, epsilon.as_deref(), format)?,
                Mode::Rational => {
                    cmd_simulate::<Rational>(&hider, &strategy, m, n, &d, epsilon.as_deref(), format)?
                }
            };
            Ok((text, output, code))
        }
        Command::Audit { m, n, d, c, additive, epsilon, extra_probes, seed, strategy, mode, format, output } => {
            let args = AuditArgs {
                m,
                n,
                d,
                c,
                additive,
                epsilon,
                extra_probes,
                seed,
                strategy,
                format,
            };
            let (text, code) = match mode {
                Mode::Float => cmd_audit::<f64>(&args)?,
                Mode::Rational => cmd_audit::<Rational>(&args)?,
            };
            Ok((text, output, code))
        }
        Command::Randomized { tolerance, d, format, output } => {
            let (text, code) = cmd_randomized(&tolerance, &d, format)?;
            Ok((text, output, code))
        }
        Command::SolveLp { input, mode, output } => {
            let (text, code) = match mode {
                Mode::Float => cmd_solve_lp::<f64>(&input)?,
                Mode::Rational => cmd_solve_lp::<Rational>(&input)?,
            };
            Ok((text, output, code))
        }
        Command::StarTable { ms, n, d, output } => {
            let (text, code) = cmd_star_table(&ms, n, &d)?;
            Ok((text, output, code))
        }
        Command::StarDuals { m, n, mode, output } => {
            let (text, code) = match mode {
                Mode::Float => cmd_star_duals::<f64>(m, n)?,
                Mode::Rational => cmd_star_duals::<Rational>(m, n)?,
            };
            Ok((text, output, code))
        }
    }
}

fn parse_sizes(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|_| anyhow!("invalid size '{s}'")))
        .collect()
}

fn parse_range(text: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() < 2 || parts.len() > 3 {
        bail!("range must be start:end or start:end:step, got '{text}'");
    }
    let start: f64 = parse_scalar(parts[0])?;
    let end: f64 = parse_scalar(parts[1])?;
    let step: f64 = if parts.len() == 3 { parse_scalar(parts[2])? } else { 1.0 };
    if !(step > 0.0) {
        bail!("range step must be positive");
    }
    if end < start {
        bail!("range end must not precede start");
    }
    let mut out = Vec::new();
    let mut k = 0usize;
    loop {
        let v = start + step * k as f64;
        if v > end + 1e-9 * step {
            break;
        }
        out.push(v);
        k += 1;
    }
    Ok(out)
}

/// Strategy sources shared by simulate and audit: the closed form at length
/// n, the optimal prefix of the depth-n LP (trailing zero steps trimmed), or
/// a step file.
fn load_strategy<T: Scalar>(source: &str, m: usize, d: &T, n: usize) -> Result<SearchStrategy<T>> {
    match source {
        "closed" => {
            let inst = StarInstance::new(m, d.clone())?;
            Ok(closed_form_star_strategy(&inst, n)?)
        }
        "lp" => {
            let inst = StarInstance::new(m, d.clone())?;
            let lp = build_star_lp(&inst, n)?;
            let sol = solve(&lp, &SolveOptions::standard())?;
            if sol.status != LpStatus::Optimal {
                bail!("depth-{n} program did not solve to optimality");
            }
            let mut steps: Vec<T> = sol.primal[..lp.var_count() - 1].to_vec();
            while steps.last().map_or(false, |v| *v == T::zero()) {
                steps.pop();
            }
            Ok(SearchStrategy::new(m, d.clone(), steps)?)
        }
        path => {
            let text = fs::read_to_string(path).with_context(|| format!("reading strategy file {path}"))?;
            let mut steps = Vec::new();
            for line in text.lines() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                steps.push(parse_scalar::<T>(line)?);
            }
            Ok(SearchStrategy::new(m, d.clone(), steps)?)
        }
    }
}

fn default_epsilon<T: Scalar>(d: &T) -> T {
    ratio::<T>(1, 100_000_000) * d.clone()
}

fn parse_hider<T: Scalar>(
    spec: &str,
    strategy: &SearchStrategy<T>,
    epsilon: &T,
) -> Result<HiderPlacement<T>> {
    let (head, tail) = spec
        .split_once(':')
        .ok_or_else(|| anyhow!("hider must be RAY:DISTANCE or tip:INDEX, got '{spec}'"))?;
    if head == "tip" {
        let idx: usize = tail.parse().map_err(|_| anyhow!("invalid tip index '{tail}'"))?;
        if idx < 1 || idx > strategy.len() {
            bail!("tip index must lie in 1..={}", strategy.len());
        }
        Ok(HiderPlacement {
            ray: strategy.ray_of_step(idx),
            distance: strategy.step(idx).clone() + epsilon.clone(),
        })
    } else {
        let ray: usize = head.parse().map_err(|_| anyhow!("invalid ray index '{head}'"))?;
        Ok(HiderPlacement { ray, distance: parse_scalar(tail)? })
    }
}

fn cmd_table1(sizes: &str, d: &str, format: Format) -> Result<(String, ExitCode)> {
    let sizes = parse_sizes(sizes)?;
    let d: f64 = parse_scalar(d)?;
    let rows = turnsearch::line::table_rows(&sizes, d);
    let text = match format {
        Format::Csv => table1_csv(&rows),
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(n, row)| match row {
                    Ok(r) => json!({
                        "n": n,
                        "lambda": r.lambda,
                        "lambda_trunc": r.lambda_truncated,
                        "x": r.xs,
                        "x_trunc": r.xs_truncated,
                        "y": r.ys,
                        "y_trunc": r.ys_truncated,
                    }),
                    Err(e) => json!({ "n": n, "error": e.to_string() }),
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&items)?)
        }
    };
    Ok((text, ExitCode::SUCCESS))
}

fn cmd_verify_line<T: Scalar>(n: usize, d: &str) -> Result<(String, ExitCode)> {
    let d: T = parse_scalar(d)?;
    let tol = default_tolerance::<T>();
    let cert = certify_line_optimality(&d, n, &tol)?;
    let mut text = format!(
        "target: line (two rays)\nd: {}\ndepth: {}\n{}",
        display_value(&d),
        n,
        cert.summary()
    );
    if cert.is_certified() {
        text.push_str(&format!(
            "conclusion: primal=dual=2d (B = {})\n",
            display_value(&cert.primal_objective)
        ));
        Ok((text, ExitCode::SUCCESS))
    } else {
        Ok((text, ExitCode::from(1)))
    }
}

fn cmd_verify_star<T: Scalar>(m: usize, n: usize, d: &str) -> Result<(String, ExitCode)> {
    let d: T = parse_scalar(d)?;
    let inst = StarInstance::new(m, d)?;
    let tol = default_tolerance::<T>();
    let cert = certify_star_optimality(&inst, n, &tol)?;
    let prefix_len = (2 * m - 2).max(m + 3);
    let duals = star_dual_sequence(&inst, prefix_len)?;
    let prefix: Vec<String> = duals.values[m - 2..(m + 3).min(duals.values.len())]
        .iter()
        .map(display_value)
        .collect();
    let mut text = format!(
        "target: star ({m} rays)\nd: {}\ndepth: {}\nq: {}\nM: {}\nratio coefficient: {}\n{}dual prefix: {}\n",
        display_value(inst.turn_cost()),
        n,
        display_value(&inst.growth_ratio()),
        display_value(&inst.mass()),
        display_value(&inst.competitive_coefficient()),
        cert.summary(),
        prefix.join(", ")
    );
    if cert.is_certified() {
        text.push_str(&format!(
            "conclusion: primal=dual=(M-m)d (B = {})\n",
            display_value(&cert.primal_objective)
        ));
        Ok((text, ExitCode::SUCCESS))
    } else {
        Ok((text, ExitCode::from(1)))
    }
}

fn cmd_tradeoff(c_range: &str, n: usize, d: &str, format: Format) -> Result<(String, ExitCode)> {
    let cs = parse_range(c_range)?;
    let d: f64 = parse_scalar(d)?;
    let points = turnsearch::tradeoff_curve(&d, &cs, n, &SolveOptions::standard())?;
    let text = match format {
        Format::Csv => tradeoff_csv(&points),
        Format::Json => {
            let items: Vec<_> = points
                .iter()
                .map(|p| {
                    json!({
                        "c": p.c,
                        "n": p.n,
                        "lower_bound": p.lower_bound,
                        "extrapolated": p.extrapolated,
                    })
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&items)?)
        }
    };
    Ok((text, ExitCode::SUCCESS))
}

fn outcome_json<T: Scalar>(
    m: usize,
    d: &T,
    hider: &HiderPlacement<T>,
    out: &GameOutcome<T>,
) -> serde_json::Value {
    let mut doc = json!({
        "m": m,
        "d": d.to_f64(),
        "hider": { "ray": hider.ray, "distance": hider.distance.to_f64() },
        "found": out.found,
        "excursion_found": out.excursion_found,
        "travel": out.travel.to_f64(),
        "turns": out.turns,
        "turn_cost_total": out.turn_cost_total.to_f64(),
        "total_cost": out.total_cost.to_f64(),
        "opt": out.opt.to_f64(),
        "ratio": out.total_cost.to_f64() / out.opt.to_f64(),
    });
    if T::is_exact() {
        doc["exact"] = json!({
            "distance": display_value(&hider.distance),
            "travel": display_value(&out.travel),
            "total_cost": display_value(&out.total_cost),
            "opt": display_value(&out.opt),
        });
    }
    doc
}

fn cmd_simulate<T: Scalar>(
    hider: &str,
    strategy_src: &str,
    m: usize,
    n: usize,
    d: &str,
    epsilon: Option<&str>,
    format: Format,
) -> Result<(String, ExitCode)> {
    let d: T = parse_scalar(d)?;
    let strategy = load_strategy::<T>(strategy_src, m, &d, n)?;
    let eps: T = match epsilon {
        Some(text) => parse_scalar(text)?,
        None => default_epsilon(&d),
    };
    let hider = parse_hider(hider, &strategy, &eps)?;
    let out = simulate(&strategy, &hider)?;
    let text = match format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&outcome_json(m, &d, &hider, &out))?
        ),
        Format::Csv => {
            let mut s = String::from("ray,distance,found,excursion_found,travel,turns,total_cost,opt\n");
            s.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                hider.ray,
                display_value(&hider.distance),
                out.found,
                out.excursion_found.map_or(String::new(), |i| i.to_string()),
                display_value(&out.travel),
                out.turns,
                display_value(&out.total_cost),
                display_value(&out.opt)
            ));
            s
        }
    };
    Ok((text, ExitCode::SUCCESS))
}

struct AuditArgs {
    m: usize,
    n: usize,
    d: String,
    c: Option<String>,
    additive: Option<String>,
    epsilon: Option<String>,
    extra_probes: usize,
    seed: u64,
    strategy: String,
    format: Format,
}

fn cmd_audit<T: Scalar>(args: &AuditArgs) -> Result<(String, ExitCode)> {
    let d: T = parse_scalar(&args.d)?;
    let inst = StarInstance::new(args.m, d.clone())?;
    let c: T = match &args.c {
        Some(text) => parse_scalar(text)?,
        None => inst.competitive_coefficient(),
    };
    let additive: T = match &args.additive {
        Some(text) => parse_scalar(text)?,
        None => inst.additive_term(),
    };
    let eps: T = match &args.epsilon {
        Some(text) => parse_scalar(text)?,
        None => default_epsilon(&d),
    };
    let strategy = load_strategy::<T>(&args.strategy, args.m, &d, args.n)?;
    let audit = audit_guarantee(&strategy, &c, &additive, &eps, args.extra_probes, args.seed)?;
    let text = match args.format {
        Format::Json => format!("{}\n", audit.to_json()),
        Format::Csv => audit.to_csv(),
    };
    Ok((text, ExitCode::SUCCESS))
}

fn cmd_randomized(tolerance: &str, d: &str, format: Format) -> Result<(String, ExitCode)> {
    let tol: f64 = parse_scalar(tolerance)?;
    let d: f64 = parse_scalar(d)?;
    let r = solve_randomized_ratio(tol)?;
    let bound = randomized_additive_bound(r.q, d)?;
    let text = match format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&json!({
                "a": r.a,
                "q": r.q,
                "residual": r.residual,
                "d": d,
                "additive_bound": bound,
            }))?
        ),
        Format::Csv => format!("a,q,residual,d,additive_bound\n{},{},{},{},{}\n", r.a, r.q, r.residual, d, bound),
    };
    Ok((text, ExitCode::SUCCESS))
}

fn cmd_solve_lp<T: Scalar>(input: &str) -> Result<(String, ExitCode)> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).context("reading standard input")?;
        buf
    } else {
        fs::read_to_string(input).with_context(|| format!("reading {input}"))?
    };
    let lp = LinearProgram::<T>::from_json_str(&text)?;
    let sol = solve(&lp, &SolveOptions::standard())?;
    let status = match sol.status {
        LpStatus::Optimal => "optimal",
        LpStatus::Infeasible => "infeasible",
        LpStatus::Unbounded => "unbounded",
    };
    let mut doc = json!({
        "status": status,
        "objective": sol.objective.to_f64(),
        "primal": sol.primal.iter().map(Scalar::to_f64).collect::<Vec<_>>(),
        "dual": sol.dual.iter().map(Scalar::to_f64).collect::<Vec<_>>(),
    });
    if sol.status == LpStatus::Optimal {
        doc["dual_objective"] = json!(sol.dual_objective(&lp).to_f64());
        if T::is_exact() {
            doc["objective_exact"] = json!(display_value(&sol.objective));
            doc["primal_exact"] = json!(sol.primal.iter().map(display_value).collect::<Vec<_>>());
            doc["dual_exact"] = json!(sol.dual.iter().map(display_value).collect::<Vec<_>>());
        }
    }
    Ok((format!("{}\n", serde_json::to_string_pretty(&doc)?), ExitCode::SUCCESS))
}

fn cmd_star_table(ms: &str, n: usize, d: &str) -> Result<(String, ExitCode)> {
    let ms = parse_sizes(ms)?;
    let d: f64 = parse_scalar(d)?;
    let rows = turnsearch::star::convergence_rows(&ms, n, d)?;
    Ok((star_convergence_csv(&rows), ExitCode::SUCCESS))
}

fn cmd_star_duals<T: Scalar>(m: usize, n: usize) -> Result<(String, ExitCode)> {
    let inst = StarInstance::new(m, int::<T>(1))?;
    let seq = star_dual_sequence(&inst, n)?;
    let mut text = format!(
        "# m={} M={} partial_sum={} partial_weighted_sum={}\n",
        m,
        display_value(&seq.big_m),
        display_value(&seq.partial_sum),
        display_value(&seq.partial_weighted_sum)
    );
    text.push_str(&dual_sequence_csv(&seq.values));
    Ok((text, ExitCode::SUCCESS))
}

//! `loglog` — batch verification driver and ad-hoc evaluator for the
//! log-log integral identity suite.
//!
//! Exit codes: 0 when every selected row passes (rows marked
//! paper-discrepancy-expected never affect the status), 1 on unexpected
//! failures, 2 on configuration errors.

// `!(t > 0.0)`-style guards intentionally treat NaN as invalid input.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use clap::{Args, Parser, Subcommand, ValueEnum};
use loglog_cli::output::{self, Row};
use loglog_cli::tasks::{all_tasks, find_task, RunCtx, Task};
use loglog_core::identity_catalog::IdentityReport;
use loglog_core::malmsten_engine::{
    kernel_integral, kernel_integrand, log_log, loglog_moment, master_f, master_integrand,
    render, MalmstenKernelSpec, RationalAngle,
};
use loglog_core::quadrature::integrate_unit_interval;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

#[derive(Parser)]
#[command(
    name = "loglog",
    version,
    about = "Verify and evaluate log-log integrals, Malmsten closed forms, and \
             Dirichlet functional equations",
    after_help = "The environment variable LOGLOG_SEED is reserved; the suite \
                  is deterministic and does not consume it."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run identity families over their default parameter grids
    Verify(VerifyArgs),
    /// Evaluate one object, printing its closed form and cross-checks
    Eval(EvalArgs),
    /// List the identity family ids accepted by --only
    List,
}

#[derive(Args)]
struct VerifyArgs {
    /// Verify every identity family
    #[arg(long, conflicts_with = "only")]
    all: bool,
    /// Comma-separated family ids (see `loglog list`)
    #[arg(long, value_delimiter = ',')]
    only: Vec<String>,
    /// Tolerance override applied to every selected row
    #[arg(long)]
    tol: Option<f64>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Quadrature evaluation budget per integral
    #[arg(long)]
    budget: Option<usize>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

fn parse_angle(text: &str) -> Result<RationalAngle, String> {
    let (k, l) = text
        .split_once('/')
        .ok_or_else(|| format!("angle must be k/l meaning k*pi/l, got '{text}'"))?;
    let k: u32 = k.trim().parse().map_err(|_| format!("bad numerator '{k}'"))?;
    let l: u32 = l.trim().parse().map_err(|_| format!("bad denominator '{l}'"))?;
    RationalAngle::new(k, l).map_err(|e| e.to_string())
}

#[derive(Args)]
struct EvalArgs {
    #[command(subcommand)]
    kind: EvalKind,
}

#[derive(Subcommand)]
enum EvalKind {
    /// Malmsten kernel integral ∫ lnln(1/y)·K(y) dy at angle kπ/l
    Malmsten {
        /// Angle as k/l, meaning a = kπ/l
        #[arg(long, value_parser = parse_angle)]
        angle: RationalAngle,
        /// Kernel derivative order (0 or 1)
        #[arg(long, default_value_t = 0)]
        order: u8,
    },
    /// Master formula F(a) at angle kπ/l
    #[command(name = "F", alias = "f")]
    MasterF {
        #[arg(long, value_parser = parse_angle)]
        angle: RationalAngle,
    },
    /// Log-log moment ∫ lnln(1/y)·y^{n−1} dy
    Moment {
        #[arg(long)]
        n: u32,
    },
    /// Eta functional-equation report row at s
    Eta {
        #[arg(long)]
        s: f64,
    },
    /// Zeta functional-equation report row at s
    Zeta {
        #[arg(long)]
        s: f64,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Eval(args) => cmd_eval(args),
        Command::List => {
            let mut body = String::new();
            for t in all_tasks() {
                body.push_str(&format!("{:<20} {}\n", t.id, t.description));
            }
            emit(&body);
            0
        }
    };
    std::process::exit(code);
}

/// Write to stdout, treating a closed pipe as a normal early exit.
fn emit(body: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(body.as_bytes()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("failed writing to stdout: {e}");
    }
}

fn cmd_verify(args: VerifyArgs) -> i32 {
    if !args.all && args.only.is_empty() {
        eprintln!("error: select identities with --all or --only <ids>");
        return 2;
    }
    if args.jobs == 0 {
        eprintln!("error: --jobs must be at least 1");
        return 2;
    }
    if let Some(t) = args.tol {
        if !(t > 0.0) {
            eprintln!("error: --tol must be positive");
            return 2;
        }
    }

    // unknown ids are rejected before any computation
    let selected: Vec<&'static Task> = if args.all {
        all_tasks().iter().collect()
    } else {
        let mut picked = Vec::new();
        for id in &args.only {
            match find_task(id) {
                Some(t) => picked.push(t),
                None => {
                    eprintln!("error: unknown identity id '{id}' (see `loglog list`)");
                    return 2;
                }
            }
        }
        picked
    };

    let ctx = RunCtx::new(args.budget, args.tol);
    let reports = run_selected(&selected, &ctx, args.jobs);
    let rows: Vec<Row> = reports.iter().map(Row::from).collect();

    let body = match args.format {
        Format::Text => output::render_text(&rows),
        Format::Json => output::render_json(&rows),
        Format::Csv => output::render_csv(&rows),
    };
    emit(&body);

    let unexpected_failures = reports
        .iter()
        .any(|r| !r.pass && !r.expected_discrepancy());
    if unexpected_failures {
        1
    } else {
        0
    }
}

/// Run tasks, possibly on several workers; the emitted row order is the
/// registry order regardless of scheduling.
fn run_selected(selected: &[&'static Task], ctx: &RunCtx, jobs: usize) -> Vec<IdentityReport> {
    if jobs <= 1 || selected.len() <= 1 {
        return selected.iter().flat_map(|t| (t.run)(ctx)).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Vec<IdentityReport>>>> =
        Mutex::new(vec![None; selected.len()]);
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(selected.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= selected.len() {
                    break;
                }
                let rows = (selected[i].run)(ctx);
                slots.lock().expect("collector lock")[i] = Some(rows);
            });
        }
    });
    slots
        .into_inner()
        .expect("collector lock")
        .into_iter()
        .flat_map(|slot| slot.expect("every task ran"))
        .collect()
}

fn print_eval_block(
    label: &str,
    expr: &loglog_core::malmsten_engine::ClosedFormExpr,
    quadrature: Result<f64, String>,
) -> i32 {
    let numeric = expr.numeric_eval();
    let mut body = format!("{label}\n");
    body.push_str(&format!("  closed form : {}\n", render(expr)));
    body.push_str(&format!("  numeric     : {numeric}\n"));
    match quadrature {
        Ok(q) => {
            body.push_str(&format!("  quadrature  : {q}\n"));
            body.push_str(&format!("  deviation   : {:.3e}\n", (numeric - q).abs()));
            emit(&body);
            0
        }
        Err(e) => {
            emit(&body);
            eprintln!("error: quadrature cross-check failed: {e}");
            1
        }
    }
}

fn cmd_eval(args: EvalArgs) -> i32 {
    let cfg = loglog_core::quadrature::QuadratureConfig::default();
    match args.kind {
        EvalKind::Malmsten { angle, order } => {
            let spec = match MalmstenKernelSpec::new(angle, order) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {e}");
                    return 2;
                }
            };
            let expr = kernel_integral(&spec);
            let quad = integrate_unit_interval(kernel_integrand(order, angle.radians()), &cfg)
                .map(|r| r.value)
                .map_err(|e| e.to_string());
            print_eval_block(
                &format!(
                    "malmsten kernel integral, a = {}pi/{}, order {order}",
                    angle.k(),
                    angle.l()
                ),
                &expr,
                quad,
            )
        }
        EvalKind::MasterF { angle } => {
            let expr = master_f(&angle);
            let quad = integrate_unit_interval(master_integrand(angle.radians()), &cfg)
                .map(|r| r.value)
                .map_err(|e| e.to_string());
            print_eval_block(
                &format!("master formula F(a), a = {}pi/{}", angle.k(), angle.l()),
                &expr,
                quad,
            )
        }
        EvalKind::Moment { n } => {
            if n == 0 {
                eprintln!("error: moment index starts at 1");
                return 2;
            }
            let expr = loglog_moment(n);
            let quad = integrate_unit_interval(|y| log_log(y) * y.powi(n as i32 - 1), &cfg)
                .map(|r| r.value)
                .map_err(|e| e.to_string());
            print_eval_block(&format!("log-log moment, n = {n}"), &expr, quad)
        }
        EvalKind::Eta { s } => print_report_row(
            loglog_core::dirichlet_functional::eta_functional_equation(s),
        ),
        EvalKind::Zeta { s } => print_report_row(
            loglog_core::dirichlet_functional::zeta_functional_equation(s),
        ),
    }
}

fn print_report_row(
    report: Result<IdentityReport, loglog_core::identity_catalog::CatalogError>,
) -> i32 {
    match report {
        Ok(r) => {
            let row = Row::from(&r);
            emit(&output::render_text(&[row]));
            if r.pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

//! The verification task registry: every identity family in the suite under
//! a stable id, each producing one report row per parameter point.

use loglog_core::dirichlet_functional::{
    eta_functional_equation, functional_equation_pair_one, functional_equation_pair_two,
    functional_equation_pair_two_printed, lambda_eta_residual, zeta_functional_equation,
    OddSeriesParams,
};
use loglog_core::identity_catalog::{self, IdentityReport};
use loglog_core::malmsten_engine::{
    digamma_integrand, kernel_integral, kernel_integrand, kummer_fourier_check, log_log,
    loglog_moment, master_f, master_integrand, named_example, power_moment, MalmstenKernelSpec,
    RationalAngle, NAMED_EXAMPLE_IDS,
};
use loglog_core::quadrature::{integrate_semi_infinite, integrate_unit_interval, QuadratureConfig};
use loglog_core::series_engine::{
    cos_ratio_pf, oscillatory_sine_sum, poisson_kernel_cos, poisson_kernel_sin, sin_ratio_pf,
    sine_product, sinh_ratio_pf, wallis_product, PartialFractionParams,
};
use loglog_core::special_functions::dirichlet_lambda;
use std::f64::consts::PI;

/// Shared run context.
pub struct RunCtx {
    pub quadrature: QuadratureConfig,
    /// When set, overrides every row's intrinsic tolerance.
    pub tolerance: Option<f64>,
}

impl RunCtx {
    pub fn new(budget: Option<usize>, tolerance: Option<f64>) -> RunCtx {
        let mut quadrature = QuadratureConfig::default();
        if let Some(b) = budget {
            quadrature.budget = b;
        }
        RunCtx {
            quadrature,
            tolerance,
        }
    }
}

/// One verification family.
pub struct Task {
    pub id: &'static str,
    pub description: &'static str,
    pub run: fn(&RunCtx) -> Vec<IdentityReport>,
}

fn rerate(mut report: IdentityReport, ctx: &RunCtx) -> IdentityReport {
    if let Some(tol) = ctx.tolerance {
        report.pass = report.abs_dev <= tol || report.rel_dev <= tol;
    }
    report
}

fn error_row(id: &str, error: impl std::fmt::Display) -> IdentityReport {
    IdentityReport::from_values(id, &[], f64::NAN, f64::NAN, 0.0)
        .failed(format!("evaluation error: {error}"))
}

fn catalog_task(id: &'static str, ctx: &RunCtx) -> Vec<IdentityReport> {
    let record = identity_catalog::find(id).expect("registered id");
    (record.default_grid)()
        .into_iter()
        .map(|point| match (record.run)(&point, &ctx.quadrature) {
            Ok(report) => rerate(report, ctx),
            Err(e) => error_row(id, e),
        })
        .collect()
}

fn run_legendre(ctx: &RunCtx) -> Vec<IdentityReport> {
    catalog_task("legendre_cosine", ctx)
}
fn run_fundamental(ctx: &RunCtx) -> Vec<IdentityReport> {
    catalog_task("fundamental", ctx)
}
fn run_mellin_damped(ctx: &RunCtx) -> Vec<IdentityReport> {
    catalog_task("mellin_damped", ctx)
}
fn run_mellin_limit(ctx: &RunCtx) -> Vec<IdentityReport> {
    catalog_task("mellin_limit", ctx)
}

const PAIR_GRID: [(u32, u32); 5] = [(1, 2), (1, 3), (2, 3), (1, 4), (3, 4)];

fn run_pair_one(ctx: &RunCtx) -> Vec<IdentityReport> {
    let mut rows = Vec::new();
    for (k, l) in PAIR_GRID {
        for s in [0.2, 0.4, 0.5, 0.6, 0.8] {
            let row = OddSeriesParams::new(k, l, s)
                .and_then(|p| functional_equation_pair_one(&p))
                .map(|r| rerate(r, ctx))
                .unwrap_or_else(|e| error_row("pair_one", e));
            rows.push(row);
        }
    }
    rows
}

fn run_pair_two(ctx: &RunCtx) -> Vec<IdentityReport> {
    let mut rows = Vec::new();
    for (k, l) in PAIR_GRID {
        for s in [0.3, 0.5, 0.7] {
            let row = OddSeriesParams::new(k, l, s)
                .and_then(|p| functional_equation_pair_two(&p))
                .map(|r| rerate(r, ctx))
                .unwrap_or_else(|e| error_row("pair_two", e));
            rows.push(row);
        }
    }
    rows
}

fn run_pair_two_printed(ctx: &RunCtx) -> Vec<IdentityReport> {
    let mut rows = Vec::new();
    for (k, l) in PAIR_GRID {
        for s in [0.3, 0.5, 0.7] {
            // The printed form never affects the exit status; its note keeps
            // the discrepancy marker even under a tolerance override.
            let row = OddSeriesParams::new(k, l, s)
                .and_then(|p| functional_equation_pair_two_printed(&p))
                .map(|r| rerate(r, ctx))
                .unwrap_or_else(|e| error_row("pair_two_printed", e));
            rows.push(row);
        }
    }
    rows
}

fn run_eta_fe(ctx: &RunCtx) -> Vec<IdentityReport> {
    [0.5, 2.0, 3.0, 4.0]
        .into_iter()
        .map(|s| {
            eta_functional_equation(s)
                .map(|r| rerate(r, ctx))
                .unwrap_or_else(|e| error_row("eta_fe", e))
        })
        .collect()
}

fn run_zeta_fe(ctx: &RunCtx) -> Vec<IdentityReport> {
    [1.5, 2.0, 3.0, 4.0]
        .into_iter()
        .map(|s| {
            zeta_functional_equation(s)
                .map(|r| rerate(r, ctx))
                .unwrap_or_else(|e| error_row("zeta_fe", e))
        })
        .collect()
}

fn run_lambda_eta(ctx: &RunCtx) -> Vec<IdentityReport> {
    [1.5, 2.0, 3.0, 4.0]
        .into_iter()
        .map(|s| {
            let row = match (dirichlet_lambda(s), lambda_eta_residual(s)) {
                (Ok(lam), Ok(resid)) => {
                    let rhs = lam + resid; // (2^s−1)/(2^s−2)·η(s)
                    IdentityReport::from_values("lambda_eta", &[("s", s)], lam, rhs, 1e-12)
                }
                (Err(e), _) => error_row("lambda_eta", e),
                (_, Err(e)) => error_row("lambda_eta", e),
            };
            rerate(row, ctx)
        })
        .collect()
}

fn run_moments(ctx: &RunCtx) -> Vec<IdentityReport> {
    (1u32..=8)
        .map(|n| {
            let quad = integrate_unit_interval(
                |y| log_log(y) * y.powi(n as i32 - 1),
                &ctx.quadrature,
            );
            let row = match quad {
                Ok(q) => IdentityReport::from_values(
                    "moments",
                    &[("n", n as f64)],
                    q.value,
                    loglog_moment(n).numeric_eval(),
                    1e-10,
                ),
                Err(e) => error_row("moments", e),
            };
            rerate(row, ctx)
        })
        .collect()
}

fn run_power_moment(ctx: &RunCtx) -> Vec<IdentityReport> {
    [(1.0, 3u32), (2.0, 1), (0.5, 2), (1.5, 2), (2.5, 4)]
        .into_iter()
        .map(|(s, n)| {
            // quadrature route under y = e^{−t}: ∫₀^∞ t^{s−1} e^{−nt} dt
            let quad = integrate_semi_infinite(
                |t| t.powf(s - 1.0) * (-(n as f64) * t).exp(),
                &ctx.quadrature,
            );
            let row = match (quad, power_moment(s, n)) {
                (Ok(q), Ok(closed)) => IdentityReport::from_values(
                    "power_moment",
                    &[("s", s), ("n", n as f64)],
                    q.value,
                    closed,
                    1e-10,
                ),
                (Err(e), _) => error_row("power_moment", e),
                (_, Err(e)) => error_row("power_moment", e),
            };
            rerate(row, ctx)
        })
        .collect()
}

fn run_digamma_integral(ctx: &RunCtx) -> Vec<IdentityReport> {
    [(0.0, 1.0), (2.0, 4.0), (0.5, 0.5), (1.5, 3.0), (0.0, 2.0)]
        .into_iter()
        .map(|(a, b)| {
            let quad = integrate_unit_interval(digamma_integrand(a, b), &ctx.quadrature);
            let closed =
                loglog_core::malmsten_engine::digamma_difference_integral(a, b);
            let row = match (quad, closed) {
                (Ok(q), Ok(c)) => IdentityReport::from_values(
                    "digamma_integral",
                    &[("a", a), ("b", b)],
                    q.value,
                    c,
                    1e-10,
                ),
                (Err(e), _) => error_row("digamma_integral", e),
                (_, Err(e)) => error_row("digamma_integral", e),
            };
            rerate(row, ctx)
        })
        .collect()
}

const ANGLE_GRID: [(u32, u32); 7] = [(1, 6), (1, 4), (1, 3), (1, 2), (2, 3), (3, 4), (5, 6)];

fn run_master_f(ctx: &RunCtx) -> Vec<IdentityReport> {
    ANGLE_GRID
        .into_iter()
        .map(|(k, l)| {
            let angle = RationalAngle::new(k, l).expect("grid angles valid");
            let quad = integrate_unit_interval(master_integrand(angle.radians()), &ctx.quadrature);
            let row = match quad {
                Ok(q) => IdentityReport::from_values(
                    "master_f",
                    &[("k", k as f64), ("l", l as f64)],
                    q.value,
                    master_f(&angle).numeric_eval(),
                    1e-8,
                ),
                Err(e) => error_row("master_f", e),
            };
            rerate(row, ctx)
        })
        .collect()
}

fn run_kernel_derivative(ctx: &RunCtx) -> Vec<IdentityReport> {
    ANGLE_GRID
        .into_iter()
        .map(|(k, l)| {
            let angle = RationalAngle::new(k, l).expect("grid angles valid");
            let spec = MalmstenKernelSpec::new(angle, 1).expect("order 1");
            let quad =
                integrate_unit_interval(kernel_integrand(1, angle.radians()), &ctx.quadrature);
            let row = match quad {
                Ok(q) => IdentityReport::from_values(
                    "kernel_derivative",
                    &[("k", k as f64), ("l", l as f64)],
                    q.value,
                    kernel_integral(&spec).numeric_eval(),
                    1e-7,
                ),
                Err(e) => error_row("kernel_derivative", e),
            };
            rerate(row, ctx)
        })
        .collect()
}

fn run_kummer(ctx: &RunCtx) -> Vec<IdentityReport> {
    [0.05, 0.1, 0.25, 1.0 / 3.0, 0.4]
        .into_iter()
        .map(|x| {
            kummer_fourier_check(x, 200)
                .map(|r| rerate(r, ctx))
                .unwrap_or_else(|e| error_row("kummer", e))
        })
        .collect()
}

fn run_named_examples(ctx: &RunCtx) -> Vec<IdentityReport> {
    NAMED_EXAMPLE_IDS
        .into_iter()
        .map(|id| match named_example(id, &ctx.quadrature) {
            Ok((_, _, report)) => rerate(report, ctx),
            Err(e) => error_row(&format!("named_{id}"), e),
        })
        .collect()
}

fn run_partial_fraction(ctx: &RunCtx) -> Vec<IdentityReport> {
    let n = 5_000;
    let mut rows = Vec::new();

    let p = PartialFractionParams {
        a: 1.0,
        b: 2.0,
        x: 0.3,
    };
    let direct = (p.a * p.x).sin() / (p.b * p.x).sin();
    let row = match sin_ratio_pf(&p, n) {
        Ok(r) => IdentityReport::from_values(
            "partial_fraction",
            &[("kind", 0.0), ("a", p.a), ("b", p.b), ("x", p.x)],
            r.value,
            direct,
            r.error_estimate,
        )
        .with_note("sin ratio; tolerance is the tail bound"),
        Err(e) => error_row("partial_fraction", e),
    };
    rows.push(rerate(row, ctx));

    let p = PartialFractionParams {
        a: 1.0,
        b: 1.0,
        x: 0.7,
    };
    let cot = p.x.cos() / p.x.sin();
    let row = match cos_ratio_pf(&p, n) {
        Ok(r) => IdentityReport::from_values(
            "partial_fraction",
            &[("kind", 1.0), ("a", p.a), ("b", p.b), ("x", p.x)],
            r.value,
            cot,
            r.error_estimate,
        )
        .with_note("cotangent expansion; tolerance is the tail bound"),
        Err(e) => error_row("partial_fraction", e),
    };
    rows.push(rerate(row, ctx));

    let (a, b, y) = (1.0f64, PI, 2.0f64);
    let direct = (a * y).sinh() / (b * y).sinh();
    let row = match sinh_ratio_pf(a, b, y, 20_000) {
        Ok(r) => IdentityReport::from_values(
            "partial_fraction",
            &[("kind", 2.0), ("a", a), ("b", b), ("y", y)],
            r.value,
            direct,
            r.error_estimate,
        )
        .with_note("sinh ratio; tolerance is the tail bound"),
        Err(e) => error_row("partial_fraction", e),
    };
    rows.push(rerate(row, ctx));
    rows
}

fn run_poisson_kernel(ctx: &RunCtx) -> Vec<IdentityReport> {
    let mut rows = Vec::new();
    for (y, phi) in [(0.5, PI / 3.0), (0.9, 1.0)] {
        let quad = 1.0 + 2.0 * y * phi.cos() + y * y;
        let n = ((1e-11 * (1.0 - y)).ln() / y.ln()).ceil() as usize;
        let row = match poisson_kernel_sin(y, phi, n) {
            Ok(r) => IdentityReport::from_values(
                "poisson_kernel",
                &[("kind", 0.0), ("y", y), ("phi", phi)],
                r.value,
                phi.sin() / quad,
                1e-10,
            ),
            Err(e) => error_row("poisson_kernel", e),
        };
        rows.push(rerate(row, ctx));
    }
    for (y, phi) in [(0.0, 2.2), (0.7, PI / 5.0)] {
        let quad = 1.0 + 2.0 * y * phi.cos() + y * y;
        let n = if y == 0.0 {
            4
        } else {
            ((1e-11 * (1.0 - y)).ln() / y.ln()).ceil() as usize
        };
        let row = match poisson_kernel_cos(y, phi, n) {
            Ok(r) => IdentityReport::from_values(
                "poisson_kernel",
                &[("kind", 1.0), ("y", y), ("phi", phi)],
                r.value,
                (1.0 + y * phi.cos()) / quad,
                1e-10,
            ),
            Err(e) => error_row("poisson_kernel", e),
        };
        rows.push(rerate(row, ctx));
    }
    rows
}

fn run_sawtooth(ctx: &RunCtx) -> Vec<IdentityReport> {
    [PI / 6.0, PI / 4.0, PI / 3.0, PI / 2.0, 2.0 * PI / 3.0]
        .into_iter()
        .map(|a| {
            // Σ (−1)^{n−1} sin(na)/n = −Σ sin(n(a+π))/n = a/2
            let row = match oscillatory_sine_sum(|n| 1.0 / n as f64, a + PI, 2_000) {
                Ok(r) => IdentityReport::from_values(
                    "sawtooth",
                    &[("a", a)],
                    -r.value,
                    a / 2.0,
                    1e-9,
                ),
                Err(e) => error_row("sawtooth", e),
            };
            rerate(row, ctx)
        })
        .collect()
}

fn run_products(ctx: &RunCtx) -> Vec<IdentityReport> {
    let mut rows = Vec::new();
    let row = IdentityReport::from_values(
        "products",
        &[("kind", 0.0), ("x", 1.0), ("factors", 1e4)],
        sine_product(1.0, 10_000),
        1.0f64.sin(),
        1e-4,
    )
    .with_note("sine product truncation converges like 1/K");
    rows.push(rerate(row, ctx));
    let row = IdentityReport::from_values(
        "products",
        &[("kind", 1.0), ("factors", 1e5)],
        wallis_product(100_000),
        PI / 2.0,
        4e-6,
    )
    .with_note("Wallis product truncation converges like 1/(4K)");
    rows.push(rerate(row, ctx));
    rows
}

/// Every task in a fixed, deterministic order.
pub fn all_tasks() -> &'static [Task] {
    static TASKS: [Task; 21] = [
        Task {
            id: "legendre_cosine",
            description: "cosine integral against (pi/2)e^{-n}",
            run: run_legendre,
        },
        Task {
            id: "fundamental",
            description: "sinh-ratio cosine transform against its closed form",
            run: run_fundamental,
        },
        Task {
            id: "mellin_damped",
            description: "damped Mellin cosine transform",
            run: run_mellin_damped,
        },
        Task {
            id: "mellin_limit",
            description: "undamped Mellin cosine limit by extrapolation",
            run: run_mellin_limit,
        },
        Task {
            id: "pair_one",
            description: "odd-lattice functional equation, alternating pair",
            run: run_pair_one,
        },
        Task {
            id: "pair_two",
            description: "odd-lattice functional equation, plain pair (coherent form)",
            run: run_pair_two,
        },
        Task {
            id: "pair_two_printed",
            description: "plain pair exactly as printed (telescoping left side)",
            run: run_pair_two_printed,
        },
        Task {
            id: "eta_fe",
            description: "eta functional equation",
            run: run_eta_fe,
        },
        Task {
            id: "zeta_fe",
            description: "zeta functional equation",
            run: run_zeta_fe,
        },
        Task {
            id: "lambda_eta",
            description: "lambda/eta relation closure",
            run: run_lambda_eta,
        },
        Task {
            id: "moments",
            description: "log-log moments against -(gamma+ln n)/n",
            run: run_moments,
        },
        Task {
            id: "power_moment",
            description: "power moments against Gamma(s)/n^s",
            run: run_power_moment,
        },
        Task {
            id: "digamma_integral",
            description: "digamma difference integral",
            run: run_digamma_integral,
        },
        Task {
            id: "master_f",
            description: "master formula F(a) against quadrature",
            run: run_master_f,
        },
        Task {
            id: "kernel_derivative",
            description: "a-derivative kernel closed form against quadrature",
            run: run_kernel_derivative,
        },
        Task {
            id: "kummer",
            description: "Kummer Fourier series against ln Gamma",
            run: run_kummer,
        },
        Task {
            id: "named_examples",
            description: "named integrals including printed-formula checks",
            run: run_named_examples,
        },
        Task {
            id: "partial_fraction",
            description: "partial-fraction expansions within tail bounds",
            run: run_partial_fraction,
        },
        Task {
            id: "poisson_kernel",
            description: "Poisson kernel expansions",
            run: run_poisson_kernel,
        },
        Task {
            id: "sawtooth",
            description: "sawtooth series a/2",
            run: run_sawtooth,
        },
        Task {
            id: "products",
            description: "sine and Wallis products",
            run: run_products,
        },
    ];
    &TASKS
}

/// Find a task by id.
pub fn find_task(id: &str) -> Option<&'static Task> {
    all_tasks().iter().find(|t| t.id == id)
}

//! `disq`: exact discriminants, certified real roots and the power integral
//! `∫ |f|^(-2/n)` from the command line.
//!
//! Machine output is JSON on stdout, diagnostics go to stderr. Exit status is
//! 0 on success, 1 on a domain error and 2 on a usage error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use disq::exact_poly::discriminant;
use disq::quadrature::{gaussian_check, integrate_power_with};
use disq::rational::{format_rational, sign, to_f64};
use disq::roots::{isolate, refine};
use disq::specfun::{beta, beta_identity_residual, constant_c_minus, constant_c_plus};
use disq::symbolic::{sym_discriminant_capped, DEFAULT_DEGREE_CAP};
use disq::verify::{
    explore_one, invariant_exponent, predicted_value, run_cubic_sweep, run_exploration, SweepConfig,
};
use disq::{Error, Polynomial, QuadratureOptions};

#[derive(Parser)]
#[command(
    name = "disq",
    version,
    about = "Discriminants and the integral of |f|^(-2/n)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SymFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Exact discriminant of a polynomial given highest coefficient first.
    Disc {
        #[arg(required = true, allow_negative_numbers = true)]
        coeffs: Vec<String>,
    },
    /// Discriminant of the generic degree-n polynomial in a0..an.
    Symdisc {
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: SymFormat,
        /// Largest degree accepted.
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        cap: usize,
    },
    /// Isolating intervals, multiplicities and refined real roots.
    Roots {
        #[arg(required = true, allow_negative_numbers = true)]
        coeffs: Vec<String>,
        #[arg(long, default_value_t = 1e-12)]
        eps: f64,
    },
    /// Integral of |f(x)|^(-2/n) over the real line.
    Integrate {
        #[arg(required = true, allow_negative_numbers = true)]
        coeffs: Vec<String>,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Integral of 1/(ax^2+bx+c) against 2*pi/sqrt(4ac-b^2).
    GaussianCheck {
        #[arg(allow_negative_numbers = true)]
        a: f64,
        #[arg(allow_negative_numbers = true)]
        b: f64,
        #[arg(allow_negative_numbers = true)]
        c: f64,
    },
    /// Beta-function constants of the cubic formulas and their identity.
    IdentityCheck {
        /// Also evaluate the Beta values by quadrature.
        #[arg(long)]
        quadrature: bool,
    },
    /// Random integer cubics: integral against the closed form.
    VerifyCubic {
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 9)]
        range: i64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, value_enum, default_value = "json")]
        format: SweepFormat,
    },
    /// Degree 4 or 5: the scale-free quantity I*|D|^(1/(n(n-1))) and its
    /// behaviour along random orbits.
    Explore {
        #[arg(long)]
        n: usize,
        /// Explore this polynomial instead of random draws.
        #[arg(allow_negative_numbers = true)]
        coeffs: Vec<String>,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        range: i64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Orbit size; 0 disables the orbit check.
        #[arg(long, default_value_t = 10)]
        orbit: usize,
    },
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ParseRational(_) | Error::Config(_) | Error::ToleranceOutOfRange(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type CmdResult = std::result::Result<String, Failure>;

fn poly(coeffs: &[String]) -> std::result::Result<Polynomial, Failure> {
    Ok(Polynomial::parse(coeffs)?)
}

fn json_line(v: Value) -> String {
    format!("{v}\n")
}

fn cmd_disc(coeffs: &[String]) -> CmdResult {
    let f = poly(coeffs)?;
    let d = discriminant(&f)?;
    Ok(json_line(
        json!({ "D": format_rational(&d), "sign": sign(&d) }),
    ))
}

fn cmd_symdisc(n: usize, format: SymFormat, cap: usize) -> CmdResult {
    let d = sym_discriminant_capped(n, cap)?;
    Ok(match format {
        SymFormat::Text => format!("{d}\n"),
        SymFormat::Json => json_line(json!({ "n": n, "terms": d.len(), "polynomial": d })),
    })
}

fn cmd_roots(coeffs: &[String], eps: f64) -> CmdResult {
    let f = poly(coeffs)?;
    let iso = isolate(&f)?;
    let (_, factors) = f.square_free_decomposition()?;
    let mut roots = Vec::with_capacity(iso.len());
    for (iv, &m) in iso.intervals.iter().zip(&iso.multiplicities) {
        let x = refine(&factors[m - 1], iv, eps)?;
        roots.push(json!({ "interval": iv, "multiplicity": m, "approx": x }));
    }
    Ok(json_line(json!({
        "count": iso.len(),
        "roots": roots,
        "multiplicity_flag": iso.multiplicity_flag,
    })))
}

fn cmd_integrate(coeffs: &[String], n: usize, tol: f64, opts: &QuadratureOptions) -> CmdResult {
    let f = poly(coeffs)?;
    let d = discriminant(&f)?;
    let res = integrate_power_with(&f, n, tol, opts)?;
    let mut out = json!({
        "value": res.value,
        "error_estimate": res.abs_error_estimate,
        "pieces": res.pieces,
        "levels_used": res.levels_used,
        "discriminant": format_rational(&d),
        "invariant": res.value * to_f64(&d).abs().powf(invariant_exponent(n)),
    });
    if n == 3 {
        if let Some(p) = predicted_value(sign(&d), to_f64(&d).abs()) {
            out["predicted"] = json!(p);
            out["rel_error"] = json!((res.value - p).abs() / p);
        }
    }
    Ok(json_line(out))
}

fn cmd_gaussian(a: f64, b: f64, c: f64) -> CmdResult {
    let g = gaussian_check(a, b, c)?;
    Ok(json_line(json!({
        "numeric": g.numeric,
        "closed_form": g.closed_form,
        "error_estimate": g.abs_error_estimate,
        "rel_error": (g.numeric - g.closed_form).abs() / g.closed_form,
    })))
}

fn cmd_identity(quadrature: bool) -> CmdResult {
    let third = 1.0 / 3.0;
    let mut out = json!({
        "beta_third_third": beta(third, third)?,
        "beta_half_sixth": beta(0.5, 1.0 / 6.0)?,
        "c_minus": constant_c_minus(),
        "c_plus": constant_c_plus(),
        "residual": beta_identity_residual(),
    });
    if quadrature {
        let tol = 1e-12;
        out["beta_third_third_quadrature"] =
            json!(disq::specfun::beta_by_integral(third, third, tol)?);
        out["beta_half_sixth_quadrature"] =
            json!(disq::specfun::beta_by_integral(0.5, 1.0 / 6.0, tol)?);
    }
    Ok(json_line(out))
}

fn cmd_verify_cubic(cfg: SweepConfig, format: SweepFormat, opts: &QuadratureOptions) -> CmdResult {
    let report = run_cubic_sweep(&cfg, opts)?;
    let s = &report.summary;
    eprintln!(
        "{} trials ({} skipped with D = 0): {} ok, {} divergent, {} tol_fail",
        s.count, s.skipped_degenerate, s.ok, s.divergent, s.tol_fail
    );
    Ok(match format {
        SweepFormat::Json => report.to_json_lines(),
        SweepFormat::Csv => report.to_csv(),
    })
}

fn cmd_explore(
    coeffs: &[String],
    cfg: SweepConfig,
    orbit: usize,
    opts: &QuadratureOptions,
) -> CmdResult {
    if !coeffs.is_empty() {
        let f = poly(coeffs)?;
        if f.degree() != cfg.n {
            return Err(Error::BadDegree {
                found: f.degree(),
                expected: format!("{} (the declared n)", cfg.n),
            }
            .into());
        }
        let record = explore_one(0, &f, cfg.n, orbit, cfg.seed, cfg.tol, opts)?;
        return Ok(json_line(json!(record)));
    }
    let report = run_exploration(&cfg, orbit, opts)?;
    let s = &report.summary;
    eprintln!(
        "{} trials: {} ok, {} divergent, {} tol_fail; orbit max deviation {:e}",
        s.count, s.ok, s.divergent, s.tol_fail, s.orbit_max_deviation
    );
    Ok(report.to_json_lines())
}

fn run(cli: Cli) -> CmdResult {
    let opts = QuadratureOptions::from_env()?;
    match cli.command {
        Command::Disc { coeffs } => cmd_disc(&coeffs),
        Command::Symdisc { n, format, cap } => cmd_symdisc(n, format, cap),
        Command::Roots { coeffs, eps } => cmd_roots(&coeffs, eps),
        Command::Integrate { coeffs, n, tol } => cmd_integrate(&coeffs, n, tol, &opts),
        Command::GaussianCheck { a, b, c } => cmd_gaussian(a, b, c),
        Command::IdentityCheck { quadrature } => cmd_identity(quadrature),
        Command::VerifyCubic {
            count,
            seed,
            range,
            tol,
            format,
        } => {
            let cfg = SweepConfig {
                count,
                seed,
                coeff_range: range,
                n: 3,
                tol,
            };
            cmd_verify_cubic(cfg, format, &opts)
        }
        Command::Explore {
            n,
            coeffs,
            count,
            seed,
            range,
            tol,
            orbit,
        } => {
            let cfg = SweepConfig {
                count,
                seed,
                coeff_range: range,
                n,
                tol,
            };
            cmd_explore(&coeffs, cfg, orbit, &opts)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

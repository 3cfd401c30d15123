//! End-to-end acceptance run. Prints one `[PASS]` / `[FAIL]` line per
//! criterion and exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use disq::exact_poly::{cubic_data, delta_squared, discriminant, resultant};
use disq::quadrature::{gaussian_check, integrate_power, QuadratureOptions};
use disq::rational::{pow, sign, to_f64};
use disq::roots::isolate;
use disq::specfun::{beta, beta_identity_residual, constant_c_minus, constant_c_plus};
use disq::symbolic::{compare_to_reference, evaluate, sym_discriminant};
use disq::verify::{explore_orbit, run_cubic_sweep, run_exploration, SweepConfig};
use disq::{Polynomial, SymPoly};

// mpmath, 40 digits (scripts/oracle_constants.py).
const C_MINUS: f64 = 9.179_724_222_343_157_249_479_165_033_852_946_15;
const C_PLUS: f64 = 15.899_748_752_569_049_615_823_205_496_835_948;
const I_X3_PLUS_X: f64 = 7.285_951_943_662_744_835_459_825_069_342_793_75;
const I_X3_MINUS_X: f64 = 12.619_638_947_929_088_350_575_171_711_452_647;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, ok: String, fail: String) -> Outcome {
    if cond {
        Ok(ok)
    } else {
        Err(fail)
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(d))
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    q(rng.gen_range(-20..=20), rng.gen_range(1..=9))
}

fn random_rational_cubic(rng: &mut ChaCha8Rng) -> Polynomial {
    loop {
        let c: Vec<BigRational> = (0..4).map(|_| random_rational(rng)).collect();
        if !c[0].is_zero() {
            return Polynomial::new(c).unwrap();
        }
    }
}

fn random_integer_poly(rng: &mut ChaCha8Rng, n: usize, range: i64) -> Polynomial {
    loop {
        let c: Vec<i64> = (0..=n).map(|_| rng.gen_range(-range..=range)).collect();
        if c[0] != 0 {
            return Polynomial::from_i64(&c).unwrap();
        }
    }
}

fn load_fixture(name: &str) -> SymPoly {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    serde_json::from_str(&text).unwrap_or_else(|e| panic!("{path}: {e}"))
}

fn cubic_sweep() -> Outcome {
    let start = Instant::now();
    let cfg = SweepConfig {
        count: 200,
        seed: 2024,
        coeff_range: 9,
        n: 3,
        tol: 1e-10,
    };
    let report = run_cubic_sweep(&cfg, &QuadratureOptions::default()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let s = &report.summary;
    let worst = report
        .records
        .iter()
        .filter_map(|r| r.rel_error)
        .fold(0.0, f64::max);
    let every_ok_within = report
        .records
        .iter()
        .filter(|r| r.status != disq::verify::Status::Divergent)
        .all(|r| r.rel_error.is_some_and(|e| e <= 1e-8));
    let both = s.negative_discriminant.trials > 0 && s.positive_discriminant.trials > 0;
    let msg = format!(
        "200 cubics, D<0: {}, D>0: {}, max rel error {worst:.2e}, {:.2}s",
        s.negative_discriminant.trials,
        s.positive_discriminant.trials,
        elapsed.as_secs_f64()
    );
    check(
        every_ok_within && both && elapsed <= Duration::from_secs(60),
        msg.clone(),
        msg,
    )
}

fn named_values() -> Outcome {
    let a = integrate_power(&Polynomial::from_i64(&[1, 0, 1, 0]).unwrap(), 3, 1e-12)
        .map_err(|e| e.to_string())?
        .value;
    let b = integrate_power(&Polynomial::from_i64(&[1, 0, -1, 0]).unwrap(), 3, 1e-12)
        .map_err(|e| e.to_string())?
        .value;
    let four_sixth = 4f64.powf(1.0 / 6.0);
    let errs = [
        rel(a, C_MINUS / four_sixth),
        rel(b, C_PLUS / four_sixth),
        rel(a, I_X3_PLUS_X),
        rel(b, I_X3_MINUS_X),
        rel(constant_c_minus(), C_MINUS),
        rel(constant_c_plus(), C_PLUS),
    ];
    let worst = errs.iter().copied().fold(0.0, f64::max);
    let msg = format!("I(x^3+x) = {a:.12}, I(x^3-x) = {b:.12}, worst rel {worst:.1e}");
    check(worst <= 1e-9, msg.clone(), msg)
}

fn symbolic_exactness() -> Outcome {
    let mut counts = Vec::new();
    for (n, file, terms) in [
        (3, "disc_n3.json", 5),
        (4, "disc_n4.json", 16),
        (5, "disc_n5.json", 59),
    ] {
        let computed = sym_discriminant(n).map_err(|e| e.to_string())?;
        let reference = load_fixture(file);
        let diff = compare_to_reference(&computed, &reference).map_err(|e| e.to_string())?;
        if !diff.is_empty() || computed.len() != terms {
            return Err(format!("n={n}: {} terms, diff:\n{diff}", computed.len()));
        }
        counts.push(computed.len());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 3..=5 {
        let sym = sym_discriminant(n).map_err(|e| e.to_string())?;
        for _ in 0..100 {
            let mut vals: Vec<BigRational> = (0..=n).map(|_| random_rational(&mut rng)).collect();
            if vals[0].is_zero() {
                vals[0] = BigRational::one();
            }
            let f = Polynomial::new(vals.clone()).unwrap();
            if evaluate(&sym, &vals).unwrap() != discriminant(&f).unwrap() {
                return Err(format!("n={n}: evaluation mismatch at {f}"));
            }
        }
    }
    Ok(format!(
        "term counts {counts:?} match the references, 300 evaluation points agree"
    ))
}

fn exact_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for i in 0..1000 {
        let f = random_rational_cubic(&mut rng);
        let d = discriminant(&f).unwrap();
        let a = f.leading().clone();
        let r = resultant(&f, &f.derivative()).unwrap();
        let cd = cubic_data(&f).unwrap();
        let a4 = &a * &a * &a * &a;
        let ok = &a * &d == -r
            && cd.quadratic_discriminant() == -(BigRational::from_integer(3.into()) * &d)
            && d == a4 * delta_squared(&f).unwrap();
        if !ok {
            return Err(format!("trial {i}: identity fails for {f}"));
        }
    }
    Ok("1000 rational cubics: aD = -R(f,f'), B^2-4AC = -3D, D = a^4 Delta^2".into())
}

fn beta_identity() -> Outcome {
    let res = beta_identity_residual();
    let half = beta(0.5, 0.5).map_err(|e| e.to_string())?;
    let pi_err = rel(half, std::f64::consts::PI);
    let msg = format!("residual {res:.1e}, B(1/2,1/2) rel error {pi_err:.1e}");
    check(res <= 1e-12 && pi_err <= 1e-13, msg.clone(), msg)
}

fn gaussian_baseline() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst = 0.0f64;
    let mut done = 0;
    while done < 100 {
        let a: f64 = rng.gen_range(0.1..10.0);
        let b: f64 = rng.gen_range(-10.0..10.0);
        let c: f64 = rng.gen_range(-10.0..10.0);
        if b * b - 4.0 * a * c >= -1e-3 {
            continue;
        }
        let g = gaussian_check(a, b, c).map_err(|e| e.to_string())?;
        worst = worst.max(rel(g.numeric, g.closed_form));
        done += 1;
    }
    let msg = format!("100 quadratics, max rel error {worst:.1e}");
    check(worst <= 1e-10, msg.clone(), msg)
}

fn root_count_dichotomy() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut three, mut one, mut done) = (0, 0, 0);
    while done < 500 {
        let f = random_rational_cubic(&mut rng);
        let s = sign(&discriminant(&f).unwrap());
        if s == 0 {
            continue;
        }
        let k = isolate(&f).map_err(|e| e.to_string())?.len();
        match (s, k) {
            (1, 3) => three += 1,
            (-1, 1) => one += 1,
            _ => return Err(format!("{f}: sign(D) = {s} but {k} intervals")),
        }
        done += 1;
    }
    Ok(format!(
        "500 cubics: {three} with D>0 and 3 roots, {one} with D<0 and 1 root"
    ))
}

fn covariance() -> Outcome {
    let tol = 1e-10;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst = 0.0f64;
    let mut trials = 0;
    while trials < 50 {
        let n = rng.gen_range(3..=5);
        let f = random_integer_poly(&mut rng, n, 6);
        let d = discriminant(&f).unwrap();
        if d.is_zero() || f.trailing().is_zero() {
            continue;
        }
        let base = integrate_power(&f, n, tol)
            .map_err(|e| format!("{f}: {e}"))?
            .value;
        let t = q(rng.gen_range(-5..=5), rng.gen_range(1..=3));
        let s = q(rng.gen_range(1..=5), rng.gen_range(1..=5));
        let lambda = q(rng.gen_range(1..=7), rng.gen_range(1..=7));
        let sf = to_f64(&s);
        let lf = to_f64(&lambda);
        let nn = n as f64;
        let cases = [
            (f.translate(&t), 1.0, BigRational::one()),
            (f.scale_x(&s), 1.0 / sf, pow(&s, n * (n - 1))),
            (
                f.scale(&lambda),
                lf.powf(-2.0 / nn),
                pow(&lambda, 2 * n - 2),
            ),
            (f.reverse(), 1.0, BigRational::one()),
        ];
        for (g, factor, d_factor) in cases {
            if discriminant(&g).unwrap() != &d * &d_factor {
                return Err(format!("{f}: discriminant covariance fails for {g}"));
            }
            let v = integrate_power(&g, n, tol)
                .map_err(|e| format!("{g}: {e}"))?
                .value;
            worst = worst.max(rel(v, base * factor));
        }
        trials += 1;
    }
    let msg = format!("50 trials x 4 transforms, max rel deviation {worst:.1e}");
    check(worst <= 2.0 * tol, msg.clone(), msg)
}

fn exploration() -> Outcome {
    let opts = QuadratureOptions::default();
    let mut worst = 0.0f64;
    let mut spreads = Vec::new();
    for n in [4, 5] {
        let cfg = SweepConfig {
            count: 12,
            seed: 90 + n as u64,
            coeff_range: 5,
            n,
            tol: 1e-10,
        };
        let report = run_exploration(&cfg, 10, &opts).map_err(|e| e.to_string())?;
        if report.summary.orbits_checked == 0 || !report.summary.orbits_passed {
            return Err(format!("n={n}: orbit check failed: {:?}", report.summary));
        }
        worst = worst.max(report.summary.orbit_max_deviation);
        for r in &report.summary.p_ranges {
            spreads.push(format!("n={n}/{}real:{:.3}", r.real_roots, r.spread));
        }
    }
    for (coeffs, n) in [
        (&[1i64, 0, 2, 0, 1][..], 4),
        (&[1, 0, -3, 1, 1][..], 4),
        (&[1, 0, 0, 0, 1, 0][..], 5),
    ] {
        let f = Polynomial::from_i64(coeffs).unwrap();
        let o = explore_orbit(&f, n, 10, 1, 1e-10, &opts).map_err(|e| e.to_string())?;
        if !o.passed {
            return Err(format!("{f}: orbit deviation {:.1e}", o.max_deviation));
        }
        worst = worst.max(o.max_deviation);
    }
    Ok(format!(
        "orbits of size 10 for n=4,5 within {worst:.1e}; spread (reported) {}",
        spreads.join(" ")
    ))
}

fn determinism() -> Outcome {
    let opts = QuadratureOptions::default();
    let cfg = SweepConfig::cubic(50, 77);
    let a = run_cubic_sweep(&cfg, &opts).unwrap().to_json_lines();
    let b = run_cubic_sweep(&cfg, &opts).unwrap().to_json_lines();
    let ecfg = SweepConfig {
        count: 6,
        seed: 77,
        coeff_range: 5,
        n: 5,
        tol: 1e-10,
    };
    let c = run_exploration(&ecfg, 4, &opts).unwrap().to_json_lines();
    let d = run_exploration(&ecfg, 4, &opts).unwrap().to_json_lines();
    check(
        a == b && c == d,
        format!(
            "equal seeds give identical output ({} + {} bytes)",
            a.len(),
            c.len()
        ),
        "outputs differ between identical runs".into(),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("cubic sweep reproduces the closed forms", cubic_sweep),
        ("named integrals match the oracle", named_values),
        ("symbolic discriminants are exact", symbolic_exactness),
        ("exact cubic identities", exact_identities),
        ("beta identity", beta_identity),
        ("gaussian baseline", gaussian_baseline),
        ("root-count dichotomy", root_count_dichotomy),
        ("covariance laws", covariance),
        ("exploration orbit invariance", exploration),
        ("determinism", determinism),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(msg)
        });
        match outcome {
            Ok(detail) => println!("[PASS] {:>2}. {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("[FAIL] {:>2}. {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

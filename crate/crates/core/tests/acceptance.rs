//! Acceptance suite: one `PASS`/`FAIL` line per criterion. Each criterion
//! runs the library check from `reproduce` together with independent
//! oracles computed here, and all comparisons are exact.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use superweyl::classification::separation_pair;
use superweyl::exactmath::Rational;
use superweyl::groupoid::{Kappa, Point};
use superweyl::invariants::{b_l, fingerprint, logderivative_coefficients, q_l};
use superweyl::reproduce::{run_criterion, CRITERIA};
use superweyl::special_cases::{gens_11, line_orbit_minus_half, trig_power_sum, TrigParams};

const SEED: u64 = 0;

fn k(s: &str) -> Kappa {
    s.parse().unwrap()
}

fn pt(s: &str) -> Point {
    s.parse().unwrap()
}

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

/// `x^2 - x + 1/6`.
fn bernoulli2(x: &Rational) -> Rational {
    x * x - x + r("1/6")
}

/// Oracles for each criterion, on top of the library checks.
fn oracle(id: u8) -> Vec<String> {
    let mut failures = Vec::new();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            failures.push(what.to_string());
        }
    };
    match id {
        1 => {
            // q_1 = x^2 - (x - kappa)^2 + (y + 1)^2 - y^2 on integers.
            let q1 = |x: i64, y: i64, kappa: i64| {
                x.pow(2) - (x - kappa).pow(2) + (y + 1).pow(2) - y.pow(2)
            };
            check(q1(3, 3, 2) == 15 && q1(4, 1, 2) == 15, "integer q_1 oracle");
            let kappa = k("2");
            for p in [pt("x=3;y=3"), pt("x=4;y=1")] {
                check(q_l(&p, &kappa, 1) == r("15"), "q_1 = 15");
                // u = x - 5/2, v = y/2 - 1/2; b_2 = B_2(u + 1/2) + 2 B_2(v + 1/2)
                let u = &p.x()[0] - r("5/2");
                let v = &p.y()[0] / &r("2") - r("1/2");
                let hand = bernoulli2(&(&u + r("1/2"))) + r("2") * bernoulli2(&(&v + r("1/2")));
                check(hand == r("2"), "hand b_2 oracle");
                check(
                    b_l(&p.to_uv(&kappa), &kappa, 2) == hand,
                    "b_2 matches hand oracle",
                );
            }
        }
        4 => {
            // kappa sum x^l + sum y^l = -2/3 * 3 + 2 for every l.
            check(r("-2/3") * r("3") + r("2") == r("0"), "power-sum oracle");
        }
        5 => {
            // u = x - 3/2, v = y - 1/2 at kappa = 1.
            let i3 = |u: Rational, v: Rational| &u * ((&u - &v) * (&u - &v) - r("1"));
            check(
                i3(r("7/2"), r("-1/2")) == r("105/2"),
                "I_3 hand oracle at (7/2, -1/2)",
            );
            check(
                i3(r("-1/2"), r("7/2")) == r("-15/2"),
                "I_3 hand oracle at (-1/2, 7/2)",
            );
            let kappa = k("1");
            let cert = separation_pair(&kappa, 1, 1, &r("5"), &r("0")).unwrap();
            check(
                cert.pair_a == pt("x=5;y=0") && cert.pair_b == pt("x=1;y=4"),
                "pair points",
            );
            check(
                gens_11(&kappa, &cert.pair_a).unwrap()[2] == r("105/2"),
                "I_3 on pair_a",
            );
        }
        8 => {
            // phi'/phi at (3;3), kappa = 2: 1/(t-3) - 1/(t-1) + 1/(t-4) - 1/(t-3)
            // = sum_k (4^k - 1) t^{-k-1}, so t^-2 holds 3 = n kappa + m and t^-3 holds 15 = q_1.
            let c = logderivative_coefficients(&pt("x=3;y=3"), &k("2"), 3);
            check(c == vec![r("3"), r("15"), r("63")], "series of (3;3)");
            check(
                c[0] != q_l(&pt("x=3;y=3"), &k("2"), 1),
                "q_1 is not the t^-2 coefficient",
            );
        }
        10 => {
            let kappa = k("-1/2");
            let print = |a: &str| {
                let (p, _) = line_orbit_minus_half(0, &r(a), false);
                fingerprint(&p.to_xy(&kappa), &kappa, 5).values
            };
            check(
                print("0") != print("1/5"),
                "fingerprints at a = 0 and a = 1/5 differ",
            );
        }
        12 => {
            let p = TrigParams::new(r("4"), r("2"), 1, 1).unwrap();
            // (1 - 4)/(1 - 2) = 3
            check(
                trig_power_sum(&[r("1")], &[r("1")], &p, 1) == Ok(r("4")),
                "1 + 3 * 1",
            );
        }
        _ => {}
    }
    failures
}

fn time_limit(id: u8) -> Option<Duration> {
    match id {
        2 => Some(Duration::from_secs(5)),
        6 => Some(Duration::from_secs(10)),
        _ => None,
    }
}

fn main() -> ExitCode {
    let started = Instant::now();
    let mut failed = 0;
    for (id, name) in CRITERIA {
        let t0 = Instant::now();
        let report = run_criterion(id, SEED).expect("known criterion");
        let elapsed = t0.elapsed();
        let mut failures = report.failures;
        failures.extend(oracle(id));
        if let Some(limit) = time_limit(id) {
            if elapsed > limit {
                failures.push(format!("took {elapsed:?}, limit {limit:?}"));
            }
        }
        let status = if failures.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {id:>2}: {name} ({:.2}s)",
            elapsed.as_secs_f64()
        );
        for f in &failures {
            println!("     {f}");
        }
        failed += !failures.is_empty() as usize;
    }
    println!(
        "{} of {} criteria passed in {:.2}s",
        CRITERIA.len() - failed,
        CRITERIA.len(),
        started.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

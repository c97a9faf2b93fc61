//! The full catalogue of reference checks, each reduced to exact equalities
//! and reported as pass or fail.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::classification::{
    infinite_orbit_family, reduce_to_minimal, separation_pair, zero_system_witness,
};
use crate::error::Error;
use crate::exactmath::{bernoulli_poly, BernoulliTable, Rational, UniPoly, VarSpace};
use crate::groupoid::{all_moves, orbit, raise_moves, Kappa, Point};
use crate::invariants::{
    are_equivalent, b_l, b_l_with, default_fingerprint_len, fingerprint, is_quasi_invariant,
    logderivative_coefficients, p_l, parse_terms, q_l, q_l_poly_uv,
};
use crate::special_cases::{
    gens_11, line_orbit_minus_half, on_minus_half_line, ratio_criterion_minus1,
    ratio_criterion_minus_half, trig_finite_generation, trig_power_sum, TrigParams,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub id: u8,
    pub name: String,
    pub pass: bool,
    /// Failed checks, in the order they were made.
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReproduceReport {
    pub seed: u64,
    pub criteria: Vec<CriterionReport>,
    pub all_pass: bool,
}

impl ReproduceReport {
    /// One `PASS`/`FAIL` line per criterion.
    pub fn table(&self) -> String {
        let mut out = String::new();
        for c in &self.criteria {
            let status = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {:>2} {}\n", c.id, c.name));
            for f in &c.failures {
                out.push_str(&format!("        {f}\n"));
            }
        }
        out
    }
}

struct Checker {
    failures: Vec<String>,
}

impl Checker {
    fn new() -> Self {
        Checker {
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self, id: u8, name: &str) -> CriterionReport {
        CriterionReport {
            id,
            name: name.into(),
            pass: self.failures.is_empty(),
            failures: self.failures,
        }
    }
}

fn k(s: &str) -> Kappa {
    s.parse().expect("valid kappa literal")
}

fn pt(s: &str) -> Point {
    s.parse().expect("valid point literal")
}

fn r(s: &str) -> Rational {
    s.parse().expect("valid rational literal")
}

fn rng_for(seed: u64, id: u8) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(
        seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
            .wrapping_add(id as u64),
    )
}

pub const CRITERIA: [(u8, &str); 12] = [
    (1, "two-point orbit"),
    (2, "orbit size bound"),
    (3, "infinite orbit"),
    (4, "zero-system witness"),
    (5, "separation failure and rescue"),
    (6, "quasi-invariance"),
    (7, "Bernoulli identity and b_l constancy"),
    (8, "generating function alignment"),
    (9, "confluence"),
    (10, "kappa = -1/2 lines"),
    (11, "criterion agreement"),
    (12, "trigonometric conditions"),
];

/// Runs one criterion; `None` for an unknown id.
pub fn run_criterion(id: u8, seed: u64) -> Option<CriterionReport> {
    let name = CRITERIA.iter().find(|(i, _)| *i == id)?.1;
    let mut c = Checker::new();
    match id {
        1 => two_point_orbit(&mut c),
        2 => orbit_bound(&mut c, seed),
        3 => infinite_orbit(&mut c),
        4 => zero_system(&mut c),
        5 => separation(&mut c),
        6 => quasi_invariance(&mut c),
        7 => bernoulli(&mut c, seed),
        8 => generating_function(&mut c, seed),
        9 => confluence(&mut c, seed),
        10 => minus_half_lines(&mut c),
        11 => criterion_agreement(&mut c, seed),
        12 => trig(&mut c),
        _ => unreachable!(),
    }
    Some(c.finish(id, name))
}

pub fn reproduce_all(seed: u64) -> ReproduceReport {
    let criteria: Vec<CriterionReport> = std::thread::scope(|s| {
        let handles: Vec<_> = CRITERIA
            .iter()
            .map(|&(id, _)| s.spawn(move || run_criterion(id, seed).expect("known id")))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("criterion thread"))
            .collect()
    });
    let all_pass = criteria.iter().all(|c| c.pass);
    ReproduceReport {
        seed,
        criteria,
        all_pass,
    }
}

fn two_point_orbit(c: &mut Checker) {
    let kappa = k("2");
    let o = orbit(&pt("x=3;y=3"), &kappa, 3);
    let want = [pt("x=3;y=3"), pt("x=4;y=1")];
    c.check(o.complete, || "orbit not complete".into());
    c.check(o.points.iter().eq(want.iter()), || {
        format!("orbit is {:?}", o.points)
    });
    for p in &want {
        let q1 = q_l(p, &kappa, 1);
        c.check(q1 == r("15"), || format!("q_1({p}) = {q1}"));
        let b2 = b_l(&p.to_uv(&kappa), &kappa, 2);
        c.check(b2 == r("2"), || format!("b_2({p}) = {b2}"));
    }
}

fn bound_seeds(seed: u64) -> Vec<Point> {
    let mut rng = rng_for(seed, 2);
    (0..200)
        .map(|_| {
            let mut d = || rng.gen_range(-5i64..=5);
            Point::from_ints(&[d(), d()], &[d(), d()])
        })
        .collect()
}

fn orbit_bound(c: &mut Checker, seed: u64) {
    let kappa = k("3");
    for s in bound_seeds(seed) {
        let o = orbit(&s, &kappa, 25);
        c.check(o.complete && o.len() <= 24, || {
            format!("seed {s}: {} points, complete={}", o.len(), o.complete)
        });
    }
}

fn infinite_orbit(c: &mut Checker) {
    let kappa = k("-1");
    let o = orbit(&pt("x=1/3;y=1/3"), &kappa, 1000);
    c.check(!o.complete && o.len() == 1000, || {
        format!("{} points, complete={}", o.len(), o.complete)
    });
    let red = reduce_to_minimal(&pt("x=1/3;y=1/3"), &kappa, 100);
    c.check(
        red == Err(Error::StepLimitExceeded { max_steps: 100 }),
        || format!("reduction gave {red:?}"),
    );
    match infinite_orbit_family(&kappa, 1, 1, -5, 5) {
        Ok(fam) => {
            c.check(fam.verified && fam.links.len() == 10, || {
                format!("{} links verified", fam.links.len())
            });
            for (l, w) in &fam.witnesses {
                c.check(*w == Point::from_ints(&[*l], &[*l]), || {
                    format!("witness {l} is {w}")
                });
            }
        }
        Err(e) => c.check(false, || format!("family: {e}")),
    }
}

fn zero_system(c: &mut Checker) {
    let kappa = k("-2/3");
    match zero_system_witness(&kappa, 3, 2) {
        Ok(Some(w)) => {
            c.check(w == pt("x=1,1,1;y=1,1"), || format!("witness {w}"));
            for l in 1..=5 {
                let v = p_l(&w, &kappa, l);
                c.check(v.is_zero(), || format!("p_{l} = {v}"));
            }
        }
        other => c.check(false, || format!("witness: {other:?}")),
    }
}

fn separation(c: &mut Checker) {
    let kappa = k("1");
    let cert = match separation_pair(&kappa, 1, 1, &r("5"), &r("0")) {
        Ok(cert) => cert,
        Err(e) => return c.check(false, || format!("separation_pair: {e}")),
    };
    c.check(cert.is_valid() && cert.distinct_orbits, || {
        format!("certificate invalid: {cert:?}")
    });
    c.check(
        cert.a_orbit_size == 1
            && cert.b_orbit_size == 1
            && cert.a_orbit_complete
            && cert.b_orbit_complete,
        || {
            format!(
                "orbit sizes {} and {}",
                cert.a_orbit_size, cert.b_orbit_size
            )
        },
    );
    let (fa, fb) = (
        fingerprint(&cert.pair_a, &kappa, 10),
        fingerprint(&cert.pair_b, &kappa, 10),
    );
    c.check(fa == fb, || {
        format!("fingerprints differ: {:?} vs {:?}", fa.values, fb.values)
    });
    let i3 = |p: &Point| gens_11(&kappa, p).map(|g| g[2].clone());
    let (ia, ib) = (i3(&cert.pair_a), i3(&cert.pair_b));
    c.check(ia == Ok(r("105/2")) && ib == Ok(r("-15/2")), || {
        format!("I_3 = {ia:?}, {ib:?}")
    });
}

fn quasi_invariance(c: &mut Checker) {
    for (n, m) in [(1, 1), (2, 1), (2, 2)] {
        for kappa in ["2", "-1", "1/2", "-2/3"] {
            let kappa = k(kappa);
            for l in 1..=4 {
                let q = q_l_poly_uv(VarSpace::new(n, m), &kappa, l);
                let ok = is_quasi_invariant(&q, n, m, &kappa).map(|rep| rep.invariant);
                c.check(ok == Ok(true), || {
                    format!("q_{l} at ({n},{m}), kappa={kappa}: {ok:?}")
                });
            }
        }
    }
    let f = parse_terms(
        r#"[{"coeff":"1","exps":{"u1":1}},{"coeff":"2","exps":{"v1":1}}]"#,
        1,
        1,
    )
    .expect("valid terms");
    match is_quasi_invariant(&f, 1, 1, &k("2")) {
        Ok(rep) => c.check(
            !rep.invariant && rep.constant_residual() == Some(r("-1")),
            || format!("u1+2v1 report {rep:?}"),
        ),
        Err(e) => c.check(false, || format!("u1+2v1: {e}")),
    }
}

fn bernoulli(c: &mut Checker, seed: u64) {
    for l in 1..=12usize {
        let b = bernoulli_poly(l);
        let diff = &b.shift(&Rational::one()) - &b;
        let mut want = vec![Rational::zero(); l];
        want[l - 1] = Rational::from_integer(l as i64);
        c.check(diff == UniPoly::from_coeffs(want), || {
            format!("B_{l}(x+1) - B_{l}(x) = {diff}")
        });
    }
    let kappa = k("3");
    let table = BernoulliTable::new(4);
    for s in bound_seeds(seed) {
        let o = orbit(&s, &kappa, 25);
        for l in 1..=4 {
            let mut values = o
                .points
                .iter()
                .map(|p| b_l_with(&table, &p.to_uv(&kappa), &kappa, l));
            let first = values.next().expect("orbit is nonempty");
            c.check(values.all(|v| v == first), || {
                format!("b_{l} varies on the orbit of {s}")
            });
        }
    }
}

fn random_point(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Point {
    let mut d = || Rational::frac(rng.gen_range(-9..=9), rng.gen_range(1..=4));
    Point::new((0..n).map(|_| d()).collect(), (0..m).map(|_| d()).collect())
}

fn generating_function(c: &mut Checker, seed: u64) {
    let mut rng = rng_for(seed, 8);
    let kappas = ["2", "-1", "1/2", "-2/3", "5/3"];
    let mut printed_mismatch = false;
    for _ in 0..20 {
        let (n, m) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let kappa = k(kappas[rng.gen_range(0..kappas.len())]);
        let p = random_point(&mut rng, n, m);
        let coeffs = logderivative_coefficients(&p, &kappa, 7);
        let lead =
            Rational::from_integer(n as i64) * kappa.value() + Rational::from_integer(m as i64);
        c.check(coeffs[0] == lead, || {
            format!("{p}: t^-2 coefficient {} != {lead}", coeffs[0])
        });
        for l in 1..=6u32 {
            let q = q_l(&p, &kappa, l);
            c.check(coeffs[l as usize] == q, || {
                format!("{p}: t^-{} coefficient != q_{l}", l + 2)
            });
        }
        // The expansion written as sum_{l >= 1} q_l t^{-l-1} would put q_1 at t^-2.
        printed_mismatch |= coeffs[0] != q_l(&p, &kappa, 1);
    }
    c.check(printed_mismatch, || {
        "q_1 matched the t^-2 coefficient on every sample".into()
    });
}

/// Up to six raises chosen at random.
fn random_raises(rng: &mut ChaCha8Rng, start: &Point, kappa: &Kappa) -> Point {
    let mut p = start.clone();
    for _ in 0..rng.gen_range(1..=6) {
        let moves = raise_moves(&p, kappa);
        if moves.is_empty() {
            break;
        }
        p = moves[rng.gen_range(0..moves.len())].to.clone();
    }
    p
}

fn confluence(c: &mut Checker, seed: u64) {
    let kappa = k("5/3");
    let mut rng = rng_for(seed, 9);
    let seeds: Vec<Point> = (0..50)
        .map(|_| {
            let (a, b) = (rng.gen_range(-4i64..=4), rng.gen_range(-4i64..=4));
            let y2 = if rng.gen_bool(0.5) {
                b
            } else {
                rng.gen_range(-4i64..=4)
            };
            Point::from_ints(&[a, b], &[a, y2])
        })
        .collect();
    for s in &seeds {
        let one = random_raises(&mut rng, s, &kappa);
        let two = random_raises(&mut rng, s, &kappa);
        let minimal = |p: &Point| reduce_to_minimal(p, &kappa, 1000).map(|red| red.minimal);
        let (ra, rb) = (minimal(&one), minimal(&two));
        c.check(ra.is_ok() && ra == rb, || {
            format!("{s}: {one} and {two} reduce to {ra:?} and {rb:?}")
        });
    }
    let orbits: Vec<Vec<Point>> = seeds
        .iter()
        .map(|s| orbit(s, &kappa, 25).points.into_iter().collect())
        .collect();
    let mut equivalent_pairs = 0;
    for _ in 0..100 {
        let i = rng.gen_range(0..orbits.len());
        let j = if rng.gen_bool(0.5) {
            i
        } else {
            rng.gen_range(0..orbits.len())
        };
        let a = &orbits[i][rng.gen_range(0..orbits[i].len())];
        let b = &orbits[j][rng.gen_range(0..orbits[j].len())];
        if are_equivalent(a, b, &kappa)
            .map(|cert| cert.equal)
            .unwrap_or(false)
        {
            equivalent_pairs += 1;
            let minimal = |p: &Point| reduce_to_minimal(p, &kappa, 1000).map(|red| red.minimal);
            let (ra, rb) = (minimal(a), minimal(b));
            c.check(ra.is_ok() && ra == rb, || {
                format!("equivalent {a} and {b} reduce to {ra:?} and {rb:?}")
            });
        }
    }
    c.check(equivalent_pairs > 0, || {
        "no equivalent pairs sampled".into()
    });
}

fn minus_half_lines(c: &mut Checker) {
    let kappa = k("-1/2");
    let len = default_fingerprint_len(2, 1);
    let mut per_a = Vec::new();
    for a in [r("0"), r("1/5")] {
        let mut prints = Vec::new();
        for l in -3..=3 {
            for second in [false, true] {
                let (p, q) = line_orbit_minus_half(l, &a, second);
                c.check(
                    on_minus_half_line(&p, false) && on_minus_half_line(&q, true),
                    || format!("l={l}, a={a}: {p} / {q} off the lines"),
                );
                let (xp, xq) = (p.to_xy(&kappa), q.to_xy(&kappa));
                c.check(raise_moves(&xp, &kappa).iter().any(|e| e.to == xq), || {
                    format!("l={l}, a={a}: {xp} and {xq} not one raise apart")
                });
                prints.push(fingerprint(&xp, &kappa, len));
                prints.push(fingerprint(&xq, &kappa, len));
            }
        }
        c.check(prints.windows(2).all(|w| w[0] == w[1]), || {
            format!("a={a}: fingerprint varies with l")
        });
        per_a.push(prints[0].values.clone());
    }
    c.check(per_a[0] != per_a[1], || {
        format!("fingerprints for a=0 and a=1/5 coincide: {:?}", per_a[0])
    });
}

/// Half the time a point and a random walk from it, otherwise two
/// independent points. Coordinates are halves in `[-3/2, 3/2]`, so
/// coincidences are frequent.
fn random_pair(rng: &mut ChaCha8Rng, kappa: &Kappa) -> (Point, Point) {
    let (n, m) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
    let point = |rng: &mut ChaCha8Rng| {
        let mut d = || Rational::frac(rng.gen_range(-3..=3), 2);
        Point::new((0..n).map(|_| d()).collect(), (0..m).map(|_| d()).collect())
    };
    let a = point(rng);
    if rng.gen_bool(0.5) {
        let mut b = a.clone();
        for _ in 0..rng.gen_range(1..=4) {
            let moves = all_moves(&b, kappa);
            if moves.is_empty() {
                break;
            }
            b = moves[rng.gen_range(0..moves.len())].to.clone();
        }
        (a, b)
    } else {
        (a, point(rng))
    }
}

fn criterion_agreement(c: &mut Checker, seed: u64) {
    type Criterion = fn(&Point, &Point) -> crate::error::Result<bool>;
    let cases: [(&str, Criterion, u8); 2] = [
        ("-1", ratio_criterion_minus1, 0),
        ("-1/2", ratio_criterion_minus_half, 1),
    ];
    for (kappa, criterion, salt) in cases {
        let kappa = k(kappa);
        let mut rng = rng_for(seed.wrapping_add(salt as u64), 11);
        for _ in 0..200 {
            let (a, b) = random_pair(&mut rng, &kappa);
            let want = are_equivalent(&a, &b, &kappa).map(|cert| cert.equal);
            let got = criterion(&a, &b);
            c.check(want.is_ok() && got == want, || {
                format!("kappa={kappa}: {a} vs {b}: {got:?} != {want:?}")
            });
        }
    }
}

fn trig(c: &mut Checker) {
    let params = |q: &str, t: &str, n, m| TrigParams::new(r(q), r(t), n, m).expect("nonzero q, t");
    for (q, t, n, m, want) in [
        ("2", "1/2", 1, 1, false),
        ("1/4", "2", 2, 1, false),
        ("2", "3", 1, 1, true),
    ] {
        let got = trig_finite_generation(&params(q, t, n, m));
        c.check(got == want, || {
            format!("finite generation at q={q}, t={t}, ({n},{m}) = {got}")
        });
    }
    let z = [r("1"), r("2/3")];
    let w = [r("5")];
    let got = trig_power_sum(&z, &w, &params("3", "3", 2, 1), 1);
    c.check(got == Ok(r("20/3")), || format!("q = t: {got:?}"));
    let got = trig_power_sum(&z, &w, &params("3", "1", 2, 1), 1);
    c.check(got == Err(Error::DegenerateDenominator), || {
        format!("t = 1: {got:?}")
    });
    let got = trig_power_sum(&z, &w, &params("4", "2", 2, 1), 1);
    c.check(got == Ok(r("5/3") + r("15")), || {
        format!("q = 4, t = 2: {got:?}")
    });
}

//! Special parameters, minimal pairs, and constructive witnesses for the
//! three phenomena that distinguish special `kappa`: infinite orbits,
//! nonzero solutions of the power-sum system, and equivalent but distinct
//! minimal pairs.

use std::fmt;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::groupoid::{default_cap, lower_moves, orbit, path_within, Kappa, Point};
use crate::invariants::{are_equivalent, p_l};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KappaTag {
    NonSpecial,
    PositiveSpecial,
    NegativeSpecial,
}

/// `kappa = ±p/q` in lowest terms with `p <= m`, `q <= n` is special.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KappaClass {
    pub tag: KappaTag,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub q: Option<u64>,
}

impl KappaClass {
    pub fn non_special() -> Self {
        KappaClass {
            tag: KappaTag::NonSpecial,
            p: None,
            q: None,
        }
    }

    pub fn is_special(&self) -> bool {
        self.tag != KappaTag::NonSpecial
    }

    pub fn is_negative_special(&self) -> bool {
        self.tag == KappaTag::NegativeSpecial
    }

    pub fn is_positive_special(&self) -> bool {
        self.tag == KappaTag::PositiveSpecial
    }

    /// `(p, q)` when special.
    pub fn pq(&self) -> Option<(usize, usize)> {
        Some((self.p? as usize, self.q? as usize))
    }
}

impl fmt::Display for KappaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pq() {
            Some((p, q)) => write!(f, "{:?}({p},{q})", self.tag),
            None => write!(f, "{:?}", self.tag),
        }
    }
}

/// The reduced fraction is the one to test: if any `p'/q'` with `p' <= m`,
/// `q' <= n` represents `|kappa|`, the reduced `p/q` divides it and fits too.
pub fn classify_kappa(kappa: &Kappa, n: usize, m: usize) -> KappaClass {
    let k = kappa.value();
    let p = k.numer().magnitude().to_u64();
    let q = k.denom().to_u64();
    match (p, q) {
        (Some(p), Some(q)) if p as u128 <= m as u128 && q as u128 <= n as u128 => KappaClass {
            tag: if k.is_negative() {
                KappaTag::NegativeSpecial
            } else {
                KappaTag::PositiveSpecial
            },
            p: Some(p),
            q: Some(q),
        },
        _ => KappaClass::non_special(),
    }
}

/// No `x_i = y_p + kappa + 1`, i.e. no lower move applies.
pub fn is_minimal(p: &Point, kappa: &Kappa) -> bool {
    lower_moves(p, kappa).is_empty()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reduction {
    pub minimal: Point,
    pub steps: usize,
}

/// Applies lower moves until the point is minimal, always at the smallest
/// matched `x` value (the matched `y` is then `x - kappa - 1`).
pub fn reduce_to_minimal(p: &Point, kappa: &Kappa, max_steps: usize) -> Result<Reduction> {
    let mut cur = p.clone();
    let mut steps = 0;
    loop {
        // lower_moves is sorted by witness, which is increasing in the matched x
        let Some(first) = lower_moves(&cur, kappa).into_iter().next() else {
            return Ok(Reduction {
                minimal: cur,
                steps,
            });
        };
        if steps == max_steps {
            return Err(Error::StepLimitExceeded { max_steps });
        }
        cur = first.to;
        steps += 1;
    }
}

/// For negative special `kappa = -p/q`: `x_1..x_q = 1`, `y_1..y_p = 1`, the
/// rest zero. Every `p_l`, `l = 1..=n+m`, vanishes there; this is checked
/// before returning. `None` when `kappa` is not negative special.
pub fn zero_system_witness(kappa: &Kappa, n: usize, m: usize) -> Result<Option<Point>> {
    let class = classify_kappa(kappa, n, m);
    if !class.is_negative_special() {
        return Ok(None);
    }
    let (p, q) = class.pq().expect("special class has p, q");
    let ones = |count: usize, len: usize| {
        (0..len)
            .map(|i| {
                if i < count {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect::<Vec<_>>()
    };
    let point = Point::new(ones(q, n), ones(p, m));
    for l in 1..=(n + m) as u32 {
        let v = p_l(&point, kappa, l);
        if !v.is_zero() {
            return Err(Error::InternalVerificationFailed(format!(
                "p_{l} = {v} at {point}"
            )));
        }
    }
    Ok(Some(point))
}

fn pad_x(i: usize) -> Rational {
    Rational::from_integer(i as i64) + Rational::frac(1, 7)
}

fn pad_y(j: usize) -> Rational {
    -Rational::from_integer(j as i64) - Rational::frac(1, 7)
}

/// Completes core coordinates to full `(n, m)` with the fixed pads
/// `i + 1/7` (x, indices past the core) and `-j - 1/7` (y).
fn padded(mut x: Vec<Rational>, mut y: Vec<Rational>, n: usize, m: usize) -> Point {
    x.extend((x.len() + 1..=n).map(pad_x));
    y.extend((y.len() + 1..=m).map(pad_y));
    Point::new(x, y)
}

/// The pad coordinates [`padded`] would add for `(n, m)` around a `q x p` core.
pub fn pad_coordinates(n: usize, m: usize, q: usize, p: usize) -> (Vec<Rational>, Vec<Rational>) {
    (
        (q + 1..=n).map(pad_x).collect(),
        (p + 1..=m).map(pad_y).collect(),
    )
}

/// Moves allowed between consecutive infinite-orbit witnesses.
pub fn witness_move_budget(p: usize, q: usize) -> usize {
    (4 * (p + q)).max(p * q)
}

const WITNESS_SEARCH_CAP: usize = 200_000;

fn negative_special_pq(kappa: &Kappa, n: usize, m: usize) -> Result<(usize, usize)> {
    let class = classify_kappa(kappa, n, m);
    if !class.is_negative_special() {
        return Err(Error::NotNegativeSpecial {
            kappa: kappa.to_string(),
            n,
            m,
        });
    }
    Ok(class.pq().expect("special class has p, q"))
}

/// The unverified `l`-th member of the infinite-orbit family for
/// `kappa = -p/q`: core `x_i = p l + (i-1)/q` (`i <= q`),
/// `y_j = p l + (j-1)/q` (`j <= p`), padded to `(n, m)`.
///
/// One raise at the common value `p l` shifts the core by `1/q`, so
/// consecutive members are `p q` raises apart.
pub fn infinite_orbit_point(kappa: &Kappa, n: usize, m: usize, l: i64) -> Result<Point> {
    let (p, q) = negative_special_pq(kappa, n, m)?;
    let base = Rational::from_integer(p as i64 * l);
    let step = |k: usize| &base + Rational::frac(k as i64, q as i64);
    Ok(padded(
        (0..q).map(step).collect(),
        (0..p).map(step).collect(),
        n,
        m,
    ))
}

/// The `l`-th witness, returned only after checking that it is connected to
/// the `(l+1)`-th within [`witness_move_budget`] moves.
pub fn infinite_orbit_witness(kappa: &Kappa, n: usize, m: usize, l: i64) -> Result<Point> {
    let point = infinite_orbit_point(kappa, n, m, l)?;
    connect_witnesses(kappa, n, m, l)?;
    Ok(point)
}

/// Shortest move path between witnesses `l` and `l + 1`.
pub fn connect_witnesses(
    kappa: &Kappa,
    n: usize,
    m: usize,
    l: i64,
) -> Result<Vec<crate::groupoid::MoveEdge>> {
    let (p, q) = negative_special_pq(kappa, n, m)?;
    let budget = witness_move_budget(p, q);
    let a = infinite_orbit_point(kappa, n, m, l)?;
    let b = infinite_orbit_point(kappa, n, m, l + 1)?;
    path_within(&a, &b, kappa, WITNESS_SEARCH_CAP, budget).ok_or(Error::ConnectivityUnverified {
        l,
        next: l + 1,
        budget,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfiniteOrbitLink {
    pub l: i64,
    pub moves: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfiniteOrbitFamily {
    pub kappa: Kappa,
    pub class: KappaClass,
    pub witnesses: Vec<(i64, Point)>,
    /// One entry per consecutive pair `(l, l+1)` in the range.
    pub links: Vec<InfiniteOrbitLink>,
    pub budget: usize,
    pub verified: bool,
}

/// Witnesses for `l` in `from..=to`, each consecutive pair verified connected.
pub fn infinite_orbit_family(
    kappa: &Kappa,
    n: usize,
    m: usize,
    from: i64,
    to: i64,
) -> Result<InfiniteOrbitFamily> {
    let (p, q) = negative_special_pq(kappa, n, m)?;
    let witnesses = (from..=to)
        .map(|l| Ok((l, infinite_orbit_point(kappa, n, m, l)?)))
        .collect::<Result<Vec<_>>>()?;
    let links = (from..to)
        .map(|l| {
            Ok(InfiniteOrbitLink {
                l,
                moves: connect_witnesses(kappa, n, m, l)?.len(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(InfiniteOrbitFamily {
        kappa: kappa.clone(),
        class: classify_kappa(kappa, n, m),
        witnesses,
        links,
        budget: witness_move_budget(p, q),
        verified: true,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationCertificate {
    pub pair_a: Point,
    pub pair_b: Point,
    pub equivalent: bool,
    pub a_minimal: bool,
    pub b_minimal: bool,
    /// Neither point lies in the other's orbit, both orbits enumerated completely.
    pub distinct_orbits: bool,
    pub orbit_cap: usize,
    pub a_orbit_size: usize,
    pub b_orbit_size: usize,
    pub a_orbit_complete: bool,
    pub b_orbit_complete: bool,
    /// The `(x0, y0)` finally used, after any genericity retries.
    pub x0: Rational,
    pub y0: Rational,
    pub attempts: usize,
}

impl SeparationCertificate {
    pub fn is_valid(&self) -> bool {
        self.equivalent && self.a_minimal && self.b_minimal && self.pair_a != self.pair_b
    }
}

/// Genericity retries after the first attempt.
pub const SEPARATION_RETRIES: usize = 5;

/// For positive special `kappa = p/q`: two equivalent minimal pairs in
/// different orbits.
///
/// Core (dimension `q x p`): `a` has `x_i = x0 - (i-1) kappa`,
/// `y_j = y0 + (j-1)`; `b` has `x_i = y0 + p - (i-1) kappa`, `y_j = x0 - j`.
/// Both get the same pads, which multiply both sides of the cross-multiplied
/// identity by the same factors. On a non-generic `(x0, y0)` the pair is
/// rebuilt from `(x0 + 1/11, y0 + 2/11)`, up to [`SEPARATION_RETRIES`] times.
pub fn separation_pair(
    kappa: &Kappa,
    n: usize,
    m: usize,
    x0: &Rational,
    y0: &Rational,
) -> Result<SeparationCertificate> {
    let class = classify_kappa(kappa, n, m);
    if !class.is_positive_special() {
        return Err(Error::NotPositiveSpecial {
            kappa: kappa.to_string(),
            n,
            m,
        });
    }
    let (p, q) = class.pq().expect("special class has p, q");
    let cap = default_cap(n, m);
    let (dx, dy) = (Rational::frac(1, 11), Rational::frac(2, 11));
    let (mut x0, mut y0) = (x0.clone(), y0.clone());

    for attempt in 1..=SEPARATION_RETRIES + 1 {
        let cert = separation_attempt(kappa, n, m, p, q, &x0, &y0, cap, attempt)?;
        if cert.is_valid() && cert.distinct_orbits {
            return Ok(cert);
        }
        x0 = &x0 + &dx;
        y0 = &y0 + &dy;
    }
    Err(Error::GenericityExhausted {
        attempts: SEPARATION_RETRIES + 1,
    })
}

/// The candidate pair for given `(x0, y0)`, before any validity check.
pub fn separation_candidates(
    kappa: &Kappa,
    n: usize,
    m: usize,
    x0: &Rational,
    y0: &Rational,
) -> Result<(Point, Point)> {
    let class = classify_kappa(kappa, n, m);
    if !class.is_positive_special() {
        return Err(Error::NotPositiveSpecial {
            kappa: kappa.to_string(),
            n,
            m,
        });
    }
    let (p, q) = class.pq().expect("special class has p, q");
    Ok(candidates(kappa, n, m, p, q, x0, y0))
}

fn candidates(
    kappa: &Kappa,
    n: usize,
    m: usize,
    p: usize,
    q: usize,
    x0: &Rational,
    y0: &Rational,
) -> (Point, Point) {
    let k = kappa.value();
    let int = |v: usize| Rational::from_integer(v as i64);
    let a = padded(
        (0..q).map(|i| x0 - k * int(i)).collect(),
        (0..p).map(|j| y0 + int(j)).collect(),
        n,
        m,
    );
    let b = padded(
        (0..q).map(|i| y0 + int(p) - k * int(i)).collect(),
        (1..=p).map(|j| x0 - int(j)).collect(),
        n,
        m,
    );
    (a, b)
}

#[allow(clippy::too_many_arguments)]
fn separation_attempt(
    kappa: &Kappa,
    n: usize,
    m: usize,
    p: usize,
    q: usize,
    x0: &Rational,
    y0: &Rational,
    cap: usize,
    attempt: usize,
) -> Result<SeparationCertificate> {
    let (a, b) = candidates(kappa, n, m, p, q, x0, y0);
    let equivalent = are_equivalent(&a, &b, kappa)?.equal;
    let (oa, ob) = std::thread::scope(|s| {
        let ha = s.spawn(|| orbit(&a, kappa, cap));
        let ob = orbit(&b, kappa, cap);
        (ha.join().expect("orbit thread"), ob)
    });
    let distinct_orbits = oa.complete && ob.complete && !oa.contains(&b) && !ob.contains(&a);
    Ok(SeparationCertificate {
        a_minimal: is_minimal(&a, kappa),
        b_minimal: is_minimal(&b, kappa),
        equivalent,
        distinct_orbits,
        orbit_cap: cap,
        a_orbit_size: oa.len(),
        b_orbit_size: ob.len(),
        a_orbit_complete: oa.complete,
        b_orbit_complete: ob.complete,
        pair_a: a,
        pair_b: b,
        x0: x0.clone(),
        y0: y0.clone(),
        attempts: attempt,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::{orbit, raise_moves};

    fn pt(s: &str) -> Point {
        s.parse().unwrap()
    }

    fn k(s: &str) -> Kappa {
        s.parse().unwrap()
    }

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn classify_examples() {
        let c = classify_kappa(&k("-1"), 1, 1);
        assert_eq!(
            c,
            KappaClass {
                tag: KappaTag::NegativeSpecial,
                p: Some(1),
                q: Some(1)
            }
        );
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"tag":"NegativeSpecial","p":1,"q":1}"#
        );

        let c = classify_kappa(&k("1/2"), 2, 3);
        assert_eq!(
            c,
            KappaClass {
                tag: KappaTag::PositiveSpecial,
                p: Some(1),
                q: Some(2)
            }
        );

        assert_eq!(classify_kappa(&k("3/2"), 2, 1), KappaClass::non_special());
        assert_eq!(
            serde_json::to_string(&KappaClass::non_special()).unwrap(),
            r#"{"tag":"NonSpecial"}"#
        );
        // 2/4 reduces to 1/2
        assert!(classify_kappa(&k("-2/4"), 2, 1).is_negative_special());
        assert!(!classify_kappa(&k("5/3"), 2, 2).is_special());
        assert!(!classify_kappa(&k("123456789012345678901234567890"), 2, 2).is_special());
    }

    #[test]
    fn classification_matches_brute_force_definition() {
        // kappa is special iff some p <= m, q <= n gives |kappa| = p/q.
        for num in -7i64..=7 {
            for den in 1i64..=7 {
                if num == 0 {
                    continue;
                }
                let kappa = Kappa::new(Rational::frac(num, den)).unwrap();
                for n in 1..=4usize {
                    for m in 1..=4usize {
                        let brute = (1..=m).any(|p| {
                            (1..=n)
                                .any(|q| Rational::frac(p as i64, q as i64) == kappa.value().abs())
                        });
                        assert_eq!(
                            classify_kappa(&kappa, n, m).is_special(),
                            brute,
                            "{kappa} ({n},{m})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn minimality_examples() {
        assert!(is_minimal(&pt("x=3;y=3"), &k("2")));
        assert!(!is_minimal(&pt("x=4;y=1"), &k("2")));
        assert!(is_minimal(&pt("x=;y=1,2"), &k("2")));
        assert!(is_minimal(&pt("x=1,5;y="), &k("-1")));
    }

    #[test]
    fn reduction_examples() {
        let red = reduce_to_minimal(&pt("x=4;y=1"), &k("2"), 10).unwrap();
        assert_eq!(
            red,
            Reduction {
                minimal: pt("x=3;y=3"),
                steps: 1
            }
        );
        let red = reduce_to_minimal(&pt("x=3;y=3"), &k("2"), 10).unwrap();
        assert_eq!(red.steps, 0);
        assert_eq!(
            reduce_to_minimal(&pt("x=0;y=0"), &k("-1"), 100),
            Err(Error::StepLimitExceeded { max_steps: 100 })
        );
    }

    #[test]
    fn reduction_picks_smallest_x() {
        // Both x=4 (y=1) and x=10 (y=7) admit a lower move at kappa=2.
        let p = pt("x=4,10;y=1,7");
        let red = reduce_to_minimal(&p, &k("2"), 1);
        assert_eq!(red, Err(Error::StepLimitExceeded { max_steps: 1 }));
        let red = reduce_to_minimal(&p, &k("2"), 5).unwrap();
        assert_eq!(red.minimal, pt("x=3,9;y=3,9"));
        assert_eq!(red.steps, 2);
    }

    #[test]
    fn zero_system_examples() {
        let w = zero_system_witness(&k("-2/3"), 3, 2).unwrap().unwrap();
        assert_eq!(w, pt("x=1,1,1;y=1,1"));
        assert_eq!(zero_system_witness(&k("2"), 3, 2).unwrap(), None);
        assert_eq!(zero_system_witness(&k("1/2"), 3, 2).unwrap(), None);
        let w = zero_system_witness(&k("-1"), 2, 2).unwrap().unwrap();
        assert_eq!(w, pt("x=0,1;y=0,1"));
        assert!((1..=4).all(|l| p_l(&w, &k("-1"), l).is_zero()));
    }

    #[test]
    fn infinite_witness_examples() {
        for l in -3..=3 {
            let w = infinite_orbit_witness(&k("-1"), 1, 1, l).unwrap();
            assert_eq!(w, Point::from_ints(&[l], &[l]));
        }
        let w = infinite_orbit_witness(&k("-2"), 1, 2, 4).unwrap();
        assert_eq!(w, Point::from_ints(&[8], &[8, 9]));
        let path = connect_witnesses(&k("-2"), 1, 2, 4).unwrap();
        assert_eq!(path.len(), 2);
        assert!(path
            .iter()
            .all(|e| e.kind == crate::groupoid::MoveKind::Raise));

        assert_eq!(
            infinite_orbit_witness(&k("2"), 1, 1, 0),
            Err(Error::NotNegativeSpecial {
                kappa: "2".into(),
                n: 1,
                m: 1
            })
        );
    }

    #[test]
    fn infinite_witness_general_special_values() {
        for (kappa, n, m) in [
            ("-1/2", 2, 1),
            ("-2/3", 3, 2),
            ("-3/2", 2, 3),
            ("-1", 2, 2),
            ("-1/2", 3, 2),
            ("-2", 2, 3),
        ] {
            let kappa = k(kappa);
            let fam = infinite_orbit_family(&kappa, n, m, -2, 2).unwrap();
            assert!(fam.verified);
            let (p, q) = fam.class.pq().unwrap();
            assert!(
                fam.links.iter().all(|link| link.moves == p * q),
                "{kappa}: {:?}",
                fam.links
            );
            let o = orbit(&fam.witnesses[0].1, &kappa, 500);
            assert!(!o.complete);
        }
    }

    #[test]
    fn pads_never_touch_core_along_witness_paths() {
        for (kappa, n, m) in [("-1/2", 3, 2), ("-1", 3, 3), ("-2/3", 4, 3)] {
            let kappa = k(kappa);
            let (p, q) = classify_kappa(&kappa, n, m).pq().unwrap();
            let (px, py) = pad_coordinates(n, m, q, p);
            for l in -2..2 {
                for e in connect_witnesses(&kappa, n, m, l).unwrap() {
                    // no move ever fires on a pad value, and pads survive every step
                    assert!(!px.contains(&e.witness) && !py.contains(&e.witness));
                    assert!(px.iter().all(|v| e.to.x().contains(v)));
                    assert!(py.iter().all(|v| e.to.y().contains(v)));
                }
            }
        }
    }

    #[test]
    fn separation_kappa_one() {
        let cert = separation_pair(&k("1"), 1, 1, &r("5"), &r("0")).unwrap();
        assert_eq!(cert.pair_a, pt("x=5;y=0"));
        assert_eq!(cert.pair_b, pt("x=1;y=4"));
        assert!(cert.is_valid() && cert.distinct_orbits);
        assert_eq!((cert.a_orbit_size, cert.b_orbit_size), (1, 1));
        assert_eq!(cert.attempts, 1);
    }

    #[test]
    fn separation_retries_on_non_generic_input() {
        // x0 = y0 + kappa + 1 makes pair_a non-minimal.
        let (a, _) = separation_candidates(&k("1"), 1, 1, &r("2"), &r("0")).unwrap();
        assert!(!is_minimal(&a, &k("1")));
        let cert = separation_pair(&k("1"), 1, 1, &r("2"), &r("0")).unwrap();
        assert_eq!(cert.attempts, 2);
        assert_eq!((&cert.x0, &cert.y0), (&r("23/11"), &r("2/11")));
        assert!(cert.is_valid());
    }

    /// `phi(t)` evaluated directly from the roots.
    fn phi_at(p: &Point, kappa: &Rational, t: &Rational) -> Option<Rational> {
        let one = Rational::one();
        let mut num = Rational::one();
        let mut den = Rational::one();
        for x in p.x() {
            num *= &(t - x);
            den *= &(t + kappa - x);
        }
        for y in p.y() {
            num *= &(t - &one - y);
            den *= &(t - y);
        }
        num.checked_div(&den).ok()
    }

    /// Two rational functions whose cross-multiplied numerators have degree
    /// at most `2(n+m)` agree if they agree at more than that many points.
    fn phi_oracle_equal(a: &Point, b: &Point, kappa: &Rational) -> bool {
        let needed = 2 * (a.n() + a.m()) + 1;
        let mut agree = 0;
        let mut t = Rational::frac(1, 13);
        while agree < needed {
            t = &t + Rational::frac(7, 3);
            if let (Some(fa), Some(fb)) = (phi_at(a, kappa, &t), phi_at(b, kappa, &t)) {
                if fa != fb {
                    return false;
                }
                agree += 1;
            }
        }
        true
    }

    #[test]
    fn separation_kappa_two_one_by_two() {
        let kappa = k("2");
        let (x0, y0) = (r("1/5"), r("7/5"));
        let (a, b) = separation_candidates(&kappa, 1, 2, &x0, &y0).unwrap();
        assert_eq!(a, pt("x=1/5;y=7/5,12/5"));
        assert_eq!(b, pt("x=17/5;y=-9/5,-4/5"));
        assert!(phi_oracle_equal(&a, &b, kappa.value()));
        let cert = separation_pair(&kappa, 1, 2, &x0, &y0).unwrap();
        assert!(cert.is_valid() && cert.distinct_orbits);
        assert_eq!(cert.attempts, 1);
    }

    #[test]
    fn separation_general_special_values() {
        for (kappa, n, m) in [
            ("2/3", 3, 2),
            ("1/2", 2, 1),
            ("1", 2, 2),
            ("3/2", 2, 3),
            ("1", 3, 1),
            ("1/2", 3, 2),
        ] {
            let kappa = k(kappa);
            let cert = separation_pair(&kappa, n, m, &r("1/5"), &r("7/5")).unwrap();
            assert!(cert.is_valid() && cert.distinct_orbits, "{kappa} ({n},{m})");
            assert!(phi_oracle_equal(&cert.pair_a, &cert.pair_b, kappa.value()));
        }
        assert_eq!(
            separation_pair(&k("-1"), 1, 1, &r("5"), &r("0"))
                .unwrap_err()
                .kind(),
            "NotPositiveSpecial"
        );
        assert_eq!(
            separation_pair(&k("5/3"), 2, 2, &r("5"), &r("0"))
                .unwrap_err()
                .kind(),
            "NotPositiveSpecial"
        );
    }

    #[test]
    fn confluence_spot_check() {
        let kappa = k("5/3");
        let seed = Point::new(vec![r("1"), r("2")], vec![r("1"), r("2")]);
        let base = reduce_to_minimal(&seed, &kappa, 1000).unwrap().minimal;
        for e in raise_moves(&seed, &kappa) {
            assert_eq!(
                reduce_to_minimal(&e.to, &kappa, 1000).unwrap().minimal,
                base
            );
        }
    }
}

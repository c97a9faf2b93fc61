//! The parameters `kappa = 1, -1, -1/2`, where explicit generators or
//! simpler equivalence criteria are available, and the trigonometric
//! (`q, t`) deformation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{Rational, UniPoly};
use crate::groupoid::{Kappa, Point, UVPoint};

/// Parameters of the trigonometric algebra. `q` and `t` are independent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrigParams {
    pub q: Rational,
    pub t: Rational,
    pub n: usize,
    pub m: usize,
}

impl TrigParams {
    pub fn new(q: Rational, t: Rational, n: usize, m: usize) -> Result<Self> {
        if q.is_zero() || t.is_zero() {
            return Err(Error::Parse("q and t must be nonzero".into()));
        }
        Ok(TrigParams { q, t, n, m })
    }
}

/// `prod_{i,j} ((u_i - v_j)^2 - 1)`.
pub fn delta_kappa1(p: &UVPoint) -> Rational {
    let one = &Rational::one();
    p.u()
        .iter()
        .flat_map(|u| p.v().iter().map(move |v| (u - v).powu(2) - one))
        .product()
}

/// `sum x_i^l - sum y_j^l`.
pub fn susy_power_sum(even: &[Rational], odd: &[Rational], l: u32) -> Rational {
    even.iter().map(|x| x.powu(l)).sum::<Rational>()
        - odd.iter().map(|y| y.powu(l)).sum::<Rational>()
}

fn fg(p: &Point) -> (UniPoly, UniPoly) {
    (UniPoly::from_roots(p.x()), UniPoly::from_roots(p.y()))
}

/// `f / g = f~ / g~`, decided as `f g~ = f~ g`.
pub fn ratio_criterion_minus1(a: &Point, b: &Point) -> Result<bool> {
    a.check_same_dims(b)?;
    let (f, g) = fg(a);
    let (ft, gt) = fg(b);
    Ok(&f * &gt == &ft * &g)
}

/// `f / (g g(t-1/2)) = f~ / (g~ g~(t-1/2))`, decided by cross-multiplying.
pub fn ratio_criterion_minus_half(a: &Point, b: &Point) -> Result<bool> {
    a.check_same_dims(b)?;
    let half = -Rational::frac(1, 2);
    let (f, g) = fg(a);
    let (ft, gt) = fg(b);
    Ok(&(&f * &gt) * &gt.shift(&half) == &(&ft * &g) * &g.shift(&half))
}

/// Two consecutive points of an infinite orbit at `kappa = -1/2`,
/// `n = 2`, `m = 1`:
/// `(l - 1/2 + a, l + a; -2l + 1/2 - 2a)` and `(l + 1/2 + a, l + a; -2l - 1/2 - 2a)`,
/// or with the two `u` entries listed the other way round for
/// `second_family`. Since `u` is stored sorted, both families give the same
/// points.
pub fn line_orbit_minus_half(l: i64, a: &Rational, second_family: bool) -> (UVPoint, UVPoint) {
    let l = Rational::from_integer(l);
    let half = Rational::frac(1, 2);
    let two = Rational::from_integer(2);
    let base = &l + a;
    let v0 = -(&two * &base);
    let make = |sign: &Rational| {
        let shifted = &base + sign * &half;
        let u = if second_family {
            vec![base.clone(), shifted]
        } else {
            vec![shifted, base.clone()]
        };
        UVPoint::new(u, vec![&v0 - sign * &half])
    };
    (make(&-Rational::one()), make(&Rational::one()))
}

/// Whether some labeling of the two `u` entries gives
/// `u_1 - u_2 = 2 u_1 + v_1 = sign / 2`.
pub fn on_minus_half_line(p: &UVPoint, positive: bool) -> bool {
    let [a, b] = p.u() else { return false };
    let [v] = p.v() else { return false };
    let target = if positive {
        Rational::frac(1, 2)
    } else {
        Rational::frac(-1, 2)
    };
    let two = Rational::from_integer(2);
    [(a, b), (b, a)]
        .into_iter()
        .any(|(u1, u2)| u1 - u2 == target && &two * u1 + v == target)
}

/// The published generators for `n = m = 1`, evaluated at `p`.
///
/// Nonspecial `kappa`: `kappa x + y`, `(x - y)(x - y - kappa - 1)`, `x (x - y)(x - y - kappa - 1)`.
/// `kappa = 1`: `u + v`, `u^2 + v^2`, `u ((u - v)^2 - 1)`.
/// `kappa = -1/2`: `u + v`, `(2u + v)^2`, `u ((2u + v)^2 - 1/4)`.
pub fn gens_11(kappa: &Kappa, p: &Point) -> Result<Vec<Rational>> {
    if p.dims() != (1, 1) {
        return Err(Error::DimensionMismatch {
            left_n: p.n(),
            left_m: p.m(),
            right_n: 1,
            right_m: 1,
        });
    }
    let k = kappa.value();
    let one = Rational::one();
    if *k == Rational::from_integer(-1) {
        return Err(Error::UnsupportedKappa(kappa.to_string()));
    }
    if k.is_one() {
        let uv = p.to_uv(kappa);
        let (u, v) = (&uv.u()[0], &uv.v()[0]);
        return Ok(vec![
            u + v,
            u.powu(2) + v.powu(2),
            u * ((u - v).powu(2) - &one),
        ]);
    }
    if *k == Rational::frac(-1, 2) {
        let uv = p.to_uv(kappa);
        let (u, v) = (&uv.u()[0], &uv.v()[0]);
        let s = (Rational::from_integer(2) * u + v).powu(2);
        return Ok(vec![u + v, s.clone(), u * (s - Rational::frac(1, 4))]);
    }
    let (x, y) = (&p.x()[0], &p.y()[0]);
    let i2 = (x - y) * (x - y - k - &one);
    Ok(vec![k * x + y, i2.clone(), x * &i2])
}

/// `sum z_i^r + (1 - q^r)/(1 - t^r) sum w_j^r`.
pub fn trig_power_sum(
    z: &[Rational],
    w: &[Rational],
    params: &TrigParams,
    r: u32,
) -> Result<Rational> {
    let one = Rational::one();
    let den = &one - params.t.powu(r);
    if den.is_zero() {
        return Err(Error::DegenerateDenominator);
    }
    let ratio = (&one - params.q.powu(r)) / den;
    Ok(z.iter().map(|v| v.powu(r)).sum::<Rational>()
        + ratio * w.iter().map(|v| v.powu(r)).sum::<Rational>())
}

/// `t^i q^j != 1` for all `1 <= i <= n`, `1 <= j <= m`.
pub fn trig_finite_generation(params: &TrigParams) -> bool {
    (1..=params.n as u32).all(|i| {
        let ti = params.t.powu(i);
        (1..=params.m as u32).all(|j| !(&ti * params.q.powu(j)).is_one())
    })
}

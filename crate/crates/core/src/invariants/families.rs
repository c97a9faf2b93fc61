//! The deformed Newton sums `q_l`, deformed power sums `p_l`, and deformed
//! Bernoulli sums `b_l`, both as numbers at a point and as polynomials.

use crate::exactmath::{
    bernoulli_poly, BernoulliTable, LinearForm, MultiPoly, Rational, UniPoly, Var, VarSpace,
};
use crate::groupoid::{Kappa, Point, UVPoint};

/// `q_l = sum_i [x_i^{l+1} - (x_i - kappa)^{l+1}] + sum_p [(y_p + 1)^{l+1} - y_p^{l+1}]`.
pub fn q_l(p: &Point, kappa: &Kappa, l: u32) -> Rational {
    let k = kappa.value();
    let e = l + 1;
    let one = Rational::one();
    let xs: Rational = p.x().iter().map(|x| x.powu(e) - (x - k).powu(e)).sum();
    let ys: Rational = p.y().iter().map(|y| (y + &one).powu(e) - y.powu(e)).sum();
    xs + ys
}

/// `p_l = kappa * sum_i x_i^l + sum_p y_p^l`.
pub fn p_l(p: &Point, kappa: &Kappa, l: u32) -> Rational {
    let xs: Rational = p.x().iter().map(|x| x.powu(l)).sum();
    let ys: Rational = p.y().iter().map(|y| y.powu(l)).sum();
    kappa.value() * xs + ys
}

/// `b_l = sum_i B_l(u_i + 1/2) + kappa^{l-1} sum_p B_l(v_p + 1/2)`.
pub fn b_l(p: &UVPoint, kappa: &Kappa, l: u32) -> Rational {
    b_from_poly(p, kappa, l, &bernoulli_poly(l as usize))
}

/// As [`b_l`], reading `B_l` from a prebuilt table.
pub fn b_l_with(table: &BernoulliTable, p: &UVPoint, kappa: &Kappa, l: u32) -> Rational {
    b_from_poly(p, kappa, l, &table.get(l as usize))
}

fn b_from_poly(p: &UVPoint, kappa: &Kappa, l: u32, bl: &UniPoly) -> Rational {
    let half = Rational::frac(1, 2);
    let us: Rational = p.u().iter().map(|u| bl.eval(&(u + &half))).sum();
    let vs: Rational = p.v().iter().map(|v| bl.eval(&(v + &half))).sum();
    let weight = kappa.value().pow(l as i32 - 1).expect("kappa is nonzero");
    us + weight * vs
}

/// Substitution expressing `x, y` through `u, v`. Apply it to a polynomial
/// whose `u`/`v` slots hold `x`/`y` to rewrite it in `(u, v)`.
pub fn xy_in_uv(space: VarSpace, kappa: &Kappa) -> Vec<(Var, LinearForm)> {
    let k = kappa.value();
    let half = Rational::frac(1, 2);
    let mut out: Vec<(Var, LinearForm)> = (1..=space.n)
        .map(|i| (Var::U(i), LinearForm::var(Var::U(i)).plus(&half + k)))
        .collect();
    out.extend((1..=space.m).map(|p| {
        (
            Var::V(p),
            LinearForm::scaled_var(Var::V(p), k.clone()).plus(k * &half),
        )
    }));
    out
}

/// Inverse of [`xy_in_uv`]: `u = x - 1/2 - kappa`, `v = y / kappa - 1/2`.
pub fn uv_in_xy(space: VarSpace, kappa: &Kappa) -> Vec<(Var, LinearForm)> {
    let k = kappa.value();
    let half = Rational::frac(1, 2);
    let inv = k.recip().expect("kappa is nonzero");
    let mut out: Vec<(Var, LinearForm)> = (1..=space.n)
        .map(|i| (Var::U(i), LinearForm::var(Var::U(i)).plus(-(&half + k))))
        .collect();
    out.extend((1..=space.m).map(|p| {
        (
            Var::V(p),
            LinearForm::scaled_var(Var::V(p), inv.clone()).plus(-&half),
        )
    }));
    out
}

fn var_poly(space: VarSpace, v: Var) -> MultiPoly {
    MultiPoly::var(space, v).expect("variable in space")
}

/// `q_l` as a polynomial, with slot `u_i` standing for `x_i` and `v_p` for `y_p`.
pub fn q_l_poly_xy(space: VarSpace, kappa: &Kappa, l: u32) -> MultiPoly {
    let e = l + 1;
    let k = MultiPoly::constant(space, kappa.value().clone());
    let one = MultiPoly::one(space);
    let mut out = MultiPoly::zero(space);
    for i in 1..=space.n {
        let x = var_poly(space, Var::U(i));
        out = &out + &(&x.pow(e) - &(&x - &k).pow(e));
    }
    for p in 1..=space.m {
        let y = var_poly(space, Var::V(p));
        out = &out + &(&(&y + &one).pow(e) - &y.pow(e));
    }
    out
}

/// `p_l` as a polynomial in the same slot convention as [`q_l_poly_xy`].
pub fn p_l_poly_xy(space: VarSpace, kappa: &Kappa, l: u32) -> MultiPoly {
    let mut xs = MultiPoly::zero(space);
    for i in 1..=space.n {
        xs = &xs + &var_poly(space, Var::U(i)).pow(l);
    }
    let mut out = xs.scale(kappa.value());
    for p in 1..=space.m {
        out = &out + &var_poly(space, Var::V(p)).pow(l);
    }
    out
}

/// `q_l` rewritten in the original `(u, v)` coordinates.
pub fn q_l_poly_uv(space: VarSpace, kappa: &Kappa, l: u32) -> MultiPoly {
    q_l_poly_xy(space, kappa, l)
        .substitute(&xy_in_uv(space, kappa))
        .expect("substitution stays in space")
}

/// `b_l` as a polynomial in `(u, v)`.
pub fn b_l_poly_uv(space: VarSpace, kappa: &Kappa, l: u32) -> MultiPoly {
    let shifted = bernoulli_poly(l as usize).shift(&Rational::frac(1, 2));
    let compose = |v: Var| {
        let x = var_poly(space, v);
        let mut acc = MultiPoly::zero(space);
        for c in shifted.coeffs().iter().rev() {
            acc = &(&acc * &x) + &MultiPoly::constant(space, c.clone());
        }
        acc
    };
    let weight = kappa.value().pow(l as i32 - 1).expect("kappa is nonzero");
    let mut out = MultiPoly::zero(space);
    for i in 1..=space.n {
        out = &out + &compose(Var::U(i));
    }
    let mut vs = MultiPoly::zero(space);
    for p in 1..=space.m {
        vs = &vs + &compose(Var::V(p));
    }
    &out + &vs.scale(&weight)
}

//! The rational function `phi(t) = f(t) g(t-1) / (f(t+kappa) g(t))` and the
//! equivalence it induces.

use serde::{Deserialize, Serialize};

use super::families::q_l;
use crate::error::Result;
use crate::exactmath::{Rational, UniPoly};
use crate::groupoid::{Kappa, Point};

/// The four monic factors of `phi`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiParts {
    /// `f(t) = prod (t - x_i)`
    pub f: UniPoly,
    /// `f(t + kappa)`
    pub f_shifted: UniPoly,
    /// `g(t - 1)`
    pub g_shifted: UniPoly,
    /// `g(t) = prod (t - y_p)`
    pub g: UniPoly,
}

pub fn phi_parts(p: &Point, kappa: &Kappa) -> PhiParts {
    let f = UniPoly::from_roots(p.x());
    let g = UniPoly::from_roots(p.y());
    PhiParts {
        f_shifted: f.shift(kappa.value()),
        g_shifted: g.shift(&-Rational::one()),
        f,
        g,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceCertificate {
    pub left: Point,
    pub right: Point,
    pub equal: bool,
    /// `f g(t-1) f~(t+kappa) g~`
    pub lhs_poly: UniPoly,
    /// `f~ g~(t-1) f(t+kappa) g`
    pub rhs_poly: UniPoly,
}

/// Decides `phi_a = phi_b` by comparing the cross-multiplied products.
pub fn are_equivalent(a: &Point, b: &Point, kappa: &Kappa) -> Result<EquivalenceCertificate> {
    a.check_same_dims(b)?;
    let pa = phi_parts(a, kappa);
    let pb = phi_parts(b, kappa);
    let lhs_poly = &(&(&pa.f * &pa.g_shifted) * &pb.f_shifted) * &pb.g;
    let rhs_poly = &(&(&pb.f * &pb.g_shifted) * &pa.f_shifted) * &pa.g;
    Ok(EquivalenceCertificate {
        left: a.clone(),
        right: b.clone(),
        equal: lhs_poly == rhs_poly,
        lhs_poly,
        rhs_poly,
    })
}

/// `(q_1, ..., q_L)` at a point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub kappa: Kappa,
    pub values: Vec<Rational>,
}

/// `2mn + min(m, n)`, at least 1.
pub fn default_fingerprint_len(n: usize, m: usize) -> usize {
    (2 * m * n + m.min(n)).max(1)
}

pub fn fingerprint(p: &Point, kappa: &Kappa, len: usize) -> Fingerprint {
    Fingerprint {
        kappa: kappa.clone(),
        values: (1..=len.max(1) as u32).map(|l| q_l(p, kappa, l)).collect(),
    }
}

/// Coefficients of `t^{-k-1}`, `k = 1..=len`, in the expansion of
/// `phi'/phi` at infinity.
///
/// Each factor's `P'/P` is expanded as a power series in `1/t` by dividing
/// the reversed derivative by the reversed polynomial. Entry `k-1` of the
/// result equals `sum [x_i^k - (x_i - kappa)^k] + sum [(y_p + 1)^k - y_p^k]`,
/// so `q_l` sits at `t^{-l-2}` (index `l`) and index 0 holds `n kappa + m`.
pub fn logderivative_coefficients(p: &Point, kappa: &Kappa, len: usize) -> Vec<Rational> {
    let parts = phi_parts(p, kappa);
    let terms = [
        (log_derivative_series(&parts.f, len), false),
        (log_derivative_series(&parts.f_shifted, len), true),
        (log_derivative_series(&parts.g_shifted, len), false),
        (log_derivative_series(&parts.g, len), true),
    ];
    (1..=len)
        .map(|k| {
            terms
                .iter()
                .map(|(s, negate)| if *negate { -&s[k] } else { s[k].clone() })
                .sum()
        })
        .collect()
}

/// `[s^0..=s^len]` of `S(s)/R(s)` where `P(t) = t^d R(1/t)` and
/// `P'(t) = t^{d-1} S(1/t)`; that is, `P'/P = sum_k c_k t^{-k-1}`.
fn log_derivative_series(p: &UniPoly, len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len + 1];
    let Some(d) = p.degree().filter(|&d| d > 0) else {
        return out;
    };
    let lead = p.leading();
    let rev: Vec<Rational> = (0..=d).map(|j| p.coeff(d - j) / lead.clone()).collect();
    let dp = p.derivative();
    let rev_d: Vec<Rational> = (0..d).map(|j| dp.coeff(d - 1 - j) / lead.clone()).collect();
    for k in 0..=len {
        let mut acc = rev_d.get(k).cloned().unwrap_or_default();
        for j in 1..=k.min(d) {
            acc -= &rev[j] * &out[k - j];
        }
        out[k] = acc;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> Point {
        s.parse().unwrap()
    }

    fn k(s: &str) -> Kappa {
        s.parse().unwrap()
    }

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn roots(rs: &[&str]) -> UniPoly {
        UniPoly::from_roots(&rs.iter().map(|s| r(s)).collect::<Vec<_>>())
    }

    #[test]
    fn phi_parts_examples() {
        let p = phi_parts(&pt("x=3;y=3"), &k("2"));
        assert_eq!(p.f, roots(&["3"]));
        assert_eq!(p.f_shifted, roots(&["1"]));
        assert_eq!(p.g_shifted, roots(&["4"]));
        assert_eq!(p.g, roots(&["3"]));

        let p = phi_parts(&pt("x=;y=2,5"), &k("3"));
        assert_eq!(p.f, UniPoly::one());
        assert_eq!(p.f_shifted, UniPoly::one());
        assert_eq!(p.g_shifted, roots(&["3", "6"]));

        let p = phi_parts(&pt("x=5;y=0"), &k("1"));
        assert_eq!(
            (p.f, p.f_shifted, p.g_shifted, p.g),
            (roots(&["5"]), roots(&["4"]), roots(&["1"]), roots(&["0"]))
        );
    }

    #[test]
    fn equivalence_examples() {
        let c = are_equivalent(&pt("x=3;y=3"), &pt("x=4;y=1"), &k("2")).unwrap();
        assert!(c.equal);
        assert_eq!(c.lhs_poly, roots(&["1", "2", "3", "4"]));

        assert!(
            are_equivalent(&pt("x=5;y=0"), &pt("x=1;y=4"), &k("1"))
                .unwrap()
                .equal
        );

        let c = are_equivalent(&pt("x=3;y=3"), &pt("x=3;y=4"), &k("2")).unwrap();
        assert!(!c.equal);
        assert_ne!(c.lhs_poly, c.rhs_poly);
    }

    #[test]
    fn dimension_mismatch() {
        let err = are_equivalent(&pt("x=3;y=3"), &pt("x=3,4;y=3"), &k("2")).unwrap_err();
        assert_eq!(err.kind(), "DimensionMismatch");
    }

    /// Direct integer evaluation, independent of `Rational` and `q_l`.
    fn q_oracle(x: &[i128], y: &[i128], kappa: i128, l: u32) -> i128 {
        let e = l + 1;
        x.iter()
            .map(|&x| x.pow(e) - (x - kappa).pow(e))
            .sum::<i128>()
            + y.iter().map(|&y| (y + 1).pow(e) - y.pow(e)).sum::<i128>()
    }

    #[test]
    fn fingerprint_examples() {
        // Oracle: q_1 = 9 - 1 + 16 - 9 = 15, q_2 = 27 - 1 + 64 - 27 = 63.
        assert_eq!(q_oracle(&[3], &[3], 2, 1), 15);
        assert_eq!(q_oracle(&[3], &[3], 2, 2), 63);
        let fp = fingerprint(&pt("x=3;y=3"), &k("2"), 2);
        assert_eq!(fp.values, vec![r("15"), r("63")]);

        for l in 1..=6 {
            let want = q_oracle(&[-2, 7], &[4], 3, l);
            assert_eq!(
                fingerprint(&pt("x=-2,7;y=4"), &k("3"), 6).values[l as usize - 1],
                Rational::from(want as i64)
            );
        }

        let a = fingerprint(&pt("x=5;y=0"), &k("1"), 12);
        let b = fingerprint(&pt("x=1;y=4"), &k("1"), 12);
        assert_eq!(a, b);
        assert_eq!(default_fingerprint_len(2, 3), 14);
        assert_eq!(default_fingerprint_len(0, 3), 1);
    }

    #[test]
    fn logderivative_examples() {
        let c = logderivative_coefficients(&pt("x=3;y=3"), &k("2"), 4);
        assert_eq!(c[0], r("3")); // n kappa + m
        assert_eq!(c[1], r("15")); // q_1
        assert_eq!(c[2], r("63")); // q_2
        assert!(logderivative_coefficients(&pt("x=;y="), &k("2"), 5)
            .iter()
            .all(Rational::is_zero));

        let c = logderivative_coefficients(&pt("x=1/2,-3;y=2,2,7/3"), &k("-5/3"), 1);
        assert_eq!(c[0], r("-10/3") + r("3"));
    }
}

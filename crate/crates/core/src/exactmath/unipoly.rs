//! Dense univariate polynomials over [`Rational`], lowest degree first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// Monic product `prod (t - r)` over the roots, with multiplicity.
    pub fn from_roots<'a, I>(roots: I) -> Self
    where
        I: IntoIterator<Item = &'a Rational>,
    {
        let mut coeffs = vec![Rational::one()];
        for r in roots {
            // multiply in place by (t - r)
            coeffs.push(Rational::zero());
            for k in (0..coeffs.len()).rev() {
                let lower = if k > 0 {
                    coeffs[k - 1].clone()
                } else {
                    Rational::zero()
                };
                coeffs[k] = lower - r * &coeffs[k];
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(Rational::is_one)
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    /// Returns `q` with `q(t) = p(t + c)`.
    pub fn shift(&self, c: &Rational) -> Self {
        if c.is_zero() || self.coeffs.len() <= 1 {
            return self.clone();
        }
        // Repeated synthetic division (Taylor shift), O(d^2).
        let mut a = self.coeffs.clone();
        let d = a.len();
        for i in 0..d {
            for k in (i..d - 1).rev() {
                let carry = c * &a[k + 1];
                a[k] += carry;
            }
        }
        Self::from_coeffs(a)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl From<Vec<Rational>> for UniPoly {
    fn from(v: Vec<Rational>) -> Self {
        Self::from_coeffs(v)
    }
}

impl From<UniPoly> for Vec<Rational> {
    fn from(p: UniPoly) -> Self {
        p.coeffs
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl Mul for UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: UniPoly) -> UniPoly {
        &self * &rhs
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", c.abs())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{mag}*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn poly(cs: &[&str]) -> UniPoly {
        UniPoly::from_coeffs(cs.iter().map(|s| r(s)).collect())
    }

    #[test]
    fn from_roots_examples() {
        assert_eq!(UniPoly::from_roots(&[]), UniPoly::one());
        assert_eq!(UniPoly::from_roots(&[r("3")]), poly(&["-3", "1"]));
        assert_eq!(
            UniPoly::from_roots(&[r("1"), r("1")]),
            poly(&["1", "-2", "1"])
        );
    }

    #[test]
    fn shift_examples() {
        let p = poly(&["-3", "1"]);
        assert_eq!(p.shift(&r("2")), poly(&["-1", "1"]));
        assert_eq!(p.shift(&Rational::zero()), p);
        assert_eq!(
            poly(&["0", "0", "1"]).shift(&r("1")),
            poly(&["1", "2", "1"])
        );
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = poly(&["1", "0", "0"]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!((&p - &p).degree(), None);
        assert_eq!(p.to_string(), "1");
        assert_eq!(poly(&["1/6", "-1", "1"]).to_string(), "t^2 - t + 1/6");
    }

    #[test]
    fn serializes_lowest_degree_first() {
        let p = poly(&["-3", "1"]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"["-3","1"]"#);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-20i64..20, 1i64..7).prop_map(|(n, d)| Rational::frac(n, d))
    }

    proptest! {
        #[test]
        fn shift_round_trips(cs in prop::collection::vec(small_rational(), 0..7), c in small_rational()) {
            let p = UniPoly::from_coeffs(cs);
            prop_assert_eq!(p.shift(&c).shift(&-&c), p);
        }

        #[test]
        fn shift_agrees_with_evaluation(cs in prop::collection::vec(small_rational(), 0..6),
                                        c in small_rational(), at in small_rational()) {
            let p = UniPoly::from_coeffs(cs);
            prop_assert_eq!(p.shift(&c).eval(&at), p.eval(&(&at + &c)));
        }

        #[test]
        fn roots_vanish(roots in prop::collection::vec(small_rational(), 0..6)) {
            let p = UniPoly::from_roots(&roots);
            prop_assert!(p.is_monic());
            prop_assert_eq!(p.degree(), Some(roots.len()));
            for x in &roots {
                prop_assert!(p.eval(x).is_zero());
            }
        }
    }
}

//! Points modulo `S_n x S_m`, in both coordinate systems, and the parameter.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::Rational;

/// Nonzero deformation parameter.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Rational", into = "Rational")]
pub struct Kappa(Rational);

impl Kappa {
    pub fn new(value: Rational) -> Result<Self> {
        if value.is_zero() {
            return Err(Error::ZeroKappa);
        }
        Ok(Kappa(value))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }
}

impl TryFrom<Rational> for Kappa {
    type Error = Error;
    fn try_from(r: Rational) -> Result<Self> {
        Kappa::new(r)
    }
}

impl From<Kappa> for Rational {
    fn from(k: Kappa) -> Rational {
        k.0
    }
}

impl FromStr for Kappa {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Kappa::new(s.parse()?)
    }
}

impl fmt::Display for Kappa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Kappa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Kappa({})", self.0)
    }
}

/// Canonical representative of an `S_n x S_m` class in `(x, y)` coordinates.
///
/// Both coordinate lists are kept sorted ascending, so two points are in the
/// same class exactly when they compare equal. Equivalently, the pair of
/// root multisets of the monic polynomials `f(t) = prod (t - x_i)` and
/// `g(t) = prod (t - y_p)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "RawXY")]
pub struct Point {
    x: Vec<Rational>,
    y: Vec<Rational>,
}

#[derive(Deserialize)]
struct RawXY {
    x: Vec<Rational>,
    y: Vec<Rational>,
}

impl From<RawXY> for Point {
    fn from(raw: RawXY) -> Self {
        Point::new(raw.x, raw.y)
    }
}

impl Point {
    /// Sorts both coordinate lists.
    pub fn new(mut x: Vec<Rational>, mut y: Vec<Rational>) -> Self {
        x.sort();
        y.sort();
        Point { x, y }
    }

    pub fn from_ints(x: &[i64], y: &[i64]) -> Self {
        Point::new(
            x.iter().map(|&v| Rational::from_integer(v)).collect(),
            y.iter().map(|&v| Rational::from_integer(v)).collect(),
        )
    }

    pub fn x(&self) -> &[Rational] {
        &self.x
    }

    pub fn y(&self) -> &[Rational] {
        &self.y
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn m(&self) -> usize {
        self.y.len()
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.n(), self.m())
    }

    pub fn check_same_dims(&self, other: &Point) -> Result<()> {
        if self.dims() != other.dims() {
            return Err(Error::DimensionMismatch {
                left_n: self.n(),
                left_m: self.m(),
                right_n: other.n(),
                right_m: other.m(),
            });
        }
        Ok(())
    }

    /// Replaces one copy of `old_x` by `new_x` and one copy of `old_y` by
    /// `new_y`, re-sorting. Both values must be present.
    pub(crate) fn replace_pair(
        &self,
        old_x: &Rational,
        new_x: Rational,
        old_y: &Rational,
        new_y: Rational,
    ) -> Point {
        let mut x = self.x.clone();
        let mut y = self.y.clone();
        let ix = x.binary_search(old_x).expect("x value present");
        let iy = y.binary_search(old_y).expect("y value present");
        x[ix] = new_x;
        y[iy] = new_y;
        Point::new(x, y)
    }

    /// `(u, v)` coordinates: `u_i = x_i - 1/2 - kappa`, `v_p = y_p / kappa - 1/2`.
    pub fn to_uv(&self, kappa: &Kappa) -> UVPoint {
        let k = kappa.value();
        let half = Rational::frac(1, 2);
        let shift = &half + k;
        UVPoint::new(
            self.x.iter().map(|x| x - &shift).collect(),
            self.y.iter().map(|y| y / k - &half).collect(),
        )
    }
}

fn fmt_list(f: &mut fmt::Formatter<'_>, vals: &[Rational]) -> fmt::Result {
    for (i, v) in vals.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x=")?;
        fmt_list(f, &self.x)?;
        write!(f, ";y=")?;
        fmt_list(f, &self.y)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses `"a=1,2;b=3"` into the two lists named `first` and `second`.
fn parse_two_lists(s: &str, first: &str, second: &str) -> Result<(Vec<Rational>, Vec<Rational>)> {
    let bad = || Error::Parse(format!("expected \"{first}=...;{second}=...\", got {s:?}"));
    let mut a = None;
    let mut b = None;
    for part in s.split(';') {
        let (name, vals) = part.split_once('=').ok_or_else(bad)?;
        let vals = vals.trim();
        let parsed = if vals.is_empty() {
            Vec::new()
        } else {
            vals.split(',')
                .map(str::parse)
                .collect::<Result<Vec<Rational>>>()?
        };
        let slot = match name.trim() {
            n if n == first => &mut a,
            n if n == second => &mut b,
            _ => return Err(bad()),
        };
        if slot.replace(parsed).is_some() {
            return Err(bad());
        }
    }
    Ok((a.unwrap_or_default(), b.unwrap_or_default()))
}

impl FromStr for Point {
    type Err = Error;

    /// `"x=3,4;y=1/2,0"`; order-insensitive, an omitted list is empty.
    fn from_str(s: &str) -> Result<Self> {
        let (x, y) = parse_two_lists(s, "x", "y")?;
        Ok(Point::new(x, y))
    }
}

/// Canonical representative in the original `(u, v)` coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "RawUV")]
pub struct UVPoint {
    u: Vec<Rational>,
    v: Vec<Rational>,
}

#[derive(Deserialize)]
struct RawUV {
    u: Vec<Rational>,
    v: Vec<Rational>,
}

impl From<RawUV> for UVPoint {
    fn from(raw: RawUV) -> Self {
        UVPoint::new(raw.u, raw.v)
    }
}

impl UVPoint {
    pub fn new(mut u: Vec<Rational>, mut v: Vec<Rational>) -> Self {
        u.sort();
        v.sort();
        UVPoint { u, v }
    }

    pub fn u(&self) -> &[Rational] {
        &self.u
    }

    pub fn v(&self) -> &[Rational] {
        &self.v
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.u.len(), self.v.len())
    }

    /// `x_i = u_i + 1/2 + kappa`, `y_p = kappa v_p + kappa/2`.
    pub fn to_xy(&self, kappa: &Kappa) -> Point {
        let k = kappa.value();
        let half = Rational::frac(1, 2);
        let shift = &half + k;
        let k_half = k * &half;
        Point::new(
            self.u.iter().map(|u| u + &shift).collect(),
            self.v.iter().map(|v| k * v + &k_half).collect(),
        )
    }

    /// Concatenated `(u_1..u_n, v_1..v_m)`, the slot order of
    /// [`crate::exactmath::VarSpace`].
    pub fn coords(&self) -> Vec<Rational> {
        self.u.iter().chain(&self.v).cloned().collect()
    }
}

impl fmt::Display for UVPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u=")?;
        fmt_list(f, &self.u)?;
        write!(f, ";v=")?;
        fmt_list(f, &self.v)
    }
}

impl fmt::Debug for UVPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for UVPoint {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (u, v) = parse_two_lists(s, "u", "v")?;
        Ok(UVPoint::new(u, v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn k(s: &str) -> Kappa {
        s.parse().unwrap()
    }

    #[test]
    fn to_xy_examples() {
        let p: UVPoint = "u=1/2;v=1".parse().unwrap();
        assert_eq!(p.to_xy(&k("2")), "x=3;y=3".parse().unwrap());

        let a = r("7/5");
        let p = UVPoint::new(vec![a.clone()], vec![-&a]);
        // lands on the diagonal x = y
        let want = Point::new(vec![&a - r("1/2")], vec![&a - r("1/2")]);
        assert_eq!(p.to_xy(&k("-1")), want);
    }

    #[test]
    fn zero_kappa_is_rejected() {
        assert_eq!("0".parse::<Kappa>(), Err(Error::ZeroKappa));
        assert_eq!("0/5".parse::<Kappa>(), Err(Error::ZeroKappa));
        assert!(serde_json::from_str::<Kappa>("\"0\"").is_err());
    }

    #[test]
    fn to_uv_examples() {
        let p: Point = "x=3;y=3".parse().unwrap();
        assert_eq!(p.to_uv(&k("2")), "u=1/2;v=1".parse().unwrap());
        let p: Point = "x=1/2;y=1/2".parse().unwrap();
        assert_eq!(p.to_uv(&k("1")), "u=-1;v=0".parse().unwrap());
    }

    #[test]
    fn negative_kappa_reverses_y_order_but_stays_canonical() {
        let p: UVPoint = "u=0;v=1,2".parse().unwrap();
        let xy = p.to_xy(&k("-1"));
        assert_eq!(xy.y(), &[r("-5/2"), r("-3/2")]);
    }

    #[test]
    fn parse_is_order_insensitive() {
        let a: Point = "x=4,3;y=1/2,0".parse().unwrap();
        let b: Point = "y=0,1/2;x=3,4".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "x=3,4;y=0,1/2");
        let empty: Point = "x=;y=1".parse().unwrap();
        assert_eq!(empty.dims(), (0, 1));
        assert!("x=1;x=2".parse::<Point>().is_err());
        assert!("z=1".parse::<Point>().is_err());
        assert!("x=1,a;y=2".parse::<Point>().is_err());
    }

    #[test]
    fn json_shape() {
        let p: Point = "x=4,3;y=1/2".parse().unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"x":["3","4"],"y":["1/2"]}"#);
        let unsorted: Point = serde_json::from_str(r#"{"x":["4","3"],"y":["1/2"]}"#).unwrap();
        assert_eq!(unsorted, p);
    }

    fn rat() -> impl Strategy<Value = Rational> {
        (-30i64..30, 1i64..6).prop_map(|(n, d)| Rational::frac(n, d))
    }

    fn kappa() -> impl Strategy<Value = Kappa> {
        (-9i64..9, 1i64..5)
            .prop_filter("nonzero", |(n, _)| *n != 0)
            .prop_map(|(n, d)| Kappa::new(Rational::frac(n, d)).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn coordinate_round_trip(u in prop::collection::vec(rat(), 0..4),
                                 v in prop::collection::vec(rat(), 0..4),
                                 kappa in kappa()) {
            let p = UVPoint::new(u, v);
            prop_assert_eq!(p.to_xy(&kappa).to_uv(&kappa), p.clone());
            let xy = p.to_xy(&kappa);
            prop_assert_eq!(xy.to_uv(&kappa).to_xy(&kappa), xy);
        }
    }
}

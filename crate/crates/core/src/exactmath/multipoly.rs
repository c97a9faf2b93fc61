//! Sparse multivariate polynomials in `u1..un, v1..vm`.
//!
//! Exponent vectors have fixed arity `n + m`: slots `0..n` hold the `u`
//! exponents, slots `n..n+m` the `v` exponents. Zero coefficients are never
//! stored, so structural equality is polynomial equality.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::rational::Rational;
use crate::error::{Error, Result};

/// A variable, 1-based as in `u1`, `v2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    U(usize),
    V(usize),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::U(i) => write!(f, "u{i}"),
            Var::V(p) => write!(f, "v{p}"),
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownVariable(s.to_string());
        let (head, idx) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let idx: usize = idx.parse().map_err(|_| unknown())?;
        if idx == 0 {
            return Err(unknown());
        }
        match head {
            "u" => Ok(Var::U(idx)),
            "v" => Ok(Var::V(idx)),
            _ => Err(unknown()),
        }
    }
}

/// Variable context: `n` u-variables and `m` v-variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VarSpace {
    pub n: usize,
    pub m: usize,
}

impl VarSpace {
    pub fn new(n: usize, m: usize) -> Self {
        VarSpace { n, m }
    }

    pub fn arity(&self) -> usize {
        self.n + self.m
    }

    pub fn slot(&self, var: Var) -> Result<usize> {
        match var {
            Var::U(i) if (1..=self.n).contains(&i) => Ok(i - 1),
            Var::V(p) if (1..=self.m).contains(&p) => Ok(self.n + p - 1),
            _ => Err(Error::UnknownVariable(var.to_string())),
        }
    }

    pub fn var(&self, slot: usize) -> Var {
        if slot < self.n {
            Var::U(slot + 1)
        } else {
            Var::V(slot - self.n + 1)
        }
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        (0..self.arity()).map(|s| self.var(s))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    space: VarSpace,
    terms: BTreeMap<Vec<u32>, Rational>,
}

/// `constant + sum coeff * var`, the right-hand side of a substitution.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LinearForm {
    pub constant: Rational,
    pub terms: Vec<(Var, Rational)>,
}

impl LinearForm {
    pub fn constant(c: Rational) -> Self {
        LinearForm {
            constant: c,
            terms: Vec::new(),
        }
    }

    pub fn var(v: Var) -> Self {
        LinearForm {
            constant: Rational::zero(),
            terms: vec![(v, Rational::one())],
        }
    }

    pub fn scaled_var(v: Var, coeff: Rational) -> Self {
        LinearForm {
            constant: Rational::zero(),
            terms: vec![(v, coeff)],
        }
    }

    pub fn plus(mut self, c: Rational) -> Self {
        self.constant += c;
        self
    }

    pub fn to_poly(&self, space: VarSpace) -> Result<MultiPoly> {
        let mut out = MultiPoly::constant(space, self.constant.clone());
        for (v, c) in &self.terms {
            out = &out + &MultiPoly::var(space, *v)?.scale(c);
        }
        Ok(out)
    }
}

impl MultiPoly {
    pub fn zero(space: VarSpace) -> Self {
        MultiPoly {
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(space: VarSpace, c: Rational) -> Self {
        let mut p = Self::zero(space);
        p.add_term(vec![0; space.arity()], c);
        p
    }

    pub fn one(space: VarSpace) -> Self {
        Self::constant(space, Rational::one())
    }

    pub fn var(space: VarSpace, v: Var) -> Result<Self> {
        let mut exps = vec![0; space.arity()];
        exps[space.slot(v)?] = 1;
        let mut p = Self::zero(space);
        p.add_term(exps, Rational::one());
        Ok(p)
    }

    /// Builds from `(coefficient, [(var, exponent)])` terms.
    pub fn from_terms<I>(space: VarSpace, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, Vec<(Var, u32)>)>,
    {
        let mut p = Self::zero(space);
        for (c, powers) in terms {
            let mut exps = vec![0; space.arity()];
            for (v, e) in powers {
                exps[space.slot(v)?] += e;
            }
            p.add_term(exps, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Homogeneous component of the given total degree.
    pub fn homogeneous_part(&self, degree: u32) -> Self {
        MultiPoly {
            space: self.space,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Constant coefficient when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.total_degree() {
            None => Some(Rational::zero()),
            Some(0) => self.terms.values().next().cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(self.space);
        }
        MultiPoly {
            space: self.space,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.space);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, values: &[Rational]) -> Result<Rational> {
        if values.len() != self.space.arity() {
            return Err(Error::DimensionMismatch {
                left_n: self.space.n,
                left_m: self.space.m,
                right_n: values.len(),
                right_m: 0,
            });
        }
        Ok(self
            .terms
            .iter()
            .map(|(exps, c)| {
                exps.iter().zip(values).fold(
                    c.clone(),
                    |acc, (&e, x)| if e == 0 { acc } else { acc * x.powu(e) },
                )
            })
            .sum())
    }

    /// Simultaneous substitution of linear forms for variables. Unassigned
    /// variables stay as they are.
    pub fn substitute(&self, assignments: &[(Var, LinearForm)]) -> Result<Self> {
        let space = self.space;
        let mut images: Vec<Option<MultiPoly>> = vec![None; space.arity()];
        for (v, form) in assignments {
            for (w, _) in &form.terms {
                space.slot(*w)?;
            }
            images[space.slot(*v)?] = Some(form.to_poly(space)?);
        }

        let mut power_cache: HashMap<(usize, u32), MultiPoly> = HashMap::new();
        let mut out = Self::zero(space);
        for (exps, c) in &self.terms {
            let mut kept = vec![0; space.arity()];
            let mut term = Self::one(space);
            for (slot, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match &images[slot] {
                    None => kept[slot] = e,
                    Some(img) => {
                        let pw = power_cache.entry((slot, e)).or_insert_with(|| img.pow(e));
                        term = &term * pw;
                    }
                }
            }
            let mut mono = Self::zero(space);
            mono.add_term(kept, c.clone());
            out = &out + &(&mono * &term);
        }
        Ok(out)
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: Var, b: Var) -> Result<Self> {
        let (sa, sb) = (self.space.slot(a)?, self.space.slot(b)?);
        let mut out = Self::zero(self.space);
        for (exps, c) in &self.terms {
            let mut e = exps.clone();
            e.swap(sa, sb);
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    /// Re-expresses the polynomial over `target`, which must contain every
    /// variable actually used.
    pub fn embed(&self, target: VarSpace) -> Result<Self> {
        if target == self.space {
            return Ok(self.clone());
        }
        let mut out = Self::zero(target);
        for (exps, c) in &self.terms {
            let mut e = vec![0; target.arity()];
            for (s, &k) in exps.iter().enumerate() {
                if k > 0 {
                    e[target.slot(self.space.var(s))?] = k;
                }
            }
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    pub fn to_terms_json(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(exps, c)| TermJson {
                coeff: c.clone(),
                exps: exps
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(s, &e)| (self.space.var(s).to_string(), e))
                    .collect(),
            })
            .collect()
    }

    pub fn from_terms_json(space: VarSpace, terms: &[TermJson]) -> Result<Self> {
        let parsed = terms
            .iter()
            .map(|t| {
                let powers = t
                    .exps
                    .iter()
                    .map(|(name, &e)| Ok((name.parse::<Var>()?, e)))
                    .collect::<Result<Vec<_>>>()?;
                Ok((t.coeff.clone(), powers))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(space, parsed)
    }
}

/// Wire form of one term: `{"coeff": "p/q", "exps": {"u1": 2, "v1": 1}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: Rational,
    pub exps: BTreeMap<String, u32>,
}

fn check_space(a: &MultiPoly, b: &MultiPoly) {
    assert_eq!(
        a.space, b.space,
        "polynomials live in different variable spaces"
    );
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        check_space(self, rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        check_space(self, rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        check_space(self, rhs);
        let mut out = MultiPoly::zero(self.space);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea
                    .iter()
                    .zip(eb)
                    .map(|(x, y)| x.checked_add(*y).expect("exponent overflow"))
                    .collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (exps, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (s, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*{}", self.space.var(s))?,
                    _ => write!(f, "*{}^{e}", self.space.var(s))?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}x{}]({self})", self.space.n, self.space.m)
    }
}

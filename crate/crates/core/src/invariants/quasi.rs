//! Symbolic quasi-invariance check.
//!
//! A polynomial `f(u, v)` is an invariant of the action when it is symmetric
//! in the `u` and in the `v` separately, and for every pair `(i, p)`
//! `f(u + e_i/2, v - e_p/2) - f(u - e_i/2, v + e_p/2)` vanishes identically
//! after substituting `u_i = kappa v_p`. Both conditions are checked exactly.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exactmath::{LinearForm, MultiPoly, Rational, TermJson, Var, VarSpace};
use crate::groupoid::Kappa;

/// Residuals are kept in the term wire form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum QuasiFailure {
    /// `f` changes under the transposition `a <-> b`; residual is `f - f∘swap`.
    Symmetry {
        a: String,
        b: String,
        residual: Vec<TermJson>,
    },
    /// Shift difference left nonzero on `u_i = kappa v_p`.
    Hyperplane {
        i: usize,
        p: usize,
        residual: Vec<TermJson>,
    },
}

impl QuasiFailure {
    pub fn residual(&self) -> &[TermJson] {
        match self {
            QuasiFailure::Symmetry { residual, .. } | QuasiFailure::Hyperplane { residual, .. } => {
                residual
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiReport {
    pub invariant: bool,
    pub failure: Option<QuasiFailure>,
}

impl QuasiReport {
    fn pass() -> Self {
        QuasiReport {
            invariant: true,
            failure: None,
        }
    }

    fn fail(f: QuasiFailure) -> Self {
        QuasiReport {
            invariant: false,
            failure: Some(f),
        }
    }

    /// The residual as a constant, when the failure left one.
    pub fn constant_residual(&self) -> Option<Rational> {
        match self.failure.as_ref()?.residual() {
            [] => Some(Rational::zero()),
            [t] if t.exps.values().all(|&e| e == 0) => Some(t.coeff.clone()),
            _ => None,
        }
    }
}

/// Checks `f` (embedded into `n` u- and `m` v-variables) for invariance.
/// Reports the first failure found: transpositions first, then `(i, p)` in
/// lexicographic order.
pub fn is_quasi_invariant(f: &MultiPoly, n: usize, m: usize, kappa: &Kappa) -> Result<QuasiReport> {
    let space = VarSpace::new(n, m);
    let f = f.embed(space)?;

    let transpositions = (1..n)
        .map(|i| (Var::U(i), Var::U(i + 1)))
        .chain((1..m).map(|p| (Var::V(p), Var::V(p + 1))));
    for (a, b) in transpositions {
        let residual = &f - &f.swap_vars(a, b)?;
        if !residual.is_zero() {
            return Ok(QuasiReport::fail(QuasiFailure::Symmetry {
                a: a.to_string(),
                b: b.to_string(),
                residual: residual.to_terms_json(),
            }));
        }
    }

    let half = Rational::frac(1, 2);
    for i in 1..=n {
        for p in 1..=m {
            let (u, v) = (Var::U(i), Var::V(p));
            let plus = f.substitute(&[
                (u, LinearForm::var(u).plus(half.clone())),
                (v, LinearForm::var(v).plus(-&half)),
            ])?;
            let minus = f.substitute(&[
                (u, LinearForm::var(u).plus(-&half)),
                (v, LinearForm::var(v).plus(half.clone())),
            ])?;
            let residual = (&plus - &minus)
                .substitute(&[(u, LinearForm::scaled_var(v, kappa.value().clone()))])?;
            if !residual.is_zero() {
                return Ok(QuasiReport::fail(QuasiFailure::Hyperplane {
                    i,
                    p,
                    residual: residual.to_terms_json(),
                }));
            }
        }
    }
    Ok(QuasiReport::pass())
}

/// Parses the JSON term-array wire form into a polynomial over `(n, m)`.
pub fn parse_terms(json: &str, n: usize, m: usize) -> Result<MultiPoly> {
    let terms: Vec<TermJson> =
        serde_json::from_str(json).map_err(|e| crate::error::Error::Parse(e.to_string()))?;
    MultiPoly::from_terms_json(VarSpace::new(n, m), &terms)
}

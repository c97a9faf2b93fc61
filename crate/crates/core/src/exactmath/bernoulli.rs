//! Bernoulli numbers and polynomials, with `B_1(x) = x - 1/2`.

use super::rational::Rational;
use super::unipoly::UniPoly;

/// Binomial coefficients `C(n, k)` for `k = 0..=n`, exact.
pub(crate) fn binomial_row(n: usize) -> Vec<Rational> {
    let mut row = vec![Rational::one()];
    for k in 1..=n {
        let prev = row[k - 1].clone();
        row.push(prev * Rational::frac((n + 1 - k) as i64, k as i64));
    }
    row
}

/// Bernoulli numbers `b_0..=b_max` from `sum_{k=0}^{l} C(l+1, k) b_k = 0`.
pub fn bernoulli_numbers(max: usize) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for l in 1..=max {
        let row = binomial_row(l + 1);
        let s: Rational = (0..l).map(|k| &row[k] * &b[k]).sum();
        b.push(-s / Rational::from_integer(l as i64 + 1));
    }
    b
}

/// `B_l(x) = sum_k C(l, k) b_k x^{l-k}`.
pub fn bernoulli_poly(l: usize) -> UniPoly {
    let b = bernoulli_numbers(l);
    poly_from_numbers(l, &b)
}

fn poly_from_numbers(l: usize, b: &[Rational]) -> UniPoly {
    let row = binomial_row(l);
    let mut coeffs = vec![Rational::zero(); l + 1];
    for k in 0..=l {
        coeffs[l - k] = &row[k] * &b[k];
    }
    UniPoly::from_coeffs(coeffs)
}

/// `B_0..=B_max`, built once.
#[derive(Clone, Debug)]
pub struct BernoulliTable {
    polys: Vec<UniPoly>,
}

impl BernoulliTable {
    pub fn new(max: usize) -> Self {
        let b = bernoulli_numbers(max);
        BernoulliTable {
            polys: (0..=max).map(|l| poly_from_numbers(l, &b)).collect(),
        }
    }

    pub fn max_index(&self) -> usize {
        self.polys.len() - 1
    }

    /// `B_l`, computing it on the fly past the table end.
    pub fn get(&self, l: usize) -> std::borrow::Cow<'_, UniPoly> {
        match self.polys.get(l) {
            Some(p) => std::borrow::Cow::Borrowed(p),
            None => std::borrow::Cow::Owned(bernoulli_poly(l)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn low_order_polynomials() {
        assert_eq!(bernoulli_poly(0), UniPoly::one());
        assert_eq!(
            bernoulli_poly(1),
            UniPoly::from_coeffs(vec![r("-1/2"), r("1")])
        );
        assert_eq!(
            bernoulli_poly(2),
            UniPoly::from_coeffs(vec![r("1/6"), r("-1"), r("1")])
        );
    }

    #[test]
    fn known_numbers() {
        let b = bernoulli_numbers(12);
        let expected = [
            "1",
            "-1/2",
            "1/6",
            "0",
            "-1/30",
            "0",
            "1/42",
            "0",
            "-1/30",
            "0",
            "5/66",
            "0",
            "-691/2730",
        ];
        for (got, want) in b.iter().zip(expected) {
            assert_eq!(got, &r(want));
        }
    }

    #[test]
    fn unit_difference_identity() {
        let table = BernoulliTable::new(13);
        for l in 1..=13 {
            let b = table.get(l);
            let diff = &b.shift(&Rational::one()) - &b;
            let mut want = vec![Rational::zero(); l];
            want[l - 1] = Rational::from_integer(l as i64);
            assert_eq!(diff, UniPoly::from_coeffs(want), "l = {l}");
            assert_eq!(b.degree(), Some(l));
        }
    }
}

//! Truncated power series `Σ_{t=0}^{order} c_t h^t` over a [`Field`].

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct Series<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Series<F> {
    /// The constant `1` truncated at `order`.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![F::zero(); order + 1];
        coeffs[0] = F::one();
        Series { coeffs }
    }

    /// Pads or truncates `coeffs` to `order`.
    pub fn from_coeffs(mut coeffs: Vec<F>, order: usize) -> Self {
        coeffs.resize(order + 1, F::zero());
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, t: usize) -> F {
        self.coeffs.get(t).cloned().unwrap_or_else(F::zero)
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    /// In-place multiplication by the linear factor `(c + h)`.
    pub fn mul_linear(&mut self, c: &F) {
        for t in (0..self.coeffs.len()).rev() {
            let lower = if t > 0 { self.coeffs[t - 1].clone() } else { F::zero() };
            self.coeffs[t] = c.clone() * self.coeffs[t].clone() + lower;
        }
    }

    /// In-place division by the linear factor `(c + h)`, `c ≠ 0`.
    pub fn div_linear(&mut self, c: &F) -> Result<()> {
        if c.is_zero() {
            return Err(Error::NonInvertibleSeries);
        }
        let mut prev = F::zero();
        for t in 0..self.coeffs.len() {
            let q = (self.coeffs[t].clone() - prev) / c.clone();
            self.coeffs[t] = q.clone();
            prev = q;
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![F::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Series { coeffs: out }
    }

    /// `1/self` by the triangular recurrence
    /// `r_0 = 1/c_0`, `r_t = −(Σ_{k=1}^{t} c_k r_{t−k}) / c_0`.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = self.coeffs[0].clone();
        if c0.is_zero() {
            return Err(Error::NonInvertibleSeries);
        }
        let mut r: Vec<F> = Vec::with_capacity(self.coeffs.len());
        r.push(F::one() / c0.clone());
        for t in 1..self.coeffs.len() {
            let acc = (1..=t).fold(F::zero(), |acc, k| acc + self.coeffs[k].clone() * r[t - k].clone());
            r.push(-acc / c0.clone());
        }
        Ok(Series { coeffs: r })
    }

    /// `self / other` via the reciprocal of `other`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.reciprocal()?))
    }

    /// Termwise derivative; the order drops by one.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Series { coeffs: vec![F::zero()] };
        }
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(t, c)| F::from_i64(t as i64) * c.clone())
                .collect(),
        }
    }

    /// Drops the first `k` coefficients: division by `h^k` when they vanish.
    pub fn shift_down(&self, k: usize) -> Self {
        let order = self.order().saturating_sub(k);
        Series::from_coeffs(self.coeffs.iter().skip(k).cloned().collect(), order)
    }

    pub fn eval(&self, h: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * h.clone() + c.clone())
    }
}

/// Taylor coefficients about `center` of `Π (z − τ_m)^{p_m}`, truncated at
/// `order`, built by repeated multiplication with shifted linear factors.
pub fn product_taylor<'a, F: Field>(
    factors: impl IntoIterator<Item = (&'a F, usize)>,
    center: &F,
    order: usize,
) -> Series<F> {
    let mut s = Series::one(order);
    for (tau, power) in factors {
        let shift = center.clone() - tau.clone();
        for _ in 0..power {
            s.mul_linear(&shift);
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn series(v: &[i64], order: usize) -> Series<Rational> {
        Series::from_coeffs(v.iter().map(|&c| q(c, 1)).collect(), order)
    }

    #[test]
    fn reciprocal_of_one_minus_h() {
        let s = series(&[1, -1], 5);
        assert_eq!(s.reciprocal().unwrap(), series(&[1, 1, 1, 1, 1, 1], 5));
    }

    #[test]
    fn reciprocal_needs_unit() {
        assert_eq!(series(&[0, 1], 3).reciprocal(), Err(Error::NonInvertibleSeries));
    }

    #[test]
    fn linear_mul_then_div_round_trips() {
        let mut s = series(&[2, -3, 5, 7], 6);
        let orig = s.clone();
        let c = q(-3, 2);
        s.mul_linear(&c);
        s.mul_linear(&c);
        s.div_linear(&c).unwrap();
        s.div_linear(&c).unwrap();
        assert_eq!(s, orig);
    }

    #[test]
    fn div_linear_matches_general_division() {
        let mut s = series(&[1, 2, 3, 4], 3);
        let general = s.div(&series(&[2, 1], 3)).unwrap();
        s.div_linear(&q(2, 1)).unwrap();
        assert_eq!(s, general);
    }

    #[test]
    fn derivative_and_shift() {
        let s = series(&[0, 0, 1, 4], 3);
        assert_eq!(s.derivative(), series(&[0, 2, 12], 2));
        assert_eq!(s.shift_down(2), series(&[1, 4], 1));
    }

    #[test]
    fn product_taylor_expands_cubic() {
        // (z+1) z (z-1) about 0 is z^3 - z.
        let nodes = [q(-1, 1), q(0, 1), q(1, 1)];
        let s = product_taylor(nodes.iter().map(|t| (t, 1)), &q(0, 1), 3);
        assert_eq!(s, series(&[0, -1, 0, 1], 3));
        assert_eq!(s.eval(&q(1, 2)), q(-3, 8));
    }
}

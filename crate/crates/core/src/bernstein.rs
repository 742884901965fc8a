//! Bernstein basis `B_i^n(x) = C(n,i) x^i (1−x)^{n−i}` on `[0, 1]`.
//!
//! The derivative is expressed in the same degree-`n` basis, so `D` is
//! square and tridiagonal.

use crate::field::{Field, Rational};
use crate::matrix::Matrix;

/// `[D]_{i,i} = 2i − n`, `[D]_{i,i−1} = −i`, `[D]_{i,i+1} = n − i`.
pub fn diff_matrix_bernstein<F: Field>(n: usize) -> Matrix<F> {
    let n_i = n as i64;
    Matrix::from_fn(n + 1, n + 1, |i, j| {
        let i_i = i as i64;
        if j == i {
            F::from_i64(2 * i_i - n_i)
        } else if j + 1 == i {
            F::from_i64(-i_i)
        } else if j == i + 1 {
            F::from_i64(n_i - i_i)
        } else {
            F::zero()
        }
    })
}

/// `p(x) = Σ c_i B_i^n(x)` by de Casteljau's algorithm.
pub fn bernstein_eval<F: Field>(coeffs: &[F], x: &F) -> F {
    let mut b = coeffs.to_vec();
    let one_minus = F::one() - x.clone();
    for r in 1..b.len() {
        for i in 0..b.len() - r {
            b[i] = one_minus.clone() * b[i].clone() + x.clone() * b[i + 1].clone();
        }
    }
    b.into_iter().next().unwrap_or_else(F::zero)
}

/// Bernstein coefficients of `x^k` in degree `n`: entry `i` is
/// `C(i,k) / C(n,k)`.
pub fn monomial_image<F: Field>(n: usize, k: usize) -> Vec<F> {
    let denom = binomial(n, k);
    (0..=n)
        .map(|i| F::from_rational(&(Rational::from_integer(binomial(i, k).into()) / Rational::from_integer(denom.into()))))
        .collect()
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, j| acc * (n - j) as u128 / (j + 1) as u128)
}

#[derive(Clone, Debug, PartialEq)]
pub struct NormRow {
    pub n: usize,
    pub norm_d: Rational,
    pub norm_d_pow_n: Rational,
    /// `D^{n+1} = 0`.
    pub next_power_vanishes: bool,
}

/// Exact `‖D‖_∞` and `‖Dⁿ‖_∞` for `1 ≤ n ≤ n_max`.
pub fn bernstein_norm_table(n_max: usize) -> Vec<NormRow> {
    (1..=n_max)
        .map(|n| {
            let d = diff_matrix_bernstein::<Rational>(n);
            let dn = d.power(n).expect("square");
            let next = &dn * &d;
            NormRow {
                n,
                norm_d: d.inf_norm_exact(),
                norm_d_pow_n: dn.inf_norm_exact(),
                next_power_vanishes: next.is_zero(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn degree_four_matrix() {
        let expected = Matrix::<Rational>::from_i64_rows(&[
            &[-4, 4, 0, 0, 0],
            &[-1, -2, 3, 0, 0],
            &[0, -2, 0, 2, 0],
            &[0, 0, -3, 2, 1],
            &[0, 0, 0, -4, 4],
        ])
        .unwrap();
        let d = diff_matrix_bernstein::<Rational>(4);
        assert_eq!(d, expected);
        assert_eq!(d.inf_norm(), 8.0);
        assert_eq!(d.power(4).unwrap().inf_norm_exact(), q(384, 1));
    }

    #[test]
    fn constant_vector_annihilated() {
        let d = diff_matrix_bernstein::<Rational>(4);
        let c = vec![q(3, 7); 5];
        assert!(d.apply(&c).unwrap().iter().all(|v| v == &q(0, 1)));
    }

    #[test]
    fn first_column_is_derivative_of_b0() {
        // d/dx B_0^n = -n B_0^n - B_1^n
        let n = 6;
        let col = diff_matrix_bernstein::<Rational>(n).column(0);
        assert_eq!(col[0], q(-(n as i64), 1));
        assert_eq!(col[1], q(-1, 1));
        assert!(col[2..].iter().all(|v| v == &q(0, 1)));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(bernstein_eval(&vec![q(1, 1); 6], &q(2, 9)), q(1, 1));
        assert_eq!(bernstein_eval(&[q(0, 1), q(1, 1)], &q(1, 3)), q(1, 3));
        assert_eq!(bernstein_eval(&[q(0, 1), q(0, 1), q(1, 1)], &q(1, 2)), q(1, 4));
    }

    #[test]
    fn monomial_images_evaluate_to_powers() {
        let n = 5;
        for k in 0..=n {
            let c = monomial_image::<Rational>(n, k);
            let x = q(3, 7);
            let expected = (0..k).fold(q(1, 1), |acc, _| acc * x.clone());
            assert_eq!(bernstein_eval(&c, &x), expected);
        }
    }

    #[test]
    fn norm_table_small_cases() {
        let t = bernstein_norm_table(6);
        assert_eq!(t[0].norm_d, q(2, 1));
        assert_eq!(t[0].norm_d_pow_n, q(2, 1));
        assert_eq!(t[3].norm_d, q(8, 1));
        assert_eq!(t[3].norm_d_pow_n, q(384, 1));
        assert_eq!(t[5].norm_d_pow_n, q(46080, 1));
        assert!(t.iter().all(|r| r.next_power_vanishes));
    }
}

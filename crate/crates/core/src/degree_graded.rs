//! Degree-graded bases: the general three-term-recurrence construction,
//! explicit monomial / Chebyshev / Legendre / Newton matrices, the
//! Chebyshev and Legendre antiderivative matrices, and (confluent) divided
//! differences.
//!
//! Every matrix here maps coefficient vectors as `b = D·a`: column `k`
//! holds the expansion of `φ_k′`.

use crate::basis::{NodeSet, RecurrenceSpec};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// Differentiation matrix of the basis generated by `rec`.
///
/// Builds the lower-triangular table `Q` (1-indexed, `Q[i][j]` is the
/// coefficient of `φ_{j−1}` in `φ_i′`):
///
/// ```text
/// Q[i][i] = i / α_{i−1}
/// Q[i][j] = ( (β_{j−1} − β_{i−1}) Q[i−1][j] + α_{j−2} Q[i−1][j−1]
///           + γ_j Q[i−1][j+1] − γ_{i−1} Q[i−2][j] ) / α_{i−1},   i > j
/// ```
///
/// Terms whose `Q` or coefficient index is zero or negative are skipped,
/// as are `Q[i−1][j+1]` with `j+1 > i−1` (known zero).
pub fn diff_matrix_degree_graded<F: Field>(rec: &RecurrenceSpec<F>) -> Matrix<F> {
    let n = rec.degree();
    let (alpha, beta, gamma) = (rec.alpha(), rec.beta(), rec.gamma());
    let mut q = vec![vec![F::zero(); n + 1]; n + 1];
    for i in 1..=n {
        let inv_alpha = F::one() / alpha[i - 1].clone();
        q[i][i] = F::from_i64(i as i64) * inv_alpha.clone();
        for j in 1..i {
            let mut acc = (beta[j - 1].clone() - beta[i - 1].clone()) * q[i - 1][j].clone();
            if j >= 2 {
                acc = acc + alpha[j - 2].clone() * q[i - 1][j - 1].clone();
            }
            if j < i - 1 {
                acc = acc + gamma[j].clone() * q[i - 1][j + 1].clone();
            }
            if i >= 3 {
                acc = acc - gamma[i - 1].clone() * q[i - 2][j].clone();
            }
            q[i][j] = acc * inv_alpha.clone();
        }
    }
    let mut d = Matrix::zeros(n + 1, n + 1);
    for (i, row) in q.iter().enumerate().skip(1) {
        for (j, v) in row.iter().enumerate().take(i + 1).skip(1) {
            d.set(j - 1, i, v.clone());
        }
    }
    d
}

/// `d/dx x^k = k x^{k−1}`.
pub fn monomial_diff_matrix<F: Field>(n: usize) -> Matrix<F> {
    Matrix::from_fn(n + 1, n + 1, |i, j| {
        if j == i + 1 {
            F::from_i64(j as i64)
        } else {
            F::zero()
        }
    })
}

/// Chebyshev `T_k′ = 2k Σ T_{k−1−2j}` over positive indices, plus `k·T_0`
/// when `k` is odd.
pub fn chebyshev_diff_matrix<F: Field>(n: usize) -> Matrix<F> {
    let mut d = Matrix::zeros(n + 1, n + 1);
    for k in 1..=n {
        let two_k = F::from_i64(2 * k as i64);
        let mut m = k as i64 - 1;
        while m >= 1 {
            d.set(m as usize, k, two_k.clone());
            m -= 2;
        }
        if k % 2 == 1 {
            d.set(0, k, F::from_i64(k as i64));
        }
    }
    d
}

/// Legendre `P_k′ = Σ_{m = k−1, k−3, …} (2m+1) P_m`.
pub fn legendre_diff_matrix<F: Field>(n: usize) -> Matrix<F> {
    let mut d = Matrix::zeros(n + 1, n + 1);
    for k in 1..=n {
        let mut m = k as i64 - 1;
        while m >= 0 {
            d.set(m as usize, k, F::from_i64(2 * m + 1));
            m -= 2;
        }
    }
    d
}

/// Newton basis on `z_0..z_n` (repeats allowed). `z_n` does not enter.
pub fn newton_diff_matrix<F: Field>(z: &[F]) -> Result<Matrix<F>> {
    if z.is_empty() {
        return Err(Error::EmptyNodes);
    }
    Ok(diff_matrix_degree_graded(&RecurrenceSpec::newton(z)))
}

/// Antiderivative in the Chebyshev basis:
/// `∫T_0 = T_1`, `∫T_1 = T_2/4`, `∫T_k = T_{k+1}/(2(k+1)) − T_{k−1}/(2(k−1))`.
/// The constant slot (row 0) is zero and `T_{n+1}` terms are truncated.
pub fn chebyshev_antideriv_matrix<F: Field>(n: usize) -> Matrix<F> {
    let mut s = Matrix::zeros(n + 1, n + 1);
    if n >= 1 {
        s.set(1, 0, F::one());
    }
    for k in 1..=n {
        if k < n {
            s.set(k + 1, k, F::ratio(1, 2 * (k as i64 + 1)));
        }
        if k >= 2 {
            s.set(k - 1, k, F::ratio(-1, 2 * (k as i64 - 1)));
        }
    }
    s
}

/// Antiderivative in the Legendre basis: `∫P_k = (P_{k+1} − P_{k−1})/(2k+1)`,
/// constant slot zero, `P_{n+1}` truncated.
pub fn legendre_antideriv_matrix<F: Field>(n: usize) -> Matrix<F> {
    let mut s = Matrix::zeros(n + 1, n + 1);
    for k in 0..=n {
        let denom = 2 * k as i64 + 1;
        if k < n {
            s.set(k + 1, k, F::ratio(1, denom));
        }
        if k >= 2 {
            s.set(k - 1, k, F::ratio(-1, denom));
        }
    }
    s
}

/// Newton coefficients `a_j = [P_0, …, P_j]` for Hermite data.
///
/// `data` follows the node-major layout `[f(τ_0), f′(τ_0)/1!, …]`. Blocks
/// of repeated nodes use the confluent rule `[P_i, …, P_i] (m times) =
/// f^{(m−1)}(τ_i)/(m−1)!`, which is read straight from `data`.
pub fn divided_differences<F: Field>(nodes: &NodeSet<F>, data: &[F]) -> Result<Vec<F>> {
    let dim = nodes.dimension();
    if data.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: data.len(),
        });
    }
    // For each expanded slot: owning node, and the slot where its block starts.
    let mut owner = Vec::with_capacity(dim);
    let mut block_start = Vec::with_capacity(dim);
    for (i, (&s, off)) in nodes.confluencies().iter().zip(nodes.offsets()).enumerate() {
        for _ in 0..s {
            owner.push(i);
            block_start.push(off);
        }
    }
    let z = nodes.expanded();
    // table[i] holds [P_i, …, P_{i+level}] after each sweep.
    let mut table: Vec<F> = (0..dim).map(|i| data[block_start[i]].clone()).collect();
    let mut coeffs = Vec::with_capacity(dim);
    coeffs.push(table[0].clone());
    for level in 1..dim {
        for i in 0..dim - level {
            let last = i + level;
            table[i] = if owner[i] == owner[last] {
                data[block_start[i] + level].clone()
            } else {
                (table[i + 1].clone() - table[i].clone()) / (z[last].clone() - z[i].clone())
            };
        }
        coeffs.push(table[0].clone());
    }
    Ok(coeffs)
}

/// Evaluates `Σ a_k N_k(x)` by nested multiplication.
pub fn newton_eval<F: Field>(z: &[F], coeffs: &[F], x: &F) -> F {
    let mut acc = F::zero();
    for k in (0..coeffs.len()).rev() {
        acc = if k < coeffs.len() - 1 {
            coeffs[k].clone() + (x.clone() - z[k].clone()) * acc
        } else {
            coeffs[k].clone()
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| q(x, 1)).collect()
    }

    #[test]
    fn recurrence_with_monomial_coefficients() {
        let d = diff_matrix_degree_graded(&RecurrenceSpec::<Rational>::monomial(3));
        let expected =
            Matrix::from_i64_rows(&[&[0, 1, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 3], &[0, 0, 0, 0]]).unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn monomial_apply() {
        let d = monomial_diff_matrix::<Rational>(3);
        assert_eq!(d.apply(&ints(&[5, 0, 0, 1])).unwrap(), ints(&[0, 0, 3, 0]));
        assert_eq!(d.inf_norm(), 3.0);
    }

    #[test]
    fn chebyshev_first_row_and_column_three() {
        let d = chebyshev_diff_matrix::<Rational>(7);
        assert_eq!(d.row(0).to_vec(), ints(&[0, 1, 0, 3, 0, 5, 0, 7]));
        assert_eq!(d.column(3)[..4].to_vec(), ints(&[3, 0, 6, 0]));
        assert_eq!(d, diff_matrix_degree_graded(&RecurrenceSpec::chebyshev(7)));
    }

    #[test]
    fn chebyshev_zero_degree() {
        assert_eq!(chebyshev_diff_matrix::<Rational>(0), Matrix::zeros(1, 1));
    }

    #[test]
    fn chebyshev_differentiates_cubic() {
        // x^3 = (3 T_1 + T_3)/4 and 3x^2 = 3(T_0 + T_2)/2.
        let d = chebyshev_diff_matrix::<Rational>(3);
        let cubic = vec![q(0, 1), q(3, 4), q(0, 1), q(1, 4)];
        assert_eq!(d.apply(&cubic).unwrap(), vec![q(3, 2), q(0, 1), q(3, 2), q(0, 1)]);
    }

    #[test]
    fn legendre_column_three() {
        let d = diff_matrix_degree_graded(&RecurrenceSpec::<Rational>::legendre(7));
        assert_eq!(d.column(3)[..4].to_vec(), ints(&[1, 0, 5, 0]));
        assert_eq!(d, legendre_diff_matrix(7));
    }

    #[test]
    fn chebyshev_antiderivative_columns() {
        let s = chebyshev_antideriv_matrix::<Rational>(3);
        assert_eq!(s.column(0), ints(&[0, 1, 0, 0]));
        assert_eq!(s.column(1), vec![q(0, 1), q(0, 1), q(1, 4), q(0, 1)]);
        let s5 = chebyshev_antideriv_matrix::<Rational>(5);
        assert_eq!(
            s5.column(2)[..5].to_vec(),
            vec![q(0, 1), q(-1, 2), q(0, 1), q(1, 6), q(0, 1)]
        );
        assert!(s5.row(0).iter().all(|v| v == &q(0, 1)));
    }

    #[test]
    fn legendre_antiderivative_entries() {
        let s = legendre_antideriv_matrix::<Rational>(5);
        assert_eq!(s[(1, 0)], q(1, 1));
        assert_eq!(s[(1, 2)], q(-1, 5));
        assert_eq!(s[(2, 1)], q(1, 3));
        assert_eq!(s[(3, 4)], q(-1, 9));
        assert_eq!(s[(0, 1)], q(0, 1));
    }

    #[test]
    fn newton_all_equal_nodes_is_monomial() {
        let d = newton_diff_matrix(&ints(&[0, 0, 0, 0])).unwrap();
        assert_eq!(d, monomial_diff_matrix(3));
    }

    #[test]
    fn newton_sample_entries() {
        let d = newton_diff_matrix(&ints(&[0, 1, 2, 3, 4])).unwrap();
        assert_eq!(d[(0, 2)], q(-1, 1));
        assert_eq!(d[(2, 4)], q(-6, 1));
        assert_eq!(d[(3, 4)], q(4, 1));
        assert!(d.is_strictly_upper_triangular());
    }

    #[test]
    fn newton_requires_nodes() {
        assert_eq!(newton_diff_matrix::<Rational>(&[]), Err(Error::EmptyNodes));
    }

    #[test]
    fn divided_differences_of_square() {
        let ns = NodeSet::simple(ints(&[0, 1, 2])).unwrap();
        let a = divided_differences(&ns, &ints(&[0, 1, 4])).unwrap();
        assert_eq!(a, ints(&[0, 1, 1]));
    }

    #[test]
    fn divided_differences_of_constant() {
        let ns = NodeSet::simple(vec![q(-1, 3), q(2, 7), q(5, 1), q(9, 2)]).unwrap();
        let c = q(7, 3);
        let a = divided_differences(&ns, &vec![c.clone(); 4]).unwrap();
        assert_eq!(a, vec![c, q(0, 1), q(0, 1), q(0, 1)]);
    }

    #[test]
    fn confluent_divided_differences() {
        // p = x with p(0) = 0, p'(0) = 1, p(1) = 1.
        let ns = NodeSet::confluent(ints(&[0, 1]), vec![2, 1]).unwrap();
        let a = divided_differences(&ns, &ints(&[0, 1, 1])).unwrap();
        assert_eq!(a, ints(&[0, 1, 0]));
    }

    #[test]
    fn divided_differences_length_checked() {
        let ns = NodeSet::simple(ints(&[0, 1])).unwrap();
        assert!(divided_differences(&ns, &ints(&[1])).is_err());
    }

    #[test]
    fn newton_eval_reproduces_square() {
        let z = ints(&[0, 1, 2]);
        for x in -3..4 {
            assert_eq!(newton_eval(&z, &ints(&[0, 1, 1]), &q(x, 1)), q(x * x, 1));
        }
    }
}

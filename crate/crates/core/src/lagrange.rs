//! Barycentric Lagrange interpolation and its differentiation matrix.

use crate::basis::NodeSet;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// Simple barycentric weights `β_k = Π_{j≠k} (τ_k − τ_j)^{−1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct BaryWeights<F> {
    nodes: NodeSet<F>,
    weights: Vec<F>,
}

pub fn bary_weights<F: Field>(nodes: &NodeSet<F>) -> Result<BaryWeights<F>> {
    if !nodes.is_simple() {
        return Err(Error::ConfluentNodes);
    }
    let tau = nodes.nodes();
    let weights = (0..tau.len())
        .map(|k| {
            let prod = tau
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .fold(F::one(), |acc, (_, t)| acc * (tau[k].clone() - t.clone()));
            F::one() / prod
        })
        .collect();
    Ok(BaryWeights {
        nodes: nodes.clone(),
        weights,
    })
}

impl<F: Field> BaryWeights<F> {
    pub fn nodes(&self) -> &NodeSet<F> {
        &self.nodes
    }

    pub fn weights(&self) -> &[F] {
        &self.weights
    }

    /// Node polynomial `w(z) = Π (z − τ_k)`.
    pub fn node_polynomial(&self, z: &F) -> F {
        self.nodes
            .nodes()
            .iter()
            .fold(F::one(), |acc, t| acc * (z.clone() - t.clone()))
    }

    fn check_len(&self, values: &[F]) -> Result<()> {
        if values.len() != self.weights.len() {
            return Err(Error::DimensionMismatch {
                expected: self.weights.len(),
                found: values.len(),
            });
        }
        Ok(())
    }

    fn node_hit(&self, z: &F) -> Option<usize> {
        self.nodes.nodes().iter().position(|t| t == z)
    }

    /// `w(z) Σ β_k ρ_k / (z − τ_k)`; returns `ρ_k` when `z = τ_k`.
    pub fn eval_first_form(&self, values: &[F], z: &F) -> Result<F> {
        self.check_len(values)?;
        if let Some(k) = self.node_hit(z) {
            return Ok(values[k].clone());
        }
        let sum = self
            .nodes
            .nodes()
            .iter()
            .zip(&self.weights)
            .zip(values)
            .fold(F::zero(), |acc, ((t, b), r)| {
                acc + b.clone() * r.clone() / (z.clone() - t.clone())
            });
        Ok(self.node_polynomial(z) * sum)
    }

    /// `Σ β_k ρ_k/(z − τ_k) / Σ β_k/(z − τ_k)`; returns `ρ_k` when `z = τ_k`.
    pub fn eval_second_form(&self, values: &[F], z: &F) -> Result<F> {
        self.check_len(values)?;
        if let Some(k) = self.node_hit(z) {
            return Ok(values[k].clone());
        }
        let (num, den) = self
            .nodes
            .nodes()
            .iter()
            .zip(&self.weights)
            .zip(values)
            .fold((F::zero(), F::zero()), |(num, den), ((t, b), r)| {
                let c = b.clone() / (z.clone() - t.clone());
                (num + c.clone() * r.clone(), den + c)
            });
        Ok(num / den)
    }

    /// Weights divided by their largest modulus, with the divisor.
    /// Both barycentric forms of the derivative matrix are unchanged by
    /// this scaling; the second evaluation form is too.
    pub fn normalized(&self) -> (BaryWeights<F>, F) {
        let top = self.weights.iter().map(Field::modulus).fold(0.0, f64::max);
        let scale = F::from_f64(top).filter(|s| !s.is_zero()).unwrap_or_else(F::one);
        let weights = self.weights.iter().map(|b| b.clone() / scale.clone()).collect();
        (
            BaryWeights {
                nodes: self.nodes.clone(),
                weights,
            },
            scale,
        )
    }
}

/// `d_ij = β_j / (β_i (τ_i − τ_j))` for `i ≠ j`, `d_ii = −Σ_{j≠i} d_ij`.
pub fn diff_matrix_lagrange<F: Field>(nodes: &NodeSet<F>) -> Result<Matrix<F>> {
    let w = bary_weights(nodes)?;
    Ok(diff_matrix_from_weights(&w))
}

pub fn diff_matrix_from_weights<F: Field>(w: &BaryWeights<F>) -> Matrix<F> {
    let tau = w.nodes.nodes();
    let beta = &w.weights;
    let n = tau.len();
    let mut d = Matrix::zeros(n, n);
    for i in 0..n {
        let mut diag = F::zero();
        for j in 0..n {
            if i == j {
                continue;
            }
            let v = beta[j].clone() / (beta[i].clone() * (tau[i].clone() - tau[j].clone()));
            diag = diag - v.clone();
            d.set(i, j, v);
        }
        d.set(i, i, diag);
    }
    d
}

/// Derivative values `b = D·ρ` at the nodes.
pub fn lagrange_derivative_values<F: Field>(nodes: &NodeSet<F>, values: &[F]) -> Result<Vec<F>> {
    diff_matrix_lagrange(nodes)?.apply(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Complex, Rational};

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn nodes(v: &[(i64, i64)]) -> NodeSet<Rational> {
        NodeSet::simple(v.iter().map(|&(n, d)| q(n, d)).collect()).unwrap()
    }

    #[test]
    fn two_node_weights() {
        let w = bary_weights(&nodes(&[(-1, 1), (1, 1)])).unwrap();
        assert_eq!(w.weights(), &[q(-1, 2), q(1, 2)]);
    }

    #[test]
    fn four_node_weights() {
        let w = bary_weights(&nodes(&[(-1, 1), (-1, 2), (1, 2), (1, 1)])).unwrap();
        assert_eq!(w.weights(), &[q(-2, 3), q(4, 3), q(-4, 3), q(2, 3)]);
    }

    #[test]
    fn roots_of_unity_weights() {
        let tau = vec![
            Complex::new(1.0, 0.0),
            Complex::new(0.0, 1.0),
            Complex::new(-1.0, 0.0),
            Complex::new(0.0, -1.0),
        ];
        let w = bary_weights(&NodeSet::simple(tau.clone()).unwrap()).unwrap();
        for (b, t) in w.weights().iter().zip(&tau) {
            // β_k = 1/w'(τ_k) = 1/(4 τ_k^3) = τ_k/4.
            assert!((b - t / 4.0).norm() < 1e-15);
        }
    }

    #[test]
    fn confluent_nodes_rejected() {
        let ns = NodeSet::confluent(vec![q(0, 1), q(1, 1)], vec![2, 1]).unwrap();
        assert_eq!(bary_weights(&ns), Err(Error::ConfluentNodes));
    }

    #[test]
    fn evaluation_table() {
        let w = bary_weights(&nodes(&[(-1, 1), (0, 1), (1, 1)])).unwrap();
        let c = q(5, 3);
        let squares = [q(1, 1), q(0, 1), q(1, 1)];
        let half = q(1, 2);
        for form in [BaryWeights::eval_first_form, BaryWeights::eval_second_form] {
            assert_eq!(form(&w, &[c.clone(), c.clone(), c.clone()], &q(2, 7)).unwrap(), c);
            assert_eq!(form(&w, &squares, &half).unwrap(), q(1, 4));
            assert_eq!(form(&w, &squares, &q(0, 1)).unwrap(), q(0, 1));
        }
    }

    #[test]
    fn derivative_values() {
        let ns = nodes(&[(-1, 1), (0, 1), (1, 1)]);
        let ones = vec![q(1, 1); 3];
        assert_eq!(lagrange_derivative_values(&ns, &[q(-1, 1), q(0, 1), q(1, 1)]).unwrap(), ones);
        assert_eq!(
            lagrange_derivative_values(&ns, &[q(1, 1), q(0, 1), q(1, 1)]).unwrap(),
            vec![q(-2, 1), q(0, 1), q(2, 1)]
        );
        let ns4 = nodes(&[(-1, 1), (-1, 2), (1, 2), (1, 1)]);
        let cubes = [q(-1, 1), q(-1, 8), q(1, 8), q(1, 1)];
        assert_eq!(
            lagrange_derivative_values(&ns4, &cubes).unwrap(),
            vec![q(3, 1), q(3, 4), q(3, 4), q(3, 1)]
        );
    }

    #[test]
    fn paper_four_node_matrix() {
        let d = diff_matrix_lagrange(&nodes(&[(-1, 1), (-1, 2), (1, 2), (1, 1)])).unwrap();
        let expected = Matrix::<Rational>::from_i64_rows(&[
            &[-19, 24, -8, 3],
            &[-6, 2, 6, -2],
            &[2, -6, -2, 6],
            &[-3, 8, -24, 19],
        ])
        .unwrap()
        .scale(&q(1, 6));
        assert_eq!(d, expected);
    }

    #[test]
    fn third_spaced_nodes_give_quarter_of_printed_matrix() {
        let d = diff_matrix_lagrange(&nodes(&[(-1, 1), (-1, 3), (1, 3), (1, 1)])).unwrap();
        assert_eq!(d[(0, 1)], q(9, 2));
        let printed = Matrix::<Rational>::from_i64_rows(&[
            &[-11, 18, -9, 2],
            &[-2, -3, 6, -1],
            &[1, -6, 3, 2],
            &[-2, 9, -18, 11],
        ])
        .unwrap();
        assert_eq!(d.scale(&q(4, 1)), printed);
    }

    #[test]
    fn row_sums_vanish() {
        let d = diff_matrix_lagrange(&nodes(&[(-3, 1), (1, 7), (2, 5), (4, 1), (9, 2)])).unwrap();
        assert!(d.apply(&vec![q(1, 1); 5]).unwrap().iter().all(|v| v == &q(0, 1)));
    }

    #[test]
    fn normalization_preserves_matrix() {
        let w = bary_weights(&nodes(&[(-1, 1), (-1, 3), (1, 3), (1, 1)])).unwrap();
        let (nw, scale) = w.normalized();
        assert_eq!(scale, q(27, 16));
        assert_eq!(diff_matrix_from_weights(&nw), diff_matrix_from_weights(&w));
    }
}

//! Hermite interpolational bases.
//!
//! Data at a node `τ_i` of confluency `s_i` are the scaled derivatives
//! `f(τ_i), f′(τ_i)/1!, …, f^{(s_i−1)}(τ_i)/(s_i−1)!`, and the full data
//! vector is node-major: all slots of `τ_0`, then all slots of `τ_1`, …
//!
//! Generalized barycentric weights `β_{i,j}` are the partial-fraction
//! coefficients of `1/w(z)`, `w(z) = Π (z − τ_i)^{s_i}`, found by local
//! Taylor expansion and series inversion about each node.

use crate::basis::NodeSet;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::series::{product_taylor, Series};

/// Taylor coefficients of `w(z) = Π (z − τ_i)^{s_i}` about `center`,
/// degrees `0..=order`.
pub fn node_polynomial_taylor<F: Field>(nodes: &NodeSet<F>, center: &F, order: usize) -> Series<F> {
    product_taylor(
        nodes.nodes().iter().zip(nodes.confluencies().iter().copied()),
        center,
        order,
    )
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenBaryWeights<F> {
    nodes: NodeSet<F>,
    /// `weights[i][j]` is `β_{i,j} / scale`.
    weights: Vec<Vec<F>>,
    scale: F,
}

pub fn gen_bary_weights<F: Field>(nodes: &NodeSet<F>) -> Result<GenBaryWeights<F>> {
    let tau = nodes.nodes();
    let conf = nodes.confluencies();
    let mut weights = Vec::with_capacity(tau.len());
    for (i, (center, &s)) in tau.iter().zip(conf).enumerate() {
        // g_i(z) = Π_{m≠i} (z − τ_m)^{s_m}, expanded about τ_i and inverted.
        let others = tau
            .iter()
            .zip(conf.iter().copied())
            .enumerate()
            .filter(|&(m, _)| m != i)
            .map(|(_, f)| f);
        let g = product_taylor(others, center, s - 1);
        let r = g.reciprocal()?;
        // 1/w = h^{−s} Σ r_t h^t near τ_i, so β_{i, s−1−t} = r_t.
        weights.push((0..s).map(|j| r.coeff(s - 1 - j)).collect());
    }
    Ok(GenBaryWeights {
        nodes: nodes.clone(),
        weights,
        scale: F::one(),
    })
}

impl<F: Field> GenBaryWeights<F> {
    pub fn nodes(&self) -> &NodeSet<F> {
        &self.nodes
    }

    /// `β_{i,j}`.
    pub fn weight(&self, i: usize, j: usize) -> F {
        self.weights[i][j].clone() * self.scale.clone()
    }

    /// Stored (possibly rescaled) weights and the factor that undoes the
    /// scaling: `β_{i,j} = stored[i][j] · scale`.
    pub fn stored(&self) -> (&[Vec<F>], &F) {
        (&self.weights, &self.scale)
    }

    /// Divides every weight by the largest modulus; the partial-fraction
    /// identity then reads `Σ stored/(z−τ_i)^{j+1} = 1/(scale · w(z))`.
    pub fn normalized(&self) -> Self {
        let top = self
            .weights
            .iter()
            .flatten()
            .map(Field::modulus)
            .fold(0.0, f64::max);
        let Some(factor) = F::from_f64(top).filter(|f| !f.is_zero()) else {
            return self.clone();
        };
        GenBaryWeights {
            nodes: self.nodes.clone(),
            weights: self
                .weights
                .iter()
                .map(|row| row.iter().map(|b| b.clone() / factor.clone()).collect())
                .collect(),
            scale: self.scale.clone() * factor,
        }
    }

    /// `w(z) = Π (z − τ_i)^{s_i}`.
    pub fn node_polynomial(&self, z: &F) -> F {
        self.nodes
            .nodes()
            .iter()
            .zip(self.nodes.confluencies())
            .fold(F::one(), |acc, (t, &s)| {
                let d = z.clone() - t.clone();
                (0..s).fold(acc, |a, _| a * d.clone())
            })
    }

    /// `Σ_i Σ_j β_{i,j} / (z − τ_i)^{j+1}` with the stored weights, which
    /// equals `1/(scale · w(z))`.
    pub fn partial_fractions(&self, z: &F) -> F {
        let mut total = F::zero();
        for (t, row) in self.nodes.nodes().iter().zip(&self.weights) {
            let inv = F::one() / (z.clone() - t.clone());
            let mut p = inv.clone();
            for b in row {
                total = total + b.clone() * p.clone();
                p = p * inv.clone();
            }
        }
        total
    }

    fn node_hit(&self, z: &F) -> Option<usize> {
        self.nodes.nodes().iter().position(|t| t == z)
    }

    /// First barycentric form
    /// `p(z) = w(z) Σ_i Σ_j Σ_{k≤j} β_{i,j} ρ_{i,k} / (z − τ_i)^{j+1−k}`.
    /// At a node, returns the stored value `ρ_{i,0}`.
    pub fn hermite_eval(&self, data: &[F], z: &F) -> Result<F> {
        let dim = self.nodes.dimension();
        if data.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: data.len(),
            });
        }
        let offsets = self.nodes.offsets();
        if let Some(i) = self.node_hit(z) {
            return Ok(data[offsets[i]].clone());
        }
        let mut total = F::zero();
        for ((t, row), off) in self.nodes.nodes().iter().zip(&self.weights).zip(offsets) {
            let inv = F::one() / (z.clone() - t.clone());
            let s = row.len();
            // powers[p] = (z − τ_i)^{−p}
            let mut powers = Vec::with_capacity(s + 1);
            powers.push(F::one());
            for p in 1..=s {
                powers.push(powers[p - 1].clone() * inv.clone());
            }
            for (j, b) in row.iter().enumerate() {
                let inner = (0..=j).fold(F::zero(), |acc, k| {
                    acc + data[off + k].clone() * powers[j + 1 - k].clone()
                });
                total = total + b.clone() * inner;
            }
        }
        Ok(self.node_polynomial(z) * self.scale.clone() * total)
    }

    /// `H_{i,j}(z) = Σ_{k=0}^{s_i−1−j} β_{i,j+k} w(z) (z − τ_i)^{−k−1}`.
    pub fn basis_element(&self, i: usize, j: usize, z: &F) -> Result<F> {
        let s = *self
            .nodes
            .confluencies()
            .get(i)
            .ok_or_else(|| Error::IndexOutOfRange(format!("node {i}")))?;
        if j >= s {
            return Err(Error::IndexOutOfRange(format!(
                "derivative index {j} at node {i} of confluency {s}"
            )));
        }
        if let Some(l) = self.node_hit(z) {
            return Ok(if l == i && j == 0 { F::one() } else { F::zero() });
        }
        let inv = F::one() / (z.clone() - self.nodes.nodes()[i].clone());
        let mut p = inv.clone();
        let mut total = F::zero();
        for k in 0..s - j {
            total = total + self.weights[i][j + k].clone() * p.clone();
            p = p * inv.clone();
        }
        Ok(self.node_polynomial(z) * self.scale.clone() * total)
    }
}

/// Differentiation matrix on the Hermite data layout.
///
/// For output order `j < s_i − 1` the row is a shift:
/// `p′^{(j)}/j! = (j+1) · p^{(j+1)}/(j+1)!`. The last row of each node
/// needs `s_i · [h^{s_i}] H_{ℓ,m}(τ_i + h)` for every basis element, read
/// from the Taylor series of `w(z)(z − τ_ℓ)^{−k−1}` about `τ_i`: a series
/// division by `(τ_i − τ_ℓ + h)^{k+1}` when `ℓ ≠ i`, and a shift by
/// `h^{k+1}` (the pole cancels against `w`) when `ℓ = i`.
pub fn diff_matrix_hermite<F: Field>(nodes: &NodeSet<F>) -> Result<Matrix<F>> {
    let w = gen_bary_weights(nodes)?;
    diff_matrix_from_weights(&w)
}

pub fn diff_matrix_from_weights<F: Field>(w: &GenBaryWeights<F>) -> Result<Matrix<F>> {
    let nodes = w.nodes();
    let tau = nodes.nodes();
    let conf = nodes.confluencies();
    let offsets = nodes.offsets();
    let dim = nodes.dimension();
    let mut d = Matrix::zeros(dim, dim);

    for (i, (center, &s_i)) in tau.iter().zip(conf).enumerate() {
        let base = offsets[i];
        for j in 0..s_i - 1 {
            d.set(base + j, base + j + 1, F::from_i64(j as i64 + 1));
        }

        let row = base + s_i - 1;
        let s_i_f = F::from_i64(s_i as i64);
        let local = node_polynomial_taylor(nodes, center, 2 * s_i);
        for (l, (t_l, &s_l)) in tau.iter().zip(conf).enumerate() {
            // c[k] = [h^{s_i}] of w(z)(z − τ_ℓ)^{−k−1} about τ_i.
            let c: Vec<F> = if l == i {
                (0..s_l).map(|k| local.coeff(s_i + k + 1)).collect()
            } else {
                let shift = center.clone() - t_l.clone();
                let mut series = Series::from_coeffs(local.coeffs().to_vec(), s_i);
                let mut out = Vec::with_capacity(s_l);
                for _ in 0..s_l {
                    series.div_linear(&shift)?;
                    out.push(series.coeff(s_i));
                }
                out
            };
            for m in 0..s_l {
                let entry = (0..s_l - m).fold(F::zero(), |acc, k| acc + w.weight(l, m + k) * c[k].clone());
                d.set(row, offsets[l] + m, s_i_f.clone() * entry);
            }
        }
    }
    Ok(d)
}

/// Hermite data of the constant `c`: `[c, 0, …, 0, c, 0, …]`.
pub fn constant_data<F: Field>(nodes: &NodeSet<F>, c: &F) -> Vec<F> {
    let mut v = vec![F::zero(); nodes.dimension()];
    for off in nodes.offsets() {
        v[off] = c.clone();
    }
    v
}

/// Hermite data of `Σ coeffs[k] x^k`: slot `(i, j)` holds
/// `Σ_k C(k, j) coeffs[k] τ_i^{k−j}`.
pub fn polynomial_data<F: Field>(nodes: &NodeSet<F>, coeffs: &[F]) -> Vec<F> {
    let mut out = Vec::with_capacity(nodes.dimension());
    for (t, &s) in nodes.nodes().iter().zip(nodes.confluencies()) {
        // Taylor shift of the polynomial to τ_i by repeated synthetic division.
        let mut c = coeffs.to_vec();
        for j in 0..s {
            if j >= c.len() {
                out.push(F::zero());
                continue;
            }
            for k in (j..c.len() - 1).rev() {
                let carry = c[k + 1].clone() * t.clone();
                c[k] = c[k].clone() + carry;
            }
            out.push(c[j].clone());
        }
    }
    out
}

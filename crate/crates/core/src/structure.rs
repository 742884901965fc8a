//! Basis-independent structure of differentiation matrices.
//!
//! With `X_φ^k` the coefficients of `x^k` in the basis and `V` the matrix
//! whose `k`-th column is `X_φ^k / k!`, every differentiation matrix
//! satisfies `D V = V J` for the single nilpotent Jordan block `J`, and
//! `D⁺ = V Jᵀ V⁻¹` is a generalized inverse of `D`.

use crate::basis::BasisSpec;
use crate::bernstein;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hermite;
use crate::matrix::{jordan_block, Matrix};

/// Floating-point comparisons in this module use this relative tolerance.
pub const FLOAT_REL_TOL: f64 = 1e-10;

/// `columns[k] = X_φ^k`, `k = 0..dim`.
#[derive(Clone, Debug, PartialEq)]
pub struct MonomialImages<F> {
    columns: Vec<Vec<F>>,
}

impl<F: Field> MonomialImages<F> {
    pub fn columns(&self) -> &[Vec<F>] {
        &self.columns
    }

    /// `𝟏_φ = X_φ^0`.
    pub fn ones(&self) -> &[F] {
        &self.columns[0]
    }

    pub fn dimension(&self) -> usize {
        self.columns.len()
    }
}

pub fn monomial_images<F: Field>(basis: &BasisSpec<F>) -> Result<MonomialImages<F>> {
    let dim = basis.dimension();
    let columns = match basis {
        BasisSpec::Lagrange(nodes) => (0..dim)
            .map(|k| nodes.nodes().iter().map(|t| pow(t, k)).collect())
            .collect(),
        BasisSpec::Hermite(nodes) => (0..dim)
            .map(|k| hermite::polynomial_data(nodes, &unit(dim, k)))
            .collect(),
        BasisSpec::Bernstein { degree } => (0..dim)
            .map(|k| bernstein::monomial_image(*degree, k))
            .collect(),
        _ => {
            let rec = basis.recurrence().expect("degree-graded basis");
            let x = rec.multiplication_matrix();
            let mut cols = Vec::with_capacity(dim);
            cols.push(unit(dim, 0));
            for k in 1..dim {
                let next = x.apply(&cols[k - 1])?;
                cols.push(next);
            }
            cols
        }
    };
    Ok(MonomialImages { columns })
}

/// Columns `X_φ^k / k!`; errors if the columns are dependent.
pub fn build_v<F: Field>(images: &MonomialImages<F>) -> Result<Matrix<F>> {
    let mut fact = F::one();
    let cols: Vec<Vec<F>> = images
        .columns
        .iter()
        .enumerate()
        .map(|(k, c)| {
            if k > 0 {
                fact = fact.clone() * F::from_i64(k as i64);
            }
            c.iter().map(|v| v.clone() / fact.clone()).collect()
        })
        .collect();
    let v = Matrix::from_columns(&cols)?;
    if v.determinant()?.is_zero() {
        return Err(Error::Singular);
    }
    Ok(v)
}

/// Change of basis from monomial coefficients: columns `X_φ^k`.
pub fn change_of_basis<F: Field>(images: &MonomialImages<F>) -> Result<Matrix<F>> {
    Matrix::from_columns(&images.columns)
}

/// `D·V = V·J`, exactly for rationals and within [`FLOAT_REL_TOL`] otherwise.
pub fn jordan_check<F: Field>(d: &Matrix<F>, v: &Matrix<F>) -> bool {
    if d.rows() != v.rows() || !v.is_square() || !d.is_square() {
        return false;
    }
    let j = jordan_block(v.cols());
    match (d.matmul(v), v.matmul(&j)) {
        (Ok(dv), Ok(vj)) => dv.approx_eq(&vj, FLOAT_REL_TOL),
        _ => false,
    }
}

/// `D⁺ = V Jᵀ V⁻¹`.
pub fn pseudo_inverse<F: Field>(d: &Matrix<F>, v: &Matrix<F>) -> Result<Matrix<F>> {
    if d.rows() != v.rows() || d.cols() != v.cols() {
        return Err(Error::DimensionMismatch {
            expected: d.rows(),
            found: v.rows(),
        });
    }
    let jt = jordan_block::<F>(v.cols()).transpose();
    let vinv = v.inverse()?;
    v.matmul(&jt)?.matmul(&vinv)
}

/// `D D⁺ D = D` and `D⁺ D D⁺ = D⁺`.
pub fn verify_generalized_inverse<F: Field>(d: &Matrix<F>, dp: &Matrix<F>) -> bool {
    let first = d.matmul(dp).and_then(|m| m.matmul(d));
    let second = dp.matmul(d).and_then(|m| m.matmul(dp));
    match (first, second) {
        (Ok(a), Ok(b)) => a.approx_eq(d, FLOAT_REL_TOL) && b.approx_eq(dp, FLOAT_REL_TOL),
        _ => false,
    }
}

/// Smallest `k` with `D^k = 0`. Floating matrices count as zero once every
/// entry falls below [`FLOAT_REL_TOL`] times `max(1, ‖D‖_∞)^k`.
pub fn nilpotency_index<F: Field>(d: &Matrix<F>) -> Result<usize> {
    if !d.is_square() {
        return Err(Error::NotSquare {
            rows: d.rows(),
            cols: d.cols(),
        });
    }
    let n = d.rows();
    let norm = d.inf_norm().max(1.0);
    let mut p = Matrix::identity(n);
    for k in 1..=n {
        p = p.matmul(d)?;
        if p.is_negligible(norm.powi(k as i32), FLOAT_REL_TOL) {
            return Ok(k);
        }
    }
    if n == 0 {
        return Ok(0);
    }
    Err(Error::NotNilpotent(n))
}

/// Reference matrix `M · D_monomial · M⁻¹` where `M` has columns `X_φ^k`.
/// Independent of every direct constructor.
pub fn conjugation_oracle<F: Field>(basis: &BasisSpec<F>) -> Result<Matrix<F>> {
    let images = monomial_images(basis)?;
    let m = change_of_basis(&images)?;
    let n = m.cols();
    let d_mono = Matrix::from_fn(n, n, |i, j| {
        if j == i + 1 {
            F::from_i64(j as i64)
        } else {
            F::zero()
        }
    });
    let minv = m.inverse()?;
    m.matmul(&d_mono)?.matmul(&minv)
}

fn unit<F: Field>(dim: usize, k: usize) -> Vec<F> {
    let mut v = vec![F::zero(); dim];
    v[k] = F::one();
    v
}

fn pow<F: Field>(t: &F, k: usize) -> F {
    (0..k).fold(F::one(), |acc, _| acc * t.clone())
}

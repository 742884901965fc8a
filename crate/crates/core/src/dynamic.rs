//! Field-tagged matrices and vectors, and basis construction from untyped
//! input. Used by the command line and the C interface.

use crate::basis::{BasisKind, BasisSpec, NodeSet, RecurrenceSpec};
use crate::error::{Error, Result};
use crate::field::{Complex, Field, FieldTag, Rational, Scalar};
use crate::matrix::Matrix;

#[derive(Clone, Debug, PartialEq)]
pub enum AnyMatrix {
    Rational(Matrix<Rational>),
    Real(Matrix<f64>),
    Complex(Matrix<Complex>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum AnyVector {
    Rational(Vec<Rational>),
    Real(Vec<f64>),
    Complex(Vec<Complex>),
}

fn convert<F: Field, G: Field>(m: &Matrix<F>) -> Result<Matrix<G>> {
    let data = m
        .entries()
        .iter()
        .map(|v| G::from_scalar(&v.to_scalar()))
        .collect::<Result<Vec<_>>>()?;
    if m.cols() == 0 {
        return Ok(Matrix::zeros(m.rows(), 0));
    }
    Matrix::from_rows(data.chunks(m.cols()).map(<[G]>::to_vec).collect())
}

fn convert_vec<F: Field, G: Field>(v: &[F]) -> Result<Vec<G>> {
    v.iter().map(|x| G::from_scalar(&x.to_scalar())).collect()
}

macro_rules! dispatch {
    ($self:expr, $m:ident => $body:expr) => {
        match $self {
            AnyMatrix::Rational($m) => $body,
            AnyMatrix::Real($m) => $body,
            AnyMatrix::Complex($m) => $body,
        }
    };
}

impl AnyMatrix {
    pub fn tag(&self) -> FieldTag {
        match self {
            AnyMatrix::Rational(_) => FieldTag::Rational,
            AnyMatrix::Real(_) => FieldTag::Real,
            AnyMatrix::Complex(_) => FieldTag::Complex,
        }
    }

    pub fn rows(&self) -> usize {
        dispatch!(self, m => m.rows())
    }

    pub fn cols(&self) -> usize {
        dispatch!(self, m => m.cols())
    }

    pub fn get(&self, i: usize, j: usize) -> Option<Scalar> {
        if i >= self.rows() || j >= self.cols() {
            return None;
        }
        Some(dispatch!(self, m => m.get(i, j).to_scalar()))
    }

    pub fn inf_norm(&self) -> f64 {
        dispatch!(self, m => m.inf_norm())
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        dispatch!(self, m => (0..m.rows())
            .map(|i| m.row(i).iter().map(Field::to_scalar).collect())
            .collect())
    }

    /// Converts to `target`; moving down the ladder is an error.
    pub fn promote(&self, target: FieldTag) -> Result<AnyMatrix> {
        Ok(match target {
            FieldTag::Rational => AnyMatrix::Rational(dispatch!(self, m => convert(m))?),
            FieldTag::Real => AnyMatrix::Real(dispatch!(self, m => convert(m))?),
            FieldTag::Complex => AnyMatrix::Complex(dispatch!(self, m => convert(m))?),
        })
    }

    /// `M·v`, promoting whichever operand sits lower on the ladder.
    pub fn apply(&self, v: &AnyVector) -> Result<AnyVector> {
        let tag = self.tag().join(v.tag());
        let m = self.promote(tag)?;
        let v = v.promote(tag)?;
        Ok(match (m, v) {
            (AnyMatrix::Rational(m), AnyVector::Rational(v)) => AnyVector::Rational(m.apply(&v)?),
            (AnyMatrix::Real(m), AnyVector::Real(v)) => AnyVector::Real(m.apply(&v)?),
            (AnyMatrix::Complex(m), AnyVector::Complex(v)) => AnyVector::Complex(m.apply(&v)?),
            _ => unreachable!("operands promoted to a common field"),
        })
    }
}

impl AnyVector {
    pub fn tag(&self) -> FieldTag {
        match self {
            AnyVector::Rational(_) => FieldTag::Rational,
            AnyVector::Real(_) => FieldTag::Real,
            AnyVector::Complex(_) => FieldTag::Complex,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            AnyVector::Rational(v) => v.len(),
            AnyVector::Real(v) => v.len(),
            AnyVector::Complex(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Values of a common field: the join of the scalars' own fields.
    pub fn from_scalars(values: &[Scalar]) -> Result<AnyVector> {
        let tag = values.iter().map(Scalar::tag).fold(FieldTag::Rational, FieldTag::join);
        Ok(match tag {
            FieldTag::Rational => AnyVector::Rational(from_scalars(values)?),
            FieldTag::Real => AnyVector::Real(from_scalars(values)?),
            FieldTag::Complex => AnyVector::Complex(from_scalars(values)?),
        })
    }

    pub fn to_scalars(&self) -> Vec<Scalar> {
        match self {
            AnyVector::Rational(v) => v.iter().map(Field::to_scalar).collect(),
            AnyVector::Real(v) => v.iter().map(Field::to_scalar).collect(),
            AnyVector::Complex(v) => v.iter().map(Field::to_scalar).collect(),
        }
    }

    pub fn promote(&self, target: FieldTag) -> Result<AnyVector> {
        Ok(match target {
            FieldTag::Rational => AnyVector::Rational(any_vec(self)?),
            FieldTag::Real => AnyVector::Real(any_vec(self)?),
            FieldTag::Complex => AnyVector::Complex(any_vec(self)?),
        })
    }
}

fn any_vec<G: Field>(v: &AnyVector) -> Result<Vec<G>> {
    match v {
        AnyVector::Rational(x) => convert_vec(x),
        AnyVector::Real(x) => convert_vec(x),
        AnyVector::Complex(x) => convert_vec(x),
    }
}

pub fn from_scalars<F: Field>(values: &[Scalar]) -> Result<Vec<F>> {
    values.iter().map(F::from_scalar).collect()
}

/// Untyped description of a basis, as read from flags or across the C ABI.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct BasisRequest {
    pub kind: Option<BasisKind>,
    pub degree: Option<usize>,
    pub nodes: Vec<Scalar>,
    pub confluency: Vec<usize>,
    pub alpha: Vec<Scalar>,
    pub beta: Vec<Scalar>,
    pub gamma: Vec<Scalar>,
}

impl BasisRequest {
    pub fn new(kind: BasisKind) -> Self {
        BasisRequest {
            kind: Some(kind),
            ..Default::default()
        }
    }

    /// Smallest field holding every supplied scalar.
    pub fn natural_field(&self) -> FieldTag {
        self.nodes
            .iter()
            .chain(&self.alpha)
            .chain(&self.beta)
            .chain(&self.gamma)
            .map(Scalar::tag)
            .fold(FieldTag::Rational, FieldTag::join)
    }

    /// Rejects flag combinations that do not describe the requested family.
    pub fn check(&self) -> Result<BasisKind> {
        let kind = self
            .kind
            .ok_or_else(|| Error::InvalidArgument("a basis is required".into()))?;
        let has_rec = !(self.alpha.is_empty() && self.beta.is_empty() && self.gamma.is_empty());
        let bad = |what: &str| Err(Error::InvalidArgument(format!("{what} is not valid for the {kind} basis")));
        match kind {
            BasisKind::Monomial | BasisKind::Chebyshev | BasisKind::Legendre | BasisKind::Bernstein => {
                if self.degree.is_none() {
                    return Err(Error::InvalidArgument(format!("the {kind} basis needs a degree")));
                }
                if !self.nodes.is_empty() {
                    return bad("a node list");
                }
                if !self.confluency.is_empty() {
                    return bad("a confluency list");
                }
                if has_rec {
                    return bad("a recurrence");
                }
            }
            BasisKind::Newton | BasisKind::Lagrange | BasisKind::Hermite => {
                if self.degree.is_some() {
                    return bad("a degree");
                }
                if self.nodes.is_empty() {
                    return Err(Error::EmptyNodes);
                }
                if !self.confluency.is_empty() && kind != BasisKind::Hermite {
                    return bad("a confluency list");
                }
                if has_rec {
                    return bad("a recurrence");
                }
            }
            BasisKind::Recurrence => {
                if !self.nodes.is_empty() || !self.confluency.is_empty() {
                    return bad("a node list");
                }
                if let Some(n) = self.degree {
                    if n != self.alpha.len() {
                        return Err(Error::InvalidArgument(format!(
                            "degree {n} disagrees with {} recurrence coefficients",
                            self.alpha.len()
                        )));
                    }
                }
            }
        }
        Ok(kind)
    }

    pub fn to_spec<F: Field>(&self) -> Result<BasisSpec<F>> {
        let kind = self.check()?;
        let degree = self.degree.unwrap_or(0);
        let nodes = || from_scalars::<F>(&self.nodes);
        Ok(match kind {
            BasisKind::Monomial => BasisSpec::Monomial { degree },
            BasisKind::Chebyshev => BasisSpec::Chebyshev { degree },
            BasisKind::Legendre => BasisSpec::Legendre { degree },
            BasisKind::Bernstein => BasisSpec::Bernstein { degree },
            BasisKind::Newton => BasisSpec::newton(nodes()?)?,
            BasisKind::Lagrange => BasisSpec::lagrange(NodeSet::simple(nodes()?)?)?,
            BasisKind::Hermite => {
                let conf = if self.confluency.is_empty() {
                    vec![1; self.nodes.len()]
                } else {
                    self.confluency.clone()
                };
                BasisSpec::Hermite(NodeSet::confluent(nodes()?, conf)?)
            }
            BasisKind::Recurrence => BasisSpec::Recurrence(RecurrenceSpec::new(
                from_scalars(&self.alpha)?,
                from_scalars(&self.beta)?,
                from_scalars(&self.gamma)?,
            )?),
        })
    }

    /// `D`, or with `pinv` the antiderivative / generalized inverse.
    pub fn build(&self, field: FieldTag, pinv: bool) -> Result<AnyMatrix> {
        fn run<F: Field>(req: &BasisRequest, pinv: bool) -> Result<Matrix<F>> {
            let spec = req.to_spec::<F>()?;
            if pinv {
                spec.antiderivative_matrix()
            } else {
                spec.diff_matrix()
            }
        }
        Ok(match field {
            FieldTag::Rational => AnyMatrix::Rational(run(self, pinv)?),
            FieldTag::Real => AnyMatrix::Real(run(self, pinv)?),
            FieldTag::Complex => AnyMatrix::Complex(run(self, pinv)?),
        })
    }
}

/// One generalized barycentric weight `β_{i,j}`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightEntry {
    pub node: usize,
    pub order: usize,
    pub value: Scalar,
}

/// Barycentric weights for `nodes` with optional confluencies, in `field`.
pub fn weights(nodes: &[Scalar], confluency: &[usize], field: FieldTag) -> Result<Vec<WeightEntry>> {
    fn run<F: Field>(nodes: &[Scalar], confluency: &[usize]) -> Result<Vec<WeightEntry>> {
        let tau = from_scalars::<F>(nodes)?;
        let conf = if confluency.is_empty() {
            vec![1; tau.len()]
        } else {
            confluency.to_vec()
        };
        let set = NodeSet::confluent(tau, conf)?;
        let w = crate::hermite::gen_bary_weights(&set)?;
        let mut out = Vec::new();
        for (i, &s) in set.confluencies().iter().enumerate() {
            for j in 0..s {
                out.push(WeightEntry {
                    node: i,
                    order: j,
                    value: w.weight(i, j).to_scalar(),
                });
            }
        }
        Ok(out)
    }
    match field {
        FieldTag::Rational => run::<Rational>(nodes, confluency),
        FieldTag::Real => run::<f64>(nodes, confluency),
        FieldTag::Complex => run::<Complex>(nodes, confluency),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(text: &str) -> Scalar {
        Scalar::parse(text, FieldTag::Rational).unwrap()
    }

    fn rats(v: &[&str]) -> Vec<Scalar> {
        v.iter().map(|t| rat(t)).collect()
    }

    #[test]
    fn identity_apply() {
        let m = AnyMatrix::Rational(Matrix::identity(4));
        let v = AnyVector::from_scalars(&rats(&["1", "2", "3", "4"])).unwrap();
        assert_eq!(m.apply(&v).unwrap(), v);
    }

    #[test]
    fn monomial_derivative_of_cubic() {
        let mut req = BasisRequest::new(BasisKind::Monomial);
        req.degree = Some(3);
        let d = req.build(FieldTag::Rational, false).unwrap();
        let v = AnyVector::from_scalars(&rats(&["5", "0", "0", "1"])).unwrap();
        assert_eq!(d.apply(&v).unwrap().to_scalars(), rats(&["0", "0", "3", "0"]));
        assert_eq!(d.inf_norm(), 3.0);
    }

    #[test]
    fn rational_matrix_promotes_to_real_vector() {
        let mut req = BasisRequest::new(BasisKind::Bernstein);
        req.degree = Some(4);
        let d = req.build(FieldTag::Rational, false).unwrap();
        let v = AnyVector::Real(vec![0.25; 5]);
        let out = d.apply(&v).unwrap();
        assert_eq!(out, AnyVector::Real(vec![0.0; 5]));
    }

    #[test]
    fn demotion_is_an_error() {
        let m = AnyMatrix::Real(Matrix::identity(2));
        assert!(matches!(
            m.promote(FieldTag::Rational),
            Err(Error::FieldDemotion { .. })
        ));
        let mut req = BasisRequest::new(BasisKind::Lagrange);
        req.nodes = vec![Scalar::Complex(Complex::new(0.0, 1.0)), rat("1")];
        assert!(matches!(
            req.build(FieldTag::Real, false),
            Err(Error::FieldDemotion { .. })
        ));
    }

    #[test]
    fn dimension_mismatch() {
        let m = AnyMatrix::Rational(Matrix::identity(3));
        let v = AnyVector::Rational(vec![Rational::from_i64(1); 2]);
        assert!(matches!(m.apply(&v), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn inconsistent_flags_rejected() {
        let mut req = BasisRequest::new(BasisKind::Monomial);
        req.degree = Some(3);
        req.nodes = rats(&["0", "1"]);
        assert!(req.check().is_err());
        let mut req = BasisRequest::new(BasisKind::Lagrange);
        req.degree = Some(3);
        req.nodes = rats(&["0", "1"]);
        assert!(req.check().is_err());
        let mut req = BasisRequest::new(BasisKind::Lagrange);
        req.nodes = rats(&["0", "1"]);
        req.confluency = vec![1, 1];
        assert!(req.check().is_err());
    }

    #[test]
    fn weight_examples() {
        let w = weights(&rats(&["-1", "-1/2", "1/2", "1"]), &[], FieldTag::Rational).unwrap();
        let vals: Vec<_> = w.iter().map(|e| e.value.clone()).collect();
        assert_eq!(vals, rats(&["-2/3", "4/3", "-4/3", "2/3"]));

        let w = weights(&rats(&["0", "1"]), &[2, 1], FieldTag::Rational).unwrap();
        let flat: Vec<_> = w.iter().map(|e| (e.node, e.order, e.value.clone())).collect();
        assert_eq!(
            flat,
            vec![(0, 0, rat("-1")), (0, 1, rat("-1")), (1, 0, rat("1"))]
        );

        let w = weights(&rats(&["0"]), &[1], FieldTag::Rational).unwrap();
        assert_eq!(w[0].value, rat("1"));
    }

    #[test]
    fn duplicate_nodes_rejected() {
        assert!(matches!(
            weights(&rats(&["0", "0"]), &[], FieldTag::Rational),
            Err(Error::DuplicateNodes { .. })
        ));
    }
}

//! Basis descriptors: node sets, three-term recurrences and the tagged
//! [`BasisSpec`] that every constructor and oracle dispatches on.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::{bernstein, degree_graded, hermite, lagrange, structure};

/// Pairwise distinct interpolation nodes, each with a confluency `s_i ≥ 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct NodeSet<F> {
    nodes: Vec<F>,
    confluencies: Vec<usize>,
}

impl<F: Field> NodeSet<F> {
    /// Nodes of confluency one.
    pub fn simple(nodes: Vec<F>) -> Result<Self> {
        let s = vec![1; nodes.len()];
        Self::confluent(nodes, s)
    }

    pub fn confluent(nodes: Vec<F>, confluencies: Vec<usize>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::EmptyNodes);
        }
        if confluencies.len() != nodes.len() {
            return Err(Error::ConfluencyLength {
                expected: nodes.len(),
                found: confluencies.len(),
            });
        }
        if let Some(i) = confluencies.iter().position(|&s| s == 0) {
            return Err(Error::ZeroConfluency(i));
        }
        for i in 0..nodes.len() {
            for j in i + 1..nodes.len() {
                if nodes[i] == nodes[j] {
                    return Err(Error::DuplicateNodes { first: i, second: j });
                }
            }
        }
        Ok(NodeSet {
            nodes,
            confluencies,
        })
    }

    pub fn nodes(&self) -> &[F] {
        &self.nodes
    }

    pub fn confluencies(&self) -> &[usize] {
        &self.confluencies
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn is_simple(&self) -> bool {
        self.confluencies.iter().all(|&s| s == 1)
    }

    /// Total number of data slots, `Σ s_i`.
    pub fn dimension(&self) -> usize {
        self.confluencies.iter().sum()
    }

    /// Index of the first data slot belonging to each node.
    pub fn offsets(&self) -> Vec<usize> {
        self.confluencies
            .iter()
            .scan(0, |acc, &s| {
                let start = *acc;
                *acc += s;
                Some(start)
            })
            .collect()
    }

    /// Each node repeated according to its confluency, as used by the
    /// confluent Newton basis.
    pub fn expanded(&self) -> Vec<F> {
        self.nodes
            .iter()
            .zip(&self.confluencies)
            .flat_map(|(t, &s)| std::iter::repeat_n(t.clone(), s))
            .collect()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Result<NodeSet<G>> {
        NodeSet::confluent(self.nodes.iter().map(f).collect(), self.confluencies.clone())
    }
}

/// Coefficients of `x·φ_j = α_j φ_{j+1} + β_j φ_j + γ_j φ_{j−1}` for
/// `j = 0..n−1`, describing a degree-graded basis of dimension `n+1`.
/// `γ_0` is never read.
#[derive(Clone, Debug, PartialEq)]
pub struct RecurrenceSpec<F> {
    alpha: Vec<F>,
    beta: Vec<F>,
    gamma: Vec<F>,
}

impl<F: Field> RecurrenceSpec<F> {
    pub fn new(alpha: Vec<F>, beta: Vec<F>, gamma: Vec<F>) -> Result<Self> {
        if beta.len() != alpha.len() || gamma.len() != alpha.len() {
            return Err(Error::RecurrenceLength);
        }
        if let Some(j) = alpha.iter().position(|a| a.is_zero()) {
            return Err(Error::ZeroAlpha(j));
        }
        Ok(RecurrenceSpec { alpha, beta, gamma })
    }

    /// `x^k`: α = 1, β = γ = 0.
    pub fn monomial(n: usize) -> Self {
        RecurrenceSpec {
            alpha: vec![F::one(); n],
            beta: vec![F::zero(); n],
            gamma: vec![F::zero(); n],
        }
    }

    /// `T_{k+1} = 2x T_k − T_{k−1}`, `T_1 = x·T_0`.
    pub fn chebyshev(n: usize) -> Self {
        let half = F::ratio(1, 2);
        RecurrenceSpec {
            alpha: (0..n).map(|j| if j == 0 { F::one() } else { half.clone() }).collect(),
            beta: vec![F::zero(); n],
            gamma: (0..n).map(|j| if j == 0 { F::zero() } else { half.clone() }).collect(),
        }
    }

    /// `(j+1) P_{j+1} = (2j+1) x P_j − j P_{j−1}`.
    pub fn legendre(n: usize) -> Self {
        let n_i = n as i64;
        RecurrenceSpec {
            alpha: (0..n_i).map(|j| F::ratio(j + 1, 2 * j + 1)).collect(),
            beta: vec![F::zero(); n],
            gamma: (0..n_i).map(|j| F::ratio(j, 2 * j + 1)).collect(),
        }
    }

    /// Newton polynomials `N_k = Π_{j<k}(x − z_j)`: α = 1, β_j = z_j, γ = 0.
    /// The last node of `z` (if any) does not enter the basis.
    pub fn newton(z: &[F]) -> Self {
        let n = z.len().saturating_sub(1);
        RecurrenceSpec {
            alpha: vec![F::one(); n],
            beta: z[..n].to_vec(),
            gamma: vec![F::zero(); n],
        }
    }

    /// Degree `n` of the basis (dimension `n+1`).
    pub fn degree(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &[F] {
        &self.alpha
    }

    pub fn beta(&self) -> &[F] {
        &self.beta
    }

    pub fn gamma(&self) -> &[F] {
        &self.gamma
    }

    /// Matrix of multiplication by `x`, truncated to dimension `n+1`:
    /// column `j` holds the coefficients of `x·φ_j` (the `φ_{n+1}` term of
    /// the last column is dropped).
    pub fn multiplication_matrix(&self) -> Matrix<F> {
        let n = self.degree();
        let mut m = Matrix::zeros(n + 1, n + 1);
        for j in 0..n {
            m.set(j + 1, j, self.alpha[j].clone());
            m.set(j, j, self.beta[j].clone());
            if j >= 1 {
                m.set(j - 1, j, self.gamma[j].clone());
            }
        }
        m
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    Monomial,
    Chebyshev,
    Legendre,
    Newton,
    Recurrence,
    Lagrange,
    Hermite,
    Bernstein,
}

impl BasisKind {
    pub const ALL: [BasisKind; 8] = [
        BasisKind::Monomial,
        BasisKind::Chebyshev,
        BasisKind::Legendre,
        BasisKind::Newton,
        BasisKind::Recurrence,
        BasisKind::Lagrange,
        BasisKind::Hermite,
        BasisKind::Bernstein,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BasisKind::Monomial => "monomial",
            BasisKind::Chebyshev => "chebyshev",
            BasisKind::Legendre => "legendre",
            BasisKind::Newton => "newton",
            BasisKind::Recurrence => "recurrence",
            BasisKind::Lagrange => "lagrange",
            BasisKind::Hermite => "hermite",
            BasisKind::Bernstein => "bernstein",
        }
    }

    pub fn is_degree_graded(self) -> bool {
        matches!(
            self,
            BasisKind::Monomial
                | BasisKind::Chebyshev
                | BasisKind::Legendre
                | BasisKind::Newton
                | BasisKind::Recurrence
        )
    }
}

impl std::str::FromStr for BasisKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BasisKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown basis '{s}'")))
    }
}

impl std::fmt::Display for BasisKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// One polynomial basis of finite dimension.
#[derive(Clone, Debug, PartialEq)]
pub enum BasisSpec<F> {
    Monomial { degree: usize },
    Chebyshev { degree: usize },
    Legendre { degree: usize },
    /// Newton basis on `z_0..z_n`; repeated nodes give the confluent basis.
    Newton { nodes: Vec<F> },
    Recurrence(RecurrenceSpec<F>),
    Lagrange(NodeSet<F>),
    Hermite(NodeSet<F>),
    Bernstein { degree: usize },
}

impl<F: Field> BasisSpec<F> {
    pub fn newton(nodes: Vec<F>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::EmptyNodes);
        }
        Ok(BasisSpec::Newton { nodes })
    }

    pub fn lagrange(nodes: NodeSet<F>) -> Result<Self> {
        if !nodes.is_simple() {
            return Err(Error::ConfluentNodes);
        }
        Ok(BasisSpec::Lagrange(nodes))
    }

    pub fn kind(&self) -> BasisKind {
        match self {
            BasisSpec::Monomial { .. } => BasisKind::Monomial,
            BasisSpec::Chebyshev { .. } => BasisKind::Chebyshev,
            BasisSpec::Legendre { .. } => BasisKind::Legendre,
            BasisSpec::Newton { .. } => BasisKind::Newton,
            BasisSpec::Recurrence(_) => BasisKind::Recurrence,
            BasisSpec::Lagrange(_) => BasisKind::Lagrange,
            BasisSpec::Hermite(_) => BasisKind::Hermite,
            BasisSpec::Bernstein { .. } => BasisKind::Bernstein,
        }
    }

    pub fn dimension(&self) -> usize {
        match self {
            BasisSpec::Monomial { degree }
            | BasisSpec::Chebyshev { degree }
            | BasisSpec::Legendre { degree }
            | BasisSpec::Bernstein { degree } => degree + 1,
            BasisSpec::Newton { nodes } => nodes.len(),
            BasisSpec::Recurrence(rec) => rec.degree() + 1,
            BasisSpec::Lagrange(nodes) | BasisSpec::Hermite(nodes) => nodes.dimension(),
        }
    }

    /// The three-term recurrence of a degree-graded basis.
    pub fn recurrence(&self) -> Option<RecurrenceSpec<F>> {
        match self {
            BasisSpec::Monomial { degree } => Some(RecurrenceSpec::monomial(*degree)),
            BasisSpec::Chebyshev { degree } => Some(RecurrenceSpec::chebyshev(*degree)),
            BasisSpec::Legendre { degree } => Some(RecurrenceSpec::legendre(*degree)),
            BasisSpec::Newton { nodes } => Some(RecurrenceSpec::newton(nodes)),
            BasisSpec::Recurrence(rec) => Some(rec.clone()),
            _ => None,
        }
    }

    /// Differentiation matrix from the family's direct constructor.
    pub fn diff_matrix(&self) -> Result<Matrix<F>> {
        match self {
            BasisSpec::Monomial { degree } => Ok(degree_graded::monomial_diff_matrix(*degree)),
            BasisSpec::Chebyshev { degree } => Ok(degree_graded::chebyshev_diff_matrix(*degree)),
            BasisSpec::Legendre { degree } => Ok(degree_graded::legendre_diff_matrix(*degree)),
            BasisSpec::Newton { nodes } => degree_graded::newton_diff_matrix(nodes),
            BasisSpec::Recurrence(rec) => Ok(degree_graded::diff_matrix_degree_graded(rec)),
            BasisSpec::Lagrange(nodes) => lagrange::diff_matrix_lagrange(nodes),
            BasisSpec::Hermite(nodes) => hermite::diff_matrix_hermite(nodes),
            BasisSpec::Bernstein { degree } => Ok(bernstein::diff_matrix_bernstein(*degree)),
        }
    }

    /// Closed-form antiderivative where one exists (Chebyshev, Legendre),
    /// otherwise the generalized inverse `V Jᵀ V⁻¹`. The constant slot is 0.
    pub fn antiderivative_matrix(&self) -> Result<Matrix<F>> {
        match self {
            BasisSpec::Chebyshev { degree } if *degree >= 1 => {
                Ok(degree_graded::chebyshev_antideriv_matrix(*degree))
            }
            BasisSpec::Legendre { degree } if *degree >= 1 => {
                Ok(degree_graded::legendre_antideriv_matrix(*degree))
            }
            _ => {
                let d = self.diff_matrix()?;
                let v = structure::build_v(&structure::monomial_images(self)?)?;
                structure::pseudo_inverse(&d, &v)
            }
        }
    }
}

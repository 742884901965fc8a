//! Invariant suite behind `polydiff verify`.
//!
//! Every check runs on seeded random instances of dimension at most 12 in
//! exact arithmetic, except the barycentric-form comparison which is done
//! in double precision.

use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::basis::{BasisKind, BasisSpec, NodeSet, RecurrenceSpec};
use crate::bernstein::bernstein_norm_table;
use crate::error::Result;
use crate::experiment::NodeFamily;
use crate::field::{Field, Rational};
use crate::hermite::{constant_data, diff_matrix_hermite};
use crate::lagrange::{bary_weights, diff_matrix_lagrange};
use crate::matrix::Matrix;
use crate::structure::{
    build_v, conjugation_oracle, jordan_check, monomial_images, nilpotency_index, pseudo_inverse,
    verify_generalized_inverse,
};

pub const MAX_DIMENSION: usize = 12;
pub const DEFAULT_SEED: u64 = 0x5eed_d1ff;
const INSTANCES: usize = 20;

#[derive(Clone, Debug, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: impl Into<String>, failures: Vec<String>, total: usize) -> Self {
        let passed = failures.is_empty();
        let detail = if passed {
            format!("{total} cases")
        } else {
            format!("{} of {total} failed; first: {}", failures.len(), failures[0])
        };
        CheckResult {
            name: name.into(),
            passed,
            detail,
        }
    }

    pub fn line(&self) -> String {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        format!("{tag} {} ({})", self.name, self.detail)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub basis: Option<BasisKind>,
    pub seed: u64,
    /// Perturbs one entry of every constructed matrix; the suite must fail.
    pub corrupt: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            basis: None,
            seed: DEFAULT_SEED,
            corrupt: false,
        }
    }
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::ratio(rng.gen_range(-9..=9), rng.gen_range(1..=6))
}

fn distinct_rationals(rng: &mut ChaCha8Rng, count: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    while out.len() < count {
        let q = small_rational(rng);
        if !out.contains(&q) {
            out.push(q);
        }
    }
    out
}

/// A random rational instance of `kind` with dimension in `1..=MAX_DIMENSION`.
pub fn random_instance(kind: BasisKind, rng: &mut ChaCha8Rng) -> BasisSpec<Rational> {
    let degree = rng.gen_range(0..MAX_DIMENSION);
    match kind {
        BasisKind::Monomial => BasisSpec::Monomial { degree },
        BasisKind::Chebyshev => BasisSpec::Chebyshev { degree },
        BasisKind::Legendre => BasisSpec::Legendre { degree },
        BasisKind::Bernstein => BasisSpec::Bernstein { degree },
        BasisKind::Newton => {
            // Repeats are allowed: a confluent Newton basis.
            let pool = distinct_rationals(rng, 4);
            let nodes = (0..=degree).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
            BasisSpec::Newton { nodes }
        }
        BasisKind::Recurrence => {
            let alpha = (0..degree)
                .map(|_| loop {
                    let a = small_rational(rng);
                    if !a.is_zero() {
                        break a;
                    }
                })
                .collect();
            let beta = (0..degree).map(|_| small_rational(rng)).collect();
            let gamma = (0..degree).map(|_| small_rational(rng)).collect();
            BasisSpec::Recurrence(RecurrenceSpec::new(alpha, beta, gamma).expect("nonzero alpha"))
        }
        BasisKind::Lagrange => {
            BasisSpec::Lagrange(NodeSet::simple(distinct_rationals(rng, degree + 1)).expect("distinct"))
        }
        BasisKind::Hermite => {
            let dim = degree + 1;
            let mut conf = Vec::new();
            let mut left = dim;
            while left > 0 {
                let s = rng.gen_range(1..=left.min(4));
                conf.push(s);
                left -= s;
            }
            let nodes = distinct_rationals(rng, conf.len());
            BasisSpec::Hermite(NodeSet::confluent(nodes, conf).expect("valid confluent nodes"))
        }
    }
}

pub fn random_instances(kind: BasisKind, count: usize, seed: u64) -> Vec<BasisSpec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (kind as u64).wrapping_mul(0x9e37_79b9));
    (0..count).map(|_| random_instance(kind, &mut rng)).collect()
}

struct Suite {
    opts: VerifyOptions,
    results: Vec<CheckResult>,
}

impl Suite {
    fn wants(&self, kinds: &[BasisKind]) -> bool {
        self.opts.basis.is_none_or(|b| kinds.contains(&b))
    }

    fn diff<F: Field>(&self, spec: &BasisSpec<F>) -> Result<Matrix<F>> {
        let d = spec.diff_matrix()?;
        Ok(self.tamper(d))
    }

    fn tamper<F: Field>(&self, mut d: Matrix<F>) -> Matrix<F> {
        if self.opts.corrupt && d.rows() > 0 {
            let v = d[(0, 0)].clone() + F::one();
            d.set(0, 0, v);
        }
        d
    }

    /// Runs `check` on each instance, collecting failure messages.
    fn per_instance(
        &mut self,
        name: String,
        instances: &[BasisSpec<Rational>],
        check: impl Fn(&Self, &BasisSpec<Rational>) -> Result<bool>,
    ) {
        let failures = instances
            .iter()
            .filter_map(|spec| match check(self, spec) {
                Ok(true) => None,
                Ok(false) => Some(format!("dimension {}", spec.dimension())),
                Err(e) => Some(format!("dimension {}: {e}", spec.dimension())),
            })
            .collect();
        self.results.push(CheckResult::new(name, failures, instances.len()));
    }

    fn push(&mut self, name: &str, failures: Vec<String>, total: usize) {
        self.results.push(CheckResult::new(name, failures, total));
    }
}

/// Runs every check selected by `opts`.
pub fn run(opts: VerifyOptions) -> Vec<CheckResult> {
    let mut suite = Suite {
        opts,
        results: Vec::new(),
    };
    for kind in BasisKind::ALL {
        if !suite.wants(&[kind]) {
            continue;
        }
        let instances = random_instances(kind, INSTANCES, suite.opts.seed);
        family_checks(&mut suite, kind, &instances);
    }
    cross_checks(&mut suite);
    suite.results
}

fn family_checks(suite: &mut Suite, kind: BasisKind, instances: &[BasisSpec<Rational>]) {
    suite.per_instance(format!("{kind}: matches conjugation oracle"), instances, |s, spec| {
        Ok(s.diff(spec)? == conjugation_oracle(spec)?)
    });
    suite.per_instance(format!("{kind}: monomial-image shifting"), instances, |s, spec| {
        let d = s.diff(spec)?;
        let x = monomial_images(spec)?;
        let cols = x.columns();
        for k in 1..cols.len() {
            let lhs = d.apply(&cols[k])?;
            let kk = Rational::from_i64(k as i64);
            let rhs: Vec<Rational> = cols[k - 1].iter().map(|v| v * &kk).collect();
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(d.apply(&cols[0])?.iter().all(|v| v.is_zero()))
    });
    suite.per_instance(format!("{kind}: nilpotency index equals dimension"), instances, |s, spec| {
        Ok(nilpotency_index(&s.diff(spec)?).ok() == Some(spec.dimension()))
    });
    suite.per_instance(format!("{kind}: D V = V J"), instances, |s, spec| {
        let v = build_v(&monomial_images(spec)?)?;
        Ok(jordan_check(&s.diff(spec)?, &v))
    });
    suite.per_instance(format!("{kind}: V J^T V^-1 is a generalized inverse"), instances, |s, spec| {
        let d = s.diff(spec)?;
        let v = build_v(&monomial_images(spec)?)?;
        let dp = pseudo_inverse(&spec.diff_matrix()?, &v)?;
        Ok(verify_generalized_inverse(&d, &dp))
    });
    if matches!(kind, BasisKind::Lagrange | BasisKind::Hermite | BasisKind::Bernstein) {
        suite.per_instance(format!("{kind}: constants are annihilated"), instances, |s, spec| {
            let d = s.diff(spec)?;
            let c = Rational::ratio(7, 3);
            let data = match spec {
                BasisSpec::Hermite(nodes) => constant_data(nodes, &c),
                _ => vec![c; spec.dimension()],
            };
            Ok(d.apply(&data)?.iter().all(|v| v.is_zero()))
        });
    }
}

fn cross_checks(suite: &mut Suite) {
    if suite.wants(&[BasisKind::Hermite, BasisKind::Lagrange]) {
        let mut failures = Vec::new();
        let instances = random_instances(BasisKind::Lagrange, INSTANCES, suite.opts.seed ^ 1);
        for spec in &instances {
            let BasisSpec::Lagrange(nodes) = spec else { continue };
            let ok = diff_matrix_hermite(nodes)
                .and_then(|h| Ok(suite.tamper(h) == diff_matrix_lagrange(nodes)?))
                .unwrap_or(false);
            if !ok {
                failures.push(format!("{} nodes", nodes.len()));
            }
        }
        suite.push("hermite: confluency 1 equals lagrange", failures, instances.len());
    }

    if suite.wants(&[BasisKind::Newton, BasisKind::Monomial]) {
        let mut rng = ChaCha8Rng::seed_from_u64(suite.opts.seed ^ 2);
        let mut failures = Vec::new();
        for _ in 0..INSTANCES {
            let c = small_rational(&mut rng);
            let n = rng.gen_range(0..MAX_DIMENSION);
            let newton = BasisSpec::Newton { nodes: vec![c.clone(); n + 1] };
            let mono = BasisSpec::<Rational>::Monomial { degree: n };
            let ok = matches!((suite.diff(&newton), mono.diff_matrix()), (Ok(a), Ok(b)) if a == b);
            if !ok {
                failures.push(format!("node {c}, degree {n}"));
            }
        }
        suite.push("newton: equal nodes give the monomial matrix", failures, INSTANCES);
    }

    if suite.wants(&[BasisKind::Lagrange]) {
        let (failures, total) = barycentric_forms_agree(suite.opts.seed, suite.opts.corrupt);
        suite.push("lagrange: first and second barycentric forms agree", failures, total);
    }

    if suite.wants(&[BasisKind::Bernstein]) {
        let mut failures = Vec::new();
        let mut fact = Rational::from_i64(1);
        for row in bernstein_norm_table(MAX_DIMENSION) {
            let n = row.n as i64;
            fact *= Rational::from_i64(n);
            let d = suite.tamper(crate::bernstein::diff_matrix_bernstein::<Rational>(row.n));
            let pow2 = Rational::from_i64(1i64 << n);
            let ok = d.inf_norm_exact() == Rational::from_i64(2 * n)
                && row.norm_d_pow_n == pow2 * fact.clone()
                && row.next_power_vanishes;
            if !ok {
                failures.push(format!("n = {n}"));
            }
        }
        suite.push("bernstein: norm identities", failures, MAX_DIMENSION);
    }

    if suite.wants(&[BasisKind::Hermite]) {
        let nodes = NodeSet::confluent(
            vec![Rational::from_i64(-1), Rational::from_i64(0), Rational::from_i64(1)],
            vec![3, 4, 2],
        )
        .expect("valid nodes");
        let spec = BasisSpec::Hermite(nodes);
        let ok = match (suite.diff(&spec), conjugation_oracle(&spec)) {
            (Ok(d), Ok(o)) => d == o && d == hermite_reference(),
            _ => false,
        };
        let failures = if ok { vec![] } else { vec!["nodes [-1,0,1], s = [3,4,2]".to_string()] };
        suite.push("hermite: 9x9 reference matrix", failures, 1);
    }
}

/// The 9×9 Hermite matrix on `[−1, 0, 1]` with confluencies `[3, 4, 2]`.
pub fn hermite_reference() -> Matrix<Rational> {
    let h = |n: i64, d: i64| Rational::ratio(n, d);
    let z = || h(0, 1);
    let i = |n: i64| h(n, 1);
    Matrix::from_rows(vec![
        vec![z(), i(1), z(), z(), z(), z(), z(), z(), z()],
        vec![z(), z(), i(2), z(), z(), z(), z(), z(), z()],
        vec![h(-201, 2), h(-177, 4), i(-15), i(96), i(-60), i(24), i(-12), h(9, 2), h(-3, 4)],
        vec![z(), z(), z(), z(), i(1), z(), z(), z(), z()],
        vec![z(), z(), z(), z(), z(), i(2), z(), z(), z()],
        vec![z(), z(), z(), z(), z(), z(), i(3), z(), z()],
        vec![h(83, 4), i(6), i(1), i(-24), i(12), i(-12), i(4), h(13, 4), h(-1, 2)],
        vec![z(), z(), z(), z(), z(), z(), z(), z(), i(1)],
        vec![i(35), i(11), i(2), z(), i(48), z(), i(16), i(-35), i(11)],
    ])
    .expect("rectangular")
}

pub const FORM_AGREEMENT_TOL: f64 = 1e-13;

/// Random data on Chebyshev and equispaced nodes, evaluated at random
/// points; `|p₁ − p₂| ≤ tol · max(|p₂|, ‖ρ‖_∞)`.
fn barycentric_forms_agree(seed: u64, corrupt: bool) -> (Vec<String>, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 3);
    let mut failures = Vec::new();
    let mut total = 0;
    for family in [NodeFamily::Chebyshev, NodeFamily::Equispaced] {
        for n in 1..MAX_DIMENSION {
            let Ok(nodes) = NodeSet::simple(family.nodes(n)) else { continue };
            let Ok(w) = bary_weights(&nodes) else { continue };
            let data: Vec<f64> = (0..=n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let scale = data.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            for _ in 0..25 {
                total += 1;
                let z: f64 = rng.gen_range(-1.0..1.0);
                let (Ok(mut p1), Ok(p2)) = (w.eval_first_form(&data, &z), w.eval_second_form(&data, &z)) else {
                    failures.push(format!("{family} n = {n}: evaluation error"));
                    continue;
                };
                if corrupt {
                    p1 += 1.0;
                }
                if (p1 - p2).abs() > FORM_AGREEMENT_TOL * p2.abs().max(scale) {
                    failures.push(format!("{family} n = {n}, z = {z}: {p1} vs {p2}"));
                }
            }
        }
    }
    (failures, total)
}

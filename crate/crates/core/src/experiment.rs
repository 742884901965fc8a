//! Conditioning experiments for Hermite and Lagrange interpolation in
//! double precision: `‖D‖_∞`, `‖D·𝟏‖_∞` and the grid error of
//! interpolating the constant `1`.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use rayon::prelude::*;

use crate::basis::NodeSet;
use crate::error::{Error, Result};
use crate::hermite::{self, constant_data, gen_bary_weights};
use crate::lagrange::bary_weights;

pub const FIBONACCI_NS: [usize; 7] = [3, 5, 8, 13, 21, 34, 55];
pub const GRID_POINTS: usize = 1001;
pub const CSV_HEADER: &str = "n,node_family,confluency,norm_D,norm_Z,max_err";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeFamily {
    Chebyshev,
    Equispaced,
}

impl NodeFamily {
    pub fn name(self) -> &'static str {
        match self {
            NodeFamily::Chebyshev => "chebyshev",
            NodeFamily::Equispaced => "equispaced",
        }
    }

    /// `n+1` nodes on `[−1, 1]`: `cos(π(n−j)/n)` or `−1 + 2j/n`.
    pub fn nodes(self, n: usize) -> Vec<f64> {
        if n == 0 {
            return vec![0.0];
        }
        let nf = n as f64;
        (0..=n)
            .map(|j| match self {
                NodeFamily::Chebyshev => (std::f64::consts::PI * (n - j) as f64 / nf).cos(),
                NodeFamily::Equispaced => -1.0 + 2.0 * j as f64 / nf,
            })
            .collect()
    }
}

impl fmt::Display for NodeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NodeFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chebyshev" => Ok(NodeFamily::Chebyshev),
            "equispaced" => Ok(NodeFamily::Equispaced),
            _ => Err(Error::Parse(format!("unknown node family '{s}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Experiment {
    HermiteNorms,
    HermiteError,
    LagrangeError,
}

impl Experiment {
    pub fn name(self) -> &'static str {
        match self {
            Experiment::HermiteNorms => "hermite-norms",
            Experiment::HermiteError => "hermite-error",
            Experiment::LagrangeError => "lagrange-error",
        }
    }
}

impl fmt::Display for Experiment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Experiment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hermite-norms" => Ok(Experiment::HermiteNorms),
            "hermite-error" => Ok(Experiment::HermiteError),
            "lagrange-error" => Ok(Experiment::LagrangeError),
            _ => Err(Error::Parse(format!("unknown experiment '{s}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentRecord {
    pub n: usize,
    pub node_family: NodeFamily,
    pub confluency: usize,
    pub norm_d: f64,
    pub norm_z: f64,
    pub max_err: f64,
}

impl ExperimentRecord {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{:e},{:e},{:e}",
            self.n, self.node_family, self.confluency, self.norm_d, self.norm_z, self.max_err
        )
    }
}

/// `GRID_POINTS` equally spaced points from −1 to 1 inclusive.
pub fn grid() -> Vec<f64> {
    let m = (GRID_POINTS - 1) as f64;
    (0..GRID_POINTS).map(|k| -1.0 + 2.0 * k as f64 / m).collect()
}

/// One row. Lagrange experiments always use confluency 1.
pub fn run_row(which: Experiment, family: NodeFamily, confluency: usize, n: usize) -> Result<ExperimentRecord> {
    let s = match which {
        Experiment::LagrangeError => 1,
        _ => confluency,
    };
    if s == 0 {
        return Err(Error::ZeroConfluency(0));
    }
    let tau = family.nodes(n);
    let set = NodeSet::confluent(tau.clone(), vec![s; tau.len()])?;
    let ones = constant_data(&set, &1.0);

    let (d, max_err) = match which {
        Experiment::LagrangeError => {
            let w = bary_weights(&set)?;
            let d = crate::lagrange::diff_matrix_from_weights(&w);
            let err = grid_error(|z| w.eval_first_form(&ones, &z))?;
            (d, err)
        }
        _ => {
            let w = gen_bary_weights(&set)?;
            let d = hermite::diff_matrix_from_weights(&w)?;
            let err = grid_error(|z| w.hermite_eval(&ones, &z))?;
            (d, err)
        }
    };
    let z = d.apply(&ones)?;
    Ok(ExperimentRecord {
        n,
        node_family: family,
        confluency: s,
        norm_d: d.inf_norm(),
        norm_z: z.iter().fold(0.0, |m, v| f64::max(m, v.abs())),
        max_err,
    })
}

fn grid_error(eval: impl Fn(f64) -> Result<f64>) -> Result<f64> {
    grid()
        .into_iter()
        .map(|z| eval(z).map(|p| (p - 1.0).abs()))
        .try_fold(0.0, |m, e| e.map(|e| f64::max(m, e)))
}

/// Rows for every `n`, computed in parallel and returned in input order.
pub fn run(which: Experiment, family: NodeFamily, confluency: usize, ns: &[usize]) -> Result<Vec<ExperimentRecord>> {
    ns.par_iter()
        .map(|&n| run_row(which, family, confluency, n))
        .collect()
}

pub fn write_csv<W: Write>(mut out: W, which: Experiment, records: &[ExperimentRecord]) -> io::Result<()> {
    writeln!(
        out,
        "# {which}: {GRID_POINTS}-point uniform grid on [-1,1], double precision"
    )?;
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(out, "{}", r.csv_line())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_families() {
        let c = NodeFamily::Chebyshev.nodes(4);
        assert_eq!(c.len(), 5);
        assert_eq!(c[0], -1.0);
        assert_eq!(c[4], 1.0);
        assert!((c[1] + std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert_eq!(NodeFamily::Equispaced.nodes(4), vec![-1.0, -0.5, 0.0, 0.5, 1.0]);
    }

    #[test]
    fn grid_endpoints() {
        let g = grid();
        assert_eq!(g.len(), GRID_POINTS);
        assert_eq!(g[0], -1.0);
        assert_eq!(g[GRID_POINTS - 1], 1.0);
        assert_eq!(g[500], 0.0);
    }

    #[test]
    fn small_rows_are_accurate() {
        let r = run_row(Experiment::HermiteNorms, NodeFamily::Chebyshev, 3, 3).unwrap();
        assert_eq!(r.confluency, 3);
        assert!(r.norm_d > 1.0);
        assert!(r.norm_z < 1e-12 * r.norm_d);
        assert!(r.max_err < 1e-12);
        let l = run_row(Experiment::LagrangeError, NodeFamily::Chebyshev, 3, 8).unwrap();
        assert_eq!(l.confluency, 1);
        assert!(l.max_err < 1e-13);
    }

    #[test]
    fn csv_layout() {
        let rows = run(Experiment::LagrangeError, NodeFamily::Equispaced, 1, &[3, 5]).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, Experiment::LagrangeError, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert!(lines[0].starts_with('#'));
        assert!(lines[0].contains("1001"));
        assert_eq!(lines[1], CSV_HEADER);
        assert!(lines[2].starts_with("3,equispaced,1,"));
        assert!(lines[3].starts_with("5,equispaced,1,"));
    }

    #[test]
    fn names_parse() {
        for e in [Experiment::HermiteNorms, Experiment::HermiteError, Experiment::LagrangeError] {
            assert_eq!(e.name().parse::<Experiment>().unwrap(), e);
        }
        assert!("plot".parse::<Experiment>().is_err());
        assert!("random".parse::<NodeFamily>().is_err());
    }
}

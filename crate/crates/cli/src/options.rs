//! Flags shared by every subcommand and their validation.

use std::path::PathBuf;

use clap::{Args, ValueEnum};
use qcurv_core::ring::{rational_to_f64, BigRational};
use qcurv_core::sphere::Geometry;
use qcurv_core::terms::{Case, Setting};

use crate::report::{Meta, Num};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad flags or inputs; exit code 2.
    #[error("usage: {0}")]
    Usage(String),
    /// A computation could not be carried out; exit code 1.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

impl From<qcurv_core::sphere::SphereError> for CliError {
    fn from(e: qcurv_core::sphere::SphereError) -> Self {
        use qcurv_core::sphere::SphereError::*;
        match e {
            NonPositive { .. } | BadInput(_) => CliError::Usage(e.to_string()),
            other => CliError::Failed(other.to_string()),
        }
    }
}

impl From<qcurv_core::terms::TermError> for CliError {
    fn from(e: qcurv_core::terms::TermError) -> Self {
        CliError::Failed(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    Dim4,
    General,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GeometryArg {
    Sphere,
    S2xs2,
}

/// `--n`: an integer dimension or `symbolic`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NArg {
    Int(i64),
    Symbolic,
}

impl std::str::FromStr for NArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "symbolic" {
            return Ok(NArg::Symbolic);
        }
        s.parse().map(NArg::Int).map_err(|_| format!("expected an integer or `symbolic`, got `{s}`"))
    }
}

#[derive(Clone, Debug, Default, Args)]
pub struct Options {
    #[arg(long, global = true, value_enum)]
    pub case: Option<CaseArg>,
    /// Dimension: an integer or `symbolic`.
    #[arg(long, global = true)]
    pub n: Option<NArg>,
    #[arg(long, global = true, value_enum)]
    pub geometry: Option<GeometryArg>,
    /// Polynomial in x = cos θ, e.g. `1/2 + 3*x^2 - x^3`.
    #[arg(long, global = true)]
    pub profile: Option<String>,
    /// Möbius parameter.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub s: Option<f64>,
    /// Exponent of the nonlinearity, a rational such as `4` or `13/2`.
    #[arg(long, global = true)]
    pub p: Option<String>,
    #[arg(long, global = true, default_value_t = 400)]
    pub nodes: usize,
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

impl Options {
    pub fn defaults() -> Self {
        Options { nodes: 400, ..Options::default() }
    }

    /// The symbolic setting selected by `--case` and `--n`.
    pub fn setting(&self) -> Result<Setting, CliError> {
        let case = match (self.case, self.n) {
            (Some(c), _) => c,
            (None, Some(NArg::Int(4))) | (None, None) => CaseArg::Dim4,
            (None, Some(_)) => CaseArg::General,
        };
        match (case, self.n) {
            (CaseArg::Dim4, None | Some(NArg::Int(4))) => Ok(Setting::dim4()),
            (CaseArg::Dim4, Some(NArg::Int(k))) => usage(format!("--case dim4 needs n = 4, got --n {k}")),
            (CaseArg::Dim4, Some(NArg::Symbolic)) => usage("--case dim4 has n = 4; --n symbolic is for --case general"),
            (CaseArg::General, None | Some(NArg::Symbolic)) => Ok(Setting::general_symbolic()),
            (CaseArg::General, Some(NArg::Int(4))) => usage("--case general excludes n = 4"),
            (CaseArg::General, Some(NArg::Int(k))) if k < 3 => usage(format!("dimension must be at least 3, got {k}")),
            (CaseArg::General, Some(NArg::Int(k))) => Ok(Setting::general(k)?),
        }
    }

    /// The numeric geometry selected by `--geometry`, `--case` and `--n`.
    pub fn geometry(&self) -> Result<Geometry, CliError> {
        match self.geometry.unwrap_or(GeometryArg::Sphere) {
            GeometryArg::S2xs2 => {
                if self.case == Some(CaseArg::General) || matches!(self.n, Some(NArg::Int(k)) if k != 4) {
                    return usage("S^2xS^2 is four-dimensional: use --case dim4");
                }
                if self.n == Some(NArg::Symbolic) {
                    return usage("numeric commands need an integer --n");
                }
                Ok(Geometry::ProductS2xS2)
            }
            GeometryArg::Sphere => {
                if self.n == Some(NArg::Symbolic) {
                    return usage("numeric commands need an integer --n");
                }
                let s = self.setting()?;
                let n = match s.case {
                    Case::Dim4 => 4,
                    Case::General => match self.n {
                        Some(NArg::Int(k)) => k,
                        _ => return usage("--case general on a sphere needs an integer --n"),
                    },
                };
                Ok(Geometry::sphere(n as u32)?)
            }
        }
    }

    pub fn exponent(&self) -> Result<Option<f64>, CliError> {
        let Some(text) = &self.p else { return Ok(None) };
        let r: BigRational = text.trim().parse().map_err(|_| CliError::Usage(format!("--p expects a rational, got `{text}`")))?;
        let v = rational_to_f64(&r);
        if v <= 1.0 {
            return usage(format!("--p must exceed 1, got {text}"));
        }
        Ok(Some(v))
    }

    pub fn meta(&self) -> Meta {
        Meta {
            case: self.case.map(|c| match c {
                CaseArg::Dim4 => "dim4".into(),
                CaseArg::General => "general".into(),
            }),
            n: self.n.map(|n| match n {
                NArg::Int(k) => k.to_string(),
                NArg::Symbolic => "symbolic".into(),
            }),
            geometry: self.geometry.map(|g| match g {
                GeometryArg::Sphere => "sphere".into(),
                GeometryArg::S2xs2 => "s2xs2".into(),
            }),
            profile: self.profile.clone(),
            s: self.s.map(Num),
            p: self.p.clone(),
            seed: self.seed,
            nodes: Some(self.nodes),
            tol: self.tol.map(Num),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn with(case: Option<CaseArg>, n: Option<NArg>) -> Options {
        Options { case, n, ..Options::defaults() }
    }

    #[test]
    fn settings() {
        assert_eq!(with(None, None).setting().unwrap(), Setting::dim4());
        assert_eq!(with(Some(CaseArg::General), None).setting().unwrap(), Setting::general_symbolic());
        assert_eq!(with(None, Some(NArg::Int(7))).setting().unwrap(), Setting::general(7).unwrap());
        assert!(matches!(with(Some(CaseArg::Dim4), Some(NArg::Int(7))).setting(), Err(CliError::Usage(_))));
        assert!(matches!(with(Some(CaseArg::General), Some(NArg::Int(4))).setting(), Err(CliError::Usage(_))));
        assert!(matches!(with(Some(CaseArg::General), Some(NArg::Int(2))).setting(), Err(CliError::Usage(_))));
    }

    #[test]
    fn geometries() {
        assert_eq!(with(None, None).geometry().unwrap(), Geometry::RoundSphere(4));
        assert_eq!(with(None, Some(NArg::Int(6))).geometry().unwrap(), Geometry::RoundSphere(6));
        assert!(with(Some(CaseArg::General), None).geometry().is_err());
        let prod = Options { geometry: Some(GeometryArg::S2xs2), ..with(Some(CaseArg::General), None) };
        assert!(prod.geometry().is_err());
    }

    #[test]
    fn exponents() {
        let o = Options { p: Some("13/2".into()), ..Options::defaults() };
        assert_eq!(o.exponent().unwrap(), Some(6.5));
        let o = Options { p: Some("x".into()), ..Options::defaults() };
        assert!(o.exponent().is_err());
    }
}

//! The subcommands. Each returns its records; `run` wraps them in a report.

use clap::Subcommand;
use qcurv_core::ibp::prove_all;
use qcurv_core::profile::parse_profile;
use qcurv_core::sphere::{
    gm_path_scan, identify_mobius, integral_identities, mobius_solution, newton_solve, pde_residual,
    random_cubic, random_perturbation, random_positive_cubic, relative_residual, theta2_eval, volume_bookkeeping,
    Datum, Equation, Geometry, NewtonConfig, NewtonReport, Quadrature,
};
use qcurv_core::terms::{final_assembly, verify_combination, verify_pointwise, Case, Identity, Setting};

use crate::options::{CliError, GeometryArg, Options};
use crate::report::{Num, Record, Report, Status, Trace};
use crate::suite;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Exact pointwise identities, the coefficient combination and the assembly.
    VerifyPointwise,
    /// Divergence certificates for every A_i with i ≥ 1.
    VerifyIbp,
    /// Quadrature double entry of the integral identities on one profile.
    VerifyIntegral,
    /// Residuals of a candidate solution (Möbius datum by default).
    CheckSolution,
    /// Minimum scalar curvature along the interpolating conformal path.
    GmScan,
    /// Damped Newton iteration for the constant-Q equation.
    Solve,
    /// The full acceptance suite.
    All,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::VerifyPointwise => "verify-pointwise",
            Command::VerifyIbp => "verify-ibp",
            Command::VerifyIntegral => "verify-integral",
            Command::CheckSolution => "check-solution",
            Command::GmScan => "gm-scan",
            Command::Solve => "solve",
            Command::All => "all",
        }
    }
}

pub const GM_STEPS: usize = 50;
pub const IDENTITY_TOL: f64 = 1e-9;
pub const PDE_TOL: f64 = 1e-8;

/// `dim4`, `general(n)` or `general(n=7)`, used as the id prefix so symbolic
/// and specialized records never share an id.
pub fn prefix(s: &Setting) -> String {
    s.label()
}

fn with_prefix(s: &Setting, id: Identity) -> String {
    let full = id.id(s.case);
    match full.split_once('/') {
        Some((_, tail)) => format!("{}/{tail}", prefix(s)),
        None => full,
    }
}

/// Pointwise identities, the coefficient combination and the assembly.
pub fn pointwise_records(s: &Setting) -> Result<Vec<Record>, CliError> {
    let mut out = identity_records(s)?;
    out.push(combination_record(s)?);
    out.push(assembly_record(s)?);
    Ok(out)
}

pub fn identity_records(s: &Setting) -> Result<Vec<Record>, CliError> {
    let mut out = Vec::new();
    for id in Identity::pointwise(s.case) {
        let r = verify_pointwise(s, id)?;
        let mut rec = Record::new(with_prefix(s, id), id.anchor(s.case), Status::exact(r.is_zero()), Some(0.0));
        if !r.is_zero() {
            rec.residual = None;
            rec = rec.detail(r.notation());
        }
        out.push(rec);
    }
    Ok(out)
}

pub fn combination_record(s: &Setting) -> Result<Record, CliError> {
    let outcome = verify_combination(s)?;
    let status = match &outcome.status {
        qcurv_core::terms::CombinationStatus::PointwiseZero => Status::ExactZero,
        qcurv_core::terms::CombinationStatus::CertifiedDivergence(_) => Status::CertifiedDivergence,
        qcurv_core::terms::CombinationStatus::Fail(_) => Status::Fail,
    };
    let mut rec = Record::new(with_prefix(s, Identity::Combination), Identity::Combination.anchor(s.case), status, None);
    match &outcome.status {
        qcurv_core::terms::CombinationStatus::CertifiedDivergence(c) => rec = rec.certificate(c),
        qcurv_core::terms::CombinationStatus::Fail(e) => rec = rec.detail(format!("{e}; residual {}", outcome.pointwise.notation())),
        qcurv_core::terms::CombinationStatus::PointwiseZero => rec.residual = Some(Num(0.0)),
    }
    Ok(rec)
}

pub fn assembly_record(s: &Setting) -> Result<Record, CliError> {
    let r = final_assembly(s)?;
    let mut rec = Record::new(
        with_prefix(s, Identity::Assembly),
        Identity::Assembly.anchor(s.case),
        Status::exact(r.is_zero()),
        r.is_zero().then_some(0.0),
    );
    if !r.is_zero() {
        rec = rec.detail(r.notation());
    }
    Ok(rec)
}

pub fn ibp_records(s: &Setting) -> Result<Vec<Record>, CliError> {
    let certs = match prove_all(s) {
        Ok(c) => c,
        Err(e) => {
            return Ok(vec![Record::new(format!("{}/ibp", prefix(s)), "∫ A_i dv = 0, i ≥ 1", Status::Fail, None)
                .detail(e.to_string())])
        }
    };
    let mut out = Vec::new();
    for c in &certs {
        let i = c.label.trim_start_matches('A');
        let ok = c.verifies(&s.bg);
        let status = match (ok, c.terms.is_empty()) {
            (false, _) => Status::Fail,
            (true, true) => Status::ExactZero,
            (true, false) => Status::CertifiedDivergence,
        };
        let mut rec = Record::new(
            format!("{}/ibp-a{i}", prefix(s)),
            format!("∫ A_{i} dv = 0, A_{i} = div W"),
            status,
            ok.then_some(0.0),
        )
        .certificate(c);
        if s.case == Case::Dim4 && i == "3" {
            rec = rec.detail("printed coefficient -1 of Δu(∇Δu,∇u) gives no divergence; -2 is used");
        }
        out.push(rec);
    }
    Ok(out)
}

fn geometry_prefix(geom: Geometry) -> String {
    geom.name()
}

pub fn datum_from_profile(text: &str) -> Result<Datum, CliError> {
    parse_profile(text).map(Datum::Poly).map_err(|e| CliError::Usage(format!("--profile: {e}")))
}

pub fn integral_records(geom: Geometry, datum: &Datum, nodes: usize, tol: f64) -> Result<Vec<Record>, CliError> {
    let recs = integral_identities(geom, datum, nodes, tol)?;
    Ok(recs
        .into_iter()
        .map(|r| {
            let tail = r.id.split_once('/').map_or(r.id.as_str(), |(_, t)| t);
            Record::new(format!("{}/{tail}", geometry_prefix(geom)), r.anchor, Status::numeric(r.passed), Some(r.residual))
                .detail(format!(
                    "lhs {:.17e}, rhs {:.17e}, doubling change {:.3e}",
                    r.lhs, r.rhs, r.doubling_change
                ))
        })
        .collect())
}

/// Residual checks of a candidate solution. `mobius` is the parameter when
/// the datum is a Möbius factor, enabling the volume bookkeeping.
pub fn solution_records(
    eq: &Equation,
    datum: &Datum,
    mobius: Option<f64>,
    nodes: usize,
    tol: f64,
) -> Result<Vec<Record>, CliError> {
    let geom = eq.geom;
    let g = geometry_prefix(geom);
    let quad = Quadrature::new(geom, nodes)?;
    let label = match mobius {
        Some(s) => format!("{g}/mobius(s={s})"),
        None => g.clone(),
    };
    let pde = pde_residual(eq, datum, &quad.nodes)?;
    let eq_anchor = match eq.case() {
        Case::Dim4 => "P u + Q = e^{pu}",
        Case::General => "P u = u^{p-1}, u > 0",
    };
    let mut out = vec![Record::new(format!("{label}/pde-residual"), eq_anchor, Status::numeric(pde.sup < tol), Some(pde.sup))];
    let theta = theta2_eval(eq.case(), datum, &quad)?;
    let mut detail = format!("min {:.3e}, L² {:.3e}, min Scal of conformal metric {:.6}", theta.min, theta.l2, theta.scal_min);
    if !theta.scal_positive() {
        detail.push_str("; positivity precondition violated");
    }
    out.push(
        Record::new(
            format!("{label}/theta2-sup"),
            "Θ² = 0 for a conformally Einstein metric",
            Status::numeric(theta.sup < tol),
            Some(theta.sup),
        )
        .detail(detail),
    );
    out.push(gm_record(geom, datum, &quad.nodes, &label)?);
    if let Some(s) = mobius {
        let (lhs, rhs) = volume_bookkeeping(geom, s, &quad)?;
        let r = relative_residual(lhs, rhs);
        let anchor = match eq.case() {
            Case::Dim4 => "Q Vol = Q̃ ∫ e^{4u} dv",
            Case::General => "Q ∫ w dv = Q̃ ∫ w^{(n+4)/(n-4)} dv",
        };
        out.push(
            Record::new(format!("{label}/volume-bookkeeping"), anchor, Status::numeric(r < tol), Some(r))
                .detail(format!("lhs {lhs:.17e}, rhs {rhs:.17e}")),
        );
    }
    Ok(out)
}

pub fn gm_record(geom: Geometry, datum: &Datum, nodes: &[f64], label: &str) -> Result<Record, CliError> {
    let scan = gm_path_scan(geom, datum, GM_STEPS, nodes)?;
    Ok(Record::new(
        format!("{label}/gm-path-min"),
        "min over t ∈ [0,1] of Scal along the conformal path > 0",
        Status::numeric(scan.positive()),
        Some(scan.min),
    )
    .detail(format!("minimum at t = {}, x = {:.6}", scan.t_at_min, scan.x_at_min)))
}

/// Newton run records: convergence, and on round spheres whether the limit
/// is a Möbius factor.
pub fn newton_records(
    eq: &Equation,
    init: &Datum,
    cfg: &NewtonConfig,
    label: &str,
) -> Result<(Vec<Record>, Trace, NewtonReport), CliError> {
    let rep = newton_solve(eq, init, cfg)?;
    let mut detail = format!(
        "iterations {}, non-constant mass {:.3e}, constant mode {:.17e}",
        rep.trace.len().saturating_sub(1),
        rep.nonconstant_mass,
        rep.coeffs[0]
    );
    if !rep.singular_modes.is_empty() {
        detail.push_str(&format!(", numerically singular Jacobian in modes {:?}", rep.singular_modes));
    }
    let mut out = vec![Record::new(
        format!("{label}/newton"),
        "Galerkin residual < tol",
        Status::numeric(rep.converged && rep.pointwise < PDE_TOL),
        Some(rep.residual),
    )
    .detail(detail)];
    if let Geometry::RoundSphere(_) = eq.geom {
        if rep.converged && rep.nonconstant_mass > 1e-8 {
            let quad = Quadrature::new(eq.geom, 200)?;
            let (s, sup) = identify_mobius(eq.geom, &rep.datum, &quad.nodes)?;
            out.push(
                Record::new(format!("{label}/mobius-match"), "limit equals a Möbius factor", Status::numeric(sup < PDE_TOL), Some(sup))
                    .detail(format!("s = {s:.17e}")),
            );
        }
    }
    let trace = Trace { id: format!("{label}/newton"), residuals: rep.trace.iter().map(|v| Num(*v)).collect() };
    Ok((out, trace, rep))
}

/// Random initial data for a Newton run.
pub fn random_initial(eq: &Equation, seed: u64) -> Datum {
    let amplitude = match eq.geom {
        Geometry::ProductS2xS2 => 0.1,
        Geometry::RoundSphere(_) => 0.3,
    };
    random_perturbation(eq.constant_solution(), amplitude, seed)
}

pub fn run(cmd: Command, opts: &Options) -> Result<Report, CliError> {
    let tol = opts.tol;
    let mut traces = Vec::new();
    let records = match cmd {
        Command::VerifyPointwise => pointwise_records(&opts.setting()?)?,
        Command::VerifyIbp => {
            let s = opts.setting()?;
            let mut r = ibp_records(&s)?;
            r.push(combination_record(&s)?);
            r
        }
        Command::VerifyIntegral => {
            let geom = opts.geometry()?;
            let datum = match (&opts.profile, geom.n()) {
                (Some(p), _) => datum_from_profile(p)?,
                (None, 4) => random_cubic(opts.seed.unwrap_or(0)),
                (None, _) => random_positive_cubic(opts.seed.unwrap_or(0)),
            };
            integral_records(geom, &datum, opts.nodes, tol.unwrap_or(IDENTITY_TOL))?
        }
        Command::CheckSolution | Command::GmScan => {
            let geom = opts.geometry()?;
            let eq = match opts.exponent()? {
                Some(p) => Equation::new(geom, p),
                None => Equation::critical(geom),
            };
            let (datum, mobius) = match (&opts.profile, opts.s) {
                (Some(_), Some(_)) => return Err(CliError::Usage("give either --profile or --s".into())),
                (Some(p), None) => (datum_from_profile(p)?, None),
                (None, s) if opts.geometry != Some(GeometryArg::S2xs2) => {
                    let s = s.unwrap_or(0.5);
                    (mobius_solution(geom, s)?, Some(s))
                }
                (None, Some(_)) => return Err(CliError::Usage("S^2xS^2 has no Möbius family; use --profile".into())),
                (None, None) => (Datum::constant(eq.constant_solution()), None),
            };
            if cmd == Command::GmScan {
                let quad = Quadrature::new(geom, opts.nodes)?;
                vec![gm_record(geom, &datum, &quad.nodes, &geometry_prefix(geom))?]
            } else {
                solution_records(&eq, &datum, mobius, opts.nodes, tol.unwrap_or(PDE_TOL))?
            }
        }
        Command::Solve => {
            let geom = opts.geometry()?;
            let eq = match opts.exponent()? {
                Some(p) => Equation::new(geom, p),
                None => Equation::critical(geom),
            };
            let init = match &opts.profile {
                Some(p) => datum_from_profile(p)?,
                None => random_initial(&eq, opts.seed.unwrap_or(0)),
            };
            let cfg = NewtonConfig { nodes: opts.nodes, tol: tol.unwrap_or(NewtonConfig::default().tol), ..NewtonConfig::default() };
            let (recs, trace, _) = newton_records(&eq, &init, &cfg, &geometry_prefix(geom))?;
            traces.push(trace);
            recs
        }
        Command::All => return Ok(suite::run_suite(opts.meta())),
    };
    Ok(Report::new(cmd.name(), opts.meta(), records, traces))
}

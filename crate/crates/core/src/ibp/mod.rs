//! Certificates that integrals of jet expressions vanish, found by solving
//! for a vector field whose divergence is the integrand.

mod ansatz;
mod certificate;

pub use ansatz::{columns, grade, AnsatzConfig};
pub use certificate::Certificate;

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::jet::{divergence, normal_form, Background, JetError, JetExpr, JetMonomial};
use crate::ring::{solve_exact, ExactMatrix, RationalFunction, RingError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum IbpError {
    #[error(
        "no certificate for {label} among {columns} candidate fields (rank {rank}); \
         monomials outside the span: {unmatched:?}"
    )]
    NoCertificate { label: String, columns: usize, rank: usize, unmatched: Vec<String> },
    #[error("certificate for {0} does not replay to zero")]
    ReplayFailed(String),
    #[error(transparent)]
    Jet(#[from] JetError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Coefficient vectors of a family of expressions over a common monomial basis.
fn coefficient_rows(exprs: &[JetExpr]) -> (Vec<JetMonomial>, Vec<Vec<RationalFunction>>) {
    let monos: BTreeSet<JetMonomial> = exprs.iter().flat_map(|e| e.poly().terms().map(|(m, _)| m.clone())).collect();
    let monos: Vec<JetMonomial> = monos.into_iter().collect();
    let index: BTreeMap<&JetMonomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = vec![vec![RationalFunction::zero(); exprs.len()]; monos.len()];
    for (j, e) in exprs.iter().enumerate() {
        for (m, c) in e.poly().terms() {
            rows[index[m]][j] = c.clone();
        }
    }
    (monos, rows)
}

fn rank_of(rows: &[Vec<RationalFunction>]) -> usize {
    // Rank through the same exact elimination: count pivots of A x = 0.
    let mut m: Vec<Vec<RationalFunction>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let piv = m[r][c].clone();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &piv;
                let pr = m[r].clone();
                for (e, pe) in m[i].iter_mut().zip(&pr) {
                    if !pe.is_zero() {
                        *e = &*e - &(&f * pe);
                    }
                }
            }
        }
        r += 1;
    }
    r
}

fn attempt(
    label: &str,
    target: &JetExpr,
    bg: &Background,
    cfg: &AnsatzConfig,
) -> Result<Certificate, IbpError> {
    let cols = columns(target, cfg);
    let divs: Vec<JetExpr> = cols
        .iter()
        .map(|w| divergence(w, bg).map(|d| normal_form(&d, bg)))
        .collect::<Result<_, _>>()?;
    let mut all = divs.clone();
    all.push(target.clone());
    let (monos, rows) = coefficient_rows(&all);
    let a_rows: Vec<Vec<RationalFunction>> = rows.iter().map(|r| r[..cols.len()].to_vec()).collect();
    let b: Vec<RationalFunction> = rows.iter().map(|r| r[cols.len()].clone()).collect();
    let a = ExactMatrix::from_rows(a_rows.clone())?;
    match solve_exact(&a, &b)? {
        Some(x) => {
            let terms: Vec<(RationalFunction, crate::jet::VectorExpr)> = x
                .into_iter()
                .zip(cols.iter().cloned())
                .filter(|(c, _)| !c.is_zero())
                .collect();
            let cert = Certificate { label: label.to_string(), target: target.clone(), terms, searched: cols.len() };
            if cert.verifies(bg) {
                Ok(cert)
            } else {
                Err(IbpError::ReplayFailed(label.to_string()))
            }
        }
        None => {
            let unmatched = monos
                .iter()
                .zip(&rows)
                .filter(|(_, r)| !r[cols.len()].is_zero() && r[..cols.len()].iter().all(RationalFunction::is_zero))
                .map(|(m, _)| JetExpr::monomial(RationalFunction::one(), m.clone()).notation())
                .collect();
            Err(IbpError::NoCertificate {
                label: label.to_string(),
                columns: cols.len(),
                rank: rank_of(&a_rows),
                unmatched,
            })
        }
    }
}

/// Finds a certificate that `∫ target = 0`, widening the multiplier degree
/// once if the default span is insufficient.
pub fn certify_zero_integral(
    label: &str,
    target: &JetExpr,
    bg: &Background,
    cfg: &AnsatzConfig,
) -> Result<Certificate, IbpError> {
    let target = normal_form(target, bg);
    if target.is_zero() {
        return Ok(Certificate { label: label.to_string(), target, terms: Vec::new(), searched: 0 });
    }
    match attempt(label, &target, bg, cfg) {
        Err(IbpError::NoCertificate { .. }) if cfg.degree_bound < 4 => {
            attempt(label, &target, bg, &cfg.clone().with_degree(4))
        }
        other => other,
    }
}

/// Certificates for every `A_i` with `i ≥ 1`, computed in parallel.
pub fn prove_all(s: &crate::terms::Setting) -> Result<Vec<Certificate>, IbpError> {
    let cfg = AnsatzConfig::new(s.case == crate::terms::Case::General);
    let indices: Vec<usize> = crate::terms::a_range(s.case).filter(|&i| i > 0).collect();
    indices
        .par_iter()
        .map(|&i| {
            let a = crate::terms::a_integrand(s, i).map_err(|e| match e {
                crate::terms::TermError::Jet(j) => IbpError::Jet(j),
                other => IbpError::ReplayFailed(other.to_string()),
            })?;
            certify_zero_integral(&format!("A{i}"), &a.integrand, &s.bg, &cfg)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::{VecBase, VectorExpr};
    use crate::terms::{a_integrand, Setting};

    #[test]
    fn single_field_certificates_in_dimension_four() {
        let s = Setting::dim4();
        let cfg = AnsatzConfig::new(false);
        let a11 = a_integrand(&s, 11).unwrap().integrand;
        let cert = certify_zero_integral("A11", &a11, &s.bg, &cfg).unwrap();
        let expect = VectorExpr::basis(VecBase::V3).mul_scalar(&(&JetExpr::exp_u(-1) * &JetExpr::g(1)));
        assert_eq!(cert.field(), expect);

        // the found field is not unique once H(∇Δu) and Δ²u∇u are in the span
        let a1 = a_integrand(&s, 1).unwrap().integrand;
        assert!(certify_zero_integral("A1", &a1, &s.bg, &cfg).unwrap().verifies(&s.bg));
        let t_grad = VectorExpr::basis(VecBase::V3).apply(crate::jet::Tens::T).mul_scalar(&JetExpr::exp_u(-1));
        let by_hand = Certificate { label: "A1".into(), target: a1, terms: vec![(RationalFunction::int(-1), t_grad)], searched: 1 };
        assert!(by_hand.verifies(&s.bg));
    }

    #[test]
    fn general_first_integrand_certificate_sign() {
        let s = Setting::general_symbolic();
        let cfg = AnsatzConfig::new(true);
        let a1 = a_integrand(&s, 1).unwrap().integrand;
        let cert = certify_zero_integral("A1", &a1, &s.bg, &cfg).unwrap();
        let w = VectorExpr::basis(VecBase::V1).mul_scalar(&(&s.u_pow("-2/(n-4)") * &JetExpr::g(1)));
        assert_eq!(cert.field(), w.scale(&RationalFunction::int(-1)));
    }

    #[test]
    fn printed_dim4_a3_is_not_a_divergence() {
        let s = Setting::dim4();
        let cfg = AnsatzConfig::new(false);
        let printed = crate::terms::a_as_printed(&s, 3).unwrap();
        assert!(certify_zero_integral("A3", &printed, &s.bg, &cfg).is_err());
        let used = a_integrand(&s, 3).unwrap().integrand;
        let cert = certify_zero_integral("A3", &used, &s.bg, &cfg).unwrap();
        let w = VectorExpr::basis(VecBase::V3).mul_scalar(&(&JetExpr::exp_u(-1) * &JetExpr::g(5)));
        assert_eq!(cert.field(), w.scale(&RationalFunction::int(2)));
    }

    #[test]
    fn prove_all_replays_in_both_cases() {
        for s in [Setting::dim4(), Setting::general_symbolic()] {
            let certs = prove_all(&s).unwrap();
            assert_eq!(certs.len(), if s.case == crate::terms::Case::Dim4 { 12 } else { 11 });
            assert!(certs.iter().all(|c| c.verifies(&s.bg)));
        }
    }

    #[test]
    fn symbolic_certificates_specialize() {
        let s = Setting::general_symbolic();
        for cert in prove_all(&s).unwrap() {
            for n in [3, 5, 6, 7, 8, 10] {
                let sp = Setting::general(n).unwrap();
                let c = cert.specialize(&RationalFunction::int(n)).unwrap();
                assert!(c.verifies(&sp.bg), "{} at n={n}", cert.label);
            }
        }
    }

    #[test]
    fn nonzero_integral_has_no_certificate() {
        // ∫ e^{-u}|∇u|² > 0 for nonconstant u
        let s = Setting::dim4();
        let t = &JetExpr::exp_u(-1) * &JetExpr::g(2);
        let err = certify_zero_integral("pos", &t, &s.bg, &AnsatzConfig::new(false)).unwrap_err();
        assert!(matches!(err, IbpError::NoCertificate { .. }));
    }
}

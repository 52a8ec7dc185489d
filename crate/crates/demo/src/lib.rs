//! WebAssembly bindings for the static page in `www/`. Every export takes
//! plain values and returns a JSON string.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use qcurv_core::profile::parse_profile;
use qcurv_core::sphere::{
    gm_path_curve, mobius_solution, pde_residual, relative_residual, theta2_eval, volume_bookkeeping, Datum,
    Equation, Geometry, Quadrature,
};
use qcurv_core::terms::Case;

fn geometry(name: &str, n: u32) -> Result<Geometry, String> {
    match name {
        "sphere" => Geometry::sphere(n).map_err(|e| e.to_string()),
        "s2xs2" => Ok(Geometry::ProductS2xS2),
        other => Err(format!("unknown geometry `{other}`")),
    }
}

fn profile(text: &str) -> Result<Datum, String> {
    parse_profile(text).map(Datum::Poly).map_err(|e| e.to_string())
}

fn case_of(geom: Geometry) -> Case {
    if geom.n() == 4 {
        Case::Dim4
    } else {
        Case::General
    }
}

fn to_json(v: &impl Serialize) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

#[derive(Serialize)]
struct Curve {
    t: Vec<f64>,
    min: Vec<f64>,
}

pub fn gm_scan_curve_json(profile_text: &str, geometry_name: &str, n: u32, steps: usize) -> Result<String, String> {
    let geom = geometry(geometry_name, n)?;
    let datum = profile(profile_text)?;
    let quad = Quadrature::new(geom, 200).map_err(|e| e.to_string())?;
    let curve = gm_path_curve(geom, &datum, steps.clamp(1, 400), &quad.nodes).map_err(|e| e.to_string())?;
    Ok(to_json(&Curve { t: curve.iter().map(|p| p.t_at_min).collect(), min: curve.iter().map(|p| p.min).collect() }))
}

#[derive(Serialize)]
struct Field {
    x: Vec<f64>,
    theta2: Vec<f64>,
    min: f64,
    l2: f64,
    scal_min: f64,
}

pub fn theta2_field_json(profile_text: &str, geometry_name: &str, n: u32, nodes: usize) -> Result<String, String> {
    let geom = geometry(geometry_name, n)?;
    let datum = profile(profile_text)?;
    let quad = Quadrature::new(geom, nodes.clamp(8, 800)).map_err(|e| e.to_string())?;
    let rep = theta2_eval(case_of(geom), &datum, &quad).map_err(|e| e.to_string())?;
    Ok(to_json(&Field { x: quad.nodes.clone(), theta2: rep.values, min: rep.min, l2: rep.l2, scal_min: rep.scal_min }))
}

#[derive(Serialize)]
struct MobiusCheck {
    pde_residual: f64,
    theta2_sup: f64,
    gm_min: f64,
    bookkeeping: f64,
    profile: Vec<(f64, f64)>,
}

pub fn mobius_check_json(n: u32, s: f64) -> Result<String, String> {
    let geom = Geometry::sphere(n).map_err(|e| e.to_string())?;
    let eq = Equation::critical(geom);
    let datum = mobius_solution(geom, s).map_err(|e| e.to_string())?;
    let quad = Quadrature::new(geom, 200).map_err(|e| e.to_string())?;
    let pde = pde_residual(&eq, &datum, &quad.nodes).map_err(|e| e.to_string())?;
    let theta = theta2_eval(eq.case(), &datum, &quad).map_err(|e| e.to_string())?;
    let curve = gm_path_curve(geom, &datum, 50, &quad.nodes).map_err(|e| e.to_string())?;
    let (lhs, rhs) = volume_bookkeeping(geom, s, &quad).map_err(|e| e.to_string())?;
    Ok(to_json(&MobiusCheck {
        pde_residual: pde.sup,
        theta2_sup: theta.sup,
        gm_min: curve.iter().map(|p| p.min).fold(f64::INFINITY, f64::min),
        bookkeeping: relative_residual(lhs, rhs),
        profile: (0..=100).map(|i| -1.0 + 0.02 * i as f64).map(|x| (x, datum.value(x))).collect(),
    }))
}

/// Minimum scalar curvature along the conformal path, per `t`.
#[wasm_bindgen]
pub fn gm_scan_curve(profile: &str, geometry: &str, n: u32, steps: usize) -> Result<String, JsError> {
    gm_scan_curve_json(profile, geometry, n, steps).map_err(|e| JsError::new(&e))
}

/// Θ² of the conformal factor at the quadrature nodes.
#[wasm_bindgen]
pub fn theta2_field(profile: &str, geometry: &str, n: u32, nodes: usize) -> Result<String, JsError> {
    theta2_field_json(profile, geometry, n, nodes).map_err(|e| JsError::new(&e))
}

/// Residual checks of the normalized Möbius factor on `Sⁿ`.
#[wasm_bindgen]
pub fn mobius_check(n: u32, s: f64) -> Result<String, JsError> {
    mobius_check_json(n, s).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn curve_starts_at_background_curvature() {
        let v: Value = serde_json::from_str(&gm_scan_curve_json("1/2*x", "sphere", 4, 10).unwrap()).unwrap();
        assert_eq!(v["t"].as_array().unwrap().len(), 11);
        assert!((v["min"][0].as_f64().unwrap() - 12.0).abs() < 1e-12);
    }

    #[test]
    fn theta_field_of_a_constant_vanishes() {
        let v: Value = serde_json::from_str(&theta2_field_json("1/3", "s2xs2", 4, 32).unwrap()).unwrap();
        assert!(v["theta2"].as_array().unwrap().iter().all(|t| t.as_f64().unwrap().abs() < 1e-12));
    }

    #[test]
    fn mobius_passes() {
        let v: Value = serde_json::from_str(&mobius_check_json(6, 0.5).unwrap()).unwrap();
        assert!(v["pde_residual"].as_f64().unwrap() < 1e-8);
        assert!(v["gm_min"].as_f64().unwrap() > 0.0);
    }

    #[test]
    fn bad_input_is_an_error() {
        assert!(gm_scan_curve_json("x^", "sphere", 4, 10).unwrap_err().contains("offset 2"));
        assert!(theta2_field_json("x", "torus", 4, 10).is_err());
        assert!(mobius_check_json(2, 0.1).is_err());
    }
}

//! CSV sweep tables over the shape parameter.
//!
//! Dialect: comma separators, LF line endings, `.` decimal point, no quoting
//! (no field ever contains a comma). Values carry 12 significant digits so
//! identical invocations are byte-identical.

use hypconic::forms;

/// 12 significant digits, scientific, deterministic.
pub fn sig12(v: f64) -> String {
    format!("{v:.11e}")
}

type Quantity = fn(f64) -> hypconic::Result<f64>;

/// `C`-dependent quantities available for sweeps.
const QUANTITIES: &[(&str, Quantity)] = &[
    ("G", forms::g),
    ("Gprime", forms::g_prime),
    ("Ghat", forms::g_hat),
    ("alpha", forms::alpha),
    ("alpha_deviation", forms::alpha_deviation),
    ("beta", forms::beta),
    ("beta_hat_D", forms::beta_hat_d),
    ("beta_hat_V", forms::beta_hat_v),
    ("area_diff_B_E", forms::area_diff_band_minus_parabola),
    (
        "area_diff_D_E",
        forms::area_diff_horodisk_band_minus_parabola,
    ),
    ("area_triangle", forms::area_asymptotic_triangle),
    ("focal_distance", |c| {
        Ok(hypconic::family::synthetic_elements(c)?.focal_distance)
    }),
    ("band_radius", |c| {
        Ok(hypconic::family::synthetic_elements(c)?.band_radius)
    }),
    (
        "polar_circumference_diff",
        hypconic::sds::circumference_diff_via_polar,
    ),
];

/// Scalar quantities (no `C` column; a single data row).
fn scalar_value(name: &str) -> Option<f64> {
    match name {
        "alpha_root" => Some(forms::alpha_root().value),
        "translation_equiv_constant" => Some(forms::translation_equiv_constant()),
        _ => None,
    }
}

pub fn render(quantities: &[String], c_values: &[f64]) -> Result<String, String> {
    let all_scalar = quantities.iter().all(|q| scalar_value(q).is_some());
    if all_scalar {
        let mut out = quantities.join(",");
        out.push('\n');
        let row: Vec<String> = quantities
            .iter()
            .map(|q| sig12(scalar_value(q).expect("checked scalar")))
            .collect();
        out.push_str(&row.join(","));
        out.push('\n');
        return Ok(out);
    }
    let mut fns: Vec<(&str, Quantity)> = Vec::new();
    for q in quantities {
        if scalar_value(q).is_some() {
            return Err(format!(
                "`{q}` is a scalar quantity; request it in a table of its own"
            ));
        }
        match QUANTITIES.iter().find(|(name, _)| name == q) {
            Some(&(name, f)) => fns.push((name, f)),
            None => {
                let known: Vec<&str> = QUANTITIES.iter().map(|(n, _)| *n).collect();
                return Err(format!(
                    "unknown quantity `{q}`; available: {}, alpha_root, translation_equiv_constant",
                    known.join(", ")
                ));
            }
        }
    }
    let mut out = String::from("C");
    for (name, _) in &fns {
        out.push(',');
        out.push_str(name);
    }
    out.push('\n');
    for &c in c_values {
        out.push_str(&sig12(c));
        for (name, f) in &fns {
            let v = f(c).map_err(|e| format!("{name}({c}): {e}"))?;
            out.push(',');
            out.push_str(&sig12(v));
        }
        out.push('\n');
    }
    Ok(out)
}

//! Study–de Sitter geometry of the exterior of the absolute, co-polar
//! boundaries, and the polar re-derivation of the circumference difference.
//!
//! The exterior carries the sign-flipped BCK metric; its area density is
//! `(x² + y² − 1)^(−3/2)`. For a convex body `K` inside the absolute, the
//! co-polar set `K̃` collects the poles of all lines meeting `K`, and
//!
//! ```text
//! Area_hyp(K) = −2π + Len_SdS(∂K̃),        Len_hyp(∂K) = Area_SdS(K̃).
//! ```
//!
//! These are checked here on the disk, and the second one is exercised in
//! regularized form on the band/parabola pair: the SdS area between the
//! co-polar boundaries reproduces the circumference difference `G^C`.

use crate::conics::{check_shape_parameter, dual_conic, ConicForm, ConicKind};
use crate::error::Error;
use crate::fmath;
use crate::forms;
use crate::models::{one_minus_sq, HomogeneousPoint};
use crate::quad::{self, OracleResult, QuadConfig};
use crate::Result;

use core::f64::consts::TAU;

/// Exterior guard mirroring the interior one: `x² + y² ≥ 1 + 1e-14`.
pub const EXTERIOR_GUARD: f64 = 1e-14;

/// SdS area density `(x² + y² − 1)^(−3/2)` at an exterior point.
pub fn sds_area_density(x: f64, y: f64) -> Result<f64> {
    let q = -one_minus_sq(x, y);
    if !(q >= EXTERIOR_GUARD) {
        return Err(Error::InsideAbsolute { x, y });
    }
    Ok(1.0 / (q * fmath::sqrt(q)))
}

/// SdS arc-length integrand `√((|γ|²−1)|γ̇|² − (γ·γ̇)²)/(|γ|²−1)` at a
/// spacelike curve sample.
pub fn sds_arclength_integrand(pos: (f64, f64), vel: (f64, f64)) -> Result<f64> {
    let q = -one_minus_sq(pos.0, pos.1);
    if !(q >= EXTERIOR_GUARD) {
        return Err(Error::InsideAbsolute { x: pos.0, y: pos.1 });
    }
    let dot = pos.0 * vel.0 + pos.1 * vel.1;
    let v2 = vel.0 * vel.0 + vel.1 * vel.1;
    let radicand = q * v2 - dot * dot;
    if radicand < 0.0 {
        return Err(Error::InvalidParameter {
            name: "spacelike radicand",
            value: radicand,
        });
    }
    Ok(fmath::sqrt(radicand) / q)
}

// conjugation J·M·J with J = diag(1, 1, −1): flips the sign of the
// off-diagonal entries in the third row and column
fn conjugate_by_absolute(m: &ConicForm, kind: ConicKind) -> ConicForm {
    let mm = m.matrix();
    ConicForm::from_matrix(
        [
            [mm[0][0], mm[0][1], -mm[0][2]],
            [mm[1][0], mm[1][1], -mm[1][2]],
            [-mm[2][0], -mm[2][1], mm[2][2]],
        ],
        kind,
    )
}

/// Boundary of the co-polar set of `E^C`: the polar conic of the parabola
/// relative to the absolute, `C²x² + 2y − 2 = 0`, obtained by conjugating
/// the dual matrix with `diag(1, 1, −1)`.
pub fn copolar_boundary_of_e(c: f64) -> Result<ConicForm> {
    let dual = dual_conic(&crate::conics::h_elliptic_parabola(c)?)?;
    let mut polar = conjugate_by_absolute(&dual, ConicKind::Primal).canonical();
    // display gauge: unit coefficient on the linear term, C²x² + 2y − 2
    let m = polar.matrix();
    if m[1][2] != 0.0 {
        polar = polar.scaled(1.0 / m[1][2]);
    }
    Ok(polar)
}

/// Piecewise boundary of the co-polar set of `B^C`.
#[derive(Debug, Clone)]
pub struct CopolarBand {
    /// Dual of the hypercycle as a point conic: `C²x² + y² − 1 = 0`.
    pub hypercycle_dual: ConicForm,
    /// Polars of the band vertices `(±C, 0)` with respect to the absolute:
    /// the vertical lines `±Cx − 1 = 0`, i.e. `x = ±1/C`, which carry the
    /// poles of the supporting lines through the vertices.
    pub vertex_polars: [HomogeneousPoint; 2],
}

/// Compute the co-polar boundary pieces of the half band.
pub fn copolar_boundary_of_b(c: f64) -> Result<CopolarBand> {
    check_shape_parameter(c)?;
    let hypercycle =
        ConicForm::from_upper([1.0 / (c * c), 0.0, 0.0, 1.0, 0.0, -1.0], ConicKind::Primal);
    let dual = dual_conic(&hypercycle)?;
    let mut as_points = conjugate_by_absolute(&dual, ConicKind::Primal).canonical();
    let m = as_points.matrix();
    if m[1][1] != 0.0 {
        as_points = as_points.scaled(1.0 / m[1][1]);
    }
    let absolute = ConicForm::absolute();
    let left = crate::conics::polar_line(HomogeneousPoint::new(-c, 0.0, 1.0)?, &absolute)?;
    let right = crate::conics::polar_line(HomogeneousPoint::new(c, 0.0, 1.0)?, &absolute)?;
    Ok(CopolarBand {
        hypercycle_dual: as_points,
        vertex_polars: [left.canonical(), right.canonical()],
    })
}

/// SdS area of `W̃⁻_η`: `((1 − √(1−C²))/√(1−C²))·artanh η`.
pub fn sds_area_w(c: f64, eta: f64) -> Result<f64> {
    check_shape_parameter(c)?;
    forms::check_eta(eta)?;
    let s = fmath::sqrt((1.0 - c) * (1.0 + c));
    Ok((1.0 - s) / s * forms::artanh(eta)?)
}

/// SdS area of `Ẽ⁻_η` for `η ∈ (−∞, 1)`:
///
/// ```text
/// (1/s)·artanh(s/Q) − artanh((2 − C² + 2Q)/(2 − C²η + 2Q)),
/// Q = √(1 − C²(1+η)/2),  s = √(1−C²).
/// ```
pub fn sds_area_e_tilde(c: f64, eta: f64) -> Result<f64> {
    check_shape_parameter(c)?;
    if !(eta < 1.0) {
        return Err(Error::InvalidParameter {
            name: "eta",
            value: eta,
        });
    }
    let c2 = c * c;
    let s = fmath::sqrt((1.0 - c) * (1.0 + c));
    let q2 = 1.0 - c2 * (1.0 + eta) / 2.0;
    let q = fmath::sqrt(q2);
    // Q² − s² = C²(1−η)/2 exactly: switch to the ln transcription near η → 1
    let term1 = {
        let arg = s / q;
        if arg > 1.0 - 1e-6 {
            fmath::ln((q + s) / (c * fmath::sqrt((1.0 - eta) / 2.0)))
        } else {
            forms::artanh(arg)?
        }
    } / s;
    let num = 2.0 - c2 + 2.0 * q;
    let den = 2.0 - c2 * eta + 2.0 * q;
    // D − N = C²(1−η) exactly
    let term2 = {
        let arg = num / den;
        if arg > 1.0 - 1e-6 {
            0.5 * fmath::ln((den + num) / (c2 * (1.0 - eta)))
        } else {
            forms::artanh(arg)?
        }
    };
    Ok(term1 - term2)
}

/// The `Ẽ⁻_η` area in the addition-formula split valid for `η ∈ (−1, 1)`:
/// `(1/s)·artanh(s/Q) − artanh Q − artanh η`.
pub fn sds_area_e_tilde_split(c: f64, eta: f64) -> Result<f64> {
    check_shape_parameter(c)?;
    if !(eta.abs() < 1.0) {
        return Err(Error::InvalidParameter {
            name: "eta",
            value: eta,
        });
    }
    let s = fmath::sqrt((1.0 - c) * (1.0 + c));
    let q = fmath::sqrt(1.0 - c * c * (1.0 + eta) / 2.0);
    Ok(forms::artanh(s / q)? / s - forms::artanh(q)? - forms::artanh(eta)?)
}

/// SdS area of the quadrant `Z̃⁻`: `artanh C`.
pub fn sds_area_z(c: f64) -> Result<f64> {
    check_shape_parameter(c)?;
    forms::artanh(c)
}

/// The circumference difference `G^C` recovered from the polar picture:
/// `lim_{η→1} 2(W̃ + Z̃ − Ẽ) = 2((1/s)·ln(C/(2s)) + artanh s + artanh C)`.
pub fn circumference_diff_via_polar(c: f64) -> Result<f64> {
    check_shape_parameter(c)?;
    let s = fmath::sqrt((1.0 - c) * (1.0 + c));
    Ok(2.0 * (fmath::ln(c / (2.0 * s)) / s + forms::artanh(s)? + forms::artanh(c)?))
}

/// Both polar-duality identities checked on the hyperbolic disk of radius
/// `R = artanh C`, with closed forms on both sides and the quadrature oracle
/// alongside.
#[derive(Debug, Clone)]
pub struct DiskDualityReport {
    pub radius: f64,
    /// `Area_hyp(K) = 2π(cosh R − 1)` against `−2π + Len_SdS(∂K̃)`.
    pub area_closed: f64,
    pub sds_boundary_length_closed: f64,
    pub area_identity_residual: f64,
    /// `Len_hyp(∂K) = 2π sinh R` against `Area_SdS(K̃)`.
    pub circumference_closed: f64,
    pub sds_copolar_area_closed: f64,
    pub circumference_identity_residual: f64,
    /// Quadrature values for all four quantities, in the same order.
    pub area_oracle: OracleResult,
    pub sds_boundary_length_oracle: OracleResult,
    pub circumference_oracle: OracleResult,
    pub sds_copolar_area_oracle: OracleResult,
}

/// Evaluate the disk duality identities for shape parameter `C`.
pub fn verify_duality_disk(c: f64, cfg: &QuadConfig) -> Result<DiskDualityReport> {
    check_shape_parameter(c)?;
    let radius = fmath::atanh(c);
    let s = fmath::sqrt((1.0 - c) * (1.0 + c));
    // closed forms written through the chart algebra, so the cosh/sinh
    // routes below cross them nontrivially
    let area_closed = TAU * (fmath::cosh(radius) - 1.0);
    let sds_len_closed = TAU / s;
    let circumference_closed = TAU * fmath::sinh(radius);
    let sds_area_closed = TAU * c / s;
    Ok(DiskDualityReport {
        radius,
        area_closed,
        sds_boundary_length_closed: sds_len_closed,
        area_identity_residual: (area_closed - (-TAU + sds_len_closed)).abs(),
        circumference_closed,
        sds_copolar_area_closed: sds_area_closed,
        circumference_identity_residual: (circumference_closed - sds_area_closed).abs(),
        area_oracle: quad::disk_area(c, cfg)?,
        sds_boundary_length_oracle: quad::sds_circle_length(c, cfg)?,
        circumference_oracle: quad::circle_length(c, cfg)?,
        sds_copolar_area_oracle: quad::sds_disk_copolar_area(c, cfg)?,
    })
}

/// `arcoth x = artanh(1/x)`, valid for `|x| > 1`.
pub fn arcoth(x: f64) -> Result<f64> {
    if !(x.abs() > 1.0) {
        return Err(Error::InvalidParameter {
            name: "x",
            value: x,
        });
    }
    forms::artanh(1.0 / x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn density_values() {
        let sqrt2 = core::f64::consts::SQRT_2;
        assert!((sds_area_density(sqrt2, 0.0).unwrap() - 1.0).abs() < 1e-14);
        assert!((sds_area_density(2.0, 0.0).unwrap() - 3.0f64.powf(-1.5)).abs() < 1e-14);
        assert!((sds_area_density(0.0, 2.0).unwrap() - 3.0f64.powf(-1.5)).abs() < 1e-14);
        assert!(sds_area_density(0.5, 0.5).is_err());
        assert!(sds_area_density(1.0, 0.0).is_err());
    }

    #[test]
    fn circle_integrand_is_constant() {
        let c: f64 = 0.5;
        let r = 1.0 / c;
        let v = sds_arclength_integrand((r, 0.0), (0.0, r)).unwrap();
        assert!((v - 1.0 / (1.0f64 - c * c).sqrt()).abs() < 1e-13);
        // radial directions are timelike out here
        assert!(sds_arclength_integrand((r, 0.0), (1.0, 0.0)).is_err());
    }

    #[test]
    fn copolar_parabola_matrix() {
        let c = 0.6f64;
        let p = copolar_boundary_of_e(c).unwrap();
        let expect = ConicForm::from_upper([c * c, 0.0, 0.0, 0.0, 1.0, -2.0], ConicKind::Primal);
        assert!(p.approx_eq(&expect, 1e-14));
        // i.e. the curve C²x² + 2y − 2 = 0 passes through (0, 1)
        assert!(p.eval_affine(0.0, 1.0).abs() < 1e-14);
    }

    #[test]
    fn copolar_band_pieces() {
        let c = 0.6f64;
        let band = copolar_boundary_of_b(c).unwrap();
        let expect = ConicForm::from_upper([c * c, 0.0, 0.0, 1.0, 0.0, -1.0], ConicKind::Primal);
        assert!(band.hypercycle_dual.approx_eq(&expect, 1e-14));
        // vertex polars are x = ±1/C; they bound the quadrant regions and
        // meet the dual hypercycle at (±1/C, 0)
        for line in band.vertex_polars {
            let l = line.coords();
            let x_at = -l[2] / l[0];
            assert!(l[1].abs() < 1e-14);
            assert!((x_at.abs() - 1.0 / c).abs() < 1e-13);
            assert!(band.hypercycle_dual.eval_affine(x_at, 0.0).abs() < 1e-12);
        }
    }

    #[test]
    fn region_area_examples() {
        assert!((sds_area_z(0.6).unwrap() - 0.6931471805599453).abs() < 1e-14);
        assert!((sds_area_w(0.6, 0.5).unwrap() - 0.13732653608351372).abs() < 1e-14);
        assert!((sds_area_e_tilde(0.6, 0.5).unwrap() - 0.3127300951554104).abs() < 1e-13);
        assert!(sds_area_w(0.6, 0.0).is_err());
        assert!(sds_area_e_tilde(0.6, 1.0).is_err());
    }

    #[test]
    fn remo_split_agrees() {
        for &eta in &[-0.9, -0.5, 0.0, 0.3, 0.7, 0.95] {
            for k in 1..10 {
                let c = k as f64 / 10.0;
                let a = sds_area_e_tilde(c, eta).unwrap();
                let b = sds_area_e_tilde_split(c, eta).unwrap();
                assert!((a - b).abs() < 1e-12, "C={c} eta={eta}: {a} vs {b}");
            }
        }
        // the direct form extends below η = −1 where the split does not
        assert!(sds_area_e_tilde(0.5, -3.0).is_ok());
        assert!(sds_area_e_tilde_split(0.5, -3.0).is_err());
    }

    #[test]
    fn polar_combination_reproduces_g() {
        for k in 1..10 {
            let c = k as f64 / 10.0;
            let lhs = circumference_diff_via_polar(c).unwrap();
            let rhs = forms::g(c).unwrap();
            assert!((lhs - rhs).abs() < 1e-12, "C={c}");
        }
    }

    #[test]
    fn polar_combination_is_the_eta_limit() {
        let c = 0.6;
        let eta = 1.0 - 1e-9;
        let partial = 2.0
            * (sds_area_w(c, eta).unwrap() + sds_area_z(c).unwrap()
                - sds_area_e_tilde(c, eta).unwrap());
        assert!((partial - circumference_diff_via_polar(c).unwrap()).abs() < 1e-6);
    }

    #[test]
    fn disk_duality() {
        let report = verify_duality_disk(0.5, &QuadConfig::default()).unwrap();
        assert!(report.area_identity_residual < 1e-13);
        assert!(report.circumference_identity_residual < 1e-13);
        assert!(report.area_oracle.converged);
        assert!((report.area_oracle.value - report.area_closed).abs() < 1e-9);
        assert!(
            (report.sds_boundary_length_oracle.value - report.sds_boundary_length_closed).abs()
                < 1e-8
        );
        assert!((report.circumference_oracle.value - report.circumference_closed).abs() < 1e-8);
        assert!(
            (report.sds_copolar_area_oracle.value - report.sds_copolar_area_closed).abs() < 1e-8
        );
    }

    #[test]
    fn e_minus_v_relation_in_area() {
        // (E − V) + (D − E) = D − V with D − E from the disk-band difference
        let c = 0.6;
        let ev = forms::bph_area_diff_e_minus_v(c).unwrap();
        let de = forms::area_diff_horodisk_band_minus_parabola(c).unwrap();
        let dv = forms::bph_area_diff_d_minus_v(c).unwrap();
        assert!((ev + de - dv).abs() < 1e-14);
    }

    #[test]
    fn arcoth_is_reciprocal_artanh() {
        assert!((arcoth(2.0).unwrap() - 0.5f64.atanh()).abs() < 1e-15);
        assert!(arcoth(0.5).is_err());
    }
}

//! Closed-form areas, boundary lengths, matching-translation functions, and
//! limit constants for the region family.
//!
//! Conventions: `s = √(1−C²)` throughout; `η ∈ (0,1)` is the lineal cutoff
//! height. Every `artanh` argument is validated against the open interval
//! with margin `1e-14`. Formulas whose `artanh` argument approaches 1 as
//! `η → 1` switch to their logarithmic transcription
//! `artanh(√a/√A) = ln((√A + √a)/√(A − a))` once the argument exceeds
//! `1 − 1e-6`, with `A − a` substituted in exact factored form, so no
//! precision is lost to cancellation near the limit.

use crate::conics::check_shape_parameter;
use crate::error::Error;
use crate::fmath;
use crate::Result;

use core::f64::consts::{LN_2, PI, TAU};

const ARTANH_MARGIN: f64 = 1e-14;
const LN_FORM_SWITCH: f64 = 1.0 - 1e-6;

/// `artanh` with the domain margin enforced.
pub fn artanh(x: f64) -> Result<f64> {
    if !(x.abs() < 1.0 - ARTANH_MARGIN) {
        return Err(Error::ArtanhDomain { value: x });
    }
    Ok(fmath::atanh(x))
}

pub(crate) fn check_eta(eta: f64) -> Result<()> {
    if !(eta > 0.0 && eta < 1.0) {
        return Err(Error::InvalidParameter {
            name: "eta",
            value: eta,
        });
    }
    Ok(())
}

fn co(c: f64) -> f64 {
    fmath::sqrt((1.0 - c) * (1.0 + c))
}

/// Focal distance `artanh(C²/(2−C²))` in its stable transcription
/// `ln(1/√(1−C²))`.
fn focal(c: f64) -> f64 {
    -0.5 * fmath::ln_1p(-c * c)
}

// `artanh(√(a/A))`, switching to `ln((√A + √a)/√diff)` with `diff = A − a`
// supplied exactly by the caller once the argument is close to 1.
fn artanh_sqrt_ratio(a: f64, big: f64, diff: f64) -> Result<f64> {
    let arg = fmath::sqrt(a / big);
    if arg > LN_FORM_SWITCH {
        if !(diff > 0.0) {
            return Err(Error::ArtanhDomain { value: arg });
        }
        return Ok(fmath::ln(
            (fmath::sqrt(big) + fmath::sqrt(a)) / fmath::sqrt(diff),
        ));
    }
    artanh(arg)
}

/// Area of the band segment `B^C_η`: `(2C/√(1−C²))·artanh η`.
pub fn area_band_segment(c: f64, eta: f64) -> Result<f64> {
    check_shape_parameter(c)?;
    check_eta(eta)?;
    Ok(2.0 * c / co(c) * artanh(eta)?)
}

/// Area of the parabola segment `E^C_η`.
pub fn area_parabola_segment(c: f64, eta: f64) -> Result<f64> {
    check_shape_parameter(c)?;
    check_eta(eta)?;
    let c2 = c * c;
    let big = 1.0 + eta - 2.0 * c2 * eta;
    let a = 2.0 * eta * (1.0 - c2);
    // A − a = 1 − η exactly
    let term1 = 2.0 * c / co(c) * artanh_sqrt_ratio(a, big, 1.0 - eta)?;
    let term2 = 2.0 * fmath::atan(c * fmath::sqrt(2.0 * eta) / fmath::sqrt(big));
    Ok(term1 - term2)
}

/// Area of the horodisk segment `E¹_η`: `2√(2η/(1−η)) − 2 arctan √(2η/(1−η))`.
pub fn area_horodisk_segment(eta: f64) -> Result<f64> {
    check_eta(eta)?;
    let r = fmath::sqrt(2.0 * eta / (1.0 - eta));
    Ok(2.0 * r - 2.0 * fmath::atan(r))
}

/// Area of the asymptotic triangle `A^C`: `2 arcsin C`.
pub fn area_asymptotic_triangle(c: f64) -> Result<f64> {
    check_shape_parameter(c)?;
    Ok(2.0 * fmath::asin(c))
}

/// The same area from the angular defect `π − 2·Π(artanh C)`, where the base
/// angle is `Π(artanh C) = arccos C`.
pub fn area_asymptotic_triangle_by_defect(c: f64) -> Result<f64> {
    check_shape_parameter(c)?;
    Ok(PI - 2.0 * fmath::acos(c))
}

/// Area of `B^C \ E^C`:
/// `(2C/√(1−C²))·(artanh(C²/(2−C²)) − ln 2) + 2 arcsin C`.
pub fn area_diff_band_minus_parabola(c: f64) -> Result<f64> {
    check_shape_parameter(c)?;
    Ok(2.0 * c / co(c) * (focal(c) - LN_2) + 2.0 * fmath::asin(c))
}

/// Area of `D^C \ E^C`: `(2C/√(1−C²))·(1 − ln 2)`.
pub fn area_diff_horodisk_band_minus_parabola(c: f64) -> Result<f64> {
    check_shape_parameter(c)?;
    Ok(2.0 * c / co(c) * (1.0 - LN_2))
}

/// The `C`-independent translation distance for which `E^C` and the
/// translated `D^C` have equal area: `1 − ln 2`.
pub fn translation_equiv_constant() -> f64 {
    1.0 - LN_2
}

/// The upward band translation `α(C)` that balances the area of `E^C`:
/// `artanh(C²/(2−C²)) − ln 2 + (arcsin C / C)·√(1−C²)`.
pub fn alpha(c: f64) -> Result<f64> {
    check_shape_parameter(c)?;
    Ok(focal(c) - LN_2 + fmath::asin(c) / c * co(c))
}

/// Deviation of `α(C)` from the focal distance; strictly decreasing from
/// `1 − ln 2` to `−ln 2`.
pub fn alpha_deviation(c: f64) -> Result<f64> {
    check_shape_parameter(c)?;
    Ok(-LN_2 + fmath::asin(c) / c * co(c))
}

/// `lim_{C→0} α(C) = 1 − ln 2`.
pub fn alpha_limit_at_zero() -> f64 {
    1.0 - LN_2
}

/// `lim_{C→1} (α(C) − artanh(C²/(2−C²))) = −ln 2`.
pub fn alpha_deviation_limit_at_one() -> f64 {
    -LN_2
}

/// Result of the bisection for the matching-translation crossover.
#[derive(Debug, Clone, Copy)]
pub struct RootResult {
    pub value: f64,
    /// Half of the final bracket width.
    pub error_bound: f64,
    pub iterations: u32,
}

/// The unique `C` where `α(C)` equals the focal distance, by bisection on
/// the monotone deviation over `[0.5, 0.95]`.
pub fn alpha_root() -> RootResult {
    alpha_root_with(0.5, 0.95, 1e-10, 200)
}

/// Bisection with explicit bracket and tolerance. The bracket must straddle
/// the sign change of the deviation.
pub fn alpha_root_with(mut lo: f64, mut hi: f64, tol: f64, max_iter: u32) -> RootResult {
    let dev = |c: f64| alpha_deviation(c).unwrap_or(f64::NAN);
    let mut iterations = 0;
    // deviation is decreasing: positive at lo, negative at hi
    while hi - lo > tol && iterations < max_iter {
        let mid = 0.5 * (lo + hi);
        if dev(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    RootResult {
        value: 0.5 * (lo + hi),
        error_bound: 0.5 * (hi - lo),
        iterations,
    }
}

/// Length of `∂∪B^C_η`: `(2/√(1−C²))·artanh η + 2 artanh C`.
pub fn len_band_segment_boundary(c: f64, eta: f64) -> Result<f64> {
    check_shape_parameter(c)?;
    check_eta(eta)?;
    Ok(2.0 / co(c) * artanh(eta)? + 2.0 * artanh(c)?)
}

/// Length of `∂∪E^C_η`.
pub fn len_parabola_segment_boundary(c: f64, eta: f64) -> Result<f64> {
    check_shape_parameter(c)?;
    check_eta(eta)?;
    let c2 = c * c;
    let big = c2 + 2.0 * eta - 3.0 * c2 * eta;
    let a1 = 2.0 * eta * (1.0 - c2);
    // A − a1 = C²(1 − η) exactly
    let term1 = artanh_sqrt_ratio(a1, big, c2 * (1.0 - eta))? / co(c);
    let a2 = 2.0 * eta * (1.0 - c2) * (1.0 - c2);
    let term2 = artanh(fmath::sqrt(a2 / big))?;
    Ok(2.0 * (term1 - term2))
}

/// Length of the horocyclic arc `∂∪E¹_η`: `2√(2η/(1−η))`.
pub fn len_horocycle_segment(eta: f64) -> Result<f64> {
    check_eta(eta)?;
    Ok(2.0 * fmath::sqrt(2.0 * eta / (1.0 - eta)))
}

/// Horocyclic arc length over a chord of length `2r`: `2 sinh r`.
pub fn chord_arc_length(r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::InvalidParameter {
            name: "r",
            value: r,
        });
    }
    Ok(2.0 * fmath::sinh(r))
}

/// Chord half-length of `∂∪E¹_η`: `artanh √(2η/(1+η))`.
pub fn horocycle_chord_half(eta: f64) -> Result<f64> {
    check_eta(eta)?;
    artanh(fmath::sqrt(2.0 * eta / (1.0 + eta)))
}

/// Length of the closing segments `M^C_η`, valid for `η ∈ (0, 1]`:
/// `2 artanh((√(η+1) − √(2η))·C / (√(η+1) − C²√(2η)))`.
pub fn len_cutoff_segments(c: f64, eta: f64) -> Result<f64> {
    check_shape_parameter(c)?;
    if !(eta > 0.0 && eta <= 1.0) {
        return Err(Error::InvalidParameter {
            name: "eta",
            value: eta,
        });
    }
    let sp = fmath::sqrt(eta + 1.0);
    let sq = fmath::sqrt(2.0 * eta);
    // √(η+1) − √(2η) = (1 − η)/(√(η+1) + √(2η)), cancellation-free
    let num = c * (1.0 - eta) / (sp + sq);
    let den = sp - c * c * sq;
    Ok(2.0 * artanh(num / den)?)
}

/// The circumference difference `G^C` between the half band and the
/// parabolic disk under matched lineal cutoffs:
/// `(2/√(1−C²))·ln(C/(2√(1−C²))) + 2 artanh √(1−C²) + 2 artanh C`.
pub fn g(c: f64) -> Result<f64> {
    check_shape_parameter(c)?;
    let s = co(c);
    Ok(2.0 / s * fmath::ln(c / (2.0 * s)) + 2.0 * artanh(s)? + 2.0 * artanh(c)?)
}

/// The circumference difference `G'^C` between `D^C` and `E^C`:
/// `2(ln C − ln 2)/√(1−C²) + 2 artanh √(1−C²) + 2C/√(1−C²)`.
pub fn g_prime(c: f64) -> Result<f64> {
    check_shape_parameter(c)?;
    let s = co(c);
    Ok(2.0 * (fmath::ln(c) - LN_2) / s + 2.0 * artanh(s)? + 2.0 * c / s)
}

/// The circumference difference `Ĝ^C` between `E^C` and the inner `V^C`:
/// `2((1/√(1−C²))·ln(2/C) − artanh √(1−C²))`.
pub fn g_hat(c: f64) -> Result<f64> {
    check_shape_parameter(c)?;
    let s = co(c);
    Ok(2.0 * (fmath::ln(2.0 / c) / s - artanh(s)?))
}

/// Matching translation for circumference against `B^C`:
/// `β(C) = ln(C/(2√(1−C²))) + √(1−C²)(artanh √(1−C²) + artanh C)`.
pub fn beta(c: f64) -> Result<f64> {
    check_shape_parameter(c)?;
    let s = co(c);
    Ok(fmath::ln(c / (2.0 * s)) + s * (artanh(s)? + artanh(c)?))
}

/// Matching translation for circumference against `D^C`:
/// `β̂_D(C) = ln C − ln 2 + √(1−C²)·artanh √(1−C²) + C`.
pub fn beta_hat_d(c: f64) -> Result<f64> {
    check_shape_parameter(c)?;
    let s = co(c);
    Ok(fmath::ln(c) - LN_2 + s * artanh(s)? + c)
}

/// Matching translation for circumference against `V^C`:
/// `β̂_V(C) = ln(2/C) − √(1−C²)·artanh √(1−C²)`.
pub fn beta_hat_v(c: f64) -> Result<f64> {
    check_shape_parameter(c)?;
    let s = co(c);
    Ok(fmath::ln(2.0 / c) - s * artanh(s)?)
}

/// `lim_{C→1} β̂_D(C) = 1 − ln 2`.
pub fn beta_hat_d_limit_at_one() -> f64 {
    1.0 - LN_2
}

/// `lim_{C→1} β̂_V(C) = ln 2`.
pub fn beta_hat_v_limit_at_one() -> f64 {
    LN_2
}

/// `lim_{C→1} (β(C) − artanh(C²/(2−C²))) = −ln 2`.
pub fn beta_deviation_limit_at_one() -> f64 {
    -LN_2
}

/// `β(C) − artanh(C²/(2−C²))`, the quantity with the `−ln 2` limit.
pub fn beta_deviation(c: f64) -> Result<f64> {
    check_shape_parameter(c)?;
    let s = co(c);
    Ok(fmath::ln(c) - LN_2 + s * (artanh(s)? + artanh(c)?))
}

/// Area of the hyperbolic disk of radius `R`: `2π(cosh R − 1)`.
pub fn disk_area(radius: f64) -> Result<f64> {
    if !(radius > 0.0) {
        return Err(Error::InvalidParameter {
            name: "radius",
            value: radius,
        });
    }
    Ok(TAU * (fmath::cosh(radius) - 1.0))
}

/// Circumference of the hyperbolic disk of radius `R`: `2π sinh R`.
pub fn disk_circumference(radius: f64) -> Result<f64> {
    if !(radius > 0.0) {
        return Err(Error::InvalidParameter {
            name: "radius",
            value: radius,
        });
    }
    Ok(TAU * fmath::sinh(radius))
}

/// Half-plane area difference `Ď^C \ V̌^C = 2C/√(1−C²)`.
pub fn bph_area_diff_d_minus_v(c: f64) -> Result<f64> {
    check_shape_parameter(c)?;
    Ok(2.0 * c / co(c))
}

/// Half-plane area difference `Ě^C \ V̌^C = (2C/√(1−C²))·ln 2`.
pub fn bph_area_diff_e_minus_v(c: f64) -> Result<f64> {
    check_shape_parameter(c)?;
    Ok(2.0 * c / co(c) * LN_2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::FRAC_PI_2;

    #[test]
    fn band_segment_values() {
        // (2·0.6/0.8)·artanh(1/2) and the artanh(3/5) = ln 2 special case
        assert!((area_band_segment(0.6, 0.5).unwrap() - 0.8239592165010823).abs() < 1e-14);
        assert!((area_band_segment(0.6, 0.6).unwrap() - 1.5 * LN_2).abs() < 1e-14);
        assert!(area_band_segment(0.6, 0.0).is_err());
        assert!(area_band_segment(1.2, 0.5).is_err());
    }

    #[test]
    fn parabola_segment_value_and_limits() {
        assert!((area_parabola_segment(0.6, 0.5).unwrap() - 0.4329828849446444).abs() < 1e-13);
        // C → 1 degenerates to the horodisk segment
        let eta = 0.37;
        let near = area_parabola_segment(1.0 - 1e-4, eta).unwrap();
        assert!((near - area_horodisk_segment(eta).unwrap()).abs() < 1e-3);
        // η → 0 vanishes
        assert!(area_parabola_segment(0.6, 1e-9).unwrap() < 1e-7);
        // the ln-form branch engages without losing accuracy
        let v = area_parabola_segment(0.6, 1.0 - 1e-9).unwrap();
        assert!(v.is_finite() && v > 0.0);
    }

    #[test]
    fn horodisk_segment_values() {
        // at η = 1/3 the root term is exactly 1: area = 2 − π/2
        assert!((area_horodisk_segment(1.0 / 3.0).unwrap() - (2.0 - FRAC_PI_2)).abs() < 1e-14);
        let c: f64 = 0.6;
        let eta = c * c / (2.0 - c * c);
        let expect = 1.5 - 2.0 * (0.75f64).atan();
        assert!((area_horodisk_segment(eta).unwrap() - expect).abs() < 1e-14);
    }

    #[test]
    fn triangle_area_routes_agree() {
        for k in 1..10 {
            let c = k as f64 / 10.0;
            let a = area_asymptotic_triangle(c).unwrap();
            let b = area_asymptotic_triangle_by_defect(c).unwrap();
            assert!((a - b).abs() < 1e-13);
        }
        assert!((area_asymptotic_triangle(0.6).unwrap() - 1.2870022175865685).abs() < 1e-13);
    }

    #[test]
    fn area_differences() {
        let v = area_diff_band_minus_parabola(0.6).unwrap();
        assert!((v - 0.5819967737179654).abs() < 1e-13);
        let v = area_diff_horodisk_band_minus_parabola(0.6).unwrap();
        assert!((v - 1.5 * (1.0 - LN_2)).abs() < 1e-15);
        assert!((translation_equiv_constant() - 0.30685281944005466).abs() < 1e-16);
    }

    #[test]
    fn alpha_and_its_root() {
        assert!((alpha(0.6).unwrap() - 0.3879978491453103).abs() < 1e-13);
        let r = alpha_root();
        assert!((r.value - 0.8019864299302277).abs() < 5e-10);
        assert!(r.error_bound < 1e-9);
        // α(C) → 1 − ln 2 as C → 0
        assert!((alpha(1e-3).unwrap() - alpha_limit_at_zero()).abs() < 1e-5);
        // other brackets find the same root
        let r2 = alpha_root_with(0.7, 0.9, 1e-10, 200);
        assert!((r2.value - r.value).abs() < 1e-9);
    }

    #[test]
    fn boundary_lengths() {
        assert!((len_band_segment_boundary(0.6, 0.5).unwrap() - 2.759559721955028).abs() < 1e-13);
        assert!(
            (len_parabola_segment_boundary(0.6, 0.5).unwrap() - 1.7168325073559438).abs() < 1e-13
        );
        // hypercycle arc factor: cosh(artanh C) per unit axial length
        let c: f64 = 0.6;
        let eta: f64 = 0.25;
        let arcs_only = len_band_segment_boundary(c, eta).unwrap() - 2.0 * c.atanh();
        assert!((arcs_only / (2.0 * eta.atanh()) - 1.0 / (1.0 - c * c).sqrt()).abs() < 1e-13);
        // η → 0 leaves just the base chord
        assert!((len_band_segment_boundary(c, 1e-12).unwrap() - 2.0 * c.atanh()).abs() < 1e-11);
    }

    #[test]
    fn horocycle_arc_and_chord() {
        assert!((len_horocycle_segment(1.0 / 3.0).unwrap() - 2.0).abs() < 1e-15);
        for &eta in &[0.1, 0.3, 0.5, 0.7, 0.9] {
            let r = horocycle_chord_half(eta).unwrap();
            let arc = chord_arc_length(r).unwrap();
            assert!(
                (arc - len_horocycle_segment(eta).unwrap()).abs() < 1e-13,
                "eta={eta}"
            );
        }
    }

    #[test]
    fn cutoff_segment_lengths() {
        // closes to zero at η = 1
        assert_eq!(len_cutoff_segments(0.6, 1.0).unwrap(), 0.0);
        // η → 0 degenerates to the full base width
        assert!((len_cutoff_segments(0.6, 1e-15).unwrap() - 2.0 * 0.6f64.atanh()).abs() < 1e-7);
        assert!((len_cutoff_segments(0.6, 0.99).unwrap() - 0.004710331751825998).abs() < 1e-14);
    }

    #[test]
    fn circumference_differences() {
        assert!((g(0.6).unwrap() - 1.1314458059267944).abs() < 1e-14);
        assert!((g_prime(0.6).unwrap() - 0.6872925665213794).abs() < 1e-13);
        assert!((g_hat(0.6).unwrap() - 0.8127074334786206).abs() < 1e-13);
        // G − G' is the band/horocycle exchange at the focal height
        let c: f64 = 0.6;
        let eta = c * c / (2.0 - c * c);
        let exchange =
            len_band_segment_boundary(c, eta).unwrap() - 2.0 * c / (1.0f64 - c * c).sqrt();
        assert!((g(c).unwrap() - g_prime(c).unwrap() - exchange).abs() < 1e-13);
    }

    #[test]
    fn betas_and_limits() {
        assert!((beta(0.6).unwrap() - 0.4525783223707178).abs() < 1e-13);
        assert!((beta_hat_d(0.6).unwrap() - 0.2749170266085518).abs() < 1e-13);
        assert!((beta_hat_v(0.6).unwrap() - 0.3250829733914482).abs() < 1e-13);
        assert!((beta_hat_d(1.0 - 1e-6).unwrap() - beta_hat_d_limit_at_one()).abs() < 1e-4);
        assert!((beta_hat_v(1.0 - 1e-6).unwrap() - beta_hat_v_limit_at_one()).abs() < 1e-4);
        for k in 1..9 {
            let c0 = k as f64 / 10.0;
            let c1 = c0 + 0.1 - 1e-9;
            assert!(beta(c1).unwrap() > beta(c0).unwrap());
            assert!(beta_hat_d(c1).unwrap() > beta_hat_d(c0).unwrap());
            assert!(beta_hat_v(c1).unwrap() > beta_hat_v(c0).unwrap());
        }
    }

    #[test]
    fn disk_forms() {
        let r: f64 = 0.5f64.atanh();
        assert!((disk_area(r).unwrap() - 0.9720121497572849).abs() < 1e-14);
        assert!((disk_circumference(r).unwrap() - 3.6275987284684357).abs() < 1e-13);
        assert!(disk_area(0.0).is_err());
        // circumference/area → coth(R) ≈ 1 for large R
        let big = disk_circumference(20.0).unwrap() / disk_area(20.0).unwrap();
        assert!((big - 1.0).abs() < 1e-8);
    }

    #[test]
    fn bph_differences_relate() {
        let c = 0.6;
        let dv = bph_area_diff_d_minus_v(c).unwrap();
        let ev = bph_area_diff_e_minus_v(c).unwrap();
        assert!((dv - 1.5).abs() < 1e-15);
        assert!((ev - 1.5 * LN_2).abs() < 1e-15);
        let de = dv - ev;
        assert!((de - area_diff_horodisk_band_minus_parabola(c).unwrap()).abs() < 1e-14);
    }

    #[test]
    fn second_form_identities() {
        for k in 1..10 {
            let c = k as f64 / 10.0;
            let c2: f64 = c * c;
            // artanh(C²/(2−C²)) = ln(1/√(1−C²))
            let lhs = (c2 / (2.0 - c2)).atanh();
            let rhs = (1.0 / (1.0 - c2).sqrt()).ln();
            assert!((lhs - rhs).abs() < 1e-13, "C={c}");
        }
        // artanh(3/5) = ln 2
        assert!(((0.6f64).atanh() - 2.0f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn artanh_guard() {
        assert!(artanh(1.0).is_err());
        assert!(artanh(-1.0 + 1e-16).is_err());
        assert!(artanh(0.999999).is_ok());
    }
}

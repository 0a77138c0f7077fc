//! The canonical region family of the h-elliptic parabola and its synthetic
//! elements.
//!
//! All regions are closed sets in the BCK chart, nested as
//! `B^C ⊇ D^C ⊇ E^C ⊇ V^C`:
//!
//! ```text
//! E^C : x²/C² + 2y² − 2y ≤ 0                 the h-elliptic parabolic disk
//! B^C : x²/C² + y² − 1 ≤ 0, y ≥ 0            supporting half distance band
//! D^C : B^C ∩ E¹                             band cut to the horodisk
//! V^C : the two displayed quadratics          inner horocyclic-translate hull
//! A^C : |x| ≤ C(1−y), y ≥ 0                  asymptotic triangle
//! E¹  : x² + 2y² − 2y ≤ 0                    supporting horodisk (C = 1)
//! ```
//!
//! Regions may carry a lineal cutoff `y ≤ η`, a horocyclic cutoff `y̌ ≤ ϑ`
//! (half-plane height), and an upward axis translation by hyperbolic
//! distance `ω`. Cutoffs act in the region's own frame; the translation moves
//! the cut region as a whole.

use crate::conics::{check_shape_parameter, ConicForm, ConicKind};
use crate::error::Error;
use crate::fmath;
use crate::models::{bck_distance, BckPoint, BphPoint, HomogeneousPoint};
use crate::Result;

/// Signed-form tolerance on defining polynomials; boundary points are inside.
pub const MEMBERSHIP_TOL: f64 = 1e-12;

/// Region family tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionFamily {
    /// `E^C`, the h-elliptic parabolic disk.
    E,
    /// `B^C`, the supporting half distance band.
    B,
    /// `D^C = B^C ∩ E¹`.
    D,
    /// `V^C`, the inner approximation.
    V,
    /// `A^C`, the asymptotic triangle over the band base.
    A,
    /// `E¹`, the supporting horodisk (no shape parameter).
    E1,
    /// `B^C_η`, a distance-band segment; requires a lineal cutoff.
    BandSegment,
}

/// Regularizing cutoff.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cutoff {
    /// `y ≤ η` in the BCK chart, `η ∈ (0, 1)`.
    Lineal(f64),
    /// `y̌ ≤ ϑ` in the BPh chart, `ϑ > 1`.
    Horocyclic(f64),
}

/// A member of the region family, possibly cut off and translated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionSpec {
    family: RegionFamily,
    c: f64,
    cutoff: Option<Cutoff>,
    /// Upward axis-translation distance (signed, upward positive).
    translation: Option<f64>,
}

impl RegionSpec {
    /// A region with shape parameter `C ∈ (0, 1)`; `E1` ignores `C`.
    pub fn new(family: RegionFamily, c: f64) -> Result<Self> {
        if family != RegionFamily::E1 {
            check_shape_parameter(c)?;
        }
        Ok(RegionSpec {
            family,
            c: if family == RegionFamily::E1 { 1.0 } else { c },
            cutoff: None,
            translation: None,
        })
    }

    /// The supporting horodisk `E¹`.
    pub fn horodisk() -> Self {
        RegionSpec {
            family: RegionFamily::E1,
            c: 1.0,
            cutoff: None,
            translation: None,
        }
    }

    pub fn with_lineal_cutoff(mut self, eta: f64) -> Result<Self> {
        if !(eta > 0.0 && eta < 1.0) {
            return Err(Error::InvalidParameter {
                name: "eta",
                value: eta,
            });
        }
        self.cutoff = Some(Cutoff::Lineal(eta));
        Ok(self)
    }

    pub fn with_horocyclic_cutoff(mut self, theta: f64) -> Result<Self> {
        if !(theta > 1.0) {
            return Err(Error::InvalidParameter {
                name: "theta",
                value: theta,
            });
        }
        self.cutoff = Some(Cutoff::Horocyclic(theta));
        Ok(self)
    }

    /// Translate the (cut) region upward by hyperbolic distance `omega`.
    pub fn translated_up(mut self, omega: f64) -> Self {
        self.translation = Some(omega);
        self
    }

    pub fn family(&self) -> RegionFamily {
        self.family
    }

    pub fn shape(&self) -> f64 {
        self.c
    }

    pub fn cutoff(&self) -> Option<Cutoff> {
        self.cutoff
    }

    pub fn translation(&self) -> Option<f64> {
        self.translation
    }

    /// Validate combinations that constructors cannot see.
    pub fn validate(&self) -> Result<()> {
        if self.family == RegionFamily::BandSegment
            && !matches!(self.cutoff, Some(Cutoff::Lineal(_)))
        {
            return Err(Error::InvalidRegion {
                reason: "a band segment needs a lineal cutoff",
            });
        }
        Ok(())
    }

    /// Closed-set membership with the signed-form tolerance
    /// [`MEMBERSHIP_TOL`] on every defining polynomial.
    ///
    /// Translated regions are decided through the defining forms composed
    /// with the exact homogeneous translation matrix, never by transforming
    /// the test point with a division, so membership stays a polynomial sign
    /// evaluation. The half band is an exception with its own closed form:
    /// the full band is invariant along its axis, so the translate is
    /// `{x²/C² + y² − 1 ≤ 0, y ≥ tanh ω}`.
    pub fn contains(&self, p: BckPoint) -> bool {
        let t = self.translation.map(fmath::tanh).unwrap_or(0.0);
        if matches!(self.family, RegionFamily::B | RegionFamily::BandSegment) {
            let (x, y) = (p.x(), p.y());
            let in_band = x * x / (self.c * self.c) + y * y - 1.0 <= MEMBERSHIP_TOL
                && y >= t - MEMBERSHIP_TOL;
            return in_band && self.cutoff_holds(self.untranslated_triple(p));
        }
        let triple = self.untranslated_triple(p);
        self.base_contains(triple) && self.cutoff_holds(triple)
    }

    // homogeneous coordinates of the point carried back into the region's
    // own frame; the inverse translation by −ω is [x·s, y − t, 1 − t·y]
    fn untranslated_triple(&self, p: BckPoint) -> [f64; 3] {
        match self.translation {
            None => [p.x(), p.y(), 1.0],
            Some(w) => {
                let t = fmath::tanh(w);
                let s = fmath::sqrt((1.0 - t) * (1.0 + t));
                [p.x() * s, p.y() - t, 1.0 - t * p.y()]
            }
        }
    }

    fn base_contains(&self, [x, y, z]: [f64; 3]) -> bool {
        // the defining polynomials are homogeneous of degree 2 and z > 0
        // inside the disk, so the affine tolerance scales by z²
        let tol = MEMBERSHIP_TOL * z * z;
        let c = self.c;
        match self.family {
            RegionFamily::E => x * x / (c * c) + 2.0 * y * y - 2.0 * y * z <= tol,
            RegionFamily::B | RegionFamily::BandSegment => {
                x * x / (c * c) + y * y - z * z <= tol && y >= -tol
            }
            RegionFamily::D => {
                x * x / (c * c) + y * y - z * z <= tol
                    && y >= -tol
                    && x * x + 2.0 * y * y - 2.0 * y * z <= tol
            }
            RegionFamily::A => x.abs() * z - c * (z - y) * z <= tol && y >= -tol,
            RegionFamily::V => {
                let s = fmath::sqrt(1.0 - c * c);
                let f1 = x * x + 2.0 * c * (s * x + c * y) * (y - z);
                let f2 = x * x + 2.0 * c * (-s * x + c * y) * (y - z);
                f1 <= tol && f2 <= tol
            }
            RegionFamily::E1 => x * x + 2.0 * y * y - 2.0 * y * z <= tol,
        }
    }

    fn cutoff_holds(&self, [x, y, z]: [f64; 3]) -> bool {
        let tol = MEMBERSHIP_TOL * z * z;
        match self.cutoff {
            None => true,
            Some(Cutoff::Lineal(eta)) => y * z <= eta * z * z + tol,
            Some(Cutoff::Horocyclic(theta)) => {
                // y̌ ≤ ϑ reads (z² − x² − y²) ≤ ϑ²(z − y)² without division
                z * z - x * x - y * y <= theta * theta * (z - y) * (z - y) + tol
            }
        }
    }

    /// Membership evaluated natively in the half-plane chart, for the
    /// families displayed there (`E`, `B`, `D`, `V`, `E1`).
    pub fn contains_bph(&self, p: BphPoint) -> Result<bool> {
        let tol = MEMBERSHIP_TOL;
        let c = self.c;
        // upward axis translation by ω is the scaling (x̌, y̌) ↦ e^ω (x̌, y̌)
        let scale = self.translation.map(fmath::exp).unwrap_or(1.0);
        let (x, y) = (p.x() / scale, p.y() / scale);
        let base = match self.family {
            RegionFamily::E => (1.0 - c * c) / (c * c) * x * x - y * y + 1.0 <= tol,
            RegionFamily::B => {
                (1.0 - c * c) / (c * c) * x * x - y * y <= tol && x * x + y * y >= 1.0 - tol
            }
            RegionFamily::D => (1.0 - c * c) / (c * c) * x * x - y * y <= tol && y >= 1.0 - tol,
            RegionFamily::V => y >= 1.0 + fmath::sqrt(1.0 - c * c) / c * x.abs() - tol,
            RegionFamily::E1 => y >= 1.0 - tol,
            RegionFamily::A | RegionFamily::BandSegment => {
                return Err(Error::InvalidRegion {
                    reason: "family has no half-plane transcription here",
                })
            }
        };
        let cut = match self.cutoff {
            None => true,
            Some(Cutoff::Horocyclic(theta)) => y <= theta + tol,
            Some(Cutoff::Lineal(eta)) => {
                let n = x * x + y * y;
                (n - 1.0) / (n + 1.0) <= eta + tol
            }
        };
        Ok(base && cut)
    }
}

/// Exact BCK axis translation by hyperbolic distance `w` upward.
pub fn axis_translation(p: BckPoint, w: f64) -> Result<BckPoint> {
    let (x, y) = axis_translation_xy(p.x(), p.y(), w);
    BckPoint::new(x, y)
}

fn axis_translation_xy(x: f64, y: f64, w: f64) -> (f64, f64) {
    let t = fmath::tanh(w);
    let s = fmath::sqrt((1.0 - t) * (1.0 + t));
    let den = 1.0 + t * y;
    (x * s / den, (y + t) / den)
}

/// Synthetic elements attached to the canonical h-elliptic parabola.
#[derive(Debug, Clone, Copy)]
pub struct SyntheticElements {
    /// `(0, 0)`.
    pub vertex: BckPoint,
    /// The symmetry axis `x = 0`, as line coordinates.
    pub axis: HomogeneousPoint,
    /// Proper focus `(0, C²/(2−C²))`.
    pub focus: BckPoint,
    /// Asymptotic point `(0, 1)` of the parabola and its axis.
    pub asymptotic_point: HomogeneousPoint,
    /// Smallest horocycle whose horodisk contains the parabola:
    /// `x² + 2y² − 2y = 0`.
    pub supporting_horocycle: ConicForm,
    /// Horocycle through the asymptotic point and the band vertices:
    /// `x² + (y−1)((2−C²)y + C²) = 0`.
    pub directrix_horocycle: ConicForm,
    /// Vertex-to-focus distance `artanh(C²/(2−C²)) = ln(1/√(1−C²))`.
    pub focal_distance: f64,
    /// Radius `artanh C` of the supporting distance band.
    pub band_radius: f64,
}

/// Build the synthetic element catalog for shape parameter `C`.
pub fn synthetic_elements(c: f64) -> Result<SyntheticElements> {
    check_shape_parameter(c)?;
    let c2 = c * c;
    Ok(SyntheticElements {
        vertex: BckPoint::origin(),
        axis: HomogeneousPoint::new(1.0, 0.0, 0.0)?,
        focus: BckPoint::new(0.0, c2 / (2.0 - c2))?,
        asymptotic_point: HomogeneousPoint::new(0.0, 1.0, 1.0)?,
        supporting_horocycle: ConicForm::from_upper(
            [1.0, 0.0, 0.0, 2.0, -1.0, 0.0],
            ConicKind::Primal,
        ),
        directrix_horocycle: ConicForm::from_upper(
            [1.0, 0.0, 0.0, 2.0 - c2, -(1.0 - c2), -c2],
            ConicKind::Primal,
        ),
        // ln(1/√(1−C²)), the stable transcription of artanh(C²/(2−C²))
        focal_distance: -0.5 * fmath::ln_1p(-c2),
        band_radius: fmath::atanh(c),
    })
}

/// The directrix line `(3C² − 2)y = C²`, the polar of the focus with respect
/// to the h-elliptic parabola. It need not be a proper hyperbolic line; it
/// is exposed as a formula with no geometric contract attached.
pub fn directrix_line(c: f64) -> Result<HomogeneousPoint> {
    check_shape_parameter(c)?;
    HomogeneousPoint::new(0.0, 3.0 * c * c - 2.0, -c * c)
}

/// Point of the h-elliptic parabola on the axis pencil line `x + t(y−1) = 0`.
pub fn parabola_point(c: f64, t: f64) -> Result<BckPoint> {
    check_shape_parameter(c)?;
    let den = 2.0 * c * c + t * t;
    BckPoint::new(2.0 * t * c * c / den, t * t / den)
}

/// Point of the directrix horocycle on the same pencil line.
pub fn horocycle_point(c: f64, t: f64) -> Result<BckPoint> {
    check_shape_parameter(c)?;
    let den = 2.0 - c * c + t * t;
    BckPoint::new(2.0 * t / den, (t * t - c * c) / den)
}

/// Data for one check of Killing's focal characterization: the distance from
/// the directrix horocycle to the parabola point along an axis line equals
/// the distance from that point to the focus.
#[derive(Debug, Clone, Copy)]
pub struct KillingCheck {
    pub dist_horocycle_to_parabola: f64,
    pub dist_parabola_to_focus: f64,
    /// `|dist(H, P) − dist(P, F)|`.
    pub residual: f64,
    /// The common closed-form value of both distances.
    pub common_value: f64,
}

/// Evaluate the Killing identity at pencil parameter `t`.
pub fn killing_check(c: f64, t: f64) -> Result<KillingCheck> {
    let elements = synthetic_elements(c)?;
    let p = parabola_point(c, t)?;
    let h = horocycle_point(c, t)?;
    let d_hp = bck_distance(h, p);
    let d_pf = bck_distance(p, elements.focus);
    let c2 = c * c;
    let num = c2 * (2.0 - c2) + (1.0 - c2) * t * t;
    let den = 2.0 * c * fmath::sqrt((1.0 - c2) * (c2 + (1.0 - c2) * t * t));
    let common = crate::models::arcosh_1p(num / den - 1.0);
    Ok(KillingCheck {
        dist_horocycle_to_parabola: d_hp,
        dist_parabola_to_focus: d_pf,
        residual: (d_hp - d_pf).abs(),
        common_value: common,
    })
}

/// `|dist(H^C(t), P^C(t)) − dist(P^C(t), F^C)|`.
pub fn killing_residual(c: f64, t: f64) -> Result<f64> {
    Ok(killing_check(c, t)?.residual)
}

/// The catalog of notable lengths attached to the configuration.
#[derive(Debug, Clone, Copy)]
pub struct NotableDistances {
    /// `½ ln 3 = artanh ½`, from the asymptotic triangle.
    pub half_ln3: f64,
    /// `ln(1 + √2) = artanh(√2/2)`, from the asymptotic square.
    pub ln_silver: f64,
    /// `½ ln 2 = artanh ⅓`, from the chordal bisector configuration.
    pub half_ln2: f64,
    /// `artanh(√2 C/2) = arsinh √(C²/(2−C²))`, the anti-axial measurement.
    pub anti_axial: f64,
    /// Focal distance `artanh(C²/(2−C²))`.
    pub focal: f64,
    /// Classical parameter `artanh C²`.
    pub classical_parameter: f64,
    /// Band radius `artanh C`.
    pub band_radius: f64,
    /// Length of the horocyclic arc facing an external asymptotic point.
    pub facing_arc_length: f64,
}

pub fn notable_distances(c: f64) -> Result<NotableDistances> {
    check_shape_parameter(c)?;
    Ok(NotableDistances {
        half_ln3: 0.5 * fmath::ln(3.0),
        ln_silver: fmath::ln(1.0 + fmath::sqrt(2.0)),
        half_ln2: 0.5 * fmath::ln(2.0),
        anti_axial: fmath::atanh(fmath::sqrt(2.0) * c / 2.0),
        focal: fmath::atanh(c * c / (2.0 - c * c)),
        classical_parameter: fmath::atanh(c * c),
        band_radius: fmath::atanh(c),
        facing_arc_length: 2.0,
    })
}

/// Hypercyclic boundary arc of `B^C`: position and velocity at height `t`.
pub fn band_arc_sample(c: f64, t: f64) -> Result<(BckPoint, (f64, f64))> {
    let r = fmath::sqrt((1.0 - t) * (1.0 + t));
    Ok((BckPoint::new(c * r, t)?, (-c * t / r, 1.0)))
}

/// Parabola boundary arc in the square-root parametrization `y = u²`,
/// which is smooth through the vertex.
pub fn parabola_arc_sample(c: f64, u: f64) -> Result<(BckPoint, (f64, f64))> {
    let r = fmath::sqrt(1.0 - u * u);
    let x = core::f64::consts::SQRT_2 * c * u * r;
    let vx = core::f64::consts::SQRT_2 * c * (1.0 - 2.0 * u * u) / r;
    Ok((BckPoint::new(x, u * u)?, (vx, 2.0 * u)))
}

/// Supporting-horocycle arc, the `C = 1` parabola boundary.
pub fn horocycle_arc_sample(u: f64) -> Result<(BckPoint, (f64, f64))> {
    let r = fmath::sqrt(1.0 - u * u);
    let x = core::f64::consts::SQRT_2 * u * r;
    let vx = core::f64::consts::SQRT_2 * (1.0 - 2.0 * u * u) / r;
    Ok((BckPoint::new(x, u * u)?, (vx, 2.0 * u)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{bck_to_bph, bph_to_bck};

    #[test]
    fn membership_examples() {
        let c = 0.6;
        let e = RegionSpec::new(RegionFamily::E, c).unwrap();
        let b = RegionSpec::new(RegionFamily::B, c).unwrap();
        let d = RegionSpec::new(RegionFamily::D, c).unwrap();
        let v = RegionSpec::new(RegionFamily::V, c).unwrap();

        // vertex lies on the boundary of E, inside by the closed convention
        assert!(e.contains(BckPoint::origin()));

        let p = BckPoint::new(0.0, 0.5).unwrap();
        assert!(b.contains(p) && d.contains(p) && e.contains(p) && v.contains(p));

        let q = BckPoint::new(0.59, 0.05).unwrap();
        assert!(b.contains(q) && !e.contains(q));

        // the focus is interior to E for every C
        for k in 1..10 {
            let c = k as f64 / 10.0;
            let e = RegionSpec::new(RegionFamily::E, c).unwrap();
            let f = synthetic_elements(c).unwrap().focus;
            assert!(e.contains(f), "focus outside E at C={c}");
        }
    }

    #[test]
    fn band_segment_requires_cutoff() {
        let seg = RegionSpec::new(RegionFamily::BandSegment, 0.5).unwrap();
        assert!(seg.validate().is_err());
        let seg = seg.with_lineal_cutoff(0.5).unwrap();
        assert!(seg.validate().is_ok());
        assert!(seg.contains(BckPoint::new(0.0, 0.5).unwrap()));
        assert!(!seg.contains(BckPoint::new(0.0, 0.500001).unwrap()));
        assert!(RegionSpec::new(RegionFamily::B, 0.5)
            .unwrap()
            .with_lineal_cutoff(1.5)
            .is_err());
        assert!(RegionSpec::new(RegionFamily::B, 1.0).is_err());
    }

    #[test]
    fn translated_band_closed_form() {
        let c = 0.6;
        let w = 0.25f64;
        let b_up = RegionSpec::new(RegionFamily::B, c)
            .unwrap()
            .translated_up(w);
        // the flat edge sits at y = tanh ω
        assert!(b_up.contains(BckPoint::new(0.0, w.tanh() + 1e-6).unwrap()));
        assert!(!b_up.contains(BckPoint::new(0.0, w.tanh() - 1e-6).unwrap()));
        // agreement with the point-transformation route
        let b = RegionSpec::new(RegionFamily::B, c).unwrap();
        for &(x, y) in &[(0.1, 0.7), (-0.4, 0.3), (0.3, 0.2), (0.0, 0.95)] {
            let p = BckPoint::new(x, y).unwrap();
            let moved_back = axis_translation(p, -w).unwrap();
            assert_eq!(b_up.contains(p), b.contains(moved_back), "at ({x},{y})");
        }
    }

    #[test]
    fn translation_is_an_isometry_on_the_axis() {
        let p = BckPoint::origin();
        let q = axis_translation(p, 0.7).unwrap();
        assert!((q.y() - 0.7f64.tanh()).abs() < 1e-15);
        assert!((bck_distance(p, q) - 0.7).abs() < 1e-13);
        let r = axis_translation(q, -0.7).unwrap();
        assert!(r.x().abs() < 1e-15 && r.y().abs() < 1e-15);
    }

    #[test]
    fn synthetic_catalog() {
        let c: f64 = 0.6;
        let el = synthetic_elements(c).unwrap();
        assert_eq!((el.vertex.x(), el.vertex.y()), (0.0, 0.0));
        assert!((el.focus.y() - 0.36 / 1.64).abs() < 1e-15);
        // focal distance: artanh(C²/(2−C²)) = ln(1/√(1−C²)); cosh(band radius)
        // = exp(focal distance)
        let fd = (c * c / (2.0 - c * c)).atanh();
        assert!((el.focal_distance - fd).abs() < 1e-13);
        assert!((el.band_radius - c.atanh()).abs() < 1e-15);
        assert!((el.band_radius.cosh() - el.focal_distance.exp()).abs() < 1e-13);
        assert!((el.focal_distance.exp() - 1.0 / (1.0 - c * c).sqrt()).abs() < 1e-13);

        // the band vertices (±C, 0) lie on the directrix horocycle
        assert!(el.directrix_horocycle.eval_affine(c, 0.0).abs() < 1e-15);
        assert!(el.directrix_horocycle.eval_affine(-c, 0.0).abs() < 1e-15);
        // and the asymptotic point lies on both horocycles
        assert!(el.directrix_horocycle.eval_affine(0.0, 1.0).abs() < 1e-15);
        assert!(el.supporting_horocycle.eval_affine(0.0, 1.0).abs() < 1e-15);

        assert!((el.focal_distance.tanh() - el.focus.y()).abs() < 1e-15);
    }

    #[test]
    fn curve_points_satisfy_their_equations() {
        let c = 0.6;
        let par = crate::conics::h_elliptic_parabola(c).unwrap();
        let el = synthetic_elements(c).unwrap();
        for &t in &[-10.0, -1.0, -0.3, 0.0, 0.5, 1.0, 3.0, 50.0] {
            let p = parabola_point(c, t).unwrap();
            let h = horocycle_point(c, t).unwrap();
            assert!(par.eval_affine(p.x(), p.y()).abs() < 1e-14, "t={t}");
            assert!(
                el.directrix_horocycle.eval_affine(h.x(), h.y()).abs() < 1e-14,
                "t={t}"
            );
            // both lie on the pencil line x + t(y − 1) = 0
            assert!((p.x() + t * (p.y() - 1.0)).abs() < 1e-13);
            assert!((h.x() + t * (h.y() - 1.0)).abs() < 1e-13);
        }
        // t = 0 meets the vertex and the horocycle apex
        let p0 = parabola_point(c, 0.0).unwrap();
        assert_eq!((p0.x(), p0.y()), (0.0, 0.0));
        let h0 = horocycle_point(c, 0.0).unwrap();
        assert!((h0.y() + 0.36 / 1.64).abs() < 1e-15);
        // t → ±∞ drifts to the asymptotic point
        let pinf = parabola_point(c, 1e6).unwrap();
        assert!((pinf.y() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn directrix_line_is_the_polar_of_the_focus() {
        for k in 1..10 {
            let c = k as f64 / 10.0;
            let conic = crate::conics::h_elliptic_parabola(c).unwrap();
            let focus = synthetic_elements(c).unwrap().focus.to_homogeneous();
            let polar = crate::conics::polar_line(focus, &conic).unwrap();
            assert!(directrix_line(c).unwrap().approx_eq(polar, 1e-13), "C={c}");
        }
    }

    #[test]
    fn killing_identity_spot_checks() {
        let chk = killing_check(0.6, 1.0).unwrap();
        assert!(chk.residual < 1e-13);
        assert!((chk.common_value - 0.7339691750802004).abs() < 1e-12);
        assert!((chk.dist_horocycle_to_parabola - chk.common_value).abs() < 1e-12);

        // the vertex case reduces to the focal distance
        let el = synthetic_elements(0.6).unwrap();
        let chk = killing_check(0.6, 0.0).unwrap();
        assert!((chk.dist_parabola_to_focus - el.focal_distance).abs() < 1e-13);
        assert!(chk.residual < 1e-13);
    }

    #[test]
    fn notable_distance_identities() {
        let c: f64 = 0.6;
        let nd = notable_distances(c).unwrap();
        assert!((nd.half_ln3 - 0.5f64.atanh()).abs() < 1e-14);
        assert!((nd.ln_silver - (2.0f64.sqrt() / 2.0).atanh()).abs() < 1e-14);
        assert!((nd.half_ln2 - (1.0f64 / 3.0).atanh()).abs() < 1e-14);
        assert!((nd.anti_axial - (c * c / (2.0 - c * c)).sqrt().asinh()).abs() < 1e-14);
        assert!((nd.focal - (1.0 / (1.0 - c * c).sqrt()).ln()).abs() < 1e-14);
        assert_eq!(nd.facing_arc_length, 2.0);
        assert!((nd.band_radius - ((1.0 + c) / (1.0 - c)).sqrt().ln()).abs() < 1e-14);
    }

    #[test]
    fn half_plane_transcriptions() {
        let c = 0.6;
        for fam in [
            RegionFamily::E,
            RegionFamily::B,
            RegionFamily::D,
            RegionFamily::V,
            RegionFamily::E1,
        ] {
            let r = RegionSpec::new(fam, c).unwrap();
            for &(x, y) in &[
                (0.0, 0.5),
                (0.3, 0.4),
                (-0.2, 0.1),
                (0.5, 0.05),
                (0.0, 0.9),
                (0.1, -0.2),
                (-0.55, 0.4),
            ] {
                let p = BckPoint::new(x, y).unwrap();
                let q = bck_to_bph(p);
                assert_eq!(
                    r.contains(p),
                    r.contains_bph(q).unwrap(),
                    "family {fam:?} at ({x},{y})"
                );
            }
        }
        let a = RegionSpec::new(RegionFamily::A, c).unwrap();
        assert!(a.contains_bph(BphPoint::new(0.0, 1.0).unwrap()).is_err());
    }

    #[test]
    fn horocyclic_cutoff_matches_half_plane_height() {
        let c = 0.6;
        let r = RegionSpec::new(RegionFamily::E, c)
            .unwrap()
            .with_horocyclic_cutoff(2.0)
            .unwrap();
        // a point of E with y̌ above the cutoff
        let high = bph_to_bck(BphPoint::new(0.0, 2.5).unwrap()).unwrap();
        let low = bph_to_bck(BphPoint::new(0.0, 1.5).unwrap()).unwrap();
        assert!(!r.contains(high));
        assert!(r.contains(low));
    }
}

//! Coordinate charts of the hyperbolic plane and their pointwise metric data.
//!
//! Two charts are used throughout: the Beltrami–Cayley–Klein disk (`Bck`),
//! where geodesics are Euclidean chords of the unit disk, and the
//! Beltrami–Poincaré half-plane (`Bph`). Distances are normalized to
//! curvature −1.
//!
//! The BCK distance of `p`, `q` is
//!
//! ```text
//! dist(p, q) = arcosh (1 − p·q) / (√(1 − |p|²) √(1 − |q|²)),
//! ```
//!
//! evaluated here through `arcosh(1 + u) = ln(1 + u + √(u(2 + u)))` with `u`
//! produced by a cancellation-free rearrangement, so nearby points and points
//! close to the absolute both come out accurately.

use crate::error::Error;
use crate::fmath;
use crate::Result;

/// Interior guard: points are accepted while `x² + y² ≤ 1 − GUARD`.
pub const INTERIOR_GUARD: f64 = 1e-14;

/// A point of the hyperbolic plane in the BCK disk chart, `x² + y² < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BckPoint {
    x: f64,
    y: f64,
}

/// A point of the hyperbolic plane in the BPh half-plane chart, `y > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BphPoint {
    x: f64,
    y: f64,
}

/// A projective point `[x₁, x₂, x₃]`, not all zero, up to nonzero scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HomogeneousPoint {
    c: [f64; 3],
}

/// A positive pointwise density (area density or squared line element factor).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityValue(f64);

impl DensityValue {
    pub fn value(self) -> f64 {
        self.0
    }
}

/// `1 − x² − y²` with compensated products, accurate near the absolute.
pub(crate) fn one_minus_sq(x: f64, y: f64) -> f64 {
    let x2 = x * x;
    let ex = fmath::mul_add(x, x, -x2);
    let y2 = y * y;
    let ey = fmath::mul_add(y, y, -y2);
    ((1.0 - x2) - y2) - (ex + ey)
}

/// `arcosh(1 + u)` for `u ≥ 0`, stable for small `u`.
pub(crate) fn arcosh_1p(u: f64) -> f64 {
    let u = u.max(0.0);
    fmath::ln_1p(u + fmath::sqrt(u * (2.0 + u)))
}

impl BckPoint {
    /// Accepts interior points, `x² + y² ≤ 1 − 1e-14`.
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !(one_minus_sq(x, y) >= INTERIOR_GUARD) {
            return Err(Error::OutsideDisk { x, y });
        }
        Ok(Self { x, y })
    }

    pub fn origin() -> Self {
        Self { x: 0.0, y: 0.0 }
    }

    pub fn x(self) -> f64 {
        self.x
    }

    pub fn y(self) -> f64 {
        self.y
    }

    /// `1 − x² − y²`, always `≥ 1e-14` for a constructed point.
    pub fn co_norm_sq(self) -> f64 {
        one_minus_sq(self.x, self.y)
    }

    pub fn to_homogeneous(self) -> HomogeneousPoint {
        HomogeneousPoint::new(self.x, self.y, 1.0).expect("finite affine point")
    }
}

impl BphPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !(y > 0.0) {
            return Err(Error::NonPositiveHeight { y });
        }
        Ok(Self { x, y })
    }

    pub fn x(self) -> f64 {
        self.x
    }

    pub fn y(self) -> f64 {
        self.y
    }
}

impl HomogeneousPoint {
    pub fn new(x1: f64, x2: f64, x3: f64) -> Result<Self> {
        if x1 == 0.0 && x2 == 0.0 && x3 == 0.0 {
            return Err(Error::ZeroHomogeneous);
        }
        Ok(Self { c: [x1, x2, x3] })
    }

    pub fn coords(self) -> [f64; 3] {
        self.c
    }

    /// Canonical representative: largest-magnitude component has absolute
    /// value 1, and the first nonzero component is positive.
    pub fn canonical(self) -> Self {
        let mut m = 0.0f64;
        for v in self.c {
            m = m.max(v.abs());
        }
        let mut c = self.c.map(|v| v / m);
        for v in c {
            if v != 0.0 {
                if v < 0.0 {
                    c = c.map(|w| -w);
                }
                break;
            }
        }
        Self { c }
    }

    /// True when the third coordinate vanishes relative to the others.
    pub fn is_ideal(self) -> bool {
        let n = self.canonical();
        n.c[2].abs() <= 1e-12
    }

    /// Dehomogenize to affine coordinates (`None` for ideal points).
    pub fn affine(self) -> Option<(f64, f64)> {
        if self.is_ideal() {
            None
        } else {
            Some((self.c[0] / self.c[2], self.c[1] / self.c[2]))
        }
    }

    /// Componentwise agreement of canonical representatives.
    pub fn approx_eq(self, other: Self, tol: f64) -> bool {
        let a = self.canonical().c;
        let b = other.canonical().c;
        (0..3).all(|i| (a[i] - b[i]).abs() <= tol)
    }
}

/// Hyperbolic distance between two BCK points (curvature −1).
pub fn bck_distance(p: BckPoint, q: BckPoint) -> f64 {
    let sp2 = p.co_norm_sq();
    let sq2 = q.co_norm_sq();
    let dx = p.x - q.x;
    let dy = p.y - q.y;
    // cross = x_p y_q − y_p x_q, written so nearby points do not cancel.
    let cross = p.x * (q.y - p.y) - p.y * (q.x - p.x);
    // (1 − p·q)² − (1 − |p|²)(1 − |q|²) = |p − q|² − cross²
    let num = (dx * dx + dy * dy) - cross * cross;
    let spq = fmath::sqrt(sp2) * fmath::sqrt(sq2);
    let n = 1.0 - p.x * q.x - p.y * q.y;
    let u = num / (spq * (n + spq));
    arcosh_1p(u)
}

/// Hyperbolic distance between two BPh points.
pub fn bph_distance(p: BphPoint, q: BphPoint) -> f64 {
    let dx = p.x - q.x;
    let dy = p.y - q.y;
    let u = (dx * dx + dy * dy) / (2.0 * p.y * q.y);
    arcosh_1p(u)
}

/// Chart change BCK → BPh: `(x, y) ↦ (x/(1−y), √(1−x²−y²)/(1−y))`.
pub fn bck_to_bph(p: BckPoint) -> BphPoint {
    let d = 1.0 - p.y;
    BphPoint {
        x: p.x / d,
        y: fmath::sqrt(p.co_norm_sq()) / d,
    }
}

/// Chart change BPh → BCK, inverse of [`bck_to_bph`].
pub fn bph_to_bck(p: BphPoint) -> Result<BckPoint> {
    let n = p.x * p.x + p.y * p.y;
    let den = n + 1.0;
    BckPoint::new(2.0 * p.x / den, (n - 1.0) / den)
}

/// BCK area density `(1 − x² − y²)^(−3/2)`.
pub fn hyp_area_density(p: BckPoint) -> DensityValue {
    let d = p.co_norm_sq();
    DensityValue(1.0 / (d * fmath::sqrt(d)))
}

/// BCK arc-length integrand `√((1−|γ|²)|γ̇|² + (γ·γ̇)²) / (1−|γ|²)` at a
/// curve sample with position `p` and velocity `v`.
pub fn hyp_arclength_integrand(p: BckPoint, v: (f64, f64)) -> f64 {
    let m = p.co_norm_sq();
    let dot = p.x * v.0 + p.y * v.1;
    let v2 = v.0 * v.0 + v.1 * v.1;
    fmath::sqrt(m * v2 + dot * dot) / m
}

/// BPh area density `1/y̌²`.
pub fn bph_area_density(p: BphPoint) -> DensityValue {
    DensityValue(1.0 / (p.y * p.y))
}

/// BPh arc-length integrand `|v|/y̌`.
pub fn bph_arclength_integrand(p: BphPoint, v: (f64, f64)) -> f64 {
    fmath::hypot(v.0, v.1) / p.y
}

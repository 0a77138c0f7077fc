//! Symmetric-form conic algebra: duals, pencils, degenerate members and their
//! splitting into point pairs, pole/polar, and the focus-extraction pipeline
//! for the h-elliptic parabola and its Euclidean analog.
//!
//! A conic is a symmetric 3×3 form up to nonzero scale, either *primal*
//! (acting on point coordinates) or *dual* (acting on line coordinates). The
//! foci of the canonical h-elliptic parabola `x²/C² + 2y² − 2y = 0` fall out
//! of the pencil spanned by its dual and the dual absolute: the pencil has
//! exactly two singular members, and the one that factors over the reals is
//! the point pair `(0, 1)`, `(0, C²/(2−C²))`.

use alloc::vec::Vec;

use crate::error::Error;
use crate::fmath;
use crate::models::{BckPoint, HomogeneousPoint};
use crate::Result;

/// Relative eigenvalue threshold below which a direction counts as null.
pub const RANK_TOL: f64 = 1e-9;

/// Pencil roots closer than this are merged.
pub const ROOT_MERGE_TOL: f64 = 1e-9;

type Mat3 = [[f64; 3]; 3];

/// Whether a form acts on point or on line coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConicKind {
    Primal,
    Dual,
}

/// A symmetric 3×3 real quadratic form up to nonzero scale.
///
/// The six independent entries are stored once, so symmetry is exact by
/// construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConicForm {
    // [m11, m12, m13, m22, m23, m33]
    m: [f64; 6],
    kind: ConicKind,
}

fn mat_of(m: &[f64; 6]) -> Mat3 {
    [[m[0], m[1], m[2]], [m[1], m[3], m[4]], [m[2], m[4], m[5]]]
}

fn mat_vec(m: &Mat3, v: &[f64; 3]) -> [f64; 3] {
    let mut out = [0.0; 3];
    for (i, row) in m.iter().enumerate() {
        out[i] = row[0] * v[0] + row[1] * v[1] + row[2] * v[2];
    }
    out
}

fn det3(m: &Mat3) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn adjugate(m: &Mat3) -> Mat3 {
    let c =
        |i1: usize, i2: usize, j1: usize, j2: usize| m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1];
    // transpose of the cofactor matrix; symmetric input gives symmetric output
    [
        [c(1, 2, 1, 2), -c(0, 2, 1, 2), c(0, 1, 1, 2)],
        [-c(1, 2, 0, 2), c(0, 2, 0, 2), -c(0, 1, 0, 2)],
        [c(1, 2, 0, 1), -c(0, 2, 0, 1), c(0, 1, 0, 1)],
    ]
}

fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
        }
    }
    out
}

fn trace(m: &Mat3) -> f64 {
    m[0][0] + m[1][1] + m[2][2]
}

/// Cyclic Jacobi eigendecomposition of a symmetric 3×3 matrix.
///
/// Returns eigenvalues and the matching eigenvectors as columns.
fn sym_eigen(m: &Mat3) -> ([f64; 3], Mat3) {
    let mut a = *m;
    let mut v: Mat3 = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    let scale = a
        .iter()
        .flatten()
        .fold(0.0f64, |acc, x| acc.max(x.abs()))
        .max(f64::MIN_POSITIVE);
    for _ in 0..64 {
        let off = fmath::sqrt(a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2]);
        if off <= 1e-16 * scale {
            break;
        }
        for &(p, q) in &[(0usize, 1usize), (0, 2), (1, 2)] {
            if a[p][q].abs() <= 1e-18 * scale {
                continue;
            }
            let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
            let t = theta.signum() / (theta.abs() + fmath::sqrt(theta * theta + 1.0));
            let c = 1.0 / fmath::sqrt(t * t + 1.0);
            let s = t * c;
            for k in 0..3 {
                let akp = a[k][p];
                let akq = a[k][q];
                a[k][p] = c * akp - s * akq;
                a[k][q] = s * akp + c * akq;
            }
            for k in 0..3 {
                let apk = a[p][k];
                let aqk = a[q][k];
                a[p][k] = c * apk - s * aqk;
                a[q][k] = s * apk + c * aqk;
            }
            for k in 0..3 {
                let vkp = v[k][p];
                let vkq = v[k][q];
                v[k][p] = c * vkp - s * vkq;
                v[k][q] = s * vkp + c * vkq;
            }
        }
    }
    ([a[0][0], a[1][1], a[2][2]], v)
}

impl ConicForm {
    /// Build a form from a full matrix; off-diagonal pairs are averaged.
    pub fn from_matrix(m: Mat3, kind: ConicKind) -> Self {
        ConicForm {
            m: [
                m[0][0],
                0.5 * (m[0][1] + m[1][0]),
                0.5 * (m[0][2] + m[2][0]),
                m[1][1],
                0.5 * (m[1][2] + m[2][1]),
                m[2][2],
            ],
            kind,
        }
    }

    /// Primal conic `a x² + 2b xy + 2c x + d y² + 2e y + f = 0` given the
    /// matrix entries `[a, b, c, d, e, f]` (upper triangle, row major).
    pub fn from_upper(m: [f64; 6], kind: ConicKind) -> Self {
        ConicForm { m, kind }
    }

    /// The primal form of the absolute, `x² + y² − 1`.
    pub fn absolute() -> Self {
        ConicForm::from_upper([1.0, 0.0, 0.0, 1.0, 0.0, -1.0], ConicKind::Primal)
    }

    /// The dual form of the absolute, `ξ₁² + ξ₂² − ξ₃²`.
    pub fn dual_absolute() -> Self {
        ConicForm::from_upper([1.0, 0.0, 0.0, 1.0, 0.0, -1.0], ConicKind::Dual)
    }

    pub fn kind(&self) -> ConicKind {
        self.kind
    }

    pub fn matrix(&self) -> Mat3 {
        mat_of(&self.m)
    }

    pub fn det(&self) -> f64 {
        det3(&self.matrix())
    }

    /// Evaluate the quadratic form on a coordinate triple.
    pub fn eval(&self, v: [f64; 3]) -> f64 {
        let mv = mat_vec(&self.matrix(), &v);
        v[0] * mv[0] + v[1] * mv[1] + v[2] * mv[2]
    }

    /// Evaluate on an affine point `(x, y, 1)`.
    pub fn eval_affine(&self, x: f64, y: f64) -> f64 {
        self.eval([x, y, 1.0])
    }

    /// Canonical scale: largest-magnitude entry has absolute value 1 and the
    /// first nonzero entry is positive.
    pub fn canonical(&self) -> Self {
        let mut max = 0.0f64;
        for v in self.m {
            max = max.max(v.abs());
        }
        let mut m = self.m.map(|v| v / max);
        for v in m {
            if v != 0.0 {
                if v < 0.0 {
                    m = m.map(|w| -w);
                }
                break;
            }
        }
        ConicForm { m, kind: self.kind }
    }

    /// Multiply every entry by `s`.
    pub fn scaled(&self, s: f64) -> Self {
        ConicForm {
            m: self.m.map(|v| v * s),
            kind: self.kind,
        }
    }

    /// Entrywise agreement of canonical representatives.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let a = self.canonical().m;
        let b = other.canonical().m;
        (0..6).all(|i| (a[i] - b[i]).abs() <= tol)
    }

    /// Eigenvalues of the symmetric matrix, descending by magnitude.
    pub fn eigenvalues(&self) -> [f64; 3] {
        let (mut e, _) = sym_eigen(&self.matrix());
        e.sort_unstable_by(|a, b| b.abs().partial_cmp(&a.abs()).unwrap());
        e
    }

    /// Rank with the relative eigenvalue threshold [`RANK_TOL`].
    pub fn rank(&self) -> u8 {
        let e = self.eigenvalues();
        let max = e[0].abs();
        if max == 0.0 {
            return 0;
        }
        e.iter().filter(|v| v.abs() > RANK_TOL * max).count() as u8
    }
}

/// Dual of a nonsingular conic: the matrix inverse, renormalized to canonical
/// scale, with the primal/dual tag flipped.
pub fn dual_conic(c: &ConicForm) -> Result<ConicForm> {
    if c.rank() < 3 {
        return Err(Error::SingularConic { det: c.det() });
    }
    // adjugate equals det · inverse; projectively the same conic
    let adj = adjugate(&c.matrix());
    let kind = match c.kind {
        ConicKind::Primal => ConicKind::Dual,
        ConicKind::Dual => ConicKind::Primal,
    };
    Ok(ConicForm::from_matrix(adj, kind).canonical())
}

/// Polar line of `pt` with respect to a nonsingular primal conic (`M·p`).
pub fn polar_line(pt: HomogeneousPoint, c: &ConicForm) -> Result<HomogeneousPoint> {
    if c.rank() < 3 {
        return Err(Error::SingularConic { det: c.det() });
    }
    let l = mat_vec(&c.matrix(), &pt.coords());
    HomogeneousPoint::new(l[0], l[1], l[2])
}

/// Pole of a line with respect to a nonsingular conic (`M⁻¹·ℓ` up to scale).
pub fn pole(line: HomogeneousPoint, c: &ConicForm) -> Result<HomogeneousPoint> {
    if c.rank() < 3 {
        return Err(Error::SingularConic { det: c.det() });
    }
    let p = mat_vec(&adjugate(&c.matrix()), &line.coords());
    HomogeneousPoint::new(p[0], p[1], p[2])
}

/// One singular member `λ·a − μ·b` of a pencil of forms.
#[derive(Debug, Clone, Copy)]
pub struct PencilMember {
    pub lambda: f64,
    pub mu: f64,
    pub rank: u8,
    pub degenerate: bool,
    pub form: ConicForm,
}

/// Real roots of a cubic `c3 λ³ + c2 λ² + c1 λ + c0`, with near-multiple
/// roots replaced by the matching root of the derivative (which is well
/// conditioned where the cubic is not) and merged.
fn cubic_real_roots(c3: f64, c2: f64, c1: f64, c0: f64) -> Vec<f64> {
    let scale = c3.abs().max(c2.abs()).max(c1.abs()).max(c0.abs());
    let mut roots: Vec<f64> = Vec::new();
    if scale == 0.0 {
        return roots;
    }
    let (c3, c2, c1, c0) = (c3 / scale, c2 / scale, c1 / scale, c0 / scale);
    let p = |x: f64| ((c3 * x + c2) * x + c1) * x + c0;
    let dp = |x: f64| (3.0 * c3 * x + 2.0 * c2) * x + c1;

    if c3.abs() < 1e-13 {
        // degree ≤ 2
        if c2.abs() < 1e-13 {
            if c1.abs() > 1e-13 {
                roots.push(-c0 / c1);
            }
            return roots;
        }
        let disc = c1 * c1 - 4.0 * c2 * c0;
        if disc >= 0.0 {
            let sq = fmath::sqrt(disc);
            let q = -0.5 * (c1 + c1.signum() * sq);
            // stable quadratic: avoid subtracting nearly equal quantities
            if c1 == 0.0 {
                let r = fmath::sqrt(-c0 / c2 * (if c0 == 0.0 { 0.0 } else { 1.0 }));
                if disc == 0.0 && c0 == 0.0 {
                    roots.push(0.0);
                } else {
                    roots.push(r);
                    roots.push(-r);
                }
            } else {
                roots.push(q / c2);
                if q != 0.0 {
                    roots.push(c0 / q);
                }
            }
        }
    } else {
        // monic depressed cubic t³ + at + b, λ = t − b2/3
        let b2 = c2 / c3;
        let b1 = c1 / c3;
        let b0 = c0 / c3;
        let a = b1 - b2 * b2 / 3.0;
        let b = 2.0 * b2 * b2 * b2 / 27.0 - b2 * b1 / 3.0 + b0;
        let shift = -b2 / 3.0;
        let disc = -4.0 * a * a * a - 27.0 * b * b;
        if disc > 0.0 {
            // three distinct real roots (trigonometric form)
            let m = 2.0 * fmath::sqrt(-a / 3.0);
            let arg = (3.0 * b / (a * m)).clamp(-1.0, 1.0);
            let theta = fmath::acos(arg) / 3.0;
            for k in 0..3 {
                let t = m * fmath::cos(theta - 2.0 * core::f64::consts::PI * k as f64 / 3.0);
                roots.push(t + shift);
            }
        } else {
            // one real root (Cardano)
            let d = fmath::sqrt((b * b / 4.0 + a * a * a / 27.0).max(0.0));
            let u = -b / 2.0 + d;
            let v = -b / 2.0 - d;
            let t = fmath::cbrt(u) + fmath::cbrt(v);
            roots.push(t + shift);
        }
        // Newton polish
        for r in roots.iter_mut() {
            for _ in 0..3 {
                let d = dp(*r);
                if d.abs() > 1e-30 {
                    *r -= p(*r) / d;
                }
            }
        }
        // near-double roots: the derivative's roots are accurate there
        let ddisc = 4.0 * c2 * c2 - 12.0 * c3 * c1;
        if ddisc >= 0.0 {
            let sq = fmath::sqrt(ddisc);
            for sign in [-1.0, 1.0] {
                let z = (-2.0 * c2 + sign * sq) / (6.0 * c3);
                let zs = 1.0 + z.abs();
                let res_tol = 1e-12 * zs * zs * zs;
                if p(z).abs() <= res_tol {
                    roots.retain(|r| (r - z).abs() > 1e-6 * (1.0 + z.abs()));
                    roots.push(z);
                }
            }
        }
    }
    roots.sort_unstable_by(|x, y| x.partial_cmp(y).unwrap());
    roots.dedup_by(|a, b| (*a - *b).abs() <= ROOT_MERGE_TOL * (1.0 + b.abs()));
    roots
}

/// All singular members of the pencil `λ·a − μ·b`: the real roots of
/// `det(λ a − b) = 0` (with `μ = 1`), plus the `μ = 0` member when `a` is
/// itself singular. Generators must not be proportional.
pub fn pencil_singular_members(a: &ConicForm, b: &ConicForm) -> Result<Vec<PencilMember>> {
    if a.approx_eq(b, 1e-12) {
        return Err(Error::ProportionalForms);
    }
    let ma = a.matrix();
    let mb = b.matrix();
    // det(λA − B) = λ³ det A − λ² tr(adj(A)·B) + λ tr(A·adj(B)) − det B
    let c3 = det3(&ma);
    let c2 = -trace(&mat_mul(&adjugate(&ma), &mb));
    let c1 = trace(&mat_mul(&ma, &adjugate(&mb)));
    let c0 = -det3(&mb);

    let mut members = Vec::new();
    for lambda in cubic_real_roots(c3, c2, c1, c0) {
        let m = member_form(a, b, lambda, 1.0);
        let rank = m.rank();
        members.push(PencilMember {
            lambda,
            mu: 1.0,
            rank,
            degenerate: rank < 3,
            form: m,
        });
    }
    if a.rank() < 3 {
        members.push(PencilMember {
            lambda: 1.0,
            mu: 0.0,
            rank: a.rank(),
            degenerate: true,
            form: *a,
        });
    }
    Ok(members)
}

fn member_form(a: &ConicForm, b: &ConicForm, lambda: f64, mu: f64) -> ConicForm {
    let ma = a.matrix();
    let mb = b.matrix();
    let mut m = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = lambda * ma[i][j] - mu * mb[i][j];
        }
    }
    ConicForm::from_matrix(m, a.kind())
}

/// Outcome of factoring a rank-2 dual form.
#[derive(Debug, Clone, Copy)]
pub enum SplitResult {
    /// The form is `(u·ξ)(v·ξ)` up to scale: a real point pair.
    Points(HomogeneousPoint, HomogeneousPoint),
    /// The two nonzero eigenvalues share a sign; no real factorization.
    Imaginary,
}

/// Factor a rank-2 dual form into its point pair, when real.
///
/// With nonzero eigenvalues `κ₁ > 0 > κ₂` and eigendirections `e₁`, `e₂`,
/// the factors are `√κ₁·e₁ ± √(−κ₂)·e₂`.
pub fn split_degenerate_dual(c: &ConicForm) -> Result<SplitResult> {
    let rank = c.rank();
    if rank != 2 {
        return Err(Error::RankMismatch {
            expected: 2,
            found: rank,
        });
    }
    let (e, v) = sym_eigen(&c.matrix());
    let mut idx = [0usize, 1, 2];
    idx.sort_unstable_by(|&i, &j| e[j].abs().partial_cmp(&e[i].abs()).unwrap());
    let (i1, i2) = (idx[0], idx[1]);
    let (mut k1, mut k2) = (e[i1], e[i2]);
    let (mut v1, mut v2) = (i1, i2);
    if k1 < k2 {
        core::mem::swap(&mut k1, &mut k2);
        core::mem::swap(&mut v1, &mut v2);
    }
    if k1 <= 0.0 || k2 >= 0.0 {
        return Ok(SplitResult::Imaginary);
    }
    let s1 = fmath::sqrt(k1);
    let s2 = fmath::sqrt(-k2);
    let mut u = [0.0; 3];
    let mut w = [0.0; 3];
    for k in 0..3 {
        u[k] = s1 * v[k][v1] + s2 * v[k][v2];
        w[k] = s1 * v[k][v1] - s2 * v[k][v2];
    }
    Ok(SplitResult::Points(
        HomogeneousPoint::new(u[0], u[1], u[2])?.canonical(),
        HomogeneousPoint::new(w[0], w[1], w[2])?.canonical(),
    ))
}

/// The primal form of the canonical h-elliptic parabola `x²/C² + 2y² − 2y`.
pub fn h_elliptic_parabola(c: f64) -> Result<ConicForm> {
    check_shape_parameter(c)?;
    Ok(ConicForm::from_upper(
        [1.0 / (c * c), 0.0, 0.0, 2.0, -1.0, 0.0],
        ConicKind::Primal,
    ))
}

pub(crate) fn check_shape_parameter(c: f64) -> Result<()> {
    if !(c > 1e-12 && c < 1.0 - 1e-12) {
        return Err(Error::InvalidParameter {
            name: "C",
            value: c,
        });
    }
    Ok(())
}

/// Everything the focus pipeline produces for the h-elliptic parabola.
#[derive(Debug, Clone)]
pub struct FociPipeline {
    /// Dual conic of the parabola, in the gauge where the `ξ₂ξ₃` entry is −1.
    pub dual: ConicForm,
    /// Singular members of the pencil spanned with the dual absolute.
    pub members: Vec<PencilMember>,
    /// The asymptotic focus, `(0, 1)` on the absolute.
    pub asymptotic_focus: HomogeneousPoint,
    /// The proper focus, `(0, C²/(2−C²))`.
    pub proper_focus: BckPoint,
    /// Largest deviation of the pipeline output from the closed forms.
    pub residual: f64,
}

/// Run the dual-pencil focus extraction for the h-elliptic parabola and
/// compare the outcome with the closed-form foci.
pub fn h_elliptic_parabola_foci(c: f64) -> Result<FociPipeline> {
    let primal = h_elliptic_parabola(c)?;
    let mut dual = dual_conic(&primal)?;
    // gauge so the pencil roots come out as C² and 1
    let m = dual.matrix();
    if m[1][2] != 0.0 {
        dual = dual.scaled(-1.0 / m[1][2]);
    }
    let members = pencil_singular_members(&ConicForm::dual_absolute(), &dual)?;

    let mut found: Option<(HomogeneousPoint, HomogeneousPoint)> = None;
    for mem in &members {
        if mem.rank == 2 {
            if let SplitResult::Points(u, v) = split_degenerate_dual(&mem.form)? {
                found = Some((u, v));
                break;
            }
        }
    }
    let (u, v) = found.ok_or(Error::RankMismatch {
        expected: 2,
        found: 3,
    })?;

    let abs = ConicForm::absolute();
    let on_absolute = |p: HomogeneousPoint| {
        let q = p.canonical().coords();
        abs.eval(q).abs() < 1e-8
    };
    let (asym, proper) = if on_absolute(u) { (u, v) } else { (v, u) };
    let (px, py) = proper.affine().ok_or(Error::ZeroHomogeneous)?;
    let proper_pt = BckPoint::new(px, py)?;

    let fy = c * c / (2.0 - c * c);
    let mut residual = (px - 0.0).abs().max((py - fy).abs());
    let ac = asym.canonical().coords();
    for (got, want) in ac.iter().zip([0.0, 1.0, 1.0]) {
        residual = residual.max((got - want).abs());
    }
    Ok(FociPipeline {
        dual,
        members,
        asymptotic_focus: asym.canonical(),
        proper_focus: proper_pt,
        residual,
    })
}

/// Foci of the Euclidean parabola `x² − 2py`: the ideal point `[0,1,0]` and
/// the proper focus `(0, p/2)`, extracted through the same pencil pipeline
/// against the dual Euclidean absolute `ξ₁² + ξ₂²`.
pub fn euclidean_parabola_foci(p: f64) -> Result<(HomogeneousPoint, (f64, f64))> {
    if !(p > 0.0) {
        return Err(Error::InvalidParameter {
            name: "p",
            value: p,
        });
    }
    let primal = ConicForm::from_upper([1.0, 0.0, 0.0, 0.0, -p, 0.0], ConicKind::Primal);
    let mut dual = dual_conic(&primal)?;
    let m = dual.matrix();
    if m[0][0] != 0.0 {
        dual = dual.scaled(1.0 / m[0][0]);
    }
    let euclid = ConicForm::from_upper([1.0, 0.0, 0.0, 1.0, 0.0, 0.0], ConicKind::Dual);
    let members = pencil_singular_members(&euclid, &dual)?;
    for mem in &members {
        if mem.mu != 0.0 && mem.rank == 2 {
            if let SplitResult::Points(u, v) = split_degenerate_dual(&mem.form)? {
                let (ideal, proper) = if u.is_ideal() { (u, v) } else { (v, u) };
                let xy = proper.affine().ok_or(Error::ZeroHomogeneous)?;
                return Ok((ideal.canonical(), xy));
            }
        }
    }
    Err(Error::RankMismatch {
        expected: 2,
        found: 3,
    })
}

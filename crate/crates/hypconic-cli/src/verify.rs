//! The verification suite behind `hypconic verify`.
//!
//! Every check compares a closed form against an independent route (the
//! quadrature oracle, a recombination of other closed forms, or an exact
//! constant) and prints one line:
//!
//! ```text
//! CHECK <id> <PASS|FAIL> <closed_form> <oracle> <abs_err>
//! ```
//!
//! For grid checks the printed values belong to the worst grid point. The
//! process exits 0 only if every selected check passes.

use hypconic::family::{self, RegionFamily, RegionSpec};
use hypconic::models::{bck_distance, bck_to_bph, bph_distance, bph_to_bck, BckPoint};
use hypconic::quad::{self, QuadConfig};
use hypconic::{conics, forms, sds};

use crate::table::sig12;

use std::f64::consts::LN_2;
use std::fmt::Write as _;

pub struct VerifyOptions {
    pub filter: Option<String>,
    pub grid: usize,
    pub rel_tol: f64,
    pub self_test: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            filter: None,
            grid: 9,
            rel_tol: 1e-10,
            self_test: false,
        }
    }
}

pub struct Report {
    pub text: String,
    pub all_passed: bool,
    /// Number of checks the filter selected.
    pub matched: usize,
}

struct Check {
    id: &'static str,
    closed: f64,
    oracle: f64,
    tol: f64,
}

impl Check {
    fn passed(&self) -> bool {
        let err = (self.closed - self.oracle).abs();
        err.is_finite() && err <= self.tol
    }
}

// worst-point tracker for grid comparisons under a mixed rel/abs tolerance
struct Worst {
    closed: f64,
    oracle: f64,
    ratio: f64,
}

impl Worst {
    fn new() -> Self {
        Worst {
            closed: 0.0,
            oracle: 0.0,
            ratio: -1.0,
        }
    }

    fn feed(&mut self, closed: f64, oracle: f64, tol_at: f64) {
        let ratio = if oracle.is_finite() {
            (closed - oracle).abs() / tol_at
        } else {
            f64::INFINITY
        };
        if ratio > self.ratio {
            self.ratio = ratio;
            self.closed = closed;
            self.oracle = oracle;
        }
    }

    fn check(&self, id: &'static str, rel: f64, floor: f64) -> Check {
        Check {
            id,
            closed: self.closed,
            oracle: self.oracle,
            tol: (rel * self.closed.abs()).max(floor),
        }
    }
}

fn oracle_tol(rel: f64, floor: f64, closed: f64) -> f64 {
    (rel * closed.abs()).max(floor)
}

const ORACLE_REL: f64 = 1e-8;
const ORACLE_ABS: f64 = 1e-10;

// a small deterministic generator, good enough for sampling test points
struct Lcg(u64);

impl Lcg {
    fn next_unit(&mut self) -> f64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (self.0 >> 11) as f64 / (1u64 << 53) as f64
    }

    fn in_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_unit()
    }
}

pub fn run(opts: &VerifyOptions) -> Report {
    let grid: Vec<f64> = (1..=opts.grid)
        .map(|k| k as f64 / (opts.grid + 1) as f64)
        .collect();
    let cfg = QuadConfig {
        rel_tol: opts.rel_tol,
        ..QuadConfig::default()
    };
    let mut checks: Vec<Check> = Vec::new();

    models_checks(&mut checks);
    conics_checks(&mut checks, &grid);
    family_checks(&mut checks, &grid, &cfg);
    forms_checks(&mut checks, &grid, &cfg, opts);
    sds_checks(&mut checks, &grid, &cfg, opts);
    quad_checks(&mut checks, &cfg);

    let mut text = String::new();
    let _ = writeln!(
        text,
        "VERIFY grid={} rel_tol={}{}",
        opts.grid,
        sig12(opts.rel_tol),
        if opts.self_test { " self-test" } else { "" }
    );
    let mut selected = 0usize;
    let mut failed = 0usize;
    for check in &checks {
        if let Some(f) = &opts.filter {
            if !check.id.contains(f.as_str()) {
                continue;
            }
        }
        selected += 1;
        let ok = check.passed();
        if !ok {
            failed += 1;
        }
        let _ = writeln!(
            text,
            "CHECK {} {} {} {} {}",
            check.id,
            if ok { "PASS" } else { "FAIL" },
            sig12(check.closed),
            sig12(check.oracle),
            sig12((check.closed - check.oracle).abs())
        );
    }
    if failed == 0 {
        let _ = writeln!(text, "RESULT PASS ({selected} checks)");
    } else {
        let _ = writeln!(text, "RESULT FAIL ({failed} of {selected} checks failed)");
    }
    Report {
        text,
        all_passed: failed == 0,
        matched: selected,
    }
}

fn models_checks(checks: &mut Vec<Check>) {
    let mut rng = Lcg(0x1234_5678);
    let mut round_trip = 0.0f64;
    let mut agreement = 0.0f64;
    for _ in 0..2000 {
        let r = rng.in_range(0.0, 0.9949).sqrt();
        let t = rng.in_range(0.0, std::f64::consts::TAU);
        let p = BckPoint::new(r * t.cos(), r * t.sin()).expect("interior");
        let q = bph_to_bck(bck_to_bph(p)).expect("round trip stays interior");
        round_trip = round_trip
            .max((p.x() - q.x()).abs())
            .max((p.y() - q.y()).abs());

        let r2 = rng.in_range(0.0, 0.9949).sqrt();
        let t2 = rng.in_range(0.0, std::f64::consts::TAU);
        let p2 = BckPoint::new(r2 * t2.cos(), r2 * t2.sin()).expect("interior");
        let d1 = bck_distance(p, p2);
        let d2 = bph_distance(bck_to_bph(p), bck_to_bph(p2));
        agreement = agreement.max((d1 - d2).abs());
    }
    checks.push(Check {
        id: "models.round_trip",
        closed: 0.0,
        oracle: round_trip,
        tol: 1e-12,
    });
    checks.push(Check {
        id: "models.chart_distance",
        closed: 0.0,
        oracle: agreement,
        tol: 1e-10,
    });

    let mut gauge = 0.0f64;
    for k in 1..100 {
        let t = k as f64 / 100.0;
        let d = bck_distance(BckPoint::origin(), BckPoint::new(t, 0.0).unwrap());
        gauge = gauge.max((d - t.atanh()).abs());
        let d = bck_distance(BckPoint::origin(), BckPoint::new(0.0, t).unwrap());
        gauge = gauge.max((d - t.atanh()).abs());
    }
    checks.push(Check {
        id: "models.axis_gauge",
        closed: 0.0,
        oracle: gauge,
        tol: 1e-13,
    });
}

fn conics_checks(checks: &mut Vec<Check>, grid: &[f64]) {
    let mut root_err = 0.0f64;
    let mut pipeline = 0.0f64;
    for &c in grid {
        let pipe = conics::h_elliptic_parabola_foci(c).expect("pipeline");
        pipeline = pipeline.max(pipe.residual);
        let lambdas: Vec<f64> = pipe.members.iter().map(|m| m.lambda).collect();
        root_err = root_err.max((lambdas[0] - c * c).abs());
        root_err = root_err.max((lambdas[1] - 1.0).abs());
    }
    checks.push(Check {
        id: "conics.pencil_roots",
        closed: 0.0,
        oracle: root_err,
        tol: 1e-12,
    });
    checks.push(Check {
        id: "conics.foci_pipeline",
        closed: 0.0,
        oracle: pipeline,
        tol: 1e-10,
    });

    let mut euclid = 0.0f64;
    for &p in &[0.5, 1.0, 2.0, 4.0] {
        let (ideal, focus) = conics::euclidean_parabola_foci(p).expect("euclidean pipeline");
        assert!(ideal.is_ideal());
        euclid = euclid.max((focus.1 - p / 2.0).abs()).max(focus.0.abs());
    }
    checks.push(Check {
        id: "conics.euclidean_foci",
        closed: 0.0,
        oracle: euclid,
        tol: 1e-12,
    });
}

fn family_checks(checks: &mut Vec<Check>, grid: &[f64], cfg: &QuadConfig) {
    let mut residual = 0.0f64;
    let mut common_dev = 0.0f64;
    for &c in grid {
        for i in 0..=40 {
            let t = -10.0 + 0.5 * i as f64;
            let chk = family::killing_check(c, t).expect("killing");
            residual = residual.max(chk.residual);
            common_dev = common_dev.max((chk.dist_horocycle_to_parabola - chk.common_value).abs());
        }
    }
    checks.push(Check {
        id: "family.killing_residual",
        closed: 0.0,
        oracle: residual,
        tol: 1e-12,
    });
    checks.push(Check {
        id: "family.killing_common_value",
        closed: 0.0,
        oracle: common_dev,
        tol: 1e-12,
    });

    let mut rng = Lcg(0x9e37_79b9);
    let mut nesting_violations = 0u32;
    let mut transcription_disagreements = 0u32;
    for &c in grid {
        let b = RegionSpec::new(RegionFamily::B, c).unwrap();
        let d = RegionSpec::new(RegionFamily::D, c).unwrap();
        let e = RegionSpec::new(RegionFamily::E, c).unwrap();
        let v = RegionSpec::new(RegionFamily::V, c).unwrap();
        for _ in 0..1200 {
            let x = rng.in_range(-0.999, 0.999);
            let y = rng.in_range(-0.999, 0.999);
            if x * x + y * y >= 0.998 {
                continue;
            }
            let p = BckPoint::new(x, y).unwrap();
            let (ib, id_, ie, iv) = (b.contains(p), d.contains(p), e.contains(p), v.contains(p));
            if (id_ && !ib) || (ie && !id_) || (iv && !ie) {
                nesting_violations += 1;
            }
            let q = bck_to_bph(p);
            for region in [&b, &d, &e, &v] {
                let away = region_boundary_margin(region, x, y) > 1e-9;
                if away && region.contains(p) != region.contains_bph(q).unwrap() {
                    transcription_disagreements += 1;
                }
            }
        }
    }
    checks.push(Check {
        id: "family.nesting_chain",
        closed: 0.0,
        oracle: nesting_violations as f64,
        tol: 0.5,
    });
    checks.push(Check {
        id: "family.chart_transcription",
        closed: 0.0,
        oracle: transcription_disagreements as f64,
        tol: 0.5,
    });

    let mut synthetic = 0.0f64;
    for &c in grid {
        let el = family::synthetic_elements(c).unwrap();
        let artanh_form = (c * c / (2.0 - c * c)).atanh();
        synthetic = synthetic
            .max((el.focal_distance - artanh_form).abs())
            .max((el.band_radius.cosh() - el.focal_distance.exp()).abs());
        let f = bck_to_bph(el.focus);
        synthetic = synthetic.max((f.y() - 1.0 / (1.0 - c * c).sqrt()).abs());
    }
    checks.push(Check {
        id: "family.synthetic_identities",
        closed: 0.0,
        oracle: synthetic,
        tol: 1e-13,
    });

    // symmetric-difference balance of the focal band translate: the halves
    // do not equalize; their ratio approaches 1 − ln2/artanh(√2/2)
    let limit = 1.0 - LN_2 / (std::f64::consts::FRAC_1_SQRT_2).atanh();
    let mut ratios = Vec::new();
    for &c in &[0.9, 0.99, 0.999] {
        let top = quad::area_focal_band_minus_parabola(c, cfg).expect("overhang");
        let bottom = quad::area_parabola_minus_focal_band(c, cfg).expect("undershoot");
        ratios.push(top.value / bottom.value);
    }
    let monotone_to_limit = (ratios[1] - limit).abs() < (ratios[0] - limit).abs()
        && (ratios[2] - limit).abs() < (ratios[1] - limit).abs();
    checks.push(Check {
        id: "family.focal_ratio_convergence",
        closed: limit,
        oracle: if monotone_to_limit {
            ratios[2]
        } else {
            f64::NAN
        },
        tol: 0.1,
    });
}

fn region_boundary_margin(region: &RegionSpec, x: f64, y: f64) -> f64 {
    let c = region.shape();
    let s = (1.0f64 - c * c).sqrt();
    match region.family() {
        RegionFamily::E => (x * x / (c * c) + 2.0 * y * y - 2.0 * y).abs(),
        RegionFamily::B => (x * x / (c * c) + y * y - 1.0).abs().min(y.abs()),
        RegionFamily::D => (x * x / (c * c) + y * y - 1.0)
            .abs()
            .min(y.abs())
            .min((x * x + 2.0 * y * y - 2.0 * y).abs()),
        RegionFamily::V => {
            let f1 = x * x + 2.0 * c * (s * x + c * y) * (y - 1.0);
            let f2 = x * x + 2.0 * c * (-s * x + c * y) * (y - 1.0);
            f1.abs().min(f2.abs())
        }
        _ => f64::INFINITY,
    }
}

fn forms_checks(checks: &mut Vec<Check>, grid: &[f64], cfg: &QuadConfig, opts: &VerifyOptions) {
    let etas = grid;

    let mut area_band = Worst::new();
    let mut area_parab = Worst::new();
    let mut len_band = Worst::new();
    let mut len_parab = Worst::new();
    let mut len_cut = Worst::new();
    for &c in grid {
        for &eta in etas {
            let seg = RegionSpec::new(RegionFamily::B, c)
                .unwrap()
                .with_lineal_cutoff(eta)
                .unwrap();
            area_band.feed(
                forms::area_band_segment(c, eta).unwrap(),
                quad::hyp_area(&seg, cfg).unwrap().value,
                oracle_tol(
                    ORACLE_REL,
                    ORACLE_ABS,
                    forms::area_band_segment(c, eta).unwrap(),
                ),
            );
            let seg = RegionSpec::new(RegionFamily::E, c)
                .unwrap()
                .with_lineal_cutoff(eta)
                .unwrap();
            let closed = forms::area_parabola_segment(c, eta).unwrap();
            area_parab.feed(
                closed,
                quad::hyp_area(&seg, cfg).unwrap().value,
                oracle_tol(ORACLE_REL, ORACLE_ABS, closed),
            );
            let closed = forms::len_band_segment_boundary(c, eta).unwrap();
            len_band.feed(
                closed,
                quad::len_band_boundary(c, eta, cfg).unwrap().value,
                oracle_tol(ORACLE_REL, ORACLE_ABS, closed),
            );
            let closed = forms::len_parabola_segment_boundary(c, eta).unwrap();
            len_parab.feed(
                closed,
                quad::len_parabola_boundary(c, eta, cfg).unwrap().value,
                oracle_tol(ORACLE_REL, ORACLE_ABS, closed),
            );
            let closed = forms::len_cutoff_segments(c, eta).unwrap();
            len_cut.feed(
                closed,
                quad::len_cutoff_segments(c, eta, cfg).unwrap().value,
                oracle_tol(ORACLE_REL, ORACLE_ABS, closed),
            );
        }
    }
    checks.push(area_band.check("forms.area_band_segment", ORACLE_REL, ORACLE_ABS));
    checks.push(area_parab.check("forms.area_parabola_segment", ORACLE_REL, ORACLE_ABS));
    checks.push(len_band.check("forms.len_band_boundary", ORACLE_REL, ORACLE_ABS));
    checks.push(len_parab.check("forms.len_parabola_boundary", ORACLE_REL, ORACLE_ABS));
    checks.push(len_cut.check("forms.len_cutoff_segments", ORACLE_REL, ORACLE_ABS));

    let mut area_horo = Worst::new();
    let mut len_horo = Worst::new();
    for &eta in etas {
        let closed = forms::area_horodisk_segment(eta).unwrap();
        let region = RegionSpec::horodisk().with_lineal_cutoff(eta).unwrap();
        area_horo.feed(
            closed,
            quad::hyp_area(&region, cfg).unwrap().value,
            oracle_tol(ORACLE_REL, ORACLE_ABS, closed),
        );
        let closed = forms::len_horocycle_segment(eta).unwrap();
        len_horo.feed(
            closed,
            quad::len_horocycle_boundary(eta, cfg).value,
            oracle_tol(ORACLE_REL, ORACLE_ABS, closed),
        );
    }
    checks.push(area_horo.check("forms.area_horodisk_segment", ORACLE_REL, ORACLE_ABS));
    checks.push(len_horo.check("forms.len_horocycle_boundary", ORACLE_REL, ORACLE_ABS));

    let mut area_tri = Worst::new();
    let mut disk_area = Worst::new();
    let mut disk_circ = Worst::new();
    for &c in grid {
        let closed = forms::area_asymptotic_triangle(c).unwrap();
        let region = RegionSpec::new(RegionFamily::A, c).unwrap();
        area_tri.feed(
            closed,
            quad::hyp_area(&region, cfg).unwrap().value,
            oracle_tol(ORACLE_REL, ORACLE_ABS, closed),
        );
        let radius = c.atanh();
        let closed = forms::disk_area(radius).unwrap();
        disk_area.feed(
            closed,
            quad::disk_area(c, cfg).unwrap().value,
            oracle_tol(ORACLE_REL, ORACLE_ABS, closed),
        );
        let closed = forms::disk_circumference(radius).unwrap();
        disk_circ.feed(
            closed,
            quad::circle_length(c, cfg).unwrap().value,
            oracle_tol(ORACLE_REL, ORACLE_ABS, closed),
        );
    }
    checks.push(area_tri.check("forms.area_asymptotic_triangle", ORACLE_REL, ORACLE_ABS));
    checks.push(disk_area.check("forms.disk_area", ORACLE_REL, ORACLE_ABS));
    checks.push(disk_circ.check("forms.disk_circumference", ORACLE_REL, ORACLE_ABS));

    // area-difference identities
    let mut recombination = 0.0f64;
    let mut triox = 0.0f64;
    let mut equ2 = 0.0f64;
    for &c in grid {
        let s = (1.0f64 - c * c).sqrt();
        let focal = (c * c / (2.0 - c * c)).atanh();
        let finar = forms::area_diff_band_minus_parabola(c).unwrap();
        let rhs = 2.0 * c / s * focal - 2.0 * c / s * LN_2 + 2.0 * c.asin();
        recombination = recombination.max((finar - rhs).abs());

        let finarp = forms::area_diff_horodisk_band_minus_parabola(c).unwrap();
        let eta_f = c * c / (2.0 - c * c);
        let via_triox = finar - forms::area_band_segment(c, eta_f).unwrap()
            + forms::area_horodisk_segment(eta_f).unwrap();
        triox = triox.max((finarp - via_triox).abs());

        equ2 = equ2.max((finarp / (2.0 * c / s) - forms::translation_equiv_constant()).abs());
    }
    checks.push(Check {
        id: "forms.band_difference_recombination",
        closed: 0.0,
        oracle: recombination,
        tol: 1e-12,
    });
    checks.push(Check {
        id: "forms.horodisk_band_difference_exchange",
        closed: 0.0,
        oracle: triox,
        tol: 1e-12,
    });
    checks.push(Check {
        id: "forms.translation_constant_is_uniform",
        closed: 0.0,
        oracle: equ2,
        tol: 1e-12,
    });

    // η-trend limits at C = 0.3, where the final increment clears 1e-6
    let schedule = &cfg.cutoff_schedule;
    let c_trend = 0.3;
    let trend = quad::limit_trend(
        |eta| {
            forms::area_band_segment(c_trend, eta).unwrap()
                - forms::area_parabola_segment(c_trend, eta).unwrap()
        },
        schedule,
    );
    checks.push(Check {
        id: "forms.band_difference_trend",
        closed: forms::area_diff_band_minus_parabola(c_trend).unwrap(),
        oracle: trend.extrapolated,
        tol: 1e-6,
    });
    checks.push(Check {
        id: "forms.band_difference_trend_increment",
        closed: 0.0,
        oracle: trend.final_increment,
        tol: 1e-6,
    });
    let trend = quad::limit_trend(
        |eta| {
            forms::len_band_segment_boundary(c_trend, eta).unwrap()
                - forms::len_parabola_segment_boundary(c_trend, eta).unwrap()
        },
        schedule,
    );
    checks.push(Check {
        id: "forms.circumference_difference_trend",
        closed: forms::g(c_trend).unwrap(),
        oracle: trend.extrapolated,
        tol: 1e-6,
    });
    checks.push(Check {
        id: "forms.circumference_difference_trend_increment",
        closed: 0.0,
        oracle: trend.final_increment,
        tol: 1e-6,
    });
    let trend = quad::limit_trend(
        |eta| forms::len_cutoff_segments(c_trend, eta).unwrap(),
        schedule,
    );
    checks.push(Check {
        id: "forms.cutoff_segment_trend_to_zero",
        closed: 0.0,
        oracle: trend.extrapolated,
        tol: 1e-6,
    });

    // the matching-translation root and the limit constants
    let root = forms::alpha_root();
    checks.push(Check {
        id: "forms.alpha_root",
        closed: 0.8019864299302277,
        oracle: root.value,
        tol: 5e-6,
    });
    checks.push(Check {
        id: "forms.alpha_limit_at_zero",
        closed: forms::alpha_limit_at_zero(),
        oracle: forms::alpha(1e-3).unwrap(),
        tol: 1e-5,
    });
    checks.push(Check {
        id: "forms.beta_hat_d_limit",
        closed: forms::beta_hat_d_limit_at_one(),
        oracle: forms::beta_hat_d(1.0 - 1e-6).unwrap(),
        tol: 1e-4,
    });
    checks.push(Check {
        id: "forms.beta_hat_v_limit",
        closed: forms::beta_hat_v_limit_at_one(),
        oracle: forms::beta_hat_v(1.0 - 1e-6).unwrap(),
        tol: 1e-4,
    });
    // β − focal converges at rate √(1−C²)·artanh C, about 1.03e-2 at this C;
    // the tolerance is that rate bound, not a fixed small constant
    let c_near = 1.0 - 1e-6;
    let s_near = (1.0f64 - c_near * c_near).sqrt();
    checks.push(Check {
        id: "forms.beta_deviation_limit",
        closed: forms::beta_deviation_limit_at_one(),
        oracle: forms::beta_deviation(c_near).unwrap(),
        tol: 2.0 * s_near * c_near.atanh() + 1e-6,
    });

    let mut monotone_violations = 0u32;
    let fns: [fn(f64) -> hypconic::Result<f64>; 6] = [
        forms::g,
        forms::g_prime,
        forms::g_hat,
        forms::beta,
        forms::beta_hat_d,
        forms::beta_hat_v,
    ];
    for f in fns {
        let mut prev = f64::NEG_INFINITY;
        for k in 1..100 {
            let v = f(k as f64 / 100.0).unwrap();
            if v <= prev {
                monotone_violations += 1;
            }
            prev = v;
        }
    }
    checks.push(Check {
        id: "forms.circumference_functions_monotone",
        closed: 0.0,
        oracle: monotone_violations as f64,
        tol: 0.5,
    });
    let _ = opts;
}

fn sds_checks(checks: &mut Vec<Check>, grid: &[f64], cfg: &QuadConfig, opts: &VerifyOptions) {
    let mut w = Worst::new();
    let mut e_tilde = Worst::new();
    let mut z = Worst::new();
    for &c in grid {
        for &eta in grid {
            let closed = sds::sds_area_w(c, eta).unwrap();
            w.feed(
                closed,
                quad::sds_area_w(c, eta, cfg).unwrap().value,
                oracle_tol(ORACLE_REL, ORACLE_ABS, closed),
            );
            let closed = sds::sds_area_e_tilde(c, eta).unwrap();
            e_tilde.feed(
                closed,
                quad::sds_area_e_tilde(c, eta, cfg).unwrap().value,
                oracle_tol(ORACLE_REL, ORACLE_ABS, closed),
            );
        }
        let closed = sds::sds_area_z(c).unwrap();
        z.feed(
            closed,
            quad::sds_area_z(c, cfg).unwrap().value,
            oracle_tol(ORACLE_REL, ORACLE_ABS, closed),
        );
    }
    checks.push(w.check("sds.area_w", ORACLE_REL, ORACLE_ABS));
    checks.push(e_tilde.check("sds.area_e_tilde", ORACLE_REL, ORACLE_ABS));
    checks.push(z.check("sds.area_z", ORACLE_REL, ORACLE_ABS));

    // the central claim: the polar route reproduces the lineal-cutoff G
    let perturbation = if opts.self_test { 1e-6 } else { 0.0 };
    let mut polar = Worst::new();
    for &c in grid {
        let lhs = sds::circumference_diff_via_polar(c).unwrap() + perturbation;
        polar.feed(lhs, forms::g(c).unwrap(), 1e-12);
    }
    checks.push(Check {
        id: "sds.polar_route_matches_g",
        closed: polar.closed,
        oracle: polar.oracle,
        tol: 1e-12,
    });

    let mut remo = 0.0f64;
    for &c in grid {
        let mut eta = -0.99;
        while eta < 0.995 {
            let a = sds::sds_area_e_tilde(c, eta).unwrap();
            let b = sds::sds_area_e_tilde_split(c, eta).unwrap();
            remo = remo.max((a - b).abs());
            eta += 0.03;
        }
    }
    checks.push(Check {
        id: "sds.remo_addition_identity",
        closed: 0.0,
        oracle: remo,
        tol: 1e-12,
    });

    let mut pc1 = 0.0f64;
    let mut pc2 = 0.0f64;
    let mut disk_quad = 0.0f64;
    for &c in &[0.2, 0.5, 0.8] {
        let report = sds::verify_duality_disk(c, cfg).unwrap();
        pc1 = pc1.max(report.area_identity_residual);
        pc2 = pc2.max(report.circumference_identity_residual);
        for (oracle, closed) in [
            (&report.area_oracle, report.area_closed),
            (
                &report.sds_boundary_length_oracle,
                report.sds_boundary_length_closed,
            ),
            (&report.circumference_oracle, report.circumference_closed),
            (
                &report.sds_copolar_area_oracle,
                report.sds_copolar_area_closed,
            ),
        ] {
            disk_quad = disk_quad.max((oracle.value - closed).abs() / closed.abs().max(1.0));
        }
    }
    checks.push(Check {
        id: "sds.disk_area_duality_closed",
        closed: 0.0,
        oracle: pc1,
        tol: 1e-13,
    });
    checks.push(Check {
        id: "sds.disk_circumference_duality_closed",
        closed: 0.0,
        oracle: pc2,
        tol: 1e-13,
    });
    checks.push(Check {
        id: "sds.disk_duality_quadrature",
        closed: 0.0,
        oracle: disk_quad,
        tol: 1e-8,
    });

    let mut interchange = 0.0f64;
    for &(c, eta) in &[(0.3, 0.5), (0.6, 0.5), (0.8, 0.7)] {
        let direct = quad::sds_area_w(c, eta, cfg).unwrap();
        let swapped = quad::sds_area_w_interchanged(c, eta, cfg).unwrap();
        let budget = (direct.error_estimate + swapped.error_estimate).max(1e-9);
        interchange = interchange.max((direct.value - swapped.value).abs() / budget);
        let direct = quad::sds_area_e_tilde(c, eta, cfg).unwrap();
        let swapped = quad::sds_area_e_tilde_interchanged(c, eta, cfg).unwrap();
        let budget = (direct.error_estimate + swapped.error_estimate).max(1e-9);
        interchange = interchange.max((direct.value - swapped.value).abs() / budget);
        let direct = quad::sds_area_z(c, cfg).unwrap();
        let swapped = quad::sds_area_z_interchanged(c, cfg).unwrap();
        let budget = (direct.error_estimate + swapped.error_estimate).max(1e-9);
        interchange = interchange.max((direct.value - swapped.value).abs() / budget);
    }
    checks.push(Check {
        id: "sds.order_interchange_within_budget",
        closed: 0.0,
        oracle: if interchange <= 1.0 { 0.0 } else { interchange },
        tol: 0.5,
    });

    // half-plane comparisons
    let mut dv = Worst::new();
    let mut ev = Worst::new();
    let mut de_closed = 0.0f64;
    for &c in grid {
        let closed = forms::bph_area_diff_d_minus_v(c).unwrap();
        dv.feed(
            closed,
            quad::bph_area_d_minus_v(c, cfg).unwrap().value,
            oracle_tol(ORACLE_REL, ORACLE_ABS, closed),
        );
        let closed = forms::bph_area_diff_e_minus_v(c).unwrap();
        ev.feed(
            closed,
            quad::bph_area_e_minus_v(c, cfg).unwrap().value,
            oracle_tol(ORACLE_REL, ORACLE_ABS, closed),
        );
        let diff =
            forms::bph_area_diff_d_minus_v(c).unwrap() - forms::bph_area_diff_e_minus_v(c).unwrap();
        de_closed =
            de_closed.max((diff - forms::area_diff_horodisk_band_minus_parabola(c).unwrap()).abs());
    }
    checks.push(dv.check("bph.area_d_minus_v", ORACLE_REL, ORACLE_ABS));
    checks.push(ev.check("bph.area_e_minus_v", ORACLE_REL, ORACLE_ABS));
    checks.push(Check {
        id: "bph.area_d_minus_e_matches_disk_band_difference",
        closed: 0.0,
        oracle: de_closed,
        tol: 1e-12,
    });
}

fn quad_checks(checks: &mut Vec<Check>, cfg: &QuadConfig) {
    let region = RegionSpec::new(RegionFamily::E, 0.7)
        .unwrap()
        .with_lineal_cutoff(0.8)
        .unwrap();
    let loose = quad::hyp_area(&region, cfg).unwrap();
    let tighter = QuadConfig {
        rel_tol: cfg.rel_tol * 0.5,
        ..cfg.clone()
    };
    let tight = quad::hyp_area(&region, &tighter).unwrap();
    checks.push(Check {
        id: "quad.self_consistency",
        closed: tight.value,
        oracle: loose.value,
        tol: loose.error_estimate.max(1e-13),
    });
}

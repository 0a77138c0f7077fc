//! Behavioral tests of the command-line surface.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypconic"))
        .args(args)
        .output()
        .expect("binary spawns")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn root_tolerance_and_bracket_variants_agree() {
    let strict = stdout(&run(&["root"]));
    let loose = stdout(&run(&["root", "--tol", "1e-6"]));
    let bracketed = stdout(&run(&["root", "--bracket", "0.7", "0.9"]));
    let value = |s: &str| -> f64 {
        s.split_whitespace()
            .nth(3)
            .expect("value field")
            .parse()
            .expect("numeric root")
    };
    let steps = |s: &str| -> u32 {
        s.split('(')
            .nth(1)
            .and_then(|t| t.split_whitespace().next())
            .expect("step count")
            .parse()
            .expect("numeric steps")
    };
    let v0 = value(&strict);
    assert!((v0 - 0.8019864299).abs() < 1e-8);
    assert!((value(&loose) - v0).abs() < 1e-5);
    assert!((value(&bracketed) - v0).abs() < 1e-8);
    assert!(steps(&loose) < steps(&strict));
}

#[test]
fn table_columns_are_monotone_and_precise() {
    let out = run(&["table", "--quantities", "G,Gprime,Ghat"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("C,G,Gprime,Ghat"));
    let mut prev = [f64::NEG_INFINITY; 3];
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 4);
        for (i, f) in fields[1..].iter().enumerate() {
            // 12 significant digits in scientific notation
            assert!(f.contains('e') && f.contains('.'));
            let v: f64 = f.parse().expect("numeric field");
            assert!(v > prev[i], "column {i} must increase");
            prev[i] = v;
        }
    }
}

#[test]
fn table_custom_c_values_and_errors() {
    let out = run(&["table", "--quantities", "focal_distance", "--c", "0.6"]);
    let text = stdout(&out);
    let row = text.lines().nth(1).expect("one data row");
    let v: f64 = row.split(',').nth(1).unwrap().parse().unwrap();
    assert!((v - (0.36f64 / 1.64).atanh()).abs() < 1e-11);

    // scalar quantities cannot be mixed into a sweep
    let out = run(&["table", "--quantities", "G,alpha_root"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["table", "--quantities", "no_such_quantity"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["table", "--quantities", "G", "--c", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
}

fn polyline_points(svg: &str) -> Vec<Vec<(f64, f64)>> {
    let mut curves = Vec::new();
    for chunk in svg.split("points=\"").skip(1) {
        let body = chunk.split('"').next().expect("closed attribute");
        let pts = body
            .split(' ')
            .map(|pair| {
                let (x, y) = pair.split_once(',').expect("x,y pair");
                // undo the SVG y-flip
                (x.parse::<f64>().unwrap(), -y.parse::<f64>().unwrap())
            })
            .collect();
        curves.push(pts);
    }
    curves
}

#[test]
fn bck_figure_nests_the_parabola_in_the_band() {
    let out = run(&[
        "figure",
        "--chart",
        "bck",
        "--layers",
        "E,B",
        "--c",
        "0.6",
        "--samples",
        "64",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let svg = stdout(&out);
    let curves = polyline_points(&svg);
    assert_eq!(curves.len(), 2);
    for &(x, y) in &curves[0] {
        // every sampled E-boundary point lies in the closed band (the
        // rendered samples sit a rounding away from the exact curve)
        let slack = 1e-5;
        assert!(
            x * x / 0.36 + y * y - 1.0 <= slack && y >= -slack,
            "({x},{y}) escaped the band"
        );
    }
}

#[test]
fn figure_charts_have_expected_pieces() {
    let out = run(&[
        "figure",
        "--chart",
        "bph",
        "--layers",
        "E,D,V",
        "--c",
        "0.6",
        "--samples",
        "32",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let svg = stdout(&out);
    let curves = polyline_points(&svg);
    // hyperbola branch, two rays + base for D, and the wedge
    assert_eq!(curves.len(), 5);
    // the hyperbola has its vertex at y̌ = 1 on the axis
    let apex = curves[0]
        .iter()
        .cloned()
        .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
        .unwrap();
    assert!((apex.1 - 1.0).abs() < 1e-3);

    let out = run(&[
        "figure",
        "--chart",
        "dual",
        "--layers",
        "copolar_E,copolar_B",
        "--c",
        "0.6",
        "--samples",
        "32",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let svg = stdout(&out);
    let curves = polyline_points(&svg);
    assert_eq!(curves.len(), 4); // parabola, ellipse, two vertical polars
                                 // the co-polar parabola crests at (0, 1)
    let crest = curves[0]
        .iter()
        .cloned()
        .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
        .unwrap();
    assert!((crest.1 - 1.0).abs() < 0.05);
    // the vertex polars sit at x = ±1/C (six rendered decimals)
    for line in &curves[2..4] {
        assert!((line[0].0.abs() - 1.0 / 0.6).abs() < 1e-5);
    }

    // custom viewport is honored in the header
    let out = run(&[
        "figure",
        "--chart",
        "dual",
        "--layers",
        "copolar_E",
        "--c",
        "0.6",
        "--viewport",
        "-2,-2,2,2",
    ]);
    assert!(stdout(&out).contains("viewBox=\"-2.000000 -2.000000 4.000000 4.000000\""));
}

#[test]
fn verify_filter_and_output_file() {
    let dir = std::env::temp_dir().join("hypconic-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.txt");
    let out = run(&[
        "verify",
        "--filter",
        "models",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = std::fs::read_to_string(&path).unwrap();
    assert!(report
        .lines()
        .all(|l| { l.starts_with("VERIFY") || l.starts_with("RESULT") || l.contains("models.") }));
    assert!(report.trim_end().ends_with("checks)"));
    std::fs::remove_file(&path).unwrap();

    let out = run(&["verify", "--filter", "no-such-module"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_report_lines_are_well_formed() {
    let out = run(&["verify", "--filter", "quad"]);
    let text = stdout(&out);
    let check_lines: Vec<&str> = text.lines().filter(|l| l.starts_with("CHECK")).collect();
    assert!(!check_lines.is_empty());
    for line in check_lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        // CHECK <id> <status> <closed> <oracle> <abs_err>
        assert_eq!(fields.len(), 6, "malformed: {line}");
        assert!(fields[2] == "PASS" || fields[2] == "FAIL");
        for v in &fields[3..6] {
            v.parse::<f64>().expect("numeric report fields");
        }
    }
}

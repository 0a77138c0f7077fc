//! Command-line front end: verification reports, parameter-sweep tables,
//! figure rendering, and the matching-translation root.
//!
//! Subcommands:
//!
//! ```text
//! hypconic verify [--filter <module>] [--grid <n>] [--tol <x>]
//!                 [--out <path>] [--self-test]
//! hypconic table  --quantities <q1,q2,...> [--grid <n>] [--c <v1,v2,...>]
//!                 [--out <path>]
//! hypconic figure --chart <bck|bph|dual> [--layers <l1,l2,...>] [--c <x>]
//!                 [--viewport <x0,y0,x1,y1>] [--samples <n>] [--out <path>]
//! hypconic root   [--tol <x>] [--bracket <lo> <hi>]
//! ```
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or configuration
//! error. All configuration is explicit; environment variables are ignored.

mod figure;
mod table;
mod verify;

use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(args: &[String]) -> Result<ExitCode, String> {
    let Some(cmd) = args.first() else {
        print_usage();
        return Ok(ExitCode::from(2));
    };
    let rest = &args[1..];
    match cmd.as_str() {
        "verify" => cmd_verify(rest),
        "table" => cmd_table(rest),
        "figure" => cmd_figure(rest),
        "root" => cmd_root(rest),
        "--help" | "-h" | "help" => {
            print_usage();
            Ok(ExitCode::SUCCESS)
        }
        other => Err(format!("unknown subcommand `{other}`")),
    }
}

fn print_usage() {
    eprintln!(
        "usage: hypconic <verify|table|figure|root> [options]\n\
         \n\
         verify  [--filter <module>] [--grid <n>] [--tol <x>] [--out <path>] [--self-test]\n\
         table   --quantities <list> [--grid <n>] [--c <list>] [--out <path>]\n\
         figure  --chart <bck|bph|dual> [--layers <list>] [--c <x>]\n\
         \x20        [--viewport <x0,y0,x1,y1>] [--samples <n>] [--out <path>]\n\
         root    [--tol <x>] [--bracket <lo> <hi>]"
    );
}

/// Minimal flag cursor over the argument list.
struct Flags<'a> {
    args: &'a [String],
    i: usize,
}

impl<'a> Flags<'a> {
    fn new(args: &'a [String]) -> Self {
        Flags { args, i: 0 }
    }

    fn next_flag(&mut self) -> Option<&'a str> {
        let f = self.args.get(self.i)?;
        self.i += 1;
        Some(f.as_str())
    }

    fn value(&mut self, flag: &str) -> Result<&'a str, String> {
        let v = self
            .args
            .get(self.i)
            .ok_or_else(|| format!("{flag} needs a value"))?;
        self.i += 1;
        Ok(v.as_str())
    }
}

fn parse_f64(s: &str, what: &str) -> Result<f64, String> {
    s.parse::<f64>()
        .map_err(|_| format!("{what}: `{s}` is not a number"))
}

fn parse_usize(s: &str, what: &str) -> Result<usize, String> {
    s.parse::<usize>()
        .map_err(|_| format!("{what}: `{s}` is not an integer"))
}

fn parse_list(s: &str) -> Vec<String> {
    s.split(',')
        .map(|p| p.trim().to_string())
        .filter(|p| !p.is_empty())
        .collect()
}

fn write_output(path: Option<&str>, content: &str) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, content).map_err(|e| format!("writing {p}: {e}")),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_verify(args: &[String]) -> Result<ExitCode, String> {
    let mut opts = verify::VerifyOptions::default();
    let mut out: Option<String> = None;
    let mut flags = Flags::new(args);
    while let Some(flag) = flags.next_flag() {
        match flag {
            "--filter" => opts.filter = Some(flags.value("--filter")?.to_string()),
            "--grid" => {
                opts.grid = parse_usize(flags.value("--grid")?, "--grid")?;
                if opts.grid == 0 || opts.grid > 99 {
                    return Err("--grid must be between 1 and 99".into());
                }
            }
            "--tol" => {
                opts.rel_tol = parse_f64(flags.value("--tol")?, "--tol")?;
                if !(opts.rel_tol > 0.0) {
                    return Err("--tol must be positive".into());
                }
            }
            "--out" => out = Some(flags.value("--out")?.to_string()),
            "--self-test" => opts.self_test = true,
            other => return Err(format!("unknown flag `{other}` for verify")),
        }
    }
    let report = verify::run(&opts);
    if report.matched == 0 {
        return Err(format!(
            "--filter `{}` matched no checks",
            opts.filter.as_deref().unwrap_or("")
        ));
    }
    write_output(out.as_deref(), &report.text)?;
    Ok(if report.all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_table(args: &[String]) -> Result<ExitCode, String> {
    let mut quantities: Vec<String> = Vec::new();
    let mut c_values: Vec<f64> = Vec::new();
    let mut grid = 9usize;
    let mut out: Option<String> = None;
    let mut flags = Flags::new(args);
    while let Some(flag) = flags.next_flag() {
        match flag {
            "--quantities" => quantities = parse_list(flags.value("--quantities")?),
            "--c" => {
                for v in parse_list(flags.value("--c")?) {
                    c_values.push(parse_f64(&v, "--c")?);
                }
            }
            "--grid" => grid = parse_usize(flags.value("--grid")?, "--grid")?,
            "--out" => out = Some(flags.value("--out")?.to_string()),
            other => return Err(format!("unknown flag `{other}` for table")),
        }
    }
    if quantities.is_empty() {
        return Err("table needs --quantities".into());
    }
    if c_values.is_empty() {
        if grid == 0 || grid > 999 {
            return Err("--grid must be between 1 and 999".into());
        }
        c_values = (1..=grid).map(|k| k as f64 / (grid + 1) as f64).collect();
    }
    for &c in &c_values {
        if !(c > 0.0 && c < 1.0) {
            return Err(format!("C = {c} is outside (0, 1)"));
        }
    }
    let csv = table::render(&quantities, &c_values)?;
    write_output(out.as_deref(), &csv)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_figure(args: &[String]) -> Result<ExitCode, String> {
    let mut spec = figure::FigureSpec::default();
    let mut out: Option<String> = None;
    let mut flags = Flags::new(args);
    let mut chart_set = false;
    while let Some(flag) = flags.next_flag() {
        match flag {
            "--chart" => {
                spec.chart = match flags.value("--chart")? {
                    "bck" => figure::Chart::Bck,
                    "bph" => figure::Chart::Bph,
                    "dual" => figure::Chart::Dual,
                    other => return Err(format!("unknown chart `{other}`")),
                };
                chart_set = true;
            }
            "--layers" => spec.layers = parse_list(flags.value("--layers")?),
            "--c" => spec.c = parse_f64(flags.value("--c")?, "--c")?,
            "--samples" => {
                spec.samples = parse_usize(flags.value("--samples")?, "--samples")?;
                if spec.samples < 16 {
                    return Err("--samples must be at least 16".into());
                }
            }
            "--viewport" => {
                let parts = parse_list(flags.value("--viewport")?);
                if parts.len() != 4 {
                    return Err("--viewport needs x0,y0,x1,y1".into());
                }
                let mut v = [0.0f64; 4];
                for (slot, p) in v.iter_mut().zip(&parts) {
                    *slot = parse_f64(p, "--viewport")?;
                }
                if !(v[0] < v[2] && v[1] < v[3]) {
                    return Err("--viewport must be nonempty".into());
                }
                spec.viewport = Some(v);
            }
            "--out" => out = Some(flags.value("--out")?.to_string()),
            other => return Err(format!("unknown flag `{other}` for figure")),
        }
    }
    if !chart_set {
        return Err("figure needs --chart".into());
    }
    if !(spec.c > 0.0 && spec.c < 1.0) {
        return Err(format!("C = {} is outside (0, 1)", spec.c));
    }
    let svg = figure::render(&spec)?;
    write_output(out.as_deref(), &svg)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_root(args: &[String]) -> Result<ExitCode, String> {
    let mut tol = 1e-10;
    let mut bracket = (0.5f64, 0.95f64);
    let mut flags = Flags::new(args);
    while let Some(flag) = flags.next_flag() {
        match flag {
            "--tol" => {
                tol = parse_f64(flags.value("--tol")?, "--tol")?;
                if !(tol > 0.0) {
                    return Err("--tol must be positive".into());
                }
            }
            "--bracket" => {
                let lo = parse_f64(flags.value("--bracket")?, "--bracket")?;
                let hi = parse_f64(flags.value("--bracket")?, "--bracket")?;
                if !(0.0 < lo && lo < hi && hi < 1.0) {
                    return Err("--bracket needs 0 < lo < hi < 1".into());
                }
                bracket = (lo, hi);
            }
            other => return Err(format!("unknown flag `{other}` for root")),
        }
    }
    let root = hypconic::forms::alpha_root_with(bracket.0, bracket.1, tol, 200);
    println!(
        "alpha-root C = {} +/- {} ({} bisection steps)",
        table::sig12(root.value),
        table::sig12(root.error_bound.max(f64::MIN_POSITIVE)),
        root.iterations
    );
    Ok(ExitCode::SUCCESS)
}

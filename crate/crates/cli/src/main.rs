//! `lenslab`: Alexander polynomials of lens space surgery knots.
//!
//! Exit codes: 0 ok, 1 verification failures, 2 bad arguments,
//! 3 flat/alternating screen failed, 4 window too small, 5 golden mismatch.

use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lenslab::alexander::{
    lspace_classify, type_a_periodic, type_a_poly, yamka_rep, yamka_rep_with_lift, AlexanderError,
    KnotClass, Source,
};
use lenslab::catalog::{self, CatalogError, TableId};
use lenslab::laurent::profile;
use lenslab::lattice::{
    a_grid, b_grid, check_point_symmetry, check_torus_strip, check_traversable, render_ascii,
    render_svg, trace, CoefficientGrid, LatticeError, Window,
};
use lenslab::params::{normalize, SurgeryParameter};
use lenslab::verify::{self, VerificationReport};

const EXIT_FAIL: u8 = 1;
const EXIT_ARGS: u8 = 2;
const EXIT_SCREEN: u8 = 3;
const EXIT_WINDOW: u8 = 4;
const EXIT_GOLDEN: u8 = 5;

#[derive(Parser)]
#[command(name = "lenslab", version, about = "Alexander polynomials of lens space surgery knots")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the polynomial of a parameter with its exponent profile.
    Poly {
        p: i64,
        #[arg(allow_hyphen_values = true)]
        k: i64,
        #[arg(long, value_enum, default_value_t = Method::TypeA)]
        method: Method,
        /// Torus lift `l` for `--method torus` (default: first coprime lift).
        #[arg(long)]
        lift: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Draw the coefficient grid and its non-zero curve.
    Trace {
        p: i64,
        #[arg(allow_hyphen_values = true)]
        k: i64,
        #[arg(long, value_enum, default_value_t = Kind::A)]
        kind: Kind,
        /// `IMIN:IMAX,JMIN:JMAX`
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Run every check on one parameter or on a sweep.
    Verify {
        p: Option<i64>,
        #[arg(allow_hyphen_values = true)]
        k: Option<i64>,
        #[arg(long, conflicts_with_all = ["p", "k"])]
        pmax: Option<i64>,
        /// Which polynomial to check: type A, the IST formula, or both.
        #[arg(long, value_enum, default_value_t = VerifyKind::Both)]
        kind: VerifyKind,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        /// Feed corrupted inputs and confirm each is caught.
        #[arg(long, conflicts_with_all = ["p", "k", "pmax"])]
        self_test: bool,
    },
    /// Regenerate the published tables and compare with the golden files.
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        which: Option<u8>,
        /// Compare against this file instead of the built-in golden copy.
        #[arg(long, requires = "which")]
        golden: Option<std::path::PathBuf>,
        /// List cells where the published tables disagree with recomputation.
        #[arg(long, conflicts_with_all = ["which", "golden"])]
        errata: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Torus,
    TypeA,
    Ist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    A,
    B,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyKind {
    A,
    B,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Tsv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Poly { p, k, method, lift, json } => cmd_poly(p, k, method, lift, json),
        Cmd::Trace { p, k, kind, window, format } => cmd_trace(p, k, kind, window.as_deref(), format),
        Cmd::Verify { p, k, pmax, kind, format, self_test } => {
            if self_test {
                cmd_self_test()
            } else {
                cmd_verify(p, k, pmax, kind, format)
            }
        }
        Cmd::Tables { which, golden, errata } => {
            if errata {
                cmd_errata()
            } else {
                cmd_tables(which, golden.as_deref())
            }
        }
    };
    ExitCode::from(code)
}

fn bad_args(msg: impl std::fmt::Display) -> u8 {
    eprintln!("lenslab: {msg}");
    EXIT_ARGS
}

fn param(p: i64, k: i64) -> Result<SurgeryParameter, u8> {
    normalize(p, k.rem_euclid(p.max(1))).map_err(|e| bad_args(format!("invalid parameter ({p},{k}): {e}")))
}

// ------------------------------------------------------------------- poly

fn cmd_poly(p: i64, k: i64, method: Method, lift: Option<i64>, json: bool) -> u8 {
    let sp = match param(p, k) {
        Ok(sp) => sp,
        Err(code) => return code,
    };
    let built: Result<KnotClass, AlexanderError> = match method {
        Method::TypeA => type_a_poly(&sp).map(|f| KnotClass::new(sp, f, Source::TypeAFormula)),
        Method::Torus => {
            let f = match lift {
                Some(l) => yamka_rep_with_lift(&sp, l),
                None => yamka_rep(&sp),
            };
            f.map(|f| KnotClass::new(sp, f, Source::TorusReduction))
        }
        Method::Ist => KnotClass::ist(p, k.rem_euclid(p)),
    };
    let kc = match built {
        Ok(kc) => kc,
        Err(AlexanderError::Laurent(e)) if matches!(method, Method::TypeA) => {
            // No symmetric representative: print the periodic values.
            let pc = type_a_periodic(&sp);
            println!("values\t{:?}", pc.values);
            eprintln!("lenslab: fails the flat/alternating screen: {e}");
            return EXIT_SCREEN;
        }
        Err(e) => return bad_args(e),
    };
    if json {
        println!("{}", serde_json::to_string(&kc).expect("serializable"));
    } else {
        print_poly_text(&kc);
    }
    if kc.profile.is_none() {
        eprintln!("lenslab: fails the flat/alternating screen");
        return EXIT_SCREEN;
    }
    0
}

fn print_poly_text(kc: &KnotClass) {
    let sp = &kc.param;
    let source = serde_json::to_value(kc.source).expect("serializable");
    println!("param\tp={} k={} k2={} q={} e={} c={} m={}", sp.p, sp.k, sp.k2, sp.q, sp.e, sp.c, sp.m);
    println!("source\t{}", source.as_str().unwrap_or_default());
    println!("poly\t{}", kc.poly);
    println!("g\t{}", kc.genus());
    match &kc.profile {
        Some(prof) => {
            println!("NS_h\t{}", catalog::seq(&prof.ns_h));
            println!("AS\t{}", catalog::seq(&prof.adjacent));
            println!("alpha\t{}", prof.alpha);
        }
        None => println!("coeffs\tmin_exp={} {:?}", kc.poly.min_exp(), kc.poly.coeffs()),
    }
    if kc.source == Source::IstFormula {
        if let Ok(c) = lspace_classify(sp.p, sp.k) {
            println!("ambient\t{}", serde_json::to_value(c).expect("serializable").as_str().unwrap_or_default());
        }
    }
}

// ------------------------------------------------------------------ trace

fn parse_window(s: &str) -> Option<Window> {
    let (i, j) = s.split_once(',')?;
    let range = |r: &str| -> Option<(i64, i64)> {
        let (a, b) = r.split_once(':')?;
        Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
    };
    let ((i0, i1), (j0, j1)) = (range(i)?, range(j)?);
    (i0 <= i1 && j0 <= j1).then(|| Window::new(i0, i1, j0, j1))
}

fn cmd_trace(p: i64, k: i64, kind: Kind, window: Option<&str>, format: Format) -> u8 {
    let sp = match param(p, k) {
        Ok(sp) => sp,
        Err(code) => return code,
    };
    let window = match window.map(parse_window) {
        Some(None) => return bad_args("window must look like IMIN:IMAX,JMIN:JMAX"),
        Some(w) => w,
        None => None,
    };
    let grid = match kind {
        Kind::A => {
            let w = window.unwrap_or_else(|| Window::default_a(sp.p));
            match type_a_poly(&sp) {
                Ok(f) if profile(&f).is_ok() => a_grid(&sp, w),
                Ok(_) | Err(AlexanderError::Laurent(_)) => {
                    eprintln!("lenslab: ({p},{k}) fails the flat/alternating screen");
                    return EXIT_SCREEN;
                }
                Err(e) => return bad_args(e),
            }
        }
        Kind::B => b_grid(sp.p, sp.k, window),
    };
    let grid = match grid {
        Ok(g) => g,
        Err(e) => return lattice_exit(e),
    };
    let curve = match trace(&grid) {
        Ok(c) => c,
        Err(e) => return lattice_exit(e),
    };
    let verdicts = match verdicts(&grid, &curve) {
        Ok(v) => v,
        Err(e) => return lattice_exit(e),
    };
    let out = match format {
        Format::Ascii => {
            let mut s = render_ascii(&grid, &curve);
            for (name, v) in &verdicts {
                s.push_str(&format!("{name}: {v}\n"));
            }
            s
        }
        Format::Svg => {
            let svg = render_svg(&grid, &curve);
            let mut s = svg.trim_end().trim_end_matches("</svg>").to_string();
            for (name, v) in &verdicts {
                s.push_str(&format!("<!-- {name}: {v} -->\n"));
            }
            s.push_str("</svg>\n");
            s
        }
    };
    print!("{out}");
    0
}

fn verdicts(
    grid: &CoefficientGrid,
    curve: &lenslab::lattice::NonZeroCurve,
) -> Result<Vec<(&'static str, String)>, LatticeError> {
    let yes = |b: bool| if b { "yes" } else { "no" }.to_string();
    let mut out = vec![
        ("traversable", yes(check_traversable(grid)?)),
        ("point-symmetric", yes(check_point_symmetry(curve))),
    ];
    if grid.kind == lenslab::lattice::GridKind::A {
        let strip = check_torus_strip(grid)?;
        out.push(("torus-strip", if strip { "empty" } else { "occupied" }.to_string()));
    }
    Ok(out)
}

fn lattice_exit(e: LatticeError) -> u8 {
    eprintln!("lenslab: {e}");
    match e {
        LatticeError::WindowTooSmall(_) => EXIT_WINDOW,
        LatticeError::NotFlat { .. } | LatticeError::ConflictingArrows { .. } => EXIT_SCREEN,
        _ => EXIT_ARGS,
    }
}

// ----------------------------------------------------------------- verify

fn threads_from_env() -> Result<Option<usize>, u8> {
    match std::env::var("LENSLAB_THREADS") {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(bad_args(format!("LENSLAB_THREADS must be a positive integer, got {s:?}"))),
        },
    }
}

fn emit(reports: &[VerificationReport], format: ReportFormat) -> u8 {
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let mut total = verify::Tally::default();
    for r in reports {
        total.add(r.tally());
    }
    match format {
        ReportFormat::Json => {
            for r in reports {
                let _ = writeln!(out, "{}", r.to_json_line());
            }
            let _ = writeln!(
                out,
                "{}",
                serde_json::json!({"summary": {"reports": reports.len(), "pass": total.pass, "fail": total.fail, "skip": total.skip}})
            );
        }
        ReportFormat::Tsv => {
            let _ = write!(out, "{}", verify::tsv_summary(reports));
        }
    }
    let _ = out.flush();
    if total.fail > 0 {
        EXIT_FAIL
    } else {
        0
    }
}

fn cmd_verify(
    p: Option<i64>,
    k: Option<i64>,
    pmax: Option<i64>,
    kind: VerifyKind,
    format: ReportFormat,
) -> u8 {
    let want_a = kind != VerifyKind::B;
    let want_b = kind != VerifyKind::A;
    let reports = match (p, k, pmax) {
        (None, None, Some(n)) => {
            if n < 3 {
                return bad_args("--pmax must be at least 3");
            }
            let threads = match threads_from_env() {
                Ok(t) => t,
                Err(code) => return code,
            };
            let mut out = Vec::new();
            if want_a {
                out.extend(verify::sweep(n, threads));
            }
            if want_b {
                out.extend(verify::sweep_ist(n, threads));
            }
            out
        }
        (Some(p), Some(k), None) => {
            let sp = match param(p, k) {
                Ok(sp) => sp,
                Err(code) => return code,
            };
            let mut out = Vec::new();
            if want_a {
                out.push(verify::run_all(&sp));
            }
            if want_b {
                match verify::run_ist(sp.p, sp.k) {
                    Ok(r) => out.push(r),
                    Err(e) => return bad_args(e),
                }
            }
            out
        }
        _ => return bad_args("give either P K or --pmax N"),
    };
    emit(&reports, format)
}

fn cmd_self_test() -> u8 {
    let mut caught = 0;
    let mut total = 0;
    let mut reports = Vec::new();
    for (p, k) in [(5, 2), (10, 3), (19, 7)] {
        let sp = normalize(p, k).expect("valid");
        for source in [Source::TypeAFormula, Source::IstFormula] {
            let good = match source {
                Source::IstFormula => lenslab::alexander::ist_poly(p, k),
                _ => type_a_poly(&sp),
            }
            .expect("polynomial");
            let r = verify::run_with_poly(&sp, &verify::corrupt(&good), source);
            total += 1;
            if r.failures().next().is_some() {
                caught += 1;
            }
            reports.push(r);
        }
    }
    for r in &reports {
        println!("{}", r.to_json_line());
    }
    for t in TableId::ALL {
        let golden = t.golden();
        let tampered = tamper(golden);
        total += 1;
        match catalog::compare_text(t, golden, &tampered) {
            Err(e @ CatalogError::GoldenMismatch { .. }) => {
                caught += 1;
                println!("{}", serde_json::json!({"table": t.number(), "detected": e.to_string()}));
            }
            _ => println!("{}", serde_json::json!({"table": t.number(), "detected": null})),
        }
    }
    println!("{}", serde_json::json!({"self_test": {"corrupted": total, "detected": caught}}));
    if caught == total {
        0
    } else {
        EXIT_FAIL
    }
}

/// Bumps the last number on the last data line of a golden file.
fn tamper(golden: &str) -> String {
    let mut lines: Vec<String> = golden.lines().map(str::to_string).collect();
    if let Some(last) = lines.last_mut() {
        let mut cells: Vec<String> = last.split('\t').map(str::to_string).collect();
        if let Some(c) = cells.last_mut() {
            *c = match c.parse::<i64>() {
                Ok(n) => (n + 1).to_string(),
                Err(_) => format!("{c}x"),
            };
        }
        *last = cells.join("\t");
    }
    lines.join("\n") + "\n"
}

// ----------------------------------------------------------------- tables

fn cmd_tables(which: Option<u8>, golden: Option<&std::path::Path>) -> u8 {
    let tables: Vec<TableId> = match which {
        Some(n) => vec![TableId::from_number(n).expect("validated by clap")],
        None => TableId::ALL.to_vec(),
    };
    let external = match golden.map(std::fs::read_to_string) {
        Some(Ok(s)) => Some(s),
        Some(Err(e)) => return bad_args(format!("cannot read golden file: {e}")),
        None => None,
    };
    let mut code = 0;
    for (n, t) in tables.iter().enumerate() {
        let text = match catalog::regenerate(*t) {
            Ok(rows) => catalog::render_tsv(*t, &rows),
            Err(e) => {
                eprintln!("lenslab: {e}");
                return EXIT_FAIL;
            }
        };
        if n > 0 {
            println!();
        }
        print!("{text}");
        let reference = external.as_deref().unwrap_or(t.golden());
        if let Err(e) = catalog::compare_text(*t, reference, &text) {
            eprintln!("lenslab: {e}");
            code = EXIT_GOLDEN;
        }
    }
    code
}

fn cmd_errata() -> u8 {
    println!("table\tp\tk\tcolumn\tprinted\tcomputed");
    for e in catalog::ERRATA {
        println!("{}\t{}\t{}\t{}\t{}\t{}", e.table, e.p, e.k, e.column, e.printed, e.computed);
    }
    0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_parsing() {
        assert_eq!(parse_window("-3:3,-10:10"), Some(Window::new(-3, 3, -10, 10)));
        assert_eq!(parse_window("0:2, 1:4"), Some(Window::new(0, 2, 1, 4)));
        assert_eq!(parse_window("3:0,0:1"), None);
        assert_eq!(parse_window("junk"), None);
    }

    #[test]
    fn tamper_changes_last_cell() {
        let t = "# x\na\tb\n1\t2\n";
        assert_eq!(tamper(t), "# x\na\tb\n1\t3\n");
    }

    #[test]
    fn cli_parses() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}

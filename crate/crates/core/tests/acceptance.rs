//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always print. A criterion
//! listed in `KNOWN_RED` prints FAIL; the process only exits nonzero when
//! a failure differs from the recorded one.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use lenslab::alexander::{
    genus, ist_poly, lspace_classify, type_a_poly, yamka_rep, yamka_rep_with_lift, LSpaceClass, Source,
};
use lenslab::catalog::{compute_row, seq, ERRATA};
use lenslab::laurent::{flat_alternating, profile, torus_polynomial, LaurentPoly, NonZeroProfile};
use lenslab::lattice::{
    a_grid, check_point_symmetry, check_torus_strip, check_traversable, da_closed_form, trace,
    zero_runs_ok, Window,
};
use lenslab::params::{enumerate, normalize, SurgeryParameter};
use lenslab::verify::{
    check_alpha_bound, check_ds1, check_third_fourth, pretzel_poly, torus_match, Status,
};
use rayon::prelude::*;

/// Criterion 8, strip clause: parameters where the strip between a curve
/// and its translate is empty but the polynomial is not a torus polynomial.
/// All have |m| = 1 and gcd(k, |k2|) = 2.
const KNOWN_RED: &[(u8, &[(i64, i64)])] = &[(
    8,
    &[(23, 4), (25, 4), (39, 4), (41, 4), (47, 6), (49, 6), (55, 4), (57, 4), (59, 6)],
)];

fn torus(r: i64, s: i64) -> LaurentPoly {
    torus_polynomial(r, s).unwrap()
}

fn sp(p: i64, k: i64) -> SurgeryParameter {
    normalize(p, k).unwrap()
}

/// Flat/alternating type-A parameters (screen on the torus reduction).
fn fa_params(p_max: i64) -> Vec<(SurgeryParameter, LaurentPoly, NonZeroProfile)> {
    enumerate(p_max)
        .into_par_iter()
        .filter(|s| !s.is_trivial())
        .filter_map(|s| {
            let y = yamka_rep(&s).ok()?;
            if !flat_alternating(&y) {
                return None;
            }
            let f = type_a_poly(&s).ok()?;
            let prof = profile(&f).ok()?;
            Some((s, f, prof))
        })
        .collect()
}

struct Outcome {
    failures: Vec<String>,
    /// Parameters behind the failures, for comparison with `KNOWN_RED`.
    params: BTreeSet<(i64, i64)>,
    note: String,
}

impl Outcome {
    fn new(note: impl Into<String>) -> Self {
        Outcome { failures: Vec::new(), params: BTreeSet::new(), note: note.into() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn check_at(&mut self, ok: bool, p: i64, k: i64, what: impl FnOnce() -> String) {
        if !ok {
            self.params.insert((p, k));
            self.failures.push(what());
        }
    }
}

fn c1() -> Outcome {
    let mut o = Outcome::new("T(2,3), A(5,2), A(7,2), B(5,2)");
    let want = LaurentPoly::from_terms(&[(1, 1), (0, -1), (-1, 1)]);
    let got = [
        ("torus(2,3)", torus(2, 3)),
        ("type_a(5,2)", type_a_poly(&sp(5, 2)).unwrap()),
        ("type_a(7,2)", type_a_poly(&sp(7, 2)).unwrap()),
        ("ist(5,2)", ist_poly(5, 2).unwrap()),
    ];
    for (name, f) in got {
        o.check(f == want, || format!("{name} = {f}"));
    }
    o.check(sp(7, 2).k2 == -3, || "k2(7,2) != -3".into());
    o
}

fn c2() -> Outcome {
    let mut o = Outcome::new("(19,7) formula and lift 11");
    let s = sp(19, 7);
    let ns = vec![5, 4, 2, 1, 0, -1, -2, -4, -5];
    for (name, f) in [("type_a", type_a_poly(&s).unwrap()), ("lift 11", yamka_rep_with_lift(&s, 11).unwrap())] {
        let prof = profile(&f).unwrap();
        o.check(prof.ns == ns, || format!("{name} NS {:?}", prof.ns));
        o.check(prof.alpha == 7, || format!("{name} alpha {}", prof.alpha));
        o.check(f == pretzel_poly(), || format!("{name} is not the pretzel polynomial"));
        for finding in [check_alpha_bound(&s, &prof), check_ds1(&s, &prof), check_third_fourth(&prof, Source::TypeAFormula)] {
            o.check(finding.status == Status::Pass, || format!("{name} {} {}", finding.check, finding.detail));
        }
    }
    o
}

/// Printed value unless the cell is a listed erratum.
fn expected(table: u8, p: i64, k: i64, column: &str, printed: String) -> String {
    ERRATA
        .iter()
        .find(|e| e.table == table && e.p == p && e.k == k && e.column == column)
        .map_or(printed, |e| e.computed.to_string())
}

fn c3() -> Outcome {
    let mut o = Outcome::new(format!("{} rows", common::TABLE1.len()));
    for &(p, k, _, g, ns_h) in common::TABLE1 {
        let f = ist_poly(p, k).unwrap();
        let got = seq(&profile(&f).unwrap().ns_h);
        o.check(genus(&f) == g, || format!("({p},{k}) g={}", genus(&f)));
        let want = expected(1, p, k, "NS_h", ns_h.to_string());
        o.check(got == want, || format!("({p},{k}) NS_h {got}"));
    }
    let listed: BTreeSet<(i64, i64)> = common::TABLE1.iter().map(|r| (r.0, r.1)).collect();
    let found: BTreeSet<(i64, i64)> = enumerate(23)
        .iter()
        .filter(|s| !s.is_trivial())
        .filter(|s| lspace_classify(s.p, s.k).unwrap() == LSpaceClass::NonLSpace)
        .map(|s| (s.p, s.k))
        .collect();
    o.check(found == listed, || format!("NonLSpace set {found:?}"));
    o
}

fn c4() -> Outcome {
    let n = common::TABLE2.len() + common::TABLE3.len();
    let mut o = Outcome::new(format!("{n} rows plus spot values"));
    let mut compare = |table: u8, p_printed: i64, k_printed: i64, cells: Vec<(&str, String)>| {
        // A row whose printed k is itself an erratum is keyed by the correction.
        let k = ERRATA
            .iter()
            .find(|e| e.table == table && e.p == p_printed && e.column == "k" && e.printed == k_printed.to_string())
            .map_or(k_printed, |e| e.k);
        let row = compute_row(p_printed, k).unwrap();
        let got = |c: &str| match c {
            "g" => row.g.to_string(),
            "k2_abs" => row.k2_abs.to_string(),
            "NS_h" => seq(&row.ns_h),
            "AS" => seq(&row.adjacent),
            "alpha" => row.alpha.to_string(),
            _ => unreachable!(),
        };
        for (col, printed) in cells {
            let want = expected(table, p_printed, k, col, printed);
            let have = got(col);
            o.check(have == want, || format!("table {table} ({p_printed},{k}) {col}: {have} vs {want}"));
        }
    };
    for &(g, p, k, k2, ns, as_, alpha) in common::TABLE2 {
        compare(2, p, k, vec![("g", g.to_string()), ("k2_abs", k2.to_string()), ("NS_h", ns.into()), ("AS", as_.into()), ("alpha", alpha.to_string())]);
    }
    for &(g, p, k, k2, ns, alpha) in common::TABLE3 {
        compare(3, p, k, vec![("g", g.to_string()), ("k2_abs", k2.to_string()), ("NS_h", ns.into()), ("alpha", alpha.to_string())]);
    }
    let spot = [
        (compute_row(12, 5).unwrap().alpha, 14),
        (compute_row(16, 7).unwrap().g, 24),
        (compute_row(20, 9).unwrap().g, 40),
        (compute_row(45, 7).unwrap().alpha, 13),
    ];
    for (n, (have, want)) in spot.into_iter().enumerate() {
        o.check(have == want, || format!("spot {n}: {have} != {want}"));
    }
    o.check(seq(&compute_row(12, 5).unwrap().adjacent) == "(12,7,5,2,0,-2)", || "AS(12,5)".into());
    o
}

fn c5() -> Outcome {
    let mut o = Outcome::new(format!("{} twins", common::TORUS_TWINS.len()));
    for &((p, k), (r, s)) in common::TORUS_TWINS {
        let f = ist_poly(p, k).unwrap();
        o.check(torus_match(&f) == Some((r, s)), || format!("K({p},{k}) -> {:?}", torus_match(&f)));
        let same = profile(&f).map(|a| a.ns) == profile(&torus(r, s)).map(|b| b.ns);
        o.check(same, || format!("NS(K({p},{k})) != NS(T({r},{s}))"));
    }
    let f = ist_poly(23, 7).unwrap();
    o.check(torus_match(&f).is_none(), || format!("K(23,7) -> {:?}", torus_match(&f)));
    o
}

fn c6() -> Outcome {
    let params: Vec<SurgeryParameter> = enumerate(200).into_iter().filter(|s| !s.is_trivial()).collect();
    let bad: Vec<String> = params
        .par_iter()
        .filter_map(|s| {
            let y = yamka_rep(s).ok()?;
            if !flat_alternating(&y) {
                return None;
            }
            match type_a_poly(s) {
                Ok(f) if f == y => None,
                Ok(f) => Some(format!("({},{}) {f} vs {y}", s.p, s.k)),
                Err(e) => Some(format!("({},{}) {e}", s.p, s.k)),
            }
        })
        .collect();
    let n = params.par_iter().filter(|s| yamka_rep(s).is_ok_and(|y| flat_alternating(&y))).count();
    let mut o = Outcome::new(format!("{n} flat/alternating parameters, p <= 200"));
    o.failures = bad;
    o
}

fn c7(fa: &[(SurgeryParameter, LaurentPoly, NonZeroProfile)]) -> Outcome {
    let mut o = Outcome::new(format!("{} parameters, p <= 100", fa.len()));
    for (s, f, prof) in fa {
        let (p, k, k2) = (s.p, s.k, s.k2_abs());
        let d = prof.degree;
        let m = k.max(k2);
        o.check_at(prof.ns[1] == d - 1, p, k, || format!("({p},{k}) n2"));
        o.check_at(prof.alpha + 1 >= m, p, k, || format!("({p},{k}) alpha {}", prof.alpha));
        o.check_at(m <= 2 * prof.r as i64 + 1, p, k, || format!("({p},{k}) count"));
        let tf = check_third_fourth(prof, Source::TypeAFormula);
        o.check_at(tf.status != Status::Fail, p, k, || format!("({p},{k}) third/fourth {}", tf.detail));
        o.check_at(k2 != 2 * d - 1, p, k, || format!("({p},{k}) |k2| = 2g-1"));
        if k2 == k + 1 {
            o.check_at(prof.alpha == k, p, k, || format!("({p},{k}) |k2|=k+1 alpha {}", prof.alpha));
        }
        if k2 == 2 * d || k2 == 2 * d + 1 {
            let shape = (p, k) == (4 * d + 1, 2) || (p, k) == (4 * d + 3, 2);
            o.check_at(*f == torus(2, 2 * d + 1) && shape, p, k, || format!("({p},{k}) T(2,n) bucket"));
        }
    }
    o
}

fn c8(fa: &[(SurgeryParameter, LaurentPoly, NonZeroProfile)]) -> Outcome {
    let small: Vec<_> = fa.iter().filter(|(s, _, _)| s.p <= 60).collect();
    let mut o = Outcome::new(format!("{} parameters, p <= 60", small.len()));
    for (s, f, _) in small {
        let (p, k) = (s.p, s.k);
        let g = a_grid(s, Window::default_a(p)).unwrap();
        let w = g.window;
        let diff_ok = w.cells().filter(|&(i, _)| i < w.i_max).all(|(i, j)| g.diff(i, j) == da_closed_form(s, i + j * k));
        o.check_at(diff_ok, p, k, || format!("({p},{k}) dA closed form"));
        let pair_ok = (0..p).all(|x| (da_closed_form(s, x) == -1) == (da_closed_form(s, x + s.e * k) == 1));
        o.check_at(pair_ok, p, k, || format!("({p},{k}) dA pairing"));
        o.check_at(zero_runs_ok(s), p, k, || format!("({p},{k}) zero runs"));
        o.check_at(check_traversable(&g).unwrap(), p, k, || format!("({p},{k}) traversable"));
        o.check_at(check_point_symmetry(&trace(&g).unwrap()), p, k, || format!("({p},{k}) symmetry"));
        let strip = check_torus_strip(&g).unwrap();
        let tm = torus_match(f);
        o.check_at(strip == tm.is_some(), p, k, || {
            format!("({p},{k}) strip_empty={strip} torus={tm:?} m={} gcd(k,|k2|)={}", s.m, lenslab::arith::gcd(k, s.k2_abs()))
        });
    }
    o
}

fn c9(fa: &[(SurgeryParameter, LaurentPoly, NonZeroProfile)]) -> Outcome {
    let mut o = Outcome::new("g <= 5, 5-term and 7-term members, p <= 100");
    let eight = [torus(2, 3), torus(2, 5), torus(2, 7), torus(3, 4), torus(2, 9), torus(3, 5), torus(2, 11), pretzel_poly()];
    let five = [torus(2, 5), torus(3, 4)];
    let seven = [torus(2, 7), torus(3, 5), torus(4, 5)];
    for (s, f, prof) in fa {
        let (p, k) = (s.p, s.k);
        if prof.degree <= 5 {
            o.check_at(eight.contains(f), p, k, || format!("({p},{k}) g<=5 {f}"));
        }
        match prof.term_count() {
            5 => o.check_at(five.contains(f), p, k, || format!("({p},{k}) 5 terms {f}")),
            7 => o.check_at(seven.contains(f), p, k, || format!("({p},{k}) 7 terms {f}")),
            _ => {}
        }
    }
    o
}

fn main() -> ExitCode {
    let start = Instant::now();
    let fa = fa_params(100);
    let results: Vec<(u8, &str, Outcome)> = vec![
        (1, "trefoil triple agreement", c1()),
        (2, "pretzel reproduction", c2()),
        (3, "table 1 rows and selection", c3()),
        (4, "tables 2-3 rows", c4()),
        (5, "torus twins", c5()),
        (6, "oracle equivalence sweep", c6()),
        (7, "property sweep", c7(&fa)),
        (8, "lattice suite", c8(&fa)),
        (9, "classification lists", c9(&fa)),
    ];
    let mut unexpected = 0;
    for (id, name, o) in &results {
        let verdict = if o.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {id}: {name} ({})", o.note);
        for f in &o.failures {
            println!("    {f}");
        }
        let known: BTreeSet<(i64, i64)> =
            KNOWN_RED.iter().filter(|(c, _)| c == id).flat_map(|(_, ps)| ps.iter().copied()).collect();
        if !o.failures.is_empty() && (known.is_empty() || o.params != known) {
            unexpected += 1;
        }
        if !known.is_empty() && o.params != known {
            println!("    recorded failures {known:?} no longer match");
            unexpected += 1;
        }
    }
    println!("acceptance finished in {:.1}s", start.elapsed().as_secs_f64());
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

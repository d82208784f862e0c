//! Text and SVG pictures of a grid with its curve.
//!
//! ASCII layout: one text row per lattice row (highest `j` on top) and one
//! connector row between neighbouring lattice rows. Cells are 2 characters
//! wide on a stride of 4. Values print as ` 1`, `-1`, ` 2`, zeros as ` .`;
//! joins print as `──` (same row), `│`, `╱`, `╲` (between rows).

use std::collections::BTreeSet;
use std::fmt::Write;

use super::trace::NonZeroCurve;
use super::CoefficientGrid;

const STRIDE: usize = 4;

fn cell_text(v: i64) -> String {
    match v {
        0 => " .".to_string(),
        v if (-9..=99).contains(&v) => format!("{v:>2}"),
        _ => " *".to_string(),
    }
}

pub fn render_ascii(grid: &CoefficientGrid, curve: &NonZeroCurve) -> String {
    let w = grid.window;
    let sp = &grid.param;
    let width = w.width() as usize * STRIDE;
    let label = 6;

    let mut joins = BTreeSet::new();
    for &(a, b) in &curve.edges {
        let (na, nb) = (&curve.nodes[a], &curve.nodes[b]);
        let (lo, hi) = if (na.j, na.i) <= (nb.j, nb.i) { (na, nb) } else { (nb, na) };
        joins.insert(((lo.i, lo.j), (hi.i, hi.j)));
    }

    let mut out = String::new();
    let _ = writeln!(
        out,
        "grid {:?}  p={} k={} k2={} e={}  window i={}..{} j={}..{}",
        grid.kind, sp.p, sp.k, sp.k2, sp.e, w.i_min, w.i_max, w.j_min, w.j_max
    );
    for j in (w.j_min..=w.j_max).rev() {
        if j < w.j_max {
            // Connector row between j+1 (above) and j.
            let mut row = vec![' '; width];
            for &((ai, aj), (bi, bj)) in &joins {
                if aj != j || bj != j + 1 {
                    continue;
                }
                let col = |i: i64| (i - w.i_min) as usize * STRIDE + 1;
                let (ca, cb) = (col(ai), col(bi));
                match cb.cmp(&ca) {
                    std::cmp::Ordering::Equal => row[ca] = '│',
                    std::cmp::Ordering::Greater => row[ca + 2] = '╱',
                    std::cmp::Ordering::Less => row[ca - 2] = '╲',
                }
            }
            let line: String = row.into_iter().collect();
            let _ = writeln!(out, "{}", format!("{:>label$} {}", "", line).trim_end());
        }
        let mut line = String::new();
        for i in w.i_min..=w.i_max {
            line.push_str(&cell_text(grid.value(i, j)));
            if i < w.i_max {
                let joined = joins.contains(&((i, j), (i + 1, j)));
                line.push_str(if joined { "──" } else { "  " });
            }
        }
        let _ = writeln!(out, "{:>label$} {}", j, line.trim_end());
    }
    let mut axis = String::new();
    for i in w.i_min..=w.i_max {
        let _ = write!(axis, "{i:>2}  ");
    }
    let _ = writeln!(out, "{:>label$} {}", "i:", axis.trim_end());
    out
}

/// Minimal standalone SVG: dots and value labels for cells, line segments
/// for joins. Row `j` grows upwards.
pub fn render_svg(grid: &CoefficientGrid, curve: &NonZeroCurve) -> String {
    let w = grid.window;
    let s = 24i64;
    let (wpx, hpx) = ((w.width() + 1) * s, (w.height() + 1) * s);
    let x = |i: i64| (i - w.i_min + 1) * s;
    let y = |j: i64| (w.j_max - j + 1) * s;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{wpx}" height="{hpx}" font-family="monospace" font-size="10">"#
    );
    for &(a, b) in &curve.edges {
        let (na, nb) = (&curve.nodes[a], &curve.nodes[b]);
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="2"/>"#,
            x(na.i),
            y(na.j),
            x(nb.i),
            y(nb.j)
        );
    }
    for (i, j) in w.cells() {
        let v = grid.value(i, j);
        if v == 0 {
            let _ = writeln!(out, r#"<circle cx="{}" cy="{}" r="1" fill="gray"/>"#, x(i), y(j));
        } else {
            let colour = if v > 0 { "firebrick" } else { "steelblue" };
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}" fill="{colour}" text-anchor="middle" dy="-4">{v}</text>"#,
                x(i),
                y(j)
            );
            let _ = writeln!(out, r#"<circle cx="{}" cy="{}" r="3" fill="{colour}"/>"#, x(i), y(j));
        }
    }
    out.push_str("</svg>\n");
    out
}

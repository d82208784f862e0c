//! Structural checks on traced curves.
//!
//! A curve is infinite and periodic: translating by `(1, -k2)` (kind A) or
//! `(1, k)` (kind B) maps each region onto itself. Collapsing that translation
//! gives a finite quotient graph on the exponents of one region, whose edges
//! are `(y1, y2, di)`. The region holds a single curve exactly when the
//! quotient is one cycle through every exponent with total column shift
//! `+-1`. This closes the window-truncated pieces without guessing.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use serde::Serialize;

use super::trace::{trace, NonZeroCurve};
use super::{da_closed_form, CoefficientGrid, GridKind, LatticeError};
use crate::params::SurgeryParameter;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientCycle {
    pub vertices: usize,
    pub edges: usize,
    pub single_cycle: bool,
    pub winding: i64,
    /// Some edge leaves the region.
    pub leaks: bool,
}

impl QuotientCycle {
    pub fn traversable(&self) -> bool {
        self.single_cycle && self.winding.abs() == 1 && !self.leaks
    }
}

/// Quotient graph of region `r` seen from column `i0`.
pub fn quotient_cycle(curve: &NonZeroCurve, r: i64, i0: i64) -> QuotientCycle {
    let adj = curve.neighbours();
    let mut verts = BTreeSet::new();
    let mut edges = BTreeSet::new();
    let mut leaks = false;
    for (a, na) in curve.nodes.iter().enumerate() {
        if na.i != i0 || na.region != r {
            continue;
        }
        verts.insert(na.exponent);
        for &b in &adj[a] {
            let nb = &curve.nodes[b];
            if nb.region != r {
                leaks = true;
                continue;
            }
            let di = nb.i - i0;
            let key = match di.cmp(&0) {
                std::cmp::Ordering::Less => (nb.exponent, na.exponent, -di),
                std::cmp::Ordering::Greater => (na.exponent, nb.exponent, di),
                std::cmp::Ordering::Equal => {
                    (na.exponent.min(nb.exponent), na.exponent.max(nb.exponent), 0)
                }
            };
            edges.insert(key);
        }
    }
    let edges: Vec<(i64, i64, i64)> = edges.into_iter().collect();
    let mut incident: BTreeMap<i64, Vec<usize>> = verts.iter().map(|&v| (v, Vec::new())).collect();
    for (n, &(a, b, _)) in edges.iter().enumerate() {
        incident.entry(a).or_default().push(n);
        incident.entry(b).or_default().push(n);
    }
    let all_deg2 = incident.values().all(|e| e.len() == 2);
    let mut single_cycle = false;
    let mut winding = 0;
    if all_deg2 && !edges.is_empty() && edges.len() == incident.len() {
        let start = *incident.keys().next().unwrap();
        let mut used = vec![false; edges.len()];
        let mut cur = start;
        let mut steps = 0;
        while let Some(&n) = incident[&cur].iter().find(|&&n| !used[n]) {
            used[n] = true;
            let (a, b, di) = edges[n];
            if a == cur {
                winding += di;
                cur = b;
            } else {
                winding -= di;
                cur = a;
            }
            steps += 1;
            if cur == start {
                break;
            }
        }
        single_cycle = steps == edges.len() && cur == start;
    }
    QuotientCycle { vertices: incident.len(), edges: edges.len(), single_cycle, winding, leaks }
}

fn require_window(grid: &CoefficientGrid) -> Result<(), LatticeError> {
    let w = grid.window;
    if w.width() < 3 {
        return Err(LatticeError::WindowTooSmall(format!(
            "{} columns, need at least 3",
            w.width()
        )));
    }
    if grid.kind == GridKind::A && w.height() < 3 * grid.param.p {
        return Err(LatticeError::WindowTooSmall(format!(
            "{} rows, need at least 3p = {}",
            w.height(),
            3 * grid.param.p
        )));
    }
    if fully_visible(grid).is_empty() {
        return Err(LatticeError::WindowTooSmall(
            "no region copy lies strictly inside an interior column".into(),
        ));
    }
    Ok(())
}

/// `(region, column)` pairs whose column copy lies strictly inside the window.
fn fully_visible(grid: &CoefficientGrid) -> Vec<(i64, i64)> {
    let w = grid.window;
    let mut out = Vec::new();
    for i in (w.i_min + 1)..w.i_max {
        for r in grid.region_indices() {
            let (lo, hi) = grid.region_column(r, i);
            if lo > w.j_min && hi < w.j_max {
                out.push((r, i));
            }
        }
    }
    out
}

/// Every region holds a single curve: no interior endpoints or branches, and
/// the quotient of each fully visible region copy is one cycle with column
/// shift `+-1`. Grids that cannot be traced count as not traversable.
pub fn check_traversable(grid: &CoefficientGrid) -> Result<bool, LatticeError> {
    require_window(grid)?;
    let curve = match trace(grid) {
        Ok(c) => c,
        Err(LatticeError::NotFlat { .. } | LatticeError::ConflictingArrows { .. }) => {
            return Ok(false)
        }
        Err(e) => return Err(e),
    };
    if !curve.interior_endpoints().is_empty() || curve.components.iter().any(|c| !c.simple) {
        return Ok(false);
    }
    let want: BTreeSet<i64> = match grid.kind {
        GridKind::A => grid.poly().terms().map(|t| t.0).collect(),
        GridKind::B => grid.poly().terms().map(|t| t.0).collect(),
    };
    for (r, i) in fully_visible(grid) {
        let q = quotient_cycle(&curve, r, i);
        if !q.traversable() || q.vertices != want.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The set of arrows (cells with values) and joins is invariant under a
/// half-turn about some point of the half lattice. A half-turn reverses
/// arrows, so matching cells carry equal values.
pub fn check_point_symmetry(curve: &NonZeroCurve) -> bool {
    let w = curve.window;
    let mut cells: HashMap<(i64, i64), i64> = HashMap::new();
    for n in &curve.nodes {
        *cells.entry((n.i, n.j)).or_default() += n.value;
    }
    let mut joins: HashSet<((i64, i64), (i64, i64))> = HashSet::new();
    for &(a, b) in &curve.edges {
        let (pa, pb) = ((curve.nodes[a].i, curve.nodes[a].j), (curve.nodes[b].i, curve.nodes[b].j));
        joins.insert((pa.min(pb), pa.max(pb)));
    }
    if cells.is_empty() {
        return true;
    }
    let mid = (w.i_min + w.i_max, w.j_min + w.j_max);
    let reference = *cells
        .keys()
        .min_by_key(|&&(i, j)| ((2 * i - mid.0).abs() + (2 * j - mid.1).abs(), i, j))
        .unwrap();
    let v0 = cells[&reference];
    let mut candidates: Vec<(i64, i64)> =
        cells.iter().filter(|(_, &v)| v == v0).map(|(&c, _)| c).collect();
    candidates.sort_unstable();
    for cand in candidates {
        let s = (reference.0 + cand.0, reference.1 + cand.1);
        let image = |(i, j): (i64, i64)| (s.0 - i, s.1 - j);
        let mut checked = 0usize;
        let cells_ok = cells.iter().all(|(&c, &v)| {
            let (ii, jj) = image(c);
            if !w.contains(ii, jj) {
                return true;
            }
            checked += 1;
            cells.get(&(ii, jj)).copied().unwrap_or(0) == v
        });
        if !cells_ok || 2 * checked < cells.len() {
            continue;
        }
        let joins_ok = joins.iter().all(|&(a, b)| {
            let (ia, ib) = (image(a), image(b));
            if !w.contains(ia.0, ia.1) || !w.contains(ib.0, ib.1) {
                return true;
            }
            joins.contains(&(ia.min(ib), ia.max(ib)))
        });
        if joins_ok {
            return true;
        }
    }
    false
}

/// Torus criterion. `gamma'` is `gamma` moved by `(k, -1)`; modulo the region
/// translation `(1, -k2)` this is the vertical shift `(0, m p)`, which lands
/// in region `r - m`. Returns true when no node of a third region lies
/// strictly between the two curves in any column.
pub fn check_torus_strip(grid: &CoefficientGrid) -> Result<bool, LatticeError> {
    if grid.kind != GridKind::A {
        return Err(LatticeError::WrongKind(GridKind::A));
    }
    require_window(grid)?;
    let sp = grid.param;
    if sp.m == 0 {
        return Ok(true);
    }
    let curve = match trace(grid) {
        Ok(c) => c,
        Err(LatticeError::NotFlat { .. } | LatticeError::ConflictingArrows { .. }) => {
            return Ok(false)
        }
        Err(e) => return Err(e),
    };
    let w = grid.window;
    let ic = (w.i_min + w.i_max).div_euclid(2);
    let jc = (w.j_min + w.j_max).div_euclid(2);
    let r0 = grid
        .region_indices()
        .into_iter()
        .min_by_key(|&r| {
            let (lo, hi) = grid.region_column(r, ic);
            ((lo + hi) / 2 - jc).abs()
        })
        .expect("window meets a region");
    let shift = sp.m * sp.p;
    for i in w.i_min..=w.i_max {
        let js: Vec<i64> =
            curve.nodes.iter().filter(|n| n.i == i && n.region == r0).map(|n| n.j).collect();
        let (Some(&lo), Some(&hi)) = (js.iter().min(), js.iter().max()) else { continue };
        let (a, b) = if shift > 0 { (hi, lo + shift) } else { (hi + shift, lo) };
        let blocked = curve.nodes.iter().any(|n| {
            n.i == i && n.region != r0 && n.region != r0 - sp.m && a < n.j && n.j < b
        });
        if blocked {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Lengths of the zero runs between consecutive `(-1, +1)` pairs of the
/// closed form `dA` in column `i0`, over one period. Within a column, `-1`
/// at row `j` is always paired with `+1` at row `j + e`.
pub fn column_zero_runs(param: &SurgeryParameter, i0: i64) -> Vec<i64> {
    let p = param.p;
    let mut starts: Vec<i64> = (0..p)
        .filter(|&j| da_closed_form(param, i0 + j * param.k) == -1)
        .map(|j| if param.e > 0 { j } else { (j - 1).rem_euclid(p) })
        .collect();
    starts.sort_unstable();
    let n = starts.len();
    (0..n)
        .map(|t| {
            let next = if t + 1 < n { starts[t + 1] } else { starts[0] + p };
            next - starts[t] - 2
        })
        .collect()
}

/// Zero runs in a column take at most two consecutive lengths.
pub fn zero_runs_ok(param: &SurgeryParameter) -> bool {
    (0..param.p.min(4)).all(|i0| {
        let runs = column_zero_runs(param, i0);
        match (runs.iter().min(), runs.iter().max()) {
            (Some(lo), Some(hi)) => hi - lo <= 1 && *lo >= 0,
            _ => true,
        }
    })
}

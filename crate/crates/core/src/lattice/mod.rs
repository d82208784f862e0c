//! Lattice arrangements of the Alexander coefficients.
//!
//! Kind A places the folded type-A polynomial at `A_{i,j} = abar_{-j-k2(i+c)}`;
//! kind B places the unsymmetrized IST quotient at `B_{i,j} = b_{j-ik}`.
//! Nonzero entries carry horizontal arrows (right for +1, left for -1) and
//! are joined into curves; see [`trace`].

mod checks;
mod render;
mod trace;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::alexander::{ist_expansion, type_a_poly, AlexanderError, IstExpansion};
use crate::arith::{in_interval, lar, mul_mod, Interval};
use crate::laurent::{reduce_cyclic, LaurentPoly, PeriodicCoeffs};
use crate::params::{normalize, SurgeryParameter};

pub use checks::{
    check_point_symmetry, check_torus_strip, check_traversable, column_zero_runs, quotient_cycle,
    zero_runs_ok, QuotientCycle,
};
pub use render::{render_ascii, render_svg};
pub use trace::{trace, Arrow, Component, CurveNode, NonZeroCurve};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("window too small: {0}")]
    WindowTooSmall(String),
    #[error("value {value} at ({i},{j}) is not flat")]
    NotFlat { i: i64, j: i64, value: i64 },
    #[error("opposite arrows side by side at ({i},{j}) and ({},{j})", i + 1)]
    ConflictingArrows { i: i64, j: i64 },
    #[error("operation needs a grid of kind {0:?}")]
    WrongKind(GridKind),
    #[error(transparent)]
    Alexander(#[from] AlexanderError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GridKind {
    A,
    B,
}

/// Inclusive lattice window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    pub i_min: i64,
    pub i_max: i64,
    pub j_min: i64,
    pub j_max: i64,
}

impl Window {
    pub fn new(i_min: i64, i_max: i64, j_min: i64, j_max: i64) -> Self {
        assert!(i_min <= i_max && j_min <= j_max, "empty window");
        Window { i_min, i_max, j_min, j_max }
    }

    /// `i in [-3, 3]`, `j in [-2p, 2p]`.
    pub fn default_a(p: i64) -> Self {
        Window::new(-3, 3, -2 * p, 2 * p)
    }

    pub fn contains(&self, i: i64, j: i64) -> bool {
        (self.i_min..=self.i_max).contains(&i) && (self.j_min..=self.j_max).contains(&j)
    }

    pub fn is_interior(&self, i: i64, j: i64) -> bool {
        self.i_min < i && i < self.i_max && self.j_min < j && j < self.j_max
    }

    pub fn width(&self) -> i64 {
        self.i_max - self.i_min + 1
    }

    pub fn height(&self) -> i64 {
        self.j_max - self.j_min + 1
    }

    pub fn cells(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        (self.j_min..=self.j_max).flat_map(move |j| (self.i_min..=self.i_max).map(move |i| (i, j)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum GridSource {
    A { poly: LaurentPoly, folded: PeriodicCoeffs },
    B { expansion: IstExpansion },
}

/// Lattice values on a window. Values are cached at construction, so a grid
/// can be edited (for checker sanity tests) independently of its formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientGrid {
    pub kind: GridKind,
    pub param: SurgeryParameter,
    pub window: Window,
    values: Vec<i64>,
    source: GridSource,
}

impl CoefficientGrid {
    fn fill(kind: GridKind, param: SurgeryParameter, window: Window, source: GridSource) -> Self {
        let mut g = CoefficientGrid { kind, param, window, values: Vec::new(), source };
        g.values = window.cells().map(|(i, j)| g.formula_value(i, j)).collect();
        g
    }

    fn formula_value(&self, i: i64, j: i64) -> i64 {
        let x = self.position(i, j);
        match &self.source {
            GridSource::A { folded, .. } => folded.get(x),
            GridSource::B { expansion } => expansion.quotient.coeff(x),
        }
    }

    fn index(&self, i: i64, j: i64) -> Option<usize> {
        let w = &self.window;
        w.contains(i, j)
            .then(|| ((j - w.j_min) * w.width() + (i - w.i_min)) as usize)
    }

    /// Value at `(i, j)`; zero outside the window.
    pub fn value(&self, i: i64, j: i64) -> i64 {
        self.index(i, j).map_or(0, |n| self.values[n])
    }

    /// Copy with one cell overwritten.
    pub fn with_value(&self, i: i64, j: i64, v: i64) -> Self {
        let mut g = self.clone();
        let n = g.index(i, j).expect("cell outside window");
        g.values[n] = v;
        g
    }

    /// The exponent a cell reads: `-j - k2(i+c)` (A, a residue mod p) or
    /// `j - ik` (B, an exponent of the unsymmetrized quotient).
    pub fn position(&self, i: i64, j: i64) -> i64 {
        let sp = &self.param;
        match self.kind {
            GridKind::A => -j - sp.k2 * (i + sp.c),
            GridKind::B => j - i * sp.k,
        }
    }

    /// `X_{i,j} - X_{i+1,j}`.
    pub fn diff(&self, i: i64, j: i64) -> i64 {
        self.value(i, j) - self.value(i + 1, j)
    }

    /// Degree `d` of the polynomial laid out on the grid.
    pub fn degree(&self) -> i64 {
        match &self.source {
            GridSource::A { poly, .. } => poly.degree(),
            GridSource::B { expansion } => {
                let f = &expansion.quotient;
                (f.max_exp() - f.min_exp()) / 2
            }
        }
    }

    /// The polynomial whose coefficients fill the grid (symmetric for A,
    /// unsymmetrized quotient for B).
    pub fn poly(&self) -> &LaurentPoly {
        match &self.source {
            GridSource::A { poly, .. } => poly,
            GridSource::B { expansion } => &expansion.quotient,
        }
    }

    pub fn ist_expansion(&self) -> Option<&IstExpansion> {
        match &self.source {
            GridSource::B { expansion } => Some(expansion),
            GridSource::A { .. } => None,
        }
    }

    /// Kind A with `2g = p`: the folded middle coefficient is 2 and each
    /// such cell is shared by two neighbouring regions.
    pub fn is_double_case(&self) -> bool {
        self.kind == GridKind::A && 2 * self.degree() == self.param.p
    }

    /// Lift of a cell to `(exponent, region)` pairs with value; two entries
    /// for a shared cell in the `2g = p` case.
    pub fn lift(&self, i: i64, j: i64) -> Vec<(i64, i64, i64)> {
        let v = self.value(i, j);
        if v == 0 {
            return Vec::new();
        }
        let x = self.position(i, j);
        match self.kind {
            GridKind::B => vec![(x, 0, v)],
            GridKind::A => {
                let p = self.param.p;
                let y = lar(x, p);
                if self.is_double_case() && 2 * y == p && v == 2 {
                    vec![(y, (x - y) / p, 1), (-y, (x + y) / p, 1)]
                } else {
                    vec![(y, (x - y) / p, v)]
                }
            }
        }
    }

    /// j-range of the copy of region `r` in column `i` (A), or of the
    /// support in column `i` (B).
    pub fn region_column(&self, r: i64, i: i64) -> (i64, i64) {
        let d = self.degree();
        match self.kind {
            GridKind::A => {
                let sp = &self.param;
                let mid = -sp.k2 * (i + sp.c) - sp.p * r;
                (mid - d, mid + d)
            }
            GridKind::B => {
                let f = self.poly();
                (f.min_exp() + i * self.param.k, f.max_exp() + i * self.param.k)
            }
        }
    }

    /// Region indices whose column copies meet the window.
    pub fn region_indices(&self) -> Vec<i64> {
        match self.kind {
            GridKind::B => vec![0],
            GridKind::A => {
                let w = &self.window;
                let p = self.param.p;
                let mut out = BTreeSet::new();
                for i in w.i_min..=w.i_max {
                    let (lo0, hi0) = self.region_column(0, i);
                    // Copy r occupies [lo0 - pr, hi0 - pr].
                    let r_min = (lo0 - w.j_max).div_euclid(p);
                    let r_max = (hi0 - w.j_min).div_euclid(p) + 1;
                    for r in r_min..=r_max {
                        let (lo, hi) = self.region_column(r, i);
                        if hi >= w.j_min && lo <= w.j_max {
                            out.insert(r);
                        }
                    }
                }
                out.into_iter().collect()
            }
        }
    }

    pub fn region(&self, r: i64) -> NonZeroRegion {
        let w = &self.window;
        let mut cells = BTreeSet::new();
        for i in w.i_min..=w.i_max {
            let (lo, hi) = self.region_column(r, i);
            for j in lo.max(w.j_min)..=hi.min(w.j_max) {
                cells.insert((i, j));
            }
        }
        NonZeroRegion { kind: self.kind, index: r, cells }
    }

    pub fn regions(&self) -> Vec<NonZeroRegion> {
        self.region_indices().into_iter().map(|r| self.region(r)).collect()
    }
}

/// Union of the translated columns `N_l` of one region, clipped to a window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonZeroRegion {
    pub kind: GridKind,
    pub index: i64,
    pub cells: BTreeSet<(i64, i64)>,
}

impl NonZeroRegion {
    /// Connectivity of the union of closed unit squares centred on the
    /// cells; squares touching at a corner count as connected.
    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.cells.iter().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some((i, j)) = stack.pop() {
            for di in -1..=1 {
                for dj in -1..=1 {
                    let n = (i + di, j + dj);
                    if self.cells.contains(&n) && seen.insert(n) {
                        stack.push(n);
                    }
                }
            }
        }
        seen.len() == self.cells.len()
    }
}

pub fn a_grid(param: &SurgeryParameter, window: Window) -> Result<CoefficientGrid, LatticeError> {
    Ok(a_grid_from(param, type_a_poly(param)?, window))
}

/// Kind A grid laid out from a given symmetric polynomial instead of the
/// counting formula.
pub fn a_grid_from(param: &SurgeryParameter, poly: LaurentPoly, window: Window) -> CoefficientGrid {
    let folded = reduce_cyclic(&poly, param.p);
    CoefficientGrid::fill(GridKind::A, *param, window, GridSource::A { poly, folded })
}

/// Kind B grid for `K_{p,k}`; `k` is normalized first so that the grid's
/// translation `(1, k)` uses the small representative.
pub fn b_grid(p: i64, k: i64, window: Option<Window>) -> Result<CoefficientGrid, LatticeError> {
    let param = normalize(p, k).map_err(AlexanderError::from)?;
    let expansion = ist_expansion(p, param.k)?;
    let window = window.unwrap_or_else(|| default_b_window(&param, &expansion.quotient));
    Ok(CoefficientGrid::fill(GridKind::B, param, window, GridSource::B { expansion }))
}

/// Seven columns centred on the support of the quotient, tall enough that
/// every column holds a full copy with margin.
pub fn default_b_window(param: &SurgeryParameter, quotient: &LaurentPoly) -> Window {
    let center = (quotient.min_exp() + quotient.max_exp()) / 2;
    let d = (quotient.max_exp() - quotient.min_exp()) / 2;
    let h = 3 * param.k + d + 2;
    Window::new(-3, 3, center - h, center + h)
}

/// `A(x) = abar_{-k2(x+c)}`; the grid satisfies `A_{i,j} = A(i + jk)`.
pub fn a_function(param: &SurgeryParameter, folded: &PeriodicCoeffs, x: i64) -> i64 {
    folded.get(-mul_mod(param.k2, x + param.c, param.p))
}

/// Closed form of `dA(x) = A(x) - A(x+1)`: -1 when `lar(x q^-1, p)` lies in
/// `I_{|k2|}`, +1 when it lies in `I_{-|k2|}`, else 0.
pub fn da_closed_form(param: &SurgeryParameter, x: i64) -> i64 {
    let y = lar(mul_mod(x, param.q_inv(), param.p), param.p);
    let a = param.k2_abs();
    if in_interval(y, Interval::new(a)) {
        -1
    } else if in_interval(y, Interval::new(-a)) {
        1
    } else {
        0
    }
}

/// The same closed form with the roles of `k` and `|k2|` exchanged.
pub fn da_swapped_closed_form(param: &SurgeryParameter, x: i64) -> i64 {
    let p = param.p;
    let q_inv_swapped = (-(param.k * param.k)).rem_euclid(p);
    let y = lar(mul_mod(x, q_inv_swapped, p), p);
    if in_interval(y, Interval::new(param.k)) {
        -1
    } else if in_interval(y, Interval::new(-param.k)) {
        1
    } else {
        0
    }
}

/// `b_x - b_{x-k} = [x in E] - [x-1 in E]`, where `E` is the full exponent set
/// of the IST numerator (including the `i = 0` term).
pub fn db_closed_form(expansion: &IstExpansion, x: i64) -> i64 {
    let has = |y: i64| expansion.exponents.contains(&y) as i64;
    has(x) - has(x - 1)
}

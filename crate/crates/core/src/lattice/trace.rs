//! Joining arrows into curves.
//!
//! Every nonzero cell gets a horizontal arrow. Two rules join arrows:
//!
//! * horizontal: neighbours `(i,j)`, `(i+1,j)` with the same sign;
//! * corner: in the 2x2 block at `(i,j)`, when the row differences are
//!   `X_{i,j} - X_{i+1,j} = -tau` and `X_{i,j+1} - X_{i+1,j+1} = tau`, the
//!   nonzero cell of row `j` joins the nonzero cell of row `j+1`.
//!
//! `tau = e` for kind A and `tau = -1` for kind B. With the opposite sign the
//! joins branch; with these every node has degree two away from the window
//! edge.
//!
//! In the `2g = p` case each region is traced on its own layer, so a cell
//! holding 2 carries one arrow per neighbouring region.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{CoefficientGrid, GridKind, LatticeError, Window};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Arrow {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CurveNode {
    pub i: i64,
    pub j: i64,
    pub value: i64,
    /// Region index (always 0 for kind B).
    pub region: i64,
    /// Exponent of the polynomial read at this node.
    pub exponent: i64,
}

impl CurveNode {
    pub fn arrow(&self) -> Arrow {
        if self.value > 0 {
            Arrow::Right
        } else {
            Arrow::Left
        }
    }
}

/// One connected piece of the curve inside the window, listed in the
/// direction of travel when it is a simple path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub nodes: Vec<usize>,
    pub closed: bool,
    /// Path or cycle with every node of degree at most two.
    pub simple: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonZeroCurve {
    pub kind: GridKind,
    pub window: Window,
    pub tau: i64,
    pub nodes: Vec<CurveNode>,
    pub edges: Vec<(usize, usize)>,
    pub components: Vec<Component>,
}

impl NonZeroCurve {
    pub fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Degree-one nodes that are away from the window edge.
    pub fn interior_endpoints(&self) -> Vec<usize> {
        self.neighbours()
            .iter()
            .enumerate()
            .filter(|(n, adj)| {
                let node = &self.nodes[*n];
                adj.len() <= 1 && self.window.is_interior(node.i, node.j)
            })
            .map(|(n, _)| n)
            .collect()
    }

    /// Every component, read in travel order, moves in one j direction.
    pub fn components_monotone(&self) -> bool {
        self.components.iter().all(|c| {
            let js: Vec<i64> = c.nodes.iter().map(|&n| self.nodes[n].j).collect();
            js.windows(2).all(|w| w[0] <= w[1]) || js.windows(2).all(|w| w[0] >= w[1])
        })
    }

    /// Edges whose ends lie in different regions.
    pub fn cross_region_edges(&self) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| self.nodes[a].region != self.nodes[b].region)
            .count()
    }
}

/// Sign `tau` of the corner rule.
pub fn corner_sign(kind: GridKind, e: i64) -> i64 {
    match kind {
        GridKind::A => e,
        GridKind::B => -1,
    }
}

pub fn trace(grid: &CoefficientGrid) -> Result<NonZeroCurve, LatticeError> {
    let w = grid.window;
    let double = grid.is_double_case();
    for (i, j) in w.cells() {
        let v = grid.value(i, j);
        if v.abs() >= 2 && !(double && v == 2) {
            return Err(LatticeError::NotFlat { i, j, value: v });
        }
        let u = grid.value(i + 1, j);
        if i < w.i_max && v * u < 0 {
            return Err(LatticeError::ConflictingArrows { i, j });
        }
    }

    // Node key: (i, j, layer). Layer is the region in the double case and 0
    // otherwise, so the single-layer case joins across regions if the grid
    // ever asks for it.
    let mut nodes = Vec::new();
    let mut index: BTreeMap<(i64, i64, i64), usize> = BTreeMap::new();
    for (i, j) in w.cells() {
        for (exponent, region, value) in grid.lift(i, j) {
            if value.abs() >= 2 {
                return Err(LatticeError::NotFlat { i, j, value });
            }
            let layer = if double { region } else { 0 };
            index.insert((i, j, layer), nodes.len());
            nodes.push(CurveNode { i, j, value, region, exponent });
        }
    }
    let layers: BTreeSet<i64> = index.keys().map(|k| k.2).collect();

    let tau = corner_sign(grid.kind, grid.param.e);
    let mut edges = BTreeSet::new();
    for &layer in &layers {
        let val = |i: i64, j: i64| index.get(&(i, j, layer)).map_or(0, |&n| nodes[n].value);
        let id = |i: i64, j: i64| index[&(i, j, layer)];
        for j in w.j_min..=w.j_max {
            for i in w.i_min..w.i_max {
                let (a, b) = (val(i, j), val(i + 1, j));
                if a != 0 && a == b {
                    edges.insert((id(i, j), id(i + 1, j)));
                }
                if j == w.j_max {
                    continue;
                }
                let (c, d) = (val(i, j + 1), val(i + 1, j + 1));
                if a - b == -tau && c - d == tau {
                    let lo = if a != 0 { id(i, j) } else { id(i + 1, j) };
                    let hi = if c != 0 { id(i, j + 1) } else { id(i + 1, j + 1) };
                    edges.insert((lo.min(hi), lo.max(hi)));
                }
            }
        }
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    let components = components(&nodes, &edges, -tau);
    Ok(NonZeroCurve { kind: grid.kind, window: w, tau, nodes, edges, components })
}

/// Connected components; simple paths are ordered so that `j` moves in
/// direction `flow` (ties broken by the arrow of the first node).
fn components(nodes: &[CurveNode], edges: &[(usize, usize)], flow: i64) -> Vec<Component> {
    let mut adj = vec![Vec::new(); nodes.len()];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; nodes.len()];
    let mut out = Vec::new();
    for start in 0..nodes.len() {
        if seen[start] {
            continue;
        }
        let mut members = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < members.len() {
            for &n in &adj[members[k]] {
                if !seen[n] {
                    seen[n] = true;
                    members.push(n);
                }
            }
            k += 1;
        }
        let simple = members.iter().all(|&n| adj[n].len() <= 2);
        let n_edges: usize = members.iter().map(|&n| adj[n].len()).sum::<usize>() / 2;
        let closed = simple && n_edges == members.len() && members.len() > 2;
        if !simple {
            members.sort_unstable();
            out.push(Component { nodes: members, closed, simple });
            continue;
        }
        let first = members
            .iter()
            .copied()
            .find(|&n| adj[n].len() < 2)
            .unwrap_or(*members.iter().min().unwrap());
        let mut path = vec![first];
        let mut prev = usize::MAX;
        let mut cur = first;
        loop {
            let next = adj[cur].iter().copied().find(|&n| n != prev && n != first);
            match next {
                Some(n) if !path.contains(&n) => {
                    path.push(n);
                    prev = cur;
                    cur = n;
                }
                _ => break,
            }
        }
        if !closed && should_reverse(nodes, &path, flow) {
            path.reverse();
        }
        out.push(Component { nodes: path, closed, simple });
    }
    out
}

fn should_reverse(nodes: &[CurveNode], path: &[usize], flow: i64) -> bool {
    let (a, b) = (&nodes[path[0]], &nodes[*path.last().unwrap()]);
    let dj = (b.j - a.j) * flow;
    if dj != 0 {
        return dj < 0;
    }
    let di = b.i - a.i;
    di != 0 && (di > 0) != (a.value > 0)
}

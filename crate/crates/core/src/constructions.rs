//! Explicit distinguishing colorings of `mu_t(G)` and the case predictor for
//! its distinguishing number.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coloring::Coloring;
use crate::distinguishing::is_distinguishing;
use crate::error::{Error, Result};
use crate::graph::{Graph, StarShape};
use crate::mycielskian::{build_mycielskian, MycLayout};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseTag {
    K1T1,
    K1TGt1,
    K2T1,
    K2TGt1,
    /// `t * ell > dist(G)`, where `ell` counts isolated vertices.
    IsolateDominated,
    Generic,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::K1T1 => "K1_t1",
            CaseTag::K1TGt1 => "K1_tgt1",
            CaseTag::K2T1 => "K2_t1",
            CaseTag::K2TGt1 => "K2_tgt1",
            CaseTag::IsolateDominated => "ISOLATE_DOMINATED",
            CaseTag::Generic => "GENERIC",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PredictionKind {
    Exact,
    UpperBound,
}

impl PredictionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            PredictionKind::Exact => "exact",
            PredictionKind::UpperBound => "upper_bound",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DistPrediction {
    pub case: CaseTag,
    pub kind: PredictionKind,
    pub value: usize,
}

impl DistPrediction {
    /// Whether a measured distinguishing number is consistent with the prediction.
    pub fn admits(&self, measured: usize) -> bool {
        match self.kind {
            PredictionKind::Exact => measured == self.value,
            PredictionKind::UpperBound => measured <= self.value,
        }
    }
}

fn is_k1(g: &Graph) -> bool {
    g.order() == 1
}

fn is_k2(g: &Graph) -> bool {
    g.order() == 2 && g.edge_count() == 1
}

/// Predicted `dist(mu_t(g))` given `dist_g = dist(g)`.
pub fn predict_dist(g: &Graph, t: usize, dist_g: usize) -> Result<DistPrediction> {
    use CaseTag::*;
    use PredictionKind::*;
    if t == 0 {
        return Err(Error::InvalidT(t));
    }
    if g.order() == 0 {
        return Err(Error::EmptySource);
    }
    let (case, kind, value) = if is_k1(g) {
        if t == 1 {
            (K1T1, Exact, 2)
        } else {
            (K1TGt1, Exact, t)
        }
    } else if is_k2(g) {
        if t == 1 {
            (K2T1, Exact, 3)
        } else {
            (K2TGt1, Exact, 2)
        }
    } else {
        let ell = g.isolated_vertices().len();
        if t * ell > dist_g {
            (IsolateDominated, Exact, t * ell)
        } else {
            (Generic, UpperBound, dist_g)
        }
    };
    Ok(DistPrediction { case, kind, value })
}

fn check_t(t: usize) -> Result<()> {
    if t == 0 {
        Err(Error::InvalidT(t))
    } else {
        Ok(())
    }
}

fn check_len(g: &Graph, c: &Coloring) -> Result<()> {
    if c.len() != g.order() {
        return Err(Error::SizeMismatch {
            expected: g.order(),
            found: c.len(),
        });
    }
    Ok(())
}

/// Every shadow copies the color of its original; the root gets `w_color`.
fn copy_up(layout: &MycLayout, base: &Coloring, w_color: usize) -> Vec<usize> {
    let n = layout.source_order();
    let mut colors = vec![0; layout.order()];
    for s in 0..=layout.levels() {
        for i in 0..n {
            colors[layout.vertex(i, s)] = base.color(i);
        }
    }
    colors[layout.root()] = w_color;
    colors
}

/// Coloring of `mu_t(g)` with `t * ell` colors when `g` has `ell >= 1`
/// isolated vertices and `t * ell` exceeds the palette of `coloring_g`.
///
/// The isolated vertices of `mu_t(g)` get colors `1..=t*ell` in (level, index)
/// order and every other vertex copies its original.
pub fn isolate_case_coloring(g: &Graph, t: usize, coloring_g: &Coloring) -> Result<Coloring> {
    check_t(t)?;
    check_len(g, coloring_g)?;
    let isolates = g.isolated_vertices();
    let k = t * isolates.len();
    if isolates.is_empty() {
        return Err(Error::PreconditionViolated(
            "graph has no isolated vertices".into(),
        ));
    }
    if k <= coloring_g.palette_size() {
        return Err(Error::PreconditionViolated(format!(
            "t * ell = {k} does not exceed the {} colors of the given coloring",
            coloring_g.palette_size()
        )));
    }
    let (_, layout) = build_mycielskian(g, t)?;
    let mut colors = copy_up(&layout, coloring_g, 2);
    for (idx, v) in layout.isolated_twins(g).into_iter().enumerate() {
        colors[v] = idx + 1;
    }
    for &i in &isolates {
        colors[layout.vertex(i, t)] = colors[i];
    }
    // the first isolate has color 1, so 2 keeps the root apart from it
    colors[layout.root()] = 2;
    Coloring::new(colors, k)
}

/// `m`-coloring of `mu_t(K_{1,m})` on [`Graph::star`]'s labeling (center `m`).
pub fn star_case_coloring(m: usize, t: usize) -> Result<Coloring> {
    if m < 2 {
        return Err(Error::InvalidM(m));
    }
    star_coloring(&Graph::star(m), t)
}

/// Same coloring as [`star_case_coloring`] for a star with any labeling:
/// leaves in increasing id order take colors `1..=m` at every level, copies of
/// the center take color 2, the root takes color 1.
pub fn star_coloring(g: &Graph, t: usize) -> Result<Coloring> {
    check_t(t)?;
    let (m, center) = match g.classify_star() {
        StarShape::Star { m, center } => (m, center),
        StarShape::NotStar => {
            return Err(Error::PreconditionViolated("graph is not a star".into()))
        }
    };
    if m < 2 {
        return Err(Error::InvalidM(m));
    }
    let mut base = vec![2; g.order()];
    for (idx, leaf) in (0..g.order()).filter(|&v| v != center).enumerate() {
        base[leaf] = idx + 1;
    }
    let (_, layout) = build_mycielskian(g, t)?;
    Coloring::new(copy_up(&layout, &Coloring::new(base, m)?, 1), m)
}

/// Lifts a distinguishing coloring of `g` to `mu_t(g)` without new colors:
/// shadows copy their originals, except that copies of isolated vertices below
/// the top level take colors not yet used among the isolated vertices.
///
/// The result is distinguishing whenever the root is fixed by every
/// automorphism of `mu_t(g)`, which holds for all graphs except stars.
pub fn lift_coloring(
    g: &Graph,
    t: usize,
    coloring_g: &Coloring,
    w_color: usize,
) -> Result<Coloring> {
    check_t(t)?;
    check_len(g, coloring_g)?;
    if is_k1(g) || is_k2(g) {
        return Err(Error::PreconditionViolated(
            "source graph is K1 or K2".into(),
        ));
    }
    let k = coloring_g.palette_size();
    let isolates = g.isolated_vertices();
    if t * isolates.len() > k {
        return Err(Error::PreconditionViolated(format!(
            "t * ell = {} exceeds the {k} available colors",
            t * isolates.len()
        )));
    }
    if w_color == 0 || w_color > k {
        return Err(Error::PreconditionViolated(format!(
            "root color {w_color} outside 1..={k}"
        )));
    }
    if !is_distinguishing(g, coloring_g)? {
        return Err(Error::PreconditionViolated(
            "coloring of g is not distinguishing".into(),
        ));
    }
    let (_, layout) = build_mycielskian(g, t)?;
    let mut colors = copy_up(&layout, coloring_g, w_color);
    let twins = layout.isolated_twins(g);
    if twins.len() > k {
        return Err(Error::PaletteExhausted {
            needed: twins.len(),
            available: k,
        });
    }
    let mut used = vec![false; k + 1];
    for &i in &isolates {
        used[coloring_g.color(i)] = true;
    }
    let mut free = (1..=k).filter(|&c| !used[c]);
    for &v in &twins[isolates.len()..] {
        colors[v] = free.next().ok_or(Error::PaletteExhausted {
            needed: twins.len(),
            available: k,
        })?;
    }
    Coloring::new(colors, k)
}

/// Least `k` with `k^(t+1) >= n`, and the coloring of `mu_t(K_n)` that colors
/// `u_i^s` by digit `s` (least significant first) of `i` in base `k`.
pub fn kn_base_coloring(n: usize, t: usize) -> Result<(usize, Coloring)> {
    if n < 3 {
        return Err(Error::InvalidN(n));
    }
    check_t(t)?;
    let reaches = |k: usize| {
        let mut power: usize = 1;
        for _ in 0..=t {
            power = power.saturating_mul(k);
            if power >= n {
                return true;
            }
        }
        false
    };
    let k = (2..=n).find(|&k| reaches(k)).unwrap_or(n);
    let (_, layout) = build_mycielskian(&Graph::complete(n), t)?;
    let mut colors = vec![1; layout.order()];
    for i in 0..n {
        let mut rest = i;
        for s in 0..=t {
            colors[layout.vertex(i, s)] = rest % k + 1;
            rest /= k;
        }
    }
    Ok((k, Coloring::new(colors, k)?))
}

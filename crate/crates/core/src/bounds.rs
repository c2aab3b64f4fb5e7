//! Upper bounds on the bondage number and the best of them for a graph.

use serde::Serialize;

use crate::bondage::{degree_bound, hr_bound};
use crate::curvature::{improved_constant, SurfaceSpec};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `⌊(a + √x) / 2⌋` in integers.
fn half_floor(a: u64, x: u64) -> u64 {
    (a + x.isqrt()) / 2
}

/// `(Δ + h + 2, Δ + k + 1)`.
pub fn surface_bounds(delta_max: usize, h: u64, k: u64) -> (u64, u64) {
    let d = delta_max as u64;
    (d + h + 2, d + k + 1)
}

/// `min{8, Δ + 2}` for planar graphs.
pub fn planar_bound(delta_max: usize) -> u64 {
    8.min(delta_max as u64 + 2)
}

/// `Δ + 3` for graphs of orientable genus at most one.
pub fn toroidal_bound(delta_max: usize) -> u64 {
    delta_max as u64 + 3
}

/// Largest possible minimum degree of a graph on `S_h`, `h >= 1`.
pub fn sachs_delta_cap_orientable(h: u64) -> Result<u64> {
    if h == 0 {
        return Err(Error::OutOfRegime {
            what: "orientable minimum-degree cap (h >= 1)",
            genus: h,
        });
    }
    Ok(half_floor(5, 1 + 48 * h))
}

/// Largest possible minimum degree of a graph on `N_k`, `k >= 2`.
pub fn sachs_delta_cap_nonorientable(k: u64) -> Result<u64> {
    if k < 2 {
        return Err(Error::OutOfRegime {
            what: "non-orientable minimum-degree cap (k >= 2)",
            genus: k,
        });
    }
    Ok(half_floor(5, 1 + 24 * k))
}

/// The additive constant `c` in `b <= Δ + c` on `S_h`, `h >= 1`.
pub fn sachs_offset_orientable(h: u64) -> Result<u64> {
    if h == 0 {
        return Err(Error::OutOfRegime {
            what: "orientable degree-cap bound (h >= 1)",
            genus: h,
        });
    }
    Ok(half_floor(3, 1 + 48 * h))
}

/// The additive constant `c` in `b <= Δ + c` on `N_k`, `k >= 1`.
pub fn sachs_offset_nonorientable(k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::OutOfRegime {
            what: "non-orientable degree-cap bound (k >= 1)",
            genus: k,
        });
    }
    Ok(half_floor(3, 1 + 24 * k))
}

/// Minimum-degree caps and the bondage caps they imply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SachsBounds {
    pub delta_cap_orientable: Option<u64>,
    pub delta_cap_nonorientable: Option<u64>,
    pub b_cap_orientable: Option<u64>,
    pub b_cap_nonorientable: Option<u64>,
}

/// Degree caps for the given genera. Planar graphs and projective-planar
/// graphs have a vertex of degree at most 5, so `h = 0` and `k = 1` get that
/// δ-cap; `h = 0` has no b-cap and `k = 0` is not a surface.
pub fn sachs_bounds(delta_max: usize, h: Option<u64>, k: Option<u64>) -> Result<SachsBounds> {
    let d = delta_max as u64;
    let (delta_cap_orientable, b_cap_orientable) = match h {
        None => (None, None),
        Some(0) => (Some(5), None),
        Some(h) => (
            Some(sachs_delta_cap_orientable(h)?),
            Some(d + sachs_offset_orientable(h)?),
        ),
    };
    let (delta_cap_nonorientable, b_cap_nonorientable) = match k {
        None => (None, None),
        Some(1) => (Some(5), Some(d + sachs_offset_nonorientable(1)?)),
        Some(k) => (
            Some(sachs_delta_cap_nonorientable(k)?),
            Some(d + sachs_offset_nonorientable(k)?),
        ),
    };
    Ok(SachsBounds {
        delta_cap_orientable,
        delta_cap_nonorientable,
        b_cap_orientable,
        b_cap_nonorientable,
    })
}

/// Every applicable bound for one graph. Genus-dependent fields are `None`
/// when the genus is unknown or the bound's regime excludes it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundSuite {
    pub hr: u64,
    pub degree: u64,
    pub planar: Option<u64>,
    pub toroidal: Option<u64>,
    pub orientable_surface: Option<u64>,
    pub nonorientable_surface: Option<u64>,
    pub sachs_orientable: Option<u64>,
    pub sachs_nonorientable: Option<u64>,
    pub improved_orientable: Option<u64>,
    pub improved_nonorientable: Option<u64>,
    pub best: u64,
}

impl BoundSuite {
    /// Populated fields by name, `best` excluded.
    pub fn populated(&self) -> Vec<(&'static str, u64)> {
        let fields = [
            ("hr", Some(self.hr)),
            ("degree", Some(self.degree)),
            ("planar", self.planar),
            ("toroidal", self.toroidal),
            ("orientable_surface", self.orientable_surface),
            ("nonorientable_surface", self.nonorientable_surface),
            ("sachs_orientable", self.sachs_orientable),
            ("sachs_nonorientable", self.sachs_nonorientable),
            ("improved_orientable", self.improved_orientable),
            ("improved_nonorientable", self.improved_nonorientable),
        ];
        fields
            .into_iter()
            .filter_map(|(name, v)| v.map(|v| (name, v)))
            .collect()
    }

    /// Names of populated bounds that `b` exceeds.
    pub fn violations(&self, b: usize) -> Vec<&'static str> {
        self.populated()
            .into_iter()
            .filter(|&(_, v)| b as u64 > v)
            .map(|(name, _)| name)
            .collect()
    }
}

/// Evaluates every bound for `g` with orientable genus `h` and
/// non-orientable genus `k` where known.
pub fn bound_suite(g: &Graph, h: Option<u64>, k: Option<u64>) -> Result<BoundSuite> {
    let hr = hr_bound(g)?.value as u64;
    let degree = degree_bound(g)? as u64;
    let d = g.max_degree();
    let sachs = sachs_bounds(d, h, k.filter(|&k| k >= 1))?;
    let improved = |s: Result<SurfaceSpec>| s.ok().map(|s| d as u64 + improved_constant(s));
    let mut suite = BoundSuite {
        hr,
        degree,
        planar: h.filter(|&h| h == 0).map(|_| planar_bound(d)),
        toroidal: h.filter(|&h| h <= 1).map(|_| toroidal_bound(d)),
        orientable_surface: h.map(|h| surface_bounds(d, h, 1).0),
        nonorientable_surface: k.filter(|&k| k >= 1).map(|k| surface_bounds(d, 0, k).1),
        sachs_orientable: sachs.b_cap_orientable,
        sachs_nonorientable: sachs.b_cap_nonorientable,
        improved_orientable: h.and_then(|h| improved(Ok(SurfaceSpec::orientable(h)))),
        improved_nonorientable: k.and_then(|k| improved(SurfaceSpec::non_orientable(k))),
        best: 0,
    };
    suite.best = suite.populated().iter().map(|&(_, v)| v).min().unwrap();
    Ok(suite)
}

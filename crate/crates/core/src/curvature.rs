//! Edge curvature of embedded graphs, in exact rationals.
//!
//! Every edge `uv` of an embedded graph carries a vertex weight
//! `w = 1/d(u) + 1/d(v)` and a face weight `f = 1/m' + 1/m''`, where `m'`
//! and `m''` are the walk lengths of the faces on its two sides. Summing over
//! edges counts vertices and faces, so by Euler's formula the curvature
//!
//! ```text
//! w + f - 1 + t/|E|,   t = 2h - 2 (orientable)  or  k - 2 (non-orientable)
//! ```
//!
//! sums to exactly zero. If every edge of a graph with large bondage number
//! is forced to have negative curvature, the sum is negative and we have a
//! contradiction. The forcing is a three-way case split on the degrees at
//! the ends of an edge whose minimum-degree threshold is `s`:
//!
//! | case | degrees | faces | base value | edge floor |
//! |------|---------|-------|------------|------------|
//! | A | one end at `s` | both ≥ 4 | `2/s − 1/2` | `s(s+1)/2` |
//! | B | one end at `s+1` | ≥ 3 and ≥ 4 | `2/(s+1) − 5/12` | `(s² + 2(s+1))/2` |
//! | C | both ends ≥ `s+2` | both ≥ 3 | `2/(s+2) − 1/3` | `(s(s+1) + 2(s+2))/2` |
//!
//! The curvature of an edge in each case is at most `base + t/floor`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::embedding::{EmbeddingSummary, RotationSystem, SurfaceClass};
use crate::error::{Error, Result};
use crate::graph::Edge;

pub type Rational = BigRational;

/// `p / q` as an exact rational.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

fn int(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// Renders a rational as `p/q`, always with the denominator.
pub fn ratio_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn ser_ratio<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&ratio_string(r))
}

/// A surface: `S_h` or `N_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SurfaceSpec {
    pub class: SurfaceClass,
    pub genus: u64,
}

impl SurfaceSpec {
    pub fn orientable(h: u64) -> Self {
        SurfaceSpec {
            class: SurfaceClass::Orientable,
            genus: h,
        }
    }

    pub fn non_orientable(k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::OutOfRegime {
                what: "non-orientable surfaces",
                genus: 0,
            });
        }
        Ok(SurfaceSpec {
            class: SurfaceClass::NonOrientable,
            genus: k,
        })
    }

    /// The surface an embedding lies on.
    pub fn of(summary: &EmbeddingSummary) -> Self {
        SurfaceSpec {
            class: summary.class(),
            genus: summary.genus as u64,
        }
    }

    /// `2h - 2` or `k - 2`; in both cases the Euler genus minus two.
    pub fn genus_term(&self) -> i64 {
        self.euler_genus() as i64 - 2
    }

    pub fn euler_genus(&self) -> u64 {
        match self.class {
            SurfaceClass::Orientable => 2 * self.genus,
            SurfaceClass::NonOrientable => self.genus,
        }
    }
}

impl fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.class {
            SurfaceClass::Orientable => write!(f, "S_{}", self.genus),
            SurfaceClass::NonOrientable => write!(f, "N_{}", self.genus),
        }
    }
}

/// Weights and curvature of one edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeCurvature {
    pub edge: Edge,
    #[serde(serialize_with = "ser_ratio")]
    pub w: Rational,
    #[serde(serialize_with = "ser_ratio")]
    pub f: Rational,
    /// Walk lengths of the faces on the two sides.
    pub m1: usize,
    pub m2: usize,
    #[serde(serialize_with = "ser_ratio")]
    pub curvature: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurvatureReport {
    pub surface: SurfaceSpec,
    pub per_edge: Vec<EdgeCurvature>,
    #[serde(serialize_with = "ser_ratio")]
    pub sum_w: Rational,
    #[serde(serialize_with = "ser_ratio")]
    pub sum_f: Rational,
    #[serde(serialize_with = "ser_ratio")]
    pub sum_curvature: Rational,
}

/// Per-edge weights and curvature of an embedding that lies on `surface`.
pub fn curvature_table(rs: &RotationSystem, surface: SurfaceSpec) -> Result<CurvatureReport> {
    let g = rs.graph();
    let summary = rs.summary()?;
    let actual = SurfaceSpec::of(&summary);
    if actual != surface {
        return Err(Error::SurfaceMismatch {
            expected: surface.to_string(),
            actual: actual.to_string(),
        });
    }
    let m = g.size();
    if m == 0 {
        return Err(Error::NoEdges);
    }
    let faces = rs.trace_faces()?;
    let shift = ratio(surface.genus_term(), m as i64);
    let per_edge: Vec<EdgeCurvature> = faces
        .edges
        .iter()
        .map(|&e| {
            let (m1, m2) = faces.side_lengths(e).expect("edge of the traced graph");
            let w = ratio(1, g.degree(e.u) as i64) + ratio(1, g.degree(e.v) as i64);
            let f = ratio(1, m1 as i64) + ratio(1, m2 as i64);
            let curvature = &w + &f - Rational::one() + &shift;
            EdgeCurvature {
                edge: e,
                w,
                f,
                m1,
                m2,
                curvature,
            }
        })
        .collect();
    let sum = |pick: fn(&EdgeCurvature) -> &Rational| {
        per_edge
            .iter()
            .map(pick)
            .fold(Rational::zero(), |a, x| a + x)
    };
    Ok(CurvatureReport {
        surface,
        sum_w: sum(|e| &e.w),
        sum_f: sum(|e| &e.f),
        sum_curvature: sum(|e| &e.curvature),
        per_edge,
    })
}

/// Checks, exactly, that the vertex weights sum to |V|, the face weights to
/// |F|, every curvature matches its weights, and the curvatures sum to zero.
/// Sums are recomputed from the per-edge records.
pub fn check_euler_identities(report: &CurvatureReport, summary: &EmbeddingSummary) -> bool {
    if report.per_edge.len() != summary.edges || summary.edges == 0 {
        return false;
    }
    let shift = ratio(summary.euler_genus as i64 - 2, summary.edges as i64);
    let mut w = Rational::zero();
    let mut f = Rational::zero();
    let mut c = Rational::zero();
    for e in &report.per_edge {
        if e.curvature != &e.w + &e.f - Rational::one() + &shift {
            return false;
        }
        w += &e.w;
        f += &e.f;
        c += &e.curvature;
    }
    w == report.sum_w
        && f == report.sum_f
        && c == report.sum_curvature
        && w == int(summary.vertices as i64)
        && f == int(summary.faces as i64)
        && c.is_zero()
}

/// The three degree cases of the discharging argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Case {
    A,
    B,
    C,
}

impl Case {
    pub const ALL: [Case; 3] = [Case::A, Case::B, Case::C];
}

/// Curvature bound for one case at threshold `s` and genus term `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseBound {
    pub case: Case,
    pub s: u64,
    pub t: i64,
    #[serde(serialize_with = "ser_ratio")]
    pub edge_floor: Rational,
    #[serde(serialize_with = "ser_ratio")]
    pub value: Rational,
}

/// Upper bound on `w + f - 1` in each case.
pub fn case_base(case: Case, s: u64) -> Rational {
    let s = s as i64;
    match case {
        Case::A => ratio(2, s) - ratio(1, 2),
        Case::B => ratio(2, s + 1) - ratio(5, 12),
        Case::C => ratio(2, s + 2) - ratio(1, 3),
    }
}

/// Lower bound on |E| in each case.
pub fn case_edge_floor(case: Case, s: u64) -> Rational {
    let s = s as i64;
    match case {
        Case::A => ratio(s * (s + 1), 2),
        Case::B => ratio(s * s + 2 * (s + 1), 2),
        Case::C => ratio(s * (s + 1) + 2 * (s + 2), 2),
    }
}

pub fn case_bound(case: Case, s: u64, t: i64) -> Result<CaseBound> {
    if s < 3 {
        return Err(Error::InvalidThreshold(s));
    }
    let edge_floor = case_edge_floor(case, s);
    let value = case_base(case, s) + int(t) / &edge_floor;
    Ok(CaseBound {
        case,
        s,
        t,
        edge_floor,
        value,
    })
}

/// The closed forms of the three case bounds at the theorem thresholds
/// `s = h + 4`, `t = 2h - 2` (orientable, `h >= 1`) and `s = k + 3`,
/// `t = k - 2` (non-orientable, `k >= 2`), evaluated as written rather
/// than through [`case_bound`].
pub fn closed_form_case_values(surface: SurfaceSpec) -> Result<[Rational; 3]> {
    let g = surface.genus as i64;
    let r = |num: i64, den: i64| ratio(num, den);
    match surface.class {
        SurfaceClass::Orientable if g >= 1 => {
            let h = g;
            Ok([
                r(-8 + h * (3 - h), 2 * (h + 4) * (h + 5)),
                r(
                    -5 * h * h * h - 3 * h * h + 52 * h - 266,
                    12 * (h + 5) * (h * h + 10 * h + 26),
                ),
                r(
                    -h * h * h + h * h + 28 * h - 72,
                    3 * (h + 6) * (h * h + 11 * h + 32),
                ),
            ])
        }
        SurfaceClass::NonOrientable if g >= 2 => {
            let k = g;
            Ok([
                r(-4 + k * (1 - k), 2 * (k + 3) * (k + 4)),
                r(
                    -124 - 5 * k - 12 * k * k - 5 * k * k * k,
                    12 * (k + 4) * (k * k + 8 * k + 17),
                ),
                r(
                    -k * k * k - 2 * k * k + 5 * k - 38,
                    3 * (k + 5) * (k * k + 9 * k + 22),
                ),
            ])
        }
        SurfaceClass::Orientable => Err(Error::OutOfRegime {
            what: "orientable closed forms (h >= 1)",
            genus: surface.genus,
        }),
        SurfaceClass::NonOrientable => Err(Error::OutOfRegime {
            what: "non-orientable closed forms (k >= 2)",
            genus: surface.genus,
        }),
    }
}

/// True when no edge of a hypothetical counterexample can fall in `case`:
/// the curvature bound is negative, or, when the genus term is negative,
/// the base alone is at most zero.
pub fn case_excluded(case: Case, s: u64, t: i64) -> bool {
    let base = case_base(case, s);
    match t.signum() {
        1 => (base + int(t) / case_edge_floor(case, s)).is_negative(),
        0 => base.is_negative(),
        _ => !base.is_positive(),
    }
}

/// Smallest `c >= 1` such that all three cases are excluded at threshold
/// `s = c + 2`. Graphs 2-cell embeddable on the surface then satisfy
/// `b(G) <= Δ(G) + c`: a vertex of degree at most `c + 1` gives it directly
/// through the Hartnell–Rall bound, and otherwise every edge has negative
/// curvature.
pub fn improved_constant(surface: SurfaceSpec) -> u64 {
    let t = surface.genus_term();
    (1..)
        .find(|&c| Case::ALL.iter().all(|&case| case_excluded(case, c + 2, t)))
        .unwrap()
}

//! Corpus surveys: compute b(G) and both genera for each graph, then check
//! b(G) against every applicable bound.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::bondage::{bondage_number, hr_bound};
use crate::bounds::{bound_suite, sachs_bounds, BoundSuite};
use crate::domination::domination_number;
use crate::embedding::{min_genus, GenusBudget, SurfaceClass};
use crate::error::Error;
use crate::graph::Graph;

pub const CSV_HEADER: &str =
    "name,n,m,delta,Delta,gamma,bondage,hr,h,k,bound_orient,bound_nonorient,bound_planar,bound_best,ok";

/// A genus column: known, out of budget, or not computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenusCell {
    Known(u64),
    Budget,
    Skipped,
}

impl GenusCell {
    pub fn value(&self) -> Option<u64> {
        match self {
            GenusCell::Known(g) => Some(*g),
            _ => None,
        }
    }

    fn cell(&self) -> String {
        match self {
            GenusCell::Known(g) => g.to_string(),
            GenusCell::Budget => "budget".into(),
            GenusCell::Skipped => String::new(),
        }
    }
}

impl Serialize for GenusCell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            GenusCell::Known(g) => s.serialize_u64(*g),
            GenusCell::Budget => s.serialize_str("budget"),
            GenusCell::Skipped => s.serialize_none(),
        }
    }
}

/// One survey line. `reasons` explains any missing value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub delta_min: usize,
    pub delta_max: usize,
    pub gamma: usize,
    pub bondage: Option<usize>,
    pub hr: Option<usize>,
    pub h: GenusCell,
    pub k: GenusCell,
    pub bounds: Option<BoundSuite>,
    /// Bounds that b exceeds, plus a broken minimum-degree cap.
    pub violations: Vec<String>,
    pub reasons: Vec<String>,
    /// Conjectured bounds that b exceeds; informational only.
    pub annotations: Vec<String>,
    pub ok: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurveyOptions {
    pub budget: GenusBudget,
    pub bondage_cap: Option<usize>,
    /// Graphs with more edges get no bondage number.
    pub max_bondage_edges: usize,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions {
            budget: GenusBudget::default(),
            bondage_cap: None,
            max_bondage_edges: 40,
        }
    }
}

fn genus_cell(
    g: &Graph,
    class: SurfaceClass,
    budget: GenusBudget,
    reasons: &mut Vec<String>,
) -> GenusCell {
    match min_genus(g, class, budget) {
        Ok(r) => GenusCell::Known(r.genus as u64),
        Err(Error::BudgetExceeded { .. }) => {
            reasons.push(format!("budget: {class} genus"));
            GenusCell::Budget
        }
        Err(e) => {
            reasons.push(format!("genus: {e}"));
            GenusCell::Skipped
        }
    }
}

/// Evaluates one graph.
pub fn survey_row(name: &str, g: &Graph, opts: &SurveyOptions) -> SurveyRow {
    let stats = g.degree_stats();
    let mut row = SurveyRow {
        name: name.to_string(),
        n: g.order(),
        m: g.size(),
        delta_min: stats.min,
        delta_max: stats.max,
        gamma: domination_number(g).gamma,
        bondage: None,
        hr: None,
        h: GenusCell::Skipped,
        k: GenusCell::Skipped,
        bounds: None,
        violations: Vec::new(),
        reasons: Vec::new(),
        annotations: Vec::new(),
        ok: true,
    };
    let Ok(hr) = hr_bound(g) else {
        row.reasons.push("no_edges".into());
        return row;
    };
    row.hr = Some(hr.value);
    if g.is_connected() {
        row.h = genus_cell(g, SurfaceClass::Orientable, opts.budget, &mut row.reasons);
        row.k = genus_cell(
            g,
            SurfaceClass::NonOrientable,
            opts.budget,
            &mut row.reasons,
        );
    } else {
        row.reasons.push("disconnected: genus not computed".into());
    }
    if row.m > opts.max_bondage_edges {
        row.reasons.push(format!(
            "size_limit: more than {} edges",
            opts.max_bondage_edges
        ));
    } else {
        match bondage_number(g, opts.bondage_cap) {
            Ok(r) => row.bondage = Some(r.b),
            Err(e) => row.reasons.push(format!("bondage: {e}")),
        }
    }
    let h = row.h.value();
    let k = row.k.value();
    let suite = bound_suite(g, h, k).expect("graph has an edge");
    if let Some(b) = row.bondage {
        row.violations = suite.violations(b).into_iter().map(String::from).collect();
        if 2 * b > 3 * stats.max {
            row.annotations.push("b > 3Δ/2".into());
        }
        if h == Some(0) && b > stats.max + 1 {
            row.annotations.push("planar with b > Δ + 1".into());
        }
    }
    let caps = sachs_bounds(stats.max, h, k).expect("genera are in range");
    for (name, cap) in [
        ("sachs_delta_orientable", caps.delta_cap_orientable),
        ("sachs_delta_nonorientable", caps.delta_cap_nonorientable),
    ] {
        if cap.is_some_and(|c| stats.min as u64 > c) {
            row.violations.push(name.into());
        }
    }
    row.ok = row.violations.is_empty();
    row.bounds = Some(suite);
    row
}

/// Survey rows in input order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyReport {
    pub rows: Vec<SurveyRow>,
}

impl SurveyReport {
    /// 0 when every row is ok, 1 on any bound violation.
    pub fn exit_code(&self) -> i32 {
        if self.rows.iter().all(|r| r.ok) {
            0
        } else {
            1
        }
    }

    pub fn violations(&self) -> usize {
        self.rows.iter().filter(|r| !r.ok).count()
    }

    pub fn to_csv(&self) -> String {
        let opt = |x: Option<u64>| x.map_or(String::new(), |v| v.to_string());
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let b = r.bounds.as_ref();
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                r.name,
                r.n,
                r.m,
                r.delta_min,
                r.delta_max,
                r.gamma,
                opt(r.bondage.map(|x| x as u64)),
                opt(r.hr.map(|x| x as u64)),
                r.h.cell(),
                r.k.cell(),
                opt(b.and_then(|s| s.orientable_surface)),
                opt(b.and_then(|s| s.nonorientable_surface)),
                opt(b.and_then(|s| s.planar)),
                opt(b.map(|s| s.best)),
                r.ok
            )
            .unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.rows).unwrap() + "\n"
    }

    pub fn to_text(&self) -> String {
        let show = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
        let genus = |c: GenusCell| match c {
            GenusCell::Skipped => "-".to_string(),
            c => c.cell(),
        };
        let mut out = String::new();
        for r in &self.rows {
            write!(
                out,
                "{}: n={} m={} δ={} Δ={} γ={} b={} hr={} h={} k={} best={} {}",
                r.name,
                r.n,
                r.m,
                r.delta_min,
                r.delta_max,
                r.gamma,
                show(r.bondage),
                show(r.hr),
                genus(r.h),
                genus(r.k),
                show(r.bounds.as_ref().map(|s| s.best as usize)),
                if r.ok { "ok" } else { "VIOLATION" }
            )
            .unwrap();
            if !r.violations.is_empty() {
                write!(out, " [{}]", r.violations.join(", ")).unwrap();
            }
            if !r.reasons.is_empty() {
                write!(out, " ({})", r.reasons.join("; ")).unwrap();
            }
            out.push('\n');
        }
        writeln!(
            out,
            "{} graphs, {} violations",
            self.rows.len(),
            self.violations()
        )
        .unwrap();
        out
    }
}

/// Surveys named graphs in parallel; rows come back in input order.
pub fn run_survey(graphs: &[(String, Graph)], opts: &SurveyOptions) -> SurveyReport {
    SurveyReport {
        rows: graphs
            .par_iter()
            .map(|(name, g)| survey_row(name, g, opts))
            .collect(),
    }
}

//! Corpus sweep: for every graph `G` and level count `t`, compare the
//! predicted distinguishing number of `mu_t(G)` with a measured or certified
//! value, and classify the orbit of the root.

use std::io;

use rayon::prelude::*;
use serde::Serialize;

use mycdist_core::automorphism::group_summary;
use mycdist_core::constructions::{
    isolate_case_coloring, lift_coloring, predict_dist, star_coloring, CaseTag,
};
use mycdist_core::distinguishing::{
    distinguishing_number_with, is_distinguishing, twin_lower_bound, DistConfig,
};
use mycdist_core::graph6::parse_graph6;
use mycdist_core::mycielskian::{build_mycielskian, MycLayout};
use mycdist_core::{Coloring, DistPrediction, Error, Graph, PredictionKind, StarShape};

use crate::input::graph6_records;

pub const CSV_HEADER: &str =
    "graph6,n,ell,dist_g,t,case,predicted_kind,predicted_value,measured,method,root_orbit,pass";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub t_values: Vec<usize>,
    pub max_n: usize,
    pub budget: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            t_values: vec![1, 2],
            max_n: 6,
            budget: 100_000_000,
        }
    }
}

/// How the value in `measured` was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Exact search on `mu_t(G)`.
    Search,
    /// Twin lower bound met by a constructed coloring: exact.
    Bounds,
    /// Only a constructed coloring; `measured` is empty, the bound was checked.
    Construction,
    /// Search exceeded its budget and no certificate applies.
    BudgetExceeded,
    /// The record could not be parsed.
    Malformed,
    /// The graph is larger than the configured maximum order.
    Skipped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootOrbit {
    /// Every automorphism fixes the root.
    Fixed,
    /// The root and the top copy of the star center.
    Pair,
    /// The whole vertex set.
    All,
    Other,
}

/// One row of the report. Columns match [`CSV_HEADER`]; fields that do not
/// apply to a record are empty in CSV and `null` in JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub graph6: String,
    pub n: Option<usize>,
    pub ell: Option<usize>,
    pub dist_g: Option<usize>,
    pub t: usize,
    pub case: Option<&'static str>,
    pub predicted_kind: Option<&'static str>,
    pub predicted_value: Option<usize>,
    pub measured: Option<usize>,
    pub method: Method,
    pub root_orbit: Option<RootOrbit>,
    /// `None` when the record was not evaluated or could not be decided.
    pub pass: Option<bool>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub records: usize,
    pub passed: usize,
    pub failed: usize,
    pub undecided: usize,
    pub malformed: usize,
    pub skipped: usize,
    pub certified_by_bounds: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub summary: Summary,
    pub records: Vec<Record>,
}

impl VerifyReport {
    pub fn violations(&self) -> usize {
        self.summary.failed
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn write_csv<W: io::Write>(&self, out: W) -> csv::Result<()> {
        let mut writer = csv::Writer::from_writer(out);
        for record in &self.records {
            writer.serialize(record)?;
        }
        writer.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)
            .expect("writing to memory cannot fail");
        String::from_utf8(buf).expect("csv output is utf-8")
    }
}

/// Runs the sweep over every record of a graph6 corpus, on a pool of `jobs`
/// worker threads. Output order follows the input regardless of `jobs`.
pub fn verify_corpus(text: &str, config: &VerifyConfig, jobs: usize) -> VerifyReport {
    let tasks: Vec<(&str, usize)> = graph6_records(text)
        .flat_map(|line| config.t_values.iter().map(move |&t| (line, t)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let records: Vec<Record> = pool.install(|| {
        tasks
            .par_iter()
            .map(|&(line, t)| verify_line(line, t, config))
            .collect()
    });
    VerifyReport {
        config: config.clone(),
        summary: summarize(&records),
        records,
    }
}

fn summarize(records: &[Record]) -> Summary {
    let mut s = Summary {
        records: records.len(),
        ..Summary::default()
    };
    for r in records {
        match r.method {
            Method::Malformed => s.malformed += 1,
            Method::Skipped => s.skipped += 1,
            _ => match r.pass {
                Some(true) => s.passed += 1,
                Some(false) => s.failed += 1,
                None => s.undecided += 1,
            },
        }
        if r.method == Method::Bounds {
            s.certified_by_bounds += 1;
        }
    }
    s
}

fn blank(graph6: &str, t: usize, method: Method) -> Record {
    Record {
        graph6: graph6.to_owned(),
        n: None,
        ell: None,
        dist_g: None,
        t,
        case: None,
        predicted_kind: None,
        predicted_value: None,
        measured: None,
        method,
        root_orbit: None,
        pass: None,
    }
}

pub fn verify_line(line: &str, t: usize, config: &VerifyConfig) -> Record {
    let g = match parse_graph6(line.as_bytes()) {
        Ok(g) => g,
        Err(_) => return blank(line, t, Method::Malformed),
    };
    let mut record = blank(line, t, Method::Skipped);
    record.n = Some(g.order());
    record.ell = Some(g.isolated_vertices().len());
    if g.order() > config.max_n {
        return record;
    }
    verify_graph(&g, t, config, record)
}

fn verify_graph(g: &Graph, t: usize, config: &VerifyConfig, mut record: Record) -> Record {
    let dist_config = DistConfig {
        budget: config.budget,
        ..DistConfig::default()
    };
    let base = match distinguishing_number_with(g, &dist_config) {
        Ok(r) => r,
        Err(_) => {
            record.method = Method::BudgetExceeded;
            return record;
        }
    };
    record.dist_g = Some(base.value);
    let prediction = match predict_dist(g, t, base.value) {
        Ok(p) => p,
        Err(_) => {
            record.method = Method::Skipped;
            return record;
        }
    };
    record.case = Some(prediction.case.as_str());
    record.predicted_kind = Some(prediction.kind.as_str());
    record.predicted_value = Some(prediction.value);

    let (h, layout) = build_mycielskian(g, t).expect("order and t already checked");
    let orbit = classify_root(&h, &layout, g);
    record.root_orbit = orbit;
    let orbit_ok = orbit.is_some_and(|o| root_orbit_expected(g, o));

    let outcome = match distinguishing_number_with(&h, &dist_config) {
        Ok(r) => Some((r.value, Method::Search)),
        Err(Error::SearchBudgetExceeded { .. }) => None,
        Err(_) => None,
    };
    let (measured, method, value_ok) = match outcome {
        Some((value, method)) => (Some(value), method, Some(prediction.admits(value))),
        None => certify(g, &h, t, &base.certificate, &prediction),
    };
    record.measured = measured;
    record.method = method;
    record.pass = value_ok.map(|ok| ok && orbit_ok);
    record
}

/// Fallback when the search on `mu_t(G)` runs out of budget: a constructed
/// coloring bounds the value from above, the largest twin class from below.
fn certify(
    g: &Graph,
    h: &Graph,
    t: usize,
    coloring_g: &Coloring,
    prediction: &DistPrediction,
) -> (Option<usize>, Method, Option<bool>) {
    let constructed = match prediction.case {
        CaseTag::IsolateDominated => isolate_case_coloring(g, t, coloring_g).ok(),
        CaseTag::Generic => match g.classify_star() {
            StarShape::Star { m, .. } if m >= 2 => star_coloring(g, t).ok(),
            _ => lift_coloring(g, t, coloring_g, 1).ok(),
        },
        _ => None,
    };
    let Some(c) = constructed.filter(|c| is_distinguishing(h, c).unwrap_or(false)) else {
        return (None, Method::BudgetExceeded, None);
    };
    let upper = c.distinct_colors();
    let lower = twin_lower_bound(h);
    if lower == upper {
        (Some(upper), Method::Bounds, Some(prediction.admits(upper)))
    } else if prediction.kind == PredictionKind::UpperBound {
        (None, Method::Construction, Some(upper <= prediction.value))
    } else {
        (None, Method::BudgetExceeded, None)
    }
}

fn classify_root(h: &Graph, layout: &MycLayout, g: &Graph) -> Option<RootOrbit> {
    let summary = group_summary(h, None).ok()?;
    let w = layout.root();
    let orbit = summary.orbit_of(w)?;
    let top_center = match g.classify_star() {
        StarShape::Star { center, .. } => Some(layout.vertex(center, layout.levels())),
        StarShape::NotStar => None,
    };
    Some(if orbit == [w] {
        RootOrbit::Fixed
    } else if orbit.len() == h.order() {
        RootOrbit::All
    } else if orbit.len() == 2 && top_center.is_some_and(|c| orbit.contains(&c)) {
        RootOrbit::Pair
    } else {
        RootOrbit::Other
    })
}

/// The root is fixed unless `G` is a star (including `K_1`), where it may
/// swap with the top copy of the center, or `G = K_2`, where `mu_t(G)` is a
/// cycle.
fn root_orbit_expected(g: &Graph, orbit: RootOrbit) -> bool {
    if g.order() == 2 && g.edge_count() == 1 {
        return orbit == RootOrbit::All;
    }
    match g.classify_star() {
        StarShape::Star { .. } => matches!(orbit, RootOrbit::Fixed | RootOrbit::Pair),
        StarShape::NotStar => orbit == RootOrbit::Fixed,
    }
}

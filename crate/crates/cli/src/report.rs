use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use twinless_core::graph::compare_labels;
use twinless_core::{ArcId, Digraph};

/// Result of one analysis, with every vertex given by its original label.
///
/// Sections that do not apply are `None` and left out of the JSON entirely.
/// `elapsed_ms` is the only field that varies between identical runs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub m: usize,
    pub analysis: String,
    pub algorithm: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strong_bridges: Option<Vec<[String; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twinless_bridges: Option<Vec<[String; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b_s: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b_t: Option<usize>,
    pub elapsed_ms: f64,
}

impl AnalysisReport {
    pub fn new(g: &Digraph, analysis: &str, algorithm: &str) -> Self {
        Self {
            n: g.n(),
            m: g.m(),
            analysis: analysis.to_owned(),
            algorithm: algorithm.to_owned(),
            classes: None,
            blocks: None,
            strong_bridges: None,
            twinless_bridges: None,
            b_s: None,
            b_t: None,
            elapsed_ms: 0.0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "analysis: {}", self.analysis);
        let _ = writeln!(out, "algorithm: {}", self.algorithm);
        let _ = writeln!(out, "n: {}", self.n);
        let _ = writeln!(out, "m: {}", self.m);
        if let Some(b) = self.b_s {
            let _ = writeln!(out, "b_s: {b}");
        }
        if let Some(b) = self.b_t {
            let _ = writeln!(out, "b_t: {b}");
        }
        for (name, sets) in [("classes", &self.classes), ("blocks", &self.blocks)] {
            if let Some(sets) = sets {
                let _ = writeln!(out, "{name}: {}", sets.len());
                for s in sets {
                    let _ = writeln!(out, "  {}", s.join(" "));
                }
            }
        }
        for (name, arcs) in [
            ("strong_bridges", &self.strong_bridges),
            ("twinless_bridges", &self.twinless_bridges),
        ] {
            if let Some(arcs) = arcs {
                let _ = writeln!(out, "{name}: {}", arcs.len());
                for [s, t] in arcs {
                    let _ = writeln!(out, "  {s} -> {t}");
                }
            }
        }
        out
    }
}

/// Arcs as label pairs, sorted by source label then target label.
pub fn labeled_arcs(g: &Digraph, arcs: &[ArcId]) -> Vec<[String; 2]> {
    let mut out: Vec<[String; 2]> = arcs
        .iter()
        .map(|&a| {
            let (s, t) = g.arc_labels(a);
            [s.to_owned(), t.to_owned()]
        })
        .collect();
    out.sort_by(|x, y| compare_labels(&x[0], &y[0]).then_with(|| compare_labels(&x[1], &y[1])));
    out
}

/// Orders label sets by their first label; each set must already be sorted.
pub fn sort_sets(sets: &mut [Vec<String>]) {
    sets.sort_by(|x, y| compare_labels(&x[0], &y[0]));
}

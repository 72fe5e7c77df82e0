use serde::Serialize;
use shapecalc::{DerivativeReport, TheoremReport};

use crate::error::{EXIT_FAIL, EXIT_PASS};

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Entry {
    Theorem {
        index: usize,
        seed: Option<u64>,
        report: TheoremReport,
    },
    Derivative {
        index: usize,
        seed: Option<u64>,
        /// Larger of the boundary/volume and boundary/finite-difference gaps.
        residual: f64,
        passed: bool,
        report: DerivativeReport,
    },
}

impl Entry {
    pub fn theorem(index: usize, seed: Option<u64>, report: TheoremReport) -> Self {
        Entry::Theorem {
            index,
            seed,
            report,
        }
    }

    pub fn derivative(index: usize, seed: Option<u64>, report: DerivativeReport) -> Self {
        Entry::Derivative {
            index,
            seed,
            residual: report.max_residual(),
            passed: report.passed(),
            report,
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            Entry::Theorem { seed, .. } | Entry::Derivative { seed, .. } => *seed,
        }
    }

    pub fn residual(&self) -> f64 {
        match self {
            Entry::Theorem { report, .. } => report.residual,
            Entry::Derivative { residual, .. } => *residual,
        }
    }

    pub fn passed(&self) -> bool {
        match self {
            Entry::Theorem { report, .. } => report.passed,
            Entry::Derivative { passed, .. } => *passed,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Entry::Theorem { report, .. } => report.theorem.as_str(),
            Entry::Derivative { .. } => "hadamard",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Aggregate {
    pub count: usize,
    pub passed: usize,
    pub max_abs_residual: f64,
    pub wall_time_s: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub tool: String,
    pub version: String,
    pub command: Vec<String>,
    pub seeds: Vec<u64>,
    pub entries: Vec<Entry>,
    pub aggregate: Aggregate,
}

impl RunReport {
    pub fn new(command: Vec<String>, entries: Vec<Entry>, wall_time_s: f64) -> Self {
        let aggregate = Aggregate {
            count: entries.len(),
            passed: entries.iter().filter(|e| e.passed()).count(),
            max_abs_residual: entries
                .iter()
                .map(|e| e.residual().abs())
                .fold(0.0, f64::max),
            wall_time_s,
        };
        Self {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command,
            seeds: entries.iter().filter_map(Entry::seed).collect(),
            entries,
            aggregate,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.aggregate.passed == self.aggregate.count
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            EXIT_PASS
        } else {
            EXIT_FAIL
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    /// One row per instance: `theorem,seed,residual,passed`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["theorem", "seed", "residual", "passed"])
            .expect("in-memory write");
        for e in &self.entries {
            let seed = e.seed().map(|s| s.to_string()).unwrap_or_default();
            w.write_record([
                e.label().to_string(),
                seed,
                serde_json::to_string(&e.residual()).expect("finite residual"),
                e.passed().to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
    }
}

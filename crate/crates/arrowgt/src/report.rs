//! Structured pass/fail reports for verification sweeps.
//!
//! A [`Report`] collects one [`CheckRow`] per comparison: the check tag,
//! the parameter point (as JSON), and the exact expected/got values as
//! strings. Reports serialize to JSON as
//! `{header: {command, seed, version}, rows: [...], summary: {total, failed}}`
//! or render as aligned text; every value is exact — rows never carry
//! rounded numbers.

use crate::exactnum::Rational;
use serde::Serialize;
use serde_json::Value;

/// Provenance of a report: how it was produced and with which seed.
#[derive(Clone, Debug, Serialize)]
pub struct Header {
    /// The command or sweep name that produced the report.
    pub command: String,
    /// Seed of the random generator used for sampled parameters.
    pub seed: u64,
    /// Library version.
    pub version: String,
}

/// One exact comparison.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    /// Tag of the statement this row certifies (e.g. `"thm:1"`).
    pub tag: String,
    /// Parameter point of the comparison.
    pub params: Value,
    /// Expected value, rendered exactly.
    pub expected: String,
    /// Computed value, rendered exactly.
    pub got: String,
    /// Whether expected and got agree.
    pub pass: bool,
}

/// Row counts for the whole report.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Summary {
    /// Number of rows.
    pub total: usize,
    /// Number of failing rows.
    pub failed: usize,
}

/// A full verification report: header plus accumulated rows.
#[derive(Clone, Debug)]
pub struct Report {
    /// Report provenance.
    pub header: Header,
    /// All comparisons, in insertion order.
    pub rows: Vec<CheckRow>,
}

impl Report {
    /// Starts an empty report for `command` with the given `seed`.
    pub fn new(command: impl Into<String>, seed: u64) -> Report {
        Report {
            header: Header {
                command: command.into(),
                seed,
                version: env!("CARGO_PKG_VERSION").to_string(),
            },
            rows: Vec::new(),
        }
    }

    /// Records an exact rational comparison; returns whether it passed.
    pub fn check(
        &mut self,
        tag: impl Into<String>,
        params: Value,
        expected: &Rational,
        got: &Rational,
    ) -> bool {
        let pass = expected == got;
        self.rows.push(CheckRow {
            tag: tag.into(),
            params,
            expected: expected.to_string(),
            got: got.to_string(),
            pass,
        });
        pass
    }

    /// Records a pre-judged comparison with free-form value strings
    /// (boolean checks, skipped points, structured sub-reports).
    pub fn check_str(
        &mut self,
        tag: impl Into<String>,
        params: Value,
        expected: impl Into<String>,
        got: impl Into<String>,
        pass: bool,
    ) {
        self.rows.push(CheckRow {
            tag: tag.into(),
            params,
            expected: expected.into(),
            got: got.into(),
            pass,
        });
    }

    /// True when every row passed.
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    /// Row counts.
    pub fn summary(&self) -> Summary {
        Summary {
            total: self.rows.len(),
            failed: self.rows.iter().filter(|r| !r.pass).count(),
        }
    }

    /// Renders the report as pretty-printed JSON.
    pub fn to_json(&self) -> String {
        let value = serde_json::json!({
            "header": self.header,
            "rows": self.rows,
            "summary": self.summary(),
        });
        serde_json::to_string_pretty(&value).expect("report serialization cannot fail")
    }

    /// Renders the report as aligned, human-readable text.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "# {} (seed {}, v{})\n",
            self.header.command, self.header.seed, self.header.version
        ));
        for row in &self.rows {
            let params = serde_json::to_string(&row.params).expect("params are valid JSON");
            out.push_str(&format!(
                "[{}] {:<12} {} expected {} got {}\n",
                if row.pass { "PASS" } else { "FAIL" },
                row.tag,
                params,
                row.expected,
                row.got,
            ));
        }
        let s = self.summary();
        out.push_str(&format!("{} checks, {} failed\n", s.total, s.failed));
        out
    }
}

//! Check records and the serialized verification report.
//!
//! The taxonomy is two-valued: *asserted* checks may fail a run, *measured*
//! checks record a deviation (a printed-formula inconsistency, a truncation
//! artifact) without ever failing, and always carry notes.

use std::collections::BTreeMap;

use num_complex::Complex64;

/// Canonical 17-significant-digit rendering used for every scalar that
/// reaches a report or the command line. Byte-stable across runs.
pub fn fmt17(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x }; // normalize -0.0
    format!("{x:.16e}")
}

/// Complex scalars render as `re` when purely real, else `re+imi`.
pub fn fmt17_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        fmt17(z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", fmt17(z.re), fmt17(-z.im))
    } else {
        format!("{}+{}i", fmt17(z.re), fmt17(z.im))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    /// May fail the run when the tolerance is violated.
    Asserted,
    /// Never fails; records a measured discrepancy with mandatory notes.
    Measured,
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    /// Full path `suite/check-name`; the canonical report order sorts on it.
    pub name: String,
    pub inputs: BTreeMap<String, String>,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub kind: CheckKind,
    pub notes: String,
}

impl CheckResult {
    pub fn asserted(
        suite: &str,
        name: &str,
        lhs: Complex64,
        rhs: Complex64,
        tolerance: f64,
    ) -> Self {
        let abs_err = (lhs - rhs).norm();
        let scale = lhs.norm().max(rhs.norm());
        let rel_err = if scale > 0.0 { abs_err / scale } else { 0.0 };
        Self {
            name: format!("{suite}/{name}"),
            inputs: BTreeMap::new(),
            lhs,
            rhs,
            abs_err,
            rel_err,
            tolerance,
            pass: abs_err <= tolerance || rel_err <= tolerance,
            kind: CheckKind::Asserted,
            notes: String::new(),
        }
    }

    /// A measured entry: both sides recorded, never failing, notes mandatory.
    pub fn measured(suite: &str, name: &str, lhs: Complex64, rhs: Complex64, notes: &str) -> Self {
        assert!(!notes.is_empty(), "measured checks must carry notes");
        let abs_err = (lhs - rhs).norm();
        let scale = lhs.norm().max(rhs.norm());
        let rel_err = if scale > 0.0 { abs_err / scale } else { 0.0 };
        Self {
            name: format!("{suite}/{name}"),
            inputs: BTreeMap::new(),
            lhs,
            rhs,
            abs_err,
            rel_err,
            tolerance: f64::INFINITY,
            pass: true,
            kind: CheckKind::Measured,
            notes: format!("measured: {notes}"),
        }
    }

    pub fn with_input(mut self, key: &str, value: String) -> Self {
        self.inputs.insert(key.to_string(), value);
        self
    }

    pub fn with_note(mut self, note: &str) -> Self {
        if self.notes.is_empty() {
            self.notes = note.to_string();
        } else {
            self.notes.push_str("; ");
            self.notes.push_str(note);
        }
        self
    }

    fn to_json(&self) -> serde_json::Value {
        let mut inputs = serde_json::Map::new();
        for (k, v) in &self.inputs {
            inputs.insert(k.clone(), serde_json::Value::String(v.clone()));
        }
        let mut obj = serde_json::Map::new();
        obj.insert("name".into(), self.name.clone().into());
        obj.insert("inputs".into(), serde_json::Value::Object(inputs));
        obj.insert("lhs".into(), fmt17_complex(self.lhs).into());
        obj.insert("rhs".into(), fmt17_complex(self.rhs).into());
        obj.insert("abs_err".into(), fmt17(self.abs_err).into());
        obj.insert("rel_err".into(), fmt17(self.rel_err).into());
        obj.insert("tolerance".into(), fmt17(self.tolerance).into());
        obj.insert("pass".into(), self.pass.into());
        obj.insert("notes".into(), self.notes.clone().into());
        serde_json::Value::Object(obj)
    }
}

/// The master-function configuration settled by calibration, plus its residual.
#[derive(Debug, Clone, Copy)]
pub struct CalibrationRecord {
    pub alpha0: f64,
    pub phase_sign: f64,
    pub a_prefactor: f64,
    pub residual: f64,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub suite: String,
    pub fingerprint: String,
    pub calibration: CalibrationRecord,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn new(suite: &str, calibration: CalibrationRecord) -> Self {
        Self {
            suite: suite.to_string(),
            fingerprint: format!(
                "{}/{} ({})",
                env!("CARGO_PKG_NAME"),
                env!("CARGO_PKG_VERSION"),
                if cfg!(debug_assertions) { "debug" } else { "release" },
            ),
            calibration,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = CheckResult>) {
        self.checks.extend(checks);
    }

    /// Sort into the canonical order: by suite, then name (encoded in the path).
    pub fn sort_canonical(&mut self) {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
    }

    pub fn total(&self) -> usize {
        self.checks.len()
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn measured(&self) -> usize {
        self.checks.iter().filter(|c| c.kind == CheckKind::Measured).count()
    }

    pub fn all_asserted_pass(&self) -> bool {
        self.checks
            .iter()
            .filter(|c| c.kind == CheckKind::Asserted)
            .all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.checks
            .iter()
            .filter(|c| c.kind == CheckKind::Asserted && !c.pass)
            .collect()
    }

    /// Canonical serialization: stable field order, sorted checks, all
    /// scalars as 17-significant-digit decimal strings.
    pub fn to_json(&self) -> String {
        let mut sorted = self.clone();
        sorted.sort_canonical();

        let mut calib = serde_json::Map::new();
        calib.insert("alpha0".into(), fmt17(self.calibration.alpha0).into());
        calib.insert("phase_sign".into(), fmt17(self.calibration.phase_sign).into());
        calib.insert("a_prefactor".into(), fmt17(self.calibration.a_prefactor).into());
        calib.insert("residual".into(), fmt17(self.calibration.residual).into());

        let mut summary = serde_json::Map::new();
        summary.insert("total".into(), serde_json::Value::from(sorted.total() as u64));
        summary.insert("passed".into(), serde_json::Value::from(sorted.passed() as u64));
        summary.insert("measured".into(), serde_json::Value::from(sorted.measured() as u64));

        let mut obj = serde_json::Map::new();
        obj.insert("suite".into(), sorted.suite.clone().into());
        obj.insert("fingerprint".into(), sorted.fingerprint.clone().into());
        obj.insert("calibration".into(), serde_json::Value::Object(calib));
        obj.insert(
            "checks".into(),
            serde_json::Value::Array(sorted.checks.iter().map(CheckResult::to_json).collect()),
        );
        obj.insert("summary".into(), serde_json::Value::Object(summary));
        serde_json::to_string_pretty(&serde_json::Value::Object(obj)).expect("report serializes")
    }
}

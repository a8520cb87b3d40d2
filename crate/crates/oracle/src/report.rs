use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ToleranceKind {
    Absolute,
    Relative,
    /// Absolute tolerance of `k` standard errors.
    Sigma,
}

/// Outcome of one check. `pass` is fixed at construction from the error
/// and the tolerance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    quantity: String,
    reference: f64,
    estimate: f64,
    abs_error: f64,
    rel_error: f64,
    tolerance: f64,
    tolerance_kind: ToleranceKind,
    /// Samples, walks or integrand evaluations spent.
    budget: u64,
    pass: bool,
}

impl OracleReport {
    fn build(quantity: impl Into<String>, reference: f64, estimate: f64, tolerance: f64, kind: ToleranceKind, budget: u64) -> Self {
        let abs_error = (estimate - reference).abs();
        let rel_error = if reference != 0.0 { abs_error / reference.abs() } else { abs_error };
        let err = match kind {
            ToleranceKind::Relative => rel_error,
            _ => abs_error,
        };
        OracleReport {
            quantity: quantity.into(),
            reference,
            estimate,
            abs_error,
            rel_error,
            tolerance,
            tolerance_kind: kind,
            budget,
            pass: err <= tolerance,
        }
    }

    pub fn absolute(quantity: impl Into<String>, reference: f64, estimate: f64, tolerance: f64, budget: u64) -> Self {
        Self::build(quantity, reference, estimate, tolerance, ToleranceKind::Absolute, budget)
    }

    /// Relative error against `|reference|` (absolute when the reference is 0).
    pub fn relative(quantity: impl Into<String>, reference: f64, estimate: f64, tolerance: f64, budget: u64) -> Self {
        Self::build(quantity, reference, estimate, tolerance, ToleranceKind::Relative, budget)
    }

    /// Pass when `|estimate - reference| <= k stderr`.
    pub fn sigma(quantity: impl Into<String>, reference: f64, estimate: f64, stderr: f64, k: f64, budget: u64) -> Self {
        Self::build(quantity, reference, estimate, k * stderr, ToleranceKind::Sigma, budget)
    }

    pub fn quantity(&self) -> &str {
        &self.quantity
    }

    pub fn reference(&self) -> f64 {
        self.reference
    }

    pub fn estimate(&self) -> f64 {
        self.estimate
    }

    pub fn abs_error(&self) -> f64 {
        self.abs_error
    }

    pub fn rel_error(&self) -> f64 {
        self.rel_error
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn tolerance_kind(&self) -> ToleranceKind {
        self.tolerance_kind
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn pass(&self) -> bool {
        self.pass
    }
}

/// Append-only collection of reports.
#[derive(Debug, Clone, Default, Serialize)]
pub struct OracleLog {
    reports: Vec<OracleReport>,
}

impl OracleLog {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, report: OracleReport) -> &OracleReport {
        self.reports.push(report);
        self.reports.last().expect("just pushed")
    }

    pub fn extend(&mut self, other: OracleLog) {
        self.reports.extend(other.reports);
    }

    pub fn reports(&self) -> &[OracleReport] {
        &self.reports
    }

    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(OracleReport::pass)
    }

    pub fn len(&self) -> usize {
        self.reports.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reports.is_empty()
    }
}

use std::fmt::Display;

/// One failed case of a verification run.
#[derive(Clone, Debug, PartialEq)]
pub struct Failure {
    pub inputs: String,
    pub expected: String,
    pub got: String,
    pub residual: Option<f64>,
}

/// Outcome of a verification suite: how many cases ran and which failed.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
    /// Largest residual seen across numeric cases.
    pub worst_residual: Option<f64>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), cases: 0, failures: Vec::new(), worst_residual: None }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Exact comparison.
    pub fn check_eq<T: PartialEq + Display>(&mut self, inputs: impl Display, expected: &T, got: &T) -> bool {
        self.cases += 1;
        let ok = expected == got;
        if !ok {
            self.failures.push(Failure {
                inputs: inputs.to_string(),
                expected: expected.to_string(),
                got: got.to_string(),
                residual: None,
            });
        }
        ok
    }

    pub fn check(&mut self, inputs: impl Display, ok: bool, detail: impl Display) -> bool {
        self.cases += 1;
        if !ok {
            self.failures.push(Failure {
                inputs: inputs.to_string(),
                expected: "true".into(),
                got: detail.to_string(),
                residual: None,
            });
        }
        ok
    }

    /// Numeric comparison with a residual already computed by the caller.
    pub fn check_residual(
        &mut self,
        inputs: impl Display,
        expected: impl Display,
        got: impl Display,
        residual: f64,
        tol: f64,
    ) -> bool {
        self.cases += 1;
        self.worst_residual = Some(self.worst_residual.map_or(residual, |w| w.max(residual)));
        let ok = residual <= tol;
        if !ok {
            self.failures.push(Failure {
                inputs: inputs.to_string(),
                expected: expected.to_string(),
                got: got.to_string(),
                residual: Some(residual),
            });
        }
        ok
    }

    pub fn absorb(&mut self, other: Report) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        if let Some(r) = other.worst_residual {
            self.worst_residual = Some(self.worst_residual.map_or(r, |w| w.max(r)));
        }
    }
}

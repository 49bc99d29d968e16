use serde::Serialize;

/// Outcome of a check, with a human-readable witness on failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub pass: bool,
    pub witness: Option<String>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict { pass: true, witness: None }
    }

    pub fn fail(witness: impl Into<String>) -> Self {
        Verdict { pass: false, witness: Some(witness.into()) }
    }

    /// Passes iff `ok`; otherwise fails with the lazily built witness.
    pub fn check(ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass()
        } else {
            Self::fail(witness())
        }
    }

    /// First failure wins.
    pub fn and(self, other: Verdict) -> Verdict {
        if self.pass {
            other
        } else {
            self
        }
    }
}

//! Runs named acceptance criteria, one status line each.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: u32,
    pub title: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "criterion {} [{}] {} ({} ms): {}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.elapsed.as_millis(),
            self.detail
        )
    }
}

/// Runs `check`, which returns `Ok(detail)` on success. A panic or an
/// elapsed time above `limit` counts as failure.
pub fn run_criterion(
    id: u32,
    title: &str,
    limit: Option<Duration>,
    check: impl FnOnce() -> Result<String, String>,
) -> Outcome {
    let start = Instant::now();
    let result = panic::catch_unwind(AssertUnwindSafe(check));
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match result {
        Ok(Ok(d)) => (true, d),
        Ok(Err(d)) => (false, d),
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            (false, format!("panicked: {msg}"))
        }
    };
    if let Some(limit) = limit {
        if elapsed > limit {
            passed = false;
            detail = format!("{detail}; exceeded {} ms limit", limit.as_millis());
        }
    }
    let outcome = Outcome {
        id,
        title: title.into(),
        passed,
        detail,
        elapsed,
    };
    println!("{}", outcome.line());
    outcome
}

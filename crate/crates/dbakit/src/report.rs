//! Structured verification reports.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::time::Instant;

/// One theorem-level verification outcome, JSON-serializable for the CLI.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem: String,
    pub input: String,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    pub elapsed_ms: u64,
}

/// Short content digest used to tie reports to their inputs.
pub fn digest(bytes: &[u8]) -> String {
    let hash = Sha256::digest(bytes);
    hash[..8].iter().map(|b| format!("{b:02x}")).collect()
}

/// Runs one check and wraps the outcome with timing.
pub fn run_check(
    theorem: &str,
    input: &str,
    check: impl FnOnce() -> (bool, Option<String>),
) -> TheoremReport {
    let start = Instant::now();
    let (verdict, counterexample) = check();
    TheoremReport {
        theorem: theorem.to_string(),
        input: input.to_string(),
        verdict,
        counterexample,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_is_stable() {
        assert_eq!(digest(b"abc"), digest(b"abc"));
        assert_ne!(digest(b"abc"), digest(b"abd"));
        assert_eq!(digest(b"abc").len(), 16);
    }

    #[test]
    fn report_round_trips_through_json() {
        let r = run_check("demo", "cafebabe", || (false, Some("x=3".into())));
        let json = serde_json::to_string(&r).unwrap();
        let back: TheoremReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.theorem, "demo");
        assert!(!back.verdict);
        assert_eq!(back.counterexample.as_deref(), Some("x=3"));
    }
}

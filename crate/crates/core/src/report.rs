//! Structured records describing a failed verification.

use alloc::string::String;
use core::fmt;

use crate::partition::Category;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailureReport {
    pub claim: String,
    pub category: Option<Category>,
    pub k: usize,
    pub n: Option<String>,
    pub pi: Option<String>,
    pub sigma: Option<String>,
    pub expected: String,
    pub actual: String,
}

impl FailureReport {
    pub fn new(claim: impl Into<String>, category: Option<Category>, k: usize) -> Self {
        FailureReport {
            claim: claim.into(),
            category,
            k,
            n: None,
            pi: None,
            sigma: None,
            expected: String::new(),
            actual: String::new(),
        }
    }

    pub fn at_n(mut self, n: impl fmt::Display) -> Self {
        self.n = Some(alloc::format!("{n}"));
        self
    }

    pub fn entry(mut self, pi: impl fmt::Display, sigma: impl fmt::Display) -> Self {
        self.pi = Some(alloc::format!("{pi}"));
        self.sigma = Some(alloc::format!("{sigma}"));
        self
    }

    pub fn values(mut self, expected: impl fmt::Display, actual: impl fmt::Display) -> Self {
        self.expected = alloc::format!("{expected}");
        self.actual = alloc::format!("{actual}");
        self
    }
}

impl fmt::Display for FailureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.claim)?;
        if let Some(c) = self.category {
            write!(f, " [{c}]")?;
        }
        write!(f, " k={}", self.k)?;
        if let Some(n) = &self.n {
            write!(f, " n={n}")?;
        }
        if let (Some(p), Some(s)) = (&self.pi, &self.sigma) {
            write!(f, " at ({p}, {s})")?;
        }
        write!(f, ": expected {}, got {}", self.expected, self.actual)
    }
}

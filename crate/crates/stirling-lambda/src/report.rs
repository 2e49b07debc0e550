//! Report types shared by the identity checks.

use std::fmt;

use crate::exactnum::LambdaPoly;

/// Identifier of a registered check; the order here fixes the reporting
/// order everywhere.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CheckId {
    Prop1,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
    T11,
    Eq14,
    Eq17,
    Eq19,
    Eq23,
    Gf,
    AltSum,
}

impl CheckId {
    pub const ALL: [CheckId; 16] = [
        CheckId::Prop1,
        CheckId::T3,
        CheckId::T4,
        CheckId::T5,
        CheckId::T6,
        CheckId::T7,
        CheckId::T8,
        CheckId::T9,
        CheckId::T10,
        CheckId::T11,
        CheckId::Eq14,
        CheckId::Eq17,
        CheckId::Eq19,
        CheckId::Eq23,
        CheckId::Gf,
        CheckId::AltSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::Prop1 => "prop1",
            CheckId::T3 => "t3",
            CheckId::T4 => "t4",
            CheckId::T5 => "t5",
            CheckId::T6 => "t6",
            CheckId::T7 => "t7",
            CheckId::T8 => "t8",
            CheckId::T9 => "t9",
            CheckId::T10 => "t10",
            CheckId::T11 => "t11",
            CheckId::Eq14 => "eq14",
            CheckId::Eq17 => "eq17",
            CheckId::Eq19 => "eq19",
            CheckId::Eq23 => "eq23",
            CheckId::Gf => "gf",
            CheckId::AltSum => "altsum",
        }
    }

    pub fn from_name(name: &str) -> Option<CheckId> {
        CheckId::ALL.iter().copied().find(|id| id.name() == name)
    }

    /// One-line description of what the check verifies.
    pub fn describe(self) -> &'static str {
        match self {
            CheckId::Prop1 => "orthogonality of the two kinds and inverse-transform round trip",
            CheckId::T3 => "binomial convolution with falling factorials of 1-l advances S2 by one in both indices",
            CheckId::T4 => "first-kind rows convolved with signed rising factorials of 1 advance S1 by one in both indices",
            CheckId::T5 => "S2 recovered from shifted S2 entries via signed rising factorials of 1",
            CheckId::T6 => "S1 recovered from shifted S1 entries via falling factorials of 1-l",
            CheckId::T7 => "S2 advance via rising factorials of l+1-k*lambda",
            CheckId::T8 => "S1 advance via signed classical falling factorials of k-(m+1)*lambda",
            CheckId::T9 => "diagonal-band sum rule for S2",
            CheckId::T10 => "S2/S1 cross convolution equals a binomial times a falling factorial of 1-l",
            CheckId::T11 => "diagonal-band sum rule for S1",
            CheckId::Eq14 => "normal ordering of degenerate number-operator powers matches S2 rows",
            CheckId::Eq17 => "first-kind inversion collapses to a single normal-ordered term",
            CheckId::Eq19 => "sandwich identity a+ (n+1-l)_{k,l} a = (n)_{k+1,l}",
            CheckId::Eq23 => "sandwich identity a+ (n)_{k,l} a = n (n-1)_{k,l}",
            CheckId::Gf => "exponential generating function of S2 columns",
            CheckId::AltSum => "alternating binomial sums of degenerate falling factorials",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail => write!(f, "fail"),
        }
    }
}

/// First failing instance of a check: the named indices and both sides.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Counterexample {
    pub indices: Vec<(&'static str, i64)>,
    pub lhs: LambdaPoly,
    pub rhs: LambdaPoly,
}

/// Outcome of one registered check. A failing report always carries a
/// counterexample with `lhs != rhs`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdentityReport {
    pub id: CheckId,
    pub range: String,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
}

impl IdentityReport {
    pub fn pass(id: CheckId, range: impl Into<String>) -> Self {
        IdentityReport {
            id,
            range: range.into(),
            status: Status::Pass,
            counterexample: None,
        }
    }

    pub fn fail(id: CheckId, range: impl Into<String>, counterexample: Counterexample) -> Self {
        debug_assert!(counterexample.lhs != counterexample.rhs);
        IdentityReport {
            id,
            range: range.into(),
            status: Status::Fail,
            counterexample: Some(counterexample),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} ({})", self.id, self.status, self.range)?;
        if let Some(cex) = &self.counterexample {
            let indices: Vec<String> = cex
                .indices
                .iter()
                .map(|(name, value)| format!("{name} = {value}"))
                .collect();
            write!(
                f,
                "\n  counterexample at {}: lhs = {}, rhs = {}",
                indices.join(", "),
                cex.lhs,
                cex.rhs
            )?;
        }
        Ok(())
    }
}

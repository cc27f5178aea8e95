//! Cross-checks of the engine against structural properties of rank-k
//! ranges and against independent closed-form oracles.
//!
//! Every check returns a [`PropertyReport`] whose `pass` flag is exactly
//! `discrepancy <= tolerance`.

mod checks;
mod oracles;
mod suite;

use std::fmt;

pub use checks::{equality_tolerance, PropertyChecks};
pub use oracles::{
    boundary_biased_range, check_hermitian, check_normal, dilation_inclusion_check,
    haagerup_bound_check, hermitian_oracle, monte_carlo_check, normal_eigenvalues, normal_oracle,
    sampled_numerical_range, DilationCheck, HaagerupReport, InclusionSample, HERMITIAN_TOL,
    INCLUSION_TOL, MONTE_CARLO_SLACK, NORMAL_MAX_DIM, NORMAL_TOL,
};
pub use suite::run_property_suite;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PropertyId {
    /// `Λ_k(aT + bI) = aΛ_k(T) + b`.
    P1,
    /// `Λ_k(T*) = conj Λ_k(T)`.
    P2,
    /// `Λ_k(T ⊕ S) ⊇ Λ_k(T) ∪ Λ_k(S)`.
    P3,
    /// `Λ_k(U*TU) = Λ_k(T)`.
    P4,
    /// Compressions shrink the range.
    P5,
    /// `Λ_1 ⊇ Λ_2 ⊇ …`.
    P6,
    Hermitian,
    Normal,
    Haagerup,
    /// Dilation inclusion bound for nilpotent contractions.
    Thm14,
    /// Monte-Carlo smoke test of `W(T)`.
    MonteCarlo,
}

impl PropertyId {
    pub fn as_str(&self) -> &'static str {
        match self {
            PropertyId::P1 => "P1",
            PropertyId::P2 => "P2",
            PropertyId::P3 => "P3",
            PropertyId::P4 => "P4",
            PropertyId::P5 => "P5",
            PropertyId::P6 => "P6",
            PropertyId::Hermitian => "HERMITIAN",
            PropertyId::Normal => "NORMAL",
            PropertyId::Haagerup => "HAAGERUP",
            PropertyId::Thm14 => "THM14",
            PropertyId::MonteCarlo => "MONTE-CARLO",
        }
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What a check was run on.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct InputDigest {
    pub dims: Vec<usize>,
    pub k: Option<usize>,
    pub seed: Option<u64>,
}

impl InputDigest {
    pub fn new(dims: Vec<usize>, k: Option<usize>) -> Self {
        InputDigest {
            dims,
            k,
            seed: None,
        }
    }

    pub fn with_seed(mut self, seed: Option<u64>) -> Self {
        self.seed = seed;
        self
    }
}

impl fmt::Display for InputDigest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self.dims.iter().map(usize::to_string).collect();
        write!(f, "dims={}", dims.join("x"))?;
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        if let Some(s) = self.seed {
            write!(f, " seed={s}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyReport {
    pub property: PropertyId,
    pub pass: bool,
    /// Hausdorff distance, containment excess or inequality violation;
    /// `+∞` when one side is empty and the other is not.
    pub discrepancy: f64,
    pub tolerance: f64,
    pub digest: InputDigest,
}

impl PropertyReport {
    pub fn new(
        property: PropertyId,
        discrepancy: f64,
        tolerance: f64,
        digest: InputDigest,
    ) -> Self {
        PropertyReport {
            property,
            pass: discrepancy <= tolerance,
            discrepancy,
            tolerance,
            digest,
        }
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<11} {} discrepancy={:.3e} tolerance={:.3e} {}",
            self.property,
            if self.pass { "PASS" } else { "FAIL" },
            self.discrepancy,
            self.tolerance,
            self.digest
        )
    }
}

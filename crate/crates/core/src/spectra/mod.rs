//! Transmissions, the generalized distance matrix `D_α = α·Tr + (1-α)·D`,
//! its spectral radius and Perron vector, equitable quotients, and the
//! closed forms for the extremal families.

mod bounds;
mod jacobi;
mod matrix;
mod power;
mod quotient;
mod transmission;

pub use bounds::{bound_tau, gap, quotient_mu_even_dvdr, quotient_mu_odd, BoundParams};
pub use jacobi::{jacobi_eigen, SymmetricEigen};
pub use matrix::{build_d_alpha, SymmetricMatrix};
pub use power::{spectral_radius, SolverPath, SpectralResult};
pub use quotient::{equitable_quotient, QuotientMatrix};
pub use transmission::{transmissions, TransmissionVector};

use crate::graph::GraphError;
use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error("alpha must lie in [0, 1], got {0}")]
    AlphaOutOfRange(f64),
    #[error("alpha must lie in [0, 1) for the transmission-gap bound, got {0}")]
    AlphaNotBelowOne(f64),
    #[error("matrix is empty")]
    EmptyMatrix,
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("matrix entry ({0}, {1}) is not finite")]
    NonFinite(usize, usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("order {n} is not valid here: {reason}")]
    InvalidOrder { n: usize, reason: &'static str },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Weight `α` of the transmission diagonal, validated to lie in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct Alpha(f64);

impl Alpha {
    pub const ZERO: Alpha = Alpha(0.0);
    pub const HALF: Alpha = Alpha(0.5);
    pub const ONE: Alpha = Alpha(1.0);

    pub fn new(alpha: f64) -> Result<Self, SpectraError> {
        if (0.0..=1.0).contains(&alpha) {
            Ok(Alpha(alpha))
        } else {
            Err(SpectraError::AlphaOutOfRange(alpha))
        }
    }

    /// Alpha restricted to `[0, 1)`, as the gap bound requires.
    pub fn below_one(alpha: f64) -> Result<Self, SpectraError> {
        let a = Alpha::new(alpha)?;
        a.require_below_one()?;
        Ok(a)
    }

    pub(crate) fn require_below_one(self) -> Result<(), SpectraError> {
        if self.0 < 1.0 {
            Ok(())
        } else {
            Err(SpectraError::AlphaNotBelowOne(self.0))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_ranges() {
        assert!(Alpha::new(0.0).is_ok());
        assert!(Alpha::new(1.0).is_ok());
        assert_eq!(Alpha::new(1.5), Err(SpectraError::AlphaOutOfRange(1.5)));
        assert!(Alpha::new(-0.1).is_err());
        assert!(Alpha::new(f64::NAN).is_err());
        assert_eq!(
            Alpha::below_one(1.0),
            Err(SpectraError::AlphaNotBelowOne(1.0))
        );
        assert_eq!(Alpha::below_one(0.75).unwrap().get(), 0.75);
    }
}

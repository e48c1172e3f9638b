//! Resonance energies of cubic and quartic anharmonic oscillators, computed
//! four independent ways and cross-checked:
//!
//! * exact-rational perturbation series from a power-series recursion,
//! * one-instanton decay-width expansions with exact coefficient tables,
//! * complex-rotated spectral diagonalization in the oscillator basis,
//! * once-subtracted dispersion integrals over the imaginary parts.
//!
//! The crate also evaluates the matching large-order (factorial-growth)
//! formulas for the perturbative coefficients and ships a CLI exposing every
//! operation with reproducible JSON output.

#![allow(clippy::manual_is_multiple_of)]

pub mod acceptance;
pub mod cli;
pub mod dispersion;
pub mod error;
pub mod instanton;
pub mod oscillator;
pub mod perturbation;
pub mod quad;
pub mod series;
pub mod spectra;
pub mod special;

pub use error::{Error, Result};
pub use oscillator::{CouplingConvention, OscillatorSpec};


//! The generalized nonanalytic expansion: a perturbative power series plus
//! instanton sectors indexed by multiplicity J, log power L and power order K.
//!
//! A J-instanton sector contributes
//!
//!   [ i * 2^p / (sqrt(pi) n!) * (s g)^{-(n + 1/2)} * exp(-A / (s g)) ]^J
//!       * ln^L(c / g) * sum_K Xi_{J,L,K} g^K
//!
//! with s = +1 for odd oscillators (unstable for g > 0) and s = -1 for even
//! ones (unstable for g < 0, the prefactor carries (-g) throughout). Only the
//! J = 1, L = 0 sector ships with coefficient data; the structure holds any
//! (J, L).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::oscillator::OscillatorSpec;
use crate::series::{rat_to_f64, RationalSeries};
use crate::special::ln_factorial;

use super::Rational;

#[derive(Debug, Clone, PartialEq)]
pub struct InstantonTerm {
    /// Instanton multiplicity J >= 1.
    pub multiplicity_j: u32,
    /// Log power L, 0 <= L < J.
    pub log_power_l: u32,
    /// Dimensionless action A > 0 (2/15 cubic, 1/3 quartic).
    pub action: Rational,
    /// +1 when the prefactor carries g, -1 when it carries -g.
    pub coupling_sign: i8,
    /// Exponent of 1/(s g) in the prefactor: n + 1/2.
    pub amplitude_power: Rational,
    /// Exponent of 2 in the amplitude scale 2^p / (sqrt(pi) n!).
    /// Half-integers occur (the quartic carries 2^{2n + 1/2}).
    pub amplitude_pow2: Rational,
    /// The level n entering 1/(sqrt(pi) n!).
    pub amplitude_level: u32,
    /// The constant c in ln^L(c/g): 4 for the quartic, -8 for the cubic.
    pub log_scale: i64,
    /// The Xi_{J,L,K} coefficient row.
    pub corrections: RationalSeries,
}

impl InstantonTerm {
    pub fn validate(&self) -> Result<()> {
        if self.multiplicity_j == 0 {
            return Err(Error::Domain("instanton multiplicity J must be >= 1".into()));
        }
        if self.log_power_l >= self.multiplicity_j {
            return Err(Error::Domain(format!(
                "log power L = {} must satisfy L < J = {}",
                self.log_power_l, self.multiplicity_j
            )));
        }
        if self.action <= Rational::from_integer(0.into()) {
            return Err(Error::Domain("instanton action must be positive".into()));
        }
        Ok(())
    }

    /// Amplitude scale 2^p / (sqrt(pi) n!) as binary64.
    pub fn amplitude_scale(&self) -> f64 {
        let p = rat_to_f64(&self.amplitude_pow2);
        (p * std::f64::consts::LN_2
            - 0.5 * std::f64::consts::PI.ln()
            - ln_factorial(self.amplitude_level as u64))
        .exp()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneralizedExpansion {
    pub perturbative: RationalSeries,
    pub instanton_terms: Vec<InstantonTerm>,
    pub oscillator: OscillatorSpec,
}

impl GeneralizedExpansion {
    pub fn new(
        perturbative: RationalSeries,
        instanton_terms: Vec<InstantonTerm>,
        oscillator: OscillatorSpec,
    ) -> Result<Self> {
        oscillator.validate()?;
        for term in &instanton_terms {
            term.validate()?;
        }
        for (i, a) in instanton_terms.iter().enumerate() {
            for b in &instanton_terms[i + 1..] {
                if a.multiplicity_j == b.multiplicity_j && a.log_power_l == b.log_power_l {
                    return Err(Error::Domain(format!(
                        "duplicate instanton sector (J, L) = ({}, {})",
                        a.multiplicity_j, a.log_power_l
                    )));
                }
            }
        }
        Ok(GeneralizedExpansion { perturbative, instanton_terms, oscillator })
    }
}

/// How the complex logarithm in ln^L(c/g) was taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogBranch {
    /// ln(x) = ln|x| + i pi for x < 0.
    Principal,
}

#[derive(Debug, Clone, Copy)]
pub struct GeneralizedValue {
    pub value: Complex64,
    pub perturbative_part: Complex64,
    pub instanton_part: Complex64,
    pub log_branch: LogBranch,
}

/// Evaluate the expansion at unstable-region coupling `g`: the perturbative
/// partial sum through `k_pert` plus every stored instanton sector with its
/// correction series truncated at `k_inst`.
///
/// The real part of the J = 1 sector and the perturbative sum are reported
/// separately (`perturbative_part`, `instanton_part`); no resummation rule
/// combining them is applied.
pub fn eval_generalized(
    exp: &GeneralizedExpansion,
    g: f64,
    k_pert: usize,
    k_inst: usize,
) -> Result<GeneralizedValue> {
    exp.oscillator.require_unstable(g)?;
    let perturbative_part = exp.perturbative.eval_complex(Complex64::new(g, 0.0), k_pert)?;
    let mut instanton_part = Complex64::new(0.0, 0.0);
    for term in &exp.instanton_terms {
        let sg = term.coupling_sign as f64 * g;
        debug_assert!(sg > 0.0, "unstable-region check guarantees s*g > 0");
        let action = rat_to_f64(&term.action);
        let power = rat_to_f64(&term.amplitude_power);
        let prefactor = Complex64::i()
            * term.amplitude_scale()
            * sg.powf(-power)
            * (-action / sg).exp();
        let log_factor = if term.log_power_l == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            let x = term.log_scale as f64 / g;
            let ln_x = if x > 0.0 {
                Complex64::new(x.ln(), 0.0)
            } else {
                Complex64::new((-x).ln(), std::f64::consts::PI)
            };
            ln_x.powu(term.log_power_l)
        };
        let corrections = term.corrections.eval_complex(Complex64::new(g, 0.0), k_inst)?;
        instanton_part += prefactor.powu(term.multiplicity_j) * log_factor * corrections;
    }
    Ok(GeneralizedValue {
        value: perturbative_part + instanton_part,
        perturbative_part,
        instanton_part,
        log_branch: LogBranch::Principal,
    })
}

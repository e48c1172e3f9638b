//! Which oscillator: degree, level, and how the coupling enters.
//!
//! Two conventions are supported. Even degrees perturb with `g x^M`
//! (quartic: U = x^2/2 + g x^4); odd degrees perturb with `sqrt(g) x^M`
//! (cubic: V = x^2/2 + sqrt(g) x^3), so that the energy is a power series
//! in `g` in both cases.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CouplingConvention {
    /// Perturbation g * x^M, M even.
    EvenPower,
    /// Perturbation sqrt(g) * x^M, M odd.
    OddSqrt,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscillatorSpec {
    pub degree_m: u32,
    pub level_n: u32,
    pub convention: CouplingConvention,
    pub coupling_g: Option<f64>,
}

impl OscillatorSpec {
    pub fn new(degree_m: u32, level_n: u32) -> Result<Self> {
        if degree_m < 3 {
            return Err(Error::Domain(format!(
                "oscillator degree must be >= 3, got {degree_m}"
            )));
        }
        let convention = if degree_m % 2 == 0 {
            CouplingConvention::EvenPower
        } else {
            CouplingConvention::OddSqrt
        };
        Ok(OscillatorSpec { degree_m, level_n, convention, coupling_g: None })
    }

    pub fn cubic(level_n: u32) -> Self {
        Self::new(3, level_n).expect("degree 3 is valid")
    }

    pub fn quartic(level_n: u32) -> Self {
        Self::new(4, level_n).expect("degree 4 is valid")
    }

    pub fn with_coupling(mut self, g: f64) -> Self {
        self.coupling_g = Some(g);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.degree_m < 3 {
            return Err(Error::Domain(format!(
                "oscillator degree must be >= 3, got {}",
                self.degree_m
            )));
        }
        match self.convention {
            CouplingConvention::OddSqrt if self.degree_m % 2 == 0 => Err(Error::Domain(
                format!("sqrt-coupling convention requires odd degree, got {}", self.degree_m),
            )),
            CouplingConvention::EvenPower if self.degree_m % 2 == 1 => Err(Error::Domain(
                format!("plain-coupling convention requires even degree, got {}", self.degree_m),
            )),
            _ => Ok(()),
        }
    }

    /// Number of powers of the expansion parameter lambda per power of g:
    /// lambda = sqrt(g) for odd degrees, lambda = g for even ones.
    pub fn lambda_per_g(&self) -> usize {
        match self.convention {
            CouplingConvention::OddSqrt => 2,
            CouplingConvention::EvenPower => 1,
        }
    }

    /// The unstable (resonance) region: g > 0 for odd degrees, g < 0 for
    /// even ones.
    pub fn unstable_region_contains(&self, g: f64) -> bool {
        match self.convention {
            CouplingConvention::OddSqrt => g > 0.0,
            CouplingConvention::EvenPower => g < 0.0,
        }
    }

    pub fn require_unstable(&self, g: f64) -> Result<()> {
        if self.unstable_region_contains(g) {
            Ok(())
        } else {
            let side = match self.convention {
                CouplingConvention::OddSqrt => "g > 0",
                CouplingConvention::EvenPower => "g < 0",
            };
            Err(Error::Domain(format!(
                "coupling g = {g} lies in the stable region of the degree-{} oscillator; the expansion holds for {side}",
                self.degree_m
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conventions_follow_parity() {
        assert_eq!(OscillatorSpec::cubic(0).convention, CouplingConvention::OddSqrt);
        assert_eq!(OscillatorSpec::quartic(0).convention, CouplingConvention::EvenPower);
        assert!(OscillatorSpec::new(2, 0).is_err());
        assert!(OscillatorSpec::new(5, 1).unwrap().validate().is_ok());
    }

    #[test]
    fn unstable_regions() {
        assert!(OscillatorSpec::cubic(0).unstable_region_contains(0.1));
        assert!(!OscillatorSpec::cubic(0).unstable_region_contains(-0.1));
        assert!(OscillatorSpec::quartic(0).unstable_region_contains(-0.1));
        assert!(!OscillatorSpec::quartic(0).unstable_region_contains(0.1));
        assert!(!OscillatorSpec::cubic(0).unstable_region_contains(0.0));
    }
}

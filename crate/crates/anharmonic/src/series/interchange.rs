//! Versioned text interchange for series data.
//!
//! Rationals are rendered as "numerator/denominator" strings, one
//! coefficient per array entry -- never as floats, since the stored
//! numerators exceed binary64 precision.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::oscillator::OscillatorSpec;
use crate::series::expansion::{GeneralizedExpansion, InstantonTerm};
use crate::series::{rat_from_str, rat_to_string, RationalSeries};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeriesDoc {
    pub schema_version: u32,
    pub variable: String,
    pub coefficients: Vec<String>,
}

impl SeriesDoc {
    pub fn from_series(series: &RationalSeries) -> Self {
        SeriesDoc {
            schema_version: SCHEMA_VERSION,
            variable: series.variable().to_string(),
            coefficients: series.coefficients().iter().map(rat_to_string).collect(),
        }
    }

    pub fn to_series(&self) -> Result<RationalSeries> {
        let coeffs = self
            .coefficients
            .iter()
            .map(|s| rat_from_str(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(RationalSeries::new(self.variable.clone(), coeffs))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstantonTermDoc {
    pub multiplicity_j: u32,
    pub log_power_l: u32,
    pub action: String,
    pub coupling_sign: i8,
    pub amplitude_power: String,
    pub amplitude_pow2: String,
    pub amplitude_level: u32,
    pub log_scale: i64,
    pub corrections: SeriesDoc,
}

impl InstantonTermDoc {
    pub fn from_term(term: &InstantonTerm) -> Self {
        InstantonTermDoc {
            multiplicity_j: term.multiplicity_j,
            log_power_l: term.log_power_l,
            action: rat_to_string(&term.action),
            coupling_sign: term.coupling_sign,
            amplitude_power: rat_to_string(&term.amplitude_power),
            amplitude_pow2: rat_to_string(&term.amplitude_pow2),
            amplitude_level: term.amplitude_level,
            log_scale: term.log_scale,
            corrections: SeriesDoc::from_series(&term.corrections),
        }
    }

    pub fn to_term(&self) -> Result<InstantonTerm> {
        Ok(InstantonTerm {
            multiplicity_j: self.multiplicity_j,
            log_power_l: self.log_power_l,
            action: rat_from_str(&self.action)?,
            coupling_sign: self.coupling_sign,
            amplitude_power: rat_from_str(&self.amplitude_power)?,
            amplitude_pow2: rat_from_str(&self.amplitude_pow2)?,
            amplitude_level: self.amplitude_level,
            log_scale: self.log_scale,
            corrections: self.corrections.to_series()?,
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExpansionDoc {
    pub schema_version: u32,
    pub oscillator: OscillatorSpec,
    pub perturbative: SeriesDoc,
    pub instanton_terms: Vec<InstantonTermDoc>,
}

impl ExpansionDoc {
    pub fn from_expansion(exp: &GeneralizedExpansion) -> Self {
        ExpansionDoc {
            schema_version: SCHEMA_VERSION,
            oscillator: exp.oscillator,
            perturbative: SeriesDoc::from_series(&exp.perturbative),
            instanton_terms: exp.instanton_terms.iter().map(InstantonTermDoc::from_term).collect(),
        }
    }

    pub fn to_expansion(&self) -> Result<GeneralizedExpansion> {
        GeneralizedExpansion::new(
            self.perturbative.to_series()?,
            self.instanton_terms
                .iter()
                .map(|t| t.to_term())
                .collect::<Result<Vec<_>>>()?,
            self.oscillator,
        )
    }
}

pub fn series_to_json(series: &RationalSeries) -> Result<String> {
    Ok(serde_json::to_string_pretty(&SeriesDoc::from_series(series))?)
}

pub fn series_from_json(text: &str) -> Result<RationalSeries> {
    let doc: SeriesDoc = serde_json::from_str(text)?;
    doc.to_series()
}

pub fn expansion_to_json(exp: &GeneralizedExpansion) -> Result<String> {
    Ok(serde_json::to_string_pretty(&ExpansionDoc::from_expansion(exp))?)
}

pub fn expansion_from_json(text: &str) -> Result<GeneralizedExpansion> {
    let doc: ExpansionDoc = serde_json::from_str(text)?;
    doc.to_expansion()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    #[test]
    fn series_json_round_trip_is_exact() {
        let s = RationalSeries::from_strs(
            "g",
            &["1/1", "-169/16", "-44507/512", "-7583898146256325425743381/13743895347200"],
        )
        .unwrap();
        let text = series_to_json(&s).unwrap();
        assert!(text.contains("\"schema_version\": 1"));
        assert!(text.contains("-7583898146256325425743381/13743895347200"));
        let back = series_from_json(&text).unwrap();
        assert_eq!(back, s);
        // serialisation is deterministic
        assert_eq!(series_to_json(&back).unwrap(), text);
    }

    #[test]
    fn no_floats_leak_into_coefficients() {
        let s = RationalSeries::new("g", vec![rat(1, 2), rat(-11, 8)]);
        let doc = SeriesDoc::from_series(&s);
        assert_eq!(doc.coefficients, vec!["1/2".to_string(), "-11/8".to_string()]);
    }
}

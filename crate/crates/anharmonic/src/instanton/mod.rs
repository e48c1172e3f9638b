//! Instanton trajectories, Euclidean actions and one-instanton decay widths.
//!
//! After rescaling the coupling out of the potential, the classical
//! imaginary-time trajectories in the inverted potentials are
//!
//!   quartic: q(t) = +-[cosh(2t) + 1]^{-1/2},   action 1/3,
//!   cubic:   r(t) = [cosh(t) + 1]^{-1},        action 2/15,
//!
//! and the widths of the lowest resonances follow exp(1/(3g)) (quartic,
//! g < 0) and exp(-2/(15g)) (cubic, g > 0) times the bracket series stored
//! in [`tables`]. Width evaluation runs in log space so couplings down to
//! g ~ 1e-3 and below stay finite instead of underflowing.

pub mod tables;

use crate::error::{Error, Result};
use crate::oscillator::OscillatorSpec;
use crate::quad;
use crate::series::expansion::{GeneralizedExpansion, InstantonTerm};
use crate::series::{optimal_truncation, rat, rat_to_f64, Rational, RationalSeries};
use crate::special::{beta, ln_factorial};

/// A closed-form instanton: degree plus branch choice. The trajectory
/// peaks at t = 0 (1/sqrt(2) for the quartic, 1/2 for the cubic) and decays
/// to zero at |t| -> infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InstantonProfile {
    pub degree_m: u32,
    /// +-1; meaningful for the quartic only, whose two instantons are
    /// mirror images.
    pub branch_sign: i8,
}

impl InstantonProfile {
    pub fn new(degree_m: u32, branch_sign: i8) -> Result<Self> {
        instanton_trajectory(degree_m, 0.0, branch_sign)?;
        Ok(InstantonProfile { degree_m, branch_sign })
    }

    pub fn position(&self, t: f64) -> f64 {
        instanton_trajectory(self.degree_m, t, self.branch_sign).expect("validated degree")
    }

    pub fn peak(&self) -> f64 {
        self.position(0.0)
    }
}

/// Closed-form instanton trajectory at imaginary time `t`. The branch sign
/// only matters for the quartic, whose two instantons are mirror images.
pub fn instanton_trajectory(degree_m: u32, t: f64, branch: i8) -> Result<f64> {
    match degree_m {
        4 => {
            let sign = if branch >= 0 { 1.0 } else { -1.0 };
            Ok(sign / ((2.0 * t).cosh() + 1.0).sqrt())
        }
        3 => Ok(1.0 / (t.cosh() + 1.0)),
        m => Err(Error::Unsupported(format!(
            "closed-form instanton trajectories ship for degrees 3 and 4 only, got {m}"
        ))),
    }
}

/// Analytic time derivative of the trajectory (used by the action integrand).
fn trajectory_derivative(degree_m: u32, t: f64, branch: i8) -> f64 {
    match degree_m {
        4 => {
            let sign = if branch >= 0 { 1.0 } else { -1.0 };
            let c = (2.0 * t).cosh() + 1.0;
            -sign * (2.0 * t).sinh() * c.powf(-1.5)
        }
        3 => {
            let c = t.cosh() + 1.0;
            -t.sinh() / (c * c)
        }
        _ => unreachable!("guarded by instanton_trajectory"),
    }
}

/// Dimensionless Euclidean action of the closed-form trajectory by adaptive
/// quadrature over |t| <= 40: the integrands decay at least like exp(-2|t|),
/// so the neglected tail is below 1e-33.
pub fn instanton_action_numeric(degree_m: u32) -> Result<f64> {
    instanton_action_numeric_windowed(degree_m, 40.0)
}

pub fn instanton_action_numeric_windowed(degree_m: u32, half_window: f64) -> Result<f64> {
    instanton_action_numeric_with_tol(degree_m, half_window, 1e-13)
}

pub fn instanton_action_numeric_with_tol(
    degree_m: u32,
    half_window: f64,
    tol: f64,
) -> Result<f64> {
    instanton_trajectory(degree_m, 0.0, 1)?;
    let lagrangian = move |t: f64| {
        let q = instanton_trajectory(degree_m, t, 1).expect("degree validated");
        let dq = trajectory_derivative(degree_m, t, 1);
        let potential = match degree_m {
            4 => 0.5 * q * q - q.powi(4),
            3 => 0.5 * q * q - q.powi(3),
            _ => unreachable!(),
        };
        0.5 * dq * dq + potential
    };
    let r = quad::integrate(lagrangian, -half_window, half_window, tol.clamp(1e-13, 1e-3))?;
    Ok(r.value)
}

/// The same action through the Beta-function route,
/// A_M = 2^{2/(M-2)} B(M/(M-2), M/(M-2)), valid for any degree M >= 3.
pub fn action_from_beta(degree_m: u32) -> Result<f64> {
    if degree_m < 3 {
        return Err(Error::Domain(format!("degree must be >= 3, got {degree_m}")));
    }
    let m = degree_m as f64;
    let a = m / (m - 2.0);
    Ok(2f64.powf(2.0 / (m - 2.0)) * beta(a, a))
}

/// The closed-form action as an exact rational, where one exists.
pub fn action_closed_form(degree_m: u32) -> Result<Rational> {
    match degree_m {
        3 => Ok(rat(2, 15)),
        4 => Ok(rat(1, 3)),
        m => Err(Error::Unsupported(format!(
            "no exact rational action is shipped for degree {m}"
        ))),
    }
}

/// A one-instanton width series: leading prefactor parameters plus the
/// exact-rational bracket.
#[derive(Debug, Clone, PartialEq)]
pub struct InstantonSeries {
    pub oscillator: OscillatorSpec,
    /// Dimensionless action A (2/15 or 1/3).
    pub action: Rational,
    /// Exponent b of 1/(s g) in the prefactor: n + 1/2.
    pub prefactor_power: Rational,
    /// Exponent of 2 in the amplitude 2^p / (sqrt(pi) n!).
    pub amplitude_pow2: Rational,
    /// Level n entering the amplitude factorial.
    pub amplitude_level: u32,
    /// Bracket series; its K = 0 coefficient is exactly 1.
    pub bracket: RationalSeries,
    /// Widths carry a negative imaginary part.
    pub overall_sign: i8,
    /// +1 when the prefactor carries g (cubic), -1 when -g (quartic).
    pub coupling_sign: i8,
    /// Constant c of the ln^L(c/g) factors in the parent expansion.
    pub log_scale: i64,
}

/// Built-in width series for the shipped (degree, level) pairs.
pub fn decay_width_series(degree_m: u32, level_n: u32) -> Result<InstantonSeries> {
    let raw: &[&str] = match (degree_m, level_n) {
        (3, 0) => &tables::CUBIC_N0,
        (3, 1) => &tables::CUBIC_N1,
        (4, 0) => &tables::QUARTIC_N0,
        (4, 1) => &tables::QUARTIC_N1,
        (m, n) => {
            return Err(Error::Unsupported(format!(
                "decay-width series ship for degrees 3 and 4 at levels 0 and 1; got degree {m}, level {n}"
            )))
        }
    };
    let bracket = RationalSeries::from_strs("g", raw)?;
    debug_assert_eq!(bracket.coefficients()[0], rat(1, 1));
    let n = level_n as i64;
    Ok(InstantonSeries {
        oscillator: OscillatorSpec::new(degree_m, level_n)?,
        action: action_closed_form(degree_m)?,
        prefactor_power: rat(2 * n + 1, 2),
        amplitude_pow2: if degree_m == 3 { rat(3 * n, 1) } else { rat(4 * n + 1, 2) },
        amplitude_level: level_n,
        bracket,
        overall_sign: -1,
        coupling_sign: if degree_m == 3 { 1 } else { -1 },
        log_scale: if degree_m == 3 { -8 } else { 4 },
    })
}

impl InstantonSeries {
    /// ln of the positive prefactor exp(-A/(s g)) * 2^p / (sqrt(pi) n!) *
    /// (s g)^{-b} at unstable-region coupling g.
    pub fn ln_prefactor(&self, g: f64) -> Result<f64> {
        self.oscillator.require_unstable(g)?;
        let sg = self.coupling_sign as f64 * g;
        Ok(-rat_to_f64(&self.action) / sg
            + rat_to_f64(&self.amplitude_pow2) * std::f64::consts::LN_2
            - 0.5 * std::f64::consts::PI.ln()
            - ln_factorial(self.amplitude_level as u64)
            - rat_to_f64(&self.prefactor_power) * sg.ln())
    }

    /// View this series as the (J=1, L=0) sector of a generalized expansion:
    /// the Xi row is the signed bracket.
    pub fn to_instanton_term(&self) -> InstantonTerm {
        let corrections = RationalSeries::new(
            self.bracket.variable().to_string(),
            self.bracket
                .coefficients()
                .iter()
                .map(|c| c * rat(self.overall_sign as i64, 1))
                .collect(),
        );
        InstantonTerm {
            multiplicity_j: 1,
            log_power_l: 0,
            action: self.action.clone(),
            coupling_sign: self.coupling_sign,
            amplitude_power: self.prefactor_power.clone(),
            amplitude_pow2: self.amplitude_pow2.clone(),
            amplitude_level: self.amplitude_level,
            log_scale: self.log_scale,
            corrections,
        }
    }

    /// Assemble a generalized expansion from a perturbative series plus this
    /// one-instanton sector.
    pub fn to_generalized_expansion(&self, perturbative: RationalSeries) -> Result<GeneralizedExpansion> {
        GeneralizedExpansion::new(perturbative, vec![self.to_instanton_term()], self.oscillator)
    }
}

/// Im E (quartic) or Im eps (cubic) through bracket order `k` at coupling
/// `g` in the unstable region. Negative while the bracket stays positive;
/// underflows gracefully to -0.0 at extreme couplings (use
/// [`imag_energy_ln`] there).
pub fn imag_energy(degree_m: u32, level_n: u32, g: f64, k: usize) -> Result<f64> {
    let series = decay_width_series(degree_m, level_n)?;
    let ln_pref = series.ln_prefactor(g)?;
    let bracket = series.bracket.eval_f64(g, k)?;
    Ok(series.overall_sign as f64 * ln_pref.exp() * bracket)
}

/// (sign, ln|Im|) of the width, finite far beyond the binary64 underflow
/// threshold. Errors if the bracket partial sum is zero.
pub fn imag_energy_ln(degree_m: u32, level_n: u32, g: f64, k: usize) -> Result<(i8, f64)> {
    let series = decay_width_series(degree_m, level_n)?;
    let ln_pref = series.ln_prefactor(g)?;
    let bracket = series.bracket.eval_f64(g, k)?;
    if bracket == 0.0 {
        return Err(Error::Domain("bracket partial sum vanished; no magnitude to take".into()));
    }
    let sign = series.overall_sign as f64 * bracket.signum();
    Ok((sign as i8, ln_pref + bracket.abs().ln()))
}

/// Width with the bracket summed to its optimal truncation.
#[derive(Debug, Clone, Copy)]
pub struct WidthEstimate {
    /// Signed width (negative imaginary part).
    pub value: f64,
    /// Prefactor times the first omitted bracket term.
    pub error_estimate: f64,
    pub orders_used: usize,
    pub reached_optimum: bool,
    /// ln|value|, robust to underflow.
    pub ln_magnitude: f64,
}

pub fn width_optimal_truncation(degree_m: u32, level_n: u32, g: f64) -> Result<WidthEstimate> {
    let series = decay_width_series(degree_m, level_n)?;
    let ln_pref = series.ln_prefactor(g)?;
    let bracket = optimal_truncation(&series.bracket, g)?;
    let pref = ln_pref.exp();
    Ok(WidthEstimate {
        value: series.overall_sign as f64 * pref * bracket.value,
        error_estimate: pref * bracket.error_estimate,
        orders_used: bracket.orders_used,
        reached_optimum: bracket.reached_optimum,
        ln_magnitude: ln_pref + bracket.value.abs().ln(),
    })
}

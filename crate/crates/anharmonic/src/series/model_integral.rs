//! A one-dimensional integral whose small-beta expansion mixes powers and
//! logarithms:
//!
//!   I(beta) = int_0^1 sqrt((w^2 + beta^2) / (1 - w^2)) dw
//!           = 1 + beta^2 { ln(4/beta)/2 + 1/4 }
//!               + beta^4 { -ln(4/beta)/16 + 3/64 }
//!               + beta^6 { 3 ln(4/beta)/128 - 3/128 } + O(beta^8 ln beta)
//!
//! The remainder scaling O(beta^8 ln beta) is what the tests probe.

use crate::error::{Error, Result};
use crate::quad;

#[derive(Debug, Clone, Copy)]
pub struct ModelIntegralCheck {
    /// Adaptive quadrature of the integral itself.
    pub numeric: f64,
    /// The expansion through the beta^6 term.
    pub expansion: f64,
    pub difference: f64,
}

/// Compare quadrature against the truncated expansion at coupling `beta`.
pub fn model_integral_check(beta: f64) -> Result<ModelIntegralCheck> {
    model_integral_check_with_tol(beta, 1e-13)
}

pub fn model_integral_check_with_tol(beta: f64, tol: f64) -> Result<ModelIntegralCheck> {
    if beta <= 0.0 {
        return Err(Error::Domain(format!("beta must be positive, got {beta}")));
    }
    if beta > 0.5 {
        return Err(Error::Domain(format!(
            "beta = {beta} outside the validated range (0, 0.5]"
        )));
    }
    let numeric = model_integral_numeric(beta, tol)?;
    let expansion = model_integral_expansion(beta);
    Ok(ModelIntegralCheck { numeric, expansion, difference: numeric - expansion })
}

/// The substitution w = sin(phi) removes the endpoint singularity at w = 1:
/// I(beta) = int_0^{pi/2} sqrt(sin^2 phi + beta^2) dphi.
pub fn model_integral_numeric(beta: f64, tol: f64) -> Result<f64> {
    let b2 = beta * beta;
    let r = quad::integrate(
        |phi: f64| (phi.sin().powi(2) + b2).sqrt(),
        0.0,
        std::f64::consts::FRAC_PI_2,
        tol.max(1e-15),
    )?;
    Ok(r.value)
}

pub fn model_integral_expansion(beta: f64) -> f64 {
    let l = (4.0 / beta).ln();
    let b2 = beta * beta;
    1.0 + b2 * (0.5 * l + 0.25)
        + b2 * b2 * (-l / 16.0 + 3.0 / 64.0)
        + b2 * b2 * b2 * (3.0 * l / 128.0 - 3.0 / 128.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beta_to_zero_limit_is_one() {
        // at beta = 0 the integral is int_0^1 w/sqrt(1-w^2) dw = 1
        let v = model_integral_numeric(1e-8, 1e-13).unwrap();
        assert!((v - 1.0).abs() < 1e-7, "got {v}");
    }

    #[test]
    fn remainder_within_printed_bound_at_beta_01() {
        let c = model_integral_check(0.1).unwrap();
        let bound = 10.0 * 0.1f64.powi(8) * 0.1f64.ln().abs();
        assert!(c.difference.abs() <= bound, "diff={} bound={}", c.difference, bound);
    }

    #[test]
    fn remainder_shrinks_with_beta() {
        let d_quarter = model_integral_check(0.25).unwrap().difference.abs();
        let d_half = model_integral_check(0.5).unwrap().difference.abs();
        assert!(d_quarter < d_half, "{d_quarter} !< {d_half}");
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(model_integral_check(0.0), Err(Error::Domain(_))));
        assert!(matches!(model_integral_check(-0.1), Err(Error::Domain(_))));
        assert!(matches!(model_integral_check(0.7), Err(Error::Domain(_))));
    }
}

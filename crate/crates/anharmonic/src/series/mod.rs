//! Exact-rational power series and summation of divergent asymptotic tails.

pub mod expansion;
pub mod interchange;
pub mod model_integral;
pub mod rational;

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
pub use rational::{rat, rat_from_str, rat_int, rat_ln_abs, rat_to_f64, rat_to_string, Rational};

/// A power series sum_{K=0}^{K_max} c_K g^K with exact rational coefficients.
/// The truncation order is explicit: `coefficients.len() = K_max + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalSeries {
    variable: String,
    coefficients: Vec<Rational>,
}

impl RationalSeries {
    pub fn new(variable: impl Into<String>, coefficients: Vec<Rational>) -> Self {
        assert!(!coefficients.is_empty(), "a series needs at least the K=0 coefficient");
        RationalSeries { variable: variable.into(), coefficients }
    }

    pub fn from_strs(variable: &str, coeffs: &[&str]) -> Result<Self> {
        let coefficients = coeffs.iter().map(|s| rat_from_str(s)).collect::<Result<Vec<_>>>()?;
        Ok(Self::new(variable, coefficients))
    }

    pub fn variable(&self) -> &str {
        &self.variable
    }

    pub fn k_max(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> Result<&Rational> {
        self.coefficients.get(k).ok_or_else(|| {
            Error::Range(format!(
                "order {k} exceeds the stored K_max = {} of the {} series",
                self.k_max(),
                self.variable
            ))
        })
    }

    fn check_order(&self, k: usize) -> Result<()> {
        if k > self.k_max() {
            return Err(Error::Range(format!(
                "truncation order {k} exceeds the stored K_max = {}",
                self.k_max()
            )));
        }
        Ok(())
    }

    /// Partial sum through order `k` at complex `g`, coefficient-by-coefficient
    /// rounding then Horner in binary64.
    pub fn eval_complex(&self, g: Complex64, k: usize) -> Result<Complex64> {
        self.check_order(k)?;
        let mut acc = Complex64::zero();
        for c in self.coefficients[..=k].iter().rev() {
            acc = acc * g + Complex64::new(rat_to_f64(c), 0.0);
        }
        Ok(acc)
    }

    pub fn eval_f64(&self, g: f64, k: usize) -> Result<f64> {
        Ok(self.eval_complex(Complex64::new(g, 0.0), k)?.re)
    }

    /// Exact-rational partial sum: a single rounding happens only when the
    /// caller converts the result.
    pub fn eval_exact(&self, g: &Rational, k: usize) -> Result<Rational> {
        self.check_order(k)?;
        let mut acc = Rational::zero();
        for c in self.coefficients[..=k].iter().rev() {
            acc = acc * g + c;
        }
        Ok(acc)
    }

    /// The individual terms c_K g^K in binary64, through order `k`.
    pub fn terms_f64(&self, g: f64, k: usize) -> Result<Vec<f64>> {
        self.check_order(k)?;
        let mut power = 1.0;
        let mut out = Vec::with_capacity(k + 1);
        for c in &self.coefficients[..=k] {
            out.push(rat_to_f64(c) * power);
            power *= g;
        }
        Ok(out)
    }
}

/// Outcome of superasymptotic (smallest-term) summation.
#[derive(Debug, Clone, Copy)]
pub struct TruncationResult {
    pub value: f64,
    /// Number of terms summed (indices 0..orders_used-1).
    pub orders_used: usize,
    /// Magnitude of the first omitted term, or of the last included term
    /// when the series was exhausted while still decreasing.
    pub error_estimate: f64,
    /// False when the terms decreased monotonically through K_max and no
    /// smallest term was bracketed.
    pub reached_optimum: bool,
}

/// Sum terms until the first index where |term| stops decreasing, i.e.
/// through the smallest-magnitude term. Ties between adjacent equal-magnitude
/// terms resolve to the earlier index so output stays deterministic.
pub fn optimal_truncation(series: &RationalSeries, g: f64) -> Result<TruncationResult> {
    if g == 0.0 {
        return Err(Error::Domain("optimal truncation needs g != 0".into()));
    }
    let terms = series.terms_f64(g, series.k_max())?;
    if terms.len() == 1 {
        return Ok(TruncationResult {
            value: terms[0],
            orders_used: 1,
            error_estimate: 0.0,
            reached_optimum: false,
        });
    }
    let mut sum = terms[0];
    for k in 0..terms.len() - 1 {
        if terms[k + 1].abs() >= terms[k].abs() {
            return Ok(TruncationResult {
                value: sum,
                orders_used: k + 1,
                error_estimate: terms[k + 1].abs(),
                reached_optimum: true,
            });
        }
        sum += terms[k + 1];
    }
    Ok(TruncationResult {
        value: sum,
        orders_used: terms.len(),
        error_estimate: terms[terms.len() - 1].abs(),
        reached_optimum: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn harmonic_cubic_head() -> RationalSeries {
        RationalSeries::new("g", vec![rat(1, 2), rat(-11, 8)])
    }

    #[test]
    fn values_are_immutable_and_thread_transferable() {
        // the concurrency contract: everything is a plain value, safe to
        // move or share across threads
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Rational>();
        assert_send_sync::<RationalSeries>();
        assert_send_sync::<TruncationResult>();
        assert_send_sync::<expansion::GeneralizedExpansion>();
        assert_send_sync::<crate::instanton::InstantonSeries>();
        assert_send_sync::<crate::spectra::ResonanceResult>();
        assert_send_sync::<crate::dispersion::ImagEnergyProfile>();
    }

    #[test]
    fn eval_at_zero_returns_leading_coefficient() {
        let s = harmonic_cubic_head();
        assert_eq!(s.eval_f64(0.0, 1).unwrap(), 0.5);
        assert_eq!(s.eval_f64(0.0, 0).unwrap(), 0.5);
        let exact = s.eval_exact(&Rational::zero(), 1).unwrap();
        assert_eq!(exact, rat(1, 2));
    }

    #[test]
    fn eval_order_out_of_range_is_an_error() {
        let s = harmonic_cubic_head();
        assert!(matches!(s.eval_f64(0.1, 2), Err(Error::Range(_))));
    }

    #[test]
    fn bracket_series_partial_sum() {
        // 1 - 169/16 * 0.01 = 0.894375 exactly representable arithmetic
        let s = RationalSeries::new("g", vec![rat(1, 1), rat(-169, 16)]);
        let v = s.eval_f64(0.01, 1).unwrap();
        assert!((v - 0.894_375).abs() < 1e-15);
    }

    #[test]
    fn exact_eval_matches_float_eval() {
        let s = RationalSeries::new(
            "g",
            vec![rat(1, 1), rat(95, 24), rat_from_str("-13259/1152").unwrap()],
        );
        let g = rat(-1, 50); // -0.02
        let exact = s.eval_exact(&g, 2).unwrap();
        // 1 + (95/24)(-1/50) - (13259/1152)(1/2500)
        let by_hand = rat(1, 1) + rat(95, 24) * rat(-1, 50) - rat_from_str("13259/1152").unwrap() * rat(1, 2500);
        assert_eq!(exact, by_hand);
        let rounded = rat_to_f64(&exact);
        let float = s.eval_f64(-0.02, 2).unwrap();
        assert!((rounded - float).abs() < 1e-15);
    }

    #[test]
    fn truncation_convergent_series_runs_to_the_end() {
        let s = RationalSeries::new("g", vec![rat(1, 1), rat(-1, 2), rat(1, 4)]);
        let r = optimal_truncation(&s, 1.0).unwrap();
        assert!(!r.reached_optimum);
        assert_eq!(r.orders_used, 3);
        assert!((r.value - 0.75).abs() < 1e-15);
        assert!((r.error_estimate - 0.25).abs() < 1e-15);
    }

    #[test]
    fn truncation_stops_at_smallest_term() {
        // terms at g=1: 1, -1/2, 1/4, 1 -> smallest is 1/4 at k=2
        let s = RationalSeries::new("g", vec![rat(1, 1), rat(-1, 2), rat(1, 4), rat(1, 1)]);
        let r = optimal_truncation(&s, 1.0).unwrap();
        assert!(r.reached_optimum);
        assert_eq!(r.orders_used, 3);
        assert!((r.value - 0.75).abs() < 1e-15);
        assert!((r.error_estimate - 1.0).abs() < 1e-15);
    }

    #[test]
    fn truncation_tie_resolves_to_earlier_index() {
        // |t1| == |t2|: stop after t1
        let s = RationalSeries::new("g", vec![rat(1, 1), rat(1, 2), rat(-1, 2), rat(1, 8)]);
        let r = optimal_truncation(&s, 1.0).unwrap();
        assert!(r.reached_optimum);
        assert_eq!(r.orders_used, 2);
        assert!((r.value - 1.5).abs() < 1e-15);
    }

    #[test]
    fn truncation_single_term() {
        let s = RationalSeries::new("g", vec![rat(7, 2)]);
        let r = optimal_truncation(&s, 0.3).unwrap();
        assert_eq!(r.orders_used, 1);
        assert_eq!(r.value, 3.5);
        assert_eq!(r.error_estimate, 0.0);
        assert!(!r.reached_optimum);
    }

    #[test]
    fn truncation_rejects_zero_coupling() {
        let s = harmonic_cubic_head();
        assert!(matches!(optimal_truncation(&s, 0.0), Err(Error::Domain(_))));
    }

    #[test]
    fn truncation_error_bounds_adjacent_partial_sums() {
        // at the smallest term, |t_k| <= |t_{k+1}| = error_estimate, so the
        // estimate bounds the distance to both neighbouring truncations
        let s = RationalSeries::new(
            "g",
            vec![rat(1, 1), rat(-169, 16), rat_from_str("-44507/512").unwrap(), rat_from_str("-86071851/40960").unwrap()],
        );
        let g = 0.06;
        let r = optimal_truncation(&s, g).unwrap();
        assert!(r.reached_optimum);
        let k = r.orders_used - 1;
        let later = s.eval_f64(g, k + 1).unwrap();
        assert!((later - r.value).abs() <= r.error_estimate * (1.0 + 1e-12));
        let earlier = s.eval_f64(g, k - 1).unwrap();
        assert!((earlier - r.value).abs() <= r.error_estimate * (1.0 + 1e-12));
    }
}

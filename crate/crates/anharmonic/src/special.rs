//! Log-gamma, factorials and the Euler Beta function.
//!
//! Large-order asymptotics need Gamma functions of arguments up to a few
//! hundred; everything is evaluated through `ln_gamma` so that quantities
//! like Gamma(K + 1/2) * 30^K never overflow before the caller decides how
//! to combine exponents.

/// Lanczos coefficients for g = 7, n = 9 (about 15 significant digits).
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFF: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// ln Gamma(x) for x > 0.
pub fn ln_gamma(x: f64) -> f64 {
    assert!(x > 0.0, "ln_gamma requires a positive argument, got {x}");
    if x < 0.5 {
        // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = LANCZOS_COEFF[0];
    for (i, c) in LANCZOS_COEFF.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

pub fn gamma(x: f64) -> f64 {
    ln_gamma(x).exp()
}

/// ln(n!)
pub fn ln_factorial(n: u64) -> f64 {
    ln_gamma(n as f64 + 1.0)
}

/// Euler Beta function B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y).
pub fn beta(x: f64, y: f64) -> f64 {
    (ln_gamma(x) + ln_gamma(y) - ln_gamma(x + y)).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_at_half_integers() {
        let sqrt_pi = std::f64::consts::PI.sqrt();
        assert!((gamma(0.5) - sqrt_pi).abs() < 1e-14);
        assert!((gamma(1.5) - 0.5 * sqrt_pi).abs() < 1e-14);
        assert!((gamma(2.5) - 0.75 * sqrt_pi).abs() < 1e-14);
    }

    #[test]
    fn gamma_matches_factorials() {
        let mut fact = 1.0;
        for n in 1..15u64 {
            fact *= n as f64;
            let rel = (gamma(n as f64 + 1.0) - fact).abs() / fact;
            assert!(rel < 1e-13, "n={n} rel={rel}");
        }
    }

    #[test]
    fn ln_gamma_recurrence_oracle() {
        // ln Gamma(x+1) = ln x + ln Gamma(x), chained from Gamma(1/2) = sqrt(pi)
        let mut expected = 0.5 * std::f64::consts::PI.ln();
        let mut x = 0.5;
        while x < 120.0 {
            let got = ln_gamma(x);
            assert!(
                (got - expected).abs() < 1e-11 * expected.abs().max(1.0),
                "x={x} got={got} expected={expected}"
            );
            expected += x.ln();
            x += 1.0;
        }
    }

    #[test]
    fn beta_small_integers() {
        // B(3,3) = 1/30, B(2,2) = 1/6
        assert!((beta(3.0, 3.0) - 1.0 / 30.0).abs() < 1e-15);
        assert!((beta(2.0, 2.0) - 1.0 / 6.0).abs() < 1e-15);
    }
}

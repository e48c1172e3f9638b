//! Independent low-order check: textbook Rayleigh-Schrodinger sums over
//! intermediate harmonic-oscillator states.
//!
//! Individual matrix elements of x carry square roots, but organizing the
//! recursion in the unnormalized ladder basis |j) = (a+)^j |0> makes every
//! intermediate quantity rational: x |j) = ( j |j-1) + |j+1) ) / sqrt(2),
//! and the accumulated 2^{-1/2} factors are tracked as a single power that
//! is integral whenever an energy coefficient can be nonzero.
//!
//! Kept deliberately separate from the position-space recursion in the
//! parent module -- different basis, different operators -- so exact
//! agreement between the two is a meaningful cross-check.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::oscillator::OscillatorSpec;
use crate::series::{Rational, RationalSeries};

/// Highest order in g the oracle will compute; the sums grow factorially.
pub const ORACLE_MAX_ORDER: usize = 4;

/// Apply the integer ladder operator Xhat = a + a+ in the unnormalized
/// basis: (Xhat v)_i = (i+1) v_{i+1} + v_{i-1}. The physical x is
/// Xhat / sqrt(2); powers of sqrt(2) are accounted for by the caller.
fn apply_ladder(v: &[Rational]) -> Vec<Rational> {
    let dim = v.len();
    let mut out = vec![Rational::zero(); dim];
    for (i, slot) in out.iter_mut().enumerate() {
        let mut acc = Rational::zero();
        if i + 1 < dim {
            acc += &v[i + 1] * Rational::from_integer(BigInt::from(i as u64 + 1));
        }
        if i >= 1 {
            acc += &v[i - 1];
        }
        *slot = acc;
    }
    out
}

/// Energy coefficients through order `k_max` in g via sums over intermediate
/// states. Refuses k_max > 4.
pub fn oracle_rs_coefficients(spec: &OscillatorSpec, k_max: usize) -> Result<RationalSeries> {
    spec.validate()?;
    if k_max > ORACLE_MAX_ORDER {
        return Err(Error::Range(format!(
            "the sum-over-states oracle is limited to K_max <= {ORACLE_MAX_ORDER}, got {k_max}"
        )));
    }
    let m_deg = spec.degree_m as usize;
    let n = spec.level_n as usize;
    let lambda_orders = k_max * spec.lambda_per_g();
    let dim = n + lambda_orders.max(1) * m_deg + 1;

    // raw wavefunction layers: the true coefficients carry an extra
    // 2^{-k M / 2} that is reinstated when extracting energies
    let mut psi: Vec<Vec<Rational>> = Vec::with_capacity(lambda_orders + 1);
    let mut unperturbed = vec![Rational::zero(); dim];
    unperturbed[n] = Rational::from_integer(1.into());
    psi.push(unperturbed);
    let mut energies_raw: Vec<Rational> = vec![Rational::zero(); lambda_orders + 1];

    for k in 1..=lambda_orders {
        // w = Xhat^M psi^{(k-1)}
        let mut w = psi[k - 1].clone();
        for _ in 0..m_deg {
            w = apply_ladder(&w);
        }
        // solvability at the unperturbed level
        energies_raw[k] = w[n].clone();
        // remaining components: (j - n) b_j = -w_j + sum_{j'<k} e_{j'} b_j^{(k-j')}
        let mut layer = vec![Rational::zero(); dim];
        for j in 0..dim {
            if j == n {
                continue; // intermediate normalization
            }
            let mut acc = -w[j].clone();
            for jp in 1..k {
                if !energies_raw[jp].is_zero() && !psi[k - jp][j].is_zero() {
                    acc += &energies_raw[jp] * &psi[k - jp][j];
                }
            }
            layer[j] = acc / Rational::from_integer(BigInt::from(j as i64 - n as i64));
        }
        psi.push(layer);
    }

    // reinstate the 2^{-k M / 2} scale and keep only integer powers of g
    let step = spec.lambda_per_g();
    let mut coeffs = Vec::with_capacity(k_max + 1);
    coeffs.push(Rational::new(BigInt::from(2 * n as u64 + 1), BigInt::from(2)));
    for big_k in 1..=k_max {
        let k = big_k * step;
        let half_powers = k * m_deg; // exponent of sqrt(2) to divide out
        assert!(
            half_powers % 2 == 0,
            "energy coefficients appear only at integer powers of 2"
        );
        let scale = Rational::new(BigInt::from(1), BigInt::from(2).pow(half_powers as u32 / 2));
        coeffs.push(&energies_raw[k] * scale);
    }
    // odd-lambda corrections must vanish identically for sqrt couplings
    if step == 2 {
        for (k, e) in energies_raw.iter().enumerate() {
            if k % 2 == 1 {
                assert!(e.is_zero(), "odd-order raw energy at lambda^{k} must vanish");
            }
        }
    }
    Ok(RationalSeries::new("g", coeffs))
}

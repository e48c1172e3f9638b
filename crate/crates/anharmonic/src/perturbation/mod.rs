//! Exact Rayleigh-Schrodinger coefficients from a power-series recursion.
//!
//! Writing psi = exp(-x^2/2) sum_k lambda^k P_k(x) with P_0 the n-th
//! Hermite polynomial and E = sum_k lambda^k e_k turns the eigenvalue
//! equation for H = -d^2/dx^2 / 2 + x^2/2 + lambda x^M into a triangular
//! system per layer k:
//!
//!   L[P_k] = -x^M P_{k-1} + sum_{j=1..k} e_j P_{k-j},
//!   L[x^m] = (m - n) x^m - m(m-1)/2 x^{m-2}.
//!
//! Solving top-down in the monomial degree m, the vanishing diagonal at
//! m = n fixes e_k (solvability) and intermediate normalization sets the
//! x^n coefficient of every higher layer to zero. All arithmetic is exact
//! rational; no square roots enter.
//!
//! lambda = sqrt(g) for odd degrees and lambda = g for even ones, so the
//! energy series in g reads eps_{n,K} = e_{2K} (odd) or e_K (even). For odd
//! degrees every odd-lambda correction must vanish identically, which the
//! recursion asserts.

pub mod oracle;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::oscillator::{CouplingConvention, OscillatorSpec};
use crate::series::{rat_int, Rational, RationalSeries};

/// One layer of the wavefunction ansatz: the polynomial multiplying the
/// Gaussian at order lambda^k.
#[derive(Debug, Clone)]
pub struct WavefunctionLayer {
    pub order_k: usize,
    /// Dense monomial coefficients, index = power of x.
    pub polynomial_coefficients: Vec<Rational>,
}

impl WavefunctionLayer {
    pub fn degree(&self) -> usize {
        self.polynomial_coefficients
            .iter()
            .rposition(|c| !c.is_zero())
            .unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct RecursionOptions {
    /// Cap on the requested order in g.
    pub max_order_g: usize,
    /// Cap on the intermediate polynomial degree.
    pub max_degree: usize,
}

impl Default for RecursionOptions {
    fn default() -> Self {
        RecursionOptions { max_order_g: 200, max_degree: 1000 }
    }
}

/// Physicists' Hermite polynomial H_n as integer monomial coefficients.
fn hermite(n: u32) -> Vec<Rational> {
    let mut prev = vec![rat_int(1)]; // H_0
    if n == 0 {
        return prev;
    }
    let mut cur = vec![rat_int(0), rat_int(2)]; // H_1
    for m in 1..n as usize {
        // H_{m+1} = 2 x H_m - 2 m H_{m-1}
        let mut next = vec![Rational::zero(); m + 2];
        for (p, c) in cur.iter().enumerate() {
            next[p + 1] += c * rat_int(2);
        }
        for (p, c) in prev.iter().enumerate() {
            next[p] -= c * rat_int(2 * m as i64);
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// Energy coefficients of the degree-M oscillator at level n, exact through
/// order `k_max` in g.
pub fn perturb_coefficients(spec: &OscillatorSpec, k_max: usize) -> Result<RationalSeries> {
    perturb_coefficients_with(spec, k_max, RecursionOptions::default()).map(|(s, _)| s)
}

/// Same as [`perturb_coefficients`] but also returns the wavefunction layers.
pub fn perturb_coefficients_with(
    spec: &OscillatorSpec,
    k_max: usize,
    opts: RecursionOptions,
) -> Result<(RationalSeries, Vec<WavefunctionLayer>)> {
    spec.validate()?;
    if k_max > opts.max_order_g {
        return Err(Error::ResourceGuard(format!(
            "requested order {k_max} exceeds the configured cap {}",
            opts.max_order_g
        )));
    }
    let m_deg = spec.degree_m as usize;
    let n = spec.level_n as usize;
    let layers_needed = k_max * spec.lambda_per_g();
    let top_degree = layers_needed * m_deg + n;
    if top_degree > opts.max_degree {
        return Err(Error::ResourceGuard(format!(
            "intermediate polynomial degree {top_degree} exceeds the configured cap {}",
            opts.max_degree
        )));
    }

    let h_n = hermite(spec.level_n);
    let lead = h_n[n].clone(); // 2^n
    let mut layers: Vec<Vec<Rational>> = vec![h_n];
    let mut energies: Vec<Rational> = vec![rat_int(n as i64) + Rational::new(1.into(), 2.into())];

    for k in 1..=layers_needed {
        let deg = k * m_deg + n;
        // R_k without the unknown e_k H_n piece
        let mut rhs = vec![Rational::zero(); deg + 1];
        for (p, c) in layers[k - 1].iter().enumerate() {
            if !c.is_zero() {
                rhs[p + m_deg] -= c;
            }
        }
        for j in 1..k {
            if energies[j].is_zero() {
                continue;
            }
            for (p, c) in layers[k - j].iter().enumerate() {
                if !c.is_zero() {
                    rhs[p] += &energies[j] * c;
                }
            }
        }

        // top-down solve of (m-n) p_m - (m+2)(m+1)/2 p_{m+2} = r_m
        let mut poly = vec![Rational::zero(); deg + 1];
        for m in (n + 1..=deg).rev() {
            let mut r = rhs[m].clone();
            if m + 2 <= deg {
                r += &poly[m + 2] * Rational::new(((m + 2) * (m + 1)).into(), 2.into());
            }
            poly[m] = r / rat_int(m as i64 - n as i64);
        }
        // solvability at m = n fixes e_k; p_n stays zero
        let mut r_n = rhs[n].clone();
        if n + 2 <= deg {
            r_n += &poly[n + 2] * Rational::new(((n + 2) * (n + 1)).into(), 2.into());
        }
        let e_k = -r_n / &lead;
        for m in (0..n).rev() {
            let mut r = rhs[m].clone() + &e_k * &layers[0][m];
            if m + 2 <= deg {
                r += &poly[m + 2] * Rational::new(((m + 2) * (m + 1)).into(), 2.into());
            }
            poly[m] = r / rat_int(m as i64 - n as i64);
        }

        if spec.convention == CouplingConvention::OddSqrt && k % 2 == 1 {
            assert!(
                e_k.is_zero(),
                "odd-order energy correction e_{k} = {e_k} must vanish for the sqrt-coupling convention"
            );
        }
        energies.push(e_k);
        layers.push(poly);
    }

    let step = spec.lambda_per_g();
    let coeffs: Vec<Rational> = (0..=k_max).map(|kk| energies[kk * step].clone()).collect();
    debug_assert_eq!(coeffs[0], rat_int(n as i64) + Rational::new(1.into(), 2.into()));
    let layer_structs = layers
        .into_iter()
        .enumerate()
        .map(|(k, polynomial_coefficients)| WavefunctionLayer { order_k: k, polynomial_coefficients })
        .collect();
    Ok((RationalSeries::new("g", coeffs), layer_structs))
}

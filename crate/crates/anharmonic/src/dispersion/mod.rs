//! Once-subtracted dispersion reconstruction of real energies from
//! imaginary parts.
//!
//! For the cubic the relation reads
//!
//!   eps_n(g) = n + 1/2 + (g/pi) int_0^inf Im eps_n(s + i0) / (s (s - g)) ds,
//!
//! and the quartic integrates over s in (-inf, 0); substituting s -> -s maps
//! it onto the same positive-axis engine, so one implementation serves both.
//! The integrand is assembled from three pieces: an instanton-series head
//! below the first grid node, a monotone-cubic interpolation of spectrally
//! computed nodes (log-log coordinates), and a strong-coupling power tail.
//! The pole at s = g is handled by principal-value subtraction on the
//! bracketing panel.

pub mod interp;
pub mod large_order;

use crate::error::{Error, Result};
use crate::instanton::width_optimal_truncation;
use crate::quad;
use interp::MonotoneCubic;

pub use large_order::{
    bender_wu_asymptotic, bender_wu_asymptotic_ln, coefficient_ratio, ratio_row, LargeOrderModel,
};

/// How a spectrally sampled profile is laid out.
#[derive(Debug, Clone)]
pub struct ProfileOptions {
    /// Number of log-spaced grid nodes.
    pub nodes: usize,
    /// Grid range in the mirrored coordinate.
    pub sigma_min: f64,
    pub sigma_max: f64,
    /// Basis size and rotation angle for the per-node eigensolves.
    pub basis_n: usize,
    pub theta: f64,
    pub crossover_tolerance: f64,
}

impl ProfileOptions {
    /// Defaults per oscillator: the cubic grid reaches down to s = 0.005
    /// (widths ~2e-11, still spectrally resolvable); the quartic's
    /// exponential exp(1/(3g)) dives under the binary64 eigensolve floor
    /// sooner, so its grid starts at 0.02.
    pub fn for_degree(degree_m: u32) -> Self {
        ProfileOptions {
            nodes: 40,
            sigma_min: if degree_m % 2 == 1 { 0.005 } else { 0.02 },
            sigma_max: 50.0,
            basis_n: 256,
            theta: if degree_m % 2 == 1 { 0.4 } else { 0.35 },
            crossover_tolerance: DEFAULT_CROSSOVER_TOLERANCE,
        }
    }
}

/// Sample Im energies over a log-spaced grid with the spectral module and
/// assemble the dispersion profile.
pub fn build_profile_spectral(
    degree_m: u32,
    level_n: u32,
    opts: &ProfileOptions,
) -> Result<ImagEnergyProfile> {
    let sign = if degree_m % 2 == 1 { 1.0 } else { -1.0 };
    let ratio = opts.sigma_max / opts.sigma_min;
    let mut grid = Vec::with_capacity(opts.nodes);
    let mut values = Vec::with_capacity(opts.nodes);
    for i in 0..opts.nodes {
        let sigma = opts.sigma_min * ratio.powf(i as f64 / (opts.nodes - 1) as f64);
        let spec = crate::oscillator::OscillatorSpec::new(degree_m, level_n)?
            .with_coupling(sign * sigma);
        let r = crate::spectra::resonance_energy(&spec, level_n, opts.basis_n, opts.theta)?;
        grid.push(sigma);
        values.push(r.energy.im);
    }
    ImagEnergyProfile::from_nodes(degree_m, level_n, grid, values, opts.crossover_tolerance)
}

/// Fraction by which head/tail models may disagree with the grid endpoints
/// before profile construction aborts.
pub const DEFAULT_CROSSOVER_TOLERANCE: f64 = 0.05;

/// Tabulated Im energy along the unstable axis, in mirrored coordinates:
/// sigma = g for the cubic, sigma = -g for the quartic, so the grid is
/// always positive and ascending.
#[derive(Debug, Clone)]
pub struct ImagEnergyProfile {
    pub degree_m: u32,
    pub level_n: u32,
    grid: Vec<f64>,
    values: Vec<f64>,
    /// ln(-Im) against ln(sigma); absent for the identically-zero profile.
    interp: Option<MonotoneCubic>,
    tail_coeff: f64,
    tail_exponent: f64,
}

/// Strong-coupling growth exponent of |Im E| in the mirrored coordinate:
/// 1/(M+2) for odd degrees (sqrt-coupling), 2/(M+2) for even ones.
pub fn strong_coupling_exponent(degree_m: u32) -> f64 {
    if degree_m % 2 == 1 {
        1.0 / (degree_m as f64 + 2.0)
    } else {
        2.0 / (degree_m as f64 + 2.0)
    }
}

impl ImagEnergyProfile {
    /// Assemble a profile from grid nodes and Im values (both in mirrored
    /// coordinates, values strictly negative). Construction verifies that
    /// the instanton head and the power tail match the grid endpoints to
    /// `crossover_tol` relative, and aborts otherwise rather than feeding a
    /// discontinuous integrand to the dispersion integral.
    pub fn from_nodes(
        degree_m: u32,
        level_n: u32,
        grid: Vec<f64>,
        values: Vec<f64>,
        crossover_tol: f64,
    ) -> Result<Self> {
        if grid.len() != values.len() || grid.len() < 4 {
            return Err(Error::Domain("profile needs >= 4 matched nodes".into()));
        }
        if grid[0] <= 0.0 || grid.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Domain("profile grid must be positive and strictly increasing".into()));
        }
        // the harmonic (identically-zero) profile is a legitimate degenerate
        // case: no head, no tail, integral exactly zero
        if values.iter().all(|v| *v == 0.0) {
            return Ok(ImagEnergyProfile {
                degree_m,
                level_n,
                grid,
                values,
                interp: None,
                tail_coeff: 0.0,
                tail_exponent: strong_coupling_exponent(degree_m),
            });
        }
        if values.iter().any(|v| *v >= 0.0) {
            return Err(Error::Domain(
                "profile Im values must be strictly negative (widths carry Im < 0)".into(),
            ));
        }
        let ln_s: Vec<f64> = grid.iter().map(|s| s.ln()).collect();
        let ln_w: Vec<f64> = values.iter().map(|v| (-v).ln()).collect();
        let interp = Some(MonotoneCubic::new(ln_s, ln_w)?);

        let p = strong_coupling_exponent(degree_m);
        let last = grid.len() - 1;
        let tail_coeff = values[last] / grid[last].powf(p);
        let profile = ImagEnergyProfile {
            degree_m,
            level_n,
            grid,
            values,
            interp,
            tail_coeff,
            tail_exponent: p,
        };

        // head continuity at the first node
        let head = profile.head_value(profile.grid[0])?;
        let rel = (head - profile.values[0]).abs() / profile.values[0].abs();
        if rel > crossover_tol {
            return Err(Error::Domain(format!(
                "instanton head mismatches the first grid node by {:.1}% (> {:.0}%); move s_1 or refine the spectra",
                rel * 100.0,
                crossover_tol * 100.0
            )));
        }
        // tail shape against the second-to-last node
        let tail_prev = profile.tail_value(profile.grid[last - 1]);
        let rel = (tail_prev - profile.values[last - 1]).abs() / profile.values[last - 1].abs();
        if rel > crossover_tol {
            return Err(Error::Domain(format!(
                "strong-coupling tail mismatches the grid by {:.1}% (> {:.0}%); extend s_P",
                rel * 100.0,
                crossover_tol * 100.0
            )));
        }
        Ok(profile)
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    fn is_zero(&self) -> bool {
        self.interp.is_none()
    }

    /// Instanton-series width at mirrored coordinate sigma (optimal
    /// truncation of the bracket).
    fn head_value(&self, sigma: f64) -> Result<f64> {
        if self.is_zero() {
            return Ok(0.0);
        }
        let g = if self.degree_m % 2 == 1 { sigma } else { -sigma };
        Ok(width_optimal_truncation(self.degree_m, self.level_n, g)?.value)
    }

    fn tail_value(&self, sigma: f64) -> f64 {
        self.tail_coeff * sigma.powf(self.tail_exponent)
    }

    fn grid_value(&self, sigma: f64) -> f64 {
        match &self.interp {
            Some(interp) => -interp.eval(sigma.ln()).exp(),
            None => 0.0,
        }
    }

    /// Im at any positive sigma: head below the grid, interpolation inside,
    /// power tail above.
    pub fn imag_at(&self, sigma: f64) -> Result<f64> {
        if sigma <= 0.0 {
            return Err(Error::Domain("mirrored coordinate must be positive".into()));
        }
        if sigma < self.grid[0] {
            self.head_value(sigma)
        } else if sigma > self.grid[self.grid.len() - 1] {
            Ok(self.tail_value(sigma))
        } else {
            Ok(self.grid_value(sigma))
        }
    }
}

/// Real energy at coupling `g` from the once-subtracted dispersion integral
/// over the profile. `g` must map inside the grid range (the head and tail
/// models are not trusted to carry the pole).
pub fn reconstruct_real_energy(profile: &ImagEnergyProfile, level_n: u32, g: f64) -> Result<f64> {
    if level_n != profile.level_n {
        return Err(Error::Domain(format!(
            "profile holds level {} but level {level_n} was requested",
            profile.level_n
        )));
    }
    let odd = profile.degree_m % 2 == 1;
    if odd && g <= 0.0 {
        return Err(Error::Domain("cubic reconstruction needs g > 0".into()));
    }
    if !odd && g >= 0.0 {
        return Err(Error::Domain("quartic reconstruction needs g < 0".into()));
    }
    let tau = if odd { g } else { -g };
    let first = profile.grid[0];
    let last = profile.grid[profile.grid.len() - 1];
    if tau <= first || tau >= last {
        return Err(Error::Domain(format!(
            "coupling magnitude {tau} outside the profile grid ({first}, {last}); the pole must sit on tabulated data"
        )));
    }
    for s in &profile.grid {
        if (tau - s).abs() < 1e-9 * tau {
            return Err(Error::Domain(format!(
                "coupling magnitude {tau} sits in the singular neighborhood of grid node {s}"
            )));
        }
    }
    if profile.is_zero() {
        return Ok(level_n as f64 + 0.5);
    }

    let tol = 1e-11;
    let mut total = 0.0;

    // head: analytic instanton form, integrated up to the first node; below
    // action/700 the exponential factor is under 1e-304
    let action = crate::series::rat_to_f64(
        &crate::instanton::decay_width_series(profile.degree_m, profile.level_n)?.action,
    );
    let s_min = (action / 700.0).min(first * 0.5);
    let head = quad::integrate(
        |s| match profile.head_value(s) {
            Ok(w) => w / (s * (s - tau)),
            Err(_) => 0.0,
        },
        s_min,
        first,
        tol,
    )?;
    total += head.value;

    // grid panels; principal-value subtraction on the one bracketing tau
    for i in 0..profile.grid.len() - 1 {
        let (lo, hi) = (profile.grid[i], profile.grid[i + 1]);
        if lo < tau && tau < hi {
            let phi = |s: f64| profile.grid_value(s) / s;
            let phi_tau = phi(tau);
            let regular = quad::integrate(
                |s| {
                    if (s - tau).abs() < 1e-9 * tau {
                        // remove the 0/0: slope of phi at the pole
                        let h = 1e-6 * tau;
                        (phi(tau + h) - phi(tau - h)) / (2.0 * h)
                    } else {
                        (phi(s) - phi_tau) / (s - tau)
                    }
                },
                lo,
                hi,
                tol,
            )?;
            total += regular.value + phi_tau * ((hi - tau) / (tau - lo)).ln();
        } else {
            let r = quad::integrate(|s| profile.grid_value(s) / (s * (s - tau)), lo, hi, tol)?;
            total += r.value;
        }
    }

    // tail: substitute s = last/u so (last, inf) maps to (0, 1)
    let tail = quad::integrate(
        |u| {
            let s = last / u;
            profile.tail_value(s) / (s * (s - tau)) * last / (u * u)
        },
        0.0,
        1.0,
        tol,
    )?;
    total += tail.value;

    Ok(level_n as f64 + 0.5 + tau / std::f64::consts::PI * total)
}

//! Resonance eigenvalues from complex-rotated Hamiltonians in the
//! harmonic-oscillator basis.
//!
//! Complex scaling x -> x e^{i theta} maps the Hamiltonian onto
//!
//!   H_theta = e^{-2 i theta} p^2/2 + e^{2 i theta} x^2/2
//!               + coupling e^{i M theta} x^M,
//!
//! whose matrix in the first N oscillator states is complex symmetric.
//! Resonances appear as theta-independent complex eigenvalues with
//! Im E < 0 for theta > 0, uncovered once the rotation exceeds half the
//! resonance phase. Eigenvalue selection tracks a short homotopy in the
//! coupling from g/8 up to g, seeded by overlap with the rotated harmonic
//! state, which avoids the level-crossing misidentification that plain
//! overlap selection suffers at stronger couplings.

pub mod strong_coupling;

use faer::Mat;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::oscillator::{CouplingConvention, OscillatorSpec};

pub use strong_coupling::{strong_coupling_leading, StrongCouplingResult};

/// Symmetric banded matrix stored by diagonal offset (0..=bandwidth).
#[derive(Debug, Clone)]
pub(crate) struct SymBand {
    n: usize,
    /// diags[d][i] = A[i][i+d]
    diags: Vec<Vec<f64>>,
}

impl SymBand {
    fn bandwidth(&self) -> usize {
        self.diags.len() - 1
    }

    fn get(&self, i: usize, j: usize) -> f64 {
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        let d = hi - lo;
        if d >= self.diags.len() {
            0.0
        } else {
            self.diags[d][lo]
        }
    }

    /// Product of two symmetric bands that commute (powers of one matrix),
    /// so the result is symmetric again.
    fn mul(&self, other: &SymBand) -> SymBand {
        let n = self.n;
        let bw = self.bandwidth() + other.bandwidth();
        let mut diags = Vec::with_capacity(bw + 1);
        for d in 0..=bw {
            let mut diag = vec![0.0; n.saturating_sub(d)];
            for (i, slot) in diag.iter_mut().enumerate() {
                let j = i + d;
                let k_lo = i.saturating_sub(self.bandwidth()).max(j.saturating_sub(other.bandwidth()));
                let k_hi = (i + self.bandwidth()).min(j + other.bandwidth()).min(n - 1);
                let mut acc = 0.0;
                for k in k_lo..=k_hi {
                    acc += self.get(i, k) * other.get(k, j);
                }
                *slot = acc;
            }
            diags.push(diag);
        }
        SymBand { n, diags }
    }
}

/// Position operator x = (a + a+)/sqrt(2 omega) in an oscillator basis of
/// frequency omega.
pub(crate) fn position_band(n: usize, omega: f64) -> SymBand {
    let scale = 1.0 / (2.0 * omega).sqrt();
    let off1: Vec<f64> = (0..n - 1).map(|m| scale * ((m + 1) as f64).sqrt()).collect();
    SymBand { n, diags: vec![vec![0.0; n], off1] }
}

/// x^M by repeated band multiplication; the result has bandwidth M.
pub(crate) fn power_band(n: usize, omega: f64, m: u32) -> SymBand {
    let x = position_band(n, omega);
    let mut acc = x.clone();
    for _ in 1..m {
        acc = acc.mul(&x);
    }
    debug_assert_eq!(acc.bandwidth(), m as usize);
    acc
}

/// Kinetic term p^2/2 for basis frequency omega:
/// diag omega (2m+1)/4, second off-diagonal -omega sqrt((m+1)(m+2))/4.
pub(crate) fn kinetic_band(n: usize, omega: f64) -> SymBand {
    let diag: Vec<f64> = (0..n).map(|m| omega * (2 * m + 1) as f64 / 4.0).collect();
    let off1 = vec![0.0; n - 1];
    let off2: Vec<f64> =
        (0..n - 2).map(|m| -omega * (((m + 1) * (m + 2)) as f64).sqrt() / 4.0).collect();
    SymBand { n, diags: vec![diag, off1, off2] }
}

/// Exact operator elements of x^2 (not the truncated band square, whose
/// boundary rows differ): diag (2m+1)/(2 omega), off2 sqrt((m+1)(m+2))/(2 omega).
/// Used for the harmonic part so the coupling-free Hamiltonian is exact.
pub(crate) fn harmonic_x2_band(n: usize, omega: f64) -> SymBand {
    let diag: Vec<f64> = (0..n).map(|m| (2 * m + 1) as f64 / (2.0 * omega)).collect();
    let off1 = vec![0.0; n - 1];
    let off2: Vec<f64> =
        (0..n - 2).map(|m| (((m + 1) * (m + 2)) as f64).sqrt() / (2.0 * omega)).collect();
    SymBand { n, diags: vec![diag, off1, off2] }
}

/// Dense complex-symmetric matrix of the rotated Hamiltonian in the first
/// `n_basis` harmonic states. The coupling enters as sqrt(g) for odd
/// degrees (principal branch, so negative g gives a purely imaginary,
/// PT-symmetric coupling) and as g itself for even degrees.
pub fn build_hamiltonian(spec: &OscillatorSpec, theta: f64, n_basis: usize) -> Result<Mat<Complex64>> {
    spec.validate()?;
    if n_basis < 16 {
        return Err(Error::Domain(format!("basis size must be >= 16, got {n_basis}")));
    }
    if !(-std::f64::consts::FRAC_PI_2..=std::f64::consts::FRAC_PI_2).contains(&theta)
        || theta.abs() >= std::f64::consts::FRAC_PI_2
    {
        return Err(Error::Domain(format!(
            "rotation angle must lie in (-pi/2, pi/2), got {theta}"
        )));
    }
    let g = spec.coupling_g.unwrap_or(0.0);
    let coupling = match spec.convention {
        CouplingConvention::OddSqrt => Complex64::new(g, 0.0).sqrt(),
        CouplingConvention::EvenPower => Complex64::new(g, 0.0),
    };
    let m_deg = spec.degree_m;

    let kin = kinetic_band(n_basis, 1.0);
    let x2 = harmonic_x2_band(n_basis, 1.0);
    let xm = power_band(n_basis, 1.0, m_deg);

    let phase_kin = Complex64::from_polar(1.0, -2.0 * theta);
    let phase_x2 = Complex64::from_polar(1.0, 2.0 * theta);
    let phase_xm = Complex64::from_polar(1.0, m_deg as f64 * theta) * coupling;

    let h = Mat::<Complex64>::from_fn(n_basis, n_basis, |i, j| {
        phase_kin * kin.get(i, j) + phase_x2 * 0.5 * x2.get(i, j) + phase_xm * xm.get(i, j)
    });
    // complex symmetric by construction; the band storage guarantees it
    for i in 0..n_basis {
        for j in i + 1..n_basis {
            assert_eq!(h[(i, j)], h[(j, i)], "Hamiltonian must be complex symmetric");
        }
    }
    Ok(h)
}

/// Dense non-Hermitian eigendecomposition: (eigenvalues, eigenvector columns).
pub(crate) fn eigen_dense(h: &Mat<Complex64>) -> Result<(Vec<Complex64>, Mat<Complex64>)> {
    let evd = h
        .eigen()
        .map_err(|e| Error::NonConverged(format!("dense eigendecomposition failed: {e:?}")))?;
    let n = h.nrows();
    let vals: Vec<Complex64> = (0..n).map(|i| evd.S()[i]).collect();
    Ok((vals, evd.U().to_owned()))
}

/// Squared Hermitian overlap |<u, v>|^2 / (|u|^2 |v|^2), in (0, 1].
fn squared_overlap(u: &[Complex64], v: &[Complex64]) -> f64 {
    let mut dot = Complex64::new(0.0, 0.0);
    let mut nu = 0.0;
    let mut nv = 0.0;
    for (a, b) in u.iter().zip(v) {
        dot += a.conj() * b;
        nu += a.norm_sqr();
        nv += b.norm_sqr();
    }
    dot.norm_sqr() / (nu * nv)
}

fn column(mat: &Mat<Complex64>, k: usize) -> Vec<Complex64> {
    (0..mat.nrows()).map(|i| mat[(i, k)]).collect()
}

/// Eigenvector of the coupling-free rotated Hamiltonian belonging to the
/// eigenvalue nearest n + 1/2: the rotated harmonic state in this basis.
fn rotated_harmonic_state(
    spec: &OscillatorSpec,
    level_n: u32,
    theta: f64,
    n_basis: usize,
) -> Result<Vec<Complex64>> {
    let mut free = *spec;
    free.coupling_g = None;
    let h0 = build_hamiltonian(&free, theta, n_basis)?;
    let (vals, vecs) = eigen_dense(&h0)?;
    let target = level_n as f64 + 0.5;
    let idx = vals
        .iter()
        .enumerate()
        .min_by(|a, b| {
            (a.1 - target).norm().partial_cmp(&(b.1 - target).norm()).unwrap()
        })
        .map(|(i, _)| i)
        .expect("nonempty spectrum");
    Ok(column(&vecs, idx))
}

#[derive(Debug, Clone, Copy)]
pub struct ResonanceResult {
    pub energy: Complex64,
    pub level_n: u32,
    pub basis_size_n: usize,
    pub rotation_theta: f64,
    /// |energy(N) - energy(N/2)| under basis halving.
    pub stability: f64,
    /// Squared overlap of the selected eigenvector with the rotated
    /// harmonic state n, at the final coupling.
    pub overlap: f64,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct SolverOptions {
    /// Geometric homotopy steps from g/2^{steps-1} up to g.
    pub homotopy_steps: usize,
    /// Convergence flag threshold on the stability estimate.
    pub stability_threshold: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { homotopy_steps: 4, stability_threshold: 1e-7 }
    }
}

/// Resonance (or PT-real) eigenvalue of the oscillator at its coupling,
/// tracked from small coupling by overlap seeding plus nearest-neighbor
/// continuation, with a basis-halving stability estimate.
pub fn resonance_energy(
    spec: &OscillatorSpec,
    level_n: u32,
    n_basis: usize,
    theta: f64,
) -> Result<ResonanceResult> {
    resonance_energy_with(spec, level_n, n_basis, theta, SolverOptions::default())
}

pub fn resonance_energy_with(
    spec: &OscillatorSpec,
    level_n: u32,
    n_basis: usize,
    theta: f64,
    opts: SolverOptions,
) -> Result<ResonanceResult> {
    if spec.coupling_g.is_none() {
        return Err(Error::Domain("oscillator spec carries no coupling".into()));
    }
    if n_basis < 8 * (level_n as usize + 1) {
        return Err(Error::Domain(format!(
            "basis size {n_basis} too small for level {level_n}; need at least {}",
            8 * (level_n as usize + 1)
        )));
    }
    let (energy, overlap) = tracked_eigenvalue(spec, level_n, n_basis, theta, opts.homotopy_steps)?;
    let (half_energy, _) = tracked_eigenvalue(spec, level_n, n_basis / 2, theta, opts.homotopy_steps)?;
    let stability = (energy - half_energy).norm();
    Ok(ResonanceResult {
        energy,
        level_n,
        basis_size_n: n_basis,
        rotation_theta: theta,
        stability,
        overlap,
        converged: stability <= opts.stability_threshold * energy.norm().max(1.0),
    })
}

fn tracked_eigenvalue(
    spec: &OscillatorSpec,
    level_n: u32,
    n_basis: usize,
    theta: f64,
    steps: usize,
) -> Result<(Complex64, f64)> {
    let g = spec.coupling_g.expect("checked by caller");
    let reference = rotated_harmonic_state(spec, level_n, theta, n_basis)?;
    let mut previous: Option<Complex64> = None;
    let mut selected = Complex64::new(0.0, 0.0);
    let mut overlap = 1.0;
    for step in 0..steps {
        let gc = g / 2f64.powi((steps - 1 - step) as i32);
        let mut stage = *spec;
        stage.coupling_g = Some(gc);
        let h = build_hamiltonian(&stage, theta, n_basis)?;
        let (vals, vecs) = eigen_dense(&h)?;
        let idx = match previous {
            None => (0..vals.len())
                .max_by(|&a, &b| {
                    let oa = squared_overlap(&reference, &column(&vecs, a));
                    let ob = squared_overlap(&reference, &column(&vecs, b));
                    oa.partial_cmp(&ob).unwrap()
                })
                .expect("nonempty spectrum"),
            Some(prev) => (0..vals.len())
                .min_by(|&a, &b| {
                    (vals[a] - prev).norm().partial_cmp(&(vals[b] - prev).norm()).unwrap()
                })
                .expect("nonempty spectrum"),
        };
        previous = Some(vals[idx]);
        selected = vals[idx];
        overlap = squared_overlap(&reference, &column(&vecs, idx));
    }
    Ok((selected, overlap))
}

/// |E(theta) - conj(E(-theta))|: the two rotation signs select
/// complex-conjugate resonance branches.
pub fn conjugate_branch_check(
    spec: &OscillatorSpec,
    level_n: u32,
    n_basis: usize,
    theta: f64,
) -> Result<f64> {
    let plus = resonance_energy(spec, level_n, n_basis, theta)?;
    let minus = resonance_energy(spec, level_n, n_basis, -theta)?;
    Ok((plus.energy - minus.energy.conj()).norm())
}

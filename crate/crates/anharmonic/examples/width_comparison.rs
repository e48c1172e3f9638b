//! Compare the decay width of the cubic ground-state resonance computed two
//! independent ways: complex-rotated diagonalization versus the optimally
//! truncated one-instanton series.
//!
//! Run with: cargo run --release --example width_comparison

use anharmonic::instanton::width_optimal_truncation;
use anharmonic::oscillator::OscillatorSpec;
use anharmonic::spectra::resonance_energy;

fn main() {
    println!("{:>8} {:>16} {:>16} {:>10} {:>9}", "g", "spectral Im", "series Im", "rel diff", "orders");
    for g in [0.006, 0.008, 0.01, 0.015, 0.02, 0.03] {
        let spec = OscillatorSpec::cubic(0).with_coupling(g);
        let spectral = resonance_energy(&spec, 0, 256, 0.4).expect("resonance");
        let series = width_optimal_truncation(3, 0, g).expect("width series");
        let rel = (spectral.energy.im - series.value).abs() / series.value.abs();
        println!(
            "{:>8} {:>16.6e} {:>16.6e} {:>10.2e} {:>9}",
            g, spectral.energy.im, series.value, rel, series.orders_used
        );
    }
}

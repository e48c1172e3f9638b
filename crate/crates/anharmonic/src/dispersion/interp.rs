//! Monotone piecewise-cubic interpolation (Fritsch-Carlson slopes).
//!
//! The imaginary-part profile spans many decades, so it is interpolated in
//! (ln s, ln(-Im)) coordinates; monotone slopes keep the interpolant from
//! overshooting between nodes.

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct MonotoneCubic {
    xs: Vec<f64>,
    ys: Vec<f64>,
    slopes: Vec<f64>,
}

impl MonotoneCubic {
    pub fn new(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        if xs.len() != ys.len() || xs.len() < 2 {
            return Err(Error::Domain("interpolation needs >= 2 matched nodes".into()));
        }
        if xs.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Domain("interpolation abscissae must strictly increase".into()));
        }
        let n = xs.len();
        let mut secants = Vec::with_capacity(n - 1);
        for i in 0..n - 1 {
            secants.push((ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]));
        }
        let mut slopes = vec![0.0; n];
        slopes[0] = secants[0];
        slopes[n - 1] = secants[n - 2];
        for i in 1..n - 1 {
            if secants[i - 1] * secants[i] <= 0.0 {
                slopes[i] = 0.0;
            } else {
                // harmonic mean weighted by interval lengths
                let h0 = xs[i] - xs[i - 1];
                let h1 = xs[i + 1] - xs[i];
                let w1 = 2.0 * h1 + h0;
                let w2 = h1 + 2.0 * h0;
                slopes[i] = (w1 + w2) / (w1 / secants[i - 1] + w2 / secants[i]);
            }
        }
        // clamp endpoint slopes (Fritsch-Carlson condition)
        for (i, s) in [(0usize, 0usize), (n - 1, n - 2)] {
            if slopes[i] * secants[s] <= 0.0 {
                slopes[i] = 0.0;
            } else if slopes[i].abs() > 3.0 * secants[s].abs() {
                slopes[i] = 3.0 * secants[s];
            }
        }
        Ok(MonotoneCubic { xs, ys, slopes })
    }

    /// Hermite evaluation; extrapolates linearly outside the node range.
    pub fn eval(&self, x: f64) -> f64 {
        let n = self.xs.len();
        if x <= self.xs[0] {
            return self.ys[0] + self.slopes[0] * (x - self.xs[0]);
        }
        if x >= self.xs[n - 1] {
            return self.ys[n - 1] + self.slopes[n - 1] * (x - self.xs[n - 1]);
        }
        let i = match self.xs.binary_search_by(|v| v.partial_cmp(&x).unwrap()) {
            Ok(i) => return self.ys[i],
            Err(i) => i - 1,
        };
        let h = self.xs[i + 1] - self.xs[i];
        let t = (x - self.xs[i]) / h;
        let (t2, t3) = (t * t, t * t * t);
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        h00 * self.ys[i] + h10 * h * self.slopes[i] + h01 * self.ys[i + 1] + h11 * h * self.slopes[i + 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproduces_nodes() {
        let xs = vec![0.0, 1.0, 2.5, 4.0];
        let ys = vec![1.0, 0.5, -0.7, -0.9];
        let c = MonotoneCubic::new(xs.clone(), ys.clone()).unwrap();
        for (x, y) in xs.iter().zip(&ys) {
            assert!((c.eval(*x) - y).abs() < 1e-14);
        }
    }

    #[test]
    fn monotone_data_stays_monotone() {
        let xs: Vec<f64> = (0..20).map(|i| i as f64 * 0.3).collect();
        let ys: Vec<f64> = xs.iter().map(|x| -(x * 1.7).exp()).collect();
        let c = MonotoneCubic::new(xs.clone(), ys).unwrap();
        let mut prev = c.eval(xs[0]);
        let mut x = xs[0] + 0.01;
        while x < xs[19] {
            let v = c.eval(x);
            assert!(v <= prev + 1e-12, "overshoot at {x}");
            prev = v;
            x += 0.01;
        }
    }

    #[test]
    fn smooth_function_interpolates_accurately() {
        let xs: Vec<f64> = (0..40).map(|i| -2.0 + i as f64 * 0.2).collect();
        let ys: Vec<f64> = xs.iter().map(|x| (2.0 * x).tanh()).collect();
        let c = MonotoneCubic::new(xs, ys).unwrap();
        for i in 0..100 {
            let x = -1.9 + i as f64 * 0.05;
            if x > 5.7 {
                break;
            }
            assert!((c.eval(x) - (2.0 * x).tanh()).abs() < 1e-2, "x = {x}");
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(MonotoneCubic::new(vec![0.0], vec![1.0]).is_err());
        assert!(MonotoneCubic::new(vec![0.0, 0.0], vec![1.0, 2.0]).is_err());
    }
}

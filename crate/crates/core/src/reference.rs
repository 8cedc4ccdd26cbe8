//! Closed-form oracles and the worked reference example: the ramp wavelet
//! f(t) = 2t + 1 on [-1/2, 1/2], its even/odd split f = f+ + f-, their
//! analytic transforms G(nu) = sinc(pi nu) and
//! H(nu) = i (pi nu cos(pi nu) - sin(pi nu)) / (pi nu)^2, and the error
//! envelopes Delta_Re / Delta_Im that measure the transform approximation
//! against the closed forms. A direct adaptive quadrature of the defining
//! Fourier integral serves as the method-independent oracle for arbitrary
//! compactly supported wavelets.

use num_complex::Complex64;
use std::f64::consts::PI;
use std::io::Write;

use crate::error::{Error, Result};
use crate::quad;
use crate::sampling::{SampledFunction, TransformConfig};
use crate::transform::{forward_even, forward_odd, EvaluationGrid};

/// The ramp wavelet 2t + 1 on [-1/2, 1/2] (closed interval), 0 elsewhere.
pub fn example_f(t: f64) -> f64 {
    if (-0.5..=0.5).contains(&t) {
        2.0 * t + 1.0
    } else {
        0.0
    }
}

/// Even part of [`example_f`]: the unit window on [-1/2, 1/2].
pub fn example_even(t: f64) -> f64 {
    if (-0.5..=0.5).contains(&t) {
        1.0
    } else {
        0.0
    }
}

/// Odd part of [`example_f`]: 2t on [-1/2, 1/2], 0 elsewhere.
pub fn example_odd(t: f64) -> f64 {
    if (-0.5..=0.5).contains(&t) {
        2.0 * t
    } else {
        0.0
    }
}

/// Which slice of the reference wavelet to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WaveletKind {
    Full,
    EvenPart,
    OddPart,
}

/// The reference wavelet with its fixed support, bundling the closures for
/// callers that need the support interval alongside the values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExampleWavelet {
    kind: WaveletKind,
}

impl ExampleWavelet {
    pub const SUPPORT: (f64, f64) = (-0.5, 0.5);

    pub fn new(kind: WaveletKind) -> Self {
        Self { kind }
    }

    pub fn kind(&self) -> WaveletKind {
        self.kind
    }

    pub fn support(&self) -> (f64, f64) {
        Self::SUPPORT
    }

    pub fn evaluate(&self, t: f64) -> f64 {
        match self.kind {
            WaveletKind::Full => example_f(t),
            WaveletKind::EvenPart => example_even(t),
            WaveletKind::OddPart => example_odd(t),
        }
    }
}

/// Transform of the unit window: sinc(pi nu), with value 1 at nu = 0.
pub fn analytic_g(nu: f64) -> f64 {
    let s = PI * nu;
    if s == 0.0 {
        1.0
    } else {
        s.sin() / s
    }
}

/// Transform of the odd part: i (pi nu cos(pi nu) - sin(pi nu)) / (pi nu)^2,
/// purely imaginary and odd; the removable singularity at nu = 0 is handled
/// by the Taylor series -s/3 + s^3/30 - s^5/840 (s = pi nu), which also
/// avoids the cancellation of the direct form for small s.
pub fn analytic_h(nu: f64) -> Complex64 {
    let s = PI * nu;
    let im = if s.abs() < 1e-2 {
        let s2 = s * s;
        s * (-1.0 / 3.0 + s2 * (1.0 / 30.0 - s2 / 840.0))
    } else {
        (s * s.cos() - s.sin()) / (s * s)
    };
    Complex64::new(0.0, im)
}

/// Pointwise differences between the analytic transforms and the method's
/// even/odd approximations over a grid, with the two sup-norms recorded.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorEnvelope {
    pub grid: EvaluationGrid,
    pub delta_re: Vec<f64>,
    pub delta_im: Vec<f64>,
    pub max_abs_re: f64,
    pub max_abs_im: f64,
}

impl ErrorEnvelope {
    /// Writes the envelope as CSV with columns nu, delta_re, delta_im
    /// (one-line header, 17 significant digits).
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "nu,delta_re,delta_im")?;
        for (k, &nu) in self.grid.points().iter().enumerate() {
            writeln!(out, "{:.16e},{:.16e},{:.16e}", nu, self.delta_re[k], self.delta_im[k])?;
        }
        Ok(())
    }
}

/// Builds the error envelope of the reference example:
/// Delta_Re(nu) = G(nu) - forward_even(f+ samples) and
/// Delta_Im(nu) = Im H(nu) - Im forward_odd(f- samples).
///
/// The configuration must span the unit support, (2N+1) h = 1; reference
/// step values are conventionally printed rounded (e.g. 0.0099 for N = 50),
/// so the check allows 1e-3 of slack. [`TransformConfig::from_effective_length`]
/// produces steps that satisfy it exactly.
pub fn delta_envelope(cfg: &TransformConfig, grid: &EvaluationGrid) -> Result<ErrorEnvelope> {
    if (cfg.window_length() - 1.0).abs() > 1e-3 {
        return Err(Error::ConfigMismatch(format!(
            "window (2N+1) h = {} does not span the unit support",
            cfg.window_length()
        )));
    }
    let even = SampledFunction::sample(cfg, example_even);
    let odd = SampledFunction::sample(cfg, example_odd);
    let mut delta_re = Vec::with_capacity(grid.len());
    let mut delta_im = Vec::with_capacity(grid.len());
    let mut max_abs_re: f64 = 0.0;
    let mut max_abs_im: f64 = 0.0;
    for &nu in grid.points() {
        let dre = analytic_g(nu) - forward_even(&even, cfg, nu)?;
        let dim = analytic_h(nu).im - forward_odd(&odd, cfg, nu)?.im;
        max_abs_re = max_abs_re.max(dre.abs());
        max_abs_im = max_abs_im.max(dim.abs());
        delta_re.push(dre);
        delta_im.push(dim);
    }
    Ok(ErrorEnvelope {
        grid: grid.clone(),
        delta_re,
        delta_im,
        max_abs_re,
        max_abs_im,
    })
}

/// Direct adaptive quadrature of the defining transform integral
/// int f(t) e^{-2 pi i nu t} dt over the support, to absolute error <= tol.
///
/// Method-independent: shares nothing with the weighted-sum machinery, so
/// it can arbitrate for any compactly supported wavelet.
pub fn quadrature_ft_oracle<F: Fn(f64) -> f64>(
    f: F,
    support: (f64, f64),
    nu: f64,
    tol: f64,
) -> Result<Complex64> {
    let (lo, hi) = support;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::InvalidInput(format!("invalid support [{lo}, {hi}]")));
    }
    if !(tol > 0.0 && tol <= 1e-6) {
        return Err(Error::InvalidInput(format!(
            "oracle tolerance {tol:e} outside (0, 1e-6]"
        )));
    }
    quad::integrate(
        |t| {
            let angle = -2.0 * PI * nu * t;
            f(t) * Complex64::new(angle.cos(), angle.sin())
        },
        lo,
        hi,
        tol,
        4000,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn example_values() {
        assert_eq!(example_f(0.0), 1.0);
        assert_eq!(example_even(0.0), 1.0);
        assert_eq!(example_odd(0.0), 0.0);
        assert_eq!(example_f(0.3), 1.6);
        assert_eq!(example_f(0.7), 0.0);
        assert_eq!(example_f(-0.6), 0.0);
        // closed-interval endpoint convention
        assert_eq!(example_even(0.5), 1.0);
        assert_eq!(example_odd(-0.5), -1.0);
        assert_eq!(example_f(0.5), 2.0);
    }

    #[test]
    fn split_and_parity_hold_pointwise() {
        for i in -30..=30 {
            let t = i as f64 * 0.025;
            assert_eq!(example_f(t), example_even(t) + example_odd(t));
            assert_eq!(example_even(-t), example_even(t));
            assert_eq!(example_odd(-t), -example_odd(t));
        }
    }

    #[test]
    fn wavelet_kinds_route_to_the_right_slice() {
        let full = ExampleWavelet::new(WaveletKind::Full);
        let even = ExampleWavelet::new(WaveletKind::EvenPart);
        let odd = ExampleWavelet::new(WaveletKind::OddPart);
        assert_eq!(full.support(), (-0.5, 0.5));
        for &t in &[0.0, 0.25, -0.4, 0.8] {
            assert_eq!(full.evaluate(t), example_f(t));
            assert_eq!(even.evaluate(t) + odd.evaluate(t), full.evaluate(t));
        }
    }

    #[test]
    fn analytic_g_known_values() {
        assert_eq!(analytic_g(0.0), 1.0);
        assert!(analytic_g(1.0).abs() <= 1e-15);
        assert_abs_diff_eq!(analytic_g(0.5), 2.0 / PI, epsilon = 1e-15);
        // even
        assert_eq!(analytic_g(-0.73), analytic_g(0.73));
    }

    #[test]
    fn analytic_h_known_values() {
        assert_eq!(analytic_h(0.0), Complex64::new(0.0, 0.0));
        let h1 = analytic_h(1.0);
        assert_eq!(h1.re, 0.0);
        assert_abs_diff_eq!(h1.im, -1.0 / PI, epsilon = 1e-15);
        // odd and purely imaginary
        for &nu in &[0.01, 0.37, 2.4] {
            let p = analytic_h(nu);
            let n = analytic_h(-nu);
            assert_eq!(p.re, 0.0);
            assert_abs_diff_eq!(n.im, -p.im, epsilon = 1e-16);
        }
    }

    #[test]
    fn analytic_h_series_joins_the_direct_form_smoothly() {
        // straddle the s = 1e-2 switchover (nu = 1e-2 / pi)
        let nu0 = 1e-2 / PI;
        for &nu in &[nu0 * 0.999, nu0 * 1.001] {
            let s = PI * nu;
            let series = s * (-1.0 / 3.0 + s * s * (1.0 / 30.0 - s * s / 840.0));
            let direct = (s * s.cos() - s.sin()) / (s * s);
            assert_abs_diff_eq!(series, direct, epsilon = 1e-14);
            assert_abs_diff_eq!(analytic_h(nu).im, series, epsilon = 1e-14);
        }
    }

    #[test]
    fn envelope_vanishes_at_zero_frequency_for_the_exact_window() {
        let cfg = TransformConfig::from_effective_length(1.0, 50, 0.0099).unwrap();
        let grid = EvaluationGrid::linspace(0.0, 0.0, 1).unwrap();
        let env = delta_envelope(&cfg, &grid).unwrap();
        // the nu = 0 cosine sum telescopes to (2N+1) h = 1
        assert!(env.delta_re[0].abs() <= 1e-13, "delta_re(0) = {:e}", env.delta_re[0]);
        assert_eq!(env.delta_im[0], 0.0);
        assert_eq!(env.max_abs_re, env.delta_re[0].abs());
    }

    #[test]
    fn envelope_rejects_windows_away_from_the_unit_support() {
        let cfg = TransformConfig::new(0.3, 0.3, 10).unwrap();
        let grid = EvaluationGrid::linspace(-1.0, 1.0, 3).unwrap();
        assert!(matches!(
            delta_envelope(&cfg, &grid),
            Err(Error::ConfigMismatch(_))
        ));
    }

    #[test]
    fn envelope_maxima_match_their_sequences() {
        let cfg = TransformConfig::from_effective_length(1.0, 50, 1.0 / 101.0).unwrap();
        let grid = EvaluationGrid::linspace(-3.0, 3.0, 61).unwrap();
        let env = delta_envelope(&cfg, &grid).unwrap();
        let mre = env.delta_re.iter().fold(0.0f64, |m, d| m.max(d.abs()));
        let mim = env.delta_im.iter().fold(0.0f64, |m, d| m.max(d.abs()));
        assert_eq!(env.max_abs_re, mre);
        assert_eq!(env.max_abs_im, mim);
    }

    #[test]
    fn csv_export_has_the_documented_shape() {
        let cfg = TransformConfig::from_effective_length(1.0, 50, 1.0 / 101.0).unwrap();
        let grid = EvaluationGrid::linspace(-1.0, 1.0, 5).unwrap();
        let env = delta_envelope(&cfg, &grid).unwrap();
        let mut buf = Vec::new();
        env.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[0], "nu,delta_re,delta_im");
        let fields: Vec<&str> = lines[1].split(',').collect();
        assert_eq!(fields.len(), 3);
        assert_eq!(fields[0].parse::<f64>().unwrap(), -1.0);
    }

    #[test]
    fn ft_oracle_matches_the_closed_forms() {
        for &nu in &[0.0, 0.45, 1.0, 2.3, 3.7] {
            let g = quadrature_ft_oracle(example_even, (-0.5, 0.5), nu, 1e-10).unwrap();
            assert!((g.re - analytic_g(nu)).abs() <= 1e-9, "G mismatch at nu = {nu}");
            assert!(g.im.abs() <= 1e-9);
            let h = quadrature_ft_oracle(example_odd, (-0.5, 0.5), nu, 1e-10).unwrap();
            assert!((h.im - analytic_h(nu).im).abs() <= 1e-9, "H mismatch at nu = {nu}");
            assert!(h.re.abs() <= 1e-9);
        }
    }

    #[test]
    fn ft_oracle_reproduces_the_self_reciprocal_gaussian() {
        for &nu in &[0.0, 0.5, 1.0, 2.0] {
            let f = quadrature_ft_oracle(|t| (-PI * t * t).exp(), (-8.0, 8.0), nu, 1e-10).unwrap();
            assert!(
                (f.re - (-PI * nu * nu).exp()).abs() <= 1e-8,
                "Gaussian transform off at nu = {nu}"
            );
            assert!(f.im.abs() <= 1e-8);
        }
    }

    #[test]
    fn ft_oracle_validates_inputs() {
        assert!(quadrature_ft_oracle(example_f, (0.5, -0.5), 0.0, 1e-10).is_err());
        assert!(quadrature_ft_oracle(example_f, (-0.5, 0.5), 0.0, 1e-3).is_err());
        assert!(quadrature_ft_oracle(example_f, (-0.5, 0.5), 0.0, 0.0).is_err());
    }
}

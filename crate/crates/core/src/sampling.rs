//! Gaussian sampling kernel, equidistant samples, and reconstruction.
//!
//! A function with effective support (2N+1)h is represented by its values at
//! t = nh, n = -N..N, and rebuilt as a sum of Gaussians of width c centered
//! on the sample points. The Gaussian kernel replaces the classical sinc
//! kernel; [`sinc_reconstruct`] keeps the sinc series around as a comparison
//! oracle. Reconstruction oscillates around the target for c well below h
//! and the ripple dies off rapidly as c approaches h; [`oscillation_metric`]
//! turns that qualitative statement into a measured number.

use num_complex::Complex64;

use crate::error::{Error, Result};

const SQRT_PI: f64 = 1.772_453_850_905_516;

/// Step h, width c, half sample count N, and the number of negative-index
/// terms kept by the truncated transforms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformConfig {
    h: f64,
    c: f64,
    half_count: usize,
    trunc_depth: usize,
}

impl TransformConfig {
    /// Default number of retained negative-index terms in the truncated
    /// transform sums.
    pub const DEFAULT_TRUNC_DEPTH: usize = 3;

    /// A configuration with step `h`, kernel width `c` and half sample count
    /// `n`; the truncation depth defaults to 3 (clamped to `n` when `n` is
    /// smaller).
    pub fn new(h: f64, c: f64, n: usize) -> Result<Self> {
        if !(h.is_finite() && h > 0.0) {
            return Err(Error::InvalidInput(format!("step h must be positive, got {h}")));
        }
        if !(c.is_finite() && c > 0.0) {
            return Err(Error::InvalidInput(format!(
                "fitting parameter c must be positive, got {c}"
            )));
        }
        if n == 0 {
            return Err(Error::InvalidInput("half sample count must be >= 1".into()));
        }
        Ok(Self {
            h,
            c,
            half_count: n,
            trunc_depth: Self::DEFAULT_TRUNC_DEPTH.min(n),
        })
    }

    /// Same configuration with an explicit truncation depth (must not exceed
    /// the half sample count).
    pub fn with_trunc_depth(self, depth: usize) -> Result<Self> {
        if depth > self.half_count {
            return Err(Error::TruncationDepthExceedsHalfCount {
                depth,
                half_count: self.half_count,
            });
        }
        Ok(Self {
            trunc_depth: depth,
            ..self
        })
    }

    /// Configuration for a wavelet of effective length `length`: the step is
    /// chosen as length/(2n+1) so the window matches the support exactly.
    pub fn from_effective_length(length: f64, n: usize, c: f64) -> Result<Self> {
        if !(length.is_finite() && length > 0.0) {
            return Err(Error::InvalidInput(format!(
                "effective length must be positive, got {length}"
            )));
        }
        if n == 0 {
            return Err(Error::InvalidInput("half sample count must be >= 1".into()));
        }
        Self::new(length / (2 * n + 1) as f64, c, n)
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// N: samples run n = -N..N.
    pub fn half_count(&self) -> usize {
        self.half_count
    }

    pub fn trunc_depth(&self) -> usize {
        self.trunc_depth
    }

    /// Total number of samples, 2N + 1.
    pub fn sample_count(&self) -> usize {
        2 * self.half_count + 1
    }

    /// The window (2N + 1) h covered by the samples.
    pub fn window_length(&self) -> f64 {
        self.sample_count() as f64 * self.h
    }
}

/// Equidistant samples f(nh), n = -N..N, stored in ascending index order.
///
/// Values are complex so spectra can ride through the same machinery;
/// [`SampledFunction::from_real`] wraps plain real samples.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    step: f64,
    values: Vec<Complex64>,
}

impl SampledFunction {
    /// Wraps an odd-length value vector (2N + 1 entries, index 0 of the
    /// vector holding f(-Nh)).
    pub fn new(step: f64, values: Vec<Complex64>) -> Result<Self> {
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::InvalidInput(format!("step must be positive, got {step}")));
        }
        if values.len() < 3 || values.len().is_multiple_of(2) {
            return Err(Error::InvalidInput(format!(
                "sample count must be odd and >= 3, got {}",
                values.len()
            )));
        }
        Ok(Self { step, values })
    }

    pub fn from_real(step: f64, values: &[f64]) -> Result<Self> {
        Self::new(
            step,
            values.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
        )
    }

    /// Samples a real-valued function at t = nh per the configuration.
    pub fn sample<F: Fn(f64) -> f64>(cfg: &TransformConfig, f: F) -> Self {
        let n = cfg.half_count as i64;
        let values = (-n..=n)
            .map(|k| Complex64::new(f(k as f64 * cfg.h), 0.0))
            .collect();
        Self {
            step: cfg.h,
            values,
        }
    }

    /// Samples a complex-valued function at t = nh per the configuration.
    pub fn sample_complex<F: Fn(f64) -> Complex64>(cfg: &TransformConfig, f: F) -> Self {
        let n = cfg.half_count as i64;
        let values = (-n..=n).map(|k| f(k as f64 * cfg.h)).collect();
        Self {
            step: cfg.h,
            values,
        }
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    /// N such that the sample count is 2N + 1.
    pub fn half_count(&self) -> usize {
        (self.values.len() - 1) / 2
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction guarantees >= 3 values
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// f(nh) by signed index, n in -N..N.
    pub fn value(&self, n: i64) -> Result<Complex64> {
        let half = self.half_count() as i64;
        if n < -half || n > half {
            return Err(Error::IndexOutOfRange {
                index: n,
                half_count: self.half_count(),
            });
        }
        Ok(self.values[(n + half) as usize])
    }

    /// Checks that the step and half count agree with the configuration.
    pub fn matches(&self, cfg: &TransformConfig) -> Result<()> {
        if self.step != cfg.h {
            return Err(Error::ConfigMismatch(format!(
                "sample step {} differs from configured h {}",
                self.step, cfg.h
            )));
        }
        if self.half_count() != cfg.half_count {
            return Err(Error::ConfigMismatch(format!(
                "sample half count {} differs from configured N {}",
                self.half_count(),
                cfg.half_count
            )));
        }
        Ok(())
    }
}

/// The Gaussian interpolation kernel h e^{-(t/c)^2} / (c sqrt(pi)); strictly
/// positive, even in t, with unit-h mass.
pub fn gaussian_kernel(t: f64, cfg: &TransformConfig) -> f64 {
    let u = t / cfg.c;
    cfg.h * (-u * u).exp() / (cfg.c * SQRT_PI)
}

/// Rebuilds the function at `t` as (h/(c sqrt(pi))) sum_n e^{-((t-nh)/c)^2} f(nh).
pub fn reconstruct(samples: &SampledFunction, cfg: &TransformConfig, t: f64) -> Result<Complex64> {
    samples.matches(cfg)?;
    let n = cfg.half_count as i64;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in -n..=n {
        let u = (t - k as f64 * cfg.h) / cfg.c;
        sum += (-u * u).exp() * samples.value(k)?;
    }
    Ok(cfg.h / (cfg.c * SQRT_PI) * sum)
}

/// Classical sinc-series reconstruction, kept as a comparison oracle:
/// sum_n f(nh) sinc(pi (t - nh)/h). When (t - nh)/h lands exactly on an
/// integer the sinc factor is replaced by its exact 0/1 value, so grid
/// points interpolate exactly whenever h is binary-representable.
pub fn sinc_reconstruct(
    samples: &SampledFunction,
    cfg: &TransformConfig,
    t: f64,
) -> Result<Complex64> {
    samples.matches(cfg)?;
    let n = cfg.half_count as i64;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in -n..=n {
        let u = t / cfg.h - k as f64;
        let weight = if u == u.round() {
            if u == 0.0 {
                1.0
            } else {
                0.0
            }
        } else {
            let s = std::f64::consts::PI * u;
            s.sin() / s
        };
        sum += weight * samples.value(k)?;
    }
    Ok(sum)
}

/// Maximum of |reconstruct(f = 1) - 1| over a dense uniform grid on
/// [a, b]; the interval must lie inside the sampling window.
///
/// 10^4 grid points resolve ripple of period ~h with ample margin. A
/// degenerate single-point interval a = b measures the deviation there.
pub fn oscillation_metric(cfg: &TransformConfig, interval: (f64, f64)) -> Result<f64> {
    let (a, b) = interval;
    if !(a.is_finite() && b.is_finite() && a <= b) {
        return Err(Error::InvalidInput(format!(
            "invalid interval [{a}, {b}]"
        )));
    }
    let half_window = 0.5 * cfg.window_length();
    if a < -half_window || b > half_window {
        return Err(Error::InvalidInput(format!(
            "interval [{a}, {b}] extends outside the sampling window [{}, {}]",
            -half_window, half_window
        )));
    }
    let ones = SampledFunction::sample(cfg, |_| 1.0);
    let points = if a == b { 1 } else { 10_000 };
    let mut max_dev: f64 = 0.0;
    for i in 0..points {
        let t = if points == 1 {
            a
        } else {
            a + (b - a) * i as f64 / (points - 1) as f64
        };
        let dev = (reconstruct(&ones, cfg, t)? - Complex64::new(1.0, 0.0)).norm();
        max_dev = max_dev.max(dev);
    }
    Ok(max_dev)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn cfg(h: f64, c: f64, n: usize) -> TransformConfig {
        TransformConfig::new(h, c, n).unwrap()
    }

    #[test]
    fn config_rejects_degenerate_parameters() {
        assert!(TransformConfig::new(0.0, 0.2, 10).is_err());
        assert!(TransformConfig::new(0.25, -1.0, 10).is_err());
        assert!(TransformConfig::new(0.25, 0.2, 0).is_err());
        assert!(cfg(0.25, 0.2, 10).with_trunc_depth(11).is_err());
        assert_eq!(cfg(0.25, 0.2, 2).trunc_depth(), 2); // clamped default
    }

    #[test]
    fn effective_length_constructor_divides_the_window_exactly() {
        let c = TransformConfig::from_effective_length(1.0, 50, 0.0099).unwrap();
        assert_eq!(c.h(), 1.0 / 101.0);
        assert_eq!(c.sample_count(), 101);
        assert_abs_diff_eq!(c.window_length(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn kernel_peak_values_match_the_reference_parameter_sets() {
        // peak h/(c sqrt(pi)) for h = 0.25, c in {0.15, 0.2, 0.25}
        assert_abs_diff_eq!(
            gaussian_kernel(0.0, &cfg(0.25, 0.15, 10)),
            0.9403,
            epsilon = 5e-5
        );
        assert_abs_diff_eq!(
            gaussian_kernel(0.0, &cfg(0.25, 0.2, 10)),
            0.7052,
            epsilon = 5e-5
        );
        assert_abs_diff_eq!(
            gaussian_kernel(0.0, &cfg(0.25, 0.25, 10)),
            0.5642,
            epsilon = 5e-5
        );
        // the c = h peak is exactly 1/sqrt(pi)
        assert_abs_diff_eq!(
            gaussian_kernel(0.0, &cfg(0.25, 0.25, 10)),
            0.5641895835477563,
            epsilon = 1e-15
        );
    }

    #[test]
    fn kernel_is_even_exactly() {
        let c = cfg(0.25, 0.2, 10);
        for &t in &[0.1, 0.5, 1.7, 3.0] {
            assert_eq!(gaussian_kernel(t, &c), gaussian_kernel(-t, &c));
        }
    }

    #[test]
    fn kernel_mass_equals_h() {
        // trapezoid over [-12c, 12c]; integrand decays to e^{-144}
        let c = cfg(0.25, 0.2, 10);
        let m = 4000;
        let (lo, hi) = (-12.0 * c.c(), 12.0 * c.c());
        let dt = (hi - lo) / m as f64;
        let mut mass = 0.0;
        for i in 0..=m {
            let w = if i == 0 || i == m { 0.5 } else { 1.0 };
            mass += w * gaussian_kernel(lo + i as f64 * dt, &c);
        }
        mass *= dt;
        assert_abs_diff_eq!(mass, c.h(), epsilon = 1e-10);
    }

    #[test]
    fn zero_samples_reconstruct_to_zero_everywhere() {
        let c = cfg(0.25, 0.2, 10);
        let zeros = SampledFunction::sample(&c, |_| 0.0);
        for &t in &[-2.0, -0.3, 0.0, 1.1, 4.0] {
            assert_eq!(reconstruct(&zeros, &c, t).unwrap(), Complex64::new(0.0, 0.0));
            assert_eq!(
                sinc_reconstruct(&zeros, &c, t).unwrap(),
                Complex64::new(0.0, 0.0)
            );
        }
    }

    #[test]
    fn constant_function_center_deviation_is_small_but_nonzero() {
        // h = 0.25, c = 0.2, N = 10: the ripple amplitude at the window
        // center is 2 e^{-(pi c/h)^2} (1 + ...) ~ 3.6e-3
        let c = cfg(0.25, 0.2, 10);
        let ones = SampledFunction::sample(&c, |_| 1.0);
        let dev = (reconstruct(&ones, &c, 0.0).unwrap().re - 1.0).abs();
        assert_abs_diff_eq!(dev, 3.6123395915772516e-3, epsilon = 1e-12);
    }

    #[test]
    fn reconstruction_decays_outside_the_window() {
        let c = cfg(0.25, 0.2, 10);
        let ones = SampledFunction::sample(&c, |_| 1.0);
        let v = reconstruct(&ones, &c, 4.0).unwrap().norm();
        assert!(v < 0.01, "outside-window value {v}");
    }

    #[test]
    fn sinc_reconstruction_interpolates_grid_points_exactly() {
        let c = cfg(0.25, 0.2, 10);
        let samples = SampledFunction::sample(&c, |t| 1.0 + t * t);
        for n in -10i64..=10 {
            let t = n as f64 * 0.25;
            let v = sinc_reconstruct(&samples, &c, t).unwrap();
            assert_eq!(v, samples.value(n).unwrap());
        }
    }

    #[test]
    fn sinc_reconstruction_of_ones_is_near_one_in_the_interior() {
        let c = cfg(0.25, 0.2, 10);
        let ones = SampledFunction::sample(&c, |_| 1.0);
        let v = sinc_reconstruct(&ones, &c, 0.1).unwrap();
        assert!((v.re - 1.0).abs() < 0.1 && v.im == 0.0);
    }

    #[test]
    fn reconstruction_is_linear() {
        let c = cfg(0.25, 0.2, 8);
        let f = SampledFunction::sample(&c, |t| t.sin());
        let g = SampledFunction::sample(&c, |t| t * t - 0.5);
        let combo = SampledFunction::new(
            c.h(),
            f.values()
                .iter()
                .zip(g.values())
                .map(|(a, b)| 2.5 * a - 1.25 * b)
                .collect(),
        )
        .unwrap();
        for &t in &[-1.0, 0.3, 1.9] {
            let lhs = reconstruct(&combo, &c, t).unwrap();
            let rhs = 2.5 * reconstruct(&f, &c, t).unwrap() - 1.25 * reconstruct(&g, &c, t).unwrap();
            assert!((lhs - rhs).norm() <= 1e-12);
        }
    }

    #[test]
    fn shifting_samples_by_one_index_shifts_the_reconstruction_by_h() {
        let c = cfg(0.25, 0.2, 10);
        let f = SampledFunction::sample(&c, |t| (1.3 * t).cos());
        // g(nh) = f((n-1)h) for interior n
        let mut shifted = vec![Complex64::new(0.0, 0.0); f.len()];
        for n in -9i64..=10 {
            shifted[(n + 10) as usize] = f.value(n - 1).unwrap();
        }
        shifted[0] = f.value(-10).unwrap(); // edge padding, kept away from the probe
        let g = SampledFunction::new(c.h(), shifted).unwrap();
        for &t in &[-0.4, 0.1, 0.6] {
            let lhs = reconstruct(&g, &c, t).unwrap();
            let rhs = reconstruct(&f, &c, t - c.h()).unwrap();
            assert!((lhs - rhs).norm() <= 1e-12, "shift covariance failed at t = {t}");
        }
    }

    #[test]
    fn oscillation_metric_decreases_as_c_grows() {
        let m015 = oscillation_metric(&cfg(0.25, 0.15, 10), (-2.0, 2.0)).unwrap();
        let m020 = oscillation_metric(&cfg(0.25, 0.2, 10), (-2.0, 2.0)).unwrap();
        let m025 = oscillation_metric(&cfg(0.25, 0.25, 10), (-2.0, 2.0)).unwrap();
        assert!(m015 > m020 && m020 > m025);
        assert!(m025 <= 1e-3);
    }

    #[test]
    fn oscillation_metric_validates_its_interval() {
        let c = cfg(0.25, 0.2, 10); // window [-2.625, 2.625]
        assert!(oscillation_metric(&c, (-3.0, 0.0)).is_err());
        assert!(oscillation_metric(&c, (0.0, 2.7)).is_err());
        let single = oscillation_metric(&c, (0.0, 0.0)).unwrap();
        let ones = SampledFunction::sample(&c, |_| 1.0);
        let direct = (reconstruct(&ones, &c, 0.0).unwrap() - Complex64::new(1.0, 0.0)).norm();
        assert_eq!(single, direct);
    }

    #[test]
    fn sampled_function_validates_shape() {
        assert!(SampledFunction::from_real(0.25, &[1.0, 2.0]).is_err());
        assert!(SampledFunction::from_real(0.25, &[1.0]).is_err());
        assert!(SampledFunction::from_real(-0.25, &[1.0, 2.0, 3.0]).is_err());
        let s = SampledFunction::from_real(0.25, &[1.0, 2.0, 3.0]).unwrap();
        assert_eq!(s.half_count(), 1);
        assert_eq!(s.value(0).unwrap(), Complex64::new(2.0, 0.0));
        assert_eq!(s.value(-1).unwrap(), Complex64::new(1.0, 0.0));
        assert!(s.value(2).is_err());
    }
}

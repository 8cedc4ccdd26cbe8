//! The complex error function w(z) and the special functions built from it.
//!
//! w(z) = e^{-z^2} (1 + (2i/sqrt(pi)) int_0^z e^{u^2} du) is entire, bounded
//! in the upper half-plane, and grows like 2 e^{y^2 - x^2} below the real
//! axis. Evaluation is region-split:
//!
//! * |z| <= 1.2: Maclaurin series sum (iz)^k / Gamma(k/2 + 1);
//! * 1.2 < |z| <= 12, Im z >= 0.1: Fourier cosine expansion of e^{-u^2/4}
//!   with period 24 (26 retained harmonics), integrated term by term against
//!   e^{izu}; all numerators and denominators stay well separated from their
//!   removable singularities in this band;
//! * 1.2 < |z| <= 12, 0 <= Im z < 0.1: Taylor continuation downward from an
//!   anchor at Im z0 = 0.1, using the recurrence
//!   w^{(k+1)} = -2 (z w^{(k)} + k w^{(k-1)});
//! * |z| > 12: Laplace continued fraction by backward recurrence, with a term
//!   count stepped down as |z| grows;
//! * Im z < 0: reflection w(z) = 2 e^{-z^2} - w(-z), with an explicit
//!   overflow error when e^{-z^2} leaves the binary64 range;
//! * Re z < 0: conjugate reflection w(-x + iy) = conj(w(x + iy)), applied
//!   bit-exactly before anything else.
//!
//! On the real axis Re w(x) = e^{-x^2} is substituted exactly; the imaginary
//! part still comes from the region machinery. The independent correctness
//! anchor is [`w_quadrature_oracle`], an adaptive Gauss-Kronrod evaluation of
//! w(x, y) = (2/sqrt(pi)) int_0^inf e^{-u^2} e^{-2yu} e^{2ixu} du.

use num_complex::Complex64;
use once_cell::sync::Lazy;
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_2_SQRT_PI, LOG10_E, PI};

use crate::error::{Error, Result};
use crate::quad;

const SQRT_PI: f64 = 1.772_453_850_905_516; // sqrt(pi)
const FRAC_1_SQRT_PI: f64 = 0.564_189_583_547_756_3; // 1/sqrt(pi)

/// Target absolute accuracy of [`w`] (scaled by max(1, |w|) where the value
/// exceeds unit magnitude, i.e. deep in the lower half-plane). The region
/// boundaries and term counts below are tuned to beat this target by roughly
/// three orders of magnitude; tightening or relaxing them starts here.
pub const ACCURACY_TARGET: f64 = 1e-10;

/// exp(m) overflows binary64 just above m = 709.78; stay slightly under so
/// the factor 2 in the lower-half reflection still fits.
const EXP_OVERFLOW_LIMIT: f64 = 709.0;

const SERIES_RADIUS_SQ: f64 = 1.44; // |z| <= 1.2
const EXPANSION_RADIUS_SQ: f64 = 144.0; // |z| <= 12
const AXIS_BAND: f64 = 0.1; // Im z below this uses the Taylor continuation

/// Half-period of the cosine expansion of e^{-u^2/4}.
const EXPANSION_PERIOD: f64 = 12.0;
/// Retained harmonics; coefficient 26 is 2 sqrt(pi)/tau * e^{-46.3} ~ 5e-21.
const EXPANSION_TERMS: usize = 26;

struct ExpansionTable {
    coeff: [f64; EXPANSION_TERMS + 1],
    pole_sq: [f64; EXPANSION_TERMS + 1],
}

static EXPANSION: Lazy<ExpansionTable> = Lazy::new(|| {
    let mut coeff = [0.0; EXPANSION_TERMS + 1];
    let mut pole_sq = [0.0; EXPANSION_TERMS + 1];
    coeff[0] = SQRT_PI / EXPANSION_PERIOD;
    for n in 1..=EXPANSION_TERMS {
        let b = n as f64 * PI / EXPANSION_PERIOD;
        coeff[n] = 2.0 * SQRT_PI / EXPANSION_PERIOD * (-b * b).exp();
        pole_sq[n] = b * b;
    }
    ExpansionTable { coeff, pole_sq }
});

fn ensure_finite(z: Complex64) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "non-finite argument ({}, {})",
            z.re, z.im
        )))
    }
}

/// e^{-z^2} = e^{y^2 - x^2} e^{-2ixy}, or an overflow error when the
/// magnitude exponent exceeds the binary64 range.
fn exp_minus_z_squared(x: f64, y: f64) -> Result<Complex64> {
    let m = (y - x) * (y + x);
    if m > EXP_OVERFLOW_LIMIT {
        return Err(Error::Overflow {
            log10_magnitude: m * LOG10_E,
        });
    }
    let mag = m.exp();
    let phase = -2.0 * x * y;
    Ok(Complex64::new(mag * phase.cos(), mag * phase.sin()))
}

fn maclaurin(z: Complex64) -> Complex64 {
    let iz = Complex64::new(-z.im, z.re);
    let iz2 = iz * iz;
    // 1/Gamma(k/2 + 1) by the recurrence c_k = 2 c_{k-2} / k
    let mut even_c = 1.0;
    let mut odd_c = FRAC_2_SQRT_PI;
    let mut even_t = Complex64::new(1.0, 0.0);
    let mut odd_t = iz;
    let mut sum = even_c * even_t + odd_c * odd_t;
    let mut k = 2.0;
    while k < 80.0 {
        even_t *= iz2;
        odd_t *= iz2;
        even_c *= 2.0 / k;
        odd_c *= 2.0 / (k + 1.0);
        let inc = even_c * even_t + odd_c * odd_t;
        sum += inc;
        if inc.norm_sqr() <= 1e-34 * sum.norm_sqr() {
            break;
        }
        k += 2.0;
    }
    sum
}

/// Valid for 1.2 < |z| <= 12 with Im z >= 0.1: there |e^{i tau z}| <= e^{-1.2},
/// so every numerator below stays of order 1 and the pole cancellations that
/// plague the real axis cannot occur.
fn cosine_expansion(z: Complex64) -> Complex64 {
    let table = &*EXPANSION;
    let decay = (-EXPANSION_PERIOD * z.im).exp();
    let angle = EXPANSION_PERIOD * z.re;
    let e = Complex64::new(decay * angle.cos(), decay * angle.sin()); // e^{i tau z}
    let z2 = z * z;
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 0..=EXPANSION_TERMS {
        let numerator = if n % 2 == 0 { e - 1.0 } else { -e - 1.0 };
        sum += table.coeff[n] * numerator / (z2 - table.pole_sq[n]);
    }
    let m = z * sum * FRAC_1_SQRT_PI;
    Complex64::new(m.im, -m.re) // -i * m
}

/// Taylor continuation from the anchor (x, 0.1) down to (x, y), 0 <= y < 0.1.
fn axis_lift(x: f64, y: f64) -> Complex64 {
    let z0 = Complex64::new(x, AXIS_BAND);
    let mut prev = cosine_expansion(z0);
    let mut curr = -2.0 * z0 * prev + Complex64::new(0.0, FRAC_2_SQRT_PI);
    let d = Complex64::new(0.0, y - AXIS_BAND);
    let mut sum = prev + curr * d;
    let mut dpow = d;
    let mut k = 1.0;
    while k < 48.0 {
        let next = -2.0 * (z0 * curr + k * prev);
        dpow *= d / (k + 1.0);
        let inc = next * dpow;
        sum += inc;
        if inc.norm_sqr() <= 1e-34 * sum.norm_sqr() {
            break;
        }
        prev = curr;
        curr = next;
        k += 1.0;
    }
    sum
}

fn continued_fraction_terms(r_sq: f64) -> u32 {
    if r_sq <= 400.0 {
        40
    } else if r_sq <= 1.0e4 {
        24
    } else if r_sq <= 2.5e7 {
        12
    } else {
        5
    }
}

fn continued_fraction(z: Complex64, terms: u32) -> Complex64 {
    let mut r = Complex64::new(0.0, 0.0);
    for k in (1..=terms).rev() {
        r = (0.5 * k as f64) / (z - r);
    }
    Complex64::new(0.0, FRAC_1_SQRT_PI) / (z - r)
}

/// Upper-half-plane evaluation (y >= 0); total, never overflows.
fn w_upper(x: f64, y: f64) -> Complex64 {
    if x < 0.0 {
        return w_upper(-x, y).conj();
    }
    if y == 0.0 {
        let im = if x * x <= SERIES_RADIUS_SQ {
            maclaurin(Complex64::new(x, 0.0)).im
        } else if x * x <= EXPANSION_RADIUS_SQ {
            axis_lift(x, 0.0).im
        } else {
            continued_fraction(Complex64::new(x, 0.0), continued_fraction_terms(x * x)).im
        };
        return Complex64::new((-x * x).exp(), im);
    }
    let r_sq = x * x + y * y;
    let z = Complex64::new(x, y);
    if r_sq <= SERIES_RADIUS_SQ {
        maclaurin(z)
    } else if r_sq <= EXPANSION_RADIUS_SQ {
        if y >= AXIS_BAND {
            cosine_expansion(z)
        } else {
            axis_lift(x, y)
        }
    } else {
        continued_fraction(z, continued_fraction_terms(r_sq))
    }
}

/// The complex error function w(z), full plane.
///
/// For Im z >= 0 the result is bounded and always succeeds. For Im z < 0 it
/// is continued as w(z) = 2 e^{-z^2} - w(-z) and returns an explicit
/// [`Error::Overflow`] naming the magnitude class once e^{y^2 - x^2} leaves
/// the binary64 range; it never returns Inf silently. Accuracy: see
/// [`ACCURACY_TARGET`].
pub fn w(z: Complex64) -> Result<Complex64> {
    ensure_finite(z)?;
    if z.im >= 0.0 {
        return Ok(w_upper(z.re, z.im));
    }
    let e = exp_minus_z_squared(z.re, z.im)?;
    Ok(2.0 * e - w_upper(-z.re, -z.im))
}

/// Independent adaptive Gauss-Kronrod evaluation of
/// (2/sqrt(pi)) int_0^inf e^{-u^2} e^{-2yu} e^{2ixu} du.
///
/// For Im z >= 0 the integrand is bounded by e^{-u^2} and the integral is
/// evaluated directly to estimated absolute error <= tol. For Im z < 0 the
/// same integral is catastrophically cancelling in binary64 (the integrand
/// peaks at e^{y^2} while the result stays of order e^{y^2 - x^2}), so the
/// oracle evaluates the upper-half integral at -z and applies the exact
/// reflection 2 e^{-z^2} - w(-z); the reported tol then applies relative to
/// the reflected magnitude. The oracle shares no code with [`w`]'s region
/// evaluators.
pub fn w_quadrature_oracle(z: Complex64, tol: f64) -> Result<Complex64> {
    ensure_finite(z)?;
    if !(tol > 0.0 && tol <= 1e-6) {
        return Err(Error::InvalidInput(format!(
            "oracle tolerance {tol:e} outside (0, 1e-6]"
        )));
    }
    if z.im < 0.0 {
        let e = exp_minus_z_squared(z.re, z.im)?;
        return Ok(2.0 * e - w_quadrature_oracle(-z, tol)?);
    }
    let (x, y) = (z.re, z.im);
    // beyond u (u + 2y) = 60 the integrand is below e^{-60}
    let upper = -y + (y * y + 60.0).sqrt();
    let integral = quad::integrate(
        |u| {
            let damp = (-u * (u + 2.0 * y)).exp();
            let angle = 2.0 * x * u;
            Complex64::new(damp * angle.cos(), damp * angle.sin())
        },
        0.0,
        upper,
        0.1 * tol,
        4000,
    )?;
    Ok(FRAC_2_SQRT_PI * integral)
}

/// The damped value e^{-a^2} w(x - ia) for a >= 0, in the overflow-safe
/// combined form 2 e^{-x^2} (cos 2xa + i sin 2xa) - e^{-a^2} w(-x + ia).
///
/// Every factor is bounded (upper-half w has magnitude <= 1), so no
/// intermediate overflows for any a up to 1e4; for a beyond ~27 the second
/// term underflows harmlessly to zero. At a = 0 this reduces bit-exactly to
/// w on the real line.
pub fn w_weighted(x: f64, a: f64) -> Result<Complex64> {
    ensure_finite(Complex64::new(x, a))?;
    if a < 0.0 {
        return Err(Error::InvalidInput(format!("w_weighted requires a >= 0, got {a}")));
    }
    let mag = 2.0 * (-x * x).exp();
    let angle = 2.0 * x * a;
    let first = Complex64::new(mag * angle.cos(), mag * angle.sin());
    let second = (-a * a).exp() * w_upper(-x, a);
    Ok(first - second)
}

/// erf(z) = 1 - e^{-z^2} w(iz); odd, so Re z < 0 is reflected to keep the
/// w argument in the upper half-plane.
pub fn erf_complex(z: Complex64) -> Result<Complex64> {
    ensure_finite(z)?;
    if z.re < 0.0 {
        return Ok(-erf_complex(-z)?);
    }
    let e = exp_minus_z_squared(z.re, z.im)?;
    Ok(1.0 - e * w_upper(-z.im, z.re))
}

/// Dawson's integral daw(z) = sqrt(pi) (w(z) - e^{-z^2}) / (2i).
///
/// For Im z < 0 the difference is rewritten through the reflection as
/// e^{-z^2} - w(-z), avoiding the subtraction of two huge continuations.
pub fn dawson(z: Complex64) -> Result<Complex64> {
    ensure_finite(z)?;
    let diff = if z.im >= 0.0 {
        w_upper(z.re, z.im) - exp_minus_z_squared(z.re, z.im)?
    } else {
        exp_minus_z_squared(z.re, z.im)? - w_upper(-z.re, -z.im)
    };
    Ok(0.5 * SQRT_PI * Complex64::new(diff.im, -diff.re))
}

/// The Voigt function K(x, y) = Re w(x + iy), defined for y >= 0; equals
/// e^{-x^2} exactly at y = 0.
pub fn voigt(x: f64, y: f64) -> Result<f64> {
    ensure_finite(Complex64::new(x, y))?;
    if y < 0.0 {
        return Err(Error::InvalidInput(format!(
            "voigt is defined for y >= 0, got {y}"
        )));
    }
    if y == 0.0 {
        return Ok((-x * x).exp());
    }
    Ok(w_upper(x, y).re)
}

/// The Fresnel integral F(z) = (1+i)/2 * (1 - e^{i (pi/2) z^2} w(sqrt(pi)(1+i)z/2)).
pub fn fresnel(z: Complex64) -> Result<Complex64> {
    ensure_finite(z)?;
    // |e^{i (pi/2) z^2}| = e^{-pi x y}
    let m = -PI * z.re * z.im;
    if m > EXP_OVERFLOW_LIMIT {
        return Err(Error::Overflow {
            log10_magnitude: m * LOG10_E,
        });
    }
    let mag = m.exp();
    let angle = 0.5 * PI * (z.re - z.im) * (z.re + z.im);
    let phase = Complex64::new(mag * angle.cos(), mag * angle.sin());
    let arg = 0.5 * SQRT_PI * Complex64::new(z.re - z.im, z.re + z.im);
    let wv = w(arg)?;
    Ok(0.5 * Complex64::new(1.0, 1.0) * (1.0 - phase * wv))
}

/// The normal distribution function integrated from 0:
/// Phi(z) = (1/2)(1 - e^{-z^2/2} w(iz/sqrt(2))); odd, Phi(0) = 0.
pub fn normal_cdf(z: Complex64) -> Result<Complex64> {
    ensure_finite(z)?;
    if z.re < 0.0 {
        return Ok(-normal_cdf(-z)?);
    }
    let m = 0.5 * (z.im - z.re) * (z.im + z.re);
    if m > EXP_OVERFLOW_LIMIT {
        return Err(Error::Overflow {
            log10_magnitude: m * LOG10_E,
        });
    }
    let mag = m.exp();
    let angle = -z.re * z.im;
    let factor = Complex64::new(mag * angle.cos(), mag * angle.sin());
    let wv = w_upper(-z.im * FRAC_1_SQRT_2, z.re * FRAC_1_SQRT_2);
    Ok(0.5 * (1.0 - factor * wv))
}

/// Summary of a sweep comparing [`w`] against [`w_quadrature_oracle`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AccuracyReport {
    pub max_abs_error: f64,
    pub mean_abs_error: f64,
    pub points_tested: usize,
}

/// Compares [`w`] to the quadrature oracle at every point; errors are
/// absolute, scaled by max(1, |oracle|) where the value exceeds unit
/// magnitude (lower half-plane growth).
pub fn accuracy_report(points: &[Complex64], oracle_tol: f64) -> Result<AccuracyReport> {
    let mut max_err: f64 = 0.0;
    let mut sum_err: f64 = 0.0;
    for &z in points {
        let value = w(z)?;
        let reference = w_quadrature_oracle(z, oracle_tol)?;
        let err = (value - reference).norm() / reference.norm().max(1.0);
        max_err = max_err.max(err);
        sum_err += err;
    }
    let mean = if points.is_empty() {
        0.0
    } else {
        sum_err / points.len() as f64
    };
    Ok(AccuracyReport {
        max_abs_error: max_err,
        mean_abs_error: mean,
        points_tested: points.len(),
    })
}

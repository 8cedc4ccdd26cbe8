//! Precomputed transform weights and their binary serialization.

use num_complex::Complex64;
use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::sampling::{SampledFunction, TransformConfig};
use crate::transform::{beta_entry, Direction, EvaluationGrid, Spectrum};

/// File magic for the serialized table layout.
const MAGIC: [u8; 4] = *b"GWT1";

/// Cached weights `beta1[n][k]` = (h/2) e^{-(nh/c)^2} w(-pi c x_k, -nh/c) and
/// `beta2[n][k]` with the opposite first-argument sign (the inverse direction
/// swaps the two signs). Rows run n = -trunc_depth..N; columns follow the
/// evaluation grid.
///
/// A table is immutable once built and can be shared freely between
/// threads; applying it reproduces the truncated transform bit for bit
/// because the summation order is identical.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightTable {
    config: TransformConfig,
    grid: EvaluationGrid,
    direction: Direction,
    // row-major: row (n + trunc_depth), column k
    beta1: Vec<Complex64>,
    beta2: Vec<Complex64>,
}

pub(super) fn build(
    cfg: &TransformConfig,
    grid: &EvaluationGrid,
    direction: Direction,
) -> Result<WeightTable> {
    let sign = match direction {
        Direction::Forward => -1.0,
        Direction::Inverse => 1.0,
    };
    let rows = cfg.trunc_depth() + cfg.half_count() + 1;
    let cols = grid.len();
    let mut beta1 = Vec::with_capacity(rows * cols);
    let mut beta2 = Vec::with_capacity(rows * cols);
    let lo = -(cfg.trunc_depth() as i64);
    let hi = cfg.half_count() as i64;
    for n in lo..=hi {
        for &p in grid.points() {
            let x = sign * std::f64::consts::PI * cfg.c() * p;
            beta1.push(beta_entry(cfg, n, x)?);
        }
    }
    for n in lo..=hi {
        for &p in grid.points() {
            let x = -sign * std::f64::consts::PI * cfg.c() * p;
            beta2.push(beta_entry(cfg, n, x)?);
        }
    }
    Ok(WeightTable {
        config: *cfg,
        grid: grid.clone(),
        direction,
        beta1,
        beta2,
    })
}

impl WeightTable {
    pub fn config(&self) -> &TransformConfig {
        &self.config
    }

    pub fn grid(&self) -> &EvaluationGrid {
        &self.grid
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// Number of weight rows, trunc_depth + N + 1.
    pub fn rows(&self) -> usize {
        self.config.trunc_depth() + self.config.half_count() + 1
    }

    fn flat_index(&self, n: i64, k: usize) -> Result<usize> {
        let lo = -(self.config.trunc_depth() as i64);
        let hi = self.config.half_count() as i64;
        if n < lo || n > hi {
            return Err(Error::IndexOutOfRange {
                index: n,
                half_count: self.config.half_count(),
            });
        }
        if k >= self.grid.len() {
            return Err(Error::InvalidInput(format!(
                "grid column {k} out of range, grid has {} points",
                self.grid.len()
            )));
        }
        Ok((n - lo) as usize * self.grid.len() + k)
    }

    /// First-sum weight at signed row n and grid column k.
    pub fn beta1(&self, n: i64, k: usize) -> Result<Complex64> {
        Ok(self.beta1[self.flat_index(n, k)?])
    }

    /// Second-sum weight at signed row n and grid column k.
    pub fn beta2(&self, n: i64, k: usize) -> Result<Complex64> {
        Ok(self.beta2[self.flat_index(n, k)?])
    }

    /// Evaluates the truncated transform over the whole grid using the
    /// cached weights; `requested` guards against applying a table in the
    /// wrong direction.
    pub(super) fn apply(
        &self,
        samples: &SampledFunction,
        requested: Direction,
    ) -> Result<Spectrum> {
        if self.direction != requested {
            return Err(Error::DirectionMismatch {
                table: self.direction,
                requested,
            });
        }
        // every referenced index n in -N..N must exist in the samples
        if samples.step() != self.config.h() {
            return Err(Error::ConfigMismatch(format!(
                "sample step {} differs from table h {}",
                samples.step(),
                self.config.h()
            )));
        }
        if samples.half_count() < self.config.half_count() {
            return Err(Error::ConfigMismatch(format!(
                "samples cover |n| <= {} but the table references |n| <= {}",
                samples.half_count(),
                self.config.half_count()
            )));
        }
        let lo = -(self.config.trunc_depth() as i64);
        let hi = self.config.half_count() as i64;
        let cols = self.grid.len();
        let mut values = vec![Complex64::new(0.0, 0.0); cols];
        for (k, value) in values.iter_mut().enumerate() {
            let mut first = Complex64::new(0.0, 0.0);
            for n in lo..=hi {
                first += samples.value(n)? * self.beta1[(n - lo) as usize * cols + k];
            }
            let mut second = Complex64::new(0.0, 0.0);
            for n in lo..=hi {
                second += samples.value(-n)? * self.beta2[(n - lo) as usize * cols + k];
            }
            *value = first + second;
        }
        Spectrum::new(self.grid.clone(), values)
    }

    /// Serializes the table; the layout is a fixed-width little-endian
    /// binary stream holding the exact bit patterns, so a round trip
    /// reproduces every weight bit for bit.
    pub fn write_to<W: Write>(&self, mut out: W) -> Result<()> {
        out.write_all(&MAGIC)?;
        out.write_all(&[match self.direction {
            Direction::Forward => 0u8,
            Direction::Inverse => 1u8,
        }])?;
        out.write_all(&(self.config.trunc_depth() as u64).to_le_bytes())?;
        out.write_all(&(self.config.half_count() as u64).to_le_bytes())?;
        out.write_all(&self.config.h().to_bits().to_le_bytes())?;
        out.write_all(&self.config.c().to_bits().to_le_bytes())?;
        out.write_all(&(self.grid.len() as u64).to_le_bytes())?;
        for &p in self.grid.points() {
            out.write_all(&p.to_bits().to_le_bytes())?;
        }
        for table in [&self.beta1, &self.beta2] {
            for v in table {
                out.write_all(&v.re.to_bits().to_le_bytes())?;
                out.write_all(&v.im.to_bits().to_le_bytes())?;
            }
        }
        Ok(())
    }

    /// Reads a table serialized by [`WeightTable::write_to`], re-validating
    /// every structural invariant.
    pub fn read_from<R: Read>(mut input: R) -> Result<Self> {
        let mut magic = [0u8; 4];
        input.read_exact(&mut magic)?;
        if magic != MAGIC {
            return Err(Error::Format(format!(
                "bad magic {magic:?}, expected {MAGIC:?}"
            )));
        }
        let mut byte = [0u8; 1];
        input.read_exact(&mut byte)?;
        let direction = match byte[0] {
            0 => Direction::Forward,
            1 => Direction::Inverse,
            other => {
                return Err(Error::Format(format!("bad direction byte {other}")));
            }
        };
        let trunc_depth = read_u64(&mut input)? as usize;
        let half_count = read_u64(&mut input)? as usize;
        let h = f64::from_bits(read_u64(&mut input)?);
        let c = f64::from_bits(read_u64(&mut input)?);
        let config = TransformConfig::new(h, c, half_count)
            .and_then(|cfg| cfg.with_trunc_depth(trunc_depth))
            .map_err(|e| Error::Format(format!("invalid stored config: {e}")))?;
        let grid_len = read_u64(&mut input)? as usize;
        let mut points = Vec::with_capacity(grid_len);
        for _ in 0..grid_len {
            points.push(f64::from_bits(read_u64(&mut input)?));
        }
        let grid = EvaluationGrid::new(points)
            .map_err(|e| Error::Format(format!("invalid stored grid: {e}")))?;
        let rows = trunc_depth + half_count + 1;
        let mut tables = [Vec::new(), Vec::new()];
        for table in &mut tables {
            table.reserve(rows * grid_len);
            for _ in 0..rows * grid_len {
                let re = f64::from_bits(read_u64(&mut input)?);
                let im = f64::from_bits(read_u64(&mut input)?);
                table.push(Complex64::new(re, im));
            }
        }
        let [beta1, beta2] = tables;
        Ok(WeightTable {
            config,
            grid,
            direction,
            beta1,
            beta2,
        })
    }
}

fn read_u64<R: Read>(input: &mut R) -> Result<u64> {
    let mut buf = [0u8; 8];
    input.read_exact(&mut buf)?;
    Ok(u64::from_le_bytes(buf))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::faddeeva;
    use crate::transform::{forward_truncated, forward_with_table, inverse_with_table, precompute_weights};
    use std::io::Cursor;

    fn cfg(h: f64, c: f64, n: usize) -> TransformConfig {
        TransformConfig::new(h, c, n).unwrap()
    }

    #[test]
    fn entries_match_fresh_faddeeva_evaluations() {
        let c = cfg(0.2, 0.25, 6);
        let grid = EvaluationGrid::linspace(-2.0, 2.0, 9).unwrap();
        let t = precompute_weights(&c, &grid, Direction::Forward).unwrap();
        for (k, &p) in grid.points().iter().enumerate() {
            // n = 0 row: (h/2) w(-pi c nu, 0)
            let x = -std::f64::consts::PI * c.c() * p;
            let fresh = 0.5 * c.h() * faddeeva::w(Complex64::new(x, 0.0)).unwrap();
            assert!((t.beta1(0, k).unwrap() - fresh).norm() <= 1e-12);
            // a generic negative row recomputed naively
            let a = -2.0 * c.h() / c.c();
            let fresh = 0.5
                * c.h()
                * (-a * a).exp()
                * faddeeva::w(Complex64::new(x, -a)).unwrap();
            assert!((t.beta1(-2, k).unwrap() - fresh).norm() <= 1e-12);
            // a positive row, against the combined form evaluated freshly
            let fresh = 0.5 * c.h() * faddeeva::w_weighted(x, 3.0 * c.h() / c.c()).unwrap();
            assert!((t.beta1(3, k).unwrap() - fresh).norm() <= 1e-12);
        }
        assert!(t.beta1(7, 0).is_err());
        assert!(t.beta1(-4, 0).is_err());
        assert!(t.beta2(0, 9).is_err());
    }

    #[test]
    fn forward_and_inverse_tables_swap_their_columns() {
        let c = cfg(0.2, 0.25, 5);
        let grid = EvaluationGrid::linspace(-1.0, 1.0, 7).unwrap();
        let fwd = precompute_weights(&c, &grid, Direction::Forward).unwrap();
        let inv = precompute_weights(&c, &grid, Direction::Inverse).unwrap();
        for n in -3i64..=5 {
            for k in 0..grid.len() {
                assert_eq!(inv.beta1(n, k).unwrap(), fwd.beta2(n, k).unwrap());
                assert_eq!(inv.beta2(n, k).unwrap(), fwd.beta1(n, k).unwrap());
            }
        }
    }

    #[test]
    fn table_application_reproduces_the_truncated_transform_bitwise() {
        let c = cfg(0.13, 0.13, 12);
        let grid = EvaluationGrid::linspace(-3.0, 3.0, 31).unwrap();
        let s = SampledFunction::sample(&c, |t| (1.0 + t).recip().sin());
        let table = precompute_weights(&c, &grid, Direction::Forward).unwrap();
        let spectrum = forward_with_table(&s, &table).unwrap();
        for (k, &nu) in grid.points().iter().enumerate() {
            let direct = forward_truncated(&s, &c, nu).unwrap();
            let cached = spectrum.values()[k];
            assert_eq!(direct.re.to_bits(), cached.re.to_bits());
            assert_eq!(direct.im.to_bits(), cached.im.to_bits());
        }
    }

    #[test]
    fn zero_samples_give_a_zero_spectrum() {
        let c = cfg(0.2, 0.2, 4);
        let grid = EvaluationGrid::linspace(0.0, 2.0, 5).unwrap();
        let table = precompute_weights(&c, &grid, Direction::Inverse).unwrap();
        let z = SampledFunction::sample(&c, |_| 0.0);
        let s = inverse_with_table(&z, &table).unwrap();
        assert!(s.values().iter().all(|v| v.norm() == 0.0));
    }

    #[test]
    fn direction_and_shape_mismatches_are_rejected() {
        let c = cfg(0.2, 0.2, 4);
        let grid = EvaluationGrid::linspace(0.0, 2.0, 5).unwrap();
        let table = precompute_weights(&c, &grid, Direction::Forward).unwrap();
        let s = SampledFunction::sample(&c, |_| 1.0);
        assert!(matches!(
            inverse_with_table(&s, &table),
            Err(Error::DirectionMismatch { .. })
        ));
        let short = SampledFunction::sample(&cfg(0.2, 0.2, 3), |_| 1.0);
        assert!(matches!(
            forward_with_table(&short, &table),
            Err(Error::ConfigMismatch(_))
        ));
        // longer sample vectors are accepted: the table only reads |n| <= N
        let long = SampledFunction::sample(&cfg(0.2, 0.2, 6), |_| 1.0);
        let a = forward_with_table(&long, &table).unwrap();
        let b = forward_with_table(&s, &table).unwrap();
        assert_eq!(a.values(), b.values());
    }

    #[test]
    fn serialization_round_trips_bit_for_bit() {
        let c = cfg(0.17, 0.21, 9).with_trunc_depth(2).unwrap();
        let grid = EvaluationGrid::new(vec![-1.5, -0.25, 0.0, 1.0e-3, 2.75]).unwrap();
        let table = precompute_weights(&c, &grid, Direction::Inverse).unwrap();
        let mut buf = Vec::new();
        table.write_to(&mut buf).unwrap();
        let back = WeightTable::read_from(Cursor::new(&buf)).unwrap();
        assert_eq!(back, table);
        // a corrupted magic is rejected up front
        let mut bad = buf.clone();
        bad[0] ^= 0xff;
        assert!(matches!(
            WeightTable::read_from(Cursor::new(&bad)),
            Err(Error::Format(_))
        ));
        // truncated stream surfaces as an I/O error
        assert!(WeightTable::read_from(Cursor::new(&buf[..40])).is_err());
    }
}

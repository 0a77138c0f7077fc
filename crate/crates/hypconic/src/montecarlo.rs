//! Seeded Monte Carlo area estimators, for exploratory cross-checks only.
//!
//! These never participate in the deterministic verification paths; they
//! exist to probe regions the slice oracles do not cover and to give a
//! quick independent look at a suspicious value. Estimates come with a
//! standard error, and identical seeds reproduce identical results.

use crate::error::Error;
use crate::family::{Cutoff, RegionFamily, RegionSpec};
use crate::fmath;
use crate::models::{hyp_area_density, BckPoint};
use crate::Result;

/// A Monte Carlo estimate with its one-sigma standard error.
#[derive(Debug, Clone, Copy)]
pub struct McEstimate {
    pub value: f64,
    pub std_error: f64,
    pub samples: u64,
}

// splitmix64, enough randomness for sampling points
struct Rng(u64);

impl Rng {
    fn next_unit(&mut self) -> f64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        ((z ^ (z >> 31)) >> 11) as f64 / (1u64 << 53) as f64
    }
}

/// Hyperbolic area of a bounded region by uniform sampling of its bounding
/// box. The region must have a lineal cutoff (or be the finite `A^C`), so
/// the density stays bounded on it.
pub fn hyp_area_mc(region: &RegionSpec, samples: u64, seed: u64) -> Result<McEstimate> {
    region.validate()?;
    if samples == 0 {
        return Err(Error::InvalidParameter {
            name: "samples",
            value: 0.0,
        });
    }
    // every supported slice half-width is bounded by the stored shape
    // parameter (which is 1 for the horodisk)
    let c = region.shape();
    let (x_max, y_max) = match (region.family(), region.cutoff()) {
        (RegionFamily::A, None) => (c, 1.0),
        (_, Some(Cutoff::Lineal(eta))) => (c, eta),
        _ => {
            return Err(Error::InvalidRegion {
                reason: "monte carlo needs a lineal cutoff or the finite triangle",
            })
        }
    };
    let box_area = 2.0 * x_max * y_max;
    let mut rng = Rng(seed);
    let mut sum = 0.0f64;
    let mut sum_sq = 0.0f64;
    for _ in 0..samples {
        let x = (2.0 * rng.next_unit() - 1.0) * x_max;
        let y = rng.next_unit() * y_max;
        let value = match BckPoint::new(x, y) {
            Ok(p) if region.contains(p) => hyp_area_density(p).value(),
            _ => 0.0,
        };
        sum += value;
        sum_sq += value * value;
    }
    let n = samples as f64;
    let mean = sum / n;
    let variance = (sum_sq / n - mean * mean).max(0.0);
    Ok(McEstimate {
        value: box_area * mean,
        std_error: box_area * fmath::sqrt(variance / n),
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms;

    #[test]
    fn estimates_track_the_closed_forms() {
        let region = RegionSpec::new(RegionFamily::E, 0.6)
            .unwrap()
            .with_lineal_cutoff(0.5)
            .unwrap();
        let est = hyp_area_mc(&region, 200_000, 7).unwrap();
        let closed = forms::area_parabola_segment(0.6, 0.5).unwrap();
        assert!(
            (est.value - closed).abs() < 4.0 * est.std_error,
            "{} vs {closed} (sigma {})",
            est.value,
            est.std_error
        );

        let band = RegionSpec::new(RegionFamily::B, 0.6)
            .unwrap()
            .with_lineal_cutoff(0.5)
            .unwrap();
        let est = hyp_area_mc(&band, 200_000, 11).unwrap();
        let closed = forms::area_band_segment(0.6, 0.5).unwrap();
        assert!((est.value - closed).abs() < 4.0 * est.std_error);
    }

    #[test]
    fn identical_seeds_reproduce() {
        let region = RegionSpec::new(RegionFamily::A, 0.5).unwrap();
        let a = hyp_area_mc(&region, 10_000, 3).unwrap();
        let b = hyp_area_mc(&region, 10_000, 3).unwrap();
        assert_eq!(a.value, b.value);
        assert!(hyp_area_mc(&region, 0, 3).is_err());
        let uncut = RegionSpec::new(RegionFamily::B, 0.5).unwrap();
        assert!(hyp_area_mc(&uncut, 100, 3).is_err());
    }
}

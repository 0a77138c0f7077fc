//! Metrology of the hyperbolic elliptic parabola in the Beltrami–Cayley–Klein
//! (BCK) disk and Beltrami–Poincaré half-plane (BPh) models.
//!
//! The canonical h-elliptic parabolic disk is
//!
//! ```text
//! E^C = { (x, y) : x²/C² + 2y² − 2y ≤ 0 },        0 < C < 1,
//! ```
//!
//! drawn inside the unit disk of the BCK model. Its supporting half distance
//! band is
//!
//! ```text
//! B^C = { (x, y) : x²/C² + y² − 1 ≤ 0  and  y ≥ 0 }.
//! ```
//!
//! This crate measures how close the two are, in hyperbolic area and in
//! (regularized) circumference, together with everything needed to state the
//! answers: the focus construction through pencils of dual conics, the
//! synthetic element catalog (supporting and directrix horocycles, focal
//! distance, band radius), closed forms for every area and boundary length of
//! the region family `B ⊇ D ⊇ E ⊇ V`, the Study–de Sitter polar computation
//! of the circumference difference, and half-plane transcriptions of all of
//! the above.
//!
//! Every closed form is backed by an independent adaptive-quadrature oracle
//! in [`quad`]; the oracle never calls the closed forms, so agreement between
//! the two is evidence rather than tautology.
//!
//! ```
//! use hypconic::family::{RegionFamily, RegionSpec};
//! use hypconic::{forms, quad};
//!
//! // the focus pipeline and its closed form agree
//! let pipe = hypconic::conics::h_elliptic_parabola_foci(0.6)?;
//! assert!((pipe.proper_focus.y() - 0.36 / 1.64).abs() < 1e-12);
//!
//! // a closed-form area against the quadrature oracle
//! let segment = RegionSpec::new(RegionFamily::E, 0.6)?.with_lineal_cutoff(0.5)?;
//! let oracle = quad::hyp_area(&segment, &quad::QuadConfig::default())?;
//! let closed = forms::area_parabola_segment(0.6, 0.5)?;
//! assert!(oracle.converged && (closed - oracle.value).abs() < 1e-10);
//! # Ok::<(), hypconic::Error>(())
//! ```
//!
//! The crate is `no_std`-compatible (`alloc` is used for small result lists):
//! disable default features and enable `libm` to build without the standard
//! library.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("either the `std` or the `libm` feature must be enabled");

extern crate alloc;

pub mod conics;
pub mod error;
pub mod family;
mod fmath;
pub mod forms;
pub mod models;
#[cfg(feature = "montecarlo")]
pub mod montecarlo;
pub mod quad;
pub mod sds;

pub use error::Error;
pub use models::{BckPoint, BphPoint, DensityValue, HomogeneousPoint};

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;

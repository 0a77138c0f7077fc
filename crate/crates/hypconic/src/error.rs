//! Crate error type.

use core::fmt;

/// Errors raised by domain guards and degenerate inputs.
///
/// All geometric operations are total on their stated domains; anything
/// outside raises one of these instead of returning `NaN` or `±∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// A BCK point left the open unit disk (interior guard `x² + y² ≤ 1 − 1e-14`).
    OutsideDisk { x: f64, y: f64 },
    /// A BPh point had a non-positive height coordinate.
    NonPositiveHeight { y: f64 },
    /// A Study–de Sitter evaluation point was inside or on the absolute.
    InsideAbsolute { x: f64, y: f64 },
    /// All three homogeneous coordinates were zero.
    ZeroHomogeneous,
    /// A conic matrix was singular where an inverse was required.
    SingularConic { det: f64 },
    /// Two pencil generators were proportional.
    ProportionalForms,
    /// A degenerate form did not have the rank the operation requires.
    RankMismatch { expected: u8, found: u8 },
    /// A scalar parameter was outside its open validity interval.
    InvalidParameter { name: &'static str, value: f64 },
    /// An `artanh` argument reached the margin `1 − 1e-14` in magnitude.
    ArtanhDomain { value: f64 },
    /// A region descriptor failed validation.
    InvalidRegion { reason: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::OutsideDisk { x, y } => {
                write!(f, "point ({x}, {y}) is not interior to the unit disk")
            }
            Error::NonPositiveHeight { y } => {
                write!(f, "half-plane point needs y > 0, got y = {y}")
            }
            Error::InsideAbsolute { x, y } => {
                write!(f, "point ({x}, {y}) is not exterior to the absolute")
            }
            Error::ZeroHomogeneous => write!(f, "homogeneous coordinates are all zero"),
            Error::SingularConic { det } => {
                write!(f, "conic matrix is singular within tolerance (det = {det})")
            }
            Error::ProportionalForms => write!(f, "pencil generators are proportional"),
            Error::RankMismatch { expected, found } => {
                write!(f, "form has rank {found}, expected {expected}")
            }
            Error::InvalidParameter { name, value } => {
                write!(f, "parameter {name} = {value} is outside its domain")
            }
            Error::ArtanhDomain { value } => {
                write!(f, "artanh argument {value} is outside (-1, 1) margin")
            }
            Error::InvalidRegion { reason } => write!(f, "invalid region: {reason}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

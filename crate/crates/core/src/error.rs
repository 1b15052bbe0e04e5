use thiserror::Error;

use crate::angle::PiRational;
use crate::torus::LocusId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseAngleError {
    #[error("malformed angle `{0}`: expected `p/q` or `p` (a multiple of π)")]
    Malformed(String),
    #[error("zero denominator in angle `{0}`")]
    ZeroDenominator(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangleError {
    /// The three angles do not sum to `π` or `−π`.
    #[error("SumNotPi: interior angles sum to {0}, expected π or -π")]
    SumNotPi(PiRational),
    #[error("OutOfRange: angle {angle} lies outside the {sheet} sheet range")]
    OutOfRange {
        angle: PiRational,
        sheet: &'static str,
    },
    #[error("NotDegenerate: triangle {0} has no zero interior angle")]
    NotDegenerate(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeasureError {
    #[error("UnsupportedLocus: {0:?} is not a one-dimensional locus")]
    UnsupportedLocus(LocusId),
    #[error("sample count must be at least 1")]
    NoSamples,
}

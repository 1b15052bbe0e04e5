//! Angle parsing for the command line.

use std::fmt;

use clap::ValueEnum;
use triangle_torus::PiRational;

use crate::error::CliError;

/// Largest denominator tried when rationalizing float input.
pub const MAX_DENOMINATOR: u32 = 360;
/// Float inputs within this many radians of a rational multiple of π are
/// treated as exact.
pub const RATIONALIZE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum AngleFormat {
    /// `p/q` meaning `(p/q)·π`.
    #[default]
    PiRational,
    Degrees,
    Radians,
}

/// A parsed angle, exact when possible.
#[derive(Debug, Clone, PartialEq)]
pub enum Angle {
    Exact(PiRational),
    Float(f64),
}

impl Angle {
    pub fn radians(&self) -> f64 {
        match self {
            Angle::Exact(r) => r.to_radians(),
            Angle::Float(x) => *x,
        }
    }

    pub fn exact(&self) -> Option<&PiRational> {
        match self {
            Angle::Exact(r) => Some(r),
            Angle::Float(_) => None,
        }
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Angle::Exact(r) => write!(f, "{r}"),
            Angle::Float(x) => f.write_str(&format_float(*x)),
        }
    }
}

pub fn parse_angle(s: &str, format: AngleFormat) -> Result<Angle, CliError> {
    let radians = match format {
        AngleFormat::PiRational => {
            return s
                .parse::<PiRational>()
                .map(Angle::Exact)
                .map_err(|e| CliError::Usage(e.to_string()))
        }
        AngleFormat::Degrees => parse_float(s)?.to_radians(),
        AngleFormat::Radians => parse_float(s)?,
    };
    Ok(
        match PiRational::rationalize(radians, MAX_DENOMINATOR, RATIONALIZE_TOLERANCE) {
            Some(r) => Angle::Exact(r),
            None => Angle::Float(radians),
        },
    )
}

/// Parses an angle that must be a rational multiple of π.
pub fn parse_exact(s: &str, format: AngleFormat) -> Result<PiRational, CliError> {
    match parse_angle(s, format)? {
        Angle::Exact(r) => Ok(r),
        Angle::Float(_) => Err(CliError::Usage(format!(
            "`{s}` is not within {RATIONALIZE_TOLERANCE:e} rad of a multiple of π with denominator ≤ {MAX_DENOMINATOR}"
        ))),
    }
}

fn parse_float(s: &str) -> Result<f64, CliError> {
    let x: f64 = s
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("malformed number `{s}`")))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(CliError::Usage(format!("non-finite number `{s}`")))
    }
}

/// Twelve significant digits, trailing zeros trimmed.
pub fn format_float(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{}", if x == 0.0 { 0.0 } else { x });
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

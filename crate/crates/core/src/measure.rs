//! Relative measures of triangle families.
//!
//! The torus inherits its metric from the two triangle sheets: each sheet is
//! the planar triangle `α+β+γ = ±π` with the Euclidean metric of `ℝ³`. In
//! relative arguments `ξ₁ = 2β`, `ξ₂ = −2α` this metric is the constant form
//!
//! ```text
//! ds² = (dξ₁² + dξ₂² + (dξ₁ − dξ₂)²) / 4
//! ```
//!
//! so the uniform law on `[0, 2π)²` is the uniform law of the sheets, and a
//! closed line of primitive direction `(p, q)` has length
//! `π·√(p² + q² + (p − q)²)`.
//!
//! The relative measure of a family is the generic multiplicity of its
//! members times its geometric size.

use std::collections::BTreeMap;
use std::f64::consts::{PI, SQRT_2, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::approx::{FloatPoint, SAMPLE_TOLERANCE};
use crate::error::MeasureError;
use crate::symmetry;
use crate::torus::{rho, LocusId, Orientation, TorusPoint};
use crate::triangle::triple_from_fractions;

/// Samples drawn from each independent generator stream.
pub const STREAM_CHUNK: usize = 1 << 16;

/// Identity of the sampling generator, recorded alongside estimates.
pub const RNG_ALGORITHM: &str =
    "ChaCha8Rng (rand_chacha 0.9), seed_from_u64, stream k = chunk k of 65536";

/// Families of triangle classes whose relative measures are reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Total,
    Obtuse,
    Acute,
    Isosceles,
    Right,
    Degenerate,
    ObtuseIsosceles,
    AcuteIsosceles,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Total,
        Family::Obtuse,
        Family::Acute,
        Family::Isosceles,
        Family::Right,
        Family::Degenerate,
        Family::ObtuseIsosceles,
        Family::AcuteIsosceles,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Family::Total => "T",
            Family::Obtuse => "O",
            Family::Acute => "A",
            Family::Isosceles => "I",
            Family::Right => "R",
            Family::Degenerate => "D",
            Family::ObtuseIsosceles => "OI",
            Family::AcuteIsosceles => "AI",
        }
    }

    /// Two-dimensional families are measured by area, the rest by length.
    pub fn is_area(self) -> bool {
        matches!(self, Family::Total | Family::Obtuse | Family::Acute)
    }

    /// A generic member of the family.
    pub fn generic_witness(self) -> TorusPoint {
        let t = |a, b, c| rho(&triple_from_fractions(a, b, c).expect("valid witness"));
        match self {
            Family::Total | Family::Obtuse => t((3, 5), (1, 4), (3, 20)),
            Family::Acute => t((2, 5), (1, 3), (4, 15)),
            Family::Isosceles | Family::AcuteIsosceles => t((3, 7), (2, 7), (2, 7)),
            Family::ObtuseIsosceles => t((5, 7), (1, 7), (1, 7)),
            Family::Right => t((1, 2), (1, 3), (1, 6)),
            Family::Degenerate => t((0, 1), (1, 3), (2, 3)),
        }
    }

    /// Multiplicity of a generic member.
    pub fn generic_multiplicity(self) -> usize {
        symmetry::multiplicity(&self.generic_witness())
    }

    /// Euclidean area or length of the family inside the torus.
    pub fn geometric_size(self) -> f64 {
        // Each sheet is an equilateral triangle of side √2·π.
        let side = SQRT_2 * PI;
        let sheet_area = 3f64.sqrt() / 4.0 * side * side;
        // The acute triangles form the medial triangle of each sheet.
        let acute_area = sheet_area / 4.0;
        let lines = |ls: [LocusId; 3]| -> f64 {
            ls.into_iter()
                .map(|l| locus_length(l).expect("line locus"))
                .sum()
        };
        let isosceles = lines([LocusId::IA, LocusId::IB, LocusId::IC]);
        match self {
            Family::Total => 2.0 * sheet_area,
            Family::Acute => 2.0 * acute_area,
            Family::Obtuse => 2.0 * (sheet_area - acute_area),
            Family::Isosceles => isosceles,
            Family::Right => lines([LocusId::RA, LocusId::RB, LocusId::RC]),
            Family::Degenerate => lines([LocusId::DA, LocusId::DB, LocusId::DC]),
            // Each altitude meets the medial triangle at its midpoint; the
            // half through the apex is obtuse.
            Family::ObtuseIsosceles | Family::AcuteIsosceles => isosceles / 2.0,
        }
    }

    pub fn relative_measure(self) -> f64 {
        self.generic_multiplicity() as f64 * self.geometric_size()
    }
}

/// Arc length of a one-dimensional locus in the torus metric.
pub fn locus_length(l: LocusId) -> Result<f64, MeasureError> {
    let eq = l.equation().ok_or(MeasureError::UnsupportedLocus(l))?;
    let (p, q) = eq.direction();
    let norm2 = p * p + q * q + (p - q) * (p - q);
    Ok(PI * (norm2 as f64).sqrt())
}

/// Analytic measures of the standard families.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureReport {
    pub total: f64,
    pub obtuse: f64,
    pub acute: f64,
    pub isosceles: f64,
    pub right: f64,
    pub degenerate: f64,
    pub obtuse_isosceles: f64,
    pub acute_isosceles: f64,
    /// Keys `"O:A"`, `"I:AI"`, `"I:OI"`, `"I:R"`, `"D:R"`.
    pub ratios: BTreeMap<String, f64>,
}

impl MeasureReport {
    pub fn get(&self, family: Family) -> f64 {
        match family {
            Family::Total => self.total,
            Family::Obtuse => self.obtuse,
            Family::Acute => self.acute,
            Family::Isosceles => self.isosceles,
            Family::Right => self.right,
            Family::Degenerate => self.degenerate,
            Family::ObtuseIsosceles => self.obtuse_isosceles,
            Family::AcuteIsosceles => self.acute_isosceles,
        }
    }
}

pub fn analytic_measures() -> MeasureReport {
    let m = Family::relative_measure;
    let (o, a, i, r, d) = (
        m(Family::Obtuse),
        m(Family::Acute),
        m(Family::Isosceles),
        m(Family::Right),
        m(Family::Degenerate),
    );
    let (oi, ai) = (m(Family::ObtuseIsosceles), m(Family::AcuteIsosceles));
    let ratios = [
        ("O:A", o / a),
        ("I:AI", i / ai),
        ("I:OI", i / oi),
        ("I:R", i / r),
        ("D:R", d / r),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect();
    MeasureReport {
        total: m(Family::Total),
        obtuse: o,
        acute: a,
        isosceles: i,
        right: r,
        degenerate: d,
        obtuse_isosceles: oi,
        acute_isosceles: ai,
        ratios,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    Obtuse,
    Acute,
    PositiveOrientation,
    NegativeOrientation,
}

impl Region {
    pub const ALL: [Region; 4] = [
        Region::Obtuse,
        Region::Acute,
        Region::PositiveOrientation,
        Region::NegativeOrientation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Region::Obtuse => "obtuse",
            Region::Acute => "acute",
            Region::PositiveOrientation => "positive",
            Region::NegativeOrientation => "negative",
        }
    }

    /// Membership of a sample; points within [`SAMPLE_TOLERANCE`] of a
    /// degenerate or right locus belong to neither `Obtuse` nor `Acute`.
    pub fn contains(self, p: &FloatPoint) -> bool {
        match self {
            Region::PositiveOrientation => p.orientation(SAMPLE_TOLERANCE) == Orientation::Positive,
            Region::NegativeOrientation => p.orientation(SAMPLE_TOLERANCE) == Orientation::Negative,
            Region::Obtuse => p.classify(SAMPLE_TOLERANCE).obtuse,
            Region::Acute => p.classify(SAMPLE_TOLERANCE).acute,
        }
    }
}

/// A Monte Carlo estimate of a region's share of the torus.
#[derive(Debug, Clone, PartialEq)]
pub struct McEstimate {
    pub probability: f64,
    pub standard_error: f64,
    pub samples: u64,
    pub seed: u64,
    pub algorithm: &'static str,
}

impl McEstimate {
    fn from_hits(hits: u64, samples: u64, seed: u64) -> Self {
        let p = hits as f64 / samples as f64;
        McEstimate {
            probability: p,
            standard_error: (p * (1.0 - p) / samples as f64).sqrt(),
            samples,
            seed,
            algorithm: RNG_ALGORITHM,
        }
    }
}

fn stream(seed: u64, chunk: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk as u64);
    rng
}

fn draw(rng: &mut ChaCha8Rng) -> FloatPoint {
    let x: f64 = rng.random();
    let y: f64 = rng.random();
    FloatPoint::new(x * TAU, y * TAU)
}

fn chunk_points(seed: u64, chunk: usize, len: usize) -> impl Iterator<Item = FloatPoint> {
    let mut rng = stream(seed, chunk);
    (0..len).map(move |_| draw(&mut rng))
}

fn chunk_lengths(n: usize) -> impl ParallelIterator<Item = (usize, usize)> {
    let chunks = n.div_ceil(STREAM_CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(move |k| (k, STREAM_CHUNK.min(n - k * STREAM_CHUNK)))
}

/// `n` points drawn uniformly from `[0, 2π)²`.
///
/// Sample `i` comes from generator stream `i / 65536`, so the sequence does
/// not depend on how many worker threads produce it.
pub fn sample_uniform(seed: u64, n: usize) -> Vec<(f64, f64)> {
    let chunks: Vec<Vec<(f64, f64)>> = chunk_lengths(n)
        .map(|(k, len)| chunk_points(seed, k, len).map(|p| (p.xi1, p.xi2)).collect())
        .collect();
    chunks.concat()
}

/// Fraction of `n` uniform samples that fall in `region`.
pub fn estimate_probability(
    region: Region,
    n: usize,
    seed: u64,
) -> Result<McEstimate, MeasureError> {
    if n == 0 {
        return Err(MeasureError::NoSamples);
    }
    let hits: u64 = chunk_lengths(n)
        .map(|(k, len)| {
            chunk_points(seed, k, len)
                .filter(|p| region.contains(p))
                .count() as u64
        })
        .sum();
    Ok(McEstimate::from_hits(hits, n as u64, seed))
}

/// Estimates every region from one shared sample.
pub fn estimate_all(n: usize, seed: u64) -> Result<Vec<(Region, McEstimate)>, MeasureError> {
    if n == 0 {
        return Err(MeasureError::NoSamples);
    }
    let counts = chunk_lengths(n)
        .map(|(k, len)| {
            let mut c = [0u64; 4];
            for p in chunk_points(seed, k, len) {
                for (slot, region) in c.iter_mut().zip(Region::ALL) {
                    *slot += u64::from(region.contains(&p));
                }
            }
            c
        })
        .reduce(|| [0u64; 4], |a, b| [0, 1, 2, 3].map(|i| a[i] + b[i]));
    Ok(Region::ALL
        .into_iter()
        .zip(counts)
        .map(|(r, hits)| (r, McEstimate::from_hits(hits, n as u64, seed)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-12;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= TOL * b.abs().max(1.0)
    }

    #[test]
    fn multiplicity_factors() {
        assert_eq!(Family::Total.generic_multiplicity(), 1);
        assert_eq!(Family::Obtuse.generic_multiplicity(), 1);
        assert_eq!(Family::Acute.generic_multiplicity(), 1);
        assert_eq!(Family::Right.generic_multiplicity(), 1);
        assert_eq!(Family::Isosceles.generic_multiplicity(), 2);
        assert_eq!(Family::Degenerate.generic_multiplicity(), 2);
        assert_eq!(Family::ObtuseIsosceles.generic_multiplicity(), 2);
        assert_eq!(Family::AcuteIsosceles.generic_multiplicity(), 2);
    }

    #[test]
    fn witnesses_belong_to_their_family() {
        use crate::torus::classify;
        let f = |fam: Family| classify(&fam.generic_witness()).flags;
        assert!(f(Family::Obtuse).obtuse && f(Family::Obtuse).scalene);
        assert!(f(Family::Acute).acute && f(Family::Acute).scalene);
        assert!(f(Family::Isosceles).is_isosceles() && !f(Family::Isosceles).equilateral);
        assert!(f(Family::ObtuseIsosceles).obtuse && f(Family::ObtuseIsosceles).is_isosceles());
        assert!(f(Family::AcuteIsosceles).acute && f(Family::AcuteIsosceles).is_isosceles());
        assert!(f(Family::Right).is_right() && f(Family::Right).scalene);
        assert!(f(Family::Degenerate).degenerate && f(Family::Degenerate).scalene);
    }

    #[test]
    fn total_matches_metric_determinant() {
        // √det of the metric form (1/4)[[2,-1],[-1,2]] times the area 4π².
        let det: f64 = (2.0 * 2.0 - 1.0) / 16.0;
        assert!(close(
            Family::Total.geometric_size(),
            det.sqrt() * 4.0 * PI * PI
        ));
    }

    #[test]
    fn obtuse_plus_acute_is_total() {
        let m = analytic_measures();
        assert!(close(m.obtuse + m.acute, m.total));
        assert!(close(m.total, 3f64.sqrt() * PI * PI));
        assert!((m.total - 17.0946).abs() < 1e-4);
        assert!(close(m.ratios["O:A"], 3.0));
    }

    #[test]
    fn locus_lengths() {
        let s = |ls: &[LocusId]| ls.iter().map(|l| locus_length(*l).unwrap()).sum::<f64>();
        assert!(close(
            s(&[LocusId::IA, LocusId::IB, LocusId::IC]),
            3.0 * 6f64.sqrt() * PI
        ));
        assert!(close(
            s(&[LocusId::RA, LocusId::RB, LocusId::RC]),
            3.0 * SQRT_2 * PI
        ));
        assert!(close(
            s(&[LocusId::DA, LocusId::DB, LocusId::DC]),
            3.0 * SQRT_2 * PI
        ));
        assert_eq!(
            locus_length(LocusId::Equilateral3),
            Err(MeasureError::UnsupportedLocus(LocusId::Equilateral3))
        );
    }

    #[test]
    fn sampling_is_deterministic_and_in_range() {
        let a = sample_uniform(7, 70_000);
        let b = sample_uniform(7, 70_000);
        assert_eq!(a, b);
        assert_eq!(a.len(), 70_000);
        assert!(a
            .iter()
            .all(|&(x, y)| (0.0..TAU).contains(&x) && (0.0..TAU).contains(&y)));
        assert_ne!(a, sample_uniform(8, 70_000));
        // A prefix is the same whatever the total length.
        assert_eq!(&sample_uniform(7, 100)[..], &a[..100]);
    }

    #[test]
    fn estimate_matches_sampled_sequence() {
        let n = 100_000;
        let pts = sample_uniform(3, n);
        let hits = pts
            .iter()
            .filter(|&&(x, y)| Region::Obtuse.contains(&FloatPoint::new(x, y)))
            .count();
        let est = estimate_probability(Region::Obtuse, n, 3).unwrap();
        assert_eq!(est.probability, hits as f64 / n as f64);
        let all = estimate_all(n, 3).unwrap();
        assert_eq!(all[0].1, est);
    }

    #[test]
    fn zero_samples_rejected() {
        assert_eq!(
            estimate_probability(Region::Acute, 0, 1),
            Err(MeasureError::NoSamples)
        );
    }
}

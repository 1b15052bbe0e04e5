//! Floating-point classification of torus points.
//!
//! Used where inputs are not rational multiples of π: Monte Carlo samples,
//! path tracing and irrational command-line angles. A point counts as lying
//! on a locus when the locus residue is within the caller's tolerance.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::torus::{LocusId, Orientation};
use crate::triangle::{Sheet, TypeFlags, Vertex, VertexSet};

/// Residue tolerance used for Monte Carlo classification, in radians.
pub const SAMPLE_TOLERANCE: f64 = 1e-12;

/// A torus point with float coordinates in `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloatPoint {
    pub xi1: f64,
    pub xi2: f64,
}

impl FloatPoint {
    pub fn new(xi1: f64, xi2: f64) -> Self {
        FloatPoint {
            xi1: wrap(xi1),
            xi2: wrap(xi2),
        }
    }

    /// Wrapped residue of the locus equation; `None` for `Equilateral3`.
    pub fn residue(&self, l: LocusId) -> Option<f64> {
        l.equation().map(|eq| eq.residue(self.xi1, self.xi2))
    }

    pub fn on_locus(&self, l: LocusId, tol: f64) -> bool {
        match self.residue(l) {
            Some(r) => r.abs() <= tol,
            None => [
                (0.0, 0.0),
                (TAU / 3.0, 2.0 * TAU / 3.0),
                (2.0 * TAU / 3.0, TAU / 3.0),
            ]
            .iter()
            .any(|&(a, b)| circ_dist(self.xi1, a) <= tol && circ_dist(self.xi2, b) <= tol),
        }
    }

    pub fn is_degenerate(&self, tol: f64) -> bool {
        [LocusId::DA, LocusId::DB, LocusId::DC]
            .into_iter()
            .any(|l| self.on_locus(l, tol))
    }

    pub fn orientation(&self, tol: f64) -> Orientation {
        if self.is_degenerate(tol) {
            Orientation::Zero
        } else if self.xi2 > self.xi1 {
            Orientation::Positive
        } else {
            Orientation::Negative
        }
    }

    /// Interior angles of the unique preimage of a nondegenerate point.
    pub fn preimage(&self, tol: f64) -> Option<([f64; 3], Sheet)> {
        let (x1, x2) = (self.xi1, self.xi2);
        match self.orientation(tol) {
            Orientation::Positive => {
                Some(([PI - x2 / 2.0, x1 / 2.0, (x2 - x1) / 2.0], Sheet::Plus))
            }
            Orientation::Negative => {
                Some(([-x2 / 2.0, x1 / 2.0 - PI, (x2 - x1) / 2.0], Sheet::Minus))
            }
            Orientation::Zero => None,
        }
    }

    pub fn classify(&self, tol: f64) -> FloatClassification {
        let orientation = self.orientation(tol);
        let loci = LocusId::ALL
            .into_iter()
            .filter(|l| self.on_locus(*l, tol))
            .collect::<Vec<_>>();
        let vertices = |ls: [LocusId; 3]| -> VertexSet {
            Vertex::ALL
                .into_iter()
                .zip(ls)
                .filter(|(_, l)| loci.contains(l))
                .map(|(v, _)| v)
                .collect()
        };
        let isosceles_vertices = vertices([LocusId::IA, LocusId::IB, LocusId::IC]);
        let right_vertices = vertices([LocusId::RA, LocusId::RB, LocusId::RC]);
        let preimage = self.preimage(tol);
        let (obtuse, acute) = match preimage {
            Some((angles, _)) if right_vertices.is_empty() => {
                let max = angles.iter().map(|a| a.abs()).fold(0.0, f64::max);
                (max > FRAC_PI_2, max < FRAC_PI_2)
            }
            _ => (false, false),
        };
        FloatClassification {
            point: *self,
            orientation,
            preimage,
            isosceles_vertices,
            right_vertices,
            obtuse,
            acute,
            loci,
        }
    }
}

/// Result of [`FloatPoint::classify`].
#[derive(Debug, Clone, PartialEq)]
pub struct FloatClassification {
    pub point: FloatPoint,
    pub orientation: Orientation,
    pub preimage: Option<([f64; 3], Sheet)>,
    pub isosceles_vertices: VertexSet,
    pub right_vertices: VertexSet,
    pub obtuse: bool,
    pub acute: bool,
    pub loci: Vec<LocusId>,
}

/// `x` reduced into `[0, 2π)`.
pub fn wrap(x: f64) -> f64 {
    let r = x.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Distance on the circle of circumference `2π`.
pub fn circ_dist(a: f64, b: f64) -> f64 {
    let d = wrap(a - b);
    d.min(TAU - d)
}

/// Float image `(2β, −2α)` of an angle triple given in radians.
pub fn rho_radians(angles: [f64; 3]) -> FloatPoint {
    FloatPoint::new(2.0 * angles[1], -2.0 * angles[0])
}

/// Checks that three float angles form a point of either sheet, up to `tol`.
pub fn float_sheet(angles: [f64; 3], tol: f64) -> Option<Sheet> {
    let sum: f64 = angles.iter().sum();
    if (sum - PI).abs() <= tol && angles.iter().all(|a| (-tol..=PI + tol).contains(a)) {
        Some(Sheet::Plus)
    } else if (sum + PI).abs() <= tol && angles.iter().all(|a| (-PI - tol..=tol).contains(a)) {
        Some(Sheet::Minus)
    } else {
        None
    }
}

/// Float counterpart of [`crate::taxonomy`]: angle comparisons hold up to
/// `tol` radians.
pub fn taxonomy_radians(angles: [f64; 3], tol: f64) -> TypeFlags {
    let abs = angles.map(f64::abs);
    let eq = |a: f64, b: f64| (a - b).abs() <= tol;
    let zeros = abs.iter().filter(|a| eq(**a, 0.0)).count();
    let at = |pred: &dyn Fn(f64) -> bool| -> VertexSet {
        Vertex::ALL
            .into_iter()
            .filter(|v| pred(abs[v.index()]))
            .collect()
    };
    if zeros > 0 {
        let halves = abs.iter().filter(|a| eq(**a, FRAC_PI_2)).count();
        let right_isosceles = zeros == 1 && halves == 2;
        let equilateral = zeros >= 2;
        return TypeFlags {
            equilateral,
            isosceles_vertices: if equilateral {
                VertexSet::ALL
            } else if right_isosceles {
                at(&|a| eq(a, 0.0))
            } else {
                VertexSet::EMPTY
            },
            right_vertices: if right_isosceles {
                at(&|a| eq(a, FRAC_PI_2))
            } else {
                VertexSet::EMPTY
            },
            scalene: zeros == 1 && !right_isosceles,
            degenerate: true,
            obtuse: false,
            acute: false,
        };
    }
    let [a, b, c] = abs;
    let mut isosceles_vertices = VertexSet::EMPTY;
    for (v, x, y) in [(Vertex::A, b, c), (Vertex::B, a, c), (Vertex::C, a, b)] {
        if eq(x, y) {
            isosceles_vertices.insert(v);
        }
    }
    let right_vertices = at(&|a| eq(a, FRAC_PI_2));
    let max = a.max(b).max(c);
    TypeFlags {
        equilateral: isosceles_vertices.len() == 3,
        isosceles_vertices,
        right_vertices,
        scalene: isosceles_vertices.is_empty(),
        degenerate: false,
        obtuse: right_vertices.is_empty() && max > FRAC_PI_2,
        acute: right_vertices.is_empty() && max < FRAC_PI_2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wrap_stays_in_range() {
        assert_eq!(wrap(TAU), 0.0);
        assert!((wrap(-0.5) - (TAU - 0.5)).abs() < 1e-15);
        assert!(wrap(-1e-300) < TAU);
    }

    #[test]
    fn obtuse_and_acute_samples() {
        // (3π/5, π/4, 3π/20)
        let p = rho_radians([0.6 * PI, 0.25 * PI, 0.15 * PI]);
        let c = p.classify(SAMPLE_TOLERANCE);
        assert!(c.obtuse && !c.acute);
        assert_eq!(c.orientation, Orientation::Positive);

        let p = rho_radians([-PI / 3.0, -PI / 3.0, -PI / 3.0]);
        let c = p.classify(1e-9);
        assert!(c.acute && !c.obtuse);
        assert_eq!(c.orientation, Orientation::Negative);
        assert!(c.loci.contains(&LocusId::Equilateral3));
        assert_eq!(c.isosceles_vertices, VertexSet::ALL);
    }

    #[test]
    fn right_points_are_neither() {
        let p = FloatPoint::new(PI / 2.0, PI);
        let c = p.classify(1e-9);
        assert!(!c.obtuse && !c.acute);
        assert!(c.right_vertices.contains(Vertex::A));
    }

    #[test]
    fn preimage_round_trip() {
        for &(a, b) in &[(0.3, 2.0), (5.0, 1.0), (1.0, 6.0)] {
            let p = FloatPoint::new(a, b);
            let (angles, _) = p.preimage(1e-12).unwrap();
            let q = rho_radians(angles);
            assert!(circ_dist(p.xi1, q.xi1) < 1e-12 && circ_dist(p.xi2, q.xi2) < 1e-12);
        }
    }

    #[test]
    fn float_taxonomy_agrees_with_exact() {
        use crate::{taxonomy, triple_from_fractions};
        for (a, b, c) in [
            ((1, 2), (1, 4), (1, 4)),
            ((3, 5), (1, 4), (3, 20)),
            ((-2, 5), (-1, 3), (-4, 15)),
            ((0, 1), (1, 3), (2, 3)),
            ((0, 1), (-1, 2), (-1, 2)),
            ((1, 1), (0, 1), (0, 1)),
            ((1, 3), (1, 3), (1, 3)),
        ] {
            let t = triple_from_fractions(a, b, c).unwrap();
            let radians = t.angles().clone().map(|x| x.to_radians());
            assert_eq!(taxonomy_radians(radians, 1e-9), taxonomy(&t), "{t}");
        }
    }

    #[test]
    fn float_sheet_check() {
        assert_eq!(float_sheet([1.0, 1.0, PI - 2.0], 1e-9), Some(Sheet::Plus));
        assert_eq!(
            float_sheet([-1.0, -1.0, 2.0 - PI], 1e-9),
            Some(Sheet::Minus)
        );
        assert_eq!(float_sheet([1.0, 1.0, 1.0], 1e-9), None);
        assert_eq!(float_sheet([PI + 1.0, -0.5, -0.5], 1e-9), None);
    }
}

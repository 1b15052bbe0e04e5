//! Straight-line paths on the torus and the loci they cross.
//!
//! A path `ξ(t) = start + t·velocity` is walked in fixed steps with
//! wraparound at `2π`. Each step is scanned for sign changes of every line
//! locus residue; a change is refined by bisection until the residue is
//! below [`REFINE_TOLERANCE`]. Crossing a degenerate line changes the
//! orientation of the triangle, which is reported as a separate event.

use std::f64::consts::PI;

use thiserror::Error;
use triangle_torus::approx::FloatPoint;
use triangle_torus::{LocusId, Orientation};

/// Residue bound for a refined crossing, in radians.
pub const REFINE_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PathError {
    #[error("ZeroVelocity: the path velocity must be nonzero")]
    ZeroVelocity,
    #[error("step size must be positive and finite")]
    BadStep,
    #[error("step too large: locus {0} residue moves by π or more per step")]
    StepTooLarge(LocusId),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EventKind {
    Start,
    LocusCrossing(LocusId),
    OrientationFlip {
        before: Orientation,
        after: Orientation,
    },
    End,
}

impl EventKind {
    pub fn name(&self) -> &'static str {
        match self {
            EventKind::Start => "start",
            EventKind::LocusCrossing(_) => "crossing",
            EventKind::OrientationFlip { .. } => "orientation_flip",
            EventKind::End => "end",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PathEvent {
    /// The step during which the event happened (the step ends at
    /// `position`).
    pub step_index: usize,
    pub position: (f64, f64),
    pub event_kind: EventKind,
    /// Refined location: on the crossed locus for crossings and flips.
    pub refined_position: (f64, f64),
    /// Path parameter of `refined_position`.
    pub time: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct Path {
    pub start: (f64, f64),
    pub velocity: (f64, f64),
    pub steps: usize,
    pub step_size: f64,
}

impl Path {
    fn at(&self, t: f64) -> FloatPoint {
        FloatPoint::new(
            self.start.0 + t * self.velocity.0,
            self.start.1 + t * self.velocity.1,
        )
    }

    fn residue(&self, l: LocusId, t: f64) -> f64 {
        self.at(t).residue(l).expect("line locus")
    }
}

fn coords(p: FloatPoint) -> (f64, f64) {
    (p.xi1, p.xi2)
}

/// Walks the path and lists every locus crossing and orientation change,
/// bracketed by `Start` and `End` events.
pub fn trace(path: &Path) -> Result<Vec<PathEvent>, PathError> {
    let (v1, v2) = path.velocity;
    if v1 == 0.0 && v2 == 0.0 {
        return Err(PathError::ZeroVelocity);
    }
    if !(path.step_size.is_finite() && path.step_size > 0.0) {
        return Err(PathError::BadStep);
    }
    let lines: Vec<(LocusId, i64, i64)> = LocusId::ALL
        .into_iter()
        .filter_map(|l| l.equation().map(|eq| (l, eq.a, eq.b)))
        .collect();
    for &(l, a, b) in &lines {
        let rate = (a as f64 * v1 + b as f64 * v2).abs();
        if rate * path.step_size >= PI / 2.0 {
            return Err(PathError::StepTooLarge(l));
        }
    }

    let h = path.step_size;
    let start = path.at(0.0);
    let mut events = vec![PathEvent {
        step_index: 0,
        position: coords(start),
        event_kind: EventKind::Start,
        refined_position: coords(start),
        time: 0.0,
    }];

    for k in 0..path.steps {
        let (t0, t1) = (k as f64 * h, (k + 1) as f64 * h);
        let mut hits: Vec<(f64, LocusId)> = lines
            .iter()
            .filter_map(|&(l, _, _)| {
                let (f0, f1) = (path.residue(l, t0), path.residue(l, t1));
                let crosses = f0 != 0.0 && (f1 == 0.0 || f0.signum() != f1.signum());
                // A jump of the wrapped residue across ±π is not a crossing.
                (crosses && (f1 - f0).abs() < PI).then(|| (bisect(path, l, t0, t1), l))
            })
            .collect();
        hits.sort_by(|x, y| x.0.total_cmp(&y.0));

        let position = coords(path.at(t1));
        for (t, l) in hits {
            let refined = coords(path.at(t));
            events.push(PathEvent {
                step_index: k + 1,
                position,
                event_kind: EventKind::LocusCrossing(l),
                refined_position: refined,
                time: t,
            });
            if l.is_degenerate_line() {
                let delta = h * 1e-3;
                let before = path.at(t - delta).orientation(0.0);
                let after = path.at(t + delta).orientation(0.0);
                if before != after {
                    events.push(PathEvent {
                        step_index: k + 1,
                        position,
                        event_kind: EventKind::OrientationFlip { before, after },
                        refined_position: refined,
                        time: t,
                    });
                }
            }
        }
    }

    let t_end = path.steps as f64 * h;
    let end = coords(path.at(t_end));
    events.push(PathEvent {
        step_index: path.steps,
        position: end,
        event_kind: EventKind::End,
        refined_position: end,
        time: t_end,
    });
    Ok(events)
}

fn bisect(path: &Path, l: LocusId, mut lo: f64, mut hi: f64) -> f64 {
    let f_lo = path.residue(l, lo);
    if path.residue(l, hi) == 0.0 {
        return hi;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let f_mid = path.residue(l, mid);
        if f_mid.abs() <= REFINE_TOLERANCE || mid == lo || mid == hi {
            return mid;
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

//! The subcommands. Each builds a [`Report`]; rendering and output routing
//! happen in [`crate::run`].

use std::f64::consts::TAU;

use serde_json::{json, Value};
use triangle_torus::approx::{circ_dist, float_sheet, rho_radians, taxonomy_radians, FloatPoint};
use triangle_torus::measure::{analytic_measures, estimate_all, Family, Region};
use triangle_torus::symmetry::{
    act, act_float, all_elements, canonical_rep, multiplicity, orbit, stabilizer, stabilizer_float,
    GroupElement,
};
use triangle_torus::{
    classify, make_triple, project_relative, rho, rho_preimages, AngleTriple, LocusId, PiRational,
    Sheet, TorusPoint, TypeFlags,
};

use crate::error::CliError;
use crate::input::{format_float, parse_angle, parse_exact, Angle, AngleFormat};
use crate::path::{trace, EventKind, Path};
use crate::plot::{render_svg, PlotOptions};
use crate::report::{object, Report};

/// Tolerance used when classifying inputs that are not rational multiples
/// of π.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

fn exact_coord(x: &PiRational) -> Value {
    x.to_string().into()
}

fn float_coord(x: f64) -> Value {
    format_float(x).into()
}

fn point_value(p: &TorusPoint) -> Value {
    json!({ "xi1": exact_coord(p.xi1()), "xi2": exact_coord(p.xi2()) })
}

fn float_point_value(p: &FloatPoint) -> Value {
    json!({ "xi1": float_coord(p.xi1), "xi2": float_coord(p.xi2) })
}

fn triple_value(t: &AngleTriple) -> Value {
    json!({
        "sheet": t.sheet().name(),
        "alpha": exact_coord(t.alpha()),
        "beta": exact_coord(t.beta()),
        "gamma": exact_coord(t.gamma()),
    })
}

fn flags_value(f: &TypeFlags) -> Value {
    json!({
        "equilateral": f.equilateral,
        "isosceles": f.isosceles_vertices.to_string(),
        "right": f.right_vertices.to_string(),
        "scalene": f.scalene,
        "degenerate": f.degenerate,
        "obtuse": f.obtuse,
        "acute": f.acute,
    })
}

fn loci_value(loci: &[LocusId]) -> Value {
    loci.iter().map(|l| Value::from(l.name())).collect()
}

fn parse_three(angles: &[String], format: AngleFormat) -> Result<[Angle; 3], CliError> {
    let parsed = angles
        .iter()
        .map(|s| parse_angle(s, format))
        .collect::<Result<Vec<_>, _>>()?;
    parsed
        .try_into()
        .map_err(|_| CliError::Usage("expected exactly three angles".into()))
}

fn all_exact(angles: &[Angle; 3]) -> Option<[PiRational; 3]> {
    let [a, b, c] = angles;
    Some([a.exact()?.clone(), b.exact()?.clone(), c.exact()?.clone()])
}

fn input_value(angles: &[Angle; 3]) -> Value {
    angles.iter().map(|a| Value::from(a.to_string())).collect()
}

/// A triangle given either exactly or as floats.
enum Triangle {
    Exact(AngleTriple),
    Float([f64; 3], Sheet),
}

fn triangle(angles: &[Angle; 3]) -> Result<Triangle, CliError> {
    if let Some([a, b, c]) = all_exact(angles) {
        return Ok(Triangle::Exact(make_triple(a, b, c)?));
    }
    let radians = [0, 1, 2].map(|i| angles[i].radians());
    match float_sheet(radians, FLOAT_TOLERANCE) {
        Some(sheet) => Ok(Triangle::Float(radians, sheet)),
        None => Err(CliError::Domain(format!(
            "SumNotPi/OutOfRange: angles {} do not form a triangle on either sheet",
            radians.map(format_float).join(" ")
        ))),
    }
}

/// Lexicographically smallest orbit point, comparing coordinates up to `tol`.
fn float_canonical(p: FloatPoint, tol: f64) -> FloatPoint {
    let snap = |x: f64| if TAU - x <= tol { 0.0 } else { x };
    let less = |a: f64, b: f64| a < b - tol;
    all_elements()
        .into_iter()
        .map(|g| {
            let q = act_float(g, p);
            FloatPoint {
                xi1: snap(q.xi1),
                xi2: snap(q.xi2),
            }
        })
        .fold(None::<FloatPoint>, |best, q| match best {
            Some(b)
                if !(less(q.xi1, b.xi1)
                    || (circ_dist(q.xi1, b.xi1) <= tol && less(q.xi2, b.xi2))) =>
            {
                Some(b)
            }
            _ => Some(q),
        })
        .expect("group is nonempty")
}

pub fn classify_cmd(angles: &[String], format: AngleFormat) -> Result<Report, CliError> {
    let parsed = parse_three(angles, format)?;
    let mut r = Report::new("classify");
    r.put("input", input_value(&parsed));
    match triangle(&parsed)? {
        Triangle::Exact(t) => {
            let p = rho(&t);
            let c = classify(&p);
            let flags = triangle_torus::taxonomy(&t);
            r.put("exact", true)
                .put("sheet", t.sheet().name())
                .put("point", point_value(&p))
                .put("orientation", c.orientation.name())
                .put("type", flags.summary())
                .put("flags", flags_value(&flags))
                .put("loci", loci_value(&c.loci))
                .put("multiplicity", c.multiplicity)
                .put("order", c.order.to_string())
                .put("canonical_rep", point_value(&canonical_rep(&p)));
        }
        Triangle::Float(radians, sheet) => {
            let p = rho_radians(radians);
            let c = p.classify(FLOAT_TOLERANCE);
            let flags = taxonomy_radians(radians, FLOAT_TOLERANCE);
            r.put("exact", false)
                .put("sheet", sheet.name())
                .put("point", float_point_value(&p))
                .put("orientation", c.orientation.name())
                .put("type", flags.summary())
                .put("flags", flags_value(&flags))
                .put("loci", loci_value(&c.loci))
                .put("multiplicity", stabilizer_float(p, FLOAT_TOLERANCE).len())
                .put("order", Value::Null)
                .put(
                    "canonical_rep",
                    float_point_value(&float_canonical(p, FLOAT_TOLERANCE)),
                );
        }
    }
    Ok(r)
}

pub fn map_cmd(angles: &[String], relative: bool, format: AngleFormat) -> Result<Report, CliError> {
    let parsed = parse_three(angles, format)?;
    let mut r = Report::new("map");
    r.put("input", input_value(&parsed))
        .put("mode", if relative { "relative" } else { "triangle" });
    if relative {
        match all_exact(&parsed) {
            Some([a, b, c]) => {
                let p = project_relative(&a, &b, &c);
                r.put("exact", true)
                    .put("point", point_value(&p))
                    .put("orientation", p.orientation().name());
            }
            None => {
                let [a, b, c] = [0, 1, 2].map(|i| parsed[i].radians());
                let p = FloatPoint::new(a - c, b - c);
                r.put("exact", false)
                    .put("point", float_point_value(&p))
                    .put("orientation", p.orientation(FLOAT_TOLERANCE).name());
            }
        }
        return Ok(r);
    }
    match triangle(&parsed)? {
        Triangle::Exact(t) => {
            let p = rho(&t);
            r.put("exact", true)
                .put("sheet", t.sheet().name())
                .put("point", point_value(&p))
                .put("orientation", p.orientation().name());
        }
        Triangle::Float(radians, sheet) => {
            let p = rho_radians(radians);
            r.put("exact", false)
                .put("sheet", sheet.name())
                .put("point", float_point_value(&p))
                .put("orientation", p.orientation(FLOAT_TOLERANCE).name());
        }
    }
    Ok(r)
}

fn exact_point(xi1: &str, xi2: &str, format: AngleFormat) -> Result<TorusPoint, CliError> {
    Ok(TorusPoint::new(
        parse_exact(xi1, format)?,
        parse_exact(xi2, format)?,
    ))
}

pub fn invert_cmd(xi1: &str, xi2: &str, format: AngleFormat) -> Result<Report, CliError> {
    let p = exact_point(xi1, xi2, format)?;
    let pre = rho_preimages(&p);
    let mut r = Report::new("invert");
    r.put("point", point_value(&p))
        .put("orientation", p.orientation().name())
        .put("count", pre.len())
        .put(
            "preimages",
            pre.iter().map(triple_value).collect::<Vec<_>>(),
        );
    Ok(r)
}

fn element_value(g: GroupElement, p: &TorusPoint) -> Value {
    let mut v = object([
        ("element", Value::from(g.name())),
        ("word", Value::from(g.word().to_string())),
    ]);
    if let (Value::Object(m), Value::Object(q)) = (&mut v, point_value(&act(g, p))) {
        m.extend(q);
    }
    v
}

pub fn orbit_cmd(xi1: &str, xi2: &str, format: AngleFormat) -> Result<Report, CliError> {
    let p = exact_point(xi1, xi2, format)?;
    let points = orbit(&p);
    let mut r = Report::new("orbit");
    r.put("point", point_value(&p))
        .put("orbit_size", points.len())
        .put("multiplicity", multiplicity(&p))
        .put("canonical_rep", point_value(&canonical_rep(&p)))
        .put(
            "stabilizer",
            stabilizer(&p)
                .into_iter()
                .map(|g| Value::from(g.name()))
                .collect::<Vec<_>>(),
        )
        .put("orbit", points.iter().map(point_value).collect::<Vec<_>>())
        .put(
            "action",
            all_elements()
                .into_iter()
                .map(|g| element_value(g, &p))
                .collect::<Vec<_>>(),
        );
    Ok(r)
}

/// Closed form of each analytic measure.
pub fn closed_form(f: Family) -> &'static str {
    match f {
        Family::Total => "√3·π²",
        Family::Obtuse => "(3√3/4)·π²",
        Family::Acute => "(√3/4)·π²",
        Family::Isosceles => "6√6·π",
        Family::Right => "3√2·π",
        Family::Degenerate => "6√2·π",
        Family::ObtuseIsosceles | Family::AcuteIsosceles => "3√6·π",
    }
}

fn ratio_closed_form(key: &str) -> &'static str {
    match key {
        "O:A" => "3",
        "I:R" => "2√3",
        _ => "2",
    }
}

fn expected_probability(region: Region) -> f64 {
    match region {
        Region::Obtuse => 0.75,
        Region::Acute => 0.25,
        Region::PositiveOrientation | Region::NegativeOrientation => 0.5,
    }
}

pub fn measure_cmd(samples: usize, seed: u64) -> Result<Report, CliError> {
    let m = analytic_measures();
    let mut r = Report::new("measure");
    let analytic: serde_json::Map<String, Value> = Family::ALL
        .into_iter()
        .map(|f| {
            (
                f.symbol().to_string(),
                json!({
                    "closed_form": closed_form(f),
                    "value": m.get(f),
                    "multiplicity": f.generic_multiplicity(),
                    "size": f.geometric_size(),
                    "dimension": if f.is_area() { 2 } else { 1 },
                }),
            )
        })
        .collect();
    let ratios: serde_json::Map<String, Value> = m
        .ratios
        .iter()
        .map(|(k, v)| {
            (
                k.clone(),
                json!({ "closed_form": ratio_closed_form(k), "value": v }),
            )
        })
        .collect();
    r.put("analytic", analytic).put("ratios", ratios);
    if samples > 0 {
        let estimates = estimate_all(samples, seed)?;
        let algorithm = estimates[0].1.algorithm;
        let rows: serde_json::Map<String, Value> = estimates
            .into_iter()
            .map(|(region, e)| {
                let expected = expected_probability(region);
                (
                    region.name().to_string(),
                    json!({
                        "probability": e.probability,
                        "standard_error": e.standard_error,
                        "expected": expected,
                        "z": if e.standard_error > 0.0 {
                            (e.probability - expected) / e.standard_error
                        } else {
                            0.0
                        },
                    }),
                )
            })
            .collect();
        r.put(
            "monte_carlo",
            json!({ "samples": samples, "seed": seed, "rng": algorithm, "estimates": rows }),
        );
    }
    Ok(r)
}

pub struct PathArgs<'a> {
    pub angles: &'a [String],
    pub velocity: (f64, f64),
    pub steps: usize,
    pub step_size: f64,
}

fn pair(p: (f64, f64)) -> Value {
    json!({ "xi1": float_coord(p.0), "xi2": float_coord(p.1) })
}

pub fn path_cmd(args: &PathArgs<'_>, format: AngleFormat) -> Result<Report, CliError> {
    let parsed = parse_three(args.angles, format)?;
    let start = match triangle(&parsed)? {
        Triangle::Exact(t) => rho(&t).to_radians(),
        Triangle::Float(radians, _) => {
            let p = rho_radians(radians);
            (p.xi1, p.xi2)
        }
    };
    let path = Path {
        start,
        velocity: args.velocity,
        steps: args.steps,
        step_size: args.step_size,
    };
    let events = trace(&path)?;
    let rows: Vec<Value> = events
        .iter()
        .map(|e| {
            let mut row = serde_json::Map::new();
            row.insert("step".into(), e.step_index.into());
            row.insert("kind".into(), e.event_kind.name().into());
            match e.event_kind {
                EventKind::LocusCrossing(l) => {
                    row.insert("locus".into(), l.name().into());
                }
                EventKind::OrientationFlip { before, after } => {
                    row.insert("before".into(), before.name().into());
                    row.insert("after".into(), after.name().into());
                }
                EventKind::Start | EventKind::End => {}
            }
            row.insert("t".into(), float_coord(e.time));
            row.insert("position".into(), pair(e.position));
            row.insert("refined".into(), pair(e.refined_position));
            Value::Object(row)
        })
        .collect();
    let flips = events
        .iter()
        .filter(|e| matches!(e.event_kind, EventKind::OrientationFlip { .. }))
        .count();
    let mut r = Report::new("path");
    r.put("input", input_value(&parsed))
        .put("start", pair(start))
        .put("velocity", pair(args.velocity))
        .put("steps", args.steps)
        .put("step_size", float_coord(args.step_size))
        .put("orientation_flips", flips)
        .put("events", rows);
    Ok(r)
}

pub fn plot_cmd(opts: &PlotOptions) -> String {
    render_svg(opts)
}

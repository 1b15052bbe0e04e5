//! SVG rendering of the fundamental domain `[0, 2π)²`.

use std::f64::consts::TAU;
use std::fmt::Write;

use triangle_torus::approx::FloatPoint;
use triangle_torus::approx::SAMPLE_TOLERANCE;
use triangle_torus::measure::sample_uniform;
use triangle_torus::{LocusId, PiRational};

#[derive(Debug, Clone)]
pub struct PlotOptions {
    /// Side of the square in pixels.
    pub size: f64,
    pub margin: f64,
    /// Also draw the anti-isosceles and anti-right lines.
    pub anti: bool,
    pub samples: usize,
    pub seed: u64,
    pub positive_fill: String,
    pub negative_fill: String,
}

impl Default for PlotOptions {
    fn default() -> Self {
        PlotOptions {
            size: 600.0,
            margin: 40.0,
            anti: false,
            samples: 0,
            seed: 0,
            positive_fill: "#fff3a0".into(),
            negative_fill: "#d0d0d0".into(),
        }
    }
}

/// A marked point: kind, then `ξ₁` and `ξ₂` as `(p, q)` coefficients of π.
pub type SpecialPoint = (&'static str, (i64, i64), (i64, i64));

/// Marked torsion points.
pub fn special_points() -> Vec<SpecialPoint> {
    vec![
        ("identity", (0, 1), (0, 1)),
        ("equilateral", (2, 3), (4, 3)),
        ("equilateral", (4, 3), (2, 3)),
        ("degenerate_isosceles", (1, 1), (0, 1)),
        ("degenerate_isosceles", (0, 1), (1, 1)),
        ("degenerate_isosceles", (1, 1), (1, 1)),
        ("right_isosceles", (1, 2), (1, 1)),
        ("right_isosceles", (3, 2), (1, 1)),
        ("right_isosceles", (1, 2), (3, 2)),
        ("right_isosceles", (3, 2), (1, 2)),
        ("right_isosceles", (1, 1), (3, 2)),
        ("right_isosceles", (1, 1), (1, 2)),
    ]
}

struct Frame {
    size: f64,
    margin: f64,
}

impl Frame {
    fn x(&self, xi1: f64) -> f64 {
        self.margin + xi1 / TAU * self.size
    }

    fn y(&self, xi2: f64) -> f64 {
        self.margin + self.size - xi2 / TAU * self.size
    }

    fn pt(&self, p: (f64, f64)) -> String {
        format!("{:.3},{:.3}", self.x(p.0), self.y(p.1))
    }
}

/// Pieces of the closed line `l` inside the square, as segment endpoints in
/// radians.
pub fn locus_segments(l: LocusId) -> Vec<((f64, f64), (f64, f64))> {
    let eq = l.equation().expect("line locus");
    let c = eq.offset.to_radians();
    let (d1, d2) = {
        let (p, q) = eq.direction();
        (p as f64, q as f64)
    };
    let base = if eq.b.abs() == 1 {
        (0.0, c / eq.b as f64)
    } else {
        (c / eq.a as f64, 0.0)
    };
    // Parameter values in [0, 2π] where a coordinate hits a multiple of 2π.
    let mut cuts = vec![0.0, TAU];
    for (x0, d) in [(base.0, d1), (base.1, d2)] {
        if d != 0.0 {
            for k in -4..=4 {
                let t = (k as f64 * TAU - x0) / d;
                if t > 1e-12 && t < TAU - 1e-12 {
                    cuts.push(t);
                }
            }
        }
    }
    cuts.sort_by(f64::total_cmp);
    cuts.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    cuts.windows(2)
        .map(|w| {
            let mid = 0.5 * (w[0] + w[1]);
            let shift = |x0: f64, d: f64| ((x0 + mid * d) / TAU).floor() * TAU;
            let (s1, s2) = (shift(base.0, d1), shift(base.1, d2));
            let at = |t: f64| (base.0 + t * d1 - s1, base.1 + t * d2 - s2);
            (at(w[0]), at(w[1]))
        })
        .collect()
}

pub fn render_svg(opts: &PlotOptions) -> String {
    let f = Frame {
        size: opts.size,
        margin: opts.margin,
    };
    let total = opts.size + 2.0 * opts.margin;
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{total}" height="{total}" viewBox="0 0 {total} {total}">"#
    );
    let _ = writeln!(
        s,
        "<style>.border{{fill:none;stroke:#000;stroke-width:1.5}} .locus{{fill:none;stroke-width:1.5}} \
         .D{{stroke:#b00}} .I{{stroke:#06c}} .R{{stroke:#080}} .anti{{stroke:#909;stroke-dasharray:4 3}} \
         .point{{fill:#000}} .sample{{stroke:none}} .obtuse{{fill:#c60}} .acute{{fill:#06a}} .boundary{{fill:#888}}</style>"
    );

    let (lo, hi) = (0.0, TAU);
    let _ = writeln!(
        s,
        r#"<polygon class="region positive" fill="{}" points="{} {} {}"/>"#,
        opts.positive_fill,
        f.pt((lo, lo)),
        f.pt((lo, hi)),
        f.pt((hi, hi))
    );
    let _ = writeln!(
        s,
        r#"<polygon class="region negative" fill="{}" points="{} {} {}"/>"#,
        opts.negative_fill,
        f.pt((lo, lo)),
        f.pt((hi, lo)),
        f.pt((hi, hi))
    );

    if opts.samples > 0 {
        let _ = writeln!(s, r#"<g class="samples">"#);
        for (x, y) in sample_uniform(opts.seed, opts.samples) {
            let c = FloatPoint::new(x, y).classify(SAMPLE_TOLERANCE);
            let class = if c.obtuse {
                "obtuse"
            } else if c.acute {
                "acute"
            } else {
                "boundary"
            };
            let _ = writeln!(
                s,
                r#"<circle class="sample {class}" cx="{:.3}" cy="{:.3}" r="1.2"/>"#,
                f.x(x),
                f.y(y)
            );
        }
        let _ = writeln!(s, "</g>");
    }

    let mut lines: Vec<LocusId> = LocusId::STANDARD_LINES.to_vec();
    if opts.anti {
        lines.extend(LocusId::ANTI_LINES);
    }
    for l in lines {
        let family = if LocusId::ANTI_LINES.contains(&l) {
            "anti"
        } else {
            &l.name()[..1]
        };
        let mut d = String::new();
        for (a, b) in locus_segments(l) {
            let _ = write!(d, "M{} L{} ", f.pt(a), f.pt(b));
        }
        let _ = writeln!(
            s,
            r#"<path class="locus {family}" data-locus="{}" d="{}"/>"#,
            l.name(),
            d.trim_end()
        );
    }

    let _ = writeln!(
        s,
        r#"<rect class="border" x="{}" y="{}" width="{}" height="{}"/>"#,
        opts.margin, opts.margin, opts.size, opts.size
    );

    for (kind, a, b) in special_points() {
        let (x, y) = (PiRational::new(a.0, a.1), PiRational::new(b.0, b.1));
        let _ = writeln!(
            s,
            r#"<circle class="point {kind}" data-kind="{kind}" data-xi1="{}" data-xi2="{}" cx="{:.3}" cy="{:.3}" r="4"/>"#,
            coefficient(&x),
            coefficient(&y),
            f.x(x.to_radians()),
            f.y(y.to_radians())
        );
    }

    let _ = writeln!(
        s,
        r#"<text x="{:.3}" y="{:.3}" text-anchor="middle">ξ₁</text>"#,
        f.x(TAU / 2.0),
        opts.size + 1.75 * opts.margin
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.3}" y="{:.3}" text-anchor="middle">ξ₂</text>"#,
        opts.margin / 2.0,
        f.y(TAU / 2.0)
    );
    s.push_str("</svg>\n");
    s
}

/// `p/q` coefficient of π as plain text.
fn coefficient(r: &PiRational) -> String {
    r.ratio().to_string()
}

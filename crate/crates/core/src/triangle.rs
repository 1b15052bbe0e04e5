//! Labeled, oriented triangles described by their signed interior angles.
//!
//! A positively oriented triangle lives on the sheet `α+β+γ = π` with all
//! angles in `[0, π]`; its mirror image lives on the sheet `α+β+γ = −π`
//! with all angles in `[−π, 0]`. A triangle is degenerate when one of its
//! angles is zero.

use std::fmt;

use crate::angle::PiRational;
use crate::error::TriangleError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sheet {
    Plus,
    Minus,
}

impl Sheet {
    pub fn name(self) -> &'static str {
        match self {
            Sheet::Plus => "plus",
            Sheet::Minus => "minus",
        }
    }
}

impl fmt::Display for Sheet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    A,
    B,
    C,
}

impl Vertex {
    pub const ALL: [Vertex; 3] = [Vertex::A, Vertex::B, Vertex::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Vertex {
        Vertex::ALL[i]
    }

    pub fn name(self) -> &'static str {
        ["A", "B", "C"][self.index()]
    }
}

/// A subset of `{A, B, C}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u8);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);
    pub const ALL: VertexSet = VertexSet(0b111);

    pub fn contains(self, v: Vertex) -> bool {
        self.0 & (1 << v.index()) != 0
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1 << v.index();
    }

    pub fn with(mut self, v: Vertex) -> Self {
        self.insert(v);
        self
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Vertex> {
        Vertex::ALL.into_iter().filter(move |v| self.contains(*v))
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Comma-separated vertex names, or `-` for the empty set.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        let names: Vec<&str> = self.iter().map(Vertex::name).collect();
        f.write_str(&names.join(","))
    }
}

/// A validated point `△[α, β, γ]` of one of the two triangle sheets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AngleTriple {
    angles: [PiRational; 3],
    sheet: Sheet,
}

impl AngleTriple {
    pub fn alpha(&self) -> &PiRational {
        &self.angles[0]
    }

    pub fn beta(&self) -> &PiRational {
        &self.angles[1]
    }

    pub fn gamma(&self) -> &PiRational {
        &self.angles[2]
    }

    pub fn angle(&self, v: Vertex) -> &PiRational {
        &self.angles[v.index()]
    }

    pub fn angles(&self) -> &[PiRational; 3] {
        &self.angles
    }

    pub fn sheet(&self) -> Sheet {
        self.sheet
    }

    pub fn is_degenerate(&self) -> bool {
        self.angles.iter().any(PiRational::is_zero)
    }

    pub fn zero_count(&self) -> usize {
        self.angles.iter().filter(|a| a.is_zero()).count()
    }

    /// The mirror image `△[−α, −β, −γ]` on the opposite sheet.
    pub fn negated(&self) -> AngleTriple {
        AngleTriple {
            angles: self.angles.clone().map(|a| -a),
            sheet: match self.sheet {
                Sheet::Plus => Sheet::Minus,
                Sheet::Minus => Sheet::Plus,
            },
        }
    }

    /// For a triangle with exactly one zero angle, the glued partner on the
    /// other sheet: the two nonzero angles are swapped and negated.
    fn anti_transposition(&self) -> Option<AngleTriple> {
        if self.zero_count() != 1 {
            return None;
        }
        let z = self.angles.iter().position(PiRational::is_zero)?;
        let (i, j) = ((z + 1) % 3, (z + 2) % 3);
        let mut angles = self.angles.clone();
        angles[i] = -&self.angles[j];
        angles[j] = -&self.angles[i];
        Some(AngleTriple {
            angles,
            sheet: self.negated().sheet,
        })
    }
}

impl fmt::Debug for AngleTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "△{}", self)
    }
}

impl fmt::Display for AngleTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}, {}]",
            self.angles[0], self.angles[1], self.angles[2]
        )
    }
}

/// Validates three angles as a point of `T₊` or `T₋`; the sheet is read off
/// the sign of the sum.
pub fn make_triple(
    alpha: PiRational,
    beta: PiRational,
    gamma: PiRational,
) -> Result<AngleTriple, TriangleError> {
    let sum = &(&alpha + &beta) + &gamma;
    let sheet = if sum == PiRational::pi() {
        Sheet::Plus
    } else if sum == -PiRational::pi() {
        Sheet::Minus
    } else {
        return Err(TriangleError::SumNotPi(sum));
    };
    let angles = [alpha, beta, gamma];
    for a in &angles {
        let in_range = match sheet {
            Sheet::Plus => !a.is_negative() && *a <= PiRational::pi(),
            Sheet::Minus => !a.is_positive() && *a >= -PiRational::pi(),
        };
        if !in_range {
            return Err(TriangleError::OutOfRange {
                angle: a.clone(),
                sheet: sheet.name(),
            });
        }
    }
    Ok(AngleTriple { angles, sheet })
}

/// Shorthand for tests and examples: angles given as `(numerator, denominator)`
/// coefficients of π.
pub fn triple_from_fractions(
    a: (i64, i64),
    b: (i64, i64),
    c: (i64, i64),
) -> Result<AngleTriple, TriangleError> {
    make_triple(
        PiRational::new(a.0, a.1),
        PiRational::new(b.0, b.1),
        PiRational::new(c.0, c.1),
    )
}

/// Which of the standard triangle types a labeled triangle belongs to.
///
/// `isosceles_vertices` holds apex vertices: the vertex opposite the base,
/// whose two neighbours carry equal angles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TypeFlags {
    pub equilateral: bool,
    pub isosceles_vertices: VertexSet,
    pub right_vertices: VertexSet,
    pub scalene: bool,
    pub degenerate: bool,
    pub obtuse: bool,
    pub acute: bool,
}

/// The label-free content of [`TypeFlags`]; constant on absolute similarity
/// classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnlabeledType {
    pub equilateral: bool,
    pub isosceles: bool,
    pub right: bool,
    pub scalene: bool,
    pub degenerate: bool,
    pub obtuse: bool,
    pub acute: bool,
}

impl TypeFlags {
    pub fn is_isosceles(&self) -> bool {
        !self.isosceles_vertices.is_empty()
    }

    pub fn is_right(&self) -> bool {
        !self.right_vertices.is_empty()
    }

    pub fn unlabeled(&self) -> UnlabeledType {
        UnlabeledType {
            equilateral: self.equilateral,
            isosceles: self.is_isosceles(),
            right: self.is_right(),
            scalene: self.scalene,
            degenerate: self.degenerate,
            obtuse: self.obtuse,
            acute: self.acute,
        }
    }

    /// Short human-readable summary, e.g. `"nondegenerate right isosceles obtuse"`.
    pub fn summary(&self) -> String {
        let mut words = vec![if self.degenerate {
            "degenerate"
        } else {
            "nondegenerate"
        }];
        if self.equilateral {
            words.push("equilateral");
        } else if self.is_isosceles() {
            words.push("isosceles");
        }
        if self.is_right() {
            words.push("right");
        }
        if self.scalene {
            words.push("scalene");
        }
        if self.obtuse {
            words.push("obtuse");
        }
        if self.acute {
            words.push("acute");
        }
        words.join(" ")
    }
}

/// Classifies a triangle by its interior angles.
pub fn taxonomy(t: &AngleTriple) -> TypeFlags {
    let abs = t.angles.clone().map(|a| a.abs());
    let half = PiRational::half_pi();
    let pi = PiRational::pi();

    if t.is_degenerate() {
        let zeros = t.zero_count();
        let equilateral = zeros == 2;
        let halves = abs.iter().filter(|a| **a == half).count();
        let right_isosceles = zeros == 1 && halves == 2;
        let isosceles_vertices = if equilateral {
            VertexSet::ALL
        } else if right_isosceles {
            Vertex::ALL
                .into_iter()
                .filter(|v| abs[v.index()].is_zero())
                .collect()
        } else {
            VertexSet::EMPTY
        };
        let right_vertices = if right_isosceles {
            Vertex::ALL
                .into_iter()
                .filter(|v| abs[v.index()] == half)
                .collect()
        } else {
            VertexSet::EMPTY
        };
        let scalene = zeros == 1 && abs.iter().all(|a| *a != half && *a != pi);
        return TypeFlags {
            equilateral,
            isosceles_vertices,
            right_vertices,
            scalene,
            degenerate: true,
            obtuse: false,
            acute: false,
        };
    }

    let [a, b, c] = &abs;
    let mut isosceles_vertices = VertexSet::EMPTY;
    if b == c {
        isosceles_vertices.insert(Vertex::A);
    }
    if a == c {
        isosceles_vertices.insert(Vertex::B);
    }
    if a == b {
        isosceles_vertices.insert(Vertex::C);
    }
    let right_vertices = Vertex::ALL
        .into_iter()
        .filter(|v| abs[v.index()] == half)
        .collect();
    let max = abs.iter().max().expect("three angles");
    TypeFlags {
        equilateral: isosceles_vertices.len() == 3,
        isosceles_vertices,
        right_vertices,
        scalene: isosceles_vertices.is_empty(),
        degenerate: false,
        obtuse: *max > half,
        acute: *max < half,
    }
}

/// Similarity of degenerate triangles: any two triangles with two zero
/// angles are similar, and a triangle with one zero angle is similar to
/// itself and to its anti-transposition on the other sheet.
pub fn degenerate_similar(a: &AngleTriple, b: &AngleTriple) -> Result<bool, TriangleError> {
    for t in [a, b] {
        if !t.is_degenerate() {
            return Err(TriangleError::NotDegenerate(t.to_string()));
        }
    }
    if a.zero_count() == 2 && b.zero_count() == 2 {
        return Ok(true);
    }
    Ok(a == b || a.anti_transposition().as_ref() == Some(b))
}

//! Relabeling and reflection symmetries of the torus.
//!
//! The signed permutation group `±S₃ = S₃ × {±e}` has order twelve and is
//! isomorphic to the dihedral group `D₆ = ⟨r, s⟩` with `r = −(123)` and
//! `s = −(12)`. A permutation relabels the vertices of an inscribed triangle;
//! the sign conjugates every point, reversing orientation. Orbits are the
//! absolute (unlabeled, unoriented) similarity classes, and the size of a
//! stabilizer is the multiplicity with which a class appears on the torus.

use std::collections::BTreeSet;
use std::fmt;

use crate::angle::PiRational;
use crate::approx::{circ_dist, FloatPoint};
use crate::torus::{Orientation, TorusPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    fn factor(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A permutation of the vertex labels, stored as the images
/// `[σ(1), σ(2), σ(3)]` (zero-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm([u8; 3]);

impl Perm {
    pub const E: Perm = Perm([0, 1, 2]);
    pub const C123: Perm = Perm([1, 2, 0]);
    pub const C132: Perm = Perm([2, 0, 1]);
    pub const T12: Perm = Perm([1, 0, 2]);
    pub const T13: Perm = Perm([2, 1, 0]);
    pub const T23: Perm = Perm([0, 2, 1]);

    pub const ALL: [Perm; 6] = [
        Perm::E,
        Perm::C123,
        Perm::C132,
        Perm::T12,
        Perm::T13,
        Perm::T23,
    ];

    pub fn image(self, i: usize) -> usize {
        usize::from(self.0[i])
    }

    pub fn name(self) -> &'static str {
        match self.0 {
            [0, 1, 2] => "e",
            [1, 2, 0] => "(123)",
            [2, 0, 1] => "(132)",
            [1, 0, 2] => "(12)",
            [2, 1, 0] => "(13)",
            _ => "(23)",
        }
    }
}

/// A 2×2 integer matrix acting on `(ξ₁, ξ₂)` column vectors.
pub type Matrix2 = [[i64; 2]; 2];

pub fn mat_mul(a: &Matrix2, b: &Matrix2) -> Matrix2 {
    let mut out = [[0; 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

/// An element `±σ` of the signed permutation group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub sign: Sign,
    pub perm: Perm,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement::new(Sign::Plus, Perm::E);
    /// `r = −(123)`, rotation of the hexagon by `π/3`.
    pub const R: GroupElement = GroupElement::new(Sign::Minus, Perm::C123);
    /// `s = −(12)`, reflection of the hexagon.
    pub const S: GroupElement = GroupElement::new(Sign::Minus, Perm::T12);

    pub const fn new(sign: Sign, perm: Perm) -> Self {
        GroupElement { sign, perm }
    }

    /// Product `self · other`, defined so that applying `other` first and
    /// `self` second matches [`act`]: `act(g·h, p) = act(g, act(h, p))`.
    pub fn compose(self, other: GroupElement) -> GroupElement {
        let images = [0, 1, 2].map(|i| other.perm.0[self.perm.image(i)]);
        GroupElement {
            sign: self.sign.times(other.sign),
            perm: Perm(images),
        }
    }

    pub fn inverse(self) -> GroupElement {
        let mut images = [0u8; 3];
        for i in 0..3 {
            images[self.perm.image(i)] = i as u8;
        }
        GroupElement {
            sign: self.sign,
            perm: Perm(images),
        }
    }

    pub fn pow(self, n: u32) -> GroupElement {
        (0..n).fold(GroupElement::IDENTITY, |acc, _| acc.compose(self))
    }

    /// Matrix of the induced action on relative arguments.
    ///
    /// Writing `ξᵢ = θᵢ − θ₃`, the permuted pair is
    /// `(θ_{σ(1)} − θ_{σ(3)}, θ_{σ(2)} − θ_{σ(3)})`, so row `i` is
    /// `e_{σ(i)} − e_{σ(3)}` with `e₃ = 0`.
    pub fn matrix(self) -> Matrix2 {
        let basis = |k: usize| -> [i64; 2] {
            match k {
                0 => [1, 0],
                1 => [0, 1],
                _ => [0, 0],
            }
        };
        let last = basis(self.perm.image(2));
        let f = self.sign.factor();
        [0, 1].map(|i| {
            let row = basis(self.perm.image(i));
            [f * (row[0] - last[0]), f * (row[1] - last[1])]
        })
    }

    /// Normal form `r^a s^b` in `D₆`.
    pub fn word(self) -> D6Word {
        use Perm as P;
        use Sign::*;
        let (r_power, s_flag) = match (self.sign, self.perm) {
            (Plus, P::E) => (0, false),
            (Minus, P::C123) => (1, false),
            (Plus, P::C132) => (2, false),
            (Minus, P::E) => (3, false),
            (Plus, P::C123) => (4, false),
            (Minus, P::C132) => (5, false),
            (Minus, P::T12) => (0, true),
            (Plus, P::T23) => (1, true),
            (Minus, P::T13) => (2, true),
            (Plus, P::T12) => (3, true),
            (Minus, P::T23) => (4, true),
            (Plus, P::T13) => (5, true),
            _ => unreachable!("every permutation is listed"),
        };
        D6Word { r_power, s_flag }
    }

    pub fn name(self) -> String {
        match self.sign {
            Sign::Plus => self.perm.name().to_string(),
            Sign::Minus => format!("-{}", self.perm.name()),
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A dihedral word `r^r_power · s^s_flag`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct D6Word {
    pub r_power: u8,
    pub s_flag: bool,
}

impl D6Word {
    /// Evaluates the word as a product of the generators `r` and `s`.
    pub fn evaluate(self) -> GroupElement {
        let rot = GroupElement::R.pow(u32::from(self.r_power));
        if self.s_flag {
            rot.compose(GroupElement::S)
        } else {
            rot
        }
    }
}

impl fmt::Display for D6Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.r_power, self.s_flag) {
            (0, false) => f.write_str("1"),
            (0, true) => f.write_str("s"),
            (1, s) => write!(f, "r{}", if s { "s" } else { "" }),
            (a, s) => write!(f, "r^{}{}", a, if s { "s" } else { "" }),
        }
    }
}

/// The twelve elements: `e, (123), (132), (12), (13), (23)` followed by the
/// same permutations with a minus sign.
pub fn all_elements() -> [GroupElement; 12] {
    let mut out = [GroupElement::IDENTITY; 12];
    for (k, sign) in [Sign::Plus, Sign::Minus].into_iter().enumerate() {
        for (j, perm) in Perm::ALL.into_iter().enumerate() {
            out[6 * k + j] = GroupElement::new(sign, perm);
        }
    }
    out
}

/// The orientation-preserving subgroup `⟨r², s⟩ ≅ D₃`:
/// `e, (123), (132), −(12), −(13), −(23)`.
pub fn orientation_preserving_subgroup() -> [GroupElement; 6] {
    Perm::ALL.map(|perm| {
        let sign = if matches!(perm, Perm::E | Perm::C123 | Perm::C132) {
            Sign::Plus
        } else {
            Sign::Minus
        };
        GroupElement::new(sign, perm)
    })
}

pub fn act(g: GroupElement, p: &TorusPoint) -> TorusPoint {
    let m = g.matrix();
    let row = |r: [i64; 2]| -> PiRational { &p.xi1().scale(r[0]) + &p.xi2().scale(r[1]) };
    TorusPoint::new(row(m[0]), row(m[1]))
}

pub fn act_float(g: GroupElement, p: FloatPoint) -> FloatPoint {
    let m = g.matrix();
    let row = |r: [i64; 2]| r[0] as f64 * p.xi1 + r[1] as f64 * p.xi2;
    FloatPoint::new(row(m[0]), row(m[1]))
}

/// Elements fixing `p` up to `tol` radians in each coordinate.
pub fn stabilizer_float(p: FloatPoint, tol: f64) -> Vec<GroupElement> {
    all_elements()
        .into_iter()
        .filter(|g| {
            let q = act_float(*g, p);
            circ_dist(q.xi1, p.xi1) <= tol && circ_dist(q.xi2, p.xi2) <= tol
        })
        .collect()
}

/// Distinct images of `p` under all twelve elements, in ascending order.
pub fn orbit(p: &TorusPoint) -> Vec<TorusPoint> {
    all_elements()
        .into_iter()
        .map(|g| act(g, p))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

pub fn stabilizer(p: &TorusPoint) -> Vec<GroupElement> {
    all_elements()
        .into_iter()
        .filter(|g| act(*g, p) == *p)
        .collect()
}

/// Order of the stabilizer of `p`.
pub fn multiplicity(p: &TorusPoint) -> usize {
    stabilizer(p).len()
}

/// Lexicographically least point of the orbit.
pub fn canonical_rep(p: &TorusPoint) -> TorusPoint {
    all_elements()
        .into_iter()
        .map(|g| act(g, p))
        .min()
        .expect("nonempty group")
}

/// Same absolute similarity class.
pub fn similar(p: &TorusPoint, q: &TorusPoint) -> bool {
    canonical_rep(p) == canonical_rep(q)
}

/// Whether `g` maps positively oriented points to positively oriented points.
pub fn preserves_orientation(g: GroupElement) -> bool {
    orientation_preserving_subgroup().contains(&g)
}

pub fn flips(g: GroupElement, p: &TorusPoint) -> bool {
    let before = p.orientation();
    let after = act(g, p).orientation();
    before != Orientation::Zero && before != after
}

//! The torus of relative arguments.
//!
//! A labeled, oriented triangle inscribed in the unit circle with its third
//! vertex at `1` is determined by the arguments `(ξ₁, ξ₂)` of the other two
//! vertices. These pairs, taken modulo `2π`, form an abelian group under
//! componentwise addition. Every coordinate here is an exact [`PiRational`]
//! kept in the canonical residue interval `[0, 2π)`.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::angle::PiRational;
use crate::symmetry;
use crate::triangle::{make_triple, taxonomy, AngleTriple, Sheet, TypeFlags};

/// A point `(e^{iξ₁}, e^{iξ₂}, 1)` of the torus.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusPoint {
    xi1: PiRational,
    xi2: PiRational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Positive,
    Zero,
    Negative,
}

impl Orientation {
    pub fn name(self) -> &'static str {
        match self {
            Orientation::Positive => "positive",
            Orientation::Zero => "zero",
            Orientation::Negative => "negative",
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Distinguished subgroups and cosets of the torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LocusId {
    /// Degenerate, zero angle at A: `ξ₂ = 0`.
    DA,
    /// Degenerate, zero angle at B: `ξ₁ = 0`.
    DB,
    /// Degenerate, zero angle at C: `ξ₁ = ξ₂`.
    DC,
    /// Isosceles with apex A: `ξ₂ = 2ξ₁`.
    IA,
    /// Isosceles with apex B: `ξ₁ = 2ξ₂`.
    IB,
    /// Isosceles with apex C: `ξ₁ + ξ₂ = 0`.
    IC,
    /// Right angle at A: `ξ₂ = π`.
    RA,
    /// Right angle at B: `ξ₁ = π`.
    RB,
    /// Right angle at C: `ξ₂ = ξ₁ + π`.
    RC,
    /// `ξ₁ = −2ξ₂`.
    IPerpA,
    /// `ξ₂ = −2ξ₁`.
    IPerpB,
    /// `ξ₁ + ξ₂ = π`.
    AntiRight,
    /// The three points of order dividing three.
    Equilateral3,
}

/// A closed line `a·ξ₁ + b·ξ₂ ≡ offset (mod 2π)` on the torus, with
/// `gcd(a, b) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocusEquation {
    pub a: i64,
    pub b: i64,
    pub offset: PiRational,
}

impl LocusEquation {
    fn new(a: i64, b: i64, offset: PiRational) -> Self {
        LocusEquation { a, b, offset }
    }

    pub fn holds(&self, p: &TorusPoint) -> bool {
        let lhs = &p.xi1.scale(self.a) + &p.xi2.scale(self.b);
        lhs.congruent_mod_two_pi(&self.offset)
    }

    /// Residue `a·ξ₁ + b·ξ₂ − offset` wrapped into `(−π, π]`, in radians.
    pub fn residue(&self, xi1: f64, xi2: f64) -> f64 {
        use std::f64::consts::{PI, TAU};
        let raw = self.a as f64 * xi1 + self.b as f64 * xi2 - self.offset.to_radians();
        let r = raw.rem_euclid(TAU);
        if r > PI {
            r - TAU
        } else {
            r
        }
    }

    /// Direction `(b, −a)` of the line in the plane of relative arguments.
    pub fn direction(&self) -> (i64, i64) {
        (self.b, -self.a)
    }
}

impl LocusId {
    pub const ALL: [LocusId; 13] = [
        LocusId::DA,
        LocusId::DB,
        LocusId::DC,
        LocusId::IA,
        LocusId::IB,
        LocusId::IC,
        LocusId::RA,
        LocusId::RB,
        LocusId::RC,
        LocusId::IPerpA,
        LocusId::IPerpB,
        LocusId::AntiRight,
        LocusId::Equilateral3,
    ];

    /// The degenerate, isosceles and right loci.
    pub const STANDARD_LINES: [LocusId; 9] = [
        LocusId::DA,
        LocusId::DB,
        LocusId::DC,
        LocusId::IA,
        LocusId::IB,
        LocusId::IC,
        LocusId::RA,
        LocusId::RB,
        LocusId::RC,
    ];

    pub const ANTI_LINES: [LocusId; 3] = [LocusId::IPerpA, LocusId::IPerpB, LocusId::AntiRight];

    pub fn name(self) -> &'static str {
        match self {
            LocusId::DA => "D_A",
            LocusId::DB => "D_B",
            LocusId::DC => "D_C",
            LocusId::IA => "I_A",
            LocusId::IB => "I_B",
            LocusId::IC => "I_C",
            LocusId::RA => "R_A",
            LocusId::RB => "R_B",
            LocusId::RC => "R_C",
            LocusId::IPerpA => "IPerp_A",
            LocusId::IPerpB => "IPerp_B",
            LocusId::AntiRight => "AntiRight",
            LocusId::Equilateral3 => "Equilateral3",
        }
    }

    pub fn from_name(name: &str) -> Option<LocusId> {
        LocusId::ALL.into_iter().find(|l| l.name() == name)
    }

    /// The defining line, or `None` for the finite subgroup `Equilateral3`.
    pub fn equation(self) -> Option<LocusEquation> {
        let zero = PiRational::zero;
        let pi = PiRational::pi;
        Some(match self {
            LocusId::DA => LocusEquation::new(0, 1, zero()),
            LocusId::DB => LocusEquation::new(1, 0, zero()),
            LocusId::DC => LocusEquation::new(1, -1, zero()),
            LocusId::IA => LocusEquation::new(-2, 1, zero()),
            LocusId::IB => LocusEquation::new(1, -2, zero()),
            LocusId::IC => LocusEquation::new(1, 1, zero()),
            LocusId::RA => LocusEquation::new(0, 1, pi()),
            LocusId::RB => LocusEquation::new(1, 0, pi()),
            LocusId::RC => LocusEquation::new(-1, 1, pi()),
            LocusId::IPerpA => LocusEquation::new(1, 2, zero()),
            LocusId::IPerpB => LocusEquation::new(2, 1, zero()),
            LocusId::AntiRight => LocusEquation::new(1, 1, pi()),
            LocusId::Equilateral3 => return None,
        })
    }

    /// Whether the locus is a subgroup (as opposed to a proper coset).
    pub fn is_subgroup(self) -> bool {
        !matches!(
            self,
            LocusId::RA | LocusId::RB | LocusId::RC | LocusId::AntiRight
        )
    }

    pub fn is_degenerate_line(self) -> bool {
        matches!(self, LocusId::DA | LocusId::DB | LocusId::DC)
    }
}

impl fmt::Display for LocusId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl TorusPoint {
    /// Builds a point, reducing both coordinates into `[0, 2π)`.
    pub fn new(xi1: PiRational, xi2: PiRational) -> Self {
        TorusPoint {
            xi1: xi1.rem_two_pi(),
            xi2: xi2.rem_two_pi(),
        }
    }

    /// `((n1/d1)·π, (n2/d2)·π)`.
    pub fn from_fractions(n1: i64, d1: i64, n2: i64, d2: i64) -> Self {
        Self::new(PiRational::new(n1, d1), PiRational::new(n2, d2))
    }

    pub fn identity() -> Self {
        Self::new(PiRational::zero(), PiRational::zero())
    }

    pub fn xi1(&self) -> &PiRational {
        &self.xi1
    }

    pub fn xi2(&self) -> &PiRational {
        &self.xi2
    }

    pub fn to_radians(&self) -> (f64, f64) {
        (self.xi1.to_radians(), self.xi2.to_radians())
    }

    pub fn is_identity(&self) -> bool {
        self.xi1.is_zero() && self.xi2.is_zero()
    }

    /// Two of the three points `e^{iξ₁}, e^{iξ₂}, 1` coincide.
    pub fn is_degenerate(&self) -> bool {
        self.xi1.is_zero() || self.xi2.is_zero() || self.xi1 == self.xi2
    }

    pub fn mul(&self, other: &TorusPoint) -> TorusPoint {
        TorusPoint::new(&self.xi1 + &other.xi1, &self.xi2 + &other.xi2)
    }

    pub fn inverse(&self) -> TorusPoint {
        TorusPoint::new(-&self.xi1, -&self.xi2)
    }

    pub fn pow(&self, n: i64) -> TorusPoint {
        TorusPoint::new(self.xi1.scale(n), self.xi2.scale(n))
    }

    /// Order in the group. Rational coordinates always give a torsion point,
    /// so this is `Some` for every `TorusPoint`.
    pub fn element_order(&self) -> Option<BigInt> {
        let order = [&self.xi1, &self.xi2]
            .into_iter()
            .map(|x| x.half().denom().clone())
            .fold(BigInt::one(), |acc, d| acc.lcm(&d));
        Some(order)
    }

    /// `Positive` iff `ξ₂ > ξ₁` on the canonical representatives.
    pub fn orientation(&self) -> Orientation {
        if self.is_degenerate() {
            Orientation::Zero
        } else if self.xi2 > self.xi1 {
            Orientation::Positive
        } else {
            Orientation::Negative
        }
    }

    pub fn in_locus(&self, l: LocusId) -> bool {
        match l.equation() {
            Some(eq) => eq.holds(self),
            None => {
                let two_thirds = PiRational::new(2, 3);
                let four_thirds = PiRational::new(4, 3);
                self.is_identity()
                    || (self.xi1 == two_thirds && self.xi2 == four_thirds)
                    || (self.xi1 == four_thirds && self.xi2 == two_thirds)
            }
        }
    }

    pub fn loci(&self) -> Vec<LocusId> {
        LocusId::ALL
            .into_iter()
            .filter(|l| self.in_locus(*l))
            .collect()
    }
}

impl Mul for &TorusPoint {
    type Output = TorusPoint;
    fn mul(self, rhs: &TorusPoint) -> TorusPoint {
        TorusPoint::mul(self, rhs)
    }
}

impl fmt::Debug for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({}, {})", self.xi1, self.xi2)
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.xi1, self.xi2)
    }
}

/// Inscribes `△[α, β, γ]` in the circle as `(e^{i2β}, e^{−i2α}, 1)`.
pub fn rho(t: &AngleTriple) -> TorusPoint {
    TorusPoint::new(t.beta().double(), -t.alpha().double())
}

/// Projects three arguments on the circle to relative arguments, forgetting
/// a common rotation.
pub fn project_relative(
    theta1: &PiRational,
    theta2: &PiRational,
    theta3: &PiRational,
) -> TorusPoint {
    TorusPoint::new(theta1 - theta3, theta2 - theta3)
}

fn triple(a: PiRational, b: PiRational, c: PiRational) -> AngleTriple {
    make_triple(a, b, c).expect("preimage formula yields a valid triple")
}

/// All triangles mapped to `p` by [`rho`].
///
/// Nondegenerate points have a single preimage on the sheet matching their
/// orientation. The identity has the six sheet vertices, listed as
/// `(π,0,0), (0,π,0), (0,0,π), (−π,0,0), (0,−π,0), (0,0,−π)`. Every other
/// degenerate point has one preimage on each sheet, `Plus` first.
pub fn rho_preimages(p: &TorusPoint) -> Vec<AngleTriple> {
    let zero = PiRational::zero;
    let pi = PiRational::pi;
    let (xi1, xi2) = (p.xi1(), p.xi2());

    if p.is_identity() {
        return vec![
            triple(pi(), zero(), zero()),
            triple(zero(), pi(), zero()),
            triple(zero(), zero(), pi()),
            triple(-pi(), zero(), zero()),
            triple(zero(), -pi(), zero()),
            triple(zero(), zero(), -pi()),
        ];
    }

    match p.orientation() {
        Orientation::Positive => vec![triple(&pi() - &xi2.half(), xi1.half(), (xi2 - xi1).half())],
        Orientation::Negative => vec![triple(-xi2.half(), &xi1.half() - &pi(), (xi2 - xi1).half())],
        Orientation::Zero => {
            if xi2.is_zero() {
                // (e^{i2β}, 1, 1)
                let beta = xi1.half();
                vec![
                    triple(zero(), beta.clone(), &pi() - &beta),
                    triple(zero(), &beta - &pi(), -beta),
                ]
            } else if xi1.is_zero() {
                // (1, e^{-i2α}, 1)
                let alpha = &pi() - &xi2.half();
                vec![
                    triple(alpha.clone(), zero(), &pi() - &alpha),
                    triple(&alpha - &pi(), zero(), -alpha),
                ]
            } else {
                // (e^{i2β}, e^{i2β}, 1)
                let beta = xi1.half();
                vec![
                    triple(&pi() - &beta, beta.clone(), zero()),
                    triple(-beta.clone(), &beta - &pi(), zero()),
                ]
            }
        }
    }
}

/// Everything known about a torus point as a triangle class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub point: TorusPoint,
    pub orientation: Orientation,
    pub degenerate: bool,
    pub flags: TypeFlags,
    pub loci: Vec<LocusId>,
    pub multiplicity: usize,
    pub order: BigInt,
    pub preimages: Vec<AngleTriple>,
}

impl Classification {
    pub fn sheets(&self) -> Vec<Sheet> {
        self.preimages.iter().map(AngleTriple::sheet).collect()
    }
}

/// Classifies a torus point. For degenerate points the flags are those of
/// the glued similarity class, read from the first preimage.
pub fn classify(p: &TorusPoint) -> Classification {
    let preimages = rho_preimages(p);
    let flags = taxonomy(&preimages[0]);
    Classification {
        point: p.clone(),
        orientation: p.orientation(),
        degenerate: p.is_degenerate(),
        flags,
        loci: p.loci(),
        multiplicity: symmetry::multiplicity(p),
        order: p.element_order().expect("rational points are torsion"),
        preimages,
    }
}

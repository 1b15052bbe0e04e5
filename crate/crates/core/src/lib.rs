//! # triangle-torus
//!
//! Similarity classes of labeled, oriented, possibly degenerate triangles,
//! modelled as points of the torus `ℝ²/2πℤ²`.
//!
//! A triangle `△[α, β, γ]` with signed interior angles is inscribed in the
//! unit circle as `(e^{i2β}, e^{−i2α}, 1)` ([`torus::rho`]). The resulting
//! pairs of relative arguments form an abelian group in which the standard
//! triangle types are subgroups and cosets, the signed permutation group
//! `±S₃ ≅ D₆` acts by relabeling and reflection, and the uniform measure
//! yields the relative frequencies of triangle types.
//!
//! Angles are exact rational multiples of π ([`PiRational`]); a float path
//! ([`approx`]) serves sampling and irrational inputs.
//!
//! ```
//! use triangle_torus::{rho, symmetry, triple_from_fractions, TorusPoint};
//!
//! let equilateral = triple_from_fractions((1, 3), (1, 3), (1, 3)).unwrap();
//! let p = rho(&equilateral);
//! assert_eq!(p, TorusPoint::from_fractions(2, 3, 4, 3));
//! assert_eq!(symmetry::multiplicity(&p), 6);
//! ```

pub mod angle;
pub mod approx;
pub mod error;
pub mod measure;
pub mod symmetry;
pub mod torus;
pub mod triangle;

pub use angle::PiRational;
pub use error::{MeasureError, ParseAngleError, TriangleError};
pub use torus::{
    classify, project_relative, rho, rho_preimages, Classification, LocusId, Orientation,
    TorusPoint,
};
pub use triangle::{
    degenerate_similar, make_triple, taxonomy, triple_from_fractions, AngleTriple, Sheet,
    TypeFlags, Vertex, VertexSet,
};

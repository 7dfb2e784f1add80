//! Exact Hattori-Stallings traces over rational group rings, complete Euler
//! characteristics of graphs of finite groups, and a symbolic calculus of
//! L²-Euler characteristics for group constructions.

pub mod chi;
pub mod class_function;
pub mod error;
pub mod fusion;
pub mod io;
pub mod group;
pub mod ring;
pub mod sampling;
pub mod scalar;

pub use chi::{BettiVector, ElementRef, GroupExpr, MarkedElement};
pub use class_function::{ClassFunction, HsTrace};
pub use error::{Error, Result};
pub use fusion::{EdgeSpec, FusionTable, GraphOfGroups};
pub use group::{ConjugacyClass, Element, FiniteGroup, GroupHom, Subgroup};
pub use ring::{GroupRingElement, GroupRingMatrix};
pub use scalar::Scalar;

/// Arbitrary-precision rationals: the scalar every exact check runs over.
pub type Rational = num_rational::BigRational;

pub type QElement = GroupRingElement<Rational>;
pub type QMatrix = GroupRingMatrix<Rational>;
pub type QClassFunction = ClassFunction<Rational>;
pub type QExpr = GroupExpr<Rational>;

//! Thrackle partitions, linear/track layouts, convex and exact-rational geometric
//! drawings, and brute-force oracles for thickness-type graph parameters.
//!
//! The crate is organized by the kind of drawing each module reasons about:
//!
//! * [`graph`] — the plain graph type, generators for the named families,
//!   arboricity, compatible bijections, and planarity testing.
//! * [`linear`] — vertex orderings, the cross/nest/disjoint trichotomy,
//!   stack/queue layouts, 2-track drawings and (k,t)-track layouts.
//! * [`convex`] — circular drawings, thrackle verification, and the convex
//!   constructions (matchings by distance, queue+arch splits, the spaced-set
//!   recursion, Walecki decomposition).
//! * [`geometry`] — exact rational straight-line (and 1-bend) drawings with
//!   orientation-predicate classification, plus the layered extremal family
//!   and the subdivided-complete-graph drawing.
//! * [`oracle`] — exhaustive exact solvers (clique cover, chromatic number,
//!   minima over orderings) used as ground truth for everything above.
//! * [`numbers`] — certified rational interval arithmetic for the ln/sqrt/γ
//!   bounds, so bound assertions never rely on floating point.

pub mod convex;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod json;
pub mod linear;
pub mod numbers;
pub mod oracle;
mod planarity;
pub mod svg;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;

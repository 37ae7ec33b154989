//! Generic immersions of finite graphs in the plane, as combinatorial data.
//!
//! The crate decomposes into:
//! - [`graph`]: finite simple hosts and canonical cycle enumeration;
//! - [`curve`]: based plane curves (double-occurrence words + handedness),
//!   faces, chord diagrams, containment, and curve-level moves;
//! - [`knot`]: over/under resolutions, the degree-two Conway coefficient and
//!   its averaged form, and derived diagram invariants;
//! - [`conway`]: an independent Conway-polynomial engine used as a
//!   cross-check;
//! - [`diagram`]: immersed graph diagrams (rotation systems + edge
//!   traversals + crossings), convex drawings, cycle restriction;
//! - [`moves`]: local moves on immersed graph diagrams and seeded walks;
//! - [`theorems`]: constructive searches and falsification-style checks for
//!   the global statements the library is built around;
//! - [`corpus`]: exhaustive small-curve enumeration;
//! - [`io`]: canonical JSON interchange.

pub mod conway;
pub mod corpus;
pub mod curve;
pub mod diagram;
pub mod dyadic;
pub mod error;
pub mod graph;
pub mod io;
pub mod knot;
pub mod moves;
pub mod theorems;

pub use curve::{ChordDiagram, Hand, PlaneCurve};
pub use diagram::{Crossing, Diagram};
pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use graph::Graph;
pub use knot::KnotDiagram;

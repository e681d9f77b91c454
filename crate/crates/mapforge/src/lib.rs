//! Rooted combinatorial maps on orientable surfaces.
//!
//! A map is a pair of permutations `(sigma, alpha)` acting transitively on a
//! finite set of half-edges: `alpha` is the fixed-point-free involution that
//! glues half-edges into edges, and `sigma` rotates the half-edges
//! counterclockwise around each vertex.  The composition `phi = sigma ∘ alpha`
//! walks the face contours, and the Euler relation `v - e + f = 2 - 2g`
//! recovers the genus of the surface the map is drawn on.
//!
//! On top of this core the crate provides:
//!
//! * **Spanned and covered maps** ([`cmap`]): a distinguished edge subset `S`
//!   together with the motion permutation that interleaves the submap and its
//!   complement, and the covered-map predicate (connecting submap with a
//!   single face, equivalently a cyclic motion permutation).
//! * **Letter codes** ([`codes`]): the linear code of a one-faced map and the
//!   two-family shuffle code of a covered map, with text round-trips.
//! * **Orientations** ([`orient`]): the canonical left-connected orientation
//!   of a covered map, its inverse walk, geodesic orientations of bipartite
//!   maps, and rightmost breadth-first-search spanning trees.
//! * **Unfolding and folding** ([`fold`]): the bijection between covered maps
//!   (equivalently, left-connected orientations) and pairs made of a plane
//!   tree and a coherently relabelled one-faced bipartite map (a *mobile*).
//! * **Mobile encodings** ([`mobile`]): height and degree codes of plane
//!   trees, corner-labelled and blossoming mobiles, direct folding procedures
//!   for both, and the specialisation to bipartite maps with geodesic labels.
//! * **Duality** ([`dual`]): duality on oriented maps, on mobiles, and on the
//!   tree codes.
//! * **Exhaustive enumeration and sampling** ([`enumerate`]): generators for
//!   rooted maps, one-faced maps, plane trees and covered maps with canonical
//!   deduplication, plus an exact uniform sampler of covered maps.
//! * **Counting formulas** ([`formulas`]): exact big-integer closed forms and
//!   generating-polynomial identities, each checkable against enumeration.
//!
//! Half-edges are the integers `0..2n`.  The root half-edge of the empty map
//! is absent; by convention the empty map has one vertex, one face and
//! genus 0.

#![warn(missing_docs)]

pub mod cmap;
pub mod codes;
pub mod dot;
pub mod dual;
pub mod enumerate;
pub mod fold;
pub mod formulas;
pub mod json;
pub mod mobile;
pub mod orient;
pub mod perm;

mod error;

pub use error::MapError;

/// Convenient result alias used across the crate.
pub type Result<T> = std::result::Result<T, MapError>;

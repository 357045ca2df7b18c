//! Square-tiled surfaces as permutation pairs, the SL(2,Z) action on them and
//! the built-in examples.

pub mod catalog;
pub mod perm;
pub mod polygon;
pub mod sl2z;
pub mod surface;
pub mod veech;

pub use catalog::{catalog, CatalogEntry, Quat};
pub use perm::Perm;
pub use polygon::{polygon_to_origami, EdgeKind, EdgeTerm, PolygonOrigami};
pub use sl2z::{normalizer, sl2z_word, Letter, Sl2z, Word};
pub use surface::{Origami, Stratum, VertexClass};
pub use veech::{veech_group, veech_group_with, VeechGroup};

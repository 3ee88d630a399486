//! Plat closures of braids: components, dynamics, bridge distance and
//! double branched covers.

pub mod batch;
pub mod braid;
pub mod cache;
pub mod cover;
pub mod diagram;
pub mod dynamics;
pub mod family;
pub mod error;
pub mod fishnet;
pub mod linalg;
pub mod permutation;
pub mod plat;
pub mod report;

pub use braid::{full_twist, garside_delta, parse_braid, BraidWord, Letter};
pub use error::{Error, Result};
pub use permutation::{canonical_projection, permutation_order, Permutation};
pub use plat::{component_summary, is_knot, knot_powers, plat_graph, PlatComponentSummary, PlatGraph};

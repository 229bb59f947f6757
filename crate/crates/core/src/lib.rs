//! Exact invariants of surface mapping tori and the circle bundles over
//! them: integer linear algebra, Laurent polynomial rings, surface mapping
//! classes, Fox calculus, and four-manifold invariants.

pub mod circle_bundle;
pub mod intlin;
pub mod laurent;
pub mod mapping_torus;
pub mod report;
pub mod surface;

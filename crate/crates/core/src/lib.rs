//! Arc and quiver calculus for the cluster category of type A∞ enlarged by
//! Prüfer objects.
//!
//! * [`quiver`]: indecomposables `Σ^s X_d` and `E_n`, Hom and Ext dimensions.
//! * [`arc`]: the arc model and crossing geometry.
//! * [`config`]: symbolic infinite arc configurations and their
//!   classification.
//! * [`graded`]: graded `k[T]`-module images and truncated Hom towers, an
//!   independent route to the Prüfer Hom formulas.
//! * [`suites`]: the exhaustive agreement checks run by `infgon check`.

pub mod arc;
pub mod config;
pub mod error;
pub mod graded;
pub mod quiver;
pub mod suites;
pub mod window;

pub use arc::{arc_to_object, arcs_cross, ext_via_crossing, object_to_arc, overarcs_crossing_infinite, Arc, CrossResult, FiniteArc};
pub use config::{classify, ArcConfiguration, Classification, Generator, Verdict};
pub use error::{Error, Result};
pub use quiver::{
    composite_nonzero, ext_dim, h_region_contains, hom_dim, shift_object, wedge_contains, Composite, FiniteInd, HomDim,
    IndObject, PruferInd, RegionPart,
};
pub use window::Window;

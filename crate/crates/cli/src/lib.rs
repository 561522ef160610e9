//! Command-line front end for `infgon-core`.

pub mod app;
pub mod render;

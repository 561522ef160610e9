//! Graded `k[T]`-modules, with `T` in degree -1 and `(ΣM)^i = M^{i+1}`.

mod tower;

pub use tower::{
    build_hom_tower, build_inverse_hom_tower, prufer_prufer_tower, truncated_colim, truncated_lim, Direction,
    HomTower, TowerLimit,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::IndObject;
use crate::window::Window;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum GradedModuleDescriptor {
    /// `Σ^shift k[T]/(T^length)`.
    FiniteCyclic { shift: i64, length: i64 },
    /// `Σ^shift k[T]`.
    PolyFree { shift: i64 },
    /// `Σ^shift k[T^{-1}]`.
    PruferMod { shift: i64 },
}

impl GradedModuleDescriptor {
    pub fn finite_cyclic(shift: i64, length: i64) -> Result<Self> {
        if length < 1 {
            return Err(Error::Config(format!("cyclic module length must be at least 1, got {length}")));
        }
        Ok(GradedModuleDescriptor::FiniteCyclic { shift, length })
    }

    pub fn shifted(&self, t: i64) -> Self {
        match *self {
            GradedModuleDescriptor::FiniteCyclic { shift, length } => GradedModuleDescriptor::FiniteCyclic { shift: shift + t, length },
            GradedModuleDescriptor::PolyFree { shift } => GradedModuleDescriptor::PolyFree { shift: shift + t },
            GradedModuleDescriptor::PruferMod { shift } => GradedModuleDescriptor::PruferMod { shift: shift + t },
        }
    }

    /// Dimension in cohomological degree `i`.
    pub fn dim(&self, i: i64) -> u8 {
        let inside = match *self {
            GradedModuleDescriptor::FiniteCyclic { shift, length } => -shift - length < i && i <= -shift,
            GradedModuleDescriptor::PolyFree { shift } => i <= -shift,
            GradedModuleDescriptor::PruferMod { shift } => i >= -shift,
        };
        u8::from(inside)
    }
}

impl fmt::Display for GradedModuleDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GradedModuleDescriptor::FiniteCyclic { shift, length } => write!(f, "Σ^{shift} k[T]/(T^{length})"),
            GradedModuleDescriptor::PolyFree { shift } => write!(f, "Σ^{shift} k[T]"),
            GradedModuleDescriptor::PruferMod { shift } => write!(f, "Σ^{shift} k[T^-1]"),
        }
    }
}

pub fn f_image(x: IndObject) -> GradedModuleDescriptor {
    match x {
        IndObject::Finite(y) => GradedModuleDescriptor::FiniteCyclic {
            shift: y.shift(),
            length: y.index() + 1,
        },
        IndObject::Prufer(e) => GradedModuleDescriptor::PruferMod { shift: e.slot() },
    }
}

/// The graded dual `(M^*)^i = (M^{-i})^*`.
pub fn dual_descriptor(m: GradedModuleDescriptor) -> GradedModuleDescriptor {
    match m {
        GradedModuleDescriptor::FiniteCyclic { shift, length } => GradedModuleDescriptor::FiniteCyclic {
            shift: -shift - length + 1,
            length,
        },
        GradedModuleDescriptor::PolyFree { shift } => GradedModuleDescriptor::PruferMod { shift: -shift },
        GradedModuleDescriptor::PruferMod { shift } => GradedModuleDescriptor::PolyFree { shift: -shift },
    }
}

pub fn degreewise_dims(m: GradedModuleDescriptor, range: Window) -> Vec<u8> {
    (range.lo()..=range.hi()).map(|i| m.dim(i)).collect()
}

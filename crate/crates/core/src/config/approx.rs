//! Almost-right approximations for cluster tilting configurations, at the
//! level of Hom dimensions.
//!
//! With the arc to infinity at `f` (the object `E_n`, `n = -f-2`), every
//! object `d` is approximated by one of: the zero map, a coslice arc
//! `(x, f)`, or `E_n` itself. The report lists which configuration objects
//! in a window have nonzero maps to `d` and whether those maps are known to
//! factor through the chosen target.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::classify::{classify, Verdict};
use super::ArcConfiguration;
use crate::arc::{object_to_arc, Arc, FiniteArc};
use crate::error::{Error, Result};
use crate::quiver::{composite_nonzero, hom_dim, Composite, IndObject, PruferInd};
use crate::window::Window;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "target")]
pub enum ApproxKind {
    ZeroSuffices,
    CosliceObject(FiniteArc),
    PruferObject(PruferInd),
}

impl fmt::Display for ApproxKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ApproxKind::ZeroSuffices => f.write_str("ZeroSuffices"),
            ApproxKind::CosliceObject(x) => write!(f, "CosliceObject {x}"),
            ApproxKind::PruferObject(e) => write!(f, "PruferObject {e}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FactorRule {
    /// The object is the approximating object itself.
    Identity,
    /// `d` is the approximating object itself.
    TargetIdentity,
    /// `composite_nonzero(t, target, d)` is `True`.
    CompositeCriterion,
    /// `t = (y, f)` further out on the coslice than a coslice target.
    CosliceFamily,
    /// `t = (f, b)` on the slice, mapping to a finite `d` in the wedge.
    SliceFamily,
    /// `t = (f, b)` on the slice, mapping to `E_{n+k}` with `k < 0`.
    PruferSlice,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "rule")]
pub enum FactorStatus {
    Factors(FactorRule),
    /// Nonzero maps exist on both legs but no criterion decides the composite.
    Indeterminate,
    /// Not handled by the target; one of the finitely many exceptions.
    Exception,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproxEntry {
    pub arc: Arc,
    pub status: FactorStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproximationReport {
    pub object: IndObject,
    pub fountain: i64,
    pub prufer: PruferInd,
    pub kind: ApproxKind,
    pub window: Window,
    pub entries: Vec<ApproxEntry>,
}

impl ApproximationReport {
    pub fn exceptions(&self) -> impl Iterator<Item = &ApproxEntry> {
        self.entries.iter().filter(|e| e.status == FactorStatus::Exception)
    }

    pub fn factoring(&self) -> impl Iterator<Item = &ApproxEntry> {
        self.entries.iter().filter(|e| matches!(e.status, FactorStatus::Factors(_)))
    }
}

/// Shortest coslice arc `(x, f)` of `c`, `x <= start`, satisfying `ok`.
fn coslice_search(c: &ArcConfiguration, f: i64, start: i64, ok: impl Fn(FiniteArc) -> bool) -> Result<FiniteArc> {
    let mut x = start.min(f - 2);
    while f - x <= 1 << 24 {
        let arc = FiniteArc::new(x, f)?;
        if c.contains(arc) && ok(arc) {
            return Ok(arc);
        }
        x -= 1;
    }
    Err(Error::Hypothesis(format!("no coslice arc ending at {f} maps to the object")))
}

pub fn approximation_report(c: &ArcConfiguration, d: IndObject, window: Window) -> Result<ApproximationReport> {
    let verdict = classify(c, c.natural_window().hull(window)).verdict;
    if verdict != Verdict::ClusterTilting {
        return Err(Error::Hypothesis(format!(
            "configuration must be cluster tilting (classified as {verdict})"
        )));
    }
    let f = c.infinite()[0];
    let n = -f - 2;
    let prufer = PruferInd::new(n)?;
    let hom = |x: IndObject, y: IndObject| hom_dim(x, y).value == 1;

    let kind = match d {
        IndObject::Finite(y) => {
            let arc = FiniteArc::from_object(y);
            if arc.a() <= f - 2 && arc.b() >= f {
                ApproxKind::CosliceObject(coslice_search(c, f, arc.a(), |t| {
                    hom(IndObject::Finite(t.to_object()), d)
                })?)
            } else {
                ApproxKind::ZeroSuffices
            }
        }
        IndObject::Prufer(e) => {
            let k = e.slot() - n;
            if k <= 0 {
                ApproxKind::PruferObject(prufer)
            } else if k == 1 {
                ApproxKind::ZeroSuffices
            } else {
                ApproxKind::CosliceObject(coslice_search(c, f, f - 2, |t| {
                    hom(IndObject::Finite(t.to_object()), d)
                })?)
            }
        }
    };

    let mut objects: Vec<IndObject> = c
        .finite_in_window(window)
        .into_iter()
        .map(|x| IndObject::Finite(x.to_object()))
        .collect();
    if window.contains(f) {
        objects.push(IndObject::Prufer(prufer));
    }

    let entries = objects
        .into_iter()
        .filter(|&t| hom(t, d))
        .map(|t| ApproxEntry {
            arc: object_to_arc(t),
            status: factor_status(t, d, kind, f, n),
        })
        .collect();

    Ok(ApproximationReport {
        object: d,
        fountain: f,
        prufer,
        kind,
        window,
        entries,
    })
}

fn factor_status(t: IndObject, d: IndObject, kind: ApproxKind, f: i64, n: i64) -> FactorStatus {
    use FactorStatus::{Exception, Factors, Indeterminate};
    let target = match kind {
        ApproxKind::ZeroSuffices => return Exception,
        ApproxKind::CosliceObject(x) => IndObject::Finite(x.to_object()),
        ApproxKind::PruferObject(e) => IndObject::Prufer(e),
    };
    if t == target {
        return Factors(FactorRule::Identity);
    }
    if d == target {
        return Factors(FactorRule::TargetIdentity);
    }
    if hom_dim(t, target).value == 0 {
        return Exception;
    }
    let t_arc = object_to_arc(t);
    match (t, target, d) {
        (IndObject::Finite(u), IndObject::Finite(v), IndObject::Finite(w)) => {
            match composite_nonzero(u, v, w) {
                Ok(Composite::True) => Factors(FactorRule::CompositeCriterion),
                Ok(Composite::False) | Err(_) => Exception,
                Ok(Composite::Indeterminate) => match t_arc {
                    Arc::Finite(x) if x.a() == f => Factors(FactorRule::SliceFamily),
                    _ => Indeterminate,
                },
            }
        }
        (IndObject::Finite(_), IndObject::Finite(v), IndObject::Prufer(e)) => {
            // Coslice arcs (y, f) with y below the target's left end factor
            // through it on their way to E_{n+k}.
            let v = FiniteArc::from_object(v);
            let k = e.slot() - n;
            match t_arc {
                Arc::Finite(x) if x.b() == f && x.a() < v.a() && v.a() <= f - k => {
                    Factors(FactorRule::CosliceFamily)
                }
                _ => Indeterminate,
            }
        }
        (IndObject::Finite(_), IndObject::Prufer(_), IndObject::Prufer(e)) => {
            let k = e.slot() - n;
            match t_arc {
                Arc::Finite(x) if x.a() == f && k < 0 && x.b() >= f + 2 - k => Factors(FactorRule::PruferSlice),
                _ => Indeterminate,
            }
        }
        _ => Indeterminate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct() -> ArcConfiguration {
        ArcConfiguration::fan(0).with_infinite(0)
    }

    fn e(n: i64) -> IndObject {
        IndObject::prufer(n).unwrap()
    }

    fn w() -> Window {
        Window::symmetric(8)
    }

    #[test]
    fn prufer_cases() {
        let c = ct();
        assert_eq!(approximation_report(&c, e(-1), w()).unwrap().kind, ApproxKind::ZeroSuffices);
        let p = PruferInd::new(-2).unwrap();
        assert_eq!(approximation_report(&c, e(-2), w()).unwrap().kind, ApproxKind::PruferObject(p));
        assert_eq!(approximation_report(&c, e(-3), w()).unwrap().kind, ApproxKind::PruferObject(p));
    }

    #[test]
    fn zero_suffices_has_no_maps_from_shift() {
        let r = approximation_report(&ct(), e(-1), w()).unwrap();
        assert!(r.entries.is_empty());
    }

    #[test]
    fn finite_in_wedge() {
        // (-3, 2) strictly overarcs f - 1 = -1.
        let d = IndObject::Finite(FiniteArc::new(-3, 2).unwrap().to_object());
        let r = approximation_report(&ct(), d, w()).unwrap();
        let ApproxKind::CosliceObject(t) = r.kind else {
            panic!("expected a coslice target, got {:?}", r.kind)
        };
        assert_eq!(t, FiniteArc::new(-3, 0).unwrap());
        assert_eq!(hom_dim(IndObject::Finite(t.to_object()), d).value, 1);
        assert_eq!(r.entries.iter().filter(|e| e.status == FactorStatus::Indeterminate).count(), 1);
    }

    #[test]
    fn finite_outside_wedge() {
        let d = IndObject::Finite(FiniteArc::new(1, 5).unwrap().to_object());
        let r = approximation_report(&ct(), d, w()).unwrap();
        assert_eq!(r.kind, ApproxKind::ZeroSuffices);
        assert!(r.exceptions().count() == r.entries.len());
    }

    #[test]
    fn large_prufer_shift() {
        let r = approximation_report(&ct(), e(1), w()).unwrap();
        assert_eq!(r.kind, ApproxKind::CosliceObject(FiniteArc::new(-3, 0).unwrap()));
        assert!(r.entries.iter().all(|e| matches!(e.status, FactorStatus::Factors(_))));
    }

    #[test]
    fn requires_cluster_tilting() {
        assert!(approximation_report(&ArcConfiguration::zigzag(0), e(0), w()).is_err());
    }
}

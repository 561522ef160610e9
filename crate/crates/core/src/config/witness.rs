use std::fmt;

use serde::{Deserialize, Serialize};

use super::classify::{classify, Verdict};
use super::ArcConfiguration;
use crate::arc::FiniteArc;
use crate::error::{Error, Result};
use crate::quiver::{hom_dim, IndObject, PruferInd};
use crate::window::Window;

/// Searches stop once the window is this wide. Locally finite maximal
/// configurations always have an overarc much closer than that.
const SEARCH_LIMIT: i64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase")]
pub enum OverarcTarget {
    Arc(FiniteArc),
    Point(i64),
}

impl OverarcTarget {
    fn span(&self) -> (i64, i64) {
        match *self {
            OverarcTarget::Arc(x) => (x.a(), x.b()),
            OverarcTarget::Point(h) => (h, h),
        }
    }

    fn is_under(&self, x: &FiniteArc) -> bool {
        match self {
            OverarcTarget::Arc(t) => x.strictly_over(t),
            OverarcTarget::Point(h) => x.straddles(*h),
        }
    }
}

impl fmt::Display for OverarcTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OverarcTarget::Arc(x) => x.fmt(f),
            OverarcTarget::Point(h) => h.fmt(f),
        }
    }
}

fn require_locally_finite(c: &ArcConfiguration, around: Window) -> Result<()> {
    let verdict = classify(c, c.natural_window().hull(around)).verdict;
    if verdict != Verdict::WctLocallyFinite {
        return Err(Error::Hypothesis(format!(
            "configuration must be maximal, non-crossing and locally finite with no infinite arc (classified as {verdict})"
        )));
    }
    Ok(())
}

fn shortest_over(c: &ArcConfiguration, target: OverarcTarget, w: Window) -> Option<FiniteArc> {
    c.finite_in_window(w)
        .into_iter()
        .filter(|x| target.is_under(x))
        .min_by_key(|x| (x.len(), *x))
}

/// The shortest arc of `c` lying strictly over `target`, ties broken
/// lexicographically.
///
/// The window starts at the target's span plus 2 and doubles until an
/// overarc shows up. Once one of length `L` is known, every shorter one has
/// endpoints within `L` of the target, so one more scan of that window gives
/// the exact minimum.
pub fn strong_overarc(c: &ArcConfiguration, target: OverarcTarget) -> Result<FiniteArc> {
    let (p, q) = target.span();
    let span = Window::new(p, q)?;
    require_locally_finite(c, span)?;
    if let OverarcTarget::Arc(x) = target {
        if !c.contains(x) {
            return Err(Error::Hypothesis(format!("{x} is not an arc of the configuration")));
        }
    }
    let mut w = span.widened(2);
    loop {
        if let Some(found) = shortest_over(c, target, w) {
            let exact = Window::new(p - found.len(), q + found.len())?;
            return Ok(shortest_over(c, target, exact).unwrap_or(found));
        }
        if w.width() > SEARCH_LIMIT {
            return Err(Error::Hypothesis(format!("no strong overarc of {target} within {w}")));
        }
        w = w.widened(w.width());
    }
}

/// A chain of `count` successive strong overarcs starting above `seed`,
/// checked to be an antichain for Hom with every member mapping to
/// `E_{-p-2}`, where `seed = (p, q)`.
pub fn overarc_antichain(c: &ArcConfiguration, seed: FiniteArc, count: usize) -> Result<Vec<FiniteArc>> {
    require_locally_finite(c, Window::new(seed.a(), seed.b())?)?;
    if !c.contains(seed) {
        return Err(Error::Hypothesis(format!("{seed} is not an arc of the configuration")));
    }
    let mut chain: Vec<FiniteArc> = Vec::with_capacity(count);
    let mut current = seed;
    for _ in 0..count {
        current = strong_overarc(c, OverarcTarget::Arc(current))?;
        chain.push(current);
    }

    let prufer = IndObject::Prufer(PruferInd::new(-seed.a() - 2)?);
    let obj = |x: &FiniteArc| IndObject::Finite(x.to_object());
    for x in &chain {
        if hom_dim(obj(x), prufer).value != 1 {
            return Err(Error::Hypothesis(format!("Hom({x}, {prufer}) vanishes")));
        }
    }
    for (i, x) in chain.iter().enumerate() {
        for y in &chain[i + 1..] {
            if hom_dim(obj(x), obj(y)).value != 0 || hom_dim(obj(y), obj(x)).value != 0 {
                return Err(Error::Hypothesis(format!("{x} and {y} are comparable under Hom")));
            }
        }
    }
    Ok(chain)
}

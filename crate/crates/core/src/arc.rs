//! Arcs of the ∞-gon and their crossing geometry.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_range, Error, Result};
use crate::quiver::{ext_dim, FiniteInd, HomDim, IndObject, PruferInd};
use crate::window::Window;

/// A finite arc `(a, b)` with `a <= b - 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "(i64, i64)", into = "(i64, i64)")]
pub struct FiniteArc {
    a: i64,
    b: i64,
}

#[allow(clippy::len_without_is_empty)]
impl FiniteArc {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        check_range(a)?;
        check_range(b)?;
        if a > b - 2 {
            return Err(Error::InvalidArc { a, b });
        }
        Ok(FiniteArc { a, b })
    }

    pub(crate) fn raw(a: i64, b: i64) -> Self {
        debug_assert!(a <= b - 2);
        FiniteArc { a, b }
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn len(&self) -> i64 {
        self.b - self.a
    }

    /// Strict overarc of the integer `h`: `a < h < b`.
    pub fn straddles(&self, h: i64) -> bool {
        self.a < h && h < self.b
    }

    /// Strong overarc of `other`: `a < other.a < other.b < b`.
    pub fn strictly_over(&self, other: &FiniteArc) -> bool {
        self.a < other.a && other.b < self.b
    }

    pub fn crosses(&self, other: &FiniteArc) -> bool {
        (self.a < other.a && other.a < self.b && self.b < other.b)
            || (other.a < self.a && self.a < other.b && other.b < self.b)
    }

    pub fn to_object(&self) -> FiniteInd {
        FiniteInd::raw(-self.b, self.b - self.a - 2)
    }

    pub fn from_object(x: FiniteInd) -> Self {
        FiniteArc::raw(-x.shift() - x.index() - 2, -x.shift())
    }

    pub fn within(&self, w: Window) -> bool {
        w.contains(self.a) && w.contains(self.b)
    }
}

impl TryFrom<(i64, i64)> for FiniteArc {
    type Error = Error;

    fn try_from((a, b): (i64, i64)) -> Result<Self> {
        FiniteArc::new(a, b)
    }
}

impl From<FiniteArc> for (i64, i64) {
    fn from(x: FiniteArc) -> Self {
        (x.a, x.b)
    }
}

impl fmt::Display for FiniteArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Finite arcs sort before infinite ones; each kind sorts by its endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Arc {
    Finite(FiniteArc),
    Infinite(i64),
}

impl Arc {
    pub fn finite(a: i64, b: i64) -> Result<Self> {
        FiniteArc::new(a, b).map(Arc::Finite)
    }

    pub fn infinite(m: i64) -> Result<Self> {
        check_range(m).map(Arc::Infinite)
    }
}

impl From<FiniteArc> for Arc {
    fn from(x: FiniteArc) -> Self {
        Arc::Finite(x)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arc::Finite(x) => x.fmt(f),
            Arc::Infinite(m) => write!(f, "({m},∞)"),
        }
    }
}

/// Reads `a,b` or `m,inf`, optionally wrapped in parentheses.
impl FromStr for Arc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("cannot read arc from {s:?}; expected \"a,b\" or \"m,inf\""));
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(t);
        let (l, r) = t.split_once(',').ok_or_else(bad)?;
        let l: i64 = l.trim().parse().map_err(|_| bad())?;
        match r.trim() {
            "inf" | "∞" | "infinity" => Arc::infinite(l),
            r => Arc::finite(l, r.parse().map_err(|_| bad())?),
        }
    }
}

impl FromStr for FiniteArc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.parse::<Arc>()? {
            Arc::Finite(x) => Ok(x),
            Arc::Infinite(_) => Err(Error::Parse(format!("{s:?} is infinite; a finite arc is required"))),
        }
    }
}

impl Serialize for Arc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&match self {
            Arc::Finite(x) => format!("{},{}", x.a, x.b),
            Arc::Infinite(m) => format!("{m},inf"),
        })
    }
}

impl<'de> Deserialize<'de> for Arc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CrossResult {
    Cross,
    NoCross,
    UndefinedInfiniteInfinite,
}

impl fmt::Display for CrossResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CrossResult::Cross => "Cross",
            CrossResult::NoCross => "NoCross",
            CrossResult::UndefinedInfiniteInfinite => "UndefinedInfiniteInfinite",
        })
    }
}

pub fn object_to_arc(x: IndObject) -> Arc {
    match x {
        IndObject::Finite(f) => Arc::Finite(FiniteArc::from_object(f)),
        IndObject::Prufer(p) => Arc::Infinite(-p.slot() - 2),
    }
}

pub fn arc_to_object(x: Arc) -> Result<IndObject> {
    match x {
        Arc::Finite(f) => {
            // Re-validate: callers may have built the arc through `raw`.
            FiniteArc::new(f.a, f.b)?;
            Ok(IndObject::Finite(f.to_object()))
        }
        Arc::Infinite(m) => Ok(IndObject::Prufer(PruferInd::new(-m - 2)?)),
    }
}

pub fn arcs_cross(x: Arc, y: Arc) -> CrossResult {
    let crossed = match (x, y) {
        (Arc::Finite(p), Arc::Finite(q)) => p.crosses(&q),
        (Arc::Finite(p), Arc::Infinite(m)) | (Arc::Infinite(m), Arc::Finite(p)) => p.straddles(m),
        (Arc::Infinite(_), Arc::Infinite(_)) => return CrossResult::UndefinedInfiniteInfinite,
    };
    if crossed {
        CrossResult::Cross
    } else {
        CrossResult::NoCross
    }
}

/// Ext dimension read off the crossing geometry. The value agrees with
/// [`ext_dim`] in both directions; the returned clause is the one from the
/// quiver-side computation of `Ext(x, y)`.
pub fn ext_via_crossing(x: Arc, y: Arc) -> Result<HomDim> {
    let value = match arcs_cross(x, y) {
        CrossResult::Cross => 1,
        CrossResult::NoCross => 0,
        CrossResult::UndefinedInfiniteInfinite => return Err(Error::TwoInfiniteArcs(x, y)),
    };
    let clause = ext_dim(arc_to_object(x)?, arc_to_object(y)?).clause;
    Ok(HomDim { value, clause })
}

/// All finite arcs with endpoints in the window that strictly straddle `m`,
/// in lexicographic order.
pub fn overarcs_crossing_infinite(m: i64, window: Window) -> Vec<FiniteArc> {
    let mut out = Vec::new();
    for a in window.lo()..m.min(window.hi() + 1) {
        for b in (m + 1).max(a + 2).max(window.lo())..=window.hi() {
            out.push(FiniteArc::raw(a, b));
        }
    }
    out
}

/// Every finite arc with both endpoints in the window, lexicographically.
pub fn arcs_in_window(window: Window) -> impl Iterator<Item = FiniteArc> {
    let (lo, hi) = (window.lo(), window.hi());
    (lo..=hi).flat_map(move |a| (a + 2..=hi).map(move |b| FiniteArc::raw(a, b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::shift_object;

    fn fa(a: i64, b: i64) -> Arc {
        Arc::finite(a, b).unwrap()
    }

    fn w(lo: i64, hi: i64) -> Window {
        Window::new(lo, hi).unwrap()
    }

    #[test]
    fn coordinates() {
        let x = IndObject::finite(1, 0).unwrap();
        assert_eq!(object_to_arc(x), fa(-3, -1));
        assert_eq!(object_to_arc(IndObject::finite(0, 0).unwrap()), fa(-2, 0));
        assert_eq!(object_to_arc(IndObject::prufer(0).unwrap()), Arc::Infinite(-2));
        assert_eq!(arc_to_object(fa(-2, 0)).unwrap(), IndObject::finite(0, 0).unwrap());
        assert_eq!(arc_to_object(Arc::Infinite(-2)).unwrap(), IndObject::prufer(0).unwrap());
        assert_eq!(Arc::finite(0, 1), Err(Error::InvalidArc { a: 0, b: 1 }));
    }

    #[test]
    fn general_slice_coordinate() {
        for n in -6..6 {
            let x = IndObject::finite(n + 1, 0).unwrap();
            assert_eq!(object_to_arc(x), fa(-n - 3, -n - 1));
        }
    }

    #[test]
    fn crossing_examples() {
        assert_eq!(arcs_cross(fa(0, 2), fa(1, 3)), CrossResult::Cross);
        assert_eq!(arcs_cross(fa(0, 4), fa(1, 3)), CrossResult::NoCross);
        assert_eq!(arcs_cross(fa(0, 4), Arc::Infinite(2)), CrossResult::Cross);
        assert_eq!(arcs_cross(fa(0, 4), Arc::Infinite(4)), CrossResult::NoCross);
        assert_eq!(
            arcs_cross(Arc::Infinite(0), Arc::Infinite(5)),
            CrossResult::UndefinedInfiniteInfinite
        );
    }

    #[test]
    fn ext_examples() {
        assert_eq!(ext_via_crossing(fa(-2, 0), fa(-3, -1)).unwrap().value, 1);
        assert_eq!(ext_via_crossing(fa(-2, 0), fa(-2, 0)).unwrap().value, 0);
        assert_eq!(ext_via_crossing(fa(-4, -2), Arc::Infinite(-2)).unwrap().value, 0);
        assert!(matches!(
            ext_via_crossing(Arc::Infinite(0), Arc::Infinite(1)),
            Err(Error::TwoInfiniteArcs(..))
        ));
    }

    #[test]
    fn overarc_listing() {
        let got: Vec<_> = overarcs_crossing_infinite(0, w(-2, 2))
            .into_iter()
            .map(|x| (x.a(), x.b()))
            .collect();
        assert_eq!(got, [(-2, 1), (-2, 2), (-1, 1), (-1, 2)]);
        assert!(overarcs_crossing_infinite(0, w(0, 5)).is_empty());
        let got: Vec<_> = overarcs_crossing_infinite(-2, w(-4, 0))
            .into_iter()
            .map(|x| (x.a(), x.b()))
            .collect();
        assert_eq!(got, [(-4, -1), (-4, 0), (-3, -1), (-3, 0)]);
    }

    #[test]
    fn overarc_listing_matches_filter() {
        let win = w(-6, 5);
        for m in -8..8 {
            let slow: Vec<_> = arcs_in_window(win).filter(|x| x.straddles(m)).collect();
            assert_eq!(overarcs_crossing_infinite(m, win), slow, "m={m}");
        }
    }

    #[test]
    fn shift_translates_arcs() {
        for x in arcs_in_window(w(-6, 6)) {
            let obj = IndObject::Finite(x.to_object());
            for t in -3..=3 {
                let moved = object_to_arc(shift_object(obj, t));
                assert_eq!(moved, fa(x.a() - t, x.b() - t));
            }
        }
    }

    #[test]
    fn parse_and_print() {
        assert_eq!("0,2".parse::<Arc>().unwrap(), fa(0, 2));
        assert_eq!(" -3 , inf ".parse::<Arc>().unwrap(), Arc::Infinite(-3));
        assert_eq!("(-1,1)".parse::<Arc>().unwrap(), fa(-1, 1));
        assert!("0,1".parse::<Arc>().is_err());
        assert!("zero".parse::<Arc>().is_err());
        assert_eq!(Arc::Infinite(1).to_string(), "(1,∞)");
        assert_eq!(Arc::Infinite(1).to_string().parse::<Arc>().unwrap(), Arc::Infinite(1));
        assert!(fa(5, 9) < Arc::Infinite(-100));
    }
}

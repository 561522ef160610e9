//! Symbolic, possibly infinite arc configurations.
//!
//! A configuration is a list of generators plus a list of infinite arcs. Each
//! generator is either a finite explicit arc set or one of three infinite
//! families (fan, zigzag, split fan), each of which is a maximal non-crossing
//! set of finite arcs on its own. Every predicate here is exact: scans only
//! ever run over windows that provably contain every relevant arc.

mod approx;
mod classify;
mod direct_system;
mod witness;

pub use approx::{approximation_report, ApproxEntry, ApproxKind, ApproximationReport, FactorRule, FactorStatus};
pub use classify::{classify, Classification, Reason, Verdict};
pub use direct_system::{classify_direct_system, DirectSystem, Move, SystemLimit, Tail};
pub use witness::{overarc_antichain, strong_overarc, OverarcTarget};

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::arc::{arcs_in_window, Arc, FiniteArc};
use crate::error::{check_range, Error, Result};
use crate::window::Window;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Generator {
    Explicit { arcs: Vec<FiniteArc> },
    Fan { vertex: i64 },
    Zigzag { center: i64 },
    SplitFan { p: i64, q: i64 },
}

impl Generator {
    fn validate(&self) -> Result<()> {
        match *self {
            Generator::Explicit { .. } => Ok(()),
            Generator::Fan { vertex } => check_range(vertex).map(drop),
            Generator::Zigzag { center } => check_range(center).map(drop),
            Generator::SplitFan { p, q } => {
                check_range(p)?;
                check_range(q)?;
                if p > q {
                    return Err(Error::Config(format!("splitfan requires p <= q, got p={p}, q={q}")));
                }
                Ok(())
            }
        }
    }

    /// `SplitFan(m, m)` is the same arc set as `Fan(m)`.
    fn normalized(&self) -> Generator {
        match *self {
            Generator::SplitFan { p, q } if p == q => Generator::Fan { vertex: p },
            ref g => g.clone(),
        }
    }

    fn is_spanning(&self) -> bool {
        !matches!(self, Generator::Explicit { .. })
    }

    pub fn contains(&self, x: FiniteArc) -> bool {
        let (a, b) = (x.a(), x.b());
        match *self {
            Generator::Explicit { ref arcs } => arcs.contains(&x),
            Generator::Fan { vertex: v } => (a == v && b >= v + 2) || (b == v && a <= v - 2),
            Generator::Zigzag { center: c } => {
                let n = b - c;
                n >= 1 && (a == c - n || a == c - n - 1)
            }
            Generator::SplitFan { p, q } => {
                (b == p && a <= p - 2) || (a == q && b >= q + 2) || (a == p && p + 2 <= b && b <= q)
            }
        }
    }

    /// Arcs of this generator with both endpoints in `w`, sorted.
    pub fn materialize(&self, w: Window) -> Vec<FiniteArc> {
        let (lo, hi) = (w.lo(), w.hi());
        let mut out = Vec::new();
        match *self {
            Generator::Explicit { ref arcs } => {
                out.extend(arcs.iter().copied().filter(|x| x.within(w)));
            }
            Generator::Fan { vertex } => return Generator::SplitFan { p: vertex, q: vertex }.materialize(w),
            Generator::Zigzag { center: c } => {
                for n in 1..=(c - lo).min(hi - c) {
                    out.push(FiniteArc::raw(c - n, c + n));
                }
                for n in 1..=(c - lo - 1).min(hi - c) {
                    out.push(FiniteArc::raw(c - n - 1, c + n));
                }
            }
            Generator::SplitFan { p, q } => {
                if w.contains(p) {
                    out.extend((lo..=p - 2).map(|a| FiniteArc::raw(a, p)));
                    out.extend((p + 2..=q.min(hi)).map(|b| FiniteArc::raw(p, b)));
                }
                if w.contains(q) {
                    out.extend((q + 2..=hi).map(|b| FiniteArc::raw(q, b)));
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// A window containing `w` and every arc of this generator that can cross
    /// an arc with endpoints in `w`.
    ///
    /// An arc crossing `(x, y)` has exactly one endpoint strictly inside. Fan
    /// and split-fan arcs all have an endpoint at an anchor, so the shortest
    /// crossing arcs end within one step of the hull of `w` and the anchors.
    /// Zigzag arcs are symmetric about the center up to one step, so the
    /// reflected window bounds the other endpoint.
    fn covering(&self, w: Window) -> Window {
        match *self {
            Generator::Explicit { ref arcs } => arcs
                .iter()
                .fold(w, |acc, x| acc.including(x.a()).including(x.b())),
            Generator::Fan { vertex } => w.including(vertex).widened(2),
            Generator::SplitFan { p, q } => w.including(p).including(q).widened(2),
            Generator::Zigzag { center: c } => w
                .including(2 * c - w.lo())
                .including(2 * c - w.hi())
                .widened(2),
        }
    }

    fn anchors(&self) -> Vec<i64> {
        match *self {
            Generator::Explicit { ref arcs } => arcs.iter().flat_map(|x| [x.a(), x.b()]).collect(),
            Generator::Fan { vertex } => vec![vertex],
            Generator::Zigzag { center } => vec![center],
            Generator::SplitFan { p, q } => vec![p, q],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct FountainFlags {
    pub left_fountain: bool,
    pub right_fountain: bool,
}

impl FountainFlags {
    pub fn is_fountain(&self) -> bool {
        self.left_fountain && self.right_fountain
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Maximality {
    CertifiedMaximal,
    WindowVerified { window: Window },
    AddableArc { arc: FiniteArc },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum CrossCheck {
    NonCrossing,
    Crossing { first: Arc, second: Arc },
}

impl CrossCheck {
    fn pair(x: Arc, y: Arc) -> Self {
        CrossCheck::Crossing {
            first: x.min(y),
            second: x.max(y),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ArcConfiguration {
    pub generators: Vec<Generator>,
    #[serde(default)]
    pub infinite_arcs: Vec<i64>,
}

fn by_length(x: &FiniteArc) -> (i64, FiniteArc) {
    (x.len(), *x)
}

impl ArcConfiguration {
    pub fn new(generators: Vec<Generator>, infinite_arcs: Vec<i64>) -> Result<Self> {
        let c = ArcConfiguration {
            generators,
            infinite_arcs,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn fan(vertex: i64) -> Self {
        ArcConfiguration {
            generators: vec![Generator::Fan { vertex }],
            infinite_arcs: vec![],
        }
    }

    pub fn zigzag(center: i64) -> Self {
        ArcConfiguration {
            generators: vec![Generator::Zigzag { center }],
            infinite_arcs: vec![],
        }
    }

    pub fn split_fan(p: i64, q: i64) -> Result<Self> {
        ArcConfiguration::new(vec![Generator::SplitFan { p, q }], vec![])
    }

    pub fn explicit(arcs: Vec<FiniteArc>) -> Self {
        ArcConfiguration {
            generators: vec![Generator::Explicit { arcs }],
            infinite_arcs: vec![],
        }
    }

    pub fn with_infinite(mut self, m: i64) -> Self {
        self.infinite_arcs.push(m);
        self
    }

    pub fn validate(&self) -> Result<()> {
        for g in &self.generators {
            g.validate()?;
        }
        for &m in &self.infinite_arcs {
            check_range(m)?;
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let c: ArcConfiguration = serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        c.validate()?;
        Ok(c)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("configuration serializes")
    }

    pub fn explicit_arcs(&self) -> BTreeSet<FiniteArc> {
        self.generators
            .iter()
            .filter_map(|g| match g {
                Generator::Explicit { arcs } => Some(arcs.iter().copied()),
                _ => None,
            })
            .flatten()
            .collect()
    }

    /// The infinite generators, normalized and without repeats.
    pub fn spanning(&self) -> Vec<Generator> {
        let mut out: Vec<Generator> = Vec::new();
        for g in self.generators.iter().filter(|g| g.is_spanning()) {
            let g = g.normalized();
            if !out.contains(&g) {
                out.push(g);
            }
        }
        out
    }

    /// Endpoints of the infinite arcs, sorted and without repeats.
    pub fn infinite(&self) -> Vec<i64> {
        let set: BTreeSet<i64> = self.infinite_arcs.iter().copied().collect();
        set.into_iter().collect()
    }

    pub fn contains(&self, x: FiniteArc) -> bool {
        self.generators.iter().any(|g| g.contains(x))
    }

    fn covering(&self, w: Window) -> Window {
        self.generators.iter().fold(w, |acc, g| acc.hull(g.covering(w)))
    }

    /// Finite arcs of the configuration with both endpoints in `w`, sorted.
    pub fn finite_in_window(&self, w: Window) -> Vec<FiniteArc> {
        let set: BTreeSet<FiniteArc> = self.generators.iter().flat_map(|g| g.materialize(w)).collect();
        set.into_iter().collect()
    }

    /// All arcs with their endpoints in `w`: finite arcs first, then
    /// infinite ones, each in increasing order.
    pub fn materialize(&self, w: Window) -> Vec<Arc> {
        let mut out: Vec<Arc> = self.finite_in_window(w).into_iter().map(Arc::Finite).collect();
        out.extend(self.infinite().into_iter().filter(|&m| w.contains(m)).map(Arc::Infinite));
        out
    }

    /// Decides whether the full configuration is pairwise non-crossing.
    ///
    /// Checks run in a fixed order: explicit against explicit, distinct
    /// infinite generators against each other, explicit against infinite
    /// generators, finite arcs against infinite arcs. The first failing check
    /// supplies the witness; within a check the generator arc of least
    /// (length, a, b) is preferred. Two infinite arcs never count as crossing.
    pub fn noncrossing_check(&self) -> CrossCheck {
        let explicit: Vec<FiniteArc> = self.explicit_arcs().into_iter().collect();
        for (i, x) in explicit.iter().enumerate() {
            for y in &explicit[i + 1..] {
                if x.crosses(y) {
                    return CrossCheck::pair(Arc::Finite(*x), Arc::Finite(*y));
                }
            }
        }

        let spanning = self.spanning();
        if let [g, h, ..] = spanning.as_slice() {
            let (x, y) = spanning_crossing(g, h);
            return CrossCheck::pair(Arc::Finite(x), Arc::Finite(y));
        }

        for e in &explicit {
            let span = Window::new(e.a(), e.b()).expect("arc endpoints are ordered");
            for g in &spanning {
                let mut arcs = g.materialize(g.covering(span));
                arcs.sort_by_key(by_length);
                if let Some(x) = arcs.iter().find(|x| x.crosses(e)) {
                    return CrossCheck::pair(Arc::Finite(*e), Arc::Finite(*x));
                }
            }
        }

        for m in self.infinite() {
            let mut arcs: Vec<FiniteArc> = explicit.clone();
            let point = Window::new(m, m).expect("single point window");
            for g in &spanning {
                arcs.extend(g.materialize(g.covering(point)));
            }
            arcs.sort_by_key(by_length);
            if let Some(x) = arcs.iter().find(|x| x.straddles(m)) {
                return CrossCheck::pair(Arc::Finite(*x), Arc::Infinite(m));
            }
        }
        CrossCheck::NonCrossing
    }

    /// Left- and right-fountains, read off the generator structure.
    pub fn fountain_profile(&self) -> BTreeMap<i64, FountainFlags> {
        let mut out: BTreeMap<i64, FountainFlags> = BTreeMap::new();
        for g in &self.generators {
            let (p, q) = match *g {
                Generator::Fan { vertex } => (vertex, vertex),
                Generator::SplitFan { p, q } => (p, q),
                _ => continue,
            };
            out.entry(p).or_default().left_fountain = true;
            out.entry(q).or_default().right_fountain = true;
        }
        out
    }

    pub fn fountains(&self) -> Vec<i64> {
        self.fountain_profile()
            .into_iter()
            .filter(|(_, f)| f.is_fountain())
            .map(|(v, _)| v)
            .collect()
    }

    /// Fans and split fans have a vertex with infinitely many arcs; zigzags
    /// and explicit sets never do.
    pub fn is_locally_finite(&self) -> bool {
        !self
            .generators
            .iter()
            .any(|g| matches!(g, Generator::Fan { .. } | Generator::SplitFan { .. }))
    }

    /// The least arc (lexicographically) with endpoints in `w` that is not in
    /// the configuration and crosses none of its finite arcs.
    pub fn addable_in_window(&self, w: Window) -> Option<FiniteArc> {
        let arcs = self.finite_in_window(self.covering(w));
        arcs_in_window(w).find(|x| !self.contains(*x) && !arcs.iter().any(|y| y.crosses(x)))
    }

    /// Maximality of the finite part as a non-crossing set.
    ///
    /// A single infinite generator is maximal by construction; the claim is
    /// still re-checked on `w`. A finite set is never maximal, and the arc
    /// just past its rightmost endpoint is returned. Anything else is scanned
    /// on `w` only.
    pub fn maximality_check(&self, w: Window) -> Maximality {
        let spanning = self.spanning();
        let explicit = self.explicit_arcs();
        if spanning.is_empty() {
            let start = explicit.iter().map(|x| x.b()).max().unwrap_or(w.lo());
            return Maximality::AddableArc {
                arc: FiniteArc::raw(start, start + 2),
            };
        }
        if let Some(arc) = self.addable_in_window(w) {
            return Maximality::AddableArc { arc };
        }
        if spanning.len() == 1 && explicit.iter().all(|x| spanning[0].contains(*x)) {
            Maximality::CertifiedMaximal
        } else {
            Maximality::WindowVerified { window: w }
        }
    }

    /// A window around everything that anchors the configuration.
    pub fn natural_window(&self) -> Window {
        let mut points: Vec<i64> = self.generators.iter().flat_map(|g| g.anchors()).collect();
        points.extend(self.infinite_arcs.iter().copied());
        let lo = points.iter().copied().min().unwrap_or(0);
        let hi = points.iter().copied().max().unwrap_or(0);
        Window::new(lo, hi).expect("ordered").widened(8)
    }
}

/// A crossing pair between two distinct infinite generators.
///
/// Each generator is a maximal non-crossing set, so two different ones cannot
/// be non-crossing together; the search doubles its window until it sees the
/// crossing.
fn spanning_crossing(g: &Generator, h: &Generator) -> (FiniteArc, FiniteArc) {
    let anchors: Vec<i64> = g.anchors().into_iter().chain(h.anchors()).collect();
    let lo = *anchors.iter().min().expect("infinite generators have anchors");
    let hi = *anchors.iter().max().expect("infinite generators have anchors");
    let mut w = Window::new(lo, hi).expect("ordered").widened(4);
    loop {
        let mut xs = g.materialize(w);
        let mut ys = h.materialize(w);
        xs.sort_by_key(by_length);
        ys.sort_by_key(by_length);
        for x in &xs {
            if let Some(y) = ys.iter().find(|y| x.crosses(y)) {
                return (*x, *y);
            }
        }
        assert!(w.width() < 1 << 20, "distinct maximal generators {g:?} and {h:?} failed to cross");
        w = w.widened(w.width());
    }
}

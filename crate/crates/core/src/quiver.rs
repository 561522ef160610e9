//! Indecomposable objects in quiver coordinates and the Hom/Ext dimension
//! formulas.
//!
//! A finite indecomposable is written `Σ^s X_d` (`shift` = s, `index` = d);
//! a Prüfer object is written `E_n`. Every Hom space between two
//! indecomposables is zero or one dimensional, so the formulas below return a
//! [`HomDim`] carrying the value together with the clause that decided it.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_range, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FiniteInd {
    shift: i64,
    index: i64,
}

impl FiniteInd {
    pub fn new(shift: i64, index: i64) -> Result<Self> {
        if index < 0 {
            return Err(Error::NegativeIndex(index));
        }
        check_range(shift)?;
        check_range(index)?;
        Ok(FiniteInd { shift, index })
    }

    /// Constructor for internal use where the index is known to be valid.
    pub(crate) fn raw(shift: i64, index: i64) -> Self {
        debug_assert!(index >= 0);
        FiniteInd { shift, index }
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn index(&self) -> i64 {
        self.index
    }

    /// The base of the slice through this object: `Σ^s X_d` lies on the
    /// slice starting at `Σ^{s+d} X_0`.
    pub fn slice_start(&self) -> i64 {
        self.shift + self.index
    }

    /// `Σ^t` applied to this object.
    pub fn shifted(&self, t: i64) -> Self {
        FiniteInd {
            shift: self.shift + t,
            index: self.index,
        }
    }

    /// The `i`-th object `Σ^{n-i} X_i` of the slice starting at `Σ^n X_0`.
    pub fn on_slice(n: i64, i: i64) -> Self {
        FiniteInd::raw(n - i, i)
    }
}

impl fmt::Display for FiniteInd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Σ^{} X_{}", self.shift, self.index)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PruferInd {
    slot: i64,
}

impl PruferInd {
    pub fn new(slot: i64) -> Result<Self> {
        check_range(slot)?;
        Ok(PruferInd { slot })
    }

    pub(crate) fn raw(slot: i64) -> Self {
        PruferInd { slot }
    }

    pub fn slot(&self) -> i64 {
        self.slot
    }
}

impl fmt::Display for PruferInd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E_{}", self.slot)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum IndObject {
    Finite(FiniteInd),
    Prufer(PruferInd),
}

impl IndObject {
    pub fn finite(shift: i64, index: i64) -> Result<Self> {
        FiniteInd::new(shift, index).map(IndObject::Finite)
    }

    pub fn prufer(slot: i64) -> Result<Self> {
        PruferInd::new(slot).map(IndObject::Prufer)
    }

    pub fn as_finite(&self) -> Option<FiniteInd> {
        match self {
            IndObject::Finite(x) => Some(*x),
            IndObject::Prufer(_) => None,
        }
    }
}

impl From<FiniteInd> for IndObject {
    fn from(x: FiniteInd) -> Self {
        IndObject::Finite(x)
    }
}

impl From<PruferInd> for IndObject {
    fn from(x: PruferInd) -> Self {
        IndObject::Prufer(x)
    }
}

impl fmt::Display for IndObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndObject::Finite(x) => x.fmt(f),
            IndObject::Prufer(x) => x.fmt(f),
        }
    }
}

/// Parses `E_n`, `X_d`, `Σ^s X_d` or the ASCII spelling `S^s X_d`.
/// Whitespace and the underscores are optional.
impl FromStr for IndObject {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '_')
            .collect();
        let bad = || Error::Parse(format!("cannot read object from {s:?}"));
        let int = |t: &str| t.parse::<i64>().map_err(|_| bad());

        if let Some(rest) = compact.strip_prefix('E') {
            return IndObject::prufer(int(rest)?);
        }
        let (shift, rest) = if let Some(rest) = compact
            .strip_prefix("Σ^")
            .or_else(|| compact.strip_prefix("S^"))
        {
            let x = rest.find('X').ok_or_else(bad)?;
            (int(&rest[..x])?, &rest[x..])
        } else {
            (0, compact.as_str())
        };
        let index = rest.strip_prefix('X').ok_or_else(bad)?;
        IndObject::finite(shift, int(index)?)
    }
}

/// Which half of `H(Σ^r X_s)` a membership test refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegionPart {
    Minus,
    Plus,
    Either,
}

/// Membership of an object in `H^-` or `H^+`, with the parameters `(m, n)`
/// for which the object equals `Σ^{-n} X_{n-m-2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionWitness {
    pub part: RegionPart,
    pub m: i64,
    pub n: i64,
}

/// The rule that decided a Hom dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum HomClause {
    /// Finite to finite: nonzero iff the target lies in `H(Σ source)`.
    Region {
        center: FiniteInd,
        membership: Option<RegionWitness>,
    },
    /// Finite to `E_n`: nonzero iff the source lies in the wedge `W(Σ^n X_0)`.
    IntoPrufer { wedge_base: i64, j: i64 },
    /// `E_n` to finite: nonzero iff the target lies in `W(Σ^{n+2} X_0)`.
    OutOfPrufer { wedge_base: i64, j: i64 },
    /// `E_m` to `E_n`: nonzero iff `n <= m`.
    BetweenPrufer { source: i64, target: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomDim {
    pub value: u8,
    pub clause: HomClause,
}

impl HomDim {
    pub fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl fmt::Display for HomClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomClause::Region { center, membership } => match membership {
                Some(w) => {
                    let part = if w.part == RegionPart::Minus { "H^-" } else { "H^+" };
                    write!(f, "target in {part}({center}) with m={}, n={}", w.m, w.n)
                }
                None => write!(f, "target outside H({center})"),
            },
            HomClause::IntoPrufer { wedge_base, j } => {
                write!(f, "source vs wedge W(Σ^{wedge_base} X_0), j={j}")
            }
            HomClause::OutOfPrufer { wedge_base, j } => {
                write!(f, "target vs wedge W(Σ^{wedge_base} X_0), j={j}")
            }
            HomClause::BetweenPrufer { source, target } => {
                write!(f, "Prüfer order: E_{source} -> E_{target} nonzero iff {target} <= {source}")
            }
        }
    }
}

pub fn shift_object(x: IndObject, t: i64) -> IndObject {
    match x {
        IndObject::Finite(f) => IndObject::Finite(f.shifted(t)),
        IndObject::Prufer(p) => IndObject::Prufer(PruferInd::raw(p.slot + t)),
    }
}

/// Membership in the wedge `W(Σ^n X_0) = { Σ^{n-j} X_k : 0 <= j <= k }`.
pub fn wedge_contains(base: i64, obj: FiniteInd) -> bool {
    let j = base - obj.shift;
    0 <= j && j <= obj.index
}

/// Solves `obj = Σ^{-n} X_{n-m-2}` and tests the defining inequalities of
/// `H^-(center)` and `H^+(center)`.
#[allow(clippy::int_plus_one)]
pub fn h_region_witness(center: FiniteInd, obj: FiniteInd) -> Option<RegionWitness> {
    let (r, s) = (center.shift, center.index);
    let n = -obj.shift;
    let m = n - obj.index - 2;
    if m <= -r - s - 3 && -r - s - 1 <= n && n <= -r - 1 {
        Some(RegionWitness {
            part: RegionPart::Minus,
            m,
            n,
        })
    } else if -r - s - 1 <= m && m <= -r - 1 && -r + 1 <= n {
        Some(RegionWitness {
            part: RegionPart::Plus,
            m,
            n,
        })
    } else {
        None
    }
}

pub fn h_region_contains(center: FiniteInd, obj: FiniteInd, part: RegionPart) -> bool {
    match (h_region_witness(center, obj), part) {
        (None, _) => false,
        (Some(_), RegionPart::Either) => true,
        (Some(w), p) => w.part == p,
    }
}

pub fn hom_dim(a: IndObject, b: IndObject) -> HomDim {
    use IndObject::{Finite, Prufer};
    let (value, clause) = match (a, b) {
        (Finite(u), Finite(v)) => {
            let center = u.shifted(1);
            let membership = h_region_witness(center, v);
            (membership.is_some(), HomClause::Region { center, membership })
        }
        (Finite(y), Prufer(e)) => (
            wedge_contains(e.slot, y),
            HomClause::IntoPrufer {
                wedge_base: e.slot,
                j: e.slot - y.shift,
            },
        ),
        (Prufer(e), Finite(y)) => (
            wedge_contains(e.slot + 2, y),
            HomClause::OutOfPrufer {
                wedge_base: e.slot + 2,
                j: e.slot + 2 - y.shift,
            },
        ),
        (Prufer(m), Prufer(n)) => (
            n.slot <= m.slot,
            HomClause::BetweenPrufer {
                source: m.slot,
                target: n.slot,
            },
        ),
    };
    HomDim {
        value: u8::from(value),
        clause,
    }
}

/// `Ext^1(a, b) = Hom(a, Σ b)`.
pub fn ext_dim(a: IndObject, b: IndObject) -> HomDim {
    hom_dim(a, shift_object(b, 1))
}

pub fn finite_hom(u: FiniteInd, v: FiniteInd) -> bool {
    h_region_witness(u.shifted(1), v).is_some()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Composite {
    True,
    False,
    Indeterminate,
}

/// Whether the composite `u -> v -> w` of the (unique up to scalar) nonzero
/// maps is nonzero.
///
/// Only a sufficient condition is available: the composite is nonzero when
/// `v, w ∈ H^+(Σu)` and `w ∈ H^+(Σv)`. It is zero when `Hom(u, w) = 0`.
/// Everything else is reported as [`Composite::Indeterminate`].
pub fn composite_nonzero(u: FiniteInd, v: FiniteInd, w: FiniteInd) -> Result<Composite> {
    if !finite_hom(u, v) {
        return Err(Error::VanishingHom { from: u, to: v });
    }
    if !finite_hom(v, w) {
        return Err(Error::VanishingHom { from: v, to: w });
    }
    let su = u.shifted(1);
    let sv = v.shifted(1);
    if h_region_contains(su, v, RegionPart::Plus)
        && h_region_contains(su, w, RegionPart::Plus)
        && h_region_contains(sv, w, RegionPart::Plus)
    {
        Ok(Composite::True)
    } else if !finite_hom(u, w) {
        Ok(Composite::False)
    } else {
        Ok(Composite::Indeterminate)
    }
}

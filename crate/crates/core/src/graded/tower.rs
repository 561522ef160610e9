//! Truncated Hom towers along slices, and their colimits and limits.
//!
//! Every Hom space involved is zero or one dimensional, so a tower is fully
//! described by its dimensions and by whether each transition map is
//! nonzero.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{composite_nonzero, finite_hom, Composite, FiniteInd};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    Direct,
    Inverse,
}

/// Terms `0..=N` with the `N` transitions between consecutive terms. For a
/// direct tower transition `i` maps term `i` to term `i+1`; for an inverse
/// tower it maps term `i+1` to term `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomTower {
    dims: Vec<u8>,
    transition_nonzero: Vec<bool>,
    direction: Direction,
}

impl HomTower {
    pub fn new(dims: Vec<u8>, transition_nonzero: Vec<bool>, direction: Direction) -> Result<Self> {
        if dims.len() != transition_nonzero.len() + 1 {
            return Err(Error::InvalidTower(format!(
                "{} terms need {} transitions, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                transition_nonzero.len()
            )));
        }
        if let Some(d) = dims.iter().find(|&&d| d > 1) {
            return Err(Error::InvalidTower(format!("dimension {d} is not 0 or 1")));
        }
        for (i, &t) in transition_nonzero.iter().enumerate() {
            if t && (dims[i] == 0 || dims[i + 1] == 0) {
                return Err(Error::InvalidTower(format!("transition {i} is nonzero between a zero space")));
            }
        }
        Ok(HomTower {
            dims,
            transition_nonzero,
            direction,
        })
    }

    pub fn dims(&self) -> &[u8] {
        &self.dims
    }

    pub fn transition_nonzero(&self) -> &[bool] {
        &self.transition_nonzero
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// Number of transitions, i.e. the truncation `N`.
    pub fn truncation(&self) -> usize {
        self.transition_nonzero.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerLimit {
    pub value: u8,
    /// First index from which dimensions and transition flags are constant.
    pub stable_from: usize,
    /// Set for inverse towers once the tail maps are checked to be
    /// isomorphisms or zero; lim¹ of such a tower vanishes.
    pub lim1_vanishes: bool,
}

fn slice_object(n: i64, i: usize) -> FiniteInd {
    FiniteInd::on_slice(n, i as i64)
}

/// `dims[i] = Hom(Y, Σ^{n-i} X_i)`, with transition `i` marked nonzero when
/// the composite `Y -> Σ^{n-i} X_i -> Σ^{n-i-1} X_{i+1}` is certified nonzero.
pub fn build_hom_tower(y: FiniteInd, n: i64, truncation: usize) -> HomTower {
    let dims: Vec<u8> = (0..=truncation)
        .map(|i| u8::from(finite_hom(y, slice_object(n, i))))
        .collect();
    let flags = (0..truncation)
        .map(|i| {
            dims[i] == 1
                && dims[i + 1] == 1
                && composite_nonzero(y, slice_object(n, i), slice_object(n, i + 1)) == Ok(Composite::True)
        })
        .collect();
    HomTower::new(dims, flags, Direction::Direct).expect("flags only set between nonzero terms")
}

/// `dims[i] = Hom(Σ^{n-i} X_i, Y)`, the inverse system computing
/// `Hom(E_n, Y)`.
///
/// Transition `i` is precomposition with `Σ^{n-i} X_i -> Σ^{n-i-1} X_{i+1}`.
/// Under Serre duality it corresponds to the composite
/// `Σ^{-2} Y -> Σ^{n-i} X_i -> Σ^{n-i-1} X_{i+1}`, which is where the
/// composite criterion applies.
pub fn build_inverse_hom_tower(y: FiniteInd, n: i64, truncation: usize) -> HomTower {
    let dual = y.shifted(-2);
    let dims: Vec<u8> = (0..=truncation)
        .map(|i| u8::from(finite_hom(slice_object(n, i), y)))
        .collect();
    let flags = (0..truncation)
        .map(|i| {
            dims[i] == 1
                && dims[i + 1] == 1
                && composite_nonzero(dual, slice_object(n, i), slice_object(n, i + 1)) == Ok(Composite::True)
        })
        .collect();
    HomTower::new(dims, flags, Direction::Inverse).expect("flags only set between nonzero terms")
}

/// Reads the stable tail: the last `max(1, ceil(N/4))` terms and flags must
/// be constant. The value is 1 iff the tail terms are 1 and the tail maps
/// nonzero.
fn stable_value(t: &HomTower) -> Result<TowerLimit> {
    let n = t.truncation();
    let window = n.div_ceil(4).max(1);
    if n == 0 {
        return Err(Error::Unstable { len: t.dims.len(), window });
    }
    let dims = &t.dims;
    let flags = &t.transition_nonzero;
    let d = dims[dims.len() - 1];
    let fl = flags[n - 1];
    let tail_dims = &dims[dims.len() - window..];
    let tail_flags = &flags[n - window..];
    if tail_dims.iter().any(|&x| x != d) || tail_flags.iter().any(|&x| x != fl) {
        return Err(Error::Unstable { len: dims.len(), window });
    }
    let mut stable_from = n;
    while stable_from > 0 && dims[stable_from - 1] == d && flags[stable_from - 1] == fl {
        stable_from -= 1;
    }
    Ok(TowerLimit {
        value: u8::from(d == 1 && fl),
        stable_from,
        lim1_vanishes: false,
    })
}

pub fn truncated_colim(t: &HomTower) -> Result<TowerLimit> {
    if t.direction != Direction::Direct {
        return Err(Error::InvalidTower("colimit requested for an inverse tower".into()));
    }
    stable_value(t)
}

pub fn truncated_lim(t: &HomTower) -> Result<TowerLimit> {
    if t.direction != Direction::Inverse {
        return Err(Error::InvalidTower("limit requested for a direct tower".into()));
    }
    let mut lim = stable_value(t)?;
    // A tower of spaces of dimension at most one whose tail maps are all
    // isomorphisms (or whose tail is zero) satisfies Mittag-Leffler.
    let tail = &t.transition_nonzero[lim.stable_from.min(t.truncation())..];
    let tail_dims = &t.dims[lim.stable_from..];
    lim.lim1_vanishes = tail_dims.iter().all(|&d| d == 0) || tail.iter().all(|&f| f);
    Ok(lim)
}

/// `Hom(E_m, E_n)` as the limit over `j` of the colimits over `i` of
/// `Hom(Σ^{m-j} X_j, Σ^{n-i} X_i)`.
///
/// Outer terms run over `j = 0..=N`; each inner tower is truncated at `2N`
/// so that it still stabilizes at `j = N`. The outer transition `j` is
/// nonzero when both colimits are 1 and, on the stable tails, the composite
/// `Σ^{m-j} X_j -> Σ^{m-j-1} X_{j+1} -> Σ^{n-i} X_i` is certified nonzero.
pub fn prufer_prufer_tower(m: i64, n: i64, truncation: usize) -> Result<TowerLimit> {
    let inner = 2 * truncation;
    let outer: Vec<FiniteInd> = (0..=truncation).map(|j| slice_object(m, j)).collect();
    let limits = outer
        .iter()
        .map(|&u| truncated_colim(&build_hom_tower(u, n, inner)))
        .collect::<Result<Vec<_>>>()?;
    let dims: Vec<u8> = limits.iter().map(|l| l.value).collect();
    let flags = (0..truncation)
        .map(|j| {
            if dims[j] == 0 || dims[j + 1] == 0 {
                return false;
            }
            let from = limits[j].stable_from.max(limits[j + 1].stable_from);
            (from..=inner).all(|i| {
                composite_nonzero(outer[j], outer[j + 1], slice_object(n, i)) == Ok(Composite::True)
            })
        })
        .collect();
    truncated_lim(&HomTower::new(dims, flags, Direction::Inverse)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(s: i64, d: i64) -> FiniteInd {
        FiniteInd::new(s, d).unwrap()
    }

    fn tower(dims: &[u8], flags: &[bool], dir: Direction) -> HomTower {
        HomTower::new(dims.to_vec(), flags.to_vec(), dir).unwrap()
    }

    #[test]
    fn direct_examples() {
        let t = build_hom_tower(x(0, 0), 0, 4);
        assert_eq!(t.dims(), [1, 1, 1, 1, 1]);
        assert!(t.transition_nonzero().iter().all(|&f| f));
        let t = build_hom_tower(x(-1, 0), 0, 4);
        assert_eq!(t.dims(), [0, 0, 0, 0, 0]);
    }

    #[test]
    fn region_two_fixture() {
        // Σ^{-4} X_2 is the arc (0, 4): outside the wedge, finitely many ones.
        let t = build_hom_tower(x(-4, 2), 0, 8);
        assert_eq!(t.dims(), [1, 1, 1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(truncated_colim(&t).unwrap().value, 0);
    }

    #[test]
    fn colim_examples() {
        let ones = tower(&[1; 9], &[true; 8], Direction::Direct);
        assert_eq!(
            truncated_colim(&ones).unwrap(),
            TowerLimit {
                value: 1,
                stable_from: 0,
                lim1_vanishes: false
            }
        );
        let zeros = tower(&[0; 9], &[false; 8], Direction::Direct);
        assert_eq!(truncated_colim(&zeros).unwrap().value, 0);
        let mut dims = [0u8; 9];
        dims[0] = 1;
        let blip = tower(&dims, &[false; 8], Direction::Direct);
        let lim = truncated_colim(&blip).unwrap();
        assert_eq!((lim.value, lim.stable_from), (0, 1));
    }

    #[test]
    fn lim_examples() {
        let ones = tower(&[1; 9], &[true; 8], Direction::Inverse);
        let l = truncated_lim(&ones).unwrap();
        assert_eq!(l.value, 1);
        assert!(l.lim1_vanishes);
        assert_eq!(truncated_lim(&tower(&[0; 9], &[false; 8], Direction::Inverse)).unwrap().value, 0);
        let lead = tower(
            &[0, 0, 1, 1, 1, 1, 1, 1, 1],
            &[false, false, true, true, true, true, true, true],
            Direction::Inverse,
        );
        let l = truncated_lim(&lead).unwrap();
        assert_eq!((l.value, l.stable_from), (1, 2));
    }

    #[test]
    fn unstable_and_invalid() {
        let late = tower(&[0, 0, 0, 0, 0, 0, 0, 0, 1], &[false; 8], Direction::Direct);
        assert!(matches!(truncated_colim(&late), Err(Error::Unstable { .. })));
        let empty = tower(&[1], &[], Direction::Direct);
        assert!(matches!(truncated_colim(&empty), Err(Error::Unstable { .. })));
        assert!(HomTower::new(vec![0, 1], vec![true], Direction::Direct).is_err());
        assert!(HomTower::new(vec![0, 1], vec![], Direction::Direct).is_err());
        assert!(truncated_lim(&tower(&[1, 1], &[true], Direction::Direct)).is_err());
    }

    #[test]
    fn inverse_tower_matches_wedge() {
        // X_0 is the arc (-2, 0), which lies in W(Σ^0 X_0) = W(Σ^{n+2} X_0) for n = -2.
        let t = build_inverse_hom_tower(x(0, 0), -2, 20);
        assert_eq!(truncated_lim(&t).unwrap().value, 1);
        let t = build_inverse_hom_tower(x(0, 0), -1, 20);
        assert_eq!(truncated_lim(&t).unwrap().value, 0);
    }

    #[test]
    fn prufer_examples() {
        assert_eq!(prufer_prufer_tower(0, 0, 20).unwrap().value, 1);
        assert_eq!(prufer_prufer_tower(0, 1, 20).unwrap().value, 0);
        assert_eq!(prufer_prufer_tower(3, -2, 30).unwrap().value, 1);
    }
}

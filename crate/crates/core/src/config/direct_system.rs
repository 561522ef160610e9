//! Direct systems of irreducible maps in the quiver and their homotopy
//! colimits.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::FiniteInd;

/// An irreducible map out of `Σ^s X_d`. `Up` goes to `Σ^{s-1} X_{d+1}` and
/// stays on the slice; `Down` goes to `Σ^s X_{d-1}` and moves to the
/// previous slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Move {
    Up,
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Tail {
    /// Eventually runs up the slice starting at `Σ^n X_0`.
    RidesSliceFrom(i64),
    /// Keeps alternating between up and down moves.
    ZigzagsForever,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectSystem {
    pub start: Option<FiniteInd>,
    pub moves: Vec<Move>,
    pub tail: Tail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SystemLimit {
    PruferLimit(i64),
    ZeroLimit,
}

impl DirectSystem {
    /// Walks the prefix and returns the vertex it ends at.
    pub fn end(&self) -> Result<Option<FiniteInd>> {
        let Some(mut x) = self.start else {
            if self.moves.is_empty() {
                return Ok(None);
            }
            return Err(Error::MalformedSystem("moves given without a start vertex".into()));
        };
        for (step, m) in self.moves.iter().enumerate() {
            x = match m {
                Move::Up => FiniteInd::new(x.shift() - 1, x.index() + 1)?,
                Move::Down if x.index() == 0 => {
                    return Err(Error::MalformedSystem(format!(
                        "move {step} goes down from {x}, which has index 0"
                    )))
                }
                Move::Down => FiniteInd::new(x.shift(), x.index() - 1)?,
            };
        }
        Ok(Some(x))
    }
}

/// A system that eventually rides a slice has that slice's Prüfer object as
/// homotopy colimit whatever its prefix; one that zigzags forever has zero.
pub fn classify_direct_system(system: &DirectSystem) -> Result<SystemLimit> {
    let end = system.end()?;
    match system.tail {
        Tail::ZigzagsForever => Ok(SystemLimit::ZeroLimit),
        Tail::RidesSliceFrom(n) => {
            // Irreducible maps never raise the slice index s + d.
            if let Some(x) = end {
                if n > x.slice_start() {
                    return Err(Error::MalformedSystem(format!(
                        "cannot reach the slice from Σ^{n} X_0 starting at {x}, which lies on the slice from Σ^{} X_0",
                        x.slice_start()
                    )));
                }
            }
            Ok(SystemLimit::PruferLimit(n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(start: Option<(i64, i64)>, moves: &[Move], tail: Tail) -> DirectSystem {
        DirectSystem {
            start: start.map(|(s, d)| FiniteInd::new(s, d).unwrap()),
            moves: moves.to_vec(),
            tail,
        }
    }

    #[test]
    fn examples() {
        assert_eq!(
            classify_direct_system(&sys(None, &[], Tail::RidesSliceFrom(0))),
            Ok(SystemLimit::PruferLimit(0))
        );
        let prefix = [Move::Up, Move::Down, Move::Up, Move::Down, Move::Up];
        assert_eq!(
            classify_direct_system(&sys(Some((9, 0)), &prefix, Tail::RidesSliceFrom(7))),
            Ok(SystemLimit::PruferLimit(7))
        );
        assert_eq!(
            classify_direct_system(&sys(None, &[], Tail::ZigzagsForever)),
            Ok(SystemLimit::ZeroLimit)
        );
    }

    #[test]
    fn malformed() {
        assert!(classify_direct_system(&sys(Some((0, 0)), &[Move::Down], Tail::ZigzagsForever)).is_err());
        assert!(classify_direct_system(&sys(None, &[Move::Up], Tail::ZigzagsForever)).is_err());
        assert!(classify_direct_system(&sys(Some((0, 0)), &[], Tail::RidesSliceFrom(1))).is_err());
    }

    #[test]
    fn end_vertex() {
        let s = sys(Some((2, 1)), &[Move::Up, Move::Up, Move::Down], Tail::ZigzagsForever);
        assert_eq!(s.end().unwrap(), Some(FiniteInd::new(0, 2).unwrap()));
    }
}

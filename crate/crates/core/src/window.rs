use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_range, Error, Result};

/// A finite closed integer interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    lo: i64,
    hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        check_range(lo)?;
        check_range(hi)?;
        if lo > hi {
            return Err(Error::Parse(format!("empty window {lo}:{hi}")));
        }
        Ok(Window { lo, hi })
    }

    pub fn symmetric(w: i64) -> Self {
        Window { lo: -w.abs(), hi: w.abs() }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn contains(&self, x: i64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// Smallest window containing both.
    pub fn hull(&self, other: Window) -> Window {
        Window {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    pub fn including(&self, x: i64) -> Window {
        Window {
            lo: self.lo.min(x),
            hi: self.hi.max(x),
        }
    }

    pub fn widened(&self, by: i64) -> Window {
        Window {
            lo: self.lo - by,
            hi: self.hi + by,
        }
    }

    pub fn width(&self) -> i64 {
        self.hi - self.lo
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.lo, self.hi)
    }
}

impl FromStr for Window {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("cannot read window from {s:?}; expected LO:HI"));
        let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
        let lo = lo.trim().parse().map_err(|_| bad())?;
        let hi = hi.trim().parse().map_err(|_| bad())?;
        Window::new(lo, hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse() {
        assert_eq!("-5:5".parse::<Window>().unwrap(), Window::symmetric(5));
        assert!("5:-5".parse::<Window>().is_err());
        assert!("5".parse::<Window>().is_err());
    }

    #[test]
    fn hull_and_widen() {
        let w = Window::new(0, 3).unwrap();
        assert_eq!(w.including(-2), Window::new(-2, 3).unwrap());
        assert_eq!(w.widened(2), Window::new(-2, 5).unwrap());
        assert_eq!(w.hull(Window::new(5, 6).unwrap()), Window::new(0, 6).unwrap());
    }
}

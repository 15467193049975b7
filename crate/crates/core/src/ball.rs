use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// The indecomposable `[a,b]` of the linearly oriented quiver of type A,
/// drawn as one ball of the triangular ball structure.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Interval {
    pub a: usize,
    pub b: usize,
}

impl Interval {
    pub fn new(a: usize, b: usize) -> Self {
        Interval { a, b }
    }

    /// Fails unless `1 <= a <= b <= n - 1`.
    pub fn check(&self, n: usize) -> Result<()> {
        if 1 <= self.a && self.a <= self.b && self.b < n {
            Ok(())
        } else {
            Err(Error::BallOutOfRange {
                a: self.a,
                b: self.b,
                n,
            })
        }
    }

    pub fn len(&self) -> usize {
        self.b + 1 - self.a
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

pub type BallSet = BTreeSet<Interval>;

/// Every ball of ambient `n`: `(n - 1) n / 2` of them.
pub fn all_balls(n: usize) -> BallSet {
    let mut out = BallSet::new();
    for a in 1..n {
        for b in a..n {
            out.insert(Interval::new(a, b));
        }
    }
    out
}

pub(crate) fn check_balls(set: &BallSet, n: usize) -> Result<()> {
    set.iter().try_for_each(|x| x.check(n))
}

/// Torsion class and torsion-free class on the ball structure of ambient `n`.
/// Balls may belong to neither.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TorsionPair {
    n: usize,
    torsion: BallSet,
    free: BallSet,
}

impl TorsionPair {
    /// Checks both perpendicularity conditions.
    pub fn new(n: usize, torsion: BallSet, free: BallSet) -> Result<Self> {
        check_balls(&torsion, n)?;
        check_balls(&free, n)?;
        let pair = TorsionPair { n, torsion, free };
        if crate::torsion::is_torsion_pair(&pair) {
            Ok(pair)
        } else {
            Err(Error::NotTorsionPair)
        }
    }

    pub(crate) fn new_unchecked(n: usize, torsion: BallSet, free: BallSet) -> Self {
        TorsionPair { n, torsion, free }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn torsion(&self) -> &BallSet {
        &self.torsion
    }

    pub fn free(&self) -> &BallSet {
        &self.free
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ball_counts() {
        assert_eq!(all_balls(1).len(), 0);
        assert_eq!(
            all_balls(2).into_iter().collect::<Vec<_>>(),
            [Interval::new(1, 1)]
        );
        assert_eq!(all_balls(4).len(), 6);
        assert_eq!(all_balls(6).len(), 15);
        for n in 1..10 {
            assert_eq!(all_balls(n).len(), (n - 1) * n / 2);
        }
    }

    #[test]
    fn range_check() {
        assert!(Interval::new(1, 3).check(4).is_ok());
        assert!(Interval::new(1, 4).check(4).is_err());
        assert!(Interval::new(0, 1).check(4).is_err());
        assert!(Interval::new(3, 2).check(4).is_err());
    }
}

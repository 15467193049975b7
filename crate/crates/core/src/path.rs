use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Step {
    U,
    R,
}

/// Staircase walk from (0,0) to (n,n) that never drops below the diagonal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0i64;
        for (i, s) in steps.iter().enumerate() {
            height += if *s == Step::U { 1 } else { -1 };
            if height < 0 {
                return Err(Error::InvalidDyck(format!(
                    "drops below the diagonal at step {}",
                    i + 1
                )));
            }
        }
        if height != 0 {
            return Err(Error::InvalidDyck("unequal numbers of U and R".into()));
        }
        Ok(DyckPath { steps })
    }

    pub fn empty() -> Self {
        DyckPath { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Cells of the n×n square below the path.
    pub fn area_below(&self) -> usize {
        let mut ups = 0;
        let mut area = 0;
        for s in &self.steps {
            match s {
                Step::U => ups += 1,
                Step::R => area += ups,
            }
        }
        area
    }

    /// The 0/1 word used in drawings: 1 = U, 0 = R.
    pub fn bits(&self) -> Vec<u8> {
        self.steps.iter().map(|s| u8::from(*s == Step::U)).collect()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(if *s == Step::U { "U" } else { "R" })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'U' | 'u' | '1' => Ok(Step::U),
                'R' | 'r' | '0' => Ok(Step::R),
                other => Err(Error::InvalidDyck(format!(
                    "unexpected character {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

/// All paths of semilength `n`, lexicographic with U before R.
pub fn enumerate_dyck(n: usize) -> Vec<DyckPath> {
    fn go(up: usize, right: usize, n: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if right == n {
            out.push(DyckPath { steps: cur.clone() });
            return;
        }
        if up < n {
            cur.push(Step::U);
            go(up + 1, right, n, cur, out);
            cur.pop();
        }
        if right < up {
            cur.push(Step::R);
            go(up, right + 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, 0, n, &mut Vec::with_capacity(2 * n), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_validate() {
        let p: DyckPath = "UURRUR".parse().unwrap();
        assert_eq!(p.semilength(), 3);
        assert_eq!(p.bits(), [1, 1, 0, 0, 1, 0]);
        assert_eq!("110010".parse::<DyckPath>().unwrap(), p);
        assert!("RU".parse::<DyckPath>().is_err());
        assert!("UUR".parse::<DyckPath>().is_err());
        assert!("UXR".parse::<DyckPath>().is_err());
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_dyck(0), vec![DyckPath::empty()]);
        assert_eq!(enumerate_dyck(1)[0].to_string(), "UR");
        let three: Vec<String> = enumerate_dyck(3).iter().map(|p| p.to_string()).collect();
        assert_eq!(three, ["UUURRR", "UURURR", "UURRUR", "URUURR", "URURUR"]);
        let counts: Vec<usize> = (0..9).map(|n| enumerate_dyck(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 5, 14, 42, 132, 429, 1430]);
    }

    #[test]
    fn area() {
        assert_eq!("UUURRR".parse::<DyckPath>().unwrap().area_below(), 9);
        assert_eq!("URURUR".parse::<DyckPath>().unwrap().area_below(), 6);
    }
}

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A partition that fits the staircase of ambient `n`: `rows[i-1] + i <= n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct YoungDiagram {
    n: usize,
    rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(n: usize, rows: Vec<usize>) -> Result<Self> {
        check_partition(&rows)?;
        check_staircase(&rows, n)?;
        Ok(YoungDiagram { n, rows })
    }

    pub fn empty(n: usize) -> Self {
        YoungDiagram {
            n,
            rows: Vec::new(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Row length, zero past the last row. Rows are numbered from 1.
    pub fn row(&self, i: usize) -> usize {
        self.rows.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn cells(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Column heights, left to right.
    pub fn conjugate(&self) -> Vec<usize> {
        let width = self.rows.first().copied().unwrap_or(0);
        (1..=width)
            .map(|c| self.rows.iter().filter(|&&r| r >= c).count())
            .collect()
    }

    /// Same shape in another ambient.
    pub fn with_ambient(&self, n: usize) -> Result<Self> {
        YoungDiagram::new(n, self.rows.clone())
    }
}

pub(crate) fn check_partition(rows: &[usize]) -> Result<()> {
    let ok = rows.iter().all(|&r| r > 0) && rows.windows(2).all(|w| w[0] >= w[1]);
    if ok {
        Ok(())
    } else {
        Err(Error::NotPartition(rows.to_vec()))
    }
}

pub(crate) fn check_staircase(rows: &[usize], n: usize) -> Result<()> {
    for (i, &len) in rows.iter().enumerate() {
        if len + i + 1 > n {
            return Err(Error::Staircase { row: i + 1, len, n });
        }
    }
    Ok(())
}

/// All staircase partitions of ambient `n`, lexicographic on rows.
pub fn enumerate_young(n: usize) -> Vec<YoungDiagram> {
    fn go(n: usize, rows: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
        out.push(YoungDiagram {
            n,
            rows: rows.clone(),
        });
        let i = rows.len() + 1;
        let cap = rows
            .last()
            .copied()
            .unwrap_or(usize::MAX)
            .min(n.saturating_sub(i));
        for v in 1..=cap {
            rows.push(v);
            go(n, rows, out);
            rows.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

/// Boxes in the tilted frame: `(row, col)` with `row >= 1`, rows counted down
/// from the ceiling, `col` the strip between leaves `col` and `col + 1`.
///
/// Every column is a contiguous run hanging from row 1. Rows may have holes.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GappedYoungDiagram {
    n: usize,
    boxes: BTreeSet<(usize, usize)>,
}

impl GappedYoungDiagram {
    pub fn new(n: usize, boxes: BTreeSet<(usize, usize)>) -> Result<Self> {
        for &(r, c) in &boxes {
            if r == 0 || r + c >= n {
                return Err(Error::InvalidGapped(format!(
                    "box ({r},{c}) outside ambient {n}"
                )));
            }
            if r > 1 && !boxes.contains(&(r - 1, c)) {
                return Err(Error::InvalidGapped(format!(
                    "box ({r},{c}) hangs below a hole"
                )));
            }
        }
        Ok(GappedYoungDiagram { n, boxes })
    }

    /// Builds column `c` of height `heights[c]`.
    pub fn from_heights(n: usize, heights: &[usize]) -> Result<Self> {
        let boxes = heights
            .iter()
            .enumerate()
            .flat_map(|(c, &h)| (1..=h).map(move |r| (r, c)))
            .collect();
        GappedYoungDiagram::new(n, boxes)
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn boxes(&self) -> &BTreeSet<(usize, usize)> {
        &self.boxes
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    /// One entry per strip, `n` in all.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0; self.n];
        for &(_, c) in &self.boxes {
            h[c] += 1;
        }
        h
    }

    /// The boxes of each row, top to bottom.
    pub fn row_lengths(&self) -> Vec<usize> {
        let mut lens = Vec::new();
        for &(r, _) in &self.boxes {
            if lens.len() < r {
                lens.resize(r, 0);
            }
            lens[r - 1] += 1;
        }
        lens
    }
}

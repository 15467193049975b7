//! Trees to staircase partitions by stacking boxes on shelves.

use crate::error::{Error, Result};
use crate::tree::{BinaryTree, TreeCoordinate};
use crate::young::{check_staircase, GappedYoungDiagram, YoungDiagram};

/// A descending branch other than the ceiling. Runs along row `start.x` from
/// column `start.y` to `end.y`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Shelf {
    pub start: TreeCoordinate,
    pub end: TreeCoordinate,
    pub length: usize,
}

/// The shelves of `t`, top to bottom and then left to right.
///
/// Each internal node that is a left child starts one: its descending branch
/// runs to its rightmost leaf.
pub fn shelves(t: &BinaryTree) -> Vec<Shelf> {
    let n = t.size();
    let mut out: Vec<Shelf> = t
        .spans()
        .into_iter()
        .filter(|s| s.left_child)
        .map(|s| Shelf {
            start: TreeCoordinate::new(n - s.hi, s.lo),
            end: TreeCoordinate::new(n - s.hi, s.hi),
            length: s.size(),
        })
        .collect();
    out.sort_by_key(|s| (s.start.x, s.start.y));
    out
}

/// Boxes above every shelf, stacked up to the ceiling.
///
/// Column `c` is filled from row 1 down to the lowest shelf passing over it.
pub fn bookshelf_gapped(t: &BinaryTree) -> GappedYoungDiagram {
    let n = t.size();
    let mut heights = vec![0; n];
    for s in shelves(t) {
        for h in &mut heights[s.start.y..s.end.y] {
            *h = (*h).max(s.start.x);
        }
    }
    GappedYoungDiagram::from_heights(n, &heights).expect("shelves stay inside the staircase")
}

/// Recovers the tree whose gapped diagram is `g`.
pub fn gapped_to_tree(g: &GappedYoungDiagram) -> Result<BinaryTree> {
    fn go(h: &[usize]) -> Result<BinaryTree> {
        let n = h.len();
        if n == 0 {
            return Ok(BinaryTree::leaf());
        }
        let a = h
            .iter()
            .position(|&x| x == 0)
            .ok_or_else(|| Error::InvalidGapped("no strip reaches the ceiling".into()))?;
        let lift = n - a;
        let mut left = Vec::with_capacity(a);
        for &x in &h[..a] {
            if x < lift {
                return Err(Error::InvalidGapped(format!(
                    "column height {x} stops above row {lift}"
                )));
            }
            left.push(x - lift);
        }
        Ok(BinaryTree::node(go(&left)?, go(&h[a + 1..])?))
    }
    go(&g.heights())
}

/// Left-justifies every row.
///
/// Fails when `g` is not the gapped diagram of any tree.
pub fn push_gaps(g: &GappedYoungDiagram) -> Result<YoungDiagram> {
    gapped_to_tree(g)?;
    Ok(push_unchecked(g))
}

fn push_unchecked(g: &GappedYoungDiagram) -> YoungDiagram {
    YoungDiagram::new(g.ambient(), g.row_lengths()).expect("shelf rows shrink downward")
}

pub fn bookshelf(t: &BinaryTree) -> YoungDiagram {
    push_unchecked(&bookshelf_gapped(t))
}

/// Lower bound on the leaf count of a tree carrying `y`:
/// `max(λ'_1 + k + 1, λ_1 + m + 1)` with `k` the number of full-height columns
/// and `m` the number of full-length rows. The empty diagram needs one leaf.
pub fn min_tree_size(y: &YoungDiagram) -> usize {
    let rows = y.rows();
    let (Some(&first), Some(&last)) = (rows.first(), rows.last()) else {
        return 1;
    };
    let tallest = rows.len();
    let full_columns = last;
    let full_rows = rows.iter().take_while(|&&r| r == first).count();
    (tallest + full_columns + 1).max(first + full_rows + 1)
}

/// The size-`n` tree whose bookshelf diagram is `y`.
///
/// Row `r` is the first row touching the staircase (`λ_r + r = n`). Everything
/// below it is the left subtree's diagram, the boxes right of the `λ_r`-wide
/// block above it are the right subtree's.
pub fn inverse_bookshelf(y: &YoungDiagram, n: usize) -> Result<BinaryTree> {
    check_staircase(y.rows(), n)?;
    let needed = min_tree_size(y);
    if n + 1 < needed {
        return Err(Error::AmbientTooSmall { needed, n });
    }
    Ok(split(y.rows(), n))
}

fn split(rows: &[usize], n: usize) -> BinaryTree {
    if n == 0 {
        return BinaryTree::leaf();
    }
    let row = |i: usize| rows.get(i - 1).copied().unwrap_or(0);
    let r = (1..=n)
        .find(|&i| row(i) + i == n)
        .expect("row n always touches");
    let a = n - r;
    let b = r - 1;
    let below = rows.get(r..).unwrap_or(&[]);
    let right: Vec<usize> = rows[..b.min(rows.len())]
        .iter()
        .map(|&l| l - a)
        .filter(|&l| l > 0)
        .collect();
    match (a, b) {
        (0, 0) => BinaryTree::node(BinaryTree::leaf(), BinaryTree::leaf()),
        // no boxes at all in the top block's width: a bare left leaf
        (0, _) => BinaryTree::node(BinaryTree::leaf(), split(&right, b)),
        // the touching row is the top one, nothing hangs right of the block
        (_, 0) => BinaryTree::node(split(below, a), BinaryTree::leaf()),
        _ => BinaryTree::node(split(below, a), split(&right, b)),
    }
}

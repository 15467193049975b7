use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A full binary tree: every internal node has exactly two children.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

use BinaryTree::{Leaf, Node};

impl BinaryTree {
    pub fn leaf() -> Self {
        Leaf
    }

    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        Node(Box::new(left), Box::new(right))
    }

    /// Number of internal nodes.
    pub fn size(&self) -> usize {
        match self {
            Leaf => 0,
            Node(l, r) => 1 + l.size() + r.size(),
        }
    }

    pub fn leaves(&self) -> usize {
        self.size() + 1
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Leaf)
    }

    pub fn children(&self) -> Option<(&BinaryTree, &BinaryTree)> {
        match self {
            Leaf => None,
            Node(l, r) => Some((l, r)),
        }
    }

    /// `((••)•)•…`, the bottom of the Tamari order.
    pub fn left_comb(n: usize) -> Self {
        (0..n).fold(Leaf, |t, _| BinaryTree::node(t, Leaf))
    }

    /// `•(•(••…))`, the top of the Tamari order.
    pub fn right_comb(n: usize) -> Self {
        (0..n).fold(Leaf, |t, _| BinaryTree::node(Leaf, t))
    }

    /// Internal nodes in preorder, each with the range of leaves it spans.
    pub fn spans(&self) -> Vec<Span> {
        fn go(t: &BinaryTree, lo: usize, left_child: bool, out: &mut Vec<Span>) -> usize {
            match t {
                Leaf => lo,
                Node(l, r) => {
                    let idx = out.len();
                    out.push(Span {
                        lo,
                        split: 0,
                        hi: 0,
                        left_child,
                    });
                    let split = go(l, lo, true, out);
                    let hi = go(r, split + 1, false, out);
                    out[idx].split = split;
                    out[idx].hi = hi;
                    hi
                }
            }
        }
        let mut out = Vec::with_capacity(self.size());
        go(self, 0, false, &mut out);
        out
    }
}

/// An internal node seen through its leaves: it spans leaves `lo..=hi`, its
/// left subtree spans `lo..=split` and its right subtree `split+1..=hi`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Span {
    pub lo: usize,
    pub split: usize,
    pub hi: usize,
    pub left_child: bool,
}

impl Span {
    pub fn size(&self) -> usize {
        self.hi - self.lo
    }
}

/// Position in the aligned drawing. `x` counts steps along the left root axis,
/// `y` along the right one.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TreeCoordinate {
    pub x: usize,
    pub y: usize,
}

impl TreeCoordinate {
    pub fn new(x: usize, y: usize) -> Self {
        TreeCoordinate { x, y }
    }

    pub fn level(&self) -> usize {
        self.x + self.y + 1
    }
}

impl fmt::Display for TreeCoordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A vertex of a tree together with where it is drawn.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PlacedNode {
    /// Leaves spanned, inclusive; a leaf spans itself.
    pub lo: usize,
    pub hi: usize,
    pub internal: bool,
    pub coord: TreeCoordinate,
}

/// Coordinates of every vertex, preorder.
///
/// All leaves sit on the bottom level. Walking one lattice step down-left adds
/// one to `x`, one step down-right adds one to `y`, so a vertex spanning leaves
/// `i..=j` of a size-`n` tree lands at `(n - j, i)`.
pub fn node_coordinates(t: &BinaryTree) -> Vec<PlacedNode> {
    fn go(t: &BinaryTree, lo: usize, n: usize, out: &mut Vec<PlacedNode>) -> usize {
        match t {
            Leaf => {
                out.push(PlacedNode {
                    lo,
                    hi: lo,
                    internal: false,
                    coord: TreeCoordinate::new(n - lo, lo),
                });
                lo
            }
            Node(l, r) => {
                let idx = out.len();
                out.push(PlacedNode {
                    lo,
                    hi: lo,
                    internal: true,
                    coord: TreeCoordinate::new(0, 0),
                });
                let split = go(l, lo, n, out);
                let hi = go(r, split + 1, n, out);
                out[idx].hi = hi;
                out[idx].coord = TreeCoordinate::new(n - hi, lo);
                hi
            }
        }
    }
    let mut out = Vec::with_capacity(2 * t.size() + 1);
    go(t, 0, t.size(), &mut out);
    out
}

/// All trees with `n` internal nodes. Left subtree sizes ascend; within one
/// split the order is lexicographic in (left, right).
pub fn enumerate_trees(n: usize) -> Vec<BinaryTree> {
    let mut by_size: Vec<Vec<BinaryTree>> = vec![vec![Leaf]];
    for m in 1..=n {
        let mut here = Vec::new();
        for i in 0..m {
            for l in &by_size[i] {
                for r in &by_size[m - 1 - i] {
                    here.push(BinaryTree::node(l.clone(), r.clone()));
                }
            }
        }
        by_size.push(here);
    }
    by_size.pop().unwrap()
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Leaf => f.write_str("•"),
            Node(l, r) => write!(f, "({l}{r})"),
        }
    }
}

fn is_leaf_char(c: char) -> bool {
    matches!(c, '•' | '.' | '*')
}

/// Parses `•` (also `.` or `*`) and `(L R)`. Whitespace is ignored, and the
/// outermost pair of parentheses may be dropped as in `(••)•`.
impl FromStr for BinaryTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let toks: Vec<(usize, char)> = s
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        let mut p = Parser {
            toks: &toks,
            pos: 0,
            end: s.len(),
        };
        let first = p.term()?;
        let t = if p.pos < toks.len() {
            let second = p.term()?;
            BinaryTree::node(first, second)
        } else {
            first
        };
        if p.pos < toks.len() {
            return Err(p.fail("trailing input"));
        }
        Ok(t)
    }
}

struct Parser<'a> {
    toks: &'a [(usize, char)],
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn fail(&self, reason: &str) -> Error {
        let offset = self.toks.get(self.pos).map_or(self.end, |t| t.0);
        Error::TreeSyntax {
            offset,
            reason: reason.to_string(),
        }
    }

    fn term(&mut self) -> Result<BinaryTree> {
        match self.toks.get(self.pos).map(|t| t.1) {
            Some(c) if is_leaf_char(c) => {
                self.pos += 1;
                Ok(Leaf)
            }
            Some('(') => {
                self.pos += 1;
                let l = self.term()?;
                let r = self.term()?;
                match self.toks.get(self.pos).map(|t| t.1) {
                    Some(')') => {
                        self.pos += 1;
                        Ok(BinaryTree::node(l, r))
                    }
                    _ => Err(self.fail("expected ')' after two subterms")),
                }
            }
            Some(_) => Err(self.fail("expected a leaf or '('")),
            None => Err(self.fail("unexpected end of input")),
        }
    }
}

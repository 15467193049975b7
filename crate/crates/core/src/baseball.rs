//! 213-avoiding permutations against trees, through wire diagrams.

use std::collections::BTreeMap;

use crate::ball::{all_balls, BallSet, Interval};
use crate::error::Result;
use crate::perm::Permutation213;
use crate::torsion::{torsion_to_tree, tree_to_torsion};
use crate::tree::BinaryTree;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum BallKind {
    /// Sits right above a descending edge: both wires bounce back.
    Baseball,
    /// Anything else: the wires cross.
    Crossball,
}

/// Kind of every ball in the triangle of `t`.
pub fn classify_balls(t: &BinaryTree) -> BTreeMap<Interval, BallKind> {
    let pair = tree_to_torsion(t);
    all_balls(t.size())
        .into_iter()
        .map(|x| {
            let kind = if pair.torsion().contains(&x) {
                BallKind::Baseball
            } else {
                BallKind::Crossball
            };
            (x, kind)
        })
        .collect()
}

/// Root's right subtree from the values before the minimum, left subtree
/// from the values after it.
pub fn perm_to_tree(p: &Permutation213) -> BinaryTree {
    split_at_min(p.values())
}

fn split_at_min(p: &[usize]) -> BinaryTree {
    let Some(pos) = p.iter().enumerate().min_by_key(|e| e.1).map(|e| e.0) else {
        return BinaryTree::leaf();
    };
    let before = standardize(&p[..pos]);
    let after = standardize(&p[pos + 1..]);
    BinaryTree::node(split_at_min(&after), split_at_min(&before))
}

fn standardize(p: &[usize]) -> Vec<usize> {
    let mut sorted = p.to_vec();
    sorted.sort_unstable();
    p.iter()
        .map(|v| sorted.binary_search(v).unwrap() + 1)
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Port {
    NorthEast,
    SouthEast,
}

/// How a wire goes through one ball.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Passage {
    /// In at the north-east port, back out at the north-west one.
    Over,
    /// In at the south-east port, back out at the south-west one.
    Under,
    /// Straight through, crossing the other wire.
    Across,
}

/// One wire: the right-edge label it starts from, the balls it meets, and the
/// left-edge slot (from 1 at the apex) where it ends.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WireRoute {
    pub label: usize,
    pub balls: Vec<(Interval, Passage)>,
    pub exit: usize,
}

/// Traces every wire of the diagram of `t`.
///
/// Wire `i` enters at the north-east port of `[i, n-1]` on the right edge,
/// wire `n` through the arc under `[n-1, n-1]`. Leaving a ball to the north-west
/// climbs to the next ball up-left or exits on the left edge; leaving to the
/// south-west drops to the next ball down-left, or along the bottom arc into
/// the neighbouring bottom ball.
pub fn wire_routes(t: &BinaryTree) -> Vec<WireRoute> {
    let n = t.size();
    if n <= 1 {
        return (1..=n)
            .map(|label| WireRoute {
                label,
                balls: Vec::new(),
                exit: label,
            })
            .collect();
    }
    let torsion = tree_to_torsion(t).torsion().clone();
    (1..=n)
        .map(|label| {
            let (mut a, mut b, mut port) = if label < n {
                (label, n - 1, Port::NorthEast)
            } else {
                (n - 1, n - 1, Port::SouthEast)
            };
            let mut balls = Vec::new();
            let exit = loop {
                let here = Interval::new(a, b);
                let bounce = torsion.contains(&here);
                let up = (port == Port::NorthEast) == bounce;
                let passage = match (bounce, port) {
                    (false, _) => Passage::Across,
                    (true, Port::NorthEast) => Passage::Over,
                    (true, Port::SouthEast) => Passage::Under,
                };
                balls.push((here, passage));
                if up {
                    if a == 1 {
                        break n - b;
                    }
                    a -= 1;
                    port = Port::SouthEast;
                } else if b > a {
                    b -= 1;
                    port = Port::NorthEast;
                } else if a > 1 {
                    a -= 1;
                    b -= 1;
                    port = Port::SouthEast;
                } else {
                    break n;
                }
            };
            WireRoute { label, balls, exit }
        })
        .collect()
}

/// Left-edge labels of the wire diagram, read from the apex down.
pub fn tree_to_perm(t: &BinaryTree) -> Permutation213 {
    let routes = wire_routes(t);
    let mut left = vec![0; routes.len()];
    for r in &routes {
        left[r.exit - 1] = r.label;
    }
    Permutation213::new_unchecked(left)
}

pub fn torsion_to_perm(g: &BallSet, n: usize) -> Result<Permutation213> {
    Ok(tree_to_perm(&torsion_to_tree(g, n)?))
}

pub fn perm_to_torsion(p: &Permutation213) -> BallSet {
    tree_to_torsion(&perm_to_tree(p)).torsion().clone()
}

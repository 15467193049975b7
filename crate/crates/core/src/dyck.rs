//! Dyck paths against trees and against staircase partitions.

use crate::path::{DyckPath, Step};
use crate::tree::BinaryTree;
use crate::young::YoungDiagram;

/// `Leaf ↦ ε`, `(X Y) ↦ F(X) U F(Y) R`.
pub fn tree_to_dyck(t: &BinaryTree) -> DyckPath {
    fn go(t: &BinaryTree, out: &mut Vec<Step>) {
        if let Some((l, r)) = t.children() {
            go(l, out);
            out.push(Step::U);
            go(r, out);
            out.push(Step::R);
        }
    }
    let mut steps = Vec::with_capacity(2 * t.size());
    go(t, &mut steps);
    DyckPath::new(steps).expect("tree words are balanced")
}

pub fn dyck_to_tree(p: &DyckPath) -> BinaryTree {
    let mut pending = Vec::new();
    let mut cur = BinaryTree::leaf();
    for s in p.steps() {
        match s {
            Step::U => pending.push(std::mem::replace(&mut cur, BinaryTree::leaf())),
            Step::R => {
                let left = pending.pop().expect("validated path");
                cur = BinaryTree::node(left, cur);
            }
        }
    }
    cur
}

/// Row `i` (from the top) counts the R steps taken before the
/// `(n - i + 1)`-th U, i.e. the cells left of the path in that row.
pub fn dyck_to_young(p: &DyckPath) -> YoungDiagram {
    let n = p.semilength();
    let mut before_up = Vec::with_capacity(n);
    let mut rights = 0;
    for s in p.steps() {
        match s {
            Step::U => before_up.push(rights),
            Step::R => rights += 1,
        }
    }
    let rows: Vec<usize> = before_up.into_iter().rev().take_while(|&r| r > 0).collect();
    YoungDiagram::new(n, rows).expect("complement of a Dyck path fits the staircase")
}

pub fn young_to_dyck(y: &YoungDiagram) -> DyckPath {
    let n = y.ambient();
    let mut steps = Vec::with_capacity(2 * n);
    let mut rights = 0;
    for k in 1..=n {
        let want = y.row(n - k + 1);
        while rights < want {
            steps.push(Step::R);
            rights += 1;
        }
        steps.push(Step::U);
    }
    steps.extend(std::iter::repeat_n(Step::R, n - rights));
    DyckPath::new(steps).expect("staircase partitions give Dyck paths")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::enumerate_dyck;
    use crate::tree::enumerate_trees;
    use crate::young::enumerate_young;

    fn t(s: &str) -> BinaryTree {
        s.parse().unwrap()
    }

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn known_pairs() {
        assert_eq!(tree_to_dyck(&t("•(•(••))")), p("111000"));
        assert_eq!(tree_to_dyck(&t("(•(••))•")), p("110010"));
        assert_eq!(tree_to_dyck(&t("((••)•)•")), p("101010"));
        assert_eq!(tree_to_dyck(&t("(••)((••)•)")), p("10110100"));
        assert_eq!(tree_to_dyck(&BinaryTree::leaf()), DyckPath::empty());
    }

    #[test]
    fn partitions_of_paths() {
        assert_eq!(dyck_to_young(&p("UURRUR")).rows(), [2]);
        assert_eq!(dyck_to_young(&p("URURUR")).rows(), [2, 1]);
        assert_eq!(dyck_to_young(&p("URUURURR")).rows(), [2, 1, 1]);
        assert_eq!(young_to_dyck(&YoungDiagram::empty(3)), p("UUURRR"));
        assert_eq!(
            young_to_dyck(&YoungDiagram::new(3, vec![2, 1]).unwrap()),
            p("URURUR")
        );
    }

    #[test]
    fn round_trips() {
        for n in 0..8 {
            for tree in enumerate_trees(n) {
                assert_eq!(dyck_to_tree(&tree_to_dyck(&tree)), tree);
            }
            for path in enumerate_dyck(n) {
                assert_eq!(tree_to_dyck(&dyck_to_tree(&path)), path);
                assert_eq!(young_to_dyck(&dyck_to_young(&path)), path);
            }
            for y in enumerate_young(n) {
                assert_eq!(dyck_to_young(&young_to_dyck(&y)), y);
            }
        }
    }

    #[test]
    fn cells_complement_area() {
        for n in 0..8 {
            for path in enumerate_dyck(n) {
                assert_eq!(dyck_to_young(&path).cells(), n * n - path.area_below());
            }
            let zigzag: String = "UR".repeat(n);
            let full: Vec<usize> = (1..n).rev().collect();
            assert_eq!(dyck_to_young(&p(&zigzag)).rows(), full.as_slice());
        }
    }

    #[test]
    fn combs_hit_extreme_paths() {
        for n in 1..8 {
            assert_eq!(
                tree_to_dyck(&BinaryTree::right_comb(n)).to_string(),
                "U".repeat(n) + &"R".repeat(n)
            );
            assert_eq!(
                tree_to_dyck(&BinaryTree::left_comb(n)).to_string(),
                "UR".repeat(n)
            );
        }
    }
}

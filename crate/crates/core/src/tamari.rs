//! The Tamari order on trees of one size, generated by right rotation.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;

use crate::torsion::tree_to_torsion;
use crate::tree::{enumerate_trees, BinaryTree};

/// Every tree reached by one right rotation `(uv)w -> u(vw)`.
pub fn covers_of(t: &BinaryTree) -> Vec<BinaryTree> {
    let Some((l, r)) = t.children() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    if let Some((u, v)) = l.children() {
        out.push(BinaryTree::node(
            u.clone(),
            BinaryTree::node(v.clone(), r.clone()),
        ));
    }
    out.extend(
        covers_of(l)
            .into_iter()
            .map(|l2| BinaryTree::node(l2, r.clone())),
    );
    out.extend(
        covers_of(r)
            .into_iter()
            .map(|r2| BinaryTree::node(l.clone(), r2)),
    );
    out
}

/// A finite poset given by its Hasse diagram. Cover pairs are `(lower, upper)`
/// indices into `nodes`.
#[derive(Clone, Debug)]
pub struct TamariPoset {
    pub nodes: Vec<BinaryTree>,
    pub covers: Vec<(usize, usize)>,
}

pub fn build_lattice(n: usize) -> TamariPoset {
    let nodes = enumerate_trees(n);
    let index: HashMap<&BinaryTree, usize> =
        nodes.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut covers = Vec::new();
    for (i, t) in nodes.iter().enumerate() {
        for up in covers_of(t) {
            covers.push((i, index[&up]));
        }
    }
    covers.sort_unstable();
    TamariPoset { nodes, covers }
}

impl TamariPoset {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, t: &BinaryTree) -> Option<usize> {
        self.nodes.iter().position(|x| x == t)
    }

    fn upper_neighbours(&self) -> Vec<Vec<usize>> {
        let mut up = vec![Vec::new(); self.len()];
        for &(lo, hi) in &self.covers {
            up[lo].push(hi);
        }
        up
    }

    /// Nodes ordered so every cover points forward; `None` on a cycle.
    fn topological(&self) -> Option<Vec<usize>> {
        let up = self.upper_neighbours();
        let mut indeg = vec![0usize; self.len()];
        for &(_, hi) in &self.covers {
            indeg[hi] += 1;
        }
        let mut queue: VecDeque<usize> = (0..self.len()).filter(|&i| indeg[i] == 0).collect();
        let mut order = Vec::with_capacity(self.len());
        while let Some(i) = queue.pop_front() {
            order.push(i);
            for &j in &up[i] {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    queue.push_back(j);
                }
            }
        }
        (order.len() == self.len()).then_some(order)
    }

    /// `below[i]` has bit `j` set iff `j <= i`.
    fn down_sets(&self) -> Option<Vec<Vec<u64>>> {
        let words = self.len().div_ceil(64);
        let order = self.topological()?;
        let mut lower = vec![Vec::new(); self.len()];
        for &(lo, hi) in &self.covers {
            lower[hi].push(lo);
        }
        let mut below = vec![vec![0u64; words]; self.len()];
        for &i in &order {
            let mut acc = vec![0u64; words];
            acc[i / 64] |= 1 << (i % 64);
            for &j in &lower[i] {
                for (d, s) in acc.iter_mut().zip(&below[j]) {
                    *d |= s;
                }
            }
            below[i] = acc;
        }
        Some(below)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.down_sets()
            .is_some_and(|d| d[j][i / 64] >> (i % 64) & 1 == 1)
    }

    pub fn minimal(&self) -> Vec<usize> {
        let mut has_lower = vec![false; self.len()];
        for &(_, hi) in &self.covers {
            has_lower[hi] = true;
        }
        (0..self.len()).filter(|&i| !has_lower[i]).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        let mut has_upper = vec![false; self.len()];
        for &(lo, _) in &self.covers {
            has_upper[lo] = true;
        }
        (0..self.len()).filter(|&i| !has_upper[i]).collect()
    }
}

fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn has_greatest(members: &[u64], sets: &[Vec<u64>]) -> bool {
    (0..sets.len()).any(|m| members[m / 64] >> (m % 64) & 1 == 1 && subset(members, &sets[m]))
}

/// Every pair has a meet and a join.
pub fn is_lattice(p: &TamariPoset) -> bool {
    let Some(below) = p.down_sets() else {
        return false;
    };
    let n = p.len();
    let words = n.div_ceil(64);
    let mut above = vec![vec![0u64; words]; n];
    for (j, set) in below.iter().enumerate() {
        for i in 0..n {
            if set[i / 64] >> (i % 64) & 1 == 1 {
                above[i][j / 64] |= 1 << (j % 64);
            }
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            let lower: Vec<u64> = below[x].iter().zip(&below[y]).map(|(a, b)| a & b).collect();
            let upper: Vec<u64> = above[x].iter().zip(&above[y]).map(|(a, b)| a & b).collect();
            if !has_greatest(&lower, &below) || !has_greatest(&upper, &above) {
                return false;
            }
        }
    }
    true
}

/// Bottom-to-top paths through the Hasse diagram.
pub fn count_maximal_chains(p: &TamariPoset) -> BigUint {
    let Some(order) = p.topological() else {
        return BigUint::from(0u32);
    };
    let up = p.upper_neighbours();
    let mut paths = vec![BigUint::from(0u32); p.len()];
    for &i in order.iter().rev() {
        paths[i] = if up[i].is_empty() {
            BigUint::from(1u32)
        } else {
            up[i].iter().map(|&j| &paths[j]).sum()
        };
    }
    p.minimal().into_iter().map(|i| paths[i].clone()).sum()
}

/// Each cover must strictly shrink the descending-ball torsion class.
pub fn verify_order_reversing(n: usize) -> bool {
    let p = build_lattice(n);
    let classes: Vec<_> = p
        .nodes
        .iter()
        .map(|t| tree_to_torsion(t).torsion().clone())
        .collect();
    p.covers.iter().all(|&(lo, hi)| {
        classes[hi].is_subset(&classes[lo]) && classes[hi].len() < classes[lo].len()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baseball::tree_to_perm;
    use crate::perm::enumerate_perms213;
    use std::collections::HashSet;

    fn t(s: &str) -> BinaryTree {
        s.parse().unwrap()
    }

    #[test]
    fn cover_examples() {
        assert!(covers_of(&t("•(••)")).is_empty());
        assert!(covers_of(&t("((••)•)(••)")).contains(&t("(•(••))(••)")));
        for n in 1..8 {
            assert_eq!(covers_of(&BinaryTree::left_comb(n)).len(), n - 1);
        }
    }

    #[test]
    fn small_lattices() {
        let two = build_lattice(2);
        assert_eq!((two.len(), two.covers.len()), (2, 1));
        let three = build_lattice(3);
        assert_eq!((three.len(), three.covers.len()), (5, 5));
        let four = build_lattice(4);
        assert_eq!((four.len(), four.covers.len()), (14, 21));
        for n in 1..7 {
            let p = build_lattice(n);
            assert_eq!(
                p.minimal(),
                [p.index_of(&BinaryTree::left_comb(n)).unwrap()]
            );
            assert_eq!(
                p.maximal(),
                [p.index_of(&BinaryTree::right_comb(n)).unwrap()]
            );
        }
    }

    #[test]
    fn cover_count_matches_rotatable_edges() {
        for n in 1..8 {
            let rotatable: usize = enumerate_trees(n)
                .iter()
                .map(|t| t.spans().iter().filter(|s| s.left_child).count())
                .sum();
            assert_eq!(build_lattice(n).covers.len(), rotatable);
        }
    }

    #[test]
    fn lattice_property() {
        for n in 0..7 {
            assert!(is_lattice(&build_lattice(n)), "n={n}");
        }
        let mut broken = build_lattice(3);
        broken.covers.remove(0);
        assert!(!is_lattice(&broken));
    }

    #[test]
    fn chain_counts() {
        let got: Vec<BigUint> = (1..5)
            .map(|n| count_maximal_chains(&build_lattice(n)))
            .collect();
        let want: Vec<BigUint> = [1u32, 1, 2, 9].into_iter().map(BigUint::from).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn order_reversal() {
        for n in 1..8 {
            assert!(verify_order_reversing(n));
        }
    }

    #[test]
    fn relabels_through_permutations() {
        for n in 1..7 {
            let p = build_lattice(n);
            let perms: Vec<_> = p.nodes.iter().map(tree_to_perm).collect();
            let distinct: HashSet<_> = perms.iter().cloned().collect();
            let all: HashSet<_> = enumerate_perms213(n).into_iter().collect();
            assert_eq!(distinct, all);
            let edges: HashSet<_> = p
                .covers
                .iter()
                .map(|&(a, b)| (perms[a].clone(), perms[b].clone()))
                .collect();
            assert_eq!(edges.len(), p.covers.len());
        }
    }

    #[test]
    fn leq_is_the_order() {
        let p = build_lattice(3);
        let bottom = p.index_of(&BinaryTree::left_comb(3)).unwrap();
        let top = p.index_of(&BinaryTree::right_comb(3)).unwrap();
        assert!(p.leq(bottom, top));
        assert!(!p.leq(top, bottom));
    }
}

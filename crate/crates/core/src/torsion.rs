//! Torsion classes on the ball structure of the linearly oriented `A_{n-1}`.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::ball::{all_balls, check_balls, BallSet, Interval, TorsionPair};
use crate::error::{Error, Result};
use crate::tree::BinaryTree;
use crate::young::GappedYoungDiagram;

/// `Hom([a,b],[c,d]) != 0` exactly when `a <= c <= b <= d`: the rectangle
/// spanned by the two balls stays inside the zig-zag diagram.
pub fn hom_nonzero(x: Interval, y: Interval) -> bool {
    x.a <= y.a && y.a <= x.b && x.b <= y.b
}

/// [`hom_nonzero`] after checking both balls live in ambient `n`.
pub fn hom_nonzero_in(x: Interval, y: Interval, n: usize) -> Result<bool> {
    x.check(n)?;
    y.check(n)?;
    Ok(hom_nonzero(x, y))
}

/// Balls receiving no nonzero map from `s`.
pub fn right_perp(s: &BallSet, n: usize) -> BallSet {
    all_balls(n)
        .into_iter()
        .filter(|&y| s.iter().all(|&x| !hom_nonzero(x, y)))
        .collect()
}

/// Balls mapping nowhere into `f`.
pub fn left_perp(f: &BallSet, n: usize) -> BallSet {
    all_balls(n)
        .into_iter()
        .filter(|&x| f.iter().all(|&y| !hom_nonzero(x, y)))
        .collect()
}

// Bitmask mirror of the ball structure, used whenever it fits in a u128.
struct Masks {
    balls: Vec<Interval>,
    out: Vec<u128>,
    inc: Vec<u128>,
}

const MASK_LIMIT: usize = 16;

impl Masks {
    fn new(n: usize) -> Self {
        let balls: Vec<Interval> = all_balls(n).into_iter().collect();
        let mut out = vec![0u128; balls.len()];
        let mut inc = vec![0u128; balls.len()];
        for (i, &x) in balls.iter().enumerate() {
            for (j, &y) in balls.iter().enumerate() {
                if hom_nonzero(x, y) {
                    out[i] |= 1 << j;
                    inc[j] |= 1 << i;
                }
            }
        }
        Masks { balls, out, inc }
    }

    fn index(&self, x: Interval) -> usize {
        self.balls.binary_search(&x).expect("ball in range")
    }

    fn encode(&self, s: &BallSet) -> u128 {
        s.iter().fold(0, |m, &x| m | 1 << self.index(x))
    }

    fn decode(&self, m: u128) -> BallSet {
        (0..self.balls.len())
            .filter(|i| m >> i & 1 == 1)
            .map(|i| self.balls[i])
            .collect()
    }

    fn right_perp(&self, s: u128) -> u128 {
        (0..self.balls.len())
            .filter(|&j| self.inc[j] & s == 0)
            .fold(0, |m, j| m | 1 << j)
    }

    fn left_perp(&self, f: u128) -> u128 {
        (0..self.balls.len())
            .filter(|&i| self.out[i] & f == 0)
            .fold(0, |m, i| m | 1 << i)
    }
}

/// `F = seed^⊥`, `G = ^⊥F`.
pub fn torsion_generate(seed: &BallSet, n: usize) -> Result<TorsionPair> {
    check_balls(seed, n)?;
    if n <= MASK_LIMIT {
        let m = Masks::new(n);
        let f = m.right_perp(m.encode(seed));
        let g = m.left_perp(f);
        return Ok(TorsionPair::new_unchecked(n, m.decode(g), m.decode(f)));
    }
    let f = right_perp(seed, n);
    let g = left_perp(&f, n);
    Ok(TorsionPair::new_unchecked(n, g, f))
}

/// Both perpendicularity conditions, recomputed from scratch.
pub fn is_torsion_pair(p: &TorsionPair) -> bool {
    let n = p.ambient();
    p.torsion().is_disjoint(p.free())
        && &left_perp(p.free(), n) == p.torsion()
        && &right_perp(p.torsion(), n) == p.free()
}

pub fn is_torsion_class(s: &BallSet, n: usize) -> bool {
    check_balls(s, n).is_ok() && &left_perp(&right_perp(s, n), n) == s
}

/// Closed under taking the lower-right neighbour and under extensions.
pub fn is_locally_closed(s: &BallSet, n: usize) -> bool {
    check_balls(s, n).is_ok() && local_step(s).is_empty()
}

// New balls forced by one round of the two rules.
fn local_step(s: &BallSet) -> BallSet {
    let mut new = BallSet::new();
    for &x in s {
        if x.a < x.b {
            new.insert(Interval::new(x.a + 1, x.b));
        }
        for &y in s {
            // the lower corner may sit on the virtual row just under the triangle
            if x.a < y.a && y.a <= x.b + 1 && x.b < y.b {
                new.insert(Interval::new(x.a, y.b));
            }
        }
    }
    new.retain(|x| !s.contains(x));
    new
}

/// Colours balls until neither rule applies.
pub fn complete_torsion_local(seed: &BallSet, n: usize) -> Result<BallSet> {
    check_balls(seed, n)?;
    let mut s = seed.clone();
    loop {
        let new = local_step(&s);
        if new.is_empty() {
            return Ok(s);
        }
        s.extend(new);
    }
}

/// Every torsion class of ambient `n`, smallest first.
pub fn enumerate_torsion(n: usize) -> Vec<BallSet> {
    if n == 0 {
        return vec![BallSet::new()];
    }
    let gen = |s: &BallSet| {
        torsion_generate(s, n)
            .expect("balls in range")
            .torsion()
            .clone()
    };
    let balls = all_balls(n);
    let mut seen: HashSet<BallSet> = HashSet::new();
    let mut queue = VecDeque::new();
    let bottom = gen(&BallSet::new());
    seen.insert(bottom.clone());
    queue.push_back(bottom);
    while let Some(g) = queue.pop_front() {
        for &x in balls.difference(&g) {
            let mut seed = g.clone();
            seed.insert(x);
            let h = gen(&seed);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    let mut out: Vec<BallSet> = seen.into_iter().collect();
    out.sort_by(|p, q| p.len().cmp(&q.len()).then_with(|| p.cmp(q)));
    out
}

/// Balls sitting on descending edges (`D_T`) and on ascending edges (`A_T`).
///
/// An internal node over leaves `i..=j` with split `k` carries `[m, j]` for
/// `i < m <= k + 1` along its left edge and `[i, m]` for `k <= m < j` along its
/// right edge; only balls inside the triangle count.
pub fn tree_to_torsion(t: &BinaryTree) -> TorsionPair {
    let n = t.size();
    let inside = |x: &Interval| x.check(n).is_ok();
    let mut d = BallSet::new();
    let mut a = BallSet::new();
    for s in t.spans() {
        d.extend(
            (s.lo + 1..=s.split + 1)
                .map(|m| Interval::new(m, s.hi))
                .filter(inside),
        );
        a.extend(
            (s.split..s.hi)
                .map(|m| Interval::new(s.lo, m))
                .filter(inside),
        );
    }
    TorsionPair::new_unchecked(n, d, a)
}

/// The tree whose descending balls are `g`.
///
/// The ascending column of `[1, _]` decides the root split: the left subtree
/// takes the leaves up to the highest blue ball there.
pub fn torsion_to_tree(g: &BallSet, n: usize) -> Result<BinaryTree> {
    check_balls(g, n)?;
    let t = build_from_class(g, n);
    if tree_to_torsion(&t).torsion() == g {
        Ok(t)
    } else {
        Err(Error::NotTorsionClass)
    }
}

fn build_from_class(g: &BallSet, n: usize) -> BinaryTree {
    if n == 0 {
        return BinaryTree::leaf();
    }
    let k = g
        .iter()
        .filter(|x| x.a == 1)
        .map(|x| x.b)
        .max()
        .unwrap_or(0);
    let left: BallSet = g.iter().copied().filter(|x| x.b < k).collect();
    let right = shift_down(g.iter().copied().filter(|x| x.a > k + 1), k + 1);
    BinaryTree::node(
        build_from_class(&left, k),
        build_from_class(&right, n - k - 1),
    )
}

fn shift_down(balls: impl Iterator<Item = Interval>, by: usize) -> BallSet {
    balls.map(|x| Interval::new(x.a - by, x.b - by)).collect()
}

fn shift_up(balls: &BallSet, by: usize) -> BallSet {
    balls
        .iter()
        .map(|x| Interval::new(x.a + by, x.b + by))
        .collect()
}

/// Ball `[a,b]` of ambient `n` as a box of the tilted frame: `(n - b, a - 1)`.
pub fn ball_to_cell(x: Interval, n: usize) -> (usize, usize) {
    (n - x.b, x.a - 1)
}

pub fn cell_to_ball(cell: (usize, usize), n: usize) -> Interval {
    Interval::new(cell.1 + 1, n - cell.0)
}

/// In each ascending column, box the lowest blue ball and everything above it.
pub fn torsion_to_gapped_young(g: &BallSet, n: usize) -> Result<GappedYoungDiagram> {
    if !is_torsion_class(g, n) {
        return Err(Error::NotTorsionClass);
    }
    Ok(column_boxes(g, n))
}

fn column_boxes(g: &BallSet, n: usize) -> GappedYoungDiagram {
    let mut heights = vec![0; n];
    for x in g {
        heights[x.a - 1] = heights[x.a - 1].max(n - x.b);
    }
    GappedYoungDiagram::from_heights(n, &heights).expect("columns hang from the top")
}

/// One cut of a torsion class along the rectangle through `[s,s]` and the apex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RectangleSplit {
    pub n: usize,
    pub s: usize,
    /// Blue balls `[x,y]` with `x <= s <= y`.
    pub rectangle: BallSet,
    /// Blue balls ending before `s`, in ambient `s`.
    pub left: BallSet,
    /// Blue balls starting after `s`, shifted into ambient `n - s`.
    pub right: BallSet,
}

/// Picks the largest boxed rectangle `{[x,y] : x <= s <= y}` whose bottom
/// corner `[s,s]` is blue, leftmost on ties. If the first ascending column
/// holds no blue ball it is split off on its own (`s = 1`, empty rectangle).
pub fn decompose_rectangle(g: &BallSet, n: usize) -> Result<RectangleSplit> {
    if !is_torsion_class(g, n) {
        return Err(Error::NotTorsionClass);
    }
    Ok(cut(g, n))
}

fn cut(g: &BallSet, n: usize) -> RectangleSplit {
    let s = if g.iter().any(|x| x.a == 1) {
        let boxes: BTreeSet<(usize, usize)> = column_boxes(g, n).boxes().clone();
        let fits = |s: usize| {
            (1..=s).all(|x| (s..n).all(|y| boxes.contains(&ball_to_cell(Interval::new(x, y), n))))
        };
        (1..n)
            .filter(|&s| g.contains(&Interval::new(s, s)) && fits(s))
            .max_by(|&p, &q| (p * (n - p)).cmp(&(q * (n - q))).then(q.cmp(&p)))
            .expect("the lowest blue ball of the first column always fits")
    } else {
        1.min(n)
    };
    let rectangle = g.iter().copied().filter(|x| x.a <= s && s <= x.b).collect();
    let left = g.iter().copied().filter(|x| x.b < s).collect();
    let right = shift_down(g.iter().copied().filter(|x| x.a > s), s);
    RectangleSplit {
        n,
        s,
        rectangle,
        left,
        right,
    }
}

pub fn recompose(split: &RectangleSplit) -> BallSet {
    let mut out = split.rectangle.clone();
    out.extend(split.left.iter().copied());
    out.extend(shift_up(&split.right, split.s));
    out
}

/// Full recursive decomposition, down to empty and single-ball classes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Decomposition {
    Empty {
        n: usize,
    },
    Unit {
        n: usize,
        ball: Interval,
    },
    Split {
        cut: RectangleSplit,
        left: Box<Decomposition>,
        right: Box<Decomposition>,
    },
}

pub fn decompose(g: &BallSet, n: usize) -> Result<Decomposition> {
    if !is_torsion_class(g, n) {
        return Err(Error::NotTorsionClass);
    }
    Ok(decompose_rec(g, n))
}

fn decompose_rec(g: &BallSet, n: usize) -> Decomposition {
    match g.len() {
        0 => Decomposition::Empty { n },
        1 => Decomposition::Unit {
            n,
            ball: *g.iter().next().unwrap(),
        },
        _ => {
            let c = cut(g, n);
            let left = decompose_rec(&c.left, c.s);
            let right = decompose_rec(&c.right, n - c.s);
            Decomposition::Split {
                cut: c,
                left: Box::new(left),
                right: Box::new(right),
            }
        }
    }
}

impl Decomposition {
    pub fn flatten(&self) -> BallSet {
        match self {
            Decomposition::Empty { .. } => BallSet::new(),
            Decomposition::Unit { ball, .. } => [*ball].into_iter().collect(),
            Decomposition::Split { cut, left, right } => {
                let mut out = cut.rectangle.clone();
                out.extend(left.flatten());
                out.extend(shift_up(&right.flatten(), cut.s));
                out
            }
        }
    }
}

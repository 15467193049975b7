//! Exhaustive property suites with machine-readable reports.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::ball::{all_balls, BallSet};
use crate::baseball::{classify_balls, perm_to_tree, tree_to_perm, BallKind};
use crate::bookshelf::{bookshelf, bookshelf_gapped, gapped_to_tree, inverse_bookshelf};
use crate::catalan::catalan;
use crate::dyck::{dyck_to_tree, dyck_to_young, tree_to_dyck, young_to_dyck};
use crate::family::{convert, convert_direct, enumerate, Family};
use crate::json::Document;
use crate::path::enumerate_dyck;
use crate::perm::{enumerate_perms213, is_213_avoiding};
use crate::tamari::{
    build_lattice, count_maximal_chains, covers_of, is_lattice, verify_order_reversing,
};
use crate::torsion::{
    complete_torsion_local, decompose, enumerate_torsion, is_torsion_pair, torsion_generate,
    torsion_to_gapped_young, torsion_to_tree, tree_to_torsion,
};
use crate::tree::{enumerate_trees, BinaryTree};
use crate::young::enumerate_young;

const KEPT_COUNTEREXAMPLES: usize = 5;
/// Beyond this many balls the closure check stops trying every seed.
const EXHAUSTIVE_SEED_BALLS: usize = 15;
/// Beyond this size chains are no longer counted by walking them.
const CHAIN_WALK_LIMIT: usize = 7;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Roundtrips,
    Commutativity,
    Torsion,
    Tamari,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Roundtrips => "roundtrips",
            Suite::Commutativity => "commutativity",
            Suite::Torsion => "torsion",
            Suite::Tamari => "tamari",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        [
            Suite::Roundtrips,
            Suite::Commutativity,
            Suite::Torsion,
            Suite::Tamari,
            Suite::All,
        ]
        .into_iter()
        .find(|x| x.name() == s)
        .ok_or_else(|| {
            format!(
                "unknown suite {s:?}; expected roundtrips, commutativity, torsion, tamari or all"
            )
        })
    }
}

/// One property at one size.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub n: usize,
    pub cases: usize,
    pub failures: usize,
    /// The first few failing objects.
    pub counterexamples: Vec<Value>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn to_value(&self) -> Value {
        json!({
            "name": self.name,
            "n": self.n,
            "cases": self.cases,
            "passed": self.passed(),
            "counterexamples": self.counterexamples,
        })
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub suite: Suite,
    pub n_max: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed()).collect()
    }

    pub fn to_value(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "n_max": self.n_max,
            "passed": self.passed(),
            "checks": self.checks.iter().map(Check::to_value).collect::<Vec<_>>(),
        })
    }
}

/// Runs `f` over every item in parallel; `Some` marks a failure.
fn check<T, F>(name: &'static str, n: usize, items: &[T], f: F) -> Check
where
    T: Sync,
    F: Fn(&T) -> Option<Value> + Sync,
{
    let bad: Vec<Value> = items.par_iter().filter_map(&f).collect();
    Check {
        name,
        n,
        cases: items.len(),
        failures: bad.len(),
        counterexamples: bad.into_iter().take(KEPT_COUNTEREXAMPLES).collect(),
    }
}

fn fact(name: &'static str, n: usize, ok: bool, witness: impl FnOnce() -> Value) -> Check {
    Check {
        name,
        n,
        cases: 1,
        failures: usize::from(!ok),
        counterexamples: if ok { Vec::new() } else { vec![witness()] },
    }
}

fn unless(ok: bool, v: impl FnOnce() -> Value) -> Option<Value> {
    (!ok).then(v)
}

pub fn run(suite: Suite, n_max: usize) -> Report {
    let mut checks = Vec::new();
    for n in 0..=n_max {
        match suite {
            Suite::Roundtrips => roundtrips(n, &mut checks),
            Suite::Commutativity => commutativity(n, &mut checks),
            Suite::Torsion => torsion(n, &mut checks),
            Suite::Tamari => tamari(n, &mut checks),
            Suite::All => {
                roundtrips(n, &mut checks);
                commutativity(n, &mut checks);
                torsion(n, &mut checks);
                tamari(n, &mut checks);
            }
        }
    }
    Report {
        suite,
        n_max,
        checks,
    }
}

fn roundtrips(n: usize, out: &mut Vec<Check>) {
    let trees = enumerate_trees(n);
    out.push(check("catalan_counts", n, &Family::ALL, |&f| {
        let got = enumerate(f, n).len();
        unless(
            catalan(n) == got.into(),
            || json!({ "family": f.name(), "count": got }),
        )
    }));
    out.push(check("tree_dyck", n, &trees, |t| {
        unless(dyck_to_tree(&tree_to_dyck(t)) == *t, || t.to_value())
    }));
    let paths = enumerate_dyck(n);
    out.push(check("dyck_young", n, &paths, |p| {
        unless(young_to_dyck(&dyck_to_young(p)) == *p, || p.to_value())
    }));
    out.push(check("bookshelf_left_inverse", n, &trees, |t| {
        unless(
            inverse_bookshelf(&bookshelf(t), n).as_ref() == Ok(t),
            || t.to_value(),
        )
    }));
    let diagrams = enumerate_young(n);
    out.push(check("bookshelf_right_inverse", n, &diagrams, |y| {
        unless(
            inverse_bookshelf(y, n).map(|t| bookshelf(&t)).as_ref() == Ok(y),
            || y.to_value(),
        )
    }));
    out.push(check("gapped_tree", n, &trees, |t| {
        unless(
            gapped_to_tree(&bookshelf_gapped(t)).as_ref() == Ok(t),
            || t.to_value(),
        )
    }));
    let perms = enumerate_perms213(n);
    out.push(check("perm_tree", n, &perms, |p| {
        unless(tree_to_perm(&perm_to_tree(p)) == *p, || p.to_value())
    }));
    out.push(check("tree_perm", n, &trees, |t| {
        let p = tree_to_perm(t);
        unless(
            is_213_avoiding(p.values()) == Ok(true) && perm_to_tree(&p) == *t,
            || t.to_value(),
        )
    }));
    out.push(check("torsion_tree", n, &trees, |t| {
        let g = tree_to_torsion(t);
        unless(torsion_to_tree(g.torsion(), n).as_ref() == Ok(t), || {
            t.to_value()
        })
    }));
    let objects: Vec<_> = Family::ALL.iter().flat_map(|&f| enumerate(f, n)).collect();
    out.push(check("conversion_graph", n, &objects, |obj| {
        let broken = Family::ALL.iter().find(|&&to| {
            convert(obj, to)
                .and_then(|mid| convert(&mid, obj.family()))
                .as_ref()
                != Ok(obj)
        });
        broken.map(|to| json!({ "object": obj.to_value(), "via": to.name() }))
    }));
    out.push(check("direct_maps", n, &objects, |obj| {
        let broken = Family::ALL
            .iter()
            .find(|&&to| match convert_direct(obj, to) {
                Some(direct) => direct != convert(obj, to),
                None => false,
            });
        broken.map(|to| json!({ "object": obj.to_value(), "to": to.name() }))
    }));
}

fn commutativity(n: usize, out: &mut Vec<Check>) {
    let trees = enumerate_trees(n);
    out.push(check("bookshelf_commutes", n, &trees, |t| {
        unless(bookshelf(t) == dyck_to_young(&tree_to_dyck(t)), || {
            t.to_value()
        })
    }));
    out.push(check("gapped_commutes", n, &trees, |t| {
        let g = tree_to_torsion(t);
        unless(
            torsion_to_gapped_young(g.torsion(), n) == Ok(bookshelf_gapped(t)),
            || t.to_value(),
        )
    }));
    out.push(check("baseballs_are_torsion", n, &trees, |t| {
        let balls: BallSet = classify_balls(t)
            .into_iter()
            .filter(|e| e.1 == BallKind::Baseball)
            .map(|e| e.0)
            .collect();
        unless(balls == *tree_to_torsion(t).torsion(), || t.to_value())
    }));
}

fn seeds(n: usize, classes: &[BallSet]) -> Vec<BallSet> {
    let balls: Vec<_> = all_balls(n).into_iter().collect();
    if balls.len() <= EXHAUSTIVE_SEED_BALLS {
        return (0u32..1 << balls.len())
            .map(|mask| {
                balls
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|e| *e.1)
                    .collect()
            })
            .collect();
    }
    let mut out = BTreeSet::new();
    for g in classes {
        for x in &balls {
            let mut s = g.clone();
            if !s.remove(x) {
                s.insert(*x);
            }
            out.insert(s);
        }
    }
    out.into_iter().collect()
}

fn torsion(n: usize, out: &mut Vec<Check>) {
    let trees = enumerate_trees(n);
    out.push(check("tree_classes_are_pairs", n, &trees, |t| {
        unless(is_torsion_pair(&tree_to_torsion(t)), || t.to_value())
    }));
    let images: Vec<BallSet> = trees
        .par_iter()
        .map(|t| tree_to_torsion(t).torsion().clone())
        .collect();
    let distinct: HashSet<&BallSet> = images.iter().collect();
    out.push(fact(
        "tree_classes_injective",
        n,
        distinct.len() == trees.len(),
        || json!(distinct.len()),
    ));
    let classes = enumerate_torsion(n);
    let all: HashSet<&BallSet> = classes.iter().collect();
    out.push(fact(
        "tree_classes_exhaust",
        n,
        all == distinct,
        || json!({ "classes": all.len(), "images": distinct.len() }),
    ));
    let seeds = seeds(n, &classes);
    out.push(check("closure_agrees", n, &seeds, |s| {
        let local = complete_torsion_local(s, n);
        let def = torsion_generate(s, n).map(|p| p.torsion().clone());
        unless(local == def, || json!(crate::json::balls_value(s)))
    }));
    out.push(check("decomposition", n, &classes, |g| {
        unless(
            decompose(g, n).map(|d| d.flatten()).as_ref() == Ok(g),
            || json!(crate::json::balls_value(g)),
        )
    }));
}

fn walk_chains(t: &BinaryTree) -> u64 {
    let up = covers_of(t);
    if up.is_empty() {
        1
    } else {
        up.iter().map(walk_chains).sum()
    }
}

fn tamari(n: usize, out: &mut Vec<Check>) {
    let p = build_lattice(n);
    out.push(fact("node_count", n, catalan(n) == p.len().into(), || {
        json!(p.len())
    }));
    let rotatable: usize = p
        .nodes
        .iter()
        .map(|t| t.spans().iter().filter(|s| s.left_child).count())
        .sum();
    out.push(fact("cover_count", n, rotatable == p.covers.len(), || {
        json!(p.covers.len())
    }));
    let ends = p.minimal() == [p.index_of(&BinaryTree::left_comb(n)).unwrap_or(usize::MAX)]
        && p.maximal() == [p.index_of(&BinaryTree::right_comb(n)).unwrap_or(usize::MAX)];
    out.push(fact(
        "comb_extremes",
        n,
        ends,
        || json!({ "minimal": p.minimal(), "maximal": p.maximal() }),
    ));
    out.push(fact("is_lattice", n, is_lattice(&p), || json!(n)));
    out.push(fact(
        "order_reversing",
        n,
        verify_order_reversing(n),
        || json!(n),
    ));
    if n <= CHAIN_WALK_LIMIT {
        let counted = count_maximal_chains(&p);
        let walked = walk_chains(&BinaryTree::left_comb(n));
        out.push(fact(
            "maximal_chains",
            n,
            counted == walked.into(),
            || json!({ "counted": counted.to_string(), "walked": walked }),
        ));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for suite in [
            Suite::Roundtrips,
            Suite::Commutativity,
            Suite::Torsion,
            Suite::Tamari,
        ] {
            let r = run(suite, 4);
            assert!(r.passed(), "{}", r.to_value());
        }
    }

    #[test]
    fn report_shape() {
        let r = run(Suite::All, 2);
        assert!(r.passed());
        let v = r.to_value();
        assert_eq!(v["suite"], "all");
        assert_eq!(v["checks"].as_array().unwrap().len(), r.checks.len());
        assert!(r
            .checks
            .iter()
            .any(|c| c.name == "maximal_chains" && c.n == 2));
    }

    #[test]
    fn failures_carry_counterexamples() {
        let c = check("even", 0, &[1, 2, 3, 5], |&x: &i32| {
            unless(x % 2 == 0, || json!(x))
        });
        assert_eq!(c.failures, 3);
        assert_eq!(c.counterexamples, [json!(1), json!(3), json!(5)]);
        assert!(!c.passed());
    }

    #[test]
    fn suite_names() {
        assert_eq!("tamari".parse(), Ok(Suite::Tamari));
        assert!("nope".parse::<Suite>().is_err());
    }
}

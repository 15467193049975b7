//! End-to-end acceptance run: one line per criterion, nonzero exit on failure.

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use catalan_core::family::{convert, convert_direct};
use catalan_core::torsion::hom_nonzero;
use catalan_core::*;
use num_bigint::BigUint;

type Outcome = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome, Option<u64>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn tree(s: &str) -> BinaryTree {
    s.parse().unwrap()
}

fn set(v: &[(usize, usize)]) -> BallSet {
    v.iter().map(|&(a, b)| Interval::new(a, b)).collect()
}

fn binomial_catalan(n: usize) -> BigUint {
    let mut c = BigUint::from(1u32);
    for k in 0..n {
        c = c * BigUint::from(2 * n - k) / BigUint::from(k + 1);
    }
    c / BigUint::from(n + 1)
}

fn catalan_counts() -> Outcome {
    let want = [1u32, 1, 2, 5, 14, 42, 132, 429, 1430];
    for (n, &w) in want.iter().enumerate() {
        ensure!(
            binomial_catalan(n) == BigUint::from(w),
            "formula gives {} at n={n}",
            binomial_catalan(n)
        );
        ensure!(
            catalan(n) == BigUint::from(w),
            "catalan({n}) = {}",
            catalan(n)
        );
        for family in Family::ALL {
            let got = family::enumerate(family, n).len();
            ensure!(
                got == w as usize,
                "{family} has {got} objects at n={n}, want {w}"
            );
        }
        ensure!(
            enumerate_torsion(n).len() == w as usize,
            "torsion classes at n={n}"
        );
    }
    Ok(())
}

fn path_partitions() -> Outcome {
    let cases = [
        ("UURRUR", r#"{"n":3,"rows":[2]}"#),
        ("URURUR", r#"{"n":3,"rows":[2,1]}"#),
        ("URUURURR", r#"{"n":4,"rows":[2,1,1]}"#),
    ];
    for (path, want) in cases {
        let p: DyckPath = path.parse().map_err(|e| format!("{path}: {e}"))?;
        let got = to_json(&dyck_to_young(&p));
        ensure!(got == want, "{path} gives {got}, want {want}");
    }
    Ok(())
}

fn commutativity() -> Outcome {
    let trees = enumerate_trees(7);
    ensure!(trees.len() == 429, "{} trees of size 7", trees.len());
    for t in &trees {
        ensure!(
            bookshelf(t) == dyck_to_young(&tree_to_dyck(t)),
            "square fails on {t}"
        );
    }
    Ok(())
}

fn bookshelf_round_trip() -> Outcome {
    for n in 0..=7 {
        for t in enumerate_trees(n) {
            let back = inverse_bookshelf(&bookshelf(&t), n).map_err(|e| format!("{t}: {e}"))?;
            ensure!(back == t, "{t} comes back as {back}");
        }
        let diagrams = enumerate_young(n);
        ensure!(
            diagrams.len() == catalan_u64(n).unwrap() as usize,
            "staircase count at n={n}"
        );
        for y in diagrams {
            let t = inverse_bookshelf(&y, n).map_err(|e| format!("{y:?}: {e}"))?;
            ensure!(
                bookshelf(&t) == y,
                "{y:?} comes back as {:?}",
                bookshelf(&t)
            );
        }
    }
    let worked = YoungDiagram::new(7, vec![5, 5, 3, 2, 1, 1]).map_err(|e| e.to_string())?;
    ensure!(
        min_tree_size(&worked) == 8,
        "worked diagram needs {}",
        min_tree_size(&worked)
    );
    Ok(())
}

fn hom_calibration() -> Outcome {
    let x = |i| Interval::new(i, i + 1);
    let y = |i| Interval::new(i, i + 2);
    let z = |i| Interval::new(i, i + 3);
    let w = Interval::new(1, 5);
    ensure!(hom_nonzero(x(1), z(2)), "Hom(X1, Z2) vanishes");
    for b in all_balls(6) {
        ensure!(hom_nonzero(b, b), "Hom({b}, {b}) vanishes");
    }
    ensure!(!hom_nonzero(x(1), y(3)), "Hom(X1, Y3) survives");
    ensure!(!hom_nonzero(y(2), y(1)), "Hom(Y2, Y1) survives");
    ensure!(!hom_nonzero(x(2), w), "Hom(X2, W) survives");

    let g = set(&[(1, 1), (3, 3), (5, 5)]);
    let f = set(&[(2, 2), (2, 3), (2, 4), (2, 5), (4, 4), (4, 5)]);
    ensure!(
        f.contains(&x(2)) && f.contains(&y(2)) && f.contains(&z(2)) && f.contains(&x(4)),
        "labels"
    );
    // definition-level: each side is exactly the perpendicular of the other
    let right: BallSet = all_balls(6)
        .into_iter()
        .filter(|&c| g.iter().all(|&a| !hom_nonzero(a, c)))
        .collect();
    let left: BallSet = all_balls(6)
        .into_iter()
        .filter(|&c| f.iter().all(|&b| !hom_nonzero(c, b)))
        .collect();
    ensure!(right == f, "right perpendicular is {right:?}");
    ensure!(left == g, "left perpendicular is {left:?}");
    let pair = TorsionPair::new(6, g, f).map_err(|e| e.to_string())?;
    ensure!(is_torsion_pair(&pair), "pair rejected");
    Ok(())
}

fn closure_equivalence() -> Outcome {
    for n in [5usize, 6] {
        let balls: Vec<Interval> = all_balls(n).into_iter().collect();
        let seeds = 1u32 << balls.len();
        ensure!(
            seeds == if n == 5 { 1 << 10 } else { 1 << 15 },
            "seed count {seeds}"
        );
        for mask in 0..seeds {
            let seed: BallSet = (0..balls.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| balls[i])
                .collect();
            let local = complete_torsion_local(&seed, n).map_err(|e| e.to_string())?;
            let def = torsion_generate(&seed, n).map_err(|e| e.to_string())?;
            ensure!(
                &local == def.torsion(),
                "n={n} seed {seed:?}: {local:?} vs {:?}",
                def.torsion()
            );
        }
    }
    Ok(())
}

fn tree_torsion_bijection() -> Outcome {
    for n in 0..=7 {
        let trees = enumerate_trees(n);
        let images: Vec<BallSet> = trees
            .iter()
            .map(|t| tree_to_torsion(t).torsion().clone())
            .collect();
        let distinct: HashSet<&BallSet> = images.iter().collect();
        ensure!(distinct.len() == trees.len(), "collision at n={n}");
        let classes = enumerate_torsion(n);
        let all: HashSet<&BallSet> = classes.iter().collect();
        ensure!(
            all == distinct,
            "image differs from the torsion classes at n={n}"
        );
        for g in &classes {
            ensure!(is_torsion_class(g, n), "{g:?} is not closed");
        }
        for (t, g) in trees.iter().zip(&images) {
            let back = torsion_to_tree(g, n).map_err(|e| e.to_string())?;
            ensure!(&back == t, "{t} comes back as {back}");
        }
    }
    Ok(())
}

fn baseball_bijection() -> Outcome {
    for n in 0..=7 {
        for p in enumerate_perms213(n) {
            let back = tree_to_perm(&perm_to_tree(&p));
            ensure!(back == p, "{p} comes back as {back}");
        }
        for t in enumerate_trees(n) {
            let p = tree_to_perm(&t);
            ensure!(is_213_avoiding(p.values()) == Ok(true), "{t} gives {p}");
            let baseballs: BallSet = classify_balls(&t)
                .into_iter()
                .filter(|e| e.1 == BallKind::Baseball)
                .map(|e| e.0)
                .collect();
            ensure!(
                &baseballs == tree_to_torsion(&t).torsion(),
                "{t}: baseballs off the torsion class"
            );
        }
    }
    let labelled: [(&[usize], &str); 4] = [
        (&[1, 2], "((••)•)"),
        (&[2, 1], "(•(••))"),
        (&[1, 3, 4, 2], "((•((••)•))•)"),
        (&[5, 1, 2, 3, 4], "((((••)•)•)(••))"),
    ];
    for (values, shape) in labelled {
        let p = Permutation213::new(values.to_vec()).map_err(|e| e.to_string())?;
        ensure!(
            perm_to_tree(&p) == tree(shape),
            "{p} gives {}",
            perm_to_tree(&p)
        );
        ensure!(
            tree_to_perm(&tree(shape)) == p,
            "{shape} gives {}",
            tree_to_perm(&tree(shape))
        );
    }
    let crossing = |s: &str| -> Vec<Interval> {
        classify_balls(&tree(s))
            .into_iter()
            .filter(|e| e.1 == BallKind::Crossball)
            .map(|e| e.0)
            .collect()
    };
    ensure!(
        crossing("((•((••)•))•)") == [Interval::new(1, 1), Interval::new(1, 2)],
        "(1,3,4,2) crossballs"
    );
    ensure!(
        crossing("((((••)•)•)(••))") == (1..5).map(|a| Interval::new(a, 4)).collect::<Vec<_>>(),
        "(5,1,2,3,4)"
    );
    Ok(())
}

fn chains_by_walking(t: &BinaryTree) -> u64 {
    let up = covers_of(t);
    if up.is_empty() {
        1
    } else {
        up.iter().map(chains_by_walking).sum()
    }
}

fn tamari_structure() -> Outcome {
    ensure!(
        build_lattice(4).len() == 14,
        "size-4 lattice has {} nodes",
        build_lattice(4).len()
    );
    for n in 0..=6 {
        ensure!(is_lattice(&build_lattice(n)), "not a lattice at n={n}");
    }
    let lo = tree("((••)•)(••)");
    let hi = tree("(•(••))(••)");
    let p = build_lattice(4);
    let (i, j) = (p.index_of(&lo).unwrap(), p.index_of(&hi).unwrap());
    ensure!(p.covers.contains(&(i, j)), "{lo} is not covered by {hi}");
    for (n, want) in [(2usize, 1u64), (3, 2), (4, 9)] {
        let walked = chains_by_walking(&BinaryTree::left_comb(n));
        let counted = count_maximal_chains(&build_lattice(n));
        ensure!(walked == want, "walking finds {walked} chains at n={n}");
        ensure!(
            counted == BigUint::from(want),
            "counting finds {counted} chains at n={n}"
        );
    }
    for n in 0..=7 {
        ensure!(verify_order_reversing(n), "order reversal fails at n={n}");
        let p = build_lattice(n);
        for &(lo, hi) in &p.covers {
            let below = tree_to_torsion(&p.nodes[lo]).torsion().clone();
            let above = tree_to_torsion(&p.nodes[hi]).torsion().clone();
            ensure!(
                above.is_subset(&below) && above != below,
                "{} -> {}",
                p.nodes[lo],
                p.nodes[hi]
            );
        }
    }
    Ok(())
}

fn coherence() -> Outcome {
    for n in 0..=6 {
        for from in Family::ALL {
            for obj in family::enumerate(from, n) {
                for to in Family::ALL {
                    let there = convert(&obj, to).map_err(|e| e.to_string())?;
                    let back = convert(&there, from).map_err(|e| e.to_string())?;
                    ensure!(
                        back == obj,
                        "{} -> {to} -> {from} changes it",
                        obj.to_json()
                    );
                    if let Some(direct) = convert_direct(&obj, to) {
                        let direct = direct.map_err(|e| e.to_string())?;
                        ensure!(
                            direct == there,
                            "direct {from} -> {to} disagrees on {}",
                            obj.to_json()
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("catalan counts", catalan_counts, Some(30)),
        ("path partitions", path_partitions, None),
        ("commutativity", commutativity, Some(10)),
        ("bookshelf round trip", bookshelf_round_trip, None),
        ("hom calibration", hom_calibration, None),
        ("closure equivalence", closure_equivalence, Some(60)),
        ("tree-torsion bijection", tree_torsion_bijection, None),
        ("baseball bijection", baseball_bijection, None),
        ("tamari structure", tamari_structure, None),
        ("end-to-end coherence", coherence, Some(60)),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, run, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let took = start.elapsed();
        let result = match (result, budget) {
            (Ok(()), Some(secs)) if took > Duration::from_secs(secs) => {
                Err(format!("over the {secs} s budget"))
            }
            (r, _) => r,
        };
        match result {
            Ok(()) => println!("criterion {:>2} {name} ... PASS ({:.2?})", k + 1, took),
            Err(why) => {
                failed += 1;
                println!(
                    "criterion {:>2} {name} ... FAIL ({:.2?}): {why}",
                    k + 1,
                    took
                );
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Text, SVG and DOT renderings. Output is a pure function of the input.

use std::fmt::Write;

use serde_json::{json, Value};

use crate::ball::{all_balls, Interval, TorsionPair};
use crate::baseball::{classify_balls, wire_routes, BallKind, Passage};
use crate::tamari::TamariPoset;
use crate::tree::{node_coordinates, BinaryTree};
use crate::young::{GappedYoungDiagram, YoungDiagram};

/// Descending edges and torsion balls.
pub const BLUE: &str = "#3b6fd4";
/// Ascending edges and torsion-free balls.
pub const RED: &str = "#d43b3b";
/// Boxes, outlines, balls in neither class.
pub const GRAY: &str = "#9a9a9a";
pub const INK: &str = "#222222";

/// The aligned drawing: one character per lattice point, `o` for internal
/// nodes, `•` for leaves, `/` and `\` along edges.
pub fn render_tree_ascii(t: &BinaryTree) -> String {
    let n = t.size();
    let mut grid = vec![vec![' '; 2 * n + 1]; n + 1];
    let mut put = |x: usize, y: usize, c: char| grid[x + y][n + y - x] = c;
    let placed = node_coordinates(t);
    for p in &placed {
        put(p.coord.x, p.coord.y, if p.internal { 'o' } else { '•' });
    }
    for s in t.spans() {
        let (x, y) = (n - s.hi, s.lo);
        // left child sits at row n - split, right child at column split + 1
        for step in 1..(s.hi - s.split) {
            put(x + step, y, '/');
        }
        for step in 1..(s.split + 1 - s.lo) {
            put(x, y + step, '\\');
        }
    }
    lines(grid)
}

fn lines(grid: Vec<Vec<char>>) -> String {
    let mut out = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// One line per row, `□` per cell. The empty diagram is `∅`.
pub fn render_young_ascii(y: &YoungDiagram) -> String {
    if y.is_empty() {
        return "∅\n".to_string();
    }
    y.rows().iter().map(|&r| "□".repeat(r) + "\n").collect()
}

/// Tilted frame, rows down from the ceiling; `·` marks a hole.
pub fn render_gapped_ascii(g: &GappedYoungDiagram) -> String {
    let depth = g.heights().into_iter().max().unwrap_or(0);
    if depth == 0 {
        return "∅\n".to_string();
    }
    let width = g.ambient();
    let grid = (1..=depth)
        .map(|r| {
            (0..width)
                .map(|c| {
                    if g.boxes().contains(&(r, c)) {
                        '□'
                    } else {
                        '·'
                    }
                })
                .collect()
        })
        .collect();
    lines(grid)
}

const STEP: i64 = 24;
const PAD: i64 = 32;
const RADIUS: i64 = 9;

// Apex on top, simples along the bottom; diagonal neighbours 45° apart.
fn ball_centre(x: Interval, n: usize) -> (i64, i64) {
    let col = (x.a + x.b - 1) as i64;
    let depth = (n - 1 - (x.b - x.a)) as i64;
    (PAD + col * STEP, PAD + depth * STEP)
}

fn svg_open(n: usize) -> String {
    svg_frame(
        2 * PAD + (2 * n.max(1) as i64 - 2) * STEP,
        2 * PAD + n as i64 * STEP,
    )
}

fn svg_frame(width: i64, height: i64) -> String {
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    )
}

/// Blue torsion balls, red torsion-free balls, hollow gray for the rest.
pub fn render_torsion_svg(pair: &TorsionPair) -> String {
    let n = pair.ambient();
    let mut out = svg_open(n);
    for x in all_balls(n) {
        let (cx, cy) = ball_centre(x, n);
        let fill = if pair.torsion().contains(&x) {
            BLUE
        } else if pair.free().contains(&x) {
            RED
        } else {
            "none"
        };
        writeln!(
            out,
            "  <circle cx=\"{cx}\" cy=\"{cy}\" r=\"{RADIUS}\" fill=\"{fill}\" stroke=\"{GRAY}\"><title>{x}</title></circle>"
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

/// Right-child edges blue, left-child edges red, in the aligned frame.
pub fn render_tree_svg(t: &BinaryTree) -> String {
    let n = t.size();
    let half = STEP / 2;
    let at = |x: usize, y: usize| (PAD + (n + y - x) as i64 * half, PAD + (x + y) as i64 * half);
    let side = 2 * PAD + n as i64 * STEP;
    let mut out = svg_frame(side, 2 * PAD + n as i64 * half);
    for s in t.spans() {
        let (px, py) = at(n - s.hi, s.lo);
        let (lx, ly) = at(n - s.split, s.lo);
        let (rx, ry) = at(n - s.hi, s.split + 1);
        writeln!(out, "  <line x1=\"{px}\" y1=\"{py}\" x2=\"{lx}\" y2=\"{ly}\" stroke=\"{RED}\" stroke-width=\"2\"/>").unwrap();
        writeln!(out, "  <line x1=\"{px}\" y1=\"{py}\" x2=\"{rx}\" y2=\"{ry}\" stroke=\"{BLUE}\" stroke-width=\"2\"/>").unwrap();
    }
    for p in node_coordinates(t) {
        let (cx, cy) = at(p.coord.x, p.coord.y);
        let fill = if p.internal { INK } else { "white" };
        writeln!(
            out,
            "  <circle cx=\"{cx}\" cy=\"{cy}\" r=\"4\" fill=\"{fill}\" stroke=\"{INK}\"/>"
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

fn boxes_svg(n: usize, cells: impl IntoIterator<Item = (usize, usize)>) -> String {
    let side = 2 * PAD + n.max(1) as i64 * STEP;
    let mut out = svg_frame(side, side);
    for (r, c) in cells {
        let (x, y) = (PAD + c as i64 * STEP, PAD + r as i64 * STEP);
        writeln!(out, "  <rect x=\"{x}\" y=\"{y}\" width=\"{STEP}\" height=\"{STEP}\" fill=\"{GRAY}\" stroke=\"{INK}\"/>").unwrap();
    }
    out.push_str("</svg>\n");
    out
}

/// Gray boxes, rows top-down, in an `n` by `n` frame.
pub fn render_young_svg(y: &YoungDiagram) -> String {
    let cells = y
        .rows()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)));
    boxes_svg(y.ambient(), cells)
}

/// Like [`render_young_svg`], holes left blank.
pub fn render_gapped_svg(g: &GappedYoungDiagram) -> String {
    boxes_svg(g.ambient(), g.boxes().iter().map(|&(r, c)| (r - 1, c)))
}

/// Baseballs filled blue, crossballs hollow, wires dashed.
pub fn render_wire_svg(t: &BinaryTree) -> String {
    let n = t.size();
    let mut out = svg_open(n);
    let half = STEP / 2;
    for (x, kind) in classify_balls(t) {
        let (cx, cy) = ball_centre(x, n);
        let (fill, class) = match kind {
            BallKind::Baseball => (BLUE, "baseball"),
            BallKind::Crossball => ("none", "crossball"),
        };
        writeln!(
            out,
            "  <circle class=\"{class}\" cx=\"{cx}\" cy=\"{cy}\" r=\"{RADIUS}\" fill=\"{fill}\" fill-opacity=\"0.35\" stroke=\"{INK}\"><title>{x}</title></circle>"
        )
        .unwrap();
    }
    if n >= 2 {
        let apex = |b: usize| ball_centre(Interval::new(1, b), n);
        for route in wire_routes(t) {
            let mut pts = Vec::new();
            let (sx, sy) = ball_centre(Interval::new(route.label.min(n - 1), n - 1), n);
            let start = if route.label < n {
                (sx + half, sy - half)
            } else {
                (sx + half, sy + half)
            };
            pts.push(start);
            for &(x, passage) in &route.balls {
                let (cx, cy) = ball_centre(x, n);
                let dy = match passage {
                    Passage::Over => -RADIUS / 2,
                    Passage::Under => RADIUS / 2,
                    Passage::Across => 0,
                };
                pts.push((cx, cy + dy));
            }
            let end = if route.exit < n {
                let (cx, cy) = apex(n - route.exit);
                (cx - half, cy - half)
            } else {
                let (cx, cy) = apex(1);
                (cx - half, cy + half)
            };
            pts.push(end);
            let path: Vec<String> = pts.iter().map(|(x, y)| format!("{x},{y}")).collect();
            writeln!(
                out,
                "  <polyline points=\"{}\" fill=\"none\" stroke=\"{INK}\" stroke-dasharray=\"4 3\"/>",
                path.join(" ")
            )
            .unwrap();
            writeln!(
                out,
                "  <text x=\"{}\" y=\"{}\" font-size=\"12\">{}</text>",
                start.0 + 4,
                start.1 + 4,
                route.label
            )
            .unwrap();
            writeln!(
                out,
                "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"end\">{}</text>",
                end.0 - 4,
                end.1 + 4,
                route.label
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}

fn dot_id(t: &BinaryTree) -> String {
    format!("\"{t}\"")
}

/// Hasse diagram, bottom to top; node IDs are the paren strings.
pub fn render_lattice_dot(p: &TamariPoset) -> String {
    let mut out = String::from(
        "digraph tamari {\n  rankdir=BT;\n  node [shape=plaintext, fontname=\"monospace\"];\n",
    );
    writeln!(out, "  edge [color=\"{GRAY}\", arrowhead=none];").unwrap();
    for t in &p.nodes {
        writeln!(out, "  {};", dot_id(t)).unwrap();
    }
    for &(lo, hi) in &p.covers {
        writeln!(
            out,
            "  {} -> {};",
            dot_id(&p.nodes[lo]),
            dot_id(&p.nodes[hi])
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn lattice_json(p: &TamariPoset) -> Value {
    let nodes: Vec<String> = p.nodes.iter().map(|t| t.to_string()).collect();
    json!({ "n": p.nodes.first().map_or(0, |t| t.size()), "nodes": nodes, "covers": p.covers })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ball::BallSet;
    use crate::tamari::build_lattice;
    use crate::torsion::{torsion_generate, tree_to_torsion};
    use crate::tree::enumerate_trees;

    #[test]
    fn tree_picture() {
        let t: BinaryTree = "(••)•".parse().unwrap();
        assert_eq!(render_tree_ascii(&t), "  o\n o \\\n• • •\n");
        let comb = render_tree_ascii(&BinaryTree::right_comb(3));
        assert_eq!(comb, "   o\n  / o\n / / o\n• • • •\n");
    }

    #[test]
    fn young_picture() {
        let y = YoungDiagram::new(3, vec![2, 1]).unwrap();
        assert_eq!(render_young_ascii(&y), "□□\n□\n");
        assert_eq!(render_young_ascii(&YoungDiagram::empty(2)), "∅\n");
        let g = GappedYoungDiagram::from_heights(4, &[1, 2, 1, 0]).unwrap();
        assert_eq!(render_gapped_ascii(&g), "□□□·\n·□··\n");
    }

    #[test]
    fn torsion_picture() {
        let g: BallSet = [(1, 1), (3, 3), (5, 5)]
            .into_iter()
            .map(|(a, b)| Interval::new(a, b))
            .collect();
        let svg = render_torsion_svg(&torsion_generate(&g, 6).unwrap());
        assert_eq!(svg.matches(&format!("fill=\"{BLUE}\"")).count(), 3);
        assert_eq!(svg.matches(&format!("fill=\"{RED}\"")).count(), 6);
        assert_eq!(svg.matches("<circle").count(), 15);
        assert!(svg.contains("<title>[3,3]</title>"));
        assert_eq!(svg, render_torsion_svg(&torsion_generate(&g, 6).unwrap()));
    }

    #[test]
    fn wire_picture() {
        let t: BinaryTree = "((•((••)•))•)".parse().unwrap();
        let svg = render_wire_svg(&t);
        assert_eq!(svg.matches("class=\"baseball\"").count(), 4);
        assert_eq!(svg.matches("class=\"crossball\"").count(), 2);
        assert_eq!(svg.matches("<polyline").count(), 4);
        assert!(render_wire_svg(&"••".parse().unwrap()).ends_with("</svg>\n"));
    }

    #[test]
    fn lattice_picture() {
        let dot = render_lattice_dot(&build_lattice(4));
        assert_eq!(dot.matches(" -> ").count(), 21);
        let nodes = dot
            .lines()
            .filter(|l| l.trim_end().ends_with("\";") && !l.contains("->"))
            .count();
        assert_eq!(nodes, 14);
        assert!(dot.starts_with("digraph tamari {") && dot.ends_with("}\n"));
        let j = lattice_json(&build_lattice(3));
        assert_eq!(j["covers"].as_array().unwrap().len(), 5);
    }

    #[test]
    fn ascii_trees_stay_in_bounds() {
        for n in 0..7 {
            for t in enumerate_trees(n) {
                let pic = render_tree_ascii(&t);
                assert_eq!(pic.lines().count(), n + 1);
                assert_eq!(pic.matches('o').count(), n);
                assert_eq!(pic.matches('•').count(), n + 1);
                let _ = tree_to_torsion(&t);
            }
        }
    }
}

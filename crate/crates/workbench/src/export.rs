//! Graphviz DOT and SVG renderings.

use std::fmt::Write;

use smtilt_core::ar_quiver::ArQuiver;
use smtilt_core::polygon::{CategoryParams, Diagonal};
use smtilt_core::tilting::{Direction, TiltingGraph};

pub fn node_id(d: Diagonal) -> String {
    format!("d_{}_{}", d.lo(), d.hi())
}

pub fn ar_quiver_dot(q: &ArQuiver) -> String {
    let mut out = String::from("digraph ar_quiver {\n");
    for &v in &q.vertices {
        writeln!(out, "  {} [label=\"{v}\"];", node_id(v)).unwrap();
    }
    for &(a, b) in &q.arrows {
        writeln!(out, "  {} -> {};", node_id(a), node_id(b)).unwrap();
    }
    for (&v, &t) in &q.translate {
        writeln!(
            out,
            "  {} -> {} [style=dashed, color=gray, constraint=false];",
            node_id(v),
            node_id(t)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn tilting_graph_dot(g: &TiltingGraph) -> String {
    let mut out = String::from("digraph tilting_graph {\n");
    for n in &g.nodes {
        let label: Vec<String> = n.simples.iter().map(|d| d.to_string()).collect();
        writeln!(out, "  {} [label=\"{}\"];", n.id, label.join(" ")).unwrap();
    }
    for e in &g.edges {
        let tag = match e.direction {
            Direction::Left => 'L',
            Direction::Right => 'R',
        };
        writeln!(
            out,
            "  {} -> {} [label=\"{tag}{}\"];",
            e.source, e.target, e.pivot
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

const SIZE: f64 = 420.0;
const RADIUS: f64 = 160.0;
const LABEL_RADIUS: f64 = 184.0;

/// Position of vertex `k`: at `90° - k·360°/N`, so vertex 0 is at the top
/// and numbering runs clockwise.
fn vertex_point(n: u32, k: u32, radius: f64) -> (f64, f64) {
    let angle = (90.0 - k as f64 * 360.0 / n as f64).to_radians();
    let c = SIZE / 2.0;
    (c + radius * angle.cos(), c - radius * angle.sin())
}

/// The polygon with `solid` diagonals drawn as solid chords and `dashed`
/// ones as dashed chords.
pub fn polygon_svg(
    p: &CategoryParams,
    title: &str,
    solid: &[Diagonal],
    dashed: &[Diagonal],
) -> String {
    let n = p.polygon_size();
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    )
    .unwrap();
    writeln!(out, "  <title>{}</title>", escape(title)).unwrap();
    let corners: Vec<String> = (0..n)
        .map(|k| {
            let (x, y) = vertex_point(n, k, RADIUS);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    writeln!(
        out,
        "  <polygon class=\"outline\" points=\"{}\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>",
        corners.join(" ")
    )
    .unwrap();
    let chord = |out: &mut String, d: Diagonal, class: &str, extra: &str| {
        let (x1, y1) = vertex_point(n, d.lo(), RADIUS);
        let (x2, y2) = vertex_point(n, d.hi(), RADIUS);
        writeln!(
            out,
            "  <line class=\"chord {class}\" data-diagonal=\"{},{}\" x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke-width=\"2\"{extra}/>",
            d.lo(),
            d.hi()
        )
        .unwrap();
    };
    for &d in dashed {
        chord(
            &mut out,
            d,
            "extra",
            " stroke=\"#2a9d3a\" stroke-dasharray=\"6 4\"",
        );
    }
    for &d in solid {
        chord(&mut out, d, "simple", " stroke=\"#c0392b\"");
    }
    for k in 0..n {
        let (x, y) = vertex_point(n, k, RADIUS);
        writeln!(
            out,
            "  <circle class=\"vertex\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\" fill=\"#000\"/>"
        )
        .unwrap();
        let (lx, ly) = vertex_point(n, k, LABEL_RADIUS);
        writeln!(
            out,
            "  <text x=\"{lx:.2}\" y=\"{ly:.2}\" text-anchor=\"middle\" dominant-baseline=\"middle\" font-family=\"sans-serif\" font-size=\"14\">{k}</text>"
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

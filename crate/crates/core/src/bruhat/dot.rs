use std::fmt::Write;

use super::bruhat_reachable;
use crate::coxeter::CoxeterSystem;
use crate::subset::RootSubset;

/// Graphviz source for the Bruhat graph restricted to the vertices reachable
/// with `labels`. Reflections are drawn filled; nodes and edges come out in
/// id order, then label order.
pub fn bruhat_dot(sys: &CoxeterSystem, labels: RootSubset) -> String {
    let g = sys.group();
    let table = sys.table();
    let verts = bruhat_reachable(g, labels);
    let mut out = String::new();
    out.push_str("digraph bruhat {\n");
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=box, fontname=\"monospace\"];\n");
    for x in verts.iter() {
        let name = sys.format_element(x);
        if g.reflection_root(x).is_some() {
            let _ = writeln!(
                out,
                "  w{} [label=\"{name}\", style=filled, fillcolor=\"#f4c542\", highlight=true];",
                x.0
            );
        } else {
            let _ = writeln!(out, "  w{} [label=\"{name}\"];", x.0);
        }
    }
    for x in verts.iter() {
        let lx = g.length(x);
        for t in labels.iter() {
            let y = g.left_mul(t, x);
            if g.length(y) > lx {
                let _ = writeln!(
                    out,
                    "  w{} -> w{} [label=\"{}\"];",
                    x.0,
                    y.0,
                    table.label(t)
                );
            }
        }
    }
    out.push_str("}\n");
    out
}

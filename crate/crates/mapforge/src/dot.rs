//! Graphviz (DOT) export.
//!
//! One node per vertex (labelled by its counterclockwise half-edge cycle),
//! one edge per half-edge pair (labelled `h|h'`).  The rendering is
//! deterministic: vertices and edges are emitted in index order.
//!
//! * plain maps render as an undirected graph with the root edge in red;
//! * maps with a distinguished subset draw subset edges bold;
//! * oriented maps render as a digraph with each arrow pointing at the
//!   vertex holding the ingoing half-edge;
//! * pairs render the tree and the mobile side by side as two clusters;
//! * labelled and blossoming mobiles are mobiles (black vertices filled)
//!   with the label or bud sequence in the graph caption.

use crate::cmap::{RootedMap, SpannedMap};
use crate::fold::TreeMobilePair;
use crate::json::Document;
use crate::mobile::{BlossomingMobile, CornerLabelledMobile};
use crate::orient::OrientedMap;
use std::fmt::Write as _;

fn vertex_of_half(map: &RootedMap) -> (Vec<Vec<usize>>, Vec<usize>) {
    let vertices = map.vertices();
    let mut owner = vec![0; map.n_half()];
    for (v, cycle) in vertices.iter().enumerate() {
        for &h in cycle {
            owner[h] = v;
        }
    }
    (vertices, owner)
}

fn cycle_label(cycle: &[usize]) -> String {
    let parts: Vec<String> = cycle.iter().map(|h| h.to_string()).collect();
    format!("({})", parts.join(" "))
}

/// Emits the nodes and edges of one map with the given node-name prefix.
///
/// `colours` fills vertices black/white; `bold` thickens the chosen edges;
/// `arrows` (ingoing mask) switches to directed edges pointing at the
/// vertex of the ingoing half.
fn body(
    out: &mut String,
    map: &RootedMap,
    prefix: &str,
    colours: Option<&[bool]>,
    bold: Option<&[bool]>,
    arrows: Option<&[bool]>,
    indent: &str,
) {
    let (vertices, owner) = vertex_of_half(map);
    for (v, cycle) in vertices.iter().enumerate() {
        let mut attrs = vec![format!("label=\"{}\"", cycle_label(cycle))];
        if let Some(colours) = colours {
            if colours[v] {
                attrs.push("style=filled".into());
                attrs.push("fillcolor=black".into());
                attrs.push("fontcolor=white".into());
            } else {
                attrs.push("style=filled".into());
                attrs.push("fillcolor=white".into());
            }
        }
        if map.root().map(|r| owner[r] == v).unwrap_or(false) {
            attrs.push("peripheries=2".into());
        }
        writeln!(out, "{indent}{prefix}{v} [{}];", attrs.join(", ")).expect("string write");
    }
    let connector = if arrows.is_some() { "->" } else { "--" };
    for h in 0..map.n_half() {
        let twin = map.alpha().apply(h);
        if twin < h {
            continue;
        }
        let (mut tail, mut head) = (h, twin);
        if let Some(ingoing) = arrows {
            if ingoing[h] {
                (tail, head) = (twin, h);
            }
        }
        let mut attrs = vec![format!("label=\"{}|{}\"", tail, head)];
        if map.root().map(|r| r == h || r == twin).unwrap_or(false) {
            attrs.push("color=red".into());
        }
        if let Some(bold) = bold {
            if bold[h] {
                attrs.push("penwidth=3".into());
            }
        }
        writeln!(
            out,
            "{indent}{prefix}{} {connector} {prefix}{} [{}];",
            owner[tail],
            owner[head],
            attrs.join(", ")
        )
        .expect("string write");
    }
}

fn caption(map: &RootedMap) -> String {
    match map.root() {
        Some(r) => format!("root half-edge {r}"),
        None => "empty map".into(),
    }
}

/// A plain map as an undirected DOT graph.
pub fn map_dot(map: &RootedMap) -> String {
    let mut out = String::from("graph {\n");
    writeln!(out, "  label=\"{}\";", caption(map)).expect("string write");
    body(&mut out, map, "v", None, None, None, "  ");
    out.push_str("}\n");
    out
}

/// A map with its distinguished subset drawn bold.
pub fn spanned_dot(sm: &SpannedMap) -> String {
    let mut out = String::from("graph {\n");
    writeln!(
        out,
        "  label=\"{}; distinguished subset bold\";",
        caption(sm.map())
    )
    .expect("string write");
    body(&mut out, sm.map(), "v", None, Some(sm.mask()), None, "  ");
    out.push_str("}\n");
    out
}

/// An oriented map as a DOT digraph (arrows point at the ingoing half).
pub fn oriented_dot(om: &OrientedMap) -> String {
    let mut out = String::from("digraph {\n");
    writeln!(out, "  label=\"{}\";", caption(om.map())).expect("string write");
    body(&mut out, om.map(), "v", None, None, Some(om.mask()), "  ");
    out.push_str("}\n");
    out
}

/// A tree/mobile pair as two clusters.
pub fn pair_dot(pair: &TreeMobilePair) -> String {
    let mut out = String::from("graph {\n");
    out.push_str("  subgraph cluster_tree {\n    label=\"tree\";\n");
    body(&mut out, pair.tree(), "t", None, None, None, "    ");
    out.push_str("  }\n");
    out.push_str("  subgraph cluster_mobile {\n    label=\"mobile\";\n");
    let colours = pair.mobile_colours();
    body(&mut out, pair.mobile(), "m", Some(&colours), None, None, "    ");
    out.push_str("  }\n}\n");
    out
}

fn mobile_with_caption(mobile: &RootedMap, caption_line: &str) -> String {
    let mut out = String::from("graph {\n");
    writeln!(out, "  label=\"{caption_line}\";").expect("string write");
    let colours = mobile
        .bipartition()
        .expect("mobiles are bipartite");
    body(&mut out, mobile, "m", Some(&colours), None, None, "  ");
    out.push_str("}\n");
    out
}

/// A corner-labelled mobile; the clockwise label sequence is the caption.
pub fn labelled_dot(lm: &CornerLabelledMobile) -> String {
    let labels: Vec<String> = lm.labels().iter().map(|l| l.to_string()).collect();
    mobile_with_caption(
        lm.mobile(),
        &format!("corner labels (clockwise): {}", labels.join(" ")),
    )
}

/// A blossoming mobile; the clockwise bud counts are the caption.
pub fn blossoming_dot(bm: &BlossomingMobile) -> String {
    let buds: Vec<String> = bm.buds().iter().map(|b| b.to_string()).collect();
    mobile_with_caption(
        bm.mobile(),
        &format!("bud counts (clockwise): {}", buds.join(" ")),
    )
}

/// DOT for any parsed document.
pub fn document_dot(doc: &Document) -> String {
    match doc {
        Document::Map(map) => map_dot(map),
        Document::Spanned(sm) => spanned_dot(sm),
        Document::Oriented(om) => oriented_dot(om),
        Document::Pair(pair) => pair_dot(pair),
        Document::Labelled(lm) => labelled_dot(lm),
        Document::Blossoming(bm) => blossoming_dot(bm),
    }
}

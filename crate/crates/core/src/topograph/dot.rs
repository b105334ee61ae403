use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use super::{ball_around, farey_label, EdgeKey, Superbase, TopographEdge};
use crate::exact::format_rational;
use crate::forms::BinaryQuadraticForm;
use crate::lattice::LatticeVector;

/// Layers of topograph drawn around the river.
pub const DEFAULT_DOT_DEPTH: usize = 6;

/// Graphviz rendering of the topograph within `depth` edges of `river`.
/// Superbases are drawn as points with river edges in bold. Each region is
/// a `p/q : value` label joined by dotted lines to its superbases.
pub fn to_dot(q: &BinaryQuadraticForm, river: &[TopographEdge], depth: usize) -> String {
    let on_river: BTreeSet<EdgeKey> = river.iter().map(|e| e.key()).collect();
    let ball = ball_around(on_river.iter().cloned(), depth);

    let mut superbases: BTreeMap<Superbase, usize> = BTreeMap::new();
    let mut regions: BTreeMap<LatticeVector, BTreeSet<usize>> = BTreeMap::new();
    let mut lines = Vec::new();
    for key in ball.keys() {
        let (u, v) = key.regions();
        let mut ends = [0; 2];
        for (slot, sb) in [Superbase::new(u, v), Superbase::new(u, &-v)]
            .into_iter()
            .enumerate()
        {
            let next = superbases.len();
            let id = *superbases.entry(sb.clone()).or_insert(next);
            ends[slot] = id;
            for r in sb.regions() {
                regions.entry(r.clone()).or_default().insert(id);
            }
        }
        lines.push((ends, on_river.contains(key)));
    }

    let mut out = String::from("graph topograph {\n");
    out.push_str("  node [shape=point];\n");
    for id in superbases.values() {
        let _ = writeln!(out, "  s{id};");
    }
    for ([a, b], bold) in &lines {
        let style = if *bold { " [style=bold, penwidth=3]" } else { "" };
        let _ = writeln!(out, "  s{a} -- s{b}{style};");
    }
    for (i, (region, touching)) in regions.iter().enumerate() {
        let label = farey_label(region).map(|f| f.to_string()).unwrap_or_default();
        let value = format_rational(&q.evaluate(region));
        let _ = writeln!(out, "  r{i} [shape=plaintext, label=\"{label} : {value}\"];");
        for id in touching {
            let _ = writeln!(out, "  r{i} -- s{id} [style=dotted];");
        }
    }
    out.push_str("}\n");
    out
}

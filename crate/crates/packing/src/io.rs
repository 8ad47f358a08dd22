//! Line-oriented text formats: graphs, colorings, transfer-digraph
//! dumps, and flat key-value reports. Everything is diff-friendly and
//! round-trips exactly.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{build_graph, Graph};
use crate::model::{Coloring, PackingSequence, SequenceOrigin};
use crate::transfer::TransferDigraph;

/// Graph format:
/// ```text
/// g <num_vertices> <num_edges>
/// n <index> <label>
/// e <label1> <label2>
/// ```
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "g {} {}", g.vertex_count(), g.edge_count());
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "n {} {}", v, g.label(v));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", g.label(u), g.label(v));
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty file".into()))?;
    let mut it = header.split_whitespace();
    if it.next() != Some("g") {
        return Err(Error::Parse("expected header line `g <nv> <ne>`".into()));
    }
    let nv: usize = parse_field(it.next(), "vertex count")?;
    let ne: usize = parse_field(it.next(), "edge count")?;
    let mut labels: Vec<Option<String>> = vec![None; nv];
    let mut edges: Vec<(String, String)> = Vec::with_capacity(ne);
    for line in lines {
        let mut it = line.split_whitespace();
        match it.next() {
            Some("n") => {
                let idx: usize = parse_field(it.next(), "vertex index")?;
                // the label may be empty (S^0's single vertex)
                let label = it.next().unwrap_or("").to_string();
                if idx >= nv {
                    return Err(Error::Parse(format!("vertex index {idx} out of range")));
                }
                if labels[idx].is_some() {
                    return Err(Error::Parse(format!("vertex {idx} declared twice")));
                }
                labels[idx] = Some(label);
            }
            Some("e") => {
                let a = it
                    .next()
                    .ok_or_else(|| Error::Parse("edge needs two labels".into()))?;
                let b = it
                    .next()
                    .ok_or_else(|| Error::Parse("edge needs two labels".into()))?;
                edges.push((a.to_string(), b.to_string()));
            }
            Some(other) => {
                return Err(Error::Parse(format!("unknown record `{other}`")));
            }
            None => {}
        }
    }
    let labels: Vec<String> = labels
        .into_iter()
        .enumerate()
        .map(|(i, l)| l.ok_or_else(|| Error::Parse(format!("vertex {i} missing"))))
        .collect::<Result<_>>()?;
    let g = build_graph(&labels, &edges)?;
    if g.edge_count() != ne {
        return Err(Error::Parse(format!(
            "header claims {ne} edges, found {}",
            g.edge_count()
        )));
    }
    Ok(g)
}

fn parse_field<T: std::str::FromStr>(field: Option<&str>, what: &str) -> Result<T> {
    field
        .ok_or_else(|| Error::Parse(format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::Parse(format!("bad {what}")))
}

/// Coloring format:
/// ```text
/// c <k> <d> <n>            (or: c <k> explicit s_1 ... s_k)
/// <label> <color>
/// ```
pub fn write_coloring(g: &Graph, c: &Coloring, s: &PackingSequence) -> String {
    let mut out = String::new();
    match s.origin() {
        SequenceOrigin::Dn { d, n } => {
            let _ = writeln!(out, "c {} {} {}", c.k(), d, n);
        }
        SequenceOrigin::Explicit => {
            let entries: Vec<String> = s.entries().iter().map(|e| e.to_string()).collect();
            let _ = writeln!(out, "c {} explicit {}", c.k(), entries.join(" "));
        }
    }
    for v in 0..c.len() {
        let _ = writeln!(out, "{} {}", g.label(v), c.color(v));
    }
    out
}

/// Parsed coloring file: the sequence plus label -> color entries.
pub struct ColoringFile {
    pub k: u32,
    pub sequence: PackingSequence,
    pub colors: HashMap<String, u32>,
}

impl ColoringFile {
    /// Match the entries against a graph's labels; every label must
    /// appear exactly once.
    pub fn into_coloring(self, g: &Graph) -> Result<Coloring> {
        if self.colors.len() != g.vertex_count() {
            return Err(Error::Parse(format!(
                "coloring has {} entries, graph has {} vertices",
                self.colors.len(),
                g.vertex_count()
            )));
        }
        let mut assignment = vec![0u32; g.vertex_count()];
        for (label, color) in &self.colors {
            let v = g
                .index_of(label)
                .ok_or_else(|| Error::Parse(format!("label `{label}` not in graph")))?;
            assignment[v] = *color;
        }
        Coloring::new(assignment, self.k)
    }
}

pub fn parse_coloring(text: &str) -> Result<ColoringFile> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty file".into()))?;
    let mut it = header.split_whitespace();
    if it.next() != Some("c") {
        return Err(Error::Parse("expected header line `c ...`".into()));
    }
    let k: u32 = parse_field(it.next(), "color count")?;
    let second = it
        .next()
        .ok_or_else(|| Error::Parse("missing sequence spec".into()))?;
    let sequence = if second == "explicit" {
        let entries: Vec<u32> = it
            .map(|t| t.parse().map_err(|_| Error::Parse("bad sequence entry".into())))
            .collect::<Result<_>>()?;
        if entries.len() != k as usize {
            return Err(Error::Parse(format!(
                "explicit sequence has {} entries, expected {k}",
                entries.len()
            )));
        }
        PackingSequence::explicit(entries)?
    } else {
        let d: u32 = second.parse().map_err(|_| Error::Parse("bad d".into()))?;
        let n: u32 = parse_field(it.next(), "n")?;
        PackingSequence::dn(d, n, k)?
    };
    let mut colors = HashMap::new();
    for line in lines {
        let mut it = line.split_whitespace();
        let (label, color) = match (it.next(), it.next()) {
            (Some(l), Some(c)) => (l.to_string(), c),
            // a lone color means the empty label (S^0)
            (Some(c), None) => (String::new(), c),
            _ => return Err(Error::Parse("bad coloring line".into())),
        };
        let color: u32 = color
            .parse()
            .map_err(|_| Error::Parse("bad color value".into()))?;
        if colors.insert(label.clone(), color).is_some() {
            return Err(Error::Parse(format!("label `{label}` colored twice")));
        }
    }
    Ok(ColoringFile {
        k,
        sequence,
        colors,
    })
}

/// Transfer digraph dump:
/// ```text
/// D <num_vertices> <num_arcs> <b>
/// <18 colors per vertex line>
/// <src> <dst>  (one line per arc)
/// ```
pub fn write_digraph_dump(dg: &TransferDigraph) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "D {} {} {}",
        dg.num_windows(),
        dg.num_arcs(),
        dg.b
    );
    for w in &dg.windows {
        let colors: Vec<String> = w.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(out, "{}", colors.join(" "));
    }
    for u in 0..dg.num_windows() {
        for &v in dg.digraph.successors(u) {
            let _ = writeln!(out, "{u} {v}");
        }
    }
    out
}

/// Flat key-value report with stable key order.
#[derive(Debug, Default, Clone)]
pub struct Report {
    entries: Vec<(String, String)>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Report::default();
        r.push("command", command);
        r
    }

    pub fn push(&mut self, key: &str, value: impl ToString) {
        self.entries.push((key.to_string(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            let _ = writeln!(out, "{k} {v}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_h, gen_hp, gen_sierpinski, gen_t};
    use crate::graph::all_pairs_distances;
    use crate::model::verify_coloring;

    fn roundtrip(g: &Graph) {
        let text = write_graph(g);
        let back = parse_graph(&text).unwrap();
        assert_eq!(back.labels(), g.labels());
        assert_eq!(back.edges(), g.edges());
        assert_eq!(back.edge_count(), g.edge_count());
    }

    #[test]
    fn graph_roundtrip_families() {
        for k in 0..=4 {
            roundtrip(&gen_sierpinski(k));
        }
        for k in 1..=4 {
            roundtrip(&gen_t(k).unwrap());
        }
        for r in 2..=6 {
            roundtrip(&gen_h(r).unwrap());
            roundtrip(&gen_hp(r).unwrap());
        }
    }

    #[test]
    fn coloring_roundtrip() {
        let g = gen_sierpinski(2);
        let dm = all_pairs_distances(&g);
        let s = PackingSequence::dn(1, 1, 5).unwrap();
        let res = crate::solver::solve_decision(
            &g,
            &dm,
            &s,
            &crate::solver::SearchConfig::default(),
        )
        .unwrap();
        let c = res.coloring.unwrap();
        let text = write_coloring(&g, &c, &s);
        let parsed = parse_coloring(&text).unwrap();
        assert_eq!(parsed.k, 5);
        assert_eq!(parsed.sequence.entries(), s.entries());
        let back = parsed.into_coloring(&g).unwrap();
        assert_eq!(back.assignment(), c.assignment());
        assert!(verify_coloring(&g, &dm, &s, &back).unwrap().is_empty());
    }

    #[test]
    fn explicit_sequence_roundtrip() {
        let g = gen_sierpinski(1);
        let s = PackingSequence::explicit(vec![1, 2, 2]).unwrap();
        let c = Coloring::new(vec![1, 2, 3], 3).unwrap();
        let text = write_coloring(&g, &c, &s);
        assert!(text.starts_with("c 3 explicit 1 2 2\n"));
        let parsed = parse_coloring(&text).unwrap();
        assert_eq!(parsed.sequence.entries(), &[1, 2, 2]);
        assert_eq!(parsed.into_coloring(&g).unwrap().assignment(), &[1, 2, 3]);
    }

    #[test]
    fn s0_empty_label_roundtrip() {
        let g = gen_sierpinski(0);
        roundtrip(&g);
        let s = PackingSequence::dn(1, 1, 1).unwrap();
        let c = Coloring::new(vec![1], 1).unwrap();
        let text = write_coloring(&g, &c, &s);
        let parsed = parse_coloring(&text).unwrap();
        assert_eq!(parsed.into_coloring(&g).unwrap().assignment(), &[1]);
    }

    #[test]
    fn parse_errors() {
        assert!(parse_graph("").is_err());
        assert!(parse_graph("x 1 0").is_err());
        assert!(parse_graph("g 1 0\nn 5 a").is_err());
        assert!(parse_graph("g 2 1\nn 0 a\nn 1 b").is_err()); // edge count mismatch
        assert!(parse_coloring("c 2 0 1\na 1").is_err()); // bad d
    }

    #[test]
    fn report_stable_order() {
        let mut r = Report::new("solve");
        r.push("status", "feasible");
        r.push("k", 5);
        assert_eq!(r.render(), "command solve\nstatus feasible\nk 5\n");
        assert_eq!(r.get("k"), Some("5"));
    }
}

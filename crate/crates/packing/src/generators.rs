//! Generators for the graph families under study: base-3 Sierpinski graphs
//! S^k, their closures T^k, and the 3-regular H-graphs H(r) together with
//! the path variant H_P(c).
//!
//! Sierpinski vertices are ternary strings of length k, listed in
//! lexicographic order. H-graph vertices are labeled `u:i`, `v:i`, `w:i`.

use crate::error::{Error, Result};
use crate::graph::{build_graph, Graph};

/// All ternary strings of length k, lexicographically sorted.
fn ternary_labels(k: u32) -> Vec<String> {
    let mut out = vec![String::new()];
    for _ in 0..k {
        let mut next = Vec::with_capacity(out.len() * 3);
        for s in &out {
            for d in ['0', '1', '2'] {
                let mut t = s.clone();
                t.push(d);
                next.push(t);
            }
        }
        out = next;
    }
    out
}

fn sierpinski_edges(k: u32) -> Vec<(String, String)> {
    if k == 0 {
        return Vec::new();
    }
    let mut edges = Vec::new();
    for (a, b) in sierpinski_edges(k - 1) {
        for i in ['0', '1', '2'] {
            edges.push((format!("{i}{a}"), format!("{i}{b}")));
        }
    }
    // Connector edges {i j^{k-1}, j i^{k-1}} for i != j.
    for i in ['0', '1', '2'] {
        for j in ['0', '1', '2'] {
            if i < j {
                let a: String = std::iter::once(i)
                    .chain(std::iter::repeat_n(j, k as usize - 1))
                    .collect();
                let b: String = std::iter::once(j)
                    .chain(std::iter::repeat_n(i, k as usize - 1))
                    .collect();
                edges.push((a, b));
            }
        }
    }
    edges
}

/// Base-3 Sierpinski graph S^k on 3^k vertices.
pub fn gen_sierpinski(k: u32) -> Graph {
    let labels = ternary_labels(k);
    let edges = sierpinski_edges(k);
    build_graph(&labels, &edges).expect("sierpinski construction is well-formed")
}

/// The extreme vertex i^k of S^k.
pub fn extreme_label(i: u8, k: u32) -> String {
    std::iter::repeat_n(char::from(b'0' + i), k as usize)
        .collect()
}

/// T^k: S^k plus the three edges joining its extreme vertices.
pub fn gen_t(k: u32) -> Result<Graph> {
    if k < 1 {
        return Err(Error::ParamTooSmall("T^k needs k >= 1".into()));
    }
    let labels = ternary_labels(k);
    let mut edges = sierpinski_edges(k);
    edges.push((extreme_label(0, k), extreme_label(1, k)));
    edges.push((extreme_label(1, k), extreme_label(2, k)));
    edges.push((extreme_label(0, k), extreme_label(2, k)));
    build_graph(&labels, &edges)
}

/// Role of an H-graph vertex: the top cycle (u), middle row (v), or
/// bottom cycle (w).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HRole {
    U,
    V,
    W,
}

impl HRole {
    fn letter(self) -> char {
        match self {
            HRole::U => 'u',
            HRole::V => 'v',
            HRole::W => 'w',
        }
    }
}

/// Canonical label of an H-graph vertex.
pub fn h_label(role: HRole, index: usize) -> String {
    format!("{}:{}", role.letter(), index)
}

fn h_labels(columns: usize) -> Vec<String> {
    let mut labels = Vec::with_capacity(6 * columns);
    for role in [HRole::U, HRole::V, HRole::W] {
        for i in 0..2 * columns {
            labels.push(h_label(role, i));
        }
    }
    labels
}

fn h_common_edges(columns: usize) -> Vec<(String, String)> {
    let m = 2 * columns;
    let mut edges = Vec::new();
    // Path edges of the u-row and w-row (wrap edges added by gen_h only).
    for i in 0..m - 1 {
        edges.push((h_label(HRole::U, i), h_label(HRole::U, i + 1)));
        edges.push((h_label(HRole::W, i), h_label(HRole::W, i + 1)));
    }
    // Vertical edges u_i - v_i - w_i.
    for i in 0..m {
        edges.push((h_label(HRole::U, i), h_label(HRole::V, i)));
        edges.push((h_label(HRole::V, i), h_label(HRole::W, i)));
    }
    // Rungs v_{2i} - v_{2i+1}.
    for i in 0..columns {
        edges.push((h_label(HRole::V, 2 * i), h_label(HRole::V, 2 * i + 1)));
    }
    edges
}

/// H-graph H(r): 3-regular, order 6r.
pub fn gen_h(r: usize) -> Result<Graph> {
    if r < 2 {
        return Err(Error::ParamTooSmall("H(r) needs r >= 2".into()));
    }
    let mut edges = h_common_edges(r);
    let m = 2 * r;
    edges.push((h_label(HRole::U, m - 1), h_label(HRole::U, 0)));
    edges.push((h_label(HRole::W, m - 1), h_label(HRole::W, 0)));
    build_graph(&h_labels(r), &edges)
}

/// H_P(c): H(c) with the two wrap edges u_0 u_{2c-1} and w_0 w_{2c-1}
/// removed, i.e. the path-shaped variant on c columns.
pub fn gen_hp(c: usize) -> Result<Graph> {
    if c < 2 {
        return Err(Error::ParamTooSmall("H_P(c) needs c >= 2".into()));
    }
    build_graph(&h_labels(c), &h_common_edges(c))
}

/// The 6 labels of column i: {u_{2i}, u_{2i+1}, v_{2i}, v_{2i+1}, w_{2i},
/// w_{2i+1}}. Columns 0..r-1 partition V(H(r)).
pub fn column(i: usize, columns: usize) -> Result<Vec<String>> {
    if i >= columns {
        return Err(Error::ColumnOutOfRange {
            index: i,
            count: columns,
        });
    }
    Ok(vec![
        h_label(HRole::U, 2 * i),
        h_label(HRole::U, 2 * i + 1),
        h_label(HRole::V, 2 * i),
        h_label(HRole::V, 2 * i + 1),
        h_label(HRole::W, 2 * i),
        h_label(HRole::W, 2 * i + 1),
    ])
}

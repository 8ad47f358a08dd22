//! Immutable undirected graphs with stable string labels, plus all-pairs
//! shortest-path distances computed once and shared read-only.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Sentinel distance for disconnected pairs. Strictly greater than any
/// achievable distance, so "distance > s" constraints hold vacuously
/// across components.
pub const INFINITE: u32 = u32::MAX;

/// Simple undirected graph. Vertex indices are dense 0-based integers;
/// labels are only used for I/O and generator semantics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    label_index: HashMap<String, usize>,
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.label_index.get(label).copied()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Undirected edges as (u, v) index pairs with u < v, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// Builds a graph from labels and label pairs. Adjacency is normalized:
/// sorted, duplicate edges collapsed.
pub fn build_graph<S: AsRef<str>>(labels: &[S], edges: &[(S, S)]) -> Result<Graph> {
    let mut label_index = HashMap::with_capacity(labels.len());
    let mut owned = Vec::with_capacity(labels.len());
    for l in labels {
        let l = l.as_ref().to_string();
        if label_index.insert(l.clone(), owned.len()).is_some() {
            return Err(Error::DuplicateLabel(l));
        }
        owned.push(l);
    }
    let mut adjacency = vec![Vec::new(); owned.len()];
    for (a, b) in edges {
        let a = a.as_ref();
        let b = b.as_ref();
        let &ia = label_index
            .get(a)
            .ok_or_else(|| Error::UnknownVertex(a.to_string()))?;
        let &ib = label_index
            .get(b)
            .ok_or_else(|| Error::UnknownVertex(b.to_string()))?;
        if ia == ib {
            return Err(Error::SelfLoop(a.to_string()));
        }
        adjacency[ia].push(ib);
        adjacency[ib].push(ia);
    }
    let mut edge_count = 0;
    for list in adjacency.iter_mut() {
        list.sort_unstable();
        list.dedup();
        edge_count += list.len();
    }
    Ok(Graph {
        labels: owned,
        label_index,
        adjacency,
        edge_count: edge_count / 2,
    })
}

/// All-pairs shortest-path distances of an unweighted graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    /// Largest finite entry, or None for the empty graph.
    pub fn max_finite(&self) -> Option<u32> {
        self.dist.iter().copied().filter(|&d| d != INFINITE).max()
    }

    pub fn is_connected(&self) -> bool {
        self.dist.iter().all(|&d| d != INFINITE)
    }
}

/// BFS from every vertex. Disconnected pairs get [`INFINITE`].
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut dist = vec![INFINITE; n * n];
    let mut queue = Vec::with_capacity(n);
    for src in 0..n {
        let row = &mut dist[src * n..(src + 1) * n];
        row[src] = 0;
        queue.clear();
        queue.push(src);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let du = row[u];
            for &v in g.neighbors(u) {
                if row[v] == INFINITE {
                    row[v] = du + 1;
                    queue.push(v);
                }
            }
        }
    }
    DistanceMatrix { n, dist }
}

/// Maximum finite distance. Errors if the graph is disconnected.
pub fn diameter(g: &Graph) -> Result<u32> {
    let dm = all_pairs_distances(g);
    if !dm.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(dm.max_finite().unwrap_or(0))
}

/// Diameter from a precomputed matrix.
pub fn diameter_of(dm: &DistanceMatrix) -> Result<u32> {
    if !dm.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(dm.max_finite().unwrap_or(0))
}

//! Packing sequences, colorings, and exact verification of the packing
//! property: vertices sharing color i must be pairwise at distance
//! greater than s_i.

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

/// How a sequence was produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceOrigin {
    Explicit,
    /// s_i = d + floor((i-1)/n)
    Dn { d: u32, n: u32 },
}

/// A nondecreasing sequence S = (s_1, ..., s_k) of positive integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingSequence {
    entries: Vec<u32>,
    origin: SequenceOrigin,
}

impl PackingSequence {
    /// Explicit sequence; must be nondecreasing with all entries >= 1.
    pub fn explicit(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::BadParam("sequence must be nonempty".into()));
        }
        if entries.contains(&0) {
            return Err(Error::BadParam("sequence entries must be >= 1".into()));
        }
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::BadParam("sequence must be nondecreasing".into()));
        }
        Ok(PackingSequence {
            entries,
            origin: SequenceOrigin::Explicit,
        })
    }

    /// The (d,n) family: s_i = d + floor((i-1)/n), length k.
    pub fn dn(d: u32, n: u32, k: u32) -> Result<Self> {
        if d < 1 || n < 1 || k < 1 {
            return Err(Error::BadParam("d, n, k must all be >= 1".into()));
        }
        let entries = (1..=k).map(|i| d + (i - 1) / n).collect();
        Ok(PackingSequence {
            entries,
            origin: SequenceOrigin::Dn { d, n },
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// s value for a 1-based color.
    #[inline]
    pub fn s(&self, color: u32) -> u32 {
        self.entries[(color - 1) as usize]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn origin(&self) -> &SequenceOrigin {
        &self.origin
    }

    /// Same entries truncated or extended to length k (extension only for
    /// (d,n) sequences, where the formula continues).
    pub fn resized(&self, k: u32) -> Result<Self> {
        match self.origin {
            SequenceOrigin::Dn { d, n } => PackingSequence::dn(d, n, k),
            SequenceOrigin::Explicit => {
                if (k as usize) > self.entries.len() {
                    return Err(Error::BadParam(
                        "cannot extend an explicit sequence".into(),
                    ));
                }
                PackingSequence::explicit(self.entries[..k as usize].to_vec())
            }
        }
    }
}

/// Total assignment of colors 1..k to the vertices of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    /// Color per vertex index, values in 1..=k.
    assignment: Vec<u32>,
    k: u32,
}

impl Coloring {
    pub fn new(assignment: Vec<u32>, k: u32) -> Result<Self> {
        if assignment.iter().any(|&c| c < 1 || c > k) {
            return Err(Error::BadParam(format!(
                "colors must lie in 1..={k}"
            )));
        }
        Ok(Coloring { assignment, k })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    #[inline]
    pub fn color(&self, v: usize) -> u32 {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[u32] {
        &self.assignment
    }

    pub fn max_color_used(&self) -> u32 {
        self.assignment.iter().copied().max().unwrap_or(0)
    }
}

/// Color classes X_1..X_k; empty classes are retained.
pub fn color_classes(c: &Coloring) -> Vec<Vec<usize>> {
    let mut classes = vec![Vec::new(); c.k() as usize];
    for (v, &col) in c.assignment().iter().enumerate() {
        classes[(col - 1) as usize].push(v);
    }
    classes
}

/// A witness that two same-colored vertices sit too close.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub color: u32,
    /// The bound s_color that the pair distance must exceed.
    pub required_gt: u32,
    /// The actual distance d(u, v).
    pub actual: u32,
}

/// Returns all violating pairs, ordered lexicographically by
/// (color, u, v). Empty result iff `c` is an S-packing coloring of `g`.
pub fn verify_coloring(
    g: &Graph,
    dm: &DistanceMatrix,
    s: &PackingSequence,
    c: &Coloring,
) -> Result<Vec<Violation>> {
    assert_eq!(g.vertex_count(), dm.n(), "distance matrix mismatch");
    assert_eq!(g.vertex_count(), c.len(), "coloring covers every vertex");
    let max_used = c.max_color_used();
    if max_used as usize > s.len() {
        return Err(Error::ColorOutOfRange {
            color: max_used,
            len: s.len(),
        });
    }
    let mut violations = Vec::new();
    for (class_idx, class) in color_classes(c).iter().enumerate() {
        let color = class_idx as u32 + 1;
        if class.is_empty() {
            continue;
        }
        let bound = s.s(color);
        for (a, &u) in class.iter().enumerate() {
            for &v in &class[a + 1..] {
                let d = dm.get(u, v);
                if d <= bound {
                    violations.push(Violation {
                        u,
                        v,
                        color,
                        required_gt: bound,
                        actual: d,
                    });
                }
            }
        }
    }
    Ok(violations)
}

/// True iff the coloring has no violations. Same contract as
/// [`verify_coloring`] but short-circuits.
pub fn is_valid_coloring(
    g: &Graph,
    dm: &DistanceMatrix,
    s: &PackingSequence,
    c: &Coloring,
) -> Result<bool> {
    let max_used = c.max_color_used();
    if max_used as usize > s.len() {
        return Err(Error::ColorOutOfRange {
            color: max_used,
            len: s.len(),
        });
    }
    let _ = g;
    for (class_idx, class) in color_classes(c).iter().enumerate() {
        let bound = s.s(class_idx as u32 + 1);
        for (a, &u) in class.iter().enumerate() {
            for &v in &class[a + 1..] {
                if dm.get(u, v) <= bound {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

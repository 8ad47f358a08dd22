//! Export of the packing-coloring feasibility problem as a standard
//! assignment-model integer program in LP text format.
//!
//! Binaries x_{v,c}; one assignment row per vertex (sum_c x_{v,c} = 1)
//! and one conflict row x_{u,c} + x_{v,c} <= 1 per color c and pair
//! u != v with d(u,v) <= s_c. Objective is a feasibility constant.

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::model::PackingSequence;

/// Variable and constraint counts of an exported model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IlpStats {
    pub variables: usize,
    pub assignment_rows: usize,
    pub conflict_rows: usize,
}

fn var_name(label: &str, color: u32) -> String {
    // LP variable names cannot contain ':'; labels like "u:3" are
    // sanitized. The trailing _<color> keeps names unambiguous.
    let safe: String = label
        .chars()
        .map(|ch| if ch.is_alphanumeric() { ch } else { '_' })
        .collect();
    format!("x_{safe}_{color}")
}

/// Emits the LP text model for "does an S-packing k-coloring of g
/// exist", using the first k entries of `s`.
pub fn export_ilp(
    g: &Graph,
    dm: &DistanceMatrix,
    s: &PackingSequence,
    k: u32,
) -> Result<(String, IlpStats)> {
    if k as usize > s.len() {
        return Err(Error::ColorOutOfRange {
            color: k,
            len: s.len(),
        });
    }
    if k < 1 {
        return Err(Error::BadParam("k must be >= 1".into()));
    }
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::BadParam("graph has no vertices".into()));
    }
    let mut out = String::new();
    out.push_str("Minimize\n");
    // constant objective written as a zero-coefficient term
    out.push_str(&format!(" obj: 0 {}\n", var_name(g.label(0), 1)));
    out.push_str("Subject To\n");
    let mut assignment_rows = 0;
    for v in 0..n {
        let terms: Vec<String> = (1..=k).map(|c| var_name(g.label(v), c)).collect();
        out.push_str(&format!(" assign_{v}: {} = 1\n", terms.join(" + ")));
        assignment_rows += 1;
    }
    let mut conflict_rows = 0;
    for c in 1..=k {
        let bound = s.s(c);
        for u in 0..n {
            for v in (u + 1)..n {
                if dm.get(u, v) <= bound {
                    out.push_str(&format!(
                        " conf_{c}_{u}_{v}: {} + {} <= 1\n",
                        var_name(g.label(u), c),
                        var_name(g.label(v), c)
                    ));
                    conflict_rows += 1;
                }
            }
        }
    }
    out.push_str("Binary\n");
    for v in 0..n {
        for c in 1..=k {
            out.push(' ');
            out.push_str(&var_name(g.label(v), c));
            out.push('\n');
        }
    }
    out.push_str("End\n");
    Ok((
        out,
        IlpStats {
            variables: n * k as usize,
            assignment_rows,
            conflict_rows,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_sierpinski;
    use crate::graph::{all_pairs_distances, build_graph};

    #[test]
    fn k2_single_color() {
        let g = build_graph(&["a", "b"], &[("a", "b")]).unwrap();
        let dm = all_pairs_distances(&g);
        let s = PackingSequence::explicit(vec![1]).unwrap();
        let (text, stats) = export_ilp(&g, &dm, &s, 1).unwrap();
        assert_eq!(stats.variables, 2);
        assert_eq!(stats.assignment_rows, 2);
        assert_eq!(stats.conflict_rows, 1);
        assert!(text.starts_with("Minimize\n"));
        assert!(text.contains("Subject To\n"));
        assert!(text.contains("Binary\n"));
        assert!(text.ends_with("End\n"));
    }

    #[test]
    fn k3_conflict_rows() {
        let g = build_graph(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        let dm = all_pairs_distances(&g);
        let s = PackingSequence::explicit(vec![1, 2, 3]).unwrap();
        let (_, stats) = export_ilp(&g, &dm, &s, 3).unwrap();
        assert_eq!(stats.variables, 9);
        assert_eq!(stats.assignment_rows, 3);
        // every pair conflicts under every color
        assert_eq!(stats.conflict_rows, 9);
    }

    #[test]
    fn s2_variable_count() {
        let g = gen_sierpinski(2);
        let dm = all_pairs_distances(&g);
        let s = PackingSequence::dn(1, 1, 5).unwrap();
        let (_, stats) = export_ilp(&g, &dm, &s, 5).unwrap();
        assert_eq!(stats.variables, 45);
    }

    #[test]
    fn conflict_rows_match_pair_enumeration() {
        let g = gen_sierpinski(2);
        let dm = all_pairs_distances(&g);
        let s = PackingSequence::dn(3, 1, 9).unwrap();
        let (_, stats) = export_ilp(&g, &dm, &s, 9).unwrap();
        // independent double-loop count
        let mut expect = 0;
        for c in 1..=9u32 {
            for u in 0..9 {
                for v in (u + 1)..9 {
                    if dm.get(u, v) <= s.s(c) {
                        expect += 1;
                    }
                }
            }
        }
        assert_eq!(stats.conflict_rows, expect);
    }

    #[test]
    fn k_larger_than_sequence_rejected() {
        let g = build_graph(&["a", "b"], &[("a", "b")]).unwrap();
        let dm = all_pairs_distances(&g);
        let s = PackingSequence::explicit(vec![1]).unwrap();
        assert!(matches!(
            export_ilp(&g, &dm, &s, 2),
            Err(Error::ColorOutOfRange { .. })
        ));
    }
}

//! Lifting a (d,n)-packing b-coloring of T^ell to S^k for any k >= ell.
//!
//! The production path colors a vertex by the color of its length-ell
//! label suffix; the literal per-copy recursion is kept as a cross-check
//! oracle. The lift is sound when d + floor((b-1)/n) <= 2^ell, and every
//! lifted coloring is machine-verified rather than trusted.

use crate::error::{Error, Result};
use crate::generators::{gen_sierpinski, gen_t};
use crate::graph::all_pairs_distances;
use crate::model::{verify_coloring, Coloring, PackingSequence};

/// A verified base coloring of T^ell together with the lift parameters.
#[derive(Debug, Clone)]
pub struct LiftCertificate {
    pub ell: u32,
    pub b: u32,
    pub d: u32,
    pub n: u32,
    /// Coloring of T^ell, indexed by the lexicographic ternary labels.
    pub base: Coloring,
    pub condition_ok: bool,
}

/// True iff d + floor((b-1)/n) <= 2^ell.
pub fn check_lift_condition(ell: u32, b: u32, d: u32, n: u32) -> bool {
    debug_assert!(ell >= 1 && b >= 1 && d >= 1 && n >= 1);
    u64::from(d) + u64::from((b - 1) / n) <= 1u64 << ell
}

impl LiftCertificate {
    /// Checks the side condition and verifies the base coloring against
    /// T^ell with the sequence s_i = d + floor((i-1)/n).
    pub fn new(ell: u32, d: u32, n: u32, base: Coloring) -> Result<Self> {
        let b = base.k();
        if ell < 1 || d < 1 || n < 1 || b < 1 {
            return Err(Error::BadParam("lift parameters must be >= 1".into()));
        }
        let t = gen_t(ell)?;
        if base.len() != t.vertex_count() {
            return Err(Error::BadParam(format!(
                "base coloring has {} entries, T^{ell} has {} vertices",
                base.len(),
                t.vertex_count()
            )));
        }
        let dm = all_pairs_distances(&t);
        let s = PackingSequence::dn(d, n, b)?;
        let violations = verify_coloring(&t, &dm, &s, &base)?;
        if !violations.is_empty() {
            return Err(Error::InvalidBase(violations.len()));
        }
        let condition_ok = check_lift_condition(ell, b, d, n);
        Ok(LiftCertificate {
            ell,
            b,
            d,
            n,
            base,
            condition_ok,
        })
    }
}

/// Closed-form lift: the vertex x_1...x_k of S^k takes the base color of
/// its suffix x_{k-ell+1}...x_k.
pub fn lift_coloring(cert: &LiftCertificate, k: u32) -> Result<Coloring> {
    if !cert.condition_ok {
        return Err(Error::LiftConditionViolated);
    }
    if k < cert.ell {
        return Err(Error::BadParam(format!(
            "k = {k} must be >= ell = {}",
            cert.ell
        )));
    }
    // Ternary labels in lexicographic order are base-3 numerals, so the
    // suffix index is just (index mod 3^ell).
    let suffix_block = 3usize.pow(cert.ell);
    let total = 3usize.pow(k);
    let assignment: Vec<u32> = (0..total)
        .map(|i| cert.base.color(i % suffix_block))
        .collect();
    Coloring::new(assignment, cert.b)
}

/// Literal recursion from the construction: f_ell is the base, and f_k
/// applies f_{k-1} to each of the three copies of S^{k-1}.
pub fn lift_recursive_oracle(cert: &LiftCertificate, k: u32) -> Result<Coloring> {
    if !cert.condition_ok {
        return Err(Error::LiftConditionViolated);
    }
    if k < cert.ell {
        return Err(Error::BadParam(format!(
            "k = {k} must be >= ell = {}",
            cert.ell
        )));
    }
    let mut colors: Vec<u32> = cert.base.assignment().to_vec();
    for _ in cert.ell..k {
        let mut next = Vec::with_capacity(colors.len() * 3);
        for _copy in 0..3 {
            next.extend_from_slice(&colors);
        }
        colors = next;
    }
    Coloring::new(colors, cert.b)
}

/// Lift and verify in one step: returns the lifted coloring only if it
/// passes the verifier on S^k.
pub fn lift_verified(cert: &LiftCertificate, k: u32) -> Result<Coloring> {
    let lifted = lift_coloring(cert, k)?;
    let g = gen_sierpinski(k);
    let dm = all_pairs_distances(&g);
    let s = PackingSequence::dn(cert.d, cert.n, cert.b)?;
    let violations = verify_coloring(&g, &dm, &s, &lifted)?;
    if !violations.is_empty() {
        return Err(Error::InvalidBase(violations.len()));
    }
    Ok(lifted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::all_pairs_distances;
    use crate::solver::{solve_decision, SearchConfig, Status};

    #[test]
    fn condition_examples() {
        assert!(check_lift_condition(5, 8, 1, 1)); // 1 + 7 <= 32
        assert!(check_lift_condition(2, 3, 1, 3)); // 1 + 0 <= 4
        assert!(!check_lift_condition(1, 9, 3, 1)); // 3 + 8 > 2
    }

    fn base_cert(ell: u32, d: u32, n: u32, b: u32) -> LiftCertificate {
        let t = gen_t(ell).unwrap();
        let dm = all_pairs_distances(&t);
        let s = PackingSequence::dn(d, n, b).unwrap();
        let res = solve_decision(&t, &dm, &s, &SearchConfig::default()).unwrap();
        assert_eq!(res.status, Status::Feasible);
        LiftCertificate::new(ell, d, n, res.coloring.unwrap()).unwrap()
    }

    #[test]
    fn identity_case() {
        let cert = base_cert(2, 1, 3, 3);
        let lifted = lift_coloring(&cert, 2).unwrap();
        assert_eq!(lifted.assignment(), cert.base.assignment());
    }

    #[test]
    fn closed_form_equals_recursion() {
        let cert = base_cert(2, 1, 3, 3);
        for k in 2..=5 {
            let a = lift_coloring(&cert, k).unwrap();
            let b = lift_recursive_oracle(&cert, k).unwrap();
            assert_eq!(a.assignment(), b.assignment(), "k={k}");
        }
    }

    #[test]
    fn lift_t2_proper_coloring_to_s4() {
        let cert = base_cert(2, 1, 3, 3);
        let lifted = lift_verified(&cert, 4).unwrap();
        assert_eq!(lifted.len(), 81);
        assert_eq!(lifted.max_color_used(), 3);
    }

    #[test]
    fn lift_soundness_over_small_certs() {
        // several (d,n,b) bases on T^2, lifted a few levels and verified
        for (d, n, b) in [(1, 3, 3u32), (1, 2, 4), (2, 3, 5)] {
            let t = gen_t(2).unwrap();
            let dm = all_pairs_distances(&t);
            let s = PackingSequence::dn(d, n, b).unwrap();
            let res = solve_decision(&t, &dm, &s, &SearchConfig::default()).unwrap();
            if res.status != Status::Feasible {
                continue;
            }
            let cert = LiftCertificate::new(2, d, n, res.coloring.unwrap()).unwrap();
            if !cert.condition_ok {
                continue;
            }
            for k in 2..=5 {
                lift_verified(&cert, k).unwrap_or_else(|e| {
                    panic!("lift (d={d}, n={n}, b={b}) to k={k} failed: {e}")
                });
            }
        }
    }

    #[test]
    fn condition_violation_rejected() {
        // a rainbow coloring of T^1 = K_3 with huge d fails the condition
        let t = gen_t(1).unwrap();
        let dm = all_pairs_distances(&t);
        let s = PackingSequence::dn(3, 1, 9).unwrap();
        // 3 distinct colors out of 9 on K_3: valid, but 3 + 8 > 2
        let base = Coloring::new(vec![1, 2, 3], 9).unwrap();
        assert!(verify_coloring(&t, &dm, &s, &base).unwrap().is_empty());
        let cert = LiftCertificate::new(1, 3, 1, base).unwrap();
        assert!(!cert.condition_ok);
        assert_eq!(lift_coloring(&cert, 3), Err(Error::LiftConditionViolated));
    }

    #[test]
    fn invalid_base_rejected() {
        let bad = Coloring::new(vec![1; 9], 1).unwrap();
        assert!(matches!(
            LiftCertificate::new(2, 1, 1, bad),
            Err(Error::InvalidBase(_))
        ));
    }

    /// Vertices in distinct copies of S^{k-2} not joined by a connector
    /// edge are far apart.
    #[test]
    fn distant_copies_sanity() {
        for k in [4u32, 5] {
            let g = gen_sierpinski(k);
            let dm = all_pairs_distances(&g);
            let connected_pairs: Vec<(String, String)> = vec![
                ("01".into(), "10".into()),
                ("02".into(), "20".into()),
                ("12".into(), "21".into()),
            ];
            let prefixes: Vec<String> = ["00", "01", "02", "10", "11", "12", "20", "21", "22"]
                .iter()
                .map(|s| s.to_string())
                .collect();
            let bound = 1u32 << (k - 2);
            for a in &prefixes {
                for b in &prefixes {
                    if a >= b {
                        continue;
                    }
                    // skip copies inside the same S^{k-1} or joined by a connector
                    if a[..1] == b[..1]
                        || connected_pairs
                            .iter()
                            .any(|(x, y)| (x == a && y == b) || (x == b && y == a))
                    {
                        continue;
                    }
                    // sample the copy corners rather than all 3^{k-2} pairs
                    for sa in ["0", "1", "2"] {
                        for sb in ["0", "1", "2"] {
                            let la = format!("{a}{}", sa.repeat(k as usize - 2));
                            let lb = format!("{b}{}", sb.repeat(k as usize - 2));
                            let u = g.index_of(&la).unwrap();
                            let v = g.index_of(&lb).unwrap();
                            assert!(
                                dm.get(u, v) > bound,
                                "d({la},{lb}) = {} <= {bound}",
                                dm.get(u, v)
                            );
                        }
                    }
                }
            }
        }
    }
}

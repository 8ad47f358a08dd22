//! Exact backtracking search with forward checking for S-packing
//! colorability, minimization of the (d,n)-packing chromatic number,
//! and a pigeonhole lower bound.
//!
//! Assigning color c to vertex v deletes c from the domain of every
//! still-unassigned vertex within distance s_c of v; an empty domain
//! triggers backtracking, so Infeasible answers are complete-search
//! proofs.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};
use crate::model::{is_valid_coloring, Coloring, PackingSequence};

/// Hard cap on the number of colors per decision call (domains are
/// u128 bitmasks). Minimization sidesteps the cap via the rainbow
/// shortcut at k = |V|.
pub const MAX_COLORS: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Feasible,
    Infeasible,
    Timeout,
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub status: Status,
    /// Present iff status is Feasible; always verifier-clean.
    pub coloring: Option<Coloring>,
    pub nodes_explored: u64,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexOrder {
    /// Descending degree, ties broken by label. The default.
    DegreeDesc,
    /// BFS order from a vertex of minimum eccentricity.
    BfsFromCenter,
    /// Construction order.
    Natural,
}

#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    /// None means unlimited.
    pub budget: Option<Duration>,
    pub vertex_order: VertexOrder,
    /// Among colors with equal s-value, open a new color only if all
    /// smaller equal-s colors are already in use.
    pub symmetry_breaking: bool,
    /// Number of workers splitting on the first vertex's color choices.
    pub parallel_width: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: None,
            vertex_order: VertexOrder::DegreeDesc,
            symmetry_breaking: true,
            parallel_width: 1,
        }
    }
}

impl SearchConfig {
    pub fn with_budget_ms(mut self, ms: u64) -> Self {
        self.budget = Some(Duration::from_millis(ms));
        self
    }
}

fn search_order(g: &Graph, dm: &DistanceMatrix, order: VertexOrder) -> Vec<usize> {
    let n = g.vertex_count();
    match order {
        VertexOrder::Natural => (0..n).collect(),
        VertexOrder::DegreeDesc => {
            let mut vs: Vec<usize> = (0..n).collect();
            vs.sort_by(|&a, &b| {
                g.degree(b)
                    .cmp(&g.degree(a))
                    .then_with(|| g.label(a).cmp(g.label(b)))
            });
            vs
        }
        VertexOrder::BfsFromCenter => {
            let center = (0..n)
                .min_by_key(|&v| {
                    (0..n)
                        .map(|u| dm.get(v, u))
                        .filter(|&d| d != crate::graph::INFINITE)
                        .max()
                        .unwrap_or(0)
                })
                .unwrap_or(0);
            let mut seen = vec![false; n];
            let mut out = Vec::with_capacity(n);
            let mut queue = vec![center];
            seen[center] = true;
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                out.push(u);
                for &v in g.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push(v);
                    }
                }
            }
            // other components in natural order
            for v in 0..n {
                if !seen[v] {
                    out.push(v);
                }
            }
            out
        }
    }
}

/// Precomputed search context for one (graph, sequence, order) triple.
struct SearchCtx {
    k: usize,
    /// Position -> vertex id, in assignment order.
    order: Vec<usize>,
    /// For position p and distinct-s index t: future positions q > p with
    /// d(order[p], order[q]) <= distinct_s[t].
    future_balls: Vec<Vec<Vec<u32>>>,
    /// Color index -> index into distinct_s.
    s_index_of_color: Vec<usize>,
    /// For symmetry breaking: smallest color index of each equal-s block.
    block_start: Vec<usize>,
}

impl SearchCtx {
    fn new(g: &Graph, dm: &DistanceMatrix, s: &PackingSequence, order: VertexOrder) -> Self {
        let k = s.len();
        let s_of_color: Vec<u32> = s.entries().to_vec();
        let mut distinct_s: Vec<u32> = s_of_color.clone();
        distinct_s.dedup();
        let s_index_of_color: Vec<usize> = s_of_color
            .iter()
            .map(|v| distinct_s.iter().position(|d| d == v).unwrap())
            .collect();
        let mut block_start = vec![0usize; k];
        for c in 0..k {
            block_start[c] = if c > 0 && s_of_color[c] == s_of_color[c - 1] {
                block_start[c - 1]
            } else {
                c
            };
        }
        let order = search_order(g, dm, order);
        let n = order.len();
        let mut future_balls = Vec::with_capacity(n);
        for p in 0..n {
            let v = order[p];
            let mut per_s = Vec::with_capacity(distinct_s.len());
            for &t in &distinct_s {
                let ball: Vec<u32> = (p + 1..n)
                    .filter(|&q| dm.get(v, order[q]) <= t)
                    .map(|q| q as u32)
                    .collect();
                per_s.push(ball);
            }
            future_balls.push(per_s);
        }
        SearchCtx {
            k,
            order,
            future_balls,
            s_index_of_color,
            block_start,
        }
    }
}

struct Searcher<'a> {
    ctx: &'a SearchCtx,
    domains: Vec<u128>,
    assigned: Vec<u32>,
    used: Vec<u32>,
    trail: Vec<u32>,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
    symmetry: bool,
}

impl<'a> Searcher<'a> {
    fn new(ctx: &'a SearchCtx, symmetry: bool, deadline: Option<Instant>) -> Self {
        let n = ctx.order.len();
        let full: u128 = if ctx.k == 128 {
            u128::MAX
        } else {
            (1u128 << ctx.k) - 1
        };
        Searcher {
            ctx,
            domains: vec![full; n],
            assigned: vec![0; n],
            used: vec![0; ctx.k],
            trail: Vec::new(),
            nodes: 0,
            deadline,
            timed_out: false,
            symmetry,
        }
    }

    /// Forward-check color `c` (0-based) at position `p`. Returns the
    /// trail length to undo to, or None on wipeout (already undone).
    fn propagate(&mut self, p: usize, c: usize) -> Option<usize> {
        let mark = self.trail.len();
        let bit = 1u128 << c;
        let sidx = self.ctx.s_index_of_color[c];
        for &q in &self.ctx.future_balls[p][sidx] {
            let q = q as usize;
            if self.domains[q] & bit != 0 {
                self.domains[q] &= !bit;
                self.trail.push(q as u32);
                if self.domains[q] == 0 {
                    self.undo(mark, bit);
                    return None;
                }
            }
        }
        Some(mark)
    }

    fn undo(&mut self, mark: usize, bit: u128) {
        while self.trail.len() > mark {
            let q = self.trail.pop().unwrap() as usize;
            self.domains[q] |= bit;
        }
    }

    fn color_allowed(&self, c: usize) -> bool {
        if !self.symmetry || self.used[c] > 0 {
            return true;
        }
        // opening a new color: require all smaller equal-s colors in use
        (self.ctx.block_start[c]..c).all(|c2| self.used[c2] > 0)
    }

    fn search(&mut self, p: usize) -> bool {
        if p == self.ctx.order.len() {
            return true;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) {
            if let Some(dl) = self.deadline {
                if Instant::now() >= dl {
                    self.timed_out = true;
                    return false;
                }
            }
        }
        let mut dom = self.domains[p];
        while dom != 0 {
            let c = dom.trailing_zeros() as usize;
            dom &= dom - 1;
            if !self.color_allowed(c) {
                continue;
            }
            if let Some(mark) = self.propagate(p, c) {
                self.assigned[p] = c as u32 + 1;
                self.used[c] += 1;
                if self.search(p + 1) {
                    return true;
                }
                self.used[c] -= 1;
                self.assigned[p] = 0;
                self.undo(mark, 1u128 << c);
                if self.timed_out {
                    return false;
                }
            }
        }
        false
    }

    /// Like `search` but with the first position's color fixed.
    fn search_with_first(&mut self, first_color: usize) -> bool {
        let c = first_color;
        if !self.color_allowed(c) {
            return false;
        }
        if let Some(_mark) = self.propagate(0, c) {
            self.assigned[0] = c as u32 + 1;
            self.used[c] += 1;
            if self.search(1) {
                return true;
            }
            self.used[c] -= 1;
            self.assigned[0] = 0;
        }
        false
    }

    fn coloring(&self) -> Coloring {
        let n = self.ctx.order.len();
        let mut assignment = vec![0u32; n];
        for (p, &v) in self.ctx.order.iter().enumerate() {
            assignment[v] = self.assigned[p];
        }
        Coloring::new(assignment, self.ctx.k as u32).expect("search assigns colors in range")
    }
}

/// Decides whether an S-packing |S|-coloring of `g` exists.
pub fn solve_decision(
    g: &Graph,
    dm: &DistanceMatrix,
    s: &PackingSequence,
    cfg: &SearchConfig,
) -> Result<SolveResult> {
    if s.is_empty() {
        return Err(Error::BadParam("empty sequence".into()));
    }
    if s.len() > MAX_COLORS {
        return Err(Error::TooManyColors {
            max: MAX_COLORS,
            got: s.len(),
        });
    }
    let start = Instant::now();
    let deadline = cfg.budget.map(|b| start + b);
    let ctx = SearchCtx::new(g, dm, s, cfg.vertex_order);

    let (found, nodes, timed_out, coloring) = if cfg.parallel_width <= 1
        || g.vertex_count() == 0
    {
        let mut searcher = Searcher::new(&ctx, cfg.symmetry_breaking, deadline);
        let found = searcher.search(0);
        let coloring = found.then(|| searcher.coloring());
        (found, searcher.nodes, searcher.timed_out, coloring)
    } else {
        run_parallel(&ctx, cfg, deadline)
    };

    let elapsed_ms = start.elapsed().as_millis() as u64;
    if let Some(c) = coloring {
        debug_assert!(is_valid_coloring(g, dm, s, &c).unwrap_or(false));
        return Ok(SolveResult {
            status: Status::Feasible,
            coloring: Some(c),
            nodes_explored: nodes,
            elapsed_ms,
        });
    }
    let _ = found;
    Ok(SolveResult {
        status: if timed_out {
            Status::Timeout
        } else {
            Status::Infeasible
        },
        coloring: None,
        nodes_explored: nodes,
        elapsed_ms,
    })
}

/// Splits the first vertex's color choices across workers. First
/// feasible certificate wins; all-exhausted means Infeasible. Status is
/// deterministic, the certificate found may vary with scheduling.
fn run_parallel(
    ctx: &SearchCtx,
    cfg: &SearchConfig,
    deadline: Option<Instant>,
) -> (bool, u64, bool, Option<Coloring>) {
    use std::sync::atomic::{AtomicBool, Ordering};
    use std::sync::Mutex;

    let colors: Vec<usize> = (0..ctx.k).collect();
    let stop = AtomicBool::new(false);
    let result: Mutex<Option<Coloring>> = Mutex::new(None);
    let totals: Mutex<(u64, bool)> = Mutex::new((0, false));
    let next: std::sync::atomic::AtomicUsize = std::sync::atomic::AtomicUsize::new(0);
    let workers = cfg.parallel_width.min(colors.len()).max(1);

    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| {
                loop {
                    if stop.load(Ordering::Relaxed) {
                        break;
                    }
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= colors.len() {
                        break;
                    }
                    let mut searcher = Searcher::new(ctx, cfg.symmetry_breaking, deadline);
                    let found = searcher.search_with_first(colors[i]);
                    let mut t = totals.lock().unwrap();
                    t.0 += searcher.nodes;
                    t.1 |= searcher.timed_out;
                    drop(t);
                    if found {
                        let mut slot = result.lock().unwrap();
                        if slot.is_none() {
                            *slot = Some(searcher.coloring());
                        }
                        stop.store(true, Ordering::Relaxed);
                        break;
                    }
                }
            });
        }
    });

    let coloring = result.into_inner().unwrap();
    let (nodes, timed_out) = totals.into_inner().unwrap();
    let found = coloring.is_some();
    (found, nodes, timed_out && !found, coloring)
}

/// Pigeonhole lower bound on the (d,n)-packing chromatic number: a set
/// of vertices pairwise within distance d needs all-distinct colors
/// (every s_i >= d). Greedy cliques in the distance-<=d graph, seeded
/// from every vertex.
pub fn lower_bound(g: &Graph, dm: &DistanceMatrix, d: u32, _n: u32) -> u32 {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let mut best = 1u32;
    let close = |a: usize, b: usize| dm.get(a, b) <= d;
    for seed in 0..n {
        let mut clique = vec![seed];
        for v in 0..n {
            if v != seed && clique.iter().all(|&u| close(u, v)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len() as u32);
    }
    best
}

/// Smallest k <= k_max with a feasible (d,n)-packing k-coloring.
/// `cfg.budget` is the total budget across all decision calls.
pub fn solve_min_colors(
    g: &Graph,
    dm: &DistanceMatrix,
    d: u32,
    n: u32,
    k_max: u32,
    cfg: &SearchConfig,
) -> Result<(u32, SolveResult)> {
    if k_max < 1 {
        return Err(Error::BadParam("k_max must be >= 1".into()));
    }
    let start = Instant::now();
    let nv = g.vertex_count() as u32;
    let k_cap = k_max.min(nv.max(1));
    let lb = lower_bound(g, dm, d, n).max(1);
    let mut nodes = 0u64;
    for k in lb..=k_cap {
        if k >= nv && nv > 0 {
            // Rainbow: singleton classes are always valid.
            let coloring = Coloring::new((1..=nv).collect(), k).expect("rainbow in range");
            return Ok((
                k,
                SolveResult {
                    status: Status::Feasible,
                    coloring: Some(coloring),
                    nodes_explored: nodes,
                    elapsed_ms: start.elapsed().as_millis() as u64,
                },
            ));
        }
        let remaining = cfg.budget.map(|b| b.saturating_sub(start.elapsed()));
        if let Some(r) = remaining {
            if r.is_zero() {
                return Ok((
                    k,
                    SolveResult {
                        status: Status::Timeout,
                        coloring: None,
                        nodes_explored: nodes,
                        elapsed_ms: start.elapsed().as_millis() as u64,
                    },
                ));
            }
        }
        let s = PackingSequence::dn(d, n, k)?;
        let sub_cfg = SearchConfig {
            budget: remaining,
            ..*cfg
        };
        let mut res = solve_decision(g, dm, &s, &sub_cfg)?;
        nodes += res.nodes_explored;
        res.nodes_explored = nodes;
        res.elapsed_ms = start.elapsed().as_millis() as u64;
        match res.status {
            Status::Feasible | Status::Timeout => return Ok((k, res)),
            Status::Infeasible => {}
        }
    }
    Ok((
        k_cap,
        SolveResult {
            status: Status::Infeasible,
            coloring: None,
            nodes_explored: nodes,
            elapsed_ms: start.elapsed().as_millis() as u64,
        },
    ))
}

/// Convenience: compute distances and minimize in one call.
pub fn min_colors(g: &Graph, d: u32, n: u32, cfg: &SearchConfig) -> Result<(u32, SolveResult)> {
    let dm = all_pairs_distances(g);
    solve_min_colors(g, &dm, d, n, g.vertex_count() as u32, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_sierpinski;
    use crate::graph::build_graph;
    use crate::model::verify_coloring;

    fn k3() -> Graph {
        build_graph(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap()
    }

    #[test]
    fn k3_decisions() {
        let g = k3();
        let dm = all_pairs_distances(&g);
        let cfg = SearchConfig::default();
        let s = PackingSequence::explicit(vec![1, 2, 3]).unwrap();
        let res = solve_decision(&g, &dm, &s, &cfg).unwrap();
        assert_eq!(res.status, Status::Feasible);
        assert!(verify_coloring(&g, &dm, &s, res.coloring.as_ref().unwrap())
            .unwrap()
            .is_empty());

        let s = PackingSequence::explicit(vec![1, 1]).unwrap();
        let res = solve_decision(&g, &dm, &s, &cfg).unwrap();
        assert_eq!(res.status, Status::Infeasible);
    }

    #[test]
    fn s2_classical_packing_threshold() {
        let g = gen_sierpinski(2);
        let dm = all_pairs_distances(&g);
        let cfg = SearchConfig::default();
        let s4 = PackingSequence::dn(1, 1, 4).unwrap();
        assert_eq!(
            solve_decision(&g, &dm, &s4, &cfg).unwrap().status,
            Status::Infeasible
        );
        let s5 = PackingSequence::dn(1, 1, 5).unwrap();
        assert_eq!(
            solve_decision(&g, &dm, &s5, &cfg).unwrap().status,
            Status::Feasible
        );
    }

    #[test]
    fn s2_min_colors_rows() {
        let g = gen_sierpinski(2);
        let dm = all_pairs_distances(&g);
        let cfg = SearchConfig::default();
        assert_eq!(
            solve_min_colors(&g, &dm, 2, 1, 9, &cfg).unwrap().0,
            7
        );
        assert_eq!(
            solve_min_colors(&g, &dm, 3, 1, 9, &cfg).unwrap().0,
            9
        );
    }

    #[test]
    fn lower_bounds() {
        let g = gen_sierpinski(2);
        let dm = all_pairs_distances(&g);
        assert_eq!(lower_bound(&g, &dm, 3, 1), 9);
        let g3 = gen_sierpinski(3);
        let dm3 = all_pairs_distances(&g3);
        assert_eq!(lower_bound(&g3, &dm3, 7, 1), 27);
        assert!(lower_bound(&g, &dm, 1, 9) >= 1);
    }

    #[test]
    fn empty_sequence_rejected() {
        let g = k3();
        let dm = all_pairs_distances(&g);
        assert!(matches!(
            PackingSequence::explicit(vec![]),
            Err(Error::BadParam(_))
        ));
        let s = PackingSequence::dn(1, 1, 1).unwrap();
        assert!(solve_decision(&g, &dm, &s, &SearchConfig::default()).is_ok());
    }

    /// Exhaustive enumeration of all k-colorings in vertex-index order,
    /// abandoning a prefix as soon as it violates a pair constraint.
    /// Independent of the solver's ordering and domain machinery.
    pub(crate) fn brute_force_min(g: &Graph, dm: &DistanceMatrix, d: u32, n: u32) -> u32 {
        fn extend(
            dm: &DistanceMatrix,
            s: &[u32],
            k: u32,
            assignment: &mut Vec<u32>,
            nv: usize,
        ) -> bool {
            if assignment.len() == nv {
                return true;
            }
            let v = assignment.len();
            for c in 1..=k {
                let bound = s[(c - 1) as usize];
                let ok = assignment
                    .iter()
                    .enumerate()
                    .all(|(u, &cu)| cu != c || dm.get(u, v) > bound);
                if ok {
                    assignment.push(c);
                    if extend(dm, s, k, assignment, nv) {
                        return true;
                    }
                    assignment.pop();
                }
            }
            false
        }
        let nv = g.vertex_count();
        for k in 1..=nv as u32 {
            let s = PackingSequence::dn(d, n, k).unwrap();
            let mut assignment = Vec::with_capacity(nv);
            if extend(dm, s.entries(), k, &mut assignment, nv) {
                return k;
            }
        }
        nv as u32
    }

    fn small_corpus() -> Vec<Graph> {
        let mut out = Vec::new();
        // paths and cycles
        for n in [2usize, 4, 6] {
            let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            let mut pe: Vec<(String, String)> = (0..n - 1)
                .map(|i| (labels[i].clone(), labels[i + 1].clone()))
                .collect();
            out.push(build_graph(&labels, &pe).unwrap());
            if n >= 3 {
                pe.push((labels[n - 1].clone(), labels[0].clone()));
                out.push(build_graph(&labels, &pe).unwrap());
            }
        }
        // star K_{1,4}
        let labels: Vec<String> = (0..5).map(|i| format!("v{i}")).collect();
        let se: Vec<(String, String)> = (1..5)
            .map(|i| (labels[0].clone(), labels[i].clone()))
            .collect();
        out.push(build_graph(&labels, &se).unwrap());
        // K_4
        let labels: Vec<String> = (0..4).map(|i| format!("v{i}")).collect();
        let mut ke = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                ke.push((labels[u].clone(), labels[v].clone()));
            }
        }
        out.push(build_graph(&labels, &ke).unwrap());
        // a random tree on 7 vertices (fixed)
        let labels: Vec<String> = (0..7).map(|i| format!("v{i}")).collect();
        let te: Vec<(String, String)> = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6)]
            .iter()
            .map(|&(a, b)| (labels[a].clone(), labels[b].clone()))
            .collect();
        out.push(build_graph(&labels, &te).unwrap());
        out
    }

    #[test]
    fn solver_matches_brute_force_on_small_corpus() {
        let cfg = SearchConfig::default();
        let cfg_nosym = SearchConfig {
            symmetry_breaking: false,
            ..cfg
        };
        for g in small_corpus() {
            let dm = all_pairs_distances(&g);
            for d in 1..=3u32 {
                for n in 1..=3u32 {
                    let expect = brute_force_min(&g, &dm, d, n);
                    let (k, res) =
                        solve_min_colors(&g, &dm, d, n, g.vertex_count() as u32, &cfg).unwrap();
                    assert_eq!(res.status, Status::Feasible);
                    assert_eq!(k, expect, "d={d} n={n} |V|={}", g.vertex_count());
                    let s = PackingSequence::dn(d, n, k).unwrap();
                    assert!(verify_coloring(&g, &dm, &s, res.coloring.as_ref().unwrap())
                        .unwrap()
                        .is_empty());
                    // symmetry breaking preserves status
                    let (k2, res2) =
                        solve_min_colors(&g, &dm, d, n, g.vertex_count() as u32, &cfg_nosym)
                            .unwrap();
                    assert_eq!((k2, res2.status), (k, res.status));
                }
            }
        }
    }

    #[test]
    fn chromatic_monotone_in_d_and_n() {
        let cfg = SearchConfig::default();
        for g in small_corpus() {
            let dm = all_pairs_distances(&g);
            let chi = |d, n| {
                solve_min_colors(&g, &dm, d, n, g.vertex_count() as u32, &cfg)
                    .unwrap()
                    .0
            };
            for d in 1..=2u32 {
                for n in 1..=2u32 {
                    assert!(chi(d, n) <= chi(d + 1, n));
                    assert!(chi(d, n) >= chi(d, n + 1));
                }
            }
        }
    }

    #[test]
    fn deterministic_single_thread() {
        let g = gen_sierpinski(2);
        let dm = all_pairs_distances(&g);
        let cfg = SearchConfig::default();
        let a = solve_min_colors(&g, &dm, 1, 1, 9, &cfg).unwrap();
        let b = solve_min_colors(&g, &dm, 1, 1, 9, &cfg).unwrap();
        assert_eq!(a.0, b.0);
        assert_eq!(
            a.1.coloring.unwrap().assignment(),
            b.1.coloring.unwrap().assignment()
        );
    }

    #[test]
    fn parallel_width_agrees_on_status() {
        let g = gen_sierpinski(2);
        let dm = all_pairs_distances(&g);
        let par = SearchConfig {
            parallel_width: 4,
            ..SearchConfig::default()
        };
        let s = PackingSequence::dn(1, 1, 5).unwrap();
        assert_eq!(
            solve_decision(&g, &dm, &s, &par).unwrap().status,
            Status::Feasible
        );
        let s = PackingSequence::dn(1, 1, 4).unwrap();
        assert_eq!(
            solve_decision(&g, &dm, &s, &par).unwrap().status,
            Status::Infeasible
        );
    }

    #[test]
    fn chromatic_number_stable_once_n_reaches_l() {
        // If chi^{d,l}(G) <= l then for every n >= l the first
        // chi^{d,l} sequence entries all equal d in both sequences, so
        // chi^{d,n} = chi^{d,l}. (Requiring only n >= chi^{d,l} is not
        // enough: on P_4 with d=1, l=1, n=3 we have chi^{1,1} = 3 but
        // chi^{1,3} = 2, since the n=3 sequence keeps s_2 = 1.)
        let cfg = SearchConfig::default();
        let mut graphs = small_corpus();
        graphs.push(gen_sierpinski(2));
        for g in graphs {
            let dm = all_pairs_distances(&g);
            for d in 1..=2u32 {
                for l in 1..=3u32 {
                    let chi_l = solve_min_colors(&g, &dm, d, l, g.vertex_count() as u32, &cfg)
                        .unwrap()
                        .0;
                    if chi_l > l {
                        continue;
                    }
                    for n in l..=l + 2 {
                        let chi_n =
                            solve_min_colors(&g, &dm, d, n, g.vertex_count() as u32, &cfg)
                                .unwrap()
                                .0;
                        assert_eq!(chi_n, chi_l, "d={d} l={l} n={n}");
                    }
                }
            }
        }
    }
}

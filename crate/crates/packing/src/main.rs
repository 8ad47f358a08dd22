//! Command-line front end. Exit codes: 0 success/feasible,
//! 1 infeasible/invalid, 2 timeout, 3 usage/parse error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use packing::generators::{gen_h, gen_hp, gen_sierpinski, gen_t};
use packing::graph::{all_pairs_distances, Graph};
use packing::ilp::export_ilp;
use packing::io::{
    parse_coloring, parse_graph, write_coloring, write_digraph_dump, write_graph, Report,
};
use packing::lift::{lift_coloring, LiftCertificate};
use packing::model::{verify_coloring, PackingSequence};
use packing::solver::{solve_decision, solve_min_colors, SearchConfig, Status};
use packing::transfer::{
    build_transfer_digraph, decide_h_with, exists_odd_closed_walk, HDecision,
};
use packing::Error;

const EXIT_OK: u8 = 0;
const EXIT_INFEASIBLE: u8 = 1;
const EXIT_TIMEOUT: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "packing", about = "Exact packing-coloring toolkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Sierpinski,
    T,
    H,
    Hp,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph family member and write it as a graph file.
    Gen {
        /// Graph family.
        #[arg(long, value_enum)]
        family: Family,
        /// Family parameter (k for sierpinski/t, r for h, c for hp).
        #[arg(long)]
        param: u32,
        /// Output path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Verify a coloring file against a graph file.
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
    },
    /// Decide or minimize the (d,n)-packing chromatic number.
    Solve {
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        d: u32,
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// Fixed k: decision mode. Omit for minimization.
        #[arg(long)]
        k: Option<u32>,
        /// Explicit sequence as a comma list (overrides --d/--n in
        /// decision mode).
        #[arg(long)]
        seq: Option<String>,
        #[arg(long)]
        budget_ms: Option<u64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Where to write the certificate coloring.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lift a base coloring of T^ell to S^k and verify the result.
    Lift {
        base_coloring: PathBuf,
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the transfer digraph; optionally decide H(r).
    Hgraph {
        #[arg(long, default_value_t = 6)]
        b: u8,
        #[arg(long)]
        r: Option<usize>,
        /// Dump the digraph to this path.
        #[arg(long)]
        dump: Option<PathBuf>,
        /// Where to write the certificate coloring.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the feasibility ILP in LP text format.
    ExportLp {
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        d: u32,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, Error> {
    parse_graph(&std::fs::read_to_string(path)?)
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Gen { family, param, out } => {
            let g = match family {
                Family::Sierpinski => gen_sierpinski(param),
                Family::T => gen_t(param)?,
                Family::H => gen_h(param as usize)?,
                Family::Hp => gen_hp(param as usize)?,
            };
            std::fs::write(&out, write_graph(&g))?;
            let mut report = Report::new("gen");
            report.push("vertices", g.vertex_count());
            report.push("edges", g.edge_count());
            report.push("out", out.display());
            print!("{}", report.render());
            Ok(EXIT_OK)
        }
        Command::Verify { graph, coloring } => {
            let g = read_graph(&graph)?;
            let file = parse_coloring(&std::fs::read_to_string(&coloring)?)?;
            let s = file.sequence.clone();
            let c = file.into_coloring(&g)?;
            let dm = all_pairs_distances(&g);
            let violations = verify_coloring(&g, &dm, &s, &c)?;
            let mut report = Report::new("verify");
            report.push("status", if violations.is_empty() { "valid" } else { "invalid" });
            report.push("violations", violations.len());
            for v in &violations {
                report.push(
                    "violation",
                    format!(
                        "color={} u={} v={} dist={} need_gt={}",
                        v.color,
                        g.label(v.u),
                        g.label(v.v),
                        v.actual,
                        v.required_gt
                    ),
                );
            }
            print!("{}", report.render());
            Ok(if violations.is_empty() {
                EXIT_OK
            } else {
                EXIT_INFEASIBLE
            })
        }
        Command::Solve {
            graph,
            d,
            n,
            k,
            seq,
            budget_ms,
            threads,
            out,
        } => {
            let g = read_graph(&graph)?;
            let dm = all_pairs_distances(&g);
            let cfg = SearchConfig {
                budget: budget_ms.map(Duration::from_millis),
                parallel_width: threads.max(1),
                ..SearchConfig::default()
            };
            let mut report = Report::new("solve");
            report.push("graph", graph.display());
            report.push("d", d);
            report.push("n", n);
            let (status, k_found, coloring, s, nodes, elapsed) = match (k, &seq) {
                (_, Some(list)) => {
                    let entries: Vec<u32> = list
                        .split(',')
                        .map(|t| {
                            t.trim()
                                .parse()
                                .map_err(|_| Error::Parse(format!("bad sequence entry `{t}`")))
                        })
                        .collect::<Result<_, _>>()?;
                    let s = PackingSequence::explicit(entries)?;
                    let res = solve_decision(&g, &dm, &s, &cfg)?;
                    (
                        res.status,
                        s.len() as u32,
                        res.coloring,
                        s,
                        res.nodes_explored,
                        res.elapsed_ms,
                    )
                }
                (Some(k), None) => {
                    let s = PackingSequence::dn(d, n, k)?;
                    let res = solve_decision(&g, &dm, &s, &cfg)?;
                    (
                        res.status,
                        k,
                        res.coloring,
                        s,
                        res.nodes_explored,
                        res.elapsed_ms,
                    )
                }
                (None, None) => {
                    let (k, res) =
                        solve_min_colors(&g, &dm, d, n, g.vertex_count() as u32, &cfg)?;
                    let s = PackingSequence::dn(d, n, k.max(1))?;
                    (
                        res.status,
                        k,
                        res.coloring,
                        s,
                        res.nodes_explored,
                        res.elapsed_ms,
                    )
                }
            };
            report.push(
                "status",
                match status {
                    Status::Feasible => "feasible",
                    Status::Infeasible => "infeasible",
                    Status::Timeout => "timeout",
                },
            );
            report.push("k", k_found);
            report.push("nodes_explored", nodes);
            report.push("runtime_ms", elapsed);
            if let Some(c) = &coloring {
                let cert_path = out.unwrap_or_else(|| graph.with_extension("coloring"));
                std::fs::write(&cert_path, write_coloring(&g, c, &s))?;
                report.push("certificate", cert_path.display());
            }
            print!("{}", report.render());
            Ok(match status {
                Status::Feasible => EXIT_OK,
                Status::Infeasible => EXIT_INFEASIBLE,
                Status::Timeout => EXIT_TIMEOUT,
            })
        }
        Command::Lift {
            base_coloring,
            ell,
            k,
            out,
        } => {
            let file = parse_coloring(&std::fs::read_to_string(&base_coloring)?)?;
            let t = gen_t(ell)?;
            let (d, n) = match file.sequence.origin() {
                packing::model::SequenceOrigin::Dn { d, n } => (*d, *n),
                packing::model::SequenceOrigin::Explicit => {
                    return Err(Error::BadParam(
                        "lift needs a (d,n) sequence header".into(),
                    ))
                }
            };
            let base = file.into_coloring(&t)?;
            let cert = LiftCertificate::new(ell, d, n, base)?;
            if !cert.condition_ok {
                eprintln!("error: {}", Error::LiftConditionViolated);
                return Ok(EXIT_INFEASIBLE);
            }
            let lifted = lift_coloring(&cert, k)?;
            let g = gen_sierpinski(k);
            let dm = all_pairs_distances(&g);
            let s = PackingSequence::dn(d, n, cert.b)?;
            let violations = verify_coloring(&g, &dm, &s, &lifted)?;
            let mut report = Report::new("lift");
            report.push("ell", ell);
            report.push("k", k);
            report.push("b", cert.b);
            report.push("d", d);
            report.push("n", n);
            report.push("vertices", g.vertex_count());
            report.push("violations", violations.len());
            report.push(
                "status",
                if violations.is_empty() { "verified" } else { "invalid" },
            );
            if let Some(out) = out {
                std::fs::write(&out, write_coloring(&g, &lifted, &s))?;
                report.push("certificate", out.display());
            }
            print!("{}", report.render());
            Ok(if violations.is_empty() {
                EXIT_OK
            } else {
                EXIT_INFEASIBLE
            })
        }
        Command::Hgraph { b, r, dump, out } => {
            let s = PackingSequence::dn(1, 1, b as u32)?;
            let dg = build_transfer_digraph(b, &s)?;
            let mut report = Report::new("hgraph");
            report.push("b", b);
            report.push("vertices", dg.num_windows());
            report.push("arcs", dg.num_arcs());
            report.push("sccs", dg.num_sccs());
            let mut periods: Vec<u64> = dg
                .scc_period
                .iter()
                .copied()
                .filter(|&p| p > 0)
                .collect();
            periods.sort_unstable();
            periods.dedup();
            let periods: Vec<String> = periods.iter().map(|p| p.to_string()).collect();
            report.push("periods", periods.join(","));
            report.push("odd_closed_walk", exists_odd_closed_walk(&dg));
            if let Some(path) = &dump {
                std::fs::write(path, write_digraph_dump(&dg))?;
                report.push("dump", path.display());
            }
            let mut code = EXIT_OK;
            if let Some(r) = r {
                report.push("r", r);
                let decision = if r < 4 {
                    packing::transfer::decide_h(r, b)?
                } else {
                    decide_h_with(&dg, r)?
                };
                match decision {
                    HDecision::Colorable(cert) => {
                        report.push("decision", "colorable");
                        report.push("walk_length", cert.walk.len());
                        report.push("verified", cert.verified);
                        if let Some(cert_path) = &out {
                            let g = gen_h(r)?;
                            std::fs::write(
                                cert_path,
                                write_coloring(&g, &cert.reconstructed, &s),
                            )?;
                            report.push("certificate", cert_path.display());
                        }
                    }
                    HDecision::NotColorable => {
                        report.push("decision", "not_colorable");
                        code = EXIT_INFEASIBLE;
                    }
                    HDecision::Unknown { walks_tried } => {
                        report.push("decision", "unknown");
                        report.push("walks_tried", walks_tried);
                        code = EXIT_TIMEOUT;
                    }
                }
            }
            print!("{}", report.render());
            Ok(code)
        }
        Command::ExportLp {
            graph,
            d,
            n,
            k,
            out,
        } => {
            let g = read_graph(&graph)?;
            let dm = all_pairs_distances(&g);
            let s = PackingSequence::dn(d, n, k)?;
            let (text, stats) = export_ilp(&g, &dm, &s, k)?;
            std::fs::write(&out, text)?;
            let mut report = Report::new("export-lp");
            report.push("variables", stats.variables);
            report.push("assignment_rows", stats.assignment_rows);
            report.push("conflict_rows", stats.conflict_rows);
            report.push("out", out.display());
            print!("{}", report.render());
            Ok(EXIT_OK)
        }
    }
}

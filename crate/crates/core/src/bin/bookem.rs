//! Command-line front end for the book-embedding library.
//!
//! Exit codes: 0 success; 1 infeasible or not applicable (nonplanar input,
//! separating triangle, failed verification); 2 input error; 3 internal
//! guarantee violation.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bookem::augment::{lemma1_augment, stellate, AddedVertex, Provenance};
use bookem::error::Error;
use bookem::generators;
use bookem::io::{
    emit_edge_list, emit_layout_json, emit_svg, parse_edge_list, parse_layout_json, LayoutReport,
    ReportProvenance,
};
use bookem::layout::{
    homeomorphic_two_page, pagenumber_oracle, two_page_embed_with_stats, verify_layout,
    ORACLE_DEFAULT_CAP,
};
use bookem::planar::planar_embed;
use bookem::Graph;

#[derive(Parser)]
#[command(name = "bookem", version, about = "Two-page book embeddings of nicely planar graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    io: IoArgs,
}

#[derive(Args)]
struct IoArgs {
    /// Input path, or `-` for stdin
    #[arg(long, global = true, default_value = "-")]
    input: String,

    /// Output path, or `-` for stdout
    #[arg(long, global = true, default_value = "-")]
    output: String,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Seed for randomized test generators; accepted everywhere, unused by
    /// the deterministic subcommands
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Svg,
    Edgelist,
}

#[derive(Subcommand)]
enum Command {
    /// Two-page embedding of a nicely planar graph (reads an edge list)
    Embed {
        /// Subdivide every edge once first, so any planar graph fits in two
        /// pages up to homeomorphism
        #[arg(long)]
        homeomorphic: bool,
    },
    /// Check a layout report (reads layout JSON)
    Verify,
    /// Exact pagenumber by brute force (reads an edge list)
    Oracle {
        /// Largest vertex count the oracle will accept
        #[arg(long, default_value_t = ORACLE_DEFAULT_CAP)]
        max_n: usize,
    },
    /// Emit a graph from one of the built-in families
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Augment a nicely planar block to a triangulation, with the trace
    Augment,
    /// Draw a layout report as an SVG book (reads layout JSON)
    Render,
}

#[derive(Subcommand)]
enum Family {
    /// Complete binary tree plus level paths
    Xtree {
        #[arg(long)]
        depth: u32,
    },
    /// X-tree with each level path closed into a cycle
    ExtXtree {
        #[arg(long)]
        depth: u32,
    },
    /// Product of two paths
    Grid {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
    },
    /// Subdivide every edge of the input graph
    Subdivide {
        #[arg(long, default_value_t = 1)]
        per_edge: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> ExitCode {
    match e {
        Error::NotPlanar
        | Error::NotNicelyPlanar(_)
        | Error::NotSubhamiltonianOrder
        | Error::BudgetExceeded(_)
        | Error::InvalidLayout(_) => ExitCode::from(1),
        Error::InternalGuaranteeViolated(_) => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Embed { homeomorphic } => {
            let g = read_graph(&cli.io)?;
            let report = if *homeomorphic {
                let h = homeomorphic_two_page(&g)?;
                let mut report =
                    LayoutReport::new(&h.subdivided, &h.layout, ReportProvenance::default());
                report.spine_crossings = Some(h.spine_crossings);
                report
            } else {
                let (layout, stats) = two_page_embed_with_stats(&g)?;
                LayoutReport::new(&g, &layout, (&stats).into())
            };
            match cli.io.format {
                Format::Json => write_out(&cli.io, &emit_layout_json(&report))?,
                Format::Svg => {
                    let (g2, layout) = report.reconstruct()?;
                    write_out(&cli.io, &emit_svg(&g2, &layout)?)?;
                }
                Format::Edgelist => {
                    return Err(Error::ParseError {
                        line: 0,
                        msg: "embed emits json or svg, not an edge list".into(),
                    })
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify => {
            let report = parse_layout_json(&read_input(&cli.io)?)?;
            let (g, layout) = report.reconstruct()?;
            let violations = verify_layout(&g, &layout)?;
            let verdict = serde_json::json!({
                "valid": violations.is_empty(),
                "violations": violations
                    .iter()
                    .map(|(e1, e2)| serde_json::json!([[e1.0, e1.1], [e2.0, e2.1]]))
                    .collect::<Vec<_>>(),
            });
            write_out(&cli.io, &format!("{verdict:#}\n"))?;
            if violations.is_empty() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Oracle { max_n } => {
            let g = read_graph(&cli.io)?;
            let pages = pagenumber_oracle(&g, *max_n)?;
            let out = serde_json::json!({
                "m": g.edge_count(),
                "n": g.vertex_count(),
                "pagenumber": pages,
            });
            write_out(&cli.io, &format!("{out:#}\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate { family } => {
            let g = match family {
                Family::Xtree { depth } => generators::x_tree(*depth),
                Family::ExtXtree { depth } => generators::extended_x_tree(*depth),
                Family::Grid { rows, cols } => {
                    if *rows < 1 || *cols < 1 {
                        return Err(Error::ParseError {
                            line: 0,
                            msg: "grid needs rows >= 1 and cols >= 1".into(),
                        });
                    }
                    generators::grid(*rows, *cols)
                }
                Family::Subdivide { per_edge } => {
                    let g = read_graph(&cli.io)?;
                    generators::subdivide(&g, *per_edge).0
                }
            };
            match cli.io.format {
                Format::Edgelist => write_out(&cli.io, &emit_edge_list(&g))?,
                Format::Json => {
                    let out = serde_json::json!({
                        "edges": g.edge_vec(),
                        "n": g.vertex_count(),
                    });
                    write_out(&cli.io, &format!("{out:#}\n"))?;
                }
                Format::Svg => {
                    return Err(Error::ParseError {
                        line: 0,
                        msg: "generate emits an edge list or json, not svg".into(),
                    })
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Augment => {
            let g = read_graph(&cli.io)?;
            let rs = planar_embed(&g).ok_or(Error::NotPlanar)?;
            let (g1, rs1, t1) = lemma1_augment(&g, &rs)?;
            let (g2, _rs2, t2) = stellate(&g1, &rs1)?;
            let trace = t1.chain(&t2)?;
            let added: Vec<serde_json::Value> =
                trace.added_vertices.iter().map(added_vertex_json).collect();
            let out = serde_json::json!({
                "added_edges": trace.added_edges,
                "added_vertices": added,
                "edges": g2.edge_vec(),
                "n": g2.vertex_count(),
                "original_n": trace.original_vertex_count,
            });
            write_out(&cli.io, &format!("{out:#}\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Render => {
            let report = parse_layout_json(&read_input(&cli.io)?)?;
            let (g, layout) = report.reconstruct()?;
            write_out(&cli.io, &emit_svg(&g, &layout)?)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn added_vertex_json(av: &AddedVertex) -> serde_json::Value {
    match &av.provenance {
        Provenance::Wedge { at, prev, next } => serde_json::json!({
            "at": at,
            "between": [prev, next],
            "id": av.id,
            "kind": "wedge",
        }),
        Provenance::FaceCenter { face } => serde_json::json!({
            "face": face,
            "id": av.id,
            "kind": "face-center",
        }),
    }
}

fn read_input(io: &IoArgs) -> Result<String, Error> {
    let mut text = String::new();
    if io.input == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::ParseError { line: 0, msg: format!("cannot read stdin: {e}") })?;
    } else {
        text = std::fs::read_to_string(PathBuf::from(&io.input)).map_err(|e| Error::ParseError {
            line: 0,
            msg: format!("cannot read {}: {e}", io.input),
        })?;
    }
    Ok(text)
}

fn read_graph(io: &IoArgs) -> Result<Graph, Error> {
    parse_edge_list(&read_input(io)?)
}

fn write_out(io: &IoArgs, text: &str) -> Result<(), Error> {
    if io.output == "-" {
        std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Error::ParseError { line: 0, msg: format!("cannot write stdout: {e}") })
    } else {
        std::fs::write(PathBuf::from(&io.output), text).map_err(|e| Error::ParseError {
            line: 0,
            msg: format!("cannot write {}: {e}", io.output),
        })
    }
}

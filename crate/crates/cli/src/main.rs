use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mycdist::input::{read_graph, read_source, GraphFormat, InputError};
use mycdist::verify::{verify_corpus, VerifyConfig};
use mycdist_core::automorphism::{
    enumerate_automorphisms_with, group_summary, search_color_preserving,
};
use mycdist_core::constructions::{
    isolate_case_coloring, kn_base_coloring, lift_coloring, star_case_coloring,
};
use mycdist_core::distinguishing::{distinguishing_number_with, is_distinguishing, DistConfig};
use mycdist_core::edgelist::write_edge_list;
use mycdist_core::graph6::to_graph6_string;
use mycdist_core::mycielskian::{build_mycielskian, MycLayout};
use mycdist_core::{AutConfig, Coloring, Error, Graph, Role};

#[derive(Parser)]
#[command(
    name = "mycdist",
    version,
    about = "Generalized Mycielskian graphs and distinguishing numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphInput {
    /// Input file; standard input when omitted or `-`.
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
    format: GraphFormat,
}

impl GraphInput {
    fn read(&self) -> Result<Graph, Failure> {
        read_graph(self.input.as_deref(), self.format).map_err(Failure::from)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build mu_t(G) and print it.
    Myc {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value_t = 1)]
        t: usize,
        /// Output format of the constructed graph.
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        emit: GraphFormat,
        /// Also write the vertex layout as JSON to this path.
        #[arg(long)]
        layout: Option<PathBuf>,
    },
    /// Automorphism group order, generators and orbits.
    Aut {
        #[command(flatten)]
        graph: GraphInput,
        /// Also list every automorphism.
        #[arg(long)]
        list: bool,
        #[arg(long, default_value_t = AutConfig::default().max_elements)]
        max_elements: usize,
    },
    /// Exact distinguishing number with a certificate coloring.
    Dist {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        k_cap: Option<usize>,
        #[arg(long, default_value_t = DistConfig::default().budget)]
        budget: u64,
    },
    /// Decide whether a coloring is distinguishing.
    CheckColoring {
        #[command(flatten)]
        graph: GraphInput,
        /// JSON array of colors (1-based), or `@path` to read it from a file.
        #[arg(long)]
        coloring: String,
    },
    /// Emit one of the explicit colorings of mu_t(G).
    Coloring {
        #[arg(long, value_enum)]
        construction: Construction,
        #[arg(long, default_value_t = 1)]
        t: usize,
        /// Number of leaves, for `star`.
        #[arg(long)]
        m: Option<usize>,
        /// Order of the complete graph, for `kn`.
        #[arg(long)]
        n: Option<usize>,
        /// Root color, for `lift`.
        #[arg(long, default_value_t = 1)]
        w_color: usize,
        /// Source graph, for `isolate` and `lift`.
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Sweep a graph6 corpus and report on every (G, t).
    Verify {
        /// graph6 corpus, one graph per line; standard input when omitted.
        input: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        t: Vec<usize>,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = DistConfig::default().budget)]
        budget: u64,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        jobs: Option<usize>,
        /// Format written to standard output.
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        out: ReportFormat,
        /// Additionally write the JSON report here.
        #[arg(long)]
        json_report: Option<PathBuf>,
        /// Additionally write the CSV report here.
        #[arg(long)]
        csv_report: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Isolate,
    Star,
    Lift,
    Kn,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

enum Failure {
    /// Exit 1: the sweep found records contradicting the predictions.
    Violations(usize),
    /// Exit 2.
    Input(String),
    /// Exit 3: a search budget or size limit was hit.
    Limit(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SearchBudgetExceeded { .. }
            | Error::ExceedsCap { .. }
            | Error::GroupTooLarge { .. }
            | Error::GraphTooLarge { .. } => Failure::Limit(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violations(n)) => {
            eprintln!("mycdist: {n} record(s) contradict the prediction");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("mycdist: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Limit(msg)) => {
            eprintln!("mycdist: {msg}");
            ExitCode::from(3)
        }
    }
}

fn print_json(value: &Value) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Myc {
            graph,
            t,
            emit,
            layout,
        } => {
            let g = graph.read()?;
            let (h, roles) = build_mycielskian(&g, t)?;
            if let Some(path) = layout {
                let text =
                    serde_json::to_string_pretty(&layout_json(&roles)).map_err(io::Error::from)?;
                fs::write(path, text + "\n")?;
            }
            let text = match emit {
                GraphFormat::Graph6 => to_graph6_string(&h)? + "\n",
                GraphFormat::Edges => write_edge_list(&h),
            };
            io::stdout().lock().write_all(text.as_bytes())?;
            Ok(())
        }
        Command::Aut {
            graph,
            list,
            max_elements,
        } => {
            let g = graph.read()?;
            let summary = group_summary(&g, None)?;
            let mut value = json!({
                "n": g.order(),
                "order": summary.order,
                "generators": summary.generators.iter().map(|p| p.image()).collect::<Vec<_>>(),
                "orbits": summary.orbits,
            });
            if list {
                let config = AutConfig {
                    max_elements,
                    ..AutConfig::default()
                };
                let listing = enumerate_automorphisms_with(&g, &config)?;
                value["elements"] = json!(listing
                    .elements()
                    .iter()
                    .map(|p| p.image())
                    .collect::<Vec<_>>());
            }
            print_json(&value)
        }
        Command::Dist {
            graph,
            k_cap,
            budget,
        } => {
            let g = graph.read()?;
            let config = DistConfig {
                k_cap,
                budget,
                ..DistConfig::default()
            };
            let r = distinguishing_number_with(&g, &config)?;
            print_json(&json!({
                "dist": r.value,
                "certificate": r.certificate.colors(),
                "twin_lower_bound_attained": r.lower_bound_witness.is_some(),
            }))
        }
        Command::CheckColoring { graph, coloring } => {
            let g = graph.read()?;
            let c = parse_coloring(&coloring)?;
            if c.len() != g.order() {
                return Err(Error::SizeMismatch {
                    expected: g.order(),
                    found: c.len(),
                }
                .into());
            }
            let witness = search_color_preserving(&g, &c);
            print_json(&json!({
                "distinguishing": witness.is_none(),
                "witness": witness.as_ref().map(|p| p.image()),
            }))
        }
        Command::Coloring {
            construction,
            t,
            m,
            n,
            w_color,
            graph,
        } => {
            let (target, c) = match construction {
                Construction::Star => {
                    let m = m.ok_or_else(|| Failure::Input("--m is required for star".into()))?;
                    let c = star_case_coloring(m, t)?;
                    (build_mycielskian(&Graph::star(m), t)?.0, c)
                }
                Construction::Kn => {
                    let n = n.ok_or_else(|| Failure::Input("--n is required for kn".into()))?;
                    let (_, c) = kn_base_coloring(n, t)?;
                    (build_mycielskian(&Graph::complete(n), t)?.0, c)
                }
                Construction::Isolate | Construction::Lift => {
                    let g = graph.read()?;
                    let base = distinguishing_number_with(&g, &DistConfig::default())?.certificate;
                    let c = match construction {
                        Construction::Isolate => isolate_case_coloring(&g, t, &base)?,
                        _ => lift_coloring(&g, t, &base, w_color)?,
                    };
                    (build_mycielskian(&g, t)?.0, c)
                }
            };
            print_json(&json!({
                "graph6": to_graph6_string(&target).ok(),
                "k": c.palette_size(),
                "coloring": c.colors(),
                "distinguishing": is_distinguishing(&target, &c)?,
            }))
        }
        Command::Verify {
            input,
            t,
            max_n,
            budget,
            jobs,
            out,
            json_report,
            csv_report,
        } => {
            if let Some(&bad) = t.iter().find(|&&t| t == 0) {
                return Err(Error::InvalidT(bad).into());
            }
            let text = read_source(input.as_deref())?;
            let config = VerifyConfig {
                t_values: t,
                max_n,
                budget,
            };
            let jobs =
                jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let report = verify_corpus(&text, &config, jobs);
            let json_text = report.to_json();
            let csv_text = report.to_csv();
            write_optional(json_report.as_deref(), &json_text)?;
            write_optional(csv_report.as_deref(), &csv_text)?;
            let stdout = match out {
                ReportFormat::Json => json_text,
                ReportFormat::Csv => csv_text,
            };
            io::stdout().lock().write_all(stdout.as_bytes())?;
            match report.violations() {
                0 => Ok(()),
                n => Err(Failure::Violations(n)),
            }
        }
    }
}

fn write_optional(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    if let Some(path) = path {
        fs::write(path, text)?;
    }
    Ok(())
}

fn parse_coloring(arg: &str) -> Result<Coloring, Failure> {
    let text = match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)?,
        None => arg.to_owned(),
    };
    let colors: Vec<usize> = serde_json::from_str(&text).map_err(|e| {
        Failure::Input(format!(
            "coloring must be a JSON array of positive integers: {e}"
        ))
    })?;
    Ok(Coloring::from_colors(colors)?)
}

fn layout_json(layout: &MycLayout) -> Value {
    let t = layout.levels();
    let vertices: Vec<Value> = layout
        .roles()
        .iter()
        .enumerate()
        .map(|(id, role)| {
            let name = match role {
                Role::Original(_) => "original",
                Role::Shadow { .. } => "shadow",
                Role::Root => "root",
            };
            json!({ "id": id, "role": name, "i": role.source(), "level": role.level(t) })
        })
        .collect();
    json!({ "n": layout.source_order(), "t": t, "root": layout.root(), "vertices": vertices })
}

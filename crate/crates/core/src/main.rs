use std::fs;
use std::io::{self, Read, Write};
use std::panic;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use bondlab::bondage::{bondage_number, hr_bound};
use bondlab::bounds::bound_suite;
use bondlab::curvature::{
    case_bound, curvature_table, improved_constant, ratio_string, Case, SurfaceSpec,
};
use bondlab::domination::domination_number;
use bondlab::embedding::{
    min_genus, parse_embedding, write_embedding, GenusBudget, RotationSystem, SurfaceClass,
    DEFAULT_TRACE_BUDGET,
};
use bondlab::error::Error;
use bondlab::family::FamilySpec;
use bondlab::graph::Graph;
use bondlab::io::{read_graphs, write_graph6};
use bondlab::survey::{run_survey, SurveyOptions};

#[derive(Parser)]
#[command(
    name = "bondlab",
    version,
    about = "Domination, bondage and surface embeddings of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct Input {
    /// graph6 or edge-list file; standard input when absent.
    file: Option<PathBuf>,
}

#[derive(Args)]
struct Budget {
    /// Maximum embeddings traced per genus search.
    #[arg(long, default_value_t = DEFAULT_TRACE_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct EmbeddingInput {
    #[command(flatten)]
    input: Input,
    /// Embedding file; without it a minimum-genus embedding of the input
    /// graph is used.
    #[arg(long)]
    embedding: Option<PathBuf>,
    /// Surface class searched when no embedding file is given.
    #[arg(long, default_value = "orientable")]
    class: SurfaceClass,
    #[command(flatten)]
    budget: Budget,
}

#[derive(Subcommand)]
enum Command {
    /// Domination number and a minimum dominating set.
    Gamma(Input),
    /// Bondage number and a removal set.
    Bondage {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        bondage_cap: Option<usize>,
    },
    /// Hartnell–Rall edge bound.
    Hr(Input),
    /// Orientable and non-orientable genus.
    Genus {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        budget: Budget,
    },
    /// Faces of an embedding.
    Faces(EmbeddingInput),
    /// Per-edge curvature of an embedding.
    Curvature(EmbeddingInput),
    /// Improved additive constant and case bounds for a surface.
    Constant { class: SurfaceClass, genus: u64 },
    /// Every applicable bondage bound.
    Bounds {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        budget: Budget,
    },
    /// Check b(G) against all bounds for each graph of a corpus.
    Survey {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        budget: Budget,
        #[arg(long)]
        bondage_cap: Option<usize>,
        /// Skip the bondage number for graphs with more edges.
        #[arg(long, default_value_t = 40)]
        max_bondage_edges: usize,
    },
    /// Print a family member as graph6.
    Gen {
        family: String,
        params: Vec<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Usage(String),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read_text(file: &Option<PathBuf>) -> Result<String, Failure> {
    match file {
        Some(p) => {
            fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))
        }
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn graphs(input: &Input) -> Result<Vec<Graph>, Failure> {
    Ok(read_graphs(&read_text(&input.file)?)?)
}

fn budget(b: &Budget) -> Result<GenusBudget, Failure> {
    Ok(GenusBudget::new(b.budget)?)
}

fn embeddings(e: &EmbeddingInput) -> Result<Vec<RotationSystem>, Failure> {
    if let Some(path) = &e.embedding {
        return Ok(vec![parse_embedding(&read_text(&Some(path.clone()))?)?]);
    }
    let budget = budget(&e.budget)?;
    graphs(&e.input)?
        .iter()
        .map(|g| {
            min_genus(g, e.class, budget)?.witness.ok_or_else(|| {
                Failure::Usage("acyclic graph has no non-orientable embedding".into())
            })
        })
        .collect()
}

fn genus_json(r: &Result<bondlab::GenusResult, Error>) -> serde_json::Value {
    match r {
        Ok(r) => json!(r.genus),
        Err(Error::BudgetExceeded { .. }) => json!("budget"),
        Err(e) => json!(e.to_string()),
    }
}

fn genus_text(r: &Result<bondlab::GenusResult, Error>) -> String {
    match r {
        Ok(r) => r.genus.to_string(),
        Err(Error::BudgetExceeded { .. }) => "budget".into(),
        Err(e) => format!("error ({e})"),
    }
}

fn list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

/// Renders per-graph records in the requested format.
fn emit(format: Format, header: &str, rows: Vec<(serde_json::Value, String, String)>) -> String {
    match format {
        Format::Json => {
            let values: Vec<_> = rows.into_iter().map(|r| r.0).collect();
            serde_json::to_string_pretty(&values).unwrap() + "\n"
        }
        Format::Text => rows.into_iter().map(|r| r.1 + "\n").collect(),
        Format::Csv => {
            let mut out = format!("{header}\n");
            for r in rows {
                out.push_str(&r.2);
                out.push('\n');
            }
            out
        }
    }
}

fn run(cli: &Cli) -> Result<(String, Option<String>), Failure> {
    let f = cli.format;
    let out = match &cli.command {
        Command::Gamma(input) => {
            let rows = graphs(input)?
                .iter()
                .map(|g| {
                    let r = domination_number(g);
                    (
                        json!(r),
                        format!("γ = {}  set: {}", r.gamma, list(&r.witness)),
                        format!("{},{}", r.gamma, list(&r.witness)),
                    )
                })
                .collect();
            emit(f, "gamma,witness", rows)
        }
        Command::Bondage { input, bondage_cap } => {
            let mut rows = Vec::new();
            for g in graphs(input)? {
                let r = bondage_number(&g, *bondage_cap)?;
                rows.push((
                    json!(r),
                    format!(
                        "b = {}  γ = {}  remove: {}",
                        r.b,
                        r.base_gamma,
                        list(&r.witness)
                    ),
                    format!("{},{},{}", r.b, r.base_gamma, list(&r.witness)),
                ));
            }
            emit(f, "bondage,gamma,witness", rows)
        }
        Command::Hr(input) => {
            let mut rows = Vec::new();
            for g in graphs(input)? {
                let r = hr_bound(&g)?;
                rows.push((
                    json!(r),
                    format!("hr = {}  at {}", r.value, r.edge),
                    format!("{},{}", r.value, r.edge),
                ));
            }
            emit(f, "hr,edge", rows)
        }
        Command::Genus { input, budget: b } => {
            let budget = budget(b)?;
            let mut rows = Vec::new();
            for g in graphs(input)? {
                let h = min_genus(&g, SurfaceClass::Orientable, budget);
                let k = min_genus(&g, SurfaceClass::NonOrientable, budget);
                for r in [&h, &k] {
                    if let Err(e @ (Error::RequiresConnected | Error::SizeLimit(_))) = r {
                        return Err(Failure::Usage(e.to_string()));
                    }
                }
                rows.push((
                    json!({ "h": genus_json(&h), "k": genus_json(&k) }),
                    format!("h = {}  k = {}", genus_text(&h), genus_text(&k)),
                    format!("{},{}", genus_text(&h), genus_text(&k)),
                ));
            }
            emit(f, "h,k", rows)
        }
        Command::Faces(e) => {
            let mut rows = Vec::new();
            for rs in embeddings(e)? {
                let s = rs.summary()?;
                let t = rs.trace_faces()?;
                let mut text = format!(
                    "{} faces on {} (Euler genus {})\n",
                    s.faces,
                    SurfaceSpec::of(&s),
                    s.euler_genus
                );
                for face in &t.faces {
                    let walk: Vec<String> = face.iter().map(|&(u, _)| u.to_string()).collect();
                    text.push_str(&format!("  [{}] {}\n", face.len(), walk.join(" ")));
                }
                text.push_str(&write_embedding(&rs));
                let csv = t
                    .face_lengths()
                    .iter()
                    .enumerate()
                    .map(|(i, l)| format!("{i},{l}"))
                    .collect::<Vec<_>>()
                    .join("\n");
                rows.push((
                    json!({ "summary": s, "faces": t }),
                    text.trim_end().to_string(),
                    csv,
                ));
            }
            emit(f, "face,length", rows)
        }
        Command::Curvature(e) => {
            let mut rows = Vec::new();
            for rs in embeddings(e)? {
                let surface = SurfaceSpec::of(&rs.summary()?);
                let r = curvature_table(&rs, surface)?;
                let mut text = format!("surface {surface}\n");
                let mut csv = Vec::new();
                for c in &r.per_edge {
                    text.push_str(&format!(
                        "  {}  w = {}  f = {}  faces {}/{}  curvature = {}\n",
                        c.edge,
                        ratio_string(&c.w),
                        ratio_string(&c.f),
                        c.m1,
                        c.m2,
                        ratio_string(&c.curvature)
                    ));
                    csv.push(format!(
                        "\"{}\",{},{},{},{},{}",
                        c.edge,
                        ratio_string(&c.w),
                        ratio_string(&c.f),
                        c.m1,
                        c.m2,
                        ratio_string(&c.curvature)
                    ));
                }
                text.push_str(&format!(
                    "sum w = {}  sum f = {}  sum curvature = {}",
                    ratio_string(&r.sum_w),
                    ratio_string(&r.sum_f),
                    ratio_string(&r.sum_curvature)
                ));
                rows.push((json!(r), text, csv.join("\n")));
            }
            emit(f, "edge,w,f,m1,m2,curvature", rows)
        }
        Command::Constant { class, genus } => {
            let surface = match class {
                SurfaceClass::Orientable => SurfaceSpec::orientable(*genus),
                SurfaceClass::NonOrientable => SurfaceSpec::non_orientable(*genus)?,
            };
            let c = improved_constant(surface);
            let cases: Vec<_> = Case::ALL
                .iter()
                .map(|&case| case_bound(case, c + 2, surface.genus_term()).unwrap())
                .collect();
            let mut text = format!("{surface}: b(G) <= Δ(G) + {c}\n");
            for b in &cases {
                text.push_str(&format!(
                    "  case {:?}: s = {}  t = {}  value = {}\n",
                    b.case,
                    b.s,
                    b.t,
                    ratio_string(&b.value)
                ));
            }
            let row = (
                json!({ "surface": surface.to_string(), "constant": c, "cases": cases }),
                text.trim_end().to_string(),
                format!("{surface},{c}"),
            );
            emit(f, "surface,constant", vec![row])
        }
        Command::Bounds { input, budget: b } => {
            let budget = budget(b)?;
            let mut rows = Vec::new();
            for g in graphs(input)? {
                let genus = |class| match min_genus(&g, class, budget) {
                    Ok(r) => Ok(Some(r.genus as u64)),
                    Err(Error::BudgetExceeded { .. }) => Ok(None),
                    Err(e) => Err(e),
                };
                let (h, k) = if g.is_connected() {
                    (
                        genus(SurfaceClass::Orientable)?,
                        genus(SurfaceClass::NonOrientable)?,
                    )
                } else {
                    (None, None)
                };
                let s = bound_suite(&g, h, k)?;
                let text = s
                    .populated()
                    .iter()
                    .map(|(name, v)| format!("{name} = {v}"))
                    .chain([format!("best = {}", s.best)])
                    .collect::<Vec<_>>()
                    .join("\n");
                let opt = |x: Option<u64>| x.map_or(String::new(), |v| v.to_string());
                let csv = format!(
                    "{},{},{},{},{},{}",
                    s.hr,
                    s.degree,
                    opt(s.orientable_surface),
                    opt(s.nonorientable_surface),
                    opt(s.planar),
                    s.best
                );
                rows.push((json!(s), text, csv));
            }
            emit(
                f,
                "hr,degree,bound_orient,bound_nonorient,bound_planar,bound_best",
                rows,
            )
        }
        Command::Survey {
            input,
            budget: b,
            bondage_cap,
            max_bondage_edges,
        } => {
            let named: Vec<(String, Graph)> = graphs(input)?
                .into_iter()
                .enumerate()
                .map(|(i, g)| (i.to_string(), g))
                .collect();
            let opts = SurveyOptions {
                budget: budget(b)?,
                bondage_cap: *bondage_cap,
                max_bondage_edges: *max_bondage_edges,
            };
            let report = run_survey(&named, &opts);
            let out = match f {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv(),
            };
            if report.exit_code() != 0 {
                return Ok((
                    out,
                    Some(format!("{} bound violation(s)", report.violations())),
                ));
            }
            out
        }
        Command::Gen {
            family,
            params,
            seed,
        } => {
            let spec = FamilySpec::parse(family, params, *seed)?;
            write_graph6(&spec.generate()?) + "\n"
        }
    };
    Ok((out, None))
}

fn write_out(cli: &Cli, out: &str) -> Result<(), Failure> {
    match &cli.report {
        Some(p) => fs::write(p, out)?,
        None => io::stdout().write_all(out.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = panic::catch_unwind(|| {
        run(&cli).and_then(|(out, violation)| {
            write_out(&cli, &out)?;
            violation.map_or(Ok(()), |v| Err(Failure::Violation(v)))
        })
    });
    match result {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Failure::Violation(msg))) => {
            eprintln!("bondlab: {msg}");
            ExitCode::from(1)
        }
        Ok(Err(Failure::Usage(msg))) => {
            eprintln!("bondlab: {msg}");
            ExitCode::from(2)
        }
        Err(_) => ExitCode::from(3),
    }
}

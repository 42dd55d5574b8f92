//! The `pgl` command line. [`run`] takes explicit streams so tests can drive
//! it in-process.
//!
//! Exit codes: 0 when the command succeeds or the checked property holds,
//! 1 when the property fails (evidence is printed), 2 for usage, I/O and
//! parse errors.

use std::collections::BTreeMap;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use pgl_core::constructions::{build_separated_graph, expand, replicate};
use pgl_core::invariants::{find_imperfect_subgraph, graph_parameters};
use pgl_core::io::{
    certificate_from_json, certificate_to_json, emit_graph, parse_graph, to_dot, GraphDocument,
    GraphFormat,
};
use pgl_core::isomorphism::find_isomorphism;
use pgl_core::oracles::enumerate::DEFAULT_SEED;
use pgl_core::oracles::{sweep, EnumerationMode, Property};
use pgl_core::pipeline::{verify_certificate, wpgt_certificate, PipelineError};
use pgl_core::{Graph, Vertex};

#[derive(Parser, Debug)]
#[command(name = "pgl", version, about = "Perfect graph toolkit")]
struct Cli {
    /// Input graph file (stdin when absent)
    #[arg(long = "in", global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Output file (stdout when absent)
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Input format; guessed from the file extension, else graph6
    #[arg(long, global = true, value_name = "FORMAT")]
    format: Option<GraphFormat>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print alpha, omega, chi and perfection with witnesses
    Analyze,
    /// Write a clique-cover certificate, or the evidence of imperfection
    Certify,
    /// Check a certificate against the input graph
    Verify {
        #[arg(long, value_name = "FILE")]
        cert: PathBuf,
    },
    /// Add a clone of VERTEX
    Replicate {
        #[arg(long)]
        vertex: Vertex,
        /// Output format (defaults to the input format)
        #[arg(long)]
        to: Option<GraphFormat>,
    },
    /// Replace each vertex by a clique; unlisted vertices keep multiplicity 1
    Expand {
        /// Comma-separated `vertex:multiplicity` pairs
        #[arg(long, value_name = "V:K,...")]
        mult: String,
        #[arg(long)]
        to: Option<GraphFormat>,
    },
    /// Print the separated graphs and the back map as JSON
    Separate,
    /// Look for an isomorphism to another graph
    Iso {
        #[arg(long, value_name = "FILE")]
        other: PathBuf,
    },
    /// Check properties over enumerated graphs
    Sweep {
        /// Property name, a comma-separated list, or `all`
        #[arg(long)]
        prop: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        count: Option<usize>,
    },
    /// Re-emit the input in another format (`dot` included)
    Convert {
        #[arg(long)]
        to: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Exhaustive,
    Random,
}

const DEFAULT_RANDOM_COUNT: usize = 1000;

struct Ctx<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

type Outcome = Result<i32, String>;

pub fn run<I, S>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut ctx = Ctx {
        stdin,
        stdout,
        stderr,
    };
    match dispatch(&cli, &mut ctx) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(ctx.stderr, "error: {msg}");
            2
        }
    }
}

fn dispatch(cli: &Cli, ctx: &mut Ctx) -> Outcome {
    match &cli.command {
        Command::Analyze => analyze(cli, ctx),
        Command::Certify => certify(cli, ctx),
        Command::Verify { cert } => verify(cli, ctx, cert),
        Command::Replicate { vertex, to } => {
            let (g, format) = read_input(cli, ctx)?;
            let (h, w) = replicate(&g, *vertex).map_err(|e| e.to_string())?;
            writeln!(ctx.stderr, "clone {} of {}", w.clone, w.base).map_err(io_err)?;
            emit(cli, ctx, &h, to.unwrap_or(format))
        }
        Command::Expand { mult, to } => {
            let (g, format) = read_input(cli, ctx)?;
            let mut m: BTreeMap<Vertex, usize> = g.nodes().iter().map(|v| (v, 1)).collect();
            m.extend(parse_mult(mult)?);
            let (h, _) = expand(&g, &m).map_err(|e| e.to_string())?;
            emit(cli, ctx, &h, to.unwrap_or(format))
        }
        Command::Separate => separate(cli, ctx),
        Command::Iso { other } => iso(cli, ctx, other),
        Command::Sweep {
            prop,
            n,
            mode,
            seed,
            count,
        } => run_sweep(cli, ctx, prop, *n, *mode, *seed, *count),
        Command::Convert { to } => {
            let (g, _) = read_input(cli, ctx)?;
            if to == "dot" {
                write_out(cli, ctx, &to_dot(&g))?;
                return Ok(0);
            }
            let format: GraphFormat = to.parse()?;
            emit(cli, ctx, &g, format)
        }
    }
}

fn io_err(e: std::io::Error) -> String {
    e.to_string()
}

fn format_for(cli: &Cli, path: Option<&Path>) -> GraphFormat {
    cli.format
        .or_else(|| path.and_then(GraphFormat::from_path))
        .unwrap_or(GraphFormat::Graph6)
}

fn read_graph_file(cli: &Cli, path: &Path) -> Result<(Graph, GraphFormat), String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let format = format_for(cli, Some(path));
    let g = parse_graph(&GraphDocument::new(format, text))
        .map_err(|e| format!("{}: {e}", path.display()))?;
    Ok((g, format))
}

fn read_input(cli: &Cli, ctx: &mut Ctx) -> Result<(Graph, GraphFormat), String> {
    match &cli.input {
        Some(path) => read_graph_file(cli, path),
        None => {
            let mut text = String::new();
            ctx.stdin.read_to_string(&mut text).map_err(io_err)?;
            let format = format_for(cli, None);
            let g = parse_graph(&GraphDocument::new(format, text))
                .map_err(|e| format!("<stdin>: {e}"))?;
            Ok((g, format))
        }
    }
}

fn write_out(cli: &Cli, ctx: &mut Ctx, text: &str) -> Result<(), String> {
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => ctx.stdout.write_all(text.as_bytes()).map_err(io_err),
    }
}

fn emit(cli: &Cli, ctx: &mut Ctx, g: &Graph, format: GraphFormat) -> Outcome {
    write_out(cli, ctx, &emit_graph(g, format).payload)?;
    Ok(0)
}

fn parse_mult(spec: &str) -> Result<BTreeMap<Vertex, usize>, String> {
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|pair| {
            let (v, k) = pair
                .split_once(':')
                .ok_or_else(|| format!("expected `vertex:multiplicity`, found `{pair}`"))?;
            let v = v
                .trim()
                .parse()
                .map_err(|_| format!("bad vertex in `{pair}`"))?;
            let k = k
                .trim()
                .parse()
                .map_err(|_| format!("bad multiplicity in `{pair}`"))?;
            Ok((v, k))
        })
        .collect()
}

fn analyze(cli: &Cli, ctx: &mut Ctx) -> Outcome {
    let (g, _) = read_input(cli, ctx)?;
    let p = graph_parameters(&g);
    let imperfect = find_imperfect_subgraph(&g);
    let mut text = format!(
        "alpha={} omega={} chi={} perfect={}\n",
        p.alpha,
        p.omega,
        p.chi,
        imperfect.is_none()
    );
    text.push_str(&format!("max_clique={}\n", p.max_clique_witness));
    text.push_str(&format!("max_stable={}\n", p.max_stable_witness));
    let colors: Vec<String> = p
        .chi_witness
        .iter()
        .map(|(v, c)| format!("{v}:{c}"))
        .collect();
    text.push_str(&format!("coloring={}\n", colors.join(",")));
    if let Some(s) = imperfect {
        text.push_str(&format!("imperfect_subgraph={s}\n"));
    }
    write_out(cli, ctx, &text)?;
    Ok(0)
}

fn certify(cli: &Cli, ctx: &mut Ctx) -> Outcome {
    let (g, _) = read_input(cli, ctx)?;
    match wpgt_certificate(&g) {
        Ok(cert) => {
            write_out(cli, ctx, &certificate_to_json(&cert))?;
            Ok(0)
        }
        Err(PipelineError::NotPerfect(f)) => {
            let evidence = serde_json::to_string_pretty(&f).map_err(|e| e.to_string())?;
            writeln!(ctx.stdout, "{evidence}").map_err(io_err)?;
            writeln!(ctx.stderr, "{f}").map_err(io_err)?;
            Ok(1)
        }
        Err(PipelineError::Graph(e)) => Err(e.to_string()),
    }
}

fn verify(cli: &Cli, ctx: &mut Ctx, cert_path: &Path) -> Outcome {
    let (g, _) = read_input(cli, ctx)?;
    let text =
        fs::read_to_string(cert_path).map_err(|e| format!("{}: {e}", cert_path.display()))?;
    let cert = certificate_from_json(&text).map_err(|e| format!("{}: {e}", cert_path.display()))?;
    if verify_certificate(&g, &cert) {
        writeln!(ctx.stdout, "certificate valid").map_err(io_err)?;
        Ok(0)
    } else {
        writeln!(ctx.stdout, "certificate invalid").map_err(io_err)?;
        Ok(1)
    }
}

fn graph_json(g: &Graph) -> serde_json::Value {
    let edges: Vec<[Vertex; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
    json!({ "nodes": g.nodes(), "edges": edges })
}

fn separate(cli: &Cli, ctx: &mut Ctx) -> Outcome {
    let (g, _) = read_input(cli, ctx)?;
    let s = build_separated_graph(&g).map_err(|e| e.to_string())?;
    let value = json!({
        "cover": s.cover,
        "gs": graph_json(&s.gs),
        "disjoint_cover": s.disjoint_cover,
        "gs_prime": graph_json(&s.gs_prime),
        "back": s.back,
    });
    let mut text = serde_json::to_string_pretty(&value).map_err(|e| e.to_string())?;
    text.push('\n');
    write_out(cli, ctx, &text)?;
    Ok(0)
}

fn iso(cli: &Cli, ctx: &mut Ctx, other: &Path) -> Outcome {
    let (g, _) = read_input(cli, ctx)?;
    let (h, _) = read_graph_file(cli, other)?;
    match find_isomorphism(&g, &h) {
        Some(w) => {
            let mut text = serde_json::to_string_pretty(&json!({ "forward": w.forward }))
                .map_err(|e| e.to_string())?;
            text.push('\n');
            write_out(cli, ctx, &text)?;
            Ok(0)
        }
        None => {
            writeln!(ctx.stdout, "not isomorphic").map_err(io_err)?;
            Ok(1)
        }
    }
}

fn parse_props(spec: &str) -> Result<Vec<Property>, String> {
    if spec == "all" {
        return Ok(Property::ALL.to_vec());
    }
    spec.split(',').map(|s| s.trim().parse()).collect()
}

fn run_sweep(
    cli: &Cli,
    ctx: &mut Ctx,
    prop: &str,
    n: usize,
    mode: Mode,
    seed: Option<u64>,
    count: Option<usize>,
) -> Outcome {
    let props = parse_props(prop)?;
    let mode = match mode {
        Mode::Exhaustive => EnumerationMode::Exhaustive,
        Mode::Random => EnumerationMode::Random {
            seed: seed.unwrap_or(DEFAULT_SEED),
            count: count.unwrap_or(DEFAULT_RANDOM_COUNT),
        },
    };
    let start = Instant::now();
    let report = sweep(&props, n, mode).map_err(|e| e.to_string())?;
    write_out(cli, ctx, &report.to_string())?;
    writeln!(ctx.stderr, "elapsed {:.3}s", start.elapsed().as_secs_f64()).map_err(io_err)?;
    Ok(if report.counterexamples.is_empty() {
        0
    } else {
        1
    })
}

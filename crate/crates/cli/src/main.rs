use std::io::IsTerminal;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use chimney::chimney::Chimney;
use chimney::cosets::{count_parahoric, count_vertex, ParahoricFace};
use chimney::coxeter::{AffineElement, CoxeterSystem};
use chimney::error::Error;
use chimney::gallery::{enumerate_folded, shadow_alcove, shadow_vertex, GalleryType, Shadow};
use chimney::geometry::Panel;
use chimney::parse::{parse_coroot, parse_element, parse_index_set, parse_q_values};
use chimney::polynomial::PolynomialJson;
use chimney::render::{render_svg, Window};
use chimney::verify::{verify_suite, VerifyConfig};

#[derive(Parser)]
#[command(
    name = "chimney",
    version,
    about = "Chimney retractions, folded galleries and shadows in affine Weyl groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Alcove shadow of --x, or vertex shadow of --lambda.
    Shadow(ShadowArgs),
    /// Count polynomial of a double-coset intersection.
    Count(CountArgs),
    /// Orientation and chimney gate of each panel of --x.
    Orientation(TargetArgs),
    /// Positively folded galleries of type --x with their weights.
    Gallery(GalleryArgs),
    /// Run the exhaustive verification suite.
    Verify(VerifyArgs),
    /// SVG picture of a rank 2 shadow.
    Render(ShadowArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Args)]
struct ChimneyArgs {
    /// Affine type, e.g. A2, C2, G2, A~3.
    #[arg(long = "type")]
    ty: String,
    /// Index set J: comma-separated, "" for the empty set, "all" for [n].
    #[arg(long = "J", default_value = "")]
    j: String,
    /// Element y twisting the chimney.
    #[arg(long, default_value = "")]
    y: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ShadowArgs {
    #[command(flatten)]
    common: ChimneyArgs,
    #[arg(long, conflicts_with = "lambda")]
    x: Option<String>,
    /// Dominant coroot vector, e.g. [1,1].
    #[arg(long)]
    lambda: Option<String>,
}

#[derive(Args)]
struct TargetArgs {
    #[command(flatten)]
    common: ChimneyArgs,
    #[arg(long)]
    x: String,
}

#[derive(Args)]
struct GalleryArgs {
    #[command(flatten)]
    common: ChimneyArgs,
    #[arg(long)]
    x: String,
    /// Keep only galleries ending at this alcove.
    #[arg(long)]
    z: Option<String>,
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    common: ChimneyArgs,
    #[arg(long, requires = "z", conflicts_with_all = ["lambda", "mu"])]
    x: Option<String>,
    #[arg(long)]
    z: Option<String>,
    #[arg(long, requires = "mu")]
    lambda: Option<String>,
    #[arg(long)]
    mu: Option<String>,
    /// J_sigma of the left parahoric (with --x).
    #[arg(long)]
    sigma: Option<String>,
    /// J_tau of the right parahoric (with --x).
    #[arg(long)]
    tau: Option<String>,
    /// Evaluate with every q_i equal to this value.
    #[arg(long, conflicts_with = "per_type_q")]
    q: Option<i64>,
    /// Evaluate at q_0,...,q_n.
    #[arg(long)]
    per_type_q: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated affine types.
    #[arg(long = "type", default_value = "A1,A2,C2")]
    types: String,
    #[arg(long, default_value_t = 5)]
    max_length: usize,
    #[arg(long, default_value_t = 2)]
    y_max_length: usize,
    /// Comma-separated alphabet sizes.
    #[arg(long, default_value = "2,3")]
    q: String,
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Internal(e.to_string())
        }
    }
}

type CliResult<T> = Result<T, Failure>;

#[derive(Serialize)]
struct CountJson {
    #[serde(flatten)]
    polynomial: PolynomialJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<i128>,
}

struct Context {
    sys: CoxeterSystem,
    ch: Chimney,
}

fn context(args: &ChimneyArgs) -> CliResult<Context> {
    let sys = CoxeterSystem::from_label(&args.ty)?;
    let j = parse_index_set(&sys, &args.j)?;
    let y = parse_element(&sys, &args.y)?;
    let ch = Chimney::new(&sys, &j, y)?;
    Ok(Context { sys, ch })
}

fn emit(out: &Option<PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn shadow_of(ctx: &Context, args: &ShadowArgs) -> CliResult<(Shadow, Option<AffineElement>)> {
    match (&args.x, &args.lambda) {
        (Some(x), None) => {
            let x = parse_element(&ctx.sys, x)?;
            Ok((shadow_alcove(&ctx.sys, &ctx.ch, &x), Some(x)))
        }
        (None, Some(l)) => {
            let lambda = parse_coroot(&ctx.sys, l)?;
            Ok((shadow_vertex(&ctx.sys, &ctx.ch, &lambda)?, None))
        }
        _ => Err(Failure::Input("give exactly one of --x or --lambda".into())),
    }
}

fn run_shadow(args: &ShadowArgs, force_svg: bool) -> CliResult<()> {
    let ctx = context(&args.common)?;
    let (shadow, target) = shadow_of(&ctx, args)?;
    let mut format = if force_svg {
        Format::Svg
    } else {
        args.common.format
    };
    if format == Format::Svg && ctx.sys.rank() != 2 {
        eprintln!("note: SVG needs a rank 2 system; writing JSON instead");
        format = Format::Json;
    }
    let text = match format {
        Format::Json => serde_json::to_string(&shadow.to_json(&ctx.sys)).expect("serializable"),
        Format::Svg => render_svg(&ctx.sys, &shadow, &ctx.ch, target.as_ref(), &Window::Auto)?,
        Format::Text => {
            let lines: Vec<String> = match &shadow {
                Shadow::Alcoves(_) => shadow
                    .sorted_alcoves(&ctx.sys)
                    .iter()
                    .map(|x| ctx.sys.format_element(x))
                    .collect(),
                Shadow::Vertices(vs) => vs.iter().map(|v| v.to_string()).collect(),
            };
            lines.join("\n")
        }
    };
    emit(&args.common.out, &text)
}

fn run_count(args: &CountArgs) -> CliResult<()> {
    let ctx = context(&args.common)?;
    let sys = &ctx.sys;
    let poly = match (&args.x, &args.lambda) {
        (Some(x), None) => {
            let x = parse_element(sys, x)?;
            let z = parse_element(sys, args.z.as_deref().unwrap_or(""))?;
            let face = |s: &Option<String>| -> CliResult<ParahoricFace> {
                Ok(ParahoricFace::new(
                    sys,
                    &parse_index_set(sys, s.as_deref().unwrap_or(""))?,
                )?)
            };
            count_parahoric(sys, &ctx.ch, &face(&args.sigma)?, &face(&args.tau)?, &x, &z)?
        }
        (None, Some(l)) => {
            let lambda = parse_coroot(sys, l)?;
            let mu = parse_coroot(sys, args.mu.as_deref().unwrap_or(""))?;
            count_vertex(sys, &ctx.ch, &lambda, &mu)?
        }
        _ => {
            return Err(Failure::Input(
                "give --x and --z, or --lambda and --mu".into(),
            ))
        }
    };
    let values = match (args.q, &args.per_type_q) {
        (Some(q), _) if q < 2 => return Err(Failure::Input(format!("--q {q}: need q >= 2"))),
        (Some(q), _) => Some(vec![q; sys.rank() + 1]),
        (None, Some(s)) => Some(parse_q_values(sys, s)?),
        (None, None) => None,
    };
    let value = values.map(|v| poly.evaluate(&v));
    let text = match args.common.format {
        Format::Json => serde_json::to_string(&CountJson {
            polynomial: poly.to_json(),
            value,
        })
        .expect("serializable"),
        Format::Text => match value {
            Some(v) => v.to_string(),
            None => poly.to_string(),
        },
        Format::Svg => return Err(Failure::Input("count has no svg output".into())),
    };
    emit(&args.common.out, &text)
}

fn run_orientation(args: &TargetArgs) -> CliResult<()> {
    let ctx = context(&args.common)?;
    let sys = &ctx.sys;
    let x = parse_element(sys, &args.x)?;
    let mut rows = Vec::new();
    for i in 0..=sys.rank() {
        let sign = ctx.ch.orientation(sys, &x, i);
        let gate = ctx.ch.gate(sys, &Panel::new(x.clone(), i))?;
        rows.push((i, sign, sys.format_element(&gate)));
    }
    let text = match args.common.format {
        Format::Json => json!({
            "alcove": sys.format_element(&x),
            "panels": rows.iter().map(|(i, s, g)| json!({"type": i, "orientation": s.to_string(), "gate": g})).collect::<Vec<_>>(),
        })
        .to_string(),
        Format::Text => rows
            .iter()
            .map(|(i, s, g)| format!("panel {i}: {s}  gate {g}"))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Svg => return Err(Failure::Input("orientation has no svg output".into())),
    };
    emit(&args.common.out, &text)
}

fn run_gallery(args: &GalleryArgs) -> CliResult<()> {
    let ctx = context(&args.common)?;
    let sys = &ctx.sys;
    let x = parse_element(sys, &args.x)?;
    let z = args
        .z
        .as_deref()
        .map(|z| parse_element(sys, z))
        .transpose()?;
    let ty = GalleryType::of_element(sys, &x);
    let leaves: Vec<_> = enumerate_folded(sys, &ctx.ch, &ty)
        .into_iter()
        .map(|(g, w)| (g.end(sys), g, w))
        .filter(|(end, _, _)| z.as_ref().is_none_or(|z| z == end))
        .collect();
    let text = match args.common.format {
        Format::Json => json!({
            "type": ty.word(),
            "galleries": leaves.iter().map(|(end, g, w)| json!({
                "steps": g.steps.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                "end": sys.format_element(end),
                "weight": w.to_json(),
            })).collect::<Vec<_>>(),
        })
        .to_string(),
        Format::Text => leaves
            .iter()
            .map(|(end, g, w)| {
                let steps: Vec<String> = g.steps.iter().map(|s| s.to_string()).collect();
                format!(
                    "{}  -> {}  weight {}",
                    steps.join(" "),
                    sys.format_element(end),
                    w
                )
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Svg => return Err(Failure::Input("gallery has no svg output".into())),
    };
    emit(&args.common.out, &text)
}

fn run_verify(args: &VerifyArgs) -> CliResult<bool> {
    let q_values = args
        .q
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|e| Failure::Input(format!("--q `{t}`: {e}")))
        })
        .collect::<CliResult<Vec<_>>>()?;
    let config = VerifyConfig {
        types: args
            .types
            .split(',')
            .map(|t| t.trim().to_string())
            .collect(),
        max_length: args.max_length,
        y_max_length: args.y_max_length,
        q_values,
        seed: args.seed,
        ..VerifyConfig::default()
    };
    let report = verify_suite(&config);
    let text = match args.format {
        Format::Json => report.to_json(),
        Format::Text => {
            let color = args.out.is_none()
                && std::io::stdout().is_terminal()
                && std::env::var_os("CHIMNEY_NO_COLOR").is_none();
            report.to_text(color)
        }
        Format::Svg => return Err(Failure::Input("verify has no svg output".into())),
    };
    emit(&args.out, &text)?;
    Ok(report.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Shadow(a) => run_shadow(a, false).map(|_| true),
        Command::Render(a) => run_shadow(a, true).map(|_| true),
        Command::Count(a) => run_count(a).map(|_| true),
        Command::Orientation(a) => run_orientation(a).map(|_| true),
        Command::Gallery(a) => run_gallery(a).map(|_| true),
        Command::Verify(a) => run_verify(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}

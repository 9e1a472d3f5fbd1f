use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use srg_paths::catalog::{constructive_witness, instance, Design, Instance};
use srg_paths::claims::{all_pass, claims_csv, claims_jsonl, run_claims, ClaimOptions, GROUPS};
use srg_paths::formats::{
    emit_report, parse_graph6, parse_latin, parse_sts, write_graph6, write_latin, write_sts, ReportFormat,
};
use srg_paths::survey::{builtin_manifest, parse_manifest, run_survey, summary, SurveyOptions, SURVEY_PATTERNS};
use srg_paths::witness::Witness;
use srg_paths::{
    complement_params, find_induced_until, is_primitive, multipartite_decomposition, srg_params, Error, Graph, Pattern,
    PatternName,
};

#[derive(Parser)]
#[command(name = "srg-paths", version, about = "Induced paths in strongly regular graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family graph as graph6 and compare its parameters with the closed form.
    Gen(GenArgs),
    /// Search a graph for an induced pattern.
    Find(FindArgs),
    /// Print the constructive witness for a family instance.
    Witness(WitnessArgs),
    /// Validate an input file and print its SRG parameters.
    Check(CheckArgs),
    /// Survey every graph listed in a manifest.
    Survey(SurveyArgs),
    /// Run the full claim suite and report one row per claim.
    VerifyPaper(VerifyArgs),
}

#[derive(Args)]
struct GenArgs {
    /// johnson2, kneser2, hamming2, petersen, multipartite, latin, mols or sts-block.
    family: String,
    /// Order arguments (multipartite takes r and m).
    args: Vec<usize>,
    /// Use the Bose construction (sts-block, m = 3 mod 6).
    #[arg(long, conflicts_with_all = ["skolem", "fixture"])]
    bose: Option<usize>,
    /// Use the Skolem construction (sts-block, m = 1 mod 6).
    #[arg(long, conflicts_with = "fixture")]
    skolem: Option<usize>,
    /// One of the two published STS(13) systems (1 or 2).
    #[arg(long)]
    fixture: Option<usize>,
    /// Write the graph6 line here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Also write the underlying Latin square or triple system.
    #[arg(long)]
    design: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Oracle,
    Constructive,
    Both,
}

#[derive(Args)]
struct FindArgs {
    /// graph6 file ("-" for stdin); its first graph is searched.
    #[arg(required_unless_present = "family")]
    input: Option<PathBuf>,
    /// Search a generated family instance instead, e.g. johnson2:6.
    #[arg(long, conflicts_with = "input")]
    family: Option<String>,
    #[arg(short, long, value_parser = parse_pattern)]
    pattern: PatternName,
    #[arg(long, value_enum, default_value = "oracle")]
    mode: Mode,
    /// Seconds before the oracle search gives up.
    #[arg(long, default_value_t = 60.0)]
    time_budget: f64,
}

#[derive(Args)]
struct WitnessArgs {
    /// Family spec such as johnson2:6, latin:7 or sts-bose:15.
    family: String,
    #[arg(short, long, value_parser = parse_pattern)]
    pattern: PatternName,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputKind {
    Graph6,
    Latin,
    Sts,
}

#[derive(Args)]
struct CheckArgs {
    input: PathBuf,
    #[arg(long, value_enum, default_value = "graph6")]
    kind: InputKind,
}

#[derive(Args)]
struct SurveyArgs {
    /// Manifest of `name kind payload` lines.
    #[arg(required_unless_present = "builtin")]
    manifest: Option<PathBuf>,
    /// Survey the built-in primitive SRGs on up to 36 vertices.
    #[arg(long, conflicts_with = "manifest")]
    builtin: bool,
    #[arg(long, value_parser = parse_format, default_value = "csv")]
    format: ReportFormat,
    /// Seconds allowed per graph before remaining patterns are skipped.
    #[arg(long, default_value_t = 60.0)]
    time_budget: f64,
    /// Patterns to search, comma separated.
    #[arg(long, value_delimiter = ',', value_parser = parse_pattern)]
    patterns: Vec<PatternName>,
    /// Leave elapsed_ms empty for reproducible reports.
    #[arg(long)]
    no_timing: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run a single claim group.
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(GROUPS))]
    only: Option<String>,
    #[arg(long, default_value_t = ClaimOptions::default().seed)]
    seed: u64,
    #[arg(long, default_value_t = ClaimOptions::default().random_graphs)]
    random_graphs: usize,
    /// Drop an edge from the Petersen graph (negative control).
    #[arg(long)]
    inject_fault: bool,
    #[arg(long, value_parser = parse_format, default_value = "csv")]
    format: ReportFormat,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn parse_pattern(s: &str) -> std::result::Result<PatternName, String> {
    s.parse()
}

fn parse_format(s: &str) -> std::result::Result<ReportFormat, String> {
    s.parse()
}

fn budget(secs: f64) -> Result<Duration> {
    Duration::try_from_secs_f64(secs).with_context(|| format!("invalid time budget {secs}"))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => io::stdout().write_all(text.as_bytes()).context("writing stdout"),
    }
}

fn read_in(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = read_in(path)?;
    let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    parse_graph6(line).with_context(|| format!("parsing {}", path.display()))
}

fn gen_spec(a: &GenArgs) -> Result<String> {
    let nums = a.args.iter().map(|n| format!(":{n}")).collect::<String>();
    Ok(match a.family.as_str() {
        "sts-block" | "sts" => match (a.bose, a.skolem, a.fixture, a.args.as_slice()) {
            (Some(m), ..) => format!("sts-bose:{m}"),
            (_, Some(m), ..) => format!("sts-skolem:{m}"),
            (.., Some(i), _) => format!("sts13:{i}"),
            (None, None, None, [m]) if m % 6 == 3 => format!("sts-bose:{m}"),
            (None, None, None, [m]) => format!("sts-skolem:{m}"),
            _ => bail!(Error::BadOrder("sts-block needs an order, --bose, --skolem or --fixture".into())),
        },
        "latin_square" => format!("latin{nums}"),
        f => format!("{f}{nums}"),
    })
}

fn cmd_gen(a: GenArgs) -> Result<ExitCode> {
    let inst = instance(&gen_spec(&a)?)?;
    let g6 = write_graph6(&inst.graph) + "\n";
    write_out(a.output.as_deref(), &g6)?;
    if let Some(path) = &a.design {
        let text = match &inst.design {
            Some(Design::Latin(l)) => write_latin(l),
            Some(Design::Mols(p)) => format!("{}\n{}", write_latin(p.first()), write_latin(p.second())),
            Some(Design::Sts(s)) => write_sts(s),
            None => bail!("{} has no underlying design", inst.name),
        };
        write_out(Some(path), &text)?;
    }
    let expected = inst.expected_params().map(|p| p.to_string()).unwrap_or_else(|e| e.to_string());
    let measured = srg_params(&inst.graph).map(|p| p.to_string()).unwrap_or_else(|| "not SRG".into());
    let report = format!("{}: n={} expected {expected} measured {measured}", inst.name, inst.graph.n());
    if a.output.is_some() {
        println!("{report}");
    } else {
        eprintln!("{report}");
    }
    Ok(ExitCode::SUCCESS)
}

fn show_witness(g: &Graph, w: &Witness) -> String {
    format!("{} [{}] via {}", w.pattern, w.labels(g).join(", "), w.branch)
}

/// Constructive result: `Ok(Some)` found, `Ok(None)` a documented negative.
fn constructive(inst: Option<&Instance>, g: &Graph, p: PatternName) -> Result<Option<Witness>> {
    let r = match inst {
        Some(i) => constructive_witness(i, p),
        None if p == PatternName::P4 => srg_paths::witness::p4_witness(g),
        None => bail!("constructive mode for {p} needs --family"),
    };
    match r {
        Ok(w) => Ok(Some(w)),
        Err(Error::BelowThreshold { .. } | Error::ImprimitiveInput) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn cmd_find(a: FindArgs) -> Result<ExitCode> {
    let inst = a.family.as_deref().map(instance).transpose()?;
    let g = match (&inst, &a.input) {
        (Some(i), _) => i.graph.clone(),
        (None, Some(path)) => read_graph(path)?,
        (None, None) => unreachable!("clap requires input or --family"),
    };
    let mut verdict = None;
    if a.mode != Mode::Constructive {
        let deadline = Instant::now() + budget(a.time_budget)?;
        let out = match find_induced_until(&g, &Pattern::new(a.pattern), Some(deadline)) {
            Err(Error::TimedOut) => {
                println!("oracle: {} skipped (time budget exceeded)", a.pattern);
                return Ok(ExitCode::from(2));
            }
            r => r?,
        };
        match &out.witness {
            Some(w) => println!(
                "oracle: {} found [{}]",
                a.pattern,
                w.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(", ")
            ),
            None => println!("oracle: {} not found", a.pattern),
        }
        verdict = Some(out.found);
    }
    if a.mode != Mode::Oracle {
        let w = constructive(inst.as_ref(), &g, a.pattern)?;
        match &w {
            Some(w) => println!("constructive: {}", show_witness(&g, w)),
            None => println!("constructive: no construction applies"),
        }
        if let Some(found) = verdict {
            if w.is_some() && !found {
                bail!("constructive witness exists but the oracle found none");
            }
        }
        verdict = Some(verdict.unwrap_or(false) || w.is_some());
    }
    Ok(if verdict == Some(true) { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_witness(a: WitnessArgs) -> Result<ExitCode> {
    let inst = instance(&a.family)?;
    match constructive_witness(&inst, a.pattern) {
        Ok(w) => {
            println!("{}: {}", inst.name, show_witness(&inst.graph, &w));
            Ok(ExitCode::SUCCESS)
        }
        Err(e @ (Error::BelowThreshold { .. } | Error::ImprimitiveInput)) => {
            println!("{}: {e}", inst.name);
            Ok(ExitCode::from(1))
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_check(a: CheckArgs) -> Result<ExitCode> {
    let text = read_in(&a.input)?;
    let g = match a.kind {
        InputKind::Graph6 => read_graph(&a.input)?,
        InputKind::Latin => {
            let l = parse_latin(&text)?;
            println!("Latin square of order {}", l.order());
            srg_paths::families::latin_square_graph(&l)
        }
        InputKind::Sts => {
            let s = parse_sts(&text)?;
            println!("STS({}) with {} blocks", s.order(), s.blocks().len());
            srg_paths::families::sts_block_graph(&s)
        }
    };
    println!("n = {}, edges = {}", g.n(), g.edge_count());
    let Some(p) = srg_params(&g) else {
        println!("not strongly regular");
        return Ok(ExitCode::from(1));
    };
    println!("SRG {p}");
    match complement_params(&p) {
        Ok(c) => println!("complement {c}"),
        Err(e) => println!("complement: {e}"),
    }
    println!("primitive: {}", is_primitive(&g)?);
    if let Some(shape) = multipartite_decomposition(&g) {
        println!("complete multipartite K_{{{}x{}}}", shape.r, shape.m);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_survey(a: SurveyArgs) -> Result<ExitCode> {
    let entries = match &a.manifest {
        Some(path) => {
            let text = read_in(path)?;
            parse_manifest(&text, path.parent()).with_context(|| format!("parsing {}", path.display()))?
        }
        None => builtin_manifest(),
    };
    let opts = SurveyOptions {
        patterns: if a.patterns.is_empty() { SURVEY_PATTERNS.to_vec() } else { a.patterns },
        time_budget: budget(a.time_budget)?,
        record_timing: !a.no_timing,
    };
    let survey = run_survey(&entries, &opts);
    write_out(a.output.as_deref(), &emit_report(&survey.rows, a.format))?;
    eprint!("{}", summary(&survey.rows));
    if survey.failures > 0 {
        eprintln!("{} entries failed to load", survey.failures);
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(a: VerifyArgs) -> Result<ExitCode> {
    let opts =
        ClaimOptions { only: a.only, seed: a.seed, random_graphs: a.random_graphs, inject_fault: a.inject_fault };
    let claims = run_claims(&opts);
    let text = match a.format {
        ReportFormat::Csv => claims_csv(&claims),
        ReportFormat::JsonLines => claims_jsonl(&claims),
    };
    write_out(a.output.as_deref(), &text)?;
    let failed: Vec<_> = claims.iter().filter(|c| c.status == srg_paths::claims::Status::Fail).collect();
    for c in &failed {
        eprintln!(
            "FAILED {} / {} on {}: expected {}, observed {}",
            c.group, c.claim, c.subject, c.expected, c.observed
        );
    }
    eprintln!("{} claims, {} failed", claims.len(), failed.len());
    Ok(if all_pass(&claims) { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn init_threads() -> Result<()> {
    if let Ok(v) = std::env::var("SRG_PATHS_THREADS") {
        let n: usize = v.parse().with_context(|| format!("SRG_PATHS_THREADS={v} is not a number"))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("configuring thread pool")?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = || -> Result<ExitCode> {
        init_threads()?;
        match cli.command {
            Command::Gen(a) => cmd_gen(a),
            Command::Find(a) => cmd_find(a),
            Command::Witness(a) => cmd_witness(a),
            Command::Check(a) => cmd_check(a),
            Command::Survey(a) => cmd_survey(a),
            Command::VerifyPaper(a) => cmd_verify(a),
        }
    };
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

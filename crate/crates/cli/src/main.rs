use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use polycon::canon::canonical_map;
use polycon::generators::constructible::enumerate_constructible;
use polycon::generators::enumerate::triangulation_codes;
use polycon::generators::{enumerate_polyhedra, enumerate_triangulations, family};
use polycon::io::{dot, json as jsonl, planar_code, FormatError};
use polycon::operators::{con, evenise, facecon, medial, odd_dual, predict_con_planar, radial};
use polycon::verifier::{default_suite, Claim, ClaimId, VerificationReport, Verifier, VerifyError, DEFAULT_BUDGET};
use polycon::{canonical_code, classify, is_planar, underlying_graph, Graph, PlaneMap};

#[derive(Parser)]
#[command(name = "polycon", version, about = "Plane maps, congraphs and facecongraphs of polyhedra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate maps: an enumerated class or a named family.
    Gen(GenArgs),
    /// Apply an operator to every input map.
    Op(OpArgs),
    /// Evaluate a predicate on every input record.
    Check(CheckArgs),
    /// Run a claim (or `all`) over its bounded universe.
    Verify(VerifyArgs),
    /// Print per-record statistics as JSON lines.
    Stats(InputArgs),
    /// Convert between formats.
    Convert(ConvertArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    /// planar_code
    Pc,
    /// rotation JSON lines for maps, edge-list JSON lines for graphs
    Json,
    /// edge-list JSON lines
    Edges,
    /// Graphviz DOT
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Triangulations,
    Polyhedra,
    Cubic,
    Constructible,
    Pyramid,
    Prism,
    Antiprism,
    Platonic,
}

#[derive(Args)]
struct OutputArgs {
    /// Output path, `-` for standard output.
    #[arg(short = 'o', long = "output", visible_alias = "emit", default_value = "-")]
    output: String,
    /// Output format; inferred from the output extension when omitted.
    #[arg(long)]
    format: Option<FormatArg>,
}

#[derive(Args)]
struct GenArgs {
    kind: GenKind,
    /// Vertex count (family size for named families, faces for `platonic`).
    #[arg(short = 'n', long = "vertices")]
    vertices: Option<usize>,
    /// For `cubic`: every cubic polyhedron with at most this many faces.
    #[arg(long)]
    max_faces: Option<usize>,
    /// For `constructible`: write one JSON certificate per map to this path.
    #[arg(long)]
    certificates: Option<String>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OpKind {
    Con,
    Facecon,
    Dual,
    Mirror,
    Radial,
    Medial,
    Evenise,
    OddDual,
    Canonical,
}

#[derive(Args)]
struct OpArgs {
    op: OpKind,
    /// Input path, `-` for standard input.
    input: String,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Predicate {
    Planar,
    Polyhedral,
    MaximalPlanar,
    Bipartite,
    Cubic,
    ConPlanar,
    PredictConPlanar,
    FaceconMaximalPlanar,
    Classify,
}

#[derive(Args)]
struct CheckArgs {
    predicate: Predicate,
    input: String,
    #[arg(short = 'o', long = "output", default_value = "-")]
    output: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim id such as `thm1` or `p_bd2`, or `all`.
    claim: String,
    #[arg(short = 'n', long = "vertices")]
    vertices: Option<usize>,
    #[arg(long)]
    max_faces: Option<usize>,
    /// Write the JSON report here.
    #[arg(long)]
    report: Option<String>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

#[derive(Args)]
struct InputArgs {
    input: String,
    #[arg(short = 'o', long = "output", default_value = "-")]
    output: String,
}

#[derive(Args)]
struct ConvertArgs {
    input: String,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(String),
    Malformed(FormatError),
    Operator(String),
    Budget(VerifyError),
}

impl CliError {
    fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "E_USAGE",
            CliError::Io(_) => "E_IO",
            CliError::Malformed(_) => "E_MALFORMED",
            CliError::Operator(_) => "E_OPERATOR",
            CliError::Budget(_) => "E_BUDGET",
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(s) | CliError::Io(s) | CliError::Operator(s) => s.clone(),
            CliError::Malformed(e) => e.to_string(),
            CliError::Budget(e) => e.to_string(),
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Malformed(e)
    }
}

type CliResult<T> = Result<T, CliError>;

enum Records {
    Maps(Vec<PlaneMap>),
    Graphs(Vec<Graph>),
}

impl Records {
    fn graphs(&self) -> Vec<Graph> {
        match self {
            Records::Maps(m) => m.iter().map(underlying_graph).collect(),
            Records::Graphs(g) => g.clone(),
        }
    }

    fn maps(self) -> CliResult<Vec<PlaneMap>> {
        match self {
            Records::Maps(m) => Ok(m),
            Records::Graphs(_) => Err(CliError::Usage("this command needs embedded maps, not edge lists".into())),
        }
    }
}

fn read_input(path: &str) -> CliResult<Vec<u8>> {
    let mut buf = Vec::new();
    if path == "-" {
        io::stdin().read_to_end(&mut buf).map_err(|e| CliError::Io(e.to_string()))?;
    } else {
        buf = fs::read(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
    }
    Ok(buf)
}

fn parse_records(bytes: &[u8]) -> CliResult<Records> {
    let first = bytes.iter().position(|b| !b.is_ascii_whitespace());
    if bytes.starts_with(planar_code::HEADER) || first.is_none_or(|i| bytes[i] != b'{') {
        return Ok(Records::Maps(planar_code::read(bytes)?));
    }
    let text = std::str::from_utf8(bytes).map_err(|e| FormatError::MalformedInput {
        offset: e.valid_up_to(),
        reason: "invalid UTF-8".into(),
    })?;
    let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    let head: Value = serde_json::from_str(line).map_err(|e| FormatError::MalformedInput {
        offset: first.unwrap_or(0),
        reason: e.to_string(),
    })?;
    if head.get("rotation").is_some() {
        Ok(Records::Maps(jsonl::read_rotations(text)?))
    } else if head.get("edges").is_some() {
        Ok(Records::Graphs(jsonl::read_edges(text)?))
    } else {
        Err(CliError::Malformed(FormatError::MalformedInput {
            offset: first.unwrap_or(0),
            reason: "expected a rotation or edge-list record".into(),
        }))
    }
}

fn load(path: &str) -> CliResult<Records> {
    parse_records(&read_input(path)?)
}

fn write_output(path: &str, bytes: &[u8]) -> CliResult<()> {
    if path == "-" {
        let mut out = io::stdout().lock();
        out.write_all(bytes).and_then(|_| out.flush()).map_err(|e| CliError::Io(e.to_string()))
    } else {
        fs::write(path, bytes).map_err(|e| CliError::Io(format!("{path}: {e}")))
    }
}

fn infer_format(out: &OutputArgs) -> Option<FormatArg> {
    out.format.or_else(|| match Path::new(&out.output).extension()?.to_str()? {
        "pc" => Some(FormatArg::Pc),
        "json" | "jsonl" => Some(FormatArg::Json),
        "dot" | "gv" => Some(FormatArg::Dot),
        _ => None,
    })
}

fn emit_maps(out: &OutputArgs, maps: &[PlaneMap]) -> CliResult<()> {
    let bytes = match infer_format(out).unwrap_or(FormatArg::Pc) {
        FormatArg::Pc => planar_code::write(maps)?,
        FormatArg::Json => jsonl::write_rotations(maps).into_bytes(),
        FormatArg::Edges => jsonl::write_edges(&maps.iter().map(underlying_graph).collect::<Vec<_>>()).into_bytes(),
        FormatArg::Dot => dot::write(&maps.iter().map(underlying_graph).collect::<Vec<_>>()).into_bytes(),
    };
    write_output(&out.output, &bytes)
}

fn emit_graphs(out: &OutputArgs, graphs: &[Graph]) -> CliResult<()> {
    let bytes = match infer_format(out).unwrap_or(FormatArg::Edges) {
        FormatArg::Pc => return Err(CliError::Usage("graphs without an embedding cannot be written as planar_code".into())),
        FormatArg::Json | FormatArg::Edges => jsonl::write_edges(graphs).into_bytes(),
        FormatArg::Dot => dot::write(graphs).into_bytes(),
    };
    write_output(&out.output, &bytes)
}

fn json_lines(values: impl IntoIterator<Item = Value>) -> Vec<u8> {
    let mut s = String::new();
    for v in values {
        s.push_str(&v.to_string());
        s.push('\n');
    }
    s.into_bytes()
}

fn require(v: Option<usize>, what: &str) -> CliResult<usize> {
    v.ok_or_else(|| CliError::Usage(format!("{what} requires -n/--vertices")))
}

fn gen(args: GenArgs) -> CliResult<()> {
    let n = args.vertices;
    let maps: Vec<PlaneMap> = match args.kind {
        GenKind::Triangulations => {
            let n = require(n, "gen triangulations")?;
            if n < 4 {
                return Err(CliError::Usage("triangulations need at least 4 vertices".into()));
            }
            enumerate_triangulations(n)
        }
        GenKind::Polyhedra => {
            let n = require(n, "gen polyhedra")?;
            if n < 4 {
                Vec::new()
            } else {
                enumerate_polyhedra(n)
            }
        }
        GenKind::Cubic => {
            let faces: Vec<usize> = match (n, args.max_faces) {
                (Some(p), _) if p % 2 == 0 && p >= 4 => vec![p / 2 + 2],
                (Some(_), _) => Vec::new(),
                (None, Some(f)) => (4..=f).collect(),
                (None, None) => return Err(CliError::Usage("gen cubic requires -n or --max-faces".into())),
            };
            let mut out: Vec<(Vec<u8>, PlaneMap)> = faces
                .into_iter()
                .flat_map(|f| {
                    triangulation_codes(f).into_iter().map(|c| {
                        let d = polycon::canon::decode_code(&c).expect("stored codes decode").dual();
                        (canonical_code(&d), canonical_map(&d))
                    })
                })
                .collect();
            out.sort_by(|a, b| a.0.cmp(&b.0));
            out.into_iter().map(|(_, m)| m).collect()
        }
        GenKind::Constructible => {
            let n = require(n, "gen constructible")?;
            let all = enumerate_constructible(n);
            if let Some(path) = &args.certificates {
                write_output(path, &json_lines(all.iter().map(|c| c.state.certificate())))?;
            }
            all.into_iter()
                .map(|c| polycon::canon::decode_code(&c.code).expect("stored codes decode"))
                .collect()
        }
        kind => {
            let name = match kind {
                GenKind::Pyramid => "pyramid",
                GenKind::Prism => "prism",
                GenKind::Antiprism => "antiprism",
                _ => "platonic",
            };
            let n = require(n, "gen of a family")?;
            vec![family(name, n).map_err(|e| CliError::Usage(e.to_string()))?]
        }
    };
    emit_maps(&args.out, &maps)
}

fn op(args: OpArgs) -> CliResult<()> {
    let records = load(&args.input)?;
    let err = |e: polycon::operators::OperatorError| CliError::Operator(e.to_string());
    match args.op {
        OpKind::Con => emit_graphs(&args.out, &records.graphs().iter().map(con).collect::<Vec<_>>()),
        OpKind::Facecon => {
            let out = records.maps()?.iter().map(facecon).collect::<Result<Vec<_>, _>>().map_err(err)?;
            emit_graphs(&args.out, &out)
        }
        OpKind::OddDual => {
            let maps = records.maps()?;
            let lines = maps.iter().map(|m| {
                let (g, class) = odd_dual(m);
                json!({
                    "tag": class.tag,
                    "odd_faces": class.odd_face_ids,
                    "edges": g.edges(),
                })
            });
            write_output(&args.out.output, &json_lines(lines.collect::<Vec<_>>()))
        }
        kind => {
            let maps = records.maps()?;
            let out: Vec<PlaneMap> = match kind {
                OpKind::Dual => maps.iter().map(PlaneMap::dual).collect(),
                OpKind::Mirror => maps.iter().map(PlaneMap::mirror).collect(),
                OpKind::Canonical => maps.iter().map(canonical_map).collect(),
                OpKind::Radial => maps.iter().map(radial).collect::<Result<_, _>>().map_err(err)?,
                OpKind::Medial => maps.iter().map(medial).collect::<Result<_, _>>().map_err(err)?,
                _ => maps.iter().map(evenise).collect::<Result<_, _>>().map_err(err)?,
            };
            emit_maps(&args.out, &out)
        }
    }
}

fn check(args: CheckArgs) -> CliResult<()> {
    let records = load(&args.input)?;
    let graphs = records.graphs();
    let values: Vec<Value> = match args.predicate {
        Predicate::Classify => graphs.iter().map(|g| json!(classify(g))).collect(),
        Predicate::Planar => graphs.iter().map(|g| json!(is_planar(g))).collect(),
        Predicate::Polyhedral => graphs.iter().map(|g| json!(g.is_polyhedral())).collect(),
        Predicate::MaximalPlanar => graphs.iter().map(|g| json!(g.is_maximal_planar())).collect(),
        Predicate::Bipartite => graphs.iter().map(|g| json!(g.is_bipartite())).collect(),
        Predicate::Cubic => graphs.iter().map(|g| json!(g.is_regular(3))).collect(),
        Predicate::ConPlanar => graphs.iter().map(|g| json!(is_planar(&con(g)))).collect(),
        Predicate::PredictConPlanar => records
            .maps()?
            .iter()
            .map(|m| predict_con_planar(m).map(|b| json!(b)).map_err(|e| CliError::Operator(e.to_string())))
            .collect::<CliResult<_>>()?,
        Predicate::FaceconMaximalPlanar => records
            .maps()?
            .iter()
            .map(|m| facecon(m).map(|g| json!(g.is_maximal_planar())).map_err(|e| CliError::Operator(e.to_string())))
            .collect::<CliResult<_>>()?,
    };
    let lines = values.into_iter().enumerate().map(|(i, v)| json!({"index": i, "value": v}));
    write_output(&args.output, &json_lines(lines.collect::<Vec<_>>()))
}

fn stats(args: InputArgs) -> CliResult<()> {
    let lines: Vec<Value> = match load(&args.input)? {
        Records::Maps(maps) => maps
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let prof = m.face_profile();
                let f: serde_json::Map<String, Value> =
                    prof.f_by_length.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
                json!({
                    "index": i,
                    "vertices": m.vertex_count(),
                    "edges": m.edge_count(),
                    "faces": m.face_count(),
                    "face_lengths": f,
                    "max_degree": m.max_degree(),
                    "odd_dual": odd_dual(m).1.tag,
                    "class": classify(&underlying_graph(m)),
                })
            })
            .collect(),
        Records::Graphs(graphs) => graphs
            .iter()
            .enumerate()
            .map(|(i, g)| {
                json!({
                    "index": i,
                    "vertices": g.vertex_count(),
                    "edges": g.edge_count(),
                    "max_degree": g.max_degree(),
                    "class": classify(g),
                })
            })
            .collect(),
    };
    write_output(&args.output, &json_lines(lines))
}

fn convert(args: ConvertArgs) -> CliResult<()> {
    match load(&args.input)? {
        Records::Maps(maps) => emit_maps(&args.out, &maps),
        Records::Graphs(graphs) => emit_graphs(&args.out, &graphs),
    }
}

fn budget() -> CliResult<u64> {
    match std::env::var("POLYCON_BUDGET") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("POLYCON_BUDGET must be a non-negative integer, got {s:?}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn verify(args: VerifyArgs) -> CliResult<bool> {
    let claims: Vec<Claim> = if args.claim.eq_ignore_ascii_case("all") {
        default_suite()
    } else {
        let id: ClaimId = args.claim.parse().map_err(|e: VerifyError| CliError::Usage(e.to_string()))?;
        vec![Claim::new(id)]
    };
    let claims: Vec<Claim> = claims
        .into_iter()
        .map(|c| c.with_overrides(args.vertices, args.max_faces))
        .collect();
    let verifier = Verifier::with_budget(budget()?);
    let mut reports: Vec<VerificationReport> = Vec::new();
    for c in &claims {
        let r = verifier.run(c).map_err(CliError::Budget)?;
        eprintln!(
            "{} {} checked={} hypothesis={} counterexamples={} elapsed={:.2}s",
            r.claim,
            if r.pass { "PASS" } else { "FAIL" },
            r.checked,
            r.hypothesis_held,
            r.counterexamples.len(),
            r.elapsed_s
        );
        reports.push(r);
    }
    if let Some(path) = &args.report {
        let value = if reports.len() == 1 && !args.claim.eq_ignore_ascii_case("all") {
            serde_json::to_value(&reports[0])
        } else {
            serde_json::to_value(&reports)
        }
        .expect("reports serialize");
        let mut text = serde_json::to_string_pretty(&value).expect("reports serialize");
        text.push('\n');
        write_output(path, text.as_bytes())?;
    }
    Ok(reports.iter().all(|r| r.pass))
}

fn run(cli: Cli) -> CliResult<bool> {
    let workers = match &cli.command {
        Command::Verify(v) => v.workers,
        _ => 1,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    match cli.command {
        Command::Gen(a) => gen(a).map(|_| true),
        Command::Op(a) => op(a).map(|_| true),
        Command::Check(a) => check(a).map(|_| true),
        Command::Verify(a) => verify(a),
        Command::Stats(a) => stats(a).map(|_| true),
        Command::Convert(a) => convert(a).map(|_| true),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("polycon: error[{}]: {}", e.code(), e.message());
            ExitCode::from(2)
        }
    }
}

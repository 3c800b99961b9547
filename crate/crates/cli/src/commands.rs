//! One function per subcommand, each producing rendered output and an exit code.

use std::path::PathBuf;
use std::time::Instant;

use cluster_index::{
    compatibility_graph, enumerate_indecomposables, enumerate_tilting, shift, validate_tilting, HomQuery, HomTable,
    IndObj, IndexEngine, IndexVector, ModelParams, Rational, Route, TiltingObject,
};
use serde::{Deserialize, Serialize};

use crate::args::{Cli, Command, ModelArgs, VerifyArgs};
use crate::checks::{self, Replay, Status, Witness};
use crate::config::{enforce_cap, parse_object, parse_objects, Case, Format, SweepConfig, TiltingScope};
use crate::error::{CliError, EXIT_ANOMALY, EXIT_OK};
use crate::render::{self, headers, vertices};
use crate::report::{exit_code_for, run_sweep, VerificationReport, SCHEMA_VERSION};

pub struct Output {
    pub body: String,
    pub exit_code: i32,
    pub format: Format,
    pub elapsed_ms: f64,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Enumerate(_) => "enumerate",
            Command::Hom { .. } => "hom",
            Command::Tilting { .. } => "tilting",
            Command::Index { .. } => "index",
            Command::Verify(_) => "verify",
            Command::Collisions { .. } => "collisions",
            Command::Replay { .. } => "replay",
            Command::ExportGraph(_) => "export-graph",
        }
    }
}

/// Where output goes: `--out`, else the default directory, else stdout (`None`).
pub fn destination(cli: &Cli, format: Format) -> Option<PathBuf> {
    cli.out
        .clone()
        .or_else(|| cli.out_dir.as_ref().map(|dir| dir.join(format!("{}.{}", cli.command.name(), format.extension()))))
}

pub fn resolved_format(cli: &Cli) -> Format {
    cli.format.unwrap_or(match cli.command {
        Command::ExportGraph(_) => Format::Dot,
        _ => Format::Json,
    })
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    let start = Instant::now();
    let format = resolved_format(cli);
    let (body, exit_code) = match &cli.command {
        Command::Enumerate(m) => (enumerate(m, format)?, EXIT_OK),
        Command::Hom { model, source, target, modulo, through } => {
            (hom(model, source.as_deref(), target.as_deref(), modulo.as_deref(), through.as_deref(), format)?, EXIT_OK)
        }
        Command::Tilting { model, tilting } => tilting_cmd(model, tilting.as_deref(), format)?,
        Command::Index { model, tilting, route } => (index(model, tilting.as_deref(), (*route).into(), format)?, EXIT_OK),
        Command::Verify(args) => verify(cli, args, format)?,
        Command::Collisions { model, tilting } => (collisions(model, tilting.as_deref(), format)?, EXIT_OK),
        Command::Replay { witness } => replay_cmd(witness, format)?,
        Command::ExportGraph(m) => (export_graph(m, format)?, EXIT_OK),
    };
    Ok(Output { body, exit_code, format, elapsed_ms: start.elapsed().as_secs_f64() * 1e3 })
}

fn model(m: &ModelArgs) -> Result<ModelParams, CliError> {
    let params = ModelParams::new(m.n, m.d).map_err(|e| CliError::Usage(e.to_string()))?;
    enforce_cap(&params, m.cap)?;
    Ok(params)
}

fn unsupported(command: &str, format: Format) -> CliError {
    CliError::Usage(format!("{command} does not support --format {}", format.extension()))
}

fn tilting_or_fan(text: Option<&str>, params: &ModelParams) -> Result<TiltingObject, CliError> {
    let objs = match text {
        Some(t) => parse_objects(t, params)?,
        None => enumerate_indecomposables(params).into_iter().filter(|o| o.contains(1)).collect(),
    };
    validate_tilting(&objs, params).map_err(|e| CliError::Usage(format!("not a cluster tilting object: {e}")))
}

#[derive(Serialize)]
struct ObjectRow {
    id: usize,
    object: IndObj,
    shift: IndObj,
}

#[derive(Serialize)]
struct EnumeratePayload {
    schema_version: u32,
    n: usize,
    d: usize,
    cycle_len: usize,
    count: usize,
    objects: Vec<ObjectRow>,
}

fn enumerate(m: &ModelArgs, format: Format) -> Result<String, CliError> {
    let params = model(m)?;
    let objects: Vec<ObjectRow> = enumerate_indecomposables(&params)
        .into_iter()
        .enumerate()
        .map(|(id, o)| ObjectRow { id, shift: shift(&o, 1, &params), object: o })
        .collect();
    let rows: Vec<Vec<String>> =
        objects.iter().map(|r| vec![r.id.to_string(), vertices(&r.object), vertices(&r.shift)]).collect();
    let cols = headers(&["id", "object", "shift"]);
    match format {
        Format::Json => render::json(&EnumeratePayload {
            schema_version: SCHEMA_VERSION,
            n: params.n(),
            d: params.d(),
            cycle_len: params.cycle_len(),
            count: objects.len(),
            objects,
        }),
        Format::Csv => render::csv(&cols, &rows),
        Format::Table => Ok(render::table(&cols, &rows)),
        Format::Dot => Err(unsupported("enumerate", format)),
    }
}

#[derive(Serialize)]
struct HomPayload {
    schema_version: u32,
    n: usize,
    d: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    modulo: Option<Vec<IndObj>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    through: Option<Vec<IndObj>>,
    entries: Vec<HomEntry>,
}

#[derive(Serialize)]
struct HomEntry {
    source: IndObj,
    target: IndObj,
    dim: i64,
}

fn hom(
    m: &ModelArgs,
    source: Option<&str>,
    target: Option<&str>,
    modulo: Option<&str>,
    through: Option<&str>,
    format: Format,
) -> Result<String, CliError> {
    let params = model(m)?;
    let modulo = modulo.map(|t| parse_objects(t, &params)).transpose()?;
    let through = through.map(|t| parse_objects(t, &params)).transpose()?;
    let all = enumerate_indecomposables(&params);
    let pick = |text: Option<&str>| -> Result<Vec<IndObj>, CliError> {
        match text {
            Some(t) => Ok(vec![parse_object(t, &params)?]),
            None => Ok(all.clone()),
        }
    };
    let (sources, targets) = (pick(source)?, pick(target)?);
    let mut entries = Vec::new();
    for s in &sources {
        for t in &targets {
            let mut q = HomQuery::new(s.clone(), t.clone());
            if let Some(ideal) = &modulo {
                q = q.modulo(ideal.clone());
            }
            if let Some(ideal) = &through {
                q = q.through(ideal.clone());
            }
            entries.push(HomEntry { source: s.clone(), target: t.clone(), dim: q.evaluate(&params)?.value() });
        }
    }
    let rows: Vec<Vec<String>> =
        entries.iter().map(|e| vec![vertices(&e.source), vertices(&e.target), e.dim.to_string()]).collect();
    let cols = headers(&["source", "target", "dim"]);
    match format {
        Format::Json => render::json(&HomPayload {
            schema_version: SCHEMA_VERSION,
            n: params.n(),
            d: params.d(),
            modulo,
            through,
            entries,
        }),
        Format::Csv => render::csv(&cols, &rows),
        Format::Table => Ok(render::table(&cols, &rows)),
        Format::Dot => Err(unsupported("hom", format)),
    }
}

#[derive(Serialize)]
struct TiltingPayload {
    schema_version: u32,
    n: usize,
    d: usize,
    size: usize,
    count: usize,
    tilting: Vec<TiltingObject>,
    anomalies: Vec<Vec<IndObj>>,
}

#[derive(Serialize)]
struct ValidationPayload {
    schema_version: u32,
    n: usize,
    d: usize,
    candidate: Vec<IndObj>,
    valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn tilting_cmd(m: &ModelArgs, candidate: Option<&str>, format: Format) -> Result<(String, i32), CliError> {
    let params = model(m)?;
    if let Some(text) = candidate {
        let objs = parse_objects(text, &params)?;
        let result = validate_tilting(&objs, &params);
        let exit = if result.is_ok() { EXIT_OK } else { crate::error::EXIT_FAILED };
        let error = result.err().map(|e| e.to_string());
        let cols = headers(&["candidate", "valid", "error"]);
        let rows = vec![vec![render::family(&objs), error.is_none().to_string(), error.clone().unwrap_or_default()]];
        let body = match format {
            Format::Json => render::json(&ValidationPayload {
                schema_version: SCHEMA_VERSION,
                n: params.n(),
                d: params.d(),
                valid: error.is_none(),
                candidate: objs,
                error,
            })?,
            Format::Csv => render::csv(&cols, &rows)?,
            Format::Table => render::table(&cols, &rows),
            Format::Dot => return Err(unsupported("tilting", format)),
        };
        return Ok((body, exit));
    }
    let e = enumerate_tilting(&params);
    let exit = if e.anomalies.is_empty() { EXIT_OK } else { EXIT_ANOMALY };
    let mut rows: Vec<Vec<String>> = e
        .tilting
        .iter()
        .map(|t| render::family(t.summands()))
        .map(|s| vec![s, "tilting".into()])
        .chain(e.anomalies.iter().map(|a| vec![render::family(a), "anomaly".into()]))
        .collect();
    for (i, row) in rows.iter_mut().enumerate() {
        row.insert(0, i.to_string());
    }
    let cols = headers(&["id", "summands", "kind"]);
    let body = match format {
        Format::Json => render::json(&TiltingPayload {
            schema_version: SCHEMA_VERSION,
            n: params.n(),
            d: params.d(),
            size: params.tilting_size(),
            count: e.tilting.len(),
            tilting: e.tilting,
            anomalies: e.anomalies,
        })?,
        Format::Csv => render::csv(&cols, &rows)?,
        Format::Table => render::table(&cols, &rows),
        Format::Dot => return Err(unsupported("tilting", format)),
    };
    Ok((body, exit))
}

#[derive(Serialize)]
struct IndexPayload {
    schema_version: u32,
    n: usize,
    d: usize,
    tilting: TiltingObject,
    route: Route,
    verified: bool,
    rows: Vec<cluster_index::IndexRow>,
    collisions: Vec<(IndObj, IndObj)>,
}

fn index(m: &ModelArgs, tilting: Option<&str>, route: Route, format: Format) -> Result<String, CliError> {
    let params = model(m)?;
    let table = HomTable::new(params);
    let t = tilting_or_fan(tilting, &params)?;
    let engine = IndexEngine::new(&t, &table)?;
    let it = engine.index_table::<Rational>(route)?;
    let mut cols = headers(&["object"]);
    cols.extend(t.summands().iter().map(vertices));
    let rows: Vec<Vec<String>> = it
        .rows
        .iter()
        .map(|r| std::iter::once(vertices(&r.object)).chain(r.index.coefficients().iter().map(|v| v.to_string())).collect())
        .collect();
    match format {
        Format::Json => render::json(&IndexPayload {
            schema_version: SCHEMA_VERSION,
            n: params.n(),
            d: params.d(),
            route,
            verified: it.verified,
            collisions: it.collisions(),
            rows: it.rows,
            tilting: t,
        }),
        Format::Csv => render::csv(&cols, &rows),
        Format::Table => Ok(render::table(&cols, &rows)),
        Format::Dot => Err(unsupported("index", format)),
    }
}

pub fn sweep_config(cli: &Cli, args: &VerifyArgs, format: Format) -> Result<SweepConfig, CliError> {
    let mut config = match &args.config {
        Some(path) => SweepConfig::load(path)?,
        None => SweepConfig::default(),
    };
    if let (Some(n), Some(d)) = (args.n, args.d) {
        config.cases = vec![Case { n, d }];
    }
    if !args.checks.is_empty() {
        config.checks = args.checks.clone();
    }
    if !args.tilting.is_empty() {
        config.tilting = TiltingScope::Explicit(args.tilting.clone());
    } else if let Some(k) = args.first {
        config.tilting = TiltingScope::First(k);
    }
    if let Some(cap) = args.cap {
        config.cap = cap;
    }
    if let Some(route) = args.route {
        config.route = route.into();
    }
    if cli.format.is_some() || args.config.is_none() {
        config.format = format;
    }
    if cli.out.is_some() {
        config.out = cli.out.clone();
    }
    if cli.workers.is_some() {
        config.workers = cli.workers;
    }
    config.timing |= cli.timing;
    config.prime_check |= args.prime_check;
    Ok(config)
}

fn verify(cli: &Cli, args: &VerifyArgs, format: Format) -> Result<(String, i32), CliError> {
    let config = sweep_config(cli, args, format)?;
    let report = run_sweep(&config)?;
    Ok((render_report(&report, config.format)?, report.exit_code()))
}

pub fn render_report(report: &VerificationReport, format: Format) -> Result<String, CliError> {
    let cols = headers(&["n", "d", "check", "status", "instances", "violations", "witnesses"]);
    let rows: Vec<Vec<String>> = report
        .cases
        .iter()
        .flat_map(|c| {
            c.checks.iter().map(move |r| {
                vec![
                    c.n.to_string(),
                    c.d.to_string(),
                    r.check.name().to_string(),
                    r.status.name().to_string(),
                    r.instances.to_string(),
                    r.violations.to_string(),
                    r.witnesses.len().to_string(),
                ]
            })
        })
        .collect();
    match format {
        Format::Json => render::json(report),
        Format::Csv => render::csv(&cols, &rows),
        Format::Table => {
            let mut out = render::table(&cols, &rows);
            out.push_str(&format!("overall: {}\n", report.summary.status.name()));
            Ok(out)
        }
        Format::Dot => Err(unsupported("verify", format)),
    }
}

#[derive(Serialize)]
struct CollisionEntry {
    a: IndObj,
    b: IndObj,
    index: IndexVector,
}

#[derive(Serialize)]
struct CollisionGroup {
    tilting: TiltingObject,
    collisions: Vec<CollisionEntry>,
}

#[derive(Serialize)]
struct CollisionsPayload {
    schema_version: u32,
    n: usize,
    d: usize,
    tilting_objects: Vec<CollisionGroup>,
}

fn collisions(m: &ModelArgs, tilting: Option<&str>, format: Format) -> Result<String, CliError> {
    let params = model(m)?;
    let table = HomTable::new(params);
    let tiltings = match tilting {
        Some(_) => vec![tilting_or_fan(tilting, &params)?],
        None => enumerate_tilting(&params).tilting,
    };
    let mut groups = Vec::new();
    for t in tiltings {
        let engine = IndexEngine::new(&t, &table)?;
        let it = engine.index_table::<Rational>(Route::Both)?;
        let collisions = it
            .collisions()
            .into_iter()
            .map(|(a, b)| CollisionEntry { index: it.get(&a).expect("row present").clone(), a, b })
            .collect();
        groups.push(CollisionGroup { tilting: t, collisions });
    }
    let cols = headers(&["tilting", "a", "b", "index"]);
    let rows: Vec<Vec<String>> = groups
        .iter()
        .flat_map(|g| {
            g.collisions.iter().map(move |c| {
                vec![render::family(g.tilting.summands()), vertices(&c.a), vertices(&c.b), c.index.to_string()]
            })
        })
        .collect();
    match format {
        Format::Json => render::json(&CollisionsPayload {
            schema_version: SCHEMA_VERSION,
            n: params.n(),
            d: params.d(),
            tilting_objects: groups,
        }),
        Format::Csv => render::csv(&cols, &rows),
        Format::Table => Ok(render::table(&cols, &rows)),
        Format::Dot => Err(unsupported("collisions", format)),
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum WitnessFile {
    One(Box<Witness>),
    Many(Vec<Witness>),
    Report(Box<VerificationReport>),
}

#[derive(Serialize)]
struct ReplayPayload {
    schema_version: u32,
    status: Status,
    replays: Vec<Replay>,
}

fn replay_cmd(path: &std::path::Path, format: Format) -> Result<(String, i32), CliError> {
    let text = std::fs::read_to_string(path)?;
    let file: WitnessFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("{}: not a witness, witness list or report: {e}", path.display())))?;
    let witnesses: Vec<Witness> = match file {
        WitnessFile::One(w) => vec![*w],
        WitnessFile::Many(ws) => ws,
        WitnessFile::Report(r) => r.witnesses().cloned().collect(),
    };
    let replays = witnesses.iter().map(checks::replay).collect::<Result<Vec<_>, _>>()?;
    let status = replays.iter().map(|r| r.recomputed.status).max().unwrap_or(Status::Pass);
    let cols = headers(&["check", "n", "d", "recorded", "recomputed"]);
    let rows: Vec<Vec<String>> = replays
        .iter()
        .map(|r| {
            vec![
                r.original.check.name().to_string(),
                r.original.n.to_string(),
                r.original.d.to_string(),
                r.original.status.name().to_string(),
                r.recomputed.status.name().to_string(),
            ]
        })
        .collect();
    let body = match format {
        Format::Json => render::json(&ReplayPayload { schema_version: SCHEMA_VERSION, status, replays })?,
        Format::Csv => render::csv(&cols, &rows)?,
        Format::Table => render::table(&cols, &rows),
        Format::Dot => return Err(unsupported("replay", format)),
    };
    Ok((body, exit_code_for(status)))
}

#[derive(Serialize)]
struct GraphPayload {
    schema_version: u32,
    n: usize,
    d: usize,
    vertices: Vec<IndObj>,
    edges: Vec<(IndObj, IndObj)>,
}

fn export_graph(m: &ModelArgs, format: Format) -> Result<String, CliError> {
    let params = model(m)?;
    let g = compatibility_graph(&params);
    let edges: Vec<(IndObj, IndObj)> =
        g.edges().into_iter().map(|(a, b)| (g.objects()[a].clone(), g.objects()[b].clone())).collect();
    let cols = headers(&["source", "target"]);
    let rows: Vec<Vec<String>> = edges.iter().map(|(a, b)| vec![vertices(a), vertices(b)]).collect();
    match format {
        Format::Dot => Ok(g.to_dot()),
        Format::Json => render::json(&GraphPayload {
            schema_version: SCHEMA_VERSION,
            n: params.n(),
            d: params.d(),
            vertices: g.objects().to_vec(),
            edges,
        }),
        Format::Csv => render::csv(&cols, &rows),
        Format::Table => Ok(render::table(&cols, &rows)),
    }
}

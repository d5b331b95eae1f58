//! `shimin`: Shi arrangement computations for the classical root systems.
//!
//! Subcommands:
//! * `min`     — minimal element of a region, from a sign type or a parking
//!   function.
//! * `regions` — the full table (sign type, parking function, minimal
//!   element), one row per region.
//! * `verify`  — enumerate alcoves exactly and check every formula output
//!   against the oracle.
//! * `diagram` — render the arc diagram of a parking function as text or
//!   SVG.
//!
//! Exit codes: 0 ok, 1 parse or usage error, 2 inadmissible sign type,
//! 3 verification failure, 4 resource limit. `SHIMIN_LOG` (any non-empty
//! value except `0`) turns on progress logging to stderr.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use shimin_core::oracle::{region_census_observed, CensusEvent, EnumerationLimits};
use shimin_core::render::{render_svg, render_text};
use shimin_core::shi::{enumerate_parking_functions, minimal_element, minimal_from_sign};
use shimin_core::{
    Error, Family, NonNestingPartition, ParkingFunction, Root, RootSystem, RootSystemKind,
    ShiVector, Sign, SignType, SignedPermutation,
};

const MAX_FORMULA_RANK: usize = 8;
const MAX_ORACLE_RANK: usize = 5;

#[derive(Parser)]
#[command(
    name = "shimin",
    version,
    about = "Shi arrangement computations for the classical root systems",
    after_help = "Exit codes: 0 ok, 1 parse error, 2 inadmissible sign type, \
                  3 verification failure, 4 resource limit."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextOrSvg {
    Text,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal element of the Shi region given by a sign type or a parking
    /// function.
    Min {
        /// Root system family: A, B, C or D.
        family: String,
        /// Rank of the root system.
        rank: usize,
        /// Sign type as comma-separated `+`, `0`, `-` in canonical root
        /// order (or pyramid rows with `--pyramid`).
        #[arg(long)]
        sign: Option<String>,
        /// Parking function as JSON: {"w":[...],"P":[[coords],...]}.
        #[arg(long)]
        pf: Option<String>,
        /// Family A only: read and print sign types in the pyramid layout,
        /// rows bottom to top separated by `/`.
        #[arg(long)]
        pyramid: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
    },
    /// One row per Shi region: sign type, parking function, minimal element.
    Regions {
        family: String,
        rank: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
    },
    /// Enumerate alcoves exactly and check the minimal-element formulas
    /// against the oracle.
    Verify {
        family: String,
        rank: usize,
        /// Cap on the breadth-first depth.
        #[arg(long, default_value_t = 96)]
        max_depth: u32,
        /// Cap on the number of alcoves visited.
        #[arg(long, default_value_t = 8_000_000)]
        max_alcoves: usize,
        /// Stream one JSON record per alcove ({"kvec":[...],"depth":n}) to a
        /// file, `-` for stdout.
        #[arg(long)]
        emit_alcoves: Option<PathBuf>,
        /// Write one JSON record per region ({"sign":[...],"size":n,"min":[...]})
        /// to a file, `-` for stdout.
        #[arg(long)]
        emit_regions: Option<PathBuf>,
    },
    /// Render the arc diagram of a parking function.
    Diagram {
        family: String,
        rank: usize,
        /// Parking function as JSON: {"w":[...],"P":[[coords],...]}.
        #[arg(long)]
        pf: String,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrSvg,
        /// Output path; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

/// A closed stdout (e.g. piping into `head`) ends the program quietly.
fn pipe_failure(e: io::Error) -> Failure {
    if e.kind() == io::ErrorKind::BrokenPipe {
        Failure {
            code: 0,
            message: String::new(),
        }
    } else {
        Failure::parse(format!("write failed: {e}"))
    }
}

macro_rules! outln {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).map_err(pipe_failure)?
    };
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Inadmissible(_) | Error::NotAnInversionSet | Error::MultipleParkingFunctions => {
                2
            }
            Error::Unsaturated => 4,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn verbose() -> bool {
    match std::env::var("SHIMIN_LOG") {
        Ok(v) => !v.is_empty() && v != "0" && v.to_lowercase() != "off",
        Err(_) => false,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Min {
            family,
            rank,
            sign,
            pf,
            pyramid,
            format,
        } => cmd_min(&family, rank, sign, pf, pyramid, format),
        Command::Regions {
            family,
            rank,
            format,
        } => cmd_regions(&family, rank, format),
        Command::Verify {
            family,
            rank,
            max_depth,
            max_alcoves,
            emit_alcoves,
            emit_regions,
        } => cmd_verify(&family, rank, max_depth, max_alcoves, emit_alcoves, emit_regions),
        Command::Diagram {
            family,
            rank,
            pf,
            format,
            output,
        } => cmd_diagram(&family, rank, &pf, format, output),
    }
}

fn parse_family(text: &str) -> Result<Family, Failure> {
    match text.to_uppercase().as_str() {
        "A" => Ok(Family::A),
        "B" => Ok(Family::B),
        "C" => Ok(Family::C),
        "D" => Ok(Family::D),
        _ => Err(Failure::parse(format!(
            "unknown family {text:?}; expected A, B, C or D"
        ))),
    }
}

fn build_system(family: &str, rank: usize, max_rank: usize) -> Result<RootSystem, Failure> {
    let family = parse_family(family)?;
    if rank > max_rank {
        return Err(Failure::parse(format!(
            "rank {rank} exceeds the limit of {max_rank} for this command"
        )));
    }
    Ok(RootSystem::new(RootSystemKind { family, rank })?)
}

fn parse_sign_char(token: &str) -> Result<Sign, Failure> {
    match token.trim() {
        "+" => Ok(Sign::Plus),
        "0" => Ok(Sign::Zero),
        "-" | "\u{2212}" => Ok(Sign::Minus),
        other => Err(Failure::parse(format!(
            "bad sign token {other:?}; expected one of + 0 -"
        ))),
    }
}

/// Canonical index of the family A root `e_i - e_j`.
fn a_root_index(rs: &RootSystem, i: usize, j: usize) -> usize {
    let mut coords = vec![0i64; rs.ambient_dim()];
    coords[i - 1] = 1;
    coords[j - 1] = -1;
    rs.root_index(&Root::new(coords)).expect("e_i - e_j is positive")
}

/// Parses `--sign` text: canonical CSV, or for `--pyramid` the rows of the
/// family A pyramid from bottom to top, separated by `/`.
fn parse_sign(rs: &RootSystem, text: &str, pyramid: bool) -> Result<SignType, Failure> {
    if !pyramid {
        let signs = text
            .split(',')
            .map(parse_sign_char)
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(SignType::new(rs.kind(), signs)?);
    }
    if rs.family() != Family::A {
        return Err(Failure::parse("--pyramid is a family A layout"));
    }
    let n1 = rs.rank() + 1;
    let rows: Vec<&str> = text.split('/').collect();
    if rows.len() != rs.rank() {
        return Err(Failure::parse(format!(
            "pyramid needs {} rows, found {}",
            rs.rank(),
            rows.len()
        )));
    }
    let mut signs = vec![Sign::Zero; rs.num_positive()];
    for (row_idx, row) in rows.iter().enumerate() {
        let r = row_idx + 1; // j - i on this row
        let entries = row
            .split(',')
            .map(parse_sign_char)
            .collect::<Result<Vec<_>, _>>()?;
        if entries.len() != n1 - r {
            return Err(Failure::parse(format!(
                "pyramid row {r} needs {} entries, found {}",
                n1 - r,
                entries.len()
            )));
        }
        for (i0, &s) in entries.iter().enumerate() {
            let i = i0 + 1;
            signs[a_root_index(rs, i, i + r)] = s;
        }
    }
    Ok(SignType::new(rs.kind(), signs)?)
}

/// The sign type as pyramid rows, top row (longest span) first.
fn pyramid_lines(rs: &RootSystem, v: &SignType) -> Vec<String> {
    let n1 = rs.rank() + 1;
    let mut lines = Vec::new();
    for r in (1..n1).rev() {
        let row: Vec<String> = (1..=n1 - r)
            .map(|i| v.get(a_root_index(rs, i, i + r)).to_string())
            .collect();
        let mut line = " ".repeat(r - 1);
        line.push_str(&row.join(" "));
        lines.push(line);
    }
    lines
}

fn parse_pf(rs: &RootSystem, text: &str) -> Result<ParkingFunction, Failure> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Failure::parse(format!("bad parking function JSON: {e}")))?;
    let images = value
        .get("w")
        .and_then(Value::as_array)
        .ok_or_else(|| Failure::parse("parking function JSON needs a \"w\" array"))?
        .iter()
        .map(|x| x.as_i64())
        .collect::<Option<Vec<i64>>>()
        .ok_or_else(|| Failure::parse("\"w\" must be an array of integers"))?;
    let w = SignedPermutation::new(rs.kind(), images)?;
    let roots = value
        .get("P")
        .and_then(Value::as_array)
        .ok_or_else(|| Failure::parse("parking function JSON needs a \"P\" array"))?
        .iter()
        .map(|row| {
            row.as_array()
                .and_then(|xs| xs.iter().map(|x| x.as_i64()).collect::<Option<Vec<i64>>>())
                .map(Root::new)
        })
        .collect::<Option<Vec<Root>>>()
        .ok_or_else(|| Failure::parse("\"P\" must be an array of coordinate arrays"))?;
    let partition = NonNestingPartition::new(rs, roots)?;
    Ok(ParkingFunction::new(rs, w, partition)?)
}

fn sign_json(rs: &RootSystem, v: &SignType) -> Value {
    json!({
        "family": rs.family().to_string(),
        "rank": rs.rank(),
        "signs": v.signs().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
    })
}

fn root_system_json(rs: &RootSystem) -> Value {
    json!({
        "family": rs.family().to_string(),
        "rank": rs.rank(),
        "positive_roots": rs.positive_roots().iter().map(|r| r.coords()).collect::<Vec<_>>(),
        "simple_roots": rs.simple_roots().iter().map(|r| r.coords()).collect::<Vec<_>>(),
    })
}

fn pf_json(pf: &ParkingFunction) -> Value {
    json!({
        "w": pf.w().images(),
        "P": pf.partition().roots().iter().map(|r| r.coords()).collect::<Vec<_>>(),
    })
}

fn entries_csv(m: &ShiVector) -> String {
    m.entries()
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_min(
    family: &str,
    rank: usize,
    sign: Option<String>,
    pf: Option<String>,
    pyramid: bool,
    format: TextOrJson,
) -> Result<(), Failure> {
    let rs = build_system(family, rank, MAX_FORMULA_RANK)?;
    let (m, v, pf_used) = match (sign, pf) {
        (Some(sign_text), None) => {
            let v = parse_sign(&rs, &sign_text, pyramid)?;
            let pf = shimin_core::shi::arr_forward(&rs, &v)?;
            let m = minimal_element(&rs, &pf)?;
            (m, v, pf)
        }
        (None, Some(pf_text)) => {
            let pf = parse_pf(&rs, &pf_text)?;
            let m = minimal_element(&rs, &pf)?;
            let v = m.sign_type();
            (m, v, pf)
        }
        _ => return Err(Failure::parse("provide exactly one of --sign or --pf")),
    };

    let payload = json!({
        "sign": sign_json(&rs, &v),
        "pf": pf_json(&pf_used),
        "min": { "entries": m.entries() },
    });
    let mut out = io::stdout().lock();
    match format {
        TextOrJson::Json => outln!(out, "{payload}"),
        TextOrJson::Text => {
            for (root, entry) in rs.positive_roots().iter().zip(m.entries()) {
                outln!(out, "m[{root}] = {entry}");
            }
            outln!(out, "min: {}", entries_csv(&m));
            if pyramid && rs.family() == Family::A {
                outln!(out, "sign pyramid:");
                for line in pyramid_lines(&rs, &v) {
                    outln!(out, "  {line}");
                }
            }
            outln!(out, "{payload}");
        }
    }
    Ok(())
}

fn cmd_regions(family: &str, rank: usize, format: TextOrJson) -> Result<(), Failure> {
    let rs = build_system(family, rank, MAX_FORMULA_RANK)?;
    let pfs = enumerate_parking_functions(&rs);
    let mut rows = Vec::with_capacity(pfs.len());
    for pf in &pfs {
        let m = minimal_element(&rs, pf)?;
        rows.push((m.sign_type(), pf, m));
    }
    let mut out = io::stdout().lock();
    match format {
        TextOrJson::Json => {
            let payload = json!({
                "root_system": root_system_json(&rs),
                "count": rows.len(),
                "rows": rows.iter().map(|(v, pf, m)| json!({
                    "sign": v.signs().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                    "pf": pf_json(pf),
                    "min": { "entries": m.entries() },
                })).collect::<Vec<_>>(),
            });
            outln!(out, "{payload}");
        }
        TextOrJson::Text => {
            outln!(out, "sign\tw\tpartition\tmin");
            for (v, pf, m) in &rows {
                outln!(
                    out,
                    "{v}\t{}\t{}\t{}",
                    pf.w().window(),
                    pf.partition(),
                    entries_csv(m)
                );
            }
            outln!(out, "{} regions", rows.len());
        }
    }
    Ok(())
}

enum Sink {
    Stdout,
    File(BufWriter<File>),
}

impl Sink {
    fn open(path: &PathBuf) -> Result<Sink, Failure> {
        if path.as_os_str() == "-" {
            Ok(Sink::Stdout)
        } else {
            let file = File::create(path)
                .map_err(|e| Failure::parse(format!("cannot create {}: {e}", path.display())))?;
            Ok(Sink::File(BufWriter::new(file)))
        }
    }

    fn line(&mut self, text: &str) -> Result<(), Failure> {
        match self {
            Sink::Stdout => writeln!(io::stdout(), "{text}").map_err(pipe_failure),
            Sink::File(f) => writeln!(f, "{text}")
                .map_err(|e| Failure::parse(format!("write failed: {e}"))),
        }
    }
}

fn cmd_verify(
    family: &str,
    rank: usize,
    max_depth: u32,
    max_alcoves: usize,
    emit_alcoves: Option<PathBuf>,
    emit_regions: Option<PathBuf>,
) -> Result<(), Failure> {
    let rs = build_system(family, rank, MAX_ORACLE_RANK)?;
    let limits = EnumerationLimits {
        max_depth,
        max_alcoves,
    };
    let chatty = verbose();
    let mut alcove_sink = emit_alcoves.as_ref().map(Sink::open).transpose()?;
    let mut sink_error: Option<Failure> = None;

    let census = region_census_observed(&rs, None, &limits, |event| match event {
        CensusEvent::Alcove { kvec, depth } => {
            if let Some(sink) = alcove_sink.as_mut() {
                if sink_error.is_none() {
                    let record = json!({ "kvec": kvec, "depth": depth });
                    if let Err(e) = sink.line(&record.to_string()) {
                        sink_error = Some(e);
                    }
                }
            }
        }
        CensusEvent::Layer {
            depth,
            visited,
            regions,
            new_signs,
        } => {
            if chatty {
                eprintln!(
                    "shimin: layer {depth}: {visited} alcoves, {regions} regions (+{new_signs})"
                );
            }
        }
    });
    if let Some(e) = sink_error {
        return Err(e);
    }

    if !census.complete() {
        eprintln!(
            "FAIL {} {}: enumeration hit its limits at depth {} after {} alcoves without stabilizing",
            rs.family(),
            rs.rank(),
            census.depth(),
            census.alcove_count()
        );
        return Err(Failure {
            code: 4,
            message: "resource limit exceeded; raise --max-depth/--max-alcoves".into(),
        });
    }

    if let Some(path) = emit_regions.as_ref() {
        let mut sink = Sink::open(path)?;
        for (sign, summary) in census.regions() {
            let min = census.minimal(sign).expect("complete census is saturated");
            let record = json!({
                "sign": sign.signs().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                "size": summary.size(),
                "min": min.entries(),
            });
            sink.line(&record.to_string())?;
        }
    }

    let mut out = io::stdout().lock();
    outln!(
        out,
        "verify {} {}: {} alcoves to depth {}",
        rs.family(),
        rs.rank(),
        census.alcove_count(),
        census.depth()
    );
    let pf_count = enumerate_parking_functions(&rs).len();
    outln!(
        out,
        "  regions: {} (parking functions: {pf_count})",
        census.region_count()
    );
    outln!(out, "  shi relations: {} violations", census.shi_violations());

    let mut matched = 0usize;
    let mut mismatches: Vec<String> = Vec::new();
    for sign in census.regions().keys() {
        let oracle_min = census.minimal(sign).expect("complete census is saturated");
        match minimal_from_sign(&rs, sign) {
            Ok(formula_min) if formula_min == oracle_min => matched += 1,
            Ok(formula_min) => mismatches.push(format!(
                "{sign}: formula {formula_min} != oracle {oracle_min}"
            )),
            Err(e) => mismatches.push(format!("{sign}: formula failed ({e})")),
        }
    }
    outln!(
        out,
        "  minimal elements: {matched}/{} match the oracle",
        census.region_count()
    );

    let counts_ok = census.region_count() == pf_count;
    let ok = counts_ok && census.shi_violations() == 0 && mismatches.is_empty();
    if ok {
        outln!(
            out,
            "PASS {} {}: {matched}/{} regions",
            rs.family(),
            rs.rank(),
            census.region_count()
        );
        Ok(())
    } else {
        if !counts_ok {
            outln!(
                out,
                "  count mismatch: {} regions vs {pf_count} parking functions",
                census.region_count()
            );
        }
        for m in mismatches.iter().take(5) {
            outln!(out, "  counterexample {m}");
        }
        outln!(
            out,
            "FAIL {} {}: {matched}/{} regions",
            rs.family(),
            rs.rank(),
            census.region_count()
        );
        Err(Failure {
            code: 3,
            message: "verification failed".into(),
        })
    }
}

fn cmd_diagram(
    family: &str,
    rank: usize,
    pf_text: &str,
    format: TextOrSvg,
    output: Option<PathBuf>,
) -> Result<(), Failure> {
    let rs = build_system(family, rank, MAX_FORMULA_RANK)?;
    let pf = parse_pf(&rs, pf_text)?;
    let diagram = pf.diagram(&rs)?;
    let rendered = match format {
        TextOrSvg::Text => render_text(&diagram),
        TextOrSvg::Svg => render_svg(&diagram),
    };
    match output {
        Some(path) => std::fs::write(&path, rendered)
            .map_err(|e| Failure::parse(format!("cannot write {}: {e}", path.display())))?,
        None => io::stdout()
            .write_all(rendered.as_bytes())
            .map_err(pipe_failure)?,
    }
    Ok(())
}

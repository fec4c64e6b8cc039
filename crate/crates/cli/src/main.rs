//! `rp2conf`: classify, census and wall-crossing front end.
//!
//! Exit codes: 0 success, 2 a result disagrees with the reference tables or
//! the classification, 3 parse error, 4 degenerate input where generic
//! points were expected.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rp2conf::adjacency::{adjacency_graph, cross_wall, AdjacencyGraph, Stratification, WallSpec};
use rp2conf::catalog::{Catalog, CATALOG_TEXT};
use rp2conf::census::{census, CensusKind, RunConfig};
use rp2conf::classify::{seven_class, seven_data, seven_fingerprint, six_class, six_data, six_fingerprint};
use rp2conf::pointfile::{format_point_file, parse_point_file};
use rp2conf::projective::{Label, ProjectivePoint};
use rp2conf::tables::all_tables;
use rp2conf::walls::{conic_wall_class, degeneracy_detect, format_sequence_braced, line_wall_class, Degeneracy};
use rp2conf::Error;

const EXIT_MISMATCH: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_DEGENERATE: u8 = 4;

#[derive(Parser)]
#[command(
    name = "rp2conf",
    version,
    about = "Exact classification of six and seven points in the real projective plane"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Seed of every random search.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Points {
    Six,
    Seven,
    Coconic,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the points of a point file.
    Classify { file: PathBuf },
    /// Regenerate the reference tables and compare them with the shipped copies.
    Tables,
    /// Classify random configurations.
    Census {
        #[arg(long, value_enum, default_value = "seven")]
        points: Points,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Coordinates are drawn from [-bound, bound].
        #[arg(long, default_value_t = 50)]
        bound: i64,
    },
    /// Adjacency graph of chambers and walls.
    Graph {
        #[arg(long, default_value_t = 7)]
        level: usize,
        /// Include conic-walls.
        #[arg(long)]
        conics: bool,
    },
    /// Dump the catalog of representatives.
    Representatives,
    /// Cross one wall from the points of a point file.
    Cross {
        file: PathBuf,
        /// Three labels to align, such as 456.
        #[arg(long, conflicts_with = "conic")]
        triple: Option<String>,
        /// Six labels to put on a conic, such as 123456.
        #[arg(long)]
        conic: Option<String>,
    },
}

/// A failed command: message and exit code.
struct Failure(String, u8);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => EXIT_PARSE,
            Error::GoldenMismatch(_) | Error::UnknownClass | Error::UnknownZone => EXIT_MISMATCH,
            Error::NonGeneric | Error::MultipleDegeneracies | Error::NotOnWall => EXIT_DEGENERATE,
            _ => 1,
        };
        Failure(e.to_string(), code)
    }
}

type Outcome = Result<(String, u8), Failure>;

fn read_points(file: &PathBuf) -> Result<Vec<ProjectivePoint>, Failure> {
    let text = fs::read_to_string(file).map_err(|e| Failure(format!("{}: {e}", file.display()), EXIT_PARSE))?;
    parse_point_file(&text).map_err(|e| Failure(format!("{}: {e}", file.display()), EXIT_PARSE))
}

fn labels(s: &str, n: usize) -> Result<Vec<Label>, Failure> {
    let v: Option<Vec<Label>> = s.chars().map(|c| c.to_digit(10).map(|d| d as Label)).collect();
    match v {
        Some(v) if v.len() == n => Ok(v),
        _ => Err(Failure(format!("expected {n} digit labels, got {s:?}"), EXIT_PARSE)),
    }
}

fn render(format: Format, text: String, value: Value) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&value).expect("json") + "\n",
        _ => text,
    }
}

fn degeneracy_report(points: &[ProjectivePoint], format: Format) -> Outcome {
    let (text, value) = match degeneracy_detect(points) {
        Degeneracy::CollinearTriple(t) => {
            let w = line_wall_class(points)?;
            (
                format!(
                    "degenerate: line-wall {}\naligned {}{}{}\nsequence {}\n",
                    w.name_string(),
                    t[0],
                    t[1],
                    t[2],
                    format_sequence_braced(&w.sequence)
                ),
                json!({"degenerate": "line", "triple": t, "wall": w.name_string(),
                       "sequence": format_sequence_braced(&w.sequence)}),
            )
        }
        Degeneracy::CoconicSextuple(s) if points.len() == 7 => match conic_wall_class(points) {
            Ok(c) => (
                format!("degenerate: conic-wall {}\ncoconic {:?}\ndiagram {}\n", c.letter, s, c.diagram),
                json!({"degenerate": "conic", "sextuple": s, "wall": c.letter.to_string(),
                       "diagram": c.diagram.to_string()}),
            ),
            Err(e) => {
                (format!("degenerate: conic-wall, {e}\n"), json!({"degenerate": "conic", "error": e.to_string()}))
            }
        },
        Degeneracy::CoconicSextuple(_) => {
            ("degenerate: six points on a conic\n".to_string(), json!({"degenerate": "conic"}))
        }
        Degeneracy::Other => {
            ("degenerate: several simultaneous degeneracies\n".to_string(), json!({"degenerate": "several"}))
        }
        Degeneracy::Generic => unreachable!("called on degenerate input"),
    };
    Ok((render(format, text, value), EXIT_DEGENERATE))
}

fn side_table(inside: impl Fn(usize, usize) -> Option<bool>, n: usize) -> (String, Vec<Vec<String>>) {
    let mut text = String::new();
    let mut rows = Vec::new();
    for p in 0..n {
        let row: Vec<String> = (0..n)
            .map(|q| match inside(p, q) {
                Some(true) => "<".into(),
                Some(false) => ">".into(),
                None => ".".into(),
            })
            .collect();
        text.push_str(&format!("  {} {}\n", p + 1, row.join(" ")));
        rows.push(row);
    }
    (text, rows)
}

fn classify(file: &PathBuf, format: Format) -> Outcome {
    let points = read_points(file)?;
    if degeneracy_detect(&points) != Degeneracy::Generic {
        return degeneracy_report(&points, format);
    }
    if points.len() == 6 {
        let d = six_data(&points)?;
        let class = six_class(&points)?;
        let fp = six_fingerprint(&points)?;
        let marks: Vec<&str> = d.interior.iter().map(|&b| if b { "<" } else { ">" }).collect();
        let mut text = format!(
            "class {}\nfingerprint {}\ninterior (point against the conic through the others)\n  {}\n",
            class.greek(),
            fp.hex(),
            marks.join(" ")
        );
        let mut pencils = Vec::new();
        for n in 0..6 {
            let p = d.pencil(n);
            text.push_str(&format!("pencil {}: {}\n", n + 1, p));
            pencils.push(p.to_string());
        }
        let value = json!({"points": 6, "class": class.greek(), "fingerprint": fp.hex(),
                           "interior": d.interior, "pencils": pencils});
        return Ok((render(format, text, value), 0));
    }
    let d = seven_data(&points)?;
    let fp = seven_fingerprint(&points)?;
    let class = seven_class(&points);
    let (table, rows) = side_table(|p, q| (p != q).then(|| d.inside[p][q]), 7);
    let name = class.as_ref().map(|c| c.compact()).unwrap_or_else(|_| "unknown".into());
    let quad: Vec<u8> = rp2conf::classify::seven_quadruple(&points)?.0.to_vec();
    let mut text = format!(
        "class {name}\nquadruple ({},{},{},{})\nfingerprint {}\ninterior (row p, column q: p against the conic missing p and q)\n{table}",
        quad[0], quad[1], quad[2], quad[3], fp.hex()
    );
    let mut cubics = Vec::new();
    for desc in &d.descriptors {
        text.push_str(&format!("cubic {desc}\n"));
        cubics.push(desc.to_string());
    }
    let value = json!({"points": 7, "class": name, "quadruple": quad, "fingerprint": fp.hex(),
                       "interior": rows, "cubics": cubics});
    Ok((render(format, text, value), if class.is_ok() { 0 } else { EXIT_MISMATCH }))
}

fn tables(seed: u64, format: Format) -> Outcome {
    let reports = all_tables(seed)?;
    let mut text = String::new();
    let mut values = Vec::new();
    let mut ok = true;
    for r in &reports {
        ok &= r.ok();
        text.push_str(&format!("# {} ({} rows, {} differences)\n{}", r.name, r.rows, r.diffs.len(), r.text));
        for d in &r.diffs {
            text.push_str(&format!("! {d}\n"));
        }
        text.push('\n');
        values.push(json!({"table": r.name, "rows": r.text.lines().collect::<Vec<_>>(),
                           "differences": r.diffs.iter().map(|d| d.to_string()).collect::<Vec<_>>()}));
    }
    text.push_str(if ok { "all tables match\n" } else { "tables differ\n" });
    Ok((render(format, text, Value::Array(values)), if ok { 0 } else { EXIT_MISMATCH }))
}

fn run_census(points: Points, cfg: RunConfig, format: Format) -> Outcome {
    let kind = match points {
        Points::Six => CensusKind::Six,
        Points::Seven => CensusKind::Seven,
        Points::Coconic => CensusKind::Coconic,
    };
    let r = census(kind, &cfg)?;
    let value = json!({"seed": cfg.seed, "samples": r.samples, "bound": cfg.bound, "classes": r.histogram.len(),
                       "unknown": r.unknown, "rejected": r.rejected, "excluded_diagrams": r.excluded_diagrams,
                       "histogram": r.histogram});
    let code = if r.unknown == 0 && r.excluded_diagrams == 0 { 0 } else { EXIT_MISMATCH };
    Ok((render(format, r.to_text(), value), code))
}

fn graph_json(g: &AdjacencyGraph) -> Value {
    json!({
        "vertices": g.vertices.iter().map(|v| v.name()).collect::<Vec<_>>(),
        "edges": g.edges.iter().map(|e| json!({"from": e.a.name(), "to": e.b.name(), "wall": e.label})).collect::<Vec<_>>(),
    })
}

fn graph(level: usize, conics: bool, seed: u64, format: Format) -> Outcome {
    if level != 6 && level != 7 {
        return Err(Failure(format!("level must be 6 or 7, got {level}"), EXIT_PARSE));
    }
    let strat = if conics { Stratification::LinesAndConics } else { Stratification::LinesOnly };
    let g = adjacency_graph(level, strat, seed)?;
    let out = match format {
        Format::Dot => g.to_dot(),
        Format::Json => render(format, String::new(), graph_json(&g)),
        Format::Text => g.to_text(),
    };
    Ok((out, 0))
}

fn representatives(format: Format) -> Outcome {
    let cat = Catalog::shipped();
    let value = Value::Array(
        cat.entries
            .iter()
            .map(|e| {
                json!({"kind": e.kind.keyword(), "name": e.name, "class": e.class.map(|c| c.compact()),
                       "triples": e.triples.iter().map(|t| t.iter().map(|l| l.to_string()).collect::<String>()).collect::<Vec<_>>(),
                       "points": rp2conf::pointfile::format_point_file(&e.points).lines().collect::<Vec<_>>()})
            })
            .collect(),
    );
    Ok((render(format, CATALOG_TEXT.to_string(), value), 0))
}

fn cross(file: &PathBuf, triple: Option<String>, conic: Option<String>, seed: u64, format: Format) -> Outcome {
    let points = read_points(file)?;
    if degeneracy_detect(&points) != Degeneracy::Generic {
        return degeneracy_report(&points, format);
    }
    let spec = match (triple, conic) {
        (Some(t), None) => WallSpec::Line(labels(&t, 3)?.try_into().unwrap()),
        (None, Some(c)) => WallSpec::Conic(labels(&c, 6)?.try_into().unwrap()),
        _ => return Err(Failure("give exactly one of --triple or --conic".into(), EXIT_PARSE)),
    };
    let c = cross_wall(&points, spec, seed)?;
    let seq = match &c.descriptor {
        rp2conf::walls::WallDescriptor::Line(l) => format!("sequence {}\n", format_sequence_braced(&l.sequence)),
        rp2conf::walls::WallDescriptor::Conic(k) => format!("diagram {}\n", k.diagram),
        rp2conf::walls::WallDescriptor::SixConic => String::new(),
    };
    let text = format!(
        "before {}\nwall {}\n{seq}after {}\nmoved point {}\nacross the wall:\n{}",
        c.before,
        c.descriptor,
        c.after,
        c.mover,
        format_point_file(&c.far)
    );
    let value = json!({"before": c.before.name(), "wall": c.descriptor.label(), "after": c.after.name(),
                       "mover": c.mover, "far": format_point_file(&c.far).lines().collect::<Vec<_>>(),
                       "wall_points": format_point_file(&c.wall).lines().collect::<Vec<_>>()});
    Ok((render(format, text, value), 0))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        // the global pool is configured once, before any parallel work
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global();
    }
    let format = cli.format;
    let result = match cli.command {
        Command::Classify { file } => classify(&file, format),
        Command::Tables => tables(cli.seed, format),
        Command::Census { points, samples, bound } => {
            run_census(points, RunConfig { seed: cli.seed, samples, bound, jobs: cli.jobs }, format)
        }
        Command::Graph { level, conics } => graph(level, conics, cli.seed, format),
        Command::Representatives => representatives(format),
        Command::Cross { file, triple, conic } => cross(&file, triple, conic, cli.seed, format),
    };
    match result {
        Ok((text, code)) => {
            if let Some(path) = &cli.out {
                if let Err(e) = fs::write(path, &text) {
                    eprintln!("rp2conf: {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                print!("{text}");
            }
            ExitCode::from(code)
        }
        Err(Failure(msg, code)) => {
            eprintln!("rp2conf: {msg}");
            ExitCode::from(code)
        }
    }
}

//! The `diskgeo` command line.
//!
//! Every subcommand writes JSON (with `"schema": "diskgeo/1"`) unless a
//! DOT or CSV rendering is requested. Exit codes: 0 success, 1 domain
//! error (reported as a JSON error object on stdout), 2 usage error.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog;
use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::curvature::{self, FirstOrder, ScanFilter};
use crate::error::{Error, Result};
use crate::flow::{Frame, GeodesicFlow};
use crate::io::{self, Format, SCHEMA};
use crate::poincare_hopf as ph;
use crate::rational::{self, to_pq};
use crate::sheets;
use crate::topology::{self, LinkCheck, Recognizer, DEFAULT_SIZE_LIMIT};

/// Refinements beyond this many simplices are refused.
pub const REFINE_LIMIT: usize = 5_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "diskgeo",
    version,
    about = "Exact discrete differential geometry on simplicial complexes"
)]
pub struct Cli {
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Source {
    /// Complex or graph file.
    #[arg(long, conflicts_with = "name", required_unless_present = "name")]
    pub input: Option<PathBuf>,
    /// Catalog entry, optionally refined: `octahedron@2`.
    #[arg(long)]
    pub name: Option<String>,
    #[arg(long, value_enum, default_value = "facets-json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct Output {
    /// JSON output (the default).
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    /// CSV output where supported.
    #[arg(long)]
    pub csv: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Size, f-vector and Euler characteristic.
    Info {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        out: Output,
    },
    /// Purity, manifold and sphere recognition, geodesic readiness.
    Check {
        #[command(flatten)]
        src: Source,
        /// Check links of vertices only.
        #[arg(long)]
        fast: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Geodesic flow on ordered facets.
    Flow {
        #[command(flatten)]
        src: Source,
        /// Follow the orbit of this ordered facet, e.g. `1,2,3`.
        #[arg(long)]
        start: Option<String>,
        /// Full cycle decomposition (default without --start).
        #[arg(long)]
        all: bool,
        /// Add a period histogram and boundary cycle count.
        #[arg(long)]
        billiard_stats: bool,
        /// With --start: the orbit as a DOT digraph.
        #[arg(long, requires = "start")]
        dot: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Local disk or grown sheet around a bone.
    Sheets {
        #[command(flatten)]
        src: Source,
        /// Bone vertices, e.g. `1,2`.
        #[arg(long)]
        bone: String,
        /// Ordering of the bone (default: ascending).
        #[arg(long)]
        ordering: Option<String>,
        #[arg(long)]
        grow: bool,
        #[arg(long, default_value_t = 1000)]
        max_patches: usize,
        /// Dual subgraph of the disk or sheet as DOT.
        #[arg(long)]
        dot: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Sectional curvature spectrum over all bones.
    Sectional {
        #[command(flatten)]
        src: Source,
        /// Include the value of every bone.
        #[arg(long)]
        per_bone: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Curvature of a 2-manifold (vertex curvature by default).
    Curvature {
        #[command(flatten)]
        src: Source,
        #[arg(long, conflicts_with_all = ["per_triangle", "first_order"])]
        per_vertex: bool,
        #[arg(long, conflicts_with = "first_order")]
        per_triangle: bool,
        #[arg(long, value_enum)]
        first_order: Option<FirstOrder>,
        #[command(flatten)]
        out: Output,
    },
    /// Partition curvature scans and the degree-31 threshold.
    Partitions {
        #[arg(long, required_unless_present_any = ["n_max", "verify_31"])]
        n: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        min_part: Option<usize>,
        #[arg(long)]
        exclude_part: Vec<usize>,
        #[arg(long)]
        verify_31: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Poincare-Hopf divisors from energy rules.
    Ph {
        #[command(flatten)]
        src: Source,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run seeds `seed .. seed + trials`.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, value_enum, default_value = "random")]
        rule: RuleKind,
        /// The vertex self-map of the first seed as DOT.
        #[arg(long)]
        emit_map: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Built-in complexes.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Iterated barycentric refinement.
    Refine {
        #[command(flatten)]
        src: Source,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        depth: u64,
        /// Write the refined complex here (facets-json).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// DOT renderings.
    Export {
        #[command(flatten)]
        src: Source,
        #[arg(long, value_enum)]
        dot: DotTarget,
        /// Orbit start frame.
        #[arg(long)]
        start: Option<String>,
        /// Sheet bone.
        #[arg(long)]
        bone: Option<String>,
        #[arg(long, default_value_t = 1000)]
        max_patches: usize,
        /// Seed for the self-map rule.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// Names with expected invariants.
    List {
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum RuleKind {
    Random,
    Min,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum DotTarget {
    Dual,
    Orbit,
    Sheet,
    SelfMap,
}

struct Loaded {
    name: String,
    complex: SimplicialComplex,
}

fn load(src: &Source) -> Result<Loaded> {
    match (&src.input, &src.name) {
        (Some(path), None) => Ok(Loaded {
            name: path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default(),
            complex: io::load_complex(path, src.format)?,
        }),
        (None, Some(name)) => Ok(Loaded {
            name: name.clone(),
            complex: catalog::catalog_complex(name)?,
        }),
        _ => Err(Error::invalid("give exactly one of --input and --name")),
    }
}

fn parse_list(s: &str) -> Result<Vec<Vertex>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<Vertex>()
                .ok()
                .filter(|&v| v > 0)
                .ok_or_else(|| Error::invalid(format!("bad vertex {t:?} in {s:?}")))
        })
        .collect()
}

fn json_text(v: impl Serialize) -> String {
    let mut v = serde_json::to_value(v).expect("reports serialise");
    if let Value::Object(map) = &mut v {
        if !map.contains_key("schema") {
            map.insert("schema".into(), json!(SCHEMA));
        }
    }
    let mut s = serde_json::to_string_pretty(&v).expect("reports serialise");
    s.push('\n');
    s
}

fn emit(out: &Output, text: String) -> Result<()> {
    write_to(out.out.as_ref(), text)
}

fn write_to(path: Option<&PathBuf>, text: String) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn no_csv(out: &Output, what: &str) -> Result<()> {
    if out.csv {
        return Err(Error::invalid(format!("{what} has no CSV form")));
    }
    Ok(())
}

fn frame(s: &str) -> Result<Frame> {
    Frame::new(parse_list(s)?)
}

fn bone(s: &str) -> Result<Simplex> {
    Simplex::new(parse_list(s)?)
}

/// Runs a parsed invocation.
pub fn run(cli: Cli) -> Result<()> {
    match cli.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?
            .install(|| dispatch(cli.command)),
        None => dispatch(cli.command),
    }
}

fn dispatch(cmd: Command) -> Result<()> {
    match cmd {
        Command::Info { src, out } => {
            no_csv(&out, "info")?;
            let l = load(&src)?;
            let c = &l.complex;
            let f = c.f_vector();
            emit(
                &out,
                json_text(json!({
                    "schema": SCHEMA,
                    "name": l.name,
                    "dimension": c.dim(),
                    "pure": c.is_pure(),
                    "vertices": c.vertices().len(),
                    "simplices": c.len(),
                    "f_vector": f.counts,
                    "euler": f.euler,
                })),
            )
        }
        Command::Check { src, fast, out } => {
            no_csv(&out, "check")?;
            let l = load(&src)?;
            let links = if fast {
                LinkCheck::VerticesOnly
            } else {
                LinkCheck::AllSimplices
            };
            let r = Recognizer::new(DEFAULT_SIZE_LIMIT, links);
            emit(&out, json_text(topology::check(&l.complex, &r)?))
        }
        Command::Flow {
            src,
            start,
            all,
            billiard_stats,
            dot,
            out,
        } => {
            no_csv(&out, "flow")?;
            let l = load(&src)?;
            let flow = GeodesicFlow::new(&l.complex)?;
            match start {
                Some(s) if !all => {
                    let o = flow.orbit(&frame(&s)?)?;
                    if dot {
                        return emit(&out, flow.orbit_dot(&o));
                    }
                    let (_, f) = flow.orbit_complex(&o);
                    emit(
                        &out,
                        json_text(json!({
                            "schema": SCHEMA,
                            "bundle_size": flow.bundle_size(),
                            "start": s,
                            "period": o.period(),
                            "boundary": o.boundary_touching,
                            "frames": o.frames.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                            "orbit_complex": f,
                        })),
                    )
                }
                _ => {
                    let report = flow.flow_report();
                    if !billiard_stats {
                        return emit(&out, json_text(&report));
                    }
                    let mut v = serde_json::to_value(&report).unwrap();
                    let hist: BTreeMap<String, usize> = report
                        .period_histogram()
                        .into_iter()
                        .map(|(p, n)| (p.to_string(), n))
                        .collect();
                    v["period_histogram"] = json!(hist);
                    v["boundary_cycles"] =
                        json!(report.cycles.iter().filter(|c| c.boundary).count());
                    emit(&out, json_text(v))
                }
            }
        }
        Command::Sheets {
            src,
            bone: b,
            ordering,
            grow,
            max_patches,
            dot,
            out,
        } => {
            no_csv(&out, "sheets")?;
            let l = load(&src)?;
            let c = &l.complex;
            let b = bone(&b)?;
            let ord = match ordering {
                Some(o) => parse_list(&o)?,
                None => b.vertices().to_vec(),
            };
            if grow {
                let sheet = sheets::grow_sheet(c, &b, &ord, max_patches)?;
                if dot {
                    return emit(&out, sheet.to_dot(c)?);
                }
                let facets: Vec<Value> = sheet
                    .facet_multiset
                    .iter()
                    .map(|(f, n)| json!({"facet": f.key(), "count": n}))
                    .collect();
                let dual = sheet.dual_subgraph(c)?;
                emit(
                    &out,
                    json_text(json!({
                        "schema": SCHEMA,
                        "bone": b.key(),
                        "ordering": ord,
                        "patches": sheet.patches.len(),
                        "closed": sheet.closed,
                        "bones": sheet.patches.iter().map(|p| p.bone.key()).collect::<Vec<_>>(),
                        "frames": sheet.patches.iter().map(|p| p.frame.to_string()).collect::<Vec<_>>(),
                        "facet_count": facets.len(),
                        "facets": facets,
                        "connected": dual.is_connected(),
                    })),
                )
            } else {
                let disk = sheets::local_disk(c, &b, &ord)?;
                if dot {
                    let g = disk.dual_subgraph(c)?;
                    return emit(
                        &out,
                        g.to_dot("disk", |v| c.simplex_by_label(v).unwrap().key()),
                    );
                }
                let k = sheets::sectional_curvature(c, &b, &ord)?;
                emit(
                    &out,
                    json_text(json!({
                        "schema": SCHEMA,
                        "bone": b.key(),
                        "ordering": ord,
                        "m": disk.petals.len(),
                        "petals": disk.petals.iter().map(|p| p.key()).collect::<Vec<_>>(),
                        "petal_numbers": disk.petal_numbers.iter().map(to_pq).collect::<Vec<_>>(),
                        "facets": disk.facets.iter().map(|f| f.key()).collect::<Vec<_>>(),
                        "curvature": to_pq(&k),
                    })),
                )
            }
        }
        Command::Sectional { src, per_bone, out } => {
            let l = load(&src)?;
            let sp = sheets::sectional_spectrum(&l.complex)?;
            if out.csv {
                let s = io::csv_table(
                    &["bone", "value", "decimal"],
                    sp.per_bone
                        .iter()
                        .map(|(b, k)| [b.key(), to_pq(k), rational::to_decimal(k).to_string()]),
                );
                return emit(&out, s);
            }
            let mut v = serde_json::to_value(&sp).unwrap();
            if per_bone {
                v["bones"] = sp
                    .per_bone
                    .iter()
                    .map(|(b, k)| json!({"bone": b.key(), "value": to_pq(k)}))
                    .collect();
            }
            emit(&out, json_text(v))
        }
        Command::Curvature {
            src,
            per_vertex: _,
            per_triangle,
            first_order,
            out,
        } => {
            let l = load(&src)?;
            let c = &l.complex;
            let report = match (per_triangle, first_order) {
                (true, _) => curvature::triangle_report(c)?,
                (false, Some(kind)) => curvature::first_order_report(c, kind)?,
                _ => curvature::gauss_bonnet_2m(c)?,
            };
            if out.csv {
                emit(&out, report.to_csv())
            } else {
                emit(&out, json_text(&report))
            }
        }
        Command::Partitions {
            n,
            n_max,
            min_part,
            exclude_part,
            verify_31,
            out,
        } => partitions(n, n_max, min_part, exclude_part, verify_31, &out),
        Command::Ph {
            src,
            seed,
            trials,
            rule,
            emit_map,
            out,
        } => {
            no_csv(&out, "ph")?;
            let l = load(&src)?;
            let c = &l.complex;
            let make = |s: u64| match rule {
                RuleKind::Random => ph::random_rule(c, s),
                RuleKind::Min => {
                    let (f, g) = ph::seeded_functions(c, s);
                    ph::min_rule(c, &f, &g)
                }
            };
            if emit_map {
                let map = ph::vertex_self_map(c, &make(seed)?)?;
                return emit(&out, map.to_dot());
            }
            if trials == 1 {
                let r = make(seed)?;
                let d = ph::push_energy(c, &r)?;
                let census = ph::vertex_self_map(c, &r)?.census();
                let mut v = serde_json::to_value(&d).unwrap();
                v["seed"] = json!(seed);
                v["self_map"] = serde_json::to_value(census).unwrap();
                return emit(&out, json_text(v));
            }
            let mut rows = Vec::new();
            let mut conserved = true;
            for s in seed..seed + trials {
                let d = ph::push_energy(c, &make(s)?)?;
                conserved &= d.total == d.euler;
                rows.push(json!({"seed": s, "total": d.total, "divisor": d.divisor}));
            }
            emit(
                &out,
                json_text(json!({
                    "schema": SCHEMA,
                    "euler": c.euler(),
                    "conserved": conserved,
                    "trials": rows,
                })),
            )
        }
        Command::Catalog {
            action: CatalogAction::List { out },
        } => {
            let entries = catalog::entries();
            if out.csv {
                let s = io::csv_table(
                    &["name", "f_vector", "euler", "manifold_dim"],
                    entries.iter().map(|e| {
                        let f: Vec<String> = e.f_vector.iter().map(|x| x.to_string()).collect();
                        let d = e.manifold_dim.map(|d| d.to_string()).unwrap_or_default();
                        [e.name.clone(), f.join(" "), e.euler.to_string(), d]
                    }),
                );
                return emit(&out, s);
            }
            emit(
                &out,
                json_text(json!({
                    "schema": SCHEMA,
                    "entries": entries,
                    "parametric": ["cycle<n> (n >= 4)", "simplex<q>", "<name>@<depth>"],
                })),
            )
        }
        Command::Refine { src, depth, out } => {
            let l = load(&src)?;
            let mut f = l.complex.f_vector().counts;
            for _ in 0..depth {
                f = catalog::refined_f_vector(&f);
            }
            let size: usize = f.iter().sum();
            if size > REFINE_LIMIT {
                return Err(Error::TooLarge {
                    simplices: size,
                    limit: REFINE_LIMIT,
                });
            }
            let r = l.complex.barycentric_n(depth as usize);
            let fv = r.f_vector();
            if let Some(path) = &out {
                std::fs::write(
                    path,
                    io::complex_to_json(&r, &format!("{}@{depth}", l.name)),
                )?;
            }
            write_to(
                None,
                json_text(json!({
                    "schema": SCHEMA,
                    "name": l.name,
                    "depth": depth,
                    "f_vector": fv.counts,
                    "euler": fv.euler,
                })),
            )
        }
        Command::Export {
            src,
            dot,
            start,
            bone: b,
            max_patches,
            seed,
            out,
        } => {
            let l = load(&src)?;
            let c = &l.complex;
            let text = match dot {
                DotTarget::Dual => c
                    .dual_graph()?
                    .to_dot("dual", |v| c.simplex_by_label(v).unwrap().key()),
                DotTarget::Orbit => {
                    let flow = GeodesicFlow::new(c)?;
                    let s = match start {
                        Some(s) => frame(&s)?,
                        None => flow.frame_at(0),
                    };
                    flow.orbit_dot(&flow.orbit(&s)?)
                }
                DotTarget::Sheet => {
                    let b = match b {
                        Some(b) => bone(&b)?,
                        None => c
                            .bones()
                            .first()
                            .cloned()
                            .ok_or_else(|| Error::invalid("no bones"))?,
                    };
                    sheets::grow_sheet(c, &b, b.vertices(), max_patches)?.to_dot(c)?
                }
                DotTarget::SelfMap => ph::vertex_self_map(c, &ph::random_rule(c, seed)?)?.to_dot(),
            };
            write_to(out.as_ref(), text)
        }
    }
}

fn partitions(
    n: Option<usize>,
    n_max: Option<usize>,
    min_part: Option<usize>,
    exclude_parts: Vec<usize>,
    verify_31: bool,
    out: &Output,
) -> Result<()> {
    if verify_31 {
        let report = curvature::threshold_verify(n_max.unwrap_or(33))?;
        let passed = report.passed();
        let mut v = serde_json::to_value(&report).unwrap();
        v["pass"] = json!(passed);
        emit(out, json_text(v))?;
        if !passed {
            return Err(Error::Verification(
                "degree-31 threshold checks failed".into(),
            ));
        }
        return Ok(());
    }
    let filter = ScanFilter {
        min_part,
        exclude_parts,
    };
    let ns: Vec<usize> = match (n, n_max) {
        (Some(n), _) => vec![n],
        (None, Some(m)) => (16..=m).collect(),
        (None, None) => return Err(Error::invalid("give --n or --n-max")),
    };
    if out.csv {
        let mut rows = Vec::new();
        for &n in &ns {
            for (p, k) in curvature::partition_scan(n, &filter) {
                let parts: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
                rows.push([
                    n.to_string(),
                    parts.join(" "),
                    to_pq(&k),
                    rational::to_decimal(&k).to_string(),
                ]);
            }
        }
        let s = io::csv_table(&["n", "partition", "value", "decimal"], rows);
        return emit(out, s);
    }
    if let Some(n) = n {
        let rows: Vec<Value> = curvature::partition_scan(n, &filter)
            .into_iter()
            .map(|(p, k)| json!({"partition": p, "value": to_pq(&k)}))
            .collect();
        let row = curvature::scan_row(n, &filter);
        return emit(
            out,
            json_text(json!({
                "schema": SCHEMA,
                "n": n,
                "count": rows.len(),
                "min": row.min.as_ref().map(to_pq),
                "partitions": rows,
            })),
        );
    }
    let rows: Vec<_> = ns
        .iter()
        .map(|&n| curvature::scan_row(n, &filter))
        .collect();
    emit(out, json_text(json!({"schema": SCHEMA, "rows": rows})))
}

fn error_json(e: &Error) -> String {
    json_text(json!({
        "schema": SCHEMA,
        "error": {"kind": e.kind(), "message": e.to_string()},
    }))
}

/// Entry point for the binary.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            print!("{}", error_json(&e));
            eprintln!("diskgeo: {e}");
            ExitCode::from(1)
        }
    }
}

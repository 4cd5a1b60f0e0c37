//! Command-line front end: builders for the shipped complexes, exhaustive
//! verifiers emitting machine-readable certificates, and file round-trip
//! plumbing. Exit code 0 means a PASS certificate (or a successfully
//! produced report), 1 a FAIL certificate, 2 a usage, io or format error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use sperner_forge::chromatic::{chromatic_number, criticality_report, is_k_colourable};
use sperner_forge::complex::Simplex;
use sperner_forge::counterexample::{build_kd, refine, verify_no_unique_rainbow};
use sperner_forge::gallai::{build_gallai_graph, verify_colouring_equivalence};
use sperner_forge::gallery;
use sperner_forge::instance::validate_instance;
use sperner_forge::io;
use sperner_forge::planar::{unique_rainbow_labelling_2d, DiskTriangulation};
use sperner_forge::projective::{
    antipodal_quotient, build_glued_sphere, insert_k_copies, verify_quadrangulation,
};
use sperner_forge::sperner::{
    classify_facets, enumerate_labellings, verify_sperner_lemma, SearchOptions, Status,
};

#[derive(Parser)]
#[command(
    name = "sperner-forge",
    version,
    about = "Exact combinatorial searches over Sperner labellings and the graphs they colour"
)]
struct Cli {
    /// Worker threads for partitionable sweeps (default 1, or the value of
    /// SPERNER_FORGE_JOBS).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Hard cap on the number of labellings any search may enumerate.
    #[arg(long, global = true, default_value_t = 1 << 24)]
    search_bound: u64,

    /// Report style on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Emit canonical complexes.
    Gallery {
        #[command(subcommand)]
        what: GalleryCmd,
    },
    /// Exhaustive verification certificates.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Construct instances.
    Build {
        #[command(subcommand)]
        what: BuildCmd,
    },
    /// Labelling enumeration and per-facet classification.
    Sperner {
        #[command(subcommand)]
        what: SpernerCmd,
    },
    /// The graph attached to an instance and its colouring-side checks.
    Gallai {
        #[command(subcommand)]
        what: GallaiCmd,
    },
    /// Exact colouring of DIMACS graphs.
    Chromatic {
        #[command(subcommand)]
        what: ChromaticCmd,
    },
    /// Centrally symmetric spheres and antipodal quotients.
    Quad {
        #[command(subcommand)]
        what: QuadCmd,
    },
    /// Construct a labelling whose unique rainbow facet is prescribed.
    PlanarLabel {
        /// Instance file (2-dimensional, disk-shaped).
        #[arg(long)]
        complex: PathBuf,
        /// Facet as comma-separated vertex ids, e.g. "u1,v1,v2".
        #[arg(long)]
        facet: String,
        /// On pipeline failure, fall back to exhaustive search.
        #[arg(long)]
        fallback_exhaustive: bool,
        /// Write the labelling JSON here.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Exploratory surveys with no expected answer.
    Conjecture {
        #[command(subcommand)]
        what: ConjectureCmd,
    },
}

#[derive(Subcommand)]
enum GalleryCmd {
    /// The 20-facet boundary complex on eight vertices.
    H8 {
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Cross polytope boundary with its antipodal involution.
    Cross {
        #[arg(long)]
        dim: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Cyclic polytope boundary by the evenness condition.
    Cyclic {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        dim: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Any labelling making ABGZ and CDEF rainbow forces a third rainbow
    /// facet; sweeps all labellings (symmetry-reduced by default).
    H8 {
        /// Sweep all 4^8 labellings instead of fixing ABGZ's labels.
        #[arg(long)]
        full_sweep: bool,
    },
    /// The same two-rainbow check on a user-supplied closed pseudomanifold.
    ThirdRainbow {
        #[arg(long)]
        complex: PathBuf,
        /// First distinguished facet, comma-separated ids.
        #[arg(long)]
        sigma0: String,
        /// Second distinguished facet, disjoint from the first.
        #[arg(long)]
        sigma1: String,
        #[arg(long)]
        full_sweep: bool,
    },
    /// Every valid labelling of the instance has a rainbow facet other
    /// than sigma.
    Main {
        #[arg(long)]
        complex: PathBuf,
        /// Distinguished facet; defaults to the file's "sigma" entry.
        #[arg(long)]
        sigma: Option<String>,
    },
    /// Every valid labelling of the instance has at least one rainbow
    /// facet.
    Sperner {
        #[arg(long)]
        complex: PathBuf,
    },
}

#[derive(Subcommand)]
enum BuildCmd {
    /// The dimension-d family member with optional stellar refinements.
    Counterexample {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        refinements: usize,
        /// Randomize the refined facet choices (default: lexicographic).
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short, long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum SpernerCmd {
    /// Count the labellings compatible with the supports.
    Enumerate {
        #[arg(long)]
        complex: PathBuf,
        /// Write every labelling as one JSON object per line.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Decide, facet by facet, whether a unique-rainbow labelling exists.
    Classify {
        #[arg(long)]
        complex: PathBuf,
    },
}

#[derive(Subcommand)]
enum GallaiCmd {
    /// Emit the graph in DIMACS .col form with role annotations.
    Build {
        #[arg(long)]
        complex: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Certify that (d+1)-colourability matches the existence of a
    /// rainbow-free labelling, decided independently on both sides.
    Equiv {
        #[arg(long)]
        complex: PathBuf,
    },
    /// Count triangles in the graph.
    Triangles {
        #[arg(long)]
        complex: PathBuf,
    },
}

#[derive(Subcommand)]
enum ChromaticCmd {
    /// Exact chromatic number of a DIMACS graph.
    Number {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Edge-criticality scan: which deletions keep the graph k-chromatic.
    Critical {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum QuadCmd {
    /// Build the spliced centrally symmetric sphere for an instance.
    Build {
        #[arg(long)]
        complex: PathBuf,
        /// Write the symmetric complex JSON here.
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Also write the antipodal quotient as DIMACS.
        #[arg(long)]
        quotient: Option<PathBuf>,
    },
    /// Run the quotient checks: Gallai isomorphism, odd cycle, facet
    /// property.
    Verify {
        #[arg(long)]
        complex: PathBuf,
    },
}

#[derive(Subcommand)]
enum ConjectureCmd {
    /// Per-facet unique-rainbow survey of the C(n,4)-associated instance.
    Cyclic {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli.jobs.unwrap_or_else(|| {
        std::env::var("SPERNER_FORGE_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(1)
    });
    let opts = SearchOptions {
        max_space: cli.search_bound as u128,
        jobs: jobs.max(1),
    };
    match run(cli.command, &opts, cli.format) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, opts: &SearchOptions, format: Format) -> anyhow::Result<ExitCode> {
    match command {
        Command::Gallery { what } => gallery_cmd(what, format),
        Command::Verify { what } => verify_cmd(what, opts, format),
        Command::Build { what } => build_cmd(what, format),
        Command::Sperner { what } => sperner_cmd(what, opts, format),
        Command::Gallai { what } => gallai_cmd(what, opts, format),
        Command::Chromatic { what } => chromatic_cmd(what, format),
        Command::Quad { what } => quad_cmd(what, format),
        Command::PlanarLabel {
            complex,
            facet,
            fallback_exhaustive,
            out,
        } => planar_cmd(
            &complex,
            &facet,
            fallback_exhaustive,
            out.as_deref(),
            opts,
            format,
        ),
        Command::Conjecture { what } => conjecture_cmd(what, opts, format),
    }
}

fn load_complex_file(path: &Path) -> anyhow::Result<io::ComplexFile> {
    let value = io::read_json(path).with_context(|| format!("reading {}", path.display()))?;
    io::parse_complex(&value).with_context(|| format!("parsing {}", path.display()))
}

fn load_instance(path: &Path) -> anyhow::Result<(sperner_forge::SpernerInstance, Option<Simplex>)> {
    let file = load_complex_file(path)?;
    let instance = file
        .instance
        .clone()
        .ok_or_else(|| anyhow!("{} carries no supports/corners", path.display()))?;
    let report = validate_instance(&instance);
    if !report.is_valid() {
        bail!(
            "{} is not a valid instance: {}",
            path.display(),
            report
                .violations
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join("; ")
        );
    }
    Ok((instance, file.sigma))
}

fn emit(format: Format, report: &Value) -> anyhow::Result<()> {
    match format {
        Format::Json => {
            let mut text = serde_json::to_string_pretty(report)?;
            text.push('\n');
            print!("{text}");
        }
        Format::Text => {
            if let Value::Object(map) = report {
                for (key, value) in map {
                    match value {
                        Value::String(s) => println!("{key}: {s}"),
                        other => println!("{key}: {other}"),
                    }
                }
            } else {
                println!("{report}");
            }
        }
    }
    Ok(())
}

fn to_value<T: serde::Serialize>(value: &T) -> anyhow::Result<Value> {
    Ok(serde_json::to_value(value)?)
}

fn exit_by_status(status: Status) -> ExitCode {
    if status.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn write_out(path: Option<&Path>, value: &Value) -> anyhow::Result<()> {
    if let Some(path) = path {
        io::write_json(path, value).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn parse_facet(text: &str) -> anyhow::Result<Simplex> {
    Ok(Simplex::parse(text)?)
}

fn gallery_cmd(cmd: GalleryCmd, format: Format) -> anyhow::Result<ExitCode> {
    let value = match cmd {
        GalleryCmd::H8 { out } => {
            let value = io::complex_to_json(&gallery::h8_boundary());
            write_out(out.as_deref(), &value)?;
            value
        }
        GalleryCmd::Cross { dim, out } => {
            if dim < 1 {
                bail!("cross polytope dimension must be at least 1");
            }
            let (complex, involution) = gallery::cross_polytope_boundary(dim);
            let value = io::complex_with_involution_to_json(&complex, &involution);
            write_out(out.as_deref(), &value)?;
            value
        }
        GalleryCmd::Cyclic { n, dim, out } => {
            let complex = gallery::cyclic_polytope_boundary(n, dim)?;
            let value = io::complex_to_json(&complex);
            write_out(out.as_deref(), &value)?;
            value
        }
    };
    emit(format, &value)?;
    Ok(ExitCode::SUCCESS)
}

fn verify_cmd(cmd: VerifyCmd, opts: &SearchOptions, format: Format) -> anyhow::Result<ExitCode> {
    match cmd {
        VerifyCmd::H8 { full_sweep } => {
            let cert = gallery::check_third_rainbow_forced(
                &gallery::h8_boundary(),
                &gallery::h8_sigma0(),
                &gallery::h8_sigma1(),
                !full_sweep,
                opts,
            )?;
            emit(format, &to_value(&cert)?)?;
            Ok(exit_by_status(cert.status))
        }
        VerifyCmd::ThirdRainbow {
            complex,
            sigma0,
            sigma1,
            full_sweep,
        } => {
            let file = load_complex_file(&complex)?;
            let cert = gallery::check_third_rainbow_forced(
                &file.complex,
                &parse_facet(&sigma0)?,
                &parse_facet(&sigma1)?,
                !full_sweep,
                opts,
            )?;
            emit(format, &to_value(&cert)?)?;
            Ok(exit_by_status(cert.status))
        }
        VerifyCmd::Main { complex, sigma } => {
            let (instance, file_sigma) = load_instance(&complex)?;
            let sigma = match sigma {
                Some(text) => parse_facet(&text)?,
                None => file_sigma.ok_or_else(|| {
                    anyhow!("no --sigma given and the file has no \"sigma\" entry")
                })?,
            };
            let cert = verify_no_unique_rainbow(&instance, &sigma, opts)?;
            emit(format, &to_value(&cert)?)?;
            Ok(exit_by_status(cert.status))
        }
        VerifyCmd::Sperner { complex } => {
            let (instance, _) = load_instance(&complex)?;
            let cert = verify_sperner_lemma(&instance, opts)?;
            emit(format, &to_value(&cert)?)?;
            Ok(exit_by_status(cert.status))
        }
    }
}

fn build_cmd(cmd: BuildCmd, format: Format) -> anyhow::Result<ExitCode> {
    match cmd {
        BuildCmd::Counterexample {
            dim,
            refinements,
            seed,
            out,
        } => {
            let (instance, sigma) = build_kd(dim)?;
            let instance = refine(&instance, &sigma, refinements, seed)?;
            let value = io::instance_to_json(&instance, Some(&sigma));
            io::write_json(&out, &value).with_context(|| format!("writing {}", out.display()))?;
            let summary = serde_json::json!({
                "dim": dim,
                "refinements": refinements,
                "vertices": instance.complex().vertex_count(),
                "facets": instance.complex().facet_count(),
                "spaceSize": instance.space_size(),
                "sigma": sigma,
                "out": out.display().to_string(),
            });
            emit(format, &summary)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn sperner_cmd(cmd: SpernerCmd, opts: &SearchOptions, format: Format) -> anyhow::Result<ExitCode> {
    match cmd {
        SpernerCmd::Enumerate {
            complex,
            emit: emit_path,
        } => {
            let (instance, _) = load_instance(&complex)?;
            let space = instance.space_size();
            if space > opts.max_space {
                bail!(
                    "space of {space} labellings exceeds the bound {}",
                    opts.max_space
                );
            }
            let mut count: u128 = 0;
            let mut lines = String::new();
            for labelling in enumerate_labellings(&instance)? {
                count += 1;
                if emit_path.is_some() {
                    lines.push_str(&serde_json::to_string(&io::labelling_to_json(&labelling))?);
                    lines.push('\n');
                }
            }
            if let Some(path) = emit_path {
                std::fs::write(&path, lines)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            emit(
                format,
                &serde_json::json!({ "count": count, "spaceSize": space }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        SpernerCmd::Classify { complex } => {
            let (instance, _) = load_instance(&complex)?;
            let classes = classify_facets(&instance, opts)?;
            let report = serde_json::json!({
                "spaceSize": instance.space_size(),
                "facets": to_value(&classes)?,
            });
            emit(format, &report)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn gallai_cmd(cmd: GallaiCmd, opts: &SearchOptions, format: Format) -> anyhow::Result<ExitCode> {
    match cmd {
        GallaiCmd::Build { complex, out } => {
            let (instance, _) = load_instance(&complex)?;
            let gallai = build_gallai_graph(&instance);
            let text = io::gallai_to_dimacs(&gallai);
            match out {
                Some(path) => {
                    std::fs::write(&path, &text)
                        .with_context(|| format!("writing {}", path.display()))?;
                    let summary = serde_json::json!({
                        "vertices": gallai.graph().vertex_count(),
                        "edges": gallai.graph().edge_count(),
                        "out": path.display().to_string(),
                    });
                    emit(format, &summary)?;
                }
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        GallaiCmd::Equiv { complex } => {
            let (instance, _) = load_instance(&complex)?;
            let cert = verify_colouring_equivalence(&instance, opts)?;
            emit(format, &to_value(&cert)?)?;
            Ok(exit_by_status(cert.status))
        }
        GallaiCmd::Triangles { complex } => {
            let (instance, _) = load_instance(&complex)?;
            let gallai = build_gallai_graph(&instance);
            emit(
                format,
                &serde_json::json!({ "triangles": gallai.triangle_count() }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn chromatic_cmd(cmd: ChromaticCmd, format: Format) -> anyhow::Result<ExitCode> {
    match cmd {
        ChromaticCmd::Number { graph } => {
            let text = std::fs::read_to_string(&graph)
                .with_context(|| format!("reading {}", graph.display()))?;
            let (g, _) = io::parse_dimacs(&text)?;
            let chi = chromatic_number(&g);
            let colouring = is_k_colourable(&g, chi.max(1));
            emit(
                format,
                &serde_json::json!({
                    "chromaticNumber": chi,
                    "colouring": to_value(&colouring)?,
                }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        ChromaticCmd::Critical { graph, k } => {
            let text = std::fs::read_to_string(&graph)
                .with_context(|| format!("reading {}", graph.display()))?;
            let (g, _) = io::parse_dimacs(&text)?;
            let report = criticality_report(&g, k)?;
            let mut value = to_value(&report)?;
            if let Value::Object(map) = &mut value {
                map.insert(
                    "verdict".into(),
                    Value::String(
                        if report.critical {
                            "critical"
                        } else {
                            "not critical"
                        }
                        .into(),
                    ),
                );
            }
            emit(format, &value)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn quad_cmd(cmd: QuadCmd, format: Format) -> anyhow::Result<ExitCode> {
    match cmd {
        QuadCmd::Build {
            complex,
            out,
            quotient,
        } => {
            let (instance, _) = load_instance(&complex)?;
            let sphere = build_glued_sphere(instance.dim() as usize);
            let ktilde = insert_k_copies(&sphere, &instance)?;
            let value = io::symmetric_to_json(ktilde.symmetric());
            write_out(out.as_deref(), &value)?;
            if let Some(path) = quotient {
                let q = antipodal_quotient(ktilde.symmetric())?;
                std::fs::write(&path, io::graph_to_dimacs(&q.graph, None))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            let summary = serde_json::json!({
                "vertices": ktilde.symmetric().complex().vertex_count(),
                "facets": ktilde.symmetric().complex().facet_count(),
            });
            emit(format, if out.is_some() { &summary } else { &value })?;
            Ok(ExitCode::SUCCESS)
        }
        QuadCmd::Verify { complex } => {
            let (instance, _) = load_instance(&complex)?;
            let cert = verify_quadrangulation(&instance)?;
            emit(format, &to_value(&cert)?)?;
            Ok(exit_by_status(cert.status))
        }
    }
}

fn planar_cmd(
    complex: &Path,
    facet: &str,
    fallback: bool,
    out: Option<&Path>,
    opts: &SearchOptions,
    format: Format,
) -> anyhow::Result<ExitCode> {
    let (instance, _) = load_instance(complex)?;
    let disk = DiskTriangulation::new(instance)?;
    let sigma = parse_facet(facet)?;
    let cert = unique_rainbow_labelling_2d(&disk, &sigma, fallback, opts)?;
    if let (Some(path), Some(labelling)) = (out, &cert.labelling) {
        io::write_json(path, &io::labelling_to_json(labelling))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    emit(format, &to_value(&cert)?)?;
    Ok(exit_by_status(cert.status))
}

fn conjecture_cmd(
    cmd: ConjectureCmd,
    opts: &SearchOptions,
    format: Format,
) -> anyhow::Result<ExitCode> {
    match cmd {
        ConjectureCmd::Cyclic { n, out } => {
            let survey = gallery::cyclic_conjecture_survey(n, opts)?;
            let value = to_value(&survey)?;
            write_out(out.as_deref(), &value)?;
            emit(format, &value)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

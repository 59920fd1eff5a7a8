use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use sspec_core::goingdown::{search_counterexamples, search_pair, OrderMode};
use sspec_core::ideal::{all_ideals, ideal_generated, mult_closure, s_radical};
use sspec_core::spectrum::{spec_s, SpectrumDoc};
use sspec_core::topology::{
    connected_components, irreducible_components, s_flat_topology, s_zariski_topology,
    specialization_dot,
};
use sspec_core::verifier::{
    verify_corpus_selected, verify_morphisms, verify_selected, CorpusSpec, Status, MORPHISM_TAG,
    THEOREM_TAGS,
};
use sspec_core::{Caps, Elem, Error, FiniteRing, FiniteTopology, MultSet, RingDesc, SpectrumSpace};

mod render;

#[derive(Parser)]
#[command(
    name = "sspec",
    version,
    about = "S-prime spectra of finite commutative rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Flat,
    Zariski,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Order {
    Containment,
    SSpecialization,
}

impl From<Order> for OrderMode {
    fn from(o: Order) -> Self {
        match o {
            Order::Containment => OrderMode::Containment,
            Order::SSpecialization => OrderMode::SSpecialization,
        }
    }
}

#[derive(clap::Args)]
struct RingArgs {
    /// Ring description (JSON)
    #[arg(long)]
    ring: PathBuf,
    /// Comma-separated generators of S; omitted means S = {1}
    #[arg(long, default_value = "")]
    mults: String,
}

#[derive(Subcommand)]
enum Command {
    /// List the S-prime ideals with witnesses and colon primes
    Spec {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// S-radical of the ideal generated by --ideal
    Radical {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        ideal: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Open sets of the S-flat or S-Zariski topology
    Topology {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Also write the specialization graph in DOT format
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Irreducible and connected components
    Components {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, value_enum, default_value = "flat")]
        kind: Kind,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check the theorem suite on one ring or on a corpus
    Verify {
        #[arg(long, conflicts_with = "corpus", required_unless_present = "corpus")]
        ring: Option<PathBuf>,
        #[arg(long, default_value = "", conflicts_with = "corpus")]
        mults: String,
        /// `builtin` or a corpus file
        #[arg(long)]
        corpus: Option<String>,
        /// Comma-separated theorem tags
        #[arg(long)]
        only: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Search for going-down failures of S-primes along ring morphisms
    Goingdown {
        #[arg(long, conflicts_with = "corpus", required_unless_present = "corpus")]
        source: Option<PathBuf>,
        #[arg(long, default_value = "", conflicts_with = "corpus")]
        mults: String,
        #[arg(long, requires = "source")]
        target: Option<PathBuf>,
        /// `builtin` or a corpus file; every corpus ring is also a target
        #[arg(long)]
        corpus: Option<String>,
        #[arg(long, value_enum, default_value = "containment")]
        order: Order,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The ideal lattice in canonical order
    Ideals {
        #[arg(long)]
        ring: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Failures that end the run.
enum Failure {
    Input(String),
    Counterexample(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Counterexample { .. } => Failure::Counterexample(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Counterexample(msg)) => {
            eprintln!("sspec: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("sspec: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_elems(text: &str) -> Result<Vec<Elem>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| Failure::Input(format!("`{s}` is not an element index")))
        })
        .collect()
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_ring(path: &Path) -> Result<(RingDesc, FiniteRing), Failure> {
    let desc = RingDesc::from_json(&read_file(path)?)?;
    let ring = desc.build()?;
    Ok((desc, ring))
}

fn load_corpus(arg: &str) -> Result<CorpusSpec, Failure> {
    if arg == "builtin" {
        Ok(CorpusSpec::builtin())
    } else {
        Ok(CorpusSpec::from_json(&read_file(Path::new(arg))?)?)
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report types serialize")
    );
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Spec { ring, format } => cmd_spec(&ring, format),
        Command::Radical {
            ring,
            ideal,
            format,
        } => cmd_radical(&ring, &ideal, format),
        Command::Topology {
            ring,
            kind,
            dot,
            format,
        } => cmd_topology(&ring, kind, dot.as_deref(), format),
        Command::Components { ring, kind, format } => cmd_components(&ring, kind, format),
        Command::Verify {
            ring,
            mults,
            corpus,
            only,
            format,
        } => {
            let only = only.map(|o| parse_tags(&o)).transpose()?;
            match (ring, corpus) {
                (Some(path), _) => cmd_verify_one(&path, &mults, only.as_deref(), format),
                (None, Some(corpus)) => cmd_verify_corpus(&corpus, only.as_deref(), format),
                (None, None) => Err(Failure::Input("need --ring or --corpus".into())),
            }
        }
        Command::Goingdown {
            source,
            mults,
            target,
            corpus,
            order,
            format,
        } => cmd_goingdown(source, &mults, target, corpus, order.into(), format),
        Command::Ideals { ring, format } => {
            let (_, ring) = load_ring(&ring)?;
            let ideals: Vec<Vec<Elem>> = all_ideals(&ring).iter().map(|i| i.to_vec()).collect();
            match format {
                Format::Json => print_json(&ideals),
                Format::Text => ideals.iter().for_each(|i| println!("{}", render::set(i))),
            }
            Ok(true)
        }
    }
}

fn parse_tags(text: &str) -> Result<Vec<String>, Failure> {
    let tags: Vec<String> = text
        .split(',')
        .map(|t| t.trim().to_string())
        .filter(|t| !t.is_empty())
        .collect();
    for t in &tags {
        if t != MORPHISM_TAG && !THEOREM_TAGS.contains(&t.as_str()) {
            return Err(Failure::Input(format!("unknown theorem tag `{t}`")));
        }
    }
    Ok(tags)
}

fn with_space<T>(
    args: &RingArgs,
    body: impl FnOnce(&RingDesc, &MultSet, &SpectrumSpace<'_>) -> Result<T, Failure>,
) -> Result<T, Failure> {
    let (desc, ring) = load_ring(&args.ring)?;
    let mults = mult_closure(&ring, &parse_elems(&args.mults)?)?;
    let space = spec_s(&ring, &mults)?;
    body(&desc, &mults, &space)
}

fn cmd_spec(args: &RingArgs, format: Format) -> Outcome {
    with_space(args, |desc, _, space| {
        match format {
            Format::Json => print_json(&SpectrumDoc::new(desc, space)),
            Format::Text => print!("{}", render::spectrum(desc, space)),
        }
        Ok(true)
    })
}

fn cmd_radical(args: &RingArgs, ideal: &str, format: Format) -> Outcome {
    let (_, ring) = load_ring(&args.ring)?;
    let mults = mult_closure(&ring, &parse_elems(&args.mults)?)?;
    let ideal = ideal_generated(&ring, &parse_elems(ideal)?)?;
    let rad = s_radical(&ring, &mults, &ideal);
    match format {
        Format::Json => print_json(&json!({
            "mults": mults.to_vec(),
            "ideal": ideal.to_vec(),
            "radical": rad.to_vec(),
        })),
        Format::Text => println!("{}", render::set(&rad.to_vec())),
    }
    Ok(true)
}

fn build_topology(space: &SpectrumSpace<'_>, kind: Kind) -> Result<FiniteTopology, Failure> {
    Ok(match kind {
        Kind::Flat => s_flat_topology(space),
        Kind::Zariski => s_zariski_topology(space)?,
    })
}

fn cmd_topology(args: &RingArgs, kind: Kind, dot: Option<&Path>, format: Format) -> Outcome {
    with_space(args, |_, _, space| {
        let top = build_topology(space, kind)?;
        if let Some(path) = dot {
            fs::write(path, specialization_dot(space, &top))
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        }
        let opens: Vec<Vec<usize>> = top.opens().iter().map(|u| u.to_vec()).collect();
        match format {
            Format::Json => print_json(&json!({
                "kind": top.kind(),
                "points": render::point_members(space),
                "opens": opens,
            })),
            Format::Text => print!("{}", render::topology(space, &top)),
        }
        Ok(true)
    })
}

fn cmd_components(args: &RingArgs, kind: Kind, format: Format) -> Outcome {
    with_space(args, |_, _, space| {
        let top = build_topology(space, kind)?;
        let irreducible: Vec<Vec<usize>> = irreducible_components(&top)
            .iter()
            .map(|c| c.to_vec())
            .collect();
        let connected: Vec<Vec<usize>> = connected_components(&top)
            .iter()
            .map(|c| c.to_vec())
            .collect();
        match format {
            Format::Json => print_json(&json!({
                "kind": top.kind(),
                "points": render::point_members(space),
                "irreducible": irreducible,
                "connected": connected,
            })),
            Format::Text => {
                print!("{}", render::points(space));
                println!("irreducible components:");
                irreducible
                    .iter()
                    .for_each(|c| println!("  {}", render::set(c)));
                println!("connected components:");
                connected
                    .iter()
                    .for_each(|c| println!("  {}", render::set(c)));
            }
        }
        Ok(true)
    })
}

fn cmd_verify_one(path: &Path, mults: &str, only: Option<&[String]>, format: Format) -> Outcome {
    let (desc, ring) = load_ring(path)?;
    let gens = parse_elems(mults)?;
    let mults = mult_closure(&ring, &gens)?;
    let wanted = |t: &str| only.is_none_or(|o| o.iter().any(|x| x == t));
    let tags: Vec<&str> = THEOREM_TAGS.iter().copied().filter(|t| wanted(t)).collect();
    let mut checks = verify_selected(&ring, &mults, &tags);
    let caps = Caps::default();
    if wanted(MORPHISM_TAG) && ring.size() <= caps.morphism_source {
        checks.extend(verify_morphisms(&ring, &ring, &mults, &caps));
    }
    let ok = checks.iter().all(|c| c.status != Status::Fail);
    match format {
        Format::Json => print_json(&json!({
            "ring": desc,
            "generators": gens,
            "mults": mults.to_vec(),
            "checks": checks,
        })),
        Format::Text => {
            println!("{desc}  S = {}", render::set(&mults.to_vec()));
            print!("{}", render::checks(&checks));
        }
    }
    Ok(ok)
}

fn cmd_verify_corpus(corpus: &str, only: Option<&[String]>, format: Format) -> Outcome {
    let loaded = load_corpus(corpus)?;
    let only: Option<Vec<&str>> = only.map(|o| o.iter().map(String::as_str).collect());
    let report = verify_corpus_selected(&loaded, only.as_deref())?;
    match format {
        Format::Json => print_json(&report),
        Format::Text => print!("{}", render::corpus(&report)),
    }
    Ok(!report.has_failures())
}

fn cmd_goingdown(
    source: Option<PathBuf>,
    mults: &str,
    target: Option<PathBuf>,
    corpus: Option<String>,
    mode: OrderMode,
    format: Format,
) -> Outcome {
    let caps = Caps::default();
    let report = match (source, corpus) {
        (Some(source), _) => {
            let (src_desc, _) = load_ring(&source)?;
            let target = target.ok_or_else(|| Failure::Input("--source needs --target".into()))?;
            let (tgt_desc, _) = load_ring(&target)?;
            search_pair(&src_desc, &parse_elems(mults)?, &tgt_desc, mode, &caps)
        }
        (None, Some(corpus)) => {
            let loaded = load_corpus(&corpus)?;
            let mut targets: Vec<RingDesc> = Vec::new();
            for e in &loaded.entries {
                if !targets.contains(&e.ring) {
                    targets.push(e.ring.clone());
                }
            }
            search_counterexamples(&loaded, &targets, mode)
        }
        (None, None) => return Err(Failure::Input("need --source or --corpus".into())),
    };
    match format {
        Format::Json => print_json(&report),
        Format::Text => print!("{}", render::goingdown(&report)),
    }
    Ok(report.counterexamples.is_empty())
}

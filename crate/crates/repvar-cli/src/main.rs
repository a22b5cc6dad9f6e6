//! Command-line interface: classification, socle computations, skeleton
//! enumeration, the hereditary recursion, the finite-field oracle, and
//! realizable-sequence enumeration.
//!
//! Exit status: 0 on success, 2 on input validation errors, 3 when a cyclic
//! quiver is passed to `classify`.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use repvar::components::{self, ClassifyOptions, Component};
use repvar::layers::{enumerate_realizable, DimVector, SemisimpleSequence};
use repvar::quiver::Quiver;
use repvar::repcalc::Representation;
use repvar::skeleta;
use repvar::socle;
use repvar::Error;

#[derive(Parser)]
#[command(
    name = "repvar",
    about = "Irreducible components and generic invariants of module varieties \
             of truncated path algebras",
    long_about = None,
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct QuiverArg {
    /// Path to the quiver JSON file.
    #[arg(long)]
    quiver: PathBuf,
}

#[derive(Args)]
struct RandomArgs {
    /// Independent random scalar draws per component.
    #[arg(long, default_value_t = repvar::DEFAULT_TRIALS)]
    trials: usize,
    /// Prime modulus for instantiations.
    #[arg(long, default_value_t = repvar::DEFAULT_PRIME)]
    prime: u64,
    /// Seed for all randomness.
    #[arg(long, default_value_t = repvar::DEFAULT_SEED)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// List the irreducible components for a dimension vector.
    Classify {
        #[command(flatten)]
        quiver: QuiverArg,
        /// Dimension vector, e.g. `0,1,1,0,3,2,3,5,10`.
        #[arg(long)]
        dim: String,
        /// Truncation level L (paths of length L+1 vanish).
        #[arg(long)]
        truncate: usize,
        #[command(flatten)]
        random: RandomArgs,
        /// Write the component list as JSON to this path.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write quiver and per-component skeleton DOT files to this directory.
        #[arg(long, value_name = "DIR")]
        emit_dot: Option<PathBuf>,
    },
    /// Generic socle data for one radical layering.
    Socle {
        #[command(flatten)]
        quiver: QuiverArg,
        /// Layering as a JSON array of arrays, layer 0 first.
        #[arg(long)]
        layering: String,
        /// Write the result as JSON to this path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Enumerate skeleta for a layering.
    Skeleton {
        #[command(flatten)]
        quiver: QuiverArg,
        #[arg(long)]
        layering: String,
        /// Maximum number of skeleta to list.
        #[arg(long, default_value_t = 10)]
        limit: usize,
        /// Write skeleton DOT files to this directory.
        #[arg(long, value_name = "DIR")]
        emit_dot: Option<PathBuf>,
    },
    /// Generic endomorphism dimension for one layering.
    Endo {
        #[command(flatten)]
        quiver: QuiverArg,
        #[arg(long)]
        layering: String,
        #[command(flatten)]
        random: RandomArgs,
    },
    /// Generic radical layering in the hereditary case.
    Hereditary {
        #[command(flatten)]
        quiver: QuiverArg,
        #[arg(long)]
        dim: String,
    },
    /// Radical/socle layerings and endomorphism dimension of a concrete
    /// finite-field representation.
    Oracle {
        #[command(flatten)]
        quiver: QuiverArg,
        /// Path to the representation JSON file.
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        truncate: usize,
    },
    /// Enumerate all realizable semisimple sequences for a dimension vector.
    Enumerate {
        #[command(flatten)]
        quiver: QuiverArg,
        #[arg(long)]
        dim: String,
        #[arg(long)]
        truncate: usize,
        /// Print only the count.
        #[arg(long)]
        count_only: bool,
    },
    /// Emit the quiver as a GraphViz DOT file to standard output.
    Dot {
        #[command(flatten)]
        quiver: QuiverArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(Error::AcyclicRequired) => ExitCode::from(3),
                Some(_) => ExitCode::from(2),
                None => ExitCode::from(1),
            }
        }
    }
}

fn run(command: Command) -> anyhow::Result<()> {
    match command {
        Command::Classify { quiver, dim, truncate, random, json, emit_dot } => {
            let q = load_quiver(&quiver.quiver)?;
            let d = parse_dim(&dim, q.vertex_count())?;
            let opts = ClassifyOptions { trials: random.trials, prime: random.prime, seed: random.seed };
            let comps = components::classify(&q, &d, truncate, &opts)?;
            print_classification(&q, &d, truncate, &opts, &comps);
            if let Some(path) = json {
                let value = components::components_to_json(&comps, &q);
                write_text(&path, &format!("{}\n", serde_json::to_string_pretty(&value)?))?;
                println!("wrote {}", path.display());
            }
            if let Some(dir) = emit_dot {
                fs::create_dir_all(&dir)?;
                write_text(&dir.join("quiver.dot"), &q.to_dot())?;
                for (i, c) in comps.iter().enumerate() {
                    let path = dir.join(format!("component_{:03}.dot", i + 1));
                    write_text(&path, &c.skeleton.to_dot(&q))?;
                }
                println!("wrote DOT files to {}", dir.display());
            }
            Ok(())
        }
        Command::Socle { quiver, layering, json } => {
            let q = load_quiver(&quiver.quiver)?;
            let s = parse_layering(&layering, q.vertex_count())?;
            let work = socle::c_layers(&s, &q)?;
            let star = socle::generic_socle_layering(&s, &q)?;
            println!("layering:       {s}");
            println!("socle layering: {star}");
            let value = serde_json::json!({
                "soc": star.layers(),
                "c": work.c,
                "partials": work.partials,
            });
            let text = format!("{}\n", serde_json::to_string_pretty(&value)?);
            print!("{text}");
            if let Some(path) = json {
                write_text(&path, &text)?;
                println!("wrote {}", path.display());
            }
            Ok(())
        }
        Command::Skeleton { quiver, layering, limit, emit_dot } => {
            let q = load_quiver(&quiver.quiver)?;
            let s = parse_layering(&layering, q.vertex_count())?;
            let found = skeleta::enumerate_skeleta(&s, &q, Some(limit))?;
            println!("layering: {s}");
            println!("skeleta listed: {}", found.len());
            for (i, sk) in found.iter().enumerate() {
                let paths: Vec<String> = sk.paths().iter().map(|p| p.format(&q)).collect();
                println!("skeleton {}: {}", i + 1, paths.join(", "));
                let pres = skeleta::build_presentation(sk, &q);
                for line in pres.format_relations(&q) {
                    println!("  relation: {line}");
                }
            }
            if let Some(dir) = emit_dot {
                fs::create_dir_all(&dir)?;
                for (i, sk) in found.iter().enumerate() {
                    write_text(&dir.join(format!("skeleton_{:03}.dot", i + 1)), &sk.to_dot(&q))?;
                }
                println!("wrote DOT files to {}", dir.display());
            }
            Ok(())
        }
        Command::Endo { quiver, layering, random } => {
            let q = load_quiver(&quiver.quiver)?;
            let s = parse_layering(&layering, q.vertex_count())?;
            let opts =
                ClassifyOptions { trials: random.trials, prime: random.prime, seed: random.seed };
            let endo = components::generic_endo_dim(&q, &s, &opts)?;
            println!("layering: {s}");
            println!("generic endomorphism dimension: {endo}");
            println!("generically indecomposable: {}", endo == 1);
            Ok(())
        }
        Command::Hereditary { quiver, dim } => {
            let q = load_quiver(&quiver.quiver)?;
            let d = parse_dim(&dim, q.vertex_count())?;
            let s = components::hereditary_generic_layering(&q, &d)?;
            println!("maximal path length: {}", q.max_path_length()?);
            println!("generic radical layering: {s}");
            println!("{}", serde_json::to_string(s.layers())?);
            Ok(())
        }
        Command::Oracle { quiver, rep, truncate } => {
            let q = load_quiver(&quiver.quiver)?;
            let text = fs::read_to_string(&rep)?;
            let rep = Representation::parse(&q, &text)?;
            let rad = rep.radical_layering(&q, truncate)?;
            let soc = rep.socle_layering(&q, truncate)?;
            let endo = rep.endo_dim(&q);
            println!("radical layering: {rad}");
            println!("socle layering:   {soc}");
            println!("endomorphism dimension: {endo}");
            let value = serde_json::json!({
                "radical_layering": rad.layers(),
                "socle_layering": soc.layers(),
                "endo_dim": endo,
            });
            println!("{}", serde_json::to_string_pretty(&value)?);
            Ok(())
        }
        Command::Enumerate { quiver, dim, truncate, count_only } => {
            let q = load_quiver(&quiver.quiver)?;
            let d = parse_dim(&dim, q.vertex_count())?;
            let mut count = 0usize;
            for s in enumerate_realizable(&q, &d, truncate) {
                count += 1;
                if !count_only {
                    println!("{}", serde_json::to_string(s.layers())?);
                }
            }
            println!("realizable sequences: {count}");
            Ok(())
        }
        Command::Dot { quiver } => {
            let q = load_quiver(&quiver.quiver)?;
            print!("{}", q.to_dot());
            Ok(())
        }
    }
}

fn load_quiver(path: &Path) -> anyhow::Result<Quiver> {
    let text = fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!(Error::InvalidInput(format!("{}: {e}", path.display()))))?;
    Ok(Quiver::parse(&text)?)
}

fn parse_dim(text: &str, n: usize) -> anyhow::Result<DimVector> {
    let entries = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidInput(format!("bad dimension entry `{t}`")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if entries.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: entries.len() }.into());
    }
    Ok(DimVector::new(entries)?)
}

fn parse_layering(text: &str, n: usize) -> anyhow::Result<SemisimpleSequence> {
    let s = SemisimpleSequence::parse(text)?;
    if s.vertex_count() != n {
        return Err(Error::LengthMismatch { expected: n, found: s.vertex_count() }.into());
    }
    Ok(s)
}

fn print_classification(
    q: &Quiver,
    d: &DimVector,
    truncate: usize,
    opts: &ClassifyOptions,
    comps: &[Component],
) {
    println!(
        "quiver: {} vertices, {} arrows, acyclic, maximal path length {}",
        q.vertex_count(),
        q.arrows().len(),
        q.max_path_length().expect("classification ran")
    );
    println!("dimension vector: {d}");
    println!("truncation: L = {truncate} (paths of length {} vanish)", truncate + 1);
    println!("seed: {}, prime: {}, trials: {}", opts.seed, opts.prime, opts.trials);
    println!("irreducible components: {}", comps.len());
    for (i, c) in comps.iter().enumerate() {
        println!("component {}:", i + 1);
        println!("  rad:  {}", c.rad);
        println!("  soc:  {}", c.soc);
        println!("  c0:   {}", c.c0.simple_notation());
        println!(
            "  endo dim: {}{}",
            c.endo_dim,
            if c.generically_indecomposable { " (generically indecomposable)" } else { "" }
        );
        let paths: Vec<String> = c.skeleton.paths().iter().map(|p| p.format(q)).collect();
        println!("  skeleton: {}", paths.join(", "));
        for line in c.presentation.format_relations(q) {
            println!("  relation: {line}");
        }
    }
}

fn write_text(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text)?;
    Ok(())
}

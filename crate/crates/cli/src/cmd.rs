use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gds_core::error::{Error, Result};
use gds_core::exact::GdnResult;
use gds_core::forest::forest_gdn;
use gds_core::graph::ProperColoring;
use gds_core::io;
use gds_core::latin::{
    self, bound_report, g_number, latin_descents, min_latin_gds_with_mode, random_latin,
    verify_latin_gds, Completion, CoverKind, GdsMode,
};
use gds_core::reductions::{clique_instance, incidence_instance, IncidenceVertex};
use gds_core::sharing::{
    audit, deal, parse_share, reconstruct, AccessStructure, ReconstructOutcome, ShareBundle,
    ShareRecord,
};
use gds_core::{exact, greedy_color, PartialColoring};

#[derive(Parser)]
#[command(
    name = "gds",
    version,
    about = "Greedy defining sets of ordered graphs and Latin squares"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Run the first-fit coloring of a graph, optionally from a pre-coloring
    Color {
        #[arg(long)]
        graph: PathBuf,
        /// Defining-set file of `v c` lines
        #[arg(long)]
        defining: Option<PathBuf>,
    },
    /// List the descents of a graph under a proper coloring
    Descents {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Minimum greedy defining set over all optimal colorings
    Gdn {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Minimum greedy defining set for a fixed optimal coloring
    GdnFixed {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Minimum greedy defining set of an ordered forest
    ForestGdn {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Build a defining-number instance from a vertex-cover instance
    ReduceVc {
        /// The vertex-cover input graph F (its order line is ignored)
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        construction: Construction,
        #[arg(long)]
        out_graph: PathBuf,
        #[arg(long)]
        out_coloring: PathBuf,
        /// Optional back-map from instance vertices to F's vertices/edges
        #[arg(long)]
        out_map: Option<PathBuf>,
    },
    /// List the descent triples of a Latin square
    LatinDescents {
        #[arg(long)]
        square: PathBuf,
    },
    /// Find a small (minimum, in exact mode) defining set of a square
    LatinGds {
        #[arg(long)]
        square: PathBuf,
        /// Force the exact solver (guarded by order)
        #[arg(long, conflicts_with = "heuristic")]
        exact: bool,
        /// Force the greedy heuristic
        #[arg(long)]
        heuristic: bool,
        /// Derive the set from a cover of the per-row graph instead
        #[arg(long, conflicts_with_all = ["cols", "entries"])]
        rows: bool,
        /// Derive the set from a cover of the per-column graph instead
        #[arg(long, conflicts_with = "entries")]
        cols: bool,
        /// Derive the set from a cover of the per-entry graph instead
        #[arg(long)]
        entries: bool,
    },
    /// Check whether a partial square is a defining set of a square
    LatinVerify {
        #[arg(long)]
        square: PathBuf,
        #[arg(long)]
        defining: PathBuf,
    },
    /// Greedily complete a partial square
    LatinComplete {
        #[arg(long)]
        partial: PathBuf,
    },
    /// Cover the entry graph and compare against the size bound
    LatinBound {
        #[arg(long)]
        square: PathBuf,
        #[arg(long)]
        exact: bool,
    },
    /// Generate a seeded random Latin square
    LatinRandom {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Minimum defining-set size over all squares of a tiny order
    LatinG {
        #[arg(long)]
        n: usize,
    },
    /// Split a key square into share files for an access structure
    ShareDeal {
        #[arg(long)]
        square: PathBuf,
        #[arg(long)]
        access: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Pool share files of one authorized set and recover the key
    ShareReconstruct {
        /// Share files, all for the same set id
        #[arg(required = true)]
        shares: Vec<PathBuf>,
    },
    /// Replay every authorized set of a bundle against the key
    ShareAudit {
        #[arg(long)]
        square: PathBuf,
        #[arg(long)]
        access: PathBuf,
        /// Directory holding the share files
        #[arg(long)]
        shares: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Construction {
    /// Target the fixed-coloring problem (clique-augmented instance)
    Clique,
    /// Target the uncolored problem (bipartite incidence instance)
    Incidence,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::parse(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, content: &str) -> Result<()> {
    fs::write(path, content)
        .map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))
}

fn print_gdn(r: &GdnResult) {
    println!("{}", r.size);
    print!("{}", io::write_defining_set(&r.witness));
}

/// Access file: an optional `participants <p>...` line, then one
/// `set <id> <member>...` line per authorized set.
fn parse_access(text: &str) -> Result<AccessStructure> {
    let mut participants: Vec<String> = Vec::new();
    let mut sets: Vec<(String, Vec<String>)> = Vec::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace().map(str::to_string);
        let keyword = tokens.next().expect("non-empty line");
        match keyword.as_str() {
            "participants" => participants.extend(tokens),
            "set" => {
                let id = tokens
                    .next()
                    .ok_or_else(|| Error::parse("`set` line needs an id"))?;
                sets.push((id, tokens.collect()));
            }
            other => {
                return Err(Error::parse(format!(
                    "access line must start with `participants` or `set`, found {other:?}"
                )))
            }
        }
    }
    participants.extend(sets.iter().flat_map(|(_, ms)| ms.iter().cloned()));
    AccessStructure::new(participants, sets).map_err(|e| match e {
        Error::InvalidInput(msg) => Error::Parse(msg),
        other => other,
    })
}

fn load_bundle(dir: &Path, n: usize) -> Result<ShareBundle> {
    let mut entries: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| Error::parse(format!("cannot read {}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    entries.sort();
    let mut records: Vec<ShareRecord> = Vec::new();
    for path in entries {
        records.push(parse_share(&read(&path)?)?);
    }
    ShareBundle::from_records(n, records)
}

pub fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Color { graph, defining } => {
            let g = io::parse_graph(&read(&graph)?)?;
            let s = match defining {
                Some(path) => io::parse_defining_set(&read(&path)?)?,
                None => PartialColoring::new(),
            };
            let outcome = greedy_color(&g, &s)?;
            print!("{}", io::write_coloring(outcome.as_slice()));
            if outcome.is_proper() {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("the pre-coloring conflicts with itself; the result is not proper");
                Ok(ExitCode::from(1))
            }
        }
        Command::Descents { graph, coloring } => {
            let g = io::parse_graph(&read(&graph)?)?;
            let colors = io::parse_coloring(&read(&coloring)?, g.n())?;
            let c = ProperColoring::new(g.graph(), colors)?;
            for d in gds_core::find_descents(&g, &c)? {
                let mut line = format!("{} {} {}", d.head, d.low, d.high);
                for t in &d.tail {
                    line.push_str(&format!(" {t}"));
                }
                println!("{line}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gdn { graph } => {
            let g = io::parse_graph(&read(&graph)?)?;
            print_gdn(&exact::gdn(&g)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::GdnFixed { graph, coloring } => {
            let g = io::parse_graph(&read(&graph)?)?;
            let colors = io::parse_coloring(&read(&coloring)?, g.n())?;
            let c = ProperColoring::new(g.graph(), colors)?;
            print_gdn(&exact::gdn_fixed(&g, &c)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::ForestGdn { graph } => {
            let g = io::parse_graph(&read(&graph)?)?;
            let r = forest_gdn(&g)?;
            println!("{}", r.size);
            print!("{}", io::write_defining_set(&r.witness));
            Ok(ExitCode::SUCCESS)
        }
        Command::ReduceVc { graph, construction, out_graph, out_coloring, out_map } => {
            let f = io::parse_graph(&read(&graph)?)?;
            let f = f.graph();
            match construction {
                Construction::Clique => {
                    let inst = clique_instance(f);
                    write_file(&out_graph, &io::write_graph(inst.graph()))?;
                    write_file(&out_coloring, &io::write_coloring(inst.coloring().as_slice()))?;
                    if let Some(path) = out_map {
                        let mut map = String::new();
                        for v in 1..=f.n() {
                            map.push_str(&format!("{} v {v}\n", inst.copy_of(v)));
                        }
                        write_file(&path, &map)?;
                    }
                }
                Construction::Incidence => {
                    let inst = incidence_instance(f)?;
                    write_file(&out_graph, &io::write_graph(inst.graph()))?;
                    write_file(
                        &out_coloring,
                        &io::write_coloring(inst.primary_coloring().as_slice()),
                    )?;
                    if let Some(path) = out_map {
                        let mut map = String::new();
                        for v in 1..=inst.graph().n() {
                            match inst.classify(v) {
                                IncidenceVertex::YVertex(o) | IncidenceVertex::XVertex(o) => {
                                    map.push_str(&format!("{v} v {o}\n"));
                                }
                                IncidenceVertex::YEdge(i) | IncidenceVertex::XEdge(i) => {
                                    let (a, b) = inst.f().edges()[i];
                                    map.push_str(&format!("{v} e {a} {b}\n"));
                                }
                            }
                        }
                        write_file(&path, &map)?;
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::LatinDescents { square } => {
            let l = io::parse_latin(&read(&square)?)?;
            for d in latin_descents(&l) {
                let y = d.y_cell;
                let r = d.row_mate;
                let c = d.col_mate;
                println!(
                    "{} {} {}  {} {} {}  {} {} {}",
                    y.row, y.col, y.entry, r.row, r.col, r.entry, c.row, c.col, c.entry
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::LatinGds { square, exact: exact_flag, heuristic, rows, cols, entries } => {
            let l = io::parse_latin(&read(&square)?)?;
            let kind = [
                (rows, CoverKind::Row),
                (cols, CoverKind::Col),
                (entries, CoverKind::Entry),
            ]
            .into_iter()
            .find_map(|(set, k)| set.then_some(k));
            let (size, cells, is_exact) = match kind {
                // Cover route: a vertex cover of the chosen graph is a
                // defining set; minimum per component unless --heuristic.
                Some(kind) => {
                    let graph = latin::build_cover_graph(&l, kind);
                    let cover = if heuristic { graph.greedy_cover() } else { graph.min_cover()? };
                    let positions: Vec<(usize, usize)> =
                        cover.iter().map(|c| (c.row, c.col)).collect();
                    let gds = latin::gds_from_cover(&l, kind, &positions)?;
                    (gds.len(), gds, !heuristic)
                }
                None => {
                    let mode = if exact_flag {
                        GdsMode::Exact
                    } else if heuristic {
                        GdsMode::Heuristic
                    } else {
                        GdsMode::Auto
                    };
                    let r = min_latin_gds_with_mode(&l, mode)?;
                    (r.size, r.cells, r.exact)
                }
            };
            if !is_exact {
                eprintln!("heuristic mode: the defining set is valid but may not be minimum");
            }
            println!("{size}");
            print!("{}", io::write_partial_latin(&cells));
            Ok(ExitCode::SUCCESS)
        }
        Command::LatinVerify { square, defining } => {
            let l = io::parse_latin(&read(&square)?)?;
            let d = io::parse_partial_latin(&read(&defining)?)?;
            if d.n() != l.n() {
                return Err(Error::invalid(format!(
                    "defining set has order {}, square has order {}",
                    d.n(),
                    l.n()
                )));
            }
            if verify_latin_gds(&l, &d)? {
                println!("true");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("false");
                Ok(ExitCode::from(1))
            }
        }
        Command::LatinComplete { partial } => {
            let p = io::parse_partial_latin(&read(&partial)?)?;
            match latin::greedy_complete(&p) {
                Completion::Complete(sq) => {
                    print!("{}", io::write_latin(&sq));
                    Ok(ExitCode::SUCCESS)
                }
                Completion::Stuck { row, col } => {
                    println!("{row} {col}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::LatinBound { square, exact: exact_flag } => {
            let l = io::parse_latin(&read(&square)?)?;
            let r = bound_report(&l, exact_flag)?;
            println!("n={}", r.n);
            println!("cover={}", r.cover_size);
            println!("bound={:.4}", r.bound);
            println!("holds={}", r.holds);
            println!("exact={}", r.exact);
            println!("cells={}", r.cells.len());
            for c in &r.cells {
                println!("{} {} {}", c.row, c.col, c.entry);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::LatinRandom { n, seed } => {
            let l = random_latin(n, seed)?;
            print!("{}", io::write_latin(&l));
            Ok(ExitCode::SUCCESS)
        }
        Command::LatinG { n } => {
            println!("{}", g_number(n)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::ShareDeal { square, access, seed, out_dir } => {
            let l = io::parse_latin(&read(&square)?)?;
            let a = parse_access(&read(&access)?)?;
            let bundle = deal(&l, &a, seed)?;
            fs::create_dir_all(&out_dir)
                .map_err(|e| Error::invalid(format!("cannot create {}: {e}", out_dir.display())))?;
            for (participant, set_id, cells) in bundle.pieces() {
                let record = ShareRecord {
                    n: l.n(),
                    set_id: set_id.to_string(),
                    participant: participant.to_string(),
                    cells: cells.to_vec(),
                };
                let name = format!("share-{set_id}-{participant}.txt");
                let path = out_dir.join(&name);
                write_file(&path, &gds_core::sharing::write_share(&record))?;
                println!("{}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ShareReconstruct { shares } => {
            let mut records = Vec::new();
            for path in &shares {
                records.push(parse_share(&read(path)?)?);
            }
            let n = records[0].n;
            let set_id = records[0].set_id.clone();
            for r in &records {
                if r.n != n {
                    return Err(Error::invalid("share files disagree on the order"));
                }
                if r.set_id != set_id {
                    return Err(Error::invalid(format!(
                        "share files mix set ids {set_id} and {}",
                        r.set_id
                    )));
                }
            }
            let pieces: Vec<_> = records.into_iter().map(|r| r.cells).collect();
            match reconstruct(&pieces, n)? {
                ReconstructOutcome::Key(sq) => {
                    print!("{}", io::write_latin(&sq));
                    Ok(ExitCode::SUCCESS)
                }
                ReconstructOutcome::Failed { row, col } => {
                    println!("{row} {col}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::ShareAudit { square, access, shares } => {
            let l = io::parse_latin(&read(&square)?)?;
            let a = parse_access(&read(&access)?)?;
            let bundle = load_bundle(&shares, l.n())?;
            let report = audit(&l, &a, &bundle)?;
            for set in &report.sets {
                let leak = if set.leaked_without.is_empty() {
                    "-".to_string()
                } else {
                    set.leaked_without.join(",")
                };
                println!("set {} size={} reconstruct=ok leak={leak}", set.set_id, set.pool_size);
            }
            println!("trivial={}", report.trivially_recoverable);
            Ok(ExitCode::SUCCESS)
        }
    }
}

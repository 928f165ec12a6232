//! Command-line surface: recognition, structural decomposition, decks,
//! deck-level invariants, reconstruction, exhaustive verification, and
//! isomorph-free enumeration.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use intrec::deck::{self, Deck};
use intrec::error::Error;
use intrec::graph::Graph;
use intrec::interval::recognize_interval;
use intrec::oracle;
use intrec::reconstruct::reconstruct;
use intrec::structure::structure_report;

#[derive(Parser)]
#[command(name = "intrec", about = "Interval graph structure and deck reconstruction", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Output format where applicable.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    G6,
}

#[derive(Subcommand)]
enum Command {
    /// Recognize interval graphs: an interval representation per input graph,
    /// or a witness (induced long cycle or asteroidal triple).
    Recognize { input: Option<PathBuf> },
    /// Structural decomposition (bulk, flanks, one-sided classes, outsiders).
    Structure { input: Option<PathBuf> },
    /// The deck of each input graph.
    Deck { input: Option<PathBuf> },
    /// The multiset of flank sizes reconstructed from a deck (graphs are
    /// turned into their decks first).
    FlankSizes { input: Option<PathBuf> },
    /// Reconstruct the graph a deck belongs to.
    Reconstruct { input: Option<PathBuf> },
    /// Search for deck collisions involving interval graphs.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Stream one canonical graph6 line per isomorphism class.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        interval_only: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

enum Input {
    Graph(Graph),
    Deck(Deck),
}

fn read_inputs(path: &Option<PathBuf>) -> Result<Vec<Input>, String> {
    let text = match path {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| format!("cannot read {}: {}", p.display(), e))?
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| e.to_string())?;
            s
        }
    };
    let mut out = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        if line.starts_with('{') {
            out.push(Input::Deck(Deck::from_json(line).map_err(|e| e.to_string())?));
        } else {
            out.push(Input::Graph(
                intrec::graph6::decode(line).map_err(|e| format!("bad graph6 {:?}: {}", line, e))?,
            ));
        }
    }
    Ok(out)
}

struct Out {
    sink: Box<dyn Write>,
}

impl Out {
    fn new(path: &Option<PathBuf>) -> Result<Out, String> {
        let sink: Box<dyn Write> = match path {
            Some(p) => Box::new(
                std::fs::File::create(p)
                    .map_err(|e| format!("cannot create {}: {}", p.display(), e))?,
            ),
            None => Box::new(std::io::stdout()),
        };
        Ok(Out { sink })
    }

    fn line(&mut self, s: &str) {
        writeln!(self.sink, "{}", s).expect("write failed");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
    }
}

fn domain(e: Error) -> String {
    e.to_string()
}

fn run(cli: Cli) -> Result<bool, String> {
    let mut out = Out::new(&cli.output)?;
    let mut all_ok = true;
    match cli.command {
        Command::Recognize { input } => {
            for item in read_inputs(&input)? {
                let Input::Graph(g) = item else {
                    return Err("recognize expects graph6 input".into());
                };
                match recognize_interval(&g) {
                    Ok(rep) => match cli.format {
                        Format::Json => out.line(&serde_json::to_string(&rep).unwrap()),
                        Format::G6 => out.line(&intrec::graph6::encode(&g)),
                    },
                    Err(w) => {
                        all_ok = false;
                        let json = match &w {
                            intrec::NotIntervalWitness::InducedCycle(c) => serde_json::json!({
                                "not_interval": true, "witness": {"induced_cycle": c}
                            }),
                            intrec::NotIntervalWitness::AsteroidalTriple(t) => serde_json::json!({
                                "not_interval": true, "witness": {"asteroidal_triple": t}
                            }),
                        };
                        out.line(&json.to_string());
                    }
                }
            }
        }
        Command::Structure { input } => {
            for item in read_inputs(&input)? {
                let Input::Graph(g) = item else {
                    return Err("structure expects graph6 input".into());
                };
                let report = structure_report(&g).map_err(domain)?;
                out.line(&serde_json::to_string(&report).unwrap());
            }
        }
        Command::Deck { input } => {
            for item in read_inputs(&input)? {
                let Input::Graph(g) = item else {
                    return Err("deck expects graph6 input".into());
                };
                out.line(&Deck::of(&g).to_json());
            }
        }
        Command::FlankSizes { input } => {
            for item in read_inputs(&input)? {
                let d = match item {
                    Input::Deck(d) => d,
                    Input::Graph(g) => Deck::of(&g),
                };
                let (a, b) = deck::flank_sizes(&d).map_err(domain)?;
                out.line(&serde_json::json!({ "flank_sizes": [a, b] }).to_string());
            }
        }
        Command::Reconstruct { input } => {
            for item in read_inputs(&input)? {
                let d = match item {
                    Input::Deck(d) => d,
                    Input::Graph(g) => Deck::of(&g),
                };
                let r = reconstruct(&d).map_err(domain)?;
                match cli.format {
                    Format::Json => out.line(&r.to_json()),
                    Format::G6 => out.line(&intrec::canonical_form(&r.graph).map_err(domain)?.0),
                }
            }
        }
        Command::Verify { n, jobs } => {
            let report = oracle::verify_theorem(n, jobs).map_err(domain)?;
            all_ok = report.collisions.is_empty();
            out.line(&serde_json::to_string(&report).unwrap());
        }
        Command::Enumerate { n, interval_only, jobs } => {
            let graphs = if interval_only {
                oracle::enumerate_interval_graphs_jobs(n, jobs).map_err(domain)?
            } else {
                oracle::enumerate_graphs_jobs(n, jobs).map_err(domain)?
            };
            let mut lines: Vec<String> =
                graphs.iter().map(|g| intrec::canonical_form(g).unwrap().0).collect();
            lines.sort();
            for l in lines {
                out.line(&l);
            }
        }
    }
    Ok(all_ok)
}

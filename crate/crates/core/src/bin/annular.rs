use std::collections::BTreeSet;
use std::ops::RangeInclusive;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use annular::bijections::{from_graph, reflect, split, to_graph, to_linear, to_necklace};
use annular::counting::{count_ann, count_circular, count_fixed_crosscuts, count_necklace, count_total};
use annular::enumeration::{enumerate_matchings, EnumerationBudget};
use annular::model::CODE_VERSION;
use annular::refdata::{fetch_sequence, FetchOptions};
use annular::render::render_svg;
use annular::table::CountTable;
use annular::verify::{verify, VerifyConfig};
use annular::AnnularMatching;

/// Counting, enumeration and drawing of annular non-crossing matchings.
#[derive(Parser)]
#[command(name = "annular", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print an exact count.
    #[command(group(ArgGroup::new("query").required(true).args(["outer", "total", "circular", "necklace"])))]
    Count {
        /// Outer endpoints.
        #[arg(long, requires = "inner")]
        outer: Option<u64>,
        /// Inner endpoints.
        #[arg(long, requires = "outer")]
        inner: Option<u64>,
        /// Restrict to exactly this many cross-cuts.
        #[arg(long, requires = "outer")]
        crosscuts: Option<u64>,
        /// All matchings with this many endpoints in total.
        #[arg(long)]
        total: Option<u64>,
        /// Circular matchings of 2N points up to rotation.
        #[arg(long)]
        circular: Option<u64>,
        /// Binary necklaces with N1 black and N2 white beads, as `N1,N2`.
        #[arg(long, value_delimiter = ',')]
        necklace: Option<Vec<u64>>,
        #[arg(long)]
        json: bool,
    },
    /// Print a count table as CSV or JSON.
    Table {
        kind: TableArg,
        /// Row range for `maximal`, e.g. `0..10` (inclusive).
        #[arg(long, value_parser = parse_range, default_value = "0..10")]
        n: RangeInclusive<u64>,
        /// Column range for `maximal`.
        #[arg(long, value_parser = parse_range, default_value = "0..10")]
        k: RangeInclusive<u64>,
        /// Largest parameter for `ann` (default 12) and `total` (default 13).
        #[arg(long)]
        max: Option<u64>,
        /// Print zero entries instead of leaving them blank.
        #[arg(long)]
        zeros: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// List the canonical codes of every matching with the given shape.
    Enumerate {
        /// Outer half-circles.
        #[arg(long)]
        n: u64,
        /// Inner half-circles.
        #[arg(long)]
        m: u64,
        /// Cross-cuts.
        #[arg(long)]
        k: u64,
        /// Largest endpoint count allowed on either boundary.
        #[arg(long, default_value_t = 14)]
        max_endpoints: u64,
    },
    /// Check closed forms against brute force, bijections and invariants.
    Verify {
        #[arg(long, default_value_t = 12)]
        max_endpoints: u64,
        /// Also compare against the bundled reference sequences.
        #[arg(long)]
        sequences: bool,
    },
    /// Draw a matching as SVG.
    Render {
        #[arg(long)]
        code: String,
        /// Write to this file instead of standard output.
        #[arg(long)]
        output: Option<std::path::PathBuf>,
    },
    /// Apply one of the bijections to a matching.
    Bijection {
        #[arg(long)]
        code: String,
        #[arg(long, value_enum)]
        to: BijectionArg,
    },
    /// Load a reference sequence (cache, network, then bundled snapshot).
    Fetch {
        id: String,
        /// Number of terms to print.
        #[arg(long, default_value_t = 12)]
        terms: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableArg {
    Maximal,
    Ann,
    Total,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum BijectionArg {
    Necklace,
    Linear,
    Graph,
    Reflect,
    Split,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum Query {
    Ann { outer: u64, inner: u64, crosscuts: Option<u64> },
    Total { endpoints: u64 },
    Circular { n: u64 },
    Necklace { black: u64, white: u64 },
}

fn parse_range(text: &str) -> Result<RangeInclusive<u64>, String> {
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (text, text),
    };
    let parse = |s: &str| s.trim().parse::<u64>().map_err(|e| format!("bad bound {s:?}: {e}"));
    let (lo, hi) = (parse(a)?, parse(b)?);
    if lo > hi {
        return Err(format!("empty range {text}"));
    }
    Ok(lo..=hi)
}

fn count(query: Query, json: bool) -> anyhow::Result<()> {
    let value = match query {
        Query::Ann { outer, inner, crosscuts: Some(k) } => {
            if k > outer || k > inner || (outer - k) % 2 == 1 || (inner - k) % 2 == 1 {
                bail!("no matching has {outer} outer and {inner} inner endpoints and k = {k} cross-cuts");
            }
            count_fixed_crosscuts((outer - k) / 2, (inner - k) / 2, k)
        }
        Query::Ann { outer, inner, crosscuts: None } => count_ann(outer, inner),
        Query::Total { endpoints } => count_total(endpoints),
        Query::Circular { n } => count_circular(n)?,
        Query::Necklace { black, white } => count_necklace(black, white)?,
    };
    if json {
        let doc = serde_json::json!({ "query": query, "value": value.to_string() });
        println!("{doc}");
    } else {
        println!("{value}");
    }
    Ok(())
}

fn parse_code(code: &str) -> anyhow::Result<AnnularMatching> {
    AnnularMatching::parse(code).with_context(|| format!("invalid matching code {code:?}"))
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Count { outer, inner, crosscuts, total, circular, necklace, json } => {
            let query = match (outer, inner, total, circular, necklace) {
                (Some(outer), Some(inner), ..) => Query::Ann { outer, inner, crosscuts },
                (_, _, Some(endpoints), ..) => Query::Total { endpoints },
                (_, _, _, Some(n), _) => Query::Circular { n },
                (_, _, _, _, Some(v)) => match v[..] {
                    [black, white] => Query::Necklace { black, white },
                    _ => bail!("--necklace takes exactly two counts, N1,N2"),
                },
                _ => bail!("no count requested"),
            };
            count(query, json)?;
        }
        Command::Table { kind, n, k, max, zeros, format } => {
            let table = match kind {
                TableArg::Maximal => CountTable::maximal(n, k),
                TableArg::Ann => CountTable::ann(max.unwrap_or(12)),
                TableArg::Total => CountTable::total(max.unwrap_or(13)),
            };
            match format {
                Format::Csv => print!("{}", table.to_csv(zeros)),
                Format::Json => print!("{}", table.to_json()),
            }
        }
        Command::Enumerate { n, m, k, max_endpoints } => {
            let budget = EnumerationBudget {
                max_outer_endpoints: max_endpoints,
                max_inner_endpoints: max_endpoints,
                ..EnumerationBudget::default()
            };
            let codes: BTreeSet<String> = enumerate_matchings(n, m, k, &budget)?.iter().map(|x| x.code()).collect();
            println!("# annular-codes v{CODE_VERSION} n={n} m={m} k={k}");
            for code in &codes {
                println!("{code}");
            }
            println!("total {}", codes.len());
        }
        Command::Verify { max_endpoints, sequences } => {
            let report = verify(&VerifyConfig { max_endpoints, sequences });
            print!("{}", report.render());
            if !report.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Render { code, output } => {
            let svg = render_svg(&parse_code(&code)?);
            match output {
                Some(path) => std::fs::write(&path, svg).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{svg}"),
            }
        }
        Command::Bijection { code, to } => {
            let matching = parse_code(&code)?;
            match to {
                BijectionArg::Necklace => println!("{}", to_necklace(&matching)?),
                BijectionArg::Linear => println!("{}", to_linear(&matching)?),
                BijectionArg::Reflect => println!("{}", reflect(&matching)),
                BijectionArg::Split => {
                    let (a, b) = split(&matching);
                    println!("{a}\n{b}");
                }
                BijectionArg::Graph => {
                    let graph = to_graph(&matching)?;
                    if from_graph(&graph)? != matching {
                        return Err(anyhow!("graph does not decode back to {matching}"));
                    }
                    println!("{}", serde_json::to_string_pretty(&graph)?);
                }
            }
        }
        Command::Fetch { id, terms } => {
            let fetched = fetch_sequence(&id, &FetchOptions::from_env())?;
            if let Some(warning) = &fetched.warning {
                eprintln!("warning: {warning}");
            }
            let seq = fetched.sequence;
            let shown: Vec<String> = seq.values.iter().take(terms).map(ToString::to_string).collect();
            println!("{} offset {} ({:?}): {}", seq.id, seq.offset, seq.source, shown.join(","));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

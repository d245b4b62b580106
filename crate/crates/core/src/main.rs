use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use skewbrace::aut::automorphism_group;
use skewbrace::bench::run_benchmark;
use skewbrace::brace::verify_skew_brace;
use skewbrace::catalog::{parse_catalog, write_catalog, CatalogBuilder, CatalogSource};
use skewbrace::conjecture::{run_conjecture_check, CheckOutcome, Shape};
use skewbrace::count::{count_braces, CountOptions, Strategy};
use skewbrace::error::{Error, Result};
use skewbrace::export::{brace_of_record, braces_jsonl, parse_brace_records, report_csv, report_json, write_file};
use skewbrace::group::abelian_groups_of_order;

#[derive(Parser)]
#[command(name = "skewbrace", version, about = "Enumerate skew braces of small order")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Lambda,
    Conjugacy,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Count braces of one order over every additive group.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        abelian_only: bool,
        /// Restrict the search to a Sylow subgroup of the holomorph (prime powers only).
        #[arg(long)]
        sylow: bool,
        #[arg(long, value_enum, default_value = "lambda")]
        strategy: StrategyArg,
        /// Extra .gcat files; may be repeated.
        #[arg(long)]
        catalog: Vec<PathBuf>,
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Write one JSON line per brace class to this file.
        #[arg(long)]
        store_braces: Option<PathBuf>,
    },
    /// Compare enumerated counts with the closed-form predictions.
    Conjectures {
        /// Inclusive range `A..B`.
        #[arg(long)]
        range: String,
        #[arg(long, default_value_t = 200)]
        max_order: usize,
        #[arg(long)]
        catalog: Vec<PathBuf>,
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Time both classification strategies and compare their counts.
    Benchmark {
        #[arg(long, value_delimiter = ',', required = true)]
        orders: Vec<usize>,
        #[arg(long)]
        catalog: Vec<PathBuf>,
    },
    /// Check every record of a brace database against the brace axiom.
    CheckBrace {
        file: PathBuf,
        #[arg(long)]
        catalog: Vec<PathBuf>,
    },
    /// Print the automorphism group of a catalog group.
    Aut {
        #[arg(long)]
        group: String,
        #[arg(long)]
        catalog: Vec<PathBuf>,
    },
    /// Construct complete group lists and write them as .gcat files.
    BuildCatalog {
        #[arg(long, value_delimiter = ',', required = true)]
        orders: Vec<usize>,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
}

const PARTIAL: u8 = 2;

fn load_source(files: &[PathBuf]) -> Result<CatalogSource> {
    let mut src = CatalogSource::bundled();
    for f in files {
        src = src.with_catalog(parse_catalog(&std::fs::read_to_string(f)?)?);
    }
    Ok(src)
}

fn parse_range(s: &str) -> Option<(usize, usize)> {
    let (a, b) = s.split_once("..")?;
    let b = b.strip_prefix('=').unwrap_or(b);
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Enumerate {
            order,
            abelian_only,
            sylow,
            strategy,
            catalog,
            threads,
            out,
            format,
            store_braces,
        } => {
            if order == 0 {
                return Err(Error::OrderTooLarge(0));
            }
            let src = load_source(&catalog)?;
            let mut opts = CountOptions {
                abelian_only,
                sylow,
                strategy: match strategy {
                    StrategyArg::Lambda => Strategy::Lambda,
                    StrategyArg::Conjugacy => Strategy::Conjugacy,
                },
                threads,
                collect_braces: store_braces.is_some(),
                ..Default::default()
            };
            let mut code = 0;
            let report = match count_braces(order, &src, &opts) {
                Err(Error::IncompleteCatalog(n)) => {
                    eprintln!("no complete catalog for order {n}; counting left braces only");
                    opts.abelian_only = true;
                    code = PARTIAL;
                    count_braces(order, &src, &opts)?
                }
                r => r?,
            };
            for s in &report.skipped {
                eprintln!("skipped {}: {}", s.id_label, s.reason);
                code = PARTIAL;
            }
            let text = match format {
                Format::Csv => report_csv(&report),
                Format::Json => report_json(&report),
            };
            match out {
                Some(p) => write_file(&p, &text)?,
                None => print!("{text}"),
            }
            if let Some(p) = store_braces {
                write_file(&p, &braces_jsonl(&report.braces, Some(&src)))?;
            }
            Ok(code)
        }
        Command::Conjectures {
            range,
            max_order,
            catalog,
            threads,
        } => {
            let (a, b) = parse_range(&range).ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("bad range `{range}`, expected A..B"),
            })?;
            let src = load_source(&catalog)?;
            let opts = CountOptions {
                threads,
                ..Default::default()
            };
            let lines = run_conjecture_check(a.max(1)..=b, max_order, &src, &opts);
            let mut code = 0;
            for l in &lines {
                println!("{l}");
                match l.outcome {
                    CheckOutcome::Disagree => code = 1,
                    CheckOutcome::Skipped(_) if l.predicted.shape != Shape::None && code == 0 => code = PARTIAL,
                    _ => {}
                }
            }
            Ok(code)
        }
        Command::Benchmark { orders, catalog } => {
            let src = load_source(&catalog)?;
            let rows = run_benchmark(&orders, &src)?;
            let mut code = 0;
            for r in &rows {
                println!("{r}");
                if !r.agree() {
                    code = 1;
                } else if r.conjugacy.is_none() && code == 0 {
                    code = PARTIAL;
                }
            }
            Ok(code)
        }
        Command::CheckBrace { file, catalog } => {
            let src = load_source(&catalog)?;
            let records = parse_brace_records(&std::fs::read_to_string(&file)?)?;
            let mut code = 0;
            for (i, rec) in records.iter().enumerate() {
                let ok = brace_of_record(rec, &src).map(|b| verify_skew_brace(&b));
                match ok {
                    Ok(true) => println!("record {}: ok", i + 1),
                    Ok(false) => {
                        println!("record {}: FAILS the brace axiom", i + 1);
                        code = 1;
                    }
                    Err(e) => {
                        println!("record {}: {e}", i + 1);
                        code = 1;
                    }
                }
            }
            Ok(code)
        }
        Command::Aut { group, catalog } => {
            let src = load_source(&catalog)?;
            let n: usize = group
                .split('/')
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::UnknownGroup(group.clone()))?;
            let g = src
                .catalog_for(n)
                .entries(n)
                .iter()
                .find(|g| g.id_label() == group)
                .cloned()
                .or_else(|| abelian_groups_of_order(n).into_iter().find(|g| g.id_label() == group))
                .ok_or_else(|| Error::UnknownGroup(group.clone()))?;
            let aut = automorphism_group(&g)?;
            println!("group {} of order {}", g.id_label(), g.order());
            println!("|Aut| = {}", aut.order());
            for i in aut.generator_indices() {
                let imgs: Vec<String> = aut.element(i).images().iter().map(u32::to_string).collect();
                println!("generator: [{}]", imgs.join(" "));
            }
            Ok(0)
        }
        Command::BuildCatalog { orders, out_dir } => {
            let mut builder = CatalogBuilder::new();
            std::fs::create_dir_all(&out_dir)?;
            for n in orders {
                let groups = builder.groups(n)?;
                let text = write_catalog(groups.iter().map(|c| (&c.group, Some(c.description.as_str()))));
                let path = out_dir.join(format!("order_{n}.gcat"));
                write_file(&path, &text)?;
                println!("{}: {} groups", path.display(), groups.len());
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

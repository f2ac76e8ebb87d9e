mod bench;
mod render;
mod verify;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use covdeg::{
    canonical_equal, cov, cov_is_reduct, degree_table_with_cap, gamma_map, neighborhoods,
    parity_pair_with_cap, parse_covering, parse_degree_table, reconstruct_covering_with_cap,
    reduct, relation, render_covering, render_degree_table, repeat_degree, same_p, same_p_witness,
    same_relation, Covering, DegreeTable, Error, Universe,
};

/// Success, or an affirmative verdict.
const EXIT_OK: u8 = 0;
/// A negative verdict or a failed property: the input was understood.
const EXIT_NEGATIVE: u8 = 1;
/// Unusable input: unreadable files, parse errors, caps, bad flags.
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(
    name = "covdeg",
    version,
    about = "Coverings of finite universes: neighborhoods, reducts, repeat-degree tables, and exact table inversion"
)]
struct Cli {
    /// Emit structured JSON instead of the text rendering
    #[arg(long, global = true)]
    json: bool,

    /// Subset-lattice budget for full-table operations, as a power of two
    #[arg(
        long,
        global = true,
        env = "COVDEG_LATTICE_CAP",
        default_value_t = covdeg::DEFAULT_LATTICE_CAP
    )]
    lattice_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the neighborhood of every element
    Neigh { file: PathBuf },
    /// Print the covering of neighborhoods
    Cov { file: PathBuf },
    /// Print the induced relation as ordered pairs
    Relation { file: PathBuf },
    /// Print each element's gamma block, `-` where none exists
    Gamma { file: PathBuf },
    /// Drop reducible blocks and compare against the covering of neighborhoods
    Reduct { file: PathBuf },
    /// Repeat degrees: a table over a size window, or one subset
    Degree {
        file: PathBuf,
        /// Comma-separated subset sizes, e.g. 1,2 (default: every size)
        #[arg(long, value_delimiter = ',', conflicts_with = "set")]
        window: Option<Vec<usize>>,
        /// One subset as space-separated element names ("" for the empty set)
        #[arg(long)]
        set: Option<String>,
    },
    /// Compare two coverings by relation, covering of neighborhoods, and P sets
    Same { left: PathBuf, right: PathBuf },
    /// Is the covering of neighborhoods already the reduct?
    CovIsReduct { file: PathBuf },
    /// Rebuild the covering a degree table came from
    Invert { file: PathBuf },
    /// The unique covering pair sharing every degree below the top size
    ParityPair {
        /// Universe size (at least 2)
        #[arg(short)]
        n: usize,
        /// Comma-separated element names (default x1..xN)
        #[arg(long, value_delimiter = ',')]
        names: Option<Vec<String>>,
    },
    /// Run the invariant suite on a covering and seeded mutations of it
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// How many mutated coverings to check alongside the input
        #[arg(long, default_value_t = 20)]
        iters: usize,
    },
    /// Time full-lattice inversion and the fast transform against the naive one
    Bench {
        /// Universe size for the inversion timing
        #[arg(long, default_value_t = 20)]
        n: usize,
        /// Universe size for the naive-transform comparison
        #[arg(long, default_value_t = 12)]
        naive_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    let json = cli.json;
    let cap = cli.lattice_cap;
    match cli.command {
        Command::Neigh { file } => {
            let c = load_covering(&file)?;
            let map = neighborhoods(&c);
            if json {
                print!("{}", render::json_line(render::neighborhoods_json(&map)));
            } else {
                print!("{}", render::neighborhoods_text(&map));
            }
            Ok(EXIT_OK)
        }
        Command::Cov { file } => {
            let c = load_covering(&file)?;
            let covered = cov(&c);
            if json {
                print!("{}", render::json_line(render::covering_json(&covered)));
            } else {
                print!("{}", render_covering(&covered));
            }
            Ok(EXIT_OK)
        }
        Command::Relation { file } => {
            let c = load_covering(&file)?;
            let edges = relation(&c);
            if json {
                print!("{}", render::json_line(render::relation_json(&edges)));
            } else {
                print!("{}", render::relation_text(&edges));
            }
            Ok(EXIT_OK)
        }
        Command::Gamma { file } => {
            let c = load_covering(&file)?;
            let map = gamma_map(&c);
            if json {
                print!("{}", render::json_line(render::gamma_json(&map)));
            } else {
                print!("{}", render::gamma_text(&map));
            }
            Ok(EXIT_OK)
        }
        Command::Reduct { file } => {
            let c = load_covering(&file)?;
            let report = reduct(&c);
            if json {
                print!("{}", render::json_line(render::reduct_json(&report)));
            } else {
                print!("{}", render::reduct_text(&report));
            }
            Ok(EXIT_OK)
        }
        Command::Degree { file, window, set } => {
            let c = load_covering(&file)?;
            if let Some(raw) = set {
                let names: Vec<&str> = raw.split_whitespace().collect();
                let block = c
                    .universe()
                    .block_from_names(names)
                    .map_err(|e| in_file(&file, &e))?;
                let value = repeat_degree(&c, block).map_err(|e| in_file(&file, &e))?;
                if json {
                    let value = json!({
                        "set": c.universe().block_names(block),
                        "degree": value,
                    });
                    print!("{}", render::json_line(value));
                } else {
                    println!("{value}");
                }
                return Ok(EXIT_OK);
            }
            let full: Vec<usize> = (0..=c.universe().len()).collect();
            let window = window.unwrap_or(full);
            let table = degree_table_with_cap(&c, &window, cap).map_err(|e| in_file(&file, &e))?;
            if json {
                print!("{}", render::json_line(render::degree_table_json(&table)));
            } else {
                print!("{}", render_degree_table(&table));
            }
            Ok(EXIT_OK)
        }
        Command::Same { left, right } => {
            let c1 = load_covering(&left)?;
            let c2 = load_covering(&right)?;
            let by_relation = same_relation(&c1, &c2).map_err(|e| e.to_string())?;
            let by_p = same_p(&c1, &c2).map_err(|e| e.to_string())?;
            let by_cov = canonical_equal(&cov(&c1), &cov(&c2)).map_err(|e| e.to_string())?;
            let witness = same_p_witness(&c1, &c2).map_err(|e| e.to_string())?;
            if json {
                let value = render::same_json(by_relation, by_cov, by_p, witness.as_deref());
                print!("{}", render::json_line(value));
            } else {
                print!(
                    "{}",
                    render::same_text(by_relation, by_cov, by_p, witness.as_deref())
                );
            }
            Ok(if by_relation && by_cov && by_p {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::CovIsReduct { file } => {
            let c = load_covering(&file)?;
            let (flag, witness) = cov_is_reduct(&c);
            if json {
                let value = json!({ "cov_is_reduct": flag, "witness": witness });
                print!("{}", render::json_line(value));
            } else if flag {
                println!("yes");
            } else {
                println!("no (witness: {})", witness.as_deref().unwrap_or("?"));
            }
            Ok(if flag { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Invert { file } => {
            let table = load_table(&file)?;
            match reconstruct_covering_with_cap(&table, cap) {
                Ok(c) => {
                    if json {
                        print!("{}", render::json_line(render::covering_json(&c)));
                    } else {
                        print!("{}", render_covering(&c));
                    }
                    Ok(EXIT_OK)
                }
                Err(e @ Error::InconsistentTable { .. }) => {
                    if json {
                        let value =
                            json!({ "error": "inconsistent-table", "detail": e.to_string() });
                        print!("{}", render::json_line(value));
                    } else {
                        println!("{e}");
                    }
                    Ok(EXIT_NEGATIVE)
                }
                Err(Error::NotACovering { missing, recovered }) => {
                    let rows: Vec<Vec<String>> = recovered
                        .as_deref()
                        .map(|f| f.block_name_lists())
                        .unwrap_or_default();
                    if json {
                        let value = json!({
                            "error": "not-a-covering",
                            "missing": missing,
                            "recovered": rows,
                        });
                        print!("{}", render::json_line(value));
                    } else {
                        println!(
                            "no covering has this degree table: union misses {}",
                            missing.join(" ")
                        );
                        println!("recovered family:");
                        for row in rows {
                            println!("{}", row.join(" "));
                        }
                    }
                    Ok(EXIT_NEGATIVE)
                }
                Err(e) => Err(in_file(&file, &e)),
            }
        }
        Command::ParityPair { n, names } => {
            let universe = match names {
                Some(list) => {
                    if list.len() != n {
                        return Err(format!("expected {n} names, got {}", list.len()));
                    }
                    Universe::new(list).map_err(|e| e.to_string())?
                }
                None => Universe::indexed(n).map_err(|e| e.to_string())?,
            };
            let pair = parity_pair_with_cap(universe, cap).map_err(|e| e.to_string())?;
            if json {
                print!("{}", render::json_line(render::parity_json(&pair)));
            } else {
                print!("{}", render::parity_text(&pair));
            }
            Ok(EXIT_OK)
        }
        Command::Verify { file, seed, iters } => {
            let c = load_covering(&file)?;
            let outcomes = verify::run_suite(&c, seed, iters, cap);
            let failed = print_verify(&outcomes, seed, iters, json);
            Ok(if failed == 0 { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Bench { n, naive_n, seed } => {
            let report = bench::run(n, naive_n, seed, cap).map_err(|e| e.to_string())?;
            if json {
                print!("{}", render::json_line(bench::report_json(&report)));
            } else {
                print!("{}", bench::report_text(&report));
            }
            Ok(EXIT_OK)
        }
    }
}

fn print_verify(outcomes: &[verify::Outcome], seed: u64, iters: usize, json: bool) -> usize {
    let failed = outcomes
        .iter()
        .filter(|o| matches!(o.status, verify::Status::Fail(_)))
        .count();
    if json {
        let results: Vec<_> = outcomes
            .iter()
            .map(|o| {
                let (status, detail) = match &o.status {
                    verify::Status::Pass => ("pass", None),
                    verify::Status::Skip(why) => ("skip", Some(why.clone())),
                    verify::Status::Fail(why) => ("fail", Some(why.clone())),
                };
                json!({ "property": o.name, "status": status, "detail": detail })
            })
            .collect();
        let value = json!({
            "seed": seed,
            "iterations": iters,
            "results": results,
            "failed": failed,
        });
        print!("{}", render::json_line(value));
        return failed;
    }
    println!("seed: {seed}");
    println!("iterations: {iters}");
    for o in outcomes {
        match &o.status {
            verify::Status::Pass => println!("ok   {}", o.name),
            verify::Status::Skip(why) => println!("skip {} ({why})", o.name),
            verify::Status::Fail(why) => println!("FAIL {}: {why}", o.name),
        }
    }
    let passed = outcomes
        .iter()
        .filter(|o| matches!(o.status, verify::Status::Pass))
        .count();
    println!(
        "{passed} passed, {} skipped, {failed} failed",
        outcomes.len() - passed - failed
    );
    failed
}

fn load_covering(path: &Path) -> Result<Covering, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_covering(&text).map_err(|e| in_file(path, &e))
}

fn load_table(path: &Path) -> Result<DegreeTable, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_degree_table(&text).map_err(|e| in_file(path, &e))
}

fn in_file(path: &Path, e: &Error) -> String {
    format!("{}: {e}", path.display())
}

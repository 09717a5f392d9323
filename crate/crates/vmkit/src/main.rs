use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context as _, Result};
use clap::{Parser, Subcommand, ValueEnum};

use vmkit_core::coloring::{chromatic_number, clique_number};
use vmkit_core::graph::{contains_induced, generate, parse_graph6, write_graph6, Graph};
use vmkit_core::matroid::{branch_depth, has_matroid_minor_with, BinaryMatroid, MatroidMinorSearch};
use vmkit_core::par::Execution;
use vmkit_core::verify::{self, Budget, RunReport, SUITES};
use vmkit_core::vertex_minor::{minor_search, orbit_with, MinorSearch, Relation, Script, DEFAULT_MEMBER_LIMIT};
use vmkit_core::width::{linear_rank_width, rank_depth, rank_width, ConnectivitySystem, Decomposition};

/// Exit status for a definite negative answer or a failed check.
const EXIT_NO: u8 = 1;
/// Exit status when a search hit its budget before deciding.
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(name = "vmkit", version, about = "Cut-rank, vertex-minors, rank-depth and binary matroids on small graphs")]
struct Cli {
    /// Run batches on the calling thread only.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a graph from a named family.
    Gen {
        family: String,
        params: Vec<usize>,
        /// Print only the graph6 string.
        #[arg(long)]
        g6: bool,
    },
    /// Compute a width parameter, a cut-rank, or a coloring number.
    Compute {
        what: Quantity,
        #[arg(long)]
        graph: String,
        /// Comma-separated vertex labels (cutrank only).
        #[arg(long)]
        set: Option<String>,
    },
    /// Test containment of a pattern graph.
    Contains {
        relation: Containment,
        #[arg(long)]
        graph: String,
        #[arg(long)]
        pattern: String,
        /// Maximum number of isomorphism classes explored in the orbit.
        #[arg(long, default_value_t = DEFAULT_MEMBER_LIMIT)]
        budget: usize,
    },
    /// List the isomorphism classes reachable by local complementation or pivoting.
    Orbit {
        relation: OrbitKind,
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = DEFAULT_MEMBER_LIMIT)]
        limit: usize,
        /// Also print a script reaching each member.
        #[arg(long)]
        scripts: bool,
    },
    /// Binary matroid queries on a representation file.
    Matroid {
        what: MatroidQuery,
        #[arg(long)]
        rep: PathBuf,
        /// Comma-separated basis elements (fundamental only).
        #[arg(long)]
        basis: Option<String>,
        /// Representation file of the minor to look for (minor only).
        #[arg(long)]
        pattern: Option<PathBuf>,
    },
    /// Run verification suites.
    Verify {
        /// Suite name or `all`.
        suite: Option<String>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Orbit member limit for the minor searches.
        #[arg(long, default_value_t = DEFAULT_MEMBER_LIMIT)]
        budget: usize,
        /// Random instances per sampling suite.
        #[arg(long, default_value_t = 500)]
        random: usize,
        /// Write the machine-readable report here (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Keep wall-clock times in the JSON report.
        #[arg(long)]
        timings: bool,
        /// List the registered suites and exit.
        #[arg(long)]
        list: bool,
    },
    /// Replay an operation script and optionally compare with a pattern.
    Replay {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        script: PathBuf,
        #[arg(long)]
        pattern: Option<String>,
    },
    /// Re-check a decomposition given in nested-parenthesis form.
    CheckWitness {
        #[arg(long)]
        graph: String,
        /// File holding the decomposition text, or the text itself.
        #[arg(long)]
        decomposition: String,
        /// Fail unless both width and radius are at most this value.
        #[arg(long)]
        depth: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Quantity {
    Rankdepth,
    Rankwidth,
    Lrw,
    Cutrank,
    Chi,
    Omega,
}

#[derive(Clone, Copy, ValueEnum)]
enum Containment {
    Vm,
    Pm,
    Induced,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrbitKind {
    Local,
    Pivot,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatroidQuery {
    Branchdepth,
    Fundamental,
    Minor,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    let exec = if cli.sequential { Execution::Sequential } else { Execution::default() };
    match run(cli.command, exec) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var("VMKIT_THREADS") else {
        return Ok(());
    };
    let threads: usize = value.trim().parse().with_context(|| format!("VMKIT_THREADS must be a positive integer, got `{value}`"))?;
    if threads == 0 {
        bail!("VMKIT_THREADS must be at least 1");
    }
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    Ok(())
}

fn graph_arg(text: &str) -> Result<Graph> {
    parse_graph6(text.trim()).with_context(|| format!("invalid graph6 string `{text}`"))
}

fn list_arg(text: &str) -> Vec<String> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::to_string).collect()
}

fn read(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn print_graph(g: &Graph) {
    println!("graph6 {}", write_graph6(g));
    println!("vertices {}", g.n());
    println!("edges {}", g.edge_count());
    for (u, v) in g.edges() {
        println!("  {} {}", g.label(u), g.label(v));
    }
}

fn run(command: Command, exec: Execution) -> Result<u8> {
    match command {
        Command::Gen { family, params, g6 } => {
            let g = generate(&family, &params)?;
            if g6 {
                println!("{}", write_graph6(&g));
            } else {
                print_graph(&g);
            }
            Ok(0)
        }
        Command::Compute { what, graph, set } => compute(what, &graph_arg(&graph)?, set.as_deref()),
        Command::Contains { relation, graph, pattern, budget } => contains(relation, &graph_arg(&graph)?, &graph_arg(&pattern)?, budget, exec),
        Command::Orbit { relation, graph, limit, scripts } => {
            let rel = match relation {
                OrbitKind::Local => Relation::Local,
                OrbitKind::Pivot => Relation::Pivot,
            };
            let orbit = orbit_with(&graph_arg(&graph)?, rel, limit, exec)?;
            println!("relation {rel}");
            println!("classes {}", orbit.len());
            println!("exhausted {}", orbit.is_exhausted());
            for i in 0..orbit.len() {
                println!("{i} {}", write_graph6(&orbit.member(i)));
                if scripts {
                    for line in orbit.script_to(i).to_string().lines() {
                        println!("    {line}");
                    }
                }
            }
            Ok(if orbit.is_exhausted() { 0 } else { EXIT_INCONCLUSIVE })
        }
        Command::Matroid { what, rep, basis, pattern } => matroid(what, &rep, basis.as_deref(), pattern.as_ref(), exec),
        Command::Verify { suite, seed, budget, random, json, timings, list } => {
            if list {
                for s in SUITES {
                    println!("{s}");
                }
                return Ok(0);
            }
            let Some(suite) = suite else {
                bail!("name a suite or `all` (see --list)");
            };
            let budget = Budget {
                seed,
                member_limit: budget,
                random_instances: random,
            };
            run_verify(&suite, budget, json, timings, exec)
        }
        Command::Replay { graph, script, pattern } => {
            let g = graph_arg(&graph)?;
            let script: Script = read(&script)?.parse()?;
            let h = script.replay(&g)?;
            println!("result");
            print_graph(&h);
            if let Some(p) = pattern {
                let matches = vmkit_core::graph::is_isomorphic(&h, &graph_arg(&p)?)?;
                println!("matches pattern {matches}");
                return Ok(if matches { 0 } else { EXIT_NO });
            }
            Ok(0)
        }
        Command::CheckWitness { graph, decomposition, depth } => {
            let g = graph_arg(&graph)?;
            let text = match fs::read_to_string(&decomposition) {
                Ok(t) => t,
                Err(_) => decomposition,
            };
            let d = Decomposition::parse(&text, g.labels())?;
            let width = d.width(&ConnectivitySystem::cut_rank(&g))?;
            let radius = d.radius();
            println!("width {width}");
            println!("radius {radius}");
            println!("rank-depth at most {}", width.max(radius));
            Ok(match depth {
                Some(k) if width.max(radius) > k => EXIT_NO,
                _ => 0,
            })
        }
    }
}

fn compute(what: Quantity, g: &Graph, set: Option<&str>) -> Result<u8> {
    match what {
        Quantity::Rankdepth => {
            let r = rank_depth(g)?;
            println!("rank-depth {}", r.value);
            if let Some(d) = r.witness {
                println!("witness {}", d.to_text(g.labels()));
            }
        }
        Quantity::Rankwidth => {
            let r = rank_width(g)?;
            println!("rank-width {}", r.value);
            if let Some(d) = r.witness {
                println!("witness {}", d.tree().to_text(g.labels()));
            }
        }
        Quantity::Lrw => {
            let r = linear_rank_width(g)?;
            println!("linear rank-width {}", r.value);
            let order: Vec<&str> = r.ordering.iter().map(|&v| g.label(v)).collect();
            println!("ordering {}", order.join(","));
        }
        Quantity::Cutrank => {
            let Some(set) = set else {
                bail!("cutrank needs --set");
            };
            println!("cut-rank {}", g.cut_rank(&list_arg(set))?);
        }
        Quantity::Chi => println!("chromatic number {}", chromatic_number(g)?),
        Quantity::Omega => println!("clique number {}", clique_number(g)?),
    }
    Ok(0)
}

fn contains(relation: Containment, g: &Graph, h: &Graph, budget: usize, exec: Execution) -> Result<u8> {
    let rel = match relation {
        Containment::Induced => {
            return Ok(match contains_induced(g, h) {
                Some(set) => {
                    println!("found");
                    print!("{}", Script(vec![vmkit_core::vertex_minor::Op::Keep(g.labels_of(set))]));
                    0
                }
                None => {
                    println!("not found");
                    EXIT_NO
                }
            });
        }
        Containment::Vm => Relation::Local,
        Containment::Pm => Relation::Pivot,
    };
    Ok(match minor_search(g, h, rel, budget, exec)? {
        MinorSearch::Found(script) => {
            println!("found");
            print!("{script}");
            0
        }
        MinorSearch::NotFound => {
            println!("not found (orbit exhausted)");
            EXIT_NO
        }
        MinorSearch::Inconclusive { explored } => {
            println!("inconclusive after {explored} classes; raise --budget");
            EXIT_INCONCLUSIVE
        }
    })
}

fn matroid(what: MatroidQuery, rep: &PathBuf, basis: Option<&str>, pattern: Option<&PathBuf>, exec: Execution) -> Result<u8> {
    let m: BinaryMatroid = read(rep)?.parse()?;
    match what {
        MatroidQuery::Branchdepth => {
            let r = branch_depth(&m)?;
            println!("branch-depth {}", r.value);
            if let Some(d) = r.witness {
                println!("witness {}", d.to_text(m.labels()));
            }
            Ok(0)
        }
        MatroidQuery::Fundamental => {
            let b = match basis {
                Some(list) => m.set_from_labels(&list_arg(list))?,
                None => m.some_basis(),
            };
            let fg = m.fundamental_graph(b)?;
            println!("basis {}", fg.labels_of(b).join(","));
            print_graph(&fg);
            Ok(0)
        }
        MatroidQuery::Minor => {
            let Some(pattern) = pattern else {
                bail!("minor needs --pattern <file>");
            };
            let n: BinaryMatroid = read(pattern)?.parse()?;
            Ok(match has_matroid_minor_with(&m, &n, exec)? {
                MatroidMinorSearch::Found { delete, contract } => {
                    println!("found");
                    println!("delete {}", delete.join(","));
                    println!("contract {}", contract.join(","));
                    0
                }
                MatroidMinorSearch::NotFound => {
                    println!("not found");
                    EXIT_NO
                }
                MatroidMinorSearch::Inconclusive { reason } => {
                    println!("inconclusive: {reason}");
                    EXIT_INCONCLUSIVE
                }
            })
        }
    }
}

fn run_verify(suite: &str, budget: Budget, json: Option<PathBuf>, timings: bool, exec: Execution) -> Result<u8> {
    let ctx = verify::Context::new(budget, exec);
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let to_stdout = json.as_deref().is_some_and(|p| p.as_os_str() == "-");
    let mut reports = Vec::new();
    for name in names {
        let r = verify::run_suite(name, &ctx)?;
        if !to_stdout {
            let status = if r.failed > 0 {
                "FAIL"
            } else if r.inconclusive > 0 {
                "INCONCLUSIVE"
            } else {
                "PASS"
            };
            println!(
                "{status:<12} {:<20} instances {:>6}  passed {:>6}  failed {:>3}  inconclusive {:>3}  {} ms",
                r.suite,
                r.instances,
                r.passed,
                r.failed,
                r.inconclusive,
                r.wall_time_ms.unwrap_or(0)
            );
            for f in r.failures.iter().chain(&r.inconclusives) {
                println!("    {}: {}", f.instance, f.detail);
                for line in f.witness.lines() {
                    println!("      | {line}");
                }
            }
        }
        reports.push(r);
    }
    let mut report = RunReport::new(budget, reports);
    if !timings {
        report.strip_timings();
    }
    if let Some(path) = json {
        let mut text = report.to_json();
        text.push('\n');
        if to_stdout {
            print!("{text}");
        } else {
            fs::write(&path, text).with_context(|| format!("cannot write {}", path.display()))?;
        }
    }
    let failed = report.suites.iter().any(|s| s.failed > 0);
    let inconclusive = report.suites.iter().any(|s| s.inconclusive > 0);
    Ok(if failed {
        EXIT_NO
    } else if inconclusive {
        EXIT_INCONCLUSIVE
    } else {
        0
    })
}

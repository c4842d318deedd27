//! Command line front end for the e.d.s. solver.
//!
//! Exit codes: 0 solution found / valid / pattern-free, 1 no solution /
//! invalid / pattern found, 2 bad input, 3 not bipartite, 4 strict mode
//! rejected the instance (the spider witness is printed).

mod format;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eds_core::driver::{self, SolveTrace, TraceOutcome, TraceStep};
use eds_core::generate::{self, Family};
use eds_core::oracle;
use eds_core::pattern::{enumerate_induced_paths, find_induced_c6, find_s115};
use eds_core::{domination, DriverConfig, SolveError, Strictness};
use eds_core::{BipartiteGraph, EdsSolution, GraphError};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "eds", version, about = "Efficient dominating sets on bipartite graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Find an e.d.s. with the reduction driver.
    Solve {
        file: PathBuf,
        /// Reject instances containing an induced S(1,1,5).
        #[arg(long, conflicts_with = "permissive")]
        strict: bool,
        /// Accept any bipartite instance (the default).
        #[arg(long)]
        permissive: bool,
        /// Print the per-component decision log as '#' lines after the result.
        #[arg(long)]
        trace: bool,
    },
    /// Find the lexicographically smallest e.d.s. by exact search.
    Oracle { file: PathBuf },
    /// Check a candidate solution.
    Verify {
        file: PathBuf,
        /// Candidate vertex ids, space-separated.
        #[arg(long)]
        set: String,
    },
    /// Search for one induced pattern occurrence.
    Detect {
        file: PathBuf,
        #[arg(long, value_enum)]
        pattern: Pattern,
    },
    /// Write a generated instance to a file.
    Gen(GenArgs),
    /// Cross-check the driver against the oracle on seeded instances.
    Compare {
        /// Number of instances.
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        /// Upper bound on the vertex count per instance.
        #[arg(long, default_value_t = 24)]
        max_n: usize,
    },
    /// Time the driver on planted instances; tab-separated table to stdout.
    Bench {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Pattern {
    #[value(name = "s115")]
    S115,
    #[value(name = "p8")]
    P8,
    #[value(name = "c6")]
    C6,
}

#[derive(Args)]
struct GenArgs {
    /// path, cycle, star, complete, spider115, random, s115free or planted.
    #[arg(long)]
    kind: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; the planted kind also writes FILE.solution.
    #[arg(long)]
    out: PathBuf,
    /// Vertex count, for the named families.
    #[arg(long)]
    n: Option<usize>,
    /// Left side size, for random and s115free.
    #[arg(long)]
    nx: Option<usize>,
    /// Right side size, for random and s115free.
    #[arg(long)]
    ny: Option<usize>,
    /// Edge probability, for random and s115free.
    #[arg(long)]
    p: Option<f64>,
    /// Rejection-sampling attempts, for s115free.
    #[arg(long, default_value_t = 1000)]
    tries: u32,
    /// Planted solution size.
    #[arg(long)]
    nd: Option<usize>,
    /// Extra vertices hung on each side of a planted solution.
    #[arg(long, default_value_t = 0)]
    spread: usize,
    /// Noise edge probability between planted extras.
    #[arg(long, default_value_t = 0.0)]
    extra_p: f64,
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe (`eds bench | head`) like other line
    // tools instead of panicking on the failed write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    ExitCode::from(run(Cli::parse()))
}

fn run(cli: Cli) -> u8 {
    match cli.cmd {
        Cmd::Solve { file, strict, permissive: _, trace } => cmd_solve(&file, strict, trace),
        Cmd::Oracle { file } => cmd_oracle(&file),
        Cmd::Verify { file, set } => cmd_verify(&file, &set),
        Cmd::Detect { file, pattern } => cmd_detect(&file, pattern),
        Cmd::Gen(args) => cmd_gen(&args),
        Cmd::Compare { count, seed, max_n } => cmd_compare(count, seed, max_n),
        Cmd::Bench { seed } => cmd_bench(seed),
    }
}

fn load(path: &Path) -> Result<BipartiteGraph, u8> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return Err(2);
        }
    };
    match format::parse_graph(&text) {
        Ok(g) => Ok(g),
        Err(format::ParseError::Graph(e @ GraphError::NotBipartite { .. })) => {
            eprintln!("error: {e}");
            Err(3)
        }
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            Err(2)
        }
    }
}

fn print_result(sol: &Option<EdsSolution>) -> u8 {
    match sol {
        Some(d) => {
            println!("EDS {}", d.len());
            println!("{d}");
            0
        }
        None => {
            println!("NONE");
            1
        }
    }
}

fn join(ids: &[usize]) -> String {
    ids.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_solve(file: &Path, strict: bool, trace: bool) -> u8 {
    let g = match load(file) {
        Ok(g) => g,
        Err(c) => return c,
    };
    let cfg = DriverConfig {
        strictness: if strict { Strictness::Strict } else { Strictness::Permissive },
        ..DriverConfig::default()
    };
    match driver::solve_with(&g, &cfg) {
        Ok(out) => {
            let code = print_result(&out.solution);
            if trace {
                for t in &out.traces {
                    print_trace(t);
                }
            }
            code
        }
        Err(SolveError::NotS115Free { witness }) => {
            println!("{}", join(&witness.vertices));
            eprintln!("error: instance contains an induced S(1,1,5)");
            4
        }
    }
}

fn print_trace(t: &SolveTrace) {
    let mut head = format!("# component {} branch {:?}", t.component, t.branch);
    if let Some(c) = &t.candidate {
        head.push_str(&format!(" candidate {}", join(c)));
    }
    println!("{head}");
    for step in &t.steps {
        match step {
            TraceStep::Seed { forced, excluded } => {
                println!("# seed{}", decisions(forced, excluded));
            }
            TraceStep::Rule(f) => {
                println!("# rule {}{}", f.rule, decisions(&f.forced, &f.excluded));
            }
            TraceStep::Alternative { rule, index, forced, excluded } => {
                println!("# alt {rule}/{index}{}", decisions(forced, excluded));
            }
        }
    }
    for w in &t.assertion_warnings {
        println!("# warn {} {}", w.id, join(&w.witness));
    }
    match &t.outcome {
        TraceOutcome::Solved { solution, .. } => println!("# solved {}", join(solution)),
        TraceOutcome::Exhausted => println!("# exhausted"),
    }
}

fn decisions(forced: &[usize], excluded: &[usize]) -> String {
    let mut s = String::new();
    if !forced.is_empty() {
        s.push_str(" force ");
        s.push_str(&join(forced));
    }
    if !excluded.is_empty() {
        s.push_str(" exclude ");
        s.push_str(&join(excluded));
    }
    s
}

fn cmd_oracle(file: &Path) -> u8 {
    let g = match load(file) {
        Ok(g) => g,
        Err(c) => return c,
    };
    print_result(&oracle::solve(&g, None).solution)
}

fn cmd_verify(file: &Path, set: &str) -> u8 {
    let g = match load(file) {
        Ok(g) => g,
        Err(c) => return c,
    };
    let ids = match format::parse_id_list(set) {
        Some(ids) => ids,
        None => {
            eprintln!("error: --set must be space-separated vertex ids");
            return 2;
        }
    };
    if let Some(&v) = ids.iter().find(|&&v| v >= g.n()) {
        eprintln!("error: vertex {v} out of range for n={}", g.n());
        return 2;
    }
    let report = domination::verify(&g, &EdsSolution::new(ids));
    match report.violation {
        None => {
            println!("VALID");
            0
        }
        Some(v) => {
            println!("INVALID v={} count={}", v.vertex, v.count);
            1
        }
    }
}

fn cmd_detect(file: &Path, pattern: Pattern) -> u8 {
    let g = match load(file) {
        Ok(g) => g,
        Err(c) => return c,
    };
    let witness = match pattern {
        Pattern::S115 => find_s115(&g).map(|w| w.vertices),
        Pattern::P8 => {
            enumerate_induced_paths(&g, 8, Some(1)).into_iter().next().map(|w| w.vertices)
        }
        Pattern::C6 => find_induced_c6(&g).into_iter().next().map(|w| w.vertices),
    };
    match witness {
        Some(vs) => {
            println!("{}", join(&vs));
            1
        }
        None => {
            println!("FREE");
            0
        }
    }
}

fn cmd_gen(a: &GenArgs) -> u8 {
    let (g, planted) = match build_instance(a) {
        Ok(pair) => pair,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    if let Err(e) = std::fs::write(&a.out, format::write_graph(&g)) {
        eprintln!("error: {}: {e}", a.out.display());
        return 2;
    }
    if let Some(d) = planted {
        let mut side = a.out.as_os_str().to_owned();
        side.push(".solution");
        if let Err(e) = std::fs::write(&side, format!("{d}\n")) {
            eprintln!("error: {e}");
            return 2;
        }
    }
    0
}

fn build_instance(a: &GenArgs) -> Result<(BipartiteGraph, Option<EdsSolution>), String> {
    if let Some(family) = Family::parse(&a.kind) {
        let n = match family {
            // the spider has a fixed shape, so its size argument is optional
            Family::Spider115 => a.n.unwrap_or(8),
            _ => a.n.ok_or("--n is required for the named families")?,
        };
        let g = generate::gen_family(family, n).map_err(|e| e.to_string())?;
        return Ok((g, None));
    }
    match a.kind.as_str() {
        "random" => {
            let (nx, ny, p) = sides(a)?;
            Ok((generate::gen_random(nx, ny, p, a.seed), None))
        }
        "s115free" => {
            let (nx, ny, p) = sides(a)?;
            let s = generate::gen_s115_free(nx, ny, p, a.seed, a.tries)
                .map_err(|e| e.to_string())?;
            Ok((s.graph, None))
        }
        "planted" => {
            let nd = a.nd.ok_or("--nd is required for planted instances")?;
            let inst = generate::gen_planted(nd, a.spread, a.extra_p, a.seed)
                .map_err(|e| e.to_string())?;
            Ok((inst.graph, Some(inst.solution)))
        }
        other => Err(format!(
            "unknown kind {other:?}, expected path, cycle, star, complete, \
             spider115, random, s115free or planted"
        )),
    }
}

fn sides(a: &GenArgs) -> Result<(usize, usize, f64), String> {
    let nx = a.nx.ok_or("--nx is required")?;
    let ny = a.ny.ok_or("--ny is required")?;
    let p = a.p.ok_or("--p is required")?;
    Ok((nx, ny, p))
}

fn cmd_compare(count: usize, seed: u64, max_n: usize) -> u8 {
    if max_n < 2 {
        eprintln!("error: --max-n must be at least 2");
        return 2;
    }
    let mut sched = ChaCha8Rng::seed_from_u64(seed);
    // denser instances are kept smaller so rejection sampling stays cheap
    let ps = [0.1, 0.2, 0.3];
    let caps = [max_n, (max_n * 3 / 4).max(2), (max_n * 7 / 12).max(2)];
    let mut agree = 0usize;
    let mut valid = 0usize;
    for _ in 0..count {
        let pi = (sched.next_u64() % 3) as usize;
        let (p, cap) = (ps[pi], caps[pi]);
        let nx = 1 + (sched.next_u64() as usize) % (cap / 2);
        let ny = 1 + (sched.next_u64() as usize) % (cap - nx);
        let inst_seed = sched.next_u64();
        let sample = match generate::gen_s115_free(nx, ny, p, inst_seed, 1000) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: {e}");
                return 2;
            }
        };
        let rep = driver::solve_compare(&sample.graph);
        if rep.agree {
            agree += 1;
        }
        if rep.driver_valid && rep.oracle_valid {
            valid += 1;
        }
    }
    println!("instances {count}");
    println!("agree {agree}");
    println!("valid {valid}");
    let ok = agree == count && valid == count;
    println!("result {}", if ok { "PASS" } else { "FAIL" });
    if ok {
        0
    } else {
        1
    }
}

fn cmd_bench(seed: u64) -> u8 {
    println!("n\tm\tms\tk");
    for &size in &[20usize, 40, 80, 120, 160, 200] {
        let nd = size / 10;
        let spread = (size - nd) / 2;
        let inst = match generate::gen_planted(nd, spread, 0.05, seed ^ size as u64) {
            Ok(i) => i,
            Err(e) => {
                eprintln!("error: {e}");
                return 2;
            }
        };
        let t0 = Instant::now();
        let out = driver::solve(&inst.graph).expect("permissive mode accepts any instance");
        let ms = t0.elapsed().as_secs_f64() * 1e3;
        let k = out.solution.as_ref().map_or(0, |d| d.len());
        println!("{}\t{}\t{ms:.3}\t{k}", inst.graph.n(), inst.graph.edge_count());
    }
    0
}

//! `birkhoff`: solve and verify dual certificates, export LPs, run the
//! explicit constructions and the brute-force oracles.
//!
//! Exit codes: 0 success or positive optimum, 1 nonpositive optimum,
//! 2 invalid input, 3 verification failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use birkhoff_core::birkhoff::{self, PermSet};
use birkhoff_core::characters::mn_character;
use birkhoff_core::exactq::{format_rational, parse_rational, Rational};
use birkhoff_core::lp::{self, DualCertificate, DualMode, LpParams, Verdict};
use birkhoff_core::partitions::Partition;
use birkhoff_core::simplex::{PivotRule, SolveOptions, Status};
use clap::{Args, Parser, Subcommand, ValueEnum};
use log::info;

#[derive(Parser)]
#[command(
    name = "birkhoff",
    version,
    about = "Exact LP certificates and constructions for the Birkhoff graph"
)]
struct Cli {
    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build, modify and solve the dual; write its certificate.
    DualSolve(DualSolveArgs),
    /// Re-check a certificate from scratch.
    DualVerify { file: PathBuf },
    /// Write one of the LP families in text form.
    LpExport(LpExportArgs),
    /// Build an independent set or a coloring.
    Construct(ConstructArgs),
    /// Brute-force values on small symmetric groups.
    Brute(BruteArgs),
    /// Print the character value χ^λ(μ).
    Char {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Pivot {
    Bland,
    Lex,
    Dantzig,
}

#[derive(Args)]
struct DualSolveArgs {
    /// Largest number of fixed points tracked (even).
    #[arg(long)]
    l0: usize,
    /// Largest leg kept as a variable (odd).
    #[arg(long)]
    k0: usize,
    /// Defaults to 2(l0 + k0).
    #[arg(long)]
    m0: Option<usize>,
    /// Rational written p/q.
    #[arg(long)]
    c: String,
    /// Merge the large-leg restrictions of each belly size into one row.
    #[arg(long)]
    joint_large_leg: bool,
    /// Terms `ht<=h` or bellies like `1,1`, separated by `;`, or `default`.
    #[arg(long)]
    fragment: Option<String>,
    /// Round the y coefficients onto a grid of 2^-bits.
    #[arg(long)]
    round_bits: Option<u32>,
    /// Comma-separated even m whose y_m is pinned to zero.
    #[arg(long, value_delimiter = ',')]
    drop_y: Vec<usize>,
    #[arg(long, value_enum, default_value = "bland")]
    pivot: Pivot,
    /// Consecutive degenerate pivots before `lex` falls back to Bland's rule.
    #[arg(long, default_value_t = 50)]
    lex_fallback: usize,
    #[arg(long)]
    max_pivots: Option<usize>,
    /// Certificate path (JSON).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    Dual,
}

#[derive(Args)]
struct LpExportArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Odd n, required by families 1 and 2.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    l0: usize,
    #[arg(long, default_value_t = 1)]
    k0: usize,
    #[arg(long)]
    m0: Option<usize>,
    #[arg(long, default_value = "3/2")]
    c: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Indep,
    IndepPow2,
    Coloring,
    ColoringPow2,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    kind: Kind,
    /// Exhaustive check, run for n <= 7.
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["alpha", "edges", "parseval"]))]
struct BruteArgs {
    #[arg(long)]
    n: usize,
    /// Exact independence number.
    #[arg(long)]
    alpha: bool,
    /// Ordered pairs of the set whose quotient is an (n - ell)-cycle.
    #[arg(long, value_name = "SETFILE", requires = "ell")]
    edges: Option<PathBuf>,
    /// Both sides of the edge-count identity for the set.
    #[arg(long, value_name = "SETFILE", requires = "ell")]
    parseval: Option<PathBuf>,
    /// Number of fixed points of the quotient.
    #[arg(long)]
    ell: Option<usize>,
}

/// Largest `n` accepted by `brute --edges` and `brute --parseval`.
const SET_LIMIT: usize = 8;

enum Failure {
    Input(String),
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Verification(_) => 3,
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn rational(text: &str) -> Result<Rational, Failure> {
    parse_rational(text).map_err(|e| Failure::Input(format!("{e} (write rationals as p/q)")))
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn dual_solve(a: DualSolveArgs) -> Result<u8, Failure> {
    let mut params = LpParams::new(a.l0, a.k0, rational(&a.c)?);
    if let Some(m0) = a.m0 {
        params = params.with_m0(m0);
    }
    params.validate_limit().map_err(input)?;
    let mode = DualMode {
        joint_large_leg: a.joint_large_leg,
        fragment: a.fragment.clone(),
        round_bits: a.round_bits,
        dropped_y: a.drop_y.clone(),
    };
    mode.heuristics().map_err(input)?;
    let rule = match a.pivot {
        Pivot::Bland => PivotRule::Bland,
        Pivot::Lex => PivotRule::DantzigLex {
            fallback_after: a.lex_fallback,
        },
        Pivot::Dantzig => PivotRule::DantzigNaive,
    };
    let opts = SolveOptions {
        rule,
        max_pivots: a.max_pivots,
    };
    let s = lp::solve_dual(&params, &mode, &opts).map_err(input)?;
    info!("{} solve rounds, {} pivots", s.rounds, s.pivot_count);
    println!("status: {:?}", s.status);
    println!("rounds: {}", s.rounds);
    println!("restriction-rows: {}", s.restriction_rows);
    println!("pivots: {}", s.pivot_count);
    let Some(cert) = s.certificate else {
        return Ok(1);
    };
    println!("objective: {}", format_rational(&cert.objective));
    if let Some(path) = &a.out {
        write_or_print(Some(path), &cert.to_json())?;
        println!("certificate: {}", path.display());
    }
    Ok(
        if s.status == Status::Optimal && cert.objective > Rational::default() {
            0
        } else {
            1
        },
    )
}

fn dual_verify(file: &Path) -> Result<u8, Failure> {
    let cert = DualCertificate::from_json(&read(file)?).map_err(input)?;
    match lp::verify_dual_certificate(&cert) {
        Ok(Verdict::Positive) => {
            println!("verdict: positive");
            println!("objective: {}", format_rational(&cert.objective));
            Ok(0)
        }
        Ok(Verdict::Nonpositive) => {
            println!("verdict: nonpositive");
            Ok(1)
        }
        Ok(Verdict::Infeasible(tag)) => {
            println!("verdict: infeasible {tag}");
            Ok(3)
        }
        Err(lp::CertError::ObjectiveMismatch { stored, recomputed }) => Err(Failure::Verification(
            format!("objective-mismatch: stored {stored}, recomputed {recomputed}"),
        )),
        Err(e) => Err(input(e)),
    }
}

fn lp_export(a: LpExportArgs) -> Result<u8, Failure> {
    let mut params = LpParams::new(a.l0, a.k0, rational(&a.c)?);
    if let Some(m0) = a.m0 {
        params = params.with_m0(m0);
    }
    if let Some(n) = a.n {
        params = params.with_n(n);
    }
    let program = match a.family {
        Family::One => lp::build_lp1(&params),
        Family::Two => lp::build_lp2(&params),
        Family::Three => lp::build_lp3(&params),
        Family::Dual => lp::build_dual(&params),
    }
    .map_err(input)?;
    info!(
        "{} variables, {} constraints",
        program.num_vars(),
        program.constraints().len()
    );
    write_or_print(a.out.as_deref(), &program.to_text())?;
    Ok(0)
}

fn construct(a: ConstructArgs) -> Result<u8, Failure> {
    let improved = matches!(a.kind, Kind::IndepPow2 | Kind::ColoringPow2);
    let check = a.verify && a.n <= 7;
    let mut ok = true;
    match a.kind {
        Kind::Indep | Kind::IndepPow2 => {
            let set = birkhoff::construct_independent(a.n, improved).map_err(input)?;
            println!("size: {}", set.len());
            println!(
                "closed-form: {}",
                format_rational(&birkhoff::closed_form_size(a.n, improved).map_err(input)?)
            );
            if check {
                ok = birkhoff::verify_independent(&set) && (!improved || set.is_sign_homogeneous());
            }
            if let Some(path) = &a.out {
                write_or_print(Some(path), &set.to_text())?;
            }
        }
        Kind::Coloring | Kind::ColoringPow2 => {
            let f = birkhoff::construct_coloring(a.n, improved).map_err(input)?;
            println!("palette: {}", f.palette());
            println!(
                "closed-form: {}",
                format_rational(&birkhoff::closed_form_palette(a.n, improved).map_err(input)?)
            );
            if check {
                ok = birkhoff::verify_coloring(&f, improved);
            }
            if let Some(path) = &a.out {
                write_or_print(Some(path), &f.to_text())?;
            }
        }
    }
    match (a.verify, check) {
        (false, _) => {}
        (true, false) => println!("verified: skipped (n > 7)"),
        (true, true) => println!("verified: {ok}"),
    }
    Ok(if ok { 0 } else { 3 })
}

fn load_set(path: &Path, n: usize) -> Result<PermSet, Failure> {
    let set = PermSet::from_text(&read(path)?).map_err(input)?;
    if set.n() != n {
        return Err(Failure::Input(format!(
            "{} holds permutations of {} points, not {n}",
            path.display(),
            set.n()
        )));
    }
    if n > SET_LIMIT {
        return Err(Failure::Input(format!(
            "n = {n} exceeds the limit {SET_LIMIT}"
        )));
    }
    Ok(set)
}

fn brute(a: BruteArgs) -> Result<u8, Failure> {
    if a.alpha {
        let (alpha, _) = birkhoff::brute_alpha(a.n).map_err(input)?;
        println!("alpha: {alpha}");
        return Ok(0);
    }
    let ell = a.ell.expect("clap requires --ell");
    if let Some(path) = &a.edges {
        let set = load_set(path, a.n)?;
        println!(
            "edges: {}",
            birkhoff::count_edges_ell(&set, ell).map_err(input)?
        );
        return Ok(0);
    }
    let path = a.parseval.as_ref().expect("clap requires one mode");
    let set = load_set(path, a.n)?;
    let sides = birkhoff::parseval_sides(&set, ell).map_err(input)?;
    println!("edges: {}", sides.edges);
    println!("spectral: {}", format_rational(&sides.spectral));
    println!("equal: {}", sides.holds());
    Ok(if sides.holds() { 0 } else { 3 })
}

fn character(lambda: &str, mu: &str) -> Result<u8, Failure> {
    let lambda: Partition = lambda.parse().map_err(input)?;
    let mu: Partition = mu.parse().map_err(input)?;
    println!("{}", mn_character(&lambda, &mu).map_err(input)?);
    Ok(0)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::DualSolve(a) => dual_solve(a),
        Command::DualVerify { file } => dual_verify(&file),
        Command::LpExport(a) => lp_export(a),
        Command::Construct(a) => construct(a),
        Command::Brute(a) => brute(a),
        Command::Char { lambda, mu } => character(&lambda, &mu),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            match &f {
                Failure::Input(m) => eprintln!("error: {m}"),
                Failure::Verification(m) => eprintln!("verification failed: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}

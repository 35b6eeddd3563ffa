use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use symcycle::hypercube::{decompose, q_set, q_size, tope_from_negative_set, GroundSize, SubsetMask};
use symcycle::smirnov::{
    composition_count, gf_coefficient, smirnov_count_closed, smirnov_count_dp, smirnov_enumerate,
    Letter, LetterCounts,
};
use symcycle::statistics::{
    brute_force_pairs_with, count_pairs_case, count_pairs_case_structural,
    count_topes_with_negpart_and_qsize, count_topes_with_qsize, BoundaryCase, EnumerationOptions,
    PairKey, PairQuery, PairTally,
};
use symcycle::verify::{self, Suite, VerifyOptions};
use symcycle::Error;

mod output;

use output::{
    emit, CheckDetail, CheckRow, CompositionRow, DecomposeRow, Format, PairRow, SmirnovRow,
    TopeRow, TopeSplitRow,
};

#[derive(Parser)]
#[command(name = "symcycle", version, about = "Tope decompositions along the symmetric cycle, and exact counts")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    format: Format,

    /// Worker threads for exhaustive enumerations.
    #[arg(long, default_value_t = 1, global = true)]
    threads: usize,

    /// Lift the default enumeration caps (2^t: t <= 16, 3^t: t <= 14).
    #[arg(long, global = true)]
    unsafe_cap: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose the tope with the given negative part.
    Decompose {
        #[arg(long)]
        t: u32,
        /// Comma-separated negative elements, 1-based.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        neg: Vec<usize>,
    },
    /// Closed-form and enumerative counts.
    #[command(subcommand)]
    Count(CountCommand),
    /// Run exhaustive verification suites.
    Verify {
        #[arg(long)]
        t_max: u32,
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Subcommand)]
enum CountCommand {
    /// Topes by |Q(T,R)|, optionally split by |T^-|.
    Topes {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        j: Option<u32>,
        #[arg(long)]
        ell: Option<u32>,
    },
    /// Ordered pairs of disjoint subsets; omitted ell values range over all odd values up to t.
    Pairs(PairArgs),
    /// Smirnov words with given endpoints and letter counts.
    Smirnov {
        #[arg(long)]
        start: String,
        #[arg(long)]
        end: String,
        /// theta,alpha,beta counts.
        #[arg(long, value_delimiter = ',', required = true)]
        counts: Vec<u32>,
        #[arg(long, value_enum, default_value_t = SmirnovMethod::Dp)]
        method: SmirnovMethod,
    },
    /// Compositions of n into m positive parts.
    Compositions {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        n: i64,
    },
}

#[derive(Args)]
struct PairArgs {
    #[arg(long)]
    t: u32,
    #[arg(long)]
    jp: u32,
    #[arg(long)]
    jpp: u32,
    #[arg(long)]
    ellp: Option<u32>,
    #[arg(long)]
    ellpp: Option<u32>,
    #[arg(long)]
    ell: Option<u32>,
    /// i..ix, or all for every case plus their sum.
    #[arg(long, default_value = "all")]
    case: String,
    #[arg(long, value_enum, default_value_t = PairMethod::Closed)]
    method: PairMethod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PairMethod {
    Closed,
    Structural,
    Brute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SmirnovMethod {
    Dp,
    Closed,
    Enumerate,
    Gf,
}

impl SmirnovMethod {
    fn name(self) -> &'static str {
        match self {
            SmirnovMethod::Dp => "dp",
            SmirnovMethod::Closed => "closed",
            SmirnovMethod::Enumerate => "enumerate",
            SmirnovMethod::Gf => "gf",
        }
    }
}

enum Failure {
    Library(Error),
    Io(io::Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Library(e @ Error::ResourceLimit { .. })) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Library(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let out = io::stdout().lock();
    match &cli.command {
        Command::Decompose { t, neg } => cmd_decompose(cli, *t, neg, out),
        Command::Count(CountCommand::Topes { t, j, ell }) => cmd_topes(cli, *t, *j, *ell, out),
        Command::Count(CountCommand::Pairs(args)) => cmd_pairs(cli, args, out),
        Command::Count(CountCommand::Smirnov {
            start,
            end,
            counts,
            method,
        }) => cmd_smirnov(cli, start, end, counts, *method, out),
        Command::Count(CountCommand::Compositions { m, n }) => {
            let count = composition_count(*m, *n)?;
            let rows = [CompositionRow {
                m: *m,
                n: *n,
                count: count.to_string(),
            }];
            Ok(emit(&rows, cli.format, out)?)
        }
        Command::Verify { t_max, suite } => cmd_verify(cli, *t_max, suite, out),
    }
}

fn cmd_decompose(cli: &Cli, t: u32, neg: &[usize], out: impl Write) -> Outcome {
    let g = GroundSize::new(t)?;
    let a = SubsetMask::from_elements(neg.iter().copied())?;
    let tope = tope_from_negative_set(g, a)?;
    let rows = [DecomposeRow {
        t,
        neg: a.to_string(),
        tope: tope.to_string(),
        x: decompose(&tope).to_string(),
        ell: q_size(&tope),
        q: q_set(&tope).to_string(),
    }];
    Ok(emit(&rows, cli.format, out)?)
}

fn odd_values(given: Option<u32>, t: u32) -> Vec<u32> {
    match given {
        Some(v) => vec![v],
        None => (1..=t).step_by(2).collect(),
    }
}

fn cmd_topes(cli: &Cli, t: u32, j: Option<u32>, ell: Option<u32>, out: impl Write) -> Outcome {
    let g = GroundSize::new(t)?;
    let ells = odd_values(ell, t);
    match j {
        None => {
            let rows = ells
                .into_iter()
                .map(|ell| {
                    Ok(TopeRow {
                        t,
                        ell,
                        count: count_topes_with_qsize(g, ell)?.to_string(),
                    })
                })
                .collect::<Result<Vec<_>, Error>>()?;
            Ok(emit(&rows, cli.format, out)?)
        }
        Some(j) => {
            let rows = ells
                .into_iter()
                .map(|ell| {
                    Ok(TopeSplitRow {
                        t,
                        j,
                        ell,
                        count: count_topes_with_negpart_and_qsize(g, j, ell)?.to_string(),
                    })
                })
                .collect::<Result<Vec<_>, Error>>()?;
            Ok(emit(&rows, cli.format, out)?)
        }
    }
}

fn cmd_pairs(cli: &Cli, args: &PairArgs, out: impl Write) -> Outcome {
    let g = GroundSize::new(args.t)?;
    let cases: Vec<BoundaryCase> = if args.case == "all" {
        BoundaryCase::ALL.to_vec()
    } else {
        vec![args.case.parse()?]
    };
    let tally: Option<PairTally> = match args.method {
        PairMethod::Brute => {
            let mut opts = EnumerationOptions::pairs().with_threads(cli.threads);
            if cli.unsafe_cap {
                opts = opts.with_cap(64);
            }
            Some(brute_force_pairs_with(g, opts)?)
        }
        _ => None,
    };

    let mut rows = Vec::new();
    for lp in odd_values(args.ellp, args.t) {
        for lpp in odd_values(args.ellpp, args.t) {
            for l in odd_values(args.ell, args.t) {
                let q = PairQuery::new(g, args.jp, args.jpp, lp, lpp, l)?;
                let mut total: u128 = 0;
                for &case in &cases {
                    let count = match (args.method, &tally) {
                        (PairMethod::Closed, _) => count_pairs_case(&q, case)?,
                        (PairMethod::Structural, _) => count_pairs_case_structural(&q, case)?,
                        (PairMethod::Brute, Some(tally)) => {
                            let key = PairKey {
                                j_prime: args.jp,
                                j_double_prime: args.jpp,
                                ell_prime: lp,
                                ell_double_prime: lpp,
                                ell: l,
                                case,
                            };
                            tally.get(&key).copied().unwrap_or(0)
                        }
                        (PairMethod::Brute, None) => unreachable!(),
                    };
                    total = total
                        .checked_add(count)
                        .ok_or(Error::Overflow("case total"))?;
                    rows.push(pair_row(&q, case.roman(), count));
                }
                if cases.len() > 1 {
                    rows.push(pair_row(&q, "all", total));
                }
            }
        }
    }
    Ok(emit(&rows, cli.format, out)?)
}

fn pair_row(q: &PairQuery, case: &str, count: u128) -> PairRow {
    PairRow {
        t: q.t.get(),
        j_prime: q.j_prime,
        j_double_prime: q.j_double_prime,
        ell_prime: q.ell_prime,
        ell_double_prime: q.ell_double_prime,
        ell: q.ell,
        case: case.to_string(),
        count: count.to_string(),
    }
}

fn cmd_smirnov(
    cli: &Cli,
    start: &str,
    end: &str,
    counts: &[u32],
    method: SmirnovMethod,
    out: impl Write,
) -> Outcome {
    let (s, e): (Letter, Letter) = (start.parse()?, end.parse()?);
    if counts.len() != 3 {
        return Err(Error::Domain(format!("--counts takes theta,alpha,beta; got {} values", counts.len())).into());
    }
    let n = LetterCounts::new(counts[0], counts[1], counts[2]);
    let count = match method {
        SmirnovMethod::Dp => smirnov_count_dp(s, e, n)?,
        SmirnovMethod::Closed => smirnov_count_closed(s, e, n)?,
        SmirnovMethod::Enumerate => smirnov_enumerate(n)?
            .iter()
            .filter(|w| w.first() == s && w.last() == e)
            .count() as u128,
        SmirnovMethod::Gf => {
            if s != Letter::Theta {
                return Err(Error::Domain("the gf method counts words starting with theta".into()).into());
            }
            gf_coefficient(e, n.theta as usize, n.alpha as usize, n.beta as usize)?
        }
    };
    let rows = [SmirnovRow {
        start: s.name(),
        end: e.name(),
        theta: n.theta,
        alpha: n.alpha,
        beta: n.beta,
        method: method.name(),
        count: count.to_string(),
    }];
    Ok(emit(&rows, cli.format, out)?)
}

fn cmd_verify(cli: &Cli, t_max: u32, suite: &str, out: impl Write) -> Outcome {
    let suite: Suite = suite.parse()?;
    let opts = VerifyOptions {
        threads: cli.threads.max(1),
        unsafe_cap: cli.unsafe_cap,
    };
    let reports = verify::run(suite, t_max, opts)?;
    let mut err = io::stderr().lock();
    for r in &reports {
        writeln!(
            err,
            "{} suite, t = 3..{}: {} passed, {} failed",
            r.suite,
            r.t_max,
            r.passed(),
            r.failed()
        )?;
        for note in &r.notes {
            writeln!(err, "  {note}")?;
        }
    }
    match cli.format {
        Format::Csv => {
            let rows: Vec<CheckRow> = reports
                .iter()
                .flat_map(|r| {
                    r.checks.iter().map(|c| CheckRow {
                        suite: r.suite.name(),
                        check: c.name,
                        passed: c.passed,
                        failed: c.failed,
                    })
                })
                .collect();
            emit(&rows, cli.format, out)?;
            for r in &reports {
                for c in r.checks.iter().filter(|c| !c.ok()) {
                    writeln!(err, "counterexamples for {} / {}:", r.suite, c.name)?;
                    for line in &c.counterexamples {
                        writeln!(err, "  {line}")?;
                    }
                }
            }
        }
        Format::Json => {
            let rows: Vec<CheckDetail> = reports
                .iter()
                .flat_map(|r| {
                    r.checks.iter().map(|c| CheckDetail {
                        suite: r.suite.name(),
                        check: c.name,
                        passed: c.passed,
                        failed: c.failed,
                        counterexamples: c.counterexamples.clone(),
                    })
                })
                .collect();
            emit(&rows, cli.format, out)?;
        }
    }
    if reports.iter().all(|r| r.ok()) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

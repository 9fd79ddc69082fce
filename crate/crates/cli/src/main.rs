//! `knash`: generate games, run the approximation algorithms, certify
//! constant-support lower bounds and run sampling experiments.
//!
//! Exit codes: 0 success (bound met, game certified); 1 usage error; 2 I/O or
//! parse error; 3 bound violated or game not certified; 4 work limit refused.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use knash::format::{game_from_str, game_to_string, payoff_checksum};
use knash::lower_bound::{certification_cost, DEFAULT_WORK_LIMIT};
use knash::sampling::{enumeration_cost, run_sampling_trials, SamplingSummary};
use knash::solvers::Relaxed;
use knash::{
    certify_lower_bound, delta_bound, dmp_two_player, fixture_matching_pennies, fixture_parity,
    gen_uniform_payoffs, gen_wta, recursive_lift, regret_report, required_samples, staircase,
    CertifyOptions, Error, Game, MixedProfile, Seed, TwoPlayerSolver, TOLERANCE,
};

use report::{Cell, Report};

#[derive(Debug, Parser)]
#[command(name = "knash", version, about = "Approximate Nash equilibria for k-player games")]
struct Cli {
    /// Output layout for reports.
    #[arg(long, value_enum, global = true, default_value_t = Format::Csv)]
    format: Format,

    /// Write the game (gen) or the report (other commands) here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GameKind {
    Wta,
    Uniform,
    Parity,
    MatchingPennies,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Staircase,
    Lift,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a game file.
    Gen {
        #[arg(value_enum)]
        kind: GameKind,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Solve a game and compare its regret with the guarantee.
    Solve {
        #[arg(value_enum)]
        method: Method,
        /// Game file. `lift` without a game only prints the bound for `--k`.
        game: Option<PathBuf>,
        /// Comma-separated staircase anchors, one per player but the last.
        #[arg(long, value_delimiter = ',')]
        anchors: Option<Vec<usize>>,
        /// Guarantee promised by the 2-player base solver of `lift`.
        #[arg(long, default_value_t = 0.5)]
        base_guarantee: f64,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Check the universal-winner property up to a total support budget.
    Certify {
        game: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = DEFAULT_WORK_LIMIT)]
        work_limit: f64,
    },
    /// Repeated sampled support reduction of the uniform profile.
    Sample {
        game: PathBuf,
        #[arg(long)]
        eps: f64,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Samples per trial; defaults to the count that guarantees `eps`.
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Size of the brute-force search over sampled supports.
    Cost {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        eps: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok = 0,
    Usage = 1,
    Io = 2,
    Violated = 3,
    WorkLimit = 4,
}

#[derive(Debug)]
struct Failure {
    status: Status,
    error: anyhow::Error,
}

impl Failure {
    fn usage(error: impl Into<anyhow::Error>) -> Self {
        Failure {
            status: Status::Usage,
            error: error.into(),
        }
    }

    fn io(error: impl Into<anyhow::Error>) -> Self {
        Failure {
            status: Status::Io,
            error: error.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        let status = match error {
            Error::WorkLimitExceeded { .. } => Status::WorkLimit,
            _ => Status::Usage,
        };
        Failure {
            status,
            error: error.into(),
        }
    }
}

type CmdResult = Result<(Report, Status), Failure>;

fn load_game(path: &Path) -> Result<Game, Failure> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(Failure::io)?;
    game_from_str(&text)
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(Failure::io)
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text)
        .with_context(|| format!("writing {}", path.display()))
        .map_err(Failure::io)
}

fn join_probs(probs: &[f64]) -> String {
    probs.iter().map(|&p| report::sig12(p)).collect::<Vec<_>>().join(";")
}

fn kind_name(kind: GameKind) -> &'static str {
    match kind {
        GameKind::Wta => "wta",
        GameKind::Uniform => "uniform",
        GameKind::Parity => "parity",
        GameKind::MatchingPennies => "matching-pennies",
    }
}

fn cmd_gen(kind: GameKind, k: usize, n: usize, seed: u64, out: Option<&Path>) -> CmdResult {
    let game = match kind {
        GameKind::Wta => gen_wta(k, n, Seed(seed))?,
        GameKind::Uniform => gen_uniform_payoffs(k, n, Seed(seed))?,
        GameKind::Parity => fixture_parity(k)?,
        GameKind::MatchingPennies => fixture_matching_pennies(),
    };
    let text = game_to_string(&game);
    let mut report = Report::new("gen");
    report
        .config("kind", kind_name(kind))
        .config("k", game.num_players())
        .config("n", game.num_strategies());
    if matches!(kind, GameKind::Wta | GameKind::Uniform) {
        report.config("seed", seed);
    }
    match out {
        Some(path) => {
            write_file(path, &text)?;
            report.config("out", path.display().to_string());
        }
        None => print!("{text}"),
    }
    report
        .summary("entries", game.payoffs().len())
        .summary("winner_takes_all", game.is_winner_takes_all())
        .summary("sha256", payoff_checksum(&game));
    Ok((report, Status::Ok))
}

fn profile_rows(report: &mut Report, game: &Game, profile: &MixedProfile) -> Result<f64, Failure> {
    let regrets = regret_report(game, profile)?;
    report.columns(&[
        "player",
        "probabilities",
        "support",
        "expected_payoff",
        "best_response",
        "best_response_value",
        "regret",
    ]);
    for (p, (s, r)) in profile.strategies().iter().zip(&regrets.players).enumerate() {
        report.row(vec![
            p.into(),
            join_probs(s.probs()).into(),
            s.support_size().into(),
            r.expected_payoff.into(),
            r.best_response.into(),
            r.best_response_value.into(),
            r.regret.into(),
        ]);
    }
    Ok(regrets.epsilon)
}

fn bound_status(report: &mut Report, epsilon: f64, bound: f64) -> Status {
    let met = epsilon <= bound + TOLERANCE;
    report
        .summary("epsilon", epsilon)
        .summary("bound", bound)
        .summary("within_bound", met);
    if met {
        Status::Ok
    } else {
        Status::Violated
    }
}

fn cmd_solve(
    method: Method,
    game_path: Option<&Path>,
    anchors: Option<&[usize]>,
    base_guarantee: f64,
    k: Option<usize>,
) -> CmdResult {
    let mut report = Report::new("solve");
    match method {
        Method::Staircase => {
            let path = game_path.ok_or_else(|| Failure::usage(anyhow!("staircase needs a game file")))?;
            let game = load_game(path)?;
            report
                .config("method", "staircase")
                .config("game", path.display().to_string());
            if let Some(a) = anchors {
                report.config("anchors", a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";"));
            }
            let (profile, trace) = staircase(&game, anchors)?;
            let epsilon = profile_rows(&mut report, &game, &profile)?;
            let bound = 1.0 - 1.0 / game.num_players() as f64;
            report.summary(
                "responses",
                trace.responses.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";"),
            );
            let status = bound_status(&mut report, epsilon, bound);
            Ok((report, status))
        }
        Method::Lift => {
            if anchors.is_some() {
                return Err(Failure::usage(anyhow!("--anchors applies to staircase only")));
            }
            report
                .config("method", "lift")
                .config("base_guarantee", base_guarantee);
            let Some(path) = game_path else {
                let k = k.ok_or_else(|| Failure::usage(anyhow!("lift needs a game file or --k")))?;
                report.config("k", k);
                report.summary("bound", delta_bound(k, base_guarantee)?);
                return Ok((report, Status::Ok));
            };
            let game = load_game(path)?;
            report.config("game", path.display().to_string());
            if let Some(k) = k {
                if k != game.num_players() {
                    return Err(Failure::usage(anyhow!(
                        "--k {k} does not match the game's {} players",
                        game.num_players()
                    )));
                }
            }
            let declared = delta_bound(game.num_players(), base_guarantee)?;
            let dmp = dmp_two_player();
            let (profile, bound) = if base_guarantee >= dmp.guarantee() {
                let base = Relaxed::new(dmp, base_guarantee)?;
                (recursive_lift(&game, &base)?, declared)
            } else {
                // No implemented 2-player solver honors a guarantee below 1/2;
                // the lift runs on the 1/2 solver and is checked against its bound.
                report.summary("declared_bound", declared);
                report.summary("base_solver_guarantee", dmp.guarantee());
                let bound = delta_bound(game.num_players(), dmp.guarantee())?;
                (recursive_lift(&game, &dmp)?, bound)
            };
            let epsilon = profile_rows(&mut report, &game, &profile)?;
            let status = bound_status(&mut report, epsilon, bound);
            Ok((report, status))
        }
    }
}

fn cmd_certify(path: &Path, t: usize, work_limit: f64) -> CmdResult {
    let game = load_game(path)?;
    let mut report = Report::new("certify");
    report
        .config("game", path.display().to_string())
        .config("t", t)
        .config("work_limit", work_limit);
    if !game.is_winner_takes_all() {
        return Err(Failure::usage(anyhow!("{} is not a winner-takes-all game", path.display())));
    }
    let estimate = certification_cost(game.num_players(), game.num_strategies(), t);
    let options = CertifyOptions {
        work_limit,
        ..Default::default()
    };
    let result = certify_lower_bound(&game, t, &options)?;
    let (num, den) = result.epsilon_floor_ratio();
    report
        .summary("certified", result.certified)
        .summary("support_sets_examined", result.support_sets_examined)
        .summary("cost_estimate", estimate);
    match &result.witness {
        Some(w) => {
            let support = w
                .support
                .per_player()
                .iter()
                .map(|set| set.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(";"))
                .collect::<Vec<_>>()
                .join("|");
            report
                .summary("witness_support", support)
                .summary("witness_player", w.player);
        }
        None => {
            report.summary(
                "statement",
                format!("no eps-NE with eps < {num}/{den} at total support <= {t}"),
            );
        }
    }
    let status = if result.certified {
        Status::Ok
    } else {
        Status::Violated
    };
    Ok((report, status))
}

fn cmd_sample(path: &Path, eps: f64, trials: usize, seed: u64, samples: Option<usize>) -> CmdResult {
    let game = load_game(path)?;
    let k = game.num_players();
    let n = game.num_strategies();
    let samples = match samples {
        Some(0) => return Err(Failure::usage(anyhow!("--samples must be at least 1"))),
        Some(s) => s,
        None => required_samples(k, n, eps)?,
    };
    let source = MixedProfile::uniform(k, n)?;
    let rows = run_sampling_trials(&game, &source, eps, samples, trials, Seed(seed), Default::default())?;
    let mut report = Report::new("sample");
    report
        .config("game", path.display().to_string())
        .config("eps", eps)
        .config("trials", trials)
        .config("seed", seed)
        .config("samples", samples)
        .config("source", "uniform")
        .columns(&[
            "trial",
            "seed",
            "samples",
            "max_deviation",
            "sampled_epsilon",
            "total_support",
            "pass_eps",
            "pass_2eps",
        ]);
    for r in &rows {
        report.row(vec![
            r.trial.into(),
            r.seed.into(),
            r.samples.into(),
            r.max_deviation.into(),
            r.sampled_epsilon.into(),
            r.sampled_total_support.into(),
            r.concentrated.into(),
            r.within_two_eps.into(),
        ]);
    }
    if let Some(summary) = SamplingSummary::from_trials(&rows) {
        report
            .summary("pass_rate_eps", summary.concentrated_rate)
            .summary("pass_rate_2eps", summary.within_two_eps_rate)
            .summary("pass_rate_both", summary.pass_rate);
    }
    Ok((report, Status::Ok))
}

fn cmd_cost(k: usize, n: usize, eps: f64) -> CmdResult {
    let cost = enumeration_cost(k, n, eps)?;
    let mut report = Report::new("cost");
    report
        .config("k", k)
        .config("n", n)
        .config("eps", eps)
        .columns(&["samples", "exponent", "log10_size"])
        .row(vec![cost.samples.into(), cost.exponent.into(), Cell::Float(cost.log10_size)]);
    Ok((report, Status::Ok))
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Gen { kind, k, n, seed } => cmd_gen(*kind, *k, *n, *seed, cli.out.as_deref()),
        Command::Solve {
            method,
            game,
            anchors,
            base_guarantee,
            k,
        } => cmd_solve(*method, game.as_deref(), anchors.as_deref(), *base_guarantee, *k),
        Command::Certify { game, t, work_limit } => cmd_certify(game, *t, *work_limit),
        Command::Sample {
            game,
            eps,
            trials,
            seed,
            samples,
        } => cmd_sample(game, *eps, *trials, *seed, *samples),
        Command::Cost { k, n, eps } => cmd_cost(*k, *n, *eps),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(Status::Usage as u8),
            };
        }
    };
    match run(&cli) {
        Ok((report, status)) => {
            let text = match cli.format {
                Format::Csv => report.to_csv(),
                Format::Text => report.to_json(),
            };
            // gen writes the game itself to --out; its report always goes to
            // stdout, or stderr when the game occupies stdout.
            match (&cli.command, &cli.out) {
                (Command::Gen { .. }, Some(_)) => print!("{text}"),
                (Command::Gen { .. }, None) => eprint!("{text}"),
                (_, Some(path)) => {
                    if let Err(f) = write_file(path, &text) {
                        eprintln!("error: {:#}", f.error);
                        return ExitCode::from(f.status as u8);
                    }
                }
                (_, None) => print!("{text}"),
            }
            ExitCode::from(status as u8)
        }
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.status as u8)
        }
    }
}

//! `setopt`: analyze, relax, check and solve polyhedral set optimization
//! problems stored in plain-text files.
//!
//! Exit codes: 0 success (solvable / certified), 1 negative verdict,
//! 2 malformed input or a violated precondition.

mod format;
mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};
use setopt::analysis::{self, SolutionCandidate, SolutionMode, SolveOutcome};
use setopt::analysis::ConeDescription;
use setopt::Problem;

use format::{ProblemFile, SolutionFile, VlpFile};

#[derive(Parser)]
#[command(name = "setopt", version, about = "Exact solvability analysis for polyhedral set optimization")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report cones, conditions and the solvability verdict.
    Analyze {
        /// Problem file, `-` for standard input.
        problem: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write the vectorial relaxation as a problem file.
    Relax {
        problem: PathBuf,
        #[arg(short = 'o', value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Certify a solution file against a problem.
    Check {
        problem: PathBuf,
        solution: PathBuf,
        /// Use the kernel-aware concept (minimality relative to C + K).
        #[arg(long)]
        modified: bool,
        #[arg(long)]
        json: bool,
    },
    /// Construct and certify a solution, or name the failing condition.
    Solve {
        problem: PathBuf,
        #[arg(long)]
        modified: bool,
        #[arg(long)]
        json: bool,
    },
    /// Embed a vector linear program as a problem file.
    FromVlp {
        vlp: PathBuf,
        #[arg(short = 'o', value_name = "FILE")]
        output: Option<PathBuf>,
    },
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).context("reading standard input")?;
        return Ok(text);
    }
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) if p != Path::new("-") => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        _ => io::stdout().write_all(text.as_bytes()).context("writing standard output"),
    }
}

fn load_problem(path: &Path) -> Result<(ProblemFile, Problem, bool)> {
    let text = read_input(path)?;
    let file = ProblemFile::parse(&text).map_err(|e| anyhow!("{}: {e}", path.display()))?;
    let (problem, default_cone) = file.problem().map_err(|e| anyhow!("{}: {e}", path.display()))?;
    Ok((file, problem, default_cone))
}

fn print_json(value: &serde_json::Value) {
    println!("{value}");
}

fn analyze(path: &Path, json: bool) -> Result<u8> {
    let (_, problem, default_cone) = load_problem(path)?;
    let report = analysis::analyze(&problem);
    if json {
        print_json(&render::report_json(&report, default_cone));
    } else {
        print!("{}", render::report_text(&report, default_cone));
    }
    Ok(if report.feasible && !report.regular {
        2
    } else if report.solvable {
        0
    } else {
        1
    })
}

fn relax(path: &Path, output: Option<&Path>) -> Result<u8> {
    let (file, problem, _) = load_problem(path)?;
    let relaxed = problem.mapping().vectorial_relaxation()?;
    let cone = file.cone.is_some().then(|| problem.cone());
    write_output(output, &ProblemFile::render(&relaxed, cone))?;
    Ok(0)
}

fn check(problem_path: &Path, solution_path: &Path, modified: bool, json: bool) -> Result<u8> {
    let (_, problem, _) = load_problem(problem_path)?;
    let text = read_input(solution_path)?;
    let solution =
        SolutionFile::parse(&text, problem.mapping().n()).map_err(|e| anyhow!("{}: {e}", solution_path.display()))?;
    let (points, directions, kernel) = solution.vectors();
    let verdict = if modified {
        let cand = SolutionCandidate::new(points, directions, kernel)?;
        analysis::check_solution_modified(&problem, &cand)
    } else {
        // the classic concept does not single out kernel directions
        let cand = SolutionCandidate::new(points, directions, kernel)?.merged();
        analysis::check_solution(&problem, &cand)
    };
    let verdict = verdict.map_err(|e| match &e {
        setopt::Error::NotInSet { vector, .. } => match solution.line_of(vector) {
            Some(line) => anyhow!("{}: line {line}: {e}", solution_path.display()),
            None => anyhow!(e),
        },
        _ => anyhow!(e),
    })?;
    let mode = if modified { "modified" } else { "classic" };
    if json {
        print_json(&render::verdict_json(&verdict, mode));
    } else {
        print!("{}", render::verdict_text(&verdict, mode));
    }
    Ok(if verdict.passed() { 0 } else { 1 })
}

fn solve(path: &Path, modified: bool, json: bool) -> Result<u8> {
    let (_, problem, _) = load_problem(path)?;
    let mode = if modified { SolutionMode::Modified } else { SolutionMode::Classic };
    let mode_name = if modified { "modified" } else { "classic" };
    if !problem.is_feasible() {
        if json {
            print_json(&serde_json::json!({ "solvable": false, "mode": mode_name, "failing": "infeasible" }));
        } else {
            println!("no solution: the problem is infeasible");
        }
        return Ok(1);
    }
    match analysis::solve(&problem, mode)? {
        SolveOutcome::Solved { candidate, verdict } => {
            if !verdict.passed() {
                return Err(anyhow!("constructed candidate failed certification: {}", verdict.failures().join("; ")));
            }
            if json {
                print_json(&serde_json::json!({
                    "solvable": true,
                    "mode": mode_name,
                    "solution": render::candidate_json(&candidate),
                    "verdict": render::verdict_json(&verdict, mode_name),
                }));
            } else {
                println!("# certified {mode_name} solution, minimality relative to {}", verdict.relative_to.minimal());
                print!(
                    "{}",
                    SolutionFile::render(candidate.points(), candidate.directions(), candidate.kernel_directions())
                );
            }
            Ok(0)
        }
        SolveOutcome::Unsolvable { failing, suggested_cone } => {
            let suggested = suggested_cone.map(|(c, regular)| (ConeDescription::of(&c), regular));
            if json {
                print_json(&serde_json::json!({
                    "solvable": false,
                    "mode": mode_name,
                    "failing": failing.as_str(),
                    "suggested_cone": suggested.as_ref().map_or(serde_json::Value::Null, |(d, regular)| serde_json::json!({
                        "cone": render::cone(d),
                        "regular": regular,
                    })),
                }));
            } else {
                println!("no solution: {failing} fails");
                if let Some((d, regular)) = suggested {
                    let status = if regular { "regular for F" } else { "not regular for F" };
                    println!("suggested cone C+K = {} ({status})", d.cone);
                }
            }
            Ok(1)
        }
    }
}

fn from_vlp(path: &Path, output: Option<&Path>) -> Result<u8> {
    let text = read_input(path)?;
    let vlp = VlpFile::parse(&text).map_err(|e| anyhow!("{}: {e}", path.display()))?;
    let problem = vlp.problem()?;
    write_output(output, &ProblemFile::render(problem.mapping(), Some(problem.cone())))?;
    Ok(0)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Analyze { problem, json } => analyze(&problem, json),
        Command::Relax { problem, output } => relax(&problem, output.as_deref()),
        Command::Check { problem, solution, modified, json } => check(&problem, &solution, modified, json),
        Command::Solve { problem, modified, json } => solve(&problem, modified, json),
        Command::FromVlp { vlp, output } => from_vlp(&vlp, output.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("setopt: error: {e:#}");
            ExitCode::from(2)
        }
    }
}

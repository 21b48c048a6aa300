use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use taquin_cli::suites::{run_suite, Params, Suite};
use taquin_cli::*;

#[derive(Parser)]
#[command(
    name = "taquin",
    version,
    about = "Jeu de taquin, rectification and their min-plus dynamics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputKind {
    /// Tableau text (`.` for inner boxes) or JSON.
    Tableau,
    /// Whitespace-separated W-matrix window.
    Matrix,
}

#[derive(Subcommand)]
enum Command {
    /// Rectify a skew tableau. Without --order the row-reading order of the
    /// inner shape is used; the result does not depend on the order, the
    /// exit rows and P' do.
    Rectify {
        /// Tableau file, `-` for stdin.
        input: PathBuf,
        /// Standard tableau of the inner shape giving the slide order.
        #[arg(long)]
        order: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Engine::Both)]
        engine: Engine,
        #[arg(long)]
        json: bool,
    },
    /// One slide from row k, computed on the W-matrix.
    Slide {
        input: PathBuf,
        #[arg(long)]
        row: usize,
        /// Draw the path with arrows over W.
        #[arg(long)]
        show_path: bool,
        #[arg(long, value_enum, default_value_t = InputKind::Tableau)]
        input_kind: InputKind,
        #[arg(long)]
        json: bool,
    },
    /// Kicker-and-ball steps on a pair of count vectors.
    Kickerball {
        /// Kickers per site, e.g. 0,2,0,2,1.
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        /// Balls per site.
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long, default_value_t = 1)]
        steps: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite and print a JSON report.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_boxes: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Rectify {
            input,
            order,
            engine,
            json,
        } => {
            let t = parse_tableau(&read_input(&input)?)?;
            let order = order
                .map(|p| read_input(&p).and_then(|s| parse_order(&s)))
                .transpose()?;
            let out = cmd_rectify(&t, order.as_ref(), engine)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                print!("{}", out.render());
            }
        }
        Command::Slide {
            input,
            row,
            show_path,
            input_kind,
            json,
        } => {
            let text = read_input(&input)?;
            let w = match input_kind {
                InputKind::Tableau => taquin::encode_w(&parse_tableau(&text)?),
                InputKind::Matrix => parse_wmatrix(&text)?,
            };
            let out = cmd_slide(&w, row)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                print!("{}", out.render(show_path));
            }
        }
        Command::Kickerball { p, w, steps, json } => {
            let frames = cmd_kickerball(&parse_vector(&p)?, &parse_vector(&w)?, steps)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&frames)?);
            } else {
                print!("{}", render_frames(&frames));
            }
        }
        Command::Verify {
            suite,
            max_boxes,
            seed,
        } => {
            let report = run_suite(suite, Params { max_boxes, seed });
            println!("{}", serde_json::to_string_pretty(&report)?);
            if !report.passed() {
                return Ok(ExitCode::FAILURE);
            }
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

//! The `rhg` command line.
//!
//! Exit codes: 0 success, 1 verification failure or differing P-sets,
//! 2 input error, 3 capacity or pixel-cap breach, 4 insufficient data.

pub mod builtin;
pub mod figures;
pub mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Ratio;

use crate::closedform::{limit_ratios, rn_p, rw_p};
use crate::error::{Error, Result};
use crate::game::{GameConstants, GameDef, MoveSet, Position, Window};
use crate::lattice::terminal_set;
use crate::solver::{
    compare_psets, convergents, export_binary, export_csv, positions_csv, solve_fast_with, solve_with,
    verify_equivalence_with, OutcomeTable, SolveConfig,
};
use builtin::{parse_game, parse_moveset, rational_form};
use figures::FIGURES;
use render::{render, ImageFormat, RenderSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;
pub const EXIT_INSUFFICIENT: i32 = 4;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Capacity { .. } | Error::PixelCap { .. } => EXIT_CAPACITY,
        Error::InsufficientData { .. } => EXIT_INSUFFICIENT,
        _ => EXIT_INPUT,
    }
}

/// Upper Wythoff P-positions of the `gdwn` game split around phi.
const GDWN_BOUNDARY: (u64, u64) = (987, 610);

#[derive(Parser, Debug)]
#[command(name = "rhg", version, about = "Two-heap subtraction games on rationally bounded regions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the terminal positions of the matrix subtraction games for Q.
    Terminals {
        #[arg(long = "Q", value_name = "P1,Q1,P2,Q2")]
        q: String,
    },
    /// Compute an outcome table.
    Solve {
        /// Builtin game name or JSON game file.
        game: String,
        #[arg(long, value_name = "N[,M]")]
        window: String,
        /// Use the line-accelerated solver (ray moves only).
        #[arg(long)]
        fast: bool,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that G_Q(M) and G(M) agree through phi_Q on a window.
    Verify {
        #[arg(long = "Q", value_name = "P1,Q1,P2,Q2")]
        q: String,
        /// nim, wythoff, gdwn, random[:seed=S,k=K,max=M] or a JSON file.
        #[arg(long)]
        moves: String,
        #[arg(long, value_name = "N[,M]")]
        window: String,
        /// Seed for `--moves random` when the spec does not set one.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Estimate the limiting heap ratios of the P-positions.
    Convergents {
        game: String,
        #[arg(long, value_name = "N[,M]", default_value = "2000")]
        window: String,
        #[arg(long)]
        fast: bool,
        /// Use the closed-form P-positions (rational Nim / Wythoff only).
        #[arg(long)]
        closed_form: bool,
        /// Split ratio as P/Q; defaults to (q1+q2)/(p1+p2).
        #[arg(long)]
        boundary: Option<String>,
        /// Keep only positions with Y >= X.
        #[arg(long)]
        upper_only: bool,
    },
    /// Draw an outcome table.
    Render {
        game: String,
        #[arg(long, value_name = "N[,M]")]
        window: String,
        #[arg(long, default_value_t = 4)]
        cell_size: u32,
        #[arg(long, value_enum)]
        format: Option<PictureFormat>,
        /// Draw the region's boundary rays.
        #[arg(long)]
        bounds: bool,
        #[arg(long)]
        fast: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare the P-positions of two games with the same region.
    Compare {
        first: String,
        second: String,
        #[arg(long, value_name = "N[,M]")]
        window: String,
        #[arg(long)]
        fast: bool,
    },
    /// Render the standard picture set into a directory.
    Figures {
        #[arg(long)]
        out_dir: PathBuf,
        #[arg(long, value_enum, default_value_t = PictureFormat::Ppm)]
        format: PictureFormat,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Csv,
    Bin,
    Positions,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PictureFormat {
    Ppm,
    Svg,
}

impl From<PictureFormat> for ImageFormat {
    fn from(f: PictureFormat) -> Self {
        match f {
            PictureFormat::Ppm => ImageFormat::Ppm,
            PictureFormat::Svg => ImageFormat::Svg,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(CliError::Game(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

enum CliError {
    Game(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Game(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn solve_table(game: &GameDef, window: Window, fast: bool) -> Result<OutcomeTable> {
    let config = SolveConfig::from_env()?;
    if fast {
        solve_fast_with(game, window, &config)
    } else {
        solve_with(game, window, &config)
    }
}

fn parse_ratio(s: &str) -> Result<Ratio<u64>> {
    let bad = || Error::Parse(format!("bad ratio {s:?}, expected P/Q"));
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: u64 = n.trim().parse().map_err(|_| bad())?;
    let d: u64 = d.trim().parse().map_err(|_| bad())?;
    if d == 0 {
        return Err(bad());
    }
    Ok(Ratio::new(n, d))
}

fn dispatch(command: Command, out: &mut dyn Write) -> std::result::Result<i32, CliError> {
    match command {
        Command::Terminals { q } => {
            let c = GameConstants::parse(&q)?;
            let t = terminal_set(&c);
            out.write_all(positions_csv(&t).as_bytes())?;
            writeln!(out, "count={} det={}", t.len(), c.det())?;
            Ok(EXIT_OK)
        }
        Command::Solve { game, window, fast, format, out: path } => {
            let game = parse_game(&game)?;
            let table = solve_table(&game, Window::parse(&window)?, fast)?;
            let bytes = match format {
                TableFormat::Csv => export_csv(&table).into_bytes(),
                TableFormat::Bin => export_binary(&table),
                TableFormat::Positions => positions_csv(&table.p_positions()).into_bytes(),
            };
            match path {
                Some(p) => std::fs::write(p, bytes)?,
                None => out.write_all(&bytes)?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { q, moves, window, seed } => {
            let c = GameConstants::parse(&q)?;
            let m = parse_moveset(&moves, seed)?;
            let window = Window::parse(&window)?;
            let report = verify_equivalence_with(&c, &m, window, &SolveConfig::from_env()?)?;
            let summary = format!(
                "Q={c} moves={moves} window={}x{} images={} translates={}",
                window.max_x, window.max_y, report.images_checked, report.translates_checked
            );
            match report.counterexample {
                None => {
                    writeln!(out, "PASS {summary}")?;
                    Ok(EXIT_OK)
                }
                Some(cx) => {
                    writeln!(out, "FAIL {summary}")?;
                    writeln!(out, "counterexample: {cx}")?;
                    Ok(EXIT_FAIL)
                }
            }
        }
        Command::Convergents { game: name, window, fast, closed_form, boundary, upper_only } => {
            let game = parse_game(&name)?;
            let window = Window::parse(&window)?;
            let form = rational_form(&game);
            let mut positions = if closed_form {
                match form {
                    Some((c, false)) => rn_p(&c, window),
                    Some((c, true)) => rw_p(&c, window),
                    None => {
                        return Err(Error::UnsupportedMoveSet(
                            "closed forms exist only for rational Nim and rational Wythoff".into(),
                        )
                        .into())
                    }
                }
            } else {
                solve_table(&game, window, fast)?.p_positions()
            };
            let gdwn_defaults = game == GameDef::canonical(MoveSet::gdwn()) && boundary.is_none();
            let boundary = match boundary {
                Some(b) => parse_ratio(&b)?,
                None if gdwn_defaults => Ratio::new(GDWN_BOUNDARY.0, GDWN_BOUNDARY.1),
                None => {
                    let c = game.constants();
                    Ratio::new(c.q1() + c.q2(), c.p1() + c.p2())
                }
            };
            if upper_only || gdwn_defaults {
                positions.retain(|p: &Position| p.y >= p.x);
            }
            let report = convergents(&positions, boundary)?;
            writeln!(out, "positions={} boundary={}", positions.len(), report.boundary)?;
            writeln!(out, "clusters={}", report.clusters.len())?;
            for (i, c) in report.clusters.iter().enumerate() {
                writeln!(
                    out,
                    "cluster={} estimate={:.6} members={} last={:.6}",
                    i + 1,
                    c.estimate,
                    c.members,
                    c.last_ratio
                )?;
            }
            if let Some((c, _)) = form {
                let l = limit_ratios(&c);
                writeln!(out, "theory rn={} rw_lower={:.6} rw_upper={:.6}", l.rn, l.rw_lower, l.rw_upper)?;
            }
            Ok(EXIT_OK)
        }
        Command::Render { game, window, cell_size, format, bounds, fast, out: path } => {
            let game = parse_game(&game)?;
            let window = Window::parse(&window)?;
            let format = format.map(ImageFormat::from).unwrap_or(match path.extension().and_then(|e| e.to_str()) {
                Some("svg") => ImageFormat::Svg,
                _ => ImageFormat::Ppm,
            });
            let spec = RenderSpec::new(window, cell_size, format, bounds);
            // validate the pixel budget before solving
            let pixels = window.cell_count().and_then(|n| n.checked_mul((cell_size as u64).pow(2)));
            if pixels.is_none_or(|p| p > spec.pixel_cap) {
                return Err(Error::PixelCap { needed: pixels.unwrap_or(u64::MAX), cap: spec.pixel_cap }.into());
            }
            let table = solve_table(&game, window, fast)?;
            std::fs::write(path, render(&table, &spec)?)?;
            Ok(EXIT_OK)
        }
        Command::Compare { first, second, window, fast } => {
            let window = Window::parse(&window)?;
            let a = solve_table(&parse_game(&first)?, window, fast)?;
            let b = solve_table(&parse_game(&second)?, window, fast)?;
            match compare_psets(&a, &b)? {
                None => {
                    writeln!(out, "identical P-positions on {}x{}", window.max_x, window.max_y)?;
                    Ok(EXIT_OK)
                }
                Some(p) => {
                    writeln!(
                        out,
                        "first difference at {p}: {:?} in {first}, {:?} in {second}",
                        a.outcome(p).expect("in region"),
                        b.outcome(p).expect("in region")
                    )?;
                    Ok(EXIT_FAIL)
                }
            }
        }
        Command::Figures { out_dir, format } => {
            std::fs::create_dir_all(&out_dir)?;
            let format = ImageFormat::from(format);
            for fig in FIGURES {
                let path = out_dir.join(fig.file_name(format));
                std::fs::write(&path, fig.render(format)?)?;
                writeln!(out, "{}", path.display())?;
            }
            Ok(EXIT_OK)
        }
    }
}

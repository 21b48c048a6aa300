//! Front end for the `taquin` binary: input parsing, the three inspection
//! commands and the batch verification suites.

pub mod golden;
pub mod suites;

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::Serialize;
use taquin::rectify::render_frame;
use taquin::*;

/// Reads a file, or stdin for `-`.
pub fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

/// A tableau either as JSON `{"lambda","mu","rows"}` or as text with one row
/// per line and `.` for each inner box.
pub fn parse_tableau(text: &str) -> Result<SkewTableau> {
    if text.trim_start().starts_with('{') {
        serde_json::from_str(text).map_err(|e| anyhow!("{e}"))
    } else {
        text.parse::<SkewTableau>().map_err(|e| anyhow!("{e}"))
    }
}

pub fn parse_order(text: &str) -> Result<StandardTableau> {
    Ok(StandardTableau::new(parse_tableau(text)?)?)
}

/// A W-matrix window: whitespace-separated rows of non-negative integers,
/// the last column taken as the stable one.
pub fn parse_wmatrix(text: &str) -> Result<WMatrix> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .enumerate()
            .map(|(col, tok)| {
                tok.parse::<u64>()
                    .map_err(|e| anyhow!("line {}, entry {}: {tok:?}: {e}", lineno + 1, col + 1))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Ok(WMatrix::from_rows(rows)?)
}

/// `0,2,0,2,1`, with optional surrounding parentheses.
pub fn parse_vector(text: &str) -> Result<CountVector> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    if inner.trim().is_empty() {
        return Ok(CountVector::default());
    }
    let v = inner
        .split(',')
        .enumerate()
        .map(|(idx, tok)| {
            tok.trim()
                .parse::<u64>()
                .map_err(|e| anyhow!("position {}: {:?}: {e}", idx + 1, tok.trim()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CountVector::from(v))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Engine {
    Classical,
    Tropical,
    Both,
}

#[derive(Debug, Clone, Serialize)]
pub struct RectifyOutput {
    pub rectified: SkewTableau,
    /// Rows vacated by the slides, in order.
    pub exit_rows: Vec<usize>,
    /// Insertion tableau of the exit rows.
    pub p_prime: SkewTableau,
}

impl RectifyOutput {
    pub fn render(&self) -> String {
        let rows: Vec<String> = self.exit_rows.iter().map(ToString::to_string).collect();
        format!(
            "rectified:\n{}Q' = ({})\nP':\n{}",
            self.rectified,
            rows.join(","),
            self.p_prime
        )
    }
}

/// Rectifies along `order`, or the row-reading order of the inner shape.
pub fn cmd_rectify(
    t: &SkewTableau,
    order: Option<&StandardTableau>,
    engine: Engine,
) -> Result<RectifyOutput> {
    let default;
    let order = match order {
        Some(o) => o,
        None => {
            default = StandardTableau::row_reading(t.inner());
            &default
        }
    };
    if order.shape() != t.inner() {
        bail!(
            "order has shape {}, the inner shape is {}",
            order.shape(),
            t.inner()
        );
    }
    let exit_word = |rows: &[usize]| Word::new(rows.iter().map(|&r| r as Entry).collect());
    let classical = || -> Result<RectifyOutput> {
        let (rectified, exit_rows) = rectify_classical(t, order)?;
        let p_prime = insert_word(&exit_word(&exit_rows)?);
        Ok(RectifyOutput {
            rectified,
            exit_rows,
            p_prime,
        })
    };
    let tropical = || -> Result<RectifyOutput> {
        let w = encode_w(t);
        let row_word = standard_to_row_word(order);
        let rows: Vec<usize> = row_word.letters().iter().map(|&r| r as usize).collect();
        let exit_rows = run_slides(&w, &rows)?.exit_rows();
        let p = PTableauCounts::from_tableau(&insert_word(&row_word))?;
        let (p_prime, w_prime) = rectify_tropical(&p, &w)?;
        Ok(RectifyOutput {
            rectified: decode_w(&w_prime)?,
            exit_rows,
            p_prime: p_prime.to_tableau()?,
        })
    };
    match engine {
        Engine::Classical => classical(),
        Engine::Tropical => tropical(),
        Engine::Both => {
            let (c, tr) = (classical()?, tropical()?);
            let mut defects = Vec::new();
            if c.rectified != tr.rectified {
                defects.push(format!(
                    "rectified tableau:\nclassical\n{}tropical\n{}",
                    c.rectified, tr.rectified
                ));
            }
            if c.exit_rows != tr.exit_rows {
                defects.push(format!(
                    "exit rows: classical {:?}, tropical {:?}",
                    c.exit_rows, tr.exit_rows
                ));
            }
            if c.p_prime != tr.p_prime {
                defects.push(format!(
                    "P':\nclassical\n{}tropical\n{}",
                    c.p_prime, tr.p_prime
                ));
            }
            if !defects.is_empty() {
                bail!("engines disagree on\n{t}{}", defects.join("\n"));
            }
            Ok(c)
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SlideOutput {
    pub k: usize,
    #[serde(rename = "W")]
    pub w: Vec<Vec<u64>>,
    #[serde(rename = "Q")]
    pub q: Vec<Vec<u8>>,
    #[serde(rename = "W_plus")]
    pub w_plus: Vec<Vec<u64>>,
    pub exit_row: usize,
    /// The slid tableau, when the matrix encodes one.
    pub tableau: Option<SkewTableau>,
    #[serde(skip)]
    pub arrows: String,
}

impl SlideOutput {
    pub fn render(&self, show_path: bool) -> String {
        let grid = |rows: &[Vec<String>]| {
            let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
            let mut s = String::new();
            for row in rows {
                let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
                let _ = writeln!(s, "{}", cells.join("  "));
            }
            s
        };
        let strs = |rows: &[Vec<u64>]| -> Vec<Vec<String>> {
            rows.iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect()
        };
        let q: Vec<Vec<String>> = self
            .q
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        let mut out = format!(
            "W:\n{}\nQ:\n{}\nW+:\n{}\nexit row: {}\n",
            grid(&strs(&self.w)),
            grid(&q),
            grid(&strs(&self.w_plus)),
            self.exit_row
        );
        if show_path {
            let _ = write!(out, "\npath:\n{}", self.arrows);
        }
        if let Some(t) = &self.tableau {
            let _ = write!(out, "\ntableau after the slide:\n{t}");
        }
        out
    }
}

/// One slide started in row `k`.
pub fn cmd_slide(w: &WMatrix, k: usize) -> Result<SlideOutput> {
    let (plus, q) = phi_k(w, k)?;
    // Past both stable columns every grid repeats its last column.
    let nrows = w.row_bound().max(plus.row_bound()).max(1);
    let ncols = w.col_stab().max(plus.col_stab()) + 1;
    Ok(SlideOutput {
        k,
        w: w.window(nrows, ncols),
        q: q.window(nrows, ncols),
        w_plus: plus.window(nrows, ncols),
        exit_row: q.exit_row(),
        tableau: decode_w(&plus).ok(),
        arrows: render_path(w, &q, nrows, ncols),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct KickerBallFrame {
    pub step: usize,
    #[serde(rename = "P")]
    pub p: CountVector,
    #[serde(rename = "W")]
    pub w: CountVector,
    pub frame: String,
}

/// The starting state and `steps` successive kicker-and-ball steps.
pub fn cmd_kickerball(
    p: &CountVector,
    w: &CountVector,
    steps: usize,
) -> Result<Vec<KickerBallFrame>> {
    let mut states = vec![(p.clone(), w.clone())];
    for _ in 0..steps {
        let (p, w) = states.last().expect("starts non-empty");
        states.push(kicker_ball_step(p, w)?);
    }
    let sites = states
        .iter()
        .map(|(p, w)| p.support().max(w.support()))
        .max()
        .unwrap_or(0)
        + 1;
    Ok(states
        .into_iter()
        .enumerate()
        .map(|(step, (p, w))| KickerBallFrame {
            step,
            frame: render_frame(&p, &w, sites),
            p,
            w,
        })
        .collect())
}

pub fn render_frames(frames: &[KickerBallFrame]) -> String {
    let mut out = String::new();
    for f in frames {
        let _ = writeln!(out, "step {}: P={} W={}\n{}", f.step, f.p, f.w, f.frame);
    }
    out
}

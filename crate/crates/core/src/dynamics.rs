//! One jeu de taquin slide as a min-plus recurrence on `W`-matrices.
//!
//! Starting from `Q[.][0] = e_k`, column `j` of the output is produced from
//! column `j` of the input by
//!
//! ```text
//! d           = min(Q[i+1][j], W[i+1][j]) - min(Q[i][j], W[i][j])
//! Q[i+1][j+1] = d + Q[i][j]
//! W+[i][j]    = d + W[i][j]
//! ```
//!
//! with the boundary `min(Q[0][j], W[0][j]) = 0` (`Q[0][j] = 0`,
//! `W[0][j] = +inf`). The same map is computed a second time by walking the
//! path through the matrix, and the two results are compared on every call.

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::wmatrix::{decode_w, WMatrix, WMatrixError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DynamicsError {
    #[error("row {0} has no inside corner")]
    NoInsideCorner(usize),
    #[error("recursion and path rule disagree: {0}")]
    InternalCrossCheckFailure(String),
    #[error("slide {step} (row {k}) failed: {source}")]
    AtStep {
        step: usize,
        k: usize,
        #[source]
        source: Box<DynamicsError>,
    },
    #[error(transparent)]
    Codec(#[from] WMatrixError),
}

/// The 0/1 grid marking where the hole sits after all entries `<= j` moved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QPath {
    grid: Vec<Vec<u8>>,
    start_row: usize,
    exit_row: usize,
}

impl QPath {
    /// `Q[i][j]`; rows past the window are zero and columns past it repeat
    /// the last one.
    pub fn get(&self, i: usize, j: usize) -> u8 {
        if i == 0 || i > self.grid.len() {
            return 0;
        }
        let row = &self.grid[i - 1];
        row[j.min(row.len() - 1)]
    }

    pub fn grid(&self) -> &[Vec<u8>] {
        &self.grid
    }

    pub fn ncols(&self) -> usize {
        self.grid.first().map_or(0, Vec::len)
    }

    pub fn start_row(&self) -> usize {
        self.start_row
    }

    pub fn exit_row(&self) -> usize {
        self.exit_row
    }

    /// Row of the 1 in column `j`.
    pub fn row_at(&self, j: usize) -> usize {
        (1..=self.grid.len())
            .find(|&i| self.get(i, j) == 1)
            .unwrap_or(0)
    }

    pub fn window(&self, nrows: usize, ncols: usize) -> Vec<Vec<u8>> {
        (1..=nrows)
            .map(|i| (0..ncols).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// One 1 per column, starting at `start_row`, descending by at most one
    /// row per column, ending at `exit_row`.
    pub fn check_invariants(&self) -> Result<(), String> {
        let mut prev = None;
        for j in 0..self.ncols() {
            let ones: Vec<usize> = (1..=self.grid.len())
                .filter(|&i| self.get(i, j) == 1)
                .collect();
            if ones.len() != 1 || (1..=self.grid.len()).any(|i| self.get(i, j) > 1) {
                return Err(format!("column {j} is not a unit vector"));
            }
            let r = ones[0];
            match prev {
                None if r != self.start_row => {
                    return Err(format!("column 0 has its 1 in row {r}"))
                }
                Some(p) if r < p || r > p + 1 => {
                    return Err(format!("path jumps from row {p} to {r} at column {j}"))
                }
                _ => {}
            }
            prev = Some(r);
        }
        if prev != Some(self.exit_row) {
            return Err("last column does not sit in the exit row".into());
        }
        Ok(())
    }
}

/// Columns processed for a matrix with `row_bound` I and `col_stab` J.
fn horizon(w: &WMatrix) -> usize {
    w.col_stab() + w.row_bound()
}

type Grid = Vec<Vec<i64>>;

/// Column recursion. Returns `Q` and `W+` on rows `1..=I+1`, columns
/// `0..=jmax`; the extra row is a guard that must stay zero.
fn by_recursion(w: &WMatrix, k: usize, jmax: usize) -> (Grid, Grid) {
    let rows = w.row_bound() + 1;
    let mut q = vec![vec![0i64; jmax + 1]; rows + 1];
    let mut plus = vec![vec![0i64; jmax + 1]; rows + 1];
    q[k][0] = 1;
    for j in 0..=jmax {
        let m = |q: &Grid, i: usize| {
            if i == 0 {
                0
            } else {
                q[i][j].min(w.get(i, j) as i64)
            }
        };
        for i in 0..rows {
            let d = m(&q, i + 1) - m(&q, i);
            if j < jmax {
                q[i + 1][j + 1] = d + q[i][j];
            }
            if i >= 1 {
                plus[i][j] = d + w.get(i, j) as i64;
            }
        }
        // The guard row of W+ has no row below it; W is zero there.
        plus[rows][j] = 0;
    }
    (q.split_off(1), plus.split_off(1))
}

/// The path rule: from `(k, 0)` go right across nonzero entries and down-right
/// across zeros; every nonzero entry on the path drops by one and the entry
/// above it gains one.
fn by_path(w: &WMatrix, k: usize, jmax: usize) -> Result<(Grid, Grid), String> {
    let rows = w.row_bound() + 1;
    let mut q = vec![vec![0i64; jmax + 1]; rows];
    let mut plus: Grid = (1..=rows)
        .map(|i| (0..=jmax).map(|j| w.get(i, j) as i64).collect())
        .collect();
    let mut i = k;
    for j in 0..=jmax {
        if i > rows {
            return Err(format!(
                "path left the window below row {rows} at column {j}"
            ));
        }
        q[i - 1][j] = 1;
        if w.get(i, j) != 0 {
            plus[i - 1][j] -= 1;
            if i > 1 {
                plus[i - 2][j] += 1;
            }
        } else {
            i += 1;
        }
    }
    Ok((q, plus))
}

/// The slide starting in row `k`, as a map on `W`-matrices. Returns `W+`
/// and the path grid `Q`.
pub fn phi_k(w: &WMatrix, k: usize) -> Result<(WMatrix, QPath), DynamicsError> {
    let tableau = decode_w(w)?;
    let inner = tableau.inner();
    if k == 0 || inner.part(k) == 0 || inner.part(k) == inner.part(k + 1) {
        return Err(DynamicsError::NoInsideCorner(k));
    }
    let jmax = horizon(w);
    let (q_rec, plus_rec) = by_recursion(w, k, jmax);
    let (q_path, plus_path) =
        by_path(w, k, jmax).map_err(DynamicsError::InternalCrossCheckFailure)?;
    if q_rec != q_path {
        return Err(DynamicsError::InternalCrossCheckFailure(format!(
            "Q differs: recursion {q_rec:?}, path {q_path:?}"
        )));
    }
    if plus_rec != plus_path {
        return Err(DynamicsError::InternalCrossCheckFailure(format!(
            "W+ differs: recursion {plus_rec:?}, path {plus_path:?}"
        )));
    }
    let nrows = w.row_bound();
    if q_rec[nrows].iter().any(|&v| v != 0) || plus_rec[nrows].iter().any(|&v| v != 0) {
        return Err(DynamicsError::InternalCrossCheckFailure(
            "path reached the row below the matrix".into(),
        ));
    }
    if plus_rec.iter().flatten().any(|&v| v < 0) {
        return Err(DynamicsError::InternalCrossCheckFailure(
            "negative entry in W+".into(),
        ));
    }
    let stable = |g: &Grid| jmax == 0 || g.iter().all(|r| r[jmax] == r[jmax - 1]);
    if !stable(&q_rec) || !stable(&plus_rec) {
        return Err(DynamicsError::InternalCrossCheckFailure(format!(
            "not stationary at column {jmax}"
        )));
    }
    let grid: Vec<Vec<u8>> = q_rec[..nrows]
        .iter()
        .map(|r| r.iter().map(|&v| v as u8).collect())
        .collect();
    let mut path = QPath {
        grid,
        start_row: k,
        exit_row: 0,
    };
    path.exit_row = path.row_at(jmax);
    path.check_invariants()
        .map_err(DynamicsError::InternalCrossCheckFailure)?;
    let columns: Vec<Vec<u64>> = (0..=jmax)
        .map(|j| (0..nrows).map(|i| plus_rec[i][j] as u64).collect())
        .collect();
    Ok((WMatrix::from_columns(&columns, nrows), path))
}

/// One slide of a trace: the starting row, its path grid and the matrix after.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlideStep {
    pub k: usize,
    #[serde(rename = "Q")]
    pub q: QPath,
    #[serde(rename = "W")]
    pub w: WMatrix,
    pub exit_row: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlideTrace {
    initial: WMatrix,
    steps: Vec<SlideStep>,
}

impl SlideTrace {
    pub fn initial(&self) -> &WMatrix {
        &self.initial
    }

    pub fn steps(&self) -> &[SlideStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The matrix after the last slide.
    pub fn final_w(&self) -> &WMatrix {
        self.steps.last().map_or(&self.initial, |s| &s.w)
    }

    pub fn exit_rows(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.exit_row).collect()
    }

    /// `W` before and after each slide, together with its path.
    pub fn transitions(&self) -> impl Iterator<Item = (&WMatrix, &SlideStep)> {
        std::iter::once(&self.initial)
            .chain(self.steps.iter().map(|s| &s.w))
            .zip(&self.steps)
    }
}

impl Serialize for SlideTrace {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.steps.serialize(serializer)
    }
}

/// Applies `phi_k` for each `k` in `rows`, in order.
pub fn run_slides(w: &WMatrix, rows: &[usize]) -> Result<SlideTrace, DynamicsError> {
    let mut current = w.clone();
    let mut steps = Vec::with_capacity(rows.len());
    for (step, &k) in rows.iter().enumerate() {
        let (next, q) = phi_k(&current, k).map_err(|e| DynamicsError::AtStep {
            step,
            k,
            source: Box::new(e),
        })?;
        steps.push(SlideStep {
            k,
            exit_row: q.exit_row(),
            q,
            w: next.clone(),
        });
        current = next;
    }
    Ok(SlideTrace {
        initial: w.clone(),
        steps,
    })
}

/// Draws `w` on an `nrows x ncols` window with `→` after each path cell the
/// path leaves to the right and `↘` after each one it leaves down-right.
pub fn render_path(w: &WMatrix, q: &QPath, nrows: usize, ncols: usize) -> String {
    let width = w
        .window(nrows, ncols)
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for i in 1..=nrows {
        let mut line = String::new();
        for j in 0..ncols {
            let arrow = if q.get(i, j) == 1 && j + 1 < ncols {
                if q.get(i, j + 1) == 1 {
                    '→'
                } else {
                    '↘'
                }
            } else {
                ' '
            };
            let _ = write!(line, "{:>width$}{arrow} ", w.get(i, j));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

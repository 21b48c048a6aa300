//! The `W`-matrix encoding of skew tableaux and the counting grid `F`.
//!
//! For a skew tableau `S` (inner boxes read as entry `0`) let `c(i, j)` be the
//! number of entries `<= j` in row `i`. Then
//!
//! ```text
//! W[i][j] = c(i, j) - c(i + 1, j + 1)        (i >= 1, j >= 0)
//! F[i][j] = c(1, j) + ... + c(i, j)
//! ```
//!
//! and `c(i, j)` is recovered as the diagonal sum `W[i][j] + W[i+1][j+1] + ...`.
//! Both grids are infinite; they are stored on a finite window and extended on
//! read. A `W` window keeps rows `1..=row_bound` and columns `0..=col_stab`:
//! rows below are zero and columns to the right repeat column `col_stab`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tableau::{Entry, Partition, SkewShape, SkewTableau, TableauError};

/// Which defining condition of a `W`-matrix failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Condition {
    /// Columns past `col_stab` must repeat column `col_stab`.
    ColumnStability,
    /// Rows past `row_bound` must vanish.
    RowBound,
    /// Diagonal sums must weakly decrease down each column (`lambda^(j)` is a
    /// Young diagram).
    RowOrder,
    /// Diagonal sums must weakly increase along each row (`lambda^(j)` is
    /// contained in `lambda^(j+1)`).
    Nesting,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Condition::ColumnStability => "column stability",
            Condition::RowBound => "row bound",
            Condition::RowOrder => "row order of diagonal sums",
            Condition::Nesting => "nesting of diagonal sums",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WMatrixError {
    #[error("invalid W-matrix: {condition} fails at (i,j)=({i},{j})")]
    InvalidWMatrix {
        condition: Condition,
        i: usize,
        j: usize,
    },
    #[error("W-matrix rows must all have {expected} columns; row {row} has {found}")]
    Ragged {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("F-grid windows differ: {left:?} vs {right:?}")]
    WindowMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

/// A non-negative integer grid `W[i][j]`, `i >= 1`, `j >= 0`.
#[derive(Debug, Clone, Eq, Serialize)]
pub struct WMatrix {
    rows: Vec<Vec<u64>>,
    col_stab: usize,
    row_bound: usize,
}

#[derive(Deserialize)]
struct WMatrixJson {
    rows: Vec<Vec<u64>>,
    col_stab: usize,
    row_bound: usize,
}

impl<'de> Deserialize<'de> for WMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = WMatrixJson::deserialize(deserializer)?;
        WMatrix::new(raw.rows, raw.col_stab, raw.row_bound).map_err(serde::de::Error::custom)
    }
}

impl WMatrix {
    /// Builds a matrix from a rectangular window. Stored rows past
    /// `row_bound` must be zero and stored columns past `col_stab` must repeat
    /// column `col_stab`; both are dropped.
    pub fn new(
        rows: Vec<Vec<u64>>,
        col_stab: usize,
        row_bound: usize,
    ) -> Result<Self, WMatrixError> {
        let width = rows.first().map_or(col_stab + 1, Vec::len);
        for (idx, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(WMatrixError::Ragged {
                    row: idx + 1,
                    expected: width,
                    found: row.len(),
                });
            }
        }
        let mut rows = rows;
        for (idx, row) in rows.iter().enumerate().skip(row_bound) {
            if let Some(j) = row.iter().position(|&v| v != 0) {
                return Err(WMatrixError::InvalidWMatrix {
                    condition: Condition::RowBound,
                    i: idx + 1,
                    j,
                });
            }
        }
        rows.resize(row_bound, vec![0; width]);
        for (idx, row) in rows.iter_mut().enumerate() {
            if width > col_stab + 1 {
                let stable = row[col_stab];
                if let Some(off) = row[col_stab + 1..].iter().position(|&v| v != stable) {
                    return Err(WMatrixError::InvalidWMatrix {
                        condition: Condition::ColumnStability,
                        i: idx + 1,
                        j: col_stab + 1 + off,
                    });
                }
            }
            let fill = row.last().copied().unwrap_or(0);
            row.resize(col_stab + 1, fill);
        }
        Ok(WMatrix {
            rows,
            col_stab,
            row_bound,
        })
    }

    /// A matrix from a rectangular window whose last column is taken as the
    /// stable one.
    pub fn from_rows(rows: Vec<Vec<u64>>) -> Result<Self, WMatrixError> {
        let width = rows.first().map_or(1, Vec::len).max(1);
        let nrows = rows.len();
        WMatrix::new(rows, width - 1, nrows)
    }

    pub fn zero() -> Self {
        WMatrix {
            rows: Vec::new(),
            col_stab: 0,
            row_bound: 0,
        }
    }

    pub(crate) fn from_columns(columns: &[Vec<u64>], nrows: usize) -> Self {
        let rows = (0..nrows)
            .map(|i| {
                columns
                    .iter()
                    .map(|c| c.get(i).copied().unwrap_or(0))
                    .collect()
            })
            .collect();
        WMatrix {
            rows,
            col_stab: columns.len().saturating_sub(1),
            row_bound: nrows,
        }
        .compact()
    }

    /// `J`: columns `j >= J` all equal column `J`.
    pub fn col_stab(&self) -> usize {
        self.col_stab
    }

    /// `I`: rows `i > I` vanish.
    pub fn row_bound(&self) -> usize {
        self.row_bound
    }

    /// `W[i][j]` with the stabilization rules applied. `i` is 1-based.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        if i == 0 || i > self.row_bound {
            return 0;
        }
        self.rows[i - 1][j.min(self.col_stab)]
    }

    /// Column `j`, rows `1..=row_bound`.
    pub fn column(&self, j: usize) -> Vec<u64> {
        (1..=self.row_bound).map(|i| self.get(i, j)).collect()
    }

    /// The `nrows x ncols` top-left corner, extended as needed.
    pub fn window(&self, nrows: usize, ncols: usize) -> Vec<Vec<u64>> {
        (1..=nrows)
            .map(|i| (0..ncols).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// The stored window.
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// `W[i][j] + W[i+1][j+1] + ...`
    pub fn diagonal_sum(&self, i: usize, j: usize) -> u64 {
        (i..=self.row_bound).map(|r| self.get(r, j + r - i)).sum()
    }

    /// Drops trailing zero rows and trailing columns equal to their left
    /// neighbour. The matrix denoted is unchanged.
    pub fn compact(mut self) -> Self {
        while self.rows.last().is_some_and(|r| r.iter().all(|&v| v == 0)) {
            self.rows.pop();
        }
        self.row_bound = self.rows.len();
        let mut stab = self.col_stab;
        while stab > 0 && self.rows.iter().all(|r| r[stab] == r[stab - 1]) {
            stab -= 1;
        }
        for r in &mut self.rows {
            r.truncate(stab + 1);
        }
        self.col_stab = stab;
        self
    }

    /// Checks that the diagonal sums describe a nested chain of Young
    /// diagrams.
    pub fn validate(&self) -> Result<(), WMatrixError> {
        for j in 0..=self.col_stab {
            for i in 1..=self.row_bound {
                if self.diagonal_sum(i, j) < self.diagonal_sum(i + 1, j) {
                    return Err(WMatrixError::InvalidWMatrix {
                        condition: Condition::RowOrder,
                        i,
                        j,
                    });
                }
                if j < self.col_stab && self.diagonal_sum(i, j) > self.diagonal_sum(i, j + 1) {
                    return Err(WMatrixError::InvalidWMatrix {
                        condition: Condition::Nesting,
                        i,
                        j,
                    });
                }
            }
        }
        Ok(())
    }
}

impl PartialEq for WMatrix {
    /// Equality of the infinite matrices denoted.
    fn eq(&self, other: &Self) -> bool {
        let nrows = self.row_bound.max(other.row_bound);
        let ncols = self.col_stab.max(other.col_stab) + 1;
        self.window(nrows, ncols) == other.window(nrows, ncols)
    }
}

impl fmt::Display for WMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_grid(f, &self.rows)
    }
}

pub(crate) fn write_grid<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    rows: &[Vec<T>],
) -> fmt::Result {
    let width = rows
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        writeln!(f, "{}", cells.join(" "))?;
    }
    Ok(())
}

/// Encodes `s` with `row_bound` = number of rows and `col_stab` = largest
/// entry.
pub fn encode_w(s: &SkewTableau) -> WMatrix {
    let nrows = s.num_rows();
    let max = s.max_entry();
    let rows = (1..=nrows)
        .map(|i| {
            (0..=max)
                .map(|j| (s.count_at_most(i, j) - s.count_at_most(i + 1, j + 1)) as u64)
                .collect()
        })
        .collect();
    WMatrix {
        rows,
        col_stab: max as usize,
        row_bound: nrows,
    }
}

/// Inverts [`encode_w`]: row `i` of `lambda^(j)` is the diagonal sum at
/// `(i, j)`, the inner shape is `lambda^(0)`, and row `i` holds
/// `lambda^(j)_i - lambda^(j-1)_i` copies of `j`.
pub fn decode_w(w: &WMatrix) -> Result<SkewTableau, WMatrixError> {
    w.validate()?;
    let nrows = w.row_bound();
    let top = w.col_stab();
    let lam = |i: usize, j: usize| w.diagonal_sum(i, j) as usize;
    let inner = Partition::new((1..=nrows).map(|i| lam(i, 0)).collect())?;
    let outer = Partition::new((1..=nrows).map(|i| lam(i, top)).collect())?;
    let rows = (1..=nrows)
        .map(|i| {
            (1..=top)
                .flat_map(|j| std::iter::repeat_n(j as Entry, lam(i, j) - lam(i, j - 1)))
                .collect()
        })
        .collect();
    Ok(SkewTableau::new(SkewShape::new(outer, inner)?, rows)?)
}

/// `F[i][j]`: entries `<= j` in the top `i` rows, inner boxes counted as `0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FGrid {
    rows: Vec<Vec<u64>>,
}

impl FGrid {
    pub fn from_rows(rows: Vec<Vec<u64>>) -> Result<Self, WMatrixError> {
        let width = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != width) {
            return Err(WMatrixError::Ragged {
                row: bad + 1,
                expected: width,
                found: rows[bad].len(),
            });
        }
        Ok(FGrid { rows })
    }

    /// Number of stored rows `i = 1..=I`.
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Number of stored columns `j = 0..J`.
    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// `F[i][j]`, zero for `i = 0`, extended past the window by repeating the
    /// last row and column.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        if i == 0 || self.rows.is_empty() || self.ncols() == 0 {
            return 0;
        }
        let row = &self.rows[i.min(self.nrows()) - 1];
        row[j.min(row.len() - 1)]
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn window(&self, nrows: usize, ncols: usize) -> Vec<Vec<u64>> {
        (1..=nrows)
            .map(|i| (0..ncols).map(|j| self.get(i, j)).collect())
            .collect()
    }

    fn set(&mut self, i: usize, j: usize, v: u64) {
        self.rows[i - 1][j] = v;
    }
}

impl fmt::Display for FGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_grid(f, &self.rows)
    }
}

/// `F` on the window `i = 1..=num_rows`, `j = 0..=max_entry`.
pub fn compute_f(s: &SkewTableau) -> FGrid {
    compute_f_window(s, s.num_rows(), s.max_entry() as usize + 1)
}

/// `F` on the window `i = 1..=nrows`, `j = 0..ncols`.
pub fn compute_f_window(s: &SkewTableau, nrows: usize, ncols: usize) -> FGrid {
    let mut rows = Vec::with_capacity(nrows);
    let mut acc = vec![0u64; ncols];
    for i in 1..=nrows {
        for (j, a) in acc.iter_mut().enumerate() {
            *a += s.count_at_most(i, j as Entry) as u64;
        }
        rows.push(acc.clone());
    }
    FGrid { rows }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UdkpViolation {
    pub cell: (usize, usize),
    pub lhs: u64,
    pub rhs: u64,
}

/// Outcome of checking the ultradiscrete KP relation between two time steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UdkpReport {
    pub checked: usize,
    pub violations: Vec<UdkpViolation>,
    /// Cells of the window whose relation needs values right of the stored
    /// window; they are not evaluated.
    pub not_checked: Vec<(usize, usize)>,
}

impl UdkpReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Evaluates
/// `F[i][j] + F'[i][j+1] = max(F[i+1][j+1] + F'[i-1][j], F[i][j+1] + F'[i][j])`
/// on `i = 1..=I`, `j = 0..J-1`, where `F` is time `t` and `F'` time `t + 1`.
/// Row `I + 1` is read through row stabilization.
pub fn verify_udkp(ft: &FGrid, ft1: &FGrid) -> Result<UdkpReport, WMatrixError> {
    let left = (ft.nrows(), ft.ncols());
    let right = (ft1.nrows(), ft1.ncols());
    if left != right {
        return Err(WMatrixError::WindowMismatch { left, right });
    }
    let (nrows, ncols) = left;
    let mut report = UdkpReport {
        checked: 0,
        violations: Vec::new(),
        not_checked: Vec::new(),
    };
    for i in 1..=nrows {
        for j in 0..ncols {
            if j + 1 >= ncols {
                report.not_checked.push((i, j));
                continue;
            }
            let lhs = ft.get(i, j) + ft1.get(i, j + 1);
            let rhs =
                (ft.get(i + 1, j + 1) + ft1.get(i - 1, j)).max(ft.get(i, j + 1) + ft1.get(i, j));
            report.checked += 1;
            if lhs != rhs {
                report.violations.push(UdkpViolation {
                    cell: (i, j),
                    lhs,
                    rhs,
                });
            }
        }
    }
    Ok(report)
}

/// Runs [`verify_udkp`] on two tableaux over a common window one row and one
/// column larger than either needs, so every cell with a nonconstant
/// neighbourhood is checked.
pub fn verify_udkp_tableaux(before: &SkewTableau, after: &SkewTableau) -> UdkpReport {
    let nrows = before.num_rows().max(after.num_rows()) + 1;
    let ncols = before.max_entry().max(after.max_entry()) as usize + 2;
    verify_udkp(
        &compute_f_window(before, nrows, ncols),
        &compute_f_window(after, nrows, ncols),
    )
    .expect("windows built with equal sizes")
}

/// `Q[i][j] = (F[i][j] - F[i-1][j]) - (F'[i][j] - F'[i-1][j])`: the drop in
/// the number of entries `<= j` in row `i` between two time steps.
pub fn q_from_f(ft: &FGrid, ft1: &FGrid) -> Vec<Vec<i64>> {
    let nrows = ft.nrows().max(ft1.nrows());
    let ncols = ft.ncols().max(ft1.ncols());
    (1..=nrows)
        .map(|i| {
            (0..ncols)
                .map(|j| {
                    let row = |g: &FGrid| g.get(i, j) as i64 - g.get(i - 1, j) as i64;
                    row(ft) - row(ft1)
                })
                .collect()
        })
        .collect()
}

/// Returns a copy of `grid` with `F[i][j]` replaced by `value`.
pub fn with_f_value(grid: &FGrid, i: usize, j: usize, value: u64) -> FGrid {
    let mut g = grid.clone();
    g.set(i, j, value);
    g
}

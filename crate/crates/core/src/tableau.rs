//! Young diagrams, skew semistandard tableaux, words and row insertion.
//!
//! Coordinates are 1-based `(row, col)` throughout the public API, matching
//! the usual English drawing of a diagram (row 1 on top, column 1 on the left).
//! Boxes of the inner shape carry no entry here; the convention that an inner
//! box behaves like an entry `0` lives in [`crate::wmatrix`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A tableau entry. Entries are always positive.
pub type Entry = u32;

/// Upper bound on `|mu|` accepted by [`enumerate_standard_tableaux`] unless
/// the caller passes a different one.
pub const DEFAULT_ENUMERATION_BOUND: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("parts {0:?} are not weakly decreasing")]
    NotAPartition(Vec<usize>),
    #[error("inner shape {inner:?} is not contained in outer shape {outer:?}")]
    ContainmentViolation {
        outer: Vec<usize>,
        inner: Vec<usize>,
    },
    #[error("row {row} has {found} entries, expected {expected}")]
    RowLength {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("entry at {0} is not positive")]
    NonPositiveEntry(Cell),
    #[error("row rule violated at {0}: entries must weakly increase left to right")]
    RowRuleViolation(Cell),
    #[error("column rule violated at {0}: entries must strictly increase top to bottom")]
    ColumnRuleViolation(Cell),
    #[error("tableau is skew; a straight shape is required")]
    NotStraight,
    #[error("entries are not exactly 1..={0}")]
    NotStandard(usize),
    #[error("shape has {size} boxes, above the enumeration bound {bound}")]
    SizeBoundExceeded { size: usize, bound: usize },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

/// A box position, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A Young diagram given by its weakly decreasing row lengths.
///
/// Trailing zero parts are dropped on construction, so `(2,1,0)` and `(2,1)`
/// compare equal.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, TableauError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauError::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Length of row `i` (1-based); zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Boxes with nothing below and nothing to the right, top to bottom.
    pub fn corners(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| Cell::new(i, self.part(i)))
            .collect()
    }

    /// Rows where one box can be added keeping a Young diagram.
    pub fn addable_rows(&self) -> Vec<usize> {
        (1..=self.len() + 1)
            .filter(|&i| i == 1 || self.part(i) < self.part(i - 1))
            .collect()
    }

    /// The diagram with one box added at the end of row `i`. Panics if that
    /// does not give a Young diagram.
    pub fn with_box_in_row(&self, i: usize) -> Partition {
        let mut parts = self.0.clone();
        if i > parts.len() {
            parts.push(0);
        }
        parts[i - 1] += 1;
        Partition::new(parts).expect("box added outside an addable row")
    }

    /// The diagram with the last box of row `i` removed. Panics if row `i`
    /// is empty or removal breaks the shape.
    pub fn without_box_in_row(&self, i: usize) -> Partition {
        let mut parts = self.0.clone();
        parts[i - 1] -= 1;
        Partition::new(parts).expect("removed box was not a corner")
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = TableauError;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A skew diagram `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, TableauError> {
        if !outer.contains(&inner) {
            return Err(TableauError::ContainmentViolation {
                outer: outer.0,
                inner: inner.0,
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of boxes in `outer / inner`.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn row_len(&self, i: usize) -> usize {
        self.outer.part(i) - self.inner.part(i)
    }

    /// True when `cell` is a box of the skew diagram (in outer, not in inner).
    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.col >= 1
            && cell.col <= self.outer.part(cell.row)
            && cell.col > self.inner.part(cell.row)
    }
}

/// Inside corners (corners of the inner shape) and outside corners (corners of
/// the outer shape), each sorted top to bottom.
pub fn corners(shape: &SkewShape) -> (Vec<Cell>, Vec<Cell>) {
    (shape.inner.corners(), shape.outer.corners())
}

/// A semistandard filling of a skew shape. `rows[i]` lists the entries of
/// row `i + 1` that lie outside the inner shape, left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<Entry>>,
}

impl SkewTableau {
    /// Validates the row and column rules and builds the tableau.
    pub fn new(shape: SkewShape, rows: Vec<Vec<Entry>>) -> Result<Self, TableauError> {
        let nrows = shape.outer.len();
        let mut rows = rows;
        // Rows consisting only of inner boxes may be listed or omitted.
        while rows.len() > nrows && rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        while rows.len() < nrows && shape.row_len(rows.len() + 1) == 0 {
            rows.push(Vec::new());
        }
        if rows.len() != nrows {
            let row = rows.len().min(nrows) + 1;
            return Err(TableauError::RowLength {
                row,
                expected: shape.row_len(row),
                found: rows.get(row - 1).map_or(0, Vec::len),
            });
        }
        for (idx, row) in rows.iter().enumerate() {
            let i = idx + 1;
            if row.len() != shape.row_len(i) {
                return Err(TableauError::RowLength {
                    row: i,
                    expected: shape.row_len(i),
                    found: row.len(),
                });
            }
        }
        let t = SkewTableau { shape, rows };
        t.check_rules()?;
        Ok(t)
    }

    /// A straight-shape tableau from its rows.
    pub fn straight(rows: Vec<Vec<Entry>>) -> Result<Self, TableauError> {
        let outer = Partition::new(rows.iter().map(Vec::len).collect())?;
        SkewTableau::new(SkewShape::straight(outer), rows)
    }

    /// The tableau of empty shape.
    pub fn empty() -> Self {
        SkewTableau {
            shape: SkewShape::straight(Partition::empty()),
            rows: Vec::new(),
        }
    }

    fn check_rules(&self) -> Result<(), TableauError> {
        for (idx, row) in self.rows.iter().enumerate() {
            let i = idx + 1;
            let offset = self.shape.inner.part(i);
            for (k, &v) in row.iter().enumerate() {
                let cell = Cell::new(i, offset + k + 1);
                if v == 0 {
                    return Err(TableauError::NonPositiveEntry(cell));
                }
                if k > 0 && row[k - 1] > v {
                    return Err(TableauError::RowRuleViolation(cell));
                }
                if let Some(above) = self.entry(Cell::new(i - 1, cell.col)) {
                    if above >= v {
                        return Err(TableauError::ColumnRuleViolation(cell));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn outer(&self) -> &Partition {
        &self.shape.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.shape.inner
    }

    /// Filled entries per row (inner boxes omitted).
    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Number of filled boxes.
    pub fn num_boxes(&self) -> usize {
        self.shape.size()
    }

    pub fn is_straight(&self) -> bool {
        self.shape.inner.is_empty()
    }

    pub fn max_entry(&self) -> Entry {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// The entry at a box of the skew diagram, `None` elsewhere.
    pub fn entry(&self, cell: Cell) -> Option<Entry> {
        if !self.shape.contains(cell) {
            return None;
        }
        Some(self.rows[cell.row - 1][cell.col - self.shape.inner.part(cell.row) - 1])
    }

    /// Number of boxes in row `i` holding a value `<= j`, where inner boxes
    /// count as holding `0`.
    pub fn count_at_most(&self, i: usize, j: Entry) -> usize {
        if i == 0 || i > self.rows.len() {
            return 0;
        }
        self.shape.inner.part(i) + self.rows[i - 1].partition_point(|&v| v <= j)
    }

    /// Number of copies of `value` in row `i`.
    pub fn multiplicity(&self, i: usize, value: Entry) -> usize {
        if i == 0 || i > self.rows.len() {
            return 0;
        }
        self.rows[i - 1].iter().filter(|&&v| v == value).count()
    }
}

impl fmt::Display for SkewTableau {
    /// One row per line, `.` for each inner box.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, row) in self.rows.iter().enumerate() {
            let mut tokens: Vec<String> = vec![".".to_string(); self.shape.inner.part(idx + 1)];
            tokens.extend(row.iter().map(|v| v.to_string()));
            writeln!(f, "{}", tokens.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for SkewTableau {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut inner = Vec::new();
        let mut outer = Vec::new();
        let mut rows = Vec::new();
        let lines: Vec<&str> = s.lines().collect();
        let last = lines
            .iter()
            .rposition(|l| !l.trim().is_empty())
            .map_or(0, |p| p + 1);
        for (lineno, line) in lines[..last].iter().enumerate() {
            let mut dots = 0;
            let mut row = Vec::new();
            let mut pos = 0;
            for token in line.split_whitespace() {
                let column = line[pos..].find(token).map_or(pos, |p| p + pos) + 1;
                pos = column - 1 + token.len();
                let err = |message: String| TableauError::Parse {
                    line: lineno + 1,
                    column,
                    message,
                };
                if token == "." {
                    if !row.is_empty() {
                        return Err(err("inner box after a filled box".into()));
                    }
                    dots += 1;
                } else {
                    let v: Entry = token.parse().map_err(|_| {
                        err(format!(
                            "expected a positive integer or '.', found '{token}'"
                        ))
                    })?;
                    if v == 0 {
                        return Err(err("entries must be positive".into()));
                    }
                    row.push(v);
                }
            }
            if dots + row.len() == 0 {
                return Err(TableauError::Parse {
                    line: lineno + 1,
                    column: 1,
                    message: "empty row inside the tableau".into(),
                });
            }
            inner.push(dots);
            outer.push(dots + row.len());
            rows.push(row);
        }
        let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
        SkewTableau::new(shape, rows)
    }
}

/// JSON form `{"lambda":[..],"mu":[..],"rows":[[..],..]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct TableauJson {
    lambda: Vec<usize>,
    mu: Vec<usize>,
    rows: Vec<Vec<Entry>>,
}

impl Serialize for SkewTableau {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TableauJson {
            lambda: self.shape.outer.0.clone(),
            mu: self.shape.inner.0.clone(),
            rows: self.rows.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SkewTableau {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = TableauJson::deserialize(deserializer)?;
        let build = || -> Result<SkewTableau, TableauError> {
            let shape = SkewShape::new(Partition::new(raw.lambda)?, Partition::new(raw.mu)?)?;
            SkewTableau::new(shape, raw.rows)
        };
        build().map_err(serde::de::Error::custom)
    }
}

/// Validates `rows` against `shape`.
pub fn validate_skew_tableau(
    shape: SkewShape,
    rows: Vec<Vec<Entry>>,
) -> Result<SkewTableau, TableauError> {
    SkewTableau::new(shape, rows)
}

/// A straight tableau whose entries are exactly `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SkewTableau", into = "SkewTableau")]
pub struct StandardTableau(SkewTableau);

impl StandardTableau {
    pub fn new(t: SkewTableau) -> Result<Self, TableauError> {
        if !t.is_straight() {
            return Err(TableauError::NotStraight);
        }
        let n = t.num_boxes();
        let mut seen = vec![false; n + 1];
        for &v in t.rows.iter().flatten() {
            let v = v as usize;
            if v > n || seen[v] {
                return Err(TableauError::NotStandard(n));
            }
            seen[v] = true;
        }
        Ok(StandardTableau(t))
    }

    pub fn from_rows(rows: Vec<Vec<Entry>>) -> Result<Self, TableauError> {
        StandardTableau::new(SkewTableau::straight(rows)?)
    }

    /// Row 1 left to right, then row 2, and so on.
    pub fn row_reading(shape: &Partition) -> Self {
        let mut next = 0;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                (0..len)
                    .map(|_| {
                        next += 1;
                        next
                    })
                    .collect()
            })
            .collect();
        StandardTableau(SkewTableau {
            shape: SkewShape::straight(shape.clone()),
            rows,
        })
    }

    pub fn shape(&self) -> &Partition {
        self.0.outer()
    }

    pub fn size(&self) -> usize {
        self.0.num_boxes()
    }

    pub fn as_tableau(&self) -> &SkewTableau {
        &self.0
    }

    /// The box holding `value`.
    pub fn position(&self, value: Entry) -> Option<Cell> {
        self.0.rows.iter().enumerate().find_map(|(i, row)| {
            row.iter()
                .position(|&v| v == value)
                .map(|c| Cell::new(i + 1, c + 1))
        })
    }
}

impl TryFrom<SkewTableau> for StandardTableau {
    type Error = TableauError;

    fn try_from(t: SkewTableau) -> Result<Self, Self::Error> {
        StandardTableau::new(t)
    }
}

impl From<StandardTableau> for SkewTableau {
    fn from(s: StandardTableau) -> Self {
        s.0
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Every standard tableau of shape `mu`, ordered lexicographically by the
/// concatenation of its rows.
pub fn enumerate_standard_tableaux(
    mu: &Partition,
    bound: usize,
) -> Result<Vec<StandardTableau>, TableauError> {
    let n = mu.size();
    if n > bound {
        return Err(TableauError::SizeBoundExceeded { size: n, bound });
    }
    fn grow(
        target: &Partition,
        cur: &Partition,
        rows: &mut Vec<Vec<Entry>>,
        out: &mut Vec<Vec<Vec<Entry>>>,
    ) {
        let next = cur.size() as Entry + 1;
        if cur == target {
            out.push(rows.clone());
            return;
        }
        for i in cur.addable_rows() {
            if cur.part(i) < target.part(i) {
                if i > rows.len() {
                    rows.push(Vec::new());
                }
                rows[i - 1].push(next);
                grow(target, &cur.with_box_in_row(i), rows, out);
                rows[i - 1].pop();
                if rows[i - 1].is_empty() {
                    rows.pop();
                }
            }
        }
    }
    let mut found = Vec::new();
    grow(mu, &Partition::empty(), &mut Vec::new(), &mut found);
    found.sort_by_key(|rows| rows.concat());
    Ok(found
        .into_iter()
        .map(|rows| {
            StandardTableau(SkewTableau {
                shape: SkewShape::straight(mu.clone()),
                rows,
            })
        })
        .collect())
}

/// A finite sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Entry>", into = "Vec<Entry>")]
pub struct Word(Vec<Entry>);

impl Word {
    pub fn new(letters: Vec<Entry>) -> Result<Self, TableauError> {
        if let Some(p) = letters.iter().position(|&v| v == 0) {
            return Err(TableauError::NonPositiveEntry(Cell::new(1, p + 1)));
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[Entry] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl TryFrom<Vec<Entry>> for Word {
    type Error = TableauError;

    fn try_from(v: Vec<Entry>) -> Result<Self, Self::Error> {
        Word::new(v)
    }
}

impl From<Word> for Vec<Entry> {
    fn from(w: Word) -> Self {
        w.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", letters.join(","))
    }
}

/// The rows from which successive slides start when the inner boxes are
/// emptied in decreasing order of their labels: letter `i` is the row holding
/// `N - i + 1`.
pub fn standard_to_row_word(s: &StandardTableau) -> Word {
    let n = s.size() as Entry;
    let mut row_of = vec![0; n as usize + 1];
    for (i, row) in s.0.rows.iter().enumerate() {
        for &v in row {
            row_of[v as usize] = i as Entry + 1;
        }
    }
    Word((1..=n).rev().map(|v| row_of[v as usize]).collect())
}

/// Every suffix has at least as many `i` as `i + 1`.
pub fn is_reverse_lattice_word(w: &Word) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &v in w.0.iter().rev() {
        let v = v as usize;
        if counts.len() <= v {
            counts.resize(v + 1, 0);
        }
        counts[v] += 1;
        if v > 1 && counts[v] > counts[v - 1] {
            return false;
        }
    }
    true
}

/// Schensted insertion into raw rows; returns the cells that changed.
fn bump_into(rows: &mut Vec<Vec<Entry>>, mut x: Entry) -> Vec<Cell> {
    let mut path = Vec::new();
    for (i, row) in rows.iter_mut().enumerate() {
        let pos = row.partition_point(|&v| v <= x);
        path.push(Cell::new(i + 1, pos + 1));
        if pos == row.len() {
            row.push(x);
            return path;
        }
        std::mem::swap(&mut row[pos], &mut x);
    }
    path.push(Cell::new(rows.len() + 1, 1));
    rows.push(vec![x]);
    path
}

/// Row-inserts `x` into a straight tableau. Returns the new tableau and the
/// cells written, top row first.
pub fn row_insert(t: &SkewTableau, x: Entry) -> Result<(SkewTableau, Vec<Cell>), TableauError> {
    if !t.is_straight() {
        return Err(TableauError::NotStraight);
    }
    if x == 0 {
        return Err(TableauError::NonPositiveEntry(Cell::new(1, 1)));
    }
    let mut rows = t.rows.clone();
    let path = bump_into(&mut rows, x);
    let shape = SkewShape::straight(Partition(rows.iter().map(Vec::len).collect()));
    Ok((SkewTableau { shape, rows }, path))
}

/// `t_1 <- t_2 <- ... <- t_N`, starting from the empty tableau.
pub fn insert_word(w: &Word) -> SkewTableau {
    let mut rows = Vec::new();
    for &x in &w.0 {
        bump_into(&mut rows, x);
    }
    let shape = SkewShape::straight(Partition(rows.iter().map(Vec::len).collect()));
    SkewTableau { shape, rows }
}

/// The tableau of shape `lambda` whose `i`-th row holds only `i`.
pub fn uniform_tableau(lambda: &Partition) -> SkewTableau {
    let rows = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| vec![i as Entry + 1; len])
        .collect();
    SkewTableau {
        shape: SkewShape::straight(lambda.clone()),
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn skew(
        outer: &[usize],
        inner: &[usize],
        rows: &[&[Entry]],
    ) -> Result<SkewTableau, TableauError> {
        let shape = SkewShape::new(part(outer), part(inner))?;
        SkewTableau::new(shape, rows.iter().map(|r| r.to_vec()).collect())
    }

    fn straight(rows: &[&[Entry]]) -> SkewTableau {
        SkewTableau::straight(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn validates_running_example() {
        let t = skew(&[5, 4, 2], &[3, 1], &[&[1, 2], &[1, 2, 3], &[1, 2]]).unwrap();
        assert_eq!(t.num_boxes(), 7);
        assert_eq!(t.entry(Cell::new(1, 4)), Some(1));
        assert_eq!(t.entry(Cell::new(1, 3)), None);
        assert!(skew(&[1], &[], &[&[1]]).is_ok());
    }

    #[test]
    fn reports_rule_violations() {
        assert_eq!(
            skew(&[2], &[], &[&[2, 1]]),
            Err(TableauError::RowRuleViolation(Cell::new(1, 2)))
        );
        assert_eq!(
            skew(&[2, 2], &[], &[&[1, 2], &[1, 3]]),
            Err(TableauError::ColumnRuleViolation(Cell::new(2, 1)))
        );
        assert!(matches!(
            SkewShape::new(part(&[2]), part(&[1, 1])),
            Err(TableauError::ContainmentViolation { .. })
        ));
        assert!(matches!(
            skew(&[2, 1], &[1], &[&[1]]),
            Err(TableauError::RowLength { row: 2, .. })
        ));
    }

    #[test]
    fn trailing_zero_parts_are_ignored() {
        assert_eq!(part(&[2, 1, 0]), part(&[2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn corner_sets() {
        let shape = SkewShape::new(part(&[5, 4, 2]), part(&[3, 1])).unwrap();
        let (inside, outside) = corners(&shape);
        assert_eq!(inside, vec![Cell::new(1, 3), Cell::new(2, 1)]);
        assert_eq!(
            outside,
            vec![Cell::new(1, 5), Cell::new(2, 4), Cell::new(3, 2)]
        );

        let shape = SkewShape::new(part(&[3, 3, 2]), part(&[2, 1])).unwrap();
        assert_eq!(corners(&shape).0, vec![Cell::new(1, 2), Cell::new(2, 1)]);

        let shape = SkewShape::straight(part(&[2, 1]));
        assert!(corners(&shape).0.is_empty());
    }

    #[test]
    fn standard_tableaux_of_small_shapes() {
        let two_one =
            enumerate_standard_tableaux(&part(&[2, 1]), DEFAULT_ENUMERATION_BOUND).unwrap();
        let rows: Vec<_> = two_one
            .iter()
            .map(|s| s.as_tableau().rows().to_vec())
            .collect();
        assert_eq!(
            rows,
            vec![vec![vec![1, 2], vec![3]], vec![vec![1, 3], vec![2]]]
        );
        assert_eq!(
            enumerate_standard_tableaux(&part(&[1]), 10).unwrap().len(),
            1
        );
        assert_eq!(
            enumerate_standard_tableaux(&part(&[3, 1]), 10)
                .unwrap()
                .len(),
            3
        );
        assert_eq!(
            enumerate_standard_tableaux(&Partition::empty(), 10)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            enumerate_standard_tableaux(&part(&[6, 5]), 10),
            Err(TableauError::SizeBoundExceeded {
                size: 11,
                bound: 10
            })
        );
    }

    #[test]
    fn row_words_of_standard_tableaux() {
        let cases: [(&[&[Entry]], &[Entry]); 3] = [
            (&[&[1, 2, 3], &[4]], &[2, 1, 1, 1]),
            (&[&[1, 2, 4], &[3]], &[1, 2, 1, 1]),
            (&[&[1, 3, 4], &[2]], &[1, 1, 2, 1]),
        ];
        for (rows, word) in cases {
            let s = StandardTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap();
            assert_eq!(standard_to_row_word(&s).letters(), word);
        }
    }

    #[test]
    fn reverse_lattice_words() {
        assert!(is_reverse_lattice_word(
            &Word::new(vec![2, 1, 1, 1]).unwrap()
        ));
        assert!(!is_reverse_lattice_word(&Word::new(vec![1, 2]).unwrap()));
        assert!(is_reverse_lattice_word(
            &Word::new(vec![1, 1, 2, 1]).unwrap()
        ));
        assert!(is_reverse_lattice_word(&Word::default()));
        assert!(is_reverse_lattice_word(
            &Word::new(vec![3, 1, 2, 1]).unwrap()
        ));
        assert!(!is_reverse_lattice_word(&Word::new(vec![2, 3, 1]).unwrap()));
    }

    #[test]
    fn row_bumping_example() {
        let t = straight(&[&[1, 3, 4, 5], &[2, 4, 6, 6], &[4, 5], &[6]]);
        let (out, path) = row_insert(&t, 3).unwrap();
        assert_eq!(
            out,
            straight(&[&[1, 3, 3, 5], &[2, 4, 4, 6], &[4, 5, 6], &[6]])
        );
        assert_eq!(
            path,
            vec![Cell::new(1, 3), Cell::new(2, 3), Cell::new(3, 3)]
        );

        let (out, _) = row_insert(&SkewTableau::empty(), 5).unwrap();
        assert_eq!(out, straight(&[&[5]]));

        let (out, _) = row_insert(&straight(&[&[1, 1], &[2]]), 1).unwrap();
        assert_eq!(out, straight(&[&[1, 1, 1], &[2]]));

        let skewed = skew(&[2], &[1], &[&[1]]).unwrap();
        assert_eq!(row_insert(&skewed, 1), Err(TableauError::NotStraight));
    }

    #[test]
    fn word_insertion() {
        let w = |v: &[Entry]| Word::new(v.to_vec()).unwrap();
        assert_eq!(
            insert_word(&w(&[2, 1, 1, 1])),
            straight(&[&[1, 1, 1], &[2]])
        );
        assert_eq!(
            insert_word(&w(&[3, 1, 2, 3])),
            straight(&[&[1, 2, 3], &[3]])
        );
        assert_eq!(
            insert_word(&w(&[1, 1, 2, 1])),
            straight(&[&[1, 1, 1], &[2]])
        );
        assert_eq!(insert_word(&Word::default()), SkewTableau::empty());
    }

    #[test]
    fn uniform_tableaux() {
        assert_eq!(
            uniform_tableau(&part(&[3, 1])),
            straight(&[&[1, 1, 1], &[2]])
        );
        assert_eq!(uniform_tableau(&Partition::empty()), SkewTableau::empty());
        assert_eq!(
            uniform_tableau(&part(&[2, 2])),
            straight(&[&[1, 1], &[2, 2]])
        );
    }

    #[test]
    fn text_format() {
        let t = skew(&[5, 4, 2], &[3, 1], &[&[1, 2], &[1, 2, 3], &[1, 2]]).unwrap();
        let text = t.to_string();
        assert_eq!(text, ". . . 1 2\n. 1 2 3\n1 2\n");
        assert_eq!(text.parse::<SkewTableau>().unwrap(), t);
        assert_eq!("".parse::<SkewTableau>().unwrap(), SkewTableau::empty());

        let err = ". 1\n. x\n".parse::<SkewTableau>().unwrap_err();
        assert_eq!(
            err,
            TableauError::Parse {
                line: 2,
                column: 3,
                message: "expected a positive integer or '.', found 'x'".into()
            }
        );
        assert!(matches!(
            "1 .\n".parse::<SkewTableau>(),
            Err(TableauError::Parse {
                line: 1,
                column: 3,
                ..
            })
        ));
    }

    #[test]
    fn json_format() {
        let t = skew(&[3, 3, 2], &[2, 1], &[&[1], &[2, 2], &[3, 3]]).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"lambda":[3,3,2],"mu":[2,1],"rows":[[1],[2,2],[3,3]]}"#
        );
        assert_eq!(serde_json::from_str::<SkewTableau>(&json).unwrap(), t);
        assert!(
            serde_json::from_str::<SkewTableau>(r#"{"lambda":[2],"mu":[],"rows":[[2,1]]}"#)
                .is_err()
        );
    }
}

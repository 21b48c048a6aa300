//! Rectification through the kicker-and-ball map.
//!
//! A straight tableau `P` with `k` rows is stored as multiplicity vectors
//! `P_1, ..., P_k` (`P_i[j]` = number of `j` in row `i`). One column of a
//! `W`-matrix is pushed through the rows `P_k, P_{k-1}, ..., P_1` by the
//! local map
//!
//! ```text
//! m_i      = min(P_i, W_i),  m_0 = 0
//! P'_{i+1} = m_{i+1} - m_i + P_i
//! W'_i     = m_{i+1} - m_i + W_i
//! ```
//!
//! which is also a token game: at each site, kickers sharing the site with
//! balls kick one ball each to the left (off the line from site 1), and the
//! remaining kickers step right. Feeding the columns of `W` in order yields the
//! columns of the rectified tableau's matrix.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::dynamics::{run_slides, DynamicsError, SlideTrace};
use crate::jdt::{rectify_classical, JdtError};
use crate::tableau::{
    enumerate_standard_tableaux, insert_word, standard_to_row_word, uniform_tableau, Entry,
    Partition, SkewTableau, StandardTableau, TableauError, Word,
};
use crate::wmatrix::{decode_w, encode_w, WMatrix, WMatrixError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RectifyError {
    #[error("token simulation and local formula disagree: {0}")]
    InternalCrossCheckFailure(String),
    #[error("P-tableau still changing after {0} columns")]
    NotStabilized(usize),
    #[error("row {row} of the P-tableau holds {value}, below its row index")]
    EntryBelowRow { row: usize, value: usize },
    #[error("order has shape {order}, but the inner shape is {inner}")]
    ShapeMismatch { order: String, inner: String },
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Codec(#[from] WMatrixError),
    #[error(transparent)]
    Dynamics(#[from] DynamicsError),
    #[error(transparent)]
    Jdt(#[from] JdtError),
}

/// Site occupancies `v_1, v_2, ...`; trailing zeros are implicit.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct CountVector(Vec<u64>);

impl CountVector {
    pub fn new(mut v: Vec<u64>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        CountVector(v)
    }

    /// Value at site `i` (1-based); zero at site 0 and past the support.
    pub fn get(&self, i: usize) -> u64 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Index of the last nonzero site, 0 if none.
    pub fn support(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Values at sites `1..=n`.
    pub fn padded(&self, n: usize) -> Vec<u64> {
        (1..=n).map(|i| self.get(i)).collect()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }
}

impl From<Vec<u64>> for CountVector {
    fn from(v: Vec<u64>) -> Self {
        CountVector::new(v)
    }
}

impl From<&[u64]> for CountVector {
    fn from(v: &[u64]) -> Self {
        CountVector::new(v.to_vec())
    }
}

impl Serialize for CountVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl fmt::Display for CountVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", v.join(","))
    }
}

/// A straight tableau as per-row multiplicity vectors.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PTableauCounts {
    rows: Vec<CountVector>,
}

impl PTableauCounts {
    /// Validates that row `i` holds no value below `i` and that the rows form
    /// a semistandard tableau.
    pub fn new(rows: Vec<CountVector>) -> Result<Self, RectifyError> {
        let mut rows = rows;
        while rows.last().is_some_and(|r| r.total() == 0) {
            rows.pop();
        }
        let p = PTableauCounts { rows };
        p.to_tableau()?;
        Ok(p)
    }

    pub fn empty() -> Self {
        PTableauCounts::default()
    }

    pub fn from_tableau(t: &SkewTableau) -> Result<Self, RectifyError> {
        if !t.is_straight() {
            return Err(TableauError::NotStraight.into());
        }
        let rows = t
            .rows()
            .iter()
            .map(|row| {
                let mut counts = vec![0u64; row.last().copied().unwrap_or(0) as usize];
                for &v in row {
                    counts[v as usize - 1] += 1;
                }
                CountVector::new(counts)
            })
            .collect();
        Ok(PTableauCounts { rows })
    }

    pub fn to_tableau(&self) -> Result<SkewTableau, RectifyError> {
        let mut rows = Vec::with_capacity(self.rows.len());
        for (idx, counts) in self.rows.iter().enumerate() {
            let row_index = idx + 1;
            if let Some(value) = (1..row_index).find(|&j| counts.get(j) > 0) {
                return Err(RectifyError::EntryBelowRow {
                    row: row_index,
                    value,
                });
            }
            let row: Vec<Entry> = (1..=counts.support())
                .flat_map(|j| std::iter::repeat_n(j as Entry, counts.get(j) as usize))
                .collect();
            rows.push(row);
        }
        Ok(SkewTableau::straight(rows)?)
    }

    /// `P_1, ..., P_k`.
    pub fn rows(&self) -> &[CountVector] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_boxes(&self) -> u64 {
        self.rows.iter().map(CountVector::total).sum()
    }
}

impl Serialize for PTableauCounts {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rows.serialize(serializer)
    }
}

impl fmt::Display for PTableauCounts {
    /// Rows of entries separated by ` / `, e.g. `{1,1,1 / 2}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|counts| {
                (1..=counts.support())
                    .flat_map(|j| std::iter::repeat_n(j.to_string(), counts.get(j) as usize))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{{{}}}", rows.join(" / "))
    }
}

/// Sites considered by one step: one past the larger support, so that idle
/// kickers on the last occupied site have somewhere to go.
fn step_len(p: &CountVector, w: &CountVector) -> usize {
    p.support().max(w.support()) + 1
}

fn local_formula(p: &CountVector, w: &CountVector) -> (Vec<i64>, Vec<i64>) {
    let n = step_len(p, w);
    let m = |i: usize| {
        if i == 0 {
            0
        } else {
            p.get(i).min(w.get(i)) as i64
        }
    };
    let mut p_next = vec![0i64; n];
    let mut w_next = vec![0i64; n];
    for i in 0..n {
        let d = m(i + 1) - m(i);
        p_next[i] = d + p.get(i) as i64;
        if i >= 1 {
            w_next[i - 1] = d + w.get(i) as i64;
        }
    }
    w_next[n - 1] = w.get(n) as i64;
    (p_next, w_next)
}

/// Moves individual tokens. Returns occupancies at sites `1..=n` and the
/// number of balls kicked off site 1.
fn token_game(p: &CountVector, w: &CountVector) -> (Vec<u64>, Vec<u64>, u64) {
    let n = step_len(p, w);
    let kickers: Vec<usize> = (1..=n)
        .flat_map(|s| std::iter::repeat_n(s, p.get(s) as usize))
        .collect();
    let balls: Vec<usize> = (1..=n)
        .flat_map(|s| std::iter::repeat_n(s, w.get(s) as usize))
        .collect();
    let mut kicker_to = Vec::with_capacity(kickers.len());
    let mut ball_to: Vec<usize> = balls.clone();
    let mut lost = 0;
    for site in 1..=n {
        let mut here: Vec<usize> = (0..balls.len()).filter(|&b| balls[b] == site).collect();
        for _ in kickers.iter().filter(|&&s| s == site) {
            match here.pop() {
                Some(b) => {
                    kicker_to.push(site);
                    if site == 1 {
                        lost += 1;
                    }
                    ball_to[b] = site - 1;
                }
                None => kicker_to.push(site + 1),
            }
        }
    }
    let mut p_next = vec![0u64; n];
    let mut w_next = vec![0u64; n];
    for s in kicker_to {
        p_next[s - 1] += 1;
    }
    for s in ball_to.into_iter().filter(|&s| s > 0) {
        w_next[s - 1] += 1;
    }
    (p_next, w_next, lost)
}

/// One kicker-and-ball step. The local formula and the token game are both
/// evaluated and must agree.
pub fn kicker_ball_step(
    p: &CountVector,
    w: &CountVector,
) -> Result<(CountVector, CountVector), RectifyError> {
    let (p_formula, w_formula) = local_formula(p, w);
    let (p_tokens, w_tokens, lost) = token_game(p, w);
    let as_signed = |v: &[u64]| v.iter().map(|&x| x as i64).collect::<Vec<_>>();
    if p_formula != as_signed(&p_tokens) || w_formula != as_signed(&w_tokens) {
        return Err(RectifyError::InternalCrossCheckFailure(format!(
            "P={p} W={w}: formula gives ({p_formula:?}, {w_formula:?}), tokens give ({p_tokens:?}, {w_tokens:?})"
        )));
    }
    let p_next = CountVector::new(p_tokens);
    let w_next = CountVector::new(w_tokens);
    if p_next.total() != p.total()
        || w_next.total() + lost != w.total()
        || lost != p.get(1).min(w.get(1))
    {
        return Err(RectifyError::InternalCrossCheckFailure(format!(
            "conservation fails for P={p} W={w}"
        )));
    }
    Ok((p_next, w_next))
}

/// Threads one column through the rows of `p`, bottom row first.
pub fn compose_column(
    p: &PTableauCounts,
    wcol: &CountVector,
) -> Result<(PTableauCounts, CountVector), RectifyError> {
    let mut rows = p.rows.clone();
    let mut w = wcol.clone();
    for row in rows.iter_mut().rev() {
        let (next_row, next_w) = kicker_ball_step(row, &w)?;
        *row = next_row;
        w = next_w;
    }
    Ok((PTableauCounts { rows }, w))
}

/// Feeds the columns of `w` through `p` and assembles the output columns into
/// the rectified matrix. Returns the final `P'` and `W'`.
pub fn rectify_tropical(
    p: &PTableauCounts,
    w: &WMatrix,
) -> Result<(PTableauCounts, WMatrix), RectifyError> {
    let jmax = w.col_stab() + w.row_bound() + p.num_rows();
    let mut current = p.clone();
    let mut previous = p.clone();
    let mut out_columns = Vec::with_capacity(jmax + 1);
    for j in 0..=jmax {
        let (next, out) = compose_column(&current, &CountVector::new(w.column(j)))?;
        previous = std::mem::replace(&mut current, next);
        out_columns.push(out);
    }
    if current != previous {
        return Err(RectifyError::NotStabilized(jmax + 1));
    }
    let nrows = out_columns
        .iter()
        .map(CountVector::support)
        .max()
        .unwrap_or(0);
    let columns: Vec<Vec<u64>> = out_columns.iter().map(|c| c.padded(nrows)).collect();
    Ok((current, WMatrix::from_columns(&columns, nrows)))
}

/// All four edges of the square relating slides, row insertion and the
/// kicker-and-ball map, for one tableau and one slide order.
#[derive(Debug, Clone, Serialize)]
pub struct CommuteReport {
    pub row_word: Word,
    /// Rows of the vacated outside corners, one per slide.
    pub exit_rows: Vec<usize>,
    /// Matrix after all slides.
    pub w_slides: WMatrix,
    /// Every slide, with its path grid.
    pub trace: SlideTrace,
    /// `insert_word(row_word)`.
    pub p: PTableauCounts,
    /// `insert_word(exit_rows)`.
    pub p_prime: PTableauCounts,
    /// Output of [`rectify_tropical`] on `(p, W)`.
    pub bottom_p: PTableauCounts,
    pub bottom_w: WMatrix,
    /// Classical rectification along the same order.
    pub classical: SkewTableau,
    pub classical_exit_rows: Vec<usize>,
    pub mismatches: Vec<String>,
}

impl CommuteReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn verify_commute(
    t: &SkewTableau,
    order: &StandardTableau,
) -> Result<CommuteReport, RectifyError> {
    if order.shape() != t.inner() {
        return Err(RectifyError::ShapeMismatch {
            order: order.shape().to_string(),
            inner: t.inner().to_string(),
        });
    }
    let w = encode_w(t);
    let row_word = standard_to_row_word(order);
    let slide_rows: Vec<usize> = row_word.letters().iter().map(|&r| r as usize).collect();
    let trace = run_slides(&w, &slide_rows)?;
    let exit_rows = trace.exit_rows();
    let w_slides = trace.final_w().clone();

    let p = PTableauCounts::from_tableau(&insert_word(&row_word))?;
    let exit_word = Word::new(exit_rows.iter().map(|&r| r as Entry).collect())?;
    let p_prime = PTableauCounts::from_tableau(&insert_word(&exit_word))?;
    let (bottom_p, bottom_w) = rectify_tropical(&p, &w)?;
    let (classical, classical_exit_rows) = rectify_classical(t, order)?;

    let mut mismatches = Vec::new();
    if bottom_p != p_prime {
        mismatches.push(format!(
            "P': kicker-and-ball gives {bottom_p}, row insertion of exit rows gives {p_prime}"
        ));
    }
    if bottom_w != w_slides {
        mismatches.push(format!(
            "W': kicker-and-ball gives\n{bottom_w}slides give\n{w_slides}"
        ));
    }
    match decode_w(&w_slides) {
        Ok(decoded) if decoded == classical => {}
        Ok(decoded) => mismatches.push(format!(
            "slides decode to\n{decoded}classical gives\n{classical}"
        )),
        Err(e) => mismatches.push(format!("slide output does not decode: {e}")),
    }
    if classical_exit_rows != exit_rows {
        mismatches.push(format!(
            "exit rows: slides {exit_rows:?}, classical {classical_exit_rows:?}"
        ));
    }
    Ok(CommuteReport {
        row_word,
        exit_rows,
        w_slides,
        trace,
        p,
        p_prime,
        bottom_p,
        bottom_w,
        classical,
        classical_exit_rows,
        mismatches,
    })
}

/// Standard tableaux of one shape whose row word does not insert to the
/// uniform tableau.
#[derive(Debug, Clone, Serialize)]
pub struct UniquenessReport {
    pub shape: Partition,
    pub tableaux_checked: usize,
    pub failures: Vec<UniquenessFailure>,
}

#[derive(Debug, Clone, Serialize)]
pub struct UniquenessFailure {
    pub order: StandardTableau,
    pub inserted: SkewTableau,
}

impl UniquenessReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn check_uniqueness_shape(
    mu: &Partition,
    bound: usize,
) -> Result<UniquenessReport, RectifyError> {
    let expected = uniform_tableau(mu);
    let orders = enumerate_standard_tableaux(mu, bound)?;
    let failures = orders
        .iter()
        .filter_map(|s| {
            let inserted = insert_word(&standard_to_row_word(s));
            (inserted != expected).then(|| UniquenessFailure {
                order: s.clone(),
                inserted,
            })
        })
        .collect();
    Ok(UniquenessReport {
        shape: mu.clone(),
        tableaux_checked: orders.len(),
        failures,
    })
}

/// Renders a kicker-and-ball configuration as boxes, `k` for each kicker and
/// `∘` for each ball, kickers first within a box.
pub fn render_frame(p: &CountVector, w: &CountVector, sites: usize) -> String {
    let cells: Vec<String> = (1..=sites)
        .map(|s| {
            let mut cell = "k".repeat(p.get(s) as usize);
            cell.push_str(&"∘".repeat(w.get(s) as usize));
            cell
        })
        .collect();
    let width = cells
        .iter()
        .map(|c| c.chars().count())
        .max()
        .unwrap_or(0)
        .max(1);
    let body: Vec<String> = cells.iter().map(|c| format!("{c:^width$}")).collect();
    format!("|{}|...", body.join("|"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::{SkewShape, StandardTableau};

    fn cv(v: &[u64]) -> CountVector {
        CountVector::from(v)
    }

    fn ptab(rows: &[&[Entry]]) -> PTableauCounts {
        PTableauCounts::from_tableau(
            &SkewTableau::straight(rows.iter().map(|r| r.to_vec()).collect()).unwrap(),
        )
        .unwrap()
    }

    fn running() -> SkewTableau {
        let shape = SkewShape::new(
            Partition::new(vec![5, 4, 2]).unwrap(),
            Partition::new(vec![3, 1]).unwrap(),
        )
        .unwrap();
        SkewTableau::new(shape, vec![vec![1, 2], vec![1, 2, 3], vec![1, 2]]).unwrap()
    }

    #[test]
    fn kicker_ball_worked_example() {
        let (p, w) = kicker_ball_step(&cv(&[0, 2, 0, 2, 1]), &cv(&[0, 3, 1, 1, 0])).unwrap();
        assert_eq!(p, cv(&[0, 2, 0, 1, 1, 1]));
        assert_eq!(w, cv(&[2, 1, 2, 0, 0]));
    }

    #[test]
    fn single_row_moves_right() {
        let (p, w) = kicker_ball_step(&cv(&[0, 1]), &cv(&[1, 0, 0])).unwrap();
        assert_eq!(p, cv(&[0, 0, 1]));
        assert_eq!(w, cv(&[1]));
    }

    #[test]
    fn no_kickers_no_motion() {
        let (p, w) = kicker_ball_step(&cv(&[]), &cv(&[2, 0, 3])).unwrap();
        assert_eq!(p, cv(&[]));
        assert_eq!(w, cv(&[2, 0, 3]));
    }

    #[test]
    fn balls_leave_from_site_one() {
        let (p, w) = kicker_ball_step(&cv(&[2]), &cv(&[3, 1])).unwrap();
        assert_eq!(p, cv(&[2]));
        assert_eq!(w, cv(&[1, 1]));
    }

    #[test]
    fn column_composition_chain() {
        let (p, w) = compose_column(&ptab(&[&[1, 1, 1], &[2]]), &cv(&[1, 0, 0])).unwrap();
        assert_eq!(p, ptab(&[&[1, 2, 2], &[3]]));
        assert_eq!(w, cv(&[]));
        let (p, w) = compose_column(&p, &cv(&[1, 0, 1])).unwrap();
        assert_eq!(p, ptab(&[&[1, 2, 3], &[3]]));
        assert_eq!(w, cv(&[1]));
        let (p, w) = compose_column(&PTableauCounts::empty(), &cv(&[1, 0, 2])).unwrap();
        assert_eq!((p, w), (PTableauCounts::empty(), cv(&[1, 0, 2])));
    }

    #[test]
    fn tropical_rectification_of_running_example() {
        let (p, w) = rectify_tropical(&ptab(&[&[1, 1, 1], &[2]]), &encode_w(&running())).unwrap();
        assert_eq!(p, ptab(&[&[1, 2, 3], &[3]]));
        let expected = SkewTableau::straight(vec![vec![1, 1, 1, 2], vec![2, 2, 3]]).unwrap();
        assert_eq!(w, encode_w(&expected));
        assert_eq!(
            w.window(3, 4),
            vec![vec![0, 1, 1, 1], vec![0, 0, 2, 3], vec![0, 0, 0, 0]]
        );

        let enc = encode_w(&running());
        assert_eq!(
            rectify_tropical(&PTableauCounts::empty(), &enc).unwrap(),
            (PTableauCounts::empty(), enc)
        );
    }

    #[test]
    fn commuting_square() {
        let t = running();
        let order = StandardTableau::from_rows(vec![vec![1, 2, 3], vec![4]]).unwrap();
        let report = verify_commute(&t, &order).unwrap();
        assert!(report.passed(), "{:?}", report.mismatches);
        assert_eq!(report.exit_rows, vec![3, 1, 2, 3]);
        assert_eq!(report.p, ptab(&[&[1, 1, 1], &[2]]));
        assert_eq!(report.bottom_p, ptab(&[&[1, 2, 3], &[3]]));

        let other = StandardTableau::from_rows(vec![vec![1, 2, 4], vec![3]]).unwrap();
        let second = verify_commute(&t, &other).unwrap();
        assert!(second.passed());
        assert_eq!(second.p, report.p);
        assert_eq!(
            (second.bottom_p, second.bottom_w),
            (report.bottom_p, report.bottom_w)
        );
    }

    #[test]
    fn uniqueness_for_small_shapes() {
        for parts in [vec![3, 1], vec![1], vec![2, 2]] {
            let report = check_uniqueness_shape(&Partition::new(parts).unwrap(), 10).unwrap();
            assert!(report.passed());
        }
        assert_eq!(
            check_uniqueness_shape(&Partition::new(vec![3, 1]).unwrap(), 10)
                .unwrap()
                .tableaux_checked,
            3
        );
    }

    #[test]
    fn p_tableau_validation() {
        assert!(PTableauCounts::new(vec![cv(&[3]), cv(&[0, 1])]).is_ok());
        assert_eq!(
            PTableauCounts::new(vec![cv(&[3]), cv(&[1])]),
            Err(RectifyError::EntryBelowRow { row: 2, value: 1 })
        );
        assert!(PTableauCounts::new(vec![cv(&[1]), cv(&[0, 2])]).is_err());
        assert_eq!(ptab(&[&[1, 1, 1], &[2]]).to_string(), "{1,1,1 / 2}");
    }

    #[test]
    fn frames() {
        assert_eq!(
            render_frame(&cv(&[0, 2, 0, 2, 1]), &cv(&[0, 3, 1, 1, 0]), 7),
            "|     |kk∘∘∘|  ∘  | kk∘ |  k  |     |     |..."
        );
    }
}

//! Semifield-generic evaluation of the subtraction-free step and the matrix
//! identities behind it.
//!
//! Two instances are provided: exact positive rationals and min-plus
//! integers. Matrices carry the additive identity of their semifield (`0`
//! resp. `+inf`) as the "empty" entry, so one product routine serves both.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::rectify::{compose_column, CountVector, PTableauCounts, RectifyError};
use crate::tableau::{insert_word, Entry, TableauError, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemiringError {
    #[error("division by the additive identity at index {0}")]
    DivisionUndefined(usize),
    #[error("truncation {n} too small, need at least {needed}")]
    TruncationTooSmall { needed: usize, n: usize },
    #[error("non-positive value at ({i},{j})")]
    NonPositiveResult { i: usize, j: usize },
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Rectify(#[from] RectifyError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

/// A commutative semiring in which every non-zero element is invertible.
pub trait Semifield: Clone + PartialEq + fmt::Debug + fmt::Display {
    /// Additive identity; absorbing for multiplication.
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// `None` when `other` is the additive identity.
    fn div(&self, other: &Self) -> Option<Self>;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }
}

impl Semifield for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Option<Self> {
        (!Zero::is_zero(other)).then(|| self / other)
    }
}

/// The min-plus semifield on `Z ∪ {+inf}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MinPlus {
    Finite(i64),
    Infinity,
}

impl MinPlus {
    pub fn finite(self) -> Option<i64> {
        match self {
            MinPlus::Finite(v) => Some(v),
            MinPlus::Infinity => None,
        }
    }
}

impl From<i64> for MinPlus {
    fn from(v: i64) -> Self {
        MinPlus::Finite(v)
    }
}

impl fmt::Display for MinPlus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinPlus::Finite(v) => write!(f, "{v}"),
            MinPlus::Infinity => write!(f, "inf"),
        }
    }
}

impl Semifield for MinPlus {
    fn zero() -> Self {
        MinPlus::Infinity
    }
    fn one() -> Self {
        MinPlus::Finite(0)
    }
    fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (MinPlus::Finite(a), MinPlus::Finite(b)) => MinPlus::Finite(*a.min(b)),
            (MinPlus::Infinity, x) | (x, MinPlus::Infinity) => *x,
        }
    }
    fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (MinPlus::Finite(a), MinPlus::Finite(b)) => MinPlus::Finite(a + b),
            _ => MinPlus::Infinity,
        }
    }
    fn div(&self, other: &Self) -> Option<Self> {
        match (self, other) {
            (_, MinPlus::Infinity) => None,
            (MinPlus::Infinity, _) => Some(MinPlus::Infinity),
            (MinPlus::Finite(a), MinPlus::Finite(b)) => Some(MinPlus::Finite(a - b)),
        }
    }
}

/// Square matrix over a semifield.
#[derive(Debug, Clone, PartialEq)]
pub struct GenMatrix<S> {
    n: usize,
    entries: Vec<S>,
}

impl<S: Semifield> GenMatrix<S> {
    pub fn zeros(n: usize) -> Self {
        GenMatrix {
            n,
            entries: vec![S::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 1..=n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// 1-based access.
    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: S) {
        self.entries[(i - 1) * self.n + (j - 1)] = value;
    }

    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "matrix sizes differ");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for m in 0..n {
                let a = &self.entries[i * n + m];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[m * n + j];
                    if !b.is_zero() {
                        let cell = &mut out.entries[i * n + j];
                        *cell = cell.add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    /// Upper bidiagonal `E(I)`: `I_i` on the diagonal, one above it.
    pub fn upper_bidiagonal(diag: &[S], n: usize) -> Self {
        Self::block_upper_bidiagonal(1, diag, n)
    }

    /// `E_k`: the identity on the first `k - 1` positions, then `E` built from
    /// `diag[k-1..]`. Missing diagonal entries are one.
    pub fn block_upper_bidiagonal(k: usize, diag: &[S], n: usize) -> Self {
        let mut m = Self::identity(n);
        for i in k..=n {
            m.set(i, i, diag.get(i - 1).cloned().unwrap_or_else(S::one));
            if i < n {
                m.set(i, i + 1, S::one());
            }
        }
        m
    }

    /// Inverse of the unipotent lower bidiagonal matrix with `-V_i` below the
    /// diagonal: entry `(i,j)` for `i > j` is `V_j V_{j+1} ... V_{i-1}`.
    pub fn lower_from(v: &[S], n: usize) -> Self {
        let mut m = Self::identity(n);
        for j in 1..=n {
            let mut acc = S::one();
            for i in j + 1..=n {
                acc = acc.mul(v.get(i - 2).unwrap_or(&S::zero()));
                m.set(i, j, acc.clone());
            }
        }
        m
    }
}

impl<S: Semifield> fmt::Display for GenMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            let row: Vec<String> = (1..=self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// One column step of the subtraction-free map over `S`:
///
/// ```text
/// I'_{i+1} = (I_{i+1} + V_{i+1}) / (I_i + V_i) * I_i
/// V'_i     = (I_{i+1} + V_{i+1}) / (I_i + V_i) * V_i
/// ```
///
/// with `I_0 = 1`, `V_0 = 0`. Inputs have length `n`; returns `I'_1..I'_n`
/// and `V'_1..V'_{n-1}`.
pub fn local_step_generic<S: Semifield>(
    i: &[S],
    v: &[S],
) -> Result<(Vec<S>, Vec<S>), SemiringError> {
    if i.len() != v.len() {
        return Err(SemiringError::LengthMismatch {
            expected: i.len(),
            found: v.len(),
        });
    }
    let n = i.len();
    let sum = |k: usize| {
        if k == 0 {
            S::one()
        } else {
            i[k - 1].add(&v[k - 1])
        }
    };
    let mut i_next = Vec::with_capacity(n);
    let mut v_next = Vec::with_capacity(n.saturating_sub(1));
    for k in 0..n {
        let ratio = sum(k + 1)
            .div(&sum(k))
            .ok_or(SemiringError::DivisionUndefined(k))?;
        let i_k = if k == 0 { S::one() } else { i[k - 1].clone() };
        i_next.push(ratio.mul(&i_k));
        if k >= 1 {
            v_next.push(ratio.mul(&v[k - 1]));
        }
    }
    Ok((i_next, v_next))
}

/// Entrywise comparison of two matrices on a window of rows.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub n: usize,
    /// Rows (1-based) where both sides were compared.
    pub checked_rows: Vec<usize>,
    /// Rows affected by the truncation and therefore not compared.
    pub excluded_rows: Vec<usize>,
    pub violations: Vec<EntryMismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryMismatch {
    pub row: usize,
    pub col: usize,
    pub lhs: String,
    pub rhs: String,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn compare_rows<S: Semifield>(
    lhs: &GenMatrix<S>,
    rhs: &GenMatrix<S>,
    safe_rows: usize,
) -> IdentityReport {
    let n = lhs.size();
    let mut violations = Vec::new();
    for i in 1..=safe_rows {
        for j in 1..=n {
            if lhs.get(i, j) != rhs.get(i, j) {
                violations.push(EntryMismatch {
                    row: i,
                    col: j,
                    lhs: lhs.get(i, j).to_string(),
                    rhs: rhs.get(i, j).to_string(),
                });
            }
        }
    }
    IdentityReport {
        n,
        checked_rows: (1..=safe_rows).collect(),
        excluded_rows: (safe_rows + 1..=n).collect(),
        violations,
    }
}

/// Steps `(I, V)` once and checks `E(I) L(V) = L(V') E(I')`, where `L` is
/// the inverse of the bidiagonal `F`. The last row is excluded.
pub fn verify_lax<S: Semifield>(
    i: &[S],
    v: &[S],
    n: usize,
) -> Result<IdentityReport, SemiringError> {
    if i.len() != n || v.len() != n {
        return Err(SemiringError::LengthMismatch {
            expected: n,
            found: i.len().min(v.len()),
        });
    }
    if n < 2 {
        return Err(SemiringError::TruncationTooSmall { needed: 2, n });
    }
    let (i_next, v_next) = local_step_generic(i, v)?;
    let lhs = GenMatrix::upper_bidiagonal(i, n).product(&GenMatrix::lower_from(v, n));
    let rhs = GenMatrix::lower_from(&v_next, n).product(&GenMatrix::upper_bidiagonal(&i_next, n));
    Ok(compare_rows(&lhs, &rhs, n - 1))
}

pub fn verify_lax_rational(
    i: &[BigRational],
    v: &[BigRational],
    n: usize,
) -> Result<IdentityReport, SemiringError> {
    if let Some(k) = i
        .iter()
        .chain(v)
        .position(|x| *x <= <BigRational as Zero>::zero())
    {
        return Err(SemiringError::NonPositiveResult {
            i: k % n.max(1) + 1,
            j: 0,
        });
    }
    verify_lax(i, v, n)
}

/// Seeded positive rationals with numerators and denominators in `1..=9`.
pub fn random_positive_rationals(rng: &mut ChaCha8Rng, len: usize) -> Vec<BigRational> {
    (0..len)
        .map(|_| {
            BigRational::new(
                BigInt::from(rng.random_range(1..=9u32)),
                BigInt::from(rng.random_range(1..=9u32)),
            )
        })
        .collect()
}

/// An `(I, V)` pair of length `n` drawn from `seed`.
pub fn random_lax_instance(seed: u64, n: usize) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let i = random_positive_rationals(&mut rng, n);
    let v = random_positive_rationals(&mut rng, n);
    (i, v)
}

fn tropical(v: &[u64]) -> Vec<MinPlus> {
    v.iter().map(|&x| MinPlus::Finite(x as i64)).collect()
}

/// `E_k` built from row `k` of `p`: position `i >= k` carries the number of
/// `i`'s in that row.
fn tableau_factor(p: &PTableauCounts, k: usize, n: usize) -> GenMatrix<MinPlus> {
    let counts = p
        .rows()
        .get(k - 1)
        .map(|r| r.padded(n))
        .unwrap_or_else(|| vec![0; n]);
    GenMatrix::block_upper_bidiagonal(k, &tropical(&counts), n)
}

fn tableau_product(p: &PTableauCounts, factors: usize, n: usize) -> GenMatrix<MinPlus> {
    // Folded from the right so the sparse factor is always the left operand.
    (1..=factors).rev().fold(GenMatrix::identity(n), |acc, k| {
        tableau_factor(p, k, n).product(&acc)
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorizationReport {
    pub word: Word,
    pub p: PTableauCounts,
    pub identity: IdentityReport,
}

impl FactorizationReport {
    pub fn passed(&self) -> bool {
        self.identity.passed()
    }
}

/// Compares `E(Q_l) ... E(Q_1)`, with `Q_j` the unit vector at `alphas[j]`,
/// against `E_1(P_1) ... E_l(P_l)` for `P` the insertion tableau of `alphas`.
pub fn verify_factorization_tropical(
    alphas: &[Entry],
    n: usize,
) -> Result<FactorizationReport, SemiringError> {
    let len = alphas.len();
    let largest = alphas.iter().copied().max().unwrap_or(0) as usize;
    if largest + len > n {
        return Err(SemiringError::TruncationTooSmall {
            needed: largest + len,
            n,
        });
    }
    let word = Word::new(alphas.to_vec())?;
    let p = PTableauCounts::from_tableau(&insert_word(&word))?;
    let lhs = alphas.iter().rev().fold(GenMatrix::identity(n), |acc, &a| {
        let mut q = vec![0u64; n];
        q[a as usize - 1] = 1;
        acc.product(&GenMatrix::upper_bidiagonal(&tropical(&q), n))
    });
    let rhs = tableau_product(&p, len, n);
    Ok(FactorizationReport {
        word,
        p,
        identity: compare_rows(&lhs, &rhs, n),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ExchangeReport {
    pub p: PTableauCounts,
    pub w: CountVector,
    pub p_next: PTableauCounts,
    pub w_next: CountVector,
    pub identity: IdentityReport,
}

impl ExchangeReport {
    pub fn passed(&self) -> bool {
        self.identity.passed()
    }
}

/// Pushes `w` through `p` and checks
/// `E_1(P_1) ... E_k(P_k) L(W) = L(W') E_1(P'_1) ... E_k(P'_k)` over min-plus
/// on rows `1..=n-k`.
pub fn verify_exchange_tropical(
    p: &PTableauCounts,
    w: &CountVector,
    n: usize,
) -> Result<ExchangeReport, SemiringError> {
    let (p_next, w_next) = compose_column(p, w)?;
    let k = p.num_rows();
    let widest = p
        .rows()
        .iter()
        .chain(p_next.rows())
        .map(CountVector::support)
        .chain([w.support() + 1, w_next.support() + 1, k + 1])
        .max()
        .unwrap_or(0);
    if widest > n {
        return Err(SemiringError::TruncationTooSmall { needed: widest, n });
    }
    let lhs = tableau_product(p, k, n).product(&GenMatrix::lower_from(&tropical(&w.padded(n)), n));
    let rhs = GenMatrix::lower_from(&tropical(&w_next.padded(n)), n)
        .product(&tableau_product(&p_next, k, n));
    Ok(ExchangeReport {
        p: p.clone(),
        w: w.clone(),
        p_next,
        w_next,
        identity: compare_rows(&lhs, &rhs, n - k),
    })
}

/// Values `f_{i,j}` on rows `0..rows` and columns `0..cols`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauGrid {
    cells: Vec<Vec<BigRational>>,
}

impl TauGrid {
    pub fn new(cells: Vec<Vec<BigRational>>) -> Result<Self, SemiringError> {
        let width = cells.first().map_or(0, Vec::len);
        for (i, row) in cells.iter().enumerate() {
            if row.len() != width {
                return Err(SemiringError::LengthMismatch {
                    expected: width,
                    found: row.len(),
                });
            }
            if let Some(j) = row.iter().position(|x| *x <= <BigRational as Zero>::zero()) {
                return Err(SemiringError::NonPositiveResult { i, j });
            }
        }
        Ok(TauGrid { cells })
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        TauGrid {
            cells: vec![vec![<BigRational as One>::one(); cols]; rows],
        }
    }

    pub fn random(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Self {
        TauGrid {
            cells: (0..rows)
                .map(|_| random_positive_rationals(rng, cols))
                .collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.cells.len()
    }

    pub fn cols(&self) -> usize {
        self.cells.first().map_or(0, Vec::len)
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.cells[i][j]
    }

    pub fn cells(&self) -> &[Vec<BigRational>] {
        &self.cells
    }
}

/// Solves
/// `f^t_{i+1,j+1} f^{t+1}_{i-1,j} - f^t_{i,j} f^{t+1}_{i,j+1} + f^t_{i,j+1} f^{t+1}_{i,j} = 0`
/// for `f^{t+1}_{i,j+1}`, sweeping rows top to bottom and columns left to
/// right. Row 0 and column 0 of the next slice are supplied; the result has
/// one row fewer than `f`, since its last row would need `f^t` below the grid.
pub fn kp_tau_step(
    f: &TauGrid,
    top: &[BigRational],
    left: &[BigRational],
) -> Result<TauGrid, SemiringError> {
    let (rows, cols) = (f.rows(), f.cols());
    if rows < 2 || cols < 1 {
        return Err(SemiringError::TruncationTooSmall { needed: 2, n: rows });
    }
    let out_rows = rows - 1;
    if top.len() != cols {
        return Err(SemiringError::LengthMismatch {
            expected: cols,
            found: top.len(),
        });
    }
    if left.len() != out_rows {
        return Err(SemiringError::LengthMismatch {
            expected: out_rows,
            found: left.len(),
        });
    }
    let mut next = vec![vec![<BigRational as Zero>::zero(); cols]; out_rows];
    next[0] = top.to_vec();
    for i in 1..out_rows {
        next[i][0] = left[i].clone();
        for j in 0..cols - 1 {
            let value = (f.get(i + 1, j + 1) * &next[i - 1][j] + f.get(i, j + 1) * &next[i][j])
                / f.get(i, j);
            if value <= <BigRational as Zero>::zero() {
                return Err(SemiringError::NonPositiveResult { i, j: j + 1 });
            }
            next[i][j + 1] = value;
        }
    }
    TauGrid::new(next)
}

/// Left-hand side of the bilinear relation at `(i,j)`, for
/// `1 <= i < next.rows()`, `j + 1 < next.cols()`.
pub fn kp_residual(f: &TauGrid, next: &TauGrid, i: usize, j: usize) -> BigRational {
    f.get(i + 1, j + 1) * next.get(i - 1, j) - f.get(i, j) * next.get(i, j + 1)
        + f.get(i, j + 1) * next.get(i, j)
}

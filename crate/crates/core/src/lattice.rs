//! Exact integer vectors and matrices, the componentwise order on `N^n`, and
//! term orders.
//!
//! Public values carry arbitrary-precision coordinates. Enumeration-heavy
//! algorithms elsewhere in the crate work on `i64` copies obtained through
//! [`IntVector::to_i64`]; the conversion fails loudly instead of truncating.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An integer vector of fixed dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        IntVector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        IntVector(vec![BigInt::zero(); dim])
    }

    /// The `i`-th standard basis vector of `Z^dim`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = BigInt::from(1);
        v
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        IntVector(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    pub fn coord_sum(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &IntVector) -> Result<IntVector> {
        check_dims(self.dim(), other.dim())?;
        Ok(IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &IntVector) -> Result<IntVector> {
        check_dims(self.dim(), other.dim())?;
        Ok(IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn scale(&self, k: &BigInt) -> IntVector {
        IntVector(self.0.iter().map(|c| c * k).collect())
    }

    pub fn neg(&self) -> IntVector {
        IntVector(self.0.iter().map(|c| -c).collect())
    }

    /// Machine-word copy of the coordinates, or [`Error::TooLarge`].
    pub fn to_i64(&self) -> Result<Vec<i64>> {
        self.0
            .iter()
            .map(|c| c.to_i64().ok_or_else(|| Error::TooLarge(self.to_string())))
            .collect()
    }

    pub(crate) fn require_nonnegative(&self) -> Result<()> {
        if self.is_nonnegative() {
            Ok(())
        } else {
            Err(Error::Negative(self.to_string()))
        }
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(v: Vec<i64>) -> Self {
        IntVector::from_i64s(&v)
    }
}

impl From<&[i64]> for IntVector {
    fn from(v: &[i64]) -> Self {
        IntVector::from_i64s(v)
    }
}

impl<const N: usize> From<[i64; N]> for IntVector {
    fn from(v: [i64; N]) -> Self {
        IntVector::from_i64s(&v)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        check_dims(rows * cols, entries.len())?;
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            check_dims(cols, r.len())?;
            entries.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        Ok(IntMatrix { rows: rows.len(), cols, entries })
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[IntVector]) -> Result<Self> {
        let rows = columns.first().ok_or(Error::Empty("matrix columns"))?.dim();
        let cols = columns.len();
        let mut entries = vec![BigInt::zero(); rows * cols];
        for (j, c) in columns.iter().enumerate() {
            check_dims(rows, c.dim())?;
            for (i, x) in c.coords().iter().enumerate() {
                entries[i * cols + j] = x.clone();
            }
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn column(&self, c: usize) -> IntVector {
        IntVector((0..self.rows).map(|r| self.entry(r, c).clone()).collect())
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, x: &IntVector) -> Result<IntVector> {
        check_dims(self.cols, x.dim())?;
        Ok(IntVector(
            (0..self.rows)
                .map(|r| self.row(r).iter().zip(x.coords()).map(|(a, b)| a * b).sum())
                .collect(),
        ))
    }

    /// Appends one column on the right.
    pub fn with_column(&self, extra: &IntVector) -> Result<IntMatrix> {
        check_dims(self.rows, extra.dim())?;
        let mut cols: Vec<IntVector> = (0..self.cols).map(|c| self.column(c)).collect();
        cols.push(extra.clone());
        if self.rows == 0 {
            return Ok(IntMatrix { rows: 0, cols: self.cols + 1, entries: Vec::new() });
        }
        IntMatrix::from_columns(&cols)
    }
}

/// `a <= b` coordinatewise.
pub fn natural_leq(a: &IntVector, b: &IntVector) -> Result<bool> {
    check_dims(a.dim(), b.dim())?;
    Ok(a.coords().iter().zip(b.coords()).all(|(x, y)| x <= y))
}

pub(crate) fn leq_i64(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// The elements of `vs` that are minimal for the componentwise order, sorted
/// lexicographically.
pub fn minimals(vs: &[IntVector]) -> Result<Vec<IntVector>> {
    let Some(first) = vs.first() else {
        return Ok(Vec::new());
    };
    let dim = first.dim();
    for v in vs {
        check_dims(dim, v.dim())?;
    }
    let mut sorted: Vec<(BigInt, &IntVector)> = vs.iter().map(|v| (v.coord_sum(), v)).collect();
    sorted.sort();
    sorted.dedup_by(|a, b| a.1 == b.1);
    let mut kept: Vec<&IntVector> = Vec::new();
    for (_, v) in sorted {
        let dominated = kept
            .iter()
            .any(|k| k.coords().iter().zip(v.coords()).all(|(x, y)| x <= y));
        if !dominated {
            kept.push(v);
        }
    }
    let mut out: Vec<IntVector> = kept.into_iter().cloned().collect();
    out.sort();
    Ok(out)
}

/// Machine-word variant of [`minimals`]; same contract.
pub(crate) fn minimals_i64(mut vs: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    vs.sort_by(|a, b| {
        let sa: i128 = a.iter().map(|&x| x as i128).sum();
        let sb: i128 = b.iter().map(|&x| x as i128).sum();
        sa.cmp(&sb).then_with(|| a.cmp(b))
    });
    vs.dedup();
    let mut kept: Vec<Vec<i64>> = Vec::new();
    for v in vs {
        if !kept.iter().any(|k| leq_i64(k, &v)) {
            kept.push(v);
        }
    }
    kept.sort();
    kept
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TermOrderKind {
    Lex,
    Grlex,
    Grevlex,
}

/// A term order on `N^n`: one of the three classical orders applied after a
/// permutation of the variables. `permutation[0]` is the most significant
/// variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    kind: TermOrderKind,
    permutation: Vec<usize>,
}

impl TermOrder {
    pub fn new(kind: TermOrderKind, nvars: usize) -> Self {
        TermOrder { kind, permutation: (0..nvars).collect() }
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(TermOrderKind::Lex, nvars)
    }

    pub fn grlex(nvars: usize) -> Self {
        Self::new(TermOrderKind::Grlex, nvars)
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::new(TermOrderKind::Grevlex, nvars)
    }

    pub fn with_permutation(kind: TermOrderKind, permutation: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; permutation.len()];
        for &p in &permutation {
            if p >= seen.len() || seen[p] {
                return Err(Error::Precondition(format!(
                    "{permutation:?} is not a permutation"
                )));
            }
            seen[p] = true;
        }
        Ok(TermOrder { kind, permutation })
    }

    pub fn kind(&self) -> TermOrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.permutation.len()
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    /// Same kind over a different number of variables (identity permutation).
    pub fn resized(&self, nvars: usize) -> Self {
        Self::new(self.kind, nvars)
    }

    /// Compares exponent slices, given their total degrees.
    pub(crate) fn cmp_with_degree<T: Ord, D: Ord>(&self, a: &[T], b: &[T], da: D, db: D) -> Ordering {
        match self.kind {
            TermOrderKind::Lex => self.lex_part(a, b),
            TermOrderKind::Grlex => da.cmp(&db).then_with(|| self.lex_part(a, b)),
            TermOrderKind::Grevlex => da.cmp(&db).then_with(|| {
                for &i in self.permutation.iter().rev() {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }

    fn lex_part<T: Ord>(&self, a: &[T], b: &[T]) -> Ordering {
        for &i in &self.permutation {
            match a[i].cmp(&b[i]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    pub(crate) fn cmp_u64(&self, a: &[u64], b: &[u64]) -> Ordering {
        let da: u128 = a.iter().map(|&x| x as u128).sum();
        let db: u128 = b.iter().map(|&x| x as u128).sum();
        self.cmp_with_degree(a, b, da, db)
    }
}

/// Compares two exponent vectors under `order`.
pub fn term_compare(order: &TermOrder, a: &IntVector, b: &IntVector) -> Result<Ordering> {
    check_dims(a.dim(), b.dim())?;
    check_dims(order.nvars(), a.dim())?;
    a.require_nonnegative()?;
    b.require_nonnegative()?;
    Ok(order.cmp_with_degree(a.coords(), b.coords(), a.coord_sum(), b.coord_sum()))
}

pub(crate) fn gcd_i64(values: impl IntoIterator<Item = i64>) -> i64 {
    values
        .into_iter()
        .fold(0i64, |g, v| num_integer::Integer::gcd(&g, &v))
}

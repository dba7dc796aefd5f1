//! Max-min lattice algebra over `[0, 1]`-valued vectors and square matrices.
//!
//! Composition replaces `(+, *)` with `(max, min)`. None of the operations
//! here create values that were not already among the inputs, 0 or 1
//! (complement aside), which is what keeps every fixpoint iteration finite.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use crate::value::PossValue;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("{op}: dimension mismatch ({left} vs {right})")]
    DimensionMismatch {
        op: &'static str,
        left: usize,
        right: usize,
    },
    #[error("dimension must be positive")]
    Empty,
    #[error("matrix is not square: row {row} has {len} entries, expected {dim}")]
    NotSquare { row: usize, len: usize, dim: usize },
}

fn check_dims(op: &'static str, left: usize, right: usize) -> Result<(), AlgebraError> {
    if left == right {
        Ok(())
    } else {
        Err(AlgebraError::DimensionMismatch { op, left, right })
    }
}

/// A column vector of possibility degrees indexed by state.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FuzzyVector {
    entries: Vec<PossValue>,
}

impl FuzzyVector {
    pub fn new(entries: Vec<PossValue>) -> Result<Self, AlgebraError> {
        if entries.is_empty() {
            return Err(AlgebraError::Empty);
        }
        Ok(FuzzyVector { entries })
    }

    pub fn constant(dim: usize, value: PossValue) -> Self {
        assert!(dim > 0, "vector dimension must be positive");
        FuzzyVector {
            entries: vec![value; dim],
        }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::constant(dim, PossValue::ZERO)
    }

    pub fn ones(dim: usize) -> Self {
        Self::constant(dim, PossValue::ONE)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn as_slice(&self) -> &[PossValue] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &PossValue> + '_ {
        self.entries.iter()
    }

    pub fn into_vec(self) -> Vec<PossValue> {
        self.entries
    }

    /// Entrywise maximum.
    pub fn join(&self, other: &Self) -> Result<Self, AlgebraError> {
        check_dims("join", self.dim(), other.dim())?;
        Ok(self.zip_with(other, PossValue::max))
    }

    /// Entrywise minimum.
    pub fn meet(&self, other: &Self) -> Result<Self, AlgebraError> {
        check_dims("meet", self.dim(), other.dim())?;
        Ok(self.zip_with(other, PossValue::min))
    }

    /// `1 - v` entrywise.
    pub fn complement(&self) -> Self {
        FuzzyVector {
            entries: self.entries.iter().map(|v| v.complement()).collect(),
        }
    }

    /// Entrywise `self <= other`.
    pub fn le(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    pub fn max_entry(&self) -> PossValue {
        self.entries.iter().copied().fold(PossValue::ZERO, PossValue::max)
    }

    pub(crate) fn zip_with(&self, other: &Self, f: impl Fn(PossValue, PossValue) -> PossValue) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        FuzzyVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl Index<usize> for FuzzyVector {
    type Output = PossValue;

    fn index(&self, i: usize) -> &PossValue {
        &self.entries[i]
    }
}

impl fmt::Debug for FuzzyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for FuzzyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A square matrix of possibility degrees, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FuzzyMatrix {
    dim: usize,
    entries: Vec<PossValue>,
}

impl FuzzyMatrix {
    pub fn from_rows(rows: Vec<Vec<PossValue>>) -> Result<Self, AlgebraError> {
        let dim = rows.len();
        if dim == 0 {
            return Err(AlgebraError::Empty);
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != dim {
                return Err(AlgebraError::NotSquare { row, len: r.len(), dim });
            }
            entries.extend(r);
        }
        Ok(FuzzyMatrix { dim, entries })
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        FuzzyMatrix {
            dim,
            entries: vec![PossValue::ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = PossValue::ONE;
        }
        m
    }

    /// `diag(v)`: `v` on the diagonal, 0 elsewhere.
    pub fn diag(v: &FuzzyVector) -> Self {
        let mut m = Self::zeros(v.dim());
        for (i, &x) in v.iter().enumerate() {
            m.entries[i * m.dim + i] = x;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> PossValue {
        self.entries[row * self.dim + col]
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, v: PossValue) {
        self.entries[row * self.dim + col] = v;
    }

    pub fn row(&self, row: usize) -> &[PossValue] {
        &self.entries[row * self.dim..(row + 1) * self.dim]
    }

    pub fn diagonal(&self) -> FuzzyVector {
        FuzzyVector {
            entries: (0..self.dim).map(|i| self.get(i, i)).collect(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = PossValue> + '_ {
        self.entries.iter().copied()
    }

    /// Max-min composition: `(A ∘ B)[i][j] = max_k min(A[i][k], B[k][j])`.
    pub fn compose(&self, other: &Self) -> Result<Self, AlgebraError> {
        check_dims("compose", self.dim, other.dim)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let cell = &mut out.entries[i * n + j];
                    *cell = (*cell).max(a.min(other.get(k, j)));
                }
            }
        }
        out
    }

    /// Max-min matrix-vector product: `(A ∘ v)[i] = max_k min(A[i][k], v[k])`.
    pub fn apply(&self, v: &FuzzyVector) -> Result<FuzzyVector, AlgebraError> {
        check_dims("apply", self.dim, v.dim())?;
        Ok(self.apply_unchecked(v))
    }

    pub(crate) fn apply_unchecked(&self, v: &FuzzyVector) -> FuzzyVector {
        let entries = (0..self.dim)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v.iter())
                    .map(|(&a, &b)| a.min(b))
                    .fold(PossValue::ZERO, PossValue::max)
            })
            .collect();
        FuzzyVector { entries }
    }

    /// Entrywise maximum.
    pub fn join(&self, other: &Self) -> Result<Self, AlgebraError> {
        check_dims("join", self.dim, other.dim)?;
        Ok(FuzzyMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        })
    }

    /// Entrywise `self <= other`.
    pub fn le(&self, other: &Self) -> bool {
        self.dim == other.dim && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// `P^k` with `P^0 = I` and `P^{k+1} = P^k ∘ P`.
    pub fn power(&self, k: usize) -> Self {
        let mut acc = Self::identity(self.dim);
        for _ in 0..k {
            acc = acc.compose_unchecked(self);
        }
        acc
    }

    /// `P⁺ = P ∨ P² ∨ … ∨ P^N` for `N = dim`.
    ///
    /// Evaluated as `P ∘ (I ∨ P)^m` with `m >= N - 1` reached by repeated
    /// squaring; `(I ∨ P)^m` is the join of all powers up to `m`.
    pub fn transitive_closure(&self) -> Self {
        let n = self.dim;
        let mut reach = self.join_identity();
        let mut covered = 1usize;
        while covered < n.saturating_sub(1) {
            reach = reach.compose_unchecked(&reach);
            covered *= 2;
        }
        self.compose_unchecked(&reach)
    }

    /// `P* = I ∨ P⁺`.
    pub fn reflexive_transitive_closure(&self) -> Self {
        self.transitive_closure().join_identity()
    }

    fn join_identity(&self) -> Self {
        let mut m = self.clone();
        for i in 0..self.dim {
            m.entries[i * self.dim + i] = PossValue::ONE;
        }
        m
    }
}

impl fmt::Debug for FuzzyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.dim {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

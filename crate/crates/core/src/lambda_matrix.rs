//! Dense matrices over Λ = Z[π].
//!
//! Vectors are columns. A matrix `A` represents the right Λ-module map whose
//! `j`-th column holds the coordinates of the image of the `j`-th basis
//! vector; composition is matrix product.

use std::fmt;

use thiserror::Error;

use crate::group_ring::{GroupRing, GroupRingElement, GroupRingError};
use crate::homology::IntegerMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("shape mismatch: {0}x{1} against {2}x{3}")]
    Shape(usize, usize, usize, usize),
    #[error("matrix entries live over different graphs")]
    AmbientMismatch,
    #[error("row {row}: {source}")]
    Entry { row: usize, source: GroupRingError },
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, found: usize, expected: usize },
}

#[derive(Clone, PartialEq, Eq)]
pub struct LambdaMatrix {
    ring: GroupRing,
    rows: usize,
    cols: usize,
    entries: Vec<GroupRingElement>,
}

impl LambdaMatrix {
    pub fn zeros(ring: &GroupRing, rows: usize, cols: usize) -> Self {
        LambdaMatrix { ring: ring.clone(), rows, cols, entries: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: &GroupRing, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_rows(ring: &GroupRing, rows: Vec<Vec<GroupRingElement>>) -> Result<Self, MatrixError> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(MatrixError::Ragged { row: i, found: row.len(), expected: cols });
            }
            for x in row {
                if x.graph() != ring.graph() {
                    return Err(MatrixError::AmbientMismatch);
                }
                entries.push(x);
            }
        }
        Ok(LambdaMatrix { ring: ring.clone(), rows: nrows, cols, entries })
    }

    /// Column vector.
    pub fn column(ring: &GroupRing, entries: Vec<GroupRingElement>) -> Result<Self, MatrixError> {
        Self::from_rows(ring, entries.into_iter().map(|x| vec![x]).collect())
    }

    pub fn ring(&self) -> &GroupRing {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GroupRingElement {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: GroupRingElement) {
        assert!(x.graph() == self.ring.graph(), "entry over a different graph");
        self.entries[i * self.cols + j] = x;
    }

    pub fn column_of(&self, j: usize) -> LambdaMatrix {
        let entries = (0..self.rows).map(|i| self.get(i, j).clone()).collect();
        LambdaMatrix { ring: self.ring.clone(), rows: self.rows, cols: 1, entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GroupRingElement::is_zero)
    }

    fn check_ring(&self, other: &LambdaMatrix) -> Result<(), MatrixError> {
        if self.ring.graph() == other.ring.graph() {
            Ok(())
        } else {
            Err(MatrixError::AmbientMismatch)
        }
    }

    pub fn mul(&self, other: &LambdaMatrix) -> Result<LambdaMatrix, MatrixError> {
        self.check_ring(other)?;
        if self.cols != other.rows {
            return Err(MatrixError::Shape(self.rows, self.cols, other.rows, other.cols));
        }
        let mut out = Self::zeros(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let slot = &mut out.entries[i * other.cols + j];
                        *slot = &*slot + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip(
        &self,
        other: &LambdaMatrix,
        f: impl Fn(&GroupRingElement, &GroupRingElement) -> GroupRingElement,
    ) -> Result<LambdaMatrix, MatrixError> {
        self.check_ring(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(MatrixError::Shape(self.rows, self.cols, other.rows, other.cols));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect();
        Ok(LambdaMatrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, entries })
    }

    pub fn add(&self, other: &LambdaMatrix) -> Result<LambdaMatrix, MatrixError> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &LambdaMatrix) -> Result<LambdaMatrix, MatrixError> {
        self.zip(other, |a, b| a - b)
    }

    pub fn neg(&self) -> LambdaMatrix {
        self.map(|x| -x)
    }

    pub fn map(&self, f: impl Fn(&GroupRingElement) -> GroupRingElement) -> LambdaMatrix {
        LambdaMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Entry-wise involution followed by transpose.
    pub fn conjugate_transpose(&self) -> LambdaMatrix {
        let mut out = Self::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.get(i, j).involute();
            }
        }
        out
    }

    pub fn transpose(&self) -> LambdaMatrix {
        let mut out = Self::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block(
        a: &LambdaMatrix,
        b: &LambdaMatrix,
        c: &LambdaMatrix,
        d: &LambdaMatrix,
    ) -> Result<LambdaMatrix, MatrixError> {
        for m in [b, c, d] {
            a.check_ring(m)?;
        }
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(MatrixError::Shape(a.rows, a.cols, d.rows, d.cols));
        }
        let (rows, cols) = (a.rows + c.rows, a.cols + b.cols);
        let mut out = Self::zeros(&a.ring, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let x = match (i < a.rows, j < a.cols) {
                    (true, true) => a.get(i, j),
                    (true, false) => b.get(i, j - a.cols),
                    (false, true) => c.get(i - a.rows, j),
                    (false, false) => d.get(i - a.rows, j - a.cols),
                };
                out.entries[i * cols + j] = x.clone();
            }
        }
        Ok(out)
    }

    /// Orthogonal direct sum `[[a, 0], [0, b]]`.
    pub fn direct_sum(a: &LambdaMatrix, b: &LambdaMatrix) -> Result<LambdaMatrix, MatrixError> {
        let ring = a.ring.clone();
        Self::block(a, &Self::zeros(&ring, a.rows, b.cols), &Self::zeros(&ring, b.rows, a.cols), b)
    }

    /// Apply the augmentation Λ → Z entry-wise.
    pub fn augment(&self) -> IntegerMatrix {
        let mut out = IntegerMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).augmentation());
            }
        }
        out
    }

    /// Parse the text format: one row per line, entries separated by `;`.
    /// Blank lines and `#` comments are ignored.
    pub fn parse(ring: &GroupRing, text: &str) -> Result<LambdaMatrix, MatrixError> {
        let mut rows = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row = line
                .split(';')
                .map(|e| ring.parse(e))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|source| MatrixError::Entry { row: i + 1, source })?;
            rows.push(row);
        }
        Self::from_rows(ring, rows)
    }
}

impl fmt::Display for LambdaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join("; "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for LambdaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LambdaMatrix {}x{}\n{}", self.rows, self.cols, self)
    }
}

//! Exact linear algebra over a prime field F_p.
//!
//! All ranks, kernels and echelon forms in the crate are computed here.
//! Elements are `u64` values in `[0, p)`; products are reduced through
//! `u128` intermediates, so any prime below 2^63 works. The default prime
//! is the largest prime below 2^62.

use thiserror::Error;

/// Largest prime below 2^62 (= 2^62 - 57). Default modulus for all
/// randomized rank computations.
pub const DEFAULT_PRIME: u64 = 4_611_686_018_427_387_847;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("matrix widths differ: expected {expected} columns, got {got}")]
    WidthMismatch { expected: usize, got: usize },
    #[error("entry count {got} does not match {rows}x{cols}")]
    ShapeMismatch { rows: usize, cols: usize, got: usize },
}

/// Arithmetic context for F_p. Copyable; matrices carry one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2, "modulus must be at least 2");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, a: u64) -> u64 {
        a % self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b; // a, b < p < 2^63, no overflow
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat's little theorem; panics on zero.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }
}

/// Dense row-major matrix over F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FieldMatrix {
    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> Self {
        FieldMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u64>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row width mismatch");
            data.extend(r.iter().map(|&x| field.reduce(x)));
        }
        FieldMatrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_entries(
        field: PrimeField,
        rows: usize,
        cols: usize,
        entries: Vec<u64>,
    ) -> Result<Self, FieldError> {
        if entries.len() != rows * cols {
            return Err(FieldError::ShapeMismatch {
                rows,
                cols,
                got: entries.len(),
            });
        }
        let data = entries.into_iter().map(|x| field.reduce(x)).collect();
        Ok(FieldMatrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = self.field.reduce(v);
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// New matrix holding the given rows of `self`, in the given order.
    pub fn select_rows(&self, indices: &[usize]) -> FieldMatrix {
        let mut data = Vec::with_capacity(indices.len() * self.cols);
        for &i in indices {
            data.extend_from_slice(self.row(i));
        }
        FieldMatrix {
            field: self.field,
            rows: indices.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut out = FieldMatrix::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    pub fn mul(&self, other: &FieldMatrix) -> Result<FieldMatrix, FieldError> {
        if self.cols != other.rows {
            return Err(FieldError::WidthMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let f = self.field;
        let mut out = FieldMatrix::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.data[i * other.cols + j];
                    out.data[i * other.cols + j] = f.add(cur, f.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Rank by in-place Gaussian elimination. Pivoting is deterministic:
    /// for each column the first row with a nonzero entry is chosen.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.echelonize().len()
    }

    /// Reduced row echelon form; returns the pivot column of each pivot row.
    pub fn rref(&self) -> (FieldMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.echelonize();
        let f = m.field;
        // back-substitute and normalize pivots
        for (r, &pc) in pivots.iter().enumerate().rev() {
            let inv = f.inv(m.get(r, pc));
            for j in pc..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for r2 in 0..r {
                let factor = m.get(r2, pc);
                if factor == 0 {
                    continue;
                }
                for j in pc..m.cols {
                    let v = f.sub(m.get(r2, j), f.mul(factor, m.get(r, j)));
                    m.set(r2, j, v);
                }
            }
        }
        m.rows = pivots.len();
        m.data.truncate(m.rows * m.cols);
        (m, pivots)
    }

    /// Row basis of the right null space: rows x of the result satisfy
    /// m . x^T = 0. Basis vectors are the standard free-column unit vectors
    /// read off the RREF, in increasing free-column order.
    pub fn right_kernel(&self) -> FieldMatrix {
        let f = self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &pc in &pivots {
            is_pivot[pc] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&j| !is_pivot[j]).collect();
        let mut out = FieldMatrix::zero(f, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, 1);
            for (row, &pc) in pivots.iter().enumerate() {
                out.set(k, pc, f.neg(r.get(row, fc)));
            }
        }
        out
    }

    /// Row basis of the left null space (cokernel): rows y of the result
    /// satisfy y . m = 0.
    pub fn left_kernel(&self) -> FieldMatrix {
        self.transpose().right_kernel()
    }

    /// Gaussian elimination in place; returns pivot columns. Row order of
    /// the surviving rows follows the original matrix (stable row swaps are
    /// not performed: the first unprocessed row with a nonzero entry in the
    /// current column is swapped up).
    fn echelonize(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if pr != row {
                for j in 0..self.cols {
                    self.data.swap(row * self.cols + j, pr * self.cols + j);
                }
            }
            let inv = f.inv(self.get(row, col));
            for r2 in row + 1..self.rows {
                let lead = self.get(r2, col);
                if lead == 0 {
                    continue;
                }
                let factor = f.mul(lead, inv);
                for j in col..self.cols {
                    let v = f.sub(self.get(r2, j), f.mul(factor, self.get(row, j)));
                    self.set(r2, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }
}

/// Vertical concatenation. `cols` disambiguates the empty list, whose stack
/// is the 0 x cols matrix.
pub fn stack(field: PrimeField, cols: usize, ms: &[FieldMatrix]) -> Result<FieldMatrix, FieldError> {
    let mut data = Vec::new();
    let mut rows = 0;
    for m in ms {
        if m.cols != cols {
            return Err(FieldError::WidthMismatch {
                expected: cols,
                got: m.cols,
            });
        }
        data.extend_from_slice(&m.data);
        rows += m.rows;
    }
    Ok(FieldMatrix {
        field,
        rows,
        cols,
        data,
    })
}

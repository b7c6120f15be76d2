//! Exact dense integer matrices.
//!
//! Everything here works over [`Integer`] (arbitrary precision); traces of
//! powers leave the 64-bit range after a handful of steps, and a wrapped
//! value would silently falsify every congruence downstream.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::newton;
use crate::{ElementaryCoeffs, Integer, TraceSequence};

/// A square matrix of arbitrary-precision integers, stored row-major.
///
/// Dimension 0 is a legal value: its powers are all the empty matrix, every
/// trace is 0 and `det(1 + tf) = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<Integer>,
}

impl IntMatrix {
    pub fn zero(dim: usize) -> Self {
        IntMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from a flat row-major buffer of `dim * dim` entries.
    pub fn from_flat(dim: usize, entries: Vec<Integer>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::NotSquare {
                row: 0,
                expected: dim * dim,
                found: entries.len(),
            });
        }
        Ok(IntMatrix { dim, entries })
    }

    /// Builds a matrix from nested rows; every row must have as many entries
    /// as there are rows.
    pub fn from_rows<R, T>(rows: R) -> Result<Self>
    where
        R: IntoIterator,
        R::Item: IntoIterator<Item = T>,
        T: Into<Integer>,
    {
        let rows: Vec<Vec<Integer>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(Into::into).collect())
            .collect();
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::NotSquare {
                    row: i,
                    expected: dim,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(IntMatrix { dim, entries })
    }

    /// 1×1 matrix `[value]`.
    pub fn scalar(value: impl Into<Integer>) -> Self {
        IntMatrix {
            dim: 1,
            entries: vec![value.into()],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Integer {
        &self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Integer] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Integer]> {
        // chunks(0) panics, so an empty matrix yields no rows explicitly
        let dim = self.dim.max(1);
        self.entries.chunks(dim).take(self.dim)
    }

    pub fn trace(&self) -> Integer {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Integer {
        bareiss_determinant(self.dim, self.entries.clone())
    }

    /// The submatrix on the given (sorted) row and column index sets.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        debug_assert_eq!(rows.len(), cols.len());
        let entries = rows
            .iter()
            .flat_map(|&r| cols.iter().map(move |&c| self.get(r, c).clone()))
            .collect();
        IntMatrix {
            dim: rows.len(),
            entries,
        }
    }

    fn check_same_dim(&self, other: &IntMatrix) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    // Callers have already checked dimensions.
    fn mul_unchecked(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.dim;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            let row = &self.entries[i * n..(i + 1) * n];
            for j in 0..n {
                let mut acc = BigInt::zero();
                for (k, a) in row.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    acc += a * &other.entries[k * n + j];
                }
                out.push(acc);
            }
        }
        IntMatrix {
            dim: n,
            entries: out,
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Exact matrix product.
pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    a.check_same_dim(b)?;
    Ok(a.mul_unchecked(b))
}

/// `f^n` by repeated squaring; `f^0` is the identity.
pub fn mat_pow(f: &IntMatrix, mut n: u64) -> IntMatrix {
    let mut result = IntMatrix::identity(f.dim);
    let mut base = f.clone();
    while n > 0 {
        if n & 1 == 1 {
            result = result.mul_unchecked(&base);
        }
        n >>= 1;
        if n > 0 {
            base = base.mul_unchecked(&base);
        }
    }
    result
}

/// `Tr(f), Tr(f^2), ..., Tr(f^n_max)`, one multiplication per term.
pub fn trace_sequence(f: &IntMatrix, n_max: usize) -> TraceSequence {
    let mut values = Vec::with_capacity(n_max);
    if n_max == 0 {
        return TraceSequence::new(values);
    }
    let mut power = f.clone();
    values.push(power.trace());
    for _ in 1..n_max {
        power = power.mul_unchecked(f);
        values.push(power.trace());
    }
    TraceSequence::new(values)
}

/// Coefficients `a_1..a_r` of `det(1 + t f)`.
///
/// Computed from the first `r` traces through Newton's identities; the
/// result is integral for every integer matrix, so a non-integral value
/// here is a bug and panics.
pub fn char_poly_coeffs(f: &IntMatrix) -> ElementaryCoeffs {
    let traces = trace_sequence(f, f.dim);
    let rational = newton::traces_to_elementary(&traces);
    match rational.to_integral() {
        Ok(a) => a,
        Err(bad) => panic!("non-integral characteristic coefficients at {bad:?} for {f}"),
    }
}

/// The `i`-th compound matrix `Λ^i f`.
///
/// Rows and columns are indexed by the `i`-element subsets of `{0..r}` in
/// lexicographic order; each entry is the corresponding `i×i` minor.
pub fn compound_matrix(f: &IntMatrix, i: usize) -> Result<IntMatrix> {
    if i == 0 || i > f.dim {
        return Err(Error::ExteriorIndex {
            index: i,
            dim: f.dim,
        });
    }
    let subsets = k_subsets(f.dim, i);
    let n = subsets.len();
    let mut entries = Vec::with_capacity(n * n);
    for rows in &subsets {
        for cols in &subsets {
            entries.push(f.submatrix(rows, cols).determinant());
        }
    }
    Ok(IntMatrix { dim: n, entries })
}

/// All `k`-element subsets of `{0, .., n-1}` as sorted tuples, in
/// lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        // rightmost position that can still advance
        let Some(pos) = (0..k).rev().find(|&j| current[j] < n - k + j) else {
            return out;
        };
        current[pos] += 1;
        for j in pos + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// Deterministic random matrix with entries uniform in `[-bound, bound]`.
///
/// The generator is ChaCha8 keyed through `SeedableRng::seed_from_u64(seed)`.
/// Entries are drawn in row-major order, one `next_u64` per attempt: with
/// `w = 2*bound + 1`, a draw `v` is rejected when it falls in the top
/// `2^64 mod w` values, otherwise the entry is `(v mod w) - bound`.
pub fn random_matrix(dim: usize, bound: u32, seed: u64) -> IntMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries = (0..dim * dim)
        .map(|_| BigInt::from(uniform_symmetric(&mut rng, bound)))
        .collect();
    IntMatrix { dim, entries }
}

pub(crate) fn uniform_symmetric(rng: &mut impl RngCore, bound: u32) -> i64 {
    let width = 2 * u64::from(bound) + 1;
    let reject_from = u64::MAX - (u64::MAX % width + 1) % width;
    loop {
        let v = rng.next_u64();
        if v <= reject_from {
            return (v % width) as i64 - i64::from(bound);
        }
    }
}

fn bareiss_determinant(n: usize, mut m: Vec<Integer>) -> Integer {
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k * n + k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for c in 0..n {
                m.swap(k * n + c, swap * n + c);
            }
            sign = -sign;
        }
        let pivot = m[k * n + k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &pivot * &m[i * n + j] - &m[i * n + k] * &m[k * n + j];
                // exact by Sylvester's identity
                m[i * n + j] = v / &prev;
            }
        }
        prev = pivot;
    }
    sign * &m[n * n - 1]
}

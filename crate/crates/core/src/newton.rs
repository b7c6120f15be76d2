//! Newton's identities between power sums and elementary symmetric
//! functions, and the companion matrix that realizes a coefficient vector.
//!
//! Sign convention, fixed for the whole crate: `a_i` is the coefficient of
//! `t^i` in `det(1 + t f)`, so `a_i = e_i(λ_1, .., λ_r)`. The Witt product
//! `∏ (1 - x_i t^i)` then equals `det(1 - t f) = Σ (-1)^n a_n t^n`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::Scalar;

use crate::matrix::IntMatrix;
use crate::{ElementaryCoeffs, Rational, RationalCoeffs, TraceSequence};

/// Solves `n·a_n = Σ_{i=1..n} (-1)^(i-1) a_(n-i) b_i` (with `a_0 = 1`) for
/// `a_1..a_N`, exactly over the rationals.
///
/// A denominator in the output means no integer matrix has these traces.
pub fn traces_to_elementary(b: &TraceSequence) -> RationalCoeffs {
    let b: Vec<Rational> = b
        .values()
        .iter()
        .cloned()
        .map(Rational::from_integer)
        .collect();
    power_sums_to_elementary(&b).into()
}

/// [`traces_to_elementary`] for rational power sums.
pub fn power_sums_to_elementary(b: &[Rational]) -> Vec<Rational> {
    let mut a: Vec<Rational> = Vec::with_capacity(b.len() + 1);
    a.push(Rational::from_integer(1.into()));
    for n in 1..=b.len() {
        let mut sum = Rational::zero();
        for i in 1..=n {
            let term = &a[n - i] * &b[i - 1];
            if i % 2 == 1 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        a.push(sum / Rational::from_integer(BigInt::from(n)));
    }
    a.remove(0);
    a
}

/// Power sums `b_1..b_(n_max)` of the roots of `1 + a_1 t + .. + a_r t^r`
/// (reversed), continuing past `r` with the linear recurrence
/// `b_n = a_1 b_(n-1) - a_2 b_(n-2) + .. ± a_r b_(n-r)`.
pub fn elementary_to_traces(a: &ElementaryCoeffs, n_max: usize) -> TraceSequence {
    elementary_to_power_sums(a.values(), n_max).into()
}

/// Ring-generic core of [`elementary_to_traces`]; no division is needed.
pub fn elementary_to_power_sums<T: Scalar>(a: &[T], n_max: usize) -> Vec<T> {
    let r = a.len();
    let mut b: Vec<T> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut acc = T::zero();
        for j in 1..n.min(r + 1) {
            let term = a[j - 1].clone() * b[n - j - 1].clone();
            acc = if j % 2 == 1 { acc + term } else { acc - term };
        }
        if n <= r {
            let term = T::from_u64(n as u64) * a[n - 1].clone();
            acc = if n % 2 == 1 { acc + term } else { acc - term };
        }
        b.push(acc);
    }
    b
}

/// Frobenius companion matrix whose `det(1 + t f)` has coefficients `a`.
///
/// Ones sit on the subdiagonal; the last column reads, top to bottom,
/// `±a_r, ∓a_(r-1), .., -a_2, a_1`, i.e. row `i` holds `(-1)^(r-i+1) a_(r-i)`.
pub fn companion_matrix(a: &ElementaryCoeffs) -> IntMatrix {
    let r = a.len();
    let mut entries = vec![BigInt::zero(); r * r];
    for i in 1..r {
        entries[i * r + (i - 1)] = BigInt::from(1);
    }
    for i in 0..r {
        let coeff = &a.values()[r - i - 1];
        entries[i * r + (r - 1)] = if (r - i) % 2 == 1 {
            coeff.clone()
        } else {
            -coeff
        };
    }
    IntMatrix::from_flat(r, entries).expect("r*r entries")
}

/// 1-based indices of non-integral coefficients, ascending.
pub fn integrality_check(q: &RationalCoeffs) -> Vec<usize> {
    q.non_integral()
}

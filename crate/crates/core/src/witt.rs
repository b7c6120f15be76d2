//! Witt coordinates and ghost components.
//!
//! A Witt vector `x` stands for the power series `∏_{i≥1} (1 - x_i t^i)`.
//! Its ghost components are the coefficients of `-t d/dt log` of that
//! product, `b_n = Σ_{d|n} d·x_d^(n/d)`. For the Witt vector of
//! `det(1 - t f)` the ghosts are the traces `Tr(f^n)`.
//!
//! Everything is truncated: a prefix of length `N` is the product taken
//! modulo `t^(N+1)`, and coordinates past the stored prefix count as zero.

use num_traits::pow;

use crate::arith::{divisors, Scalar};
use crate::{ElementaryCoeffs, GhostVector, Rational, RationalCoeffs, TraceSequence, WittVector};

/// Witt coordinates of `1 - a_1 t + a_2 t^2 - .. ± a_r t^r`, length `r`.
pub fn coeffs_to_witt(a: &ElementaryCoeffs) -> WittVector {
    coeffs_to_witt_rational(&RationalCoeffs::from(a))
}

/// [`coeffs_to_witt`] for rational coefficients.
pub fn coeffs_to_witt_rational(a: &RationalCoeffs) -> WittVector {
    peel_factors(&alternate(a.values())).into()
}

/// Expands `∏ (1 - x_i t^i)` to degree `N` and reads off `a_1..a_N`.
pub fn witt_to_coeffs(x: &WittVector) -> RationalCoeffs {
    alternate(&expand_product(x.values())).into()
}

/// Ghost components `b_1..b_(n_max)` by the divisor sum.
pub fn ghost_from_witt(x: &WittVector, n_max: usize) -> GhostVector {
    ghosts(x.values(), n_max).into()
}

/// Recovers Witt coordinates from a trace (ghost) prefix by solving
/// `n·x_n = b_n - Σ_{d|n, d<n} d·x_d^(n/d)`.
///
/// The coordinates are integral exactly when the prefix is a trace
/// sequence; otherwise the first denominators show where it breaks.
pub fn witt_from_ghost(b: &TraceSequence) -> WittVector {
    witt_from_ghost_rational(&GhostVector::from(b))
}

/// [`witt_from_ghost`] for rational ghost components.
pub fn witt_from_ghost_rational(b: &GhostVector) -> WittVector {
    let b = b.values();
    let mut x: Vec<Rational> = Vec::with_capacity(b.len());
    for n in 1..=b.len() {
        let mut residual = b[n - 1].clone();
        for d in divisors(n as u64) {
            let d = d as usize;
            if d == n {
                break;
            }
            residual -= Rational::from_integer(d.into()) * pow(x[d - 1].clone(), n / d);
        }
        x.push(residual / Rational::from_integer(n.into()));
    }
    x.into()
}

// (-1)^n c_n, shared by both directions since the map is an involution
fn alternate<T: Scalar>(c: &[T]) -> Vec<T> {
    c.iter()
        .enumerate()
        .map(|(i, v)| if i % 2 == 0 { -v.clone() } else { v.clone() })
        .collect()
}

/// Given the series `1 + s_1 t + .. + s_N t^N`, finds `x` with
/// `∏ (1 - x_i t^i) ≡ series (mod t^(N+1))`, dividing out one factor per
/// degree. Uses no division, so integer input gives integer output.
pub fn peel_factors<T: Scalar>(series: &[T]) -> Vec<T> {
    let n_max = series.len();
    let mut p: Vec<T> = Vec::with_capacity(n_max + 1);
    p.push(T::one());
    p.extend(series.iter().cloned());
    let mut x = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        // p is now ∏_{i≥n} (1 - x_i t^i): no terms in degrees 1..n-1
        let xn = T::zero() - p[n].clone();
        if !xn.is_zero() {
            // p ← p / (1 - xn t^n)
            for m in n..=n_max {
                let carry = xn.clone() * p[m - n].clone();
                p[m] = p[m].clone() + carry;
            }
        }
        x.push(xn);
    }
    x
}

/// Coefficients `s_1..s_N` of `∏_{i=1..N} (1 - x_i t^i)` modulo `t^(N+1)`.
pub fn expand_product<T: Scalar>(x: &[T]) -> Vec<T> {
    let n_max = x.len();
    let mut p = vec![T::zero(); n_max + 1];
    p[0] = T::one();
    for (i, xi) in x.iter().enumerate().map(|(i, v)| (i + 1, v)) {
        if xi.is_zero() {
            continue;
        }
        for m in (i..=n_max).rev() {
            let carry = xi.clone() * p[m - i].clone();
            p[m] = p[m].clone() - carry;
        }
    }
    p.remove(0);
    p
}

/// `b_n = Σ_{d|n} d·x_d^(n/d)` for `n = 1..n_max`.
pub fn ghosts<T: Scalar>(x: &[T], n_max: usize) -> Vec<T> {
    (1..=n_max)
        .map(|n| {
            divisors(n as u64)
                .into_iter()
                .filter_map(|d| {
                    let xd = x.get(d as usize - 1)?;
                    Some(T::from_u64(d) * pow(xd.clone(), n / d as usize))
                })
                .fold(T::zero(), |acc, t| acc + t)
        })
        .collect()
}

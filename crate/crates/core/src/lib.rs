//! Exact trace sequences of integer matrices.
//!
//! Given integers `b_1, .., b_N`, is there an integer matrix `f` with
//! `Tr(f^n) = b_n`? This crate answers that exactly, builds a witness when
//! there is one, and converts between the three equivalent descriptions of
//! such a matrix's spectrum:
//!
//! * the trace sequence `b_n = Tr(f^n)` ([`TraceSequence`]),
//! * the coefficients of `det(1 + t f) = 1 + a_1 t + .. + a_r t^r`
//!   ([`ElementaryCoeffs`]),
//! * the Witt coordinates `x_n` with `det(1 - t f) = ∏ (1 - x_n t^n)`
//!   ([`WittVector`]), whose ghost components are the traces.
//!
//! The answer is a family of congruences: `b_n ≡ b_(n/p) (mod p^k)` whenever
//! `p^k` exactly divides `n`.
//!
//! ```
//! use tracewitt::{check_trace_sequence, synthesize, trace_sequence, TraceSequence};
//!
//! let b: TraceSequence = "1,3,4,7".parse()?;
//! assert!(check_trace_sequence(&b).overall());
//! let f = synthesize(&b)?;
//! assert_eq!(trace_sequence(&f, 4), b);
//!
//! // b_1 and b_2 always have the same parity
//! let bad: TraceSequence = "0,1".parse()?;
//! assert!(!check_trace_sequence(&bad).overall());
//! # Ok::<(), tracewitt::Error>(())
//! ```
//!
//! All arithmetic is exact ([`num_bigint::BigInt`] and
//! [`num_rational::BigRational`]); nothing here touches floating point.

pub mod arith;
pub mod congruence;
mod error;
pub mod format;
pub mod matrix;
pub mod newton;
mod sequence;
pub mod witt;

pub use num_bigint;
pub use num_rational;

/// Arbitrary-precision integer used for every matrix entry and trace.
pub type Integer = num_bigint::BigInt;
/// Exact rational, always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

pub use congruence::{
    check_character, check_exterior_congruence, check_matrix_congruences, check_trace_sequence,
    check_trace_sequence_with_witness, exterior_differences, fermat_divides, prime_power_split,
    synthesize, synthesize_with, CharacterTable, CheckRow, CongruenceReport, KPolicy, Policy,
    PrimePowerSplit, SynthesisOptions,
};
pub use error::{Error, Result};
pub use matrix::{
    char_poly_coeffs, compound_matrix, mat_mul, mat_pow, random_matrix, trace_sequence, IntMatrix,
};
pub use newton::{companion_matrix, elementary_to_traces, integrality_check, traces_to_elementary};
pub use sequence::{
    parse_integer, parse_list, parse_rational, ElementaryCoeffs, GhostVector, RationalCoeffs,
    TraceSequence, WittVector,
};
pub use witt::{
    coeffs_to_witt, coeffs_to_witt_rational, ghost_from_witt, witt_from_ghost,
    witt_from_ghost_rational, witt_to_coeffs,
};

//! Newtypes for the finite prefixes that flow between the transforms.
//!
//! All of them are 1-based in the mathematics and 0-based in storage:
//! `values()[0]` is the first term.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::{Integer, Rational};

macro_rules! sequence_type {
    ($(#[$doc:meta])* $name:ident, $scalar:ty) => {
        $(#[$doc])*
        #[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
        pub struct $name(Vec<$scalar>);

        impl $name {
            pub fn new(values: Vec<$scalar>) -> Self {
                $name(values)
            }

            pub fn values(&self) -> &[$scalar] {
                &self.0
            }

            pub fn into_values(self) -> Vec<$scalar> {
                self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            /// The `n`-th term, 1-based. Terms past the stored prefix read as 0.
            pub fn term(&self, n: usize) -> $scalar {
                assert!(n >= 1, "terms are 1-based");
                self.0.get(n - 1).cloned().unwrap_or_else(<$scalar>::zero)
            }

            /// Pads with zeros (or truncates) to exactly `len` terms.
            pub fn resized(&self, len: usize) -> Self {
                let mut v = self.0.clone();
                v.resize(len, <$scalar>::zero());
                $name(v)
            }
        }

        impl From<Vec<$scalar>> for $name {
            fn from(values: Vec<$scalar>) -> Self {
                $name(values)
            }
        }

        impl FromIterator<$scalar> for $name {
            fn from_iter<I: IntoIterator<Item = $scalar>>(iter: I) -> Self {
                $name(iter.into_iter().collect())
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                for (i, v) in self.0.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
        }
    };
}

sequence_type!(
    /// Traces `b_1..b_N` of the powers of a matrix, or any integer sequence
    /// offered as a candidate.
    TraceSequence,
    Integer
);

sequence_type!(
    /// `a_1..a_r`: the coefficient of `t^i` in `det(1 + t f)`, i.e. the
    /// elementary symmetric functions of the eigenvalues.
    ElementaryCoeffs,
    Integer
);

sequence_type!(
    /// Elementary coefficients over the rationals, before integrality has
    /// been established.
    RationalCoeffs,
    Rational
);

sequence_type!(
    /// Witt coordinates `x_1..x_N` of `∏ (1 - x_i t^i)`.
    WittVector,
    Rational
);

sequence_type!(
    /// Ghost components `b_1..b_N` of a Witt vector that may have rational
    /// coordinates.
    GhostVector,
    Rational
);

fn non_integral(values: &[Rational]) -> Vec<usize> {
    values
        .iter()
        .enumerate()
        .filter(|(_, q)| !q.is_integer())
        .map(|(i, _)| i + 1)
        .collect()
}

fn integral(values: &[Rational]) -> std::result::Result<Vec<Integer>, Vec<usize>> {
    let bad = non_integral(values);
    if bad.is_empty() {
        Ok(values.iter().map(|q| q.numer().clone()).collect())
    } else {
        Err(bad)
    }
}

impl RationalCoeffs {
    /// 1-based positions of the entries whose denominator is not 1.
    pub fn non_integral(&self) -> Vec<usize> {
        non_integral(&self.0)
    }

    /// The integer coefficients, or the failing positions.
    pub fn to_integral(&self) -> std::result::Result<ElementaryCoeffs, Vec<usize>> {
        integral(&self.0).map(ElementaryCoeffs)
    }
}

impl WittVector {
    pub fn non_integral(&self) -> Vec<usize> {
        non_integral(&self.0)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(Rational::is_integer)
    }

    pub fn from_integers(values: impl IntoIterator<Item = Integer>) -> Self {
        values.into_iter().map(Rational::from_integer).collect()
    }
}

impl GhostVector {
    pub fn to_traces(&self) -> std::result::Result<TraceSequence, Vec<usize>> {
        integral(&self.0).map(TraceSequence)
    }
}

impl From<&ElementaryCoeffs> for RationalCoeffs {
    fn from(a: &ElementaryCoeffs) -> Self {
        a.0.iter().cloned().map(Rational::from_integer).collect()
    }
}

impl From<&TraceSequence> for GhostVector {
    fn from(b: &TraceSequence) -> Self {
        b.0.iter().cloned().map(Rational::from_integer).collect()
    }
}

/// Parses one decimal integer, reporting the token on failure.
pub fn parse_integer(token: &str) -> Result<Integer> {
    let t = token.trim();
    let digits = t.strip_prefix(['+', '-']).unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::ParseInteger {
            token: token.to_string(),
        });
    }
    BigInt::from_str(t).map_err(|_| Error::ParseInteger {
        token: token.to_string(),
    })
}

/// Parses `p` or `p/q` with `q != 0`.
pub fn parse_rational(token: &str) -> Result<Rational> {
    let bad = || Error::ParseRational {
        token: token.to_string(),
    };
    match token.split_once('/') {
        None => parse_integer(token).map(Rational::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n = parse_integer(n).map_err(|_| bad())?;
            let d = parse_integer(d).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Splits a comma-separated list. An empty (or all-blank) string is the
/// empty list.
pub fn parse_list<T>(text: &str, parse: impl Fn(&str) -> Result<T>) -> Result<Vec<T>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|t| parse(t.trim())).collect()
}

impl FromStr for TraceSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_list(s, parse_integer).map(TraceSequence)
    }
}

impl FromStr for ElementaryCoeffs {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_list(s, parse_integer).map(ElementaryCoeffs)
    }
}

impl FromStr for WittVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_list(s, parse_rational).map(WittVector)
    }
}

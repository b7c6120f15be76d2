//! Executable forms of the trace congruences.
//!
//! Every check produces a [`CongruenceReport`]: one [`CheckRow`] per
//! congruence `lhs ≡ rhs (mod p^k)`, plus a record of what was covered.
//!
//! * [`check_trace_sequence`] decides whether a finite sequence is the
//!   trace sequence of some integer matrix: for every `n ≤ N` and every
//!   prime `p | n` with `p^k ‖ n`, `b_n ≡ b_(n/p) (mod p^k)`.
//! * [`check_matrix_congruences`] checks `Tr(f^(p^k)) ≡ Tr(f^(p^(k-j)))
//!   (mod p^(k-j+1))` directly on a matrix.
//! * [`check_exterior_congruence`] lifts that to every coefficient of
//!   `det(1 + t f^(p^k))` through the compound matrices `Λ^i f`.
//! * [`check_character`] checks `χ(g^(p^k)) ≡ χ(g^(p^(k-1))) (mod p^k)` on
//!   an integer-valued character restricted to a cyclic subgroup.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::arith::{factorize, is_prime, primes_up_to};
use crate::error::{Error, Result};
use crate::format::{int, opt_witt};
use crate::matrix::{char_poly_coeffs, compound_matrix, mat_pow, trace_sequence, IntMatrix};
use crate::newton::{companion_matrix, traces_to_elementary};
use crate::witt::witt_from_ghost;
use crate::{Integer, TraceSequence, WittVector};

/// `n = p^k · s` with `p ∤ s`, one entry per prime divisor of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimePowerSplit {
    pub n: u64,
    pub parts: Vec<PrimePowerPart>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimePowerPart {
    pub p: u64,
    pub k: u32,
    /// Cofactor `n / p^k`.
    pub s: u64,
}

pub fn prime_power_split(n: u64) -> Result<PrimePowerSplit> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            min: 1,
            got: 0,
        });
    }
    let parts = factorize(n)
        .into_iter()
        .map(|(p, k)| PrimePowerPart {
            p,
            k,
            s: n / p.pow(k),
        })
        .collect();
    Ok(PrimePowerSplit { n, parts })
}

/// One congruence `lhs ≡ rhs (mod modulus)` with `modulus = p^k`.
///
/// `n` and `rhs_index` say which terms were compared; their meaning depends
/// on the report kind (see [`Policy`]).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub n: u64,
    pub p: u64,
    pub k: u32,
    #[serde(serialize_with = "int")]
    pub lhs: Integer,
    #[serde(serialize_with = "int")]
    pub rhs: Integer,
    #[serde(serialize_with = "int")]
    pub modulus: Integer,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs_index: Option<u64>,
}

impl CheckRow {
    fn new(n: u64, rhs_index: Option<u64>, p: u64, k: u32, lhs: Integer, rhs: Integer) -> Self {
        let modulus = BigInt::from(p).pow(k);
        let pass = (&lhs - &rhs).is_multiple_of(&modulus);
        CheckRow {
            n,
            p,
            k,
            lhs,
            rhs,
            modulus,
            pass,
            rhs_index,
        }
    }

    pub fn difference(&self) -> Integer {
        &self.lhs - &self.rhs
    }
}

/// What a report covered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Policy {
    /// Rows compare `b_n` with `b_(n/p)`; `rhs_index = n/p`.
    TraceSequence { length: usize },
    /// Rows compare `Tr(f^n)` with `Tr(f^rhs_index)` where `n = p^k'`,
    /// `rhs_index = p^(k'-j)` and the row's `k = k'-j+1`.
    Matrix { p: u64, k_max: u32 },
    /// Row `n = i` compares the `t^i` coefficients of `det(1 + t f^(p^k))`
    /// and `det(1 + t f^(p^(k-1)))`.
    Exterior { p: u64, k: u32, dim: usize },
    /// Rows compare `χ(g^e)` with `χ(g^e')` where `n = e = p^k mod m` and
    /// `rhs_index = e' = p^(k-1) mod m`; `bounds` lists the largest `k`
    /// checked per prime.
    Character {
        order: u64,
        mode: BoundMode,
        bounds: Vec<PrimeBound>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundMode {
    Auto,
    Cap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeBound {
    pub p: u64,
    pub k_max: u32,
}

/// Outcome of a congruence check. `overall` is the conjunction of the rows
/// and is kept in sync by construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    overall: bool,
    checks: Vec<CheckRow>,
    policy: Policy,
    #[serde(serialize_with = "opt_witt", skip_serializing_if = "Option::is_none")]
    witness: Option<WittVector>,
}

impl CongruenceReport {
    pub fn new(checks: Vec<CheckRow>, policy: Policy) -> Self {
        CongruenceReport {
            overall: checks.iter().all(|r| r.pass),
            checks,
            policy,
            witness: None,
        }
    }

    pub fn overall(&self) -> bool {
        self.overall
    }

    pub fn checks(&self) -> &[CheckRow] {
        &self.checks
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRow> {
        self.checks.iter().filter(|r| !r.pass)
    }

    pub fn policy(&self) -> &Policy {
        &self.policy
    }

    pub fn witness(&self) -> Option<&WittVector> {
        self.witness.as_ref()
    }

    pub fn with_witness(mut self, witness: WittVector) -> Self {
        self.witness = Some(witness);
        self
    }
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn require_positive(what: &'static str, k: u32) -> Result<()> {
    if k == 0 {
        Err(Error::OutOfRange { what, min: 1, got: 0 })
    } else {
        Ok(())
    }
}

fn prime_power(p: u64, k: u32) -> Result<u64> {
    p.checked_pow(k).ok_or(Error::OutOfRange {
        what: "p^k as a 64-bit exponent",
        min: 0,
        got: u64::MAX,
    })
}

/// Checks `b_n ≡ b_(n/p) (mod p^k)` for every `2 ≤ n ≤ N` and every
/// `p^k ‖ n`.
///
/// Passing means some `N×N` integer matrix has exactly these traces.
pub fn check_trace_sequence(b: &TraceSequence) -> CongruenceReport {
    let mut rows = Vec::new();
    for n in 2..=b.len() as u64 {
        for (p, k) in factorize(n) {
            let m = n / p;
            rows.push(CheckRow::new(
                n,
                Some(m),
                p,
                k,
                b.term(n as usize),
                b.term(m as usize),
            ));
        }
    }
    CongruenceReport::new(rows, Policy::TraceSequence { length: b.len() })
}

/// [`check_trace_sequence`] with the Witt coordinates attached, so the
/// first non-integral `x_n` can be shown next to the failing rows.
pub fn check_trace_sequence_with_witness(b: &TraceSequence) -> CongruenceReport {
    check_trace_sequence(b).with_witness(witt_from_ghost(b))
}

#[derive(Clone, Copy, Debug)]
pub struct SynthesisOptions {
    /// Recompute the traces of the result and compare with the input.
    pub verify: bool,
}

impl Default for SynthesisOptions {
    fn default() -> Self {
        SynthesisOptions { verify: true }
    }
}

/// An integer matrix of size `len(b)` whose traces of powers are `b`.
pub fn synthesize(b: &TraceSequence) -> Result<IntMatrix> {
    synthesize_with(b, SynthesisOptions::default())
}

pub fn synthesize_with(b: &TraceSequence, options: SynthesisOptions) -> Result<IntMatrix> {
    let report = check_trace_sequence(b);
    if !report.overall() {
        return Err(Error::NotATraceSequence {
            rows: report.failures().cloned().collect(),
        });
    }
    let a = traces_to_elementary(b)
        .to_integral()
        .unwrap_or_else(|bad| panic!("congruences hold but a_{bad:?} is not integral"));
    let f = companion_matrix(&a);
    if options.verify && trace_sequence(&f, b.len()) != *b {
        return Err(Error::SelfCheck);
    }
    Ok(f)
}

/// `a^(p^k) - a^(p^(k-1))`, computed exactly.
pub fn fermat_difference(a: &Integer, p: u64, k: u32) -> Result<Integer> {
    require_prime(p)?;
    require_positive("k", k)?;
    let high = prime_power(p, k)?;
    let exp_high = u32::try_from(high).map_err(|_| Error::OutOfRange {
        what: "p^k as an exponent",
        min: 0,
        got: high,
    })?;
    let exp_low = exp_high / p as u32;
    Ok(a.pow(exp_high) - a.pow(exp_low))
}

/// Whether `p^k` divides `a^(p^k) - a^(p^(k-1))`. Always true for prime `p`.
pub fn fermat_divides(a: &Integer, p: u64, k: u32) -> Result<bool> {
    let diff = fermat_difference(a, p, k)?;
    Ok(diff.is_multiple_of(&BigInt::from(p).pow(k)))
}

/// `Tr(f^(p^k)) ≡ Tr(f^(p^(k-j))) (mod p^(k-j+1))` for `1 ≤ j ≤ k ≤ k_max`.
///
/// The `j = 1` rows are the plain prime-power congruence
/// `Tr(f^(p^k)) ≡ Tr(f^(p^(k-1))) (mod p^k)`; larger `j` chain them.
pub fn check_matrix_congruences(f: &IntMatrix, p: u64, k_max: u32) -> Result<CongruenceReport> {
    require_prime(p)?;
    require_positive("k_max", k_max)?;
    prime_power(p, k_max)?;
    // traces[j] = Tr(f^(p^j))
    let mut traces = Vec::with_capacity(k_max as usize + 1);
    let mut power = f.clone();
    traces.push(power.trace());
    for _ in 0..k_max {
        power = mat_pow(&power, p);
        traces.push(power.trace());
    }
    let mut rows = Vec::new();
    for k in 1..=k_max {
        for j in 1..=k {
            rows.push(CheckRow::new(
                p.pow(k),
                Some(p.pow(k - j)),
                p,
                k - j + 1,
                traces[k as usize].clone(),
                traces[(k - j) as usize].clone(),
            ));
        }
    }
    rows.sort_by_key(|r| (r.n, r.p, r.k));
    Ok(CongruenceReport::new(rows, Policy::Matrix { p, k_max }))
}

/// The coefficient differences of `det(1 + t f^(p^k))` and
/// `det(1 + t f^(p^(k-1)))`, computed two ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorDifference {
    pub index: usize,
    /// `c_i(f^(p^k)) - c_i(f^(p^(k-1)))` from the characteristic coefficients
    /// of the two powers.
    pub via_char_poly: Integer,
    /// `Tr((Λ^i f)^(p^k)) - Tr((Λ^i f)^(p^(k-1)))`.
    pub via_compound: Integer,
}

pub fn exterior_differences(f: &IntMatrix, p: u64, k: u32) -> Result<Vec<ExteriorDifference>> {
    Ok(exterior_terms(f, p, k)?
        .into_iter()
        .map(|t| ExteriorDifference {
            index: t.index,
            via_char_poly: &t.high - &t.low,
            via_compound: &t.compound_high - &t.compound_low,
        })
        .collect())
}

struct ExteriorTerm {
    index: usize,
    high: Integer,
    low: Integer,
    compound_high: Integer,
    compound_low: Integer,
}

fn exterior_terms(f: &IntMatrix, p: u64, k: u32) -> Result<Vec<ExteriorTerm>> {
    require_prime(p)?;
    require_positive("k", k)?;
    let high = prime_power(p, k)?;
    let low = high / p;
    let c_high = char_poly_coeffs(&mat_pow(f, high));
    let c_low = char_poly_coeffs(&mat_pow(f, low));
    let mut out = Vec::with_capacity(f.dim());
    for i in 1..=f.dim() {
        let lambda = compound_matrix(f, i)?;
        out.push(ExteriorTerm {
            index: i,
            high: c_high.values()[i - 1].clone(),
            low: c_low.values()[i - 1].clone(),
            compound_high: mat_pow(&lambda, high).trace(),
            compound_low: mat_pow(&lambda, low).trace(),
        });
    }
    Ok(out)
}

/// Coefficientwise `det(1 + t f^(p^k)) ≡ det(1 + t f^(p^(k-1))) (mod p^k)`.
///
/// Row `i` compares the `t^i` coefficients; row `r` is the determinant
/// congruence. Each coefficient is also recomputed as the trace of a power
/// of `Λ^i f`, and a row only passes if both computations agree.
pub fn check_exterior_congruence(f: &IntMatrix, p: u64, k: u32) -> Result<CongruenceReport> {
    let rows = exterior_terms(f, p, k)?
        .into_iter()
        .map(|t| {
            let agree = t.high == t.compound_high && t.low == t.compound_low;
            let mut row = CheckRow::new(t.index as u64, None, p, k, t.high, t.low);
            row.pass &= agree;
            row
        })
        .collect();
    Ok(CongruenceReport::new(
        rows,
        Policy::Exterior { p, k, dim: f.dim() },
    ))
}

/// Values `χ(g^e)` for `e = 0..m-1` of an integer-valued character on the
/// powers of an element `g` of order `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    values: Vec<Integer>,
}

impl CharacterTable {
    pub fn new(values: Vec<Integer>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::CharacterTable("order must be at least 1".into()));
        }
        Ok(CharacterTable { values })
    }

    /// Builds a table from `(residue, value)` pairs; every residue in
    /// `0..order` must appear exactly once.
    pub fn from_entries(
        order: u64,
        entries: impl IntoIterator<Item = (u64, Integer)>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::CharacterTable("order must be at least 1".into()));
        }
        let mut slots: Vec<Option<Integer>> = vec![None; order as usize];
        for (e, v) in entries {
            let slot = slots.get_mut(e as usize).ok_or_else(|| {
                Error::CharacterTable(format!("residue {e} out of range 0..{order}"))
            })?;
            if slot.replace(v).is_some() {
                return Err(Error::CharacterTable(format!("residue {e} given twice")));
            }
        }
        let missing: Vec<String> = slots
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_none())
            .map(|(e, _)| e.to_string())
            .collect();
        if !missing.is_empty() {
            return Err(Error::CharacterTable(format!(
                "missing residues {}",
                missing.join(",")
            )));
        }
        Self::new(slots.into_iter().flatten().collect())
    }

    /// Character of the regular representation of `Z/m`: `m` at the
    /// identity, 0 elsewhere.
    pub fn regular(order: u64) -> Self {
        let mut values = vec![BigInt::zero(); order.max(1) as usize];
        values[0] = BigInt::from(order.max(1));
        CharacterTable { values }
    }

    pub fn order(&self) -> u64 {
        self.values.len() as u64
    }

    pub fn value(&self, residue: u64) -> &Integer {
        &self.values[(residue % self.order()) as usize]
    }

    pub fn values(&self) -> &[Integer] {
        &self.values
    }

    pub fn with_value(&self, residue: u64, value: Integer) -> Self {
        let mut t = self.clone();
        let m = t.order();
        t.values[(residue % m) as usize] = value;
        t
    }
}

/// How far to check each prime in [`check_character`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum KPolicy {
    /// Smallest `k0` with `p^k0 > 2·max|χ|`, past the pre-period of
    /// `p^k mod m`, plus one full period of that sequence. Beyond this
    /// every row would repeat a pair of residues already forced equal.
    #[default]
    Auto,
    /// Check `k = 1..=cap` for every prime.
    Cap(u32),
}

/// The automatic bound for prime `p`; see [`KPolicy::Auto`].
pub fn auto_bound(table: &CharacterTable, p: u64) -> u32 {
    let m = table.order();
    let spread = 2 * table.values.iter().map(|v| v.abs()).max().unwrap_or_default();
    let mut k0 = 1u32;
    let mut pk = BigInt::from(p);
    while pk <= spread {
        pk *= p;
        k0 += 1;
    }
    // p^j mod m is eventually periodic: find pre-period mu and period lambda
    let mut seen = HashMap::new();
    let mut e = 1 % m;
    let mut j = 0u32;
    let (mu, lambda) = loop {
        if let Some(&first) = seen.get(&e) {
            break (first, j - first);
        }
        seen.insert(e, j);
        e = e * (p % m) % m;
        j += 1;
    };
    k0.max(mu + 1) + lambda
}

/// Checks `χ(g^(p^k)) ≡ χ(g^(p^(k-1))) (mod p^k)` for every prime `p ≤ m`
/// and `k` up to the policy bound. Rows are ordered by `(p, k)`.
pub fn check_character(table: &CharacterTable, policy: KPolicy) -> CongruenceReport {
    let m = table.order();
    let mut rows = Vec::new();
    let mut bounds = Vec::new();
    for p in primes_up_to(m) {
        let k_max = match policy {
            KPolicy::Auto => auto_bound(table, p),
            KPolicy::Cap(cap) => cap,
        };
        bounds.push(PrimeBound { p, k_max });
        // e = p^(k-1) mod m, advanced in step with k
        let mut e_prev = 1 % m;
        for k in 1..=k_max {
            let e = e_prev * (p % m) % m;
            rows.push(CheckRow::new(
                e,
                Some(e_prev),
                p,
                k,
                table.value(e).clone(),
                table.value(e_prev).clone(),
            ));
            e_prev = e;
        }
    }
    let mode = match policy {
        KPolicy::Auto => BoundMode::Auto,
        KPolicy::Cap(_) => BoundMode::Cap,
    };
    CongruenceReport::new(
        rows,
        Policy::Character {
            order: m,
            mode,
            bounds,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64]) -> TraceSequence {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn table(v: &[i64]) -> CharacterTable {
        CharacterTable::new(v.iter().map(|&x| BigInt::from(x)).collect()).unwrap()
    }

    #[test]
    fn splits() {
        let s = prime_power_split(12).unwrap();
        assert_eq!(
            s.parts,
            vec![
                PrimePowerPart { p: 2, k: 2, s: 3 },
                PrimePowerPart { p: 3, k: 1, s: 4 }
            ]
        );
        assert!(prime_power_split(1).unwrap().parts.is_empty());
        assert_eq!(
            prime_power_split(8).unwrap().parts,
            vec![PrimePowerPart { p: 2, k: 3, s: 1 }]
        );
        assert!(prime_power_split(0).is_err());
    }

    #[test]
    fn parity_of_first_two_traces() {
        let report = check_trace_sequence(&seq(&[0, 1]));
        assert!(!report.overall());
        let failing: Vec<_> = report.failures().map(|r| (r.n, r.p, r.k)).collect();
        assert_eq!(failing, vec![(2, 2, 1)]);

        assert!(check_trace_sequence(&seq(&[1, 3, 4, 7])).overall());
        assert!(check_trace_sequence(&seq(&[5; 12])).overall());
        assert!(check_trace_sequence(&TraceSequence::default()).overall());
        assert!(check_trace_sequence(&seq(&[17])).checks().is_empty());
    }

    #[test]
    fn trace_rows_use_maximal_prime_power() {
        let report = check_trace_sequence(&seq(&[0; 12]));
        let at_12: Vec<_> = report
            .checks()
            .iter()
            .filter(|r| r.n == 12)
            .map(|r| (r.p, r.k, r.rhs_index))
            .collect();
        assert_eq!(at_12, vec![(2, 2, Some(6)), (3, 1, Some(4))]);
        // one row per (n, p): Σ_{n≤12} ω(n)
        assert_eq!(report.checks().len(), 1 + 1 + 1 + 1 + 2 + 1 + 1 + 1 + 2 + 1 + 2);
    }

    #[test]
    fn synthesis() {
        assert_eq!(
            synthesize(&seq(&[1, 3])).unwrap(),
            IntMatrix::from_rows(vec![vec![0, 1], vec![1, 1]]).unwrap()
        );
        assert_eq!(synthesize(&seq(&[2])).unwrap(), IntMatrix::scalar(2));
        assert_eq!(synthesize(&TraceSequence::default()).unwrap(), IntMatrix::zero(0));
        match synthesize(&seq(&[0, 1])) {
            Err(Error::NotATraceSequence { rows }) => {
                assert_eq!(rows.len(), 1);
                assert_eq!((rows[0].n, rows[0].p, rows[0].k), (2, 2, 1));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn fermat_examples() {
        assert!(fermat_divides(&2.into(), 2, 1).unwrap());
        assert_eq!(fermat_difference(&3.into(), 2, 3).unwrap(), BigInt::from(6480));
        assert!(fermat_divides(&3.into(), 2, 3).unwrap());
        let d = fermat_difference(&(-5).into(), 3, 2).unwrap();
        assert_eq!(d, BigInt::from(-5).pow(9u32) - BigInt::from(-5).pow(3u32));
        assert!(fermat_divides(&(-5).into(), 3, 2).unwrap());
        assert!(matches!(fermat_divides(&2.into(), 4, 1), Err(Error::NotPrime(4))));
        assert!(fermat_divides(&2.into(), 2, 0).is_err());
    }

    #[test]
    fn matrix_congruences() {
        let report = check_matrix_congruences(&IntMatrix::scalar(2), 2, 2).unwrap();
        assert!(report.overall());
        let row = report
            .checks()
            .iter()
            .find(|r| r.n == 4 && r.rhs_index == Some(2))
            .unwrap();
        assert_eq!((row.lhs.clone(), row.rhs.clone(), row.k), (16.into(), 4.into(), 2));

        let id = check_matrix_congruences(&IntMatrix::identity(3), 3, 3).unwrap();
        assert!(id.checks().iter().all(|r| r.difference().is_zero()));
        assert_eq!(id.checks().len(), 6);

        let fib = IntMatrix::from_rows(vec![vec![0, 1], vec![1, 1]]).unwrap();
        let report = check_matrix_congruences(&fib, 2, 1).unwrap();
        assert_eq!(report.checks().len(), 1);
        let r = &report.checks()[0];
        assert_eq!((r.lhs.clone(), r.rhs.clone(), r.pass), (3.into(), 1.into(), true));

        assert!(check_matrix_congruences(&fib, 6, 1).is_err());
        assert!(check_matrix_congruences(&fib, 2, 0).is_err());
    }

    #[test]
    fn exterior() {
        let fib = IntMatrix::from_rows(vec![vec![0, 1], vec![1, 1]]).unwrap();
        let report = check_exterior_congruence(&fib, 2, 1).unwrap();
        assert!(report.overall());
        let det_row = &report.checks()[1];
        assert_eq!((det_row.n, det_row.lhs.clone(), det_row.rhs.clone()), (2, 1.into(), (-1).into()));

        // r = 1: the single row is the plain trace congruence
        let f = IntMatrix::scalar(7);
        let ext = check_exterior_congruence(&f, 3, 2).unwrap();
        let tr = check_matrix_congruences(&f, 3, 2).unwrap();
        let plain = tr.checks().iter().find(|r| r.n == 9 && r.k == 2).unwrap();
        assert_eq!(ext.checks()[0].lhs, plain.lhs);
        assert_eq!(ext.checks()[0].rhs, plain.rhs);

        for d in exterior_differences(&fib, 3, 2).unwrap() {
            assert_eq!(d.via_char_poly, d.via_compound);
        }
        assert!(check_exterior_congruence(&IntMatrix::zero(0), 2, 1).unwrap().overall());
    }

    #[test]
    fn characters() {
        for m in 1..=12 {
            assert!(check_character(&CharacterTable::regular(m), KPolicy::Auto).overall(), "m={m}");
        }
        let trivial = check_character(&table(&[1; 6]), KPolicy::Auto);
        assert!(trivial.overall());
        assert!(trivial.checks().iter().all(|r| r.difference().is_zero()));

        let bad = check_character(&table(&[2, 1]), KPolicy::Auto);
        assert!(!bad.overall());
        let first = bad.failures().next().unwrap();
        assert_eq!((first.p, first.k, first.lhs.clone(), first.rhs.clone()), (2, 1, 2.into(), 1.into()));
    }

    #[test]
    fn character_bounds_are_recorded() {
        let t = CharacterTable::regular(6);
        let report = check_character(&t, KPolicy::Cap(3));
        match report.policy() {
            Policy::Character { mode, bounds, .. } => {
                assert_eq!(*mode, BoundMode::Cap);
                assert_eq!(bounds.iter().map(|b| (b.p, b.k_max)).collect::<Vec<_>>(), vec![(2, 3), (3, 3), (5, 3)]);
            }
            other => panic!("{other:?}"),
        }
        // |χ| ≤ 6: 2^4 > 12; 2^j mod 6 = 1,2,4,2,4,..: mu = 1, lambda = 2
        assert_eq!(auto_bound(&t, 2), 4 + 2);
        // 5^j mod 6 = 1,5,1,..: mu = 0, lambda = 2; 5^2 > 12
        assert_eq!(auto_bound(&t, 5), 2 + 2);
    }

    #[test]
    fn malformed_tables() {
        assert!(CharacterTable::from_entries(0, []).is_err());
        assert!(CharacterTable::from_entries(2, [(0, 1.into())]).is_err());
        assert!(CharacterTable::from_entries(2, [(0, 1.into()), (2, 1.into())]).is_err());
        assert!(CharacterTable::from_entries(1, [(0, 1.into()), (0, 1.into())]).is_err());
        let t = CharacterTable::from_entries(2, [(1, 0.into()), (0, 2.into())]).unwrap();
        assert_eq!(t, CharacterTable::regular(2));
    }

    #[test]
    fn report_integrity() {
        let report = check_trace_sequence(&seq(&[1, 2, 3, 4, 5, 6, 7, 8]));
        assert_eq!(report.overall(), report.checks().iter().all(|r| r.pass));
        for r in report.checks() {
            assert_eq!(r.modulus, BigInt::from(r.p).pow(r.k));
        }
    }
}

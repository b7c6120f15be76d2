use std::fmt::Write;

use tracewitt::congruence::BoundMode;
use tracewitt::{CheckRow, CongruenceReport, Policy};

use crate::fuzz::FuzzSummary;

fn verdict(pass: bool) -> &'static str {
    if pass {
        "ok"
    } else {
        "FAIL"
    }
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let line = |cells: Vec<&str>, out: &mut String| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        writeln!(out, "{}", padded.join("  ").trim_end()).unwrap();
    };
    line(header.to_vec(), &mut out);
    for row in rows {
        line(row.iter().map(String::as_str).collect(), &mut out);
    }
    out
}

fn common(r: &CheckRow) -> [String; 4] {
    [
        format!("{}^{}", r.p, r.k),
        r.lhs.to_string(),
        r.rhs.to_string(),
        r.difference().to_string(),
    ]
}

/// Aligned congruence table followed by a one-line verdict.
pub fn report_text(report: &CongruenceReport) -> String {
    let mut out = String::new();
    let rows = report.checks();
    let body = match report.policy() {
        Policy::TraceSequence { .. } => table(
            &["n", "p^k", "b_n", "b_{n/p}", "diff", "verdict"],
            &rows
                .iter()
                .map(|r| {
                    let [pk, l, rh, d] = common(r);
                    vec![r.n.to_string(), pk, l, rh, d, verdict(r.pass).into()]
                })
                .collect::<Vec<_>>(),
        ),
        Policy::Matrix { .. } => table(
            &["n", "m", "p^k", "Tr(f^n)", "Tr(f^m)", "diff", "verdict"],
            &rows
                .iter()
                .map(|r| {
                    let [pk, l, rh, d] = common(r);
                    let m = r.rhs_index.map(|m| m.to_string()).unwrap_or_default();
                    vec![r.n.to_string(), m, pk, l, rh, d, verdict(r.pass).into()]
                })
                .collect::<Vec<_>>(),
        ),
        Policy::Exterior { .. } => table(
            &["i", "p^k", "c_i(f^(p^k))", "c_i(f^(p^(k-1)))", "diff", "verdict"],
            &rows
                .iter()
                .map(|r| {
                    let [pk, l, rh, d] = common(r);
                    vec![r.n.to_string(), pk, l, rh, d, verdict(r.pass).into()]
                })
                .collect::<Vec<_>>(),
        ),
        Policy::Character { .. } => table(
            &["p^k", "e", "e'", "chi(g^e)", "chi(g^e')", "diff", "verdict"],
            &rows
                .iter()
                .map(|r| {
                    let [pk, l, rh, d] = common(r);
                    let e_prev = r.rhs_index.map(|m| m.to_string()).unwrap_or_default();
                    vec![pk, r.n.to_string(), e_prev, l, rh, d, verdict(r.pass).into()]
                })
                .collect::<Vec<_>>(),
        ),
    };
    if !rows.is_empty() {
        out.push_str(&body);
    }
    if let Policy::Character { order, mode, bounds } = report.policy() {
        let mode = match mode {
            BoundMode::Auto => "auto",
            BoundMode::Cap => "cap",
        };
        let bounds: Vec<String> = bounds.iter().map(|b| format!("p={} k<={}", b.p, b.k_max)).collect();
        writeln!(out, "order {order}, {mode} bounds: {}", bounds.join(", ")).unwrap();
    }
    if let Some(x) = report.witness() {
        writeln!(out, "witt coordinates: {x}").unwrap();
    }
    let failing = report.failures().count();
    writeln!(
        out,
        "overall: {} (checks: {}, failing: {})",
        if report.overall() { "PASS" } else { "FAIL" },
        rows.len(),
        failing
    )
    .unwrap();
    out
}

pub fn fuzz_text(s: &FuzzSummary) -> String {
    let mut out = String::new();
    let c = &s.config;
    writeln!(
        out,
        "trials {}  dim {}  entry-bound {}  seed {}",
        c.trials, c.dim, c.entry_bound, c.seed
    )
    .unwrap();
    writeln!(out, "trace-sequence checks: {} (length {})", s.trace_checks, s.trace_length).unwrap();
    writeln!(out, "exterior checks: {}", s.exterior_checks).unwrap();
    for v in &s.failures {
        writeln!(
            out,
            "violation: trial {} (matrix seed {}) {} n={} p={} k={} lhs={} rhs={}",
            v.trial, v.matrix_seed, v.check, v.row.n, v.row.p, v.row.k, v.row.lhs, v.row.rhs
        )
        .unwrap();
    }
    writeln!(out, "violations: {}", s.violations).unwrap();
    out
}

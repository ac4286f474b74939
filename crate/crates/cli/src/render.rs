//! Human and JSON renderings of command results.

use std::io::Write;

use num_rational::BigRational;
use serde::Serialize;
use serde_json::json;
use wpoly_core::poly::ratio_to_f64;
use wpoly_core::realroots::RootReport;
use wpoly_core::search::SearchResult;
use wpoly_core::IntPolynomial;

use crate::{CliResult, Output};

fn io<T>(r: std::io::Result<T>) -> CliResult<T> {
    r.map_err(|e| anyhow::Error::from(e).into())
}

pub fn polynomial(out: &mut impl Write, output: Output, w: &IntPolynomial) -> CliResult<()> {
    match output {
        Output::Human => io(writeln!(out, "{w}")),
        Output::Json => io(writeln!(
            out,
            "{}",
            serde_json::to_string(w).map_err(anyhow::Error::from)?
        )),
    }
}

pub fn verdict_line(report: &RootReport) -> String {
    if report.is_real_rooted() {
        "REAL-ROOTED".to_string()
    } else {
        format!(
            "NOT REAL-ROOTED ({} non-real)",
            report.nonreal_with_multiplicity
        )
    }
}

fn complex(re: f64, im: f64) -> String {
    format!(
        "{re:.5} {} {:.5}i",
        if im < 0.0 { '-' } else { '+' },
        im.abs()
    )
}

pub fn check(
    out: &mut impl Write,
    output: Output,
    w: &IntPolynomial,
    report: &RootReport,
) -> CliResult<()> {
    if output == Output::Json {
        let value = json!({
            "polynomial": w,
            "report": report,
            "real_rooted": report.is_real_rooted(),
        });
        return io(writeln!(out, "{value}"));
    }
    io(writeln!(out, "W(t) = {w}"))?;
    io(writeln!(
        out,
        "degree {}: {} real roots with multiplicity ({} distinct, multiplicity of 0 is {}), {} non-real",
        report.degree,
        report.real_roots_with_multiplicity,
        report.distinct_real_roots,
        report.zero_root_multiplicity,
        report.nonreal_with_multiplicity
    ))?;
    for (lo, hi) in &report.isolating_intervals {
        io(writeln!(out, "  real root in ({lo}, {hi})"))?;
    }
    if let Some(approx) = &report.nonreal_approx {
        for z in approx.iter().filter(|z| z.im > 0.0) {
            io(writeln!(
                out,
                "  non-real pair ~ {}",
                complex(z.re, z.im).replacen(" + ", " ± ", 1)
            ))?;
        }
    }
    io(writeln!(out, "{}", verdict_line(report)))
}

pub fn search_table(out: &mut impl Write, results: &[SearchResult]) -> CliResult<()> {
    io(writeln!(
        out,
        "{:>5} {:>5} {:>6} {:>8}  verdict",
        "m", "n", "degree", "nonreal"
    ))?;
    for r in results {
        io(writeln!(
            out,
            "{:>5} {:>5} {:>6} {:>8}  {}",
            r.m,
            r.n,
            r.degree,
            r.nonreal_count,
            verdict_line(&r.report)
        ))?;
    }
    let failures = results.iter().filter(|r| r.is_counterexample()).count();
    io(writeln!(
        out,
        "{} cells, {} not real-rooted",
        results.len(),
        failures
    ))
}

#[derive(Debug, Serialize)]
pub struct AsymptoticsSummary {
    pub m: u64,
    pub n: u64,
    pub a: String,
    pub samples: usize,
    pub gap: f64,
    pub near_unit_a: String,
    pub near_unit: bool,
    pub truncation_degree: u64,
    pub j0_first_zero: f64,
    pub f_zero_intervals: Vec<[String; 2]>,
}

pub fn asymptotics(out: &mut impl Write, output: Output, s: &AsymptoticsSummary) -> CliResult<()> {
    if output == Output::Json {
        let value = serde_json::to_string(s).map_err(anyhow::Error::from)?;
        return io(writeln!(out, "{value}"));
    }
    io(writeln!(
        out,
        "max |f_{{{},{}}}(t) - (F(t) - 1)| on [-{}, 0] ({} samples): {:.6e}",
        s.m, s.n, s.a, s.samples, s.gap
    ))?;
    io(writeln!(
        out,
        "|f_{{{},{}}}(t) + 1| < 1 on (-{}, 0): {}",
        s.m, s.n, s.near_unit_a, s.near_unit
    ))?;
    io(writeln!(
        out,
        "first zero of J_0 (degree-40 series): {:.15}",
        s.j0_first_zero
    ))?;
    io(writeln!(
        out,
        "zeros of F truncated at degree {} in (-{}, 0): {}",
        s.truncation_degree,
        s.a,
        s.f_zero_intervals.len()
    ))?;
    for [lo, hi] in &s.f_zero_intervals {
        let approx = match (lo.parse::<BigRational>(), hi.parse::<BigRational>()) {
            (Ok(lo), Ok(hi)) => ratio_to_f64(&((lo + hi) / BigRational::from_integer(2.into()))),
            _ => f64::NAN,
        };
        io(writeln!(out, "  {approx:.12}  in ({lo}, {hi})"))?;
    }
    Ok(())
}

//! Random polynomial constructions with known roots, shared by test targets.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;
use wpoly_core::realroots::{analyze, relative_residual};
use wpoly_core::IntPolynomial;

pub fn linear(r: i64) -> IntPolynomial {
    IntPolynomial::from_i64s(&[-r, 1])
}

pub fn product(factors: &[IntPolynomial]) -> IntPolynomial {
    factors
        .iter()
        .fold(IntPolynomial::from_i64s(&[1]), |acc, f| &acc * f)
}

/// `count` distinct integers drawn from `[-bound, bound]`, ascending.
pub fn distinct_roots(rng: &mut impl Rng, count: usize, bound: i64) -> Vec<i64> {
    let pool: Vec<i64> = (-bound..=bound).collect();
    let mut roots: Vec<i64> = pool.choose_multiple(rng, count).copied().collect();
    roots.sort_unstable();
    roots
}

/// `t^2 + b t + c` with `b^2 < 4c`.
pub fn irreducible_quadratic(rng: &mut impl Rng) -> IntPolynomial {
    let b: i64 = rng.gen_range(-6..=6);
    let c: i64 = rng.gen_range(b * b / 4 + 1..=b * b / 4 + 8);
    IntPolynomial::from_i64s(&[c, b, 1])
}

/// Checks the constructed-root oracle for `roots` (distinct, ascending).
pub fn check_constructed(roots: &[i64]) -> Result<(), String> {
    let p = product(&roots.iter().map(|&r| linear(r)).collect::<Vec<_>>());
    let report = analyze(&p, true).map_err(|e| e.to_string())?;
    if report.distinct_real_roots != roots.len() || report.nonreal_with_multiplicity != 0 {
        return Err(format!("{roots:?}: {report:?}"));
    }
    if report.nonreal_approx.is_some() {
        return Err(format!(
            "{roots:?}: approximations for a real-rooted polynomial"
        ));
    }
    let nonzero: Vec<BigRational> = roots
        .iter()
        .filter(|&&r| r != 0)
        .map(|&r| BigRational::from_integer(BigInt::from(r)))
        .collect();
    if report.zero_root_multiplicity != usize::from(roots.contains(&0)) {
        return Err(format!(
            "{roots:?}: zero multiplicity {}",
            report.zero_root_multiplicity
        ));
    }
    if report.isolating_intervals.len() != nonzero.len() {
        return Err(format!(
            "{roots:?}: {} intervals",
            report.isolating_intervals.len()
        ));
    }
    let zero = BigRational::from_integer(0.into());
    for (a, b) in &report.isolating_intervals {
        let inside = nonzero.iter().filter(|r| a < *r && *r < b).count();
        let holds_zero = roots.contains(&0) && a < &zero && &zero < b;
        if inside != 1 || holds_zero {
            return Err(format!(
                "{roots:?}: interval ({a}, {b}) holds {inside} roots"
            ));
        }
    }
    if report
        .isolating_intervals
        .windows(2)
        .any(|w| w[0].1 > w[1].0)
    {
        return Err(format!("{roots:?}: intervals overlap or are unsorted"));
    }
    Ok(())
}

/// Random product of distinct linear factors and irreducible quadratics.
/// Returns the polynomial and the number of quadratics.
pub fn mixed(rng: &mut impl Rng, max_degree: usize, bound: i64) -> (IntPolynomial, usize) {
    let quadratics = rng.gen_range(1..=max_degree / 2);
    let reals = rng.gen_range(0..=max_degree - 2 * quadratics);
    let mut factors: Vec<IntPolynomial> = distinct_roots(rng, reals, bound)
        .into_iter()
        .map(linear)
        .collect();
    factors.extend((0..quadratics).map(|_| irreducible_quadratic(rng)));
    factors.shuffle(rng);
    (product(&factors), quadratics)
}

/// Backward-error and conjugate-pairing checks on the reported approximations.
pub fn check_approximations(p: &IntPolynomial, approx: &[Complex64]) -> Result<(), String> {
    let coeffs = p.to_f64_coeffs();
    for z in approx {
        let residual = relative_residual(&coeffs, *z);
        if residual >= 1e-8 {
            return Err(format!("{p}: residual {residual:e} at {z}"));
        }
    }
    for z in approx.iter().filter(|z| z.im > 0.0) {
        if !approx.iter().any(|w| (w - z.conj()).norm() < 1e-9) {
            return Err(format!("{p}: no conjugate for {z}"));
        }
    }
    Ok(())
}

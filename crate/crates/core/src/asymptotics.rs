//! The limit behind the counterexample family.
//!
//! With `f_{m,n}(t) = W(P_{m,n}, t / mn)` the coefficients are
//! `γ_{m,k} γ_{n,k} / (k!)^2`, where `γ_{n,k} = (1 - 1/n)...(1 - (k-1)/n)`.
//! As `min(m, n)` grows they tend to `1 / (k!)^2`, so `f_{m,n}` tends to
//! `F(z) - 1` with `F(z) = sum z^k / (k!)^2`. `F` has only negative simple
//! zeros, being a rescaled order-zero Bessel function:
//! `J_0(x) = F(-x^2 / 4)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::closed::binomial;
use crate::poly::{ratio_to_f64, IntPolynomial, RatPolynomial};
use crate::realroots::{is_squarefree, isolate_real_roots, refine_interval};
use crate::{Error, Result};

/// Arguments of `F` up to this magnitude are summed in exact rationals.
pub const EXACT_ARGUMENT_LIMIT: f64 = 8.0;
/// Target size of the first omitted term when truncating `F`.
pub const TAIL_TOLERANCE: f64 = 1e-12;
/// Interior grid size used by [`near_unit_magnitude_check`].
pub const NEAR_UNIT_GRID: usize = 1000;

pub fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `γ_{n,k} = prod_{j=1}^{k-1} (1 - j/n)`; one for `k = 1`, zero for `k > n`.
pub fn gamma_factor(n: u64, k: u64) -> Result<BigRational> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidArgument(format!(
            "gamma factor needs n, k >= 1, got n={n}, k={k}"
        )));
    }
    let n_big = BigInt::from(n);
    Ok((1..k).fold(BigRational::one(), |acc, j| {
        acc * BigRational::new(&n_big - BigInt::from(j), n_big.clone())
    }))
}

/// `f_{m,n}(t) = sum_{k=1}^{min(m,n)} γ_{m,k} γ_{n,k} / (k!)^2 t^k`.
pub fn scaled_f(m: u64, n: u64) -> Result<RatPolynomial> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument(format!(
            "scaled_f needs m, n >= 1, got m={m}, n={n}"
        )));
    }
    let mut coeffs = vec![BigRational::zero()];
    for k in 1..=m.min(n) {
        let fk = BigRational::from_integer(factorial(k));
        coeffs.push(gamma_factor(m, k)? * gamma_factor(n, k)? / (&fk * &fk));
    }
    Ok(RatPolynomial::new(coeffs))
}

/// The same coefficients from the binomial side: `C(m,k) C(n,k) / (mn)^k`.
pub fn scaled_f_from_binomials(m: u64, n: u64) -> RatPolynomial {
    let mn = BigInt::from(m * n);
    let mut coeffs = vec![BigRational::zero()];
    let mut pow = BigInt::one();
    for k in 1..=m.min(n) {
        pow *= &mn;
        coeffs.push(BigRational::new(
            binomial(m, k) * binomial(n, k),
            pow.clone(),
        ));
    }
    RatPolynomial::new(coeffs)
}

/// `F(z) - 1` truncated at degree `degree`: `sum_{k=1}^{degree} z^k / (k!)^2`.
pub fn f_limit_truncation(degree: u64) -> RatPolynomial {
    let mut coeffs = f_truncation(degree).coeffs().to_vec();
    coeffs[0] = BigRational::zero();
    RatPolynomial::new(coeffs)
}

/// `F(z)` truncated at degree `degree`: `sum_{k=0}^{degree} z^k / (k!)^2`.
pub fn f_truncation(degree: u64) -> RatPolynomial {
    let mut coeffs = Vec::with_capacity(degree as usize + 1);
    let mut fact = BigInt::one();
    coeffs.push(BigRational::one());
    for k in 1..=degree {
        fact *= BigInt::from(k);
        coeffs.push(BigRational::new(BigInt::one(), &fact * &fact));
    }
    RatPolynomial::new(coeffs)
}

/// Smallest `K` with `a^K / (K!)^2 < TAIL_TOLERANCE * max(1, a)`.
pub fn truncation_order(a: f64) -> u64 {
    let a = a.abs();
    let target = TAIL_TOLERANCE * a.max(1.0);
    let mut term = 1.0f64;
    let mut k = 0u64;
    while term >= target {
        k += 1;
        term *= a / (k as f64 * k as f64);
    }
    k.max(1)
}

/// Partial sum `sum_{k=0}^{degree} arg^k / (k!)^2` in exact arithmetic.
///
/// Uses the nested form `1 + x/1^2 (1 + x/2^2 (1 + ... (1 + x/K^2)))` on
/// an unreduced numerator/denominator pair and reduces once at the end.
fn partial_sum_exact(arg: &BigRational, degree: u64) -> BigRational {
    let (p, q) = (arg.numer(), arg.denom());
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in (1..=degree).rev() {
        let scale = &den * BigInt::from(j * j) * q;
        num = &scale + p * &num;
        den = scale;
    }
    BigRational::new(num, den)
}

fn partial_sum_float(arg: f64, degree: u64) -> f64 {
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    for k in 1..=degree {
        term *= arg / (k as f64 * k as f64);
        sum += term;
    }
    sum
}

fn partial_sum(arg: &BigRational, degree: u64) -> f64 {
    let approx = ratio_to_f64(arg);
    if approx.abs() <= EXACT_ARGUMENT_LIMIT {
        ratio_to_f64(&partial_sum_exact(arg, degree))
    } else {
        partial_sum_float(approx, degree)
    }
}

fn exact(x: f64) -> Result<BigRational> {
    BigRational::from_float(x)
        .ok_or_else(|| Error::InvalidArgument(format!("non-finite value {x}")))
}

/// `F(t)` truncated at degree `degree`.
pub fn eval_f(t: f64, degree: u64) -> Result<f64> {
    Ok(partial_sum(&exact(t)?, degree))
}

/// `J_0(x) = sum_{k=0}^{degree} (-x^2/4)^k / (k!)^2`, i.e. `F(-x^2/4)`.
pub fn eval_bessel_j0(x: f64, degree: u64) -> Result<f64> {
    let xr = exact(x)?;
    let arg = -(&xr * &xr) / BigRational::from_integer(4.into());
    Ok(partial_sum(&arg, degree))
}

/// First positive zero of the degree-`degree` truncation of `J_0`, by a
/// coarse scan for a sign change followed by bisection to machine precision.
pub fn bessel_j0_first_zero(degree: u64) -> Result<f64> {
    let step = 0.125;
    let mut lo = 0.0;
    let mut f_lo = eval_bessel_j0(lo, degree)?;
    let mut hi = step;
    loop {
        let f_hi = eval_bessel_j0(hi, degree)?;
        if f_hi == 0.0 {
            return Ok(hi);
        }
        if f_lo.signum() != f_hi.signum() {
            break;
        }
        lo = hi;
        f_lo = f_hi;
        hi += step;
        if hi > 64.0 {
            return Err(Error::InvalidArgument(format!(
                "truncation of degree {degree} has no sign change below 64"
            )));
        }
    }
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = eval_bessel_j0(mid, degree)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    let (f_lo, f_hi) = (eval_bessel_j0(lo, degree)?, eval_bessel_j0(hi, degree)?);
    Ok(if f_lo.abs() <= f_hi.abs() { lo } else { hi })
}

/// Isolating intervals for the zeros of the truncated `F` in `(-a, 0)`.
///
/// The truncation is cleared of denominators and handed to the Sturm
/// isolator. Degree 2 gives `(1 + z/2)^2`, a double root, which is
/// rejected as not squarefree.
pub fn zeros_of_f_truncation(
    degree: u64,
    a: &BigRational,
) -> Result<Vec<(BigRational, BigRational)>> {
    if degree < 2 {
        return Err(Error::InvalidArgument(format!(
            "truncation degree must be >= 2, got {degree}"
        )));
    }
    if !a.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "interval half-width must be positive, got {a}"
        )));
    }
    let q: IntPolynomial = f_truncation(degree).clear_denominators();
    if !is_squarefree(&q) {
        return Err(Error::NotSquarefree);
    }
    isolate_real_roots(&q, &-a.clone(), &BigRational::zero())
}

/// [`zeros_of_f_truncation`] with every interval narrowed to at most `width`.
pub fn refined_zeros_of_f_truncation(
    degree: u64,
    a: &BigRational,
    width: &BigRational,
) -> Result<Vec<(BigRational, BigRational)>> {
    let q: IntPolynomial = f_truncation(degree).clear_denominators();
    zeros_of_f_truncation(degree, a)?
        .iter()
        .map(|iv| refine_interval(&q, iv, width))
        .collect()
}

/// Evaluates `f_{m,n}` exactly at `t` and rounds once.
pub fn eval_scaled_f(f: &RatPolynomial, t: f64) -> Result<f64> {
    Ok(ratio_to_f64(&f.eval(&exact(t)?)))
}

/// `samples` equispaced points covering `[-a, 0]`, endpoints included.
fn closed_grid(a: f64, samples: usize) -> Vec<f64> {
    match samples {
        0 => Vec::new(),
        1 => vec![-a],
        _ => (0..samples)
            .map(|i| -a + a * i as f64 / (samples - 1) as f64)
            .collect(),
    }
}

/// `max |f_{m,n}(t) - (F(t) - 1)|` over `samples` equispaced points of `[-a, 0]`.
///
/// `F` is truncated with [`truncation_order`], so the truncation error is
/// below `1e-12` on the whole interval. Points are evaluated in parallel;
/// the maximum is order-independent.
pub fn convergence_gap(m: u64, n: u64, a: f64, samples: usize) -> Result<f64> {
    if !(a.is_finite() && a > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "interval half-width must be positive, got {a}"
        )));
    }
    let f = scaled_f(m, n)?;
    let degree = truncation_order(a);
    let gaps = closed_grid(a, samples)
        .into_par_iter()
        .map(|t| -> Result<f64> {
            let lhs = eval_scaled_f(&f, t)?;
            let rhs = eval_f(t, degree)? - 1.0;
            Ok((lhs - rhs).abs())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(gaps.into_iter().fold(0.0, f64::max))
}

/// Whether `|f_{m,n}(t) + 1| < 1` at every point of an interior grid of
/// `(-a, 0)` with [`NEAR_UNIT_GRID`] points; the endpoints are excluded.
pub fn near_unit_magnitude_check(m: u64, n: u64, a: f64) -> Result<bool> {
    if !(a.is_finite() && a > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "interval half-width must be positive, got {a}"
        )));
    }
    let f = scaled_f(m, n)?;
    let values = (1..=NEAR_UNIT_GRID)
        .into_par_iter()
        .map(|i| eval_scaled_f(&f, -a * i as f64 / (NEAR_UNIT_GRID + 1) as f64))
        .collect::<Result<Vec<_>>>()?;
    Ok(values.into_iter().all(|v| (v + 1.0).abs() < 1.0))
}

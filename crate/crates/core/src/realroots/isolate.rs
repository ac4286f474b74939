//! Real root isolation by bisection on Sturm counts.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::sturm::{ExtendedRational, SturmChain};
use crate::poly::IntPolynomial;
use crate::{Error, Result};

/// `1 + max |a_i| / |a_lead|`: every complex root has modulus strictly below it.
pub fn cauchy_bound(p: &IntPolynomial) -> BigRational {
    let Some(lead) = p.leading() else {
        return BigRational::one();
    };
    let lead = lead.abs();
    let n = p.degree().unwrap();
    let max = p.coeffs()[..n]
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_else(BigInt::zero);
    BigRational::one() + BigRational::new(max, lead)
}

/// Open intervals, sorted ascending, each containing exactly one root of the
/// squarefree `q` that lies in `(lo, hi]`. No endpoint is a root of `q`
/// except possibly `hi` itself when `hi` is a root.
pub fn isolate_real_roots(
    q: &IntPolynomial,
    lo: &BigRational,
    hi: &BigRational,
) -> Result<Vec<(BigRational, BigRational)>> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if q.is_constant() {
        return Ok(Vec::new());
    }
    let chain = SturmChain::new(q)?;
    let mut stack = vec![(
        lo.clone(),
        hi.clone(),
        chain.count_roots(&lo.clone().into(), &hi.clone().into())?,
    )];
    let mut out = Vec::new();
    while let Some((a, b, count)) = stack.pop() {
        match count {
            0 => {}
            1 => out.push((a, b)),
            _ => {
                let mid = split_point(q, &a, &b);
                let left =
                    chain.count_roots(&a.clone().into(), &ExtendedRational::Finite(mid.clone()))?;
                stack.push((mid.clone(), b, count - left));
                stack.push((a, mid, left));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// A point strictly inside `(a, b)` where `q` does not vanish. Starts at the
/// midpoint and walks towards `a` by halving the offset; `q` has finitely
/// many roots, so this terminates.
fn split_point(q: &IntPolynomial, a: &BigRational, b: &BigRational) -> BigRational {
    let two = BigRational::from_integer(2.into());
    let mut width = (b - a) / &two;
    loop {
        let mid = a + &width;
        if q.sign_at(&mid) != 0 {
            return mid;
        }
        width /= &two;
    }
}

/// Isolating intervals for all real roots of a squarefree `q`, using the
/// Cauchy bound as the initial enclosure.
pub fn isolate_all_real_roots(q: &IntPolynomial) -> Result<Vec<(BigRational, BigRational)>> {
    let bound = cauchy_bound(q);
    isolate_real_roots(q, &-bound.clone(), &bound)
}

/// Shrinks an isolating interval of the squarefree `q` by bisection until
/// its width is at most `width`. `q` must change sign across `(a, b)`.
pub fn refine_interval(
    q: &IntPolynomial,
    interval: &(BigRational, BigRational),
    width: &BigRational,
) -> Result<(BigRational, BigRational)> {
    let (mut a, mut b) = interval.clone();
    let sa = q.sign_at(&a);
    if sa == 0 || sa * q.sign_at(&b) >= 0 {
        return Err(Error::InvalidArgument(format!(
            "no sign change of q across ({a}, {b})"
        )));
    }
    if !width.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "refinement width must be positive, got {width}"
        )));
    }
    let two = BigRational::from_integer(2.into());
    while &b - &a > *width {
        let mid = (&a + &b) / &two;
        match q.sign_at(&mid) {
            0 => {
                let half = width / &two;
                return Ok((&mid - &half, &mid + &half));
            }
            s if s == sa => a = mid,
            _ => b = mid,
        }
    }
    Ok((a, b))
}
